//! Golden checks against the published example data.

use strongmds::construct::construct_strongly_mds;
use strongmds::decoder::{FeedbackDecoder, ReceivedWord};
use strongmds::distances::{column_distance, column_distances, free_distance, griesmer_max_distance, griesmer_min_field, profile, Exactness};
use strongmds::error::Result;
use strongmds::fixtures;
use strongmds::galois::Field;
use strongmds::poly::{series_div, Poly};
use strongmds::superregular::{search_toeplitz, smallest_prime_superregular, SearchMode};

pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) -> Check {
    let (pass, detail) = f().unwrap_or_else(|e| (false, format!("error[{}]: {e}", e.code())));
    Check {
        name: name.into(),
        pass,
        detail,
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

pub fn run(budget: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let profiles: [(&str, &[usize]); 8] = [
        ("e4_1", &[3, 5, 6]),
        ("e4_2", &[3, 5, 7, 9]),
        ("e4_3", &[2, 3, 4, 5]),
        ("e4_4", &[5, 9, 10]),
        ("e4_5", &[5, 9, 13, 15]),
        ("e4_6", &[4, 7, 9]),
        ("e4_7", &[7, 13, 14]),
        ("e4_8", &[7, 13, 18, 21]),
    ];
    for (name, want) in profiles {
        out.push(check(format!("profile {name}"), || {
            let got = column_distances(&fixtures::code(name)?, want.len() - 1, budget)?;
            Ok((got == want, join(&got)))
        }));
    }
    for (name, t) in fixtures::superregular_matrices() {
        out.push(check(format!("superregular {name}"), || {
            Ok((t.is_superregular(), t.to_text()))
        }));
    }
    out.push(check("no 4x4 superregular over GF(4)", || {
        let found = search_toeplitz(4, &Field::gf4(), SearchMode::Exhaustive, budget)?;
        Ok((found.is_none(), "exhaustive".into()))
    }));
    out.push(check("smallest primes n=2..7", || {
        let ps = (2..=7)
            .map(|n| smallest_prime_superregular(n, 1000).map(|p| p as usize))
            .collect::<Result<Vec<_>>>()?;
        Ok((ps == [2, 5, 7, 11, 23, 43], join(&ps)))
    }));
    for (mat, n, delta, want) in [("gf8_5x5", 2, 2, 6), ("gf64_8x8", 3, 2, 5), ("gf16_6x6", 4, 1, 3)] {
        out.push(check(format!("construct ({n},{},{delta}) from {mat}", n - 1), || {
            let t = fixtures::superregular(mat)?;
            let f = t.field().clone();
            let tr = construct_strongly_mds(n, delta, &f, Some(t), budget)?;
            let (_, m) = strongmds::distances::lm_params(n, n - 1, delta)?;
            let d = column_distance(&tr.code, m)?;
            Ok((tr.certificates.all() && d == want, format!("d_c_M={d}")))
        }));
    }
    out.push(check("GF(8) expansion 1,b,b^3,b,1", || {
        let f = Field::gf8();
        let p = |e: &[i64]| Poly::new(e.iter().map(|&x| f.exp(x)).collect());
        let s = series_div(&p(&[0, 4, 5]), &p(&[0, 2, 5]), 5, &f)?;
        Ok((s.to_poly() == p(&[0, 1, 3, 1, 0]), s.to_poly().to_string()))
    }));
    out.push(check("feedback decoding of a corrupted word", || {
        let c = fixtures::code("mds1_gf8")?;
        let f = c.field().clone();
        let b = |e: i64| f.exp(e).value();
        let vhat = ReceivedWord::from_polys(
            &[Poly::from_values(&[0, b(1), 0, 0, b(5)]), Poly::from_values(&[0, 0, b(3), b(2)])],
            9,
        );
        let v1 = ReceivedWord::from_polys(
            &[
                Poly::from_values(&[1, b(1), 0, 0, b(5), b(2)]),
                Poly::from_values(&[1, 0, b(3), b(2), 0, b(2)]),
            ],
            9,
        );
        let rep = FeedbackDecoder::new(&c)?.decode(&vhat)?;
        Ok((rep.decoded == v1 && !rep.failed(), "decodes to v_1".into()))
    }));
    out.push(check("mdsdual d_c_3=8, d_c_4=9, not strongly MDS", || {
        let p = profile(&fixtures::code("mdsdual_gf16")?, 4, budget)?;
        Ok((p.values[3] == 8 && p.values[4] == 9 && !p.is_strongly_mds, join(&p.values)))
    }));
    out.push(check("dual of mdsdual has distance >= 4", || {
        let d = fixtures::code("mdsdual_gf16")?.dual()?;
        let fd = free_distance(&d, 6, budget)?;
        Ok((fd == (4, Exactness::LowerBound), format!("{fd:?}")))
    }));
    out.push(check("GF(11) code MDS, not strongly MDS", || {
        let p = profile(&fixtures::code("mds4_gf11")?, 5, budget)?;
        Ok((p.is_mds_confirmed && !p.is_strongly_mds, join(&p.values)))
    }));
    out.push(check("Griesmer (7,2,2) m=1", || {
        let cap = griesmer_max_distance(7, 2, 2, 1, 8, 1)?;
        let q = griesmer_min_field(7, 2, 2, 1, 13, 1)?;
        Ok((cap == 12 && q == 13, format!("q=8 caps d at {cap}; d=13 needs q={q}")))
    }));
    out
}
