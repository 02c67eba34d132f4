use proptest::prelude::*;

use strongmds::decoder::{make_error_pattern, FeedbackDecoder, ReceivedWord};
use strongmds::fixtures;
use strongmds::galois::{Elem, Field};
use strongmds::poly::{series_div, Poly};
use strongmds::superregular::{check_equivalences, Toeplitz};

fn fields() -> Vec<Field> {
    vec![Field::gf4(), Field::gf8(), Field::gf16(), Field::gf32(), Field::gf64(), Field::prime(11).unwrap()]
}

proptest! {
    #[test]
    fn field_axioms(fi in 0usize..6, a in 0u32..64, b in 0u32..64, c in 0u32..64) {
        let f = &fields()[fi];
        let q = f.order();
        let (a, b, c) = (Elem(a % q), Elem(b % q), Elem(c % q));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(f.sub(a, b), b), a);
        if !b.is_zero() {
            prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        }
    }

    #[test]
    fn series_division_inverts_multiplication(
        fi in 0usize..6,
        num in prop::collection::vec(0u32..64, 1..6),
        den in prop::collection::vec(0u32..64, 1..5),
    ) {
        let f = &fields()[fi];
        let q = f.order();
        let num = Poly::new(num.into_iter().map(|v| Elem(v % q)).collect());
        let mut den: Vec<Elem> = den.into_iter().map(|v| Elem(v % q)).collect();
        den[0] = Elem::ONE;
        let den = Poly::new(den);
        let s = series_div(&num, &den, 8, f).unwrap();
        let back = s.to_poly().mul(&den, f).truncate(8);
        prop_assert_eq!(back, num.truncate(8));
    }

    #[test]
    fn equivalences_agree_on_gf5(col in prop::collection::vec(0u32..5, 1..5)) {
        let t = Toeplitz::from_values(Field::prime(5).unwrap(), &col).unwrap();
        let r = check_equivalences(&t, 1 << 22).unwrap();
        prop_assert!(r.all_agree(), "{:?}", r);
    }

    #[test]
    fn shortcut_answers_match_the_solver(fixture in 0usize..5, seed in any::<u64>()) {
        let c = fixtures::code(fixtures::DECODER_CODES[fixture]).unwrap();
        let d = FeedbackDecoder::new(&c).unwrap();
        let p = make_error_pattern(c.field(), d.m() + 1, c.n(), d.m(), d.t(), seed, false).unwrap();
        let s = d.window_syndrome(&p.word, 0).unwrap();
        let eta0 = d.solve_eta0(&s).unwrap();
        prop_assert_eq!(&eta0, &p.word.symbols[0]);
        if let Some(short) = d.shortcut_eta0(&s) {
            prop_assert_eq!(short, eta0);
        }
    }

    #[test]
    fn encoded_words_have_zero_syndrome(fixture in 0usize..17, msg in prop::collection::vec(0u32..64, 1..5)) {
        let (name, _) = fixtures::CODES[fixture];
        let c = fixtures::code(name).unwrap();
        prop_assume!(c.has_par());
        let q = c.field().order();
        let u: Vec<Poly> = (0..c.k())
            .map(|i| Poly::new(msg.iter().map(|v| Elem((v + i as u32) % q)).collect()))
            .collect();
        let v = c.encode(&u).unwrap();
        prop_assert!(c.syndrome(&v).unwrap().iter().all(Poly::is_zero));
    }

    #[test]
    fn received_word_text_round_trip(vals in prop::collection::vec(0u32..8, 2..20)) {
        let f = Field::gf8();
        let n = 2;
        let symbols: Vec<Vec<Elem>> = vals.chunks_exact(n).map(|c| c.iter().map(|&v| Elem(v)).collect()).collect();
        prop_assume!(!symbols.is_empty());
        let w = ReceivedWord { symbols };
        prop_assert_eq!(ReceivedWord::parse(&w.to_text(), &f, n).unwrap(), w);
    }
}
