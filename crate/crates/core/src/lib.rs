pub mod error;
pub mod galois;
pub mod linalg;
pub mod poly;
pub mod code;
pub mod distances;
pub mod superregular;
pub mod construct;
pub mod decoder;
pub mod fixtures;
