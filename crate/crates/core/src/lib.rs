pub mod cache;
pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod rook;
pub mod symfunc;
