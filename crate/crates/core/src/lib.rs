//! p-Riordan graphs over Z_p and three lossless encodings of them:
//! p-Riordan words (any prime p), permutations avoiding 123 and 132 with two
//! fixed points (p = 2), and balanced ternary words (p = 3).

pub mod balanced;
pub mod error;
pub mod graph;
pub mod perm;
pub mod series;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use graph::{
    adjacency, classify, count_graphs, enumerate_graphs, graphs_equal, AdjMatrix, GraphClass,
    GraphEnumerator,
};
pub use series::{
    canonicalize, derivative, parse_poly, product_coeff, CanonicalPair, CoeffSeq, Modulus,
};
