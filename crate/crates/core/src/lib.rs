//! Exact structural-controllability analysis for linear systems
//! `ẋ = Ax + Bu` whose entries are rational functions of independent
//! parameters.
//!
//! The crate provides exact arithmetic in `Q(z1..zq)(s)`, an expression
//! parser for matrix entries, fraction-free linear algebra, vector matroids
//! with unimodular-base enumeration, and the controllability checks built
//! on top of them (pencil rank test, Kalman rank test, disjoint-base
//! certificates, parallel composition).

pub mod checker;
pub mod cli;
pub mod combinations;
pub mod error;
pub mod gcd;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod matroid;
pub mod parser;
pub mod poly;
pub mod rational;
pub mod space;
pub mod zerotest;

pub use checker::{
    certificate_search, compose_parallel, composite_certificate_check, kalman_check, pbh_check,
    verify_certificate, Certificate, CertificateBlock, CertificateCheck, CertificateFailure,
    CheckOptions, Evidence, Method, RowPartition, Status, SystemDef, Verdict,
};
pub use error::{Error, Result};
pub use matrix::{build_pencil, SymMatrix};
pub use matroid::{Base, UnimodularBase, VectorMatroid};
pub use parser::{parse_expr, parse_str, ExprSource};
pub use poly::{Coeff, Polynomial};
pub use rational::RationalFunction;
pub use space::ParamSpace;
