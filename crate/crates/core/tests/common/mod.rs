//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use structctl::combinations::combinations;
use structctl::io::SystemFile;
use structctl::poly::Monomial;
use structctl::{parse_str, Coeff, ParamSpace, Polynomial, RationalFunction, SymMatrix, SystemDef};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

pub fn fixture(name: &str) -> SystemDef {
    let path = fixture_path(name);
    SystemFile::load(&path)
        .unwrap()
        .to_system(&path.display().to_string())
        .unwrap()
}

pub fn q(n: i64, d: i64) -> Coeff {
    Coeff::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

pub fn rf(text: &str, space: &ParamSpace) -> RationalFunction {
    parse_str(text, space).unwrap()
}

pub fn matrix(space: &ParamSpace, rows: &[&[&str]]) -> SymMatrix {
    SymMatrix::from_rows(
        space,
        rows.iter()
            .map(|r| r.iter().map(|e| rf(e, space)).collect())
            .collect(),
    )
    .unwrap()
}

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_det(m: &SymMatrix) -> RationalFunction {
    assert!(m.is_square());
    let idx: Vec<usize> = (0..m.rows()).collect();
    cofactor(m, &idx, &idx)
}

fn cofactor(m: &SymMatrix, rows: &[usize], cols: &[usize]) -> RationalFunction {
    let space = m.space();
    if rows.is_empty() {
        return RationalFunction::one(space);
    }
    let r = rows[0];
    let mut total = RationalFunction::zero(space);
    for (j, &c) in cols.iter().enumerate() {
        let e = m.get(r, c);
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = e * &cofactor(m, &rows[1..], &rest);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Rank as the largest order of a nonzero minor, minors by cofactor expansion.
pub fn minor_rank(m: &SymMatrix) -> usize {
    for k in (1..=m.rows().min(m.cols())).rev() {
        for rows in combinations(m.rows(), k) {
            for cols in combinations(m.cols(), k) {
                if !cofactor_det(&m.submatrix(&rows, &cols)).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Column rank of a subset by brute-force minors.
pub fn column_subset_rank(m: &SymMatrix, cols: &[usize]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    minor_rank(&m.select_columns(cols))
}

/// Rank of a rational matrix by plain Gaussian elimination over Q.
pub fn rational_rank(mut m: Vec<Vec<Coeff>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Dense univariate polynomial over Q, lowest degree first, trimmed.
pub type Univariate = Vec<Coeff>;

fn trim(mut p: Univariate) -> Univariate {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Univariate remainder over Q.
pub fn uni_rem(a: &Univariate, b: &Univariate) -> Univariate {
    let b = trim(b.clone());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.clone());
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            let d = &f * c;
            r[i + shift] -= d;
        }
        r = trim(r);
    }
    r
}

/// Monic univariate gcd over Q by the Euclidean algorithm.
pub fn uni_gcd(a: &Univariate, b: &Univariate) -> Univariate {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lc) = a.last().cloned() {
        for c in a.iter_mut() {
            *c = &*c / &lc;
        }
    }
    a
}

/// Substitutes every parameter of `p` (leaving `s`) and returns the
/// univariate coefficients in `s`.
pub fn specialize_in_s(p: &Polynomial, values: &[Coeff]) -> Univariate {
    let space = p.space();
    let subs: Vec<(usize, Coeff)> = values.iter().cloned().enumerate().collect();
    let sp = p.substitute(&subs);
    let coeffs = sp.coefficients_in(space.s_index());
    trim(
        coeffs
            .iter()
            .map(|c| c.constant_value().expect("parameters substituted"))
            .collect(),
    )
}

/// Random sparse polynomial in the given space.
pub fn random_poly(rng: &mut impl Rng, space: &ParamSpace, max_terms: usize, max_exp: u32) -> Polynomial {
    let nvars = space.nvars();
    let terms = rng.gen_range(0..=max_terms);
    Polynomial::from_terms(
        space,
        (0..terms).map(|_| {
            let exps = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
            let c = q(rng.gen_range(-9..=9), rng.gen_range(1..=4));
            (Monomial::from_exponents(exps), c)
        }),
    )
}

pub fn random_nonzero_poly(rng: &mut impl Rng, space: &ParamSpace, max_terms: usize, max_exp: u32) -> Polynomial {
    loop {
        let p = random_poly(rng, space, max_terms.max(1), max_exp);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Entry drawn from {0, 1, −1, z_i, z_i·z_j}, zero with probability `zero_pct`%.
pub fn random_entry(rng: &mut impl Rng, space: &ParamSpace, zero_pct: u32) -> RationalFunction {
    let q_params = space.params().len();
    if rng.gen_range(0..100) < zero_pct {
        return RationalFunction::zero(space);
    }
    let p = match rng.gen_range(0..4) {
        0 => Polynomial::one(space),
        1 => -Polynomial::one(space),
        2 => Polynomial::var(space, rng.gen_range(0..q_params)),
        _ => {
            &Polynomial::var(space, rng.gen_range(0..q_params))
                * &Polynomial::var(space, rng.gen_range(0..q_params))
        }
    };
    RationalFunction::from(p)
}

pub fn random_matrix(rng: &mut impl Rng, space: &ParamSpace, rows: usize, cols: usize, zero_pct: u32) -> SymMatrix {
    let entries = (0..rows * cols).map(|_| random_entry(rng, space, zero_pct)).collect();
    SymMatrix::new(space, rows, cols, entries).unwrap()
}

/// Random symbolic matrix whose entries may also contain `s` and simple
/// denominators.
pub fn random_symbolic_matrix(rng: &mut impl Rng, space: &ParamSpace, n: usize) -> SymMatrix {
    let entries = (0..n * n)
        .map(|_| {
            let num = random_poly(rng, space, 3, 1);
            if rng.gen_bool(0.2) {
                let den = random_nonzero_poly(rng, space, 2, 1);
                RationalFunction::new(num, den).unwrap()
            } else {
                RationalFunction::from(num)
            }
        })
        .collect();
    SymMatrix::new(space, n, n, entries).unwrap()
}

/// Random system with `n ≤ 4`, `m ≤ 2` and sparse entries.
pub fn random_system(rng: &mut impl Rng, space: &ParamSpace, index: usize) -> SystemDef {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=2);
    let a = random_matrix(rng, space, n, n, 60);
    let b = random_matrix(rng, space, n, m, 50);
    SystemDef::new(format!("random{index}"), a, b).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn one() -> Coeff {
    Coeff::one()
}
