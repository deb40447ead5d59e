//! Exact rank, determinants and minors over `F(z)(s)`.
//!
//! Every routine first clears denominators row by row: row `i` is multiplied
//! by the lcm `d_i` of its entry denominators, giving a polynomial matrix.
//! Elimination then runs fraction-free (Bareiss) on that copy. Row scaling
//! preserves rank; a minor on rows `R` of the cleared matrix equals the
//! original minor times `∏_{i∈R} d_i`, and the `d_i` are recorded so exact
//! values can be recovered.
//!
//! Pivoting is deterministic: columns are processed left to right and the
//! pivot is the lowest-indexed remaining row with a nonzero entry.

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinations::combinations;
use crate::error::{Error, Result};
use crate::gcd::{gcd_in_s, lcm};
use crate::matrix::SymMatrix;
use crate::poly::{Coeff, Polynomial};
use crate::rational::RationalFunction;
use crate::zerotest::random_point;

/// A denominator-free copy of a [`SymMatrix`].
#[derive(Clone, Debug)]
pub struct ClearedMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    scales: Vec<Polynomial>,
    /// Per row, pieces of the entry denominators used to cancel scale
    /// factors from minors by exact division.
    pieces: Vec<Vec<Polynomial>>,
}

impl ClearedMatrix {
    pub fn new(m: &SymMatrix) -> Self {
        let mut entries = Vec::with_capacity(m.rows() * m.cols());
        let mut scales = Vec::with_capacity(m.rows());
        let mut pieces = Vec::with_capacity(m.rows());
        for r in 0..m.rows() {
            let row = m.row(r);
            let mut d = Polynomial::one(m.space());
            let mut row_pieces = Vec::new();
            for e in row {
                if !e.is_zero() && !e.denominator().is_one() {
                    d = lcm(&d, e.denominator());
                    for piece in split_monomial(e.denominator()) {
                        if !row_pieces.contains(&piece) {
                            row_pieces.push(piece);
                        }
                    }
                }
            }
            pieces.push(row_pieces);
            for e in row {
                let factor = d.div_exact(e.denominator()).expect("lcm is a multiple");
                entries.push(e.numerator() * &factor);
            }
            scales.push(d);
        }
        ClearedMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries,
            scales,
            pieces,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    /// Row multipliers `d_i` applied during clearing.
    pub fn scales(&self) -> &[Polynomial] {
        &self.scales
    }

    pub fn scales_are_s_free(&self) -> bool {
        self.scales.iter().all(Polynomial::is_s_free)
    }

    fn extract(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<Polynomial>> {
        rows.iter()
            .map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
            .collect()
    }

    /// Rank of the submatrix on the given columns (all rows).
    pub fn column_rank(&self, cols: &[usize]) -> usize {
        let rows: Vec<usize> = (0..self.rows).collect();
        bareiss_rank(self.extract(&rows, cols))
    }

    pub fn rank(&self) -> usize {
        let cols: Vec<usize> = (0..self.cols).collect();
        self.column_rank(&cols)
    }

    /// Determinant of the square submatrix on `rows × cols` of the cleared
    /// matrix (a polynomial).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        assert_eq!(rows.len(), cols.len(), "minor must be square");
        bareiss_det(self.extract(rows, cols))
    }

    /// Product of the row multipliers over `rows`.
    pub fn scale_product(&self, rows: &[usize]) -> Polynomial {
        rows.iter()
            .fold(Polynomial::one(&self.scales[0].space().clone()), |acc, &r| &acc * &self.scales[r])
    }

    /// Minor of the original matrix on `rows × cols`.
    pub fn original_minor(&self, rows: &[usize], cols: &[usize]) -> RationalFunction {
        let m = self.minor(rows, cols);
        if rows.is_empty() {
            return RationalFunction::from(m);
        }
        let mut num = m;
        let mut den = self.scale_product(rows);
        let mut tried: Vec<&Polynomial> = Vec::new();
        for piece in rows.iter().flat_map(|&r| &self.pieces[r]) {
            if tried.contains(&piece) {
                continue;
            }
            tried.push(piece);
            while let Some(d) = den.div_exact(piece) {
                match num.div_exact(piece) {
                    Some(n) => {
                        num = n;
                        den = d;
                    }
                    None => break,
                }
            }
        }
        RationalFunction::new(num, den).expect("row multipliers are nonzero")
    }
}

/// Splits `p` into its single-variable monomial factors (one entry per
/// variable that divides every term) and the remaining cofactor.
fn split_monomial(p: &Polynomial) -> Vec<Polynomial> {
    let space = p.space();
    let nvars = space.nvars();
    let mut min = vec![u32::MAX; nvars];
    for (m, _) in p.terms() {
        for (lo, &e) in min.iter_mut().zip(m.exponents()) {
            *lo = (*lo).min(e);
        }
    }
    let mut out = Vec::new();
    let mut rest = p.clone();
    for (v, &e) in min.iter().enumerate() {
        if e > 0 && e != u32::MAX {
            let x = Polynomial::var(space, v);
            rest = rest.div_exact(&x.pow(e)).expect("variable divides every term");
            out.push(x);
        }
    }
    if rest.as_constant().is_none() {
        out.push(rest.normalized());
    }
    out
}

/// Fraction-free echelon reduction; returns the rank.
fn bareiss_rank(mut m: Vec<Vec<Polynomial>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let space = m[0].first().map(|p| p.space().clone());
    let Some(space) = space else { return 0 };
    let mut prev = Polynomial::one(&space);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for i in rank + 1..rows {
            let factor = m[i][c].clone();
            for j in c + 1..cols {
                let lhs = &pivot * &m[i][j];
                let v = if factor.is_zero() {
                    lhs
                } else {
                    &lhs - &(&factor * &m[rank][j])
                };
                m[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][c] = Polynomial::zero(&space);
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Fraction-free determinant of a square polynomial matrix.
fn bareiss_det(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = m.len();
    if n == 0 {
        // the empty minor; callers always know the space from elsewhere
        panic!("determinant of an empty matrix has no space");
    }
    let space = m[0][0].space().clone();
    let mut prev = Polynomial::one(&space);
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Polynomial::zero(&space);
        };
        if p != k {
            m.swap(k, p);
            negate = !negate;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            let factor = m[i][k].clone();
            for j in k + 1..n {
                let lhs = &pivot * &m[i][j];
                let v = if factor.is_zero() {
                    lhs
                } else {
                    &lhs - &(&factor * &m[k][j])
                };
                m[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Polynomial::zero(&space);
        }
        prev = pivot;
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact rank over `F(z)(s)`.
pub fn rank(m: &SymMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    ClearedMatrix::new(m).rank()
}

/// Exact determinant.
pub fn det(m: &SymMatrix) -> Result<RationalFunction> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() == 0 {
        return Ok(RationalFunction::one(m.space()));
    }
    let cleared = ClearedMatrix::new(m);
    let idx: Vec<usize> = (0..m.rows()).collect();
    Ok(cleared.original_minor(&idx, &idx))
}

/// Gcd in `F(z)[s]` of all `k × k` minors, folded in lexicographic
/// (rows, then columns) order with an early exit once it is free of `s`.
///
/// Returns `1` when the minors have no common `s`-factor and the zero
/// polynomial exactly when every minor vanishes. Requires row denominators
/// free of `s` so that clearing does not introduce spurious `s`-factors.
pub fn minors_gcd_in_s(m: &SymMatrix, k: usize) -> Result<Polynomial> {
    if k > m.rows().min(m.cols()) {
        return Err(Error::Dimension(format!(
            "minor order {k} exceeds a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let space = m.space();
    if k == 0 {
        return Ok(Polynomial::one(space));
    }
    let cleared = ClearedMatrix::new(m);
    if !cleared.scales_are_s_free() {
        return Err(Error::Dimension(
            "minor gcd needs denominators free of the indeterminate".into(),
        ));
    }
    let mut g = Polynomial::zero(space);
    for rows in combinations(m.rows(), k) {
        for cols in combinations(m.cols(), k) {
            let minor = cleared.minor(&rows, &cols);
            if minor.is_zero() {
                continue;
            }
            g = gcd_in_s(&g, &minor);
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}

/// Rank of an exact rational matrix by Gaussian elimination.
pub fn numeric_rank(mut m: Vec<Vec<Coeff>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        for i in rank + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..cols {
                let d = &f * &m[rank][j];
                m[i][j] -= d;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank after substituting a full point; `Err(Pole)` if an entry is undefined there.
pub fn rank_at(m: &SymMatrix, point: &[Coeff]) -> Result<usize> {
    Ok(numeric_rank(m.evaluate(point)?))
}

/// Random-evaluation lower bound on the rank: the numeric rank at a random
/// integer point never exceeds the symbolic rank, so a full-rank sample
/// settles the question. Returns `None` when every sampled point hit a pole.
pub fn sampled_rank(m: &SymMatrix, seed: u64, attempts: u32) -> Option<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nvars = m.space().nvars();
    let mut best = None;
    for _ in 0..attempts {
        let point = random_point(&mut rng, nvars);
        if let Ok(r) = rank_at(m, &point) {
            best = Some(best.map_or(r, |b: usize| b.max(r)));
            if r == m.rows().min(m.cols()) {
                break;
            }
        }
    }
    best
}

/// Rank using the sampled lower bound first and exact elimination only when
/// sampling does not already certify full rank.
pub fn rank_with_sampling(m: &SymMatrix, seed: Option<u64>) -> usize {
    if let Some(seed) = seed {
        let full = m.rows().min(m.cols());
        if sampled_rank(m, seed, 3) == Some(full) {
            return full;
        }
    }
    rank(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::build_pencil;
    use crate::parser::parse_str;
    use crate::space::ParamSpace;

    fn parse_matrix(sp: &ParamSpace, rows: &[&[&str]]) -> SymMatrix {
        SymMatrix::from_rows(
            sp,
            rows.iter()
                .map(|r| r.iter().map(|e| parse_str(e, sp).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_rank_and_det() {
        let sp = ParamSpace::new(["z1"]).unwrap();
        let id = SymMatrix::identity(&sp, 3);
        assert_eq!(rank(&id), 3);
        assert!(det(&id).unwrap().is_one());
        assert!(matches!(
            det(&SymMatrix::zeros(&sp, 2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn rank_with_rational_entries() {
        let sp = ParamSpace::new(["z1", "z2"]).unwrap();
        // second row is (1/z1) times the first
        let m = parse_matrix(&sp, &[&["z1", "z2", "1"], &["1", "z2/z1", "1/z1"]]);
        assert_eq!(rank(&m), 1);
        let m = parse_matrix(&sp, &[&["z1", "z2"], &["1", "z2/z1 + 1"]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(det(&m).unwrap(), parse_str("z1", &sp).unwrap());
    }

    #[test]
    fn rank_skips_zero_columns() {
        let sp = ParamSpace::new(["z1"]).unwrap();
        let m = parse_matrix(&sp, &[&["0", "z1", "1"], &["0", "2*z1", "2"], &["0", "0", "z1"]]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn det_tracks_row_swaps() {
        let sp = ParamSpace::new(["z1"]).unwrap();
        let m = parse_matrix(&sp, &[&["0", "1"], &["1", "0"]]);
        assert_eq!(det(&m).unwrap(), RationalFunction::from_int(&sp, -1));
    }

    #[test]
    fn minor_gcd_of_scalar_pencil() {
        let sp = ParamSpace::new(["z1"]).unwrap();
        let a = SymMatrix::from_ints(&sp, &[&[0]]).unwrap();
        let b = SymMatrix::from_ints(&sp, &[&[1]]).unwrap();
        let p = build_pencil(&a, &b).unwrap();
        assert!(minors_gcd_in_s(&p, 1).unwrap().is_one());
    }

    #[test]
    fn minor_gcd_detects_repeated_mode() {
        let sp = ParamSpace::new(["z1"]).unwrap();
        let a = parse_matrix(&sp, &[&["z1", "0"], &["0", "z1"]]);
        let b = parse_matrix(&sp, &[&["1"], &["0"]]);
        let p = build_pencil(&a, &b).unwrap();
        let g = minors_gcd_in_s(&p, 2).unwrap();
        assert_eq!(g, parse_str("s - z1", &sp).unwrap().numerator().clone());
        let all_zero = SymMatrix::zeros(&sp, 2, 2);
        assert!(minors_gcd_in_s(&all_zero, 1).unwrap().is_zero());
        assert!(minors_gcd_in_s(&all_zero, 3).is_err());
    }

    #[test]
    fn numeric_rank_basics() {
        let q = |n: i64| Coeff::from_integer(n.into());
        assert_eq!(numeric_rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(numeric_rank(vec![vec![q(0), q(1)], vec![q(1), q(0)]]), 2);
    }

    #[test]
    fn sampling_never_overstates() {
        let sp = ParamSpace::new(["z1", "z2"]).unwrap();
        let m = parse_matrix(&sp, &[&["z1", "z2"], &["2*z1", "2*z2"]]);
        assert_eq!(sampled_rank(&m, 11, 4), Some(1));
        assert_eq!(rank_with_sampling(&m, Some(11)), 1);
        let m = parse_matrix(&sp, &[&["z1", "z2"], &["1", "z2"]]);
        assert_eq!(rank_with_sampling(&m, Some(11)), 2);
    }
}
