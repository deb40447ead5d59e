//! Vector matroids over `F(z)(s)`: column independence, bases, unions, and
//! unimodular bases (bases whose square submatrix has a determinant that is
//! a unit of `F(z)[s]`, i.e. nonzero and free of `s`).

use std::collections::HashMap;
use std::sync::RwLock;

use crate::combinations::combinations;
use crate::error::{Error, Result};
use crate::linalg::ClearedMatrix;
use crate::matrix::SymMatrix;
use crate::rational::RationalFunction;

/// Default cap on the number of bases enumerated per matroid.
pub const DEFAULT_BASE_CAP: usize = 10_000;

/// Largest subset handled by [`union_rank_formula`].
pub const UNION_FORMULA_LIMIT: usize = 20;

pub struct VectorMatroid {
    matrix: SymMatrix,
    cleared: ClearedMatrix,
    cache: RwLock<HashMap<u64, usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Base {
    cols: Vec<usize>,
    labels: Vec<String>,
}

impl Base {
    pub fn columns(&self) -> &[usize] {
        &self.cols
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct UnimodularBase {
    pub base: Base,
    /// Determinant of the selected columns of the original matrix.
    pub witness: RationalFunction,
}

/// Result of a capped enumeration.
#[derive(Clone, Debug)]
pub struct Enumeration<T> {
    pub items: Vec<T>,
    pub truncated: bool,
}

impl VectorMatroid {
    pub fn new(matrix: SymMatrix) -> Result<Self> {
        if matrix.cols() > 64 {
            return Err(Error::LimitExceeded(format!(
                "{} columns; vector matroids support at most 64",
                matrix.cols()
            )));
        }
        let cleared = ClearedMatrix::new(&matrix);
        Ok(VectorMatroid {
            matrix,
            cleared,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn ground(&self) -> &[String] {
        self.matrix.labels()
    }

    pub fn ground_size(&self) -> usize {
        self.matrix.cols()
    }

    /// Column indices of the given labels, sorted and deduplicated.
    pub fn resolve<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut cols = labels
            .iter()
            .map(|l| self.matrix.label_index(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        cols.sort_unstable();
        cols.dedup();
        Ok(cols)
    }

    pub fn base_from_columns(&self, cols: Vec<usize>) -> Base {
        let labels = cols.iter().map(|&c| self.ground()[c].clone()).collect();
        Base { cols, labels }
    }

    fn check_cols(&self, cols: &[usize]) -> Result<()> {
        match cols.iter().find(|&&c| c >= self.ground_size()) {
            Some(c) => Err(Error::UnknownLabel(format!("column index {c}"))),
            None => Ok(()),
        }
    }

    fn mask(cols: &[usize]) -> u64 {
        cols.iter().fold(0u64, |m, &c| m | (1 << c))
    }

    /// Rank of the columns in `cols` (duplicates ignored).
    pub fn rank_of(&self, cols: &[usize]) -> Result<usize> {
        self.check_cols(cols)?;
        let key = Self::mask(cols);
        if let Some(&r) = self.cache.read().expect("rank cache poisoned").get(&key) {
            return Ok(r);
        }
        let idx: Vec<usize> = (0..self.ground_size()).filter(|c| key >> c & 1 == 1).collect();
        let r = if idx.is_empty() || self.matrix.rows() == 0 {
            0
        } else {
            self.cleared.column_rank(&idx)
        };
        self.cache.write().expect("rank cache poisoned").insert(key, r);
        Ok(r)
    }

    pub fn rank_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize> {
        let cols = self.resolve(labels)?;
        self.rank_of(&cols)
    }

    pub fn is_independent(&self, cols: &[usize]) -> Result<bool> {
        let mut c = cols.to_vec();
        c.sort_unstable();
        c.dedup();
        Ok(self.rank_of(&c)? == c.len())
    }

    pub fn is_independent_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<bool> {
        let cols = self.resolve(labels)?;
        self.is_independent(&cols)
    }

    /// Rank of the whole ground set.
    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (0..self.ground_size()).collect();
        self.rank_of(&all).expect("ground columns are valid")
    }

    /// All bases in lexicographic column order, at most `cap` of them.
    pub fn enumerate_bases(&self, cap: usize) -> Enumeration<Base> {
        assert!(cap >= 1, "base cap must be positive");
        let r = self.rank();
        let mut items = Vec::new();
        let mut truncated = false;
        for cols in combinations(self.ground_size(), r) {
            if self.is_independent(&cols).expect("valid columns") {
                if items.len() == cap {
                    truncated = true;
                    break;
                }
                items.push(self.base_from_columns(cols));
            }
        }
        Enumeration { items, truncated }
    }

    /// Determinant of the square submatrix on `cols` when it is a unit of
    /// `F(z)[s]`; `None` otherwise. Requires `cols.len() == rows`.
    pub fn unimodular_witness(&self, cols: &[usize]) -> Option<RationalFunction> {
        if cols.len() != self.matrix.rows() || cols.is_empty() {
            return None;
        }
        let rows: Vec<usize> = (0..self.matrix.rows()).collect();
        let minor = self.cleared.minor(&rows, cols);
        if minor.is_zero() {
            return None;
        }
        if self.cleared.scales_are_s_free() && !minor.is_s_free() {
            return None;
        }
        let witness = self.cleared.original_minor(&rows, cols);
        witness.is_unit_in_s().then_some(witness)
    }

    /// Every unimodular base in lexicographic order. `cap` bounds the number
    /// of bases examined; `truncated` reports whether the cap was hit.
    pub fn enumerate_unimodular_bases(&self, cap: usize) -> Result<Enumeration<UnimodularBase>> {
        assert!(cap >= 1, "base cap must be positive");
        let rows = self.matrix.rows();
        let rank = self.rank();
        if rank != rows {
            return Err(Error::RankDeficientBlock { rows, rank });
        }
        let mut items = Vec::new();
        let mut seen = 0usize;
        let mut truncated = false;
        let all_rows: Vec<usize> = (0..rows).collect();
        for cols in combinations(self.ground_size(), rows) {
            let minor = self.cleared.minor(&all_rows, &cols);
            if minor.is_zero() {
                continue;
            }
            if seen == cap {
                truncated = true;
                break;
            }
            seen += 1;
            if let Some(witness) = self.unimodular_witness(&cols) {
                items.push(UnimodularBase {
                    base: self.base_from_columns(cols),
                    witness,
                });
            }
        }
        Ok(Enumeration { items, truncated })
    }
}

fn check_common_ground(matroids: &[&VectorMatroid]) -> Result<()> {
    let Some(first) = matroids.first() else {
        return Err(Error::GroundMismatch);
    };
    if matroids.iter().any(|m| m.ground() != first.ground()) {
        return Err(Error::GroundMismatch);
    }
    Ok(())
}

/// Rank of `X` in the union matroid: `min_{Y ⊆ X} Σ r_i(Y) + |X − Y|`,
/// evaluated over all `2^|X|` subsets.
pub fn union_rank_formula(matroids: &[&VectorMatroid], x: &[usize]) -> Result<usize> {
    check_common_ground(matroids)?;
    let mut x = x.to_vec();
    x.sort_unstable();
    x.dedup();
    if x.len() > UNION_FORMULA_LIMIT {
        return Err(Error::LimitExceeded(format!(
            "union rank over {} elements (limit {UNION_FORMULA_LIMIT})",
            x.len()
        )));
    }
    let mut best = usize::MAX;
    for mask in 0u32..(1u32 << x.len()) {
        let y: Vec<usize> = x
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        let mut total = x.len() - y.len();
        for m in matroids {
            total += m.rank_of(&y)?;
        }
        best = best.min(total);
    }
    Ok(best)
}

/// Which bases a disjoint-family search draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseKind {
    All,
    Unimodular,
}

#[derive(Clone, Debug)]
pub struct DisjointFamily {
    /// One base per matroid, pairwise disjoint, or `None` if none was found.
    pub family: Option<Vec<UnimodularOrPlain>>,
    /// Some candidate list was cut short by the cap, so "not found" is not
    /// conclusive.
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum UnimodularOrPlain {
    Plain(Base),
    Unimodular(UnimodularBase),
}

impl UnimodularOrPlain {
    pub fn base(&self) -> &Base {
        match self {
            UnimodularOrPlain::Plain(b) => b,
            UnimodularOrPlain::Unimodular(u) => &u.base,
        }
    }
}

/// Backtracking search for one candidate per list, pairwise disjoint.
/// Lists are processed in order and candidates in their given order; the
/// first family found is returned as indices into the lists.
pub fn find_disjoint(candidates: &[Vec<Vec<usize>>]) -> Option<Vec<usize>> {
    fn go(candidates: &[Vec<Vec<usize>>], used: u64, chosen: &mut Vec<usize>) -> bool {
        let depth = chosen.len();
        if depth == candidates.len() {
            return true;
        }
        for (i, cols) in candidates[depth].iter().enumerate() {
            let mask = cols.iter().fold(0u64, |m, &c| m | (1 << c));
            if mask & used != 0 {
                continue;
            }
            chosen.push(i);
            if go(candidates, used | mask, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(candidates.len());
    go(candidates, 0, &mut chosen).then_some(chosen)
}

/// Pairwise-disjoint bases `B_i` of the given matroids with
/// `|B_i| = sizes[i]`, found by lexicographic first-found backtracking.
pub fn max_union_of_bases(
    matroids: &[&VectorMatroid],
    sizes: &[usize],
    kind: BaseKind,
    cap: usize,
) -> Result<DisjointFamily> {
    check_common_ground(matroids)?;
    if sizes.len() != matroids.len() {
        return Err(Error::Dimension(format!(
            "{} sizes for {} matroids",
            sizes.len(),
            matroids.len()
        )));
    }
    let mut truncated = false;
    let mut pools: Vec<Vec<UnimodularOrPlain>> = Vec::with_capacity(matroids.len());
    for (m, &size) in matroids.iter().zip(sizes) {
        if m.rank() != size {
            return Ok(DisjointFamily {
                family: None,
                truncated: false,
            });
        }
        let pool: Vec<UnimodularOrPlain> = match kind {
            BaseKind::All => {
                let e = m.enumerate_bases(cap);
                truncated |= e.truncated;
                e.items.into_iter().map(UnimodularOrPlain::Plain).collect()
            }
            BaseKind::Unimodular => {
                let e = m.enumerate_unimodular_bases(cap)?;
                truncated |= e.truncated;
                e.items.into_iter().map(UnimodularOrPlain::Unimodular).collect()
            }
        };
        pools.push(pool);
    }
    let cols: Vec<Vec<Vec<usize>>> = pools
        .iter()
        .map(|p| p.iter().map(|b| b.base().columns().to_vec()).collect())
        .collect();
    let family = find_disjoint(&cols).map(|idx| {
        idx.into_iter()
            .zip(pools.iter())
            .map(|(i, pool)| pool[i].clone())
            .collect()
    });
    Ok(DisjointFamily { family, truncated })
}

/// Largest `|B_1 ∪ … ∪ B_k|` over all choices of bases, with a maximizing
/// family. Exhaustive; meant for small ground sets.
pub fn best_base_union(matroids: &[&VectorMatroid], cap: usize) -> Result<(usize, Vec<Base>)> {
    check_common_ground(matroids)?;
    let pools: Vec<Vec<Base>> = matroids.iter().map(|m| m.enumerate_bases(cap).items).collect();
    let mut best = (0usize, Vec::new());
    let mut idx = vec![0usize; pools.len()];
    if pools.iter().any(Vec::is_empty) {
        return Ok(best);
    }
    loop {
        let mask = idx
            .iter()
            .zip(&pools)
            .fold(0u64, |m, (&i, p)| m | VectorMatroid::mask(p[i].columns()));
        let size = mask.count_ones() as usize;
        if size > best.0 || best.1.is_empty() {
            best = (size, idx.iter().zip(&pools).map(|(&i, p)| p[i].clone()).collect());
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(best);
            }
            idx[k] += 1;
            if idx[k] < pools[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}
