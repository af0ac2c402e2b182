//! Exact sparse elimination over integral domains and fields, and Smith
//! normal form over Euclidean integer types.
//!
//! Elimination is parameterised by an [`EliminationDomain`], an arithmetic
//! context. Contexts for any `num-traits` integer or field type are provided
//! ([`FractionFree`], [`FieldOf`]) alongside [`PrimeField`], whose modulus is
//! only known at run time.

use std::collections::HashMap;
use std::fmt::Debug;
use std::marker::PhantomData;

use num_integer::Integer;
use num_traits::{FromPrimitive, Num, Signed};

/// A sparse row: `(column, value)` pairs with strictly increasing columns
/// and no stored zeros.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Arithmetic needed by fraction-free row reduction.
pub trait EliminationDomain: Sync {
    type Elem: Clone + Debug + Send + Sync;

    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Rescales a nonzero row without changing its span over the fraction
    /// field. The default leaves it alone.
    fn normalize(&self, _row: &mut SparseRow<Self::Elem>) {}
}

/// Fraction-free elimination over an integer type: rows are combined as
/// `p·r - a·s` and then divided by their content, so no fractions appear.
/// Ranks are ranks over the field of fractions (ℚ for integers).
#[derive(Debug, Clone, Copy, Default)]
pub struct FractionFree<T>(PhantomData<T>);

impl<T> FractionFree<T> {
    pub fn new() -> Self {
        FractionFree(PhantomData)
    }
}

impl<T> EliminationDomain for FractionFree<T>
where
    T: Integer + Signed + Clone + Debug + FromPrimitive + Send + Sync,
{
    type Elem = T;

    fn from_i64(&self, v: i64) -> T {
        T::from_i64(v).expect("scalar type holds every i64")
    }

    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }

    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }

    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }

    fn normalize(&self, row: &mut SparseRow<T>) {
        let mut content = T::zero();
        for (_, v) in row.iter() {
            content = content.gcd(v);
            if content.is_one() {
                break;
            }
        }
        if row.first().is_some_and(|(_, v)| v.is_negative()) {
            content = -content;
        }
        if !content.is_one() && !content.is_zero() {
            for (_, v) in row.iter_mut() {
                *v = v.clone() / content.clone();
            }
        }
    }
}

/// Plain Gaussian elimination in a field type such as `BigRational`;
/// rows are scaled to a leading one.
#[derive(Debug, Clone, Copy, Default)]
pub struct FieldOf<T>(PhantomData<T>);

impl<T> FieldOf<T> {
    pub fn new() -> Self {
        FieldOf(PhantomData)
    }
}

impl<T> EliminationDomain for FieldOf<T>
where
    T: Num + Clone + Debug + FromPrimitive + Send + Sync,
{
    type Elem = T;

    fn from_i64(&self, v: i64) -> T {
        T::from_i64(v).expect("scalar type holds every i64")
    }

    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }

    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }

    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }

    fn normalize(&self, row: &mut SparseRow<T>) {
        let Some((_, lead)) = row.first() else {
            return;
        };
        if lead.is_one() {
            return;
        }
        let inv = T::one() / lead.clone();
        for (_, v) in row.iter_mut() {
            *v = v.clone() * inv.clone();
        }
    }
}

/// `GF(p)` with the modulus chosen at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `None` unless `p` is prime and below 2^32 (so products fit in u64).
    pub fn new(p: u64) -> Option<Self> {
        (is_prime(p) && p < (1 << 32)).then_some(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn inverse(&self, a: u64) -> u64 {
        // Fermat; a is nonzero mod p
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl EliminationDomain for PrimeField {
    type Elem = u64;

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn normalize(&self, row: &mut SparseRow<u64>) {
        let Some(&(_, lead)) = row.first() else {
            return;
        };
        if lead == 1 {
            return;
        }
        let inv = self.inverse(lead);
        for (_, v) in row.iter_mut() {
            *v = *v * inv % self.p;
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= p {
        if p % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// `p·target - a·pivot`, where `p` and `a` are the leading entries of
/// `pivot` and `target` and share a column; the result has that column
/// cleared.
fn eliminate<D: EliminationDomain>(
    dom: &D,
    target: &SparseRow<D::Elem>,
    pivot: &SparseRow<D::Elem>,
) -> SparseRow<D::Elem> {
    let p = &pivot[0].1;
    let a = &target[0].1;
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < target.len() || j < pivot.len() {
        let (col, val) = match (target.get(i), pivot.get(j)) {
            (Some((ct, vt)), Some((cp, _))) if ct < cp => {
                i += 1;
                (*ct, dom.mul(p, vt))
            }
            (Some((ct, _)), Some((cp, vp))) if cp < ct => {
                j += 1;
                (*cp, dom.sub(&dom.from_i64(0), &dom.mul(a, vp)))
            }
            (Some((ct, vt)), Some((_, vp))) => {
                i += 1;
                j += 1;
                (*ct, dom.sub(&dom.mul(p, vt), &dom.mul(a, vp)))
            }
            (Some((ct, vt)), None) => {
                i += 1;
                (*ct, dom.mul(p, vt))
            }
            (None, Some((cp, vp))) => {
                j += 1;
                (*cp, dom.sub(&dom.from_i64(0), &dom.mul(a, vp)))
            }
            (None, None) => unreachable!(),
        };
        if !dom.is_zero(&val) {
            out.push((col, val));
        }
    }
    out
}

/// Rank of the matrix whose rows are `rows`, by incremental reduction to
/// echelon form.
pub fn rank<D: EliminationDomain>(dom: &D, rows: Vec<SparseRow<D::Elem>>) -> usize {
    let mut pivots: HashMap<usize, SparseRow<D::Elem>> = HashMap::new();
    for mut row in rows {
        row.retain(|(_, v)| !dom.is_zero(v));
        dom.normalize(&mut row);
        while let Some(&(lead, _)) = row.first() {
            match pivots.get(&lead) {
                Some(p) => {
                    row = eliminate(dom, &row, p);
                    dom.normalize(&mut row);
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Converts an integer row into a domain row.
pub fn lift_row<D: EliminationDomain>(dom: &D, row: &[(usize, i64)]) -> SparseRow<D::Elem> {
    row.iter()
        .map(|(c, v)| (*c, dom.from_i64(*v)))
        .filter(|(_, v)| !dom.is_zero(v))
        .collect()
}

/// Diagonal data of a Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub rank: usize,
    /// Nonzero invariant factors `d_1 | d_2 | ... | d_rank`, all positive.
    pub invariant_factors: Vec<T>,
}

impl<T: Integer + Clone> SmithForm<T> {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<T> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

/// Smith normal form of an integer matrix given by sparse rows over
/// `ncols` columns.
///
/// Unit pivots are eliminated sparsely first (each contributes an
/// invariant factor 1); the remainder goes through dense reduction that
/// always pivots on the entry of least absolute value.
pub fn smith_normal_form<T>(rows: &[SparseRow<i64>], ncols: usize) -> SmithForm<T>
where
    T: Integer + Signed + Clone + From<i64>,
{
    let mut rows: Vec<HashMap<usize, T>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .filter(|(_, v)| *v != 0)
                .map(|(c, v)| (*c, T::from(*v)))
                .collect()
        })
        .collect();
    let mut units = 0usize;

    // Sparse phase: a ±1 entry at (r, c) clears column c by unimodular row
    // operations; row r and column c then split off as a 1x1 block.
    loop {
        let found = rows.iter().enumerate().find_map(|(ri, r)| {
            r.iter()
                .filter(|(_, v)| v.abs().is_one())
                .map(|(c, _)| *c)
                .min()
                .map(|c| (ri, c))
        });
        let Some((ri, c)) = found else { break };
        let pivot_row = rows.swap_remove(ri);
        let p = pivot_row[&c].clone();
        for r in rows.iter_mut() {
            let Some(a) = r.get(&c).cloned() else { continue };
            // r -= (a / p) * pivot_row, exact since p = ±1
            let q = a * p.clone();
            for (col, v) in pivot_row.iter() {
                let e = r.entry(*col).or_insert_with(T::zero);
                *e = e.clone() - q.clone() * v.clone();
            }
            r.retain(|_, v| !v.is_zero());
        }
        units += 1;
        rows.retain(|r| !r.is_empty());
    }

    // Dense phase on what is left.
    let mut cols: Vec<usize> = rows.iter().flat_map(|r| r.keys().copied()).collect();
    cols.sort_unstable();
    cols.dedup();
    debug_assert!(cols.iter().all(|&c| c < ncols));
    let index: HashMap<usize, usize> = cols.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    let mut dense: Vec<Vec<T>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![T::zero(); cols.len()];
            for (c, x) in r {
                v[index[c]] = x.clone();
            }
            v
        })
        .collect();
    let mut diag = dense_smith_diagonal(&mut dense);

    normalize_divisibility(&mut diag);
    let mut invariant_factors = vec![T::one(); units];
    invariant_factors.extend(diag);
    SmithForm {
        rank: invariant_factors.len(),
        invariant_factors,
    }
}

fn dense_smith_diagonal<T: Integer + Signed + Clone>(a: &mut [Vec<T>]) -> Vec<T> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        loop {
            // smallest nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                normalize_divisibility(&mut diag);
                return diag;
            };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                for j in t..n {
                    let v = a[t][j].clone();
                    a[i][j] = a[i][j].clone() - q.clone() * v;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for row in a.iter_mut().skip(t) {
                    let v = row[t].clone();
                    row[j] = row[j].clone() - q.clone() * v;
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                diag.push(p.abs());
                break;
            }
        }
    }
    diag
}

/// Rewrites a diagonal into invariant-factor form `d_1 | d_2 | ...` by
/// repeatedly replacing pairs with their gcd and lcm.
fn normalize_divisibility<T: Integer + Signed + Clone>(diag: &mut [T]) {
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    for d in diag.iter_mut() {
        *d = d.abs();
    }
}
