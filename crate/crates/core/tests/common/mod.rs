#![allow(dead_code)]

use facenum::{Face, SimplicialComplex};
use proptest::prelude::*;

/// Complexes on at most `n` vertices with at most `m` generating faces.
pub fn complex(n: u32, m: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(1u128..(1u128 << n), 1..=m)
        .prop_map(|gens| SimplicialComplex::from_facets(gens.into_iter().map(Face::from_bits)))
}

/// Pure complexes of dimension `k - 1` on at most `n` vertices.
pub fn pure_complex(n: u32, k: usize, m: usize) -> impl Strategy<Value = SimplicialComplex> {
    let all = facenum::face::k_subsets(Face::range(n), k);
    prop::sample::subsequence(all.clone(), 1..=m.min(all.len()))
        .prop_map(SimplicialComplex::from_facets)
}

/// Every face by brute force: all subsets of all facets, deduplicated.
pub fn brute_faces(c: &SimplicialComplex) -> Vec<Face> {
    let mut out: Vec<Face> = c.facets().iter().flat_map(|f| f.subsets()).collect();
    out.sort_by_key(|f| f.bits());
    out.dedup();
    out
}

/// `f_{-1}, ..., f_{dim}` by brute force.
pub fn brute_f(c: &SimplicialComplex) -> Vec<i64> {
    let mut f = vec![0i64; (c.dim() + 2).max(0) as usize];
    for g in brute_faces(c) {
        f[g.len()] += 1;
    }
    f
}

pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `h_j = Σ_i (-1)^{j-i} C(d-i, j-i) f_{i-1}`, straight from the definition.
pub fn brute_h(f: &[i64], d: usize) -> Vec<i64> {
    let binom = |n: i64, k: i64| -> i64 {
        if k < 0 || k > n {
            return 0;
        }
        (0..k).fold(1i64, |acc, t| acc * (n - t) / (t + 1))
    };
    (0..=d as i64)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                    sign * binom(d as i64 - i, j - i) * f.get(i as usize).copied().unwrap_or(0)
                })
                .sum()
        })
        .collect()
}

pub fn face(v: &[u32]) -> Face {
    Face::from_labels(v).unwrap()
}
