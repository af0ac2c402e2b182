//! Isomorphism of abstract complexes by backtracking with invariant pruning.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::face::{Face, Vertex};

/// A vertex bijection carrying the facets of one complex onto the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Isomorphism {
    /// `(vertex of A, image in B)`, ascending in the first component.
    pub map: Vec<(Vertex, Vertex)>,
}

impl Isomorphism {
    pub fn image(&self, v: Vertex) -> Option<Vertex> {
        self.map.iter().find(|(a, _)| *a == v).map(|(_, b)| *b)
    }

    /// Checks that the map is a bijection sending facets onto facets.
    pub fn verify(&self, a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
        let dom: Face = self.map.iter().map(|p| p.0).collect();
        let cod: Face = self.map.iter().map(|p| p.1).collect();
        if dom != a.vertices() || cod != b.vertices() || self.map.len() != dom.len() {
            return false;
        }
        let lookup: HashMap<Vertex, Vertex> = self.map.iter().copied().collect();
        let mapped = a.relabel(|v| lookup[&v]);
        mapped == *b
    }
}

type Invariant = (usize, Vec<i64>);

fn vertex_invariants(c: &SimplicialComplex) -> BTreeMap<Vertex, Invariant> {
    c.vertices()
        .iter()
        .map(|v| {
            let single = Face::from_bits(1u128 << (v - 1));
            let degree = c.facets().iter().filter(|f| f.contains(v)).count();
            let lk = c.link(single).expect("vertex is a face");
            (v, (degree, lk.f_vector().0))
        })
        .collect()
}

fn neighbours(c: &SimplicialComplex) -> HashMap<Vertex, Face> {
    let mut nb: HashMap<Vertex, Face> = c.vertices().iter().map(|v| (v, Face::EMPTY)).collect();
    for e in c.edges() {
        let [x, y] = [e.min_vertex().unwrap(), e.max_vertex().unwrap()];
        nb.entry(x).and_modify(|f| *f = f.with(y));
        nb.entry(y).and_modify(|f| *f = f.with(x));
    }
    nb
}

struct Search<'a> {
    a: &'a SimplicialComplex,
    b_facets: HashSet<Face>,
    order: Vec<Vertex>,
    candidates: HashMap<Vertex, Vec<Vertex>>,
    nb_a: HashMap<Vertex, Face>,
    nb_b: HashMap<Vertex, Face>,
    assigned: HashMap<Vertex, Vertex>,
    used: Face,
}

impl Search<'_> {
    fn consistent(&self, x: Vertex, y: Vertex) -> bool {
        for (&ax, &by) in &self.assigned {
            if self.nb_a[&x].contains(ax) != self.nb_b[&y].contains(by) {
                return false;
            }
        }
        // every facet of A through x that is now fully assigned must map
        // onto a facet of B
        for f in self.a.facets().iter().filter(|f| f.contains(x)) {
            if f.iter().all(|v| v == x || self.assigned.contains_key(&v)) {
                let img: Face = f
                    .iter()
                    .map(|v| if v == x { y } else { self.assigned[&v] })
                    .collect();
                if !self.b_facets.contains(&img) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let cands = self.candidates[&x].clone();
        for y in cands {
            if self.used.contains(y) || !self.consistent(x, y) {
                continue;
            }
            self.assigned.insert(x, y);
            self.used = self.used.with(y);
            if self.run(depth + 1) {
                return true;
            }
            self.assigned.remove(&x);
            self.used = self.used.without(y);
        }
        false
    }
}

/// Searches for a facet-preserving vertex bijection `A -> B`.
pub fn find_isomorphism(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<Isomorphism> {
    if a.num_vertices() != b.num_vertices()
        || a.facets().len() != b.facets().len()
        || a.f_vector() != b.f_vector()
    {
        return None;
    }
    if a.is_void() || a.num_vertices() == 0 {
        return (a == b).then(|| Isomorphism { map: Vec::new() });
    }
    let inv_a = vertex_invariants(a);
    let inv_b = vertex_invariants(b);
    let mut multiset_a: Vec<&Invariant> = inv_a.values().collect();
    let mut multiset_b: Vec<&Invariant> = inv_b.values().collect();
    multiset_a.sort();
    multiset_b.sort();
    if multiset_a != multiset_b {
        return None;
    }
    let candidates: HashMap<Vertex, Vec<Vertex>> = inv_a
        .iter()
        .map(|(&x, ia)| {
            let ys = inv_b
                .iter()
                .filter(|(_, ib)| *ib == ia)
                .map(|(&y, _)| y)
                .collect();
            (x, ys)
        })
        .collect();
    let nb_a = neighbours(a);
    let nb_b = neighbours(b);

    // Most constrained vertex first, then grow along edges so adjacency
    // checks bite early.
    let mut order: Vec<Vertex> = Vec::new();
    let mut placed = Face::EMPTY;
    while order.len() < a.num_vertices() {
        let next = a
            .vertices()
            .difference(placed)
            .iter()
            .min_by_key(|v| {
                let linked = nb_a[v].intersection(placed).len();
                (std::cmp::Reverse(linked), candidates[v].len(), *v)
            })
            .expect("unplaced vertex remains");
        order.push(next);
        placed = placed.with(next);
    }

    let mut search = Search {
        a,
        b_facets: b.facets().iter().copied().collect(),
        order,
        candidates,
        nb_a,
        nb_b,
        assigned: HashMap::new(),
        used: Face::EMPTY,
    };
    if !search.run(0) {
        return None;
    }
    let mut map: Vec<(Vertex, Vertex)> = search.assigned.into_iter().collect();
    map.sort();
    let iso = Isomorphism { map };
    debug_assert!(iso.verify(a, b));
    Some(iso)
}

pub fn is_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    find_isomorphism(a, b).is_some()
}
