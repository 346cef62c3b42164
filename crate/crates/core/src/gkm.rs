//! GKM graphs: the full flag graph on S_n with root labels, induced
//! subgraphs on Hessenberg fixed-point sets, cochain divisibility checks,
//! and exact kernel dimensions of the cochain space in each degree.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

use crate::betti;
use crate::error::{Error, Result};
use crate::hess::{guard, HessFn};
use crate::poly::{rank_int, rows_to_int, LinearForm, Monomial, MultiPoly};
use crate::rootsys::positive_roots;
use crate::symgroup::{self, Permutation};

/// Default cap on the polynomial degree for kernel computations
/// (cohomological degree 8).
pub const DEFAULT_DEGREE_CAP: usize = 4;

/// An edge between vertex indices u < v, labeled by the root direction
/// connecting the two fixed points (canonicalized up to sign).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GkmEdge {
    pub u: usize,
    pub v: usize,
    pub label: LinearForm,
}

/// A GKM graph: lexicographically sorted vertices and canonical edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmGraph {
    n: usize,
    vertices: Vec<Permutation>,
    edges: Vec<GkmEdge>,
}

impl GkmGraph {
    fn from_vertices(n: usize, mut vertices: Vec<Permutation>) -> Result<Self> {
        vertices.sort();
        vertices.dedup();
        let index: BTreeMap<&Permutation, usize> =
            vertices.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut edges = Vec::new();
        for (a, w) in vertices.iter().enumerate() {
            for r in positive_roots(n) {
                let neighbor = w.right_multiply_reflection(&r)?;
                if let Some(&b) = index.get(&neighbor) {
                    if a < b {
                        let label = w.act_on_root(&r)?.to_linear_form().canonical();
                        edges.push(GkmEdge { u: a, v: b, label });
                    }
                }
            }
        }
        edges.sort();
        Ok(GkmGraph { n, vertices, edges })
    }

    /// The GKM graph of the full flag variety: all of S_n, an edge for each
    /// reflection, labeled by the image of its root.
    pub fn flag(n: usize) -> Result<Self> {
        guard(n)?;
        Self::from_vertices(n, symgroup::enumerate(n)?.collect())
    }

    /// The induced subgraph on the fixed-point set of a Hessenberg variety.
    pub fn hessenberg(h: &HessFn) -> Result<Self> {
        Self::from_vertices(h.n(), betti::fixed_points(h)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn edges(&self) -> &[GkmEdge] {
        &self.edges
    }

    pub fn vertex_index(&self, w: &Permutation) -> Option<usize> {
        self.vertices.binary_search(w).ok()
    }

    /// DOT rendering: vertices first, then labeled undirected edges, all in
    /// canonical order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph gkm {\n");
        for w in &self.vertices {
            out.push_str(&format!("  \"{w}\";\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
                self.vertices[e.u], self.vertices[e.v], e.label
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| serde_json::json!({
                "u": self.vertices[e.u].to_string(),
                "v": self.vertices[e.v].to_string(),
                "label": [e.label.a, e.label.b],
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let bad = |reason: String| Error::Malformed { what: "gkm graph json", reason };
        let vertex_words = value["vertices"]
            .as_array()
            .ok_or_else(|| bad("missing vertices array".into()))?;
        let mut vertices = Vec::with_capacity(vertex_words.len());
        for vw in vertex_words {
            let s = vw.as_str().ok_or_else(|| bad("vertex is not a string".into()))?;
            vertices.push(s.parse::<Permutation>()?);
        }
        if vertices.is_empty() {
            return Err(bad("empty vertex list".into()));
        }
        let n = vertices[0].n();
        if vertices.iter().any(|w| w.n() != n) {
            return Err(bad("vertices of mixed sizes".into()));
        }
        let mut sorted = vertices.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != vertices.len() {
            return Err(bad("duplicate vertices".into()));
        }
        let index: BTreeMap<&Permutation, usize> =
            sorted.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut edges = Vec::new();
        for edge in value["edges"].as_array().ok_or_else(|| bad("missing edges array".into()))? {
            let u_word = edge["u"].as_str().ok_or_else(|| bad("edge endpoint missing".into()))?;
            let v_word = edge["v"].as_str().ok_or_else(|| bad("edge endpoint missing".into()))?;
            let u = *index
                .get(&u_word.parse::<Permutation>()?)
                .ok_or_else(|| bad(format!("edge endpoint {u_word:?} not a vertex")))?;
            let v = *index
                .get(&v_word.parse::<Permutation>()?)
                .ok_or_else(|| bad(format!("edge endpoint {v_word:?} not a vertex")))?;
            let label_arr = edge["label"]
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| bad("edge label is not a pair".into()))?;
            let a = label_arr[0].as_u64().ok_or_else(|| bad("label entry not an integer".into()))?;
            let b = label_arr[1].as_u64().ok_or_else(|| bad("label entry not an integer".into()))?;
            let label = LinearForm::new(a as usize, b as usize)?.canonical();
            let (u, v) = if u <= v { (u, v) } else { (v, u) };
            if u == v {
                return Err(bad("self-loop edge".into()));
            }
            edges.push(GkmEdge { u, v, label });
        }
        edges.sort();
        edges.dedup();
        Ok(GkmGraph { n, vertices: sorted, edges })
    }
}

/// An assignment of a polynomial in t_1..t_n to each vertex.
#[derive(Clone, Debug, Default)]
pub struct Cochain {
    assignment: BTreeMap<Permutation, MultiPoly>,
}

impl Cochain {
    pub fn new() -> Self {
        Cochain { assignment: BTreeMap::new() }
    }

    pub fn set(&mut self, w: Permutation, f: MultiPoly) {
        self.assignment.insert(w, f);
    }

    pub fn get(&self, w: &Permutation) -> Option<&MultiPoly> {
        self.assignment.get(w)
    }

    /// The zero cochain on a vertex set.
    pub fn zero(graph: &GkmGraph) -> Self {
        let mut c = Cochain::new();
        for w in graph.vertices() {
            c.set(w.clone(), MultiPoly::zero(graph.n()));
        }
        c
    }
}

/// Outcome of a divisibility check, with the first violating edge as
/// witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CochainCheck {
    Valid,
    Violation { u: Permutation, v: Permutation, label: LinearForm },
}

impl CochainCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CochainCheck::Valid)
    }
}

/// Verifies the GKM condition: along each edge with label t_a - t_b, the
/// difference of endpoint polynomials must vanish under t_a := t_b.
pub fn check_cochain(graph: &GkmGraph, cochain: &Cochain) -> Result<CochainCheck> {
    for w in graph.vertices() {
        if cochain.get(w).is_none() {
            return Err(Error::MissingAssignment { word: w.to_string() });
        }
    }
    for e in graph.edges() {
        let fu = cochain.get(&graph.vertices[e.u]).unwrap();
        let fv = cochain.get(&graph.vertices[e.v]).unwrap();
        let diff = fu - fv;
        if !diff.substitute_equal(e.label.a, e.label.b)?.is_zero() {
            return Ok(CochainCheck::Violation {
                u: graph.vertices[e.u].clone(),
                v: graph.vertices[e.v].clone(),
                label: e.label,
            });
        }
    }
    Ok(CochainCheck::Valid)
}

/// Degree-d monomials in `nvars` variables, lexicographic by exponent
/// vector.
fn degree_monomials(nvars: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(exps: &mut Vec<u32>, var: usize, left: usize, out: &mut Vec<Monomial>) {
        if var + 1 == exps.len() {
            exps[var] = left as u32;
            out.push(Monomial(exps.clone()));
            exps[var] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e as u32;
            rec(exps, var + 1, left - e, out);
        }
        exps[var] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(&mut exps, 0, d, &mut out);
    out
}

/// Coefficients of an edge label in the rank-(n-1) presentation where
/// t_n = -(t_1 + ... + t_{n-1}).
fn reduced_label_coeffs(n: usize, label: &LinearForm) -> Vec<i64> {
    let m = n - 1;
    let mut c = vec![0i64; m];
    for (var, sign) in [(label.a, 1i64), (label.b, -1i64)] {
        if var < n {
            c[var - 1] += sign;
        } else {
            for entry in c.iter_mut() {
                *entry -= sign;
            }
        }
    }
    c
}

/// Dimension over Q of the space of valid cochains that are homogeneous of
/// polynomial degree `degree` (cohomological degree 2*degree), with values
/// in the rank-(n-1) polynomial ring of the torus fixing the determinant.
/// Computed as unknowns minus the rank of the stacked substitution
/// constraints, by fraction-free elimination.
pub fn cochain_dimension(graph: &GkmGraph, degree: usize, cap: usize) -> Result<usize> {
    if degree > cap {
        return Err(Error::DegreeCap { degree, cap });
    }
    let n = graph.n();
    let m = n - 1;
    let basis = degree_monomials(m, degree);
    let per_vertex = basis.len();
    let unknowns = graph.vertices.len() * per_vertex;
    if per_vertex == 0 {
        return Ok(0);
    }

    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for e in graph.edges() {
        let coeffs = reduced_label_coeffs(n, &e.label);
        let pivot = coeffs
            .iter()
            .rposition(|&c| c != 0)
            .expect("edge label nonzero in reduced variables");
        // replacement for y_pivot: -(sum of other terms)/c_pivot
        let mut replacement = MultiPoly::zero(m);
        for (k, &c) in coeffs.iter().enumerate() {
            if k == pivot || c == 0 {
                continue;
            }
            let mut exps = vec![0u32; m];
            exps[k] = 1;
            replacement.add_term(
                Monomial(exps),
                -BigRational::new(BigInt::from(c), BigInt::from(coeffs[pivot])),
            );
        }
        // images of the degree-d basis under the substitution, expressed on
        // the pivot-free monomials
        let reduced_basis: Vec<Monomial> = basis
            .iter()
            .filter(|mono| mono.0[pivot] == 0)
            .cloned()
            .collect();
        let images: Vec<MultiPoly> = basis
            .iter()
            .map(|mono| {
                let p = MultiPoly::monomial(m, mono.0.clone(), BigRational::one())
                    .expect("basis monomial");
                p.substitute(pivot + 1, &replacement).expect("substitution")
            })
            .collect();
        for target in &reduced_basis {
            let mut row = vec![BigRational::zero(); unknowns];
            let mut nonzero = false;
            for (col, image) in images.iter().enumerate() {
                let c = image.coeff(target);
                if !c.is_zero() {
                    row[e.u * per_vertex + col] = c.clone();
                    row[e.v * per_vertex + col] = -c;
                    nonzero = true;
                }
            }
            if nonzero {
                rows.push(row);
            }
        }
    }

    let rank = rank_int(rows_to_int(&rows));
    Ok(unknowns - rank)
}
