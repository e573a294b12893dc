//! Binary quadratic operads `T(E)/(R)` computed arity by arity, and their
//! Koszul duals.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::exact::linalg::solve;
use crate::exact::scalar::q;
use crate::exact::{all_perms, Echelon, Lin, Perm, Q};
use crate::tree::free::GenInfo;
use crate::tree::{FreeOperad, Gen, SMod, Tree};

use super::{transpositions, Operad};

#[derive(Debug, Error, PartialEq)]
pub enum PresentError {
    #[error("relations are not stable under the symmetric group")]
    NotStable,
    #[error("relation is not a weight-2 element of arity 3")]
    NotQuadratic,
    #[error("generators must sit in arity 2")]
    NotBinary,
}

#[derive(Clone, Debug)]
pub struct QuadraticData {
    pub gens: SMod,
    pub relations: Vec<Lin<Tree<Gen>>>,
}

impl QuadraticData {
    pub fn free(&self, weight_cap: usize) -> FreeOperad {
        FreeOperad::new(self.gens.clone(), weight_cap)
    }
}

/// Normal forms are the non-pivot trees of the row-reduced ideal, so each
/// class is represented by its smallest trees.
#[derive(Clone, Debug)]
pub struct PresentedOperad {
    pub name: String,
    pub data: QuadraticData,
    pub free: FreeOperad,
    pub cap: usize,
    ideals: Vec<Echelon<Tree<Gen>>>,
    bases: Vec<Vec<Tree<Gen>>>,
}

impl PresentedOperad {
    pub fn new(name: &str, data: QuadraticData, cap: usize) -> Result<PresentedOperad, PresentError> {
        if data.gens.gens.keys().any(|&n| n != 2) {
            return Err(PresentError::NotBinary);
        }
        let free = data.free(cap.saturating_sub(1).max(1));
        for r in &data.relations {
            if r.keys().any(|t| t.arity() != 3 || t.weight() != 2) {
                return Err(PresentError::NotQuadratic);
            }
        }
        let mut r3 = Echelon::new();
        for r in &data.relations {
            r3.insert(r);
        }
        for r in &data.relations {
            for s in transpositions(3) {
                if !r3.contains(&r.map(|t| free.act(t, &s))) {
                    return Err(PresentError::NotStable);
                }
            }
        }
        let mut ideals: Vec<Echelon<Tree<Gen>>> = vec![Echelon::new(); cap + 1];
        if cap >= 3 {
            ideals[3] = r3;
        }
        for n in 4..=cap {
            let mut e = Echelon::new();
            let mut fresh = Vec::new();
            let prev: Vec<Lin<Tree<Gen>>> = rows(&ideals[n - 1]);
            let gens = data.gens.basis(2);
            for x in &prev {
                for g in &gens {
                    let lg = Lin::basis(free.corolla(*g));
                    for i in 0..n - 1 {
                        fresh.push(super::compose_lin(&free, x, i, &lg));
                    }
                    for j in 0..2 {
                        fresh.push(super::compose_lin(&free, &lg, j, x));
                    }
                }
            }
            let ts = transpositions(n);
            while let Some(v) = fresh.pop() {
                if e.insert(&v) {
                    for s in &ts {
                        fresh.push(v.map(|t| free.act(t, s)));
                    }
                }
            }
            ideals[n] = e;
        }
        for e in ideals.iter_mut() {
            e.interreduce();
        }
        let bases = (0..=cap)
            .map(|n| {
                if n == 0 {
                    return vec![];
                }
                free.basis(n).into_iter().filter(|t| t.weight() == n - 1 && !ideals[n].is_pivot(t)).collect()
            })
            .collect();
        Ok(PresentedOperad { name: name.to_string(), data, free, cap, ideals, bases })
    }

    /// The normal form of a tree polynomial.
    pub fn reduce(&self, v: &Lin<Tree<Gen>>) -> Lin<Tree<Gen>> {
        match v.keys().next() {
            None => Lin::zero(),
            Some(t) => {
                let n = t.arity();
                if n > self.cap {
                    return Lin::zero();
                }
                self.ideals[n].reduce(v)
            }
        }
    }

    pub fn ideal_dim(&self, n: usize) -> usize {
        self.ideals[n].rank()
    }

    pub fn generator(&self, label: &str) -> Tree<Gen> {
        self.free.corolla(self.data.gens.find(label).expect("known generator"))
    }

    /// The quadratic relations seen in arity 3 of the free operad.
    pub fn relation_space(&self) -> Vec<Lin<Tree<Gen>>> {
        rows(&self.ideals[3])
    }
}

fn rows(e: &Echelon<Tree<Gen>>) -> Vec<Lin<Tree<Gen>>> {
    // the stored rows are recovered by reducing each pivot against the others
    e.pivots()
        .map(|p| {
            let v = Lin::basis(p.clone());
            let r = e.reduce(&v);
            // v − r lies in the span and has leading key p
            v - r
        })
        .collect()
}

impl Operad for PresentedOperad {
    type E = Tree<Gen>;
    fn name(&self) -> String {
        self.name.clone()
    }
    fn arity(&self, e: &Tree<Gen>) -> usize {
        e.arity()
    }
    fn degree(&self, e: &Tree<Gen>) -> i64 {
        self.free.tree_degree(e)
    }
    fn unit(&self) -> Lin<Tree<Gen>> {
        Lin::basis(Tree::Leaf(0))
    }
    fn compose(&self, a: &Tree<Gen>, i: usize, b: &Tree<Gen>) -> Lin<Tree<Gen>> {
        if a.arity() + b.arity() - 1 > self.cap {
            return Lin::zero();
        }
        self.reduce(&self.free.compose(a, i, b))
    }
    fn act(&self, a: &Tree<Gen>, s: &Perm) -> Lin<Tree<Gen>> {
        self.reduce(&self.free.act(a, s))
    }
    fn basis(&self, n: usize) -> Vec<Tree<Gen>> {
        if n == 1 {
            return vec![Tree::Leaf(0)];
        }
        self.bases.get(n).cloned().unwrap_or_default()
    }
}

/// An S_2-module from matrices: `act[k]` is the image of basis element `k`
/// under the transposition.
pub fn binary_gens(name: &str, labels: &[(&str, i64)], swap: Vec<Lin<usize>>) -> SMod {
    let infos = labels.iter().map(|(l, d)| GenInfo { label: l.to_string(), degree: *d }).collect();
    let mut gens = BTreeMap::new();
    gens.insert(2, infos);
    SMod::new(name, true, gens, move |g, s| {
        if s.is_identity() {
            Lin::basis(*g)
        } else {
            swap[g.1].map_keys(|k| (2, *k))
        }
    })
}

/// The three weight-2 trees of arity 3 built from `a ∘_1 b` by the cyclic
/// permutations; together with the labels they form a basis of `T(E)(3)`.
fn cyclic_frame(free: &FreeOperad) -> Vec<(Gen, Gen, Perm, Lin<Tree<Gen>>)> {
    let gens = free.gens.basis(2);
    let cyc = [Perm::identity(3), Perm::cycle(3, &[0, 1, 2]), Perm::cycle(3, &[0, 2, 1])];
    let mut out = Vec::new();
    for c in &cyc {
        for a in &gens {
            for b in &gens {
                let t = free.compose(&free.corolla(*a), 0, &free.corolla(*b));
                let v = t.map(|x| free.act(x, c));
                out.push((*a, *b, c.clone(), v));
            }
        }
    }
    out
}

/// Coordinates of `v ∈ T(E)(3)` in the cyclic frame.
fn frame_coords(frame: &[(Gen, Gen, Perm, Lin<Tree<Gen>>)], v: &Lin<Tree<Gen>>) -> Vec<Q> {
    let cols: Vec<Lin<Tree<Gen>>> = frame.iter().map(|f| f.3.clone()).collect();
    solve(&cols, v).expect("cyclic frame spans T(E)(3)")
}

/// `E^∨ ⊗ sgn` in degree `−|e|`, the generators of the Koszul dual.
pub fn dual_gens(gens: &SMod) -> SMod {
    let b = gens.basis(2);
    let labels: Vec<(String, i64)> = b.iter().map(|g| (format!("{}'", gens.label(g)), -gens.degree(g))).collect();
    let t = Perm::transposition(2, 0, 1);
    // (a_k^∨)^τ = −Σ_j [a_k in a_j^τ] a_j^∨ since τ is its own inverse
    let swap: Vec<Lin<usize>> = (0..b.len())
        .map(|k| {
            let mut v = Lin::zero();
            for (j, g) in b.iter().enumerate() {
                let c = gens.act(g, &t).coeff(&b[k]);
                v.add_term(j, -c);
            }
            v
        })
        .collect();
    let refs: Vec<(&str, i64)> = labels.iter().map(|(l, d)| (l.as_str(), *d)).collect();
    binary_gens(&format!("{}^∨", gens.name), &refs, swap)
}

/// The pairing of `T(E)(3)` with `T(E^∨⊗sgn)(3)`: cyclic frames pair
/// label-wise, different cyclic shapes are orthogonal. It satisfies
/// `⟨x^σ, y^σ⟩ = sgn(σ)⟨x, y⟩`, so annihilators of stable subspaces are stable.
pub fn pairing(f: &FreeOperad, fd: &FreeOperad, x: &Lin<Tree<Gen>>, y: &Lin<Tree<Gen>>) -> Q {
    let fr = cyclic_frame(f);
    let frd = cyclic_frame(fd);
    let cx = frame_coords(&fr, x);
    let cy = frame_coords(&frd, y);
    let mut s = q(0);
    for (i, a) in fr.iter().enumerate() {
        for (j, b) in frd.iter().enumerate() {
            if a.0 .1 == b.0 .1 && a.1 .1 == b.1 .1 && a.2 == b.2 {
                s += &cx[i] * &cy[j];
            }
        }
    }
    s
}

/// `P^! = P(E^∨⊗sgn, R^⊥)`.
pub fn koszul_dual(p: &PresentedOperad, name: &str) -> Result<PresentedOperad, PresentError> {
    let f = FreeOperad::new(p.data.gens.clone(), 2);
    let dg = dual_gens(&p.data.gens);
    let fd = FreeOperad::new(dg.clone(), 2);
    let fr = cyclic_frame(&f);
    let frd = cyclic_frame(&fd);
    let rel = p.relation_space();
    // annihilator: y = Σ c_j frd_j with Σ_j c_j ⟨r, frd_j⟩ = 0 for all r
    let rel_coords: Vec<Vec<Q>> = rel.iter().map(|r| frame_coords(&fr, r)).collect();
    let dim = frd.len();
    // matrix rows = relations, columns = dual frame entries
    let mut mat: Vec<Lin<usize>> = Vec::new();
    for rc in &rel_coords {
        let mut row = Lin::zero();
        for (j, b) in frd.iter().enumerate() {
            for (i, a) in fr.iter().enumerate() {
                if a.0 .1 == b.0 .1 && a.1 .1 == b.1 .1 && a.2 == b.2 {
                    row.add_term(j, rc[i].clone());
                }
            }
        }
        mat.push(row);
    }
    let kernel = kernel_basis(&mat, dim);
    let relations = kernel
        .into_iter()
        .map(|c| {
            let mut v = Lin::zero();
            for (j, cj) in c.iter() {
                v.add_scaled(&frd[*j].3, cj);
            }
            v
        })
        .collect();
    PresentedOperad::new(name, QuadraticData { gens: dg, relations }, p.cap)
}

/// Kernel of the map `x ↦ (⟨row, x⟩)_rows` on `k^dim`.
fn kernel_basis(rows: &[Lin<usize>], dim: usize) -> Vec<Lin<usize>> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.interreduce();
    // rows are in reduced echelon form with pivot = largest key
    let pivots: Vec<usize> = e.pivots().cloned().collect();
    let mut reduced: BTreeMap<usize, Lin<usize>> = BTreeMap::new();
    for p in &pivots {
        let v = Lin::basis(*p);
        reduced.insert(*p, v.clone() - e.reduce(&v));
    }
    let mut out = Vec::new();
    for free_var in 0..dim {
        if reduced.contains_key(&free_var) {
            continue;
        }
        let mut v = Lin::basis(free_var);
        for (p, row) in &reduced {
            let c = row.coeff(&free_var);
            v.add_term(*p, -c);
        }
        out.push(v);
    }
    out
}

pub fn com_data() -> QuadraticData {
    let gens = binary_gens("Com", &[("m", 0)], vec![Lin::basis(0)]);
    let f = FreeOperad::new(gens.clone(), 2);
    let m = f.corolla((2, 0));
    let t = f.compose(&m, 0, &m);
    let orbit: Vec<Lin<Tree<Gen>>> = [Perm::identity(3), Perm::cycle(3, &[0, 1, 2]), Perm::cycle(3, &[0, 2, 1])]
        .iter()
        .map(|c| t.map(|x| f.act(x, c)))
        .collect();
    let relations = vec![orbit[0].clone() - orbit[1].clone(), orbit[1].clone() - orbit[2].clone()];
    QuadraticData { gens, relations }
}

pub fn lie_data() -> QuadraticData {
    let gens = binary_gens("Lie", &[("b", 0)], vec![Lin::term(0, q(-1))]);
    let f = FreeOperad::new(gens.clone(), 2);
    let b = f.corolla((2, 0));
    let t = f.compose(&b, 0, &b);
    let mut jacobi = Lin::zero();
    for c in [Perm::identity(3), Perm::cycle(3, &[0, 1, 2]), Perm::cycle(3, &[0, 2, 1])] {
        jacobi += t.map(|x| f.act(x, &c));
    }
    QuadraticData { gens, relations: vec![jacobi] }
}

pub fn ass_data() -> QuadraticData {
    // m = m_{12}, its swap m' = m_{21}
    let gens = binary_gens("Ass", &[("m", 0), ("m'", 0)], vec![Lin::basis(1), Lin::basis(0)]);
    let f = FreeOperad::new(gens.clone(), 2);
    let m = f.corolla((2, 0));
    let assoc = f.compose(&m, 0, &m) - f.compose(&m, 1, &m);
    let mut relations = Vec::new();
    for s in all_perms(3) {
        relations.push(assoc.map(|x| f.act(x, &s)));
    }
    QuadraticData { gens, relations }
}

pub fn com(cap: usize) -> PresentedOperad {
    PresentedOperad::new("Com", com_data(), cap).expect("Com presentation")
}

pub fn lie(cap: usize) -> PresentedOperad {
    PresentedOperad::new("Lie", lie_data(), cap).expect("Lie presentation")
}

pub fn ass(cap: usize) -> PresentedOperad {
    PresentedOperad::new("Ass", ass_data(), cap).expect("Ass presentation")
}

/// Character of the S_n-representation spanned by the basis, one value per
/// permutation in `all_perms(n)` order.
pub fn character<O: Operad + ?Sized>(op: &O, n: usize) -> Vec<Q> {
    let b = op.basis(n);
    all_perms(n)
        .iter()
        .map(|s| {
            let mut tr = q(0);
            for x in &b {
                tr += op.act(x, s).coeff(x);
            }
            tr
        })
        .collect()
}

pub fn sign_character(n: usize) -> Vec<Q> {
    all_perms(n).iter().map(|s| q(s.sign())).collect()
}

/// Arc-wrapped stock presentations, the shape used by the rest of the crate.
pub fn stock(name: &str, cap: usize) -> Option<Arc<PresentedOperad>> {
    match name {
        "Com" => Some(Arc::new(com(cap))),
        "Lie" => Some(Arc::new(lie(cap))),
        "Ass" => Some(Arc::new(ass(cap))),
        _ => None,
    }
}
