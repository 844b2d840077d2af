use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ModError, ModuleHom};
use crate::exactlin::{kernel_basis, snf, solve, Matrix, RingSpec};

/// `R^free_rank ⊕ R/(d_1) ⊕ ... ⊕ R/(d_k)` with `1 < d_1 | d_2 | ... | d_k`.
///
/// Over Z/m each `d_i` is a proper divisor of `m`; copies of `Z/m` itself are
/// counted in `free_rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub ring: RingSpec,
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl Decomposition {
    pub fn zero(ring: &RingSpec) -> Self {
        Decomposition {
            ring: ring.clone(),
            free_rank: 0,
            invariant_factors: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Number of elements, when finite.
    pub fn order(&self) -> Option<BigInt> {
        let torsion: BigInt = self.invariant_factors.iter().product();
        match &self.ring {
            RingSpec::Integers if self.free_rank > 0 => None,
            RingSpec::Integers => Some(torsion),
            RingSpec::IntegersMod(m) => Some(torsion * m.pow(self.free_rank as u32)),
        }
    }

    /// `Z/(a)` factors from a list of ideal generators, in canonical order.
    pub(crate) fn from_diagonal(ring: &RingSpec, generators: usize, diag: &[BigInt]) -> Self {
        let mut factors = Vec::new();
        let mut nonzero = 0;
        for d in diag {
            let g = ring.ideal_generator(d);
            if g.is_zero() {
                continue;
            }
            nonzero += 1;
            if !g.is_one() {
                factors.push(g);
            }
        }
        factors.sort();
        Decomposition {
            ring: ring.clone(),
            free_rank: generators - nonzero,
            invariant_factors: factors,
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(match (&self.ring, self.free_rank) {
                (RingSpec::Integers, 1) => "Z".to_string(),
                (RingSpec::Integers, r) => format!("Z^{r}"),
                (RingSpec::IntegersMod(m), 1) => format!("Z/{m}"),
                (RingSpec::IntegersMod(m), r) => format!("(Z/{m})^{r}"),
            });
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Cokernel of `relations: R^k -> R^g`, with its decomposition computed eagerly.
#[derive(Clone)]
pub struct FpModule {
    ring: RingSpec,
    relations: Matrix,
    decomposition: Decomposition,
}

impl PartialEq for FpModule {
    /// Equality of presentations (not isomorphism; see [`FpModule::is_isomorphic`]).
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.relations == other.relations
    }
}

impl Eq for FpModule {}

impl fmt::Debug for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FpModule({} gens, {} rels over {}: {})",
            self.generators(),
            self.relations.cols(),
            self.ring,
            self.decomposition
        )
    }
}

impl fmt::Display for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.decomposition)
    }
}

/// A module re-presented along its Smith basis together with the mutually
/// inverse isomorphisms (as generator matrices) to and from the original.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub module: FpModule,
    /// `new.generators x old.generators`
    pub to_new: Matrix,
    /// `old.generators x new.generators`
    pub to_old: Matrix,
}

impl FpModule {
    /// The module presented by `relations` (one row per generator).
    pub fn new(relations: Matrix) -> Self {
        let s = snf(&relations);
        let diag = s.invariant_factors();
        let decomposition = Decomposition::from_diagonal(relations.ring(), relations.rows(), &diag);
        FpModule {
            ring: relations.ring().clone(),
            relations,
            decomposition,
        }
    }

    pub fn free(ring: &RingSpec, rank: usize) -> Self {
        FpModule::new(Matrix::zeros(ring, rank, 0))
    }

    pub fn zero(ring: &RingSpec) -> Self {
        FpModule::free(ring, 0)
    }

    /// `R/(d)` on one generator.
    pub fn cyclic(ring: &RingSpec, d: impl Into<BigInt>) -> Self {
        FpModule::new(Matrix::scalar(ring, d))
    }

    /// Module with the given invariant factors and free rank, in diagonal form.
    pub fn from_decomposition(ring: &RingSpec, free_rank: usize, factors: &[BigInt]) -> Self {
        let g = free_rank + factors.len();
        let mut rel = Matrix::zeros(ring, g, factors.len());
        for (k, d) in factors.iter().enumerate() {
            rel.set(free_rank + k, k, d.clone());
        }
        FpModule::new(rel)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generators(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    pub fn decomposition(&self) -> &Decomposition {
        &self.decomposition
    }

    /// `(free_rank, invariant_factors)`.
    pub fn decompose(&self) -> (usize, Vec<BigInt>) {
        (self.decomposition.free_rank, self.decomposition.invariant_factors.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.decomposition.is_zero()
    }

    /// Free on its own generators (no relations at all, up to zero columns).
    pub fn is_presented_free(&self) -> bool {
        self.relations.is_zero()
    }

    pub fn is_isomorphic(&self, other: &FpModule) -> bool {
        self.decomposition == other.decomposition
    }

    /// Do the columns of `coords` (generator coordinates) lie in the relation span?
    pub fn is_zero_vector(&self, coords: &Matrix) -> bool {
        matches!(solve(&self.relations, coords), Ok(Some(_)))
    }

    /// Re-present along the Smith basis, dropping generators killed by a unit.
    pub fn reduced(&self) -> Reduced {
        let s = snf(&self.relations);
        let g = self.generators();
        let mut kept = Vec::new();
        let mut diag = Vec::new();
        for i in 0..g {
            if i < s.rank {
                let d = s.d.get(i, i);
                if self.ring.is_unit(d) {
                    continue;
                }
                diag.push(Some(d.clone()));
            } else {
                diag.push(None);
            }
            kept.push(i);
        }
        let factors: Vec<&BigInt> = diag.iter().flatten().collect();
        let mut rel = Matrix::zeros(&self.ring, kept.len(), factors.len());
        let mut col = 0;
        for (k, d) in diag.iter().enumerate() {
            if let Some(d) = d {
                rel.set(k, col, d.clone());
                col += 1;
            }
        }
        Reduced {
            module: FpModule {
                ring: self.ring.clone(),
                relations: rel,
                decomposition: self.decomposition.clone(),
            },
            to_new: s.u.select_rows(&kept),
            to_old: s.u_inv.select_columns(&kept),
        }
    }

    /// Submodule generated by the columns of `gens` (generator coordinates in
    /// `self`), with its inclusion.
    pub fn submodule(&self, gens: &Matrix) -> (FpModule, ModuleHom) {
        assert_eq!(gens.rows(), self.generators(), "generator coordinates do not fit");
        let k = gens.cols();
        let block = Matrix::hstack(&self.ring, self.generators(), &[gens, &-self.relations()]);
        let rel = kernel_basis(&block).top_rows(k);
        let sub = FpModule::new(rel).reduced();
        let inclusion = gens * &sub.to_old;
        let m = sub.module;
        let hom = ModuleHom::new_unchecked(m.clone(), self.clone(), inclusion);
        (m, hom)
    }

    /// Quotient of `self` by the submodule generated by the columns of `gens`.
    pub fn quotient(&self, gens: &Matrix) -> (FpModule, ModuleHom) {
        let rel = Matrix::hstack(&self.ring, self.generators(), &[self.relations(), gens]);
        let q = FpModule::new(rel).reduced();
        let m = q.module;
        let hom = ModuleHom::new_unchecked(self.clone(), m.clone(), q.to_new);
        (m, hom)
    }

    /// Same element sets: every column of `a` lies in `span(b) + relations` and vice versa.
    pub fn same_submodule(&self, a: &Matrix, b: &Matrix) -> bool {
        self.contains_submodule(a, b) && self.contains_submodule(b, a)
    }

    /// Is the submodule generated by `b` contained in the one generated by `a`?
    pub fn contains_submodule(&self, a: &Matrix, b: &Matrix) -> bool {
        let span = Matrix::hstack(&self.ring, self.generators(), &[a, self.relations()]);
        matches!(solve(&span, b), Ok(Some(_)))
    }

    pub fn element(&self, coords: &[BigInt]) -> ModuleElement {
        assert_eq!(coords.len(), self.generators());
        ModuleElement {
            parent: self.clone(),
            coords: Matrix::from_fn(&self.ring, coords.len(), 1, |i, _| coords[i].clone()),
        }
    }
}

/// An element of a presented module, kept as generator coordinates.
#[derive(Clone, Debug)]
pub struct ModuleElement {
    pub parent: FpModule,
    pub coords: Matrix,
}

impl ModuleElement {
    /// Equal iff the coordinate difference lies in the relation span.
    pub fn element_eq(&self, other: &ModuleElement) -> bool {
        self.parent == other.parent && self.parent.is_zero_vector(&(&self.coords - &other.coords))
    }

    pub fn is_zero(&self) -> bool {
        self.parent.is_zero_vector(&self.coords)
    }
}

/// `M ⊕ N` with its canonical injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: FpModule,
    pub injections: [ModuleHom; 2],
    pub projections: [ModuleHom; 2],
}

pub fn direct_sum(m: &FpModule, n: &FpModule) -> Result<DirectSum, ModError> {
    if m.ring() != n.ring() {
        return Err(ModError::RingMismatch(m.ring().clone(), n.ring().clone()));
    }
    let ring = m.ring();
    let (a, b) = (m.generators(), n.generators());
    let sum = FpModule::new(Matrix::block_diag(ring, &[m.relations(), n.relations()]));
    let eye_a = Matrix::identity(ring, a);
    let eye_b = Matrix::identity(ring, b);
    let inj_m = Matrix::vstack(ring, a, &[&eye_a, &Matrix::zeros(ring, b, a)]);
    let inj_n = Matrix::vstack(ring, b, &[&Matrix::zeros(ring, a, b), &eye_b]);
    let proj_m = Matrix::hstack(ring, a, &[&eye_a, &Matrix::zeros(ring, a, b)]);
    let proj_n = Matrix::hstack(ring, b, &[&Matrix::zeros(ring, b, a), &eye_b]);
    Ok(DirectSum {
        injections: [
            ModuleHom::new_unchecked(m.clone(), sum.clone(), inj_m),
            ModuleHom::new_unchecked(n.clone(), sum.clone(), inj_n),
        ],
        projections: [
            ModuleHom::new_unchecked(sum.clone(), m.clone(), proj_m),
            ModuleHom::new_unchecked(sum.clone(), n.clone(), proj_n),
        ],
        module: sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclic_two_is_z2() {
        assert_eq!(FpModule::cyclic(&z(), 2).decompose(), (0, big(&[2])));
    }

    #[test]
    fn no_relations_is_free() {
        let m = FpModule::new(Matrix::zeros(&z(), 1, 0));
        assert_eq!(m.decompose(), (1, vec![]));
        assert_eq!(m.to_string(), "Z");
    }

    #[test]
    fn diag_2_3_is_z6() {
        let m = FpModule::new(Matrix::diagonal(&z(), &[2, 3]));
        assert_eq!(m.decompose(), (0, big(&[6])));
    }

    #[test]
    fn sums_decompose() {
        let s = direct_sum(&FpModule::cyclic(&z(), 2), &FpModule::cyclic(&z(), 3)).unwrap();
        assert_eq!(s.module.decompose(), (0, big(&[6])));
        let s = direct_sum(&FpModule::free(&z(), 1), &FpModule::cyclic(&z(), 2)).unwrap();
        assert_eq!(s.module.decompose(), (1, big(&[2])));
        assert_eq!(s.module.to_string(), "Z ⊕ Z/2");
        let m = FpModule::cyclic(&z(), 4);
        let s = direct_sum(&m, &FpModule::zero(&z())).unwrap();
        assert!(s.module.is_isomorphic(&m));
        for i in 0..2 {
            assert!(s.injections[i].then(&s.projections[i]).is_identity());
        }
    }

    #[test]
    fn mod_ring_decomposition() {
        let r6 = RingSpec::zmod(6).unwrap();
        assert_eq!(FpModule::cyclic(&r6, 3).decompose(), (0, big(&[3])));
        assert_eq!(FpModule::cyclic(&r6, 0).decompose(), (1, vec![]));
        assert_eq!(FpModule::cyclic(&r6, 5).decompose(), (0, vec![]));
        assert_eq!(FpModule::free(&r6, 2).to_string(), "(Z/6)^2");
        let r4 = RingSpec::zmod(4).unwrap();
        assert_eq!(FpModule::cyclic(&r4, 2).decomposition().order(), Some(BigInt::from(2)));
    }

    #[test]
    fn sign_of_relator_is_irrelevant() {
        assert!(FpModule::cyclic(&z(), 2).is_isomorphic(&FpModule::cyclic(&z(), -2)));
    }

    #[test]
    fn reduced_presentation_round_trips() {
        let m = FpModule::new(Matrix::from_rows(&z(), &[vec![2, 4, 0], vec![6, 8, 3], vec![0, 0, 0]]));
        let r = m.reduced();
        assert!(r.module.is_isomorphic(&m));
        let there = ModuleHom::new(m.clone(), r.module.clone(), r.to_new.clone()).unwrap();
        let back = ModuleHom::new(r.module.clone(), m.clone(), r.to_old.clone()).unwrap();
        assert!(there.then(&back).is_identity());
        assert!(back.then(&there).is_identity());
    }

    #[test]
    fn element_equality_modulo_relations() {
        let m = FpModule::cyclic(&z(), 6);
        assert!(m.element(&big(&[7])).element_eq(&m.element(&big(&[1]))));
        assert!(!m.element(&big(&[3])).element_eq(&m.element(&big(&[1]))));
        assert!(m.element(&big(&[-12])).is_zero());
    }
}
