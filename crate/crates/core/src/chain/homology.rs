use super::{ChainComplex, ChainMap};
use crate::exactlin::Matrix;
use crate::fpmod::{FpModule, ModuleHom};

/// `H_n = Z_n / B_n` together with the data needed to move between homology
/// classes and representative cycles.
#[derive(Clone, Debug)]
pub struct Homology {
    pub degree: i64,
    /// `Z_n = ker d_n` and its inclusion into `C_n`.
    pub cycles: FpModule,
    pub cycle_inclusion: ModuleHom,
    /// `d_{n+1}` rewritten in cycle coordinates: `B_n` is the span of these columns.
    pub boundaries_in_cycles: Matrix,
    pub homology: FpModule,
    /// `Z_n -> H_n`.
    pub projection: ModuleHom,
    /// Cycle coordinates of a representative for each generator of `H_n`.
    pub lift: Matrix,
}

impl Homology {
    /// `C_n` coordinates of a cycle representing the class with homology coordinates `h`.
    pub fn representative(&self, h: &Matrix) -> Matrix {
        &(self.cycle_inclusion.map() * &self.lift) * h
    }

    /// Homology class of a cycle given in `C_n` coordinates (`None` if not a cycle).
    pub fn class_of(&self, cycle: &Matrix) -> Option<Matrix> {
        let z = self.cycle_inclusion.preimage(cycle)?;
        Some(self.projection.apply(&z))
    }
}

impl ChainComplex {
    pub fn homology(&self, n: i64) -> Homology {
        let d_out = self.boundary(n);
        let d_in = self.boundary(n + 1);
        let (cycles, inclusion) = d_out.kernel();
        let bounds = inclusion
            .preimage(d_in.map())
            .expect("boundaries are cycles in a complex");
        let (homology, projection) = cycles.quotient(&bounds);
        let lift = projection.section().expect("quotient map is onto");
        Homology {
            degree: n,
            cycles,
            cycle_inclusion: inclusion,
            boundaries_in_cycles: bounds,
            homology,
            projection,
            lift,
        }
    }

    pub fn homology_module(&self, n: i64) -> FpModule {
        self.homology(n).homology
    }

    /// `im d_{n+1} = ker d_n`. Decided by submodule containment and, in debug
    /// builds, cross-checked against `H_n = 0`.
    pub fn is_exact_at(&self, n: i64) -> bool {
        let d_in = self.boundary(n + 1);
        let (_, inclusion) = self.boundary(n).kernel();
        let exact = self.module(n).contains_submodule(d_in.map(), inclusion.map());
        debug_assert_eq!(exact, self.homology(n).homology.is_zero(), "exactness routes disagree at {n}");
        exact
    }

    pub fn is_exact(&self) -> bool {
        self.degrees().all(|n| self.is_exact_at(n))
    }

    /// Degrees in the window where the complex fails to be exact.
    pub fn inexact_degrees(&self) -> Vec<i64> {
        self.degrees().filter(|&n| !self.is_exact_at(n)).collect()
    }
}

/// Homology at every degree of the stored window.
pub fn homology_summary(c: &ChainComplex) -> Vec<Homology> {
    c.degrees().map(|n| c.homology(n)).collect()
}

/// `H_n(u) : H_n(C) -> H_n(D)`: lift generators to cycles, apply `u_n`,
/// project. The matrix is canonical, so equal maps give equal matrices.
pub fn induced_on_homology(u: &ChainMap, n: i64) -> ModuleHom {
    let hs = u.source().homology(n);
    let ht = u.target().homology(n);
    let reps = hs.cycle_inclusion.map() * &hs.lift;
    let images = u.level(n).apply(&reps);
    let z = ht
        .cycle_inclusion
        .preimage(&images)
        .expect("chain maps send cycles to cycles");
    ModuleHom::new(hs.homology, ht.homology.clone(), ht.projection.apply(&z))
        .expect("chain maps send boundaries to boundaries")
        .canonical()
}

/// Induced maps are isomorphisms at every degree (kernel and cokernel zero).
pub fn is_quasi_iso(u: &ChainMap) -> bool {
    let (lo, hi) = u.window();
    (lo..=hi).all(|n| induced_on_homology(u, n).is_isomorphism())
}
