use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{FpModule, ModError};
use crate::exactlin::{columns_in_span, kernel_basis, solve, Matrix};

/// Homomorphism of presented modules given by the images of the domain
/// generators (columns of `map`, in codomain generator coordinates).
#[derive(Clone)]
pub struct ModuleHom {
    domain: FpModule,
    codomain: FpModule,
    map: Matrix,
}

impl fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleHom({} -> {}, {:?})", self.domain, self.codomain, self.map)
    }
}

impl PartialEq for ModuleHom {
    /// Structural equality (same presentations, same matrix); see [`ModuleHom::equals`]
    /// for equality as maps.
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.codomain == other.codomain && self.map == other.map
    }
}

impl Eq for ModuleHom {}

fn well_defined(domain: &FpModule, codomain: &FpModule, map: &Matrix) -> bool {
    columns_in_span(codomain.relations(), &(map * domain.relations()))
}

impl ModuleHom {
    /// Validated construction; fails with [`ModError::NotWellDefined`] when a
    /// relation of the domain is not sent to zero.
    pub fn new(domain: FpModule, codomain: FpModule, map: Matrix) -> Result<Self, ModError> {
        if domain.ring() != codomain.ring() {
            return Err(ModError::RingMismatch(domain.ring().clone(), codomain.ring().clone()));
        }
        if map.ring() != domain.ring() {
            return Err(ModError::RingMismatch(map.ring().clone(), domain.ring().clone()));
        }
        if map.shape() != (codomain.generators(), domain.generators()) {
            return Err(ModError::Shape(format!(
                "map is {}x{} but must be {}x{} (codomain x domain generators)",
                map.rows(),
                map.cols(),
                codomain.generators(),
                domain.generators()
            )));
        }
        if !well_defined(&domain, &codomain, &map) {
            return Err(ModError::NotWellDefined);
        }
        Ok(ModuleHom { domain, codomain, map })
    }

    /// For maps that are well defined by construction. Checked in debug builds.
    pub(crate) fn new_unchecked(domain: FpModule, codomain: FpModule, map: Matrix) -> Self {
        debug_assert_eq!(map.shape(), (codomain.generators(), domain.generators()));
        debug_assert!(well_defined(&domain, &codomain, &map), "hom not well defined");
        ModuleHom { domain, codomain, map }
    }

    pub fn identity(m: &FpModule) -> Self {
        ModuleHom {
            domain: m.clone(),
            codomain: m.clone(),
            map: Matrix::identity(m.ring(), m.generators()),
        }
    }

    pub fn zero(domain: &FpModule, codomain: &FpModule) -> Self {
        ModuleHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            map: Matrix::zeros(domain.ring(), codomain.generators(), domain.generators()),
        }
    }

    pub fn domain(&self) -> &FpModule {
        &self.domain
    }

    pub fn codomain(&self) -> &FpModule {
        &self.codomain
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    /// `g ∘ self`. Panics if `g` does not start where `self` ends.
    pub fn then(&self, g: &ModuleHom) -> ModuleHom {
        compose(self, g).expect("composable homs")
    }

    pub fn try_add(&self, other: &ModuleHom) -> Result<ModuleHom, ModError> {
        self.check_parallel(other)?;
        Ok(ModuleHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            map: &self.map + &other.map,
        })
    }

    pub fn add(&self, other: &ModuleHom) -> ModuleHom {
        self.try_add(other).expect("parallel homs")
    }

    pub fn neg(&self) -> ModuleHom {
        ModuleHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            map: -&self.map,
        }
    }

    pub fn sub(&self, other: &ModuleHom) -> ModuleHom {
        self.add(&other.neg())
    }

    fn check_parallel(&self, other: &ModuleHom) -> Result<(), ModError> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(ModError::Shape("homs do not share domain and codomain".into()));
        }
        Ok(())
    }

    /// Equality as maps: same endpoints, and every generator image agrees
    /// modulo the codomain relations.
    pub fn equals(&self, other: &ModuleHom) -> bool {
        self.domain == other.domain
            && self.codomain == other.codomain
            && self.codomain.is_zero_vector(&(&self.map - &other.map))
    }

    pub fn is_zero(&self) -> bool {
        self.codomain.is_zero_vector(&self.map)
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && self.equals(&ModuleHom::identity(&self.domain))
    }

    /// Image of an element (or several, as columns) given in domain coordinates.
    pub fn apply(&self, coords: &Matrix) -> Matrix {
        &self.map * coords
    }

    /// Kernel with its inclusion into the domain: solve
    /// `[map | -codomain relations] (x, w) = 0` and keep the `x` part.
    pub fn kernel(&self) -> (FpModule, ModuleHom) {
        let ring = self.domain.ring();
        let g = self.domain.generators();
        let block = Matrix::hstack(ring, self.codomain.generators(), &[&self.map, &-self.codomain.relations()]);
        let x = kernel_basis(&block).top_rows(g);
        self.domain.submodule(&x)
    }

    /// Image with its inclusion into the codomain.
    pub fn image(&self) -> (FpModule, ModuleHom) {
        self.codomain.submodule(&self.map)
    }

    /// Cokernel with the projection from the codomain; its presentation is
    /// the codomain relations augmented by the columns of `map` (then reduced).
    pub fn cokernel(&self) -> (FpModule, ModuleHom) {
        self.codomain.quotient(&self.map)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().0.is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().0.is_zero()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Some `x` (domain coordinates, column by column) with `map x = y` in the codomain.
    pub fn preimage(&self, y: &Matrix) -> Option<Matrix> {
        let ring = self.domain.ring();
        let span = Matrix::hstack(ring, self.codomain.generators(), &[&self.map, self.codomain.relations()]);
        solve(&span, y).ok()?.map(|x| x.top_rows(self.domain.generators()))
    }

    /// `h` with `inclusion ∘ h = self`, for `self: X -> B` and `inclusion: K -> B`.
    pub fn factor_through_injection(&self, inclusion: &ModuleHom) -> Option<ModuleHom> {
        if inclusion.codomain != self.codomain {
            return None;
        }
        let y = inclusion.preimage(&self.map)?;
        ModuleHom::new(self.domain.clone(), inclusion.domain.clone(), y).ok()
    }

    /// `h` with `h ∘ projection = self`, for `self: B -> Y` and a surjection `projection: B -> Q`.
    pub fn factor_through_surjection(&self, projection: &ModuleHom) -> Option<ModuleHom> {
        if projection.domain != self.domain {
            return None;
        }
        let section = projection.section()?;
        let h = ModuleHom::new(projection.codomain.clone(), self.codomain.clone(), &self.map * &section).ok()?;
        projection.then(&h).equals(self).then_some(h)
    }

    /// The same map with each coordinate reduced modulo the relation on its
    /// generator, when every codomain relation involves a single generator
    /// (as for Smith-reduced presentations). Equal maps into such a module get
    /// equal matrices.
    pub fn canonical(&self) -> ModuleHom {
        let ring = self.codomain.ring();
        let rel = self.codomain.relations();
        let mut moduli: Vec<Option<BigInt>> = vec![None; rel.rows()];
        for j in 0..rel.cols() {
            let nonzero: Vec<usize> = (0..rel.rows()).filter(|&i| !rel.get(i, j).is_zero()).collect();
            let [i] = nonzero[..] else { return self.clone() };
            let d = match ring.modulus() {
                Some(m) => rel.get(i, j).gcd(m),
                None => rel.get(i, j).abs(),
            };
            moduli[i] = Some(match &moduli[i] {
                Some(prev) => prev.gcd(&d),
                None => d,
            });
        }
        let map = Matrix::from_fn(ring, self.map.rows(), self.map.cols(), |i, j| match &moduli[i] {
            Some(d) => self.map.get(i, j).mod_floor(d),
            None => self.map.get(i, j).clone(),
        });
        ModuleHom { domain: self.domain.clone(), codomain: self.codomain.clone(), map }
    }

    /// Lifts of the codomain generators along a surjection (a set-theoretic section).
    pub fn section(&self) -> Option<Matrix> {
        self.preimage(&Matrix::identity(self.domain.ring(), self.codomain.generators()))
    }
}

/// `g ∘ f`: apply `f` first, then `g`.
pub fn compose(f: &ModuleHom, g: &ModuleHom) -> Result<ModuleHom, ModError> {
    if f.codomain != g.domain {
        return Err(ModError::Shape(format!(
            "cannot compose: {} does not match {}",
            f.codomain, g.domain
        )));
    }
    Ok(ModuleHom {
        domain: f.domain.clone(),
        codomain: g.codomain.clone(),
        map: &g.map * &f.map,
    })
}
