//! Free covers, lifting through surjections, projectivity and free resolutions.

use thiserror::Error;

use crate::chain::{ChainComplex, ChainError, ChainMap};
use crate::diagram::{is_exact_pair, ShortExactSeqModules};
use crate::exactlin::{kernel_basis, rank, snf, LinearSystem, Matrix};
use crate::fpmod::{FpModule, ModuleHom};

#[derive(Debug, Error)]
pub enum ResolveError {
    #[error("map to lift through is not surjective")]
    NotSurjective,
    #[error("modules do not match: {0}")]
    Mismatch(String),
    #[error("not a resolution: {0}")]
    NotAResolution(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

/// The free module on `m`'s generators and its canonical projection onto `m`.
pub fn free_cover(m: &FpModule) -> (FpModule, ModuleHom) {
    let f = FpModule::free(m.ring(), m.generators());
    let pi = ModuleHom::new(f.clone(), m.clone(), Matrix::identity(m.ring(), m.generators()))
        .expect("projection from the free cover is well defined");
    debug_assert!(pi.is_surjective());
    (f, pi)
}

/// Some `h : P -> M` with `phi ∘ h = f`, for `f : P -> N` and a surjection
/// `phi : M -> N`. Always found when `P` is free.
pub fn lift_through_surjection(f: &ModuleHom, phi: &ModuleHom) -> Result<Option<ModuleHom>, ResolveError> {
    if f.codomain() != phi.codomain() {
        return Err(ResolveError::Mismatch("f and phi have different codomains".into()));
    }
    if !phi.is_surjective() {
        return Err(ResolveError::NotSurjective);
    }
    let (p, m, n) = (f.domain(), phi.domain(), phi.codomain());
    let ring = p.ring().clone();
    let mut sys = LinearSystem::new(&ring);
    let h = sys.unknown(m.generators(), p.generators());
    let (rp, rm, rn) = (p.relations(), m.relations(), n.relations());
    if rp.cols() > 0 && m.generators() > 0 {
        // h sends relations of P into relations of M
        let w = sys.unknown(rm.cols(), rp.cols());
        sys.equation(
            vec![
                (Matrix::identity(&ring, m.generators()), h, rp.clone()),
                (-rm, w, Matrix::identity(&ring, rp.cols())),
            ],
            Matrix::zeros(&ring, m.generators(), rp.cols()),
        );
    }
    let mut terms = vec![(phi.map().clone(), h, Matrix::identity(&ring, p.generators()))];
    if rn.cols() > 0 && p.generators() > 0 {
        let y = sys.unknown(rn.cols(), p.generators());
        terms.push((-rn, y, Matrix::identity(&ring, p.generators())));
    }
    sys.equation(terms, f.map().clone());
    let lift = sys.solve().map(|sol| {
        ModuleHom::new(p.clone(), m.clone(), sol.value(h).clone()).expect("well-definedness is part of the system")
    });
    debug_assert!(lift.is_some() || !p.is_presented_free(), "free modules always lift");
    debug_assert!(lift.as_ref().is_none_or(|h| h.then(phi).equals(f)));
    Ok(lift)
}

/// `h : C -> B` with `g ∘ h = id_C`, if the sequence splits.
pub fn find_splitting_ses(ses: &ShortExactSeqModules) -> Option<ModuleHom> {
    lift_through_surjection(&ModuleHom::identity(&ses.c), &ses.g).expect("g is surjective in a short exact sequence")
}

/// `m` is projective iff its free-cover sequence `0 -> K -> F -> m -> 0` splits.
pub fn is_projective(m: &FpModule) -> bool {
    let (_, pi) = free_cover(m);
    lift_through_surjection(&ModuleHom::identity(m), &pi)
        .expect("free cover is onto")
        .is_some()
}

/// `... -> P_1 -> P_0 -> target` by free modules; `maps[i - 1]` is `phi_i : P_i -> P_{i-1}`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub target: FpModule,
    pub free_ranks: Vec<usize>,
    pub maps: Vec<ModuleHom>,
    pub augmentation: ModuleHom,
    pub depth: usize,
    /// The last synthesized map (or the augmentation at depth 0) is injective.
    pub complete: bool,
    /// The last synthesized map (or the augmentation at depth 0) is bijective.
    pub final_map_bijective: bool,
}

impl Resolution {
    /// Validates freeness, surjectivity of the augmentation and exactness.
    pub fn from_parts(augmentation: ModuleHom, maps: Vec<ModuleHom>) -> Result<Self, ResolveError> {
        let target = augmentation.codomain().clone();
        let mut free_ranks = vec![augmentation.domain().generators()];
        free_ranks.extend(maps.iter().map(|m| m.domain().generators()));
        let all_free = std::iter::once(augmentation.domain())
            .chain(maps.iter().map(|m| m.domain()))
            .all(|p| p.is_presented_free());
        if !all_free {
            return Err(ResolveError::NotAResolution("a term is not presented as a free module".into()));
        }
        if !augmentation.is_surjective() {
            return Err(ResolveError::NotAResolution("augmentation is not surjective".into()));
        }
        let mut prev = &augmentation;
        for (i, phi) in maps.iter().enumerate() {
            if phi.codomain() != prev.domain() || !is_exact_pair(phi, prev) {
                return Err(ResolveError::NotAResolution(format!("not exact at P_{i}")));
            }
            prev = phi;
        }
        let last = maps.last().unwrap_or(&augmentation);
        let complete = last.is_injective();
        let final_map_bijective = complete && last.is_surjective();
        Ok(Resolution {
            target,
            free_ranks,
            depth: maps.len(),
            maps,
            augmentation,
            complete,
            final_map_bijective,
        })
    }

    pub fn ring(&self) -> &crate::exactlin::RingSpec {
        self.target.ring()
    }

    /// `P_i` (zero beyond the computed depth).
    pub fn term(&self, i: usize) -> FpModule {
        match i {
            0 => self.augmentation.domain().clone(),
            _ if i <= self.depth => self.maps[i - 1].domain().clone(),
            _ => FpModule::zero(self.ring()),
        }
    }

    /// `phi_i`, `i >= 1`.
    pub fn map(&self, i: usize) -> ModuleHom {
        match i {
            _ if (1..=self.depth).contains(&i) => self.maps[i - 1].clone(),
            _ => ModuleHom::zero(&self.term(i), &self.term(i.saturating_sub(1))),
        }
    }

    /// `P_depth -> ... -> P_0` in degrees `depth..=0`.
    pub fn complex(&self) -> ChainComplex {
        let homs: Vec<ModuleHom> = self.maps.clone();
        let modules = (0..=self.depth).map(|i| self.term(i)).collect();
        ChainComplex::from_homs(self.ring(), 0, modules, homs).expect("resolution maps compose to zero")
    }

    /// `P_depth -> ... -> P_0 -> target` with the target in degree -1.
    pub fn augmented_complex(&self) -> ChainComplex {
        let mut modules = vec![self.target.clone()];
        modules.extend((0..=self.depth).map(|i| self.term(i)));
        let mut homs = vec![self.augmentation.clone()];
        homs.extend(self.maps.iter().cloned());
        ChainComplex::from_homs(self.ring(), -1, modules, homs).expect("resolution maps compose to zero")
    }

    /// Only `P_0..P_d`.
    pub fn truncated(&self, d: usize) -> Resolution {
        if d >= self.depth {
            return self.clone();
        }
        Resolution::from_parts(self.augmentation.clone(), self.maps[..d].to_vec())
            .expect("a truncation of a resolution is a resolution")
    }
}

/// Free resolution of `m`. Over Z the complete resolution (length at most 1)
/// is returned whatever `depth` is; over Z/n kernels are covered until `depth`
/// maps exist or a map is injective.
pub fn free_resolution(m: &FpModule, depth: usize) -> Resolution {
    let ring = m.ring().clone();
    let (p0, augmentation) = free_cover(m);
    let relations = m.relations().without_zero_columns();
    let mut maps = Vec::new();
    if ring.is_integers() {
        if relations.cols() > 0 {
            let r = rank(&relations);
            let phi = if r == relations.cols() {
                relations
            } else {
                (&relations * &snf(&relations).v).submatrix(0..relations.rows(), 0..r)
            };
            maps.push(free_map(&p0, phi));
        }
    } else {
        let mut next = relations;
        let mut codomain = p0;
        while maps.len() < depth && next.cols() > 0 {
            let phi = free_map(&codomain, next);
            next = kernel_basis(phi.map());
            codomain = phi.domain().clone();
            maps.push(phi);
        }
    }
    let res = Resolution::from_parts(augmentation, maps).expect("synthesized resolution is exact");
    debug_assert!(!ring.is_integers() || res.complete);
    res
}

fn free_map(codomain: &FpModule, columns: Matrix) -> ModuleHom {
    let domain = FpModule::free(codomain.ring(), columns.cols());
    ModuleHom::new(domain, codomain.clone(), columns).expect("maps out of free modules are well defined")
}

/// Chain map `f_i : P_i -> Q_i` over `f : M -> N` with `psi_i f_i = f_{i-1} phi_i`
/// and `eps_Q f_0 = f eps_P`. The window is `p`'s depth when `q` is complete,
/// otherwise the smaller of the two depths.
pub fn lift_between_resolutions(f: &ModuleHom, p: &Resolution, q: &Resolution) -> Result<ChainMap, ResolveError> {
    if f.domain() != &p.target || f.codomain() != &q.target {
        return Err(ResolveError::Mismatch("f does not go between the resolved modules".into()));
    }
    let depth = if q.complete { p.depth } else { p.depth.min(q.depth) };
    let p = p.truncated(depth);
    let f0 = lift_through_surjection(&p.augmentation.then(f), &q.augmentation)?
        .expect("P_0 is free");
    let mut levels = vec![(0i64, f0)];
    for i in 1..=depth {
        let prev = &levels[i - 1].1;
        let target = p.map(i).then(prev);
        let psi = q.map(i);
        let x = psi
            .preimage(target.map())
            .ok_or_else(|| ResolveError::NotAResolution(format!("cannot lift at P_{i}")))?;
        let fi = ModuleHom::new(p.term(i), q.term(i), x).expect("maps out of free modules are well defined");
        levels.push((i as i64, fi));
    }
    let (src, tgt) = (p.complex(), q.complex());
    Ok(ChainMap::from_homs(&src, &tgt, levels.into_iter().collect())?)
}
