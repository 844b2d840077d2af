//! Tensor products, Tor and its long exact sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use std::collections::BTreeMap;
use thiserror::Error;

use crate::chain::{induced_on_homology, ChainComplex, ChainError, ChainMap};
use crate::diagram::{long_exact_sequence, DiagramError, LesSlot, LongExactSequence, ShortExactSeqComplexes, ShortExactSeqModules};
use crate::exactlin::{Matrix, RingSpec};
use crate::fpmod::{FpModule, ModuleHom};
use crate::resolve::{free_resolution, lift_between_resolutions, lift_through_surjection, Resolution, ResolveError};

#[derive(Debug, Error)]
pub enum DerivedError {
    #[error("modules live over different rings: {0} and {1}")]
    RingMismatch(RingSpec, RingSpec),
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

fn same_ring(m: &FpModule, n: &FpModule) -> Result<(), DerivedError> {
    if m.ring() != n.ring() {
        return Err(DerivedError::RingMismatch(m.ring().clone(), n.ring().clone()));
    }
    Ok(())
}

/// `M ⊗ N` on generators `m_i ⊗ n_k` (index `i * g_N + k`) with relations
/// `[R_M ⊗ I | I ⊗ R_N]`.
pub fn tensor(m: &FpModule, n: &FpModule) -> Result<FpModule, DerivedError> {
    same_ring(m, n)?;
    let ring = m.ring();
    let (gm, gn) = (m.generators(), n.generators());
    let left = m.relations().kronecker(&Matrix::identity(ring, gn));
    let right = Matrix::identity(ring, gm).kronecker(n.relations());
    Ok(FpModule::new(Matrix::hstack(ring, gm * gn, &[&left, &right])))
}

/// `f ⊗ N`.
pub fn tensor_hom(f: &ModuleHom, n: &FpModule) -> Result<ModuleHom, DerivedError> {
    let map = f.map().kronecker(&Matrix::identity(n.ring(), n.generators()));
    Ok(ModuleHom::new(tensor(f.domain(), n)?, tensor(f.codomain(), n)?, map).expect("tensoring preserves well-definedness"))
}

/// `M ⊗ f`.
pub fn tensor_hom_left(m: &FpModule, f: &ModuleHom) -> Result<ModuleHom, DerivedError> {
    let map = Matrix::identity(m.ring(), m.generators()).kronecker(f.map());
    Ok(ModuleHom::new(tensor(m, f.domain())?, tensor(m, f.codomain())?, map).expect("tensoring preserves well-definedness"))
}

/// `C ⊗ N` degreewise.
pub fn apply_tensor_to_complex(c: &ChainComplex, n: &FpModule) -> Result<ChainComplex, DerivedError> {
    let modules = c.degrees().map(|k| tensor(c.module(k), n)).collect::<Result<Vec<_>, _>>()?;
    let homs = (c.lo() + 1..=c.hi()).map(|k| tensor_hom(&c.boundary(k), n)).collect::<Result<Vec<_>, _>>()?;
    Ok(ChainComplex::from_homs(c.ring(), c.lo(), modules, homs)?)
}

/// `M ⊗ C` degreewise.
pub fn apply_tensor_left(m: &FpModule, c: &ChainComplex) -> Result<ChainComplex, DerivedError> {
    let modules = c.degrees().map(|k| tensor(m, c.module(k))).collect::<Result<Vec<_>, _>>()?;
    let homs = (c.lo() + 1..=c.hi()).map(|k| tensor_hom_left(m, &c.boundary(k))).collect::<Result<Vec<_>, _>>()?;
    Ok(ChainComplex::from_homs(c.ring(), c.lo(), modules, homs)?)
}

/// `u ⊗ N` between the tensored complexes.
pub fn tensor_chain_map(u: &ChainMap, n: &FpModule) -> Result<ChainMap, DerivedError> {
    let src = apply_tensor_to_complex(u.source(), n)?;
    let tgt = apply_tensor_to_complex(u.target(), n)?;
    let levels = u
        .levels()
        .iter()
        .map(|(&k, h)| {
            let map = h.map().kronecker(&Matrix::identity(n.ring(), n.generators()));
            (k, ModuleHom::new(src.module(k).clone(), tgt.module(k).clone(), map).expect("tensoring preserves well-definedness"))
        })
        .collect();
    Ok(ChainMap::from_homs(&src, &tgt, levels)?)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ResolveSide {
    Left,
    #[default]
    Right,
}

#[derive(Clone, Debug)]
pub struct TorRequest {
    pub left: FpModule,
    pub right: FpModule,
    pub degree: usize,
    pub resolve_side: ResolveSide,
}

impl TorRequest {
    pub fn new(left: &FpModule, right: &FpModule, degree: usize) -> Self {
        TorRequest {
            left: left.clone(),
            right: right.clone(),
            degree,
            resolve_side: ResolveSide::default(),
        }
    }

    pub fn side(mut self, side: ResolveSide) -> Self {
        self.resolve_side = side;
        self
    }
}

/// `Tor_i(M, N)`: homology at `i` of `M ⊗ P_N` (or `P_M ⊗ N`).
pub fn tor(req: &TorRequest) -> Result<FpModule, DerivedError> {
    same_ring(&req.left, &req.right)?;
    let i = req.degree;
    let tensored = match req.resolve_side {
        ResolveSide::Right => apply_tensor_left(&req.left, &free_resolution(&req.right, i + 1).complex())?,
        ResolveSide::Left => apply_tensor_to_complex(&free_resolution(&req.left, i + 1).complex(), &req.right)?,
    };
    Ok(tensored.homology_module(i as i64))
}

/// Tor computed from a caller-supplied resolution of the left module.
pub fn tor_from_resolution(p: &Resolution, n: &FpModule, i: usize) -> Result<FpModule, DerivedError> {
    Ok(apply_tensor_to_complex(&p.complex(), n)?.homology_module(i as i64))
}

/// `Tor_i(f, N) : Tor_i(M, N) -> Tor_i(M', N)` through the canonical resolutions.
pub fn tor_hom(f: &ModuleHom, n: &FpModule, i: usize) -> Result<ModuleHom, DerivedError> {
    let p = free_resolution(f.domain(), i + 1);
    let q = free_resolution(f.codomain(), i + 1);
    tor_hom_via(f, n, i, &p, &q)
}

/// `Tor_i(f, N)` through the given resolutions of the domain and codomain of `f`.
pub fn tor_hom_via(f: &ModuleHom, n: &FpModule, i: usize, p: &Resolution, q: &Resolution) -> Result<ModuleHom, DerivedError> {
    let u = lift_between_resolutions(f, p, q)?;
    Ok(induced_on_homology(&tensor_chain_map(&u, n)?, i as i64))
}

/// Resolutions of `A`, `B`, `C` assembled into a levelwise split short exact
/// sequence of complexes (horseshoe construction), `B`'s built from the others.
pub fn horseshoe(ses: &ShortExactSeqModules, depth: usize) -> Result<ShortExactSeqComplexes, DerivedError> {
    let ring = ses.a.ring().clone();
    let pa = free_resolution(&ses.a, depth).truncated(depth);
    let pc = free_resolution(&ses.c, depth).truncated(depth);
    let ra = |i: usize| pa.term(i).generators();
    let rc = |i: usize| pc.term(i).generators();

    let h0 = lift_through_surjection(&pc.augmentation, &ses.g)?.expect("P_0 is free");
    let fe = pa.augmentation.then(&ses.f);
    let target = h0.map() * pc.map(1).map();
    let mut lambdas = vec![fe.preimage(&-&target).expect("image lies in ker g = im f")];
    for i in 2..=depth {
        let rhs = -&(&lambdas[i - 2] * pc.map(i).map());
        let lam = pa.map(i - 1).preimage(&rhs).expect("resolution of A is exact");
        lambdas.push(lam);
    }

    let mut b_modules = Vec::new();
    let mut b_maps = Vec::new();
    for i in 0..=depth {
        b_modules.push(FpModule::free(&ring, ra(i) + rc(i)));
        if i >= 1 {
            let mut d = Matrix::zeros(&ring, ra(i - 1) + rc(i - 1), ra(i) + rc(i));
            d.paste(0, 0, pa.map(i).map());
            d.paste(0, ra(i), &lambdas[i - 1]);
            d.paste(ra(i - 1), ra(i), pc.map(i).map());
            b_maps.push(d);
        }
    }
    let b = ChainComplex::new(&ring, 0, b_modules, b_maps)?;
    let a = pa.complex().widened(0, depth as i64);
    let c = pc.complex().widened(0, depth as i64);
    let mut f_levels = BTreeMap::new();
    let mut g_levels = BTreeMap::new();
    for i in 0..=depth {
        let incl = Matrix::from_fn(&ring, ra(i) + rc(i), ra(i), |r, s| BigInt::from((r == s) as i32));
        let proj = Matrix::from_fn(&ring, rc(i), ra(i) + rc(i), |r, s| BigInt::from((s == ra(i) + r) as i32));
        f_levels.insert(i as i64, incl);
        g_levels.insert(i as i64, proj);
    }
    let f = ChainMap::new(&a, &b, f_levels)?;
    let g = ChainMap::new(&b, &c, g_levels)?;
    debug_assert!({
        let mut aug = Matrix::zeros(&ring, ses.b.generators(), ra(0) + rc(0));
        aug.paste(0, 0, fe.map());
        aug.paste(0, ra(0), h0.map());
        let eps = ModuleHom::new(b.module(0).clone(), ses.b.clone(), aug).expect("well defined");
        let maps = (1..=depth).map(|i| b.boundary(i as i64)).collect();
        Resolution::from_parts(eps, maps).is_ok()
    });
    Ok(ShortExactSeqComplexes::new(f, g)?)
}

/// `Tor_{k+1}(C, N) -> Tor_k(A, N) -> Tor_k(B, N) -> Tor_k(C, N) -> ... -> C ⊗ N -> 0`
/// with `k = up_to`, machine-checked exact at every node after the first.
pub fn tor_les(ses: &ShortExactSeqModules, n: &FpModule, up_to: usize) -> Result<LongExactSequence, DerivedError> {
    let depth = up_to + 2;
    let resolved = horseshoe(ses, depth)?;
    let tensored = ShortExactSeqComplexes::new(
        tensor_chain_map(&resolved.f, n)?,
        tensor_chain_map(&resolved.g, n)?,
    )?;
    let les = long_exact_sequence(&tensored)?;
    let start = les.position(LesSlot::C(up_to as i64 + 1)).expect("degree is in the window");
    Ok(les.tail(start))
}

/// `{m in M : x m = 0}`.
pub fn torsion_part(m: &FpModule, x: &BigInt) -> FpModule {
    let times = ModuleHom::new(m.clone(), m.clone(), Matrix::identity(m.ring(), m.generators()).scale(x))
        .expect("scalar multiplication is well defined");
    times.kernel().0.reduced().module
}

/// `(aZ ∩ bZ) / abZ` as a submodule of `Z/ab`.
pub fn ideal_quotient_module(a: &BigInt, b: &BigInt) -> FpModule {
    let z = RingSpec::Integers;
    let ab = a * b;
    let lcm = a.lcm(b);
    let ambient = FpModule::cyclic(&z, ab);
    ambient.submodule(&Matrix::scalar(&z, lcm)).0.reduced().module
}

/// Both sides of the universal coefficient formula at degree `n`:
/// `H_n(C ⊗ G)` and `H_n(C) ⊗ G ⊕ Tor_1(H_{n-1}(C), G)`.
pub fn universal_coefficient_sides(c: &ChainComplex, g: &FpModule, n: i64) -> Result<(FpModule, FpModule), DerivedError> {
    let lhs = apply_tensor_to_complex(c, g)?.homology_module(n);
    let t0 = tensor(&c.homology_module(n), g)?;
    let t1 = tor(&TorRequest::new(&c.homology_module(n - 1), g, 1))?;
    let rhs = crate::fpmod::direct_sum(&t0, &t1).expect("same ring").module;
    Ok((lhs, rhs))
}
