//! Seeded random generators and the named fixtures used by the report,
//! the examples and the test suites.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::{direct_sum_complex, ChainComplex, ChainMap};
use crate::diagram::{ShortExactSeqComplexes, ShortExactSeqModules};
use crate::exactlin::{LinearSystem, Matrix, RingSpec, Unknown};
use crate::fpmod::{FpModule, ModuleHom};
use crate::homotopy::DegreeRaisingMaps;

pub type FixtureRng = ChaCha8Rng;

pub fn rng(seed: u64) -> FixtureRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut FixtureRng, ring: &RingSpec, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(ring, rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// A random invertible matrix and its inverse, as products of elementary operations.
pub fn random_unimodular(rng: &mut FixtureRng, ring: &RingSpec, n: usize, steps: usize) -> (Matrix, Matrix) {
    let mut u = Matrix::identity(ring, n);
    let mut inv = Matrix::identity(ring, n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            u = -&u;
            inv = -&inv;
        }
        return (u, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let k = BigInt::from(rng.gen_range(-2..=2));
        // row_i += k row_j on u, col_j -= k col_i on the inverse
        let mut e = Matrix::identity(ring, n);
        e.set(i, j, k.clone());
        let mut e_inv = Matrix::identity(ring, n);
        e_inv.set(i, j, -k);
        u = &e * &u;
        inv = &inv * &e_inv;
    }
    (u, inv)
}

/// Divisors `d` with `1 < d` usable as torsion orders over `ring`.
fn torsion_orders(ring: &RingSpec) -> Vec<BigInt> {
    match ring.modulus() {
        None => (2..=12).map(BigInt::from).collect(),
        Some(m) => {
            let m: u64 = m.try_into().unwrap_or(u64::MAX);
            (2..=m.min(64)).filter(|d| m.is_multiple_of(*d)).map(BigInt::from).collect()
        }
    }
}

/// A module with a handful of cyclic summands, presented in a scrambled basis.
pub fn random_module(rng: &mut FixtureRng, ring: &RingSpec, max_summands: usize) -> FpModule {
    let orders = torsion_orders(ring);
    let k = rng.gen_range(0..=max_summands);
    let mut diag = Vec::new();
    for _ in 0..k {
        if rng.gen_bool(0.35) || orders.is_empty() {
            diag.push(BigInt::zero());
        } else {
            diag.push(orders.choose(rng).expect("nonempty").clone());
        }
    }
    let g = diag.len();
    let rel = Matrix::from_fn(ring, g, g, |i, j| if i == j { diag[i].clone() } else { BigInt::zero() });
    let (u, _) = random_unimodular(rng, ring, g, 2 * g);
    let (v, _) = random_unimodular(rng, ring, g, 2 * g);
    FpModule::new((&(&u * &rel) * &v).without_zero_columns())
}

/// Integer combination of generators, coefficients in `-2..=2`.
fn combine(rng: &mut FixtureRng, basis: &[Matrix], zero: Matrix) -> Matrix {
    basis.iter().fold(zero, |acc, b| {
        let k = BigInt::from(rng.gen_range(-2..=2));
        &acc + &b.scale(&k)
    })
}

/// Registers `S : from -> to` constrained to be well defined.
fn hom_unknown(sys: &mut LinearSystem, ring: &RingSpec, from: &FpModule, to: &FpModule) -> Unknown {
    let s = sys.unknown(to.generators(), from.generators());
    let rf = from.relations();
    if rf.cols() > 0 && to.generators() > 0 {
        let x = sys.unknown(to.relations().cols(), rf.cols());
        sys.equation(
            vec![
                (Matrix::identity(ring, to.generators()), s, rf.clone()),
                (-to.relations(), x, Matrix::identity(ring, rf.cols())),
            ],
            Matrix::zeros(ring, to.generators(), rf.cols()),
        );
    }
    s
}

/// A random well-defined hom.
pub fn random_hom(rng: &mut FixtureRng, from: &FpModule, to: &FpModule) -> ModuleHom {
    let ring = from.ring().clone();
    let mut sys = LinearSystem::new(&ring);
    let s = hom_unknown(&mut sys, &ring, from, to);
    let basis: Vec<Matrix> = sys.homogeneous_basis().iter().map(|b| b.value(s).clone()).collect();
    let map = combine(rng, &basis, Matrix::zeros(&ring, to.generators(), from.generators()));
    ModuleHom::new(from.clone(), to.clone(), map).expect("sampled from well-defined maps")
}

/// A random chain map, sampled from the solution lattice of the
/// well-definedness and commuting conditions.
pub fn random_chain_map(rng: &mut FixtureRng, x: &ChainComplex, y: &ChainComplex) -> ChainMap {
    let ring = x.ring().clone();
    let lo = x.lo().max(y.lo());
    let hi = x.hi().min(y.hi());
    let mut sys = LinearSystem::new(&ring);
    let mut us = BTreeMap::new();
    for n in lo..=hi {
        us.insert(n, hom_unknown(&mut sys, &ring, x.module(n), y.module(n)));
    }
    for n in lo..=hi + 1 {
        // d^Y_n u_n - u_{n-1} d^X_n ≡ 0 modulo the relations of Y_{n-1}
        let (gy, gx) = (y.module(n - 1).generators(), x.module(n).generators());
        let mut terms = Vec::new();
        if let Some(&u) = us.get(&n) {
            terms.push((y.boundary(n).map().clone(), u, Matrix::identity(&ring, gx)));
        }
        if let Some(&u) = us.get(&(n - 1)) {
            terms.push((-&Matrix::identity(&ring, gy), u, x.boundary(n).map().clone()));
        }
        if terms.is_empty() || gy == 0 || gx == 0 {
            continue;
        }
        let rel = y.module(n - 1).relations();
        if rel.cols() > 0 {
            let w = sys.unknown(rel.cols(), gx);
            terms.push((-rel, w, Matrix::identity(&ring, gx)));
        }
        sys.equation(terms, Matrix::zeros(&ring, gy, gx));
    }
    let basis = sys.homogeneous_basis();
    // one coefficient per basis vector, shared across degrees
    let coeffs: Vec<BigInt> = (0..basis.len()).map(|_| BigInt::from(rng.gen_range(-2..=2))).collect();
    let levels = us
        .iter()
        .map(|(&n, &u)| {
            let zero = Matrix::zeros(&ring, y.module(n).generators(), x.module(n).generators());
            let m = basis.iter().zip(&coeffs).fold(zero, |acc, (b, k)| &acc + &b.value(u).scale(k));
            (n, m)
        })
        .collect();
    ChainMap::new(x, y, levels).expect("sampled from chain maps")
}

/// Random well-defined maps `s_n : X_n -> Y_{n+1}`.
pub fn random_raising(rng: &mut FixtureRng, x: &ChainComplex, y: &ChainComplex) -> DegreeRaisingMaps {
    let levels = x
        .degrees()
        .map(|n| (n, random_hom(rng, x.module(n), y.module(n + 1)).map().clone()))
        .collect();
    DegreeRaisingMaps::new(x, y, levels).expect("well-defined levels")
}

/// Building blocks for random complexes; `top` is the highest degree used.
#[derive(Clone, Debug)]
pub enum Piece {
    /// `R -1-> R`: split exact.
    Split { top: i64 },
    /// `R -a-> R -> R/a` over Z: exact, not split for `|a| > 1`.
    Resolution { top: i64, a: BigInt },
    /// `Z/a -b-> Z/ab -> Z/b`: exact.
    Torsion { top: i64, a: BigInt, b: BigInt },
    /// `R -k-> R`: not exact unless `k` is a unit.
    Times { top: i64, k: BigInt },
    /// A single module.
    Lone { top: i64, module: FpModule },
}

impl Piece {
    pub fn complex(&self, ring: &RingSpec) -> ChainComplex {
        let r = FpModule::free(ring, 1);
        let (top, modules, maps): (i64, Vec<FpModule>, Vec<Matrix>) = match self {
            Piece::Split { top } => (*top, vec![r.clone(), r], vec![Matrix::scalar(ring, 1)]),
            Piece::Resolution { top, a } => (
                *top,
                vec![FpModule::cyclic(ring, a.clone()), r.clone(), r],
                vec![Matrix::scalar(ring, 1), Matrix::scalar(ring, a.clone())],
            ),
            Piece::Torsion { top, a, b } => (
                *top,
                vec![
                    FpModule::cyclic(ring, b.clone()),
                    FpModule::cyclic(ring, a * b),
                    FpModule::cyclic(ring, a.clone()),
                ],
                vec![Matrix::scalar(ring, 1), Matrix::scalar(ring, b.clone())],
            ),
            Piece::Times { top, k } => (*top, vec![r.clone(), r], vec![Matrix::scalar(ring, k.clone())]),
            Piece::Lone { top, module } => (*top, vec![module.clone()], vec![]),
        };
        let lo = top - modules.len() as i64 + 1;
        ChainComplex::new(ring, lo, modules, maps).expect("pieces are complexes")
    }

    pub fn is_exact(&self, ring: &RingSpec) -> bool {
        match self {
            Piece::Split { .. } | Piece::Resolution { .. } | Piece::Torsion { .. } => true,
            Piece::Times { k, .. } => ring.is_unit(k),
            Piece::Lone { module, .. } => module.is_zero(),
        }
    }
}

fn exact_piece(rng: &mut FixtureRng, ring: &RingSpec, top: i64) -> Piece {
    let orders = torsion_orders(ring);
    let pairs: Vec<(BigInt, BigInt)> = orders
        .iter()
        .flat_map(|a| orders.iter().map(move |b| (a.clone(), b.clone())))
        .filter(|(a, b)| ring.modulus().map_or(a * b <= BigInt::from(36), |m| (m % (a * b)).is_zero()))
        .collect();
    let choice = rng.gen_range(0..3);
    match choice {
        1 if ring.is_integers() => Piece::Resolution { top, a: orders.choose(rng).expect("orders").clone() },
        2 if !pairs.is_empty() => {
            let (a, b) = pairs.choose(rng).expect("pairs").clone();
            Piece::Torsion { top, a, b }
        }
        _ => Piece::Split { top },
    }
}

fn inexact_piece(rng: &mut FixtureRng, ring: &RingSpec, top: i64) -> Piece {
    if rng.gen_bool(0.5) {
        let ks: Vec<BigInt> = std::iter::once(BigInt::zero()).chain(torsion_orders(ring)).collect();
        Piece::Times { top, k: ks.choose(rng).expect("nonempty").clone() }
    } else {
        let mut module = random_module(rng, ring, 2);
        while module.is_zero() {
            module = random_module(rng, ring, 2);
        }
        Piece::Lone { top, module }
    }
}

/// Random element of `{Z, Z/4, Z/6, Z/8, Z/12}`, mostly Z.
pub fn random_ring(rng: &mut FixtureRng) -> RingSpec {
    let m = [0, 0, 0, 4, 6, 8, 12].choose(rng).copied().expect("nonempty");
    if m == 0 {
        RingSpec::Integers
    } else {
        RingSpec::zmod(m).expect("valid modulus")
    }
}

/// Direct sum of the pieces, then a random change of basis in every degree.
pub fn assemble(rng: &mut FixtureRng, ring: &RingSpec, pieces: &[Piece]) -> ChainComplex {
    let sum = pieces
        .iter()
        .map(|p| p.complex(ring))
        .fold(ChainComplex::zero_complex(ring), |acc, c| direct_sum_complex(&acc, &c).expect("same ring"));
    rebase(rng, &sum).complex
}

/// An isomorphic copy of a complex in scrambled bases.
pub struct Rebased {
    pub complex: ChainComplex,
    pub to_new: ChainMap,
    pub to_old: ChainMap,
}

pub fn rebase(rng: &mut FixtureRng, c: &ChainComplex) -> Rebased {
    let ring = c.ring().clone();
    let mut us = BTreeMap::new();
    let mut modules = Vec::new();
    for n in c.degrees() {
        let g = c.module(n).generators();
        let (u, inv) = random_unimodular(rng, &ring, g, 3 * g);
        modules.push(FpModule::new(&u * c.module(n).relations()));
        us.insert(n, (u, inv));
    }
    let maps = (c.lo() + 1..=c.hi())
        .map(|n| &(&us[&(n - 1)].0 * c.boundary(n).map()) * &us[&n].1)
        .collect();
    let copy = ChainComplex::new(&ring, c.lo(), modules, maps).expect("conjugate of a complex");
    let to_new = ChainMap::new(c, &copy, us.iter().map(|(&n, (u, _))| (n, u.clone())).collect()).expect("base change");
    let to_old = ChainMap::new(&copy, c, us.into_iter().map(|(n, (_, v))| (n, v)).collect()).expect("inverse base change");
    Rebased { complex: copy, to_new, to_old }
}

/// A random complex that is exact by construction.
pub fn random_exact_complex(rng: &mut FixtureRng, ring: &RingSpec) -> ChainComplex {
    let count = rng.gen_range(1..=3);
    let pieces: Vec<Piece> = (0..count)
        .map(|_| {
            let top = rng.gen_range(1..=3);
            exact_piece(rng, ring, top)
        })
        .collect();
    assemble(rng, ring, &pieces)
}

/// An exact construction with one or two pieces swapped for arbitrary ones.
pub fn random_perturbed_complex(rng: &mut FixtureRng, ring: &RingSpec) -> ChainComplex {
    let count = rng.gen_range(1..=3);
    let mut pieces: Vec<Piece> = (0..count)
        .map(|_| {
            let top = rng.gen_range(1..=3);
            exact_piece(rng, ring, top)
        })
        .collect();
    for _ in 0..rng.gen_range(1..=2) {
        let top = rng.gen_range(0..=3);
        pieces.push(inexact_piece(rng, ring, top));
    }
    assemble(rng, ring, &pieces)
}

/// Exact or perturbed with equal probability.
pub fn random_complex(rng: &mut FixtureRng, ring: &RingSpec) -> ChainComplex {
    if rng.gen_bool(0.5) {
        random_exact_complex(rng, ring)
    } else {
        random_perturbed_complex(rng, ring)
    }
}

/// `0 -> Y -> Cone(u) -> X[-1] -> 0` for `u : X -> Y`, where
/// `Cone(u)_n = Y_n ⊕ X_{n-1}` with `d = [[d_Y, u], [0, -d_X]]`.
pub fn cone_ses(u: &ChainMap) -> ShortExactSeqComplexes {
    let (x, y) = (u.source(), u.target());
    let ring = x.ring().clone();
    let lo = x.lo().min(y.lo());
    let hi = (x.hi() + 1).max(y.hi());
    let gy = |n: i64| y.module(n).generators();
    let gx = |n: i64| x.module(n).generators();
    let cone_mod = |n: i64| crate::fpmod::direct_sum(y.module(n), x.module(n - 1)).expect("same ring").module;
    let shift_mod = |n: i64| x.module(n - 1).clone();
    let cone_d = |n: i64| {
        let mut d = Matrix::zeros(&ring, gy(n - 1) + gx(n - 2), gy(n) + gx(n - 1));
        d.paste(0, 0, y.boundary(n).map());
        d.paste(0, gy(n), u.level(n - 1).map());
        d.paste(gy(n - 1), gy(n), &-x.boundary(n - 1).map());
        d
    };
    let cone = ChainComplex::new(&ring, lo, (lo..=hi).map(cone_mod).collect(), (lo + 1..=hi).map(cone_d).collect())
        .expect("cone of a chain map is a complex");
    let shifted = ChainComplex::new(
        &ring,
        lo,
        (lo..=hi).map(shift_mod).collect(),
        (lo + 1..=hi).map(|n| -x.boundary(n - 1).map()).collect(),
    )
    .expect("shift of a complex");
    let yw = y.widened(lo, hi);
    let f = (lo..=hi)
        .map(|n| (n, Matrix::from_fn(&ring, gy(n) + gx(n - 1), gy(n), |i, j| BigInt::from((i == j) as i32))))
        .collect();
    let g = (lo..=hi)
        .map(|n| (n, Matrix::from_fn(&ring, gx(n - 1), gy(n) + gx(n - 1), |i, j| BigInt::from((j == gy(n) + i) as i32))))
        .collect();
    let f = ChainMap::new(&yw, &cone, f).expect("inclusion into the cone");
    let g = ChainMap::new(&cone, &shifted, g).expect("projection from the cone");
    ShortExactSeqComplexes::new(f, g).expect("cone sequence is short exact")
}

/// A short exact sequence of complexes with scrambled middle term.
pub fn random_ses_complexes(rng: &mut FixtureRng, ring: &RingSpec) -> ShortExactSeqComplexes {
    let x = random_complex(rng, ring);
    let y = random_complex(rng, ring);
    let u = random_chain_map(rng, &x, &y);
    let ses = cone_ses(&u);
    let re = rebase(rng, &ses.b);
    let f = retarget(&ses.f.then(&re.to_new), &ses.a, &re.complex);
    let g = retarget(&re.to_old.then(&ses.g), &re.complex, &ses.c);
    ShortExactSeqComplexes::new(f, g).expect("isomorphic to a short exact sequence")
}

/// The same level matrices viewed between the given complexes.
fn retarget(u: &ChainMap, source: &ChainComplex, target: &ChainComplex) -> ChainMap {
    let levels = u.levels().iter().map(|(n, h)| (*n, h.map().clone())).collect();
    ChainMap::new(source, target, levels).expect("levels already commute")
}

/// `0 -> A -> B -> B/A -> 0` for a random `B` and a random submodule `A`.
pub fn random_ses_modules(rng: &mut FixtureRng, ring: &RingSpec) -> ShortExactSeqModules {
    let b = random_module(rng, ring, 3);
    let k = rng.gen_range(0..=2);
    let gens = random_matrix(rng, ring, b.generators(), k, 3);
    let (_, f) = b.submodule(&gens);
    let (_, g) = b.quotient(&gens);
    ShortExactSeqModules::new(f, g).expect("submodule and quotient form a short exact sequence")
}
