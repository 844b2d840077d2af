//! Splittings, null-homotopies, chain homotopies and homotopy equivalences.
//!
//! Every existence question here is one joint linear system over the base
//! ring: the unknowns are the matrices of all the `s_n`, plus auxiliary
//! unknowns that certify each `s_n` is well defined on the presented modules
//! and that each identity holds modulo the target relations.

use std::collections::BTreeMap;

use crate::chain::{ChainComplex, ChainError, ChainMap};
use crate::exactlin::{LinearSystem, Matrix, Unknown};
use crate::fpmod::ModuleHom;

/// Maps `s_n : C_n -> D_{n+1}`; no commuting condition.
#[derive(Clone, Debug)]
pub struct DegreeRaisingMaps {
    source: ChainComplex,
    target: ChainComplex,
    levels: BTreeMap<i64, ModuleHom>,
}

impl DegreeRaisingMaps {
    pub fn new(
        source: &ChainComplex,
        target: &ChainComplex,
        levels: BTreeMap<i64, Matrix>,
    ) -> Result<Self, ChainError> {
        let mut homs = BTreeMap::new();
        for (n, m) in levels {
            let h = ModuleHom::new(source.module(n).clone(), target.module(n + 1).clone(), m)
                .map_err(|source| ChainError::Module { degree: n, source })?;
            homs.insert(n, h);
        }
        Ok(DegreeRaisingMaps {
            source: source.clone(),
            target: target.clone(),
            levels: homs,
        })
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> Self {
        DegreeRaisingMaps {
            source: source.clone(),
            target: target.clone(),
            levels: BTreeMap::new(),
        }
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn levels(&self) -> &BTreeMap<i64, ModuleHom> {
        &self.levels
    }

    pub fn level(&self, n: i64) -> ModuleHom {
        self.levels.get(&n).cloned().unwrap_or_else(|| {
            ModuleHom::zero(self.source.module(n), self.target.module(n + 1))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.levels.values().all(|h| h.is_zero())
    }

    /// `d_{n+1} s_n + s_{n-1} d_n` at degree `n`.
    fn commutator_at(&self, n: i64) -> ModuleHom {
        let a = self.level(n).then(&self.target.boundary(n + 1));
        let b = self.source.boundary(n).then(&self.level(n - 1));
        a.add(&b)
    }

    /// `ds + sd` as a chain map (it always is one).
    pub fn boundary_commutator(&self) -> Result<ChainMap, ChainError> {
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        let levels = (lo..=hi).map(|n| (n, self.commutator_at(n))).collect();
        ChainMap::from_homs(&self.source, &self.target, levels)
    }
}

fn window(f: &ChainMap) -> (i64, i64) {
    f.window()
}

/// `f_n = d_{n+1} s_n + s_{n-1} d_n` at every degree, as hom equality.
pub fn verify_null_homotopy(f: &ChainMap, s: &DegreeRaisingMaps) -> bool {
    if f.source() != s.source() || f.target() != s.target() {
        return false;
    }
    let (lo, hi) = window(f);
    (lo..=hi + 1).all(|n| f.level(n).equals(&s.commutator_at(n)))
}

/// Registers `S : from -> to` with its well-definedness witness
/// `S * R_from = R_to * X`.
fn well_defined_unknown(
    sys: &mut LinearSystem,
    from: &crate::fpmod::FpModule,
    to: &crate::fpmod::FpModule,
) -> Unknown {
    let ring = from.ring().clone();
    let s = sys.unknown(to.generators(), from.generators());
    let (r_from, r_to) = (from.relations(), to.relations());
    if r_from.cols() > 0 && to.generators() > 0 {
        let x = sys.unknown(r_to.cols(), r_from.cols());
        sys.equation(
            vec![
                (Matrix::identity(&ring, to.generators()), s, r_from.clone()),
                (-r_to, x, Matrix::identity(&ring, r_from.cols())),
            ],
            Matrix::zeros(&ring, to.generators(), r_from.cols()),
        );
    }
    s
}

/// Adds `sum terms ≡ rhs` modulo the relations of `target` (one slack unknown).
fn equation_mod(
    sys: &mut LinearSystem,
    mut terms: Vec<(Matrix, Unknown, Matrix)>,
    rhs: Matrix,
    target: &crate::fpmod::FpModule,
) {
    let ring = rhs.ring().clone();
    let rel = target.relations();
    if rel.cols() > 0 && rhs.cols() > 0 {
        let y = sys.unknown(rel.cols(), rhs.cols());
        terms.push((-rel, y, Matrix::identity(&ring, rhs.cols())));
    }
    sys.equation(terms, rhs);
}

/// Some `s` with `f = ds + sd`, or `None` if `f` is not null-homotopic.
pub fn find_null_homotopy(f: &ChainMap) -> Option<DegreeRaisingMaps> {
    let (c, d) = (f.source(), f.target());
    let ring = c.ring().clone();
    let (lo, hi) = window(f);
    let mut sys = LinearSystem::new(&ring);
    let mut unknowns = BTreeMap::new();
    for n in lo - 1..=hi {
        let u = well_defined_unknown(&mut sys, c.module(n), d.module(n + 1));
        unknowns.insert(n, u);
    }
    for n in lo..=hi {
        let dd = d.boundary(n + 1);
        let dc = c.boundary(n);
        let terms = vec![
            (dd.map().clone(), unknowns[&n], Matrix::identity(&ring, c.module(n).generators())),
            (Matrix::identity(&ring, d.module(n).generators()), unknowns[&(n - 1)], dc.map().clone()),
        ];
        equation_mod(&mut sys, terms, f.level(n).map().clone(), d.module(n));
    }
    let sol = sys.solve()?;
    let levels = unknowns
        .iter()
        .map(|(&n, &u)| {
            let h = ModuleHom::new(c.module(n).clone(), d.module(n + 1).clone(), sol.value(u).clone())
                .expect("well-definedness is part of the system");
            (n, h)
        })
        .collect();
    let s = DegreeRaisingMaps {
        source: c.clone(),
        target: d.clone(),
        levels,
    };
    debug_assert!(verify_null_homotopy(f, &s));
    Some(s)
}

/// A chain homotopy from `f` to `g`, i.e. a null-homotopy of `f - g`.
pub fn are_chain_homotopic(f: &ChainMap, g: &ChainMap) -> Option<DegreeRaisingMaps> {
    find_null_homotopy(&f.sub(g))
}

/// `d_n = d_n s_{n-1} d_n` at every degree.
pub fn verify_splitting(c: &ChainComplex, s: &DegreeRaisingMaps) -> bool {
    (c.lo()..=c.hi() + 1).all(|n| {
        let d = c.boundary(n);
        d.then(&s.level(n - 1)).then(&d).equals(&d)
    })
}

/// Maps `s_n : C_n -> C_{n+1}` with `d = d s d`, if they exist.
pub fn find_splitting(c: &ChainComplex) -> Option<DegreeRaisingMaps> {
    let ring = c.ring().clone();
    let mut sys = LinearSystem::new(&ring);
    let mut unknowns = BTreeMap::new();
    for n in c.lo()..c.hi() {
        unknowns.insert(n, well_defined_unknown(&mut sys, c.module(n), c.module(n + 1)));
    }
    for n in c.lo() + 1..=c.hi() {
        let d = c.boundary(n);
        let terms = vec![(d.map().clone(), unknowns[&(n - 1)], d.map().clone())];
        equation_mod(&mut sys, terms, d.map().clone(), c.module(n - 1));
    }
    let sol = sys.solve()?;
    let levels = unknowns
        .iter()
        .map(|(&n, &u)| {
            let h = ModuleHom::new(c.module(n).clone(), c.module(n + 1).clone(), sol.value(u).clone())
                .expect("well-definedness is part of the system");
            (n, h)
        })
        .collect();
    let s = DegreeRaisingMaps {
        source: c.clone(),
        target: c.clone(),
        levels,
    };
    debug_assert!(verify_splitting(c, &s));
    Some(s)
}

/// Split (a splitting exists) and exact.
pub fn is_split_exact(c: &ChainComplex) -> bool {
    c.is_exact() && find_splitting(c).is_some()
}

/// `q ∘ f ≃ id_C` witnessed by `s` and `f ∘ q ≃ id_D` witnessed by `t`
/// (homotopies from the composite to the identity).
pub fn verify_homotopy_equivalence(
    f: &ChainMap,
    q: &ChainMap,
    s: &DegreeRaisingMaps,
    t: &DegreeRaisingMaps,
) -> bool {
    if f.target() != q.source() || q.target() != f.source() {
        return false;
    }
    let qf = f.then(q).sub(&ChainMap::identity(f.source()));
    let fq = q.then(f).sub(&ChainMap::identity(f.target()));
    verify_null_homotopy(&qf, s) && verify_null_homotopy(&fq, t)
}
