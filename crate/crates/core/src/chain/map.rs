use std::collections::BTreeMap;
use std::fmt;

use super::{ChainComplex, ChainError};
use crate::exactlin::Matrix;
use crate::fpmod::ModuleHom;

/// Levelwise homs `u_n : C_n -> D_n` commuting with the boundaries.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    levels: BTreeMap<i64, ModuleHom>,
}

impl fmt::Debug for ChainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChainMap")
            .field("source", &self.source)
            .field("target", &self.target)
            .field("levels", &self.levels.iter().map(|(n, h)| (n, h.map())).collect::<Vec<_>>())
            .finish()
    }
}

impl ChainMap {
    /// Validated construction from level matrices (missing degrees are zero).
    pub fn new(
        source: &ChainComplex,
        target: &ChainComplex,
        levels: BTreeMap<i64, Matrix>,
    ) -> Result<Self, ChainError> {
        let mut homs = BTreeMap::new();
        for (n, m) in levels {
            let h = ModuleHom::new(source.module(n).clone(), target.module(n).clone(), m)
                .map_err(|source| ChainError::Module { degree: n, source })?;
            homs.insert(n, h);
        }
        ChainMap::from_homs(source, target, homs)
    }

    pub fn from_homs(
        source: &ChainComplex,
        target: &ChainComplex,
        levels: BTreeMap<i64, ModuleHom>,
    ) -> Result<Self, ChainError> {
        if source.ring() != target.ring() {
            return Err(ChainError::RingMismatch(source.ring().clone(), target.ring().clone()));
        }
        for (&n, h) in &levels {
            if h.domain() != source.module(n) || h.codomain() != target.module(n) {
                return Err(ChainError::Shape(format!("level {n} does not connect C_{n} to D_{n}")));
            }
        }
        let u = ChainMap {
            source: source.clone(),
            target: target.clone(),
            levels,
        };
        if let Some(n) = u.first_failing_square() {
            return Err(ChainError::SquareFails(n));
        }
        Ok(u)
    }

    /// Degree `n` where `d'_n ∘ u_n ≠ u_{n-1} ∘ d_n`, if any.
    pub fn first_failing_square(&self) -> Option<i64> {
        let (lo, hi) = self.window();
        (lo..=hi + 1).find(|&n| {
            let left = self.level(n).then(&self.target.boundary(n));
            let right = self.source.boundary(n).then(&self.level(n - 1));
            !left.equals(&right)
        })
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let levels = c.degrees().map(|n| (n, ModuleHom::identity(c.module(n)))).collect();
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            levels,
        }
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> Self {
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            levels: BTreeMap::new(),
        }
    }

    /// Explicitly stored levels; absent degrees are zero.
    pub fn levels(&self) -> &BTreeMap<i64, ModuleHom> {
        &self.levels
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    /// Degrees where either complex can be nonzero.
    pub fn window(&self) -> (i64, i64) {
        (
            self.source.lo().min(self.target.lo()),
            self.source.hi().max(self.target.hi()),
        )
    }

    pub fn level(&self, n: i64) -> ModuleHom {
        self.levels
            .get(&n)
            .cloned()
            .unwrap_or_else(|| ModuleHom::zero(self.source.module(n), self.target.module(n)))
    }

    /// `v ∘ self`. Panics if `v` does not start at `self.target()`.
    pub fn then(&self, v: &ChainMap) -> ChainMap {
        assert!(self.target == v.source, "chain maps are not composable");
        let (lo, hi) = self.window();
        let (lo2, hi2) = v.window();
        let levels = (lo.min(lo2)..=hi.max(hi2))
            .map(|n| (n, self.level(n).then(&v.level(n))))
            .collect();
        ChainMap {
            source: self.source.clone(),
            target: v.target.clone(),
            levels,
        }
    }

    fn zip_with(&self, other: &ChainMap, f: impl Fn(&ModuleHom, &ModuleHom) -> ModuleHom) -> ChainMap {
        assert!(
            self.source == other.source && self.target == other.target,
            "chain maps are not parallel"
        );
        let (lo, hi) = self.window();
        let levels = (lo..=hi).map(|n| (n, f(&self.level(n), &other.level(n)))).collect();
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            levels,
        }
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        self.zip_with(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        self.zip_with(other, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> ChainMap {
        self.zip_with(self, |a, _| a.neg())
    }

    /// Equality as maps at every degree.
    pub fn equals(&self, other: &ChainMap) -> bool {
        let (lo, hi) = self.window();
        self.source == other.source
            && self.target == other.target
            && (lo..=hi).all(|n| self.level(n).equals(&other.level(n)))
    }
}
