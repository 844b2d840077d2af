use std::fmt;

use super::ChainError;
use crate::exactlin::{Matrix, RingSpec};
use crate::fpmod::{direct_sum, FpModule, ModuleHom};

#[derive(Clone, PartialEq, Eq)]
pub struct ChainComplex {
    ring: RingSpec,
    lo: i64,
    hi: i64,
    modules: Vec<FpModule>,
    /// `d_n` for `n` in `lo+1..=hi`, stored at `n - lo - 1`.
    boundaries: Vec<ModuleHom>,
    zero: FpModule,
}

impl fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainComplex over {} [{}..={}]:", self.ring, self.lo, self.hi)?;
        for n in (self.lo..=self.hi).rev() {
            write!(f, " C{}={}", n, self.module(n))?;
        }
        Ok(())
    }
}

impl ChainComplex {
    /// Validated construction from modules `C_lo..=C_hi` and boundary
    /// matrices `d_{lo+1}..=d_hi` (each `C_{n-1}.generators x C_n.generators`).
    pub fn new(
        ring: &RingSpec,
        lo: i64,
        modules: Vec<FpModule>,
        boundaries: Vec<Matrix>,
    ) -> Result<Self, ChainError> {
        if modules.is_empty() {
            return Err(ChainError::Shape("a complex needs at least one degree".into()));
        }
        if boundaries.len() != modules.len() - 1 {
            return Err(ChainError::Shape(format!(
                "{} modules need {} boundary maps, got {}",
                modules.len(),
                modules.len() - 1,
                boundaries.len()
            )));
        }
        let homs = boundaries
            .into_iter()
            .enumerate()
            .map(|(k, m)| {
                let n = lo + 1 + k as i64;
                let idx = k + 1;
                ModuleHom::new(modules[idx].clone(), modules[idx - 1].clone(), m)
                    .map_err(|source| ChainError::Module { degree: n, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        ChainComplex::from_homs(ring, lo, modules, homs)
    }

    /// Construction from ready-made boundary homs; checks `d∘d = 0`.
    pub fn from_homs(
        ring: &RingSpec,
        lo: i64,
        modules: Vec<FpModule>,
        boundaries: Vec<ModuleHom>,
    ) -> Result<Self, ChainError> {
        if modules.is_empty() || boundaries.len() + 1 != modules.len() {
            return Err(ChainError::Shape("module/boundary counts disagree".into()));
        }
        for m in &modules {
            if m.ring() != ring {
                return Err(ChainError::RingMismatch(ring.clone(), m.ring().clone()));
            }
        }
        for (k, d) in boundaries.iter().enumerate() {
            if d.domain() != &modules[k + 1] || d.codomain() != &modules[k] {
                return Err(ChainError::Shape(format!(
                    "boundary at degree {} does not connect the stored modules",
                    lo + 1 + k as i64
                )));
            }
        }
        let c = ChainComplex {
            ring: ring.clone(),
            lo,
            hi: lo + modules.len() as i64 - 1,
            modules,
            boundaries,
            zero: FpModule::zero(ring),
        };
        if let Some(n) = c.first_nonzero_square() {
            return Err(ChainError::NotAComplex(n));
        }
        Ok(c)
    }

    /// Degree `n` with `d_{n-1} ∘ d_n ≠ 0`, if any.
    pub fn first_nonzero_square(&self) -> Option<i64> {
        (self.lo + 2..=self.hi).find(|&n| !self.boundary(n).then(&self.boundary(n - 1)).is_zero())
    }

    pub fn zero_complex(ring: &RingSpec) -> Self {
        ChainComplex::from_homs(ring, 0, vec![FpModule::zero(ring)], vec![]).expect("zero complex")
    }

    /// A single module placed in degree `n`.
    pub fn concentrated(m: &FpModule, n: i64) -> Self {
        ChainComplex::from_homs(m.ring(), n, vec![m.clone()], vec![]).expect("one-term complex")
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    pub fn module(&self, n: i64) -> &FpModule {
        if n < self.lo || n > self.hi {
            &self.zero
        } else {
            &self.modules[(n - self.lo) as usize]
        }
    }

    /// `d_n : C_n -> C_{n-1}` (the zero map outside the stored window).
    pub fn boundary(&self, n: i64) -> ModuleHom {
        if n > self.lo && n <= self.hi {
            self.boundaries[(n - self.lo - 1) as usize].clone()
        } else {
            ModuleHom::zero(self.module(n), self.module(n - 1))
        }
    }

    /// Re-check `d_{n-1} ∘ d_n = 0` everywhere, independently of construction.
    pub fn boundaries_square_to_zero(&self) -> bool {
        self.first_nonzero_square().is_none()
    }

    /// The same complex viewed on a wider window (zero modules added).
    pub fn widened(&self, lo: i64, hi: i64) -> ChainComplex {
        let lo = lo.min(self.lo);
        let hi = hi.max(self.hi);
        let modules = (lo..=hi).map(|n| self.module(n).clone()).collect();
        let homs = (lo + 1..=hi).map(|n| self.boundary(n)).collect();
        ChainComplex::from_homs(&self.ring, lo, modules, homs).expect("widening keeps d∘d = 0")
    }

    /// `C[k]`: degree `n + k` holds `C_n`, boundaries multiplied by `(-1)^k`.
    pub fn shifted(&self, k: i64) -> ChainComplex {
        let modules = self.modules.clone();
        let homs = self
            .boundaries
            .iter()
            .map(|d| if k % 2 == 0 { d.clone() } else { d.neg() })
            .collect();
        ChainComplex::from_homs(&self.ring, self.lo + k, modules, homs).expect("shift keeps d∘d = 0")
    }
}

/// Degreewise direct sum (finite products coincide with it).
pub fn direct_sum_complex(c: &ChainComplex, d: &ChainComplex) -> Result<ChainComplex, ChainError> {
    if c.ring() != d.ring() {
        return Err(ChainError::RingMismatch(c.ring().clone(), d.ring().clone()));
    }
    let ring = c.ring();
    let lo = c.lo().min(d.lo());
    let hi = c.hi().max(d.hi());
    let modules: Vec<FpModule> = (lo..=hi)
        .map(|n| direct_sum(c.module(n), d.module(n)).expect("same ring").module)
        .collect();
    let homs = (lo + 1..=hi)
        .map(|n| {
            let k = (n - lo) as usize;
            let map = Matrix::block_diag(ring, &[c.boundary(n).map(), d.boundary(n).map()]);
            ModuleHom::new(modules[k].clone(), modules[k - 1].clone(), map)
                .map_err(|source| ChainError::Module { degree: n, source })
        })
        .collect::<Result<Vec<_>, _>>()?;
    ChainComplex::from_homs(ring, lo, modules, homs)
}

/// `0 -> A -f-> B -g-> C -> 0` as a complex: `A, B, C` in degrees `2, 1, 0`,
/// padded with zero modules in degrees 3 and -1 so that every position of
/// the short sequence (including both ends) is an interior degree.
pub fn ses_to_complex(f: &ModuleHom, g: &ModuleHom) -> Result<ChainComplex, ChainError> {
    if f.codomain() != g.domain() {
        return Err(ChainError::Shape("f and g are not composable".into()));
    }
    let ring = f.domain().ring();
    let zero = FpModule::zero(ring);
    let (a, b, c) = (f.domain(), f.codomain(), g.codomain());
    let modules = vec![zero.clone(), c.clone(), b.clone(), a.clone(), zero.clone()];
    let homs = vec![
        ModuleHom::zero(c, &zero),
        g.clone(),
        f.clone(),
        ModuleHom::zero(&zero, a),
    ];
    ChainComplex::from_homs(ring, -1, modules, homs)
}
