//! Short exact sequences, the snake lemma and the long exact homology sequence.

use thiserror::Error;

use crate::chain::{induced_on_homology, ChainComplex, ChainError, ChainMap};
use crate::exactlin::Matrix;
use crate::fpmod::{FpModule, ModuleHom};

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("square does not commute: {0}")]
    NotCommutative(&'static str),
    #[error("row is not exact at {0}")]
    RowNotExact(&'static str),
    #[error("not short exact at degree {degree}: {reason}")]
    NotShortExact { degree: i64, reason: &'static str },
    #[error("maps do not compose: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
    /// A verification that cannot fail on valid input did fail.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// `g ∘ f = 0` and `ker g ⊆ im f`, i.e. `A -f-> B -g-> C` is exact at `B`.
pub fn is_exact_pair(f: &ModuleHom, g: &ModuleHom) -> bool {
    if f.codomain() != g.domain() {
        return false;
    }
    let b = f.codomain();
    let (_, incl) = g.kernel();
    f.then(g).is_zero() && b.contains_submodule(f.map(), incl.map())
}

/// `0 -> A -f-> B -g-> C -> 0`, validated on construction.
#[derive(Clone, Debug)]
pub struct ShortExactSeqModules {
    pub a: FpModule,
    pub b: FpModule,
    pub c: FpModule,
    pub f: ModuleHom,
    pub g: ModuleHom,
}

fn ses_failure(f: &ModuleHom, g: &ModuleHom) -> Option<&'static str> {
    if f.codomain() != g.domain() {
        return Some("maps do not compose");
    }
    if !f.is_injective() {
        return Some("f is not injective");
    }
    if !is_exact_pair(f, g) {
        return Some("im f differs from ker g");
    }
    if !g.is_surjective() {
        return Some("g is not surjective");
    }
    None
}

impl ShortExactSeqModules {
    pub fn new(f: ModuleHom, g: ModuleHom) -> Result<Self, DiagramError> {
        if let Some(reason) = ses_failure(&f, &g) {
            return Err(DiagramError::NotShortExact { degree: 0, reason });
        }
        Ok(ShortExactSeqModules {
            a: f.domain().clone(),
            b: f.codomain().clone(),
            c: g.codomain().clone(),
            f,
            g,
        })
    }
}

/// A degreewise short exact sequence of chain complexes.
#[derive(Clone, Debug)]
pub struct ShortExactSeqComplexes {
    pub a: ChainComplex,
    pub b: ChainComplex,
    pub c: ChainComplex,
    pub f: ChainMap,
    pub g: ChainMap,
}

impl ShortExactSeqComplexes {
    pub fn new(f: ChainMap, g: ChainMap) -> Result<Self, DiagramError> {
        if f.target() != g.source() {
            return Err(DiagramError::Mismatch("target of f is not the source of g".into()));
        }
        let (lo, hi) = window(f.source(), f.target(), g.target());
        for n in lo..=hi {
            if let Some(reason) = ses_failure(&f.level(n), &g.level(n)) {
                return Err(DiagramError::NotShortExact { degree: n, reason });
            }
        }
        Ok(ShortExactSeqComplexes {
            a: f.source().clone(),
            b: f.target().clone(),
            c: g.target().clone(),
            f,
            g,
        })
    }

    /// Union of the three degree windows.
    pub fn window(&self) -> (i64, i64) {
        window(&self.a, &self.b, &self.c)
    }
}

fn window(a: &ChainComplex, b: &ChainComplex, c: &ChainComplex) -> (i64, i64) {
    let lo = a.lo().min(b.lo()).min(c.lo());
    let hi = a.hi().max(b.hi()).max(c.hi());
    (lo, hi)
}

/// Two exact rows with vertical maps:
///
/// ```text
///  M1 --f--> M2 --g--> M3 --> 0
///  |a        |b        |c
///  M1' -f'-> M2' -g'-> M3'
/// ```
#[derive(Clone, Debug)]
pub struct SnakeSquare {
    pub f: ModuleHom,
    pub g: ModuleHom,
    pub f2: ModuleHom,
    pub g2: ModuleHom,
    pub a: ModuleHom,
    pub b: ModuleHom,
    pub c: ModuleHom,
}

/// `ker a -> ker b -> ker c -∂-> coker a -> coker b -> coker c`.
#[derive(Clone, Debug)]
pub struct SnakeSequence {
    pub modules: [FpModule; 6],
    pub maps: [ModuleHom; 5],
}

impl SnakeSequence {
    pub fn connecting(&self) -> &ModuleHom {
        &self.maps[2]
    }

    /// Exact at the four interior terms.
    pub fn is_exact(&self) -> bool {
        self.maps.windows(2).all(|w| is_exact_pair(&w[0], &w[1]))
    }
}

fn check_square(square: &SnakeSquare) -> Result<(), DiagramError> {
    let SnakeSquare { f, g, f2, g2, a, b, c } = square;
    let fits = f.codomain() == g.domain()
        && f2.codomain() == g2.domain()
        && a.domain() == f.domain()
        && a.codomain() == f2.domain()
        && b.domain() == g.domain()
        && b.codomain() == g2.domain()
        && c.domain() == g.codomain()
        && c.codomain() == g2.codomain();
    if !fits {
        return Err(DiagramError::Mismatch("snake square modules do not line up".into()));
    }
    if !f.then(b).equals(&a.then(f2)) {
        return Err(DiagramError::NotCommutative("left square"));
    }
    if !g.then(c).equals(&b.then(g2)) {
        return Err(DiagramError::NotCommutative("right square"));
    }
    if !is_exact_pair(f, g) {
        return Err(DiagramError::RowNotExact("top middle"));
    }
    if !g.is_surjective() {
        return Err(DiagramError::RowNotExact("top right"));
    }
    if !f2.is_injective() {
        return Err(DiagramError::RowNotExact("bottom left"));
    }
    if !is_exact_pair(f2, g2) {
        return Err(DiagramError::RowNotExact("bottom middle"));
    }
    Ok(())
}

fn internal(what: &str) -> DiagramError {
    DiagramError::Internal(what.to_string())
}

pub fn snake(square: &SnakeSquare) -> Result<SnakeSequence, DiagramError> {
    check_square(square)?;
    let SnakeSquare { f, g, f2, g2, a, b, c } = square;
    let (ka, ia) = a.kernel();
    let (kb, ib) = b.kernel();
    let (kc, ic) = c.kernel();
    let (ca, pa) = a.cokernel();
    let (cb, pb) = b.cokernel();
    let (cc, pc) = c.cokernel();

    let k1 = ia.then(f).factor_through_injection(&ib).ok_or_else(|| internal("ker a -> ker b"))?;
    let k2 = ib.then(g).factor_through_injection(&ic).ok_or_else(|| internal("ker b -> ker c"))?;
    let c1 = f2.then(&pb).factor_through_surjection(&pa).ok_or_else(|| internal("coker a -> coker b"))?;
    let c2 = g2.then(&pc).factor_through_surjection(&pb).ok_or_else(|| internal("coker b -> coker c"))?;

    // ∂ = f'^-1 b g^-1 on the generators of ker c
    let x = ic.map().clone();
    let y = g.preimage(&x).ok_or_else(|| internal("lift through g"))?;
    let by = b.apply(&y);
    let z = f2.preimage(&by).ok_or_else(|| internal("pull back through f'"))?;
    let delta = ModuleHom::new(kc.clone(), ca.clone(), pa.apply(&z))
        .map_err(|e| DiagramError::Internal(format!("connecting map: {e}")))?;

    let seq = SnakeSequence {
        modules: [ka, kb, kc, ca, cb, cc],
        maps: [k1, k2, delta, c1, c2],
    };
    if !seq.is_exact() {
        return Err(internal("snake sequence failed its exactness check"));
    }
    Ok(seq)
}

/// `∂_n : H_n(C) -> H_{n-1}(A)` by the chase `f^-1 d_B g^-1`.
pub fn connecting_hom(ses: &ShortExactSeqComplexes, n: i64) -> Result<ModuleHom, DiagramError> {
    connecting_hom_shifted(ses, n, None)
}

/// The same chase with every lift through `g_n` moved by `f_n(k)`, where
/// `k` holds `A_n` coordinates, one column per generator of `H_n(C)`. The
/// result never depends on `k`.
pub fn connecting_hom_shifted(
    ses: &ShortExactSeqComplexes,
    n: i64,
    k: Option<&Matrix>,
) -> Result<ModuleHom, DiagramError> {
    let hc = ses.c.homology(n);
    let ha = ses.a.homology(n - 1);
    let reps = hc.representative(&Matrix::identity(ses.c.ring(), hc.homology.generators()));
    let mut lift = ses.g.level(n).preimage(&reps).ok_or_else(|| internal("lift through g"))?;
    if let Some(k) = k {
        lift = &lift + &ses.f.level(n).apply(k);
    }
    let pushed = ses.b.boundary(n).apply(&lift);
    let pulled = ses.f.level(n - 1).preimage(&pushed).ok_or_else(|| internal("pull back through f"))?;
    let class = ha.class_of(&pulled).ok_or_else(|| internal("pulled-back element is not a cycle"))?;
    ModuleHom::new(hc.homology, ha.homology, class).map_err(|e| DiagramError::Internal(format!("connecting map: {e}")))
}

/// Which homology group a node of the long exact sequence is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LesSlot {
    Zero,
    A(i64),
    B(i64),
    C(i64),
}

impl std::fmt::Display for LesSlot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LesSlot::Zero => write!(f, "0"),
            LesSlot::A(n) => write!(f, "H_{n}(A)"),
            LesSlot::B(n) => write!(f, "H_{n}(B)"),
            LesSlot::C(n) => write!(f, "H_{n}(C)"),
        }
    }
}

/// `0 -> H_hi(A) -> H_hi(B) -> H_hi(C) -> H_{hi-1}(A) -> ... -> H_lo(C) -> 0`
/// (or a tail of it); `maps[i]` goes from `modules[i]` to `modules[i + 1]`.
#[derive(Clone, Debug)]
pub struct LongExactSequence {
    pub slots: Vec<LesSlot>,
    pub modules: Vec<FpModule>,
    pub maps: Vec<ModuleHom>,
}

impl LongExactSequence {
    /// Exact at every node with both an incoming and an outgoing map.
    pub fn is_exact(&self) -> bool {
        self.inexact_positions().is_empty()
    }

    pub fn inexact_positions(&self) -> Vec<usize> {
        (1..self.modules.len().saturating_sub(1))
            .filter(|&i| !is_exact_pair(&self.maps[i - 1], &self.maps[i]))
            .collect()
    }

    /// The connecting map `H_n(C) -> H_{n-1}(A)`, if `n` is in the window.
    pub fn connecting(&self, n: i64) -> Option<&ModuleHom> {
        self.slots
            .iter()
            .position(|s| *s == LesSlot::C(n))
            .map(|i| &self.maps[i])
    }

    /// The tail starting at node `start`; that node has no incoming map and is
    /// not checked for exactness.
    pub fn tail(&self, start: usize) -> LongExactSequence {
        LongExactSequence {
            slots: self.slots[start..].to_vec(),
            modules: self.modules[start..].to_vec(),
            maps: self.maps[start..].to_vec(),
        }
    }

    pub fn position(&self, slot: LesSlot) -> Option<usize> {
        self.slots.iter().position(|s| *s == slot)
    }

    /// Nodes whose module is nonzero, in order.
    pub fn nonzero_terms(&self) -> Vec<(LesSlot, &FpModule)> {
        self.slots
            .iter()
            .zip(&self.modules)
            .filter(|(_, m)| !m.is_zero())
            .map(|(s, m)| (*s, m))
            .collect()
    }
}

pub fn long_exact_sequence(ses: &ShortExactSeqComplexes) -> Result<LongExactSequence, DiagramError> {
    let (lo, hi) = ses.window();
    let mut slots = vec![LesSlot::Zero];
    let mut modules = vec![FpModule::zero(ses.a.ring())];
    let mut maps = Vec::new();
    for n in (lo..=hi).rev() {
        let fa = induced_on_homology(&ses.f, n);
        let gb = induced_on_homology(&ses.g, n);
        let delta = connecting_hom(ses, n)?;
        if n == hi {
            maps.push(ModuleHom::zero(&modules[0], fa.domain()));
        }
        slots.extend([LesSlot::A(n), LesSlot::B(n), LesSlot::C(n)]);
        modules.extend([fa.domain().clone(), gb.domain().clone(), gb.codomain().clone()]);
        if n == lo {
            // H_{lo-1}(A) = 0 closes the sequence
            slots.push(LesSlot::Zero);
            modules.push(delta.codomain().clone());
        }
        maps.extend([fa, gb, delta]);
    }
    let les = LongExactSequence { slots, modules, maps };
    if !les.is_exact() {
        return Err(DiagramError::Internal(format!(
            "long exact sequence fails exactness at positions {:?}",
            les.inexact_positions()
        )));
    }
    Ok(les)
}
