//! The fixture suite behind the `report` command: every worked example and
//! randomized property, with a pass/fail line each.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::chain::{induced_on_homology, is_quasi_iso, ses_to_complex, ChainComplex, ChainMap};
use crate::derived::{ideal_quotient_module, tor, tor_les, torsion_part, universal_coefficient_sides, ResolveSide, TorRequest};
use crate::diagram::{connecting_hom, long_exact_sequence, ShortExactSeqComplexes};
use crate::exactlin::{determinant, snf, Matrix, RingSpec};
use crate::fixtures::{self, random_chain_map, random_complex, random_raising, random_ring, random_ses_complexes, random_ses_modules};
use crate::fpmod::{FpModule, ModuleHom};
use crate::homotopy::{are_chain_homotopic, find_null_homotopy, is_split_exact};
use crate::resolve::{free_resolution, is_projective, lift_between_resolutions, Resolution};
use crate::simplicial::{self, homology_report};

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn z() -> RingSpec {
    RingSpec::Integers
}

fn hom(from: &FpModule, to: &FpModule, k: i64) -> ModuleHom {
    ModuleHom::new(from.clone(), to.clone(), Matrix::scalar(from.ring(), k)).expect("well defined")
}

/// Sizes of the randomized parts; `quick` shrinks them for smoke runs.
#[derive(Clone, Copy, Debug)]
pub struct SuiteSize {
    pub complexes: usize,
    pub ses: usize,
    pub snf_matrices: usize,
    pub tor_max: i64,
    pub seed: u64,
}

impl SuiteSize {
    pub fn full() -> Self {
        SuiteSize { complexes: 200, ses: 100, snf_matrices: 1000, tor_max: 30, seed: 2024 }
    }

    pub fn quick() -> Self {
        SuiteSize { complexes: 20, ses: 10, snf_matrices: 50, tor_max: 8, seed: 2024 }
    }
}

fn short_exact_battery() -> Outcome {
    let zz = FpModule::free(&z(), 1);
    let z2 = FpModule::cyclic(&z(), 2);
    let iota = hom(&zz, &zz, 2);
    let tau = hom(&zz, &z2, 1);
    ensure(iota.kernel().0.is_zero(), || "ker ι ≠ 0".into())?;
    let (_, ker_tau) = tau.kernel();
    ensure(zz.same_submodule(iota.map(), ker_tau.map()), || "im ι ≠ ker τ".into())?;
    ensure(tau.is_surjective(), || "τ not onto".into())?;
    ensure(ses_to_complex(&iota, &tau).map_err(|e| e.to_string())?.is_exact(), || "x2 sequence not exact".into())?;
    let z3 = FpModule::cyclic(&z(), 3);
    let psi = hom(&zz, &zz, 6);
    let phi = hom(&zz, &z3, 1);
    let (_, ker_phi) = phi.kernel();
    let strict = zz.contains_submodule(ker_phi.map(), psi.map()) && !zz.contains_submodule(psi.map(), ker_phi.map());
    ensure(strict, || "im ψ is not strictly inside ker φ".into())?;
    let bad = ses_to_complex(&psi, &phi).map_err(|e| e.to_string())?.inexact_degrees();
    ensure(bad == [1], || format!("x6 sequence inexact at {bad:?}, expected [1]"))?;
    Ok("x2 short exact; x6 inexact at the middle only".into())
}

fn exactness_equivalence(size: SuiteSize) -> Outcome {
    let mut rng = fixtures::rng(size.seed);
    let mut exact = 0;
    for i in 0..size.complexes {
        let ring = random_ring(&mut rng);
        let c = if i % 2 == 0 {
            fixtures::random_exact_complex(&mut rng, &ring)
        } else {
            fixtures::random_perturbed_complex(&mut rng, &ring)
        };
        let a = c.is_exact();
        let b = c.degrees().all(|n| c.homology_module(n).is_zero());
        let zero = ChainComplex::zero_complex(&ring);
        let q = is_quasi_iso(&ChainMap::zero(&zero, &c));
        ensure(a == b && b == q, || format!("complex {i}: exact={a}, homology zero={b}, quasi-iso={q}"))?;
        ensure(i % 2 == 1 || a, || format!("complex {i} built exact tests inexact"))?;
        exact += a as usize;
    }
    Ok(format!("{} complexes, {exact} exact, 0 disagreements", size.complexes))
}

/// `A = Z[0]`, `B = (Z -x2-> Z)`, `C = Z[1]`.
pub fn doubling_ses() -> ShortExactSeqComplexes {
    let r = z();
    let zz = FpModule::free(&r, 1);
    let a = ChainComplex::concentrated(&zz, 0);
    let b = ChainComplex::new(&r, 0, vec![zz.clone(), zz.clone()], vec![Matrix::scalar(&r, 2)]).expect("complex");
    let c = ChainComplex::concentrated(&zz, 1);
    let f = ChainMap::new(&a, &b, [(0, Matrix::scalar(&r, 1))].into()).expect("chain map");
    let g = ChainMap::new(&b, &c, [(1, Matrix::scalar(&r, 1)), (0, Matrix::zeros(&r, 0, 1))].into()).expect("chain map");
    ShortExactSeqComplexes::new(f, g).expect("short exact")
}

fn snake_and_les(size: SuiteSize) -> Outcome {
    let ses = doubling_ses();
    let d = connecting_hom(&ses, 1).map_err(|e| e.to_string())?;
    ensure(d.map().get(0, 0).abs() == BigInt::from(2), || format!("∂ = {:?}", d.map()))?;
    let les = long_exact_sequence(&ses).map_err(|e| e.to_string())?;
    let terms: Vec<String> = les.nonzero_terms().iter().map(|(_, m)| m.decomposition().to_string()).collect();
    ensure(terms == ["Z", "Z", "Z/2"], || format!("LES terms {terms:?}"))?;
    let mut rng = fixtures::rng(size.seed + 3);
    for i in 0..size.ses {
        let ring = random_ring(&mut rng);
        let ses = random_ses_complexes(&mut rng, &ring);
        let les = long_exact_sequence(&ses).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(les.is_exact(), || format!("instance {i}: LES not exact"))?;
    }
    let mut triples = [0usize; 4];
    for i in 0..size.ses {
        let ring = random_ring(&mut rng);
        let exact_ends = rng.gen_bool(0.5);
        let (x, y) = if exact_ends {
            (fixtures::random_exact_complex(&mut rng, &ring), fixtures::random_exact_complex(&mut rng, &ring))
        } else {
            (random_complex(&mut rng, &ring), random_complex(&mut rng, &ring))
        };
        let u = random_chain_map(&mut rng, &x, &y);
        let ses = fixtures::cone_ses(&u);
        let count = [&ses.a, &ses.b, &ses.c].iter().filter(|c| c.is_exact()).count();
        ensure(count != 2, || format!("instance {i}: exactly two of three exact"))?;
        triples[count] += 1;
    }
    Ok(format!("∂ = ±2; {} random LES exact; exact-member counts {triples:?}", size.ses))
}

fn homotopy_suite(size: SuiteSize) -> Outcome {
    let mut rng = fixtures::rng(size.seed + 4);
    let n = size.complexes / 2;
    let mut split = 0;
    for i in 0..n {
        let ring = random_ring(&mut rng);
        let c = random_complex(&mut rng, &ring);
        let found = find_null_homotopy(&ChainMap::identity(&c)).is_some();
        let se = is_split_exact(&c);
        ensure(found == se, || format!("complex {i}: null-homotopy {found}, split exact {se}"))?;
        ensure(!found || c.is_exact(), || format!("complex {i}: contractible but not exact"))?;
        split += se as usize;
        let f = random_chain_map(&mut rng, &c, &c);
        let s = random_raising(&mut rng, &c, &c);
        let g = f.add(&s.boundary_commutator().map_err(|e| e.to_string())?);
        ensure(are_chain_homotopic(&f, &g).is_some(), || format!("complex {i}: perturbed map not homotopic"))?;
        for k in c.degrees() {
            let (hf, hg) = (induced_on_homology(&f, k), induced_on_homology(&g, k));
            ensure(hf.equals(&hg), || format!("complex {i}: induced maps differ at {k}"))?;
        }
    }
    Ok(format!("{n} complexes, {split} split exact, contractibility matched"))
}

fn resolution_examples() -> Outcome {
    let z2 = FpModule::cyclic(&z(), 2);
    let res = free_resolution(&z2, 1);
    ensure(res.complete && res.depth == 1 && res.maps[0].map() == &Matrix::scalar(&z(), 2), || "Z/2 over Z".into())?;
    let r4 = RingSpec::zmod(4).map_err(|e| e.to_string())?;
    let res4 = free_resolution(&FpModule::cyclic(&r4, 2), 10);
    let all_two = res4.maps.iter().all(|m| m.map() == &Matrix::scalar(&r4, 2));
    ensure(res4.depth == 10 && all_two && res4.free_ranks == [1; 11], || "Z/2 over Z/4".into())?;
    ensure(res4.augmented_complex().degrees().filter(|&n| n < 10).all(|n| res4.augmented_complex().is_exact_at(n)), || "Z/4 resolution not exact".into())?;
    let r6 = RingSpec::zmod(6).map_err(|e| e.to_string())?;
    let c3 = FpModule::cyclic(&r6, 3);
    ensure(is_projective(&c3) && !c3.decomposition().is_free(), || "Z/3 over Z/6".into())?;
    let aug = ModuleHom::new(FpModule::free(&z(), 2), z2.clone(), Matrix::from_rows(&z(), &[vec![1, 0]])).expect("onto");
    let phi = ModuleHom::new(FpModule::free(&z(), 2), FpModule::free(&z(), 2), Matrix::diagonal(&z(), &[2, 1])).expect("free");
    let padded = Resolution::from_parts(aug, vec![phi]).map_err(|e| e.to_string())?;
    let u = lift_between_resolutions(&ModuleHom::identity(&z2), &res, &padded).map_err(|e| e.to_string())?;
    ensure(is_quasi_iso(&u), || "comparison lift is not a quasi-isomorphism".into())?;
    Ok("Z/2 over Z, Z/2 over Z/4 to depth 10, Z/3 over Z/6, comparison lift".into())
}

fn tor_suite(size: SuiteSize) -> Outcome {
    let t0 = Instant::now();
    let mut cases = 0;
    for a in 2..=size.tor_max {
        for b in 2..=size.tor_max {
            let (ma, mb) = (FpModule::cyclic(&z(), a), FpModule::cyclic(&z(), b));
            let want = FpModule::cyclic(&z(), a.gcd(&b));
            let right = tor(&TorRequest::new(&ma, &mb, 1)).map_err(|e| e.to_string())?;
            let left = tor(&TorRequest::new(&ma, &mb, 1).side(ResolveSide::Left)).map_err(|e| e.to_string())?;
            let ideal = ideal_quotient_module(&BigInt::from(a), &BigInt::from(b));
            let ok = [&right, &left, &ideal].iter().all(|m| m.is_isomorphic(&want));
            ensure(ok, || format!("Tor_1(Z/{a}, Z/{b})"))?;
            cases += 1;
        }
    }
    let mut rng = fixtures::rng(size.seed + 6);
    for i in 0..size.ses {
        let m = fixtures::random_module(&mut rng, &z(), 3);
        let x = BigInt::from(rng.gen_range(2..=12));
        let t = tor(&TorRequest::new(&FpModule::cyclic(&z(), x.clone()), &m, 1)).map_err(|e| e.to_string())?;
        ensure(t.is_isomorphic(&torsion_part(&m, &x)), || format!("torsion pair {i}"))?;
        let free = FpModule::free(&z(), rng.gen_range(1..=3));
        ensure(tor(&TorRequest::new(&free, &m, 1)).map_err(|e| e.to_string())?.is_zero(), || "Tor of a free module".into())?;
        for k in 2..=3 {
            ensure(tor(&TorRequest::new(&m, &FpModule::cyclic(&z(), x.clone()), k)).map_err(|e| e.to_string())?.is_zero(), || format!("Tor_{k} over Z"))?;
        }
    }
    let r4 = RingSpec::zmod(4).map_err(|e| e.to_string())?;
    let c2 = FpModule::cyclic(&r4, 2);
    for i in 1..=10 {
        let t = tor(&TorRequest::new(&c2, &c2, i)).map_err(|e| e.to_string())?;
        ensure(t.is_isomorphic(&c2), || format!("Tor_{i}(Z/2, Z/2) over Z/4 = {}", t.decomposition()))?;
    }
    for i in 0..size.ses / 2 {
        let ring = random_ring(&mut rng);
        let ses = random_ses_modules(&mut rng, &ring);
        let n = fixtures::random_module(&mut rng, &ring, 2);
        let les = tor_les(&ses, &n, 2).map_err(|e| format!("Tor LES {i}: {e}"))?;
        ensure(les.is_exact(), || format!("Tor LES {i} not exact"))?;
    }
    Ok(format!("{cases} gcd cases three ways, torsion, vanishing, Z/4 periodicity, Tor LES; {:.1?}", t0.elapsed()))
}

fn simplicial_suite() -> Outcome {
    let expect = [
        ("hollow tetrahedron", simplicial::hollow_tetrahedron(), "H0 = Z, H1 = 0, H2 = Z"),
        ("circle", simplicial::circle(), "H0 = Z, H1 = Z"),
        ("projective plane", simplicial::projective_plane(), "H0 = Z, H1 = Z/2, H2 = 0"),
        ("Klein bottle", simplicial::klein_bottle(), "H0 = Z, H1 = Z ⊕ Z/2, H2 = 0"),
    ];
    for (name, k, want) in &expect {
        let got = simplicial::format_report(&homology_report(k));
        ensure(&got == want, || format!("{name}: {got}"))?;
        let c = simplicial::chain_complex_of(k, &z());
        let g = FpModule::cyclic(&z(), 2);
        for n in c.degrees() {
            let (lhs, rhs) = universal_coefficient_sides(&c, &g, n).map_err(|e| e.to_string())?;
            ensure(lhs.decomposition() == rhs.decomposition(), || format!("{name}: universal coefficients at {n}"))?;
        }
    }
    Ok("four fixtures and universal coefficients with Z/2".into())
}

fn snf_suite(size: SuiteSize) -> Outcome {
    let mut rng = fixtures::rng(size.seed + 8);
    let mut minors_checked = 0;
    for i in 0..size.snf_matrices {
        let (r, c) = (rng.gen_range(0..=12), rng.gen_range(0..=12));
        let a = fixtures::random_matrix(&mut rng, &z(), r, c, 50);
        let s = snf(&a);
        ensure(&(&s.u * &a) * &s.v == s.d, || format!("matrix {i}: UAV ≠ D"))?;
        ensure(determinant(&s.u).abs().is_one() && determinant(&s.v).abs().is_one(), || format!("matrix {i}: transform not unimodular"))?;
        let diag = s.invariant_factors();
        ensure(diag.windows(2).all(|w| (&w[1] % &w[0]).is_zero()), || format!("matrix {i}: divisibility chain"))?;
        if r <= 6 && c <= 6 {
            ensure(diag == determinantal_factors(&a), || format!("matrix {i}: minors disagree"))?;
            minors_checked += 1;
        }
    }
    Ok(format!("{} matrices, {minors_checked} against determinantal divisors", size.snf_matrices))
}

/// `d_k = D_k / D_{k-1}` where `D_k` is the gcd of the `k x k` minors.
fn determinantal_factors(a: &Matrix) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=a.rows().min(a.cols()) {
        let mut g = BigInt::zero();
        for rows in subsets(a.rows(), k) {
            for cols in subsets(a.cols(), k) {
                g = g.gcd(&determinant(&a.select_rows(&rows).select_columns(&cols)));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = subsets(n - 1, k - 1);
    for s in &mut with {
        s.push(n - 1);
    }
    let mut out = subsets(n - 1, k);
    out.extend(with);
    out
}

type Check = (&'static str, Box<dyn Fn() -> Outcome>);

/// Runs the whole suite in order.
pub fn run_suite(size: SuiteSize) -> Vec<CheckResult> {
    let checks: Vec<Check> = vec![
        ("short exact fixtures", Box::new(short_exact_battery)),
        ("exactness equivalence", Box::new(move || exactness_equivalence(size))),
        ("snake and long exact sequences", Box::new(move || snake_and_les(size))),
        ("homotopy", Box::new(move || homotopy_suite(size))),
        ("resolutions", Box::new(resolution_examples)),
        ("Tor", Box::new(move || tor_suite(size))),
        ("simplicial homology", Box::new(simplicial_suite)),
        ("Smith normal form", Box::new(move || snf_suite(size))),
    ];
    checks
        .into_iter()
        .enumerate()
        .map(|(i, (name, check))| {
            let t = Instant::now();
            let outcome = check();
            let elapsed = t.elapsed();
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { id: i + 1, name, passed, detail, elapsed }
        })
        .collect()
}

pub fn format_table(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&format!(
            "{:>2}  {:<32} {}  {:>8.2?}  {}\n",
            r.id,
            r.name,
            if r.passed { "PASS" } else { "FAIL" },
            r.elapsed,
            r.detail
        ));
    }
    let passed = results.iter().filter(|r| r.passed).count();
    out.push_str(&format!("{passed}/{} passed\n", results.len()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        let results = run_suite(SuiteSize::quick());
        let table = format_table(&results);
        assert!(results.iter().all(|r| r.passed), "{table}");
    }

    #[test]
    fn minors_of_small_matrices() {
        let a = Matrix::from_rows(&z(), &[vec![2, 4], vec![6, 8]]);
        assert_eq!(determinantal_factors(&a), [BigInt::from(2), BigInt::from(4)]);
        assert_eq!(subsets(4, 2).len(), 6);
    }
}
