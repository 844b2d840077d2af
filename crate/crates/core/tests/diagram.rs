use homalg::chain::{induced_on_homology, ChainComplex, ChainMap};
use homalg::diagram::{
    connecting_hom, connecting_hom_shifted, long_exact_sequence, snake, LesSlot, ShortExactSeqComplexes, SnakeSquare,
};
use homalg::exactlin::{Matrix, RingSpec};
use homalg::fixtures::{self, cone_ses, rebase};
use homalg::fpmod::{FpModule, ModuleHom};
use homalg::report::doubling_ses;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

fn z() -> RingSpec {
    RingSpec::Integers
}

fn hom(from: &FpModule, to: &FpModule, k: i64) -> ModuleHom {
    ModuleHom::new(from.clone(), to.clone(), Matrix::from_fn(&z(), to.generators(), from.generators(), |i, j| BigInt::from(if i == j { k } else { 0 }))).unwrap()
}

fn exact_members(ses: &ShortExactSeqComplexes) -> [bool; 3] {
    [ses.a.is_exact(), ses.b.is_exact(), ses.c.is_exact()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn every_long_exact_sequence_is_exact(seed in any::<u64>()) {
        let mut rng = fixtures::rng(seed);
        let ring = fixtures::random_ring(&mut rng);
        let ses = fixtures::random_ses_complexes(&mut rng, &ring);
        let les = long_exact_sequence(&ses).unwrap();
        prop_assert!(les.inexact_positions().is_empty());
        // two exact members force the third
        prop_assert_ne!(exact_members(&ses).iter().filter(|e| **e).count(), 2);
    }

    #[test]
    fn connecting_map_ignores_the_chase_choices(seed in any::<u64>()) {
        let mut rng = fixtures::rng(seed);
        let ring = fixtures::random_ring(&mut rng);
        let ses = fixtures::random_ses_complexes(&mut rng, &ring);
        let (lo, hi) = ses.window();
        for n in lo..=hi + 1 {
            let base = connecting_hom(&ses, n).unwrap();
            let k = fixtures::random_matrix(&mut rng, &ring, ses.a.module(n).generators(), base.domain().generators(), 5);
            let moved = connecting_hom_shifted(&ses, n, Some(&k)).unwrap();
            prop_assert!(moved.equals(&base));
            prop_assert_eq!(moved.canonical().map().clone(), base.canonical().map().clone());
        }
    }

    #[test]
    fn connecting_map_is_natural_under_base_change(seed in any::<u64>()) {
        let mut rng = fixtures::rng(seed);
        let ring = fixtures::random_ring(&mut rng);
        let ses = fixtures::random_ses_complexes(&mut rng, &ring);
        let (ra, rb, rc) = (rebase(&mut rng, &ses.a), rebase(&mut rng, &ses.b), rebase(&mut rng, &ses.c));
        let f = ra.to_old.then(&ses.f).then(&rb.to_new);
        let g = rb.to_old.then(&ses.g).then(&rc.to_new);
        let moved = ShortExactSeqComplexes::new(f, g).unwrap();
        let (lo, hi) = ses.window();
        for n in lo..=hi + 1 {
            let before = connecting_hom(&ses, n).unwrap().then(&induced_on_homology(&ra.to_new, n - 1));
            let after = induced_on_homology(&rc.to_new, n).then(&connecting_hom(&moved, n).unwrap());
            prop_assert!(before.equals(&after));
            prop_assert_eq!(before.canonical().map().clone(), after.canonical().map().clone());
        }
    }
}

#[test]
fn two_out_of_three() {
    let mut rng = fixtures::rng(11);
    for i in 0..60 {
        let ring = fixtures::random_ring(&mut rng);
        let x = fixtures::random_exact_complex(&mut rng, &ring);
        let ses = match i % 3 {
            // A and C exact
            0 => {
                let y = fixtures::random_exact_complex(&mut rng, &ring);
                cone_ses(&fixtures::random_chain_map(&mut rng, &x, &y))
            }
            // A = X exact and B = Cone(id) contractible; or B and C = X[-1]
            _ => cone_ses(&ChainMap::identity(&x)),
        };
        assert_eq!(exact_members(&ses), [true; 3], "instance {i}");
        assert!(long_exact_sequence(&ses).unwrap().modules.iter().all(FpModule::is_zero));
    }
}

#[test]
fn doubling_sequence() {
    let ses = doubling_ses();
    let d = connecting_hom(&ses, 1).unwrap();
    assert_eq!(d.map().get(0, 0).magnitude(), BigInt::from(2).magnitude());
    let les = long_exact_sequence(&ses).unwrap();
    assert!(les.is_exact());
    let terms: Vec<String> = les.nonzero_terms().iter().map(|(_, m)| m.decomposition().to_string()).collect();
    assert_eq!(terms, ["Z", "Z", "Z/2"]);
    assert!(les.connecting(1).is_some_and(|h| h.is_injective()));
}

#[test]
fn degenerate_connecting_maps() {
    let mut rng = fixtures::rng(5);
    for _ in 0..10 {
        let ring = fixtures::random_ring(&mut rng);
        // C exact: every connecting map starts at zero
        let x = fixtures::random_exact_complex(&mut rng, &ring);
        let y = fixtures::random_complex(&mut rng, &ring);
        let ses = cone_ses(&fixtures::random_chain_map(&mut rng, &x, &y));
        let (lo, hi) = ses.window();
        for n in lo..=hi + 1 {
            assert!(connecting_hom(&ses, n).unwrap().is_zero());
        }
        // all three complexes in degree 0
        let m = fixtures::random_ses_modules(&mut rng, &ring);
        let conc = |x: &FpModule| ChainComplex::concentrated(x, 0);
        let (a, b, c) = (conc(&m.a), conc(&m.b), conc(&m.c));
        let f = ChainMap::new(&a, &b, [(0, m.f.map().clone())].into()).unwrap();
        let g = ChainMap::new(&b, &c, [(0, m.g.map().clone())].into()).unwrap();
        let ses = ShortExactSeqComplexes::new(f, g).unwrap();
        for n in -1..=2 {
            assert!(connecting_hom(&ses, n).unwrap().is_zero());
        }
        // A = 0: H(B) -> H(C) are isomorphisms
        let b = fixtures::random_complex(&mut rng, &ring);
        let zero = ChainComplex::zero_complex(&ring);
        let ses = ShortExactSeqComplexes::new(ChainMap::zero(&zero, &b), ChainMap::identity(&b)).unwrap();
        let les = long_exact_sequence(&ses).unwrap();
        for (i, slot) in les.slots.iter().enumerate() {
            if let LesSlot::B(_) = slot {
                assert!(les.maps[i].is_isomorphism());
            }
        }
    }
}

#[test]
fn snake_examples() {
    let zz = FpModule::free(&z(), 1);
    let z2 = FpModule::cyclic(&z(), 2);
    let z3 = FpModule::cyclic(&z(), 3);
    let zero = FpModule::zero(&z());
    // zero verticals: kernels are the top row, cokernels the bottom row
    let sq = SnakeSquare {
        f: hom(&zz, &zz, 2),
        g: hom(&zz, &z2, 1),
        f2: hom(&zz, &zz, 3),
        g2: hom(&zz, &z3, 1),
        a: hom(&zz, &zz, 0),
        b: hom(&zz, &zz, 0),
        c: hom(&z2, &z3, 0),
    };
    let s = snake(&sq).unwrap();
    assert!(s.is_exact() && s.connecting().is_zero());
    for (m, want) in s.modules.iter().zip([&zz, &zz, &z2, &zz, &zz, &z3]) {
        assert!(m.is_isomorphic(want));
    }
    // Z -1-> Z -> 0 over 0 -> Z -1-> Z with a = b = ×2
    let sq = SnakeSquare {
        f: hom(&zz, &zz, 1),
        g: hom(&zz, &zero, 0),
        f2: hom(&zz, &zz, 1),
        g2: hom(&zz, &zero, 0),
        a: hom(&zz, &zz, 2),
        b: hom(&zz, &zz, 2),
        c: hom(&zero, &zero, 0),
    };
    let s = snake(&sq).unwrap();
    assert!(s.is_exact());
    let decs: Vec<String> = s.modules.iter().map(|m| m.decomposition().to_string()).collect();
    assert_eq!(decs, ["0", "0", "0", "Z/2", "Z/2", "0"]);
}

#[test]
fn random_snakes_are_exact() {
    let mut rng = fixtures::rng(21);
    for _ in 0..40 {
        let ring = fixtures::random_ring(&mut rng);
        let top = fixtures::random_ses_modules(&mut rng, &ring);
        let bottom = fixtures::random_ses_modules(&mut rng, &ring);
        // verticals: any b that carries im f into im f2 induces a and c; use b = 0 or
        // a random map between the middle terms when both ends are the same sequence
        let same = rng.gen_bool(0.5);
        let bottom = if same { top.clone() } else { bottom };
        let b = if same {
            let k = BigInt::from(rng.gen_range(-3..=3));
            ModuleHom::new(top.b.clone(), top.b.clone(), Matrix::identity(&ring, top.b.generators()).scale(&k)).unwrap()
        } else {
            ModuleHom::zero(&top.b, &bottom.b)
        };
        let a = top.f.then(&b).factor_through_injection(&bottom.f).unwrap();
        let c = b.then(&bottom.g).factor_through_surjection(&top.g).unwrap();
        let sq = SnakeSquare { f: top.f, g: top.g, f2: bottom.f, g2: bottom.g, a, b, c };
        assert!(snake(&sq).unwrap().is_exact());
    }
}
