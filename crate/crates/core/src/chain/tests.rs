use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::*;
use crate::exactlin::{Matrix, RingSpec};
use crate::fpmod::{FpModule, ModuleHom};

fn z() -> RingSpec {
    RingSpec::Integers
}

fn zz() -> FpModule {
    FpModule::free(&z(), 1)
}

fn two_term(k: i64) -> ChainComplex {
    ChainComplex::new(&z(), 0, vec![zz(), zz()], vec![Matrix::scalar(&z(), k)]).unwrap()
}

fn dec(m: &FpModule) -> (usize, Vec<BigInt>) {
    m.decompose()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn times_two_complex() {
    let c = two_term(2);
    assert!(c.homology_module(1).is_zero());
    assert_eq!(dec(&c.homology_module(0)), (0, big(&[2])));
    assert!(c.homology_module(5).is_zero());
}

#[test]
fn nonzero_composite_is_rejected() {
    let s = Matrix::scalar(&z(), 2);
    let err = ChainComplex::new(&z(), 0, vec![zz(), zz(), zz()], vec![s.clone(), s]).unwrap_err();
    assert_eq!(err, ChainError::NotAComplex(2));
    assert_eq!(err.to_string(), "not a complex: d∘d ≠ 0 at degree 2");
}

#[test]
fn zero_complex_is_acyclic() {
    let c = ChainComplex::zero_complex(&z());
    assert!(c.is_exact());
    let zeros = ChainComplex::new(
        &z(),
        0,
        vec![FpModule::zero(&z()); 3],
        vec![Matrix::zeros(&z(), 0, 0), Matrix::zeros(&z(), 0, 0)],
    )
    .unwrap();
    assert!(zeros.is_exact());
    assert!(homology_summary(&zeros).iter().all(|h| h.homology.is_zero()));
}

#[test]
fn z4_times_two_chain_against_enumeration() {
    let z4 = FpModule::cyclic(&z(), 4);
    let two = Matrix::scalar(&z(), 2);
    let c = ChainComplex::new(&z(), 0, vec![z4.clone(), z4.clone(), z4], vec![two.clone(), two]).unwrap();
    // enumerate Z/4: ker(x2) = {0, 2}, im(x2) = {0, 2}
    let ker: Vec<i64> = (0..4).filter(|x| (2 * x) % 4 == 0).collect();
    let im: Vec<i64> = {
        let mut v: Vec<i64> = (0..4).map(|x| (2 * x) % 4).collect();
        v.sort();
        v.dedup();
        v
    };
    assert_eq!(ker, vec![0, 2]);
    assert_eq!(im, vec![0, 2]);
    // H_1 = ker/im has 1 element, H_0 = Z/4 / im has 2, H_2 = ker has 2
    assert!(c.homology_module(1).is_zero());
    assert_eq!(c.homology_module(0).decomposition().order(), Some(BigInt::from(4 / im.len())));
    assert_eq!(dec(&c.homology_module(0)), (0, big(&[2])));
    assert_eq!(c.homology_module(2).decomposition().order(), Some(BigInt::from(ker.len())));
}

fn quotient(d: i64) -> ModuleHom {
    ModuleHom::new(zz(), FpModule::cyclic(&z(), d), Matrix::scalar(&z(), 1)).unwrap()
}

fn times(k: i64) -> ModuleHom {
    ModuleHom::new(zz(), zz(), Matrix::scalar(&z(), k)).unwrap()
}

#[test]
fn short_sequences() {
    let good = ses_to_complex(&times(2), &quotient(2)).unwrap();
    assert!(good.is_exact());
    for n in -1..=3 {
        assert!(good.is_exact_at(n), "degree {n}");
    }
    let bad = ses_to_complex(&times(6), &quotient(3)).unwrap();
    assert!(!bad.is_exact());
    assert_eq!(bad.inexact_degrees(), vec![1]);
    let zero = FpModule::zero(&z());
    let idz = ModuleHom::identity(&zero);
    assert!(ses_to_complex(&idz, &idz).unwrap().is_exact());
}

#[test]
fn chain_map_validation() {
    let c = two_term(1);
    assert!(ChainMap::from_homs(&c, &c, ChainMap::identity(&c).levels().clone()).is_ok());
    assert!(ChainMap::new(&c, &c, BTreeMap::new()).is_ok());
    let levels = BTreeMap::from([(1, Matrix::scalar(&z(), 1)), (0, Matrix::scalar(&z(), 2))]);
    assert_eq!(ChainMap::new(&c, &c, levels).unwrap_err(), ChainError::SquareFails(1));
}

#[test]
fn induced_maps() {
    let c = two_term(2);
    let d = ChainComplex::concentrated(&FpModule::cyclic(&z(), 2), 0);
    let u = ChainMap::new(&c, &d, BTreeMap::from([(0, Matrix::scalar(&z(), 1))])).unwrap();
    let h0 = induced_on_homology(&u, 0);
    assert!(h0.is_isomorphism());
    assert!(is_quasi_iso(&u));
    let id = ChainMap::identity(&c);
    assert!(induced_on_homology(&id, 0).is_identity());
    assert!(induced_on_homology(&ChainMap::zero(&c, &c), 0).is_zero());
}

#[test]
fn zero_into_complex() {
    let zero = ChainComplex::zero_complex(&z());
    let exact = two_term(1);
    assert!(is_quasi_iso(&ChainMap::zero(&zero, &exact)));
    assert!(!is_quasi_iso(&ChainMap::zero(&zero, &two_term(2))));
}

#[test]
fn sums_of_complexes() {
    let c = two_term(2);
    let s = direct_sum_complex(&c, &c).unwrap();
    assert_eq!(dec(&s.homology_module(0)), (0, big(&[2, 2])));
    let zero = ChainComplex::zero_complex(&z());
    let cz = direct_sum_complex(&c, &zero).unwrap();
    for n in c.degrees() {
        assert!(cz.module(n).is_isomorphic(c.module(n)));
    }
    let d = two_term(0);
    let cd = direct_sum_complex(&c, &d).unwrap();
    // H_n(C ⊕ D) ≅ H_n(C) ⊕ H_n(D)
    for n in -1..=2 {
        let sum = crate::fpmod::direct_sum(&c.homology_module(n), &d.homology_module(n)).unwrap();
        assert!(cd.homology_module(n).is_isomorphic(&sum.module));
    }
}

#[test]
fn representatives_round_trip() {
    let c = two_term(0);
    let h = c.homology(0);
    let rep = h.representative(&Matrix::identity(&z(), h.homology.generators()));
    let back = h.class_of(&rep).unwrap();
    assert!(h.homology.is_zero_vector(&(&back - &Matrix::identity(&z(), h.homology.generators()))));
}

#[test]
fn shift_negates_boundaries() {
    let c = two_term(3).shifted(1);
    assert_eq!(c.lo(), 1);
    assert_eq!(c.boundary(2).map(), &Matrix::scalar(&z(), -3));
    assert_eq!(dec(&c.homology_module(1)), (0, big(&[3])));
}
