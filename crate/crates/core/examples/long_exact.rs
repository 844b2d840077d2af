//! The snake lemma and the long exact homology sequence.

use homalg::chain::{ChainComplex, ChainMap};
use homalg::diagram::{long_exact_sequence, snake, LesSlot, ShortExactSeqComplexes, SnakeSquare};
use homalg::exactlin::{Matrix, RingSpec};
use homalg::fpmod::{FpModule, ModuleHom};

fn main() {
    let z = RingSpec::Integers;
    let zz = FpModule::free(&z, 1);
    let s = |k: i64| Matrix::scalar(&z, k);

    // A = Z[0], B = (Z -x2-> Z), C = Z[1]
    let a = ChainComplex::concentrated(&zz, 0);
    let b = ChainComplex::new(&z, 0, vec![zz.clone(), zz.clone()], vec![s(2)]).unwrap();
    let c = ChainComplex::concentrated(&zz, 1);
    let f = ChainMap::new(&a, &b, [(0, s(1))].into()).unwrap();
    let g = ChainMap::new(&b, &c, [(1, s(1)), (0, Matrix::zeros(&z, 0, 1))].into()).unwrap();
    let ses = ShortExactSeqComplexes::new(f, g).unwrap();
    let les = long_exact_sequence(&ses).unwrap();
    for (slot, m) in les.slots.iter().zip(&les.modules).filter(|(s, _)| **s != LesSlot::Zero) {
        println!("{slot:>8} = {}", m.decomposition());
    }
    println!("connecting map H_1(C) -> H_0(A) =\n{}", les.connecting(1).unwrap().map());
    println!("exact: {}", les.is_exact());

    // Snake: rows 0 -> Z -x2-> Z -> Z/2 -> 0 twice, verticals x3
    let z2 = FpModule::cyclic(&z, 2);
    let h = |from: &FpModule, to: &FpModule, k: i64| ModuleHom::new(from.clone(), to.clone(), s(k)).unwrap();
    let square = SnakeSquare {
        f: h(&zz, &zz, 2),
        g: h(&zz, &z2, 1),
        f2: h(&zz, &zz, 2),
        g2: h(&zz, &z2, 1),
        a: h(&zz, &zz, 3),
        b: h(&zz, &zz, 3),
        c: h(&z2, &z2, 3),
    };
    let seq = snake(&square).unwrap();
    let names = ["ker a", "ker b", "ker c", "coker a", "coker b", "coker c"];
    for (name, m) in names.iter().zip(&seq.modules) {
        println!("{name:>8} = {}", m.decomposition());
    }
    println!("snake exact: {}", seq.is_exact());
}
