//! Null-homotopies, chain homotopies and contractible complexes.

use homalg::chain::{induced_on_homology, ChainComplex, ChainMap};
use homalg::exactlin::{Matrix, RingSpec};
use homalg::fixtures;
use homalg::fpmod::FpModule;
use homalg::homotopy::{are_chain_homotopic, find_null_homotopy, is_split_exact};

fn main() {
    let z = RingSpec::Integers;
    let zz = FpModule::free(&z, 1);

    let split = ChainComplex::new(&z, 0, vec![zz.clone(), zz.clone()], vec![Matrix::scalar(&z, 1)]).unwrap();
    match find_null_homotopy(&ChainMap::identity(&split)) {
        Some(s) => println!("Z -id-> Z is contractible, s_0 =\n{}", s.level(0).map()),
        None => println!("Z -id-> Z is not contractible"),
    }
    let double = ChainComplex::new(&z, 0, vec![zz.clone(), zz], vec![Matrix::scalar(&z, 2)]).unwrap();
    println!("Z -x2-> Z contractible: {}", find_null_homotopy(&ChainMap::identity(&double)).is_some());

    let mut rng = fixtures::rng(7);
    let ring: RingSpec = "Z/12".parse().unwrap();
    let c = fixtures::random_complex(&mut rng, &ring);
    let d = fixtures::random_complex(&mut rng, &ring);
    let f = fixtures::random_chain_map(&mut rng, &c, &d);
    let s = fixtures::random_raising(&mut rng, &c, &d);
    let g = f.add(&s.boundary_commutator().unwrap());
    println!("random complex over Z/12 split exact: {}", is_split_exact(&c));
    println!("f and f + ds + sd homotopic: {}", are_chain_homotopic(&f, &g).is_some());
    for n in c.degrees() {
        let same = induced_on_homology(&f, n).map() == induced_on_homology(&g, n).map();
        println!("  H_{n}(f) == H_{n}(g): {same}");
    }
}
