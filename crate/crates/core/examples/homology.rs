//! Chain complexes, homology, exactness and induced maps.

use homalg::chain::{induced_on_homology, ses_to_complex, ChainComplex, ChainMap};
use homalg::exactlin::{Matrix, RingSpec};
use homalg::fpmod::{FpModule, ModuleHom};

fn main() {
    let z = RingSpec::Integers;
    let zz = FpModule::free(&z, 1);
    let z2 = FpModule::cyclic(&z, 2);
    let z3 = FpModule::cyclic(&z, 3);

    let iota = ModuleHom::new(zz.clone(), zz.clone(), Matrix::scalar(&z, 2)).unwrap();
    let tau = ModuleHom::new(zz.clone(), z2.clone(), Matrix::scalar(&z, 1)).unwrap();
    println!("0 -> Z -x2-> Z -> Z/2 -> 0 exact: {}", ses_to_complex(&iota, &tau).unwrap().is_exact());
    let psi = ModuleHom::new(zz.clone(), zz.clone(), Matrix::scalar(&z, 6)).unwrap();
    let phi = ModuleHom::new(zz.clone(), z3, Matrix::scalar(&z, 1)).unwrap();
    let c = ses_to_complex(&psi, &phi).unwrap();
    println!("0 -> Z -x6-> Z -> Z/3 -> 0 inexact at {:?}", c.inexact_degrees());

    // 0 -> Z -x2-> Z -> 0 in degrees 1, 0
    let c = ChainComplex::new(&z, 0, vec![zz.clone(), zz.clone()], vec![Matrix::scalar(&z, 2)]).unwrap();
    for n in c.degrees() {
        println!("H{n} = {}", c.homology_module(n).decomposition());
    }

    // onto (0 -> Z/2 -> 0): an isomorphism on H0
    let d = ChainComplex::concentrated(&z2, 0);
    let u = ChainMap::new(&c, &d, [(0, Matrix::scalar(&z, 1))].into()).unwrap();
    let h0 = induced_on_homology(&u, 0);
    println!("H0(u) =\n{}isomorphism: {}", h0.map(), h0.is_isomorphism());

    let bad = ChainComplex::new(&z, 0, vec![zz.clone(), zz.clone(), zz], vec![Matrix::scalar(&z, 2), Matrix::scalar(&z, 3)]);
    println!("d = x2, x3: {}", bad.unwrap_err());
}
