//! Finitely presented modules: decompositions, kernels, images, cokernels.

use homalg::exactlin::{Matrix, RingSpec};
use homalg::fpmod::{direct_sum, FpModule, ModuleHom};

fn main() {
    let z = RingSpec::Integers;
    // Z^3 modulo the columns (2, 0, 4) and (0, 6, 0).
    let m = FpModule::new(Matrix::from_rows(&z, &[vec![2, 0], vec![0, 6], vec![4, 0]]));
    println!("M = {}", m.decomposition());

    let z12 = FpModule::cyclic(&z, 12);
    let z18 = FpModule::cyclic(&z, 18);
    let f = ModuleHom::new(z12.clone(), z18.clone(), Matrix::scalar(&z, 3)).unwrap();
    println!("f: Z/12 -> Z/18, 1 -> 3");
    println!("  ker f   = {}", f.kernel().0.decomposition());
    println!("  im f    = {}", f.image().0.decomposition());
    println!("  coker f = {}", f.cokernel().0.decomposition());

    let sum = direct_sum(&FpModule::cyclic(&z, 2), &FpModule::cyclic(&z, 3)).unwrap().module;
    println!("Z/2 ⊕ Z/3 = {}, isomorphic to Z/6: {}", sum.decomposition(), sum.is_isomorphic(&FpModule::cyclic(&z, 6)));

    let z4: RingSpec = "Z/4".parse().unwrap();
    let n = FpModule::new(Matrix::from_rows(&z4, &[vec![2, 0], vec![0, 0]]));
    println!("over Z/4: {} (free rank {})", n.decomposition(), n.decomposition().free_rank);
}
