//! Tor by resolving either side, and the gcd table.

use homalg::derived::{ideal_quotient_module, tor, torsion_part, ResolveSide, TorRequest};
use homalg::exactlin::RingSpec;
use homalg::fpmod::FpModule;
use num_bigint::BigInt;

fn main() {
    let z = RingSpec::Integers;
    for (a, b) in [(4, 6), (9, 12), (5, 7)] {
        let (ma, mb) = (FpModule::cyclic(&z, a), FpModule::cyclic(&z, b));
        let right = tor(&TorRequest::new(&ma, &mb, 1)).unwrap();
        let left = tor(&TorRequest::new(&ma, &mb, 1).side(ResolveSide::Left)).unwrap();
        let ideal = ideal_quotient_module(&BigInt::from(a), &BigInt::from(b));
        println!(
            "Tor_1(Z/{a}, Z/{b}) = {} | {} | {}",
            right.decomposition(),
            left.decomposition(),
            ideal.decomposition()
        );
    }

    let m = FpModule::from_decomposition(&z, 1, &[BigInt::from(4), BigInt::from(12)]);
    let x = BigInt::from(6);
    let t = tor(&TorRequest::new(&FpModule::cyclic(&z, 6), &m, 1)).unwrap();
    println!("Tor_1(Z/6, {}) = {}, 6-torsion = {}", m.decomposition(), t.decomposition(), torsion_part(&m, &x).decomposition());
    println!("Tor_0(Z/6, M) = {}", tor(&TorRequest::new(&FpModule::cyclic(&z, 6), &m, 0)).unwrap().decomposition());

    let z4: RingSpec = "Z/4".parse().unwrap();
    let c2 = FpModule::cyclic(&z4, 2);
    for i in 1..=4 {
        println!("over Z/4: Tor_{i}(Z/2, Z/2) = {}", tor(&TorRequest::new(&c2, &c2, i)).unwrap().decomposition());
    }
}
