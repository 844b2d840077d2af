//! Free resolutions, projectivity and comparison maps.

use homalg::exactlin::{Matrix, RingSpec};
use homalg::fpmod::{FpModule, ModuleHom};
use homalg::resolve::{free_resolution, is_projective, lift_between_resolutions, Resolution};

fn show(name: &str, r: &Resolution) {
    let maps: Vec<String> = r.maps.iter().map(|m| m.map().to_string().trim().replace('\n', " ")).collect();
    println!("{name}: ranks {:?}, complete {}, maps {}", r.free_ranks, r.complete, maps.join(" "));
}

fn main() {
    let z = RingSpec::Integers;
    let z4: RingSpec = "Z/4".parse().unwrap();
    let z6: RingSpec = "Z/6".parse().unwrap();

    let z2 = FpModule::cyclic(&z, 2);
    let minimal = free_resolution(&z2, 3);
    show("Z/2 over Z", &minimal);
    show("Z/2 over Z/4", &free_resolution(&FpModule::cyclic(&z4, 2), 6));
    show("Z/2 ⊕ Z/12 over Z", &free_resolution(&FpModule::from_decomposition(&z, 0, &[2.into(), 12.into()]), 2));

    let c3 = FpModule::cyclic(&z6, 3);
    println!("Z/3 over Z/6: projective {}, free {}", is_projective(&c3), c3.decomposition().is_free());
    println!("Z/2 over Z/4 projective: {}", is_projective(&FpModule::cyclic(&z4, 2)));

    let aug = ModuleHom::new(FpModule::free(&z, 2), z2.clone(), Matrix::from_rows(&z, &[vec![1, 0]])).unwrap();
    let phi = ModuleHom::new(FpModule::free(&z, 2), FpModule::free(&z, 2), Matrix::diagonal(&z, &[2, 1])).unwrap();
    let padded = Resolution::from_parts(aug, vec![phi]).unwrap();
    let u = lift_between_resolutions(&ModuleHom::identity(&z2), &minimal, &padded).unwrap();
    for (n, h) in u.levels() {
        println!("comparison u_{n} =\n{}", h.map());
    }
}
