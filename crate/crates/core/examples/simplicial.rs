//! Simplicial homology of small triangulated spaces.

use homalg::derived::universal_coefficient_sides;
use homalg::exactlin::RingSpec;
use homalg::fpmod::FpModule;
use homalg::simplicial::{self, chain_complex_of, format_report, homology_report, SimplicialComplex};

fn main() {
    let spaces = [
        ("sphere", simplicial::hollow_tetrahedron()),
        ("circle", simplicial::circle()),
        ("projective plane", simplicial::projective_plane()),
        ("Klein bottle", simplicial::klein_bottle()),
    ];
    let z2 = FpModule::cyclic(&RingSpec::Integers, 2);
    for (name, k) in &spaces {
        println!("{name} {:?}: {}", k.counts(), format_report(&homology_report(k)));
        let c = chain_complex_of(k, &RingSpec::Integers);
        for n in c.degrees() {
            let (lhs, _) = universal_coefficient_sides(&c, &z2, n).unwrap();
            println!("  H_{n}(K; Z/2) = {}", lhs.decomposition());
        }
    }

    let wedge: SimplicialComplex = "# two circles sharing vertex 0\n0 1\n1 2\n0 2\n0 3\n3 4\n0 4\n".parse().unwrap();
    println!("wedge of circles: {}", format_report(&homology_report(&wedge)));
    let two = simplicial::circle().disjoint_union(&simplicial::hollow_tetrahedron());
    println!("circle ⊔ sphere: {}", format_report(&homology_report(&two)));
}
