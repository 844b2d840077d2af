//! Smith normal form over Z and Z/m, with the transforms.

use homalg::exactlin::{kernel_basis, snf, solve, Matrix, RingSpec};

fn main() {
    let z = RingSpec::Integers;
    let a = Matrix::from_rows(&z, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = snf(&a);
    println!("A =\n{a}");
    println!("D =\n{}", s.d);
    println!("U =\n{}V =\n{}", s.u, s.v);
    println!("U A V == D: {}", &(&s.u * &a) * &s.v == s.d);
    let factors: Vec<String> = s.invariant_factors().iter().map(|x| x.to_string()).collect();
    println!("invariant factors: {}", factors.join(", "));

    let z12: RingSpec = "Z/12".parse().unwrap();
    let b = a.over(&z12);
    println!("over Z/12: {:?}", snf(&b).invariant_factors().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("kernel over Z/12 =\n{}", kernel_basis(&b));

    let rhs = Matrix::column_vector(&z, &[2, 0, 2]);
    match solve(&a, &rhs).unwrap() {
        Some(x) => println!("A x = (2, 0, 2) has the solution\n{x}"),
        None => println!("A x = (2, 0, 2) has no integer solution"),
    }
}
