//! Reading and writing complexes as JSON.

use homalg::chain::ChainComplex;
use homalg::exactlin::{Matrix, RingSpec};
use homalg::fpmod::FpModule;
use homalg::json::JsonForm;

fn main() {
    let z4: RingSpec = "Z/4".parse().unwrap();
    let r = FpModule::free(&z4, 1);
    let c = ChainComplex::new(&z4, 0, vec![r.clone(), r.clone(), r], vec![Matrix::scalar(&z4, 2), Matrix::scalar(&z4, 2)])
        .unwrap();
    let text = c.to_json_string();
    println!("{text}");
    let back = ChainComplex::from_json_str(&text).unwrap();
    println!("round trip equal: {}", back == c);
    for n in back.degrees() {
        println!("H{n} = {}", back.homology_module(n).decomposition());
    }

    match ChainComplex::from_json_str("{\"ring\": \"Z\", \"degrees\": [0]") {
        Ok(_) => println!("parsed"),
        Err(e) => println!("truncated input: {e} (parse error: {})", e.is_parse_error()),
    }
}
