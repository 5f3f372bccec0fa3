use k3cubic::homological::graded_module::GradedModule;
use k3cubic::homological::resolution::free_resolution;
use k3cubic::pipeline::witness::WitnessBundle;
use std::path::Path;
use std::time::Instant;

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/k3_genus7_p7.json");
    let ideal = WitnessBundle::load(&path, None).unwrap().to_scheme().unwrap().ideal;
    let t = Instant::now();
    let res = free_resolution(&GradedModule::quotient_of_ring(&ideal), 9).unwrap();
    println!("P7 resolution: {:?} betti {:?}", t.elapsed(), res.betti_numbers());
    println!("alt-num == series-num: {}", res.alternating_numerator() == ideal.hilbert_series().numerator);
    println!("betti detail: {:?}", res.betti());
}
