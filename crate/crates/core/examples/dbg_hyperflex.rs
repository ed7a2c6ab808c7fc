use pencil_contact::curves::CurvePencil;
use pencil_contact::oracle::{count_hyperflexes_quartic_pencil, OracleConfig};

fn main() {
    let pencil = CurvePencil::random(4, 91, 10).unwrap();
    let mut cfg = OracleConfig::with_seed(91);
    cfg.stretch_budget_secs = 3600;
    let start = std::time::Instant::now();
    let out = count_hyperflexes_quartic_pencil(&pencil, &cfg);
    println!("hyperflexes: {:?} in {:?}", out, start.elapsed());
}
