use pencil_contact::curves::CurvePencil;
use pencil_contact::exact::Rat;
use pencil_contact::oracle::{count_bitangent_lines_through_point, OracleConfig};

fn main() {
    let pencil = CurvePencil::random(4, 77, 10).unwrap();
    let point = [
        Rat::from_integer(1.into()),
        Rat::from_integer(2.into()),
        Rat::from_integer(1.into()),
    ];
    let start = std::time::Instant::now();
    let out = count_bitangent_lines_through_point(&pencil, &point, &OracleConfig::with_seed(77));
    println!("quartic pencil: {:?} in {:?}", out, start.elapsed());
}
