use pencil_contact::curves::{CurvePencil, X, Y, Z};
use pencil_contact::exact::{det3, resultant_bivariate, MultiPoly, Rat};
use pencil_contact::oracle::{random_projectivity, ComplexPoly, OracleConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let pencil = CurvePencil::random(4, 91, 10).unwrap();
    let cfg = OracleConfig::with_seed(91);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x68797066);
    let t = random_projectivity(&mut rng);
    let pencil = pencil.transform(&t);
    let one = Rat::from_integer(1.into());
    let fh = pencil.f().poly();
    let gh = pencil.g().poly();
    let f = fh.eval_partial(&[(Z, one.clone())]);
    let g = gh.eval_partial(&[(Z, one.clone())]);
    let xyz = [X, Y, Z];
    let rows: Vec<Vec<MultiPoly>> = xyz.iter().map(|a| {
        xyz.iter().map(|b| {
            let fab = fh.derivative(a).derivative(b).eval_partial(&[(Z, one.clone())]);
            let gab = gh.derivative(a).derivative(b).eval_partial(&[(Z, one.clone())]);
            &(&g * &fab) - &(&f * &gab)
        }).collect()
    }).collect();
    let flex_eq = det3(&rows);
    let u = &(&g * &f.derivative(X)) - &(&f * &g.derivative(X));
    let v = &(&g * &f.derivative(Y)) - &(&f * &g.derivative(Y));
    let ram = &(&flex_eq.derivative(X) * &v) - &(&flex_eq.derivative(Y) * &u);
    eprintln!("computing main resultant...");
    let eliminant = resultant_bivariate(&flex_eq, &ram, Y, X).unwrap();
    let base_elim = resultant_bivariate(&f, &g, Y, X).unwrap();
    let node_elim = resultant_bivariate(&u, &v, Y, X).unwrap().remove_common_factors(&base_elim);
    let reduced = eliminant.remove_common_factors(&base_elim).remove_common_factors(&node_elim).squarefree_part();
    eprintln!("reduced degree {:?}", reduced.degree());
    let (ints, _) = reduced.clear_denominators();
    let bits: Vec<i64> = ints.iter().map(|c| c.bits() as i64).collect();
    eprintln!("bits profile: first 5 {:?} mid {:?} last 5 {:?}", &bits[..5], &bits[28..33], &bits[bits.len()-5..]);
    match ComplexPoly::from_unipoly(&reduced) {
        Ok(cp) => {
            eprintln!("converted, scale {}", cp.scale());
            match cp.all_roots(&cfg) {
                Ok(roots) => eprintln!("roots ok, n = {}, first {:?}", roots.len(), &roots[..3]),
                Err(e) => eprintln!("rooting failed: {e}"),
            }
        }
        Err(e) => eprintln!("conversion failed: {e}"),
    }
}
