use num_complex::Complex64;
use pencil_contact::curves::{fixtures, X, Y, Z};
use pencil_contact::exact::{resultant, MultiPoly, Rat};
use pencil_contact::oracle::{random_projectivity, root_clusters_exact, ComplexPoly, OracleConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn eval_raw(p: &MultiPoly, at: &[(&str, Complex64)]) -> Complex64 {
    use num_traits::ToPrimitive;
    let vars = p.vars().to_vec();
    let mut acc = Complex64::ZERO;
    for (exp, c) in p.terms() {
        let mut term = Complex64::new(c.to_f64().unwrap_or(0.0), 0.0);
        for (i, &e) in exp.iter().enumerate() {
            if e == 0 { continue; }
            let v = at.iter().find(|(n, _)| *n == vars[i]).map(|(_, v)| *v).unwrap();
            term *= v.powu(e);
        }
        acc += term;
    }
    acc
}

fn majorant_residual(p: &MultiPoly, at: &[(&str, Complex64)]) -> f64 {
    use num_traits::ToPrimitive;
    let vars = p.vars().to_vec();
    let mut acc = Complex64::ZERO;
    let mut maj = 0.0f64;
    for (exp, c) in p.terms() {
        let mut term = Complex64::new(c.to_f64().unwrap_or(0.0), 0.0);
        for (i, &e) in exp.iter().enumerate() {
            if e == 0 { continue; }
            let v = at.iter().find(|(n, _)| *n == vars[i]).map(|(_, v)| *v).unwrap();
            term *= v.powu(e);
        }
        acc += term;
        maj += term.norm();
    }
    acc.norm() / maj.max(f64::MIN_POSITIVE)
}

fn syl(p: &[Complex64], q: &[Complex64], k: usize) -> Vec<Vec<Complex64>> {
    let m = p.len() - 1; let n = q.len() - 1;
    let rows_p = n - k; let rows_q = m - k;
    let size = rows_p + rows_q; let width = m + n - k;
    let mut mat = vec![vec![Complex64::ZERO; size]; size];
    for row in 0..rows_p { for (d, &c) in p.iter().enumerate() {
        let degree = d + rows_p - 1 - row; let col = width - 1 - degree;
        if col < size { mat[row][col] = c; } } }
    for row in 0..rows_q { for (d, &c) in q.iter().enumerate() {
        let degree = d + rows_q - 1 - row; let col = width - 1 - degree;
        if col < size { mat[rows_p + row][col] = c; } } }
    mat
}

fn det_c(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let pivot = (k..n).max_by(|&i, &j| m[i][k].norm().partial_cmp(&m[j][k].norm()).unwrap()).unwrap();
        if m[pivot][k].norm() == 0.0 { return Complex64::ZERO; }
        if pivot != k { m.swap(pivot, k); det = -det; }
        det *= m[k][k];
        for i in k + 1..n {
            let f = m[i][k] / m[k][k];
            for j in k..n { let sub = f * m[k][j]; m[i][j] -= sub; }
        }
    }
    det
}

fn main() {
    let (c, _duals) = fixtures::quartic_with_forced_bitangents(33).unwrap();
    let cfg = OracleConfig::with_seed(33);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x62697461);
    let t = random_projectivity(&mut rng);
    let c = c.transform(&t);
    let mb_line = &(&MultiPoly::var("m") * &MultiPoly::var(X)) + &MultiPoly::var("b");
    let q = c.poly().substitute(Y, &mb_line).eval_partial(&[(Z, Rat::from_integer(1.into()))]);
    let coeffs = q.as_univariate_in(X);
    let (a0, a1, a2, a3, a4) = (&coeffs[0], &coeffs[1], &coeffs[2], &coeffs[3], &coeffs[4]);
    let e1 = {
        let t1 = (&(a4 * a4) * a1).scale(&Rat::from_integer(8.into()));
        let t2 = (&(a4 * a2) * a3).scale(&Rat::from_integer(4.into()));
        &(&t1 - &t2) + &(&(a3 * a3) * a3)
    };
    let e2 = {
        let t1 = (&(&(a4 * a4) * a4) * a0).scale(&Rat::from_integer(64.into()));
        let inner = &(a4 * a2).scale(&Rat::from_integer(4.into())) - &(a3 * a3);
        &t1 - &(&inner * &inner)
    };
    let r = resultant(&e1, &e2, "b").unwrap().to_unipoly().unwrap();
    let sf = r.squarefree_part();
    {
        let (ints, _) = sf.clear_denominators();
        let bits: Vec<u64> = ints.iter().map(|c| c.bits()).collect();
        println!("sf coeff bits: {bits:?}");
        let cp = ComplexPoly::from_unipoly(&sf).unwrap();
        println!("sf scale: {}", cp.scale());
        let roots = cp.all_roots(&cfg);
        match &roots {
            Ok(r) => println!("first roots: {:?}", &r[..4.min(r.len())]),
            Err(e) => println!("root err: {e}"),
        }
    }
    let clusters = root_clusters_exact(&sf, &cfg).unwrap();
    println!("distinct slopes: {}", clusters.len());
    {
        let reps: Vec<Complex64> = clusters.iter().map(|c| c.representative).collect();
        let mut dists: Vec<f64> = vec![];
        for i in 0..reps.len() { for j in i+1..reps.len() { dists.push((reps[i]-reps[j]).norm()); } }
        dists.sort_by(|a,b| a.partial_cmp(b).unwrap());
        println!("min slope separations: {:?}", &dists[..6.min(dists.len())]);
        let mults: Vec<u32> = clusters.iter().map(|c| c.multiplicity).collect();
        println!("slope cluster multiplicities: {:?}", mults);
    }
    let pattern_radius = cfg.residual_tol.sqrt();
    let mut n_pairs = 0;
    let mut n_profile = std::collections::BTreeMap::<String, u32>::new();
    let mut accepted: Vec<(Complex64, Complex64)> = Vec::new();
    let mut rejections = std::collections::BTreeMap::<String, u32>::new();
    for cl in &clusters {
        let m0 = cl.representative;
        let at = [("m", m0)];
        let e1b: Vec<Complex64> = {
            let cs = e1.as_univariate_in("b").iter().map(|cf| eval_raw(cf, &at)).collect::<Vec<_>>();
            match ComplexPoly::from_complex_coeffs(cs) { Ok(cp) => cp.all_roots(&cfg).unwrap_or_default(), Err(_) => vec![] }
        };
        let e2b: Vec<Complex64> = {
            let cs = e2.as_univariate_in("b").iter().map(|cf| eval_raw(cf, &at)).collect::<Vec<_>>();
            match ComplexPoly::from_complex_coeffs(cs) { Ok(cp) => cp.all_roots(&cfg).unwrap_or_default(), Err(_) => vec![] }
        };
        let mut commons = vec![];
        for &x in &e1b { for &y in &e2b { if (x - y).norm() <= pattern_radius {
            let mid = (x + y) / 2.0;
            if commons.iter().all(|&z: &Complex64| (z - mid).norm() > pattern_radius) { commons.push(mid); }
        } } }
        for b0 in commons {
            n_pairs += 1;
            // newton refine replica
            let (m, b) = {
                let d1m = e1.derivative("m"); let d1b = e1.derivative("b");
                let d2m = e2.derivative("m"); let d2b = e2.derivative("b");
                let mut m = m0; let mut b = b0;
                for _ in 0..4 {
                    let at2 = [("m", m), ("b", b)];
                    let f1 = eval_raw(&e1, &at2); let f2 = eval_raw(&e2, &at2);
                    let j11 = eval_raw(&d1m, &at2); let j12 = eval_raw(&d1b, &at2);
                    let j21 = eval_raw(&d2m, &at2); let j22 = eval_raw(&d2b, &at2);
                    let det = j11 * j22 - j12 * j21;
                    if det.norm() < 1e-300 { break; }
                    let dm = (f1 * j22 - f2 * j12) / det;
                    let db = (f2 * j11 - f1 * j21) / det;
                    m -= dm; b -= db;
                }
                (m, b)
            };
            let r1 = majorant_residual(&e1, &[("m", m), ("b", b)]);
            let r2 = majorant_residual(&e2, &[("m", m), ("b", b)]);
            if r1 > pattern_radius || r2 > pattern_radius {
                *rejections.entry(format!("residual r1={r1:.2e} r2={r2:.2e}")).or_insert(0) += 1;
                continue;
            }
            let dedupe_radius = 1e-8 * (1.0 + m.norm() + b.norm());
            if accepted.iter().any(|&(am, ab)| (am - m).norm() + (ab - b).norm() <= dedupe_radius) {
                *rejections.entry("dedupe".into()).or_insert(0) += 1;
                continue;
            }
            let q0: Vec<Complex64> = coeffs.iter().map(|cf| eval_raw(cf, &[("m", m), ("b", b)])).collect();
            let max = q0.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
            let q0n: Vec<Complex64> = q0.iter().map(|c| c / max).collect();
            let cp = ComplexPoly::from_complex_coeffs(q0n).unwrap();
            let roots = cp.all_roots(&cfg).unwrap();
            let mut rs = roots.clone();
            rs.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
            let mut profile: Vec<u32> = vec![];
            let mut used = vec![false; rs.len()];
            for i in 0..rs.len() {
                if used[i] { continue; }
                let mut n = 1; used[i] = true;
                for j in i+1..rs.len() {
                    if !used[j] && (rs[i] - rs[j]).norm() < pattern_radius { used[j] = true; n += 1; }
                }
                profile.push(n);
            }
            profile.sort_unstable_by(|a, b| b.cmp(a));
            *n_profile.entry(format!("{:?}", profile)).or_insert(0) += 1;
            let ladder_ok = {
                let mut ok = false;
                for radius in [1e-6, 1e-5, 1e-4, 1e-3] {
                    let mut prof: Vec<u32> = vec![];
                    let mut used2 = vec![false; rs.len()];
                    for i in 0..rs.len() {
                        if used2[i] { continue; }
                        let mut n = 1; used2[i] = true;
                        for j in i+1..rs.len() {
                            if !used2[j] && (rs[i] - rs[j]).norm() < radius { used2[j] = true; n += 1; }
                        }
                        prof.push(n);
                    }
                    prof.sort_unstable_by(|a, b| b.cmp(a));
                    if prof == [2, 2] { ok = true; break; }
                }
                ok
            };
            if !ladder_ok {
                *rejections.entry(format!("ladder-pattern {:?}", profile)).or_insert(0) += 1;
                let mut gaps: Vec<f64> = vec![];
                for i in 0..rs.len() { for j in i+1..rs.len() { gaps.push((rs[i]-rs[j]).norm()); } }
                gaps.sort_by(|a,b| a.partial_cmp(b).unwrap());
                println!("LADDER-REJECT m={m} b={b} r1={r1:.1e} r2={r2:.1e} gaps={:?}", &gaps[..3.min(gaps.len())]);
                continue;
            }
            // psc check mirror
            {
                let qn: Vec<Complex64> = { let mx = q0.iter().map(|c| c.norm()).fold(0.0f64, f64::max); q0.iter().map(|c| c / mx).collect() };
                let dq: Vec<Complex64> = (1..qn.len()).map(|k| qn[k] * Complex64::new(k as f64, 0.0)).collect();
                let s0 = det_c(syl(&qn, &dq, 0));
                let s1d = det_c(syl(&qn, &dq, 1));
                if s0.norm() >= pattern_radius || s1d.norm() >= pattern_radius {
                    *rejections.entry(format!("psc s0={:.2e} s1={:.2e}", s0.norm(), s1d.norm())).or_insert(0) += 1;
                    continue;
                }
            }
            accepted.push((m, b));
        }
    }
    println!("accepted: {}", accepted.len());
    println!("rejections: {rejections:?}");
    println!("pairs: {n_pairs}");
    println!("profiles: {:?}", n_profile);
    for cl in clusters.iter().take(3) {
        let m0 = cl.representative;
        println!("slope m0 = {m0}");
        let at = [("m", m0)];
        for (name, e) in [("E1", &e1), ("E2", &e2)] {
            let cs: Vec<Complex64> = e.as_univariate_in("b").iter().map(|cf| eval_raw(cf, &at)).collect();
            println!("  {name} coeffs: {:?}", cs.iter().map(|c| c.norm()).collect::<Vec<_>>());
            match ComplexPoly::from_complex_coeffs(cs) {
                Ok(cp) => {
                    match cp.all_roots(&cfg) {
                        Ok(roots) => println!("  {name} b-roots: {roots:?}"),
                        Err(e) => println!("  {name} root err: {e}"),
                    }
                }
                Err(err) => println!("  {name} conv err: {err}"),
            }
        }
    }
}
// extra diagnostics appended: inspect first slopes in detail
