//! Univariate complex root extraction by the Aberth-Ehrlich simultaneous
//! iteration, with geometric clustering into root groups.

use super::{OracleConfig, OracleError};
use crate::exact::UniPoly;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

const LEADING_THRESHOLD: f64 = 1e-12;

/// Double-precision polynomial obtained from an exact one by normalization:
/// coefficients are divided exactly by a power of two that balances their
/// magnitudes, then by the largest magnitude, so the stored values have
/// maximum 1 and the leading coefficient stays above a fixed threshold.
#[derive(Clone, Debug)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
    /// Roots of the original polynomial are `scale` times the roots of the
    /// stored one.
    scale: f64,
}

impl ComplexPoly {
    /// Exact-to-float conversion with scale balancing: substituting
    /// x -> s*y with a power-of-two s flattens the coefficient magnitude
    /// profile, and the flattened values are normalized by their maximum.
    /// Fails only if the leading coefficient cannot be kept above the
    /// threshold (the profile is too ill-scaled for doubles).
    pub fn from_unipoly(p: &UniPoly) -> Result<Self, OracleError> {
        let n = p.degree().ok_or_else(|| {
            OracleError::Precondition("cannot extract roots of the zero polynomial".into())
        })?;
        if n == 0 {
            return Ok(ComplexPoly {
                coeffs: vec![Complex64::new(1.0, 0.0)],
                scale: 1.0,
            });
        }
        let (ints, _) = p.clear_denominators();
        let logs: Vec<Option<(f64, bool)>> = ints
            .iter()
            .map(|c| {
                if c.is_zero() {
                    None
                } else {
                    Some((approx_log2(c), c.is_negative()))
                }
            })
            .collect();
        let first = logs
            .iter()
            .position(|l| l.is_some())
            .expect("nonzero polynomial");
        let (log_first, _) = logs[first].unwrap();
        let (log_lead, _) = logs[n].unwrap();
        let mut k = if n > first {
            (log_first - log_lead) / (n - first) as f64
        } else {
            0.0
        };
        // raise the per-degree shift until the leading coefficient sits
        // within the double-precision window of the largest one
        for _ in 0..2048 {
            let lead_adj = log_lead + k * n as f64;
            let max_adj = logs
                .iter()
                .enumerate()
                .flat_map(|(i, l)| l.map(|(lg, _)| lg + k * i as f64))
                .fold(f64::NEG_INFINITY, f64::max);
            if max_adj - lead_adj <= 36.0 {
                break;
            }
            k += 1.0;
        }
        let adjusted: Vec<Option<(f64, bool)>> = logs
            .iter()
            .enumerate()
            .map(|(i, l)| l.map(|(lg, neg)| (lg + k * i as f64, neg)))
            .collect();
        let max_adj = adjusted
            .iter()
            .flatten()
            .map(|(a, _)| *a)
            .fold(f64::NEG_INFINITY, f64::max);
        let coeffs: Vec<Complex64> = adjusted
            .iter()
            .map(|l| match l {
                None => Complex64::ZERO,
                Some((a, neg)) => {
                    let v = (a - max_adj).exp2();
                    Complex64::new(if *neg { -v } else { v }, 0.0)
                }
            })
            .collect();
        let lead = coeffs[n].norm();
        if !lead.is_finite() || lead < LEADING_THRESHOLD {
            return Err(OracleError::IllScaled);
        }
        Ok(ComplexPoly {
            coeffs,
            scale: k.exp2(),
        })
    }

    pub fn from_complex_coeffs(raw: Vec<Complex64>) -> Result<Self, OracleError> {
        let mut coeffs = raw;
        let max = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
        if !(max.is_finite() && max > 0.0) {
            return Err(OracleError::IllScaled);
        }
        // trim relative to the vector's own scale: the caller may hand in
        // values normalized against some larger ambient quantity
        while matches!(coeffs.last(), Some(c) if c.norm() < LEADING_THRESHOLD * max) {
            coeffs.pop();
        }
        if coeffs.len() <= 1 {
            return Err(OracleError::Precondition(
                "degree zero after trimming".into(),
            ));
        }
        for c in coeffs.iter_mut() {
            *c /= max;
        }
        Ok(ComplexPoly { coeffs, scale: 1.0 })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::ZERO;
        let mut dp = Complex64::ZERO;
        for c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// Majorant sum |a_0| + |a_1||z| + ... used for backward-stable residual
    /// acceptance.
    fn majorant(&self, z: Complex64) -> f64 {
        let r = z.norm();
        let mut acc = 0.0f64;
        for c in self.coeffs.iter().rev() {
            acc = acc * r + c.norm();
        }
        acc.max(f64::MIN_POSITIVE)
    }

    /// All roots (of the normalized polynomial, rescaled back) by
    /// Aberth-Ehrlich iteration from a deterministic circle of initial
    /// guesses inside the Fujiwara root bound.
    pub fn all_roots(&self, cfg: &OracleConfig) -> Result<Vec<Complex64>, OracleError> {
        let n = self.degree();
        if n == 0 {
            return Ok(Vec::new());
        }
        let lead = self.coeffs[n].norm();
        let mut bound = 0.0f64;
        for k in 1..=n {
            let ratio = self.coeffs[n - k].norm() / lead;
            if ratio > 0.0 {
                bound = bound.max(ratio.powf(1.0 / k as f64));
            }
        }
        let radius = 2.0 * bound + 1e-3;
        let fresh = |k: usize, spin: usize| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64)
                + 0.41
                + 0.17 * spin as f64;
            Complex64::from_polar(radius * (0.3 + 0.6 * ((k * 7 + spin) % 5) as f64 / 4.0), theta)
        };
        let mut zs: Vec<Complex64> = (0..n).map(|k| fresh(k, 0)).collect();
        let mut converged = false;
        for iter in 0..cfg.max_iterations {
            let mut max_step = 0.0f64;
            for i in 0..n {
                let (p, dp) = self.eval_with_derivative(zs[i]);
                if p.norm() == 0.0 {
                    continue;
                }
                let newton = if dp.norm() > 0.0 { p / dp } else { p };
                let mut repulsion = Complex64::ZERO;
                for (j, zj) in zs.iter().enumerate() {
                    if j != i {
                        let diff = zs[i] - zj;
                        if diff.norm() > 1e-300 {
                            repulsion += diff.inv();
                        }
                    }
                }
                let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
                let mut step = if denom.norm() > 1e-300 {
                    newton / denom
                } else {
                    newton
                };
                // keep the iterate inside a sane disk
                if !step.is_finite() || step.norm() > 4.0 * radius {
                    step = if step.is_finite() && step.norm() > 0.0 {
                        step * (4.0 * radius / step.norm())
                    } else {
                        Complex64::new(radius * 0.01, radius * 0.01)
                    };
                }
                zs[i] -= step;
                if !zs[i].is_finite() {
                    zs[i] = fresh(i, iter as usize + 1);
                    continue;
                }
                let rel = step.norm() / (1.0 + zs[i].norm());
                if rel > max_step {
                    max_step = rel;
                }
            }
            if max_step < 1e-13 {
                converged = true;
                break;
            }
        }
        let _ = converged;
        // polish each root by damped Newton so the final backward error is
        // at rounding level even when the simultaneous iteration stalled
        for z in zs.iter_mut() {
            if !z.is_finite() {
                continue;
            }
            let mut best = *z;
            let mut best_res = self.eval(best).norm() / self.majorant(best);
            let mut cur = best;
            for _ in 0..30 {
                let (p, dp) = self.eval_with_derivative(cur);
                if dp.norm() < 1e-300 {
                    break;
                }
                let step = p / dp;
                let mut lambda = 1.0;
                let mut improved = false;
                for _ in 0..6 {
                    let cand = cur - step * lambda;
                    if cand.is_finite() {
                        let r = self.eval(cand).norm() / self.majorant(cand);
                        if r < best_res {
                            cur = cand;
                            best = cand;
                            best_res = r;
                            improved = true;
                            break;
                        }
                    }
                    lambda *= 0.5;
                }
                if !improved || best_res < 1e-16 {
                    break;
                }
            }
            *z = best;
        }
        // backward-error acceptance: every root must be a true root of a
        // relatively rounding-level perturbation of the coefficients
        let ok = zs
            .iter()
            .all(|&z| z.is_finite() && self.eval(z).norm() <= 1e-11 * self.majorant(z));
        if !ok {
            return Err(OracleError::NonConvergence);
        }
        Ok(zs.into_iter().map(|z| z * self.scale).collect())
    }
}

/// A group of nearby root approximations: its centroid, the group size as
/// multiplicity, and the absolute value of the polynomial at the centroid.
#[derive(Clone, Debug)]
pub struct RootCluster {
    pub representative: Complex64,
    pub multiplicity: u32,
    pub residual: f64,
}

/// Single-linkage grouping of complex values at the given radius; groups
/// are merged until their centroids are pairwise separated by more than the
/// radius. Returns (centroid, group size) pairs.
pub fn cluster_values(values: &[Complex64], radius: f64) -> Vec<(Complex64, u32)> {
    let mut groups: Vec<Vec<Complex64>> = Vec::new();
    let mut sorted: Vec<Complex64> = values.to_vec();
    sorted.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    for z in sorted {
        let mut placed = false;
        for g in groups.iter_mut() {
            if g.iter().any(|w| (w - z).norm() <= radius) {
                g.push(z);
                placed = true;
                break;
            }
        }
        if !placed {
            groups.push(vec![z]);
        }
    }
    loop {
        let mut merged = false;
        'outer: for i in 0..groups.len() {
            for j in i + 1..groups.len() {
                if (centroid(&groups[i]) - centroid(&groups[j])).norm() <= radius {
                    let moved = groups.swap_remove(j);
                    groups[i].extend(moved);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            break;
        }
    }
    groups
        .into_iter()
        .map(|g| (centroid(&g), g.len() as u32))
        .collect()
}

/// Clustering with residuals evaluated on the polynomial.
pub fn cluster_roots(poly: &ComplexPoly, roots: &[Complex64], radius: f64) -> Vec<RootCluster> {
    cluster_values(roots, radius)
        .into_iter()
        .map(|(c, size)| RootCluster {
            representative: c,
            multiplicity: size,
            residual: poly.eval(c / poly.scale).norm(),
        })
        .collect()
}

fn centroid(g: &[Complex64]) -> Complex64 {
    g.iter().sum::<Complex64>() / g.len() as f64
}

/// log2 of |c| for a nonzero big integer, accurate to double precision.
fn approx_log2(c: &BigInt) -> f64 {
    let bits = c.bits();
    if bits <= 52 {
        return c.abs().to_f64().unwrap().log2();
    }
    let shift = bits - 52;
    let top = (c.abs() >> shift as usize).to_f64().unwrap();
    top.log2() + shift as f64
}

/// The root-cluster interface over an exact polynomial: exact squarefree
/// decomposition first (multiplicities come from the exact structure), then
/// fast simple-root extraction per factor, then clustering as a cross-check.
pub fn root_clusters_exact(
    p: &UniPoly,
    cfg: &OracleConfig,
) -> Result<Vec<RootCluster>, OracleError> {
    let deg = p
        .degree()
        .ok_or_else(|| OracleError::Precondition("zero polynomial".into()))?;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        let cp = ComplexPoly::from_unipoly(&factor)?;
        let roots = cp.all_roots(cfg)?;
        for cluster in cluster_roots(&cp, &roots, cfg.cluster_radius) {
            out.push(RootCluster {
                representative: cluster.representative,
                multiplicity: cluster.multiplicity * mult,
                residual: cluster.residual,
            });
        }
    }
    let total: u32 = out.iter().map(|c| c.multiplicity).sum();
    if total as usize != deg {
        return Err(OracleError::NonConvergence);
    }
    Ok(out)
}

/// Direct clustering on a double-precision polynomial (the raw interface):
/// all roots with multiplicity assigned by cluster cardinality; the
/// multiplicities always sum to the degree.
pub fn root_clusters(
    p: &ComplexPoly,
    cluster_radius: f64,
    cfg: &OracleConfig,
) -> Result<Vec<RootCluster>, OracleError> {
    let roots = p.all_roots(cfg)?;
    Ok(cluster_roots(p, &roots, cluster_radius))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_i64, Rat};

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-8
    }

    #[test]
    fn cube_roots_of_unity() {
        // x^3 - 1
        let p = UniPoly::from_int_coeffs(&[-1, 0, 0, 1]);
        let cp = ComplexPoly::from_unipoly(&p).unwrap();
        let clusters = root_clusters(&cp, 1e-6, &cfg()).unwrap();
        assert_eq!(clusters.len(), 3);
        assert!(clusters.iter().all(|c| c.multiplicity == 1));
        assert!(clusters
            .iter()
            .all(|c| (c.representative.norm() - 1.0).abs() < 1e-9));
        assert!(clusters
            .iter()
            .any(|c| close(c.representative, Complex64::new(1.0, 0.0))));
    }

    #[test]
    fn double_root_clusters_to_multiplicity_two() {
        // (x-2)^2 (x+1)
        let p = &UniPoly::from_int_coeffs(&[-2, 1]).pow(2) * &UniPoly::from_int_coeffs(&[1, 1]);
        let cp = ComplexPoly::from_unipoly(&p).unwrap();
        let mut clusters = root_clusters(&cp, 1e-6, &cfg()).unwrap();
        clusters.sort_by(|a, b| a.representative.re.partial_cmp(&b.representative.re).unwrap());
        assert_eq!(clusters.len(), 2);
        assert_eq!(clusters[0].multiplicity, 1);
        assert!(close(clusters[0].representative, Complex64::new(-1.0, 0.0)));
        assert_eq!(clusters[1].multiplicity, 2);
        assert!((clusters[1].representative - Complex64::new(2.0, 0.0)).norm() < 1e-5);
    }

    #[test]
    fn exact_route_reports_multiplicity_from_structure() {
        let p = &UniPoly::from_int_coeffs(&[-2, 1]).pow(3) * &UniPoly::from_int_coeffs(&[5, 1]);
        let clusters = root_clusters_exact(&p, &cfg()).unwrap();
        let triple = clusters.iter().find(|c| c.multiplicity == 3).unwrap();
        assert!(close(triple.representative, Complex64::new(2.0, 0.0)));
    }

    #[test]
    fn squarefree_degree_twelve_has_twelve_simple_clusters() {
        // deterministic squarefree dodecic: product of distinct linears
        let mut p = UniPoly::one();
        for k in 1..=12i64 {
            p = &p * &UniPoly::from_coeffs(vec![rat_i64(-k), rat_i64(1)]);
        }
        assert!(p.gcd(&p.derivative()).degree() == Some(0));
        let clusters = root_clusters_exact(&p, &cfg()).unwrap();
        assert_eq!(clusters.len(), 12);
        assert!(clusters.iter().all(|c| c.multiplicity == 1));
    }

    #[test]
    fn huge_coefficient_ranges_are_balanced() {
        // roots at 1e6 and 1e-6: raw coefficient span 1e12
        let a = rat_i64(1_000_000);
        let b = Rat::new(1.into(), 1_000_000.into());
        let p = &UniPoly::from_coeffs(vec![-&a, rat_i64(1)])
            * &UniPoly::from_coeffs(vec![-&b, rat_i64(1)]);
        let cp = ComplexPoly::from_unipoly(&p).unwrap();
        let mut roots = cp.all_roots(&cfg()).unwrap();
        roots.sort_by(|x, y| x.norm().partial_cmp(&y.norm()).unwrap());
        assert!((roots[0].norm() - 1e-6).abs() / 1e-6 < 1e-6);
        assert!((roots[1].norm() - 1e6).abs() / 1e6 < 1e-6);
    }
}
