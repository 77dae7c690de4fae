//! The norm theorem: the collision limit of the scalar product equals a
//! finite kinematic prefactor times the Gaudin determinant.
//!
//! The exact route takes the multi-parameter limit as a sequence of
//! univariate limits in ascending (color, index) order: the parameters are
//! offset by nested rational-function indeterminates, the whole sum
//! formula is evaluated once in the nested field, and the offsets are sent
//! to zero outermost-first. A floating directional probe then confirms
//! O(delta) convergence to the same value.

use super::{gaudin_det, GaudinData};
use crate::error::{Error, Result};
use crate::field::{F64, Rat, Scalar, UniRatFun};
use crate::kinematics::{gamma, g_set, h_set, Collection};
use crate::scalar::{bae_residual, scalar_sum, AlphaOracle, AlphaTable};

/// Nested rational-function fields used for sequential limits. Level 1 is
/// the innermost indeterminate; the outermost is taken to zero first.
trait Tower: Scalar {
    type Inner: Tower;
    fn depth() -> usize;
    fn gen_at(level: usize) -> Self;
    fn limit_outer_at_zero(&self) -> Result<Self::Inner>;
}

impl Tower for Rat {
    type Inner = Rat;
    fn depth() -> usize {
        0
    }
    fn gen_at(_level: usize) -> Self {
        unreachable!("no indeterminates at depth zero")
    }
    fn limit_outer_at_zero(&self) -> Result<Rat> {
        Ok(self.clone())
    }
}

impl<K: Tower> Tower for UniRatFun<K> {
    type Inner = K;
    fn depth() -> usize {
        K::depth() + 1
    }
    fn gen_at(level: usize) -> Self {
        if level == Self::depth() {
            UniRatFun::gen()
        } else {
            UniRatFun::constant(K::gen_at(level))
        }
    }
    fn limit_outer_at_zero(&self) -> Result<K> {
        self.limit_at(&K::zero())
    }
}

fn collapse<K: Tower>(value: K) -> Result<Rat> {
    if K::depth() == 0 {
        return value
            .as_rat()
            .ok_or_else(|| Error::LimitPathFailure("non-constant residue of the limit".into()));
    }
    let inner = value
        .limit_outer_at_zero()
        .map_err(|e| Error::LimitPathFailure(format!("intermediate limit hit a pole: {e}")))?;
    collapse::<K::Inner>(inner)
}

/// Evaluates the sum formula with every second-slot parameter displaced by
/// its own indeterminate, alpha extended affinely through the X values,
/// then collapses the offsets to zero sequentially.
fn norm_exact_tower<K: Tower>(data: &GaudinData, alpha: &AlphaTable<Rat>) -> Result<Rat> {
    let u = &data.u;
    let n = u.rank();
    let total = u.total();
    debug_assert_eq!(K::depth(), total);
    let c_rat = u.coupling().clone();
    let c = K::from_rat(&c_rat);

    let mut table: AlphaTable<K> = alpha.map(|r| K::from_rat(r));
    let mut v_sets: Vec<Vec<K>> = vec![Vec::new(); n];
    let mut m = 0usize;
    for s in 0..n {
        for j in 0..u.cardinality(s) {
            m += 1;
            // the m-th parameter in ascending order is limited m-th, so it
            // occupies nesting level total + 1 - m (outermost first)
            let eps = K::gen_at(total + 1 - m);
            let point = K::from_rat(&u.set(s)[j]);
            let v_point = point.add(&eps);
            let a_u = alpha.alpha(s, &u.set(s)[j])?;
            // alpha(v) = alpha(u) (1 - eps X / c) matches the value and
            // first derivative pinned by X = -c alpha'/alpha
            let slope = K::one().sub(&eps.mul(&K::from_rat(&data.x[s][j])).div(&c)?);
            table.insert(s, v_point.clone(), K::from_rat(&a_u).mul(&slope));
            v_sets[s].push(v_point);
        }
    }
    let v = Collection::new(c_rat.clone(), v_sets)?;
    let u_lift: Collection<K> = u.map(|r| K::from_rat(r));
    let s_value = scalar_sum(&v, &u_lift, &table)?.value;
    collapse::<K>(s_value)
}

/// The diagonal-excluded prefactor of the norm theorem:
/// `prod_s prod_{k != l} gamma_s(u^(s)_k, u^(s)_l)
///  prod_{s>=1} h(u^(s), u^(s-1)) / g(u^(s), u^(s-1))`.
pub fn norm_prefactor(u: &Collection<Rat>) -> Result<Rat> {
    let c = u.coupling().clone();
    let mut acc = Rat::one();
    for s in 0..u.rank() {
        let set = u.set(s);
        for k in 0..set.len() {
            for l in 0..set.len() {
                if k != l {
                    acc = acc * gamma(s, &set[k], &set[l], &c)?;
                }
            }
        }
        if s >= 1 {
            acc = acc * h_set(set, u.set(s - 1), &c)?;
            acc = acc / g_set(set, u.set(s - 1), &c)?;
        }
    }
    Ok(acc)
}

/// Norm-limit report: the sequential exact limit, the prediction
/// `prefactor * det G`, and the floating directional probes
/// `(delta, relative error, within 10 delta)`.
#[derive(Debug, Clone)]
pub struct NormReport {
    pub exact_limit: Rat,
    pub prefactor: Rat,
    pub det_g: Rat,
    pub predicted: Rat,
    pub pass: bool,
    pub float_checks: Vec<(f64, f64, bool)>,
}

/// Computes the collision limit of `S(v|u)` at `v -> u` for on-shell `u`
/// and compares it with `prefactor * det G`. The float probes displace
/// `v = u + delta * direction` for `delta = 1e-3, 1e-4`.
pub fn norm_limit(
    data: &GaudinData,
    alpha: &AlphaTable<Rat>,
    direction: &[Vec<Rat>],
) -> Result<NormReport> {
    let u = &data.u;
    // on-shell guard
    for s in 0..u.rank() {
        for k in 0..u.cardinality(s) {
            let residual = bae_residual(u, alpha, s, k)?;
            if !residual.is_one() {
                return Err(Error::NotOnShell(format!(
                    "Bethe ratio at color {s}, index {k} is {residual}"
                )));
            }
        }
    }

    let exact_limit = match u.total() {
        0 => Rat::one(),
        1 => norm_exact_tower::<UniRatFun<Rat>>(data, alpha)?,
        2 => norm_exact_tower::<UniRatFun<UniRatFun<Rat>>>(data, alpha)?,
        3 => norm_exact_tower::<UniRatFun<UniRatFun<UniRatFun<Rat>>>>(data, alpha)?,
        4 => norm_exact_tower::<UniRatFun<UniRatFun<UniRatFun<UniRatFun<Rat>>>>>(data, alpha)?,
        more => {
            return Err(Error::DimensionCap { dim: more, cap: 4 });
        }
    };

    let prefactor = norm_prefactor(u)?;
    let det_g = gaudin_det(data)?;
    let predicted = &prefactor * &det_g;
    let pass = exact_limit == predicted;

    let mut float_checks = Vec::new();
    for delta in [1e-3_f64, 1e-4] {
        let approx = norm_float_probe(data, alpha, direction, delta)?;
        let target = exact_limit.to_f64();
        let rel = if target == 0.0 {
            approx.abs()
        } else {
            ((approx - target) / target).abs()
        };
        float_checks.push((delta, rel, rel <= 10.0 * delta));
    }

    Ok(NormReport { exact_limit, prefactor, det_g, predicted, pass, float_checks })
}

fn norm_float_probe(
    data: &GaudinData,
    alpha: &AlphaTable<Rat>,
    direction: &[Vec<Rat>],
    delta: f64,
) -> Result<f64> {
    let u = &data.u;
    let n = u.rank();
    if direction.len() != n || (0..n).any(|s| direction[s].len() != u.cardinality(s)) {
        return Err(Error::CardinalityMismatch("direction shape".into()));
    }
    let c = u.coupling().to_f64();
    let mut table: AlphaTable<F64> = alpha.map(|r| F64(r.to_f64()));
    let mut v_sets: Vec<Vec<F64>> = vec![Vec::new(); n];
    for s in 0..n {
        for j in 0..u.cardinality(s) {
            let eps = delta * direction[s][j].to_f64();
            let point = u.set(s)[j].to_f64();
            let v_point = F64(point + eps);
            let a_u = alpha.alpha(s, &u.set(s)[j])?.to_f64();
            let x = data.x[s][j].to_f64();
            table.insert(s, v_point, F64(a_u * (1.0 - eps * x / c)));
            v_sets[s].push(v_point);
        }
    }
    let v = Collection::new(u.coupling().clone(), v_sets)?;
    let u_lift: Collection<F64> = u.map(|r| F64(r.to_f64()));
    Ok(scalar_sum(&v, &u_lift, &table)?.value.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri};
    use crate::scalar::onshell_alpha;

    #[test]
    fn rank_one_single_norm_is_x() {
        // n=1, r=1, alpha(u) = 1 on shell: limit = X exactly
        let u = Collection::new(ri(1), vec![vec![ri(0)]]).unwrap();
        let x = rat(-13, 5);
        let data = GaudinData::new(u.clone(), vec![vec![x.clone()]]).unwrap();
        let alpha = onshell_alpha(&u).unwrap();
        let direction = vec![vec![ri(1)]];
        let report = norm_limit(&data, &alpha, &direction).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.exact_limit, x);
        assert_eq!(report.prefactor, ri(1));
        for (delta, rel, ok) in report.float_checks {
            assert!(ok, "delta {delta}: relative error {rel}");
        }
    }

    #[test]
    fn rank_two_one_one_norm() {
        let u = Collection::new(ri(1), vec![vec![ri(0)], vec![ri(2)]]).unwrap();
        let x = vec![vec![rat(5, 7)], vec![rat(-3, 2)]];
        let data = GaudinData::new(u.clone(), x).unwrap();
        let alpha = onshell_alpha(&u).unwrap();
        let direction = vec![vec![ri(1)], vec![ri(2)]];
        let report = norm_limit(&data, &alpha, &direction).unwrap();
        assert!(report.pass, "{report:?}");
        for (delta, rel, ok) in report.float_checks {
            assert!(ok, "delta {delta}: relative error {rel}");
        }
    }

    #[test]
    fn off_shell_is_rejected() {
        let u = Collection::new(ri(1), vec![vec![ri(0), ri(3)]]).unwrap();
        let data = GaudinData::new(u, vec![vec![ri(1), ri(1)]]).unwrap();
        // a table with wrong on-shell values
        let alpha = AlphaTable::new(vec![vec![(ri(0), ri(1)), (ri(3), ri(1))]]);
        let direction = vec![vec![ri(1), ri(2)]];
        assert!(matches!(
            norm_limit(&data, &alpha, &direction),
            Err(Error::NotOnShell(_))
        ));
    }
}
