//! Full exchange-relation verification with an exact integer fast path.
//!
//! The relation is bilinear in the two evaluated monodromies, so both can
//! be scaled by common denominators and the identity multiplied through
//! by the coefficient denominators; everything then lives in machine
//! integers (checked, with a big-rational fallback on overflow).

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::monodromy::Monodromy;
use crate::error::{Error, Result};
use crate::field::Rat;
use crate::kinematics::kappa;
use crate::linalg::Mat;

/// Dense square i128 matrix with checked arithmetic.
#[derive(Clone)]
struct IMat {
    dim: usize,
    data: Vec<i128>,
}

impl IMat {
    fn zero(dim: usize) -> Self {
        IMat { dim, data: vec![0; dim * dim] }
    }

    fn mul(&self, rhs: &Self) -> Option<IMat> {
        let d = self.dim;
        let mut out = IMat::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.data[k * d + j];
                    if b == 0 {
                        continue;
                    }
                    let cell = &mut out.data[i * d + j];
                    *cell = cell.checked_add(a.checked_mul(b)?)?;
                }
            }
        }
        Some(out)
    }

    fn scaled_add(&mut self, coef: i128, rhs: &Self) -> Option<()> {
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if *b != 0 {
                *a = a.checked_add(coef.checked_mul(*b)?)?;
            }
        }
        Some(())
    }
}

/// Least common multiple of all entry denominators.
fn common_denominator(m: &Mat<Rat>) -> BigInt {
    use num_integer::Integer;
    let mut lcm = BigInt::from(1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            lcm = lcm.lcm(m.get(i, j).denom());
        }
    }
    lcm
}

fn to_imat(m: &Mat<Rat>, denom: &BigInt) -> Option<IMat> {
    let d = m.rows();
    let mut out = IMat::zero(d);
    for i in 0..d {
        for j in 0..d {
            let r = m.get(i, j);
            let scaled = r.numer() * (denom / r.denom());
            out.data[i * d + j] = scaled.to_i128()?;
        }
    }
    Some(out)
}

/// Verifies the componentwise exchange relation at one rational pair,
/// over every index quadruple:
/// `[T_{ij}(z), T_{kl}(w)] = c/(z-w) (T_{kj}(w)T_{il}(z) - T_{kj}(z)T_{il}(w))
/// + c/(z-w+c kappa) sum_p (delta_{k,-i} T_{pj}(z)T_{-p,l}(w)
/// - delta_{l,-j} T_{k,-p}(w)T_{ip}(z))`.
pub fn exchange_relation_check(m: &Monodromy, z: &Rat, w: &Rat) -> Result<bool> {
    let n = m.rank() as i64;
    let c = m.coupling().clone();
    let y = z - w;
    if y.is_zero() {
        return Err(Error::PoleAtPoint("coinciding spectral parameters".into()));
    }
    let y_shift = &y + &(&c * &kappa::<Rat>(m.rank()));
    if y_shift.is_zero() {
        return Err(Error::PoleAtPoint("exchange relation at z - w = -c kappa".into()));
    }
    let lam = &c / &y;
    let mu = &c / &y_shift;

    let d = (2 * n + 1) as usize;
    let mut at_z = Vec::with_capacity(d * d);
    let mut at_w = Vec::with_capacity(d * d);
    for i in -n..=n {
        for j in -n..=n {
            at_z.push(m.entry_at(i, j, z)?);
            at_w.push(m.entry_at(i, j, w)?);
        }
    }

    match integer_route(&at_z, &at_w, n, m.dim(), &lam, &mu) {
        Some(ok) => Ok(ok),
        None => Ok(rational_route(&at_z, &at_w, n, m.dim(), &lam, &mu)),
    }
}

fn integer_route(
    at_z: &[Mat<Rat>],
    at_w: &[Mat<Rat>],
    n: i64,
    dim: usize,
    lam: &Rat,
    mu: &Rat,
) -> Option<bool> {
    use num_integer::Integer;
    let mut dz = BigInt::from(1);
    for m in at_z {
        dz = dz.lcm(&common_denominator(m));
    }
    let mut dw = BigInt::from(1);
    for m in at_w {
        dw = dw.lcm(&common_denominator(m));
    }
    let mz: Vec<IMat> = at_z.iter().map(|m| to_imat(m, &dz)).collect::<Option<_>>()?;
    let mw: Vec<IMat> = at_w.iter().map(|m| to_imat(m, &dw)).collect::<Option<_>>()?;

    // multiply the identity by the coefficient denominators
    let (a, b) = (lam.numer().to_i128()?, lam.denom().to_i128()?);
    let (p, q) = (mu.numer().to_i128()?, mu.denom().to_i128()?);
    let lhs_coef = b.checked_mul(q)?;
    let lam_coef = a.checked_mul(q)?;
    let mu_coef = b.checked_mul(p)?;

    let d = (2 * n + 1) as usize;
    let pos = |x: i64, y: i64| -> usize { ((x + n) as usize) * d + (y + n) as usize };

    // ordered products
    let mut zw = vec![None; d * d * d * d];
    let mut wz = vec![None; d * d * d * d];
    let key = |x: usize, y: usize| x * d * d + y;
    for i in 0..d * d {
        for j in 0..d * d {
            zw[key(i, j)] = Some(mz[i].mul(&mw[j])?);
            wz[key(i, j)] = Some(mw[i].mul(&mz[j])?);
        }
    }
    let zw = |x: i64, y: i64, u: i64, v: i64| -> &IMat {
        zw[key(pos(x, y), pos(u, v))].as_ref().unwrap()
    };
    let wz = |x: i64, y: i64, u: i64, v: i64| -> &IMat {
        wz[key(pos(x, y), pos(u, v))].as_ref().unwrap()
    };

    for i in -n..=n {
        for j in -n..=n {
            for k in -n..=n {
                for l in -n..=n {
                    let mut acc = IMat::zero(dim);
                    acc.scaled_add(lhs_coef, zw(i, j, k, l))?;
                    acc.scaled_add(-lhs_coef, wz(k, l, i, j))?;
                    acc.scaled_add(-lam_coef, wz(k, j, i, l))?;
                    acc.scaled_add(lam_coef, zw(k, j, i, l))?;
                    if k == -i {
                        for t in -n..=n {
                            acc.scaled_add(-mu_coef, zw(t, j, -t, l))?;
                        }
                    }
                    if l == -j {
                        for t in -n..=n {
                            acc.scaled_add(mu_coef, wz(k, -t, i, t))?;
                        }
                    }
                    if acc.data.iter().any(|&v| v != 0) {
                        return Some(false);
                    }
                }
            }
        }
    }
    Some(true)
}

fn rational_route(
    at_z: &[Mat<Rat>],
    at_w: &[Mat<Rat>],
    n: i64,
    dim: usize,
    lam: &Rat,
    mu: &Rat,
) -> bool {
    let d = (2 * n + 1) as usize;
    let pos = |x: i64, y: i64| -> usize { ((x + n) as usize) * d + (y + n) as usize };
    let zw = |a: i64, b: i64, u: i64, v: i64| at_z[pos(a, b)].mul(&at_w[pos(u, v)]);
    let wz = |a: i64, b: i64, u: i64, v: i64| at_w[pos(a, b)].mul(&at_z[pos(u, v)]);
    for i in -n..=n {
        for j in -n..=n {
            for k in -n..=n {
                for l in -n..=n {
                    let lhs = zw(i, j, k, l).sub(&wz(k, l, i, j));
                    let mut rhs = wz(k, j, i, l).sub(&zw(k, j, i, l)).scale(lam);
                    if k == -i {
                        let mut sum = Mat::zero(dim, dim);
                        for t in -n..=n {
                            sum = sum.add(&zw(t, j, -t, l));
                        }
                        rhs = rhs.add(&sum.scale(mu));
                    }
                    if l == -j {
                        let mut sum = Mat::zero(dim, dim);
                        for t in -n..=n {
                            sum = sum.add(&wz(k, -t, i, t));
                        }
                        rhs = rhs.sub(&sum.scale(mu));
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri};
    use crate::fock::monodromy::{build_monodromy, ChainSpec};

    #[test]
    fn integer_and_rational_routes_agree() {
        let m = build_monodromy(&ChainSpec::new(1, ri(1), vec![ri(0), rat(1, 3)])).unwrap();
        let (z, w) = (rat(7, 2), rat(-9, 4));
        let n = 1i64;
        let c = ri(1);
        let y = &z - &w;
        let lam = &c / &y;
        let mu = &c / &(&y + &rat(1, 2));
        let mut at_z = Vec::new();
        let mut at_w = Vec::new();
        for i in -n..=n {
            for j in -n..=n {
                at_z.push(m.entry_at(i, j, &z).unwrap());
                at_w.push(m.entry_at(i, j, &w).unwrap());
            }
        }
        assert_eq!(
            integer_route(&at_z, &at_w, n, m.dim(), &lam, &mu),
            Some(true)
        );
        assert!(rational_route(&at_z, &at_w, n, m.dim(), &lam, &mu));
        // a wrong coefficient must be caught by both routes
        let bad = &mu * &ri(2);
        assert_eq!(
            integer_route(&at_z, &at_w, n, m.dim(), &lam, &bad),
            Some(false)
        );
        assert!(!rational_route(&at_z, &at_w, n, m.dim(), &lam, &bad));
    }
}
