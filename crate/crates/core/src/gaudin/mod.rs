//! The Gaudin matrix of the Bethe-equation system, its exact determinant,
//! and the Korepin property suite that characterizes the norm.

mod norm;

pub use norm::{norm_limit, NormReport};

use crate::error::{Error, Result};
use crate::field::{rat, Rat, Scalar};
use crate::kinematics::Collection;
use crate::linalg::Mat;

/// Bethe parameters plus the free logarithmic-derivative values `X^(s)_j`
/// of the alpha functions at those parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaudinData {
    pub u: Collection<Rat>,
    pub x: Vec<Vec<Rat>>,
}

impl GaudinData {
    pub fn new(u: Collection<Rat>, x: Vec<Vec<Rat>>) -> Result<Self> {
        if x.len() != u.rank() || (0..u.rank()).any(|s| x[s].len() != u.cardinality(s)) {
            return Err(Error::CardinalityMismatch(
                "one X value per Bethe parameter is required".into(),
            ));
        }
        Ok(GaudinData { u, x })
    }

    pub fn total(&self) -> usize {
        self.u.total()
    }

    /// Flattened (color, index) pairs in ascending order; this fixes the
    /// row/column order of the matrix.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in 0..self.u.rank() {
            for j in 0..self.u.cardinality(s) {
                out.push((s, j));
            }
        }
        out
    }
}

/// Same-color kernel `K^(s)(x,y) = 2 c_s c / ((x-y)^2 - c_s^2)` with
/// `c_s = (1 - delta_{s,0}/2) c`.
pub fn kernel_same<K: Scalar>(s: usize, x: &K, y: &K, c: &K) -> Result<K> {
    let cs = if s == 0 { c.div(&K::from_int(2))? } else { c.clone() };
    let d = x.sub(y);
    let den = d.mul(&d).sub(&cs.mul(&cs));
    if den.is_zero() {
        return Err(Error::PoleAtPoint(format!("same-color kernel at {x}, {y}")));
    }
    K::from_int(2).mul(&cs).mul(c).div(&den)
}

/// Adjacent-color kernel `I(x,y) = c^2 / ((x-y+c)(x-y))`.
pub fn kernel_adjacent<K: Scalar>(x: &K, y: &K, c: &K) -> Result<K> {
    let d = x.sub(y);
    let den = d.add(c).mul(&d);
    if den.is_zero() {
        return Err(Error::PoleAtPoint(format!("adjacent-color kernel at {x}, {y}")));
    }
    c.mul(c).div(&den)
}

/// Assembles the block Gaudin matrix: zero blocks beyond adjacent colors,
/// `-I` on adjacent-color blocks, and on the diagonal-color block
/// `delta_jk (X_j - sum_l K(u_j,u_l) + sum I + sum I) + K(u_j,u_k)`.
pub fn gaudin_matrix(data: &GaudinData) -> Result<Mat<Rat>> {
    let u = &data.u;
    let c = u.coupling().clone();
    let pos = data.positions();
    let total = pos.len();
    let mut m = Mat::zero(total, total);
    for (row, &(s, j)) in pos.iter().enumerate() {
        let uj = &u.set(s)[j];
        for (col, &(p, k)) in pos.iter().enumerate() {
            let uk = &u.set(p)[k];
            let value = if s == p {
                let mut v = kernel_same(s, uj, uk, &c)?;
                if j == k {
                    v = v.add(&data.x[s][j]);
                    for l in 0..u.cardinality(s) {
                        v = v.sub(&kernel_same(s, uj, &u.set(s)[l], &c)?);
                    }
                    if s >= 1 {
                        for l in 0..u.cardinality(s - 1) {
                            v = v.add(&kernel_adjacent(uj, &u.set(s - 1)[l], &c)?);
                        }
                    }
                    if s + 1 < u.rank() {
                        for l in 0..u.cardinality(s + 1) {
                            v = v.add(&kernel_adjacent(&u.set(s + 1)[l], uj, &c)?);
                        }
                    }
                }
                v
            } else if p + 1 == s {
                -kernel_adjacent(uj, uk, &c)?
            } else if p == s + 1 {
                -kernel_adjacent(uk, uj, &c)?
            } else {
                Rat::zero()
            };
            m.set(row, col, value);
        }
    }
    Ok(m)
}

/// Exact determinant of the Gaudin matrix.
pub fn gaudin_det(data: &GaudinData) -> Result<Rat> {
    gaudin_matrix(data)?.det()
}

/// The reduced-and-shifted data of the minor identity: removing the
/// parameter `(s, j)` shifts the X values of its neighbors by the same-
/// and adjacent-color kernels.
pub fn reduced_data(data: &GaudinData, s: usize, j: usize) -> Result<GaudinData> {
    let u = &data.u;
    let c = u.coupling().clone();
    let uj = u.set(s)[j].clone();
    let (_, u_red) = u.with_removed(s, j);
    let mut x_red = data.x.clone();
    x_red[s].remove(j);
    for (k, point) in u_red.set(s).iter().enumerate() {
        x_red[s][k] = &x_red[s][k] - &kernel_same(s, &uj, point, &c)?;
    }
    if s >= 1 {
        for (k, point) in u_red.set(s - 1).iter().enumerate() {
            x_red[s - 1][k] = &x_red[s - 1][k] + &kernel_adjacent(&uj, point, &c)?;
        }
    }
    if s + 1 < u.rank() {
        for (k, point) in u_red.set(s + 1).iter().enumerate() {
            x_red[s + 1][k] = &x_red[s + 1][k] + &kernel_adjacent(point, &uj, &c)?;
        }
    }
    GaudinData::new(u_red, x_red)
}

/// One named check outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KorepinCheck {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

/// Runs the five Korepin criteria against a candidate norm function `F`
/// on one data instance: symmetry under pair exchange, affinity in each
/// `X`, the single-parameter base case `F = X`, the minor identity
/// `dF/dX^(s)_j = F(reduced data)`, and vanishing at `X = 0`.
pub fn korepin_suite(
    f: &dyn Fn(&GaudinData) -> Result<Rat>,
    data: &GaudinData,
) -> Result<Vec<KorepinCheck>> {
    let mut checks = Vec::new();
    let base_value = f(data)?;

    // 1: exchange the first same-color pair (skip when no color has two)
    let mut pair = None;
    for s in 0..data.u.rank() {
        if data.u.cardinality(s) >= 2 {
            pair = Some(s);
            break;
        }
    }
    match pair {
        Some(s) => {
            let mut sets = data.u.sets().to_vec();
            sets[s].swap(0, 1);
            let mut x = data.x.clone();
            x[s].swap(0, 1);
            let swapped = GaudinData::new(Collection::new(data.u.coupling().clone(), sets)?, x)?;
            let v = f(&swapped)?;
            checks.push(KorepinCheck {
                name: "pair-exchange symmetry".into(),
                pass: v == base_value,
                details: format!("{base_value} vs {v}"),
            });
        }
        None => checks.push(KorepinCheck {
            name: "pair-exchange symmetry".into(),
            pass: true,
            details: "no color holds two parameters; vacuous".into(),
        }),
    }

    // 2: affinity in each X via three-point collinearity
    let mut affine = true;
    let mut affine_details = String::from("all X entries affine");
    'outer: for (s, j) in data.positions() {
        let probe = |t: Rat| -> Result<Rat> {
            let mut x = data.x.clone();
            x[s][j] = t;
            f(&GaudinData::new(data.u.clone(), x)?)
        };
        let f0 = probe(Rat::zero())?;
        let f1 = probe(Rat::one())?;
        let f3 = probe(Rat::from_int(3))?;
        if &f3 - &f0 != (&f1 - &f0) * Rat::from_int(3) {
            affine = false;
            affine_details = format!("X^({s})_{j} fails collinearity");
            break 'outer;
        }
    }
    checks.push(KorepinCheck {
        name: "degree one in each X".into(),
        pass: affine,
        details: affine_details,
    });

    // 3: base case on the first single-parameter restriction
    {
        let s = data.u.rank() - 1;
        let point = rat(5, 3);
        let x_val = rat(7, 11);
        let single = GaudinData::new(
            Collection::singleton(data.u.rank(), data.u.coupling().clone(), s, point),
            {
                let mut x = vec![Vec::new(); data.u.rank()];
                x[s] = vec![x_val.clone()];
                x
            },
        )?;
        let v = f(&single)?;
        checks.push(KorepinCheck {
            name: "single-parameter base case".into(),
            pass: v == x_val,
            details: format!("{v} vs {x_val}"),
        });
    }

    // 4: minor identity for every position
    let mut minor_ok = true;
    let mut minor_details = String::from("all minors match");
    for (s, j) in data.positions() {
        let probe = |t: Rat| -> Result<Rat> {
            let mut x = data.x.clone();
            x[s][j] = t;
            f(&GaudinData::new(data.u.clone(), x)?)
        };
        let derivative = &probe(Rat::one())? - &probe(Rat::zero())?;
        let reduced = f(&reduced_data(data, s, j)?)?;
        if derivative != reduced {
            minor_ok = false;
            minor_details = format!("position ({s},{j}): {derivative} vs {reduced}");
            break;
        }
    }
    checks.push(KorepinCheck {
        name: "minor identity".into(),
        pass: minor_ok,
        details: minor_details,
    });

    // 5: vanishing at X = 0
    {
        let zeroed = GaudinData::new(
            data.u.clone(),
            data.x.iter().map(|row| vec![Rat::zero(); row.len()]).collect(),
        )?;
        let v = f(&zeroed)?;
        checks.push(KorepinCheck {
            name: "vanishing at X = 0".into(),
            pass: v.is_zero(),
            details: format!("value {v}"),
        });
    }

    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ri;

    fn coll(sets: Vec<Vec<Rat>>) -> Collection<Rat> {
        Collection::new(ri(1), sets).unwrap()
    }

    #[test]
    fn rank_one_single_matrix_is_x() {
        let data = GaudinData::new(coll(vec![vec![ri(4)]]), vec![vec![rat(3, 7)]]).unwrap();
        let m = gaudin_matrix(&data).unwrap();
        assert_eq!(m.get(0, 0), &rat(3, 7));
        assert_eq!(gaudin_det(&data).unwrap(), rat(3, 7));
    }

    #[test]
    fn rank_one_two_parameter_fixture() {
        // u = (0,1), c = 1: K^(0)(0,1) = 4/3
        let x1 = rat(2, 5);
        let x2 = rat(-3, 4);
        let data =
            GaudinData::new(coll(vec![vec![ri(0), ri(1)]]), vec![vec![x1.clone(), x2.clone()]])
                .unwrap();
        let m = gaudin_matrix(&data).unwrap();
        assert_eq!(m.get(0, 0), &(&x1 - &rat(4, 3)));
        assert_eq!(m.get(0, 1), &rat(4, 3));
        assert_eq!(m.get(1, 0), &rat(4, 3));
        assert_eq!(m.get(1, 1), &(&x2 - &rat(4, 3)));
        let det = gaudin_det(&data).unwrap();
        assert_eq!(det, (&x1 - &rat(4, 3)) * (&x2 - &rat(4, 3)) - rat(16, 9));
    }

    #[test]
    fn cross_block_entry() {
        let data = GaudinData::new(
            coll(vec![vec![ri(0)], vec![ri(2)]]),
            vec![vec![ri(1)], vec![ri(1)]],
        )
        .unwrap();
        let m = gaudin_matrix(&data).unwrap();
        // G^(0,1)_{1,1} = -I(2, 0) = -1/6
        assert_eq!(m.get(0, 1), &rat(-1, 6));
    }

    #[test]
    fn row_sums_equal_x() {
        let data = GaudinData::new(
            coll(vec![vec![ri(0), rat(7, 3)], vec![ri(5)]]),
            vec![vec![rat(1, 2), ri(4)], vec![rat(-2, 7)]],
        )
        .unwrap();
        let m = gaudin_matrix(&data).unwrap();
        for (row, (s, j)) in data.positions().into_iter().enumerate() {
            let mut sum = Rat::zero();
            for col in 0..data.total() {
                sum = &sum + m.get(row, col);
            }
            assert_eq!(sum, data.x[s][j]);
        }
        // all X = 0 kills the determinant
        let zero = GaudinData::new(data.u.clone(), vec![vec![ri(0), ri(0)], vec![ri(0)]]).unwrap();
        assert_eq!(gaudin_det(&zero).unwrap(), ri(0));
    }

    #[test]
    fn korepin_criteria_for_det_g() {
        let data = GaudinData::new(
            coll(vec![vec![ri(0), rat(7, 3)], vec![ri(5)]]),
            vec![vec![rat(1, 2), ri(4)], vec![rat(-2, 7)]],
        )
        .unwrap();
        let checks = korepin_suite(&gaudin_det, &data).unwrap();
        for check in &checks {
            assert!(check.pass, "{}: {}", check.name, check.details);
        }
        // negative control: a constant function fails the vanishing point
        let one = |_: &GaudinData| Ok(Rat::one());
        let checks = korepin_suite(&one, &data).unwrap();
        assert!(!checks.last().unwrap().pass);
    }
}
