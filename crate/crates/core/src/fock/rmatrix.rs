//! The orthogonal R-matrix and its Yang-Baxter property.

use crate::error::{Error, Result};
use crate::field::{Rat, Scalar};
use crate::kinematics::kappa;
use crate::linalg::Mat;

/// Matrix dimension of one site: `2n + 1`.
pub fn site_dim(n: usize) -> usize {
    2 * n + 1
}

/// Flattens a monodromy index `-n..=n` to `0..2n+1`.
pub fn idx(n: usize, i: i64) -> usize {
    (i + n as i64) as usize
}

/// `R(z) = I (x) I + (c/z) P - (c/(z + c kappa)) Q` on the tensor square
/// of one site, with `P` the permutation and `Q` the partial transpose of
/// `P` in the second slot. Rows and columns are indexed by pairs
/// `(a, b) -> a * (2n+1) + b` of monodromy indices.
pub fn r_matrix<K: Scalar>(z: &K, n: usize, c: &Rat) -> Result<Mat<K>> {
    let d = site_dim(n);
    let ck = K::from_rat(c);
    if z.is_zero() {
        return Err(Error::PoleAtPoint("R-matrix at z = 0".into()));
    }
    let shifted = z.add(&ck.mul(&kappa::<K>(n)));
    if shifted.is_zero() {
        return Err(Error::PoleAtPoint("R-matrix at z = -c kappa".into()));
    }
    let p_coef = ck.div(z)?;
    let q_coef = ck.div(&shifted)?;
    let mut m: Mat<K> = Mat::identity(d * d);
    for i in -(n as i64)..=(n as i64) {
        for j in -(n as i64)..=(n as i64) {
            // P: e_{ij} (x) e_{ji}
            let row = idx(n, i) * d + idx(n, j);
            let col = idx(n, j) * d + idx(n, i);
            let v = m.get(row, col).add(&p_coef);
            m.set(row, col, v);
            // Q: e_{ij} (x) e_{-i,-j}
            let row = idx(n, i) * d + idx(n, -i);
            let col = idx(n, j) * d + idx(n, -j);
            let v = m.get(row, col).sub(&q_coef);
            m.set(row, col, v);
        }
    }
    Ok(m)
}

/// Embeds a two-site operator into slots `(a, b)` of a three-site space.
fn embed_pair<K: Scalar>(r: &Mat<K>, n: usize, a: usize, b: usize) -> Mat<K> {
    let d = site_dim(n);
    let dim = d * d * d;
    let split = |t: usize| -> [usize; 3] { [t / (d * d), (t / d) % d, t % d] };
    Mat::from_fn(dim, dim, |row, col| {
        let rs = split(row);
        let cs = split(col);
        let free = 3 - a - b;
        if rs[free] != cs[free] {
            return K::zero();
        }
        r.get(rs[a] * d + rs[b], cs[a] * d + cs[b]).clone()
    })
}

/// Checks the Yang-Baxter equation
/// `R12(z-w) R13(z) R23(w) = R23(w) R13(z) R12(z-w)` exactly.
pub fn yang_baxter_check(n: usize, c: &Rat, z: &Rat, w: &Rat) -> Result<bool> {
    let r12 = embed_pair(&r_matrix(&(z - w), n, c)?, n, 0, 1);
    let r13 = embed_pair(&r_matrix(z, n, c)?, n, 0, 2);
    let r23 = embed_pair(&r_matrix(w, n, c)?, n, 1, 2);
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    Ok(lhs == rhs)
}
