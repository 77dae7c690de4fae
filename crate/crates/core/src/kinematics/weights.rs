//! Coefficient functions of the action formula and the Bethe-vector
//! recurrences.

use super::funcs::{g_set, inv_g_set, inv_h_set, omega, omega_plain};
use super::partition::Split;
use crate::error::{Error, Result};
use crate::field::Scalar;

/// Sign factor: -1 for indices below 1, +1 otherwise.
pub fn sigma(i: i64) -> i64 {
    if i < 1 {
        -1
    } else {
        1
    }
}

/// Shifted spectral parameter `z_s = z - c(s - 1/2)`.
pub fn shifted<K: Scalar>(z: &K, s: i64, c: &K) -> K {
    let half = K::from_int(2).inv().expect("2 != 0");
    let offset = c.mul(&K::from_int(s).sub(&half));
    z.sub(&offset)
}

/// Kappa constant `n - 1/2` of the R-matrix.
pub fn kappa<K: Scalar>(n: usize) -> K {
    let half = K::from_int(2).inv().expect("2 != 0");
    K::from_int(n as i64).sub(&half)
}

/// Weight of one partition term in the action of `T_{i,j}(z)` on a Bethe
/// vector. `split` partitions the extended sets `w^(s) = u^(s) + {z, z_s}`;
/// `u0` is the original color-0 set. Carries the fixed color-n boundary
/// blocks I = {z_n}, II = {}, III = {z}.
pub fn phi_action<K: Scalar>(
    split: &Split<K>,
    u0: &[K],
    z: &K,
    n: usize,
    i: i64,
    j: i64,
    c: &K,
) -> Result<K> {
    if split.block_i.len() != n {
        return Err(Error::InfeasiblePartition(format!(
            "partition has {} colors, rank is {n}",
            split.block_i.len()
        )));
    }
    let z1 = shifted(z, 1, c);
    let zn = shifted(z, n as i64, c);
    let sign = K::from_int(-sigma(i) * sigma(-j));
    let prefactor = sign
        .mul(&g_set(std::slice::from_ref(&z1), u0, c)?)
        .mul(&inv_h_set(std::slice::from_ref(z), u0, c)?)
        .div(&kappa::<K>(n))?;
    let bnd_i = [zn];
    let bnd_ii: [K; 0] = [];
    let bnd_iii = [z.clone()];
    let o1 = omega(&split.block_i, &split.block_ii, &bnd_i, &bnd_ii, c)?;
    let o2 = omega(&split.block_ii, &split.block_iii, &bnd_ii, &bnd_iii, c)?;
    let o3 = omega(&split.block_i, &split.block_iii, &bnd_i, &bnd_iii, c)?;
    Ok(prefactor.mul(&o1).mul(&o2).mul(&o3))
}

/// Weight of one partition term in the recurrence that adds a parameter of
/// color `ell` to a Bethe vector. `split` partitions the original sets
/// `u`; `first_index` is the first subscript of the coefficient (the row
/// index for kets, the column index for bras), which contributes the sign
/// `sigma(first_index + 1)`.
pub fn psi_rec<K: Scalar>(
    split: &Split<K>,
    u_full: &[Vec<K>],
    z: &K,
    ell: usize,
    first_index: i64,
    c: &K,
) -> Result<K> {
    let n = u_full.len();
    if ell >= n {
        return Err(Error::IndexOutOfRange(format!("ell = {ell} outside 0..{n}")));
    }
    let sign = K::from_int(sigma(first_index + 1));
    let zs = std::slice::from_ref(z);

    // the block-over-full-set ratios are evaluated in cancelled form
    // (g(z, A_I)/g(z, A) = 1/g(z, A minus A_I) and likewise for h), so a
    // parameter repeated across colors of the collection stays regular
    let complement_i = |s: usize| -> Vec<K> {
        split.block_ii[s].iter().chain(&split.block_iii[s]).cloned().collect()
    };
    let upper_not_iii: Vec<K> = if ell + 1 < n {
        split.block_i[ell + 1].iter().chain(&split.block_ii[ell + 1]).cloned().collect()
    } else {
        Vec::new()
    };
    let ratio = if ell == 0 {
        // with the color-0 arguments shifted to z_0 and no h(u^(0)_I, z)
        // factor
        let z0 = shifted(z, 0, c);
        let z0s = std::slice::from_ref(&z0);
        inv_g_set(z0s, &complement_i(0), c)?
            .mul(&inv_h_set(zs, &u_full[0], c)?)
            .mul(&inv_g_set(&upper_not_iii, zs, c)?)
    } else {
        inv_g_set(zs, &complement_i(ell - 1), c)?
            .mul(&inv_h_set(zs, &u_full[ell], c)?)
            .mul(&inv_h_set(&complement_i(ell), zs, c)?)
            .mul(&inv_g_set(&upper_not_iii, zs, c)?)
    };

    let o1 = omega_plain(&split.block_i, &split.block_ii, c)?;
    let o2 = omega_plain(&split.i_and_ii(), &split.block_iii, c)?;
    Ok(sign.mul(&ratio).mul(&o1).mul(&o2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri, Rat};

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(0), -1);
        assert_eq!(sigma(1), 1);
        assert_eq!(sigma(-3), -1);
    }

    #[test]
    fn shifted_points() {
        // z_s = z - c(s - 1/2)
        assert_eq!(shifted(&ri(2), 0, &ri(1)), rat(5, 2));
        assert_eq!(shifted(&ri(2), 1, &ri(1)), rat(3, 2));
    }

    #[test]
    fn phi_vacuum_diagonal_is_one() {
        // n=1, empty original set, (i,j) = (1,1), z=2: the single feasible
        // partition puts {z, z_0} into block I; the action on the vacuum
        // forces the total weight to be exactly 1.
        let c = ri(1);
        let z = ri(2);
        let z0 = shifted(&z, 0, &c);
        let split: Split<Rat> = Split {
            block_i: vec![vec![z.clone(), z0]],
            block_ii: vec![vec![]],
            block_iii: vec![vec![]],
        };
        let phi = phi_action(&split, &[], &z, 1, 1, 1, &c).unwrap();
        assert_eq!(phi, ri(1));
    }

    #[test]
    fn phi_detects_coinciding_pair() {
        let c = ri(1);
        let split: Split<Rat> = Split {
            block_i: vec![vec![ri(3)]],
            block_ii: vec![vec![ri(3)]],
            block_iii: vec![vec![]],
        };
        let r = phi_action(&split, &[ri(3)], &ri(10), 1, 0, 1, &c);
        assert!(matches!(r, Err(Error::PoleAtPoint(_))));
    }

    #[test]
    fn psi_empty_sets_is_one() {
        // ell = 0, n = 1, empty set, i = 0: psi = sigma(1) = 1
        let c = ri(1);
        let split: Split<Rat> =
            Split { block_i: vec![vec![]], block_ii: vec![vec![]], block_iii: vec![vec![]] };
        let psi = psi_rec(&split, &[vec![]], &ri(2), 0, 0, &c).unwrap();
        assert_eq!(psi, ri(1));
    }

    #[test]
    fn psi_single_parameter_trivial_partition() {
        // ell = 0, n = 1, u = {0} all in block II, z = 2, c = 1:
        // psi = 1 / (g(z_0, 0) h(z, 0)) = 1 / ((2/5) * 3) = 5/6
        let c = ri(1);
        let split: Split<Rat> =
            Split { block_i: vec![vec![]], block_ii: vec![vec![ri(0)]], block_iii: vec![vec![]] };
        let psi = psi_rec(&split, &[vec![ri(0)]], &ri(2), 0, 0, &c).unwrap();
        assert_eq!(psi, rat(5, 6));
    }
}
