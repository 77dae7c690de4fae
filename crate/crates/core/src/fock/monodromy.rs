//! Monodromy matrices of small inhomogeneous fundamental chains, with the
//! structural identities of the algebra: vacuum detection, the eigenvalue
//! constraint, centrality, and zero modes.

use super::rmatrix::{idx, site_dim};
use crate::error::{Error, Result};
use crate::field::{Rat, Scalar, UniPoly, UniRatFun};
use crate::kinematics::kappa;
use crate::linalg::Mat;
use crate::scalar::ChainAlpha;

type Urf = UniRatFun<Rat>;

/// Specification of a fundamental-representation chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSpec {
    pub rank: usize,
    pub coupling: Rat,
    pub xi: Vec<Rat>,
    pub cap: usize,
}

/// Default dimension cap `(2n+1)^L <= 3125`.
pub const DEFAULT_DIM_CAP: usize = 3125;

impl ChainSpec {
    pub fn new(rank: usize, coupling: Rat, xi: Vec<Rat>) -> Self {
        ChainSpec { rank, coupling, xi, cap: DEFAULT_DIM_CAP }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn len(&self) -> usize {
        self.xi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xi.is_empty()
    }

    pub fn dim(&self) -> usize {
        site_dim(self.rank).pow(self.len() as u32)
    }
}

/// Monodromy matrix of a chain: one operator per pair of monodromy
/// indices, stored as rational functions of the spectral parameter, plus
/// the vacuum found by exhaustive scan and its eigenvalue functions.
pub struct Monodromy {
    spec: ChainSpec,
    dim: usize,
    /// entry `(i + n) * (2n+1) + (j + n)` holds `T_{i,j}(z)`
    entries: Vec<Mat<Urf>>,
    vacuum: usize,
    /// `lambda_{-n} .. lambda_n`
    lambdas: Vec<Urf>,
}

/// `c/(z - a)` as a rational function of `z`.
fn g_of_z(c: &Rat, a: &Rat) -> Urf {
    Urf::new(
        UniPoly::constant(c.clone()),
        UniPoly::from_coeffs(vec![-a, Rat::one()]),
    )
    .expect("monic denominator")
}

/// Single-site auxiliary entries `(R(z - xi))_{i,j}` as operators on one
/// site: `delta_{ij} I + c/(z-xi) e_{ji} - c/(z-xi+c kappa) e_{-i,-j}`.
fn site_entry(n: usize, c: &Rat, xi: &Rat, i: i64, j: i64) -> Mat<Urf> {
    let d = site_dim(n);
    let mut m = Mat::zero(d, d);
    if i == j {
        for t in 0..d {
            m.set(t, t, Urf::one());
        }
    }
    let p = g_of_z(c, xi);
    let v = m.get(idx(n, j), idx(n, i)).add(&p);
    m.set(idx(n, j), idx(n, i), v);
    let kap = Rat::from_int(2 * n as i64 - 1) / Rat::from_int(2);
    let q = g_of_z(c, &(xi - &(c * &kap)));
    let v = m.get(idx(n, -i), idx(n, -j)).sub(&q);
    m.set(idx(n, -i), idx(n, -j), v);
    m
}

/// Kronecker product with the first factor slow (sites ordered left to
/// right in the basis index).
fn kron<K: Scalar>(slow: &Mat<K>, fast: &Mat<K>) -> Mat<K> {
    let (r1, c1) = (slow.rows(), slow.cols());
    let (r2, c2) = (fast.rows(), fast.cols());
    let mut out = Mat::zero(r1 * r2, c1 * c2);
    for i1 in 0..r1 {
        for j1 in 0..c1 {
            let a = slow.get(i1, j1);
            if a.is_zero() {
                continue;
            }
            for i2 in 0..r2 {
                for j2 in 0..c2 {
                    let b = fast.get(i2, j2);
                    if b.is_zero() {
                        continue;
                    }
                    out.set(i1 * r2 + i2, j1 * c2 + j2, a.mul(b));
                }
            }
        }
    }
    out
}

/// Builds the monodromy `T(z) = R_{0L}(z - xi_L) ... R_{01}(z - xi_1)`,
/// scans for the vacuum and reads off the eigenvalue functions.
pub fn build_monodromy(spec: &ChainSpec) -> Result<Monodromy> {
    let n = spec.rank;
    let d = site_dim(n);
    let dim = spec.dim();
    if dim > spec.cap {
        return Err(Error::DimensionCap { dim, cap: spec.cap });
    }
    if spec.is_empty() {
        return Err(Error::IndexOutOfRange("chain must have at least one site".into()));
    }
    let span = -(n as i64)..=(n as i64);

    // iteratively multiply in the auxiliary space; after step m the
    // operators act on sites 1..m with site 1 slowest
    let mut acc: Vec<Mat<Urf>> = Vec::with_capacity(d * d);
    for i in span.clone() {
        for j in span.clone() {
            acc.push(site_entry(n, &spec.coupling, &spec.xi[0], i, j));
        }
    }
    for m in 1..spec.len() {
        let mut next: Vec<Mat<Urf>> = Vec::with_capacity(d * d);
        let cur_dim = d.pow(m as u32);
        for i in span.clone() {
            for j in span.clone() {
                let mut entry = Mat::zero(cur_dim * d, cur_dim * d);
                for k in span.clone() {
                    let site = site_entry(n, &spec.coupling, &spec.xi[m], i, k);
                    let prev = &acc[idx(n, k) * d + idx(n, j)];
                    entry = entry.add(&kron(prev, &site));
                }
                next.push(entry);
            }
        }
        acc = next;
    }

    let (vacuum, lambdas) = scan_vacuum(n, dim, &acc)?;
    Ok(Monodromy { spec: spec.clone(), dim, entries: acc, vacuum, lambdas })
}

/// Finds the unique basis vector annihilated by every strictly-lower
/// entry, and the diagonal eigenvalue functions on it.
fn scan_vacuum(n: usize, dim: usize, entries: &[Mat<Urf>]) -> Result<(usize, Vec<Urf>)> {
    let d = site_dim(n);
    let at = |i: i64, j: i64| -> &Mat<Urf> { &entries[idx(n, i) * d + idx(n, j)] };
    let mut found: Option<(usize, Vec<Urf>)> = None;
    'basis: for b in 0..dim {
        for i in -(n as i64)..=(n as i64) {
            for j in -(n as i64)..i {
                let m = at(i, j);
                for row in 0..dim {
                    if !m.get(row, b).is_zero() {
                        continue 'basis;
                    }
                }
            }
        }
        // diagonal action must be proportional to the basis vector
        let mut lambdas = Vec::with_capacity(d);
        for i in -(n as i64)..=(n as i64) {
            let m = at(i, i);
            for row in 0..dim {
                if row != b && !m.get(row, b).is_zero() {
                    continue 'basis;
                }
            }
            lambdas.push(m.get(b, b).clone());
        }
        if found.is_some() {
            return Err(Error::NoVacuumFound("vacuum is not unique".into()));
        }
        found = Some((b, lambdas));
    }
    found.ok_or_else(|| Error::NoVacuumFound("no basis vector satisfies the conditions".into()))
}

impl Monodromy {
    pub fn spec(&self) -> &ChainSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn coupling(&self) -> &Rat {
        &self.spec.coupling
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vacuum_index(&self) -> usize {
        self.vacuum
    }

    /// Symbolic entry `T_{i,j}(z)`.
    pub fn entry(&self, i: i64, j: i64) -> &Mat<Urf> {
        let d = site_dim(self.spec.rank);
        &self.entries[idx(self.spec.rank, i) * d + idx(self.spec.rank, j)]
    }

    /// Eigenvalue function for a monodromy index in `-n..=n`.
    pub fn lambda(&self, i: i64) -> &Urf {
        &self.lambdas[idx(self.spec.rank, i)]
    }

    pub fn lambdas(&self) -> &[Urf] {
        &self.lambdas
    }

    /// Evaluates one entry at a point of any scalar field.
    pub fn entry_at<K: Scalar>(&self, i: i64, j: i64, z: &K) -> Result<Mat<K>> {
        self.entry(i, j).map(|e| e.eval_lifted(z))
    }

    /// Applies `T_{i,j}(z)` to a ket, evaluating only the matrix entries
    /// that multiply nonzero amplitudes. Columns outside the support may
    /// be singular at `z` without harm; a pole on the support is an error.
    pub fn apply_ket<K: Scalar>(&self, i: i64, j: i64, z: &K, v: &[K]) -> Result<Vec<K>> {
        let m = self.entry(i, j);
        let mut out = vec![K::zero(); self.dim];
        for (col, amp) in v.iter().enumerate() {
            if amp.is_zero() {
                continue;
            }
            for row in 0..self.dim {
                let e = m.get(row, col);
                if e.is_zero() {
                    continue;
                }
                out[row] = out[row].add(&e.eval_lifted(z)?.mul(amp));
            }
        }
        Ok(out)
    }

    /// Applies `T_{i,j}(z)` to a bra from the right.
    pub fn apply_bra<K: Scalar>(&self, i: i64, j: i64, z: &K, v: &[K]) -> Result<Vec<K>> {
        let m = self.entry(i, j);
        let mut out = vec![K::zero(); self.dim];
        for (row, amp) in v.iter().enumerate() {
            if amp.is_zero() {
                continue;
            }
            for col in 0..self.dim {
                let e = m.get(row, col);
                if e.is_zero() {
                    continue;
                }
                out[col] = out[col].add(&amp.mul(&e.eval_lifted(z)?));
            }
        }
        Ok(out)
    }

    /// The alpha functions of this chain.
    pub fn chain_alpha(&self) -> ChainAlpha {
        ChainAlpha::new(self.spec.rank, self.lambdas.clone()).expect("square lambda family")
    }

    /// Rescales every entry (and eigenvalue) by a fixed rational function;
    /// all quantities built from ratios must be invariant under this.
    pub fn rescaled(&self, factor: &Urf) -> Result<Monodromy> {
        if factor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Monodromy {
            spec: self.spec.clone(),
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|m| m.map(|e| Ok(e.mul(factor))))
                .collect::<Result<Vec<_>>>()?,
            vacuum: self.vacuum,
            lambdas: self.lambdas.iter().map(|l| l.mul(factor)).collect(),
        })
    }

    /// Zero-mode matrix `lim z (T_{i,j}(z) - delta_{ij}) / c`.
    pub fn zero_mode(&self, i: i64, j: i64) -> Result<Mat<Rat>> {
        let x_over_c = Urf::new(
            UniPoly::from_coeffs(vec![Rat::zero(), Rat::one()]),
            UniPoly::constant(self.spec.coupling.clone()),
        )?;
        let entry = self.entry(i, j);
        let mut out = Mat::zero(self.dim, self.dim);
        for row in 0..self.dim {
            for col in 0..self.dim {
                let mut e = entry.get(row, col).clone();
                if i == j && row == col {
                    e = e.sub(&Urf::one());
                }
                out.set(row, col, e.mul(&x_over_c).limit_at_infinity()?);
            }
        }
        Ok(out)
    }

    /// Zero mode of an eigenvalue function.
    pub fn lambda_zero_mode(&self, i: i64) -> Result<Rat> {
        let x_over_c = Urf::new(
            UniPoly::from_coeffs(vec![Rat::zero(), Rat::one()]),
            UniPoly::constant(self.spec.coupling.clone()),
        )?;
        self.lambda(i).sub(&Urf::one()).mul(&x_over_c).limit_at_infinity()
    }

    /// Grading operator `t_s = sum_{i>s} (T_{ii}[0] - lambda_i[0])`.
    pub fn grading_operator(&self, s: usize) -> Result<Mat<Rat>> {
        let mut out = Mat::zero(self.dim, self.dim);
        for i in (s as i64 + 1)..=(self.spec.rank as i64) {
            let zm = self.zero_mode(i, i)?;
            let lam0 = self.lambda_zero_mode(i)?;
            out = out.add(&zm.sub(&Mat::identity(self.dim).scale(&lam0)));
        }
        Ok(out)
    }

    /// The transfer matrix `sum_j T_{jj}(z)` evaluated at a rational point.
    pub fn transfer_at(&self, z: &Rat) -> Result<Mat<Rat>> {
        let mut out = Mat::zero(self.dim, self.dim);
        for j in -(self.spec.rank as i64)..=(self.spec.rank as i64) {
            out = out.add(&self.entry_at(j, j, z)?);
        }
        Ok(out)
    }

    /// Verifies that `T(z + c kappa) T^t(z)` and `T^t(z) T(z + c kappa)`
    /// are the same scalar multiple of the identity and returns that
    /// scalar function.
    pub fn centrality_scalar(&self) -> Result<Urf> {
        let n = self.spec.rank as i64;
        let ck = self.coupling() * &kappa::<Rat>(self.spec.rank);
        let shift = |m: &Mat<Urf>| -> Mat<Urf> {
            Mat::from_fn(self.dim, self.dim, |r, c| m.get(r, c).shift_arg(&ck))
        };
        let mut phi: Option<Urf> = None;
        for order in 0..2 {
            for i in -n..=n {
                for j in -n..=n {
                    let mut entry = Mat::zero(self.dim, self.dim);
                    for k in -n..=n {
                        // (T^t)_{k,j}(z) = T_{-j,-k}(z)
                        let prod = if order == 0 {
                            shift(self.entry(i, k)).mul(self.entry(-j, -k))
                        } else {
                            self.entry(-k, -i).mul(&shift(self.entry(k, j)))
                        };
                        entry = entry.add(&prod);
                    }
                    if i != j {
                        if !entry.is_zero() {
                            return Err(Error::NotScalar(format!(
                                "off-diagonal block ({i},{j}) of order-{order} product"
                            )));
                        }
                        continue;
                    }
                    for row in 0..self.dim {
                        for col in 0..self.dim {
                            let e = entry.get(row, col);
                            if row != col {
                                if !e.is_zero() {
                                    return Err(Error::NotScalar(format!(
                                        "block ({i},{i}) is not diagonal"
                                    )));
                                }
                                continue;
                            }
                            match &phi {
                                None => phi = Some(e.clone()),
                                Some(p) if p == e => {}
                                Some(_) => {
                                    return Err(Error::NotScalar(format!(
                                        "inconsistent scalar on block ({i},{i})"
                                    )))
                                }
                            }
                        }
                    }
                }
            }
        }
        phi.ok_or_else(|| Error::NotScalar("empty product".into()))
    }

    /// Checks the eigenvalue constraint in its scale-invariant form; see
    /// [`lambda_constraint_ratio_of`].
    pub fn lambda_constraint_ratio(&self) -> Result<Urf> {
        lambda_constraint_ratio_of(&self.lambdas, self.coupling())
    }
}

/// The eigenvalue constraint in its scale-invariant form: the ratio of
/// `lambda_{-j}(z)` to its predicted combination of positive eigenvalues,
/// `lambda_{-j}(z) lambda_j(z_j) prod_{s>j} lambda_s(z_s)/lambda_s(z_{s-1})`,
/// must be the same function of `z` for every `j`. Returns the common
/// ratio (equal to one on an exactly normalized model). `lambdas` holds
/// `lambda_{-n} .. lambda_n`.
pub fn lambda_constraint_ratio_of(lambdas: &[Urf], c: &Rat) -> Result<Urf> {
    let n = (lambdas.len() - 1) / 2;
    let at = |i: i64| -> &Urf { &lambdas[(i + n as i64) as usize] };
    let shift_of = |s: i64| -> Rat { c * &(Rat::from_int(s) - Rat::new(1, 2)) };
    let at_shift = |f: &Urf, s: i64| -> Urf { f.shift_arg(&-shift_of(s)) };
    let mut common: Option<Urf> = None;
    for j in 0..=n as i64 {
        let mut ratio = at(-j).mul(&at_shift(at(j), j));
        for s in (j + 1)..=(n as i64) {
            ratio = ratio.mul(&at_shift(at(s), s));
            ratio = ratio.div(&at_shift(at(s), s - 1))?;
        }
        match &common {
            None => common = Some(ratio),
            Some(r) if r == &ratio => {}
            Some(_) => {
                return Err(Error::NotScalar(format!(
                    "eigenvalue constraint ratio differs at j = {j}"
                )))
            }
        }
    }
    common.ok_or_else(|| Error::NotScalar("no ratios computed".into()))
}
