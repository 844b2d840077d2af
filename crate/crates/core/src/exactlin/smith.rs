use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::mod_inverse;
use super::{LinError, Matrix, RingSpec};

/// Smith normal form `u * a * v = d` with invertible `u`, `v`.
///
/// The inverses of both transforms are carried along (`u_inv`, `v_inv`) since
/// re-presenting a module along its Smith basis needs them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub d: Matrix,
    pub u: Matrix,
    pub v: Matrix,
    pub u_inv: Matrix,
    pub v_inv: Matrix,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ... | d_rank`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

type Rows = Vec<Vec<BigInt>>;

fn identity_rows(n: usize) -> Rows {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn rows_to_matrix(ring: &RingSpec, rows: usize, cols: usize, data: Rows) -> Matrix {
    Matrix::from_entries(ring, rows, cols, data.into_iter().flatten().collect()).expect("shape")
}

/// Integer elimination state. Row operations are mirrored on `u` (left) and on
/// the columns of `u_inv`; column operations on `v` (right) and rows of `v_inv`.
struct Elim {
    d: Rows,
    u: Rows,
    u_inv: Rows,
    v: Rows,
    v_inv: Rows,
    m: usize,
    n: usize,
}

impl Elim {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.d.swap(a, b);
        self.u.swap(a, b);
        for row in &mut self.u_inv {
            row.swap(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in &mut self.d {
            row.swap(a, b);
        }
        for row in &mut self.v {
            row.swap(a, b);
        }
        self.v_inv.swap(a, b);
    }

    /// row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &BigInt) {
        for j in 0..self.n {
            let x = &self.d[t][j] * q;
            self.d[i][j] -= x;
        }
        for j in 0..self.m {
            let x = &self.u[t][j] * q;
            self.u[i][j] -= x;
        }
        for row in &mut self.u_inv {
            let x = &row[i] * q;
            row[t] += x;
        }
    }

    /// col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt) {
        for row in &mut self.d {
            let x = &row[t] * q;
            row[j] -= x;
        }
        for row in &mut self.v {
            let x = &row[t] * q;
            row[j] -= x;
        }
        for k in 0..self.n {
            let x = &self.v_inv[j][k] * q;
            self.v_inv[t][k] += x;
        }
    }

    fn negate_row(&mut self, t: usize) {
        for x in &mut self.d[t] {
            *x = -&*x;
        }
        for x in &mut self.u[t] {
            *x = -&*x;
        }
        for row in &mut self.u_inv {
            row[t] = -&row[t];
        }
    }

    /// Smallest nonzero |entry| in the trailing block, ties by row then column.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let x = &self.d[i][j];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.d[bi][bj].abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn run(&mut self) -> usize {
        let mut t = 0;
        while t < self.m.min(self.n) {
            let Some((pi, pj)) = self.min_pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            let p = self.d[t][t].clone();

            let mut clean = true;
            for i in t + 1..self.m {
                if !self.d[i][t].is_zero() {
                    let q = &self.d[i][t] / &p;
                    self.row_sub(i, t, &q);
                    clean &= self.d[i][t].is_zero();
                }
            }
            for j in t + 1..self.n {
                if !self.d[t][j].is_zero() {
                    let q = &self.d[t][j] / &p;
                    self.col_sub(j, t, &q);
                    clean &= self.d[t][j].is_zero();
                }
            }
            if !clean {
                // a remainder smaller than the pivot survived; pick again
                continue;
            }
            let offender = (t + 1..self.m)
                .find(|&i| (t + 1..self.n).any(|j| !self.d[i][j].is_multiple_of(&p)));
            if let Some(i) = offender {
                // row_t += row_i, then the next pass reduces below |p|
                self.row_sub(t, i, &BigInt::from(-1));
                continue;
            }
            if p.is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        t
    }
}

fn snf_integers(a: &Matrix) -> SmithForm {
    let (m, n) = a.shape();
    let mut e = Elim {
        d: a.to_rows(),
        u: identity_rows(m),
        u_inv: identity_rows(m),
        v: identity_rows(n),
        v_inv: identity_rows(n),
        m,
        n,
    };
    let rank = e.run();
    let z = RingSpec::Integers;
    SmithForm {
        d: rows_to_matrix(&z, m, n, e.d),
        u: rows_to_matrix(&z, m, m, e.u),
        v: rows_to_matrix(&z, n, n, e.v),
        u_inv: rows_to_matrix(&z, m, m, e.u_inv),
        v_inv: rows_to_matrix(&z, n, n, e.v_inv),
        rank,
    }
}

/// Smith normal form with transforms.
///
/// Pivots on the nonzero entry of least absolute value (ties: lowest row,
/// then lowest column), so the output is a deterministic function of the input.
/// Over Z the diagonal is nonnegative; over Z/m each diagonal entry is the
/// canonical ideal generator `gcd(d, m)` and entries generating the zero ideal
/// are reported as `0` after the rank.
pub fn snf(a: &Matrix) -> SmithForm {
    match a.ring().clone() {
        RingSpec::Integers => snf_integers(a),
        ring @ RingSpec::IntegersMod(_) => snf_mod(a, &ring),
    }
}

fn snf_mod(a: &Matrix, ring: &RingSpec) -> SmithForm {
    let m = ring.modulus().expect("modular ring").clone();
    let s = snf_integers(&a.lift());
    let mut d = s.d.over(ring);
    let mut v = s.v.lift();
    let mut v_inv = s.v_inv.lift();
    let mut rank = 0;
    for i in 0..s.rank {
        let di = s.d.get(i, i);
        let g = di.gcd(&m);
        if g == m {
            d.set(i, i, 0);
            continue;
        }
        rank += 1;
        // d_i = g * q with gcd(q, m/g) = 1; find a unit c == q^{-1} (mod m/g)
        let q = di / &g;
        let mg = &m / &g;
        let c0 = if mg.is_one() {
            BigInt::one()
        } else {
            mod_inverse(&q, &mg).expect("q is a unit mod m/g")
        };
        let mut c = c0;
        while !c.gcd(&m).is_one() {
            c += &mg;
        }
        let c_inv = mod_inverse(&c, &m).expect("unit");
        for r in 0..v.rows() {
            let x = v.get(r, i) * &c;
            v.set(r, i, x);
        }
        for k in 0..v_inv.cols() {
            let x = v_inv.get(i, k) * &c_inv;
            v_inv.set(i, k, x);
        }
        d.set(i, i, g);
    }
    SmithForm {
        d,
        u: s.u.over(ring),
        v: v.over(ring),
        u_inv: s.u_inv.over(ring),
        v_inv: v_inv.over(ring),
        rank,
    }
}

/// `[lift(a) | m * I]` over Z: its integer kernel projects onto the kernel of
/// `a` over Z/m, and integer solutions project onto solutions mod m.
fn augment_with_modulus(a: &Matrix, m: &BigInt) -> Matrix {
    let z = RingSpec::Integers;
    let mi = Matrix::identity(&z, a.rows()).scale(m);
    Matrix::hstack(&z, a.rows(), &[&a.lift(), &mi])
}

/// Columns generating `{x : a x = 0}`.
///
/// Over Z the columns form a lattice basis of the kernel. Over Z/m they
/// generate the kernel submodule (no independence claim); zero columns are dropped.
pub fn kernel_basis(a: &Matrix) -> Matrix {
    match a.ring() {
        RingSpec::Integers => {
            let s = snf_integers(a);
            s.v.submatrix(0..a.cols(), s.rank..a.cols())
        }
        ring @ RingSpec::IntegersMod(m) => {
            let aug = augment_with_modulus(a, m);
            let k = kernel_basis(&aug);
            k.top_rows(a.cols()).over(ring).without_zero_columns()
        }
    }
}

/// Some `x` with `a x = b` (column by column), or `None` when no solution
/// exists over the ring. Shape and ring mismatches are errors.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>, LinError> {
    if a.ring() != b.ring() {
        return Err(LinError::RingMismatch(a.ring().clone(), b.ring().clone()));
    }
    if a.rows() != b.rows() {
        return Err(LinError::DimensionMismatch(format!(
            "system has {} equations but right-hand side has {} rows",
            a.rows(),
            b.rows()
        )));
    }
    Ok(match a.ring() {
        RingSpec::Integers => solve_integers(a, b),
        ring @ RingSpec::IntegersMod(m) => {
            let aug = augment_with_modulus(a, m);
            solve_integers(&aug, &b.lift()).map(|x| x.top_rows(a.cols()).over(ring))
        }
    })
}

fn solve_integers(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    let s = snf_integers(a);
    let c = &s.u * b;
    let z = RingSpec::Integers;
    let mut y = Matrix::zeros(&z, a.cols(), b.cols());
    for k in 0..b.cols() {
        for i in 0..a.rows() {
            let ci = c.get(i, k);
            if i < s.rank {
                let (q, r) = ci.div_rem(s.d.get(i, i));
                if !r.is_zero() {
                    return None;
                }
                y.set(i, k, q);
            } else if !ci.is_zero() {
                return None;
            }
        }
    }
    Some(&s.v * &y)
}

/// Does every column of `b` lie in the column span of `a`?
pub fn columns_in_span(a: &Matrix, b: &Matrix) -> bool {
    matches!(solve(a, b), Ok(Some(_)))
}

/// Rank over the ring, i.e. the number of nonzero Smith invariants.
pub fn rank(a: &Matrix) -> usize {
    snf(a).rank
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination;
/// over Z/m the integer determinant is reduced.
pub fn determinant(a: &Matrix) -> BigInt {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.rows();
    let mut m = a.lift().to_rows();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = x / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { sign * &m[n - 1][n - 1] };
    a.ring().reduce(det)
}
