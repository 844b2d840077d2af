use num_bigint::BigInt;
use num_traits::Zero;

use super::{kernel_basis, solve, Matrix, RingSpec};

/// Handle to a matrix-valued unknown registered with a [`LinearSystem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unknown(usize);

struct Term {
    left: Matrix,
    var: Unknown,
    right: Matrix,
}

struct Equation {
    terms: Vec<Term>,
    rhs: Matrix,
}

/// Joint linear system in matrix unknowns: each equation reads
/// `sum_k L_k * X_k * R_k = B`, and the whole thing is flattened into one
/// `A x = b` and handed to [`solve`]. Lifting, splitting and homotopy
/// problems are all phrased this way.
pub struct LinearSystem {
    ring: RingSpec,
    shapes: Vec<(usize, usize)>,
    equations: Vec<Equation>,
}

/// Values for every unknown of a solved [`LinearSystem`].
pub struct Solution {
    values: Vec<Matrix>,
}

impl Solution {
    pub fn value(&self, x: Unknown) -> &Matrix {
        &self.values[x.0]
    }
}

impl LinearSystem {
    pub fn new(ring: &RingSpec) -> Self {
        LinearSystem {
            ring: ring.clone(),
            shapes: Vec::new(),
            equations: Vec::new(),
        }
    }

    pub fn unknown(&mut self, rows: usize, cols: usize) -> Unknown {
        self.shapes.push((rows, cols));
        Unknown(self.shapes.len() - 1)
    }

    pub fn shape(&self, x: Unknown) -> (usize, usize) {
        self.shapes[x.0]
    }

    /// Adds `sum L * X * R = rhs`. Panics if a term's shape disagrees with `rhs`.
    pub fn equation(&mut self, terms: Vec<(Matrix, Unknown, Matrix)>, rhs: Matrix) {
        let terms = terms
            .into_iter()
            .map(|(left, var, right)| {
                let (p, q) = self.shapes[var.0];
                assert_eq!(left.cols(), p, "left factor does not fit unknown");
                assert_eq!(right.rows(), q, "right factor does not fit unknown");
                assert_eq!(left.rows(), rhs.rows(), "term rows differ from rhs");
                assert_eq!(right.cols(), rhs.cols(), "term cols differ from rhs");
                Term { left, var, right }
            })
            .collect();
        self.equations.push(Equation { terms, rhs });
    }

    /// `X` alone, i.e. `I * X * I`.
    pub fn plain(&self, x: Unknown) -> (Matrix, Unknown, Matrix) {
        let (p, q) = self.shapes[x.0];
        (Matrix::identity(&self.ring, p), x, Matrix::identity(&self.ring, q))
    }

    /// The flattened `A x = b`; `X[i][j]` of each unknown sits at `offset + i * q + j`.
    fn flatten(&self) -> (Matrix, Matrix, Vec<usize>) {
        let mut offsets = Vec::with_capacity(self.shapes.len());
        let mut n = 0;
        for &(p, q) in &self.shapes {
            offsets.push(n);
            n += p * q;
        }
        let m: usize = self.equations.iter().map(|e| e.rhs.rows() * e.rhs.cols()).sum();
        let mut a = vec![BigInt::zero(); m * n];
        let mut b = Vec::with_capacity(m);
        let mut row0 = 0;
        for eq in &self.equations {
            let bc = eq.rhs.cols();
            for term in &eq.terms {
                let q = self.shapes[term.var.0].1;
                let off = offsets[term.var.0];
                // coefficient of X[i][j] in entry (k, l) is L[k][i] * R[j][l]
                for k in 0..term.left.rows() {
                    for i in 0..term.left.cols() {
                        let lki = term.left.get(k, i);
                        if lki.is_zero() {
                            continue;
                        }
                        for j in 0..term.right.rows() {
                            for l in 0..bc {
                                let rjl = term.right.get(j, l);
                                if !rjl.is_zero() {
                                    a[(row0 + k * bc + l) * n + off + i * q + j] += lki * rjl;
                                }
                            }
                        }
                    }
                }
            }
            b.extend(eq.rhs.entries().iter().cloned());
            row0 += eq.rhs.rows() * bc;
        }
        let a = Matrix::from_entries(&self.ring, m, n, a).expect("shape");
        let b = Matrix::from_entries(&self.ring, m, 1, b).expect("shape");
        (a, b, offsets)
    }

    pub fn solve(&self) -> Option<Solution> {
        let (a, b, offsets) = self.flatten();
        let x = solve(&a, &b).expect("shapes consistent")?;
        Some(self.unflatten(&x, 0, &offsets))
    }

    /// Generators of the solutions of the homogeneous system (right-hand sides ignored).
    pub fn homogeneous_basis(&self) -> Vec<Solution> {
        let (a, _, offsets) = self.flatten();
        let k = kernel_basis(&a);
        (0..k.cols()).map(|c| self.unflatten(&k, c, &offsets)).collect()
    }

    fn unflatten(&self, x: &Matrix, col: usize, offsets: &[usize]) -> Solution {
        let values = self
            .shapes
            .iter()
            .zip(offsets)
            .map(|(&(p, q), &off)| Matrix::from_fn(&self.ring, p, q, |i, j| x.get(off + i * q + j, col).clone()))
            .collect();
        Solution { values }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sandwiched_unknown() {
        // find s with d s d = d for d = [[1, 0], [0, 0]]
        let z = RingSpec::Integers;
        let d = Matrix::from_rows(&z, &[vec![1, 0], vec![0, 0]]);
        let mut sys = LinearSystem::new(&z);
        let s = sys.unknown(2, 2);
        sys.equation(vec![(d.clone(), s, d.clone())], d.clone());
        let sol = sys.solve().unwrap();
        assert_eq!(&(&d * sol.value(s)) * &d, d);
    }

    #[test]
    fn unsolvable_over_z() {
        let z = RingSpec::Integers;
        let two = Matrix::scalar(&z, 2);
        let mut sys = LinearSystem::new(&z);
        let s = sys.unknown(1, 1);
        sys.equation(vec![(two.clone(), s, two.clone())], two);
        assert!(sys.solve().is_none());
    }

    #[test]
    fn two_unknowns_over_zmod() {
        // 2x + 3y = 1 over Z/6
        let r = RingSpec::zmod(6).unwrap();
        let mut sys = LinearSystem::new(&r);
        let x = sys.unknown(1, 1);
        let y = sys.unknown(1, 1);
        let one = Matrix::identity(&r, 1);
        sys.equation(
            vec![(Matrix::scalar(&r, 2), x, one.clone()), (Matrix::scalar(&r, 3), y, one.clone())],
            one.clone(),
        );
        let sol = sys.solve().unwrap();
        let lhs = &(&Matrix::scalar(&r, 2) * sol.value(x)) + &(&Matrix::scalar(&r, 3) * sol.value(y));
        assert_eq!(lhs, one);
    }
}
