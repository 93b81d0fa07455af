use crate::{cast, from_usize, Real};

use super::OracleError;

/// Symmetric tridiagonal matrix stored as its diagonal and subdiagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTridiagonal<T> {
    diag: Vec<T>,
    off: Vec<T>,
}

impl<T: Real> SymmetricTridiagonal<T> {
    pub fn new(diag: Vec<T>, off: Vec<T>) -> Result<Self, OracleError> {
        if diag.is_empty() {
            return Err(OracleError::InvalidMatrix("needs at least one row"));
        }
        if off.len() + 1 != diag.len() {
            return Err(OracleError::InvalidMatrix(
                "subdiagonal length must be one less than the dimension",
            ));
        }
        Ok(Self { diag, off })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn off(&self) -> &[T] {
        &self.off
    }

    /// Number of eigenvalues strictly below `lambda`, from the signs of the
    /// LDL^T pivots of `A - lambda I` (Sturm count).
    pub fn count_below(&self, lambda: T) -> usize {
        let n = self.dim();
        let safe = T::min_positive_value() / T::epsilon();
        let mut count = 0;
        let mut q = T::one();
        for i in 0..n {
            let off2 = if i == 0 {
                T::zero()
            } else {
                self.off[i - 1] * self.off[i - 1]
            };
            q = self.diag[i] - lambda - off2 / q;
            if q.abs() < safe {
                q = -safe;
            }
            if q < T::zero() {
                count += 1;
            }
        }
        count
    }

    /// Interval guaranteed to contain the whole spectrum.
    fn gershgorin(&self) -> (T, T) {
        let n = self.dim();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let mut r = T::zero();
            if i > 0 {
                r = r + self.off[i - 1].abs();
            }
            if i + 1 < n {
                r = r + self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        let pad = (hi - lo + T::one()) * T::epsilon() * cast::<T>(16.0);
        (lo - pad, hi + pad)
    }

    /// The `k` smallest eigenvalues in ascending order, each isolated by
    /// bisection on the Sturm count to an absolute/relative tolerance of
    /// `1e-12` (floored at a few ulps for narrower scalar types).
    pub fn lowest_eigenvalues(&self, k: usize) -> Result<Vec<T>, OracleError> {
        let n = self.dim();
        if k > n {
            return Err(OracleError::TooManyLevels {
                requested: k,
                available: n,
            });
        }
        let (lo, hi) = self.gershgorin();
        let mut out = Vec::with_capacity(k);
        let mut floor = lo;
        for j in 0..k {
            let mut a = floor;
            let mut b = hi;
            for _ in 0..256 {
                let mid = (a + b) / cast::<T>(2.0);
                let tol = cast::<T>(1e-12)
                    .max(cast::<T>(1e-12) * mid.abs())
                    .max(cast::<T>(4.0) * T::epsilon() * (mid.abs() + T::one()));
                if b - a <= tol {
                    break;
                }
                if self.count_below(mid) <= j {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            let lambda = (a + b) / cast::<T>(2.0);
            out.push(lambda);
            // eigenvalues are requested in ascending order, so the left
            // bracket never moves back past the previous one
            floor = a;
        }
        Ok(out)
    }

    /// A few rounds of inverse iteration at `shift`, returning a unit-norm
    /// approximate eigenvector. Near-singular pivots are regularized, which
    /// is what makes shifting exactly onto an eigenvalue work.
    pub fn inverse_iteration(&self, shift: T, iterations: usize) -> Vec<T> {
        let n = self.dim();
        let scale = self
            .diag
            .iter()
            .chain(self.off.iter())
            .fold(T::zero(), |m, &v| m.max(v.abs()));
        let tiny = T::epsilon() * (scale + T::one());
        let guard = |d: T| {
            if d.abs() < tiny {
                if d < T::zero() {
                    -tiny
                } else {
                    tiny
                }
            } else {
                d
            }
        };

        let mut v = vec![from_usize::<T>(n).sqrt().recip(); n];
        let mut w = vec![T::zero(); n];
        let mut c = vec![T::zero(); n];
        for _ in 0..iterations {
            let mut d = guard(self.diag[0] - shift);
            if n > 1 {
                c[0] = self.off[0] / d;
            }
            w[0] = v[0] / d;
            for i in 1..n {
                d = guard(self.diag[i] - shift - self.off[i - 1] * c[i - 1]);
                if i + 1 < n {
                    c[i] = self.off[i] / d;
                }
                w[i] = (v[i] - self.off[i - 1] * w[i - 1]) / d;
            }
            for i in (0..n - 1).rev() {
                w[i] = w[i] - c[i] * w[i + 1];
            }
            let norm = w.iter().fold(T::zero(), |s, &x| s + x * x).sqrt();
            for i in 0..n {
                v[i] = w[i] / norm;
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn laplacian(n: usize) -> SymmetricTridiagonal<f64> {
        SymmetricTridiagonal::new(vec![2.0; n], vec![-1.0; n - 1]).unwrap()
    }

    #[test]
    fn construction_guards() {
        assert!(SymmetricTridiagonal::<f64>::new(vec![], vec![]).is_err());
        assert!(SymmetricTridiagonal::new(vec![1.0, 2.0], vec![]).is_err());
        assert!(SymmetricTridiagonal::new(vec![1.0], vec![]).is_ok());
    }

    #[test]
    fn two_by_two_exact() {
        // [[2, -1], [-1, 2]] has eigenvalues 1 and 3.
        let m = laplacian(2);
        assert_eq!(m.count_below(0.0), 0);
        assert_eq!(m.count_below(2.0), 1);
        assert_eq!(m.count_below(4.0), 2);
        let eigs = m.lowest_eigenvalues(2).unwrap();
        assert_relative_eq!(eigs[0], 1.0, epsilon = 1e-11);
        assert_relative_eq!(eigs[1], 3.0, epsilon = 1e-11);
    }

    #[test]
    fn discrete_laplacian_closed_form() {
        // Eigenvalues of tridiag(-1, 2, -1) of size n are
        // 2 - 2 cos(k pi / (n + 1)), k = 1..n.
        let n = 50;
        let m = laplacian(n);
        let eigs = m.lowest_eigenvalues(5).unwrap();
        for (k, &e) in eigs.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * core::f64::consts::PI / 51.0).cos();
            assert_relative_eq!(e, exact, epsilon = 1e-10, max_relative = 1e-10);
        }
    }

    #[test]
    fn diagonal_matrix_sorts_eigenvalues() {
        let m = SymmetricTridiagonal::new(vec![3.0, -1.0, 2.0], vec![0.0, 0.0]).unwrap();
        let eigs = m.lowest_eigenvalues(3).unwrap();
        assert_relative_eq!(eigs[0], -1.0, epsilon = 1e-11);
        assert_relative_eq!(eigs[1], 2.0, epsilon = 1e-11);
        assert_relative_eq!(eigs[2], 3.0, epsilon = 1e-11);
    }

    #[test]
    fn too_many_levels_rejected() {
        let m = laplacian(4);
        assert!(matches!(
            m.lowest_eigenvalues(5),
            Err(OracleError::TooManyLevels {
                requested: 5,
                available: 4
            })
        ));
        assert_eq!(m.lowest_eigenvalues(0).unwrap().len(), 0);
    }

    #[test]
    fn inverse_iteration_recovers_ground_vector() {
        // Ground eigenvector of tridiag(-1, 2, -1): sin(i pi / (n + 1)).
        let n = 40;
        let m = laplacian(n);
        let lambda = m.lowest_eigenvalues(1).unwrap()[0];
        let v = m.inverse_iteration(lambda, 3);
        let mut exact: Vec<f64> = (1..=n)
            .map(|i| (i as f64 * core::f64::consts::PI / (n + 1) as f64).sin())
            .collect();
        let norm = exact.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut exact {
            *x /= norm;
        }
        let dot: f64 = v.iter().zip(&exact).map(|(a, b)| a * b).sum();
        assert!(dot.abs() > 1.0 - 1e-8, "alignment {dot}");
    }

    #[test]
    fn f32_eigenvalues_reasonable() {
        let m = SymmetricTridiagonal::<f32>::new(vec![2.0; 8], vec![-1.0; 7]).unwrap();
        let eigs = m.lowest_eigenvalues(2).unwrap();
        let exact = 2.0 - 2.0 * (core::f32::consts::PI / 9.0).cos();
        assert_relative_eq!(eigs[0], exact, max_relative = 1e-5);
        assert!(eigs[1] > eigs[0]);
    }

    proptest! {
        #[test]
        fn sturm_count_brackets_spectrum(diag in prop::collection::vec(-5.0f64..5.0, 1..12)) {
            let n = diag.len();
            let off = vec![-0.5f64; n - 1];
            let m = SymmetricTridiagonal::new(diag, off).unwrap();
            prop_assert_eq!(m.count_below(-20.0), 0);
            prop_assert_eq!(m.count_below(20.0), n);
        }

        #[test]
        fn eigenvalues_ascend(seed in -3.0f64..3.0, n in 2usize..10) {
            let diag: Vec<f64> = (0..n).map(|i| seed + i as f64 * 0.37).collect();
            let off = vec![-0.3f64; n - 1];
            let m = SymmetricTridiagonal::new(diag, off).unwrap();
            let eigs = m.lowest_eigenvalues(n).unwrap();
            for w in eigs.windows(2) {
                prop_assert!(w[1] >= w[0] - 1e-10);
            }
        }
    }
}
