use crate::{cast, from_usize, Real};

use super::{SpecfunError, MAX_QUADRATURE_ORDER};

/// Gauss-Hermite quadrature rule for integrals of the form
/// `integral f(x) exp(-x^2) dx` over the whole line.
///
/// Nodes are the roots of the physicists' Hermite polynomial of the given
/// order, stored in increasing order and antisymmetric about zero; all
/// weights are positive and sum to `sqrt(pi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<T> {
    order: usize,
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> QuadratureRule<T> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// `sum_i w_i f(x_i)`, the rule applied to the weight-free factor `f`.
    pub fn integrate<F: Fn(T) -> T>(&self, f: F) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&x, &w)| acc + w * f(x))
    }
}

const NEWTON_ITERATIONS: usize = 100;

/// Evaluates the orthonormal Hermite function of the given order at `z`,
/// returning `(h_n(z), h_{n-1}(z))`.
fn orthonormal_hermite_pair<T: Real>(order: usize, z: T) -> (T, T) {
    let pi_quarter = T::PI().sqrt().sqrt();
    let mut p1 = T::one() / pi_quarter;
    let mut p2 = T::zero();
    for j in 1..=order {
        let jf = from_usize::<T>(j);
        let p3 = p2;
        p2 = p1;
        p1 = z * (cast::<T>(2.0) / jf).sqrt() * p2 - ((jf - T::one()) / jf).sqrt() * p3;
    }
    (p1, p2)
}

/// Builds the Gauss-Hermite rule of the given order (2 ..= 128).
///
/// Each positive root is seeded by the Tricomi-style estimates and polished
/// with Newton's method on the orthonormal recurrence until the step falls
/// below `1e-14`; the negative half is mirrored so the node set is exactly
/// antisymmetric. Weights come from the derivative of the orthonormal
/// Hermite function at each root.
pub fn gauss_hermite_rule<T: Real>(order: usize) -> Result<QuadratureRule<T>, SpecfunError> {
    if !(2..=MAX_QUADRATURE_ORDER).contains(&order) {
        return Err(SpecfunError::OutOfRange {
            name: "quadrature order",
            got: order as u64,
            max: MAX_QUADRATURE_ORDER as u64,
        });
    }

    let tol = cast::<T>(1e-14).max(cast::<T>(8.0) * T::epsilon());
    let half = order.div_ceil(2);
    let mut nodes = vec![T::zero(); order];
    let mut weights = vec![T::zero(); order];

    // Roots are found largest-first; descending[i] is the (i+1)-th largest.
    let mut descending = vec![T::zero(); half];
    let nf = from_usize::<T>(order);
    let mut z = T::zero();
    for i in 0..half {
        z = match i {
            0 => {
                let c = cast::<T>(2.0) * nf + T::one();
                c.sqrt() - cast::<T>(1.85575) * c.powf(-T::one() / cast::<T>(6.0))
            }
            1 => z - cast::<T>(1.14) * nf.powf(cast::<T>(0.426)) / z,
            2 => cast::<T>(1.86) * z - cast::<T>(0.86) * descending[0],
            3 => cast::<T>(1.91) * z - cast::<T>(0.91) * descending[1],
            _ => cast::<T>(2.0) * z - descending[i - 2],
        };

        let mut pp = T::zero();
        let mut converged = false;
        for _ in 0..NEWTON_ITERATIONS {
            let (p1, p2) = orthonormal_hermite_pair(order, z);
            pp = (cast::<T>(2.0) * nf).sqrt() * p2;
            let step = p1 / pp;
            z = z - step;
            if step.abs() <= tol {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(SpecfunError::NonConvergence(
                "Gauss-Hermite Newton polish",
                NEWTON_ITERATIONS,
            ));
        }

        if order % 2 == 1 && i == half - 1 {
            z = T::zero();
            let (_, p2) = orthonormal_hermite_pair(order, z);
            pp = (cast::<T>(2.0) * nf).sqrt() * p2;
        }
        descending[i] = z;

        let w = cast::<T>(2.0) / (pp * pp);
        nodes[order - 1 - i] = z;
        nodes[i] = -z;
        weights[i] = w;
        weights[order - 1 - i] = w;
    }

    Ok(QuadratureRule {
        order,
        nodes,
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    const SQRT_PI: f64 = 1.772_453_850_905_516;

    #[test]
    fn order_two_closed_form() {
        // Roots of H_2 = 4x^2 - 2 are +-1/sqrt(2), with equal weights
        // sqrt(pi)/2.
        let rule: QuadratureRule<f64> = gauss_hermite_rule(2).unwrap();
        let s = 0.5_f64.sqrt();
        assert_abs_diff_eq!(rule.nodes()[0], -s, epsilon = 1e-14);
        assert_abs_diff_eq!(rule.nodes()[1], s, epsilon = 1e-14);
        assert_relative_eq!(rule.weights()[0], SQRT_PI / 2.0, max_relative = 1e-14);
        assert_relative_eq!(rule.weights()[1], SQRT_PI / 2.0, max_relative = 1e-14);
    }

    #[test]
    fn odd_order_has_exact_zero_node() {
        let rule: QuadratureRule<f64> = gauss_hermite_rule(3).unwrap();
        assert_eq!(rule.nodes()[1], 0.0);
        let rule: QuadratureRule<f64> = gauss_hermite_rule(33).unwrap();
        assert_eq!(rule.nodes()[16], 0.0);
    }

    #[test]
    fn nodes_antisymmetric_and_increasing() {
        for order in [2usize, 3, 8, 16, 33, 64, 128] {
            let rule: QuadratureRule<f64> = gauss_hermite_rule(order).unwrap();
            let n = rule.nodes();
            for i in 0..order {
                assert_abs_diff_eq!(n[i], -n[order - 1 - i], epsilon = 1e-13);
            }
            for i in 1..order {
                assert!(n[i] > n[i - 1], "order {order}: nodes not increasing");
            }
            assert!(rule.weights().iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn weights_sum_to_sqrt_pi() {
        for order in [2usize, 5, 16, 40, 64, 127, 128] {
            let rule: QuadratureRule<f64> = gauss_hermite_rule(order).unwrap();
            let sum: f64 = rule.weights().iter().sum();
            assert_relative_eq!(sum, SQRT_PI, max_relative = 1e-12);
        }
    }

    #[test]
    fn monomial_moments_exact() {
        // integral x^{2m} exp(-x^2) dx = (2m-1)!! sqrt(pi) / 2^m; odd moments
        // vanish. A rule of order q is exact through degree 2q - 1.
        let rule: QuadratureRule<f64> = gauss_hermite_rule(16).unwrap();
        let mut double_fact = 1.0_f64;
        for k in 0..=20u32 {
            let got = rule.integrate(|x| x.powi(k as i32));
            if k % 2 == 1 {
                assert_abs_diff_eq!(got, 0.0, epsilon = 1e-12 * double_fact);
            } else {
                if k > 0 {
                    double_fact *= (k - 1) as f64;
                }
                let exact = double_fact * SQRT_PI / 2.0_f64.powi((k / 2) as i32);
                assert_relative_eq!(got, exact, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn quartic_moment_at_order_16() {
        let rule: QuadratureRule<f64> = gauss_hermite_rule(16).unwrap();
        let got = rule.integrate(|x| x.powi(4));
        assert_relative_eq!(got, 0.75 * SQRT_PI, max_relative = 1e-12);
    }

    #[test]
    fn order_guards() {
        assert!(gauss_hermite_rule::<f64>(1).is_err());
        assert!(gauss_hermite_rule::<f64>(129).is_err());
        assert!(gauss_hermite_rule::<f64>(2).is_ok());
        assert!(gauss_hermite_rule::<f64>(128).is_ok());
    }

    #[test]
    fn f32_rule_is_usable() {
        let rule: QuadratureRule<f32> = gauss_hermite_rule(8).unwrap();
        let sum: f32 = rule.weights().iter().sum();
        assert_abs_diff_eq!(sum, SQRT_PI as f32, epsilon = 1e-5);
    }
}
