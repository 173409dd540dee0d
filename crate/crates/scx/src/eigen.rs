//! Dense symmetric eigensolver (cyclic Jacobi rotations).

use num_traits::{Float, Signed};

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Side length beyond which the dense solver refuses to run.
pub const MAX_SIDE: usize = 2500;

const MAX_SWEEPS: usize = 100;

/// Full real spectrum of a symmetric matrix, ascending.
///
/// Input asymmetry beyond 1e-12 (absolute) is an input error. Sweeps stop
/// once the off-diagonal Frobenius norm drops below 1e-12 times the Frobenius
/// norm of the input, which leaves every eigenvalue of the small-integer
/// matrices this crate produces accurate to well under 1e-10 * max(1, ||M||).
pub fn symmetric_eigenvalues<T>(m: &Matrix<T>) -> Result<Vec<T>>
where
    T: Float + Signed + std::fmt::Debug,
{
    if m.rows() != m.cols() {
        return Err(Error::invalid(format!(
            "eigensolver needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n > MAX_SIDE {
        return Err(Error::MatrixTooLarge(n, MAX_SIDE));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let sym_tol = T::from(1e-12).unwrap();
    if let Some((i, j, d)) = m.max_asymmetry() {
        if d > sym_tol {
            return Err(Error::NotSymmetric { i, j, delta: d.to_f64().unwrap_or(f64::NAN) });
        }
    }

    // Work on the symmetrized copy so the tiny allowed asymmetry cannot bias
    // the rotations.
    let mut a = vec![T::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = (*m.at(i, j) + *m.at(j, i)) / T::from(2.0).unwrap();
        }
    }

    let fro = {
        let mut s = T::zero();
        for x in &a {
            s = s + *x * *x;
        }
        s.sqrt()
    };
    let stop = T::from(1e-12).unwrap() * fro;

    let off = |a: &[T]| {
        let mut s = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s = s + a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off(&a) <= stop {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (T::from(2.0).unwrap() * apq);
                // tan of the rotation angle, the root smaller in magnitude
                let t = if theta.abs() > T::from(1e20).unwrap() {
                    (T::from(2.0).unwrap() * theta).recip()
                } else {
                    let sign = if theta >= T::zero() { T::one() } else { -T::one() };
                    sign / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = (t * t + T::one()).sqrt().recip();
                let s = t * c;
                let tau = s / (T::one() + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    let new_ip = aip - s * (aiq + tau * aip);
                    let new_iq = aiq + s * (aip - tau * aiq);
                    a[i * n + p] = new_ip;
                    a[p * n + i] = new_ip;
                    a[i * n + q] = new_iq;
                    a[q * n + i] = new_iq;
                }
            }
        }
    }
    if !converged && off(&a) > stop {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut eig: Vec<T> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    Ok(eig)
}
