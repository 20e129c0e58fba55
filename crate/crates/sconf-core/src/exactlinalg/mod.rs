//! Exact linear algebra over the Gaussian rationals `Q(i)`.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{Echelon, Matrix};
pub use scalar::{GaussianRational, Scalar};
pub use subspace::{complexify_vector, realify_vector, Parity, Subspace};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("matrix is {0}x{1}, not square")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Signature `(positive, negative, null)` of a Hermitian matrix, by exact
/// congruence diagonalization.
pub fn hermitian_signature(h: &Matrix) -> Result<(usize, usize, usize), LinalgError> {
    if !h.is_square() {
        return Err(LinalgError::NotSquare(h.rows(), h.cols()));
    }
    if *h != h.adjoint() {
        return Err(LinalgError::Shape("matrix is not Hermitian".into()));
    }
    let mut m = h.clone();
    let n = m.rows();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&k| !m[(k, k)].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // all diagonal entries vanish; combine two indices to create one
                let pair = active
                    .iter()
                    .flat_map(|&a| active.iter().map(move |&b| (a, b)))
                    .find(|&(a, b)| a != b && !m[(a, b)].is_zero());
                let Some((a, b)) = pair else { break };
                // e_a <- e_a + conj(h_ab) e_b makes the (a,a) entry 2|h_ab|^2
                let c = m[(a, b)].conj();
                add_congruence(&mut m, a, b, &c);
                a
            }
        };
        let d = m[(p, p)].clone();
        match d.real_sign() {
            std::cmp::Ordering::Greater => pos += 1,
            std::cmp::Ordering::Less => neg += 1,
            std::cmp::Ordering::Equal => unreachable!("pivot is nonzero"),
        }
        let dinv = d.inv()?;
        active.retain(|&k| k != p);
        for &r in &active {
            let f = &m[(r, p)] * &dinv;
            if f.is_zero() {
                continue;
            }
            for &c in &active {
                let v = &f * &m[(p, c)];
                m[(r, c)] -= &v;
            }
        }
        for &k in &active {
            m[(k, p)] = Scalar::zero();
            m[(p, k)] = Scalar::zero();
        }
    }
    Ok((pos, neg, n - pos - neg))
}

/// Replace basis vector `e_a` by `e_a + c e_b` in the Hermitian form `m`
/// (antilinear in the first slot).
fn add_congruence(m: &mut Matrix, a: usize, b: usize, c: &Scalar) {
    let n = m.rows();
    let cc = c.conj();
    for k in 0..n {
        let v = &cc * &m[(b, k)];
        m[(a, k)] += &v;
    }
    for k in 0..n {
        let v = c * &m[(k, b)];
        m[(k, a)] += &v;
    }
}
