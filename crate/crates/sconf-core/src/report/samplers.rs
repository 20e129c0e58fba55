//! Seeded random supercharges mixing square-zero and generic samples.

use crate::exactlinalg::{Matrix, Scalar};
use crate::sample::{self, SampleRng};
use crate::superlie::f4::{F4Data, SPINOR_DIM};
use crate::twist::{
    canonical_rep_4d, random_null_spinor, FourDGroupElement, N4PureTensor, Supercharge3d, Supercharge4d,
    Supercharge5d, ThreeDGroupElement,
};

fn perturb(rng: &mut SampleRng, m: &Matrix) -> Matrix {
    let mut out = m.clone();
    let (r, c) = (sample::index(rng, m.rows()), sample::index(rng, m.cols()));
    out[(r, c)] = &out[(r, c)] + &sample::nonzero_scalar(rng);
    out
}

fn random_ranks(rng: &mut SampleRng, k: usize) -> (usize, usize) {
    let cap = k.min(4);
    let rp = sample::index(rng, cap + 1);
    let rm = sample::index(rng, cap - rp + 1);
    if sample::coin(rng, 0.5) {
        (rp, rm)
    } else {
        (rm, rp)
    }
}

/// Conjugated canonical representatives, their one-entry perturbations, and
/// generic sparse pairs.
pub fn supercharge_4d(rng: &mut SampleRng, k: usize) -> Supercharge4d {
    let (rp, rm) = random_ranks(rng, k);
    let base = canonical_rep_4d(k, rp, rm).expect("ranks within the bound");
    let q = FourDGroupElement::random(rng, k).act(&base);
    match sample::index(rng, 4) {
        0 | 1 => q,
        2 => {
            let plus = perturb(rng, &q.q_plus);
            Supercharge4d::new(k, plus, q.q_minus).expect("shape")
        }
        _ => Supercharge4d::new(k, sample::sparse_matrix(rng, k, 4, 0.3), sample::sparse_matrix(rng, 4, k, 0.3))
            .expect("shape"),
    }
}

/// Adjust the last nonzero-weight coordinate of `v` so that `u . v = 0`.
fn make_orthogonal(u: &[Scalar], v: &mut [Scalar]) {
    if let Some(p) = (0..u.len()).rev().find(|&p| !u[p].is_zero()) {
        let dot: Scalar = u.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
        let fix = &dot * &u[p].inv().expect("nonzero");
        v[p] = &v[p] - &fix;
    }
}

/// Random pure tensor in `psl(4|4)`; each of the two pairings is forced to
/// vanish with probability one half.
pub fn pure_tensor(rng: &mut SampleRng) -> N4PureTensor {
    let mut t = N4PureTensor {
        q_plus: sample::vector(rng, 4),
        w_plus: sample::vector(rng, 4),
        q_minus: sample::vector(rng, 4),
        w_minus: sample::vector(rng, 4),
    };
    if sample::coin(rng, 0.5) {
        make_orthogonal(&t.w_plus, &mut t.w_minus);
    }
    if sample::coin(rng, 0.5) {
        make_orthogonal(&t.q_plus, &mut t.q_minus);
    }
    t
}

fn standard_null(k: usize, offset: usize) -> Vec<Scalar> {
    let mut w = vec![Scalar::zero(); k];
    w[offset] = Scalar::one();
    w[offset + 1] = Scalar::i();
    w
}

fn outer_rows(coeffs: &[Scalar], w: &[Scalar]) -> Vec<Vec<Scalar>> {
    coeffs.iter().map(|c| w.iter().map(|x| c * x).collect()).collect()
}

/// Rank-one and (for `k >= 4`) rank-two square-zero supercharges moved by
/// random group elements, plus perturbations and generic blocks.
pub fn supercharge_3d(rng: &mut SampleRng, k: usize) -> Supercharge3d {
    let two_n = 4;
    let base = if k >= 4 && sample::coin(rng, 0.5) {
        let e = standard_null(k, 0);
        let f = standard_null(k, 2);
        let mut rows = vec![vec![Scalar::zero(); k]; two_n];
        rows[0] = e;
        rows[2] = f;
        Supercharge3d::new(k, rows).expect("shape")
    } else {
        let mut c = sample::vector(rng, two_n);
        if c.iter().all(Scalar::is_zero) {
            c[0] = Scalar::one();
        }
        let w = if k >= 2 { standard_null(k, 0) } else { vec![Scalar::zero(); k] };
        Supercharge3d::new(k, outer_rows(&c, &w)).expect("shape")
    };
    let q = ThreeDGroupElement::random(rng, k, two_n).act(&base);
    match sample::index(rng, 4) {
        0 | 1 => q,
        2 => Supercharge3d::from_block(&perturb(rng, &q.block())).expect("shape"),
        _ => Supercharge3d::from_block(&sample::sparse_matrix(rng, two_n, k, 0.3)).expect("shape"),
    }
}

/// Proportional null spinors, independent null spinors, and generic pairs.
pub fn supercharge_5d(rng: &mut SampleRng, data: &F4Data) -> Supercharge5d {
    let n = random_null_spinor(data, rng);
    let (q1, q2) = match sample::index(rng, 4) {
        0 | 1 => {
            let t = sample::scalar(rng);
            let q2 = n.iter().map(|x| &t * x).collect();
            if sample::coin(rng, 0.5) {
                (n, q2)
            } else {
                (q2, n)
            }
        }
        2 => (n, random_null_spinor(data, rng)),
        _ => (sample::vector(rng, SPINOR_DIM), sample::vector(rng, SPINOR_DIM)),
    };
    Supercharge5d::new(q1, q2).expect("spinor length")
}
