//! Seeded random sampling of exact scalars, matrices and group elements.
//!
//! Entries are drawn from `{0, ±1, ±i, ±2, ±1/2}` so failures are small and
//! reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlinalg::{Matrix, Scalar};

pub type SampleRng = ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 7;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream derived from a base seed and a label, so suites do not
/// shift each other's samples.
pub fn sub_rng(seed: u64, label: &str) -> SampleRng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn value(k: usize) -> Scalar {
    match k {
        0 => Scalar::zero(),
        1 => Scalar::one(),
        2 => Scalar::from_int(-1),
        3 => Scalar::i(),
        4 => -Scalar::i(),
        5 => Scalar::from_int(2),
        6 => Scalar::from_int(-2),
        7 => Scalar::from_ratio(1, 2),
        _ => Scalar::from_ratio(-1, 2),
    }
}

pub fn scalar(rng: &mut SampleRng) -> Scalar {
    value(rng.gen_range(0..9))
}

pub fn nonzero_scalar(rng: &mut SampleRng) -> Scalar {
    value(rng.gen_range(1..9))
}

pub fn vector(rng: &mut SampleRng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| scalar(rng)).collect()
}

pub fn matrix(rng: &mut SampleRng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| scalar(rng))
}

/// Each entry is nonzero with probability `density`.
pub fn sparse_matrix(rng: &mut SampleRng, rows: usize, cols: usize, density: f64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| if rng.gen_bool(density) { nonzero_scalar(rng) } else { Scalar::zero() })
}

pub fn coin(rng: &mut SampleRng, p: f64) -> bool {
    rng.gen_bool(p)
}

pub fn index(rng: &mut SampleRng, n: usize) -> usize {
    rng.gen_range(0..n)
}

pub fn choose<'a, T>(rng: &mut SampleRng, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("nonempty choice")
}

/// A group element together with its inverse.
#[derive(Clone, Debug)]
pub struct Invertible {
    pub g: Matrix,
    pub inv: Matrix,
}

impl Invertible {
    pub fn identity(n: usize) -> Self {
        Self { g: Matrix::identity(n), inv: Matrix::identity(n) }
    }

    pub fn then(&self, next: &Invertible) -> Invertible {
        Invertible { g: &next.g * &self.g, inv: &self.inv * &next.inv }
    }
}

/// Product of `steps` elementary matrices `I + t E_ij`; determinant one.
pub fn special_linear(rng: &mut SampleRng, n: usize, steps: usize) -> Invertible {
    let mut acc = Invertible::identity(n);
    if n < 2 {
        return acc;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let t = nonzero_scalar(rng);
        let mut e = Matrix::identity(n);
        e[(i, j)] = t.clone();
        let mut f = Matrix::identity(n);
        f[(i, j)] = -t;
        acc = acc.then(&Invertible { g: e, inv: f });
    }
    acc
}

/// Exact rotations `(c, s)` with `c^2 + s^2 = 1`, including complex ones.
fn rotation_pairs() -> Vec<(Scalar, Scalar)> {
    vec![
        (Scalar::from_ratio(3, 5), Scalar::from_ratio(4, 5)),
        (Scalar::from_ratio(5, 13), Scalar::from_ratio(-12, 13)),
        (Scalar::from_ratio(8, 17), Scalar::from_ratio(15, 17)),
        (Scalar::from_ratio(5, 4), "3/4*i".parse().expect("literal")),
        (Scalar::from_ratio(5, 3), "-4/3*i".parse().expect("literal")),
        (Scalar::zero(), Scalar::one()),
    ]
}

/// Element of `SO(k, Q(i))`: products of plane rotations and unipotents
/// `exp(t N)` with `N = (e_a + i e_b) ^ e_c`.
pub fn special_orthogonal(rng: &mut SampleRng, k: usize, steps: usize) -> Invertible {
    let mut acc = Invertible::identity(k);
    if k < 2 {
        return acc;
    }
    let pairs = rotation_pairs();
    for _ in 0..steps {
        let mut idx: Vec<usize> = (0..k).collect();
        idx.shuffle(rng);
        if k >= 3 && rng.gen_bool(0.4) {
            let (a, b, c) = (idx[0], idx[1], idx[2]);
            let t = nonzero_scalar(rng);
            // N e_c = -(e_a + i e_b), N e_a = e_c, N e_b = i e_c
            let mut n = Matrix::zeros(k, k);
            n[(c, a)] = Scalar::one();
            n[(c, b)] = Scalar::i();
            n[(a, c)] = Scalar::from_int(-1);
            n[(b, c)] = -Scalar::i();
            let n2 = &n * &n;
            let half = Scalar::from_ratio(1, 2);
            let exp = |s: &Scalar| {
                let m = &Matrix::identity(k) + &n.scale(s);
                &m + &n2.scale(&(&(s * s) * &half))
            };
            acc = acc.then(&Invertible { g: exp(&t), inv: exp(&-&t) });
        } else {
            let (a, b) = (idx[0], idx[1]);
            let (c, s) = choose(rng, &pairs).clone();
            let mut g = Matrix::identity(k);
            g[(a, a)] = c.clone();
            g[(b, b)] = c.clone();
            g[(a, b)] = -&s;
            g[(b, a)] = s.clone();
            let inv = g.transpose();
            acc = acc.then(&Invertible { g, inv });
        }
    }
    acc
}

/// Element of `Sp(2n)` for the form `j`: products of transvections
/// `x -> x + c w(v, x) v`.
pub fn symplectic(rng: &mut SampleRng, j: &Matrix, steps: usize) -> Invertible {
    let n = j.rows();
    let mut acc = Invertible::identity(n);
    for _ in 0..steps {
        let v = loop {
            let v = vector(rng, n);
            if v.iter().any(|x| !x.is_zero()) {
                break v;
            }
        };
        let c = nonzero_scalar(rng);
        let col = Matrix::column_vector(&v);
        let vvj = &(&col * &col.transpose()) * j;
        let g = &Matrix::identity(n) + &vvj.scale(&c);
        let inv = &Matrix::identity(n) - &vvj.scale(&c);
        acc = acc.then(&Invertible { g, inv });
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_streams_are_reproducible() {
        let a: Vec<Scalar> = vector(&mut rng(3), 10);
        let b: Vec<Scalar> = vector(&mut rng(3), 10);
        assert_eq!(a, b);
        assert_ne!(vector(&mut sub_rng(3, "x"), 10), vector(&mut sub_rng(3, "y"), 10));
    }

    #[test]
    fn group_elements_are_in_their_groups() {
        let mut r = rng(1);
        for _ in 0..10 {
            let s = special_linear(&mut r, 4, 6);
            assert_eq!(s.g.determinant().unwrap(), Scalar::one());
            assert_eq!(&s.g * &s.inv, Matrix::identity(4));
            let o = special_orthogonal(&mut r, 5, 6);
            assert_eq!(&o.g.transpose() * &o.g, Matrix::identity(5));
            assert_eq!(o.g.determinant().unwrap(), Scalar::one());
            assert_eq!(&o.g * &o.inv, Matrix::identity(5));
            let j = crate::superlie::symplectic_form(4);
            let p = symplectic(&mut r, &j, 4);
            assert_eq!(&(&p.g.transpose() * &j) * &p.g, j);
            assert_eq!(&p.g * &p.inv, Matrix::identity(4));
        }
    }
}
