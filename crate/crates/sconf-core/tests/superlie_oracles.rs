//! Oracles built without the library's bracket tables: conformal Killing vector
//! fields on `R^{p,q}` and dimension formulas for the matrix families.

use std::collections::BTreeMap;

use sconf_core::exactlinalg::{Matrix, Scalar};
use sconf_core::superlie::{conformal, osp, psl, sl, verify_algebra, SuperLieAlgebra};

/// Polynomial in `n` variables with integer coefficients, keyed by exponents.
type Poly = BTreeMap<Vec<u32>, i64>;
/// Vector field: one polynomial per component.
type Field = Vec<Poly>;

fn add_term(p: &mut Poly, exp: Vec<u32>, c: i64) {
    if c == 0 {
        return;
    }
    let e = p.entry(exp).or_insert(0);
    *e += c;
    if *e == 0 {
        p.retain(|_, v| *v != 0);
    }
}

fn var(n: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

fn derivative(p: &Poly, j: usize) -> Poly {
    let mut out = Poly::new();
    for (e, &c) in p {
        if e[j] > 0 {
            let mut e2 = e.clone();
            e2[j] -= 1;
            add_term(&mut out, e2, c * i64::from(e[j]));
        }
    }
    out
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, &ca) in a {
        for (eb, &cb) in b {
            add_term(&mut out, ea.iter().zip(eb).map(|(x, y)| x + y).collect(), ca * cb);
        }
    }
    out
}

/// `[X, Y]^i = X^j d_j Y^i - Y^j d_j X^i`.
fn lie_bracket(x: &Field, y: &Field) -> Field {
    let n = x.len();
    (0..n)
        .map(|i| {
            let mut out = Poly::new();
            for j in 0..n {
                for (e, c) in mul(&x[j], &derivative(&y[i], j)) {
                    add_term(&mut out, e, c);
                }
                for (e, c) in mul(&y[j], &derivative(&x[i], j)) {
                    add_term(&mut out, e, -c);
                }
            }
            out
        })
        .collect()
}

/// Killing fields in the builder's basis order: `M_ab (a<b)`, `P_a`, `D`, `K_a`.
fn killing_fields(p: usize, q: usize) -> Vec<Field> {
    let n = p + q;
    let eta = |a: usize| if a < p { 1 } else { -1 };
    let zero = || vec![Poly::new(); n];
    let constant = vec![0; n];
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            // x_a d_b - x_b d_a with lowered coordinates
            let mut f = zero();
            add_term(&mut f[b], var(n, a), eta(a));
            add_term(&mut f[a], var(n, b), -eta(b));
            out.push(f);
        }
    }
    for a in 0..n {
        let mut f = zero();
        add_term(&mut f[a], constant.clone(), 1);
        out.push(f);
    }
    let mut d = zero();
    for (j, comp) in d.iter_mut().enumerate() {
        add_term(comp, var(n, j), 1);
    }
    out.push(d);
    for a in 0..n {
        // 2 x_a (x . d) - (x . x) d_a
        let mut f = zero();
        for j in 0..n {
            let mut e = var(n, a);
            e[j] += 1;
            add_term(&mut f[j], e, 2 * eta(a));
        }
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 2;
            add_term(&mut f[a], e, -eta(j));
        }
        out.push(f);
    }
    out
}

/// Coordinates of every field over the monomials that occur.
fn flatten(fields: &[Field]) -> (Vec<(usize, Vec<u32>)>, Matrix) {
    let mut keys: Vec<(usize, Vec<u32>)> = Vec::new();
    for f in fields {
        for (i, comp) in f.iter().enumerate() {
            for e in comp.keys() {
                if !keys.contains(&(i, e.clone())) {
                    keys.push((i, e.clone()));
                }
            }
        }
    }
    let cols = Matrix::from_fn(keys.len(), fields.len(), |r, c| {
        let (i, e) = &keys[r];
        Scalar::from_int(*fields[c][*i].get(e).unwrap_or(&0))
    });
    (keys, cols)
}

/// Structure constants `f[a][b]` of the vector fields in their own basis.
fn field_constants(fields: &[Field]) -> Vec<Vec<Vec<Scalar>>> {
    let (keys, basis) = flatten(fields);
    fields
        .iter()
        .map(|x| {
            fields
                .iter()
                .map(|y| {
                    let br = lie_bracket(x, y);
                    let rhs: Vec<Scalar> = keys
                        .iter()
                        .map(|(i, e)| Scalar::from_int(*br[*i].get(e).unwrap_or(&0)))
                        .collect();
                    let extra = br.iter().enumerate().any(|(i, comp)| comp.keys().any(|e| !keys.contains(&(i, e.clone()))));
                    assert!(!extra, "bracket leaves the span of the Killing fields");
                    basis.solve(&rhs).unwrap().expect("bracket of Killing fields is a Killing field")
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Copy)]
enum Kind {
    M,
    P,
    D,
    K,
}

fn kinds(n: usize) -> Vec<Kind> {
    let mut out = vec![Kind::M; n * (n - 1) / 2];
    out.extend(std::iter::repeat_n(Kind::P, n));
    out.push(Kind::D);
    out.extend(std::iter::repeat_n(Kind::K, n));
    out
}

/// Looks for per-kind scales `l` and a sign `s` with `c_ab^c l_c = s l_a l_b f_ab^c`,
/// i.e. `e_a -> l_a V_a` a homomorphism (`s = 1`) or anti-homomorphism (`s = -1`).
fn find_rescaling(alg: &SuperLieAlgebra, f: &[Vec<Vec<Scalar>>], n: usize) -> Option<[i64; 5]> {
    let kinds = kinds(n);
    let dim = alg.dim();
    let vals = [1i64, -1, 2, -2];
    for &lm in &vals {
        for &lp in &vals {
            for &ld in &vals {
                for &lk in &vals {
                    for s in [1i64, -1] {
                        let scale = |a: usize| {
                            Scalar::from_int(match kinds[a] {
                                Kind::M => lm,
                                Kind::P => lp,
                                Kind::D => ld,
                                Kind::K => lk,
                            })
                        };
                        let ok = (0..dim).all(|a| {
                            (0..dim).all(|b| {
                                (0..dim).all(|c| {
                                    let lhs = &alg.structure_constant(a, b, c) * &scale(c);
                                    let rhs = &(&(&Scalar::from_int(s) * &scale(a)) * &scale(b)) * &f[a][b][c];
                                    lhs == rhs
                                })
                            })
                        });
                        if ok {
                            return Some([lm, lp, ld, lk, s]);
                        }
                    }
                }
            }
        }
    }
    None
}

#[test]
fn conformal_algebra_matches_killing_fields() {
    let mut found = Vec::new();
    for n in 3..=5 {
        for q in 0..=n / 2 {
            let p = n - q;
            let alg = conformal(p, q).unwrap();
            let fields = killing_fields(p, q);
            assert_eq!(fields.len(), alg.dim());
            let f = field_constants(&fields);
            let r = find_rescaling(&alg, &f, n);
            assert!(r.is_some(), "conf({p},{q}) is not a rescaled image of the Killing fields");
            found.push(r.unwrap());
        }
    }
    // one convention throughout
    assert!(found.windows(2).all(|w| w[0] == w[1]), "{found:?}");
}

#[test]
fn corrupted_conformal_constant_is_detected_by_the_oracle() {
    let alg = conformal(3, 0).unwrap();
    let fields = killing_fields(3, 0);
    let f = field_constants(&fields);
    // [P1, K1] gains a stray M12 component
    let p1 = alg.index_of("P1").unwrap();
    let k1 = alg.index_of("K1").unwrap();
    let m12 = alg.index_of("M12").unwrap();
    let bad = alg.with_structure_constant(k1, p1, m12, Scalar::from_int(5));
    assert!(find_rescaling(&bad, &f, 3).is_none());
}

#[test]
fn killing_field_brackets_satisfy_jacobi() {
    let fields = killing_fields(2, 1);
    let n = fields.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let t1 = lie_bracket(&fields[a], &lie_bracket(&fields[b], &fields[c]));
                let t2 = lie_bracket(&fields[b], &lie_bracket(&fields[c], &fields[a]));
                let t3 = lie_bracket(&fields[c], &lie_bracket(&fields[a], &fields[b]));
                for i in 0..3 {
                    let mut sum = Poly::new();
                    for t in [&t1, &t2, &t3] {
                        for (e, c) in &t[i] {
                            add_term(&mut sum, e.clone(), *c);
                        }
                    }
                    assert!(sum.is_empty());
                }
            }
        }
    }
}

#[test]
fn orthosymplectic_dimensions() {
    for m in 1..=8usize {
        for two_n in [2usize, 4] {
            let alg = osp(m, two_n).unwrap();
            let n = two_n / 2;
            assert_eq!(alg.even_dim(), m * (m - 1) / 2 + n * (2 * n + 1), "osp({m}|{two_n})");
            assert_eq!(alg.odd_dim(), m * two_n, "osp({m}|{two_n})");
        }
    }
    assert!(verify_algebra(&osp(8, 2).unwrap()).passed);
}

#[test]
fn special_linear_dimensions() {
    for k in [1usize, 2, 3, 5, 6] {
        let alg = sl(4, k).unwrap();
        assert_eq!(alg.even_dim(), 16 + k * k - 1);
        assert_eq!(alg.odd_dim(), 8 * k);
    }
    let alg = psl(4).unwrap();
    assert_eq!((alg.even_dim(), alg.odd_dim()), (30, 32));
}

#[test]
fn orthosymplectic_basis_preserves_the_superform() {
    // X^st G + G X = 0 with G = diag(I_m, J) and the supertranspose
    // [A B; C D]^st = [A^T C^T; -B^T D^T]
    for (m, two_n) in [(2usize, 4usize), (3, 4), (8, 2)] {
        let alg = osp(m, two_n).unwrap();
        let real = alg.realization().unwrap();
        let size = m + two_n;
        let mut j = Matrix::zeros(two_n, two_n);
        for i in 0..two_n / 2 {
            j[(2 * i, 2 * i + 1)] = Scalar::one();
            j[(2 * i + 1, 2 * i)] = Scalar::from_int(-1);
        }
        let candidates = [j.clone(), {
            let mut p = Matrix::zeros(two_n, two_n);
            let h = two_n / 2;
            for i in 0..h {
                p[(i, h + i)] = Scalar::one();
                p[(h + i, i)] = Scalar::from_int(-1);
            }
            p
        }];
        let preserves = |jm: &Matrix| {
            let g = Matrix::block_diag(&Matrix::identity(m), jm);
            real.basis().iter().all(|x| {
                let a = x.block(0, 0, m, m);
                let b = x.block(0, m, m, two_n);
                let c = x.block(m, 0, two_n, m);
                let d = x.block(m, m, two_n, two_n);
                let mut st = Matrix::zeros(size, size);
                st.set_block(0, 0, &a.transpose());
                st.set_block(0, m, &c.transpose());
                st.set_block(m, 0, &b.transpose().scale(&Scalar::from_int(-1)));
                st.set_block(m, m, &d.transpose());
                let lhs = &(&st * &g) + &(&g * x);
                lhs.is_zero()
            })
        };
        assert!(candidates.iter().any(preserves), "osp({m}|{two_n})");
    }
}
