use sconf_core::exactlinalg::{Matrix, Scalar};
use sconf_core::sample::{self, sub_rng, DEFAULT_SEED};
use sconf_core::superlie::{AlgebraElement, Family};
use sconf_core::twist::*;

fn s(x: &str) -> Scalar {
    x.parse().unwrap()
}

fn v(xs: &[&str]) -> Vec<Scalar> {
    xs.iter().map(|x| s(x)).collect()
}

fn schur() -> Supercharge4d {
    Supercharge4d::parse(2, "1,0,0,0;0,0,1,0", "zero").unwrap()
}

#[test]
fn zero_is_square_zero() {
    let t = FourDTwist::new(2).unwrap();
    assert!(is_square_zero(&AlgebraElement::zero(t.algebra())).unwrap());
}

#[test]
fn even_input_is_rejected() {
    let t = FourDTwist::new(2).unwrap();
    let even = AlgebraElement::basis(t.algebra(), 0);
    assert_eq!(is_square_zero(&even), Err(TwistError::NotOdd));
}

#[test]
fn schur_pair_is_closed_with_rank_two_zero() {
    let t = FourDTwist::new(2).unwrap();
    let q = schur();
    assert!(t.check_characterization(&q).unwrap());
    let class = t.orbit_invariant(&q).unwrap();
    assert_eq!(class.rank, RankData::Pair(2, 0));
    assert_eq!(class.extra, None);
}

#[test]
fn round_trip_through_the_algebra() {
    let t = FourDTwist::new(3).unwrap();
    let mut rng = sub_rng(DEFAULT_SEED, "roundtrip4d");
    for _ in 0..10 {
        let q = Supercharge4d::new(3, sample::matrix(&mut rng, 3, 4), sample::matrix(&mut rng, 4, 3)).unwrap();
        assert_eq!(t.supercharge(&t.element(&q).unwrap()).unwrap(), q);
    }
}

#[test]
fn projector_pair_is_not_closed() {
    let t = FourDTwist::new(2).unwrap();
    let p = Matrix::unit(2, 4, 0, 0);
    let q = Supercharge4d::new(2, p.clone(), p.transpose()).unwrap();
    assert!(!t.check_characterization(&q).unwrap());
    assert!(matches!(t.orbit_invariant(&q), Err(TwistError::NotNilpotent(_))));
}

#[test]
fn k_four_characterization_is_rejected() {
    let t = FourDTwist::new(4).unwrap();
    assert!(matches!(t.check_characterization(&Supercharge4d::zero(4)), Err(TwistError::Unsupported(_))));
}

#[test]
fn cone_examples() {
    let t = FourDTwist::new(4).unwrap();
    let e = |i: usize| {
        let mut x = vec![Scalar::zero(); 4];
        x[i] = Scalar::one();
        x
    };
    let tr = N4PureTensor { q_plus: e(0), w_plus: e(0), q_minus: e(1), w_minus: e(1) };
    assert_eq!(t.classify_n4_component(&tr).unwrap(), N4Cone::InCTr);
    let z = N4PureTensor { q_plus: e(0), w_plus: vec![Scalar::zero(); 4], q_minus: e(2), w_minus: e(2) };
    assert_ne!(t.classify_n4_component(&z).unwrap(), N4Cone::Neither);
    let zero = N4PureTensor::from_supercharge(&Supercharge4d::zero(4)).unwrap();
    assert_eq!(t.classify_n4_component(&zero).unwrap(), N4Cone::Both);
    let bad = N4PureTensor { q_plus: e(0), w_plus: e(0), q_minus: e(0), w_minus: e(0) };
    assert_eq!(t.classify_n4_component(&bad).unwrap(), N4Cone::Neither);
    assert!(!t.is_square_zero(&bad.to_supercharge().unwrap()).unwrap());
}

#[test]
fn higher_rank_blocks_are_not_pure_tensors() {
    let q = canonical_rep_4d(4, 2, 0).unwrap();
    assert_eq!(N4PureTensor::from_supercharge(&q), Err(TwistError::NotPureTensor));
}

#[test]
fn full_rank_determinant_is_reported_and_invariant() {
    let t = FourDTwist::new(4).unwrap();
    let q = canonical_rep_4d_with_det(&Scalar::from_int(5), false).unwrap();
    let class = t.orbit_invariant(&q).unwrap();
    assert_eq!(class.rank, RankData::Pair(4, 0));
    assert_eq!(class.extra, Some(Scalar::from_int(5)));
    let mut rng = sub_rng(DEFAULT_SEED, "det-invariance");
    for _ in 0..50 {
        let g = FourDGroupElement::random(&mut rng, 4);
        assert_eq!(t.orbit_invariant(&g.act(&q)).unwrap(), class);
    }
}

#[test]
fn canonical_representatives() {
    let q = canonical_rep_4d(2, 1, 0).unwrap();
    assert_eq!(q.q_plus, Matrix::unit(2, 4, 0, 0));
    assert!(q.q_minus.is_zero());
    let q = canonical_rep_4d(2, 1, 1).unwrap();
    let (pm, mp) = q.compositions();
    assert!(pm.is_zero() && mp.is_zero());
    let t = FourDTwist::new(5).unwrap();
    let q = canonical_rep_4d(5, 2, 2).unwrap();
    assert_eq!(t.orbit_invariant(&q).unwrap().rank, RankData::Pair(2, 2));
    // Q- Q+ = 0 forces r+ + r- <= 4 whatever k is
    assert!(matches!(canonical_rep_4d(5, 2, 3), Err(TwistError::Infeasible(_))));
    assert!(matches!(canonical_rep_4d(2, 2, 1), Err(TwistError::Infeasible(_))));
}

#[test]
fn group_action_is_conjugation() {
    let mut rng = sub_rng(DEFAULT_SEED, "conjugation4d");
    let q = canonical_rep_4d(3, 1, 1).unwrap();
    for _ in 0..5 {
        let g = FourDGroupElement::random(&mut rng, 3);
        let (m, minv) = g.supermatrices();
        let moved = &(&m * q.to_supermatrix().matrix()) * &minv;
        assert_eq!(&moved, g.act(&q).to_supermatrix().matrix());
    }
}

#[test]
fn three_d_example_has_rank_one() {
    let t = ThreeDTwist::new(2).unwrap();
    let z = vec![Scalar::zero(); 2];
    let q = Supercharge3d::new(2, vec![v(&["1", "i"]), z.clone(), z.clone(), z]).unwrap();
    assert!(t.check_conditions(&q).unwrap());
    let d = decompose_3d(&q).unwrap();
    assert_eq!(d.first, PairForm::Proportional { w: v(&["1", "i"]), c: s("0") });
    assert_eq!(d.second, PairForm::Vanishing);
    assert_eq!(t.orbit_invariant(&q).unwrap().rank, RankData::Single(1));
    assert!(t.check_conditions(&Supercharge3d::zero(2, 4)).unwrap());
}

#[test]
fn three_d_non_null_vector_fails() {
    let t = ThreeDTwist::new(2).unwrap();
    let z = vec![Scalar::zero(); 2];
    let q = Supercharge3d::new(2, vec![v(&["1", "0"]), v(&["0", "1"]), z.clone(), z]).unwrap();
    assert!(!t.check_conditions(&q).unwrap());
}

#[test]
fn three_d_rank_two_image_is_isotropic() {
    let t = ThreeDTwist::new(4).unwrap();
    let z = vec![Scalar::zero(); 4];
    let q = Supercharge3d::new(4, vec![v(&["1", "i", "0", "0"]), z.clone(), v(&["0", "0", "1", "i"]), z]).unwrap();
    assert_eq!(t.orbit_invariant(&q).unwrap().rank, RankData::Single(2));
    assert!(image_is_isotropic(&q));
}

#[test]
fn pairwise_form_is_not_necessary() {
    let t = ThreeDTwist::new(4).unwrap();
    let a = v(&["1", "i", "0", "0"]);
    let b = v(&["0", "0", "1", "i"]);
    let q = Supercharge3d::new(4, vec![a.clone(), b.clone(), b, a]).unwrap();
    assert!(t.check_conditions(&q).unwrap());
    assert!(!split_conditions_3d(&q));
    assert!(decompose_3d(&q).unwrap().outside_pairwise_form);
}

#[test]
fn null_pair_reduction_examples() {
    assert_eq!(orbit_param_3d(&v(&["1", "i", "0", "0"]), &v(&["0", "0", "1", "i"])).unwrap(), Scalar::zero());
    let r = reduce_null_pair(&v(&["1", "i", "0", "0"]), &v(&["3", "3*i", "1", "i"])).unwrap();
    assert_eq!(r.x, Scalar::from_int(3));
    assert_eq!(r.w_image, v(&["1", "i", "0", "0"]));
    assert_eq!(r.residual, v(&["0", "0", "1", "i"]));
    assert!(matches!(orbit_param_3d(&v(&["1", "0", "0", "0"]), &v(&["0", "0", "1", "i"])), Err(TwistError::Infeasible(_))));
}

#[test]
fn null_pair_reduction_is_special_orthogonal() {
    let mut rng = sub_rng(DEFAULT_SEED, "reduce");
    for k in [4, 5, 6] {
        let mut w = vec![Scalar::zero(); k];
        w[0] = Scalar::one();
        w[1] = Scalar::i();
        let mut w2 = vec![Scalar::zero(); k];
        w2[2] = Scalar::one();
        w2[3] = Scalar::i();
        for _ in 0..10 {
            let o = sample::special_orthogonal(&mut rng, k, 5);
            let a = o.g.apply(&w).unwrap();
            let b = o.g.apply(&w2).unwrap();
            let r = reduce_null_pair(&a, &b).unwrap();
            assert_eq!(&r.transform.transpose() * &r.transform, Matrix::identity(k));
            assert_eq!(r.transform.determinant().unwrap(), Scalar::one());
            assert_eq!(r.w_image, w);
            let rebuilt: Vec<Scalar> = (0..k).map(|i| &(&r.x * &w[i]) + &r.residual[i]).collect();
            assert_eq!(r.w_prime_image, rebuilt);
        }
    }
}

#[test]
fn x_parameter_moves_under_the_null_stabilizer() {
    // T(u) = u + g(u,a) e - g(u,e) a - g(u,e) e / 2 with e = (1,i,0,0), a = (0,0,1,0):
    // fixes e, sends (0,0,1,i) to (0,0,1,i) + e
    let e = v(&["1", "i", "0", "0"]);
    let a = v(&["0", "0", "1", "0"]);
    let t = Matrix::from_fn(4, 4, |r, c| {
        let id = if r == c { Scalar::one() } else { Scalar::zero() };
        &(&(&id + &(&e[r] * &a[c])) - &(&a[r] * &e[c])) - &(&(&e[r] * &e[c]) * &s("1/2"))
    });
    assert_eq!(&t.transpose() * &t, Matrix::identity(4));
    let f = v(&["0", "0", "1", "i"]);
    let moved = t.apply(&f).unwrap();
    assert_eq!(t.apply(&e).unwrap(), e);
    assert_eq!(orbit_param_3d(&e, &f).unwrap(), Scalar::zero());
    assert_eq!(orbit_param_3d(&e, &moved).unwrap(), Scalar::one());
}

#[test]
fn six_d_rank_from_generic_bracket() {
    let t = ThreeDTwist::with_symplectic(8, 2).unwrap();
    let mut w = vec![Scalar::zero(); 8];
    w[0] = Scalar::one();
    w[1] = Scalar::i();
    let q = Supercharge3d::new(8, vec![w.clone(), vec![Scalar::zero(); 8]]).unwrap();
    assert!(t.is_square_zero(&q).unwrap());
    assert_eq!(t.orbit_invariant(&q).unwrap().rank, RankData::Single(1));
    assert_eq!(t.orbit_invariant(&q).unwrap().family, Family::OspK4);
}

#[test]
fn five_d_examples() {
    let t = FiveDTwist::new().unwrap();
    let z = vec![Scalar::zero(); 8];
    assert!(t.check_conditions(&Supercharge5d::new(z.clone(), z.clone()).unwrap()).unwrap());
    let n = null_spinor(t.data());
    assert!(t.data().pairing(&n, &n).is_zero());
    let q = Supercharge5d::new(n.clone(), z.clone()).unwrap();
    assert!(t.check_conditions(&q).unwrap());
    assert_eq!(t.orbit_invariant(&q).unwrap().rank, RankData::Single(1));
    let mut e = z;
    e[0] = Scalar::one();
    if !t.data().pairing(&e, &e).is_zero() {
        assert!(!t.check_conditions(&Supercharge5d::new(e.clone(), vec![Scalar::zero(); 8]).unwrap()).unwrap());
    }
}

#[test]
fn spin_action_preserves_the_form() {
    let t = FiveDTwist::new().unwrap();
    let mut rng = sub_rng(DEFAULT_SEED, "spin7");
    let c = &t.data().form;
    for _ in 0..5 {
        let g = Spin7Action::random(&mut rng, 6);
        assert_eq!(&(&g.spin.g.transpose() * c) * &g.spin.g, c.clone());
        let n = random_null_spinor(t.data(), &mut rng);
        let q = g.act(&Supercharge5d::new(n.clone(), n.iter().map(|x| x * &Scalar::from_int(2)).collect()).unwrap());
        assert!(t.check_conditions(&q).unwrap());
        assert_eq!(t.orbit_invariant(&q).unwrap().rank, RankData::Single(1));
    }
}
