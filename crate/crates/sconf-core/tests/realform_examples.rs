use sconf_core::exactlinalg::{Matrix, Scalar, Subspace};
use sconf_core::realform::*;
use sconf_core::sample;
use sconf_core::twist::{canonical_rep_4d, FourDGroupElement};

fn unit(i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); 4];
    v[i] = Scalar::one();
    v
}

#[test]
fn presets_are_involutions_with_real_form_dimension() {
    let sl4 = traceless(4);
    for name in ["euclidean", "lorentzian", "split"] {
        let theta = Involution::preset(name).unwrap();
        let fixed = fixed_subalgebra(&theta, &sl4).unwrap();
        assert_eq!(fixed.real_dim, 15, "{name}");
    }
}

#[test]
fn split_fixed_locus_is_real_matrices() {
    let fixed = fixed_subalgebra(&Involution::split(), &traceless(4)).unwrap();
    for v in fixed.real.basis() {
        // imaginary coordinates vanish
        assert!(v.iter().skip(1).step_by(2).all(Scalar::is_zero));
    }
}

#[test]
fn linear_non_involution_rejected() {
    let m = Matrix::from_ints(&[&[2, 0], &[0, 1]]);
    assert_eq!(Involution::new(false, false, 1, m).unwrap_err(), RealFormError::NotInvolution);
    assert!(Involution::new(false, false, 3, Matrix::identity(2)).is_err());
}

#[test]
fn transpose_with_positive_sign_is_anti_homomorphism() {
    let theta = Involution::new(false, true, 1, Matrix::identity(3)).unwrap();
    assert!(theta.reverses_products());
    let theta = Involution::new(false, true, -1, Matrix::identity(3)).unwrap();
    assert!(!theta.reverses_products());
}

#[test]
fn euclidean_locus_on_closed_part() {
    let r = schur_realform_report(Signature::Euclidean).unwrap();
    // blocks diag(p, conj p) with the real part of the trace vanishing
    assert_eq!(r.z_real_dim, 7);
    assert!(!r.z_stable);
    assert_eq!(r.b_real_dim, 0);
    assert!(!r.matches_stated());
    assert_eq!(r.stated, (6, 0));
}

#[test]
fn euclidean_stated_set_is_not_fixed() {
    // a * I in the top-left block with a = i is not fixed by the involution
    let theta = Involution::euclidean();
    let mut x = Matrix::zeros(4, 4);
    x[(0, 0)] = Scalar::i();
    x[(1, 1)] = Scalar::i();
    x[(2, 2)] = -Scalar::i();
    x[(3, 3)] = -Scalar::i();
    assert_ne!(theta.apply(&x), x);
}

#[test]
fn non_stable_subspace_rejected_by_fixed_subalgebra() {
    let lower = Subspace::span(16, &[Matrix::unit(4, 4, 1, 0).to_vec()]);
    assert_eq!(fixed_subalgebra(&Involution::euclidean(), &lower).unwrap_err(), RealFormError::NotStable);
    assert_eq!(fixed_intersection(&Involution::euclidean(), &lower).unwrap().real_dim, 0);
}

#[test]
fn lorentzian_loci() {
    let r = schur_realform_report(Signature::Lorentzian).unwrap();
    assert_eq!((r.z_real_dim, r.b_real_dim), (7, 3));
    assert!(r.matches_stated());
}

#[test]
fn split_loci_and_translations() {
    let r = schur_realform_report(Signature::Split).unwrap();
    assert_eq!((r.z_real_dim, r.b_real_dim), (11, 7));
    assert!(r.z_stable && r.b_stable);
    assert_eq!(r.translations, (3, 2));
}

#[test]
fn signature_parsing() {
    assert_eq!(Signature::parse("4,0").unwrap(), Signature::Euclidean);
    assert_eq!(Signature::parse("(3, 1)").unwrap(), Signature::Lorentzian);
    assert_eq!(Signature::parse("2,2").unwrap(), Signature::Split);
    assert!(Signature::parse("1,3").is_err());
}

#[test]
fn kernel_fiber_examples() {
    let schur = sconf_core::centralizer::schur_supercharge();
    let p = kernel_fiber(&schur).unwrap();
    assert_eq!(p.plane, Subspace::span(4, &[unit(1), unit(3)]));
    assert_eq!(kernel_fiber(&canonical_rep_4d(4, 4, 0).unwrap()).unwrap().dim(), 0);
    assert_eq!(kernel_fiber(&canonical_rep_4d(3, 1, 1).unwrap()).unwrap_err(), RealFormError::NotChiral);
}

#[test]
fn kernel_fiber_equivariance() {
    let mut rng = sample::rng(11);
    let schur = sconf_core::centralizer::schur_supercharge();
    let base = kernel_fiber(&schur).unwrap();
    for _ in 0..20 {
        let g = FourDGroupElement::random(&mut rng, 2);
        let moved = kernel_fiber(&g.act(&schur)).unwrap();
        assert_eq!(moved.dim(), 2);
        assert_eq!(moved, base.act(&g.a.g).unwrap());
    }
}

#[test]
fn hermitian_labels() {
    let h = HermitianForm::split();
    let span = |a: Vec<Scalar>, b: Vec<Scalar>| GrassmannPoint::span(4, &[a, b]);
    assert_eq!(hermitian_orbit_label(&span(unit(0), unit(1)), &h).unwrap(), OrbitLabel::new(2, 0, 0));
    assert_eq!(hermitian_orbit_label(&span(unit(0), unit(2)), &h).unwrap(), OrbitLabel::new(1, 1, 0));
    let n13: Vec<Scalar> = [1, 0, 1, 0].map(Scalar::from_int).to_vec();
    let n24: Vec<Scalar> = [0, 1, 0, 1].map(Scalar::from_int).to_vec();
    assert_eq!(hermitian_orbit_label(&span(n13, n24), &h).unwrap(), OrbitLabel::new(0, 0, 2));
    let line = GrassmannPoint::span(4, &[unit(0)]);
    assert!(hermitian_orbit_label(&line, &h).is_err());
}

#[test]
fn all_six_labels_realized() {
    let h = HermitianForm::split();
    let planes = witness_planes();
    let labels: std::collections::BTreeSet<_> = planes.iter().map(|(l, _)| *l).collect();
    assert_eq!(labels.len(), 6);
    for (label, plane) in &planes {
        assert_eq!(hermitian_orbit_label(plane, &h).unwrap(), *label);
        assert_eq!(label.pos + label.neg + label.null, 2);
    }
}

#[test]
fn labels_invariant_under_basis_change_and_unitary_moves() {
    let h = HermitianForm::split();
    let mut rng = sample::rng(5);
    // U(2) x U(2) elements with rational entries preserve the split form
    let rot = Matrix::from_rows(vec![
        vec![Scalar::from_ratio(3, 5), Scalar::from_ratio(-4, 5)],
        vec![Scalar::from_ratio(4, 5), Scalar::from_ratio(3, 5)],
    ])
    .unwrap();
    let phase = Matrix::diagonal(&[Scalar::i(), Scalar::one()]);
    let g = Matrix::block_diag(&rot, &phase);
    assert_eq!(&(&g.adjoint() * &h.gram) * &g, h.gram);
    for (label, plane) in witness_planes() {
        for _ in 0..5 {
            let mix = sample::special_linear(&mut rng, 2, 4).g;
            let basis = plane.plane.basis_matrix();
            let mixed = &mix * &basis;
            let p = GrassmannPoint::span(4, &mixed.row_list());
            assert_eq!(hermitian_orbit_label(&p, &h).unwrap(), label);
        }
        assert_eq!(hermitian_orbit_label(&plane.act(&g).unwrap(), &h).unwrap(), label);
    }
}

#[test]
fn involution_json_round_trip() {
    let theta = Involution::lorentzian();
    let json = serde_json::to_string(&theta).unwrap();
    let back: Involution = serde_json::from_str(&json).unwrap();
    let back = back.finish().unwrap();
    assert_eq!(back.apply(&Matrix::unit(4, 4, 0, 2)), theta.apply(&Matrix::unit(4, 4, 0, 2)));
}
