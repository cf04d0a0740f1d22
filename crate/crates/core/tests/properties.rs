//! Property-based invariants: exact arithmetic laws, the recurrence
//! identity, characteristic-value relations, root-set certificates, and
//! symmetry of the classified geometry.

use limzero::exactpoly::{rat, rational_to_f64, CPoint, RatPoly, Rational};
use limzero::harness::random_general_spec;
use limzero::limits::{classify, classification_scalars, distance_to, isolated_limits};
use limzero::recurrence::RecurrenceSpec;
use limzero::rootfind::{find_roots, RootFindOptions};
use limzero::spectra::spectral_point;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn poly_strategy(max_len: usize) -> impl Strategy<Value = RatPoly> {
    proptest::collection::vec(rational_strategy(), 0..=max_len)
        .prop_map(|coeffs| RatPoly::from_rationals(&coeffs))
}

fn nonzero_poly_strategy(max_len: usize) -> impl Strategy<Value = RatPoly> {
    poly_strategy(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn evaluation_is_a_ring_homomorphism(
        p in poly_strategy(6),
        q in poly_strategy(6),
        x in rational_strategy(),
    ) {
        let prod = p.mul(&q);
        prop_assert_eq!(
            prod.eval_rational(&x),
            p.eval_rational(&x) * q.eval_rational(&x)
        );
        let sum = p.add(&q);
        prop_assert_eq!(
            sum.eval_rational(&x),
            p.eval_rational(&x) + q.eval_rational(&x)
        );
    }

    #[test]
    fn exact_divide_inverts_mul(
        p in nonzero_poly_strategy(5),
        q in nonzero_poly_strategy(5),
    ) {
        prop_assert_eq!(p.mul(&q).exact_divide(&q).unwrap(), p);
    }

    #[test]
    fn resultant_vanishes_iff_gcd_nonconstant(
        p in nonzero_poly_strategy(5),
        q in nonzero_poly_strategy(5),
    ) {
        let res = p.resultant(&q).unwrap();
        let gcd = p.gcd(&q);
        let gcd_nonconstant = gcd.degree().is_some_and(|d| d >= 1);
        prop_assert_eq!(res.is_zero(), gcd_nonconstant);
    }

    #[test]
    fn complex_eval_agrees_with_rational_on_reals(
        p in poly_strategy(8),
        x in -30i64..=30,
    ) {
        let xr = rat(x, 1);
        let exact = rational_to_f64(&p.eval_rational(&xr));
        let prec = p.default_precision();
        let approx = p.eval_complex(CPoint::new(x as f64, 0.0), prec);
        prop_assert!((approx.re - exact).abs() <= 1e-11 * (1.0 + exact.abs()));
        prop_assert_eq!(approx.im, 0.0);
    }
}

fn spec_strategy() -> impl Strategy<Value = RecurrenceSpec> {
    (
        rational_strategy().prop_filter("a != 0", |r| !r.is_zero()),
        rational_strategy(),
        rational_strategy().prop_filter("c != 0", |r| !r.is_zero()),
        rational_strategy(),
        rational_strategy(),
        nonzero_poly_strategy(3),
        nonzero_poly_strategy(3),
    )
        .prop_map(|(a, b, c, d, e, w0, w1)| RecurrenceSpec::new(a, b, c, d, e, w0, w1))
}

proptest! {
    #[test]
    fn recurrence_identity_holds_exactly(spec in spec_strategy(), n in 2usize..=10) {
        let lhs = spec.nth_poly(n);
        let rhs = spec
            .a_poly()
            .mul(&spec.nth_poly(n - 1))
            .add(&spec.b_poly().mul(&spec.nth_poly(n - 2)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn vieta_pair_at_random_points(
        spec in spec_strategy(),
        re in -4.0f64..4.0,
        im in -4.0f64..4.0,
    ) {
        let sp = spectral_point(&spec, CPoint::new(re, im));
        let sum_err = (sp.lambda_plus + sp.lambda_minus - sp.a_val).norm();
        let prod_err = (sp.lambda_plus * sp.lambda_minus + sp.b_val).norm();
        prop_assert!(sum_err <= 1e-10 * (1.0 + sp.a_val.norm()));
        prop_assert!(prod_err <= 1e-10 * (1.0 + sp.b_val.norm()));
    }

    #[test]
    fn residual_conjugate_symmetry(
        spec in spec_strategy(),
        re in -4.0f64..4.0,
        im in -4.0f64..4.0,
    ) {
        let z = CPoint::new(re, im);
        let r1 = spectral_point(&spec, z).residual;
        let r2 = spectral_point(&spec, z.conj()).residual;
        prop_assert!((r1 - r2).abs() <= 1e-12 * (1.0 + r1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn roots_reconstruct_the_polynomial(p in nonzero_poly_strategy(7)) {
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        let roots = find_roots(&p, &RootFindOptions::default()).unwrap();
        prop_assume!(roots.converged);
        // multiply out lc * prod (z - r_i) and compare coefficient-wise
        let lc = rational_to_f64(p.leading_coeff().unwrap());
        let mut coeffs = vec![CPoint::new(lc, 0.0)];
        for &r in &roots.roots {
            let mut next = vec![CPoint::new(0.0, 0.0); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            coeffs = next;
        }
        let scale = rational_to_f64(&p.max_abs_coeff());
        for (k, c) in coeffs.iter().enumerate() {
            let expect = rational_to_f64(&p.coeff(k));
            prop_assert!(
                (c.re - expect).abs() <= 1e-6 * scale && c.im.abs() <= 1e-6 * scale,
                "coefficient {} of degree-{} reconstruction: {} vs {}",
                k,
                roots.roots.len(),
                c,
                expect
            );
        }
    }

    #[test]
    fn real_coefficients_give_conjugate_closed_roots(p in nonzero_poly_strategy(7)) {
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        let roots = find_roots(&p, &RootFindOptions::default()).unwrap();
        prop_assume!(roots.converged);
        for &r in &roots.roots {
            let mate = roots
                .roots
                .iter()
                .map(|&s| (s - r.conj()).norm())
                .fold(f64::INFINITY, f64::min);
            prop_assert!(mate <= 1e-6, "no conjugate for {r}");
        }
    }

    #[test]
    fn root_residual_certificates(p in nonzero_poly_strategy(7)) {
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        let roots = find_roots(&p, &RootFindOptions::default()).unwrap();
        prop_assume!(roots.converged);
        for &res in &roots.residuals {
            prop_assert!(res < 1e-8);
        }
    }
}

#[test]
fn rootfind_is_deterministic() {
    let spec = RecurrenceSpec::from_integers(4, 2, 16, 0, 0, &[1, 1], &[2, 6, 8]);
    let p = spec.nth_poly(9);
    let a = find_roots(&p, &RootFindOptions::default()).unwrap();
    let b = find_roots(&p, &RootFindOptions::default()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn classified_sets_are_conjugation_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let spec = random_general_spec(&mut rng);
        let (scalars, set) = classify(&spec).unwrap();
        // exact identity behind the branch scalar
        let (lead, mid, konst) = spec.delta_coeffs();
        assert_eq!(
            scalars.delta_delta,
            &mid * &mid - rat(4, 1) * &lead * &konst
        );
        for z in [
            CPoint::new(0.3, 0.7),
            CPoint::new(-1.1, 0.2),
            CPoint::new(2.0, -1.5),
        ] {
            let d1 = distance_to(&set, z);
            let d2 = distance_to(&set, z.conj());
            assert!((d1 - d2).abs() <= 1e-12 * (1.0 + d1), "asymmetry at {z}");
        }
        let iso = isolated_limits(&spec).unwrap();
        for l in &iso {
            assert!(
                iso.iter().any(|m| (m.z - l.z.conj()).norm() < 1e-6),
                "isolated multiset not conjugation-closed"
            );
        }
    }
}

#[test]
fn scalars_match_sign_conventions() {
    // B(x_A) != 0 for every general spec, so r and x_C exist iff B'(x_A) != 0
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let spec = random_general_spec(&mut rng);
        let scalars = classification_scalars(&spec);
        assert!(!scalars.b_at_xa.is_zero());
        assert_eq!(scalars.r.is_some(), !scalars.bprime_at_xa.is_zero());
        if let (Some(r), Some(x_c)) = (&scalars.r, &scalars.x_c) {
            assert_eq!(x_c, &(&scalars.x_a - rat(2, 1) * r));
            assert_eq!(r, &(&scalars.b_at_xa / &scalars.bprime_at_xa));
        }
        assert!(!scalars.delta_delta.is_negative() || !scalars.lead.is_zero());
    }
}
