use innerform::measures::{
    gamma, gamma_transitive_check, selfdual_constant, vol_k, FieldCase, GammaConstant, LocalParams,
};
use innerform::ratio::{pow_q, q, qi, Q};
use innerform::samples::{compositions, refinements};
use num_traits::One;

#[test]
fn real_split_gl3_by_hand() {
    // π^{6/4} Γ(1/2)^3 / (Γ(1/2)Γ(1)Γ(3/2)) with Γ(1/2) = π^{1/2}, Γ(3/2) = π^{1/2}/2
    let g = gamma(FieldCase::RealSplit, &[1, 1, 1], None).unwrap();
    assert_eq!(
        g,
        GammaConstant::Archimedean {
            coeff: qi(2),
            pi_half_exp: 4
        }
    );
    // (2,1): π^{4/4} Γ(1/2)Γ(1)Γ(1/2) / (Γ(1/2)Γ(1)Γ(3/2)) = 2π
    assert_eq!(
        gamma(FieldCase::RealSplit, &[2, 1], None).unwrap(),
        GammaConstant::Archimedean {
            coeff: qi(2),
            pi_half_exp: 2
        }
    );
}

#[test]
fn complex_and_quaternion_gl2() {
    assert_eq!(
        gamma(FieldCase::Complex, &[1, 1], None).unwrap(),
        GammaConstant::Archimedean {
            coeff: qi(2),
            pi_half_exp: 2
        }
    );
    assert_eq!(
        gamma(FieldCase::RealQuaternion, &[1, 1], None).unwrap(),
        GammaConstant::Archimedean {
            coeff: q(1, 6),
            pi_half_exp: 4
        }
    );
}

#[test]
fn nonarch_minimal_parabolic_closed_form() {
    // γ(B) = (1 − q^{-d})^m / Π_{i=1}^{m}(1 − q^{-id})
    for (qq, d) in [(2u64, 1u32), (3, 2), (5, 1), (4, 3)] {
        for m in 1..=6u32 {
            let x = qi(qq as i64);
            let mut num = Q::one();
            for i in 1..=i64::from(m) {
                num *= qi(1) - pow_q(&x, -i * i64::from(d));
            }
            let den = pow_q(&(qi(1) - pow_q(&x, -i64::from(d))), i64::from(m));
            let g = gamma(FieldCase::NonArch, &vec![1; m as usize], Some(LocalParams { q: qq, d })).unwrap();
            let mi = i64::from(m);
            assert_eq!(
                g,
                GammaConstant::NonArchimedean {
                    value: den / num,
                    disc_quarter_exp: mi * mi - mi
                }
            );
        }
    }
}

#[test]
fn full_parabolic_is_trivial() {
    for case in FieldCase::ALL {
        let p = (!case.is_archimedean()).then_some(LocalParams { q: 7, d: 2 });
        for m in 1..=6 {
            assert_eq!(gamma(case, &[m], p).unwrap(), GammaConstant::one(case));
        }
    }
}

#[test]
fn transitivity_for_all_nested_pairs() {
    for case in FieldCase::ALL {
        let p = (!case.is_archimedean()).then_some(LocalParams { q: 9, d: 2 });
        for m in 1..=6 {
            for outer in compositions(m) {
                for inner in refinements(&outer) {
                    assert!(gamma_transitive_check(case, &outer, &inner, p).unwrap());
                }
            }
        }
    }
}

#[test]
fn vol_k_small_values() {
    let v = vol_k(LocalParams { q: 2, d: 1 }, 2);
    // (1 − 1/2)(1 − 1/4) = 3/8
    assert_eq!(v.rational(), &q(3, 8));
    assert_eq!(v.symbol_exp(), -8);
    assert_eq!(selfdual_constant(FieldCase::Complex, 3).rational(), &qi(512));
}

#[test]
fn bad_compositions_are_rejected() {
    assert_eq!(gamma(FieldCase::RealSplit, &[], None).unwrap_err().code(), "invalid-composition");
    assert_eq!(gamma(FieldCase::RealSplit, &[2, 0], None).unwrap_err().code(), "invalid-composition");
    assert!(gamma_transitive_check(FieldCase::Complex, &[2], &[vec![1]], None).is_err());
}
