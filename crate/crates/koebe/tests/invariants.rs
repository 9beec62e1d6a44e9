//! Full-range invariant sweeps tying the modules together: pullback vs
//! closed forms, parity structure, exact divisibility, boundary minima of
//! certified members, and the kernel identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use koebe::arith::consts::atan_ball;
use koebe::families::{egervary_szasz_cosine_sum, egervary_szasz_eval, fejer_kernel};
use koebe::{
    certify_univalence, delta_n, eval_direct, min_distance, modulus_sq_theorem2, pnew_coeffs,
    pullback_tn, strip_zero_root, sturm_count, suffridge_coeffs, suffridge_value,
    typically_real_check, upper_bound_pn, CertifiedReal, Dyadic, SturmInterval,
};

const P: u32 = 128;

fn tb(v: f64) -> CertifiedReal {
    CertifiedReal::from_dyadic(Dyadic::from_f64(v), P)
}

#[test]
fn pullback_matches_boundary_modulus() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=20u32 {
        let t = pullback_tn(n, P).unwrap();
        let p = pnew_coeffs(n, P).unwrap();
        for _ in 0..64 {
            let xv: f64 = rng.gen_range(0.02..4.0);
            let x = tb(xv);
            let den = CertifiedReal::one(P).add(&x.sqr()).pow(t.denom_power).mul(&t.scale);
            let pulled = t.numerator.eval_real(&x).div(&den).unwrap();
            let angle = atan_ball(&x).mul_i64(2);
            let closed = modulus_sq_theorem2(n, &angle).unwrap();
            let direct = eval_direct(&p, &angle).abs_sq();
            assert!(pulled.overlaps(&closed), "thm2 route at N={n}, x={xv}");
            assert!(pulled.overlaps(&direct), "direct route at N={n}, x={xv}");
        }
    }
}

#[test]
fn parity_structure_across_degrees() {
    for n in 1..=51u32 {
        let t = pullback_tn(n, P).unwrap();
        assert!(t.numerator.degree() <= 2 * (n as usize - 1).max(0));
        for k in (1..=t.numerator.degree()).step_by(2) {
            assert!(t.numerator.coeff(k).is_exact_zero(), "T odd slot {k} at N={n}");
        }
        if n >= 2 {
            let d = delta_n(&t);
            for k in (0..=d.degree()).step_by(2) {
                assert!(d.coeff(k).is_exact_zero(), "Δ even slot {k} at N={n}");
            }
        }
    }
}

#[test]
fn division_by_one_plus_x2_is_exact_for_all_degrees() {
    // W = Q·Q̄ computed with the (1+ix) factor kept; dividing by (1+y)
    // must leave a remainder enclosing zero and reproduce T.
    for n in 1..=51u32 {
        let t = pullback_tn(n, P).unwrap();
        let w = long_way_w(n, P);
        let wc = w.coeffs();
        let mut carry = CertifiedReal::zero(P);
        let mut quotient = vec![CertifiedReal::zero(P); wc.len().saturating_sub(1)];
        for k in (1..wc.len()).rev() {
            let qk = wc[k].sub(&carry);
            quotient[k - 1] = qk.clone();
            carry = qk;
        }
        let remainder = wc[0].sub(&carry);
        assert!(remainder.contains_dyadic(&Dyadic::zero()), "remainder at N={n}");
        for (m, qc) in quotient.iter().enumerate() {
            assert!(qc.mul_pow2(2).overlaps(&t.numerator.coeff(2 * m)), "slot {m} at N={n}");
        }
    }
}

/// W(y) built from the untruncated sum Q = Σ a_k (1+ix)^k (1-ix)^(N-k).
fn long_way_w(n: u32, prec: u32) -> koebe::RealPolynomial {
    use koebe::CertifiedComplex;
    let coeffs = pnew_coeffs(n, prec).unwrap();
    let deg = n as usize;
    // (1±ix)^j by repeated multiplication in complex balls (exact values)
    let one = CertifiedComplex::new(CertifiedReal::one(prec), CertifiedReal::zero(prec));
    let iplus = CertifiedComplex::new(CertifiedReal::zero(prec), CertifiedReal::one(prec));
    let mut pow_plus: Vec<Vec<CertifiedComplex>> = vec![vec![one.clone()]];
    let mut pow_minus: Vec<Vec<CertifiedComplex>> = vec![vec![one.clone()]];
    for j in 1..=deg {
        let prev = &pow_plus[j - 1];
        let mut next = vec![CertifiedComplex::zero(prec); j + 1];
        for (m, c) in prev.iter().enumerate() {
            next[m] = next[m].add(c);
            next[m + 1] = next[m + 1].add(&c.mul(&iplus));
        }
        pow_plus.push(next);
        let prev = &pow_minus[j - 1];
        let mut next = vec![CertifiedComplex::zero(prec); j + 1];
        for (m, c) in prev.iter().enumerate() {
            next[m] = next[m].add(c);
            next[m + 1] = next[m + 1].add(&c.mul(&iplus).neg());
        }
        pow_minus.push(next);
    }
    let mut q = vec![CertifiedComplex::zero(prec); deg + 1];
    for k in 1..=deg {
        let a = coeffs.coeff(k);
        // convolve (1+ix)^k with (1-ix)^(N-k)
        for (ma, ca) in pow_plus[k].iter().enumerate() {
            for (mb, cb) in pow_minus[deg - k].iter().enumerate() {
                q[ma + mb] = q[ma + mb].add(&ca.mul(cb).scale(&a));
            }
        }
    }
    // Q(x)·Q(-x) via parity split: A² - y·B²
    let a: Vec<CertifiedComplex> = q.iter().step_by(2).cloned().collect();
    let b: Vec<CertifiedComplex> = q.iter().skip(1).step_by(2).cloned().collect();
    let conv = |u: &[CertifiedComplex], v: &[CertifiedComplex]| -> Vec<CertifiedComplex> {
        if u.is_empty() || v.is_empty() {
            return Vec::new();
        }
        let mut out = vec![CertifiedComplex::zero(prec); u.len() + v.len() - 1];
        for (i, x) in u.iter().enumerate() {
            for (j, y) in v.iter().enumerate() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
        out
    };
    let a2 = conv(&a, &a);
    let b2 = conv(&b, &b);
    let mut w = a2;
    for (j, c) in b2.iter().enumerate() {
        while w.len() <= j + 1 {
            w.push(CertifiedComplex::zero(prec));
        }
        w[j + 1] = w[j + 1].sub(c);
    }
    koebe::RealPolynomial::new(w.iter().map(|c| c.re.clone()).collect())
}

#[test]
fn certificate_reproduced_at_doubled_precision() {
    for n in [6u32, 17, 33] {
        let cert = certify_univalence(n, 8192).unwrap();
        assert!(cert.is_certified());
        let p = cert.precision_used;
        // rebuild the pipeline at exactly 2p and recount
        let t = pullback_tn(n, 2 * p).unwrap();
        let (s, _) = strip_zero_root(&delta_n(&t));
        assert_eq!(sturm_count(&s, &SturmInterval::PositiveAxis), Some(0), "N={n} at 2p");
    }
}

#[test]
fn certified_members_attain_the_bound_at_minus_one() {
    let tol = koebe::boundary::default_refine_tol(P);
    for n in 2..=10u32 {
        let cert = certify_univalence(n, 4096).unwrap();
        assert!(cert.is_certified(), "N={n}");
        let p = pnew_coeffs(n, P).unwrap();
        let r = min_distance(&p, 512, &tol).unwrap();
        assert!(r.attained_at_minus1, "minimum of P_{n} at t=π");
        assert!(r.distance.overlaps(&upper_bound_pn(n, P)), "distance vs bound at N={n}");
    }
}

#[test]
fn odd_suffridge_minima_move_off_minus_one() {
    let tol = koebe::boundary::default_refine_tol(P);
    for n in [3u32, 5] {
        let s = suffridge_coeffs(n, 1, P).unwrap();
        let r = min_distance(&s, 4096, &tol).unwrap();
        assert!(!r.attained_at_minus1, "S_{n} minimum location");
        assert!(r.distance.certified_lt(&suffridge_value(n, P)), "min < |S_{n}(-1)|");
    }
    // even degrees attain the minimum at -1
    for n in [2u32, 4, 6] {
        let s = suffridge_coeffs(n, 1, P).unwrap();
        let r = min_distance(&s, 4096, &tol).unwrap();
        assert!(r.attained_at_minus1, "S_{n} minimum location");
        assert!(r.distance.overlaps(&suffridge_value(n, P)));
    }
}

#[test]
fn dimitrov_refutation_for_degrees_three_to_six() {
    let tol = koebe::boundary::default_refine_tol(P);
    for n in 3..=6u32 {
        let upper = upper_bound_pn(n, P);
        let s = suffridge_coeffs(n, 1, P).unwrap();
        let min = min_distance(&s, 4096, &tol).unwrap();
        assert!(
            upper.certified_lt(&min.distance),
            "new member beats the Suffridge minimum at N={n}"
        );
    }
}

#[test]
fn suffridge_formula_consistent_with_evaluation_up_to_51() {
    for n in 1..=51u32 {
        let s = suffridge_coeffs(n, 1, P).unwrap();
        let direct = s.eval_dyadic(&Dyadic::from_i64(-1)).abs_enclosure();
        assert!(direct.overlaps(&suffridge_value(n, P)), "N={n}");
    }
}

#[test]
fn upper_bound_decreases_to_one_quarter_at_n_1000() {
    let mut prev = upper_bound_pn(1, 96);
    for n in 2..=1000u32 {
        let cur = upper_bound_pn(n, 96);
        assert!(cur.certified_lt(&prev), "monotone at N={n}");
        prev = cur;
    }
    assert!(prev.lower().to_f64() > 0.25);
    assert!(prev.upper().to_f64() < 0.2505);
}

#[test]
fn typically_real_members_up_to_51() {
    for n in 1..=51u32 {
        let p = pnew_coeffs(n, P).unwrap();
        let check = typically_real_check(&p, 64);
        assert!(check.holds, "N={n}");
    }
}

#[test]
fn kernels_nonnegative_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [1u32, 2, 3, 5, 8, 13, 20] {
        for _ in 0..256 {
            let t = tb(rng.gen_range(0.0..std::f64::consts::TAU));
            let k = fejer_kernel(n, &t);
            assert!(!k.lower().is_negative(), "Fejér kernel at N={n}");
        }
    }
}

#[test]
fn egervary_szasz_dual_representations_random_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in 1..=20u32 {
        for _ in 0..256 {
            let t = tb(rng.gen_range(0.0..std::f64::consts::TAU));
            let sq = egervary_szasz_eval(n, &t);
            let cs = egervary_szasz_cosine_sum(n, &t).unwrap();
            assert!(sq.overlaps(&cs), "representations at N={n}");
            assert!(!sq.lower().is_negative(), "nonnegativity at N={n}");
        }
    }
}

#[test]
fn first_coefficient_is_one_for_all_families() {
    use koebe::families::{alexander_coeffs, fejer_coeffs};
    for n in 1..=51u32 {
        for p in [
            pnew_coeffs(n, P).unwrap(),
            fejer_coeffs(n, P).unwrap(),
            alexander_coeffs(n, P).unwrap(),
            suffridge_coeffs(n, 1, P).unwrap(),
        ] {
            let c1 = p.coeff(1);
            assert!(c1.is_exact() && c1.to_f64() == 1.0, "a_1 at N={n}");
        }
    }
}
