//! Acceptance battery: one test per release criterion, named so the runner
//! output reads as a pass/fail line per criterion. Each test states its
//! tolerance inline; sampled checks use fixed seeds so reruns are
//! byte-identical.

use vbf_core::corpus::{
    self, remark27_f, remark27_field, remark27_finv, sec7_example1, sec7_example2, sec7_example3,
};
use vbf_core::diff::{
    ddt, differential_spectrum, differential_uniformity, is_weakly_delta, weak_uniformity,
};
use vbf_core::field::default_modulus;
use vbf_core::linear::{affine_cover_check, n_hat, n_histogram, v_space, walsh};
use vbf_core::sample::{for_each_permutation, random_vbf, rng_from_seed};
use vbf_core::theorems::{
    check_fact4_and_bounds, check_invariance, check_kasami, check_kyu07, check_noncoset,
    check_noncoset_power, check_quadratic_equiv, check_spectrum_lemma, demo_ccz_noninvariance,
    TransformKind, Verdict,
};
use vbf_core::vbf::{anf, anf_inverse, VBF};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn criterion_01_remark27_pair_interpolation_and_weak_uniformity() {
    let spec = remark27_field();
    let f = VBF::from_univariate(&remark27_f());
    let interpolated = f.inverse().expect("f permutes F_16").to_univariate(&spec).unwrap();
    assert_eq!(
        interpolated.coeffs(),
        remark27_finv().coeffs(),
        "interpolating f^-1 must reproduce the listed coefficients exactly"
    );
    assert!(weak_uniformity(&f).weakly_apn);
    let ri = weak_uniformity(&VBF::from_univariate(&remark27_finv()));
    assert!((3..=4).contains(&ri.min_image));
    assert_eq!(ri.min_image, 4);
    assert!(is_weakly_delta(&VBF::from_univariate(&remark27_finv()), 4).unwrap());
    assert!(!ri.weakly_apn);
    assert_eq!(ri.weak_delta_pow2, 4);
}

#[test]
fn criterion_02_sec7_corpus_profiles() {
    let cases = [(sec7_example1(), 0u32, 15u32), (sec7_example2(), 1, 15), (sec7_example3(), 1, 14)];
    for (i, (f, expected_n_hat, expected_n3)) in cases.into_iter().enumerate() {
        assert!(f.is_permutation(), "example {} must be a permutation", i + 1);
        assert!(weak_uniformity(&f).weakly_apn, "example {} must be weakly APN", i + 1);
        let p = n_histogram(&f);
        assert_eq!(p.n_hat, expected_n_hat, "example {} n_hat", i + 1);
        assert_eq!(
            p.n_hist.get(&3).copied().unwrap_or(0),
            expected_n3,
            "example {} n3",
            i + 1
        );
    }
}

#[test]
fn criterion_03_power_fixtures() {
    let m6 = default_modulus(6).unwrap();
    let x11 = VBF::power_function(11, &m6);
    let r = weak_uniformity(&x11);
    assert!(r.weakly_apn);
    assert!(r.min_image > 16);

    let x13 = VBF::power_function(13, &m6);
    let s = differential_spectrum(13, &m6);
    assert_eq!(s.get(0), 48);
    assert_eq!(s.get(4), 16);
    assert_eq!(s.omega().len(), 2, "only multiplicities 0 and 4 may occur");
    assert_eq!(s.image_size(), 16);
    assert_eq!(differential_uniformity(&x13), 4);
    // the 4-to-1 structure is the s=2 case of the Kasami derivative lemma
    let kasami = check_kasami(2, 6);
    assert_eq!(kasami.verdict, Verdict::Pass, "{:?}", kasami.witnesses);
}

#[test]
fn criterion_04_th_wapn_i_exhaustive_m3() {
    let mut violations = Vec::new();
    let mut antecedent = 0usize;
    let mut total = 0usize;
    for_each_permutation(3, |f| {
        total += 1;
        if n_hat(f) == 0 {
            antecedent += 1;
            if !weak_uniformity(f).weakly_apn {
                violations.push(f.table().to_vec());
            }
        }
    });
    assert_eq!(total, 40320);
    assert!(
        violations.is_empty(),
        "permutations with n_hat=0 that are not weakly APN: {violations:?}"
    );
    // the antecedent is empty at m=3: every 3-bit permutation has a
    // degree <= 2 component, hence n_hat >= 1 — recorded, not hidden
    assert_eq!(antecedent, 0);
}

#[test]
fn criterion_05_spectrum_lemma_all_m_to_8() {
    for m in 2..=8u32 {
        let r = check_spectrum_lemma(m);
        assert_eq!(r.verdict, Verdict::Pass, "m={m}: {:?}", r.witnesses);
    }
}

#[test]
fn criterion_06_kyu07_sweep_m3_to_8() {
    for m in 3..=8u32 {
        let r = check_kyu07(m);
        assert_eq!(r.verdict, Verdict::Pass, "m={m}: {:?}", r.witnesses);
    }
}

#[test]
fn criterion_07_noncoset_and_monomial() {
    // fixtures
    let f = corpus::corpus_lookup("remark27_f").unwrap().vbf;
    let r = check_noncoset(&f, "remark27_f");
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.witnesses);
    let m6 = default_modulus(6).unwrap();
    let r = check_noncoset_power(11, &m6);
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.witnesses);

    // 10^3 sampled functions: every weakly-APN-not-APN one must pass
    let mut rng = rng_from_seed(70);
    let mut hypothesis_hits = 0usize;
    for i in 0..1000usize {
        let f = if i % 2 == 0 {
            vbf_core::sample::random_permutation(4, &mut rng)
        } else {
            random_vbf(4, &mut rng)
        };
        let r = check_noncoset(&f, "sampled");
        if r.verdict != Verdict::Skipped {
            hypothesis_hits += 1;
        }
        assert_ne!(r.verdict, Verdict::Fail, "{:?}", r.witnesses);
    }
    assert!(hypothesis_hits > 0, "the sample must exercise the hypothesis");

    // every weakly-APN-not-APN power permutation, m <= 8: all images non-cosets
    let mut power_hits = 0usize;
    for m in 3..=8u32 {
        let spec = default_modulus(m).unwrap();
        let order = (1u64 << m) - 1;
        for d in 1..order {
            if gcd(d, order) != 1 {
                continue;
            }
            let r = check_noncoset_power(d, &spec);
            if r.verdict != Verdict::Skipped {
                power_hits += 1;
            }
            assert_ne!(r.verdict, Verdict::Fail, "m={m} d={d}: {:?}", r.witnesses);
        }
    }
    assert!(power_hits > 0, "the power sweep must exercise the hypothesis");
}

#[test]
fn criterion_08_fact4_bounds_sweep() {
    let r = check_fact4_and_bounds(1000, 80);
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.witnesses);
    assert!(r.scope.contains("1000/"), "must accept the full filtered sample: {}", r.scope);
}

#[test]
fn criterion_09_quadratic_equivalence() {
    let r = check_quadratic_equiv(10_000, 90);
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.witnesses);
}

#[test]
fn criterion_10_affine_cover() {
    for entry in corpus::corpus() {
        let f = &entry.vbf;
        for a in 1..f.len() as u16 {
            assert!(
                affine_cover_check(f, a).unwrap(),
                "cover mismatch for fixture {} at a={a}",
                entry.name
            );
        }
    }
    let mut rng = rng_from_seed(100);
    for _ in 0..1000 {
        let f = random_vbf(4, &mut rng);
        for a in 1..16 {
            assert!(affine_cover_check(&f, a).unwrap(), "cover mismatch for lut {:?} at a={a}", f.table());
        }
    }
}

#[test]
fn criterion_11_invariance_and_ccz() {
    for (i, entry) in corpus::corpus().into_iter().enumerate() {
        let seed = 110 + i as u64;
        let r = check_invariance(&entry.vbf, entry.name, TransformKind::Affine, 100, seed);
        assert_eq!(r.verdict, Verdict::Pass, "{}: {:?}", entry.name, r.witnesses);
        let r = check_invariance(&entry.vbf, entry.name, TransformKind::Ea, 100, seed + 1000);
        assert_eq!(r.verdict, Verdict::Pass, "{}: {:?}", entry.name, r.witnesses);
    }
    let r = demo_ccz_noninvariance();
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.witnesses);
}

#[test]
fn criterion_12_structural_suites() {
    // exhaustive over every Boolean function for m <= 4: Parseval and the
    // ANF round-trip
    for m in 1..=4u32 {
        let n = 1usize << m;
        for bits in 0..1u64 << n {
            let b = vbf_core::vbf::BoolFn::new(m, (0..n).map(|i| bits >> i & 1 == 1).collect())
                .unwrap();
            let w = walsh(&b);
            let parseval: i64 = w.values().iter().map(|&v| (v as i64) * (v as i64)).sum();
            assert_eq!(parseval, 1i64 << (2 * m));
            assert_eq!(anf_inverse(&anf(&b)), b);
        }
    }

    // vectorial invariants: corpus + every power map exhaustively at m <= 4,
    // then random functions, 250 per m for m in 5..=8
    let mut cases: Vec<VBF> = corpus::corpus().into_iter().map(|e| e.vbf).collect();
    for m in 1..=4u32 {
        cases.push(VBF::identity(m));
        if m >= 2 {
            let spec = default_modulus(m).unwrap();
            for d in 0..1u64 << m {
                cases.push(VBF::power_function(d, &spec));
            }
        }
    }
    let mut rng = rng_from_seed(120);
    for m in 1..=4u32 {
        for _ in 0..250 {
            cases.push(random_vbf(m, &mut rng));
        }
    }
    for m in 5..=8u32 {
        for _ in 0..250 {
            cases.push(random_vbf(m, &mut rng));
        }
    }
    for f in &cases {
        let n = f.len();
        let t = ddt(f);
        for a in 0..n as u16 {
            let row = t.row(a);
            assert_eq!(row.iter().sum::<u32>() as usize, n);
            if a == 0 {
                assert_eq!(row[0] as usize, n);
            } else {
                assert!(row.iter().all(|&c| c % 2 == 0));
            }
        }
        if f.m() >= 1 {
            let p = n_histogram(f);
            assert_eq!(p.n_hist.values().sum::<u32>() as usize, n - 1);
            // n_hat by direct counting against 2^t - 1 from the V_a spans
            let t_max = (1..n as u16).map(|a| v_space(f, a).unwrap().dim()).max().unwrap();
            assert_eq!(n_hat(f), (1u32 << t_max) - 1);
            assert_eq!(p.n_hat, n_hat(f));
        }
    }
}
