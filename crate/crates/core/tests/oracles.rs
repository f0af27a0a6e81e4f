//! Independent exact-arithmetic oracles for the zero finder and the power sums.
//!
//! Every computed zero is widened into a rational bracket on which the exact
//! recurrence value changes sign. `n` disjoint sign-changing brackets for a
//! degree-`n` polynomial isolate all of its roots, whatever produced the seeds.

use gegenbauer_core::bounds::power_sums;
use gegenbauer_core::params::{rational_to_f64, ratio};
use gegenbauer_core::poly::eval_recurrence_exact;
use gegenbauer_core::{zeros, Params};
use num::{BigInt, BigRational, Signed, Zero};

const LAMBDAS: [(i64, i64); 7] = [(-7, 5), (-6, 5), (-3, 4), (-13, 25), (1, 2), (1, 1), (3, 1)];

fn q(f: f64) -> BigRational {
    BigRational::from_float(f).unwrap()
}

fn sign(p: &Params, x: &BigRational) -> i32 {
    let v = eval_recurrence_exact(p, x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Disjoint rational brackets, one per computed zero, each with an exact
/// sign change (or an exact root at an endpoint).
fn isolate(p: &Params, width: f64) -> Vec<(BigRational, BigRational)> {
    let z = zeros(p).unwrap();
    assert_eq!(z.len(), p.n(), "{p}: expected n real zeros");
    let brackets: Vec<_> = z
        .zeros
        .iter()
        .map(|&x| (q(x - width * x.abs().max(1.0)), q(x + width * x.abs().max(1.0))))
        .collect();
    // z.zeros is decreasing, so brackets[k+1] lies left of brackets[k].
    for w in brackets.windows(2) {
        assert!(w[1].1 < w[0].0, "{p}: brackets overlap");
    }
    for (lo, hi) in &brackets {
        let (a, b) = (sign(p, lo), sign(p, hi));
        assert!(a * b <= 0, "{p}: no sign change on [{}, {}]", rational_to_f64(lo), rational_to_f64(hi));
    }
    brackets
}

fn bisect(p: &Params, mut lo: BigRational, mut hi: BigRational, eps: &BigRational) -> BigRational {
    let s_lo = sign(p, &lo);
    if s_lo == 0 {
        return lo;
    }
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > *eps {
        let mid = (&lo + &hi) / &two;
        match sign(p, &mid) {
            0 => return mid,
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    (lo + hi) / two
}

#[test]
fn computed_zeros_are_isolated_exactly() {
    for n in 2..=12 {
        for (a, b) in LAMBDAS {
            let p = Params::new(n, ratio(a, b)).unwrap();
            if p.n_plus_two_lambda() <= BigRational::zero() {
                continue;
            }
            isolate(&p, 1e-11);
        }
    }
}

#[test]
fn power_sums_match_exact_reciprocal_root_sums() {
    let eps = BigRational::new(BigInt::from(1), BigInt::from(10).pow(30));
    for n in 3..=12 {
        for (a, b) in LAMBDAS {
            let p = Params::new(n, ratio(a, b)).unwrap();
            let Ok(exact) = power_sums(&p, 6) else { continue };
            let ts: Vec<BigRational> = isolate(&p, 1e-11)
                .into_iter()
                .map(|(lo, hi)| {
                    let x = bisect(&p, lo, hi, &eps);
                    (BigRational::from_integer(1.into()) - x) / BigInt::from(2)
                })
                .collect();
            for j in 1..=6i32 {
                let brute: BigRational = ts.iter().map(|t| t.pow(-j)).sum();
                let e = exact.get(j as usize).clone();
                let rel = rational_to_f64(&((&brute - &e) / &e)).abs();
                assert!(rel < 1e-20, "{p}: S_{j} rel deviation {rel:e}");
            }
        }
    }
}
