//! Evaluation and coefficient generation for `C_n^(λ)`.
//!
//! Two exact coefficient routes exist. The x-basis list comes from unrolling
//! the three-term recurrence and is valid for every rational λ. The t-basis
//! list (`t = (1 - x)/2`) holds the terminating `2F1(-n, n+2λ; λ+1/2; t)`
//! series; it stays nonzero at the trivial parameters where `C_n^(λ) ≡ 0`
//! and so carries the non-trivial zeros there, but it is singular when
//! `λ + 1/2` is a nonpositive integer reached by the series.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::params::{format_rational, rational_to_f64, ratio, Params};

/// `C_n^(λ)(x)` by forward recurrence from `C_0 = 1`, `C_1 = 2λx`:
/// `k C_k = 2(k+λ-1) x C_{k-1} - (k+2λ-2) C_{k-2}`.
///
/// Returns exactly `0` at the trivial parameters, where floating cancellation
/// would otherwise leave rounding residue.
pub fn eval_recurrence(p: &Params, x: f64) -> f64 {
    if p.is_trivial() {
        return 0.0;
    }
    eval_recurrence_f64(p.n(), p.lambda_f64(), x)
}

pub(crate) fn eval_recurrence_f64(n: usize, lambda: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    let mut cur = 2.0 * lambda * x;
    if n == 0 {
        return prev;
    }
    for k in 2..=n {
        let kf = k as f64;
        let next = (2.0 * (kf + lambda - 1.0) * x * cur - (kf + 2.0 * lambda - 2.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact-rational counterpart of [`eval_recurrence`].
pub fn eval_recurrence_exact(p: &Params, x: &BigRational) -> BigRational {
    let lambda = p.lambda();
    let two = BigRational::from_integer(2.into());
    let mut prev = BigRational::one();
    let mut cur = &two * lambda * x;
    for k in 2..=p.n() {
        let kq = BigRational::from_integer(k.into());
        let a = &two * (&kq + lambda - BigRational::one()) * x;
        let b = &kq + &two * lambda - &two;
        let next = (a * &cur - b * &prev) / &kq;
        prev = cur;
        cur = next;
    }
    cur
}

/// Value and partial derivatives of `C_n^(λ)(x)` in `x` and `λ`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct Jet {
    v: f64,
    dx: f64,
    dl: f64,
    dxdl: f64,
}

fn recurrence_jet(n: usize, lambda: f64, x: f64) -> Jet {
    let mut prev = Jet {
        v: 1.0,
        ..Jet::default()
    };
    let mut cur = Jet {
        v: 2.0 * lambda * x,
        dx: 2.0 * lambda,
        dl: 2.0 * x,
        dxdl: 2.0,
    };
    if n == 0 {
        return prev;
    }
    for k in 2..=n {
        let kf = k as f64;
        // C_k = (A C_{k-1} - B C_{k-2}) / k with A = 2(k+λ-1)x, B = k+2λ-2
        let a = 2.0 * (kf + lambda - 1.0) * x;
        let a_x = 2.0 * (kf + lambda - 1.0);
        let a_l = 2.0 * x;
        let b = kf + 2.0 * lambda - 2.0;
        let next = Jet {
            v: (a * cur.v - b * prev.v) / kf,
            dx: (a_x * cur.v + a * cur.dx - b * prev.dx) / kf,
            dl: (a_l * cur.v + a * cur.dl - 2.0 * prev.v - b * prev.dl) / kf,
            dxdl: (2.0 * cur.v + a_x * cur.dl + a_l * cur.dx + a * cur.dxdl
                - 2.0 * prev.dx
                - b * prev.dxdl)
                / kf,
        };
        prev = cur;
        cur = next;
    }
    cur
}

/// `(C_n^(λ)(x), d/dx C_n^(λ)(x))`.
pub fn eval_with_derivative(p: &Params, x: f64) -> (f64, f64) {
    let j = recurrence_jet(p.n(), p.lambda_f64(), x);
    (j.v, j.dx)
}

/// A floating evaluator whose zero set is the non-trivial zero set of
/// `C_n^(λ)`: the polynomial itself, or `∂C_n/∂λ` at a trivial λ.
///
/// At a trivial λ the parameter is a simple zero of `λ ↦ C_n^(λ)(x)`, so the
/// λ-derivative is the limit polynomial, proportional to the normalized
/// t-basis series.
#[derive(Debug, Clone, Copy)]
pub struct NonTrivialEval {
    n: usize,
    lambda: f64,
    trivial: bool,
}

impl NonTrivialEval {
    pub fn new(p: &Params) -> Self {
        NonTrivialEval {
            n: p.n(),
            lambda: p.lambda_f64(),
            trivial: p.is_trivial(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn value(&self, x: f64) -> f64 {
        if self.trivial {
            recurrence_jet(self.n, self.lambda, x).dl
        } else {
            eval_recurrence_f64(self.n, self.lambda, x)
        }
    }

    pub fn value_and_derivative(&self, x: f64) -> (f64, f64) {
        let j = recurrence_jet(self.n, self.lambda, x);
        if self.trivial {
            (j.dl, j.dxdl)
        } else {
            (j.v, j.dx)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Powers of `x`.
    X,
    /// Powers of `t = (1 - x)/2`.
    T,
}

/// Exact coefficient list, `coeffs[k]` multiplying `var^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalPoly {
    pub basis: Basis,
    pub coeffs: Vec<BigRational>,
    /// Set for the renormalized `2F1` form, where `coeffs[0] == 1`.
    pub normalized: bool,
}

impl RationalPoly {
    fn trimmed(basis: Basis, mut coeffs: Vec<BigRational>, normalized: bool) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly {
            basis,
            coeffs,
            normalized,
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exact Horner evaluation in the polynomial's own variable.
    pub fn eval_exact(&self, var: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * var + c)
    }

    /// Exact evaluation at a point given in `x`, converting to `t` if needed.
    pub fn eval_exact_at_x(&self, x: &BigRational) -> BigRational {
        match self.basis {
            Basis::X => self.eval_exact(x),
            Basis::T => self.eval_exact(&((BigRational::one() - x) / BigInt::from(2))),
        }
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    /// Floating Horner evaluation in the polynomial's own variable.
    pub fn eval_f64(&self, var: f64) -> f64 {
        horner(&self.to_f64_coeffs(), var)
    }

    /// Largest coefficient magnitude.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| rational_to_f64(&c.abs()))
            .fold(0.0, f64::max)
    }
}

pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// x-basis coefficients of `C_n^(λ)` by exact unrolling of the recurrence.
pub fn coeffs_x(p: &Params) -> Result<RationalPoly> {
    let lambda = p.lambda();
    let two = BigRational::from_integer(2.into());
    let mut prev: Vec<BigRational> = vec![BigRational::one()];
    let mut cur: Vec<BigRational> = vec![BigRational::zero(), &two * lambda];
    for k in 2..=p.n() {
        let kq = BigRational::from_integer(k.into());
        let a = &two * (&kq + lambda - BigRational::one());
        let b = &kq + &two * lambda - &two;
        let mut next = vec![BigRational::zero(); k + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += &a * c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= &b * c;
        }
        for c in next.iter_mut() {
            *c /= &kq;
        }
        prev = cur;
        cur = next;
    }
    let poly = RationalPoly::trimmed(Basis::X, cur, false);
    if poly.is_zero() {
        return Err(Error::TrivialParameter {
            n: p.n(),
            lambda: format_rational(lambda),
        });
    }
    Ok(poly)
}

/// `λ + 1/2` hits a nonpositive integer within reach of the degree-n series.
pub fn t_basis_is_singular(p: &Params) -> bool {
    let c = p.lambda() + ratio(1, 2);
    c.is_integer() && !c.is_positive() && (-c.to_integer()) < BigInt::from(p.n())
}

/// t-basis coefficients `a_k = (-n)_k (n+2λ)_k / ((λ+1/2)_k k!)` of the
/// terminating `2F1(-n, n+2λ; λ+1/2; t)` series.
pub fn coeffs_t(p: &Params) -> Result<RationalPoly> {
    if t_basis_is_singular(p) {
        return Err(Error::SingularHypergeometricParameter {
            n: p.n(),
            c: format_rational(&(p.lambda() + ratio(1, 2))),
        });
    }
    let n = BigRational::from_integer(p.n().into());
    let b = p.n_plus_two_lambda();
    let c = p.lambda() + ratio(1, 2);
    let mut coeffs = Vec::with_capacity(p.n() + 1);
    let mut a = BigRational::one();
    coeffs.push(a.clone());
    for k in 0..p.n() {
        let kq = BigRational::from_integer(k.into());
        a = a * (&kq - &n) * (&b + &kq) / ((&c + &kq) * (&kq + BigRational::one()));
        coeffs.push(a.clone());
    }
    Ok(RationalPoly::trimmed(Basis::T, coeffs, true))
}

/// Generalized binomial `binom(n+2λ-1, n) = (2λ)_n / n!`, so that
/// `C_n^(λ)(x) = prefactor · 2F1(-n, n+2λ; λ+1/2; (1-x)/2)`.
pub fn prefactor(p: &Params) -> BigRational {
    let two_lambda = p.lambda() * BigInt::from(2);
    (0..p.n()).fold(BigRational::one(), |acc, k| {
        let kq = BigRational::from_integer(k.into());
        acc * (&two_lambda + &kq) / (kq + BigRational::one())
    })
}
