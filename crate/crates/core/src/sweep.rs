//! λ-sweeps of the two largest zeros for a few degrees, written as CSV plus a
//! gnuplot script. With degrees 8 and 9 over `(-3/2, 0)` the table shows the
//! largest zeros crossing each other and the line `x = 1` at `λ = -1/2`.

use num::{BigInt, BigRational, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::format::fmt_sig15;
use crate::params::{format_rational, is_trivial_lambda, rational_to_f64, ratio, Params};
use crate::zeros::zeros;

/// Exceptional parameters (`-1/2` and trivial values) are moved up by this.
pub fn perturbation() -> BigRational {
    BigRational::new(1.into(), BigInt::from(10).pow(9))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    /// The λ actually evaluated (after any perturbation).
    #[serde(serialize_with = "ser_rational")]
    pub lambda: BigRational,
    /// `x_{1,n}, x_{2,n}` for each degree of the table, in order.
    pub values: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn ser_rational<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepTable {
    pub n_list: Vec<usize>,
    pub rows: Vec<SweepRow>,
}

/// `steps - 1` interior points `min + i (max - min)/steps` of `(min, max)`.
pub fn sweep_grid(min: &BigRational, max: &BigRational, steps: usize) -> Result<Vec<BigRational>> {
    if steps < 2 {
        return Err(Error::Domain(format!("sweep needs steps >= 2, got {steps}")));
    }
    if min >= max {
        return Err(Error::Domain(format!(
            "empty sweep range ({}, {})",
            format_rational(min),
            format_rational(max)
        )));
    }
    if *min < ratio(-3, 2) {
        return Err(Error::Domain(format!(
            "sweep range must lie in (-3/2, inf), got min {}",
            format_rational(min)
        )));
    }
    let h = (max - min) / BigInt::from(steps);
    Ok((1..steps).map(|i| min + &h * BigInt::from(i)).collect())
}

fn row(n_list: &[usize], requested: &BigRational) -> Result<SweepRow> {
    let exceptional =
        *requested == ratio(-1, 2) || n_list.iter().any(|&n| is_trivial_lambda(n, requested));
    let (lambda, note) = if exceptional {
        let moved = requested + perturbation();
        let note = format!(
            "lambda = {} is exceptional; evaluated at {} + 1e-9",
            format_rational(requested),
            format_rational(requested)
        );
        (moved, Some(note))
    } else {
        (requested.clone(), None)
    };
    let mut values = Vec::with_capacity(2 * n_list.len());
    for &n in n_list {
        let z = zeros(&Params::new(n, lambda.clone())?)?;
        values.push(z.zeros[0]);
        values.push(z.zeros[1]);
    }
    Ok(SweepRow { lambda, values, note })
}

impl SweepTable {
    /// Table at the given λ values, in the given order.
    pub fn at(n_list: &[usize], lambdas: &[BigRational], exec: Exec) -> Result<Self> {
        if n_list.is_empty() || n_list.iter().any(|&n| n < 2) {
            return Err(Error::Domain("sweep degrees must be >= 2".into()));
        }
        if let Some(l) = lambdas.iter().find(|l| **l <= ratio(-3, 2)) {
            return Err(Error::Domain(format!(
                "sweep needs lambda > -3/2, got {}",
                format_rational(l)
            )));
        }
        let rows = exec
            .map(lambdas, |l| row(n_list, l))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        Ok(SweepTable {
            n_list: n_list.to_vec(),
            rows,
        })
    }

    pub fn range(n_list: &[usize], min: &BigRational, max: &BigRational, steps: usize, exec: Exec) -> Result<Self> {
        SweepTable::at(n_list, &sweep_grid(min, max, steps)?, exec)
    }

    pub fn header(&self) -> String {
        let mut cols = vec!["lambda".to_string()];
        for n in &self.n_list {
            cols.push(format!("x1_n{n}"));
            cols.push(format!("x2_n{n}"));
        }
        cols.push("one".into());
        cols.join(",")
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header();
        out.push('\n');
        for r in &self.rows {
            out.push_str(&fmt_sig15(rational_to_f64(&r.lambda)));
            for v in &r.values {
                out.push(',');
                out.push_str(&fmt_sig15(*v));
            }
            out.push_str(",1\n");
        }
        out
    }

    /// A gnuplot script plotting every column of `csv_path` against λ.
    pub fn gnuplot_script(&self, csv_path: &str) -> String {
        let mut s = String::new();
        s.push_str("set datafile separator ','\n");
        s.push_str("set key autotitle columnhead\n");
        s.push_str("set xlabel 'lambda'\n");
        s.push_str("set ylabel 'x'\n");
        let ns: Vec<String> = self.n_list.iter().map(|n| n.to_string()).collect();
        s.push_str(&format!("set title 'Largest zeros, n = {}'\n", ns.join(", ")));
        let mut plots = Vec::new();
        for (k, _) in self.n_list.iter().enumerate() {
            plots.push(format!("'{csv_path}' using 1:{} with lines lw 2", 2 + 2 * k));
            plots.push(format!("'{csv_path}' using 1:{} with lines dt 2", 3 + 2 * k));
        }
        plots.push(format!(
            "'{csv_path}' using 1:{} with lines lc rgb 'black'",
            2 + 2 * self.n_list.len()
        ));
        s.push_str(&format!("plot {}\n", plots.join(", \\\n     ")));
        s
    }

    /// Row indices `i` where `x_{1,a} - x_{1,b}` changes sign between rows
    /// `i` and `i + 1`, for the degrees at positions `a`, `b` of `n_list`.
    pub fn crossings(&self, a: usize, b: usize) -> Vec<usize> {
        let d: Vec<f64> = self
            .rows
            .iter()
            .map(|r| r.values[2 * a] - r.values[2 * b])
            .collect();
        sign_changes(&d)
    }

    /// Row indices where `x_{1,n} - 1` changes sign, for the degree at
    /// position `a` of `n_list`.
    pub fn crossings_with_one(&self, a: usize) -> Vec<usize> {
        let d: Vec<f64> = self.rows.iter().map(|r| r.values[2 * a] - 1.0).collect();
        sign_changes(&d)
    }

    /// Index of the row whose λ is nearest to `target`.
    pub fn nearest(&self, target: &BigRational) -> Option<usize> {
        self.rows
            .iter()
            .enumerate()
            .min_by(|(_, p), (_, q)| {
                let dp = (&p.lambda - target).abs();
                let dq = (&q.lambda - target).abs();
                dp.cmp(&dq)
            })
            .map(|(i, _)| i)
    }

    /// Per row, whether consecutive-degree pairs `(n, n+1)` of the table
    /// satisfy the ordering of their regime:
    /// `1 > x_{1,n+1} > x_{1,n} > x_{2,n+1} > x_{2,n}` for `λ > -1/2` and
    /// `x_{1,n} > x_{1,n+1} > 1 > x_{2,n+1} > x_{2,n}` for `λ < -1/2`.
    pub fn row_orderings(&self) -> Vec<bool> {
        self.rows
            .iter()
            .map(|r| {
                self.n_list.windows(2).enumerate().all(|(k, w)| {
                    if w[1] != w[0] + 1 {
                        return true;
                    }
                    let (x1n, x2n) = (r.values[2 * k], r.values[2 * k + 1]);
                    let (x1m, x2m) = (r.values[2 * k + 2], r.values[2 * k + 3]);
                    if r.lambda > ratio(-1, 2) {
                        1.0 > x1m && x1m > x1n && x1n > x2m && x2m > x2n
                    } else {
                        x1n > x1m && x1m > 1.0 && 1.0 > x2m && x2m > x2n
                    }
                })
            })
            .collect()
    }

    pub fn notes(&self) -> Vec<&str> {
        self.rows.iter().filter_map(|r| r.note.as_deref()).collect()
    }
}

fn sign_changes(d: &[f64]) -> Vec<usize> {
    d.windows(2)
        .enumerate()
        .filter(|(_, w)| (w[0] > 0.0) != (w[1] > 0.0))
        .map(|(i, _)| i)
        .collect()
}
