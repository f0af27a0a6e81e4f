//! Exact-rational parameter grids.
//!
//! A grid `start:end:count` is `count` points strictly inside `(start, end)`:
//! `start + i·(end - start)/(count + 1)` for `i = 1..=count`.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{format_rational, parse_rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Grid {
    pub start: BigRational,
    pub end: BigRational,
    pub count: usize,
}

impl Grid {
    pub fn new(start: BigRational, end: BigRational, count: usize) -> Result<Self> {
        if start >= end {
            return Err(Error::Parse(format!(
                "grid start {} must be below end {}",
                format_rational(&start),
                format_rational(&end)
            )));
        }
        Ok(Grid { start, end, count })
    }

    pub fn points(&self) -> Vec<BigRational> {
        let step = (&self.end - &self.start) / BigInt::from(self.count + 1);
        (1..=self.count)
            .map(|i| &self.start + &step * BigInt::from(i))
            .collect()
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, end, count] = parts[..] else {
            return Err(Error::Parse(format!("expected start:end:count, got {s:?}")));
        };
        let count = count
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad grid count in {s:?}")))?;
        Grid::new(parse_rational(start)?, parse_rational(end)?, count)
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}",
            format_rational(&self.start),
            format_rational(&self.end),
            self.count
        )
    }
}

impl From<Grid> for String {
    fn from(g: Grid) -> String {
        g.to_string()
    }
}

impl TryFrom<String> for Grid {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ratio;

    #[test]
    fn open_interval_points() {
        let g: Grid = "-1.45:-0.55:2".parse().unwrap();
        assert_eq!(g.points(), vec![ratio(-115, 100), ratio(-85, 100)]);
        let g: Grid = "-1.499:-0.501:40".parse().unwrap();
        let pts = g.points();
        assert_eq!(pts.len(), 40);
        assert!(pts[0] > ratio(-1499, 1000) && pts[39] < ratio(-501, 1000));
    }

    #[test]
    fn rejects_bad_grids() {
        for bad in ["1:0:3", "0:1", "0:1:x", "a:1:2", "0:1:2:3"] {
            assert!(bad.parse::<Grid>().is_err(), "{bad}");
        }
    }

    #[test]
    fn round_trips_through_string() {
        let g: Grid = "-0.499:3:40".parse().unwrap();
        assert_eq!(g.to_string(), "-499/1000:3:40");
        assert_eq!(g.to_string().parse::<Grid>().unwrap(), g);
    }
}
