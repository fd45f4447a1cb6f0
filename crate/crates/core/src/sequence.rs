//! Integer sequences and the Jaco-type graphs they generate.
//!
//! For a sequence `a_1, a_2, ...` the Jaco-type graph `J_n` has the arc
//! `(u_i, u_j)` exactly when `i < j <= i + a_i`, truncated at `n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Arc, EnergyGraph};

/// Generator of non-negative integer sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSpec {
    /// `a_i = i`
    Natural,
    /// `a_i = f_i` with `f_1 = f_2 = 1`
    Fibonacci,
    /// `a_i = i mod k`, `k >= 1`
    Modulo(u64),
    /// `a_i = list[i - 1]`
    Explicit(Vec<u64>),
}

impl SequenceSpec {
    pub fn modulo(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::SequenceSyntax {
                spec: "mod:0".into(),
                reason: "modulus must be at least 1".into(),
            });
        }
        Ok(Self::Modulo(k))
    }

    /// Term `a_i`, `i >= 1`.
    pub fn term(&self, i: usize) -> Result<u64> {
        assert!(i >= 1, "sequence terms are 1-based");
        match self {
            Self::Natural => Ok(i as u64),
            Self::Fibonacci => fibonacci(i).ok_or(Error::TermOverflow(i)),
            Self::Modulo(k) => Ok(i as u64 % k),
            Self::Explicit(list) => list.get(i - 1).copied().ok_or(Error::TermOutOfRange {
                index: i,
                len: list.len(),
            }),
        }
    }

    /// `min(a_i, limit)`, saturating where the exact term would overflow.
    fn capped_term(&self, i: usize, limit: usize) -> Result<usize> {
        let term = match self {
            Self::Fibonacci => fibonacci(i).unwrap_or(u64::MAX),
            _ => self.term(i)?,
        };
        Ok(usize::try_from(term).map_or(limit, |t| t.min(limit)))
    }
}

fn fibonacci(i: usize) -> Option<u64> {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 2..i {
        let c = a.checked_add(b)?;
        a = b;
        b = c;
    }
    Some(if i <= 2 { 1 } else { b })
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Natural => f.write_str("s1"),
            Self::Fibonacci => f.write_str("fib"),
            Self::Modulo(k) => write!(f, "mod:{k}"),
            Self::Explicit(list) => {
                let terms: Vec<String> = list.iter().map(u64::to_string).collect();
                write!(f, "list:{}", terms.join(","))
            }
        }
    }
}

impl FromStr for SequenceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let syntax = |reason: &str| Error::SequenceSyntax {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        match s.trim() {
            "s1" => Ok(Self::Natural),
            "fib" => Ok(Self::Fibonacci),
            other => {
                if let Some(k) = other.strip_prefix("mod:") {
                    let k: u64 = k
                        .trim()
                        .parse()
                        .map_err(|_| syntax("modulus is not an integer"))?;
                    Self::modulo(k).map_err(|_| syntax("modulus must be at least 1"))
                } else if let Some(list) = other.strip_prefix("list:") {
                    list.split(',')
                        .map(|t| t.trim().parse::<u64>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map(Self::Explicit)
                        .map_err(|_| syntax("list terms must be non-negative integers"))
                } else {
                    Err(syntax("unknown sequence kind"))
                }
            }
        }
    }
}

/// Finite Jaco-type graph `J_n` of the sequence.
///
/// Explicit lists must supply `a_1..a_{n-1}`; `a_n` is never needed.
pub fn jaco_graph(spec: &SequenceSpec, n: usize) -> Result<EnergyGraph> {
    let mut arcs = Vec::new();
    for i in 1..n {
        let reach = spec.capped_term(i, n - i)?;
        arcs.extend((i + 1..=i + reach).map(|j| Arc::new(i, j)));
    }
    Ok(EnergyGraph::from_sorted_unchecked(n, arcs))
}

/// Jaco-type graph with a prescribed out-degree per vertex; arcs go to the
/// next `d` vertices, truncated at `n`.
pub fn graph_from_out_degrees(out_degrees: &[usize]) -> EnergyGraph {
    let n = out_degrees.len();
    let arcs = out_degrees
        .iter()
        .enumerate()
        .flat_map(|(slot, &d)| {
            let i = slot + 1;
            (i + 1..=(i + d).min(n)).map(move |j| Arc::new(i, j))
        })
        .collect();
    EnergyGraph::from_sorted_unchecked(n, arcs)
}
