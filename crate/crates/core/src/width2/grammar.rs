//! The `U L* I U'` grammar for walks in the strip `{0, 1} x Z`.
//!
//! A northbound word is, in order:
//!
//! * an optional U-turn `d^i h u^i` (`i >= 0`),
//! * any number of L-pieces `u^i h` (`i >= 1`),
//! * a vertical run `u^k` (`k >= 0`),
//! * an optional terminal hook `u^(i+1) h d^i` (`i >= 1`),
//!
//! where each horizontal letter `h` is forced by the current column: `r`
//! from column 0 and `l` from column 1.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::lattice::{Step, StepWord};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GrammarDecomposition {
    /// U-turn depth.
    #[serde(rename = "u")]
    pub u_turn: Option<u32>,
    /// Vertical length of each L-piece.
    #[serde(rename = "l")]
    pub l_parts: Vec<u32>,
    #[serde(rename = "i")]
    pub i_len: u32,
    /// Depth of the terminal hook.
    #[serde(rename = "uprime")]
    pub u_prime: Option<u32>,
}

fn horizontal(column: u8) -> Step {
    if column == 0 {
        Step::R
    } else {
        Step::L
    }
}

impl GrammarDecomposition {
    /// Number of steps in the realized word.
    pub fn len(&self) -> usize {
        let u = self.u_turn.map_or(0, |i| 2 * i as usize + 1);
        let l: usize = self.l_parts.iter().map(|&i| i as usize + 1).sum();
        let up = self.u_prime.map_or(0, |i| 2 * i as usize + 2);
        u + l + self.i_len as usize + up
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether every part respects its lower bound.
    pub fn is_well_formed(&self) -> bool {
        self.l_parts.iter().all(|&i| i >= 1) && self.u_prime.is_none_or(|i| i >= 1)
    }

    pub fn realize(&self) -> StepWord {
        let mut w = StepWord::empty();
        let mut column = 0u8;
        if let Some(i) = self.u_turn {
            w.extend_repeat(Step::D, i as usize);
            w.push(horizontal(column));
            w.extend_repeat(Step::U, i as usize);
            column ^= 1;
        }
        for &i in &self.l_parts {
            w.extend_repeat(Step::U, i as usize);
            w.push(horizontal(column));
            column ^= 1;
        }
        w.extend_repeat(Step::U, self.i_len as usize);
        if let Some(i) = self.u_prime {
            w.extend_repeat(Step::U, i as usize + 1);
            w.push(horizontal(column));
            w.extend_repeat(Step::D, i as usize);
        }
        w
    }
}

/// All ways to write `total` as an ordered sum of L-piece lengths
/// (each piece contributes `i + 1 >= 2` steps).
fn l_compositions(total: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    for len in 2..=total {
        prefix.push(len as u32 - 1);
        l_compositions(total - len, prefix, out);
        prefix.pop();
    }
}

/// Every parameter tuple whose word has exactly `n` steps.
pub fn decompositions(n: usize) -> Vec<GrammarDecomposition> {
    let mut out = Vec::new();
    let u_options = std::iter::once(None).chain((0..).take_while(|&i| 2 * i < n).map(Some));
    for u_turn in u_options {
        let after_u = n - u_turn.map_or(0, |i| 2 * i + 1);
        let up_options =
            std::iter::once(None).chain((1..).take_while(|&i| 2 * i + 1 < after_u).map(Some));
        for u_prime in up_options {
            let middle = after_u - u_prime.map_or(0, |i| 2 * i + 2);
            for l_total in 0..=middle {
                let mut parts = Vec::new();
                l_compositions(l_total, &mut Vec::new(), &mut parts);
                for l_parts in parts {
                    out.push(GrammarDecomposition {
                        u_turn: u_turn.map(|i| i as u32),
                        l_parts,
                        i_len: (middle - l_total) as u32,
                        u_prime: u_prime.map(|i| i as u32),
                    });
                }
            }
        }
    }
    out
}

/// The northbound words of length `n`.
pub fn generate_northbound(n: usize) -> BTreeSet<StepWord> {
    decompositions(n).iter().map(GrammarDecomposition::realize).collect()
}

fn run_length(steps: &[Step], from: usize, s: Step) -> usize {
    steps[from..].iter().take_while(|&&x| x == s).count()
}

/// Recover the decomposition of a northbound word, or `None`.
///
/// Deterministic left-to-right: the U-turn takes exactly as many `u` as it
/// had `d`; then each maximal `u`-run ending in the forced horizontal step
/// is an L-piece, unless a `d`-run follows it, in which case it is the
/// terminal hook and must end the word.
pub fn parse_northbound(w: &StepWord) -> Option<GrammarDecomposition> {
    let s = w.steps();
    let mut pos = 0;
    let mut column = 0u8;
    let mut dec = GrammarDecomposition::default();

    match s.first() {
        Some(Step::D) => {
            let i = run_length(s, 0, Step::D);
            pos = i;
            if s.get(pos) != Some(&horizontal(column)) {
                return None;
            }
            pos += 1;
            if run_length(s, pos, Step::U) < i {
                return None;
            }
            pos += i;
            column ^= 1;
            dec.u_turn = Some(i as u32);
        }
        Some(&h) if h == horizontal(column) => {
            pos = 1;
            column ^= 1;
            dec.u_turn = Some(0);
        }
        _ => {}
    }

    while pos < s.len() {
        let m = run_length(s, pos, Step::U);
        pos += m;
        if pos == s.len() {
            dec.i_len = m as u32;
            break;
        }
        if s[pos] != horizontal(column) {
            return None;
        }
        pos += 1;
        let j = run_length(s, pos, Step::D);
        if j > 0 {
            pos += j;
            if pos != s.len() || m < j + 1 {
                return None;
            }
            dec.i_len = (m - j - 1) as u32;
            dec.u_prime = Some(j as u32);
            break;
        }
        if m == 0 {
            return None;
        }
        dec.l_parts.push(m as u32);
        column ^= 1;
    }
    Some(dec)
}
