//! Enumerate, guess, validate, bound: rational generating functions for
//! wider strips and the growth-rate bounds their denominators give.

use num_bigint::BigInt;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::algebra::{smallest_positive_root, BigRat, RatFun, RootInterval};
use crate::enumerate::{count_saws_with, EnumConfig};
use crate::error::{Error, Result};
use crate::guess::{guess_auto, GuessResult};
use crate::json::{int_strings, rat_string};
use crate::lattice::StripSpec;

/// Counting convention recorded in pipeline output.
pub const ANCHOR: &str = "origin";

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub holdout: usize,
    /// Bound on the number of longest walks enumerated per strip.
    pub walk_cap: u128,
    /// Upper limit on terms when the training length is chosen
    /// automatically.
    pub max_terms: usize,
    pub workers: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            holdout: 3,
            walk_cap: crate::enumerate::DEFAULT_WALK_CAP,
            max_terms: 40,
            workers: EnumConfig::default().workers,
        }
    }
}

impl PipelineConfig {
    fn enum_config(&self) -> EnumConfig {
        EnumConfig {
            workers: self.workers,
            cap: Some(self.walk_cap),
            ..EnumConfig::default()
        }
    }
}

/// A validated conjecture for one strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripConjecture {
    pub strip: StripSpec,
    /// Every enumerated count, training and fresh.
    pub counts: Vec<BigInt>,
    pub guess: GuessResult,
    /// Enumerated terms past the guesser's input that the gf reproduced.
    pub fresh_terms: usize,
}

impl Serialize for StripConjecture {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("StripConjecture", 9)?;
        st.serialize_field("strip", &self.strip)?;
        st.serialize_field("anchor", ANCHOR)?;
        st.serialize_field("counts", &int_strings(&self.counts))?;
        st.serialize_field("gf", &self.guess.gf)?;
        st.serialize_field("num_deg", &self.guess.num_deg)?;
        st.serialize_field("den_deg", &self.guess.den_deg)?;
        st.serialize_field("terms_used", &self.guess.terms_used)?;
        st.serialize_field("validated_terms", &self.guess.validated_terms)?;
        st.serialize_field("fresh_terms", &self.fresh_terms)?;
        st.end()
    }
}

fn conjecture_from_counts(
    strip: StripSpec,
    counts: Vec<BigInt>,
    n_train: usize,
    holdout: usize,
) -> Result<Option<StripConjecture>> {
    let Some(guess) = guess_auto(&counts[..n_train], holdout)? else {
        return Ok(None);
    };
    let series = guess.gf.series(counts.len() - 1)?;
    let fresh_ok = counts[n_train..]
        .iter()
        .zip(&series.coeffs()[n_train..])
        .all(|(c, s)| BigRat::from_integer(c.clone()) == *s);
    if !fresh_ok {
        return Ok(None);
    }
    Ok(Some(StripConjecture {
        strip,
        fresh_terms: counts.len() - n_train,
        counts,
        guess,
    }))
}

/// Enumerate `n_train + holdout` terms, guess from the first `n_train`
/// (holding out `holdout` of those), then demand the guess also predicts
/// the remaining `holdout` fresh terms. `Ok(None)` is "no fit".
pub fn conjecture_strip_gf(
    strip: &StripSpec,
    n_train: usize,
    holdout: usize,
    cfg: &PipelineConfig,
) -> Result<Option<StripConjecture>> {
    if n_train < 8 {
        return Err(Error::InvalidArgument("n_train must be at least 8".into()));
    }
    if holdout < 2 {
        return Err(Error::InvalidArgument("holdout must be at least 2".into()));
    }
    let n_max = n_train + holdout - 1;
    let counts = count_saws_with(strip, n_max, &cfg.enum_config())?;
    conjecture_from_counts(*strip, counts, n_train, holdout)
}

/// The longest count list (at most `cfg.max_terms` terms) whose final
/// walk count stays under the cap.
pub fn counts_under_cap(strip: &StripSpec, cfg: &PipelineConfig) -> Result<Vec<BigInt>> {
    let ec = cfg.enum_config();
    let mut best = None;
    for n in 0..cfg.max_terms {
        match count_saws_with(strip, n, &ec) {
            Ok(c) => best = Some(c),
            Err(Error::TooManyWalks { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    best.ok_or(Error::TooManyWalks { cap: cfg.walk_cap })
}

/// [`conjecture_strip_gf`] with the training length chosen as large as
/// the walk cap allows.
pub fn conjecture_strip_gf_auto(strip: &StripSpec, cfg: &PipelineConfig) -> Result<Option<StripConjecture>> {
    let counts = counts_under_cap(strip, cfg)?;
    let holdout = cfg.holdout.max(2);
    let n_train = counts.len().saturating_sub(holdout);
    if n_train < 8 {
        return Err(Error::TooManyWalks { cap: cfg.walk_cap });
    }
    conjecture_from_counts(*strip, counts, n_train, holdout)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub strip: StripSpec,
    pub gf: RatFun,
    /// Encloses the smallest positive root of the reduced denominator.
    pub rho: RootInterval,
    /// `[1/rho.hi, 1/rho.lo]`: encloses the growth rate of the counts.
    pub mu_lo: BigRat,
    pub mu_hi: BigRat,
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("BoundReport", 4)?;
        st.serialize_field("strip", &self.strip)?;
        st.serialize_field("gf", &self.gf)?;
        st.serialize_field("rho", &[rat_string(&self.rho.lo), rat_string(&self.rho.hi)])?;
        st.serialize_field("mu", &[rat_string(&self.mu_lo), rat_string(&self.mu_hi)])?;
        st.end()
    }
}

/// Growth-rate enclosure from the smallest positive denominator root.
pub fn connective_bound(strip: &StripSpec, gf: &RatFun, tol: &BigRat) -> Result<BoundReport> {
    if gf.den().is_constant() {
        return Err(Error::NoGrowthSingularity);
    }
    let rho = smallest_positive_root(gf.den(), tol).map_err(|e| match e {
        Error::NoRoot => Error::NoGrowthSingularity,
        other => other,
    })?;
    Ok(BoundReport {
        strip: *strip,
        gf: gf.clone(),
        mu_lo: rho.hi.recip(),
        mu_hi: rho.lo.recip(),
        rho,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MuStatus {
    Bounded(Box<BoundReport>),
    /// No validated rational fit from the available terms.
    Unconjectured { terms: usize },
    Failed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuEntry {
    pub strip: StripSpec,
    pub status: MuStatus,
}

impl Serialize for MuEntry {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match &self.status {
            MuStatus::Bounded(b) => {
                let mut st = ser.serialize_struct("MuEntry", 5)?;
                st.serialize_field("strip", &b.strip)?;
                st.serialize_field("status", "bounded")?;
                st.serialize_field("gf", &b.gf)?;
                st.serialize_field("rho", &[rat_string(&b.rho.lo), rat_string(&b.rho.hi)])?;
                st.serialize_field("mu", &[rat_string(&b.mu_lo), rat_string(&b.mu_hi)])?;
                st.end()
            }
            MuStatus::Unconjectured { terms } => {
                let mut st = ser.serialize_struct("MuEntry", 3)?;
                st.serialize_field("strip", &self.strip)?;
                st.serialize_field("status", "unconjectured")?;
                st.serialize_field("terms", terms)?;
                st.end()
            }
            MuStatus::Failed(msg) => {
                let mut st = ser.serialize_struct("MuEntry", 3)?;
                st.serialize_field("strip", &self.strip)?;
                st.serialize_field("status", "failed")?;
                st.serialize_field("error", msg)?;
                st.end()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuTable {
    pub anchor: &'static str,
    pub entries: Vec<MuEntry>,
    /// Growth enclosures of bounded entries never decrease with width.
    pub monotone: bool,
}

impl MuTable {
    pub fn bounds(&self) -> impl Iterator<Item = &BoundReport> {
        self.entries.iter().filter_map(|e| match &e.status {
            MuStatus::Bounded(b) => Some(b.as_ref()),
            _ => None,
        })
    }
}

/// One entry per strip, sorted by width. `n_train = None` picks the
/// training length per strip from the walk cap. Per-strip failures are
/// recorded, not returned.
pub fn mu_table(strips: &[StripSpec], n_train: Option<usize>, tol: &BigRat, cfg: &PipelineConfig) -> Result<MuTable> {
    if strips.is_empty() {
        return Err(Error::InvalidArgument("no strips given".into()));
    }
    let mut strips = strips.to_vec();
    strips.sort_by_key(|s| (s.width(), s.xlo()));
    let entries: Vec<MuEntry> = strips
        .iter()
        .map(|strip| {
            let conj = match n_train {
                Some(n) => conjecture_strip_gf(strip, n, cfg.holdout.max(2), cfg),
                None => conjecture_strip_gf_auto(strip, cfg),
            };
            let status = match conj {
                Ok(Some(c)) => match connective_bound(strip, &c.guess.gf, tol) {
                    Ok(b) => MuStatus::Bounded(Box::new(b)),
                    Err(e) => MuStatus::Failed(e.to_string()),
                },
                Ok(None) => MuStatus::Unconjectured {
                    terms: n_train.map_or_else(
                        || counts_under_cap(strip, cfg).map_or(0, |c| c.len()),
                        |n| n + cfg.holdout.max(2),
                    ),
                },
                Err(e) => MuStatus::Failed(e.to_string()),
            };
            MuEntry { strip: *strip, status }
        })
        .collect();
    let table = MuTable {
        anchor: ANCHOR,
        monotone: true,
        entries,
    };
    let bounds: Vec<&BoundReport> = table.bounds().collect();
    let monotone = bounds.windows(2).all(|w| w[0].mu_lo <= w[1].mu_hi);
    Ok(MuTable { monotone, ..table })
}
