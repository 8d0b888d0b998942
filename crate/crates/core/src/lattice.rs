//! Step words, walks and strips on the square lattice.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

// Declared in letter order so that word ordering is string ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    D,
    L,
    R,
    U,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::U, Step::D, Step::L, Step::R];

    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::U => (0, 1),
            Step::D => (0, -1),
            Step::L => (-1, 0),
            Step::R => (1, 0),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::U => 'u',
            Step::D => 'd',
            Step::L => 'l',
            Step::R => 'r',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'u' => Ok(Step::U),
            'd' => Ok(Step::D),
            'l' => Ok(Step::L),
            'r' => Ok(Step::R),
            other => Err(Error::BadStep(other)),
        }
    }

    /// Reflection through the horizontal axis.
    pub fn mirrored(self) -> Self {
        match self {
            Step::U => Step::D,
            Step::D => Step::U,
            s => s,
        }
    }
}

/// A word over `{u, d, l, r}` coding a walk from the origin.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepWord(Vec<Step>);

impl StepWord {
    pub fn new(steps: Vec<Step>) -> Self {
        StepWord(steps)
    }

    pub fn empty() -> Self {
        StepWord(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, s: Step) {
        self.0.push(s);
    }

    pub fn extend_repeat(&mut self, s: Step, times: usize) {
        self.0.extend(std::iter::repeat_n(s, times));
    }
}

impl FromStr for StepWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars().map(Step::from_char).collect::<Result<Vec<_>>>().map(StepWord)
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl Serialize for StepWord {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

pub type Point = (i64, i64);

/// Lattice points visited by a step word, starting at the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Walk(Vec<[i64; 2]>);

impl Walk {
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.0.iter().map(|&[x, y]| (x, y))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The region `[xlo, xhi] x Z`. Always contains column 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(try_from = "[i64; 2]")]
pub struct StripSpec {
    xlo: i64,
    xhi: i64,
}

impl StripSpec {
    pub fn new(xlo: i64, xhi: i64) -> Result<Self> {
        if xlo > 0 || xhi < 0 {
            return Err(Error::OriginNotInStrip);
        }
        Ok(StripSpec { xlo, xhi })
    }

    /// The strip `[0, width - 1]` with the origin on its left boundary.
    pub fn of_width(width: u32) -> Result<Self> {
        if width == 0 {
            return Err(Error::InvalidArgument("strip width must be positive".into()));
        }
        Self::new(0, i64::from(width) - 1)
    }

    pub fn xlo(&self) -> i64 {
        self.xlo
    }

    pub fn xhi(&self) -> i64 {
        self.xhi
    }

    /// Number of columns.
    pub fn width(&self) -> u64 {
        (self.xhi - self.xlo) as u64 + 1
    }

    pub fn contains_column(&self, x: i64) -> bool {
        self.xlo <= x && x <= self.xhi
    }

    /// The strip reflected through the vertical axis.
    pub fn mirrored(&self) -> Self {
        StripSpec {
            xlo: -self.xhi,
            xhi: -self.xlo,
        }
    }
}

impl TryFrom<[i64; 2]> for StripSpec {
    type Error = Error;
    fn try_from([xlo, xhi]: [i64; 2]) -> Result<Self> {
        Self::new(xlo, xhi)
    }
}

impl Serialize for StripSpec {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        [self.xlo, self.xhi].serialize(ser)
    }
}

impl fmt::Display for StripSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.xlo, self.xhi)
    }
}

pub fn realize(w: &StepWord) -> Walk {
    let mut pts = Vec::with_capacity(w.len() + 1);
    let (mut x, mut y) = (0i64, 0i64);
    pts.push([x, y]);
    for s in w.steps() {
        let (dx, dy) = s.delta();
        x += dx;
        y += dy;
        pts.push([x, y]);
    }
    Walk(pts)
}

/// Whether `w` codes a self-avoiding walk that stays inside `strip`.
pub fn is_valid_saw(w: &StepWord, strip: &StripSpec) -> bool {
    let mut seen = HashSet::with_capacity(w.len() + 1);
    realize(w)
        .points()
        .all(|(x, y)| strip.contains_column(x) && seen.insert((x, y)))
}

pub fn mirror_x(w: &StepWord) -> StepWord {
    StepWord(w.steps().iter().map(|s| s.mirrored()).collect())
}
