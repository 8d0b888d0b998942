use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BigRat, Poly, Series};
use crate::error::{Error, Result};

/// A rational function `num / den` in canonical form.
///
/// Canonical means: `num` and `den` are coprime, both have integer
/// coefficients whose joint content is 1, and the lowest-degree nonzero
/// coefficient of `den` is positive. Zero is `0 / 1`. Two rational
/// functions are equal exactly when their canonical forms are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RatFun {
    /// Reduce `num / den` to canonical form.
    pub fn normalize(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        // Clear denominators, then strip the joint integer content.
        let lcm = num.denominator_lcm().lcm(&den.denominator_lcm());
        let lcm = BigRat::from_integer(lcm);
        let (num, den) = (num.scale(&lcm), den.scale(&lcm));
        let content = num.numerator_content().gcd(&den.numerator_content());
        let mut factor = BigRat::new(BigInt::one(), content);
        let low = den.valuation().expect("nonzero denominator");
        if den.coeffs()[low].is_negative() {
            factor = -factor;
        }
        Ok(RatFun {
            num: num.scale(&factor),
            den: den.scale(&factor),
        })
    }

    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(Poly::t())
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::normalize(p, Poly::one()).expect("unit denominator")
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::normalize(Poly::from_ints(num), Poly::from_ints(den))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Canonical integer coefficients of numerator and denominator.
    pub fn integer_parts(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        (
            self.num.to_bigints().expect("canonical form is integral"),
            self.den.to_bigints().expect("canonical form is integral"),
        )
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Self::normalize(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn arith(op: ArithOp, a: &RatFun, b: &RatFun) -> Result<Self> {
        match op {
            ArithOp::Add => Ok(a + b),
            ArithOp::Sub => Ok(a - b),
            ArithOp::Mul => Ok(a * b),
            ArithOp::Div => a.checked_div(b),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self::normalize(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    /// Maclaurin coefficients `c_0 ..= c_n`.
    ///
    /// Uses the linear recurrence `sum_j den_j c_{k-j} = num_k`, solved for
    /// `c_k` term by term.
    pub fn series(&self, n: usize) -> Result<Series> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::NoMaclaurin);
        }
        let den = self.den.coeffs();
        let mut c: Vec<BigRat> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.num.coeff(k);
            for (j, dj) in den.iter().enumerate().skip(1).take(k) {
                if !dj.is_zero() {
                    acc -= dj * &c[k - j];
                }
            }
            c.push(acc / &d0);
        }
        Ok(Series::new(c))
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::normalize(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFun::normalize(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        &self + &rhs
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        &self - &rhs
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}
