//! Certified isolation of the smallest positive real root.
//!
//! Works on the square-free part of the input with a Sturm sequence, so
//! roots of even multiplicity are located as reliably as simple ones. All
//! arithmetic is exact; the returned interval endpoints are dyadic.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::{BigRat, Poly};
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` known to contain a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRat,
    pub hi: BigRat,
}

impl RootInterval {
    pub fn width(&self) -> BigRat {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// Square-free part of `p` with any factor `t^k` removed.
pub fn squarefree_part(p: &Poly) -> Poly {
    let g = p.gcd(&p.derivative());
    let sf = if g.is_constant() { p.clone() } else { p.exact_div(&g) };
    let v = sf.valuation().unwrap_or(0);
    sf.shift_down(v)
}

struct Sturm {
    chain: Vec<Poly>,
}

impl Sturm {
    fn new(p: &Poly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        Sturm { chain }
    }

    fn variations(&self, x: &BigRat) -> usize {
        let mut last: Option<bool> = None;
        let mut count = 0;
        for q in &self.chain {
            let v = q.eval(x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if last.is_some_and(|l| l != pos) {
                count += 1;
            }
            last = Some(pos);
        }
        count
    }

    /// Distinct roots in `(a, b]`; `a` must not be a root.
    fn count(&self, a: &BigRat, b: &BigRat) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Smallest real root of `p` in `(0, 1]`, enclosed in an interval of
/// width at most `tol`.
///
/// On return the square-free part of `p` has opposite (or zero) signs at
/// the two endpoints and exactly one root in `(lo, hi]`.
pub fn smallest_positive_root(p: &Poly, tol: &BigRat) -> Result<RootInterval> {
    if !tol.is_positive() {
        return Err(Error::BadTolerance);
    }
    if p.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial".into()));
    }
    let sf = squarefree_part(p);
    if sf.is_constant() {
        return Err(Error::NoRoot);
    }
    let sturm = Sturm::new(&sf);
    let mut lo = BigRat::zero();
    let mut hi = BigRat::one();
    if sturm.count(&lo, &hi) == 0 {
        return Err(Error::NoRoot);
    }
    let two = BigRat::from_integer(2.into());
    loop {
        let single = sturm.count(&lo, &hi) == 1;
        if single && sf.eval(&hi).is_zero() {
            return Ok(RootInterval { lo: hi.clone(), hi });
        }
        if single && lo.is_positive() && (&hi - &lo).cmp(tol) != Ordering::Greater {
            return Ok(RootInterval { lo, hi });
        }
        let mid = (&lo + &hi) / &two;
        if sturm.count(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Sign of `p` at `x` as -1, 0 or 1.
pub fn sign_at(p: &Poly, x: &BigRat) -> i8 {
    let v = p.eval(x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn tol12() -> BigRat {
        BigRat::new(BigInt::one(), BigInt::from(10u64.pow(12)))
    }

    fn to_f64(x: &BigRat) -> f64 {
        x.numer().to_string().parse::<f64>().unwrap() / x.denom().to_string().parse::<f64>().unwrap()
    }

    #[test]
    fn golden_section_root() {
        let p = Poly::from_ints(&[1, -1, -1]);
        let r = smallest_positive_root(&p, &tol12()).unwrap();
        assert!(r.width() <= tol12());
        let exact = (5f64.sqrt() - 1.0) / 2.0;
        assert!(to_f64(&r.lo) <= exact + 1e-15 && exact - 1e-15 <= to_f64(&r.hi));
        assert!(sign_at(&p, &r.lo) * sign_at(&p, &r.hi) <= 0);
    }

    #[test]
    fn exact_root_at_one() {
        let r = smallest_positive_root(&Poly::from_ints(&[1, -1]), &tol12()).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.lo, BigRat::one());
    }

    #[test]
    fn no_real_roots() {
        assert_eq!(
            smallest_positive_root(&Poly::from_ints(&[1, 0, 1]), &tol12()),
            Err(Error::NoRoot)
        );
        assert_eq!(
            smallest_positive_root(&Poly::from_ints(&[3]), &tol12()),
            Err(Error::NoRoot)
        );
        // roots only outside (0, 1]
        assert_eq!(
            smallest_positive_root(&Poly::from_ints(&[-2, 1]), &tol12()),
            Err(Error::NoRoot)
        );
    }

    #[test]
    fn double_root_is_found() {
        // (1 - 2t^2)^2 (1 + t): double root at 1/sqrt(2)
        let f = Poly::from_ints(&[1, 0, -2]);
        let p = &(&f * &f) * &Poly::from_ints(&[1, 1]);
        let r = smallest_positive_root(&p, &tol12()).unwrap();
        let exact = 0.5f64.sqrt();
        assert!((to_f64(&r.lo) - exact).abs() < 1e-11);
    }

    #[test]
    fn dyadic_root_is_exact() {
        // (1 - 2t)(1 - t): root 1/2 hit by the first bisection step
        let p = Poly::from_ints(&[1, -3, 2]);
        let r = smallest_positive_root(&p, &tol12()).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.lo, BigRat::new(1.into(), 2.into()));
    }

    #[test]
    fn bad_tolerance() {
        assert_eq!(
            smallest_positive_root(&Poly::from_ints(&[1, -1]), &BigRat::zero()),
            Err(Error::BadTolerance)
        );
    }
}
