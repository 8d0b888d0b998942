use crate::algebra::{BigRat, Poly, RatFun};

/// The grammar pieces of a northbound word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Piece {
    /// Optional U-turn.
    U,
    /// A single L-piece.
    LSingle,
    /// Any run of L-pieces.
    LStar,
    /// Vertical run.
    I,
    /// Optional terminal hook.
    UPrime,
}

impl Piece {
    pub const ALL: [Piece; 5] = [Piece::U, Piece::LSingle, Piece::LStar, Piece::I, Piece::UPrime];

    pub fn name(self) -> &'static str {
        match self {
            Piece::U => "U",
            Piece::LSingle => "L",
            Piece::LStar => "L*",
            Piece::I => "I",
            Piece::UPrime => "U'",
        }
    }
}

fn rf(num: &[i64], den: &[i64]) -> RatFun {
    RatFun::from_ints(num, den).expect("constant denominators are nonzero")
}

pub fn piece_gf(piece: Piece) -> RatFun {
    match piece {
        // 1 + t/(1 - t^2)
        Piece::U => &RatFun::one() + &rf(&[0, 1], &[1, 0, -1]),
        // t^2/(1 - t)
        Piece::LSingle => rf(&[0, 0, 1], &[1, -1]),
        // 1/(1 - L)
        Piece::LStar => (&RatFun::one() - &piece_gf(Piece::LSingle))
            .recip()
            .expect("1 - t^2/(1-t) is nonzero"),
        Piece::I => rf(&[1], &[1, -1]),
        // 1 + t^4/(1 - t^2)
        Piece::UPrime => &RatFun::one() + &rf(&[0, 0, 0, 0, 1], &[1, 0, -1]),
    }
}

/// Generating function of the northbound words: the product of the four
/// piece gfs.
pub fn northbound_gf() -> RatFun {
    [Piece::U, Piece::LStar, Piece::I, Piece::UPrime]
        .into_iter()
        .map(piece_gf)
        .fold(RatFun::one(), |acc, g| &acc * &g)
}

/// Generating function of all walks in `{0,1} x Z`: northbound plus
/// southbound, minus the two self-mirror walks `ε` and `r`.
pub fn full_gf() -> RatFun {
    let twice = northbound_gf().scale(&BigRat::from_integer(2.into()));
    &twice - &RatFun::from_poly(Poly::from_ints(&[1, 1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigRat> {
        v.iter().map(|&c| BigRat::from_integer(c.into())).collect()
    }

    #[test]
    fn pieces() {
        assert_eq!(piece_gf(Piece::U), rf(&[1, 1, -1], &[1, 0, -1]));
        assert_eq!(piece_gf(Piece::LStar), rf(&[1, -1], &[1, -1, -1]));
        assert_eq!(piece_gf(Piece::UPrime), rf(&[1, 0, -1, 0, 1], &[1, 0, -1]));
        assert_eq!(piece_gf(Piece::I), rf(&[1], &[1, -1]));
    }

    #[test]
    fn northbound_product_form() {
        let num = &Poly::from_ints(&[1, 1, -1]) * &Poly::from_ints(&[1, 0, -1, 0, 1]);
        let one_minus_t2 = Poly::from_ints(&[1, 0, -1]);
        let den = &(&one_minus_t2 * &one_minus_t2) * &Poly::from_ints(&[1, -1, -1]);
        assert_eq!(northbound_gf(), RatFun::normalize(num, den).unwrap());
        let s = northbound_gf().series(2).unwrap();
        assert_eq!(s.coeffs(), ints(&[1, 2, 3]).as_slice());
    }

    #[test]
    fn full_gf_canonical_form() {
        let g = full_gf();
        assert_eq!(g.num(), &Poly::from_ints(&[1, 2, 0, -1, -1, 0, 0, 1]));
        assert_eq!(g.den(), &Poly::from_ints(&[1, -1, -3, 2, 3, -1, -1]));
        let s = g.series(7).unwrap();
        assert_eq!(s.coeffs(), ints(&[1, 3, 6, 12, 20, 36, 58, 100]).as_slice());
    }
}
