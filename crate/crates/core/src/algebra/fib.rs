use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Fibonacci numbers with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let got: Vec<BigInt> = (0..=10).map(fibonacci).collect();
        let want: Vec<BigInt> = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn cassini_identity() {
        for n in 1..=50u64 {
            let lhs = fibonacci(n + 1) * fibonacci(n - 1) - fibonacci(n).pow(2);
            let rhs = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}
