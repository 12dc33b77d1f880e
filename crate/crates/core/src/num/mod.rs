//! Scalar types: arbitrary-precision rationals and the field Q(ζ₈).

mod cyc;

pub use cyc::CycRat;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type BigRat = num_rational::BigRational;

/// Generalized binomial coefficient C(x, k) for any integer `x` and `k >= 0`.
pub fn binomial(x: i64, k: u32) -> BigRat {
    use num_bigint::BigInt;
    use num_traits::One;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(x - i);
        den *= BigInt::from(i + 1);
    }
    BigRat::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(5, 2), BigRat::from_integer(BigInt::from(10)));
        assert_eq!(binomial(0, 2), BigRat::from_integer(BigInt::from(0)));
        // C(-1, 2) = (-1)(-2)/2 = 1
        assert_eq!(binomial(-1, 2), BigRat::from_integer(BigInt::from(1)));
        assert_eq!(binomial(7, 0), BigRat::from_integer(BigInt::from(1)));
    }
}
