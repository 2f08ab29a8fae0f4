use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::Rational;

/// `num/den` as an exact rational. Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q`, an integer, or a finite decimal such as `0.6` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |pos: usize| Error::parse(pos, format!("`{s}` is not a rational number"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad(0))?;
        let d: BigInt = den.trim().parse().map_err(|_| bad(num.len() + 1))?;
        if d.is_zero() {
            return Err(Error::parse(num.len() + 1, "zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(int.len() + 1));
        }
        let neg = int.starts_with('-');
        let whole: BigInt = match int.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            w => w.parse().map_err(|_| bad(0))?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let f: BigInt = frac.parse().map_err(|_| bad(int.len() + 1))?;
        let mag = Rational::new(whole * &scale + f, scale);
        return Ok(if neg { -mag } else { mag });
    }
    s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rational("3/5").unwrap(), rational(3, 5));
        assert_eq!(parse_rational("6/10").unwrap(), rational(3, 5));
        assert_eq!(parse_rational("0.6").unwrap(), rational(3, 5));
        assert_eq!(parse_rational("-1.25").unwrap(), rational(-5, 4));
        assert_eq!(parse_rational("7").unwrap(), rational(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
    }
}
