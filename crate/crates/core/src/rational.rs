//! Exact rational arithmetic for utilities and edge weights.
//!
//! Values are [`num_rational::Ratio`] over `i128`: always stored in lowest
//! terms with a positive denominator, and compared exactly by
//! cross-multiplication. Desk-scale games keep numerators tiny, so `i128`
//! leaves ample headroom.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Exact rational number.
pub type Rat = Ratio<i128>;

/// Shorthand constructor: `rat(2, 3)` is 2/3. Panics on a zero denominator.
pub fn rat(num: i128, den: i128) -> Rat {
    Ratio::new(num, den)
}

/// Parses `p/q`, a plain integer, or an exact decimal such as `-2.5`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty number".to_string());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: i128 = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator '{num}'"))?;
        let den: i128 = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator '{den}'"))?;
        if den == 0 {
            return Err(format!("zero denominator in '{s}'"));
        }
        return Ok(Ratio::new(num, den));
    }
    match s.split_once('.') {
        None => s
            .parse::<i128>()
            .map(Rat::from_integer)
            .map_err(|_| format!("bad number '{s}'")),
        Some((int, frac)) => {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("bad number '{s}'"));
            }
            let negative = int.trim_start().starts_with('-');
            let int: i128 = if int == "-" || int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| format!("bad number '{s}'"))?
            };
            if frac.len() > 27 {
                return Err(format!("too many decimal digits in '{s}'"));
            }
            let digits: i128 = frac.parse().map_err(|_| format!("bad number '{s}'"))?;
            let scale = 10i128.pow(frac.len() as u32);
            let frac_part = Ratio::new(digits, scale);
            let whole = Rat::from_integer(int.abs());
            let abs = whole + frac_part;
            Ok(if negative || int < 0 { -abs } else { abs })
        }
    }
}

/// Formats a rational losslessly: integers as `p`, otherwise `p/q`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom() == &1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True iff `r` is strictly positive.
pub fn is_positive(r: &Rat) -> bool {
    !r.is_zero() && r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("7").unwrap(), rat(7, 1));
        assert_eq!(parse_rat("-24").unwrap(), rat(-24, 1));
        assert_eq!(parse_rat("2/3").unwrap(), rat(2, 3));
        assert_eq!(parse_rat("-10/4").unwrap(), rat(-5, 2));
        assert_eq!(parse_rat("-2.5").unwrap(), rat(-5, 2));
        assert_eq!(parse_rat("0.125").unwrap(), rat(1, 8));
        assert_eq!(parse_rat("-0.5").unwrap(), rat(-1, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("1.2.3").is_err());
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.x2").is_err());
    }

    #[test]
    fn stored_in_lowest_terms_with_positive_denominator() {
        let r = rat(4, -6);
        assert_eq!(*r.numer(), -2);
        assert_eq!(*r.denom(), 3);
        assert_eq!(format_rat(&r), "-2/3");
        assert_eq!(format_rat(&rat(6, 3)), "2");
    }

    #[test]
    fn comparison_is_exact() {
        // 1/3 < 0.3333333333333333 would be equal in f64 land for enough 3s.
        assert!(rat(1, 3) > rat(3333333333333333, 10000000000000000));
        assert!(rat(2, 3) > rat(1, 2));
        assert_eq!(rat(2, 4), rat(1, 2));
    }

    #[test]
    fn roundtrip_format_parse() {
        for r in [rat(0, 1), rat(-7, 3), rat(22, 7), rat(5, 1)] {
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
    }
}
