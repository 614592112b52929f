//! Exact rational numbers and their text forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational used for every weight and index value.
pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `p` or `p/q` with optional sign on `p`; `q` must be positive.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (text, None),
    };
    let numer: BigInt = numer.parse().ok()?;
    let denom: BigInt = match denom {
        Some(q) => {
            if q.starts_with(['+', '-']) {
                return None;
            }
            q.parse().ok()?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// Exact form: `p` for integers, `p/q` otherwise.
pub fn to_exact_string(value: &Rational) -> String {
    value.to_string()
}

/// Decimal approximation with `significant` significant digits, rounded half
/// away from zero. Fixed notation for exponents in `-5..significant`,
/// scientific otherwise.
pub fn to_decimal_string(value: &Rational, significant: usize) -> String {
    assert!(significant > 0);
    if value.is_zero() {
        return "0".to_string();
    }
    let negative = value.is_negative();
    let abs = value.abs();
    let ten = BigInt::from(10);

    // 10^exp <= abs < 10^(exp+1)
    let mut exp = abs.numer().to_string().len() as i64 - abs.denom().to_string().len() as i64;
    loop {
        let lower = pow10(exp);
        if abs < lower {
            exp -= 1;
            continue;
        }
        if abs >= pow10(exp + 1) {
            exp += 1;
            continue;
        }
        break;
    }

    let scaled = &abs * pow10(significant as i64 - 1 - exp);
    let (quot, rem) = scaled.numer().div_rem(scaled.denom());
    let mut digits = if &rem * BigInt::from(2) >= *scaled.denom() { quot + 1 } else { quot };
    if digits == ten.pow(significant as u32) {
        digits /= &ten;
        exp += 1;
    }
    let digits = digits.to_string();
    debug_assert_eq!(digits.len(), significant);

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp >= significant as i64 || exp < -5 {
        out.push_str(&digits[..1]);
        if significant > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&exp.to_string());
    } else if exp >= 0 {
        let split = exp as usize + 1;
        out.push_str(&digits[..split]);
        if split < digits.len() {
            out.push('.');
            out.push_str(&digits[split..]);
        }
    } else {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    }
    out
}

fn pow10(exp: i64) -> Rational {
    let ten = BigInt::from(10);
    if exp >= 0 {
        Rational::from_integer(ten.pow(exp as u32))
    } else {
        Rational::new(BigInt::one(), ten.pow((-exp) as u32))
    }
}
