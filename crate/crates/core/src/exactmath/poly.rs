//! Dense univariate polynomials over the integers and the rationals.
//!
//! Coefficient `k` of a polynomial is the coefficient of `x^k`. Polynomials
//! are kept trimmed: no trailing zero coefficients, the zero polynomial is
//! the empty vector.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntPoly = Vec<BigInt>;
pub type RatPoly = Vec<BigRational>;

pub fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree<T>(p: &[T]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Exact division of integer polynomials; the divisor must be monic and
/// divide the dividend. Returns `None` if there is a remainder.
pub fn int_div_exact(num: &[BigInt], den: &[BigInt]) -> Option<IntPoly> {
    let dd = degree(den)?;
    if !den[dd].is_one() {
        return None;
    }
    let mut rem: IntPoly = num.to_vec();
    trim(&mut rem);
    if rem.len() < den.len() {
        return if rem.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    trim(&mut rem);
    if rem.is_empty() {
        trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, by exact division of `x^n - 1` by
/// `Φ_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u64) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p: IntPoly = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let q = cyclotomic_polynomial(d);
        p = int_div_exact(&p, &q).expect("cyclotomic division is exact");
    }
    let p = Arc::new(p);
    phi_cache().lock().unwrap().insert(n, p.clone());
    p
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as usize
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn to_rat_poly(p: &[BigInt]) -> RatPoly {
    p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

pub fn rat_sub(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let n = a.len().max(b.len());
    let mut out: RatPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

pub fn rat_mul(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Polynomial long division over the rationals: `a = q*b + r`, `deg r < deg b`.
pub fn rat_divrem(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut rem: RatPoly = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead = b[db].clone();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (i, d) in b.iter().enumerate() {
            let t = &c * d;
            rem[k + i] -= t;
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// Extended Euclid: returns `(g, s)` with `s*a ≡ g (mod m)` and `g = gcd(a, m)`
/// normalized to be monic.
pub fn rat_ext_gcd(a: &[BigRational], m: &[BigRational]) -> (RatPoly, RatPoly) {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (RatPoly, RatPoly) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = rat_divrem(&r0, &r1);
        let s2 = rat_sub(&s0, &rat_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if let Some(d) = degree(&r0) {
        let lead = r0[d].clone();
        for c in r0.iter_mut() {
            *c /= &lead;
        }
        for c in s0.iter_mut() {
            *c /= &lead;
        }
    }
    (r0, s0)
}

/// Renders an integer polynomial as `x^4 - x^2 + 1`.
pub fn format_int_poly(p: &[BigInt]) -> String {
    let mut terms = Vec::new();
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let mono = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        let body = if k == 0 {
            mag.to_string()
        } else if mag.is_one() {
            mono
        } else {
            format!("{mag}{mono}")
        };
        let sign = if c.is_negative() { "-" } else { "+" };
        terms.push((sign, body));
    }
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (sign, body)) in terms.into_iter().enumerate() {
        if i == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_polynomial(1), ip(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), ip(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ip(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ip(&[1, -1, 1]));
        assert_eq!(format_int_poly(&cyclotomic_polynomial(4)), "x^2 + 1");
        assert_eq!(format_int_poly(&cyclotomic_polynomial(1)), "x - 1");
    }

    // Long division oracle independent of the recursion above: multiply
    // the five lower factors and divide x^12 - 1 by the product.
    #[test]
    fn phi_12_by_long_division() {
        fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
            let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        }
        let lower = [ip(&[-1, 1]), ip(&[1, 1]), ip(&[1, 1, 1]), ip(&[1, 0, 1]), ip(&[1, -1, 1])];
        let prod = lower.iter().skip(1).fold(lower[0].clone(), |acc, p| mul(&acc, p));
        let mut x12 = vec![BigInt::zero(); 13];
        x12[0] = BigInt::from(-1);
        x12[12] = BigInt::one();
        let q = int_div_exact(&x12, &prod).unwrap();
        assert_eq!(q, ip(&[1, 0, -1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(12), q);
    }

    #[test]
    fn totient_matches_degree() {
        for n in 1..=60u64 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n), "n={n}");
        }
    }
}
