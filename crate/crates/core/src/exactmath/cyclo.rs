//! Exact elements of cyclotomic fields `Q(ζ_N)`.
//!
//! An element is stored as an integer polynomial in `ζ_N` of degree `< φ(N)`
//! over a positive common denominator, reduced modulo `Φ_N`. The rational
//! coefficient view required by callers is available through [`CycScalar::coeffs`].

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{self, cyclotomic_polynomial, euler_phi};
use super::rational::{format_rational, parse_rational};
use super::MathError;

/// Per-order reduction data.
#[derive(Debug)]
struct CycloCtx {
    phi: usize,
    modulus: Arc<Vec<BigInt>>,
    /// `x^k mod Φ_N` for `k` in `phi .. 2*phi - 1`.
    high_powers: Vec<Vec<BigInt>>,
}

fn ctx(order: u64) -> Arc<CycloCtx> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycloCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&order) {
        return c.clone();
    }
    let modulus = cyclotomic_polynomial(order);
    let phi = euler_phi(order);
    let mut high_powers = Vec::new();
    for k in phi..(2 * phi).saturating_sub(1).max(phi) {
        let mut mono = vec![BigInt::zero(); k + 1];
        mono[k] = BigInt::one();
        high_powers.push(reduce_monic(&mono, &modulus));
    }
    let c = Arc::new(CycloCtx {
        phi,
        modulus,
        high_powers,
    });
    cache.lock().unwrap().insert(order, c.clone());
    c
}

/// Remainder of an integer polynomial modulo a monic integer polynomial,
/// padded to length `deg(m)`.
fn reduce_monic(p: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    let dm = m.len() - 1;
    let mut rem = p.to_vec();
    if rem.len() > dm {
        for k in (dm..rem.len()).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            for (i, d) in m.iter().enumerate() {
                rem[k - dm + i] -= &c * d;
            }
        }
    }
    rem.resize(dm, BigInt::zero());
    rem
}

/// An exact element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct CycScalar {
    order: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycScalar {
    fn from_parts(order: u64, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut s = CycScalar { order, num, den };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in self.num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    /// Canonical form of `Σ coeffs[k] ζ_N^k` for a coefficient list of any length.
    pub fn new(order: u64, coeffs: &[BigRational]) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let c = ctx(order);
        let mut den = BigInt::one();
        for q in coeffs {
            den = den.lcm(q.denom());
        }
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|q| q.numer() * (&den / q.denom()))
            .collect();
        let num = reduce_monic(&ints, &c.modulus);
        Self::from_parts(order, num, den)
    }

    pub fn from_ints(order: u64, coeffs: &[i64]) -> Self {
        let q: Vec<BigRational> = coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        Self::new(order, &q)
    }

    pub fn zero(order: u64) -> Self {
        let phi = ctx(order).phi;
        CycScalar {
            order,
            num: vec![BigInt::zero(); phi],
            den: BigInt::one(),
        }
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(order, &BigRational::one())
    }

    pub fn from_int(order: u64, v: i64) -> Self {
        Self::from_rational(order, &BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(order: u64, q: &BigRational) -> Self {
        let phi = ctx(order).phi;
        let mut num = vec![BigInt::zero(); phi];
        num[0] = q.numer().clone();
        Self::from_parts(order, num, q.denom().clone())
    }

    /// `ζ_N^k`, with `k` taken modulo `N`.
    pub fn root_of_unity(order: u64, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![BigInt::zero(); e + 1];
        raw[e] = BigInt::one();
        let c = ctx(order);
        Self::from_parts(order, reduce_monic(&raw, &c.modulus), BigInt::one())
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Rational coefficients of `ζ_N^k`, `k < φ(N)`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// Integer numerator coefficients and the common positive denominator.
    pub(crate) fn raw(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::from_parts(self.order, num, &self.den * q.denom())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.iter().skip(1).all(|c| c.is_zero()) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Image under `ζ_N ↦ ζ_L^{L/N}`; `target` must be a multiple of the order.
    pub fn embed(&self, target: u64) -> Self {
        if target == self.order {
            return self.clone();
        }
        assert!(
            target.is_multiple_of(self.order),
            "cannot embed order {} into order {}",
            self.order,
            target
        );
        let step = (target / self.order) as usize;
        let mut raw = vec![BigInt::zero(); (self.num.len().max(1) - 1) * step + 1];
        for (k, c) in self.num.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        let c = ctx(target);
        Self::from_parts(target, reduce_monic(&raw, &c.modulus), self.den.clone())
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let l = poly::lcm(a.order, b.order);
        (a.embed(l), b.embed(l))
    }

    fn with_aligned(a: &Self, b: &Self, f: fn(&Self, &Self) -> Self) -> Self {
        let l = poly::lcm(a.order, b.order);
        if l == a.order {
            f(a, &b.embed(l))
        } else if l == b.order {
            f(&a.embed(l), b)
        } else {
            f(&a.embed(l), &b.embed(l))
        }
    }

    fn add_same(&self, other: &Self, negate: bool) -> Self {
        let num: Vec<BigInt> = if self.den == other.den {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(x, y)| if negate { x - y } else { x + y })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(x, y)| {
                    let a = x * &other.den;
                    let b = y * &self.den;
                    if negate {
                        a - b
                    } else {
                        a + b
                    }
                })
                .collect()
        };
        let den = if self.den == other.den {
            self.den.clone()
        } else {
            &self.den * &other.den
        };
        Self::from_parts(self.order, num, den)
    }

    fn mul_same(&self, other: &Self) -> Self {
        let c = ctx(self.order);
        let phi = c.phi;
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order);
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.num.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        let mut num: Vec<BigInt> = prod[..phi].to_vec();
        for (k, hp) in prod[phi..].iter().enumerate() {
            if hp.is_zero() {
                continue;
            }
            for (j, r) in c.high_powers[k].iter().enumerate() {
                if !r.is_zero() {
                    num[j] += hp * r;
                }
            }
        }
        Self::from_parts(self.order, num, &self.den * &other.den)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm on the
    /// representative polynomial and `Φ_N`.
    pub fn try_inv(&self) -> Result<Self, MathError> {
        if self.is_zero() {
            return Err(MathError::ZeroInverse);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(self.order, &q.recip()));
        }
        let c = ctx(self.order);
        let a = poly::to_rat_poly(&self.num);
        let m = poly::to_rat_poly(&c.modulus);
        let (g, s) = poly::rat_ext_gcd(&a, &m);
        debug_assert_eq!(g.len(), 1, "Φ_N is irreducible");
        // self = num/den, so self^{-1} = den * s.
        let scaled: Vec<BigRational> = s
            .iter()
            .map(|x| x * BigRational::from_integer(self.den.clone()))
            .collect();
        Ok(Self::new(self.order, &scaled))
    }

    pub fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    /// Galois automorphism `ζ_N ↦ ζ_N^k` (`k` coprime to `N`).
    pub fn galois(&self, k: u64) -> Self {
        let n = self.order;
        let mut raw = vec![BigInt::zero(); n as usize];
        for (i, c) in self.num.iter().enumerate() {
            let e = ((i as u64 * k) % n) as usize;
            raw[e] += c;
        }
        let c = ctx(n);
        Self::from_parts(n, reduce_monic(&raw, &c.modulus), self.den.clone())
    }

    /// Returns `k` if `self = ζ_N^k` for some `0 <= k < N`.
    pub fn root_power(&self) -> Option<u64> {
        if !self.den.is_one() {
            return None;
        }
        (0..self.order).find(|&k| *self == Self::root_of_unity(self.order, k as i64))
    }

    /// Parses the scalar literal syntax: `"m/n"`, `"z^k"`, `"-z^k"`, or a
    /// JSON-style array of rational strings indexed by the power of `ζ_N`.
    pub fn parse(order: u64, text: &str) -> Result<Self, MathError> {
        let t = text.trim();
        if let Some(rest) = t.strip_prefix("-z^") {
            let k: i64 = rest.trim().parse().map_err(|_| MathError::Parse(text.into()))?;
            return Ok(-Self::root_of_unity(order, k));
        }
        if let Some(rest) = t.strip_prefix("z^") {
            let k: i64 = rest.trim().parse().map_err(|_| MathError::Parse(text.into()))?;
            return Ok(Self::root_of_unity(order, k));
        }
        if t == "z" {
            return Ok(Self::root_of_unity(order, 1));
        }
        let q = parse_rational(t).ok_or_else(|| MathError::Parse(text.into()))?;
        Ok(Self::from_rational(order, &q))
    }

    pub fn from_coeff_strings(order: u64, parts: &[String]) -> Result<Self, MathError> {
        let qs = parts
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| MathError::Parse(s.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(order, &qs))
    }

    /// Short literal if one exists: rational `"m/n"` or root power `"z^k"`.
    pub fn short_literal(&self) -> Option<String> {
        if let Some(q) = self.as_rational() {
            return Some(format_rational(&q));
        }
        if let Some(k) = self.root_power() {
            return Some(format!("z^{k}"));
        }
        if let Some(k) = (-self).root_power() {
            return Some(format!("-z^{k}"));
        }
        None
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(format_rational).collect()
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = Self::aligned(self, other);
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.short_literal() {
            return write!(f, "{s}");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "({})z", format_rational(c))?,
                _ => write!(f, "({})z^{k}", format_rational(c))?,
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a CycScalar> for &'a CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &'a CycScalar) -> CycScalar {
                let f: fn(&CycScalar, &CycScalar) -> CycScalar = $body;
                if self.order == rhs.order {
                    f(self, rhs)
                } else {
                    CycScalar::with_aligned(self, rhs, f)
                }
            }
        }
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &'a CycScalar) -> CycScalar {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_same(b, false));
binop!(Sub, sub, |a, b| a.add_same(b, true));
binop!(Mul, mul, |a, b| a.mul_same(b));
binop!(Div, div, |a, b| a.mul_same(&b.inv()));

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        *self = &*self - rhs;
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            order: self.order,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

/// Canonicalizes a raw coefficient list modulo `Φ_N`.
pub fn cyc_canonicalize(order: u64, raw: &[BigRational]) -> CycScalar {
    CycScalar::new(order, raw)
}

/// Inverse of a nonzero cyclotomic number.
pub fn cyc_inv(a: &CycScalar) -> Result<CycScalar, MathError> {
    a.try_inv()
}
