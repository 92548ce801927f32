use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Candidate root magnitudes up to this bound are scanned directly.
const SCAN_LIMIT: u64 = 1 << 20;

/// Constant terms below this magnitude have their divisors enumerated by
/// trial division.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 48;

/// Integer-coefficient polynomial, lowest degree first, with no trailing
/// zero coefficients. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial::from_i64(&[1])
    }

    /// `x - root`.
    pub fn linear(root: &BigInt) -> IntPolynomial {
        IntPolynomial::new(vec![-root, BigInt::one()])
    }

    /// `Π (x - λ)^m`.
    pub fn from_roots(roots: &[(BigInt, usize)]) -> IntPolynomial {
        let mut p = IntPolynomial::one();
        for (root, mult) in roots {
            for _ in 0..*mult {
                p = p.mul(&IntPolynomial::linear(root));
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// Synthetic division by `x - root`: returns the quotient and `p(root)`.
    pub fn div_linear(&self, root: &BigInt) -> (IntPolynomial, BigInt) {
        let Some(deg) = self.degree() else {
            return (IntPolynomial::default(), BigInt::zero());
        };
        let mut quotient = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for k in (0..=deg).rev() {
            let value = &self.coeffs[k] + &carry * root;
            if k == 0 {
                return (IntPolynomial::new(quotient), value);
            }
            quotient[k - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Decimal-string coefficient array, lowest degree first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<IntPolynomial> {
        items
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("coefficient {:?}: {e}", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntPolynomial::new)
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        IntPolynomial::from_decimal_strings(&items).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Integer roots with multiplicities (descending by value) and the
/// cofactor that has no integer roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerRoots {
    pub roots: Vec<(BigInt, usize)>,
    pub residual: IntPolynomial,
}

// ceil(m^(1/k)) for m >= 0
fn ceil_root(m: &BigInt, k: u32) -> BigInt {
    let r = m.nth_root(k);
    if r.pow(k) == *m {
        r
    } else {
        r + 1
    }
}

/// Fujiwara's bound: every complex root has modulus at most
/// `2 max(|a_{d-1}/a_d|, |a_{d-2}/a_d|^(1/2), ..., |a_0/(2 a_d)|^(1/d))`.
/// Rounded up so the result is a valid integer bound.
pub fn root_bound(p: &IntPolynomial) -> BigInt {
    let Some(d) = p.degree() else {
        return BigInt::zero();
    };
    let lead = p.coeffs[d].abs();
    let mut best = BigInt::zero();
    for k in 1..=d {
        let mut num = p.coeffs[d - k].abs();
        let mut den = lead.clone();
        if k == d {
            den *= 2;
        }
        if num.is_zero() {
            continue;
        }
        num = num.div_ceil(&den);
        best = best.max(ceil_root(&num, k as u32));
    }
    best * 2
}

fn divisors_by_trial(c: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut t = 1u64;
    while t * t <= c {
        if c.is_multiple_of(t) {
            small.push(t);
            if t * t != c {
                large.push(c / t);
            }
        }
        t += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Positive candidates for integer roots of a polynomial with nonzero
/// constant term `c`, in descending order. `fallback` bounds the search
/// when neither the root bound nor the constant term is small enough to
/// enumerate.
fn candidate_magnitudes(c: &BigInt, bound: &BigInt, fallback: u64) -> Vec<u64> {
    let c_abs = c.abs();
    let limit = bound.clone().min(c_abs.clone());
    if let Some(lim) = limit.to_u64().filter(|&l| l <= SCAN_LIMIT) {
        return (1..=lim)
            .rev()
            .filter(|&t| (&c_abs % t).is_zero())
            .collect();
    }
    if let Some(cv) = c_abs.to_u64().filter(|&v| v < TRIAL_DIVISION_LIMIT) {
        let mut ds: Vec<u64> = divisors_by_trial(cv)
            .into_iter()
            .filter(|&t| BigInt::from(t) <= limit)
            .collect();
        ds.reverse();
        return ds;
    }
    // graph-specific: adjacency eigenvalues satisfy |λ| <= dimension
    let lim = limit.to_u64().map_or(fallback, |l| l.min(fallback));
    (1..=lim)
        .rev()
        .filter(|&t| (&c_abs % t).is_zero())
        .collect()
}

/// Finds every integer root (with multiplicity) of a nonzero polynomial.
///
/// A factor `x^k` is split off first. The remaining candidates are the
/// divisors of the new constant term, limited by [`root_bound`] and tried
/// in descending absolute value; each hit is divided out until it stops
/// dividing. Whatever remains is returned as the residual.
pub fn integer_roots(p: &IntPolynomial) -> Result<IntegerRoots> {
    let Some(deg) = p.degree() else {
        return Err(Error::Domain("integer roots of the zero polynomial".into()));
    };
    let zeros = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut rest = IntPolynomial::new(p.coeffs[zeros..].to_vec());
    let mut roots: Vec<(BigInt, usize)> = Vec::new();
    if zeros > 0 {
        roots.push((BigInt::zero(), zeros));
    }
    if rest.degree() != Some(0) {
        let bound = root_bound(&rest);
        let constant = rest.coeffs[0].clone();
        for t in candidate_magnitudes(&constant, &bound, deg as u64) {
            for candidate in [BigInt::from(t), -BigInt::from(t)] {
                let mut mult = 0;
                loop {
                    let (q, value) = rest.div_linear(&candidate);
                    if !value.is_zero() {
                        break;
                    }
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    roots.push((candidate, mult));
                }
            }
            if rest.degree() == Some(0) {
                break;
            }
        }
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(IntegerRoots {
        roots,
        residual: rest,
    })
}

/// Whether `p` divides `q` over the rationals.
pub fn divides(p: &IntPolynomial, q: &IntPolynomial) -> Result<bool> {
    let Some(dp) = p.degree() else {
        return Err(Error::Domain("division by the zero polynomial".into()));
    };
    let lead = BigRational::from_integer(p.coeffs[dp].clone());
    let divisor: Vec<BigRational> = p
        .coeffs
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let mut rem: Vec<BigRational> = q
        .coeffs
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    while rem.len() > dp {
        let top = rem.len() - 1;
        let factor = &rem[top] / &lead;
        if !factor.is_zero() {
            for (k, d) in divisor.iter().enumerate() {
                rem[top - dp + k] -= &factor * d;
            }
        }
        rem.pop();
    }
    Ok(rem.iter().all(Zero::is_zero))
}
