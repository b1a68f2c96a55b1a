//! Elementary arithmetic predicates behind the bound theorems.

use crate::error::Error;

/// Number of ones in the binary expansion of n. Classically equal to the
/// 2-adic valuation of the central binomial coefficient C(2n, n).
pub fn dyadic_ones(n: u64) -> u32 {
    n.count_ones()
}

/// Deterministic trial-division primality test (inputs here are small).
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// p-adic valuation of the binomial coefficient C(a, b), computed as the
/// number of carries when adding b and a−b in base p (Kummer's method).
/// Never forms the product, so any magnitude of a is safe.
pub fn binomial_valuation(p: u64, a: u64, b: u64) -> Result<u32, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if b > a {
        return Err(Error::Parse(format!("binomial C({a}, {b}) needs b <= a")));
    }
    let mut x = b;
    let mut y = a - b;
    let mut carry = 0u64;
    let mut count = 0u32;
    while x > 0 || y > 0 || carry > 0 {
        let digit = x % p + y % p + carry;
        carry = u64::from(digit >= p);
        count += carry as u32;
        x /= p;
        y /= p;
    }
    Ok(count)
}

/// True iff m divides C(a, b): every prime power p^e exactly dividing m must
/// be matched by at least e carries in base p.
pub fn divides_binomial(m: u64, a: u64, b: u64) -> Result<bool, Error> {
    if m == 0 {
        return Err(Error::Parse("divisor must be positive".into()));
    }
    if b > a {
        return Err(Error::Parse(format!("binomial C({a}, {b}) needs b <= a")));
    }
    let mut rest = m;
    let mut p = 2;
    while rest > 1 {
        if rest.is_multiple_of(p) {
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            if binomial_valuation(p, a, b)? < e {
                return Ok(false);
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    Ok(true)
}

/// The metastable-range predicate 2m ≥ 3(n+1) for an n-manifold in ℝ^m.
/// The same inequality gates the existence of axial maps P^r×P^r → P^s
/// under the substitution n → r, m → s.
pub fn in_metastable_range(n: u64, m: u64) -> bool {
    2 * m >= 3 * (n + 1)
}

/// Dimension 4n−2 of the known CW model for the unordered two-point
/// configuration space of complex projective n-space (two less than the
/// complex Stiefel manifold of 2-frames in ℂ^{n+1}).
pub fn cp_config_model_dim(n: u64) -> u64 {
    4 * n - 2
}
