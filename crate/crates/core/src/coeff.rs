//! Coefficient rings: the integers, prime-power quotients `Z/p^mZ`, and
//! composite quotients `Z/NZ` split into prime-power components.
//!
//! Coefficients are plain [`BigInt`]s; the [`Ring`] owns canonicalization.
//! Quotient-ring values are always kept in `[0, N)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("composite ring needs at least two distinct prime factors")]
    DegenerateComposite,
    #[error("prime {0} repeated in composite factorization")]
    RepeatedPrime(u64),
    #[error("modulus 1 gives the zero ring")]
    ZeroRing,
    #[error("modulus {0} is too large to factor")]
    ModulusTooLarge(String),
    #[error("operation needs a {expected} ring, got {found}")]
    KindMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { divisor: BigInt, dividend: BigInt },
    #[error("component {index} out of range ({count} components)")]
    ComponentOutOfRange { index: usize, count: usize },
}

/// `Z/p^mZ` with `p` prime and `m >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    m: u32,
    p_big: BigInt,
    modulus: BigInt,
}

impl PrimePower {
    pub fn new(p: u64, m: u32) -> Result<Self, RingError> {
        if m == 0 {
            return Err(RingError::ZeroExponent);
        }
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        let p_big = BigInt::from(p);
        let modulus = num_traits::pow(p_big.clone(), m as usize);
        Ok(Self { p, m, p_big, modulus })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// `p^e` as a canonical element (zero once `e >= m`).
    pub fn power(&self, e: u32) -> BigInt {
        if e >= self.m {
            BigInt::zero()
        } else {
            num_traits::pow(self.p_big.clone(), e as usize)
        }
    }

    fn reduce(&self, c: BigInt) -> BigInt {
        c.mod_floor(&self.modulus)
    }

    /// p-adic valuation of a canonical element; zero has valuation `m`.
    pub fn valuation(&self, c: &BigInt) -> u32 {
        let mut c = self.reduce(c.clone());
        if c.is_zero() {
            return self.m;
        }
        let mut v = 0;
        while (&c % &self.p_big).is_zero() {
            c /= &self.p_big;
            v += 1;
        }
        v
    }

    /// `c = unit * p^val` with `p` not dividing `unit`; `(1, m)` for zero.
    pub fn canonical_form(&self, c: &BigInt) -> (BigInt, u32) {
        let mut c = self.reduce(c.clone());
        if c.is_zero() {
            return (BigInt::one(), self.m);
        }
        let mut v = 0;
        while (&c % &self.p_big).is_zero() {
            c /= &self.p_big;
            v += 1;
        }
        (c, v)
    }

    fn inverse(&self, c: &BigInt) -> Option<BigInt> {
        mod_inverse(c, &self.modulus)
    }

    fn quotient(&self, d: &BigInt, c: &BigInt) -> Result<BigInt, RingError> {
        let (u, n1) = self.canonical_form(c);
        if n1 == self.m {
            return Err(RingError::DivisionByZero);
        }
        let (v, n2) = self.canonical_form(d);
        if n2 < n1 {
            return Err(RingError::NotDivisible {
                divisor: c.clone(),
                dividend: d.clone(),
            });
        }
        let u_inv = self.inverse(&u).expect("unit part is invertible");
        Ok(self.reduce(v * u_inv * self.power(n2 - n1)))
    }
}

/// `Z/NZ` for composite `N`, stored by its prime-power factors together with
/// the CRT idempotents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composite {
    factors: Vec<PrimePower>,
    modulus: BigInt,
    idempotents: Vec<BigInt>,
}

impl Composite {
    pub fn new(factors: &[(u64, u32)]) -> Result<Self, RingError> {
        if factors.len() < 2 {
            return Err(RingError::DegenerateComposite);
        }
        let mut seen = Vec::new();
        let mut pps = Vec::with_capacity(factors.len());
        for &(p, m) in factors {
            if seen.contains(&p) {
                return Err(RingError::RepeatedPrime(p));
            }
            seen.push(p);
            pps.push(PrimePower::new(p, m)?);
        }
        let modulus: BigInt = pps.iter().map(|f| f.modulus.clone()).product();
        let idempotents = pps
            .iter()
            .map(|f| {
                // e = M * (M^{-1} mod q) where q = p^m and M = N / q
                let q = &f.modulus;
                let rest = &modulus / q;
                let inv = mod_inverse(&rest, q).expect("coprime factors");
                (rest * inv).mod_floor(&modulus)
            })
            .collect();
        Ok(Self {
            factors: pps,
            modulus,
            idempotents,
        })
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn idempotents(&self) -> &[BigInt] {
        &self.idempotents
    }

    fn split(&self, c: &BigInt) -> Vec<BigInt> {
        self.factors.iter().map(|f| f.reduce(c.clone())).collect()
    }

    fn join(&self, parts: &[BigInt]) -> BigInt {
        parts
            .iter()
            .zip(&self.idempotents)
            .fold(BigInt::zero(), |acc, (x, e)| acc + x * e)
            .mod_floor(&self.modulus)
    }
}

/// The coefficient ring of every polynomial in this crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    PrimePower(PrimePower),
    Composite(Composite),
}

impl Ring {
    pub fn integers() -> Self {
        Ring::Integers
    }

    pub fn prime_power(p: u64, m: u32) -> Result<Self, RingError> {
        PrimePower::new(p, m).map(Ring::PrimePower)
    }

    pub fn composite(factors: &[(u64, u32)]) -> Result<Self, RingError> {
        Composite::new(factors).map(Ring::Composite)
    }

    /// `0` gives the integers; `N >= 2` is factored by trial division.
    pub fn from_modulus(n: u64) -> Result<Self, RingError> {
        match n {
            0 => Ok(Ring::Integers),
            1 => Err(RingError::ZeroRing),
            _ => {
                let factors = factorize(n)?;
                if factors.len() == 1 {
                    Ring::prime_power(factors[0].0, factors[0].1)
                } else {
                    Ring::composite(&factors)
                }
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Ring::Integers => "integer",
            Ring::PrimePower(_) => "prime-power",
            Ring::Composite(_) => "composite",
        }
    }

    /// `None` for the integers.
    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            Ring::Integers => None,
            Ring::PrimePower(pp) => Some(&pp.modulus),
            Ring::Composite(c) => Some(&c.modulus),
        }
    }

    pub fn as_prime_power(&self) -> Result<&PrimePower, RingError> {
        match self {
            Ring::PrimePower(pp) => Ok(pp),
            other => Err(RingError::KindMismatch {
                expected: "prime-power",
                found: other.kind_name(),
            }),
        }
    }

    pub fn as_composite(&self) -> Result<&Composite, RingError> {
        match self {
            Ring::Composite(c) => Ok(c),
            other => Err(RingError::KindMismatch {
                expected: "composite",
                found: other.kind_name(),
            }),
        }
    }

    pub fn reduce(&self, c: BigInt) -> BigInt {
        match self.modulus() {
            None => c,
            Some(n) => c.mod_floor(n),
        }
    }

    pub fn from_i64(&self, c: i64) -> BigInt {
        self.reduce(BigInt::from(c))
    }

    pub fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(-a)
    }

    pub fn is_unit(&self, c: &BigInt) -> bool {
        match self.modulus() {
            None => c.abs().is_one(),
            Some(n) => c.gcd(n).is_one(),
        }
    }

    pub fn inverse(&self, c: &BigInt) -> Option<BigInt> {
        match self {
            Ring::Integers => c.abs().is_one().then(|| c.clone()),
            Ring::PrimePower(pp) => pp.inverse(c),
            Ring::Composite(cp) => mod_inverse(c, &cp.modulus),
        }
    }

    /// Whether `c` divides `d`; `c` must be nonzero.
    pub fn divides(&self, c: &BigInt, d: &BigInt) -> Result<bool, RingError> {
        let c = self.reduce(c.clone());
        if c.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let d = self.reduce(d.clone());
        Ok(match self {
            Ring::Integers => (&d % &c).is_zero(),
            Ring::PrimePower(pp) => pp.valuation(&c) <= pp.valuation(&d),
            Ring::Composite(cp) => cp
                .factors
                .iter()
                .zip(cp.split(&c).iter().zip(cp.split(&d)))
                .all(|(f, (ci, di))| {
                    if ci.is_zero() {
                        di.is_zero()
                    } else {
                        f.valuation(ci) <= f.valuation(&di)
                    }
                }),
        })
    }

    /// Some `e` with `e * c = d`; canonical `v u^{-1} p^{n2-n1}` over prime powers.
    pub fn quotient(&self, d: &BigInt, c: &BigInt) -> Result<BigInt, RingError> {
        let c = self.reduce(c.clone());
        let d = self.reduce(d.clone());
        if c.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        match self {
            Ring::Integers => {
                let (q, r) = d.div_rem(&c);
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(RingError::NotDivisible {
                        divisor: c,
                        dividend: d,
                    })
                }
            }
            Ring::PrimePower(pp) => pp.quotient(&d, &c),
            Ring::Composite(cp) => {
                let cs = cp.split(&c);
                let ds = cp.split(&d);
                let mut parts = Vec::with_capacity(cs.len());
                for ((f, ci), di) in cp.factors.iter().zip(&cs).zip(&ds) {
                    if ci.is_zero() {
                        if !di.is_zero() {
                            return Err(RingError::NotDivisible {
                                divisor: c.clone(),
                                dividend: d.clone(),
                            });
                        }
                        parts.push(BigInt::zero());
                    } else {
                        parts.push(f.quotient(di, ci).map_err(|_| RingError::NotDivisible {
                            divisor: c.clone(),
                            dividend: d.clone(),
                        })?);
                    }
                }
                Ok(cp.join(&parts))
            }
        }
    }

    pub fn canonical_form(&self, c: &BigInt) -> Result<(BigInt, u32), RingError> {
        Ok(self.as_prime_power()?.canonical_form(c))
    }

    pub fn valuation(&self, c: &BigInt) -> Result<u32, RingError> {
        Ok(self.as_prime_power()?.valuation(c))
    }

    pub fn crt_idempotents(&self) -> Result<&[BigInt], RingError> {
        Ok(self.as_composite()?.idempotents())
    }

    /// Prime-power components of a composite ring; `[self]` otherwise.
    pub fn components(&self) -> Vec<Ring> {
        match self {
            Ring::Composite(c) => c.factors.iter().cloned().map(Ring::PrimePower).collect(),
            other => vec![other.clone()],
        }
    }

    /// Image of `c` in component `i` of a composite ring.
    pub fn project(&self, c: &BigInt, i: usize) -> Result<BigInt, RingError> {
        let cp = self.as_composite()?;
        let f = cp.factors.get(i).ok_or(RingError::ComponentOutOfRange {
            index: i,
            count: cp.factors.len(),
        })?;
        Ok(f.reduce(c.clone()))
    }

    /// Unit `u` such that `u * c` is the normal representative of the
    /// associate class of `c`: `p^v` over prime powers, `|c|` over the integers.
    pub fn normalizing_unit(&self, c: &BigInt) -> BigInt {
        match self {
            Ring::Integers => {
                if c.is_negative() {
                    -BigInt::one()
                } else {
                    BigInt::one()
                }
            }
            Ring::PrimePower(pp) => {
                let (u, v) = pp.canonical_form(c);
                if v == pp.m {
                    BigInt::one()
                } else {
                    pp.inverse(&u).expect("unit part is invertible")
                }
            }
            Ring::Composite(_) => BigInt::one(),
        }
    }

    /// Cofactors `(a, b)` with `a * x = b * y = lcm(x, y)` for nonzero `x, y`.
    /// Over a prime power the lcm is the element of larger valuation.
    pub fn lcm_cofactors(&self, x: &BigInt, y: &BigInt) -> Result<(BigInt, BigInt), RingError> {
        match self {
            Ring::Integers => {
                let l = x.lcm(y);
                Ok((&l / x, &l / y))
            }
            Ring::PrimePower(pp) => {
                if pp.valuation(x) <= pp.valuation(y) {
                    Ok((pp.quotient(y, x)?, BigInt::one()))
                } else {
                    Ok((BigInt::one(), pp.quotient(x, y)?))
                }
            }
            Ring::Composite(_) => Err(RingError::KindMismatch {
                expected: "integer or prime-power",
                found: "composite",
            }),
        }
    }

    /// `p^{m - val(c)}` when `c` is a nonzero zero divisor of `Z/p^mZ`.
    pub fn annihilator(&self, c: &BigInt) -> Option<BigInt> {
        match self {
            Ring::PrimePower(pp) => {
                let v = pp.valuation(c);
                (v > 0 && v < pp.m).then(|| pp.power(pp.m - v))
            }
            _ => None,
        }
    }

    /// Representative in `(-N/2, N/2]` used for display.
    pub fn symmetric(&self, c: &BigInt) -> BigInt {
        match self.modulus() {
            None => c.clone(),
            Some(n) => {
                let c = c.mod_floor(n);
                if &(&c * 2) > n {
                    c - n
                } else {
                    c
                }
            }
        }
    }

    /// Modulus as a machine integer, 0 for the integers.
    pub fn modulus_u64(&self) -> u64 {
        self.modulus().and_then(|n| n.to_u64()).unwrap_or(0)
    }
}

impl std::fmt::Display for Ring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.modulus() {
            None => write!(f, "Z"),
            Some(n) => write!(f, "Z/{n}Z"),
        }
    }
}

/// Extended gcd: `(g, s, t)` with `g = gcd(a, b) >= 0` and `s*a + t*b = g`.
pub fn gcd_ext(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn mod_inverse(c: &BigInt, n: &BigInt) -> Option<BigInt> {
    let (g, s, _) = gcd_ext(&c.mod_floor(n), n);
    g.is_one().then(|| s.mod_floor(n))
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut r = 1 % n;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, n);
        }
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Result<Vec<(u64, u32)>, RingError> {
    let mut out = Vec::new();
    let mut d = 2u64;
    let mut steps = 0u64;
    while d.saturating_mul(d) <= n {
        if is_prime(n) {
            break;
        }
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
        steps += 1;
        if steps > 50_000_000 {
            return Err(RingError::ModulusTooLarge(n.to_string()));
        }
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn zn(n: u64) -> Ring {
        Ring::from_modulus(n).unwrap()
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(zn(9).canonical_form(&b(6)).unwrap(), (b(2), 1));
        assert_eq!(zn(8).canonical_form(&b(4)).unwrap(), (b(1), 2));
        assert_eq!(zn(9).canonical_form(&b(0)).unwrap(), (b(1), 2));
        assert!(matches!(
            Ring::Integers.canonical_form(&b(4)),
            Err(RingError::KindMismatch { .. })
        ));
    }

    #[test]
    fn divides_examples() {
        assert!(zn(9).divides(&b(3), &b(6)).unwrap());
        assert!(zn(9).divides(&b(6), &b(3)).unwrap());
        assert!(!zn(8).divides(&b(4), &b(2)).unwrap());
        assert_eq!(zn(8).divides(&b(0), &b(2)), Err(RingError::DivisionByZero));
        assert!(Ring::Integers.divides(&b(-3), &b(12)).unwrap());
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(zn(9).quotient(&b(6), &b(3)).unwrap(), b(2));
        assert_eq!(zn(9).quotient(&b(3), &b(6)).unwrap(), b(5));
        assert_eq!(Ring::Integers.quotient(&b(12), &b(4)).unwrap(), b(3));
        assert!(matches!(
            zn(8).quotient(&b(2), &b(4)),
            Err(RingError::NotDivisible { .. })
        ));
        assert!(Ring::Integers.quotient(&b(7), &b(2)).is_err());
    }

    #[test]
    fn gcd_ext_examples() {
        for (a, bb, g) in [(6, 9, 3), (0, 5, 5), (8, 3, 1), (-4, 6, 2), (0, 0, 0)] {
            let (gg, s, t) = gcd_ext(&b(a), &b(bb));
            assert_eq!(gg, b(g));
            assert_eq!(s * b(a) + t * b(bb), gg);
        }
        assert_eq!(gcd_ext(&b(0), &b(5)), (b(5), b(0), b(1)));
    }

    fn check_idempotents(ring: &Ring) {
        let es = ring.crt_idempotents().unwrap();
        let cp = ring.as_composite().unwrap();
        let n = cp.modulus();
        let mut sum = BigInt::zero();
        for (i, e) in es.iter().enumerate() {
            for (l, f) in cp.factors().iter().enumerate() {
                let r = e.mod_floor(f.modulus());
                assert_eq!(r, if i == l { BigInt::one() } else { BigInt::zero() });
            }
            assert_eq!((e * e).mod_floor(n), *e);
            for (l, e2) in es.iter().enumerate() {
                if l != i {
                    assert!((e * e2).mod_floor(n).is_zero());
                }
            }
            sum += e;
        }
        assert!(sum.mod_floor(n).is_one());
    }

    #[test]
    fn idempotents_examples() {
        assert_eq!(zn(6).crt_idempotents().unwrap(), &[b(3), b(4)]);
        assert_eq!(zn(12).crt_idempotents().unwrap(), &[b(9), b(4)]);
        for n in [6, 12, 72, 30, 360, 1001] {
            check_idempotents(&zn(n));
        }
        assert!(zn(9).crt_idempotents().is_err());
    }

    #[test]
    fn ring_construction_errors() {
        assert_eq!(Ring::prime_power(6, 1), Err(RingError::NotPrime(6)));
        assert_eq!(Ring::prime_power(3, 0), Err(RingError::ZeroExponent));
        assert_eq!(Ring::composite(&[(2, 1)]), Err(RingError::DegenerateComposite));
        assert_eq!(Ring::composite(&[(2, 1), (2, 2)]), Err(RingError::RepeatedPrime(2)));
        assert_eq!(Ring::from_modulus(1), Err(RingError::ZeroRing));
        assert_eq!(zn(72).as_composite().unwrap().factors().len(), 2);
        assert!(matches!(zn(27), Ring::PrimePower(_)));
        assert!(matches!(zn(7), Ring::PrimePower(_)));
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751));
        assert_eq!(factorize(360).unwrap(), vec![(2, 3), (3, 2), (5, 1)]);
    }

    // Exhaustive oracles over every modulus up to 64.
    #[test]
    fn exhaustive_divisibility_and_quotients() {
        for n in 2..=64u64 {
            let ring = zn(n);
            for c in 1..n as i64 {
                for d in 0..n as i64 {
                    let found = (0..n as i64).find(|e| ring.mul(&b(c), &b(*e)) == b(d));
                    assert_eq!(
                        ring.divides(&b(c), &b(d)).unwrap(),
                        found.is_some(),
                        "n={n} c={c} d={d}"
                    );
                    match ring.quotient(&b(d), &b(c)) {
                        Ok(q) => {
                            assert!(found.is_some());
                            assert_eq!(ring.mul(&q, &b(c)), b(d));
                        }
                        Err(_) => assert!(found.is_none()),
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_form_round_trips() {
        for n in [2u64, 4, 8, 9, 27, 25, 49, 32, 81] {
            let ring = zn(n);
            let pp = ring.as_prime_power().unwrap();
            for c in 1..n as i64 {
                let (u, v) = pp.canonical_form(&b(c));
                assert!(v < pp.exponent());
                assert!(!(&u % BigInt::from(pp.prime())).is_zero());
                assert_eq!(ring.mul(&u, &pp.power(v)), b(c));
            }
        }
    }

    #[test]
    fn symmetric_display() {
        let r = zn(9);
        assert_eq!(r.symmetric(&b(6)), b(-3));
        assert_eq!(r.symmetric(&b(4)), b(4));
        assert_eq!(zn(8).symmetric(&b(4)), b(4));
        assert_eq!(zn(8).symmetric(&b(7)), b(-1));
    }

    #[test]
    fn normalizing_units_and_annihilators() {
        let r = zn(9);
        let u = r.normalizing_unit(&b(6));
        assert_eq!(r.mul(&u, &b(6)), b(3));
        assert_eq!(r.annihilator(&b(6)), Some(b(3)));
        assert_eq!(r.annihilator(&b(2)), None);
        assert_eq!(zn(8).annihilator(&b(4)), Some(b(2)));
        assert_eq!(Ring::Integers.normalizing_unit(&b(-5)), b(-1));
        assert_eq!(Ring::Integers.lcm_cofactors(&b(4), &b(6)).unwrap(), (b(3), b(2)));
        let (a, c) = zn(8).lcm_cofactors(&b(6), &b(4)).unwrap();
        assert_eq!(zn(8).mul(&a, &b(6)), zn(8).mul(&c, &b(4)));
    }
}
