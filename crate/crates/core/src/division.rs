//! Fraction-free pseudo-division under the T-only order, and strong
//! reduction under full lex.
//!
//! Both pseudo-division regimes return `a, g_1..g_t, s` with
//! `a * f = g_1 f_1 + ... + g_t f_t + s`. In the PID regime `a` is a product
//! of leading coefficients `lc(f_j)`; over `Z/p^mZ` it is a product of the
//! reduced parts `xLC(f_j)`, which always have a unit coefficient and so
//! never annihilate anything.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeff::Ring;
use crate::order::{leading_data, LeadingData, MonomialOrder, OrderError};
use crate::poly::{Monomial, PolyError, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivisionError {
    #[error("divisor {0} is the zero polynomial")]
    ZeroDivisor(usize),
    #[error("{regime} division is not defined over a {ring} ring")]
    WrongRing { regime: &'static str, ring: &'static str },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Order(#[from] OrderError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// Over a principal ideal domain (the integers or a prime field).
    Pid,
    /// Over `Z/p^mZ`.
    PrimePowerQuotient,
}

impl std::str::FromStr for Regime {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "pid" => Ok(Regime::Pid),
            "ppq" => Ok(Regime::PrimePowerQuotient),
            other => Err(format!("unknown regime `{other}` (expected pid or ppq)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionStep {
    /// 0-based index into the divisor list.
    pub divisor: usize,
    /// Factor the running polynomial was multiplied by.
    pub scale: Polynomial,
    /// T-monomial that was cancelled.
    pub leading: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub multiplier: Polynomial,
    pub cofactors: Vec<Polynomial>,
    pub remainder: Polynomial,
    pub trace: Vec<DivisionStep>,
}

impl DivisionResult {
    /// Re-expands `a*f - (sum g_i f_i + s)`.
    pub fn defect(&self, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
        let mut rhs = self.remainder.clone();
        for (g, d) in self.cofactors.iter().zip(divisors) {
            rhs = &rhs + &(g * d);
        }
        &(&self.multiplier * f) - &rhs
    }

    /// Product of the recorded scale factors.
    pub fn trace_product(&self) -> Polynomial {
        self.trace
            .iter()
            .fold(self.multiplier.context().one(), |acc, s| &acc * &s.scale)
    }
}

pub fn pseudo_divide_pid(f: &Polynomial, divisors: &[Polynomial]) -> Result<DivisionResult, DivisionError> {
    pseudo_divide(f, divisors, Regime::Pid)
}

pub fn pseudo_divide_ppq(f: &Polynomial, divisors: &[Polynomial]) -> Result<DivisionResult, DivisionError> {
    pseudo_divide(f, divisors, Regime::PrimePowerQuotient)
}

pub fn pseudo_divide(f: &Polynomial, divisors: &[Polynomial], regime: Regime) -> Result<DivisionResult, DivisionError> {
    let ring = f.ring().clone();
    let supported = match (regime, &ring) {
        (Regime::Pid, Ring::Integers) => true,
        (Regime::Pid, Ring::PrimePower(pp)) => pp.exponent() == 1,
        (Regime::PrimePowerQuotient, Ring::PrimePower(_)) => true,
        _ => false,
    };
    if !supported {
        return Err(DivisionError::WrongRing {
            regime: match regime {
                Regime::Pid => "pid",
                Regime::PrimePowerQuotient => "ppq",
            },
            ring: ring.kind_name(),
        });
    }
    for (i, d) in divisors.iter().enumerate() {
        f.check_compatible(d)?;
        if d.is_zero() {
            return Err(DivisionError::ZeroDivisor(i));
        }
    }
    let lds: Vec<LeadingData> = divisors
        .iter()
        .map(|d| leading_data(d, MonomialOrder::TLex))
        .collect::<Result<_, _>>()?;

    let ctx = f.context().clone();
    let mut g = f.clone();
    let mut s = ctx.zero();
    let mut a = ctx.one();
    let mut cof = vec![ctx.zero(); divisors.len()];
    let mut trace = Vec::new();

    while !g.is_zero() {
        let ld = leading_data(&g, MonomialOrder::TLex)?;
        let pick = lds.iter().position(|d| {
            d.lm.divides(&ld.lm)
                && match regime {
                    Regime::Pid => true,
                    Regime::PrimePowerQuotient => ring.divides(&d.content, &ld.content).unwrap_or(false),
                }
        });
        let Some(j) = pick else {
            s = &s + &ld.lt;
            g = &g - &ld.lt;
            continue;
        };
        let shift = ld.lm.div(&lds[j].lm).expect("divisibility checked");
        let (scale, mult) = match regime {
            Regime::Pid => (lds[j].lc.clone(), ld.lc.clone()),
            Regime::PrimePowerQuotient => {
                let q = ring
                    .quotient(&ld.content, &lds[j].content)
                    .expect("divisibility checked");
                (lds[j].xlc.clone(), ld.xlc.scale(&q))
            }
        };
        let mult = mult.mul_term(&BigInt::one(), &shift);
        let next = &(&scale * &g) - &(&mult * &divisors[j]);
        g = next;
        for (i, c) in cof.iter_mut().enumerate() {
            *c = &scale * c;
            if i == j {
                *c = &*c + &mult;
            }
        }
        s = &scale * &s;
        a = &scale * &a;
        trace.push(DivisionStep {
            divisor: j,
            scale,
            leading: ld.lm,
        });
    }
    Ok(DivisionResult {
        multiplier: a,
        cofactors: cof,
        remainder: s,
        trace,
    })
}

/// Outcome of a strong reduction together with the quotient of every basis
/// element: `f = sum quotients[i] * basis[i] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub remainder: Polynomial,
    pub quotients: Vec<Polynomial>,
}

/// Full strong reduction under full lex: a term `c*m` is rewritten by the
/// first `g` with `LM(g) | m` and `lc(g) | c`.
pub fn strong_reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let leads = Leads::new(basis);
    reduce_terms(f, basis, &leads, None)
}

pub fn strong_reduce_with_cofactors(f: &Polynomial, basis: &[Polynomial]) -> Reduction {
    let leads = Leads::new(basis);
    let mut qs: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); basis.len()];
    let remainder = reduce_terms(f, basis, &leads, Some(&mut qs));
    let ctx = f.context();
    Reduction {
        remainder,
        quotients: qs.into_iter().map(|t| ctx.from_terms(t)).collect(),
    }
}

/// Cached leading data for fast divisor lookup.
pub(crate) struct Leads {
    entries: Vec<Option<(Monomial, BigInt, u32)>>,
}

impl Leads {
    pub(crate) fn new(basis: &[Polynomial]) -> Self {
        let mut l = Leads {
            entries: Vec::with_capacity(basis.len()),
        };
        for g in basis {
            l.push(g);
        }
        l
    }

    pub(crate) fn push(&mut self, g: &Polynomial) {
        self.entries.push(g.leading_term().map(|(m, c)| {
            let v = match g.ring() {
                Ring::PrimePower(pp) => pp.valuation(c),
                _ => 0,
            };
            (m.clone(), c.clone(), v)
        }));
    }

    /// First basis index whose leading term strongly divides `c*m`.
    pub(crate) fn find(&self, ring: &Ring, m: &Monomial, c: &BigInt) -> Option<usize> {
        let mut cval: Option<u32> = None;
        for (i, e) in self.entries.iter().enumerate() {
            let Some((lm, lc, v)) = e else { continue };
            if !lm.divides(m) {
                continue;
            }
            let ok = match ring {
                Ring::PrimePower(pp) => *v <= *cval.get_or_insert_with(|| pp.valuation(c)),
                Ring::Integers => (c % lc).is_zero(),
                Ring::Composite(_) => ring.divides(lc, c).unwrap_or(false),
            };
            if ok {
                return Some(i);
            }
        }
        None
    }
}

/// `a - q * shift * g`, merged in descending order.
pub(crate) fn sub_scaled(
    ring: &Ring,
    a: &[(Monomial, BigInt)],
    g: &[(Monomial, BigInt)],
    q: &BigInt,
    shift: &Monomial,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().filter_map(|(m, c)| {
        let p = ring.mul(q, c);
        (!p.is_zero()).then(|| (m.mul(shift), p))
    });
    let mut next_g = gi.next();
    while let Some((gm, gc)) = next_g.take() {
        while i < a.len() && a[i].0 > gm {
            out.push(a[i].clone());
            i += 1;
        }
        if i < a.len() && a[i].0 == gm {
            let c = ring.sub(&a[i].1, &gc);
            if !c.is_zero() {
                out.push((gm, c));
            }
            i += 1;
        } else {
            out.push((gm, ring.neg(&gc)));
        }
        next_g = gi.next();
    }
    out.extend(a[i..].iter().cloned());
    out
}

pub(crate) fn reduce_terms(
    f: &Polynomial,
    basis: &[Polynomial],
    leads: &Leads,
    mut quotients: Option<&mut Vec<Vec<(Monomial, BigInt)>>>,
) -> Polynomial {
    let ring = f.ring();
    let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
    let mut rest: Vec<(Monomial, BigInt)> = f.terms().to_vec();
    let mut start = 0;
    while start < rest.len() {
        let (m, c) = &rest[start];
        match leads.find(ring, m, c) {
            None => {
                rem.push(rest[start].clone());
                start += 1;
            }
            Some(i) => {
                let g = &basis[i];
                let (gm, gc) = g.leading_term().expect("nonzero basis element");
                let q = ring.quotient(c, gc).expect("divisibility checked");
                let shift = m.div(gm).expect("divisibility checked");
                if let Some(qs) = quotients.as_deref_mut() {
                    qs[i].push((shift.clone(), q.clone()));
                }
                rest = sub_scaled(ring, &rest[start..], g.terms(), &q, &shift);
                start = 0;
            }
        }
    }
    Polynomial::from_sorted(f.context().clone(), rem)
}
