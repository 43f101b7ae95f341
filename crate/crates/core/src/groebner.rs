//! Strong Gröbner bases over the integers and over `Z/p^mZ`.
//!
//! Buchberger's loop with three kinds of critical polynomials:
//!
//! * S-polynomials, built from the lcm of the leading *terms* (coefficient
//!   lcm times monomial lcm);
//! * G-polynomials over the integers, the Bézout combination that makes the
//!   gcd of two leading coefficients a leading coefficient of the ideal;
//! * A-polynomials over `Z/p^mZ`, `p^{m-v} * f` for a leading coefficient
//!   of valuation `v > 0`.
//!
//! Pairs are taken by the normal strategy (smallest lcm degree, then FIFO).
//! S-pairs may be skipped by the chain criterion; every finished basis is
//! then re-checked against all critical polynomials, and the loop restarts
//! without the criterion if the check finds anything left over.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::coeff::{gcd_ext, Ring};
use crate::division::{reduce_terms, strong_reduce, strong_reduce_with_cofactors, sub_scaled, Leads};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, PolyError, PolyRing, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("Gröbner bases are computed over the integers or Z/p^mZ, not over a {0} ring")]
    UnsupportedRing(&'static str),
    #[error("pair budget of {budget} exhausted with {basis_len} basis elements and {pending} pending pairs")]
    BudgetExhausted {
        budget: usize,
        basis_len: usize,
        pending: usize,
    },
    #[error("basis is not certified")]
    Uncertified,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("full lex is not an elimination order for {0:?}: dropped variables must precede all others")]
    NotEliminationOrder(Vec<String>),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug)]
pub struct GroebnerConfig {
    /// Maximum number of critical polynomials to reduce before giving up.
    pub budget: Option<usize>,
    /// Record, for every basis element, cofactors over the input generators.
    pub track_cofactors: bool,
    pub chain_criterion: bool,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        Self {
            budget: None,
            track_cofactors: false,
            chain_criterion: true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GroebnerStats {
    pub pairs_created: usize,
    pub pairs_reduced: usize,
    pub chain_pruned: usize,
    pub zero_reductions: usize,
    pub peak_basis: usize,
    pub certification_rounds: usize,
}

/// Which critical polynomial a certification failure came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Critical {
    S(usize, usize),
    G(usize, usize),
    A(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ctx: PolyRing,
    basis: Vec<Polynomial>,
    order: MonomialOrder,
    certified: bool,
    stats: GroebnerStats,
    provenance: Option<Provenance>,
}

/// `basis[i] = sum_k cofactors[i][k] * inputs[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub inputs: Vec<Polynomial>,
    pub cofactors: Vec<Vec<Polynomial>>,
}

impl GroebnerBasis {
    pub fn context(&self) -> &PolyRing {
        &self.ctx
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Polynomial> {
        self.basis
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn stats(&self) -> &GroebnerStats {
        &self.stats
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        strong_reduce(f, &self.basis)
    }
}

/// Critical polynomials of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPolys {
    pub spoly: Polynomial,
    pub gpoly: Option<Polynomial>,
    pub apoly_f: Option<Polynomial>,
    pub apoly_g: Option<Polynomial>,
}

fn supported(ring: &Ring) -> Result<(), GroebnerError> {
    match ring {
        Ring::Composite(_) => Err(GroebnerError::UnsupportedRing("composite")),
        _ => Ok(()),
    }
}

pub fn critical_polys(f: &Polynomial, g: &Polynomial) -> Result<CriticalPolys, GroebnerError> {
    f.check_compatible(g)?;
    supported(f.ring())?;
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial.into());
    }
    Ok(CriticalPolys {
        spoly: spoly(f, g),
        gpoly: gpoly(f, g),
        apoly_f: apoly(f),
        apoly_g: apoly(g),
    })
}

fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let (a, b) = ring.lcm_cofactors(fc, gc).expect("supported ring");
    let l = fm.lcm(gm);
    let left = f.mul_term(&a, &l.div(fm).expect("lcm"));
    let terms = sub_scaled(ring, left.terms(), g.terms(), &b, &l.div(gm).expect("lcm"));
    Polynomial::from_sorted(f.context().clone(), terms)
}

fn gpoly(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let ring = f.ring();
    if !matches!(ring, Ring::Integers) {
        return None;
    }
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    if (gc % fc).is_zero() || (fc % gc).is_zero() {
        return None;
    }
    let (_, s, t) = gcd_ext(fc, gc);
    let l = fm.lcm(gm);
    let left = f.mul_term(&s, &l.div(fm).expect("lcm"));
    let right = g.mul_term(&t, &l.div(gm).expect("lcm"));
    Some(&left + &right)
}

fn apoly(f: &Polynomial) -> Option<Polynomial> {
    let c = f.leading_coeff()?;
    f.ring().annihilator(c).map(|a| f.scale(&a))
}

/// Coefficient part of a term lcm, up to units.
fn coeff_lcm(ring: &Ring, a: &BigInt, b: &BigInt) -> BigInt {
    match ring {
        Ring::Integers => a.lcm(b),
        Ring::PrimePower(pp) => pp.power(pp.valuation(a).max(pp.valuation(b))),
        Ring::Composite(_) => unreachable!("rejected before the loop"),
    }
}

#[derive(Clone, Debug)]
struct Task {
    kind: Critical,
    degree: u32,
    seq: u64,
    /// Term lcm, for the chain criterion (S tasks only).
    lcm: Option<(Monomial, BigInt)>,
}

struct Engine<'a> {
    ctx: PolyRing,
    config: &'a GroebnerConfig,
    polys: Vec<Polynomial>,
    cofs: Vec<Vec<Polynomial>>,
    leads: Leads,
    tasks: Vec<Task>,
    seq: u64,
    ninputs: usize,
    chain: bool,
    stats: GroebnerStats,
}

impl<'a> Engine<'a> {
    fn new(ctx: &PolyRing, config: &'a GroebnerConfig, ninputs: usize, chain: bool) -> Self {
        Engine {
            ctx: ctx.clone(),
            config,
            polys: Vec::new(),
            cofs: Vec::new(),
            leads: Leads::new(&[]),
            tasks: Vec::new(),
            seq: 0,
            ninputs,
            chain,
            stats: GroebnerStats::default(),
        }
    }

    fn ring(&self) -> &Ring {
        self.ctx.ring()
    }

    fn tracking(&self) -> bool {
        self.config.track_cofactors
    }

    fn unit_cof(&self, k: usize) -> Vec<Polynomial> {
        if !self.tracking() {
            return Vec::new();
        }
        (0..self.ninputs)
            .map(|i| if i == k { self.ctx.one() } else { self.ctx.zero() })
            .collect()
    }

    fn term_lcm(&self, i: usize, j: usize) -> (Monomial, BigInt) {
        let (im, ic) = self.polys[i].leading_term().expect("nonzero");
        let (jm, jc) = self.polys[j].leading_term().expect("nonzero");
        (im.lcm(jm), coeff_lcm(self.ring(), ic, jc))
    }

    fn same_term(&self, a: &(Monomial, BigInt), b: &(Monomial, BigInt)) -> bool {
        a.0 == b.0 && a.1 == b.1
    }

    fn insert(&mut self, h: Polynomial, cof: Vec<Polynomial>) {
        let u = self.ring().normalizing_unit(h.leading_coeff().expect("nonzero"));
        let (h, cof) = if u.is_one() {
            (h, cof)
        } else {
            let cof = cof.iter().map(|c| c.scale(&u)).collect();
            (h.scale(&u), cof)
        };
        let new = self.polys.len();
        let (hm, hc) = {
            let (m, c) = h.leading_term().expect("nonzero");
            (m.clone(), c.clone())
        };
        self.polys.push(h);
        self.cofs.push(cof);
        self.leads.push(&self.polys[new]);

        if self.chain {
            let ring = self.ctx.ring().clone();
            let mut keep = Vec::with_capacity(self.tasks.len());
            let tasks = std::mem::take(&mut self.tasks);
            for t in tasks {
                let prune = match (t.kind, &t.lcm) {
                    (Critical::S(i, j), Some(l)) => {
                        hm.divides(&l.0)
                            && ring.divides(&hc, &l.1).unwrap_or(false)
                            && !self.same_term(&self.term_lcm(i, new), l)
                            && !self.same_term(&self.term_lcm(j, new), l)
                    }
                    _ => false,
                };
                if prune {
                    self.stats.chain_pruned += 1;
                } else {
                    keep.push(t);
                }
            }
            self.tasks = keep;
        }

        for i in 0..new {
            let l = self.term_lcm(i, new);
            let degree = l.0.degree();
            self.push_task(Critical::S(i, new), degree, Some(l));
            if matches!(self.ring(), Ring::Integers) {
                let ic = self.polys[i].leading_coeff().expect("nonzero");
                if !(&hc % ic).is_zero() && !(ic % &hc).is_zero() {
                    self.push_task(Critical::G(i, new), degree, None);
                }
            }
        }
        if self.ring().annihilator(&hc).is_some() {
            self.push_task(Critical::A(new), hm.degree(), None);
        }
        self.stats.peak_basis = self.stats.peak_basis.max(self.polys.len());
    }

    fn push_task(&mut self, kind: Critical, degree: u32, lcm: Option<(Monomial, BigInt)>) {
        self.seq += 1;
        self.stats.pairs_created += 1;
        self.tasks.push(Task {
            kind,
            degree,
            seq: self.seq,
            lcm,
        });
    }

    fn pop_task(&mut self) -> Option<Task> {
        let best = self
            .tasks
            .iter()
            .enumerate()
            .min_by_key(|(_, t)| (t.degree, t.seq))
            .map(|(i, _)| i)?;
        Some(self.tasks.swap_remove(best))
    }

    fn combine(&self, parts: &[(&BigInt, &Monomial, usize)]) -> Vec<Polynomial> {
        if !self.tracking() {
            return Vec::new();
        }
        (0..self.ninputs)
            .map(|k| {
                parts.iter().fold(self.ctx.zero(), |acc, (c, m, i)| {
                    &acc + &self.cofs[*i][k].mul_term(c, m)
                })
            })
            .collect()
    }

    /// Critical polynomial of a task with its cofactors.
    fn critical(&self, kind: Critical) -> (Polynomial, Vec<Polynomial>) {
        match kind {
            Critical::S(i, j) => {
                let (f, g) = (&self.polys[i], &self.polys[j]);
                let (fm, fc) = f.leading_term().expect("nonzero");
                let (gm, gc) = g.leading_term().expect("nonzero");
                let (a, b) = self.ring().lcm_cofactors(fc, gc).expect("supported");
                let l = fm.lcm(gm);
                let (sf, sg) = (l.div(fm).expect("lcm"), l.div(gm).expect("lcm"));
                let nb = self.ring().neg(&b);
                let cof = self.combine(&[(&a, &sf, i), (&nb, &sg, j)]);
                (spoly(f, g), cof)
            }
            Critical::G(i, j) => {
                let (f, g) = (&self.polys[i], &self.polys[j]);
                let (fm, fc) = f.leading_term().expect("nonzero");
                let (gm, gc) = g.leading_term().expect("nonzero");
                let (_, s, t) = gcd_ext(fc, gc);
                let l = fm.lcm(gm);
                let (sf, sg) = (l.div(fm).expect("lcm"), l.div(gm).expect("lcm"));
                let cof = self.combine(&[(&s, &sf, i), (&t, &sg, j)]);
                (gpoly(f, g).expect("G task only for incomparable coefficients"), cof)
            }
            Critical::A(i) => {
                let f = &self.polys[i];
                let a = self
                    .ring()
                    .annihilator(f.leading_coeff().expect("nonzero"))
                    .expect("A task only for zero divisors");
                let one = Monomial::one(self.ctx.nvars());
                let cof = self.combine(&[(&a, &one, i)]);
                (f.scale(&a), cof)
            }
        }
    }

    /// Full strong reduction against the current basis, updating cofactors.
    fn reduce(&self, p: &Polynomial, cof: Vec<Polynomial>) -> (Polynomial, Vec<Polynomial>) {
        if !self.tracking() {
            return (reduce_terms(p, &self.polys, &self.leads, None), cof);
        }
        let mut qs = vec![Vec::new(); self.polys.len()];
        let r = reduce_terms(p, &self.polys, &self.leads, Some(&mut qs));
        let mut cof = cof;
        for (i, q) in qs.into_iter().enumerate() {
            if q.is_empty() {
                continue;
            }
            let q = self.ctx.from_terms(q);
            for (k, c) in cof.iter_mut().enumerate() {
                *c = &*c - &(&q * &self.cofs[i][k]);
            }
        }
        (r, cof)
    }

    fn run(&mut self) -> Result<(), GroebnerError> {
        while let Some(task) = self.pop_task() {
            if let Some(budget) = self.config.budget {
                if self.stats.pairs_reduced >= budget {
                    return Err(GroebnerError::BudgetExhausted {
                        budget,
                        basis_len: self.polys.len(),
                        pending: self.tasks.len() + 1,
                    });
                }
            }
            self.stats.pairs_reduced += 1;
            let (p, cof) = self.critical(task.kind);
            let (r, cof) = self.reduce(&p, cof);
            if r.is_zero() {
                self.stats.zero_reductions += 1;
            } else {
                self.insert(r, cof);
            }
        }
        Ok(())
    }

    /// Minimal, tail-reduced basis with normalized leading coefficients.
    fn reduced_basis(&self) -> (Vec<Polynomial>, Vec<Vec<Polynomial>>) {
        let ring = self.ring();
        let key = |p: &Polynomial| {
            let (m, c) = p.leading_term().expect("nonzero");
            let size = match ring {
                Ring::PrimePower(pp) => BigInt::from(pp.valuation(c)),
                _ => c.clone(),
            };
            (m.clone(), size)
        };
        let mut idx: Vec<usize> = (0..self.polys.len()).collect();
        idx.sort_by_key(|&i| (key(&self.polys[i]), i));
        let mut kept: Vec<usize> = Vec::new();
        for i in idx {
            let (m, c) = self.polys[i].leading_term().expect("nonzero");
            let redundant = kept.iter().any(|&k| {
                let (km, kc) = self.polys[k].leading_term().expect("nonzero");
                km.divides(m) && ring.divides(kc, c).unwrap_or(false)
            });
            if !redundant {
                kept.push(i);
            }
        }
        let mut polys: Vec<Polynomial> = kept.iter().map(|&i| self.polys[i].clone()).collect();
        let mut cofs: Vec<Vec<Polynomial>> = kept.iter().map(|&i| self.cofs[i].clone()).collect();
        for n in 0..polys.len() {
            let lead = polys[n].terms()[0].clone();
            let tail = Polynomial::from_sorted(self.ctx.clone(), polys[n].terms()[1..].to_vec());
            let others: Vec<Polynomial> = polys
                .iter()
                .enumerate()
                .map(|(k, p)| if k == n { self.ctx.zero() } else { p.clone() })
                .collect();
            let red = strong_reduce_with_cofactors(&tail, &others);
            let mut terms = vec![lead];
            terms.extend(red.remainder.terms().iter().cloned());
            let new = Polynomial::from_sorted(self.ctx.clone(), terms);
            if self.tracking() {
                for (k, q) in red.quotients.iter().enumerate() {
                    if q.is_zero() {
                        continue;
                    }
                    for t in 0..self.ninputs {
                        let delta = q * &cofs[k][t];
                        cofs[n][t] = &cofs[n][t] - &delta;
                    }
                }
            }
            polys[n] = new;
        }
        (polys, cofs)
    }
}

pub fn buchberger(
    ctx: &PolyRing,
    gens: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    supported(ctx.ring())?;
    for g in gens {
        g.check_compatible(&ctx.zero())?;
    }
    let mut engine = Engine::new(ctx, config, gens.len(), config.chain_criterion);
    for (k, g) in gens.iter().enumerate() {
        if !g.is_zero() {
            let cof = engine.unit_cof(k);
            engine.insert(g.clone(), cof);
        }
    }
    let mut rounds = 0;
    loop {
        engine.run()?;
        rounds += 1;
        let (basis, cofs) = engine.reduced_basis();
        let failures = certify(&basis);
        if failures.is_empty() {
            let mut stats = engine.stats.clone();
            stats.certification_rounds = rounds;
            let provenance = config.track_cofactors.then(|| Provenance {
                inputs: gens.to_vec(),
                cofactors: cofs,
            });
            return Ok(GroebnerBasis {
                ctx: ctx.clone(),
                basis,
                order: MonomialOrder::FullLex,
                certified: true,
                stats,
                provenance,
            });
        }
        // Something slipped past the chain criterion: start over from the
        // reduced basis with every pair.
        let stats = engine.stats.clone();
        engine = Engine::new(ctx, config, gens.len(), false);
        engine.stats = stats;
        for (p, c) in basis.into_iter().zip(cofs) {
            engine.insert(p, c);
        }
    }
}

/// Independent re-check: every S-, G- and A-polynomial of `basis` must
/// strongly reduce to zero. Returns the offending critical polynomials.
pub fn certify(basis: &[Polynomial]) -> Vec<Critical> {
    let mut failures = Vec::new();
    for i in 0..basis.len() {
        if let Some(a) = apoly(&basis[i]) {
            if !strong_reduce(&a, basis).is_zero() {
                failures.push(Critical::A(i));
            }
        }
        for j in i + 1..basis.len() {
            if !strong_reduce(&spoly(&basis[i], &basis[j]), basis).is_zero() {
                failures.push(Critical::S(i, j));
            }
            if let Some(g) = gpoly(&basis[i], &basis[j]) {
                if !strong_reduce(&g, basis).is_zero() {
                    failures.push(Critical::G(i, j));
                }
            }
        }
    }
    failures
}

/// Keeps the basis elements free of `drop`, which must be the most
/// significant variables of the set.
pub fn eliminate(gb: &GroebnerBasis, drop: &[&str]) -> Result<GroebnerBasis, GroebnerError> {
    let vars = gb.ctx.vars();
    let mut idx = Vec::with_capacity(drop.len());
    for name in drop {
        idx.push(
            vars.index_of(name)
                .ok_or_else(|| GroebnerError::UnknownVariable(name.to_string()))?,
        );
    }
    idx.sort_unstable();
    idx.dedup();
    if idx.iter().enumerate().any(|(n, &i)| n != i) {
        return Err(GroebnerError::NotEliminationOrder(
            drop.iter().map(|s| s.to_string()).collect(),
        ));
    }
    let sub = PolyRing::new(gb.ctx.ring().clone(), Arc::new(vars.without(&idx)));
    let mut basis = Vec::new();
    for g in &gb.basis {
        if idx.iter().any(|&i| g.uses_var(i)) {
            continue;
        }
        basis.push(g.reindex(&sub)?);
    }
    Ok(GroebnerBasis {
        ctx: sub,
        basis,
        order: gb.order,
        certified: gb.certified,
        stats: gb.stats.clone(),
        provenance: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// Quotients over the basis when `member` holds: `f = sum q_i g_i`.
    pub certificate: Option<Vec<Polynomial>>,
}

pub fn member(f: &Polynomial, gb: &GroebnerBasis) -> Result<Membership, GroebnerError> {
    if !gb.certified {
        return Err(GroebnerError::Uncertified);
    }
    f.check_compatible(&gb.ctx.zero())?;
    let red = strong_reduce_with_cofactors(f, &gb.basis);
    let member = red.remainder.is_zero();
    Ok(Membership {
        member,
        certificate: member.then_some(red.quotients),
    })
}

/// Whether every polynomial of `gens` lies in the ideal of `gb`.
pub fn contains_all(gb: &GroebnerBasis, gens: &[Polynomial]) -> Result<bool, GroebnerError> {
    for g in gens {
        if !member(g, gb)?.member {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn ideal_equal(
    ctx: &PolyRing,
    a: &[Polynomial],
    b: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<bool, GroebnerError> {
    let ga = buchberger(ctx, a, config)?;
    if !contains_all(&ga, b)? {
        return Ok(false);
    }
    let gb = buchberger(ctx, b, config)?;
    contains_all(&gb, a)
}
