//! Sparse multivariate polynomials over a [`Ring`].
//!
//! Variables live in a [`VariableSet`] listed from most to least significant,
//! in three blocks: the auxiliary saturation variable `y`, the Rees
//! variables `T_k_j` (or the target variables `t_j` of an image ring), and
//! the base variables `x`. Terms are stored in descending lexicographic order
//! of their exponent vectors, which is exactly the full lex order with that
//! block structure.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use thiserror::Error;

use crate::coeff::{Ring, RingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live in different rings or variable sets")]
    ContextMismatch,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("variable `{0}` is out of block order (y, then T/t, then x)")]
    BlockOrder(String),
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("the zero polynomial has no content")]
    ZeroPolynomial,
    #[error("variable `{0}` has no image in the target ring")]
    MissingImage(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Rees variable `T_{k,j}`: generator `f_k` of ideal `I_j`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TVar {
    pub k: usize,
    pub j: usize,
}

impl TVar {
    pub fn new(k: usize, j: usize) -> Self {
        Self { k, j }
    }

    pub fn name(&self) -> String {
        format!("T_{}_{}", self.k, self.j)
    }

    /// Parses the `T_<k>_<j>` naming convention.
    pub fn parse_name(name: &str) -> Option<TVar> {
        let rest = name.strip_prefix("T_")?;
        let (k, j) = rest.split_once('_')?;
        let k: usize = k.parse().ok()?;
        let j: usize = j.parse().ok()?;
        (k >= 1 && j >= 1 && name == TVar::new(k, j).name()).then_some(TVar::new(k, j))
    }
}

impl fmt::Display for TVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}_{}", self.k, self.j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VarKind {
    /// Saturation variable `y`.
    Aux,
    T(TVar),
    /// Image-ring variable `t_j`.
    Target(usize),
    X,
}

impl VarKind {
    fn block(&self) -> u8 {
        match self {
            VarKind::Aux => 0,
            VarKind::T(_) | VarKind::Target(_) => 1,
            VarKind::X => 2,
        }
    }

    /// Variables carrying the order under the T-only regime.
    pub fn is_ordered(&self) -> bool {
        !matches!(self, VarKind::X)
    }

    /// Kind implied by a bare name: `T_k_j` is a Rees variable, anything else
    /// is a base variable.
    pub fn infer(name: &str) -> VarKind {
        match TVar::parse_name(name) {
            Some(t) => VarKind::T(t),
            None => VarKind::X,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
}

impl Variable {
    pub fn new(name: impl Into<String>, kind: VarKind) -> Self {
        Self {
            name: name.into(),
            kind,
        }
    }
}

/// Ordered list of variables, most significant first.
#[derive(Clone, Debug)]
pub struct VariableSet {
    vars: Vec<Variable>,
    index: HashMap<String, usize>,
}

impl PartialEq for VariableSet {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for VariableSet {}

impl VariableSet {
    pub fn new(vars: Vec<Variable>) -> Result<Self, PolyError> {
        let mut index = HashMap::with_capacity(vars.len());
        let mut block = 0;
        for (i, v) in vars.iter().enumerate() {
            if index.insert(v.name.clone(), i).is_some() {
                return Err(PolyError::DuplicateVariable(v.name.clone()));
            }
            if v.kind.block() < block {
                return Err(PolyError::BlockOrder(v.name.clone()));
            }
            block = v.kind.block();
        }
        Ok(Self { vars, index })
    }

    /// Variables with kinds inferred from their names, in the given order.
    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self, PolyError> {
        Self::new(
            names
                .iter()
                .map(|n| Variable::new(n.as_ref(), VarKind::infer(n.as_ref())))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn get(&self, i: usize) -> &Variable {
        &self.vars[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Variable> {
        self.vars.iter()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name.clone()).collect()
    }

    /// The set with the given variable indices removed.
    pub fn without(&self, drop: &[usize]) -> VariableSet {
        let vars = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, v)| v.clone())
            .collect();
        VariableSet::new(vars).expect("subset of a valid variable set")
    }
}

/// Exponent vector over a [`VariableSet`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 12]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn set_exponent(&mut self, i: usize, e: u32) {
        self.0[i] = e;
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Keeps only the exponents selected by `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Monomial {
        Monomial(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &e)| if keep(i) { e } else { 0 })
                .collect(),
        )
    }
}

/// A coefficient ring together with a variable set.
#[derive(Clone, Debug)]
pub struct PolyRing {
    ring: Arc<Ring>,
    vars: Arc<VariableSet>,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
    }
}

impl Eq for PolyRing {}

impl PolyRing {
    pub fn new(ring: Arc<Ring>, vars: Arc<VariableSet>) -> Self {
        Self { ring, vars }
    }

    pub fn from_parts(ring: Ring, vars: VariableSet) -> Self {
        Self::new(Arc::new(ring), Arc::new(vars))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ctx: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(BigInt::one())
    }

    pub fn constant(&self, c: BigInt) -> Polynomial {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn term(&self, c: BigInt, m: Monomial) -> Polynomial {
        let c = self.ring.reduce(c);
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ctx: self.clone(),
            terms,
        }
    }

    pub fn var(&self, name: &str) -> Result<Polynomial, PolyError> {
        let i = self.vars.index_of(name).ok_or_else(|| PolyError::UnknownVariable {
            name: name.to_string(),
            position: 0,
        })?;
        let mut m = Monomial::one(self.nvars());
        m.set_exponent(i, 1);
        Ok(self.term(BigInt::one(), m))
    }

    /// Sorts, merges and canonicalizes arbitrary terms.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Polynomial {
        let mut terms: Vec<(Monomial, BigInt)> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        let ring = &self.ring;
        let terms = out
            .into_iter()
            .filter_map(|(m, c)| {
                let c = ring.reduce(c);
                (!c.is_zero()).then_some((m, c))
            })
            .collect();
        Polynomial {
            ctx: self.clone(),
            terms,
        }
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, PolyError> {
        let raw = parse_raw(text)?;
        let mut terms = Vec::with_capacity(raw.len());
        for t in raw {
            let mut m = Monomial::one(self.nvars());
            for (name, e, position) in t.factors {
                let i = self
                    .vars
                    .index_of(&name)
                    .ok_or(PolyError::UnknownVariable { name, position })?;
                m.set_exponent(i, m.exponent(i) + e);
            }
            terms.push((m, t.coeff));
        }
        Ok(self.from_terms(terms))
    }

    /// Same variables over another coefficient ring.
    pub fn with_ring(&self, ring: Arc<Ring>) -> PolyRing {
        PolyRing::new(ring, self.vars.clone())
    }
}

/// Sparse polynomial; terms are nonzero, canonical, and sorted descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ctx: PolyRing,
    terms: Vec<(Monomial, BigInt)>,
}

impl Polynomial {
    pub fn context(&self) -> &PolyRing {
        &self.ctx
    }

    pub fn ring(&self) -> &Ring {
        &self.ctx.ring
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.ctx.vars
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, BigInt)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Whether variable `i` occurs in some term.
    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(i) > 0)
    }

    pub(crate) fn from_sorted(ctx: PolyRing, terms: Vec<(Monomial, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ctx, terms }
    }

    pub fn check_compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let ring = &self.ctx.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { ring.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        ring.sub(&a[i].1, &b[j].1)
                    } else {
                        ring.add(&a[i].1, &b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (m, c) in &b[j..] {
            let c = if negate { ring.neg(c) } else { c.clone() };
            out.push((m.clone(), c));
        }
        Polynomial::from_sorted(self.ctx.clone(), out)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = self.ctx.zero();
        for (m, c) in &small.terms {
            acc = acc.merge(&large.mul_term(c, m), false);
        }
        acc
    }

    pub fn neg(&self) -> Polynomial {
        let ring = &self.ctx.ring;
        Polynomial::from_sorted(
            self.ctx.clone(),
            self.terms.iter().map(|(m, c)| (m.clone(), ring.neg(c))).collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        let ring = &self.ctx.ring;
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, d)| {
                let p = ring.mul(c, d);
                (!p.is_zero()).then(|| (m.clone(), p))
            })
            .collect();
        Polynomial::from_sorted(self.ctx.clone(), terms)
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, c: &BigInt, m: &Monomial) -> Polynomial {
        let ring = &self.ctx.ring;
        let terms = self
            .terms
            .iter()
            .filter_map(|(n, d)| {
                let p = ring.mul(c, d);
                (!p.is_zero()).then(|| (n.mul(m), p))
            })
            .collect();
        Polynomial::from_sorted(self.ctx.clone(), terms)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Multiplies the leading coefficient into normal form (`p^v` over a
    /// prime power, positive over the integers).
    pub fn normalize_leading(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => {
                let u = self.ring().normalizing_unit(c);
                if u.is_one() {
                    self.clone()
                } else {
                    self.scale(&u)
                }
            }
        }
    }

    /// Greatest common divisor of the coefficients: `p^{min val}` over a prime
    /// power; over the integers the gcd, signed so that the reduced polynomial
    /// has a positive leading coefficient.
    pub fn content(&self) -> Result<BigInt, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        match self.ring() {
            Ring::Integers => {
                let g = self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
                Ok(if self.terms[0].1.is_negative() { -g } else { g })
            }
            Ring::PrimePower(pp) => {
                let v = self
                    .terms
                    .iter()
                    .map(|(_, c)| pp.valuation(c))
                    .min()
                    .expect("nonzero polynomial");
                Ok(pp.power(v))
            }
            Ring::Composite(_) => Err(PolyError::Ring(RingError::KindMismatch {
                expected: "integer or prime-power",
                found: "composite",
            })),
        }
    }

    /// `self / content(self)`; representatives in `[0, N)` are divided as
    /// integers, so the result has unit content but is only one of several
    /// lifts.
    pub fn red(&self) -> Result<Polynomial, PolyError> {
        let c = self.content()?;
        Ok(self.exact_div_integer(&c))
    }

    pub(crate) fn exact_div_integer(&self, c: &BigInt) -> Polynomial {
        let ring = &self.ctx.ring;
        let terms = self
            .terms
            .iter()
            .map(|(m, d)| (m.clone(), ring.reduce(d / c)))
            .collect();
        Polynomial::from_sorted(self.ctx.clone(), terms)
    }

    /// Coefficientwise image in component `i` of a composite ring.
    pub fn project(&self, i: usize) -> Result<Polynomial, PolyError> {
        let comps = self.ring().as_composite()?;
        let target = comps.factors().get(i).cloned().ok_or(RingError::ComponentOutOfRange {
            index: i,
            count: comps.factors().len(),
        })?;
        let ctx = self.ctx.with_ring(Arc::new(Ring::PrimePower(target)));
        Ok(self.map_into_ring(&ctx))
    }

    /// Reinterprets the coefficients in the coefficient ring of `ctx`
    /// (same variables), reducing them canonically.
    pub fn map_into_ring(&self, ctx: &PolyRing) -> Polynomial {
        ctx.from_terms(self.terms.iter().cloned())
    }

    /// Moves the polynomial into another variable set, matching variables by
    /// name. Fails if a used variable is missing from the target.
    pub fn reindex(&self, target: &PolyRing) -> Result<Polynomial, PolyError> {
        let map: Vec<Option<usize>> = self.vars().iter().map(|v| target.vars.index_of(&v.name)).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut n = Monomial::one(target.nvars());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(t) => n.set_exponent(t, e),
                    None => {
                        return Err(PolyError::UnknownVariable {
                            name: self.vars().get(i).name.clone(),
                            position: 0,
                        })
                    }
                }
            }
            terms.push((n, c.clone()));
        }
        Ok(target.from_terms(terms))
    }

    /// Ring homomorphism sending variable `i` to `images[i]` (all in `target`).
    pub fn substitute(&self, target: &PolyRing, images: &[Option<Polynomial>]) -> Result<Polynomial, PolyError> {
        let mut cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 || term.is_zero() {
                    continue;
                }
                let img = images
                    .get(i)
                    .and_then(|x| x.as_ref())
                    .ok_or_else(|| PolyError::MissingImage(self.vars().get(i).name.clone()))?;
                img.check_compatible(&target.zero())?;
                let p = cache.entry((i, e)).or_insert_with(|| img.pow(e)).clone();
                term = term.mul_unchecked(&p);
            }
            acc = acc.merge(&term, false);
        }
        Ok(acc)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    /// Panics on mismatched contexts; use [`Polynomial::try_add`] otherwise.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial context mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial context mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial context mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending order; base variables are written before Rees
    /// variables inside each term (`x1*x2*T_2_1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.vars();
        let order: Vec<usize> = (0..vars.len())
            .filter(|&i| vars.get(i).kind == VarKind::X)
            .chain((0..vars.len()).filter(|&i| vars.get(i).kind != VarKind::X))
            .collect();
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let c = self.ring().symmetric(c);
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut first = true;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for &i in &order {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", vars.get(i).name)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// One parsed term before variable resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTerm {
    pub coeff: BigInt,
    /// `(name, exponent, byte position)`.
    pub factors: Vec<(String, u32, usize)>,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> PolyError {
        PolyError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        s.parse::<BigInt>().map_err(|_| PolyError::Syntax {
            position: start,
            message: "expected integer".into(),
        })
    }

    fn ident(&mut self) -> (String, usize) {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        (s.to_string(), start)
    }

    fn factor(&mut self, term: &mut RawTerm) -> Result<(), PolyError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                term.coeff *= n;
                Ok(())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let (name, position) = self.ident();
                let mut e = 1u32;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let at = {
                        self.skip_ws();
                        self.pos
                    };
                    let n = self.integer()?;
                    e = u32::try_from(&n).ok().filter(|&e| e > 0).ok_or(PolyError::Syntax {
                        position: at,
                        message: "exponent must be a positive machine integer".into(),
                    })?;
                }
                term.factors.push((name, e, position));
                Ok(())
            }
            Some(_) => Err(self.err("expected integer or variable")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn term(&mut self, negative: bool) -> Result<RawTerm, PolyError> {
        let mut term = RawTerm {
            coeff: if negative { -BigInt::one() } else { BigInt::one() },
            factors: Vec::new(),
        };
        self.factor(&mut term)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut term)?;
        }
        Ok(term)
    }
}

/// Parses `expr := ['+'|'-'] term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
/// `factor := integer | var ['^' posint]` without resolving variable names.
pub fn parse_raw(text: &str) -> Result<Vec<RawTerm>, PolyError> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut out = Vec::new();
    let mut negative = match lx.peek() {
        Some(b'-') => {
            lx.pos += 1;
            true
        }
        Some(b'+') => {
            lx.pos += 1;
            false
        }
        _ => false,
    };
    loop {
        out.push(lx.term(negative)?);
        match lx.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return Err(lx.err("expected `+`, `-` or `*`")),
        }
        lx.pos += 1;
    }
    Ok(out)
}

/// Variable names used by a polynomial string, in order of appearance.
pub fn variable_names(text: &str) -> Result<Vec<String>, PolyError> {
    let mut names: Vec<String> = Vec::new();
    for t in parse_raw(text)? {
        for (n, _, _) in t.factors {
            if !names.contains(&n) {
                names.push(n);
            }
        }
    }
    Ok(names)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(n: u64, names: &[&str]) -> PolyRing {
        PolyRing::from_parts(Ring::from_modulus(n).unwrap(), VariableSet::from_names(names).unwrap())
    }

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn arithmetic_examples() {
        let r9 = ctx(9, &["x"]);
        let f = r9.parse("3*x").unwrap();
        assert!((&f * &f).is_zero());

        let z = ctx(0, &["x"]);
        let s = &z.parse("2*x+1").unwrap() + &z.parse("-2*x").unwrap();
        assert_eq!(s, z.one());

        let r8 = ctx(8, &["x1", "x2"]);
        let p = &r8.parse("2*x1").unwrap() * &r8.parse("4*x2").unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = ctx(9, &["x"]).parse("x").unwrap();
        let b = ctx(8, &["x"]).parse("x").unwrap();
        assert_eq!(a.try_add(&b), Err(PolyError::ContextMismatch));
        let c = ctx(9, &["y"]).parse("y").unwrap();
        assert_eq!(a.try_mul(&c), Err(PolyError::ContextMismatch));
    }

    #[test]
    fn content_and_red_examples() {
        let r9 = ctx(9, &["T_2_1", "T_1_1", "x1", "x2", "x3"]);
        let f = r9.parse("6*x1^2*x2*T_2_1 - 6*x1*x3*T_1_1").unwrap();
        assert_eq!(f.content().unwrap(), b(3));
        let red = f.red().unwrap();
        assert_eq!(red, r9.parse("2*x1^2*x2*T_2_1 + x1*x3*T_1_1").unwrap());
        assert_eq!(red.scale(&b(3)), f);

        let r8 = ctx(8, &["T_2_1", "T_1_1", "x1", "x2", "x3"]);
        let f = r8.parse("2*x1^2*x2*T_2_1 - 2*x1*x3*T_1_1").unwrap();
        assert_eq!(f.content().unwrap(), b(2));
        assert_eq!(f.red().unwrap(), r8.parse("x1^2*x2*T_2_1 + 3*x1*x3*T_1_1").unwrap());

        let z = ctx(0, &["x"]);
        let f = z.parse("-4*x + 6").unwrap();
        let c = f.content().unwrap();
        assert_eq!(c, b(-2));
        assert_eq!(f.red().unwrap(), z.parse("2*x - 3").unwrap());
        assert_eq!(f.content(), f.content());
        assert_eq!(z.zero().content(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn projection_examples() {
        let r6 = ctx(6, &["x"]);
        let f = r6.parse("3*x + 4").unwrap();
        let p0 = f.project(0).unwrap();
        assert_eq!(p0.to_string(), "x");
        assert_eq!(p0.ring().modulus_u64(), 2);
        assert_eq!(f.project(1).unwrap().to_string(), "1");
        assert!(r6.zero().project(0).unwrap().is_zero());
        assert!(f.project(2).is_err());
        assert!(ctx(9, &["x"]).one().project(0).is_err());
    }

    #[test]
    fn parse_examples() {
        let r9 = ctx(9, &["x1", "x2", "x3"]);
        let f = r9.parse("2*x1^2*x2+6*x3").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.terms()[0], (Monomial::from_exponents(&[2, 1, 0]), b(2)));
        assert_eq!(f.terms()[1], (Monomial::from_exponents(&[0, 0, 1]), b(6)));

        let t = ctx(0, &["T_2_1"]);
        let g = t.parse("-T_2_1").unwrap();
        assert_eq!(g.terms()[0].1, b(-1));
        assert_eq!(g.to_string(), "-T_2_1");

        let x = ctx(0, &["x1"]);
        assert_eq!(x.parse("x1*x1").unwrap(), x.parse("x1^2").unwrap());
        assert_eq!(x.parse(" 2 * 3 * x1 ").unwrap(), x.parse("6*x1").unwrap());
        assert!(x.parse("0").unwrap().is_zero());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let x = ctx(0, &["x1"]);
        assert_eq!(
            x.parse("x1 + z").unwrap_err(),
            PolyError::UnknownVariable {
                name: "z".into(),
                position: 5
            }
        );
        assert!(matches!(x.parse("x1 +"), Err(PolyError::Syntax { position: 4, .. })));
        assert!(matches!(x.parse("x1^0"), Err(PolyError::Syntax { .. })));
        assert!(matches!(x.parse("x1 x1"), Err(PolyError::Syntax { position: 3, .. })));
        assert!(matches!(x.parse(""), Err(PolyError::Syntax { .. })));
    }

    #[test]
    fn render_uses_symmetric_residues() {
        let r9 = ctx(9, &["T_2_1", "T_1_1", "x1", "x2", "x3"]);
        let f = r9.parse("x1*x2*T_2_1 + 6*x3*T_1_1").unwrap();
        assert_eq!(f.to_string(), "x1*x2*T_2_1 - 3*x3*T_1_1");
    }

    #[test]
    fn variable_set_validation() {
        assert!(matches!(
            VariableSet::from_names(&["x", "x"]),
            Err(PolyError::DuplicateVariable(_))
        ));
        assert!(matches!(
            VariableSet::from_names(&["x", "T_1_1"]),
            Err(PolyError::BlockOrder(_))
        ));
        assert_eq!(TVar::parse_name("T_3_2"), Some(TVar::new(3, 2)));
        assert_eq!(TVar::parse_name("T_03_2"), None);
        assert_eq!(TVar::parse_name("T_0_2"), None);
        assert_eq!(
            variable_names("x1*T_1_1 - 3*x2 + x1").unwrap(),
            vec!["x1", "T_1_1", "x2"]
        );
    }

    #[test]
    fn reindex_and_substitute() {
        let a = ctx(0, &["T_1_1", "x1", "x2"]);
        let bctx = ctx(0, &["T_2_1", "T_1_1", "x2", "x1"]);
        let f = a.parse("x1*T_1_1 - x2").unwrap();
        let g = f.reindex(&bctx).unwrap();
        assert_eq!(g, bctx.parse("x1*T_1_1 - x2").unwrap());
        assert!(bctx.parse("T_2_1").unwrap().reindex(&a).is_err());

        // T_1_1 -> x1 + x2, x1 -> x1, x2 -> x2
        let images = vec![
            Some(a.parse("x1 + x2").unwrap()),
            Some(a.var("x1").unwrap()),
            Some(a.var("x2").unwrap()),
        ];
        let h = f.substitute(&a, &images).unwrap();
        assert_eq!(h, a.parse("x1^2 + x1*x2 - x2").unwrap());
    }

    fn arb_poly(n: u64) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        let bound = if n == 0 { 50 } else { n as i64 };
        prop::collection::vec((prop::collection::vec(0u32..3, 3), -bound..bound), 0..6)
    }

    fn build(c: &PolyRing, raw: &[(Vec<u32>, i64)]) -> Polynomial {
        c.from_terms(raw.iter().map(|(e, k)| (Monomial::from_exponents(e), BigInt::from(*k))))
    }

    proptest! {
        #[test]
        fn parse_render_round_trip(raw in arb_poly(0), n in prop::sample::select(vec![0u64, 4, 6, 8, 9, 27])) {
            let c = ctx(n, &["T_1_1", "x1", "x2"]);
            let f = build(&c, &raw);
            prop_assert_eq!(c.parse(&f.to_string()).unwrap(), f);
        }

        #[test]
        fn content_times_red_is_identity(raw in arb_poly(0), n in prop::sample::select(vec![0u64, 4, 8, 9, 27])) {
            let c = ctx(n, &["T_1_1", "x1", "x2"]);
            let f = build(&c, &raw);
            prop_assume!(!f.is_zero());
            let red = f.red().unwrap();
            prop_assert_eq!(red.scale(&f.content().unwrap()), f.clone());
            prop_assert_eq!(red.red().unwrap(), red.clone());
            prop_assert!(red.content().unwrap().abs().is_one());
        }

        #[test]
        fn projection_is_a_homomorphism(a in arb_poly(12), b in arb_poly(12), n in prop::sample::select(vec![6u64, 12, 30, 36])) {
            let c = ctx(n, &["T_1_1", "x1", "x2"]);
            let f = build(&c, &a);
            let g = build(&c, &b);
            let comps = c.ring().components().len();
            for i in 0..comps {
                prop_assert_eq!((&f * &g).project(i).unwrap(), &f.project(i).unwrap() * &g.project(i).unwrap());
                prop_assert_eq!((&f + &g).project(i).unwrap(), &f.project(i).unwrap() + &g.project(i).unwrap());
            }
        }

        #[test]
        fn multiplication_commutes_and_distributes(a in arb_poly(0), b in arb_poly(0), d in arb_poly(0)) {
            let c = ctx(8, &["T_1_1", "x1", "x2"]);
            let (f, g, h) = (build(&c, &a), build(&c, &b), build(&c, &d));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        }
    }
}
