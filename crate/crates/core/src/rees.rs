//! Defining equations of multi-Rees algebras.
//!
//! For ideals `I_1..I_r` of `R[x]` with generators `f_1..f_q`, the map
//! `phi: R[x, T] -> R[x, t]` sends `T_{k,j}` to `f_k t_j`; its kernel is the
//! defining ideal. It is computed as a saturation: Koszul relations against
//! one pivot per ideal, plus (over `Z/p^mZ`) monomials in the pivots that
//! are killed by `p`-torsion, saturated by a product of the pivots via the
//! auxiliary generator `y * h - 1`.
//!
//! Composite moduli are split by the Chinese remainder theorem, solved per
//! prime-power component and recombined with the idempotents.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeff::{factorize, Ring, RingError};
use crate::groebner::{buchberger, eliminate, GroebnerConfig, GroebnerError, GroebnerStats};
use crate::order::{generator_valuation, pivot_selection, TOrder, TieBreak};
use crate::poly::{Monomial, PolyError, PolyRing, Polynomial, TVar, VarKind, Variable, VariableSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReesError {
    #[error("a problem needs at least one ideal")]
    NoIdeals,
    #[error("ideal {0} has no generators")]
    EmptyIdeal(usize),
    #[error("generator {index} of ideal {ideal} is zero")]
    ZeroGenerator { ideal: usize, index: usize },
    #[error("`{0}` is reserved and cannot name a base variable")]
    ReservedName(String),
    #[error("the H set is defined over Z/p^mZ, not over a {0} ring")]
    NotPrimePower(&'static str),
    #[error("expected {expected} component bases, got {found}")]
    MissingComponent { expected: usize, found: usize },
    #[error("kernel check failed: generator {index} maps to {image}")]
    KernelCheck { index: usize, image: String },
    #[error("generator {generator} of ideal {ideal}: {source}")]
    Generator {
        ideal: usize,
        generator: usize,
        source: PolyError,
    },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Which monomials in the pivot variables enter the auxiliary ideal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HMode {
    /// `p^n * prod T^{n_t}` with `n + sum n_t = m`, `n < m`.
    Paper,
    /// Minimal solutions of `n + sum v_t n_t >= m`, `v_t` the pivot valuations.
    #[default]
    Generalized,
}

impl std::str::FromStr for HMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "paper" => Ok(HMode::Paper),
            "generalized" => Ok(HMode::Generalized),
            other => Err(format!("unknown H mode `{other}` (expected paper or generalized)")),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MultiplierMode {
    /// Use the variable-product shortcut when every generator is a term.
    #[default]
    Auto,
    /// Always saturate by the product of the pivots.
    General,
}

#[derive(Clone, Debug, Default)]
pub struct ReesOptions {
    pub h_mode: HMode,
    pub multiplier: MultiplierMode,
    pub groebner: GroebnerConfig,
}

#[derive(Clone, Debug)]
pub struct ReesProblem {
    base: PolyRing,
    generators: Vec<Polynomial>,
    /// `groups[j - 1]`: 1-based generator indices of `I_j`.
    groups: Vec<Vec<usize>>,
    tie: TieBreak,
    t_order: TOrder,
    pivots: Vec<Option<usize>>,
    s_ring: PolyRing,
    f_ring: PolyRing,
    image_ring: PolyRing,
}

fn reserved(name: &str) -> bool {
    name == "y"
        || TVar::parse_name(name).is_some()
        || name
            .strip_prefix("t_")
            .is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
}

impl ReesProblem {
    /// Parses generator strings over `ring[x_vars]`.
    pub fn parse<S: AsRef<str>>(ring: Ring, x_vars: &[S], ideals: &[Vec<S>]) -> Result<Self, ReesError> {
        let base = Self::base_ring(ring, x_vars)?;
        let mut parsed = Vec::with_capacity(ideals.len());
        for (j, ideal) in ideals.iter().enumerate() {
            let mut gens = Vec::with_capacity(ideal.len());
            for (i, s) in ideal.iter().enumerate() {
                gens.push(base.parse(s.as_ref()).map_err(|e| ReesError::Generator {
                    ideal: j + 1,
                    generator: i + 1,
                    source: e,
                })?);
            }
            parsed.push(gens);
        }
        Self::new(base, parsed)
    }

    /// Base ring `R[x]` for the given variable names.
    pub fn base_ring<S: AsRef<str>>(ring: Ring, x_vars: &[S]) -> Result<PolyRing, ReesError> {
        let mut vars = Vec::with_capacity(x_vars.len());
        for name in x_vars {
            let name = name.as_ref();
            if reserved(name) {
                return Err(ReesError::ReservedName(name.to_string()));
            }
            vars.push(Variable::new(name, VarKind::X));
        }
        Ok(PolyRing::from_parts(ring, VariableSet::new(vars)?))
    }

    /// Generators over `base`; equal generators share an index.
    pub fn new(base: PolyRing, ideals: Vec<Vec<Polynomial>>) -> Result<Self, ReesError> {
        if ideals.is_empty() {
            return Err(ReesError::NoIdeals);
        }
        let mut generators: Vec<Polynomial> = Vec::new();
        let mut groups = Vec::with_capacity(ideals.len());
        for (j, ideal) in ideals.into_iter().enumerate() {
            if ideal.is_empty() {
                return Err(ReesError::EmptyIdeal(j + 1));
            }
            let mut group = Vec::new();
            for (i, f) in ideal.into_iter().enumerate() {
                f.check_compatible(&base.zero())?;
                if f.is_zero() {
                    return Err(ReesError::ZeroGenerator {
                        ideal: j + 1,
                        index: i + 1,
                    });
                }
                let k = match generators.iter().position(|g| *g == f) {
                    Some(p) => p + 1,
                    None => {
                        generators.push(f);
                        generators.len()
                    }
                };
                if !group.contains(&k) {
                    group.push(k);
                }
            }
            groups.push(group);
        }
        Ok(Self::from_parts(base, generators, groups, TieBreak::default()))
    }

    /// No validation: zero generators are allowed and never become pivots.
    fn from_parts(base: PolyRing, generators: Vec<Polynomial>, groups: Vec<Vec<usize>>, tie: TieBreak) -> Self {
        let ring = base.ring().clone();
        let composite = matches!(*ring, Ring::Composite(_));
        let order_ring = if composite { Ring::Integers } else { (*ring).clone() };
        let t_order = TOrder::new(&order_ring, &generators, &groups, tie);
        let pivots = if composite {
            vec![None; groups.len()]
        } else {
            groups
                .iter()
                .enumerate()
                .map(|(j, g)| pivot_selection(&ring, &generators, g, j + 1, tie).ok())
                .collect()
        };

        let x: Vec<Variable> = base.vars().iter().cloned().collect();
        let ts: Vec<Variable> = t_order
            .descending()
            .map(|t| Variable::new(t.name(), VarKind::T(*t)))
            .collect();
        let mk = |vars: Vec<Variable>| {
            PolyRing::new(
                ring.clone(),
                Arc::new(VariableSet::new(vars).expect("block order by construction")),
            )
        };
        let s_ring = mk(ts.iter().chain(&x).cloned().collect());
        let f_ring = mk(std::iter::once(Variable::new("y", VarKind::Aux))
            .chain(ts.iter().cloned())
            .chain(x.iter().cloned())
            .collect());
        let image_ring = mk((1..=groups.len())
            .map(|j| Variable::new(format!("t_{j}"), VarKind::Target(j)))
            .chain(x.iter().cloned())
            .collect());
        ReesProblem {
            base,
            generators,
            groups,
            tie,
            t_order,
            pivots,
            s_ring,
            f_ring,
            image_ring,
        }
    }

    pub fn with_tie_break(&self, tie: TieBreak) -> Self {
        Self::from_parts(self.base.clone(), self.generators.clone(), self.groups.clone(), tie)
    }

    pub fn ring(&self) -> &Ring {
        self.base.ring()
    }

    pub fn base(&self) -> &PolyRing {
        &self.base
    }

    /// `f_1..f_q`, index `k - 1`.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn tie_break(&self) -> TieBreak {
        self.tie
    }

    pub fn t_order(&self) -> &TOrder {
        &self.t_order
    }

    /// Pivot `T_{k_j, j}` of each group (`None` for composite rings or
    /// groups whose generators all vanish).
    pub fn pivots(&self) -> Vec<Option<TVar>> {
        self.pivots
            .iter()
            .enumerate()
            .map(|(j, k)| k.map(|k| TVar::new(k, j + 1)))
            .collect()
    }

    /// `R[T, x]` with the Rees variables ordered by the T-order.
    pub fn s_ring(&self) -> &PolyRing {
        &self.s_ring
    }

    /// `R[y, T, x]`.
    pub fn f_ring(&self) -> &PolyRing {
        &self.f_ring
    }

    /// `R[t, x]`, the target of `phi`.
    pub fn image_ring(&self) -> &PolyRing {
        &self.image_ring
    }

    pub fn t_var(&self, t: TVar) -> Result<Polynomial, ReesError> {
        Ok(self.s_ring.var(&t.name())?)
    }

    fn generator(&self, k: usize) -> &Polynomial {
        &self.generators[k - 1]
    }

    fn all_terms(&self) -> bool {
        self.generators.iter().all(|f| f.len() <= 1)
    }
}

/// `phi(g)` with `T_{k,j} -> f_k t_j`; `g` is matched to the problem's
/// variables by name.
pub fn substitute_phi(problem: &ReesProblem, g: &Polynomial) -> Result<Polynomial, ReesError> {
    let g = g.reindex(&problem.s_ring)?;
    let target = &problem.image_ring;
    let mut images = Vec::with_capacity(problem.s_ring.nvars());
    for v in problem.s_ring.vars().iter() {
        let img = match v.kind {
            VarKind::T(t) => {
                let f = problem.generator(t.k).reindex(target)?;
                &f * &target.var(&format!("t_{}", t.j))?
            }
            _ => target.var(&v.name)?,
        };
        images.push(Some(img));
    }
    Ok(g.substitute(target, &images)?)
}

/// Koszul relations `f_{k_j} T_{k,j} - f_k T_{k_j,j}` against each pivot,
/// divided by their content over `Z/p^mZ`.
pub fn koszul_relations(problem: &ReesProblem) -> Result<Vec<Polynomial>, ReesError> {
    let s = &problem.s_ring;
    let zs = s.with_ring(Arc::new(Ring::Integers));
    let lift = |f: &Polynomial| -> Result<Polynomial, ReesError> {
        let f = f.reindex(s)?;
        Ok(zs.from_terms(f.terms().iter().cloned()))
    };
    let mut out = Vec::new();
    for (j0, group) in problem.groups.iter().enumerate() {
        let Some(kj) = problem.pivots[j0] else { continue };
        let j = j0 + 1;
        let pivot = lift(problem.generator(kj))?;
        let tp = zs.var(&TVar::new(kj, j).name())?;
        for &k in group {
            if k == kj || problem.generator(k).is_zero() {
                continue;
            }
            let fk = lift(problem.generator(k))?;
            let tk = zs.var(&TVar::new(k, j).name())?;
            let rel = &(&pivot * &tk) - &(&fk * &tp);
            let reduced = rel.map_into_ring(s);
            if reduced.is_zero() {
                continue;
            }
            let rel = match problem.ring() {
                Ring::PrimePower(_) => {
                    let c = reduced.content()?;
                    rel.exact_div_integer(&c).map_into_ring(s)
                }
                _ => reduced,
            };
            out.push(rel);
        }
    }
    Ok(out)
}

/// Pivot variables whose generator content is not a unit, with valuations.
fn eligible_pivots(problem: &ReesProblem) -> Vec<(TVar, u32)> {
    problem
        .pivots()
        .into_iter()
        .flatten()
        .filter_map(|t| {
            let v = generator_valuation(problem.ring(), problem.generator(t.k));
            (v > 0).then_some((t, v))
        })
        .collect()
}

/// Monomials in `p` and the non-unit pivots that `phi` kills.
pub fn h_set(problem: &ReesProblem, mode: HMode) -> Result<Vec<Polynomial>, ReesError> {
    let pp = match problem.ring() {
        Ring::PrimePower(pp) => pp.clone(),
        other => return Err(ReesError::NotPrimePower(other.kind_name())),
    };
    let m = pp.exponent();
    let pivots = eligible_pivots(problem);
    let bounds: Vec<u32> = pivots
        .iter()
        .map(|&(_, v)| match mode {
            HMode::Paper => m,
            HMode::Generalized => m.div_ceil(v),
        })
        .collect();

    // (n, exponents) candidates.
    let mut cands: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut exps = vec![0u32; pivots.len()];
    loop {
        let weight: u32 = match mode {
            HMode::Paper => exps.iter().sum(),
            HMode::Generalized => exps.iter().zip(&pivots).map(|(e, (_, v))| e * v).sum(),
        };
        let tdeg: u32 = exps.iter().sum();
        let admissible = match mode {
            HMode::Paper => weight <= m,
            HMode::Generalized => true,
        };
        if tdeg > 0 && admissible {
            cands.push((m.saturating_sub(weight), exps.clone()));
        }
        // Odometer over 0..=bounds.
        let mut i = 0;
        while i < exps.len() {
            if exps[i] < bounds[i] {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
        if i == exps.len() {
            break;
        }
    }
    let divides = |a: &(u32, Vec<u32>), b: &(u32, Vec<u32>)| a.0 <= b.0 && a.1.iter().zip(&b.1).all(|(x, y)| x <= y);
    let minimal: Vec<&(u32, Vec<u32>)> = cands
        .iter()
        .filter(|c| !cands.iter().any(|d| d != *c && divides(d, c)))
        .collect();

    let s = &problem.s_ring;
    let mut out: Vec<(u32, Polynomial)> = Vec::with_capacity(minimal.len());
    for (n, e) in minimal {
        let mut mono = Monomial::one(s.nvars());
        for ((t, _), &a) in pivots.iter().zip(e) {
            let idx = s.vars().index_of(&t.name()).expect("pivot variable");
            mono.set_exponent(idx, a);
        }
        out.push((mono.degree(), s.term(pp.power(*n), mono)));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.terms().cmp(a.1.terms())));
    Ok(out.into_iter().map(|(_, p)| p).collect())
}

fn distinct_primes(c: &BigInt) -> Option<Vec<u64>> {
    let c = c.abs().to_u64()?;
    if c <= 1 {
        return Some(Vec::new());
    }
    Some(factorize(c).ok()?.into_iter().map(|(p, _)| p).collect())
}

/// Polynomial `h` in the base variables by which the Koszul ideal is
/// saturated.
pub fn saturation_multiplier(problem: &ReesProblem, mode: MultiplierMode) -> Result<Polynomial, ReesError> {
    let s = &problem.s_ring;
    let ring = problem.ring();
    let pivots: Vec<usize> = problem.pivots.iter().flatten().copied().collect();
    if mode == MultiplierMode::Auto && problem.all_terms() {
        let mut occurring = Monomial::one(problem.base.nvars());
        for f in &problem.generators {
            for (m, _) in f.terms() {
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e > 0 {
                        occurring.set_exponent(i, 1);
                    }
                }
            }
        }
        let xs = problem.base.term(BigInt::one(), occurring).reindex(s)?;
        match ring {
            Ring::PrimePower(_) => return Ok(xs),
            Ring::Integers => {
                let mut primes = BTreeSet::new();
                let mut ok = true;
                for &k in &pivots {
                    match problem.generator(k).leading_coeff().and_then(distinct_primes) {
                        Some(ps) => primes.extend(ps),
                        None => ok = false,
                    }
                }
                if ok {
                    let c: BigInt = primes.into_iter().map(BigInt::from).product();
                    return Ok(xs.scale(&c));
                }
            }
            Ring::Composite(_) => {}
        }
    }
    let mut h = s.one();
    for k in pivots {
        let f = problem.generator(k);
        let f = match ring {
            Ring::PrimePower(_) => f.red()?,
            _ => f.clone(),
        };
        h = &h * &f.reindex(s)?;
    }
    Ok(h)
}

/// Generators of the auxiliary ideal in `R[y, T, x]`: `y h - 1`, the
/// Koszul relations, the H set, and `T_{k,j}` for vanishing generators.
pub fn build_f(problem: &ReesProblem, options: &ReesOptions) -> Result<Vec<Polynomial>, ReesError> {
    let f = &problem.f_ring;
    let h = saturation_multiplier(problem, options.multiplier)?.reindex(f)?;
    let mut out = vec![&(&f.var("y")? * &h) - &f.one()];
    for p in koszul_relations(problem)? {
        out.push(p.reindex(f)?);
    }
    if matches!(problem.ring(), Ring::PrimePower(_)) {
        for p in h_set(problem, options.h_mode)? {
            out.push(p.reindex(f)?);
        }
    }
    for (j0, group) in problem.groups.iter().enumerate() {
        for &k in group {
            if problem.generator(k).is_zero() {
                out.push(f.var(&TVar::new(k, j0 + 1).name())?);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Timings {
    pub build_f: Duration,
    pub groebner: Duration,
    pub eliminate: Duration,
    pub total: Duration,
}

#[derive(Clone, Debug)]
pub struct ComponentResult {
    /// Modulus `p^m` of the component.
    pub modulus: BigInt,
    pub idempotent: BigInt,
    pub result: ReesResult,
}

#[derive(Clone, Debug)]
pub struct ReesResult {
    /// Ring of the basis: `R[T, x]`.
    pub context: PolyRing,
    pub basis: Vec<Polynomial>,
    pub pivots: Vec<Option<TVar>>,
    pub koszul: Vec<Polynomial>,
    pub h_set: Vec<Polynomial>,
    pub multiplier: Option<Polynomial>,
    pub f_set: Vec<Polynomial>,
    pub components: Vec<ComponentResult>,
    pub stats: GroebnerStats,
    pub timings: Timings,
}

/// Gröbner basis of the kernel of `phi`.
pub fn rees_equations(problem: &ReesProblem, options: &ReesOptions) -> Result<ReesResult, ReesError> {
    let start = Instant::now();
    let mut result = match problem.ring() {
        Ring::Composite(_) => composite_equations(problem, options)?,
        _ => chain_ring_equations(problem, options)?,
    };
    for (index, g) in result.basis.iter().enumerate() {
        let img = substitute_phi(problem, g)?;
        if !img.is_zero() {
            return Err(ReesError::KernelCheck {
                index,
                image: img.to_string(),
            });
        }
    }
    result.timings.total = start.elapsed();
    Ok(result)
}

fn chain_ring_equations(problem: &ReesProblem, options: &ReesOptions) -> Result<ReesResult, ReesError> {
    let t0 = Instant::now();
    let koszul = koszul_relations(problem)?;
    let h = match problem.ring() {
        Ring::PrimePower(_) => h_set(problem, options.h_mode)?,
        _ => Vec::new(),
    };
    let multiplier = saturation_multiplier(problem, options.multiplier)?;
    let f_set = build_f(problem, options)?;
    let t1 = Instant::now();
    let gb = buchberger(&problem.f_ring, &f_set, &options.groebner)?;
    let t2 = Instant::now();
    let elim = eliminate(&gb, &["y"])?;
    let basis = elim
        .basis()
        .iter()
        .map(|g| g.reindex(&problem.s_ring))
        .collect::<Result<Vec<_>, _>>()?;
    let t3 = Instant::now();
    Ok(ReesResult {
        context: problem.s_ring.clone(),
        basis,
        pivots: problem.pivots(),
        koszul,
        h_set: h,
        multiplier: Some(multiplier),
        f_set,
        components: Vec::new(),
        stats: gb.stats().clone(),
        timings: Timings {
            build_f: t1 - t0,
            groebner: t2 - t1,
            eliminate: t3 - t2,
            total: Duration::ZERO,
        },
    })
}

/// The problem over component `i` of a composite ring, with the original
/// generator indices.
pub fn component_problem(problem: &ReesProblem, i: usize) -> Result<ReesProblem, ReesError> {
    let comps = problem.ring().components();
    let ring = comps.get(i).cloned().ok_or(RingError::ComponentOutOfRange {
        index: i,
        count: comps.len(),
    })?;
    let base = problem.base.with_ring(Arc::new(ring));
    let generators = problem
        .generators
        .iter()
        .map(|f| Ok(f.project(i)?.map_into_ring(&base)))
        .collect::<Result<Vec<_>, ReesError>>()?;
    Ok(ReesProblem::from_parts(
        base,
        generators,
        problem.groups.clone(),
        problem.tie,
    ))
}

fn composite_equations(problem: &ReesProblem, options: &ReesOptions) -> Result<ReesResult, ReesError> {
    let t0 = Instant::now();
    let comp = problem.ring().as_composite()?.clone();
    let subs = (0..comp.factors().len())
        .map(|i| component_problem(problem, i))
        .collect::<Result<Vec<_>, _>>()?;
    let results: Vec<Result<ReesResult, ReesError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = subs
            .iter()
            .map(|sub| scope.spawn(move || rees_equations(sub, options)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("component thread panicked"))
            .collect()
    });
    let mut components = Vec::with_capacity(results.len());
    let mut stats = GroebnerStats::default();
    for (i, r) in results.into_iter().enumerate() {
        let r = r?;
        stats.pairs_created += r.stats.pairs_created;
        stats.pairs_reduced += r.stats.pairs_reduced;
        stats.chain_pruned += r.stats.chain_pruned;
        stats.zero_reductions += r.stats.zero_reductions;
        stats.peak_basis = stats.peak_basis.max(r.stats.peak_basis);
        stats.certification_rounds += r.stats.certification_rounds;
        components.push(ComponentResult {
            modulus: comp.factors()[i].modulus().clone(),
            idempotent: comp.idempotents()[i].clone(),
            result: r,
        });
    }
    let parts: Vec<(BigInt, Vec<Polynomial>)> = components
        .iter()
        .map(|c| (c.idempotent.clone(), c.result.basis.clone()))
        .collect();
    let basis = recombine(&problem.s_ring, &parts)?;
    Ok(ReesResult {
        context: problem.s_ring.clone(),
        basis,
        pivots: problem.pivots(),
        koszul: Vec::new(),
        h_set: Vec::new(),
        multiplier: None,
        f_set: Vec::new(),
        components,
        stats,
        timings: Timings {
            build_f: Duration::ZERO,
            groebner: t0.elapsed(),
            eliminate: Duration::ZERO,
            total: Duration::ZERO,
        },
    })
}

/// `e_i * lift(g)` for every component basis element, in `target` (a ring
/// over the composite modulus, variables matched by name).
pub fn recombine(target: &PolyRing, components: &[(BigInt, Vec<Polynomial>)]) -> Result<Vec<Polynomial>, ReesError> {
    let expected = target.ring().as_composite()?.factors().len();
    if components.len() != expected {
        return Err(ReesError::MissingComponent {
            expected,
            found: components.len(),
        });
    }
    let mut out = Vec::new();
    for (e, basis) in components {
        for g in basis {
            let lifted = g.reindex(&target.with_ring(Arc::new(Ring::Integers)))?;
            let p = lifted.map_into_ring(target).scale(e);
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Whether every listed generator of the problem is a unit multiple of a
/// monomial, i.e. the term-ideal shortcut applies.
pub fn is_term_problem(problem: &ReesProblem) -> bool {
    problem.all_terms()
}
