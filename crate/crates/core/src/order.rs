//! Monomial orders and leading data.
//!
//! A [`VariableSet`] already lists its variables from most to least
//! significant, so full lex is a plain comparison of exponent vectors. The
//! T-only order compares the `y`/`T` block and treats base variables as
//! coefficient data. The Rees-variable sequence itself comes from [`TOrder`].

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeff::Ring;
use crate::poly::{Monomial, PolyError, Polynomial, TVar, VarKind, VariableSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("ideal I_{0} has no nonzero generators")]
    EmptyIdeal(usize),
    #[error("monomials have different lengths")]
    LengthMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    /// Lex over every variable in declaration order.
    FullLex,
    /// Lex over the `y`/`T` block only; base variables are coefficient data.
    TLex,
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full-lex" => Ok(MonomialOrder::FullLex),
            "t-lex" => Ok(MonomialOrder::TLex),
            other => Err(format!("unknown order `{other}` (expected full-lex or t-lex)")),
        }
    }
}

pub fn compare(a: &Monomial, b: &Monomial, order: MonomialOrder, vars: &VariableSet) -> Result<Ordering, OrderError> {
    if a.len() != b.len() || a.len() != vars.len() {
        return Err(OrderError::LengthMismatch);
    }
    Ok(match order {
        MonomialOrder::FullLex => a.cmp(b),
        MonomialOrder::TLex => {
            let n = ordered_prefix(vars);
            a.exponents()[..n].cmp(&b.exponents()[..n])
        }
    })
}

/// Number of leading variables that are not base variables.
pub fn ordered_prefix(vars: &VariableSet) -> usize {
    vars.iter().take_while(|v| v.kind.is_ordered()).count()
}

/// How ties between generators of equal leading-coefficient valuation are
/// broken when ordering Rees variables of one group.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    /// Smaller generator index is smaller.
    #[default]
    LowerIndex,
    /// Larger generator index is smaller.
    HigherIndex,
}

/// Valuation of the content of a generator: `val(LC(f))` over a prime power
/// (`m` for zero), always 0 over the integers where the order ignores it.
pub fn generator_valuation(ring: &Ring, f: &Polynomial) -> u32 {
    match ring {
        Ring::PrimePower(pp) => {
            if f.is_zero() {
                pp.exponent()
            } else {
                pp.valuation(&f.content().expect("nonzero"))
            }
        }
        _ => 0,
    }
}

/// Total order on the Rees variables, stored ascending.
///
/// Keys are `(j, val(LC(f_k)), k)` compared lexicographically; over the
/// integers the valuation component is constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TOrder {
    ascending: Vec<TVar>,
}

impl TOrder {
    /// `groups[j - 1]` lists the 1-based generator indices `k` of `I_j`.
    pub fn new(ring: &Ring, generators: &[Polynomial], groups: &[Vec<usize>], tie: TieBreak) -> Self {
        let vals: Vec<u32> = generators.iter().map(|f| generator_valuation(ring, f)).collect();
        let mut keyed: Vec<((usize, u32, i64), TVar)> = groups
            .iter()
            .enumerate()
            .flat_map(|(j0, ks)| {
                let vals = &vals;
                ks.iter().map(move |&k| {
                    let idx = match tie {
                        TieBreak::LowerIndex => k as i64,
                        TieBreak::HigherIndex => -(k as i64),
                    };
                    ((j0 + 1, vals[k - 1], idx), TVar::new(k, j0 + 1))
                })
            })
            .collect();
        keyed.sort();
        Self {
            ascending: keyed.into_iter().map(|(_, t)| t).collect(),
        }
    }

    pub fn ascending(&self) -> &[TVar] {
        &self.ascending
    }

    pub fn descending(&self) -> impl Iterator<Item = &TVar> {
        self.ascending.iter().rev()
    }

    pub fn compare(&self, a: &TVar, b: &TVar) -> Ordering {
        let pos = |t: &TVar| self.ascending.iter().position(|x| x == t);
        pos(a).cmp(&pos(b))
    }

    /// Smallest variable of group `j`.
    pub fn smallest_in_group(&self, j: usize) -> Option<TVar> {
        self.ascending.iter().copied().find(|t| t.j == j)
    }
}

/// Pivot of a group: the generator minimizing `(val(LC(f_k)), k)` (or
/// `(val, -k)` under [`TieBreak::HigherIndex`]). Zero generators are never
/// pivots.
pub fn pivot_selection(
    ring: &Ring,
    generators: &[Polynomial],
    group: &[usize],
    j: usize,
    tie: TieBreak,
) -> Result<usize, OrderError> {
    group
        .iter()
        .copied()
        .filter(|&k| !generators[k - 1].is_zero())
        .min_by_key(|&k| {
            let idx = match tie {
                TieBreak::LowerIndex => k as i64,
                TieBreak::HigherIndex => -(k as i64),
            };
            (generator_valuation(ring, &generators[k - 1]), idx)
        })
        .ok_or(OrderError::EmptyIdeal(j))
}

/// Leading data of a nonzero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData {
    /// Leading monomial: the T-part under [`MonomialOrder::TLex`].
    pub lm: Monomial,
    /// Leading term `lc * lm`.
    pub lt: Polynomial,
    /// Leading coefficient: a base-variable polynomial under `TLex`, a
    /// constant under `FullLex`.
    pub lc: Polynomial,
    /// Content of `lc`, normalized to `p^v` (prime power) or positive (integers).
    pub content: BigInt,
    /// `lc / content`.
    pub xlc: Polynomial,
}

impl LeadingData {
    pub fn valuation(&self, ring: &Ring) -> u32 {
        match ring {
            Ring::PrimePower(pp) => pp.valuation(&self.content),
            _ => 0,
        }
    }
}

pub fn leading_data(f: &Polynomial, order: MonomialOrder) -> Result<LeadingData, OrderError> {
    let (lead, _) = f.leading_term().ok_or(PolyError::ZeroPolynomial)?;
    let ctx = f.context();
    let (lm, lc) = match order {
        MonomialOrder::FullLex => (lead.clone(), ctx.constant(f.leading_coeff().expect("nonzero").clone())),
        MonomialOrder::TLex => {
            let n = ordered_prefix(f.vars());
            let lm = lead.restrict(|i| i < n);
            let lc = ctx.from_terms(
                f.terms()
                    .iter()
                    .take_while(|(m, _)| m.exponents()[..n] == lm.exponents()[..n])
                    .map(|(m, c)| (m.restrict(|i| i >= n), c.clone())),
            );
            (lm, lc)
        }
    };
    let content = normalized_content(&lc)?;
    let xlc = lc.exact_div_integer(&content);
    let lt = lc.mul_term(&BigInt::one(), &lm);
    Ok(LeadingData {
        lm,
        lt,
        lc,
        content,
        xlc,
    })
}

/// `p^{min val}` over a prime power, positive gcd over the integers.
fn normalized_content(p: &Polynomial) -> Result<BigInt, OrderError> {
    match p.ring() {
        Ring::Integers => Ok(p.terms().iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))),
        _ => Ok(p.content()?),
    }
}

/// Index of the first Rees variable of a set, if any.
pub fn first_t_index(vars: &VariableSet) -> Option<usize> {
    vars.iter().position(|v| matches!(v.kind, VarKind::T(_)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{PolyRing, Variable};
    use proptest::prelude::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn xring(n: u64) -> PolyRing {
        PolyRing::from_parts(
            Ring::from_modulus(n).unwrap(),
            VariableSet::from_names(&["x1", "x2", "x3"]).unwrap(),
        )
    }

    fn gens(n: u64, fs: &[&str]) -> Vec<Polynomial> {
        let c = xring(n);
        fs.iter().map(|s| c.parse(s).unwrap()).collect()
    }

    fn ex41() -> (Ring, Vec<Polynomial>, Vec<Vec<usize>>) {
        (
            Ring::from_modulus(9).unwrap(),
            gens(9, &["2*x1^2*x2+6*x3", "6*x1*x3", "3*x3^2"]),
            vec![vec![1, 2, 3], vec![2, 3]],
        )
    }

    fn ex42() -> (Ring, Vec<Polynomial>, Vec<Vec<usize>>) {
        (
            Ring::from_modulus(8).unwrap(),
            gens(8, &["2*x1^2*x2", "2*x1*x3", "x1^2", "x1^2*x2", "x1*x3"]),
            vec![vec![1, 2], vec![1, 3], vec![3, 4, 5]],
        )
    }

    #[test]
    fn t_order_matches_example_listings() {
        let (r, g, groups) = ex41();
        let o = TOrder::new(&r, &g, &groups, TieBreak::LowerIndex);
        let desc: Vec<String> = o.descending().map(|t| t.name()).collect();
        assert_eq!(desc, ["T_3_2", "T_2_2", "T_3_1", "T_2_1", "T_1_1"]);
        assert_eq!(o.compare(&TVar::new(3, 2), &TVar::new(2, 2)), Ordering::Greater);

        let (r, g, groups) = ex42();
        let o = TOrder::new(&r, &g, &groups, TieBreak::LowerIndex);
        let desc: Vec<String> = o.descending().map(|t| t.name()).collect();
        assert_eq!(desc, ["T_5_3", "T_4_3", "T_3_3", "T_1_2", "T_3_2", "T_2_1", "T_1_1"]);
        assert_eq!(o.compare(&TVar::new(1, 2), &TVar::new(3, 2)), Ordering::Greater);
        assert_eq!(o.compare(&TVar::new(1, 2), &TVar::new(1, 2)), Ordering::Equal);

        let o = TOrder::new(&r, &g, &groups, TieBreak::HigherIndex);
        assert_eq!(o.smallest_in_group(3), Some(TVar::new(5, 3)));
    }

    #[test]
    fn integer_t_order_ignores_content() {
        let g = gens(0, &["6*x1^2*x2", "3*x1*x3", "5*x1*x3^2", "x2*x3"]);
        let groups = vec![vec![1, 2, 3], vec![1, 2, 4]];
        let o = TOrder::new(&Ring::Integers, &g, &groups, TieBreak::LowerIndex);
        let desc: Vec<String> = o.descending().map(|t| t.name()).collect();
        assert_eq!(desc, ["T_4_2", "T_2_2", "T_1_2", "T_3_1", "T_2_1", "T_1_1"]);
        assert_eq!(
            pivot_selection(&Ring::Integers, &g, &groups[1], 2, TieBreak::LowerIndex).unwrap(),
            1
        );
    }

    #[test]
    fn pivots_of_examples() {
        let (r, g, groups) = ex41();
        assert_eq!(pivot_selection(&r, &g, &groups[0], 1, TieBreak::LowerIndex).unwrap(), 1);
        assert_eq!(pivot_selection(&r, &g, &groups[1], 2, TieBreak::LowerIndex).unwrap(), 2);
        let (r, g, groups) = ex42();
        assert_eq!(pivot_selection(&r, &g, &groups[1], 2, TieBreak::LowerIndex).unwrap(), 3);
        assert_eq!(pivot_selection(&r, &g, &groups[2], 3, TieBreak::LowerIndex).unwrap(), 3);
        assert_eq!(
            pivot_selection(&r, &g, &groups[2], 3, TieBreak::HigherIndex).unwrap(),
            5
        );
        assert_eq!(
            pivot_selection(&r, &g, &[], 4, TieBreak::LowerIndex),
            Err(OrderError::EmptyIdeal(4))
        );
        // the pivot's content divides every other content in its group
        for (j, group) in groups.iter().enumerate() {
            let k = pivot_selection(&r, &g, group, j + 1, TieBreak::LowerIndex).unwrap();
            let c = g[k - 1].content().unwrap();
            for &other in group {
                assert!(r.divides(&c, &g[other - 1].content().unwrap()).unwrap());
            }
        }
    }

    fn sring(n: u64) -> PolyRing {
        let vars = VariableSet::new(vec![
            Variable::new("T_2_2", VarKind::T(TVar::new(2, 2))),
            Variable::new("T_2_1", VarKind::T(TVar::new(2, 1))),
            Variable::new("T_1_1", VarKind::T(TVar::new(1, 1))),
            Variable::new("x1", VarKind::X),
            Variable::new("x2", VarKind::X),
            Variable::new("x3", VarKind::X),
        ])
        .unwrap();
        PolyRing::from_parts(Ring::from_modulus(n).unwrap(), vars)
    }

    #[test]
    fn leading_data_examples() {
        let s = sring(9);
        let f = s.parse("2*x1^2*x2*T_2_1 + 6*x3*T_2_1 - 6*x1*x3*T_1_1").unwrap();
        let ld = leading_data(&f, MonomialOrder::TLex).unwrap();
        assert_eq!(ld.lm, Monomial::from_exponents(&[0, 1, 0, 0, 0, 0]));
        assert_eq!(ld.lc, s.parse("2*x1^2*x2+6*x3").unwrap());
        assert_eq!(ld.content, b(1));
        assert_eq!(ld.xlc, ld.lc);

        let g = s.parse("6*x1*x3*T_2_2").unwrap();
        let ld = leading_data(&g, MonomialOrder::TLex).unwrap();
        assert_eq!(ld.content, b(3));
        assert_eq!(ld.xlc, s.parse("2*x1*x3").unwrap());
        assert_eq!(ld.lt, g);

        let c = s.constant(b(5));
        let ld = leading_data(&c, MonomialOrder::TLex).unwrap();
        assert!(ld.lm.is_one());
        assert_eq!(ld.lc.scale(&BigInt::one()), c);
        assert_eq!(ld.xlc.scale(&ld.content), c);

        let ld = leading_data(&g, MonomialOrder::FullLex).unwrap();
        assert_eq!(ld.content, b(3));
        assert_eq!(ld.xlc, s.constant(b(2)));
        assert!(leading_data(&s.zero(), MonomialOrder::TLex).is_err());

        let z = sring(0);
        let h = z.parse("-4*x1*T_1_1 + 6*x2*T_1_1 + x3").unwrap();
        let ld = leading_data(&h, MonomialOrder::TLex).unwrap();
        assert_eq!(ld.content, b(2));
        assert_eq!(ld.xlc, z.parse("-2*x1 + 3*x2").unwrap());
    }

    #[test]
    fn compare_examples() {
        let s = sring(9);
        let vars = s.vars();
        let a = Monomial::from_exponents(&[1, 0, 0, 0, 0, 0]);
        let c = Monomial::from_exponents(&[0, 1, 0, 5, 0, 0]);
        assert_eq!(
            compare(&a, &c, MonomialOrder::FullLex, vars).unwrap(),
            Ordering::Greater
        );
        assert_eq!(compare(&a, &a, MonomialOrder::FullLex, vars).unwrap(), Ordering::Equal);
        let d = Monomial::from_exponents(&[0, 1, 0, 0, 0, 7]);
        assert_eq!(compare(&c, &d, MonomialOrder::TLex, vars).unwrap(), Ordering::Equal);
        assert_eq!(
            compare(&c, &d, MonomialOrder::FullLex, vars).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            compare(&a, &Monomial::one(2), MonomialOrder::FullLex, vars),
            Err(OrderError::LengthMismatch)
        );
        assert_eq!("t-lex".parse::<MonomialOrder>(), Ok(MonomialOrder::TLex));
    }

    proptest! {
        #[test]
        fn full_lex_is_a_monomial_order(
            a in prop::collection::vec(0u32..4, 6),
            b in prop::collection::vec(0u32..4, 6),
            c in prop::collection::vec(0u32..4, 6),
        ) {
            let s = sring(9);
            let vars = s.vars();
            let (ma, mb, mc) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b), Monomial::from_exponents(&c));
            for order in [MonomialOrder::FullLex, MonomialOrder::TLex] {
                let ab = compare(&ma, &mb, order, vars).unwrap();
                let ba = compare(&mb, &ma, order, vars).unwrap();
                prop_assert_eq!(ab, ba.reverse());
                let bc = compare(&mb, &mc, order, vars).unwrap();
                let ac = compare(&ma, &mc, order, vars).unwrap();
                if ab != Ordering::Greater && bc != Ordering::Greater {
                    prop_assert_ne!(ac, Ordering::Greater);
                }
                prop_assert_eq!(compare(&ma.mul(&mc), &mb.mul(&mc), order, vars).unwrap(), ab);
                prop_assert_ne!(compare(&Monomial::one(6), &ma, order, vars).unwrap(), Ordering::Greater);
            }
        }
    }
}
