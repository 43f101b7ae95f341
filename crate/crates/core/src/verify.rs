//! Independent checks on computed kernels.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::coeff::Ring;
use crate::groebner::{buchberger, eliminate, ideal_equal, member, GroebnerConfig, GroebnerError};
use crate::poly::{PolyError, Polynomial, TVar, VarKind};
use crate::rees::{rees_equations, saturation_multiplier, substitute_phi, ReesError, ReesOptions, ReesProblem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("expected a polynomial over Z/p^mZ, found a {0} ring")]
    NotPrimePower(&'static str),
    #[error("presentation matrix has {found} rows, the problem has {expected} Rees variables")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} of the presentation matrix has {found} entries, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("`{0}` is not a Rees variable of the problem")]
    UnknownRow(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Rees(#[from] ReesError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDivisorCheck {
    pub nonzerodivisor: bool,
    /// Nonzero constant `g` with `f * g = 0` when `f` is a zero divisor.
    pub witness: Option<BigInt>,
}

/// Over `Z/p^mZ` a polynomial is a nonzero divisor iff one of its
/// coefficients is a unit; otherwise `p^{m-1}` annihilates it.
pub fn is_nonzerodivisor(f: &Polynomial) -> Result<ZeroDivisorCheck, VerifyError> {
    let pp = match f.ring() {
        Ring::PrimePower(pp) => pp,
        other => return Err(VerifyError::NotPrimePower(other.kind_name())),
    };
    if f.is_zero() {
        return Ok(ZeroDivisorCheck {
            nonzerodivisor: false,
            witness: Some(BigInt::one()),
        });
    }
    let unit = f.terms().iter().any(|(_, c)| pp.valuation(c) == 0);
    Ok(ZeroDivisorCheck {
        nonzerodivisor: unit,
        witness: (!unit).then(|| pp.power(pp.exponent() - 1)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelEntry {
    pub generator: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub passed: bool,
    pub entries: Vec<KernelEntry>,
}

impl KernelReport {
    pub fn failures(&self) -> impl Iterator<Item = &KernelEntry> {
        self.entries.iter().filter(|e| e.image != "0")
    }
}

pub fn kernel_check(problem: &ReesProblem, gens: &[Polynomial]) -> Result<KernelReport, VerifyError> {
    let mut entries = Vec::with_capacity(gens.len());
    let mut passed = true;
    for g in gens {
        let img = substitute_phi(problem, g)?;
        passed &= img.is_zero();
        entries.push(KernelEntry {
            generator: g.to_string(),
            image: img.to_string(),
        });
    }
    Ok(KernelReport { passed, entries })
}

/// A presentation matrix: one row per Rees variable, entries over `R[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub rows: Vec<TVar>,
    pub entries: Vec<Vec<Polynomial>>,
}

impl Presentation {
    pub fn parse<S: AsRef<str>>(problem: &ReesProblem, rows: &[S], matrix: &[Vec<S>]) -> Result<Self, VerifyError> {
        if rows.len() != matrix.len() {
            return Err(VerifyError::RowCount {
                expected: rows.len(),
                found: matrix.len(),
            });
        }
        let mut tvars = Vec::with_capacity(rows.len());
        for r in rows {
            let name = r.as_ref();
            let idx = problem
                .s_ring()
                .vars()
                .index_of(name)
                .ok_or_else(|| VerifyError::UnknownRow(name.to_string()))?;
            match problem.s_ring().vars().get(idx).kind {
                VarKind::T(t) => tvars.push(t),
                _ => return Err(VerifyError::UnknownRow(name.to_string())),
            }
        }
        let entries = matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| problem.base().parse(e.as_ref()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation { rows: tvars, entries })
    }
}

/// Entries of the row vector `T * Phi`, zeros dropped.
pub fn matrix_ideal(problem: &ReesProblem, phi: &Presentation) -> Result<Vec<Polynomial>, VerifyError> {
    let expected = problem.t_order().ascending().len();
    if phi.rows.len() != expected || phi.entries.len() != expected {
        return Err(VerifyError::RowCount {
            expected,
            found: phi.rows.len().max(phi.entries.len()),
        });
    }
    let cols = phi.entries.first().map_or(0, |r| r.len());
    for (row, r) in phi.entries.iter().enumerate() {
        if r.len() != cols {
            return Err(VerifyError::RowLength {
                row: row + 1,
                expected: cols,
                found: r.len(),
            });
        }
    }
    let s = problem.s_ring();
    let mut out = Vec::with_capacity(cols);
    for c in 0..cols {
        let mut acc = s.zero();
        for (t, row) in phi.rows.iter().zip(&phi.entries) {
            let term = &problem.t_var(*t)? * &row[c].reindex(s)?;
            acc = &acc + &term;
        }
        if !acc.is_zero() {
            out.push(acc);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeResult {
    pub probe: String,
    pub phi_zero: bool,
    pub in_kernel: bool,
    pub in_matrix_ideal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub matrix_ideal: Vec<String>,
    pub probes: Vec<ProbeResult>,
    /// Over the integers: whether saturating the matrix ideal by the
    /// multiplier recovers the kernel.
    pub saturation_matches_kernel: Option<bool>,
}

/// Compares the kernel with the ideal generated by `T * Phi` on probe
/// polynomials (default: the cube of every pivot variable).
pub fn saturation_gap_report(
    problem: &ReesProblem,
    phi: &Presentation,
    probes: &[Polynomial],
    options: &ReesOptions,
) -> Result<GapReport, VerifyError> {
    let s = problem.s_ring();
    let m_ideal = matrix_ideal(problem, phi)?;
    let kernel = rees_equations(problem, options)?;
    let cfg = &options.groebner;
    let kernel_gb = buchberger(s, &kernel.basis, cfg)?;
    let matrix_gb = buchberger(s, &m_ideal, cfg)?;

    let probes: Vec<Polynomial> = if probes.is_empty() {
        problem
            .pivots()
            .into_iter()
            .flatten()
            .map(|t| Ok(problem.t_var(t)?.pow(3)))
            .collect::<Result<_, VerifyError>>()?
    } else {
        probes.iter().map(|p| p.reindex(s)).collect::<Result<_, _>>()?
    };
    let mut results = Vec::with_capacity(probes.len());
    for p in &probes {
        results.push(ProbeResult {
            probe: p.to_string(),
            phi_zero: substitute_phi(problem, p)?.is_zero(),
            in_kernel: member(p, &kernel_gb)?.member,
            in_matrix_ideal: member(p, &matrix_gb)?.member,
        });
    }

    let saturation_matches_kernel = match problem.ring() {
        Ring::Integers => Some(saturated_equals_kernel(problem, &m_ideal, &kernel.basis, options)?),
        _ => None,
    };
    Ok(GapReport {
        matrix_ideal: m_ideal.iter().map(|p| p.to_string()).collect(),
        probes: results,
        saturation_matches_kernel,
    })
}

fn saturated_equals_kernel(
    problem: &ReesProblem,
    m_ideal: &[Polynomial],
    kernel: &[Polynomial],
    options: &ReesOptions,
) -> Result<bool, VerifyError> {
    let f = problem.f_ring();
    let h = saturation_multiplier(problem, options.multiplier)?.reindex(f)?;
    let mut gens = vec![&(&f.var("y")? * &h) - &f.one()];
    for g in m_ideal {
        gens.push(g.reindex(f)?);
    }
    let gb = buchberger(f, &gens, &options.groebner)?;
    let sat = eliminate(&gb, &["y"])?;
    let s = problem.s_ring();
    let sat: Vec<Polynomial> = sat.basis().iter().map(|g| g.reindex(s)).collect::<Result<_, _>>()?;
    Ok(ideal_equal(s, &sat, kernel, &GroebnerConfig::default())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{PolyRing, VariableSet};

    fn ctx(n: u64, names: &[&str]) -> PolyRing {
        PolyRing::from_parts(Ring::from_modulus(n).unwrap(), VariableSet::from_names(names).unwrap())
    }

    fn problem(n: u64, x: &[&str], ideals: &[&[&str]]) -> ReesProblem {
        let ideals: Vec<Vec<&str>> = ideals.iter().map(|i| i.to_vec()).collect();
        ReesProblem::parse(Ring::from_modulus(n).unwrap(), x, &ideals).unwrap()
    }

    #[test]
    fn zero_divisor_examples() {
        let r9 = ctx(9, &["x1", "x2", "x3"]);
        assert!(
            is_nonzerodivisor(&r9.parse("2*x1^2*x2 + 6*x3").unwrap())
                .unwrap()
                .nonzerodivisor
        );
        let r8 = ctx(8, &["x1"]);
        let f = r8.parse("2*x1").unwrap();
        let c = is_nonzerodivisor(&f).unwrap();
        assert!(!c.nonzerodivisor);
        assert_eq!(c.witness, Some(BigInt::from(4)));
        assert!(f.scale(&c.witness.unwrap()).is_zero());
        assert!(
            is_nonzerodivisor(&ctx(9, &["x"]).parse("3*x + 1").unwrap())
                .unwrap()
                .nonzerodivisor
        );
        let z = is_nonzerodivisor(&r8.zero()).unwrap();
        assert_eq!(z.witness, Some(BigInt::one()));
        assert_eq!(
            is_nonzerodivisor(&ctx(0, &["x"]).parse("x").unwrap()),
            Err(VerifyError::NotPrimePower("integer"))
        );
    }

    #[test]
    fn kernel_check_examples() {
        let p = problem(8, &["x1", "x2"], &[&["2*x1", "2*x2"]]);
        assert!(kernel_check(&p, &[]).unwrap().passed);
        let t = p.s_ring().parse("T_1_1").unwrap();
        let r = kernel_check(&p, &[t]).unwrap();
        assert!(!r.passed);
        assert_eq!(r.entries[0].image, "2*x1*t_1");
        let ok = p.s_ring().parse("x1*T_2_1 - x2*T_1_1").unwrap();
        assert!(kernel_check(&p, &[ok]).unwrap().passed);
    }

    #[test]
    fn matrix_ideal_examples() {
        let p = problem(8, &["x1", "x2"], &[&["2*x1", "2*x2"]]);
        let phi = Presentation::parse(&p, &["T_1_1", "T_2_1"], &[vec!["-x2", "4", "0"], vec!["x1", "0", "4"]]).unwrap();
        let gens = matrix_ideal(&p, &phi).unwrap();
        let s = p.s_ring();
        assert_eq!(
            gens,
            vec![
                s.parse("x1*T_2_1 - x2*T_1_1").unwrap(),
                s.parse("4*T_1_1").unwrap(),
                s.parse("4*T_2_1").unwrap()
            ]
        );
        let zero = Presentation::parse(&p, &["T_1_1", "T_2_1"], &[vec!["0"], vec!["0"]]).unwrap();
        assert!(matrix_ideal(&p, &zero).unwrap().is_empty());

        let q = problem(0, &["x"], &[&["x"]]);
        let one = Presentation::parse(&q, &["T_1_1"], &[vec!["1"]]).unwrap();
        assert_eq!(
            matrix_ideal(&q, &one).unwrap(),
            vec![q.s_ring().parse("T_1_1").unwrap()]
        );

        let bad = Presentation::parse(&p, &["T_1_1"], &[vec!["1"]]).unwrap();
        assert!(matches!(matrix_ideal(&p, &bad), Err(VerifyError::RowCount { .. })));
        assert!(matches!(
            Presentation::parse(&p, &["T_9_9"], &[vec!["1"]]),
            Err(VerifyError::UnknownRow(_))
        ));
    }

    #[test]
    fn gap_report_on_powers_of_pivot() {
        let p = problem(8, &["x1", "x2"], &[&["2*x1", "2*x2"]]);
        let phi = Presentation::parse(&p, &["T_1_1", "T_2_1"], &[vec!["-x2", "4", "0"], vec!["x1", "0", "4"]]).unwrap();
        let r = saturation_gap_report(&p, &phi, &[], &ReesOptions::default()).unwrap();
        assert_eq!(r.probes.len(), 1);
        let probe = &r.probes[0];
        assert_eq!(probe.probe, "T_1_1^3");
        assert!(probe.phi_zero && probe.in_kernel && !probe.in_matrix_ideal);
        assert_eq!(r.saturation_matches_kernel, None);

        let zero = p.s_ring().zero();
        let r = saturation_gap_report(&p, &phi, &[zero], &ReesOptions::default()).unwrap();
        assert!(r.probes[0].in_kernel && r.probes[0].in_matrix_ideal);
    }

    #[test]
    fn saturated_syzygies_recover_the_kernel_over_z() {
        let (f1, f2, f3, f4) = ("6*x1^2*x2", "3*x1*x3", "5*x1*x3^2", "x2*x3");
        let p = problem(0, &["x1", "x2", "x3"], &[&[f1, f2, f3], &[f1, f2, f4]]);
        // Pairwise syzygies of each monomial ideal, block diagonal.
        let rows = ["T_1_1", "T_2_1", "T_3_1", "T_1_2", "T_2_2", "T_4_2"];
        let m: Vec<Vec<&str>> = vec![
            vec!["x3", "5*x3^2", "0", "0", "0", "0"],
            vec!["-2*x1*x2", "0", "5*x3", "0", "0", "0"],
            vec!["0", "-6*x1*x2", "-3", "0", "0", "0"],
            vec!["0", "0", "0", "x3", "x3", "0"],
            vec!["0", "0", "0", "-2*x1*x2", "0", "x2"],
            vec!["0", "0", "0", "0", "-6*x1^2", "-3*x1"],
        ];
        let phi = Presentation::parse(&p, &rows, &m).unwrap();
        for g in matrix_ideal(&p, &phi).unwrap() {
            assert!(substitute_phi(&p, &g).unwrap().is_zero(), "{g}");
        }
        let r = saturation_gap_report(&p, &phi, &[], &ReesOptions::default()).unwrap();
        assert_eq!(r.saturation_matches_kernel, Some(true));
    }
}
