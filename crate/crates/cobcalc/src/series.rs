//! Sparse truncated graded polynomial arithmetic over the [`SymPoly`]
//! coefficient ring.
//!
//! A series lives over a [`VariableTable`] fixing the graded variables,
//! their degrees, and optional nilpotency bounds (a bound of `k` imposes
//! `x^k = 0`, which is how quotient rings like `Z[h]/(h^{k+1})` are
//! modeled). Terms above the truncation degree are discarded by every
//! operation. All binary operations panic when the two operands disagree
//! on table or truncation; mixing rings is a programming error, not a
//! runtime condition.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::{rat, Rat};
use crate::sym::SymPoly;

/// One graded variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarDef {
    pub name: String,
    pub degree: u32,
    /// Smallest power that vanishes, if any: `x^nilpotency = 0`.
    pub nilpotency: Option<u32>,
}

/// Ordered list of graded variables; shared by all series over one ring.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VariableTable {
    vars: Vec<VarDef>,
}

impl VariableTable {
    pub fn new(vars: Vec<VarDef>) -> Arc<Self> {
        let mut seen = std::collections::HashSet::new();
        for v in &vars {
            assert!(v.degree >= 1, "variable degree must be >= 1");
            assert!(seen.insert(v.name.clone()), "duplicate variable name {}", v.name);
            if let Some(b) = v.nilpotency {
                assert!(b >= 1, "nilpotency bound must be >= 1");
            }
        }
        Arc::new(VariableTable { vars })
    }

    /// Table with a single variable of degree 1 and no nilpotency.
    pub fn single(name: &str) -> Arc<Self> {
        VariableTable::new(vec![VarDef { name: name.into(), degree: 1, nilpotency: None }])
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[VarDef] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    fn weighted_degree(&self, exp: &[u16]) -> u32 {
        exp.iter()
            .zip(&self.vars)
            .map(|(&e, v)| u32::from(e) * v.degree)
            .sum()
    }

    fn killed(&self, exp: &[u16]) -> bool {
        exp.iter()
            .zip(&self.vars)
            .any(|(&e, v)| v.nilpotency.is_some_and(|b| u32::from(e) >= b))
    }
}

/// Sparse truncated series: exponent vector -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedSeries {
    table: Arc<VariableTable>,
    truncation: u32,
    terms: BTreeMap<Vec<u16>, SymPoly>,
}

impl GradedSeries {
    pub fn zero(table: Arc<VariableTable>, truncation: u32) -> Self {
        GradedSeries { table, truncation, terms: BTreeMap::new() }
    }

    pub fn constant(table: Arc<VariableTable>, truncation: u32, value: SymPoly) -> Self {
        let mut s = GradedSeries::zero(table, truncation);
        s.add_term(vec![0; s.table.len()], value);
        s
    }

    pub fn one(table: Arc<VariableTable>, truncation: u32) -> Self {
        GradedSeries::constant(table, truncation, SymPoly::one())
    }

    /// The variable at `index` as a series.
    pub fn var(table: Arc<VariableTable>, truncation: u32, index: usize) -> Self {
        let mut exp = vec![0u16; table.len()];
        exp[index] = 1;
        let mut s = GradedSeries::zero(table, truncation);
        s.add_term(exp, SymPoly::one());
        s
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u16>, &SymPoly)> {
        self.terms.iter()
    }

    /// Adds `coeff` to the monomial `exp`, enforcing truncation, nilpotency
    /// and the no-zero-coefficients invariant.
    pub fn add_term(&mut self, exp: Vec<u16>, coeff: SymPoly) {
        assert_eq!(exp.len(), self.table.len(), "exponent vector length mismatch");
        if coeff.is_zero()
            || self.table.weighted_degree(&exp) > self.truncation
            || self.table.killed(&exp)
        {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    fn assert_compatible(&self, other: &GradedSeries) {
        assert!(
            Arc::ptr_eq(&self.table, &other.table) || self.table == other.table,
            "series defined over different variable tables"
        );
        assert_eq!(self.truncation, other.truncation, "series truncation mismatch");
    }

    pub fn add(&self, other: &GradedSeries) -> GradedSeries {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(exp.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> GradedSeries {
        GradedSeries {
            table: self.table.clone(),
            truncation: self.truncation,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &GradedSeries) -> GradedSeries {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &GradedSeries) -> GradedSeries {
        self.assert_compatible(other);
        let mut out = GradedSeries::zero(self.table.clone(), self.truncation);
        for (ea, ca) in &self.terms {
            let da = self.table.weighted_degree(ea);
            for (eb, cb) in &other.terms {
                if da + self.table.weighted_degree(eb) > self.truncation {
                    continue;
                }
                let exp: Vec<u16> = ea
                    .iter()
                    .zip(eb.iter())
                    .map(|(&x, &y)| x.checked_add(y).expect("exponent overflow"))
                    .collect();
                if self.table.killed(&exp) {
                    continue;
                }
                out.add_term(exp, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, factor: &SymPoly) -> GradedSeries {
        let mut out = GradedSeries::zero(self.table.clone(), self.truncation);
        for (exp, c) in &self.terms {
            out.add_term(exp.clone(), c.mul(factor));
        }
        out
    }

    pub fn scale_rat(&self, factor: &Rat) -> GradedSeries {
        self.scale(&SymPoly::constant(factor.clone()))
    }

    /// Coefficient of the given monomial (zero when absent).
    pub fn coefficient_of(&self, exp: &[u16]) -> SymPoly {
        assert_eq!(exp.len(), self.table.len(), "exponent vector length mismatch");
        self.terms.get(exp).cloned().unwrap_or_else(SymPoly::zero)
    }

    /// Coefficient of a monomial given as `(name, exponent)` pairs.
    pub fn coefficient_of_named(&self, monomial: &[(&str, u16)]) -> SymPoly {
        let mut exp = vec![0u16; self.table.len()];
        for (name, e) in monomial {
            let idx = self
                .table
                .index_of(name)
                .unwrap_or_else(|| panic!("unknown variable {name}"));
            exp[idx] = *e;
        }
        self.coefficient_of(&exp)
    }

    /// The constant term.
    pub fn constant_term(&self) -> SymPoly {
        self.coefficient_of(&vec![0u16; self.table.len()])
    }

    /// The homogeneous component of weighted degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> GradedSeries {
        let mut out = GradedSeries::zero(self.table.clone(), self.truncation);
        for (exp, c) in &self.terms {
            if self.table.weighted_degree(exp) == d {
                out.add_term(exp.clone(), c.clone());
            }
        }
        out
    }

    /// Discards all terms of weighted degree above `d` and lowers the
    /// truncation to `d`.
    pub fn truncate_to(&self, d: u32) -> GradedSeries {
        assert!(d <= self.truncation, "cannot raise truncation by truncate_to");
        let mut out = GradedSeries::zero(self.table.clone(), d);
        for (exp, c) in &self.terms {
            out.add_term(exp.clone(), c.clone());
        }
        out
    }

    /// Reinterprets the series at a higher truncation degree. Sound only
    /// when the caller knows the extra degrees are genuinely zero (for
    /// example, a polynomial produced below the old bound).
    pub fn with_truncation(&self, d: u32) -> GradedSeries {
        assert!(d >= self.truncation);
        let mut out = GradedSeries::zero(self.table.clone(), d);
        for (exp, c) in &self.terms {
            out.add_term(exp.clone(), c.clone());
        }
        out
    }

    /// Multiplicative inverse of a series with constant term 1.
    ///
    /// Panics when the constant term is not 1; no general localization is
    /// provided.
    pub fn invert_unit(&self) -> GradedSeries {
        assert!(self.constant_term().is_one(), "invert_unit requires constant term 1");
        // p = 1 - u with u of positive degree, so 1/p = sum_k u^k.
        let u = GradedSeries::one(self.table.clone(), self.truncation).sub(self);
        let mut out = GradedSeries::one(self.table.clone(), self.truncation);
        let mut power = GradedSeries::one(self.table.clone(), self.truncation);
        for _ in 1..=self.truncation {
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        out
    }

    /// Formal logarithm; requires constant term 1.
    pub fn log(&self) -> GradedSeries {
        assert!(self.constant_term().is_one(), "series log requires constant term 1");
        let u = self.sub(&GradedSeries::one(self.table.clone(), self.truncation));
        // log(1+u) = sum_{k>=1} (-1)^{k+1} u^k / k
        let mut out = GradedSeries::zero(self.table.clone(), self.truncation);
        let mut power = GradedSeries::one(self.table.clone(), self.truncation);
        for k in 1..=i64::from(self.truncation.max(1)) {
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { rat(1, k) } else { rat(-1, k) };
            out = out.add(&power.scale_rat(&sign));
        }
        out
    }

    /// Formal exponential; requires constant term 0.
    pub fn exp(&self) -> GradedSeries {
        assert!(self.constant_term().is_zero(), "series exp requires constant term 0");
        let mut out = GradedSeries::one(self.table.clone(), self.truncation);
        let mut power = GradedSeries::one(self.table.clone(), self.truncation);
        let mut factorial = Rat::one();
        for k in 1..=i64::from(self.truncation.max(1)) {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            factorial *= rat(k, 1);
            out = out.add(&power.scale_rat(&factorial.recip()));
        }
        out
    }

    /// `self^n` by repeated multiplication.
    pub fn pow(&self, n: u32) -> GradedSeries {
        let mut out = GradedSeries::one(self.table.clone(), self.truncation);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Canonical text rendering: monomials sorted by weighted degree then
    /// exponent vector, lowest degree first. Deterministic for golden tests.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<&Vec<u16>> = self.terms.keys().collect();
        keys.sort_by_key(|e| (self.table.weighted_degree(e), (*e).clone()));
        let mut out = String::new();
        for (i, exp) in keys.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let coeff = &self.terms[**exp];
            let vars: Vec<String> = exp
                .iter()
                .zip(self.table.vars())
                .filter(|(&e, _)| e > 0)
                .map(|(&e, v)| {
                    if e == 1 {
                        v.name.clone()
                    } else {
                        format!("{}^{}", v.name, e)
                    }
                })
                .collect();
            let coeff_str = coeff.to_string();
            let needs_parens = coeff.iter().count() > 1
                || (coeff.as_rational().is_none() && coeff_str.contains('-'));
            if vars.is_empty() {
                out.push_str(&coeff_str);
            } else if coeff.is_one() {
                out.push_str(&vars.join("*"));
            } else if needs_parens {
                out.push_str(&format!("({})*{}", coeff_str, vars.join("*")));
            } else {
                out.push_str(&format!("{}*{}", coeff_str, vars.join("*")));
            }
        }
        out
    }
}

impl fmt::Debug for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
