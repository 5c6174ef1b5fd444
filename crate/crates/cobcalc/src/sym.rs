//! Coefficient ring for all series work: polynomials in the five symbolic
//! indeterminates `a1, a2, a3, a4, b` with exact rational coefficients.
//!
//! The purely rational case is the constant-polynomial instance, so one
//! coefficient type serves both the cobordism computations (rational) and
//! the abelian-variety pipeline (symbolic).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::Rat;

/// The five symbolic indeterminates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Symbol {
    A1,
    A2,
    A3,
    A4,
    B,
}

impl Symbol {
    pub const ALL: [Symbol; 5] = [Symbol::A1, Symbol::A2, Symbol::A3, Symbol::A4, Symbol::B];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::A1 => "a1",
            Symbol::A2 => "a2",
            Symbol::A3 => "a3",
            Symbol::A4 => "a4",
            Symbol::B => "b",
        }
    }

    fn index(self) -> usize {
        match self {
            Symbol::A1 => 0,
            Symbol::A2 => 1,
            Symbol::A3 => 2,
            Symbol::A4 => 3,
            Symbol::B => 4,
        }
    }
}

/// Exponent vector over [`Symbol::ALL`].
pub type SymExp = [u8; 5];

/// Sparse polynomial in `a1..a4, b` over the rationals.
///
/// Invariant: no stored coefficient is zero, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymPoly {
    terms: BTreeMap<SymExp, Rat>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        SymPoly::constant(Rat::one())
    }

    pub fn constant(value: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert([0; 5], value);
        }
        SymPoly { terms }
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut exp = [0u8; 5];
        exp[s.index()] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exp, Rat::one());
        SymPoly { terms }
    }

    /// Single term `coeff * a1^e1 ... b^e5`.
    pub fn term(coeff: Rat, exp: SymExp) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        SymPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0; 5]).is_some_and(Rat::is_one)
    }

    /// The constant rational, if the polynomial has no symbolic part.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&[0; 5]) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SymExp, &Rat)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut terms = self.terms.clone();
        for (exp, c) in &other.terms {
            let entry = terms.entry(*exp).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(exp);
            }
        }
        SymPoly { terms }
    }

    pub fn neg(&self) -> SymPoly {
        SymPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        let mut terms: BTreeMap<SymExp, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut exp = [0u8; 5];
                for k in 0..5 {
                    exp[k] = ea[k].checked_add(eb[k]).expect("symbol exponent overflow");
                }
                let entry = terms.entry(exp).or_insert_with(Rat::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&exp);
                }
            }
        }
        SymPoly { terms }
    }

    pub fn scale(&self, factor: &Rat) -> SymPoly {
        if factor.is_zero() {
            return SymPoly::zero();
        }
        SymPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect() }
    }

    /// Substitutes a polynomial for one symbol.
    pub fn substitute(&self, symbol: Symbol, value: &SymPoly) -> SymPoly {
        let idx = symbol.index();
        let mut out = SymPoly::zero();
        for (exp, c) in &self.terms {
            let mut rest = *exp;
            let power = rest[idx];
            rest[idx] = 0;
            let mut term = SymPoly::term(c.clone(), rest);
            for _ in 0..power {
                term = term.mul(value);
            }
            out = out.add(&term);
        }
        out
    }

    /// Evaluates at integer arguments, one per symbol in `Symbol::ALL` order.
    pub fn eval_int(&self, args: &[BigInt; 5]) -> Rat {
        let mut acc = Rat::zero();
        for (exp, c) in &self.terms {
            let mut m = BigInt::one();
            for k in 0..5 {
                for _ in 0..exp[k] {
                    m *= &args[k];
                }
            }
            acc += c * Rat::from(m);
        }
        acc
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut acc = BigInt::one();
        for c in self.terms.values() {
            acc = num_integer::lcm(acc, c.denom().abs());
        }
        acc
    }

    /// Largest power of 2 dividing every numerator after clearing
    /// denominators would be overkill here; this simply scales every
    /// coefficient by an integer.
    pub fn scale_int(&self, factor: &BigInt) -> SymPoly {
        self.scale(&Rat::from(factor.clone()))
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().abs() == BigInt::one())
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exp, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = Symbol::ALL
                .iter()
                .zip(exp.iter())
                .filter(|(_, &e)| e > 0)
                .map(|(s, &e)| {
                    if e == 1 {
                        s.name().to_string()
                    } else {
                        format!("{}^{}", s.name(), e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
