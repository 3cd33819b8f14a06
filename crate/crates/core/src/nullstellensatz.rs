//! Exact coefficient extraction for products of linear factors.
//!
//! A [`FactorSystem`] is an ordered product of factors `(a − b)` where each
//! side is a variable or a constant symbol. Constants stay symbolic, so a
//! coefficient of a monomial in the variables alone is an integer.
//!
//! [`coefficient_of`] expands the product factor by factor while keeping
//! only partial monomials that can still reach the target: exponents never
//! exceed the target, every symbol must still be able to reach its target
//! with the factors left, and a symbol whose last factor has been used is
//! checked and then dropped from the state. Factors are processed in path
//! order (by the last variable they mention), so only a window of symbols is
//! ever open.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::configs::{ConfigSpec, Family};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnError {
    #[error("caterpillar polynomial needs t >= 3, got {0}")]
    TooShort(usize),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("target degree {target} differs from the {factors} factors")]
    DegreeMismatch { target: u32, factors: usize },
    #[error("factor {0} has no variable")]
    ConstantFactor(usize),
    #[error("certificates are built for subcubic caterpillars only")]
    Unsupported,
}

/// One side of a linear factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Term {
    Var(usize),
    Const(usize),
}

/// The factor `left − right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub left: Term,
    pub right: Term,
}

/// Sparse exponent vector over symbol indices. Variables use their own
/// index; constants are shifted past the variables by
/// [`FactorSystem::symbol`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(pub BTreeMap<usize, u32>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(i: usize) -> Monomial {
        Monomial([(i, 1)].into())
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (&i, &e) in &other.0 {
            *out.entry(i).or_insert(0) += e;
        }
        Monomial(out)
    }
}

/// Polynomial with arbitrary-precision integer coefficients; zero terms are
/// never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparsePoly(pub BTreeMap<Monomial, BigInt>);

impl SparsePoly {
    pub fn zero() -> SparsePoly {
        SparsePoly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> SparsePoly {
        let mut p = SparsePoly::zero();
        p.add_term(Monomial::one(), c.into());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(m.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.0.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &other.0 {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (a, ca) in &self.0 {
            for (b, cb) in &other.0 {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    /// Value at `values[i]` for symbol `i`.
    pub fn evaluate(&self, values: &[BigInt]) -> BigInt {
        self.0
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .fold(c.clone(), |acc, (&i, &e)| acc * values[i].pow(e))
            })
            .sum()
    }
}

/// An ordered product of linear factors over named variables and constants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSystem {
    pub vars: Vec<String>,
    pub consts: Vec<String>,
    pub factors: Vec<Factor>,
}

impl FactorSystem {
    pub fn new(vars: &[&str], consts: &[&str]) -> FactorSystem {
        FactorSystem {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            consts: consts.iter().map(|s| s.to_string()).collect(),
            factors: Vec::new(),
        }
    }

    /// Looks a name up among variables, then constants.
    pub fn term(&self, name: &str) -> Result<Term, CnError> {
        if let Some(i) = self.vars.iter().position(|v| v == name) {
            Ok(Term::Var(i))
        } else if let Some(i) = self.consts.iter().position(|c| c == name) {
            Ok(Term::Const(i))
        } else {
            Err(CnError::UnknownSymbol(name.to_string()))
        }
    }

    /// Appends `(left − right)` by name.
    pub fn push(&mut self, left: &str, right: &str) -> Result<(), CnError> {
        let f = Factor {
            left: self.term(left)?,
            right: self.term(right)?,
        };
        if matches!((f.left, f.right), (Term::Const(_), Term::Const(_))) {
            return Err(CnError::ConstantFactor(self.factors.len()));
        }
        self.factors.push(f);
        Ok(())
    }

    /// Symbol index of a term: variables first, then constants.
    pub fn symbol(&self, t: Term) -> usize {
        match t {
            Term::Var(i) => i,
            Term::Const(i) => self.vars.len() + i,
        }
    }

    pub fn num_symbols(&self) -> usize {
        self.vars.len() + self.consts.len()
    }

    pub fn name(&self, t: Term) -> &str {
        match t {
            Term::Var(i) => &self.vars[i],
            Term::Const(i) => &self.consts[i],
        }
    }

    /// Monomial with the given exponent on each named symbol.
    pub fn monomial(&self, exps: &[(&str, u32)]) -> Result<Monomial, CnError> {
        let mut m = Monomial::one();
        for &(name, e) in exps {
            if e > 0 {
                *m.0.entry(self.symbol(self.term(name)?)).or_insert(0) += e;
            }
        }
        Ok(m)
    }

    /// Every variable raised to `e`.
    pub fn uniform_target(&self, e: u32) -> Monomial {
        Monomial(if e == 0 {
            BTreeMap::new()
        } else {
            (0..self.vars.len()).map(|i| (i, e)).collect()
        })
    }

    /// One factor per line, `x1 - x2`.
    pub fn to_text(&self) -> String {
        self.factors
            .iter()
            .map(|f| format!("{} - {}\n", self.name(f.left), self.name(f.right)))
            .collect()
    }

    pub fn display_monomial(&self, m: &Monomial) -> String {
        if m.0.is_empty() {
            return "1".into();
        }
        m.0.iter()
            .map(|(&i, &e)| {
                let name = if i < self.vars.len() {
                    &self.vars[i]
                } else {
                    &self.consts[i - self.vars.len()]
                };
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// The factor `f` as a polynomial.
    pub fn factor_poly(&self, f: &Factor) -> SparsePoly {
        let mut p = SparsePoly::zero();
        p.add_term(Monomial::var(self.symbol(f.left)), BigInt::one());
        p.add_term(Monomial::var(self.symbol(f.right)), -BigInt::one());
        p
    }

    /// Value of the product at `values[symbol]`.
    pub fn evaluate(&self, values: &[BigInt]) -> BigInt {
        self.factors
            .iter()
            .map(|f| &values[self.symbol(f.left)] - &values[self.symbol(f.right)])
            .product()
    }
}

impl fmt::Display for FactorSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "({} − {})", self.name(fac.left), self.name(fac.right))?;
        }
        Ok(())
    }
}

/// Conflict product of the `t`-caterpillar.
///
/// Variables, in path order: `y1, x1, y2, x2, .., x(t-1), yt`, where `yi` is
/// the pendant edge at the i-th thread vertex and `xi` joins thread vertices
/// `i` and `i + 1`. Constants `c1..c6`: `c1, c2` and `c5, c6` are the stubs
/// at the two anchors, `c3` and `c4` the anchor edges of the thread. Factors
/// appear in this order:
///
/// 1. `(y2 − c3)(x2 − c3)(y(t-1) − c4)(x(t-2) − c4)`;
/// 2. `(x1 − ci)` and `(y1 − ci)` for `i = 1..3`, then `(x(t-1) − ci)` and
///    `(yt − ci)` for `i = 4..6`;
/// 3. `(xi − xj)` for `j − i ∈ {1, 2}`, by `i` then `j`;
/// 4. `(yi − yj)` for `j − i = 1`;
/// 5. `(yi − xj)` for `i − j ∈ {−1, 0, 1, 2}`, by `i` then `j`.
pub fn caterpillar_polynomial(t: usize) -> Result<FactorSystem, CnError> {
    if t < 3 {
        return Err(CnError::TooShort(t));
    }
    let x = |i: usize| format!("x{i}");
    let y = |i: usize| format!("y{i}");
    let c = |i: usize| format!("c{i}");
    let mut vars = Vec::new();
    for i in 1..=t {
        vars.push(y(i));
        if i < t {
            vars.push(x(i));
        }
    }
    let consts: Vec<String> = (1..=6).map(c).collect();
    let mut fs = FactorSystem {
        vars,
        consts,
        factors: Vec::new(),
    };
    let mut pairs: Vec<(String, String)> = vec![
        (y(2), c(3)),
        (x(2), c(3)),
        (y(t - 1), c(4)),
        (x(t - 2), c(4)),
    ];
    pairs.extend((1..=3).map(|i| (x(1), c(i))));
    pairs.extend((1..=3).map(|i| (y(1), c(i))));
    pairs.extend((4..=6).map(|i| (x(t - 1), c(i))));
    pairs.extend((4..=6).map(|i| (y(t), c(i))));
    for i in 1..t {
        for j in i + 1..=(i + 2).min(t - 1) {
            pairs.push((x(i), x(j)));
        }
    }
    pairs.extend((1..t).map(|i| (y(i), y(i + 1))));
    for i in 1..=t {
        for j in i.saturating_sub(2).max(1)..=(i + 1).min(t - 1) {
            pairs.push((y(i), x(j)));
        }
    }
    for (a, b) in pairs {
        fs.push(&a, &b)?;
    }
    Ok(fs)
}

/// Factors sorted by the position of the last symbol they mention (stable),
/// together with the index of each symbol's last factor.
fn path_order(fs: &FactorSystem) -> (Vec<(usize, usize)>, Vec<Option<usize>>) {
    let mut order: Vec<(usize, usize)> = fs
        .factors
        .iter()
        .map(|f| (fs.symbol(f.left), fs.symbol(f.right)))
        .collect();
    let key = |&(a, b): &(usize, usize)| {
        let rank = |s: usize| if s < fs.vars.len() { s } else { 0 };
        rank(a).max(rank(b))
    };
    order.sort_by_key(key);
    let mut last = vec![None; fs.num_symbols()];
    for (i, &(a, b)) in order.iter().enumerate() {
        last[a] = Some(i);
        last[b] = Some(i);
    }
    (order, last)
}

/// Exact coefficient of `target` in the expanded product (see the module
/// notes for the pruning).
pub fn coefficient_of(fs: &FactorSystem, target: &Monomial) -> BigInt {
    let n = fs.num_symbols();
    if target.0.keys().any(|&i| i >= n) || target.degree() as usize > fs.factors.len() {
        return BigInt::zero();
    }
    let caps: Vec<u8> = (0..n).map(|i| target.exponent(i).min(255) as u8).collect();
    let (order, last) = path_order(fs);
    let mut remaining = vec![0u32; n];
    for &(a, b) in &order {
        remaining[a] += 1;
        remaining[b] += 1;
    }
    // A symbol that never occurs must have exponent zero.
    if (0..n).any(|i| remaining[i] < caps[i] as u32) {
        return BigInt::zero();
    }
    let mut states: HashMap<Vec<u8>, BigInt> = HashMap::from([(vec![0u8; n], BigInt::one())]);
    for (step, &(a, b)) in order.iter().enumerate() {
        remaining[a] -= 1;
        remaining[b] -= 1;
        let mut next: HashMap<Vec<u8>, BigInt> = HashMap::with_capacity(states.len() * 2);
        for (key, coef) in states {
            for (s, positive) in [(a, true), (b, false)] {
                if key[s] >= caps[s] {
                    continue;
                }
                let mut k = key.clone();
                k[s] += 1;
                let feasible = |i: usize| k[i] as u32 + remaining[i] >= caps[i] as u32;
                if !feasible(a) || !feasible(b) {
                    continue;
                }
                for i in [a, b] {
                    if last[i] == Some(step) {
                        k[i] = 0;
                    }
                }
                let slot = next.entry(k).or_insert_with(BigInt::zero);
                if positive {
                    *slot += &coef;
                } else {
                    *slot -= &coef;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        states = next;
    }
    states.remove(&vec![0u8; n]).unwrap_or_default()
}

/// Fully expanded product, for small systems.
pub fn naive_expand(fs: &FactorSystem) -> SparsePoly {
    fs.factors.iter().fold(SparsePoly::constant(1), |acc, f| {
        acc.mul(&fs.factor_poly(f))
    })
}

/// Top-degree coefficient with the var–constant factors taken out first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopReduction {
    /// The var–var factors, in their original order.
    pub reduced: FactorSystem,
    /// Target with one degree removed per var–constant factor.
    pub target: Monomial,
    /// `±1` from the orientation of the removed factors.
    pub sign: i32,
}

/// When the target degree equals the number of factors, every factor must
/// contribute a variable, so a var–constant factor can only contribute its
/// variable. Removes those factors and lowers the target accordingly.
pub fn top_reduction(
    fs: &FactorSystem,
    target: &Monomial,
) -> Result<Option<TopReduction>, CnError> {
    if target.degree() as usize != fs.factors.len() {
        return Err(CnError::DegreeMismatch {
            target: target.degree(),
            factors: fs.factors.len(),
        });
    }
    if target.0.keys().any(|&i| i >= fs.vars.len()) {
        return Ok(None);
    }
    let mut t = target.0.clone();
    let mut sign = 1;
    let mut reduced = FactorSystem {
        factors: Vec::new(),
        ..fs.clone()
    };
    for f in &fs.factors {
        let var = match (f.left, f.right) {
            (Term::Var(_), Term::Var(_)) => {
                reduced.factors.push(*f);
                continue;
            }
            (Term::Var(v), Term::Const(_)) => v,
            (Term::Const(_), Term::Var(v)) => {
                sign = -sign;
                v
            }
            (Term::Const(_), Term::Const(_)) => return Ok(None),
        };
        match t.get_mut(&var) {
            Some(e) if *e > 0 => *e -= 1,
            _ => return Ok(None),
        }
    }
    t.retain(|_, e| *e > 0);
    Ok(Some(TopReduction {
        reduced,
        target: Monomial(t),
        sign,
    }))
}

/// [`coefficient_of`] for a target of full degree, via [`top_reduction`].
pub fn top_coefficient(fs: &FactorSystem, target: &Monomial) -> Result<BigInt, CnError> {
    Ok(match top_reduction(fs, target)? {
        None => BigInt::zero(),
        Some(r) => coefficient_of(&r.reduced, &r.target) * r.sign,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnCertificate {
    /// Coefficient as a decimal string (arbitrary precision).
    pub coefficient: String,
    pub list_size: usize,
    pub ok: bool,
}

/// Coefficient of `∏ v^(k−1)` over all variables of the caterpillar product.
/// A nonzero value of full degree certifies that every assignment of
/// `k`-lists to the interior edges extends every boundary precoloring.
pub fn cn_certificate(spec: &ConfigSpec) -> Result<CnCertificate, CnError> {
    if spec.family != Family::Caterpillar || spec.d != 3 || spec.params.len() != 1 || spec.k == 0 {
        return Err(CnError::Unsupported);
    }
    let fs = caterpillar_polynomial(spec.params[0])?;
    let target = fs.uniform_target(spec.k as u32 - 1);
    let coefficient = coefficient_of(&fs, &target);
    let ok = target.degree() as usize == fs.factors.len() && !coefficient.is_zero();
    Ok(CnCertificate {
        coefficient: coefficient.to_string(),
        list_size: spec.k,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(vars: &[&str], consts: &[&str], factors: &[(&str, &str)]) -> FactorSystem {
        let mut fs = FactorSystem::new(vars, consts);
        for (a, b) in factors {
            fs.push(a, b).unwrap();
        }
        fs
    }

    #[test]
    fn single_factor() {
        let fs = sys(&["x1", "x2"], &[], &[("x1", "x2")]);
        assert_eq!(
            coefficient_of(&fs, &fs.monomial(&[("x1", 1)]).unwrap()),
            BigInt::from(1)
        );
        assert_eq!(
            coefficient_of(&fs, &fs.monomial(&[("x2", 1)]).unwrap()),
            BigInt::from(-1)
        );
    }

    #[test]
    fn leading_coefficient_with_constants() {
        let fs = sys(&["x1"], &["c1", "c2"], &[("x1", "c1"), ("x1", "c2")]);
        let t = fs.monomial(&[("x1", 2)]).unwrap();
        assert_eq!(coefficient_of(&fs, &t), BigInt::from(1));
        assert_eq!(top_coefficient(&fs, &t).unwrap(), BigInt::from(1));
        let one = sys(&["x1"], &["c1"], &[("x1", "c1")]);
        assert_eq!(
            top_coefficient(&one, &one.monomial(&[("x1", 1)]).unwrap()).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn over_cap_target_is_zero() {
        let fs = sys(&["x1", "x2"], &[], &[("x1", "x2")]);
        let t = fs.monomial(&[("x1", 2)]).unwrap();
        assert_eq!(coefficient_of(&fs, &t), BigInt::zero());
        assert!(top_coefficient(&fs, &t).is_err());
        let t2 = sys(&["a", "b"], &[], &[("a", "b"), ("a", "b")]);
        assert_eq!(
            top_coefficient(&t2, &t2.monomial(&[("b", 2)]).unwrap()).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            top_coefficient(&t2, &t2.monomial(&[("a", 1), ("b", 1)]).unwrap()).unwrap(),
            BigInt::from(-2)
        );
    }

    #[test]
    fn caterpillar_factor_counts() {
        let fs = caterpillar_polynomial(8).unwrap();
        assert_eq!(fs.factors.len(), 60);
        assert_eq!(fs.vars.len(), 15);
        assert_eq!(fs.consts.len(), 6);
        let kinds = |f: &Factor| matches!((f.left, f.right), (Term::Var(_), Term::Var(_)));
        assert_eq!(fs.factors.iter().filter(|f| kinds(f)).count(), 44);
        let three = caterpillar_polynomial(3).unwrap();
        assert_eq!(three.vars, vec!["y1", "x1", "y2", "x2", "y3"]);
        assert!(caterpillar_polynomial(2).is_err());
        assert_eq!(fs.to_text().lines().next(), Some("y2 - c3"));
    }

    #[test]
    fn eight_caterpillar_coefficient() {
        let fs = caterpillar_polynomial(8).unwrap();
        let target = fs.uniform_target(4);
        assert_eq!(target.degree(), 60);
        assert_eq!(coefficient_of(&fs, &target), BigInt::from(-2));
        let r = top_reduction(&fs, &target).unwrap().unwrap();
        assert_eq!(r.reduced.factors.len(), 44);
        assert_eq!(top_coefficient(&fs, &target).unwrap(), BigInt::from(-2));
    }

    #[test]
    fn certificates() {
        let c8 = cn_certificate(&ConfigSpec::caterpillar(8, 3, 5)).unwrap();
        assert_eq!((c8.coefficient.as_str(), c8.ok), ("-2", true));
        let c7 = cn_certificate(&ConfigSpec::caterpillar(7, 3, 5)).unwrap();
        assert_eq!((c7.coefficient.as_str(), c7.ok), ("0", false));
        let k4 = cn_certificate(&ConfigSpec::caterpillar(8, 3, 4)).unwrap();
        assert!(!k4.ok);
        assert_eq!(
            cn_certificate(&ConfigSpec::new(Family::Y, &[1, 2, 3], 3, 5)),
            Err(CnError::Unsupported)
        );
    }

    #[test]
    fn polynomial_arithmetic() {
        let fs = sys(&["a", "b"], &["c"], &[("a", "b"), ("a", "c")]);
        let p = naive_expand(&fs);
        // (a − b)(a − c) = a² − ac − ab + bc
        assert_eq!(p.len(), 4);
        let vals = [BigInt::from(5), BigInt::from(2), BigInt::from(7)];
        assert_eq!(p.evaluate(&vals), fs.evaluate(&vals));
        assert_eq!(p.evaluate(&vals), BigInt::from(-6));
        assert_eq!(
            fs.display_monomial(&fs.monomial(&[("a", 2), ("c", 1)]).unwrap()),
            "a^2*c"
        );
        assert!(p.add(&p.mul(&SparsePoly::constant(-1))).is_empty());
    }
}
