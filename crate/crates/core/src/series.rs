//! Truncated multivariate fractional-power series.
//!
//! A series holds finitely many terms c * x^(p/denom) with integer exponent
//! vectors p lying in a fixed line-free cone, ordered by a compatible
//! weight-then-lex order. Precision is explicit: either the support is exact
//! (polynomial), or every term of weight strictly below a rational bound T is
//! present and exact and nothing is asserted at or above T. All arithmetic
//! propagates the bound, so any order or coefficient read below it is certain.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::Integer;

use crate::cone::{Cone, OrderSpec};
use crate::cyclotomic::{CycNum, Rat};
use crate::error::{Error, Result};

/// Exponent vector with positive denominator, reduced: num/den componentwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracExp {
    num: Vec<i64>,
    den: i64,
}

impl FracExp {
    pub fn new(num: Vec<i64>, den: i64) -> FracExp {
        assert!(den > 0, "denominator must be positive");
        let mut g = den;
        for &c in &num {
            g = g.gcd(&c);
        }
        if g > 1 {
            FracExp {
                num: num.iter().map(|&c| c / g).collect(),
                den: den / g,
            }
        } else {
            FracExp { num, den }
        }
    }

    pub fn integer(num: Vec<i64>) -> FracExp {
        FracExp { num, den: 1 }
    }

    pub fn num(&self) -> &[i64] {
        &self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn dim(&self) -> usize {
        self.num.len()
    }

    pub fn as_integer(&self) -> Option<&[i64]> {
        (self.den == 1).then_some(&self.num[..])
    }

    /// Componentwise scaling by a nonnegative integer.
    pub fn scale(&self, k: i64) -> FracExp {
        FracExp::new(self.num.iter().map(|&c| c * k).collect(), self.den)
    }

    /// Numerator re-expressed over a given multiple of the denominator.
    pub fn numerator_over(&self, den: i64) -> Option<Vec<i64>> {
        if den % self.den != 0 {
            return None;
        }
        let f = den / self.den;
        Some(self.num.iter().map(|&c| c * f).collect())
    }
}

impl fmt::Display for FracExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.num.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")?;
        if self.den != 1 {
            write!(f, "/{}", self.den)?;
        }
        Ok(())
    }
}

/// Knowledge about terms not stored: everything (exact support) or everything
/// of weight strictly below a rational bound.
#[derive(Clone, Debug, PartialEq)]
pub enum Precision {
    Exact,
    Below(Rat),
}

impl Precision {
    pub fn min_with(&self, other: &Precision) -> Precision {
        match (self, other) {
            (Precision::Exact, p) => p.clone(),
            (p, Precision::Exact) => p.clone(),
            (Precision::Below(a), Precision::Below(b)) => {
                Precision::Below(if a <= b { a.clone() } else { b.clone() })
            }
        }
    }

    fn shifted(&self, by: &Rat) -> Precision {
        match self {
            Precision::Exact => Precision::Exact,
            Precision::Below(t) => Precision::Below(t + by),
        }
    }
}

/// The ambient data a series lives in. Two series interoperate when their
/// dimension, cone and order agree; denominators are unified on the fly.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesCtx {
    pub dim: usize,
    pub denom: i64,
    pub cone: Cone,
    pub order: OrderSpec,
}

impl SeriesCtx {
    pub fn new(dim: usize, denom: i64, cone: Cone, order: OrderSpec) -> SeriesCtx {
        assert!(denom >= 1);
        assert_eq!(cone.dim(), dim);
        assert_eq!(order.dim(), dim);
        SeriesCtx {
            dim,
            denom,
            cone,
            order,
        }
    }

    pub fn zero(&self) -> FracSeries {
        FracSeries {
            dim: self.dim,
            denom: self.denom,
            terms: BTreeMap::new(),
            cone: self.cone.clone(),
            order: self.order.clone(),
            precision: Precision::Exact,
        }
    }

    pub fn constant(&self, c: CycNum) -> FracSeries {
        self.monomial(vec![0; self.dim], c).unwrap()
    }

    pub fn one(&self) -> FracSeries {
        self.constant(CycNum::one())
    }

    pub fn monomial(&self, key: Vec<i64>, c: CycNum) -> Result<FracSeries> {
        self.from_terms(vec![(key, c)], Precision::Exact)
    }

    pub fn from_terms(
        &self,
        pairs: Vec<(Vec<i64>, CycNum)>,
        precision: Precision,
    ) -> Result<FracSeries> {
        let mut terms: BTreeMap<Vec<i64>, CycNum> = BTreeMap::new();
        for (key, c) in pairs {
            if key.len() != self.dim {
                return Err(Error::BadInput(format!(
                    "exponent {:?} does not have dimension {}",
                    key, self.dim
                )));
            }
            if !self.cone.contains(&key) {
                return Err(Error::BadInput(format!(
                    "exponent {:?}/{} lies outside the cone",
                    key, self.denom
                )));
            }
            match terms.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = &*e.get() + &c;
                    *e.get_mut() = s;
                }
            }
        }
        let mut s = FracSeries {
            dim: self.dim,
            denom: self.denom,
            terms,
            cone: self.cone.clone(),
            order: self.order.clone(),
            precision,
        };
        s.prune();
        Ok(s)
    }
}

#[derive(Clone, Debug)]
pub struct FracSeries {
    dim: usize,
    denom: i64,
    terms: BTreeMap<Vec<i64>, CycNum>,
    cone: Cone,
    order: OrderSpec,
    precision: Precision,
}

impl FracSeries {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn order_spec(&self) -> &OrderSpec {
        &self.order
    }

    pub fn precision(&self) -> &Precision {
        &self.precision
    }

    pub fn ctx(&self) -> SeriesCtx {
        SeriesCtx {
            dim: self.dim,
            denom: self.denom,
            cone: self.cone.clone(),
            order: self.order.clone(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &CycNum)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Exactly zero, as opposed to merely having no certain terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.precision == Precision::Exact
    }

    pub fn is_exact(&self) -> bool {
        self.precision == Precision::Exact
    }

    pub fn has_terms(&self) -> bool {
        !self.terms.is_empty()
    }

    fn weight_of(&self, key: &[i64]) -> Rat {
        self.order.weight_frac(key, self.denom)
    }

    /// Drop exact zeros and terms at or above the precision bound.
    fn prune(&mut self) {
        match &self.precision {
            Precision::Exact => {
                self.terms.retain(|_, c| !c.is_zero());
            }
            Precision::Below(t) => {
                let order = self.order.clone();
                let denom = self.denom;
                self.terms
                    .retain(|k, c| !c.is_zero() && order.weight_frac(k, denom) < *t);
            }
        }
    }

    fn assert_compatible(&self, other: &FracSeries) {
        assert_eq!(self.dim, other.dim, "series dimensions differ");
        assert_eq!(self.cone, other.cone, "series cones differ");
        assert_eq!(self.order, other.order, "series orders differ");
    }

    /// Same value over a denominator that the current one divides.
    pub fn lift_denom(&self, den: i64) -> FracSeries {
        assert!(den >= self.denom && den % self.denom == 0);
        if den == self.denom {
            return self.clone();
        }
        let f = den / self.denom;
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.iter().map(|&x| x * f).collect(), c.clone()))
            .collect();
        FracSeries {
            denom: den,
            terms,
            ..self.clone()
        }
    }

    /// Re-express over an arbitrary denominator; fails when some exponent is
    /// not representable there.
    pub fn rebase_denom(&self, den: i64) -> Result<FracSeries> {
        assert!(den >= 1);
        if den == self.denom {
            return Ok(self.clone());
        }
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let mapped: Option<Vec<i64>> = k
                .iter()
                .map(|&x| {
                    let t = x as i128 * den as i128;
                    (t % self.denom as i128 == 0).then(|| (t / self.denom as i128) as i64)
                })
                .collect();
            match mapped {
                Some(v) => {
                    terms.insert(v, c.clone());
                }
                None => {
                    return Err(Error::BadInput(format!(
                        "exponent {:?}/{} is not representable over denominator {}",
                        k, self.denom, den
                    )))
                }
            }
        }
        Ok(FracSeries {
            denom: den,
            terms,
            ..self.clone()
        })
    }

    /// Smallest denominator representation.
    pub fn reduced_denom(&self) -> FracSeries {
        let mut g = self.denom;
        for k in self.terms.keys() {
            for &c in k {
                g = g.gcd(&c);
            }
        }
        if g <= 1 {
            return self.clone();
        }
        self.rebase_denom(self.denom / g)
            .expect("gcd rebase is exact")
    }

    fn unified(&self, other: &FracSeries) -> (FracSeries, FracSeries) {
        self.assert_compatible(other);
        if self.denom == other.denom {
            (self.clone(), other.clone())
        } else {
            let m = self.denom.lcm(&other.denom);
            (self.lift_denom(m), other.lift_denom(m))
        }
    }

    /// Lower bound on the weight of the order of the true series; None means
    /// plus infinity (the series is exactly zero).
    fn order_weight_lb(&self) -> Option<Rat> {
        if let Some((k, _)) = self.leading_stored() {
            return Some(self.weight_of(k));
        }
        match &self.precision {
            Precision::Exact => None,
            Precision::Below(t) => Some(t.clone()),
        }
    }

    fn leading_stored(&self) -> Option<(&Vec<i64>, &CycNum)> {
        self.terms
            .iter()
            .min_by(|(a, _), (b, _)| self.order.compare(a, b))
    }

    /// Leading term under the order: Ok(None) for the exact zero series,
    /// an error when no term is certain.
    pub fn leading(&self) -> Result<Option<(Vec<i64>, CycNum)>> {
        match self.leading_stored() {
            Some((k, c)) => Ok(Some((k.clone(), c.clone()))),
            None => match &self.precision {
                Precision::Exact => Ok(None),
                Precision::Below(t) => Err(Error::PrecisionExhausted(format!(
                    "no term certain below weight {}",
                    t
                ))),
            },
        }
    }

    /// Order as a reduced exponent vector; None is minus infinity (zero).
    pub fn order_exp(&self) -> Result<Option<FracExp>> {
        Ok(self.leading()?.map(|(k, _)| FracExp::new(k, self.denom)))
    }

    /// The initial form: leading coefficient times leading monomial.
    pub fn info(&self) -> Result<Option<FracSeries>> {
        Ok(self.leading()?.map(|(k, c)| {
            let mut s = self.ctx().zero();
            s.terms.insert(k, c);
            s
        }))
    }

    pub fn scale(&self, c: &CycNum) -> FracSeries {
        if c.is_zero() {
            return self.ctx().zero();
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        FracSeries {
            terms,
            ..self.clone()
        }
    }

    /// Multiply by the single term c * x^exp.
    pub fn mul_monomial(&self, exp: &FracExp, c: &CycNum) -> Result<FracSeries> {
        if c.is_zero() {
            return Ok(self.ctx().zero());
        }
        let den = self.denom.lcm(&exp.den());
        let lifted = self.lift_denom(den);
        let shift = exp
            .numerator_over(den)
            .expect("lcm covers both denominators");
        let wshift = self.order.weight_frac(&shift, den);
        let mut terms = BTreeMap::new();
        for (k, v) in &lifted.terms {
            let key: Vec<i64> = k.iter().zip(shift.iter()).map(|(a, b)| a + b).collect();
            if !lifted.cone.contains(&key) {
                return Err(Error::BadInput(format!(
                    "shifted exponent {:?}/{} lies outside the cone",
                    key, den
                )));
            }
            terms.insert(key, v * c);
        }
        let mut out = FracSeries {
            terms,
            precision: lifted.precision.shifted(&wshift),
            ..lifted
        };
        out.prune();
        Ok(out)
    }

    /// Keep exactly the terms with exponent strictly below m under the order.
    pub fn truncate_below(&self, m: &FracExp) -> FracSeries {
        let terms: BTreeMap<Vec<i64>, CycNum> = self
            .terms
            .iter()
            .filter(|(k, _)| {
                self.order.compare_scaled(k, self.denom, m.num(), m.den()) == Ordering::Less
            })
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        let precision = match &self.precision {
            Precision::Exact => Precision::Exact,
            Precision::Below(t) => {
                let wm = self.order.weight_frac(m.num(), m.den());
                if wm < *t {
                    // every term below m is certain, so the truncation is exact
                    Precision::Exact
                } else {
                    Precision::Below(t.clone())
                }
            }
        };
        let mut out = FracSeries {
            terms,
            precision,
            ..self.clone()
        };
        out.prune();
        out
    }

    /// Forget everything at or above the weight bound.
    pub fn cap_weight(&self, bound: &Rat) -> FracSeries {
        let precision = self.precision.min_with(&Precision::Below(bound.clone()));
        let mut out = FracSeries {
            precision,
            ..self.clone()
        };
        out.prune();
        out
    }

    /// Move to another cone/order pair containing the support. Requires an
    /// exact series unless the weight form is preserved by the caller.
    pub fn with_context(&self, cone: Cone, order: OrderSpec) -> Result<FracSeries> {
        assert_eq!(cone.dim(), self.dim);
        for k in self.terms.keys() {
            if !cone.contains(k) {
                return Err(Error::BadInput(format!(
                    "exponent {:?}/{} lies outside the target cone",
                    k, self.denom
                )));
            }
        }
        if !self.is_exact() && order.weight() != self.order.weight() {
            return Err(Error::BadInput(
                "cannot change the order of a truncated series".into(),
            ));
        }
        Ok(FracSeries {
            cone,
            order,
            ..self.clone()
        })
    }

    /// Substitute x_i^(1/denom) -> omega_i * x_i^(1/denom); each omega_i must
    /// be a denom-th root of unity, so supports are preserved.
    pub fn apply_automorphism(&self, omega: &[CycNum]) -> Result<FracSeries> {
        if omega.len() != self.dim {
            return Err(Error::BadInput(
                "automorphism arity differs from dimension".into(),
            ));
        }
        for w in omega {
            if !w.pow(self.denom)?.is_one() {
                return Err(Error::BadInput(format!(
                    "{} is not a {}-th root of unity",
                    w, self.denom
                )));
            }
        }
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let mut factor = CycNum::one();
            for (w, &p) in omega.iter().zip(k.iter()) {
                factor = &factor * &w.pow(p.rem_euclid(self.denom))?;
            }
            terms.insert(k.clone(), &factor * c);
        }
        Ok(FracSeries {
            terms,
            ..self.clone()
        })
    }

    /// The automorphism sending x_i^(1/n) to zeta_n^(a_i) x_i^(1/n), applied
    /// after lifting the series to denominator n.
    pub fn apply_tuple(&self, tuple: &[i64], n: i64) -> Result<FracSeries> {
        let lifted = self.lift_to_conjugation_denom(n)?;
        let omega: Vec<CycNum> = tuple
            .iter()
            .map(|&a| CycNum::root_of_unity(a, n as u64))
            .collect();
        lifted.apply_automorphism(&omega)
    }

    fn lift_to_conjugation_denom(&self, n: i64) -> Result<FracSeries> {
        self.lift_denom_checked(n)
    }

    /// Lift to a denominator the current one must divide.
    pub fn lift_denom_checked(&self, den: i64) -> Result<FracSeries> {
        if den % self.denom != 0 {
            return Err(Error::BadInput(format!(
                "series denominator {} does not divide {}",
                self.denom, den
            )));
        }
        Ok(self.lift_denom(den))
    }

    /// Order of y - theta(y) for the tuple automorphism: the smallest stored
    /// exponent whose character value is nontrivial; None when the twist
    /// fixes every stored term. Integer arithmetic only: the character on
    /// exponent p is zeta_n^(tuple . p).
    pub fn twist_difference_key(&self, tuple: &[i64], n: i64) -> Result<Option<Vec<i64>>> {
        let lifted = self.lift_to_conjugation_denom(n)?;
        Ok(lifted
            .terms
            .keys()
            .filter(|k| dot_mod(tuple, k, n) != 0)
            .min_by(|a, b| lifted.order.compare(a, b))
            .cloned())
    }

    /// Representative automorphism tuples of the distinct conjugates, the
    /// identity first. Two tuples are identified when their characters agree
    /// on the stored support; for a truncated series this decides equality
    /// of the conjugates to the stated precision.
    pub fn conjugate_tuples(&self, n: i64) -> Result<Vec<Vec<i64>>> {
        let lifted = self.lift_to_conjugation_denom(n)?;
        if lifted.terms.is_empty() {
            return match &lifted.precision {
                Precision::Exact => Ok(vec![vec![0; self.dim]]),
                Precision::Below(t) => Err(Error::PrecisionExhausted(format!(
                    "cannot separate conjugates: no term certain below weight {}",
                    t
                ))),
            };
        }
        let keys: Vec<&Vec<i64>> = lifted.terms.keys().collect();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut reps: Vec<Vec<i64>> = Vec::new();
        let mut tuple = vec![0i64; self.dim];
        loop {
            let sig: Vec<i64> = keys.iter().map(|k| dot_mod(&tuple, k, n)).collect();
            if seen.insert(sig) {
                reps.push(tuple.clone());
            }
            let mut i = self.dim;
            let mut done = true;
            while i > 0 {
                i -= 1;
                if tuple[i] + 1 < n {
                    tuple[i] += 1;
                    for t in tuple.iter_mut().skip(i + 1) {
                        *t = 0;
                    }
                    done = false;
                    break;
                }
            }
            if done {
                break;
            }
        }
        Ok(reps)
    }

    /// The distinct conjugates under the n^e automorphism tuples, self first.
    pub fn conjugates(&self, n: i64) -> Result<Vec<FracSeries>> {
        let reps = self.conjugate_tuples(n)?;
        reps.iter().map(|t| self.apply_tuple(t, n)).collect()
    }
}

fn dot_mod(tuple: &[i64], key: &[i64], n: i64) -> i64 {
    tuple
        .iter()
        .zip(key.iter())
        .map(|(&a, &p)| (a as i128 * p as i128).rem_euclid(n as i128) as i64)
        .sum::<i64>()
        .rem_euclid(n)
}

impl PartialEq for FracSeries {
    /// Equality of represented values (precision is not compared).
    fn eq(&self, other: &FracSeries) -> bool {
        if self.dim != other.dim || self.cone != other.cone || self.order != other.order {
            return false;
        }
        let (a, b) = self.unified(other);
        a.terms == b.terms
    }
}

impl Add for &FracSeries {
    type Output = FracSeries;
    fn add(self, other: &FracSeries) -> FracSeries {
        let (mut a, b) = self.unified(other);
        for (k, c) in b.terms {
            match a.terms.entry(k) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = &*e.get() + &c;
                    *e.get_mut() = s;
                }
            }
        }
        a.precision = a.precision.min_with(&b.precision);
        a.prune();
        a
    }
}

impl Sub for &FracSeries {
    type Output = FracSeries;
    fn sub(self, other: &FracSeries) -> FracSeries {
        self + &(-other)
    }
}

impl Neg for &FracSeries {
    type Output = FracSeries;
    fn neg(self) -> FracSeries {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect();
        FracSeries {
            terms,
            ..self.clone()
        }
    }
}

impl Mul for &FracSeries {
    type Output = FracSeries;
    fn mul(self, other: &FracSeries) -> FracSeries {
        self.assert_compatible(other);
        if self.is_zero() || other.is_zero() {
            return self.ctx().zero();
        }
        let (a, b) = self.unified(other);
        let mut precision = Precision::Exact;
        if let Precision::Below(t) = &a.precision {
            let lb = b.order_weight_lb().expect("b is not exactly zero");
            precision = precision.min_with(&Precision::Below(t + &lb));
        }
        if let Precision::Below(t) = &b.precision {
            let lb = a.order_weight_lb().expect("a is not exactly zero");
            precision = precision.min_with(&Precision::Below(t + &lb));
        }
        let mut terms: BTreeMap<Vec<i64>, CycNum> = BTreeMap::new();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let key: Vec<i64> = ka.iter().zip(kb.iter()).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                match terms.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = &*e.get() + &prod;
                        *e.get_mut() = s;
                    }
                }
            }
        }
        let mut out = FracSeries {
            terms,
            precision,
            ..a
        };
        out.prune();
        out
    }
}

impl fmt::Display for FracSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "series(n={}", self.denom)?;
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by(|a, b| self.order.compare(a, b));
        for k in keys {
            let c = &self.terms[k];
            let cs = format!("{}", c);
            write!(f, "; (")?;
            for (i, x) in k.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x)?;
            }
            if cs.contains(' ') {
                write!(f, ") -> ({})", cs)?;
            } else {
                write!(f, ") -> {}", cs)?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::compatible_order;
    use crate::cyclotomic::rat;

    fn orthant_ctx(dim: usize, denom: i64) -> SeriesCtx {
        let cone = Cone::orthant(dim);
        let order = compatible_order(&cone).unwrap();
        SeriesCtx::new(dim, denom, cone, order)
    }

    fn one() -> CycNum {
        CycNum::one()
    }

    #[test]
    fn construction_rejects_out_of_cone_exponents() {
        let ctx = orthant_ctx(2, 2);
        assert!(ctx.monomial(vec![-1, 0], one()).is_err());
        assert!(ctx.monomial(vec![1, 0], one()).is_ok());
    }

    #[test]
    fn leading_term_of_polynomial_support() {
        // x^(3/2) - x^2 has order 3/2 with unit coefficient
        let ctx = orthant_ctx(1, 2);
        let s = ctx
            .from_terms(
                vec![(vec![3], one()), (vec![4], CycNum::from_int(-1))],
                Precision::Exact,
            )
            .unwrap();
        let (k, c) = s.leading().unwrap().unwrap();
        assert_eq!(k, vec![3]);
        assert!(c.is_one());
        assert_eq!(s.order_exp().unwrap().unwrap(), FracExp::new(vec![3], 2));
    }

    #[test]
    fn zero_order_is_minus_infinity_and_truncated_zero_errors() {
        let ctx = orthant_ctx(1, 2);
        assert!(ctx.zero().leading().unwrap().is_none());
        let foggy = ctx.from_terms(vec![], Precision::Below(rat(3, 1))).unwrap();
        assert!(matches!(foggy.leading(), Err(Error::PrecisionExhausted(_))));
    }

    #[test]
    fn square_of_sum_of_square_roots() {
        // (x1^(1/2) + x2^(1/2))^2 = x1 + 2 (x1 x2)^(1/2) + x2
        let ctx = orthant_ctx(2, 2);
        let s = ctx
            .from_terms(
                vec![(vec![1, 0], one()), (vec![0, 1], one())],
                Precision::Exact,
            )
            .unwrap();
        let sq = &s * &s;
        let expect = ctx
            .from_terms(
                vec![
                    (vec![2, 0], one()),
                    (vec![1, 1], CycNum::from_int(2)),
                    (vec![0, 2], one()),
                ],
                Precision::Exact,
            )
            .unwrap();
        assert_eq!(sq, expect);
        assert!(sq.is_exact());
    }

    #[test]
    fn product_precision_bound_is_propagated() {
        // O(a) = 1/2 known below 5/2, b = x^(1/2) exact: product known below 3
        let ctx = orthant_ctx(1, 2);
        let a = ctx
            .from_terms(vec![(vec![1], one())], Precision::Below(rat(5, 2)))
            .unwrap();
        let b = ctx.monomial(vec![1], one()).unwrap();
        let p = &a * &b;
        assert_eq!(p.precision(), &Precision::Below(rat(3, 1)));
        assert_eq!(p.order_exp().unwrap().unwrap(), FracExp::new(vec![2], 2));
    }

    #[test]
    fn addition_keeps_the_weaker_precision() {
        let ctx = orthant_ctx(1, 1);
        let a = ctx
            .from_terms(vec![(vec![1], one())], Precision::Below(rat(2, 1)))
            .unwrap();
        let b = ctx
            .from_terms(vec![(vec![3], one())], Precision::Below(rat(4, 1)))
            .unwrap();
        let s = &a + &b;
        assert_eq!(s.precision(), &Precision::Below(rat(2, 1)));
        // the (3) term sits at or above the bound and is discarded
        assert_eq!(s.term_count(), 1);
    }

    #[test]
    fn truncate_below_keeps_strictly_smaller_terms() {
        // u + v truncated below (3,3)/4 keeps u = x^((2,2)/4)
        let ctx = orthant_ctx(2, 4);
        let y = ctx
            .from_terms(
                vec![(vec![2, 2], one()), (vec![3, 3], one())],
                Precision::Exact,
            )
            .unwrap();
        let t = y.truncate_below(&FracExp::new(vec![3, 3], 4));
        assert_eq!(t.term_count(), 1);
        assert!(t.terms().next().unwrap().0 == &vec![2, 2]);
        assert!(t.is_exact());
    }

    #[test]
    fn automorphism_multiplies_by_characters() {
        // omega = (i, 1) sends u + v to -u - i v
        let ctx = orthant_ctx(2, 4);
        let y = ctx
            .from_terms(
                vec![(vec![2, 2], one()), (vec![3, 3], one())],
                Precision::Exact,
            )
            .unwrap();
        let img = y
            .apply_automorphism(&[CycNum::root_of_unity(1, 4), CycNum::one()])
            .unwrap();
        let expect = ctx
            .from_terms(
                vec![
                    (vec![2, 2], CycNum::from_int(-1)),
                    (vec![3, 3], -&CycNum::root_of_unity(1, 4)),
                ],
                Precision::Exact,
            )
            .unwrap();
        assert_eq!(img, expect);
    }

    #[test]
    fn conjugates_of_quartic_root() {
        // u + v with u = (x1 x2)^(1/2), v = (x1 x2)^(3/4): four conjugates
        let ctx = orthant_ctx(2, 4);
        let y = ctx
            .from_terms(
                vec![(vec![2, 2], one()), (vec![3, 3], one())],
                Precision::Exact,
            )
            .unwrap();
        let cs = y.conjugates(4).unwrap();
        assert_eq!(cs.len(), 4);
        assert_eq!(cs[0], y);
        // u - v, -u - i v, -u + i v must all occur
        let i = CycNum::root_of_unity(1, 4);
        let build = |cu: CycNum, cv: CycNum| {
            ctx.from_terms(vec![(vec![2, 2], cu), (vec![3, 3], cv)], Precision::Exact)
                .unwrap()
        };
        for expected in [
            build(one(), CycNum::from_int(-1)),
            build(CycNum::from_int(-1), -&i),
            build(CycNum::from_int(-1), i.clone()),
        ] {
            assert!(cs.contains(&expected));
        }
    }

    #[test]
    fn conjugates_of_half_integer_exponent() {
        let ctx = orthant_ctx(1, 2);
        let y = ctx
            .from_terms(
                vec![(vec![3], one()), (vec![4], CycNum::from_int(-1))],
                Precision::Exact,
            )
            .unwrap();
        let cs = y.conjugates(2).unwrap();
        assert_eq!(cs.len(), 2);
        let expect = ctx
            .from_terms(
                vec![
                    (vec![3], CycNum::from_int(-1)),
                    (vec![4], CycNum::from_int(-1)),
                ],
                Precision::Exact,
            )
            .unwrap();
        assert_eq!(cs[1], expect);
    }

    #[test]
    fn integer_support_has_single_conjugate() {
        let ctx = orthant_ctx(2, 2);
        let y = ctx
            .from_terms(
                vec![(vec![2, 0], one()), (vec![2, 4], one())],
                Precision::Exact,
            )
            .unwrap();
        assert_eq!(y.conjugates(2).unwrap().len(), 1);
    }

    #[test]
    fn conjugate_count_times_stabiliser_is_group_order() {
        // brute-force stabiliser count against the dedup logic
        let ctx = orthant_ctx(2, 4);
        for support in [
            vec![vec![2, 2], vec![3, 3]],
            vec![vec![2, 0], vec![0, 2]],
            vec![vec![4, 0], vec![1, 1]],
            vec![vec![4, 4]],
        ] {
            let y = ctx
                .from_terms(
                    support.iter().map(|k| (k.clone(), one())).collect(),
                    Precision::Exact,
                )
                .unwrap();
            let count = y.conjugates(4).unwrap().len();
            let mut stab = 0usize;
            for a in 0..4i64 {
                for b in 0..4i64 {
                    if support.iter().all(|k| dot_mod(&[a, b], k, 4) == 0) {
                        stab += 1;
                    }
                }
            }
            assert_eq!(count * stab, 16, "support {:?}", support);
        }
    }

    #[test]
    fn twist_difference_key_finds_first_moved_term() {
        let ctx = orthant_ctx(2, 4);
        let y = ctx
            .from_terms(
                vec![(vec![2, 2], one()), (vec![3, 3], one())],
                Precision::Exact,
            )
            .unwrap();
        // tuple (1,1): character on (2,2) is zeta_4^4 = 1, on (3,3) it is not
        assert_eq!(
            y.twist_difference_key(&[1, 1], 4).unwrap(),
            Some(vec![3, 3])
        );
        // tuple (1,0) moves (2,2) already
        assert_eq!(
            y.twist_difference_key(&[1, 0], 4).unwrap(),
            Some(vec![2, 2])
        );
        assert_eq!(y.twist_difference_key(&[0, 0], 4).unwrap(), None);
    }

    #[test]
    fn rebase_denominator_checks_divisibility() {
        let ctx = orthant_ctx(1, 4);
        let s = ctx.monomial(vec![2], one()).unwrap();
        let r = s.rebase_denom(2).unwrap();
        assert_eq!(r.denom(), 2);
        assert_eq!(r.terms().next().unwrap().0, &vec![1]);
        let odd = ctx.monomial(vec![3], one()).unwrap();
        assert!(odd.rebase_denom(2).is_err());
    }

    #[test]
    fn display_is_series_literal() {
        let ctx = orthant_ctx(2, 4);
        let y = ctx
            .from_terms(
                vec![(vec![3, 3], one()), (vec![2, 2], CycNum::from_int(-2))],
                Precision::Exact,
            )
            .unwrap();
        assert_eq!(format!("{}", y), "series(n=4; (2,2) -> -2; (3,3) -> 1)");
    }
}
