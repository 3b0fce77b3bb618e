//! Rational polyhedral cones and compatible additive monomial orders.
//!
//! A cone is given by integer generators. Orders are weight-then-lex: compare
//! the integer weight first, then the exponent vectors lexicographically with
//! coordinate 1 most significant. A weight vector strictly positive on every
//! generator makes this order compatible with the cone (positive on nonzero
//! lattice points of the cone) and well-founded there.

use std::cmp::Ordering;

use num::bigint::BigInt;
use num::{Signed, Zero};

use crate::cyclotomic::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    generators: Vec<Vec<i64>>,
}

impl Cone {
    pub fn new(dim: usize, generators: Vec<Vec<i64>>) -> Result<Cone> {
        if dim == 0 {
            return Err(Error::BadInput("cone dimension must be positive".into()));
        }
        if generators.is_empty() {
            return Err(Error::BadInput("cone needs at least one generator".into()));
        }
        for g in &generators {
            if g.len() != dim {
                return Err(Error::BadInput(format!(
                    "generator {:?} does not have dimension {}",
                    g, dim
                )));
            }
            if g.iter().all(|&c| c == 0) {
                return Err(Error::BadInput("zero vector cannot generate a cone".into()));
            }
        }
        Ok(Cone { dim, generators })
    }

    /// The first orthant: generated by the canonical basis.
    pub fn orthant(dim: usize) -> Cone {
        let generators = (0..dim)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                v
            })
            .collect();
        Cone { dim, generators }
    }

    /// The cone c_1 >= -(c_2 + ... + c_e), c_i >= 0 for i >= 2, generated by
    /// (1,0,...,0) and (-1,0,...,1,...,0). Exponent supports land here after
    /// the blowup substitution is undone.
    pub fn standard_blowup(dim: usize) -> Cone {
        let mut generators = vec![{
            let mut v = vec![0; dim];
            v[0] = 1;
            v
        }];
        for i in 1..dim {
            let mut v = vec![0; dim];
            v[0] = -1;
            v[i] = 1;
            generators.push(v);
        }
        Cone { dim, generators }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Exact membership: is v a nonnegative rational combination of the
    /// generators? Decided by eliminating the combination coefficients.
    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.dim);
        if v.iter().all(|&c| c == 0) {
            return true;
        }
        let k = self.generators.len();
        let mut sys: Vec<LinCon> = Vec::new();
        for i in 0..k {
            let mut row = vec![Rat::zero(); k];
            row[i] = int_rat(1);
            sys.push(LinCon {
                coeffs: row,
                constant: Rat::zero(),
                strict: false,
            });
        }
        for j in 0..self.dim {
            let row: Vec<Rat> = self.generators.iter().map(|g| int_rat(g[j])).collect();
            let c = int_rat(v[j]);
            sys.push(LinCon {
                coeffs: row.clone(),
                constant: -c.clone(),
                strict: false,
            });
            let neg: Vec<Rat> = row.iter().map(|x| -x).collect();
            sys.push(LinCon {
                coeffs: neg,
                constant: c,
                strict: false,
            });
        }
        fm_feasible(sys, k)
    }

    /// Gordan's alternative: the cone is line-free exactly when some weight
    /// vector is strictly positive on every generator.
    pub fn is_line_free(&self) -> bool {
        let sys: Vec<LinCon> = self
            .generators
            .iter()
            .map(|g| LinCon {
                coeffs: g.iter().map(|&c| int_rat(c)).collect(),
                constant: int_rat(-1),
                strict: false,
            })
            .collect();
        fm_feasible(sys, self.dim)
    }
}

fn int_rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// sum(coeffs[i] * x_i) + constant >= 0, or > 0 when strict.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct LinCon {
    coeffs: Vec<Rat>,
    constant: Rat,
    strict: bool,
}

impl LinCon {
    fn normalize(mut self) -> LinCon {
        let scale = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .find(|c| !c.is_zero())
            .map(|c| c.abs());
        if let Some(s) = scale {
            for c in self.coeffs.iter_mut() {
                *c = &*c / &s;
            }
            self.constant = &self.constant / &s;
        }
        self
    }
}

/// Fourier-Motzkin feasibility over Q, exact. Supports strict inequalities.
fn fm_feasible(mut sys: Vec<LinCon>, nvars: usize) -> bool {
    for var in 0..nvars {
        let mut pos: Vec<LinCon> = Vec::new();
        let mut neg: Vec<LinCon> = Vec::new();
        let mut rest: Vec<LinCon> = Vec::new();
        for con in sys.drain(..) {
            match con.coeffs[var].cmp(&Rat::zero()) {
                Ordering::Greater => pos.push(con),
                Ordering::Less => neg.push(con),
                Ordering::Equal => rest.push(con),
            }
        }
        let mut seen = std::collections::HashSet::new();
        for p in &pos {
            for n in &neg {
                // scale p by -n[var] (> 0) and n by p[var] (> 0), then add
                let a = -n.coeffs[var].clone();
                let b = p.coeffs[var].clone();
                let coeffs: Vec<Rat> = p
                    .coeffs
                    .iter()
                    .zip(n.coeffs.iter())
                    .map(|(x, y)| &(x * &a) + &(y * &b))
                    .collect();
                let constant = &(&p.constant * &a) + &(&n.constant * &b);
                let con = LinCon {
                    coeffs,
                    constant,
                    strict: p.strict || n.strict,
                }
                .normalize();
                if con.coeffs.iter().all(|c| c.is_zero()) {
                    // variable-free residue: check immediately
                    if !constant_holds(&con) {
                        return false;
                    }
                } else if seen.insert(con.clone()) {
                    rest.push(con);
                }
            }
        }
        sys = rest;
    }
    sys.iter().all(constant_holds)
}

fn constant_holds(con: &LinCon) -> bool {
    debug_assert!(con.coeffs.iter().all(|c| c.is_zero()));
    if con.strict {
        con.constant.is_positive()
    } else {
        !con.constant.is_negative()
    }
}

/// A weight-then-lex additive total order on exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSpec {
    weight: Vec<i64>,
}

impl OrderSpec {
    pub fn new(weight: Vec<i64>) -> OrderSpec {
        assert!(!weight.is_empty());
        OrderSpec { weight }
    }

    pub fn dim(&self) -> usize {
        self.weight.len()
    }

    pub fn weight(&self) -> &[i64] {
        &self.weight
    }

    pub fn dot(&self, v: &[i64]) -> i128 {
        debug_assert_eq!(v.len(), self.weight.len());
        self.weight
            .iter()
            .zip(v.iter())
            .map(|(&w, &x)| w as i128 * x as i128)
            .sum()
    }

    pub fn compare(&self, a: &[i64], b: &[i64]) -> Ordering {
        match self.dot(a).cmp(&self.dot(b)) {
            Ordering::Equal => a.cmp(b),
            o => o,
        }
    }

    /// Compare a/da against b/db without leaving integer arithmetic.
    pub fn compare_scaled(&self, a: &[i64], da: i64, b: &[i64], db: i64) -> Ordering {
        debug_assert!(da > 0 && db > 0);
        let wa = self.dot(a) * db as i128;
        let wb = self.dot(b) * da as i128;
        match wa.cmp(&wb) {
            Ordering::Equal => {
                for (x, y) in a.iter().zip(b.iter()) {
                    match (*x as i128 * db as i128).cmp(&(*y as i128 * da as i128)) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            o => o,
        }
    }

    /// w . v / den as an exact rational.
    pub fn weight_frac(&self, v: &[i64], den: i64) -> Rat {
        Rat::new(BigInt::from(self.dot(v)), BigInt::from(den))
    }
}

/// The canonical order compatible with a line-free cone: the weight is the
/// first vector strictly positive on all generators when scanning max-norm
/// balls of radius 1, 2, ... in lexicographic order.
pub fn compatible_order(cone: &Cone) -> Result<OrderSpec> {
    if !cone.is_line_free() {
        return Err(Error::NotLineFree);
    }
    let e = cone.dim();
    let strictly_positive = |w: &[i64]| {
        cone.generators().iter().all(|g| {
            g.iter()
                .zip(w.iter())
                .map(|(&a, &b)| a as i128 * b as i128)
                .sum::<i128>()
                > 0
        })
    };
    for radius in 1i64..=1_000 {
        let mut w = vec![-radius; e];
        'ball: loop {
            // interior points were covered by smaller balls
            if w.iter().any(|&c| c.abs() == radius) && strictly_positive(&w) {
                return Ok(OrderSpec::new(w));
            }
            let mut i = e;
            while i > 0 {
                i -= 1;
                if w[i] < radius {
                    w[i] += 1;
                    for c in w.iter_mut().skip(i + 1) {
                        *c = -radius;
                    }
                    continue 'ball;
                }
            }
            break;
        }
    }
    Err(Error::InvariantViolation(
        "no compatible weight within max-norm 1000 for a line-free cone".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn orthant_is_line_free_with_unit_weight() {
        let c = Cone::orthant(2);
        assert!(c.is_line_free());
        assert_eq!(compatible_order(&c).unwrap().weight(), &[1, 1]);
    }

    #[test]
    fn blowup_cone_weight_is_one_two() {
        let c = Cone::standard_blowup(2);
        assert!(c.is_line_free());
        assert_eq!(compatible_order(&c).unwrap().weight(), &[1, 2]);
    }

    #[test]
    fn full_plane_is_not_line_free() {
        let c = Cone::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1]]).unwrap();
        assert!(!c.is_line_free());
        assert!(matches!(compatible_order(&c), Err(Error::NotLineFree)));
    }

    #[test]
    fn half_line_negative_direction() {
        // line-free even though it points away from the orthant
        let c = Cone::new(2, vec![vec![-1, 1]]).unwrap();
        assert!(c.is_line_free());
        let o = compatible_order(&c).unwrap();
        assert_eq!(o.weight(), &[-1, 0]);
    }

    #[test]
    fn membership_in_blowup_cone() {
        let c = Cone::standard_blowup(2);
        assert!(c.contains(&[-3, 6])); // -3 >= -6
        assert!(c.contains(&[0, 0]));
        assert!(c.contains(&[5, 0]));
        assert!(!c.contains(&[-3, 2])); // -3 < -2
        assert!(!c.contains(&[0, -1]));
    }

    #[test]
    fn membership_in_orthant() {
        let c = Cone::orthant(3);
        assert!(c.contains(&[0, 2, 5]));
        assert!(!c.contains(&[-1, 2, 5]));
    }

    #[test]
    fn compare_weight_then_lex() {
        let o = OrderSpec::new(vec![1, 1]);
        // equal weight 2: lex tiebreak, coordinate 1 most significant
        assert_eq!(o.compare(&[0, 2], &[2, 0]), Ordering::Less);
        assert_eq!(o.compare(&[2, 0], &[0, 2]), Ordering::Greater);
        assert_eq!(o.compare(&[1, 0], &[0, 2]), Ordering::Less);
        assert_eq!(o.compare(&[1, 1], &[1, 1]), Ordering::Equal);
    }

    #[test]
    fn compare_scaled_cross_denominator() {
        let o = OrderSpec::new(vec![1, 2]);
        // (3,0)/2 = weight 3/2 against (1,1)/1 = weight 3
        assert_eq!(o.compare_scaled(&[3, 0], 2, &[1, 1], 1), Ordering::Less);
        // (2,2)/2 equals (1,1)/1 exactly
        assert_eq!(o.compare_scaled(&[2, 2], 2, &[1, 1], 1), Ordering::Equal);
    }

    #[test]
    fn standard_blowup_cones_line_free_up_to_four() {
        for e in 1..=4 {
            assert!(Cone::standard_blowup(e).is_line_free(), "e = {}", e);
            compatible_order(&Cone::standard_blowup(e)).unwrap();
        }
    }

    proptest! {
        #[test]
        fn order_is_additive_and_total(
            a in proptest::collection::vec(-20i64..21, 3),
            b in proptest::collection::vec(-20i64..21, 3),
            k in proptest::collection::vec(-20i64..21, 3),
        ) {
            let o = compatible_order(&Cone::standard_blowup(3)).unwrap();
            let shift = |v: &[i64]| -> Vec<i64> {
                v.iter().zip(k.iter()).map(|(x, y)| x + y).collect()
            };
            prop_assert_eq!(o.compare(&a, &b), o.compare(&shift(&a), &shift(&b)));
            prop_assert_eq!(o.compare(&a, &b), o.compare(&b, &a).reverse());
            if o.compare(&a, &b) == Ordering::Equal {
                prop_assert_eq!(&a, &b);
            }
        }

        #[test]
        fn order_positive_on_cone_points(
            lambda in proptest::collection::vec(0i64..15, 3),
        ) {
            let cone = Cone::standard_blowup(3);
            let o = compatible_order(&cone).unwrap();
            let mut v = vec![0i64; 3];
            for (l, g) in lambda.iter().zip(cone.generators()) {
                for (vi, gi) in v.iter_mut().zip(g.iter()) {
                    *vi += l * gi;
                }
            }
            prop_assert!(cone.contains(&v));
            if v.iter().any(|&c| c != 0) {
                prop_assert_eq!(o.compare(&v, &[0, 0, 0]), Ordering::Greater);
            }
        }
    }
}
