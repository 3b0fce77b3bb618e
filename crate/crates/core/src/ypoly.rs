//! Polynomials in a distinguished variable y whose coefficients are
//! fractional-power series in the base variables.
//!
//! coeffs[k] is the coefficient of y^k. Leading coefficients that are exactly
//! zero are trimmed; coefficients that merely have no certain terms are kept,
//! so a truncated polynomial never overstates what it knows.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use std::collections::HashMap;

use crate::cyclotomic::{rat, CycNum};
use crate::error::{Error, Result};
use crate::series::{FracSeries, SeriesCtx};

#[derive(Clone, Debug)]
pub struct SeriesPoly {
    ctx: SeriesCtx,
    coeffs: Vec<FracSeries>,
}

impl SeriesPoly {
    pub fn from_coeffs(coeffs: Vec<FracSeries>) -> SeriesPoly {
        assert!(
            !coeffs.is_empty(),
            "a polynomial needs at least one coefficient"
        );
        let ctx = coeffs[0].ctx();
        let mut p = SeriesPoly { ctx, coeffs };
        p.normalize();
        p
    }

    pub fn zero(ctx: &SeriesCtx) -> SeriesPoly {
        SeriesPoly {
            ctx: ctx.clone(),
            coeffs: vec![ctx.zero()],
        }
    }

    pub fn constant(c: FracSeries) -> SeriesPoly {
        SeriesPoly::from_coeffs(vec![c])
    }

    /// The monic monomial y^k.
    pub fn y_power(ctx: &SeriesCtx, k: usize) -> SeriesPoly {
        let mut coeffs = vec![ctx.zero(); k + 1];
        coeffs[k] = ctx.one();
        SeriesPoly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
        for c in &self.coeffs {
            assert_eq!(c.dim(), self.ctx.dim, "coefficient dimension mismatch");
            assert_eq!(c.cone(), &self.ctx.cone, "coefficient cone mismatch");
            assert_eq!(
                c.order_spec(),
                &self.ctx.order,
                "coefficient order mismatch"
            );
        }
    }

    pub fn ctx(&self) -> &SeriesCtx {
        &self.ctx
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeff(&self, k: usize) -> FracSeries {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    pub fn coeffs(&self) -> &[FracSeries] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> &FracSeries {
        self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        *self.leading_coeff() == self.ctx.one() && self.leading_coeff().is_exact()
    }

    pub fn map_coeffs(&self, f: impl Fn(&FracSeries) -> Result<FracSeries>) -> Result<SeriesPoly> {
        let coeffs: Vec<FracSeries> = self.coeffs.iter().map(f).collect::<Result<_>>()?;
        Ok(SeriesPoly::from_coeffs(coeffs))
    }

    pub fn scale_series(&self, s: &FracSeries) -> SeriesPoly {
        SeriesPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn scale_num(&self, c: &CycNum) -> SeriesPoly {
        SeriesPoly::from_coeffs(self.coeffs.iter().map(|s| s.scale(c)).collect())
    }

    pub fn derivative_y(&self) -> SeriesPoly {
        if self.coeffs.len() == 1 {
            return SeriesPoly::zero(&self.ctx);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&CycNum::from_int(k as i64)))
            .collect();
        SeriesPoly::from_coeffs(coeffs)
    }

    /// Horner evaluation at a series point.
    pub fn eval(&self, point: &FracSeries) -> FracSeries {
        let mut acc = point.ctx().zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * point) + c;
        }
        acc
    }

    /// Quotient and remainder by a monic divisor. Exact on stored terms;
    /// precision bounds ride along on the coefficients.
    pub fn divmod(&self, div: &SeriesPoly) -> Result<(SeriesPoly, SeriesPoly)> {
        if !div.is_monic() {
            return Err(Error::InvariantViolation(
                "polynomial division requires a monic divisor".into(),
            ));
        }
        let d = div.degree();
        let n = self.degree();
        if n < d || self.is_zero() {
            return Ok((SeriesPoly::zero(&self.ctx), self.clone()));
        }
        let mut rem: Vec<FracSeries> = self.coeffs.clone();
        let mut q: Vec<FracSeries> = vec![self.ctx.zero(); n - d + 1];
        for k in (d..=n).rev() {
            let factor = rem[k].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..d {
                rem[k - d + j] = &rem[k - d + j] - &(&factor * &div.coeffs[j]);
            }
            q[k - d] = factor;
        }
        rem.truncate(d);
        if rem.is_empty() {
            rem.push(self.ctx.zero());
        }
        Ok((SeriesPoly::from_coeffs(q), SeriesPoly::from_coeffs(rem)))
    }

    /// Digits of the base-g expansion, constant digit first:
    /// self = sum digits[i] * g^i with deg digits[i] < deg g.
    pub fn adic_digits(&self, g: &SeriesPoly) -> Result<Vec<SeriesPoly>> {
        if g.degree() == 0 {
            return Err(Error::BadInput("adic expansion needs deg >= 1".into()));
        }
        let mut digits = Vec::new();
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divmod(g)?;
            digits.push(r);
            if q.is_zero() {
                break;
            }
            cur = q;
        }
        Ok(digits)
    }

    /// One coefficient-killing step: g -> g + a_1/d where a_1 is the
    /// coefficient of g^(d-1) in the base-g expansion of self, d = deg
    /// self / deg g. Iterating this drives a_1 to zero in characteristic 0.
    pub fn tschirnhausen(&self, g: &SeriesPoly) -> Result<SeriesPoly> {
        let d = self.tschirnhausen_digit_index(g)?;
        let digits = self.adic_digits(g)?;
        let a1 = digits
            .get(d - 1)
            .cloned()
            .unwrap_or_else(|| SeriesPoly::zero(&self.ctx));
        Ok(&a1.scale_num(&CycNum::from_rat(rat(1, d as i64))) + g)
    }

    fn tschirnhausen_digit_index(&self, g: &SeriesPoly) -> Result<usize> {
        let n = self.degree();
        let dg = g.degree();
        if dg == 0 || n % dg != 0 || n == 0 {
            return Err(Error::BadInput(format!(
                "degree {} is not a positive multiple of {}",
                n, dg
            )));
        }
        Ok(n / dg)
    }

    /// The unique monic g of degree n/d with deg(self - g^d) < n - n/d,
    /// reached by iterating the digit-killing step from y^(n/d).
    pub fn approximate_root(&self, d: i64) -> Result<SeriesPoly> {
        let n = self.degree();
        if !self.is_monic() {
            return Err(Error::InvariantViolation(
                "approximate roots are defined for monic polynomials".into(),
            ));
        }
        if d < 1 || n == 0 || n as i64 % d != 0 {
            return Err(Error::BadInput(format!(
                "{} does not divide the degree {}",
                d, n
            )));
        }
        let quot = n / d as usize;
        let mut g = SeriesPoly::y_power(&self.ctx, quot);
        let bound = quot + 2;
        for _ in 0..bound {
            let digits = self.adic_digits(&g)?;
            let a1 = digits
                .get(d as usize - 1)
                .cloned()
                .unwrap_or_else(|| SeriesPoly::zero(&self.ctx));
            if a1.is_zero() {
                return Ok(g);
            }
            g = &g + &a1.scale_num(&CycNum::from_rat(rat(1, d)));
        }
        Err(Error::NoConvergence { bound })
    }

    /// Expansion over a nested family: basis is ascending in degree and each
    /// degree divides the next. Returns (exponent tuple, constant
    /// coefficient) pairs; tuple[i] is the power of basis[i].
    pub fn sequence_expansion(
        &self,
        basis: &[SeriesPoly],
    ) -> Result<Vec<(Vec<usize>, FracSeries)>> {
        if basis.is_empty() {
            if self.degree() > 0 {
                return Err(Error::BadInput(
                    "nonconstant polynomial with an empty expansion basis".into(),
                ));
            }
            return Ok(vec![(vec![], self.coeff(0))]);
        }
        let (head, top) = basis.split_at(basis.len() - 1);
        let digits = self.adic_digits(&top[0])?;
        let mut out = Vec::new();
        for (e, digit) in digits.iter().enumerate() {
            for (mut tuple, c) in digit.sequence_expansion(head)? {
                tuple.push(e);
                out.push((tuple, c));
            }
        }
        Ok(out)
    }

    /// Substitute y -> y + s via the Taylor expansion around s.
    pub fn taylor_shift(&self, s: &FracSeries) -> SeriesPoly {
        let n = self.degree();
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut der = self.clone();
        let mut fact = rat(1, 1);
        for j in 0..=n {
            if j > 0 {
                fact = fact * rat(j as i64, 1);
            }
            let c = der.eval(s).scale(&CycNum::from_rat(rat(1, 1) / &fact));
            coeffs.push(c);
            der = der.derivative_y();
        }
        SeriesPoly::from_coeffs(coeffs)
    }

    /// Sylvester resultant in y, eliminating without dividing by series:
    /// column-by-column minor expansion over used-row masks, signs from
    /// inversion counts. Requires exact coefficients.
    pub fn resultant_y(&self, g: &SeriesPoly) -> FracSeries {
        for c in self.coeffs.iter().chain(g.coeffs.iter()) {
            assert!(c.is_exact(), "resultants need exact coefficients");
        }
        if self.is_zero() || g.is_zero() {
            return self.ctx.zero();
        }
        let m = self.degree();
        let n = g.degree();
        let size = m + n;
        if size == 0 {
            return self.ctx.one();
        }
        assert!(size <= 30, "resultant size {} too large", size);
        // rows 0..n-1: shifts of f (descending coefficients); rows n..: shifts of g
        let entry = |r: usize, c: usize| -> Option<&FracSeries> {
            if r < n {
                let j = c.checked_sub(r)?;
                if j > m {
                    return None;
                }
                Some(&self.coeffs[m - j])
            } else {
                let i = r - n;
                let j = c.checked_sub(i)?;
                if j > n {
                    return None;
                }
                Some(&g.coeffs[n - j])
            }
        };
        let mut states: HashMap<u32, FracSeries> = HashMap::new();
        states.insert(0, self.ctx.one());
        for c in 0..size {
            let mut next: HashMap<u32, FracSeries> = HashMap::new();
            for (mask, val) in &states {
                for r in 0..size {
                    if mask & (1 << r) != 0 {
                        continue;
                    }
                    let Some(e) = entry(r, c) else { continue };
                    if e.is_zero() {
                        continue;
                    }
                    let inversions = (mask >> (r + 1)).count_ones();
                    let mut term = val * e;
                    if inversions % 2 == 1 {
                        term = -&term;
                    }
                    let key = mask | (1 << r);
                    match next.entry(key) {
                        std::collections::hash_map::Entry::Vacant(slot) => {
                            slot.insert(term);
                        }
                        std::collections::hash_map::Entry::Occupied(mut slot) => {
                            let s = &*slot.get() + &term;
                            *slot.get_mut() = s;
                        }
                    }
                }
            }
            states = next;
        }
        let full = if size == 32 {
            u32::MAX
        } else {
            (1u32 << size) - 1
        };
        states.remove(&full).unwrap_or_else(|| self.ctx.zero())
    }

    pub fn discriminant_y(&self) -> FracSeries {
        self.resultant_y(&self.derivative_y())
    }
}

/// The monic polynomial whose roots are the distinct conjugates of y under
/// the automorphisms x_i^(1/n) -> zeta x_i^(1/n). Coefficients must descend
/// to integer exponents; otherwise the orbit does not define a polynomial
/// over the base ring.
pub fn minimal_polynomial(y: &FracSeries, n: i64) -> Result<SeriesPoly> {
    let conj = y.conjugates(n)?;
    let ctx = conj[0].ctx();
    let mut poly = SeriesPoly::constant(ctx.one());
    for c in &conj {
        let factor = SeriesPoly::from_coeffs(vec![-c, ctx.one()]);
        poly = &poly * &factor;
    }
    poly.map_coeffs(|s| {
        s.rebase_denom(1).map_err(|_| {
            Error::NotGaloisStable(format!(
                "conjugate product has a fractional exponent in {}",
                s
            ))
        })
    })
}

impl PartialEq for SeriesPoly {
    fn eq(&self, other: &SeriesPoly) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl Add for &SeriesPoly {
    type Output = SeriesPoly;
    fn add(self, other: &SeriesPoly) -> SeriesPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        SeriesPoly::from_coeffs(coeffs)
    }
}

impl Sub for &SeriesPoly {
    type Output = SeriesPoly;
    fn sub(self, other: &SeriesPoly) -> SeriesPoly {
        self + &(-other)
    }
}

impl Neg for &SeriesPoly {
    type Output = SeriesPoly;
    fn neg(self) -> SeriesPoly {
        SeriesPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &SeriesPoly {
    type Output = SeriesPoly;
    fn mul(self, other: &SeriesPoly) -> SeriesPoly {
        if self.is_zero() || other.is_zero() {
            return SeriesPoly::zero(&self.ctx);
        }
        let mut coeffs = vec![self.ctx.zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        SeriesPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for SeriesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.coeffs.len() > 1 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*y", c)?,
                _ => write!(f, "({})*y^{}", c, k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::{compatible_order, Cone};
    use crate::series::Precision;

    fn ctx(dim: usize, denom: i64) -> SeriesCtx {
        let cone = Cone::orthant(dim);
        let order = compatible_order(&cone).unwrap();
        SeriesCtx::new(dim, denom, cone, order)
    }

    fn one() -> CycNum {
        CycNum::one()
    }

    fn mono(c: &SeriesCtx, key: Vec<i64>, k: i64) -> FracSeries {
        c.monomial(key, CycNum::from_int(k)).unwrap()
    }

    /// y^2 - x^3 over one variable.
    fn cusp(c: &SeriesCtx) -> SeriesPoly {
        SeriesPoly::from_coeffs(vec![mono(c, vec![3], -1), c.zero(), c.one()])
    }

    /// y^4 - 2 x1 x2 y^2 - 4 x1^2 x2^2 y + x1^2 x2^2 - x1^3 x2^3.
    fn quartic(c: &SeriesCtx) -> SeriesPoly {
        let a0 = c
            .from_terms(
                vec![
                    (vec![2, 2], CycNum::from_int(1)),
                    (vec![3, 3], CycNum::from_int(-1)),
                ],
                Precision::Exact,
            )
            .unwrap();
        SeriesPoly::from_coeffs(vec![
            a0,
            mono(c, vec![2, 2], -4),
            mono(c, vec![1, 1], -2),
            c.zero(),
            c.one(),
        ])
    }

    #[test]
    fn divmod_of_cusp_by_linear() {
        // y^2 - x^3 = (y - x^2)(y + x^2) + (x^4 - x^3)
        let c = ctx(1, 1);
        let f = cusp(&c);
        let g = SeriesPoly::from_coeffs(vec![mono(&c, vec![2], -1), c.one()]);
        let (q, r) = f.divmod(&g).unwrap();
        assert_eq!(
            q,
            SeriesPoly::from_coeffs(vec![mono(&c, vec![2], 1), c.one()])
        );
        let expect_r = &mono(&c, vec![4], 1) + &mono(&c, vec![3], -1);
        assert_eq!(r, SeriesPoly::constant(expect_r));
    }

    #[test]
    fn division_requires_monic_divisor() {
        let c = ctx(1, 1);
        let f = cusp(&c);
        let g = SeriesPoly::from_coeffs(vec![c.one(), mono(&c, vec![1], 2)]);
        assert!(matches!(f.divmod(&g), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn adic_digits_of_cusp() {
        // y^2 - x^3 = (y-x)^2 + 2x (y-x) + (x^2 - x^3)
        let c = ctx(1, 1);
        let f = cusp(&c);
        let g = SeriesPoly::from_coeffs(vec![mono(&c, vec![1], -1), c.one()]);
        let digits = f.adic_digits(&g).unwrap();
        assert_eq!(digits.len(), 3);
        let a2 = &mono(&c, vec![2], 1) + &mono(&c, vec![3], -1);
        assert_eq!(digits[0], SeriesPoly::constant(a2));
        assert_eq!(digits[1], SeriesPoly::constant(mono(&c, vec![1], 2)));
        assert_eq!(digits[2], SeriesPoly::constant(c.one()));
    }

    #[test]
    fn digit_killing_step_recenters() {
        // tau moves y - x to y: the digit 2x contributes +2x/2
        let c = ctx(1, 1);
        let f = cusp(&c);
        let g = SeriesPoly::from_coeffs(vec![mono(&c, vec![1], -1), c.one()]);
        let t = f.tschirnhausen(&g).unwrap();
        assert_eq!(t, SeriesPoly::y_power(&c, 1));
    }

    #[test]
    fn approximate_square_root_of_cusp_is_y() {
        let c = ctx(1, 1);
        let f = cusp(&c);
        assert_eq!(f.approximate_root(2).unwrap(), SeriesPoly::y_power(&c, 1));
    }

    #[test]
    fn approximate_square_root_of_quartic() {
        // two digit-killing steps land on y^2 - x1 x2
        let c = ctx(2, 1);
        let f = quartic(&c);
        let g = f.approximate_root(2).unwrap();
        let expect = SeriesPoly::from_coeffs(vec![mono(&c, vec![1, 1], -1), c.zero(), c.one()]);
        assert_eq!(g, expect);
    }

    #[test]
    fn resultant_of_cusp_with_parabola() {
        // Res_y(y^2 - x^3, y - x^2) = x^4 - x^3
        let c = ctx(1, 1);
        let f = cusp(&c);
        let g = SeriesPoly::from_coeffs(vec![mono(&c, vec![2], -1), c.one()]);
        let r = f.resultant_y(&g);
        assert_eq!(r, &mono(&c, vec![4], 1) + &mono(&c, vec![3], -1));
    }

    #[test]
    fn discriminant_of_conic() {
        // disc_y(y^2 - x2) = -4 x2 with the raw Sylvester sign
        let c = ctx(2, 1);
        let f = SeriesPoly::from_coeffs(vec![mono(&c, vec![0, 1], -1), c.zero(), c.one()]);
        assert_eq!(f.discriminant_y(), mono(&c, vec![0, 1], -4));
    }

    #[test]
    fn resultant_with_constant_is_power() {
        let c = ctx(1, 1);
        let f = cusp(&c);
        let g = SeriesPoly::constant(c.constant(CycNum::from_int(3)));
        assert_eq!(f.resultant_y(&g), c.constant(CycNum::from_int(9)));
    }

    #[test]
    fn resultant_matches_product_over_roots() {
        // Res_y(y^2 - x2, y - x2) = (x2^(1/2) - x2)(-x2^(1/2) - x2) = x2^2 - x2
        let c = ctx(2, 1);
        let f = SeriesPoly::from_coeffs(vec![mono(&c, vec![0, 1], -1), c.zero(), c.one()]);
        let g = SeriesPoly::from_coeffs(vec![mono(&c, vec![0, 1], -1), c.one()]);
        let r = f.resultant_y(&g);
        assert_eq!(r, &mono(&c, vec![0, 2], 1) + &mono(&c, vec![0, 1], -1));
    }

    #[test]
    fn evaluation_at_a_true_root_vanishes() {
        // u + v with u = (x1 x2)^(1/2), v = (x1 x2)^(3/4) solves the quartic
        let c = ctx(2, 1);
        let f = quartic(&c);
        let c4 = ctx(2, 4);
        let root = c4
            .from_terms(
                vec![(vec![2, 2], one()), (vec![3, 3], one())],
                Precision::Exact,
            )
            .unwrap();
        let lifted = f.map_coeffs(|s| Ok(s.lift_denom(4))).unwrap();
        assert!(lifted.eval(&root).is_zero());
    }

    #[test]
    fn minimal_polynomial_of_quartic_root() {
        let c4 = ctx(2, 4);
        let root = c4
            .from_terms(
                vec![(vec![2, 2], one()), (vec![3, 3], one())],
                Precision::Exact,
            )
            .unwrap();
        let p = minimal_polynomial(&root, 4).unwrap();
        let c = ctx(2, 1);
        assert_eq!(p, quartic(&c));
        assert_eq!(p.ctx().denom, 1);
    }

    #[test]
    fn minimal_polynomial_of_mixed_half_integer_term() {
        // x1^(1/2) x2 has the two conjugates +-x1^(1/2) x2, so the minimal
        // polynomial is y^2 - x1 x2^2
        let c4 = ctx(2, 4);
        let y = c4.monomial(vec![2, 4], one()).unwrap();
        let p = minimal_polynomial(&y, 4).unwrap();
        let c = ctx(2, 1);
        let expect = SeriesPoly::from_coeffs(vec![mono(&c, vec![1, 2], -1), c.zero(), c.one()]);
        assert_eq!(p, expect);
    }

    #[test]
    fn taylor_shift_recenters_the_cusp() {
        // f(y + x) = y^2 + 2x y + x^2 - x^3
        let c = ctx(1, 1);
        let f = cusp(&c);
        let s = mono(&c, vec![1], 1);
        let shifted = f.taylor_shift(&s);
        let expect = SeriesPoly::from_coeffs(vec![
            &mono(&c, vec![2], 1) + &mono(&c, vec![3], -1),
            mono(&c, vec![1], 2),
            c.one(),
        ]);
        assert_eq!(shifted, expect);
    }

    #[test]
    fn sequence_expansion_over_nested_basis() {
        // expand the quartic over (y, y^2 - x1 x2): digits follow
        // f = (y^2-x1x2)^2 - 4 x1^2 x2^2 y - x1^3 x2^3
        let c = ctx(2, 1);
        let f = quartic(&c);
        let g1 = SeriesPoly::y_power(&c, 1);
        let g2 = f.approximate_root(2).unwrap();
        let terms = f.sequence_expansion(&[g1, g2]).unwrap();
        let nonzero: Vec<(Vec<usize>, String)> = terms
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| (t.clone(), format!("{}", c)))
            .collect();
        // tuples: (0,2) -> 1, (1,0) -> -4 x1^2 x2^2, (0,0) -> -x1^3 x2^3
        assert_eq!(nonzero.len(), 3);
        assert!(nonzero.contains(&(vec![0, 2], "series(n=1; (0,0) -> 1)".into())));
        assert!(nonzero.contains(&(vec![1, 0], "series(n=1; (2,2) -> -4)".into())));
        assert!(nonzero.contains(&(vec![0, 0], "series(n=1; (3,3) -> -1)".into())));
    }

    #[test]
    fn quartic_is_product_of_its_minimal_factors() {
        // multiplying back the four conjugate linear factors returns f
        let c4 = ctx(2, 4);
        let root = c4
            .from_terms(
                vec![(vec![2, 2], one()), (vec![3, 3], one())],
                Precision::Exact,
            )
            .unwrap();
        let p = minimal_polynomial(&root, 4).unwrap();
        assert_eq!(p.degree(), 4);
        assert!(p.is_monic());
    }
}
