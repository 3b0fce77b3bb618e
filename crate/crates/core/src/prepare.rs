//! Reduction of a prepared polynomial to a quasi-ordinary one: shear the
//! discriminant so its lowest homogeneous part carries a pure x1 power, blow
//! up x_i -> x1 x_i, expand the root of the blown-up polynomial, and pull the
//! root back with x_i -> x_i / x1. The pulled-back exponents live in the cone
//! spanned by (1,0,..,0) and (-1,..,1,..).

use std::collections::BTreeMap;

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use crate::cone::{compatible_order, Cone, OrderSpec};
use crate::cyclotomic::{rat, CycNum, Rat};
use crate::error::{Error, Result};
use crate::series::{FracExp, FracSeries, Precision, SeriesCtx};
use crate::ypoly::SeriesPoly;

/// Split an exact integer-exponent series by total degree of its terms.
pub fn homogeneous_parts(s: &FracSeries) -> Result<BTreeMap<i64, FracSeries>> {
    if !s.is_exact() || s.denom() != 1 {
        return Err(Error::BadInput(
            "homogeneous parts need an exact integer-exponent series".into(),
        ));
    }
    let ctx = s.ctx();
    let mut buckets: BTreeMap<i64, Vec<(Vec<i64>, CycNum)>> = BTreeMap::new();
    for (k, c) in s.terms() {
        buckets
            .entry(k.iter().sum())
            .or_default()
            .push((k.clone(), c.clone()));
    }
    buckets
        .into_iter()
        .map(|(deg, pairs)| Ok((deg, ctx.from_terms(pairs, Precision::Exact)?)))
        .collect()
}

/// Whether the coordinatewise minimum of the support is itself a support
/// point, i.e. the series is a monomial times a unit.
pub fn has_dominant_corner(s: &FracSeries) -> Result<bool> {
    if !s.is_exact() {
        return Err(Error::PrecisionExhausted(
            "corner test is undecidable on a truncated series".into(),
        ));
    }
    let keys: Vec<&Vec<i64>> = s.terms().map(|(k, _)| k).collect();
    if keys.is_empty() {
        return Err(Error::BadInput("corner test on the zero series".into()));
    }
    let dim = s.dim();
    let corner: Vec<i64> = (0..dim)
        .map(|i| keys.iter().map(|k| k[i]).min().unwrap())
        .collect();
    Ok(keys.iter().any(|k| **k == corner))
}

/// A polynomial is quasi-ordinary when its y-discriminant is a monomial
/// times a unit.
pub fn is_quasi_ordinary(f: &SeriesPoly) -> Result<bool> {
    let delta = f.discriminant_y();
    if delta.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    has_dominant_corner(&delta)
}

/// Outcome of the shear preparation.
#[derive(Clone, Debug)]
pub struct PrepResult {
    /// shear parameter: x_i -> x_i + t x1 for i >= 2
    pub t: i64,
    pub sheared: SeriesPoly,
    /// total degree of the lowest homogeneous part of the discriminant
    pub lowest_degree: i64,
    /// coefficient of x1^degree in the sheared lowest part; never zero
    pub epsilon: CycNum,
}

/// Shear so the lowest homogeneous part of the discriminant contains a pure
/// power of x1. The substitution value of that part at (1, t, ..., t) is a
/// nonzero polynomial in t of degree at most the part's total degree, so
/// scanning t = 1..deg+1 finds a witness whenever one exists.
pub fn prepare_shear(f: &SeriesPoly) -> Result<PrepResult> {
    let delta = f.discriminant_y();
    if delta.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    let parts = homogeneous_parts(&delta)?;
    let (&a, ua) = parts
        .iter()
        .next()
        .expect("nonzero series has a lowest part");
    let dim = f.ctx().dim;
    let mut corner = vec![0i64; dim];
    corner[0] = a;
    if let Some((_, c)) = ua.terms().find(|(k, _)| **k == corner) {
        return Ok(PrepResult {
            t: 0,
            sheared: f.clone(),
            lowest_degree: a,
            epsilon: c.clone(),
        });
    }
    for t in 1..=(a + 1) {
        let mut eps = CycNum::zero();
        for (k, c) in ua.terms() {
            let m: u32 = k.iter().skip(1).sum::<i64>() as u32;
            let scale = (t as i128).pow(m);
            eps = &eps + &c.scale(&rat_from_i128(scale));
        }
        if !eps.is_zero() {
            let sheared = f.map_coeffs(|s| shear_series(s, t))?;
            return Ok(PrepResult {
                t,
                sheared,
                lowest_degree: a,
                epsilon: eps,
            });
        }
    }
    Err(Error::ShearExhausted)
}

fn rat_from_i128(v: i128) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Substitute x_i -> x_i + t x1 for i >= 2 in an exact integer series.
pub fn shear_series(s: &FracSeries, t: i64) -> Result<FracSeries> {
    if !s.is_exact() || s.denom() != 1 {
        return Err(Error::BadInput(
            "shear needs an exact integer series".into(),
        ));
    }
    let ctx = s.ctx();
    let mut pairs: Vec<(Vec<i64>, CycNum)> = Vec::new();
    for (k, c) in s.terms() {
        // expand prod_{i>=2} (x_i + t x1)^{k_i} over the retained powers
        // j_i <= k_i
        let mut combos: Vec<(Vec<i64>, BigInt)> = vec![(Vec::new(), BigInt::one())];
        for &ki in &k[1..] {
            let mut next = Vec::with_capacity(combos.len() * (ki as usize + 1));
            for (tail, factor) in &combos {
                for ji in 0..=ki {
                    let mut tail = tail.clone();
                    tail.push(ji);
                    let f = factor * binomial(ki, ji) * BigInt::from(t).pow((ki - ji) as u32);
                    next.push((tail, f));
                }
            }
            combos = next;
        }
        for (tail, factor) in combos {
            if factor.is_zero() {
                continue;
            }
            let moved: i64 = k[1..]
                .iter()
                .zip(tail.iter())
                .map(|(&ki, &ji)| ki - ji)
                .sum();
            let mut key = vec![k[0] + moved];
            key.extend_from_slice(&tail);
            pairs.push((key, c.scale(&Rat::from_integer(factor))));
        }
    }
    ctx.from_terms(pairs, Precision::Exact)
}

fn binomial(n: i64, k: i64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Substitute x_i -> x1 x_i for i >= 2: exponents map by
/// (a_1, .., a_e) -> (a_1 + .. + a_e, a_2, .., a_e).
pub fn blowup_substitute(f: &SeriesPoly) -> Result<SeriesPoly> {
    f.map_coeffs(|s| {
        if !s.is_exact() || s.denom() != 1 {
            return Err(Error::BadInput("blowup needs exact integer series".into()));
        }
        let ctx = s.ctx();
        let pairs = s
            .terms()
            .map(|(k, c)| {
                let mut key = vec![k.iter().sum::<i64>()];
                key.extend_from_slice(&k[1..]);
                (key, c.clone())
            })
            .collect();
        ctx.from_terms(pairs, Precision::Exact)
    })
}

/// Blow up and insist the result is quasi-ordinary; preparation guarantees
/// this for sheared input.
pub fn blowup(f: &SeriesPoly) -> Result<SeriesPoly> {
    let blown = blowup_substitute(f)?;
    if !is_quasi_ordinary(&blown)? {
        return Err(Error::NotQuasiOrdinaryAfterBlowup);
    }
    Ok(blown)
}

/// Substitute x_i -> x_i / x1 for i >= 2 on a root series: exponents map by
/// (a_1, .., a_e) -> (a_1 - a_2 - .. - a_e, a_2, .., a_e), landing in the
/// cone spanned by (1,0,..,0) and (-1,..,1,..). The weight of every exponent
/// is preserved, so precision bounds carry over unchanged.
pub fn unblow_series(y: &FracSeries) -> Result<FracSeries> {
    let dim = y.dim();
    let cone = Cone::standard_blowup(dim);
    let order = compatible_order(&cone)?;
    let old_order = y.order_spec().clone();
    let ctx = SeriesCtx::new(dim, y.denom(), cone, order.clone());
    let mut pairs = Vec::new();
    for (k, c) in y.terms() {
        let tail: i64 = k[1..].iter().sum();
        let mut key = vec![k[0] - tail];
        key.extend_from_slice(&k[1..]);
        debug_assert_eq!(
            order.dot(&key),
            old_order.dot(k),
            "unblow must preserve weights"
        );
        pairs.push((key, c.clone()));
    }
    ctx.from_terms(pairs, y.precision().clone())
}

/// Root of a quasi-ordinary polynomial, expanded until every term of weight
/// below the bound is known. An exactly terminating expansion comes back
/// with exact precision.
pub fn qo_root_expand(f: &SeriesPoly, bound: &Rat) -> Result<FracSeries> {
    let n = f.degree();
    if n == 0 || !f.is_monic() {
        return Err(Error::BadInput(
            "root expansion needs a monic polynomial of positive degree".into(),
        ));
    }
    for c in f.coeffs() {
        if !c.is_exact() {
            return Err(Error::BadInput(
                "root expansion needs exact coefficients".into(),
            ));
        }
    }
    let base = f.ctx().clone();
    let cone = base.cone.clone();
    let order = base.order.clone();
    let nden = base.denom * n as i64;
    let mut cur = f.map_coeffs(|s| Ok(s.lift_denom(s.denom() * n as i64)))?;
    let mut root = SeriesCtx::new(base.dim, nden, cone.clone(), order.clone()).zero();

    let dyn_cap = |extra: usize| -> usize {
        let scaled = bound * rat(4 * n as i64, 1);
        let whole = scaled.to_integer().to_usize().unwrap_or(0);
        16 + extra + whole
    };

    // polygon phase: peel initial terms until the simple-root Newton
    // hypothesis ord f(root) > 2 ord f'(root) holds
    let cap1 = dyn_cap(4 * n);
    let mut moved_to_newton = false;
    for _ in 0..cap1 {
        let b0 = cur.coeff(0);
        if b0.is_zero() {
            return Ok(root);
        }
        let o0 = b0.order_exp()?.expect("nonzero series has an order");
        let w0 = order.weight_frac(o0.num(), o0.den());
        let b1 = cur.coeff(1);
        if !b1.is_zero() {
            let o1 = b1.order_exp()?.expect("nonzero series has an order");
            let w1 = order.weight_frac(o1.num(), o1.den());
            if w0 > &w1 * &rat(2, 1) {
                moved_to_newton = true;
                break;
            }
        }
        if w0 >= *bound {
            return Ok(root.cap_weight(bound));
        }
        let (mu, support) = polygon_edge(&cur, &o0, &order)?;
        let wmu = order.weight_frac(mu.num(), mu.den());
        if wmu <= Rat::zero() {
            return Err(Error::NoRootBranch(
                "polygon slope is not positive: no root with positive order".into(),
            ));
        }
        if wmu >= *bound {
            return Ok(root.cap_weight(bound));
        }
        if !cone.contains(mu.num()) {
            return Err(Error::NoRootBranch(format!(
                "polygon slope {} leaves the cone",
                mu
            )));
        }
        let c = solve_edge_equation(&support)?;
        let term = SeriesCtx::new(base.dim, mu.den(), cone.clone(), order.clone())
            .monomial(mu.num().to_vec(), c)?;
        root = &root + &term;
        cur = cur.taylor_shift(&term);
    }
    if !moved_to_newton {
        return Err(Error::NoConvergence { bound: cap1 });
    }

    // Newton phase: divide the residual by the initial form of the
    // derivative; no equation solving is needed any more
    let cap2 = dyn_cap(0);
    for _ in 0..cap2 {
        let residual = cur.coeff(0);
        if residual.is_zero() {
            return Ok(root);
        }
        let or = residual.order_exp()?.expect("nonzero residual");
        let deriv = cur.coeff(1);
        let (nu_key, nu_c) = deriv.leading()?.ok_or_else(|| {
            Error::NoRootBranch("derivative vanished during Newton refinement".into())
        })?;
        let nu = FracExp::new(nu_key, deriv.denom());
        let gap = exp_sub(&or, &nu);
        let wgap = order.weight_frac(gap.num(), gap.den());
        if wgap >= *bound {
            return Ok(root.cap_weight(bound));
        }
        let inv = nu_c.invert()?;
        let minus_inv = -&inv;
        let step = match residual.mul_monomial(&exp_neg(&nu), &minus_inv) {
            Ok(s) => s,
            Err(_) => {
                // dividing all of the residual walked out of the cone; fall
                // back to cancelling just its initial term
                if !cone.contains(gap.num()) {
                    return Err(Error::NoRootBranch(format!(
                        "correction exponent {} leaves the cone",
                        gap
                    )));
                }
                let rc = residual.leading()?.expect("nonzero residual").1;
                SeriesCtx::new(base.dim, gap.den(), cone.clone(), order.clone())
                    .monomial(gap.num().to_vec(), &(-&rc) * &inv)?
            }
        };
        root = &root + &step;
        cur = cur.taylor_shift(&step);
    }
    Err(Error::NoConvergence { bound: cap2 })
}

fn exp_sub(a: &FracExp, b: &FracExp) -> FracExp {
    let den = a.den().lcm(&b.den());
    let an = a.numerator_over(den).unwrap();
    let bn = b.numerator_over(den).unwrap();
    FracExp::new(an.iter().zip(bn.iter()).map(|(x, y)| x - y).collect(), den)
}

fn exp_neg(a: &FracExp) -> FracExp {
    FracExp::new(a.num().iter().map(|&c| -c).collect(), a.den())
}

/// Steepest polygon edge through the constant-term vertex: the root order
/// mu = max over j of (O(b_0) - O(b_j))/j, together with the leading
/// coefficients of the b_j attaining O(b_j) + j mu = O(b_0).
fn polygon_edge(
    f: &SeriesPoly,
    o0: &FracExp,
    order: &OrderSpec,
) -> Result<(FracExp, Vec<(usize, CycNum)>)> {
    let n = f.degree();
    let mut mu: Option<FracExp> = None;
    let mut orders: Vec<Option<FracExp>> = vec![None; n + 1];
    for j in 1..=n {
        let bj = f.coeff(j);
        if bj.is_zero() {
            continue;
        }
        let oj = bj.order_exp()?.expect("nonzero coefficient");
        let diff = exp_sub(o0, &oj);
        let cand = FracExp::new(diff.num().to_vec(), diff.den() * j as i64);
        orders[j] = Some(oj);
        mu = Some(match mu {
            None => cand,
            Some(best) => {
                if order.compare_scaled(cand.num(), cand.den(), best.num(), best.den())
                    == std::cmp::Ordering::Greater
                {
                    cand
                } else {
                    best
                }
            }
        });
    }
    let mu = mu.expect("monic polynomial has a nonzero top coefficient");
    let mut support = vec![(0usize, f.coeff(0).leading()?.unwrap().1)];
    for j in 1..=n {
        let Some(oj) = &orders[j] else { continue };
        // j is on the edge iff O(b_j) + j mu = O(b_0)
        let shifted = exp_add_scaled(oj, &mu, j as i64);
        if exp_eq(&shifted, o0) {
            support.push((j, f.coeff(j).leading()?.unwrap().1));
        }
    }
    Ok((mu, support))
}

fn exp_add_scaled(a: &FracExp, b: &FracExp, k: i64) -> FracExp {
    let den = a.den().lcm(&b.den());
    let an = a.numerator_over(den).unwrap();
    let bn = b.numerator_over(den).unwrap();
    FracExp::new(
        an.iter().zip(bn.iter()).map(|(x, y)| x + k * y).collect(),
        den,
    )
}

fn exp_eq(a: &FracExp, b: &FracExp) -> bool {
    a.num() == b.num() && a.den() == b.den()
}

/// Solve sum c_j z^j = 0 for a nonzero z, with the c_j exact cyclotomic
/// numbers. Candidates come from the rational root theorem, exact k-th
/// roots of binomial edges, square roots of rationals and small roots of
/// unity; every candidate is verified exactly before acceptance.
fn solve_edge_equation(support: &[(usize, CycNum)]) -> Result<CycNum> {
    let degree = support.iter().map(|(j, _)| *j).max().unwrap_or(0);
    let mut dense = vec![CycNum::zero(); degree + 1];
    for (j, c) in support {
        dense[*j] = c.clone();
    }
    let mut candidates: Vec<CycNum> = Vec::new();
    let push = |c: CycNum, candidates: &mut Vec<CycNum>| {
        if !c.is_zero() && !candidates.contains(&c) {
            candidates.push(c);
        }
    };

    // rational root theorem when every coefficient is rational
    let rationals: Option<Vec<Rat>> = dense.iter().map(|c| c.as_rational()).collect();
    let mut rational_candidates: Vec<Rat> = Vec::new();
    if let Some(rs) = &rationals {
        let mut denlcm = BigInt::one();
        for r in rs {
            denlcm = denlcm.lcm(r.denom());
        }
        let ints: Vec<BigInt> = rs.iter().map(|r| (r * &denlcm).to_integer()).collect();
        let a0 = ints.first().cloned().unwrap_or_else(BigInt::zero);
        let atop = ints.last().cloned().unwrap_or_else(BigInt::one);
        for p in small_divisors(&a0) {
            for q in small_divisors(&atop) {
                let r = Rat::new(BigInt::from(p), BigInt::from(q));
                if !rational_candidates.contains(&r) {
                    rational_candidates.push(r.clone());
                }
                let neg = -r;
                if !rational_candidates.contains(&neg) {
                    rational_candidates.push(neg);
                }
            }
        }
    }
    for r in &rational_candidates {
        push(CycNum::from_rat(r.clone()), &mut candidates);
    }

    // binomial edge c_0 + c_k z^k = 0: exact k-th roots times roots of unity
    let nonzero: Vec<usize> = dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, _)| j)
        .collect();
    if nonzero.len() == 2 && nonzero[0] == 0 {
        let k = nonzero[1];
        let value = dense[0].checked_div(&dense[k])?;
        let target = -&value;
        if let Some(v) = target.as_rational() {
            if let Some(root) = rational_kth_root(&v.abs(), k as u32) {
                let base = CycNum::from_rat(root);
                for t in 0..(2 * k as i64) {
                    push(
                        &base * &CycNum::root_of_unity(t, 2 * k as u64),
                        &mut candidates,
                    );
                }
            }
            if k == 2 {
                if let Some(s) = sqrt_rational(&v.abs()) {
                    let with_sign = if v < Rat::zero() {
                        &s * &CycNum::root_of_unity(1, 4)
                    } else {
                        s
                    };
                    push(with_sign.clone(), &mut candidates);
                    push(-&with_sign, &mut candidates);
                }
            }
        }
    }

    // small roots of unity, optionally scaled by the rational candidates
    for m in [1u64, 2, 3, 4, 6, 8, 12] {
        for t in 0..m as i64 {
            let z = CycNum::root_of_unity(t, m);
            push(z.clone(), &mut candidates);
            for r in &rational_candidates {
                push(z.scale(r), &mut candidates);
            }
        }
    }

    for c in &candidates {
        if eval_cyc_poly(&dense, c).is_zero() {
            return Ok(c.clone());
        }
    }
    Err(Error::NoRootBranch(
        "cannot solve the polygon edge equation exactly".into(),
    ))
}

fn eval_cyc_poly(coeffs: &[CycNum], z: &CycNum) -> CycNum {
    let mut acc = CycNum::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * z) + c;
    }
    acc
}

fn small_divisors(v: &BigInt) -> Vec<i64> {
    let Some(n) = v.abs().to_i64() else {
        return vec![1];
    };
    if n == 0 {
        return vec![1];
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Exact k-th root of a nonnegative rational, when both numerator and
/// denominator are perfect k-th powers.
fn rational_kth_root(v: &Rat, k: u32) -> Option<Rat> {
    let num = integer_kth_root(v.numer(), k)?;
    let den = integer_kth_root(v.denom(), k)?;
    Some(Rat::new(num, den))
}

fn integer_kth_root(v: &BigInt, k: u32) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.nth_root(k);
    (r.pow(k) == *v).then_some(r)
}

/// Exact square root of a nonnegative rational as a cyclotomic number,
/// via quadratic Gauss sums: sqrt(2) lives in Q(zeta_8) and sqrt(p) in
/// Q(zeta_p) or Q(zeta_{4p}).
pub fn sqrt_rational(v: &Rat) -> Option<CycNum> {
    if v.is_negative() {
        return None;
    }
    if v.is_zero() {
        return Some(CycNum::zero());
    }
    // sqrt(a/b) = sqrt(ab)/b
    let m = v.numer() * v.denom();
    let m64 = m.to_i64()?;
    let mut square = 1i64;
    let mut squarefree = 1i64;
    let mut rest = m64;
    let mut p = 2i64;
    while p * p <= rest {
        let mut count = 0;
        while rest % p == 0 {
            rest /= p;
            count += 1;
        }
        square *= p.pow(count / 2);
        if count % 2 == 1 {
            squarefree *= p;
        }
        p += 1;
    }
    squarefree *= rest;
    let mut acc = CycNum::from_rat(Rat::new(BigInt::from(square), v.denom().clone()));
    let mut sf = squarefree;
    if sf % 2 == 0 {
        // sqrt(2) = zeta_8 + zeta_8^7
        let s2 = &CycNum::root_of_unity(1, 8) + &CycNum::root_of_unity(7, 8);
        acc = &acc * &s2;
        sf /= 2;
    }
    let mut q = 3i64;
    while q * q <= sf {
        if sf % q == 0 {
            acc = &acc * &sqrt_odd_prime(q);
            sf /= q;
        } else {
            q += 2;
        }
    }
    if sf > 1 {
        acc = &acc * &sqrt_odd_prime(sf);
    }
    // defensive: the construction is exact, so squaring must return v
    debug_assert!((&(&acc * &acc) - &CycNum::from_rat(v.clone())).is_zero());
    Some(acc)
}

/// Gauss sum g = sum_t legendre(t) zeta_p^t equals sqrt(p) for p = 1 mod 4
/// and i sqrt(p) for p = 3 mod 4.
fn sqrt_odd_prime(p: i64) -> CycNum {
    let mut g = CycNum::zero();
    for t in 1..p {
        let sym = legendre(t, p);
        let term = CycNum::root_of_unity(t, p as u64);
        g = if sym == 1 { &g + &term } else { &g - &term };
    }
    if p % 4 == 1 {
        g
    } else {
        // divide by i
        &g * &CycNum::root_of_unity(3, 4)
    }
}

fn legendre(mut t: i64, p: i64) -> i64 {
    t %= p;
    let mut result = 1i64;
    let mut base = t;
    let mut exp = (p - 1) / 2;
    let m = p;
    base %= m;
    while exp > 0 {
        if exp % 2 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        exp /= 2;
    }
    if result == m - 1 {
        -1
    } else {
        result
    }
}

/// Verdict on whether a polynomial is free: a single orbit of conjugate
/// roots realising the full degree.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub free: bool,
    pub conjugate_count: i64,
    pub residual_ok: bool,
    pub minpoly_ok: bool,
    /// [f] when free, otherwise [minimal polynomial, cofactor]
    pub factors: Vec<SeriesPoly>,
}

/// Expand a root to the precision bound and test: the residual has no
/// certain term, the conjugate count equals the degree, and the conjugate
/// product reproduces f below the bound.
pub fn free_certificate(f: &SeriesPoly, bound: &Rat) -> Result<Certificate> {
    let root = qo_root_expand(f, bound)?;
    certificate_with_root(f, &root, bound)
}

/// The certificate checks against an already expanded root.
pub fn certificate_with_root(
    f: &SeriesPoly,
    root: &FracSeries,
    bound: &Rat,
) -> Result<Certificate> {
    let n = f.degree();
    let root = root.reduced_denom();
    let residual = f.eval(&root);
    let residual_ok = !residual.cap_weight(bound).has_terms();
    let conj = root.conjugates(root.denom())?;
    let count = conj.len() as i64;
    let count_ok = count == n as i64;
    let minpoly = crate::ypoly::minimal_polynomial(&root, root.denom())?;
    let minpoly_ok = polys_agree_to_precision(f, &minpoly);
    let free = residual_ok && count_ok && minpoly_ok;
    let factors = if free || minpoly.degree() == 0 || minpoly.degree() >= n {
        vec![f.clone()]
    } else {
        let (q, _) = f.divmod(&minpoly)?;
        vec![minpoly, q]
    };
    Ok(Certificate {
        free,
        conjugate_count: count,
        residual_ok,
        minpoly_ok,
        factors,
    })
}

/// Coefficientwise agreement modulo the precision bounds carried by either
/// side: no certain term of any difference survives.
pub fn polys_agree_to_precision(a: &SeriesPoly, b: &SeriesPoly) -> bool {
    let n = a.degree().max(b.degree());
    (0..=n).all(|k| !(&a.coeff(k) - &b.coeff(k)).has_terms())
}

/// The root-taking step commutes with blowup: blowing up the approximate
/// d-th root of f equals the approximate d-th root of the blowup of f.
pub fn approximate_root_commutes(f: &SeriesPoly, d: i64) -> Result<()> {
    let direct = blowup_substitute(&f.approximate_root(d)?)?;
    let other = blowup_substitute(f)?.approximate_root(d)?;
    if direct == other {
        Ok(())
    } else {
        Err(Error::AppMismatch)
    }
}
