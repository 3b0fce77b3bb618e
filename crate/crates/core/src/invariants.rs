//! Invariants of a degree-n fractional-power root: characteristic exponents,
//! index/gcd sequences, semigroup generators, pseudo-roots and contact
//! orders. Everything is exact; truncated inputs propagate their precision.

use std::cmp::Ordering;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::lattice::{lattice_index, membership};
use crate::series::{FracExp, FracSeries};
use crate::ypoly::{minimal_polynomial, SeriesPoly};

/// Characteristic exponents of a root, as numerators over the degree n,
/// ascending in the compatible order.
#[derive(Clone, Debug, PartialEq)]
pub struct CharData {
    pub n: i64,
    pub dim: usize,
    pub exponents: Vec<Vec<i64>>,
}

/// Exponents where conjugates split off, computed two independent ways:
/// the first support key moved by each character, and the support keys that
/// leave the lattice generated so far. The routes must agree.
pub fn characteristic_data(y: &FracSeries, n: i64) -> Result<CharData> {
    let dim = y.dim();
    let lifted = y.lift_denom_checked(n)?;
    let order = lifted.order_spec().clone();

    // route one: first moved key per automorphism tuple
    let mut moved: Vec<Vec<i64>> = Vec::new();
    let mut tuple = vec![0i64; dim];
    loop {
        if let Some(k) = lifted.twist_difference_key(&tuple, n)? {
            if !moved.contains(&k) {
                moved.push(k);
            }
        }
        if !advance_tuple(&mut tuple, n) {
            break;
        }
    }
    moved.sort_by(|a, b| order.compare(a, b));

    // route two: support keys escaping the accumulated lattice
    let mut keys: Vec<Vec<i64>> = lifted.terms().map(|(k, _)| k.clone()).collect();
    keys.sort_by(|a, b| order.compare(a, b));
    let mut peeled: Vec<Vec<i64>> = Vec::new();
    for k in keys {
        if !membership(n, dim, &peeled, &k).0 {
            peeled.push(k);
        }
    }

    if moved != peeled {
        return Err(Error::CrossCheckMismatch(format!(
            "characteristic exponents disagree: characters give {:?}, lattice peeling gives {:?}",
            moved, peeled
        )));
    }
    Ok(CharData {
        n,
        dim,
        exponents: moved,
    })
}

fn advance_tuple(tuple: &mut [i64], n: i64) -> bool {
    for i in (0..tuple.len()).rev() {
        if tuple[i] + 1 < n {
            tuple[i] += 1;
            for t in tuple.iter_mut().skip(i + 1) {
                *t = 0;
            }
            return true;
        }
    }
    false
}

/// Index and gcd sequences attached to characteristic data:
/// D_i = [Z^e : nZ^e + <m_1..m_{i-1}>], d_i = D_i / n^(e-1), e_i = d_i/d_{i+1},
/// and the value recurrence r_1 = m_1, r_{i+1} = e_i r_i + m_{i+1} - m_i.
#[derive(Clone, Debug, PartialEq)]
pub struct SequencePack {
    pub n: i64,
    pub dim: usize,
    pub h: usize,
    /// characteristic exponents over denominator n
    pub m: Vec<Vec<i64>>,
    /// D_1..D_{h+1}
    pub d_cap: Vec<i128>,
    /// d_1..d_{h+1}; d_1 = n and d_{h+1} = 1
    pub d: Vec<i64>,
    /// e_1..e_h, each at least 2
    pub e: Vec<i64>,
    /// r_1..r_h as n-fold order values (integer vectors)
    pub r: Vec<Vec<i64>>,
}

impl SequencePack {
    /// Semigroup generators: n e_1, ..., n e_dim, then r_1..r_h.
    pub fn generators(&self) -> Vec<Vec<i64>> {
        let mut gens = Vec::with_capacity(self.dim + self.h);
        for j in 0..self.dim {
            let mut v = vec![0i64; self.dim];
            v[j] = self.n;
            gens.push(v);
        }
        gens.extend(self.r.iter().cloned());
        gens
    }
}

pub fn gcd_sequences(cd: &CharData) -> Result<SequencePack> {
    let n = cd.n;
    let dim = cd.dim;
    let h = cd.exponents.len();
    let mut d_cap = Vec::with_capacity(h + 1);
    for i in 0..=h {
        d_cap.push(lattice_index(n, dim, &cd.exponents[..i]));
    }
    for i in 0..h {
        if d_cap[i + 1] >= d_cap[i] {
            return Err(Error::InvariantViolation(format!(
                "index sequence does not descend at step {}: {} -> {}",
                i + 1,
                d_cap[i],
                d_cap[i + 1]
            )));
        }
    }
    let unit = (n as i128).pow(dim as u32 - 1);
    if d_cap[h] != unit {
        return Err(Error::DegenerateCharacteristicData(format!(
            "final index {} differs from n^(e-1) = {}: the root does not have degree {}",
            d_cap[h], unit, n
        )));
    }
    let d: Vec<i64> = d_cap
        .iter()
        .map(|&dc| {
            if dc % unit != 0 {
                return Err(Error::DegenerateCharacteristicData(format!(
                    "index {} is not a multiple of n^(e-1) = {}",
                    dc, unit
                )));
            }
            Ok((dc / unit) as i64)
        })
        .collect::<Result<_>>()?;
    let mut e = Vec::with_capacity(h);
    for i in 0..h {
        if d[i] % d[i + 1] != 0 {
            return Err(Error::InvariantViolation(format!(
                "gcd sequence not nested: {} does not divide {}",
                d[i + 1],
                d[i]
            )));
        }
        e.push(d[i] / d[i + 1]);
    }
    let mut r: Vec<Vec<i64>> = Vec::with_capacity(h);
    for i in 0..h {
        if i == 0 {
            r.push(cd.exponents[0].clone());
        } else {
            let prev = &r[i - 1];
            let v: Vec<i64> = (0..dim)
                .map(|j| e[i - 1] * prev[j] + cd.exponents[i][j] - cd.exponents[i - 1][j])
                .collect();
            r.push(v);
        }
    }
    Ok(SequencePack {
        n,
        dim,
        h,
        m: cd.exponents.clone(),
        d_cap,
        d,
        e,
        r,
    })
}

/// How often each contact level occurs among the automorphism tuples and
/// among the distinct conjugates. fixed counts twists agreeing with the
/// identity on the stored support.
#[derive(Clone, Debug, PartialEq)]
pub struct GaloisCounts {
    pub tuple_total: i128,
    pub tuple_fixed: i128,
    pub tuple_at: Vec<i128>,
    pub conj_total: i64,
    pub conj_fixed: i64,
    pub conj_at: Vec<i64>,
}

impl GaloisCounts {
    /// Tuples whose difference from the identity has order at least m_i
    /// (1-based); i = h+1 counts the stabiliser alone.
    pub fn tuples_with_order_at_least(&self, i: usize) -> i128 {
        self.tuple_fixed + self.tuple_at[i - 1..].iter().sum::<i128>()
    }

    pub fn conjugates_with_order_at_least(&self, i: usize) -> i64 {
        self.conj_fixed + self.conj_at[i - 1..].iter().sum::<i64>()
    }
}

pub fn galois_counts(y: &FracSeries, pack: &SequencePack) -> Result<GaloisCounts> {
    let n = pack.n;
    let dim = pack.dim;
    let lifted = y.lift_denom_checked(n)?;
    let classify = |tuple: &[i64]| -> Result<Option<usize>> {
        match lifted.twist_difference_key(tuple, n)? {
            None => Ok(None),
            Some(k) => match pack.m.iter().position(|m| *m == k) {
                Some(i) => Ok(Some(i)),
                None => Err(Error::CountMismatch(format!(
                    "difference order {:?}/{} is not a characteristic exponent",
                    k, n
                ))),
            },
        }
    };
    let mut tuple_fixed = 0i128;
    let mut tuple_at = vec![0i128; pack.h];
    let mut tuple = vec![0i64; dim];
    let mut tuple_total = 0i128;
    loop {
        tuple_total += 1;
        match classify(&tuple)? {
            None => tuple_fixed += 1,
            Some(i) => tuple_at[i] += 1,
        }
        if !advance_tuple(&mut tuple, n) {
            break;
        }
    }
    let reps = lifted.conjugate_tuples(n)?;
    let mut conj_fixed = 0i64;
    let mut conj_at = vec![0i64; pack.h];
    for rep in &reps {
        match classify(rep)? {
            None => conj_fixed += 1,
            Some(i) => conj_at[i] += 1,
        }
    }
    Ok(GaloisCounts {
        tuple_total,
        tuple_fixed,
        tuple_at,
        conj_total: reps.len() as i64,
        conj_fixed,
        conj_at,
    })
}

/// n-fold order of g evaluated at the root: an integer vector. DividesF
/// signals an exactly vanishing value (infinite contact).
pub fn contact_order(g: &SeriesPoly, root: &FracSeries, n: i64) -> Result<Vec<i64>> {
    let value = g.eval(root);
    match value.order_exp()? {
        None => Err(Error::DividesF),
        Some(exp) => scale_exp(&exp, n),
    }
}

fn scale_exp(exp: &FracExp, n: i64) -> Result<Vec<i64>> {
    if n % exp.den() != 0 {
        return Err(Error::InvariantViolation(format!(
            "order {} has a denominator outside 1/{}",
            exp, n
        )));
    }
    let f = n / exp.den();
    Ok(exp.num().iter().map(|&c| c * f).collect())
}

/// Order of the y-resultant of two exact polynomials, as an integer vector.
pub fn resultant_order(f: &SeriesPoly, g: &SeriesPoly) -> Result<Vec<i64>> {
    let res = f.resultant_y(g);
    match res.order_exp()? {
        None => Err(Error::DividesF),
        Some(exp) => scale_exp(&exp, 1),
    }
}

/// Minimal polynomials of the truncations of the root strictly below each
/// characteristic exponent: G_i has degree n/d_i.
pub fn pseudo_roots(y: &FracSeries, pack: &SequencePack) -> Result<Vec<SeriesPoly>> {
    let n = pack.n;
    let lifted = y.lift_denom_checked(n)?;
    let mut out = Vec::with_capacity(pack.h);
    for i in 0..pack.h {
        let cut = FracExp::new(pack.m[i].clone(), n);
        let trunc = lifted.truncate_below(&cut);
        let g = minimal_polynomial(&trunc, n)?;
        let expect = (n / pack.d[i]) as usize;
        if g.degree() != expect {
            return Err(Error::InvariantViolation(format!(
                "pseudo-root {} has degree {} instead of {}",
                i + 1,
                g.degree(),
                expect
            )));
        }
        out.push(g);
    }
    Ok(out)
}

/// A value written over the semigroup: v = n*base + sum beta_i r_i with
/// 0 <= beta_i < e_i and base an integer point of the cone.
#[derive(Clone, Debug, PartialEq)]
pub struct SemigroupDesc {
    pub base: Vec<i64>,
    pub beta: Vec<i64>,
}

/// Canonical representation of an integer vector over the semigroup
/// generated by nZ^e-cone points and the r_i; None when no such
/// representation exists.
pub fn semigroup_representation(
    pack: &SequencePack,
    cone: &Cone,
    v: &[i64],
) -> Option<SemigroupDesc> {
    let n = pack.n;
    let dim = pack.dim;
    assert_eq!(v.len(), dim);
    let mut w: Vec<i64> = v.to_vec();
    let mut beta = vec![0i64; pack.h];
    for i in (0..pack.h).rev() {
        let prefix = &pack.m[..i];
        let mut found = false;
        for k in 0..pack.e[i] {
            let cand: Vec<i64> = (0..dim).map(|j| w[j] - k * pack.r[i][j]).collect();
            if membership(n, dim, prefix, &cand).0 {
                beta[i] = k;
                w = cand;
                found = true;
                break;
            }
        }
        if !found {
            return None;
        }
    }
    if w.iter().any(|&c| c % n != 0) {
        return None;
    }
    let base: Vec<i64> = w.iter().map(|&c| c / n).collect();
    if !cone.contains(&base) {
        return None;
    }
    Some(SemigroupDesc { base, beta })
}

/// Contact order computed through the expansion of g over the pseudo-root
/// family: minimum over the expansion terms of n*O(coefficient) + sum
/// theta_i r_i. The minimum must be attained exactly once.
pub fn expansion_order(
    f: &SeriesPoly,
    g: &SeriesPoly,
    pack: &SequencePack,
    pseudo: &[SeriesPoly],
) -> Result<Vec<i64>> {
    let order = f.ctx().order.clone();
    let (_, rem) = g.divmod(f)?;
    if rem.is_zero() {
        return Err(Error::DividesF);
    }
    let terms = rem.sequence_expansion(pseudo)?;
    let mut best: Option<Vec<i64>> = None;
    for (theta, c) in &terms {
        if c.is_zero() {
            continue;
        }
        let exp = c.order_exp()?.expect("nonzero coefficient has an order");
        let mut value = scale_exp(&exp, pack.n)?;
        for (i, &t) in theta.iter().enumerate() {
            for j in 0..pack.dim {
                value[j] += t as i64 * pack.r[i][j];
            }
        }
        best = match best {
            None => Some(value),
            Some(b) => match order.compare(&value, &b) {
                Ordering::Less => Some(value),
                Ordering::Equal => {
                    return Err(Error::InvariantViolation(format!(
                        "expansion order {:?} attained twice",
                        value
                    )))
                }
                Ordering::Greater => Some(b),
            },
        };
    }
    best.ok_or(Error::DividesF)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::{compatible_order, Cone};
    use crate::cyclotomic::CycNum;
    use crate::series::{Precision, SeriesCtx};

    fn ctx(dim: usize, denom: i64) -> SeriesCtx {
        let cone = Cone::orthant(dim);
        let order = compatible_order(&cone).unwrap();
        SeriesCtx::new(dim, denom, cone, order)
    }

    fn one() -> CycNum {
        CycNum::one()
    }

    /// u + v with u = (x1 x2)^(1/2), v = (x1 x2)^(3/4).
    fn quartic_root() -> FracSeries {
        ctx(2, 4)
            .from_terms(
                vec![(vec![2, 2], one()), (vec![3, 3], one())],
                Precision::Exact,
            )
            .unwrap()
    }

    fn quartic() -> SeriesPoly {
        minimal_polynomial(&quartic_root(), 4).unwrap()
    }

    fn quartic_pack() -> SequencePack {
        gcd_sequences(&characteristic_data(&quartic_root(), 4).unwrap()).unwrap()
    }

    #[test]
    fn characteristic_exponents_of_quartic_root() {
        let cd = characteristic_data(&quartic_root(), 4).unwrap();
        assert_eq!(cd.exponents, vec![vec![2, 2], vec![3, 3]]);
    }

    #[test]
    fn characteristic_exponents_of_cusp_like_root() {
        // x^(3/2) - x^2: single exponent 3 over n = 2
        let c = ctx(1, 2);
        let y = c
            .from_terms(
                vec![(vec![3], one()), (vec![4], CycNum::from_int(-1))],
                Precision::Exact,
            )
            .unwrap();
        let cd = characteristic_data(&y, 2).unwrap();
        assert_eq!(cd.exponents, vec![vec![3]]);
        let pack = gcd_sequences(&cd).unwrap();
        assert_eq!(pack.d_cap, vec![2, 1]);
        assert_eq!(pack.d, vec![2, 1]);
        assert_eq!(pack.e, vec![2]);
        assert_eq!(pack.r, vec![vec![3]]);
        assert_eq!(pack.generators(), vec![vec![2], vec![3]]);
    }

    #[test]
    fn sequences_of_quartic_root() {
        let pack = quartic_pack();
        assert_eq!(pack.d_cap, vec![16, 8, 4]);
        assert_eq!(pack.d, vec![4, 2, 1]);
        assert_eq!(pack.e, vec![2, 2]);
        assert_eq!(pack.r, vec![vec![2, 2], vec![5, 5]]);
        assert_eq!(
            pack.generators(),
            vec![vec![4, 0], vec![0, 4], vec![2, 2], vec![5, 5]]
        );
    }

    #[test]
    fn degenerate_data_is_rejected() {
        // x1^(1/2) sits in a proper subextension when n = 4
        let c = ctx(2, 4);
        let y = c.monomial(vec![2, 0], one()).unwrap();
        let cd = characteristic_data(&y, 4).unwrap();
        assert!(matches!(
            gcd_sequences(&cd),
            Err(Error::DegenerateCharacteristicData(_))
        ));
    }

    #[test]
    fn galois_counts_match_index_sequences() {
        let pack = quartic_pack();
        let counts = galois_counts(&quartic_root(), &pack).unwrap();
        assert_eq!(counts.tuple_total, 16);
        // R(i) = D_i and the level counts are successive differences
        assert_eq!(counts.tuples_with_order_at_least(1), 16);
        assert_eq!(counts.tuples_with_order_at_least(2), 8);
        assert_eq!(counts.tuple_fixed, 4);
        assert_eq!(counts.tuple_at, vec![8, 4]);
        // conjugate counts scale down by n^(e-1)
        assert_eq!(counts.conj_total, 4);
        assert_eq!(counts.conj_at, vec![2, 1]);
        assert_eq!(counts.conj_fixed, 1);
    }

    #[test]
    fn pseudo_roots_of_quartic() {
        let pack = quartic_pack();
        let gs = pseudo_roots(&quartic_root(), &pack).unwrap();
        assert_eq!(gs.len(), 2);
        let c = ctx(2, 1);
        assert_eq!(gs[0], SeriesPoly::y_power(&c, 1));
        let g2 = SeriesPoly::from_coeffs(vec![
            c.monomial(vec![1, 1], CycNum::from_int(-1)).unwrap(),
            c.zero(),
            c.one(),
        ]);
        assert_eq!(gs[1], g2);
    }

    #[test]
    fn contact_orders_of_pseudo_roots_are_the_r_values() {
        let pack = quartic_pack();
        let root = quartic_root();
        let gs = pseudo_roots(&root, &pack).unwrap();
        assert_eq!(contact_order(&gs[0], &root, 4).unwrap(), vec![2, 2]);
        assert_eq!(contact_order(&gs[1], &root, 4).unwrap(), vec![5, 5]);
    }

    #[test]
    fn approximate_roots_realise_the_same_contacts() {
        let pack = quartic_pack();
        let root = quartic_root();
        let f = quartic();
        for (i, &di) in pack.d.iter().take(pack.h).enumerate() {
            let app = f.approximate_root(di).unwrap();
            assert_eq!(
                contact_order(&app, &root, 4).unwrap(),
                pack.r[i],
                "approximate root for d_{}",
                i + 1
            );
        }
    }

    #[test]
    fn contact_of_f_itself_is_infinite() {
        let root = quartic_root();
        let f = quartic();
        assert!(matches!(contact_order(&f, &root, 4), Err(Error::DividesF)));
    }

    #[test]
    fn semigroup_membership_cases() {
        let pack = quartic_pack();
        let cone = Cone::orthant(2);
        let yes = |v: Vec<i64>, base: Vec<i64>, beta: Vec<i64>| {
            assert_eq!(
                semigroup_representation(&pack, &cone, &v),
                Some(SemigroupDesc { base, beta }),
                "value {:?}",
                v
            );
        };
        yes(vec![5, 5], vec![0, 0], vec![0, 1]);
        yes(vec![7, 7], vec![0, 0], vec![1, 1]);
        yes(vec![8, 4], vec![2, 1], vec![0, 0]);
        yes(vec![2, 2], vec![0, 0], vec![1, 0]);
        assert_eq!(semigroup_representation(&pack, &cone, &[1, 0]), None);
        assert_eq!(semigroup_representation(&pack, &cone, &[3, 1]), None);
        // in the lattice but outside the cone
        assert_eq!(semigroup_representation(&pack, &cone, &[-4, 0]), None);
    }

    #[test]
    fn expansion_order_agrees_with_direct_contact() {
        let pack = quartic_pack();
        let root = quartic_root();
        let f = quartic();
        let pseudo = pseudo_roots(&root, &pack).unwrap();
        let c = ctx(2, 1);
        let g = SeriesPoly::y_power(&c, 2);
        let via_expansion = expansion_order(&f, &g, &pack, &pseudo).unwrap();
        assert_eq!(via_expansion, vec![4, 4]);
        assert_eq!(contact_order(&g, &root, 4).unwrap(), vec![4, 4]);
    }

    #[test]
    fn resultant_order_sums_conjugate_contacts() {
        let root = quartic_root();
        let f = quartic();
        let c = ctx(2, 1);
        let g = SeriesPoly::from_coeffs(vec![
            c.monomial(vec![1, 0], CycNum::from_int(-1)).unwrap(),
            c.one(),
        ]);
        let res_order = resultant_order(&f, &g).unwrap();
        assert_eq!(res_order, vec![2, 2]);
        let mut sum = vec![0i64; 2];
        for conj in root.conjugates(4).unwrap() {
            let v = contact_order(&g, &conj, 4).unwrap();
            for j in 0..2 {
                sum[j] += v[j];
            }
        }
        let scaled: Vec<i64> = res_order.iter().map(|&c| c * 4).collect();
        assert_eq!(sum, scaled);
    }
}
