//! End-to-end analysis: run the preparation pipeline if needed, expand a
//! root, compute the invariant package and assemble it with named
//! verification outcomes into a JSON-serializable report.

use serde::Serialize;

use crate::cyclotomic::rat;
use crate::cyclotomic::Rat;
use crate::error::{Error, Result};
use crate::invariants::{
    characteristic_data, contact_order, expansion_order, galois_counts, gcd_sequences,
    pseudo_roots, CharData, SequencePack,
};
use crate::prepare::{
    blowup, certificate_with_root, is_quasi_ordinary, prepare_shear, qo_root_expand, unblow_series,
    Certificate,
};
use crate::series::FracSeries;
use crate::ypoly::{minimal_polynomial, SeriesPoly};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderDesc {
    pub weight: Vec<i64>,
    pub tiebreak: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub witness: String,
}

/// The invariant package of one root orbit. Exponent vectors under `r`,
/// `generators` and `characteristic numerators` are n-fold integers (the
/// true exponents times n); orders are reduced fractions per coordinate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantReport {
    pub n: i64,
    pub e: usize,
    pub h: usize,
    pub cone: Vec<Vec<i64>>,
    pub order: OrderDesc,
    pub characteristic_exponents: Vec<Vec<String>>,
    #[serde(rename = "D")]
    pub d_cap: Vec<i128>,
    pub d: Vec<i64>,
    pub e_seq: Vec<i64>,
    pub r: Vec<Vec<i64>>,
    pub generators: Vec<Vec<i64>>,
    pub pseudo_root_orders: Vec<Vec<String>>,
    pub approx_root_orders: Vec<Vec<String>>,
    pub checks: Vec<CheckOutcome>,
}

impl InvariantReport {
    /// The report with the verification log stripped: the part that must be
    /// identical when the same input is analyzed at a higher precision.
    pub fn invariant_fields(&self) -> InvariantReport {
        let mut clone = self.clone();
        clone.checks = Vec::new();
        clone
    }
}

/// Full analysis result: the report plus the exact objects behind it.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub report: InvariantReport,
    /// representative root, rebased so its denominator equals n
    pub root: FracSeries,
    /// the polynomial the invariants were measured against, in the root's
    /// coordinates: the input (or its shear) for polynomial analysis, the
    /// minimal polynomial for root analysis
    pub minimal: SeriesPoly,
    pub char_data: CharData,
    pub pack: SequencePack,
    pub pseudo: Vec<SeriesPoly>,
    pub certificate: Option<Certificate>,
}

fn frac_vec(v: &[i64], den: i64) -> Vec<String> {
    v.iter().map(|&c| format!("{}", rat(c, den))).collect()
}

fn check(name: impl Into<String>, pass: bool, witness: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        name: name.into(),
        pass,
        witness: witness.into(),
    }
}

/// Invariants of a root given directly as a fractional-power series. The
/// degree is the number of distinct conjugates; the minimal polynomial is
/// reconstructed from the orbit.
pub fn analyze_root(y: &FracSeries) -> Result<Analysis> {
    let y1 = y.reduced_denom();
    let k = y1.conjugates(y1.denom())?.len() as i64;
    let y2 = y1.rebase_denom(k)?;
    let f = minimal_polynomial(&y2, k)?;
    let route = vec![check(
        "input",
        true,
        format!("root series with {} conjugates", k),
    )];
    assemble(f, y2, None, route)
}

/// Invariants of a monic polynomial with exact coefficients. Quasi-ordinary
/// input is analyzed in place; otherwise the polynomial is sheared, blown
/// up, its root expanded and pulled back. Fails with NotFree when the root
/// orbit does not account for the full degree.
pub fn analyze_poly(f: &SeriesPoly, bound: &Rat) -> Result<Analysis> {
    let n = f.degree();
    if n == 0 || !f.is_monic() {
        return Err(Error::BadInput(
            "analysis needs a monic polynomial of positive degree".into(),
        ));
    }
    if f.coeffs().iter().any(|c| !c.is_exact()) {
        return Err(Error::BadInput("analysis needs exact coefficients".into()));
    }
    if is_quasi_ordinary(f)? {
        let root = qo_root_expand(f, bound)?;
        let cert = certificate_with_root(f, &root, bound)?;
        require_free(&cert, n)?;
        let route = vec![
            check(
                "quasi_ordinary",
                true,
                "discriminant is a monomial times a unit",
            ),
            certificate_check(&cert),
        ];
        let y = root.reduced_denom();
        assemble(f.clone(), y, Some(cert), route)
    } else {
        let prep = prepare_shear(f)?;
        let blown = blowup(&prep.sheared)?;
        let broot = qo_root_expand(&blown, bound)?;
        let cert = certificate_with_root(&blown, &broot, bound)?;
        require_free(&cert, n)?;
        let y = unblow_series(&broot)?.reduced_denom();
        let cone = y.cone().clone();
        let order = y.order_spec().clone();
        let fstar = prep
            .sheared
            .map_coeffs(|s| s.with_context(cone.clone(), order.clone()))?;
        let route = vec![
            check(
                "prepared",
                true,
                format!(
                    "shear t = {} makes the lowest discriminant part (degree {}) carry x1^{}",
                    prep.t, prep.lowest_degree, prep.lowest_degree
                ),
            ),
            check(
                "blowup_quasi_ordinary",
                true,
                "discriminant of the blowup is a monomial times a unit",
            ),
            certificate_check(&cert),
        ];
        assemble(fstar, y, Some(cert), route)
    }
}

fn require_free(cert: &Certificate, n: usize) -> Result<()> {
    if cert.free {
        Ok(())
    } else {
        Err(Error::NotFree(format!(
            "root orbit has {} conjugates, degree is {}; residual_ok={}, minpoly_ok={}",
            cert.conjugate_count, n, cert.residual_ok, cert.minpoly_ok
        )))
    }
}

fn certificate_check(cert: &Certificate) -> CheckOutcome {
    check(
        "free_certificate",
        cert.free,
        format!(
            "{} conjugates; residual below bound: {}; conjugate product matches: {}",
            cert.conjugate_count, cert.residual_ok, cert.minpoly_ok
        ),
    )
}

fn assemble(
    f: SeriesPoly,
    y: FracSeries,
    certificate: Option<Certificate>,
    route: Vec<CheckOutcome>,
) -> Result<Analysis> {
    let y1 = y.reduced_denom();
    let conjs = y1.conjugates(y1.denom())?;
    let n = conjs.len() as i64;
    let y2 = y1.rebase_denom(n)?;
    if f.degree() as i64 != n {
        return Err(Error::InvariantViolation(format!(
            "conjugate count {} does not match the degree {}",
            n,
            f.degree()
        )));
    }
    let dim = y2.dim();
    let order = y2.order_spec().clone();

    let cd = characteristic_data(&y2, n)?;
    let pack = gcd_sequences(&cd)?;
    let counts = galois_counts(&y2, &pack)?;
    let pseudo = pseudo_roots(&y2, &pack)?;

    let mut checks = route;
    checks.push(check(
        "galois_counts",
        true,
        format!(
            "characters moving each exponent: {:?}; conjugates split: {:?}",
            counts.tuple_at, counts.conj_at
        ),
    ));

    let mut pseudo_orders = Vec::with_capacity(pack.h);
    for i in 0..pack.h {
        let contact = contact_order(&pseudo[i], &y2, n)?;
        checks.push(check(
            format!("pseudo_root_contact_{}", i + 1),
            contact == pack.r[i],
            format!("contact {:?}, r_{} = {:?}", contact, i + 1, pack.r[i]),
        ));
        let exp = expansion_order(&f, &pseudo[i], &pack, &pseudo)?;
        checks.push(check(
            format!("expansion_order_{}", i + 1),
            exp == contact,
            format!("expansion {:?}, contact {:?}", exp, contact),
        ));
        pseudo_orders.push(frac_vec(&contact, n));
    }

    let mut approx_orders = Vec::with_capacity(pack.h);
    for i in 0..pack.h {
        let app = f.approximate_root(pack.d[i])?;
        let contact = contact_order(&app, &y2, n)?;
        checks.push(check(
            format!("approximate_root_contact_{}", i + 1),
            contact == pack.r[i],
            format!("contact {:?}, r_{} = {:?}", contact, i + 1, pack.r[i]),
        ));
        approx_orders.push(frac_vec(&contact, n));
    }

    for i in 0..pack.h.saturating_sub(1) {
        let scaled: Vec<i64> = pack.r[i].iter().map(|&c| c * pack.e[i]).collect();
        checks.push(check(
            format!("r_growth_{}", i + 2),
            order.compare(&scaled, &pack.r[i + 1]) == std::cmp::Ordering::Less,
            format!(
                "e_{} r_{} = {:?} precedes r_{} = {:?}",
                i + 1,
                i + 1,
                scaled,
                i + 2,
                pack.r[i + 1]
            ),
        ));
    }

    // product formula: the resultant against y - (first root term) factors
    // over the conjugates, so the contact orders must add up to n times the
    // resultant order
    if f.coeffs().iter().all(|c| c.is_exact()) {
        if let Some((key, c)) = y2.leading()? {
            let g = SeriesPoly::from_coeffs(vec![y2.ctx().monomial(key, -&c)?, y2.ctx().one()]);
            let res = f.resultant_y(&g);
            // the resultant vanishes exactly when the root is the bare
            // monomial; there is nothing to compare then
            if let Some(rexp) = res.order_exp()? {
                let mut sum = vec![0i64; dim];
                for conj in &conjs {
                    let conj = conj.rebase_denom(n)?;
                    let contact = contact_order(&g, &conj, n)?;
                    for (s, v) in sum.iter_mut().zip(contact.iter()) {
                        *s += v;
                    }
                }
                // contacts are n-fold integers; the resultant order may be a
                // genuine fraction, so compare as rationals
                let pass = sum
                    .iter()
                    .zip(rexp.num().iter())
                    .all(|(&s, &v)| s * rexp.den() == n * v);
                checks.push(check(
                    "resultant_identity",
                    pass,
                    format!(
                        "conjugate contacts add to {:?}, n times resultant order is ({:?})/{}",
                        sum,
                        rexp.num().iter().map(|&v| n * v).collect::<Vec<_>>(),
                        rexp.den()
                    ),
                ));
            }
        }
    }

    let report = InvariantReport {
        n,
        e: dim,
        h: pack.h,
        cone: y2.cone().generators().to_vec(),
        order: OrderDesc {
            weight: order.weight().to_vec(),
            tiebreak: "lex".into(),
        },
        characteristic_exponents: pack.m.iter().map(|m| frac_vec(m, n)).collect(),
        d_cap: pack.d_cap.clone(),
        d: pack.d.clone(),
        e_seq: pack.e.clone(),
        r: pack.r.clone(),
        generators: pack.generators(),
        pseudo_root_orders: pseudo_orders,
        approx_root_orders: approx_orders,
        checks,
    };
    Ok(Analysis {
        report,
        root: y2,
        minimal: f,
        char_data: cd,
        pack,
        pseudo,
        certificate,
    })
}
