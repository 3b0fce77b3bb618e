//! Shared fixtures for the benchmark targets.

use freepoly::cone::{compatible_order, Cone};
use freepoly::cyclotomic::CycNum;
use freepoly::series::{FracSeries, Precision, SeriesCtx};
use freepoly::ypoly::SeriesPoly;

pub fn orthant_ctx(dim: usize, denom: i64) -> SeriesCtx {
    let cone = Cone::orthant(dim);
    let order = compatible_order(&cone).unwrap();
    SeriesCtx::new(dim, denom, cone, order)
}

pub fn monomial(ctx: &SeriesCtx, key: Vec<i64>, num: i64) -> FracSeries {
    ctx.monomial(key, CycNum::from_int(num)).unwrap()
}

/// y^4 - 2 x1 x2 y^2 - 4 x1^2 x2^2 y + x1^2 x2^2 - x1^3 x2^3, the running
/// degree-four example with two characteristic exponents.
pub fn quartic() -> SeriesPoly {
    let ctx = orthant_ctx(2, 1);
    let a0 = ctx
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
        monomial(&ctx, vec![2, 2], -4),
        monomial(&ctx, vec![1, 1], -2),
        ctx.zero(),
        ctx.one(),
    ])
}

/// Root of the quartic: x^((2,2)/4) + x^((3,3)/4).
pub fn quartic_root() -> FracSeries {
    let ctx = orthant_ctx(2, 4);
    ctx.from_terms(
        vec![
            (vec![2, 2], CycNum::from_int(1)),
            (vec![3, 3], CycNum::from_int(1)),
        ],
        Precision::Exact,
    )
    .unwrap()
}

/// A degree-six root with three characteristic exponents.
pub fn sextic_root() -> FracSeries {
    let ctx = orthant_ctx(2, 6);
    ctx.from_terms(
        vec![
            (vec![6, 12], CycNum::from_int(1)),
            (vec![9, 12], CycNum::from_int(1)),
            (vec![11, 13], CycNum::from_int(1)),
        ],
        Precision::Exact,
    )
    .unwrap()
}
