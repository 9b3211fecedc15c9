//! Random inputs for randomized checks: small-integer scalars, matrices and
//! parameter sextuples, drawn from a caller-supplied RNG.

use rand::Rng;

use crate::arith::{Field, Scalar};
use crate::decomp::{validate_params, Params};
use crate::tensor::{CoVec2, Mat2, Vec2};

/// Coordinates are drawn from `[-COORD_BOUND, COORD_BOUND]`.
pub const COORD_BOUND: i64 = 3;

pub fn small_scalar<R: Rng + ?Sized>(rng: &mut R, field: Field, bound: i64) -> Scalar {
    field.from_int(rng.gen_range(-bound..=bound))
}

pub fn nonzero_scalar<R: Rng + ?Sized>(rng: &mut R, field: Field, bound: i64) -> Scalar {
    loop {
        let x = small_scalar(rng, field, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Over the rationals, a fraction `n/d` with `|n| <= bound`, `1 <= d <= bound`;
/// in a prime field, a small integer.
pub fn fraction<R: Rng + ?Sized>(rng: &mut R, field: Field, bound: i64) -> Scalar {
    match field {
        Field::Rational => {
            let n = rng.gen_range(-bound..=bound);
            let d = rng.gen_range(1..=bound.max(1));
            Scalar::ratio(n, d).expect("nonzero denominator")
        }
        Field::Prime(_) => small_scalar(rng, field, bound),
    }
}

pub fn mat2<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Mat2 {
    Mat2([0, 1].map(|_| [0, 1].map(|_| fraction(rng, field, COORD_BOUND))))
}

pub fn vec2<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Vec2 {
    Vec2([0, 1].map(|_| small_scalar(rng, field, COORD_BOUND)))
}

pub fn covec2<R: Rng + ?Sized>(rng: &mut R, field: Field) -> CoVec2 {
    CoVec2([0, 1].map(|_| small_scalar(rng, field, COORD_BOUND)))
}

pub fn nonzero_vec2<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Vec2 {
    loop {
        let v = vec2(rng, field);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Nonzero `v_i` with `λ_i` a random nonzero multiple of the kernel form of `v_i`.
/// Satisfies the hypothesis, but not necessarily the pairwise conditions.
pub fn hypothesis_params<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Params {
    let v = [0, 1, 2].map(|_| nonzero_vec2(rng, field));
    let l = [0, 1, 2].map(|i| v[i].kernel_form().scale(&nonzero_scalar(rng, field, COORD_BOUND)));
    Params::new(v, l).expect("single field")
}

/// Rejection-samples hypothesis parameters until they are valid.
pub fn valid_params<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Params {
    loop {
        let p = hypothesis_params(rng, field);
        if validate_params(&p).is_valid() {
            return p;
        }
    }
}

/// Hypothesis parameters in which two of the `v_i` are forced colinear.
pub fn degenerate_params<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Params {
    let p = hypothesis_params(rng, field);
    let i = rng.gen_range(0..3);
    let j = (i + rng.gen_range(1..3)) % 3;
    let mut v = p.vectors().clone();
    let mut l = p.forms().clone();
    v[j] = v[i].scale(&nonzero_scalar(rng, field, COORD_BOUND));
    l[j] = v[j].kernel_form().scale(&nonzero_scalar(rng, field, COORD_BOUND));
    Params::new(v, l).expect("single field")
}
