//! Sub-additive closure: the least-cost way to compose a curve with
//! itself any number of times, `f^* = min_k f^(k)` with `f^(0)` the
//! convolution identity.
//!
//! The closure is computed, not extrapolated on trust. A candidate `X` is
//! accepted only if it passes two checks that together pin it down exactly:
//!
//!   1. `X = min(id, g ∗ X)` where `g = min(id, f)`. Unfolding this
//!      equation n times gives `X ≤ min_{k<n} g^(k)`, so `X ≤ f^*`.
//!   2. `X ≤ X ∗ X` (sub-additivity) with `X(0) = 0` and `X ≤ g`. Then by
//!      induction `g^(k) ≥ X^(k) ≥ X` for every k, so `f^* ≥ X`.
//!
//! Any curve passing both equals the closure — a wrong tail hypothesis is
//! rejected at verification rather than silently extrapolated, and the
//! search retries with a wider window or the alternative hypothesis.

use super::compare::{equiv, leq, lpi};
use super::frag::{assemble, merge, Frag, Frags, MergeOp, TailPlan};
use super::ops::{conv_frags, convolve, minimum};
use super::{Curve, CurveError, Tail};
use crate::rat::{Finite, Infinite, Rat, Value};

/// Tail shape the closure is conjectured to settle into.
#[derive(Clone, Copy)]
enum Hyp {
    /// repeats the cheapest cycle: `+c` every `d`
    Per { d: Rat, c: Rat },
    /// flattens out (only possible when the input flattens out)
    Flat,
}

pub fn sub_additive_closure(f: &Curve) -> Result<Curve, CurveError> {
    if f.is_epsilon() {
        return Ok(Curve::conv_identity());
    }
    if f.eval(Rat::ZERO) < Value::zero() {
        // a negative cost at zero length can be taken arbitrarily often
        return Err(CurveError::ClosureDiverges);
    }
    let g = minimum(&Curve::conv_identity(), f);
    if g.support_end() == Some(Rat::ZERO) {
        return Ok(Curve::conv_identity());
    }
    let b0 = g.breakpoints()[0];
    if b0.rv == Value::zero() {
        if b0.slope.is_zero() {
            // free head: enough zero-cost pieces cover any length
            return Ok(Curve::zero());
        }
        let line = Curve::affine(Rat::ZERO, b0.slope);
        if leq(&line, &g) {
            // k pieces of length t/k cost k·g(t/k) → slope·t from above,
            // and every piece costs at least the line
            return Ok(line);
        }
    }
    for hyp in hypotheses(&g) {
        let mut r = match hyp {
            Hyp::Per { d, .. } => g.last_time().max(d),
            Hyp::Flat => g.last_time().max(Rat::ONE),
        };
        for _ in 0..3 {
            if let Some(x) = attempt(&g, r, hyp) {
                return Ok(x);
            }
            r = r + r + Rat::ONE;
        }
    }
    Err(CurveError::ClosureBudget)
}

/// Candidate tails, most plausible first. The long-run rate of the
/// closure is the cheapest cost-per-time over single stretches: either a
/// corner of `g` (repeat that cycle) or `g`'s own tail rate.
fn hypotheses(g: &Curve) -> Vec<Hyp> {
    let horizon = g.last_time()
        + match g.tail() {
            Tail::Periodic { d, .. } => d,
            _ => Rat::ONE,
        };
    let mut corner: Option<(Rat, Rat)> = None;
    for fr in &Frags::from_curve(g, horizon).0 {
        if let Frag::Point { t, v } = *fr {
            if t.is_positive() {
                let better = match corner {
                    None => true,
                    // strictly cheaper rate wins; ties keep the shortest cycle
                    Some((dc, cc)) => v * dc < cc * t,
                };
                if better {
                    corner = Some((t, v));
                }
            }
        }
    }
    let corner = corner.map(|(d, c)| Hyp::Per { d, c });
    match g.tail() {
        Tail::Infinite => corner.into_iter().collect(),
        Tail::Constant => {
            let mut v = vec![Hyp::Flat];
            v.extend(corner);
            v
        }
        Tail::Periodic { d, c, .. } => {
            let tail = Hyp::Per { d, c };
            match corner {
                Some(Hyp::Per { d: dc, c: cc }) if cc * d <= c * dc => {
                    vec![Hyp::Per { d: dc, c: cc }, tail]
                }
                Some(cn) => vec![tail, cn],
                None => vec![tail],
            }
        }
    }
}

/// One closure attempt: compute `g^*` exactly on a window, assemble it
/// with the hypothesized tail, and verify. `None` means try again wider.
fn attempt(g: &Curve, r: Rat, hyp: Hyp) -> Option<Curve> {
    let (w, plan) = match hyp {
        Hyp::Per { d, c } => (r + d + d, TailPlan::Periodic { start: r, d, c }),
        Hyp::Flat => (r + Rat::ONE, TailPlan::Constant { from: r }),
    };
    let frags = if g.breakpoints()[0].rv > Value::zero() {
        jump_window(g, w)
    } else {
        slope_window(g, w)
    };
    let x = assemble(&frags, w, plan).ok()?;
    // verification both ways; see the module docs
    let id = Curve::conv_identity();
    let fixed = minimum(&id, &convolve(g, &x));
    if equiv(&x, &fixed) && leq(&x, &convolve(&x, &x)) {
        Some(x)
    } else {
        None
    }
}

/// `g^*` on `[0, w]` when `g` jumps at zero: every positive-length piece
/// costs at least the jump `j`, so splits with more than `V/j` pieces
/// exceed any value of interest `V`. Squaring `min(id, g)` with value and
/// time truncation reaches that piece count in log steps.
fn jump_window(g: &Curve, w: Rat) -> Frags {
    let j = g.breakpoints()[0].rv.expect_finite();
    let v_bound = match g.eval(w) {
        Finite(v) => v,
        Infinite => {
            // pieces no longer than the support cover w at this total cost
            let e = g.support_end().unwrap();
            let cycles = (w / e).ceil();
            g.eval(e).expect_finite() * Rat::int(cycles)
        }
    };
    let k_target = (v_bound / j).ceil().max(1);
    let mut h = trunc(&g.clone(), v_bound, w);
    let mut reach: i128 = 1;
    while reach < k_target {
        h = trunc(&convolve(&h, &h), v_bound, w);
        reach *= 2;
    }
    Frags::from_curve(&h, w)
}

fn trunc(c: &Curve, v: Rat, w: Rat) -> Curve {
    let c = match lpi(c, Finite(v), true) {
        Infinite => c.clone(),
        Finite(tau) => clip_at(c, tau),
    };
    match c.support_end() {
        Some(e) if e <= w => c,
        _ => clip_at(&c, w),
    }
}

/// The curve on `[0, t_cut]`, infinite after. Values above the cut are
/// either unneeded (time cut) or provably not part of the answer below
/// the value bound (value cut). Goes through the fragment unroll so that
/// pattern jumps between the last stored breakpoint and the cut survive.
fn clip_at(c: &Curve, t_cut: Rat) -> Curve {
    let f = Frags::from_curve(c, t_cut);
    assemble(&f, t_cut + Rat::ONE, TailPlan::Infinite).expect("clip keeps the invariants")
}

/// `g^*` on `[0, w]` when `g` climbs from zero with slope σ: factor
/// `g = head ⊕ rest` at the end of the first segment. The head's closure
/// is the full line `Λ(t) = σt`, and `g^* = Λ ∗ (rest ∗ Λ)^*`, where each
/// `rest`-piece is longer than the first segment, so only `w/t₁` powers
/// reach into the window. `rest` has an infinite head and never exists as
/// a curve; everything runs on fragments.
fn slope_window(g: &Curve, w: Rat) -> Frags {
    let sigma = g.breakpoints()[0].slope;
    let t1 = g.breakpoints()[1].t;
    let lam = Frags(vec![
        Frag::Point { t: Rat::ZERO, v: Rat::ZERO },
        Frag::Seg { a: Rat::ZERO, b: w, v0: Rat::ZERO, slope: sigma },
        Frag::Point { t: w, v: sigma * w },
    ]);
    let rest = Frags(
        Frags::from_curve(g, w)
            .0
            .iter()
            .filter(|fr| match fr {
                Frag::Point { t, .. } => *t > t1,
                Frag::Seg { a, .. } => *a >= t1,
            })
            .copied()
            .collect(),
    );
    let rest_lam = conv_frags(&rest, &lam, w);
    let mut s = merge(&Frags(vec![Frag::Point { t: Rat::ZERO, v: Rat::ZERO }]), &rest_lam, MergeOp::Min);
    let k_target = (w / t1).floor() + 2;
    let mut reach: i128 = 1;
    while reach < k_target {
        s = conv_frags(&s, &s, w);
        reach *= 2;
    }
    conv_frags(&lam, &s, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::Breakpoint;
    use crate::rat::Finite;

    fn r(n: i128) -> Rat {
        Rat::int(n)
    }

    #[test]
    fn closure_of_gain_shift_is_a_staircase() {
        let x = sub_additive_closure(&Curve::gain_shift(r(2), r(5))).unwrap();
        assert!(equiv(&x, &Curve::staircase(r(2), r(5))), "{x:?}");
    }

    #[test]
    fn closure_of_flat_head_is_zero() {
        let x = sub_additive_closure(&Curve::rate_latency(r(2), r(3))).unwrap();
        assert!(equiv(&x, &Curve::zero()), "{x:?}");
        let y = sub_additive_closure(&Curve::zero()).unwrap();
        assert!(equiv(&y, &Curve::zero()));
    }

    #[test]
    fn closure_of_line_is_itself() {
        let line = Curve::affine(Rat::ZERO, r(3));
        let x = sub_additive_closure(&line).unwrap();
        assert!(equiv(&x, &line));
    }

    #[test]
    fn closure_identities() {
        let e = Curve::conv_identity();
        assert!(equiv(&sub_additive_closure(&Curve::epsilon()).unwrap(), &e));
        assert!(equiv(&sub_additive_closure(&e).unwrap(), &e));
    }

    #[test]
    fn closure_of_subadditive_curve_adds_only_the_origin() {
        // the affine envelope only lacks the zero at 0; closing it yields
        // exactly the token-bucket form
        let aff = Curve::affine(r(5), Rat::new(1, 5));
        let tb = Curve::token_bucket(r(5), Rat::new(1, 5));
        let x = sub_additive_closure(&aff).unwrap();
        assert!(equiv(&x, &tb), "{x:?}");
        // and the bucket, sub-additive with value 0 at the origin, is a
        // fixed point
        let y = sub_additive_closure(&tb).unwrap();
        assert!(equiv(&y, &tb), "{y:?}");
    }

    #[test]
    fn closure_mixing_line_head_and_cheap_jump() {
        // min(line, 2-on-[0,5]): cheapest long-run behavior repeats the
        // 5-for-2 stretch; short spans ride the line
        let f = minimum(&Curve::gain_shift(r(2), r(5)), &Curve::affine(Rat::ZERO, r(1)));
        let x = sub_additive_closure(&f).unwrap();
        let expect = Curve::from_parts(
            vec![
                Breakpoint { t: Rat::ZERO, v: Value::zero(), rv: Value::zero(), slope: r(1) },
                Breakpoint { t: r(2), v: Finite(r(2)), rv: Finite(r(2)), slope: Rat::ZERO },
                Breakpoint { t: r(5), v: Finite(r(2)), rv: Finite(r(2)), slope: r(1) },
            ],
            Tail::Periodic { start: r(2), d: r(5), c: r(2) },
        )
        .unwrap();
        assert!(equiv(&x, &expect), "{x:?}");
    }

    #[test]
    fn diverging_head_is_rejected() {
        let f = Curve::gain_shift(r(-3), r(10));
        assert!(matches!(sub_additive_closure(&f), Err(CurveError::ClosureDiverges)));
    }
}
