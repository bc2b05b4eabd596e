//! Decision procedures and metrics on curves.
//!
//! Equality and ordering are decidable: past a window covering both
//! transients, each curve repeats with a fixed increment per common
//! period, so a sweep over the window plus a comparison of increments
//! settles every later time by induction.

use super::frag::{sweep_eq, sweep_le, Frags};
use super::ops::affine_env;
use super::{Curve, Tail};
use crate::rat::{Finite, Infinite, Rat, Value};

/// Asymptotic growth per unit time. Infinite for curves that stop being
/// finite (including the all-infinite curve).
pub fn long_run_rate(c: &Curve) -> Value {
    match c.tail() {
        Tail::Infinite => Infinite,
        Tail::Constant => Value::zero(),
        Tail::Periodic { d, c: inc, .. } => Finite(inc / d),
    }
}

/// Window and per-period increments sufficient to decide a pointwise
/// comparison. `None` increments mean the window alone decides (some
/// operand becomes infinite, which the sweep sees as absence).
fn cmp_window(f: &Curve, g: &Curve) -> (Rat, Option<(Rat, Rat)>) {
    let mut d = Rat::ONE;
    if let Tail::Periodic { d: df, .. } = f.tail() {
        d = df;
    }
    if let Tail::Periodic { d: dg, .. } = g.tail() {
        d = d.lcm(dg);
    }
    let w = f.last_time().max(g.last_time()) + d;
    let inc = |c: &Curve| -> Option<Rat> {
        match c.tail() {
            Tail::Infinite => None,
            Tail::Constant => Some(Rat::ZERO),
            Tail::Periodic { d: dc, c: inc, .. } => Some(inc / dc * d),
        }
    };
    match (inc(f), inc(g)) {
        (Some(a), Some(b)) => (w, Some((a, b))),
        _ => (w, None),
    }
}

/// Exact pointwise equality as functions (representations may differ).
pub fn equiv(f: &Curve, g: &Curve) -> bool {
    let (w, inc) = cmp_window(f, g);
    if !sweep_eq(&Frags::from_curve(f, w), &Frags::from_curve(g, w)) {
        return false;
    }
    match inc {
        Some((cf, cg)) => cf == cg,
        None => true,
    }
}

/// Exact pointwise `f(t) ≤ g(t)` for all `t ≥ 0`.
pub fn leq(f: &Curve, g: &Curve) -> bool {
    let (w, inc) = cmp_window(f, g);
    if !sweep_le(&Frags::from_curve(f, w), &Frags::from_curve(g, w)) {
        return false;
    }
    match inc {
        Some((cf, cg)) => cf <= cg,
        None => true,
    }
}

/// First time the curve reaches level `y`:
/// `inf { τ ≥ 0 : f(τ) ≥ y }`, infinite when the level is never reached.
pub fn lower_pseudo_inverse(f: &Curve, y: Value) -> Value {
    lpi(f, y, false)
}

/// `strict` asks for `inf { τ : f(τ) > y }` instead — the right limit of
/// the pseudo-inverse, needed when approaching a level from above.
pub(crate) fn lpi(f: &Curve, y: Value, strict: bool) -> Value {
    if f.is_epsilon() {
        // infinite everywhere: any finite level is passed at once
        return if strict && y == Infinite { Infinite } else { Value::zero() };
    }
    let yv = match y {
        Infinite => {
            return match (f.tail(), strict) {
                (Tail::Infinite, false) => Finite(f.last_time()),
                _ => Infinite,
            };
        }
        Finite(v) => v,
    };
    let ge = |v: Rat| if strict { v > yv } else { v >= yv };
    let w = match f.tail() {
        Tail::Infinite => f.last_time() + Rat::ONE,
        Tail::Constant => {
            let c = f.eval(f.last_time()).expect_finite();
            if !ge(c) {
                return Infinite;
            }
            f.last_time() + Rat::ONE
        }
        Tail::Periodic { start, d, c } => {
            let vs = f.eval(start).expect_finite();
            let k = if yv > vs { ((yv - vs) / c).floor().max(0) } else { 0 };
            start + d * (Rat::int(k) + Rat::int(2))
        }
    };
    for fr in &Frags::from_curve(f, w).0 {
        match *fr {
            super::frag::Frag::Point { t, v } => {
                if ge(v) {
                    return Finite(t);
                }
            }
            super::frag::Frag::Seg { a, b, v0, slope } => {
                if ge(v0) {
                    return Finite(a);
                }
                let vb = v0 + slope * (b - a);
                // interior crossing; the open end's own limit is handled
                // by the point at b (same formula for both strictnesses:
                // values exceed yv immediately past the crossing)
                if slope.is_positive() && vb > yv {
                    return Finite(a + (yv - v0) / slope);
                }
            }
        }
    }
    match f.tail() {
        // only the jump to infinity itself reaches the level
        Tail::Infinite => Finite(f.last_time()),
        _ => unreachable!("window chosen to contain the crossing"),
    }
}

/// Signed horizontal deviation `sup_u [ g↖(f(u)) − u ]`: the worst
/// horizontal gap by which `g` lags behind `f`. Infinite when `f`
/// outgrows `g`.
pub fn hdev_signed(f: &Curve, g: &Curve) -> Value {
    if g.is_epsilon() {
        return Value::zero();
    }
    if f.is_epsilon() {
        return lpi(g, Infinite, false);
    }
    let (rf, rg) = (long_run_rate(f), long_run_rate(g));
    if rf > rg {
        return Infinite;
    }
    // window past which every Δ(u) is dominated by one inside
    let u_end = match (rf, rg) {
        (Infinite, Infinite) => f.support_end().unwrap() + Rat::ONE,
        (_, Infinite) => g.support_end().unwrap() + Rat::ONE,
        (Finite(a), Finite(b)) if a == b => {
            if a.is_zero() {
                let cf = f.eval(f.last_time()).expect_finite();
                let cg = g.eval(g.last_time()).expect_finite();
                if cf > cg {
                    return Infinite;
                }
                f.last_time().max(g.last_time()) + Rat::ONE
            } else {
                let (df, dg) = (period_d(f), period_d(g));
                let d = df.lcm(dg);
                // u from which f's values sit in g's periodic regime
                let gs = tail_start(g);
                let ystar = g.eval(gs).expect_finite() + period_c(g);
                let u1 = match lpi(f, Finite(ystar), false) {
                    Finite(u) => u,
                    Infinite => unreachable!("f grows without bound"),
                };
                tail_start(f).max(u1) + d
            }
        }
        (Finite(a), Finite(b)) => {
            // Δ(u) ≤ (hi_f − lo_g)/ρ_g + u(ρ_f/ρ_g − 1), eventually below Δ(0)
            let (_, _, hif) = affine_env(f);
            let (_, log_, _) = affine_env(g);
            let d0 = match lpi(g, f.eval(Rat::ZERO), false) {
                Finite(x) => x,
                Infinite => return Infinite,
            };
            ((hif - log_ - b * d0) / (b - a)).max(Rat::ZERO) + Rat::ONE
        }
        (Infinite, Finite(_)) => unreachable!("rf > rg was handled"),
    };
    // level range of g that f can request within the window
    let y_cap = f.eval(u_end);
    let g_end = match lpi(g, y_cap, false) {
        Finite(x) => x + Rat::ONE,
        Infinite => return Infinite,
    };
    let f_frags = Frags::from_curve(f, u_end);
    let g_frags = Frags::from_curve(g, g_end);
    // candidate u: corners of f, plus entry/exit of each g corner level,
    // plus the window edges; Δ is affine between consecutive candidates
    let mut us: Vec<Rat> = vec![Rat::ZERO, u_end];
    for fr in &f_frags.0 {
        if let super::frag::Frag::Point { t, .. } = fr {
            us.push(*t);
        }
    }
    let mut levels: Vec<Rat> = Vec::new();
    for fr in &g_frags.0 {
        match *fr {
            super::frag::Frag::Point { v, .. } => levels.push(v),
            super::frag::Frag::Seg { a, b, v0, slope } => {
                levels.push(v0);
                levels.push(v0 + slope * (b - a));
            }
        }
    }
    levels.sort();
    levels.dedup();
    for y in levels {
        for strict in [false, true] {
            if let Finite(u) = lpi(f, Finite(y), strict) {
                if u <= u_end {
                    us.push(u);
                }
            }
        }
    }
    us.sort();
    us.dedup();
    let mut best: Option<Value> = None;
    for u in us {
        let dv = lpi(g, f.eval(u), false) - u;
        let yr = f.eval_right(u);
        let dr = lpi(g, yr, yr.is_finite()) - u;
        for cand in [dv, dr] {
            best = Some(match best {
                None => cand,
                Some(b) => b.max(cand),
            });
        }
    }
    best.expect("candidate set is never empty")
}

/// Horizontal deviation clamped at zero — a worst-case delay.
pub fn hdev(f: &Curve, g: &Curve) -> Value {
    match hdev_signed(f, g) {
        Infinite => Infinite,
        Finite(x) => Finite(x.max(Rat::ZERO)),
    }
}

fn period_d(c: &Curve) -> Rat {
    match c.tail() {
        Tail::Periodic { d, .. } => d,
        _ => unreachable!(),
    }
}

fn period_c(c: &Curve) -> Rat {
    match c.tail() {
        Tail::Periodic { c, .. } => c,
        _ => unreachable!(),
    }
}

fn tail_start(c: &Curve) -> Rat {
    match c.tail() {
        Tail::Periodic { start, .. } => start,
        _ => c.last_time(),
    }
}

/// Smallest latency `L` such that `rate · max(0, t − L) ≤ x(t)`
/// everywhere, or `None` when no finite latency works.
pub fn tightest_rate_latency_below(x: &Curve, rate: Rat) -> Option<Rat> {
    assert!(rate.is_positive(), "rate-latency extraction needs a positive rate");
    if x.is_epsilon() {
        return Some(Rat::ZERO);
    }
    if x.eval(Rat::ZERO) < Value::zero() {
        // the flat head of any rate-latency curve already exceeds x
        return None;
    }
    let u_end = match long_run_rate(x) {
        Infinite => x.support_end().unwrap() + Rat::ONE,
        Finite(rx) => {
            if rx < rate {
                return None;
            }
            if rx == rate {
                tail_start(x) + period_d(x)
            } else {
                let (_, lox, _) = affine_env(x);
                let x0 = x.eval(Rat::ZERO).expect_finite();
                tail_start(x).max((x0 - lox) / (rx - rate)) + Rat::ONE
            }
        }
    };
    // sup of t − x(t)/rate over corners; affine between them
    let mut best = Rat::ZERO;
    for fr in &Frags::from_curve(x, u_end).0 {
        match *fr {
            super::frag::Frag::Point { t, v } => best = best.max(t - v / rate),
            super::frag::Frag::Seg { a, b, v0, slope } => {
                best = best.max(a - v0 / rate);
                best = best.max(b - (v0 + slope * (b - a)) / rate);
            }
        }
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128) -> Rat {
        Rat::int(n)
    }

    fn rr(n: i128, d: i128) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn equiv_ignores_representation() {
        let a = Curve::rate_latency(r(2), r(3));
        // same function built with a redundant interior breakpoint
        let b = Curve::from_parts(
            vec![
                super::super::Breakpoint {
                    t: Rat::ZERO,
                    v: Value::zero(),
                    rv: Value::zero(),
                    slope: Rat::ZERO,
                },
                super::super::Breakpoint {
                    t: r(3),
                    v: Value::zero(),
                    rv: Value::zero(),
                    slope: r(2),
                },
                super::super::Breakpoint { t: r(5), v: Finite(r(4)), rv: Finite(r(4)), slope: r(2) },
            ],
            Tail::Periodic { start: r(5), d: r(2), c: r(4) },
        )
        .unwrap();
        assert!(equiv(&a, &b));
        assert!(leq(&a, &b) && leq(&b, &a));
    }

    #[test]
    fn leq_orders_by_rate_and_transient() {
        let slow = Curve::rate_latency(r(1), r(2));
        let fast = Curve::rate_latency(r(2), r(2));
        assert!(leq(&slow, &fast));
        assert!(!leq(&fast, &slow));
        // same rate, later latency is smaller
        let later = Curve::rate_latency(r(1), r(5));
        assert!(leq(&later, &slow));
        assert!(!leq(&slow, &later));
        // everything is below the all-infinite curve
        assert!(leq(&fast, &Curve::epsilon()));
        assert!(!leq(&Curve::epsilon(), &fast));
    }

    #[test]
    fn pseudo_inverse_hits_jumps_and_slopes() {
        let s = Curve::staircase(r(2), r(5));
        // level 1 is first passed just after t=0 (jump to 2)
        assert_eq!(lower_pseudo_inverse(&s, Finite(r(1))), Finite(r(0)));
        assert_eq!(lower_pseudo_inverse(&s, Finite(r(2))), Finite(r(0)));
        assert_eq!(lower_pseudo_inverse(&s, Finite(r(3))), Finite(r(5)));
        // deep into the periodic tail: level 21 needs the 11th step
        assert_eq!(lower_pseudo_inverse(&s, Finite(r(21))), Finite(r(50)));
        let rl = Curve::rate_latency(rr(8, 25), r(10));
        assert_eq!(lower_pseudo_inverse(&rl, Finite(r(5))), Finite(rr(205, 8)));
        assert_eq!(lower_pseudo_inverse(&rl, Value::zero()), Finite(r(0)));
        assert_eq!(lower_pseudo_inverse(&Curve::constant(r(3)), Finite(r(4))), Infinite);
    }

    #[test]
    fn hdev_worked_value() {
        let tb = Curve::token_bucket(r(5), rr(1, 5));
        let rl = Curve::rate_latency(rr(8, 25), r(10));
        assert_eq!(hdev(&tb, &rl), Finite(rr(205, 8)));
        // unstable pairing: arrivals outpace service
        let fast = Curve::affine(Rat::ZERO, r(2));
        assert_eq!(hdev(&fast, &rl), Infinite);
    }

    #[test]
    fn hdev_equal_rates_and_staircases() {
        let a = Curve::affine(r(1), r(1));
        let b = Curve::rate_latency(r(1), r(3));
        // g must reach 1 + u: τ = 3 + 1 + u, gap = 4
        assert_eq!(hdev(&a, &b), Finite(r(4)));
        // staircase against its own smooth envelope
        let s = Curve::staircase(r(2), r(5));
        let line = Curve::affine(r(2), rr(2, 5));
        assert_eq!(hdev(&s, &line), Value::zero());
        let lag = hdev(&line, &s).expect_finite();
        assert_eq!(lag, r(5));
    }

    #[test]
    fn rate_latency_extraction() {
        let x = Curve::rate_latency(rr(8, 25), r(10));
        assert_eq!(tightest_rate_latency_below(&x, rr(8, 25)), Some(r(10)));
        // a faster rate than the curve sustains has no finite latency
        assert_eq!(tightest_rate_latency_below(&x, r(1)), None);
        // a step curve rises ahead of its average-rate line: latency 0
        let st = Curve::staircase(rr(16, 5), r(10));
        assert_eq!(tightest_rate_latency_below(&st, rr(16, 50)), Some(Rat::ZERO));
        // delaying it by one period costs exactly that period
        let shifted = crate::curve::convolve(&Curve::gain_shift(Rat::ZERO, r(10)), &st);
        assert_eq!(tightest_rate_latency_below(&shifted, rr(16, 50)), Some(r(10)));
        // negative head rules everything out
        let z = Curve::gain_shift(r(-3), r(2));
        assert_eq!(tightest_rate_latency_below(&z, r(1)), None);
    }

    #[test]
    fn long_run_rates() {
        assert_eq!(long_run_rate(&Curve::epsilon()), Infinite);
        assert_eq!(long_run_rate(&Curve::constant(r(7))), Value::zero());
        assert_eq!(long_run_rate(&Curve::staircase(r(2), r(5))), Finite(rr(2, 5)));
        assert_eq!(long_run_rate(&Curve::gain_shift(r(2), r(5))), Infinite);
    }
}
