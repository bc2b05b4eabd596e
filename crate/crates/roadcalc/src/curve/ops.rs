//! Binary min-plus operations on curves.
//!
//! Each operation follows one scheme. A small case analysis on the two
//! tails picks a window `[0, w]` and a tail rule such that (a) the result
//! on the window is determined by the operands on related windows, and
//! (b) past a provable point the result obeys the tail rule. The proofs
//! use global affine envelopes: for a curve with long-run rate `ρ` that
//! never becomes infinite, `lo + ρt ≤ f(t) ≤ hi + ρt` everywhere, with
//! `lo`/`hi` read off the breakpoints of the transient and one period.
//! Assembly then re-verifies the claimed tail against the computed window,
//! so a faulty analysis fails loudly instead of extrapolating nonsense.

use super::frag::{assemble, envelope, merge, Frag, Frags, MergeOp, TailPlan};
use super::{Curve, CurveError, Tail};
use crate::rat::{Infinite, Rat, Value};

/// Global affine envelope `(rho, lo, hi)` of a curve that stays finite:
/// `lo + rho·t ≤ f(t) ≤ hi + rho·t` for all `t ≥ 0`.
pub(crate) fn affine_env(c: &Curve) -> (Rat, Rat, Rat) {
    let rho = match c.tail() {
        Tail::Constant => Rat::ZERO,
        Tail::Periodic { d, c, .. } => c / d,
        Tail::Infinite => panic!("affine envelope of a curve with an infinite tail"),
    };
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for b in c.breakpoints() {
        for v in [b.v, b.rv] {
            let x = v.expect_finite() - rho * b.t;
            lo = Some(lo.map_or(x, |l: Rat| l.min(x)));
            hi = Some(hi.map_or(x, |h: Rat| h.max(x)));
        }
    }
    (rho, lo.unwrap(), hi.unwrap())
}

/// Start of the tail regime: the periodic start, or the last breakpoint.
fn tail_start(c: &Curve) -> Rat {
    match c.tail() {
        Tail::Periodic { start, .. } => start,
        _ => c.last_time(),
    }
}

/// Pointwise minimum.
pub fn minimum(f: &Curve, g: &Curve) -> Curve {
    if f.is_epsilon() {
        return g.clone();
    }
    if g.is_epsilon() {
        return f.clone();
    }
    let (w, plan) = extremum_plan(f, g, true);
    let m = merge(&Frags::from_curve(f, w), &Frags::from_curve(g, w), MergeOp::Min);
    assemble(&m, w, plan).expect("minimum: tail analysis violated")
}

/// Pointwise maximum.
pub fn maximum(f: &Curve, g: &Curve) -> Curve {
    if f.is_epsilon() || g.is_epsilon() {
        return Curve::epsilon();
    }
    let (w, plan) = extremum_plan(f, g, false);
    let m = merge(&Frags::from_curve(f, w), &Frags::from_curve(g, w), MergeOp::MaxAbsentWins);
    assemble(&m, w, plan).expect("maximum: tail analysis violated")
}

/// Window and tail rule for min (`min = true`) or max of two curves.
///
/// The eventual winner is the curve with the smaller (resp. larger)
/// long-run rate; past the crossover of the affine envelopes the loser
/// never returns. Equal rates leave both in play forever, with the joint
/// pattern repeating every lcm of the two periods.
fn extremum_plan(f: &Curve, g: &Curve, min: bool) -> (Rat, TailPlan) {
    match (f.support_end(), g.support_end()) {
        (Some(ef), Some(eg)) => {
            let e = if min { ef.max(eg) } else { ef.min(eg) };
            (e + Rat::ONE, TailPlan::Infinite)
        }
        (Some(e), None) | (None, Some(e)) => {
            let fin = if f.support_end().is_none() { f } else { g };
            if min {
                // the finite curve outlasts the one that went infinite
                finite_winner_plan(fin, e)
            } else {
                (e + Rat::ONE, TailPlan::Infinite)
            }
        }
        (None, None) => {
            let (rf, lof, hif) = affine_env(f);
            let (rg, log_, hig) = affine_env(g);
            if rf == rg {
                if rf.is_zero() {
                    let from = f.last_time().max(g.last_time());
                    (from + Rat::ONE, TailPlan::Constant { from })
                } else {
                    let (df, dg) = (period_of(f), period_of(g));
                    let d = df.lcm(dg);
                    let start = tail_start(f).max(tail_start(g));
                    (start + d + d, TailPlan::Periodic { start, d, c: rf * d })
                }
            } else {
                // pick the winner and the crossover of the envelopes
                let f_wins = (rf < rg) == min;
                let (win, rw, rl) = if f_wins { (f, rf, rg) } else { (g, rg, rf) };
                let (win_hi_or_lo, lose_bound) = if min {
                    (if f_wins { hif } else { hig }, if f_wins { log_ } else { lof })
                } else {
                    (if f_wins { -lof } else { -log_ }, if f_wins { -hig } else { -hif })
                };
                // min: winner_hi + rw·t ≤ loser_lo + rl·t  for t ≥ x
                // max: mirrored by negating values
                let x = (win_hi_or_lo - lose_bound) / (rl - rw).abs();
                let s = tail_start(win).max(x);
                finite_winner_plan_from(win, s)
            }
        }
    }
}

fn period_of(c: &Curve) -> Rat {
    match c.tail() {
        Tail::Periodic { d, .. } => d,
        _ => unreachable!(),
    }
}

/// Plan "equal to `win` from strictly after `horizon`".
fn finite_winner_plan(win: &Curve, horizon: Rat) -> (Rat, TailPlan) {
    match win.tail() {
        Tail::Constant => {
            let from = win.last_time().max(horizon + Rat::ONE);
            (from + Rat::ONE, TailPlan::Constant { from })
        }
        Tail::Periodic { start, d, c } => {
            let s = start.max(horizon + d);
            (s + d + d, TailPlan::Periodic { start: s, d, c })
        }
        Tail::Infinite => unreachable!(),
    }
}

/// Plan "equal to `win` from `s` on", `s` already past the crossover.
fn finite_winner_plan_from(win: &Curve, s: Rat) -> (Rat, TailPlan) {
    match win.tail() {
        Tail::Constant => (s + Rat::ONE, TailPlan::Constant { from: s }),
        Tail::Periodic { d, c, .. } => (s + d + d, TailPlan::Periodic { start: s, d, c }),
        Tail::Infinite => unreachable!(),
    }
}

/// Recognize the two-parameter generator signals: value `p` on
/// `[0, horizon]`, infinite after.
fn as_gain_shift(c: &Curve) -> Option<(Rat, Rat)> {
    if c.tail() != Tail::Infinite || c.is_epsilon() {
        return None;
    }
    let bps = c.breakpoints();
    match bps {
        [b] => Some((b.v.expect_finite(), Rat::ZERO)),
        [b0, b1]
            if b0.v == b0.rv && b0.slope.is_zero() && b1.v == b0.v && b1.rv == Infinite =>
        {
            Some((b0.v.expect_finite(), b1.t))
        }
        _ => None,
    }
}

/// `p + f(max(0, t − T))`: convolution with a gain/shift signal, done
/// directly on the breakpoint list.
fn shift_lift(f: &Curve, p: Rat, t_shift: Rat) -> Curve {
    if f.is_epsilon() {
        return Curve::epsilon();
    }
    let lift = |v: Value| v + p;
    let mut bps = Vec::with_capacity(f.breakpoints().len() + 1);
    if t_shift.is_positive() {
        let v0 = lift(f.breakpoints()[0].v);
        bps.push(super::Breakpoint { t: Rat::ZERO, v: v0, rv: v0, slope: Rat::ZERO });
    }
    for b in f.breakpoints() {
        bps.push(super::Breakpoint {
            t: b.t + t_shift,
            v: lift(b.v),
            rv: lift(b.rv),
            slope: b.slope,
        });
    }
    let tail = match f.tail() {
        Tail::Infinite => Tail::Infinite,
        Tail::Constant => Tail::Constant,
        Tail::Periodic { start, d, c } => Tail::Periodic { start: start + t_shift, d, c },
    };
    Curve::from_parts(bps, tail).expect("shift_lift preserves validity")
}

/// Min-plus convolution: `(f ∗ g)(t) = inf { f(s) + g(t − s) : 0 ≤ s ≤ t }`.
pub fn convolve(f: &Curve, g: &Curve) -> Curve {
    if f.is_epsilon() || g.is_epsilon() {
        return Curve::epsilon();
    }
    if let Some((p, t)) = as_gain_shift(f) {
        return shift_lift(g, p, t);
    }
    if let Some((p, t)) = as_gain_shift(g) {
        return shift_lift(f, p, t);
    }
    let (w, plan) = conv_plan(f, g);
    let env = conv_frags(&Frags::from_curve(f, w), &Frags::from_curve(g, w), w);
    assemble(&env, w, plan).expect("convolution: tail analysis violated")
}

/// Fragment-level min-plus convolution on `[0, w]`. Also the workhorse of
/// the sub-additive closure, which iterates on fragment sets that have no
/// curve representation of their own.
pub(crate) fn conv_frags(ff: &Frags, gg: &Frags, w: Rat) -> Frags {
    let mut cands: Vec<Frags> = Vec::with_capacity(ff.0.len() * gg.0.len());
    for a in &ff.0 {
        for b in &gg.0 {
            let mut out = Vec::with_capacity(4);
            conv_pair(*a, *b, w, &mut out);
            if !out.is_empty() {
                cands.push(Frags(out));
            }
        }
    }
    envelope(cands, MergeOp::Min)
}

/// Window and tail for convolution.
///
/// With both curves finite, splits that put more than `s*` on the
/// faster-growing side cost more than the trivial split, so past
/// `T_win + s*` the optimum lives entirely in the winner's periodic
/// regime and the winner's period carries over. A curve that becomes
/// infinite contributes its whole finite support as a fixed offset.
fn conv_plan(f: &Curve, g: &Curve) -> (Rat, TailPlan) {
    match (f.support_end(), g.support_end()) {
        (Some(ef), Some(eg)) => (ef + eg + Rat::ONE, TailPlan::Infinite),
        (Some(e), None) | (None, Some(e)) => {
            let fin = if f.support_end().is_none() { f } else { g };
            match fin.tail() {
                Tail::Constant => {
                    let from = e + fin.last_time();
                    (from + Rat::ONE, TailPlan::Constant { from })
                }
                Tail::Periodic { start, d, c } => {
                    let s = e + start;
                    (s + d + d, TailPlan::Periodic { start: s, d, c })
                }
                Tail::Infinite => unreachable!(),
            }
        }
        (None, None) => {
            let (rf, lof, hif) = affine_env(f);
            let (rg, log_, hig) = affine_env(g);
            if rf == rg {
                if rf.is_zero() {
                    let from = f.last_time() + g.last_time();
                    (from + Rat::ONE, TailPlan::Constant { from })
                } else {
                    let d = period_of(f).lcm(period_of(g));
                    let start = tail_start(f) + tail_start(g) + d;
                    (start + d + d, TailPlan::Periodic { start, d, c: rf * d })
                }
            } else {
                let ((win, rw, low, hiw), (lose, rl, lol)) = if rf < rg {
                    ((f, rf, lof, hif), (g, rg, log_))
                } else {
                    ((g, rg, log_, hig), (f, rf, lof))
                };
                let lose0 = lose.eval(Rat::ZERO).expect_finite();
                // splits giving the loser more than s* exceed the trivial
                // split lose(0) + win(t) against both envelopes
                let s_star = (lose0 + hiw - low - lol) / (rl - rw);
                let s = tail_start(win) + s_star.max(Rat::ZERO);
                match win.tail() {
                    Tail::Constant => (s + Rat::ONE, TailPlan::Constant { from: s }),
                    Tail::Periodic { d, c, .. } => (s + d + d, TailPlan::Periodic { start: s, d, c }),
                    Tail::Infinite => unreachable!(),
                }
            }
        }
    }
}

/// Candidate pieces for the convolution of two fragments, clipped to
/// `[0, w]`. Where a clip at `w` cuts a segment, the value at `w` itself is
/// attained by an interior split, so a point is emitted too.
fn conv_pair(a: Frag, b: Frag, w: Rat, out: &mut Vec<Frag>) {
    match (a, b) {
        (Frag::Point { t: ta, v: va }, Frag::Point { t: tb, v: vb }) => {
            let t = ta + tb;
            if t <= w {
                out.push(Frag::Point { t, v: va + vb });
            }
        }
        (Frag::Point { t, v }, Frag::Seg { a, b, v0, slope })
        | (Frag::Seg { a, b, v0, slope }, Frag::Point { t, v }) => {
            emit_clipped(out, Frag::Seg { a: t + a, b: t + b, v0: v + v0, slope }, w);
        }
        (
            Frag::Seg { a: a1, b: b1, v0: u0, slope: mu },
            Frag::Seg { a: a2, b: b2, v0: w0, slope: mw },
        ) => {
            // lower slope first; the optimum exhausts the flatter segment
            // before touching the steeper one
            let (fa, fb, fm, sa, sb, sm) = if mu <= mw {
                (a1, b1, mu, a2, b2, mw)
            } else {
                (a2, b2, mw, a1, b1, mu)
            };
            let lo = fa + sa;
            let mid = fb + sa;
            let hi = fb + sb;
            let v_lo = u0 + w0;
            if fm == sm {
                emit_clipped(out, Frag::Seg { a: lo, b: hi, v0: v_lo, slope: fm }, w);
                return;
            }
            let v_mid = v_lo + fm * (mid - lo);
            emit_clipped(out, Frag::Seg { a: lo, b: mid, v0: v_lo, slope: fm }, w);
            if mid < w {
                out.push(Frag::Point { t: mid, v: v_mid });
                emit_clipped(out, Frag::Seg { a: mid, b: hi, v0: v_mid, slope: sm }, w);
            } else if mid == w {
                out.push(Frag::Point { t: mid, v: v_mid });
            }
        }
    }
}

fn emit_clipped(out: &mut Vec<Frag>, seg: Frag, w: Rat) {
    if let Frag::Seg { a, b, v0, slope } = seg {
        if a >= w {
            return;
        }
        if b > w {
            out.push(Frag::Seg { a, b: w, v0, slope });
            out.push(Frag::Point { t: w, v: v0 + slope * (w - a) });
        } else {
            out.push(seg);
        }
    }
}

/// Min-plus deconvolution: `(f ⊘ g)(t) = sup { f(t + u) − g(u) : u ≥ 0 }`.
///
/// The classical use: if a flow through a server with service floor `g`
/// was bounded by `f` on entry, its output is bounded by `f ⊘ g`.
pub fn deconvolve(f: &Curve, g: &Curve) -> Result<Curve, CurveError> {
    if g.is_epsilon() {
        return Err(CurveError::DeconvByEmpty);
    }
    if f.is_epsilon() {
        return Ok(Curve::epsilon());
    }
    // sup horizon: past it, every term is dominated by one inside
    let u_max = match (f.support_end(), g.support_end()) {
        (_, Some(eg)) => {
            if let Some(ef) = f.support_end() {
                if ef < eg {
                    // f hits infinity while g is still finite: sup is ∞
                    return Ok(Curve::epsilon());
                }
            }
            eg
        }
        (Some(_), None) => return Ok(Curve::epsilon()),
        (None, None) => {
            let (rf, lof, hif) = affine_env(f);
            let (rg, log_, _) = affine_env(g);
            if rf > rg {
                return Ok(Curve::epsilon());
            }
            if rf == rg {
                let d = match (f.tail(), g.tail()) {
                    (Tail::Periodic { d: df, .. }, Tail::Periodic { d: dg, .. }) => df.lcm(dg),
                    _ => Rat::ONE,
                };
                tail_start(f).max(tail_start(g)) + d
            } else {
                let g0 = g.eval(Rat::ZERO).expect_finite();
                (hif - lof + g0 - log_) / (rg - rf)
            }
        }
    };
    // the shift structure of f carries over verbatim: for t past f's tail
    // start, every term f(t + u) − g(u) shifts by f's own increment
    let (w, plan, clip) = match (f.tail(), f.support_end(), g.support_end()) {
        (Tail::Infinite, Some(ef), Some(eg)) => {
            let e = ef - eg;
            if e.is_negative() {
                return Ok(Curve::epsilon());
            }
            // past e some term pairs infinite f against finite g, so the
            // sup is infinite there even though all-finite pairs exist:
            // candidates stop at e, the window extends past it
            (e + Rat::ONE, TailPlan::Infinite, e)
        }
        (Tail::Infinite, _, _) => unreachable!("covered by the horizon analysis"),
        (Tail::Constant, _, _) => {
            let from = f.last_time();
            (from + Rat::ONE, TailPlan::Constant { from }, from + Rat::ONE)
        }
        (Tail::Periodic { start, d, c }, _, _) => {
            let w = start + d + d;
            (w, TailPlan::Periodic { start, d, c }, w)
        }
    };
    let ff = Frags::from_curve(f, w + u_max);
    let gg = Frags::from_curve(g, u_max);
    let mut cands: Vec<Frags> = Vec::new();
    for a in &ff.0 {
        for b in &gg.0 {
            let mut out = Vec::with_capacity(5);
            deconv_pair(*a, *b, clip, &mut out);
            if !out.is_empty() {
                cands.push(Frags(out));
            }
        }
    }
    let env = envelope(cands, MergeOp::MaxAbsentLoses);
    assemble(&env, w, plan)
}

/// Candidates for `sup_u f(x) − g(u)` with `x = t + u` ranging over
/// fragment `a` of `f` and `u` over fragment `b` of `g`, as pieces in `t`,
/// clipped to `[0, w]`.
fn deconv_pair(a: Frag, b: Frag, w: Rat, out: &mut Vec<Frag>) {
    match (a, b) {
        (Frag::Point { t: x, v: vx }, Frag::Point { t: u, v: vu }) => {
            let t = x - u;
            if !t.is_negative() && t <= w {
                out.push(Frag::Point { t, v: vx - vu });
            }
        }
        (Frag::Seg { a: a1, b: b1, v0, slope }, Frag::Point { t: u, v: vu }) => {
            clip_lr(out, a1 - u, b1 - u, v0 - vu, slope, w);
        }
        (Frag::Point { t: x, v: vx }, Frag::Seg { a: b1, b: b2, v0: w0, slope: mg }) => {
            // u = x − t decreases as t grows: value vx − g(x − t)
            let lo = x - b2;
            let hi = x - b1;
            let v_lo = vx - w0 - mg * (b2 - b1);
            clip_lr(out, lo, hi, v_lo, mg, w);
        }
        (
            Frag::Seg { a: a1, b: a2, v0, slope: m },
            Frag::Seg { a: b1, b: b2, v0: w0, slope: mg },
        ) => {
            let lo = a1 - b2;
            let hi = a2 - b1;
            let v_lo = v0 - w0 - mg * (b2 - b1);
            if m == mg {
                clip_lr(out, lo, hi, v_lo, m, w);
                return;
            }
            // the best u sits at whichever end the sign of (m − mg) favors;
            // the active constraint switches once, at `mid`
            let (mid, first_m, second_m) = if m > mg {
                (a2 - b2, m, mg)
            } else {
                (a1 - b1, mg, m)
            };
            let v_mid = v_lo + first_m * (mid - lo);
            clip_lr(out, lo, mid, v_lo, first_m, w);
            if mid > Rat::ZERO && mid < w {
                out.push(Frag::Point { t: mid, v: v_mid });
            }
            clip_lr(out, mid, hi, v_mid, second_m, w);
        }
    }
}

/// Emit `Seg(lo, hi)` clipped to `[0, w]`, with points at clipped edges —
/// the candidate is defined and attains those values there.
fn clip_lr(out: &mut Vec<Frag>, lo: Rat, hi: Rat, v_lo: Rat, slope: Rat, w: Rat) {
    if hi <= Rat::ZERO || lo >= w || lo >= hi {
        return;
    }
    let (a, av) = if lo.is_negative() {
        (Rat::ZERO, v_lo + slope * (Rat::ZERO - lo))
    } else {
        (lo, v_lo)
    };
    let (b, bv) = if hi > w { (w, v_lo + slope * (w - lo)) } else { (hi, Rat::ZERO) };
    if lo.is_negative() {
        out.push(Frag::Point { t: a, v: av });
    }
    if a < b {
        out.push(Frag::Seg { a, b, v0: av, slope });
    }
    if hi > w && b == w {
        out.push(Frag::Point { t: b, v: bv });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::compare::equiv;
    use crate::rat::Finite;

    fn r(n: i128) -> Rat {
        Rat::int(n)
    }

    fn rr(n: i128, d: i128) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn min_of_crossing_envelopes() {
        // token bucket vs rate-latency: the classic crossing pair
        let tb = Curve::token_bucket(r(5), rr(1, 5));
        let rl = Curve::rate_latency(rr(8, 25), r(10));
        let m = minimum(&tb, &rl);
        assert_eq!(m.eval(Rat::ZERO), Value::zero());
        assert_eq!(m.eval(r(10)), Value::zero());
        // rl crosses tb at 0.32(t−10) = 5 + 0.2t → t = 205/3
        assert_eq!(m.eval(r(60)), Finite(r(16))); // rl side
        assert_eq!(m.eval(r(70)), Finite(r(19))); // tb side
        assert!(equiv(&minimum(&tb, &rl), &minimum(&rl, &tb)));
    }

    #[test]
    fn min_max_with_infinite_support() {
        let gs = Curve::gain_shift(r(3), r(4));
        let line = Curve::affine(Rat::ZERO, r(1));
        let mn = minimum(&gs, &line);
        assert_eq!(mn.eval(r(2)), Finite(r(2)));
        assert_eq!(mn.eval(r(4)), Finite(r(3)));
        assert_eq!(mn.eval(r(100)), Finite(r(100)));
        let mx = maximum(&gs, &line);
        assert_eq!(mx.eval(r(2)), Finite(r(3)));
        assert_eq!(mx.eval(r(5)), Infinite);
        let mx2 = maximum(&line, &Curve::constant(r(4)));
        assert_eq!(mx2.eval(r(2)), Finite(r(4)));
        assert_eq!(mx2.eval(r(10)), Finite(r(10)));
    }

    #[test]
    fn conv_of_rate_latencies_adds_latencies_keeps_min_rate() {
        let a = Curve::rate_latency(r(2), r(1));
        let b = Curve::rate_latency(r(3), r(2));
        let c = convolve(&a, &b);
        assert!(equiv(&c, &Curve::rate_latency(r(2), r(3))), "{c:?}");
    }

    #[test]
    fn conv_identity_and_epsilon() {
        let s = Curve::staircase(rr(16, 5), r(10));
        assert!(equiv(&convolve(&s, &Curve::conv_identity()), &s));
        assert!(convolve(&s, &Curve::epsilon()).is_epsilon());
    }

    #[test]
    fn conv_gain_shift_shifts_and_lifts() {
        let s = Curve::staircase(r(2), r(5));
        let g = Curve::gain_shift(r(3), r(7));
        let c = convolve(&s, &g);
        assert_eq!(c.eval(Rat::ZERO), Finite(r(3)));
        assert_eq!(c.eval(r(7)), Finite(r(3)));
        assert_eq!(c.eval(r(8)), Finite(r(5)));
        assert_eq!(c.eval(r(13)), Finite(r(7)));
        // pure shift composition
        let two = convolve(&Curve::gain_shift(r(1), r(2)), &Curve::gain_shift(r(4), r(3)));
        assert!(equiv(&two, &Curve::gain_shift(r(5), r(5))));
    }

    #[test]
    fn conv_token_buckets_and_staircases() {
        // burst+rate convolved: bursts add? no — min-plus conv of two
        // concave arrival envelopes is their pointwise min here
        let a = Curve::token_bucket(r(2), r(1));
        let b = Curve::token_bucket(r(5), rr(1, 2));
        let c = convolve(&a, &b);
        assert!(equiv(&c, &minimum(&a, &b)), "{c:?}");
        // two release servers in sequence
        let s1 = Curve::staircase(r(2), r(4));
        let s2 = Curve::staircase(r(3), r(6));
        let c = convolve(&s1, &s2);
        assert_eq!(c.eval(r(1)), Finite(r(2))); // s1's first batch alone
        assert_eq!(c.eval(r(5)), Finite(r(3))); // s2's first batch alone
        assert_eq!(c.eval(r(7)), Finite(r(4))); // two batches of s1
        assert_eq!(c.eval(r(10)), Finite(r(5))); // one batch of each, back to back
        let d = convolve(&s2, &s1);
        assert!(equiv(&c, &d));
    }

    #[test]
    fn deconv_token_bucket_through_rate_latency() {
        let tb = Curve::token_bucket(r(5), rr(1, 5));
        let rl = Curve::rate_latency(rr(8, 25), r(10));
        let out = deconvolve(&tb, &rl).unwrap();
        // burst + rate·latency already present at t = 0: the sup at the
        // origin is the backlog bound, so the result is affine, not a bucket
        assert!(equiv(&out, &Curve::affine(r(7), rr(1, 5))), "{out:?}");
    }

    #[test]
    fn deconv_detects_instability() {
        let fast = Curve::affine(Rat::ZERO, r(2));
        let slow = Curve::rate_latency(r(1), r(1));
        assert!(deconvolve(&fast, &slow).unwrap().is_epsilon());
        assert!(deconvolve(&slow, &Curve::epsilon()).is_err());
    }

    #[test]
    fn deconv_against_finite_window_curve() {
        // g infinite after 4: sup runs over u ≤ 4 only
        let f = Curve::affine(Rat::ZERO, r(2));
        let g = Curve::gain_shift(Rat::ZERO, r(4));
        let out = deconvolve(&f, &g).unwrap();
        // sup_u 2(t+u) − 0 = 2t + 8
        assert!(equiv(&out, &Curve::affine(r(8), r(2))), "{out:?}");
    }

    #[test]
    fn conv_staircase_with_rate_latency() {
        // a queue released in steps feeding a constant-rate link
        let s = Curve::staircase(r(4), r(10));
        let l = Curve::rate_latency(r(1), r(0));
        let c = convolve(&s, &l);
        // early: the line is the constraint; each step delays nothing
        assert_eq!(c.eval(r(2)), Finite(r(2)));
        assert_eq!(c.eval(r(4)), Finite(r(4)));
        // the staircase caps at 4 per 10: at t=10, min(10, 4) = 4
        assert_eq!(c.eval(r(10)), Finite(r(4)));
        assert_eq!(c.eval(r(12)), Finite(r(6)));
        assert_eq!(c.eval(r(100)), Finite(r(40)));
    }
}
