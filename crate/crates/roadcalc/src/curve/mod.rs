//! Piecewise-affine curves over exact rationals.
//!
//! A [`Curve`] is a nondecreasing function `f : [0, ∞) → ℚ ∪ {+∞}` written
//! as a finite list of breakpoints plus a tail rule. The class is closed
//! under pointwise minimum and maximum, min-plus convolution and
//! deconvolution, and sub-additive closure, so every object the toolkit
//! manipulates (cumulative flows, arrival envelopes, service guarantees)
//! stays in it.
//!
//! # Canonical form
//!
//! * Breakpoint times are strictly increasing and start at `t = 0`.
//! * `f` is left-continuous wherever it is finite: the value stored at a
//!   breakpoint equals the limit from the left, and an upward jump at `t`
//!   is expressed through the right limit `rv ≥ v`. This convention makes
//!   sampled cross-checks exact: a grid that hits every breakpoint sees
//!   every value the function takes.
//! * `+∞` can only appear as a final segment. A nondecreasing function
//!   that is infinite anywhere stays infinite afterwards, and
//!   left-continuity forces the infinite region to be open on the left, so
//!   "finite up to and including `t_last`, infinite after" — flagged by
//!   `rv = ∞` on the last breakpoint — is the only shape, apart from the
//!   everywhere-infinite curve [`Curve::epsilon`].
//! * The tail is one of: infinite as above; constant; or eventually
//!   periodic — `f(t + d) = f(t) + c` for all `t ≥ start`, with the
//!   breakpoints describing one full period `[start, start + d)`.

mod frag;
mod ops;
mod compare;
mod star;

pub use compare::{hdev, hdev_signed, leq, equiv, long_run_rate, lower_pseudo_inverse, tightest_rate_latency_below};
pub use frag::{Frag, Frags, MergeOp};
pub use ops::{convolve, deconvolve, maximum, minimum};
pub use star::sub_additive_closure;

use crate::rat::{Finite, Infinite, Rat, Value};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("curve has no breakpoints")]
    Empty,
    #[error("first breakpoint must be at t = 0, found t = {0}")]
    FirstBreakpoint(Rat),
    #[error("breakpoint times not strictly increasing at t = {0}")]
    Unsorted(Rat),
    #[error("negative slope {slope} at t = {t}: curves must be nondecreasing")]
    NegativeSlope { t: Rat, slope: Rat },
    #[error("right limit below value at t = {0}: curves must be nondecreasing")]
    DownwardJump(Rat),
    #[error("infinite value in the interior at t = {0}")]
    InfiniteInterior(Rat),
    #[error("left limit at t = {at} is {expect}, stored value is {got}")]
    LeftDiscontinuity { at: Rat, expect: Value, got: Value },
    #[error("tail rule inconsistent with breakpoints: {0}")]
    TailMismatch(String),
    #[error("piece list leaves t = {0} uncovered in the interior")]
    CoverageGap(Rat),
    #[error("claimed period does not repeat: {0}")]
    PeriodicityViolated(String),
    #[error("sub-additive closure diverges: curve is negative at t = 0")]
    ClosureDiverges,
    #[error("sub-additive closure failed to certify a fixed point after retries")]
    ClosureBudget,
    #[error("deconvolution by the everywhere-infinite curve")]
    DeconvByEmpty,
}

/// One breakpoint. The function takes value `v` at `t`; immediately to the
/// right it is `rv + slope · (s − t)` until the next breakpoint.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Breakpoint {
    pub t: Rat,
    pub v: Value,
    pub rv: Value,
    pub slope: Rat,
}

impl Breakpoint {
    fn cont(t: Rat, v: Rat, slope: Rat) -> Breakpoint {
        Breakpoint { t, v: Finite(v), rv: Finite(v), slope }
    }
}

/// Behaviour after the last breakpoint segment.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Tail {
    /// `+∞` after the last breakpoint (`rv = ∞` there).
    Infinite,
    /// Constant at the last breakpoint's right value.
    Constant,
    /// `f(t + d) = f(t) + c` for every `t ≥ start`; the breakpoints with
    /// `t ∈ [start, start + d)` spell out one period. `d > 0`, `c > 0`.
    Periodic { start: Rat, d: Rat, c: Rat },
}

#[derive(Clone, PartialEq, Eq)]
pub struct Curve {
    bps: Vec<Breakpoint>,
    tail: Tail,
}

impl Curve {
    /// Validating constructor; normalizes and checks every invariant.
    pub fn from_parts(bps: Vec<Breakpoint>, tail: Tail) -> Result<Curve, CurveError> {
        let mut c = Curve { bps, tail };
        c.normalize()?;
        c.validate()?;
        Ok(c)
    }

    /// The everywhere-infinite curve: absorbing for convolution, neutral
    /// for minimum.
    pub fn epsilon() -> Curve {
        Curve {
            bps: vec![Breakpoint { t: Rat::ZERO, v: Infinite, rv: Infinite, slope: Rat::ZERO }],
            tail: Tail::Infinite,
        }
    }

    /// Neutral element of min-plus convolution: 0 at the origin, `+∞`
    /// after.
    pub fn conv_identity() -> Curve {
        Curve::gain_shift(Rat::ZERO, Rat::ZERO)
    }

    /// Value `gain` on `[0, horizon]`, `+∞` after. Convolving with this
    /// curve shifts a nondecreasing function right by `horizon` and lifts
    /// it by `gain`; these signals are the generators every service-matrix
    /// entry is built from. `gain` may be negative (a vehicle credit).
    pub fn gain_shift(gain: Rat, horizon: Rat) -> Curve {
        assert!(!horizon.is_negative(), "gain_shift with negative horizon");
        let mut bps = vec![Breakpoint::cont(Rat::ZERO, gain, Rat::ZERO)];
        if horizon.is_positive() {
            bps.push(Breakpoint { t: horizon, v: Finite(gain), rv: Infinite, slope: Rat::ZERO });
        } else {
            bps[0].rv = Infinite;
        }
        Curve { bps, tail: Tail::Infinite }
    }

    pub fn constant(v: Rat) -> Curve {
        Curve { bps: vec![Breakpoint::cont(Rat::ZERO, v, Rat::ZERO)], tail: Tail::Constant }
    }

    pub fn zero() -> Curve {
        Curve::constant(Rat::ZERO)
    }

    /// `value + rate · t` everywhere (including `t = 0`).
    pub fn affine(value: Rat, rate: Rat) -> Curve {
        assert!(!rate.is_negative(), "affine curve with negative rate");
        if rate.is_zero() {
            return Curve::constant(value);
        }
        Curve {
            bps: vec![Breakpoint::cont(Rat::ZERO, value, rate)],
            tail: Tail::Periodic { start: Rat::ZERO, d: Rat::ONE, c: rate },
        }
    }

    /// Arrival envelope: at most `burst` vehicles at once and `rate`
    /// vehicles per unit time in the long run. Zero at the origin with a
    /// jump to `burst` just after, so that the envelope of an empty
    /// interval is 0 and conv/closure identities hold exactly; use
    /// [`Curve::affine`] for the variant worth `burst` already at `t = 0`.
    pub fn token_bucket(burst: Rat, rate: Rat) -> Curve {
        assert!(!burst.is_negative(), "token bucket with negative burst");
        if burst.is_zero() {
            return Curve::affine(Rat::ZERO, rate);
        }
        let origin = Breakpoint { t: Rat::ZERO, v: Finite(Rat::ZERO), rv: Finite(burst), slope: rate };
        if rate.is_zero() {
            return Curve { bps: vec![origin], tail: Tail::Constant };
        }
        // the jump at 0 is not part of the repeating pattern, so the
        // periodic rule anchors one unit in
        let anchor = Breakpoint::cont(Rat::ONE, burst + rate, rate);
        Curve {
            bps: vec![origin, anchor],
            tail: Tail::Periodic { start: Rat::ONE, d: Rat::ONE, c: rate },
        }
    }

    /// Service guarantee "nothing for `latency`, then at least `rate`":
    /// `max(0, rate · (t − latency))`.
    pub fn rate_latency(rate: Rat, latency: Rat) -> Curve {
        assert!(!rate.is_negative() && !latency.is_negative(), "rate_latency with negative parameter");
        if rate.is_zero() {
            return Curve::zero();
        }
        if latency.is_zero() {
            return Curve::affine(Rat::ZERO, rate);
        }
        Curve {
            bps: vec![
                Breakpoint::cont(Rat::ZERO, Rat::ZERO, Rat::ZERO),
                Breakpoint::cont(latency, Rat::ZERO, rate),
            ],
            tail: Tail::Periodic { start: latency, d: Rat::ONE, c: rate },
        }
    }

    /// `step · ceil(t / period)`: the cumulative output of a server that
    /// releases `step` vehicles every `period`, starting immediately.
    pub fn staircase(step: Rat, period: Rat) -> Curve {
        assert!(step.is_positive() && period.is_positive(), "staircase needs positive step and period");
        Curve {
            bps: vec![Breakpoint { t: Rat::ZERO, v: Finite(Rat::ZERO), rv: Finite(step), slope: Rat::ZERO }],
            tail: Tail::Periodic { start: Rat::ZERO, d: period, c: step },
        }
    }

    pub fn breakpoints(&self) -> &[Breakpoint] {
        &self.bps
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn is_epsilon(&self) -> bool {
        self.bps[0].v == Infinite
    }

    /// Time of the last breakpoint: past it only the tail rule applies.
    pub fn last_time(&self) -> Rat {
        self.bps.last().unwrap().t
    }

    /// For curves with an infinite tail, the last finite time.
    pub(crate) fn support_end(&self) -> Option<Rat> {
        match self.tail {
            Tail::Infinite => Some(self.last_time()),
            _ => None,
        }
    }

    /// Reduce `t` into the described window; returns the representative
    /// time and the value offset accumulated by whole periods.
    fn reduce(&self, t: Rat) -> (Rat, Rat) {
        if let Tail::Periodic { start, d, c } = self.tail {
            if t >= start + d {
                let k = (t - start).div_floor(d);
                let k_rat = Rat::int(k);
                return (t - k_rat * d, c * k_rat);
            }
        }
        (t, Rat::ZERO)
    }

    fn floor_index(&self, t: Rat) -> usize {
        self.bps.partition_point(|b| b.t <= t) - 1
    }

    /// `f(t)`. Panics on negative `t`: the domain is `[0, ∞)`.
    pub fn eval(&self, t: Rat) -> Value {
        assert!(!t.is_negative(), "curve evaluated at negative time {t}");
        let (t, add) = self.reduce(t);
        let b = self.bps[self.floor_index(t)];
        if b.t == t {
            b.v + add
        } else {
            b.rv + b.slope * (t - b.t) + add
        }
    }

    /// Right limit `f(t+)`.
    pub fn eval_right(&self, t: Rat) -> Value {
        assert!(!t.is_negative(), "curve evaluated at negative time {t}");
        let (t, add) = self.reduce(t);
        let b = self.bps[self.floor_index(t)];
        if b.t == t {
            b.rv + add
        } else {
            b.rv + b.slope * (t - b.t) + add
        }
    }

    /// Drop breakpoints that merely restate the previous segment, and
    /// normalize degenerate tails. Periodic-start breakpoints survive.
    fn normalize(&mut self) -> Result<(), CurveError> {
        if self.bps.is_empty() {
            return Err(CurveError::Empty);
        }
        // A repeating rule that adds nothing per period describes a
        // function that is flat past its start (values may not decrease),
        // so store it in constant form.
        if let Tail::Periodic { start, d, c } = self.tail {
            if !d.is_positive() {
                return Err(CurveError::TailMismatch(format!("period d = {d} must be positive")));
            }
            if c.is_negative() {
                return Err(CurveError::TailMismatch(format!("period increment c = {c} is negative")));
            }
            if c.is_zero() {
                let idx = self
                    .bps
                    .iter()
                    .position(|b| b.t == start)
                    .ok_or_else(|| CurveError::TailMismatch(format!("no breakpoint at period start {start}")))?;
                self.bps.truncate(idx + 1);
                let last = self.bps.last_mut().unwrap();
                if last.v != last.rv {
                    return Err(CurveError::PeriodicityViolated(
                        "zero-increment period with a jump at its start".into(),
                    ));
                }
                last.slope = Rat::ZERO;
                self.tail = Tail::Constant;
            }
        }
        let keep_start = match self.tail {
            Tail::Periodic { start, .. } => Some(start),
            _ => None,
        };
        let mut out: Vec<Breakpoint> = Vec::with_capacity(self.bps.len());
        for b in self.bps.drain(..) {
            if let Some(prev) = out.last() {
                let must_keep = keep_start == Some(b.t);
                if !must_keep
                    && b.v == b.rv
                    && b.slope == prev.slope
                    && prev.rv.is_finite()
                    && b.v == prev.rv + prev.slope * (b.t - prev.t)
                {
                    continue;
                }
            }
            out.push(b);
        }
        self.bps = out;
        Ok(())
    }

    fn validate(&self) -> Result<(), CurveError> {
        let bps = &self.bps;
        if bps.is_empty() {
            return Err(CurveError::Empty);
        }
        if !bps[0].t.is_zero() {
            return Err(CurveError::FirstBreakpoint(bps[0].t));
        }
        if bps[0].v == Infinite {
            // Everywhere-infinite curve: single breakpoint, infinite tail.
            if bps.len() != 1 || bps[0].rv != Infinite || self.tail != Tail::Infinite {
                return Err(CurveError::InfiniteInterior(bps[0].t));
            }
            return Ok(());
        }
        for (i, b) in bps.iter().enumerate() {
            let last = i + 1 == bps.len();
            if b.slope.is_negative() {
                return Err(CurveError::NegativeSlope { t: b.t, slope: b.slope });
            }
            if b.v > b.rv {
                return Err(CurveError::DownwardJump(b.t));
            }
            if !last && (b.v == Infinite || b.rv == Infinite) {
                return Err(CurveError::InfiniteInterior(b.t));
            }
            if i > 0 {
                let p = bps[i - 1];
                if b.t <= p.t {
                    return Err(CurveError::Unsorted(b.t));
                }
                let expect = p.rv + p.slope * (b.t - p.t);
                if expect != b.v {
                    return Err(CurveError::LeftDiscontinuity { at: b.t, expect, got: b.v });
                }
            }
        }
        let last = *bps.last().unwrap();
        match self.tail {
            Tail::Infinite => {
                if last.rv != Infinite {
                    return Err(CurveError::TailMismatch(
                        "infinite tail requires an infinite right limit at the last breakpoint".into(),
                    ));
                }
                if !last.slope.is_zero() {
                    return Err(CurveError::TailMismatch("slope after the infinite jump must be stored as 0".into()));
                }
            }
            Tail::Constant => {
                if last.rv == Infinite {
                    return Err(CurveError::TailMismatch("constant tail with infinite right limit".into()));
                }
                if !last.slope.is_zero() {
                    return Err(CurveError::TailMismatch(format!(
                        "constant tail requires zero final slope, found {}",
                        last.slope
                    )));
                }
            }
            Tail::Periodic { start, d, c } => {
                if last.rv == Infinite {
                    return Err(CurveError::TailMismatch("periodic tail with infinite right limit".into()));
                }
                if !c.is_positive() {
                    return Err(CurveError::TailMismatch("periodic tail normalization missed c <= 0".into()));
                }
                let sb = bps
                    .iter()
                    .find(|b| b.t == start)
                    .ok_or_else(|| CurveError::TailMismatch(format!("no breakpoint at period start {start}")))?;
                if last.t >= start + d {
                    return Err(CurveError::TailMismatch(format!(
                        "breakpoints run past one period: last at {}, period ends {}",
                        last.t,
                        start + d
                    )));
                }
                // Left-continuity across the period seam: the last segment
                // extended to start + d must meet the repeated start value.
                let seam = last.rv + last.slope * (start + d - last.t);
                if seam != sb.v + c {
                    return Err(CurveError::PeriodicityViolated(format!(
                        "pattern ends at {seam} but the next period starts at {}",
                        sb.v + c
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Curve[")?;
        for (i, b) in self.bps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if b.v == b.rv {
                write!(f, "({}; {}; ↗{})", b.t, b.v, b.slope)?;
            } else {
                write!(f, "({}; {}→{}; ↗{})", b.t, b.v, b.rv, b.slope)?;
            }
        }
        match self.tail {
            Tail::Infinite => write!(f, " | inf]"),
            Tail::Constant => write!(f, " | const]"),
            Tail::Periodic { start, d, c } => write!(f, " | +{c} per {d} from {start}]"),
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_epsilon() {
            return write!(f, "infinite everywhere");
        }
        for w in self.bps.windows(2) {
            let (b, n) = (w[0], w[1]);
            if b.v != b.rv {
                write!(f, "f({}) = {}, then ", b.t, b.v)?;
            }
            if b.slope.is_zero() {
                write!(f, "{} on ({}, {}]; ", b.rv, b.t, n.t)?;
            } else {
                write!(f, "{} + {}·(t − {}) on ({}, {}]; ", b.rv, b.slope, b.t, b.t, n.t)?;
            }
        }
        let last = *self.bps.last().unwrap();
        if last.v != last.rv && last.rv != Infinite {
            write!(f, "f({}) = {}, then ", last.t, last.v)?;
        }
        match self.tail {
            Tail::Infinite => {
                if self.bps.len() == 1 {
                    write!(f, "f(0) = {}, ", last.v)?;
                }
                write!(f, "infinite after t = {}", last.t)
            }
            Tail::Constant => write!(f, "constant {} from t = {}", last.rv, last.t),
            Tail::Periodic { start, d, c } => {
                if last.slope.is_zero() {
                    write!(f, "{} past t = {}, ", last.rv, last.t)?;
                } else {
                    write!(f, "{} + {}·(t − {}) past t = {}, ", last.rv, last.slope, last.t, last.t)?;
                }
                write!(f, "repeating with +{c} every {d} from t = {start}")
            }
        }
    }
}

impl Serialize for Curve {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            breakpoints: &'a [Breakpoint],
            tail: Tail,
        }
        Repr { breakpoints: &self.bps, tail: self.tail }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Curve {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Curve, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            breakpoints: Vec<Breakpoint>,
            tail: Tail,
        }
        let r = Repr::deserialize(de)?;
        Curve::from_parts(r.breakpoints, r.tail).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rat {
        Rat::new(n, d)
    }

    fn fin(n: i128, d: i128) -> Value {
        Finite(r(n, d))
    }

    #[test]
    fn gain_shift_eval() {
        let g = Curve::gain_shift(r(32, 10), Rat::int(10));
        assert_eq!(g.eval(Rat::ZERO), fin(32, 10));
        assert_eq!(g.eval(Rat::int(10)), fin(32, 10));
        assert_eq!(g.eval(Rat::int(11)), Infinite);
        assert_eq!(g.eval_right(Rat::int(10)), Infinite);
        assert_eq!(g.eval_right(Rat::int(3)), fin(32, 10));
    }

    #[test]
    fn identity_and_epsilon() {
        let e = Curve::conv_identity();
        assert_eq!(e.eval(Rat::ZERO), Value::zero());
        assert_eq!(e.eval(r(1, 1000)), Infinite);
        let eps = Curve::epsilon();
        assert!(eps.is_epsilon());
        assert_eq!(eps.eval(Rat::ZERO), Infinite);
        assert_eq!(eps.eval(Rat::int(5)), Infinite);
    }

    #[test]
    fn rate_latency_eval() {
        let b = Curve::rate_latency(r(32, 100), Rat::int(10));
        assert_eq!(b.eval(Rat::int(5)), Value::zero());
        assert_eq!(b.eval(Rat::int(10)), Value::zero());
        assert_eq!(b.eval(Rat::int(20)), fin(32, 10));
        assert_eq!(b.eval(Rat::int(110)), Finite(Rat::int(32)));
        // left-continuous, no jumps anywhere
        assert_eq!(b.eval_right(Rat::int(10)), Value::zero());
    }

    #[test]
    fn staircase_eval() {
        // 3.2 vehicles released every 10 seconds
        let s = Curve::staircase(r(16, 5), Rat::int(10));
        assert_eq!(s.eval(Rat::ZERO), Value::zero());
        assert_eq!(s.eval(Rat::int(1)), fin(16, 5));
        assert_eq!(s.eval(Rat::int(10)), fin(16, 5));
        assert_eq!(s.eval_right(Rat::int(10)), fin(32, 5));
        assert_eq!(s.eval(Rat::int(11)), fin(32, 5));
        assert_eq!(s.eval(Rat::int(100)), Finite(Rat::int(32)));
        assert_eq!(s.eval(Rat::int(101)), fin(176, 5));
        assert_eq!(s.eval(r(1995, 10)), Finite(Rat::int(64)));
    }

    #[test]
    fn token_bucket_jumps_to_burst_after_zero() {
        let a = Curve::token_bucket(Rat::int(5), r(1, 5));
        assert_eq!(a.eval(Rat::ZERO), Finite(Rat::ZERO));
        assert_eq!(a.eval_right(Rat::ZERO), Finite(Rat::int(5)));
        assert_eq!(a.eval(r(1, 2)), fin(51, 10));
        assert_eq!(a.eval(Rat::int(10)), Finite(Rat::int(7)));
        let flat = Curve::token_bucket(Rat::int(3), Rat::ZERO);
        assert_eq!(flat.eval(Rat::ZERO), Finite(Rat::ZERO));
        assert_eq!(flat.eval(Rat::int(40)), Finite(Rat::int(3)));
        assert!(equiv(&Curve::token_bucket(Rat::ZERO, r(1, 2)), &Curve::affine(Rat::ZERO, r(1, 2))));
    }

    #[test]
    fn validation_rejects_bad_shapes() {
        // decreasing jump
        let bad = Curve::from_parts(
            vec![Breakpoint { t: Rat::ZERO, v: Finite(Rat::int(2)), rv: Finite(Rat::ONE), slope: Rat::ZERO }],
            Tail::Constant,
        );
        assert!(matches!(bad, Err(CurveError::DownwardJump(_))));
        // left discontinuity
        let bad = Curve::from_parts(
            vec![
                Breakpoint::cont(Rat::ZERO, Rat::ZERO, Rat::ZERO),
                Breakpoint::cont(Rat::int(1), Rat::int(5), Rat::ZERO),
            ],
            Tail::Constant,
        );
        assert!(matches!(bad, Err(CurveError::LeftDiscontinuity { .. })));
        // periodic pattern that does not meet its own next period
        let bad = Curve::from_parts(
            vec![Breakpoint { t: Rat::ZERO, v: Value::zero(), rv: Value::zero(), slope: Rat::ONE }],
            Tail::Periodic { start: Rat::ZERO, d: Rat::int(2), c: Rat::int(5) },
        );
        assert!(matches!(bad, Err(CurveError::PeriodicityViolated(_))));
        // negative slope
        let bad = Curve::from_parts(
            vec![Breakpoint { t: Rat::ZERO, v: Value::zero(), rv: Value::zero(), slope: -Rat::ONE }],
            Tail::Constant,
        );
        assert!(matches!(bad, Err(CurveError::NegativeSlope { .. })));
    }

    #[test]
    fn normalize_merges_collinear_breakpoints() {
        let c = Curve::from_parts(
            vec![
                Breakpoint::cont(Rat::ZERO, Rat::ZERO, Rat::ONE),
                Breakpoint::cont(Rat::int(3), Rat::int(3), Rat::ONE),
                Breakpoint::cont(Rat::int(5), Rat::int(5), Rat::ZERO),
            ],
            Tail::Constant,
        )
        .unwrap();
        assert_eq!(c.breakpoints().len(), 2);
        assert_eq!(c.eval(Rat::int(4)), Finite(Rat::int(4)));
        assert_eq!(c.eval(Rat::int(9)), Finite(Rat::int(5)));
    }

    #[test]
    fn zero_increment_period_becomes_constant() {
        let c = Curve::from_parts(
            vec![Breakpoint::cont(Rat::ZERO, Rat::int(4), Rat::ZERO)],
            Tail::Periodic { start: Rat::ZERO, d: Rat::int(7), c: Rat::ZERO },
        )
        .unwrap();
        assert_eq!(c.tail(), Tail::Constant);
        assert_eq!(c.eval(Rat::int(100)), Finite(Rat::int(4)));
    }

    #[test]
    fn serde_roundtrip() {
        let c = Curve::rate_latency(r(16, 100), Rat::int(40));
        let json = serde_json::to_string(&c).unwrap();
        let back: Curve = serde_json::from_str(&json).unwrap();
        assert_eq!(c, back);
        let bad = r#"{"breakpoints":[{"t":"0","v":"1","rv":"0","slope":"0"}],"tail":{"kind":"constant"}}"#;
        assert!(serde_json::from_str::<Curve>(bad).is_err());
    }

    #[test]
    fn display_is_readable() {
        let s = format!("{}", Curve::staircase(Rat::int(2), Rat::int(5)));
        assert!(s.contains("repeating"), "{s}");
        let s = format!("{}", Curve::conv_identity());
        assert!(s.contains("infinite after t = 0"), "{s}");
    }
}
