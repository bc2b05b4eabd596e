//! Finite-window piece lists and the envelope kernels.
//!
//! Every binary curve operation reduces to the same scheme: unroll the
//! operands over a window that provably contains all the information the
//! result needs, generate candidate pieces, take a pointwise envelope, and
//! reassemble a curve whose tail rule is then verified against the window.
//! This module owns the piece representation and the envelope machinery.
//!
//! A [`Frag`] is either an isolated point or an affine piece on an *open*
//! interval; a [`Frags`] is a sorted, disjoint list of them. Where no piece
//! covers, the described partial function is undefined — the merge
//! operation decides whether "undefined" means `+∞` (a curve that has
//! ended) or "no constraint" (a candidate that simply does not reach
//! there).

use super::{Breakpoint, Curve, CurveError, Tail};
use crate::rat::{Finite, Infinite, Rat};

/// A piece of a partial function: a single point, or an affine segment on
/// the open interval `(a, b)` with value `v0 + slope · (t − a)` as `t ↓ a`.
/// Values are always finite — absence of coverage encodes infinity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Frag {
    Point { t: Rat, v: Rat },
    Seg { a: Rat, b: Rat, v0: Rat, slope: Rat },
}

impl Frag {
    pub fn start(&self) -> Rat {
        match *self {
            Frag::Point { t, .. } => t,
            Frag::Seg { a, .. } => a,
        }
    }

    pub fn end(&self) -> Rat {
        match *self {
            Frag::Point { t, .. } => t,
            Frag::Seg { b, .. } => b,
        }
    }

    /// Restrict a segment to `(lo, hi) ⊆ (a, b)`, re-anchoring its value.
    pub fn clip_seg(self, lo: Rat, hi: Rat) -> Frag {
        match self {
            Frag::Seg { a, b, v0, slope } => {
                debug_assert!(lo >= a && hi <= b && lo < hi);
                Frag::Seg { a: lo, b: hi, v0: v0 + slope * (lo - a), slope }
            }
            Frag::Point { .. } => panic!("clip_seg on a point"),
        }
    }
}

/// How a merge treats positions covered by only one side.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MergeOp {
    /// Pointwise minimum; an uncovered side counts as `+∞` and loses.
    Min,
    /// Pointwise maximum of total functions; an uncovered side is `+∞`
    /// and wins, so the result is uncovered there too.
    MaxAbsentWins,
    /// Upper envelope of partial candidates; an uncovered side imposes
    /// nothing and loses.
    MaxAbsentLoses,
}

impl MergeOp {
    fn is_min(self) -> bool {
        matches!(self, MergeOp::Min)
    }
}

/// Sorted, pairwise-disjoint pieces of a partial function.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Frags(pub Vec<Frag>);

impl Frags {
    /// Unroll `c` into pieces covering `[0, w]`, minus any infinite region.
    /// Emits a point at every (unrolled) breakpoint time and at `w`.
    pub fn from_curve(c: &Curve, w: Rat) -> Frags {
        assert!(!w.is_negative());
        if c.is_epsilon() {
            return Frags(Vec::new());
        }
        let mut times: Vec<Rat> = Vec::new();
        for b in c.breakpoints() {
            if b.t <= w {
                times.push(b.t);
            }
        }
        if let Tail::Periodic { start, d, .. } = c.tail() {
            let pattern: Vec<Rat> =
                c.breakpoints().iter().map(|b| b.t).filter(|&t| t >= start).collect();
            let mut offset = d;
            'unroll: loop {
                for &t in &pattern {
                    let t = t + offset;
                    if t > w {
                        break 'unroll;
                    }
                    times.push(t);
                }
                offset += d;
            }
        }
        if *times.last().unwrap() < w {
            times.push(w);
        }
        let mut out = Vec::with_capacity(times.len() * 2);
        for (i, &t) in times.iter().enumerate() {
            let v = match c.eval(t) {
                Finite(v) => v,
                Infinite => break,
            };
            out.push(Frag::Point { t, v });
            let next = match times.get(i + 1) {
                Some(&n) => n,
                None => break,
            };
            let rv = match c.eval_right(t) {
                Finite(v) => v,
                Infinite => break,
            };
            let end = match c.eval(next) {
                Finite(v) => v,
                // the infinite region starts right after a breakpoint, and
                // every breakpoint is an event time, so a finite right
                // limit at `t` guarantees a finite value at `next`
                Infinite => unreachable!("infinite onset between event times"),
            };
            if next > t {
                let slope = (end - rv) / (next - t);
                out.push(Frag::Seg { a: t, b: next, v0: rv, slope });
            }
        }
        Frags(out)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at `t`, if covered.
    pub fn value_at(&self, t: Rat) -> Option<Rat> {
        // binary search for the last frag starting at or before t; a Point at
        // t and a Seg opening at t share a start, so step back over the Seg
        let idx = self.0.partition_point(|f| f.start() <= t);
        for f in self.0[..idx].iter().rev() {
            match *f {
                Frag::Point { t: pt, v } => return if pt == t { Some(v) } else { None },
                Frag::Seg { a, b, v0, slope } => {
                    if a < t {
                        return if t < b { Some(v0 + slope * (t - a)) } else { None };
                    }
                    // a == t: open on the left, keep looking
                }
            }
        }
        None
    }

    /// Drop every piece at or beyond `w` and clip segments straddling it.
    pub fn truncate(&mut self, w: Rat) {
        let mut out = Vec::with_capacity(self.0.len());
        for f in self.0.drain(..) {
            match f {
                Frag::Point { t, .. } if t >= w => {}
                Frag::Seg { a, b, .. } if a < w && b > w => out.push(f.clip_seg(a, w)),
                Frag::Seg { a, .. } if a >= w => {}
                other => out.push(other),
            }
        }
        self.0 = out;
    }
}

struct Cursor<'a> {
    frags: &'a [Frag],
    idx: usize,
}

impl<'a> Cursor<'a> {
    fn new(frags: &'a Frags) -> Cursor<'a> {
        Cursor { frags: &frags.0, idx: 0 }
    }

    fn advance_past(&mut self, t: Rat) {
        // nothing with end() <= t can intersect the open interval (t, ·):
        // a Seg ending at t is open there, a Point at t is a single point
        while let Some(f) = self.frags.get(self.idx) {
            if f.end() <= t {
                self.idx += 1;
            } else {
                break;
            }
        }
    }

    /// Value at point `t` (queries must come in increasing order).
    fn at_point(&mut self, t: Rat) -> Option<Rat> {
        while let Some(f) = self.frags.get(self.idx) {
            let gone = match *f {
                Frag::Point { t: pt, .. } => pt < t,
                // a Seg closing exactly at t does not contain t, and the
                // Point carrying the value at t sorts after it
                Frag::Seg { b, .. } => b <= t,
            };
            if gone {
                self.idx += 1;
            } else {
                break;
            }
        }
        match self.frags.get(self.idx) {
            Some(&Frag::Point { t: pt, v }) if pt == t => Some(v),
            Some(&Frag::Seg { a, b, v0, slope }) if a < t && t < b => Some(v0 + slope * (t - a)),
            _ => None,
        }
    }

    /// Affine data on the open unit `(x, y)`: `(value at x⁺, slope)`.
    /// The unit never straddles a piece boundary.
    fn on_interval(&mut self, x: Rat, y: Rat) -> Option<(Rat, Rat)> {
        self.advance_past(x);
        match self.frags.get(self.idx) {
            Some(&Frag::Seg { a, b, v0, slope }) if a <= x && b >= y => {
                Some((v0 + slope * (x - a), slope))
            }
            _ => None,
        }
    }
}

/// Append with collinear coalescing: `…Seg, Point, Seg…` runs that lie on
/// one line collapse into a single segment. Keeps envelope sizes linear
/// through divide-and-conquer rounds.
fn push_frag(out: &mut Vec<Frag>, f: Frag) {
    if let Frag::Seg { a, b, v0, slope } = f {
        debug_assert!(a < b);
        let n = out.len();
        if n >= 2 {
            if let (Frag::Seg { a: a1, b: b1, v0: w0, slope: m1 }, Frag::Point { t, v }) =
                (out[n - 2], out[n - 1])
            {
                if b1 == t
                    && t == a
                    && m1 == slope
                    && w0 + m1 * (b1 - a1) == v
                    && v0 == v
                {
                    out.truncate(n - 2);
                    out.push(Frag::Seg { a: a1, b, v0: w0, slope: m1 });
                    return;
                }
            }
        }
    }
    out.push(f);
}

/// Pointwise merge of two piece lists under `op`.
pub fn merge(a: &Frags, b: &Frags, op: MergeOp) -> Frags {
    if a.is_empty() && b.is_empty() {
        return Frags(Vec::new());
    }
    let mut bounds: Vec<Rat> = Vec::with_capacity(a.0.len() + b.0.len() + 2);
    for f in a.0.iter().chain(b.0.iter()) {
        bounds.push(f.start());
        bounds.push(f.end());
    }
    bounds.sort_unstable();
    bounds.dedup();

    let mut ca = Cursor::new(a);
    let mut cb = Cursor::new(b);
    let mut pa = Cursor::new(a);
    let mut pb = Cursor::new(b);
    let mut out: Vec<Frag> = Vec::new();

    for (i, &t) in bounds.iter().enumerate() {
        let va = pa.at_point(t);
        let vb = pb.at_point(t);
        let pv = match (va, vb, op) {
            (Some(x), Some(y), MergeOp::Min) => Some(x.min(y)),
            (Some(x), Some(y), _) => Some(x.max(y)),
            (one, None, MergeOp::Min) | (None, one, MergeOp::Min) => one,
            (one, None, MergeOp::MaxAbsentLoses) | (None, one, MergeOp::MaxAbsentLoses) => one,
            (_, _, MergeOp::MaxAbsentWins) => None,
        };
        if let Some(v) = pv {
            push_frag(&mut out, Frag::Point { t, v });
        }
        let y = match bounds.get(i + 1) {
            Some(&y) => y,
            None => break,
        };
        let sa = ca.on_interval(t, y);
        let sb = cb.on_interval(t, y);
        match (sa, sb) {
            (None, None) => {}
            (Some(s), None) | (None, Some(s)) => {
                if op != MergeOp::MaxAbsentWins {
                    push_frag(&mut out, Frag::Seg { a: t, b: y, v0: s.0, slope: s.1 });
                }
            }
            (Some((u0, mu)), Some((w0, mw))) => {
                emit_pair(&mut out, t, y, u0, mu, w0, mw, op.is_min());
            }
        }
    }
    Frags(out)
}

/// Emit min or max of two affine pieces on `(x, y)`, splitting at a strict
/// interior crossing.
#[allow(clippy::too_many_arguments)]
fn emit_pair(out: &mut Vec<Frag>, x: Rat, y: Rat, u0: Rat, mu: Rat, w0: Rat, mw: Rat, min: bool) {
    // does the (u) side win at x⁺?
    let pick_first = |du: Rat, dm: Rat| -> bool {
        if !du.is_zero() {
            du.is_negative() == min
        } else if !dm.is_zero() {
            dm.is_negative() == min
        } else {
            true
        }
    };
    let du = u0 - w0;
    let dm = mu - mw;
    let cross = if dm.is_zero() { None } else { Some(x - du / dm) };
    match cross {
        Some(cx) if cx > x && cx < y => {
            let cv = u0 + mu * (cx - x);
            let first_u = pick_first(du, dm);
            let (fv0, fm, sm) = if first_u { (u0, mu, mw) } else { (w0, mw, mu) };
            push_frag(out, Frag::Seg { a: x, b: cx, v0: fv0, slope: fm });
            push_frag(out, Frag::Point { t: cx, v: cv });
            push_frag(out, Frag::Seg { a: cx, b: y, v0: cv, slope: sm });
        }
        _ => {
            // no strict interior crossing: one piece dominates throughout
            let (v0, m) = if pick_first(du, dm) { (u0, mu) } else { (w0, mw) };
            push_frag(out, Frag::Seg { a: x, b: y, v0, slope: m });
        }
    }
}

/// Envelope of many candidate piece lists by balanced pairwise merging.
pub fn envelope(mut cands: Vec<Frags>, op: MergeOp) -> Frags {
    if cands.is_empty() {
        return Frags(Vec::new());
    }
    while cands.len() > 1 {
        let mut next = Vec::with_capacity(cands.len().div_ceil(2));
        let mut it = cands.drain(..);
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(merge(&a, &b, op)),
                None => next.push(a),
            }
        }
        drop(it);
        cands = next;
    }
    cands.pop().unwrap()
}

/// Tail rule a finished envelope is assembled against. The parameters come
/// from the per-operation growth analysis; assembly re-checks them against
/// the computed window and refuses to extrapolate anything it cannot see.
#[derive(Clone, Copy, Debug)]
pub enum TailPlan {
    /// The function leaves the finite range strictly inside the window.
    Infinite,
    /// Constant from `from` on (window extends beyond `from`).
    Constant { from: Rat },
    /// Repeats with increment `c` every `d` from `start`; the window shows
    /// at least two full periods past `start`.
    Periodic { start: Rat, d: Rat, c: Rat },
}

/// Reassemble an envelope computed on `[0, w]` into a curve.
pub fn assemble(frags: &Frags, w: Rat, plan: TailPlan) -> Result<Curve, CurveError> {
    if frags.is_empty() {
        return match plan {
            TailPlan::Infinite => Ok(Curve::epsilon()),
            _ => Err(CurveError::TailMismatch("empty envelope with a finite tail plan".into())),
        };
    }
    // piece list -> breakpoints; enforce point/segment alternation
    let mut bps: Vec<Breakpoint> = Vec::new();
    let mut expect_at: Option<Rat> = Some(Rat::ZERO); // next coverage must start here, with a Point
    for f in &frags.0 {
        match *f {
            Frag::Point { t, v } => {
                match expect_at {
                    Some(x) if x == t => {}
                    _ => return Err(CurveError::CoverageGap(t)),
                }
                bps.push(Breakpoint { t, v: Finite(v), rv: Infinite, slope: Rat::ZERO });
                expect_at = None; // a segment may follow, or the list may end
            }
            Frag::Seg { a, b, v0, slope } => {
                if expect_at.is_some() {
                    return Err(CurveError::CoverageGap(a));
                }
                let last = bps.last_mut().ok_or(CurveError::CoverageGap(a))?;
                if last.t != a {
                    return Err(CurveError::CoverageGap(a));
                }
                last.rv = Finite(v0);
                last.slope = slope;
                expect_at = Some(b);
            }
        }
    }
    if let Some(x) = expect_at {
        // a dangling open segment would make the function finite with no
        // left-continuous closure at its right end
        return Err(CurveError::CoverageGap(x));
    }

    match plan {
        TailPlan::Infinite => {
            let last = bps.last().unwrap();
            if last.t >= w {
                return Err(CurveError::TailMismatch(
                    "window too small to witness the infinite tail".into(),
                ));
            }
            Curve::from_parts(bps, Tail::Infinite)
        }
        TailPlan::Constant { from } => {
            if frags.0.last().unwrap().end() != w || from >= w {
                return Err(CurveError::TailMismatch(
                    "window too small to witness the constant tail".into(),
                ));
            }
            // locate the start of the flat suffix; it may open with a jump
            // up to the final level, so only rv and slope matter
            let mut i = bps.len() - 1;
            let level = bps[i].v;
            while i > 0 {
                let p = bps[i - 1];
                if p.slope.is_zero() && p.rv == level {
                    i -= 1;
                } else {
                    break;
                }
            }
            if bps[i].t > from {
                return Err(CurveError::TailMismatch(format!(
                    "expected constant from {from}, flat only from {}",
                    bps[i].t
                )));
            }
            bps.truncate(i + 1);
            let last = bps.last_mut().unwrap();
            last.rv = level;
            last.slope = Rat::ZERO;
            Curve::from_parts(bps, Tail::Constant)
        }
        TailPlan::Periodic { start, d, c } => {
            if w < start + d + d || frags.0.last().unwrap().end() != w {
                return Err(CurveError::TailMismatch(
                    "window too small to verify the periodic tail".into(),
                ));
            }
            ensure_bp(&mut bps, start)?;
            ensure_bp(&mut bps, start + d)?;
            ensure_bp(&mut bps, start + d + d)?;
            let p1: Vec<&Breakpoint> =
                bps.iter().filter(|b| b.t >= start && b.t < start + d).collect();
            let p2: Vec<&Breakpoint> =
                bps.iter().filter(|b| b.t >= start + d && b.t < start + d + d).collect();
            if p1.len() != p2.len() {
                return Err(CurveError::PeriodicityViolated(format!(
                    "{} breakpoints in the first period, {} in the second",
                    p1.len(),
                    p2.len()
                )));
            }
            for (x, y) in p1.iter().zip(p2.iter()) {
                let ok = y.t == x.t + d && y.v == x.v + c && y.rv == x.rv + c && y.slope == x.slope;
                if !ok {
                    return Err(CurveError::PeriodicityViolated(format!(
                        "pattern at t = {} does not repeat at t = {}",
                        x.t, y.t
                    )));
                }
            }
            bps.retain(|b| b.t < start + d);
            Curve::from_parts(bps, Tail::Periodic { start, d, c })
        }
    }
}

/// Insert a breakpoint at `t` (splitting the segment it falls in) if one
/// is not already present. Fails inside uncovered territory.
fn ensure_bp(bps: &mut Vec<Breakpoint>, t: Rat) -> Result<(), CurveError> {
    let idx = bps.partition_point(|b| b.t <= t);
    if idx > 0 && bps[idx - 1].t == t {
        return Ok(());
    }
    if idx == 0 {
        return Err(CurveError::CoverageGap(t));
    }
    let p = bps[idx - 1];
    let v = match p.rv {
        Finite(rv) => rv + p.slope * (t - p.t),
        Infinite => return Err(CurveError::CoverageGap(t)),
    };
    bps.insert(idx, Breakpoint { t, v: Finite(v), rv: Finite(v), slope: p.slope });
    Ok(())
}

/// `a ≤ b`, and `a = b`, decided on a window. Uncovered means `+∞`.
pub(crate) fn sweep_le(a: &Frags, b: &Frags) -> bool {
    sweep(a, b, false)
}

pub(crate) fn sweep_eq(a: &Frags, b: &Frags) -> bool {
    sweep(a, b, true)
}

fn sweep(a: &Frags, b: &Frags, eq: bool) -> bool {
    let mut bounds: Vec<Rat> = Vec::with_capacity(a.0.len() + b.0.len());
    for f in a.0.iter().chain(b.0.iter()) {
        bounds.push(f.start());
        bounds.push(f.end());
    }
    bounds.sort_unstable();
    bounds.dedup();
    let mut ca = Cursor::new(a);
    let mut cb = Cursor::new(b);
    let mut pa = Cursor::new(a);
    let mut pb = Cursor::new(b);
    for (i, &t) in bounds.iter().enumerate() {
        let va = pa.at_point(t);
        let vb = pb.at_point(t);
        let ok = match (va, vb) {
            (Some(x), Some(y)) => {
                if eq {
                    x == y
                } else {
                    x <= y
                }
            }
            (None, None) => true,
            (Some(_), None) => !eq, // finite ≤ ∞
            (None, Some(_)) => false,
        };
        if !ok {
            return false;
        }
        if let Some(&y) = bounds.get(i + 1) {
            let sa = ca.on_interval(t, y);
            let sb = cb.on_interval(t, y);
            let ok = match (sa, sb) {
                (Some((u0, mu)), Some((w0, mw))) => {
                    let len = y - t;
                    let (ue, we) = (u0 + mu * len, w0 + mw * len);
                    if eq {
                        u0 == w0 && mu == mw
                    } else {
                        u0 <= w0 && ue <= we
                    }
                }
                (None, None) => true,
                (Some(_), None) => !eq,
                (None, Some(_)) => false,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::Value;

    fn r(n: i128) -> Rat {
        Rat::int(n)
    }

    #[test]
    fn unroll_staircase() {
        let s = Curve::staircase(r(2), r(5));
        let f = Frags::from_curve(&s, r(12));
        // points at 0,5,10,12 with flats between
        assert_eq!(f.value_at(Rat::ZERO), Some(Rat::ZERO));
        assert_eq!(f.value_at(r(3)), Some(r(2)));
        assert_eq!(f.value_at(r(5)), Some(r(2)));
        assert_eq!(f.value_at(r(6)), Some(r(4)));
        assert_eq!(f.value_at(r(12)), Some(r(6)));
        assert_eq!(f.value_at(Rat::new(121, 10)), None); // beyond window
    }

    #[test]
    fn unroll_stops_at_infinity() {
        let g = Curve::gain_shift(r(3), r(4));
        let f = Frags::from_curve(&g, r(10));
        assert_eq!(f.value_at(r(4)), Some(r(3)));
        assert_eq!(f.value_at(r(5)), None);
        let e = Frags::from_curve(&Curve::epsilon(), r(10));
        assert!(e.is_empty());
    }

    #[test]
    fn merge_min_with_crossing() {
        // line of slope 2 vs constant 4: cross at t = 2
        let a = Frags::from_curve(&Curve::affine(Rat::ZERO, r(2)), r(10));
        let b = Frags::from_curve(&Curve::constant(r(4)), r(10));
        let m = merge(&a, &b, MergeOp::Min);
        assert_eq!(m.value_at(r(1)), Some(r(2)));
        assert_eq!(m.value_at(r(2)), Some(r(4)));
        assert_eq!(m.value_at(r(7)), Some(r(4)));
        let m = merge(&a, &b, MergeOp::MaxAbsentWins);
        assert_eq!(m.value_at(r(1)), Some(r(4)));
        assert_eq!(m.value_at(r(7)), Some(r(14)));
    }

    #[test]
    fn absent_policies() {
        let a = Frags::from_curve(&Curve::gain_shift(r(1), r(2)), r(10));
        let b = Frags::from_curve(&Curve::constant(r(5)), r(10));
        let min = merge(&a, &b, MergeOp::Min);
        assert_eq!(min.value_at(r(1)), Some(r(1)));
        assert_eq!(min.value_at(r(8)), Some(r(5))); // a is gone, b persists
        let mw = merge(&a, &b, MergeOp::MaxAbsentWins);
        assert_eq!(mw.value_at(r(1)), Some(r(5)));
        assert_eq!(mw.value_at(r(8)), None); // a is ∞ there
        let ml = merge(&a, &b, MergeOp::MaxAbsentLoses);
        assert_eq!(ml.value_at(r(8)), Some(r(5)));
    }

    #[test]
    fn roundtrip_through_assembly() {
        for c in [
            Curve::staircase(Rat::new(16, 5), r(10)),
            Curve::rate_latency(Rat::new(32, 100), r(10)),
            Curve::token_bucket(r(5), Rat::new(1, 5)),
        ] {
            let (start, d, cc) = match c.tail() {
                Tail::Periodic { start, d, c } => (start, d, c),
                _ => unreachable!(),
            };
            let w = start + d * r(3);
            let f = Frags::from_curve(&c, w);
            let back = assemble(&f, w, TailPlan::Periodic { start, d, c: cc }).unwrap();
            assert_eq!(back, c, "{c:?}");
        }
        let e = Curve::conv_identity();
        let f = Frags::from_curve(&e, r(5));
        assert_eq!(assemble(&f, r(5), TailPlan::Infinite).unwrap(), e);
        let k = Curve::constant(r(7));
        let f = Frags::from_curve(&k, r(5));
        assert_eq!(assemble(&f, r(5), TailPlan::Constant { from: r(1) }).unwrap(), k);
    }

    #[test]
    fn assembly_rejects_gaps_and_false_periods() {
        let frags = Frags(vec![
            Frag::Point { t: Rat::ZERO, v: Rat::ZERO },
            Frag::Point { t: r(2), v: r(1) },
            Frag::Seg { a: r(2), b: r(5), v0: r(1), slope: Rat::ZERO },
            Frag::Point { t: r(5), v: r(1) },
        ]);
        assert!(matches!(
            assemble(&frags, r(5), TailPlan::Constant { from: r(2) }),
            Err(CurveError::CoverageGap(_))
        ));
        // a ramp is not periodic with increment 1 per 1 unless slope is 1
        let ramp = Frags::from_curve(&Curve::affine(Rat::ZERO, r(2)), r(6));
        assert!(matches!(
            assemble(&ramp, r(6), TailPlan::Periodic { start: Rat::ZERO, d: Rat::ONE, c: Rat::ONE }),
            Err(CurveError::PeriodicityViolated(_))
        ));
    }

    #[test]
    fn sweep_comparisons() {
        let w = r(30);
        let a = Frags::from_curve(&Curve::rate_latency(r(1), r(2)), w);
        let b = Frags::from_curve(&Curve::affine(Rat::ZERO, r(1)), w);
        assert!(sweep_le(&a, &b));
        assert!(!sweep_le(&b, &a));
        assert!(!sweep_eq(&a, &b));
        assert!(sweep_eq(&a, &a));
        // identical functions written with different breakpoints
        let c1 = Curve::affine(Rat::ZERO, r(3));
        let c2 = Curve::from_parts(
            vec![
                Breakpoint { t: Rat::ZERO, v: Value::zero(), rv: Value::zero(), slope: r(3) },
                Breakpoint { t: r(4), v: Finite(r(12)), rv: Finite(r(12)), slope: r(3) },
            ],
            Tail::Periodic { start: r(4), d: r(2), c: r(6) },
        )
        .unwrap();
        assert!(sweep_eq(&Frags::from_curve(&c1, w), &Frags::from_curve(&c2, w)));
    }
}
