//! Tour of the exact curve algebra: build envelopes, combine them with the
//! min-plus operators, and read off worst-case numbers.
//!
//! Run with `cargo run --example curve_algebra`.

use roadcalc::curve::{convolve, deconvolve, equiv, hdev, minimum, sub_additive_closure};
use roadcalc::{Curve, Finite, Rat};

fn main() {
    // An arrival envelope (at most 5 vehicles at once, 0.2 vehicles per
    // second in the long run) and a service floor (nothing guaranteed for
    // 10 s, then at least 0.32 vehicles per second).
    let alpha = Curve::token_bucket(Rat::int(5), Rat::new(1, 5));
    let beta = Curve::rate_latency(Rat::new(8, 25), Rat::int(10));
    println!("arrivals bounded by: {alpha}");
    println!("service floor:       {beta}");

    // The worst time a vehicle can spend in the section is the largest
    // horizontal gap between the two curves.
    let delay = hdev(&alpha, &beta);
    let Finite(delay) = delay else {
        unreachable!("the floor's long-run rate exceeds the arrival rate")
    };
    println!("worst-case delay:    {delay} s = {} s", delay.display_decimal());

    // What leaves the section is again bounded: deconvolution inflates the
    // burst by whatever can pile up while the server is allowed to idle.
    let departures = deconvolve(&alpha, &beta).expect("service floor is nonempty");
    println!("departure envelope:  {departures}");

    // Sections in sequence compose by convolution: latencies add and the
    // slower rate wins.
    let beta2 = Curve::rate_latency(Rat::new(1, 2), Rat::int(4));
    let tandem = convolve(&beta, &beta2);
    assert!(equiv(&tandem, &Curve::rate_latency(Rat::new(8, 25), Rat::int(14))));
    println!("two-section floor:   {tandem}");

    // A gate that releases at most 2 vehicles per 5-second cycle: the
    // single-cycle description closes into the periodic staircase.
    let one_cycle = Curve::gain_shift(Rat::int(2), Rat::int(5));
    let gate = sub_additive_closure(&one_cycle).expect("closure exists");
    assert!(equiv(&gate, &Curve::staircase(Rat::int(2), Rat::int(5))));
    println!("gate throughput:     {gate}");

    // Mixing the gate with a free-flow line: short intervals ride the
    // line, long ones are paced by the cheap repeating release.
    let mixed = minimum(&one_cycle, &Curve::affine(Rat::ZERO, Rat::ONE));
    let paced = sub_additive_closure(&mixed).expect("closure exists");
    println!("line through gate:   {paced}");
}
