//! Peel one contention frame step by step.
//!
//! Four users share a five-slot frame; three of them send three replicas and
//! one sends two. The receiver decodes the lone singleton, cancels its
//! replicas, and keeps going until every collision is resolved.
//!
//! Run with: `cargo run --example decode_walkthrough`

use irsa_aoi::{classify_slots, decode_frame, FrameOccupancy, Transmission};

fn main() {
    let frame = FrameOccupancy::new(
        5,
        vec![
            Transmission { user_id: 1, replica_slots: vec![0, 3, 4] },
            Transmission { user_id: 2, replica_slots: vec![0, 1, 4] },
            Transmission { user_id: 3, replica_slots: vec![1, 2, 3] },
            Transmission { user_id: 4, replica_slots: vec![1, 4] },
        ],
    )
    .expect("valid frame");

    let census = classify_slots(&frame);
    println!(
        "before cancellation: {} idle, {} singleton, {} collided slots",
        census.idle, census.singleton, census.collided
    );

    let outcome = decode_frame(&frame);
    println!("peeling events (round,user,slot; slots numbered from 1):");
    for line in outcome.trace_lines() {
        println!("  {line}");
    }
    println!(
        "decoded {} of {} users, {} collided slots left",
        outcome.decode_order.len(),
        frame.transmissions().len(),
        outcome.residual_collided_slots
    );
}
