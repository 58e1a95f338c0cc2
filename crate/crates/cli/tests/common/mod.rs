//! Shared helpers for the binary-spawning integration tests.

#![allow(dead_code)]

use std::collections::HashMap;
use std::process::{Command, Output};

/// Runs the compiled `rindler` binary with the given arguments.
pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rindler"))
        .args(args)
        .output()
        .expect("binary spawns")
}

pub fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

pub fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

pub fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal termination")
}

/// Parses `name = value` report blocks; lines whose value is not a number
/// (e.g. the units line) are skipped.
pub fn parse_report(stdout: &str) -> HashMap<String, f64> {
    let mut values = HashMap::new();
    for line in stdout.lines() {
        if let Some((name, value)) = line.split_once('=') {
            if let Ok(number) = value.trim().parse::<f64>() {
                values.insert(name.trim().to_string(), number);
            }
        }
    }
    values
}

/// Parses CSV text into a header row and numeric data rows.
pub fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header: Vec<String> = lines
        .next()
        .expect("CSV has a header")
        .split(',')
        .map(|s| s.to_string())
        .collect();
    let rows: Vec<Vec<f64>> = lines
        .map(|line| {
            line.split(',')
                .map(|cell| cell.parse().expect("numeric cell"))
                .collect()
        })
        .collect();
    (header, rows)
}

/// Fixed-seed generator for reproducible pseudo-random test inputs.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn next_signed(&mut self) -> f64 {
        2.0 * ((self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)) - 1.0
    }

    pub fn next_complex(&mut self) -> rindler_core::Complex64 {
        rindler_core::Complex64::new(self.next_signed(), self.next_signed())
    }
}

/// Random dense Hermitian matrix built as (B + B†)/2.
pub fn random_hermitian(dim: usize, rng: &mut SplitMix64) -> rindler_core::density::DensityMatrix {
    let raw: Vec<rindler_core::Complex64> = (0..dim * dim).map(|_| rng.next_complex()).collect();
    let mut entries = vec![rindler_core::Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            entries[i * dim + j] = (raw[i * dim + j] + raw[j * dim + i].conj()) * 0.5;
        }
    }
    rindler_core::density::DensityMatrix::from_entries(vec![dim], entries).expect("square buffer")
}
