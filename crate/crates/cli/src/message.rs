//! Message bit strings. Bits are big-endian within each byte or hex digit.

use std::path::Path;

use qpa_core::protocol::stream_rng;
use rand::Rng;

use crate::error::CliError;

/// Stream id for generated messages; the protocol stages use 1 to 5.
const MESSAGE_STREAM: u64 = 0;

pub fn bits_from_hex(hex: &str) -> Result<Vec<bool>, CliError> {
    let mut bits = Vec::with_capacity(hex.len() * 4);
    for ch in hex.chars() {
        let nibble = ch
            .to_digit(16)
            .ok_or_else(|| CliError::usage(format!("message_hex: '{ch}' is not a hex digit")))?;
        bits.extend((0..4).rev().map(|i| (nibble >> i) & 1 == 1));
    }
    Ok(bits)
}

pub fn bits_from_bytes(bytes: &[u8]) -> Vec<bool> {
    bytes
        .iter()
        .flat_map(|b| (0..8).rev().map(move |i| (b >> i) & 1 == 1))
        .collect()
}

pub fn bits_from_file(path: &Path) -> Result<Vec<bool>, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(bits_from_bytes(&bytes))
}

pub fn random_bits(n: usize, seed: u64) -> Vec<bool> {
    let mut rng = stream_rng(seed, MESSAGE_STREAM);
    (0..n).map(|_| rng.random::<bool>()).collect()
}

/// Lowercase hex, the final digit zero-padded when the length is not a
/// multiple of four.
pub fn bits_to_hex(bits: &[bool]) -> String {
    bits.chunks(4)
        .map(|chunk| {
            let nibble = chunk
                .iter()
                .enumerate()
                .fold(0u32, |acc, (i, b)| acc | ((*b as u32) << (3 - i)));
            char::from_digit(nibble, 16).unwrap_or('0')
        })
        .collect()
}
