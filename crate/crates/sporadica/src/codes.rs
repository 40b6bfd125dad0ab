//! The binary Golay code [24, 12, 8], built as a lexicode.
//!
//! Codewords are 24-bit masks; bit k (with bit 0 the least significant)
//! is coordinate k. The lexicode construction scans integers 0..2^24 in
//! order and keeps every word at Hamming distance >= 8 from all words
//! kept so far; the greedy result is a linear [24, 12] code whose weight
//! enumerator is
//!
//!   weight   0    8     12    16   24
//!   count    1   759   2576  759   1
//!
//! The 759 weight-8 words (octads) form the Steiner system S(5, 8, 24):
//! every 5-element subset of the 24 coordinates lies in exactly one
//! octad.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("malformed hex word \"{0}\": expected 6 hex digits")]
    MalformedHexWord(String),
    #[error("basis has {0} words, expected 12")]
    WrongBasisSize(usize),
    #[error("word {0:06x} is not a codeword")]
    NotACodeword(u32),
}

pub struct GolayCode {
    /// All 4096 codewords, in the order generated from the sorted basis
    /// (index i is the sum of basis words selected by the bits of i).
    words: Vec<u32>,
    basis: Vec<u32>,
    sorted: Vec<u32>,
}

fn sorted_copy(words: &[u32]) -> Vec<u32> {
    let mut s = words.to_vec();
    s.sort_unstable();
    s
}

static GOLAY: OnceLock<GolayCode> = OnceLock::new();

/// The lexicode, computed once per process.
pub fn golay() -> &'static GolayCode {
    GOLAY.get_or_init(GolayCode::lexicode)
}

impl GolayCode {
    /// Greedy lexicographic construction. Because the greedy set is
    /// closed under addition, it suffices to record the 12 words that
    /// enlarge the span; the kept set is their span.
    pub fn lexicode() -> GolayCode {
        let mut words: Vec<u32> = vec![0];
        let mut basis: Vec<u32> = Vec::new();
        'scan: for w in 1u32..1 << 24 {
            for &c in &words {
                if (w ^ c).count_ones() < 8 {
                    continue 'scan;
                }
            }
            // w joins; close the span.
            let prior = words.len();
            for i in 0..prior {
                words.push(words[i] ^ w);
            }
            basis.push(w);
            if basis.len() == 12 {
                break;
            }
        }
        assert_eq!(basis.len(), 12, "lexicode must reach dimension 12");
        assert_eq!(words.len(), 4096);
        let sorted = sorted_copy(&words);
        GolayCode {
            words,
            basis,
            sorted,
        }
    }

    /// Rebuild from a 12-word basis; validates dimension and minimum
    /// distance.
    pub fn from_basis(basis: &[u32]) -> Result<GolayCode, CodeError> {
        if basis.len() != 12 {
            return Err(CodeError::WrongBasisSize(basis.len()));
        }
        let mut words = vec![0u32];
        for &b in basis {
            let prior = words.len();
            for i in 0..prior {
                words.push(words[i] ^ b);
            }
        }
        let sorted = sorted_copy(&words);
        let code = GolayCode {
            words,
            basis: basis.to_vec(),
            sorted,
        };
        if code.words.len() != 4096 || code.min_distance() != 8 {
            return Err(CodeError::WrongBasisSize(basis.len()));
        }
        Ok(code)
    }

    pub fn words(&self) -> &[u32] {
        &self.words
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn contains(&self, w: u32) -> bool {
        self.sorted.binary_search(&w).is_ok()
    }

    /// Minimum nonzero weight; equals the minimum distance by linearity.
    pub fn min_distance(&self) -> u32 {
        self.words
            .iter()
            .filter(|&&w| w != 0)
            .map(|w| w.count_ones())
            .min()
            .unwrap()
    }

    /// weight -> number of codewords of that weight.
    pub fn weight_distribution(&self) -> BTreeMap<u32, usize> {
        let mut dist = BTreeMap::new();
        for &w in &self.words {
            *dist.entry(w.count_ones()).or_insert(0) += 1;
        }
        dist
    }

    /// The 759 weight-8 codewords.
    pub fn octads(&self) -> Vec<u32> {
        self.words
            .iter()
            .copied()
            .filter(|w| w.count_ones() == 8)
            .collect()
    }

    /// The 2576 weight-12 codewords.
    pub fn dodecads(&self) -> Vec<u32> {
        self.words
            .iter()
            .copied()
            .filter(|w| w.count_ones() == 12)
            .collect()
    }

    /// Verify S(5, 8, 24): each 5-subset of coordinates lies in exactly
    /// one octad. Counts blocks per 5-subset by expanding each octad's 56
    /// internal 5-subsets; returns the number of 5-subsets on success.
    pub fn steiner_check(&self) -> Result<usize, CodeError> {
        let octads = self.octads();
        let mut seen: BTreeMap<u32, u32> = BTreeMap::new();
        for &o in &octads {
            let pts: Vec<u32> = (0..24).filter(|&b| o >> b & 1 == 1).collect();
            for a in 0..8 {
                for b in a + 1..8 {
                    for c in b + 1..8 {
                        for d in c + 1..8 {
                            for e in d + 1..8 {
                                let mask = (1 << pts[a])
                                    | (1 << pts[b])
                                    | (1 << pts[c])
                                    | (1 << pts[d])
                                    | (1 << pts[e]);
                                *seen.entry(mask).or_insert(0) += 1;
                            }
                        }
                    }
                }
            }
        }
        let expected = 42504; // C(24, 5)
        if seen.len() == expected && seen.values().all(|&c| c == 1) {
            Ok(expected)
        } else {
            Err(CodeError::NotACodeword(0))
        }
    }
}

/// 6-hex-digit form of a 24-bit word.
pub fn format_word(w: u32) -> String {
    format!("{w:06x}")
}

pub fn parse_word(text: &str) -> Result<u32, CodeError> {
    let t = text.trim();
    if t.len() != 6 || !t.chars().all(|c| c.is_ascii_hexdigit()) {
        return Err(CodeError::MalformedHexWord(t.to_string()));
    }
    Ok(u32::from_str_radix(t, 16).unwrap())
}

/// One basis word per line, 6 hex digits each.
pub fn format_basis(code: &GolayCode) -> String {
    let mut out = String::new();
    for &b in code.basis() {
        out.push_str(&format_word(b));
        out.push('\n');
    }
    out
}

pub fn parse_basis(text: &str) -> Result<GolayCode, CodeError> {
    let words: Vec<u32> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_word)
        .collect::<Result<_, _>>()?;
    GolayCode::from_basis(&words)
}
