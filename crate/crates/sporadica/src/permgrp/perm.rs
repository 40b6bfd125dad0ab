//! Permutations of {0..degree-1} and the textual cycle format.
//!
//! Points are 0-based internally and 1-based in all text I/O. The product
//! `a.mul(&b)` is function composition: apply `b` first, then `a`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("point {0} out of range for degree {1}")]
    PointOutOfRange(usize, usize),
    #[error("malformed cycle syntax: {0}")]
    MalformedSyntax(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= u16::MAX as usize + 1);
        Permutation {
            images: (0..degree as u32).map(|i| i as u16).collect(),
        }
    }

    /// From an explicit image sequence; must be a bijection.
    pub fn from_images(images: Vec<u16>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let img = img as usize;
            if img >= n {
                return Err(PermError::PointOutOfRange(img + 1, n));
            }
            if seen[img] {
                return Err(PermError::RepeatedPoint(img + 1));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Function composition: (self * rhs)(x) = self(rhs(x)).
    pub fn mul(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation {
            images: rhs.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// self * rhs * self^{-1}.
    pub fn conjugate(&self, rhs: &Permutation) -> Permutation {
        self.mul(rhs).mul(&self.inverse())
    }

    /// [self, rhs] = self * rhs * self^{-1} * rhs^{-1}.
    pub fn commutator(&self, rhs: &Permutation) -> Permutation {
        self.mul(rhs).mul(&self.inverse()).mul(&rhs.inverse())
    }

    /// Order as lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        for cycle in self.cycles() {
            order = num_integer::lcm(order, cycle.len() as u64);
        }
        order
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i != x as usize)
            .map(|(i, _)| i)
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Restrict to an invariant point subset, relabelling by position in
    /// `points`. Panics if the subset is not invariant.
    pub fn restrict(&self, points: &[usize]) -> Permutation {
        let mut index = vec![usize::MAX; self.degree()];
        for (k, &p) in points.iter().enumerate() {
            index[p] = k;
        }
        let images = points
            .iter()
            .map(|&p| {
                let img = index[self.apply(p)];
                assert!(img != usize::MAX, "point set not invariant");
                img as u16
            })
            .collect();
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_cycles(self))
    }
}

/// Cycle notation with 1-based points; identity renders as "()".
pub fn format_cycles(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    cycles
        .iter()
        .map(|c| {
            let body = c
                .iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ");
            format!("({body})")
        })
        .collect()
}

/// Parse 1-based cycle notation, e.g. "(1 2)(3 4 5)". Unmentioned points
/// are fixed; empty input (or "()") is the identity.
pub fn parse_perm(text: &str, degree: usize) -> Result<Permutation, PermError> {
    let mut images: Vec<u16> = (0..degree as u32).map(|i| i as u16).collect();
    let mut mentioned = vec![false; degree];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(open) = rest.strip_prefix('(') else {
            return Err(PermError::MalformedSyntax(format!(
                "expected '(' at \"{rest}\""
            )));
        };
        let Some(close) = open.find(')') else {
            return Err(PermError::MalformedSyntax("unclosed cycle".to_string()));
        };
        let body = &open[..close];
        let mut cycle = Vec::new();
        for token in body.split([' ', ',']).filter(|t| !t.is_empty()) {
            let point: usize = token
                .parse()
                .map_err(|_| PermError::MalformedSyntax(format!("bad point \"{token}\"")))?;
            if point == 0 || point > degree {
                return Err(PermError::PointOutOfRange(point, degree));
            }
            let point = point - 1;
            if mentioned[point] {
                return Err(PermError::RepeatedPoint(point + 1));
            }
            mentioned[point] = true;
            cycle.push(point);
        }
        for (k, &pt) in cycle.iter().enumerate() {
            images[pt] = cycle[(k + 1) % cycle.len()] as u16;
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(Permutation { images })
}

/// Generator file format: first line "degree N", then one permutation per
/// line in cycle notation. Blank lines and '#' comments are skipped.
pub fn parse_gen_file(text: &str) -> Result<(usize, Vec<Permutation>), PermError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| PermError::MalformedSyntax("empty generator file".into()))?;
    let degree: usize = header
        .strip_prefix("degree")
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| PermError::MalformedSyntax(format!("bad header \"{header}\"")))?;
    let mut gens = Vec::new();
    for line in lines {
        gens.push(parse_perm(line, degree)?);
    }
    Ok((degree, gens))
}

pub fn format_gen_file(degree: usize, gens: &[Permutation]) -> String {
    let mut out = format!("degree {degree}\n");
    for g in gens {
        out.push_str(&format_cycles(g));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let p = parse_perm("(1 2)(3 4 5)", 5).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 4, 2]);
    }

    #[test]
    fn parse_identity() {
        assert!(parse_perm("", 4).unwrap().is_identity());
        assert!(parse_perm("()", 4).unwrap().is_identity());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_perm("(1 1 2)", 3).unwrap_err(),
            PermError::RepeatedPoint(1)
        );
        assert_eq!(
            parse_perm("(1 9)", 3).unwrap_err(),
            PermError::PointOutOfRange(9, 3)
        );
        assert!(matches!(
            parse_perm("(1 2", 3).unwrap_err(),
            PermError::MalformedSyntax(_)
        ));
    }

    #[test]
    fn compose_and_invert() {
        let a = parse_perm("(1 2 3)", 4).unwrap();
        let b = parse_perm("(3 4)", 4).unwrap();
        // (a*b)(3) = a(b(3)) = a(4) = 4 in 1-based terms.
        let ab = a.mul(&b);
        assert_eq!(ab.apply(2), 3);
        assert!(a.mul(&a.inverse()).is_identity());
        assert_eq!(a.order(), 3);
        assert_eq!(ab.order(), 4);
    }

    #[test]
    fn round_trip_format() {
        for text in ["(1 2)(3 4 5)", "(2 7)(3 5 6)", "()"] {
            let p = parse_perm(text, 7).unwrap();
            let q = parse_perm(&format_cycles(&p), 7).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn gen_file_round_trip() {
        let text = "degree 5\n(1 2)\n(1 2 3 4 5)\n";
        let (deg, gens) = parse_gen_file(text).unwrap();
        assert_eq!(deg, 5);
        assert_eq!(gens.len(), 2);
        assert_eq!(format_gen_file(deg, &gens), text);
    }
}
