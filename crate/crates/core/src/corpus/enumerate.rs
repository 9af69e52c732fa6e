//! Exhaustive generation of labeled bounded lattices.
//!
//! For a size `n` the bottom is index `0`, the top is index `n - 1`, and the
//! `m = n - 2` middle elements are labeled `a`, `b`, ... in index order.
//! Labeled posets on the middle elements are grown one element at a time:
//! element `k` is attached with a down-set `D` (an order ideal of the first
//! `k` elements) and an up-set `U` (an order filter) such that `D ∩ U = ∅`
//! and every member of `D` already lies below every member of `U`. Each
//! labeled poset arises from exactly one sequence of choices. Candidates at
//! each step are ordered by `D`'s bitmask, then `U`'s, and the stream is the
//! depth-first order of those choices, filtered down to the posets that
//! become lattices once bounded.

use crate::lattice::Lattice;
use crate::set::ElementSet;

use super::CorpusError;

/// Largest size enumerated without an explicit override.
pub const SOFT_SIZE_CAP: usize = 9;

/// Label of index `i` in an `n`-element generated lattice.
pub fn generated_label(i: usize, n: usize) -> String {
    if i == 0 {
        "0".to_string()
    } else if i == n - 1 {
        "1".to_string()
    } else if n - 2 <= 26 {
        ((b'a' + (i - 1) as u8) as char).to_string()
    } else {
        format!("e{}", i - 1)
    }
}

/// Builds the bounded lattice whose middle element `j` sits strictly above
/// the members of `below[j]`; `None` if the bounded poset is not a lattice.
pub fn bounded_from_middle(name: String, below: &[u64]) -> Option<Lattice> {
    let m = below.len();
    let n = m + 2;
    let top = ElementSet::singleton(n - 1);
    let mut up = vec![ElementSet::EMPTY; n];
    up[0] = ElementSet::full(n);
    up[n - 1] = top;
    for i in 0..m {
        let mut row = top.with(i + 1);
        for (j, &b) in below.iter().enumerate() {
            if b >> i & 1 == 1 {
                row.insert(j + 1);
            }
        }
        up[i + 1] = row;
    }
    if !has_all_joins(&up) {
        return None;
    }
    let labels = (0..n).map(|i| generated_label(i, n)).collect();
    Lattice::from_order(name, labels, up).ok()
}

/// In a finite bounded poset, every pair having a least upper bound is
/// enough for a lattice.
fn has_all_joins(up: &[ElementSet]) -> bool {
    let n = up.len();
    for x in 1..n - 1 {
        for y in x + 1..n - 1 {
            let upper = up[x].intersection(up[y]);
            if !upper.iter().any(|z| upper.is_subset(up[z])) {
                return false;
            }
        }
    }
    true
}

struct Frame {
    candidates: Vec<(u64, u64)>,
    next: usize,
}

/// Deterministic stream of every labeled bounded lattice of one size.
pub struct LatticeStream {
    n: usize,
    m: usize,
    below: Vec<u64>,
    frames: Vec<Frame>,
    started: bool,
    exhausted: bool,
    emitted: usize,
}

impl LatticeStream {
    pub fn new(n: usize, allow_large: bool) -> Result<Self, CorpusError> {
        if n < 2 {
            return Err(CorpusError::SizeTooSmall(n));
        }
        if n > SOFT_SIZE_CAP && !allow_large {
            return Err(CorpusError::SizeCapExceeded {
                requested: n,
                cap: SOFT_SIZE_CAP,
            });
        }
        if n > crate::set::MAX_ELEMENTS {
            return Err(CorpusError::SizeCapExceeded {
                requested: n,
                cap: crate::set::MAX_ELEMENTS,
            });
        }
        Ok(LatticeStream {
            n,
            m: n - 2,
            below: Vec::with_capacity(n - 2),
            frames: Vec::with_capacity(n - 2),
            started: false,
            exhausted: false,
            emitted: 0,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    fn candidates(&self) -> Vec<(u64, u64)> {
        let k = self.below.len();
        let mut above = vec![0u64; k];
        for (j, &b) in self.below.iter().enumerate() {
            for (i, row) in above.iter_mut().enumerate() {
                if b >> i & 1 == 1 {
                    *row |= 1 << j;
                }
            }
        }
        let ideals: Vec<u64> = (0..1u64 << k)
            .filter(|&d| (0..k).all(|i| d >> i & 1 == 0 || self.below[i] & !d == 0))
            .collect();
        let filters: Vec<u64> = (0..1u64 << k)
            .filter(|&u| (0..k).all(|i| u >> i & 1 == 0 || above[i] & !u == 0))
            .collect();
        let mut out = Vec::new();
        for &d in &ideals {
            for &u in &filters {
                if d & u != 0 {
                    continue;
                }
                let consistent = (0..k)
                    .filter(|&j| u >> j & 1 == 1)
                    .all(|j| d & !self.below[j] == 0);
                if consistent {
                    out.push((d, u));
                }
            }
        }
        out
    }

    fn apply(&mut self, depth: usize) {
        let (d, u) = {
            let f = &self.frames[depth];
            f.candidates[f.next]
        };
        self.below.truncate(depth);
        for (j, b) in self.below.iter_mut().enumerate() {
            *b &= !(1 << depth);
            if u >> j & 1 == 1 {
                *b |= 1 << depth;
            }
        }
        self.below.push(d);
    }

    fn descend(&mut self) {
        while self.below.len() < self.m {
            let candidates = self.candidates();
            self.frames.push(Frame {
                candidates,
                next: 0,
            });
            let depth = self.frames.len() - 1;
            self.apply(depth);
        }
    }

    /// Moves to the next labeled poset; false once all are visited.
    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.descend();
            return true;
        }
        while let Some(frame) = self.frames.last_mut() {
            frame.next += 1;
            if frame.next < frame.candidates.len() {
                let depth = self.frames.len() - 1;
                self.apply(depth);
                self.descend();
                return true;
            }
            self.frames.pop();
            let depth = self.frames.len();
            self.below.truncate(depth);
            for b in self.below.iter_mut() {
                *b &= !(1 << depth);
            }
        }
        false
    }
}

impl Iterator for LatticeStream {
    type Item = Lattice;

    fn next(&mut self) -> Option<Lattice> {
        while !self.exhausted {
            if !self.advance() {
                self.exhausted = true;
                break;
            }
            let name = format!("n{}-{}", self.n, self.emitted);
            if let Some(l) = bounded_from_middle(name, &self.below) {
                self.emitted += 1;
                return Some(l);
            }
        }
        None
    }
}

/// Every labeled bounded lattice on `n` elements, with the soft size cap.
pub fn enumerate_lattices(n: usize) -> Result<LatticeStream, CorpusError> {
    LatticeStream::new(n, false)
}

/// Streams of sizes `2..=n_max`, concatenated in size order.
pub fn enumerate_up_to(
    n_max: usize,
    allow_large: bool,
) -> Result<impl Iterator<Item = Lattice>, CorpusError> {
    // Validate the bound itself so errors name the requested size.
    LatticeStream::new(n_max, allow_large)?;
    let streams = (2..=n_max)
        .map(|n| LatticeStream::new(n, allow_large))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(streams.into_iter().flatten())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_sizes() {
        assert_eq!(enumerate_lattices(2).unwrap().count(), 1);
        assert_eq!(enumerate_lattices(3).unwrap().count(), 1);
        assert_eq!(enumerate_lattices(4).unwrap().count(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_lattices(10),
            Err(CorpusError::SizeCapExceeded { requested: 10, .. })
        ));
        assert!(LatticeStream::new(10, true).is_ok());
        assert!(matches!(
            enumerate_lattices(1),
            Err(CorpusError::SizeTooSmall(1))
        ));
    }

    #[test]
    fn names_are_stream_positions() {
        let names: Vec<String> = enumerate_lattices(4)
            .unwrap()
            .map(|l| l.name().to_string())
            .collect();
        assert_eq!(names, vec!["n4-0", "n4-1", "n4-2"]);
    }
}
