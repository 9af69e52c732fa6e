//! Counterexample search over generated lattices.
//!
//! Candidates are evaluated in parallel chunks, but the reported hit is
//! always the first one in stream order, so results do not depend on the
//! number of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::{enumerate_up_to, random_lattice, CorpusError};
use crate::lattice::Lattice;
use crate::set::{Element, MAX_ELEMENTS};

use super::query::{Query, QueryError};
use super::{lookup, run_law, Law, LawVerdict, Status, SubsetUniverse};

const CHUNK: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every labeled lattice of size `2..=n_max`, smallest sizes first.
    Exhaustive,
    /// `budget` random lattices. Draw `i` takes its size in `2..=n_max` and
    /// its lattice seed from one ChaCha8 stream seeded with `seed`.
    Random { seed: u64, budget: usize },
}

/// What to look for: a lattice on which a law fails, or one satisfying a
/// query.
#[derive(Clone, Debug)]
pub enum SearchTarget {
    Law(&'static Law),
    Query(Query),
}

impl SearchTarget {
    /// A law id if it names one, otherwise a query.
    pub fn parse(text: &str) -> Result<SearchTarget, QueryError> {
        match lookup(text.trim()) {
            Ok(law) => Ok(SearchTarget::Law(law)),
            Err(_) => Query::parse(text).map(SearchTarget::Query),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            SearchTarget::Law(law) => law.id.to_string(),
            SearchTarget::Query(q) => q.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The failing verdict, counterexample included.
    Law(LawVerdict),
    /// The satisfying filter's generator, for queries over filters.
    Query { filter: Option<Element> },
}

#[derive(Clone, Debug)]
pub struct SearchHit {
    pub lattice: Lattice,
    pub witness: Witness,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub hit: Option<SearchHit>,
    /// Lattices looked at, up to and including the hit.
    pub examined: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

fn evaluate(target: &SearchTarget, l: &Lattice, universe: &SubsetUniverse) -> Option<Witness> {
    match target {
        SearchTarget::Law(law) => {
            let v = run_law(l, law, universe);
            (v.status == Status::Fails).then_some(Witness::Law(v))
        }
        SearchTarget::Query(q) => q.find(l).map(|filter| Witness::Query { filter }),
    }
}

fn first_in_chunk(
    target: &SearchTarget,
    chunk: &[Lattice],
    universe: &SubsetUniverse,
) -> Option<(usize, Witness)> {
    chunk
        .par_iter()
        .enumerate()
        .find_map_first(|(i, l)| evaluate(target, l, universe).map(|w| (i, w)))
}

/// Scans lattices of size `2..=n_max` for the first one on which `target`
/// is hit. Exhaustive mode honours the enumeration size cap unless
/// `allow_large` is set.
pub fn search_counterexample(
    target: &SearchTarget,
    n_max: usize,
    mode: SearchMode,
    universe: &SubsetUniverse,
    allow_large: bool,
) -> Result<SearchReport, SearchError> {
    if n_max < 2 {
        return Err(CorpusError::SizeTooSmall(n_max).into());
    }
    let mut examined = 0;
    match mode {
        SearchMode::Exhaustive => {
            let mut stream = enumerate_up_to(n_max, allow_large)?;
            loop {
                let chunk: Vec<Lattice> = stream.by_ref().take(CHUNK).collect();
                if chunk.is_empty() {
                    break;
                }
                if let Some((i, witness)) = first_in_chunk(target, &chunk, universe) {
                    let lattice = chunk.into_iter().nth(i).expect("index from this chunk");
                    return Ok(SearchReport {
                        hit: Some(SearchHit { lattice, witness }),
                        examined: examined + i + 1,
                    });
                }
                examined += chunk.len();
            }
        }
        SearchMode::Random { seed, budget } => {
            if n_max > MAX_ELEMENTS {
                return Err(CorpusError::SizeCapExceeded {
                    requested: n_max,
                    cap: MAX_ELEMENTS,
                }
                .into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut remaining = budget;
            while remaining > 0 {
                let take = remaining.min(CHUNK);
                remaining -= take;
                let draws: Vec<(usize, u64)> = (0..take)
                    .map(|_| (rng.gen_range(2..=n_max), rng.gen::<u64>()))
                    .collect();
                let chunk: Vec<Lattice> = draws
                    .par_iter()
                    .filter_map(|&(n, s)| random_lattice(n, s).ok())
                    .collect();
                if let Some((i, witness)) = first_in_chunk(target, &chunk, universe) {
                    let lattice = chunk.into_iter().nth(i).expect("index from this chunk");
                    return Ok(SearchReport {
                        hit: Some(SearchHit { lattice, witness }),
                        examined: examined + i + 1,
                    });
                }
                examined += chunk.len();
            }
        }
    }
    Ok(SearchReport {
        hit: None,
        examined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn target(text: &str) -> SearchTarget {
        SearchTarget::parse(text).unwrap()
    }

    #[test]
    fn law_ids_take_precedence_over_queries() {
        assert!(matches!(target("thm2.1.x"), SearchTarget::Law(_)));
        assert!(matches!(target("cond1 & !cond2"), SearchTarget::Query(_)));
        assert!(SearchTarget::parse("thm2.1.zz").is_err());
    }

    #[test]
    fn proved_law_has_no_small_counterexample() {
        let r = search_counterexample(
            &target("thm2.1.x"),
            5,
            SearchMode::Exhaustive,
            &SubsetUniverse::default(),
            false,
        )
        .unwrap();
        assert!(r.hit.is_none());
        assert_eq!(r.examined, 1 + 1 + 3 + 19);
    }

    #[test]
    fn random_search_is_reproducible() {
        let run = || {
            search_counterexample(
                &target("!cond1"),
                7,
                SearchMode::Random {
                    seed: 9,
                    budget: 500,
                },
                &SubsetUniverse::default(),
                false,
            )
            .unwrap()
        };
        let (a, b) = (run(), run());
        let (ha, hb) = (a.hit.unwrap(), b.hit.unwrap());
        assert_eq!(ha.lattice.to_spec(), hb.lattice.to_spec());
        assert_eq!(a.examined, b.examined);
    }

    #[test]
    fn small_bound_rejected() {
        assert!(search_counterexample(
            &target("cond1"),
            1,
            SearchMode::Exhaustive,
            &SubsetUniverse::default(),
            false
        )
        .is_err());
    }
}
