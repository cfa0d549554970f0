//! Constructive lighting by induction on the vertex count.
//!
//! For a vertex subset `S`, an *n-pressing with respect to `v`* is a press
//! set lighting every lamp of the subgraph induced on `S \ {v}`. Applied to
//! `S` itself it either lights `v` too, and we are done, or leaves exactly
//! `v` dark. When every such pressing leaves its own vertex dark:
//!
//! * `|S|` even: the XOR of all of them lights each lamp `|S| - 1` times.
//! * `|S|` odd: press a vertex `u` of odd out-degree in `S`, lighting an odd
//!   set `U`; then add the pressings for each vertex of the even set
//!   `S \ U`.
//!
//! Choices are always the lowest-index vertex, and results are memoised per
//! subset so each subset is solved once.

use std::collections::HashMap;

use super::{apply, LampConfig, PressSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_PREMISE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructiveOptions {
    /// Up to this vertex count the odd-subset premise is checked
    /// exhaustively before recursing.
    pub premise_cap: usize,
    /// Hard limit on the vertex count (subsets are `u64` masks).
    pub max_vertices: usize,
}

impl Default for ConstructiveOptions {
    fn default() -> Self {
        Self {
            premise_cap: DEFAULT_PREMISE_CAP,
            max_vertices: 64,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConstructiveStats {
    /// Distinct subsets solved.
    pub subsets: usize,
    pub memo_hits: usize,
    pub base_cases: usize,
    /// Subsets where some pressing already lit its removed vertex.
    pub direct: usize,
    /// Even subsets finished by adding all pressings.
    pub even_case: usize,
    /// Odd subsets finished via an odd-out-degree vertex.
    pub odd_case: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constructive {
    pub presses: PressSet,
    pub stats: ConstructiveStats,
}

struct Builder {
    /// Out-neighbourhood of each vertex including its loop.
    masks: Vec<u64>,
    memo: HashMap<u64, u64>,
    stats: ConstructiveStats,
}

fn vertices(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        (rest != 0).then(|| {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            v
        })
    })
}

fn mask_vertices(mask: u64) -> Vec<usize> {
    vertices(mask).collect()
}

impl Builder {
    /// Lamps of `subset` lit by pressing `presses`.
    fn lit(&self, presses: u64, subset: u64) -> u64 {
        vertices(presses).fold(0, |acc, u| acc ^ self.masks[u]) & subset
    }

    fn solve(&mut self, subset: u64) -> Result<u64> {
        if let Some(&p) = self.memo.get(&subset) {
            self.stats.memo_hits += 1;
            return Ok(p);
        }
        self.stats.subsets += 1;
        let presses = if subset.count_ones() == 1 {
            let v = subset.trailing_zeros() as usize;
            if self.masks[v] & subset == 0 {
                return Err(Error::PremiseViolation { subset: vec![v] });
            }
            self.stats.base_cases += 1;
            subset
        } else {
            self.combine(subset)?
        };
        if self.lit(presses, subset) != subset {
            return Err(Error::Verification(format!(
                "pressing for subset {:?} does not light it",
                mask_vertices(subset)
            )));
        }
        self.memo.insert(subset, presses);
        Ok(presses)
    }

    fn combine(&mut self, subset: u64) -> Result<u64> {
        let mut pressings = Vec::with_capacity(subset.count_ones() as usize);
        for v in vertices(subset) {
            let q = self.solve(subset & !(1u64 << v))?;
            if self.lit(q, subset) == subset {
                self.stats.direct += 1;
                return Ok(q);
            }
            pressings.push((v, q));
        }

        if subset.count_ones().is_multiple_of(2) {
            self.stats.even_case += 1;
            return Ok(pressings.iter().fold(0, |acc, &(_, q)| acc ^ q));
        }

        let u = vertices(subset)
            .find(|&u| (self.masks[u] & subset).count_ones() % 2 == 1)
            .ok_or_else(|| Error::PremiseViolation {
                subset: mask_vertices(subset),
            })?;
        let lit_by_u = self.masks[u] & subset;
        if lit_by_u.count_ones().is_multiple_of(2) {
            return Err(Error::Verification(format!(
                "pressing {u} lit an even set {:?} in {:?}",
                mask_vertices(lit_by_u),
                mask_vertices(subset)
            )));
        }
        self.stats.odd_case += 1;
        let dark = subset & !lit_by_u;
        Ok(pressings
            .iter()
            .filter(|&&(v, _)| (dark >> v) & 1 == 1)
            .fold(1u64 << u, |acc, &(_, q)| acc ^ q))
    }
}

/// Lights every lamp of `g` by the inductive construction.
///
/// Missing loops are reported immediately as a singleton violation; for
/// `n <= premise_cap` the full odd-subset premise is checked first, and
/// beyond that a violation is reported if the recursion runs into one.
pub fn light_all_constructive(g: &Graph, opts: ConstructiveOptions) -> Result<Constructive> {
    let n = g.n();
    let limit = opts.max_vertices.min(64);
    if n > limit {
        return Err(Error::CapExceeded {
            what: "vertex count for constructive lighting",
            value: n,
            cap: limit,
        });
    }
    if let Some(v) = (0..n).find(|&v| !g.has_loop(v)) {
        return Err(Error::PremiseViolation { subset: vec![v] });
    }
    if n <= opts.premise_cap {
        if let Some(subset) = g.odd_subset_violation(opts.premise_cap)? {
            return Err(Error::PremiseViolation { subset });
        }
    }
    if n == 0 {
        return Ok(Constructive {
            presses: PressSet::empty(0),
            stats: ConstructiveStats::default(),
        });
    }

    let mut builder = Builder {
        masks: g.out_masks(),
        memo: HashMap::new(),
        stats: ConstructiveStats::default(),
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let presses = PressSet::from_buttons(n, mask_vertices(builder.solve(full)?));

    if !apply(&g.adjacency(), &presses, &LampConfig::dark(n))?.is_all_lit() {
        return Err(Error::Verification("constructive pressing leaves a lamp dark".into()));
    }
    Ok(Constructive {
        presses,
        stats: builder.stats,
    })
}
