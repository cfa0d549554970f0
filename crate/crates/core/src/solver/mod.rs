//! Game semantics and pressing strategies.
//!
//! Pressing a set of buttons from a starting configuration XORs the selected
//! rows of the action matrix into the lamp vector, so the configurations
//! reachable from dark are exactly the row space of the action matrix.

mod constructive;
mod dark;
mod equivalent;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use constructive::{light_all_constructive, Constructive, ConstructiveOptions, ConstructiveStats};
pub use dark::{dark_only_order, dark_only_order_with_cap, is_dark_at_press, DEFAULT_ORDER_CAP};
pub use equivalent::{undirected_equivalent, undirected_equivalent_matrix, UndirectedEquivalent};

use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::graph::ActionMatrix;

/// Default bound on the rank for row-space enumeration in [`max_lit`].
pub const DEFAULT_RANK_CAP: usize = 24;

/// Default bound on the button count for exhaustive search in
/// [`majority_witness`].
pub const DEFAULT_MAJORITY_CAP: usize = 24;

/// Lamp states, one bit per lamp (1 = lit).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LampConfig(pub BitVec);

/// Buttons pressed an odd number of times. Order is irrelevant.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PressSet(pub BitVec);

/// An ordered sequence of button presses; repetitions allowed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PressSequence(pub Vec<usize>);

impl LampConfig {
    pub fn dark(lamps: usize) -> Self {
        Self(BitVec::zeros(lamps))
    }

    pub fn all_lit(lamps: usize) -> Self {
        Self(BitVec::ones(lamps))
    }

    pub fn lit_count(&self) -> usize {
        self.0.count_ones()
    }

    pub fn is_all_lit(&self) -> bool {
        self.lit_count() == self.0.len()
    }

    pub fn bits(&self) -> &BitVec {
        &self.0
    }
}

impl PressSet {
    pub fn empty(buttons: usize) -> Self {
        Self(BitVec::zeros(buttons))
    }

    pub fn from_buttons(buttons: usize, pressed: impl IntoIterator<Item = usize>) -> Self {
        Self(BitVec::from_indices(buttons, pressed))
    }

    pub fn pressed(&self) -> Vec<usize> {
        self.0.ones_iter().collect()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_zero()
    }

    pub fn bits(&self) -> &BitVec {
        &self.0
    }

    /// Group operation: pressing `self` then `other`.
    pub fn combine(&self, other: &PressSet) -> PressSet {
        PressSet(&self.0 ^ &other.0)
    }
}

impl PressSequence {
    /// Parity projection onto a press set over `buttons` buttons.
    pub fn parity(&self, buttons: usize) -> PressSet {
        let mut bits = BitVec::zeros(buttons);
        for &b in &self.0 {
            bits.flip(b);
        }
        PressSet(bits)
    }
}

impl fmt::Display for LampConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for PressSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for PressSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn check_len(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}

/// `start` XOR the rows of `a` selected by `presses`.
pub fn apply(a: &ActionMatrix, presses: &PressSet, start: &LampConfig) -> Result<LampConfig> {
    check_len("press set", a.buttons(), presses.0.len())?;
    check_len("lamp configuration", a.lamps(), start.0.len())?;
    let mut lamps = start.0.clone();
    lamps ^= &a.matrix().combine_rows(&presses.0);
    Ok(LampConfig(lamps))
}

/// A press set that lights exactly `target` from dark, if one exists.
pub fn lightable(a: &ActionMatrix, target: &LampConfig) -> Result<Option<PressSet>> {
    check_len("target configuration", a.lamps(), target.0.len())?;
    Ok(a.matrix().solve(&target.0)?.map(PressSet))
}

/// Every configuration is lightable iff the action matrix is invertible.
pub fn fully_controllable(a: &ActionMatrix) -> Result<bool> {
    a.matrix().det_mod2()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxLit {
    pub k: usize,
    pub witness: PressSet,
    /// The configuration the witness lights.
    pub lit: LampConfig,
}

/// Largest number of lamps that can be lit simultaneously, found by walking
/// the `2^rank` elements of the row space in Gray-code order over the RREF
/// basis. The first maximum encountered wins.
pub fn max_lit(a: &ActionMatrix, rank_cap: usize) -> Result<MaxLit> {
    let rref = a.matrix().rref();
    if rref.rank > rank_cap {
        return Err(Error::CapExceeded {
            what: "action matrix rank",
            value: rref.rank,
            cap: rank_cap,
        });
    }
    let basis = &rref.matrix.rows()[..rref.rank];
    let mut cur = BitVec::zeros(a.lamps());
    let mut best = cur.clone();
    let mut best_weight = 0;
    for step in 1u64..(1u64 << rref.rank) {
        cur ^= &basis[step.trailing_zeros() as usize];
        let w = cur.count_ones();
        if w > best_weight {
            best_weight = w;
            best = cur.clone();
        }
    }
    let witness = a
        .matrix()
        .solve(&best)?
        .ok_or_else(|| Error::Verification("row-space element has no press set".into()))?;
    Ok(MaxLit {
        k: best_weight,
        witness: PressSet(witness),
        lit: LampConfig(best),
    })
}

/// A press set lighting strictly more than half of the lamps.
///
/// Requires every lamp to be toggled by some button. Up to `cap` buttons the
/// search is exhaustive over press sets in Gray-code order and returns the
/// first press set of maximum weight; beyond that it samples uniformly with a
/// fixed seed and returns the first majority it meets.
pub fn majority_witness(a: &ActionMatrix, cap: usize) -> Result<PressSet> {
    let m = a.matrix();
    if let Some(lamp) = (0..a.lamps()).find(|&j| m.column(j).is_zero()) {
        return Err(Error::UntoggledLamp { lamp });
    }
    let lamps = a.lamps();
    let is_majority = |w: usize| 2 * w > lamps;
    let buttons = a.buttons();

    if buttons <= cap.min(40) {
        let mut presses = BitVec::zeros(buttons);
        let mut cur = BitVec::zeros(lamps);
        let mut best = (0, presses.clone());
        for step in 1u64..(1u64 << buttons) {
            let b = step.trailing_zeros() as usize;
            presses.flip(b);
            cur ^= m.row(b);
            let w = cur.count_ones();
            if w > best.0 {
                best = (w, presses.clone());
            }
        }
        return if is_majority(best.0) {
            Ok(PressSet(best.1))
        } else {
            Err(Error::NoMajorityWitness { lamps, best: best.0 })
        };
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut best = 0;
    for _ in 0..(1u64 << cap.min(20)) {
        let presses = BitVec::from_bools(&(0..buttons).map(|_| rng.gen()).collect::<Vec<bool>>());
        let w = m.combine_rows(&presses).count_ones();
        if is_majority(w) {
            return Ok(PressSet(presses));
        }
        best = best.max(w);
    }
    Err(Error::NoMajorityWitness { lamps, best })
}
