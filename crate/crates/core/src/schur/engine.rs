use std::collections::HashMap;
use std::sync::RwLock;

use crate::composition::{coarsenings, Composition};
use crate::error::{guard, Error, Result};
use crate::schur::hbasis;
use crate::schur::lr;
use crate::schur::vector::{HVector, SchurVector};
use crate::skew::{ribbon_to_skew, SkewShape};

/// Default limit on the number of cells handed to LR enumeration.
pub const DEFAULT_CELL_GUARD: usize = 64;

/// Largest ribbon accepted by [`ExpansionEngine::syt_count`].
pub const SYT_MAX_CELLS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    pub cell_guard: usize,
    pub memoize: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            cell_guard: DEFAULT_CELL_GUARD,
            memoize: true,
        }
    }
}

/// Schur expansions of ribbons and skew shapes, with an optional memo of
/// ribbon expansions keyed by `min(alpha, alpha*)`.
///
/// The memo takes a shared lock for lookups and an exclusive one for
/// inserts, so one engine can serve many threads.
#[derive(Debug, Default)]
pub struct ExpansionEngine {
    config: EngineConfig,
    memo: RwLock<HashMap<Composition, SchurVector>>,
}

impl ExpansionEngine {
    pub fn new(config: EngineConfig) -> Self {
        ExpansionEngine {
            config,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> EngineConfig {
        self.config
    }

    fn check_cells(&self, cells: usize) -> Result<()> {
        guard("cell count", cells as u128, self.config.cell_guard as u128)
    }

    pub fn lr_expand(&self, shape: &SkewShape) -> Result<SchurVector> {
        self.check_cells(shape.size())?;
        lr::lr_expand(shape)
    }

    pub fn ribbon_schur(&self, alpha: &Composition) -> Result<SchurVector> {
        self.check_cells(alpha.size())?;
        if !self.config.memoize {
            return lr::lr_expand(&ribbon_to_skew(alpha));
        }
        let key = alpha.canonical();
        if let Some(hit) = self.memo.read().expect("memo lock poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let v = lr::lr_expand(&ribbon_to_skew(&key))?;
        self.memo
            .write()
            .expect("memo lock poisoned")
            .insert(key, v.clone());
        Ok(v)
    }

    /// `r_alpha * r_beta`, expanded as the skew shape with `alpha` placed
    /// above and to the right of `beta`.
    pub fn product_expand(&self, alpha: &Composition, beta: &Composition) -> Result<SchurVector> {
        let shape = ribbon_to_skew(alpha).disjoint_product(&ribbon_to_skew(beta));
        self.lr_expand(&shape)
    }

    pub fn h_expand_ribbon(&self, alpha: &Composition) -> Result<HVector> {
        self.check_cells(alpha.size())?;
        hbasis::h_expand_ribbon(alpha)
    }

    /// Number of standard fillings of the ribbon: `sum_nu c_nu f^nu`, with
    /// `f^nu` from the hook length formula.
    pub fn syt_count(&self, alpha: &Composition) -> Result<u128> {
        guard(
            "syt_count cells",
            alpha.size() as u128,
            SYT_MAX_CELLS as u128,
        )?;
        let mut total: u128 = 0;
        for (nu, c) in self.ribbon_schur(alpha)?.iter() {
            let f = nu.standard_tableaux()?;
            total = (c as u128)
                .checked_mul(f)
                .and_then(|x| x.checked_add(total))
                .ok_or(Error::Overflow("syt_count"))?;
        }
        Ok(total)
    }

    /// Expansions currently memoized, keyed by canonical representative.
    pub fn memo_snapshot(&self) -> Vec<(Composition, SchurVector)> {
        let memo = self.memo.read().expect("memo lock poisoned");
        let mut out: Vec<_> = memo.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Seeds the memo, e.g. from an on-disk cache. Ignored when memoization is off.
    pub fn preload(&self, alpha: &Composition, v: SchurVector) {
        if self.config.memoize {
            self.memo
                .write()
                .expect("memo lock poisoned")
                .insert(alpha.canonical(), v);
        }
    }
}

/// Permutations of `|alpha|` with descent set equal to the partial sums of
/// `alpha`, by inclusion-exclusion over coarsenings:
/// `sum_beta (-1)^(l(alpha) - l(beta)) N! / prod beta_i!`.
pub fn descent_class_size(alpha: &Composition) -> Result<i128> {
    guard(
        "syt_count cells",
        alpha.size() as u128,
        SYT_MAX_CELLS as u128,
    )?;
    let fact = |k: usize| (1..=k as i128).product::<i128>();
    let n_fact = fact(alpha.size());
    let mut total: i128 = 0;
    for (beta, mult) in coarsenings(alpha) {
        let denom: i128 = beta.parts().iter().map(|&p| fact(p)).product();
        let sign = if (alpha.len() - beta.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        total += sign * mult as i128 * (n_fact / denom);
    }
    Ok(total)
}
