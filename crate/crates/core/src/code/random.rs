use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::Elem;

use super::result::{Certainty, DistanceResult};
use super::{weight, LinearCode};

#[derive(Clone, Debug)]
pub struct RandomOptions {
    /// Number of random information sets.
    pub budget: u64,
    pub seed: u64,
    /// Messages of weight up to `p` (1 or 2) are tried on each set.
    pub p: usize,
}

impl Default for RandomOptions {
    fn default() -> Self {
        RandomOptions { budget: 1000, seed: 1, p: 2 }
    }
}

/// Upper bound on the minimum distance from seeded random information sets
/// (Lee-Brickell with weight at most `p` on the information set). The
/// i-th sample depends only on the seed, so a larger budget extends the
/// same sequence and never raises the bound.
pub fn min_weight_random(code: &LinearCode, opts: &RandomOptions) -> Result<DistanceResult> {
    let start = Instant::now();
    let f = code.field();
    let (n, k, q) = (code.length(), code.dimension(), f.order() as usize);
    if !(1..=2).contains(&opts.p) {
        return Err(Error::Unsupported("p must be 1 or 2".into()));
    }
    if k == 0 {
        return Ok(DistanceResult::new(None, Certainty::Exact, None, 0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<Elem>> = None;
    let mut best_w = usize::MAX;
    let mut enumerated = 0u128;
    let mut tmp = vec![0 as Elem; n];
    for _ in 0..opts.budget.max(1) {
        order.shuffle(&mut rng);
        let rows = code.generator().rref_by_columns(&order).matrix.row_vecs();
        for (i, ri) in rows.iter().enumerate() {
            enumerated += 1;
            let w = weight(ri);
            if w < best_w {
                best_w = w;
                best = Some(ri.clone());
            }
            if opts.p < 2 {
                continue;
            }
            for rj in &rows[i + 1..] {
                for c in 1..q as Elem {
                    enumerated += 1;
                    for ((t, &a), &b) in tmp.iter_mut().zip(ri).zip(rj) {
                        *t = f.add(a, f.mul(c, b));
                    }
                    let w = weight(&tmp);
                    if w < best_w {
                        best_w = w;
                        best = Some(tmp.clone());
                    }
                }
            }
        }
    }
    let mut r = DistanceResult::new(Some(best_w), Certainty::UpperBoundOnly, best, enumerated);
    r.millis = start.elapsed().as_millis() as u64;
    Ok(r)
}
