use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::Elem;

use super::result::{Certainty, DistanceResult};
use super::{weight, LinearCode};

pub const DEFAULT_EXHAUSTIVE_BUDGET: u128 = 1 << 26;

#[derive(Clone, Debug)]
pub struct ExhaustiveOptions {
    /// Largest allowed q^k.
    pub budget: u128,
    pub workers: usize,
}

impl Default for ExhaustiveOptions {
    fn default() -> Self {
        ExhaustiveOptions { budget: DEFAULT_EXHAUSTIVE_BUDGET, workers: 1 }
    }
}

/// Minimum weight over every nonzero message whose first nonzero entry is 1.
/// Deliberately plain: it serves as the oracle for the other engines.
pub fn min_distance_exhaustive(code: &LinearCode, opts: &ExhaustiveOptions) -> Result<DistanceResult> {
    let start = Instant::now();
    let f = code.field();
    let q = f.order() as u128;
    let k = code.dimension();
    let n = code.length();
    let total = (0..k).try_fold(1u128, |acc, _| acc.checked_mul(q)).unwrap_or(u128::MAX);
    if total > opts.budget {
        return Err(Error::BudgetExceeded { needed: total, budget: opts.budget });
    }
    if k == 0 {
        return Ok(DistanceResult::new(None, Certainty::Exact, None, 0));
    }
    let g = code.generator();
    let qq = q as usize;

    // chunks: leading position `lead`, then the next digit (if any)
    let mut chunks: Vec<(usize, Option<Elem>)> = Vec::new();
    for lead in 0..k {
        if lead + 1 < k {
            chunks.extend(f.elements().map(|d| (lead, Some(d))));
        } else {
            chunks.push((lead, None));
        }
    }

    let run = |&(lead, second): &(usize, Option<Elem>)| -> (usize, Vec<Elem>, u128) {
        let mut msg = vec![0 as Elem; k];
        msg[lead] = 1;
        let fixed = match second {
            Some(d) => {
                msg[lead + 1] = d;
                lead + 2
            }
            None => lead + 1,
        };
        let mut word = vec![0 as Elem; n];
        for (r, &m) in msg.iter().enumerate() {
            if m != 0 {
                crate::linalg::axpy(f, &mut word, m, g.row(r));
            }
        }
        let mut best = (weight(&word), word.clone());
        let mut count = 1u128;
        // odometer over msg[fixed..], digits in integer order
        loop {
            let mut pos = k;
            let mut advanced = false;
            while pos > fixed {
                pos -= 1;
                let old = msg[pos];
                let new = if (old as usize) + 1 == qq { 0 } else { old + 1 };
                msg[pos] = new;
                let delta = f.sub(new, old);
                crate::linalg::axpy(f, &mut word, delta, g.row(pos));
                if new != 0 {
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
            count += 1;
            let w = weight(&word);
            if w < best.0 {
                best = (w, word.clone());
            }
        }
        (best.0, best.1, count)
    };

    let results: Vec<(usize, Vec<Elem>, u128)> = if opts.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::Unsupported(e.to_string()))?;
        pool.install(|| chunks.par_iter().map(run).collect())
    } else {
        chunks.iter().map(run).collect()
    };
    let enumerated = results.iter().map(|r| r.2).sum();
    // first chunk attaining the minimum wins, independent of scheduling
    let (w, word, _) = results.into_iter().min_by_key(|r| r.0).expect("k > 0");
    let mut out = DistanceResult::new(Some(w), Certainty::Exact, Some(word), enumerated);
    out.millis = start.elapsed().as_millis() as u64;
    Ok(out)
}
