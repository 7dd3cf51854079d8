use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

use super::result::{Certainty, DistanceResult};
use super::vectors::{Backend, Bitsliced, Bytes};
use super::{weight, LinearCode};

pub const DEFAULT_ISD_BUDGET: u128 = 1 << 40;

#[derive(Clone, Debug)]
pub struct IsdOptions {
    /// Stop as soon as a codeword of weight at most `target` is found.
    pub target: Option<usize>,
    /// Maximum number of enumerated messages.
    pub budget: u128,
    pub workers: usize,
    /// Shuffles the column order that information sets are drawn from.
    /// Seed 0 keeps the natural order.
    pub seed: u64,
    /// Coordinate permutations claimed to be automorphisms. When they are
    /// verified and generate a transitive group, a single information set
    /// suffices.
    pub automorphisms: Vec<Vec<usize>>,
}

impl Default for IsdOptions {
    fn default() -> Self {
        IsdOptions { target: None, budget: DEFAULT_ISD_BUDGET, workers: 1, seed: 0, automorphisms: Vec::new() }
    }
}

struct InfoSet {
    /// systematic generator on this information set, original coordinates
    rows: Vec<Vec<Elem>>,
    redundancy: Vec<usize>,
    fresh: usize,
}

fn information_sets(code: &LinearCode, order: &[usize], single: bool) -> Vec<InfoSet> {
    let n = code.length();
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    loop {
        let cols: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&c| !used[c])
            .chain(order.iter().copied().filter(|&c| used[c]))
            .collect();
        let rr = code.generator().rref_by_columns(&cols);
        let fresh = rr.pivots.iter().filter(|&&p| !used[p]).count();
        if fresh == 0 {
            break;
        }
        let mut is_pivot = vec![false; n];
        for &p in &rr.pivots {
            is_pivot[p] = true;
            used[p] = true;
        }
        sets.push(InfoSet {
            rows: rr.matrix.row_vecs(),
            redundancy: (0..n).filter(|&c| !is_pivot[c]).collect(),
            fresh,
        });
        if single {
            break;
        }
    }
    sets
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i + 1) as u128,
            None => return u128::MAX,
        }
    }
    acc
}

/// Messages of weight exactly `w` with leading coefficient 1.
fn unit_count(k: usize, w: usize, q: usize) -> u128 {
    binomial(k, w).saturating_mul(((q - 1) as u128).saturating_pow(w as u32 - 1))
}

#[derive(Clone)]
struct Best {
    weight: u32,
    msg: Vec<(usize, Elem)>,
}

struct Dfs<'a, B: Backend> {
    b: &'a B,
    k: usize,
    q: usize,
    base: u32,
    best: Best,
    chosen: Vec<(usize, Elem)>,
}

impl<B: Backend> Dfs<'_, B> {
    fn rec(&mut self, depth_left: usize, start: usize, acc: &B::V, bufs: &mut [B::V]) {
        let b = self.b;
        if depth_left == 1 {
            for p in start..self.k {
                for c in 1..self.q as Elem {
                    let w = self.base + b.weight_of_sum(acc, b.scaled(p, c));
                    if w < self.best.weight {
                        self.best.weight = w;
                        self.best.msg = self.chosen.clone();
                        self.best.msg.push((p, c));
                    }
                }
            }
            return;
        }
        let (cur, rest) = bufs.split_first_mut().expect("one buffer per level");
        for p in start..=self.k - depth_left {
            for c in 1..self.q as Elem {
                b.add(cur, acc, b.scaled(p, c));
                self.chosen.push((p, c));
                self.rec(depth_left - 1, p + 1, cur, rest);
                self.chosen.pop();
            }
        }
    }
}

/// Lowest-weight message of weight `w` whose first nonzero position is
/// `first` (coefficient 1 there). Returns the full codeword weight.
fn task<B: Backend>(b: &B, k: usize, q: usize, w: usize, first: usize) -> Best {
    let mut dfs = Dfs {
        b,
        k,
        q,
        base: w as u32,
        best: Best { weight: u32::MAX, msg: Vec::new() },
        chosen: vec![(first, 1)],
    };
    let acc = b.scaled(first, 1).clone();
    if w == 1 {
        let zero = b.zero();
        let wt = 1 + b.weight_of_sum(&acc, &zero);
        return Best { weight: wt, msg: vec![(first, 1)] };
    }
    let mut bufs = vec![b.zero(); w - 1];
    dfs.rec(w - 1, first + 1, &acc, &mut bufs);
    dfs.best
}

struct Ctx<'a> {
    code: &'a LinearCode,
    sets: Vec<InfoSet>,
    group: bool,
    opts: &'a IsdOptions,
    pool: Option<rayon::ThreadPool>,
    start: Instant,
}

fn search<B: Backend>(ctx: &Ctx) -> Result<DistanceResult> {
    let code = ctx.code;
    let f = code.field();
    let (n, k, q) = (code.length(), code.dimension(), f.order() as usize);
    let backends: Vec<B> = ctx
        .sets
        .iter()
        .map(|s| {
            let red: Vec<Vec<Elem>> =
                s.rows.iter().map(|row| s.redundancy.iter().map(|&c| row[c]).collect()).collect();
            B::build(f, &red)
        })
        .collect();
    let contrib = |w: usize, j: usize| -> usize {
        if ctx.group {
            0
        } else {
            (w + 1).saturating_sub(k - ctx.sets[j].fresh)
        }
    };

    let mut ub = usize::MAX;
    let mut witness: Option<Vec<Elem>> = None;
    let mut lb = 1usize;
    let mut enumerated = 0u128;
    let finish = |value: usize, certainty: Certainty, witness: Option<Vec<Elem>>, enumerated: u128| {
        let mut r = DistanceResult::new(Some(value), certainty, witness, enumerated);
        r.millis = ctx.start.elapsed().as_millis() as u64;
        r
    };

    for w in 1..=k {
        let active: Vec<usize> = if ctx.group {
            vec![0]
        } else {
            (0..ctx.sets.len()).filter(|&j| contrib(w, j) > 0).collect()
        };
        for (pos, &j) in active.iter().enumerate() {
            let cost = unit_count(k, w, q);
            if enumerated.saturating_add(cost) > ctx.opts.budget {
                if ub == usize::MAX {
                    return Ok(finish(lb, Certainty::LowerBoundOnly, None, enumerated));
                }
                return Ok(finish(ub, Certainty::Interval { lo: lb, hi: ub }, witness, enumerated));
            }
            let b = &backends[j];
            let firsts: Vec<usize> = (0..=k - w).collect();
            let run = |&first: &usize| task(b, k, q, w, first);
            let bests: Vec<Best> = match &ctx.pool {
                Some(pool) => pool.install(|| firsts.par_iter().map(run).collect()),
                None => firsts.iter().map(run).collect(),
            };
            enumerated += cost;
            let mut unit_best: Option<&Best> = None;
            for bst in &bests {
                if unit_best.is_none_or(|u| bst.weight < u.weight) {
                    unit_best = Some(bst);
                }
            }
            if let Some(bst) = unit_best {
                if (bst.weight as usize) < ub {
                    let rows = &ctx.sets[j].rows;
                    let mut word = vec![0 as Elem; n];
                    for &(p, c) in &bst.msg {
                        crate::linalg::axpy(f, &mut word, c, &rows[p]);
                    }
                    debug_assert_eq!(weight(&word), bst.weight as usize);
                    ub = bst.weight as usize;
                    witness = Some(word);
                }
            }
            let level_lb = if ctx.group {
                (n * (w + 1)).div_ceil(k)
            } else {
                let done: usize = active[..=pos].iter().map(|&i| contrib(w, i)).sum();
                let pending: usize = active[pos + 1..].iter().map(|&i| contrib(w - 1, i)).sum();
                done + pending
            };
            lb = lb.max(level_lb);
            if lb >= ub {
                return Ok(finish(ub, Certainty::Exact, witness, enumerated));
            }
            if ctx.opts.target.is_some_and(|t| ub <= t) {
                return Ok(finish(ub, Certainty::UpperBoundOnly, witness, enumerated));
            }
        }
    }
    // level k of any set enumerates the whole code
    Ok(finish(ub, Certainty::Exact, witness, enumerated))
}

macro_rules! by_words {
    ($e:literal, $w:expr, $ctx:expr) => {
        match $w {
            1 => search::<Bitsliced<$e, 1>>($ctx),
            2 => search::<Bitsliced<$e, 2>>($ctx),
            3 => search::<Bitsliced<$e, 3>>($ctx),
            4 => search::<Bitsliced<$e, 4>>($ctx),
            _ => search::<Bytes>($ctx),
        }
    };
}

fn dispatch(field: &Field, redundancy: usize, ctx: &Ctx) -> Result<DistanceResult> {
    let words = redundancy.div_ceil(64).max(1);
    if field.characteristic() != 2 {
        return search::<Bytes>(ctx);
    }
    match field.degree() {
        1 => by_words!(1, words, ctx),
        2 => by_words!(2, words, ctx),
        3 => by_words!(3, words, ctx),
        4 => by_words!(4, words, ctx),
        5 => by_words!(5, words, ctx),
        6 => by_words!(6, words, ctx),
        7 => by_words!(7, words, ctx),
        8 => by_words!(8, words, ctx),
        _ => search::<Bytes>(ctx),
    }
}

/// Exact minimum distance by enumerating low-weight messages over
/// information sets until the lower and upper bounds meet.
///
/// With disjoint information sets I_1, I_2, ... (the j-th contributing
/// `fresh_j` new columns), exhausting weight w on every set proves that
/// any unseen codeword has weight at least
/// `sum_j max(0, w + 1 - (k - fresh_j))`. With a transitive automorphism
/// group one set suffices and the bound is `ceil(n (w + 1) / k)`.
pub fn min_distance_isd(code: &LinearCode, opts: &IsdOptions) -> Result<DistanceResult> {
    let start = Instant::now();
    let f = code.field();
    let (n, k) = (code.length(), code.dimension());
    if f.order() > 256 {
        return Err(Error::Unsupported("distance engines support fields of order at most 256".into()));
    }
    if k == 0 {
        return Ok(DistanceResult::new(None, Certainty::Exact, None, 0));
    }
    let group = if opts.automorphisms.is_empty() {
        false
    } else {
        if !opts.automorphisms.iter().all(|p| code.is_automorphism(p)) {
            return Err(Error::NotAnAutomorphism);
        }
        LinearCode::generates_transitive_group(n, &opts.automorphisms)
    };
    let mut order: Vec<usize> = (0..n).collect();
    if opts.seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(opts.seed));
    }
    let sets = information_sets(code, &order, group);
    let pool = if opts.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .map_err(|e| Error::Unsupported(e.to_string()))?,
        )
    } else {
        None
    };
    let ctx = Ctx { code, sets, group, opts, pool, start };
    dispatch(f, n - k, &ctx)
}
