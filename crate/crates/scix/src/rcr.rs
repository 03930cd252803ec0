//! Range-minimum queries and distinct-color reporting.
//!
//! `Rmq` answers "position of the leftmost minimum in `values[i..=j]`" for a
//! static integer array. On top of it, [`rcr_report`] reports the distinct
//! colors of a range `A[i..=j]` together with their leftmost occurrence, in
//! time proportional to the number of reported colors: the query structure is
//! an `Rmq` over the previous-occurrence array of `A`, and the report
//! recursion splits at range minima, stopping as soon as the minimum points
//! back inside the query range.

use crate::PackedIntVec;

const BLK: usize = 64;

/// Static range-minimum structure, leftmost ties.
///
/// Keeps a bit-packed copy of the values, per-64-element block minima, and a
/// sparse table over the blocks.
pub struct Rmq {
    n: usize,
    vals: PackedIntVec,
    blk_min: Vec<u64>,
    blk_arg: Vec<u8>,
    /// `table[k][b]` is the index of the leftmost minimal block among blocks
    /// `b .. b + 2^(k+1)`.
    table: Vec<Vec<u32>>,
}

impl Rmq {
    pub fn build(values: &[u64]) -> Rmq {
        let n = values.len();
        let max = values.iter().copied().max().unwrap_or(0);
        let vals = PackedIntVec::from_slice(PackedIntVec::width_for(max), values);

        let nblk = n.div_ceil(BLK);
        let mut blk_min = Vec::with_capacity(nblk);
        let mut blk_arg = Vec::with_capacity(nblk);
        for b in 0..nblk {
            let lo = b * BLK;
            let hi = ((b + 1) * BLK).min(n);
            let mut bv = values[lo];
            let mut ba = 0u8;
            for (off, &v) in values[lo..hi].iter().enumerate().skip(1) {
                if v < bv {
                    bv = v;
                    ba = off as u8;
                }
            }
            blk_min.push(bv);
            blk_arg.push(ba);
        }

        let mut table: Vec<Vec<u32>> = Vec::new();
        let mut span = 1usize;
        while span * 2 <= nblk {
            let prev_span = span;
            span *= 2;
            let row: Vec<u32> = (0..=nblk - span)
                .map(|b| {
                    let (l, r) = if prev_span == 1 {
                        (b as u32, (b + 1) as u32)
                    } else {
                        let half = table.last().unwrap();
                        (half[b], half[b + prev_span])
                    };
                    if blk_min[r as usize] < blk_min[l as usize] {
                        r
                    } else {
                        l
                    }
                })
                .collect();
            table.push(row);
        }

        Rmq {
            n,
            vals,
            blk_min,
            blk_arg,
            table,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Position (1-based) of the leftmost minimum in `values[i..=j]`,
    /// 1-based inclusive bounds.
    ///
    /// # Panics
    /// If `i < 1`, `i > j`, or `j > len()`.
    pub fn query(&self, i: usize, j: usize) -> usize {
        assert!(1 <= i && i <= j && j <= self.n, "bad rmq range [{i}..{j}]");
        let (l, r) = (i - 1, j - 1);
        let bl = l / BLK;
        let br = r / BLK;
        if bl == br {
            return self.scan(l, r).1 + 1;
        }
        let (mut bv, mut bp) = self.scan(l, (bl + 1) * BLK - 1);
        if bl + 1 <= br - 1 {
            let mb = self.best_block(bl + 1, br - 1);
            if self.blk_min[mb] < bv {
                bv = self.blk_min[mb];
                bp = mb * BLK + self.blk_arg[mb] as usize;
            }
        }
        let (tv, tp) = self.scan(br * BLK, r);
        if tv < bv {
            bp = tp;
        }
        bp + 1
    }

    /// Value at 1-based position `i` (from the retained packed copy).
    pub fn value(&self, i: usize) -> u64 {
        self.vals.get(i - 1)
    }

    /// Leftmost minimal block index among full blocks `u..=v`.
    fn best_block(&self, u: usize, v: usize) -> usize {
        if u == v {
            return u;
        }
        let k = (usize::BITS - 1 - (v - u + 1).leading_zeros()) as usize;
        let row = &self.table[k - 1];
        let a = row[u] as usize;
        let b = row[v + 1 - (1 << k)] as usize;
        if self.blk_min[b] < self.blk_min[a] {
            b
        } else {
            a
        }
    }

    /// Leftmost minimum over 0-based positions `l..=r` (same block).
    fn scan(&self, l: usize, r: usize) -> (u64, usize) {
        let mut bv = self.vals.get(l);
        let mut bp = l;
        for p in l + 1..=r {
            let v = self.vals.get(p);
            if v < bv {
                bv = v;
                bp = p;
            }
        }
        (bv, bp)
    }
}

/// Previous-occurrence array of `colors`: entry `k` (0-based) holds the
/// largest 1-based position `j < k+1` with `colors[j-1] == colors[k]`, or 0
/// if `colors[k]` appears at `k+1` for the first time.
pub fn prev_occ_array(colors: &[u64]) -> Vec<u64> {
    let mut last: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    let mut c = Vec::with_capacity(colors.len());
    for (k, &col) in colors.iter().enumerate() {
        c.push(last.get(&col).copied().unwrap_or(0) as u64);
        last.insert(col, k + 1);
    }
    c
}

/// Reports the distinct colors in `A[i..=j]` (1-based) as
/// `(color, leftmost_pos)` pairs sorted by position.
///
/// `colors` is an accessor for `A` (1-based); `prev` must be an [`Rmq`] built
/// over [`prev_occ_array`] of the same sequence. The accessor is invoked
/// exactly once per reported color, and the total number of range-minimum
/// probes is at most `2 * occ + 1`.
pub fn rcr_report<F>(colors: &mut F, prev: &Rmq, i: usize, j: usize) -> Vec<(u64, usize)>
where
    F: FnMut(usize) -> u64,
{
    assert!(1 <= i && i <= j && j <= prev.len(), "bad report range");
    let mut hits: Vec<usize> = Vec::new();
    let mut stack: Vec<(usize, usize)> = vec![(i, j)];
    let mut probes = 0usize;
    while let Some((l, r)) = stack.pop() {
        let x = prev.query(l, r);
        probes += 1;
        if prev.value(x) >= i as u64 {
            continue;
        }
        hits.push(x);
        if x > l {
            stack.push((l, x - 1));
        }
        if x < r {
            stack.push((x + 1, r));
        }
    }
    debug_assert!(probes <= 2 * hits.len() + 1);
    hits.sort_unstable();
    hits.into_iter().map(|x| (colors(x), x)).collect()
}
