//! Enumeration of the suffix-array intervals of all internal suffix-tree
//! nodes, directly from the BWT.
//!
//! The traversal walks explicit Weiner links starting from the root: for
//! every known node we hold the sub-intervals of its children, compute the
//! Weiner link of each child for every character occurring in its BWT range,
//! and group the targets by character. A character that receives links from
//! two or more children labels a new internal node whose children are
//! exactly those targets. Grouping runs through a reused `sigma * sigma`
//! scratch table, and pending child arrays live on an explicit stack with
//! the largest target pushed first, which keeps the stack at `O(sigma log
//! n)` arrays.

use crate::{Interval, WaveletTree};

/// One enumerated internal node.
///
/// `children` holds `(label, sub-interval)` pairs in strictly increasing
/// label order; the sub-intervals abut and partition `interval`. `depth` is
/// the length of the node's path label (0 for the root). Every node except
/// possibly the root has at least two children.
pub struct NodeVisit<'a> {
    pub interval: Interval,
    pub depth: usize,
    pub children: &'a [(u32, Interval)],
}

/// Instrumentation from one enumeration run.
pub struct EnumStats {
    /// Number of internal nodes visited (including the root).
    pub visits: usize,
    /// Maximum number of child arrays held by the stack at any point.
    pub watermark: usize,
    /// Total Weiner links computed across the run.
    pub weiner_links: usize,
}

/// Cumulative symbol counts of `bwt`: entry `c` is the number of symbols
/// smaller than `c`, with a final entry holding the total length.
pub fn c_array(bwt: &WaveletTree) -> Vec<usize> {
    let sigma = bwt.sigma() as usize;
    let mut c = vec![0usize; sigma + 1];
    for sym in 0..sigma {
        c[sym + 1] = c[sym] + bwt.rank(sym as u64, bwt.len());
    }
    c
}

/// Calls `visit` exactly once for every internal suffix-tree node of the
/// text behind `bwt`, in an order determined by the traversal. The root is
/// always reported first (even if it has a single child); every other node
/// is reported with its full child list. `c_arr` must be the cumulative
/// count array of the BWT, `c_arr.len() == sigma + 1`.
pub fn enumerate_internal<F>(bwt: &WaveletTree, c_arr: &[usize], visit: &mut F) -> EnumStats
where
    F: for<'a> FnMut(&NodeVisit<'a>),
{
    let n = bwt.len();
    let sigma = bwt.sigma() as usize;
    assert_eq!(c_arr.len(), sigma + 1, "c array must have sigma + 1 entries");
    assert!(n >= 1, "empty sequence has no suffix tree");

    let mut stats = EnumStats {
        visits: 0,
        watermark: 0,
        weiner_links: 0,
    };

    // Children of the root, straight from the cumulative counts.
    let root_children: Vec<(u32, Interval)> = (0..sigma)
        .filter(|&c| c_arr[c + 1] > c_arr[c])
        .map(|c| (c as u32, Interval::new(c_arr[c] + 1, c_arr[c + 1])))
        .collect();
    stats.visits += 1;
    visit(&NodeVisit {
        interval: Interval::new(1, n),
        depth: 0,
        children: &root_children,
    });

    // Grouping scratch: v[c * sigma .. c * sigma + y[c]] holds the pairs
    // (child label, target interval) gathered for character c at the node
    // currently being processed; w lists the characters with y[c] > 0.
    let mut v: Vec<(u32, Interval)> = vec![(0, Interval::EMPTY); sigma * sigma];
    let mut y: Vec<usize> = vec![0; sigma];
    let mut w: Vec<usize> = Vec::with_capacity(sigma);
    // (u_c, c) pairs of materialized targets, sorted before pushing.
    let mut ready: Vec<(usize, usize)> = Vec::with_capacity(sigma);

    // Flat stack of child arrays: each record is the triples
    // (label, lo, hi) of one array followed by its length and its depth.
    let mut stack: Vec<u64> = Vec::new();
    let mut stacked_arrays = 0usize;

    let mut cur: Vec<(u32, Interval)> = root_children;
    let mut cur_depth = 0usize;

    loop {
        for &(alpha, iv) in &cur {
            bwt.range_distinct(iv.lo, iv.hi, &mut |sym, rank_before, freq| {
                stats.weiner_links += 1;
                let c = sym as usize;
                let lo = c_arr[c] + rank_before + 1;
                if y[c] == 0 {
                    w.push(c);
                }
                v[c * sigma + y[c]] = (alpha, Interval::new(lo, lo + freq - 1));
                y[c] += 1;
            });
        }

        for &c in &w {
            if y[c] < 2 {
                continue;
            }
            let pairs = &v[c * sigma..c * sigma + y[c]];
            let interval = Interval::new(pairs[0].1.lo, pairs[y[c] - 1].1.hi);
            stats.visits += 1;
            visit(&NodeVisit {
                interval,
                depth: cur_depth + 1,
                children: pairs,
            });
            ready.push((interval.len(), c));
        }

        // Push the largest target first so that it is processed last; the
        // remaining targets follow in decreasing size.
        ready.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for &(_, c) in &ready {
            for &(alpha, iv) in &v[c * sigma..c * sigma + y[c]] {
                stack.push(alpha as u64);
                stack.push(iv.lo as u64);
                stack.push(iv.hi as u64);
            }
            stack.push(y[c] as u64);
            stack.push(cur_depth as u64 + 1);
            stacked_arrays += 1;
        }
        stats.watermark = stats.watermark.max(stacked_arrays);
        ready.clear();
        for &c in &w {
            y[c] = 0;
        }
        w.clear();

        if stack.is_empty() {
            break;
        }
        cur_depth = stack.pop().unwrap() as usize;
        let z = stack.pop().unwrap() as usize;
        let base = stack.len() - 3 * z;
        cur.clear();
        for k in 0..z {
            let alpha = stack[base + 3 * k] as u32;
            let lo = stack[base + 3 * k + 1] as usize;
            let hi = stack[base + 3 * k + 2] as usize;
            cur.push((alpha, Interval::new(lo, hi)));
        }
        stack.truncate(base);
        stacked_arrays -= 1;
    }

    stats
}

/// `ceil(log2(n))` for `n >= 1`.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::naive::internal_nodes_naive;
    use crate::sufsort::bwt;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn wavelet_of(text: &[u32]) -> WaveletTree {
        let b = bwt(text);
        let sigma = text.iter().copied().max().unwrap() as u64 + 1;
        let syms: Vec<u64> = b.iter().map(|&s| s as u64).collect();
        WaveletTree::from_symbols(&syms, sigma)
    }

    /// Runs the enumerator with full structural checking of every visit and
    /// compares the visited (lo, hi, depth) set against the naive oracle.
    fn check_text(text: &[u32]) -> EnumStats {
        let n = text.len();
        let wt = wavelet_of(text);
        let c_arr = c_array(&wt);
        let mut seen: Vec<(usize, usize, usize)> = Vec::new();
        let stats = enumerate_internal(&wt, &c_arr, &mut |node| {
            assert!(node.depth == 0 || node.children.len() >= 2);
            let mut expect_lo = node.interval.lo;
            for win in node.children.windows(2) {
                assert!(win[0].0 < win[1].0, "child labels not increasing");
            }
            for &(_, sub) in node.children {
                assert_eq!(sub.lo, expect_lo, "children do not abut");
                assert!(sub.hi >= sub.lo);
                expect_lo = sub.hi + 1;
            }
            assert_eq!(expect_lo, node.interval.hi + 1, "children do not cover");
            seen.push((node.interval.lo, node.interval.hi, node.depth));
        });
        assert_eq!(stats.visits, seen.len());

        let mut expected: Vec<(usize, usize, usize)> = internal_nodes_naive(text)
            .iter()
            .map(|nd| (nd.lo, nd.hi, nd.depth))
            .collect();
        expected.sort_unstable();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen, expected, "text {text:?}");

        let sigma = wt.sigma() as usize;
        assert!(stats.watermark <= sigma * ceil_log2(n).max(1));
        assert!(stats.weiner_links <= 4 * n);
        stats
    }

    fn dense(bytes: &[u8]) -> Vec<u32> {
        crate::text::dense_syms(bytes)
    }

    #[test]
    fn banana_nodes_and_root_children() {
        let text = dense(b"banana");
        let wt = wavelet_of(&text);
        let c_arr = c_array(&wt);
        let mut root_children: Vec<(u32, Interval)> = Vec::new();
        let mut intervals: Vec<(usize, usize)> = Vec::new();
        let stats = enumerate_internal(&wt, &c_arr, &mut |node| {
            if node.depth == 0 {
                root_children = node.children.to_vec();
            }
            intervals.push((node.interval.lo, node.interval.hi));
        });
        assert_eq!(stats.visits, 4);
        intervals.sort_unstable();
        assert_eq!(intervals, vec![(1, 7), (2, 4), (3, 4), (6, 7)]);
        // $ a b n over the dense remap of "banana$".
        assert_eq!(
            root_children,
            vec![
                (0, Interval::new(1, 1)),
                (1, Interval::new(2, 4)),
                (2, Interval::new(5, 5)),
                (3, Interval::new(6, 7)),
            ]
        );
        check_text(&text);
    }

    #[test]
    fn sentinel_only() {
        let text = vec![0u32];
        let wt = wavelet_of(&text);
        let c_arr = c_array(&wt);
        let mut visits = 0usize;
        let mut kids = 0usize;
        let stats = enumerate_internal(&wt, &c_arr, &mut |node| {
            visits += 1;
            kids = node.children.len();
        });
        assert_eq!(visits, 1);
        assert_eq!(kids, 1);
        assert_eq!(stats.watermark, 0);
    }

    #[test]
    fn unary_chain() {
        for k in [2usize, 3, 7, 31, 64] {
            let mut text = vec![1u32; k];
            text.push(0);
            let stats = check_text(&text);
            assert_eq!(stats.visits, k);
            assert!(stats.watermark <= 2 * ceil_log2(k + 1));
        }
    }

    #[test]
    fn exhaustive_small_alphabets() {
        for sigma in 1u32..=3 {
            for n in 1usize..=8 {
                let total = (sigma as usize).pow(n as u32);
                for code in 0..total {
                    let mut text = Vec::with_capacity(n + 1);
                    let mut x = code;
                    for _ in 0..n {
                        text.push(1 + (x % sigma as usize) as u32);
                        x /= sigma as usize;
                    }
                    text.push(0);
                    check_text(&text);
                }
            }
        }
    }

    #[test]
    fn random_larger_texts() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xe7);
        for _ in 0..60 {
            let n = rng.gen_range(1..=512);
            let sigma = rng.gen_range(1..=16u32);
            let mut text: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=sigma)).collect();
            text.push(0);
            check_text(&text);
        }
    }

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(1024), 10);
        assert_eq!(ceil_log2(1025), 11);
    }
}
