//! Tree topologies as balanced parentheses.
//!
//! A tree on t nodes is a sequence of 2t parentheses (depth-first, an
//! opening parenthesis per node on the way down, a closing one on the way
//! up) stored in a [`BitVector`] with 1 = open. Node handles are 1-based
//! positions of opening parentheses.
//!
//! Navigation runs on the excess function E(i) = opens - closes among the
//! first i+1 parentheses. On top of the raw sequence sit three small
//! directories: the bit vector's own rank/select tables, a range min-max
//! heap over 2048-bit blocks (absolute min and max of E per block range,
//! i32 each) for excess searches, and cumulative counts of the leaf
//! pattern "()" per 1024 bits with sparse select samples, mapping leaves
//! to their ranks in constant time. Together they stay under 17% of the
//! parenthesis payload.

use crate::bitvec::{select_in_word, BitVector, BitVectorBuilder};
use crate::interval::Interval;
use crate::serial::*;
use crate::{Error, Result};
use std::io::{Read, Write};

const K: usize = 2048;
const LEAF_BLOCK: usize = 1024;
const LEAF_BLOCK_W: usize = LEAF_BLOCK / 64;
const LEAF_SAMPLE: usize = 4096;

const NEG_INF: i32 = i32::MIN / 2;
const POS_INF: i32 = i32::MAX / 2;

// Per-byte excess summaries, bits scanned LSB first (= position order).
// TOTAL: excess change across the byte.
// FMIN/FMAX: min/max of the running excess after 1..=8 bits.
// BMIN/BMAX: min/max, over suffix lengths 0..=7, of minus the excess
//            change of that suffix (the offsets seen when scanning the
//            byte right to left from its last position).
struct ByteTables {
    total: [i8; 256],
    fmin: [i8; 256],
    fmax: [i8; 256],
    bmin: [i8; 256],
    bmax: [i8; 256],
}

const fn build_byte_tables() -> ByteTables {
    let mut t = ByteTables {
        total: [0; 256],
        fmin: [0; 256],
        fmax: [0; 256],
        bmin: [0; 256],
        bmax: [0; 256],
    };
    let mut b = 0usize;
    while b < 256 {
        let mut e: i8 = 0;
        let mut mn: i8 = 127;
        let mut mx: i8 = -128;
        let mut i = 0;
        while i < 8 {
            e += if (b >> i) & 1 == 1 { 1 } else { -1 };
            if e < mn {
                mn = e;
            }
            if e > mx {
                mx = e;
            }
            i += 1;
        }
        t.total[b] = e;
        t.fmin[b] = mn;
        t.fmax[b] = mx;
        // Backward: offsets relative to the excess at the byte's last bit.
        let mut off: i8 = 0;
        let mut bmn: i8 = 0;
        let mut bmx: i8 = 0;
        let mut s = 7;
        while s > 0 {
            off -= if (b >> s) & 1 == 1 { 1 } else { -1 };
            if off < bmn {
                bmn = off;
            }
            if off > bmx {
                bmx = off;
            }
            s -= 1;
        }
        t.bmin[b] = bmn;
        t.bmax[b] = bmx;
        b += 1;
    }
    t
}

static TABLES: ByteTables = build_byte_tables();

#[derive(Debug, Clone)]
pub struct BpTree {
    bp: BitVector,
    /// Heap of absolute excess minima/maxima over 2048-bit blocks;
    /// 1-based, leaves at `leaf_base..`.
    mins: Vec<i32>,
    maxs: Vec<i32>,
    leaf_base: usize,
    /// "()" starts before each 1024-bit block.
    leaf_cums: Vec<u32>,
    leaf_hints: Vec<u32>,
    num_leaves: usize,
}

pub type NodeId = usize;

impl BpTree {
    /// Builds from a parenthesis sequence, `true` = open. The sequence
    /// must be one balanced tree (non-empty, excess positive throughout
    /// and zero exactly at the end).
    pub fn from_bools(parens: &[bool]) -> Result<Self> {
        let mut b = BitVectorBuilder::with_capacity(parens.len());
        for &p in parens {
            b.push(p);
        }
        Self::from_bitvector(b.build())
    }

    pub fn from_bitvector(bp: BitVector) -> Result<Self> {
        let len = bp.len();
        if len == 0 || len % 2 != 0 {
            return Err(Error::Corrupt("parenthesis sequence has odd length".into()));
        }
        if len >= 1 << 31 {
            return Err(Error::Corrupt("parenthesis sequence too long".into()));
        }

        let nb = (len + K - 1) / K;
        let leaf_cap = nb.next_power_of_two();
        let mut mins = vec![POS_INF; 2 * leaf_cap];
        let mut maxs = vec![NEG_INF; 2 * leaf_cap];
        let words = bp.words();
        let mut e: i32 = 0;
        for blk in 0..nb {
            let mut mn = POS_INF;
            let mut mx = NEG_INF;
            let bit_end = ((blk + 1) * K).min(len);
            let mut pos = blk * K;
            while pos < bit_end {
                let take = (bit_end - pos).min(8);
                if take == 8 {
                    let byte = ((words[pos >> 6] >> (pos & 63)) & 0xff) as usize;
                    mn = mn.min(e + TABLES.fmin[byte] as i32);
                    mx = mx.max(e + TABLES.fmax[byte] as i32);
                    e += TABLES.total[byte] as i32;
                } else {
                    for p in pos..bit_end {
                        e += if (words[p >> 6] >> (p & 63)) & 1 == 1 { 1 } else { -1 };
                        mn = mn.min(e);
                        mx = mx.max(e);
                    }
                }
                pos += take;
            }
            mins[leaf_cap + blk] = mn;
            maxs[leaf_cap + blk] = mx;
        }
        if e != 0 {
            return Err(Error::Corrupt("parentheses do not balance".into()));
        }
        for node in (1..leaf_cap).rev() {
            mins[node] = mins[2 * node].min(mins[2 * node + 1]);
            maxs[node] = maxs[2 * node].max(maxs[2 * node + 1]);
        }
        if mins[1] < 0 {
            return Err(Error::Corrupt("parentheses dip below the root".into()));
        }
        if !bp.get(0) {
            return Err(Error::Corrupt("parentheses must start with an open".into()));
        }
        // One tree, not a forest: the excess must first touch 0 at the
        // very end. Find the first block whose minimum reaches 0 and scan
        // just that block.
        {
            let first_zero_block = (0..nb)
                .find(|&blk| mins[leaf_cap + blk] <= 0)
                .expect("a balanced sequence ends at excess 0");
            let start = first_zero_block * K;
            let mut ee: i32 = if start == 0 {
                0
            } else {
                2 * bp.rank1(start) as i32 - start as i32
            };
            let mut first_zero = None;
            for p in start..((first_zero_block + 1) * K).min(len) {
                ee += if bp.get(p) { 1 } else { -1 };
                if ee == 0 {
                    first_zero = Some(p);
                    break;
                }
            }
            if first_zero != Some(len - 1) {
                return Err(Error::Corrupt("parentheses form more than one tree".into()));
            }
        }

        // Leaf directory over the pattern "()".
        let n_leaf_blocks = (len + LEAF_BLOCK - 1) / LEAF_BLOCK;
        let mut leaf_cums = Vec::with_capacity(n_leaf_blocks + 1);
        let mut leaf_hints = Vec::new();
        let mut total = 0u32;
        let start_mask = |wi: usize| -> u64 {
            let w = words[wi];
            let next = if wi + 1 < words.len() { words[wi + 1] } else { 0 };
            w & !((w >> 1) | (next << 63))
        };
        let mut next_hint = 1u32;
        for lb in 0..n_leaf_blocks {
            leaf_cums.push(total);
            let w0 = lb * LEAF_BLOCK_W;
            let w1 = (w0 + LEAF_BLOCK_W).min(words.len());
            for wi in w0..w1 {
                total += start_mask(wi).count_ones();
            }
            while next_hint <= total {
                leaf_hints.push(lb as u32);
                next_hint += LEAF_SAMPLE as u32;
            }
        }
        leaf_cums.push(total);
        leaf_hints.push(n_leaf_blocks.saturating_sub(1) as u32);

        Ok(BpTree {
            bp,
            mins,
            maxs,
            leaf_base: leaf_cap,
            leaf_cums,
            leaf_hints,
            num_leaves: total as usize,
        })
    }

    /// The raw parenthesis bits, `true` = open.
    pub fn parens(&self) -> &BitVector {
        &self.bp
    }

    #[inline]
    pub fn num_parens(&self) -> usize {
        self.bp.len()
    }

    #[inline]
    pub fn num_nodes(&self) -> usize {
        self.bp.len() / 2
    }

    #[inline]
    pub fn num_leaves(&self) -> usize {
        self.num_leaves
    }

    #[inline]
    pub fn root(&self) -> NodeId {
        1
    }

    /// Excess after the paren at 0-based position `i`.
    #[inline]
    fn excess(&self, i: usize) -> i32 {
        (2 * self.bp.rank1(i + 1)) as i32 - (i as i32 + 1)
    }

    /// Checks that `v` is a node handle (1-based open position).
    #[inline]
    fn check_node(&self, v: NodeId) -> usize {
        assert!(
            v >= 1 && v <= self.bp.len() && self.bp.get(v - 1),
            "{v} is not a node handle"
        );
        v - 1
    }

    #[inline]
    pub fn is_leaf(&self, v: NodeId) -> bool {
        let p = self.check_node(v);
        !self.bp.get(p + 1)
    }

    /// 1-based position of the close parenthesis matching node `v`.
    pub fn close_pos(&self, v: NodeId) -> usize {
        let p = self.check_node(v);
        self.fwd_search(p, -1).expect("balanced sequence always closes") + 1
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        let p = self.check_node(v);
        if p == 0 {
            return None;
        }
        Some(self.bwd_search(p, -2).map(|q| q + 1).unwrap_or(0) + 1)
    }

    /// Number of edges from the root (root has depth 0).
    #[inline]
    pub fn depth(&self, v: NodeId) -> usize {
        let p = self.check_node(v);
        (self.excess(p) - 1) as usize
    }

    /// Length of the longest downward path from `v`.
    pub fn height(&self, v: NodeId) -> usize {
        let p = self.check_node(v);
        let c = self.fwd_search(p, -1).unwrap();
        (self.max_excess(p, c) - self.excess(p)) as usize
    }

    pub fn lca(&self, x: NodeId, y: NodeId) -> NodeId {
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        let pa = self.check_node(a);
        let pb = self.check_node(b);
        if a == b {
            return a;
        }
        let ca = self.fwd_search(pa, -1).unwrap();
        if pb < ca {
            return a;
        }
        let (_, m) = self.min_excess_pos(ca, pb);
        // The paren after a leftmost minimum inside (a, b] is an open;
        // its parent encloses both nodes.
        self.bwd_search(m + 1, -2).map(|q| q + 1).unwrap_or(0) + 1
    }

    /// Ancestor of `v` at depth `d` (`d <= depth(v)`; `d == depth(v)`
    /// returns `v` itself).
    pub fn level_ancestor(&self, v: NodeId, d: usize) -> NodeId {
        let p = self.check_node(v);
        let dv = (self.excess(p) - 1) as usize;
        assert!(d <= dv, "depth {d} below node of depth {dv}");
        if d == dv {
            return v;
        }
        if d == 0 {
            return 1;
        }
        // Largest q < p with excess d; the node opening right after it
        // has depth d and spans v.
        let q = self
            .bwd_search(p, d as i32 - self.excess(p))
            .expect("ancestor exists at every smaller depth");
        q + 2
    }

    /// `k`-th child (1-based), if any.
    pub fn child(&self, v: NodeId, k: usize) -> Option<NodeId> {
        assert!(k >= 1);
        let p = self.check_node(v);
        if !self.bp.get(p + 1) {
            return None;
        }
        let mut c = p + 1;
        for _ in 1..k {
            let close = self.fwd_search(c, -1).unwrap();
            c = close + 1;
            if c >= self.bp.len() || !self.bp.get(c) {
                return None;
            }
        }
        Some(c + 1)
    }

    pub fn next_sibling(&self, v: NodeId) -> Option<NodeId> {
        let p = self.check_node(v);
        let c = self.fwd_search(p, -1).unwrap() + 1;
        if c < self.bp.len() && self.bp.get(c) {
            Some(c + 1)
        } else {
            None
        }
    }

    pub fn degree(&self, v: NodeId) -> usize {
        let mut n = 0;
        let mut c = self.child(v, 1);
        while let Some(u) = c {
            n += 1;
            c = self.next_sibling(u);
        }
        n
    }

    /// Number of "()" leaves starting strictly before 0-based position `p`.
    fn leaves_before(&self, p: usize) -> usize {
        let lb = p / LEAF_BLOCK;
        let mut cnt = self.leaf_cums[lb] as usize;
        let w_end = p >> 6;
        for wi in lb * LEAF_BLOCK_W..w_end {
            cnt += self.start_mask(wi).count_ones() as usize;
        }
        let tail = p & 63;
        if tail != 0 {
            cnt += (self.start_mask(w_end) & ((1u64 << tail) - 1)).count_ones() as usize;
        }
        cnt
    }

    #[inline]
    fn start_mask(&self, wi: usize) -> u64 {
        let words = self.bp.words();
        let w = words[wi];
        let next = if wi + 1 < words.len() { words[wi + 1] } else { 0 };
        w & !((w >> 1) | (next << 63))
    }

    /// Rank (1-based) of the leftmost leaf in `v`'s subtree.
    pub fn leftmost_leaf_rank(&self, v: NodeId) -> usize {
        let p = self.check_node(v);
        self.leaves_before(p) + 1
    }

    /// Rank (1-based) of the rightmost leaf in `v`'s subtree.
    pub fn rightmost_leaf_rank(&self, v: NodeId) -> usize {
        let c = self.close_pos(v);
        self.leaves_before(c - 1)
    }

    /// Both leaf ranks at once.
    pub fn leaf_span(&self, v: NodeId) -> Interval {
        Interval::new(self.leftmost_leaf_rank(v), self.rightmost_leaf_rank(v))
    }

    /// Node handle of the `k`-th leaf (1-based, left to right).
    pub fn leaf_node(&self, k: usize) -> NodeId {
        assert!(
            k >= 1 && k <= self.num_leaves,
            "leaf {k} of {}",
            self.num_leaves
        );
        let q = (k - 1) / LEAF_SAMPLE;
        let mut lo = self.leaf_hints[q] as usize;
        let mut hi = self.leaf_hints[q + 1] as usize;
        while lo < hi {
            let mid = lo + (hi - lo + 1) / 2;
            if (self.leaf_cums[mid] as usize) < k {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let mut rem = (k - self.leaf_cums[lo] as usize) as u32;
        let w0 = lo * LEAF_BLOCK_W;
        let w1 = (w0 + LEAF_BLOCK_W).min(self.bp.words().len());
        for wi in w0..w1 {
            let mask = self.start_mask(wi);
            let c = mask.count_ones();
            if rem <= c {
                return wi * 64 + select_in_word(mask, rem) as usize + 1;
            }
            rem -= c;
        }
        unreachable!("leaf directory out of sync");
    }

    // ------------ excess searches ------------

    #[inline]
    fn heap_covers(&self, node: usize, t: i32) -> bool {
        self.mins[node] <= t && t <= self.maxs[node]
    }

    /// Smallest position > `i` (0-based) with excess exactly
    /// `excess(i) + d`.
    pub fn fwd_search(&self, i: usize, d: i32) -> Option<usize> {
        let t = self.excess(i) + d;
        let len = self.bp.len();
        let block = i / K;
        let bend = ((block + 1) * K - 1).min(len - 1);
        if i < bend {
            if let Some(p) = self.fwd_scan(i + 1, bend, self.excess(i), t) {
                return Some(p);
            }
        }
        let mut node = self.leaf_base + block;
        while node > 1 {
            if node & 1 == 0 && self.heap_covers(node + 1, t) {
                return Some(self.descend_fwd(node + 1, t));
            }
            node >>= 1;
        }
        None
    }

    /// Largest position < `i` with excess exactly `excess(i) + d`.
    pub fn bwd_search(&self, i: usize, d: i32) -> Option<usize> {
        let t = self.excess(i) + d;
        let block = i / K;
        if i > block * K {
            let e = self.excess(i - 1);
            if let Some(p) = self.bwd_scan(i - 1, block * K, e, t) {
                return Some(p);
            }
        }
        let mut node = self.leaf_base + block;
        while node > 1 {
            if node & 1 == 1 && self.heap_covers(node - 1, t) {
                return Some(self.descend_bwd(node - 1, t));
            }
            node >>= 1;
        }
        None
    }

    fn descend_fwd(&self, mut node: usize, t: i32) -> usize {
        while node < self.leaf_base {
            node *= 2;
            if !self.heap_covers(node, t) {
                node += 1;
            }
        }
        let blk = node - self.leaf_base;
        let from = blk * K;
        let e = if from == 0 { 0 } else { self.excess(from - 1) };
        let to = ((blk + 1) * K - 1).min(self.bp.len() - 1);
        self.fwd_scan(from, to, e, t)
            .expect("block advertised an excess value it does not contain")
    }

    fn descend_bwd(&self, mut node: usize, t: i32) -> usize {
        while node < self.leaf_base {
            node = 2 * node + 1;
            if !self.heap_covers(node, t) {
                node -= 1;
            }
        }
        let blk = node - self.leaf_base;
        let from = ((blk + 1) * K - 1).min(self.bp.len() - 1);
        let e = self.excess(from);
        self.bwd_scan(from, blk * K, e, t)
            .expect("block advertised an excess value it does not contain")
    }

    /// First position in `from..=to` (same word-aligned region) with
    /// excess `t`, entering with `e = excess(from - 1)`.
    fn fwd_scan(&self, from: usize, to: usize, mut e: i32, t: i32) -> Option<usize> {
        let words = self.bp.words();
        let mut p = from;
        while p <= to && p & 7 != 0 {
            e += if (words[p >> 6] >> (p & 63)) & 1 == 1 { 1 } else { -1 };
            if e == t {
                return Some(p);
            }
            p += 1;
        }
        while p + 8 <= to + 1 {
            let byte = ((words[p >> 6] >> (p & 63)) & 0xff) as usize;
            if e + (TABLES.fmin[byte] as i32) <= t && t <= e + (TABLES.fmax[byte] as i32) {
                for q in p..p + 8 {
                    e += if (words[q >> 6] >> (q & 63)) & 1 == 1 { 1 } else { -1 };
                    if e == t {
                        return Some(q);
                    }
                }
                unreachable!("byte summary out of sync");
            }
            e += TABLES.total[byte] as i32;
            p += 8;
        }
        while p <= to {
            e += if (words[p >> 6] >> (p & 63)) & 1 == 1 { 1 } else { -1 };
            if e == t {
                return Some(p);
            }
            p += 1;
        }
        None
    }

    /// Largest position in `to..=from` (scanning down from `from`) with
    /// excess `t`, entering with `e = excess(from)`.
    fn bwd_scan(&self, from: usize, to: usize, mut e: i32, t: i32) -> Option<usize> {
        let words = self.bp.words();
        let mut p = from as isize;
        let to = to as isize;
        while p >= to && (p & 7) != 7 {
            if e == t {
                return Some(p as usize);
            }
            e -= if (words[(p >> 6) as usize] >> (p & 63)) & 1 == 1 { 1 } else { -1 };
            p -= 1;
        }
        while p - 7 >= to {
            // p is byte-aligned at the top: p & 7 == 7
            let byte = ((words[(p >> 6) as usize] >> ((p & 63) - 7)) & 0xff) as usize;
            if e + (TABLES.bmin[byte] as i32) <= t && t <= e + (TABLES.bmax[byte] as i32) {
                for _ in 0..8 {
                    if e == t {
                        return Some(p as usize);
                    }
                    e -= if (words[(p >> 6) as usize] >> (p & 63)) & 1 == 1 { 1 } else { -1 };
                    p -= 1;
                }
                unreachable!("byte summary out of sync");
            }
            e -= TABLES.total[byte] as i32;
            p -= 8;
        }
        while p >= to {
            if e == t {
                return Some(p as usize);
            }
            e -= if (words[(p >> 6) as usize] >> (p & 63)) & 1 == 1 { 1 } else { -1 };
            p -= 1;
        }
        None
    }

    /// Leftmost position of the minimum excess on `l..=r` (0-based).
    fn min_excess_pos(&self, l: usize, r: usize) -> (i32, usize) {
        debug_assert!(l <= r);
        let bl = l / K;
        let br = r / K;
        if bl == br {
            return self.scan_min(l, r);
        }
        let (mut best, mut pos) = self.scan_min(l, (bl + 1) * K - 1);
        if bl + 1 <= br - 1 {
            if let Some((v, blk)) = self.heap_min_blocks(bl + 1, br - 1) {
                if v < best {
                    let (vv, pp) = self.scan_min(blk * K, (blk + 1) * K - 1);
                    debug_assert_eq!(vv, v);
                    best = vv;
                    pos = pp;
                }
            }
        }
        let (v2, p2) = self.scan_min(br * K, r);
        if v2 < best {
            best = v2;
            pos = p2;
        }
        (best, pos)
    }

    /// Minimum stored excess over leaf blocks `b1..=b2`, with the
    /// leftmost block attaining it.
    fn heap_min_blocks(&self, b1: usize, b2: usize) -> Option<(i32, usize)> {
        fn go(
            mins: &[i32],
            leaf_base: usize,
            node: usize,
            lo: usize,
            hi: usize,
            b1: usize,
            b2: usize,
        ) -> Option<(i32, usize)> {
            if b2 < lo || hi < b1 {
                return None;
            }
            if b1 <= lo && hi <= b2 {
                if mins[node] >= POS_INF {
                    return None;
                }
                // descend to the leftmost leaf attaining the min
                let mut n = node;
                let (mut nlo, mut nhi) = (lo, hi);
                while n < leaf_base {
                    let mid = (nlo + nhi) / 2;
                    if mins[2 * n] == mins[n] {
                        n *= 2;
                        nhi = mid;
                    } else {
                        n = 2 * n + 1;
                        nlo = mid + 1;
                    }
                }
                return Some((mins[n], n - leaf_base));
            }
            let mid = (lo + hi) / 2;
            let left = go(mins, leaf_base, 2 * node, lo, mid, b1, b2);
            let right = go(mins, leaf_base, 2 * node + 1, mid + 1, hi, b1, b2);
            match (left, right) {
                (Some(a), Some(b)) => Some(if b.0 < a.0 { b } else { a }),
                (a, b) => a.or(b),
            }
        }
        go(
            &self.mins,
            self.leaf_base,
            1,
            0,
            self.leaf_base - 1,
            b1,
            b2,
        )
    }

    /// Leftmost minimum of excess over positions `l..=r` within one block
    /// span (bytewise).
    fn scan_min(&self, l: usize, r: usize) -> (i32, usize) {
        let words = self.bp.words();
        let mut e = if l == 0 { 0 } else { self.excess(l - 1) };
        let mut best = POS_INF;
        let mut pos = l;
        let mut p = l;
        while p <= r && p & 7 != 0 {
            e += if (words[p >> 6] >> (p & 63)) & 1 == 1 { 1 } else { -1 };
            if e < best {
                best = e;
                pos = p;
            }
            p += 1;
        }
        while p + 8 <= r + 1 {
            let byte = ((words[p >> 6] >> (p & 63)) & 0xff) as usize;
            if e + (TABLES.fmin[byte] as i32) < best {
                for q in p..p + 8 {
                    e += if (words[q >> 6] >> (q & 63)) & 1 == 1 { 1 } else { -1 };
                    if e < best {
                        best = e;
                        pos = q;
                    }
                }
            } else {
                e += TABLES.total[byte] as i32;
            }
            p += 8;
        }
        while p <= r {
            e += if (words[p >> 6] >> (p & 63)) & 1 == 1 { 1 } else { -1 };
            if e < best {
                best = e;
                pos = p;
            }
            p += 1;
        }
        (best, pos)
    }

    /// Maximum excess over `l..=r`.
    fn max_excess(&self, l: usize, r: usize) -> i32 {
        let bl = l / K;
        let br = r / K;
        if bl == br {
            return self.scan_max(l, r);
        }
        let mut best = self.scan_max(l, (bl + 1) * K - 1);
        if bl + 1 <= br - 1 {
            best = best.max(self.heap_max_blocks(bl + 1, br - 1));
        }
        best.max(self.scan_max(br * K, r))
    }

    fn heap_max_blocks(&self, b1: usize, b2: usize) -> i32 {
        fn go(maxs: &[i32], node: usize, lo: usize, hi: usize, b1: usize, b2: usize) -> i32 {
            if b2 < lo || hi < b1 {
                return NEG_INF;
            }
            if b1 <= lo && hi <= b2 {
                return maxs[node];
            }
            let mid = (lo + hi) / 2;
            go(maxs, 2 * node, lo, mid, b1, b2).max(go(maxs, 2 * node + 1, mid + 1, hi, b1, b2))
        }
        go(&self.maxs, 1, 0, self.leaf_base - 1, b1, b2)
    }

    fn scan_max(&self, l: usize, r: usize) -> i32 {
        let words = self.bp.words();
        let mut e = if l == 0 { 0 } else { self.excess(l - 1) };
        let mut best = NEG_INF;
        let mut p = l;
        while p <= r && p & 7 != 0 {
            e += if (words[p >> 6] >> (p & 63)) & 1 == 1 { 1 } else { -1 };
            best = best.max(e);
            p += 1;
        }
        while p + 8 <= r + 1 {
            let byte = ((words[p >> 6] >> (p & 63)) & 0xff) as usize;
            best = best.max(e + TABLES.fmax[byte] as i32);
            e += TABLES.total[byte] as i32;
            p += 8;
        }
        while p <= r {
            e += if (words[p >> 6] >> (p & 63)) & 1 == 1 { 1 } else { -1 };
            best = best.max(e);
            p += 1;
        }
        best
    }

    pub fn payload_bits(&self) -> usize {
        self.bp.len()
    }

    pub fn size_bytes(&self) -> usize {
        self.bp.size_bytes()
            + self.mins.len() * 4
            + self.maxs.len() * 4
            + self.leaf_cums.len() * 4
            + self.leaf_hints.len() * 4
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_magic(w, b"SBP1")?;
        self.bp.write_to(w)?;
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        expect_magic(r, b"SBP1", "parenthesis tree")?;
        let bp = BitVector::read_from(r)?;
        Self::from_bitvector(bp)
    }
}
