//! Reference implementations by direct definition.
//!
//! Everything here favours obviousness over speed: suffixes are sorted
//! by comparing slices, trees are built by grouping, substrings are
//! enumerated outright. Tests hold the real structures to these, and the
//! `verify` command recomputes small inputs through them.
//!
//! All texts are dense-alphabet sequences (see [`crate::text`]) ending
//! with the unique terminator 0 unless a function says otherwise.

use std::collections::{HashMap, HashSet};

/// Suffix array by sorting suffix slices.
pub fn suffix_array_naive(text: &[u32]) -> Vec<u32> {
    let mut sa: Vec<u32> = (0..text.len() as u32).collect();
    sa.sort_by(|&a, &b| text[a as usize..].cmp(&text[b as usize..]));
    sa
}

/// BWT by sorting the rotations themselves (independent of suffix arrays).
pub fn bwt_naive(text: &[u32]) -> Vec<u32> {
    let n = text.len();
    let rot = |i: usize| text[i..].iter().chain(text[..i].iter());
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| rot(a).cmp(rot(b)));
    idx.iter().map(|&i| text[(i + n - 1) % n]).collect()
}

pub fn rotations_distinct(blocks: &[u64]) -> bool {
    let m = blocks.len();
    let rot = |i: usize| -> Vec<u64> {
        blocks[i..]
            .iter()
            .chain(blocks[..i].iter())
            .copied()
            .collect()
    };
    let mut seen = HashSet::new();
    (0..m).all(|i| seen.insert(rot(i)))
}

/// Sorted-rotation BWT by materializing and sorting the rotations.
pub fn rotation_bwt_naive(blocks: &[u64]) -> Vec<u64> {
    let m = blocks.len();
    let mut rots: Vec<Vec<u64>> = (0..m)
        .map(|i| {
            blocks[i..]
                .iter()
                .chain(blocks[..i].iter())
                .copied()
                .collect()
        })
        .collect();
    rots.sort();
    rots.iter().map(|r| *r.last().unwrap()).collect()
}

pub fn lcp_len(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Longest common prefix between each suffix (by text position, 1-based
/// index i stored at `out[i-1]`) and its lexicographic predecessor
/// suffix; the lexicographically first suffix gets 0.
pub fn plcp_naive(text: &[u32]) -> Vec<usize> {
    let n = text.len();
    let sa = suffix_array_naive(text);
    let mut out = vec![0usize; n];
    for r in 1..n {
        let a = sa[r] as usize;
        let b = sa[r - 1] as usize;
        out[a] = lcp_len(&text[a..], &text[b..]);
    }
    out[sa[0] as usize] = 0;
    out
}

/// An internal suffix tree node: its suffix-array row interval (1-based,
/// inclusive) and its string depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NaiveNode {
    pub lo: usize,
    pub hi: usize,
    pub depth: usize,
}

/// All internal nodes (including the root at depth 0) of the suffix tree,
/// sorted by (lo, hi).
pub fn internal_nodes_naive(text: &[u32]) -> Vec<NaiveNode> {
    let n = text.len();
    let sa = suffix_array_naive(text);
    let mut out = Vec::new();
    if n == 1 {
        out.push(NaiveNode {
            lo: 1,
            hi: 1,
            depth: 0,
        });
        return out;
    }
    rec_nodes(text, &sa, 0, n - 1, &mut out);
    out.sort();
    out
}

fn rec_nodes(text: &[u32], sa: &[u32], lo: usize, hi: usize, out: &mut Vec<NaiveNode>) {
    if lo == hi {
        return;
    }
    let d = lcp_len(&text[sa[lo] as usize..], &text[sa[hi] as usize..]);
    out.push(NaiveNode {
        lo: lo + 1,
        hi: hi + 1,
        depth: d,
    });
    let mut start = lo;
    while start <= hi {
        let c = text[sa[start] as usize + d];
        let mut end = start;
        while end < hi && text[sa[end + 1] as usize + d] == c {
            end += 1;
        }
        rec_nodes(text, sa, start, end, out);
        start = end + 1;
    }
}

/// Balanced-parentheses encoding of the full suffix tree (internal nodes
/// and leaves), children in lexicographic order, `true` for an opening
/// parenthesis. A one-symbol text yields a root with a single leaf.
pub fn bp_naive(text: &[u32]) -> Vec<bool> {
    let n = text.len();
    let sa = suffix_array_naive(text);
    let mut out = Vec::with_capacity(4 * n);
    if n == 1 {
        return vec![true, true, false, false];
    }
    rec_bp(text, &sa, 0, n - 1, &mut out);
    out
}

fn rec_bp(text: &[u32], sa: &[u32], lo: usize, hi: usize, out: &mut Vec<bool>) {
    out.push(true);
    if lo == hi {
        out.push(false);
        return;
    }
    let d = lcp_len(&text[sa[lo] as usize..], &text[sa[hi] as usize..]);
    let mut start = lo;
    while start <= hi {
        let c = text[sa[start] as usize + d];
        let mut end = start;
        while end < hi && text[sa[end + 1] as usize + d] == c {
            end += 1;
        }
        rec_bp(text, sa, start, end, out);
        start = end + 1;
    }
    out.push(false);
}

/// Suffix-array row interval of the rows whose suffixes start with `pat`
/// (1-based, inclusive; empty pattern covers every row). `(1, 0)` when
/// there is no match.
pub fn interval_of_naive(text: &[u32], pat: &[u32]) -> (usize, usize) {
    let sa = suffix_array_naive(text);
    let mut lo = usize::MAX;
    let mut hi = 0;
    for (r, &p) in sa.iter().enumerate() {
        let suf = &text[p as usize..];
        if suf.len() >= pat.len() && &suf[..pat.len()] == pat {
            if lo == usize::MAX {
                lo = r + 1;
            }
            hi = r + 1;
        }
    }
    if lo == usize::MAX {
        (1, 0)
    } else {
        (lo, hi)
    }
}

/// All 1-based starting positions of `pat` in the text, ascending.
/// Patterns never contain the terminator, so matches stay inside the
/// content.
pub fn occurrences_naive(text: &[u32], pat: &[u32]) -> Vec<usize> {
    if pat.is_empty() {
        return (1..=text.len()).collect();
    }
    (0..text.len().saturating_sub(pat.len() - 1))
        .filter(|&i| &text[i..i + pat.len()] == pat)
        .map(|i| i + 1)
        .collect()
}

/// Maximal repeats of the content: substrings occurring at least twice
/// that are both left- and right-maximal. The predecessor of position 1
/// counts as a unique virtual symbol (equivalently, the terminator seen
/// cyclically). Returns (substring, occurrence count), sorted.
pub fn maximal_repeats_naive(text: &[u32]) -> Vec<(Vec<u32>, usize)> {
    let n = text.len();
    let m = n - 1; // content length
    let mut occs: HashMap<&[u32], Vec<usize>> = HashMap::new();
    for i in 0..m {
        for j in i + 1..=m {
            occs.entry(&text[i..j]).or_default().push(i);
        }
    }
    let mut out = Vec::new();
    for (w, positions) in occs {
        if positions.len() < 2 {
            continue;
        }
        let followers: HashSet<u32> = positions.iter().map(|&p| text[p + w.len()]).collect();
        // Position 0 gets the cyclic predecessor (the terminator), which
        // is unique and therefore always distinct.
        let preds: HashSet<u32> = positions
            .iter()
            .map(|&p| if p == 0 { text[n - 1] } else { text[p - 1] })
            .collect();
        if followers.len() >= 2 && preds.len() >= 2 {
            out.push((w.to_vec(), positions.len()));
        }
    }
    out.sort();
    out
}

/// Number of distinct content k-mers for every k in `1..=content_len`;
/// `out[k-1]` is the count for k.
pub fn distinct_kmer_counts_naive(text: &[u32]) -> Vec<usize> {
    let m = text.len() - 1;
    let mut out = Vec::with_capacity(m);
    for k in 1..=m {
        let set: HashSet<&[u32]> = (0..=m - k).map(|i| &text[i..i + k]).collect();
        out.push(set.len());
    }
    out
}

/// Maximal exact matches between two texts over a shared dense alphabet:
/// triples (pos1, pos2, length), 1-based, with length >= min_len, where
/// the match can be extended in neither direction (text boundaries count
/// as non-extendable). Sorted.
pub fn mems_naive(t1: &[u32], t2: &[u32], min_len: usize) -> Vec<(usize, usize, usize)> {
    let m1 = t1.len() - 1;
    let m2 = t2.len() - 1;
    let mut out = Vec::new();
    for i in 0..m1 {
        for j in 0..m2 {
            if t1[i] != t2[j] {
                continue;
            }
            if i > 0 && j > 0 && t1[i - 1] == t2[j - 1] {
                continue; // not left-maximal
            }
            let mut l = 0;
            while i + l < m1 && j + l < m2 && t1[i + l] == t2[j + l] {
                l += 1;
            }
            if l >= min_len {
                out.push((i + 1, j + 1, l));
            }
        }
    }
    out.sort();
    out
}
