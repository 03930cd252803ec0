//! Suffix sorting by induced copying, and the transforms derived from it.
//!
//! [`suffix_array`] implements the linear-time SA-IS algorithm over u32
//! sequences whose last symbol is a unique minimum. [`rotation_bwt`]
//! lifts it to sorted-rotation transforms of arbitrary sequences with
//! pairwise distinct rotations by suffix-sorting the doubled sequence.

const EMPTY: u32 = u32::MAX;

/// Suffix array (0-based suffix start positions, in lexicographic order)
/// of `text`. The last symbol must be a strict, unique minimum.
pub fn suffix_array(text: &[u32]) -> Vec<u32> {
    let n = text.len();
    assert!(n >= 1, "text must at least contain its terminator");
    assert!(n < EMPTY as usize, "text too long for u32 suffix array");
    let last = *text.last().unwrap();
    debug_assert!(
        text[..n - 1].iter().all(|&c| c > last),
        "last symbol must be a unique minimum"
    );
    let sigma = *text.iter().max().unwrap() as usize + 1;
    let mut sa = vec![EMPTY; n];
    sais(text, &mut sa, sigma);
    sa
}

fn sais(text: &[u32], sa: &mut [u32], sigma: usize) {
    let n = text.len();
    if n == 1 {
        sa[0] = 0;
        return;
    }

    let mut is_s = vec![false; n];
    is_s[n - 1] = true;
    for i in (0..n - 1).rev() {
        is_s[i] = text[i] < text[i + 1] || (text[i] == text[i + 1] && is_s[i + 1]);
    }

    let mut counts = vec![0u32; sigma];
    for &c in text {
        counts[c as usize] += 1;
    }

    // Rough pass: park the LMS suffixes at their bucket tails in text
    // order and induce. Afterwards the LMS suffixes appear in the order
    // of their LMS substrings.
    sa.fill(EMPTY);
    {
        let mut tails = bucket_tails(&counts);
        for i in 1..n {
            if is_s[i] && !is_s[i - 1] {
                let c = text[i] as usize;
                tails[c] -= 1;
                sa[tails[c] as usize] = i as u32;
            }
        }
    }
    induce(text, sa, &is_s, &counts);

    let mut lms_sorted: Vec<u32> = sa
        .iter()
        .copied()
        .filter(|&v| {
            let v = v as usize;
            v > 0 && is_s[v] && !is_s[v - 1]
        })
        .collect();

    // Name the LMS substrings in sorted order; ties get equal names.
    let n_lms = lms_sorted.len();
    if n_lms > 1 {
        let mut name_of = vec![EMPTY; n];
        let mut name = 0u32;
        name_of[lms_sorted[0] as usize] = 0;
        for w in lms_sorted.windows(2) {
            if !lms_substrings_equal(text, &is_s, w[0] as usize, w[1] as usize) {
                name += 1;
            }
            name_of[w[1] as usize] = name;
        }
        let num_names = name as usize + 1;
        if num_names < n_lms {
            // Ties remain: sort the reduced string of names recursively.
            let lms_in_text: Vec<u32> = (1..n)
                .filter(|&i| is_s[i] && !is_s[i - 1])
                .map(|i| i as u32)
                .collect();
            let reduced: Vec<u32> = lms_in_text
                .iter()
                .map(|&i| name_of[i as usize])
                .collect();
            let mut sub_sa = vec![EMPTY; n_lms];
            sais(&reduced, &mut sub_sa, num_names);
            for (k, &r) in sub_sa.iter().enumerate() {
                lms_sorted[k] = lms_in_text[r as usize];
            }
        }
    }

    // Final pass: park the now fully sorted LMS suffixes and induce.
    sa.fill(EMPTY);
    {
        let mut tails = bucket_tails(&counts);
        for &v in lms_sorted.iter().rev() {
            let c = text[v as usize] as usize;
            tails[c] -= 1;
            sa[tails[c] as usize] = v;
        }
    }
    induce(text, sa, &is_s, &counts);
}

fn bucket_heads(counts: &[u32]) -> Vec<u32> {
    let mut heads = Vec::with_capacity(counts.len());
    let mut sum = 0u32;
    for &c in counts {
        heads.push(sum);
        sum += c;
    }
    heads
}

fn bucket_tails(counts: &[u32]) -> Vec<u32> {
    let mut tails = Vec::with_capacity(counts.len());
    let mut sum = 0u32;
    for &c in counts {
        sum += c;
        tails.push(sum);
    }
    tails
}

fn induce(text: &[u32], sa: &mut [u32], is_s: &[bool], counts: &[u32]) {
    let n = text.len();
    let mut heads = bucket_heads(counts);
    for i in 0..n {
        let v = sa[i];
        if v != EMPTY && v > 0 {
            let j = (v - 1) as usize;
            if !is_s[j] {
                let c = text[j] as usize;
                sa[heads[c] as usize] = j as u32;
                heads[c] += 1;
            }
        }
    }
    let mut tails = bucket_tails(counts);
    for i in (0..n).rev() {
        let v = sa[i];
        if v != EMPTY && v > 0 {
            let j = (v - 1) as usize;
            if is_s[j] {
                let c = text[j] as usize;
                tails[c] -= 1;
                sa[tails[c] as usize] = j as u32;
            }
        }
    }
}

fn lms_substrings_equal(text: &[u32], is_s: &[bool], a: usize, b: usize) -> bool {
    let n = text.len();
    if a == b {
        return true;
    }
    // The terminator's LMS substring is the length-1 minimum, equal to
    // nothing else.
    if a == n - 1 || b == n - 1 {
        return false;
    }
    let mut k = 0;
    loop {
        if text[a + k] != text[b + k] || is_s[a + k] != is_s[b + k] {
            return false;
        }
        if k > 0 && is_s[a + k] && !is_s[a + k - 1] {
            // Both ended on their closing LMS position with equal content.
            return true;
        }
        k += 1;
        if a + k >= n || b + k >= n {
            return false;
        }
    }
}

/// Burrows-Wheeler transform from a suffix array: row i holds the symbol
/// cyclically preceding suffix `sa[i]`.
pub fn bwt_from_sa(text: &[u32], sa: &[u32]) -> Vec<u32> {
    let n = text.len();
    sa.iter()
        .map(|&p| {
            if p == 0 {
                text[n - 1]
            } else {
                text[(p - 1) as usize]
            }
        })
        .collect()
}

/// BWT of `text` (terminator included) by suffix sorting.
pub fn bwt(text: &[u32]) -> Vec<u32> {
    bwt_from_sa(text, &suffix_array(text))
}

/// Sorted-rotation BWT of an arbitrary sequence whose rotations are
/// pairwise distinct. No terminator is assumed or added to the input;
/// internally the doubled sequence gets a fresh minimum appended, and
/// only suffixes starting in the first copy are kept, which orders the
/// rotations correctly because distinct rotations differ within their
/// first `len` symbols.
pub fn rotation_bwt(blocks: &[u64]) -> Vec<u64> {
    let m = blocks.len();
    if m == 0 {
        return Vec::new();
    }
    if m == 1 {
        return vec![blocks[0]];
    }
    let mut sorted: Vec<u64> = blocks.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let name = |b: u64| (sorted.binary_search(&b).unwrap() + 1) as u32;
    let mut doubled = Vec::with_capacity(2 * m + 1);
    for _ in 0..2 {
        doubled.extend(blocks.iter().map(|&b| name(b)));
    }
    doubled.push(0);
    let sa = suffix_array(&doubled);
    let mut out = Vec::with_capacity(m);
    for &p in &sa {
        let p = p as usize;
        if p < m {
            out.push(blocks[(p + m - 1) % m]);
        }
    }
    debug_assert_eq!(out.len(), m);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::naive;
    use crate::text::dense_syms;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn banana_suffix_array_and_bwt() {
        let t = dense_syms(b"banana"); // b=2 a=1 n=3, terminator 0
        let sa = suffix_array(&t);
        // Suffixes sorted: $, a$, ana$, anana$, banana$, na$, nana$
        assert_eq!(sa, vec![6, 5, 3, 1, 0, 4, 2]);
        let b = bwt(&t);
        // annb$aa
        assert_eq!(b, vec![1, 3, 3, 2, 0, 1, 1]);
    }

    #[test]
    fn two_letter_bwts() {
        // ab$ -> b$a
        assert_eq!(bwt(&dense_syms(b"ab")), vec![2, 0, 1]);
        // ba$ -> ab$
        assert_eq!(bwt(&dense_syms(b"ba")), vec![1, 2, 0]);
    }

    #[test]
    fn matches_naive_on_classics() {
        for s in [
            &b"banana"[..],
            b"mississippi",
            b"abracadabra",
            b"aaaaaaaa",
            b"abababab",
            b"abaababaabaab",
            b"a",
            b"",
            b"zyxwvu",
            b"aabbaabbaa",
        ] {
            let t = dense_syms(s);
            assert_eq!(
                suffix_array(&t),
                naive::suffix_array_naive(&t),
                "suffix array of {:?}",
                String::from_utf8_lossy(s)
            );
            assert_eq!(bwt(&t), naive::bwt_naive(&t));
        }
    }

    #[test]
    fn matches_naive_on_random_strings() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for sigma in [1u32, 2, 3, 4, 8, 26] {
            for _ in 0..60 {
                let len = rng.gen_range(0..200);
                let bytes: Vec<u8> = (0..len).map(|_| b'a' + rng.gen_range(0..sigma) as u8).collect();
                let t = dense_syms(&bytes);
                assert_eq!(suffix_array(&t), naive::suffix_array_naive(&t));
            }
        }
    }

    #[test]
    fn deep_lms_recursion() {
        // Strings engineered to force several recursion levels.
        let mut s = Vec::new();
        for i in 0..2000u32 {
            s.push((i % 2) + 1);
            if i % 3 == 0 {
                s.push(3);
            }
        }
        s.push(0);
        assert_eq!(suffix_array(&s), naive::suffix_array_naive(&s));
    }

    #[test]
    fn rotation_bwt_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        let mut tested = 0;
        while tested < 80 {
            let m = rng.gen_range(1..40);
            let blocks: Vec<u64> = (0..m).map(|_| rng.gen_range(0..6)).collect();
            if !naive::rotations_distinct(&blocks) {
                continue;
            }
            tested += 1;
            assert_eq!(rotation_bwt(&blocks), naive::rotation_bwt_naive(&blocks));
        }
        // A text with its terminator is a special case of distinct rotations.
        let t = dense_syms(b"banana");
        let blocks: Vec<u64> = t.iter().map(|&c| c as u64).collect();
        let rot: Vec<u32> = rotation_bwt(&blocks).iter().map(|&b| b as u32).collect();
        assert_eq!(rot, bwt(&t));
    }

    #[test]
    fn rotation_bwt_sparse_values() {
        // Values far apart exercise the densification step.
        let blocks = vec![1u64 << 40, 7, 1 << 40, 9, 7, 3];
        assert!(naive::rotations_distinct(&blocks));
        assert_eq!(rotation_bwt(&blocks), naive::rotation_bwt_naive(&blocks));
    }
}
