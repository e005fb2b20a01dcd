//! Randomized structural properties of the canonicalization layer, checked
//! with proptest. These complement the unit suites: instead of pinned
//! examples they assert invariants that must hold for *every* word.

use std::collections::{HashSet, VecDeque};

use lofree::count::is_normal_order;
use lofree::{CanonicalAlgo, Canonicalizer, Flavor, GroupSpec, SignedGen, Word};
use proptest::prelude::*;

/// A random word of up to `max_len` letters over the full signed alphabet.
fn word_strategy(flavor: Flavor, n: u16, max_len: usize) -> impl Strategy<Value = Word> {
    let gens = GroupSpec::new(flavor, n).unwrap().signed_gens();
    prop::collection::vec(0..gens.len(), 0..=max_len)
        .prop_map(move |ixs| Word(ixs.into_iter().map(|i| gens[i]).collect()))
}

fn canon(flavor: Flavor, n: u16) -> Canonicalizer {
    Canonicalizer::new(GroupSpec::new(flavor, n).unwrap())
}

/// All words reachable from `w` by adjacent commuting swaps and adjacent
/// inverse-pair cancellations. Every move preserves the group element and
/// never lengthens the word, and a non-geodesic word always admits a
/// cancellation after finitely many swaps, so the minimum length over this
/// closure is the geodesic length.
fn closure_min_length(spec: &GroupSpec, w: &Word) -> u64 {
    let start: Vec<SignedGen> = w.0.clone();
    let mut seen: HashSet<Vec<SignedGen>> = HashSet::new();
    let mut queue: VecDeque<Vec<SignedGen>> = VecDeque::new();
    let mut min = start.len() as u64;
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        min = min.min(cur.len() as u64);
        for i in 0..cur.len().saturating_sub(1) {
            let (a, b) = (cur[i], cur[i + 1]);
            if b == a.inverse() {
                let mut nxt = cur.clone();
                nxt.drain(i..=i + 1);
                if seen.insert(nxt.clone()) {
                    queue.push_back(nxt);
                }
            }
            if a.base != b.base && spec.commutes(a.base, b.base).unwrap() {
                let mut nxt = cur.clone();
                nxt.swap(i, i + 1);
                if seen.insert(nxt.clone()) {
                    queue.push_back(nxt);
                }
            }
        }
    }
    min
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    /// The two canonicalization algorithms agree on arbitrary 1D words.
    #[test]
    fn dual_agreement_1d(w in word_strategy(Flavor::Lf1, 5, 24)) {
        let c = canon(Flavor::Lf1, 5);
        prop_assert_eq!(c.rewrite(&w).unwrap(), c.stack(&w).unwrap());
    }

    /// The two canonicalization algorithms agree on arbitrary 2D words.
    #[test]
    fn dual_agreement_2d(w in word_strategy(Flavor::Lf2, 3, 20)) {
        let c = canon(Flavor::Lf2, 3);
        prop_assert_eq!(c.rewrite(&w).unwrap(), c.stack(&w).unwrap());
    }

    /// Canonicalization is idempotent: the normal form's own spelling
    /// canonicalizes to itself, under either algorithm.
    #[test]
    fn round_trip_is_identity(w in word_strategy(Flavor::Lf2, 2, 18)) {
        let c = canon(Flavor::Lf2, 2);
        for algo in CanonicalAlgo::BOTH {
            let nf = c.canonicalize(&w, algo).unwrap();
            prop_assert_eq!(c.canonicalize(&nf.to_word(), algo).unwrap(), nf);
        }
    }

    /// Reduction removes letters two at a time, so irreducible length has
    /// the same parity as the input length.
    #[test]
    fn length_parity_preserved(w in word_strategy(Flavor::Lf1, 4, 25)) {
        let c = canon(Flavor::Lf1, 4);
        let nf = c.rewrite(&w).unwrap();
        prop_assert_eq!(nf.irreducible_length() % 2, (w.0.len() as u64) % 2);
        prop_assert!(nf.irreducible_length() <= w.0.len() as u64);
    }

    /// A word followed by its reversed inverse collapses to the identity.
    #[test]
    fn word_times_inverse_is_identity(w in word_strategy(Flavor::Lf2, 3, 14)) {
        let c = canon(Flavor::Lf2, 3);
        let mut letters = w.0.clone();
        letters.extend(w.0.iter().rev().map(|g| g.inverse()));
        let nf = c.stack(&Word(letters)).unwrap();
        prop_assert!(nf.is_identity());
    }

    /// Swapping one adjacent commuting pair never changes the normal form.
    #[test]
    fn commuting_swap_invariance(
        w in word_strategy(Flavor::Lf2, 2, 16),
        pos in 0usize..16,
    ) {
        let c = canon(Flavor::Lf2, 2);
        if w.0.len() >= 2 {
            let i = pos % (w.0.len() - 1);
            let (a, b) = (w.0[i], w.0[i + 1]);
            if c.spec().commutes(a.base, b.base).unwrap() {
                let mut swapped = w.0.clone();
                swapped.swap(i, i + 1);
                prop_assert_eq!(
                    c.rewrite(&w).unwrap(),
                    c.rewrite(&Word(swapped)).unwrap()
                );
            }
        }
    }

    /// Splicing a cancelling pair g·g⁻¹ into any position never changes
    /// the normal form.
    #[test]
    fn inserted_inverse_pair_is_invisible(
        w in word_strategy(Flavor::Lf1, 5, 16),
        pos in 0usize..17,
        gen_ix in 0usize..10,
    ) {
        let c = canon(Flavor::Lf1, 5);
        let gens = c.spec().signed_gens();
        let g = gens[gen_ix % gens.len()];
        let i = pos % (w.0.len() + 1);
        let mut padded = w.0.clone();
        padded.splice(i..i, [g, g.inverse()]);
        prop_assert_eq!(c.rewrite(&w).unwrap(), c.rewrite(&Word(padded)).unwrap());
    }

    /// The base sequence of every normal form is in normal order: each
    /// adjacent pair is an allowed transition of the counting recursion.
    /// This ties the canonicalizer to the transfer-matrix alphabet.
    #[test]
    fn normal_forms_are_normal_ordered(w in word_strategy(Flavor::Lf2, 3, 18)) {
        let c = canon(Flavor::Lf2, 3);
        let nf = c.stack(&w).unwrap();
        prop_assert!(is_normal_order(c.spec(), &nf.base_seq()).unwrap());
    }

    /// Irreducible length equals the true geodesic length, witnessed by
    /// exhaustive closure under swaps and cancellations.
    #[test]
    fn irreducible_length_is_geodesic(w in word_strategy(Flavor::Lf2, 2, 6)) {
        let c = canon(Flavor::Lf2, 2);
        let nf = c.rewrite(&w).unwrap();
        prop_assert_eq!(nf.irreducible_length(), closure_min_length(c.spec(), &w));
    }
}

/// Exhaustive version of the geodesic-length check for every word of
/// length at most 3 on the 2x2 lattice (16^3 spellings plus shorter).
#[test]
fn geodesic_length_exhaustive_short_words() {
    let c = canon(Flavor::Lf2, 2);
    let gens = c.spec().signed_gens();
    let mut words: Vec<Word> = vec![Word(Vec::new())];
    for len in 1..=3usize {
        let mut ixs = vec![0usize; len];
        loop {
            words.push(Word(ixs.iter().map(|&i| gens[i]).collect()));
            let mut k = len;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                ixs[k] += 1;
                if ixs[k] < gens.len() {
                    break;
                }
                ixs[k] = 0;
            }
            if ixs.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    assert_eq!(words.len(), 1 + 16 + 256 + 4096);
    for w in &words {
        let nf = c.rewrite(w).unwrap();
        assert_eq!(
            nf.irreducible_length(),
            closure_min_length(c.spec(), w),
            "word {:?}",
            w.0
        );
    }
}
