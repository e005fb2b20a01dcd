//! Canonical forms for group elements, computed by two independent
//! algorithms.
//!
//! Every element of a partially commutative group has a well-defined set of
//! geodesic (minimum-length) words representing it, and all of them are
//! connected by swaps of adjacent commuting letters. The canonical form used
//! throughout this crate is the *serial-descending* normal form: among all
//! geodesics of an element, the one in which every letter is emitted as
//! early as its non-commuting predecessors allow, preferring the largest
//! serial number first. Concretely, a reduced letter sequence is canonical
//! iff no letter can be moved to an earlier position — across a block of
//! letters it commutes with — where it would precede a letter of smaller
//! serial. In particular adjacent commuting letters always appear with the
//! larger serial first, while adjacent non-commuting letters may appear in
//! either order (their order is part of the group element).
//!
//! Two algorithms compute it:
//!
//! * [`Canonicalizer::rewrite`] — ordered insertion. Letters are folded in
//!   left to right; each letter slides leftward over the maximal suffix of
//!   letters it commutes with, cancels against an exposed inverse, and
//!   otherwise lands at the position dictated by serial order. This is the
//!   rewriting system (cancel inverse pairs / merge syllables / move
//!   commuting letters down the serial order) executed in a disciplined
//!   order, so each step strictly decreases the pair (length, serial
//!   potential) and the fixpoint is reached in one pass per letter.
//! * [`Canonicalizer::stack`] — a two-phase construction on per-generator
//!   stacks. Phase one pushes letters onto one stack per base generator,
//!   marking every non-commuting neighbor stack with an anonymous blocker;
//!   a letter landing on its exposed inverse cancels both. Phase two builds
//!   the dependence DAG of the surviving letters and linearizes it
//!   greedily, always emitting the available letter of largest serial.
//!
//! The two routes share no code beyond the commutation oracle; their
//! agreement on random and exhaustively enumerated words is one of the main
//! correctness gates of the crate.

use std::collections::BinaryHeap;
use std::collections::HashMap;

use crate::group::{BaseGen, GroupSpec, Sign, SignedGen, Word};
use crate::{Error, Result};

/// A maximal run of one base generator in a canonical word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub base: BaseGen,
    /// Nonzero signed exponent.
    pub exp: i32,
}

/// The canonical form of a group element: its syllable sequence.
///
/// Invariants (maintained by the constructors in this module):
/// adjacent syllables have distinct bases, every exponent is nonzero, and
/// the base sequence is in serial-descending normal order as described in
/// the module docs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NormalForm {
    syllables: Vec<Syllable>,
}

impl NormalForm {
    /// The identity element.
    pub fn identity() -> NormalForm {
        NormalForm::default()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    /// Irreducible (geodesic) length: sum of absolute exponents.
    pub fn irreducible_length(&self) -> u64 {
        self.syllables
            .iter()
            .map(|s| s.exp.unsigned_abs() as u64)
            .sum()
    }

    /// The base-generator sequence of the syllables.
    pub fn base_seq(&self) -> Vec<BaseGen> {
        self.syllables.iter().map(|s| s.base).collect()
    }

    /// Expand back into a letter-by-letter word.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.irreducible_length() as usize);
        for s in &self.syllables {
            let sign = if s.exp > 0 { Sign::Pos } else { Sign::Neg };
            for _ in 0..s.exp.unsigned_abs() {
                letters.push(SignedGen::new(s.base, sign));
            }
        }
        Word(letters)
    }

    /// Sort key used for deterministic enumeration output: the sequence of
    /// (serial, axis rank, exponent) triples.
    pub fn sort_key(&self, spec: &GroupSpec) -> Vec<(u32, u8, i32)> {
        self.syllables
            .iter()
            .map(|s| {
                (
                    spec.serial(s.base),
                    s.base.axis().map_or(0, |a| a.rank()),
                    s.exp,
                )
            })
            .collect()
    }
}

impl std::fmt::Display for NormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("e");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if s.exp == 1 {
                write!(f, "{}", s.base)?;
            } else {
                write!(f, "{}^{}", s.base, s.exp)?;
            }
        }
        Ok(())
    }
}

/// Which canonicalization algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CanonicalAlgo {
    Rewrite,
    Stack,
}

impl CanonicalAlgo {
    pub const BOTH: [CanonicalAlgo; 2] = [CanonicalAlgo::Rewrite, CanonicalAlgo::Stack];

    pub fn name(self) -> &'static str {
        match self {
            CanonicalAlgo::Rewrite => "rewrite",
            CanonicalAlgo::Stack => "stack",
        }
    }
}

/// Dense internal letter: base index into the context alphabet plus a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Lt {
    base: u32,
    sign: Sign,
}

/// Per-generator stack entry for the stack algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Entry {
    /// A surviving letter; `pos` is its index in the input word.
    Letter { pos: u32, sign: Sign },
    /// An anonymous marker left by a non-commuting neighbor.
    Block,
}

/// Precomputed alphabet tables for one [`GroupSpec`]; reuse this across many
/// canonicalizations (breadth-first search does) to avoid rebuilding the
/// commutation matrix.
pub struct Canonicalizer {
    spec: GroupSpec,
    bases: Vec<BaseGen>,
    index: HashMap<BaseGen, u32>,
    serial: Vec<u32>,
    /// Row-major `blocks` matrix over dense base indices.
    blocks: Vec<bool>,
    /// For each base, the distinct bases that do not commute with it.
    neighbors: Vec<Vec<u32>>,
}

impl Canonicalizer {
    pub fn new(spec: GroupSpec) -> Canonicalizer {
        let bases = spec.base_gens();
        let a = bases.len();
        let mut index = HashMap::with_capacity(a);
        for (i, &b) in bases.iter().enumerate() {
            index.insert(b, i as u32);
        }
        let serial: Vec<u32> = bases.iter().map(|&b| spec.serial(b)).collect();
        let mut blocks = vec![false; a * a];
        let mut neighbors = vec![Vec::new(); a];
        for i in 0..a {
            for j in 0..a {
                let blk = spec.blocks(bases[i], bases[j]);
                blocks[i * a + j] = blk;
                if blk && i != j {
                    neighbors[i].push(j as u32);
                }
            }
        }
        Canonicalizer {
            spec,
            bases,
            index,
            serial,
            blocks,
            neighbors,
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    #[inline]
    fn blk(&self, a: u32, b: u32) -> bool {
        self.blocks[a as usize * self.bases.len() + b as usize]
    }

    fn word_to_lts(&self, w: &Word) -> Result<Vec<Lt>> {
        let mut out = Vec::with_capacity(w.len());
        for g in &w.0 {
            let base = *self
                .index
                .get(&g.base)
                .ok_or_else(|| Error::GeneratorOutOfRange(format!(
                    "{} does not belong to the {}(n={}) alphabet",
                    g.base,
                    self.spec.flavor(),
                    self.spec.n()
                )))?;
            out.push(Lt { base, sign: g.sign });
        }
        Ok(out)
    }

    fn nf_to_lts(&self, nf: &NormalForm) -> Vec<Lt> {
        let mut out = Vec::with_capacity(nf.irreducible_length() as usize);
        for s in nf.syllables() {
            let base = self.index[&s.base];
            let sign = if s.exp > 0 { Sign::Pos } else { Sign::Neg };
            for _ in 0..s.exp.unsigned_abs() {
                out.push(Lt { base, sign });
            }
        }
        out
    }

    /// Merge a canonical letter sequence into syllables.
    fn lts_to_nf(&self, lts: &[Lt]) -> NormalForm {
        let mut syllables: Vec<Syllable> = Vec::new();
        for lt in lts {
            let base = self.bases[lt.base as usize];
            match syllables.last_mut() {
                Some(s) if s.base == base => {
                    s.exp += lt.sign.to_i32();
                    assert!(
                        s.exp != 0,
                        "canonicalizer produced an uncancelled inverse pair"
                    );
                }
                _ => syllables.push(Syllable {
                    base,
                    exp: lt.sign.to_i32(),
                }),
            }
        }
        NormalForm { syllables }
    }

    // ------------------------------------------------------------------
    // Algorithm 1: ordered insertion (the rewriting route).
    // ------------------------------------------------------------------

    /// Insert one letter into a canonical letter sequence, keeping it
    /// canonical. The letter slides left over the maximal commuting suffix;
    /// if the first non-commuting letter it meets is its own inverse the
    /// pair cancels (and the letters that sat between them are re-inserted,
    /// which can only reorder them); otherwise the letter lands before the
    /// first smaller-serial position it can reach.
    fn insert_lt(&self, w: &mut Vec<Lt>, g: Lt) {
        let mut last_block: Option<usize> = None;
        for p in (0..w.len()).rev() {
            if self.blk(w[p].base, g.base) {
                last_block = Some(p);
                break;
            }
        }
        if let Some(p) = last_block {
            if w[p].base == g.base && w[p].sign != g.sign {
                // Cancellation: drop the blocker and the new letter, then
                // restore canonical order for the letters that followed it.
                let tail: Vec<Lt> = w.drain(p..).skip(1).collect();
                for t in tail {
                    self.insert_lt(w, t);
                }
                return;
            }
        }
        let start = last_block.map_or(0, |p| p + 1);
        let gs = self.serial[g.base as usize];
        let mut at = w.len();
        for (p, lt) in w.iter().enumerate().take(w.len()).skip(start) {
            if self.serial[lt.base as usize] < gs {
                at = p;
                break;
            }
        }
        w.insert(at, g);
    }

    /// Canonical form via ordered insertion.
    pub fn rewrite(&self, w: &Word) -> Result<NormalForm> {
        let lts = self.word_to_lts(w)?;
        let mut acc: Vec<Lt> = Vec::with_capacity(lts.len());
        for lt in lts {
            self.insert_lt(&mut acc, lt);
        }
        Ok(self.lts_to_nf(&acc))
    }

    // ------------------------------------------------------------------
    // Algorithm 2: per-generator stacks plus greedy DAG linearization.
    // ------------------------------------------------------------------

    /// Phase one of the stack algorithm: free-plus-commutation reduction.
    /// Returns the surviving letters in input order (a geodesic word for
    /// the same element).
    fn stack_reduce(&self, lts: &[Lt]) -> Vec<Lt> {
        let a = self.bases.len();
        let mut stacks: Vec<Vec<Entry>> = vec![Vec::new(); a];
        let mut alive = vec![false; lts.len()];
        for (pos, &lt) in lts.iter().enumerate() {
            let b = lt.base as usize;
            let cancels = matches!(
                stacks[b].last(),
                Some(Entry::Letter { sign, .. }) if *sign == lt.sign.flip()
            );
            if cancels {
                let top = stacks[b].pop().unwrap();
                if let Entry::Letter { pos: p0, .. } = top {
                    alive[p0 as usize] = false;
                }
                for &nb in &self.neighbors[b] {
                    let e = stacks[nb as usize].pop();
                    assert!(
                        matches!(e, Some(Entry::Block)),
                        "stack canonicalizer: expected a blocker on a neighbor stack"
                    );
                }
            } else {
                stacks[b].push(Entry::Letter {
                    pos: pos as u32,
                    sign: lt.sign,
                });
                alive[pos] = true;
                for &nb in &self.neighbors[b] {
                    stacks[nb as usize].push(Entry::Block);
                }
            }
        }
        lts.iter()
            .enumerate()
            .filter(|&(pos, _)| alive[pos])
            .map(|(_, &lt)| lt)
            .collect()
    }

    /// Phase two: linearize the dependence DAG of a geodesic word, always
    /// emitting the available letter with the largest serial.
    fn linearize(&self, reduced: &[Lt]) -> Vec<Lt> {
        let m = reduced.len();
        let mut indegree = vec![0usize; m];
        let mut out_edges: Vec<Vec<u32>> = vec![Vec::new(); m];
        for i in 0..m {
            for j in (i + 1)..m {
                if self.blk(reduced[i].base, reduced[j].base) {
                    out_edges[i].push(j as u32);
                    indegree[j] += 1;
                }
            }
        }
        // Max-heap on (serial, later input position). Serial ties between
        // simultaneously available letters are impossible (equal serials
        // always block each other), so the position tiebreak is inert; it
        // is kept to make the order a total one.
        let mut heap: BinaryHeap<(u32, u32)> = BinaryHeap::new();
        for (i, deg) in indegree.iter().enumerate() {
            if *deg == 0 {
                heap.push((self.serial[reduced[i].base as usize], i as u32));
            }
        }
        let mut out = Vec::with_capacity(m);
        while let Some((_, i)) = heap.pop() {
            let i = i as usize;
            out.push(reduced[i]);
            for &j in &out_edges[i] {
                let j = j as usize;
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    heap.push((self.serial[reduced[j].base as usize], j as u32));
                }
            }
        }
        assert_eq!(out.len(), m, "dependence DAG linearization dropped letters");
        out
    }

    /// Canonical form via the stack construction.
    pub fn stack(&self, w: &Word) -> Result<NormalForm> {
        let lts = self.word_to_lts(w)?;
        let reduced = self.stack_reduce(&lts);
        let ordered = self.linearize(&reduced);
        Ok(self.lts_to_nf(&ordered))
    }

    /// Dispatch on the algorithm choice.
    pub fn canonicalize(&self, w: &Word, algo: CanonicalAlgo) -> Result<NormalForm> {
        match algo {
            CanonicalAlgo::Rewrite => self.rewrite(w),
            CanonicalAlgo::Stack => self.stack(w),
        }
    }

    /// Multiply a canonical form by one signed generator on the right and
    /// re-canonicalize. For the insertion algorithm this is a single
    /// incremental insert; the stack algorithm reprocesses the whole word
    /// (it has no incremental step, which keeps the two routes independent).
    pub fn extend(&self, nf: &NormalForm, g: SignedGen, algo: CanonicalAlgo) -> Result<NormalForm> {
        self.spec.check_base(g.base)?;
        let base = self.index[&g.base];
        match algo {
            CanonicalAlgo::Rewrite => {
                let mut lts = self.nf_to_lts(nf);
                self.insert_lt(&mut lts, Lt { base, sign: g.sign });
                Ok(self.lts_to_nf(&lts))
            }
            CanonicalAlgo::Stack => {
                let mut lts = self.nf_to_lts(nf);
                lts.push(Lt { base, sign: g.sign });
                let reduced = self.stack_reduce(&lts);
                Ok(self.lts_to_nf(&self.linearize(&reduced)))
            }
        }
    }
}

/// One-shot canonical form via the insertion (rewriting) algorithm.
pub fn canonicalize_rewrite(spec: &GroupSpec, w: &Word) -> Result<NormalForm> {
    Canonicalizer::new(*spec).rewrite(w)
}

/// One-shot canonical form via the stack algorithm.
pub fn canonicalize_stack(spec: &GroupSpec, w: &Word) -> Result<NormalForm> {
    Canonicalizer::new(*spec).stack(w)
}

/// Do two words represent the same group element?
pub fn words_equal(spec: &GroupSpec, a: &Word, b: &Word) -> Result<bool> {
    let c = Canonicalizer::new(*spec);
    Ok(c.rewrite(a)? == c.rewrite(b)?)
}

/// Geodesic length of the element represented by a word.
pub fn irreducible_length(spec: &GroupSpec, w: &Word) -> Result<u64> {
    Ok(canonicalize_rewrite(spec, w)?.irreducible_length())
}
