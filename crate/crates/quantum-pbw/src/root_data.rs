//! ADE Cartan data, positive roots, reduced words of the longest Weyl
//! element, braid moves on words, convex root sequences, quiver orientations
//! and adaptedness, and Kostant partitions.
//!
//! Vertex numbering conventions (1-based):
//!
//! * `A_n`: the path `1 - 2 - ... - n`;
//! * `D_n`: the path `1 - 2 - ... - (n-2)` with both `n-1` and `n` attached
//!   to `n-2` (so the center of `D_4` is vertex 2);
//! * `E_n` (n = 6, 7, 8): the path `1 - 3 - 4 - 5 - 6 (- 7 - 8)` with vertex
//!   2 attached to vertex 4.

use crate::error::RootError;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

/// The simply-laced Cartan types.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum CartanType {
    A,
    D,
    E,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A => write!(f, "A"),
            CartanType::D => write!(f, "D"),
            CartanType::E => write!(f, "E"),
        }
    }
}

/// A fixed ADE Dynkin diagram: vertex set `I = {1, ..., rank}` together with
/// the Cartan matrix / symmetric pairing `(alpha_i, alpha_j)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CartanData {
    ctype: CartanType,
    rank: usize,
    edges: Vec<(usize, usize)>,
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.coords[i - 1] = 1;
        w
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// If this is a simple root `alpha_i`, return `i`.
    pub fn as_simple(&self) -> Option<usize> {
        let mut found = None;
        for (k, &c) in self.coords.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(k + 1),
                _ => return None,
            }
        }
        found
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl CartanData {
    pub fn new(ctype: CartanType, rank: usize) -> Self {
        let edges: Vec<(usize, usize)> = match ctype {
            CartanType::A => {
                assert!(rank >= 1);
                (1..rank).map(|i| (i, i + 1)).collect()
            }
            CartanType::D => {
                assert!(rank >= 4, "D_n requires rank >= 4");
                (1..rank - 2)
                    .map(|i| (i, i + 1))
                    .chain([(rank - 2, rank - 1), (rank - 2, rank)])
                    .collect()
            }
            CartanType::E => {
                assert!((6..=8).contains(&rank), "E_n requires rank in 6..=8");
                let mut e: Vec<(usize, usize)> = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
                if rank >= 7 {
                    e.push((6, 7));
                }
                if rank >= 8 {
                    e.push((7, 8));
                }
                e
            }
        };
        CartanData { ctype, rank, edges }
    }

    pub fn ctype(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Undirected Dynkin edges, each listed once with smaller vertex first.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// The symmetric pairing `(alpha_i, alpha_j)` (Cartan matrix entry).
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if self.adjacent(i, j) {
            -1
        } else {
            0
        }
    }

    /// The pairing `(beta, alpha_i)` extended linearly.
    pub fn pair_with_simple(&self, beta: &Weight, i: usize) -> i64 {
        (1..=self.rank)
            .map(|j| self.pairing(i, j) * beta.coords[j - 1])
            .sum()
    }

    /// The symmetric pairing `(beta, gamma)` extended bilinearly.
    pub fn pair(&self, beta: &Weight, gamma: &Weight) -> i64 {
        (1..=self.rank)
            .map(|i| beta.coords[i - 1] * self.pair_with_simple(gamma, i))
            .sum()
    }

    /// Simple reflection `s_i(beta) = beta - (beta, alpha_i) alpha_i`.
    pub fn reflect_weight(&self, i: usize, beta: &Weight) -> Weight {
        let c = self.pair_with_simple(beta, i);
        let mut out = beta.clone();
        out.coords[i - 1] -= c;
        out
    }

    /// All positive roots, by breadth-first reflection closure from the
    /// simple roots (deterministic order).
    pub fn positive_roots(&self) -> Vec<Weight> {
        let mut seen = BTreeSet::new();
        let mut order = Vec::new();
        let mut queue: VecDeque<Weight> =
            (1..=self.rank).map(|i| Weight::simple(self.rank, i)).collect();
        while let Some(beta) = queue.pop_front() {
            if !seen.insert(beta.clone()) {
                continue;
            }
            order.push(beta.clone());
            for i in 1..=self.rank {
                let r = self.reflect_weight(i, &beta);
                if r.is_nonnegative() && !seen.contains(&r) {
                    queue.push_back(r);
                }
            }
        }
        order
    }

    /// Number of positive roots = length of the longest Weyl element.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots().len()
    }
}

/// The action of a Weyl group element on the root lattice, stored as the
/// images of the simple roots.
#[derive(Clone, PartialEq, Eq)]
struct WeylAction {
    images: Vec<Weight>,
}

impl WeylAction {
    fn identity(c: &CartanData) -> Self {
        WeylAction {
            images: (1..=c.rank).map(|i| Weight::simple(c.rank, i)).collect(),
        }
    }

    fn apply_simple(&self, i: usize) -> &Weight {
        &self.images[i - 1]
    }

    /// Right-multiply by `s_j`: the new action is `w s_j`.
    fn mul_right(&self, c: &CartanData, j: usize) -> Self {
        let wj = self.images[j - 1].clone();
        let images = (1..=c.rank)
            .map(|m| {
                // w(s_j alpha_m) = w(alpha_m) - a_{jm} w(alpha_j).
                let a = c.pairing(j, m);
                let mut img = self.images[m - 1].clone();
                if a != 0 {
                    for (k, x) in img.coords.iter_mut().enumerate() {
                        *x -= a * wj.coords[k];
                    }
                }
                img
            })
            .collect();
        WeylAction { images }
    }
}

/// Decide whether a word in the simple reflections is reduced, via the
/// standard criterion: `s_{i_1} ... s_{i_k}` is reduced iff every prefix
/// image `s_{i_1} ... s_{i_{k-1}} (alpha_{i_k})` is a positive root.
pub fn is_reduced(c: &CartanData, letters: &[usize]) -> bool {
    let mut w = WeylAction::identity(c);
    for &i in letters {
        if !(1..=c.rank).contains(&i) {
            return false;
        }
        if !w.apply_simple(i).is_nonnegative() {
            return false;
        }
        w = w.mul_right(c, i);
    }
    true
}

/// A reduced word for the longest Weyl element `w0`, validated on
/// construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(c: &CartanData, letters: Vec<usize>) -> Result<Self, RootError> {
        if letters.len() != c.num_positive_roots() || !is_reduced(c, &letters) {
            return Err(RootError::NotReducedWord(letters));
        }
        Ok(ReducedWord { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Enumerate all reduced words of `w0` in lexicographic (depth-first) order,
/// up to a cap.
pub fn enumerate_w0_words(c: &CartanData, cap: usize) -> Result<Vec<ReducedWord>, RootError> {
    let ell = c.num_positive_roots();
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, WeylAction)> = vec![(Vec::new(), WeylAction::identity(c))];
    while let Some((prefix, w)) = stack.pop() {
        if prefix.len() == ell {
            if out.len() == cap {
                return Err(RootError::CapExceeded(cap));
            }
            out.push(ReducedWord { letters: prefix });
            continue;
        }
        // Push larger letters first so the stack pops in lexicographic order.
        for i in (1..=c.rank).rev() {
            if w.apply_simple(i).is_nonnegative() {
                let mut p = prefix.clone();
                p.push(i);
                stack.push((p, w.mul_right(c, i)));
            }
        }
    }
    Ok(out)
}

/// The default cap for reduced-word enumeration (`D4` has 2316 words).
pub const DEFAULT_WORD_CAP: usize = 10_000;

/// The convex root sequence `gamma^(k) = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}`
/// attached to a reduced word; a bijection onto the positive roots.
pub fn gamma_sequence(c: &CartanData, word: &ReducedWord) -> Vec<Weight> {
    let mut w = WeylAction::identity(c);
    let mut out = Vec::with_capacity(word.len());
    for &i in word.letters() {
        out.push(w.apply_simple(i).clone());
        w = w.mul_right(c, i);
    }
    out
}

/// Apply a 2-move (swap of commuting letters at `pos`, `pos+1`) or a 3-move
/// (braid `i j i -> j i j` for adjacent `i`, `j` at `pos`, `pos+1`, `pos+2`)
/// to a reduced word. Positions are 1-based.
pub fn word_move(
    c: &CartanData,
    word: &ReducedWord,
    pos: usize,
    kind: u8,
) -> Result<ReducedWord, RootError> {
    let l = word.letters();
    let mismatch = RootError::PatternMismatch { pos, kind };
    let mut out = l.to_vec();
    match kind {
        2 => {
            if pos == 0 || pos + 1 > l.len() {
                return Err(mismatch);
            }
            let (a, b) = (l[pos - 1], l[pos]);
            if a == b || c.adjacent(a, b) {
                return Err(mismatch);
            }
            out.swap(pos - 1, pos);
        }
        3 => {
            if pos == 0 || pos + 2 > l.len() {
                return Err(mismatch);
            }
            let (a, b, a2) = (l[pos - 1], l[pos], l[pos + 1]);
            if a != a2 || !c.adjacent(a, b) {
                return Err(mismatch);
            }
            out[pos - 1] = b;
            out[pos] = a;
            out[pos + 1] = b;
        }
        _ => return Err(mismatch),
    }
    ReducedWord::new(c, out)
}

/// All moves applicable to a word, as `(pos, kind)` pairs (1-based).
pub fn available_moves(c: &CartanData, word: &ReducedWord) -> Vec<(usize, u8)> {
    let l = word.letters();
    let mut out = Vec::new();
    for pos in 1..l.len() {
        let (a, b) = (l[pos - 1], l[pos]);
        if a != b && !c.adjacent(a, b) {
            out.push((pos, 2));
        }
    }
    for pos in 1..l.len().saturating_sub(1) {
        let (a, b, a2) = (l[pos - 1], l[pos], l[pos + 1]);
        if a == a2 && c.adjacent(a, b) {
            out.push((pos, 3));
        }
    }
    out
}

/// A shortest path of moves from `from` to `to` in the move graph, as
/// `(pos, kind)` pairs; `None` if unreachable (never happens for reduced
/// words of `w0` by the Tits connectivity theorem).
pub fn move_path(
    c: &CartanData,
    from: &ReducedWord,
    to: &ReducedWord,
) -> Option<Vec<(usize, u8)>> {
    if from == to {
        return Some(Vec::new());
    }
    let mut prev: HashMap<ReducedWord, (ReducedWord, (usize, u8))> = HashMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(from.clone());
    prev.insert(from.clone(), (from.clone(), (0, 0)));
    while let Some(w) = queue.pop_front() {
        for (pos, kind) in available_moves(c, &w) {
            let next = word_move(c, &w, pos, kind).expect("move pattern checked");
            if prev.contains_key(&next) {
                continue;
            }
            prev.insert(next.clone(), (w.clone(), (pos, kind)));
            if &next == to {
                // Reconstruct the path.
                let mut path = Vec::new();
                let mut cur = next;
                while &cur != from {
                    let (p, mv) = prev[&cur].clone();
                    path.push(mv);
                    cur = p;
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(next);
        }
    }
    None
}

/// An orientation of the Dynkin diagram: each edge directed one way.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    /// Arrows as `(source, target)` pairs.
    arrows: BTreeSet<(usize, usize)>,
}

impl Orientation {
    pub fn new(c: &CartanData, arrows: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let arrows: BTreeSet<(usize, usize)> = arrows.into_iter().collect();
        let covered: BTreeSet<(usize, usize)> = arrows
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        assert_eq!(
            covered,
            c.edges().iter().copied().collect(),
            "arrows must cover each Dynkin edge exactly once"
        );
        assert_eq!(arrows.len(), c.edges().len());
        Orientation { arrows }
    }

    /// The reference orientation: every edge directed from the smaller
    /// vertex to the larger.
    pub fn reference(c: &CartanData) -> Self {
        Orientation {
            arrows: c.edges().iter().copied().collect(),
        }
    }

    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows.iter().copied()
    }

    pub fn contains(&self, src: usize, tgt: usize) -> bool {
        self.arrows.contains(&(src, tgt))
    }

    /// A sink has no outgoing arrows.
    pub fn is_sink(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != i)
    }

    /// A source has no incoming arrows.
    pub fn is_source(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != i)
    }

    pub fn sinks(&self, c: &CartanData) -> Vec<usize> {
        (1..=c.rank()).filter(|&i| self.is_sink(i)).collect()
    }

    pub fn sources(&self, c: &CartanData) -> Vec<usize> {
        (1..=c.rank()).filter(|&i| self.is_source(i)).collect()
    }

    /// Reverse all arrows at a sink or source `i` (the reflection `s_i Omega`).
    pub fn reflect(&self, i: usize) -> Result<Orientation, RootError> {
        if !self.is_sink(i) && !self.is_source(i) {
            return Err(RootError::NotSinkOrSource(i));
        }
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == i || t == i { (t, s) } else { (s, t) })
            .collect();
        Ok(Orientation { arrows })
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .arrows
            .iter()
            .map(|(a, b)| format!("{}->{}", a, b))
            .collect();
        write!(f, "{{{}}}", s.join(", "))
    }
}

/// A reduced word is adapted to `Omega` when each `i_k` is a sink of
/// `s_{i_{k-1}} ... s_{i_1} Omega`.
pub fn is_adapted(c: &CartanData, word: &ReducedWord, omega: &Orientation) -> bool {
    let _ = c;
    let mut om = omega.clone();
    for &i in word.letters() {
        if !om.is_sink(i) {
            return false;
        }
        om = om.reflect(i).expect("sink reflection");
    }
    true
}

/// Some reduced word of `w0` adapted to `Omega` (always exists); found by
/// depth-first search over sink choices, smallest sink first.
pub fn adapted_word(c: &CartanData, omega: &Orientation) -> ReducedWord {
    let ell = c.num_positive_roots();
    let mut stack = vec![(Vec::new(), WeylAction::identity(c), omega.clone())];
    while let Some((prefix, w, om)) = stack.pop() {
        if prefix.len() == ell {
            return ReducedWord { letters: prefix };
        }
        for i in om.sinks(c).into_iter().rev() {
            if w.apply_simple(i).is_nonnegative() {
                let mut p = prefix.clone();
                p.push(i);
                stack.push((p, w.mul_right(c, i), om.reflect(i).expect("sink")));
            }
        }
    }
    unreachable!("every orientation admits an adapted reduced word")
}

/// A reduced word for `w0` whose first letter is `start`, built by greedy
/// right-peeling of `s_start * w0` (pick any simple root sent negative and
/// strip the reflection from the right).
pub fn word_starting_with(c: &CartanData, start: usize) -> ReducedWord {
    let any = adapted_word(c, &Orientation::reference(c));
    // Images of the simple roots under u = s_start * w0.
    let mut images: Vec<Weight> = (1..=c.rank())
        .map(|m| {
            let mut v = Weight::simple(c.rank(), m);
            for &l in any.letters().iter().rev() {
                v = c.reflect_weight(l, &v);
            }
            c.reflect_weight(start, &v)
        })
        .collect();
    let ell = c.num_positive_roots() - 1;
    let mut tail = vec![0usize; ell];
    for pos in (0..ell).rev() {
        let j = (1..=c.rank())
            .find(|&j| !images[j - 1].is_nonnegative())
            .expect("a nonidentity element sends some simple root negative");
        tail[pos] = j;
        // Replace u by u * s_j: (u s_j)(a_m) = u(a_m) - a_{jm} u(a_j).
        let uj = images[j - 1].clone();
        images = (1..=c.rank())
            .map(|m| {
                let a = c.pairing(j, m);
                let mut v = images[m - 1].clone();
                for (k, x) in v.coords.iter_mut().enumerate() {
                    *x -= a * uj.coords[k];
                }
                v
            })
            .collect();
    }
    let mut letters = vec![start];
    letters.extend(tail);
    ReducedWord::new(c, letters).expect("constructed word is reduced")
}

/// All Kostant partitions of `beta`: multisets of positive roots summing to
/// `beta`, each returned sorted in the fixed positive-root order.
pub fn kostant_partitions(c: &CartanData, beta: &Weight) -> Vec<Vec<Weight>> {
    let roots = c.positive_roots();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        roots: &[Weight],
        from: usize,
        remaining: &Weight,
        current: &mut Vec<Weight>,
        out: &mut Vec<Vec<Weight>>,
    ) {
        if remaining.is_zero() {
            out.push(current.clone());
            return;
        }
        for k in from..roots.len() {
            let r = &roots[k];
            let rest = remaining.sub(r);
            if rest.is_nonnegative() {
                current.push(r.clone());
                rec(roots, k, &rest, current, out);
                current.pop();
            }
        }
    }
    if beta.is_nonnegative() {
        rec(&roots, 0, beta, &mut current, &mut out);
    }
    out
}

/// Number of Kostant partitions (the Kostant partition function).
pub fn kostant_count(c: &CartanData, beta: &Weight) -> usize {
    if !beta.is_nonnegative() {
        return 0;
    }
    kostant_partitions(c, beta).len()
}

/// All weights in `Q+` of height up to `ht_max`, in a deterministic order
/// (by height, then lexicographic).
pub fn weights_up_to(c: &CartanData, ht_max: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let rank = c.rank();
    let mut stack = vec![Weight::zero(rank)];
    let mut seen = BTreeSet::new();
    while let Some(w) = stack.pop() {
        if !seen.insert(w.clone()) {
            continue;
        }
        if w.height() > 0 {
            out.push(w.clone());
        }
        if w.height() < ht_max {
            for i in 1..=rank {
                let mut v = w.clone();
                v.coords[i - 1] += 1;
                stack.push(v);
            }
        }
    }
    out.sort_by_key(|w| (w.height(), w.coords.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CartanData {
        CartanData::new(CartanType::A, 2)
    }

    fn a3() -> CartanData {
        CartanData::new(CartanType::A, 3)
    }

    fn d4() -> CartanData {
        CartanData::new(CartanType::D, 4)
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(a2().positive_roots().len(), 3);
        assert_eq!(a3().positive_roots().len(), 6);
        assert_eq!(d4().positive_roots().len(), 12);
        assert_eq!(CartanData::new(CartanType::A, 4).positive_roots().len(), 10);
    }

    #[test]
    fn a2_positive_roots() {
        let roots: BTreeSet<_> = a2().positive_roots().into_iter().collect();
        let expected: BTreeSet<_> = [vec![1, 0], vec![0, 1], vec![1, 1]]
            .into_iter()
            .map(|coords| Weight { coords })
            .collect();
        assert_eq!(roots, expected);
    }

    #[test]
    fn d4_center_is_2() {
        let c = d4();
        assert!(c.adjacent(1, 2));
        assert!(c.adjacent(2, 3));
        assert!(c.adjacent(2, 4));
        assert!(!c.adjacent(1, 3));
        assert!(!c.adjacent(3, 4));
    }

    #[test]
    fn reducedness() {
        let c = a2();
        assert!(is_reduced(&c, &[1, 2, 1]));
        assert!(!is_reduced(&c, &[1, 1]));
        assert!(ReducedWord::new(&c, vec![1, 2, 1]).is_ok());
        assert!(ReducedWord::new(&c, vec![1, 2]).is_err());
    }

    #[test]
    fn word_counts() {
        assert_eq!(enumerate_w0_words(&a2(), 100).unwrap().len(), 2);
        assert_eq!(enumerate_w0_words(&a3(), 100).unwrap().len(), 16);
        assert_eq!(
            enumerate_w0_words(&d4(), DEFAULT_WORD_CAP).unwrap().len(),
            2316
        );
        assert!(matches!(
            enumerate_w0_words(&a3(), 5),
            Err(RootError::CapExceeded(5))
        ));
    }

    #[test]
    fn a2_words_explicit() {
        let words = enumerate_w0_words(&a2(), 10).unwrap();
        let letters: Vec<&[usize]> = words.iter().map(|w| w.letters()).collect();
        assert_eq!(letters, vec![&[1, 2, 1][..], &[2, 1, 2][..]]);
    }

    #[test]
    fn gamma_sequences_a2() {
        let c = a2();
        let w = ReducedWord::new(&c, vec![1, 2, 1]).unwrap();
        let g = gamma_sequence(&c, &w);
        let coords: Vec<Vec<i64>> = g.iter().map(|x| x.coords.clone()).collect();
        assert_eq!(coords, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        let w2 = ReducedWord::new(&c, vec![2, 1, 2]).unwrap();
        let g2 = gamma_sequence(&c, &w2);
        let coords2: Vec<Vec<i64>> = g2.iter().map(|x| x.coords.clone()).collect();
        assert_eq!(coords2, vec![vec![0, 1], vec![1, 1], vec![1, 0]]);
    }

    #[test]
    fn gamma_bijection_all_words() {
        for c in [a2(), a3(), CartanData::new(CartanType::A, 4), d4()] {
            let roots: BTreeSet<_> = c.positive_roots().into_iter().collect();
            for w in enumerate_w0_words(&c, DEFAULT_WORD_CAP).unwrap() {
                let g = gamma_sequence(&c, &w);
                let set: BTreeSet<_> = g.iter().cloned().collect();
                assert_eq!(set.len(), g.len(), "gamma sequence not injective");
                assert_eq!(set, roots, "gamma sequence misses roots");
            }
        }
    }

    #[test]
    fn moves() {
        let c = a3();
        let w = ReducedWord::new(&c, vec![1, 3, 1, 3]).err();
        assert!(w.is_some()); // not even reduced/w0; sanity
        let w = ReducedWord::new(&c, vec![1, 3, 2, 1, 3, 2]).unwrap();
        let moved = word_move(&c, &w, 1, 2).unwrap();
        assert_eq!(moved.letters(), &[3, 1, 2, 1, 3, 2]);
        // Involution.
        assert_eq!(word_move(&c, &moved, 1, 2).unwrap(), w);

        let c2 = a2();
        let w = ReducedWord::new(&c2, vec![1, 2, 1]).unwrap();
        let braided = word_move(&c2, &w, 1, 3).unwrap();
        assert_eq!(braided.letters(), &[2, 1, 2]);
        assert_eq!(word_move(&c2, &braided, 1, 3).unwrap(), w);
        assert!(word_move(&c2, &w, 1, 2).is_err());
    }

    #[test]
    fn move_graph_connected_a2_a3() {
        for c in [a2(), a3()] {
            let words = enumerate_w0_words(&c, 100).unwrap();
            let base = &words[0];
            for w in &words {
                assert!(move_path(&c, base, w).is_some(), "unreachable word {w}");
            }
        }
    }

    #[test]
    fn orientation_basics() {
        let c = a2();
        let om = Orientation::reference(&c); // 1 -> 2
        assert_eq!(om.sinks(&c), vec![2]);
        assert_eq!(om.sources(&c), vec![1]);
        let r = om.reflect(2).unwrap();
        assert!(r.contains(2, 1));
        assert!(om.reflect(1).is_ok());
        let d = d4();
        let omd = Orientation::reference(&d);
        // Vertex 2 is in the middle: neither sink nor source once 1->2 and
        // 2->3, 2->4 both exist.
        assert!(omd.reflect(2).is_err());
    }

    #[test]
    fn adaptedness() {
        let c = a2();
        let om = Orientation::reference(&c); // 1 -> 2
        let w212 = ReducedWord::new(&c, vec![2, 1, 2]).unwrap();
        let w121 = ReducedWord::new(&c, vec![1, 2, 1]).unwrap();
        assert!(is_adapted(&c, &w212, &om));
        assert!(!is_adapted(&c, &w121, &om));
        assert_eq!(adapted_word(&c, &om), w212);
        for cd in [a3(), d4()] {
            let om = Orientation::reference(&cd);
            let w = adapted_word(&cd, &om);
            assert!(is_adapted(&cd, &w, &om));
        }
    }

    #[test]
    fn kostant_examples() {
        let c = a2();
        let b = Weight { coords: vec![1, 1] };
        assert_eq!(kostant_count(&c, &b), 2);
        let b2 = Weight { coords: vec![1, 2] };
        assert_eq!(kostant_count(&c, &b2), 2);
        let b3 = Weight { coords: vec![1, 0] };
        assert_eq!(kostant_partitions(&c, &b3), vec![vec![b3.clone()]]);
    }

    #[test]
    fn kostant_matches_lusztig_datum_count() {
        // #{c : wt(i, c) = beta} is the same for every reduced word and
        // equals the Kostant partition count.
        for c in [a2(), a3()] {
            let words = enumerate_w0_words(&c, 100).unwrap();
            for beta in weights_up_to(&c, 6) {
                let expected = kostant_count(&c, &beta);
                for w in &words {
                    let gammas = gamma_sequence(&c, w);
                    let count = count_data(&gammas, &beta);
                    assert_eq!(count, expected, "word {w:?} beta {beta:?}");
                }
            }
        }
    }

    /// Count non-negative integer solutions of `sum c_k gamma_k = beta`.
    fn count_data(gammas: &[Weight], beta: &Weight) -> usize {
        fn rec(gammas: &[Weight], k: usize, rem: &Weight) -> usize {
            if rem.is_zero() {
                return 1;
            }
            if k == gammas.len() {
                return 0;
            }
            let mut total = 0;
            let mut r = rem.clone();
            loop {
                total += rec(gammas, k + 1, &r);
                r = r.sub(&gammas[k]);
                if !r.is_nonnegative() {
                    break;
                }
            }
            total
        }
        rec(gammas, 0, beta)
    }
}
