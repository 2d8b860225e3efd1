//! The KLR (quiver Hecke) algebra by generators and relations: degree
//! calculus, reduction to the PBW normal form `tau_w * p(kappa) * e(m)`, and
//! graded block dimensions.
//!
//! This module is the independent oracle that pins every sign and grading
//! convention used by the word-space model: the closed block-dimension
//! formula here must agree both with direct enumeration of normal-form
//! monomials and with the Lusztig form on monomials.

use crate::arith::{inv_one_minus_t2_pow, LaurentPoly, RatFun, TruncSeries};
use crate::error::KlrError;
use crate::root_data::{CartanData, Orientation, Weight};
use itertools::Itertools;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

/// A generator of the KLR algebra `R_beta` (`n = ht beta`); `kappa` indices
/// are `1..=n`, `tau` indices `1..=n-1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Gen {
    E(Vec<usize>),
    Kappa(usize),
    Tau(usize),
}

/// A free (unreduced) integer linear combination of generator words.
#[derive(Clone, Debug, Default)]
pub struct FreeExpr {
    pub terms: Vec<(i64, Vec<Gen>)>,
}

impl FreeExpr {
    pub fn monomial(coef: i64, gens: Vec<Gen>) -> Self {
        FreeExpr {
            terms: vec![(coef, gens)],
        }
    }

    pub fn add(mut self, other: FreeExpr) -> Self {
        self.terms.extend(other.terms);
        self
    }
}

/// A normal-form monomial `tau_w * kappa^a * e(m)`, with `w` recorded by its
/// fixed (lexicographically least) reduced word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct NfMonomial {
    pub tau_word: Vec<usize>,
    pub kappa: Vec<u64>,
    pub word: Vec<usize>,
}

/// A finitely supported integer combination of normal-form monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct KlrExpr {
    terms: BTreeMap<NfMonomial, i64>,
}

impl KlrExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NfMonomial, i64)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    fn add_term(&mut self, mon: NfMonomial, coef: i64) {
        if coef == 0 {
            return;
        }
        let entry = self.terms.entry(mon.clone()).or_insert(0);
        *entry += coef;
        if *entry == 0 {
            self.terms.remove(&mon);
        }
    }

    pub fn sub(&self, other: &KlrExpr) -> KlrExpr {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl fmt::Debug for KlrExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{}*tau{:?}k{:?}e{:?}", c, m.tau_word, m.kappa, m.word))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The degree of a single generator acting on `e(m)` (Def.-style degree
/// rules: `deg kappa = 2`; `deg tau_i` is `-2`, `1`, `0` for equal, adjacent,
/// distant letters).
pub fn klr_degree(c: &CartanData, gen: &Gen, m: &[usize]) -> Result<i64, KlrError> {
    let n = m.len();
    match gen {
        Gen::E(_) => Ok(0),
        Gen::Kappa(i) => {
            if *i == 0 || *i > n {
                return Err(KlrError::IndexOutOfRange(*i, n));
            }
            Ok(2)
        }
        Gen::Tau(i) => {
            if *i == 0 || *i + 1 > n {
                return Err(KlrError::IndexOutOfRange(*i, n));
            }
            let (a, b) = (m[i - 1], m[*i]);
            Ok(if a == b {
                -2
            } else if c.adjacent(a, b) {
                1
            } else {
                0
            })
        }
    }
}

fn weight_of_word(c: &CartanData, m: &[usize]) -> Weight {
    let mut w = Weight::zero(c.rank());
    for &i in m {
        w.coords[i - 1] += 1;
    }
    w
}

// ---------------------------------------------------------------------------
// Symmetric-group utilities on positions 0..n-1. A tau word (t_1, ..., t_L)
// represents the permutation s_{t_1} o ... o s_{t_L}; it acts on sequences by
// (w m)_{w(k)} = m_k, so the left idempotent of tau_w e(m) is e(w m).
// ---------------------------------------------------------------------------

fn swap_word(m: &[usize], i: usize) -> Vec<usize> {
    let mut out = m.to_vec();
    out.swap(i - 1, i);
    out
}

fn perm_of_tau_word(word: &[usize], n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for &t in word.iter().rev() {
        // perm := s_t o perm.
        for p in perm.iter_mut() {
            if *p == t - 1 {
                *p = t;
            } else if *p == t {
                *p = t - 1;
            }
        }
    }
    perm
}

fn apply_perm(perm: &[usize], m: &[usize]) -> Vec<usize> {
    let mut out = vec![0; m.len()];
    for (k, &mk) in m.iter().enumerate() {
        out[perm[k]] = mk;
    }
    out
}

fn inversions(perm: &[usize]) -> usize {
    let n = perm.len();
    let mut count = 0;
    for k in 0..n {
        for l in k + 1..n {
            if perm[k] > perm[l] {
                count += 1;
            }
        }
    }
    count
}

/// The lexicographically least reduced word of a permutation: repeatedly take
/// the smallest left descent.
fn chosen_word(perm: &[usize]) -> Vec<usize> {
    let n = perm.len();
    let mut inv: Vec<usize> = vec![0; n];
    for (k, &p) in perm.iter().enumerate() {
        inv[p] = k;
    }
    let mut word = Vec::new();
    loop {
        // Left descent at i (1-based tau index) iff inv[i-1] > inv[i].
        let mut found = None;
        for i in 1..n {
            if inv[i - 1] > inv[i] {
                found = Some(i);
                break;
            }
        }
        match found {
            None => break,
            Some(i) => {
                word.push(i);
                inv.swap(i - 1, i);
            }
        }
    }
    word
}

/// Moves on words in the symmetric group: returns `(new_word, pos, kind)`
/// for every commutation (kind 2) and braid (kind 3) move; `pos` is 0-based.
fn sn_word_moves(word: &[usize]) -> Vec<(Vec<usize>, usize, u8)> {
    let mut out = Vec::new();
    for p in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[p], word[p + 1]);
        if a.abs_diff(b) >= 2 {
            let mut w = word.to_vec();
            w.swap(p, p + 1);
            out.push((w, p, 2));
        }
    }
    for p in 0..word.len().saturating_sub(2) {
        let (a, b, a2) = (word[p], word[p + 1], word[p + 2]);
        if a == a2 && a.abs_diff(b) == 1 {
            let mut w = word.to_vec();
            w[p] = b;
            w[p + 1] = a;
            w[p + 2] = b;
            out.push((w, p, 3));
        }
    }
    out
}

/// BFS through braid/commutation moves from `word` until `target` returns
/// true; returns the move sequence. Only visits words of the same
/// permutation, so the search space is tiny at our scale.
fn sn_move_path<F: Fn(&[usize]) -> bool>(word: &[usize], target: F) -> Option<Vec<(usize, u8)>> {
    if target(word) {
        return Some(Vec::new());
    }
    let mut prev: HashMap<Vec<usize>, (Vec<usize>, (usize, u8))> = HashMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(word.to_vec());
    prev.insert(word.to_vec(), (Vec::new(), (0, 0)));
    while let Some(w) = queue.pop_front() {
        for (next, pos, kind) in sn_word_moves(&w) {
            if prev.contains_key(&next) {
                continue;
            }
            prev.insert(next.clone(), (w.clone(), (pos, kind)));
            if target(&next) {
                let mut path = Vec::new();
                let mut cur = next;
                while cur != word {
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

// ---------------------------------------------------------------------------
// The rewriting engine.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Tk {
    T(usize),
    K(usize),
}

/// Step cap for the rewriting loop; exceeding it is a bug signal.
const STEP_CAP: usize = 1_000_000;

/// The word immediately to the right of position `p` in `tk` (i.e. the
/// idempotent that the suffix `tk[p+1..]` pushes onto `e(m)`).
fn right_word_at(tk: &[Tk], p: usize, m: &[usize]) -> Vec<usize> {
    let mut r = m.to_vec();
    for g in tk[p + 1..].iter().rev() {
        if let Tk::T(i) = g {
            r = swap_word(&r, *i);
        }
    }
    r
}

fn sigma_index(i: usize, j: usize) -> usize {
    if j == i {
        i + 1
    } else if j == i + 1 {
        i
    } else {
        j
    }
}

/// Sign `(-1)^{h_{m,i}}` for adjacent letters `x = m_i`, `y = m_{i+1}`:
/// `h` counts arrows `x -> y` in the reference orientation.
fn q_sign(omega: &Orientation, x: usize, y: usize) -> i64 {
    if omega.contains(x, y) {
        -1
    } else {
        1
    }
}

/// The context for KLR computations: the Dynkin diagram and the orientation
/// used for the `Q`-polynomial sign bookkeeping.
pub struct KlrContext {
    pub cartan: CartanData,
    pub omega: Orientation,
}

impl KlrContext {
    pub fn new(cartan: CartanData) -> Self {
        let omega = Orientation::reference(&cartan);
        KlrContext { cartan, omega }
    }

    pub fn with_orientation(cartan: CartanData, omega: Orientation) -> Self {
        KlrContext { cartan, omega }
    }

    /// Reduce a free expression to the PBW normal form. All generator words
    /// must contain at least one idempotent (so the right block is known).
    pub fn normal_form(&self, expr: &FreeExpr) -> Result<KlrExpr, KlrError> {
        let mut out = KlrExpr::zero();
        let mut steps = 0usize;
        let mut work: Vec<(i64, Vec<Tk>, Vec<usize>)> = Vec::new();
        for (coef, gens) in &expr.terms {
            if let Some((tk, m)) = self.strip_idempotents(gens)? {
                work.push((*coef, tk, m));
            }
        }
        while let Some((coef, tk, m)) = work.pop() {
            steps += 1;
            if steps > STEP_CAP {
                return Err(KlrError::NonTermination);
            }
            self.reduce_step(coef, tk, m, &mut work, &mut out)?;
        }
        Ok(out)
    }

    /// Convert a generator word into `(tau/kappa list, right idempotent)` by
    /// pushing every `e` out; returns `None` if an idempotent clash makes the
    /// monomial zero.
    fn strip_idempotents(
        &self,
        gens: &[Gen],
    ) -> Result<Option<(Vec<Tk>, Vec<usize>)>, KlrError> {
        // First locate the rightmost idempotent and compute the right-end word.
        let last_e = gens
            .iter()
            .rposition(|g| matches!(g, Gen::E(_)))
            .expect("each monomial must contain an idempotent");
        let Gen::E(m_at) = &gens[last_e] else {
            unreachable!()
        };
        let n = m_at.len();
        let mut m_right = m_at.clone();
        for g in &gens[last_e + 1..] {
            match g {
                Gen::Tau(i) => m_right = swap_word(&m_right, *i),
                Gen::Kappa(_) => {}
                Gen::E(_) => unreachable!(),
            }
        }
        // Now scan right-to-left checking consistency of interior idempotents.
        let mut cur = m_right.clone();
        let mut tk = Vec::new();
        for g in gens.iter().rev() {
            match g {
                Gen::Tau(i) => {
                    if *i == 0 || *i >= n {
                        return Err(KlrError::IndexOutOfRange(*i, n));
                    }
                    cur = swap_word(&cur, *i);
                    tk.push(Tk::T(*i));
                }
                Gen::Kappa(i) => {
                    if *i == 0 || *i > n {
                        return Err(KlrError::IndexOutOfRange(*i, n));
                    }
                    tk.push(Tk::K(*i));
                }
                Gen::E(w) => {
                    if w != &cur {
                        return Ok(None);
                    }
                }
            }
        }
        tk.reverse();
        Ok(Some((tk, m_right)))
    }

    /// One rewriting step on a single monomial; either emits it into `out`
    /// (already normal) or pushes transformed monomials back onto `work`.
    fn reduce_step(
        &self,
        coef: i64,
        mut tk: Vec<Tk>,
        m: Vec<usize>,
        work: &mut Vec<(i64, Vec<Tk>, Vec<usize>)>,
        out: &mut KlrExpr,
    ) -> Result<(), KlrError> {
        // Rule K: rightmost kappa sitting immediately left of a tau.
        if let Some(p) = (0..tk.len().saturating_sub(1))
            .rev()
            .find(|&p| matches!(tk[p], Tk::K(_)) && matches!(tk[p + 1], Tk::T(_)))
        {
            let (Tk::K(j), Tk::T(i)) = (tk[p], tk[p + 1]) else {
                unreachable!()
            };
            let r = right_word_at(&tk, p + 1, &m);
            let j2 = sigma_index(i, j);
            // kappa_j tau_i e(r) = tau_i kappa_{sigma_i(j)} e(r) - c e(r),
            // where c comes from Def. relation (6).
            let c = if r[i - 1] == r[i] {
                if j2 == i {
                    -1
                } else if j2 == i + 1 {
                    1
                } else {
                    0
                }
            } else {
                0
            };
            if c != 0 {
                let mut rest = tk.clone();
                rest.drain(p..=p + 1);
                work.push((-c * coef, rest, m.clone()));
            }
            tk[p] = Tk::T(i);
            tk[p + 1] = Tk::K(j2);
            work.push((coef, tk, m));
            return Ok(());
        }
        // Now tk = tau block followed by kappa block.
        let tau_len = tk.iter().take_while(|g| matches!(g, Tk::T(_))).count();
        let word: Vec<usize> = tk[..tau_len]
            .iter()
            .map(|g| match g {
                Tk::T(i) => *i,
                _ => unreachable!(),
            })
            .collect();
        let n = m.len();
        // Find the shortest non-reduced prefix, if any.
        let mut bad = None;
        for p in 1..=word.len() {
            let perm = perm_of_tau_word(&word[..p], n);
            if inversions(&perm) != p {
                bad = Some(p - 1); // 0-based position of the offending letter
                break;
            }
        }
        match bad {
            None => {
                let perm = perm_of_tau_word(&word, n);
                let chosen = chosen_word(&perm);
                if word == chosen {
                    let mut kappa = vec![0u64; n];
                    for g in &tk[tau_len..] {
                        let Tk::K(i) = g else { unreachable!() };
                        kappa[i - 1] += 1;
                    }
                    out.add_term(
                        NfMonomial {
                            tau_word: word,
                            kappa,
                            word: m,
                        },
                        coef,
                    );
                } else {
                    // Reduced but not the chosen word: braid towards it.
                    let path = sn_move_path(&word, |w| w == chosen.as_slice())
                        .expect("reduced words of a permutation are move-connected");
                    self.apply_tau_move(coef, tk, m, path[0], work);
                }
            }
            Some(p) => {
                // word[..p] is reduced and appending word[p] drops length.
                if p > 0 && word[p - 1] == word[p] {
                    // Adjacent equal pair: relation (4), tau_i^2 = Q.
                    let i = word[p];
                    let r = right_word_at(&tk, p, &m);
                    let (x, y) = (r[i - 1], r[i]);
                    let mut rest = tk.clone();
                    rest.drain(p - 1..=p);
                    if x == y {
                        // Q = 0: monomial vanishes.
                    } else if self.cartan.adjacent(x, y) {
                        // Q = (-1)^h (kappa_i - kappa_{i+1}).
                        let s = q_sign(&self.omega, x, y);
                        let mut with_i = rest.clone();
                        with_i.insert(p - 1, Tk::K(i));
                        let mut with_i1 = rest;
                        with_i1.insert(p - 1, Tk::K(i + 1));
                        work.push((s * coef, with_i, m.clone()));
                        work.push((-s * coef, with_i1, m));
                    } else {
                        // Q = 1.
                        work.push((coef, rest, m));
                    }
                } else {
                    // Braid the reduced prefix until it ends with word[p].
                    let target = word[p];
                    let path = sn_move_path(&word[..p], |w| w.last() == Some(&target))
                        .expect("exchange property: some reduced word ends with the letter");
                    self.apply_tau_move(coef, tk, m, path[0], work);
                }
            }
        }
        Ok(())
    }

    /// Apply a single commutation or braid move at `(pos, kind)` (0-based)
    /// inside the tau block, pushing the rewritten monomial (and the braid
    /// correction term, when relation (5) produces one) onto the worklist.
    fn apply_tau_move(
        &self,
        coef: i64,
        mut tk: Vec<Tk>,
        m: Vec<usize>,
        (pos, kind): (usize, u8),
        work: &mut Vec<(i64, Vec<Tk>, Vec<usize>)>,
    ) {
        match kind {
            2 => {
                tk.swap(pos, pos + 1);
                work.push((coef, tk, m));
            }
            3 => {
                let (Tk::T(a), Tk::T(b), Tk::T(a2)) = (tk[pos], tk[pos + 1], tk[pos + 2]) else {
                    unreachable!()
                };
                debug_assert_eq!(a, a2);
                let i = a.min(b);
                let r = right_word_at(&tk, pos + 2, &m);
                // Relation (5): tau_{i+1} tau_i tau_{i+1} - tau_i tau_{i+1}
                // tau_i = (+-1) e when m_{i+2} = m_i and the letters are
                // adjacent in the diagram; 0 otherwise.
                let corr = if r[i + 1] == r[i - 1] {
                    let (x, y) = (r[i - 1], r[i]);
                    if x != y && self.cartan.adjacent(x, y) {
                        q_sign(&self.omega, x, y)
                    } else {
                        0
                    }
                } else {
                    0
                };
                // Pattern (i+1, i, i+1) rewrites with +corr; the flipped
                // pattern with -corr.
                let sign = if a == i + 1 { 1 } else { -1 };
                if corr != 0 {
                    let mut rest = tk.clone();
                    rest.drain(pos..=pos + 2);
                    work.push((sign * corr * coef, rest, m.clone()));
                }
                tk[pos] = Tk::T(b);
                tk[pos + 1] = Tk::T(a);
                tk[pos + 2] = Tk::T(b);
                work.push((coef, tk, m));
            }
            _ => unreachable!(),
        }
    }

    /// Degree of a normal-form monomial.
    pub fn nf_degree(&self, mon: &NfMonomial) -> i64 {
        let mut deg: i64 = 2 * mon.kappa.iter().sum::<u64>() as i64;
        let mut r = mon.word.clone();
        for &i in mon.tau_word.iter().rev() {
            deg += klr_degree(&self.cartan, &Gen::Tau(i), &r).expect("valid index");
            r = swap_word(&r, i);
        }
        deg
    }
}

// ---------------------------------------------------------------------------
// Graded block dimensions.
// ---------------------------------------------------------------------------

/// The closed formula for `gdim e(m') R_beta e(m)`: sum over `w` in `S_n`
/// with `w m = m'` of `t^{d(w, m)} (1 - t^2)^{-n}`, where `d(w, m)` adds,
/// over the inversions of `w`, `-2` for equal letters, `+1` for adjacent
/// letters, `0` otherwise.
pub fn gdim_block(c: &CartanData, m: &[usize], m_prime: &[usize]) -> Result<RatFun, KlrError> {
    if weight_of_word(c, m) != weight_of_word(c, m_prime) {
        return Err(KlrError::WeightMismatch);
    }
    let n = m.len();
    let mut numerator = LaurentPoly::zero();
    for perm in (0..n).permutations(n) {
        if apply_perm(&perm, m) != m_prime {
            continue;
        }
        numerator.add_term(inversion_degree(c, &perm, m), 1.into());
    }
    Ok(&RatFun::from(numerator) * &inv_one_minus_t2_pow(n as u64))
}

fn inversion_degree(c: &CartanData, perm: &[usize], m: &[usize]) -> i64 {
    let n = perm.len();
    let mut d = 0;
    for k in 0..n {
        for l in k + 1..n {
            if perm[k] > perm[l] {
                let (a, b) = (m[k], m[l]);
                d += if a == b {
                    -2
                } else if c.adjacent(a, b) {
                    1
                } else {
                    0
                };
            }
        }
    }
    d
}

/// Direct enumeration of normal-form monomials in the block, degree by
/// degree up to `dmax`; must agree with `series_expand(gdim_block, dmax)`.
pub fn gdim_enumerate(
    c: &CartanData,
    m: &[usize],
    m_prime: &[usize],
    dmax: i64,
) -> Result<TruncSeries, KlrError> {
    if weight_of_word(c, m) != weight_of_word(c, m_prime) {
        return Err(KlrError::WeightMismatch);
    }
    let n = m.len();
    if n > 6 {
        return Err(KlrError::RangeExceeded(format!("ht {} > 6", n)));
    }
    let ctx = KlrContext::new(c.clone());
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    for perm in (0..n).permutations(n) {
        if apply_perm(&perm, m) != m_prime {
            continue;
        }
        let tau_word = chosen_word(&perm);
        let base = ctx.nf_degree(&NfMonomial {
            tau_word,
            kappa: vec![0; n],
            word: m.to_vec(),
        });
        // Kappa monomials contribute even degrees 2*sum(a) over n variables.
        // Count exponent vectors with base + 2*total <= dmax.
        if base > dmax {
            continue;
        }
        let max_total = ((dmax - base) / 2) as usize;
        for total in 0..=max_total {
            counts
                .entry(base + 2 * total as i64)
                .and_modify(|x| *x += compositions(total, n))
                .or_insert(compositions(total, n));
        }
    }
    let lowest = counts.keys().next().copied().unwrap_or(0);
    let coeffs = (lowest..=dmax)
        .map(|d| counts.get(&d).copied().unwrap_or(0).into())
        .collect();
    Ok(TruncSeries::from_coeffs(lowest, coeffs, dmax))
}

/// Number of ways to write `total` as an ordered sum of `parts` non-negative
/// integers: `C(total + parts - 1, parts - 1)`.
fn compositions(total: usize, parts: usize) -> i64 {
    if parts == 0 {
        return if total == 0 { 1 } else { 0 };
    }
    let mut num = 1i64;
    let mut den = 1i64;
    for k in 1..parts {
        num *= (total + k) as i64;
        den *= k as i64;
    }
    num / den
}
