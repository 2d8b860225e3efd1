//! Bar-transition matrices, the canonical (lower global) basis solver,
//! simple and projective characters, the full set of transition matrices,
//! and the determinant identities relating them.
//!
//! The pairing realizing the Euler-Poincare bracket between lower and upper
//! classes is `lusztig_form(lower, upper)` with no extra bar/star twist; the
//! dual-basis normalization is absorbed by the character conventions.

use crate::arith::{inv_one_minus_t2_pow, LaurentPoly, RatFun};
use crate::error::GlobalError;
use crate::linalg::{express_in_span, Mat};
use crate::pbw::{datum_lt, enumerate_data, expand_in_pbw, pbw_vector, LusztigDatum, PbwVector};
use crate::root_data::{kostant_count, CartanData, ReducedWord, Weight};
use crate::word_space::{lusztig_form, MonomialElement, WordElement};
use std::collections::BTreeMap;

/// A square matrix of exact coefficients indexed (rows and columns) by the
/// exponent sequences of one weight, sorted increasing in `<_i`.
#[derive(Clone, Debug)]
pub struct TransitionMatrix {
    pub data: Vec<Vec<u64>>,
    pub entries: Mat,
}

impl TransitionMatrix {
    pub fn entry(&self, row: &[u64], col: &[u64]) -> &RatFun {
        let i = self.data.iter().position(|d| d == row).expect("row datum");
        let j = self.data.iter().position(|d| d == col).expect("col datum");
        self.entries.at(i, j)
    }
}

/// The bar matrix `R` of a weight space: `bar(~E_c) = sum_c' R_{c',c} ~E_c'`.
/// Upper triangular with unit diagonal in the `<_i` order (columns indexed by
/// `c`, rows by `c'`; smaller data come first).
pub fn bar_matrix(
    cartan: &CartanData,
    word: &ReducedWord,
    beta: &Weight,
) -> Result<TransitionMatrix, GlobalError> {
    let (data, lowers) = lower_family(cartan, word, beta)?;
    let n = data.len();
    let mut entries = Mat::zero(n, n);
    for (j, v) in lowers.iter().enumerate() {
        let barred = crate::word_space::bar_element(&v.lower_class);
        let coords = expand_in_pbw(cartan, &barred.image(cartan), word)?;
        for (cvec, coef) in coords {
            let i = data.iter().position(|d| *d == cvec).expect("datum in range");
            if i > j || (i == j && !coef.is_one()) {
                return Err(GlobalError::TriangularityViolation(format!(
                    "bar(~E_{:?}) has coefficient {} at {:?}",
                    data[j], coef, cvec
                )));
            }
            *entries.at_mut(i, j) = coef;
        }
    }
    Ok(TransitionMatrix { data, entries })
}

fn lower_family(
    cartan: &CartanData,
    word: &ReducedWord,
    beta: &Weight,
) -> Result<(Vec<Vec<u64>>, Vec<PbwVector>), GlobalError> {
    let data = enumerate_data(cartan, word, beta);
    let lowers = data
        .iter()
        .map(|c| pbw_vector(cartan, &LusztigDatum::new(word.clone(), c.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((data, lowers))
}

/// The canonical basis of one weight space, with its PBW expansion.
#[derive(Clone, Debug)]
pub struct CanonicalFamily {
    pub word: ReducedWord,
    pub weight: Weight,
    /// Exponent sequences, sorted increasing in `<_i`.
    pub data: Vec<Vec<u64>>,
    /// Lower PBW vectors, parallel to `data`.
    pub lower: Vec<PbwVector>,
    /// Canonical elements `G_b` as monomial presentations, parallel to `data`.
    pub canonical: Vec<MonomialElement>,
    /// `[P : ~E]`: row `b`, column `b'` holds the coefficient of `~E_{b'}`
    /// in `G_b`.
    pub p_e: TransitionMatrix,
}

/// Solve for the canonical basis: the unique bar-fixed family
/// `G_c in ~E_c + sum_{c' < c} t Z[t] ~E_{c'}`, processing data in
/// increasing `<_i` order.
pub fn canonical_basis(
    cartan: &CartanData,
    word: &ReducedWord,
    beta: &Weight,
) -> Result<CanonicalFamily, GlobalError> {
    let bar = bar_matrix(cartan, word, beta)?;
    let data = bar.data.clone();
    let n = data.len();
    let (_, lowers) = lower_family(cartan, word, beta)?;
    // Canonical coordinates over the lower PBW basis; g_coords[b][c'].
    let mut g_coords: Vec<Vec<RatFun>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut g: Vec<RatFun> = (0..n)
            .map(|i| if i == j { RatFun::one() } else { RatFun::zero() })
            .collect();
        loop {
            // delta = R * bar(g) - g.
            let mut delta = vec![RatFun::zero(); n];
            for (col, gc) in g.iter().enumerate() {
                if gc.is_zero() {
                    continue;
                }
                let b = gc.bar();
                for (row, d) in delta.iter_mut().enumerate() {
                    let r = bar.entries.at(row, col);
                    if !r.is_zero() {
                        *d = &*d + &(r * &b);
                    }
                }
            }
            for (d, gc) in delta.iter_mut().zip(&g) {
                *d = &*d - gc;
            }
            let Some(top) = (0..n).rev().find(|&i| !delta[i].is_zero()) else {
                break;
            };
            let q = delta[top]
                .as_laurent()
                .ok_or_else(|| {
                    GlobalError::NonPolynomialCoefficient(format!(
                        "{} at {:?}",
                        delta[top], data[top]
                    ))
                })?
                .clone();
            // q must be bar-antisymmetric with zero constant term.
            if &q.bar() + &q != LaurentPoly::zero() {
                return Err(GlobalError::NoSolution(format!(
                    "defect {} at {:?} is not bar-antisymmetric",
                    q, data[top]
                )));
            }
            if q.coeff(0) != 0.into() {
                return Err(GlobalError::NoSolution(format!(
                    "defect {} at {:?} has a constant term",
                    q, data[top]
                )));
            }
            // p = positive-exponent part of q; then bar(p) - p = -q and
            // adding p G_top cancels the defect.
            let p = LaurentPoly::from_pairs(
                q.iter().filter(|(e, _)| *e > 0).map(|(e, c)| (e, c.clone())),
            );
            let p = RatFun::from(p);
            if top >= g_coords.len() {
                return Err(GlobalError::NoSolution(format!(
                    "defect at or above the diagonal datum {:?}",
                    data[top]
                )));
            }
            for (gc, base) in g.iter_mut().zip(&g_coords[top]) {
                if !base.is_zero() {
                    *gc = &*gc + &(&p * base);
                }
            }
        }
        g_coords.push(g);
    }
    // Assemble monomial presentations and the [P : ~E] matrix.
    let mut canonical = Vec::with_capacity(n);
    let mut p_e = Mat::zero(n, n);
    for (b, coords) in g_coords.iter().enumerate() {
        let mut terms: BTreeMap<Vec<usize>, RatFun> = BTreeMap::new();
        for (j, coef) in coords.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            *p_e.at_mut(b, j) = coef.clone();
            for (m, c) in &lowers[j].lower_class.terms {
                let entry = terms.entry(m.clone()).or_insert_with(RatFun::zero);
                *entry = &*entry + &(c * coef);
                if entry.is_zero() {
                    terms.remove(m);
                }
            }
        }
        canonical.push(MonomialElement { terms });
    }
    Ok(CanonicalFamily {
        word: word.clone(),
        weight: beta.clone(),
        data: data.clone(),
        lower: lowers,
        canonical,
        p_e: TransitionMatrix {
            data,
            entries: p_e,
        },
    })
}

/// Simple and projective characters of one weight space, derived from the
/// canonical basis by form duality.
#[derive(Clone, Debug)]
pub struct Characters {
    pub data: Vec<Vec<u64>>,
    /// `gch L_b`, parallel to `data`.
    pub simple: Vec<WordElement>,
    /// `gch P_b`, parallel to `data`.
    pub projective: Vec<WordElement>,
    /// Dual vectors of `{G_b}` under the form (un-scaled word expansions).
    pub dual_images: Vec<WordElement>,
    /// The Gram matrix `[P : L]` of `{G_b}` under the form.
    pub gram: TransitionMatrix,
}

pub fn characters(
    cartan: &CartanData,
    fam: &CanonicalFamily,
) -> Result<Characters, GlobalError> {
    let n = fam.data.len();
    let ht = fam.weight.height() as u64;
    let scale = inv_one_minus_t2_pow(ht);
    let mut gram = Mat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            *gram.at_mut(i, j) =
                lusztig_form(cartan, &fam.canonical[i], &fam.canonical[j])?;
        }
    }
    let inv = gram.inverse().ok_or(GlobalError::SingularGram)?;
    let mut simple = Vec::with_capacity(n);
    let mut dual_images = Vec::with_capacity(n);
    for b in 0..n {
        // v_b = sum_c inv[c][b] G_c; form(G_a, v_b) = delta_{a,b}.
        let mut v = MonomialElement::default();
        for c in 0..n {
            let coef = inv.at(c, b);
            if coef.is_zero() {
                continue;
            }
            for (m, x) in &fam.canonical[c].terms {
                let entry = v.terms.entry(m.clone()).or_insert_with(RatFun::zero);
                *entry = &*entry + &(x * coef);
                if entry.is_zero() {
                    v.terms.remove(m);
                }
            }
        }
        let img = v.image(cartan);
        simple.push(img.scale(&scale));
        dual_images.push(img);
    }
    let projective = fam
        .canonical
        .iter()
        .map(|g| g.image(cartan).scale(&scale))
        .collect();
    Ok(Characters {
        data: fam.data.clone(),
        simple,
        projective,
        dual_images,
        gram: TransitionMatrix {
            data: fam.data.clone(),
            entries: gram,
        },
    })
}

/// The four transition matrices of one weight space and the data shared by
/// them. Rows and columns are indexed by `data` (increasing `<_i`).
#[derive(Clone, Debug)]
pub struct TransitionMatrices {
    pub data: Vec<Vec<u64>>,
    /// `[P : ~E]` - canonical in terms of lower PBW.
    pub p_e: TransitionMatrix,
    /// `[~E : E]` - diagonal, lower PBW in terms of upper PBW.
    pub e_tilde_e: TransitionMatrix,
    /// `[E : L]` - upper PBW characters in terms of simple characters.
    pub e_l: TransitionMatrix,
    /// `[P : L]` - the Gram matrix of the canonical basis.
    pub p_l: TransitionMatrix,
}

pub fn transition_matrices(
    cartan: &CartanData,
    word: &ReducedWord,
    beta: &Weight,
) -> Result<TransitionMatrices, GlobalError> {
    let fam = canonical_basis(cartan, word, beta)?;
    let chars = characters(cartan, &fam)?;
    let n = fam.data.len();
    let mut diag = Mat::zero(n, n);
    for (j, v) in fam.lower.iter().enumerate() {
        *diag.at_mut(j, j) = v.upper_scale.inv();
    }
    // [E : L]: expand each upper-PBW word expansion in the dual vectors.
    let duals: Vec<BTreeMap<Vec<usize>, RatFun>> = chars
        .dual_images
        .iter()
        .map(|x| x.clone().into_terms())
        .collect();
    let mut e_l = Mat::zero(n, n);
    for (b, v) in fam.lower.iter().enumerate() {
        let upper = v.upper_class().image(cartan).into_terms();
        let coords = express_in_span(&duals, &upper).ok_or(GlobalError::SingularGram)?;
        for (bp, coef) in coords.into_iter().enumerate() {
            *e_l.at_mut(b, bp) = coef;
        }
    }
    Ok(TransitionMatrices {
        data: fam.data.clone(),
        p_e: fam.p_e.clone(),
        e_tilde_e: TransitionMatrix {
            data: fam.data.clone(),
            entries: diag,
        },
        e_l: TransitionMatrix {
            data: fam.data.clone(),
            entries: e_l,
        },
        p_l: chars.gram.clone(),
    })
}

/// The determinant `D_beta` computed several ways, plus the alternative
/// displayed `ep_t` product for comparison.
#[derive(Clone, Debug)]
pub struct DeterminantReport {
    /// Direct determinant of the Gram matrix `[P : L]`.
    pub direct: RatFun,
    /// `prod_b [~E_b : E_b]` (product of inverse self-extension scales).
    pub scale_product: RatFun,
    /// Closed Kostant-exponent form
    /// `prod_{alpha > 0} prod_{s >= 1} (1 - t^{2s})^{-P(beta - s alpha)}`.
    pub closed_form: RatFun,
    /// Coefficient of `q^beta` in the displayed product
    /// `prod_{alpha > 0} ep_t(q^alpha)`.
    pub displayed_ep: RatFun,
    /// Whether direct, scale product, and closed form all agree.
    pub factorized_consistent: bool,
    /// Whether the displayed product matches them (expected FALSE: the
    /// display disagrees with the proof's own factorization, and the
    /// factorized form is treated as authoritative).
    pub displayed_matches: bool,
}

pub fn determinant_report(
    cartan: &CartanData,
    word: &ReducedWord,
    beta: &Weight,
) -> Result<DeterminantReport, GlobalError> {
    let tm = transition_matrices(cartan, word, beta)?;
    let direct = tm.p_l.entries.determinant();
    let mut scale_product = RatFun::one();
    for (j, _) in tm.data.iter().enumerate() {
        scale_product = &scale_product * tm.e_tilde_e.entries.at(j, j);
    }
    let mut closed_form = RatFun::one();
    for alpha in cartan.positive_roots() {
        for s in 1.. {
            let mut rest = beta.clone();
            let mut ok = true;
            for (r, a) in rest.coords.iter_mut().zip(&alpha.coords) {
                *r -= s * a;
                if *r < 0 {
                    ok = false;
                }
            }
            if !ok {
                break;
            }
            let p = kostant_count(cartan, &rest) as i64;
            if p > 0 {
                let factor =
                    RatFun::from(LaurentPoly::from_pairs([(0, 1), (2 * s, -1)])).pow(-p);
                closed_form = &closed_form * &factor;
            }
        }
    }
    let displayed_ep = displayed_ep_coefficient(cartan, beta);
    let factorized_consistent = direct == scale_product && direct == closed_form;
    let displayed_matches = displayed_ep == direct;
    Ok(DeterminantReport {
        direct,
        scale_product,
        closed_form,
        displayed_ep,
        factorized_consistent,
        displayed_matches,
    })
}

/// Coefficient of `q^beta` in `prod_{alpha > 0} ep_t(q^alpha)` where
/// `ep_t(q^gamma) = sum_{n >= 0} q^{n gamma} / ((1-t^2)...(1-t^{2n}))`.
fn displayed_ep_coefficient(cartan: &CartanData, beta: &Weight) -> RatFun {
    let roots = cartan.positive_roots();
    fn rec(
        roots: &[Weight],
        idx: usize,
        remaining: &Weight,
        acc: &RatFun,
        total: &mut RatFun,
    ) {
        if idx == roots.len() {
            if remaining.is_zero() {
                *total = &*total + acc;
            }
            return;
        }
        let alpha = &roots[idx];
        let mut n = 0i64;
        let mut rem = remaining.clone();
        let mut factor = acc.clone();
        loop {
            rec(roots, idx + 1, &rem, &factor, total);
            n += 1;
            let mut ok = true;
            for (r, a) in rem.coords.iter_mut().zip(&alpha.coords) {
                *r -= a;
                if *r < 0 {
                    ok = false;
                }
            }
            if !ok {
                break;
            }
            factor = &factor
                * &RatFun::from(LaurentPoly::from_pairs([(0, 1), (2 * n, -1)])).pow(-1);
        }
    }
    let mut total = RatFun::zero();
    rec(&roots, 0, beta, &RatFun::one(), &mut total);
    total
}

/// The statistic `epsilon_i` of a character: the largest `k` such that some
/// word in the support starts with `i^k`.
pub fn epsilon_statistic(x: &WordElement, i: usize) -> u64 {
    x.terms()
        .map(|(w, _)| w.iter().take_while(|&&l| l == i).count() as u64)
        .max()
        .unwrap_or(0)
}

/// `(data index sorted increasing <_i)` comparison helper for tests and
/// reporting: true when `a` strictly precedes `b`.
pub fn datum_precedes(a: &[u64], b: &[u64]) -> bool {
    datum_lt(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{one_minus_t2, qint, series_expand};
    use crate::root_data::{enumerate_w0_words, move_path, CartanType};

    fn a2() -> CartanData {
        CartanData::new(CartanType::A, 2)
    }

    fn a3() -> CartanData {
        CartanData::new(CartanType::A, 3)
    }

    fn w121(c: &CartanData) -> ReducedWord {
        ReducedWord::new(c, vec![1, 2, 1]).unwrap()
    }

    fn wt(coords: Vec<i64>) -> Weight {
        Weight { coords }
    }

    #[test]
    fn bar_matrix_examples() {
        let c = a2();
        let w = w121(&c);
        let m = bar_matrix(&c, &w, &wt(vec![1, 0])).unwrap();
        assert_eq!(m.data.len(), 1);
        assert!(m.entries.at(0, 0).is_one());
        let m = bar_matrix(&c, &w, &wt(vec![1, 1])).unwrap();
        assert_eq!(m.data, vec![vec![1, 0, 1], vec![0, 1, 0]]);
        assert!(m.entries.at(0, 0).is_one());
        assert!(m.entries.at(1, 1).is_one());
        assert!(m.entries.at(1, 0).is_zero());
        assert_eq!(
            *m.entry(&[1, 0, 1], &[0, 1, 0]),
            &RatFun::t_pow(1) - &RatFun::t_pow(-1)
        );
    }

    #[test]
    fn canonical_basis_a2() {
        let c = a2();
        let w = w121(&c);
        let fam = canonical_basis(&c, &w, &wt(vec![1, 1])).unwrap();
        // G_(1,0,1) = E1 E2, G_(0,1,0) = E2 E1.
        assert_eq!(fam.canonical[0], MonomialElement::monomial(vec![1, 2]));
        assert_eq!(fam.canonical[1], MonomialElement::monomial(vec![2, 1]));
        // [P : ~E] = [[1, 0], [t, 1]].
        assert!(fam.p_e.entries.at(0, 0).is_one());
        assert!(fam.p_e.entries.at(0, 1).is_zero());
        assert_eq!(*fam.p_e.entries.at(1, 0), RatFun::t_pow(1));
        assert!(fam.p_e.entries.at(1, 1).is_one());
    }

    #[test]
    fn canonical_basis_rank_one() {
        // beta = n alpha_1: the single element is the divided power, and it
        // is bar-fixed on the nose.
        let c = a2();
        let w = w121(&c);
        for n in 1..=3i64 {
            let fam = canonical_basis(&c, &w, &wt(vec![n, 0])).unwrap();
            assert_eq!(fam.data.len(), 1);
            assert_eq!(fam.canonical[0], fam.lower[0].lower_class);
        }
    }

    #[test]
    fn canonical_positivity_a3() {
        let c = a3();
        let words = enumerate_w0_words(&c, 10_000).unwrap();
        let beta = wt(vec![1, 1, 1]);
        for w in words.iter().take(4) {
            let fam = canonical_basis(&c, w, &beta).unwrap();
            // dim U+_(1,1,1) = #Kostant partitions = 4 (the roots are the
            // three simples plus alpha12, alpha23, alpha123).
            assert_eq!(fam.data.len(), 4);
            for i in 0..4 {
                for j in 0..4 {
                    let e = fam.p_e.entries.at(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let p = e.as_laurent().expect("polynomial entry");
                    assert!(p.in_nat_t(), "entry {} at ({i},{j})", p);
                }
            }
        }
    }

    #[test]
    fn characters_a2() {
        let c = a2();
        let w = w121(&c);
        let fam = canonical_basis(&c, &w, &wt(vec![1, 1])).unwrap();
        let chars = characters(&c, &fam).unwrap();
        // gch L_(1,0,1) = [12], gch L_(0,1,0) = [21].
        assert_eq!(chars.simple[0], WordElement::word(vec![1, 2]));
        assert_eq!(chars.simple[1], WordElement::word(vec![2, 1]));
        // gch P coefficients are the block dimensions.
        assert_eq!(
            chars.projective[0].coeff(&[1, 2]),
            inv_one_minus_t2_pow(2)
        );
        // Gram = (1-t^2)^{-2} [[1, t], [t, 1]].
        let s = inv_one_minus_t2_pow(2);
        assert_eq!(*chars.gram.entries.at(0, 0), s);
        assert_eq!(*chars.gram.entries.at(0, 1), &RatFun::t_pow(1) * &s);
        assert_eq!(*chars.gram.entries.at(1, 0), &RatFun::t_pow(1) * &s);
        assert_eq!(*chars.gram.entries.at(1, 1), s);
    }

    #[test]
    fn simple_character_rank_one_divided_power() {
        let c = a2();
        let w = w121(&c);
        let fam = canonical_basis(&c, &w, &wt(vec![2, 0])).unwrap();
        let chars = characters(&c, &fam).unwrap();
        // gch L = [2] * [11] (the nilHecke simple).
        assert_eq!(
            chars.simple[0].coeff(&[1, 1]),
            RatFun::from(qint(2))
        );
    }

    #[test]
    fn simple_characters_bar_symmetric() {
        let c = a2();
        let w = w121(&c);
        for beta in crate::root_data::weights_up_to(&c, 4) {
            let fam = canonical_basis(&c, &w, &beta).unwrap();
            let chars = characters(&c, &fam).unwrap();
            for l in &chars.simple {
                for (word, coef) in l.terms() {
                    let p = coef.as_laurent().expect("polynomial character");
                    assert_eq!(p.bar(), p.clone(), "coefficient {} of {:?}", p, word);
                }
            }
        }
    }

    #[test]
    fn transition_matrices_a2() {
        let c = a2();
        let w = w121(&c);
        let tm = transition_matrices(&c, &w, &wt(vec![1, 1])).unwrap();
        // [E : L] = [[1, t], [0, 1]].
        assert!(tm.e_l.entries.at(0, 0).is_one());
        assert_eq!(*tm.e_l.entries.at(0, 1), RatFun::t_pow(1));
        assert!(tm.e_l.entries.at(1, 0).is_zero());
        assert!(tm.e_l.entries.at(1, 1).is_one());
        // Theorem-style equality: [P:~E]_{b,b'} = [E:L]_{b',b}.
        assert_eq!(tm.p_e.entries, tm.e_l.entries.transpose());
        // Factorization [P:L] = [P:~E][~E:E][E:L].
        let product = tm
            .p_e
            .entries
            .mul(&tm.e_tilde_e.entries)
            .mul(&tm.e_l.entries);
        assert_eq!(product, tm.p_l.entries);
    }

    #[test]
    fn determinant_a2() {
        let c = a2();
        let w = w121(&c);
        let rep = determinant_report(&c, &w, &wt(vec![1, 1])).unwrap();
        let expected = inv_one_minus_t2_pow(3);
        assert_eq!(rep.direct, expected);
        assert_eq!(rep.scale_product, expected);
        assert_eq!(rep.closed_form, expected);
        assert!(rep.factorized_consistent);
        // The displayed ep_t product disagrees (flagged, not resolved):
        // (1-t^2)^{-1} + (1-t^2)^{-2}.
        let displayed =
            &inv_one_minus_t2_pow(1) + &inv_one_minus_t2_pow(2);
        assert_eq!(rep.displayed_ep, displayed);
        assert!(!rep.displayed_matches);
    }

    #[test]
    fn determinant_word_independent() {
        let c = a2();
        let words = enumerate_w0_words(&c, 10).unwrap();
        let beta = wt(vec![2, 1]);
        let reps: Vec<_> = words
            .iter()
            .map(|w| determinant_report(&c, w, &beta).unwrap())
            .collect();
        for r in &reps {
            assert!(r.factorized_consistent);
            assert_eq!(r.direct, reps[0].direct);
        }
    }

    #[test]
    fn canonical_set_is_word_independent() {
        let c = a2();
        let words = enumerate_w0_words(&c, 10).unwrap();
        let beta = wt(vec![2, 1]);
        let fams: Vec<_> = words
            .iter()
            .map(|w| canonical_basis(&c, w, &beta).unwrap())
            .collect();
        // Same set of canonical elements (compare word expansions).
        let set = |fam: &CanonicalFamily| {
            let mut v: Vec<_> = fam
                .canonical
                .iter()
                .map(|g| g.image(&c).into_terms())
                .collect();
            v.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
            v
        };
        assert_eq!(set(&fams[0]), set(&fams[1]));
        // Label bijection realized by the composed move datum maps.
        let path = move_path(&c, &words[0], &words[1]).unwrap();
        for (idx, cvec) in fams[0].data.iter().enumerate() {
            let mut d = LusztigDatum::new(words[0].clone(), cvec.clone());
            for &mv in &path {
                d = crate::pbw::apply_move(&c, &d, mv).unwrap();
            }
            assert_eq!(d.word, words[1]);
            let target = fams[1].data.iter().position(|x| *x == d.c).unwrap();
            assert_eq!(
                fams[0].canonical[idx].image(&c),
                fams[1].canonical[target].image(&c),
                "datum {:?} -> {:?}",
                cvec,
                d.c
            );
        }
    }

    #[test]
    fn orthogonality_lower_upper() {
        let c = a2();
        let w = w121(&c);
        let beta = wt(vec![1, 1]);
        let (data, lowers) = lower_family(&c, &w, &beta).unwrap();
        for (i, vi) in lowers.iter().enumerate() {
            for (j, vj) in lowers.iter().enumerate() {
                let f = lusztig_form(&c, &vi.lower_class, &vj.upper_class()).unwrap();
                if i == j {
                    assert!(f.is_one(), "({:?}, {:?}): {}", data[i], data[j], f);
                } else {
                    assert!(f.is_zero(), "({:?}, {:?}): {}", data[i], data[j], f);
                }
            }
        }
    }

    #[test]
    fn epsilon_statistic_matches_lusztig_coordinate() {
        let c = a2();
        let w = w121(&c); // starts with letter 1
        for beta in crate::root_data::weights_up_to(&c, 4) {
            let fam = canonical_basis(&c, &w, &beta).unwrap();
            let chars = characters(&c, &fam).unwrap();
            for (cvec, l) in fam.data.iter().zip(&chars.simple) {
                assert_eq!(
                    epsilon_statistic(l, 1),
                    cvec[0],
                    "datum {:?} gch {:?}",
                    cvec,
                    l
                );
            }
        }
    }

    #[test]
    fn projective_character_positivity() {
        let c = a2();
        let w = w121(&c);
        let fam = canonical_basis(&c, &w, &wt(vec![2, 1])).unwrap();
        let chars = characters(&c, &fam).unwrap();
        for p in &chars.projective {
            for (_, coef) in p.terms() {
                assert!(series_expand(coef, 12).unwrap().all_nonnegative());
            }
        }
        let _ = one_minus_t2();
    }
}
