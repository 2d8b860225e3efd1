//! Acceptance suite: the eleven structural criteria the repository promises,
//! each as one test (one pass/fail line in the test output), run at the
//! stated ranges with exact arithmetic throughout.

use quantum_pbw::arith::{
    inv_one_minus_t2_pow, one_minus_t2, series_expand, LaurentPoly, RatFun,
};
use quantum_pbw::global::{canonical_basis, characters, determinant_report, transition_matrices};
use quantum_pbw::klr::{gdim_block, gdim_enumerate};
use quantum_pbw::pbw::{pbw_vector, LusztigDatum, COMMUTATOR_EXPONENT};
use quantum_pbw::quiver::{
    ext1_dim, ext1_dim_cocycle, euler_form, hom_dim, indecomposable,
};
use quantum_pbw::report::{run_checks, RunConfig};
use quantum_pbw::root_data::{
    weights_up_to, CartanData, CartanType, Orientation, ReducedWord, Weight,
};
use quantum_pbw::word_space::{lusztig_form, monomial_image, words_of_weight, MonomialElement, WordElement};

fn a1() -> CartanData {
    CartanData::new(CartanType::A, 1)
}
fn a2() -> CartanData {
    CartanData::new(CartanType::A, 2)
}
fn a3() -> CartanData {
    CartanData::new(CartanType::A, 3)
}
fn d4() -> CartanData {
    CartanData::new(CartanType::D, 4)
}

fn w(coords: &[i64]) -> Weight {
    Weight {
        coords: coords.to_vec(),
    }
}

/// Run the report-layer suite for one check and assert that every record
/// passes, dumping the first witnesses otherwise.
fn expect_all_pass(config: RunConfig) {
    let label = format!(
        "{}{} ht<={} words={} check={}",
        config.cartan_type,
        config.rank,
        config.ht_max.unwrap_or(4),
        config.words,
        config.check
    );
    let report = run_checks(&config).unwrap_or_else(|e| panic!("{}: {}", label, e));
    let failures: Vec<_> = report.results.iter().filter(|r| !r.passed()).collect();
    assert!(
        failures.is_empty(),
        "{}: {} of {} records failed; first witnesses: {:?}",
        label,
        failures.len(),
        report.summary.total,
        failures
            .iter()
            .take(3)
            .map(|r| r.witness.as_deref().unwrap_or(""))
            .collect::<Vec<_>>()
    );
    println!(
        "PASS {} ({} records)",
        label, report.summary.total
    );
}

fn config(
    cartan_type: &str,
    rank: usize,
    words: &str,
    ht_max: i64,
    check: &str,
) -> RunConfig {
    RunConfig {
        cartan_type: cartan_type.into(),
        rank,
        words: words.into(),
        ht_max: Some(ht_max),
        check: check.into(),
        ..RunConfig::default()
    }
}

/// The three stated ranges for the basis-identity criteria: A2 at height 6
/// with both reduced words, A3 at height 6 with all sixteen, D4 at height 5
/// with twenty sampled words including non-adapted ones.
fn identity_ranges(check: &str) -> [RunConfig; 3] {
    [
        config("A", 2, "1,2,1;2,1,2", 6, check),
        config("A", 3, "all", 6, check),
        config("D", 4, "all", 5, check),
    ]
}

/// Criterion 1 — convention pin: the Lusztig form on word monomials equals
/// the KLR graded block dimension for all word pairs at height <= 4 in A2 and
/// A3, and the normal-form enumeration matches to degree 10 at height <= 3;
/// all of it inside a minute.
#[test]
fn criterion_01_form_equals_klr_graded_dimension() {
    let start = std::time::Instant::now();
    for c in [a2(), a3()] {
        for beta in weights_up_to(&c, 4) {
            let ws = words_of_weight(&c, &beta);
            for m in &ws {
                for m2 in &ws {
                    let form = lusztig_form(
                        &c,
                        &MonomialElement::monomial(m.clone()),
                        &MonomialElement::monomial(m2.clone()),
                    )
                    .unwrap();
                    let gdim = gdim_block(&c, m, m2).unwrap();
                    assert_eq!(form, gdim, "form vs gdim at ({:?}, {:?})", m, m2);
                    if beta.height() <= 3 {
                        let series = gdim_enumerate(&c, m, m2, 10).unwrap();
                        let expanded = series_expand(&gdim, 10).unwrap();
                        assert!(
                            series.eq_trunc(&expanded),
                            "enumeration vs gdim at ({:?}, {:?})",
                            m,
                            m2
                        );
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {:?}", elapsed);
    println!("PASS criterion 1: form = KLR graded dimension (in {:?})", elapsed);
}

/// Criterion 2 — positivity: every entry of [P:~E] lies in N[t] at the full
/// stated ranges.
#[test]
fn criterion_02_positivity_of_canonical_to_pbw() {
    for cfg in identity_ranges("positivity") {
        expect_all_pass(cfg);
    }
    // The D4 sample genuinely exercises non-adapted words.
    let c = d4();
    let cfg = config("D", 4, "all", 5, "positivity");
    let words = quantum_pbw::report::resolve_words(&c, &cfg).unwrap();
    assert!(words.len() >= 20);
    assert!(
        words.iter().any(|word| !is_adapted(&c, word)),
        "all sampled words were adapted"
    );
    println!("PASS criterion 2: positivity at the stated ranges");
}

/// Is the word adapted to some orientation (each letter a sink of the
/// successively reflected orientation)?
fn is_adapted(c: &CartanData, word: &ReducedWord) -> bool {
    let reference = Orientation::reference(c);
    let edges: Vec<(usize, usize)> = reference.arrows().collect();
    // Try every orientation: each subset of reference edges flipped.
    for mask in 0..(1u32 << edges.len()) {
        let arrows = edges.iter().enumerate().map(|(k, &(a, b))| {
            if mask & (1 << k) != 0 {
                (b, a)
            } else {
                (a, b)
            }
        });
        let mut omega = Orientation::new(c, arrows);
        let mut ok = true;
        for &i in word.letters() {
            if !omega.is_sink(i) {
                ok = false;
                break;
            }
            omega = omega.reflect(i).unwrap();
        }
        if ok {
            return true;
        }
    }
    false
}

/// Criterion 3 — [P_b : ~E_b'] = [E_b' : L_b], canonical solver versus
/// character expansion, at the full stated ranges.
#[test]
fn criterion_03_two_pipeline_equality() {
    for cfg in identity_ranges("equality") {
        expect_all_pass(cfg);
    }
    println!("PASS criterion 3: [P:~E] = [E:L] transposed, two pipelines");
}

/// Criterion 4 — orthogonality: <~E_b, E_b'> = delta at the full stated
/// ranges.
#[test]
fn criterion_04_orthogonality() {
    for cfg in identity_ranges("orthogonality") {
        expect_all_pass(cfg);
    }
    println!("PASS criterion 4: lower/upper PBW orthogonality");
}

/// Criterion 5 — unitriangularity of [E:L] with unit diagonal, and vanishing
/// of [~E:L] outside the order, at the full stated ranges.
#[test]
fn criterion_05_unitriangularity() {
    for cfg in identity_ranges("unitriangularity") {
        expect_all_pass(cfg);
    }
    println!("PASS criterion 5: unitriangularity with respect to <=_i");
}

/// Criterion 6 — the worked A2 values at beta = alpha1 + alpha2, exactly.
#[test]
fn criterion_06_worked_a2_values() {
    let c = a2();
    let word = ReducedWord::new(&c, vec![1, 2, 1]).unwrap();
    let beta = w(&[1, 1]);
    let fam = canonical_basis(&c, &word, &beta).unwrap();
    assert_eq!(fam.data, vec![vec![1, 0, 1], vec![0, 1, 0]]);
    // Canonical basis {E1 E2, E2 E1}.
    assert_eq!(fam.canonical[0].image(&c), monomial_image(&c, &[1, 2]));
    assert_eq!(fam.canonical[1].image(&c), monomial_image(&c, &[2, 1]));
    let tm = transition_matrices(&c, &word, &beta).unwrap();
    let t = RatFun::t_pow(1);
    // [P:~E] = [[1, 0], [t, 1]].
    assert!(tm.p_e.entries.at(0, 0).is_one());
    assert!(tm.p_e.entries.at(0, 1).is_zero());
    assert_eq!(tm.p_e.entries.at(1, 0), &t);
    assert!(tm.p_e.entries.at(1, 1).is_one());
    // [P:L] = (1 - t^2)^{-2} [[1, t], [t, 1]].
    let s = inv_one_minus_t2_pow(2);
    assert_eq!(tm.p_l.entries.at(0, 0), &s);
    assert_eq!(tm.p_l.entries.at(0, 1), &(&s * &t));
    assert_eq!(tm.p_l.entries.at(1, 0), &(&s * &t));
    assert_eq!(tm.p_l.entries.at(1, 1), &s);
    // gch L = {[12], [21]}.
    let chars = characters(&c, &fam).unwrap();
    assert_eq!(chars.simple[0], WordElement::word(vec![1, 2]));
    assert_eq!(chars.simple[1], WordElement::word(vec![2, 1]));
    // D_beta = (1 - t^2)^{-3}.
    let det = determinant_report(&c, &word, &beta).unwrap();
    assert_eq!(det.direct, inv_one_minus_t2_pow(3));
    println!("PASS criterion 6: worked A2 values at alpha1 + alpha2");
}

/// Criterion 7 — determinant factorization for A2/A3 at height <= 5, word
/// independent, exact and as series to degree 20; the displayed epsilon_t
/// product comparison is part of the required output.
#[test]
fn criterion_07_determinant_factorization() {
    for cfg in [
        config("A", 2, "all", 5, "determinant"),
        config("A", 3, "all", 5, "determinant"),
    ] {
        let report = run_checks(&cfg).unwrap();
        assert!(report.all_passed(), "failures: {:?}", report.results);
        for r in &report.results {
            let note = r.note.as_deref().unwrap();
            assert!(note.contains("displayed"), "note: {}", note);
            println!("beta {:?}: {}", r.beta.as_ref().unwrap(), note);
        }
    }
    // The displayed product deviates from the factorized determinant already
    // at beta = alpha1 + alpha2 in A2; the factorized form is authoritative.
    let c = a2();
    let word = ReducedWord::new(&c, vec![1, 2, 1]).unwrap();
    let det = determinant_report(&c, &word, &w(&[1, 1])).unwrap();
    assert!(det.factorized_consistent);
    assert!(!det.displayed_matches);
    println!("PASS criterion 7: determinant factorization, deviation of the displayed product reported");
}

/// Criterion 8 — move coherence: canonical element sets agree across reduced
/// words through composed 2-/3-move bijections (A2/A3 in full, D4 sampled),
/// and the 3-move datum map is involutive.
#[test]
fn criterion_08_move_coherence() {
    expect_all_pass(config("A", 2, "all", 4, "move_invariance"));
    expect_all_pass(config("A", 3, "all", 4, "move_invariance"));
    expect_all_pass(config("D", 4, "all", 4, "move_invariance"));
    println!("PASS criterion 8: move coherence and 3-move involutivity");
}

/// Criterion 9 — rank-1 series: [~E_{m i} : E_{m i}] equals the graded
/// dimension of symmetric polynomials in m variables, for m <= 4, checked
/// exactly and as series to degree 20, with the Lusztig form of the divided
/// power as an independent oracle.
#[test]
fn criterion_09_rank_one_series() {
    let c = a1();
    let word = ReducedWord::new(&c, vec![1]).unwrap();
    for m in 1..=4u64 {
        let datum = LusztigDatum::new(word.clone(), vec![m]);
        let v = pbw_vector(&c, &datum).unwrap();
        // prod_{k <= m} (1 - t^{2k}) as an exact rational function.
        let mut prod = LaurentPoly::one();
        for k in 1..=m {
            prod = mul_poly(&prod, &LaurentPoly::from_pairs([(0, 1), (2 * k as i64, -1)]));
        }
        let expected = RatFun::new(LaurentPoly::one(), prod);
        assert_eq!(v.upper_scale.inv(), expected, "m = {}", m);
        let tm = transition_matrices(&c, &word, &w(&[m as i64])).unwrap();
        assert_eq!(tm.e_tilde_e.entries.at(0, 0), &expected, "m = {}", m);
        // Independent oracle: the form of the divided power with itself is
        // the graded dimension of symmetric polynomials in m variables.
        let form = lusztig_form(&c, &v.lower_class, &v.lower_class).unwrap();
        assert_eq!(form, expected, "m = {}", m);
        // Series to degree 20: all coefficients are partition counts, so
        // non-negative in particular.
        let series = series_expand(&expected, 20).unwrap();
        assert!(series.all_nonnegative(), "m = {}", m);
        assert_eq!(series.coeff(0), 1u32.into());
    }
    println!("PASS criterion 9: rank-1 divided-power series for m <= 4");
}

fn mul_poly(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (e1, c1) in a.iter() {
        for (e2, c2) in b.iter() {
            out.add_term(e1 + e2, c1.clone() * c2);
        }
    }
    out
}

/// Criterion 10 — quiver cross-checks: Gabriel counts 3/6/12 with trivial
/// endomorphism rings, the Euler-form identity hom - ext^1 = <.,.>_Omega on
/// all indecomposable pairs (with the cocycle count as a second oracle), and
/// character/quiver epsilon plus Saito-reflection agreement at height <= 5.
#[test]
fn criterion_10_quiver_crosschecks() {
    for (c, count) in [(a2(), 3usize), (a3(), 6), (d4(), 12)] {
        let omega = Orientation::reference(&c);
        let roots = c.positive_roots();
        assert_eq!(roots.len(), count);
        for a in &roots {
            let x = indecomposable(&c, a, &omega);
            assert_eq!(hom_dim(&x, &x).unwrap(), 1, "End(M_{:?})", a);
            for b in &roots {
                let y = indecomposable(&c, b, &omega);
                let hom = hom_dim(&x, &y).unwrap() as i64;
                let ext = ext1_dim(&c, &x, &y).unwrap() as i64;
                assert_eq!(ext, ext1_dim_cocycle(&x, &y).unwrap() as i64);
                assert_eq!(hom - ext, euler_form(&c, &omega, a, b), "({:?}, {:?})", a, b);
            }
        }
    }
    // Epsilon and Saito agreement (with Gabriel/Euler again) at height <= 5.
    expect_all_pass(config("A", 2, "1,2,1", 5, "quiver_crosscheck"));
    expect_all_pass(config("A", 3, "1,2,1,3,2,1", 5, "quiver_crosscheck"));
    expect_all_pass(config("D", 4, "all", 5, "quiver_crosscheck"));
    println!("PASS criterion 10: quiver cross-checks");
}

/// Criterion 11 — the rank-2 short-exact-sequence anchor: the graded
/// character of the induced projective P_2 * P_1 minus t^e times that of
/// P_1 * P_2 is the character of the intermediate module Q_21, whose
/// character times (1 - t^2) is the single word class [2,1]; the frozen
/// exponent e = 1 deviates from the displayed t^2 and is flagged here.
#[test]
fn criterion_11_rank_two_ses_anchor() {
    let c = a2();
    // gch of the projective induced from the word m.
    let gch_p = |m: &[usize]| monomial_image(&c, m).scale(&inv_one_minus_t2_pow(2));
    let e = COMMUTATOR_EXPONENT;
    let q21 = gch_p(&[2, 1]).sub(&gch_p(&[1, 2]).scale(&RatFun::t_pow(e)));
    // (1 - t^2) gch(Q_21) is exactly the class [2,1]: Q_21 is free of rank
    // one over a single degree-2 polynomial variable.
    let normalized = q21.scale(&RatFun::new(one_minus_t2(), LaurentPoly::one()));
    assert_eq!(normalized, WordElement::word(vec![2, 1]));
    let terms: Vec<_> = normalized.terms().collect();
    assert_eq!(terms.len(), 1);
    assert!(terms[0]
        .1
        .as_laurent()
        .map(|p| p.coeffs_nonnegative())
        .unwrap_or(false));
    // With the displayed exponent 2 the difference is not a non-negative
    // multiple of a single class, confirming the frozen e = 1.
    let wrong = gch_p(&[2, 1]).sub(&gch_p(&[1, 2]).scale(&RatFun::t_pow(2)));
    let wrong_normalized = wrong.scale(&RatFun::new(one_minus_t2(), LaurentPoly::one()));
    assert_ne!(wrong_normalized, WordElement::word(vec![2, 1]));
    println!(
        "PASS criterion 11: SES character identity holds with exponent e = {} (not the displayed 2)",
        e
    );
}
