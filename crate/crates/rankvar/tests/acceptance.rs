//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).  Every
//! tolerance is exact.

use rankvar::bridge::{rank_of, rich, roundtrip_rank_set, RichardsonDatum};
use rankvar::enumerate::{
    adjudicate_bracket_convention, all_rank_sets, g_poly_direct, verify_stirling_identity,
    BracketConvention,
};
use rankvar::oracle::fit_dimensions_family;
use rankvar::perm::{FlagShape, PartialPermutation};
use rankvar::qpoly::QPolynomial;
use rankvar::rankset::RankSet;
use rankvar::singular::{
    is_smooth_rank, rank_singular_locus, schubert_singular_grassmannian, segre_decomposition,
    smooth_tfixed_points, tangent_dim_tfixed, ComponentData, ProvenanceTag, SingularLocusReport,
};
use rayon::prelude::*;
use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

fn rs(n: usize, pairs: &[(usize, usize)]) -> RankSet {
    RankSet::new(n, pairs.to_vec()).unwrap()
}

fn grass(k: usize, n: usize, entries: &[usize]) -> PartialPermutation {
    PartialPermutation::new(FlagShape::grassmannian(k, n).unwrap(), entries.to_vec()).unwrap()
}

fn cli(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_rankvar"))
        .args(args)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn report_line(id: u32, name: &str, started: Instant) {
    println!(
        "ACCEPTANCE criterion {id:>2} [{name}]: PASS ({:.2?})",
        started.elapsed()
    );
}

/// Singular-locus reports for every rank set with n <= 7, shared between
/// criteria 7 and 9.
fn reports_n7() -> &'static Vec<(RankSet, SingularLocusReport)> {
    static REPORTS: OnceLock<Vec<(RankSet, SingularLocusReport)>> = OnceLock::new();
    REPORTS.get_or_init(|| {
        let mut sets = Vec::new();
        for n in 1..=7 {
            for k in 1..=n {
                sets.extend(all_rank_sets(k, n).unwrap());
            }
        }
        sets.into_par_iter()
            .map(|set| {
                let report = rank_singular_locus(&set).unwrap();
                (set, report)
            })
            .collect()
    })
}

#[test]
fn criterion_01_g24_census() {
    let t = Instant::now();
    let sets = all_rank_sets(2, 4).unwrap();
    assert_eq!(sets.len(), 25, "expected 25 rank sets for G(2,4)");
    let mut by_dim = [0usize; 5];
    for s in &sets {
        by_dim[s.dimension()] += 1;
    }
    assert_eq!(by_dim, [6, 8, 7, 3, 1]);
    assert_eq!(
        g_poly_direct(2, 4).unwrap(),
        QPolynomial::from_i64_coeffs(&[6, 8, 7, 3, 1])
    );

    // The CLI surface agrees exactly.
    let listed = cli(&["enumerate", "--k", "2", "--n", "4"]);
    let parsed: Vec<RankSet> = listed
        .lines()
        .map(|line| line.parse::<RankSet>().unwrap())
        .collect();
    assert_eq!(parsed, sets);
    assert_eq!(
        cli(&["gpoly", "--k", "2", "--n", "4"]),
        "6 + 8*q + 7*q^2 + 3*q^3 + q^4\n"
    );
    report_line(1, "G(2,4) census", t);
}

#[test]
fn criterion_02_q_stirling_identity() {
    let t = Instant::now();
    for n in 1..=10 {
        for k in 1..=n {
            assert!(
                verify_stirling_identity(k, n).unwrap(),
                "identity fails at k={k} n={n}"
            );
        }
    }
    let adjudication = adjudicate_bracket_convention(6);
    let chosen = adjudication
        .iter()
        .find(|e| e.convention == BracketConvention::Adjudicated)
        .unwrap();
    assert!(
        chosen.agrees,
        "adjudicated convention must reproduce the direct count for n <= 6"
    );
    report_line(2, "q-Stirling identity, k <= n <= 10", t);
}

#[test]
fn criterion_03_algorithm_walkthroughs() {
    let t = Instant::now();
    // G(5,8): rank set <-> Fl(2,3,5;8) Richardson data, with roundtrip.
    let m = rs(8, &[(1, 7), (2, 6), (3, 4), (4, 5), (6, 8)]);
    let datum = rich(&m);
    assert_eq!(datum.shape().ks(), &[2, 3, 5]);
    assert_eq!(datum.shape().n(), 8);
    assert_eq!(datum.u().entries(), &[4, 5, 6, 7, 8]);
    assert_eq!(datum.v().entries(), &[5, 6, 7, 3, 8]);
    assert_eq!(rank_of(&datum).unwrap(), m);

    // Fl(2,4;7): rank recovers the rank set, rich gives data in Fl(1,4;7).
    let shape = FlagShape::new(vec![2, 4], 7).unwrap();
    let u = PartialPermutation::new(shape.clone(), vec![4, 6, 2, 7]).unwrap();
    let v = PartialPermutation::new(shape, vec![2, 7, 3, 5]).unwrap();
    let m2 = rank_of(&RichardsonDatum::new(u, v).unwrap()).unwrap();
    assert_eq!(m2, rs(7, &[(1, 2), (3, 4), (6, 6), (5, 7)]));
    let datum2 = rich(&m2);
    assert_eq!(datum2.shape().ks(), &[1, 4]);
    assert_eq!(datum2.u().entries(), &[6, 2, 4, 7]);
    assert_eq!(datum2.v().entries(), &[2, 3, 5, 7]);
    report_line(3, "conversion walkthroughs", t);
}

#[test]
fn criterion_04_roundtrip_identity() {
    let t = Instant::now();
    let mut checked = 0usize;
    for n in 1..=7 {
        for k in 1..=n {
            for set in all_rank_sets(k, n).unwrap() {
                assert_eq!(roundtrip_rank_set(&set).unwrap(), set, "roundtrip failed");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 5287, "expected the full census below n = 7");
    report_line(4, "roundtrip identity, all rank sets n <= 7", t);
}

#[test]
fn criterion_05_singular_locus_worked_example() {
    let t = Instant::now();
    let m = rs(10, &[(1, 6), (3, 4), (5, 10), (7, 8)]);
    let report = rank_singular_locus(&m).unwrap();
    let got: Vec<(ProvenanceTag, RankSet)> = report
        .components
        .iter()
        .map(|c| match &c.data {
            ComponentData::RankSet(s) => (c.tag, s.clone()),
            _ => unreachable!(),
        })
        .collect();
    let expected = vec![
        (
            ProvenanceTag::ExceptionalFiber,
            rs(10, &[(1, 6), (3, 4), (7, 7), (8, 8)]),
        ),
        (
            ProvenanceTag::ExceptionalFiber,
            rs(10, &[(3, 3), (4, 4), (5, 10), (7, 8)]),
        ),
        (
            ProvenanceTag::SingularPreimage,
            rs(10, &[(1, 5), (3, 4), (5, 6), (7, 8)]),
        ),
        (
            ProvenanceTag::SingularPreimage,
            rs(10, &[(3, 4), (5, 6), (6, 10), (7, 8)]),
        ),
    ];
    assert_eq!(got, expected, "the four printed components, exactly");
    report_line(5, "G(4,10) singular locus", t);
}

#[test]
fn criterion_06_g38_richardson_example() {
    let t = Instant::now();
    let u = grass(3, 8, &[4, 6, 8]);
    let sing = schubert_singular_grassmannian(&u).unwrap();
    let entries: Vec<&[usize]> = sing.iter().map(|w| w.entries()).collect();
    assert_eq!(entries, vec![&[3, 4, 8][..], &[4, 5, 6][..]]);

    let datum = RichardsonDatum::new(u.clone(), u).unwrap();
    let m = rank_of(&datum).unwrap();
    assert_eq!(m, rs(8, &[(1, 4), (3, 6), (5, 8)]));
    assert!(
        smooth_tfixed_points(&m).unwrap().is_empty(),
        "no smooth torus fixed points"
    );
    report_line(6, "G(3,8) Richardson example", t);
}

#[test]
fn criterion_07_smoothness_classification() {
    let t = Instant::now();
    for (set, report) in reports_n7() {
        assert_eq!(
            is_smooth_rank(set),
            report.is_smooth(),
            "{set}: classifier disagrees with the singular locus"
        );
    }
    let g712 = rs(
        12,
        &[(1, 5), (2, 6), (3, 7), (4, 4), (8, 10), (9, 11), (12, 12)],
    );
    let d = segre_decomposition(&g712).expect("the G(7,12) example is smooth");
    let blocks: Vec<(usize, usize)> = d.blocks.iter().map(|b| (b.j, b.m)).collect();
    assert_eq!(blocks, vec![(3, 6), (2, 4)]);
    let singles: Vec<(usize, usize)> = d
        .quotient_singletons
        .iter()
        .map(|iv| (iv.l, iv.r))
        .collect();
    assert_eq!(singles, vec![(4, 4), (12, 12)]);
    assert!(rank_singular_locus(&g712).unwrap().is_smooth());
    report_line(7, "smoothness classification, n <= 7 + G(7,12)", t);
}

#[test]
fn criterion_08_dimension_vs_finite_field_oracle() {
    let t = Instant::now();
    let primes = [2u64, 3, 5, 7, 11];
    let mut checked = 0usize;
    for n in 1..=5 {
        for k in 1..=n {
            let sets = all_rank_sets(k, n).unwrap();
            let degrees = fit_dimensions_family(&sets, &primes).unwrap();
            for (set, degree) in sets.iter().zip(degrees) {
                assert_eq!(
                    degree,
                    set.dimension(),
                    "{set}: fitted degree disagrees with the dimension formula"
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 272, "expected the full census below n = 5");
    report_line(8, "dimension formula vs finite-field degree, n <= 5", t);
}

#[test]
fn criterion_09_codimension_bounds() {
    let t = Instant::now();
    for (set, report) in reports_n7() {
        for c in &report.components {
            assert!(
                c.dim < report.ambient_dim,
                "{set}: component dimension not strictly smaller"
            );
            if c.tag == ProvenanceTag::ExceptionalFiber {
                assert!(
                    c.dim + 3 <= report.ambient_dim,
                    "{set}: exceptional stratum above the codimension bound"
                );
            }
        }
    }
    report_line(9, "codimension bounds, n <= 7", t);
}

#[test]
fn criterion_10_hook_rule_vs_tangent_count() {
    let t = Instant::now();
    let mut checked = 0usize;
    for n in 1..=7usize {
        for k in 1..=3usize.min(n) {
            let shape = FlagShape::grassmannian(k, n).unwrap();
            let mut subsets: Vec<Vec<usize>> = Vec::new();
            let mut cur = Vec::new();
            fn rec(
                start: usize,
                n: usize,
                k: usize,
                cur: &mut Vec<usize>,
                out: &mut Vec<Vec<usize>>,
            ) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for i in start..=n {
                    cur.push(i);
                    rec(i + 1, n, k, cur, out);
                    cur.pop();
                }
            }
            rec(1, n, k, &mut cur, &mut subsets);
            for u_entries in &subsets {
                let u = PartialPermutation::new(shape.clone(), u_entries.clone()).unwrap();
                let hooks = schubert_singular_grassmannian(&u).unwrap();
                for w_entries in &subsets {
                    let w = PartialPermutation::new(shape.clone(), w_entries.clone()).unwrap();
                    if !w.bruhat_leq(&u).unwrap() {
                        continue;
                    }
                    let count = tangent_dim_tfixed(&u, &w).unwrap();
                    assert!(count >= u.length(), "tangent below the dimension");
                    let below_hook = hooks.iter().any(|h| w.bruhat_leq(h).unwrap());
                    assert_eq!(
                        count > u.length(),
                        below_hook,
                        "u={u_entries:?} w={w_entries:?}: hook rule and tangent count disagree"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(
        checked > 1000,
        "expected an exhaustive sweep, got {checked}"
    );
    report_line(10, "hook rule vs tangent count, k <= 3, n <= 7", t);
}
