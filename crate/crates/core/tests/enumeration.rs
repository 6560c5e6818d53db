mod common;

use std::collections::BTreeSet;

use gauss_lintel::enumeration::{summary_line, DedupMode};
use gauss_lintel::{
    all_sorted_lintels, enumerate, enumerate_many, find_discrepancies, Criterion,
    EnumerationOptions, Error, FilterSpec, Lintel, ResultsFile, SortedLintel,
};

use common::{naive_canonical, SIZE10_COUNTEREXAMPLES, SIZE9_COUNTEREXAMPLE};

fn opts(workers: usize, dedup: DedupMode) -> EnumerationOptions {
    EnumerationOptions {
        workers: Some(workers),
        dedup,
        ..EnumerationOptions::default()
    }
}

fn all() -> FilterSpec {
    FilterSpec::new(false, [])
}

#[test]
fn classes_match_brute_force_grouping() {
    for n in 1..=6 {
        let brute: BTreeSet<Vec<(usize, usize)>> = all_sorted_lintels(n)
            .map(|l| naive_canonical(&Lintel::from(&l)))
            .collect();
        for dedup in [DedupMode::Set, DedupMode::LyndonTest] {
            let e = enumerate(n, &all(), &opts(1, dedup)).unwrap();
            let got: BTreeSet<Vec<(usize, usize)>> = e
                .lintels(&all())
                .unwrap()
                .iter()
                .map(|l| l.chords().iter().map(|c| (c.first, c.second)).collect())
                .collect();
            assert_eq!(got, brute, "n = {n}, {dedup:?}");
            assert_eq!(e.report.total_canonical, brute.len() as u64);
        }
    }
}

#[test]
fn results_are_canonical_and_sorted() {
    let spec = FilterSpec::prime_and(Criterion::Ca);
    let e = enumerate(8, &spec, &EnumerationOptions::default()).unwrap();
    let ls = e.lintels(&spec).unwrap();
    assert_eq!(ls.len(), 27);
    assert!(ls.iter().all(SortedLintel::is_canonical));
    assert!(ls.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn worker_count_does_not_change_output() {
    let specs: Vec<FilterSpec> = [Criterion::Ca, Criterion::B, Criterion::Stz]
        .into_iter()
        .map(FilterSpec::prime_and)
        .collect();
    let one = enumerate_many(8, &specs, &opts(1, DedupMode::LyndonTest)).unwrap();
    let three = enumerate_many(8, &specs, &opts(3, DedupMode::LyndonTest)).unwrap();
    assert_eq!(one.results, three.results);
    assert_eq!(one.report.counts, three.report.counts);
}

#[test]
fn dedup_modes_agree() {
    let spec = FilterSpec::prime_and(Criterion::Ca);
    for n in 1..=7 {
        let a = enumerate(n, &spec, &opts(2, DedupMode::Set)).unwrap();
        let b = enumerate(n, &spec, &opts(2, DedupMode::LyndonTest)).unwrap();
        assert_eq!(a.results, b.results, "n = {n}");
        assert_eq!(a.report.total_canonical, b.report.total_canonical);
    }
    assert_eq!(enumerate(7, &spec, &opts(1, DedupMode::Set)).unwrap().count(&spec), Some(10));
}

#[test]
fn necessary_criteria_never_undercount() {
    let specs: Vec<FilterSpec> = [Criterion::Ca, Criterion::B, Criterion::Gl]
        .into_iter()
        .map(FilterSpec::prime_and)
        .collect();
    for n in 1..=9 {
        let e = enumerate_many(n, &specs, &EnumerationOptions::default()).unwrap();
        let ca: BTreeSet<_> = e.lintels(&specs[0]).unwrap().iter().collect();
        for s in &specs[1..] {
            let other: BTreeSet<_> = e.lintels(s).unwrap().iter().collect();
            assert!(ca.is_subset(&other), "n = {n}, {}", s.label());
        }
    }
}

#[test]
fn summary_line_format() {
    let spec: FilterSpec = "prime,b".parse().unwrap();
    assert_eq!(spec.label(), "prime+B");
    assert_eq!(summary_line(9, &spec, 102), "size=9 filter=prime+B count=102");
    assert_eq!(all().label(), "all");
}

#[test]
fn size_limits() {
    let o = EnumerationOptions::default();
    assert!(enumerate(0, &all(), &o).is_err());
    assert!(matches!(
        enumerate(12, &all(), &o),
        Err(Error::SizeTooLarge { size: 12, max: 11 })
    ));
    let raised = EnumerationOptions { max_size: 40, ..o };
    assert!(matches!(
        enumerate(13, &all(), &raised),
        Err(Error::SizeTooLarge { size: 13, max: 12 })
    ));
}

#[test]
fn discrepancies_at_nine() {
    let d = find_discrepancies(9, Criterion::B, Criterion::Ca, &EnumerationOptions::default()).unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].lintel, SIZE9_COUNTEREXAMPLE.parse().unwrap());
    assert!(d[0].report.b && !d[0].report.realizable);
}

#[test]
fn discrepancies_at_ten() {
    let d = find_discrepancies(10, Criterion::B, Criterion::Ca, &EnumerationOptions::default()).unwrap();
    let got: Vec<SortedLintel> = d.into_iter().map(|r| r.lintel).collect();
    let mut want: Vec<SortedLintel> = SIZE10_COUNTEREXAMPLES
        .iter()
        .map(|s| s.parse::<SortedLintel>().unwrap().canonical())
        .collect();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn results_file_roundtrip() {
    let spec = FilterSpec::prime_and(Criterion::Ca);
    let e = enumerate(6, &spec, &EnumerationOptions::default()).unwrap();
    let lintels = e.lintels(&spec).unwrap().to_vec();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n6.txt");
    let file = ResultsFile::new(6, spec.label(), lintels.clone(), e.report.elapsed);
    file.save(&path).unwrap();
    let back = ResultsFile::load(&path).unwrap();
    assert_eq!(back, file);
    assert_eq!(back.lintels, lintels);
    assert_eq!(back.count(), 3);

    // rendering is deterministic apart from the elapsed field
    let again = ResultsFile::new(6, spec.label(), lintels, e.report.elapsed).render();
    assert_eq!(again, file.render());
}

#[test]
fn corrupted_file_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(
        &path,
        "# gauss-lintel v1 size=3 filter=prime+CA\n[[0,3],[1,4],[2,5]]\n[[0,2],[1,4],[3,5]]\n# count=2 elapsed=0.000\n",
    )
    .unwrap();
    match ResultsFile::load(&path) {
        Err(Error::AtLine { line, source, .. }) => {
            assert_eq!(line, 3);
            assert!(matches!(*source, Error::C1Violation { .. }), "{source}");
        }
        other => panic!("expected a line-tagged error, got {other:?}"),
    }

    std::fs::write(&path, "# gauss-lintel v1 size=3 filter=all\n[[0,3],[1,4],[2,5]]\n# count=5\n").unwrap();
    assert!(ResultsFile::load(&path).is_err());
}
