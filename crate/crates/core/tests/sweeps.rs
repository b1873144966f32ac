use std::path::PathBuf;

use flagweyl::verify::*;
use flagweyl::*;

fn example() -> Diagram {
    Diagram::parse_inline("1,3;2,3;").unwrap()
}

fn cfg(workers: usize) -> SweepConfig {
    SweepConfig { workers, ..Default::default() }
}

fn pattern_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/multiplicitous")
}

fn load_patterns() -> Vec<PatternGrid> {
    let mut paths: Vec<PathBuf> =
        std::fs::read_dir(pattern_dir()).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    paths.iter().map(|p| PatternGrid::load(p).unwrap()).collect()
}

#[test]
fn sharded_sweeps_merge_deterministically() {
    let family = DiagramFamily::AllDiagrams { n: 3, max_boxes: 9 };
    for check in [
        SweepCheck::LowerBound,
        SweepCheck::EqualityIffUnstable,
        SweepCheck::UpperBound { northwest: None, general: None },
    ] {
        let single = check.run(&family, &cfg(1)).unwrap();
        for workers in [2, 3, 5] {
            let sharded = check.run(&family, &cfg(workers)).unwrap();
            assert_eq!(sharded.checked, single.checked);
            assert_eq!(sharded.to_canonical_json(), single.to_canonical_json());
        }
    }
    // violations are ordered too: use a dummy pattern that fires on many instances
    let free: PatternGrid = "columnswap: false\n.\n".parse().unwrap();
    let check = SweepCheck::ZeroOneCharacterization(vec![free]);
    let single = check.run(&family, &cfg(1)).unwrap();
    assert!(single.violations.len() > 100);
    assert_eq!(check.run(&family, &cfg(4)).unwrap().to_canonical_json(), single.to_canonical_json());
}

#[test]
fn report_merge_is_associative_and_commutative() {
    let family = DiagramFamily::AllDiagrams { n: 3, max_boxes: 4 };
    let free: PatternGrid = "columnswap: false\n.\n".parse().unwrap();
    let full = SweepCheck::ZeroOneCharacterization(vec![free]).run(&family, &cfg(1)).unwrap();
    assert!(full.violations.len() > 50);
    // split the report three ways by instance index
    let parts: Vec<VerificationReport> = (0..3)
        .map(|s| {
            let mut part = VerificationReport::new(&full.check, &full.family);
            part.violations = full.violations.iter().filter(|v| v.index % 3 == s).cloned().collect();
            part.checked = part.violations.len() as u64;
            part
        })
        .collect();
    let zero = || VerificationReport::new(&full.check, &full.family);
    let left = parts.iter().cloned().fold(zero(), VerificationReport::merge);
    let right = parts.iter().rev().cloned().fold(zero(), VerificationReport::merge);
    let nested = parts[0].clone().merge(parts[1].clone().merge(parts[2].clone()));
    assert_eq!(left.to_canonical_json(), right.to_canonical_json());
    assert_eq!(left.to_canonical_json(), nested.to_canonical_json());
    assert_eq!(left.violations, full.violations);
}

#[test]
fn checkpointed_sweep_resumes_to_the_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    let family = DiagramFamily::AllDiagrams { n: 3, max_boxes: 9 };
    let check = SweepCheck::EqualityIffUnstable;
    let full = check.run(&family, &cfg(1)).unwrap();

    // simulate an interrupted run: only the first 200 instances were processed
    let head: Vec<Diagram> = family.instances().into_iter().take(200).map(|i| i.diagram).collect();
    let partial = check.run(&DiagramFamily::ExplicitList(head), &cfg(1)).unwrap();
    let mut partial = VerificationReport { family: family.describe(), ..partial };
    partial.elapsed_s = 0.0;
    Checkpoint { family: family.describe(), shard_cursor: 200, check: check.name().into(), partial }
        .save(&path)
        .unwrap();

    let resumed = sweep_with_checkpoint(&check, &family, &cfg(2), &path, 64).unwrap();
    assert_eq!(resumed.checked, 512);
    assert_eq!(resumed.to_canonical_json(), full.to_canonical_json());
    let saved = Checkpoint::load(&path).unwrap().unwrap();
    assert_eq!(saved.shard_cursor, 512);
    let raw: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(raw.get("family").is_some() && raw.get("shard_cursor").is_some());

    // a checkpoint for another family is ignored
    let other = DiagramFamily::AllDiagrams { n: 2, max_boxes: 4 };
    let fresh = sweep_with_checkpoint(&check, &other, &cfg(1), &path, 5).unwrap();
    assert_eq!(fresh.checked, 16);
}

#[test]
fn example_diagram_reports() {
    let fam = DiagramFamily::ExplicitList(vec![example()]);
    let c = cfg(1);
    let r = verify_lower_bound(&fam, &c).unwrap();
    assert!(r.violations.is_empty());
    let chi = dual_character(&example()).unwrap();
    assert_eq!(chi.principal_specialization(), 6.into());
    assert_eq!(example().rank(), 3);

    let r = verify_equality_iff_unstable(&fam, &c).unwrap();
    assert!(r.violations.is_empty());
    assert_eq!(r.tally("equality"), 0);
    let pair = example().has_unstable_pair().unwrap();
    let cells = [pair.first, pair.second];
    assert!(cells.contains(&Cell::new(3, 1)) && cells.contains(&Cell::new(2, 2)), "{cells:?}");

    let r = verify_upper_bound(&fam, None, None, &c).unwrap();
    assert_eq!(r.tally("equality"), 1);
    assert_eq!(example().count_below(), 6u32.into());
}

#[test]
fn example_is_a_conjecture_direction_instance() {
    let r = verify_zero_one_characterization(
        &DiagramFamily::ExplicitList(vec![example()]),
        &load_patterns(),
        &cfg(1),
    )
    .unwrap();
    assert_eq!(r.hard_violations().count(), 0);
    // not zero-one, so some configuration must occur
    assert_eq!(r.candidates().count(), 0, "{}", r.to_json());
}

#[test]
fn rothe_31542_rank_equals_pattern_count() {
    let w: Permutation = "31542".parse().unwrap();
    assert_eq!(w.rothe().rank(), 4);
    assert_eq!(w.count_132(), 4);
}

/// The pattern files are exactly the non-zero-one fillings of four rows and
/// two columns: a filling matches some file iff its character has a
/// coefficient above one.
#[test]
fn pattern_files_cover_exactly_the_non_zero_one_fillings() {
    let patterns = load_patterns();
    assert_eq!(patterns.len(), 10);
    let mut non_zero_one = 0;
    for mask in 0u32..256 {
        let col = |shift: u32| -> Vec<usize> {
            (0..4).filter(|i| mask >> (i + shift) & 1 == 1).map(|i| i as usize + 1).collect()
        };
        let d = Diagram::from_columns(vec![col(0), col(4), vec![], vec![]]).unwrap();
        let chi = dual_character(&d).unwrap();
        // compare restricted to the two occupied columns only
        let hit = patterns.iter().any(|p| p.find_in(&d).is_some_and(|m| m.cols.iter().all(|&c| c <= 2)));
        assert_eq!(hit, !chi.is_zero_one(), "{d}");
        non_zero_one += usize::from(!chi.is_zero_one());
    }
    assert_eq!(non_zero_one, 75);
}

#[test]
fn derived_configurations_never_occur_in_zero_one_characters() {
    let r = verify_zero_one_characterization(
        &DiagramFamily::AllDiagrams { n: 4, max_boxes: 6 },
        &load_patterns(),
        &cfg(2),
    )
    .unwrap();
    assert!(!r.truncated);
    assert_eq!(r.hard_violations().count(), 0, "{}", r.to_json());
}

#[test]
fn schubert_sweeps() {
    let r = verify_schubert_identities(4, &cfg(1)).unwrap();
    assert_eq!((r.checked, r.violations.len()), (24, 0));
    let r = verify_macdonald(4, &cfg(1)).unwrap();
    assert_eq!((r.checked, r.violations.len()), (24, 0));
    let r = verify_key_identities(3, 4, &cfg(2)).unwrap();
    assert_eq!((r.checked, r.violations.len()), (256, 0));
}

#[test]
fn key_of_01_attains_equality() {
    let a: Composition = "0,1".parse().unwrap();
    assert_eq!(key(&a).principal_specialization(), 2.into());
    assert_eq!(a.rinv_weight(), 1);
    let r = verify_key_identities(1, 2, &cfg(1)).unwrap();
    assert!(r.violations.is_empty());
}
