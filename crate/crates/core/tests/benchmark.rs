use bmgedit::bench::{classification_metrics, generate_instance, run_benchmark, summarize, write_csv_file, BenchmarkConfig};
use bmgedit::{is_bmg, Method};

fn small(seed: u64) -> BenchmarkConfig {
    BenchmarkConfig {
        leaves: 12,
        colors: 4,
        instances: 4,
        restarts: 2,
        seed,
        timing: false,
        ..Default::default()
    }
}

#[test]
fn rows_cover_every_method_and_variant() {
    let cfg = small(1);
    let rows = run_benchmark(&cfg).unwrap();
    assert_eq!(rows.len(), cfg.instances * cfg.methods.len() * 2);
    for m in Method::ALL {
        for variant in ["direct", "rebuild"] {
            let k = rows.iter().filter(|r| r.method == m.name() && r.variant == variant).count();
            assert_eq!(k, cfg.instances, "{m} {variant}");
        }
    }
    for r in &rows {
        assert!((0.0..=1.0).contains(&r.recall) && (0.0..=1.0).contains(&r.precision));
        assert_eq!(r.runtime_ms, 0.0);
    }
    assert_eq!(summarize(&rows).len(), Method::ALL.len() * 2);
}

#[test]
fn runs_are_reproducible_and_seed_dependent() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..3).map(|i| dir.path().join(format!("{i}.csv"))).collect();
    write_csv_file(&run_benchmark(&small(5)).unwrap(), &paths[0]).unwrap();
    write_csv_file(&run_benchmark(&small(5)).unwrap(), &paths[1]).unwrap();
    write_csv_file(&run_benchmark(&small(6)).unwrap(), &paths[2]).unwrap();
    let text: Vec<String> = paths.iter().map(|p| std::fs::read_to_string(p).unwrap()).collect();
    assert_eq!(text[0], text[1]);
    assert_ne!(text[0], text[2]);
}

#[test]
fn instances_do_not_depend_on_method_list() {
    let mut one = small(9);
    one.methods = vec![Method::Bpmf];
    for i in 0..3 {
        let a = generate_instance(&one, i).unwrap();
        let b = generate_instance(&small(9), i).unwrap();
        assert_eq!(a.perturbed, b.perturbed);
        assert!(is_bmg(&a.original));
        assert_eq!(a.original, a.tree.bmg());
        let m = classification_metrics(&a.original, &a.original).unwrap();
        assert_eq!((m.recall, m.precision, m.accuracy), (1.0, 1.0, 1.0));
    }
}
