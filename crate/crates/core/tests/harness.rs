//! Simulation harness outputs on disk.

use std::fs;

use paretoplace_core::harness::{run_simulation, sweep_weights, SimulationConfig};
use paretoplace_core::pareto::io::load_csv;
use paretoplace_core::{evaluate, Nsga3Config};

fn quick() -> SimulationConfig {
    SimulationConfig {
        nsga3: Nsga3Config {
            generations: 60,
            ..Nsga3Config::default()
        },
        oracle_resolution: 48,
        ..SimulationConfig::default()
    }
}

fn strip_timings(report: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(report).unwrap();
    v.as_object_mut().unwrap().remove("timings");
    v
}

#[test]
fn outputs_are_reproducible_and_reevaluate() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let cfg = quick();
    let report = run_simulation(&cfg, a.path()).unwrap();
    run_simulation(&cfg, b.path()).unwrap();

    for name in ["oracle.csv", "nsga3.csv", "weighted_sum.json"] {
        assert_eq!(
            fs::read(a.path().join(name)).unwrap(),
            fs::read(b.path().join(name)).unwrap(),
            "{name} differs between runs"
        );
    }
    assert_eq!(
        strip_timings(&fs::read_to_string(a.path().join("report.json")).unwrap()),
        strip_timings(&fs::read_to_string(b.path().join("report.json")).unwrap())
    );

    let problem = cfg.problem();
    for name in ["oracle.csv", "nsga3.csv"] {
        let front = load_csv(&a.path().join(name)).unwrap();
        assert!(!front.is_empty());
        for c in front.members() {
            let again = evaluate(&problem, c.position).unwrap();
            for (x, y) in again.objectives.iter().zip(c.objectives.iter()) {
                assert!((x - y).abs() <= 1e-9, "{name}: {x} vs {y}");
            }
        }
    }
    assert_eq!(report.nsga3_size, load_csv(&a.path().join("nsga3.csv")).unwrap().len());
}

#[test]
fn config_files_reject_unknown_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cfg.json");
    fs::write(&path, r#"{"nsga3": {"seed": 1}, "bogus": 3}"#).unwrap();
    assert!(SimulationConfig::load(&path).unwrap_err().is_validation());
    fs::write(&path, r#"{"nsga3": {"seed": 1}}"#).unwrap();
    let cfg = SimulationConfig::load(&path).unwrap();
    assert_eq!(cfg.nsga3.seed, 1);
}

#[test]
fn sweep_hits_only_a_few_front_members() {
    let report = sweep_weights(&quick(), 11).unwrap();
    assert_eq!(report.entries.len(), 11);
    assert!(report.distinct_indices.len() < report.front_size);
    assert!(report.unreachable_count.unwrap() > 0);
}
