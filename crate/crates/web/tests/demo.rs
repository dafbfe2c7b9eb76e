use serde_json::Value;
use symca_web::{rule_summary, tiling_class, Simulation};

fn empty(rule: &str, lattice: &str, dims: (usize, usize)) -> Simulation {
    let mut sim = Simulation::new(rule, lattice, dims, 2, 0.0, 1).unwrap();
    sim.clear();
    sim
}

#[test]
fn blinker_oscillates_with_period_two() {
    let mut sim = empty("B3/S23", "moore:torus", (7, 7));
    for x in 2..5 {
        sim.toggle(3 * 7 + x).unwrap();
    }
    assert_eq!(sim.cycle(10).unwrap(), Some((0, 2)));
    sim.step(1).unwrap();
    let live: Vec<usize> = (0..49).filter(|&i| sim.cells()[i] == 1).collect();
    assert_eq!(live, vec![2 * 7 + 3, 3 * 7 + 3, 4 * 7 + 3]);
    assert_eq!(sim.generation(), 1);
}

#[test]
fn glider_keeps_five_cells() {
    let mut sim = empty("B3/S23", "moore:torus", (8, 8));
    for (x, y) in [(1, 0), (2, 1), (0, 2), (1, 2), (2, 2)] {
        sim.toggle(y * 8 + x).unwrap();
    }
    for _ in 0..8 {
        sim.step(4).unwrap();
        assert_eq!(sim.population(), 5);
    }
    assert_eq!(sim.cycle(40).unwrap(), Some((0, 32)));
}

#[test]
fn random_start_is_seeded() {
    let a = Simulation::new("B3/S23", "torus:4,4", (10, 10), 0, 0.4, 7).unwrap();
    let b = Simulation::new("B3/S23", "torus:4,4", (10, 10), 0, 0.4, 7).unwrap();
    let c = Simulation::new("B3/S23", "torus:4,4", (10, 10), 0, 0.4, 8).unwrap();
    assert_eq!(a.cells(), b.cells());
    assert_ne!(a.cells(), c.cells());
    assert_eq!(Simulation::new("B3/S23", "torus:4,4", (10, 10), 0, 1.0, 7).unwrap().population(), 100);
}

#[test]
fn wrapped_edges_are_not_drawn() {
    let sim = empty("B3/S23", "moore:torus", (6, 6));
    assert_eq!(sim.lattice().edge_count(), 144);
    // 30 horizontal, 30 vertical and 2·25 diagonal edges stay inside the square.
    assert_eq!(sim.edges().len(), 110);
    for p in sim.points(0.3, 0.2) {
        assert!(p[0].abs() <= 1.0 + 1e-12 && p[1].abs() <= 1.0 + 1e-12);
    }
}

#[test]
fn solids_rotate_on_the_unit_sphere() {
    let sim = empty("B2/S", "c60", (0, 0));
    assert_eq!(sim.cell_count(), 60);
    assert_eq!(sim.edges().len(), 90);
    let a = sim.points(0.0, 0.0);
    let b = sim.points(1.1, -0.7);
    for (p, q) in a.iter().zip(&b) {
        let n = |v: &[f64; 3]| v.iter().map(|c| c * c).sum::<f64>().sqrt();
        assert!((n(p) - 1.0).abs() < 1e-9 && (n(q) - 1.0).abs() < 1e-9);
    }
    assert!(a.iter().zip(&b).any(|(p, q)| (p[0] - q[0]).abs() > 1e-3));
}

#[test]
fn hyperbolic_patch_freezes_its_rim() {
    let mut sim = Simulation::new("B1/S", "hyperbolic:4,5", (0, 0), 2, 0.0, 0).unwrap();
    for p in sim.points(0.0, 0.0) {
        assert!(p[0].hypot(p[1]) < 1.0);
    }
    let rim: Vec<usize> = (0..sim.cell_count()).filter(|&i| sim.boundary()[i]).collect();
    assert!(!rim.is_empty() && rim.len() < sim.cell_count());
    sim.toggle(0).unwrap();
    sim.step(3).unwrap();
    assert!(rim.iter().all(|&i| sim.cells()[i] == 0));
    assert!(sim.describe().contains("{4,5} hyperbolic"));
}

#[test]
fn conway_summary() {
    let v: Value = serde_json::from_str(&rule_summary("B3/S23", 8).unwrap()).unwrap();
    // Entry 2w+c: (2,1), (3,0) and (3,1) are live.
    assert_eq!(v["alpha"], "000001110000000000");
    assert_eq!(v["bs"], "B3/S23");
    // Swapping states: births at n where 8-n is not a survival count, and so on.
    assert_eq!(v["bw_bs"], "B0123478/S01234678");
    assert_eq!(v["bw_symmetric"], false);
    assert_eq!(v["level"], "leaves");
    assert_eq!(v["space"]["rules"], "262144");
    assert_eq!(v["space"]["bw_fixed"], "512");
    assert_eq!(v["space"]["orbits"], "131328");
    assert!(v["anf"].as_str().unwrap().starts_with("xp9"));
}

#[test]
fn day_and_night_is_self_dual() {
    let v: Value = serde_json::from_str(&rule_summary("B3678/S34678", 8).unwrap()).unwrap();
    assert_eq!(v["bw_symmetric"], true);
    assert_eq!(v["bw_alpha"], v["alpha"]);
    assert_eq!(v["is_canonical"], true);
}

#[test]
fn tilings() {
    assert_eq!(tiling_class(3, 5).unwrap(), "spherical (V=12, E=30, F=20)");
    assert_eq!(tiling_class(6, 3).unwrap(), "euclidean");
    assert_eq!(tiling_class(7, 3).unwrap(), "hyperbolic");
    assert!(tiling_class(2, 9).is_err());
}

#[test]
fn bad_input_is_reported() {
    assert!(Simulation::new("B3/S23", "cube", (6, 6), 2, 0.5, 0).is_err());
    assert!(Simulation::new("B3/S23", "moore:torus", (6, 6), 2, 1.5, 0).is_err());
    assert!(Simulation::new("B9/S", "moore:torus", (6, 6), 2, 0.5, 0).is_err());
    let mut sim = empty("B3/S23", "moore:torus", (6, 6));
    assert!(sim.toggle(36).is_err());
    assert!(rule_summary("0101", 8).is_err());
}
