//! Browser demo. [`Simulation`] and [`rule_summary`] are ordinary Rust and
//! are tested natively; the `bindings` module wraps them for JavaScript when
//! built for `wasm32`.

use serde_json::json;
use symca::engine::{self, CaState};
use symca::f2poly::rule_to_anf;
use symca::lattice::{build_from_spec, classify_tiling, EmbeddingKind};
use symca::rule::{count_bw_fixed, count_orbits_closed, count_rules, BsRule};
use symca::{Lattice, Surface, SymmetricRule, TilingClass};

#[cfg(target_arch = "wasm32")]
mod bindings;

/// Largest valence whose ANF is shown by [`rule_summary`].
pub const ANF_MAX_K: u32 = 12;

/// A binary rule running on one lattice.
pub struct Simulation {
    lattice: Lattice,
    rule: SymmetricRule,
    state: CaState,
    points: Vec<[f64; 3]>,
}

fn normalize(points: &mut [[f64; 3]]) {
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in points.iter() {
        for a in 0..2 {
            lo[a] = lo[a].min(p[a]);
            hi[a] = hi[a].max(p[a]);
        }
    }
    let half = ((hi[0] - lo[0]).max(hi[1] - lo[1]) / 2.0).max(f64::EPSILON);
    let mid = [(lo[0] + hi[0]) / 2.0, (lo[1] + hi[1]) / 2.0];
    for p in points.iter_mut() {
        p[0] = (p[0] - mid[0]) / half;
        p[1] = (p[1] - mid[1]) / half;
    }
}

fn base_points(lattice: &Lattice) -> Vec<[f64; 3]> {
    if let Some(e) = lattice.embedding() {
        let mut pts: Vec<[f64; 3]> = e.coords.iter().map(|c| [c[0], c[1], 0.0]).collect();
        if e.kind == EmbeddingKind::Euclidean {
            normalize(&mut pts);
        }
        return pts;
    }
    if let Some(p3) = lattice.positions3() {
        let r =
            p3.iter().map(|p| (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt()).fold(0.0, f64::max).max(f64::EPSILON);
        return p3.iter().map(|p| [p[0] / r, p[1] / r, p[2] / r]).collect();
    }
    let n = lattice.cell_count();
    (0..n)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / n as f64;
            [t.cos(), t.sin(), 0.0]
        })
        .collect()
}

fn surface_label(s: Surface) -> &'static str {
    match s {
        Surface::E2Patch => "flat patch",
        Surface::Torus => "torus",
        Surface::Klein => "Klein bottle",
        Surface::Sphere => "sphere",
        Surface::Projective => "projective plane",
        Surface::H2Patch => "Poincaré disk patch",
    }
}

impl Simulation {
    /// `rule` is B/S text or an α bit string for the lattice's valence.
    pub fn new(
        rule: &str,
        lattice: &str,
        dims: (usize, usize),
        layers: u32,
        density: f64,
        seed: u64,
    ) -> Result<Simulation, String> {
        let lattice = build_from_spec(lattice, dims, layers).map_err(|e| e.to_string())?;
        let rule = SymmetricRule::parse(rule, lattice.valence() as u32).map_err(|e| e.to_string())?;
        if !(0.0..=1.0).contains(&density) {
            return Err(format!("density must lie in [0, 1], got {density}"));
        }
        let state = CaState::random_binary(lattice.cell_count(), density, seed);
        let points = base_points(&lattice);
        Ok(Simulation { lattice, rule, state, points })
    }

    pub fn cell_count(&self) -> usize {
        self.lattice.cell_count()
    }

    pub fn valence(&self) -> usize {
        self.lattice.valence()
    }

    pub fn generation(&self) -> u64 {
        self.state.generation()
    }

    pub fn population(&self) -> usize {
        self.state.live_cells().count()
    }

    pub fn cells(&self) -> &[u8] {
        self.state.cells()
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn step(&mut self, n: u32) -> Result<(), String> {
        for _ in 0..n {
            self.state = engine::step(&self.lattice, &self.rule, &self.state).map_err(|e| e.to_string())?;
        }
        Ok(())
    }

    pub fn toggle(&mut self, cell: usize) -> Result<(), String> {
        if cell >= self.cell_count() {
            return Err(format!("cell {cell} out of range"));
        }
        let v = 1 - self.state.get(cell);
        self.state.set(cell, v).map_err(|e| e.to_string())
    }

    pub fn clear(&mut self) {
        let generation = self.state.generation();
        self.state = CaState::zeros(2, self.cell_count()).expect("binary alphabet").with_generation(generation);
    }

    /// `(transient, period)` of the current state, searched for `max_steps`
    /// steps without advancing the simulation.
    pub fn cycle(&self, max_steps: u64) -> Result<Option<(u64, u64)>, String> {
        let c = engine::detect_cycle(&self.lattice, &self.rule, &self.state, max_steps).map_err(|e| e.to_string())?;
        Ok(c.map(|c| (c.transient, c.period)))
    }

    /// Drawing coordinates in `[-1, 1]`, one `[x, y, depth]` per cell.
    /// Solids are turned by `yaw` and `pitch` radians and projected
    /// orthographically; flat lattices ignore both angles.
    pub fn points(&self, yaw: f64, pitch: f64) -> Vec<[f64; 3]> {
        if self.lattice.positions3().is_none() {
            return self.points.clone();
        }
        let (sy, cy) = yaw.sin_cos();
        let (sp, cp) = pitch.sin_cos();
        self.points
            .iter()
            .map(|&[x, y, z]| {
                let (x1, z1) = (cy * x + sy * z, -sy * x + cy * z);
                let (y2, z2) = (cp * y - sp * z1, sp * y + cp * z1);
                [x1, y2, z2]
            })
            .collect()
    }

    /// Edges to draw. Edges that cross a wrapped boundary are left out.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let all = self.lattice.edges();
        if self.lattice.grid().is_none() {
            return all;
        }
        let len = |&(a, b): &(usize, usize)| {
            let (p, q) = (self.points[a], self.points[b]);
            (p[0] - q[0]).hypot(p[1] - q[1])
        };
        let shortest = all.iter().map(len).fold(f64::INFINITY, f64::min);
        all.into_iter().filter(|e| len(e) <= 2.0 * shortest).collect()
    }

    pub fn boundary(&self) -> &[bool] {
        self.lattice.boundary_mask()
    }

    /// Short description of the lattice for display.
    pub fn describe(&self) -> String {
        let l = &self.lattice;
        let mut parts = vec![format!("{} cells", l.cell_count()), format!("valence {}", l.valence())];
        if let Some((p, k)) = l.schlafli() {
            if let Ok(class) = tiling_class(p, k) {
                parts.push(format!("{{{p},{k}}} {class}"));
            }
        }
        parts.push(surface_label(l.surface()).to_string());
        if let Ok(chi) = l.euler_characteristic() {
            parts.push(format!("χ = {chi}"));
        }
        let frozen = l.boundary_cells().count();
        if frozen > 0 {
            parts.push(format!("{frozen} frozen boundary cells"));
        }
        parts.join(", ")
    }
}

/// JSON description of a binary rule on `k` leaves: its table, black-white
/// partner, orbit representative, B/S form, ANF and the rule-space counts.
pub fn rule_summary(rule: &str, k: u32) -> Result<String, String> {
    let rule = SymmetricRule::parse(rule, k).map_err(|e| e.to_string())?;
    let level = rule.level();
    let bw = rule.bw_transform().map_err(|e| e.to_string())?;
    let canonical = rule.canonical_rep().map_err(|e| e.to_string())?;
    let bs = |r: &SymmetricRule| BsRule::from_rule(r).ok().map(|b| b.to_string());
    let anf = if k <= ANF_MAX_K { rule_to_anf(&rule).ok().map(|p| p.to_string()) } else { None };
    let value = json!({
        "alpha": rule.alpha_string(),
        "anf": anf,
        "bs": bs(&rule),
        "bw_alpha": bw.alpha_string(),
        "bw_bs": bs(&bw),
        "bw_symmetric": rule == bw,
        "canonical_alpha": canonical.alpha_string(),
        "is_canonical": rule == canonical,
        "k": k,
        "level": level.name(),
        "space": {
            "bw_fixed": count_bw_fixed(k, level).to_string(),
            "orbits": count_orbits_closed(k, level).to_string(),
            "rules": count_rules(2, k, level).to_string(),
        },
    });
    Ok(value.to_string())
}

/// Name of the geometry of the regular tiling `{p,k}`.
pub fn tiling_class(p: u32, k: u32) -> Result<String, String> {
    Ok(match classify_tiling(p, k).map_err(|e| e.to_string())? {
        TilingClass::Spherical { v, e, f } => format!("spherical (V={v}, E={e}, F={f})"),
        TilingClass::Euclidean => "euclidean".to_string(),
        TilingClass::Hyperbolic => "hyperbolic".to_string(),
    })
}
