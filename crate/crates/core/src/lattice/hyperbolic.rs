//! Finite patches of the hyperbolic tilings `{p,k}`.
//!
//! The tiling is grown combinatorially in coronas. The first corona is the
//! flower of `k` faces around a central vertex; each later corona attaches
//! one ring of faces along the outer boundary cycle of the current disk. A
//! boundary vertex that still misses `r` faces sends `r - 1` new edges
//! ("spokes") outward, and consecutive spokes are closed into `p`-gons with
//! fresh vertices. When the closing polygon would need `-1` fresh vertices
//! the two spoke ends coincide (this is how the `{3,k}` layers close up).
//!
//! The patch handed out is the ball of graph radius `layers` around the
//! center. Vertices created in corona `n` lie at distance at least `n`, so
//! `layers` coronas contain the whole ball with complete adjacency.
//!
//! Coordinates in the Poincaré disk are placed afterwards from the
//! combinatorial map: the center sits at the origin, its neighbors on a
//! circle, and every other vertex follows by rotating about face centers.

use std::collections::VecDeque;

use num_complex::Complex64;

use super::{classify_tiling, Embedding, EmbeddingKind, Lattice, LatticeError, Surface, TilingClass};

/// Upper bound on the number of vertices a patch build may create.
pub const MAX_PATCH_CELLS: usize = 2_000_000;

/// Hyperbolic length of an edge of `{p,k}` (unit curvature).
pub fn edge_length(p: u32, k: u32) -> f64 {
    let (pf, kf) = (f64::from(p), f64::from(k));
    2.0 * ((std::f64::consts::PI / pf).cos() / (std::f64::consts::PI / kf).sin()).acosh()
}

/// Distance from a vertex to the center of an incident face.
fn vertex_to_center(p: u32, k: u32) -> f64 {
    let (pf, kf) = (f64::from(p), f64::from(k));
    let cot = |x: f64| 1.0 / x.tan();
    (cot(std::f64::consts::PI / pf) * cot(std::f64::consts::PI / kf)).acosh()
}

struct Map {
    p: usize,
    k: usize,
    adj: Vec<Vec<usize>>,
    face_count: Vec<usize>,
    faces: Vec<Vec<usize>>,
}

impl Map {
    fn vertex(&mut self) -> Result<usize, LatticeError> {
        if self.adj.len() >= MAX_PATCH_CELLS {
            return Err(LatticeError::TooLarge(MAX_PATCH_CELLS));
        }
        self.adj.push(Vec::new());
        self.face_count.push(0);
        Ok(self.adj.len() - 1)
    }

    fn vertices(&mut self, n: usize) -> Result<Vec<usize>, LatticeError> {
        (0..n).map(|_| self.vertex()).collect()
    }

    fn face(&mut self, cycle: Vec<usize>) {
        debug_assert_eq!(cycle.len(), self.p);
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            if !self.adj[a].contains(&b) {
                self.adj[a].push(b);
                self.adj[b].push(a);
            }
            self.face_count[a] += 1;
        }
        self.faces.push(cycle);
    }

    /// Faces around the center. Returns the boundary cycle, oriented so that
    /// inner faces traverse it forwards.
    fn flower(&mut self) -> Result<Vec<usize>, LatticeError> {
        let center = self.vertex()?;
        let petals = self.vertices(self.k)?;
        let mut boundary = Vec::new();
        for j in 0..self.k {
            let chain = self.vertices(self.p - 3)?;
            let next = petals[(j + 1) % self.k];
            let mut cycle = vec![center, petals[j]];
            cycle.extend(&chain);
            cycle.push(next);
            self.face(cycle);
            boundary.push(petals[j]);
            boundary.extend(chain);
        }
        Ok(boundary)
    }

    /// Attaches one ring of faces outside `boundary` and returns the new
    /// boundary cycle.
    fn corona(&mut self, boundary: &[usize]) -> Result<Vec<usize>, LatticeError> {
        let m = boundary.len();
        let mut spokes = Vec::new(); // position in `boundary` of each spoke's foot
        for (i, &b) in boundary.iter().enumerate() {
            let missing =
                self.k.checked_sub(self.face_count[b]).filter(|&r| r >= 1).ok_or_else(|| {
                    LatticeError::Invalid(format!("boundary vertex {b} has no room for an outer face"))
                })?;
            spokes.extend(std::iter::repeat_n(i, missing - 1));
        }
        let ns = spokes.len();
        if ns == 0 {
            return Err(LatticeError::Invalid("corona without outward edges".into()));
        }
        // Boundary segment covered by the face between spoke j and j+1, and
        // the number of fresh vertices that face needs.
        let mut segments = Vec::with_capacity(ns);
        let mut fresh = Vec::with_capacity(ns);
        for j in 0..ns {
            let (a, c) = (spokes[j], spokes[(j + 1) % ns]);
            let len = if a == c && ns > 1 && j + 1 < ns { 1 } else { (c + m - a - 1) % m + 2 };
            let seg: Vec<usize> = (0..len).map(|t| boundary[(a + t) % m]).collect();
            let need = self.p as i64 - len as i64 - 2;
            if need < -1 {
                return Err(LatticeError::Invalid(format!("a {}-gon cannot span {len} boundary vertices", self.p)));
            }
            segments.push(seg);
            fresh.push(need);
        }
        // Spoke ends: faces needing -1 fresh vertices glue end j to end j+1.
        let start = (0..ns)
            .find(|&j| fresh[(j + ns - 1) % ns] >= 0)
            .ok_or_else(|| LatticeError::Invalid("every spoke end merges into one vertex".into()))?;
        let mut ends = vec![0usize; ns];
        for t in 0..ns {
            let j = (start + t) % ns;
            ends[j] = if t > 0 && fresh[(j + ns - 1) % ns] < 0 { ends[(j + ns - 1) % ns] } else { self.vertex()? };
        }
        let mut next_boundary = Vec::new();
        for t in 0..ns {
            let j = (start + t) % ns;
            let seg = &segments[j];
            let (end_a, end_c) = (ends[j], ends[(j + 1) % ns]);
            let mut cycle = vec![seg[0], end_a];
            if next_boundary.last() != Some(&end_a) {
                next_boundary.push(end_a);
            }
            if fresh[j] >= 0 {
                let chain = self.vertices(fresh[j] as usize)?;
                cycle.extend(&chain);
                cycle.push(end_c);
                next_boundary.extend(chain);
            }
            cycle.extend(seg[1..].iter().rev());
            // the spoke edges foot–end are created by the face walk
            self.face(cycle);
        }
        if next_boundary.len() > 1 && next_boundary.first() == next_boundary.last() {
            next_boundary.pop();
        }
        Ok(next_boundary)
    }
}

fn to_disk_frame(a: Complex64, z: Complex64) -> Complex64 {
    (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z)
}

fn from_disk_frame(a: Complex64, w: Complex64) -> Complex64 {
    (w + a) / (Complex64::new(1.0, 0.0) + a.conj() * w)
}

fn rotate_about(c: Complex64, angle: f64, z: Complex64) -> Complex64 {
    from_disk_frame(c, Complex64::from_polar(1.0, angle) * to_disk_frame(c, z))
}

/// Places every vertex in the Poincaré disk. Faces are counter-clockwise.
fn place(map: &Map, p: u32, k: u32) -> Vec<Complex64> {
    let n = map.adj.len();
    let mut pos: Vec<Option<Complex64>> = vec![None; n];
    let r_edge = (edge_length(p, k) / 2.0).tanh();
    let r_center = (vertex_to_center(p, k) / 2.0).tanh();
    let step = 2.0 * std::f64::consts::PI / f64::from(p);
    let half_vertex_angle = std::f64::consts::PI / f64::from(k);
    pos[0] = Some(Complex64::new(0.0, 0.0));
    for j in 0..map.k {
        pos[1 + j] = Some(Complex64::from_polar(r_edge, 2.0 * std::f64::consts::PI * j as f64 / f64::from(k)));
    }
    let mut remaining = n - 1 - map.k;
    while remaining > 0 {
        let before = remaining;
        for face in &map.faces {
            let len = face.len();
            if face.iter().all(|&v| pos[v].is_some()) {
                continue;
            }
            let Some(s) = (0..len).find(|&i| pos[face[i]].is_some() && pos[face[(i + 1) % len]].is_some()) else {
                continue;
            };
            let a = pos[face[s]].unwrap();
            let b = pos[face[(s + 1) % len]].unwrap();
            let dir = to_disk_frame(a, b).arg() + half_vertex_angle;
            let center = from_disk_frame(a, Complex64::from_polar(r_center, dir));
            let mut prev = b;
            for t in 2..len {
                let v = face[(s + t) % len];
                let z = rotate_about(center, step, prev);
                if pos[v].is_none() {
                    pos[v] = Some(z);
                    remaining -= 1;
                }
                prev = pos[v].unwrap();
            }
        }
        assert!(remaining < before, "placement stalled on a disconnected face map");
    }
    pos.into_iter().map(Option::unwrap).collect()
}

/// Ball of graph radius `layers` around a vertex of the hyperbolic tiling
/// `{p,k}`. Cells at exactly distance `layers` form the boundary.
pub fn build_hyperbolic_patch(p: u32, k: u32, layers: u32) -> Result<Lattice, LatticeError> {
    match classify_tiling(p, k)? {
        TilingClass::Hyperbolic => {}
        _ => return Err(LatticeError::NotHyperbolic { p, k }),
    }
    if layers == 0 {
        return Err(LatticeError::Invalid("a patch needs at least one layer".into()));
    }
    let mut map = Map { p: p as usize, k: k as usize, adj: Vec::new(), face_count: Vec::new(), faces: Vec::new() };
    let mut boundary = map.flower()?;
    for _ in 1..layers {
        boundary = map.corona(&boundary)?;
    }

    // BFS ball, cells renumbered in discovery order.
    let mut dist = vec![u32::MAX; map.adj.len()];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    dist[0] = 0;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        if dist[v] == layers {
            continue;
        }
        for &u in &map.adj[v] {
            if dist[u] == u32::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    let mut new_id = vec![usize::MAX; map.adj.len()];
    for (i, &v) in order.iter().enumerate() {
        new_id[v] = i;
    }
    let neighbors: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| map.adj[v].iter().filter(|&&u| new_id[u] != usize::MAX).map(|&u| new_id[u]).collect())
        .collect();
    let boundary_mask: Vec<bool> = order.iter().map(|&v| dist[v] == layers).collect();
    let faces: Vec<Vec<usize>> = map
        .faces
        .iter()
        .filter(|f| f.iter().all(|&v| new_id[v] != usize::MAX))
        .map(|f| f.iter().map(|&v| new_id[v]).collect())
        .collect();
    let placed = place(&map, p, k);
    let coords = order.iter().map(|&v| [placed[v].re, placed[v].im]).collect();

    let mut lattice = Lattice::new(neighbors, k as usize, Surface::H2Patch, boundary_mask)?;
    lattice.faces = Some(faces);
    lattice.schlafli = Some((p, k));
    lattice.embedding = Some(Embedding { kind: EmbeddingKind::PoincareDisk, coords });
    Ok(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_layer_is_a_star() {
        let l = build_hyperbolic_patch(3, 8, 1).unwrap();
        assert_eq!(l.cell_count(), 9);
        assert_eq!(l.neighbors(0).len(), 8);
        assert!(!l.is_boundary(0));
        assert!((1..9).all(|c| l.is_boundary(c)));
    }

    #[test]
    fn sphere_sizes_of_the_heptagonal_triangulation() {
        // vertices at distance exactly n in {3,7}: 1, 7, 21, 56
        let l = build_hyperbolic_patch(3, 7, 3).unwrap();
        assert_eq!(l.cell_count(), 1 + 7 + 21 + 56);
    }

    #[test]
    fn heptagon_patch() {
        let l = build_hyperbolic_patch(7, 3, 2).unwrap();
        assert_eq!(l.cell_count(), 10);
        assert_eq!(l.interior_cells().count(), 4);
        assert!(l.interior_cells().all(|c| l.neighbors(c).len() == 3));
    }

    #[test]
    fn rejects_non_hyperbolic() {
        assert!(matches!(build_hyperbolic_patch(4, 4, 2), Err(LatticeError::NotHyperbolic { .. })));
        assert!(matches!(build_hyperbolic_patch(5, 3, 2), Err(LatticeError::NotHyperbolic { .. })));
        assert!(build_hyperbolic_patch(3, 8, 0).is_err());
    }

    #[test]
    fn interior_faces_are_regular_polygons() {
        for (p, k) in [(3, 7), (3, 8), (4, 5), (5, 4), (7, 3), (6, 4), (8, 3)] {
            let l = build_hyperbolic_patch(p, k, 3).unwrap();
            let coords = &l.embedding().unwrap().coords;
            assert!(coords.iter().all(|c| c[0] * c[0] + c[1] * c[1] < 1.0));
            let target = edge_length(p, k);
            for (u, v) in l.edges() {
                let (a, b) = (Complex64::new(coords[u][0], coords[u][1]), Complex64::new(coords[v][0], coords[v][1]));
                let d = 2.0 * to_disk_frame(a, b).norm().atanh();
                assert!((d - target).abs() < 1e-6, "{{{p},{k}}} edge {u}-{v}: {d} vs {target}");
            }
            assert!(l.faces().unwrap().iter().all(|f| f.len() == p as usize));
        }
    }
}
