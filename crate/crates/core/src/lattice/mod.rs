//! Finite k-regular cell graphs.
//!
//! Cells are the vertices of a tiling; a cell's neighborhood is the set of
//! vertices it shares an edge with. Faces are carried alongside the graph so
//! that closed surfaces can be checked against `V - E + F = χ`.

mod grid;
mod hyperbolic;
pub mod io;
mod polyhedra;
mod spec;

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

pub use grid::{build_euclidean, build_moore};
pub use hyperbolic::{build_hyperbolic_patch, edge_length, MAX_PATCH_CELLS};
pub use polyhedra::{build_c60, build_fullerene, build_platonic, fullerene_counts, FullereneCounts};
pub use spec::{build_from_spec, SPEC_FORMS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("{{{p},{k}}} is not admissible here; expected one of {admissible}")]
    UnsupportedSchlafli { p: u32, k: u32, admissible: &'static str },
    #[error("dimensions {w}x{h} are too small: {reason}")]
    BadDims { w: usize, h: usize, reason: String },
    #[error("{{{p},{k}}} does not tile the hyperbolic plane; use build_platonic or build_euclidean")]
    NotHyperbolic { p: u32, k: u32 },
    #[error("Schläfli entries must be at least 3, got {{{p},{k}}}")]
    DegenerateSchlafli { p: u32, k: u32 },
    #[error("not a closed surface: {0}")]
    NotClosed(String),
    #[error("face {face} has {size} sides; fullerene faces must have 5 or 6")]
    FaceSize { face: usize, size: usize },
    #[error("cell {cell} has {degree} neighbors, expected {valence}")]
    Regularity { cell: usize, degree: usize, valence: usize },
    #[error("edge {u}-{v} borders {faces} faces, expected 2")]
    EdgeBalance { u: usize, v: usize, faces: usize },
    #[error("counts (f5={f5}, V={v}, E={e}) disagree with f6={f6}, χ={chi}: expected (f5={ef5}, V={ev}, E={ee})")]
    CountMismatch { f5: usize, v: usize, e: usize, f6: usize, chi: i64, ef5: i64, ev: i64, ee: i64 },
    #[error("Euler characteristic {0} admits no fullerene (negative or impossible pentagon count)")]
    BadCharacteristic(i64),
    #[error("malformed lattice: {0}")]
    Invalid(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("patch would exceed {0} cells")]
    TooLarge(usize),
}

/// Topological tag of the surface a lattice lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Surface {
    E2Patch,
    Torus,
    Klein,
    Sphere,
    Projective,
    H2Patch,
}

impl Surface {
    /// Euler characteristic of the closed surface, `None` for open patches.
    pub fn euler_characteristic(self) -> Option<i64> {
        match self {
            Surface::Torus | Surface::Klein => Some(0),
            Surface::Sphere => Some(2),
            Surface::Projective => Some(1),
            Surface::E2Patch | Surface::H2Patch => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Surface::E2Patch => "E2_PATCH",
            Surface::Torus => "TORUS",
            Surface::Klein => "KLEIN",
            Surface::Sphere => "SPHERE",
            Surface::Projective => "PROJECTIVE",
            Surface::H2Patch => "H2_PATCH",
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingKind {
    Euclidean,
    PoincareDisk,
}

/// Planar coordinates for plotting, one point per cell.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    pub kind: EmbeddingKind,
    pub coords: Vec<[f64; 2]>,
}

/// A finite cell graph with optional face structure.
#[derive(Debug, Clone)]
pub struct Lattice {
    neighbors: Vec<Vec<usize>>,
    valence: usize,
    faces: Option<Vec<Vec<usize>>>,
    surface: Surface,
    schlafli: Option<(u32, u32)>,
    embedding: Option<Embedding>,
    positions3: Option<Vec<[f64; 3]>>,
    boundary: Vec<bool>,
    grid: Option<(usize, usize)>,
}

impl Lattice {
    /// Wraps a neighbor table. Cells flagged in `boundary` may have fewer than
    /// `valence` neighbors; all others need exactly `valence`.
    pub fn new(
        neighbors: Vec<Vec<usize>>,
        valence: usize,
        surface: Surface,
        boundary: Vec<bool>,
    ) -> Result<Self, LatticeError> {
        let lattice = Lattice {
            boundary: if boundary.is_empty() { vec![false; neighbors.len()] } else { boundary },
            neighbors,
            valence,
            faces: None,
            surface,
            schlafli: None,
            embedding: None,
            positions3: None,
            grid: None,
        };
        lattice.validate()?;
        Ok(lattice)
    }

    /// Builds the cell graph of a closed polygonal surface from its faces.
    pub(crate) fn from_faces(
        n: usize,
        faces: Vec<Vec<usize>>,
        valence: usize,
        surface: Surface,
    ) -> Result<Self, LatticeError> {
        let mut neighbors = vec![Vec::new(); n];
        for face in &faces {
            for (i, &u) in face.iter().enumerate() {
                let v = face[(i + 1) % face.len()];
                if u >= n || v >= n {
                    return Err(LatticeError::Invalid(format!("face vertex out of range 0..{n}")));
                }
                if !neighbors[u].contains(&v) {
                    neighbors[u].push(v);
                    neighbors[v].push(u);
                }
            }
        }
        let mut lattice = Lattice::new(neighbors, valence, surface, Vec::new())?;
        lattice.faces = Some(faces);
        Ok(lattice)
    }

    pub fn cell_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn valence(&self) -> usize {
        self.valence
    }

    pub fn neighbors(&self, cell: usize) -> &[usize] {
        &self.neighbors[cell]
    }

    pub fn neighbor_table(&self) -> &[Vec<usize>] {
        &self.neighbors
    }

    pub fn faces(&self) -> Option<&[Vec<usize>]> {
        self.faces.as_deref()
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn schlafli(&self) -> Option<(u32, u32)> {
        self.schlafli
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        self.embedding.as_ref()
    }

    /// 3D vertex positions for the polyhedral lattices.
    pub fn positions3(&self) -> Option<&[[f64; 3]]> {
        self.positions3.as_deref()
    }

    /// Grid width and height for lattices laid out in rows.
    pub fn grid(&self) -> Option<(usize, usize)> {
        self.grid
    }

    pub fn is_boundary(&self, cell: usize) -> bool {
        self.boundary[cell]
    }

    pub fn boundary_mask(&self) -> &[bool] {
        &self.boundary
    }

    pub fn boundary_cells(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.cell_count()).filter(|&c| self.boundary[c])
    }

    pub fn interior_cells(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.cell_count()).filter(|&c| !self.boundary[c])
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Undirected edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Returns a copy whose neighbor lists have been reordered by `f`.
    /// `f` must only permute the slice it is given.
    pub fn reorder_neighbors(&self, mut f: impl FnMut(usize, &mut [usize])) -> Lattice {
        let mut out = self.clone();
        for (cell, ns) in out.neighbors.iter_mut().enumerate() {
            f(cell, ns);
        }
        debug_assert!(out.validate().is_ok());
        out
    }

    /// Checks symmetric adjacency, absence of loops and repeated entries,
    /// and the valence of every non-boundary cell.
    pub fn validate(&self) -> Result<(), LatticeError> {
        let n = self.cell_count();
        if n == 0 {
            return Err(LatticeError::Invalid("lattice has no cells".into()));
        }
        if self.boundary.len() != n {
            return Err(LatticeError::Invalid("boundary mask length differs from cell count".into()));
        }
        let mut set: HashSet<(usize, usize)> = HashSet::new();
        for (u, ns) in self.neighbors.iter().enumerate() {
            for &v in ns {
                if v >= n {
                    return Err(LatticeError::Invalid(format!("cell {u} lists neighbor {v} out of range")));
                }
                if v == u {
                    return Err(LatticeError::Invalid(format!("cell {u} is its own neighbor")));
                }
                if !set.insert((u, v)) {
                    return Err(LatticeError::Invalid(format!("cell {u} lists neighbor {v} twice")));
                }
            }
            let degree = ns.len();
            if (!self.boundary[u] && degree != self.valence) || degree > self.valence {
                return Err(LatticeError::Regularity { cell: u, degree, valence: self.valence });
            }
        }
        if let Some(&(u, v)) = set.iter().find(|&&(u, v)| !set.contains(&(v, u))) {
            return Err(LatticeError::Invalid(format!("edge {u}->{v} has no reverse")));
        }
        Ok(())
    }

    /// `V - E + F` for a closed surface.
    ///
    /// Requires faces, an empty boundary, and that every edge of the graph
    /// borders exactly two faces.
    pub fn euler_characteristic(&self) -> Result<i64, LatticeError> {
        if self.boundary.iter().any(|&b| b) {
            return Err(LatticeError::NotClosed("lattice has boundary cells".into()));
        }
        let faces = self.faces.as_ref().ok_or_else(|| LatticeError::NotClosed("lattice carries no faces".into()))?;
        let mut incidence: HashMap<(usize, usize), usize> = HashMap::new();
        for face in faces {
            for (i, &a) in face.iter().enumerate() {
                let b = face[(i + 1) % face.len()];
                *incidence.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        for (u, v) in self.edges() {
            let faces = incidence.remove(&(u, v)).unwrap_or(0);
            if faces != 2 {
                return Err(LatticeError::EdgeBalance { u, v, faces });
            }
        }
        if let Some((&(u, v), _)) = incidence.iter().next() {
            return Err(LatticeError::Invalid(format!("face edge {u}-{v} is not a lattice edge")));
        }
        Ok(self.cell_count() as i64 - self.edge_count() as i64 + faces.len() as i64)
    }

    /// Number of faces of each size, indexed by size.
    pub fn face_size_histogram(&self) -> Vec<usize> {
        let mut hist = Vec::new();
        for face in self.faces.iter().flatten() {
            if hist.len() <= face.len() {
                hist.resize(face.len() + 1, 0);
            }
            hist[face.len()] += 1;
        }
        hist
    }

    /// True iff the faces admit a consistent orientation.
    pub fn is_orientable(&self) -> Option<bool> {
        let faces = self.faces.as_ref()?;
        Some(faces_orientable(faces))
    }
}

pub(crate) fn faces_orientable(faces: &[Vec<usize>]) -> bool {
    // Each undirected edge maps to the faces using it with their direction.
    let mut by_edge: HashMap<(usize, usize), Vec<(usize, bool)>> = HashMap::new();
    for (fi, face) in faces.iter().enumerate() {
        for (i, &a) in face.iter().enumerate() {
            let b = face[(i + 1) % face.len()];
            by_edge.entry((a.min(b), a.max(b))).or_default().push((fi, a < b));
        }
    }
    // flip[f] = whether face f is reversed; neighbors must then traverse a
    // shared edge in opposite directions.
    let mut flip: Vec<Option<bool>> = vec![None; faces.len()];
    for start in 0..faces.len() {
        if flip[start].is_some() {
            continue;
        }
        flip[start] = Some(false);
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            let ff = flip[f].unwrap();
            let face = &faces[f];
            for (i, &a) in face.iter().enumerate() {
                let b = face[(i + 1) % face.len()];
                let dir = (a < b) ^ ff;
                for &(g, gdir) in &by_edge[&(a.min(b), a.max(b))] {
                    if g == f {
                        continue;
                    }
                    // need gdir ^ flip[g] == !dir
                    let want = gdir ^ !dir;
                    match flip[g] {
                        None => {
                            flip[g] = Some(want);
                            stack.push(g);
                        }
                        Some(x) if x != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
    }
    true
}

/// Geometry of the regular tiling `{p,k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TilingClass {
    /// A Platonic solid with the given vertex, edge and face counts.
    Spherical {
        v: u64,
        e: u64,
        f: u64,
    },
    Euclidean,
    Hyperbolic,
}

/// Decides the geometry of `{p,k}` from the sign of `1/p + 1/k - 1/2`.
pub fn classify_tiling(p: u32, k: u32) -> Result<TilingClass, LatticeError> {
    if p < 3 || k < 3 {
        return Err(LatticeError::DegenerateSchlafli { p, k });
    }
    let (p, k) = (u64::from(p), u64::from(k));
    let lhs = 2 * (p + k);
    let rhs = p * k;
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => {
            // pF = kV = 2E with V - E + F = 2
            let e = 2 * p * k / (2 * (p + k) - p * k);
            TilingClass::Spherical { v: 2 * e / k, e, f: 2 * e / p }
        }
        std::cmp::Ordering::Equal => TilingClass::Euclidean,
        std::cmp::Ordering::Less => TilingClass::Hyperbolic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        assert_eq!(classify_tiling(3, 8).unwrap(), TilingClass::Hyperbolic);
        assert_eq!(classify_tiling(4, 4).unwrap(), TilingClass::Euclidean);
        assert_eq!(classify_tiling(5, 3).unwrap(), TilingClass::Spherical { v: 20, e: 30, f: 12 });
        assert_eq!(classify_tiling(3, 3).unwrap(), TilingClass::Spherical { v: 4, e: 6, f: 4 });
        assert_eq!(classify_tiling(3, 5).unwrap(), TilingClass::Spherical { v: 12, e: 30, f: 20 });
        assert!(classify_tiling(2, 5).is_err());
    }

    #[test]
    fn validate_catches_asymmetry_and_loops() {
        let asym = Lattice::new(vec![vec![1], vec![]], 1, Surface::Torus, vec![]);
        assert!(asym.is_err());
        let looped = Lattice::new(vec![vec![0]], 1, Surface::Torus, vec![]);
        assert!(looped.is_err());
        let dup = Lattice::new(vec![vec![1, 1], vec![0, 0]], 2, Surface::Torus, vec![]);
        assert!(dup.is_err());
        let ok = Lattice::new(vec![vec![1], vec![0]], 1, Surface::Torus, vec![]).unwrap();
        assert_eq!(ok.edges(), vec![(0, 1)]);
        assert!(matches!(ok.euler_characteristic(), Err(LatticeError::NotClosed(_))));
    }

    #[test]
    fn orientability() {
        let tetra = build_platonic(3, 3).unwrap();
        assert_eq!(tetra.is_orientable(), Some(true));
        let torus = build_euclidean((4, 4), Surface::Torus, (4, 4)).unwrap();
        assert_eq!(torus.is_orientable(), Some(true));
        let klein = build_euclidean((4, 4), Surface::Klein, (4, 4)).unwrap();
        assert_eq!(klein.is_orientable(), Some(false));
    }
}
