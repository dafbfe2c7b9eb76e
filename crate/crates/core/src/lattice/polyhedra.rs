//! Platonic solids and fullerenes.

use std::collections::HashMap;

use super::{faces_orientable, Lattice, LatticeError, Surface};

const PLATONIC_SYMBOLS: &str = "{3,3}, {4,3}, {5,3}, {3,4}, {3,5}";

/// Vertex positions and faces.
type Solid = (Vec<[f64; 3]>, Vec<Vec<usize>>);

fn tetrahedron() -> Solid {
    let pos = vec![[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]];
    let faces = vec![vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2]];
    (pos, faces)
}

fn cube() -> Solid {
    // vertex index = x + 2y + 4z
    let pos = (0..8)
        .map(|i| {
            let c = |b: usize| if i >> b & 1 == 1 { 1.0 } else { -1.0 };
            [c(0), c(1), c(2)]
        })
        .collect();
    let faces = vec![
        vec![0, 2, 3, 1],
        vec![4, 5, 7, 6],
        vec![0, 1, 5, 4],
        vec![2, 6, 7, 3],
        vec![0, 4, 6, 2],
        vec![1, 3, 7, 5],
    ];
    (pos, faces)
}

fn octahedron() -> Solid {
    // 0:+x 1:-x 2:+y 3:-y 4:+z 5:-z
    let pos =
        vec![[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, -1.0]];
    let mut faces = Vec::new();
    for (x, y, z) in [(0, 2, 4), (2, 1, 4), (1, 3, 4), (3, 0, 4), (2, 0, 5), (1, 2, 5), (3, 1, 5), (0, 3, 5)] {
        faces.push(vec![x, y, z]);
    }
    (pos, faces)
}

fn icosahedron() -> Solid {
    let t = (1.0 + 5f64.sqrt()) / 2.0;
    let pos = vec![
        [-1.0, t, 0.0],
        [1.0, t, 0.0],
        [-1.0, -t, 0.0],
        [1.0, -t, 0.0],
        [0.0, -1.0, t],
        [0.0, 1.0, t],
        [0.0, -1.0, -t],
        [0.0, 1.0, -t],
        [t, 0.0, -1.0],
        [t, 0.0, 1.0],
        [-t, 0.0, -1.0],
        [-t, 0.0, 1.0],
    ];
    let faces = [
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ]
    .iter()
    .map(|f| f.to_vec())
    .collect();
    (pos, faces)
}

/// Neighbors of each vertex in cyclic order around it, read off the faces.
fn vertex_rings(n: usize, faces: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, LatticeError> {
    // For vertex v, each incident face contributes a link edge prev–next.
    let mut links: Vec<HashMap<usize, Vec<usize>>> = vec![HashMap::new(); n];
    for face in faces {
        let len = face.len();
        for i in 0..len {
            let v = face[i];
            let prev = face[(i + len - 1) % len];
            let next = face[(i + 1) % len];
            links[v].entry(prev).or_default().push(next);
            links[v].entry(next).or_default().push(prev);
        }
    }
    let mut rings = Vec::with_capacity(n);
    for (v, link) in links.iter().enumerate() {
        let start = *link.keys().min().ok_or_else(|| LatticeError::Invalid(format!("vertex {v} lies on no face")))?;
        let mut ring = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let nexts = &link[&cur];
            if nexts.len() != 2 {
                return Err(LatticeError::NotClosed(format!("vertex {v} has an open or pinched link")));
            }
            let next = if nexts[0] != prev { nexts[0] } else { nexts[1] };
            if next == start {
                break;
            }
            if ring.len() > link.len() {
                return Err(LatticeError::NotClosed(format!("vertex {v} link does not close")));
            }
            ring.push(next);
            prev = cur;
            cur = next;
        }
        if ring.len() != link.len() {
            return Err(LatticeError::NotClosed(format!("vertex {v} link is disconnected")));
        }
        rings.push(ring);
    }
    Ok(rings)
}

/// Swaps the roles of faces and vertices.
fn dual(n: usize, pos: &[[f64; 3]], faces: &[Vec<usize>]) -> Result<Solid, LatticeError> {
    let rings = vertex_rings(n, faces)?;
    let mut face_of_edge: HashMap<(usize, usize), usize> = HashMap::new();
    for (fi, face) in faces.iter().enumerate() {
        for i in 0..face.len() {
            face_of_edge.insert((face[i], face[(i + 1) % face.len()]), fi);
        }
    }
    let dual_faces = rings
        .iter()
        .enumerate()
        .map(|(v, ring)| {
            ring.iter()
                .map(|&u| face_of_edge.get(&(v, u)).or_else(|| face_of_edge.get(&(u, v))).copied())
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| LatticeError::Invalid("dual of a non-manifold face list".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let centers = faces
        .iter()
        .map(|f| {
            let mut c = [0.0; 3];
            for &v in f {
                for d in 0..3 {
                    c[d] += pos[v][d] / f.len() as f64;
                }
            }
            c
        })
        .collect();
    Ok((centers, dual_faces))
}

/// Cuts off every vertex: each directed edge `u→v` becomes a new vertex
/// near `u`, each old vertex becomes a face, each old face doubles its sides.
fn truncate(n: usize, pos: &[[f64; 3]], faces: &[Vec<usize>]) -> Result<Solid, LatticeError> {
    let rings = vertex_rings(n, faces)?;
    let mut id: HashMap<(usize, usize), usize> = HashMap::new();
    let mut new_pos = Vec::new();
    let mut new_faces = Vec::new();
    for (u, ring) in rings.iter().enumerate() {
        let mut face = Vec::with_capacity(ring.len());
        for &v in ring {
            let i = new_pos.len();
            id.insert((u, v), i);
            new_pos.push(std::array::from_fn(|d| (2.0 * pos[u][d] + pos[v][d]) / 3.0));
            face.push(i);
        }
        new_faces.push(face);
    }
    for face in faces {
        let len = face.len();
        let mut f = Vec::with_capacity(2 * len);
        for i in 0..len {
            let (a, b) = (face[i], face[(i + 1) % len]);
            f.push(id[&(a, b)]);
            f.push(id[&(b, a)]);
        }
        new_faces.push(f);
    }
    Ok((new_pos, new_faces))
}

fn finish(
    pos: Vec<[f64; 3]>,
    faces: Vec<Vec<usize>>,
    valence: usize,
    schlafli: Option<(u32, u32)>,
) -> Result<Lattice, LatticeError> {
    let mut lattice = Lattice::from_faces(pos.len(), faces, valence, Surface::Sphere)?;
    lattice.schlafli = schlafli;
    lattice.positions3 = Some(pos);
    Ok(lattice)
}

/// Vertex graph of the Platonic solid `{p,k}`.
pub fn build_platonic(p: u32, k: u32) -> Result<Lattice, LatticeError> {
    let (pos, faces) = match (p, k) {
        (3, 3) => tetrahedron(),
        (4, 3) => cube(),
        (3, 4) => octahedron(),
        (3, 5) => icosahedron(),
        (5, 3) => {
            let (pos, faces) = icosahedron();
            dual(pos.len(), &pos, &faces)?
        }
        _ => return Err(LatticeError::UnsupportedSchlafli { p, k, admissible: PLATONIC_SYMBOLS }),
    };
    finish(pos, faces, k as usize, Some((p, k)))
}

/// The truncated icosahedron: 60 cells, 12 pentagons, 20 hexagons.
pub fn build_c60() -> Lattice {
    let (pos, faces) = icosahedron();
    let (pos, faces) = truncate(pos.len(), &pos, &faces).expect("icosahedron is a closed manifold");
    build_fullerene(faces)
        .map(|mut l| {
            l.positions3 = Some(pos);
            l
        })
        .expect("truncated icosahedron is a fullerene")
}

/// Face, vertex and edge counts forced on a fullerene with `f6` hexagons on a
/// surface of Euler characteristic `chi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FullereneCounts {
    pub f5: i64,
    pub v: i64,
    pub e: i64,
}

/// Solves `V - E + f5 + f6 = χ`, `3V = 5 f5 + 6 f6 = 2E`.
pub fn fullerene_counts(f6: u64, chi: i64) -> Result<FullereneCounts, LatticeError> {
    if !(0..=2).contains(&chi) {
        return Err(LatticeError::BadCharacteristic(chi));
    }
    let f6 = f6 as i64;
    Ok(FullereneCounts { f5: 6 * chi, v: 2 * f6 + 10 * chi, e: 3 * f6 + 15 * chi })
}

/// Validates a face list as a (generalized) fullerene: pentagons and
/// hexagons only, every cell trivalent, every edge shared by two faces, and
/// counts matching [`fullerene_counts`] for the surface's Euler
/// characteristic.
pub fn build_fullerene(faces: Vec<Vec<usize>>) -> Result<Lattice, LatticeError> {
    if faces.is_empty() {
        return Err(LatticeError::Invalid("empty face list".into()));
    }
    if let Some((face, f)) = faces.iter().enumerate().find(|(_, f)| f.len() != 5 && f.len() != 6) {
        return Err(LatticeError::FaceSize { face, size: f.len() });
    }
    let n = faces.iter().flatten().max().map_or(0, |&m| m + 1);
    let mut degree_check = vec![Vec::new(); n];
    for face in &faces {
        for (i, &u) in face.iter().enumerate() {
            let v = face[(i + 1) % face.len()];
            if u == v {
                return Err(LatticeError::Invalid(format!("face repeats vertex {u}")));
            }
            if !degree_check[u].contains(&v) {
                degree_check[u].push(v);
                degree_check[v].push(u);
            }
        }
    }
    if let Some((cell, ns)) = degree_check.iter().enumerate().find(|(_, ns)| ns.len() != 3) {
        return Err(LatticeError::Regularity { cell, degree: ns.len(), valence: 3 });
    }
    let orientable = faces_orientable(&faces);
    let mut lattice = Lattice::from_faces(n, faces, 3, Surface::Sphere)?;
    let chi = lattice.euler_characteristic()?;
    lattice.surface = match chi {
        2 => Surface::Sphere,
        1 => Surface::Projective,
        0 if orientable => Surface::Torus,
        0 => Surface::Klein,
        _ => return Err(LatticeError::BadCharacteristic(chi)),
    };
    let hist = lattice.face_size_histogram();
    let f5 = hist.get(5).copied().unwrap_or(0);
    let f6 = hist.get(6).copied().unwrap_or(0);
    let expect = fullerene_counts(f6 as u64, chi)?;
    let (v, e) = (lattice.cell_count(), lattice.edge_count());
    if (f5 as i64, v as i64, e as i64) != (expect.f5, expect.v, expect.e) {
        return Err(LatticeError::CountMismatch { f5, v, e, f6, chi, ef5: expect.f5, ev: expect.v, ee: expect.e });
    }
    Ok(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn platonic_counts() {
        let expect = [
            ((3, 3), (4, 6, 4)),
            ((4, 3), (8, 12, 6)),
            ((5, 3), (20, 30, 12)),
            ((3, 4), (6, 12, 8)),
            ((3, 5), (12, 30, 20)),
        ];
        for ((p, k), (v, e, f)) in expect {
            let l = build_platonic(p, k).unwrap();
            assert_eq!((l.cell_count(), l.edge_count(), l.faces().unwrap().len()), (v, e, f), "{{{p},{k}}}");
            assert_eq!(l.euler_characteristic().unwrap(), 2);
            assert!(l.faces().unwrap().iter().all(|f| f.len() == p as usize));
        }
        assert!(build_platonic(4, 4).is_err());
    }

    #[test]
    fn c60_shape() {
        let l = build_c60();
        assert_eq!(l.cell_count(), 60);
        assert_eq!(l.edge_count(), 90);
        let hist = l.face_size_histogram();
        assert_eq!((hist[5], hist[6]), (12, 20));
        assert_eq!(l.euler_characteristic().unwrap(), 2);
        assert_eq!(l.surface(), Surface::Sphere);
        // all vertices equidistant from the center
        let pos = l.positions3().unwrap();
        let r0: f64 = pos[0].iter().map(|x| x * x).sum();
        assert!(pos.iter().all(|p| (p.iter().map(|x| x * x).sum::<f64>() - r0).abs() < 1e-9));
    }

    #[test]
    fn fullerene_count_formulas() {
        assert_eq!(fullerene_counts(20, 2).unwrap(), FullereneCounts { f5: 12, v: 60, e: 90 });
        assert_eq!(fullerene_counts(0, 2).unwrap(), FullereneCounts { f5: 12, v: 20, e: 30 });
        assert_eq!(fullerene_counts(7, 1).unwrap(), FullereneCounts { f5: 6, v: 24, e: 36 });
        assert_eq!(fullerene_counts(9, 0).unwrap(), FullereneCounts { f5: 0, v: 18, e: 27 });
        assert!(matches!(fullerene_counts(5, -2), Err(LatticeError::BadCharacteristic(-2))));
    }

    #[test]
    fn dodecahedron_is_smallest_fullerene() {
        let dodeca = build_platonic(5, 3).unwrap();
        let l = build_fullerene(dodeca.faces().unwrap().to_vec()).unwrap();
        assert_eq!(l.face_size_histogram().get(6).copied().unwrap_or(0), 0);
        assert_eq!(l.cell_count(), 20);
    }

    #[test]
    fn fullerene_rejections() {
        let cube = build_platonic(4, 3).unwrap();
        let err = build_fullerene(cube.faces().unwrap().to_vec()).unwrap_err();
        assert!(matches!(err, LatticeError::FaceSize { size: 4, .. }));

        // drop a face from the dodecahedron: edges are no longer balanced
        let mut faces = build_platonic(5, 3).unwrap().faces().unwrap().to_vec();
        faces.pop();
        assert!(build_fullerene(faces).is_err());
    }

    #[test]
    fn hex_torus_is_a_degenerate_fullerene() {
        let torus = super::super::build_euclidean((6, 3), Surface::Torus, (6, 4)).unwrap();
        let l = build_fullerene(torus.faces().unwrap().to_vec()).unwrap();
        assert_eq!(l.surface(), Surface::Torus);
        assert_eq!(l.face_size_histogram()[6], 12);
        let klein = super::super::build_euclidean((6, 3), Surface::Klein, (6, 4)).unwrap();
        assert_eq!(build_fullerene(klein.faces().unwrap().to_vec()).unwrap().surface(), Surface::Klein);
    }

    #[test]
    fn projective_fullerene_from_antipodal_quotient() {
        // The dodecahedron is centrally symmetric; identifying antipodes gives
        // a projective-plane fullerene with 6 pentagons and 10 cells.
        let dodeca = build_platonic(5, 3).unwrap();
        let pos = dodeca.positions3().unwrap();
        let n = pos.len();
        let antipode: Vec<usize> =
            (0..n).map(|i| (0..n).find(|&j| (0..3).all(|d| (pos[i][d] + pos[j][d]).abs() < 1e-9)).unwrap()).collect();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for i in 0..n {
            if label[i] == usize::MAX {
                label[i] = next;
                label[antipode[i]] = next;
                next += 1;
            }
        }
        let mut seen = std::collections::HashSet::new();
        let mut faces = Vec::new();
        for f in dodeca.faces().unwrap() {
            let q: Vec<usize> = f.iter().map(|&v| label[v]).collect();
            let mut key = q.clone();
            key.sort();
            if seen.insert(key) {
                faces.push(q);
            }
        }
        let l = build_fullerene(faces).unwrap();
        assert_eq!(l.surface(), Surface::Projective);
        assert_eq!((l.cell_count(), l.edge_count()), (10, 15));
        assert_eq!(l.face_size_histogram()[5], 6);
    }
}
