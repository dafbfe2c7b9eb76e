//! Wrapped rectangular grids: the three regular Euclidean tilings and the
//! Moore neighborhood, on the torus or the Klein bottle.
//!
//! Cells are indexed row-major, `index = y * w + x`. Horizontal wrap is
//! always straight. On the Klein bottle the vertical wrap is glued with a
//! mirror: leaving the top row re-enters the bottom row reflected in x.
//! The reflection is chosen per tiling so that it is a symmetry of the
//! tiling itself:
//!
//! | tiling | neighbors of `(x, y)` | reflection |
//! |---|---|---|
//! | `{4,4}` | `(±1,0) (0,±1)` | `x ↦ -x-1` |
//! | `{3,6}` | `(±1,0) (0,±1) (1,-1) (-1,1)` | `x ↦ -x-y` |
//! | `{6,3}` | `(±1,0)`, `(0,+1)` if `x+y` even else `(0,-1)` | `x ↦ -x` |
//! | Moore | all 8 surrounding cells | `x ↦ -x-1` |

use super::{Embedding, EmbeddingKind, Lattice, LatticeError, Surface};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Square,
    Triangle,
    Hex,
    Moore,
}

impl Kind {
    fn offsets(self, x: i64, y: i64) -> Vec<(i64, i64)> {
        match self {
            Kind::Square => vec![(1, 0), (0, 1), (-1, 0), (0, -1)],
            Kind::Triangle => vec![(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)],
            Kind::Hex => {
                let vertical = if (x + y).rem_euclid(2) == 0 { 1 } else { -1 };
                vec![(1, 0), (0, vertical), (-1, 0)]
            }
            Kind::Moore => vec![(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)],
        }
    }

    fn mirror(self, x: i64, y: i64) -> i64 {
        match self {
            Kind::Square | Kind::Moore => -x - 1,
            Kind::Triangle => -x - y,
            Kind::Hex => -x,
        }
    }

    /// Faces anchored at `(x, y)`, in plane coordinates.
    fn faces(self, x: i64, y: i64) -> Vec<Vec<(i64, i64)>> {
        match self {
            Kind::Square => vec![vec![(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]],
            Kind::Triangle => vec![vec![(x, y), (x + 1, y), (x, y + 1)], vec![(x + 1, y), (x + 1, y + 1), (x, y + 1)]],
            Kind::Hex if (x + y).rem_euclid(2) == 0 => {
                vec![vec![(x, y), (x + 1, y), (x + 2, y), (x + 2, y + 1), (x + 1, y + 1), (x, y + 1)]]
            }
            Kind::Hex | Kind::Moore => Vec::new(),
        }
    }

    fn position(self, x: usize, y: usize) -> [f64; 2] {
        let (xf, yf) = (x as f64, y as f64);
        match self {
            Kind::Square | Kind::Moore => [xf, yf],
            Kind::Triangle => [xf + yf / 2.0, yf * 3f64.sqrt() / 2.0],
            Kind::Hex => {
                let lift = if (x + y).is_multiple_of(2) { 0.25 } else { -0.25 };
                [xf * 3f64.sqrt() / 2.0, 1.5 * yf + lift]
            }
        }
    }
}

struct Wrap {
    kind: Kind,
    surface: Surface,
    w: i64,
    h: i64,
}

impl Wrap {
    fn index(&self, mut x: i64, mut y: i64) -> usize {
        if self.surface == Surface::Klein {
            if y >= self.h {
                y -= self.h;
                x = self.kind.mirror(x, y);
            } else if y < 0 {
                x = self.kind.mirror(x, y);
                y += self.h;
            }
        }
        let (x, y) = (x.rem_euclid(self.w), y.rem_euclid(self.h));
        (y * self.w + x) as usize
    }
}

fn build(kind: Kind, surface: Surface, (w, h): (usize, usize)) -> Result<Lattice, LatticeError> {
    if !matches!(surface, Surface::Torus | Surface::Klein) {
        return Err(LatticeError::Invalid(format!("wrapped grids live on TORUS or KLEIN, not {surface}")));
    }
    if w < 3 || h < 3 {
        return Err(LatticeError::BadDims { w, h, reason: "each side needs at least 3 cells".into() });
    }
    if kind == Kind::Hex && (w % 2 == 1 || h % 2 == 1) {
        return Err(LatticeError::BadDims { w, h, reason: "the hexagonal lattice needs even width and height".into() });
    }
    let wrap = Wrap { kind, surface, w: w as i64, h: h as i64 };
    let mut neighbors = Vec::with_capacity(w * h);
    let mut faces = Vec::new();
    let mut coords = Vec::with_capacity(w * h);
    for y in 0..h as i64 {
        for x in 0..w as i64 {
            neighbors
                .push(kind.offsets(x, y).into_iter().map(|(dx, dy)| wrap.index(x + dx, y + dy)).collect::<Vec<_>>());
            for face in kind.faces(x, y) {
                faces.push(face.into_iter().map(|(fx, fy)| wrap.index(fx, fy)).collect::<Vec<_>>());
            }
            coords.push(kind.position(x as usize, y as usize));
        }
    }
    let valence = neighbors[0].len();
    let mut lattice = Lattice::new(neighbors, valence, surface, Vec::new())?;
    if kind != Kind::Moore {
        lattice.faces = Some(faces);
    }
    lattice.grid = Some((w, h));
    lattice.embedding = Some(Embedding { kind: EmbeddingKind::Euclidean, coords });
    Ok(lattice)
}

const EUCLIDEAN_SYMBOLS: &str = "{6,3}, {4,4}, {3,6}";

/// One of the three regular Euclidean tilings on a wrapped `w × h` grid.
pub fn build_euclidean((p, k): (u32, u32), surface: Surface, dims: (usize, usize)) -> Result<Lattice, LatticeError> {
    let kind = match (p, k) {
        (4, 4) => Kind::Square,
        (3, 6) => Kind::Triangle,
        (6, 3) => Kind::Hex,
        _ => return Err(LatticeError::UnsupportedSchlafli { p, k, admissible: EUCLIDEAN_SYMBOLS }),
    };
    let mut lattice = build(kind, surface, dims)?;
    lattice.schlafli = Some((p, k));
    Ok(lattice)
}

/// Square grid where each cell sees the 8 cells around it.
pub fn build_moore(surface: Surface, dims: (usize, usize)) -> Result<Lattice, LatticeError> {
    build(Kind::Moore, surface, dims)
}
