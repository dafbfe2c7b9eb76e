//! Short text names for lattices.
//!
//! | spec | lattice |
//! |---|---|
//! | `torus:P,K`, `klein:P,K` | Euclidean tiling `{P,K}` on a `w × h` grid |
//! | `moore:torus`, `moore:klein` | 8-neighbor square grid on a `w × h` grid |
//! | `sphere:P,K` | Platonic solid `{P,K}` |
//! | `c60` | truncated icosahedron |
//! | `hyperbolic:P,K` | patch of `{P,K}` with `layers` rings |

use super::{
    build_c60, build_euclidean, build_hyperbolic_patch, build_moore, build_platonic, Lattice, LatticeError, Surface,
};

pub const SPEC_FORMS: &str = "torus:P,K, klein:P,K, moore:torus, moore:klein, sphere:P,K, c60, hyperbolic:P,K";

fn invalid(msg: String) -> LatticeError {
    LatticeError::Invalid(msg)
}

fn schlafli(text: &str) -> Result<(u32, u32), LatticeError> {
    let parsed = text.split_once(',').and_then(|(p, k)| Some((p.trim().parse().ok()?, k.trim().parse().ok()?)));
    parsed.ok_or_else(|| invalid(format!("expected P,K, got {text:?}")))
}

fn surface(text: &str) -> Result<Surface, LatticeError> {
    match text {
        "torus" | "" => Ok(Surface::Torus),
        "klein" => Ok(Surface::Klein),
        other => Err(invalid(format!("unknown wrapped surface {other:?}; use torus or klein"))),
    }
}

/// Builds the lattice named by `spec`. `dims` applies to wrapped grids and
/// `layers` to hyperbolic patches.
pub fn build_from_spec(spec: &str, dims: (usize, usize), layers: u32) -> Result<Lattice, LatticeError> {
    let (kind, arg) = spec.trim().split_once(':').unwrap_or((spec.trim(), ""));
    match kind {
        "torus" | "klein" => build_euclidean(schlafli(arg)?, surface(kind)?, dims),
        "moore" => build_moore(surface(arg)?, dims),
        "sphere" => {
            let (p, k) = schlafli(arg)?;
            build_platonic(p, k)
        }
        "c60" => Ok(build_c60()),
        "hyperbolic" => {
            let (p, k) = schlafli(arg)?;
            build_hyperbolic_patch(p, k, layers)
        }
        other => Err(invalid(format!("unknown lattice {other:?}; expected one of {SPEC_FORMS}"))),
    }
}
