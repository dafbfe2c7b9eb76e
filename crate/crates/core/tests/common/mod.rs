#![allow(dead_code)]

/// Straightforward Life-like step on a `w × h` torus with the 8-cell
/// neighborhood, written without the lattice or rule machinery.
pub fn naive_step(cells: &[u8], w: usize, h: usize, birth: &[u32], survive: &[u32]) -> Vec<u8> {
    let mut out = vec![0u8; w * h];
    for y in 0..h {
        for x in 0..w {
            let mut live = 0;
            for dy in [h - 1, 0, 1] {
                for dx in [w - 1, 0, 1] {
                    if (dx, dy) != (0, 0) {
                        live += u32::from(cells[((y + dy) % h) * w + (x + dx) % w]);
                    }
                }
            }
            let alive = cells[y * w + x] == 1;
            let next = if alive { survive.contains(&live) } else { birth.contains(&live) };
            out[y * w + x] = u8::from(next);
        }
    }
    out
}

pub fn cells_from(w: usize, h: usize, live: &[(usize, usize)]) -> Vec<u8> {
    let mut cells = vec![0u8; w * h];
    for &(x, y) in live {
        cells[y * w + x] = 1;
    }
    cells
}

pub fn translate(cells: &[u8], w: usize, h: usize, dx: usize, dy: usize) -> Vec<u8> {
    let mut out = vec![0u8; w * h];
    for y in 0..h {
        for x in 0..w {
            out[((y + dy) % h) * w + (x + dx) % w] = cells[y * w + x];
        }
    }
    out
}

pub const GLIDER: [(usize, usize); 5] = [(1, 0), (2, 1), (0, 2), (1, 2), (2, 2)];
pub const BLINKER: [(usize, usize); 3] = [(1, 2), (2, 2), (3, 2)];
pub const BLOCK: [(usize, usize); 4] = [(1, 1), (2, 1), (1, 2), (2, 2)];
