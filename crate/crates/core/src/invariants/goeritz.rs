//! Goeritz matrix, determinant and Gordon-Litherland signature.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::linkdiag::Faces;
use crate::LinkDiagram;

/// (determinant, signature) of the link.
///
/// Split diagrams have determinant 0; their signature is the sum over pieces.
pub fn goeritz(d: &LinkDiagram) -> (u64, i64) {
    let pieces = d.pieces();
    let n_parts = pieces.len() + d.free_loops();
    let mut det = 1;
    let mut sig = 0;
    for piece in &pieces {
        let (pd, ps) = connected_goeritz(&d.restrict(piece));
        det = pd;
        sig += ps;
    }
    if n_parts > 1 {
        det = 0;
    }
    (det, sig)
}

/// Checkerboard colour per face, with colour 0 on the face of corner (0, 0).
pub fn checkerboard(d: &LinkDiagram, faces: &Faces) -> Vec<u8> {
    let mut colour = vec![u8::MAX; faces.faces().len()];
    if d.n_crossings() == 0 {
        return colour;
    }
    colour[faces.face_of_corner((0, 0))] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for c in 0..d.n_crossings() {
            for k in 0..4 {
                let f = faces.face_of_corner((c, k));
                if colour[f] == u8::MAX {
                    continue;
                }
                for (j, flip) in [(1, 1), (2, 0), (3, 1)] {
                    let g = faces.face_of_corner((c, (k + j) % 4));
                    if colour[g] == u8::MAX {
                        colour[g] = colour[f] ^ flip;
                        changed = true;
                    }
                }
            }
        }
    }
    colour
}

/// Determinant and signature of a connected diagram, using colour `white`
/// for the Goeritz regions.
pub fn connected_goeritz_with(d: &LinkDiagram, white: u8) -> (u64, i64) {
    if d.n_crossings() == 0 {
        return (1, 0);
    }
    let faces = Faces::of(d);
    let colour = checkerboard(d, &faces);
    let whites: Vec<usize> = (0..colour.len()).filter(|&f| colour[f] == white).collect();
    let index = |f: usize| whites.iter().position(|&w| w == f).expect("white face");
    let m = whites.len();
    let mut g = vec![vec![0i64; m]; m];
    let mut mu = 0i64;
    for c in 0..d.n_crossings() {
        let w0 = if colour[faces.face_of_corner((c, 0))] == white { 0 } else { 1 };
        let eta = if w0 == 1 { -1 } else { 1 };
        let (i, j) = (index(faces.face_of_corner((c, w0))), index(faces.face_of_corner((c, w0 + 2))));
        if i != j {
            g[i][j] -= eta;
            g[j][i] -= eta;
        }
        let b = 1 - w0;
        if d.is_incoming((c, b)) == d.is_incoming((c, b + 1)) {
            mu += eta;
        }
    }
    for i in 0..m {
        g[i][i] = -(0..m).filter(|&j| j != i).map(|j| g[i][j]).sum::<i64>();
    }
    let reduced: Vec<Vec<i64>> = g.iter().skip(1).map(|r| r[1..].to_vec()).collect();
    let (det, sign) = det_and_signature(&reduced);
    (det.abs().try_into().expect("determinant fits in u64"), sign - mu)
}

pub fn connected_goeritz(d: &LinkDiagram) -> (u64, i64) {
    connected_goeritz_with(d, 0)
}

/// Determinant and signature of a symmetric integer matrix by congruence
/// diagonalization over the rationals.
pub fn det_and_signature(m: &[Vec<i64>]) -> (BigInt, i64) {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut det = BigRational::from_integer(BigInt::from(1));
    let mut sig = 0i64;
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = active.iter().flat_map(|&i| active.iter().map(move |&j| (i, j))).find(|&(i, j)| {
                    i != j && !a[i][j].is_zero()
                });
                let Some((i, j)) = pair else {
                    det = BigRational::zero();
                    break;
                };
                // row_i += row_j, col_i += col_j
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        let piv = a[p][p].clone();
        det *= piv.clone();
        sig += if piv.is_positive() { 1 } else { -1 };
        active.retain(|&i| i != p);
        for &i in &active {
            let f = a[i][p].clone() / piv.clone();
            if f.is_zero() {
                continue;
            }
            for &k in &active {
                let v = f.clone() * a[p][k].clone();
                a[i][k] -= v;
            }
            a[i][p] = BigRational::zero();
        }
        for &i in &active {
            a[p][i] = BigRational::zero();
        }
    }
    (det.to_integer(), sig)
}
