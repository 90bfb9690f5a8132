use super::{LinkDiagram, Port};

/// A complementary region, as the cyclic list of its crossing corners.
///
/// Corner `(c, k)` is the angle between slots `k` and `k + 1` of crossing
/// `c`. Walking from a corner along the edge in slot `k + 1` reaches the next
/// corner with the region on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub corners: Vec<Port>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Faces {
    faces: Vec<Face>,
    corner_face: Vec<[usize; 4]>,
}

impl Faces {
    pub fn of(d: &LinkDiagram) -> Self {
        let n = d.n_crossings();
        let mut corner_face = vec![[usize::MAX; 4]; n];
        let mut faces = Vec::new();
        for c in 0..n {
            for k in 0..4 {
                if corner_face[c][k] != usize::MAX {
                    continue;
                }
                let idx = faces.len();
                let mut corners = Vec::new();
                let mut cur = (c, k);
                while corner_face[cur.0][cur.1] == usize::MAX {
                    corner_face[cur.0][cur.1] = idx;
                    corners.push(cur);
                    cur = Self::successor(d, cur);
                }
                faces.push(Face { corners });
            }
        }
        Self { faces, corner_face }
    }

    pub fn successor(d: &LinkDiagram, (c, k): Port) -> Port {
        d.other_end((c, (k + 1) % 4))
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_of_corner(&self, (c, k): Port) -> usize {
        self.corner_face[c][k]
    }

    /// The two faces on either side of the edge leaving port `p`:
    /// (face of corner before `p`, face of corner at `p`).
    pub fn faces_at_port(&self, (c, s): Port) -> (usize, usize) {
        (self.corner_face[c][(s + 3) % 4], self.corner_face[c][s])
    }
}
