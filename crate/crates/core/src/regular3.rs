//! Maximum-order `r`-regular 3-kaleidoscopes for `r ≡ 3 (mod 4)`, `r >= 7`.
//!
//! The vertices are the triples `(s1, s2, s3)` of positive integers summing to
//! `r`, laid out as a triangle, minus the corner `(1, r-2, 1)`. That leaves
//! `C(r-1, 2) - 1` vertices. Color `c` is built so that vertex `x` has exactly
//! `s_c(x)` incident edges of color `c`; distinct coordinates then give
//! distinct multiset-colors and the degree is `s1 + s2 + s3 = r`.
//!
//! The triangle is read in three frames related by rotation. In each frame
//! row `i` has `r-1-i` positions:
//!
//! * `H[i][j]   = (j, i, r-i-j)`   (row = s2, position = s1)
//! * `H'[i][j]  = (r-i-j, j, i)`   (row = s3, position = s2)
//! * `H''[i][j] = (i, r-i-j, j)`   (row = s1, position = s3)
//!
//! Color `c` uses frame `c`. Each row gets the threshold graph on its
//! positions, which undershoots the upper half of the row by one; the
//! cross-row matchings `A`, `E_j` and `B` (or `B'`) make up the difference.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complete::ThresholdGraph;
use crate::graph::{ColoredGraph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Regular3Error {
    #[error("degree r={0} must satisfy r >= 7 and r ≡ 3 (mod 4)")]
    BadDegree(usize),
    #[error("{0} is out of range for r={1}")]
    IndexOutOfRange(FrameIndex, usize),
    #[error("color {0} is not one of 1, 2, 3")]
    BadColor(usize),
    #[error("patch expected edge {0} -- {1} to be present")]
    MissingPatchEdge(TriCoord, TriCoord),
    #[error("edge {0} -- {1} appears twice")]
    Overlap(TriCoord, TriCoord),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TriCoord {
    pub s1: usize,
    pub s2: usize,
    pub s3: usize,
}

impl TriCoord {
    pub fn new(s1: usize, s2: usize, s3: usize) -> Self {
        TriCoord { s1, s2, s3 }
    }

    pub fn sum(&self) -> usize {
        self.s1 + self.s2 + self.s3
    }

    /// `s_c` for color `c` in `1..=3`.
    pub fn get(&self, c: usize) -> usize {
        match c {
            1 => self.s1,
            2 => self.s2,
            3 => self.s3,
            _ => panic!("coordinate index {c} out of range"),
        }
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.s1, self.s2, self.s3]
    }
}

impl fmt::Display for TriCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.s1, self.s2, self.s3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Frame {
    H,
    HPrime,
    HDoublePrime,
}

impl Frame {
    pub const ALL: [Frame; 3] = [Frame::H, Frame::HPrime, Frame::HDoublePrime];

    /// The frame color `c` is built in.
    pub fn for_color(c: usize) -> Frame {
        Frame::ALL[c - 1]
    }

    fn mark(self) -> &'static str {
        match self {
            Frame::H => "",
            Frame::HPrime => "'",
            Frame::HDoublePrime => "''",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrameIndex {
    pub frame: Frame,
    pub row: usize,
    pub pos: usize,
}

impl FrameIndex {
    pub fn new(frame: Frame, row: usize, pos: usize) -> Self {
        FrameIndex { frame, row, pos }
    }
}

impl fmt::Display for FrameIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{}_{},{}", self.frame.mark(), self.row, self.pos)
    }
}

pub fn check_degree(r: usize) -> Result<(), Regular3Error> {
    if r >= 7 && r % 4 == 3 {
        Ok(())
    } else {
        Err(Regular3Error::BadDegree(r))
    }
}

pub fn coord_of(idx: FrameIndex, r: usize) -> Result<TriCoord, Regular3Error> {
    let FrameIndex {
        frame,
        row: i,
        pos: j,
    } = idx;
    if r < 3 || i == 0 || j == 0 || i > r - 2 || j + i > r - 1 {
        return Err(Regular3Error::IndexOutOfRange(idx, r));
    }
    let rest = r - i - j;
    Ok(match frame {
        Frame::H => TriCoord::new(j, i, rest),
        Frame::HPrime => TriCoord::new(rest, j, i),
        Frame::HDoublePrime => TriCoord::new(i, rest, j),
    })
}

/// Inverse of [`coord_of`] for one frame.
pub fn index_of(x: TriCoord, frame: Frame) -> FrameIndex {
    let (row, pos) = match frame {
        Frame::H => (x.s2, x.s1),
        Frame::HPrime => (x.s3, x.s2),
        Frame::HDoublePrime => (x.s1, x.s3),
    };
    FrameIndex { frame, row, pos }
}

/// The vertex left out of the triangle, `H[r-2][1] = H'[1][r-2] = H''[1][1]`.
pub fn removed_vertex(r: usize) -> TriCoord {
    TriCoord::new(1, r - 2, 1)
}

/// All coordinates of the construction in id order: by `s2`, then `s1`.
pub fn vertex_coords(r: usize) -> Vec<TriCoord> {
    let removed = removed_vertex(r);
    (1..=r - 2)
        .flat_map(|i| (1..r - i).map(move |j| TriCoord::new(j, i, r - i - j)))
        .filter(|&x| x != removed)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyTag {
    /// Threshold graph on one row.
    Row(usize),
    A,
    /// Rows `4i-3` and `4i-1`; only color 1 uses it.
    B,
    /// Rows `4i-1` and `4i+1`; colors 2 and 3.
    BPrime,
    E(usize),
    Patch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFamily {
    pub tag: FamilyTag,
    pub frame: Frame,
    pub edges: Vec<(TriCoord, TriCoord)>,
    /// Edges the formula produced at the removed vertex, which do not exist.
    pub dropped: Vec<(TriCoord, TriCoord)>,
}

impl EdgeFamily {
    pub fn is_matching(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|&(a, b)| seen.insert(a) && seen.insert(b))
    }
}

struct FamilyBuilder {
    r: usize,
    frame: Frame,
    removed: TriCoord,
}

impl FamilyBuilder {
    fn at(&self, row: usize, pos: usize) -> TriCoord {
        coord_of(FrameIndex::new(self.frame, row, pos), self.r)
            .expect("family formula stays inside the triangle")
    }

    fn family(
        &self,
        tag: FamilyTag,
        pairs: impl IntoIterator<Item = ((usize, usize), (usize, usize))>,
    ) -> EdgeFamily {
        let (edges, dropped) = pairs
            .into_iter()
            .map(|((i1, j1), (i2, j2))| (self.at(i1, j1), self.at(i2, j2)))
            .partition(|&(a, b)| a != self.removed && b != self.removed);
        EdgeFamily {
            tag,
            frame: self.frame,
            edges,
            dropped,
        }
    }

    fn row(&self, row: usize, seq: &[TriCoord]) -> EdgeFamily {
        let g = ThresholdGraph::possibly_empty(seq.len());
        let pairs: Vec<_> = g
            .edges()
            .iter()
            .map(|&(a, b)| (seq[a - 1], seq[b - 1]))
            .collect();
        EdgeFamily {
            tag: FamilyTag::Row(row),
            frame: self.frame,
            edges: pairs,
            dropped: Vec::new(),
        }
    }

    fn full_row(&self, row: usize) -> Vec<TriCoord> {
        (1..self.r - row).map(|j| self.at(row, j)).collect()
    }

    fn a(&self) -> EdgeFamily {
        let (h, q) = ((self.r - 1) / 2, (self.r - 3) / 4);
        self.family(
            FamilyTag::A,
            (1..=q).map(|i| ((1, h + 2 * i), (2, h + 2 * i - 1))),
        )
    }

    fn e(&self, j: usize) -> EdgeFamily {
        let r = self.r;
        self.family(
            FamilyTag::E(j),
            (1..r - 4 * j).map(|i| ((i, r - i - 2 * j), (i + 2, r - i - 2 * j - 1))),
        )
    }

    fn b(&self) -> EdgeFamily {
        let r = self.r;
        self.family(
            FamilyTag::B,
            (1..=(r - 3) / 4).map(|i| {
                (
                    (4 * i - 3, (r + 3 - 4 * i) / 2),
                    (4 * i - 1, (r + 1 - 4 * i) / 2),
                )
            }),
        )
    }

    fn b_prime(&self) -> EdgeFamily {
        let r = self.r;
        self.family(
            FamilyTag::BPrime,
            (1..=(r - 3) / 4).map(|i| {
                (
                    (4 * i - 1, (r + 1 - 4 * i) / 2),
                    (4 * i + 1, (r - 1 - 4 * i) / 2),
                )
            }),
        )
    }
}

/// The edge families making up color class `color`, after patches.
pub fn build_color_class(color: usize, r: usize) -> Result<Vec<EdgeFamily>, Regular3Error> {
    check_degree(r)?;
    if !(1..=3).contains(&color) {
        return Err(Regular3Error::BadColor(color));
    }
    let fb = FamilyBuilder {
        r,
        frame: Frame::for_color(color),
        removed: removed_vertex(r),
    };
    let half = (r - 1) / 2;
    let mut families = Vec::new();
    match color {
        1 => {
            // Row r-2 is the removed vertex alone.
            for i in 1..=r - 3 {
                families.push(fb.row(i, &fb.full_row(i)));
            }
        }
        2 => {
            // Row 1 loses its last position, the removed vertex.
            let mut first = fb.full_row(1);
            first.pop();
            families.push(fb.row(1, &first));
            for i in 2..=r - 2 {
                families.push(fb.row(i, &fb.full_row(i)));
            }
        }
        _ => {
            // H''[2][1] stands in for the removed H''[1][1] at position 1.
            let mut first = fb.full_row(1);
            first[0] = fb.at(2, 1);
            families.push(fb.row(1, &first));
            for i in 2..=r - 2 {
                families.push(fb.row(i, &fb.full_row(i)));
            }
        }
    }
    families.push(fb.a());
    for j in 1..=(r - 3) / 4 {
        families.push(fb.e(j));
    }
    families.push(if color == 1 { fb.b() } else { fb.b_prime() });

    match color {
        2 => {
            families.push(EdgeFamily {
                tag: FamilyTag::Patch,
                frame: fb.frame,
                edges: vec![(fb.at(2, r - 3), fb.at(1, half))],
                dropped: Vec::new(),
            });
        }
        3 => {
            let gone = (fb.at(2, 1), fb.at(2, r - 3));
            let row2 = families
                .iter_mut()
                .find(|f| f.tag == FamilyTag::Row(2))
                .expect("row 2 family exists");
            let before = row2.edges.len();
            row2.edges.retain(|&(a, b)| !same_edge((a, b), gone));
            if row2.edges.len() + 1 != before {
                return Err(Regular3Error::MissingPatchEdge(gone.0, gone.1));
            }
            families.push(EdgeFamily {
                tag: FamilyTag::Patch,
                frame: fb.frame,
                edges: vec![(fb.at(1, half), fb.at(2, r - 3))],
                dropped: Vec::new(),
            });
        }
        _ => {}
    }
    Ok(families)
}

fn same_edge(a: (TriCoord, TriCoord), b: (TriCoord, TriCoord)) -> bool {
    a == b || (a.0 == b.1 && a.1 == b.0)
}

/// A built construction with its coordinate table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regular3 {
    pub r: usize,
    pub graph: ColoredGraph,
    /// `coords[id - 1]` is the coordinate of vertex `id`.
    pub coords: Vec<TriCoord>,
}

impl Regular3 {
    pub fn vertex_of(&self, x: TriCoord) -> Option<Vertex> {
        self.coords.iter().position(|&c| c == x).map(|i| i + 1)
    }

    /// Names each vertex in all three frames plus its coordinate.
    pub fn labels(&self) -> BTreeMap<Vertex, String> {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let names: Vec<String> = Frame::ALL
                    .iter()
                    .map(|&f| index_of(x, f).to_string())
                    .collect();
                (i + 1, format!("{} {}", names.join(" = "), x))
            })
            .collect()
    }
}

pub fn construct_regular3(r: usize) -> Result<Regular3, Regular3Error> {
    check_degree(r)?;
    let coords = vertex_coords(r);
    let ids: BTreeMap<TriCoord, Vertex> = coords
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i + 1))
        .collect();

    let classes: Vec<Result<Vec<EdgeFamily>, Regular3Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=3)
            .map(|c| s.spawn(move || build_color_class(c, r)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("color class thread"))
            .collect()
    });

    let mut seen: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    for (c, families) in (1..=3).zip(classes) {
        for family in families? {
            for (a, b) in family.edges {
                let (u, v) = (ids[&a], ids[&b]);
                if seen.insert((u.min(v), u.max(v)), c).is_some() {
                    return Err(Regular3Error::Overlap(a, b));
                }
            }
        }
    }
    let graph = ColoredGraph::new(
        coords.len(),
        3,
        seen.into_iter().map(|((u, v), c)| (u, v, c)),
    )?;
    Ok(Regular3 { r, graph, coords })
}
