//! Closed braids and invariants of their closures.
//!
//! A braid on `n` strands is a word in the generators `σ₁ … σₙ₋₁`; the letter
//! `i` stands for `σᵢ` and `-i` for its inverse. Strands run upward and `σᵢ`
//! is a positive crossing in which the strand moving from position `i` to
//! position `i + 1` passes over.
//!
//! The closure is drawn around an axis. Its complementary regions come in
//! columns: column 0 is the disk around the axis, column `n` is the outer
//! region, and column `c` in between lies between positions `c` and `c + 1`,
//! cut into one piece per occurrence of `σ_c`. Shading every column of one
//! parity gives a checkerboard colouring.

use crate::linalg::{eigen_signature, minor, Matrix};

/// Gordon–Litherland index of a positive crossing whose shaded band runs
/// vertically (along the braid direction). A horizontal band has the opposite
/// index. The value and [`VERTICAL_IS_TYPE_TWO`] are the only choices under
/// which both shadings reproduce the tabulated signatures in the tests below.
const ETA_SCALE: i64 = 1;
/// Whether a crossing whose shaded band runs vertically is of type II.
const VERTICAL_IS_TYPE_TWO: bool = true;
/// Coupling signs between interleaved loops of adjacent columns in the braid
/// Seifert surface: the column-`c` loop starts lower, or the column-`c + 1` loop
/// starts lower. Only the relative sign affects the signature.
const INTERLEAVE_LOWER_FIRST: i64 = 1;
const INTERLEAVE_UPPER_FIRST: i64 = -1;

/// A braid word on a fixed number of strands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Braid {
    strands: usize,
    word: Vec<i32>,
}

/// A crossing of the closure, with edge labels of the four incident edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramCrossing {
    pub over_in: usize,
    pub over_out: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i64,
}

/// Checkerboard data of a closed braid diagram for one shading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkerboard {
    /// Number of shaded regions.
    pub shaded_regions: usize,
    /// For every crossing, the shaded regions it joins.
    pub bands: Vec<(usize, usize)>,
    /// Gordon–Litherland index of every crossing.
    pub eta: Vec<i64>,
    /// Gordon–Litherland form of the shaded surface (reduced Goeritz matrix
    /// of the unshaded regions).
    pub form: Matrix,
    /// Sum of the indices of the type II crossings.
    pub correction: i64,
}

impl Checkerboard {
    /// `sign(form) - correction`.
    pub fn signature(&self) -> i64 {
        eigen_signature(&self.form) - self.correction
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let parent = self.0[x];
        if parent == x {
            return x;
        }
        let root = self.find(parent);
        self.0[x] = root;
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }

    /// Relabels the classes as `0..count` in order of first appearance.
    fn labels(&mut self) -> (usize, Vec<usize>) {
        let mut next = std::collections::BTreeMap::new();
        let labels = (0..self.0.len())
            .map(|x| {
                let r = self.find(x);
                let fresh = next.len();
                *next.entry(r).or_insert(fresh)
            })
            .collect();
        (next.len(), labels)
    }
}

impl Braid {
    /// Panics if a letter is out of range.
    pub fn new(strands: usize, word: Vec<i32>) -> Self {
        assert!(strands >= 1);
        for &g in &word {
            assert!(g != 0 && (g.unsigned_abs() as usize) < strands, "letter {g} on {strands} strands");
        }
        Braid { strands, word }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    /// Heights at which `σ_column` occurs.
    fn heights(&self, column: usize) -> Vec<usize> {
        (0..self.word.len()).filter(|&h| self.word[h].unsigned_abs() as usize == column).collect()
    }

    /// Whether every generator occurs, so that the diagram is connected and
    /// every region is a disk.
    pub fn every_column_used(&self) -> bool {
        (1..self.strands).all(|c| !self.heights(c).is_empty())
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let mut position: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            position.swap(i, i + 1);
        }
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = position[p];
            }
        }
        cycles
    }

    /// Component of the closure through each starting position.
    fn component_of_position(&self) -> Vec<usize> {
        let mut position: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            position.swap(i, i + 1);
        }
        // `position[p]` is the strand ending at p; the closure joins it to the strand starting at p.
        let mut uf = UnionFind::new(self.strands);
        for (p, &strand) in position.iter().enumerate() {
            uf.union(strand, p);
        }
        uf.labels().1
    }

    /// Linking numbers between the components of the closure, with every
    /// strand oriented upward. Components are numbered in order of their
    /// lowest starting position.
    pub fn linking_matrix(&self) -> Matrix {
        let component = self.component_of_position();
        let count = self.components();
        let mut strand_at: Vec<usize> = (0..self.strands).collect();
        let mut twice = vec![vec![0i64; count]; count];
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            let (a, b) = (component[strand_at[i]], component[strand_at[i + 1]]);
            if a != b {
                let sign = if g > 0 { 1 } else { -1 };
                twice[a][b] += sign;
                twice[b][a] += sign;
            }
            strand_at.swap(i, i + 1);
        }
        twice.iter().map(|r| r.iter().map(|x| x / 2).collect()).collect()
    }

    /// Crossings of the closure with edges labelled `0..edge_count`.
    pub fn crossings(&self) -> (usize, Vec<DiagramCrossing>) {
        let mut current: Vec<usize> = (0..self.strands).collect();
        let mut next = self.strands;
        let mut raw = Vec::new();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            let (left_in, right_in) = (current[i], current[i + 1]);
            let (to_right, to_left) = (next, next + 1);
            next += 2;
            let c = if g > 0 {
                DiagramCrossing {
                    over_in: left_in,
                    over_out: to_right,
                    under_in: right_in,
                    under_out: to_left,
                    sign: 1,
                }
            } else {
                DiagramCrossing {
                    over_in: right_in,
                    over_out: to_left,
                    under_in: left_in,
                    under_out: to_right,
                    sign: -1,
                }
            };
            raw.push(c);
            current[i] = to_left;
            current[i + 1] = to_right;
        }
        let mut uf = UnionFind::new(next);
        for (p, &e) in current.iter().enumerate() {
            uf.union(e, p);
        }
        let (count, label) = uf.labels();
        let crossings = raw
            .into_iter()
            .map(|c| DiagramCrossing {
                over_in: label[c.over_in],
                over_out: label[c.over_out],
                under_in: label[c.under_in],
                under_out: label[c.under_out],
                sign: c.sign,
            })
            .collect();
        (count, crossings)
    }

    /// Arcs of the diagram (edges joined through overpasses) and, for every
    /// crossing, the arcs `(incoming under, over, outgoing under)`.
    pub fn arcs(&self) -> (usize, Vec<(usize, usize, usize)>) {
        let (edges, crossings) = self.crossings();
        let mut uf = UnionFind::new(edges);
        for c in &crossings {
            uf.union(c.over_in, c.over_out);
        }
        let (count, label) = uf.labels();
        let relations = crossings.iter().map(|c| (label[c.under_in], label[c.over_in], label[c.under_out])).collect();
        (count, relations)
    }

    /// Regions per column, and a map from (column, piece) to a global index
    /// restricted to columns of the given parity.
    fn region_index(&self, parity: usize) -> (usize, Vec<Vec<Option<usize>>>) {
        let mut index = Vec::new();
        let mut count = 0;
        for column in 0..=self.strands {
            let pieces = if column == 0 || column == self.strands { 1 } else { self.heights(column).len() };
            let ids = (0..pieces)
                .map(|_| {
                    (column % 2 == parity).then(|| {
                        count += 1;
                        count - 1
                    })
                })
                .collect();
            index.push(ids);
        }
        (count, index)
    }

    /// Piece of `column` containing height `h`, for `h` not a crossing of that column.
    fn piece_at(&self, column: usize, h: usize) -> usize {
        if column == 0 || column == self.strands {
            return 0;
        }
        let heights = self.heights(column);
        let below = heights.iter().filter(|&&x| x < h).count();
        if below == 0 {
            heights.len() - 1
        } else {
            below - 1
        }
    }

    /// The two regions of the given parity that the crossing at height `h` joins.
    fn joined(&self, parity: usize, index: &[Vec<Option<usize>>], h: usize) -> (usize, usize) {
        let column = self.word[h].unsigned_abs() as usize;
        if column % 2 == parity {
            let heights = self.heights(column);
            let j = heights.iter().position(|&x| x == h).expect("crossing height");
            let before = (j + heights.len() - 1) % heights.len();
            (index[column][before].unwrap(), index[column][j].unwrap())
        } else {
            let left = index[column - 1][self.piece_at(column - 1, h)].unwrap();
            let right = index[column + 1][self.piece_at(column + 1, h)].unwrap();
            (left, right)
        }
    }

    /// Checkerboard data for the shading of all columns with `column % 2 == parity`.
    ///
    /// Panics unless every generator occurs.
    pub fn checkerboard(&self, parity: usize) -> Checkerboard {
        assert!(self.every_column_used(), "every generator must occur");
        let (shaded_regions, shaded) = self.region_index(parity);
        let (white_regions, white) = self.region_index(1 - parity);
        let mut bands = Vec::new();
        let mut eta = Vec::new();
        let mut correction = 0;
        let mut laplacian = vec![vec![0i64; white_regions]; white_regions];
        for (h, &g) in self.word.iter().enumerate() {
            let column = g.unsigned_abs() as usize;
            let vertical = column % 2 == parity;
            let sign = if g > 0 { 1 } else { -1 };
            let e = ETA_SCALE * sign * if vertical { 1 } else { -1 };
            bands.push(self.joined(parity, &shaded, h));
            eta.push(e);
            if vertical == VERTICAL_IS_TYPE_TWO {
                correction += e;
            }
            let (a, b) = self.joined(1 - parity, &white, h);
            if a != b {
                laplacian[a][a] += e;
                laplacian[b][b] += e;
                laplacian[a][b] -= e;
                laplacian[b][a] -= e;
            }
        }
        Checkerboard { shaded_regions, bands, eta, form: minor(&laplacian, 0), correction }
    }

    /// Symmetrised Seifert form `V + Vᵀ` of the braid Seifert surface: one
    /// disk per strand and one half-twisted band per crossing. The basis is
    /// the loops between consecutive crossings of each column.
    ///
    /// Panics unless every generator occurs.
    pub fn seifert_form(&self) -> Matrix {
        assert!(self.every_column_used(), "every generator must occur");
        let sign = |h: usize| if self.word[h] > 0 { 1 } else { -1 };
        // (column, lower height, upper height)
        let mut loops = Vec::new();
        for column in 1..self.strands {
            let heights = self.heights(column);
            for w in heights.windows(2) {
                loops.push((column, w[0], w[1]));
            }
        }
        let n = loops.len();
        let mut form = vec![vec![0i64; n]; n];
        for (i, &(ci, ai, bi)) in loops.iter().enumerate() {
            form[i][i] = -(sign(ai) + sign(bi));
            for (j, &(cj, aj, bj)) in loops.iter().enumerate() {
                if i == j {
                    continue;
                }
                if ci == cj && bi == aj {
                    form[i][j] = sign(bi);
                    form[j][i] = sign(bi);
                }
                if cj == ci + 1 {
                    let value = if ai < aj && aj < bi && bi < bj {
                        INTERLEAVE_LOWER_FIRST
                    } else if aj < ai && ai < bj && bj < bi {
                        INTERLEAVE_UPPER_FIRST
                    } else {
                        0
                    };
                    form[i][j] = value;
                    form[j][i] = value;
                }
            }
        }
        form
    }

    /// Signature of the closure from the Seifert form.
    pub fn seifert_signature(&self) -> i64 {
        eigen_signature(&self.seifert_form())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Signatures of standard links, for the positive-crossing convention
    /// above (positive Hopf link −1, right-handed trefoil −2).
    fn tabulated() -> Vec<(Braid, i64)> {
        vec![
            (Braid::new(1, vec![]), 0),
            (Braid::new(2, vec![1, 1]), -1),
            (Braid::new(2, vec![1, 1, 1]), -2),
            (Braid::new(2, vec![-1, -1, -1]), 2),
            (Braid::new(2, vec![1; 4]), -3),
            (Braid::new(2, vec![1; 5]), -4),
            (Braid::new(3, vec![1, -2, 1, -2]), 0),
            (Braid::new(3, [1, 2].repeat(3)), -4),
            (Braid::new(3, [1, 2].repeat(4)), -6),
            (Braid::new(3, [1, 2].repeat(5)), -8),
            (Braid::new(4, [1, 2, 3].repeat(3)), -6),
        ]
    }

    #[test]
    fn both_shadings_reproduce_tabulated_signatures() {
        for (b, sigma) in tabulated() {
            if b.strands() > 1 {
                assert_eq!(b.checkerboard(0).signature(), sigma, "{b:?}, shading 0");
                assert_eq!(b.checkerboard(1).signature(), sigma, "{b:?}, shading 1");
            }
        }
    }

    #[test]
    fn seifert_form_reproduces_tabulated_signatures() {
        for (b, sigma) in tabulated() {
            assert_eq!(b.seifert_signature(), sigma, "{b:?}");
        }
    }

    #[test]
    fn component_counts() {
        assert_eq!(Braid::new(2, vec![1, 1]).components(), 2);
        assert_eq!(Braid::new(2, vec![1, 1, 1]).components(), 1);
        assert_eq!(Braid::new(3, [1, 2].repeat(3)).components(), 3);
        assert_eq!(Braid::new(3, vec![1, -2, 1, -2]).components(), 1);
    }

    #[test]
    fn linking_matrices() {
        assert_eq!(Braid::new(2, vec![1, 1]).linking_matrix(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(Braid::new(2, vec![-1; 4]).linking_matrix(), vec![vec![0, -2], vec![-2, 0]]);
        let t33 = Braid::new(3, [1, 2].repeat(3)).linking_matrix();
        assert_eq!(t33, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn checkerboard_of_the_figure_eight() {
        let c = Braid::new(3, vec![1, -2, 1, -2]).checkerboard(1);
        assert_eq!(c.shaded_regions, 3);
        assert_eq!(c.form, vec![vec![3, -2], vec![-2, 3]]);
        assert_eq!(c.eta, vec![1, 1, 1, 1]);
    }

    #[test]
    fn trefoil_arcs_give_the_coloring_relations() {
        let (arcs, relations) = Braid::new(2, vec![1, 1, 1]).arcs();
        assert_eq!(arcs, 3);
        assert_eq!(relations.len(), 3);
        for (a, o, b) in relations {
            assert!(a != o && o != b && a != b);
        }
    }
}
