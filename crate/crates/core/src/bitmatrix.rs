//! Boolean matrices with machine-word rows.

use crate::graph::Graph;
use crate::set::VertexSet;

/// A square boolean matrix; row `i` is a bitset over columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<VertexSet>,
}

impl BitMatrix {
    pub fn zeros(n: usize) -> Self {
        BitMatrix {
            rows: vec![VertexSet::new(n); n],
        }
    }

    pub fn adjacency(g: &Graph) -> Self {
        BitMatrix {
            rows: g.adjacency_rows(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.rows[i].insert(j);
    }

    pub fn row(&self, i: usize) -> &VertexSet {
        &self.rows[i]
    }

    /// Boolean product: `(A·B)[i][j] = OR_k A[i][k] AND B[k][j]`, computed
    /// by OR-ing the rows of `B` selected by row `i` of `A`.
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.dim(), other.dim());
        let rows = self
            .rows
            .iter()
            .map(|ri| {
                let mut out = VertexSet::new(self.dim());
                for k in ri {
                    out.union_with(&other.rows[k]);
                }
                out
            })
            .collect();
        BitMatrix { rows }
    }

    pub fn square(&self) -> BitMatrix {
        self.mul(self)
    }

    /// Entry-wise OR.
    pub fn or(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.dim(), other.dim());
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.union_with(b);
                r
            })
            .collect();
        BitMatrix { rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{path_graph, random_graph};

    #[test]
    fn square_of_path_links_distance_two() {
        let m = BitMatrix::adjacency(&path_graph(4)).square();
        assert!(m.get(0, 2));
        assert!(m.get(1, 3));
        assert!(m.get(0, 0));
        assert!(!m.get(0, 3));
        assert!(!m.get(0, 1));
    }

    #[test]
    fn product_matches_triple_loop() {
        let a = BitMatrix::adjacency(&random_graph(70, 0.2, 1).unwrap());
        let b = BitMatrix::adjacency(&random_graph(70, 0.3, 2).unwrap());
        let c = a.mul(&b);
        for i in 0..70 {
            for j in 0..70 {
                let expected = (0..70).any(|k| a.get(i, k) && b.get(k, j));
                assert_eq!(c.get(i, j), expected);
            }
        }
    }
}
