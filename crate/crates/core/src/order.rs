use serde::Serialize;

use crate::error::{Error, Result};

/// A linear order on `0..n`: `sequence[i]` is the vertex at position `i`,
/// smallest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinearOrder {
    sequence: Vec<usize>,
    #[serde(skip)]
    position: Vec<usize>,
}

impl LinearOrder {
    pub fn identity(n: usize) -> Self {
        LinearOrder { sequence: (0..n).collect(), position: (0..n).collect() }
    }

    /// Fails unless `sequence` is a permutation of `0..sequence.len()`.
    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::arg(format!("not a permutation of 0..{n}: {sequence:?}")));
            }
            position[v] = i;
        }
        Ok(LinearOrder { sequence, position })
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn at(&self, i: usize) -> usize {
        self.sequence[i]
    }

    pub fn less(&self, u: usize, v: usize) -> bool {
        self.position[u] < self.position[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sequence
    }

    pub fn reversed(&self) -> LinearOrder {
        let mut seq = self.sequence.clone();
        seq.reverse();
        LinearOrder::from_sequence(seq).expect("reverse of a permutation")
    }

    /// The order induced on a relabelled subgraph whose vertex `i` is the
    /// original vertex `old_of[i]`.
    pub fn restrict(&self, old_of: &[usize]) -> LinearOrder {
        let mut idx: Vec<usize> = (0..old_of.len()).collect();
        idx.sort_by_key(|&i| self.position[old_of[i]]);
        LinearOrder::from_sequence(idx).expect("restriction is a permutation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_inverse() {
        let l = LinearOrder::from_sequence(vec![2, 0, 1]).unwrap();
        for i in 0..3 {
            assert_eq!(l.position(l.at(i)), i);
        }
        assert!(l.less(2, 0));
        assert!(LinearOrder::from_sequence(vec![0, 0]).is_err());
        assert!(LinearOrder::from_sequence(vec![0, 2]).is_err());
        assert_eq!(l.restrict(&[0, 2]).as_slice(), &[1, 0]);
    }
}
