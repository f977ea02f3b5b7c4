//! Karmarkar–Karp largest differencing on block sizes.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::Partition;

/// Pairs `(difference, side A items, side B items)` of the differencing
/// tree; returns the final difference and the item indices on each side.
fn differencing(sizes: &[usize]) -> (usize, Vec<usize>, Vec<usize>) {
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = BinaryHeap::new();
    let mut sides: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        heap.push((s, Reverse(i)));
        sides.push((vec![i], Vec::new()));
    }
    while heap.len() > 1 {
        let (x, Reverse(i)) = heap.pop().expect("two entries");
        let (y, Reverse(j)) = heap.pop().expect("two entries");
        let (xa, xb) = std::mem::take(&mut sides[i]);
        let (ya, yb) = std::mem::take(&mut sides[j]);
        let mut a = xa;
        a.extend(yb);
        let mut b = xb;
        b.extend(ya);
        let k = sides.len();
        sides.push((a, b));
        heap.push((x - y, Reverse(k)));
    }
    let (d, Reverse(k)) = heap.pop().expect("nonempty");
    let (a, b) = std::mem::take(&mut sides[k]);
    (d, a, b)
}

/// Difference between the two side sums KK reaches on `sizes`.
pub fn kk_difference(sizes: &[usize]) -> usize {
    if sizes.is_empty() {
        return 0;
    }
    differencing(sizes).0
}

/// Coarse-grains `p` into two blocks of nearly equal size.
pub fn kk_bipartition(p: &Partition) -> Result<Partition> {
    if p.len() < 2 {
        return Err(Error::InvalidPartition(format!(
            "coarse-graining needs at least two blocks, got {}",
            p.len()
        )));
    }
    let sizes: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
    let (_, a, b) = differencing(&sizes);
    let side = |items: &[usize]| -> Vec<usize> {
        items.iter().flat_map(|&i| p.blocks()[i].iter().copied()).collect()
    };
    Ok(Partition::from_blocks(vec![side(&a), side(&b)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blocks_of_sizes(sizes: &[usize]) -> Partition {
        let mut next = 0;
        let blocks = sizes
            .iter()
            .map(|&s| {
                let b: Vec<usize> = (next..next + s).collect();
                next += s;
                b
            })
            .collect();
        Partition::new(blocks).unwrap()
    }

    fn side_difference(q: &Partition) -> usize {
        q.blocks()[0].len().abs_diff(q.blocks()[1].len())
    }

    #[test]
    fn differencing_examples() {
        let q = kk_bipartition(&blocks_of_sizes(&[3, 1])).unwrap();
        assert_eq!(side_difference(&q), 2);
        let p = blocks_of_sizes(&[2, 1, 1]);
        let q = kk_bipartition(&p).unwrap();
        assert_eq!(side_difference(&q), 0);
        assert!(q.is_coarse_graining_of(&p));
        assert!(q.blocks().iter().any(|b| b == &vec![0, 1]));
        assert_eq!(kk_difference(&[8, 7, 6, 5, 4]), 2);
        let q = kk_bipartition(&blocks_of_sizes(&[8, 7, 6, 5, 4])).unwrap();
        assert_eq!(side_difference(&q), 2);
    }

    #[test]
    fn rejects_single_block() {
        assert!(kk_bipartition(&blocks_of_sizes(&[4])).is_err());
    }

    #[test]
    fn coarse_grains_into_two_nonempty_blocks() {
        for sizes in [[1, 1, 1, 1, 1].as_slice(), &[5, 1, 1], &[2, 2, 3, 9, 1, 1]] {
            let p = blocks_of_sizes(sizes);
            let q = kk_bipartition(&p).unwrap();
            assert_eq!(q.len(), 2);
            assert!(q.is_coarse_graining_of(&p));
            assert_eq!(side_difference(&q), kk_difference(sizes));
        }
    }
}
