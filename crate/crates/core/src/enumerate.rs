//! Input spaces for the exhaustive sweeps.

use crate::diagram::Partition;
use crate::projective::{alpha_from_strict, ClassBPartition, StrictPartition};

/// Every partition with exactly `k` parts bounded by `n`, in ascending
/// lexicographic order of the part sequence. There are `C(n+k, k)` of them.
pub fn partitions(k: usize, n: usize) -> Partitions {
    Partitions {
        next: (k >= 1 && n >= 1).then(|| vec![0; k]),
        n,
    }
}

pub struct Partitions {
    next: Option<Vec<usize>>,
    n: usize,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // bump the rightmost part that still has room, zero what follows
        let room = |parts: &[usize], j: usize| {
            let cap = if j == 0 { self.n } else { parts[j - 1] };
            parts[j] < cap
        };
        if let Some(j) = (0..succ.len()).rev().find(|&j| room(&succ, j)) {
            succ[j] += 1;
            succ[j + 1..].iter_mut().for_each(|a| *a = 0);
            self.next = Some(succ);
        }
        let k = current.len();
        Some(Partition::new(current, k, self.n).expect("enumerated parts are valid"))
    }
}

/// All class-B partitions for `k`: one per subset of `{1..k}`, `2^k` in
/// total. Subsets are visited in the binary order of their indicator mask
/// (bit `j-1` set when `j` is a part), starting from the empty set.
pub fn class_b(k: usize) -> impl Iterator<Item = ClassBPartition> {
    assert!(k >= 1 && k < usize::BITS as usize, "k out of range");
    (0usize..1 << k).map(move |mask| {
        let lambda: Vec<usize> = (1..=k).rev().filter(|j| mask >> (j - 1) & 1 == 1).collect();
        let strict = StrictPartition::new(lambda, k).expect("subset parts are strict");
        alpha_from_strict(&strict)
    })
}
