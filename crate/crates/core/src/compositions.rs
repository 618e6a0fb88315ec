//! Weak compositions ("stars and bars"), emitted first part descending.

/// Iterator over every way of writing `total` as an ordered sum of `bins`
/// non-negative parts.
///
/// Order is reverse lexicographic: `(3,0), (2,1), (1,2), (0,3)` for
/// `total = 3, bins = 2`. With zero bins, the only composition is the empty
/// one of zero.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Compositions {
    pub fn new(total: usize, bins: usize) -> Self {
        let current = match (total, bins) {
            (0, 0) => Some(Vec::new()),
            (_, 0) => None,
            _ => {
                let mut first = vec![0; bins];
                first[0] = total;
                Some(first)
            }
        };
        Compositions { current }
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.take()?;
        let bins = current.len();
        if bins >= 2 {
            // rightmost non-zero part that still has a part after it
            if let Some(i) = (0..bins - 1).rev().find(|&i| current[i] > 0) {
                let mut next = current.clone();
                let tail = next[bins - 1];
                next[i] -= 1;
                next[bins - 1] = 0;
                next[i + 1] = tail + 1;
                self.current = Some(next);
            }
        }
        Some(current)
    }
}

pub fn compositions(total: usize, bins: usize) -> Compositions {
    Compositions::new(total, bins)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn binom(a: u64, b: u64) -> u64 {
        (1..=b).fold(1, |acc, i| acc * (a - b + i) / i)
    }

    #[test]
    fn listed_order() {
        let got: Vec<_> = compositions(3, 2).collect();
        assert_eq!(got, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
        let got: Vec<_> = compositions(2, 3).collect();
        assert_eq!(
            got,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn degenerate() {
        assert_eq!(compositions(0, 3).collect::<Vec<_>>(), vec![vec![0, 0, 0]]);
        assert_eq!(compositions(0, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(compositions(4, 0).count(), 0);
        assert_eq!(compositions(4, 1).collect::<Vec<_>>(), vec![vec![4]]);
        assert_eq!(compositions(5, 3).count(), 21);
    }

    #[test]
    fn counts_distinct_sorted() {
        for total in 0..=8usize {
            for bins in 1..=5usize {
                let all: Vec<_> = compositions(total, bins).collect();
                let expect = binom((total + bins - 1) as u64, (bins - 1) as u64);
                assert_eq!(all.len() as u64, expect, "total={total} bins={bins}");
                assert!(all.iter().all(|c| c.len() == bins && c.iter().sum::<usize>() == total));
                let set: HashSet<_> = all.iter().cloned().collect();
                assert_eq!(set.len(), all.len());
                assert!(all.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }
}
