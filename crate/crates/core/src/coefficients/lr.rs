//! Littlewood–Richardson coefficients by counting LR skew tableaux.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::memo::global_memo;
use crate::partition::Partition;

/// One LR-tableau search over the skew shape `outer/inner`.
///
/// Cells are visited in reverse reading order (rows top to bottom, each row
/// right to left), which is the order the lattice condition is stated in.
struct SkewFiller<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    cells: Vec<(usize, usize)>,
    filling: Vec<Vec<usize>>,
    counts: Vec<usize>,
    limit: Option<&'a [usize]>,
}

impl<'a> SkewFiller<'a> {
    fn new(outer: &'a Partition, inner: &'a Partition, limit: Option<&'a [usize]>) -> Self {
        let cells = (0..outer.len())
            .flat_map(|i| (inner.part(i)..outer.part(i)).rev().map(move |j| (i, j)))
            .collect();
        let filling = (0..outer.len()).map(|i| vec![usize::MAX; outer.part(i)]).collect();
        let letters = limit.map_or(outer.len(), |l| l.len());
        SkewFiller {
            outer,
            inner,
            cells,
            filling,
            counts: vec![0; letters],
            limit,
        }
    }

    fn run(&mut self, k: usize, leaf: &mut impl FnMut(&[usize])) {
        if k == self.cells.len() {
            leaf(&self.counts);
            return;
        }
        let (i, j) = self.cells[k];
        let mut hi = self.counts.len().saturating_sub(1);
        if j + 1 < self.outer.part(i) {
            hi = hi.min(self.filling[i][j + 1]);
        }
        let lo = if i > 0 && j >= self.inner.part(i - 1) {
            self.filling[i - 1][j] + 1
        } else {
            0
        };
        if self.counts.is_empty() {
            return;
        }
        for v in lo..=hi {
            if v > 0 && self.counts[v] >= self.counts[v - 1] {
                continue;
            }
            if let Some(limit) = self.limit {
                if self.counts[v] >= limit[v] {
                    continue;
                }
            }
            self.counts[v] += 1;
            self.filling[i][j] = v;
            self.run(k + 1, leaf);
            self.counts[v] -= 1;
        }
        self.filling[i][j] = usize::MAX;
    }
}

global_memo!(lr_memo: (Partition, Partition, Partition) => u64);

/// `c^λ_{μ,ν}`: LR tableaux of shape `λ/μ` and content `ν`. Zero unless
/// `|λ| = |μ| + |ν|`.
pub fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    // fill with the content that has fewer letters
    let (inner, content) = if mu.len() < nu.len() { (nu, mu) } else { (mu, nu) };
    if content.is_empty() {
        return u64::from(lambda == inner);
    }
    let key = (lambda.clone(), inner.clone(), content.clone());
    lr_memo().get_or_compute(key, || {
        let mut count = 0u64;
        SkewFiller::new(lambda, inner, Some(content.parts())).run(0, &mut |_| count += 1);
        count
    })
}

pub type SkewExpansion = Arc<BTreeMap<Partition, u64>>;

global_memo!(skew_memo: (Partition, Partition) => SkewExpansion);

/// `s_{outer/inner} = Σ_ν c^{outer}_{inner,ν} s_ν`. Empty when `inner` is not
/// contained in `outer`.
pub fn skew_expansion(outer: &Partition, inner: &Partition) -> SkewExpansion {
    if !outer.contains(inner) {
        return Arc::new(BTreeMap::new());
    }
    skew_memo().get_or_compute((outer.clone(), inner.clone()), || {
        let mut acc: HashMap<Vec<usize>, u64> = HashMap::new();
        SkewFiller::new(outer, inner, None).run(0, &mut |counts| {
            *acc.entry(counts.to_vec()).or_insert(0) += 1;
        });
        Arc::new(
            acc.into_iter()
                .map(|(content, c)| (Partition::from_sorted(content), c))
                .collect(),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(lr_count(&p(&[3, 1]), &p(&[3, 1]), &Partition::empty()), 1);
        assert_eq!(lr_count(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_count(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_count(&p(&[2]), &p(&[1]), &p(&[1, 1])), 0);
        assert_eq!(lr_count(&p(&[3]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(
            lr_count(&Partition::empty(), &Partition::empty(), &Partition::empty()),
            1
        );
    }

    #[test]
    fn skew_expansion_agrees_with_counts() {
        for n in 0..=7 {
            for lambda in partitions_of(n).iter() {
                for k in 0..=n {
                    for mu in partitions_of(k).iter() {
                        let expansion = skew_expansion(lambda, mu);
                        for nu in partitions_of(n - k).iter() {
                            let via_expansion = expansion.get(nu).copied().unwrap_or(0);
                            assert_eq!(via_expansion, lr_count(lambda, mu, nu));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_rule() {
        // s_μ · h_k: one copy of every λ with λ/μ a horizontal strip of size k
        let mu = p(&[2, 1]);
        for lambda in partitions_of(5).iter() {
            let expected =
                u64::from(lambda.contains(&mu) && (0..lambda.len()).all(|i| mu.part(i) >= lambda.part(i + 1)));
            assert_eq!(lr_count(lambda, &mu, &p(&[2])), expected, "{lambda:?}");
        }
    }
}
