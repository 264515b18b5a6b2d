//! Littlewood–Richardson coefficients by counting integer hives.
//!
//! A hive of side `k` labels the vertices `(a, b)`, `0 <= b <= a <= k`, of a
//! triangular grid. For `c^λ_{μ,ν}` the left edge carries the partial sums of
//! `μ` (top to bottom), the bottom edge continues with the partial sums of
//! `ν` (left to right), and the right edge carries the partial sums of `λ`.
//! Every rhombus formed by two adjacent unit triangles must have label sum at
//! its obtuse vertices at least the sum at its acute vertices.

use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Vertex(usize, usize);

/// `obtuse.0 + obtuse.1 >= acute.0 + acute.1`.
#[derive(Clone, Copy, Debug)]
struct Rhombus {
    obtuse: [Vertex; 2],
    acute: [Vertex; 2],
}

fn rhombi(k: usize) -> Vec<Rhombus> {
    let mut out = Vec::new();
    for a in 0..k {
        for b in 0..=a {
            // shared edge (a,b)-(a+1,b+1)
            out.push(Rhombus {
                obtuse: [Vertex(a, b), Vertex(a + 1, b + 1)],
                acute: [Vertex(a + 1, b), Vertex(a, b + 1)],
            });
            // shared edge (a+1,b)-(a+1,b+1)
            if a + 1 < k {
                out.push(Rhombus {
                    obtuse: [Vertex(a + 1, b), Vertex(a + 1, b + 1)],
                    acute: [Vertex(a, b), Vertex(a + 2, b + 1)],
                });
            }
            // shared edge (a,b)-(a+1,b)
            if b > 0 {
                out.push(Rhombus {
                    obtuse: [Vertex(a, b), Vertex(a + 1, b)],
                    acute: [Vertex(a, b - 1), Vertex(a + 1, b + 1)],
                });
            }
        }
    }
    // the first kind needs (a, b+1) to exist
    out.retain(|r| r.obtuse.iter().chain(&r.acute).all(|v| v.1 <= v.0 && v.0 <= k));
    out
}

struct HiveCounter {
    k: usize,
    labels: Vec<Vec<i64>>,
    interior: Vec<Vertex>,
    /// Rhombi whose latest-assigned vertex is `interior[i]`.
    closing: Vec<Vec<Rhombus>>,
}

impl HiveCounter {
    fn order(&self, v: Vertex) -> Option<usize> {
        self.interior.iter().position(|&w| w == v)
    }

    fn label(&self, v: Vertex) -> i64 {
        self.labels[v.0][v.1]
    }

    fn count(&mut self, idx: usize) -> u64 {
        if idx == self.interior.len() {
            return 1;
        }
        let v = self.interior[idx];
        let (mut lo, mut hi) = (i64::MIN, i64::MAX);
        for r in &self.closing[idx] {
            // signed contribution of every other vertex, v contributes ±1
            let mut rest = 0i64;
            let mut coeff = 0i64;
            for w in r.obtuse {
                if w == v {
                    coeff += 1;
                } else {
                    rest += self.label(w);
                }
            }
            for w in r.acute {
                if w == v {
                    coeff -= 1;
                } else {
                    rest -= self.label(w);
                }
            }
            // coeff * x + rest >= 0
            match coeff {
                1 => lo = lo.max(-rest),
                -1 => hi = hi.min(rest),
                _ => unreachable!("a vertex appears once per rhombus"),
            }
        }
        assert!(lo > i64::MIN && hi < i64::MAX, "hive vertex left unbounded");
        let mut total = 0;
        for x in lo..=hi {
            self.labels[v.0][v.1] = x;
            total += self.count(idx + 1);
        }
        total
    }
}

/// `c^λ_{μ,ν}` as the number of integer hives with boundary `(λ, μ, ν)`.
pub fn hive_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let k = lambda.len().max(mu.len()).max(nu.len());
    if k == 0 {
        return 1;
    }
    let mut labels: Vec<Vec<i64>> = (0..=k).map(|a| vec![0; a + 1]).collect();
    let partial = |p: &Partition, t: usize| (0..t).map(|i| p.part(i) as i64).sum::<i64>();
    for (a, row) in labels.iter_mut().enumerate() {
        row[0] = partial(mu, a);
        row[a] = partial(lambda, a);
    }
    for (b, v) in labels[k].iter_mut().enumerate() {
        *v = mu.size() as i64 + partial(nu, b);
    }
    let interior: Vec<Vertex> = (2..k).flat_map(|a| (1..a).map(move |b| Vertex(a, b))).collect();
    let mut counter = HiveCounter {
        k,
        labels,
        interior,
        closing: Vec::new(),
    };
    counter.closing = vec![Vec::new(); counter.interior.len()];
    for r in rhombi(counter.k) {
        let latest = r.obtuse.iter().chain(&r.acute).filter_map(|&v| counter.order(v)).max();
        match latest {
            Some(i) => counter.closing[i].push(r),
            None => {
                let sum = |vs: [Vertex; 2]| vs.iter().map(|&v| counter.label(v)).sum::<i64>();
                if sum(r.obtuse) < sum(r.acute) {
                    return 0;
                }
            }
        }
    }
    counter.count(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rhombus_count() {
        // 3 rhombi per interior edge of a side-k triangle: 3·k(k−1)/2
        for k in 1..6 {
            assert_eq!(rhombi(k).len(), 3 * k * (k - 1) / 2);
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(hive_count(&p(&[2, 2, 1]), &p(&[2, 1]), &p(&[2])), 1);
        assert_eq!(hive_count(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(hive_count(&p(&[2]), &p(&[1]), &p(&[1, 1])), 0);
        assert_eq!(hive_count(&p(&[3, 1]), &p(&[3, 1]), &Partition::empty()), 1);
        assert_eq!(
            hive_count(&Partition::empty(), &Partition::empty(), &Partition::empty()),
            1
        );
    }
}
