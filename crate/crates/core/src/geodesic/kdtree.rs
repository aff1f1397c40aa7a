//! Static kd-tree over real coordinate vectors for k-nearest queries.

use alloc::vec::Vec;

pub(crate) type Key = [f64; 6];

pub(crate) struct KdTree {
    pts: Vec<Key>,
    dim: usize,
    // implicit balanced tree: the median of every index range sits at its middle
    order: Vec<usize>,
}

fn dist2(a: &Key, b: &Key, dim: usize) -> f64 {
    (0..dim).map(|j| (a[j] - b[j]) * (a[j] - b[j])).sum()
}

impl KdTree {
    pub(crate) fn new(pts: Vec<Key>, dim: usize) -> Self {
        let mut order: Vec<usize> = (0..pts.len()).collect();
        build(&pts, &mut order, 0, dim);
        Self { pts, dim, order }
    }

    pub(crate) fn point(&self, i: usize) -> &Key {
        &self.pts[i]
    }

    /// The `k` nearest stored points as `(squared distance, index)`, sorted
    /// by distance then index; `skip` excludes one index.
    pub(crate) fn nearest(&self, q: &Key, k: usize, skip: Option<usize>) -> Vec<(f64, usize)> {
        let mut best = Vec::with_capacity(k + 1);
        if k > 0 {
            self.search(0, self.order.len(), 0, q, k, skip, &mut best);
        }
        best
    }

    #[allow(clippy::too_many_arguments)]
    fn search(&self, lo: usize, hi: usize, depth: usize, q: &Key, k: usize, skip: Option<usize>, best: &mut Vec<(f64, usize)>) {
        if lo >= hi {
            return;
        }
        let mid = (lo + hi) / 2;
        let i = self.order[mid];
        if skip != Some(i) {
            let cand = (dist2(q, &self.pts[i], self.dim), i);
            let pos = best.partition_point(|b: &(f64, usize)| b.0 < cand.0 || (b.0 == cand.0 && b.1 < cand.1));
            if pos < k {
                best.insert(pos, cand);
                best.truncate(k);
            }
        }
        let axis = depth % self.dim;
        let diff = q[axis] - self.pts[i][axis];
        let (first, second) = if diff < 0.0 { ((lo, mid), (mid + 1, hi)) } else { ((mid + 1, hi), (lo, mid)) };
        self.search(first.0, first.1, depth + 1, q, k, skip, best);
        if best.len() < k || diff * diff <= best[best.len() - 1].0 {
            self.search(second.0, second.1, depth + 1, q, k, skip, best);
        }
    }
}

fn build(pts: &[Key], order: &mut [usize], depth: usize, dim: usize) {
    if order.len() <= 1 {
        return;
    }
    let axis = depth % dim;
    let mid = order.len() / 2;
    order.select_nth_unstable_by(mid, |&a, &b| pts[a][axis].total_cmp(&pts[b][axis]).then(a.cmp(&b)));
    let (left, right) = order.split_at_mut(mid);
    build(pts, left, depth + 1, dim);
    build(pts, &mut right[1..], depth + 1, dim);
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let pts: Vec<Key> = (0..300)
            .map(|_| {
                let mut k = [0.0; 6];
                for v in k.iter_mut().take(3) {
                    *v = rng.gen_range(-1.0..1.0);
                }
                k
            })
            .collect();
        let tree = KdTree::new(pts.clone(), 3);
        for qi in 0..20 {
            let q = pts[qi];
            let got = tree.nearest(&q, 7, Some(qi));
            let mut all: Vec<(f64, usize)> =
                (0..pts.len()).filter(|&j| j != qi).map(|j| (dist2(&q, &pts[j], 3), j)).collect();
            all.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            assert_eq!(got, all[..7].to_vec());
        }
    }
}
