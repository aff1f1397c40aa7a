//! Boundary-graded point lattice with k-nearest edges weighted by upper
//! κ-lengths.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::kdtree::{Key, KdTree};
use super::SolverConfig;
use crate::error::Result;
use crate::metric::{segment_length_gl6, MetricField, Side};
use crate::point::Point;

pub struct Lattice {
    pub(crate) nodes: Vec<Point>,
    pub(crate) adj: Vec<Vec<(usize, f64)>>,
    pub(crate) tree: KdTree,
    /// Spacing floor actually used (larger than requested after coarsening).
    pub h_min: f64,
    pub coarsened: bool,
}

impl Lattice {
    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }

    pub fn neighbors(&self, i: usize) -> &[(usize, f64)] {
        &self.adj[i]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }
}

pub(crate) fn key_of(p: &Point) -> Key {
    let mut k = [0.0; 6];
    for (j, v) in k.iter_mut().enumerate().take(2 * p.dim()) {
        *v = p.real(j);
    }
    k
}

/// Anchors of the recursively refined cell grid. A cell of side `h` is
/// split in `2^d` children while the target spacing `max(h_min, β·δ)` can
/// drop below `h/2` somewhere in it (δ is 1-Lipschitz).
fn grid_points(field: &MetricField, h0: f64, beta: f64, h_min: f64, cap: usize) -> Option<Vec<Point>> {
    let domain = field.domain();
    let d = 2 * domain.dim();
    let bbox = domain.bbox();
    let levels = if h_min < h0 { libm::ceil(libm::log2(h0 / h_min) - 1e-9) as u32 } else { 0 };
    let unit = h0 / (1u64 << levels) as f64;
    let to_point = |idx: &[i64]| {
        let reals: Vec<f64> = (0..d).map(|j| bbox[j].0 + idx[j] as f64 * unit).collect();
        Point::from_reals(&reals).expect("lattice dimension")
    };
    let inside = |idx: &[i64]| domain.contains_unchecked(&to_point(idx));

    let mut stack: Vec<(Vec<i64>, u32)> = Vec::new();
    let steps: Vec<i64> = (0..d).map(|j| libm::ceil((bbox[j].1 - bbox[j].0) / h0) as i64).collect();
    let mut idx = alloc::vec![0i64; d];
    let top = 1i64 << levels;
    loop {
        stack.push((idx.iter().map(|v| v * top).collect(), 0));
        let mut j = 0;
        while j < d {
            idx[j] += 1;
            if idx[j] <= steps[j] {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
        if j == d {
            break;
        }
    }

    let mut keep: BTreeSet<Vec<i64>> = BTreeSet::new();
    while let Some((anchor, level)) = stack.pop() {
        if inside(&anchor) {
            keep.insert(anchor.clone());
            if keep.len() > cap {
                return None;
            }
        }
        if level >= levels {
            continue;
        }
        let h = h0 / (1u64 << level) as f64;
        let span = 1i64 << (levels - level);
        let half = span / 2;
        // centre of the cell decides refinement
        let centre: Vec<i64> = anchor.iter().map(|v| v + half).collect();
        let c = to_point(&centre);
        let refine = if domain.contains_unchecked(&c) {
            let delta = domain.boundary_distance(&c).unwrap_or(0.0);
            let radius = 0.5 * h * libm::sqrt(d as f64);
            h_min.max(beta * (delta - radius)) <= 0.5 * h
        } else {
            // straddles the boundary if any corner is inside
            (0..1usize << d).any(|mask| {
                let corner: Vec<i64> =
                    anchor.iter().enumerate().map(|(j, v)| v + if mask >> j & 1 == 1 { span } else { 0 }).collect();
                inside(&corner)
            })
        };
        if !refine {
            continue;
        }
        for mask in 0..1usize << d {
            let child: Vec<i64> =
                anchor.iter().enumerate().map(|(j, v)| v + if mask >> j & 1 == 1 { half } else { 0 }).collect();
            stack.push((child, level + 1));
        }
    }
    Some(keep.iter().map(|i| to_point(i)).collect())
}

/// Builds the lattice; when the node cap is exceeded the spacing floor is
/// doubled until it fits and the result is flagged as coarsened.
pub fn build_lattice(field: &MetricField, config: &SolverConfig) -> Result<Lattice> {
    config.validate()?;
    let mut h_min = config.h_min;
    let mut h0 = config.h0;
    let mut coarsened = false;
    let nodes = loop {
        if let Some(n) = grid_points(field, h0, config.beta, h_min, config.max_nodes) {
            break n;
        }
        coarsened = true;
        if h_min < h0 {
            h_min *= 2.0;
        } else {
            h0 *= 1.5;
            h_min = h0;
        }
    };
    let d = 2 * field.domain().dim();
    let tree = KdTree::new(nodes.iter().map(key_of).collect(), d);
    let mut edges: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for i in 0..nodes.len() {
        for (_, j) in tree.nearest(tree.point(i), config.k_neighbors, Some(i)) {
            let e = (i.min(j), i.max(j));
            if edges.contains_key(&e) {
                continue;
            }
            if let Some(w) = segment_length_gl6(field, &nodes[e.0], &nodes[e.1], Side::Upper) {
                edges.insert(e, w);
            }
        }
    }
    let mut adj = alloc::vec![Vec::new(); nodes.len()];
    for (&(i, j), &w) in &edges {
        adj[i].push((j, w));
        adj[j].push((i, w));
    }
    Ok(Lattice { nodes, adj, tree, h_min, coarsened })
}
