//! Test oracles. They only use the public trigraph API (construction,
//! `edge`, `contract`, `vertices`) and never the solver, canonical forms or
//! graph6 code they are used to check.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use twinwidth::{EdgeColor, Trigraph, VertexLabel};

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Trigraph {
    Trigraph::from_graph(n, edges).unwrap()
}

/// Graph on `n` vertices whose edges are the set bits of `bits` over
/// [`pairs`] order.
pub fn labeled(n: usize, bits: u64) -> Trigraph {
    let edges: Vec<_> = pairs(n).into_iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, p)| p).collect();
    graph(n, &edges)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Trigraph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    graph(n, &edges)
}

/// A random graph followed by a few random contractions.
pub fn random_trigraph<R: Rng>(rng: &mut R, max_order: usize) -> Trigraph {
    let n = rng.gen_range(2..=max_order);
    let p = rng.gen_range(0.2..0.8);
    let mut g = random_graph(rng, n, p);
    let merges = rng.gen_range(0..n.saturating_sub(2).max(1));
    for _ in 0..merges {
        let vs: Vec<_> = g.vertices().collect();
        let pick: Vec<_> = vs.choose_multiple(rng, 2).copied().collect();
        g = g.contract(pick[0], pick[1]).unwrap();
    }
    g
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Colored adjacency matrix over live vertices in label order.
pub fn matrix(g: &Trigraph) -> (Vec<VertexLabel>, Vec<Vec<Option<EdgeColor>>>) {
    let vs: Vec<VertexLabel> = g.vertices().collect();
    let m = vs.iter().map(|&u| vs.iter().map(|&v| if u == v { None } else { g.edge(u, v).unwrap() }).collect()).collect();
    (vs, m)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Color-preserving isomorphism by trying every bijection.
pub fn isomorphic(a: &Trigraph, b: &Trigraph) -> bool {
    let (_, ma) = matrix(a);
    let (_, mb) = matrix(b);
    let k = ma.len();
    if k != mb.len() {
        return false;
    }
    permutations(k).iter().any(|p| (0..k).all(|i| (0..k).all(|j| ma[i][j] == mb[p[i]][p[j]])))
}

/// Minimum over all relabelings of the (black, red) upper-triangle bits, as a
/// pair of integers. Feasible up to 7 or so vertices.
pub fn brute_canonical(g: &Trigraph) -> (usize, u64, u64) {
    let (_, m) = matrix(g);
    let k = m.len();
    let prs = pairs(k);
    permutations(k)
        .iter()
        .map(|p| {
            let (mut black, mut red) = (0u64, 0u64);
            for &(i, j) in &prs {
                black <<= 1;
                red <<= 1;
                match m[p[i]][p[j]] {
                    Some(EdgeColor::Black) => black |= 1,
                    Some(EdgeColor::Red) => red |= 1,
                    None => {}
                }
            }
            (k, black, red)
        })
        .min()
        .unwrap()
}

/// Merge by the textbook rule, working only from neighborhoods and colors.
pub fn contract_by_definition(g: &Trigraph, u: VertexLabel, v: VertexLabel) -> Vec<(VertexLabel, VertexLabel, EdgeColor)> {
    let w = u.union(v);
    let mut edges = Vec::new();
    for x in g.vertices().filter(|&x| x != u && x != v) {
        let cu = g.edge(u, x).unwrap();
        let cv = g.edge(v, x).unwrap();
        let merged = match (cu, cv) {
            (None, None) => None,
            (Some(EdgeColor::Black), Some(EdgeColor::Black)) => Some(EdgeColor::Black),
            _ => Some(EdgeColor::Red),
        };
        if let Some(c) = merged {
            edges.push(ordered(w, x, c));
        }
        for y in g.vertices().filter(|&y| y != u && y != v && x < y) {
            if let Some(c) = g.edge(x, y).unwrap() {
                edges.push((x, y, c));
            }
        }
    }
    edges.sort();
    edges
}

pub fn ordered(a: VertexLabel, b: VertexLabel, c: EdgeColor) -> (VertexLabel, VertexLabel, EdgeColor) {
    if a < b {
        (a, b, c)
    } else {
        (b, a, c)
    }
}

pub fn sorted_edges(g: &Trigraph) -> Vec<(VertexLabel, VertexLabel, EdgeColor)> {
    let mut e: Vec<_> = g.edges().map(|(a, b, c)| ordered(a, b, c)).collect();
    e.sort();
    e
}

pub fn max_red(g: &Trigraph) -> u32 {
    g.vertices().map(|v| g.red_degree(v).unwrap()).max().unwrap_or(0) as u32
}

/// Twin-width by trying every contraction sequence, with no pruning or
/// memoization.
pub fn brute_tww(g: &Trigraph) -> u32 {
    let here = max_red(g);
    let vs: Vec<_> = g.vertices().collect();
    if vs.len() <= 1 {
        return here;
    }
    let mut best = u32::MAX;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            best = best.min(brute_tww(&g.contract(vs[i], vs[j]).unwrap()));
        }
    }
    here.max(best)
}

/// Same search, but abandons any sequence that cannot beat the best found so
/// far. Still exhaustive, still no memoization.
pub fn bounded_tww(g: &Trigraph) -> u32 {
    fn go(g: &Trigraph, so_far: u32, best: &mut u32) {
        let width = so_far.max(max_red(g));
        if width >= *best {
            return;
        }
        let vs: Vec<_> = g.vertices().collect();
        if vs.len() <= 1 {
            *best = width;
            return;
        }
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                go(&g.contract(vs[i], vs[j]).unwrap(), width, best);
            }
        }
    }
    let mut best = g.vertex_count() as u32;
    go(g, 0, &mut best);
    best
}

/// graph6 written straight from the format definition.
pub fn graph6_oracle(n: usize, edges: &[(usize, usize)]) -> String {
    let mut bits: Vec<u8> = pairs(n)
        .into_iter()
        .map(|(i, j)| edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i)) as u8)
        .collect();
    while bits.len() % 6 != 0 {
        bits.push(0);
    }
    let mut s = String::new();
    s.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc * 2 + b);
        s.push((63 + v) as char);
    }
    s
}

pub fn is_tree(g: &Trigraph) -> bool {
    g.is_connected() && g.edge_count() + 1 == g.vertex_count()
}

/// Caterpillar test by definition: some path has every vertex within
/// distance one. Tries every simple path.
pub fn caterpillar_by_paths(g: &Trigraph) -> bool {
    if !is_tree(g) {
        return false;
    }
    let (_, m) = matrix(g);
    let k = m.len();
    let adj = |a: usize, b: usize| m[a][b].is_some();
    fn extend(path: &mut Vec<usize>, k: usize, adj: &dyn Fn(usize, usize) -> bool, ok: &dyn Fn(&[usize]) -> bool) -> bool {
        if ok(path) {
            return true;
        }
        let last = *path.last().unwrap();
        for next in 0..k {
            if adj(last, next) && !path.contains(&next) {
                path.push(next);
                if extend(path, k, adj, ok) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    let covered = |path: &[usize]| (0..k).all(|x| path.contains(&x) || path.iter().any(|&p| adj(p, x)));
    (0..k).any(|s| extend(&mut vec![s], k, &adj, &covered))
}
