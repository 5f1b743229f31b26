//! Independent recomputations shared by the integration suites. Nothing
//! here calls into the library beyond reading graphs and cuts.

#![allow(dead_code)]

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;

use trifree_core::cut::{Cut, ParamConfig};
use trifree_core::Graph;

fn r(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap()
}

fn i(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// X, T, Q_v, Q_e by direct double loops over an adjacency matrix.
pub struct NaiveProfile {
    pub x: Vec<u32>,
    pub t: Vec<u32>,
    pub q_v: Vec<(u32, u32)>,
    pub q_e: Vec<(u32, u32)>,
}

pub fn naive_profile(g: &Graph, pi: &Cut, cfg: &ParamConfig, p: f64) -> NaiveProfile {
    let n = g.vertex_count();
    let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let in_a: Vec<bool> = (0..n).map(|v| pi.in_a(v)).collect();
    let d_b = |x: usize| (0..n).filter(|&y| !in_a[y] && adj[x][y]).count();
    let d_b2 = |x: usize, y: usize| (0..n).filter(|&z| !in_a[z] && adj[x][z] && adj[y][z]).count();
    let (eps, alpha, pr) = (r(cfg.epsilon()), r(cfg.alpha()), r(p));
    let np = i(n) * pr.clone();
    let np2 = np.clone() * pr;
    let one = i(1);
    let x_thr = (one.clone() - i(2) * eps.clone()) * np.clone() / i(4);
    let t_thr = (one - eps) * np / i(2);
    let in_x = |v: usize| in_a[v] && i(d_b(v)) < x_thr;
    let in_t = |v: usize| in_a[v] && i(d_b(v)) < t_thr;
    let mut out = NaiveProfile { x: vec![], t: vec![], q_v: vec![], q_e: vec![] };
    for v in 0..n {
        if in_x(v) {
            out.x.push(v as u32);
        }
        if in_t(v) {
            out.t.push(v as u32);
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if !(in_a[x] && in_a[y]) {
                continue;
            }
            if in_x(x) || in_x(y) {
                out.q_v.push((x as u32, y as u32));
                continue;
            }
            let divisor = match (in_t(x), in_t(y)) {
                (false, false) => 2,
                (true, true) => 8,
                _ => 4,
            };
            if i(d_b2(x, y)) < alpha.clone() * np2.clone() / i(divisor) {
                out.q_e.push((x as u32, y as u32));
            }
        }
    }
    out
}

/// Edmonds–Karp on a dense capacity matrix for the degree-capped network:
/// source → left (cap), left → right (1 per pair), right → sink (cap).
pub fn naive_bounded_flow(left: &[u32], right: &[u32], pairs: &[(u32, u32)], cap: usize) -> usize {
    let nl = left.len();
    let nodes = 2 + nl + right.len();
    let (s, t) = (nodes - 2, nodes - 1);
    let mut c = vec![vec![0i64; nodes]; nodes];
    let li = |v: u32| left.iter().position(|&w| w == v).unwrap();
    let ri = |v: u32| nl + right.iter().position(|&w| w == v).unwrap();
    for k in 0..nl {
        c[s][k] = cap as i64;
    }
    for k in 0..right.len() {
        c[nl + k][t] = cap as i64;
    }
    for &(x, y) in pairs {
        c[li(x)][ri(y)] += 1;
    }
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; nodes];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..nodes {
                if prev[v] == usize::MAX && c[u][v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[t] == usize::MAX {
            return flow;
        }
        let mut v = t;
        while v != s {
            let u = prev[v];
            c[u][v] -= 1;
            c[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}
