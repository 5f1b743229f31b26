use serde::{Deserialize, Serialize};

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub min: usize,
    pub max: usize,
    pub mean: f64,
}

impl Summary {
    fn of(values: impl Iterator<Item = usize>) -> Option<Summary> {
        let mut count = 0usize;
        let mut sum = 0usize;
        let mut min = usize::MAX;
        let mut max = 0;
        for v in values {
            count += 1;
            sum += v;
            min = min.min(v);
            max = max.max(v);
        }
        (count > 0).then(|| Summary {
            min,
            max,
            mean: sum as f64 / count as f64,
        })
    }
}

/// Degrees `d(x)` over vertices and codegrees `d(x, y)` over unordered pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub degree: Summary,
    /// `None` for a single vertex.
    pub codegree: Option<Summary>,
    pub windows: Option<DensityWindows>,
}

/// How the sample sits against the windows `d(x) = (1 ± ε)np` and
/// `d(x, y) = (1 ± ε)np²`. Finite samples may fall outside; this is a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityWindows {
    pub p: f64,
    pub epsilon: f64,
    pub np: f64,
    pub np2: f64,
    pub degree_max_relative_deviation: f64,
    pub codegree_max_relative_deviation: f64,
    pub degree_violations: usize,
    pub codegree_violations: usize,
    pub degree_within: bool,
    pub codegree_within: bool,
}

fn within(value: usize, centre: f64, eps: f64) -> bool {
    let v = value as f64;
    (1.0 - eps) * centre <= v && v <= (1.0 + eps) * centre
}

fn rel_dev(value: usize, centre: f64) -> f64 {
    if centre > 0.0 {
        (value as f64 - centre).abs() / centre
    } else if value == 0 {
        0.0
    } else {
        f64::INFINITY
    }
}

/// Degree and codegree summary; with `density = Some((p, ε))` also the
/// window report against `np` and `np²`.
pub fn degree_codegree_stats(g: &Graph, density: Option<(f64, f64)>) -> DegreeStats {
    let n = g.vertex_count();
    let degrees: Vec<usize> = (0..n).map(|x| g.degree(x)).collect();
    let mut codegrees = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            codegrees.push(g.codegree(x, y));
        }
    }
    let windows = density.map(|(p, eps)| {
        let np = n as f64 * p;
        let np2 = np * p;
        DensityWindows {
            p,
            epsilon: eps,
            np,
            np2,
            degree_max_relative_deviation: degrees.iter().map(|&d| rel_dev(d, np)).fold(0.0, f64::max),
            codegree_max_relative_deviation: codegrees
                .iter()
                .map(|&d| rel_dev(d, np2))
                .fold(0.0, f64::max),
            degree_violations: degrees.iter().filter(|&&d| !within(d, np, eps)).count(),
            codegree_violations: codegrees.iter().filter(|&&d| !within(d, np2, eps)).count(),
            degree_within: degrees.iter().all(|&d| within(d, np, eps)),
            codegree_within: codegrees.iter().all(|&d| within(d, np2, eps)),
        }
    });
    DegreeStats {
        degree: Summary::of(degrees.iter().copied()).expect("graphs have at least one vertex"),
        codegree: Summary::of(codegrees.iter().copied()),
        windows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, cycle};
    use crate::graph::{sample_gnp, GnpSpec};

    #[test]
    fn complete_and_cycle() {
        let s = degree_codegree_stats(&complete(5), None);
        assert_eq!((s.degree.min, s.degree.max), (4, 4));
        let c = s.codegree.unwrap();
        assert_eq!((c.min, c.max), (3, 3));

        let s = degree_codegree_stats(&cycle(5), None);
        assert_eq!((s.degree.min, s.degree.max), (2, 2));
        let c = s.codegree.unwrap();
        assert_eq!((c.min, c.max), (0, 1));
    }

    #[test]
    fn gnp_report_matches_quadratic_recount() {
        let g = sample_gnp(GnpSpec::new(200, 0.3, 1).unwrap()).unwrap();
        let s = degree_codegree_stats(&g, Some((0.3, 0.02)));
        let w = s.windows.unwrap();
        assert!((w.np - 60.0).abs() < 1e-9 && (w.np2 - 18.0).abs() < 1e-9);

        // Independent recount straight from adjacency queries.
        let n = 200;
        let deg: Vec<usize> = (0..n).map(|x| (0..n).filter(|&y| g.has_edge(x, y)).count()).collect();
        let mut co = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                co.push((0..n).filter(|&z| g.has_edge(x, z) && g.has_edge(y, z)).count());
            }
        }
        assert_eq!(s.degree.min, *deg.iter().min().unwrap());
        assert_eq!(s.degree.max, *deg.iter().max().unwrap());
        let cs = s.codegree.unwrap();
        assert_eq!(cs.min, *co.iter().min().unwrap());
        assert_eq!(cs.max, *co.iter().max().unwrap());
        let dv = deg.iter().filter(|&&d| !(58.8..=61.2).contains(&(d as f64))).count();
        assert_eq!(w.degree_violations, dv);
        let cv = co.iter().filter(|&&d| !(17.64..=18.36).contains(&(d as f64))).count();
        assert_eq!(w.codegree_violations, cv);
    }
}
