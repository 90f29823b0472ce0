//! Graph families used by the benchmark and the verification corpus.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::random_graph;

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("complete graph is simple")
}

/// Two poles (vertices 1 and 2) joined by `n - 2` paths of length two.
/// `theta_graph(5)` is the classic non-Hamiltonian theta graph.
pub fn theta_graph(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("theta graph needs n >= 4, got {n}")));
    }
    let mut edges = Vec::new();
    for mid in 2..n {
        edges.push((0, mid));
        edges.push((mid, 1));
    }
    Graph::new(n, &edges)
}

/// Uniform-ish random `degree`-regular graph from the pairing model,
/// resampling until the pairing is simple.
pub fn random_regular(n: usize, degree: usize, seed: u64) -> Result<Graph> {
    if degree >= n || (n * degree) % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "no simple {degree}-regular graph on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, degree)).collect();
    'attempt: for _ in 0..10_000 {
        points.shuffle(&mut rng);
        let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(points.len() / 2);
        for chunk in points.chunks(2) {
            let (u, v) = (chunk[0].min(chunk[1]), chunk[0].max(chunk[1]));
            if u == v || pairs.contains(&(u, v)) {
                continue 'attempt;
            }
            pairs.push((u, v));
        }
        pairs.sort_unstable();
        return Graph::new(n, &pairs);
    }
    Err(Error::Internal(format!(
        "no simple {degree}-regular pairing on {n} vertices after 10000 attempts"
    )))
}

/// Parses a generator spec:
/// `complete:N`, `theta:N`, `random:N:P:SEED`, `regular:N:D:SEED`.
pub fn from_spec(spec: &str) -> Result<Graph> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = Error::InvalidArgument;
    let num = |s: &str| -> Result<u64> { s.parse().map_err(|_| bad(format!("bad number {s:?} in generator spec"))) };
    match parts.as_slice() {
        ["complete", n] => Ok(complete_graph(num(n)? as usize)),
        ["theta", n] => theta_graph(num(n)? as usize),
        ["random", n, p, seed] => {
            let p: f64 = p.parse().map_err(|_| bad(format!("bad probability {p:?}")))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(bad(format!("probability {p} outside [0, 1]")));
            }
            Ok(random_graph(num(n)? as usize, p, num(seed)?))
        }
        ["regular", n, d, seed] => random_regular(num(n)? as usize, num(d)? as usize, num(seed)?),
        _ => Err(bad(format!(
            "unknown generator {spec:?} (expected complete:N, theta:N, random:N:P:SEED or regular:N:D:SEED)"
        ))),
    }
}
