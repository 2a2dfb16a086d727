//! Deterministic fixture generators and their `name:params` text form.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorSpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    /// Two hubs joined by three internally disjoint paths of these lengths.
    Theta(usize, usize, usize),
    /// Random tree on `n` vertices plus `chords` random non-edges.
    TreePlusChords {
        n: usize,
        chords: usize,
        seed: Option<u64>,
    },
    Petersen,
    /// Random spanning tree plus random extra edges up to `m` edges.
    RandomConnected {
        n: usize,
        m: usize,
        seed: Option<u64>,
    },
}

impl GeneratorSpec {
    /// Fills in a missing seed; specs that carry one keep it.
    pub fn with_default_seed(&self, seed: u64) -> Self {
        match self.clone() {
            GeneratorSpec::TreePlusChords { n, chords, seed: None } => GeneratorSpec::TreePlusChords {
                n,
                chords,
                seed: Some(seed),
            },
            GeneratorSpec::RandomConnected { n, m, seed: None } => GeneratorSpec::RandomConnected {
                n,
                m,
                seed: Some(seed),
            },
            other => other,
        }
    }
}

/// Builds the graph for `spec`. Random families without a seed use seed 0.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    let bad = |msg: String| Err(Error::InvalidGenerator(msg));
    match *spec {
        GeneratorSpec::Cycle(n) => {
            if n < 3 {
                return bad(format!("cycle needs n >= 3, got {n}"));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        GeneratorSpec::Path(n) => {
            if n < 1 {
                return bad("path needs n >= 1".into());
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        GeneratorSpec::Complete(n) => {
            if n < 1 {
                return bad("complete needs n >= 1".into());
            }
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        GeneratorSpec::Theta(a, b, c) => {
            let lens = [a, b, c];
            if lens.contains(&0) {
                return bad("theta path lengths must be >= 1".into());
            }
            if lens.iter().filter(|&&x| x == 1).count() > 1 {
                return bad("theta allows at most one direct hub edge".into());
            }
            let mut n = 2;
            let mut edges = Vec::with_capacity(a + b + c);
            for len in lens {
                let mut prev = 0;
                for _ in 1..len {
                    edges.push((prev, n));
                    prev = n;
                    n += 1;
                }
                edges.push((prev, 1));
            }
            Graph::new(n, edges)
        }
        GeneratorSpec::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::new(10, outer.chain(spokes).chain(inner))
        }
        GeneratorSpec::TreePlusChords { n, chords, seed } => {
            if n < 1 {
                return bad("tree_plus_chords needs n >= 1".into());
            }
            let max_chords = n * (n - 1) / 2 - (n - 1);
            if chords > max_chords {
                return bad(format!("{chords} chords exceed the {max_chords} non-tree pairs on {n} vertices"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
            Ok(random_tree_plus(n, chords, &mut rng))
        }
        GeneratorSpec::RandomConnected { n, m, seed } => {
            if n < 1 {
                return bad("random_connected needs n >= 1".into());
            }
            if m + 1 < n {
                return bad(format!("random_connected needs m >= n - 1, got n={n}, m={m}"));
            }
            if m > n * (n - 1) / 2 {
                return bad(format!("m={m} exceeds the {} pairs on {n} vertices", n * (n - 1) / 2));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
            Ok(random_tree_plus(n, m + 1 - n, &mut rng))
        }
    }
}

fn random_tree_plus(n: usize, extra: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges = Vec::with_capacity(n - 1 + extra);
    let mut adjacent = vec![false; n * n];
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (labels[i], labels[j]);
        edges.push((u.min(v), u.max(v)));
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
    }
    if extra > 0 {
        let free: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !adjacent[u * n + v])
            .collect();
        let mut picked = sample(rng, free.len(), extra).into_vec();
        picked.sort_unstable();
        edges.extend(picked.into_iter().map(|i| free[i]));
    }
    Graph::new(n, edges).expect("generated graph is simple")
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let with_seed = |f: &mut fmt::Formatter<'_>, seed: &Option<u64>| match seed {
            Some(s) => write!(f, ",{s}"),
            None => Ok(()),
        };
        match self {
            GeneratorSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GeneratorSpec::Path(n) => write!(f, "path:{n}"),
            GeneratorSpec::Complete(n) => write!(f, "complete:{n}"),
            GeneratorSpec::Theta(a, b, c) => write!(f, "theta:{a},{b},{c}"),
            GeneratorSpec::Petersen => write!(f, "petersen"),
            GeneratorSpec::TreePlusChords { n, chords, seed } => {
                write!(f, "tree_plus_chords:{n},{chords}")?;
                with_seed(f, seed)
            }
            GeneratorSpec::RandomConnected { n, m, seed } => {
                write!(f, "random_connected:{n},{m}")?;
                with_seed(f, seed)
            }
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<u64> = if params.trim().is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::InvalidGenerator(format!("bad parameter {p:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        let arity = |lo: usize, hi: usize| {
            if nums.len() < lo || nums.len() > hi {
                Err(Error::InvalidGenerator(format!(
                    "{name} takes {lo}..={hi} parameters, got {}",
                    nums.len()
                )))
            } else {
                Ok(())
            }
        };
        let u = |i: usize| nums[i] as usize;
        match name.trim() {
            "cycle" => arity(1, 1).map(|_| GeneratorSpec::Cycle(u(0))),
            "path" => arity(1, 1).map(|_| GeneratorSpec::Path(u(0))),
            "complete" => arity(1, 1).map(|_| GeneratorSpec::Complete(u(0))),
            "theta" => arity(3, 3).map(|_| GeneratorSpec::Theta(u(0), u(1), u(2))),
            "petersen" => arity(0, 0).map(|_| GeneratorSpec::Petersen),
            "tree_plus_chords" => arity(2, 3).map(|_| GeneratorSpec::TreePlusChords {
                n: u(0),
                chords: u(1),
                seed: nums.get(2).copied(),
            }),
            "random_connected" => arity(2, 3).map(|_| GeneratorSpec::RandomConnected {
                n: u(0),
                m: u(1),
                seed: nums.get(2).copied(),
            }),
            other => Err(Error::InvalidGenerator(format!("unknown generator {other:?}"))),
        }
    }
}
