use std::collections::HashMap;

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::expectation::SimulationReport;
use super::histogram::{flip_delta, gray};
use crate::graph::{CutAssignment, Graph};
use crate::parity::VertexVector;
use crate::{Error, Result, Scalar};

/// Classes at least this common (as a fraction of `2^n`) are sampled by
/// rejection; rarer ones are listed once and sampled uniformly.
const REJECTION_FLOOR: f64 = 1.0 / 1024.0;

/// Draws `count` i.i.d. cuts: a cut value `j` from the report's distribution,
/// then a uniform assignment among those cutting exactly `j` edges.
pub fn sample_cuts<S: Scalar>(
    graph: &Graph,
    report: &SimulationReport<S>,
    count: usize,
    seed: u64,
) -> Result<Vec<CutAssignment>> {
    let n = graph.n();
    if report.n != n || report.m != graph.m() {
        return Err(Error::InvalidArgument("report does not belong to this graph".into()));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    if n >= 63 {
        return Err(Error::InvalidArgument("sampling needs n < 63".into()));
    }
    let weights: Vec<f64> = report.distribution.iter().map(|p| p.to_f64_lossy()).collect();
    let classes = WeightedIndex::new(&weights)
        .map_err(|e| Error::Degenerate(format!("distribution cannot be sampled: {e}")))?;
    let total = (1u64 << n) as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut listed: HashMap<usize, Vec<u64>> = HashMap::new();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let j = classes.sample(&mut rng);
        let frequency = report.histogram.counts.get(j).copied().unwrap_or(0) as f64 / total;
        let mask = if frequency >= REJECTION_FLOOR {
            loop {
                let x = rng.gen::<u64>() & ((1u64 << n) - 1);
                if graph.cut_size_mask(x) == j {
                    break x;
                }
            }
        } else {
            let class = listed.entry(j).or_insert_with(|| assignments_with_cut(graph, j));
            if class.is_empty() {
                return Err(Error::Degenerate(format!("no assignment cuts {j} edges")));
            }
            class[rng.gen_range(0..class.len())]
        };
        out.push(CutAssignment::unweighted(graph, VertexVector::from_u64(n, mask)));
    }
    Ok(out)
}

/// Every mask with cut value `j`, ascending.
fn assignments_with_cut(graph: &Graph, j: usize) -> Vec<u64> {
    let n = graph.n();
    if n == 0 {
        return if j == 0 { vec![0] } else { Vec::new() };
    }
    let nbr = graph.neighbor_masks();
    let mut out = Vec::new();
    let mut mask = 0u64;
    let mut cut = 0i64;
    for t in 0..1u64 << n {
        if t > 0 {
            let v = t.trailing_zeros() as usize;
            cut += flip_delta(&nbr, mask, v);
            mask ^= 1 << v;
        }
        debug_assert_eq!(mask, gray(t));
        if cut as usize == j {
            out.push(mask);
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec};
    use crate::simulate::dqi_expectation_exact;

    #[test]
    fn support_is_respected() {
        let c3 = generate(&GeneratorSpec::Cycle(3)).unwrap();
        let r = dqi_expectation_exact(&c3, &[3.0f64, -1.0]).unwrap();
        for seed in 0..5 {
            let s = sample_cuts(&c3, &r, 200, seed).unwrap();
            assert!(s.iter().all(|c| c.value == 2.into()));
        }
    }

    #[test]
    fn uniform_mean_is_half() {
        let pet = generate(&GeneratorSpec::Petersen).unwrap();
        let r = dqi_expectation_exact(&pet, &[1.0f64]).unwrap();
        let s = sample_cuts(&pet, &r, 10_000, 11).unwrap();
        let mean = s.iter().map(|c| pet.cut_size(&c.sides) as f64).sum::<f64>() / 1e4;
        let var: f64 = r
            .distribution
            .iter()
            .enumerate()
            .map(|(j, p)| p * (j as f64 - 7.5).powi(2))
            .sum();
        assert!((mean - 7.5).abs() <= 3.0 * (var / 1e4).sqrt(), "mean {mean}");
    }

    #[test]
    fn deterministic_per_seed() {
        let c6 = generate(&GeneratorSpec::Cycle(6)).unwrap();
        let r = dqi_expectation_exact(&c6, &[1.0f64, -0.3, 0.1]).unwrap();
        let a = sample_cuts(&c6, &r, 50, 7).unwrap();
        let b = sample_cuts(&c6, &r, 50, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_cuts(&c6, &r, 50, 8).unwrap());
    }

    #[test]
    fn rare_classes_use_the_listing() {
        let c20 = generate(&GeneratorSpec::Cycle(20)).unwrap();
        let alternating = 0xAAAAAu64;
        assert_eq!(assignments_with_cut(&c20, 20), vec![0x55555, alternating]);
        // N_18 / 2^20 is below the rejection floor
        let r = dqi_expectation_exact(&c20, &[0.0f64, -1.0]).unwrap();
        let s = sample_cuts(&c20, &r, 2000, 3).unwrap();
        assert!(s.iter().any(|c| c.value == 18.into()));
        for c in &s {
            assert_eq!(c.value, (c20.cut_size(&c.sides) as i64).into());
        }
    }
}
