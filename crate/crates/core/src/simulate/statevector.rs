//! The second simulation path: build `q'_α = Σ_{f(β)=α} μ_{|β|}` by walking
//! every edge subset of weight at most `l`, then Hadamard-transform the vertex
//! register. Nothing here uses Krawtchouk values, so agreement with the
//! histogram path is a genuine cross-check.

use super::expectation::{degree_of, normalize_weights, SimulationPath, SimulationReport};
use super::histogram::{cut_table, CutHistogram};
use crate::analysis::simulation_cap;
use crate::graph::Graph;
use crate::{BudgetKind, Budgets, Error, Result, Scalar};

/// Amplitudes are kept in the report up to this many vertices.
pub const AMPLITUDE_CAP: usize = 12;

/// In-place unnormalized Walsh–Hadamard transform; `a.len()` must be a power
/// of two.
pub fn fwht<S: Scalar>(a: &mut [S]) {
    let len = a.len();
    assert!(len.is_power_of_two(), "length must be a power of two");
    let mut h = 1;
    while h < len {
        for block in a.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*x, *y);
                *x = u + v;
                *y = u - v;
            }
        }
        h *= 2;
    }
}

/// Syndrome register `q'`: for each `α`, the sum of `μ_{|β|}` over `β ∈ E_l`
/// with `f(β) = α`.
pub fn syndrome_amplitudes<S: Scalar>(graph: &Graph, coeffs: &[S]) -> Vec<S> {
    let n = graph.n();
    let l = coeffs.len() - 1;
    let masks: Vec<usize> = graph.edges().iter().map(|&(u, v)| (1 << u) | (1 << v)).collect();
    let mut q = vec![S::zero(); 1usize << n];
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, 0, 0)];
    // (next edge index, subset size, syndrome)
    while let Some((start, size, alpha)) = stack.pop() {
        q[alpha] = q[alpha] + coeffs[size];
        if size == l {
            continue;
        }
        for e in (start..masks.len()).rev() {
            stack.push((e + 1, size + 1, alpha ^ masks[e]));
        }
    }
    q
}

pub fn dqi_statevector<S: Scalar>(graph: &Graph, coeffs: &[S], l: usize) -> Result<SimulationReport<S>> {
    dqi_statevector_with(graph, coeffs, l, &Budgets::default())
}

pub fn dqi_statevector_with<S: Scalar>(
    graph: &Graph,
    coeffs: &[S],
    l: usize,
    budgets: &Budgets,
) -> Result<SimulationReport<S>> {
    let n = graph.n();
    let m = graph.m();
    if coeffs.len() != l + 1 {
        return Err(Error::Length {
            expected: l + 1,
            got: coeffs.len(),
        });
    }
    degree_of(coeffs, m)?;
    let limit = budgets.statevector_vertices.min(usize::BITS as usize - 2);
    if n > limit {
        return Err(Error::budget(
            BudgetKind::StateVector,
            format!("2^{n} amplitudes for n={n} exceeds 2^{limit}"),
        ));
    }
    if l > simulation_cap(m, budgets.subgraphs_log2) {
        return Err(Error::budget(
            BudgetKind::Subgraphs,
            format!(
                "Σ_(k≤{l}) C({m},k) exceeds 2^{}",
                budgets.subgraphs_log2
            ),
        ));
    }

    let mut amp = syndrome_amplitudes(graph, coeffs);
    fwht(&mut amp);
    // rescale so the largest amplitude is 1; a flat state then squares exactly
    let peak = amp.iter().fold(S::zero(), |acc, &a| acc.max(a.abs()));
    if peak > S::zero() {
        amp.iter_mut().for_each(|a| *a = *a / peak);
    }
    let cuts = cut_table(graph);
    let mut counts = vec![0u64; m + 1];
    let mut weights = vec![S::zero(); m + 1];
    for (&a, &h) in amp.iter().zip(&cuts) {
        counts[h as usize] += 1;
        weights[h as usize] = weights[h as usize] + a * a;
    }
    let (distribution, expected_cut) = normalize_weights(&weights)?;
    let amplitudes = (n <= AMPLITUDE_CAP).then(|| {
        let norm = amp.iter().map(|&a| a * a).sum::<S>().sqrt();
        amp.iter().map(|&a| a / norm).collect()
    });
    Ok(SimulationReport {
        path: SimulationPath::StateVector,
        n,
        m,
        l,
        coeffs: coeffs.to_vec(),
        histogram: CutHistogram { n, counts },
        distribution,
        expected_cut,
        amplitudes,
        samples: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec};
    use crate::parity::{parity_map, EdgeVector};
    use approx::assert_relative_eq;

    #[test]
    fn fwht_is_an_involution_up_to_scale() {
        let orig = vec![1.0f64, -2.0, 0.5, 3.0, 0.0, 1.0, -1.0, 2.0];
        let mut a = orig.clone();
        fwht(&mut a);
        assert_eq!(a[0], orig.iter().sum::<f64>());
        fwht(&mut a);
        for (x, y) in a.iter().zip(&orig) {
            assert_relative_eq!(*x, 8.0 * y);
        }
    }

    #[test]
    fn syndrome_register_counts_subsets() {
        let c3 = generate(&GeneratorSpec::Cycle(3)).unwrap();
        let q = syndrome_amplitudes(&c3, &[1.0f64, 1.0, 1.0, 1.0]);
        assert_eq!(q.iter().sum::<f64>(), 8.0);
        // the empty set and the whole triangle both have syndrome 0
        assert_eq!(q[0], 2.0);
        let direct = |mask: u64| parity_map(&c3, &EdgeVector::from_u64(3, mask)).to_u64().unwrap() as usize;
        assert_eq!(q[direct(0b011)], 2.0);
    }

    #[test]
    fn uniform_at_degree_zero() {
        let pet = generate(&GeneratorSpec::Petersen).unwrap();
        let r = dqi_statevector(&pet, &[1.0f64], 0).unwrap();
        assert_relative_eq!(r.expected_cut, 7.5, max_relative = 1e-14);
        assert_eq!(r.histogram.total(), 1024);
        let amps = r.amplitudes.unwrap();
        assert_relative_eq!(amps[0], 1.0 / 32.0, max_relative = 1e-14);
    }

    #[test]
    fn budgets_are_errors() {
        let c3 = generate(&GeneratorSpec::Cycle(3)).unwrap();
        let tight = Budgets {
            statevector_vertices: 2,
            ..Budgets::default()
        };
        assert!(matches!(
            dqi_statevector_with(&c3, &[1.0f64], 0, &tight),
            Err(Error::Budget { kind: BudgetKind::StateVector, .. })
        ));
        let tight = Budgets {
            subgraphs_log2: 1,
            ..Budgets::default()
        };
        assert!(matches!(
            dqi_statevector_with(&c3, &[1.0f64, 1.0], 1, &tight),
            Err(Error::Budget { kind: BudgetKind::Subgraphs, .. })
        ));
        assert!(matches!(dqi_statevector(&c3, &[1.0f64], 1), Err(Error::Length { .. })));
    }
}
