//! Exact eigendecomposition of Hermitian ring operators.
//!
//! The basis is first split into the connected components of the operator's
//! nonzero pattern (magnetization sectors for XX, spin-flip parity for `V`);
//! each component is then diagonalized densely. Eigenvectors are stored per
//! block, so time evolution never touches a full `2^N x 2^N` matrix.

use std::collections::{BTreeMap, HashMap};

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rayon::prelude::*;

use super::operator::DenseOperator;
use super::pauli::PauliSum;
use super::state::{check_qubits, StateVector};
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// One invariant block: basis indices with the eigenpairs restricted to them.
#[derive(Debug, Clone)]
pub struct SpectralBlock {
    pub indices: Vec<usize>,
    pub eigenvalues: Vec<f64>,
    /// Columns are orthonormal eigenvectors in the block's local basis.
    pub eigenvectors: DMatrix<Complex64>,
}

#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    n_qubits: usize,
    blocks: Vec<SpectralBlock>,
}

impl SpectralDecomposition {
    /// Decomposes a dense operator; rejects non-Hermitian input.
    pub fn from_dense(op: &DenseOperator) -> Result<Self> {
        if !op.is_hermitian() {
            return Err(Error::NotHermitian(op.hermitian_deviation()));
        }
        let m = op.matrix();
        let dim = op.dimension();
        let components = connected_components(dim, |i, visit| {
            for j in 0..dim {
                if m[(j, i)] != ZERO {
                    visit(j);
                }
            }
        });
        let blocks = components
            .into_par_iter()
            .map(|indices| {
                let n = indices.len();
                let local = DMatrix::from_fn(n, n, |r, c| m[(indices[r], indices[c])]);
                diagonalize_block(indices, local)
            })
            .collect();
        Ok(Self {
            n_qubits: op.n_qubits(),
            blocks,
        })
    }

    /// Decomposes a Hermitian Pauli sum without building the full matrix.
    pub fn from_terms(terms: &PauliSum) -> Result<Self> {
        check_qubits(terms.n_qubits)?;
        let dim = terms.dimension();
        // amplitudes of different terms can cancel (XX + YY on aligned pairs)
        let components = connected_components(dim, |i, visit| {
            let mut images: BTreeMap<usize, Complex64> = BTreeMap::new();
            for term in &terms.terms {
                let (j, a) = term.act_on_basis(i);
                *images.entry(j).or_insert(ZERO) += a;
            }
            for (j, a) in images {
                if a.norm() > 1e-14 {
                    visit(j);
                }
            }
        });
        let locals: Vec<(Vec<usize>, DMatrix<Complex64>)> = components
            .into_par_iter()
            .map(|indices| {
                let position: HashMap<usize, usize> = indices.iter().enumerate().map(|(k, &i)| (i, k)).collect();
                let mut block = DMatrix::zeros(indices.len(), indices.len());
                for (col, &i) in indices.iter().enumerate() {
                    for term in &terms.terms {
                        let (j, a) = term.act_on_basis(i);
                        // cancelled images fall outside the component
                        if let Some(&row) = position.get(&j) {
                            block[(row, col)] += a;
                        }
                    }
                }
                (indices, block)
            })
            .collect();

        let worst = locals
            .iter()
            .map(|(_, b)| (b - b.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if worst > 1e-13 {
            return Err(Error::NotHermitian(worst));
        }

        let blocks = locals
            .into_par_iter()
            .map(|(indices, block)| diagonalize_block(indices, block))
            .collect();
        Ok(Self {
            n_qubits: terms.n_qubits,
            blocks,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn blocks(&self) -> &[SpectralBlock] {
        &self.blocks
    }

    /// All eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self.blocks.iter().flat_map(|b| b.eigenvalues.iter().copied()).collect();
        all.sort_by(f64::total_cmp);
        all
    }

    /// `max |U D U^dagger - A|` over all entries of `op`.
    pub fn reconstruction_error(&self, op: &DenseOperator) -> f64 {
        let dim = op.dimension();
        let mut rebuilt = DMatrix::<Complex64>::zeros(dim, dim);
        for b in &self.blocks {
            let d = DMatrix::from_diagonal(&DVector::from_iterator(
                b.eigenvalues.len(),
                b.eigenvalues.iter().map(|&e| Complex64::new(e, 0.0)),
            ));
            let local = &b.eigenvectors * d * b.eigenvectors.adjoint();
            for (r, &i) in b.indices.iter().enumerate() {
                for (c, &j) in b.indices.iter().enumerate() {
                    rebuilt[(i, j)] = local[(r, c)];
                }
            }
        }
        (rebuilt - op.matrix()).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `exp(-i A t) |state>`.
    pub fn evolve(&self, state: &StateVector, t: f64) -> Result<StateVector> {
        if state.n_qubits() != self.n_qubits {
            return Err(Error::Dimension {
                expected: 1 << self.n_qubits,
                found: state.dimension(),
            });
        }
        let input = state.amplitudes();
        let mut out = vec![ZERO; input.len()];
        for b in &self.blocks {
            let local = DVector::from_iterator(b.indices.len(), b.indices.iter().map(|&i| input[i]));
            if local.iter().all(|a| *a == ZERO) {
                continue;
            }
            let mut coeffs = b.eigenvectors.ad_mul(&local);
            for (c, &e) in coeffs.iter_mut().zip(&b.eigenvalues) {
                *c *= Complex64::from_polar(1.0, -e * t);
            }
            let back = &b.eigenvectors * coeffs;
            for (v, &i) in back.iter().zip(&b.indices) {
                out[i] = *v;
            }
        }
        StateVector::from_amplitudes(self.n_qubits, out)
    }
}

/// Groups `0..dim` into connected components of the graph whose edges are
/// reported by `neighbours`. Components come out ordered by smallest index.
fn connected_components(dim: usize, neighbours: impl Fn(usize, &mut dyn FnMut(usize))) -> Vec<Vec<usize>> {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    let mut parent: Vec<usize> = (0..dim).collect();
    let mut edges = Vec::new();
    for i in 0..dim {
        edges.clear();
        neighbours(i, &mut |j| edges.push(j));
        for &j in &edges {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..dim {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    groups.into_values().collect()
}

fn diagonalize_block(indices: Vec<usize>, block: DMatrix<Complex64>) -> SpectralBlock {
    let (eigenvalues, eigenvectors) = if block.iter().all(|z| z.im == 0.0) {
        // real symmetric: cheaper and exactly real eigenvectors
        let real = block.map(|z| z.re);
        let eig = SymmetricEigen::new(real);
        (
            eig.eigenvalues.iter().copied().collect(),
            eig.eigenvectors.map(|v| Complex64::new(v, 0.0)),
        )
    } else {
        let eig = SymmetricEigen::new(block);
        (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors)
    };
    SpectralBlock {
        indices,
        eigenvalues,
        eigenvectors,
    }
}
