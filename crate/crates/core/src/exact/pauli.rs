use num_complex::Complex64;

/// Single-site Pauli factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    /// Action on a single basis bit: returns `(new_bit, amplitude)` with
    /// bit 0 = spin up `(1, 0)`.
    #[inline]
    pub fn act(self, bit: bool) -> (bool, Complex64) {
        match (self, bit) {
            (Pauli::X, b) => (!b, Complex64::new(1.0, 0.0)),
            // Y (1,0) = i (0,1), Y (0,1) = -i (1,0)
            (Pauli::Y, false) => (true, Complex64::new(0.0, 1.0)),
            (Pauli::Y, true) => (false, Complex64::new(0.0, -1.0)),
            (Pauli::Z, false) => (false, Complex64::new(1.0, 0.0)),
            (Pauli::Z, true) => (true, Complex64::new(-1.0, 0.0)),
        }
    }

    pub fn matrix(self) -> [[Complex64; 2]; 2] {
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        match self {
            Pauli::X => [[z, one], [one, z]],
            Pauli::Y => [[z, -i], [i, z]],
            Pauli::Z => [[one, z], [z, -one]],
        }
    }
}

/// Weighted tensor product of Pauli factors on distinct sites (1-based).
#[derive(Debug, Clone, PartialEq)]
pub struct PauliTerm {
    pub coefficient: Complex64,
    pub factors: Vec<(usize, Pauli)>,
}

impl PauliTerm {
    pub fn new(coefficient: f64, factors: &[(usize, Pauli)]) -> Self {
        Self {
            coefficient: Complex64::new(coefficient, 0.0),
            factors: factors.to_vec(),
        }
    }

    /// Image of the basis state `index` as `(index', amplitude)`.
    #[inline]
    pub fn act_on_basis(&self, index: usize) -> (usize, Complex64) {
        let mut out = index;
        let mut amp = self.coefficient;
        for &(site, p) in &self.factors {
            let mask = 1usize << (site - 1);
            let (bit, a) = p.act(out & mask != 0);
            out = if bit { out | mask } else { out & !mask };
            amp *= a;
        }
        (out, amp)
    }
}

/// Sum of Pauli strings on `n_qubits` sites.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum {
    pub n_qubits: usize,
    pub terms: Vec<PauliTerm>,
}

impl PauliSum {
    pub fn new(n_qubits: usize) -> Self {
        Self {
            n_qubits,
            terms: Vec::new(),
        }
    }

    pub fn push(&mut self, term: PauliTerm) {
        debug_assert!(term.factors.iter().all(|&(s, _)| s >= 1 && s <= self.n_qubits));
        self.terms.push(term);
    }

    pub fn dimension(&self) -> usize {
        1 << self.n_qubits
    }

    /// Matrix-free product with a state vector.
    pub fn apply(&self, input: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); input.len()];
        for (index, &amp) in input.iter().enumerate() {
            if amp == Complex64::new(0.0, 0.0) {
                continue;
            }
            for term in &self.terms {
                let (target, a) = term.act_on_basis(index);
                out[target] += a * amp;
            }
        }
        out
    }

    /// `sum_n (X_n X_{n+1} + Y_n Y_{n+1})` on a ring.
    pub fn xx_ring(n_qubits: usize) -> Self {
        let mut h = Self::new(n_qubits);
        for n in 1..=n_qubits {
            let next = n % n_qubits + 1;
            h.push(PauliTerm::new(1.0, &[(n, Pauli::X), (next, Pauli::X)]));
            h.push(PauliTerm::new(1.0, &[(n, Pauli::Y), (next, Pauli::Y)]));
        }
        h
    }

    /// `V = sum_{k=1}^{N/2} (X_{2k-1} Y_{2k} - Y_{2k} X_{2k+1})`, site `N + 1` wrapping to 1.
    pub fn chirality(n_qubits: usize) -> Self {
        let mut v = Self::new(n_qubits);
        for k in 1..=n_qubits / 2 {
            let next = (2 * k) % n_qubits + 1;
            v.push(PauliTerm::new(1.0, &[(2 * k - 1, Pauli::X), (2 * k, Pauli::Y)]));
            v.push(PauliTerm::new(-1.0, &[(2 * k, Pauli::Y), (next, Pauli::X)]));
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_bit_action_matches_matrices() {
        for p in [Pauli::X, Pauli::Y, Pauli::Z] {
            let m = p.matrix();
            for bit in [false, true] {
                let (out, a) = p.act(bit);
                // column `bit` of the matrix has its only nonzero at row `out`
                assert_eq!(m[out as usize][bit as usize], a);
                assert_eq!(m[!out as usize][bit as usize], Complex64::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn ring_term_counts() {
        assert_eq!(PauliSum::xx_ring(6).terms.len(), 12);
        assert_eq!(PauliSum::chirality(6).terms.len(), 6);
        let v = PauliSum::chirality(4);
        // last link wraps to site 1
        assert_eq!(v.terms[3].factors, vec![(4, Pauli::Y), (1, Pauli::X)]);
    }
}
