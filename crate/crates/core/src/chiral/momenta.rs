use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{det_complex, ComplexMatrix};

/// Tolerance for recognizing a momentum as a lattice point.
pub const LATTICE_TOLERANCE: f64 = 1e-10;

/// Quantization of chiral quasi-momenta: `e^{ipN} = +1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    Periodic,
    Antiperiodic,
}

impl Sector {
    /// `e^{ipN}` for every momentum in the sector.
    pub fn sign(self) -> f64 {
        match self {
            Sector::Periodic => 1.0,
            Sector::Antiperiodic => -1.0,
        }
    }

    fn shift(self) -> f64 {
        match self {
            Sector::Periodic => 0.0,
            Sector::Antiperiodic => 0.5,
        }
    }
}

/// The `N` lattice momenta of a sector in `[-pi, pi)`, ascending:
/// `2 pi k / N` (periodic) or `2 pi (k + 1/2) / N` (antiperiodic),
/// `k = -N/2 .. N/2 - 1`.
pub fn sector_lattice(n_qubits: usize, sector: Sector) -> Vec<f64> {
    let half = (n_qubits / 2) as i64;
    (-half..half)
        .map(|k| TAU * (k as f64 + sector.shift()) / n_qubits as f64)
        .collect()
}

/// Strictly increasing quasi-momenta on one sector lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumTuple {
    n_qubits: usize,
    sector: Sector,
    momenta: Vec<f64>,
}

impl MomentumTuple {
    /// Validates and snaps `momenta` onto the sector lattice.
    pub fn new(n_qubits: usize, sector: Sector, momenta: &[f64]) -> Result<Self> {
        if n_qubits == 0 || !n_qubits.is_multiple_of(2) {
            return Err(Error::InvalidQubitCount(n_qubits, "must be even"));
        }
        let mut snapped = Vec::with_capacity(momenta.len());
        for &p in momenta {
            if !(-PI - LATTICE_TOLERANCE..PI).contains(&p) {
                return Err(Error::Momenta(format!("{p} outside [-pi, pi)")));
            }
            let k = p * n_qubits as f64 / TAU - sector.shift();
            if (k - k.round()).abs() > LATTICE_TOLERANCE * n_qubits as f64 {
                return Err(Error::Momenta(format!("{p} is not on the {sector:?} lattice of N = {n_qubits}")));
            }
            snapped.push(TAU * (k.round() + sector.shift()) / n_qubits as f64);
        }
        if snapped.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Momenta(format!("{momenta:?} not strictly increasing")));
        }
        Ok(Self {
            n_qubits,
            sector,
            momenta: snapped,
        })
    }

    /// Momenta picked by lattice index (`0..N`, ascending order of the lattice).
    pub fn from_lattice_indices(n_qubits: usize, sector: Sector, indices: &[usize]) -> Result<Self> {
        let lattice = sector_lattice(n_qubits, sector);
        let momenta: Vec<f64> = indices
            .iter()
            .map(|&i| {
                lattice
                    .get(i)
                    .copied()
                    .ok_or_else(|| Error::Momenta(format!("lattice index {i} >= {n_qubits}")))
            })
            .collect::<Result<_>>()?;
        Self::new(n_qubits, sector, &momenta)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn momenta(&self) -> &[f64] {
        &self.momenta
    }

    pub fn len(&self) -> usize {
        self.momenta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.momenta.is_empty()
    }

    /// `E_p = 4 sum_j cos p_j`.
    pub fn energy(&self) -> f64 {
        4.0 * self.momenta.iter().map(|p| p.cos()).sum::<f64>()
    }

    /// Slater amplitude `chi_{n_1 .. n_M}(p)`.
    pub fn amplitude(&self, positions: &[usize]) -> Result<Complex64> {
        Ok(slater_amplitude(self.n_qubits, positions, &self.momenta)?.value)
    }
}

/// Value of a Slater amplitude; `repeated_momenta` flags the vanishing case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlaterAmplitude {
    pub value: Complex64,
    pub repeated_momenta: bool,
}

/// `chi = (2 N^M)^{-1/2} det[e^{i n_j p_k}]_{j,k}` for arbitrary ordering of
/// the momenta. Coinciding momenta return an exact zero.
pub fn slater_amplitude(n_qubits: usize, positions: &[usize], momenta: &[f64]) -> Result<SlaterAmplitude> {
    if positions.len() != momenta.len() {
        return Err(Error::Dimension {
            expected: positions.len(),
            found: momenta.len(),
        });
    }
    let m = momenta.len();
    let repeated = (0..m).any(|i| (i + 1..m).any(|j| momenta[i] == momenta[j]));
    if repeated {
        return Ok(SlaterAmplitude {
            value: Complex64::new(0.0, 0.0),
            repeated_momenta: true,
        });
    }
    let norm = (2.0 * (n_qubits as f64).powi(m as i32)).sqrt();
    let matrix = ComplexMatrix::from_fn(m, m, |j, k| Complex64::from_polar(1.0, positions[j] as f64 * momenta[k]));
    let det = if m == 0 { Complex64::new(1.0, 0.0) } else { det_complex(&matrix) };
    Ok(SlaterAmplitude {
        value: det / norm,
        repeated_momenta: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattices() {
        let p = sector_lattice(4, Sector::Periodic);
        let want = [-PI, -PI / 2.0, 0.0, PI / 2.0];
        assert!(p.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-15));
        let a = sector_lattice(4, Sector::Antiperiodic);
        let want = [-0.75 * PI, -0.25 * PI, 0.25 * PI, 0.75 * PI];
        assert!(a.iter().zip(want).all(|(x, y)| (x - y).abs() < 1e-15));
        for n in [4, 6, 10] {
            for s in [Sector::Periodic, Sector::Antiperiodic] {
                let l = sector_lattice(n, s);
                assert_eq!(l.len(), n);
                for p in l {
                    let phase = Complex64::from_polar(1.0, p * n as f64);
                    assert!((phase - Complex64::new(s.sign(), 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn tuple_validation() {
        assert!(MomentumTuple::new(6, Sector::Periodic, &[0.3]).is_err());
        assert!(MomentumTuple::new(4, Sector::Periodic, &[0.0, 0.0]).is_err());
        assert!(MomentumTuple::new(4, Sector::Periodic, &[PI / 2.0, 0.0]).is_err());
        assert!(MomentumTuple::new(4, Sector::Periodic, &[PI]).is_err());
        let snapped = MomentumTuple::new(4, Sector::Antiperiodic, &[PI / 4.0 + 1e-12]).unwrap();
        assert_eq!(snapped.momenta()[0], PI / 4.0);
    }

    #[test]
    fn single_mode() {
        let n = 4;
        let a = slater_amplitude(n, &[2], &[PI / 2.0]).unwrap().value;
        let want = Complex64::from_polar(1.0, PI) / (2.0 * n as f64).sqrt();
        assert!((a - want).norm() < 1e-15);
    }

    #[test]
    fn antisymmetry() {
        let z = slater_amplitude(6, &[1, 3], &[0.5, 0.5]).unwrap();
        assert!(z.repeated_momenta);
        assert_eq!(z.value, Complex64::new(0.0, 0.0));

        let a = slater_amplitude(6, &[1, 3, 4], &[0.1, -1.2, 2.0]).unwrap().value;
        let b = slater_amplitude(6, &[1, 3, 4], &[-1.2, 0.1, 2.0]).unwrap().value;
        assert!((a + b).norm() < 1e-15);
    }

    // Leibniz sum over permutations, written out for M = 3.
    #[test]
    fn determinant_equals_permutation_sum() {
        let n = [1usize, 2, 5];
        let p = [0.3, -1.1, 2.4];
        let perms: [([usize; 3], f64); 6] = [
            ([0, 1, 2], 1.0),
            ([0, 2, 1], -1.0),
            ([1, 0, 2], -1.0),
            ([1, 2, 0], 1.0),
            ([2, 0, 1], 1.0),
            ([2, 1, 0], -1.0),
        ];
        let sum: Complex64 = perms
            .iter()
            .map(|(q, sign)| {
                let phase: f64 = (0..3).map(|j| n[j] as f64 * p[q[j]]).sum();
                Complex64::from_polar(*sign, phase)
            })
            .sum();
        let want = sum / (2.0 * 6f64.powi(3)).sqrt();
        let got = slater_amplitude(6, &n, &p).unwrap().value;
        assert!((got - want).norm() < 1e-14);
    }
}
