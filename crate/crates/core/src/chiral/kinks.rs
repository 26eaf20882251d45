use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::StateVector;

/// Whether `n_kinks` kinks fit on a ring of `n_qubits`: the total in-plane
/// rotation `(N - 2M) pi / 2` must close to a multiple of `2 pi`.
pub fn kinks_admissible(n_qubits: usize, n_kinks: usize) -> bool {
    n_kinks <= n_qubits && (n_qubits as i64 - 2 * n_kinks as i64).rem_euclid(4) == 0
}

/// Admissible kink numbers for a ring: even for `N = 0 mod 4`, odd otherwise.
pub fn admissible_kink_numbers(n_qubits: usize) -> impl Iterator<Item = usize> {
    (0..=n_qubits).filter(move |&m| kinks_admissible(n_qubits, m))
}

/// Sign `kappa` of the first qubit's x-polarization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub fn sign(self) -> f64 {
        match self {
            Chirality::Plus => 1.0,
            Chirality::Minus => -1.0,
        }
    }

    /// Rotation offset that realizes this sign: `u = 1` for `+`, `u = 3` for `-`.
    pub fn u_offset(self) -> f64 {
        match self {
            Chirality::Plus => 1.0,
            Chirality::Minus => 3.0,
        }
    }
}

/// Label of a chiral basis vector: rotation offset `u` and sorted kink links.
///
/// Kink `n` sits on the link between sites `n` and `n + 1` (site `N + 1` is
/// site 1).
#[derive(Debug, Clone, PartialEq)]
pub struct KinkConfig {
    n_qubits: usize,
    u_offset: f64,
    kink_positions: Vec<usize>,
}

impl KinkConfig {
    pub fn new(n_qubits: usize, u_offset: f64, kink_positions: Vec<usize>) -> Result<Self> {
        if n_qubits == 0 || !n_qubits.is_multiple_of(2) {
            return Err(Error::InvalidQubitCount(n_qubits, "must be even"));
        }
        if !u_offset.is_finite() {
            return Err(Error::InvalidArgument(format!("u offset {u_offset}")));
        }
        if kink_positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::KinkPositions(format!("{kink_positions:?} not strictly increasing")));
        }
        if kink_positions.iter().any(|&n| n == 0 || n > n_qubits) {
            return Err(Error::KinkPositions(format!(
                "{kink_positions:?} outside 1..={n_qubits}"
            )));
        }
        if !kinks_admissible(n_qubits, kink_positions.len()) {
            return Err(Error::KinkParity {
                n_qubits,
                n_kinks: kink_positions.len(),
            });
        }
        Ok(Self {
            n_qubits,
            u_offset: u_offset.rem_euclid(4.0),
            kink_positions,
        })
    }

    pub fn with_chirality(n_qubits: usize, kappa: Chirality, kink_positions: Vec<usize>) -> Result<Self> {
        Self::new(n_qubits, kappa.u_offset(), kink_positions)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn u_offset(&self) -> f64 {
        self.u_offset
    }

    pub fn kink_positions(&self) -> &[usize] {
        &self.kink_positions
    }

    pub fn n_kinks(&self) -> usize {
        self.kink_positions.len()
    }

    /// `kappa` when `u` is 1 or 3 (mod 4).
    pub fn chirality(&self) -> Option<Chirality> {
        if (self.u_offset - 1.0).abs() < 1e-12 {
            Some(Chirality::Plus)
        } else if (self.u_offset - 3.0).abs() < 1e-12 {
            Some(Chirality::Minus)
        } else {
            None
        }
    }

    /// Same kinks with `u` shifted by `delta`.
    pub fn shifted(&self, delta: f64) -> Self {
        Self {
            u_offset: (self.u_offset + delta).rem_euclid(4.0),
            ..self.clone()
        }
    }

    /// `V` eigenvalue `N - 2M`.
    pub fn v_eigenvalue(&self) -> i64 {
        self.n_qubits as i64 - 2 * self.n_kinks() as i64
    }

    /// Rotation offset carried by `site`: `u + 2 * (kinks on links before it)`.
    pub fn site_offset(&self, site: usize) -> f64 {
        let before = self.kink_positions.iter().take_while(|&&n| n < site).count();
        self.u_offset + 2.0 * before as f64
    }

    /// Label reached by `sigma^z_first ... sigma^z_last` (`1 <= first <= last <= N`).
    ///
    /// Each `sigma^z` adds a phase `pi` to one site, toggling the kinks on both
    /// adjacent links. The resulting vector equals the new label's vector up
    /// to the `(-i)^{sum n_k}` prefactor.
    pub fn apply_z_string(&self, first: usize, last: usize) -> Result<Self> {
        if first == 0 || first > last || last > self.n_qubits {
            return Err(Error::KinkPositions(format!(
                "sigma^z string {first}..={last} on {} sites",
                self.n_qubits
            )));
        }
        let left_link = if first == 1 { self.n_qubits } else { first - 1 };
        let mut kinks = self.kink_positions.clone();
        for link in [left_link, last] {
            match kinks.binary_search(&link) {
                Ok(i) => {
                    kinks.remove(i);
                }
                Err(i) => kinks.insert(i, link),
            }
        }
        let u = if first == 1 { self.u_offset + 2.0 } else { self.u_offset };
        Self::new(self.n_qubits, u, kinks)
    }
}

/// A [`KinkConfig`] plus whether the `(-i)^{sum n_k}` prefactor is applied when
/// the vector is materialized.
#[derive(Debug, Clone, PartialEq)]
pub struct ChiralLabel {
    pub config: KinkConfig,
    pub phase_convention: bool,
}

impl ChiralLabel {
    pub fn new(config: KinkConfig) -> Self {
        Self {
            config,
            phase_convention: true,
        }
    }

    pub fn without_phase(config: KinkConfig) -> Self {
        Self {
            config,
            phase_convention: false,
        }
    }
}

/// Single-qubit factor `psi_k(u) = (1, e^{i pi (k - u) / 2}) / sqrt 2`.
pub fn chiral_spinor(site: usize, u: f64) -> [Complex64; 2] {
    [
        Complex64::new(FRAC_1_SQRT_2, 0.0),
        Complex64::from_polar(FRAC_1_SQRT_2, FRAC_PI_2 * (site as f64 - u)),
    ]
}

/// `(-i)^k` exactly.
pub(crate) fn minus_i_power(k: usize) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

/// Materializes a chiral basis vector.
pub fn build_chiral_state(label: &ChiralLabel) -> Result<StateVector> {
    let config = &label.config;
    let sites: Vec<_> = (1..=config.n_qubits)
        .map(|k| chiral_spinor(k, config.site_offset(k)))
        .collect();
    let mut state = StateVector::product(&sites)?;
    if label.phase_convention {
        state.scale(minus_i_power(config.kink_positions.iter().sum()));
    }
    Ok(state)
}

/// All `C(N, M)` kink configurations at `u = 1`, lexicographic.
pub fn enumerate_kink_configs(n_qubits: usize, n_kinks: usize) -> Result<Vec<KinkConfig>> {
    if n_qubits == 0 || !n_qubits.is_multiple_of(2) {
        return Err(Error::InvalidQubitCount(n_qubits, "must be even"));
    }
    if !kinks_admissible(n_qubits, n_kinks) {
        return Err(Error::KinkParity { n_qubits, n_kinks });
    }
    Ok(combinations(n_qubits, n_kinks)
        .map(|positions| KinkConfig {
            n_qubits,
            u_offset: 1.0,
            kink_positions: positions,
        })
        .collect())
}

/// The full chiral basis: every admissible configuration on base offsets `1` and `3`.
pub fn enumerate_chiral_basis(n_qubits: usize) -> Result<Vec<(KinkConfig, StateVector)>> {
    let mut out = Vec::with_capacity(1 << n_qubits.min(20));
    for m in admissible_kink_numbers(n_qubits) {
        for config in enumerate_kink_configs(n_qubits, m)? {
            for c in [config.clone(), config.shifted(2.0)] {
                let v = build_chiral_state(&ChiralLabel::new(c.clone()))?;
                out.push((c, v));
            }
        }
    }
    Ok(out)
}

/// `|+>` written directly in the computational basis: the state with sites
/// `l_1, .., l_n` flipped down has amplitude `2^{-N/2} (-i)^n i^{l_1 + .. + l_n}`.
pub fn chiral_vacuum_expansion(n_qubits: usize) -> Result<StateVector> {
    let mut state = StateVector::zeros(n_qubits)?;
    let norm = 0.5_f64.powf(n_qubits as f64 / 2.0);
    for (index, amp) in state.amplitudes_mut().iter_mut().enumerate() {
        let down: Vec<usize> = (1..=n_qubits).filter(|&l| index >> (l - 1) & 1 == 1).collect();
        let site_sum: usize = down.iter().sum();
        // i^s = (-i)^{3s}
        *amp = minus_i_power(down.len()) * minus_i_power(3 * site_sum) * norm;
    }
    Ok(state)
}

/// Strictly increasing `k`-subsets of `1..=n`, lexicographic.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= n { Some((1..=k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        // advance to the next subset
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] < n - (k - 1 - i) {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                current = Some(next);
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Pauli;

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(4, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(4, 2).count(), 6);
        assert_eq!(combinations(8, 3).count(), 56);
        assert_eq!(combinations(3, 3).collect::<Vec<_>>(), vec![vec![1, 2, 3]]);
        let c: Vec<_> = combinations(4, 2).collect();
        assert_eq!(c[0], vec![1, 2]);
        assert_eq!(c[5], vec![3, 4]);
    }

    #[test]
    fn enumeration_and_parity() {
        let empty = enumerate_kink_configs(4, 0).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].kink_positions().is_empty());
        assert_eq!(enumerate_kink_configs(4, 2).unwrap().len(), 6);
        assert!(matches!(enumerate_kink_configs(6, 2), Err(Error::KinkParity { .. })));
        assert!(matches!(enumerate_kink_configs(4, 1), Err(Error::KinkParity { .. })));
        assert_eq!(admissible_kink_numbers(6).collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(admissible_kink_numbers(8).collect::<Vec<_>>(), vec![0, 2, 4, 6, 8]);
    }

    #[test]
    fn label_validation() {
        assert!(KinkConfig::new(4, 1.0, vec![2, 2]).is_err());
        assert!(KinkConfig::new(4, 1.0, vec![3, 1]).is_err());
        assert!(KinkConfig::new(4, 1.0, vec![0, 2]).is_err());
        assert!(KinkConfig::new(4, 1.0, vec![2, 5]).is_err());
        assert!(KinkConfig::new(5, 1.0, vec![]).is_err());
        assert_eq!(KinkConfig::new(4, 5.0, vec![]).unwrap().u_offset(), 1.0);
    }

    #[test]
    fn vacuum_is_a_quarter_turn_helix() {
        // -> then +y, <-, -y: polarization turns by +pi/2 per site
        let plus = build_chiral_state(&ChiralLabel::new(KinkConfig::new(4, 1.0, vec![]).unwrap())).unwrap();
        let expected = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
        for (n, (x, y)) in (1..=4).zip(expected) {
            assert!((plus.expectation(n, Pauli::X).re - x).abs() < 1e-14);
            assert!((plus.expectation(n, Pauli::Y).re - y).abs() < 1e-14);
        }
    }

    #[test]
    fn vacuum_matches_computational_expansion() {
        for n in [4, 8] {
            let plus = build_chiral_state(&ChiralLabel::new(KinkConfig::new(n, 1.0, vec![]).unwrap())).unwrap();
            assert!(plus.max_abs_diff(&chiral_vacuum_expansion(n).unwrap()) < 1e-13);
        }
    }

    #[test]
    fn basis_is_orthonormal() {
        let basis = enumerate_chiral_basis(4).unwrap();
        assert_eq!(basis.len(), 16);
        for (i, (_, a)) in basis.iter().enumerate() {
            for (j, (_, b)) in basis.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((a.inner(b) - Complex64::new(expected, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn z_string_label_arithmetic() {
        let vac = KinkConfig::new(8, 1.0, vec![]).unwrap();
        assert_eq!(vac.apply_z_string(2, 4).unwrap().kink_positions(), &[1, 4]);
        // toggling an existing kink removes it
        let two = KinkConfig::new(8, 1.0, vec![1, 4]).unwrap();
        assert_eq!(two.apply_z_string(2, 4).unwrap().kink_positions(), &[] as &[usize]);
        // a string through site 1 moves the base offset
        let wrapped = vac.apply_z_string(1, 3).unwrap();
        assert_eq!(wrapped.kink_positions(), &[3, 8]);
        assert_eq!(wrapped.chirality(), Some(Chirality::Minus));
        assert!(vac.apply_z_string(3, 2).is_err());
    }
}
