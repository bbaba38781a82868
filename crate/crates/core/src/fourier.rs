//! Checks that combine both correspondences: the determinant identity
//! `det(g_j, R_k) = exp(-2πi (C^{-1})_{jk})`, the cyclic Fourier matrix, the
//! abelianization exponent, and an exploratory finite-order probe for the
//! unitarized character matrix.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::characters::{det_character, CharacterTable};
use crate::dual::DualLabeling;
use crate::dynkin::{cartan, Diagram, DiagramType, Family};
use crate::error::{Error, Result};
use crate::isomorphism::automorphisms;
use crate::mckay::VertexIrrepBijection;
use crate::su2group::FiniteSubgroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Determinant,
    Cartan,
}

/// An `r x r` matrix indexed by (vertex `j` via the dual labeling, vertex `k` via
/// the McKay bijection).
#[derive(Clone, Debug)]
pub struct FourierMatrix {
    pub entries: Vec<Vec<Complex64>>,
    pub source: Source,
}

impl FourierMatrix {
    pub fn max_unit_deviation(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| (z.norm() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_deviation_from(&self, other: &FourierMatrix) -> (f64, (usize, usize)) {
        let mut worst = (0.0, (0, 0));
        for (j, (a, b)) in self.entries.iter().zip(&other.entries).enumerate() {
            for (k, (x, y)) in a.iter().zip(b).enumerate() {
                let d = (x - y).norm();
                if d > worst.0 {
                    worst = (d, (j, k));
                }
            }
        }
        worst
    }

    pub fn symmetry_deviation(&self) -> f64 {
        let n = self.entries.len();
        (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| (self.entries[j][k] - self.entries[k][j]).norm())
            .fold(0.0, f64::max)
    }
}

/// `exp(-2πi q)` evaluated after reducing `q` modulo 1 exactly.
pub fn phase_of_rational(q: &BigRational) -> Complex64 {
    let frac = q - q.floor();
    let t = frac.to_f64().unwrap_or(f64::NAN);
    Complex64::from_polar(1.0, -2.0 * PI * t)
}

/// `F_jk = exp(-2πi (C^{-1})_{jk})`.
pub fn cartan_fourier(ty: DiagramType) -> FourierMatrix {
    let inv = cartan(ty).inverse;
    FourierMatrix {
        entries: inv
            .iter()
            .map(|row| row.iter().map(phase_of_rational).collect())
            .collect(),
        source: Source::Cartan,
    }
}

/// `F_jk = det(g_j, R_{σ(k)})` with `g_j` in the class of vertex `j` and
/// `R_{σ(k)}` the irrep of vertex `σ(k)`.
pub fn determinant_fourier(
    group: &FiniteSubgroup,
    table: &CharacterTable,
    labeling: &DualLabeling,
    bijection: &VertexIrrepBijection,
    automorphism: &[usize],
) -> FourierMatrix {
    let r = labeling.map.len();
    let entries = (0..r)
        .map(|j| {
            (0..r)
                .map(|k| {
                    det_character(
                        table,
                        group,
                        bijection.irrep_of_vertex(automorphism[k]),
                        labeling.class_of_vertex(j),
                    )
                })
                .collect()
        })
        .collect();
    FourierMatrix {
        entries,
        source: Source::Determinant,
    }
}

#[derive(Clone, Debug)]
pub struct DetFormulaReport {
    pub max_deviation: f64,
    pub witness: (usize, usize),
    /// Diagram automorphism applied on the irrep side; the identity when the
    /// canonical alignment already validates.
    pub automorphism: Vec<usize>,
    pub identity_deviation: f64,
}

impl DetFormulaReport {
    pub fn used_identity(&self) -> bool {
        self.automorphism.iter().enumerate().all(|(i, &v)| i == v)
    }
}

/// Compares the determinant and Cartan matrices, first under the canonical
/// alignment and then under each diagram automorphism in lexicographic order.
pub fn det_formula_check(
    group: &FiniteSubgroup,
    table: &CharacterTable,
    labeling: &DualLabeling,
    bijection: &VertexIrrepBijection,
    tol: f64,
) -> Result<DetFormulaReport> {
    let ty = group.diagram_type();
    let diagram = Diagram::new(ty);
    let target = cartan_fourier(ty);
    let identity: Vec<usize> = (0..diagram.len()).collect();
    let (identity_deviation, _) = determinant_fourier(group, table, labeling, bijection, &identity)
        .max_deviation_from(&target);
    let mut candidates = vec![identity];
    candidates.extend(automorphisms(diagram.adjacency()));
    let mut best: Option<DetFormulaReport> = None;
    for sigma in candidates {
        let (dev, witness) = determinant_fourier(group, table, labeling, bijection, &sigma)
            .max_deviation_from(&target);
        let report = DetFormulaReport {
            max_deviation: dev,
            witness,
            automorphism: sigma,
            identity_deviation,
        };
        if dev <= tol {
            return Ok(report);
        }
        if best.as_ref().is_none_or(|b| dev < b.max_deviation) {
            best = Some(report);
        }
    }
    let best = best.expect("at least the identity is tried");
    Err(Error::DeterminantMismatch {
        ty,
        j: best.witness.0,
        k: best.witness.1,
        deviation: best.max_deviation,
    })
}

/// `exp(-2πi jk/(n+1))`, `j, k = 1..n`.
pub fn cyclic_fourier_matrix(n: usize) -> FourierMatrix {
    let entries = (1..=n)
        .map(|j| {
            (1..=n)
                .map(|k| {
                    let t = ((j * k) % (n + 1)) as f64 / (n + 1) as f64;
                    Complex64::from_polar(1.0, -2.0 * PI * t)
                })
                .collect()
        })
        .collect();
    FourierMatrix {
        entries,
        source: Source::Cartan,
    }
}

/// Deviation of the determinant matrix of a cyclic group, under the canonical
/// alignment, from the discrete Fourier matrix.
pub fn cyclic_fourier(
    group: &FiniteSubgroup,
    table: &CharacterTable,
    labeling: &DualLabeling,
    bijection: &VertexIrrepBijection,
) -> Option<(FourierMatrix, f64)> {
    let ty = group.diagram_type();
    if ty.family() != Family::A {
        return None;
    }
    let identity: Vec<usize> = (0..ty.rank()).collect();
    let det = determinant_fourier(group, table, labeling, bijection, &identity);
    let (dev, _) = det.max_deviation_from(&cyclic_fourier_matrix(ty.rank()));
    Some((det, dev))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizationReport {
    pub order: usize,
    pub exponent: u64,
    pub connection_index: u64,
}

/// Exponent of `G^ab` against `det C`.
pub fn abelianization_check(group: &FiniteSubgroup) -> Result<AbelianizationReport> {
    let ty = group.diagram_type();
    let ab = group.abelianization();
    let index = cartan(ty).connection_index;
    let report = AbelianizationReport {
        order: ab.order,
        exponent: ab.exponent,
        connection_index: index,
    };
    if report.exponent == index {
        Ok(report)
    } else {
        Err(Error::AbelianizationMismatch {
            ty,
            exponent: report.exponent,
            index,
        })
    }
}

/// Largest distance of a determinant entry from the `(det C)`-th roots of unity.
pub fn root_of_unity_deviation(matrix: &FourierMatrix, index: u64) -> f64 {
    matrix
        .entries
        .iter()
        .flatten()
        .map(|z| {
            let turns = z.arg() / (2.0 * PI) * index as f64;
            let nearest = Complex64::from_polar(1.0, 2.0 * PI * turns.round() / index as f64);
            (z - nearest).norm()
        })
        .fold(0.0, f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeOutcome {
    FiniteOrder(u64),
    ExceedsBound(u64),
}

/// The unitarized character matrix `T_jk = χ_{R(v_k)}(C(v_j)) sqrt(|C(v_j)|/|G|)`
/// over all affine vertices, with `v_0` taken to the identity class on the class
/// side and to the trivial irrep on the irrep side.
pub fn central_transform(
    group: &FiniteSubgroup,
    table: &CharacterTable,
    labeling: &DualLabeling,
    bijection: &VertexIrrepBijection,
) -> Vec<Vec<Complex64>> {
    let r = labeling.map.len();
    let class_of = |j: usize| {
        if j == 0 {
            group.identity_class()
        } else {
            labeling.class_of_vertex(j - 1)
        }
    };
    let n = group.len() as f64;
    (0..=r)
        .map(|j| {
            let c = class_of(j);
            let w = (group.classes()[c].size() as f64 / n).sqrt();
            (0..=r)
                .map(|k| table.values[bijection.map[k]][c] * w)
                .collect()
        })
        .collect()
}

fn matmul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn is_scalar(m: &[Vec<Complex64>], tol: f64) -> bool {
    let d = m[0][0];
    m.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, &v)| {
            if i == j {
                (v - d).norm() <= tol
            } else {
                v.norm() <= tol
            }
        })
    })
}

/// Least `p <= max_power` with `T^p` a scalar matrix (within `tol`).
pub fn central_transform_order_probe(
    group: &FiniteSubgroup,
    table: &CharacterTable,
    labeling: &DualLabeling,
    bijection: &VertexIrrepBijection,
    max_power: u64,
    tol: f64,
) -> ProbeOutcome {
    let t = central_transform(group, table, labeling, bijection);
    let mut power = t.clone();
    for p in 1..=max_power {
        if is_scalar(&power, tol) {
            return ProbeOutcome::FiniteOrder(p);
        }
        power = matmul(&power, &t);
    }
    ProbeOutcome::ExceedsBound(max_power)
}

/// `gcd` of the entries of `det C · C^{-1}`.
pub fn scaled_inverse_gcd(ty: DiagramType) -> u64 {
    let data = cartan(ty);
    let index = BigRational::from_integer(data.connection_index.into());
    data.inverse
        .iter()
        .flatten()
        .map(|q| {
            (q * &index)
                .to_integer()
                .to_u64()
                .expect("entries of det C · C^{-1} are non-negative integers")
        })
        .fold(0u64, |acc, v| acc.gcd(&v))
}
