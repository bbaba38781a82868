//! Character tables by the class-sum (Burnside-Dixon) method, tensor products with
//! the defining representation, and determinant characters.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::su2group::FiniteSubgroup;

/// Tolerance for orthogonality of a finished table.
pub const CONSTRUCTION_TOL: f64 = 1e-9;
/// Tolerance for rounding multiplicities and dimensions to integers.
pub const INTEGRALITY_TOL: f64 = 1e-6;
/// Tolerance for unit-modulus and phase comparisons.
pub const PHASE_TOL: f64 = 1e-8;

const SEED: u64 = 0x00c0_ffee;
const MAX_ATTEMPTS: usize = 16;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    /// `values[a][j]` is the character of irrep `a` on class `j`.
    pub values: Vec<Vec<Complex64>>,
    pub dims: Vec<u64>,
    pub class_sizes: Vec<usize>,
    pub group_order: usize,
    pub identity_class: usize,
}

impl CharacterTable {
    pub fn irrep_count(&self) -> usize {
        self.values.len()
    }

    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    /// `(1/|G|) Σ_j |C_j| f(g_j) conj(h(g_j))`.
    pub fn inner_product(&self, f: &[Complex64], h: &[Complex64]) -> Complex64 {
        let sum: Complex64 = self
            .class_sizes
            .iter()
            .zip(f.iter().zip(h))
            .map(|(&s, (a, b))| a * b.conj() * s as f64)
            .sum();
        sum / self.group_order as f64
    }

    /// Largest deviation from the row orthogonality relations.
    pub fn row_orthogonality_deviation(&self) -> f64 {
        let n = self.irrep_count();
        let mut worst: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                let ip = self.inner_product(&self.values[a], &self.values[b]);
                let expected = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((ip - expected).norm());
            }
        }
        worst
    }

    /// Largest deviation from `Σ_a χ_a(g_i) conj(χ_a(g_j)) = δ_ij |G|/|C_i|`.
    pub fn column_orthogonality_deviation(&self) -> f64 {
        let k = self.class_count();
        let mut worst: f64 = 0.0;
        for i in 0..k {
            for j in 0..k {
                let s: Complex64 = self.values.iter().map(|row| row[i] * row[j].conj()).sum();
                let expected = if i == j {
                    self.group_order as f64 / self.class_sizes[i] as f64
                } else {
                    0.0
                };
                // relative to the centralizer order
                let scale = (self.group_order as f64 / self.class_sizes[i] as f64).max(1.0);
                worst = worst.max((s - expected).norm() / scale);
            }
        }
        worst
    }

    pub fn sum_of_squared_dims(&self) -> u64 {
        self.dims.iter().map(|d| d * d).sum()
    }

    pub fn trivial_irreps(&self) -> Vec<usize> {
        (0..self.irrep_count())
            .filter(|&a| {
                self.values[a]
                    .iter()
                    .all(|v| (v - Complex64::new(1.0, 0.0)).norm() < INTEGRALITY_TOL)
            })
            .collect()
    }

    /// Rows reordered so that new row `i` is old row `order[i]`.
    pub fn reordered(&self, order: &[usize]) -> CharacterTable {
        CharacterTable {
            values: order.iter().map(|&a| self.values[a].clone()).collect(),
            dims: order.iter().map(|&a| self.dims[a]).collect(),
            ..self.clone()
        }
    }

    /// Multiplicities of each irrep `j` in `R_a ⊗ V` where `V` has character `chi`.
    pub fn tensor_multiplicities(&self, a: usize, chi: &[Complex64]) -> Result<Vec<i64>> {
        let product: Vec<Complex64> = self.values[a].iter().zip(chi).map(|(x, y)| x * y).collect();
        (0..self.irrep_count())
            .map(|j| {
                let m = self.inner_product(&product, &self.values[j]);
                let rounded = m.re.round();
                if (m - rounded).norm() > INTEGRALITY_TOL {
                    Err(Error::NonIntegral {
                        row: a,
                        col: j,
                        value: m.re,
                    })
                } else {
                    Ok(rounded as i64)
                }
            })
            .collect()
    }
}

/// Class structure constants: `constants[j][l][m]` counts pairs
/// `(x, y) ∈ C_j × C_l` with `x y = g_m` for a fixed `g_m ∈ C_m`.
pub fn class_structure_constants(group: &FiniteSubgroup) -> Vec<Vec<Vec<u64>>> {
    let k = group.class_count();
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (m, cm) in group.classes().iter().enumerate() {
        let g = cm.representative;
        for (j, cj) in group.classes().iter().enumerate() {
            for &x in &cj.members {
                let y = group.mul(group.inv(x), g);
                a[j][group.class_of(y)][m] += 1;
            }
        }
    }
    a
}

fn eigenvector(
    b: &DMatrix<f64>,
    lambda: Complex64,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Complex64>> {
    let n = b.nrows();
    let scale = b.amax().max(1.0);
    let shift = lambda + Complex64::new(scale * 1e-11, scale * 1e-11);
    let shifted = DMatrix::from_fn(n, n, |i, j| {
        let v = Complex64::new(b[(i, j)], 0.0);
        if i == j {
            v - shift
        } else {
            v
        }
    });
    let lu = shifted.lu();
    let mut v = nalgebra::DVector::from_fn(n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), 0.0));
    for _ in 0..3 {
        v = lu.solve(&v)?;
        let norm = v.norm();
        if !norm.is_finite() || norm == 0.0 {
            return None;
        }
        v /= Complex64::new(norm, 0.0);
    }
    Some(v.iter().copied().collect())
}

fn attempt(
    group: &FiniteSubgroup,
    constants: &[Vec<Vec<u64>>],
    rng: &mut ChaCha8Rng,
) -> Option<CharacterTable> {
    let k = group.class_count();
    let id = group.identity_class();
    let sizes: Vec<usize> = group.classes().iter().map(|c| c.size()).collect();
    let weights: Vec<f64> = (0..k).map(|_| rng.gen_range(0.5..1.5)).collect();
    let b = DMatrix::from_fn(k, k, |l, m| {
        (0..k).map(|j| weights[j] * constants[j][l][m] as f64).sum()
    });
    let eigenvalues: Vec<Complex64> = b.clone().complex_eigenvalues().iter().copied().collect();
    let scale = b.amax().max(1.0);
    for (i, x) in eigenvalues.iter().enumerate() {
        for y in &eigenvalues[i + 1..] {
            if (x - y).norm() < 1e-6 * scale {
                return None;
            }
        }
    }
    let n = group.len() as f64;
    let mut rows = Vec::with_capacity(k);
    for &lambda in &eigenvalues {
        let v = eigenvector(&b, lambda, rng)?;
        if v[id].norm() < 1e-8 {
            return None;
        }
        // central character ω_j = |C_j| χ(g_j) / χ(1), normalized so ω_1 = 1
        let omega: Vec<Complex64> = v.iter().map(|x| x / v[id]).collect();
        let denom: f64 = omega
            .iter()
            .zip(&sizes)
            .map(|(w, &s)| w.norm_sqr() / s as f64)
            .sum();
        let dim_f = (n / denom).sqrt();
        let dim = dim_f.round();
        if (dim - dim_f).abs() > 1e-3 || dim < 1.0 {
            return None;
        }
        let chi: Vec<Complex64> = omega
            .iter()
            .zip(&sizes)
            .map(|(w, &s)| w * dim / s as f64)
            .collect();
        rows.push((dim as u64, chi));
    }
    // dimension ascending, then values in descending lexicographic order so the
    // trivial character leads
    let key = |c: &Complex64| ((c.re * 1e6).round() as i64, (c.im * 1e6).round() as i64);
    rows.sort_by(|(da, a), (db, b)| {
        da.cmp(db).then_with(|| {
            let ka: Vec<_> = a.iter().map(key).collect();
            let kb: Vec<_> = b.iter().map(key).collect();
            kb.cmp(&ka)
        })
    });
    let table = CharacterTable {
        dims: rows.iter().map(|(d, _)| *d).collect(),
        values: rows.into_iter().map(|(_, v)| v).collect(),
        class_sizes: sizes,
        group_order: group.len(),
        identity_class: id,
    };
    let ok = table.row_orthogonality_deviation() <= CONSTRUCTION_TOL
        && table.column_orthogonality_deviation() <= CONSTRUCTION_TOL
        && table.sum_of_squared_dims() == group.len() as u64
        && table.trivial_irreps().len() == 1;
    ok.then_some(table)
}

/// Full character table; rows sorted by dimension, then values.
pub fn character_table(group: &FiniteSubgroup) -> Result<CharacterTable> {
    let constants = class_structure_constants(group);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(t) = attempt(group, &constants, &mut rng) {
            return Ok(t);
        }
    }
    Err(Error::CharacterTable(format!(
        "simultaneous diagonalization failed for {} after {MAX_ATTEMPTS} attempts",
        group.diagram_type()
    )))
}

/// Character of the defining representation on `C^2`: the embedded trace.
pub fn defining_character(group: &FiniteSubgroup) -> Vec<Complex64> {
    group.classes().iter().map(|c| c.trace.embed()).collect()
}

/// `det(g, R_k)` for `g` in class `j`, from the power sums `χ_k(g^m)` by Newton's
/// identities.
pub fn det_character(
    table: &CharacterTable,
    group: &FiniteSubgroup,
    irrep: usize,
    class: usize,
) -> Complex64 {
    let d = table.dims[irrep] as usize;
    let p: Vec<Complex64> = (1..=d)
        .map(|m| table.values[irrep][group.power_map(class, m as i64)])
        .collect();
    let mut e = vec![Complex64::new(1.0, 0.0)];
    for m in 1..=d {
        let s: Complex64 = (1..=m)
            .map(|i| {
                let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
                e[m - i] * p[i - 1] * sign
            })
            .sum();
        e.push(s / m as f64);
    }
    e[d]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DiagramType;
    use crate::su2group::FiniteSubgroup;

    fn table(ty: DiagramType) -> (FiniteSubgroup, CharacterTable) {
        let g = FiniteSubgroup::generate(ty).unwrap();
        let t = character_table(&g).unwrap();
        (g, t)
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-9
    }

    #[test]
    fn z2_table() {
        let (g, t) = table(DiagramType::a(1).unwrap());
        let minus = g.class_of(g.minus_one().unwrap());
        assert_eq!(t.dims, vec![1, 1]);
        assert!(close(t.values[0][minus], 1.0.into()));
        assert!(close(t.values[1][minus], (-1.0).into()));
    }

    #[test]
    fn dimension_multisets() {
        let dims = |ty| table(ty).1.dims;
        assert_eq!(
            dims(DiagramType::e(8).unwrap()),
            vec![1, 2, 2, 3, 3, 4, 4, 5, 6]
        );
        assert_eq!(dims(DiagramType::d(4).unwrap()), vec![1, 1, 1, 1, 2]);
        assert_eq!(
            dims(DiagramType::e(7).unwrap()),
            vec![1, 1, 2, 2, 2, 3, 3, 4]
        );
    }

    #[test]
    fn orthogonality_over_the_sweep() {
        for ty in DiagramType::sweep() {
            let (g, t) = table(ty);
            assert!(t.row_orthogonality_deviation() <= CONSTRUCTION_TOL, "{ty}");
            assert!(
                t.column_orthogonality_deviation() <= CONSTRUCTION_TOL,
                "{ty}"
            );
            assert_eq!(t.sum_of_squared_dims(), g.len() as u64);
            assert_eq!(t.trivial_irreps(), vec![0]);
            // χ(g^{-1}) = conj χ(g)
            for row in &t.values {
                for (j, c) in g.classes().iter().enumerate() {
                    let inv = g.class_of(g.inv(c.representative));
                    assert!(close(row[inv], row[j].conj()));
                }
            }
        }
    }

    #[test]
    fn defining_character_values() {
        let g = FiniteSubgroup::generate(DiagramType::e(6).unwrap()).unwrap();
        let chi = defining_character(&g);
        assert!(close(chi[g.identity_class()], 2.0.into()));
        assert!(close(
            chi[g.class_of(g.minus_one().unwrap())],
            (-2.0).into()
        ));
        assert!(chi.iter().all(|v| v.im.abs() < 1e-12));
    }

    #[test]
    fn tensor_with_defining_representation() {
        let (g, t) = table(DiagramType::a(1).unwrap());
        let e = defining_character(&g);
        assert_eq!(t.tensor_multiplicities(0, &e).unwrap(), vec![0, 2]);

        let (g, t) = table(DiagramType::e(8).unwrap());
        let e = defining_character(&g);
        let mut matrix = Vec::new();
        for a in 0..t.irrep_count() {
            let row = t.tensor_multiplicities(a, &e).unwrap();
            let weighted: i64 = row.iter().zip(&t.dims).map(|(m, &d)| m * d as i64).sum();
            assert_eq!(weighted, 2 * t.dims[a] as i64);
            matrix.push(row);
        }
        for a in 0..matrix.len() {
            for b in 0..matrix.len() {
                assert_eq!(matrix[a][b], matrix[b][a]);
            }
        }
        // trivial ⊗ E = E, and E is the unique 2-dimensional irrep with χ = χ_E
        let row = &matrix[0];
        assert_eq!(row.iter().sum::<i64>(), 1);
        let target = row.iter().position(|&m| m == 1).unwrap();
        for (j, v) in t.values[target].iter().enumerate() {
            assert!(close(*v, e[j]));
        }
    }

    #[test]
    fn determinant_characters() {
        for ty in [
            DiagramType::e(6).unwrap(),
            DiagramType::d(5).unwrap(),
            DiagramType::a(4).unwrap(),
        ] {
            let (g, t) = table(ty);
            let index = crate::dynkin::cartan(ty).connection_index as f64;
            for k in 0..t.irrep_count() {
                assert!(close(
                    det_character(&t, &g, k, g.identity_class()),
                    1.0.into()
                ));
                for j in 0..t.class_count() {
                    let d = det_character(&t, &g, k, j);
                    assert!((d.norm() - 1.0).abs() < PHASE_TOL, "{ty} {k} {j}");
                    // a (det C)-th root of unity
                    let turns = d.arg() * index / (2.0 * std::f64::consts::PI);
                    assert!((turns - turns.round()).abs() < PHASE_TOL);
                }
                // multiplicative on commuting pairs
                for a in 0..g.len() {
                    for b in (0..g.len()).step_by(3) {
                        if g.commutes(a, b) {
                            let lhs = det_character(&t, &g, k, g.class_of(g.mul(a, b)));
                            let rhs = det_character(&t, &g, k, g.class_of(a))
                                * det_character(&t, &g, k, g.class_of(b));
                            assert!((lhs - rhs).norm() < PHASE_TOL);
                        }
                    }
                }
            }
            let trivial = t.trivial_irreps()[0];
            for j in 0..t.class_count() {
                assert!(close(det_character(&t, &g, trivial, j), 1.0.into()));
            }
        }
    }

    #[test]
    fn det_of_minus_identity_on_defining_rep() {
        let (g, t) = table(DiagramType::e(7).unwrap());
        let e = defining_character(&g);
        let irrep = (0..t.irrep_count())
            .find(|&a| t.values[a].iter().zip(&e).all(|(x, y)| close(*x, *y)))
            .unwrap();
        let minus = g.class_of(g.minus_one().unwrap());
        assert!(close(det_character(&t, &g, irrep, minus), 1.0.into()));
    }
}
