//! The McKay graph of a finite subgroup of SU(2) and its identification with the
//! affine diagram.

use num_complex::Complex64;

use crate::characters::{defining_character, CharacterTable, INTEGRALITY_TOL};
use crate::dynkin::{affine_extend, AffineDiagram, Diagram, DiagramType, Family};
use crate::error::{Error, Result};
use crate::isomorphism::{are_isomorphic, isomorphisms, remove_vertex};
use crate::linalg::IntMatrix;
use crate::su2group::FiniteSubgroup;

/// Edge multiplicities `a_ij` = multiplicity of `R_j` in `R_i ⊗ E`, over the
/// rows of a character table.
#[derive(Clone, Debug)]
pub struct McKayGraph {
    pub adjacency: IntMatrix,
    pub dims: Vec<u64>,
    pub trivial: usize,
}

impl McKayGraph {
    pub fn is_symmetric(&self) -> bool {
        let n = self.adjacency.len();
        (0..n).all(|i| (0..n).all(|j| self.adjacency[i][j] == self.adjacency[j][i]))
    }

    pub fn has_loops(&self) -> bool {
        (0..self.adjacency.len()).any(|i| self.adjacency[i][i] != 0)
    }

    /// `Σ_j a_ij d_j = 2 d_i` for every `i`.
    pub fn dimension_rule_holds(&self) -> bool {
        self.adjacency.iter().zip(&self.dims).all(|(row, &di)| {
            row.iter()
                .zip(&self.dims)
                .map(|(&a, &d)| a * d as i64)
                .sum::<i64>()
                == 2 * di as i64
        })
    }
}

pub fn mckay_graph(group: &FiniteSubgroup, table: &CharacterTable) -> Result<McKayGraph> {
    let e = defining_character(group);
    let adjacency = (0..table.irrep_count())
        .map(|a| table.tensor_multiplicities(a, &e))
        .collect::<Result<IntMatrix>>()?;
    let trivial = *table
        .trivial_irreps()
        .first()
        .ok_or_else(|| Error::CharacterTable("no trivial character".into()))?;
    Ok(McKayGraph {
        adjacency,
        dims: table.dims.clone(),
        trivial,
    })
}

/// `map[i]` is the irrep attached to affine vertex `v_i`; `v_0` is index 0 and
/// finite vertex `k` is index `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexIrrepBijection {
    pub map: Vec<usize>,
}

impl VertexIrrepBijection {
    /// Irrep attached to finite-diagram vertex `k` (0-based).
    pub fn irrep_of_vertex(&self, k: usize) -> usize {
        self.map[k + 1]
    }
}

fn carries(affine: &AffineDiagram, graph: &McKayGraph, map: &[usize]) -> bool {
    let n = map.len();
    (0..n).all(|i| (0..n).all(|j| affine.adjacency[i][j] == graph.adjacency[map[i]][map[j]]))
}

/// Orientation for `A_n`: `v_k` carries the irrep whose value at the generator
/// `x = diag(ζ, ζ^{-1})` is `ζ^{-k}`, `ζ = exp(2πi/(n+1))`.
fn cyclic_bijection(group: &FiniteSubgroup, table: &CharacterTable) -> Option<Vec<usize>> {
    let n = group.len();
    let x = group.class_of(group.generators()[0]);
    (0..n)
        .map(|k| {
            let angle = -2.0 * std::f64::consts::PI * k as f64 / n as f64;
            let target = Complex64::from_polar(1.0, angle);
            (0..table.irrep_count())
                .find(|&a| (table.values[a][x] - target).norm() < INTEGRALITY_TOL)
        })
        .collect()
}

/// Identifies the affine diagram with the McKay graph, sending `v_0` to the
/// trivial irrep and each mark to the matching dimension. Among several valid
/// isomorphisms the lexicographically least is taken, except for `A_n` where the
/// cycle orientation is fixed by the generator.
pub fn match_affine(
    group: &FiniteSubgroup,
    table: &CharacterTable,
    graph: &McKayGraph,
) -> Result<VertexIrrepBijection> {
    let ty = group.diagram_type();
    let affine = affine_extend(ty);
    let map = if ty.family() == Family::A {
        cyclic_bijection(group, table).filter(|m| carries(&affine, graph, m))
    } else {
        isomorphisms(&affine.adjacency, &graph.adjacency, |i, w| {
            (i != 0 || w == graph.trivial) && affine.marks[i] == graph.dims[w] as i64
        })
        .into_iter()
        .next()
    };
    map.map(|map| VertexIrrepBijection { map })
        .ok_or(Error::NoIsomorphism(ty))
}

/// Outcome of the McKay checks for one group.
#[derive(Clone, Debug)]
pub struct McKayReport {
    pub symmetric: bool,
    pub loop_free: bool,
    pub dimension_rule: bool,
    pub isomorphic: bool,
    pub trivial_at_v0: bool,
    pub dims_equal_marks: bool,
    pub finite_part_isomorphic: bool,
}

impl McKayReport {
    pub fn passes(&self) -> bool {
        self.symmetric
            && self.loop_free
            && self.dimension_rule
            && self.isomorphic
            && self.trivial_at_v0
            && self.dims_equal_marks
            && self.finite_part_isomorphic
    }
}

pub fn verify_mckay(
    ty: DiagramType,
    graph: &McKayGraph,
    bijection: &VertexIrrepBijection,
) -> McKayReport {
    let affine = affine_extend(ty);
    let finite = Diagram::new(ty);
    McKayReport {
        symmetric: graph.is_symmetric(),
        loop_free: !graph.has_loops(),
        dimension_rule: graph.dimension_rule_holds(),
        isomorphic: carries(&affine, graph, &bijection.map),
        trivial_at_v0: bijection.map[0] == graph.trivial,
        dims_equal_marks: bijection
            .map
            .iter()
            .zip(&affine.marks)
            .all(|(&a, &m)| graph.dims[a] as i64 == m),
        finite_part_isomorphic: are_isomorphic(
            &remove_vertex(&graph.adjacency, graph.trivial),
            finite.adjacency(),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::character_table;

    fn build(ty: DiagramType) -> (FiniteSubgroup, CharacterTable, McKayGraph) {
        let g = FiniteSubgroup::generate(ty).unwrap();
        let t = character_table(&g).unwrap();
        let m = mckay_graph(&g, &t).unwrap();
        (g, t, m)
    }

    #[test]
    fn z2_has_a_double_edge() {
        let (g, t, m) = build(DiagramType::a(1).unwrap());
        assert_eq!(m.adjacency, vec![vec![0, 2], vec![2, 0]]);
        let b = match_affine(&g, &t, &m).unwrap();
        assert_eq!(b.map, vec![0, 1]);
    }

    #[test]
    fn cyclic_groups_give_cycles() {
        for n in 2..=8 {
            let ty = DiagramType::a(n).unwrap();
            let (g, t, m) = build(ty);
            for row in &m.adjacency {
                assert_eq!(row.iter().filter(|&&a| a == 1).count(), 2);
                assert_eq!(row.iter().sum::<i64>(), 2);
            }
            let b = match_affine(&g, &t, &m).unwrap();
            assert!(verify_mckay(ty, &m, &b).passes());
        }
    }

    #[test]
    fn d4_center_carries_the_two_dimensional_irrep() {
        let ty = DiagramType::d(4).unwrap();
        let (g, t, m) = build(ty);
        let b = match_affine(&g, &t, &m).unwrap();
        let center = Diagram::new(ty).center().unwrap();
        assert_eq!(t.dims[b.irrep_of_vertex(center)], 2);
    }

    #[test]
    fn e7_long_branch_dimensions() {
        let ty = DiagramType::e(7).unwrap();
        let (g, t, m) = build(ty);
        let b = match_affine(&g, &t, &m).unwrap();
        let affine = affine_extend(ty);
        // walk from v_0 to the trivalent vertex
        let center = Diagram::new(ty).center().unwrap() + 1;
        let mut path = vec![0usize];
        let mut prev = usize::MAX;
        while *path.last().unwrap() != center {
            let cur = *path.last().unwrap();
            let next = (0..affine.adjacency.len())
                .find(|&w| w != prev && affine.adjacency[cur][w] != 0)
                .unwrap();
            prev = cur;
            path.push(next);
        }
        let dims: Vec<u64> = path.iter().map(|&v| t.dims[b.map[v]]).collect();
        assert_eq!(dims, vec![1, 2, 3, 4]);
    }

    #[test]
    fn whole_sweep_matches_affine_diagrams() {
        for ty in DiagramType::sweep() {
            let (g, t, m) = build(ty);
            let b = match_affine(&g, &t, &m).unwrap();
            let report = verify_mckay(ty, &m, &b);
            assert!(report.passes(), "{ty}: {report:?}");
        }
    }
}
