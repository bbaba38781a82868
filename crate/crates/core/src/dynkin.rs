//! Simply-laced Dynkin diagrams and exact Cartan-matrix algebra.
//!
//! Vertices are numbered `0..r`. Within each family the numbering is fixed: `A_n`
//! runs left to right; for `D_n` and `E_n` the longest arm comes first (from its end
//! toward the trivalent vertex), then the trivalent vertex, then the remaining arms,
//! each listed end first.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramType {
    family: Family,
    rank: usize,
}

impl DiagramType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let reason = match family {
            Family::A if rank < 1 => Some("A_n needs n >= 1"),
            Family::D if rank < 4 => Some("D_n needs n >= 4"),
            Family::E if !(6..=8).contains(&rank) => Some("E_n needs n in {6, 7, 8}"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidDiagram {
                family: family.letter(),
                rank,
                reason,
            }),
            None => Ok(DiagramType { family, rank }),
        }
    }

    pub fn a(n: usize) -> Result<Self> {
        Self::new(Family::A, n)
    }

    pub fn d(n: usize) -> Result<Self> {
        Self::new(Family::D, n)
    }

    pub fn e(n: usize) -> Result<Self> {
        Self::new(Family::E, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of the corresponding finite subgroup of SU(2).
    pub fn group_order(&self) -> usize {
        match (self.family, self.rank) {
            (Family::A, n) => n + 1,
            (Family::D, n) => 4 * n - 8,
            (Family::E, 6) => 24,
            (Family::E, 7) => 48,
            (Family::E, _) => 120,
        }
    }

    pub fn group_name(&self) -> &'static str {
        match (self.family, self.rank) {
            (Family::A, _) => "cyclic",
            (Family::D, _) => "binary dihedral",
            (Family::E, 6) => "binary tetrahedral",
            (Family::E, 7) => "binary octahedral",
            (Family::E, _) => "binary icosahedral",
        }
    }

    /// Arm lengths from the trivalent vertex (not counting it), longest first.
    fn arms(&self) -> Option<[usize; 3]> {
        match self.family {
            Family::A => None,
            Family::D => Some([self.rank - 3, 1, 1]),
            Family::E => Some([self.rank - 4, 2, 1]),
        }
    }

    /// The standard sweep: A_1..A_12, D_4..D_12, E_6, E_7, E_8.
    pub fn sweep() -> Vec<DiagramType> {
        let mut out: Vec<_> = (1..=12).map(|n| DiagramType::a(n).unwrap()).collect();
        out.extend((4..=12).map(|n| DiagramType::d(n).unwrap()));
        out.extend((6..=8).map(|n| DiagramType::e(n).unwrap()));
        out
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family.letter(), self.rank)
    }
}

impl FromStr for DiagramType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParseDiagram(s.to_string());
        let (fam, rank) = s.trim().split_once(':').ok_or_else(err)?;
        let family = match fam.trim() {
            "A" | "a" => Family::A,
            "D" | "d" => Family::D,
            "E" | "e" => Family::E,
            _ => return Err(err()),
        };
        let rank: usize = rank.trim().parse().map_err(|_| err())?;
        DiagramType::new(family, rank)
    }
}

/// A finite ADE diagram with its fixed vertex numbering.
#[derive(Clone, Debug)]
pub struct Diagram {
    ty: DiagramType,
    adjacency: IntMatrix,
    ends: Vec<usize>,
    center: Option<usize>,
    /// Paths from each end to the trivalent vertex, both inclusive; longest first.
    branches: Vec<Vec<usize>>,
}

impl Diagram {
    pub fn new(ty: DiagramType) -> Diagram {
        let r = ty.rank();
        let mut adjacency = vec![vec![0i64; r]; r];
        let mut join = |a: usize, b: usize| {
            adjacency[a][b] = 1;
            adjacency[b][a] = 1;
        };
        let (ends, center, branches) = match ty.arms() {
            None => {
                for v in 1..r {
                    join(v - 1, v);
                }
                let ends = if r == 1 { vec![0] } else { vec![0, r - 1] };
                (ends, None, Vec::new())
            }
            Some([long, second, third]) => {
                let center = long;
                let mut branches = Vec::new();
                let first: Vec<usize> = (0..=long).collect();
                for w in first.windows(2) {
                    join(w[0], w[1]);
                }
                branches.push(first);
                let mut next = center + 1;
                for len in [second, third] {
                    let mut path: Vec<usize> = (next..next + len).collect();
                    path.push(center);
                    for w in path.windows(2) {
                        join(w[0], w[1]);
                    }
                    next += len;
                    branches.push(path);
                }
                let ends = branches.iter().map(|b| b[0]).collect();
                (ends, Some(center), branches)
            }
        };
        Diagram {
            ty,
            adjacency,
            ends,
            center,
            branches,
        }
    }

    pub fn diagram_type(&self) -> DiagramType {
        self.ty
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn adjacency(&self) -> &IntMatrix {
        &self.adjacency
    }

    pub fn ends(&self) -> &[usize] {
        &self.ends
    }

    pub fn center(&self) -> Option<usize> {
        self.center
    }

    pub fn branches(&self) -> &[Vec<usize>] {
        &self.branches
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&w| self.adjacency[v][w] != 0)
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .map(|row| row.iter().sum::<i64>())
            .sum::<i64>() as usize
            / 2
    }

    /// All-pairs graph distances by breadth-first search.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        let r = self.len();
        (0..r)
            .map(|s| {
                let mut dist = vec![usize::MAX; r];
                dist[s] = 0;
                let mut queue = VecDeque::from([s]);
                while let Some(v) = queue.pop_front() {
                    for w in self.neighbors(v) {
                        if dist[w] == usize::MAX {
                            dist[w] = dist[v] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                dist
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.distances()
            .first()
            .is_none_or(|d| d.iter().all(|&x| x != usize::MAX))
    }

    /// Cartan matrix `2I - M`.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let r = self.len();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| if i == j { 2 } else { -self.adjacency[i][j] })
                    .collect()
            })
            .collect()
    }
}

pub fn build_diagram(ty: DiagramType) -> Diagram {
    Diagram::new(ty)
}

/// Exact Cartan data for one diagram.
#[derive(Clone, Debug)]
pub struct CartanData {
    pub cartan: IntMatrix,
    pub inverse: RatMatrix,
    pub connection_index: u64,
    pub highest_root: Vec<i64>,
    /// `m_0, …, m_r`; `m_0 = 1`.
    pub marks: Vec<i64>,
    /// Affine adjacency on `v_0, v_1, …, v_r` (index 0 is the extra vertex),
    /// with integer edge multiplicities.
    pub affine_adjacency: IntMatrix,
}

pub fn cartan(ty: DiagramType) -> CartanData {
    let diagram = Diagram::new(ty);
    let c = diagram.cartan_matrix();
    let det = linalg::bareiss_determinant(&c);
    let inverse = linalg::inverse(&linalg::to_rat(&c))
        .expect("Cartan matrices of finite type are invertible");
    let theta = highest_root(ty);
    let affine = affine_extend(ty);
    CartanData {
        cartan: c,
        inverse,
        connection_index: det
            .to_u64()
            .expect("connection index is a small positive integer"),
        highest_root: theta,
        marks: affine.marks,
        affine_adjacency: affine.adjacency,
    }
}

/// Simple reflection `s_i(x) = x - (Cx)_i e_i` in simple-root coordinates.
fn reflect(c: &IntMatrix, i: usize, x: &[i64]) -> Vec<i64> {
    let pairing: i64 = c[i].iter().zip(x).map(|(a, b)| a * b).sum();
    let mut y = x.to_vec();
    y[i] -= pairing;
    y
}

/// The full root system in simple-root coordinates, sorted by height then
/// lexicographically.
pub fn root_system(ty: DiagramType) -> Vec<Vec<i64>> {
    let c = Diagram::new(ty).cartan_matrix();
    let r = c.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        if seen.insert(e.clone()) {
            queue.push_back(e);
        }
    }
    while let Some(x) = queue.pop_front() {
        for i in 0..r {
            let y = reflect(&c, i, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut roots: Vec<_> = seen.into_iter().collect();
    roots.sort_by_key(|x| (x.iter().sum::<i64>(), x.clone()));
    roots
}

/// Squared length `x^T C x`.
pub fn root_norm(c: &IntMatrix, x: &[i64]) -> i64 {
    linalg::mat_vec_int(c, x)
        .iter()
        .zip(x)
        .map(|(a, b)| a * b)
        .sum()
}

/// The unique root of maximal height.
pub fn highest_root(ty: DiagramType) -> Vec<i64> {
    root_system(ty)
        .into_iter()
        .max_by_key(|x| x.iter().sum::<i64>())
        .expect("root systems are nonempty")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineDiagram {
    /// `(r+1) x (r+1)` multiplicities; index 0 is `v_0`.
    pub adjacency: IntMatrix,
    pub marks: Vec<i64>,
}

impl AffineDiagram {
    pub fn cartan_matrix(&self) -> IntMatrix {
        let n = self.adjacency.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { 2 } else { -self.adjacency[i][j] })
                    .collect()
            })
            .collect()
    }
}

/// Adds `v_0` with edge multiplicity `(θ, α_i) = (Cθ)_i` to each `v_i`.
pub fn affine_extend(ty: DiagramType) -> AffineDiagram {
    let diagram = Diagram::new(ty);
    let c = diagram.cartan_matrix();
    let theta = highest_root(ty);
    let pairing = linalg::mat_vec_int(&c, &theta);
    let r = diagram.len();
    let mut adjacency = vec![vec![0i64; r + 1]; r + 1];
    for i in 0..r {
        for j in 0..r {
            adjacency[i + 1][j + 1] = diagram.adjacency[i][j];
        }
        adjacency[0][i + 1] = pairing[i];
        adjacency[i + 1][0] = pairing[i];
    }
    let mut marks = vec![1];
    marks.extend(theta);
    AffineDiagram { adjacency, marks }
}

#[derive(Clone, Debug)]
pub struct InverseBoundReport {
    /// Every entry of `C^{-1}` is strictly positive.
    pub all_positive: bool,
    /// Minimum over `i != j` of `(C^{-1})_{ij} - 2^{1-d(i,j)}/3`.
    pub min_offdiagonal_slack: Option<BigRational>,
    pub offdiagonal_witness: Option<(usize, usize)>,
    /// Minimum over `i` of `(C^{-1})_{ii} - 2/3`; reported only.
    pub min_diagonal_slack: BigRational,
    pub diagonal_witness: usize,
}

impl InverseBoundReport {
    pub fn passes(&self) -> bool {
        self.all_positive
            && self
                .min_offdiagonal_slack
                .as_ref()
                .is_none_or(|s| !s.is_negative())
    }
}

/// Checks positivity of `C^{-1}` and the lower bound `2^{1-n}/3` at graph
/// distance `n`.
pub fn inverse_bound_check(ty: DiagramType) -> InverseBoundReport {
    let diagram = Diagram::new(ty);
    let data = cartan(ty);
    let dist = diagram.distances();
    let r = diagram.len();
    let bound = |n: usize| -> BigRational {
        // 2^{1-n} / 3
        let two = BigInt::from(2);
        if n == 0 {
            BigRational::new(two, BigInt::from(3))
        } else {
            BigRational::new(BigInt::one(), BigInt::from(3) * num_traits::pow(two, n - 1))
        }
    };
    let mut all_positive = true;
    let mut off: Option<(BigRational, (usize, usize))> = None;
    let mut diag: Option<(BigRational, usize)> = None;
    for i in 0..r {
        for j in 0..r {
            let v = &data.inverse[i][j];
            if !v.is_positive() {
                all_positive = false;
            }
            let slack = v - bound(dist[i][j]);
            if i == j {
                if diag.as_ref().is_none_or(|(s, _)| slack < *s) {
                    diag = Some((slack, i));
                }
            } else if off.as_ref().is_none_or(|(s, _)| slack < *s) {
                off = Some((slack, (i, j)));
            }
        }
    }
    let (min_diagonal_slack, diagonal_witness) = diag.expect("diagrams have a vertex");
    InverseBoundReport {
        all_positive,
        min_offdiagonal_slack: off.as_ref().map(|(s, _)| s.clone()),
        offdiagonal_witness: off.map(|(_, w)| w),
        min_diagonal_slack,
        diagonal_witness,
    }
}

/// Partial sum `(1/2) Σ_{n<terms} 2^{-n} M^n` in floating point.
pub fn neumann_partial_sum(ty: DiagramType, terms: usize) -> Vec<Vec<f64>> {
    let diagram = Diagram::new(ty);
    let r = diagram.len();
    let half: Vec<Vec<f64>> = diagram
        .adjacency
        .iter()
        .map(|row| row.iter().map(|&v| v as f64 / 2.0).collect())
        .collect();
    let mut power: Vec<Vec<f64>> = (0..r)
        .map(|i| (0..r).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut sum = vec![vec![0.0; r]; r];
    for _ in 0..terms {
        for i in 0..r {
            for j in 0..r {
                sum[i][j] += power[i][j] / 2.0;
            }
        }
        power = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| (0..r).map(|k| power[i][k] * half[k][j]).sum())
                    .collect()
            })
            .collect();
    }
    sum
}

/// Maximum entrywise deviation of the truncated Neumann series from the exact
/// inverse.
pub fn neumann_series_check(ty: DiagramType, terms: usize) -> f64 {
    let exact = cartan(ty).inverse;
    let approx = neumann_partial_sum(ty, terms.max(1));
    exact
        .iter()
        .zip(&approx)
        .flat_map(|(e, a)| {
            e.iter()
                .zip(a)
                .map(|(x, y)| (linalg::rat_to_f64(x) - y).abs())
        })
        .fold(0.0, f64::max)
}

/// Largest eigenvalue modulus of the adjacency matrix, `2 cos(π/h)`.
pub fn adjacency_spectral_radius(ty: DiagramType) -> f64 {
    let h = match (ty.family(), ty.rank()) {
        (Family::A, n) => n + 1,
        (Family::D, n) => 2 * n - 2,
        (Family::E, 6) => 12,
        (Family::E, 7) => 18,
        (Family::E, _) => 30,
    };
    2.0 * (std::f64::consts::PI / h as f64).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_constraints() {
        assert!(DiagramType::a(0).is_err());
        assert!(DiagramType::d(3).is_err());
        assert!(DiagramType::e(5).is_err());
        assert!(DiagramType::e(9).is_err());
        assert_eq!(
            "E:8".parse::<DiagramType>().unwrap(),
            DiagramType::e(8).unwrap()
        );
        assert!("A:0".parse::<DiagramType>().is_err());
        assert!("F:4".parse::<DiagramType>().is_err());
        assert!("A3".parse::<DiagramType>().is_err());
    }

    #[test]
    fn shapes() {
        let a3 = Diagram::new(DiagramType::a(3).unwrap());
        assert_eq!(a3.edge_count(), 2);
        assert_eq!(a3.ends(), &[0, 2]);
        assert!(a3.branches().is_empty());

        let d4 = Diagram::new(DiagramType::d(4).unwrap());
        assert_eq!(d4.center(), Some(1));
        assert_eq!(d4.degree(1), 3);
        assert_eq!(d4.ends().len(), 3);
        assert!(d4.ends().iter().all(|&e| d4.degree(e) == 1));

        let e8 = Diagram::new(DiagramType::e(8).unwrap());
        let center = e8.center().unwrap();
        let lens: Vec<usize> = e8.branches().iter().map(|b| b.len() - 1).collect();
        assert_eq!(lens, vec![4, 2, 1]);
        assert_eq!(e8.degree(center), 3);
        assert_eq!(e8.edge_count(), 7);
        assert!(e8.is_connected());
    }

    #[test]
    fn every_diagram_is_a_tree() {
        for ty in DiagramType::sweep() {
            let d = Diagram::new(ty);
            assert_eq!(d.edge_count(), d.len() - 1, "{ty}");
            assert!(d.is_connected(), "{ty}");
            let m = d.adjacency();
            for i in 0..d.len() {
                assert_eq!(m[i][i], 0);
                for j in 0..d.len() {
                    assert_eq!(m[i][j], m[j][i]);
                }
            }
            if ty.family() != Family::A {
                assert_eq!(d.ends().len(), 3);
                assert_eq!((0..d.len()).filter(|&v| d.degree(v) == 3).count(), 1);
            } else if ty.rank() >= 2 {
                assert_eq!(d.ends().len(), 2);
            }
        }
    }

    #[test]
    fn a2_cartan_and_inverse() {
        let data = cartan(DiagramType::a(2).unwrap());
        assert_eq!(data.cartan, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(
            data.inverse,
            vec![vec![q(2, 3), q(1, 3)], vec![q(1, 3), q(2, 3)]]
        );
        assert_eq!(data.connection_index, 3);
    }

    #[test]
    fn connection_indices() {
        let idx = |ty: DiagramType| cartan(ty).connection_index;
        assert_eq!(idx(DiagramType::e(8).unwrap()), 1);
        assert_eq!(idx(DiagramType::e(7).unwrap()), 2);
        assert_eq!(idx(DiagramType::e(6).unwrap()), 3);
        for n in 4..=12 {
            assert_eq!(idx(DiagramType::d(n).unwrap()), 4);
        }
        for n in 1..=12 {
            assert_eq!(idx(DiagramType::a(n).unwrap()), n as u64 + 1);
        }
    }

    #[test]
    fn a_inverse_is_minus_jk_over_n_plus_one_mod_one() {
        for n in 1..=12usize {
            let inv = cartan(DiagramType::a(n).unwrap()).inverse;
            for j in 1..=n {
                for k in 1..=n {
                    let diff = &inv[j - 1][k - 1] + q((j * k) as i64, n as i64 + 1);
                    assert!(diff.is_integer(), "A{n} ({j},{k})");
                }
            }
        }
    }

    #[test]
    fn root_counts() {
        assert_eq!(
            root_system(DiagramType::a(1).unwrap()),
            vec![vec![-1], vec![1]]
        );
        assert_eq!(root_system(DiagramType::a(2).unwrap()).len(), 6);
        assert_eq!(root_system(DiagramType::e(8).unwrap()).len(), 240);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(highest_root(DiagramType::a(2).unwrap()), vec![1, 1]);
        // center is vertex 1 under the fixed numbering
        assert_eq!(highest_root(DiagramType::d(4).unwrap()), vec![1, 2, 1, 1]);
        let e8 = highest_root(DiagramType::e(8).unwrap());
        assert_eq!(e8.iter().sum::<i64>(), 29);
        assert_eq!(*e8.iter().max().unwrap(), 6);
    }

    #[test]
    fn affine_extensions() {
        let a1 = affine_extend(DiagramType::a(1).unwrap());
        assert_eq!(a1.adjacency, vec![vec![0, 2], vec![2, 0]]);

        let a4 = affine_extend(DiagramType::a(4).unwrap());
        let v0: Vec<usize> = (1..5).filter(|&i| a4.adjacency[0][i] != 0).collect();
        assert_eq!(v0, vec![1, 4]);

        let ty = DiagramType::e(8).unwrap();
        let e8 = affine_extend(ty);
        let attached: Vec<usize> = (1..9).filter(|&i| e8.adjacency[0][i] != 0).collect();
        assert_eq!(attached.len(), 1);
        let v = attached[0] - 1;
        assert_eq!(e8.marks[v + 1], 2);
        assert!(Diagram::new(ty).ends().contains(&v));
    }

    #[test]
    fn bound_is_sharp_on_a2() {
        let rep = inverse_bound_check(DiagramType::a(2).unwrap());
        assert!(rep.passes());
        assert_eq!(rep.min_offdiagonal_slack, Some(BigRational::zero()));
        // diagonal of A1 would violate the distance-0 reading
        let a1 = inverse_bound_check(DiagramType::a(1).unwrap());
        assert!(a1.min_offdiagonal_slack.is_none());
        assert_eq!(a1.min_diagonal_slack, q(1, 2) - q(2, 3));
        assert!(inverse_bound_check(DiagramType::e(8).unwrap()).passes());
    }

    #[test]
    fn neumann_series_small_cases() {
        let a1 = neumann_partial_sum(DiagramType::a(1).unwrap(), 7);
        assert_eq!(a1, vec![vec![0.5]]);
        assert!(neumann_series_check(DiagramType::a(2).unwrap(), 200) <= 1e-6);
    }

    #[test]
    fn neumann_deviation_shrinks_with_terms() {
        let ty = DiagramType::d(5).unwrap();
        let devs: Vec<f64> = [10, 20, 40, 80, 160]
            .iter()
            .map(|&t| neumann_series_check(ty, t))
            .collect();
        assert!(devs.windows(2).all(|w| w[1] < w[0]), "{devs:?}");
    }

    fn walks(adj: &IntMatrix, from: usize, to: usize, len: usize) -> i64 {
        if len == 0 {
            return (from == to) as i64;
        }
        (0..adj.len())
            .filter(|&w| adj[from][w] != 0)
            .map(|w| walks(adj, w, to, len - 1))
            .sum()
    }

    #[test]
    fn adjacency_powers_count_walks() {
        for ty in [DiagramType::a(4).unwrap(), DiagramType::d(5).unwrap()] {
            let m = Diagram::new(ty).adjacency().clone();
            let mut p: IntMatrix = (0..m.len())
                .map(|i| (0..m.len()).map(|j| (i == j) as i64).collect())
                .collect();
            for n in 0..=6 {
                for i in 0..m.len() {
                    for j in 0..m.len() {
                        assert_eq!(p[i][j], walks(&m, i, j, n));
                    }
                }
                p = linalg::mul_int(&p, &m);
            }
        }
    }

    #[test]
    fn inverse_times_cartan_is_identity() {
        for ty in DiagramType::sweep() {
            let data = cartan(ty);
            let product = linalg::mul_rat(&linalg::to_rat(&data.cartan), &data.inverse);
            assert_eq!(product, linalg::identity_rat(ty.rank()), "{ty}");
        }
    }
}
