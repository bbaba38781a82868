//! The dual correspondence: diagram vertices labeled by non-trivial conjugacy
//! classes, built from a special triple and checked statement by statement.

use std::collections::BTreeSet;

use crate::dynkin::{Diagram, Family};
use crate::error::{Error, Result};
use crate::su2group::FiniteSubgroup;

/// Generators attached to the ends of the diagram.
///
/// For `D_n`/`E_n`: `x, y, z` with `x^{m_1} = y^{m_2} = z^{m_3} = xyz = c`,
/// `c = -I`, where `m_i` counts the vertices on branch `i` including the
/// trivalent one. For `A_n`: the generator `x` and its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialTriple {
    pub elements: Vec<usize>,
    pub branch_orders: Vec<u64>,
    pub central: Option<usize>,
}

impl SpecialTriple {
    /// Human-readable form of the relations actually realized.
    pub fn pattern(&self) -> String {
        const NAMES: [&str; 3] = ["x", "y", "z"];
        match self.central {
            Some(_) => {
                let powers: Vec<String> = self
                    .branch_orders
                    .iter()
                    .zip(NAMES)
                    .map(|(m, n)| format!("{n}^{m}"))
                    .collect();
                format!("{} = xyz = -1", powers.join(" = "))
            }
            None => format!("x^{} = 1, x·x^-1 = 1", self.branch_orders[0]),
        }
    }
}

/// Searches element pairs `(x, y)` in index order, sets `z = (xy)^{-1}·(-I)` and
/// accepts the first triple with the branch orders of the diagram that generates
/// the group and labels the diagram bijectively.
pub fn find_special_triple(group: &FiniteSubgroup, diagram: &Diagram) -> Result<SpecialTriple> {
    let ty = group.diagram_type();
    if ty.family() == Family::A {
        let x = group.generators()[0];
        return Ok(SpecialTriple {
            elements: vec![x, group.inv(x)],
            branch_orders: vec![group.order_of(x)],
            central: None,
        });
    }
    let c = group.minus_one().ok_or(Error::NoSpecialTriple(ty))?;
    let m: Vec<u64> = diagram.branches().iter().map(|b| b.len() as u64).collect();
    let n = group.len();
    for x in (0..n).filter(|&x| group.order_of(x) == 2 * m[0]) {
        for y in (0..n).filter(|&y| group.order_of(y) == 2 * m[1]) {
            let z = group.mul(group.inv(group.mul(x, y)), c);
            if group.order_of(z) != 2 * m[2] {
                continue;
            }
            let triple = SpecialTriple {
                elements: vec![x, y, z],
                branch_orders: m.clone(),
                central: Some(c),
            };
            if triple_relations_hold(group, &triple)
                && group.generates(&triple.elements)
                && dual_labeling(group, diagram, &triple).is_ok()
            {
                return Ok(triple);
            }
        }
    }
    Err(Error::NoSpecialTriple(ty))
}

/// `g_i^{m_i} = g_1 g_2 g_3 = c`, `c^2 = 1`, `c ≠ 1`; or `x x^{-1} = 1` for `A_n`.
pub fn triple_relations_hold(group: &FiniteSubgroup, triple: &SpecialTriple) -> bool {
    let e = &triple.elements;
    match triple.central {
        Some(c) => {
            let product = group.mul(group.mul(e[0], e[1]), e[2]);
            product == c
                && c != group.identity()
                && group.mul(c, c) == group.identity()
                && e.iter()
                    .zip(&triple.branch_orders)
                    .all(|(&g, &m)| group.pow(g, m as i64) == c)
        }
        None => group.mul(e[0], e[1]) == group.identity(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualLabeling {
    /// Class index for each finite-diagram vertex.
    pub map: Vec<usize>,
    pub special_classes: Vec<usize>,
    pub central_class: Option<usize>,
}

impl DualLabeling {
    pub fn class_of_vertex(&self, v: usize) -> usize {
        self.map[v]
    }
}

/// Powers of each end generator along its branch; `c` at the trivalent vertex.
pub fn dual_labeling(
    group: &FiniteSubgroup,
    diagram: &Diagram,
    triple: &SpecialTriple,
) -> Result<DualLabeling> {
    let ty = group.diagram_type();
    let r = diagram.len();
    let mut map = vec![usize::MAX; r];
    let mut special = BTreeSet::new();
    let central_class = triple.central.map(|c| group.class_of(c));
    if diagram.branches().is_empty() {
        let x = triple.elements[0];
        for (v, slot) in map.iter_mut().enumerate() {
            *slot = group.class_of(group.pow(x, v as i64 + 1));
        }
        special.extend(triple.elements.iter().map(|&g| group.class_of(g)));
    } else {
        for (branch, &g) in diagram.branches().iter().zip(&triple.elements) {
            special.insert(group.class_of(g));
            for (t, &v) in branch.iter().enumerate() {
                let class = group.class_of(group.pow(g, t as i64 + 1));
                if map[v] != usize::MAX && map[v] != class {
                    return Err(Error::LabelingNotBijective(ty));
                }
                map[v] = class;
            }
        }
    }
    let distinct: BTreeSet<usize> = map.iter().copied().collect();
    if distinct.len() != r || distinct.contains(&group.identity_class()) {
        return Err(Error::LabelingNotBijective(ty));
    }
    Ok(DualLabeling {
        map,
        special_classes: special.into_iter().collect(),
        central_class,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatementResult {
    pub statement: u8,
    pub holds: bool,
    pub witness: Option<String>,
}

impl StatementResult {
    fn new(statement: u8, failures: Vec<String>) -> Self {
        StatementResult {
            statement,
            holds: failures.is_empty(),
            witness: (!failures.is_empty()).then(|| failures.join("; ")),
        }
    }
}

/// Results for statements (1)-(6); (3) and (5) are vacuous for `A_n`.
#[derive(Clone, Debug)]
pub struct DualReport {
    pub statements: Vec<StatementResult>,
}

impl DualReport {
    pub fn passes(&self) -> bool {
        self.statements.iter().all(|s| s.holds)
    }

    pub fn statement(&self, k: u8) -> &StatementResult {
        &self.statements[k as usize - 1]
    }
}

fn classes_commute(group: &FiniteSubgroup, a: usize, b: usize) -> bool {
    let ca = &group.classes()[a].members;
    let cb = &group.classes()[b].members;
    // conjugating a commuting pair keeps it commuting, so one representative of
    // the first class suffices
    let g = ca[0];
    cb.iter().any(|&h| group.commutes(g, h))
}

/// Unordered class pairs `{C_i, C_j}` (both non-trivial) for which some `g ∈ C_i`
/// and some `u` in a special class commute with `u g ∈ C_j`.
pub fn special_translate_relation(
    group: &FiniteSubgroup,
    special: &[usize],
) -> BTreeSet<(usize, usize)> {
    let id = group.identity_class();
    let mut out = BTreeSet::new();
    for (i, ci) in group.classes().iter().enumerate() {
        if i == id {
            continue;
        }
        for &g in &ci.members {
            for &s in special {
                for &u in &group.classes()[s].members {
                    if group.commutes(u, g) {
                        let j = group.class_of(group.mul(u, g));
                        if j != id {
                            out.insert((i.min(j), i.max(j)));
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn verify_dual_statements(
    group: &FiniteSubgroup,
    diagram: &Diagram,
    labeling: &DualLabeling,
    triple: &SpecialTriple,
) -> DualReport {
    let r = diagram.len();
    let id = group.identity_class();
    let label = |v: usize| labeling.map[v];
    let mut statements = Vec::new();

    // (1)
    let mut failures = Vec::new();
    let hit: BTreeSet<usize> = labeling.map.iter().copied().collect();
    if hit.len() != r {
        failures.push(format!("{} distinct classes for {r} vertices", hit.len()));
    }
    if hit.contains(&id) {
        failures.push("identity class is labeled".into());
    }
    if group.class_count() != r + 1 {
        failures.push(format!("{} classes for {r} vertices", group.class_count()));
    }
    statements.push(StatementResult::new(1, failures));

    // (2)
    let ends: BTreeSet<usize> = diagram.ends().iter().map(|&v| label(v)).collect();
    let special: BTreeSet<usize> = triple.elements.iter().map(|&g| group.class_of(g)).collect();
    let failures = if ends == special {
        Vec::new()
    } else {
        vec![format!(
            "end classes {ends:?} vs special classes {special:?}"
        )]
    };
    statements.push(StatementResult::new(2, failures));

    // (3)
    let mut failures = Vec::new();
    if let Some(center) = diagram.center() {
        let class = &group.classes()[label(center)];
        if class.members != [group.minus_one().unwrap_or(usize::MAX)] {
            failures.push(format!(
                "central vertex class has members {:?}",
                class.members
            ));
        }
    }
    statements.push(StatementResult::new(3, failures));

    // (4)
    let mut failures = Vec::new();
    if diagram.branches().is_empty() {
        let x = group.class_of(triple.elements[0]);
        for v in 0..r {
            if label(v) != group.power_map(x, v as i64 + 1) {
                failures.push(format!("vertex {v} is not the {}-th power", v + 1));
            }
        }
    } else {
        let minus = group.minus_one().map(|m| group.class_of(m));
        for branch in diagram.branches() {
            let end = label(branch[0]);
            for (t, &v) in branch.iter().enumerate() {
                if label(v) != group.power_map(end, t as i64 + 1) {
                    failures.push(format!(
                        "vertex {v} breaks the progression from {}",
                        branch[0]
                    ));
                }
            }
            if Some(group.power_map(end, branch.len() as i64)) != minus {
                failures.push(format!("branch from {} does not end at -1", branch[0]));
            }
        }
    }
    statements.push(StatementResult::new(4, failures));

    // (5)
    let mut failures = Vec::new();
    if !diagram.branches().is_empty() {
        let same_branch = |i: usize, j: usize| {
            diagram
                .branches()
                .iter()
                .any(|b| b.contains(&i) && b.contains(&j))
        };
        for i in 0..r {
            for j in i + 1..r {
                let commuting = classes_commute(group, label(i), label(j));
                if commuting != same_branch(i, j) {
                    failures.push(format!(
                        "vertices ({i}, {j}): same branch {}, commuting representatives {commuting}",
                        same_branch(i, j)
                    ));
                }
            }
        }
    }
    statements.push(StatementResult::new(5, failures));

    // (6)
    let relation = special_translate_relation(group, &labeling.special_classes);
    let edges: BTreeSet<(usize, usize)> = (0..r)
        .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
        .filter(|&(i, j)| diagram.adjacency()[i][j] != 0)
        .map(|(i, j)| (label(i).min(label(j)), label(i).max(label(j))))
        .collect();
    let vertex_of = |class: usize| labeling.map.iter().position(|&c| c == class);
    let describe = |(a, b): (usize, usize)| match (vertex_of(a), vertex_of(b)) {
        (Some(i), Some(j)) => format!("({i}, {j})"),
        _ => format!("classes ({a}, {b})"),
    };
    let mut failures = Vec::new();
    for &p in relation.difference(&edges) {
        failures.push(format!("predicate holds on non-edge {}", describe(p)));
    }
    for &p in edges.difference(&relation) {
        failures.push(format!("predicate fails on edge {}", describe(p)));
    }
    statements.push(StatementResult::new(6, failures));

    DualReport { statements }
}

/// Greedy prefix-connected ordering: start at the first end (the end of the long
/// branch) and repeatedly add the smallest-index vertex adjacent to those placed.
pub fn canonical_ordering(diagram: &Diagram) -> Vec<usize> {
    greedy_ordering(diagram, diagram.ends()[0], false)
}

/// A second prefix-connected ordering, from the last end, preferring the
/// largest-index neighbor.
pub fn alternate_ordering(diagram: &Diagram) -> Vec<usize> {
    greedy_ordering(
        diagram,
        *diagram.ends().last().expect("diagrams have ends"),
        true,
    )
}

fn greedy_ordering(diagram: &Diagram, start: usize, largest_first: bool) -> Vec<usize> {
    let r = diagram.len();
    let mut placed = vec![false; r];
    let mut order = vec![start];
    placed[start] = true;
    while order.len() < r {
        let frontier =
            (0..r).filter(|&w| !placed[w] && order.iter().any(|&v| diagram.adjacency()[v][w] != 0));
        let next = if largest_first {
            frontier.max()
        } else {
            frontier.min()
        }
        .expect("diagrams are connected");
        placed[next] = true;
        order.push(next);
    }
    order
}

pub fn is_prefix_connected(diagram: &Diagram, order: &[usize]) -> bool {
    (1..order.len()).all(|k| {
        let v = order[k];
        order[..k].iter().any(|&w| diagram.adjacency()[v][w] != 0)
    })
}

#[derive(Clone, Debug)]
pub struct MumfordRepresentatives {
    pub ordering: Vec<usize>,
    /// Element index for each vertex.
    pub reps: Vec<usize>,
    pub relations_hold: bool,
    pub adjacent_commute: bool,
    pub generates: bool,
    /// Whether `g_i^2` equals the neighbor product in every order, not just the
    /// canonical one.
    pub order_independent: bool,
}

impl MumfordRepresentatives {
    pub fn passes(&self) -> bool {
        self.relations_hold && self.adjacent_commute && self.generates
    }
}

/// Neighbors of `v` sorted by position in `ordering`.
fn ordered_neighbors(diagram: &Diagram, ordering: &[usize], v: usize) -> Vec<usize> {
    let mut n = diagram.neighbors(v);
    n.sort_by_key(|w| ordering.iter().position(|x| x == w));
    n
}

fn product(group: &FiniteSubgroup, elems: impl IntoIterator<Item = usize>) -> usize {
    elems
        .into_iter()
        .fold(group.identity(), |acc, g| group.mul(acc, g))
}

fn relation_holds(
    group: &FiniteSubgroup,
    diagram: &Diagram,
    ordering: &[usize],
    reps: &[usize],
    v: usize,
) -> bool {
    let square = group.mul(reps[v], reps[v]);
    let nbrs = ordered_neighbors(diagram, ordering, v);
    square == product(group, nbrs.iter().map(|&w| reps[w]))
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Backtracking search for `g_v ∈ C_v` with `g_i^2 = g_j g_k ⋯` (neighbors in
/// ordering order) and commuting adjacent representatives, generating `G`.
pub fn find_mumford_representatives(
    group: &FiniteSubgroup,
    diagram: &Diagram,
    labeling: &DualLabeling,
    ordering: &[usize],
) -> Result<MumfordRepresentatives> {
    let r = diagram.len();
    let mut reps = vec![usize::MAX; r];
    let mut placed = vec![false; r];
    let found = search(
        group,
        diagram,
        labeling,
        ordering,
        0,
        &mut reps,
        &mut placed,
    );
    if !found {
        return Err(Error::NoMumfordRepresentatives(group.diagram_type()));
    }
    let relations_hold = (0..r).all(|v| relation_holds(group, diagram, ordering, &reps, v));
    let adjacent_commute = (0..r).all(|v| {
        diagram
            .neighbors(v)
            .iter()
            .all(|&w| group.commutes(reps[v], reps[w]))
    });
    let order_independent = (0..r).all(|v| {
        let square = group.mul(reps[v], reps[v]);
        permutations(&diagram.neighbors(v))
            .iter()
            .all(|p| product(group, p.iter().map(|&w| reps[w])) == square)
    });
    Ok(MumfordRepresentatives {
        ordering: ordering.to_vec(),
        generates: group.generates(&reps),
        reps,
        relations_hold,
        adjacent_commute,
        order_independent,
    })
}

fn search(
    group: &FiniteSubgroup,
    diagram: &Diagram,
    labeling: &DualLabeling,
    ordering: &[usize],
    pos: usize,
    reps: &mut [usize],
    placed: &mut [bool],
) -> bool {
    if pos == ordering.len() {
        return group.generates(reps);
    }
    let v = ordering[pos];
    let class = &group.classes()[labeling.map[v]];
    for &g in &class.members {
        let compatible = diagram
            .neighbors(v)
            .iter()
            .filter(|&&w| placed[w])
            .all(|&w| group.commutes(g, reps[w]));
        if !compatible {
            continue;
        }
        reps[v] = g;
        placed[v] = true;
        // check (4-1) at every vertex whose closed neighborhood is now complete
        let mut closed = diagram.neighbors(v);
        closed.push(v);
        let ok = closed.iter().all(|&w| {
            !placed[w]
                || diagram.neighbors(w).iter().any(|&u| !placed[u])
                || relation_holds(group, diagram, ordering, reps, w)
        });
        if ok && search(group, diagram, labeling, ordering, pos + 1, reps, placed) {
            return true;
        }
        placed[v] = false;
        reps[v] = usize::MAX;
    }
    false
}

#[derive(Clone, Debug)]
pub struct PresentationReport {
    pub quotient_order: usize,
    pub orders_in_quotient: Vec<usize>,
    pub expected_orders: Vec<u64>,
    pub product_trivial_in_quotient: bool,
    pub quotient_generated: bool,
    pub relations_in_group: bool,
    pub group_generated: bool,
}

impl PresentationReport {
    pub fn passes(&self) -> bool {
        self.orders_in_quotient
            .iter()
            .zip(&self.expected_orders)
            .all(|(&a, &b)| a as u64 == b)
            && self.product_trivial_in_quotient
            && self.quotient_generated
            && self.relations_in_group
            && self.group_generated
    }
}

/// Images of the triple in `H = G/{±1}` satisfy `h_j^{m_j} = 1`, `h_1 h_2 h_3 = 1`
/// and generate `H`; in `G` the triple relations hold and the triple generates.
pub fn verify_presentation_relations(
    group: &FiniteSubgroup,
    triple: &SpecialTriple,
) -> PresentationReport {
    let h = group.quotient_by_center_pm1();
    let images: Vec<usize> = triple.elements.iter().map(|&g| h.coset_of[g]).collect();
    let product = images.iter().fold(h.identity, |acc, &x| h.mul(acc, x));
    let expected_orders = match triple.central {
        Some(_) => triple.branch_orders.clone(),
        None => {
            let m = h.order_of(images[0]) as u64;
            vec![m; images.len()]
        }
    };
    PresentationReport {
        quotient_order: h.len(),
        orders_in_quotient: images.iter().map(|&x| h.order_of(x)).collect(),
        expected_orders,
        product_trivial_in_quotient: product == h.identity,
        quotient_generated: h.generates(&images),
        relations_in_group: triple_relations_hold(group, triple),
        group_generated: group.generates(&triple.elements),
    }
}
