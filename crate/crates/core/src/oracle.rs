//! Brute-force recomputation of group invariants straight from the generator
//! matrices: naive closure, exact products for every pair, conjugation over all
//! elements. Nothing is shared with [`FiniteSubgroup`] beyond the generators, so
//! agreement between the two is a meaningful cross-check.

use std::collections::BTreeSet;

use crate::dynkin::DiagramType;
use crate::su2group::{generators, FiniteSubgroup, GroupElement};

#[derive(Clone, Debug)]
pub struct OracleGroup {
    pub elements: Vec<GroupElement>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

fn position(list: &[GroupElement], g: &GroupElement) -> Option<usize> {
    list.iter().position(|h| h == g)
}

impl OracleGroup {
    pub fn build(ty: DiagramType) -> OracleGroup {
        let gens = generators(ty);
        let order = gens[0].entries[0].order();
        let mut elements = vec![GroupElement::identity(order)];
        let mut i = 0;
        while i < elements.len() {
            for s in &gens {
                let p = elements[i].mul(s);
                if position(&elements, &p).is_none() {
                    elements.push(p);
                }
            }
            i += 1;
        }
        let table = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| position(&elements, &a.mul(b)).expect("closed under products"))
                    .collect()
            })
            .collect();
        OracleGroup {
            elements,
            table,
            identity: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn inverse(&self, a: usize) -> usize {
        (0..self.len())
            .find(|&b| self.table[a][b] == self.identity)
            .expect("every element has an inverse")
    }

    /// Classes as sorted index sets, sorted among themselves.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let class: BTreeSet<usize> = (0..n)
                .map(|g| self.table[self.table[g][x]][self.inverse(g)])
                .collect();
            for &y in &class {
                seen[y] = true;
            }
            out.push(class.into_iter().collect());
        }
        out.sort();
        out
    }

    pub fn center(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&z| (0..n).all(|g| self.table[z][g] == self.table[g][z]))
            .collect()
    }

    /// `(|G^ab|, exponent of G^ab)`.
    pub fn abelianization(&self) -> (usize, u64) {
        let n = self.len();
        let mut derived: BTreeSet<usize> = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                let ab = self.table[a][b];
                let ba = self.table[b][a];
                derived.insert(self.table[ab][self.inverse(ba)]);
            }
        }
        loop {
            let products: Vec<usize> = derived
                .iter()
                .flat_map(|&a| derived.iter().map(move |&b| (a, b)))
                .map(|(a, b)| self.table[a][b])
                .collect();
            let before = derived.len();
            derived.extend(products);
            if derived.len() == before {
                break;
            }
        }
        let mut exponent = 1u64;
        for g in 0..n {
            let mut x = g;
            let mut m = 1u64;
            while !derived.contains(&x) {
                x = self.table[x][g];
                m += 1;
            }
            exponent = num_integer::lcm(exponent, m);
        }
        (n / derived.len(), exponent)
    }
}

#[derive(Clone, Debug)]
pub struct OracleComparison {
    pub order_matches: bool,
    pub classes_match: bool,
    pub center_matches: bool,
    pub abelianization_matches: bool,
    pub mismatches: Vec<String>,
}

impl OracleComparison {
    pub fn passes(&self) -> bool {
        self.order_matches
            && self.classes_match
            && self.center_matches
            && self.abelianization_matches
    }
}

/// Compares classes, center and abelianization of `group` with the brute-force
/// recomputation, translating between the two element orderings by matrix
/// equality.
pub fn compare_with_oracle(group: &FiniteSubgroup) -> OracleComparison {
    let oracle = OracleGroup::build(group.diagram_type());
    let mut mismatches = Vec::new();
    let order_matches = oracle.len() == group.len();
    if !order_matches {
        mismatches.push(format!("order {} vs {}", oracle.len(), group.len()));
        return OracleComparison {
            order_matches,
            classes_match: false,
            center_matches: false,
            abelianization_matches: false,
            mismatches,
        };
    }
    let translate: Vec<Option<usize>> = oracle
        .elements
        .iter()
        .map(|g| position(group.elements(), g))
        .collect();
    if translate.iter().any(Option::is_none) {
        mismatches.push("element sets differ".into());
    }
    let to_main =
        |set: &[usize]| -> BTreeSet<usize> { set.iter().filter_map(|&i| translate[i]).collect() };

    let ours: BTreeSet<BTreeSet<usize>> = oracle.classes().iter().map(|c| to_main(c)).collect();
    let theirs: BTreeSet<BTreeSet<usize>> = group
        .classes()
        .iter()
        .map(|c| c.members.iter().copied().collect())
        .collect();
    let classes_match = ours == theirs;
    if !classes_match {
        mismatches.push(format!("{} oracle classes vs {}", ours.len(), theirs.len()));
    }

    let center_matches = to_main(&oracle.center()) == group.center().into_iter().collect();
    if !center_matches {
        mismatches.push("centers differ".into());
    }

    let (ab_order, ab_exponent) = oracle.abelianization();
    let ab = group.abelianization();
    let abelianization_matches = ab_order == ab.order && ab_exponent == ab.exponent;
    if !abelianization_matches {
        mismatches.push(format!(
            "abelianization ({ab_order}, {ab_exponent}) vs ({}, {})",
            ab.order, ab.exponent
        ));
    }

    OracleComparison {
        order_matches,
        classes_match,
        center_matches,
        abelianization_matches,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_tetrahedral_by_brute_force() {
        let g = OracleGroup::build(DiagramType::e(6).unwrap());
        assert_eq!(g.len(), 24);
        let sizes: Vec<usize> = {
            let mut s: Vec<usize> = g.classes().iter().map(Vec::len).collect();
            s.sort();
            s
        };
        assert_eq!(sizes, vec![1, 1, 4, 4, 4, 4, 6]);
        assert_eq!(g.center().len(), 2);
        assert_eq!(g.abelianization(), (3, 3));
    }

    #[test]
    fn quaternion_group() {
        let g = OracleGroup::build(DiagramType::d(4).unwrap());
        assert_eq!(g.len(), 8);
        assert_eq!(g.classes().len(), 5);
        assert_eq!(g.abelianization(), (4, 2));
    }

    #[test]
    fn agrees_with_main_construction_on_small_groups() {
        for ty in [
            DiagramType::a(5).unwrap(),
            DiagramType::d(5).unwrap(),
            DiagramType::e(7).unwrap(),
        ] {
            let g = FiniteSubgroup::generate(ty).unwrap();
            let cmp = compare_with_oracle(&g);
            assert!(cmp.passes(), "{ty}: {:?}", cmp.mismatches);
        }
    }
}
