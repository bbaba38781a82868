//! Finite subgroups of SU(2) as explicit 2x2 matrices over a cyclotomic field.
//!
//! Generators are written as unit quaternions `a + bi + cj + dk`, realized as
//! `[[a + b·i, c + d·i], [-c + d·i, a - b·i]]` with `i = ζ_4`.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::cyclotomic::CyclotomicNumber;
use crate::dynkin::{DiagramType, Family};
use crate::error::{Error, Result};

/// Closure is abandoned past this many elements.
pub const CLOSURE_CAP: usize = 1000;

/// A 2x2 matrix `[[a, b], [c, d]]` over Q(ζ_N).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub entries: [CyclotomicNumber; 4],
}

impl GroupElement {
    pub fn identity(order: u64) -> Self {
        let one = CyclotomicNumber::one(order);
        let zero = CyclotomicNumber::zero(order);
        GroupElement {
            entries: [one.clone(), zero.clone(), zero, one],
        }
    }

    pub fn scalar(order: u64, v: i64) -> Self {
        let s = CyclotomicNumber::from_integer(order, v);
        let zero = CyclotomicNumber::zero(order);
        GroupElement {
            entries: [s.clone(), zero.clone(), zero, s],
        }
    }

    pub fn diagonal(a: CyclotomicNumber, d: CyclotomicNumber) -> Self {
        let zero = CyclotomicNumber::zero(a.order());
        GroupElement {
            entries: [a, zero.clone(), zero, d],
        }
    }

    /// The unit quaternion `a + bi + cj + dk`; the components must be real.
    pub fn quaternion(parts: [CyclotomicNumber; 4]) -> Self {
        let [a, b, c, d] = parts;
        let i = CyclotomicNumber::root_of_unity(4, 1).expect("4 > 0");
        let bi = &b * &i;
        let di = &d * &i;
        GroupElement {
            entries: [&a + &bi, &c + &di, &(-&c) + &di, &a - &bi],
        }
    }

    pub fn lift(&self, order: u64) -> Self {
        GroupElement {
            entries: self.entries.clone().map(|e| e.lift(order)),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &rhs.entries;
        GroupElement {
            entries: [
                &(a * e) + &(b * g),
                &(a * f) + &(b * h),
                &(c * e) + &(d * g),
                &(c * f) + &(d * h),
            ],
        }
    }

    pub fn det(&self) -> CyclotomicNumber {
        let [a, b, c, d] = &self.entries;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> CyclotomicNumber {
        &self.entries[0] + &self.entries[3]
    }

    pub fn conj_transpose(&self) -> Self {
        let [a, b, c, d] = &self.entries;
        GroupElement {
            entries: [a.conj(), c.conj(), b.conj(), d.conj()],
        }
    }

    pub fn is_unitary(&self) -> bool {
        let order = self.entries[0].order();
        self.mul(&self.conj_transpose()) == GroupElement::identity(order)
    }

    fn key(&self) -> Vec<BigRational> {
        self.entries
            .iter()
            .flat_map(|e| e.coeffs().iter().cloned())
            .collect()
    }
}

/// Field order `N` so that every generator entry lies in Q(ζ_N).
pub fn field_order(ty: DiagramType) -> u64 {
    match ty.family() {
        Family::A => 2 * (ty.rank() as u64 + 1),
        Family::D => 4u64.lcm(&(2 * (ty.rank() as u64 - 2))),
        Family::E if ty.rank() == 8 => 20,
        Family::E => 8,
    }
}

fn rational(order: u64, n: i64, d: i64) -> CyclotomicNumber {
    CyclotomicNumber::from_rational(order, BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// Generator matrices for the group attached to `ty`.
pub fn generators(ty: DiagramType) -> Vec<GroupElement> {
    let n = field_order(ty);
    let z = |k: i64| CyclotomicNumber::root_of_unity(n, k).expect("positive order");
    let q = |a: i64, b: i64, c: i64, d: i64| {
        GroupElement::quaternion([a, b, c, d].map(|v| CyclotomicNumber::from_integer(n, v)))
    };
    let qi = q(0, 1, 0, 0);
    let qj = q(0, 0, 1, 0);
    match (ty.family(), ty.rank()) {
        (Family::A, r) => {
            let step = (n / (r as u64 + 1)) as i64;
            vec![GroupElement::diagonal(z(step), z(-step))]
        }
        (Family::D, r) => {
            let step = (n / (2 * (r as u64 - 2))) as i64;
            vec![GroupElement::diagonal(z(step), z(-step)), qj]
        }
        (Family::E, rank) => {
            let half = rational(n, 1, 2);
            // (1 + i + j + k)/2
            let omega = GroupElement::quaternion([(); 4].map(|_| half.clone()));
            match rank {
                6 => vec![qi, qj, omega],
                7 => {
                    // (1 + i)/√2 with √2 = ζ_8 + ζ_8^{-1}
                    let sqrt2 = &z(1) + &z(-1);
                    let s = sqrt2.scale(&BigRational::new(BigInt::from(1), BigInt::from(2)));
                    let zero = CyclotomicNumber::zero(n);
                    let turn = GroupElement::quaternion([s.clone(), s, zero.clone(), zero]);
                    vec![qi, qj, omega, turn]
                }
                _ => {
                    // √5 = -(2ζ_5^2 + 2ζ_5^3 + 1), τ = (1 + √5)/2
                    let sqrt5 = -&(&(&z(8) + &z(12)).scale(&BigRational::from_integer(2.into()))
                        + &CyclotomicNumber::one(n));
                    let tau = (&CyclotomicNumber::one(n) + &sqrt5)
                        .scale(&BigRational::new(BigInt::from(1), BigInt::from(2)));
                    let tau_inv = &tau - &CyclotomicNumber::one(n);
                    let half_q = |v: &CyclotomicNumber| {
                        v.scale(&BigRational::new(BigInt::from(1), BigInt::from(2)))
                    };
                    let icosian = GroupElement::quaternion([
                        half_q(&tau_inv),
                        half_q(&tau),
                        half.clone(),
                        CyclotomicNumber::zero(n),
                    ]);
                    vec![qi, qj, icosian]
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub members: Vec<usize>,
    pub representative: usize,
    pub element_order: u64,
    pub trace: CyclotomicNumber,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite subgroup of SU(2) with its multiplication table and class data.
#[derive(Clone, Debug)]
pub struct FiniteSubgroup {
    ty: DiagramType,
    field_order: u64,
    elements: Vec<GroupElement>,
    identity: usize,
    generators: Vec<usize>,
    mult: Vec<usize>,
    inverse: Vec<usize>,
    minus_one: Option<usize>,
    orders: Vec<u64>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl FiniteSubgroup {
    pub fn generate(ty: DiagramType) -> Result<Self> {
        let order = field_order(ty);
        let gens: Vec<GroupElement> = generators(ty).iter().map(|g| g.lift(order)).collect();

        let mut elements = vec![GroupElement::identity(order)];
        let mut index: HashMap<Vec<BigRational>, usize> = HashMap::new();
        index.insert(elements[0].key(), 0);
        // parent[g] = (h, s) with g = gens[s] * h
        let mut parent: Vec<Option<(usize, usize)>> = vec![None];
        let mut left: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(h) = queue.pop_front() {
            for (s, gen) in gens.iter().enumerate() {
                let p = gen.mul(&elements[h]);
                let key = p.key();
                let idx = match index.get(&key) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len();
                        if i >= CLOSURE_CAP {
                            return Err(Error::ClosureOverflow(ty, CLOSURE_CAP));
                        }
                        elements.push(p);
                        index.insert(key, i);
                        parent.push(Some((h, s)));
                        queue.push_back(i);
                        i
                    }
                };
                if left[s].len() <= h {
                    left[s].resize(h + 1, usize::MAX);
                }
                left[s][h] = idx;
            }
        }
        let n = elements.len();
        if n != ty.group_order() {
            return Err(Error::WrongOrder {
                ty,
                found: n,
                expected: ty.group_order(),
            });
        }

        // Row g of the table is left multiplication by g. Elements were discovered
        // in BFS order, so each parent row is complete before its children.
        let mut mult = vec![usize::MAX; n * n];
        for h in 0..n {
            mult[h] = h;
        }
        for g in 1..n {
            let (p, s) = parent[g].expect("non-identity elements have a parent");
            for h in 0..n {
                mult[g * n + h] = left[s][mult[p * n + h]];
            }
        }

        let generators = (0..gens.len()).map(|s| left[s][0]).collect();
        let identity = 0;
        let inverse: Vec<usize> = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| mult[g * n + h] == identity)
                    .expect("finite groups have inverses")
            })
            .collect();
        let minus_one = index.get(&GroupElement::scalar(order, -1).key()).copied();

        let mut group = FiniteSubgroup {
            ty,
            field_order: order,
            elements,
            identity,
            generators,
            mult,
            inverse,
            minus_one,
            orders: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        group.orders = (0..n).map(|g| group.element_order(g)).collect();
        group.build_classes();
        Ok(group)
    }

    fn element_order(&self, g: usize) -> u64 {
        let mut k = 1;
        let mut x = g;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    fn build_classes(&mut self) {
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..n)
                .map(|x| self.conjugate(x, g))
                .collect::<HashSet<_>>()
                .into_iter()
                .collect();
            members.sort_unstable();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(ConjugacyClass {
                representative: members[0],
                element_order: self.orders[g],
                trace: self.elements[g].trace(),
                members,
            });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn diagram_type(&self) -> DiagramType {
        self.ty
    }

    pub fn field_order(&self) -> u64 {
        self.field_order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, g: usize) -> &GroupElement {
        &self.elements[g]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn minus_one(&self) -> Option<usize> {
        self.minus_one
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.len() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn inverse_table(&self) -> &[usize] {
        &self.inverse
    }

    /// `x g x^{-1}`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// `a b a^{-1} b^{-1}`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let e = k.unsigned_abs() % self.orders[g];
        (0..e).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn order_of(&self, g: usize) -> u64 {
        self.orders[g]
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class `{I}`.
    pub fn identity_class(&self) -> usize {
        self.class_of[self.identity]
    }

    /// Index of the class of `g^k` for `g` in class `j`.
    pub fn power_map(&self, class: usize, k: i64) -> usize {
        self.class_of[self.pow(self.classes[class].representative, k)]
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| (0..self.len()).all(|g| self.commutes(z, g)))
            .collect()
    }

    /// Closure of a set of elements under multiplication.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(h) = queue.pop_front() {
            for &s in gens {
                let p = self.mul(s, h);
                if !seen[p] {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
        (0..self.len()).filter(|&g| seen[g]).collect()
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.subgroup_generated(gens).len() == self.len()
    }

    /// `G / {±I}`, or `G` itself when `-I ∉ G`.
    pub fn quotient_by_center_pm1(&self) -> QuotientGroup {
        let n = self.len();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            coset_of[g] = reps.len();
            if let Some(m) = self.minus_one {
                coset_of[self.mul(m, g)] = reps.len();
            }
            reps.push(g);
        }
        let table = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| coset_of[self.mul(a, b)]).collect())
            .collect();
        QuotientGroup {
            identity: coset_of[self.identity],
            coset_of,
            representatives: reps,
            table,
        }
    }

    /// Order and exponent of `G / [G, G]`, from the commutator subgroup.
    pub fn abelianization(&self) -> Abelianization {
        let n = self.len();
        let commutators: Vec<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        let derived = self.subgroup_generated(&commutators);
        let in_derived: HashSet<usize> = derived.iter().copied().collect();
        let exponent = (0..n)
            .map(|g| {
                let mut k = 1u64;
                let mut x = g;
                while !in_derived.contains(&x) {
                    x = self.mul(x, g);
                    k += 1;
                }
                k
            })
            .fold(1u64, |acc, k| acc.lcm(&k));
        Abelianization {
            order: n / derived.len(),
            exponent,
            commutator_subgroup_order: derived.len(),
        }
    }

    /// Identity, inverse and (optionally exhaustive) associativity checks on the table.
    pub fn verify_table(&self, associativity_triples: Option<usize>) -> bool {
        let n = self.len();
        let neutral =
            (0..n).all(|g| self.mul(self.identity, g) == g && self.mul(g, self.identity) == g);
        let inverses = (0..n).all(|g| {
            self.mul(g, self.inv(g)) == self.identity
                && self.mul(self.inv(g), g) == self.identity
                && self.inv(self.inv(g)) == g
        });
        let assoc = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        let associative = match associativity_triples {
            None => (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| assoc(a, b, c)))),
            Some(samples) => {
                use rand::{Rng, SeedableRng};
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
                (0..samples).all(|_| {
                    assoc(
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                    )
                })
            }
        };
        neutral && inverses && associative
    }
}

pub fn generate(ty: DiagramType) -> Result<FiniteSubgroup> {
    FiniteSubgroup::generate(ty)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub order: usize,
    pub exponent: u64,
    pub commutator_subgroup_order: usize,
}

/// Multiplication table of `G / {±I}` on coset indices.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    pub coset_of: Vec<usize>,
    pub representatives: Vec<usize>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl QuotientGroup {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn order_of(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_group(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            self.mul(self.identity, a) == a && (0..n).any(|b| self.mul(a, b) == self.identity)
        }) && (0..n).all(|a| {
            (0..n)
                .all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))))
        })
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        let mut seen = vec![false; self.len()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(h) = queue.pop_front() {
            for &s in gens {
                let p = self.mul(s, h);
                if !seen[p] {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}
