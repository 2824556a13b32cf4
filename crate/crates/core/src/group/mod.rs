//! Finite permutation groups given by generators: closure, conjugacy
//! classes, centralizers and ordinary character tables.

mod chartab;

use std::collections::HashMap;
use std::fmt;

use crate::arith::lcm_u64;
use crate::error::{Error, Result};

pub use chartab::{character_table, table_from_root_sums, OrdinaryCharTable};

/// Default refusal threshold for [`close_group`].
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// A permutation of `{0, …, degree-1}` stored as its image array.
///
/// The derived ordering is lexicographic on images, which is the canonical
/// element order used throughout.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{:?} is not a bijection on 0..{}", images, n)));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Order of the cyclic group generated by `self`.
    pub fn order(&self) -> u64 {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut ord = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            ord = lcm_u64(ord, len);
        }
        ord
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A finite group stored as its full, canonically sorted element list.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverses: Vec<usize>,
    exponent: u32,
}

/// Enumerates the group generated by `gens`, refusing anything larger than `cap`.
pub fn close_group(degree: usize, gens: &[Perm], cap: usize) -> Result<FiniteGroup> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::InvalidPermutation(format!(
                "generator {:?} has degree {} but the group has degree {}",
                g,
                g.degree(),
                degree
            )));
        }
    }
    let id = Perm::identity(degree);
    let mut seen: HashMap<Perm, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for s in gens {
            let y = s.compose(&x);
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), ());
                queue.push(y);
                if queue.len() > cap {
                    return Err(Error::GroupTooLarge { cap });
                }
            }
        }
    }
    Ok(FiniteGroup::from_elements(degree, gens.to_vec(), queue))
}

impl FiniteGroup {
    fn from_elements(degree: usize, generators: Vec<Perm>, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        let index: HashMap<Perm, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let exponent = elements.iter().fold(1u64, |acc, p| lcm_u64(acc, p.order())) as u32;
        FiniteGroup { degree, generators, elements, index, inverses, exponent }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `x · g · x⁻¹`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.elements[a].order()
    }
}

/// One conjugacy class: its minimal element and its members in canonical order.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyData {
    pub classes: Vec<ConjugacyClass>,
    /// Element index → class number.
    pub class_index: Vec<usize>,
    /// Class number → class of the inverses.
    pub inverse_class: Vec<usize>,
}

impl ConjugacyData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_index[element]
    }
}

/// Classes are discovered in canonical element order, so each representative
/// is the minimum of its class and class 0 is the identity.
pub fn conjugacy_classes(g: &FiniteGroup) -> ConjugacyData {
    let n = g.order();
    let gens: Vec<usize> = g.generators.iter().map(|p| g.index[p]).collect();
    let mut class_index = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if class_index[start] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        class_index[start] = cid;
        let mut members = vec![start];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &s in &gens {
                let y = g.conjugate(s, x);
                if class_index[y] == usize::MAX {
                    class_index[y] = cid;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        classes.push(ConjugacyClass { representative: start, members });
    }
    let inverse_class = classes.iter().map(|c| class_index[g.inv(c.representative)]).collect();
    ConjugacyData { classes, class_index, inverse_class }
}

/// The centralizer of `g` in `group`, as a group on the same points.
pub fn centralizer(group: &FiniteGroup, g: &Perm) -> Result<FiniteGroup> {
    let gi = group.index_of(g).ok_or_else(|| Error::NotInGroup(format!("{:?}", g)))?;
    Ok(centralizer_of_index(group, gi))
}

pub(crate) fn centralizer_of_index(group: &FiniteGroup, gi: usize) -> FiniteGroup {
    let elements: Vec<Perm> =
        (0..group.order()).filter(|&h| group.commute(h, gi)).map(|h| group.elements[h].clone()).collect();
    // greedy generating set: add the first element not yet reached
    let mut gens: Vec<Perm> = Vec::new();
    let mut reached: HashMap<Perm, ()> = HashMap::new();
    reached.insert(Perm::identity(group.degree), ());
    for p in &elements {
        if reached.contains_key(p) {
            continue;
        }
        gens.push(p.clone());
        let mut frontier: Vec<Perm> = reached.keys().cloned().collect();
        while let Some(x) = frontier.pop() {
            for s in &gens {
                let y = s.compose(&x);
                if !reached.contains_key(&y) {
                    reached.insert(y.clone(), ());
                    frontier.push(y);
                }
            }
        }
    }
    FiniteGroup::from_elements(group.degree, gens, elements)
}

/// `S_n` on `n` points from a transposition and an `n`-cycle.
pub fn symmetric_group(n: usize) -> FiniteGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Vec<u32> = (0..n as u32).collect();
        t.swap(0, 1);
        gens.push(Perm(t));
        gens.push(Perm((0..n as u32).map(|i| (i + 1) % n as u32).collect()));
    }
    close_group(n.max(1), &gens, usize::MAX).expect("symmetric group generators are valid")
}

/// The cyclic group `C_n` generated by the `n`-cycle `i ↦ i+1 mod n`.
pub fn cyclic_group(n: usize) -> FiniteGroup {
    let gens = if n >= 2 { vec![Perm((0..n as u32).map(|i| (i + 1) % n as u32).collect())] } else { vec![] };
    close_group(n.max(1), &gens, usize::MAX).expect("cycle generator is valid")
}
