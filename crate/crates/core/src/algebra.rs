//! Finite Boolean algebras represented by their atoms.
//!
//! A [`BooleanSubalgebra`] over a finite ground set is stored as the
//! partition of the ground set into atoms; its members are exactly the
//! unions of atoms. Atoms are kept in canonical order (by smallest point),
//! which every downstream construction relies on for determinism.

use std::collections::{BTreeMap, BTreeSet};

/// A finite set of points, identified by index.
pub type Points = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanSubalgebra {
    ground: Points,
    atoms: Vec<Points>,
    owner: BTreeMap<usize, usize>,
}

/// Result of the literal logical-independence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Independence {
    pub independent: bool,
    /// Set when the tested set is ∅ or the whole ground set, where the
    /// literal definition gives an answer that may not match intent.
    pub trivial_edge: bool,
}

impl BooleanSubalgebra {
    /// The trivial algebra {∅, ground}.
    pub fn trivial(ground: Points) -> Self {
        let atoms = if ground.is_empty() { Vec::new() } else { vec![ground.clone()] };
        Self::from_partition_unchecked(ground, atoms)
    }

    /// The full powerset algebra: every point is its own atom.
    pub fn discrete(ground: Points) -> Self {
        let atoms = ground.iter().map(|&p| Points::from([p])).collect();
        Self::from_partition_unchecked(ground, atoms)
    }

    /// Builds an algebra from an explicit partition. Returns `None` if the
    /// blocks are empty, overlap, or fail to cover `ground`.
    pub fn from_partition(ground: Points, blocks: Vec<Points>) -> Option<Self> {
        let mut seen = Points::new();
        for block in &blocks {
            if block.is_empty() {
                return None;
            }
            for &p in block {
                if !ground.contains(&p) || !seen.insert(p) {
                    return None;
                }
            }
        }
        if seen != ground {
            return None;
        }
        Some(Self::from_partition_unchecked(ground, blocks))
    }

    fn from_partition_unchecked(ground: Points, mut atoms: Vec<Points>) -> Self {
        atoms.sort_by_key(|a| *a.iter().next().expect("atoms are nonempty"));
        let mut owner = BTreeMap::new();
        for (i, atom) in atoms.iter().enumerate() {
            for &p in atom {
                owner.insert(p, i);
            }
        }
        Self { ground, atoms, owner }
    }

    /// Atoms of the algebra generated by `generators` over `ground`: the
    /// nonempty cells of every sign pattern of the generators. Points of a
    /// generator outside `ground` are ignored.
    pub fn generated(ground: Points, generators: &[Points]) -> Self {
        let mut algebra = Self::trivial(ground);
        for g in generators {
            algebra = algebra.adjoin(g);
        }
        algebra
    }

    /// The algebra generated by this one together with `set`; every atom
    /// splits into its part inside `set` and its part outside.
    pub fn adjoin(&self, set: &Points) -> Self {
        let mut blocks = Vec::with_capacity(self.atoms.len() * 2);
        for atom in &self.atoms {
            let (inside, outside): (Points, Points) = atom.iter().partition(|p| set.contains(p));
            if !inside.is_empty() {
                blocks.push(inside);
            }
            if !outside.is_empty() {
                blocks.push(outside);
            }
        }
        Self::from_partition_unchecked(self.ground.clone(), blocks)
    }

    pub fn ground(&self) -> &Points {
        &self.ground
    }

    pub fn atoms(&self) -> &[Points] {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    /// Index of the atom containing `point`.
    pub fn atom_of(&self, point: usize) -> Option<usize> {
        self.owner.get(&point).copied()
    }

    /// Atom indices whose union is `set`, or `None` if `set` is not a member.
    pub fn decompose(&self, set: &Points) -> Option<Vec<usize>> {
        let mut touched = BTreeSet::new();
        for p in set {
            touched.insert(self.atom_of(*p)?);
        }
        let covered: usize = touched.iter().map(|&i| self.atoms[i].len()).sum();
        (covered == set.len()).then(|| touched.into_iter().collect())
    }

    /// True iff `set` is a union of atoms, i.e. a member of the algebra.
    pub fn is_expressible(&self, set: &Points) -> bool {
        self.decompose(set).is_some()
    }

    /// Every member, as unions of atoms selected by bitmask. Exponential in
    /// the atom count; meant for exhaustive checks on small algebras.
    pub fn members(&self) -> impl Iterator<Item = Points> + '_ {
        assert!(self.atoms.len() < usize::BITS as usize, "too many atoms to enumerate members");
        (0usize..1 << self.atoms.len()).map(move |mask| {
            self.atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, a)| a.iter().copied())
                .collect()
        })
    }

    pub fn complement(&self, set: &Points) -> Points {
        self.ground.difference(set).copied().collect()
    }

    /// Literal logical independence of `set` from this algebra: every
    /// member other than ∅ and the ground set meets `set`, and so does that
    /// member's complement.
    ///
    /// Evaluated at atom level: with two or more atoms, every atom is a
    /// nontrivial member, and `set` meeting every atom is equivalent to the
    /// quantified condition. With fewer than two atoms there are no
    /// nontrivial members and the condition holds vacuously.
    pub fn is_logically_independent(&self, set: &Points) -> Independence {
        let independent = self.atoms.len() < 2 || self.atoms.iter().all(|a| !a.is_disjoint(set));
        let inside: Points = set.intersection(&self.ground).copied().collect();
        Independence { independent, trivial_edge: inside.is_empty() || inside == self.ground }
    }
}
