//! Finitely additive probability charges on finite Boolean algebras.
//!
//! A [`Charge`] assigns an exact nonnegative mass to every atom of its
//! algebra, with total mass one; the value of any member is the sum over
//! its atoms. On top of measurement and conditioning this module provides
//! the two extension constructions:
//!
//! * [`Charge::extend_charge`] adjoins an arbitrary set `A` and assigns it
//!   any value between its inner and outer measure, leaving every old
//!   member unchanged.
//! * [`Charge::extend_with_conditional`] adjoins a set `B` that splits every
//!   positive-mass atom and makes `P(A | B)` equal any prescribed value.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{BooleanSubalgebra, Points};
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Charge {
    algebra: BooleanSubalgebra,
    masses: Vec<Rational>,
}

/// `P(A | E)` together with the mass of the conditioning event.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionalResult {
    pub value: Rational,
    pub conditioning_mass: Rational,
}

impl Charge {
    /// Validates that masses are nonnegative, one per atom, and sum to one.
    pub fn new(algebra: BooleanSubalgebra, masses: Vec<Rational>) -> Result<Self> {
        if masses.len() != algebra.atom_count() {
            return Err(Error::InvalidCharge(format!(
                "{} masses for {} atoms",
                masses.len(),
                algebra.atom_count()
            )));
        }
        if let Some(m) = masses.iter().find(|m| m.is_negative()) {
            return Err(Error::InvalidCharge(format!("negative mass {m}")));
        }
        let total: Rational = masses.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidCharge(format!("total mass is {total}, not 1")));
        }
        Ok(Self { algebra, masses })
    }

    /// Charge on explicitly listed atoms; the ground set is their union.
    pub fn from_atoms(atoms: Vec<(Points, Rational)>) -> Result<Self> {
        let ground: Points = atoms.iter().flat_map(|(a, _)| a.iter().copied()).collect();
        let blocks: Vec<Points> = atoms.iter().map(|(a, _)| a.clone()).collect();
        let algebra = BooleanSubalgebra::from_partition(ground, blocks)
            .ok_or_else(|| Error::InvalidCharge("atoms must be nonempty and pairwise disjoint".into()))?;
        let by_first: BTreeMap<usize, Rational> =
            atoms.into_iter().map(|(a, m)| (*a.iter().next().expect("nonempty"), m)).collect();
        let masses = algebra.atoms().iter().map(|a| by_first[a.iter().next().expect("nonempty")].clone()).collect();
        Self::new(algebra, masses)
    }

    /// Charge on the powerset of the given points.
    pub fn from_point_masses(masses: BTreeMap<usize, Rational>) -> Result<Self> {
        Self::from_atoms(masses.into_iter().map(|(p, m)| (Points::from([p]), m)).collect())
    }

    /// Uniform charge on the powerset of `ground`.
    pub fn uniform(ground: Points) -> Result<Self> {
        if ground.is_empty() {
            return Err(Error::InvalidCharge("empty ground set".into()));
        }
        let m = Rational::new(1.into(), ground.len().into());
        let algebra = BooleanSubalgebra::discrete(ground);
        let masses = vec![m; algebra.atom_count()];
        Self::new(algebra, masses)
    }

    /// Uniform over the atoms of `algebra`, regardless of their sizes.
    pub fn uniform_on_atoms(algebra: BooleanSubalgebra) -> Result<Self> {
        if algebra.atom_count() == 0 {
            return Err(Error::InvalidCharge("empty ground set".into()));
        }
        let m = Rational::new(1.into(), algebra.atom_count().into());
        let masses = vec![m; algebra.atom_count()];
        Self::new(algebra, masses)
    }

    pub fn algebra(&self) -> &BooleanSubalgebra {
        &self.algebra
    }

    pub fn ground(&self) -> &Points {
        self.algebra.ground()
    }

    pub fn masses(&self) -> &[Rational] {
        &self.masses
    }

    /// `(atom, mass)` pairs in canonical atom order.
    pub fn atoms(&self) -> impl Iterator<Item = (&Points, &Rational)> {
        self.algebra.atoms().iter().zip(&self.masses)
    }

    /// Mass of the atom containing `point`.
    pub fn atom_mass_at(&self, point: usize) -> Option<&Rational> {
        self.algebra.atom_of(point).map(|i| &self.masses[i])
    }

    pub fn measure(&self, set: &Points) -> Result<Rational> {
        let atoms = self.algebra.decompose(set).ok_or(Error::NotExpressible)?;
        Ok(atoms.into_iter().map(|i| &self.masses[i]).sum())
    }

    /// The posterior `T ↦ P(E ∩ T) / P(E)` on the same algebra.
    pub fn condition(&self, event: &Points) -> Result<Charge> {
        let atoms = self.algebra.decompose(event).ok_or(Error::NotExpressible)?;
        let mass: Rational = atoms.iter().map(|&i| &self.masses[i]).sum();
        if mass.is_zero() {
            return Err(Error::ZeroConditioningEvent);
        }
        let mut masses = vec![Rational::zero(); self.masses.len()];
        for i in atoms {
            masses[i] = &self.masses[i] / &mass;
        }
        Ok(Charge { algebra: self.algebra.clone(), masses })
    }

    /// `P(a | given)` computed as `P(a ∩ given) / P(given)`.
    pub fn conditional(&self, a: &Points, given: &Points) -> Result<ConditionalResult> {
        let conditioning_mass = self.measure(given)?;
        if conditioning_mass.is_zero() {
            return Err(Error::ZeroConditioningEvent);
        }
        let both: Points = a.intersection(given).copied().collect();
        let value = self.measure(&both)? / &conditioning_mass;
        Ok(ConditionalResult { value, conditioning_mass })
    }

    /// Inner and outer measure of an arbitrary subset of the ground set:
    /// the mass of atoms inside `set` and the mass of atoms meeting it.
    pub fn inner_outer(&self, set: &Points) -> (Rational, Rational) {
        let mut inner = Rational::zero();
        let mut outer = Rational::zero();
        for (atom, m) in self.atoms() {
            let meets = !atom.is_disjoint(set);
            if meets {
                outer += m;
                if atom.is_subset(set) {
                    inner += m;
                }
            }
        }
        (inner, outer)
    }

    /// True iff every member of `base`'s algebra is a member here and gets
    /// the same value.
    pub fn restricts_to(&self, base: &Charge) -> bool {
        self.ground() == base.ground()
            && base.atoms().all(|(atom, m)| self.measure(atom).map(|v| &v == m).unwrap_or(false))
    }

    /// Strict independence: every atom of positive mass has points both
    /// inside and outside `set`.
    pub fn is_strictly_independent(&self, set: &Points) -> bool {
        self.atoms()
            .filter(|(_, m)| m.is_positive())
            .all(|(atom, _)| !atom.is_disjoint(set) && !atom.is_subset(set))
    }

    /// Extends to the algebra generated by adding `set`, assigning it
    /// exactly `value`. Atoms split by `set` receive their inside share
    /// greedily in canonical atom order.
    pub fn extend_charge(&self, set: &Points, value: &Rational) -> Result<Charge> {
        let (inner, outer) = self.inner_outer(set);
        if value < &inner || value > &outer {
            return Err(Error::OutOfRange {
                value: format_rational(value),
                low: format_rational(&inner),
                high: format_rational(&outer),
            });
        }
        let everything: Vec<usize> = (0..self.masses.len()).collect();
        let split = self.split_toward(&everything, set, value - inner);
        Ok(self.assemble(set, split))
    }

    /// Extends to the algebra generated by adding `given` so that the
    /// extension's `P(event | given)` equals `theta` exactly.
    ///
    /// `event` must already be a member with mass strictly between 0 and 1
    /// and `given` must split every positive-mass atom. The masses `ρ₀` of
    /// `event ∩ given` and `ρ₁` of `eventᶜ ∩ given` are chosen in closed
    /// form as `θ·s` and `(1−θ)·s`, with `s` half the largest scale that
    /// keeps `ρ₀ ≤ P(event)` and `ρ₁ ≤ 1 − P(event)`; each side is then
    /// extended separately.
    pub fn extend_with_conditional(&self, event: &Points, given: &Points, theta: &Rational) -> Result<Charge> {
        let event_atoms = self.algebra.decompose(event).ok_or(Error::NotExpressible)?;
        let p_event: Rational = event_atoms.iter().map(|&i| &self.masses[i]).sum();
        if p_event.is_zero() || p_event.is_one() {
            return Err(Error::DegeneratePrior(format_rational(&p_event)));
        }
        if theta.is_negative() || theta > &Rational::one() {
            return Err(Error::OutOfRange {
                value: format_rational(theta),
                low: "0".into(),
                high: "1".into(),
            });
        }
        if !self.is_strictly_independent(given) {
            return Err(Error::NotIndependent);
        }

        let p_rest = Rational::one() - &p_event;
        let one_minus_theta = Rational::one() - theta;
        let scale = match (theta.is_zero(), one_minus_theta.is_zero()) {
            (true, _) => p_rest.clone() / &one_minus_theta,
            (_, true) => p_event.clone() / theta,
            _ => (p_event.clone() / theta).min(p_rest.clone() / &one_minus_theta),
        } / Rational::from_integer(2.into());
        let rho_event = theta * &scale;
        let rho_rest = &one_minus_theta * &scale;

        let inside: Vec<usize> = event_atoms;
        let outside: Vec<usize> = (0..self.masses.len()).filter(|i| !inside.contains(i)).collect();
        // Strict independence leaves no positive atom inside `given`, so
        // both inner measures are zero.
        let mut split = self.split_toward(&inside, given, rho_event);
        split.extend(self.split_toward(&outside, given, rho_rest));
        Ok(self.assemble(given, split))
    }

    /// For each listed atom, the mass its intersection with `set` receives.
    /// Atoms inside `set` keep everything, atoms outside get nothing, and
    /// `extra` is spread over the straddling atoms in order.
    fn split_toward(&self, atoms: &[usize], set: &Points, mut extra: Rational) -> BTreeMap<usize, Rational> {
        let mut inside_share = BTreeMap::new();
        for &i in atoms {
            let atom = &self.algebra.atoms()[i];
            let m = &self.masses[i];
            let share = if atom.is_disjoint(set) {
                Rational::zero()
            } else if atom.is_subset(set) {
                m.clone()
            } else {
                let take = extra.clone().min(m.clone());
                extra -= &take;
                take
            };
            inside_share.insert(i, share);
        }
        inside_share
    }

    fn assemble(&self, set: &Points, inside_share: BTreeMap<usize, Rational>) -> Charge {
        let algebra = self.algebra.adjoin(set);
        let mut masses = vec![Rational::zero(); algebra.atom_count()];
        for (i, atom) in self.algebra.atoms().iter().enumerate() {
            let share = &inside_share[&i];
            if let Some(p) = atom.iter().find(|p| set.contains(p)) {
                masses[algebra.atom_of(*p).expect("point in ground")] = share.clone();
            }
            if let Some(p) = atom.iter().find(|p| !set.contains(p)) {
                masses[algebra.atom_of(*p).expect("point in ground")] = &self.masses[i] - share;
            }
        }
        Charge { algebra, masses }
    }

    pub fn to_file(&self, catalog: Option<&[String]>) -> ChargeFile {
        ChargeFile {
            catalog: catalog.map(<[String]>::to_vec),
            atoms: self.atoms().map(|(a, m)| (atom_key(a), format_rational(m))).collect(),
        }
    }

    pub fn to_json(&self, catalog: Option<&[String]>) -> String {
        serde_json::to_string_pretty(&self.to_file(catalog)).expect("charge serializes")
    }

    pub fn from_json(text: &str) -> Result<(Charge, Option<Vec<String>>)> {
        let file: ChargeFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let catalog = file.catalog.clone();
        Ok((file.into_charge()?, catalog))
    }
}

/// `mix(α, P, Q) = α·P + (1−α)·Q`, atom by atom.
pub fn mix(alpha: &Rational, p: &Charge, q: &Charge) -> Result<Charge> {
    if alpha.is_negative() || alpha > &Rational::one() {
        return Err(Error::OutOfRange {
            value: format_rational(alpha),
            low: "0".into(),
            high: "1".into(),
        });
    }
    if p.algebra != q.algebra {
        return Err(Error::AlgebraMismatch);
    }
    let beta = Rational::one() - alpha;
    let masses = p.masses.iter().zip(&q.masses).map(|(a, b)| alpha * a + &beta * b).collect();
    Ok(Charge { algebra: p.algebra.clone(), masses })
}

/// Canonical key of an atom: its points, ascending, comma separated.
pub fn atom_key(atom: &Points) -> String {
    atom.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Parses a comma-separated list of point indices (`""` is the empty set).
pub fn parse_points(text: &str) -> Result<Points> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Points::new());
    }
    text.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("`{p}` is not a point index"))))
        .collect()
}

/// On-disk charge: atom keys mapped to exact rational strings. When a
/// catalog is present the ground set is that catalog's world space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChargeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<Vec<String>>,
    pub atoms: BTreeMap<String, String>,
}

impl ChargeFile {
    pub fn into_charge(self) -> Result<Charge> {
        let mut atoms = Vec::with_capacity(self.atoms.len());
        for (key, value) in &self.atoms {
            let points = parse_points(key)?;
            if points.is_empty() {
                return Err(Error::InvalidCharge("empty atom key".into()));
            }
            atoms.push((points, parse_rational(value)?));
        }
        Charge::from_atoms(atoms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{half, int, rat};
    use proptest::prelude::*;

    fn pts(v: &[usize]) -> Points {
        v.iter().copied().collect()
    }

    fn uniform4() -> Charge {
        Charge::uniform(pts(&[1, 2, 3, 4])).unwrap()
    }

    #[test]
    fn rejects_invalid_masses() {
        let alg = BooleanSubalgebra::discrete(pts(&[0, 1]));
        assert!(Charge::new(alg.clone(), vec![rat(1, 2)]).is_err());
        assert!(Charge::new(alg.clone(), vec![rat(3, 2), rat(-1, 2)]).is_err());
        assert!(Charge::new(alg.clone(), vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(Charge::new(alg, vec![rat(1, 2), rat(1, 2)]).is_ok());
    }

    #[test]
    fn measure_basics() {
        let p = uniform4();
        assert_eq!(p.measure(&pts(&[1, 2])).unwrap(), half());
        assert_eq!(p.measure(p.ground()).unwrap(), int(1));
        assert_eq!(p.measure(&Points::new()).unwrap(), int(0));
        let a = pts(&[1]);
        let b = pts(&[3, 4]);
        let ab: Points = a.union(&b).copied().collect();
        assert_eq!(p.measure(&ab).unwrap(), p.measure(&a).unwrap() + p.measure(&b).unwrap());

        let coarse = Charge::from_atoms(vec![(pts(&[0, 1]), half()), (pts(&[2, 3]), half())]).unwrap();
        assert_eq!(coarse.measure(&pts(&[0])), Err(Error::NotExpressible));
    }

    #[test]
    fn conditioning() {
        let p = uniform4();
        assert_eq!(p.condition(p.ground()).unwrap(), p);
        let c = p.condition(&pts(&[1, 2])).unwrap();
        assert_eq!(c.masses(), &[half(), half(), int(0), int(0)]);
        assert_eq!(c.measure(&pts(&[1, 2])).unwrap(), int(1));

        let skewed =
            Charge::from_point_masses(BTreeMap::from([(0, int(0)), (1, rat(1, 3)), (2, rat(2, 3))])).unwrap();
        // Zero prior stays zero under any positive-mass conditioning.
        let post = skewed.condition(&pts(&[0, 1])).unwrap();
        assert_eq!(post.measure(&pts(&[0])).unwrap(), int(0));
        assert_eq!(skewed.condition(&pts(&[0])), Err(Error::ZeroConditioningEvent));
    }

    #[test]
    fn mixing() {
        let p = Charge::from_point_masses(BTreeMap::from([(0, rat(3, 4)), (1, rat(1, 4))])).unwrap();
        let q = Charge::from_point_masses(BTreeMap::from([(0, rat(1, 4)), (1, rat(3, 4))])).unwrap();
        assert_eq!(mix(&int(1), &p, &q).unwrap(), p);
        assert_eq!(mix(&int(0), &p, &q).unwrap(), q);
        // (θ + (1−θ)) / 2 with θ = 3/4
        assert_eq!(mix(&half(), &p, &q).unwrap().measure(&pts(&[0])).unwrap(), half());
        let other = Charge::uniform(pts(&[0, 1, 2])).unwrap();
        assert_eq!(mix(&half(), &p, &other), Err(Error::AlgebraMismatch));
        assert!(mix(&int(2), &p, &q).is_err());
    }

    #[test]
    fn inner_outer_examples() {
        let p = Charge::from_atoms(vec![(pts(&[0, 1]), rat(1, 3)), (pts(&[2, 3]), rat(2, 3))]).unwrap();
        assert_eq!(p.inner_outer(&pts(&[0, 1])), (rat(1, 3), rat(1, 3)));
        assert_eq!(p.inner_outer(&pts(&[0])), (int(0), rat(1, 3)));
        assert_eq!(p.inner_outer(&Points::new()), (int(0), int(0)));
        assert_eq!(p.inner_outer(&pts(&[0, 1, 2])), (rat(1, 3), int(1)));
    }

    #[test]
    fn extend_charge_examples() {
        let p = Charge::from_atoms(vec![(pts(&[0, 1, 2, 3]), int(1))]).unwrap();
        let e = p.extend_charge(&pts(&[0, 1]), &rat(1, 3)).unwrap();
        assert_eq!(e.measure(&pts(&[0, 1])).unwrap(), rat(1, 3));
        assert_eq!(e.measure(&pts(&[2, 3])).unwrap(), rat(2, 3));
        assert!(e.restricts_to(&p));

        let coarse = Charge::from_atoms(vec![(pts(&[0, 1]), rat(1, 4)), (pts(&[2, 3]), rat(3, 4))]).unwrap();
        let same = coarse.extend_charge(&pts(&[0, 1]), &rat(1, 4)).unwrap();
        assert_eq!(same, coarse);

        let top = coarse.extend_charge(&pts(&[0, 2]), &int(1)).unwrap();
        assert_eq!(top.measure(&pts(&[0])).unwrap(), rat(1, 4));
        assert_eq!(top.measure(&pts(&[2])).unwrap(), rat(3, 4));

        assert!(matches!(coarse.extend_charge(&pts(&[0]), &rat(1, 2)), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn extension_succeeds_exactly_within_inner_outer_bounds() {
        let p = Charge::from_atoms(vec![
            (pts(&[0, 1]), rat(1, 6)),
            (pts(&[2]), rat(1, 3)),
            (pts(&[3, 4, 5]), rat(1, 2)),
        ])
        .unwrap();
        let ground: Vec<usize> = (0..6).collect();
        for mask in 0u32..64 {
            let a: Points = ground.iter().copied().filter(|i| mask >> i & 1 == 1).collect();
            let (lo, hi) = p.inner_outer(&a);
            for k in -1..=13 {
                let d = rat(k, 12);
                let ok = p.extend_charge(&a, &d);
                assert_eq!(ok.is_ok(), d >= lo && d <= hi, "mask={mask} d={d}");
                if let Ok(e) = ok {
                    assert_eq!(e.measure(&a).unwrap(), d);
                    assert!(e.restricts_to(&p));
                }
            }
        }
    }

    fn two_block() -> Charge {
        Charge::from_atoms(vec![(pts(&[0, 1]), rat(1, 3)), (pts(&[2, 3]), rat(2, 3))]).unwrap()
    }

    #[test]
    fn conditional_extension_boundaries() {
        let p = two_block();
        let a = pts(&[0, 1]);
        let b = pts(&[0, 2]);
        let e0 = p.extend_with_conditional(&a, &b, &int(0)).unwrap();
        assert_eq!(e0.measure(&pts(&[0])).unwrap(), int(0));
        assert_eq!(e0.conditional(&a, &b).unwrap().value, int(0));
        let e1 = p.extend_with_conditional(&a, &b, &int(1)).unwrap();
        assert_eq!(e1.measure(&pts(&[2])).unwrap(), int(0));
        assert_eq!(e1.conditional(&a, &b).unwrap().value, int(1));
        for e in [e0, e1] {
            assert!(e.restricts_to(&p));
        }
    }

    #[test]
    fn conditional_extension_at_prior_is_product_like() {
        let p = two_block();
        let a = pts(&[0, 1]);
        let b = pts(&[0, 2]);
        let e = p.extend_with_conditional(&a, &b, &rat(1, 3)).unwrap();
        let r = e.conditional(&a, &b).unwrap();
        assert_eq!(r.value, rat(1, 3));
        // P(A ∩ B) = P(A)·P(B): the extension makes B irrelevant to A.
        assert_eq!(e.measure(&pts(&[0])).unwrap(), rat(1, 3) * r.conditioning_mass);
    }

    #[test]
    fn conditional_extension_errors() {
        let p = two_block();
        assert_eq!(
            p.extend_with_conditional(&pts(&[0]), &pts(&[0, 2]), &half()),
            Err(Error::NotExpressible)
        );
        assert_eq!(p.extend_with_conditional(&pts(&[0, 1]), &pts(&[0, 1]), &half()), Err(Error::NotIndependent));
        assert!(matches!(p.extend_with_conditional(&pts(&[0, 1]), &pts(&[0, 2]), &int(2)), Err(Error::OutOfRange { .. })));
        let degenerate = Charge::from_atoms(vec![(pts(&[0, 1]), int(1)), (pts(&[2, 3]), int(0))]).unwrap();
        assert!(matches!(
            degenerate.extend_with_conditional(&pts(&[0, 1]), &pts(&[0, 2]), &half()),
            Err(Error::DegeneratePrior(_))
        ));
        // Zero-mass atoms need not be split.
        let with_null =
            Charge::from_atoms(vec![(pts(&[0, 1]), half()), (pts(&[2, 3]), half()), (pts(&[4]), int(0))]).unwrap();
        assert!(with_null.extend_with_conditional(&pts(&[0, 1]), &pts(&[0, 2]), &rat(9, 10)).is_ok());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let p = two_block();
        let text = p.to_json(None);
        assert!(text.contains("\"0,1\": \"1/3\""));
        let (back, cat) = Charge::from_json(&text).unwrap();
        assert_eq!(back, p);
        assert!(cat.is_none());
        assert!(Charge::from_json(r#"{"atoms": {"0": "1/2", "1": "1/3"}}"#).is_err());
        assert!(Charge::from_json(r#"{"atoms": {"0": "3/2", "1": "-1/2"}}"#).is_err());
        assert!(Charge::from_json(r#"{"atoms": {"0,1": "1/2", "1": "1/2"}}"#).is_err());
        assert!(Charge::from_json(r#"{"atoms": {"0": "1"}, "extra": 1}"#).is_err());
    }

    /// Random charge over a ground of `n` points with a random partition.
    fn arb_charge(max_points: usize) -> impl Strategy<Value = Charge> {
        (2..=max_points)
            .prop_flat_map(|n| (Just(n), proptest::collection::vec(0..n, n), proptest::collection::vec(0u32..6, n)))
            .prop_filter_map("needs positive total", |(n, block_of, weights)| {
                let mut blocks: BTreeMap<usize, Points> = BTreeMap::new();
                for (p, b) in block_of.iter().enumerate().take(n) {
                    blocks.entry(*b).or_default().insert(p);
                }
                let blocks: Vec<Points> = blocks.into_values().collect();
                let w: Vec<u32> = weights.iter().take(blocks.len()).copied().collect();
                let total: u32 = w.iter().sum();
                if total == 0 {
                    return None;
                }
                let atoms = blocks
                    .into_iter()
                    .zip(w)
                    .map(|(b, wi)| (b, rat(wi as i64, total as i64)))
                    .collect();
                Charge::from_atoms(atoms).ok()
            })
    }

    proptest! {
        #[test]
        fn conditioned_charge_is_valid_and_concentrated(p in arb_charge(7), mask in 0u32..128) {
            let event: Points = p.algebra().atoms().iter().enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1).flat_map(|(_, a)| a.iter().copied()).collect();
            match p.condition(&event) {
                Ok(c) => {
                    prop_assert!(Charge::new(c.algebra().clone(), c.masses().to_vec()).is_ok());
                    prop_assert_eq!(c.measure(&event).unwrap(), int(1));
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::ZeroConditioningEvent);
                    prop_assert!(p.measure(&event).unwrap().is_zero());
                }
            }
        }

        #[test]
        fn null_events_stay_null(p in arb_charge(7), a_mask in 0u32..128, b_mask in 0u32..128) {
            let pick = |mask: u32| -> Points { p.algebra().atoms().iter().enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1).flat_map(|(_, a)| a.iter().copied()).collect() };
            let (a, b) = (pick(a_mask), pick(b_mask));
            if p.measure(&a).unwrap().is_zero() && p.measure(&b).unwrap().is_positive() {
                prop_assert_eq!(p.condition(&b).unwrap().measure(&a).unwrap(), int(0));
            }
        }
    }
}
