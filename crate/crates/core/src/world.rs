//! Testimony catalogs, transcripts and the world space `W_S = 𝒯_S × {G, I}`.
//!
//! Worlds are indexed canonically: transcripts in binary-counting order of
//! their membership mask, and within a transcript `G` before `I`. The world
//! `(T, x)` therefore has index `2·mask(T) + x` with `G = 0`, `I = 1`.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::Points;
use crate::error::{Error, Result};

/// Default limit on the number of testimonies. The world space has
/// `2^(n+1)` points.
pub const DEFAULT_CAP: usize = 12;

/// Largest cap that can be configured; transcripts are stored as `u32` masks.
pub const MAX_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestimonyCatalog {
    labels: Vec<String>,
}

impl TestimonyCatalog {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_cap(labels, DEFAULT_CAP)
    }

    pub fn with_cap<I, S>(labels: I, cap: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let cap = cap.min(MAX_CAP);
        if labels.len() > cap {
            return Err(Error::CapExceeded { size: labels.len(), cap });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self { labels })
    }

    /// Catalog `t1, …, tn`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::with_cap((1..=n).map(|i| format!("t{i}")), n.max(DEFAULT_CAP))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Number of transcripts, `2^n`.
    pub fn transcript_count(&self) -> usize {
        1 << self.len()
    }

    /// Number of worlds, `2^(n+1)`.
    pub fn world_count(&self) -> usize {
        2 << self.len()
    }

    /// Every transcript in binary-counting order, starting with ∅.
    pub fn transcripts(&self) -> impl Iterator<Item = Transcript> {
        (0..self.transcript_count() as u32).map(Transcript)
    }

    pub fn transcript<S: AsRef<str>>(&self, labels: &[S]) -> Result<Transcript> {
        let mut mask = 0u32;
        for l in labels {
            let i = self.index_of(l.as_ref()).ok_or_else(|| Error::ForeignTestimony(l.as_ref().to_string()))?;
            mask |= 1 << i;
        }
        Ok(Transcript(mask))
    }

    /// Checks that `t` only references testimonies of this catalog.
    pub fn check(&self, t: Transcript) -> Result<()> {
        if (t.0 as u64) >> self.len() != 0 {
            let stray = (self.len()..32).find(|i| t.0 >> i & 1 == 1).unwrap_or(self.len());
            return Err(Error::ForeignTestimony(format!("#{stray}")));
        }
        Ok(())
    }

    pub fn labels_of(&self, t: Transcript) -> Vec<&str> {
        t.indices().filter_map(|i| self.labels.get(i).map(String::as_str)).collect()
    }

    /// `{t1,t2}`, or `∅` for the empty transcript.
    pub fn render(&self, t: Transcript) -> String {
        if t.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{}}}", self.labels_of(t).join(","))
        }
    }

    pub fn render_world(&self, w: World) -> String {
        format!("({},{})", self.render(w.transcript), w.guilt)
    }
}

/// A set of testimonies, stored as a membership mask over catalog indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Transcript(pub u32);

impl Transcript {
    pub const EMPTY: Transcript = Transcript(0);

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        Transcript(indices.into_iter().fold(0, |m, i| m | 1 << i))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn is_subset(self, other: Transcript) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.0 >> i & 1 == 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GuiltValue {
    G,
    I,
}

impl fmt::Display for GuiltValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GuiltValue::G => "G",
            GuiltValue::I => "I",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct World {
    pub transcript: Transcript,
    pub guilt: GuiltValue,
}

impl World {
    pub fn new(transcript: Transcript, guilt: GuiltValue) -> Self {
        Self { transcript, guilt }
    }

    pub fn index(self) -> usize {
        2 * self.transcript.0 as usize + (self.guilt == GuiltValue::I) as usize
    }

    pub fn from_index(index: usize) -> Self {
        let guilt = if index & 1 == 0 { GuiltValue::G } else { GuiltValue::I };
        Self { transcript: Transcript((index >> 1) as u32), guilt }
    }
}

/// A set of worlds over a fixed catalog size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Event {
    testimonies: usize,
    points: Points,
}

impl Event {
    fn new(testimonies: usize, points: Points) -> Self {
        Self { testimonies, points }
    }

    pub fn from_worlds(catalog: &TestimonyCatalog, worlds: impl IntoIterator<Item = World>) -> Result<Self> {
        let mut points = Points::new();
        for w in worlds {
            catalog.check(w.transcript)?;
            points.insert(w.index());
        }
        Ok(Self::new(catalog.len(), points))
    }

    pub fn empty(catalog: &TestimonyCatalog) -> Self {
        Self::new(catalog.len(), Points::new())
    }

    pub fn everything(catalog: &TestimonyCatalog) -> Self {
        Self::new(catalog.len(), world_ground(catalog))
    }

    pub fn points(&self) -> &Points {
        &self.points
    }

    pub fn into_points(self) -> Points {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, w: World) -> bool {
        self.points.contains(&w.index())
    }

    pub fn worlds(&self) -> impl Iterator<Item = World> + '_ {
        self.points.iter().map(|&i| World::from_index(i))
    }

    pub fn complement(&self) -> Event {
        let all = 2usize << self.testimonies;
        Event::new(self.testimonies, (0..all).filter(|i| !self.points.contains(i)).collect())
    }

    pub fn union(&self, other: &Event) -> Event {
        debug_assert_eq!(self.testimonies, other.testimonies);
        Event::new(self.testimonies, self.points.union(&other.points).copied().collect())
    }

    pub fn intersection(&self, other: &Event) -> Event {
        debug_assert_eq!(self.testimonies, other.testimonies);
        Event::new(self.testimonies, self.points.intersection(&other.points).copied().collect())
    }
}

/// All `2^(n+1)` worlds in canonical order.
pub fn full_world_space(catalog: &TestimonyCatalog) -> Vec<World> {
    (0..catalog.world_count()).map(World::from_index).collect()
}

/// World indices `0..2^(n+1)`, the ground set for charges on `W_S`.
pub fn world_ground(catalog: &TestimonyCatalog) -> Points {
    (0..catalog.world_count()).collect()
}

/// `E_T = {(T,G), (T,I)}`.
pub fn event_of_transcript(catalog: &TestimonyCatalog, t: Transcript) -> Result<Event> {
    catalog.check(t)?;
    Event::from_worlds(catalog, [World::new(t, GuiltValue::G), World::new(t, GuiltValue::I)])
}

/// `E_G`: every world in which the defendant is materially guilty.
pub fn guilt_event(catalog: &TestimonyCatalog) -> Event {
    Event::new(catalog.len(), (0..catalog.world_count()).step_by(2).collect())
}

/// Worlds whose transcript includes every testimony of `heard`, i.e. the
/// intersection of the single-testimony events for each member of `heard`.
pub fn event_heard_all(catalog: &TestimonyCatalog, heard: Transcript) -> Result<Event> {
    catalog.check(heard)?;
    let points = full_world_space(catalog)
        .into_iter()
        .filter(|w| heard.is_subset(w.transcript))
        .map(World::index)
        .collect();
    Ok(Event::new(catalog.len(), points))
}
