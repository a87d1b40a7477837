//! Emotion and dyad taxonomy, wheel layout, and validated score containers.
//!
//! The eight basic emotions sit clockwise from the top of the wheel in the
//! order joy, trust, fear, surprise, sadness, disgust, anger, anticipation.
//! This is the only cyclic order that places every opposing pair half a
//! turn apart.

use std::collections::BTreeSet;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI};
use std::fmt;

use crate::error::{Error, ScoreError};

/// Slack allowed on every range check, to absorb float round-trips through JSON.
pub const EPSILON: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Emotion {
    Joy,
    Trust,
    Fear,
    Surprise,
    Sadness,
    Disgust,
    Anger,
    Anticipation,
}

impl Emotion {
    /// All emotions in clockwise wheel order, starting at the top.
    pub const ALL: [Emotion; 8] = [
        Emotion::Joy,
        Emotion::Trust,
        Emotion::Fear,
        Emotion::Surprise,
        Emotion::Sadness,
        Emotion::Disgust,
        Emotion::Anger,
        Emotion::Anticipation,
    ];

    pub fn wheel_index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Emotion {
        Self::ALL[index % 8]
    }

    pub fn name(self) -> &'static str {
        match self {
            Emotion::Joy => "joy",
            Emotion::Trust => "trust",
            Emotion::Fear => "fear",
            Emotion::Surprise => "surprise",
            Emotion::Sadness => "sadness",
            Emotion::Disgust => "disgust",
            Emotion::Anger => "anger",
            Emotion::Anticipation => "anticipation",
        }
    }

    /// Capitalized name used for on-canvas labels.
    pub fn label(self) -> String {
        capitalize(self.name())
    }

    /// Case-insensitive lookup.
    pub fn from_name(name: &str) -> Option<Emotion> {
        let lower = name.to_lowercase();
        Self::ALL.into_iter().find(|e| e.name() == lower)
    }

    pub fn opposite(self) -> Emotion {
        Self::from_index(self.wheel_index() + 4)
    }

    /// Names of the three intensity degrees, as `[mild, medium, intense]`.
    pub fn degree_names(self) -> [&'static str; 3] {
        match self {
            Emotion::Joy => ["serenity", "joy", "ecstasy"],
            Emotion::Trust => ["acceptance", "trust", "admiration"],
            Emotion::Fear => ["apprehension", "fear", "terror"],
            Emotion::Surprise => ["distraction", "surprise", "amazement"],
            Emotion::Sadness => ["pensiveness", "sadness", "grief"],
            Emotion::Disgust => ["boredom", "disgust", "loathing"],
            Emotion::Anger => ["annoyance", "anger", "rage"],
            Emotion::Anticipation => ["interest", "anticipation", "vigilance"],
        }
    }

    /// Axis angle in radians, counterclockwise from +x. Joy points straight up
    /// and each following emotion is a quarter of a right angle further clockwise.
    pub fn angle(self) -> f64 {
        FRAC_PI_2 - self.wheel_index() as f64 * FRAC_PI_4
    }

    /// Number of wheel steps between two emotions along the shorter arc (0..=4).
    pub fn circular_distance(self, other: Emotion) -> usize {
        let d = (self.wheel_index() + 8 - other.wheel_index()) % 8;
        d.min(8 - d)
    }
}

impl fmt::Display for Emotion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Level of a dyad, set by how many petals apart its two emotions are.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DyadKind {
    Primary,
    Secondary,
    Tertiary,
    Opposite,
}

impl DyadKind {
    pub const ALL: [DyadKind; 4] = [
        DyadKind::Primary,
        DyadKind::Secondary,
        DyadKind::Tertiary,
        DyadKind::Opposite,
    ];

    /// Wheel steps between the two components.
    pub fn distance(self) -> usize {
        match self {
            DyadKind::Primary => 1,
            DyadKind::Secondary => 2,
            DyadKind::Tertiary => 3,
            DyadKind::Opposite => 4,
        }
    }

    pub fn count(self) -> usize {
        match self {
            DyadKind::Opposite => 4,
            _ => 8,
        }
    }

    /// Text printed in the middle of a dyad wheel.
    pub fn annotation(self) -> &'static str {
        match self {
            DyadKind::Primary => "1",
            DyadKind::Secondary => "2",
            DyadKind::Tertiary => "3",
            DyadKind::Opposite => "opp.",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DyadKind::Primary => "primary",
            DyadKind::Secondary => "secondary",
            DyadKind::Tertiary => "tertiary",
            DyadKind::Opposite => "opposite",
        }
    }
}

use Emotion::*;

struct DyadEntry {
    name: &'static str,
    kind: DyadKind,
    components: (Emotion, Emotion),
}

const fn dyad(name: &'static str, kind: DyadKind, a: Emotion, b: Emotion) -> DyadEntry {
    DyadEntry { name, kind, components: (a, b) }
}

// Components are listed clockwise from the first one.
static CATALOG: [DyadEntry; 28] = [
    dyad("love", DyadKind::Primary, Joy, Trust),
    dyad("submission", DyadKind::Primary, Trust, Fear),
    dyad("awe", DyadKind::Primary, Fear, Surprise),
    dyad("disapproval", DyadKind::Primary, Surprise, Sadness),
    dyad("remorse", DyadKind::Primary, Sadness, Disgust),
    dyad("contempt", DyadKind::Primary, Disgust, Anger),
    dyad("aggressiveness", DyadKind::Primary, Anger, Anticipation),
    dyad("optimism", DyadKind::Primary, Anticipation, Joy),
    dyad("guilt", DyadKind::Secondary, Joy, Fear),
    dyad("curiosity", DyadKind::Secondary, Trust, Surprise),
    dyad("despair", DyadKind::Secondary, Fear, Sadness),
    dyad("unbelief", DyadKind::Secondary, Surprise, Disgust),
    dyad("envy", DyadKind::Secondary, Sadness, Anger),
    dyad("cynicism", DyadKind::Secondary, Disgust, Anticipation),
    dyad("pride", DyadKind::Secondary, Anger, Joy),
    dyad("hope", DyadKind::Secondary, Anticipation, Trust),
    dyad("delight", DyadKind::Tertiary, Joy, Surprise),
    dyad("sentimentality", DyadKind::Tertiary, Trust, Sadness),
    dyad("shame", DyadKind::Tertiary, Fear, Disgust),
    dyad("outrage", DyadKind::Tertiary, Surprise, Anger),
    dyad("pessimism", DyadKind::Tertiary, Sadness, Anticipation),
    dyad("morbidness", DyadKind::Tertiary, Disgust, Joy),
    dyad("dominance", DyadKind::Tertiary, Anger, Trust),
    dyad("anxiety", DyadKind::Tertiary, Anticipation, Fear),
    dyad("bittersweetness", DyadKind::Opposite, Joy, Sadness),
    dyad("ambivalence", DyadKind::Opposite, Trust, Disgust),
    dyad("frozenness", DyadKind::Opposite, Fear, Anger),
    dyad("confusion", DyadKind::Opposite, Surprise, Anticipation),
];

// Opposite dyads have two candidate bisectors each, and no choice of
// bisectors spaces four axes a right angle apart. They sit on the four
// diagonals instead, each on a diagonal that does not pass through either
// of its components, in catalog order: bittersweetness, ambivalence,
// frozenness, confusion.
const OPPOSITE_AXES: [f64; 4] = [FRAC_PI_4, -FRAC_PI_4, 3.0 * FRAC_PI_4, -3.0 * FRAC_PI_4];

/// A complex emotion raised by two basic emotions felt together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dyad(u8);

impl Dyad {
    pub fn all() -> impl Iterator<Item = Dyad> {
        (0..CATALOG.len() as u8).map(Dyad)
    }

    /// Dyads of one level, in wheel order.
    pub fn of_kind(kind: DyadKind) -> impl Iterator<Item = Dyad> {
        Self::all().filter(move |d| d.kind() == kind)
    }

    pub fn from_name(name: &str) -> Option<Dyad> {
        let lower = name.to_lowercase();
        Self::all().find(|d| d.name() == lower)
    }

    /// The dyad formed by two emotions, in either order.
    pub fn from_components(a: Emotion, b: Emotion) -> Option<Dyad> {
        Self::all().find(|d| {
            let (x, y) = d.components();
            (x, y) == (a, b) || (y, x) == (a, b)
        })
    }

    fn entry(self) -> &'static DyadEntry {
        &CATALOG[self.0 as usize]
    }

    pub fn name(self) -> &'static str {
        self.entry().name
    }

    pub fn label(self) -> String {
        capitalize(self.name())
    }

    pub fn kind(self) -> DyadKind {
        self.entry().kind
    }

    /// Constituent emotions, clockwise from the first.
    pub fn components(self) -> (Emotion, Emotion) {
        self.entry().components
    }

    /// Axis angle in radians. Primary, secondary and tertiary dyads bisect the
    /// shorter arc between their components.
    pub fn angle(self) -> f64 {
        let (first, _) = self.components();
        match self.kind() {
            DyadKind::Opposite => {
                let offset = Self::of_kind(DyadKind::Opposite)
                    .position(|d| d == self)
                    .expect("dyad is in catalog");
                OPPOSITE_AXES[offset]
            }
            kind => first.angle() - kind.distance() as f64 * FRAC_PI_8,
        }
    }
}

impl fmt::Display for Dyad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn dyad_components(d: Dyad) -> (Emotion, Emotion) {
    d.components()
}

/// Which wheel a slot or score set is drawn on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Wheel {
    Basic,
    Dyads(DyadKind),
}

impl Wheel {
    pub fn slots(self) -> Vec<Slot> {
        match self {
            Wheel::Basic => Emotion::ALL.into_iter().map(Slot::Emotion).collect(),
            Wheel::Dyads(kind) => Dyad::of_kind(kind).map(Slot::Dyad).collect(),
        }
    }

    fn describe(self) -> &'static str {
        match self {
            Wheel::Basic => "a basic emotion",
            Wheel::Dyads(DyadKind::Primary) => "a primary dyad",
            Wheel::Dyads(DyadKind::Secondary) => "a secondary dyad",
            Wheel::Dyads(DyadKind::Tertiary) => "a tertiary dyad",
            Wheel::Dyads(DyadKind::Opposite) => "an opposite dyad",
        }
    }
}

/// One petal position: a basic emotion or a dyad.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Emotion(Emotion),
    Dyad(Dyad),
}

impl Slot {
    pub fn from_name(name: &str) -> Option<Slot> {
        Emotion::from_name(name)
            .map(Slot::Emotion)
            .or_else(|| Dyad::from_name(name).map(Slot::Dyad))
    }

    pub fn name(self) -> &'static str {
        match self {
            Slot::Emotion(e) => e.name(),
            Slot::Dyad(d) => d.name(),
        }
    }

    pub fn label(self) -> String {
        capitalize(self.name())
    }

    pub fn wheel(self) -> Wheel {
        match self {
            Slot::Emotion(_) => Wheel::Basic,
            Slot::Dyad(d) => Wheel::Dyads(d.kind()),
        }
    }

    pub fn angle(self) -> f64 {
        match self {
            Slot::Emotion(e) => e.angle(),
            Slot::Dyad(d) => d.angle(),
        }
    }
}

impl From<Emotion> for Slot {
    fn from(e: Emotion) -> Self {
        Slot::Emotion(e)
    }
}

impl From<Dyad> for Slot {
    fn from(d: Dyad) -> Self {
        Slot::Dyad(d)
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Axis angle of a slot, radians counterclockwise from +x.
pub fn angular_position(slot: impl Into<Slot>) -> f64 {
    slot.into().angle()
}

/// Signed difference `a - b` wrapped into `(-PI, PI]`.
pub fn angle_difference(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    if d > PI {
        d - 2.0 * PI
    } else {
        d
    }
}

/// Three degrees of one emotion: lower, base and higher intensity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntensityTriple {
    mild: f64,
    medium: f64,
    intense: f64,
}

/// One of the three intensity degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    Intense,
    Medium,
    Mild,
}

impl Degree {
    /// Ordered from the center of the wheel outward.
    pub const FROM_CENTER: [Degree; 3] = [Degree::Intense, Degree::Medium, Degree::Mild];

    pub fn name(self) -> &'static str {
        match self {
            Degree::Intense => "intense",
            Degree::Medium => "medium",
            Degree::Mild => "mild",
        }
    }
}

impl IntensityTriple {
    /// Validates range and the at-most-one sum. Values within [`EPSILON`] of a
    /// bound are clamped onto it.
    pub fn new(mild: f64, medium: f64, intense: f64) -> Result<Self, ScoreError> {
        let key = String::new();
        let mut parts = [mild, medium, intense];
        for v in &mut parts {
            *v = check_unit(&key, *v)?;
        }
        let sum: f64 = parts.iter().sum();
        if sum > 1.0 + EPSILON {
            return Err(ScoreError::TripleOverflow { key, sum });
        }
        Ok(IntensityTriple {
            mild: parts[0],
            medium: parts[1],
            intense: parts[2],
        })
    }

    pub const ZERO: IntensityTriple = IntensityTriple {
        mild: 0.0,
        medium: 0.0,
        intense: 0.0,
    };

    pub fn mild(&self) -> f64 {
        self.mild
    }

    pub fn medium(&self) -> f64 {
        self.medium
    }

    pub fn intense(&self) -> f64 {
        self.intense
    }

    pub fn get(&self, degree: Degree) -> f64 {
        match degree {
            Degree::Intense => self.intense,
            Degree::Medium => self.medium,
            Degree::Mild => self.mild,
        }
    }

    /// Cumulative score, which is also the petal length.
    pub fn total(&self) -> f64 {
        self.mild + self.medium + self.intense
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.mild, self.medium, self.intense]
    }
}

/// What a score set addresses: the basic wheel (plain or with intensities)
/// or one of the four dyad wheels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScoreKind {
    BasicScalar,
    BasicIntensity,
    DyadPrimary,
    DyadSecondary,
    DyadTertiary,
    DyadOpposite,
}

impl ScoreKind {
    pub const ALL: [ScoreKind; 6] = [
        ScoreKind::BasicScalar,
        ScoreKind::BasicIntensity,
        ScoreKind::DyadPrimary,
        ScoreKind::DyadSecondary,
        ScoreKind::DyadTertiary,
        ScoreKind::DyadOpposite,
    ];

    pub fn wheel(self) -> Wheel {
        match self {
            ScoreKind::BasicScalar | ScoreKind::BasicIntensity => Wheel::Basic,
            ScoreKind::DyadPrimary => Wheel::Dyads(DyadKind::Primary),
            ScoreKind::DyadSecondary => Wheel::Dyads(DyadKind::Secondary),
            ScoreKind::DyadTertiary => Wheel::Dyads(DyadKind::Tertiary),
            ScoreKind::DyadOpposite => Wheel::Dyads(DyadKind::Opposite),
        }
    }

    pub fn for_dyads(kind: DyadKind) -> ScoreKind {
        match kind {
            DyadKind::Primary => ScoreKind::DyadPrimary,
            DyadKind::Secondary => ScoreKind::DyadSecondary,
            DyadKind::Tertiary => ScoreKind::DyadTertiary,
            DyadKind::Opposite => ScoreKind::DyadOpposite,
        }
    }

    pub fn dyad_kind(self) -> Option<DyadKind> {
        match self.wheel() {
            Wheel::Basic => None,
            Wheel::Dyads(k) => Some(k),
        }
    }

    pub fn is_intensity(self) -> bool {
        self == ScoreKind::BasicIntensity
    }

    pub fn slot_count(self) -> usize {
        match self {
            ScoreKind::DyadOpposite => 4,
            _ => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ScoreKind::BasicScalar => "basic_scalar",
            ScoreKind::BasicIntensity => "basic_intensity",
            ScoreKind::DyadPrimary => "dyad_primary",
            ScoreKind::DyadSecondary => "dyad_secondary",
            ScoreKind::DyadTertiary => "dyad_tertiary",
            ScoreKind::DyadOpposite => "dyad_opposite",
        }
    }
}

impl fmt::Display for ScoreKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Score {
    Scalar(f64),
    Intensity(IntensityTriple),
}

impl Score {
    /// Petal length: the scalar itself, or the sum of a triple.
    pub fn total(&self) -> f64 {
        match self {
            Score::Scalar(v) => *v,
            Score::Intensity(t) => t.total(),
        }
    }
}

/// A raw input value before validation.
#[derive(Clone, Debug, PartialEq)]
pub enum RawScore {
    Scalar(f64),
    Sequence(Vec<f64>),
}

impl From<f64> for RawScore {
    fn from(v: f64) -> Self {
        RawScore::Scalar(v)
    }
}

impl From<[f64; 3]> for RawScore {
    fn from(v: [f64; 3]) -> Self {
        RawScore::Sequence(v.to_vec())
    }
}

/// A validated, complete set of scores for one wheel.
///
/// Entries are stored in wheel order and never mix kinds.
#[derive(Clone, Debug, PartialEq)]
pub struct ScoreSet {
    kind: ScoreKind,
    entries: Vec<(Slot, Score)>,
}

impl ScoreSet {
    /// Scalar scores for the basic wheel, in wheel order.
    pub fn basic(values: [f64; 8]) -> Result<ScoreSet, ScoreError> {
        let entries = Emotion::ALL
            .into_iter()
            .zip(values)
            .map(|(e, v)| Ok((Slot::Emotion(e), Score::Scalar(check_unit(e.name(), v)?))))
            .collect::<Result<_, ScoreError>>()?;
        Ok(ScoreSet {
            kind: ScoreKind::BasicScalar,
            entries,
        })
    }

    /// Intensity triples for the basic wheel, in wheel order.
    pub fn intensity(values: [IntensityTriple; 8]) -> ScoreSet {
        ScoreSet {
            kind: ScoreKind::BasicIntensity,
            entries: Emotion::ALL
                .into_iter()
                .zip(values)
                .map(|(e, t)| (Slot::Emotion(e), Score::Intensity(t)))
                .collect(),
        }
    }

    /// Scalar scores for one dyad wheel, in catalog order.
    pub fn dyads(kind: DyadKind, values: &[f64]) -> Result<ScoreSet, ScoreError> {
        let slots: Vec<Dyad> = Dyad::of_kind(kind).collect();
        if values.len() != slots.len() {
            return Err(ScoreError::WrongArity {
                kind: ScoreKind::for_dyads(kind),
                expected: slots.len(),
                found: values.len(),
                missing: slots
                    .iter()
                    .skip(values.len())
                    .map(|d| d.name().to_string())
                    .collect(),
            });
        }
        let entries = slots
            .into_iter()
            .zip(values)
            .map(|(d, &v)| Ok((Slot::Dyad(d), Score::Scalar(check_unit(d.name(), v)?))))
            .collect::<Result<_, ScoreError>>()?;
        Ok(ScoreSet {
            kind: ScoreKind::for_dyads(kind),
            entries,
        })
    }

    /// All-zero scores of the given kind.
    pub fn zeros(kind: ScoreKind) -> ScoreSet {
        let zero = if kind.is_intensity() {
            Score::Intensity(IntensityTriple::ZERO)
        } else {
            Score::Scalar(0.0)
        };
        ScoreSet {
            kind,
            entries: kind.wheel().slots().into_iter().map(|s| (s, zero)).collect(),
        }
    }

    pub fn kind(&self) -> ScoreKind {
        self.kind
    }

    pub fn entries(&self) -> &[(Slot, Score)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, slot: impl Into<Slot>) -> Option<&Score> {
        let slot = slot.into();
        self.entries.iter().find(|(s, _)| *s == slot).map(|(_, v)| v)
    }

    /// Cumulative score of a slot, zero when the slot is not on this wheel.
    pub fn total(&self, slot: impl Into<Slot>) -> f64 {
        self.get(slot).map_or(0.0, Score::total)
    }

    /// JSON object with canonical keys; the inverse of [`parse_scores`].
    pub fn to_json(&self) -> serde_json::Value {
        let map = self
            .entries
            .iter()
            .map(|(slot, score)| {
                let value = match score {
                    Score::Scalar(v) => serde_json::json!(v),
                    Score::Intensity(t) => serde_json::json!(t.as_array()),
                };
                (slot.name().to_string(), value)
            })
            .collect();
        serde_json::Value::Object(map)
    }
}

fn check_unit(key: &str, v: f64) -> Result<f64, ScoreError> {
    if !v.is_finite() || v < -EPSILON || v > 1.0 + EPSILON {
        return Err(ScoreError::OutOfRange {
            key: key.to_string(),
            value: v,
        });
    }
    Ok(v.clamp(0.0, 1.0))
}

/// Validates a flat key/value mapping and infers which wheel it addresses.
///
/// Keys are matched case-insensitively against emotion and dyad names. Checks
/// run in a fixed order and the first failing one is reported: unknown keys,
/// duplicate keys, mixed wheels, malformed values, scalar/triple mixing,
/// missing keys, out-of-range scores, and finally triple sums above one.
pub fn parse_scores<I, K>(raw: I) -> Result<ScoreSet, ScoreError>
where
    I: IntoIterator<Item = (K, RawScore)>,
    K: AsRef<str>,
{
    let mut items: Vec<(String, Slot, RawScore)> = Vec::new();
    for (key, value) in raw {
        let key = key.as_ref();
        let slot = Slot::from_name(key).ok_or_else(|| ScoreError::UnknownKey {
            key: key.to_string(),
        })?;
        items.push((key.to_string(), slot, value));
    }
    if items.is_empty() {
        return Err(ScoreError::Empty);
    }

    let mut seen = BTreeSet::new();
    for (key, slot, _) in &items {
        if !seen.insert(*slot) {
            return Err(ScoreError::DuplicateKey { key: key.clone() });
        }
    }

    let (first_key, first_slot, _) = &items[0];
    let wheel = first_slot.wheel();
    if let Some((other_key, other_slot, _)) = items.iter().find(|(_, s, _)| s.wheel() != wheel) {
        return Err(ScoreError::MixedKinds {
            first: first_key.clone(),
            first_kind: wheel.describe().to_string(),
            second: other_key.clone(),
            second_kind: other_slot.wheel().describe().to_string(),
        });
    }

    for (key, slot, value) in &items {
        if let RawScore::Sequence(seq) = value {
            if matches!(slot, Slot::Dyad(_)) {
                return Err(ScoreError::BadValue {
                    key: key.clone(),
                    reason: "dyad scores must be single numbers".into(),
                });
            }
            if seq.len() != 3 {
                return Err(ScoreError::BadValue {
                    key: key.clone(),
                    reason: format!("intensity scores need 3 numbers, got {}", seq.len()),
                });
            }
        }
    }

    let kind = match wheel {
        Wheel::Dyads(k) => ScoreKind::for_dyads(k),
        Wheel::Basic => {
            let scalar = items.iter().find(|(_, _, v)| matches!(v, RawScore::Scalar(_)));
            let triple = items.iter().find(|(_, _, v)| matches!(v, RawScore::Sequence(_)));
            match (scalar, triple) {
                (Some((a, _, _)), Some((b, _, _))) => {
                    return Err(ScoreError::MixedKinds {
                        first: a.clone(),
                        first_kind: "a single score".into(),
                        second: b.clone(),
                        second_kind: "an intensity triple".into(),
                    })
                }
                (_, Some(_)) => ScoreKind::BasicIntensity,
                _ => ScoreKind::BasicScalar,
            }
        }
    };

    let slots = wheel.slots();
    let missing: Vec<String> = slots
        .iter()
        .filter(|s| !seen.contains(*s))
        .map(|s| s.name().to_string())
        .collect();
    if !missing.is_empty() {
        return Err(ScoreError::WrongArity {
            kind,
            expected: slots.len(),
            found: items.len(),
            missing,
        });
    }

    let mut checked = Vec::with_capacity(items.len());
    for (key, slot, value) in &items {
        let score = match value {
            RawScore::Scalar(v) => Score::Scalar(check_unit(key, *v)?),
            RawScore::Sequence(seq) => {
                let parts = seq
                    .iter()
                    .map(|v| check_unit(key, *v))
                    .collect::<Result<Vec<_>, _>>()?;
                Score::Intensity(IntensityTriple {
                    mild: parts[0],
                    medium: parts[1],
                    intense: parts[2],
                })
            }
        };
        checked.push((key, *slot, score));
    }
    for (key, _, score) in &checked {
        if let Score::Intensity(t) = score {
            if t.total() > 1.0 + EPSILON {
                return Err(ScoreError::TripleOverflow {
                    key: (*key).clone(),
                    sum: t.total(),
                });
            }
        }
    }

    let entries = slots
        .into_iter()
        .map(|slot| {
            let score = checked
                .iter()
                .find(|(_, s, _)| *s == slot)
                .map(|(_, _, v)| *v)
                .expect("arity checked");
            (slot, score)
        })
        .collect();
    Ok(ScoreSet { kind, entries })
}

/// Per-slot arithmetic mean of score sets of one kind.
pub fn aggregate_corpus(texts: &[ScoreSet]) -> Result<ScoreSet, Error> {
    let first = texts.first().ok_or(Error::EmptyCorpus)?;
    let kind = first.kind;
    if let Some(index) = texts.iter().position(|t| t.kind != kind) {
        return Err(Error::HeterogeneousKinds {
            index,
            expected: kind,
            found: texts[index].kind,
        });
    }
    let n = texts.len() as f64;
    let entries = first
        .entries
        .iter()
        .enumerate()
        .map(|(i, (slot, score))| {
            let mean = match score {
                Score::Scalar(_) => {
                    let sum: f64 = texts
                        .iter()
                        .map(|t| match t.entries[i].1 {
                            Score::Scalar(v) => v,
                            Score::Intensity(_) => unreachable!("kind checked"),
                        })
                        .sum();
                    Score::Scalar((sum / n).clamp(0.0, 1.0))
                }
                Score::Intensity(_) => {
                    let mut sum = [0.0; 3];
                    for t in texts {
                        if let Score::Intensity(triple) = t.entries[i].1 {
                            for (acc, v) in sum.iter_mut().zip(triple.as_array()) {
                                *acc += v;
                            }
                        }
                    }
                    let [mild, medium, intense] = sum.map(|s| (s / n).clamp(0.0, 1.0));
                    Score::Intensity(IntensityTriple {
                        mild,
                        medium,
                        intense,
                    })
                }
            };
            (*slot, mean)
        })
        .collect();
    Ok(ScoreSet { kind, entries })
}

fn capitalize(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}
