//! Oracles and helpers shared by the integration tests. Nothing here calls
//! into the library's own validation or area code.
#![allow(dead_code)]

use plutchik::geometry::{CanvasPoint, PetalPath, Segment};
use plutchik::RawScore;
use rand::seq::SliceRandom;
use rand::Rng;

pub const BASIC: [&str; 8] = [
    "joy", "trust", "fear", "surprise", "sadness", "disgust", "anger", "anticipation",
];
pub const PRIMARY: [&str; 8] = [
    "love", "submission", "awe", "disapproval", "remorse", "contempt", "aggressiveness",
    "optimism",
];
pub const SECONDARY: [&str; 8] = [
    "guilt", "curiosity", "despair", "unbelief", "envy", "cynicism", "pride", "hope",
];
pub const TERTIARY: [&str; 8] = [
    "delight", "sentimentality", "shame", "outrage", "pessimism", "morbidness", "dominance",
    "anxiety",
];
pub const OPPOSITE: [&str; 4] = ["bittersweetness", "ambivalence", "frozenness", "confusion"];

/// Name table per wheel: basic, primary, secondary, tertiary, opposite.
pub fn wheels() -> [&'static [&'static str]; 5] {
    [&BASIC, &PRIMARY, &SECONDARY, &TERTIARY, &OPPOSITE]
}

fn wheel_of(key: &str) -> Option<usize> {
    let k = key.to_lowercase();
    wheels().iter().position(|w| w.contains(&k.as_str()))
}

/// Brute-force classification of a raw mapping. `Ok` holds the kind name the
/// library should infer; `Err` holds the exit code of the first failure.
pub fn oracle_validate(raw: &[(String, RawScore)]) -> Result<&'static str, i32> {
    const EPS: f64 = 1e-9;
    for (k, _) in raw {
        if wheel_of(k).is_none() {
            return Err(10);
        }
    }
    if raw.is_empty() {
        return Err(17);
    }
    for i in 0..raw.len() {
        for j in 0..i {
            if raw[i].0.to_lowercase() == raw[j].0.to_lowercase() {
                return Err(11);
            }
        }
    }
    let wheel = wheel_of(&raw[0].0).unwrap();
    if raw.iter().any(|(k, _)| wheel_of(k) != Some(wheel)) {
        return Err(12);
    }
    for (_, v) in raw {
        if let RawScore::Sequence(s) = v {
            if wheel != 0 || s.len() != 3 {
                return Err(13);
            }
        }
    }
    let seqs = raw.iter().filter(|(_, v)| matches!(v, RawScore::Sequence(_))).count();
    if seqs != 0 && seqs != raw.len() {
        return Err(12);
    }
    if raw.len() != wheels()[wheel].len() {
        return Err(14);
    }
    let in_range = |x: f64| x.is_finite() && x >= -EPS && x <= 1.0 + EPS;
    for (_, v) in raw {
        let ok = match v {
            RawScore::Scalar(x) => in_range(*x),
            RawScore::Sequence(s) => s.iter().all(|x| in_range(*x)),
        };
        if !ok {
            return Err(15);
        }
    }
    for (_, v) in raw {
        if let RawScore::Sequence(s) = v {
            let sum: f64 = s.iter().map(|x| x.clamp(0.0, 1.0)).sum();
            if sum > 1.0 + EPS {
                return Err(16);
            }
        }
    }
    Ok(match (wheel, seqs > 0) {
        (0, false) => "basic_scalar",
        (0, true) => "basic_intensity",
        (1, _) => "dyad_primary",
        (2, _) => "dyad_secondary",
        (3, _) => "dyad_tertiary",
        _ => "dyad_opposite",
    })
}

fn triple<R: Rng>(rng: &mut R) -> Vec<f64> {
    let mut cuts = [rng.gen::<f64>(), rng.gen::<f64>()];
    cuts.sort_by(f64::total_cmp);
    let scale = rng.gen_range(0.0..=1.0);
    vec![cuts[0] * scale, (cuts[1] - cuts[0]) * scale, (1.0 - cuts[1]) * scale * 0.999]
}

fn shout(key: &str) -> String {
    let mut c = key.chars();
    match c.next() {
        Some(f) => f.to_uppercase().chain(c).collect(),
        None => String::new(),
    }
}

/// A random mapping: a valid one of a random kind, then zero to three
/// random corruptions.
pub fn random_mapping<R: Rng>(rng: &mut R) -> Vec<(String, RawScore)> {
    let wheel = rng.gen_range(0..5);
    let intensity = wheel == 0 && rng.gen_bool(0.5);
    let mut raw: Vec<(String, RawScore)> = wheels()[wheel]
        .iter()
        .map(|k| {
            let v = if intensity {
                RawScore::Sequence(triple(rng))
            } else {
                RawScore::Scalar(rng.gen_range(0.0..=1.0))
            };
            let key = if rng.gen_bool(0.1) { shout(k) } else { k.to_string() };
            (key, v)
        })
        .collect();
    raw.shuffle(rng);

    for _ in 0..rng.gen_range(0..=3) {
        if raw.is_empty() {
            break;
        }
        let i = rng.gen_range(0..raw.len());
        match rng.gen_range(0..13) {
            0 => {
                raw.remove(i);
            }
            1 => raw.push(("happiness".into(), RawScore::Scalar(0.5))),
            2 => {
                let dup = (raw[i].0.to_uppercase(), raw[i].1.clone());
                raw.push(dup);
            }
            3 => {
                let other = (wheel + rng.gen_range(1..5)) % 5;
                let names = wheels()[other];
                let name = names[rng.gen_range(0..names.len())];
                raw.push((name.into(), RawScore::Scalar(0.1)));
            }
            4 => raw[i].1 = RawScore::Scalar(rng.gen_range(1.001..3.0)),
            5 => raw[i].1 = RawScore::Scalar(-rng.gen_range(0.001..1.0)),
            6 => raw[i].1 = RawScore::Scalar(f64::NAN),
            7 => raw[i].1 = RawScore::Sequence(vec![0.5, 0.4, 0.3]),
            8 => raw[i].1 = RawScore::Sequence(vec![0.1; rng.gen_range(0..6)]),
            9 => raw[i].1 = RawScore::Scalar(1.0 + 1e-10),
            10 => raw[i].1 = RawScore::Scalar(-1e-10),
            11 => raw[i].1 = RawScore::Sequence(vec![0.2, f64::INFINITY, 0.0]),
            _ => raw.clear(),
        }
    }
    raw
}

pub fn bernstein(p: &[CanvasPoint; 4], t: f64) -> CanvasPoint {
    let s = 1.0 - t;
    let w = [s * s * s, 3.0 * s * s * t, 3.0 * s * t * t, t * t * t];
    CanvasPoint::new(
        (0..4).map(|i| w[i] * p[i].x).sum(),
        (0..4).map(|i| w[i] * p[i].y).sum(),
    )
}

/// Dense polyline through a path: cubics sampled at `n` uniform parameter
/// steps, lines at their endpoints.
pub fn sample_path(path: &PetalPath, n: usize) -> Vec<CanvasPoint> {
    let mut pts = Vec::new();
    for seg in path.segments() {
        match seg {
            Segment::Line(a, _) => pts.push(*a),
            Segment::Cubic(c) => {
                for i in 0..n {
                    pts.push(bernstein(c, i as f64 / n as f64));
                }
            }
        }
    }
    pts
}

pub fn shoelace(pts: &[CanvasPoint]) -> f64 {
    let n = pts.len();
    let twice: f64 = (0..n)
        .map(|i| {
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            a.x * b.y - b.x * a.y
        })
        .sum();
    0.5 * twice.abs()
}

/// Area by dense sampling and the shoelace formula.
pub fn sampled_area(path: &PetalPath) -> f64 {
    if path.is_empty() {
        return 0.0;
    }
    shoelace(&sample_path(path, 4000))
}

/// Attribute `attr` of the element with id `id` in an SVG string.
pub fn attr_of(svg: &str, id: &str, attr: &str) -> Option<String> {
    let doc = roxmltree::Document::parse(svg).expect("well-formed SVG");
    let node = doc.descendants().find(|n| n.attribute("id") == Some(id))?;
    node.attribute(attr).map(str::to_string)
}

/// `(id, d)` of every path whose id starts with `petal-`, in document order.
pub fn petal_paths(svg: &str) -> Vec<(String, String)> {
    let doc = roxmltree::Document::parse(svg).expect("well-formed SVG");
    doc.descendants()
        .filter(|n| n.has_tag_name("path"))
        .filter_map(|n| {
            let id = n.attribute("id")?;
            id.starts_with("petal-")
                .then(|| (id.to_string(), n.attribute("d").unwrap_or("").to_string()))
        })
        .collect()
}

/// Ids of filled petal pieces with non-empty geometry.
pub fn visible_petal_fills(svg: &str) -> Vec<String> {
    petal_paths(svg)
        .into_iter()
        .filter(|(id, d)| !id.ends_with("-outline") && !d.trim().is_empty())
        .map(|(id, _)| id)
        .collect()
}

/// All `(id, element)` pairs with an id, as (id, tag, attributes) tuples.
pub fn elements(svg: &str) -> Vec<(String, String, Vec<(String, String)>)> {
    let doc = roxmltree::Document::parse(svg).expect("well-formed SVG");
    doc.descendants()
        .filter(|n| n.is_element())
        .filter_map(|n| {
            let id = n.attribute("id")?;
            Some((
                id.to_string(),
                n.tag_name().name().to_string(),
                n.attributes()
                    .map(|a| (a.name().to_string(), a.value().to_string()))
                    .collect(),
            ))
        })
        .collect()
}

pub fn samples_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("samples")
}

pub mod figures {
    use plutchik::{DyadKind, Emotion, Highlight, IntensityTriple, RenderOptions, ScoreSet};

    /// Joy, trust and sadness at full score, the rest zero.
    pub fn three_petals() -> ScoreSet {
        ScoreSet::basic([1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]).unwrap()
    }

    pub fn full_wheel() -> ScoreSet {
        ScoreSet::basic([0.72, 0.55, 0.18, 0.41, 0.12, 0.08, 0.23, 0.64]).unwrap()
    }

    pub fn intensity_wheel() -> ScoreSet {
        let t = |a, b, c| IntensityTriple::new(a, b, c).unwrap();
        ScoreSet::intensity([
            t(0.2, 0.3, 0.1),
            t(0.1, 0.4, 0.2),
            t(0.3, 0.1, 0.0),
            t(0.0, 0.2, 0.5),
            t(0.1, 0.1, 0.1),
            t(0.05, 0.1, 0.0),
            t(0.2, 0.2, 0.3),
            t(0.3, 0.3, 0.3),
        ])
    }

    /// Anticipation and joy highlighted, with their three intensity scores.
    pub fn highlight_options() -> RenderOptions {
        let focus: std::collections::BTreeSet<Emotion> =
            [Emotion::Anticipation, Emotion::Joy].into_iter().collect();
        RenderOptions {
            highlight_emotions: Highlight::Only(focus.clone()),
            show_intensity_labels: focus,
            ..RenderOptions::default()
        }
    }

    /// Twenty-five deterministic basic score sets for a 5x5 grid.
    pub fn grid_sets() -> Vec<ScoreSet> {
        (0..25)
            .map(|k| {
                let v: [f64; 8] =
                    std::array::from_fn(|i| ((k * 7 + i * 3) % 11) as f64 / 10.0);
                ScoreSet::basic(v).unwrap()
            })
            .collect()
    }

    /// A basic wheel followed by primary, secondary, tertiary and opposite
    /// dyad wheels, with scores shifted by `seed`.
    pub fn dyad_row(seed: usize) -> Vec<ScoreSet> {
        let vals = |n: usize| -> Vec<f64> {
            (0..n).map(|i| ((i * 5 + seed * 3) % 9 + 1) as f64 / 10.0).collect()
        };
        let mut row = vec![ScoreSet::basic(vals(8).try_into().unwrap()).unwrap()];
        for kind in DyadKind::ALL {
            row.push(ScoreSet::dyads(kind, &vals(kind.count())).unwrap());
        }
        row
    }
}

/// Compares `svg` with `tests/golden/<name>.svg`. Set `UPDATE_GOLDEN=1` to
/// rewrite the snapshot instead.
pub fn check_golden(name: &str, svg: &str) -> Result<(), String> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.svg"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, svg).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path)
        .map_err(|e| format!("{}: {e} (run with UPDATE_GOLDEN=1)", path.display()))?;
    if expected == svg {
        Ok(())
    } else {
        let line = expected
            .lines()
            .zip(svg.lines())
            .position(|(a, b)| a != b)
            .map_or(expected.lines().count().min(svg.lines().count()), |l| l)
            + 1;
        Err(format!("{name}: output differs from snapshot at line {line}"))
    }
}
