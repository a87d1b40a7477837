//! Builds a [`VectorDoc`] for one wheel.
//!
//! Draw order, bottom to top: grid circles and axes, petals, the white
//! center disc, the dyad ring and center annotation, then text labels.
//!
//! Element ids: `grid-<radius>`, `axis-<slot>`, `petal-<slot>` (a group
//! holding the fill pieces and a `petal-<slot>-outline`), `center`,
//! `center-label`, `ring`, `label-<slot>`, `score-<slot>` and `title`.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use crate::doc::{
    Anchor, Circle, Font, FontWeight, Group, Line, Node, Path, PathCmd, PathData, Rgb, Style,
    Text, VectorDoc,
};
use crate::emotion::{Degree, DyadKind, Emotion, Score, ScoreKind, ScoreSet, Slot};
use crate::error::{Error, Result};
use crate::geometry::{
    grid_arcs, intensity_sections, label_anchor, petal_outline, two_tone_halves, CanvasPoint,
    PetalPath, CANVAS_EXTENT, CENTER_RADIUS, DEFAULT_RATIO,
};

/// Document points per canvas unit. The 3.2-unit canvas becomes an 8 inch
/// (576 pt) square, large enough for 15 pt labels at the label radii.
pub const POINTS_PER_UNIT: f64 = 180.0;
/// Blank space left and right of the canvas, in canvas units, so that long
/// names on horizontal axes are not clipped.
pub const SIDE_MARGIN: f64 = 0.5;
/// Smallest petal ratio whose widest petal still fits the canvas.
pub const MIN_RATIO: f64 = 1.0 / (2.0 * CANVAS_EXTENT);

pub const RING_INNER: f64 = 1.02;
pub const RING_OUTER: f64 = 1.10;
const INTENSITY_STACK_RADIUS: f64 = 1.12;
const GHOST: Rgb = Rgb(217, 217, 217);
const GRID_COLOR: Rgb = Rgb(204, 204, 204);
const BOUNDARY_COLOR: Rgb = Rgb(153, 153, 153);
const DYAD_OUTLINE: Rgb = Rgb(64, 64, 64);
const OUTLINE_WIDTH: f64 = 0.75;

/// Which emotions keep their colored fill.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Highlight {
    #[default]
    All,
    Only(BTreeSet<Emotion>),
}

impl Highlight {
    pub fn contains(&self, e: Emotion) -> bool {
        match self {
            Highlight::All => true,
            Highlight::Only(set) => set.contains(&e),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Grid, axes and outer labels.
    pub show_coordinates: bool,
    /// Petal length over petal width; lower is thicker.
    pub height_width_ratio: f64,
    pub highlight_emotions: Highlight,
    /// Emotions whose three intensity scores are printed separately.
    pub show_intensity_labels: BTreeSet<Emotion>,
    /// Points.
    pub font_size: f64,
    pub font_family: String,
    pub font_weight: FontWeight,
    pub title: Option<String>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            show_coordinates: true,
            height_width_ratio: DEFAULT_RATIO,
            highlight_emotions: Highlight::All,
            show_intensity_labels: BTreeSet::new(),
            font_size: 15.0,
            font_family: "sans-serif".into(),
            font_weight: FontWeight::Light,
            title: None,
        }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<()> {
        let ratio = self.height_width_ratio;
        if !(ratio > 0.0 && ratio.is_finite()) {
            return Err(Error::NonPositiveRatio(ratio));
        }
        if ratio < MIN_RATIO {
            return Err(Error::InvalidOption(format!(
                "height/width ratio {ratio} is below {MIN_RATIO}; petals would leave the canvas"
            )));
        }
        if !(self.font_size > 0.0 && self.font_size.is_finite()) {
            return Err(Error::InvalidOption(format!(
                "font size must be positive, got {}",
                self.font_size
            )));
        }
        Ok(())
    }

    fn font(&self, scale: f64) -> Font {
        Font {
            family: self.font_family.clone(),
            size: self.font_size * scale,
            weight: self.font_weight,
        }
    }
}

/// Hard-coded wheel colors, indexed by wheel position, as
/// `[intense, medium, mild]`.
const PALETTE: [[Rgb; 3]; 8] = [
    [Rgb(255, 196, 0), Rgb(255, 220, 74), Rgb(255, 238, 160)], // joy: yellow
    [Rgb(61, 170, 46), Rgb(139, 209, 122), Rgb(195, 232, 182)], // trust: green
    [Rgb(0, 122, 77), Rgb(46, 158, 115), Rgb(155, 211, 188)],  // fear: dark green
    [Rgb(0, 145, 200), Rgb(63, 177, 222), Rgb(168, 220, 240)], // surprise: light blue
    [Rgb(28, 79, 160), Rgb(74, 120, 196), Rgb(166, 189, 228)], // sadness: blue
    [Rgb(122, 46, 158), Rgb(160, 94, 192), Rgb(211, 180, 228)], // disgust: violet
    [Rgb(208, 2, 27), Rgb(232, 73, 79), Rgb(245, 169, 171)],   // anger: red
    [Rgb(240, 120, 0), Rgb(247, 154, 62), Rgb(252, 203, 153)], // anticipation: orange
];

pub fn color_for(e: Emotion, degree: Degree) -> Rgb {
    let row = &PALETTE[e.wheel_index()];
    match degree {
        Degree::Intense => row[0],
        Degree::Medium => row[1],
        Degree::Mild => row[2],
    }
}

/// Fill used for petals outside the highlight set.
pub fn ghost_color() -> Rgb {
    GHOST
}

/// Maps canvas inches (y up, origin at wheel center) to document points.
#[derive(Clone, Copy)]
struct Frame {
    top: f64,
}

const LEFT: f64 = (SIDE_MARGIN + CANVAS_EXTENT) * POINTS_PER_UNIT;

impl Frame {
    fn map(self, p: CanvasPoint) -> (f64, f64) {
        (
            LEFT + p.x * POINTS_PER_UNIT,
            self.top + (CANVAS_EXTENT - p.y) * POINTS_PER_UNIT,
        )
    }

    fn path_data(self, path: &PetalPath) -> PathData {
        let mut cmds = Vec::new();
        if let Some(first) = path.segments().first() {
            let (x, y) = self.map(first.start());
            cmds.push(PathCmd::MoveTo(x, y));
        }
        for seg in path.segments() {
            match seg {
                crate::geometry::Segment::Line(_, b) => {
                    let (x, y) = self.map(*b);
                    cmds.push(PathCmd::LineTo(x, y));
                }
                crate::geometry::Segment::Cubic([_, c1, c2, to]) => {
                    let (x1, y1) = self.map(*c1);
                    let (x2, y2) = self.map(*c2);
                    let (x, y) = self.map(*to);
                    cmds.push(PathCmd::CubicTo([x1, y1, x2, y2, x, y]));
                }
            }
        }
        if !cmds.is_empty() {
            cmds.push(PathCmd::Close);
        }
        PathData(cmds)
    }
}

fn anchor_for(angle: f64) -> Anchor {
    let c = angle.cos();
    if c > 0.2 {
        Anchor::Start
    } else if c < -0.2 {
        Anchor::End
    } else {
        Anchor::Middle
    }
}

fn fmt_score(v: f64) -> String {
    format!("{v:.2}")
}

fn fill_path(id: String, data: PathData, color: Rgb, title: String) -> Node {
    Node::Path(Path {
        id: Some(id),
        data,
        style: Style::fill(color),
        title: Some(title),
    })
}

fn petal_node(
    slot: Slot,
    score: &Score,
    options: &RenderOptions,
    frame: Frame,
) -> Result<Node> {
    let ratio = options.height_width_ratio;
    let angle = slot.angle();
    let id = format!("petal-{}", slot.name());
    let outline = petal_outline(angle, score.total(), ratio)?;
    let mut children = Vec::new();
    let outline_color = match slot {
        Slot::Emotion(e) => {
            let lit = options.highlight_emotions.contains(e);
            let fill = |d: Degree| if lit { color_for(e, d) } else { GHOST };
            match score {
                Score::Scalar(v) => children.push(fill_path(
                    format!("{id}-body"),
                    frame.path_data(&outline),
                    fill(Degree::Medium),
                    format!("{} {}", e.label(), fmt_score(*v)),
                )),
                Score::Intensity(t) => {
                    let sections = intensity_sections(angle, t, ratio)?;
                    let names = e.degree_names();
                    for (degree, path) in sections.iter() {
                        let name = match degree {
                            Degree::Mild => names[0],
                            Degree::Medium => names[1],
                            Degree::Intense => names[2],
                        };
                        children.push(fill_path(
                            format!("{id}-{}", degree.name()),
                            frame.path_data(path),
                            fill(degree),
                            format!("{} {}", capitalize(name), fmt_score(t.get(degree))),
                        ));
                    }
                }
            }
            color_for(e, Degree::Intense)
        }
        Slot::Dyad(d) => {
            let halves = two_tone_halves(angle, score.total(), ratio)?;
            let (a, b) = d.components();
            let a_is_ccw = (a.angle() - angle).sin() > 0.0;
            let (ccw, cw) = if a_is_ccw { (a, b) } else { (b, a) };
            let title = format!("{} ({} + {}) {}", d.label(), a, b, fmt_score(score.total()));
            for (e, half) in [(ccw, &halves.ccw), (cw, &halves.cw)] {
                let color = if options.highlight_emotions.contains(e) {
                    color_for(e, Degree::Medium)
                } else {
                    GHOST
                };
                children.push(fill_path(
                    format!("{id}-{}", e.name()),
                    frame.path_data(half),
                    color,
                    title.clone(),
                ));
            }
            DYAD_OUTLINE
        }
    };
    children.push(Node::Path(Path {
        id: Some(format!("{id}-outline")),
        data: frame.path_data(&outline),
        style: Style::stroke(outline_color, OUTLINE_WIDTH),
        title: None,
    }));
    Ok(Node::Group(Group {
        id: Some(id),
        transform: None,
        children,
    }))
}

fn grid_nodes(slots: &[Slot], frame: Frame) -> Node {
    let (cx, cy) = frame.map(CanvasPoint::ORIGIN);
    let mut children: Vec<Node> = grid_arcs()
        .into_iter()
        .map(|c| {
            let (color, width) = if c.boundary {
                (BOUNDARY_COLOR, 0.75)
            } else {
                (GRID_COLOR, 0.5)
            };
            Node::Circle(Circle {
                id: Some(format!("grid-{:.1}", c.radius)),
                cx,
                cy,
                r: c.radius * POINTS_PER_UNIT,
                style: Style::stroke(color, width),
            })
        })
        .collect();
    for slot in slots {
        children.push(Node::Line(Line {
            id: Some(format!("axis-{}", slot.name())),
            from: (cx, cy),
            to: frame.map(CanvasPoint::polar(1.0, slot.angle())),
            style: Style::stroke(GRID_COLOR, 0.5),
        }));
    }
    Node::Group(Group {
        id: Some("grid".into()),
        transform: None,
        children,
    })
}

fn text(id: String, at: (f64, f64), content: String, font: Font, anchor: Anchor) -> Node {
    Node::Text(Text {
        id: Some(id),
        x: at.0,
        y: at.1,
        content,
        font,
        anchor,
        fill: Rgb::BLACK,
    })
}

fn label_nodes(scores: &ScoreSet, options: &RenderOptions, frame: Frame) -> Node {
    let mut children = Vec::new();
    for (slot, score) in scores.entries() {
        let angle = slot.angle();
        let anchors = label_anchor(angle);
        let anchor = anchor_for(angle);
        children.push(text(
            format!("label-{}", slot.name()),
            frame.map(anchors.name),
            slot.label(),
            options.font(1.0),
            anchor,
        ));
        let stacked = match (slot, score) {
            (Slot::Emotion(e), Score::Intensity(t)) if options.show_intensity_labels.contains(e) => {
                Some(t)
            }
            _ => None,
        };
        match stacked {
            Some(t) => {
                let step = 0.65 * options.font_size;
                let (x, y) = frame.map(CanvasPoint::polar(INTENSITY_STACK_RADIUS, angle));
                for (row, degree) in [Degree::Mild, Degree::Medium, Degree::Intense]
                    .into_iter()
                    .enumerate()
                {
                    children.push(text(
                        format!("score-{}-{}", slot.name(), degree.name()),
                        (x, y + (row as f64 - 1.0) * step),
                        fmt_score(t.get(degree)),
                        options.font(0.6),
                        Anchor::Middle,
                    ));
                }
            }
            None => children.push(text(
                format!("score-{}", slot.name()),
                frame.map(anchors.score),
                fmt_score(score.total()),
                options.font(1.0),
                Anchor::Middle,
            )),
        }
    }
    Node::Group(Group {
        id: Some("labels".into()),
        transform: None,
        children,
    })
}

/// One colored band of the dyad ring.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RingArc {
    pub emotion: Emotion,
    /// Counterclockwise from `start` to `end`, radians in `[0, 2*PI)` for start.
    pub start: f64,
    pub end: f64,
}

/// Splits the ring into one sector per dyad, halved between its two
/// components, and merges neighboring halves of the same emotion.
pub fn ring_arcs(kind: DyadKind) -> Vec<RingArc> {
    let dyads: Vec<_> = crate::emotion::Dyad::of_kind(kind).collect();
    let half = PI / dyads.len() as f64;
    let mut arcs = Vec::new();
    for d in dyads {
        let axis = d.angle().rem_euclid(2.0 * PI);
        let (a, b) = d.components();
        let (ccw, cw) = if (a.angle() - axis).sin() > 0.0 { (a, b) } else { (b, a) };
        arcs.push(RingArc {
            emotion: cw,
            start: axis - half,
            end: axis,
        });
        arcs.push(RingArc {
            emotion: ccw,
            start: axis,
            end: axis + half,
        });
    }
    for arc in &mut arcs {
        let shift = arc.start.rem_euclid(2.0 * PI) - arc.start;
        arc.start += shift;
        arc.end += shift;
    }
    arcs.sort_by(|x, y| x.start.total_cmp(&y.start));

    let mut merged: Vec<RingArc> = Vec::new();
    for arc in arcs {
        match merged.last_mut() {
            Some(last) if last.emotion == arc.emotion && (last.end - arc.start).abs() < 1e-9 => {
                last.end = arc.end;
            }
            _ => merged.push(arc),
        }
    }
    if merged.len() > 1 {
        let last = merged[merged.len() - 1];
        let first = merged[0];
        if last.emotion == first.emotion && (last.end - (first.start + 2.0 * PI)).abs() < 1e-9 {
            merged.pop();
            merged[0].start = last.start - 2.0 * PI;
        }
    }
    merged
}

fn sector_path(arc: &RingArc, frame: Frame) -> PathData {
    let r_out = RING_OUTER * POINTS_PER_UNIT;
    let r_in = RING_INNER * POINTS_PER_UNIT;
    let large = arc.end - arc.start > PI;
    let p = |r: f64, a: f64| frame.map(CanvasPoint::polar(r, a));
    let (x0, y0) = p(RING_OUTER, arc.start);
    let (x1, y1) = p(RING_OUTER, arc.end);
    let (x2, y2) = p(RING_INNER, arc.end);
    let (x3, y3) = p(RING_INNER, arc.start);
    // Counterclockwise on the canvas is negative sweep once y points down.
    PathData(vec![
        PathCmd::MoveTo(x0, y0),
        PathCmd::ArcTo {
            r: r_out,
            large,
            sweep: false,
            x: x1,
            y: y1,
        },
        PathCmd::LineTo(x2, y2),
        PathCmd::ArcTo {
            r: r_in,
            large,
            sweep: true,
            x: x3,
            y: y3,
        },
        PathCmd::Close,
    ])
}

fn dyad_ring(kind: DyadKind, options: &RenderOptions, frame: Frame) -> Node {
    let mut children = Vec::new();
    for (k, arc) in ring_arcs(kind).iter().enumerate() {
        children.push(Node::Path(Path {
            id: Some(format!("ring-{k}-{}", arc.emotion.name())),
            data: sector_path(arc, frame),
            style: Style::fill(color_for(arc.emotion, Degree::Medium)),
            title: Some(arc.emotion.label()),
        }));
    }
    for (k, arc) in ring_arcs(kind).iter().enumerate() {
        let mid = 0.5 * (arc.start + arc.end);
        children.push(text(
            format!("ring-label-{k}"),
            frame.map(CanvasPoint::polar(0.5 * (RING_INNER + RING_OUTER), mid)),
            arc.emotion.label(),
            options.font(0.4),
            Anchor::Middle,
        ));
    }
    Node::Group(Group {
        id: Some("ring".into()),
        transform: None,
        children,
    })
}

/// The ring of constituent emotions drawn just outside the unit circle of a
/// dyad wheel.
pub fn render_dyad_ring(kind: DyadKind, options: &RenderOptions) -> Node {
    dyad_ring(kind, options, Frame { top: 0.0 })
}

fn annotation(kind: ScoreKind, options: &RenderOptions, frame: Frame) -> Option<Node> {
    let dyad = kind.dyad_kind()?;
    Some(text(
        "center-label".into(),
        frame.map(CanvasPoint::ORIGIN),
        dyad.annotation().into(),
        options.font(1.0),
        Anchor::Middle,
    ))
}

/// `"1"`, `"2"`, `"3"` or `"opp."` in the middle of a dyad wheel; nothing
/// for the basic wheel.
pub fn center_annotation(kind: ScoreKind, options: &RenderOptions) -> Option<Node> {
    annotation(kind, options, Frame { top: 0.0 })
}

/// Renders one wheel.
pub fn render_wheel(scores: &ScoreSet, options: &RenderOptions) -> Result<VectorDoc> {
    options.validate()?;
    if !options.show_intensity_labels.is_empty() && !scores.kind().is_intensity() {
        return Err(Error::InvalidOptionCombination(format!(
            "intensity labels need intensity scores, but the input is {}",
            scores.kind()
        )));
    }

    let side = 2.0 * CANVAS_EXTENT * POINTS_PER_UNIT;
    let width = side + 2.0 * SIDE_MARGIN * POINTS_PER_UNIT;
    let band = if options.title.is_some() {
        2.0 * options.font_size
    } else {
        0.0
    };
    let frame = Frame { top: band };
    let mut doc = VectorDoc::new(width, side + band);

    if let Some(title) = &options.title {
        doc.push(text(
            "title".into(),
            (width / 2.0, band / 2.0),
            title.clone(),
            options.font(1.2),
            Anchor::Middle,
        ));
    }

    let slots: Vec<Slot> = scores.entries().iter().map(|(s, _)| *s).collect();
    if options.show_coordinates {
        doc.push(grid_nodes(&slots, frame));
    }

    let petals = scores
        .entries()
        .iter()
        .map(|(slot, score)| petal_node(*slot, score, options, frame))
        .collect::<Result<Vec<_>>>()?;
    doc.push(Node::Group(Group {
        id: Some("petals".into()),
        transform: None,
        children: petals,
    }));

    let (cx, cy) = frame.map(CanvasPoint::ORIGIN);
    doc.push(Node::Circle(Circle {
        id: Some("center".into()),
        cx,
        cy,
        r: CENTER_RADIUS * POINTS_PER_UNIT,
        style: Style::fill(Rgb::WHITE),
    }));

    if let Some(kind) = scores.kind().dyad_kind() {
        doc.push(dyad_ring(kind, options, frame));
    }
    if let Some(node) = annotation(scores.kind(), options, frame) {
        doc.push(node);
    }
    if options.show_coordinates {
        doc.push(label_nodes(scores, options, frame));
    }
    Ok(doc)
}

pub fn render_svg(scores: &ScoreSet, options: &RenderOptions) -> Result<String> {
    render_wheel(scores, options).map(|d| d.to_svg())
}

fn capitalize(s: &str) -> String {
    let mut c = s.chars();
    c.next()
        .map(|f| f.to_uppercase().chain(c).collect())
        .unwrap_or_default()
}
