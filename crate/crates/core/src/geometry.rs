//! Petal outlines, intensity sections, two-tone halves, grid circles and
//! label anchors.
//!
//! Everything here lives in canvas units (inches), with the wheel center at
//! the origin, +y pointing up and angles measured counterclockwise from +x.
//! A petal of score 1 reaches the unit circle.

use crate::emotion::{Degree, IntensityTriple};
use crate::error::{Error, Result};

/// Half-width of the square drawing area.
pub const CANVAS_EXTENT: f64 = 1.6;
pub const GRID_RADII: [f64; 5] = [0.2, 0.4, 0.6, 0.8, 1.0];
pub const SCORE_LABEL_RADIUS: f64 = 1.2;
pub const NAME_LABEL_RADIUS: f64 = 1.4;
pub const CENTER_RADIUS: f64 = 0.2;
pub const DEFAULT_RATIO: f64 = 1.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CanvasPoint {
    pub x: f64,
    pub y: f64,
}

impl CanvasPoint {
    pub const ORIGIN: CanvasPoint = CanvasPoint { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        CanvasPoint { x, y }
    }

    pub fn polar(radius: f64, angle: f64) -> Self {
        let (sin, cos) = angle.sin_cos();
        CanvasPoint::new(radius * cos, radius * sin)
    }

    /// Rotation about the origin.
    pub fn rotated(self, angle: f64) -> Self {
        let (sin, cos) = angle.sin_cos();
        CanvasPoint::new(self.x * cos - self.y * sin, self.x * sin + self.y * cos)
    }

    /// Mirror image across the line through the origin at `angle`.
    pub fn reflected(self, angle: f64) -> Self {
        let (sin, cos) = (2.0 * angle).sin_cos();
        CanvasPoint::new(self.x * cos + self.y * sin, self.x * sin - self.y * cos)
    }

    pub fn distance(self, other: CanvasPoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn in_canvas(self) -> bool {
        self.x.abs() <= CANVAS_EXTENT && self.y.abs() <= CANVAS_EXTENT
    }

    fn lerp(self, other: CanvasPoint, t: f64) -> CanvasPoint {
        CanvasPoint::new(
            self.x * (1.0 - t) + other.x * t,
            self.y * (1.0 - t) + other.y * t,
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Segment {
    Line(CanvasPoint, CanvasPoint),
    Cubic([CanvasPoint; 4]),
}

impl Segment {
    pub fn start(&self) -> CanvasPoint {
        match self {
            Segment::Line(a, _) => *a,
            Segment::Cubic(p) => p[0],
        }
    }

    pub fn end(&self) -> CanvasPoint {
        match self {
            Segment::Line(_, b) => *b,
            Segment::Cubic(p) => p[3],
        }
    }

    pub fn map(&self, f: impl Fn(CanvasPoint) -> CanvasPoint) -> Segment {
        match self {
            Segment::Line(a, b) => Segment::Line(f(*a), f(*b)),
            Segment::Cubic(p) => Segment::Cubic(p.map(f)),
        }
    }

    /// Contribution of this segment to the enclosed area of a closed path
    /// (Green's theorem, exact for cubics).
    pub fn signed_area(&self) -> f64 {
        match self {
            Segment::Line(a, b) => 0.5 * (a.x * b.y - b.x * a.y),
            Segment::Cubic([p0, p1, p2, p3]) => {
                (p0.x * (6.0 * p1.y + 3.0 * p2.y + p3.y)
                    + 3.0 * (p1.x * (-2.0 * p0.y + p2.y + p3.y)
                        - p2.x * (p0.y + p1.y - 2.0 * p3.y))
                    - p3.x * (p0.y + 3.0 * p1.y + 6.0 * p2.y))
                    / 20.0
            }
        }
    }

    /// Start, controls (for cubics) and end.
    pub fn points(&self) -> Vec<CanvasPoint> {
        match self {
            Segment::Line(a, b) => vec![*a, *b],
            Segment::Cubic(p) => p.to_vec(),
        }
    }
}

/// Closed outline of a petal or of one piece of a petal.
#[derive(Clone, Debug, PartialEq)]
pub struct PetalPath {
    segments: Vec<Segment>,
    axis_angle: f64,
    length: f64,
}

impl PetalPath {
    fn empty(axis_angle: f64) -> Self {
        PetalPath {
            segments: Vec::new(),
            axis_angle,
            length: 0.0,
        }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn axis_angle(&self) -> f64 {
        self.axis_angle
    }

    /// Radial extent encoded by this path (its score).
    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        match (self.segments.first(), self.segments.last()) {
            (Some(first), Some(last)) => {
                first.start() == last.end()
                    && self.segments.windows(2).all(|w| w[0].end() == w[1].start())
            }
            _ => true,
        }
    }

    pub fn signed_area(&self) -> f64 {
        self.segments.iter().map(Segment::signed_area).sum()
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    /// Every on-curve and control point, in order.
    pub fn points(&self) -> impl Iterator<Item = CanvasPoint> + '_ {
        self.segments.iter().flat_map(Segment::points)
    }

    pub fn rotated(&self, angle: f64) -> PetalPath {
        PetalPath {
            segments: self.segments.iter().map(|s| s.map(|p| p.rotated(angle))).collect(),
            axis_angle: self.axis_angle + angle,
            length: self.length,
        }
    }

    /// Mirror image across this path's own axis.
    pub fn reflected(&self) -> PetalPath {
        let axis = self.axis_angle;
        PetalPath {
            segments: self.segments.iter().map(|s| s.map(|p| p.reflected(axis))).collect(),
            axis_angle: axis,
            length: self.length,
        }
    }
}

/// Control polygons of the two sides of a petal in its local frame: axis
/// along +x, counterclockwise side toward +y. Both run from base to tip.
struct Leaf {
    ccw: [CanvasPoint; 4],
    cw: [CanvasPoint; 4],
}

impl Leaf {
    fn new(length: f64, ratio: f64) -> Leaf {
        // With both controls at the same point the side bulges to 3/4 of the
        // control offset, so this offset gives a widest half-width of
        // length / (2 * ratio), reached at radius length / 2.
        let offset = 2.0 * length / (3.0 * ratio);
        let ctrl = CanvasPoint::new(length / 2.0, offset);
        let tip = CanvasPoint::new(length, 0.0);
        let mirror = |p: CanvasPoint| CanvasPoint::new(p.x, -p.y);
        let ccw = [CanvasPoint::ORIGIN, ctrl, ctrl, tip];
        Leaf {
            ccw,
            cw: ccw.map(mirror),
        }
    }
}

/// Parameter at which a side reaches axial distance `fraction * length`.
/// The axial coordinate is `1.5 t (1 - t) + t^3` (times length), which is
/// strictly increasing on [0, 1].
fn param_at(fraction: f64) -> f64 {
    if fraction <= 0.0 {
        return 0.0;
    }
    if fraction >= 1.0 {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        let x = 1.5 * mid * (1.0 - mid) + mid * mid * mid;
        if x < fraction {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn split(p: [CanvasPoint; 4], t: f64) -> ([CanvasPoint; 4], [CanvasPoint; 4]) {
    let ab = p[0].lerp(p[1], t);
    let bc = p[1].lerp(p[2], t);
    let cd = p[2].lerp(p[3], t);
    let abc = ab.lerp(bc, t);
    let bcd = bc.lerp(cd, t);
    let mid = abc.lerp(bcd, t);
    ([p[0], ab, abc, mid], [mid, bcd, cd, p[3]])
}

/// The piece of a cubic between parameters `t0 < t1`.
fn sub_curve(p: [CanvasPoint; 4], t0: f64, t1: f64) -> [CanvasPoint; 4] {
    let head = if t1 >= 1.0 { p } else { split(p, t1).0 };
    if t0 <= 0.0 {
        head
    } else {
        split(head, t0 / t1).1
    }
}

fn reversed(p: [CanvasPoint; 4]) -> [CanvasPoint; 4] {
    [p[3], p[2], p[1], p[0]]
}

fn check_ratio(ratio: f64) -> Result<()> {
    if ratio > 0.0 && ratio.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveRatio(ratio))
    }
}

fn to_canvas(segments: Vec<Segment>, axis_angle: f64, length: f64) -> PetalPath {
    PetalPath {
        segments: segments
            .into_iter()
            .map(|s| s.map(|p| p.rotated(axis_angle)))
            .collect(),
        axis_angle,
        length,
    }
}

/// The band of a petal of total length `length` between axial distances
/// `inner` and `outer`.
fn band(axis_angle: f64, length: f64, ratio: f64, inner: f64, outer: f64) -> PetalPath {
    if outer <= inner || length <= 0.0 {
        return PetalPath::empty(axis_angle);
    }
    let leaf = Leaf::new(length, ratio);
    let t0 = param_at(inner / length);
    let t1 = param_at(outer / length);
    let a = sub_curve(leaf.ccw, t0, t1);
    let b = sub_curve(leaf.cw, t0, t1);
    let mut segments = vec![Segment::Cubic(a)];
    if t1 < 1.0 {
        segments.push(Segment::Line(a[3], b[3]));
    }
    segments.push(Segment::Cubic(reversed(b)));
    if t0 > 0.0 {
        segments.push(Segment::Line(b[0], a[0]));
    }
    to_canvas(segments, axis_angle, outer - inner)
}

/// Leaf-shaped petal from the origin to radius `length` along `axis_angle`,
/// made of two mirrored cubic sides. `aspect_ratio` is petal length over
/// full width: lower values give thicker petals.
pub fn petal_outline(axis_angle: f64, length: f64, aspect_ratio: f64) -> Result<PetalPath> {
    check_ratio(aspect_ratio)?;
    Ok(band(axis_angle, length, aspect_ratio, 0.0, length))
}

/// A petal cut across its axis into three bands, intense nearest the center.
#[derive(Clone, Debug, PartialEq)]
pub struct IntensitySections {
    pub intense: PetalPath,
    pub medium: PetalPath,
    pub mild: PetalPath,
}

impl IntensitySections {
    pub fn get(&self, degree: Degree) -> &PetalPath {
        match degree {
            Degree::Intense => &self.intense,
            Degree::Medium => &self.medium,
            Degree::Mild => &self.mild,
        }
    }

    /// Sections from the center outward.
    pub fn iter(&self) -> impl Iterator<Item = (Degree, &PetalPath)> {
        Degree::FROM_CENTER.into_iter().map(move |d| (d, self.get(d)))
    }
}

/// Splits a petal of length `triple.total()` at the cumulative sums
/// intense and intense + medium. Zero-score degrees give empty sections.
pub fn intensity_sections(
    axis_angle: f64,
    triple: &IntensityTriple,
    aspect_ratio: f64,
) -> Result<IntensitySections> {
    check_ratio(aspect_ratio)?;
    let length = triple.total();
    let first_cut = triple.intense();
    let second_cut = first_cut + triple.medium();
    Ok(IntensitySections {
        intense: band(axis_angle, length, aspect_ratio, 0.0, first_cut),
        medium: band(axis_angle, length, aspect_ratio, first_cut, second_cut),
        mild: band(axis_angle, length, aspect_ratio, second_cut, length),
    })
}

/// A petal split along its axis.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoTone {
    /// Half on the counterclockwise side of the axis.
    pub ccw: PetalPath,
    /// Half on the clockwise side of the axis.
    pub cw: PetalPath,
}

pub fn two_tone_halves(axis_angle: f64, length: f64, aspect_ratio: f64) -> Result<TwoTone> {
    check_ratio(aspect_ratio)?;
    if length <= 0.0 {
        return Ok(TwoTone {
            ccw: PetalPath::empty(axis_angle),
            cw: PetalPath::empty(axis_angle),
        });
    }
    let leaf = Leaf::new(length, aspect_ratio);
    let half = |side: [CanvasPoint; 4]| {
        to_canvas(
            vec![Segment::Cubic(side), Segment::Line(side[3], side[0])],
            axis_angle,
            length,
        )
    };
    Ok(TwoTone {
        ccw: half(leaf.ccw),
        cw: half(leaf.cw),
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridCircle {
    pub radius: f64,
    /// The unit circle bounding the longest possible petal.
    pub boundary: bool,
}

/// Reference circles behind the petals: four minor circles 0.2 apart plus
/// the unit boundary.
pub fn grid_arcs() -> Vec<GridCircle> {
    GRID_RADII
        .iter()
        .map(|&radius| GridCircle {
            radius,
            boundary: radius == 1.0,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LabelAnchor {
    pub name: CanvasPoint,
    pub score: CanvasPoint,
}

/// Where the name and the numeric score of an axis are written.
pub fn label_anchor(axis_angle: f64) -> LabelAnchor {
    LabelAnchor {
        name: CanvasPoint::polar(NAME_LABEL_RADIUS, axis_angle),
        score: CanvasPoint::polar(SCORE_LABEL_RADIUS, axis_angle),
    }
}
