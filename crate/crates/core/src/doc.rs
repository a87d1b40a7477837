//! A small retained scene of paths, circles, lines and text, serialized to
//! standalone SVG 1.1.
//!
//! Coordinates are SVG user units (points) with +y pointing down. Numbers are
//! written with at most three decimals so output is byte-stable.

use std::fmt::{self, Write};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rgb(pub u8, pub u8, pub u8);

impl Rgb {
    pub const BLACK: Rgb = Rgb(0, 0, 0);
    pub const WHITE: Rgb = Rgb(255, 255, 255);

    /// HSV saturation in [0, 1].
    pub fn saturation(self) -> f64 {
        let max = self.0.max(self.1).max(self.2) as f64;
        let min = self.0.min(self.1).min(self.2) as f64;
        if max == 0.0 {
            0.0
        } else {
            (max - min) / max
        }
    }

    /// HSV hue in degrees, [0, 360).
    pub fn hue(self) -> f64 {
        let (r, g, b) = (self.0 as f64, self.1 as f64, self.2 as f64);
        let max = r.max(g).max(b);
        let delta = max - r.min(g).min(b);
        if delta == 0.0 {
            return 0.0;
        }
        let h = if max == r {
            ((g - b) / delta).rem_euclid(6.0)
        } else if max == g {
            (b - r) / delta + 2.0
        } else {
            (r - g) / delta + 4.0
        };
        h * 60.0
    }
}

impl fmt::Display for Rgb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{:02x}{:02x}{:02x}", self.0, self.1, self.2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Style {
    pub fill: Option<Rgb>,
    pub stroke: Option<Rgb>,
    pub stroke_width: f64,
}

impl Style {
    pub fn fill(color: Rgb) -> Style {
        Style {
            fill: Some(color),
            stroke: None,
            stroke_width: 0.0,
        }
    }

    pub fn stroke(color: Rgb, width: f64) -> Style {
        Style {
            fill: None,
            stroke: Some(color),
            stroke_width: width,
        }
    }

    fn write_attrs(&self, out: &mut String) {
        match self.fill {
            Some(c) => write!(out, " fill=\"{c}\"").unwrap(),
            None => out.push_str(" fill=\"none\""),
        }
        if let Some(c) = self.stroke {
            write!(out, " stroke=\"{c}\" stroke-width=\"{}\"", num(self.stroke_width)).unwrap();
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PathCmd {
    MoveTo(f64, f64),
    LineTo(f64, f64),
    CubicTo([f64; 6]),
    /// Circular arc of radius `r` to `(x, y)`.
    ArcTo {
        r: f64,
        large: bool,
        sweep: bool,
        x: f64,
        y: f64,
    },
    Close,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PathData(pub Vec<PathCmd>);

impl PathData {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `d` attribute value.
    pub fn to_svg(&self) -> String {
        let mut d = String::new();
        for cmd in &self.0 {
            if !d.is_empty() {
                d.push(' ');
            }
            match *cmd {
                PathCmd::MoveTo(x, y) => write!(d, "M{} {}", num(x), num(y)),
                PathCmd::LineTo(x, y) => write!(d, "L{} {}", num(x), num(y)),
                PathCmd::CubicTo(c) => write!(
                    d,
                    "C{} {} {} {} {} {}",
                    num(c[0]),
                    num(c[1]),
                    num(c[2]),
                    num(c[3]),
                    num(c[4]),
                    num(c[5])
                ),
                PathCmd::ArcTo { r, large, sweep, x, y } => write!(
                    d,
                    "A{} {} 0 {} {} {} {}",
                    num(r),
                    num(r),
                    large as u8,
                    sweep as u8,
                    num(x),
                    num(y)
                ),
                PathCmd::Close => write!(d, "Z"),
            }
            .unwrap();
        }
        d
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FontWeight {
    #[default]
    Light,
    Normal,
    Bold,
}

impl FontWeight {
    pub fn css(self) -> &'static str {
        match self {
            FontWeight::Light => "300",
            FontWeight::Normal => "400",
            FontWeight::Bold => "700",
        }
    }

    pub fn parse(s: &str) -> Option<FontWeight> {
        match s.to_ascii_lowercase().as_str() {
            "light" | "300" => Some(FontWeight::Light),
            "normal" | "400" => Some(FontWeight::Normal),
            "bold" | "700" => Some(FontWeight::Bold),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Font {
    pub family: String,
    pub size: f64,
    pub weight: FontWeight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anchor {
    Start,
    Middle,
    End,
}

impl Anchor {
    fn css(self) -> &'static str {
        match self {
            Anchor::Start => "start",
            Anchor::Middle => "middle",
            Anchor::End => "end",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Transform {
    pub tx: f64,
    pub ty: f64,
    pub scale: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Group {
    pub id: Option<String>,
    pub transform: Option<Transform>,
    pub children: Vec<Node>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Path {
    pub id: Option<String>,
    pub data: PathData,
    pub style: Style,
    pub title: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Circle {
    pub id: Option<String>,
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
    pub style: Style,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Line {
    pub id: Option<String>,
    pub from: (f64, f64),
    pub to: (f64, f64),
    pub style: Style,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Text {
    pub id: Option<String>,
    pub x: f64,
    pub y: f64,
    pub content: String,
    pub font: Font,
    pub anchor: Anchor,
    pub fill: Rgb,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Group(Group),
    Path(Path),
    Circle(Circle),
    Line(Line),
    Text(Text),
}

impl Node {
    pub fn id(&self) -> Option<&str> {
        match self {
            Node::Group(g) => g.id.as_deref(),
            Node::Path(p) => p.id.as_deref(),
            Node::Circle(c) => c.id.as_deref(),
            Node::Line(l) => l.id.as_deref(),
            Node::Text(t) => t.id.as_deref(),
        }
    }

    fn id_mut(&mut self) -> &mut Option<String> {
        match self {
            Node::Group(g) => &mut g.id,
            Node::Path(p) => &mut p.id,
            Node::Circle(c) => &mut c.id,
            Node::Line(l) => &mut l.id,
            Node::Text(t) => &mut t.id,
        }
    }

    pub fn children(&self) -> &[Node] {
        match self {
            Node::Group(g) => &g.children,
            _ => &[],
        }
    }

    /// This node and all of its descendants, depth first.
    pub fn walk(&self) -> Vec<&Node> {
        let mut out = vec![self];
        for c in self.children() {
            out.extend(c.walk());
        }
        out
    }

    fn prefix_ids(&mut self, prefix: &str) {
        if let Some(id) = self.id_mut() {
            *id = format!("{prefix}{id}");
        }
        if let Node::Group(g) = self {
            for c in &mut g.children {
                c.prefix_ids(prefix);
            }
        }
    }

    fn write(&self, out: &mut String, depth: usize) {
        let indent = "  ".repeat(depth);
        out.push_str(&indent);
        match self {
            Node::Group(g) => {
                out.push_str("<g");
                write_id(out, &g.id);
                if let Some(t) = g.transform {
                    write!(
                        out,
                        " transform=\"translate({} {}) scale({})\"",
                        num(t.tx),
                        num(t.ty),
                        num(t.scale)
                    )
                    .unwrap();
                }
                if g.children.is_empty() {
                    out.push_str("/>\n");
                    return;
                }
                out.push_str(">\n");
                for c in &g.children {
                    c.write(out, depth + 1);
                }
                out.push_str(&indent);
                out.push_str("</g>\n");
            }
            Node::Path(p) => {
                out.push_str("<path");
                write_id(out, &p.id);
                write!(out, " d=\"{}\"", p.data.to_svg()).unwrap();
                p.style.write_attrs(out);
                match &p.title {
                    Some(t) => {
                        write!(out, "><title>{}</title></path>\n", escape(t)).unwrap();
                    }
                    None => out.push_str("/>\n"),
                }
            }
            Node::Circle(c) => {
                out.push_str("<circle");
                write_id(out, &c.id);
                write!(out, " cx=\"{}\" cy=\"{}\" r=\"{}\"", num(c.cx), num(c.cy), num(c.r)).unwrap();
                c.style.write_attrs(out);
                out.push_str("/>\n");
            }
            Node::Line(l) => {
                out.push_str("<line");
                write_id(out, &l.id);
                write!(
                    out,
                    " x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"",
                    num(l.from.0),
                    num(l.from.1),
                    num(l.to.0),
                    num(l.to.1)
                )
                .unwrap();
                l.style.write_attrs(out);
                out.push_str("/>\n");
            }
            Node::Text(t) => {
                out.push_str("<text");
                write_id(out, &t.id);
                write!(
                    out,
                    " x=\"{}\" y=\"{}\" font-family=\"{}\" font-size=\"{}\" font-weight=\"{}\" \
                     text-anchor=\"{}\" dominant-baseline=\"central\" fill=\"{}\">{}</text>\n",
                    num(t.x),
                    num(t.y),
                    escape(&t.font.family),
                    num(t.font.size),
                    t.font.weight.css(),
                    t.anchor.css(),
                    t.fill,
                    escape(&t.content)
                )
                .unwrap();
            }
        }
    }
}

fn write_id(out: &mut String, id: &Option<String>) {
    if let Some(id) = id {
        write!(out, " id=\"{}\"", escape(id)).unwrap();
    }
}

/// A standalone vector document.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorDoc {
    pub width: f64,
    pub height: f64,
    pub nodes: Vec<Node>,
}

impl VectorDoc {
    pub fn new(width: f64, height: f64) -> Self {
        VectorDoc {
            width,
            height,
            nodes: Vec::new(),
        }
    }

    pub fn push(&mut self, node: Node) {
        self.nodes.push(node);
    }

    /// Every node in document order.
    pub fn walk(&self) -> Vec<&Node> {
        self.nodes.iter().flat_map(Node::walk).collect()
    }

    pub fn find(&self, id: &str) -> Option<&Node> {
        self.walk().into_iter().find(|n| n.id() == Some(id))
    }

    /// Moves every node into one group, prefixing ids so several documents
    /// can share one tree.
    pub fn into_group(self, id: String, transform: Transform) -> Node {
        let prefix = format!("{id}-");
        let mut children = self.nodes;
        for c in &mut children {
            c.prefix_ids(&prefix);
        }
        Node::Group(Group {
            id: Some(id),
            transform: Some(transform),
            children,
        })
    }

    pub fn to_svg(&self) -> String {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        write!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}pt\" \
             height=\"{h}pt\" viewBox=\"0 0 {w} {h}\">\n",
            w = num(self.width),
            h = num(self.height)
        )
        .unwrap();
        for node in &self.nodes {
            node.write(&mut out, 1);
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Formats a coordinate with at most three decimals and no negative zero.
pub fn num(v: f64) -> String {
    let mut s = format!("{v:.3}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(num(1.0), "1");
        assert_eq!(num(115.2), "115.2");
        assert_eq!(num(-0.0001), "0");
        assert_eq!(num(2.34567), "2.346");
        assert_eq!(num(-3.5), "-3.5");
    }

    #[test]
    fn hex_colors() {
        assert_eq!(Rgb(255, 200, 0).to_string(), "#ffc800");
        assert!((Rgb(255, 0, 0).saturation() - 1.0).abs() < 1e-12);
        assert_eq!(Rgb(217, 217, 217).saturation(), 0.0);
        assert!((Rgb(0, 0, 255).hue() - 240.0).abs() < 1e-12);
    }

    #[test]
    fn escapes_text() {
        let mut doc = VectorDoc::new(10.0, 10.0);
        doc.push(Node::Text(Text {
            id: Some("t".into()),
            x: 1.0,
            y: 2.0,
            content: "a<b & \"c\"".into(),
            font: Font {
                family: "sans-serif".into(),
                size: 15.0,
                weight: FontWeight::Light,
            },
            anchor: Anchor::Middle,
            fill: Rgb::BLACK,
        }));
        let svg = doc.to_svg();
        assert!(svg.contains("a&lt;b &amp; &quot;c&quot;"));
        assert!(roxmltree::Document::parse(&svg).is_ok());
    }

    #[test]
    fn grouping_prefixes_ids() {
        let mut doc = VectorDoc::new(10.0, 10.0);
        doc.push(Node::Circle(Circle {
            id: Some("center".into()),
            cx: 5.0,
            cy: 5.0,
            r: 1.0,
            style: Style::fill(Rgb::WHITE),
        }));
        let g = doc.into_group(
            "cell-0".into(),
            Transform {
                tx: 0.0,
                ty: 0.0,
                scale: 1.0,
            },
        );
        assert_eq!(g.children()[0].id(), Some("cell-0-center"));
    }

    #[test]
    fn path_data_syntax() {
        let d = PathData(vec![
            PathCmd::MoveTo(0.0, 0.0),
            PathCmd::CubicTo([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]),
            PathCmd::ArcTo {
                r: 2.0,
                large: false,
                sweep: true,
                x: 1.0,
                y: 1.0,
            },
            PathCmd::Close,
        ]);
        assert_eq!(d.to_svg(), "M0 0 C1 2 3 4 5 6 A2 2 0 0 1 1 1 Z");
    }
}
