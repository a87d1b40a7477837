//! Side-by-side comparisons and small-multiple grids of wheels.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::doc::{Anchor, Font, FontWeight, Node, Rgb, Text, Transform, VectorDoc};
use crate::emotion::ScoreSet;
use crate::error::{Error, Result};
use crate::render::{render_wheel, RenderOptions};

/// Padding on each side of a cell, as a fraction of the cell width.
pub const CELL_PADDING: f64 = 0.05;
/// Columns of the dyad-row preset: basic wheel then four dyad wheels.
pub const DYAD_ROW_COLS: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub rows: usize,
    pub cols: usize,
    pub cell_titles: Option<Vec<String>>,
    /// Per-cell render options replacing the shared ones in [`render_grid`].
    pub overrides: BTreeMap<usize, RenderOptions>,
    pub title_font: Font,
}

impl GridSpec {
    pub fn new(rows: usize, cols: usize) -> Self {
        GridSpec {
            rows,
            cols,
            cell_titles: None,
            overrides: BTreeMap::new(),
            title_font: Font {
                family: "sans-serif".into(),
                size: 15.0,
                weight: FontWeight::Light,
            },
        }
    }

    /// One row with a cell per wheel.
    pub fn row(count: usize) -> Self {
        Self::new(1, count.max(1))
    }

    /// Up to `max_cols` per row, as many rows as needed.
    pub fn fitting(count: usize, max_cols: usize) -> Self {
        let cols = count.clamp(1, max_cols.max(1));
        Self::new(count.max(1).div_ceil(cols), cols)
    }

    /// `rows` rows of basic, primary, secondary, tertiary and opposite wheels.
    pub fn dyad_row(rows: usize) -> Self {
        Self::new(rows, DYAD_ROW_COLS)
    }

    pub fn with_titles(mut self, titles: Vec<String>) -> Self {
        self.cell_titles = Some(titles);
        self
    }

    pub fn cells(&self) -> usize {
        self.rows * self.cols
    }

    /// Row-major cell of the `index`-th wheel.
    pub fn cell_of(&self, index: usize) -> (usize, usize) {
        (index / self.cols, index % self.cols)
    }

    fn check(&self, wheels: usize) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::InvalidOption(format!(
                "grid needs at least one row and column, got {}x{}",
                self.rows, self.cols
            )));
        }
        if wheels == 0 {
            return Err(Error::InvalidOption("grid needs at least one wheel".into()));
        }
        if wheels > self.cells() {
            return Err(Error::GridOverflow {
                wheels,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if let Some(titles) = &self.cell_titles {
            if titles.len() != wheels {
                return Err(Error::TitleMismatch {
                    titles: titles.len(),
                    wheels,
                });
            }
        }
        Ok(())
    }
}

/// Places wheels row-major into uniform cells. Each wheel keeps its own
/// aspect ratio and path data; only an outer translate/scale is added and
/// element ids are prefixed with `cell-<k>-`.
pub fn compose_grid(wheels: &[VectorDoc], spec: &GridSpec) -> Result<VectorDoc> {
    spec.check(wheels.len())?;
    let inner_w = wheels.iter().map(|w| w.width).fold(0.0, f64::max);
    let inner_h = wheels.iter().map(|w| w.height).fold(0.0, f64::max);
    let cell_w = inner_w / (1.0 - 2.0 * CELL_PADDING);
    let pad = CELL_PADDING * cell_w;
    let band = if spec.cell_titles.is_some() {
        2.0 * spec.title_font.size
    } else {
        0.0
    };
    let cell_h = inner_h + 2.0 * pad + band;

    let mut doc = VectorDoc::new(spec.cols as f64 * cell_w, spec.rows as f64 * cell_h);
    for (k, wheel) in wheels.iter().enumerate() {
        let (row, col) = spec.cell_of(k);
        let (x0, y0) = (col as f64 * cell_w, row as f64 * cell_h);
        let scale = (inner_w / wheel.width).min(inner_h / wheel.height);
        let tx = x0 + pad + (inner_w - wheel.width * scale) / 2.0;
        let ty = y0 + pad + band + (inner_h - wheel.height * scale) / 2.0;
        if let Some(titles) = &spec.cell_titles {
            doc.push(Node::Text(Text {
                id: Some(format!("cell-{k}-title")),
                x: x0 + cell_w / 2.0,
                y: y0 + pad + band / 2.0,
                content: titles[k].clone(),
                font: spec.title_font.clone(),
                anchor: Anchor::Middle,
                fill: Rgb::BLACK,
            }));
        }
        doc.push(
            wheel
                .clone()
                .into_group(format!("cell-{k}"), Transform { tx, ty, scale }),
        );
    }
    Ok(doc)
}

/// Renders every score set (in parallel) and composes them. Cells listed in
/// `spec.overrides` use their own options instead of `options`.
pub fn render_grid(scores: &[ScoreSet], options: &RenderOptions, spec: &GridSpec) -> Result<VectorDoc> {
    spec.check(scores.len())?;
    let wheels = scores
        .par_iter()
        .enumerate()
        .map(|(k, s)| render_wheel(s, spec.overrides.get(&k).unwrap_or(options)))
        .collect::<Result<Vec<_>>>()?;
    compose_grid(&wheels, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::emotion::ScoreKind;

    fn wheel() -> VectorDoc {
        render_wheel(&ScoreSet::zeros(ScoreKind::BasicScalar), &RenderOptions::default()).unwrap()
    }

    #[test]
    fn row_major_cells() {
        let spec = GridSpec::new(2, 5);
        for k in 0..10 {
            assert_eq!(spec.cell_of(k), (k / 5, k % 5));
        }
    }

    #[test]
    fn fitting_shapes() {
        let s = GridSpec::fitting(20, 5);
        assert_eq!((s.rows, s.cols), (4, 5));
        let s = GridSpec::fitting(3, 5);
        assert_eq!((s.rows, s.cols), (1, 3));
        assert_eq!(GridSpec::dyad_row(2).cells(), 10);
    }

    #[test]
    fn overflow_and_titles() {
        let w = vec![wheel(); 5];
        assert!(matches!(
            compose_grid(&w, &GridSpec::new(2, 2)),
            Err(Error::GridOverflow { wheels: 5, .. })
        ));
        let spec = GridSpec::new(2, 3).with_titles(vec!["a".into()]);
        assert!(matches!(
            compose_grid(&w, &spec),
            Err(Error::TitleMismatch { titles: 1, wheels: 5 })
        ));
        assert!(compose_grid(&[], &GridSpec::new(1, 1)).is_err());
    }

    #[test]
    fn single_cell_is_a_translation() {
        let w = wheel();
        let doc = compose_grid(std::slice::from_ref(&w), &GridSpec::new(1, 1)).unwrap();
        let Node::Group(g) = &doc.nodes[0] else { panic!() };
        let t = g.transform.unwrap();
        assert_eq!(t.scale, 1.0);
        assert!((t.tx - t.ty).abs() < 1e-12);
        assert_eq!(g.children.len(), w.nodes.len());
    }
}
