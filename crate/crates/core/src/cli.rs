//! Command-line front end. [`run`] parses arguments, does the work and
//! returns the process exit code.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::doc::{Font, FontWeight, VectorDoc};
use crate::emotion::{Emotion, ScoreSet};
use crate::error::{Error, Result};
use crate::ingest::{group_corpus, load_scores, read_corpus};
use crate::layout::{render_grid, GridSpec};
use crate::render::{render_wheel, Highlight, RenderOptions};

/// Grids with more cells than this hide coordinates unless asked not to.
pub const GRID_COORDINATE_LIMIT: usize = 4;
const DEFAULT_GRID_COLS: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "plutchik", version, about = "Render Plutchik emotion wheels as SVG")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Render one score file, or several side by side (e.g. a dyad row).
    Render {
        /// Score JSON files; `-` reads standard input.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        style: StyleArgs,
        #[arg(long)]
        no_coordinates: bool,
        /// Output SVG path; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Average a corpus per group and show the groups in one row.
    Compare {
        /// JSON-lines or JSON-array corpus; `-` reads standard input.
        input: PathBuf,
        #[arg(long, default_value = "_group")]
        group_by: String,
        #[command(flatten)]
        style: StyleArgs,
        #[arg(long)]
        no_coordinates: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Small multiple: one wheel per record, or per group with --group-by.
    Grid {
        input: PathBuf,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long)]
        group_by: Option<String>,
        #[command(flatten)]
        style: StyleArgs,
        /// Default: shown only for grids of at most four cells.
        #[arg(long, conflicts_with = "no_coordinates")]
        coordinates: bool,
        #[arg(long)]
        no_coordinates: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct StyleArgs {
    /// Petal height/width ratio; lower is thicker.
    #[arg(long, default_value_t = crate::geometry::DEFAULT_RATIO)]
    pub ratio: f64,
    /// Comma-separated emotions to keep colored, or `all`.
    #[arg(long, default_value = "all")]
    pub highlight: String,
    /// Comma-separated emotions whose intensity scores are printed, `all` or `none`.
    #[arg(long, default_value = "none")]
    pub intensity_labels: String,
    #[arg(long, default_value_t = 15.0)]
    pub font_size: f64,
    #[arg(long, default_value = "sans-serif")]
    pub font_family: String,
    /// light, normal or bold.
    #[arg(long, default_value = "light")]
    pub font_weight: String,
    #[arg(long)]
    pub title: Option<String>,
}

/// Parses a comma-separated emotion list. `all` yields every emotion and
/// `none` (or an empty string) yields none.
pub fn parse_emotion_list(text: &str, flag: &str) -> Result<BTreeSet<Emotion>> {
    let text = text.trim();
    match text.to_ascii_lowercase().as_str() {
        "all" => return Ok(Emotion::ALL.into_iter().collect()),
        "none" | "" => return Ok(BTreeSet::new()),
        _ => {}
    }
    text.split(',')
        .map(|name| {
            Emotion::from_name(name.trim()).ok_or_else(|| {
                Error::InvalidOption(format!("--{flag}: `{}` is not a basic emotion", name.trim()))
            })
        })
        .collect()
}

impl StyleArgs {
    pub fn to_options(&self, show_coordinates: bool) -> Result<RenderOptions> {
        let highlight_emotions = if self.highlight.trim().eq_ignore_ascii_case("all") {
            Highlight::All
        } else {
            Highlight::Only(parse_emotion_list(&self.highlight, "highlight")?)
        };
        let font_weight = FontWeight::parse(&self.font_weight).ok_or_else(|| {
            Error::InvalidOption(format!(
                "--font-weight: expected light, normal or bold, got `{}`",
                self.font_weight
            ))
        })?;
        let options = RenderOptions {
            show_coordinates,
            height_width_ratio: self.ratio,
            highlight_emotions,
            show_intensity_labels: parse_emotion_list(&self.intensity_labels, "intensity-labels")?,
            font_size: self.font_size,
            font_family: self.font_family.clone(),
            font_weight,
            title: self.title.clone(),
        };
        options.validate()?;
        Ok(options)
    }
}

fn grid_shape(count: usize, rows: Option<usize>, cols: Option<usize>) -> Result<GridSpec> {
    let zero = |flag: &str| Error::InvalidOption(format!("--{flag} must be at least 1"));
    match (rows, cols) {
        (Some(0), _) => Err(zero("rows")),
        (_, Some(0)) => Err(zero("cols")),
        (Some(r), Some(c)) => Ok(GridSpec::new(r, c)),
        (Some(r), None) => Ok(GridSpec::new(r, count.div_ceil(r).max(1))),
        (None, Some(c)) => Ok(GridSpec::new(count.div_ceil(c).max(1), c)),
        (None, None) => Ok(GridSpec::fitting(count, DEFAULT_GRID_COLS)),
    }
}

fn titled(spec: GridSpec, titles: Vec<String>, options: &RenderOptions) -> GridSpec {
    let mut spec = spec.with_titles(titles);
    spec.title_font = Font {
        family: options.font_family.clone(),
        size: 2.0 * options.font_size,
        weight: options.font_weight,
    };
    spec
}

fn write_output(doc: &VectorDoc, output: Option<&Path>) -> Result<()> {
    let svg = doc.to_svg();
    match output {
        Some(path) => std::fs::write(path, svg).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => std::io::stdout()
            .lock()
            .write_all(svg.as_bytes())
            .map_err(|source| Error::Io {
                path: PathBuf::from("-"),
                source,
            }),
    }
}

/// Builds the document a parsed invocation describes, plus its output path.
pub fn execute(command: &Command) -> Result<(VectorDoc, Option<PathBuf>)> {
    match command {
        Command::Render {
            inputs,
            style,
            no_coordinates,
            output,
        } => {
            let options = style.to_options(!no_coordinates)?;
            let sets = inputs
                .iter()
                .map(|p| load_scores(p))
                .collect::<Result<Vec<_>>>()?;
            let doc = if let [single] = sets.as_slice() {
                render_wheel(single, &options)?
            } else {
                render_grid(&sets, &options, &GridSpec::row(sets.len()))?
            };
            Ok((doc, output.clone()))
        }
        Command::Compare {
            input,
            group_by,
            style,
            no_coordinates,
            output,
        } => {
            let options = style.to_options(!no_coordinates)?;
            let groups = group_corpus(&read_corpus(input, Some(group_by))?)?;
            let (titles, sets): (Vec<String>, Vec<ScoreSet>) = groups.into_iter().unzip();
            let spec = titled(GridSpec::row(sets.len()), titles, &options);
            Ok((render_grid(&sets, &options, &spec)?, output.clone()))
        }
        Command::Grid {
            input,
            rows,
            cols,
            group_by,
            style,
            coordinates,
            no_coordinates,
            output,
        } => {
            let corpus = read_corpus(input, group_by.as_deref())?;
            let (titles, sets): (Vec<Option<String>>, Vec<ScoreSet>) = if group_by.is_some() {
                group_corpus(&corpus)?
                    .into_iter()
                    .map(|(name, set)| (Some(name), set))
                    .unzip()
            } else {
                corpus.records.into_iter().map(|r| (r.id, r.scores)).unzip()
            };
            let mut spec = grid_shape(sets.len(), *rows, *cols)?;
            let show = if *coordinates {
                true
            } else if *no_coordinates {
                false
            } else {
                spec.cells() <= GRID_COORDINATE_LIMIT
            };
            let options = style.to_options(show)?;
            if titles.iter().all(Option::is_some) {
                spec = titled(spec, titles.into_iter().flatten().collect(), &options);
            }
            Ok((render_grid(&sets, &options, &spec)?, output.clone()))
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Diagnostics go to standard error as a single line.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = execute(&cli.command).and_then(|(doc, out)| write_output(&doc, out.as_deref()));
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("plutchik: error: {e}");
            e.code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn style(args: &[&str]) -> StyleArgs {
        let mut argv = vec!["plutchik", "render", "x.json"];
        argv.extend_from_slice(args);
        match Cli::try_parse_from(argv).unwrap().command {
            Command::Render { style, .. } => style,
            _ => unreachable!(),
        }
    }

    #[test]
    fn defaults_match_library() {
        assert_eq!(style(&[]).to_options(true).unwrap(), RenderOptions::default());
    }

    #[test]
    fn every_option_reachable() {
        let o = style(&[
            "--ratio", "2", "--highlight", "anger,Fear", "--intensity-labels", "joy",
            "--font-size", "9", "--font-family", "serif", "--font-weight", "bold",
            "--title", "T",
        ])
        .to_options(false)
        .unwrap();
        assert!(!o.show_coordinates);
        assert_eq!(o.height_width_ratio, 2.0);
        assert_eq!(
            o.highlight_emotions,
            Highlight::Only([Emotion::Anger, Emotion::Fear].into_iter().collect())
        );
        assert_eq!(o.show_intensity_labels, [Emotion::Joy].into_iter().collect());
        assert_eq!(o.font_size, 9.0);
        assert_eq!(o.font_family, "serif");
        assert_eq!(o.font_weight, FontWeight::Bold);
        assert_eq!(o.title.as_deref(), Some("T"));
    }

    #[test]
    fn option_errors() {
        assert_eq!(style(&["--highlight", "joy,love"]).to_options(true).unwrap_err().code(), 30);
        assert_eq!(style(&["--font-weight", "heavy"]).to_options(true).unwrap_err().code(), 30);
        assert_eq!(style(&["--ratio", "0"]).to_options(true).unwrap_err().code(), 32);
        assert_eq!(style(&["--ratio=-1"]).to_options(true).unwrap_err().code(), 32);
    }

    #[test]
    fn grid_shapes() {
        let s = grid_shape(20, None, None).unwrap();
        assert_eq!((s.rows, s.cols), (4, 5));
        let s = grid_shape(7, Some(2), None).unwrap();
        assert_eq!((s.rows, s.cols), (2, 4));
        let s = grid_shape(7, None, Some(3)).unwrap();
        assert_eq!((s.rows, s.cols), (3, 3));
        assert!(grid_shape(7, Some(0), None).is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["plutchik", "render"]), 2);
        assert_eq!(run(["plutchik", "render", "x.json", "--ratio", "abc"]), 2);
        assert_eq!(run(["plutchik", "frobnicate"]), 2);
    }
}
