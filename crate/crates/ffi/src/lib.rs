//! C interface to the plutchik renderer.
//!
//! Scores and options live behind opaque handles created and destroyed by
//! this library. Every fallible call returns a [`PlutchikStatus`]; on failure
//! [`plutchik_last_error`] describes what went wrong. Strings handed out by
//! the library must be released with [`plutchik_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use plutchik::cli::parse_emotion_list;
use plutchik::ingest::{group_corpus, parse_corpus};
use plutchik::{
    load_scores, parse_score_json, render_grid, render_svg, Error, FontWeight, GridSpec,
    Highlight, RenderOptions, ScoreSet, Slot,
};

/// Result of a call. Nonzero values match the `plutchik` command's exit
/// codes, plus a few codes specific to the C interface.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlutchikStatus {
    Ok = 0,
    Io = 3,
    Json = 4,
    UnknownKey = 10,
    DuplicateKey = 11,
    MixedKinds = 12,
    BadValue = 13,
    WrongArity = 14,
    OutOfRange = 15,
    TripleOverflow = 16,
    EmptyScores = 17,
    EmptyCorpus = 20,
    HeterogeneousKinds = 21,
    UnknownGroupField = 22,
    EmptyGroup = 23,
    InvalidOption = 30,
    InvalidOptionCombination = 31,
    NonPositiveRatio = 32,
    GridOverflow = 40,
    TitleMismatch = 41,
    /// A required pointer argument was null.
    NullArgument = 50,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 51,
    /// The library panicked; the handle arguments should not be reused.
    Internal = 99,
}

impl PlutchikStatus {
    fn from_code(code: i32) -> Self {
        use PlutchikStatus::*;
        match code {
            3 => Io,
            4 => Json,
            10 => UnknownKey,
            11 => DuplicateKey,
            12 => MixedKinds,
            13 => BadValue,
            14 => WrongArity,
            15 => OutOfRange,
            16 => TripleOverflow,
            17 => EmptyScores,
            20 => EmptyCorpus,
            21 => HeterogeneousKinds,
            22 => UnknownGroupField,
            23 => EmptyGroup,
            30 => InvalidOption,
            31 => InvalidOptionCombination,
            32 => NonPositiveRatio,
            40 => GridOverflow,
            41 => TitleMismatch,
            _ => Internal,
        }
    }
}

/// A validated set of scores.
pub struct PlutchikScores(ScoreSet);

/// Rendering options, initialized to the library defaults.
pub struct PlutchikOptions(RenderOptions);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(PlutchikStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(PlutchikStatus::from_code(e.code()), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(PlutchikStatus::NullArgument, format!("{what} is null"))
}

/// Runs `f`, recording any failure for [`plutchik_last_error`].
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PlutchikStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PlutchikStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal error".into());
            PlutchikStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(PlutchikStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn out_string(svg: String) -> *mut c_char {
    CString::new(svg).expect("SVG has no nul bytes").into_raw()
}

unsafe fn options_or_default(options: *const PlutchikOptions) -> RenderOptions {
    if options.is_null() {
        RenderOptions::default()
    } else {
        (*options).0.clone()
    }
}

/// Parses a JSON score document. On success `*out` owns a new handle.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn plutchik_scores_from_json(
    json: *const c_char,
    out: *mut *mut PlutchikScores,
) -> PlutchikStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = str_arg(json, "json")?;
        let set = parse_score_json(text, "json")?;
        *out = Box::into_raw(Box::new(PlutchikScores(set)));
        Ok(())
    })
}

/// Reads a JSON score document from a file.
///
/// # Safety
/// `path` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn plutchik_scores_load(
    path: *const c_char,
    out: *mut *mut PlutchikScores,
) -> PlutchikStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let set = load_scores(Path::new(str_arg(path, "path")?))?;
        *out = Box::into_raw(Box::new(PlutchikScores(set)));
        Ok(())
    })
}

/// Averages a JSON-lines or JSON-array corpus. With a non-null `group_by`,
/// only records whose field equals `group` are averaged.
///
/// # Safety
/// String arguments must be nul-terminated or null where allowed; `out` must
/// be valid.
#[no_mangle]
pub unsafe extern "C" fn plutchik_corpus_mean(
    corpus: *const c_char,
    group_by: *const c_char,
    group: *const c_char,
    out: *mut *mut PlutchikScores,
) -> PlutchikStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = str_arg(corpus, "corpus")?;
        let field = if group_by.is_null() {
            None
        } else {
            Some(str_arg(group_by, "group_by")?)
        };
        let groups = group_corpus(&parse_corpus(text, "corpus", field)?)?;
        let set = match field {
            None => groups.into_iter().next().map(|(_, s)| s),
            Some(_) => {
                let wanted = str_arg(group, "group")?;
                groups.into_iter().find(|(name, _)| name == wanted).map(|(_, s)| s)
            }
        }
        .ok_or(Error::EmptyCorpus)?;
        *out = Box::into_raw(Box::new(PlutchikScores(set)));
        Ok(())
    })
}

/// # Safety
/// `scores` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn plutchik_scores_free(scores: *mut PlutchikScores) {
    if !scores.is_null() {
        drop(Box::from_raw(scores));
    }
}

/// Kind name (`basic_scalar`, `dyad_primary`, ...), or null for a null
/// handle. The string is static.
///
/// # Safety
/// `scores` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn plutchik_scores_kind(scores: *const PlutchikScores) -> *const c_char {
    if scores.is_null() {
        return ptr::null();
    }
    let name: &'static CStr = match (*scores).0.kind().name() {
        "basic_scalar" => c"basic_scalar",
        "basic_intensity" => c"basic_intensity",
        "dyad_primary" => c"dyad_primary",
        "dyad_secondary" => c"dyad_secondary",
        "dyad_tertiary" => c"dyad_tertiary",
        _ => c"dyad_opposite",
    };
    name.as_ptr()
}

/// Number of slots (8, or 4 for opposite dyads); 0 for a null handle.
///
/// # Safety
/// `scores` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn plutchik_scores_len(scores: *const PlutchikScores) -> usize {
    if scores.is_null() {
        0
    } else {
        (*scores).0.len()
    }
}

/// Score of one emotion or dyad (the sum for intensity triples).
///
/// # Safety
/// `scores` must be a live handle, `name` nul-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn plutchik_scores_total(
    scores: *const PlutchikScores,
    name: *const c_char,
    out: *mut f64,
) -> PlutchikStatus {
    guard(|| {
        if scores.is_null() || out.is_null() {
            return Err(null("scores or out"));
        }
        let key = str_arg(name, "name")?;
        let slot = Slot::from_name(key).ok_or_else(|| {
            Failure(PlutchikStatus::UnknownKey, format!("unknown key `{key}`"))
        })?;
        let score = (*scores).0.get(slot).ok_or_else(|| {
            Failure(
                PlutchikStatus::MixedKinds,
                format!("`{key}` is not part of a {} wheel", (*scores).0.kind()),
            )
        })?;
        *out = score.total();
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn plutchik_options_new() -> *mut PlutchikOptions {
    Box::into_raw(Box::new(PlutchikOptions(RenderOptions::default())))
}

/// # Safety
/// `options` must come from [`plutchik_options_new`] or be null.
#[no_mangle]
pub unsafe extern "C" fn plutchik_options_free(options: *mut PlutchikOptions) {
    if !options.is_null() {
        drop(Box::from_raw(options));
    }
}

unsafe fn with_options(
    options: *mut PlutchikOptions,
    f: impl FnOnce(&mut RenderOptions) -> Result<(), Failure>,
) -> PlutchikStatus {
    guard(|| {
        if options.is_null() {
            return Err(null("options"));
        }
        f(&mut (*options).0)
    })
}

/// # Safety
/// `options` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn plutchik_options_set_show_coordinates(
    options: *mut PlutchikOptions,
    show: bool,
) -> PlutchikStatus {
    with_options(options, |o| {
        o.show_coordinates = show;
        Ok(())
    })
}

/// Petal length over width. Checked when rendering.
///
/// # Safety
/// `options` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn plutchik_options_set_ratio(
    options: *mut PlutchikOptions,
    ratio: f64,
) -> PlutchikStatus {
    with_options(options, |o| {
        o.height_width_ratio = ratio;
        Ok(())
    })
}

/// Comma-separated emotions to keep colored; `all` restores the default.
///
/// # Safety
/// `options` must be a live handle and `emotions` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn plutchik_options_set_highlight(
    options: *mut PlutchikOptions,
    emotions: *const c_char,
) -> PlutchikStatus {
    with_options(options, |o| {
        let text = str_arg(emotions, "emotions")?;
        o.highlight_emotions = if text.trim().eq_ignore_ascii_case("all") {
            Highlight::All
        } else {
            Highlight::Only(parse_emotion_list(text, "highlight")?)
        };
        Ok(())
    })
}

/// Comma-separated emotions whose three intensity scores are printed;
/// `none` clears the set.
///
/// # Safety
/// `options` must be a live handle and `emotions` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn plutchik_options_set_intensity_labels(
    options: *mut PlutchikOptions,
    emotions: *const c_char,
) -> PlutchikStatus {
    with_options(options, |o| {
        o.show_intensity_labels = parse_emotion_list(str_arg(emotions, "emotions")?, "intensity-labels")?;
        Ok(())
    })
}

/// # Safety
/// `options` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn plutchik_options_set_font_size(
    options: *mut PlutchikOptions,
    points: f64,
) -> PlutchikStatus {
    with_options(options, |o| {
        o.font_size = points;
        Ok(())
    })
}

/// # Safety
/// `options` must be a live handle and `family` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn plutchik_options_set_font_family(
    options: *mut PlutchikOptions,
    family: *const c_char,
) -> PlutchikStatus {
    with_options(options, |o| {
        o.font_family = str_arg(family, "family")?.to_string();
        Ok(())
    })
}

/// `light`, `normal` or `bold`.
///
/// # Safety
/// `options` must be a live handle and `weight` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn plutchik_options_set_font_weight(
    options: *mut PlutchikOptions,
    weight: *const c_char,
) -> PlutchikStatus {
    with_options(options, |o| {
        let text = str_arg(weight, "weight")?;
        o.font_weight = FontWeight::parse(text).ok_or_else(|| {
            Failure(PlutchikStatus::InvalidOption, format!("unknown font weight `{text}`"))
        })?;
        Ok(())
    })
}

/// Title above the wheel; null removes it.
///
/// # Safety
/// `options` must be a live handle; `title` nul-terminated or null.
#[no_mangle]
pub unsafe extern "C" fn plutchik_options_set_title(
    options: *mut PlutchikOptions,
    title: *const c_char,
) -> PlutchikStatus {
    with_options(options, |o| {
        o.title = if title.is_null() {
            None
        } else {
            Some(str_arg(title, "title")?.to_string())
        };
        Ok(())
    })
}

/// Renders one wheel. `options` may be null for defaults. On success `*out`
/// owns the SVG text; free it with [`plutchik_string_free`].
///
/// # Safety
/// `scores` must be a live handle, `options` live or null, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn plutchik_render_svg(
    scores: *const PlutchikScores,
    options: *const PlutchikOptions,
    out: *mut *mut c_char,
) -> PlutchikStatus {
    guard(|| {
        if scores.is_null() || out.is_null() {
            return Err(null("scores or out"));
        }
        let svg = render_svg(&(*scores).0, &options_or_default(options))?;
        *out = out_string(svg);
        Ok(())
    })
}

/// Renders `count` wheels row-major into a `rows` x `cols` grid.
///
/// # Safety
/// `scores` must point to `count` live handles; `options` live or null;
/// `out` valid.
#[no_mangle]
pub unsafe extern "C" fn plutchik_grid_svg(
    scores: *const *const PlutchikScores,
    count: usize,
    rows: usize,
    cols: usize,
    options: *const PlutchikOptions,
    out: *mut *mut c_char,
) -> PlutchikStatus {
    guard(|| {
        if scores.is_null() || out.is_null() {
            return Err(null("scores or out"));
        }
        let handles = std::slice::from_raw_parts(scores, count);
        if handles.iter().any(|h| h.is_null()) {
            return Err(null("a scores handle"));
        }
        let sets: Vec<ScoreSet> = handles.iter().map(|h| (**h).0.clone()).collect();
        let doc = render_grid(&sets, &options_or_default(options), &GridSpec::new(rows, cols))?;
        *out = out_string(doc.to_svg());
        Ok(())
    })
}

/// # Safety
/// `s` must be a string returned by this library, or null.
#[no_mangle]
pub unsafe extern "C" fn plutchik_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn plutchik_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn plutchik_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(
        concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes(),
    ) {
        Ok(v) => v,
        Err(_) => panic!("version has no interior nul"),
    };
    VERSION.as_ptr()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_codes_round_trip() {
        for code in [3, 4, 10, 11, 12, 13, 14, 15, 16, 17, 20, 21, 22, 23, 30, 31, 32, 40, 41] {
            assert_eq!(PlutchikStatus::from_code(code) as i32, code);
        }
        assert_eq!(PlutchikStatus::from_code(7), PlutchikStatus::Internal);
    }

    #[test]
    fn panics_become_internal() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, PlutchikStatus::Internal);
        assert!(!plutchik_last_error().is_null());
    }
}
