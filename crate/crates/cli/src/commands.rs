//! One function per subcommand; each returns the complete output document.

use std::fmt::Write as _;

use geopict::enumeration::{
    catalan_d, counts_table, enumerate_biregular, enumerate_walls, pict_count, sample_distribution_with, wall_count,
};
use geopict::polynomial::{classify, PolyError, Polynomial};
use geopict::render::{render_svg, RenderError, RenderOptions};
use geopict::signature::{biregular_to_graph, label_roots, picture_to_signature, SignatureError};
use geopict::tracing::{extract_picture_with, GeometricPicture, TraceError, TraceOptions};
use serde::Serialize;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CountKind {
    Catalan,
    Pict,
    Walls,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum EnumKind {
    Biregular,
    Walls,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    NearWall(String),
    #[error("{0}")]
    Numeric(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("format {0:?} is not available for this command")]
    Unsupported(Format),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Unsupported(_) => 2,
            CliError::NearWall(_) => 3,
            CliError::Numeric(_) | CliError::Io { .. } => 4,
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::NearWallAmbiguous { .. } => CliError::NearWall(e.to_string()),
            PolyError::NotMonic(_) | PolyError::NonFinite { .. } | PolyError::DegreeTooLow { .. } => {
                CliError::Parse(e.to_string())
            }
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

impl From<TraceError> for CliError {
    fn from(e: TraceError) -> Self {
        match e {
            TraceError::Poly(p) => p.into(),
            TraceError::NotBiRegular { .. } => CliError::NearWall(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

impl From<SignatureError> for CliError {
    fn from(e: SignatureError) -> Self {
        match e {
            SignatureError::Trace(t) => t.into(),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

impl From<RenderError> for CliError {
    fn from(e: RenderError) -> Self {
        CliError::Numeric(e.to_string())
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

pub fn classify_cmd(p: &Polynomial, tol: f64, format: Format) -> Result<String, CliError> {
    let c = classify(p, tol)?;
    match format {
        Format::Json => Ok(json(&c)),
        Format::Text => Ok(format!(
            "codimension\t{}\nbiregular\t{}\nreal_wall\t{}\nimag_wall\t{}\ndiscriminant\t{}\n",
            c.codimension, c.biregular, c.on_real_wall_count, c.on_imag_wall_count, c.in_discriminant
        )),
        Format::Svg => Err(CliError::Unsupported(format)),
    }
}

fn trace(p: &Polynomial, tol: f64) -> Result<GeometricPicture, CliError> {
    let c = classify(p, tol)?;
    if !c.biregular {
        return Err(CliError::NearWall(format!(
            "polynomial lies on a wall (codimension {}); its picture has saddles",
            c.codimension
        )));
    }
    Ok(extract_picture_with(p, TraceOptions { tol, ..TraceOptions::default() })?)
}

pub fn picture_cmd(p: &Polynomial, tol: f64, format: Format, render: &RenderOptions) -> Result<String, CliError> {
    let pic = trace(p, tol)?;
    match format {
        Format::Json | Format::Text => {
            let mut s = pic.to_json();
            s.push('\n');
            Ok(s)
        }
        Format::Svg => Ok(render_svg(&pic, render)?),
    }
}

#[derive(Serialize)]
struct SignatureReport {
    tree: String,
    /// `(alpha_k, beta_k)` per tree node in preorder.
    labels: Vec<(usize, usize)>,
}

pub fn signature_cmd(p: &Polynomial, tol: f64, format: Format) -> Result<String, CliError> {
    let pic = trace(p, tol)?;
    let sig = picture_to_signature(&pic)?;
    let labels = label_roots(&biregular_to_graph(&sig)).into_values().map(|l| (l.alpha_k, l.beta_k)).collect();
    let report = SignatureReport { tree: sig.to_string(), labels };
    match format {
        Format::Json => Ok(json(&report)),
        Format::Text => {
            let mut s = format!("{}\n", report.tree);
            for (i, (a, b)) in report.labels.iter().enumerate() {
                let _ = writeln!(s, "root\t{i}\t{a}\t{b}");
            }
            Ok(s)
        }
        Format::Svg => Err(CliError::Unsupported(format)),
    }
}

pub fn count_cmd(kind: CountKind, d_max: usize) -> String {
    match kind {
        CountKind::Catalan => counts_table(0..=d_max, catalan_d),
        CountKind::Pict => counts_table(0..=d_max, pict_count),
        CountKind::Walls => counts_table(1..=d_max, wall_count),
    }
}

pub fn enumerate_cmd(d: usize, what: EnumKind) -> String {
    match what {
        EnumKind::Biregular => enumerate_biregular(d).map(|s| format!("{s}\n")).collect(),
        EnumKind::Walls => enumerate_walls(d).into_iter().map(|s| s + "\n").collect(),
    }
}

pub fn sample_cmd(d: usize, n: u64, seed: u64, tol: f64, format: Format) -> Result<String, CliError> {
    if d == 0 || n == 0 {
        return Err(CliError::Parse("sampling needs degree and sample count at least 1".into()));
    }
    let h = sample_distribution_with(d, n, seed, TraceOptions { tol, ..TraceOptions::coarse() });
    match format {
        Format::Text => Ok(h.to_text()),
        Format::Json => Ok(json(&h)),
        Format::Svg => Err(CliError::Unsupported(format)),
    }
}

pub fn render_cmd(picture_json: &str, opts: &RenderOptions) -> Result<String, CliError> {
    let pic = GeometricPicture::from_json(picture_json).map_err(|e| CliError::Parse(format!("picture JSON: {e}")))?;
    Ok(render_svg(&pic, opts)?)
}
