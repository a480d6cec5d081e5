//! `render`: a gallery with one panel per orbit representative.
//!
//! Designs named `black`/`white` draw as solid squares and `nw`/`ne`/`se`/`sw`
//! as half-square triangles with the right angle in that corner. Anything
//! else is a labelled square. Row `y = 0` is drawn at the bottom.

use crate::{resolve_tiles, CliError, CliResult};
use std::fmt::Write as _;
use std::str::FromStr;
use tilecount_core::group::group_elements;
use tilecount_core::oracle::{orbit_representatives, OracleBudget, TilingAssignment};
use tilecount_core::{GridShape, Surface, SymmetryGroup, TileDesignSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Ascii,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.to_ascii_lowercase().as_str() {
            "svg" => Ok(Format::Svg),
            "ascii" | "txt" => Ok(Format::Ascii),
            _ => Err(CliError::Usage(format!(
                "unknown format `{s}` (svg, ascii)"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RenderRequest {
    pub surface: Surface,
    pub n: usize,
    pub m: usize,
    pub group: SymmetryGroup,
    pub tiles: String,
    pub format: Format,
    pub budget: OracleBudget,
}

enum Glyph {
    Solid(&'static str),
    /// Right-angle corner, `(x, y)` with `y` up.
    Triangle(u8, u8),
    Label(String),
}

fn glyph(name: &str) -> Glyph {
    match name {
        "black" => Glyph::Solid("#000000"),
        "white" => Glyph::Solid("#ffffff"),
        "nw" => Glyph::Triangle(0, 1),
        "ne" => Glyph::Triangle(1, 1),
        "se" => Glyph::Triangle(1, 0),
        "sw" => Glyph::Triangle(0, 0),
        other => Glyph::Label(other.to_string()),
    }
}

pub struct Gallery {
    pub shape: GridShape,
    pub group: SymmetryGroup,
    pub ts: TileDesignSet,
    pub panels: Vec<TilingAssignment>,
}

pub fn gallery(req: &RenderRequest) -> CliResult<Gallery> {
    let shape = GridShape::new(req.n, req.m, req.surface)?;
    shape.check_group(req.group)?;
    let ts = resolve_tiles(&req.tiles, req.group)?
        .to_design_set()
        .restrict(req.group)?;
    let elems = group_elements(&shape, req.group)?;
    let panels = orbit_representatives(&elems, &shape, &ts, &req.budget)?;
    Ok(Gallery {
        shape,
        group: req.group,
        ts,
        panels,
    })
}

pub fn cmd_render(req: &RenderRequest) -> CliResult<String> {
    let g = gallery(req)?;
    Ok(match req.format {
        Format::Svg => svg(&g),
        Format::Ascii => ascii(&g),
    })
}

const CELL: usize = 24;
const GAP: usize = 12;

fn columns(count: usize) -> usize {
    let mut c = 1;
    while c * c < count {
        c += 1;
    }
    c
}

fn svg(g: &Gallery) -> String {
    let (n, m) = (g.shape.n, g.shape.m);
    let cols = columns(g.panels.len());
    let rows = g.panels.len().div_ceil(cols).max(1);
    let pw = n * CELL;
    let ph = m * CELL;
    let width = GAP + cols * (pw + GAP);
    let height = GAP + rows * (ph + GAP);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        "<title>{} orbit representatives, {} under &lt;{}&gt;</title>",
        g.panels.len(),
        g.shape,
        g.group
    );
    let _ = writeln!(
        out,
        r##"<rect width="{width}" height="{height}" fill="#f4f4f4"/>"##
    );
    for (i, panel) in g.panels.iter().enumerate() {
        let px = GAP + (i % cols) * (pw + GAP);
        let py = GAP + (i / cols) * (ph + GAP);
        let _ = writeln!(out, r#"<g transform="translate({px},{py})">"#);
        for y in 0..m {
            for x in 0..n {
                let d = panel.get(x, y);
                let cx = x * CELL;
                let cy = (m - 1 - y) * CELL;
                svg_cell(&mut out, cx, cy, glyph(g.ts.design_name(d)));
            }
        }
        let _ = writeln!(
            out,
            r##"<rect width="{pw}" height="{ph}" fill="none" stroke="#000000" stroke-width="1.5"/>"##
        );
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

fn svg_cell(out: &mut String, cx: usize, cy: usize, glyph: Glyph) {
    let _ = writeln!(
        out,
        r##"<rect x="{cx}" y="{cy}" width="{CELL}" height="{CELL}" fill="{}" stroke="#999999" stroke-width="0.5"/>"##,
        match glyph {
            Glyph::Solid(c) => c,
            _ => "#ffffff",
        }
    );
    match glyph {
        Glyph::Solid(_) => {}
        Glyph::Triangle(a, b) => {
            // corners in unit coordinates with y up, mapped into the cell
            let pt = |x: u8, y: u8| (cx + x as usize * CELL, cy + (1 - y) as usize * CELL);
            let pts = [pt(a, b), pt(1 - a, b), pt(a, 1 - b)];
            let _ = writeln!(
                out,
                r##"<polygon points="{},{} {},{} {},{}" fill="#000000"/>"##,
                pts[0].0, pts[0].1, pts[1].0, pts[1].1, pts[2].0, pts[2].1
            );
        }
        Glyph::Label(name) => {
            let _ = writeln!(
                out,
                r##"<text x="{}" y="{}" font-family="monospace" font-size="8" text-anchor="middle">{}</text>"##,
                cx + CELL / 2,
                cy + CELL / 2 + 3,
                escape(&name)
            );
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

const PER_ROW: usize = 8;

fn ascii_char(name: &str, index: usize) -> char {
    match glyph(name) {
        Glyph::Solid("#000000") => '#',
        Glyph::Solid(_) => '.',
        Glyph::Triangle(0, 1) => '◤',
        Glyph::Triangle(1, 1) => '◥',
        Glyph::Triangle(1, 0) => '◢',
        Glyph::Triangle(..) => '◣',
        Glyph::Label(_) => (b'a' + (index % 26) as u8) as char,
    }
}

fn ascii(g: &Gallery) -> String {
    let (n, m) = (g.shape.n, g.shape.m);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {} orbit representatives, {} under <{}>",
        g.panels.len(),
        g.shape,
        g.group
    );
    let labelled: Vec<String> = (0..g.ts.len())
        .filter(|&d| matches!(glyph(g.ts.design_name(d)), Glyph::Label(_)))
        .map(|d| {
            format!(
                "{}={}",
                ascii_char(g.ts.design_name(d), d),
                g.ts.design_name(d)
            )
        })
        .collect();
    if !labelled.is_empty() {
        let _ = writeln!(out, "# {}", labelled.join(" "));
    }
    for chunk in g.panels.chunks(PER_ROW) {
        out.push('\n');
        for y in (0..m).rev() {
            let line: Vec<String> = chunk
                .iter()
                .map(|p| {
                    (0..n)
                        .map(|x| {
                            let d = p.get(x, y);
                            ascii_char(g.ts.design_name(d), d)
                        })
                        .collect()
                })
                .collect();
            let _ = writeln!(out, "{}", line.join("  "));
        }
    }
    out
}
