//! ASCII and SVG drawings of an ASM as a matrix, an ice orientation and an
//! edge coloring.
//!
//! ASCII conventions: blue edges are solid (`---`, `|`), green edges dashed
//! (`- -`, `:`). Interior vertices are `+`, endpoints `o`.

use gyre_core::grid::{Edge, Grid};
use gyre_core::{Asm, EdgeColoring, IceOrientation};
use std::fmt::Write as _;

pub const BLUE: &str = "#1f5fbf";
pub const GREEN: &str = "#2e9e44";

/// A character canvas for the grid `L_n`; vertex `(x, y)` sits at row
/// `2 (n + 1 - y)`, column `4 x`.
pub struct Canvas {
    n: usize,
    cells: Vec<Vec<char>>,
}

impl Canvas {
    fn new(n: usize) -> Self {
        let g = Grid::new(n);
        let mut c = Canvas {
            n,
            cells: vec![vec![' '; 4 * (n + 1) + 1]; 2 * (n + 1) + 1],
        };
        for y in 0..=n + 1 {
            for x in 0..=n + 1 {
                let p = gyre_core::Point::new(x, y);
                let glyph = if g.is_interior(p) {
                    '+'
                } else if g.is_endpoint(p) {
                    'o'
                } else {
                    continue;
                };
                let (r, col) = c.vertex_cell(x, y);
                c.cells[r][col] = glyph;
            }
        }
        c
    }

    fn vertex_cell(&self, x: usize, y: usize) -> (usize, usize) {
        (2 * (self.n + 1 - y), 4 * x)
    }

    fn put(&mut self, e: Edge, glyph: &str) {
        for ((r, c), ch) in edge_cells(self.n, e).into_iter().zip(glyph.chars()) {
            self.cells[r][c] = ch;
        }
    }

    pub fn rows(&self) -> &[Vec<char>] {
        &self.cells
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.cells {
            let line: String = row.iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Canvas cells covered by an edge: three for a horizontal edge, one for a
/// vertical edge.
pub fn edge_cells(n: usize, e: Edge) -> Vec<(usize, usize)> {
    match e {
        Edge::Horizontal { x, y } => (1..=3).map(|k| (2 * (n + 1 - y), 4 * x + k)).collect(),
        Edge::Vertical { x, y } => vec![(2 * (n + 1 - y) - 1, 4 * x)],
    }
}

pub fn coloring_canvas(c: &EdgeColoring) -> Canvas {
    let g = c.grid();
    let mut canvas = Canvas::new(c.n());
    for idx in 0..g.num_edges() {
        let e = g.edge(idx);
        let glyph = match (e, c.is_blue(idx)) {
            (Edge::Horizontal { .. }, true) => "---",
            (Edge::Horizontal { .. }, false) => "- -",
            (Edge::Vertical { .. }, true) => "|",
            (Edge::Vertical { .. }, false) => ":",
        };
        canvas.put(e, glyph);
    }
    canvas
}

pub fn ice_canvas(o: &IceOrientation) -> Canvas {
    let g = Grid::new(o.n());
    let mut canvas = Canvas::new(o.n());
    for idx in 0..g.num_edges() {
        let e = g.edge(idx);
        let glyph = match (e, o.points_positive(idx)) {
            (Edge::Horizontal { .. }, true) => "->-",
            (Edge::Horizontal { .. }, false) => "-<-",
            (Edge::Vertical { .. }, true) => "^",
            (Edge::Vertical { .. }, false) => "v",
        };
        canvas.put(e, glyph);
    }
    canvas
}

pub fn matrix_text(a: &Asm) -> String {
    let mut out = String::new();
    for row in a.rows() {
        let line: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn ascii(a: &Asm) -> String {
    format!(
        "matrix\n{}\nice\n{}\ncoloring (blue solid, green dashed)\n{}",
        matrix_text(a),
        ice_canvas(&a.to_ice()).to_text(),
        coloring_canvas(&a.to_coloring()).to_text()
    )
}

const UNIT: f64 = 40.0;
const MARGIN: f64 = 20.0;

pub fn svg(a: &Asm) -> String {
    let n = a.n();
    let side = (n + 1) as f64 * UNIT;
    let panel = side + 2.0 * MARGIN;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = 3.0 * panel,
        h = panel + MARGIN
    )
    .unwrap();
    out.push_str(concat!(
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="5" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse">"#,
        r#"<path d="M 0 0 L 10 5 L 0 10 z" fill="black"/></marker></defs>"#,
        "\n"
    ));
    out.push_str(r#"<rect width="100%" height="100%" fill="white"/>"#);
    out.push('\n');

    // matrix panel
    out.push_str(r#"<g id="matrix" font-family="monospace" font-size="16" text-anchor="middle">"#);
    out.push('\n');
    let cell = side / n as f64;
    for (r, row) in a.rows().iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            let x = MARGIN + (c as f64 + 0.5) * cell;
            let y = MARGIN + (r as f64 + 0.5) * cell + 5.0;
            writeln!(out, r#"<text x="{x:.1}" y="{y:.1}">{v}</text>"#).unwrap();
        }
    }
    out.push_str("</g>\n");

    let g = Grid::new(n);
    let point = |offset: f64, x: usize, y: usize| {
        (
            offset + MARGIN + x as f64 * side / (n + 1) as f64,
            MARGIN + (n + 1 - y) as f64 * side / (n + 1) as f64,
        )
    };
    let segment = |offset: f64, e: Edge| {
        let (p, q) = e.ends();
        (point(offset, p.x, p.y), point(offset, q.x, q.y))
    };

    // ice panel
    let ice = a.to_ice();
    out.push_str(r#"<g id="ice" stroke="black" stroke-width="2">"#);
    out.push('\n');
    for idx in 0..g.num_edges() {
        let ((x1, y1), (x2, y2)) = segment(panel, g.edge(idx));
        let ((sx, sy), (tx, ty)) = if ice.points_positive(idx) {
            ((x1, y1), (x2, y2))
        } else {
            ((x2, y2), (x1, y1))
        };
        let (mx, my) = ((sx + tx) / 2.0, (sy + ty) / 2.0);
        writeln!(
            out,
            r#"<line x1="{sx:.1}" y1="{sy:.1}" x2="{tx:.1}" y2="{ty:.1}"/>"#
        )
        .unwrap();
        writeln!(
            out,
            r#"<line x1="{sx:.1}" y1="{sy:.1}" x2="{mx:.1}" y2="{my:.1}" marker-end="url(#arrow)"/>"#
        )
        .unwrap();
    }
    out.push_str("</g>\n");

    // coloring panel
    let c = a.to_coloring();
    out.push_str(r#"<g id="coloring" stroke-width="3" stroke-linecap="round">"#);
    out.push('\n');
    for idx in 0..g.num_edges() {
        let ((x1, y1), (x2, y2)) = segment(2.0 * panel, g.edge(idx));
        let style = if c.is_blue(idx) {
            format!(r#"stroke="{BLUE}""#)
        } else {
            format!(r#"stroke="{GREEN}" stroke-dasharray="6 4""#)
        };
        writeln!(
            out,
            r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" {style}/>"#
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}
