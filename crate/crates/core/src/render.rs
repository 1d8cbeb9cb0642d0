//! Text drawings of cell sets.

use crate::diagram::{Cell, CellSet};
use crate::projective::DiagonalSpec;
use crate::DiagramError;

const CELL: char = '□';
const MARKED: char = '■';
const BOUNDARY: char = '┃';

/// Draws `g` with the top row first, one glyph per column.
///
/// With a diagonal, a vertical bar separates the cells on or below it from
/// the cells above it in each row. Cells in `marks` get a filled glyph.
pub fn render_ascii(
    g: &CellSet,
    diag: Option<&DiagonalSpec>,
    marks: Option<&CellSet>,
) -> Result<String, DiagramError> {
    let (r0, r1, c0, c1) = g.bounds().ok_or(DiagramError::EmptySet)?;
    let mut lines: Vec<String> = Vec::with_capacity(r1 - r0 + 1);
    for row in (r0..=r1).rev() {
        // the bar goes before the first column strictly above the diagonal,
        // and only next to a cell of this row
        let bar = diag.and_then(|d| (d.sum + 1).checked_sub(row));
        let mut line = String::new();
        for col in c0..=c1 + 1 {
            let touches = g.contains(Cell::new(row, col)) || g.contains(Cell::new(row, col - 1));
            line.push(if bar == Some(col) && touches { BOUNDARY } else { ' ' });
            if col > c1 {
                break;
            }
            let cell = Cell::new(row, col);
            line.push(if !g.contains(cell) {
                ' '
            } else if marks.is_some_and(|m| m.contains(cell)) {
                MARKED
            } else {
                CELL
            });
        }
        lines.push(line.trim_end().to_string());
    }
    // drop the leading separator column when no row uses it
    if lines.iter().all(|l| l.starts_with(' ') || l.is_empty()) {
        for l in &mut lines {
            if !l.is_empty() {
                l.remove(0);
            }
        }
    }
    Ok(lines.join("\n") + "\n")
}
