use std::fmt::Write;

use super::Trace;
use crate::rule110::Cell;

/// One line per row, `#` for 1 and `.` for 0. With `leftmost`, a first line
/// names the index of the leftmost cell.
pub fn render_ascii(rows: &[Vec<Cell>], leftmost: Option<i64>) -> String {
    let mut out = String::new();
    if rows.is_empty() {
        return out;
    }
    if let Some(first) = leftmost {
        let _ = writeln!(out, "leftmost cell: {first}");
    }
    let lines: Vec<String> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| if *c == Cell::One { '#' } else { '.' })
                .collect()
        })
        .collect();
    out.push_str(&lines.join("\n"));
    out
}

/// Binary PPM (P6), one pixel per cell: black for 1, white for 0.
/// Rows shorter than the widest one are padded white.
pub fn render_ppm(rows: &[Vec<Cell>]) -> Vec<u8> {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    if width == 0 {
        return Vec::new();
    }
    let mut out = format!("P6\n{} {}\n255\n", width, rows.len()).into_bytes();
    for row in rows {
        for x in 0..width {
            let v = if row.get(x) == Some(&Cell::One) {
                0
            } else {
                255
            };
            out.extend_from_slice(&[v, v, v]);
        }
    }
    out
}

/// Text form of a trace: step, state, head and the window with the scanned
/// symbol in brackets.
pub fn render_trace_text(trace: &Trace) -> String {
    let mut out = String::new();
    for r in &trace.steps {
        let mut tape = String::new();
        for (k, g) in r.window.glyphs.iter().enumerate() {
            if r.window.from + k as i64 == r.head {
                let _ = write!(tape, "[{g}]");
            } else {
                tape.push_str(g);
            }
        }
        let _ = writeln!(out, "{:>8} {:<3} {:>6}  {}", r.i, r.state, r.head, tape);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rule110::cells;

    #[test]
    fn zero_row() {
        assert_eq!(render_ascii(&[cells("00000").unwrap()], None), ".....");
    }

    #[test]
    fn empty_inputs() {
        assert_eq!(render_ascii(&[], Some(3)), "");
        assert!(render_ppm(&[]).is_empty());
        assert!(render_ppm(&[vec![]]).is_empty());
    }

    #[test]
    fn labelled_rows() {
        let rows = vec![cells("01").unwrap(), cells("10").unwrap()];
        assert_eq!(render_ascii(&rows, Some(-1)), "leftmost cell: -1\n.#\n#.");
    }

    #[test]
    fn ppm_header_and_pixels() {
        let bytes = render_ppm(&[cells("10").unwrap()]);
        let header = b"P6\n2 1\n255\n";
        assert_eq!(&bytes[..header.len()], header);
        assert_eq!(&bytes[header.len()..], &[0, 0, 0, 255, 255, 255]);
    }
}
