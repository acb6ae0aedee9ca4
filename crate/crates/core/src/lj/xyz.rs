use std::fmt::Write as _;

use super::ClusterGeometry;
use crate::error::{Error, Result};

/// XYZ text: particle count, a comment line, then one `X x y z` line per particle.
pub fn write_xyz(g: &ClusterGeometry, comment: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", g.n_particles());
    let _ = writeln!(out, "{}", comment.replace('\n', " "));
    for p in g.coords().chunks(3) {
        let _ = writeln!(out, "X {:.17e} {:.17e} {:.17e}", p[0], p[1], p[2]);
    }
    out
}

pub fn read_xyz(text: &str) -> Result<ClusterGeometry> {
    let mut lines = text.lines();
    let bad = |what: &str| Error::Domain(format!("xyz: {what}"));
    let n: usize = lines
        .next()
        .and_then(|l| l.trim().parse().ok())
        .ok_or_else(|| bad("missing particle count"))?;
    lines.next().ok_or_else(|| bad("missing comment line"))?;
    let mut coords = Vec::with_capacity(3 * n);
    for i in 0..n {
        let line = lines.next().ok_or_else(|| bad(&format!("missing particle {i}")))?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(bad(&format!("particle {i}: expected 4 fields")));
        }
        for f in &fields[1..] {
            coords.push(f.parse().map_err(|_| bad(&format!("particle {i}: bad number {f:?}")))?);
        }
    }
    ClusterGeometry::new(coords).map_err(|e| bad(&e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_and_round_trip() {
        let g = ClusterGeometry::new(vec![0.0, 0.5, -1.0, 1.1224, 0.0, 1e-3]).unwrap();
        let text = write_xyz(&g, "pair");
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "2");
        assert_eq!(lines[1], "pair");
        assert!(lines[2].starts_with("X "));
        assert_eq!(read_xyz(&text).unwrap(), g);
    }

    #[test]
    fn truncated_input() {
        assert!(read_xyz("3\ncomment\nX 0 0 0\n").is_err());
    }
}
