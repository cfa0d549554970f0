//! Monochrome bitmaps of press patterns and lit lamps, written as plain PBM.

use std::fmt;
use std::str::FromStr;

use super::{lit_lamps, Pattern, Point};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderMode {
    Presses,
    Lamps,
}

impl FromStr for RenderMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "presses" => Ok(Self::Presses),
            "lamps" => Ok(Self::Lamps),
            other => Err(Error::InvalidArgument(format!(
                "render mode must be `presses` or `lamps`, got `{other}`"
            ))),
        }
    }
}

impl fmt::Display for RenderMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Presses => "presses",
            Self::Lamps => "lamps",
        })
    }
}

/// Row-major pixels, top row first; `true` is black.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bitmap {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<bool>,
}

impl Bitmap {
    pub fn get(&self, x: usize, y: usize) -> bool {
        self.pixels[y * self.width + x]
    }

    pub fn black_pixels(&self) -> usize {
        self.pixels.iter().filter(|&&b| b).count()
    }

    /// Plain PBM: `P1`, then `width height`, then one line of space
    /// separated digits per row.
    pub fn to_pbm(&self) -> String {
        let mut out = format!("P1\n{} {}\n", self.width, self.height);
        for row in self.pixels.chunks(self.width) {
            let line: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Draws the pressed points or the lit lamps of `p` over their bounding
/// box, with larger `y` further up. Nothing to draw gives one white pixel.
pub fn render(p: &Pattern, mode: RenderMode) -> Bitmap {
    let points: Vec<Point> = match mode {
        RenderMode::Presses => p.points().collect(),
        RenderMode::Lamps => lit_lamps(p).points().collect(),
    };
    let Some((x0, y0, x1, y1)) = super::bounding_box(points.iter()) else {
        return Bitmap {
            width: 1,
            height: 1,
            pixels: vec![false],
        };
    };
    let (width, height) = ((x1 - x0 + 1) as usize, (y1 - y0 + 1) as usize);
    let mut pixels = vec![false; width * height];
    for (x, y) in points {
        pixels[(y1 - y) as usize * width + (x - x0) as usize] = true;
    }
    Bitmap {
        width,
        height,
        pixels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mikado::mikado_diamond;

    #[test]
    fn single_dot_and_plus() {
        let dot = render(&mikado_diamond(1).unwrap(), RenderMode::Presses);
        assert_eq!(dot.to_pbm(), "P1\n1 1\n1\n");
        let plus = render(&mikado_diamond(2).unwrap(), RenderMode::Presses);
        assert_eq!(plus.to_pbm(), "P1\n3 3\n0 1 0\n1 1 1\n0 1 0\n");
    }

    #[test]
    fn empty_pattern_is_one_white_pixel() {
        assert_eq!(render(&Pattern::new(), RenderMode::Lamps).to_pbm(), "P1\n1 1\n0\n");
    }

    #[test]
    fn lamps_mode_and_orientation() {
        let lamps = render(&mikado_diamond(2).unwrap(), RenderMode::Lamps);
        assert_eq!((lamps.width, lamps.height, lamps.black_pixels()), (5, 5, 5));
        assert!(lamps.get(2, 0) && lamps.get(0, 2) && lamps.get(2, 2));
        // (0,1) pressed, (1,0) not: the top row is the largest y.
        let corner = render(&Pattern::from_points([(0, 1), (1, 0)]), RenderMode::Presses);
        assert_eq!(corner.to_pbm(), "P1\n2 2\n1 0\n0 1\n");
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("lamps".parse::<RenderMode>().unwrap(), RenderMode::Lamps);
        assert!("dots".parse::<RenderMode>().is_err());
    }
}
