//! Lattice-stabilizing mirror lines and the reflection-principle map:
//! reflect the part of a path after its last visit to the line. The
//! injection verifier at the bottom turns that map into an executable
//! check that two families really are in bijection-or-better.
//!
//! Only four line orientations stabilize Z^2: vertical and horizontal
//! lines through points or midpoints (offset stored doubled, so x = 1/2 is
//! `Vertical { two_c: 1 }`), and slope ±1 lines through lattice points.
//! Everything stays in integer arithmetic.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{enumerate, Path, PathFamily, Point, Step};

/// A mirror line whose reflection maps Z^2 onto itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "orientation", rename_all = "lowercase")]
pub enum ReflectionLine {
    /// x = two_c / 2
    Vertical { two_c: i64 },
    /// y = two_c / 2
    Horizontal { two_c: i64 },
    /// y = x + c
    Diagonal { c: i64 },
    /// y = -x + c
    Antidiagonal { c: i64 },
}

impl ReflectionLine {
    /// Whether the point lies on the line.
    pub fn contains(self, p: Point) -> bool {
        match self {
            ReflectionLine::Vertical { two_c } => 2 * p.x == two_c,
            ReflectionLine::Horizontal { two_c } => 2 * p.y == two_c,
            ReflectionLine::Diagonal { c } => p.y - p.x == c,
            ReflectionLine::Antidiagonal { c } => p.x + p.y == c,
        }
    }

    /// Mirror image of a point; an involution.
    pub fn reflect_point(self, p: Point) -> Point {
        match self {
            ReflectionLine::Vertical { two_c } => Point::new(two_c - p.x, p.y),
            ReflectionLine::Horizontal { two_c } => Point::new(p.x, two_c - p.y),
            ReflectionLine::Diagonal { c } => Point::new(p.y - c, p.x + c),
            ReflectionLine::Antidiagonal { c } => Point::new(c - p.y, c - p.x),
        }
    }

    /// Image of a step direction under the reflection's linear part.
    /// Errors when the image displacement is not a step: D maps outside
    /// the alphabet for every orientation except the diagonal, which
    /// fixes it.
    pub fn reflect_step(self, s: Step) -> Result<Step> {
        let (dx, dy) = s.displacement();
        let (rx, ry) = match self {
            ReflectionLine::Vertical { .. } => (-dx, dy),
            ReflectionLine::Horizontal { .. } => (dx, -dy),
            ReflectionLine::Diagonal { .. } => (dy, dx),
            ReflectionLine::Antidiagonal { .. } => (-dy, -dx),
        };
        Step::from_displacement(rx, ry).ok_or(Error::UnrepresentableStep { step: s })
    }
}

impl fmt::Display for ReflectionLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ReflectionLine::Vertical { two_c } => {
                if two_c % 2 == 0 {
                    write!(f, "x = {}", two_c / 2)
                } else {
                    write!(f, "x = {two_c}/2")
                }
            }
            ReflectionLine::Horizontal { two_c } => {
                if two_c % 2 == 0 {
                    write!(f, "y = {}", two_c / 2)
                } else {
                    write!(f, "y = {two_c}/2")
                }
            }
            ReflectionLine::Diagonal { c } => match c {
                0 => write!(f, "y = x"),
                c if c > 0 => write!(f, "y = x + {c}"),
                c => write!(f, "y = x - {}", -c),
            },
            ReflectionLine::Antidiagonal { c } => write!(f, "y = -x + {c}"),
        }
    }
}

/// Perpendicular bisector of the segment vw, when that bisector
/// stabilizes the lattice: the segment must be axis-parallel or have
/// slope ±1. Equal endpoints have no bisector.
pub fn perpendicular_bisector(v: Point, w: Point) -> Result<ReflectionLine> {
    if v == w {
        return Err(Error::CoincidentPoints(v));
    }
    let (dx, dy) = (w.x - v.x, w.y - v.y);
    if dy == 0 {
        Ok(ReflectionLine::Vertical { two_c: v.x + w.x })
    } else if dx == 0 {
        Ok(ReflectionLine::Horizontal { two_c: v.y + w.y })
    } else if dx == dy {
        // Segment has slope +1; bisector has slope -1 through the
        // midpoint, which has integer coordinate sum.
        Ok(ReflectionLine::Antidiagonal {
            c: (v.x + v.y + w.x + w.y) / 2,
        })
    } else if dx == -dy {
        Ok(ReflectionLine::Diagonal {
            c: (v.y + w.y - v.x - w.x) / 2,
        })
    } else {
        Err(Error::NonStabilizingBisector { v, w })
    }
}

/// Index of the last vertex of the path on the line, if any.
pub fn last_intersection(path: &Path, line: ReflectionLine) -> Option<usize> {
    let mut hit = None;
    for (k, v) in path.vertices().enumerate() {
        if line.contains(v) {
            hit = Some(k);
        }
    }
    hit
}

/// The reflection-principle map: keep the path through its last vertex on
/// the line, mirror everything after. Because that vertex is on the line,
/// mirroring the suffix vertices is the same as mirroring the suffix step
/// directions, which is how the result is built. Errors when the path
/// never meets the line or a suffix step has no mirror in the alphabet.
pub fn reflect_tail(path: &Path, line: ReflectionLine) -> Result<Path> {
    let k = last_intersection(path, line).ok_or(Error::NoIntersection)?;
    let mut steps = path.steps.clone();
    for s in &mut steps[k..] {
        *s = line.reflect_step(*s)?;
    }
    Ok(Path::new(path.start, steps))
}

/// Outcome of exhaustively testing the reflection map as an injection
/// from one family into another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectionReport {
    pub domain_size: u64,
    pub codomain_size: u64,
    /// Every source path meets the line (the map is total on the family).
    pub all_paths_hit_line: bool,
    /// Every source path's image exists and satisfies the target family.
    pub image_in_codomain: bool,
    /// No two source paths share an image.
    pub injective: bool,
    /// Source path pairs with colliding images, as step words.
    pub counterexamples: Vec<(String, String)>,
}

impl InjectionReport {
    /// True when the map is a total, well-aimed injection.
    pub fn holds(&self) -> bool {
        self.all_paths_hit_line && self.image_in_codomain && self.injective
    }
}

/// Enumerate the source family and push every path through
/// [`reflect_tail`], checking totality (each path meets the line),
/// codomain membership of each image, and injectivity. Budget errors from
/// enumeration propagate; per-path reflection failures are recorded as
/// codomain misses rather than errors, so a failed hypothesis stays
/// diagnosable.
pub fn verify_injection(
    source: &PathFamily,
    target: &PathFamily,
    line: ReflectionLine,
) -> Result<InjectionReport> {
    let src = enumerate(source)?;
    let tgt = enumerate(target)?;
    let mut all_hit = true;
    let mut in_codomain = true;
    let mut counterexamples = Vec::new();
    let mut images: HashMap<Path, &Path> = HashMap::with_capacity(src.len());
    for p in &src {
        if last_intersection(p, line).is_none() {
            all_hit = false;
            in_codomain = false;
            continue;
        }
        match reflect_tail(p, line) {
            Ok(image) => {
                if !target.satisfies(&image) {
                    in_codomain = false;
                }
                if let Some(first) = images.insert(image, p) {
                    counterexamples.push((first.to_string(), p.to_string()));
                }
            }
            Err(_) => in_codomain = false,
        }
    }
    Ok(InjectionReport {
        domain_size: src.len() as u64,
        codomain_size: tgt.len() as u64,
        all_paths_hit_line: all_hit,
        image_in_codomain: in_codomain,
        injective: counterexamples.is_empty(),
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(word: &str) -> Path {
        word.parse().unwrap()
    }

    const Y_EQ_X: ReflectionLine = ReflectionLine::Diagonal { c: 0 };

    #[test]
    fn reflect_point_examples() {
        assert_eq!(Y_EQ_X.reflect_point(Point::new(3, 1)), Point::new(1, 3));
        assert_eq!(Y_EQ_X.reflect_point(Point::new(2, 1)), Point::new(1, 2));
        let x_eq_1 = ReflectionLine::Vertical { two_c: 2 };
        assert_eq!(x_eq_1.reflect_point(Point::new(0, 5)), Point::new(2, 5));
        let y_eq_half = ReflectionLine::Horizontal { two_c: 1 };
        assert_eq!(y_eq_half.reflect_point(Point::new(4, 0)), Point::new(4, 1));
        let anti = ReflectionLine::Antidiagonal { c: 2 };
        assert_eq!(anti.reflect_point(Point::new(3, 1)), Point::new(1, -1));
    }

    #[test]
    fn reflect_point_is_involution_fixing_the_line() {
        let lines = [
            ReflectionLine::Vertical { two_c: 3 },
            ReflectionLine::Horizontal { two_c: -2 },
            ReflectionLine::Diagonal { c: 2 },
            ReflectionLine::Antidiagonal { c: -1 },
        ];
        for line in lines {
            for x in -5..=5 {
                for y in -5..=5 {
                    let p = Point::new(x, y);
                    let q = line.reflect_point(p);
                    assert_eq!(line.reflect_point(q), p, "{line}");
                    if line.contains(p) {
                        assert_eq!(q, p, "{line} should fix {p}");
                    } else {
                        assert_ne!(q, p);
                    }
                }
            }
        }
    }

    #[test]
    fn step_images() {
        assert_eq!(Y_EQ_X.reflect_step(Step::N).unwrap(), Step::E);
        assert_eq!(Y_EQ_X.reflect_step(Step::S).unwrap(), Step::W);
        assert_eq!(Y_EQ_X.reflect_step(Step::D).unwrap(), Step::D);
        let vertical = ReflectionLine::Vertical { two_c: 0 };
        assert_eq!(vertical.reflect_step(Step::E).unwrap(), Step::W);
        assert_eq!(vertical.reflect_step(Step::N).unwrap(), Step::N);
        assert_eq!(
            vertical.reflect_step(Step::D),
            Err(Error::UnrepresentableStep { step: Step::D })
        );
        let horizontal = ReflectionLine::Horizontal { two_c: 4 };
        assert_eq!(horizontal.reflect_step(Step::N).unwrap(), Step::S);
        assert_eq!(horizontal.reflect_step(Step::W).unwrap(), Step::W);
        let anti = ReflectionLine::Antidiagonal { c: 0 };
        assert_eq!(anti.reflect_step(Step::N).unwrap(), Step::W);
        assert_eq!(anti.reflect_step(Step::E).unwrap(), Step::S);
        assert!(anti.reflect_step(Step::D).is_err());
    }

    #[test]
    fn bisector_cases() {
        assert_eq!(
            perpendicular_bisector(Point::new(1, 3), Point::new(2, 2)).unwrap(),
            ReflectionLine::Diagonal { c: 1 }
        );
        assert_eq!(
            perpendicular_bisector(Point::new(0, 0), Point::new(2, 0)).unwrap(),
            ReflectionLine::Vertical { two_c: 2 }
        );
        assert_eq!(
            perpendicular_bisector(Point::new(0, 0), Point::new(0, 3)).unwrap(),
            ReflectionLine::Horizontal { two_c: 3 }
        );
        assert_eq!(
            perpendicular_bisector(Point::new(1, 1), Point::new(3, 3)).unwrap(),
            ReflectionLine::Antidiagonal { c: 4 }
        );
        assert_eq!(
            perpendicular_bisector(Point::new(0, 0), Point::new(1, 2)),
            Err(Error::NonStabilizingBisector {
                v: Point::new(0, 0),
                w: Point::new(1, 2)
            })
        );
        assert_eq!(
            perpendicular_bisector(Point::new(2, 5), Point::new(2, 5)),
            Err(Error::CoincidentPoints(Point::new(2, 5)))
        );
    }

    #[test]
    fn bisector_reflects_its_defining_points_onto_each_other() {
        let pts = [-3i64, -1, 0, 2, 4];
        for &vx in &pts {
            for &vy in &pts {
                for &wx in &pts {
                    for &wy in &pts {
                        let (v, w) = (Point::new(vx, vy), Point::new(wx, wy));
                        if let Ok(line) = perpendicular_bisector(v, w) {
                            assert_eq!(line.reflect_point(v), w, "{v} {w} via {line}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn last_intersection_examples() {
        assert_eq!(last_intersection(&path("NEEEN"), Y_EQ_X), Some(2));
        assert_eq!(last_intersection(&path("NN"), Y_EQ_X), Some(0));
        assert_eq!(
            last_intersection(&path("NN"), ReflectionLine::Diagonal { c: 5 }),
            None
        );
    }

    #[test]
    fn reflect_tail_worked_example() {
        // NEEEN reflects across y = x to a path through
        // (0,0),(0,1),(1,1),(1,2),(1,3),(2,3): prefix NE kept, suffix EEN
        // mirrored to NNE.
        let image = reflect_tail(&path("NEEEN"), Y_EQ_X).unwrap();
        assert_eq!(image, path("NENNE"));
        let vs: Vec<Point> = image.vertices().collect();
        assert_eq!(vs[5], Point::new(2, 3));
        assert_eq!(vs[2], Point::new(1, 1));
    }

    #[test]
    fn reflect_tail_edge_cases() {
        // Fully on the line: nothing to mirror.
        assert_eq!(reflect_tail(&path("DD"), Y_EQ_X).unwrap(), path("DD"));
        // Never meets the line.
        assert_eq!(
            reflect_tail(&path("NN"), ReflectionLine::Diagonal { c: 5 }),
            Err(Error::NoIntersection)
        );
        // Suffix step with no mirror image.
        assert_eq!(
            reflect_tail(&path("D"), ReflectionLine::Vertical { two_c: 0 }),
            Err(Error::UnrepresentableStep { step: Step::D })
        );
    }

    #[test]
    fn reflect_tail_is_involution_on_small_words() {
        let lines = [
            Y_EQ_X,
            ReflectionLine::Diagonal { c: 1 },
            ReflectionLine::Vertical { two_c: 1 },
            ReflectionLine::Horizontal { two_c: 0 },
            ReflectionLine::Antidiagonal { c: 2 },
        ];
        // All four-step words of length 5.
        let steps = [Step::N, Step::E, Step::S, Step::W];
        let mut words = vec![vec![]];
        for _ in 0..5 {
            words = words
                .iter()
                .flat_map(|w| {
                    steps.iter().map(move |&s| {
                        let mut w2 = w.clone();
                        w2.push(s);
                        w2
                    })
                })
                .collect();
        }
        for line in lines {
            for w in &words {
                let p = Path::from_origin(w.clone());
                if let Ok(q) = reflect_tail(&p, line) {
                    assert_eq!(
                        last_intersection(&q, line),
                        last_intersection(&p, line),
                        "pivot moved for {p} across {line}"
                    );
                    assert_eq!(reflect_tail(&q, line).unwrap(), p, "{p} across {line}");
                    assert_eq!(
                        q.endpoint(),
                        line.reflect_point(p.endpoint()),
                        "endpoint of {p} across {line}"
                    );
                }
            }
        }
    }

    #[test]
    fn injection_between_adjacent_two_step_families() {
        let line = perpendicular_bisector(Point::new(1, 3), Point::new(2, 2)).unwrap();
        let report = verify_injection(
            &PathFamily::TwoStep { i: 1, j: 3 },
            &PathFamily::TwoStep { i: 2, j: 2 },
            line,
        )
        .unwrap();
        assert_eq!(report.domain_size, 4);
        assert_eq!(report.codomain_size, 6);
        assert!(report.holds(), "{report:?}");
        assert!(report.counterexamples.is_empty());
    }

    #[test]
    fn injection_between_four_step_families() {
        let report = verify_injection(
            &PathFamily::FourStep { i: -1, j: 1, n: 2 },
            &PathFamily::FourStep { i: 1, j: 1, n: 2 },
            ReflectionLine::Vertical { two_c: 0 },
        )
        .unwrap();
        assert_eq!(report.domain_size, 2);
        assert_eq!(report.codomain_size, 2);
        assert!(report.holds(), "{report:?}");
    }

    #[test]
    fn reverse_direction_fails_totality() {
        // From the bigger family back, some paths (EENN among them) never
        // reach y = x + 1, so the map is not total.
        let report = verify_injection(
            &PathFamily::TwoStep { i: 2, j: 2 },
            &PathFamily::TwoStep { i: 1, j: 3 },
            ReflectionLine::Diagonal { c: 1 },
        )
        .unwrap();
        assert!(!report.all_paths_hit_line);
        assert!(!report.image_in_codomain);
    }

    #[test]
    fn line_json_forms() {
        let line = ReflectionLine::Diagonal { c: 1 };
        assert_eq!(
            serde_json::to_string(&line).unwrap(),
            r#"{"orientation":"diagonal","c":1}"#
        );
        let v: ReflectionLine =
            serde_json::from_str(r#"{"orientation":"vertical","two_c":2}"#).unwrap();
        assert_eq!(v, ReflectionLine::Vertical { two_c: 2 });
        let report = InjectionReport {
            domain_size: 1,
            codomain_size: 2,
            all_paths_hit_line: true,
            image_in_codomain: true,
            injective: true,
            counterexamples: vec![],
        };
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains(r#""domain_size":1"#), "{json}");
        assert!(json.contains(r#""counterexamples":[]"#), "{json}");
    }
}
