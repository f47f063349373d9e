//! Points, steps, paths, and path families on the integer lattice,
//! plus the brute-force enumerator that ground-truths every closed form.
//!
//! Paths are stored as a start point and a step word; vertices are derived.
//! Families are symbolic descriptors of the path sets the library counts:
//! two-step N/E paths, four-step walks of fixed length (optionally confined
//! to the upper half-plane), N/E/D paths with diagonal steps, and N/E paths
//! avoiding a partition's Ferrers diagram.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constrained::Partition;
use crate::error::{Error, Result};

/// Default bound on the step count a family may require before
/// [`enumerate`] refuses to expand it.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 24;

/// A point of the integer lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A unit or diagonal step. The variant order N < E < S < W < D fixes the
/// lexicographic enumeration order everywhere in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Step {
    N,
    E,
    S,
    W,
    D,
}

impl Step {
    pub const ALL: [Step; 5] = [Step::N, Step::E, Step::S, Step::W, Step::D];

    /// Displacement vector of the step.
    pub const fn displacement(self) -> (i64, i64) {
        match self {
            Step::N => (0, 1),
            Step::E => (1, 0),
            Step::S => (0, -1),
            Step::W => (-1, 0),
            Step::D => (1, 1),
        }
    }

    /// The step with the given displacement, if there is one.
    pub fn from_displacement(dx: i64, dy: i64) -> Option<Step> {
        Step::ALL.into_iter().find(|s| s.displacement() == (dx, dy))
    }

    pub const fn letter(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
            Step::S => 'S',
            Step::W => 'W',
            Step::D => 'D',
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        match c {
            'N' => Some(Step::N),
            'E' => Some(Step::E),
            'S' => Some(Step::S),
            'W' => Some(Step::W),
            'D' => Some(Step::D),
            _ => None,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A lattice path: a start point and an ordered step word.
///
/// Vertices v_0..v_n are derived: v_0 is the start and v_i adds the i-th
/// step's displacement. The length of the path is its number of steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub start: Point,
    pub steps: Vec<Step>,
}

impl Path {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        Path { start, steps }
    }

    /// A path starting at the origin, where all family members live.
    pub fn from_origin(steps: Vec<Step>) -> Self {
        Path::new(Point::ORIGIN, steps)
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The vertices v_0, v_1, ..., v_n in order (n+1 points).
    pub fn vertices(&self) -> impl Iterator<Item = Point> + '_ {
        let mut cur = self.start;
        std::iter::once(cur).chain(self.steps.iter().map(move |s| {
            let (dx, dy) = s.displacement();
            cur = Point::new(cur.x + dx, cur.y + dy);
            cur
        }))
    }

    /// The final vertex v_n.
    pub fn endpoint(&self) -> Point {
        let (dx, dy) = self.steps.iter().fold((0, 0), |(x, y), s| {
            let (dx, dy) = s.displacement();
            (x + dx, y + dy)
        });
        Point::new(self.start.x + dx, self.start.y + dy)
    }

    /// Number of D steps on the path.
    pub fn diagonal_step_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::D).count()
    }
}

/// Paths print as their step word over the alphabet N,E,S,W,D; the start
/// point is not part of the text form (the CLI only handles origin paths).
impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| {
                Step::from_letter(c)
                    .ok_or_else(|| Error::Parse(format!("invalid step letter {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Path::from_origin(steps))
    }
}

/// A symbolic descriptor of one of the finite path sets the library counts.
/// All members start at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum PathFamily {
    /// N/E paths from the origin to (i, j).
    TwoStep { i: i64, j: i64 },
    /// N/E/S/W paths from the origin to (i, j) of length n.
    FourStep { i: i64, j: i64, n: i64 },
    /// Four-step paths confined to the upper half-plane y >= 0.
    FourStepUpper { i: i64, j: i64, n: i64 },
    /// N/E/D paths from the origin to (i, j).
    Diagonal { i: i64, j: i64 },
    /// N/E paths to (i, j) whose every vertex (x, y) satisfies
    /// x >= lambda_{j-y} (the Ferrers diagram of lambda is carved out of
    /// the box's upper-left corner).
    Constrained { i: i64, j: i64, lambda: Partition },
}

impl PathFamily {
    /// Steps the family's members may use, in enumeration order.
    pub fn step_set(&self) -> &'static [Step] {
        match self {
            PathFamily::TwoStep { .. } | PathFamily::Constrained { .. } => &[Step::N, Step::E],
            PathFamily::FourStep { .. } | PathFamily::FourStepUpper { .. } => {
                &[Step::N, Step::E, Step::S, Step::W]
            }
            PathFamily::Diagonal { .. } => &[Step::N, Step::E, Step::D],
        }
    }

    /// Common endpoint of the family's members.
    pub fn target(&self) -> Point {
        match *self {
            PathFamily::TwoStep { i, j }
            | PathFamily::FourStep { i, j, .. }
            | PathFamily::FourStepUpper { i, j, .. }
            | PathFamily::Diagonal { i, j }
            | PathFamily::Constrained { i, j, .. } => Point::new(i, j),
        }
    }

    /// Largest step word the family can require; used against the
    /// enumeration budget.
    pub fn step_budget(&self) -> u64 {
        match *self {
            PathFamily::TwoStep { i, j }
            | PathFamily::Diagonal { i, j }
            | PathFamily::Constrained { i, j, .. } => {
                if i < 0 || j < 0 {
                    0
                } else {
                    (i + j) as u64
                }
            }
            PathFamily::FourStep { n, .. } | PathFamily::FourStepUpper { n, .. } => n.max(0) as u64,
        }
    }

    /// Membership test: origin start, allowed steps only, required endpoint
    /// (and length for four-step families), and the region constraint at
    /// every vertex.
    pub fn satisfies(&self, path: &Path) -> bool {
        if path.start != Point::ORIGIN {
            return false;
        }
        let set = self.step_set();
        if !path.steps.iter().all(|s| set.contains(s)) {
            return false;
        }
        if path.endpoint() != self.target() {
            return false;
        }
        match self {
            PathFamily::TwoStep { .. } | PathFamily::Diagonal { .. } => true,
            PathFamily::FourStep { n, .. } => path.len() as i64 == *n,
            PathFamily::FourStepUpper { n, .. } => {
                path.len() as i64 == *n && path.vertices().all(|v| v.y >= 0)
            }
            PathFamily::Constrained { j, lambda, .. } => {
                path.vertices().all(|v| allowed_in_diagram(v, *j, lambda))
            }
        }
    }
}

/// Vertex predicate for the constrained family: (x, y) is allowed iff
/// x >= lambda_{j-y}, with lambda zero-extended past its last row.
pub(crate) fn allowed_in_diagram(v: Point, j: i64, lambda: &Partition) -> bool {
    let idx = j - v.y;
    if idx < 0 {
        // Above the box; a valid N/E path to (i, j) never gets here.
        return true;
    }
    v.x >= lambda.part(idx as usize) as i64
}

/// Enumerate the family with the default step budget.
pub fn enumerate(family: &PathFamily) -> Result<Vec<Path>> {
    enumerate_with_budget(family, DEFAULT_ENUMERATION_BUDGET)
}

/// Enumerate exactly the set of paths satisfying the family, in
/// lexicographic step order (N < E < S < W < D). Deterministic; errors
/// when the family's step requirement exceeds `budget`.
///
/// The search prunes by reachability: a branch survives only while the
/// remaining steps can still reach the target (L1 distance, plus parity
/// for the fixed-length four-step families).
pub fn enumerate_with_budget(family: &PathFamily, budget: u64) -> Result<Vec<Path>> {
    let required = family.step_budget();
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let mut out = Vec::new();
    match family {
        PathFamily::TwoStep { i, j } => {
            if *i >= 0 && *j >= 0 {
                let mut steps = Vec::with_capacity(required as usize);
                monotone_dfs(
                    Point::ORIGIN,
                    Point::new(*i, *j),
                    false,
                    None,
                    &mut steps,
                    &mut out,
                );
            }
        }
        PathFamily::Diagonal { i, j } => {
            if *i >= 0 && *j >= 0 {
                let mut steps = Vec::with_capacity(required as usize);
                monotone_dfs(
                    Point::ORIGIN,
                    Point::new(*i, *j),
                    true,
                    None,
                    &mut steps,
                    &mut out,
                );
            }
        }
        PathFamily::Constrained { i, j, lambda } => {
            if *i >= 0 && *j >= 0 && allowed_in_diagram(Point::ORIGIN, *j, lambda) {
                let mut steps = Vec::with_capacity(required as usize);
                monotone_dfs(
                    Point::ORIGIN,
                    Point::new(*i, *j),
                    false,
                    Some((*j, lambda)),
                    &mut steps,
                    &mut out,
                );
            }
        }
        PathFamily::FourStep { i, j, n } | PathFamily::FourStepUpper { i, j, n } => {
            if *n >= 0 {
                let upper = matches!(family, PathFamily::FourStepUpper { .. });
                if !(upper && (*j < 0 || Point::ORIGIN.y < 0)) {
                    let mut steps = Vec::with_capacity(*n as usize);
                    four_step_dfs(
                        Point::ORIGIN,
                        Point::new(*i, *j),
                        *n,
                        upper,
                        &mut steps,
                        &mut out,
                    );
                }
            }
        }
    }
    Ok(out)
}

/// DFS over monotone step sets (N/E, optionally D). Every step increases
/// x + y, so the target is reached exactly once per path and emission at
/// the target terminates the branch.
fn monotone_dfs(
    at: Point,
    target: Point,
    diagonal: bool,
    diagram: Option<(i64, &Partition)>,
    steps: &mut Vec<Step>,
    out: &mut Vec<Path>,
) {
    if at == target {
        out.push(Path::from_origin(steps.clone()));
        return;
    }
    let options: &[Step] = if diagonal {
        &[Step::N, Step::E, Step::D]
    } else {
        &[Step::N, Step::E]
    };
    for &s in options {
        let (dx, dy) = s.displacement();
        let next = Point::new(at.x + dx, at.y + dy);
        if next.x > target.x || next.y > target.y {
            continue;
        }
        if let Some((j, lambda)) = diagram {
            if !allowed_in_diagram(next, j, lambda) {
                continue;
            }
        }
        steps.push(s);
        monotone_dfs(next, target, diagonal, diagram, steps, out);
        steps.pop();
    }
}

/// DFS over the four unit steps with a fixed number of steps remaining.
fn four_step_dfs(
    at: Point,
    target: Point,
    left: i64,
    upper: bool,
    steps: &mut Vec<Step>,
    out: &mut Vec<Path>,
) {
    let dist = (target.x - at.x).abs() + (target.y - at.y).abs();
    if dist > left || (left - dist) % 2 != 0 {
        return;
    }
    if left == 0 {
        out.push(Path::from_origin(steps.clone()));
        return;
    }
    for s in [Step::N, Step::E, Step::S, Step::W] {
        let (dx, dy) = s.displacement();
        let next = Point::new(at.x + dx, at.y + dy);
        if upper && next.y < 0 {
            continue;
        }
        steps.push(s);
        four_step_dfs(next, target, left - 1, upper, steps, out);
        steps.pop();
    }
}
