//! The width-two dictionary between posets and lattice regions.
//!
//! For a chain partition `C1 = {alpha_1 < ... < alpha_a}`,
//! `C2 = {beta_1 < ... < beta_b}`, a linear extension becomes the North–East
//! path from `(0, 0)` to `(a, b)` whose `t`-th step is East iff the element of
//! rank `t` lies in `C1`.  The paths arising this way fill a row- and
//! column-convex region bounded by two noncrossing paths.
//!
//! A region is stored by the heights of the East steps of its boundaries:
//! `lower[h-1] = D_h` and `upper[h-1] = U_h` are the lowest and highest rows in
//! which the `h`-th East step may be taken.  Both sequences are nondecreasing
//! and `D_h <= U_h`; the extension paths are exactly the nondecreasing height
//! sequences `e` with `D <= e <= U`.

use std::fmt;
use std::ops::{Add, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::poset::{Chain, ChainPartition, LinearExtension, Poset};

/// A lattice point `(x, y)`; `x` counts East steps (chain `C1`), `y` North steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub x: i32,
    pub y: i32,
}

impl GridPoint {
    pub const ORIGIN: GridPoint = GridPoint { x: 0, y: 0 };
    pub const EAST: GridPoint = GridPoint { x: 1, y: 0 };
    pub const NORTH: GridPoint = GridPoint { x: 0, y: 1 };

    pub const fn new(x: i32, y: i32) -> GridPoint {
        GridPoint { x, y }
    }

    /// Reflection across the diagonal.
    pub fn transpose(self) -> GridPoint {
        GridPoint {
            x: self.y,
            y: self.x,
        }
    }

    /// Componentwise `self <= other`.
    pub fn weakly_below_left(self, other: GridPoint) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl Add for GridPoint {
    type Output = GridPoint;
    fn add(self, o: GridPoint) -> GridPoint {
        GridPoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for GridPoint {
    type Output = GridPoint;
    fn sub(self, o: GridPoint) -> GridPoint {
        GridPoint::new(self.x - o.x, self.y - o.y)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A unit step of a monotone lattice path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    East,
    North,
}

impl Step {
    pub fn vector(self) -> GridPoint {
        match self {
            Step::East => GridPoint::EAST,
            Step::North => GridPoint::NORTH,
        }
    }

    /// Exponent contributed by this step when it leaves `from`: an East step
    /// leaving `(i, j)` is taken at time `i + j + 1`, which is its weight;
    /// North steps weigh nothing.
    pub fn weight_from(self, from: GridPoint) -> u32 {
        match self {
            Step::East => (from.x + from.y + 1) as u32,
            Step::North => 0,
        }
    }
}

/// A North–East lattice path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NEPath {
    start: GridPoint,
    steps: Vec<Step>,
}

impl NEPath {
    pub fn new(start: GridPoint, steps: Vec<Step>) -> NEPath {
        NEPath { start, steps }
    }

    /// Parses a step string over `{E, N}`.
    pub fn parse(start: GridPoint, s: &str) -> Result<NEPath> {
        let steps = s
            .chars()
            .map(|c| match c {
                'E' | 'e' => Ok(Step::East),
                'N' | 'n' => Ok(Step::North),
                other => Err(Error::NotExtensionPath(format!("unknown step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NEPath { start, steps })
    }

    /// The path from `start` whose `h`-th East step is taken in row `heights[h-1]`
    /// and which then climbs to row `end_y`.
    pub fn from_heights(start: GridPoint, heights: &[u32], end_y: i32) -> NEPath {
        let mut steps = Vec::with_capacity(heights.len() + (end_y - start.y).max(0) as usize);
        let mut y = start.y;
        for &h in heights {
            while y < h as i32 {
                steps.push(Step::North);
                y += 1;
            }
            steps.push(Step::East);
        }
        while y < end_y {
            steps.push(Step::North);
            y += 1;
        }
        NEPath { start, steps }
    }

    pub fn start(&self) -> GridPoint {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn end(&self) -> GridPoint {
        self.steps.iter().fold(self.start, |p, s| p + s.vector())
    }

    /// All lattice points visited, starting point first.
    pub fn points(&self) -> Vec<GridPoint> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        pts.push(p);
        for s in &self.steps {
            p = p + s.vector();
            pts.push(p);
        }
        pts
    }

    /// Rows of the East steps in order.
    pub fn east_heights(&self) -> Vec<u32> {
        let mut p = self.start;
        let mut out = Vec::new();
        for s in &self.steps {
            if *s == Step::East {
                out.push(p.y as u32);
            }
            p = p + s.vector();
        }
        out
    }

    /// Sum over East steps of `i + j + 1`, `(i, j)` being the point the step leaves.
    pub fn weight(&self) -> u32 {
        let mut p = self.start;
        let mut w = 0;
        for s in &self.steps {
            w += s.weight_from(p);
            p = p + s.vector();
        }
        w
    }

    /// Step string over `{E, N}`.
    pub fn step_string(&self) -> String {
        self.steps
            .iter()
            .map(|s| if *s == Step::East { 'E' } else { 'N' })
            .collect()
    }

    pub fn translate(&self, v: GridPoint) -> NEPath {
        NEPath {
            start: self.start + v,
            steps: self.steps.clone(),
        }
    }

    /// Reflection across the diagonal (East and North exchanged).
    pub fn transpose(&self) -> NEPath {
        NEPath {
            start: self.start.transpose(),
            steps: self
                .steps
                .iter()
                .map(|s| {
                    if *s == Step::East {
                        Step::North
                    } else {
                        Step::East
                    }
                })
                .collect(),
        }
    }

    /// Sub-path between step indices `from..to` (point indices `from..=to`).
    pub fn segment(&self, from: usize, to: usize) -> NEPath {
        let start = self.steps[..from]
            .iter()
            .fold(self.start, |p, s| p + s.vector());
        NEPath {
            start,
            steps: self.steps[from..to].to_vec(),
        }
    }

    /// `self` followed by `other`, which must start where `self` ends.
    pub fn concat(&self, other: &NEPath) -> Option<NEPath> {
        (self.end() == other.start).then(|| {
            let mut steps = self.steps.clone();
            steps.extend_from_slice(&other.steps);
            NEPath {
                start: self.start,
                steps,
            }
        })
    }
}

impl fmt::Display for NEPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.step_string())
    }
}

/// A staircase region between two weakly noncrossing boundary paths from
/// `(0, 0)` to `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Region {
    b: u32,
    lower: Vec<u32>,
    upper: Vec<u32>,
}

impl Region {
    /// Builds a region from the East-step heights of its boundaries.
    pub fn from_heights(b: u32, lower: Vec<u32>, upper: Vec<u32>) -> Result<Region> {
        if lower.len() != upper.len() {
            return Err(Error::InvalidRegion(
                "boundaries of different widths".into(),
            ));
        }
        for seq in [&lower, &upper] {
            if seq.windows(2).any(|w| w[0] > w[1]) || seq.iter().any(|&h| h > b) {
                return Err(Error::InvalidRegion(format!(
                    "{seq:?} is not a monotone path in height {b}"
                )));
            }
        }
        if lower.iter().zip(&upper).any(|(d, u)| d > u) {
            return Err(Error::InvalidRegion(
                "the lower boundary crosses above the upper one".into(),
            ));
        }
        Ok(Region { b, lower, upper })
    }

    /// Builds a region from its two boundary paths.
    pub fn from_paths(lower: &NEPath, upper: &NEPath) -> Result<Region> {
        for p in [lower, upper] {
            if p.start() != GridPoint::ORIGIN {
                return Err(Error::InvalidRegion(
                    "boundaries must start at the origin".into(),
                ));
            }
        }
        if lower.end() != upper.end() {
            return Err(Error::InvalidRegion(
                "boundaries end at different corners".into(),
            ));
        }
        Region::from_heights(
            lower.end().y as u32,
            lower.east_heights(),
            upper.east_heights(),
        )
    }

    /// The full `a x b` rectangle.
    pub fn full(a: usize, b: usize) -> Region {
        Region {
            b: b as u32,
            lower: vec![0; a],
            upper: vec![b as u32; a],
        }
    }

    pub fn a(&self) -> usize {
        self.lower.len()
    }

    pub fn b(&self) -> usize {
        self.b as usize
    }

    /// `D_1..D_a`.
    pub fn lower_heights(&self) -> &[u32] {
        &self.lower
    }

    /// `U_1..U_a`.
    pub fn upper_heights(&self) -> &[u32] {
        &self.upper
    }

    pub fn corner(&self) -> GridPoint {
        GridPoint::new(self.a() as i32, self.b as i32)
    }

    pub fn lower_path(&self) -> NEPath {
        NEPath::from_heights(GridPoint::ORIGIN, &self.lower, self.b as i32)
    }

    pub fn upper_path(&self) -> NEPath {
        NEPath::from_heights(GridPoint::ORIGIN, &self.upper, self.b as i32)
    }

    /// `D_h` with the conventions `D_0 = 0`, `D_{a+1} = b`.
    pub fn lower_at(&self, h: usize) -> u32 {
        match h {
            0 => 0,
            h if h > self.a() => self.b,
            h => self.lower[h - 1],
        }
    }

    /// `U_h` with the conventions `U_0 = 0`, `U_{a+1} = b`.
    pub fn upper_at(&self, h: usize) -> u32 {
        match h {
            0 => 0,
            h if h > self.a() => self.b,
            h => self.upper[h - 1],
        }
    }

    /// Rows `[lo, hi]` of column `x` inside the region, if `0 <= x <= a`.
    pub fn column(&self, x: i32) -> Option<(i32, i32)> {
        if x < 0 || x as usize > self.a() {
            return None;
        }
        let x = x as usize;
        Some((self.lower_at(x) as i32, self.upper_at(x + 1) as i32))
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        self.column(p.x)
            .is_some_and(|(lo, hi)| lo <= p.y && p.y <= hi)
    }

    /// Whether every lattice point of `path` lies in the region.
    pub fn contains_path(&self, path: &NEPath) -> bool {
        path.points().into_iter().all(|p| self.contains(p))
    }

    /// Whether the unit square with upper-right corner `(h, k)` is cut off
    /// above the upper boundary (`alpha_h < beta_k` in the poset).
    pub fn excluded_above(&self, h: usize, k: usize) -> bool {
        k as u32 > self.upper[h - 1]
    }

    /// Whether the unit square with upper-right corner `(h, k)` is cut off
    /// below the lower boundary (`alpha_h > beta_k` in the poset).
    pub fn excluded_below(&self, h: usize, k: usize) -> bool {
        k as u32 <= self.lower[h - 1]
    }

    /// Calls `f` with the East-step heights of every extension path, in
    /// lexicographic order of the height sequences.
    pub fn for_each_path_heights(&self, mut f: impl FnMut(&[u32])) {
        let mut e = vec![0u32; self.a()];
        self.heights_from(0, 0, &mut e, &mut f);
    }

    fn heights_from(&self, i: usize, min: u32, e: &mut [u32], f: &mut dyn FnMut(&[u32])) {
        if i == e.len() {
            f(e);
            return;
        }
        for h in min.max(self.lower[i])..=self.upper[i] {
            e[i] = h;
            self.heights_from(i + 1, h, e, f);
        }
    }

    /// All extension paths `(0, 0) -> (a, b)`.
    pub fn paths(&self) -> Vec<NEPath> {
        let mut out = Vec::new();
        self.for_each_path_heights(|e| {
            out.push(NEPath::from_heights(GridPoint::ORIGIN, e, self.b as i32))
        });
        out
    }

    /// All monotone paths from `from` to `to` inside the region (empty if
    /// either endpoint lies outside), by plain recursion.
    pub fn paths_between(&self, from: GridPoint, to: GridPoint) -> Vec<NEPath> {
        let mut out = Vec::new();
        if !self.contains(from) || !self.contains(to) || !from.weakly_below_left(to) {
            return out;
        }
        let mut steps = Vec::new();
        self.walk(from, to, &mut steps, &mut |steps| {
            out.push(NEPath::new(from, steps.to_vec()))
        });
        out
    }

    fn walk(
        &self,
        at: GridPoint,
        to: GridPoint,
        steps: &mut Vec<Step>,
        emit: &mut dyn FnMut(&[Step]),
    ) {
        if at == to {
            emit(steps);
            return;
        }
        for s in [Step::East, Step::North] {
            let next = at + s.vector();
            if next.weakly_below_left(to) && self.contains(next) {
                steps.push(s);
                self.walk(next, to, steps, emit);
                steps.pop();
            }
        }
    }

    /// Reflection across the diagonal; the boundaries exchange roles.
    pub fn transpose(&self) -> Region {
        let lower = self.upper_path().transpose();
        let upper = self.lower_path().transpose();
        Region::from_paths(&lower, &upper).expect("transposition preserves regions")
    }

    /// ASCII drawing, top row first.  Lattice points are `+` (inside) or `.`
    /// (outside), points of the overlay path `*`; unit squares cut off above
    /// the upper boundary are `^^^`, those cut off below the lower boundary
    /// `vvv`.  Overlay steps are drawn as `---` and `|`.
    pub fn render(&self, overlay: Option<&NEPath>) -> String {
        let (a, b) = (self.a() as i32, self.b as i32);
        let pts: Vec<GridPoint> = overlay.map(|p| p.points()).unwrap_or_default();
        let on_path = |p: GridPoint| pts.contains(&p);
        let step_between =
            |p: GridPoint, q: GridPoint| pts.windows(2).any(|w| w[0] == p && w[1] == q);
        let mut out = String::new();
        for y in (0..=b).rev() {
            for x in 0..=a {
                let p = GridPoint::new(x, y);
                out.push(if on_path(p) {
                    '*'
                } else if self.contains(p) {
                    '+'
                } else {
                    '.'
                });
                if x < a {
                    out.push_str(if step_between(p, p + GridPoint::EAST) {
                        "---"
                    } else {
                        "   "
                    });
                }
            }
            out.push('\n');
            if y == 0 {
                break;
            }
            for x in 0..=a {
                let p = GridPoint::new(x, y - 1);
                out.push(if step_between(p, p + GridPoint::NORTH) {
                    '|'
                } else {
                    ' '
                });
                if x < a {
                    let (h, k) = (x as usize + 1, y as usize);
                    out.push_str(if self.excluded_above(h, k) {
                        "^^^"
                    } else if self.excluded_below(h, k) {
                        "vvv"
                    } else {
                        "   "
                    });
                }
            }
            out.push('\n');
        }
        out
    }
}

/// The region of a width-two poset with respect to `cp`.
pub fn region_of(p: &Poset, cp: &ChainPartition) -> Region {
    let (a, b) = (cp.a(), cp.b());
    let mut lower = vec![0u32; a];
    let mut upper = vec![b as u32; a];
    for h in 1..=a {
        let x = cp.alpha(h);
        if let Some(k) = (1..=b).rev().find(|&k| p.lt(cp.beta(k), x)) {
            lower[h - 1] = k as u32;
        }
        if let Some(k) = (1..=b).find(|&k| p.lt(x, cp.beta(k))) {
            upper[h - 1] = k as u32 - 1;
        }
    }
    Region::from_heights(b as u32, lower, upper).expect("a chain partition always yields a region")
}

/// The lattice path of a linear extension: step `t` is East iff the element of
/// rank `t` lies in `C1`.
pub fn path_of_extension(cp: &ChainPartition, l: &LinearExtension) -> NEPath {
    let steps = l
        .order()
        .into_iter()
        .map(|u| {
            if cp.chain_of(u) == Chain::First {
                Step::East
            } else {
                Step::North
            }
        })
        .collect();
    NEPath::new(GridPoint::ORIGIN, steps)
}

/// Inverse of [`path_of_extension`].
pub fn extension_of_path(p: &Poset, cp: &ChainPartition, path: &NEPath) -> Result<LinearExtension> {
    let corner = GridPoint::new(cp.a() as i32, cp.b() as i32);
    if path.start() != GridPoint::ORIGIN || path.end() != corner {
        return Err(Error::NotExtensionPath(format!(
            "{path} does not run from (0, 0) to {corner}"
        )));
    }
    let (mut i, mut j) = (0, 0);
    let mut order = Vec::with_capacity(p.len());
    for s in path.steps() {
        match s {
            Step::East => {
                i += 1;
                order.push(cp.alpha(i));
            }
            Step::North => {
                j += 1;
                order.push(cp.beta(j));
            }
        }
    }
    LinearExtension::from_order(p, &order)
        .map_err(|_| Error::NotExtensionPath(format!("{path} leaves the region")))
}

/// The canonical width-two poset of a region: `alpha_h = h - 1`,
/// `beta_k = a + k - 1`, with `alpha_h < beta_k` iff the square `(h, k)` is
/// cut off above and `alpha_h > beta_k` iff it is cut off below.
pub fn poset_of_region(r: &Region) -> (Poset, ChainPartition) {
    let (a, b) = (r.a(), r.b());
    let mut pairs = Vec::new();
    for h in 1..a {
        pairs.push((h - 1, h));
    }
    for k in 1..b {
        pairs.push((a + k - 1, a + k));
    }
    for h in 1..=a {
        for k in 1..=b {
            if r.excluded_above(h, k) {
                pairs.push((h - 1, a + k - 1));
            } else if r.excluded_below(h, k) {
                pairs.push((a + k - 1, h - 1));
            }
        }
    }
    let p = Poset::from_relations(a + b, &pairs).expect("region relations form a partial order");
    let cp = ChainPartition::new(&p, (0..a).collect(), (a..a + b).collect())
        .expect("the two chains of a region poset");
    (p, cp)
}

/// All nondecreasing sequences of length `a` with entries in `0..=b`, in
/// lexicographic order.
fn monotone_sequences(a: usize, b: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(a);
    fn rec(a: usize, b: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == a {
            out.push(cur.clone());
            return;
        }
        for h in min..=b {
            cur.push(h);
            rec(a, b, h, cur, out);
            cur.pop();
        }
    }
    rec(a, b, 0, &mut cur, &mut out);
    out
}

/// Every region in the `a x b` box, i.e. every ordered pair of weakly
/// noncrossing boundary paths, once each (lexicographic in `(lower, upper)`).
pub fn enumerate_regions(a: usize, b: usize) -> Vec<Region> {
    let seqs = monotone_sequences(a, b as u32);
    let mut out = Vec::new();
    for lower in &seqs {
        for upper in &seqs {
            if lower.iter().zip(upper).all(|(d, u)| d <= u) {
                out.push(Region {
                    b: b as u32,
                    lower: lower.clone(),
                    upper: upper.clone(),
                });
            }
        }
    }
    out
}

/// A random region: two uniformly random boundary paths, redrawn until they
/// do not cross (rejection sampling).
pub fn random_region<R: Rng>(a: usize, b: usize, rng: &mut R) -> Region {
    let draw = |rng: &mut R| {
        let mut norths = b;
        let mut heights = Vec::with_capacity(a);
        let mut y = 0u32;
        let mut easts = a;
        while easts > 0 {
            if rng.gen_range(0..easts + norths) < easts {
                heights.push(y);
                easts -= 1;
            } else {
                y += 1;
                norths -= 1;
            }
        }
        heights
    };
    loop {
        let x = draw(rng);
        let y = draw(rng);
        if x.iter().zip(&y).all(|(d, u)| d <= u) {
            return Region {
                b: b as u32,
                lower: x,
                upper: y,
            };
        }
        if y.iter().zip(&x).all(|(d, u)| d <= u) {
            return Region {
                b: b as u32,
                lower: y,
                upper: x,
            };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3_plus_c3() -> (Poset, ChainPartition) {
        let p = Poset::from_relations(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let cp = ChainPartition::new(&p, vec![0, 1, 2], vec![3, 4, 5]).unwrap();
        (p, cp)
    }

    /// alpha_1 < beta_1 < beta_2 < alpha_3, alpha_1 < alpha_2 < alpha_3.
    fn pentagon() -> (Poset, ChainPartition) {
        let p = Poset::from_relations(5, &[(0, 1), (1, 2), (0, 3), (3, 4), (4, 2)]).unwrap();
        let cp = ChainPartition::new(&p, vec![0, 1, 2], vec![3, 4]).unwrap();
        (p, cp)
    }

    #[test]
    fn disjoint_chains_give_full_rectangle() {
        let (p, cp) = c3_plus_c3();
        assert_eq!(region_of(&p, &cp), Region::full(3, 3));
    }

    #[test]
    fn series_composition_gives_single_path() {
        let p = Poset::chain(5);
        let cp = ChainPartition::new(&p, vec![0, 1], vec![2, 3, 4]).unwrap();
        let r = region_of(&p, &cp);
        assert_eq!(r.lower_heights(), r.upper_heights());
        assert_eq!(r.paths().len(), 1);
        assert_eq!(r.lower_path().step_string(), "EENNN");
    }

    #[test]
    fn pentagon_region_is_a_strip_over_the_middle_column() {
        let (p, cp) = pentagon();
        let r = region_of(&p, &cp);
        // alpha_1 below both betas, alpha_3 above both: D = (0,0,2), U = (0,2,2).
        assert_eq!(r.lower_heights(), &[0, 0, 2]);
        assert_eq!(r.upper_heights(), &[0, 2, 2]);
        assert!(r.excluded_above(1, 2) && r.excluded_above(1, 1));
        assert!(r.excluded_below(3, 1) && r.excluded_below(3, 2));
        assert_eq!(r.column(1), Some((0, 2)));
        assert_eq!(r.paths().len(), 3);
        assert_eq!(p.extensions().count(), 3);
    }

    #[test]
    fn block_extension_path() {
        let (p, cp) = c3_plus_c3();
        let l = LinearExtension::from_order(&p, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(path_of_extension(&cp, &l).step_string(), "EEENNN");
        let q = Poset::chain(3);
        let cq = ChainPartition::new(&q, vec![0, 1, 2], vec![]).unwrap();
        for l in q.extensions() {
            assert_eq!(path_of_extension(&cq, &l).step_string(), "EEE");
        }
    }

    #[test]
    fn round_trip_on_all_extensions() {
        let (p, cp) = c3_plus_c3();
        let r = region_of(&p, &cp);
        for l in p.extensions() {
            let path = path_of_extension(&cp, &l);
            assert!(r.contains_path(&path));
            assert_eq!(extension_of_path(&p, &cp, &path).unwrap(), l);
            let alpha_sum: u32 = cp.c1().iter().map(|&u| l.rank(u)).sum();
            assert_eq!(path.weight(), alpha_sum);
        }
    }

    #[test]
    fn path_outside_region_is_rejected() {
        let (p, cp) = pentagon();
        let bad = NEPath::parse(GridPoint::ORIGIN, "NNEEE").unwrap();
        assert!(matches!(
            extension_of_path(&p, &cp, &bad),
            Err(Error::NotExtensionPath(_))
        ));
    }

    #[test]
    fn region_counts() {
        assert_eq!(enumerate_regions(1, 1).len(), 3);
        assert_eq!(enumerate_regions(0, 3).len(), 1);
        // Pairs gamma <= gamma' by brute force over all path pairs.
        for (a, b) in [(2, 2), (3, 2), (2, 4)] {
            let all = Region::full(a, b).paths();
            let brute = all
                .iter()
                .flat_map(|l| all.iter().map(move |u| (l, u)))
                .filter(|(l, u)| Region::from_paths(l, u).is_ok())
                .count();
            assert_eq!(enumerate_regions(a, b).len(), brute);
            let diagonal = enumerate_regions(a, b)
                .iter()
                .filter(|r| r.lower_heights() == r.upper_heights())
                .count();
            assert_eq!(diagonal, all.len());
        }
    }

    #[test]
    fn poset_of_region_round_trip() {
        for a in 0..=6 {
            for b in 0..=6 - a {
                for r in enumerate_regions(a, b) {
                    let (p, cp) = poset_of_region(&r);
                    assert_eq!(region_of(&p, &cp), r);
                    assert_eq!(p.extensions().count(), r.paths().len());
                }
            }
        }
    }

    #[test]
    fn regions_are_row_and_column_convex() {
        for r in enumerate_regions(3, 3) {
            for y in 0..=3 {
                let xs: Vec<i32> = (0..=3)
                    .filter(|&x| r.contains(GridPoint::new(x, y)))
                    .collect();
                assert!(!xs.is_empty());
                assert_eq!(xs.len() as i32, xs[xs.len() - 1] - xs[0] + 1);
            }
        }
    }

    #[test]
    fn paths_match_recursive_walk() {
        for r in enumerate_regions(3, 2) {
            let mut a = r.paths();
            let mut b = r.paths_between(GridPoint::ORIGIN, r.corner());
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn transposition_swaps_axes() {
        for r in enumerate_regions(2, 3) {
            let t = r.transpose();
            assert_eq!((t.a(), t.b()), (3, 2));
            assert_eq!(t.transpose(), r);
            for x in 0..=2 {
                for y in 0..=3 {
                    let p = GridPoint::new(x, y);
                    assert_eq!(r.contains(p), t.contains(p.transpose()));
                }
            }
        }
    }

    #[test]
    fn rendering_marks_excluded_squares_and_overlay() {
        let (p, cp) = pentagon();
        let r = region_of(&p, &cp);
        let l = p.extensions().next().unwrap();
        let art = r.render(Some(&path_of_extension(&cp, &l)));
        assert!(art.contains("^^^") && art.contains("vvv") && art.contains('*'));
        let full = Region::full(2, 1).render(None);
        assert_eq!(full, "+   +   +\n         \n+   +   +\n");
    }
}
