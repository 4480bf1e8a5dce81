//! Partial permutations of `{1, ..., n}`: the elements of the inverse
//! symmetric semigroup `IS_n`.
//!
//! Maps act on the **right**. For a point `x` we write `xf` for its image,
//! and the product `fg` means "apply `f`, then `g`": `x(fg) = (xf)g`. This is
//! the opposite of the usual function-composition order, and every product
//! in this crate follows it.
//!
//! Points are 1-based. The degree is part of every element and elements of
//! different degrees never combine.
//!
//! # Cycle-chain notation
//!
//! Every partial permutation splits into cycles `(a,b,c)`, chains `(a,b,c]`
//! (the last point is not in the domain) and isolated points `a]` (in neither
//! domain nor range). Fixed points are written as one-point cycles `(a)`.
//! The nowhere-defined map is written `0`.
//!
//! ```
//! use isg::PartialPerm;
//!
//! let f = PartialPerm::parse("(1,3]2]", 3).unwrap();
//! assert_eq!(f.apply(1), Some(3));
//! assert_eq!(f.apply(3), None);
//! assert!((&f * &f).is_zero());
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, ParseError, Result};

pub type Point = usize;
pub type PointSet = BTreeSet<Point>;

/// A partial injective self-map of `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPerm {
    // images[x - 1] is the image of x, or 0 when x is outside the domain.
    images: Box<[u32]>,
}

impl PartialPerm {
    /// Builds an element from the image of each point, `None` meaning undefined.
    pub fn from_images(images: &[Option<Point>]) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; degree + 1];
        let mut raw = Vec::with_capacity(degree);
        for image in images {
            match *image {
                None => raw.push(0),
                Some(y) => {
                    if y == 0 || y > degree {
                        return Err(Error::PointOutOfRange { point: y, degree });
                    }
                    if std::mem::replace(&mut seen[y], true) {
                        return Err(Error::NotInjective);
                    }
                    raw.push(y as u32);
                }
            }
        }
        Ok(PartialPerm {
            images: raw.into_boxed_slice(),
        })
    }

    /// Builds an element from its arrows `x -> xf`.
    pub fn from_pairs(
        degree: usize,
        pairs: impl IntoIterator<Item = (Point, Point)>,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut images = vec![None; degree];
        for (x, y) in pairs {
            if x == 0 || x > degree {
                return Err(Error::PointOutOfRange { point: x, degree });
            }
            if images[x - 1].replace(y).is_some() {
                return Err(Error::NotInjective);
            }
        }
        Self::from_images(&images)
    }

    /// Internal constructor for images already known to be valid.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(!images.is_empty());
        PartialPerm {
            images: images.into_boxed_slice(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        assert!(degree > 0, "degree must be positive");
        Self::from_raw((1..=degree as u32).collect())
    }

    /// The nowhere-defined map.
    pub fn zero(degree: usize) -> Self {
        assert!(degree > 0, "degree must be positive");
        Self::from_raw(vec![0; degree])
    }

    /// The identity map of `points`, undefined elsewhere.
    pub fn partial_identity(degree: usize, points: &PointSet) -> Self {
        Self::identity(degree).restrict(points)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `xf`, or `None` when `x` is outside the domain (or outside `1..=n`).
    #[inline]
    pub fn apply(&self, x: Point) -> Option<Point> {
        match self.images.get(x.wrapping_sub(1)) {
            Some(&y) if y != 0 => Some(y as Point),
            _ => None,
        }
    }

    /// Arrows `(x, xf)` in increasing order of `x`.
    pub fn arrows(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &y)| y != 0)
            .map(|(x, &y)| (x + 1, y as Point))
    }

    pub fn rank(&self) -> usize {
        self.images.iter().filter(|&&y| y != 0).count()
    }

    pub fn dom(&self) -> PointSet {
        self.arrows().map(|(x, _)| x).collect()
    }

    pub fn ran(&self) -> PointSet {
        self.arrows().map(|(_, y)| y).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|&y| y == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(x, &y)| y as usize == x + 1)
    }

    /// Every point is in the domain.
    pub fn is_total(&self) -> bool {
        self.images.iter().all(|&y| y != 0)
    }

    pub fn is_idempotent(&self) -> bool {
        self.arrows().all(|(x, y)| x == y)
    }

    /// The product `fg`: first `self`, then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let images = self
            .images
            .iter()
            .map(|&y| {
                if y == 0 {
                    0
                } else {
                    other.images[y as usize - 1]
                }
            })
            .collect();
        PartialPerm { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.degree()];
        for (x, y) in self.arrows() {
            images[y - 1] = x as u32;
        }
        Self::from_raw(images)
    }

    /// `f^k`; `f^0` is the identity.
    pub fn pow(&self, k: usize) -> Self {
        let mut result = Self::identity(self.degree());
        for _ in 0..k {
            result = result.compose_unchecked(self);
        }
        result
    }

    /// Keeps the arrows `x -> xf` with both `x` and `xf` in `points`.
    pub fn restrict(&self, points: &PointSet) -> Self {
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(x, &y)| {
                if y != 0 && points.contains(&(x + 1)) && points.contains(&(y as Point)) {
                    y
                } else {
                    0
                }
            })
            .collect();
        PartialPerm { images }
    }

    /// Image of `set` under the map (points outside the domain are dropped).
    pub fn image_of(&self, set: &PointSet) -> PointSet {
        set.iter().filter_map(|&x| self.apply(x)).collect()
    }

    /// Conjugates by the relabeling `x -> relabel[x - 1]`: the result maps
    /// `relabel(x)` to `relabel(xf)`.
    pub fn relabel(&self, relabel: &[Point]) -> Self {
        assert_eq!(relabel.len(), self.degree(), "relabeling of wrong degree");
        let mut images = vec![0u32; self.degree()];
        for (x, y) in self.arrows() {
            images[relabel[x - 1] - 1] = relabel[y - 1] as u32;
        }
        Self::from_raw(images)
    }

    /// Mixed-radix code `sum images[x] * (n+1)^x`, a bijection from `IS_n`
    /// onto `0..(n+1)^n`.
    pub(crate) fn encode(&self) -> usize {
        let base = self.degree() + 1;
        self.images
            .iter()
            .rev()
            .fold(0usize, |acc, &y| acc * base + y as usize)
    }

    pub fn cycle_chain(&self) -> CycleChainForm {
        CycleChainForm::of(self)
    }

    /// Reads cycle-chain notation. Points not mentioned are isolated.
    pub fn parse(text: &str, degree: usize) -> Result<Self, ParseError> {
        parse_cycle_chain(text, degree)
    }
}

impl Mul for &PartialPerm {
    type Output = PartialPerm;

    /// Right-action product. Panics on a degree mismatch; use
    /// [`PartialPerm::compose`] to get an error instead.
    fn mul(self, rhs: &PartialPerm) -> PartialPerm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cycle_chain().fmt(f)
    }
}

impl fmt::Debug for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [n={}]", self, self.degree())
    }
}

/// The decomposition of a partial permutation into cycles, chains and
/// isolated points, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleChainForm {
    pub degree: usize,
    /// Each rotated to start at its least point; sorted by that point.
    pub cycles: Vec<Vec<Point>>,
    /// `x_1 -> ... -> x_m` with `x_1` outside the range and `x_m` outside the
    /// domain; sorted by first point.
    pub chains: Vec<Vec<Point>>,
    /// Ascending.
    pub isolated: Vec<Point>,
}

impl CycleChainForm {
    pub fn of(f: &PartialPerm) -> Self {
        let n = f.degree();
        let mut in_range = vec![false; n + 1];
        for (_, y) in f.arrows() {
            in_range[y] = true;
        }
        let mut seen = vec![false; n + 1];
        let mut chains = Vec::new();
        let mut isolated = Vec::new();
        for x in 1..=n {
            if in_range[x] {
                continue;
            }
            if f.apply(x).is_none() {
                isolated.push(x);
                seen[x] = true;
                continue;
            }
            let mut chain = vec![x];
            seen[x] = true;
            let mut cur = x;
            while let Some(next) = f.apply(cur) {
                chain.push(next);
                seen[next] = true;
                cur = next;
            }
            chains.push(chain);
        }
        let mut cycles = Vec::new();
        for x in 1..=n {
            if seen[x] {
                continue;
            }
            // x lies in the domain and range but on no chain, hence on a cycle.
            let mut cycle = vec![x];
            seen[x] = true;
            let mut cur = f.apply(x).expect("point on a cycle");
            while cur != x {
                cycle.push(cur);
                seen[cur] = true;
                cur = f.apply(cur).expect("point on a cycle");
            }
            cycles.push(cycle);
        }
        CycleChainForm {
            degree: n,
            cycles,
            chains,
            isolated,
        }
    }

    pub fn to_partial_perm(&self) -> Result<PartialPerm> {
        let mut pairs = Vec::new();
        for cycle in &self.cycles {
            for (i, &x) in cycle.iter().enumerate() {
                pairs.push((x, cycle[(i + 1) % cycle.len()]));
            }
        }
        for chain in &self.chains {
            pairs.extend(chain.windows(2).map(|w| (w[0], w[1])));
        }
        PartialPerm::from_pairs(self.degree, pairs)
    }

    pub fn is_zero(&self) -> bool {
        self.cycles.is_empty() && self.chains.is_empty()
    }
}

impl fmt::Display for CycleChainForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let write_points = |f: &mut fmt::Formatter<'_>, pts: &[Point]| -> fmt::Result {
            for (i, p) in pts.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            Ok(())
        };
        for cycle in &self.cycles {
            f.write_str("(")?;
            write_points(f, cycle)?;
            f.write_str(")")?;
        }
        for chain in &self.chains {
            f.write_str("(")?;
            write_points(f, chain)?;
            f.write_str("]")?;
        }
        for p in &self.isolated {
            write!(f, "{p}]")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect_point(&mut self, degree: usize) -> Result<(Point, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(start, "expected a point"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let point: usize = digits
            .parse()
            .map_err(|_| ParseError::new(start, format!("point {digits} is too large")))?;
        if point == 0 {
            return Err(ParseError::new(start, "points are numbered from 1"));
        }
        if point > degree {
            return Err(ParseError::new(
                start,
                format!("point {point} exceeds degree {degree}"),
            ));
        }
        Ok((point, start))
    }
}

fn parse_cycle_chain(text: &str, degree: usize) -> Result<PartialPerm, ParseError> {
    if degree == 0 {
        return Err(ParseError::new(0, "degree must be positive"));
    }
    if text.trim() == "0" {
        return Ok(PartialPerm::zero(degree));
    }
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut images = vec![0u32; degree];
    let mut mentioned = vec![false; degree + 1];
    let mut mention = |point: Point, at: usize| -> Result<(), ParseError> {
        if std::mem::replace(&mut mentioned[point], true) {
            Err(ParseError::new(at, format!("point {point} appears twice")))
        } else {
            Ok(())
        }
    };
    let mut terms = 0;
    loop {
        cur.skip_ws();
        let Some(c) = cur.peek() else { break };
        let term_start = cur.pos;
        match c {
            b'(' => {
                cur.pos += 1;
                let mut pts = Vec::new();
                loop {
                    let (p, at) = cur.expect_point(degree)?;
                    mention(p, at)?;
                    pts.push(p);
                    cur.skip_ws();
                    match cur.peek() {
                        Some(b',') => cur.pos += 1,
                        Some(b')') | Some(b']') => break,
                        Some(_) => {
                            return Err(ParseError::new(cur.pos, "expected ',', ')' or ']'"))
                        }
                        None => return Err(ParseError::new(cur.pos, "unclosed bracket")),
                    }
                }
                let closing = cur.peek().expect("closing bracket");
                cur.pos += 1;
                if closing == b')' {
                    for (i, &x) in pts.iter().enumerate() {
                        images[x - 1] = pts[(i + 1) % pts.len()] as u32;
                    }
                } else {
                    if pts.len() < 2 {
                        return Err(ParseError::new(
                            term_start,
                            "a chain needs at least two points",
                        ));
                    }
                    for w in pts.windows(2) {
                        images[w[0] - 1] = w[1] as u32;
                    }
                }
            }
            b'0'..=b'9' => {
                let (p, at) = cur.expect_point(degree)?;
                mention(p, at)?;
                cur.skip_ws();
                if cur.peek() != Some(b']') {
                    return Err(ParseError::new(
                        cur.pos,
                        "expected ']' after isolated point",
                    ));
                }
                cur.pos += 1;
            }
            _ => {
                return Err(ParseError::new(
                    cur.pos,
                    format!(
                        "unexpected character '{}'",
                        text[cur.pos..].chars().next().unwrap()
                    ),
                ))
            }
        }
        terms += 1;
    }
    if terms == 0 {
        return Err(ParseError::new(0, "empty expression"));
    }
    Ok(PartialPerm::from_raw(images))
}
