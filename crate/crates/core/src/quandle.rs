//! Finite quandles given by operation tables, the standard families used
//! throughout the crate, and X-sets (sets with a right action of the
//! associated group, represented through generator actions only).
//!
//! Elements of a quandle of order `n` are the integers `0..n`, and
//! `table[i][j]` stores `i * j`.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error("operation table is empty")]
    Empty,
    #[error("operation table is not square: row {row} has {len} entries, expected {size}")]
    NotSquare { row: usize, len: usize, size: usize },
    #[error("entry {i} * {j} = {value} is out of range for a quandle of order {size}")]
    OutOfRange {
        i: usize,
        j: usize,
        value: usize,
        size: usize,
    },
    #[error("axiom Q1 violated at {x}: {x} * {x} = {got}")]
    Idempotency { x: usize, got: usize },
    #[error("axiom Q2 violated: right translation by {y} sends both {x1} and {x2} to {image}")]
    NotBijective {
        y: usize,
        x1: usize,
        x2: usize,
        image: usize,
    },
    #[error("axiom Q3 violated at ({x}, {y}, {z}): (x*y)*z = {left} but (x*z)*(y*z) = {right}")]
    NotSelfDistributive {
        x: usize,
        y: usize,
        z: usize,
        left: usize,
        right: usize,
    },
    #[error("order must be positive")]
    ZeroOrder,
    #[error("unknown quandle `{0}`")]
    UnknownName(String),
    #[error("map does not preserve the operation at ({x}, {y})")]
    NotHomomorphism { x: usize, y: usize },
    #[error("homomorphism image {value} at {x} is out of range for the target of order {size}")]
    ImageOutOfRange { x: usize, value: usize, size: usize },
    #[error("x-set element {0} does not belong to this x-set")]
    ForeignPoint(Point),
    #[error("{0}")]
    NotEquivariant(String),
    #[error("projection requires a product x-set")]
    NotProduct,
}

/// A finite quandle, validated on construction.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuandleFile", into = "QuandleFile")]
pub struct Quandle {
    size: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

/// On-disk representation: `{"size": n, "table": [[...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuandleFile {
    pub size: usize,
    pub table: Vec<Vec<usize>>,
}

impl TryFrom<QuandleFile> for Quandle {
    type Error = QuandleError;

    fn try_from(file: QuandleFile) -> Result<Self, Self::Error> {
        if file.table.len() != file.size {
            return Err(QuandleError::NotSquare {
                row: file.table.len(),
                len: file.table.len(),
                size: file.size,
            });
        }
        Quandle::from_table(&file.table)
    }
}

impl From<Quandle> for QuandleFile {
    fn from(q: Quandle) -> Self {
        QuandleFile {
            size: q.size,
            table: q.table_rows(),
        }
    }
}

impl fmt::Debug for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quandle")
            .field("size", &self.size)
            .field("table", &self.table_rows())
            .finish()
    }
}

impl Quandle {
    /// Validates a square operation table against Q1-Q3.
    ///
    /// The first violated axiom is reported together with a witness.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let size = rows.len();
        if size == 0 {
            return Err(QuandleError::Empty);
        }
        let mut table = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(QuandleError::NotSquare {
                    row: i,
                    len: row.len(),
                    size,
                });
            }
            for (j, &value) in row.iter().enumerate() {
                if value >= size {
                    return Err(QuandleError::OutOfRange { i, j, value, size });
                }
                table.push(value);
            }
        }
        let op = |i: usize, j: usize| table[i * size + j];

        for x in 0..size {
            if op(x, x) != x {
                return Err(QuandleError::Idempotency { x, got: op(x, x) });
            }
        }

        let mut inverse = vec![usize::MAX; size * size];
        for y in 0..size {
            for x in 0..size {
                let image = op(x, y);
                let slot = &mut inverse[image * size + y];
                if *slot != usize::MAX {
                    return Err(QuandleError::NotBijective {
                        y,
                        x1: *slot,
                        x2: x,
                        image,
                    });
                }
                *slot = x;
            }
        }

        for x in 0..size {
            for y in 0..size {
                for z in 0..size {
                    let left = op(op(x, y), z);
                    let right = op(op(x, z), op(y, z));
                    if left != right {
                        return Err(QuandleError::NotSelfDistributive {
                            x,
                            y,
                            z,
                            left,
                            right,
                        });
                    }
                }
            }
        }

        Ok(Quandle {
            size,
            table,
            inverse,
        })
    }

    /// Dihedral quandle `R_n`: `Z_n` with `i * j = 2j - i`.
    pub fn dihedral(n: usize) -> Result<Self, QuandleError> {
        if n == 0 {
            return Err(QuandleError::ZeroOrder);
        }
        let rows = (0..n)
            .map(|i| (0..n).map(|j| (2 * j + n - i) % n).collect())
            .collect::<Vec<Vec<usize>>>();
        Quandle::from_table(&rows)
    }

    /// The tetrahedral quandle `S_4`.
    pub fn tetrahedral() -> Self {
        let rows = vec![
            vec![0, 2, 3, 1],
            vec![3, 1, 0, 2],
            vec![1, 3, 2, 0],
            vec![2, 0, 1, 3],
        ];
        Quandle::from_table(&rows).expect("tetrahedral table satisfies the axioms")
    }

    /// Trivial quandle `T_n`: `i * j = i`.
    pub fn trivial(n: usize) -> Result<Self, QuandleError> {
        if n == 0 {
            return Err(QuandleError::ZeroOrder);
        }
        let rows = (0..n).map(|i| vec![i; n]).collect::<Vec<_>>();
        Quandle::from_table(&rows)
    }

    /// Resolves names such as `R3`, `R5`, `S4`, `T2`.
    pub fn by_name(name: &str) -> Result<Self, QuandleError> {
        let unknown = || QuandleError::UnknownName(name.to_string());
        let trimmed = name.trim();
        if trimmed == "S4" {
            return Ok(Quandle::tetrahedral());
        }
        let (family, order) = trimmed.split_at(trimmed.len().min(1));
        let n: usize = order.parse().map_err(|_| unknown())?;
        match family {
            "R" => Quandle::dihedral(n),
            "T" => Quandle::trivial(n),
            _ => Err(unknown()),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `x * y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }

    /// The unique `z` with `z * y = x`.
    #[inline]
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.inverse[x * self.size + y]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// Whether the inner automorphism group acts transitively.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.size];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(e) = queue.pop_front() {
            for x in 0..self.size {
                for next in [self.op(e, x), self.inv_op(e, x)] {
                    if !seen[next] {
                        seen[next] = true;
                        count += 1;
                        queue.push_back(next);
                    }
                }
            }
        }
        count == self.size
    }

    /// Orbit index of every element under the inner automorphism group.
    pub fn orbits(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.size];
        let mut next_label = 0;
        for start in 0..self.size {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next_label;
            let mut queue = VecDeque::from([start]);
            while let Some(e) = queue.pop_front() {
                for x in 0..self.size {
                    for next in [self.op(e, x), self.inv_op(e, x)] {
                        if label[next] == usize::MAX {
                            label[next] = next_label;
                            queue.push_back(next);
                        }
                    }
                }
            }
            next_label += 1;
        }
        label
    }
}

/// A quandle homomorphism `f: Q -> X`, stored as the image of each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandleHom {
    source: Quandle,
    target: Quandle,
    images: Vec<usize>,
}

impl QuandleHom {
    pub fn new(source: Quandle, target: Quandle, images: Vec<usize>) -> Result<Self, QuandleError> {
        assert_eq!(images.len(), source.size(), "one image per source element");
        for (x, &value) in images.iter().enumerate() {
            if value >= target.size() {
                return Err(QuandleError::ImageOutOfRange {
                    x,
                    value,
                    size: target.size(),
                });
            }
        }
        for x in 0..source.size() {
            for y in 0..source.size() {
                if images[source.op(x, y)] != target.op(images[x], images[y]) {
                    return Err(QuandleError::NotHomomorphism { x, y });
                }
            }
        }
        Ok(QuandleHom {
            source,
            target,
            images,
        })
    }

    pub fn identity(q: &Quandle) -> Self {
        QuandleHom {
            source: q.clone(),
            target: q.clone(),
            images: (0..q.size()).collect(),
        }
    }

    pub fn source(&self) -> &Quandle {
        &self.source
    }

    pub fn target(&self) -> &Quandle {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }
}

/// An element of an X-set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    /// The single element of a singleton X-set.
    Unit,
    /// An element of the quandle acting on itself.
    Elem(usize),
    /// An integer, acted on by translation.
    Int(i64),
    Pair(Box<Point>, Box<Point>),
}

impl Point {
    pub fn pair(left: Point, right: Point) -> Self {
        Point::Pair(Box::new(left), Box::new(right))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Unit => write!(f, "*"),
            Point::Elem(x) => write!(f, "{x}"),
            Point::Int(a) => write!(f, "{a}"),
            Point::Pair(l, r) => write!(f, "({l}, {r})"),
        }
    }
}

/// Whether a generator acts by itself or by its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    pub const BOTH: [Direction; 2] = [Direction::Forward, Direction::Inverse];

    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum XSetKind {
    /// `X` acting on itself: `y . x = y * x`.
    QuandleItself,
    /// `{y0}` with the trivial action.
    Singleton,
    /// `Z` with every generator acting as `+1`.
    Integers,
    /// Componentwise action on a product.
    Product(Box<XSetKind>, Box<XSetKind>),
}

impl XSetKind {
    pub fn product(left: XSetKind, right: XSetKind) -> Self {
        XSetKind::Product(Box::new(left), Box::new(right))
    }

    pub fn is_finite(&self) -> bool {
        match self {
            XSetKind::QuandleItself | XSetKind::Singleton => true,
            XSetKind::Integers => false,
            XSetKind::Product(l, r) => l.is_finite() && r.is_finite(),
        }
    }
}

impl fmt::Display for XSetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XSetKind::QuandleItself => write!(f, "X"),
            XSetKind::Singleton => write!(f, "{{y0}}"),
            XSetKind::Integers => write!(f, "Z"),
            XSetKind::Product(l, r) => write!(f, "{l} x {r}"),
        }
    }
}

/// An X-set over a fixed quandle. The associated group is never built;
/// words act letter by letter through [`XSet::act`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XSet {
    kind: XSetKind,
    quandle: Quandle,
}

impl XSet {
    pub fn new(kind: XSetKind, quandle: &Quandle) -> Self {
        XSet {
            kind,
            quandle: quandle.clone(),
        }
    }

    pub fn singleton(quandle: &Quandle) -> Self {
        XSet::new(XSetKind::Singleton, quandle)
    }

    pub fn itself(quandle: &Quandle) -> Self {
        XSet::new(XSetKind::QuandleItself, quandle)
    }

    pub fn integers(quandle: &Quandle) -> Self {
        XSet::new(XSetKind::Integers, quandle)
    }

    pub fn product(left: &XSet, right: &XSet) -> Self {
        assert_eq!(left.quandle, right.quandle, "factors must share the quandle");
        XSet::new(
            XSetKind::product(left.kind.clone(), right.kind.clone()),
            &left.quandle,
        )
    }

    pub fn kind(&self) -> &XSetKind {
        &self.kind
    }

    pub fn quandle(&self) -> &Quandle {
        &self.quandle
    }

    pub fn is_finite(&self) -> bool {
        self.kind.is_finite()
    }

    pub fn is_singleton(&self) -> bool {
        self.kind == XSetKind::Singleton
    }

    pub fn contains(&self, p: &Point) -> bool {
        fn go(kind: &XSetKind, p: &Point, n: usize) -> bool {
            match (kind, p) {
                (XSetKind::Singleton, Point::Unit) => true,
                (XSetKind::QuandleItself, Point::Elem(x)) => *x < n,
                (XSetKind::Integers, Point::Int(_)) => true,
                (XSetKind::Product(lk, rk), Point::Pair(l, r)) => go(lk, l, n) && go(rk, r, n),
                _ => false,
            }
        }
        go(&self.kind, p, self.quandle.size())
    }

    /// Right action of the generator `g` (or its inverse) on `p`.
    ///
    /// Panics if `p` is not an element of this X-set.
    pub fn act(&self, p: &Point, g: usize, dir: Direction) -> Point {
        fn go(kind: &XSetKind, q: &Quandle, p: &Point, g: usize, dir: Direction) -> Point {
            match (kind, p) {
                (XSetKind::Singleton, Point::Unit) => Point::Unit,
                (XSetKind::QuandleItself, Point::Elem(y)) => match dir {
                    Direction::Forward => Point::Elem(q.op(*y, g)),
                    Direction::Inverse => Point::Elem(q.inv_op(*y, g)),
                },
                (XSetKind::Integers, Point::Int(a)) => match dir {
                    Direction::Forward => Point::Int(a + 1),
                    Direction::Inverse => Point::Int(a - 1),
                },
                (XSetKind::Product(lk, rk), Point::Pair(l, r)) => {
                    Point::pair(go(lk, q, l, g, dir), go(rk, q, r, g, dir))
                }
                (kind, p) => panic!("point {p} is not an element of the x-set {kind}"),
            }
        }
        go(&self.kind, &self.quandle, p, g, dir)
    }

    /// Acts by a word of signed generators, letter by letter from the left.
    pub fn act_word(&self, p: &Point, word: &[(usize, Direction)]) -> Point {
        word.iter()
            .fold(p.clone(), |acc, &(g, dir)| self.act(&acc, g, dir))
    }

    /// All elements in a fixed order, or `None` for infinite X-sets.
    pub fn elements(&self) -> Option<Vec<Point>> {
        fn go(kind: &XSetKind, n: usize) -> Option<Vec<Point>> {
            match kind {
                XSetKind::Singleton => Some(vec![Point::Unit]),
                XSetKind::QuandleItself => Some((0..n).map(Point::Elem).collect()),
                XSetKind::Integers => None,
                XSetKind::Product(lk, rk) => {
                    let left = go(lk, n)?;
                    let right = go(rk, n)?;
                    Some(
                        left.iter()
                            .flat_map(|l| right.iter().map(move |r| Point::pair(l.clone(), r.clone())))
                            .collect(),
                    )
                }
            }
        }
        go(&self.kind, self.quandle.size())
    }

    /// Elements with every integer coordinate restricted to `window`.
    /// Coincides with [`XSet::elements`] on finite X-sets.
    pub fn window(&self, window: &[i64]) -> Vec<Point> {
        fn go(kind: &XSetKind, n: usize, window: &[i64]) -> Vec<Point> {
            match kind {
                XSetKind::Singleton => vec![Point::Unit],
                XSetKind::QuandleItself => (0..n).map(Point::Elem).collect(),
                XSetKind::Integers => window.iter().copied().map(Point::Int).collect(),
                XSetKind::Product(lk, rk) => {
                    let left = go(lk, n, window);
                    let right = go(rk, n, window);
                    left.iter()
                        .flat_map(|l| right.iter().map(move |r| Point::pair(l.clone(), r.clone())))
                        .collect()
                }
            }
        }
        go(&self.kind, self.quandle.size(), window)
    }
}

type PointMap = Arc<dyn Fn(&Point) -> Point + Send + Sync>;

/// An equivariant map between two X-sets over the same quandle.
#[derive(Clone)]
pub struct XMap {
    source: XSet,
    target: XSet,
    map: PointMap,
    label: String,
}

impl fmt::Debug for XMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("XMap")
            .field("label", &self.label)
            .field("source", &self.source.kind)
            .field("target", &self.target.kind)
            .finish()
    }
}

impl XMap {
    /// Wraps an arbitrary function. Equivariance is not checked here; see
    /// [`XMap::check_equivariance`].
    pub fn from_fn(
        source: XSet,
        target: XSet,
        label: impl Into<String>,
        map: impl Fn(&Point) -> Point + Send + Sync + 'static,
    ) -> Self {
        XMap {
            source,
            target,
            map: Arc::new(map),
            label: label.into(),
        }
    }

    pub fn identity(y: &XSet) -> Self {
        XMap::from_fn(y.clone(), y.clone(), "id", |p| p.clone())
    }

    /// The unique map `q: Y -> {y0}`.
    pub fn to_singleton(y: &XSet) -> Self {
        XMap::from_fn(y.clone(), XSet::singleton(y.quandle()), "q", |_| Point::Unit)
    }

    /// Projection of a product onto its `index`-th factor (0 or 1).
    pub fn projection(y: &XSet, index: usize) -> Result<Self, QuandleError> {
        let XSetKind::Product(left, right) = y.kind() else {
            return Err(QuandleError::NotProduct);
        };
        let factor = if index == 0 { left } else { right };
        let target = XSet::new((**factor).clone(), y.quandle());
        Ok(XMap::from_fn(
            y.clone(),
            target,
            format!("p{}", index + 1),
            move |p| match p {
                Point::Pair(l, r) => {
                    if index == 0 {
                        (**l).clone()
                    } else {
                        (**r).clone()
                    }
                }
                other => panic!("projection applied to non-pair {other}"),
            },
        ))
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &XMap, inner: &XMap) -> Self {
        assert_eq!(
            inner.target.kind, outer.source.kind,
            "composable maps must share the middle x-set"
        );
        let (f, g) = (outer.map.clone(), inner.map.clone());
        XMap {
            source: inner.source.clone(),
            target: outer.target.clone(),
            map: Arc::new(move |p| f(&g(p))),
            label: format!("{}∘{}", outer.label, inner.label),
        }
    }

    pub fn source(&self) -> &XSet {
        &self.source
    }

    pub fn target(&self) -> &XSet {
        &self.target
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn apply(&self, p: &Point) -> Point {
        (self.map)(p)
    }

    /// Checks `map(p . g^±) = map(p) . g^±` on the given points and every
    /// generator.
    pub fn check_equivariance(&self, points: &[Point]) -> Result<(), QuandleError> {
        let n = self.source.quandle().size();
        for p in points {
            if !self.source.contains(p) {
                return Err(QuandleError::ForeignPoint(p.clone()));
            }
            for g in 0..n {
                for dir in Direction::BOTH {
                    let left = self.apply(&self.source.act(p, g, dir));
                    let right = self.target.act(&self.apply(p), g, dir);
                    if left != right {
                        return Err(QuandleError::NotEquivariant(format!(
                            "{} fails at point {p}, generator {g} ({dir:?}): {left} != {right}",
                            self.label
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_operation() {
        let r3 = Quandle::dihedral(3).unwrap();
        assert_eq!(r3.op(0, 1), 2);
        let r5 = Quandle::dihedral(5).unwrap();
        assert_eq!(r5.op(1, 3), 0);
        // even order still satisfies Q2 with 2j - i
        assert!(Quandle::dihedral(4).is_ok());
        assert!(Quandle::dihedral(6).is_ok());
    }

    #[test]
    fn printed_dihedral_formula_fails_for_even_order() {
        // i * j = 2i - j is not right-invertible when n is even
        let n = 4;
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| (2 * i + n - j) % n).collect())
            .collect();
        assert!(matches!(
            Quandle::from_table(&rows),
            Err(QuandleError::NotBijective { .. })
        ));
    }

    #[test]
    fn tetrahedral_entries() {
        let s4 = Quandle::tetrahedral();
        assert_eq!(s4.op(0, 3), 1);
        assert_eq!(s4.op(3, 0), 2);
        for (x, y) in [(0, 0), (1, 2), (2, 3), (3, 1)] {
            assert_eq!(s4.op(x, y), 0);
        }
        for (x, y) in [(0, 2), (1, 0), (2, 1), (3, 3)] {
            assert_eq!(s4.op(x, y), 3);
        }
        assert!(s4.is_connected());
    }

    #[test]
    fn trivial_quandles() {
        let t2 = Quandle::trivial(2).unwrap();
        assert_eq!(t2.op(1, 0), 1);
        assert!(!t2.is_connected());
        let t1 = Quandle::trivial(1).unwrap();
        assert!(t1.is_connected());
        assert_eq!(Quandle::trivial(0), Err(QuandleError::ZeroOrder));
    }

    #[test]
    fn connectivity_of_dihedral_family() {
        for n in 1..=9 {
            let q = Quandle::dihedral(n).unwrap();
            assert_eq!(q.is_connected(), n % 2 == 1, "R{n}");
        }
    }

    #[test]
    fn q1_violation_reports_witness() {
        let err = Quandle::from_table(&[vec![1, 0], vec![1, 1]]).unwrap_err();
        assert_eq!(err, QuandleError::Idempotency { x: 0, got: 1 });
    }

    #[test]
    fn q3_violation_is_detected() {
        // columns are the permutations (1 2), (0 2), id: Q1 and Q2 hold,
        // but conjugating the second by the first does not give the third
        let rows = vec![vec![0, 2, 0], vec![2, 1, 1], vec![1, 0, 2]];
        let err = Quandle::from_table(&rows).unwrap_err();
        assert!(matches!(err, QuandleError::NotSelfDistributive { .. }), "{err}");
    }

    #[test]
    fn malformed_tables() {
        assert_eq!(Quandle::from_table(&[]), Err(QuandleError::Empty));
        assert!(matches!(
            Quandle::from_table(&[vec![0, 1], vec![1]]),
            Err(QuandleError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            Quandle::from_table(&[vec![0, 5], vec![1, 1]]),
            Err(QuandleError::OutOfRange { value: 5, .. })
        ));
    }

    #[test]
    fn names_resolve() {
        assert_eq!(Quandle::by_name("R3").unwrap(), Quandle::dihedral(3).unwrap());
        assert_eq!(Quandle::by_name("S4").unwrap(), Quandle::tetrahedral());
        assert_eq!(Quandle::by_name("T2").unwrap(), Quandle::trivial(2).unwrap());
        assert!(Quandle::by_name("Q7").is_err());
        assert!(Quandle::by_name("").is_err());
    }

    #[test]
    fn json_round_trip() {
        let s4 = Quandle::tetrahedral();
        let text = serde_json::to_string(&s4).unwrap();
        assert_eq!(text, r#"{"size":4,"table":[[0,2,3,1],[3,1,0,2],[1,3,2,0],[2,0,1,3]]}"#);
        let back: Quandle = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s4);
        let bad = r#"{"size":2,"table":[[1,0],[1,1]]}"#;
        assert!(serde_json::from_str::<Quandle>(bad).is_err());
    }

    #[test]
    fn standard_actions() {
        let r3 = Quandle::dihedral(3).unwrap();
        let itself = XSet::itself(&r3);
        assert_eq!(itself.act(&Point::Elem(1), 0, Direction::Forward), Point::Elem(2));
        let z = XSet::integers(&r3);
        assert_eq!(z.act(&Point::Int(7), 2, Direction::Inverse), Point::Int(6));
        let single = XSet::singleton(&r3);
        assert_eq!(single.act(&Point::Unit, 1, Direction::Forward), Point::Unit);
        let prod = XSet::product(&z, &itself);
        assert_eq!(
            prod.act(&Point::pair(Point::Int(2), Point::Elem(1)), 0, Direction::Forward),
            Point::pair(Point::Int(3), Point::Elem(2))
        );
    }

    #[test]
    fn inverse_action_undoes_forward() {
        let s4 = Quandle::tetrahedral();
        let y = XSet::product(&XSet::integers(&s4), &XSet::itself(&s4));
        for p in y.window(&[-1, 0, 1, 2]) {
            for g in 0..4 {
                let there = y.act(&p, g, Direction::Forward);
                assert_eq!(y.act(&there, g, Direction::Inverse), p);
                // inverse of s_x: z with z * g = y
                if let Point::Pair(_, e) = &p {
                    if let Point::Elem(e) = **e {
                        assert_eq!(s4.op(s4.inv_op(e, g), g), e);
                    }
                }
            }
        }
    }

    #[test]
    fn standard_xmaps_are_equivariant() {
        let s4 = Quandle::tetrahedral();
        let zx = XSet::product(&XSet::integers(&s4), &XSet::itself(&s4));
        let window = zx.window(&[-1, 0, 1, 2]);
        XMap::projection(&zx, 0).unwrap().check_equivariance(&window).unwrap();
        XMap::projection(&zx, 1).unwrap().check_equivariance(&window).unwrap();
        XMap::to_singleton(&zx).check_equivariance(&window).unwrap();
        XMap::identity(&zx).check_equivariance(&window).unwrap();
        let p = XMap::projection(&zx, 1).unwrap();
        let q = XMap::to_singleton(p.target());
        XMap::compose(&q, &p).check_equivariance(&window).unwrap();
    }

    #[test]
    fn non_equivariant_map_is_rejected() {
        let r3 = Quandle::dihedral(3).unwrap();
        let x = XSet::itself(&r3);
        let shift = XMap::from_fn(x.clone(), x.clone(), "shift", |p| match p {
            Point::Elem(e) => Point::Elem((e + 1) % 3),
            _ => unreachable!(),
        });
        // translation is an automorphism, but equivariance fixes the acting generator
        assert!(shift.check_equivariance(&x.elements().unwrap()).is_err());
        XMap::identity(&x).check_equivariance(&x.elements().unwrap()).unwrap();
        let constant = XMap::from_fn(x.clone(), x.clone(), "const", |_| Point::Elem(0));
        assert!(constant.check_equivariance(&x.elements().unwrap()).is_err());
    }

    #[test]
    fn homomorphisms_are_validated() {
        let r3 = Quandle::dihedral(3).unwrap();
        let t1 = Quandle::trivial(1).unwrap();
        QuandleHom::new(r3.clone(), t1, vec![0, 0, 0]).unwrap();
        let err = QuandleHom::new(r3.clone(), r3.clone(), vec![0, 0, 1]).unwrap_err();
        assert!(matches!(err, QuandleError::NotHomomorphism { .. }));
        let id = QuandleHom::identity(&r3);
        assert_eq!(id.apply(2), 2);
    }
}
