//! Letters, shapes and two-row tableaux over the alphabet `1 < 2 < 2̄ < 1̄`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// A letter of the type C₂ vector representation alphabet.
///
/// The derived ordering is the crystal ordering `1 < 2 < 2̄ < 1̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    One,
    Two,
    TwoBar,
    OneBar,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::One, Letter::Two, Letter::TwoBar, Letter::OneBar];

    /// ASCII token used by the text encoding: `1`, `2`, `-2`, `-1`.
    pub fn token(self) -> &'static str {
        match self {
            Letter::One => "1",
            Letter::Two => "2",
            Letter::TwoBar => "-2",
            Letter::OneBar => "-1",
        }
    }

    pub fn from_token(token: &str) -> Option<Letter> {
        match token {
            "1" => Some(Letter::One),
            "2" => Some(Letter::Two),
            "-2" => Some(Letter::TwoBar),
            "-1" => Some(Letter::OneBar),
            _ => None,
        }
    }

    pub fn is_barred(self) -> bool {
        matches!(self, Letter::TwoBar | Letter::OneBar)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Letter::One => "1",
            Letter::Two => "2",
            Letter::TwoBar => "2̄",
            Letter::OneBar => "1̄",
        };
        f.write_str(s)
    }
}

/// A partition with at most two parts, `lambda1 >= lambda2 >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Shape {
    lambda1: usize,
    lambda2: usize,
}

impl Shape {
    pub fn new(lambda1: usize, lambda2: usize) -> Result<Shape, ParseError> {
        if lambda2 > lambda1 {
            return Err(ParseError::NotAPartition { lambda1, lambda2 });
        }
        Ok(Shape { lambda1, lambda2 })
    }

    pub fn lambda1(&self) -> usize {
        self.lambda1
    }

    pub fn lambda2(&self) -> usize {
        self.lambda2
    }

    pub fn cells(&self) -> usize {
        self.lambda1 + self.lambda2
    }

    /// All shapes with `lambda1 <= max_l1`, ordered by `(lambda1, lambda2)`.
    pub fn all_up_to(max_l1: usize) -> Vec<Shape> {
        (0..=max_l1)
            .flat_map(|l1| {
                (0..=l1).map(move |l2| Shape {
                    lambda1: l1,
                    lambda2: l2,
                })
            })
            .collect()
    }
}

impl TryFrom<[usize; 2]> for Shape {
    type Error = ParseError;

    fn try_from(value: [usize; 2]) -> Result<Self, Self::Error> {
        Shape::new(value[0], value[1])
    }
}

impl From<Shape> for [usize; 2] {
    fn from(s: Shape) -> Self {
        [s.lambda1, s.lambda2]
    }
}

impl FromStr for Shape {
    type Err = ParseError;

    /// Parses `L1,L2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::BadShape(s.to_string());
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let l1 = a.trim().parse::<usize>().map_err(|_| bad())?;
        let l2 = b.trim().parse::<usize>().map_err(|_| bad())?;
        Shape::new(l1, l2)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.lambda1, self.lambda2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Row {
    Top,
    Bottom,
}

/// A cell coordinate; columns are 0-based from the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: Row,
    pub col: usize,
}

impl Cell {
    pub fn top(col: usize) -> Cell {
        Cell { row: Row::Top, col }
    }

    pub fn bottom(col: usize) -> Cell {
        Cell { row: Row::Bottom, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = match self.row {
            Row::Top => "top",
            Row::Bottom => "bottom",
        };
        write!(f, "({r}, {})", self.col + 1)
    }
}

/// A two-row filling of a C₂ Young diagram.
///
/// Equality is exact equality of both rows; the derived ordering compares
/// the top row first, and is the canonical ordering used for vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    top: Vec<Letter>,
    bottom: Vec<Letter>,
}

/// One condition of the tableau definition that a filling fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Condition 1: `cells[0]` is strictly greater than `cells[1]`, its right neighbour.
    RowDecrease { cells: [Cell; 2] },
    /// Condition 2: top entry not strictly below the bottom entry of its column.
    ColumnNotIncreasing { col: usize },
    /// Condition 3: column containing both `1` and `1̄`.
    OneAndOneBar { col: usize },
    /// Condition 4: `2` at the top of `col` with `2̄` at the bottom of `col + 1`.
    TwoOverTwoBar { col: usize },
}

impl Violation {
    /// Number of the violated condition, 1 to 4.
    pub fn condition(&self) -> u8 {
        match self {
            Violation::RowDecrease { .. } => 1,
            Violation::ColumnNotIncreasing { .. } => 2,
            Violation::OneAndOneBar { .. } => 3,
            Violation::TwoOverTwoBar { .. } => 4,
        }
    }

    pub fn cells(&self) -> Vec<Cell> {
        match *self {
            Violation::RowDecrease { cells } => cells.to_vec(),
            Violation::ColumnNotIncreasing { col } | Violation::OneAndOneBar { col } => {
                vec![Cell::top(col), Cell::bottom(col)]
            }
            Violation::TwoOverTwoBar { col } => vec![Cell::top(col), Cell::bottom(col + 1)],
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self {
            Violation::RowDecrease { .. } => "row is not weakly increasing",
            Violation::ColumnNotIncreasing { .. } => "column is not strictly increasing",
            Violation::OneAndOneBar { .. } => "column contains both 1 and -1",
            Violation::TwoOverTwoBar { .. } => "2 in the top row with -2 in the bottom row of the next column",
        };
        write!(f, "condition {}: {what} at", self.condition())?;
        for c in self.cells() {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

/// ABCD statistics of a tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbcdStats {
    /// Number of `2̄` in the top row.
    pub a: usize,
    /// Number of `2` in the top row plus number of `1̄` in the bottom row.
    pub b: usize,
    /// Number of `2` in the top row.
    pub c: usize,
    /// Number of `2̄` in the bottom row.
    pub d: usize,
}

impl fmt::Display for AbcdStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={} B={} C={} D={}", self.a, self.b, self.c, self.d)
    }
}

impl Tableau {
    /// Builds a filling from its rows. Fails only if the bottom row is longer
    /// than the top row; the tableau conditions are checked by [`Tableau::validate`].
    pub fn from_rows(top: Vec<Letter>, bottom: Vec<Letter>) -> Result<Tableau, ParseError> {
        if bottom.len() > top.len() {
            return Err(ParseError::BottomLongerThanTop {
                top: top.len(),
                bottom: bottom.len(),
            });
        }
        Ok(Tableau { top, bottom })
    }

    pub fn empty() -> Tableau {
        Tableau {
            top: Vec::new(),
            bottom: Vec::new(),
        }
    }

    /// Top row all `1`, bottom row all `2`.
    pub fn highest_weight(shape: Shape) -> Tableau {
        Tableau {
            top: vec![Letter::One; shape.lambda1()],
            bottom: vec![Letter::Two; shape.lambda2()],
        }
    }

    /// Parses `<top tokens> / <bottom tokens>`; the `/` part may be omitted
    /// when the bottom row is empty. No validity filtering is applied.
    pub fn parse(text: &str) -> Result<Tableau, ParseError> {
        fn row(part: &str) -> Result<Vec<Letter>, ParseError> {
            part.split_whitespace()
                .map(|tok| Letter::from_token(tok).ok_or_else(|| ParseError::BadToken(tok.to_string())))
                .collect()
        }
        let mut parts = text.split('/');
        let top = row(parts.next().unwrap_or(""))?;
        let bottom = match parts.next() {
            Some(p) => row(p)?,
            None => Vec::new(),
        };
        if parts.next().is_some() {
            return Err(ParseError::TooManyRows);
        }
        Tableau::from_rows(top, bottom)
    }

    /// Inverse of [`Tableau::parse`].
    pub fn render(&self) -> String {
        let row = |r: &[Letter]| r.iter().map(|l| l.token()).collect::<Vec<_>>().join(" ");
        if self.bottom.is_empty() {
            row(&self.top)
        } else {
            format!("{} / {}", row(&self.top), row(&self.bottom))
        }
    }

    pub fn shape(&self) -> Shape {
        Shape {
            lambda1: self.top.len(),
            lambda2: self.bottom.len(),
        }
    }

    pub fn top(&self) -> &[Letter] {
        &self.top
    }

    pub fn bottom(&self) -> &[Letter] {
        &self.bottom
    }

    pub fn get(&self, cell: Cell) -> Option<Letter> {
        match cell.row {
            Row::Top => self.top.get(cell.col).copied(),
            Row::Bottom => self.bottom.get(cell.col).copied(),
        }
    }

    /// Copy of `self` with the letter at `cell` replaced.
    ///
    /// Panics if `cell` is outside the shape.
    pub fn with_letter(&self, cell: Cell, letter: Letter) -> Tableau {
        let mut t = self.clone();
        match cell.row {
            Row::Top => t.top[cell.col] = letter,
            Row::Bottom => t.bottom[cell.col] = letter,
        }
        t
    }

    /// Every violated tableau condition, in row-major scan order.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (row, r) in [(Row::Top, &self.top), (Row::Bottom, &self.bottom)] {
            for k in 1..r.len() {
                if r[k - 1] > r[k] {
                    out.push(Violation::RowDecrease {
                        cells: [Cell { row, col: k - 1 }, Cell { row, col: k }],
                    });
                }
            }
        }
        for (col, (&t, &b)) in self.top.iter().zip(&self.bottom).enumerate() {
            if t >= b {
                out.push(Violation::ColumnNotIncreasing { col });
            }
            let pair = [t, b];
            if pair.contains(&Letter::One) && pair.contains(&Letter::OneBar) {
                out.push(Violation::OneAndOneBar { col });
            }
        }
        for col in 0..self.bottom.len().saturating_sub(1) {
            if self.top[col] == Letter::Two && self.bottom[col + 1] == Letter::TwoBar {
                out.push(Violation::TwoOverTwoBar { col });
            }
        }
        out
    }

    /// `Ok(())` if all four conditions hold, otherwise the full violation list.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// Cells in column-word order: bottom then top for each two-cell column
    /// left to right, then the one-cell columns left to right.
    pub fn reading_cells(&self) -> Vec<Cell> {
        let l2 = self.bottom.len();
        let mut cells = Vec::with_capacity(self.top.len() + l2);
        for col in 0..l2 {
            cells.push(Cell::bottom(col));
            cells.push(Cell::top(col));
        }
        cells.extend((l2..self.top.len()).map(Cell::top));
        cells
    }

    pub fn column_word(&self) -> Vec<Letter> {
        self.reading_cells()
            .into_iter()
            .map(|c| self.get(c).expect("reading cell inside shape"))
            .collect()
    }

    pub fn abcd(&self) -> AbcdStats {
        let count = |r: &[Letter], l: Letter| r.iter().filter(|&&x| x == l).count();
        let c = count(&self.top, Letter::Two);
        AbcdStats {
            a: count(&self.top, Letter::TwoBar),
            b: c + count(&self.bottom, Letter::OneBar),
            c,
            d: count(&self.bottom, Letter::TwoBar),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Tableau {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tableau::parse(s)
    }
}

/// All valid tableaux of `shape`, by brute force over every filling.
/// The result is sorted in canonical order.
pub fn enumerate_tableaux(shape: Shape) -> Vec<Tableau> {
    let n = shape.cells();
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        let letters: Vec<Letter> = digits.iter().map(|&d| Letter::ALL[d]).collect();
        let (top, bottom) = letters.split_at(shape.lambda1());
        let t = Tableau {
            top: top.to_vec(),
            bottom: bottom.to_vec(),
        };
        if t.is_valid() {
            out.push(t);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return out;
            }
            digits[i] += 1;
            if digits[i] < 4 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

// Column types of the generic tableau, left to right. A one-cell column
// is a truncated copy of one of these, keeping only its top letter.
const GENERIC_COLUMNS: [(Letter, Option<Letter>); 6] = [
    (Letter::One, Some(Letter::Two)),
    (Letter::One, Some(Letter::TwoBar)),
    (Letter::Two, Some(Letter::TwoBar)),
    (Letter::Two, Some(Letter::OneBar)),
    (Letter::TwoBar, Some(Letter::OneBar)),
    (Letter::OneBar, None),
];

/// Whether `t` has the column structure of the generic C₂ tableau: columns
/// taken in order from the generic list, the `2 over 2̄` column at most once,
/// and the bottom row truncated.
pub fn matches_generic_form(t: &Tableau) -> bool {
    let mut last = 0usize;
    let mut used_two_over_two_bar = false;
    for (col, &top) in t.top.iter().enumerate() {
        let bottom = t.bottom.get(col).copied();
        let candidates = GENERIC_COLUMNS
            .iter()
            .enumerate()
            .filter(|(_, (gt, gb))| *gt == top && (bottom.is_none() || *gb == bottom))
            .map(|(i, _)| i);
        // Smallest admissible index keeps the most room for later columns.
        let Some(idx) = candidates
            .filter(|&i| i >= last)
            .find(|&i| !(i == 2 && bottom.is_some() && used_two_over_two_bar))
        else {
            return false;
        };
        if idx == 2 && bottom.is_some() {
            used_two_over_two_bar = true;
        }
        // A truncated copy does not repeat the full column.
        last = if idx == 2 && bottom.is_none() { 3 } else { idx };
    }
    true
}
