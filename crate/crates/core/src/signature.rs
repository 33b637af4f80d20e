//! Signatures of tableaux, the bracket reduction, and the left/right blocks
//! of `+` symbols.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::tableau::{Cell, Letter, Row, Tableau};

/// An edge color, i.e. the index of a Kashiwara operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u8")]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::One, Color::Two];

    pub fn index(self) -> usize {
        match self {
            Color::One => 0,
            Color::Two => 1,
        }
    }

    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }

    pub fn other(self) -> Color {
        match self {
            Color::One => Color::Two,
            Color::Two => Color::One,
        }
    }
}

impl TryFrom<u64> for Color {
    type Error = ParseError;

    fn try_from(v: u64) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Color::One),
            2 => Ok(Color::Two),
            _ => Err(ParseError::BadColor(v)),
        }
    }
}

impl From<Color> for u8 {
    fn from(c: Color) -> u8 {
        c.number()
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignatureSymbol {
    Plus,
    Minus,
    Star,
}

impl fmt::Display for SignatureSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignatureSymbol::Plus => "+",
            SignatureSymbol::Minus => "-",
            SignatureSymbol::Star => "*",
        })
    }
}

pub fn letter_signature(a: Letter, color: Color) -> SignatureSymbol {
    use Letter::*;
    use SignatureSymbol::*;
    match (color, a) {
        (Color::One, TwoBar | One) => Minus,
        (Color::One, OneBar | Two) => Plus,
        (Color::Two, Two) => Minus,
        (Color::Two, TwoBar) => Plus,
        (Color::Two, One | OneBar) => Star,
    }
}

/// A word over `{+, -, *}` where position `k` remembers the cell it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureWord {
    symbols: Vec<SignatureSymbol>,
    cells: Vec<Cell>,
}

impl SignatureWord {
    /// Word with arbitrary provenance; used when reducing words that do not
    /// come from a tableau. Positions are attributed to top-row cells `0..n`.
    pub fn from_symbols(symbols: Vec<SignatureSymbol>) -> SignatureWord {
        let cells = (0..symbols.len()).map(Cell::top).collect();
        SignatureWord { symbols, cells }
    }

    pub fn symbols(&self) -> &[SignatureSymbol] {
        &self.symbols
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn position_of(&self, cell: Cell) -> Option<usize> {
        self.cells.iter().position(|&c| c == cell)
    }

    /// Cancels every `+ *^k -` pair. Each `-` is matched with the nearest
    /// unmatched `+` to its left, which is the fixed point of the rewriting.
    pub fn reduce(&self) -> ReducedSignature {
        let mut symbols = self.symbols.clone();
        let mut open: Vec<usize> = Vec::new();
        for k in 0..symbols.len() {
            match symbols[k] {
                SignatureSymbol::Plus => open.push(k),
                SignatureSymbol::Minus => {
                    if let Some(p) = open.pop() {
                        symbols[p] = SignatureSymbol::Star;
                        symbols[k] = SignatureSymbol::Star;
                    }
                }
                SignatureSymbol::Star => {}
            }
        }
        ReducedSignature {
            symbols,
            cells: self.cells.clone(),
        }
    }
}

/// Reduction by literal rewriting: repeatedly picks one `+ *^k -` factor
/// uniformly at random and turns its `+` and `-` into `*`, until none is
/// left. The result does not depend on the choices.
pub fn reduce_by_rewriting<R: rand::Rng + ?Sized>(symbols: &[SignatureSymbol], rng: &mut R) -> Vec<SignatureSymbol> {
    use SignatureSymbol::*;
    let mut w = symbols.to_vec();
    loop {
        let mut redexes = Vec::new();
        let mut last_plus = None;
        for (k, &s) in w.iter().enumerate() {
            match s {
                Plus => last_plus = Some(k),
                Minus => {
                    if let Some(p) = last_plus.take() {
                        redexes.push((p, k));
                    }
                }
                Star => {}
            }
        }
        if redexes.is_empty() {
            return w;
        }
        let (p, k) = redexes[rng.gen_range(0..redexes.len())];
        w[p] = Star;
        w[k] = Star;
    }
}

impl fmt::Display for SignatureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|s| write!(f, "{s}"))
    }
}

/// Reduced form of a signature word. Cancelled symbols become `*` and keep
/// their provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSignature {
    symbols: Vec<SignatureSymbol>,
    cells: Vec<Cell>,
}

impl ReducedSignature {
    pub fn symbols(&self) -> &[SignatureSymbol] {
        &self.symbols
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn count(&self, sym: SignatureSymbol) -> usize {
        self.symbols.iter().filter(|&&s| s == sym).count()
    }

    pub fn leftmost_plus(&self) -> Option<usize> {
        self.symbols.iter().position(|&s| s == SignatureSymbol::Plus)
    }

    pub fn rightmost_minus(&self) -> Option<usize> {
        self.symbols.iter().rposition(|&s| s == SignatureSymbol::Minus)
    }

    /// Cell whose symbol is the leftmost surviving `+`.
    pub fn raising_cell(&self) -> Option<Cell> {
        self.leftmost_plus().map(|k| self.cells[k])
    }

    /// Cell whose symbol is the rightmost surviving `-`.
    pub fn lowering_cell(&self) -> Option<Cell> {
        self.rightmost_minus().map(|k| self.cells[k])
    }
}

impl fmt::Display for ReducedSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|s| write!(f, "{s}"))
    }
}

pub fn signature(t: &Tableau, color: Color) -> SignatureWord {
    let cells = t.reading_cells();
    let symbols = cells
        .iter()
        .map(|&c| letter_signature(t.get(c).expect("reading cell inside shape"), color))
        .collect();
    SignatureWord { symbols, cells }
}

pub fn reduced_signature(t: &Tableau, color: Color) -> ReducedSignature {
    signature(t, color).reduce()
}

/// Number of `+` in the reduced signature.
pub fn epsilon(t: &Tableau, color: Color) -> usize {
    reduced_signature(t, color).count(SignatureSymbol::Plus)
}

/// Number of `-` in the reduced signature.
pub fn phi(t: &Tableau, color: Color) -> usize {
    reduced_signature(t, color).count(SignatureSymbol::Minus)
}

/// Which of the two blocks of `+` symbols an entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Block (if any) that the `+` contributed by `cell` belongs to.
///
/// Color 1: left = `2` in the top row and `1̄` in the bottom row, right =
/// `1̄` in the top row. Color 2: left = `2̄` in the bottom row, right = `2̄`
/// in the top row.
pub fn block_of(t: &Tableau, color: Color, cell: Cell) -> Option<Side> {
    use Letter::*;
    let letter = t.get(cell)?;
    match (color, cell.row, letter) {
        (Color::One, Row::Top, Two) | (Color::One, Row::Bottom, OneBar) => Some(Side::Left),
        (Color::One, Row::Top, OneBar) => Some(Side::Right),
        (Color::Two, Row::Bottom, TwoBar) => Some(Side::Left),
        (Color::Two, Row::Top, TwoBar) => Some(Side::Right),
        _ => None,
    }
}

/// Boundary position in a signature word: just before symbol `k`, or the
/// formal right end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgePosition {
    Before(usize),
    RightEnd,
}

impl EdgePosition {
    /// Boundary index, with the right end mapped to the word length.
    pub fn boundary(self, len: usize) -> usize {
        match self {
            EdgePosition::Before(k) => k,
            EdgePosition::RightEnd => len,
        }
    }
}

impl fmt::Display for EdgePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgePosition::Before(k) => write!(f, "{k}"),
            EdgePosition::RightEnd => f.write_str("end"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub size: usize,
    pub left_edge: EdgePosition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BlockLayout {
    pub color: Color,
    pub left: Block,
    pub right: Block,
}

impl BlockLayout {
    pub fn block(&self, side: Side) -> Block {
        match side {
            Side::Left => self.left,
            Side::Right => self.right,
        }
    }
}

pub fn block_layout(t: &Tableau, color: Color) -> BlockLayout {
    use Letter::*;
    let word = signature(t, color);
    let edge_at = |cell: Option<Cell>| match cell {
        Some(c) => EdgePosition::Before(word.position_of(c).expect("cell in word")),
        None => EdgePosition::RightEnd,
    };
    let leftmost_top = |pred: fn(Letter) -> bool| t.top().iter().position(|&l| pred(l)).map(Cell::top);
    let leftmost_bottom = |pred: fn(Letter) -> bool| t.bottom().iter().position(|&l| pred(l)).map(Cell::bottom);

    let block = |side: Side| {
        let members: Vec<usize> = (0..word.len())
            .filter(|&k| {
                word.symbols()[k] == SignatureSymbol::Plus && block_of(t, color, word.cells()[k]) == Some(side)
            })
            .collect();
        if let Some(&first) = members.first() {
            return Block {
                size: members.len(),
                left_edge: EdgePosition::Before(first),
            };
        }
        let fallback = match (color, side) {
            (Color::One, Side::Left) => leftmost_top(|l| matches!(l, TwoBar | OneBar)),
            (Color::One, Side::Right) => None,
            (Color::Two, Side::Left) => leftmost_bottom(|l| l == OneBar),
            (Color::Two, Side::Right) => leftmost_top(|l| l == OneBar),
        };
        Block {
            size: 0,
            left_edge: edge_at(fallback),
        }
    };
    BlockLayout {
        color,
        left: block(Side::Left),
        right: block(Side::Right),
    }
}

/// Whether a cell lies in the region a block lives in: both rows for the
/// color 1 left block, the top row for the color 1 right block, the bottom
/// row for the color 2 left block and the top row for the color 2 right block.
fn in_block_region(color: Color, side: Side, cell: Cell) -> bool {
    match (color, side) {
        (Color::One, Side::Left) => true,
        (Color::Two, Side::Left) => cell.row == Row::Bottom,
        (_, Side::Right) => cell.row == Row::Top,
    }
}

/// Left edge of a block measured along its own region: the number of
/// signature positions before the edge whose cells lie in that region.
///
/// Acting on a block moves this offset by exactly one. Raw boundary indices
/// do not, since the color 2 signature interleaves both rows.
pub fn edge_offset(t: &Tableau, color: Color, side: Side) -> usize {
    let word = signature(t, color);
    let boundary = block_layout(t, color).block(side).left_edge.boundary(word.len());
    word.cells()[..boundary]
        .iter()
        .filter(|&&c| in_block_region(color, side, c))
        .count()
}
