//! Kashiwara raising and lowering operators on tableaux.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::signature::{block_layout, reduced_signature, Color, Side};
use crate::tableau::{Cell, Letter, Tableau};

fn raise_letter(a: Letter, color: Color) -> Option<Letter> {
    use Letter::*;
    match (color, a) {
        (Color::One, Two) => Some(One),
        (Color::One, OneBar) => Some(TwoBar),
        (Color::Two, TwoBar) => Some(Two),
        _ => None,
    }
}

fn lower_letter(a: Letter, color: Color) -> Option<Letter> {
    use Letter::*;
    match (color, a) {
        (Color::One, One) => Some(Two),
        (Color::One, TwoBar) => Some(OneBar),
        (Color::Two, Two) => Some(TwoBar),
        _ => None,
    }
}

/// Cell that `e_color` changes, or `None` when `e_color t = 0`.
pub fn raising_cell(t: &Tableau, color: Color) -> Option<Cell> {
    reduced_signature(t, color).raising_cell()
}

/// Cell that `f_color` changes, or `None` when `f_color t = 0`.
pub fn lowering_cell(t: &Tableau, color: Color) -> Option<Cell> {
    reduced_signature(t, color).lowering_cell()
}

/// `e_color t`; `None` is the formal zero.
pub fn apply_e(t: &Tableau, color: Color) -> Option<Tableau> {
    let cell = raising_cell(t, color)?;
    let letter = t.get(cell).expect("signature cell inside shape");
    let raised = raise_letter(letter, color).expect("a surviving + always comes from a raisable letter");
    let out = t.with_letter(cell, raised);
    debug_assert!(out.is_valid(), "e{color} of {t} produced invalid {out}");
    Some(out)
}

/// `f_color t`; `None` is the formal zero.
pub fn apply_f(t: &Tableau, color: Color) -> Option<Tableau> {
    let cell = lowering_cell(t, color)?;
    let letter = t.get(cell).expect("signature cell inside shape");
    let lowered = lower_letter(letter, color).expect("a surviving - always comes from a lowerable letter");
    let out = t.with_letter(cell, lowered);
    debug_assert!(out.is_valid(), "f{color} of {t} produced invalid {out}");
    Some(out)
}

/// Block on which `e_color` acts, read off the ABCD statistics: for color 1
/// left iff `A < B`, for color 2 left iff `C < D`. `None` when `e_color t = 0`.
pub fn action_side(t: &Tableau, color: Color) -> Option<Side> {
    raising_cell(t, color)?;
    let s = t.abcd();
    let left = match color {
        Color::One => s.a < s.b,
        Color::Two => s.c < s.d,
    };
    Some(if left { Side::Left } else { Side::Right })
}

/// Size of the block `e_color` acts on, from the block layout.
pub fn acting_block_size(t: &Tableau, color: Color) -> Option<usize> {
    action_side(t, color).map(|side| block_layout(t, color).block(side).size)
}

/// A single raising or lowering operator, written `e1`, `e2`, `f1`, `f2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    Raise(Color),
    Lower(Color),
}

impl Operator {
    pub fn apply(self, t: &Tableau) -> Option<Tableau> {
        match self {
            Operator::Raise(c) => apply_e(t, c),
            Operator::Lower(c) => apply_f(t, c),
        }
    }
}

impl FromStr for Operator {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "e1" => Ok(Operator::Raise(Color::One)),
            "e2" => Ok(Operator::Raise(Color::Two)),
            "f1" => Ok(Operator::Lower(Color::One)),
            "f2" => Ok(Operator::Lower(Color::Two)),
            _ => Err(ParseError::BadOperator(s.to_string())),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Raise(c) => write!(f, "e{c}"),
            Operator::Lower(c) => write!(f, "f{c}"),
        }
    }
}
