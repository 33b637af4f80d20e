//! Oracles and property checks shared by the integration test targets.
//! Each check returns the number of cases examined and a list of
//! counterexample descriptions.
#![allow(dead_code)]

use c2crystal::operators::raising_cell;
use c2crystal::signature::{block_layout, edge_offset, EdgePosition, SignatureSymbol, SignatureWord};
use c2crystal::*;
use rand::Rng;

#[derive(Debug, Default)]
pub struct Tally {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Tally {
    pub fn fail(&mut self, msg: String) {
        if self.failures.len() < 20 {
            self.failures.push(msg);
        } else if self.failures.len() == 20 {
            self.failures.push("...".into());
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        for f in other.failures {
            self.fail(f);
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `(a+1)(b+1)(a+b+2)(a+2b+3)/6` with `a = l1 - l2`, `b = l2`.
pub fn weyl_dimension(l1: usize, l2: usize) -> usize {
    let (a, b) = (l1 - l2, l2);
    (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6
}

/// Every tableau of every shape with `lambda1 <= max_l1`.
pub fn universe(max_l1: usize) -> Vec<Tableau> {
    Shape::all_up_to(max_l1)
        .into_iter()
        .flat_map(|s| CrystalGraph::generate(s).vertices().to_vec())
        .collect()
}

/// Random tableau: random shape, then a random walk of lowering operators
/// from the highest weight.
pub fn random_tableau<R: Rng>(rng: &mut R, max_l1: usize) -> Tableau {
    let l1 = rng.gen_range(0..=max_l1);
    let l2 = rng.gen_range(0..=l1);
    let mut t = Tableau::highest_weight(Shape::new(l1, l2).unwrap());
    let steps = rng.gen_range(0..=4 * (l1 + l2) + 1);
    for _ in 0..steps {
        let c = if rng.gen_bool(0.5) { Color::One } else { Color::Two };
        if let Some(u) = apply_f(&t, c) {
            t = u;
        }
    }
    t
}

fn symbol_char(s: SignatureSymbol) -> char {
    match s {
        SignatureSymbol::Plus => '+',
        SignatureSymbol::Minus => '-',
        SignatureSymbol::Star => '*',
    }
}

/// All `(i, j)` such that `w[i..=j]` is `+ *^k -`.
fn redexes(w: &[char]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..w.len() {
        if w[i] != '+' {
            continue;
        }
        let mut j = i + 1;
        while j < w.len() && w[j] == '*' {
            j += 1;
        }
        if j < w.len() && w[j] == '-' {
            out.push((i, j));
        }
    }
    out
}

/// Literal rewriting `+ *^k - -> * *^k *`, choosing the redex with `pick`.
pub fn rewrite(word: &str, mut pick: impl FnMut(usize) -> usize) -> String {
    let mut w: Vec<char> = word.chars().collect();
    loop {
        let r = redexes(&w);
        if r.is_empty() {
            return w.into_iter().collect();
        }
        let (i, j) = r[pick(r.len())];
        w[i] = '*';
        w[j] = '*';
    }
}

fn parse_symbols(word: &str) -> Vec<SignatureSymbol> {
    word.chars()
        .map(|c| match c {
            '+' => SignatureSymbol::Plus,
            '-' => SignatureSymbol::Minus,
            _ => SignatureSymbol::Star,
        })
        .collect()
}

/// Random redex order, leftmost redex order and the library reduction agree.
pub fn check_confluence<R: Rng>(word: &str, rng: &mut R) -> Result<(), String> {
    let random = rewrite(word, |n| rng.gen_range(0..n));
    let leftmost = rewrite(word, |_| 0);
    let library: String = SignatureWord::from_symbols(parse_symbols(word))
        .reduce()
        .symbols()
        .iter()
        .map(|&s| symbol_char(s))
        .collect();
    if random == leftmost && leftmost == library {
        Ok(())
    } else {
        Err(format!(
            "{word}: random {random}, leftmost {leftmost}, library {library}"
        ))
    }
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> String {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| ['+', '-', '*'][rng.gen_range(0..3)]).collect()
}

/// ABCD counted straight from the rows.
pub fn stats_oracle(t: &Tableau) -> [usize; 4] {
    let count = |row: &[Letter], l: Letter| row.iter().filter(|&&x| x == l).count();
    let (top, bottom) = (t.top(), t.bottom());
    [
        count(top, Letter::TwoBar),
        count(top, Letter::Two) + count(bottom, Letter::OneBar),
        count(top, Letter::Two),
        count(bottom, Letter::TwoBar),
    ]
}

pub fn check_inversion(t: &Tableau, tally: &mut Tally) {
    for c in Color::BOTH {
        if let Some(u) = apply_e(t, c) {
            tally.cases += 1;
            if apply_f(&u, c).as_ref() != Some(t) {
                tally.fail(format!("f{c} e{c} {t} != {t}"));
            }
        }
        if let Some(u) = apply_f(t, c) {
            tally.cases += 1;
            if apply_e(&u, c).as_ref() != Some(t) {
                tally.fail(format!("e{c} f{c} {t} != {t}"));
            }
        }
    }
}

/// The four statistic-transition laws.
pub fn check_stat_transitions(t: &Tableau, tally: &mut Tally) {
    let [a, b, c, d] = stats_oracle(t);
    let diff = |s: [usize; 4]| s[2] as i64 - s[3] as i64;
    if let Some(u) = apply_e(t, Color::One) {
        tally.cases += 1;
        let s = stats_oracle(&u);
        if a < b {
            if s[0] != a || s[1] + 1 != b || diff(s) != c as i64 - d as i64 - 1 {
                tally.fail(format!("A<B law: {t} -> {u}"));
            }
        } else if s != [a + 1, b, c, d] {
            tally.fail(format!("A>=B law: {t} -> {u}"));
        }
    }
    if let Some(u) = apply_e(t, Color::Two) {
        tally.cases += 1;
        let s = stats_oracle(&u);
        if c < d {
            if s != [a, b, c, d - 1] {
                tally.fail(format!("C<D law: {t} -> {u}"));
            }
        } else if a == 0 || s != [a - 1, b + 1, c + 1, d] {
            tally.fail(format!("C>=D law: {t} -> {u}"));
        }
    }
}

pub fn check_dashed(t: &Tableau, tally: &mut Tally) {
    let [a, b, c, d] = stats_oracle(t);
    if a < b {
        tally.cases += 1;
        if apply_e(t, Color::One).is_none() {
            tally.fail(format!("A<B but e1 {t} = 0"));
        }
    }
    if c < d {
        tally.cases += 1;
        if apply_e(t, Color::Two).is_none() {
            tally.fail(format!("C<D but e2 {t} = 0"));
        }
    }
}

/// The cell `e_c` changes carries a `+` of the block named by `action_side`,
/// and that block has a nonzero size.
pub fn check_block_membership(t: &Tableau, tally: &mut Tally) {
    for c in Color::BOTH {
        let Some(side) = action_side(t, c) else { continue };
        tally.cases += 1;
        let cell = raising_cell(t, c).expect("action side implies e defined");
        if signature::block_of(t, c, cell) != Some(side) {
            tally.fail(format!("e{c} {t}: cell {cell} not in the {side} block"));
        }
        if block_layout(t, c).block(side).size == 0 {
            tally.fail(format!("e{c} {t}: acting block {side} is empty"));
        }
    }
}

/// Acting with `e_c` on block `x` moves that block's left edge one position
/// along its region and leaves the other three left edges in place.
pub fn check_edge_invariance(t: &Tableau, tally: &mut Tally) {
    const BLOCKS: [(Color, Side); 4] = [
        (Color::One, Side::Left),
        (Color::One, Side::Right),
        (Color::Two, Side::Left),
        (Color::Two, Side::Right),
    ];
    for c in Color::BOTH {
        let Some(x) = action_side(t, c) else { continue };
        let u = apply_e(t, c).unwrap();
        tally.cases += 1;
        for (c2, side) in BLOCKS {
            if (c2, side) == (c, x) {
                if edge_offset(&u, c, x) != edge_offset(t, c, x) + 1 {
                    tally.fail(format!("e{c} {x} on {t}: acting edge did not move by one"));
                }
            } else {
                let before: EdgePosition = block_layout(t, c2).block(side).left_edge;
                let after = block_layout(&u, c2).block(side).left_edge;
                if before != after {
                    tally.fail(format!("e{c} {x} on {t}: color {c2} {side} edge {before} -> {after}"));
                }
            }
        }
    }
}

/// Applying operators that act on other blocks does not change the entry
/// `e_c` acts on, as long as `e_c` still acts on the same side.
pub fn check_action_stability(t: &Tableau, depth: usize, tally: &mut Tally) {
    fn walk(u: &Tableau, c: Color, x: Side, cell: Cell, depth: usize, tally: &mut Tally) {
        if depth == 0 {
            return;
        }
        for c2 in Color::BOTH {
            let Some(s2) = action_side(u, c2) else { continue };
            if (c2, s2) == (c, x) {
                continue;
            }
            let v = apply_e(u, c2).unwrap();
            if action_side(&v, c) == Some(x) {
                tally.cases += 1;
                if raising_cell(&v, c) != Some(cell) {
                    tally.fail(format!("e{c} {x}: acts on {cell} before, elsewhere in {v}"));
                }
            }
            walk(&v, c, x, cell, depth - 1, tally);
        }
    }
    for c in Color::BOTH {
        let Some(x) = action_side(t, c) else { continue };
        walk(t, c, x, raising_cell(t, c).unwrap(), depth, tally);
    }
}

/// Every check that runs on a single tableau.
pub fn check_all_local(t: &Tableau, tally: &mut [Tally; 5]) {
    check_inversion(t, &mut tally[0]);
    check_stat_transitions(t, &mut tally[1]);
    check_dashed(t, &mut tally[2]);
    check_block_membership(t, &mut tally[3]);
    check_edge_invariance(t, &mut tally[4]);
}

/// Single-edge mutations of a graph document: every recoloring and every
/// deletion.
pub fn mutations(doc: &GraphDocument) -> Vec<(String, GraphDocument)> {
    let mut out = Vec::new();
    for k in 0..doc.edges.len() {
        let mut recolored = doc.clone();
        recolored.edges[k].color = recolored.edges[k].color.other();
        out.push((format!("recolor edge {k}"), recolored));
        let mut deleted = doc.clone();
        deleted.edges.remove(k);
        out.push((format!("delete edge {k}"), deleted));
    }
    out
}
