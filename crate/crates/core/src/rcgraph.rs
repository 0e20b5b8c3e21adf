//! RC-graphs as finite sets of crossings.
//!
//! Tile `(i, k)` sits in column `i` and row `k`. Columns decrease from left to
//! right starting at `n`, rows decrease from top to bottom starting at `n`.
//! Strand `j` enters the grid from the west edge of tile `(n, j)`. A crossing
//! tile passes strands straight through (west to east, south to north); any
//! other tile is a bump (west to north, south to east). Strand `j` leaves
//! through the top edge of column `w(j)`.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::{Partition, Tableau};

/// Environment variable capping the label window width during auto-extension.
pub const MAX_WINDOW_ENV: &str = "RCG_MAX_WINDOW";
pub const DEFAULT_MAX_WINDOW: i64 = 64;

pub fn max_window() -> i64 {
    std::env::var(MAX_WINDOW_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&w: &i64| w > 0)
        .unwrap_or(DEFAULT_MAX_WINDOW)
}

/// A crossing at column `col`, row `row`. Orders by row ascending, then column
/// descending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub col: i64,
    pub row: i64,
}

impl Crossing {
    pub const fn new(col: i64, row: i64) -> Self {
        Crossing { col, row }
    }
}

impl Ord for Crossing {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.row
            .cmp(&other.row)
            .then_with(|| other.col.cmp(&self.col))
    }
}

impl PartialOrd for Crossing {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl From<(i64, i64)> for Crossing {
    fn from((col, row): (i64, i64)) -> Self {
        Crossing { col, row }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RcGraph {
    n: i64,
    crossings: BTreeSet<Crossing>,
}

/// Bottom-left corner of a label window; the window always reaches up to
/// column `n` and row `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub col_low: i64,
    pub row_low: i64,
}

/// Strand labels entering every tile of a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelGrid {
    n: i64,
    window: Window,
    width: usize,
    from_west: Vec<i64>,
    from_south: Vec<i64>,
    crossing: Vec<bool>,
}

impl LabelGrid {
    pub fn window(&self) -> Window {
        self.window
    }

    pub fn contains(&self, col: i64, row: i64) -> bool {
        col >= self.window.col_low && col <= self.n && row >= self.window.row_low && row <= self.n
    }

    fn index(&self, col: i64, row: i64) -> usize {
        assert!(self.contains(col, row), "tile ({col},{row}) outside window");
        (row - self.window.row_low) as usize * self.width + (self.n - col) as usize
    }

    pub fn from_west(&self, col: i64, row: i64) -> i64 {
        self.from_west[self.index(col, row)]
    }

    pub fn from_south(&self, col: i64, row: i64) -> i64 {
        self.from_south[self.index(col, row)]
    }

    pub fn is_crossing(&self, col: i64, row: i64) -> bool {
        self.crossing[self.index(col, row)]
    }

    /// Label leaving through the north edge of the tile.
    pub fn north_out(&self, col: i64, row: i64) -> i64 {
        let idx = self.index(col, row);
        if self.crossing[idx] {
            self.from_south[idx]
        } else {
            self.from_west[idx]
        }
    }

    /// Label leaving through the east edge of the tile.
    pub fn east_out(&self, col: i64, row: i64) -> i64 {
        let idx = self.index(col, row);
        if self.crossing[idx] {
            self.from_west[idx]
        } else {
            self.from_south[idx]
        }
    }

    /// Open tile: a bump whose west strand is positive and south strand is not.
    pub fn is_open(&self, col: i64, row: i64) -> bool {
        let idx = self.index(col, row);
        !self.crossing[idx] && self.from_west[idx] > 0 && self.from_south[idx] <= 0
    }

    /// The permutation read off the top edge. Only meaningful when the east
    /// boundary carries the crossing-free staircase, which construction checks.
    pub fn top_permutation(&self) -> Permutation {
        let map: BTreeMap<i64, i64> = (self.window.col_low..=self.n)
            .map(|col| (self.north_out(col, self.n), col))
            .collect();
        Permutation::make(self.n, &map).expect("strand labels form a bijection")
    }

    /// Crossings in the window whose two strands carry labels `a` and `b`.
    pub fn crossings_of(&self, a: i64, b: i64) -> Vec<Crossing> {
        let mut out = Vec::new();
        for row in self.window.row_low..=self.n {
            for col in self.window.col_low..=self.n {
                let idx = self.index(col, row);
                if self.crossing[idx] {
                    let (w, s) = (self.from_west[idx], self.from_south[idx]);
                    if (w == a && s == b) || (w == b && s == a) {
                        out.push(Crossing::new(col, row));
                    }
                }
            }
        }
        out
    }
}

pub(crate) fn compute_labels(
    n: i64,
    crossings: &BTreeSet<Crossing>,
    window: Window,
) -> Result<LabelGrid> {
    let Window { col_low, row_low } = window;
    if col_low > n || row_low > n {
        return Err(Error::WindowTooSmall(format!(
            "window corner ({col_low},{row_low}) beyond n = {n}"
        )));
    }
    if let Some(c) = crossings
        .iter()
        .find(|c| c.col <= col_low || c.row <= row_low || c.col > n || c.row > n)
    {
        return Err(Error::WindowTooSmall(format!(
            "crossing ({},{}) not strictly inside the window",
            c.col, c.row
        )));
    }
    let width = (n - col_low + 1) as usize;
    let height = (n - row_low + 1) as usize;
    let mut grid = LabelGrid {
        n,
        window,
        width,
        from_west: vec![0; width * height],
        from_south: vec![0; width * height],
        crossing: vec![false; width * height],
    };
    for c in crossings {
        let idx = grid.index(c.col, c.row);
        grid.crossing[idx] = true;
    }
    for row in row_low..=n {
        for col in (col_low..=n).rev() {
            let west = if col == n {
                row
            } else {
                grid.east_out(col + 1, row)
            };
            let south = if row == row_low {
                col + row - 1 - n
            } else {
                grid.north_out(col, row - 1)
            };
            let idx = grid.index(col, row);
            grid.from_west[idx] = west;
            grid.from_south[idx] = south;
        }
    }
    for row in row_low..=n {
        let expected = col_low - 1 + row - n;
        if grid.east_out(col_low, row) != expected {
            return Err(Error::WindowTooSmall(format!(
                "displaced strand {} leaves the east boundary at row {row}",
                grid.east_out(col_low, row)
            )));
        }
    }
    Ok(grid)
}

/// Labels over an automatically sized window, widened until the east boundary
/// is crossing-free staircase or the width cap is hit.
pub(crate) fn auto_labels(n: i64, crossings: &BTreeSet<Crossing>) -> Result<LabelGrid> {
    let min_col = crossings.iter().map(|c| c.col).min().unwrap_or(n);
    let mut col_low = min_col.min(1) - 1;
    let cap = max_window();
    loop {
        match compute_labels(
            n,
            crossings,
            Window {
                col_low,
                row_low: 0,
            },
        ) {
            Ok(grid) => return Ok(grid),
            Err(Error::WindowTooSmall(msg)) => {
                let width = n - col_low + 1;
                if width >= cap {
                    return Err(Error::WindowTooSmall(format!(
                        "{msg}; width cap {cap} reached (set {MAX_WINDOW_ENV})"
                    )));
                }
                col_low = n + 1 - (2 * width).min(cap);
            }
            Err(e) => return Err(e),
        }
    }
}

/// A forward ladder move of size `size`, relocating `from` to `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LadderMove {
    pub from: Crossing,
    pub to: Crossing,
    pub size: i64,
}

impl RcGraph {
    /// Builds a crossing set, checking only that every crossing lies in
    /// columns `<= n` and rows `1..=n`.
    pub fn new<I, C>(n: i64, crossings: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Crossing>,
    {
        let crossings: BTreeSet<Crossing> = crossings.into_iter().map(Into::into).collect();
        if let Some(c) = crossings
            .iter()
            .find(|c| c.col > n || c.row < 1 || c.row > n)
        {
            return Err(Error::CrossingOutOfRange {
                col: c.col,
                row: c.row,
                n,
            });
        }
        Ok(RcGraph { n, crossings })
    }

    /// Like [`RcGraph::new`], additionally requiring reducedness and the class
    /// condition.
    pub fn checked<I, C>(n: i64, crossings: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Crossing>,
    {
        let r = Self::new(n, crossings)?;
        r.validate()?;
        Ok(r)
    }

    pub fn empty(n: i64) -> Self {
        RcGraph {
            n,
            crossings: BTreeSet::new(),
        }
    }

    pub(crate) fn from_set(n: i64, crossings: BTreeSet<Crossing>) -> Self {
        RcGraph { n, crossings }
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn crossings(&self) -> &BTreeSet<Crossing> {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn contains(&self, col: i64, row: i64) -> bool {
        self.crossings.contains(&Crossing::new(col, row))
    }

    pub fn validate(&self) -> Result<()> {
        let w = self.trace_checked()?;
        if w.length() != self.len() {
            return Err(Error::NotReduced {
                crossings: self.len(),
                length: w.length(),
            });
        }
        w.check_class()
    }

    pub fn is_reduced(&self) -> bool {
        self.trace_checked()
            .map(|w| w.length() == self.len())
            .unwrap_or(false)
    }

    /// Strand labels over an explicit window.
    pub fn labels(&self, window: Window) -> Result<LabelGrid> {
        compute_labels(self.n, &self.crossings, window)
    }

    /// Strand labels over an automatically sized window.
    pub fn auto_labels(&self) -> Result<LabelGrid> {
        auto_labels(self.n, &self.crossings)
    }

    pub fn trace_checked(&self) -> Result<Permutation> {
        Ok(self.auto_labels()?.top_permutation())
    }

    /// The permutation carrying each strand's start row to its end column.
    ///
    /// Panics if the strands cannot be followed within the window cap.
    pub fn trace(&self) -> Permutation {
        self.trace_checked().expect("trace window")
    }

    /// Letters `i + k - n - 1`, rows top to bottom, each row right to left.
    pub fn reading_word(&self) -> Vec<i64> {
        // canonical order reversed: rows descending, columns ascending
        self.crossings
            .iter()
            .rev()
            .map(|c| c.col + c.row - self.n - 1)
            .collect()
    }

    /// Row counts `(e_1, ..., e_n)` of `x^R`.
    pub fn monomial(&self) -> Vec<u32> {
        let mut e = vec![0; self.n.max(0) as usize];
        for c in &self.crossings {
            e[(c.row - 1) as usize] += 1;
        }
        e
    }

    /// All forward ladder moves.
    pub fn ladder_moves(&self) -> Vec<(RcGraph, LadderMove)> {
        let mut out = Vec::new();
        for &bottom in &self.crossings {
            let i = bottom.col;
            if self.contains(i - 1, bottom.row) {
                continue;
            }
            let mut k = bottom.row + 1;
            while k <= self.n {
                match (self.contains(i, k), self.contains(i - 1, k)) {
                    (true, true) => k += 1,
                    (false, false) => {
                        let mv = LadderMove {
                            from: bottom,
                            to: Crossing::new(i - 1, k),
                            size: k - bottom.row,
                        };
                        let mut crossings = self.crossings.clone();
                        crossings.remove(&mv.from);
                        crossings.insert(mv.to);
                        out.push((RcGraph::from_set(self.n, crossings), mv));
                        break;
                    }
                    _ => break,
                }
            }
        }
        out
    }

    /// Whether each row's crossings occupy columns `n, n-1, ...` contiguously.
    pub fn is_left_justified(&self) -> bool {
        self.crossings
            .iter()
            .all(|c| c.col == self.n || self.contains(c.col + 1, c.row))
    }

    /// The left-justified crossing set with the given row counts.
    pub fn left_justified(n: i64, counts: &[u32]) -> Self {
        let crossings = counts
            .iter()
            .enumerate()
            .flat_map(|(r, &c)| (0..c as i64).map(move |t| Crossing::new(n - t, r as i64 + 1)))
            .collect();
        RcGraph::from_set(n, crossings)
    }

    /// The top rc-graph `R_w`: the unique rc-graph of `w` whose rows are left
    /// justified.
    ///
    /// Row `k` of a left-justified graph contributes the cycle
    /// `s_{k-c_k} ... s_{k-1}`, sending `k` to `k - c_k` and fixing everything
    /// above `k`, so the row counts are forced by peeling rows from the top.
    pub fn top(w: &Permutation) -> Result<Self> {
        w.check_class()?;
        let n = w.n();
        let mut rest = w.clone();
        let mut counts = vec![0u32; n.max(0) as usize];
        for k in (1..=n).rev() {
            let c = k - rest.apply(k);
            debug_assert!(c >= 0);
            counts[(k - 1) as usize] = c as u32;
            // rest <- P_k^{-1} rest, P_k = s_{k-c} ... s_{k-1}
            for letter in k - c..k {
                rest = Permutation::simple(letter, n)?.compose(&rest);
            }
        }
        if !rest.is_identity() {
            return Err(Error::Invariant(format!(
                "peeling {w} left {rest} below row 1"
            )));
        }
        let top = RcGraph::left_justified(n, &counts);
        let length = w.length();
        if top.len() != length {
            return Err(Error::NotReduced {
                crossings: top.len(),
                length,
            });
        }
        Ok(top)
    }

    /// All rc-graphs of `w`, by backtracking over reduced row factorizations.
    pub fn enumerate(w: &Permutation) -> Result<BTreeSet<RcGraph>> {
        w.check_class()?;
        let n = w.n();
        let mut out = BTreeSet::new();
        let mut chosen: Vec<Crossing> = Vec::new();
        enumerate_rows(n, n, &w.inverse(), i64::MIN, &mut chosen, &mut out);
        Ok(out)
    }

    /// All rc-graphs of `w`, as the closure of the top rc-graph under forward
    /// ladder moves.
    pub fn enumerate_by_ladder_moves(w: &Permutation) -> Result<BTreeSet<RcGraph>> {
        let top = Self::top(w)?;
        let mut seen = HashSet::from([top.clone()]);
        let mut queue = VecDeque::from([top]);
        while let Some(r) = queue.pop_front() {
            for (next, _) in r.ladder_moves() {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// `R(μ) = {(i, k) : 1 <= k <= n, n >= i >= n - μ_k + 1}`.
    pub fn of_partition(mu: &Partition, n: i64) -> Result<Self> {
        mu.check_rows(n)?;
        Ok(RcGraph::left_justified(n, mu.parts()))
    }

    /// The rc-graph of a tableau. Box `(r, c)` with entry `e` is the crossing
    /// `(n - c + 1, r)` of `R(μ)` after `e - r` size-one ladder moves, which
    /// lands it at `(n - c + 1 - (e - r), e)`.
    pub fn of_tableau(y: &Tableau, n: i64) -> Result<Self> {
        y.shape().check_rows(n)?;
        if y.n() > n && y.rows().iter().flatten().any(|&e| e as i64 > n) {
            return Err(Error::InvalidTableau(format!("entries exceed n = {n}")));
        }
        let crossings = y
            .rows()
            .iter()
            .enumerate()
            .flat_map(|(r0, row)| {
                row.iter().enumerate().map(move |(c0, &e)| {
                    let (r, c, e) = (r0 as i64 + 1, c0 as i64 + 1, e as i64);
                    Crossing::new(n - c + 1 - (e - r), e)
                })
            })
            .collect();
        Ok(RcGraph::from_set(n, crossings))
    }

    /// Inverse of [`RcGraph::of_tableau`] for rc-graphs of some `w(μ)`.
    pub fn tableau_of(&self) -> Result<Tableau> {
        let n = self.n;
        let w = self.trace_checked()?;
        let top = RcGraph::top(&w).map_err(|e| Error::NotGrassmannian(e.to_string()))?;
        let mu = Partition::new(top.monomial().into_iter().filter(|&c| c > 0).collect())
            .ok()
            .filter(|mu| top == RcGraph::left_justified(n, mu.parts()))
            .ok_or_else(|| Error::NotGrassmannian(format!("{w} is not w(mu)")))?;
        // Entries strictly increase along each diagonal c - r, and crossing
        // (i, k) of a box on diagonal d satisfies d = n + 1 - k - i.
        let mut by_diag: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for c in &self.crossings {
            by_diag
                .entry(n + 1 - c.row - c.col)
                .or_default()
                .push(c.row);
        }
        let mut rows: Vec<Vec<u32>> = mu.parts().iter().map(|&l| vec![0; l as usize]).collect();
        for (r0, row) in rows.iter_mut().enumerate() {
            for (c0, cell) in row.iter_mut().enumerate() {
                let d = c0 as i64 - r0 as i64;
                let entries = by_diag
                    .get_mut(&d)
                    .filter(|v| !v.is_empty())
                    .ok_or_else(|| {
                        Error::NotGrassmannian(format!(
                            "no crossing for box ({},{})",
                            r0 + 1,
                            c0 + 1
                        ))
                    })?;
                entries.sort_unstable_by(|a, b| b.cmp(a));
                *cell = entries.pop().expect("nonempty") as u32;
            }
        }
        if by_diag.values().any(|v| !v.is_empty()) {
            return Err(Error::NotGrassmannian("unmatched crossings".into()));
        }
        let y = Tableau::new(n, rows)?;
        if RcGraph::of_tableau(&y, n)? != *self {
            return Err(Error::NotGrassmannian(
                "diagonal assignment mismatch".into(),
            ));
        }
        Ok(y)
    }

    /// ASCII picture: column labels `n..c_low` on top, then one line per row
    /// `n..1` with `+` for a crossing and `.` for a bump.
    pub fn render(&self) -> String {
        let n = self.n;
        let col_low = self
            .crossings
            .iter()
            .map(|c| c.col)
            .min()
            .unwrap_or(n)
            .min(n);
        let cols: Vec<i64> = (col_low..=n).rev().collect();
        let cell = cols.iter().map(|c| c.to_string().len()).max().unwrap_or(1) + 1;
        let label = (1..=n.max(1))
            .map(|k| k.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = format!("{:>label$}", "");
        for c in &cols {
            out.push_str(&format!("{c:>cell$}"));
        }
        out.push('\n');
        for k in (1..=n).rev() {
            out.push_str(&format!("{k:>label$}"));
            for &c in &cols {
                let glyph = if self.contains(c, k) { "+" } else { "." };
                out.push_str(&format!("{glyph:>cell$}"));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`RcGraph::render`].
    pub fn parse_render(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidTableau(format!("render parse: {msg}"));
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let cols: Vec<i64> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("column label")))
            .collect::<Result<_>>()?;
        let n = *cols.first().ok_or_else(|| bad("no columns"))?;
        let mut crossings = Vec::new();
        for line in lines {
            let mut tokens = line.split_whitespace();
            let row: i64 = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| bad("row label"))?;
            let glyphs: Vec<&str> = tokens.collect();
            if glyphs.len() != cols.len() {
                return Err(bad("row width"));
            }
            for (g, &c) in glyphs.iter().zip(&cols) {
                match *g {
                    "+" => crossings.push(Crossing::new(c, row)),
                    "." => {}
                    _ => return Err(bad("glyph")),
                }
            }
        }
        RcGraph::new(n, crossings)
    }
}

fn enumerate_rows(
    n: i64,
    row: i64,
    inv: &Permutation,
    min_letter: i64,
    chosen: &mut Vec<Crossing>,
    out: &mut BTreeSet<RcGraph>,
) {
    // `inv` is the inverse of what remains to be factored; peeling s_a off the
    // left of the remainder swaps positions a, a+1 of `inv`.
    if row == 0 {
        if inv.is_identity() {
            out.insert(RcGraph::from_set(n, chosen.iter().copied().collect()));
        }
        return;
    }
    // Close the current row: the rows below only reach letters <= row - 2.
    if (row..=n).all(|j| inv.apply(j) == j) {
        enumerate_rows(n, row - 1, inv, i64::MIN, chosen, out);
    }
    let start = min_letter.max(inv.low() - 1);
    for a in start..row {
        if inv.apply(a) > inv.apply(a + 1) {
            let next = inv.right_transposition(a, a + 1);
            chosen.push(Crossing::new(a + n + 1 - row, row));
            enumerate_rows(n, row, &next, a + 1, chosen, out);
            chosen.pop();
        }
    }
}

impl fmt::Debug for RcGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<(i64, i64)> = self.crossings.iter().map(|c| (c.col, c.row)).collect();
        write!(f, "RcGraph(n={}, {:?})", self.n, cs)
    }
}

impl fmt::Display for RcGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self
            .crossings
            .iter()
            .map(|c| format!("({},{})", c.col, c.row))
            .collect();
        write!(f, "{{{}}}", cs.join(","))
    }
}

/// Evaluates a word in simple transpositions, leftmost letter outermost.
pub fn word_permutation(word: &[i64], n: i64) -> Result<Permutation> {
    word.iter().try_fold(Permutation::identity(n), |acc, &j| {
        Ok(acc.compose(&Permutation::simple(j, n)?))
    })
}

/// All class rc-graphs of `n` whose permutations live in `[low..=n]` and have
/// at most `max_crossings` crossings.
pub fn class_rcgraphs(n: i64, low: i64, max_crossings: usize) -> Vec<RcGraph> {
    crate::perm::class_permutations(n, low, max_crossings)
        .iter()
        .flat_map(|w| RcGraph::enumerate(w).expect("class permutation"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64, cs: &[(i64, i64)]) -> RcGraph {
        RcGraph::new(n, cs.iter().copied()).unwrap()
    }

    fn perm(n: i64, pairs: &[(i64, i64)]) -> Permutation {
        Permutation::make(n, &pairs.iter().copied().collect()).unwrap()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    pub(crate) fn r1() -> RcGraph {
        g(2, &[(2, 1), (1, 1), (-1, 2)])
    }
    fn r2() -> RcGraph {
        g(3, &[(3, 1), (2, 3), (1, 2)])
    }
    fn r3() -> RcGraph {
        g(3, &[(3, 2), (2, 2), (1, 2), (2, 3)])
    }

    #[test]
    fn traces_of_example_graphs() {
        assert_eq!(
            r1().trace(),
            perm(2, &[(2, 2), (1, -2), (0, 1), (-1, 0), (-2, -1)])
        );
        assert_eq!(
            r2().trace(),
            perm(3, &[(3, 3), (2, 1), (1, -1), (0, 2), (-1, 0)])
        );
        assert_eq!(
            r3().trace(),
            perm(3, &[(3, 3), (2, -1), (1, 1), (0, 2), (-1, 0)])
        );
        assert!(RcGraph::empty(3).trace().is_identity());
        for r in [r1(), r2(), r3()] {
            r.validate().unwrap();
        }
    }

    #[test]
    fn crossing_range_checked() {
        assert!(RcGraph::new(2, [(3, 1)]).is_err());
        assert!(RcGraph::new(2, [(1, 0)]).is_err());
        assert!(RcGraph::new(2, [(1, 3)]).is_err());
        // two strands crossing twice
        let doubled = g(2, &[(2, 1), (1, 2)]);
        assert!(matches!(doubled.validate(), Err(Error::NotReduced { .. })));
    }

    #[test]
    fn staircase_labels_on_empty_grid() {
        let n = 3;
        let grid = RcGraph::empty(n)
            .labels(Window {
                col_low: -2,
                row_low: -2,
            })
            .unwrap();
        for k in -2..=n {
            for i in -2..=n {
                assert_eq!(grid.from_west(i, k), i + k - n);
                assert_eq!(grid.from_south(i, k), i + k - 1 - n);
            }
        }
    }

    #[test]
    fn labels_of_worked_example_and_west_seeding() {
        let r = g(4, &[(4, 1), (4, 2), (3, 2), (2, 2), (1, 4)]);
        let grid = r.auto_labels().unwrap();
        assert_eq!(grid.from_west(3, 1), 1);
        assert_eq!(grid.from_south(3, 1), -1);
        let grid = r1().auto_labels().unwrap();
        assert_eq!(grid.from_west(2, 1), 1);
    }

    #[test]
    fn labels_reject_small_windows() {
        let err = r1().labels(Window {
            col_low: -1,
            row_low: 0,
        });
        assert!(matches!(err, Err(Error::WindowTooSmall(_))));
    }

    #[test]
    fn window_invariance() {
        for r in [r1(), r2(), r3()] {
            let small = r.auto_labels().unwrap();
            let w = small.window();
            let big = r
                .labels(Window {
                    col_low: w.col_low - 5,
                    row_low: w.row_low - 3,
                })
                .unwrap();
            for k in w.row_low..=r.n() {
                for i in w.col_low..=r.n() {
                    assert_eq!(small.from_west(i, k), big.from_west(i, k));
                    assert_eq!(small.from_south(i, k), big.from_south(i, k));
                }
            }
        }
    }

    #[test]
    fn reading_words() {
        assert_eq!(r1().reading_word(), vec![-2, -1, 0]);
        assert_eq!(r3().reading_word(), vec![1, -1, 0, 1]);
        assert!(RcGraph::empty(2).reading_word().is_empty());
        for r in [r1(), r2(), r3()] {
            assert_eq!(
                word_permutation(&r.reading_word(), r.n()).unwrap(),
                r.trace()
            );
        }
    }

    #[test]
    fn monomials() {
        assert_eq!(r3().monomial(), vec![0, 3, 1]);
        assert_eq!(
            RcGraph::of_partition(&p(&[3, 1]), 3).unwrap().monomial(),
            vec![3, 1, 0]
        );
        assert_eq!(RcGraph::empty(2).monomial(), vec![0, 0]);
    }

    #[test]
    fn ladder_moves_of_single_row() {
        let top = g(2, &[(2, 1), (1, 1), (0, 1)]);
        let moves = top.ladder_moves();
        assert_eq!(moves.len(), 1);
        let (next, mv) = &moves[0];
        assert_eq!(*next, r1());
        assert_eq!(mv.size, 1);
        assert_eq!(next.trace(), top.trace());
        assert!(RcGraph::empty(2).ladder_moves().is_empty());
        // size-one move on a lone crossing
        let lone = g(3, &[(2, 1)]);
        let (moved, _) = &lone.ladder_moves()[0];
        assert_eq!(*moved, g(3, &[(1, 2)]));
    }

    #[test]
    fn ladder_move_of_size_two() {
        // rung at row 2 in columns 1 and 0
        let r = g(3, &[(1, 1), (1, 2), (0, 2)]);
        let moves = r.ladder_moves();
        let mv = moves
            .iter()
            .find(|(_, m)| m.from == Crossing::new(1, 1))
            .unwrap();
        assert_eq!(mv.1.size, 2);
        assert_eq!(mv.1.to, Crossing::new(0, 3));
        assert_eq!(mv.0.trace(), r.trace());
    }

    #[test]
    fn top_rcgraphs() {
        let w3 = Permutation::of_partition(&p(&[3]), 2).unwrap();
        assert_eq!(RcGraph::top(&w3).unwrap(), g(2, &[(2, 1), (1, 1), (0, 1)]));
        assert_eq!(
            RcGraph::top(&Permutation::identity(3)).unwrap(),
            RcGraph::empty(3)
        );
        let w = r2().trace();
        let top = RcGraph::top(&w).unwrap();
        assert_ne!(top, r2());
        let justified: Vec<_> = RcGraph::enumerate(&w)
            .unwrap()
            .into_iter()
            .filter(RcGraph::is_left_justified)
            .collect();
        assert_eq!(justified, vec![top]);
        assert!(RcGraph::top(&Permutation::simple(-1, 2).unwrap()).is_err());
    }

    #[test]
    fn enumerations() {
        assert_eq!(
            RcGraph::enumerate(&Permutation::identity(3)).unwrap(),
            BTreeSet::from([RcGraph::empty(3)])
        );
        let s0 = Permutation::simple(0, 3).unwrap();
        assert_eq!(
            RcGraph::enumerate(&s0).unwrap(),
            BTreeSet::from([g(3, &[(3, 1)]), g(3, &[(2, 2)]), g(3, &[(1, 3)])])
        );
        let w21 = Permutation::of_partition(&p(&[2, 1]), 2).unwrap();
        assert_eq!(RcGraph::enumerate(&w21).unwrap().len(), 2);
        for w in [s0, w21, r1().trace(), r2().trace(), r3().trace()] {
            assert_eq!(
                RcGraph::enumerate(&w).unwrap(),
                RcGraph::enumerate_by_ladder_moves(&w).unwrap()
            );
        }
        assert!(RcGraph::enumerate(&Permutation::simple(-1, 2).unwrap()).is_err());
    }

    #[test]
    fn partitions_and_tableaux() {
        assert_eq!(
            RcGraph::of_partition(&p(&[3]), 2).unwrap(),
            g(2, &[(2, 1), (1, 1), (0, 1)])
        );
        assert_eq!(RcGraph::of_partition(&p(&[1]), 3).unwrap(), g(3, &[(3, 1)]));
        let r21 = RcGraph::of_partition(&p(&[2, 1]), 2).unwrap();
        assert_eq!(r21, g(2, &[(2, 1), (1, 1), (2, 2)]));
        assert_eq!(r21.monomial(), vec![2, 1]);
        assert!(RcGraph::of_partition(&p(&[1, 1, 1]), 2).is_err());

        let y1 = Tableau::new(2, vec![vec![1, 1, 2]]).unwrap();
        assert_eq!(RcGraph::of_tableau(&y1, 2).unwrap(), r1());
        let top_fill = Tableau::new(3, vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(
            RcGraph::of_tableau(&top_fill, 3).unwrap(),
            RcGraph::of_partition(&p(&[2, 1]), 3).unwrap()
        );
        let y = Tableau::new(2, vec![vec![1, 2]]).unwrap();
        let r = RcGraph::of_tableau(&y, 2).unwrap();
        assert_eq!(r, g(2, &[(2, 1), (0, 2)]));
        assert_eq!(
            r.trace(),
            RcGraph::of_partition(&p(&[2]), 2).unwrap().trace()
        );
        assert_eq!(r.tableau_of().unwrap(), y);
        assert_eq!(r1().tableau_of().unwrap(), y1);
    }

    #[test]
    fn tableau_of_rejects_non_grassmannian() {
        // R_3's permutation has descents on both sides of 1
        assert!(matches!(r3().tableau_of(), Err(Error::NotGrassmannian(_))));
    }

    #[test]
    fn render_round_trip() {
        let e = RcGraph::empty(1);
        assert_eq!(e.render(), "  1\n1 .\n");
        let text = r1().render();
        assert!(text.contains('+'));
        assert_eq!(RcGraph::parse_render(&text).unwrap(), r1());
        assert_eq!(RcGraph::parse_render(&e.render()).unwrap(), e);
    }
}
