//! Insertion of a number into an rc-graph, generalizing Schensted row
//! insertion, together with its inverse.
//!
//! Inserting `k` starts in row `k`: the rightmost open tile gets a crossing.
//! If the two strands through it now cross a second time, that second crossing
//! lies in a higher row; it is removed and the nearest open tile to its left
//! in that row gets a crossing instead. The cascade stops once the crossing
//! set is reduced again. The net effect on the permutation is a right
//! multiplication by a transposition `s_{c,d}` with `c > 0 >= d`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rcgraph::{auto_labels, Crossing, RcGraph};
use crate::tableau::{check_letter, Tableau};

/// One step of an insertion cascade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InsertionStep {
    pub row: i64,
    /// Column of the crossing removed from this row; absent on the first step.
    pub removed: Option<i64>,
    /// Column of the crossing added to this row.
    pub inserted: i64,
    pub label_west: i64,
    pub label_south: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InsertionTrace {
    pub letter: u32,
    pub steps: Vec<InsertionStep>,
    pub final_c: i64,
    pub final_d: i64,
}

impl InsertionTrace {
    /// Crossings touched by the cascade, removed and inserted.
    pub fn touched(&self) -> BTreeSet<Crossing> {
        self.steps
            .iter()
            .flat_map(|s| {
                std::iter::once(Crossing::new(s.inserted, s.row))
                    .chain(s.removed.map(|col| Crossing::new(col, s.row)))
            })
            .collect()
    }
}

/// Columns of open tiles in row `k`, ascending.
pub fn open_spaces(r: &RcGraph, k: i64) -> Result<Vec<i64>> {
    check_row(r, k)?;
    let grid = r.auto_labels()?;
    let low = grid.window().col_low;
    Ok((low..=r.n()).filter(|&i| grid.is_open(i, k)).collect())
}

fn check_row(r: &RcGraph, k: i64) -> Result<()> {
    if k < 1 || k > r.n() {
        return Err(Error::LetterOutOfRange {
            letter: k,
            n: r.n(),
        });
    }
    Ok(())
}

/// One cascade, without postcondition checks.
fn insert_raw(r: &RcGraph, k: i64) -> Result<(RcGraph, InsertionTrace)> {
    let n = r.n();
    let mut crossings = r.crossings().clone();
    let mut row = k;
    let mut removed: Option<i64> = None;
    let mut steps = Vec::new();
    loop {
        if steps.len() as i64 >= n.max(1) {
            return Err(Error::Invariant(format!(
                "insertion of {k} into {r} exceeded {n} steps"
            )));
        }
        let grid = auto_labels(n, &crossings)?;
        let low = grid.window().col_low;
        let bound = removed.unwrap_or(i64::MIN);
        let col = (low..=n)
            .find(|&i| i > bound && grid.is_open(i, row))
            .ok_or_else(|| {
                Error::Invariant(format!("no open tile in row {row} right of column {bound}"))
            })?;
        let (a, b) = (grid.from_west(col, row), grid.from_south(col, row));
        let here = Crossing::new(col, row);
        crossings.insert(here);
        steps.push(InsertionStep {
            row,
            removed,
            inserted: col,
            label_west: a,
            label_south: b,
        });
        let grid = auto_labels(n, &crossings)?;
        let again: Vec<Crossing> = grid
            .crossings_of(a, b)
            .into_iter()
            .filter(|&c| c != here)
            .collect();
        match again.as_slice() {
            [] => {
                let trace = InsertionTrace {
                    letter: k as u32,
                    steps,
                    final_c: a,
                    final_d: b,
                };
                return Ok((RcGraph::from_set(n, crossings), trace));
            }
            [next] if next.row > row => {
                crossings.remove(next);
                removed = Some(next.col);
                row = next.row;
            }
            _ => {
                return Err(Error::Invariant(format!(
                    "strands {a},{b} recross at {again:?} after inserting ({col},{row})"
                )))
            }
        }
    }
}

/// `R ← k`, with the full cascade record.
///
/// The result is checked against the weight identity `x^{R←k} = x^R x_k`, the
/// permutation identity `w_{R←k} = w_R s_{c,d}` with `c > 0 >= d` and length
/// one more, and the class condition; any failure is reported as
/// [`Error::Invariant`].
pub fn insert(r: &RcGraph, k: u32) -> Result<(RcGraph, InsertionTrace)> {
    check_letter(k, r.n())?;
    let w = r.trace_checked()?;
    if w.length() != r.len() {
        return Err(Error::NotReduced {
            crossings: r.len(),
            length: w.length(),
        });
    }
    w.check_class()?;
    let (out, trace) = insert_raw(r, k as i64)?;
    check_insertion(r, &w, k, &out, &trace)?;
    Ok((out, trace))
}

fn check_insertion(
    r: &RcGraph,
    w: &crate::perm::Permutation,
    k: u32,
    out: &RcGraph,
    trace: &InsertionTrace,
) -> Result<()> {
    let fail = |what: &str| {
        Err(Error::Invariant(format!(
            "{what} after inserting {k} into {r}"
        )))
    };
    let mut expected = r.monomial();
    expected[k as usize - 1] += 1;
    if out.monomial() != expected {
        return fail("weight identity broken");
    }
    let (c, d) = (trace.final_c, trace.final_d);
    if !(c > 0 && d <= 0) {
        return fail("final labels out of order");
    }
    let u = out.trace_checked()?;
    if u != w.right_transposition(c, d) || u.length() != w.length() + 1 {
        return fail("permutation is not w s_{c,d} of length + 1");
    }
    if !u.is_in_class() {
        return fail("class condition lost");
    }
    Ok(())
}

/// `R ← v`, inserting the letters of `v` from left to right.
pub fn insert_word(r: &RcGraph, word: &[u32]) -> Result<RcGraph> {
    word.iter()
        .try_fold(r.clone(), |acc, &k| Ok(insert(&acc, k)?.0))
}

/// Like [`insert_word`], keeping every cascade record.
pub fn insert_word_traced(r: &RcGraph, word: &[u32]) -> Result<(RcGraph, Vec<InsertionTrace>)> {
    let mut acc = r.clone();
    let mut traces = Vec::with_capacity(word.len());
    for &k in word {
        let (next, t) = insert(&acc, k)?;
        acc = next;
        traces.push(t);
    }
    Ok((acc, traces))
}

/// `R ← Y`, inserting the reading word of `Y`.
pub fn insert_tableau(r: &RcGraph, y: &Tableau) -> Result<RcGraph> {
    insert_word(r, &y.reading_word())
}

/// Undoes an insertion whose final transposition was `s_{c,d}`, returning the
/// original rc-graph and the inserted number.
///
/// Backward steps undo a cascade row by row: after removing the last inserted
/// crossing, the removed crossing of that step must be restored at a bump
/// whose west strand is nonpositive and south strand positive, so that the two
/// strands recross in a lower row. Every candidate chain is replayed forward
/// and exactly one must reproduce the input.
pub fn inverse_insert(r2: &RcGraph, c: i64, d: i64) -> Result<(RcGraph, u32)> {
    let n = r2.n();
    if !(c > 0 && d <= 0) {
        return Err(Error::StrandsDoNotCross { c, d });
    }
    let w2 = r2.trace_checked()?;
    let w = w2.right_transposition(c, d);
    if w.length() + 1 != w2.length() || r2.len() != w2.length() {
        return Err(Error::StrandsDoNotCross { c, d });
    }
    let grid = r2.auto_labels()?;
    let last = match grid.crossings_of(c, d).as_slice() {
        [one] => *one,
        _ => return Err(Error::StrandsDoNotCross { c, d }),
    };
    let mut start = r2.crossings().clone();
    start.remove(&last);

    let mut found: Vec<(RcGraph, u32)> = Vec::new();
    let mut stack = vec![(start, last)];
    while let Some((crossings, lifted)) = stack.pop() {
        if lifted.row >= 1 {
            let candidate = RcGraph::from_set(n, crossings.clone());
            let k = lifted.row as u32;
            if candidate.is_reduced() && candidate.trace() == w {
                if let Ok((again, t)) = insert(&candidate, k) {
                    if again == *r2
                        && (t.final_c, t.final_d) == (c, d)
                        && !found.contains(&(candidate.clone(), k))
                    {
                        found.push((candidate, k));
                    }
                }
            }
        }
        let grid = auto_labels(n, &crossings)?;
        let low = grid.window().col_low;
        for col in low..lifted.col {
            if crossings.contains(&Crossing::new(col, lifted.row)) {
                continue;
            }
            let (a, b) = (
                grid.from_west(col, lifted.row),
                grid.from_south(col, lifted.row),
            );
            if !(a <= 0 && b > 0) {
                continue;
            }
            let mut restored = crossings.clone();
            let here = Crossing::new(col, lifted.row);
            restored.insert(here);
            let g2 = auto_labels(n, &restored)?;
            for below in g2.crossings_of(a, b) {
                if below.row < lifted.row {
                    let mut prev = restored.clone();
                    prev.remove(&below);
                    stack.push((prev, below));
                }
            }
        }
    }
    match found.len() {
        1 => Ok(found.pop().expect("one")),
        0 => Err(Error::Invariant(format!(
            "no preimage of {r2} for transposition ({c},{d})"
        ))),
        _ => Err(Error::Invariant(format!(
            "{} preimages of {r2} for transposition ({c},{d})",
            found.len()
        ))),
    }
}
