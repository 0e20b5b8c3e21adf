//! The acceptance sweeps. Each criterion runs exhaustively over a fixed
//! universe, with a wall-clock budget, and reports pass or fail with a short
//! summary. Shared by the `acceptance` test target and `rcg selftest`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::insertion::{insert, insert_tableau, insert_word, inverse_insert, InsertionTrace};
use crate::lr::{jacobi_trudi, lr_coefficients, pieri_chains};
use crate::perm::{class_permutations, Permutation};
use crate::rcgraph::{class_rcgraphs, RcGraph};
use crate::tableau::{enumerate_ssyt, enumerate_ssyt_up_to, Partition, Tableau};
use crate::Polynomial;

/// `n` used by every sweep.
pub const N: i64 = 3;
/// Bottom of the permutation window `[-2..3]`.
pub const WINDOW_LOW: i64 = -2;

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] AC{} {}: {} ({:.2?} of {:.0?})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed,
            self.limit
        )
    }
}

fn run(
    id: u32,
    title: &'static str,
    limit: Duration,
    body: impl FnOnce() -> Result<String>,
) -> CriterionOutcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(detail) => (true, detail),
        Err(e) => (false, e.to_string()),
    };
    if elapsed > limit {
        passed = false;
        detail = format!("{detail}; over time budget");
    }
    CriterionOutcome {
        id,
        title,
        passed,
        detail,
        elapsed,
        limit,
    }
}

fn fail(msg: String) -> Error {
    Error::Invariant(msg)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

/// Class permutations on `[-2..3]`, `n = 3`, of length at most 5.
pub fn permutation_universe() -> Vec<Permutation> {
    class_permutations(N, WINDOW_LOW, 5)
}

fn g(n: i64, cs: &[(i64, i64)]) -> RcGraph {
    RcGraph::new(n, cs.iter().copied()).expect("literal rc-graph")
}

fn perm(n: i64, pairs: &[(i64, i64)]) -> Permutation {
    Permutation::make(n, &pairs.iter().copied().collect()).expect("literal permutation")
}

/// The three rc-graphs drawn in the opening examples.
pub fn example_graphs() -> [(RcGraph, Permutation); 3] {
    [
        (
            g(2, &[(2, 1), (1, 1), (-1, 2)]),
            perm(2, &[(2, 2), (1, -2), (0, 1), (-1, 0), (-2, -1)]),
        ),
        (
            g(3, &[(3, 1), (2, 3), (1, 2)]),
            perm(3, &[(3, 3), (2, 1), (1, -1), (0, 2), (-1, 0)]),
        ),
        (
            g(3, &[(3, 2), (2, 2), (1, 2), (2, 3)]),
            perm(3, &[(3, 3), (2, -1), (1, 1), (0, 2), (-1, 0)]),
        ),
    ]
}

pub fn criterion_1() -> CriterionOutcome {
    run(
        1,
        "traces of the example rc-graphs",
        Duration::from_secs(1),
        || {
            for (idx, (r, w)) in example_graphs().iter().enumerate() {
                let traced = r.trace_checked()?;
                ensure(traced == *w, || {
                    format!("R_{}: traced {traced}, expected {w}", idx + 1)
                })?;
                r.validate()?;
            }
            Ok("3/3 permutations exact".into())
        },
    )
}

pub fn criterion_2() -> CriterionOutcome {
    run(
        2,
        "worked insertion example",
        Duration::from_secs(1),
        || {
            let r = g(4, &[(4, 1), (4, 2), (3, 2), (2, 2), (1, 4)]);
            let (out, trace) = insert(&r, 1)?;
            let expected = g(4, &[(4, 1), (4, 2), (3, 1), (3, 2), (2, 2), (3, 4)]);
            ensure(out == expected, || {
                format!("got {out}, expected {expected}")
            })?;
            let steps: Vec<_> = trace
                .steps
                .iter()
                .map(|s| (s.row, s.removed, s.inserted))
                .collect();
            ensure(steps == vec![(1, None, 3), (4, Some(1), 3)], || {
                format!("steps {steps:?}")
            })?;
            Ok(format!(
                "result and 2 steps exact, final transposition ({},{})",
                trace.final_c, trace.final_d
            ))
        },
    )
}

pub fn criterion_3() -> CriterionOutcome {
    run(
        3,
        "insertion counting vs polynomial oracle",
        Duration::from_secs(600),
        || {
            let ws = permutation_universe();
            let mus = Partition::all_up_to(3);
            let cases: Vec<(&Permutation, &Partition)> = ws
                .iter()
                .flat_map(|w| mus.iter().map(move |mu| (w, mu)))
                .collect();
            let terms: usize = cases
                .par_iter()
                .map(|(w, mu)| -> Result<usize> {
                    // lr_coefficients checks U-independence and the counting identity
                    let lr = lr_coefficients(w, mu, N)?;
                    let product = Polynomial::schubert(w, N)?.mul(&Polynomial::schur(mu, N)?)?;
                    let oracle = product.expand_in_schubert()?;
                    let rule: BTreeMap<Permutation, i64> = lr
                        .coefficients
                        .iter()
                        .map(|(u, &c)| (u.clone(), c as i64))
                        .collect();
                    ensure(rule == oracle, || {
                        format!("w = {w}, mu = {mu}: rule {rule:?} vs oracle {oracle:?}")
                    })?;
                    Ok(rule.len())
                })
                .try_reduce(|| 0, |a, b| Ok(a + b))?;
            Ok(format!(
                "{} permutations x {} partitions, {terms} coefficients agree",
                ws.len(),
                mus.len()
            ))
        },
    )
}

/// Triples `(x, y, z)` in `1..=n` with `x < y <= z`.
fn first_pattern(n: u32) -> Vec<(u32, u32, u32)> {
    triples(n, |x, y, z| x < y && y <= z)
}

/// Triples `(x, y, z)` in `1..=n` with `x <= y < z`.
fn second_pattern(n: u32) -> Vec<(u32, u32, u32)> {
    triples(n, |x, y, z| x <= y && y < z)
}

fn triples(n: u32, keep: impl Fn(u32, u32, u32) -> bool) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for x in 1..=n {
        for y in 1..=n {
            for z in 1..=n {
                if keep(x, y, z) {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

pub fn criterion_4() -> CriterionOutcome {
    run(
        4,
        "Knuth relations on rc-graph insertion",
        Duration::from_secs(120),
        || {
            let named: [(RcGraph, [u32; 3], [u32; 3]); 3] = [
                (g(2, &[(2, 2)]), [1, 2, 1], [2, 1, 1]),
                (example_graphs()[2].0.clone(), [2, 3, 2], [3, 2, 2]),
                (example_graphs()[2].0.clone(), [1, 3, 2], [3, 1, 2]),
            ];
            for (r, a, b) in &named {
                let (ra, rb) = (insert_word(r, a)?, insert_word(r, b)?);
                ensure(ra == rb, || {
                    format!("{r}: {a:?} gives {ra}, {b:?} gives {rb}")
                })?;
            }
            let graphs = class_rcgraphs(N, WINDOW_LOW, 4);
            let first = first_pattern(N as u32);
            let second = second_pattern(N as u32);
            let checked: usize = graphs
                .par_iter()
                .map(|r| -> Result<usize> {
                    let mut count = 0;
                    for &(x, y, z) in &first {
                        let (a, b) = (insert_word(r, &[y, x, z])?, insert_word(r, &[y, z, x])?);
                        ensure(a == b, || format!("{r}: yxz = {y}{x}{z} vs yzx"))?;
                        count += 1;
                    }
                    for &(x, y, z) in &second {
                        let (a, b) = (insert_word(r, &[x, z, y])?, insert_word(r, &[z, x, y])?);
                        ensure(a == b, || format!("{r}: xzy = {x}{z}{y} vs zxy"))?;
                        count += 1;
                    }
                    Ok(count)
                })
                .try_reduce(|| 0, |a, b| Ok(a + b))?;
            Ok(format!(
                "3 named instances, {} rc-graphs, {checked} identities",
                graphs.len()
            ))
        },
    )
}

pub fn criterion_5() -> CriterionOutcome {
    run(
        5,
        "Schensted consistency and weight",
        Duration::from_secs(60),
        || {
            let mut count = 0;
            for n in 1..=N {
                for mu in Partition::all_up_to(4) {
                    for y in enumerate_ssyt(&mu, n) {
                        let r = RcGraph::of_tableau(&y, n)?;
                        for k in 1..=n as u32 {
                            // insert() itself rejects any result with x^{R<-k} != x^R x_k
                            let (out, _) = insert(&r, k)?;
                            let classical = RcGraph::of_tableau(&y.schensted_insert(k)?, n)?;
                            ensure(out == classical, || {
                                format!("n = {n}, Y = {y:?}, k = {k}: {out} vs {classical}")
                            })?;
                            let mut weight = r.monomial();
                            weight[k as usize - 1] += 1;
                            ensure(out.monomial() == weight, || format!("weight of {out}"))?;
                            count += 1;
                        }
                    }
                }
            }
            Ok(format!("{count} insertions agree with row bumping"))
        },
    )
}

pub fn criterion_6() -> CriterionOutcome {
    run(
        6,
        "Pieri chains and final-label monotonicity",
        Duration::from_secs(120),
        || {
            let ws = permutation_universe();
            let checked: usize = ws
                .par_iter()
                .map(|w| -> Result<usize> {
                    let mut count = 0;
                    for m in 0..=3u32 {
                        let mut chains: BTreeMap<Permutation, u64> = BTreeMap::new();
                        for (u, _) in pieri_chains(w, m as usize, N)? {
                            *chains.entry(u).or_insert(0) += 1;
                        }
                        let lr = lr_coefficients(w, &Partition::row(m), N)?;
                        ensure(chains.values().all(|&c| c == 1), || {
                            format!("w = {w}, m = {m}: repeated chain ends {chains:?}")
                        })?;
                        ensure(lr.coefficients.values().all(|&c| c == 1), || {
                            format!("w = {w}, m = {m}: coefficient above one")
                        })?;
                        ensure(chains == lr.coefficients, || {
                            format!(
                                "w = {w}, m = {m}: chains {chains:?} vs rule {:?}",
                                lr.coefficients
                            )
                        })?;
                        count += 1;
                    }
                    for r in RcGraph::enumerate(w)? {
                        for m in 1..=3 {
                            for y in enumerate_ssyt(&Partition::row(m), N) {
                                let ds = final_labels(&r, y.rows()[0].as_slice())?;
                                ensure(ds.windows(2).all(|p| p[0] > p[1]), || {
                                    format!("{r} <- {:?}: d sequence {ds:?}", y.rows()[0])
                                })?;
                                count += 1;
                            }
                        }
                    }
                    Ok(count)
                })
                .try_reduce(|| 0, |a, b| Ok(a + b))?;
            Ok(format!("{} permutations, {checked} checks", ws.len()))
        },
    )
}

fn final_labels(r: &RcGraph, word: &[u32]) -> Result<Vec<i64>> {
    let mut acc = r.clone();
    let mut ds = Vec::with_capacity(word.len());
    for &k in word {
        let (next, trace): (RcGraph, InsertionTrace) = insert(&acc, k)?;
        ds.push(trace.final_d);
        acc = next;
    }
    Ok(ds)
}

pub fn criterion_7() -> CriterionOutcome {
    run(
        7,
        "two enumerations and the top rc-graph",
        Duration::from_secs(120),
        || {
            let ws = permutation_universe();
            let graphs: usize = ws
                .par_iter()
                .map(|w| -> Result<usize> {
                    let backtracked = RcGraph::enumerate(w)?;
                    let laddered = RcGraph::enumerate_by_ladder_moves(w)?;
                    ensure(backtracked == laddered, || {
                        format!("{w}: {} vs {} rc-graphs", backtracked.len(), laddered.len())
                    })?;
                    let top = RcGraph::top(w)?;
                    let justified: Vec<&RcGraph> = backtracked
                        .iter()
                        .filter(|r| r.is_left_justified())
                        .collect();
                    ensure(justified == vec![&top], || {
                        format!("{w}: left-justified {justified:?}")
                    })?;
                    let top_monomial = top.monomial();
                    let beaten = backtracked
                        .iter()
                        .filter(|r| **r != top)
                        .any(|r| r.monomial() >= top_monomial);
                    ensure(!beaten, || {
                        format!("{w}: top monomial not strictly lex-max")
                    })?;
                    for r in &backtracked {
                        ensure(r.is_reduced() && r.trace() == *w, || {
                            format!("{r} does not trace {w}")
                        })?;
                    }
                    Ok(backtracked.len())
                })
                .try_reduce(|| 0, |a, b| Ok(a + b))?;
            Ok(format!("{} permutations, {graphs} rc-graphs", ws.len()))
        },
    )
}

pub fn criterion_8() -> CriterionOutcome {
    run(
        8,
        "basis identities, associativity, inverse insertion",
        Duration::from_secs(300),
        || {
            let box333 = Partition::new(vec![3, 3, 3])?;
            let mut shapes = 0;
            for size in 0..=9 {
                for mu in Partition::all_of_size(size) {
                    if !mu.fits_in(&box333) {
                        continue;
                    }
                    let w = Permutation::of_partition(&mu, N)?;
                    ensure(
                        Polynomial::schur(&mu, N)? == Polynomial::schubert(&w, N)?,
                        || format!("S_{mu} differs from S_w(mu)"),
                    )?;
                    shapes += 1;
                }
            }
            let mut jt = 0;
            for mu in Partition::all_up_to(5) {
                let lhs: Polynomial = jacobi_trudi(&mu).evaluate(N)?;
                ensure(lhs == Polynomial::schur(&mu, N)?, || {
                    format!("Jacobi-Trudi for {mu}")
                })?;
                jt += 1;
            }

            let graphs = class_rcgraphs(N, WINDOW_LOW, 3);
            let tableaux = enumerate_ssyt_up_to(3, N);
            let products: Vec<Vec<Tableau>> = tableaux
                .iter()
                .map(|y1| tableaux.iter().map(|y2| y1.insert_tableau(y2)).collect())
                .collect::<Result<_>>()?;
            let results: Vec<(usize, HashSet<(RcGraph, u32)>)> = graphs
                .par_iter()
                .map(|r| -> Result<(usize, HashSet<(RcGraph, u32)>)> {
                    let mut seen = HashSet::new();
                    let mut count = 0;
                    for (a, y1) in tableaux.iter().enumerate() {
                        let r1 = insert_recording(r, &y1.reading_word(), &mut seen)?;
                        for (b, y2) in tableaux.iter().enumerate() {
                            let lhs = insert_tableau(r, &products[a][b])?;
                            let rhs = insert_recording(&r1, &y2.reading_word(), &mut seen)?;
                            ensure(lhs == rhs, || format!("{r} <- ({y1:?} <- {y2:?})"))?;
                            count += 1;
                        }
                    }
                    Ok((count, seen))
                })
                .collect::<Result<_>>()?;
            let mut pairs = 0;
            let mut insertions: HashSet<(RcGraph, u32)> = HashSet::new();
            for (count, seen) in results {
                pairs += count;
                insertions.extend(seen);
            }
            let insertions: Vec<(RcGraph, u32)> = insertions.into_iter().collect();
            insertions
                .par_iter()
                .map(|(r, k)| -> Result<()> {
                    let (out, trace) = insert(r, *k)?;
                    let back = inverse_insert(&out, trace.final_c, trace.final_d)?;
                    ensure(back == (r.clone(), *k), || format!("inverse of {r} <- {k}"))
                })
                .collect::<Result<Vec<()>>>()?;
            Ok(format!(
            "{shapes} shapes in 3x3, {jt} Jacobi-Trudi, {pairs} associativity cases, {} inverse round trips",
            insertions.len()
        ))
        },
    )
}

fn insert_recording(
    r: &RcGraph,
    word: &[u32],
    seen: &mut HashSet<(RcGraph, u32)>,
) -> Result<RcGraph> {
    let mut acc = r.clone();
    for &k in word {
        seen.insert((acc.clone(), k));
        acc = insert(&acc, k)?.0;
    }
    Ok(acc)
}

pub fn all() -> Vec<CriterionOutcome> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ]
}
