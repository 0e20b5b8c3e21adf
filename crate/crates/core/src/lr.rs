//! Littlewood-Richardson coefficients for `S_w · S_μ` by counting insertion
//! pairs, the single-row (Pieri) case by transposition chains, Jacobi-Trudi
//! expansions, and polynomial verification of all of it.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::insertion::insert_tableau;
use crate::perm::Permutation;
use crate::poly::{Coefficient, SparsePolynomial};
use crate::rcgraph::RcGraph;
use crate::tableau::{enumerate_ssyt, Partition, Tableau};
use crate::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LrOptions {
    /// Run the U-independence and counting checks before returning.
    pub check: bool,
    /// Keep the `(R, Y)` witnesses of every result graph.
    pub keep_witnesses: bool,
}

impl Default for LrOptions {
    fn default() -> Self {
        LrOptions {
            check: true,
            keep_witnesses: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LrChecks {
    pub u_independent: bool,
    pub counting_identity: bool,
}

#[derive(Clone, Debug)]
pub struct LrResult {
    pub w: Permutation,
    pub mu: Partition,
    pub n: i64,
    pub coefficients: BTreeMap<Permutation, u64>,
    /// `(R, Y)` pairs grouped by `U = R ← Y`; empty unless requested.
    pub witnesses: BTreeMap<RcGraph, Vec<(RcGraph, Tableau)>>,
    pub checks: Option<LrChecks>,
}

/// Coefficients of `S_w · S_μ` in the Schubert basis: `c_u` is the number of
/// pairs `(R, Y)` with `w_R = w`, `μ(Y) = μ` and `R ← Y` equal to any fixed
/// rc-graph of `u`.
pub fn lr_coefficients(w: &Permutation, mu: &Partition, n: i64) -> Result<LrResult> {
    lr_coefficients_with(w, mu, n, LrOptions::default())
}

pub fn lr_coefficients_with(
    w: &Permutation,
    mu: &Partition,
    n: i64,
    options: LrOptions,
) -> Result<LrResult> {
    if w.n() != n {
        return Err(Error::MismatchedN(w.n(), n));
    }
    w.check_class()?;
    mu.check_rows(n)?;
    let graphs: Vec<RcGraph> = RcGraph::enumerate(w)?.into_iter().collect();
    let tableaux = enumerate_ssyt(mu, n);
    let pairs: Vec<(&RcGraph, &Tableau)> = graphs
        .iter()
        .flat_map(|r| tableaux.iter().map(move |y| (r, y)))
        .collect();
    let products: Vec<(RcGraph, usize)> = pairs
        .par_iter()
        .enumerate()
        .map(|(idx, (r, y))| Ok((insert_tableau(r, y)?, idx)))
        .collect::<Result<_>>()?;

    let mut by_graph: HashMap<RcGraph, Vec<usize>> = HashMap::new();
    for (u_graph, idx) in products {
        by_graph.entry(u_graph).or_default().push(idx);
    }
    let mut by_perm: BTreeMap<Permutation, HashMap<RcGraph, u64>> = BTreeMap::new();
    for (u_graph, idxs) in &by_graph {
        by_perm
            .entry(u_graph.trace_checked()?)
            .or_default()
            .insert(u_graph.clone(), idxs.len() as u64);
    }

    let mut coefficients = BTreeMap::new();
    let mut u_independent = true;
    let mut counted = 0u64;
    for (u, counts) in &by_perm {
        let coefficient = *counts.values().max().expect("nonempty group");
        if options.check {
            let all = RcGraph::enumerate(u)?;
            let uniform = all.len() == counts.len()
                && all.iter().all(|g| counts.get(g) == Some(&coefficient));
            u_independent &= uniform;
            counted += coefficient * all.len() as u64;
        }
        coefficients.insert(u.clone(), coefficient);
    }
    let checks = options.check.then(|| LrChecks {
        u_independent,
        counting_identity: counted == (graphs.len() * tableaux.len()) as u64,
    });
    if let Some(c) = &checks {
        if !c.u_independent || !c.counting_identity {
            return Err(Error::Invariant(format!(
                "insertion count for {w} times s_{mu} failed checks: {c:?}"
            )));
        }
    }
    let witnesses = if options.keep_witnesses {
        by_graph
            .into_iter()
            .map(|(g, idxs)| {
                let pairs = idxs
                    .into_iter()
                    .map(|i| (pairs[i].0.clone(), pairs[i].1.clone()))
                    .collect();
                (g, pairs)
            })
            .collect()
    } else {
        BTreeMap::new()
    };
    Ok(LrResult {
        w: w.clone(),
        mu: mu.clone(),
        n,
        coefficients,
        witnesses,
        checks,
    })
}

/// Transpositions `(c_i, d_i)` with `c_i > 0 >= d_i`, `d_1 > ... > d_m`, each
/// raising the length by one.
pub type HChain = Vec<(i64, i64)>;

/// Every chain of length `m` starting at `w`, with its end permutation.
pub fn pieri_chains(w: &Permutation, m: usize, n: i64) -> Result<Vec<(Permutation, HChain)>> {
    if w.n() != n {
        return Err(Error::MismatchedN(w.n(), n));
    }
    w.check_class()?;
    let mut out = Vec::new();
    let mut chain = Vec::with_capacity(m);
    extend_chains(w, m, i64::MAX, &mut chain, &mut out);
    out.sort();
    Ok(out)
}

fn extend_chains(
    cur: &Permutation,
    remaining: usize,
    last_d: i64,
    chain: &mut HChain,
    out: &mut Vec<(Permutation, HChain)>,
) {
    if remaining == 0 {
        out.push((cur.clone(), chain.clone()));
        return;
    }
    let length = cur.length();
    // Below min(low, 1) - 1 the value d + 1 sits between w(d) and w(c).
    let d_min = cur.low().min(1) - 1;
    let d_max = 0.min(last_d.saturating_sub(1));
    for c in 1..=cur.n() {
        for d in d_min..=d_max {
            let next = cur.right_transposition(c, d);
            if next.length() == length + 1 {
                chain.push((c, d));
                extend_chains(&next, remaining - 1, d, chain, out);
                chain.pop();
            }
        }
    }
}

/// End permutations of [`pieri_chains`] with multiplicities.
pub fn pieri_expansion(w: &Permutation, m: usize, n: i64) -> Result<BTreeMap<Permutation, u64>> {
    let mut out = BTreeMap::new();
    for (u, _) in pieri_chains(w, m, n)? {
        *out.entry(u).or_insert(0) += 1;
    }
    Ok(out)
}

/// `S_μ` as a signed sum of products of complete homogeneous polynomials
/// `h_{m_1} ... h_{m_k}`; each sequence lists its positive indices in
/// decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JtExpansion {
    pub plus: Vec<Vec<u32>>,
    pub minus: Vec<Vec<u32>>,
}

/// Expands `det(h_{μ_i - i + j})` over permutations of the columns.
pub fn jacobi_trudi(mu: &Partition) -> JtExpansion {
    let m = mu.len();
    let mut out = JtExpansion::default();
    let mut perm: Vec<usize> = (0..m).collect();
    let mut used = vec![false; m];
    fn rec(
        row: usize,
        mu: &Partition,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut JtExpansion,
    ) {
        let m = used.len();
        if row == m {
            let mut indices = Vec::with_capacity(m);
            for (i, &j) in perm.iter().enumerate() {
                let index = mu.parts()[i] as i64 - i as i64 + j as i64;
                match index {
                    i64::MIN..=-1 => return,
                    0 => {}
                    _ => indices.push(index as u32),
                }
            }
            indices.sort_unstable_by(|a, b| b.cmp(a));
            let inversions = (0..m)
                .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
                .filter(|&(a, b)| perm[a] > perm[b])
                .count();
            if inversions % 2 == 0 {
                out.plus.push(indices);
            } else {
                out.minus.push(indices);
            }
            return;
        }
        for j in 0..m {
            if !used[j] {
                used[j] = true;
                perm[row] = j;
                rec(row + 1, mu, perm, used, out);
                used[j] = false;
            }
        }
    }
    rec(0, mu, &mut perm, &mut used, &mut out);
    out.plus.sort();
    out.minus.sort();
    out
}

impl JtExpansion {
    /// Evaluates the expansion with `h_m = S_{(m)}` in `n` variables.
    pub fn evaluate<C: Coefficient>(&self, n: i64) -> Result<SparsePolynomial<C>> {
        let mut h: BTreeMap<u32, SparsePolynomial<C>> = BTreeMap::new();
        let mut product = |seq: &[u32]| -> Result<SparsePolynomial<C>> {
            let mut acc = SparsePolynomial::one(n as usize);
            for &m in seq {
                let hm = match h.entry(m) {
                    std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(SparsePolynomial::schur(&Partition::row(m), n)?)
                    }
                };
                acc = acc.mul(hm)?;
            }
            Ok(acc)
        };
        let mut total = SparsePolynomial::zero(n as usize);
        for seq in &self.plus {
            total = total.add(&product(seq)?)?;
        }
        for seq in &self.minus {
            total = total.sub(&product(seq)?)?;
        }
        Ok(total)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub w: Permutation,
    pub mu: Partition,
    pub n: i64,
    pub product: Polynomial,
    pub coefficients: BTreeMap<Permutation, u64>,
    pub expansion: BTreeMap<Permutation, i64>,
    pub polynomial_match: bool,
    pub expansion_match: bool,
    pub first_discrepancy: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.polynomial_match && self.expansion_match
    }
}

/// Checks `S_w S_μ = Σ c_u S_u` coefficient by coefficient, and that greedy
/// Schubert expansion of the product returns the same `c_u`.
pub fn verify_identity(w: &Permutation, mu: &Partition, n: i64) -> Result<VerifyReport> {
    let lr = lr_coefficients(w, mu, n)?;
    let product = Polynomial::schubert(w, n)?.mul(&Polynomial::schur(mu, n)?)?;
    let signed: BTreeMap<Permutation, i64> = lr
        .coefficients
        .iter()
        .map(|(u, &c)| (u.clone(), c as i64))
        .collect();
    let rebuilt = Polynomial::from_schubert_expansion(n, &signed)?;
    let diff = product.sub(&rebuilt)?;
    let mut first_discrepancy = diff.leading_term().map(|(e, c)| {
        format!(
            "coefficient of {e:?}: product {} vs rule {}",
            product.coefficient(e),
            product.coefficient(e) - c
        )
    });
    let expansion = product.expand_in_schubert().unwrap_or_default();
    let expansion_match = expansion == signed;
    if first_discrepancy.is_none() && !expansion_match {
        first_discrepancy = Some(format!(
            "greedy expansion {expansion:?} differs from rule {signed:?}"
        ));
    }
    Ok(VerifyReport {
        w: w.clone(),
        mu: mu.clone(),
        n,
        polynomial_match: diff.is_zero(),
        expansion_match,
        product,
        coefficients: lr.coefficients,
        expansion,
        first_discrepancy,
    })
}

/// Classical Littlewood-Richardson number `c^ν_{λμ}`: pairs of tableaux of
/// shapes `λ`, `μ` whose Schensted product is the row-filled tableau of `ν`.
pub fn classical_lr(lambda: &Partition, mu: &Partition, nu: &Partition, n: i64) -> Result<u64> {
    if nu.size() != lambda.size() + mu.size() || nu.len() as i64 > n {
        return Ok(0);
    }
    let rows = nu
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| vec![r as u32 + 1; len as usize])
        .collect();
    let target = Tableau::new(n, rows)?;
    let mut count = 0;
    for y1 in enumerate_ssyt(lambda, n) {
        for y2 in enumerate_ssyt(mu, n) {
            if y1.insert_tableau(&y2)? == target {
                count += 1;
            }
        }
    }
    Ok(count)
}
