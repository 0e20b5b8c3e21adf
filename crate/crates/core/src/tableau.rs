//! Partitions, semistandard Young tableaux, words and Knuth moves, plus the
//! classical Schensted row insertion.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on word length for [`knuth_class`].
pub const DEFAULT_KNUTH_BFS_LIMIT: usize = 8;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Drops trailing zeros first; still rejects increasing sequences.
    pub fn from_padded(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(m: u32) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition(vec![m])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `μ_k` with 1-based `k`; zero past the last part.
    pub fn part(&self, k: usize) -> u32 {
        self.0.get(k.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn check_rows(&self, n: i64) -> Result<()> {
        if self.len() as i64 > n {
            return Err(Error::TooManyParts {
                parts: self.0.clone(),
                n,
            });
        }
        Ok(())
    }

    /// All partitions of `size`, parts in decreasing lex order.
    pub fn all_of_size(size: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `max_size`.
    pub fn all_up_to(max_size: u32) -> Vec<Partition> {
        (0..=max_size).flat_map(Self::all_of_size).collect()
    }

    /// Whether `self ⊆ other` as Young diagrams.
    pub fn fits_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub type Word = Vec<u32>;

/// Semistandard tableau with entries in `1..=n`, stored as rows top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    n: i64,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(n: i64, rows: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return bad(format!("row {} is empty", r + 1));
            }
            if let Some(&e) = row.iter().find(|&&e| e == 0 || e as i64 > n) {
                return bad(format!("entry {e} outside 1..={n}"));
            }
            if row.windows(2).any(|p| p[0] > p[1]) {
                return bad(format!("row {} decreases", r + 1));
            }
            if r > 0 {
                let above = &rows[r - 1];
                if row.len() > above.len() {
                    return bad("row lengths increase".into());
                }
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return bad(format!("column not strictly increasing at row {}", r + 1));
                }
            }
        }
        Ok(Tableau { n, rows })
    }

    pub fn empty(n: i64) -> Self {
        Tableau {
            n,
            rows: Vec::new(),
        }
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Rows read bottom to top, each left to right.
    pub fn reading_word(&self) -> Word {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Exponent vector of `x^Y`, indexed by entry `1..=n`.
    pub fn weight(&self) -> Vec<u32> {
        let mut e = vec![0; self.n.max(0) as usize];
        for &v in self.rows.iter().flatten() {
            e[v as usize - 1] += 1;
        }
        e
    }

    /// Classical Schensted row insertion of `k`.
    pub fn schensted_insert(&self, k: u32) -> Result<Tableau> {
        check_letter(k, self.n)?;
        let mut rows = self.rows.clone();
        let mut bumped = k;
        for row in rows.iter_mut() {
            match row.iter().position(|&e| e > bumped) {
                Some(pos) => bumped = std::mem::replace(&mut row[pos], bumped),
                None => {
                    row.push(bumped);
                    return Ok(Tableau { n: self.n, rows });
                }
            }
        }
        rows.push(vec![bumped]);
        Ok(Tableau { n: self.n, rows })
    }

    pub fn insert_word(&self, word: &[u32]) -> Result<Tableau> {
        word.iter()
            .try_fold(self.clone(), |t, &k| t.schensted_insert(k))
    }

    /// `self ← other`, inserting the reading word of `other`.
    pub fn insert_tableau(&self, other: &Tableau) -> Result<Tableau> {
        if self.n != other.n {
            return Err(Error::MismatchedN(self.n, other.n));
        }
        self.insert_word(&other.reading_word())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn check_letter(k: u32, n: i64) -> Result<()> {
    if k == 0 || k as i64 > n {
        return Err(Error::LetterOutOfRange {
            letter: k as i64,
            n,
        });
    }
    Ok(())
}

/// All semistandard tableaux of shape `mu` with entries in `1..=n`, sorted.
pub fn enumerate_ssyt(mu: &Partition, n: i64) -> Vec<Tableau> {
    if mu.len() as i64 > n.max(0) {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> = mu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<u32>> = mu.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut out = Vec::new();
    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        n: u32,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            out.push(Tableau {
                n: n as i64,
                rows: rows.clone(),
            });
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        for v in lo..=n {
            rows[r][c] = v;
            fill(idx + 1, cells, rows, n, out);
        }
        rows[r][c] = 0;
    }
    fill(0, &cells, &mut rows, n.max(0) as u32, &mut out);
    out.sort();
    out
}

/// All semistandard tableaux with entries `<= n` and at most `max_size` boxes.
pub fn enumerate_ssyt_up_to(max_size: u32, n: i64) -> Vec<Tableau> {
    Partition::all_up_to(max_size)
        .iter()
        .flat_map(|mu| enumerate_ssyt(mu, n))
        .collect()
}

/// Words reachable from `v` by a single Knuth move.
pub fn knuth_neighbors(v: &[u32]) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for p in 0..v.len().saturating_sub(2) {
        let (a, b, c) = (v[p], v[p + 1], v[p + 2]);
        let mut push = |a2, b2, c2| {
            let mut u = v.to_vec();
            u[p] = a2;
            u[p + 1] = b2;
            u[p + 2] = c2;
            out.insert(u);
        };
        // yxz <-> yzx for x < y <= z
        if b < a && a <= c {
            push(a, c, b);
        }
        if c < a && a <= b {
            push(a, c, b);
        }
        // xzy <-> zxy for x <= y < z
        if a <= c && c < b {
            push(b, a, c);
        }
        if b <= c && c < a {
            push(b, a, c);
        }
    }
    out
}

/// The full Knuth class of `v` by breadth-first search, or `None` when `v` is
/// longer than `max_len`.
pub fn knuth_class(v: &[u32], max_len: usize) -> Option<BTreeSet<Word>> {
    if v.len() > max_len {
        return None;
    }
    let mut seen = BTreeSet::from([v.to_vec()]);
    let mut queue = VecDeque::from([v.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for next in knuth_neighbors(&u) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Some(seen)
}

/// The unique tableau whose reading word is Knuth equivalent to `v`.
pub fn rectify(v: &[u32], n: i64) -> Result<Tableau> {
    Tableau::empty(n).insert_word(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: i64, rows: &[&[u32]]) -> Tableau {
        Tableau::new(n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_padded(vec![2, 1, 0]).unwrap(), p(&[2, 1]));
        assert_eq!(Partition::all_of_size(4).len(), 5);
        assert_eq!(Partition::all_up_to(3).len(), 1 + 1 + 2 + 3);
    }

    #[test]
    fn tableau_validation() {
        assert!(Tableau::new(3, vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(3, vec![vec![1, 2], vec![1]]).is_err());
        assert!(Tableau::new(3, vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(2, vec![vec![3]]).is_err());
    }

    #[test]
    fn reading_words() {
        assert_eq!(t(2, &[&[1, 1, 2]]).reading_word(), vec![1, 1, 2]);
        assert_eq!(t(3, &[&[1, 3], &[3]]).reading_word(), vec![3, 1, 3]);
        assert_eq!(
            t(4, &[&[1, 2, 2], &[2], &[4]]).reading_word(),
            vec![4, 2, 1, 2, 2]
        );
        assert_eq!(t(3, &[&[2]]).reading_word(), vec![2]);
        assert!(Tableau::empty(3).reading_word().is_empty());
    }

    #[test]
    fn ssyt_enumeration() {
        assert_eq!(enumerate_ssyt(&p(&[1]), 3).len(), 3);
        assert_eq!(
            enumerate_ssyt(&p(&[2, 1]), 2),
            vec![t(2, &[&[1, 1], &[2]]), t(2, &[&[1, 2], &[2]])]
        );
        assert!(enumerate_ssyt(&p(&[1, 1, 1]), 2).is_empty());
        assert_eq!(
            enumerate_ssyt(&Partition::empty(), 2),
            vec![Tableau::empty(2)]
        );
        // hook-content formula: (2,1) with n = 3 gives 8
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), 3).len(), 8);
    }

    #[test]
    fn schensted() {
        assert_eq!(
            t(2, &[&[1, 2]]).schensted_insert(1).unwrap(),
            t(2, &[&[1, 1], &[2]])
        );
        assert_eq!(
            Tableau::empty(3).schensted_insert(2).unwrap(),
            t(3, &[&[2]])
        );
        assert_eq!(
            t(2, &[&[1, 1]]).schensted_insert(1).unwrap(),
            t(2, &[&[1, 1, 1]])
        );
        assert!(Tableau::empty(2).schensted_insert(3).is_err());
        let y = t(2, &[&[1, 2]]);
        assert_eq!(y.insert_tableau(&Tableau::empty(2)).unwrap(), y);
        assert_eq!(
            y.insert_tableau(&t(2, &[&[1]])).unwrap(),
            t(2, &[&[1, 1], &[2]])
        );
    }

    #[test]
    fn knuth_moves() {
        assert_eq!(knuth_neighbors(&[3, 1, 3]), BTreeSet::from([vec![3, 3, 1]]));
        assert!(knuth_neighbors(&[1, 1, 2]).is_empty());
        assert!(knuth_neighbors(&[]).is_empty());
        // symmetric relation
        for u in knuth_neighbors(&[2, 1, 3, 1]) {
            assert!(knuth_neighbors(&u).contains(&vec![2, 1, 3, 1]));
        }
    }

    #[test]
    fn rectification() {
        assert_eq!(rectify(&[3, 3, 1], 3).unwrap(), t(3, &[&[1, 3], &[3]]));
        assert_eq!(rectify(&[2], 3).unwrap(), t(3, &[&[2]]));
        let class = knuth_class(&[3, 3, 1], 8).unwrap();
        assert!(class.contains(&vec![3, 1, 3]));
        assert!(knuth_class(&[1; 9], 8).is_none());
    }

    #[test]
    fn rectify_inverts_reading_word() {
        for mu in Partition::all_up_to(4) {
            for y in enumerate_ssyt(&mu, 3) {
                assert_eq!(rectify(&y.reading_word(), 3).unwrap(), y);
            }
        }
    }
}
