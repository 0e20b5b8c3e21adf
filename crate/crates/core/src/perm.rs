//! Finitely supported permutations of the integers `<= n`.
//!
//! A [`Permutation`] stores its values on a window `[low..=n]`; every integer
//! below `low` is a fixed point. The window is kept canonical by trimming fixed
//! points off its bottom, so derived equality and hashing are meaningful.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rcgraph::RcGraph;
use crate::tableau::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: i64,
    low: i64,
    images: Vec<i64>,
}

impl Permutation {
    pub fn identity(n: i64) -> Self {
        Permutation {
            n,
            low: n + 1,
            images: Vec::new(),
        }
    }

    /// Builds a permutation from its values on `[low..=n]`.
    pub fn from_window(n: i64, low: i64, images: Vec<i64>) -> Result<Self> {
        let bad = |reason: String| Error::NotBijective { low, n, reason };
        if low > n + 1 || images.len() as i64 != n - low + 1 {
            return Err(bad(format!(
                "expected {} values, got {}",
                (n - low + 1).max(0),
                images.len()
            )));
        }
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v < low || v > n {
                return Err(bad(format!("value {v} outside the window")));
            }
            let slot = &mut seen[(v - low) as usize];
            if *slot {
                return Err(bad(format!("value {v} repeated")));
            }
            *slot = true;
        }
        Ok(Permutation { n, low, images }.canonical())
    }

    /// Builds a permutation from an explicit map. Keys missing between the
    /// smallest key and `n` are fixed points.
    pub fn make(n: i64, images: &BTreeMap<i64, i64>) -> Result<Self> {
        let low = images
            .keys()
            .chain(images.values())
            .copied()
            .min()
            .unwrap_or(n + 1)
            .min(n + 1);
        if let Some((&k, _)) = images.iter().find(|(&k, _)| k > n) {
            return Err(Error::NotBijective {
                low,
                n,
                reason: format!("key {k} above n"),
            });
        }
        let window = (low..=n)
            .map(|i| images.get(&i).copied().unwrap_or(i))
            .collect();
        Self::from_window(n, low, window)
    }

    fn canonical(mut self) -> Self {
        let trim = self
            .images
            .iter()
            .enumerate()
            .take_while(|(idx, &v)| v == self.low + *idx as i64)
            .count();
        self.images.drain(..trim);
        self.low += trim as i64;
        self
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Bottom of the canonical window; everything below it is fixed.
    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    /// `w(i)`. Panics if `i > n`.
    pub fn apply(&self, i: i64) -> i64 {
        assert!(i <= self.n, "w({i}) undefined for n = {}", self.n);
        if i < self.low {
            i
        } else {
            self.images[(i - self.low) as usize]
        }
    }

    /// `(i, w(i))` for `i` in the canonical window, descending in `i`.
    pub fn window(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.low..=self.n).rev().map(move |i| (i, self.apply(i)))
    }

    /// Number of inversions `i < j <= n` with `w(i) > w(j)`.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The class condition `w(i) > w(i-1)` for all `i <= 0`.
    pub fn is_in_class(&self) -> bool {
        self.first_class_violation().is_none()
    }

    pub(crate) fn first_class_violation(&self) -> Option<i64> {
        (self.low + 1..=self.n.min(0)).find(|&i| self.apply(i) < self.apply(i - 1))
    }

    pub fn check_class(&self) -> Result<()> {
        match self.first_class_violation() {
            None => Ok(()),
            Some(at) => Err(Error::NotInClass { at }),
        }
    }

    /// The simple transposition `s_j` swapping `j` and `j + 1`.
    pub fn simple(j: i64, n: i64) -> Result<Self> {
        if j >= n {
            return Err(Error::SimpleOutOfRange { j, n });
        }
        Self::from_window(n, j, swap_window(j, n, j, j + 1))
    }

    /// `w s_{c,d}`: swaps the values in positions `c` and `d`.
    pub fn right_transposition(&self, c: i64, d: i64) -> Self {
        assert!(
            c != d && c <= self.n && d <= self.n,
            "bad positions ({c},{d})"
        );
        let low = self.low.min(c).min(d);
        let mut images: Vec<i64> = (low..=self.n).map(|i| self.apply(i)).collect();
        images.swap((c - low) as usize, (d - low) as usize);
        Permutation {
            n: self.n,
            low,
            images,
        }
        .canonical()
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "composing permutations of different n");
        let low = self.low.min(other.low);
        let images = (low..=self.n).map(|i| self.apply(other.apply(i))).collect();
        Permutation {
            n: self.n,
            low,
            images,
        }
        .canonical()
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (idx, &v) in self.images.iter().enumerate() {
            images[(v - self.low) as usize] = self.low + idx as i64;
        }
        Permutation {
            n: self.n,
            low: self.low,
            images,
        }
    }

    /// `w(μ)`, the permutation of the top rc-graph `R(μ)`.
    pub fn of_partition(mu: &Partition, n: i64) -> Result<Self> {
        Ok(RcGraph::of_partition(mu, n)?.trace())
    }

    pub fn as_map(&self) -> BTreeMap<i64, i64> {
        self.window().collect()
    }
}

fn swap_window(low: i64, n: i64, a: i64, b: i64) -> Vec<i64> {
    (low..=n)
        .map(|i| {
            if i == a {
                b
            } else if i == b {
                a
            } else {
                i
            }
        })
        .collect()
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation(n={}; ", self.n)?;
        let (dom, img): (Vec<_>, Vec<_>) = self.window().unzip();
        write!(f, "{dom:?} -> {img:?})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let (dom, img): (Vec<_>, Vec<_>) = self.window().unzip();
        let join = |v: Vec<i64>| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({})->({})", join(dom), join(img))
    }
}

/// All class permutations supported in `[low..=n]` with length at most
/// `max_length`. Used to build test universes.
pub fn class_permutations(n: i64, low: i64, max_length: usize) -> Vec<Permutation> {
    let size = (n - low + 1) as usize;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    let mut used = vec![false; size];
    fn rec(
        n: i64,
        low: i64,
        max_length: usize,
        inversions: usize,
        current: &mut Vec<i64>,
        used: &mut [bool],
        out: &mut Vec<Permutation>,
    ) {
        let size = used.len();
        if current.len() == size {
            let w = Permutation::from_window(n, low, current.clone()).expect("bijection");
            if w.is_in_class() {
                out.push(w);
            }
            return;
        }
        for v in 0..size {
            if used[v] {
                continue;
            }
            let value = low + v as i64;
            let added = current.iter().filter(|&&x| x > value).count();
            if inversions + added > max_length {
                continue;
            }
            used[v] = true;
            current.push(value);
            rec(n, low, max_length, inversions + added, current, used, out);
            current.pop();
            used[v] = false;
        }
    }
    rec(n, low, max_length, 0, &mut current, &mut used, &mut out);
    out.sort();
    out
}
