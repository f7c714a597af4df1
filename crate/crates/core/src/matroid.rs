//! Binary matroids given by a GF(2) representation.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::gf2::{low_mask, masked_rank, render_bit_row, Gf2Error, Gf2Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("invalid element label {0:?}")]
    InvalidLabel(String),
    #[error("{labels} labels for {cols} columns")]
    LabelCount { labels: usize, cols: usize },
    #[error("matroid has no cocircuits (rank 0)")]
    NoCocircuits,
    #[error("matroid file line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

/// A subset of the ground set of some matroid, as a bit set over element positions.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet(iter.into_iter().fold(0, |acc, i| acc | 1 << i))
    }

    pub fn singleton(i: usize) -> Self {
        ElementSet(1 << i)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(self, other: ElementSet) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let i = diff.trailing_zeros();
        let above = !low_mask(i as usize + 1);
        // Both sets agree below `i`; the one holding `i` is smaller unless the
        // other one ends there.
        if self.0 >> i & 1 == 1 {
            if other.0 & above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Ordering used for cocircuit lists: cardinality, then lexicographic.
    pub fn canonical_cmp(self, other: ElementSet) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.lex_cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Element labels may not contain whitespace, commas or braces.
pub fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || matches!(c, ',' | '{' | '}'))
}

/// A binary matroid: a full-row-rank GF(2) matrix whose columns are the labelled elements.
pub struct BinaryMatroid {
    rep: Gf2Matrix,
    labels: Vec<String>,
    name: Option<String>,
    cocircuits: OnceLock<Vec<ElementSet>>,
}

impl Clone for BinaryMatroid {
    fn clone(&self) -> Self {
        BinaryMatroid {
            rep: self.rep.clone(),
            labels: self.labels.clone(),
            name: self.name.clone(),
            cocircuits: self.cocircuits.clone(),
        }
    }
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinaryMatroid")
            .field("name", &self.name)
            .field("rank", &self.rank())
            .field("labels", &self.labels)
            .finish()
    }
}

impl BinaryMatroid {
    /// Builds a matroid from any representation; dependent rows are replaced
    /// by a row basis so the stored matrix has full row rank.
    pub fn new(rep: Gf2Matrix, labels: Vec<String>) -> Result<Self, MatroidError> {
        if labels.len() != rep.ncols() {
            return Err(MatroidError::LabelCount { labels: labels.len(), cols: rep.ncols() });
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !valid_label(l) {
                return Err(MatroidError::InvalidLabel(l.clone()));
            }
            if !seen.insert(l.as_str()) {
                return Err(MatroidError::DuplicateLabel(l.clone()));
            }
        }
        let rep = if rep.rank() == rep.nrows() {
            rep
        } else {
            Gf2Matrix::from_rows(rep.row_basis(), rep.ncols())?
        };
        Ok(BinaryMatroid { rep, labels, name: None, cocircuits: OnceLock::new() })
    }

    /// Labels `1..=n`.
    pub fn with_numeric_labels(rep: Gf2Matrix) -> Result<Self, MatroidError> {
        let labels = (1..=rep.ncols()).map(|i| i.to_string()).collect();
        Self::new(rep, labels)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn representation(&self) -> &Gf2Matrix {
        &self.rep
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet(low_mask(self.len()))
    }

    pub fn rank(&self) -> usize {
        self.rep.nrows()
    }

    pub fn subset_rank(&self, x: ElementSet) -> usize {
        masked_rank(self.rep.rows(), x.0)
    }

    pub fn index_of(&self, label: &str) -> Result<usize, MatroidError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| MatroidError::UnknownElement(label.to_string()))
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet, MatroidError> {
        labels
            .iter()
            .try_fold(ElementSet::EMPTY, |acc, l| Ok(acc.union(ElementSet::singleton(self.index_of(l.as_ref())?))))
    }

    pub fn set_labels(&self, x: ElementSet) -> Vec<&str> {
        x.iter().map(|i| self.labels[i].as_str()).collect()
    }

    /// `{a,b,c}` in ground-set order.
    pub fn format_set(&self, x: ElementSet) -> String {
        format!("{{{}}}", self.set_labels(x).join(","))
    }

    fn column(&self, e: usize) -> u64 {
        self.rep.column(e)
    }

    /// Cocircuits are the minimal supports of nonzero row-space vectors,
    /// sorted by cardinality and then lexicographically. Computed once.
    pub fn cocircuits(&self) -> &[ElementSet] {
        self.cocircuits.get_or_init(|| {
            let rows = self.rep.rows();
            let full = self.ground_set().0;
            let target = self.rank().saturating_sub(1);
            // A support is minimal exactly when its complement is a hyperplane.
            let mut out: Vec<ElementSet> = self
                .rep
                .row_space_vectors()
                .into_iter()
                .filter(|&v| masked_rank(rows, full & !v) == target)
                .map(ElementSet)
                .collect();
            out.sort_by(|a, b| a.canonical_cmp(*b));
            out
        })
    }

    pub fn circuits(&self) -> Vec<ElementSet> {
        self.dual().cocircuits().to_vec()
    }

    pub fn dual(&self) -> BinaryMatroid {
        let rep = self
            .rep
            .dual_representation()
            .expect("stored representation has full row rank");
        BinaryMatroid {
            rep,
            labels: self.labels.clone(),
            name: self.name.as_ref().map(|n| format!("{n}*")),
            cocircuits: OnceLock::new(),
        }
    }

    pub fn cogirth(&self) -> Result<usize, MatroidError> {
        self.cocircuits().first().map(|c| c.len()).ok_or(MatroidError::NoCocircuits)
    }

    fn check_index(&self, e: usize) -> Result<(), MatroidError> {
        if e < self.len() {
            Ok(())
        } else {
            Err(MatroidError::UnknownElement(e.to_string()))
        }
    }

    pub fn is_loop(&self, e: usize) -> Result<bool, MatroidError> {
        self.check_index(e)?;
        Ok(self.column(e) == 0)
    }

    pub fn is_coloop(&self, e: usize) -> Result<bool, MatroidError> {
        self.check_index(e)?;
        let others = self.ground_set().difference(ElementSet::singleton(e));
        Ok(self.subset_rank(others) + 1 == self.rank())
    }

    /// Classes of equal nonzero columns, each in ground-set order.
    pub fn parallel_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<(u64, Vec<usize>)> = Vec::new();
        for e in 0..self.len() {
            let col = self.column(e);
            if col == 0 {
                continue;
            }
            match classes.iter_mut().find(|(c, _)| *c == col) {
                Some((_, members)) => members.push(e),
                None => classes.push((col, vec![e])),
            }
        }
        classes.into_iter().map(|(_, m)| m).collect()
    }

    fn restrict_columns(&self, keep: &[usize]) -> BinaryMatroid {
        let rep = self.rep.select_columns(keep);
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        BinaryMatroid::new(rep, labels).expect("restriction of a valid matroid")
    }

    /// Restriction to the elements of `x`, in ground-set order.
    pub fn restrict(&self, x: ElementSet) -> BinaryMatroid {
        let keep: Vec<usize> = x.iter().filter(|&i| i < self.len()).collect();
        self.restrict_columns(&keep)
    }

    pub fn delete(&self, e: usize) -> Result<BinaryMatroid, MatroidError> {
        self.check_index(e)?;
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != e).collect();
        Ok(self.restrict_columns(&keep))
    }

    pub fn contract(&self, e: usize) -> Result<BinaryMatroid, MatroidError> {
        self.check_index(e)?;
        if self.column(e) == 0 {
            return self.delete(e);
        }
        let rows = self.rep.rows();
        let p = rows.iter().position(|r| r >> e & 1 == 1).expect("nonzero column");
        let pivot = rows[p];
        let reduced: Vec<u64> = rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != p)
            .map(|(_, &r)| if r >> e & 1 == 1 { r ^ pivot } else { r })
            .collect();
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != e).collect();
        let rep = Gf2Matrix::from_rows(reduced, self.len())?.select_columns(&keep);
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        BinaryMatroid::new(rep, labels)
    }

    pub fn delete_label(&self, label: &str) -> Result<BinaryMatroid, MatroidError> {
        self.delete(self.index_of(label)?)
    }

    pub fn contract_label(&self, label: &str) -> Result<BinaryMatroid, MatroidError> {
        self.contract(self.index_of(label)?)
    }

    /// Removes loops and all but the first element of each parallel class.
    /// `kept[i]` is the element of `self` that became element `i` of the result.
    pub fn simplify(&self) -> (BinaryMatroid, Vec<usize>) {
        let mut kept: Vec<usize> = self.parallel_classes().iter().map(|c| c[0]).collect();
        kept.sort_unstable();
        (self.restrict_columns(&kept), kept)
    }

    pub fn is_simple(&self) -> bool {
        self.parallel_classes().len() == self.len()
    }

    /// Per-element sorted list of the sizes of the cocircuits containing it.
    fn element_signatures(&self) -> Vec<Vec<usize>> {
        let mut sig = vec![Vec::new(); self.len()];
        for c in self.cocircuits() {
            for e in c.iter() {
                sig[e].push(c.len());
            }
        }
        for s in &mut sig {
            s.sort_unstable();
        }
        sig
    }

    /// Searches for a bijection `phi` (`phi[e]` is the image of element `e`)
    /// carrying the cocircuits of `self` exactly onto those of `other`.
    pub fn isomorphism(&self, other: &BinaryMatroid) -> Option<Vec<usize>> {
        IsoSearch::new(self, other)?.run()
    }

    pub fn is_isomorphic(&self, other: &BinaryMatroid) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Parses the text format: `rank r`, `elements ...`, then `r` lines `row <bits>`.
    pub fn parse(text: &str) -> Result<BinaryMatroid, MatroidError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let perr = |line: usize, msg: &str| MatroidError::Parse { line, msg: msg.to_string() };

        let (ln, first) = lines.next().ok_or_else(|| perr(0, "empty input"))?;
        let rank: usize = first
            .strip_prefix("rank")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| perr(ln, "expected `rank <r>`"))?;
        let (ln, second) = lines.next().ok_or_else(|| perr(ln, "missing `elements` line"))?;
        let labels: Vec<String> = match second.split_whitespace().collect::<Vec<_>>().split_first() {
            Some((&"elements", rest)) => rest.iter().map(|s| s.to_string()).collect(),
            _ => return Err(perr(ln, "expected `elements <label> ...`")),
        };
        let mut rows = Vec::with_capacity(rank);
        for (ln, line) in lines {
            let bits = line
                .strip_prefix("row")
                .map(str::trim)
                .ok_or_else(|| perr(ln, "expected `row <bits>`"))?;
            rows.push(crate::gf2::parse_bit_row(bits, labels.len()).map_err(|_| {
                perr(ln, &format!("row must be {} characters of 0/1", labels.len()))
            })?);
        }
        if rows.len() != rank {
            return Err(perr(ln, &format!("declared rank {rank} but {} rows given", rows.len())));
        }
        let rep = Gf2Matrix::from_rows(rows, labels.len())?;
        if rep.rank() != rank {
            return Err(perr(ln, "rows are linearly dependent"));
        }
        BinaryMatroid::new(rep, labels)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("rank {}\nelements {}\n", self.rank(), self.labels.join(" "));
        for &r in self.rep.rows() {
            s.push_str("row ");
            s.push_str(&render_bit_row(r, self.len()));
            s.push('\n');
        }
        s
    }
}

struct IsoSearch<'a> {
    a: &'a BinaryMatroid,
    b: &'a BinaryMatroid,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    phi: Vec<usize>,
    used: u64,
}

impl<'a> IsoSearch<'a> {
    fn new(a: &'a BinaryMatroid, b: &'a BinaryMatroid) -> Option<Self> {
        let n = a.len();
        if n != b.len() || a.rank() != b.rank() {
            return None;
        }
        let (ca, cb) = (a.cocircuits(), b.cocircuits());
        if ca.len() != cb.len() || ca.iter().zip(cb).any(|(x, y)| x.len() != y.len()) {
            return None;
        }
        let (sa, sb) = (a.element_signatures(), b.element_signatures());
        let mut class_size: HashMap<&Vec<usize>, (usize, usize)> = HashMap::new();
        for s in &sa {
            class_size.entry(s).or_default().0 += 1;
        }
        for s in &sb {
            class_size.entry(s).or_default().1 += 1;
        }
        if class_size.values().any(|(x, y)| x != y) {
            return None;
        }
        let candidates: Vec<Vec<usize>> = sa
            .iter()
            .map(|s| (0..n).filter(|&f| sb[f] == *s).collect())
            .collect();

        // Rarest signature first, then prefer elements sharing many
        // cocircuits with those already placed.
        let mut order = Vec::with_capacity(n);
        let mut placed = 0u64;
        while order.len() < n {
            let next = (0..n)
                .filter(|&e| placed >> e & 1 == 0)
                .min_by_key(|&e| {
                    let touching = ca
                        .iter()
                        .filter(|c| c.contains(e) && c.0 & placed != 0)
                        .count();
                    (std::cmp::Reverse(touching), candidates[e].len(), e)
                })
                .expect("unplaced element exists");
            placed |= 1 << next;
            order.push(next);
        }
        Some(IsoSearch { a, b, order, candidates, phi: vec![usize::MAX; n], used: 0 })
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if self.extend(0, 0) {
            Some(self.phi)
        } else {
            None
        }
    }

    /// Traces of cocircuits on the placed elements must agree as multisets.
    fn consistent(&self, placed: u64) -> bool {
        let mut left: Vec<(usize, u64)> = self
            .a
            .cocircuits()
            .iter()
            .map(|c| {
                let img = ElementSet(c.0 & placed).iter().fold(0u64, |acc, e| acc | 1 << self.phi[e]);
                (c.len(), img)
            })
            .collect();
        let mut right: Vec<(usize, u64)> = self
            .b
            .cocircuits()
            .iter()
            .map(|d| (d.len(), d.0 & self.used))
            .collect();
        left.sort_unstable();
        right.sort_unstable();
        left == right
    }

    fn extend(&mut self, depth: usize, placed: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let e = self.order[depth];
        for i in 0..self.candidates[e].len() {
            let f = self.candidates[e][i];
            if self.used >> f & 1 == 1 {
                continue;
            }
            self.phi[e] = f;
            self.used |= 1 << f;
            let placed = placed | 1 << e;
            if self.consistent(placed) && self.extend(depth + 1, placed) {
                return true;
            }
            self.used &= !(1 << f);
            self.phi[e] = usize::MAX;
        }
        false
    }
}
