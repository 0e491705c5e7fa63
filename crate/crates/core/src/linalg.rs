//! Exact linear algebra over Q on the monomial basis of a degree slice.
//!
//! Vectors are sparse lists of (column, coefficient) pairs sorted by
//! column. Rank queries use a plain incremental row echelon; kernel and
//! solve queries additionally track how each echelon row was combined
//! from the inserted vectors.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{Element, FreeCGA, Monomial, Ratio};
use crate::error::EngineError;

/// Sparse vector: strictly increasing column indices, nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(usize, Ratio)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(col: usize) -> Self {
        SparseVec {
            entries: vec![(col, Ratio::one())],
        }
    }

    /// Builds from unsorted (column, coefficient) pairs, merging duplicates.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, Ratio)>,
    {
        let mut map: BTreeMap<usize, Ratio> = BTreeMap::new();
        for (c, v) in pairs {
            let entry = map.entry(c).or_insert_with(Ratio::zero);
            *entry += v;
        }
        SparseVec {
            entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Ratio)] {
        &self.entries
    }

    pub fn leading(&self) -> Option<(usize, &Ratio)> {
        self.entries.first().map(|(c, v)| (*c, v))
    }

    pub fn coeff(&self, col: usize) -> Option<&Ratio> {
        self.entries
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn scale(&mut self, c: &Ratio) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, v) in &mut self.entries {
            *v *= c;
        }
    }

    /// self += c * other, merging sorted entry lists.
    pub fn add_scaled(&mut self, other: &SparseVec, c: &Ratio) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = self.entries.iter();
        let mut b = other.entries.iter();
        let mut na = a.next();
        let mut nb = b.next();
        loop {
            match (na, nb) {
                (None, None) => break,
                (Some((ca, va)), None) => {
                    out.push((*ca, va.clone()));
                    na = a.next();
                }
                (None, Some((cb, vb))) => {
                    out.push((*cb, vb * c));
                    nb = b.next();
                }
                (Some((ca, va)), Some((cb, vb))) => {
                    if ca < cb {
                        out.push((*ca, va.clone()));
                        na = a.next();
                    } else if cb < ca {
                        out.push((*cb, vb * c));
                        nb = b.next();
                    } else {
                        let v = va + vb * c;
                        if !v.is_zero() {
                            out.push((*ca, v));
                        }
                        na = a.next();
                        nb = b.next();
                    }
                }
            }
        }
        self.entries = out;
    }

    fn make_monic(&mut self) {
        if let Some((_, lead)) = self.leading() {
            let inv = lead.recip();
            self.scale(&inv);
        }
    }
}

/// Incremental row echelon for rank and span-membership queries.
#[derive(Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    fn reduce(&self, v: &mut SparseVec) {
        while let Some((col, lead)) = v.leading() {
            match self.pivots.get(&col) {
                Some(p) => {
                    let c = -lead.clone();
                    v.add_scaled(p, &c);
                }
                None => break,
            }
        }
    }

    /// Inserts a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        self.reduce(&mut v);
        match v.leading() {
            None => false,
            Some((col, _)) => {
                v.make_monic();
                self.pivots.insert(col, v);
                true
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }
}

/// Row echelon that keeps rows fully reduced against each other and
/// remembers, for every row, the combination of inserted vectors that
/// produced it. Supports normal forms, canonical kernels and solving.
#[derive(Default)]
pub struct TrackedEchelon {
    /// Sorted by pivot column; `combo` expresses `row` over inserted vectors.
    rows: Vec<TrackedRow>,
    inserted: usize,
}

struct TrackedRow {
    pivot: usize,
    row: SparseVec,
    combo: SparseVec,
}

impl TrackedEchelon {
    pub fn new() -> Self {
        TrackedEchelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.pivot).collect()
    }

    fn reduce_tracked(&self, v: &mut SparseVec, combo: &mut SparseVec) {
        // Rows are fully reduced, so eliminating one pivot column never
        // changes the coefficient at another: collect all hits up front.
        let hits: Vec<(usize, Ratio)> = v
            .entries()
            .iter()
            .filter_map(|(col, coeff)| {
                self.rows
                    .binary_search_by_key(col, |r| r.pivot)
                    .ok()
                    .map(|i| (i, coeff.clone()))
            })
            .collect();
        for (i, coeff) in hits {
            let c = -coeff;
            v.add_scaled(&self.rows[i].row, &c);
            combo.add_scaled(&self.rows[i].combo, &c);
        }
        debug_assert!(v
            .entries()
            .iter()
            .all(|(col, _)| self.rows.binary_search_by_key(col, |r| r.pivot).is_err()));
    }

    /// Inserts vector number `inserted` (its index in the companion basis);
    /// returns the kernel combination when the vector was dependent.
    pub fn insert(&mut self, v: SparseVec) -> Option<SparseVec> {
        let idx = self.inserted;
        self.inserted += 1;
        let mut row = v;
        let mut combo = SparseVec::unit(idx);
        self.reduce_tracked(&mut row, &mut combo);
        match row.leading() {
            None => Some(combo),
            Some((pivot, lead)) => {
                let inv = lead.recip();
                row.scale(&inv);
                combo.scale(&inv);
                // keep older rows reduced against the new pivot
                for r in &mut self.rows {
                    if let Some(c) = r.row.coeff(pivot) {
                        let c = -c.clone();
                        r.row.add_scaled(&row, &c);
                        r.combo.add_scaled(&combo, &c);
                    }
                }
                let at = self
                    .rows
                    .binary_search_by_key(&pivot, |r| r.pivot)
                    .unwrap_err();
                self.rows.insert(at, TrackedRow { pivot, row, combo });
                None
            }
        }
    }

    /// Normal form of `v` modulo the span: all pivot columns eliminated.
    pub fn normal_form(&self, v: &SparseVec) -> SparseVec {
        let mut w = v.clone();
        let mut combo = SparseVec::zero();
        self.reduce_tracked(&mut w, &mut combo);
        w
    }

    /// Writes `v` as a combination of the inserted vectors, if possible.
    /// The result maps inserted-vector index to coefficient.
    pub fn express(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut w = v.clone();
        let mut combo = SparseVec::zero();
        self.reduce_tracked(&mut w, &mut combo);
        if w.is_zero() {
            let mut neg = combo;
            neg.scale(&-Ratio::one());
            Some(neg)
        } else {
            None
        }
    }
}

/// A degree slice of a free graded-commutative algebra: the canonical
/// monomial basis of one degree, with coordinate maps in both directions.
pub struct DegreeSlice {
    algebra: Arc<FreeCGA>,
    degree: u32,
    basis: Arc<[Monomial]>,
    index: BTreeMap<Monomial, usize>,
}

impl DegreeSlice {
    pub fn new(algebra: Arc<FreeCGA>, degree: u32) -> Self {
        let basis = algebra.monomial_basis(degree);
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        DegreeSlice {
            algebra,
            degree,
            basis,
            index,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Coordinates of a homogeneous element of this slice's degree.
    pub fn vector_of(&self, e: &Element) -> Result<SparseVec, EngineError> {
        let mut pairs = Vec::with_capacity(e.term_count());
        for (m, c) in e.terms() {
            let i = self.index.get(m).ok_or_else(|| {
                let found = m.degree(&self.algebra);
                EngineError::DegreeMismatch {
                    expected: self.degree,
                    found,
                }
            })?;
            pairs.push((*i, c.clone()));
        }
        Ok(SparseVec::from_pairs(pairs))
    }

    pub fn element_of(&self, v: &SparseVec) -> Element {
        Element::from_terms(
            self.algebra.clone(),
            v.entries()
                .iter()
                .map(|(i, c)| (self.basis[*i].clone(), c.clone())),
        )
    }
}

/// Exact dimension of the span of homogeneous elements inside one degree
/// slice. Zero elements are allowed and contribute nothing; a nonzero
/// element of any other degree is rejected.
pub fn slice_rank(
    algebra: &Arc<FreeCGA>,
    elements: &[Element],
    degree: u32,
) -> Result<usize, EngineError> {
    let slice = DegreeSlice::new(algebra.clone(), degree);
    let mut ech = Echelon::new();
    for e in elements {
        if e.is_zero() {
            continue;
        }
        if !e.is_homogeneous() {
            return Err(EngineError::NonHomogeneous("slice_rank".into()));
        }
        ech.insert(slice.vector_of(e)?);
    }
    Ok(ech.rank())
}
