//! Partitions, columns, fillings and semistandard tableaux.
//!
//! A [`Filling`] is stored column-major, left to right, as the tensor
//! `C_r ⊗ ... ⊗ C_1`: the rightmost column is `C_1`. Column lengths weakly
//! decrease from left to right and every column strictly increases, so a
//! filling is semistandard exactly when its rows weakly increase.

use std::fmt;

use serde::ser::Serializer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Weight};

/// A partition with at most `n` nonzero parts, remembered together with `n`.
/// Trailing zeros are dropped internally.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>, n: usize) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "lambda must be weakly decreasing, got {parts:?}"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.len() > n {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has more than n = {n} nonzero parts"
            )));
        }
        Ok(Partition { parts, n })
    }

    pub fn empty(n: usize) -> Self {
        Partition { parts: vec![], n }
    }

    /// Parses a comma-separated list such as `2,1,0`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let parts = parse_list(s)?;
        if parts.len() > n {
            return Err(Error::InvalidPartition(format!(
                "lambda has {} entries but n = {n}",
                parts.len()
            )));
        }
        Self::new(parts, n)
    }

    pub fn from_weight(w: &Weight) -> Result<Self> {
        if w.entries().iter().any(|&x| x < 0) {
            return Err(Error::InvalidPartition(format!("negative entry in {w}")));
        }
        Self::new(w.entries().iter().map(|&x| x as usize).collect(), w.n())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `lambda_i` (1-based), zero past the last nonzero part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The length-`n` vector `(lambda_1, ..., lambda_n)`.
    pub fn to_weight(&self) -> Weight {
        Weight((1..=self.n).map(|i| self.part(i) as i32).collect())
    }

    /// Column lengths from left to right (the conjugate partition).
    pub fn column_lengths(&self) -> Vec<usize> {
        let width = self.parts.first().copied().unwrap_or(0);
        (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect()
    }

    /// `m_j = #{ i in [n] : lambda_i = j }`.
    pub fn multiplicity(&self, j: usize) -> usize {
        (1..=self.n).filter(|&i| self.part(i) == j).count()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=self.n.max(other.n)).all(|i| self.part(i) >= other.part(i))
    }

    /// `self + (k, ..., k)`.
    pub fn shifted(&self, k: usize) -> Partition {
        Partition {
            parts: (1..=self.n).map(|i| self.part(i) + k).collect(),
            n: self.n,
        }
    }

    /// All partitions with at most `n` parts and size at most `max_size`,
    /// by size then reverse lexicographic order.
    pub fn all_up_to(max_size: usize, n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for size in 0..=max_size {
            let mut acc = Vec::new();
            partitions_of(size, size, n, &mut Vec::new(), &mut acc);
            out.extend(acc.into_iter().map(|parts| Partition { parts, n }));
        }
        out
    }
}

fn partitions_of(
    rest: usize,
    max_part: usize,
    slots: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=rest.min(max_part)).rev() {
        cur.push(p);
        partitions_of(rest - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim())
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse()
                .map_err(|_| Error::Parse(format!("not a nonnegative integer: {x:?}")))
        })
        .collect()
}

/// Renders all `n` entries, e.g. `(2,1,0)`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = (1..=self.n).map(|i| self.part(i).to_string()).collect();
        write!(f, "({})", entries.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<usize> = (1..=self.n).map(|i| self.part(i)).collect();
        v.serialize(s)
    }
}

/// Interlacing test `lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...`.
pub fn horizontal_strip(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained(mu.to_string(), lambda.to_string()));
    }
    let rows = lambda.n.max(mu.n);
    Ok((1..rows).all(|i| mu.part(i) >= lambda.part(i + 1)))
}

/// A strictly increasing sequence `1 <= c_1 < ... < c_l <= n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    entries: Vec<u8>,
    n: usize,
}

impl Column {
    pub fn new(entries: Vec<u8>, n: usize) -> Result<Self> {
        let ok = !entries.is_empty()
            && entries.windows(2).all(|w| w[0] < w[1])
            && entries[0] >= 1
            && (*entries.last().unwrap() as usize) <= n;
        if !ok {
            return Err(Error::InvalidColumn(entries, n));
        }
        Ok(Column { entries, n })
    }

    /// The highest weight column `(1, ..., l)`, the minimum of the column poset.
    pub fn highest_weight(len: usize, n: usize) -> Self {
        Column {
            entries: (1..=len as u8).collect(),
            n,
        }
    }

    /// All columns of length `len`, in lexicographic order.
    pub fn enumerate(len: usize, n: usize) -> Result<Vec<Column>> {
        if len == 0 || len > n {
            return Err(Error::InvalidLength { len, n });
        }
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=len as u8).collect();
        loop {
            out.push(Column {
                entries: cur.clone(),
                n,
            });
            // advance to the next len-subset in lex order
            let Some(i) = (0..len)
                .rev()
                .find(|&i| (cur[i] as usize) < n - (len - 1 - i))
            else {
                break;
            };
            cur[i] += 1;
            for k in i + 1..len {
                cur[k] = cur[k - 1] + 1;
            }
        }
        Ok(out)
    }

    /// The column `sorted(w(1), ..., w(len))`.
    pub fn from_prefix(w: &Permutation, len: usize) -> Self {
        let mut entries = w.images()[..len].to_vec();
        entries.sort_unstable();
        Column { entries, n: w.n() }
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, value: usize) -> bool {
        self.entries.iter().any(|&x| x as usize == value)
    }

    pub fn is_highest_weight(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &x)| x as usize == k + 1)
    }

    /// The complementary column `[n] - C`.
    pub fn complement(&self) -> Vec<u8> {
        (1..=self.n as u8)
            .filter(|x| !self.entries.contains(x))
            .collect()
    }

    /// The vector `e_{c_1} + ... + e_{c_l}`.
    pub fn vector(&self) -> Weight {
        let mut v = vec![0; self.n];
        for &x in &self.entries {
            v[x as usize - 1] = 1;
        }
        Weight(v)
    }

    /// `(C, alpha_j)`: +1 if `j in C, j+1 not in C`, -1 for the reverse, else 0.
    pub fn pairing_simple(&self, j: usize) -> i32 {
        i32::from(self.contains(j)) - i32::from(self.contains(j + 1))
    }

    /// `s_j C`.
    pub fn reflected(&self, j: usize) -> Column {
        let (a, b) = (j as u8, j as u8 + 1);
        match (self.contains(j), self.contains(j + 1)) {
            (true, false) | (false, true) => {
                let mut entries: Vec<u8> = self
                    .entries
                    .iter()
                    .map(|&x| {
                        if x == a {
                            b
                        } else if x == b {
                            a
                        } else {
                            x
                        }
                    })
                    .collect();
                entries.sort_unstable();
                Column { entries, n: self.n }
            }
            _ => self.clone(),
        }
    }

    /// `(s_j C, sigma^j_C)` with `sigma^j_C = -1` exactly when `s_j C > C`.
    pub fn reflect(&self, j: usize) -> (Column, i8) {
        (self.reflected(j), self.sign(j))
    }

    /// `sigma^j_C`.
    pub fn sign(&self, j: usize) -> i8 {
        if self.pairing_simple(j) == 1 {
            -1
        } else {
            1
        }
    }

    /// Entrywise order `e_i <= f_i`.
    pub fn leq(&self, other: &Column) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    /// The minimal coset representative `u_C`, sending `1..l` to the entries
    /// of `C` and `l+1..n` to the complement, both increasing.
    pub fn coset_rep(&self) -> Permutation {
        let mut images = self.entries.clone();
        images.extend(self.complement());
        Permutation::from_images(images).expect("column entries and complement form a bijection")
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", e.join(","))
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The Hasse diagram of the column poset `B(omega_len)` as a DOT digraph.
/// Each edge `C -> s_j C` points upward and is labeled `s_j`.
pub fn hasse_dot(len: usize, n: usize) -> Result<String> {
    let cols = Column::enumerate(len, n)?;
    let name = |c: &Column| {
        c.entries
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut out = format!("digraph \"B(omega_{len}), n={n}\" {{\n  rankdir=BT;\n");
    for c in &cols {
        out.push_str(&format!("  \"{}\";\n", name(c)));
    }
    for c in &cols {
        for j in 1..n {
            if c.pairing_simple(j) == 1 {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"s{j}\"];\n",
                    name(c),
                    name(&c.reflected(j))
                ));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// A tensor `C_r ⊗ ... ⊗ C_1` of columns, stored left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    columns: Vec<Column>,
    n: usize,
}

impl Filling {
    pub fn new(columns: Vec<Column>, n: usize) -> Result<Self> {
        for c in &columns {
            if c.n != n {
                return Err(Error::RankMismatch(c.n, n));
            }
        }
        if columns.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::ColumnOrder(
                columns.iter().map(Column::len).collect(),
            ));
        }
        Ok(Filling { columns, n })
    }

    pub fn empty(n: usize) -> Self {
        Filling { columns: vec![], n }
    }

    pub fn single(column: Column) -> Self {
        let n = column.n;
        Filling {
            columns: vec![column],
            n,
        }
    }

    /// Builds a filling from its rows, top to bottom.
    pub fn from_rows(rows: &[Vec<u8>], n: usize) -> Result<Self> {
        let rows: Vec<&Vec<u8>> = rows.iter().filter(|r| !r.is_empty()).collect();
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::Parse("row lengths must weakly decrease".into()));
        }
        let width = rows.first().map_or(0, |r| r.len());
        let columns = (0..width)
            .map(|c| {
                let entries = rows
                    .iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect();
                Column::new(entries, n)
            })
            .collect::<Result<Vec<_>>>()?;
        Filling::new(columns, n)
    }

    /// Parses the row syntax `1,1/3`.
    pub fn parse_rows(s: &str, n: usize) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|r| {
                parse_list(r)?
                    .into_iter()
                    .map(|x| {
                        u8::try_from(x).map_err(|_| Error::Parse(format!("entry {x} too large")))
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&rows, n)
    }

    /// `T^0_lambda`, whose `i`-th row is constantly `i`.
    pub fn highest_weight(shape: &Partition) -> Self {
        Filling {
            columns: shape
                .column_lengths()
                .into_iter()
                .map(|l| Column::highest_weight(l, shape.n))
                .collect(),
            n: shape.n,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Columns from left to right (`C_r` first).
    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// `C_k`, counting from the right starting at 1.
    pub fn column(&self, k: usize) -> &Column {
        &self.columns[self.columns.len() - k]
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        self.columns.iter().map(Column::len).collect()
    }

    pub fn shape(&self) -> Partition {
        let rows = self.columns.first().map_or(0, Column::len);
        let parts = (0..rows)
            .map(|i| self.columns.iter().filter(|c| c.len() > i).count())
            .collect();
        Partition { parts, n: self.n }
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        let rows = self.columns.first().map_or(0, Column::len);
        (0..rows)
            .map(|i| {
                self.columns
                    .iter()
                    .take_while(|c| c.len() > i)
                    .map(|c| c.entries[i])
                    .collect()
            })
            .collect()
    }

    /// Rows weakly increase (columns strictly increase by construction).
    pub fn is_semistandard(&self) -> bool {
        self.columns.windows(2).all(|w| {
            let (left, right) = (&w[0], &w[1]);
            left.entries.iter().zip(&right.entries).all(|(a, b)| a <= b)
        })
    }

    pub fn is_highest_weight(&self) -> bool {
        self.columns.iter().all(Column::is_highest_weight)
    }

    /// Content vector `(c_1, ..., c_n)` with `c_i = #T^{-1}(i)`.
    pub fn weight(&self) -> Weight {
        let mut v = vec![0; self.n];
        for c in &self.columns {
            for &x in &c.entries {
                v[x as usize - 1] += 1;
            }
        }
        Weight(v)
    }

    /// `Omega^j_k(T)`: applies `s_j` to columns `C_k, ..., C_1`.
    pub fn omega(&self, j: usize, k: usize) -> Filling {
        let r = self.columns.len();
        let columns = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if r - i <= k {
                    c.reflected(j)
                } else {
                    c.clone()
                }
            })
            .collect();
        Filling { columns, n: self.n }
    }

    /// `self ⊗ other`: columns of `self` on the left.
    pub fn tensor(&self, other: &Filling) -> Result<Filling> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        Filling::new(columns, self.n)
    }

    /// Splits `T = S ⊗ T^0_mu` with `T^0_mu` the longest highest-weight
    /// tail of columns on the right.
    pub fn split_highest_tail(&self) -> (Filling, Partition) {
        let tail = self
            .columns
            .iter()
            .rev()
            .take_while(|c| c.is_highest_weight())
            .count();
        let cut = self.columns.len() - tail;
        let head = Filling {
            columns: self.columns[..cut].to_vec(),
            n: self.n,
        };
        let tail = Filling {
            columns: self.columns[cut..].to_vec(),
            n: self.n,
        };
        (head, tail.shape())
    }

    /// Shape of the sub-tableau of entries `<= i`.
    pub fn shape_below(&self, i: usize) -> Partition {
        let parts = self
            .rows()
            .iter()
            .map(|r| r.iter().filter(|&&x| x as usize <= i).count())
            .collect();
        Partition::new(parts, self.n)
            .expect("entries <= i of a semistandard tableau form a partition")
    }

    /// Row strings in `ytableaushort` style, e.g. `12,3`.
    pub fn ytableau(&self) -> String {
        self.rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<String>())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// All semistandard tableaux of the given shape with entries in `[n]`,
    /// in lexicographic order of the row reading word.
    pub fn enumerate_ssyt(shape: &Partition) -> Vec<Filling> {
        let n = shape.n;
        let parts = shape.parts().to_vec();
        let cols = shape.column_lengths();
        let mut rows: Vec<Vec<u8>> = parts.iter().map(|&p| vec![0; p]).collect();
        let cells: Vec<(usize, usize)> = parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |c| (i, c)))
            .collect();
        let mut out = Vec::new();
        fill_ssyt(&cells, 0, &cols, n, &mut rows, &mut out);
        out
    }

    /// Every column-strict filling of the given shape, semistandard or not:
    /// the full tensor product `B(omega_{l_r}) ⊗ ... ⊗ B(omega_{l_1})`.
    pub fn enumerate_column_strict(shape: &Partition) -> Vec<Filling> {
        let n = shape.n;
        let mut out = vec![Filling::empty(n)];
        for len in shape.column_lengths() {
            let cols = Column::enumerate(len, n).expect("column lengths lie in [1, n]");
            out = out
                .iter()
                .flat_map(|f| {
                    cols.iter().map(move |c| {
                        let mut columns = f.columns.clone();
                        columns.push(c.clone());
                        Filling { columns, n }
                    })
                })
                .collect();
        }
        out
    }
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    idx: usize,
    cols: &[usize],
    n: usize,
    rows: &mut Vec<Vec<u8>>,
    out: &mut Vec<Filling>,
) {
    if idx == cells.len() {
        out.push(Filling::from_rows(rows, n).expect("generated rows form a valid filling"));
        return;
    }
    let (i, c) = cells[idx];
    let left = if c > 0 { rows[i][c - 1] } else { 1 };
    let above = if i > 0 { rows[i - 1][c] + 1 } else { 1 };
    let lo = left.max(above) as usize;
    // room must remain for the strictly increasing entries below
    let hi = n - (cols[c] - 1 - i);
    for v in lo..=hi {
        rows[i][c] = v as u8;
        fill_ssyt(cells, idx + 1, cols, n, rows, out);
    }
}

/// Renders in row notation, e.g. `[[1,1],[3]]`.
impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let e: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", e.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// JSON form: an array of rows.
impl Serialize for Filling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(e: &[u8], n: usize) -> Column {
        Column::new(e.to_vec(), n).unwrap()
    }

    fn rows(r: &[&[u8]], n: usize) -> Filling {
        let r: Vec<Vec<u8>> = r.iter().map(|x| x.to_vec()).collect();
        Filling::from_rows(&r, n).unwrap()
    }

    #[test]
    fn column_enumeration() {
        assert_eq!(Column::enumerate(3, 3).unwrap(), vec![col(&[1, 2, 3], 3)]);
        let b3 = Column::enumerate(3, 5).unwrap();
        assert_eq!(b3.len(), 10);
        assert_eq!(b3.first().unwrap(), &col(&[1, 2, 3], 5));
        assert_eq!(b3.last().unwrap(), &col(&[3, 4, 5], 5));
        assert!(b3.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(
            Column::enumerate(1, 3).unwrap(),
            vec![col(&[1], 3), col(&[2], 3), col(&[3], 3)]
        );
        assert_eq!(
            Column::enumerate(0, 3),
            Err(Error::InvalidLength { len: 0, n: 3 })
        );
        assert_eq!(
            Column::enumerate(4, 3),
            Err(Error::InvalidLength { len: 4, n: 3 })
        );
    }

    #[test]
    fn column_reflections() {
        let c = col(&[1, 2, 5], 5);
        assert_eq!(c.reflect(2), (col(&[1, 3, 5], 5), -1));
        assert_eq!(c.reflect(4), (col(&[1, 2, 4], 5), 1));
        assert_eq!(c.reflect(1), (c.clone(), 1));
        assert_eq!(c.reflect(3), (c.clone(), 1));
        let c = col(&[1, 3, 4, 7], 7);
        let signs: Vec<i8> = (1..=5).map(|j| c.sign(j)).collect();
        assert_eq!(signs, vec![-1, 1, 1, -1, 1]);
    }

    #[test]
    fn column_order() {
        let e = col(&[2, 3, 5], 5);
        assert!(e.leq(&e).unwrap());
        for c in Column::enumerate(3, 5).unwrap() {
            assert!(col(&[1, 2, 3], 5).leq(&c).unwrap());
        }
        let f = col(&[1, 4, 5], 5);
        assert!(!e.leq(&f).unwrap() && !f.leq(&e).unwrap());
        assert_eq!(e.leq(&col(&[1], 5)), Err(Error::LengthMismatch(3, 1)));
    }

    #[test]
    fn coset_reps_of_columns() {
        assert!(col(&[1, 2], 3).coset_rep().is_identity());
        assert_eq!(col(&[1, 3], 3).coset_rep(), Permutation::simple(3, 2));
        assert_eq!(col(&[2], 3).coset_rep(), Permutation::simple(3, 1));
        assert_eq!(col(&[3], 3).coset_rep(), Permutation::from_word(3, &[2, 1]));
        assert_eq!(
            col(&[2, 3], 3).coset_rep(),
            Permutation::from_word(3, &[1, 2])
        );
    }

    #[test]
    fn semistandardness() {
        assert!(Filling::single(col(&[2, 3], 3)).is_semistandard());
        // rows [1 1 / 3 2]: the second row decreases
        let t = Filling::new(vec![col(&[1, 3], 3), col(&[1, 2], 3)], 3).unwrap();
        assert_eq!(t.rows(), vec![vec![1, 1], vec![3, 2]]);
        assert!(!t.is_semistandard());
        let shape = Partition::new(vec![3, 2], 3).unwrap();
        assert!(Filling::highest_weight(&shape).is_semistandard());
    }

    #[test]
    fn ssyt_counts() {
        let p = |v: Vec<usize>, n| Partition::new(v, n).unwrap();
        let b21 = Filling::enumerate_ssyt(&p(vec![2, 1, 0], 3));
        assert_eq!(b21.len(), 8);
        let expect = [
            "11,2", "11,3", "12,2", "12,3", "13,2", "13,3", "22,3", "23,3",
        ];
        let got: Vec<String> = b21.iter().map(Filling::ytableau).collect();
        assert_eq!(got, expect);
        assert_eq!(Filling::enumerate_ssyt(&p(vec![1, 1, 1, 1], 4)).len(), 1);
        assert_eq!(Filling::enumerate_ssyt(&p(vec![3, 2, 0], 3)).len(), 15);
        assert_eq!(Filling::enumerate_ssyt(&Partition::empty(3)).len(), 1);
    }

    #[test]
    fn omega_operator() {
        let t = Filling::new(vec![col(&[1, 3], 3), col(&[2], 3)], 3).unwrap();
        assert_eq!(
            t.omega(1, 1),
            Filling::new(vec![col(&[1, 3], 3), col(&[1], 3)], 3).unwrap()
        );
        assert_eq!(t.omega(1, 2).omega(1, 2), t);
        assert_eq!(
            t.omega(2, 2),
            Filling::new(vec![col(&[1, 2], 3), col(&[3], 3)], 3).unwrap()
        );
    }

    #[test]
    fn content_vectors() {
        let shape = Partition::new(vec![2, 1, 0], 3).unwrap();
        assert_eq!(Filling::highest_weight(&shape).weight(), shape.to_weight());
        assert_eq!(rows(&[&[1, 2], &[3]], 3).weight(), Weight(vec![1, 1, 1]));
        assert_eq!(rows(&[&[1, 1], &[3]], 3).weight(), Weight(vec![2, 0, 1]));
    }

    #[test]
    fn strips() {
        let p = |v: Vec<usize>| Partition::new(v, 3).unwrap();
        assert!(horizontal_strip(&p(vec![2, 1]), &p(vec![2, 1])).unwrap());
        assert!(horizontal_strip(&p(vec![2, 1]), &p(vec![2])).unwrap());
        assert!(!horizontal_strip(&p(vec![2, 2]), &p(vec![1])).unwrap());
        assert!(matches!(
            horizontal_strip(&p(vec![1]), &p(vec![2])),
            Err(Error::NotContained(..))
        ));
    }

    #[test]
    fn partitions_validate() {
        assert!(Partition::parse("1,2,0", 3).is_err());
        assert!(Partition::parse("1,1,1,1", 3).is_err());
        let p = Partition::parse("2,1,0", 3).unwrap();
        assert_eq!(p.parts(), &[2, 1]);
        assert_eq!(p.to_string(), "(2,1,0)");
        assert_eq!(p.column_lengths(), vec![2, 1]);
        assert_eq!(p.multiplicity(0), 1);
        assert_eq!(Partition::all_up_to(3, 2).len(), 1 + 1 + 2 + 2);
    }

    #[test]
    fn row_parsing_and_rendering() {
        let t = Filling::parse_rows("1,1/3", 3).unwrap();
        assert_eq!(t.to_string(), "[[1,1],[3]]");
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,1],[3]]");
        assert!(Filling::parse_rows("1,1/1", 3).is_err());
        assert!(Filling::parse_rows("1/2,3", 3).is_err());
    }

    #[test]
    fn highest_tail_split() {
        let t = rows(&[&[1, 1, 1], &[2, 3]], 3);
        let (head, mu) = t.split_highest_tail();
        assert_eq!(head.columns(), &[col(&[1, 2], 3), col(&[1, 3], 3)]);
        assert_eq!(mu, Partition::new(vec![1], 3).unwrap());
    }

    #[test]
    fn hasse_diagram_of_b_omega3() {
        let dot = hasse_dot(3, 5).unwrap();
        assert_eq!(dot.matches(" -> ").count(), 12);
        assert_eq!(
            dot.lines()
                .filter(|l| l.trim_end().ends_with("\";"))
                .count(),
            10
        );
        assert!(dot.contains("\"1,2,3\" -> \"1,2,4\" [label=\"s3\"]"));
    }
}
