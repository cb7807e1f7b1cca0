//! Classical tableau combinatorics, kept independent of the hive code.
//!
//! Conventions (English notation for straight and skew shapes):
//!
//! - The row word of a tableau is read left to right in rows, bottom row
//!   first. LR skew tableaux are recognized by their row word being a reverse
//!   lattice word, which is the same as the usual right-to-left, top-to-bottom
//!   reading being a lattice word.
//! - A [`ContraTableau`] of shape `lambda` is drawn rotated by 180 degrees:
//!   row `k` from the bottom holds `lambda_k` boxes, rows aligned on the
//!   right. Its word is read left to right, bottom row first.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::{HiveError, Partition};

/// A word in the positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn is_reverse_lattice(&self) -> bool {
        is_reverse_lattice(&self.0)
    }
}

/// True iff for every split point and every `i >= 2`, the letters right of
/// the split contain no more `i`s than `(i-1)`s.
pub fn is_reverse_lattice(word: &[u32]) -> bool {
    let mut counts: Vec<u64> = Vec::new();
    for &x in word.iter().rev() {
        let x = x as usize;
        if x == 0 {
            return false;
        }
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
        if x >= 2 && counts[x - 1] > counts[x - 2] {
            return false;
        }
    }
    true
}

/// A semistandard tableau of straight shape in English notation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, HiveError> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(HiveError::InvalidTableau(format!(
                "row lengths not decreasing: {rows:?}"
            )));
        }
        check_semistandard(&rows.iter().map(|r| (0, r.as_slice())).collect::<Vec<_>>())?;
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u64).collect()).expect("tableau shape")
    }

    pub fn word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Row insertion: `x` bumps the leftmost entry strictly greater than it.
    pub fn row_insert(&mut self, mut x: u32) {
        for row in self.rows.iter_mut() {
            match row.iter().position(|&y| y > x) {
                Some(pos) => x = core::mem::replace(&mut row[pos], x),
                None => {
                    row.push(x);
                    return;
                }
            }
        }
        self.rows.push(vec![x]);
    }

    /// Column insertion: `x` bumps the topmost entry `>= x` of the column,
    /// which moves on to the next column.
    pub fn column_insert(&mut self, mut x: u32) {
        let mut col = 0;
        loop {
            let height = self.rows.iter().take_while(|r| r.len() > col).count();
            match (0..height).find(|&r| self.rows[r][col] >= x) {
                Some(r) => {
                    x = core::mem::replace(&mut self.rows[r][col], x);
                    col += 1;
                }
                None => {
                    if height == self.rows.len() {
                        self.rows.push(vec![x]);
                    } else {
                        self.rows[height].push(x);
                    }
                    return;
                }
            }
        }
    }

    /// The insertion tableau `P(w)`; two words are Knuth equivalent iff they
    /// have the same one.
    pub fn from_word(word: &Word) -> Tableau {
        let mut t = Tableau::empty();
        for &x in &word.0 {
            t.row_insert(x);
        }
        t
    }

    pub fn content(&self) -> Vec<u64> {
        content_of(self.rows.iter().flatten().copied())
    }
}

/// `U(mu)`: row `i` holds `mu_i` copies of `i`.
pub fn superstandard(mu: &Partition) -> Tableau {
    Tableau {
        rows: mu
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![i as u32 + 1; len as usize])
            .collect(),
    }
}

/// The product `r · s` in the plactic monoid: column-insert the letters of
/// `w(r)` into `s`, last letter first.
pub fn plactic_product(r: &Tableau, s: &Tableau) -> Tableau {
    let mut out = s.clone();
    for &x in r.word().0.iter().rev() {
        out.column_insert(x);
    }
    out
}

pub fn knuth_equivalent(a: &Word, b: &Word) -> bool {
    Tableau::from_word(a) == Tableau::from_word(b)
}

fn content_of(letters: impl Iterator<Item = u32>) -> Vec<u64> {
    let mut counts = Vec::new();
    for x in letters {
        let x = x as usize;
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
    }
    counts
}

/// Rows given as `(first column, entries)`; checks positivity, weak increase
/// along rows and strict increase down columns.
fn check_semistandard(rows: &[(usize, &[u32])]) -> Result<(), HiveError> {
    for (r, &(start, row)) in rows.iter().enumerate() {
        if row.contains(&0) {
            return Err(HiveError::InvalidTableau(
                "entries must be positive".to_string(),
            ));
        }
        if row.windows(2).any(|w| w[0] > w[1]) {
            return Err(HiveError::InvalidTableau(format!(
                "row {r} not weakly increasing"
            )));
        }
        if r > 0 {
            let (above_start, above) = rows[r - 1];
            for (offset, &x) in row.iter().enumerate() {
                let col = start + offset;
                if col >= above_start
                    && col < above_start + above.len()
                    && above[col - above_start] >= x
                {
                    return Err(HiveError::InvalidTableau(format!(
                        "column {col} not strictly increasing at row {r}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// A skew shape `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, HiveError> {
        if !outer.contains(&inner) {
            return Err(HiveError::InvalidShape(format!(
                "{inner} is not inside {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    /// `(first column, length)` of each row of cells.
    fn row_spans(&self) -> Vec<(usize, usize)> {
        (1..=self.outer.len())
            .map(|r| {
                let start = self.inner.part(r) as usize;
                (start, self.outer.part(r) as usize - start)
            })
            .collect()
    }
}

/// A semistandard filling of a skew shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    /// `rows[r]` fills the cells `inner_r .. outer_r` of English row `r`.
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self, HiveError> {
        let spans = shape.row_spans();
        let mut rows = rows;
        while rows.len() > spans.len() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        rows.resize(spans.len(), Vec::new());
        if spans
            .iter()
            .zip(&rows)
            .any(|(&(_, len), row)| row.len() != len)
        {
            return Err(HiveError::InvalidTableau(format!(
                "rows {rows:?} do not fill {}/{}",
                shape.outer, shape.inner
            )));
        }
        check_semistandard(
            &spans
                .iter()
                .zip(&rows)
                .map(|(&(start, _), row)| (start, row.as_slice()))
                .collect::<Vec<_>>(),
        )?;
        Ok(SkewTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Rows padded on the left with `None` for the inner cells.
    pub fn grid(&self) -> Vec<Vec<Option<u32>>> {
        self.shape
            .row_spans()
            .iter()
            .zip(&self.rows)
            .map(|(&(start, _), row)| {
                core::iter::repeat_n(None, start)
                    .chain(row.iter().map(|&x| Some(x)))
                    .collect()
            })
            .collect()
    }

    pub fn word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    pub fn content(&self) -> Vec<u64> {
        content_of(self.rows.iter().flatten().copied())
    }

    /// Jeu-de-taquin rectification; `choose` picks which inner corner to slide
    /// into among the candidates (given as English row indices).
    pub fn rectify_with(&self, mut choose: impl FnMut(&[usize]) -> usize) -> Tableau {
        let mut grid = self.grid();
        let mut inner: Vec<usize> = (1..=grid.len())
            .map(|r| self.shape.inner.part(r) as usize)
            .collect();
        loop {
            let corners: Vec<usize> = (0..inner.len())
                .filter(|&r| inner[r] > 0 && inner.get(r + 1).copied().unwrap_or(0) < inner[r])
                .collect();
            if corners.is_empty() {
                break;
            }
            let r0 = corners[choose(&corners) % corners.len()];
            inner[r0] -= 1;
            let (mut r, mut c) = (r0, inner[r0]);
            loop {
                let right = grid[r].get(c + 1).copied().flatten();
                let below = grid
                    .get(r + 1)
                    .and_then(|row| row.get(c))
                    .copied()
                    .flatten();
                match (right, below) {
                    (None, None) => {
                        grid[r].pop();
                        break;
                    }
                    (Some(a), Some(b)) if a < b => {
                        grid[r][c] = Some(a);
                        grid[r][c + 1] = None;
                        c += 1;
                    }
                    (Some(a), None) => {
                        grid[r][c] = Some(a);
                        grid[r][c + 1] = None;
                        c += 1;
                    }
                    (_, Some(b)) => {
                        grid[r][c] = Some(b);
                        grid[r + 1][c] = None;
                        r += 1;
                    }
                }
            }
        }
        Tableau {
            rows: grid
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|x| x.expect("rectified cell"))
                        .collect::<Vec<_>>()
                })
                .filter(|row: &Vec<u32>| !row.is_empty())
                .collect(),
        }
    }

    /// Rectification sliding into the lowest inner corner first.
    pub fn rectify(&self) -> Tableau {
        self.rectify_with(|corners| corners.len() - 1)
    }
}

/// All LR skew tableaux of the given shape and content, in the order the
/// cells are filled (rows top to bottom, right to left within a row, letters
/// increasing).
pub fn enumerate_lr_skew(
    shape: &SkewShape,
    content: &Partition,
) -> Result<Vec<SkewTableau>, HiveError> {
    if shape.size() != content.size() {
        return Err(HiveError::InvalidShape(format!(
            "{}/{} has {} cells but content {content} has size {}",
            shape.outer,
            shape.inner,
            shape.size(),
            content.size()
        )));
    }
    let spans = shape.row_spans();
    // cells in filling order: (row, col)
    let cells: Vec<(usize, usize)> = spans
        .iter()
        .enumerate()
        .flat_map(|(r, &(start, len))| (start..start + len).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = spans
        .iter()
        .map(|&(start, len)| vec![0; start + len])
        .collect();
    let letters = content.len() as u32;
    let mut counts = vec![0u64; content.len() + 1];
    let mut out = Vec::new();

    struct Ctx<'a> {
        cells: &'a [(usize, usize)],
        spans: &'a [(usize, usize)],
        content: &'a Partition,
        letters: u32,
    }

    fn fill(
        ctx: &Ctx<'_>,
        pos: usize,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u64>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if pos == ctx.cells.len() {
            out.push(
                grid.iter()
                    .zip(ctx.spans)
                    .map(|(row, &(start, _))| row[start..].to_vec())
                    .collect(),
            );
            return;
        }
        let (r, c) = ctx.cells[pos];
        let right = grid[r].get(c + 1).copied();
        let above =
            (r > 0 && c >= ctx.spans[r - 1].0 && c < grid[r - 1].len()).then(|| grid[r - 1][c]);
        let lo = above.map_or(1, |a| a + 1);
        let hi = right.unwrap_or(ctx.letters);
        for x in lo..=hi {
            let i = x as usize;
            if counts[i] >= ctx.content.part(i) {
                continue;
            }
            if i >= 2 && counts[i] + 1 > counts[i - 1] {
                continue;
            }
            counts[i] += 1;
            grid[r][c] = x;
            fill(ctx, pos + 1, grid, counts, out);
            grid[r][c] = 0;
            counts[i] -= 1;
        }
    }

    let ctx = Ctx {
        cells: &cells,
        spans: &spans,
        content,
        letters,
    };
    fill(&ctx, 0, &mut grid, &mut counts, &mut out);
    out.into_iter()
        .map(|rows| SkewTableau::new(shape.clone(), rows))
        .collect()
}

/// A contratableau: a semistandard filling of the 180-degree rotated diagram
/// of `shape`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContraTableau {
    shape: Partition,
    /// `rows[k-1]` is row `k` from the bottom, read left to right.
    rows: Vec<Vec<u32>>,
}

impl ContraTableau {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Result<Self, HiveError> {
        let mut rows = rows;
        while rows.len() > shape.len() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() != shape.len()
            || rows
                .iter()
                .enumerate()
                .any(|(k, row)| row.len() as u64 != shape.part(k + 1))
        {
            return Err(HiveError::InvalidTableau(format!(
                "rows {rows:?} do not match shape {shape}"
            )));
        }
        let t = ContraTableau { shape, rows };
        t.to_skew()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        ContraTableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub(crate) fn from_parts_unchecked(shape: Partition, rows: Vec<Vec<u32>>) -> Self {
        ContraTableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn word(&self) -> Word {
        Word(self.rows.iter().flatten().copied().collect())
    }

    /// `content()[i-1]` is the number of entries equal to `i`.
    pub fn content(&self) -> Vec<u64> {
        content_of(self.rows.iter().flatten().copied())
    }

    /// Number of entries `>= i` in row `k` from the bottom.
    pub fn at_least(&self, k: usize, i: u32) -> u64 {
        self.rows
            .get(k.wrapping_sub(1))
            .map_or(0, |row| row.iter().filter(|&&x| x >= i).count() as u64)
    }

    /// The same filling as a skew tableau of shape
    /// `(lambda_1^l) / (lambda_1 - lambda_l, ..., lambda_1 - lambda_1)`.
    pub fn to_skew(&self) -> Result<SkewTableau, HiveError> {
        let l = self.shape.len();
        let width = self.shape.part(1);
        let outer = Partition::new(vec![width; l])?;
        let inner = Partition::new((0..l).map(|r| width - self.shape.part(l - r)).collect())?;
        let rows = (0..l).map(|r| self.rows[l - 1 - r].clone()).collect();
        SkewTableau::new(SkewShape::new(outer, inner)?, rows)
    }
}

/// Jeu-de-taquin rectification of a contratableau; the result has the same
/// shape.
pub fn rectify(t: &ContraTableau) -> Tableau {
    t.to_skew().expect("valid contratableau").rectify()
}
