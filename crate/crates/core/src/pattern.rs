//! Periodic column patterns, shift sequences, and coloring schemas.
//!
//! A schema is a finite certificate of a coloring of the whole infinite
//! graph: named periodic patterns, one pattern name per column `B_0..B_{t-1}`,
//! and the shift sequence `(p_i)`. Column `B_t` is never stored; it reuses
//! `B_0`'s pattern with reference row `-(p_0 + ... + p_{t-1})`. The reference
//! point of `B_0` is normalized to `(0,0)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::{DistanceGraph, GridPoint};
use crate::seq::PackingSequence;
use crate::{Error, Result};

/// A periodic pattern: colors applied downwards along a column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pattern(Vec<u32>);

impl Pattern {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::InvalidSchema("pattern must be nonempty".into()));
        }
        if colors.iter().any(|&c| c == 0) {
            return Err(Error::InvalidSchema("pattern colors start at 1".into()));
        }
        Ok(Self(colors))
    }

    pub fn len(&self) -> i64 {
        self.0.len() as i64
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    /// Color of the row `ref_row - offset` when the reference row holds the
    /// first pattern color.
    pub fn color_at_offset(&self, offset: i64) -> u32 {
        self.0[offset.rem_euclid(self.len()) as usize]
    }
}

/// Color of a column with pattern `pat` whose reference point sits at
/// `ref_row`, evaluated at row `j`.
pub(crate) fn column_color(pat: &Pattern, ref_row: i64, j: i64) -> u32 {
    pat.color_at_offset(ref_row - j)
}

/// Renders explicit columns `(pattern, reference row)` as the fixture text
/// format: rows from `j = 0` downwards, cells space-joined, `*` marking
/// reference cells.
pub(crate) fn render_columns(cols: &[(&Pattern, i64)], rows: usize, highlight_refs: bool) -> String {
    let mut out = String::new();
    for r in 0..rows as i64 {
        let j = -r;
        for (idx, (pat, ref_row)) in cols.iter().enumerate() {
            if idx > 0 {
                out.push(' ');
            }
            if highlight_refs && *ref_row == j {
                out.push('*');
            }
            let _ = write!(out, "{}", column_color(pat, *ref_row, j));
        }
        out.push('\n');
    }
    out
}

/// A complete periodic coloring certificate for `G(k,t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringSchema {
    graph: DistanceGraph,
    patterns: BTreeMap<String, Pattern>,
    columns: Vec<String>,
    shifts: Vec<i64>,
    ref_rows: Vec<i64>, // length t+1
}

/// Congruence condition `sum(p_i) = k (mod d)` where `d` is the length of
/// `B_0`'s pattern; required so the glued columns `B_0` and `B_t` agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceCheck {
    pub holds: bool,
    pub shift_sum: i64,
    pub modulus: i64,
    pub sum_residue: i64,
    pub k_residue: i64,
}

impl ColoringSchema {
    pub fn new(
        graph: DistanceGraph,
        patterns: BTreeMap<String, Pattern>,
        columns: Vec<String>,
        shifts: Vec<i64>,
    ) -> Result<Self> {
        let t = graph.t() as usize;
        if columns.len() != t {
            return Err(Error::InvalidSchema(format!(
                "need {t} column assignments, got {}",
                columns.len()
            )));
        }
        if shifts.len() != t {
            return Err(Error::InvalidSchema(format!(
                "need {t} shifts, got {}",
                shifts.len()
            )));
        }
        for name in &columns {
            if !patterns.contains_key(name) {
                return Err(Error::InvalidSchema(format!("unknown pattern name {name:?}")));
            }
        }
        let d_max = patterns.values().map(Pattern::len).max().unwrap_or(0);
        for &p in &shifts {
            if p < 0 || p >= d_max {
                return Err(Error::InvalidSchema(format!(
                    "shift {p} outside [0, {d_max}) for the longest pattern"
                )));
            }
        }
        let mut ref_rows = Vec::with_capacity(t + 1);
        ref_rows.push(0);
        for &p in &shifts {
            ref_rows.push(ref_rows.last().unwrap() - p);
        }
        Ok(Self { graph, patterns, columns, shifts, ref_rows })
    }

    pub fn graph(&self) -> DistanceGraph {
        self.graph
    }

    pub fn patterns(&self) -> &BTreeMap<String, Pattern> {
        &self.patterns
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    /// Reference row of column `x` for `0 <= x <= t`; `reference_row(0) = 0`.
    pub fn reference_row(&self, x: i64) -> i64 {
        self.ref_rows[x as usize]
    }

    /// Pattern applied in column `x`; column `t` reuses `B_0`'s pattern.
    pub fn column_pattern(&self, x: i64) -> &Pattern {
        let name = if x == self.graph.t() { &self.columns[0] } else { &self.columns[x as usize] };
        &self.patterns[name]
    }

    /// Color of a grid point with `0 <= col <= t`.
    pub fn color_at(&self, p: GridPoint) -> u32 {
        column_color(self.column_pattern(p.col), self.reference_row(p.col), p.row)
    }

    /// Color of the integer `n` (canonical representative).
    pub fn color_of_int(&self, n: i64) -> Result<u32> {
        Ok(self.color_at(self.graph.int_to_point(n)?))
    }

    pub fn congruence_check(&self) -> CongruenceCheck {
        let d = self.column_pattern(0).len();
        let sum: i64 = self.shifts.iter().sum();
        let sum_residue = sum.rem_euclid(d);
        let k_residue = self.graph.k().rem_euclid(d);
        CongruenceCheck {
            holds: sum_residue == k_residue,
            shift_sum: sum,
            modulus: d,
            sum_residue,
            k_residue,
        }
    }

    /// Distinct colors appearing in columns actually assigned.
    pub fn color_count(&self) -> usize {
        let mut used: Vec<u32> = self
            .columns
            .iter()
            .flat_map(|name| self.patterns[name].colors().iter().copied())
            .collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    pub fn max_color(&self) -> u32 {
        self.columns
            .iter()
            .flat_map(|name| self.patterns[name].colors().iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Text matrix of columns `B_0..B_t`, `rows` rows downward from `j = 0`.
    pub fn render_matrix(&self, rows: usize, highlight_refs: bool) -> String {
        let cols: Vec<(&Pattern, i64)> = (0..=self.graph.t())
            .map(|x| (self.column_pattern(x), self.reference_row(x)))
            .collect();
        render_columns(&cols, rows, highlight_refs)
    }
}

/// A parametric schema: fixed head columns followed by a uniform repeated
/// tail, instantiable at any admissible `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaFamily {
    name: String,
    patterns: BTreeMap<String, Pattern>,
    head: Vec<(String, i64)>,
    tail: (String, i64),
    min_t: i64,
}

impl SchemaFamily {
    pub fn new(
        name: impl Into<String>,
        patterns: BTreeMap<String, Pattern>,
        head: Vec<(String, i64)>,
        tail: (String, i64),
        min_t: i64,
    ) -> Result<Self> {
        let name = name.into();
        let d_max = patterns.values().map(Pattern::len).max().unwrap_or(0);
        for (pname, shift) in head.iter().chain(std::iter::once(&tail)) {
            if !patterns.contains_key(pname) {
                return Err(Error::InvalidSchema(format!(
                    "family {name}: unknown pattern {pname:?}"
                )));
            }
            if *shift < 0 || *shift >= d_max {
                return Err(Error::InvalidSchema(format!(
                    "family {name}: shift {shift} outside [0, {d_max})"
                )));
            }
        }
        if min_t <= head.len() as i64 {
            return Err(Error::InvalidSchema(format!(
                "family {name}: min_t must leave room for at least one tail column"
            )));
        }
        Ok(Self { name, patterns, head, tail, min_t })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn patterns(&self) -> &BTreeMap<String, Pattern> {
        &self.patterns
    }

    pub fn head(&self) -> &[(String, i64)] {
        &self.head
    }

    pub fn tail(&self) -> &(String, i64) {
        &self.tail
    }

    pub fn min_t(&self) -> i64 {
        self.min_t
    }

    /// Pattern used by `B_0` (head front, or the tail for headless families).
    pub fn base_pattern(&self) -> &Pattern {
        let name = self.head.first().map_or(&self.tail.0, |(n, _)| n);
        &self.patterns[name]
    }

    /// Shift sum at width `t`: affine in `t` (head constant plus tail shift
    /// per remaining column).
    pub fn shift_sum(&self, t: i64) -> i64 {
        let head_sum: i64 = self.head.iter().map(|(_, p)| p).sum();
        head_sum + self.tail.1 * (t - self.head.len() as i64)
    }

    /// Whether `(k,t)` satisfies the family's residue requirement, i.e. the
    /// gluing congruence `shift_sum(t) = k (mod d)`.
    pub fn admits(&self, k: i64, t: i64) -> bool {
        let d = self.base_pattern().len();
        (self.shift_sum(t) - k).rem_euclid(d) == 0
    }

    /// Concrete schema at `(k,t)`: head then `t - |head|` tail copies.
    pub fn instantiate(&self, graph: DistanceGraph) -> Result<ColoringSchema> {
        graph.require_connected()?;
        let (k, t) = (graph.k(), graph.t());
        if t < self.min_t {
            return Err(Error::FamilyTooSmall { family: self.name.clone(), t, min: self.min_t });
        }
        if !self.admits(k, t) {
            return Err(Error::WrongFamily { family: self.name.clone(), k, t });
        }
        let mut columns = Vec::with_capacity(t as usize);
        let mut shifts = Vec::with_capacity(t as usize);
        for (name, p) in &self.head {
            columns.push(name.clone());
            shifts.push(*p);
        }
        for _ in self.head.len()..t as usize {
            columns.push(self.tail.0.clone());
            shifts.push(self.tail.1);
        }
        let schema = ColoringSchema::new(graph, self.patterns.clone(), columns, shifts)?;
        debug_assert!(schema.congruence_check().holds);
        Ok(schema)
    }
}

/// JSON certificate: the wire format produced by `color --format json` and
/// consumed by `verify --cert`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub k: i64,
    pub t: i64,
    pub sequence: String,
    pub patterns: BTreeMap<String, Vec<u32>>,
    pub columns: Vec<String>,
    pub shifts: Vec<i64>,
}

impl Certificate {
    pub fn from_parts(schema: &ColoringSchema, seq: &PackingSequence) -> Self {
        Self {
            k: schema.graph().k(),
            t: schema.graph().t(),
            sequence: seq.to_string(),
            patterns: schema
                .patterns()
                .iter()
                .map(|(name, p)| (name.clone(), p.colors().to_vec()))
                .collect(),
            columns: schema.columns().to_vec(),
            shifts: schema.shifts().to_vec(),
        }
    }

    pub fn into_parts(self) -> Result<(ColoringSchema, PackingSequence)> {
        let graph = DistanceGraph::new(self.k, self.t)?;
        let seq: PackingSequence = self.sequence.parse()?;
        let patterns = self
            .patterns
            .into_iter()
            .map(|(name, colors)| Ok((name, Pattern::new(colors)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let schema = ColoringSchema::new(graph, patterns, self.columns, self.shifts)?;
        Ok((schema, seq))
    }
}
