//! Todd-Coxeter coset enumeration over the trivial subgroup.
//!
//! Strategy: HLT relator scanning with scan-and-fill, immediate and
//! complete coincidence processing through a union-find with full table
//! patching, and a scan-only lookahead pass when the coset limit is hit.
//! Coset numbering follows definition order, so runs are reproducible.
//!
//! A completed table certifies the group order exactly; running out of
//! cosets is a result (`Exhausted`), never an error.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::presentation::{Presentation, PresentationError};
use crate::word::{Alphabet, Word};

const UNDEF: u32 = u32::MAX;

/// Default coset capacity: generous enough for the construction's whole
/// verification grid (its hardest cells peak above a million cosets
/// under HLT definition order), tight enough to stop runaway inputs.
pub const DEFAULT_MAX_COSETS: usize = 2_000_000;

/// Outcome of an enumeration attempt.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnumerationOutcome {
    /// The coset table closed; the presented group has exactly this order.
    Finished { order: u64 },
    /// The coset limit was reached before the table closed; no conclusion.
    Exhausted { limit: u64 },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationStats {
    pub cosets_defined: u64,
    pub coincidences: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationResult {
    pub outcome: EnumerationOutcome,
    pub stats: EnumerationStats,
}

impl EnumerationResult {
    pub fn order(&self) -> Option<u64> {
        match self.outcome {
            EnumerationOutcome::Finished { order } => Some(order),
            EnumerationOutcome::Exhausted { .. } => None,
        }
    }
}

/// Three-valued answer of the word problem relative to an enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrivialityVerdict {
    Trivial,
    Nontrivial,
    Inconclusive,
}

enum ScanOutcome {
    Complete,
    Incomplete,
    NeedsSpace,
}

/// The enumeration workspace: one row per coset, one column per signed
/// generator, plus equivalence bookkeeping for coincidences. Confined to
/// a single computation; results are immutable values.
pub struct CosetTable {
    cols: usize,
    row_count: usize,
    rows: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    limit: usize,
    stats: EnumerationStats,
    queue: VecDeque<(u32, u32)>,
    deductions: Vec<(u32, usize)>,
}

impl CosetTable {
    fn new(generator_count: usize, limit: usize) -> CosetTable {
        let mut table = CosetTable {
            cols: 2 * generator_count,
            row_count: 0,
            rows: Vec::new(),
            parent: Vec::new(),
            live: 0,
            limit,
            stats: EnumerationStats::default(),
            queue: VecDeque::new(),
            deductions: Vec::new(),
        };
        table.push_row();
        table
    }

    fn push_row(&mut self) -> u32 {
        let index = self.row_count as u32;
        self.rows.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.parent.push(index);
        self.row_count += 1;
        self.live += 1;
        self.stats.cosets_defined += 1;
        index
    }

    pub fn live_cosets(&self) -> usize {
        self.live
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn find(&mut self, mut c: u32) -> u32 {
        while self.parent[c as usize] != c {
            let up = self.parent[self.parent[c as usize] as usize];
            self.parent[c as usize] = up;
            c = up;
        }
        c
    }

    fn entry(&self, c: u32, col: usize) -> u32 {
        self.rows[c as usize * self.cols + col]
    }

    fn set(&mut self, c: u32, col: usize, value: u32) {
        self.rows[c as usize * self.cols + col] = value;
    }

    /// Sets an entry and queues it for deduction scanning.
    fn record(&mut self, c: u32, col: usize, value: u32) {
        self.set(c, col, value);
        self.deductions.push((c, col));
    }

    fn lookup(&mut self, c: u32, col: usize) -> u32 {
        let t = self.entry(c, col);
        if t == UNDEF {
            UNDEF
        } else {
            self.find(t)
        }
    }

    fn define(&mut self, c: u32, col: usize, log: &mut dyn FnMut(&str)) -> Option<u32> {
        if self.row_count >= self.limit {
            return None;
        }
        let n = self.push_row();
        self.record(c, col, n);
        self.record(n, col ^ 1, c);
        log(&format!(
            "def {}.{} = {}",
            c + 1,
            col_name_placeholder(col),
            n + 1
        ));
        Some(n)
    }

    fn coincide(&mut self, a: u32, b: u32, log: &mut dyn FnMut(&str)) {
        self.queue.push_back((a, b));
        while let Some((a, b)) = self.queue.pop_front() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (keep, dead) = if a < b { (a, b) } else { (b, a) };
            self.parent[dead as usize] = keep;
            self.live -= 1;
            self.stats.coincidences += 1;
            log(&format!("coinc {}={}", dead + 1, keep + 1));
            for col in 0..self.cols {
                let target = self.entry(dead, col);
                if target == UNDEF {
                    continue;
                }
                self.set(dead, col, UNDEF);
                let target = self.find(target);
                let keeper = self.find(keep);
                let existing = self.entry(keeper, col);
                if existing != UNDEF {
                    let existing = self.find(existing);
                    if existing != target {
                        self.queue.push_back((existing, target));
                    }
                } else {
                    self.record(keeper, col, target);
                    let back = self.entry(target, col ^ 1);
                    if back == UNDEF {
                        self.record(target, col ^ 1, keeper);
                    } else {
                        let back = self.find(back);
                        if back != keeper {
                            self.queue.push_back((back, keeper));
                        }
                    }
                }
            }
        }
    }

    /// Rewrites every live entry to its representative. Reads during
    /// enumeration already resolve through the union-find; one final
    /// patch leaves the finished table free of dead cosets.
    fn patch(&mut self) {
        for c in 0..self.row_count as u32 {
            if !self.is_live(c) {
                continue;
            }
            for col in 0..self.cols {
                let t = self.entry(c, col);
                if t != UNDEF {
                    let rep = self.find(t);
                    self.set(c, col, rep);
                }
            }
        }
    }

    fn find_const(&self, mut c: u32) -> u32 {
        while self.parent[c as usize] != c {
            c = self.parent[c as usize];
        }
        c
    }

    /// Scans every relator rotation passing through newly set entries,
    /// in deduction-only mode, until the stack drains. This propagates
    /// collapses long before HLT row scanning would reach them.
    fn process_deductions(&mut self, rotations: &RotationIndex, log: &mut dyn FnMut(&str)) {
        while let Some((c, col)) = self.deductions.pop() {
            let c = self.find(c);
            for word in &rotations.by_column[col] {
                self.scan(c, word, false, log);
                if !self.is_live(c) {
                    break;
                }
            }
        }
    }

    /// Scan-only passes over all live cosets until no further collapse.
    /// Returns true if any coincidence was found.
    fn lookahead(
        &mut self,
        relators: &[Vec<usize>],
        rotations: &RotationIndex,
        log: &mut dyn FnMut(&str),
    ) -> bool {
        let before = self.stats.coincidences;
        loop {
            let pass_start = self.stats.coincidences;
            for c in 0..self.row_count as u32 {
                if !self.is_live(c) {
                    continue;
                }
                for relator in relators {
                    self.scan(c, relator, false, log);
                    if !self.is_live(c) {
                        break;
                    }
                }
            }
            self.process_deductions(rotations, log);
            if self.stats.coincidences == pass_start {
                break;
            }
        }
        self.stats.coincidences > before
    }

    /// Renumbers live cosets densely (preserving order) and drops dead
    /// rows, reclaiming table capacity. Returns the new index of the
    /// enumeration cursor: the number of live cosets preceding it.
    fn compact(&mut self, cursor: u32) -> u32 {
        let mut map = vec![UNDEF; self.row_count];
        let mut next: u32 = 0;
        for c in 0..self.row_count as u32 {
            if self.is_live(c) {
                map[c as usize] = next;
                next += 1;
            }
        }
        let mut new_rows = vec![UNDEF; next as usize * self.cols];
        for c in 0..self.row_count as u32 {
            if !self.is_live(c) {
                continue;
            }
            let nc = map[c as usize] as usize;
            for col in 0..self.cols {
                let t = self.entry(c, col);
                if t != UNDEF {
                    new_rows[nc * self.cols + col] = map[self.find_const(t) as usize];
                }
            }
        }
        let new_cursor = (0..cursor).filter(|&c| self.is_live(c)).count() as u32;
        self.rows = new_rows;
        self.row_count = next as usize;
        self.parent = (0..next).collect();
        debug_assert!(
            self.deductions.is_empty(),
            "deductions drained before compaction"
        );
        self.deductions.clear();
        new_cursor
    }

    /// Scans one relator from `alpha`, filling gaps with new cosets when
    /// `fill` is set. The two-sided scan either closes (deduction or
    /// coincidence as needed), stalls (`Incomplete`, non-fill mode only),
    /// or runs out of space.
    fn scan(
        &mut self,
        alpha: u32,
        word: &[usize],
        fill: bool,
        log: &mut dyn FnMut(&str),
    ) -> ScanOutcome {
        let mut f = alpha;
        let mut i = 0usize;
        let mut b = alpha;
        let mut j = word.len();
        loop {
            while i < j {
                let t = self.lookup(f, word[i]);
                if t == UNDEF {
                    break;
                }
                f = t;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincide(f, b, log);
                }
                return ScanOutcome::Complete;
            }
            while j > i {
                let t = self.lookup(b, word[j - 1] ^ 1);
                if t == UNDEF {
                    break;
                }
                b = t;
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincide(f, b, log);
                }
                return ScanOutcome::Complete;
            }
            if j == i + 1 {
                // deduction: both sides of the single gap are undefined
                self.record(f, word[i], b);
                let back = self.entry(b, word[i] ^ 1);
                if back == UNDEF {
                    self.record(b, word[i] ^ 1, f);
                } else {
                    let back = self.find(back);
                    if back != f {
                        self.coincide(back, f, log);
                    }
                }
                return ScanOutcome::Complete;
            }
            if !fill {
                return ScanOutcome::Incomplete;
            }
            if self.define(f, word[i], log).is_none() {
                return ScanOutcome::NeedsSpace;
            }
        }
    }

    fn is_complete(&self) -> bool {
        (0..self.row_count as u32)
            .all(|c| !self.is_live(c) || (0..self.cols).all(|col| self.entry(c, col) != UNDEF))
    }
}

// The define log line needs generator names, which the table does not
// hold; enumeration rewrites the placeholder through `LogContext`.
fn col_name_placeholder(col: usize) -> String {
    format!("#{col}")
}

struct LogContext<'a> {
    names: Vec<String>,
    sink: &'a mut dyn FnMut(&str),
}

impl LogContext<'_> {
    fn emit(&mut self, line: &str) {
        // expand the `#<col>` placeholder produced inside the table
        if let Some(pos) = line.find('#') {
            let rest = &line[pos + 1..];
            let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
            if let Ok(col) = digits.parse::<usize>() {
                let name = &self.names[col];
                let expanded = format!("{}{}{}", &line[..pos], name, &rest[digits.len()..]);
                (self.sink)(&expanded);
                return;
            }
        }
        (self.sink)(line);
    }
}

fn relator_columns(p: &Presentation) -> Vec<Vec<usize>> {
    let mut relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| {
            r.letters()
                .into_iter()
                .map(|(gen, positive)| 2 * gen + usize::from(!positive))
                .collect()
        })
        .collect();
    // scanning short relators first propagates collapses sooner
    relators.sort_by_key(|r| r.len());
    relators
}

/// Every cyclic rotation of every relator, grouped by leading column:
/// the scans to replay when an entry on that column appears.
struct RotationIndex {
    by_column: Vec<Vec<Vec<usize>>>,
}

impl RotationIndex {
    fn new(relators: &[Vec<usize>], cols: usize) -> RotationIndex {
        let mut by_column: Vec<Vec<Vec<usize>>> = vec![Vec::new(); cols];
        for relator in relators {
            for t in 0..relator.len() {
                let rotated: Vec<usize> = relator[t..]
                    .iter()
                    .chain(relator[..t].iter())
                    .copied()
                    .collect();
                by_column[rotated[0]].push(rotated);
            }
        }
        RotationIndex { by_column }
    }
}

/// A finished enumeration attempt: the result plus the table it produced,
/// usable for tracing words.
pub struct Enumeration {
    pub result: EnumerationResult,
    alphabet: Alphabet,
    table: CosetTable,
}

impl Enumeration {
    pub fn run(p: &Presentation, max_cosets: usize) -> Enumeration {
        Enumeration::run_with_log(p, max_cosets, &mut |_| {})
    }

    pub fn run_with_log(
        p: &Presentation,
        max_cosets: usize,
        sink: &mut dyn FnMut(&str),
    ) -> Enumeration {
        assert!(max_cosets >= 1, "coset limit must be positive");
        let names = p
            .alphabet()
            .generators()
            .flat_map(|g| [g.name().to_string(), format!("{}^-1", g.name())])
            .collect();
        let mut ctx = LogContext { names, sink };
        let mut log = |line: &str| ctx.emit(line);

        let relators = relator_columns(p);
        let rotations = RotationIndex::new(&relators, 2 * p.generator_count());
        let mut table = CosetTable::new(p.generator_count(), max_cosets);
        let mut current: u32 = 0;
        let mut out_of_space = false;

        while (current as usize) < table.row_count {
            if !table.is_live(current) {
                current += 1;
                continue;
            }
            let mut needs_space = false;
            for relator in &relators {
                let outcome = table.scan(current, relator, true, &mut log);
                table.process_deductions(&rotations, &mut log);
                if matches!(outcome, ScanOutcome::NeedsSpace) {
                    needs_space = true;
                    break;
                }
                if !table.is_live(current) {
                    break;
                }
            }
            if table.is_live(current) && !needs_space {
                for col in 0..table.cols {
                    if table.lookup(current, col) == UNDEF {
                        if table.define(current, col, &mut log).is_none() {
                            needs_space = true;
                            break;
                        }
                        table.process_deductions(&rotations, &mut log);
                        if !table.is_live(current) {
                            break;
                        }
                    }
                }
            }
            if needs_space {
                // table full: reclaim dead rows if there are any; run the
                // scan-only lookahead for collapses only when the table
                // is saturated with live cosets. Either way the cursor
                // coset is rescanned under the new numbering.
                if table.live_cosets() == table.row_count
                    && !table.lookahead(&relators, &rotations, &mut log)
                {
                    out_of_space = true;
                    break;
                }
                if table.live_cosets() == table.row_count {
                    out_of_space = true;
                    break;
                }
                current = table.compact(current);
                continue;
            }
            current += 1;
        }

        table.patch();
        let closed = !out_of_space || table.is_complete();
        let result = EnumerationResult {
            outcome: if closed {
                EnumerationOutcome::Finished {
                    order: table.live_cosets() as u64,
                }
            } else {
                EnumerationOutcome::Exhausted {
                    limit: max_cosets as u64,
                }
            },
            stats: table.stats,
        };
        Enumeration {
            result,
            alphabet: p.alphabet().clone(),
            table,
        }
    }

    /// Traces `w` from the subgroup coset through a completed table.
    /// `Trivial` iff the trace returns to the subgroup coset;
    /// `Inconclusive` when enumeration did not finish.
    pub fn word_is_trivial(&self, w: &Word) -> Result<TrivialityVerdict, PresentationError> {
        if w.alphabet() != &self.alphabet {
            return Err(PresentationError::AlphabetMismatch);
        }
        if self.result.order().is_none() {
            return Ok(TrivialityVerdict::Inconclusive);
        }
        let mut coset: u32 = 0;
        for (gen, positive) in w.letters() {
            let col = 2 * gen + usize::from(!positive);
            let next = self.table.entry(coset, col);
            debug_assert!(next != UNDEF, "completed table has no gaps");
            coset = next;
        }
        Ok(if coset == 0 {
            TrivialityVerdict::Trivial
        } else {
            TrivialityVerdict::Nontrivial
        })
    }
}

/// Runs coset enumeration over the trivial subgroup. `Finished(k)`
/// certifies the presented group has order exactly `k`.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> EnumerationResult {
    Enumeration::run(p, max_cosets).result
}

/// As [`todd_coxeter`], emitting one log line per definition and
/// coincidence: `def <coset>.<gen> = <coset>` / `coinc <a>=<b>`.
pub fn todd_coxeter_with_log(
    p: &Presentation,
    max_cosets: usize,
    sink: &mut dyn FnMut(&str),
) -> EnumerationResult {
    Enumeration::run_with_log(p, max_cosets, sink).result
}

/// Decides triviality of `w` in the presented group by enumeration:
/// `Trivial`/`Nontrivial` when the enumeration finishes, `Inconclusive`
/// when it exhausts the coset limit.
pub fn word_is_trivial(
    p: &Presentation,
    w: &Word,
    max_cosets: usize,
) -> Result<TrivialityVerdict, PresentationError> {
    Enumeration::run(p, max_cosets).word_is_trivial(w)
}
