//! Sliding-tile puzzles on rectangular boards.
//!
//! `h1` is the Manhattan distance, `h2` adds the linear-conflict penalty. In
//! the weighted variant moving tile `t` costs `t`, and both heuristics weigh
//! each tile's moves accordingly.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::error::{parse_uint, ParseError};
use crate::search::{Cost, Domain, Successor};

/// Largest supported board, in cells.
pub const MAX_CELLS: usize = 36;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TileError {
    #[error("a {rows}x{cols} board is not supported (need 2..={MAX_CELLS} cells)")]
    Geometry { rows: usize, cols: usize },
    #[error("cells are not a permutation of 0..{len}")]
    NotPermutation { len: usize },
    #[error("board geometry {found:?} does not match the goal {expected:?}")]
    GeometryMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("board cannot reach the goal configuration")]
    Unsolvable,
}

fn check_geometry(rows: usize, cols: usize) -> Result<(), TileError> {
    let cells = rows.saturating_mul(cols);
    if rows == 0 || cols == 0 || !(2..=MAX_CELLS).contains(&cells) {
        return Err(TileError::Geometry { rows, cols });
    }
    Ok(())
}

/// Where the blank sits in the solved board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GoalLayout {
    /// `0 1 2 ... n-1`, the convention of Korf's instance files.
    #[default]
    BlankFirst,
    /// `1 2 ... n-1 0`.
    BlankLast,
}

impl FromStr for GoalLayout {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "blank-first" => Ok(GoalLayout::BlankFirst),
            "blank-last" => Ok(GoalLayout::BlankLast),
            other => Err(format!(
                "unknown goal layout `{other}` (blank-first or blank-last)"
            )),
        }
    }
}

impl fmt::Display for GoalLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GoalLayout::BlankFirst => "blank-first",
            GoalLayout::BlankLast => "blank-last",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TileCostModel {
    #[default]
    Unit,
    /// Moving tile `t` costs `t`.
    Weighted,
}

impl TileCostModel {
    #[inline]
    pub fn move_cost(self, tile: u8) -> Cost {
        match self {
            TileCostModel::Unit => 1,
            TileCostModel::Weighted => tile as Cost,
        }
    }
}

/// Direction the blank moves in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlankMove {
    Up,
    Left,
    Right,
    Down,
}

impl BlankMove {
    /// Successor order.
    pub const ALL: [BlankMove; 4] = [
        BlankMove::Up,
        BlankMove::Left,
        BlankMove::Right,
        BlankMove::Down,
    ];

    pub fn reverse(self) -> BlankMove {
        match self {
            BlankMove::Up => BlankMove::Down,
            BlankMove::Down => BlankMove::Up,
            BlankMove::Left => BlankMove::Right,
            BlankMove::Right => BlankMove::Left,
        }
    }

    pub fn letter(self) -> char {
        match self {
            BlankMove::Up => 'U',
            BlankMove::Left => 'L',
            BlankMove::Right => 'R',
            BlankMove::Down => 'D',
        }
    }
}

/// A board: `cells[i]` is the tile at reading-order position `i`, 0 is the
/// blank.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TileBoard {
    rows: u8,
    cols: u8,
    blank: u8,
    cells: [u8; MAX_CELLS],
}

impl fmt::Debug for TileBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TileBoard({}x{}: {})", self.rows, self.cols, self)
    }
}

impl fmt::Display for TileBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.cells().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl TileBoard {
    pub fn new(rows: usize, cols: usize, cells: &[u8]) -> Result<Self, TileError> {
        check_geometry(rows, cols)?;
        let len = rows * cols;
        let mut seen = [false; MAX_CELLS];
        if cells.len() != len {
            return Err(TileError::NotPermutation { len });
        }
        let mut board = TileBoard {
            rows: rows as u8,
            cols: cols as u8,
            blank: 0,
            cells: [0; MAX_CELLS],
        };
        for (i, &t) in cells.iter().enumerate() {
            let t_idx = t as usize;
            if t_idx >= len || seen[t_idx] {
                return Err(TileError::NotPermutation { len });
            }
            seen[t_idx] = true;
            board.cells[i] = t;
            if t == 0 {
                board.blank = i as u8;
            }
        }
        Ok(board)
    }

    pub fn goal(rows: usize, cols: usize, layout: GoalLayout) -> Result<Self, TileError> {
        check_geometry(rows, cols)?;
        let len = rows * cols;
        let cells: Vec<u8> = match layout {
            GoalLayout::BlankFirst => (0..len as u8).collect(),
            GoalLayout::BlankLast => (1..len as u8).chain(std::iter::once(0)).collect(),
        };
        TileBoard::new(rows, cols, &cells)
    }

    pub fn rows(&self) -> usize {
        self.rows as usize
    }

    pub fn cols(&self) -> usize {
        self.cols as usize
    }

    pub fn len(&self) -> usize {
        self.rows() * self.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn blank(&self) -> usize {
        self.blank as usize
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells[..self.len()]
    }

    /// Cell the blank moves into, if it stays on the board.
    #[inline]
    fn target(&self, mv: BlankMove) -> Option<usize> {
        let cols = self.cols as usize;
        let blank = self.blank as usize;
        let (row, col) = (blank / cols, blank % cols);
        match mv {
            BlankMove::Up if row > 0 => Some(blank - cols),
            BlankMove::Down if row + 1 < self.rows as usize => Some(blank + cols),
            BlankMove::Left if col > 0 => Some(blank - 1),
            BlankMove::Right if col + 1 < cols => Some(blank + 1),
            _ => None,
        }
    }

    /// Board after the move and the tile that slid into the old blank cell.
    #[inline]
    pub fn apply(&self, mv: BlankMove) -> Option<(TileBoard, u8)> {
        let to = self.target(mv)?;
        let mut next = *self;
        let tile = next.cells[to];
        next.cells[self.blank as usize] = tile;
        next.cells[to] = 0;
        next.blank = to as u8;
        Some((next, tile))
    }

    /// Legal moves excluding the reverse of `incoming`.
    pub fn branching_factor(&self, incoming: Option<BlankMove>) -> usize {
        let back = incoming.map(BlankMove::reverse);
        BlankMove::ALL
            .iter()
            .filter(|&&mv| Some(mv) != back && self.target(mv).is_some())
            .count()
    }
}

/// Goal board with per-tile lookup tables for the heuristics.
#[derive(Debug, Clone)]
pub struct TileGoal {
    board: TileBoard,
    layout: GoalLayout,
    home_row: [u8; MAX_CELLS],
    home_col: [u8; MAX_CELLS],
    /// `distance[tile * len + cell]`: grid distance of `cell` from the home of `tile`.
    distance: Vec<u8>,
}

impl TileGoal {
    pub fn new(rows: usize, cols: usize, layout: GoalLayout) -> Result<Self, TileError> {
        let board = TileBoard::goal(rows, cols, layout)?;
        let len = board.len();
        let mut home_row = [0u8; MAX_CELLS];
        let mut home_col = [0u8; MAX_CELLS];
        for (cell, &t) in board.cells().iter().enumerate() {
            home_row[t as usize] = (cell / cols) as u8;
            home_col[t as usize] = (cell % cols) as u8;
        }
        let mut distance = vec![0u8; len * len];
        for t in 0..len {
            for cell in 0..len {
                let dr = (cell / cols).abs_diff(home_row[t] as usize);
                let dc = (cell % cols).abs_diff(home_col[t] as usize);
                distance[t * len + cell] = (dr + dc) as u8;
            }
        }
        Ok(TileGoal {
            board,
            layout,
            home_row,
            home_col,
            distance,
        })
    }

    pub fn board(&self) -> &TileBoard {
        &self.board
    }

    pub fn layout(&self) -> GoalLayout {
        self.layout
    }

    fn check(&self, board: &TileBoard) {
        debug_assert_eq!((board.rows, board.cols), (self.board.rows, self.board.cols));
    }

    /// Whether `board` can reach this goal.
    pub fn is_solvable(&self, board: &TileBoard) -> bool {
        if (board.rows, board.cols) != (self.board.rows, self.board.cols) {
            return false;
        }
        let len = board.len();
        if board.rows == 1 || board.cols == 1 {
            // tiles can never pass each other on a single line
            let order = |b: &TileBoard| {
                b.cells()
                    .iter()
                    .copied()
                    .filter(|&t| t != 0)
                    .collect::<Vec<_>>()
            };
            return order(board) == order(&self.board);
        }
        // permutation taking each cell to the home of its tile
        let cols = board.cols();
        let mut visited = [false; MAX_CELLS];
        let mut cycles = 0;
        for start in 0..len {
            if visited[start] {
                continue;
            }
            cycles += 1;
            let mut cell = start;
            while !visited[cell] {
                visited[cell] = true;
                let t = board.cells[cell] as usize;
                cell = self.home_row[t] as usize * cols + self.home_col[t] as usize;
            }
        }
        let permutation_parity = (len - cycles) % 2;
        let blank_distance = self.distance[board.blank()];
        permutation_parity == (blank_distance as usize) % 2
    }
}

/// Successors in the order up, left, right, down, skipping the move that
/// undoes `incoming`.
pub fn tile_successors(
    board: &TileBoard,
    costs: TileCostModel,
    incoming: Option<BlankMove>,
    out: &mut Vec<Successor<TileBoard, BlankMove>>,
) {
    let back = incoming.map(BlankMove::reverse);
    for mv in BlankMove::ALL {
        if Some(mv) == back {
            continue;
        }
        if let Some((next, tile)) = board.apply(mv) {
            out.push(Successor {
                state: next,
                cost: costs.move_cost(tile),
                mv,
            });
        }
    }
}

/// Sum over tiles of (weighted) grid distance to the tile's home.
pub fn manhattan(board: &TileBoard, goal: &TileGoal, costs: TileCostModel) -> Cost {
    goal.check(board);
    let len = board.len();
    let mut total: Cost = 0;
    for (cell, &t) in board.cells().iter().enumerate() {
        if t != 0 {
            let d = goal.distance[t as usize * len + cell] as Cost;
            total += d * costs.move_cost(t);
        }
    }
    total
}

/// Minimum total weight of tiles that must leave a line so the remaining
/// ones are in goal order. `line` lists (goal position, weight) in board
/// order; the kept tiles form a heaviest increasing subsequence.
fn line_penalty(line: &[(u8, Cost)]) -> Cost {
    if line.len() < 2 {
        return 0;
    }
    let mut best = [0 as Cost; MAX_CELLS];
    let mut kept = 0;
    let mut total = 0;
    for (j, &(pos, w)) in line.iter().enumerate() {
        total += w;
        let prefix = line[..j]
            .iter()
            .zip(&best[..j])
            .filter(|((p, _), _)| *p < pos)
            .map(|(_, &b)| b)
            .max()
            .unwrap_or(0);
        best[j] = prefix + w;
        kept = kept.max(best[j]);
    }
    total - kept
}

/// Manhattan distance plus two moves of every tile that has to step out of
/// its goal row or column to let a conflicting tile pass. The charged tiles
/// form a minimum-weight cover of the conflicts within each line.
pub fn linear_conflict(board: &TileBoard, goal: &TileGoal, costs: TileCostModel) -> Cost {
    let rows = board.rows();
    let cols = board.cols();
    let cells = board.cells();
    let mut penalty: Cost = 0;
    let mut line = [(0u8, 0 as Cost); MAX_CELLS];

    for r in 0..rows {
        let mut k = 0;
        for c in 0..cols {
            let t = cells[r * cols + c];
            if t != 0 && goal.home_row[t as usize] as usize == r {
                line[k] = (goal.home_col[t as usize], costs.move_cost(t));
                k += 1;
            }
        }
        penalty += line_penalty(&line[..k]);
    }
    for c in 0..cols {
        let mut k = 0;
        for r in 0..rows {
            let t = cells[r * cols + c];
            if t != 0 && goal.home_col[t as usize] as usize == c {
                line[k] = (goal.home_row[t as usize], costs.move_cost(t));
                k += 1;
            }
        }
        penalty += line_penalty(&line[..k]);
    }
    manhattan(board, goal, costs) + 2 * penalty
}

/// Parse one board from whitespace-separated tiles in reading order. Without
/// an explicit geometry the board must be square.
pub fn parse_korf_instance(
    text: &str,
    geometry: Option<(usize, usize)>,
) -> Result<TileBoard, ParseError> {
    parse_board_line(text, geometry, 1)
}

fn parse_board_line(
    text: &str,
    geometry: Option<(usize, usize)>,
    line: usize,
) -> Result<TileBoard, ParseError> {
    let values = text
        .split_whitespace()
        .map(|tok| parse_uint(tok, line))
        .collect::<Result<Vec<_>, _>>()?;
    let (rows, cols) = match geometry {
        Some(g) => g,
        None => {
            let side = (values.len() as f64).sqrt().round() as usize;
            if side < 2 || side * side != values.len() {
                return Err(ParseError::Invalid {
                    line,
                    message: format!("{} tiles do not form a square board", values.len()),
                });
            }
            (side, side)
        }
    };
    check_geometry(rows, cols).map_err(|e| ParseError::Invalid {
        line,
        message: e.to_string(),
    })?;
    let len = rows * cols;
    if values.len() != len {
        return Err(ParseError::Count {
            line,
            expected: len,
            found: values.len(),
        });
    }
    let mut seen = [false; MAX_CELLS];
    for &v in &values {
        if v >= len as u64 {
            return Err(ParseError::OutOfRange {
                line,
                value: v,
                min: 0,
                max: len as u64 - 1,
            });
        }
        if std::mem::replace(&mut seen[v as usize], true) {
            return Err(ParseError::Duplicate { line, value: v });
        }
    }
    let cells: Vec<u8> = values.iter().map(|&v| v as u8).collect();
    Ok(TileBoard::new(rows, cols, &cells).expect("validated permutation"))
}

/// One board of an instance file with the generator metadata, if any.
#[derive(Debug, Clone, PartialEq)]
pub struct TileInstance {
    pub board: TileBoard,
    pub seed: Option<u64>,
    pub steps: Option<usize>,
    /// 1-based line of the board in its file.
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TileFile {
    pub rows: usize,
    pub cols: usize,
    pub layout: GoalLayout,
    pub instances: Vec<TileInstance>,
}

/// Parse an instance file: one board per line, `#` comments. A comment of
/// `key=value` pairs may set `rows`, `cols` and `goal` for the file, and
/// `seed` / `steps` for the board that follows. `geometry` and `layout`
/// apply when the file does not say otherwise. Every board must be solvable.
pub fn parse_tile_file(
    text: &str,
    geometry: Option<(usize, usize)>,
    layout: GoalLayout,
) -> Result<TileFile, ParseError> {
    let mut rows = geometry.map(|g| g.0);
    let mut cols = geometry.map(|g| g.1);
    let mut layout = layout;
    let mut seed = None;
    let mut steps = None;
    let mut instances = Vec::new();
    let mut goal: Option<TileGoal> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            for pair in comment.split_whitespace() {
                let Some((key, value)) = pair.split_once('=') else {
                    continue;
                };
                let number = || parse_uint(value, line);
                match key {
                    "rows" => rows = Some(number()? as usize),
                    "cols" => cols = Some(number()? as usize),
                    "goal" => {
                        layout = value
                            .parse()
                            .map_err(|message| ParseError::Invalid { line, message })?
                    }
                    "seed" => seed = Some(number()?),
                    "steps" => steps = Some(number()? as usize),
                    _ => {}
                }
            }
            continue;
        }
        let geometry = match (rows, cols) {
            (Some(r), Some(c)) => Some((r, c)),
            _ => None,
        };
        let board = parse_board_line(trimmed, geometry, line)?;
        let reuse = goal.as_ref().is_some_and(|g| {
            g.layout == layout && (g.board.rows(), g.board.cols()) == (board.rows(), board.cols())
        });
        if !reuse {
            goal =
                Some(TileGoal::new(board.rows(), board.cols(), layout).expect("checked geometry"));
        }
        if !goal.as_ref().expect("goal set above").is_solvable(&board) {
            return Err(ParseError::Unsolvable { line });
        }
        rows = Some(board.rows());
        cols = Some(board.cols());
        instances.push(TileInstance {
            board,
            seed: seed.take(),
            steps: steps.take(),
            line,
        });
    }
    let (rows, cols) = match instances.first() {
        Some(first) => (first.board.rows(), first.board.cols()),
        None => (rows.unwrap_or(4), cols.unwrap_or(4)),
    };
    Ok(TileFile {
        rows,
        cols,
        layout,
        instances,
    })
}

/// Render instances in the format read by [`parse_tile_file`].
pub fn write_tile_file(file: &TileFile) -> String {
    let mut out = format!(
        "# tiles rows={} cols={} goal={}\n",
        file.rows, file.cols, file.layout
    );
    for inst in &file.instances {
        match (inst.seed, inst.steps) {
            (Some(seed), Some(steps)) => out.push_str(&format!("# seed={seed} steps={steps}\n")),
            (Some(seed), None) => out.push_str(&format!("# seed={seed}\n")),
            (None, Some(steps)) => out.push_str(&format!("# steps={steps}\n")),
            (None, None) => {}
        }
        out.push_str(&inst.board.to_string());
        out.push('\n');
    }
    out
}

/// Walk `steps` uniformly random moves away from the goal, never undoing the
/// previous move.
pub fn random_walk_instance(
    rows: usize,
    cols: usize,
    steps: usize,
    seed: u64,
    layout: GoalLayout,
) -> Result<TileBoard, TileError> {
    let mut board = TileBoard::goal(rows, cols, layout)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut previous: Option<BlankMove> = None;
    let mut legal = Vec::with_capacity(4);
    for _ in 0..steps {
        legal.clear();
        let back = previous.map(BlankMove::reverse);
        legal.extend(
            BlankMove::ALL
                .iter()
                .copied()
                .filter(|&mv| Some(mv) != back && board.target(mv).is_some()),
        );
        if legal.is_empty() {
            // a 1x2 board has a single move that is always a reversal
            legal.push(back.expect("some move is legal"));
        }
        let mv = *legal.choose(&mut rng).expect("non-empty");
        board = board.apply(mv).expect("legal move").0;
        previous = Some(mv);
    }
    Ok(board)
}

/// A sliding-tile instance as a search domain.
#[derive(Debug, Clone)]
pub struct TilePuzzle {
    start: TileBoard,
    goal: TileGoal,
    costs: TileCostModel,
}

impl TilePuzzle {
    pub fn new(
        start: TileBoard,
        layout: GoalLayout,
        costs: TileCostModel,
    ) -> Result<Self, TileError> {
        let goal = TileGoal::new(start.rows(), start.cols(), layout)?;
        TilePuzzle::with_goal(start, goal, costs)
    }

    pub fn with_goal(
        start: TileBoard,
        goal: TileGoal,
        costs: TileCostModel,
    ) -> Result<Self, TileError> {
        let expected = (goal.board.rows(), goal.board.cols());
        let found = (start.rows(), start.cols());
        if expected != found {
            return Err(TileError::GeometryMismatch { expected, found });
        }
        if !goal.is_solvable(&start) {
            return Err(TileError::Unsolvable);
        }
        Ok(TilePuzzle { start, goal, costs })
    }

    pub fn start(&self) -> &TileBoard {
        &self.start
    }

    pub fn goal(&self) -> &TileGoal {
        &self.goal
    }

    pub fn costs(&self) -> TileCostModel {
        self.costs
    }
}

impl Domain for TilePuzzle {
    type State = TileBoard;
    type Move = BlankMove;

    fn initial_state(&self) -> TileBoard {
        self.start
    }

    fn is_goal(&self, state: &TileBoard) -> bool {
        *state == self.goal.board
    }

    fn successors(
        &self,
        state: &TileBoard,
        incoming: Option<BlankMove>,
        out: &mut Vec<Successor<TileBoard, BlankMove>>,
    ) {
        tile_successors(state, self.costs, incoming, out);
    }

    fn h1(&self, state: &TileBoard) -> Cost {
        manhattan(state, &self.goal, self.costs)
    }

    fn h2(&self, state: &TileBoard) -> Cost {
        linear_conflict(state, &self.goal, self.costs)
    }

    fn branching_factor(&self, state: &TileBoard, incoming: Option<BlankMove>) -> usize {
        state.branching_factor(incoming)
    }

    fn heuristic_names(&self) -> (&'static str, &'static str) {
        ("MD", "LC")
    }
}
