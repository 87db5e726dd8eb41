//! Slice words: a link diagram cut into horizontal slices, each holding one
//! elementary event (a cup, a cap or a crossing of two adjacent strands).
//!
//! Events are read top to bottom. Strand positions are 0-based in memory and
//! 1-based in the text format.

use std::fmt;

use crate::error::{Error, Result};

/// Orientation of a cup (a local maximum, shaped like `∩`).
///
/// `R`: travel goes up the left strand and leaves down the right strand.
/// `L`: travel goes up the right strand and leaves down the left strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orient {
    R,
    L,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SliceEvent {
    /// Creates two strands at `i`, `i + 1`.
    Cup(usize, Orient),
    /// Joins strands `i`, `i + 1`.
    Cap(usize),
    /// Strands `i`, `i + 1` swap; the one entering at `i` passes over.
    CrossOver(usize),
    /// Strands `i`, `i + 1` swap; the one entering at `i` passes under.
    CrossUnder(usize),
}

impl SliceEvent {
    pub fn pos(&self) -> usize {
        match *self {
            SliceEvent::Cup(i, _) | SliceEvent::Cap(i) => i,
            SliceEvent::CrossOver(i) | SliceEvent::CrossUnder(i) => i,
        }
    }

    pub fn is_crossing(&self) -> bool {
        matches!(self, SliceEvent::CrossOver(_) | SliceEvent::CrossUnder(_))
    }

    pub fn shifted(&self, by: usize) -> SliceEvent {
        match *self {
            SliceEvent::Cup(i, o) => SliceEvent::Cup(i + by, o),
            SliceEvent::Cap(i) => SliceEvent::Cap(i + by),
            SliceEvent::CrossOver(i) => SliceEvent::CrossOver(i + by),
            SliceEvent::CrossUnder(i) => SliceEvent::CrossUnder(i + by),
        }
    }

    pub fn mirrored(&self) -> SliceEvent {
        match *self {
            SliceEvent::CrossOver(i) => SliceEvent::CrossUnder(i),
            SliceEvent::CrossUnder(i) => SliceEvent::CrossOver(i),
            e => e,
        }
    }

    fn strand_delta(&self) -> isize {
        match self {
            SliceEvent::Cup(..) => 2,
            SliceEvent::Cap(_) => -2,
            _ => 0,
        }
    }
}

/// Port numbering inside a node. Cups and caps use 0 (left) and 1 (right).
pub const TL: usize = 0;
pub const TR: usize = 1;
pub const BL: usize = 2;
pub const BR: usize = 3;

/// Counterclockwise order of crossing ports, starting top-right.
pub(crate) const CCW: [usize; 4] = [TR, TL, BL, BR];

pub type PortRef = (usize, usize);

fn through(event: &SliceEvent, port: usize) -> usize {
    if event.is_crossing() {
        3 - port
    } else {
        1 - port
    }
}

/// One pass of a component through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub event: usize,
    pub entry: usize,
    pub exit: usize,
}

/// Result of following every strand of a positionally valid word.
#[derive(Debug, Clone)]
pub struct Trace {
    pub n_components: usize,
    /// Component of each (event, port).
    pub port_comp: Vec<[usize; 4]>,
    /// Whether travel leaves the node through this port.
    pub port_out: Vec<[bool; 4]>,
    /// First cup of each component.
    pub first_cup: Vec<usize>,
    /// Crossing passages of each component in travel order, starting at its first cup.
    pub walks: Vec<Vec<Passage>>,
    /// For every level (before event `l`), the upper port of each strand.
    pub levels: Vec<Vec<PortRef>>,
}

impl Trace {
    /// Component and downward-ness of the strand at `(level, pos)`.
    pub fn strand(&self, level: usize, pos: usize) -> (usize, bool) {
        let (e, p) = self.levels[level][pos];
        (self.port_comp[e][p], self.port_out[e][p])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SliceWord {
    pub events: Vec<SliceEvent>,
}

impl SliceWord {
    pub fn new(events: Vec<SliceEvent>) -> Self {
        SliceWord { events }
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| e.is_crossing()).count()
    }

    /// Strand count before each event, plus the final count.
    pub fn strand_counts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.events.len() + 1);
        let mut n: isize = 0;
        out.push(0);
        for e in &self.events {
            n += e.strand_delta();
            out.push(n.max(0) as usize);
        }
        out
    }

    /// Every violated invariant, in event order. Empty means valid.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        // true = strand travels downward
        let mut dirs: Vec<bool> = Vec::new();
        for (k, e) in self.events.iter().enumerate() {
            let n = dirs.len();
            match *e {
                SliceEvent::Cup(i, o) => {
                    if i > n {
                        out.push(format!("event {}: cup at {} beyond {} strands", k + 1, i + 1, n));
                        return out;
                    }
                    let (l, r) = match o {
                        Orient::R => (false, true),
                        Orient::L => (true, false),
                    };
                    dirs.insert(i, r);
                    dirs.insert(i, l);
                }
                SliceEvent::Cap(i) => {
                    if i + 1 >= n {
                        out.push(format!(
                            "event {}: cap at {} needs strands {} and {} of {}",
                            k + 1,
                            i + 1,
                            i + 1,
                            i + 2,
                            n
                        ));
                        return out;
                    }
                    if dirs[i] == dirs[i + 1] {
                        out.push(format!(
                            "event {}: cap at {} joins strands with the same orientation",
                            k + 1,
                            i + 1
                        ));
                    }
                    dirs.drain(i..i + 2);
                }
                SliceEvent::CrossOver(i) | SliceEvent::CrossUnder(i) => {
                    if i + 1 >= n {
                        out.push(format!(
                            "event {}: crossing at {} needs strands {} and {} of {}",
                            k + 1,
                            i + 1,
                            i + 1,
                            i + 2,
                            n
                        ));
                        return out;
                    }
                    dirs.swap(i, i + 1);
                }
            }
        }
        if !dirs.is_empty() {
            out.push(format!("open strands at end: {} strands remain", dirs.len()));
        }
        out
    }

    pub fn check(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(v.join("; ")))
        }
    }

    /// Follows all strands. Needs only positional validity; travel direction
    /// of each component is taken from its first cup.
    pub fn trace(&self) -> Result<Trace> {
        let ne = self.events.len();
        let none = (usize::MAX, usize::MAX);
        let mut partner = vec![[none; 4]; ne];
        let mut open: Vec<PortRef> = Vec::new();
        let mut levels = Vec::with_capacity(ne + 1);
        let bad = |k: usize, what: &str| Error::InvalidDiagram(format!("event {}: {}", k + 1, what));
        for (k, e) in self.events.iter().enumerate() {
            levels.push(open.clone());
            let n = open.len();
            match *e {
                SliceEvent::Cup(i, _) => {
                    if i > n {
                        return Err(bad(k, "cup position out of range"));
                    }
                    open.insert(i, (k, 1));
                    open.insert(i, (k, 0));
                }
                SliceEvent::Cap(i) => {
                    if i + 1 >= n {
                        return Err(bad(k, "cap position out of range"));
                    }
                    for (j, port) in [(i, 0usize), (i + 1, 1)] {
                        let up = open[j];
                        partner[up.0][up.1] = (k, port);
                        partner[k][port] = up;
                    }
                    open.drain(i..i + 2);
                }
                SliceEvent::CrossOver(i) | SliceEvent::CrossUnder(i) => {
                    if i + 1 >= n {
                        return Err(bad(k, "crossing position out of range"));
                    }
                    for (j, port) in [(i, TL), (i + 1, TR)] {
                        let up = open[j];
                        partner[up.0][up.1] = (k, port);
                        partner[k][port] = up;
                    }
                    open[i] = (k, BL);
                    open[i + 1] = (k, BR);
                }
            }
        }
        levels.push(open.clone());
        if !open.is_empty() {
            return Err(Error::InvalidDiagram(format!(
                "open strands at end: {} strands remain",
                open.len()
            )));
        }

        let mut port_comp = vec![[usize::MAX; 4]; ne];
        let mut port_out = vec![[false; 4]; ne];
        let mut first_cup = Vec::new();
        let mut walks = Vec::new();
        for (k, e) in self.events.iter().enumerate() {
            let SliceEvent::Cup(_, o) = *e else { continue };
            if port_comp[k][0] != usize::MAX {
                continue;
            }
            let comp = first_cup.len();
            first_cup.push(k);
            let mut walk = Vec::new();
            let start_exit = match o {
                Orient::R => 1,
                Orient::L => 0,
            };
            port_comp[k][start_exit] = comp;
            port_out[k][start_exit] = true;
            let mut cur = (k, start_exit);
            loop {
                let (n2, p2) = partner[cur.0][cur.1];
                port_comp[n2][p2] = comp;
                port_out[n2][p2] = false;
                let p3 = through(&self.events[n2], p2);
                if n2 == k {
                    break;
                }
                port_comp[n2][p3] = comp;
                port_out[n2][p3] = true;
                if self.events[n2].is_crossing() {
                    walk.push(Passage {
                        event: n2,
                        entry: p2,
                        exit: p3,
                    });
                }
                cur = (n2, p3);
            }
            walks.push(walk);
        }
        Ok(Trace {
            n_components: first_cup.len(),
            port_comp,
            port_out,
            first_cup,
            walks,
            levels,
        })
    }

    /// Same geometry, with every cup orientation recomputed so each component
    /// travels the way its first cup says.
    pub fn reoriented(&self) -> Result<SliceWord> {
        let t = self.trace()?;
        let events = self
            .events
            .iter()
            .enumerate()
            .map(|(k, e)| match *e {
                SliceEvent::Cup(i, _) => SliceEvent::Cup(i, if t.port_out[k][1] { Orient::R } else { Orient::L }),
                e => e,
            })
            .collect();
        Ok(SliceWord { events })
    }

    pub fn mirrored(&self) -> SliceWord {
        SliceWord {
            events: self.events.iter().map(|e| e.mirrored()).collect(),
        }
    }

    /// Closure of a braid on `n` strands. Positive letters `k` are positive
    /// crossings between braid strands `k` and `k + 1` (1-based).
    pub fn braid_closure(n: usize, letters: &[i32]) -> SliceWord {
        let mut events = Vec::new();
        for i in 0..n {
            events.push(SliceEvent::Cup(i, Orient::L));
        }
        for &l in letters {
            let i = l.unsigned_abs() as usize - 1;
            // braid strands run downward; for parallel strands CrossUnder is positive
            events.push(if l > 0 {
                SliceEvent::CrossUnder(i)
            } else {
                SliceEvent::CrossOver(i)
            });
        }
        for i in (0..n).rev() {
            events.push(SliceEvent::Cap(i));
        }
        SliceWord { events }
    }

    /// `n` side-by-side round circles.
    pub fn unlink(n: usize) -> SliceWord {
        let mut events: Vec<_> = (0..n).map(|c| SliceEvent::Cup(2 * c, Orient::R)).collect();
        events.extend((0..n).rev().map(|c| SliceEvent::Cap(2 * c)));
        SliceWord { events }
    }

    /// Text format: one event per line, 1-based positions.
    pub fn parse(text: &str) -> Result<SliceWord> {
        let mut events = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse {
                line: ln + 1,
                msg: msg.to_string(),
            };
            let mut parts = line.split_whitespace();
            let op = parts.next().ok_or_else(|| err("empty event"))?;
            let pos: usize = parts
                .next()
                .ok_or_else(|| err("missing position"))?
                .parse()
                .map_err(|_| err("position is not a positive integer"))?;
            if pos == 0 {
                return Err(err("positions are 1-based"));
            }
            let i = pos - 1;
            let ev = match op.to_ascii_lowercase().as_str() {
                "cup" => {
                    let o = match parts.next() {
                        None | Some("R") | Some("r") => Orient::R,
                        Some("L") | Some("l") => Orient::L,
                        Some(_) => return Err(err("cup orientation must be R or L")),
                    };
                    SliceEvent::Cup(i, o)
                }
                "cap" => SliceEvent::Cap(i),
                "x+" => SliceEvent::CrossOver(i),
                "x-" => SliceEvent::CrossUnder(i),
                _ => return Err(err(&format!("unknown event `{op}`"))),
            };
            if parts.next().is_some() {
                return Err(err("trailing tokens"));
            }
            events.push(ev);
        }
        Ok(SliceWord { events })
    }

    /// Every (level, position) occupied by component `comp`, sorted.
    pub fn sites(&self, trace: &Trace, comp: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (l, lv) in trace.levels.iter().enumerate() {
            for (x, &(e, p)) in lv.iter().enumerate() {
                if trace.port_comp[e][p] == comp {
                    out.push((l, x));
                }
            }
        }
        out
    }

    /// Inserts a zigzag on the strand at `(level, pos)`. An isotopy that adds
    /// two levels' worth of attachment sites.
    pub fn with_snake(&self, level: usize, pos: usize) -> SliceWord {
        let mut events = self.events[..level].to_vec();
        events.push(SliceEvent::Cup(pos + 1, Orient::R));
        events.push(SliceEvent::Cap(pos));
        events.extend_from_slice(&self.events[level..]);
        SliceWord { events }
    }
}

impl fmt::Display for SliceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SliceEvent::Cup(i, Orient::R) => write!(f, "cup {} R", i + 1),
            SliceEvent::Cup(i, Orient::L) => write!(f, "cup {} L", i + 1),
            SliceEvent::Cap(i) => write!(f, "cap {}", i + 1),
            SliceEvent::CrossOver(i) => write!(f, "x+ {}", i + 1),
            SliceEvent::CrossUnder(i) => write!(f, "x- {}", i + 1),
        }
    }
}

impl fmt::Display for SliceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.events {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SliceEvent::*;

    #[test]
    fn empty_word_is_valid() {
        let w = SliceWord::default();
        assert!(w.violations().is_empty());
        assert_eq!(w.trace().unwrap().n_components, 0);
    }

    #[test]
    fn unknot() {
        let w = SliceWord::new(vec![Cup(0, Orient::R), Cap(0)]);
        assert!(w.violations().is_empty());
        let t = w.trace().unwrap();
        assert_eq!(t.n_components, 1);
        assert!(t.walks[0].is_empty());
    }

    #[test]
    fn open_strands_rejected() {
        let w = SliceWord::new(vec![Cup(0, Orient::R)]);
        let v = w.violations();
        assert_eq!(v.len(), 1);
        assert!(v[0].contains("open strands at end"));
        assert!(w.trace().is_err());
    }

    #[test]
    fn cap_orientation_checked() {
        // two cups merged by a cap, the second one misoriented
        let w = SliceWord::new(vec![Cup(0, Orient::R), Cup(2, Orient::L), Cap(1), Cap(0)]);
        assert!(w.violations().iter().any(|v| v.contains("same orientation")));
        let fixed = w.reoriented().unwrap();
        assert!(fixed.violations().is_empty());
    }

    #[test]
    fn out_of_range_positions() {
        assert!(!SliceWord::new(vec![Cup(1, Orient::R)]).violations().is_empty());
        assert!(!SliceWord::new(vec![Cup(0, Orient::R), CrossOver(1)])
            .violations()
            .is_empty());
        assert!(!SliceWord::new(vec![Cap(0)]).violations().is_empty());
    }

    #[test]
    fn text_round_trip() {
        let text = "# hopf\ncup 1 L\ncup 2 L\nx- 1\nx- 1\ncap 2\ncap 1\n";
        let w = SliceWord::parse(text).unwrap();
        assert_eq!(w, SliceWord::braid_closure(2, &[1, 1]));
        assert_eq!(SliceWord::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(SliceWord::parse("cup 0 R"), Err(Error::Parse { line: 1, .. })));
        assert!(SliceWord::parse("twist 1").is_err());
        assert!(SliceWord::parse("cap").is_err());
        assert!(SliceWord::parse("cup 1 Q").is_err());
        assert!(SliceWord::parse("cap 1 2").is_err());
    }

    #[test]
    fn braid_components() {
        assert_eq!(SliceWord::braid_closure(2, &[1, 1]).trace().unwrap().n_components, 2);
        assert_eq!(SliceWord::braid_closure(2, &[1, 1, 1]).trace().unwrap().n_components, 1);
        assert_eq!(
            SliceWord::braid_closure(3, &[1, -2, 1, -2, 1, -2])
                .trace()
                .unwrap()
                .n_components,
            3
        );
    }

    #[test]
    fn snake_adds_sites() {
        let w = SliceWord::new(vec![Cup(0, Orient::R), Cap(0)]);
        let t = w.trace().unwrap();
        assert_eq!(w.sites(&t, 0).len(), 2);
        let s = w.with_snake(1, 0).reoriented().unwrap();
        assert!(s.violations().is_empty());
        let ts = s.trace().unwrap();
        assert_eq!(ts.n_components, 1);
        assert!(s.sites(&ts, 0).len() > 2);
    }
}
