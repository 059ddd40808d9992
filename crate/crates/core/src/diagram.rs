//! Diagrams: a finite set of arcs with a rotation (the action of the
//! order-three or infinite-cyclic generator) and an involution.
//!
//! Vertices are rotation orbits and edges are involution orbits; an arc
//! fixed by the involution is a folded edge. A connected diagram with a
//! distinguished arc determines a finite-index subgroup, the stabilizer of
//! that arc, and all the subgroup relations reduce to deciding whether a
//! base-point preserving equivariant map exists.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Arcs `0..n` with the rotation `a -> a + 1` and the involution
/// `a -> a^{-1}`, both stored as image arrays.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    rot: Vec<usize>,
    rot_inv: Vec<usize>,
    inv: Vec<usize>,
}

fn inverse_permutation(images: &[usize], what: &str) -> Result<Vec<usize>> {
    let n = images.len();
    let mut inverse = vec![usize::MAX; n];
    for (a, &b) in images.iter().enumerate() {
        if b >= n {
            return Err(Error::InvalidDiagram(format!(
                "{what}: image {b} of arc {a} is out of range 0..{n}"
            )));
        }
        if inverse[b] != usize::MAX {
            return Err(Error::InvalidDiagram(format!(
                "{what}: arc {b} is the image of both {} and {a}",
                inverse[b]
            )));
        }
        inverse[b] = a;
    }
    Ok(inverse)
}

impl Diagram {
    /// Validates and builds a diagram. With `require_trivalent`, the
    /// rotation must also satisfy `rot^3 = id`.
    pub fn new(rot: Vec<usize>, inv: Vec<usize>, require_trivalent: bool) -> Result<Self> {
        if rot.is_empty() {
            return Err(Error::InvalidDiagram(
                "a diagram needs at least one arc".to_string(),
            ));
        }
        if rot.len() != inv.len() {
            return Err(Error::InvalidDiagram(format!(
                "rot has {} entries but inv has {}",
                rot.len(),
                inv.len()
            )));
        }
        let rot_inv = inverse_permutation(&rot, "rot")?;
        inverse_permutation(&inv, "inv")?;
        if let Some(a) = (0..inv.len()).find(|&a| inv[inv[a]] != a) {
            return Err(Error::InvalidDiagram(format!(
                "inv is not an involution at arc {a}"
            )));
        }
        let d = Diagram { rot, rot_inv, inv };
        if require_trivalent && !d.is_trivalent() {
            return Err(Error::InvalidDiagram(
                "rot^3 is not the identity".to_string(),
            ));
        }
        Ok(d)
    }

    /// The one-arc diagram; its pointed version is the whole group.
    pub fn terminal() -> Self {
        Diagram {
            rot: vec![0],
            rot_inv: vec![0],
            inv: vec![0],
        }
    }

    /// Number of arcs, i.e. the index of the associated subgroups.
    pub fn size(&self) -> usize {
        self.rot.len()
    }

    pub fn rot(&self, a: usize) -> usize {
        self.rot[a]
    }

    pub fn rot_inverse(&self, a: usize) -> usize {
        self.rot_inv[a]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn rot_images(&self) -> &[usize] {
        &self.rot
    }

    pub fn inv_images(&self) -> &[usize] {
        &self.inv
    }

    pub fn is_trivalent(&self) -> bool {
        (0..self.size()).all(|a| self.rot[self.rot[self.rot[a]]] == a)
    }

    /// Images of `a` under the traversal generators, in the fixed order
    /// rotation, inverse rotation, involution.
    fn neighbours(&self, a: usize) -> [usize; 3] {
        [self.rot[a], self.rot_inv[a], self.inv[a]]
    }

    /// Whether the rotation and the involution act transitively.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.size()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(a) = stack.pop() {
            for b in [self.rot[a], self.inv[a]] {
                if !seen[b] {
                    seen[b] = true;
                    count += 1;
                    stack.push(b);
                }
            }
        }
        count == self.size()
    }

    /// Relabels arcs in breadth-first discovery order from `base`.
    ///
    /// Returns the relabelled diagram (with `base` mapped to 0) and the map
    /// old label -> new label. Requires a connected diagram.
    pub fn relabel_from(&self, base: usize) -> (Diagram, Vec<usize>) {
        let n = self.size();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[base] = 0;
        order.push(base);
        let mut head = 0;
        while head < order.len() {
            let a = order[head];
            head += 1;
            for b in self.neighbours(a) {
                if label[b] == usize::MAX {
                    label[b] = order.len();
                    order.push(b);
                }
            }
        }
        debug_assert_eq!(order.len(), n, "relabel_from needs a connected diagram");
        let rot: Vec<usize> = order.iter().map(|&a| label[self.rot[a]]).collect();
        let inv: Vec<usize> = order.iter().map(|&a| label[self.inv[a]]).collect();
        let rot_inv: Vec<usize> = order.iter().map(|&a| label[self.rot_inv[a]]).collect();
        (Diagram { rot, rot_inv, inv }, label)
    }

    /// Applies an arc permutation `sigma`: arc `a` becomes `sigma[a]`.
    pub fn conjugate_by(&self, sigma: &[usize]) -> Result<Diagram> {
        let n = self.size();
        if sigma.len() != n {
            return Err(Error::InvalidDiagram(
                "relabelling has the wrong length".to_string(),
            ));
        }
        inverse_permutation(sigma, "relabelling")?;
        let mut rot = vec![0; n];
        let mut inv = vec![0; n];
        for a in 0..n {
            rot[sigma[a]] = sigma[self.rot[a]];
            inv[sigma[a]] = sigma[self.inv[a]];
        }
        Diagram::new(rot, inv, false)
    }

    fn code_from(&self, base: usize) -> CanonicalCode {
        let (d, _) = self.relabel_from(base);
        let mut code = Vec::with_capacity(2 * d.size() + 1);
        code.push(d.size() as u32);
        code.extend(d.rot.iter().map(|&x| x as u32));
        code.extend(d.inv.iter().map(|&x| x as u32));
        CanonicalCode(code)
    }

    /// The representative obtained from the base point realising the
    /// canonical code.
    pub fn canonical_form(&self) -> Result<Diagram> {
        let best = self.canonical_base()?;
        Ok(self.relabel_from(best).0)
    }

    fn canonical_base(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut best = 0;
        let mut best_code = self.code_from(0);
        for a in 1..self.size() {
            let code = self.code_from(a);
            if code < best_code {
                best = a;
                best_code = code;
            }
        }
        Ok(best)
    }
}

impl fmt::Display for Diagram {
    /// The text format `n=<int>; rot=[...]; inv=[...]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={}; rot={}; inv={}",
            self.size(),
            join(&self.rot),
            join(&self.inv)
        )
    }
}

fn join(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(","))
}

/// Validates and builds a diagram of `n` arcs.
pub fn make_diagram(
    n: usize,
    rot: Vec<usize>,
    inv: Vec<usize>,
    require_trivalent: bool,
) -> Result<Diagram> {
    if rot.len() != n || inv.len() != n {
        return Err(Error::InvalidDiagram(format!(
            "expected {n} images, got rot: {}, inv: {}",
            rot.len(),
            inv.len()
        )));
    }
    Diagram::new(rot, inv, require_trivalent)
}

/// A connected diagram with a distinguished base arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedDiagram {
    diagram: Diagram,
    base: usize,
}

impl PointedDiagram {
    pub fn new(diagram: Diagram, base: usize) -> Result<Self> {
        if base >= diagram.size() {
            return Err(Error::InvalidDiagram(format!(
                "base arc {base} out of range 0..{}",
                diagram.size()
            )));
        }
        if !diagram.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(PointedDiagram { diagram, base })
    }

    pub fn terminal() -> Self {
        PointedDiagram {
            diagram: Diagram::terminal(),
            base: 0,
        }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn size(&self) -> usize {
        self.diagram.size()
    }

    /// Code of the breadth-first relabelling from the base arc; equal codes
    /// mean pointed-isomorphic diagrams.
    pub fn pointed_code(&self) -> CanonicalCode {
        self.diagram.code_from(self.base)
    }
}

impl fmt::Display for PointedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; base={}", self.diagram, self.base)
    }
}

/// `(n, rot', inv')` after canonical relabelling, flattened. Ordered
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Little-endian byte serialisation.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|x| x.to_le_bytes()).collect()
    }

    /// Rebuilds the canonical representative.
    pub fn to_diagram(&self) -> Diagram {
        let n = self.0[0] as usize;
        let rot = self.0[1..=n].iter().map(|&x| x as usize).collect();
        let inv = self.0[n + 1..=2 * n].iter().map(|&x| x as usize).collect();
        Diagram::new(rot, inv, false).expect("canonical codes encode valid diagrams")
    }
}

/// Which generator exposed a conflict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Rot,
    Inv,
}

impl Generator {
    pub fn name(self) -> &'static str {
        match self {
            Generator::Rot => "rot",
            Generator::Inv => "inv",
        }
    }
}

/// Obstruction to a pointed morphism: `arc` of the source is forced to map
/// both to `first` and to `second`. The second image arises by applying
/// `generator` to `from`, whose image was already fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub from: usize,
    pub generator: Generator,
    pub arc: usize,
    pub first: usize,
    pub second: usize,
}

/// Result of running the closure on `(src base, dst base)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Morphism {
    /// The equivariant map, `map[a]` being the image of source arc `a`.
    Found(Vec<usize>),
    Obstructed(CriticalPair),
}

impl Morphism {
    pub fn exists(&self) -> bool {
        matches!(self, Morphism::Found(_))
    }
}

/// Closes the pair `(src.base, dst.base)` under the rotation and the
/// involution, stopping at the first arc that would get two images.
///
/// Each source arc is visited once, so this costs `O(src.size())`.
pub fn pointed_morphism(src: &PointedDiagram, dst: &PointedDiagram) -> Morphism {
    let s = &src.diagram;
    let t = &dst.diagram;
    let mut map = vec![usize::MAX; s.size()];
    map[src.base] = dst.base;
    let mut queue = VecDeque::from([src.base]);
    while let Some(a) = queue.pop_front() {
        let b = map[a];
        for (generator, sa, tb) in [
            (Generator::Rot, s.rot[a], t.rot[b]),
            (Generator::Inv, s.inv[a], t.inv[b]),
        ] {
            if map[sa] == usize::MAX {
                map[sa] = tb;
                queue.push_back(sa);
            } else if map[sa] != tb {
                return Morphism::Obstructed(CriticalPair {
                    from: a,
                    generator,
                    arc: sa,
                    first: map[sa],
                    second: tb,
                });
            }
        }
    }
    Morphism::Found(map)
}

pub fn pointed_morphism_exists(src: &PointedDiagram, dst: &PointedDiagram) -> bool {
    pointed_morphism(src, dst).exists()
}

/// Pointed isomorphism: between connected diagrams of equal size any
/// pointed morphism is bijective.
pub fn pointed_isomorphic(p1: &PointedDiagram, p2: &PointedDiagram) -> bool {
    p1.size() == p2.size() && pointed_morphism_exists(p1, p2)
}

/// Minimum over base points of the breadth-first relabelling code.
pub fn canonical_code(d: &Diagram) -> Result<CanonicalCode> {
    let base = d.canonical_base()?;
    Ok(d.code_from(base))
}

/// All automorphisms, as arc maps. The `i`-th entry sends arc 0 to the
/// `i`-th arc that admits such a map.
pub fn automorphisms(d: &Diagram) -> Result<Vec<Vec<usize>>> {
    let origin = PointedDiagram::new(d.clone(), 0)?;
    Ok((0..d.size())
        .filter_map(|a| {
            let target = PointedDiagram {
                diagram: d.clone(),
                base: a,
            };
            match pointed_morphism(&origin, &target) {
                Morphism::Found(map) => Some(map),
                Morphism::Obstructed(_) => None,
            }
        })
        .collect())
}

/// `|Aut(d)|`, the number of arcs reachable from arc 0 by an automorphism.
pub fn automorphism_order(d: &Diagram) -> Result<usize> {
    Ok(automorphisms(d)?.len())
}

/// Whether the associated subgroups are normal: the automorphism group is
/// transitive on arcs.
pub fn is_normal(d: &Diagram) -> Result<bool> {
    Ok(automorphism_order(d)? == d.size())
}

/// Whether the subgroup of `p_big` is contained in the subgroup of
/// `p_small`: a pointed morphism runs from the larger diagram to the
/// smaller.
pub fn subgroup_includes(p_big: &PointedDiagram, p_small: &PointedDiagram) -> bool {
    pointed_morphism_exists(p_big, p_small)
}

/// Subgroups are conjugate iff their unpointed diagrams are isomorphic.
pub fn conjugate_subgroups(p1: &PointedDiagram, p2: &PointedDiagram) -> bool {
    p1.size() == p2.size() && canonical_code(&p1.diagram).ok() == canonical_code(&p2.diagram).ok()
}

/// Finds a pointed isomorphism `(d1, 0) -> (d2, a)` for some `a`, i.e. an
/// unpointed isomorphism.
pub fn find_isomorphism(d1: &Diagram, d2: &Diagram) -> Result<Option<Vec<usize>>> {
    if d1.size() != d2.size() {
        return Ok(None);
    }
    let src = PointedDiagram::new(d1.clone(), 0)?;
    if !d2.is_connected() {
        return Err(Error::Disconnected);
    }
    for a in 0..d2.size() {
        let dst = PointedDiagram {
            diagram: d2.clone(),
            base: a,
        };
        if let Morphism::Found(map) = pointed_morphism(&src, &dst) {
            return Ok(Some(map));
        }
    }
    Ok(None)
}

/// Rotation orbits, in order of their smallest arc.
pub fn rot_orbits(d: &Diagram) -> Vec<Vec<usize>> {
    orbits(d.size(), |a| d.rot[a])
}

/// Involution orbits (edges), in order of their smallest arc.
pub fn inv_orbits(d: &Diagram) -> Vec<Vec<usize>> {
    orbits(d.size(), |a| d.inv[a])
}

fn orbits(n: usize, next: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut a = start;
        while !seen[a] {
            seen[a] = true;
            orbit.push(a);
            a = next(a);
        }
        out.push(orbit);
    }
    out
}

/// Bipartite graph of the barycentric subdivision: black vertices are
/// rotation orbits, white vertices sit in the middle of each edge, and each
/// arc becomes one black-white edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicoloredGraph {
    pub black: usize,
    pub white: usize,
    /// `(black, white)` for each arc, indexed by arc.
    pub edges: Vec<(usize, usize)>,
}

impl BicoloredGraph {
    pub fn white_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.white];
        for &(_, w) in &self.edges {
            deg[w] += 1;
        }
        deg
    }

    /// Every white vertex has degree 1 or 2 and every edge joins a black
    /// vertex to a white one.
    pub fn is_proper(&self) -> bool {
        self.white_degrees().iter().all(|&d| d == 1 || d == 2)
            && self
                .edges
                .iter()
                .all(|&(b, w)| b < self.black && w < self.white)
    }

    /// Graphviz rendering: filled black circles, open white circles.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph diagram {\n");
        out.push_str("  node [shape=circle, label=\"\", width=0.15];\n");
        for b in 0..self.black {
            out.push_str(&format!("  b{b} [style=filled, fillcolor=black];\n"));
        }
        for w in 0..self.white {
            out.push_str(&format!("  w{w} [style=solid, fillcolor=white];\n"));
        }
        for (arc, &(b, w)) in self.edges.iter().enumerate() {
            out.push_str(&format!("  b{b} -- w{w} [label=\"{arc}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub fn barycentric_export(d: &Diagram) -> BicoloredGraph {
    let mut black_of = vec![0; d.size()];
    let vertices = rot_orbits(d);
    for (i, orbit) in vertices.iter().enumerate() {
        for &a in orbit {
            black_of[a] = i;
        }
    }
    let mut white_of = vec![0; d.size()];
    let edges = inv_orbits(d);
    for (i, orbit) in edges.iter().enumerate() {
        for &a in orbit {
            white_of[a] = i;
        }
    }
    BicoloredGraph {
        black: vertices.len(),
        white: edges.len(),
        edges: (0..d.size()).map(|a| (black_of[a], white_of[a])).collect(),
    }
}

/// A diagram read from the text format, with its optional base arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedDiagram {
    pub diagram: Diagram,
    pub base: Option<usize>,
}

impl ParsedDiagram {
    pub fn pointed(&self) -> Result<PointedDiagram> {
        match self.base {
            Some(b) => PointedDiagram::new(self.diagram.clone(), b),
            None => Err(Error::InvalidDiagram("a base arc is required".to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(usize),
    Punct(char),
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Lexer<'_> {
    fn error(line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Next token with its starting position, skipping whitespace.
    fn next_token(&mut self) -> Result<Option<(Token, usize, usize)>> {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.bump();
        }
        let (line, column) = (self.line, self.column);
        let Some(&c) = self.chars.peek() else {
            return Ok(None);
        };
        let token = if c.is_ascii_digit() {
            let mut value: usize = 0;
            while let Some(d) = self.chars.peek().and_then(|c| c.to_digit(10)) {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(d as usize))
                    .ok_or_else(|| Self::error(line, column, "integer too large"))?;
                self.bump();
            }
            Token::Int(value)
        } else if c.is_ascii_alphabetic() {
            let mut ident = String::new();
            while let Some(&c) = self.chars.peek().filter(|c| c.is_ascii_alphanumeric()) {
                ident.push(c);
                self.bump();
            }
            Token::Ident(ident)
        } else if "=[],;".contains(c) {
            self.bump();
            Token::Punct(c)
        } else {
            return Err(Self::error(
                line,
                column,
                format!("unexpected character '{c}'"),
            ));
        };
        Ok(Some((token, line, column)))
    }
}

/// Parses `n=<int>; rot=[...]; inv=[...]` with an optional `; base=<int>`.
///
/// Fields may come in any order; whitespace is ignored. The diagram is
/// validated but not required to be trivalent or connected.
pub fn parse_diagram(text: &str) -> Result<ParsedDiagram> {
    let mut lexer = Lexer {
        chars: text.chars().peekable(),
        line: 1,
        column: 1,
    };
    let mut tokens = Vec::new();
    while let Some(t) = lexer.next_token()? {
        tokens.push(t);
    }
    let end = (lexer.line, lexer.column);
    let mut pos = 0;
    let mut n = None;
    let mut rot = None;
    let mut inv = None;
    let mut base = None;

    let at = |pos: usize| tokens.get(pos).map_or(end, |t| (t.1, t.2));
    let expect_punct = |pos: usize, p: char| -> Result<()> {
        match tokens.get(pos) {
            Some((Token::Punct(c), _, _)) if *c == p => Ok(()),
            _ => {
                let (l, c) = at(pos);
                Err(Lexer::error(l, c, format!("expected '{p}'")))
            }
        }
    };
    let expect_int = |pos: usize| -> Result<usize> {
        match tokens.get(pos) {
            Some((Token::Int(v), _, _)) => Ok(*v),
            _ => {
                let (l, c) = at(pos);
                Err(Lexer::error(l, c, "expected an integer"))
            }
        }
    };

    while pos < tokens.len() {
        let (line, column) = at(pos);
        let name = match &tokens[pos].0 {
            Token::Ident(name) => name.clone(),
            Token::Punct(';') => {
                pos += 1;
                continue;
            }
            _ => return Err(Lexer::error(line, column, "expected a field name")),
        };
        pos += 1;
        expect_punct(pos, '=')?;
        pos += 1;
        match name.as_str() {
            "n" | "base" => {
                let v = expect_int(pos)?;
                pos += 1;
                let slot = if name == "n" { &mut n } else { &mut base };
                if slot.replace(v).is_some() {
                    return Err(Lexer::error(
                        line,
                        column,
                        format!("duplicate field '{name}'"),
                    ));
                }
            }
            "rot" | "inv" => {
                expect_punct(pos, '[')?;
                pos += 1;
                let mut values = Vec::new();
                if !matches!(tokens.get(pos), Some((Token::Punct(']'), _, _))) {
                    loop {
                        values.push(expect_int(pos)?);
                        pos += 1;
                        match tokens.get(pos) {
                            Some((Token::Punct(','), _, _)) => pos += 1,
                            _ => break,
                        }
                    }
                }
                expect_punct(pos, ']')?;
                pos += 1;
                let slot = if name == "rot" { &mut rot } else { &mut inv };
                if slot.replace(values).is_some() {
                    return Err(Lexer::error(
                        line,
                        column,
                        format!("duplicate field '{name}'"),
                    ));
                }
            }
            other => {
                return Err(Lexer::error(
                    line,
                    column,
                    format!("unknown field '{other}'"),
                ));
            }
        }
        if pos < tokens.len() {
            expect_punct(pos, ';')?;
        }
    }

    let missing = |field: &str| Lexer::error(end.0, end.1, format!("missing field '{field}'"));
    let n = n.ok_or_else(|| missing("n"))?;
    let rot = rot.ok_or_else(|| missing("rot"))?;
    let inv = inv.ok_or_else(|| missing("inv"))?;
    let diagram = make_diagram(n, rot, inv, false)?;
    if let Some(b) = base {
        if b >= n {
            return Err(Error::InvalidDiagram(format!(
                "base arc {b} out of range 0..{n}"
            )));
        }
    }
    Ok(ParsedDiagram { diagram, base })
}
