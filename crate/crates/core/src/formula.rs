//! t-normalized Boolean formulas: element trees, evaluation, exhaustive
//! weighted satisfiability and the nested interval layout used by the
//! path-emulation reduction.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// One node of a formula tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    And(Vec<Element>),
    Or(Vec<Element>),
    /// Positive literal `x_i`, `i` is 1-based.
    Pos(u32),
    /// Negative literal `not x_i`.
    Neg(u32),
}

impl Element {
    pub fn is_literal(&self) -> bool {
        matches!(self, Element::Pos(_) | Element::Neg(_))
    }

    fn children(&self) -> &[Element] {
        match self {
            Element::And(c) | Element::Or(c) => c,
            _ => &[],
        }
    }

    fn max_var(&self) -> u32 {
        match self {
            Element::Pos(i) | Element::Neg(i) => *i,
            Element::And(c) | Element::Or(c) => c.iter().map(Element::max_var).max().unwrap_or(0),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Pos(i) => write!(f, "x{i}"),
            Element::Neg(i) => write!(f, "(not x{i})"),
            Element::And(c) | Element::Or(c) => {
                let op = if matches!(self, Element::And(_)) { "and" } else { "or" };
                write!(f, "({op}")?;
                for child in c {
                    write!(f, " {child}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{kind} directly under {kind}: formula is not t-normalized")]
    NotAlternating { kind: &'static str },
    #[error("connective with no children")]
    EmptyConnective,
    #[error("variable index {index} outside 1..={n}")]
    VariableOutOfRange { index: u32, n: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("not t-normalized at byte {pos}: {kind} directly under {kind}")]
    NotNormalized { pos: usize, kind: &'static str },
}

/// A t-normalized formula over variables `x_1..x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Formula {
    root: Element,
    n: u32,
}

impl Formula {
    pub fn new(root: Element, n: u32) -> Result<Self, FormulaError> {
        fn check(e: &Element, parent: Option<bool>, n: u32) -> Result<(), FormulaError> {
            match e {
                Element::Pos(i) | Element::Neg(i) => {
                    if *i == 0 || *i > n {
                        return Err(FormulaError::VariableOutOfRange { index: *i, n });
                    }
                    Ok(())
                }
                Element::And(c) | Element::Or(c) => {
                    let is_and = matches!(e, Element::And(_));
                    if parent == Some(is_and) {
                        let kind = if is_and { "and" } else { "or" };
                        return Err(FormulaError::NotAlternating { kind });
                    }
                    if c.is_empty() {
                        return Err(FormulaError::EmptyConnective);
                    }
                    c.iter().try_for_each(|ch| check(ch, Some(is_and), n))
                }
            }
        }
        check(&root, None, n)?;
        Ok(Formula { root, n })
    }

    /// Builds a formula whose variable count is the largest index used.
    pub fn from_root(root: Element) -> Result<Self, FormulaError> {
        let n = root.max_var();
        Self::new(root, n)
    }

    pub fn root(&self) -> &Element {
        &self.root
    }

    pub fn num_vars(&self) -> u32 {
        self.n
    }

    /// Same formula over a larger variable set; the new variables do not occur.
    pub fn with_num_vars(&self, n: u32) -> Result<Self, FormulaError> {
        Self::new(self.root.clone(), n)
    }

    pub fn evaluate(&self, a: &Assignment) -> bool {
        fn eval(e: &Element, a: &Assignment) -> bool {
            match e {
                Element::Pos(i) => a.is_true(*i),
                Element::Neg(i) => !a.is_true(*i),
                Element::And(c) => c.iter().all(|x| eval(x, a)),
                Element::Or(c) => c.iter().any(|x| eval(x, a)),
            }
        }
        eval(&self.root, a)
    }

    /// Truth value of every element under `a`, in pre-order.
    pub fn element_values(&self, a: &Assignment) -> Vec<bool> {
        fn walk(e: &Element, a: &Assignment, out: &mut Vec<bool>) -> bool {
            let id = out.len();
            out.push(false);
            let v = match e {
                Element::Pos(i) => a.is_true(*i),
                Element::Neg(i) => !a.is_true(*i),
                Element::And(c) => c.iter().fold(true, |acc, x| walk(x, a, out) && acc),
                Element::Or(c) => c.iter().fold(false, |acc, x| walk(x, a, out) || acc),
            };
            out[id] = v;
            v
        }
        let mut out = Vec::new();
        walk(&self.root, a, &mut out);
        out
    }

    /// First satisfying assignment with exactly `k` true variables, in
    /// lexicographic order of the true-variable sets.
    pub fn weighted_sat_oracle(&self, k: u32) -> Option<Assignment> {
        self.weighted_solutions(k).into_iter().next()
    }

    /// Every satisfying assignment with exactly `k` true variables.
    pub fn weighted_solutions(&self, k: u32) -> Vec<Assignment> {
        let mut out = Vec::new();
        if k > self.n {
            return out;
        }
        let mut chosen: Vec<u32> = (1..=k).collect();
        loop {
            let a = Assignment::from_vars(chosen.iter().copied());
            if self.evaluate(&a) {
                out.push(a);
            }
            // advance to the next k-combination of 1..=n
            let mut i = k as usize;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if chosen[i] < self.n - (k - 1 - i as u32) {
                    chosen[i] += 1;
                    for j in i + 1..k as usize {
                        chosen[j] = chosen[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    pub fn classify_depth(&self) -> DepthInfo {
        let mut or_depth = Vec::new();
        let mut t = 0;
        fn walk(e: &Element, parent_depth: u32, level: u32, out: &mut Vec<u32>, t: &mut u32) {
            let d = if matches!(e, Element::Or(_)) { parent_depth + 1 } else { parent_depth };
            out.push(d);
            if e.is_literal() {
                *t = (*t).max(level);
            }
            for c in e.children() {
                walk(c, d, level + 1, out, t);
            }
        }
        walk(&self.root, 0, 0, &mut or_depth, &mut t);
        let t_prime = or_depth.iter().copied().max().unwrap_or(0);
        DepthInfo { t, t_prime, or_depth }
    }

    pub fn compute_layout(&self) -> Result<FormulaLayout, LayoutError> {
        FormulaLayout::build(self)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

/// Set of variables assigned true.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(BTreeSet<u32>);

impl Assignment {
    pub fn from_vars(vars: impl IntoIterator<Item = u32>) -> Self {
        Assignment(vars.into_iter().collect())
    }

    pub fn is_true(&self, i: u32) -> bool {
        self.0.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True variables in increasing order.
    pub fn vars(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthInfo {
    /// Number of connective levels on the deepest root-to-literal path.
    pub t: u32,
    /// Number of nested disjunction levels.
    pub t_prime: u32,
    /// Or-depth of each element, in pre-order.
    pub or_depth: Vec<u32>,
}

// ---------------------------------------------------------------------------
// parsing

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

#[derive(Debug, PartialEq, Eq)]
enum Token<'a> {
    Open,
    Close,
    Word(&'a str),
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<(usize, Token<'a>)> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let c = rest.chars().next()?;
        Some(match c {
            '(' => (self.pos, Token::Open),
            ')' => (self.pos, Token::Close),
            _ => {
                let end = rest
                    .find(|ch: char| ch.is_whitespace() || ch == '(' || ch == ')')
                    .unwrap_or(rest.len());
                (self.pos, Token::Word(&rest[..end]))
            }
        })
    }

    fn next(&mut self) -> Option<(usize, Token<'a>)> {
        let tok = self.peek()?;
        self.pos += match tok.1 {
            Token::Open | Token::Close => 1,
            Token::Word(w) => w.len(),
        };
        Some(tok)
    }
}

fn syntax(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { pos, msg: msg.into() }
}

fn parse_var(pos: usize, w: &str) -> Result<u32, ParseError> {
    let digits = w
        .strip_prefix('x')
        .ok_or_else(|| syntax(pos, format!("expected variable xI, found `{w}`")))?;
    match digits.parse::<u32>() {
        Ok(i) if i >= 1 && digits.bytes().all(|b| b.is_ascii_digit()) => Ok(i),
        _ => Err(syntax(pos, format!("bad variable `{w}`"))),
    }
}

fn parse_expr(lx: &mut Lexer<'_>, parent: Option<bool>) -> Result<Element, ParseError> {
    let end = lx.src.len();
    match lx.next() {
        None => Err(syntax(end, "unexpected end of input")),
        Some((pos, Token::Close)) => Err(syntax(pos, "unexpected `)`")),
        Some((pos, Token::Word(w))) => Ok(Element::Pos(parse_var(pos, w)?)),
        Some((_, Token::Open)) => {
            let (pos, head) = lx.next().ok_or_else(|| syntax(end, "unexpected end of input"))?;
            let head = match head {
                Token::Word(w) => w,
                _ => return Err(syntax(pos, "expected `and`, `or` or `not`")),
            };
            match head {
                "not" => {
                    let (vp, tok) = lx.next().ok_or_else(|| syntax(end, "unexpected end of input"))?;
                    let i = match tok {
                        Token::Word(w) => parse_var(vp, w)?,
                        _ => return Err(syntax(vp, "`not` takes a single variable")),
                    };
                    match lx.next() {
                        Some((_, Token::Close)) => Ok(Element::Neg(i)),
                        Some((p, _)) => Err(syntax(p, "expected `)` after negated variable")),
                        None => Err(syntax(end, "unexpected end of input")),
                    }
                }
                "and" | "or" => {
                    let is_and = head == "and";
                    if parent == Some(is_and) {
                        return Err(ParseError::NotNormalized { pos, kind: if is_and { "and" } else { "or" } });
                    }
                    let mut children = Vec::new();
                    loop {
                        match lx.peek() {
                            Some((_, Token::Close)) => {
                                lx.next();
                                break;
                            }
                            None => return Err(syntax(end, "unexpected end of input")),
                            Some(_) => children.push(parse_expr(lx, Some(is_and))?),
                        }
                    }
                    if children.is_empty() {
                        return Err(syntax(pos, format!("`{head}` needs at least one child")));
                    }
                    Ok(if is_and { Element::And(children) } else { Element::Or(children) })
                }
                other => Err(syntax(pos, format!("unknown connective `{other}`"))),
            }
        }
    }
}

/// Parses the nested parenthesized formula syntax, e.g. `(and (or x1 (not x2)))`.
/// The variable count is the largest index that occurs.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut lx = Lexer { src: text, pos: 0 };
    let root = parse_expr(&mut lx, None)?;
    if let Some((pos, _)) = lx.peek() {
        return Err(syntax(pos, "trailing input after formula"));
    }
    Formula::from_root(root).map_err(|e| syntax(0, e.to_string()))
}

// ---------------------------------------------------------------------------
// interval layout

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementKind {
    And,
    Or,
    Pos(u32),
    Neg(u32),
}

/// Anchor data of a disjunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anchors {
    pub left: u64,
    pub right: u64,
    /// Number of terms.
    pub terms: u64,
    /// Common interval size of the terms.
    pub term_size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementInfo {
    pub kind: ElementKind,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub or_depth: u32,
    pub size: u64,
    pub left: u64,
    pub right: u64,
    pub anchors: Option<Anchors>,
}

impl ElementInfo {
    /// Middle integer of a literal's interval.
    pub fn midpoint(&self, n: u32) -> Option<u64> {
        match self.kind {
            ElementKind::Pos(_) | ElementKind::Neg(_) => Some(self.left + n as u64),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("disjunction (element {element}) has terms of different interval sizes")]
    UnequalTerms { element: usize },
    #[error("interval arithmetic overflowed")]
    Overflow,
}

/// Interval sizes, intervals and anchor points of every element, in pre-order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaLayout {
    pub n: u32,
    pub t: u32,
    pub t_prime: u32,
    /// Length of the target path, `2 + 3n + s(F)`.
    pub m: u64,
    pub elements: Vec<ElementInfo>,
}

impl FormulaLayout {
    fn build(f: &Formula) -> Result<Self, LayoutError> {
        let depth = f.classify_depth();
        let n = f.n;
        let mut elements = Vec::new();

        fn flatten(e: &Element, parent: Option<usize>, depth: &[u32], out: &mut Vec<ElementInfo>) -> usize {
            let id = out.len();
            let kind = match e {
                Element::And(_) => ElementKind::And,
                Element::Or(_) => ElementKind::Or,
                Element::Pos(i) => ElementKind::Pos(*i),
                Element::Neg(i) => ElementKind::Neg(*i),
            };
            out.push(ElementInfo {
                kind,
                parent,
                children: Vec::new(),
                or_depth: depth[id],
                size: 0,
                left: 0,
                right: 0,
                anchors: None,
            });
            for c in e.children() {
                let cid = flatten(c, Some(id), depth, out);
                out[id].children.push(cid);
            }
            id
        }
        flatten(&f.root, None, &depth.or_depth, &mut elements);

        // sizes bottom-up: children always have larger ids in pre-order
        for id in (0..elements.len()).rev() {
            let size = match elements[id].kind {
                ElementKind::Pos(_) | ElementKind::Neg(_) => 2 * n as u64 + 1,
                ElementKind::And => elements[id]
                    .children
                    .iter()
                    .try_fold(0u64, |acc, &c| acc.checked_add(elements[c].size))
                    .ok_or(LayoutError::Overflow)?,
                ElementKind::Or => {
                    let sizes: Vec<u64> = elements[id].children.iter().map(|&c| elements[c].size).collect();
                    let m = sizes[0];
                    if sizes.iter().any(|&s| s != m) {
                        return Err(LayoutError::UnequalTerms { element: id });
                    }
                    let q = sizes.len() as u64;
                    (10 * q + 5).checked_mul(m).ok_or(LayoutError::Overflow)?
                }
            };
            elements[id].size = size;
        }

        // intervals top-down
        elements[0].left = 2 * n as u64 + 2;
        for id in 0..elements.len() {
            let left = elements[id].left;
            elements[id].right = left + elements[id].size - 1;
            let children = elements[id].children.clone();
            match elements[id].kind {
                ElementKind::And => {
                    let mut next = left;
                    for c in children {
                        elements[c].left = next;
                        next += elements[c].size;
                    }
                }
                ElementKind::Or => {
                    let q = children.len() as u64;
                    let m = elements[children[0]].size;
                    let la = left + (4 * q + 2) * m;
                    let ra = left + (6 * q + 3) * m;
                    elements[id].anchors = Some(Anchors { left: la, right: ra, terms: q, term_size: m });
                    for (i, c) in children.into_iter().enumerate() {
                        elements[c].left = la + (2 * i as u64 + 1) * m;
                    }
                }
                _ => {}
            }
        }

        let m = (2 + 3 * n as u64).checked_add(elements[0].size).ok_or(LayoutError::Overflow)?;
        Ok(FormulaLayout { n, t: depth.t, t_prime: depth.t_prime, m, elements })
    }

    pub fn root(&self) -> &ElementInfo {
        &self.elements[0]
    }

    /// Disjunctions of a given or-depth, left to right.
    pub fn disjunctions_at(&self, or_depth: u32) -> impl Iterator<Item = (usize, &ElementInfo)> {
        self.elements
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.kind == ElementKind::Or && e.or_depth == or_depth)
    }

    pub fn literals(&self) -> impl Iterator<Item = (usize, &ElementInfo)> {
        self.elements
            .iter()
            .enumerate()
            .filter(|(_, e)| matches!(e.kind, ElementKind::Pos(_) | ElementKind::Neg(_)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn parses_single_clause() {
        let g = f("(and (or x1 x2))");
        assert_eq!(g.num_vars(), 2);
        assert_eq!(g.root(), &Element::And(vec![Element::Or(vec![Element::Pos(1), Element::Pos(2)])]));
        assert_eq!(f("(or x1)").root(), &Element::Or(vec![Element::Pos(1)]));
    }

    #[test]
    fn rejects_non_alternating() {
        let err = parse_formula("(and (and x1))").unwrap_err();
        assert!(matches!(err, ParseError::NotNormalized { kind: "and", .. }), "{err}");
        assert!(matches!(parse_formula("(or (or x1))"), Err(ParseError::NotNormalized { .. })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(parse_formula("(and (or x1 x2)"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_formula("(and)"), Err(ParseError::Syntax { pos: 1, .. })));
        assert!(matches!(parse_formula("(and (or y1))"), Err(ParseError::Syntax { pos: 9, .. })));
        assert!(matches!(parse_formula("(or x1) x2"), Err(ParseError::Syntax { pos: 8, .. })));
        assert!(matches!(parse_formula("(or (not x1 x2))"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_formula("(or x0)"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn display_round_trips() {
        let g = f("  (and (or x1 (not x3))\n (or x2))");
        assert_eq!(f(&g.to_string()), g);
        assert_eq!(g.to_string(), "(and (or x1 (not x3)) (or x2))");
    }

    #[test]
    fn depths() {
        let cnf = f("(and (or x1 x2) (or x2))").classify_depth();
        assert_eq!((cnf.t, cnf.t_prime), (2, 1));
        assert_eq!(cnf.or_depth, vec![0, 1, 1, 1, 1, 1]);
        let deep = f("(and (or (and (or x1))))");
        let d = deep.classify_depth();
        assert_eq!(d.t_prime, 2);
        assert_eq!(d.or_depth[3], 2);
        assert_eq!(f("(and x1 x2)").classify_depth().t_prime, 0);
    }

    #[test]
    fn evaluate_and_oracle() {
        let g = f("(and (or x1 x2) (or (not x1) (not x2)))");
        assert!(g.evaluate(&Assignment::from_vars([1])));
        assert!(!g.evaluate(&Assignment::from_vars([1, 2])));
        assert!(!f("(or x1)").evaluate(&Assignment::default()));
        assert_eq!(g.weighted_sat_oracle(1), Some(Assignment::from_vars([1])));
        assert_eq!(g.weighted_solutions(1).len(), 2);
        assert_eq!(g.weighted_sat_oracle(2), None);
        assert_eq!(f("(or x1)").weighted_sat_oracle(0), None);
        assert_eq!(g.weighted_sat_oracle(3), None);
    }

    #[test]
    fn layout_of_single_clause() {
        let l = f("(and (or x1 x2))").compute_layout().unwrap();
        assert_eq!(l.m, 133);
        let or = &l.elements[1];
        assert_eq!(or.size, 125);
        assert_eq!(l.root().size, 125);
        assert_eq!(l.root().left, 6);
        let a = or.anchors.unwrap();
        assert_eq!((a.left, a.right, a.term_size, a.terms), (56, 81, 5, 2));
        assert_eq!((l.elements[2].left, l.elements[2].right), (61, 65));
        assert_eq!((l.elements[3].left, l.elements[3].right), (71, 75));
        assert_eq!(l.elements[2].midpoint(2), Some(63));
        assert_eq!(l.elements[3].midpoint(2), Some(73));
        assert_eq!(l.root().right, l.m - 2 - 1);
    }

    #[test]
    fn unequal_terms_rejected() {
        let g = f("(and (or x1 (and (or x2))))");
        assert!(matches!(g.compute_layout(), Err(LayoutError::UnequalTerms { element: 1 })));
    }
}
