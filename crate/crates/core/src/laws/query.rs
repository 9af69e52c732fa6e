//! Boolean queries over lattice and filter predicates, e.g.
//! `cond1 & !cond2` or `maximal & !prime`.
//!
//! Grammar: `expr := term ('|' term)*`, `term := factor ('&' factor)*`,
//! `factor := '!' factor | '(' expr ')' | name`. Lattice predicates
//! (`cond1`, `cond2`, `d_stonean`, `pseudocomplemented`) are properties of
//! the whole lattice; filter predicates are properties of one filter. A
//! query that mentions a filter predicate holds on a lattice when some
//! filter satisfies it, and that filter is the witness.

use std::fmt;

use thiserror::Error;

use crate::filters::Filter;
use crate::lattice::Lattice;
use crate::set::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    Cond1,
    Cond2,
    DStonean,
    Pseudocomplemented,
    Proper,
    DFilter,
    Closed,
    Coherent,
    Maximal,
    Prime,
    Median,
}

impl Predicate {
    pub const ALL: [Predicate; 11] = [
        Predicate::Cond1,
        Predicate::Cond2,
        Predicate::DStonean,
        Predicate::Pseudocomplemented,
        Predicate::Proper,
        Predicate::DFilter,
        Predicate::Closed,
        Predicate::Coherent,
        Predicate::Maximal,
        Predicate::Prime,
        Predicate::Median,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Cond1 => "cond1",
            Predicate::Cond2 => "cond2",
            Predicate::DStonean => "d_stonean",
            Predicate::Pseudocomplemented => "pseudocomplemented",
            Predicate::Proper => "proper",
            Predicate::DFilter => "d_filter",
            Predicate::Closed => "closed",
            Predicate::Coherent => "coherent",
            Predicate::Maximal => "maximal",
            Predicate::Prime => "prime",
            Predicate::Median => "median",
        }
    }

    pub fn from_name(name: &str) -> Option<Predicate> {
        Predicate::ALL.into_iter().find(|p| p.name() == name)
    }

    pub fn is_filter_predicate(self) -> bool {
        !matches!(
            self,
            Predicate::Cond1
                | Predicate::Cond2
                | Predicate::DStonean
                | Predicate::Pseudocomplemented
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    Pred(Predicate),
    Not(Box<Query>),
    And(Box<Query>, Box<Query>),
    Or(Box<Query>, Box<Query>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("query syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Name(String),
    Not,
    And,
    Or,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, QueryError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let tok = match c {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '!' => Token::Not,
            '&' => Token::And,
            '|' => Token::Or,
            '(' => Token::Open,
            ')' => Token::Close,
            c if c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '.' => {
                let mut name = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '.' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((i, Token::Name(name)));
                continue;
            }
            other => {
                return Err(QueryError::Syntax {
                    offset: i,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        chars.next();
        out.push((i, tok));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(i, _)| *i)
    }

    fn error(&self, message: &str) -> QueryError {
        QueryError::Syntax {
            offset: self.offset(),
            message: message.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Query, QueryError> {
        let mut q = self.term()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            q = Query::Or(Box::new(q), Box::new(self.term()?));
        }
        Ok(q)
    }

    fn term(&mut self) -> Result<Query, QueryError> {
        let mut q = self.factor()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            q = Query::And(Box::new(q), Box::new(self.factor()?));
        }
        Ok(q)
    }

    fn factor(&mut self) -> Result<Query, QueryError> {
        match self.peek().cloned() {
            Some(Token::Not) => {
                self.pos += 1;
                Ok(Query::Not(Box::new(self.factor()?)))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let q = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(q)
            }
            Some(Token::Name(name)) => {
                self.pos += 1;
                Predicate::from_name(&name)
                    .map(Query::Pred)
                    .ok_or(QueryError::UnknownPredicate(name))
            }
            Some(_) => Err(self.error("expected a predicate, `!` or `(`")),
            None => Err(self.error("unexpected end of query")),
        }
    }
}

impl Query {
    pub fn parse(text: &str) -> Result<Query, QueryError> {
        let mut p = Parser {
            tokens: tokenize(text)?,
            pos: 0,
            end: text.len(),
        };
        let q = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(p.error("trailing input"));
        }
        Ok(q)
    }

    pub fn mentions_filters(&self) -> bool {
        match self {
            Query::Pred(p) => p.is_filter_predicate(),
            Query::Not(q) => q.mentions_filters(),
            Query::And(a, b) | Query::Or(a, b) => a.mentions_filters() || b.mentions_filters(),
        }
    }

    fn eval(&self, l: &Lattice, f: Option<&Filter>, cache: &mut LatticeFacts) -> bool {
        match self {
            Query::Pred(p) => match (p, f) {
                (Predicate::Cond1, _) => cache.cond1(l),
                (Predicate::Cond2, _) => cache.cond2(l),
                (Predicate::DStonean, _) => cache.cond1(l) && cache.cond2(l),
                (Predicate::Pseudocomplemented, _) => l.is_pseudocomplemented(),
                (_, None) => false,
                (Predicate::Proper, Some(f)) => l.is_proper(f),
                (Predicate::DFilter, Some(f)) => l.is_d_filter(f),
                (Predicate::Closed, Some(f)) => l.is_closed_filter(f),
                (Predicate::Coherent, Some(f)) => l.is_coherent(f),
                (Predicate::Maximal, Some(f)) => l.is_maximal(f),
                (Predicate::Prime, Some(f)) => l.is_prime(f),
                (Predicate::Median, Some(f)) => l.is_median(f),
            },
            Query::Not(q) => !q.eval(l, f, cache),
            Query::And(a, b) => a.eval(l, f, cache) && b.eval(l, f, cache),
            Query::Or(a, b) => a.eval(l, f, cache) || b.eval(l, f, cache),
        }
    }

    /// `None` if the query does not hold on `l`; otherwise the witness
    /// filter's generator (`None` inside for lattice-only queries).
    pub fn find(&self, l: &Lattice) -> Option<Option<Element>> {
        let mut cache = LatticeFacts::default();
        if self.mentions_filters() {
            l.all_filters()
                .into_iter()
                .find(|f| self.eval(l, Some(f), &mut cache))
                .map(|f| Some(f.generator()))
        } else {
            self.eval(l, None, &mut cache).then_some(None)
        }
    }

    /// Evaluates the query on one lattice and optional filter.
    pub fn holds(&self, l: &Lattice, f: Option<&Filter>) -> bool {
        self.eval(l, f, &mut LatticeFacts::default())
    }
}

#[derive(Default)]
struct LatticeFacts {
    cond1: Option<bool>,
    cond2: Option<bool>,
}

impl LatticeFacts {
    fn cond1(&mut self, l: &Lattice) -> bool {
        *self.cond1.get_or_insert_with(|| l.check_cond1().0)
    }

    fn cond2(&mut self, l: &Lattice) -> bool {
        *self.cond2.get_or_insert_with(|| l.check_cond2().0)
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Query::Pred(p) => f.write_str(p.name()),
            Query::Not(q) => match **q {
                Query::Pred(_) | Query::Not(_) => write!(f, "!{q}"),
                _ => write!(f, "!({q})"),
            },
            Query::And(a, b) => {
                let side = |q: &Query, f: &mut fmt::Formatter<'_>| match q {
                    Query::Or(..) => write!(f, "({q})"),
                    _ => write!(f, "{q}"),
                };
                side(a, f)?;
                f.write_str(" & ")?;
                side(b, f)
            }
            Query::Or(a, b) => write!(f, "{a} | {b}"),
        }
    }
}
