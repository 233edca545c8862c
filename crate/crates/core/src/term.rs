//! Terms and identities over the hoop signature, with a small parser and a
//! brute-force evaluator.
//!
//! Grammar (lowest to highest precedence):
//!
//! ```text
//! identity := "forall" ident* ":" term "=" term
//! term     := lattice ("->" term)?          right associative
//! lattice  := product (("/\" | "\/") product)*
//! product  := atom ("*" atom)*
//! atom     := ident | "0" | "1" | "(" term ")"
//! ```
//!
//! Meet and join are macros: they expand to `x*(x->y)` and
//! `((x->y)->y) ∧ ((y->x)->x)` at evaluation time.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::hoop::{Elem, FiniteHoop};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("variable `{0}` is not declared")]
    UndeclaredVariable(String),
    #[error("no value bound for variable `{0}`")]
    MissingBinding(String),
    #[error("constant 0 needs a bounded hoop")]
    NotBounded,
    #[error("join needs a basic hoop")]
    NotBasic,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    One,
    Zero,
    Mul(Box<Term>, Box<Term>),
    Imp(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn mul(l: Term, r: Term) -> Term {
        Term::Mul(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Term, r: Term) -> Term {
        Term::Imp(Box::new(l), Box::new(r))
    }

    pub fn meet(l: Term, r: Term) -> Term {
        Term::Meet(Box::new(l), Box::new(r))
    }

    pub fn join(l: Term, r: Term) -> Term {
        Term::Join(Box::new(l), Box::new(r))
    }

    fn children(&self) -> Option<(&Term, &Term)> {
        match self {
            Term::Mul(l, r) | Term::Imp(l, r) | Term::Meet(l, r) | Term::Join(l, r) => Some((l, r)),
            _ => None,
        }
    }

    /// Collects variables in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        fn go(t: &Term, out: &mut Vec<String>) {
            match t {
                Term::Var(v) => {
                    if !out.contains(v) {
                        out.push(v.clone());
                    }
                }
                Term::One | Term::Zero => {}
                _ => {
                    let (l, r) = t.children().unwrap();
                    go(l, out);
                    go(r, out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    fn any(&self, pred: &dyn Fn(&Term) -> bool) -> bool {
        pred(self)
            || self
                .children()
                .is_some_and(|(l, r)| l.any(pred) || r.any(pred))
    }

    pub fn uses_zero(&self) -> bool {
        self.any(&|t| matches!(t, Term::Zero))
    }

    pub fn uses_join(&self) -> bool {
        self.any(&|t| matches!(t, Term::Join(..)))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if t.children().is_some() {
                write!(f, "({t})")
            } else {
                write!(f, "{t}")
            }
        }
        let op = match self {
            Term::Var(v) => return f.write_str(v),
            Term::One => return f.write_str("1"),
            Term::Zero => return f.write_str("0"),
            Term::Mul(..) => "*",
            Term::Imp(..) => "->",
            Term::Meet(..) => "/\\",
            Term::Join(..) => "\\/",
        };
        let (l, r) = self.children().unwrap();
        child(l, f)?;
        write!(f, " {op} ")?;
        child(r, f)
    }
}

/// A universally quantified equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub vars: Vec<String>,
    pub lhs: Term,
    pub rhs: Term,
}

impl Identity {
    /// Builds an identity, checking that every variable is declared.
    pub fn new(vars: Vec<String>, lhs: Term, rhs: Term) -> Result<Self, TermError> {
        for v in lhs.variables().into_iter().chain(rhs.variables()) {
            if !vars.contains(&v) {
                return Err(TermError::UndeclaredVariable(v));
            }
        }
        Ok(Identity { vars, lhs, rhs })
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "forall")?;
        for v in &self.vars {
            write!(f, " {v}")?;
        }
        write!(f, " : {} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Forall,
    Zero,
    One,
    Star,
    Arrow,
    Wedge,
    Vee,
    LParen,
    RParen,
    Colon,
    Eq,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Forall => f.write_str("`forall`"),
            Tok::Zero => f.write_str("`0`"),
            Tok::One => f.write_str("`1`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Wedge => f.write_str("`/\\`"),
            Tok::Vee => f.write_str("`\\/`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Lexer {
    fn new(text: &str, line: usize) -> Result<Self, TermError> {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        let err = |col: usize, message: String| TermError::Syntax { line, col, message };
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c == '#' {
                break;
            }
            let two: String = chars[i..(i + 2).min(chars.len())].iter().collect();
            let (tok, len) = match (c, two.as_str()) {
                (_, "->") => (Tok::Arrow, 2),
                (_, "/\\") => (Tok::Wedge, 2),
                (_, "\\/") => (Tok::Vee, 2),
                ('*', _) => (Tok::Star, 1),
                ('(', _) => (Tok::LParen, 1),
                (')', _) => (Tok::RParen, 1),
                (':', _) => (Tok::Colon, 1),
                ('=', _) => (Tok::Eq, 1),
                ('0', _) => (Tok::Zero, 1),
                ('1', _) => (Tok::One, 1),
                (c, _) if c.is_ascii_alphabetic() || c == '_' => {
                    let mut j = i;
                    while j < chars.len()
                        && (chars[j].is_ascii_alphanumeric() || chars[j] == '_' || chars[j] == '\'')
                    {
                        j += 1;
                    }
                    let word: String = chars[i..j].iter().collect();
                    let tok = if word == "forall" {
                        Tok::Forall
                    } else {
                        Tok::Ident(word)
                    };
                    (tok, j - i)
                }
                (c, _) => return Err(err(col, format!("unexpected character `{c}`"))),
            };
            toks.push((tok, line, col));
            i += len;
        }
        toks.push((Tok::End, line, chars.len() + 1));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: String) -> TermError {
        let (_, line, col) = self.toks[self.pos];
        TermError::Syntax { line, col, message }
    }

    fn expect(&mut self, want: Tok) -> Result<(), TermError> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            Err(self.error(format!("expected {want}, found {}", self.peek())))
        }
    }

    fn term(&mut self) -> Result<Term, TermError> {
        let lhs = self.lattice()?;
        if *self.peek() == Tok::Arrow {
            self.next();
            let rhs = self.term()?;
            Ok(Term::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn lattice(&mut self) -> Result<Term, TermError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Tok::Wedge => {
                    self.next();
                    acc = Term::meet(acc, self.product()?);
                }
                Tok::Vee => {
                    self.next();
                    acc = Term::join(acc, self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Term, TermError> {
        let mut acc = self.atom()?;
        while *self.peek() == Tok::Star {
            self.next();
            acc = Term::mul(acc, self.atom()?);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        match self.peek().clone() {
            Tok::Ident(v) => {
                self.next();
                Ok(Term::Var(v))
            }
            Tok::One => {
                self.next();
                Ok(Term::One)
            }
            Tok::Zero => {
                self.next();
                Ok(Term::Zero)
            }
            Tok::LParen => {
                self.next();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            other => Err(self.error(format!("expected a term, found {other}"))),
        }
    }
}

/// Parses a term on its own.
pub fn parse_term(text: &str) -> Result<Term, TermError> {
    let mut lx = Lexer::new(text, 1)?;
    let t = lx.term()?;
    lx.expect(Tok::End)?;
    Ok(t)
}

fn parse_identity_line(text: &str, line: usize) -> Result<Identity, TermError> {
    let mut lx = Lexer::new(text, line)?;
    lx.expect(Tok::Forall)?;
    let mut vars = Vec::new();
    while let Tok::Ident(v) = lx.peek().clone() {
        if vars.contains(&v) {
            return Err(lx.error(format!("variable `{v}` declared twice")));
        }
        vars.push(v);
        lx.next();
    }
    lx.expect(Tok::Colon)?;
    let lhs = lx.term()?;
    lx.expect(Tok::Eq)?;
    let rhs = lx.term()?;
    lx.expect(Tok::End)?;
    Identity::new(vars, lhs, rhs)
}

/// Parses `forall x y : lhs = rhs`.
pub fn parse_identity(text: &str) -> Result<Identity, TermError> {
    parse_identity_line(text, 1)
}

/// Parses an identity file: one identity per line, `#` starts a comment.
pub fn parse_identity_file(text: &str) -> Result<Vec<Identity>, TermError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_identity_line(l, i + 1))
        .collect()
}

/// A term with variables resolved to positions in an assignment vector.
enum Compiled {
    Var(usize),
    Const(Elem),
    Mul(Box<Compiled>, Box<Compiled>),
    Imp(Box<Compiled>, Box<Compiled>),
    Meet(Box<Compiled>, Box<Compiled>),
    Join(Box<Compiled>, Box<Compiled>),
}

fn compile(h: &FiniteHoop, t: &Term, vars: &[String]) -> Result<Compiled, TermError> {
    let bin = |l: &Term, r: &Term| -> Result<(Box<Compiled>, Box<Compiled>), TermError> {
        Ok((
            Box::new(compile(h, l, vars)?),
            Box::new(compile(h, r, vars)?),
        ))
    };
    Ok(match t {
        Term::Var(v) => Compiled::Var(
            vars.iter()
                .position(|w| w == v)
                .ok_or_else(|| TermError::MissingBinding(v.clone()))?,
        ),
        Term::One => Compiled::Const(h.unit()),
        Term::Zero => Compiled::Const(h.bottom().ok_or(TermError::NotBounded)?),
        Term::Mul(l, r) => {
            let (l, r) = bin(l, r)?;
            Compiled::Mul(l, r)
        }
        Term::Imp(l, r) => {
            let (l, r) = bin(l, r)?;
            Compiled::Imp(l, r)
        }
        Term::Meet(l, r) => {
            let (l, r) = bin(l, r)?;
            Compiled::Meet(l, r)
        }
        Term::Join(l, r) => {
            if !h.classify().is_basic {
                return Err(TermError::NotBasic);
            }
            let (l, r) = bin(l, r)?;
            Compiled::Join(l, r)
        }
    })
}

impl Compiled {
    fn eval(&self, h: &FiniteHoop, env: &[Elem]) -> Elem {
        match self {
            Compiled::Var(i) => env[*i],
            Compiled::Const(c) => *c,
            Compiled::Mul(l, r) => h.mul(l.eval(h, env), r.eval(h, env)),
            Compiled::Imp(l, r) => h.imp(l.eval(h, env), r.eval(h, env)),
            Compiled::Meet(l, r) => {
                let (x, y) = (l.eval(h, env), r.eval(h, env));
                h.mul(x, h.imp(x, y))
            }
            Compiled::Join(l, r) => {
                let (x, y) = (l.eval(h, env), r.eval(h, env));
                let a = h.imp(h.imp(x, y), y);
                let b = h.imp(h.imp(y, x), x);
                h.mul(a, h.imp(a, b))
            }
        }
    }
}

/// Evaluates `t` in `h` under `env`.
pub fn eval_term(h: &FiniteHoop, t: &Term, env: &HashMap<String, Elem>) -> Result<Elem, TermError> {
    let vars = t.variables();
    let mut values = Vec::with_capacity(vars.len());
    for v in &vars {
        let x = *env
            .get(v)
            .ok_or_else(|| TermError::MissingBinding(v.clone()))?;
        if x >= h.order() {
            return Err(TermError::MissingBinding(format!(
                "{v} (value {x} out of range)"
            )));
        }
        values.push(x);
    }
    Ok(compile(h, t, &vars)?.eval(h, &values))
}

/// Outcome of checking an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    /// First failing assignment (variables in declaration order), if any.
    pub counterexample: Option<Vec<(String, Elem)>>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `id` under every assignment, lexicographic in the declared
/// variable order with the last variable varying fastest.
pub fn holds(h: &FiniteHoop, id: &Identity) -> Result<Verdict, TermError> {
    let lhs = compile(h, &id.lhs, &id.vars)?;
    let rhs = compile(h, &id.rhs, &id.vars)?;
    let w = crate::hoop::first_failure(h.order(), id.vars.len(), |env| {
        lhs.eval(h, env) == rhs.eval(h, env)
    });
    Ok(Verdict {
        counterexample: w.map(|w| id.vars.iter().cloned().zip(w).collect()),
    })
}

/// DSL spellings of the defining identities, shared by the suites.
pub mod identities {
    pub const COMMUTATIVITY: &str = "forall x y : x * y = y * x";
    pub const ASSOCIATIVITY: &str = "forall x y z : (x * y) * z = x * (y * z)";
    pub const UNIT: &str = "forall x : x * 1 = x";
    pub const SELF_IMPLICATION: &str = "forall x : x -> x = 1";
    pub const DIVISIBILITY: &str = "forall x y : x * (x -> y) = y * (y -> x)";
    pub const RESIDUATION: &str = "forall x y z : x * y -> z = x -> (y -> z)";
    pub const BOTTOM: &str = "forall x : 0 -> x = 1";

    pub const BASIC: &str = "forall x y z : ((x -> y) -> z) -> (((y -> x) -> z) -> z) = 1";
    pub const WAJSBERG: &str = "forall x y : (x -> y) -> y = (y -> x) -> x";
    pub const IDEMPOTENCY: &str = "forall x : x * x = x";
    pub const PRODUCT: &str = "forall x y z : (y -> z) \\/ ((y -> x * y) -> x) = 1";
    pub const INVOLUTIVITY: &str = "forall x : (x -> 0) -> 0 = x";

    /// Hoop axioms (i)-(iv) in checking order.
    pub const HOOP_AXIOMS: [&str; 6] = [
        COMMUTATIVITY,
        ASSOCIATIVITY,
        UNIT,
        SELF_IMPLICATION,
        DIVISIBILITY,
        RESIDUATION,
    ];
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hoop::{godel_chain, lukasiewicz_chain, terminal};

    #[test]
    fn precedence_and_associativity() {
        let t = parse_term("x * y -> z -> w").unwrap();
        assert_eq!(
            t,
            Term::imp(
                Term::mul(Term::var("x"), Term::var("y")),
                Term::imp(Term::var("z"), Term::var("w"))
            )
        );
        let t = parse_term("x /\\ y * z \\/ w").unwrap();
        assert_eq!(
            t,
            Term::join(
                Term::meet(Term::var("x"), Term::mul(Term::var("y"), Term::var("z"))),
                Term::var("w")
            )
        );
    }

    #[test]
    fn simple_identity() {
        let id = parse_identity("forall x : x -> x = 1").unwrap();
        assert_eq!(id.vars, vec!["x"]);
        assert!(holds(&lukasiewicz_chain(5), &id).unwrap().holds());
        assert!(holds(&terminal(), &id).unwrap().holds());
    }

    #[test]
    fn basic_identity_on_g3() {
        let id = parse_identity(identities::BASIC).unwrap();
        assert_eq!(id.vars.len(), 3);
        assert!(holds(&godel_chain(3), &id).unwrap().holds());
    }

    #[test]
    fn undeclared_variable() {
        assert_eq!(
            parse_identity("forall x : x -> y = 1").unwrap_err(),
            TermError::UndeclaredVariable("y".into())
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_identity("forall x : x -> = 1").unwrap_err() {
            TermError::Syntax {
                line: 1, col: 17, ..
            } => {}
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(
            parse_identity("x = x"),
            Err(TermError::Syntax { .. })
        ));
        assert!(matches!(
            parse_identity("forall x : x $ x = x"),
            Err(TermError::Syntax { col: 14, .. })
        ));
    }

    #[test]
    fn eval_examples() {
        let l3 = lukasiewicz_chain(3);
        let g3 = godel_chain(3);
        let env = |pairs: &[(&str, Elem)]| -> HashMap<String, Elem> {
            pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
        };
        assert_eq!(eval_term(&l3, &Term::One, &env(&[])).unwrap(), 2);
        let t = parse_term("x -> y").unwrap();
        assert_eq!(eval_term(&l3, &t, &env(&[("x", 1), ("y", 0)])).unwrap(), 1);
        let t = parse_term("x /\\ y").unwrap();
        assert_eq!(eval_term(&g3, &t, &env(&[("x", 1), ("y", 2)])).unwrap(), 1);
        assert_eq!(
            eval_term(&g3, &t, &env(&[("x", 1)])).unwrap_err(),
            TermError::MissingBinding("y".into())
        );
        let unbounded = g3.without_bottom();
        assert_eq!(
            eval_term(&unbounded, &Term::Zero, &env(&[])).unwrap_err(),
            TermError::NotBounded
        );
    }

    #[test]
    fn wajsberg_fails_on_g3() {
        let id = parse_identity(identities::WAJSBERG).unwrap();
        let v = holds(&godel_chain(3), &id).unwrap();
        assert_eq!(
            v.counterexample,
            Some(vec![("x".to_string(), 0), ("y".to_string(), 1)])
        );
        // the mirrored assignment x=a, y=0 is a counterexample as well
        let g3 = godel_chain(3);
        let e: HashMap<String, Elem> = [("x".to_string(), 1), ("y".to_string(), 0)].into();
        assert_ne!(
            eval_term(&g3, &id.lhs, &e).unwrap(),
            eval_term(&g3, &id.rhs, &e).unwrap()
        );
    }

    #[test]
    fn divisibility_on_l3() {
        let id = parse_identity(identities::DIVISIBILITY).unwrap();
        assert!(holds(&lukasiewicz_chain(3), &id).unwrap().holds());
    }

    #[test]
    fn identity_file() {
        let text =
            "# axioms\nforall x : x -> x = 1\n\n  # more\nforall x y : x * y = y * x # trailing\n";
        let ids = parse_identity_file(text).unwrap();
        assert_eq!(ids.len(), 2);
        match parse_identity_file("forall x : x = 1\nforall : (\n").unwrap_err() {
            TermError::Syntax { line: 2, .. } => {}
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn display_reparses() {
        for s in [
            identities::BASIC,
            identities::PRODUCT,
            identities::RESIDUATION,
            "forall x y : x /\\ (y \\/ x) = (x * 1) -> 0",
        ] {
            let id = parse_identity(s).unwrap();
            assert_eq!(parse_identity(&id.to_string()).unwrap(), id);
        }
    }
}
