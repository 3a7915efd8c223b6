//! Hand-written lexer and recursive-descent parser for program files,
//! hypothesis files and literal sets.

use crate::error::{Error, Result};
use crate::logic::{TruthSet, TruthValue};

use super::ast::{Atom, BodyElement, Conjunct, Literal, Program, Rule, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Var(String),
    Number(String),
    Neck,
    Dot,
    Comma,
    Semi,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Minus,
    Eq,
    Constant(TruthValue),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Var(s) | Tok::Number(s) => format!("`{s}`"),
            Tok::Neck => "`:-`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Constant(v) => format!("`#{v}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);

    while let Some(&c) = chars.peek() {
        let (start_line, start_col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };

        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '%' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump(&mut chars);
            }
            continue;
        }

        let tok = if c.is_ascii_alphanumeric() || c == '_' {
            let mut word = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            if c.is_ascii_digit() {
                if !word.chars().all(|c| c.is_ascii_digit()) {
                    return Err(syntax(
                        start_line,
                        start_col,
                        format!("malformed number `{word}`"),
                    ));
                }
                Tok::Number(word)
            } else if c.is_ascii_lowercase() {
                Tok::Ident(word)
            } else {
                Tok::Var(word)
            }
        } else {
            bump(&mut chars);
            match c {
                ':' => {
                    if chars.peek() == Some(&'-') {
                        bump(&mut chars);
                        Tok::Neck
                    } else {
                        return Err(syntax(start_line, start_col, "expected `:-`"));
                    }
                }
                '.' => Tok::Dot,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '-' => Tok::Minus,
                '=' => Tok::Eq,
                '#' => match chars.peek().copied().and_then(TruthValue::from_symbol) {
                    Some(v) => {
                        bump(&mut chars);
                        if chars
                            .peek()
                            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                        {
                            return Err(syntax(
                                start_line,
                                start_col,
                                "expected one of #t, #f, #u, #i",
                            ));
                        }
                        Tok::Constant(v)
                    }
                    None => {
                        return Err(syntax(
                            start_line,
                            start_col,
                            "expected one of #t, #f, #u, #i",
                        ))
                    }
                },
                other => {
                    return Err(syntax(
                        start_line,
                        start_col,
                        format!("unexpected character `{other}`"),
                    ))
                }
            }
        };
        out.push(Spanned {
            tok,
            line: start_line,
            column: start_col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let idx = (self.pos + ahead).min(self.toks.len() - 1);
        &self.toks[idx].tok
    }

    fn next(&mut self) -> Tok {
        let tok = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let s = &self.toks[self.pos];
        syntax(s.line, s.column, message)
    }

    fn unexpected(&self, expected: &str) -> Error {
        self.error(format!(
            "expected {expected}, found {}",
            self.peek().describe()
        ))
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<()> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn is_keyword(&self, word: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == word)
    }

    fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    fn program(&mut self) -> Result<Program> {
        let mut rules = Vec::new();
        while !self.at_eof() {
            rules.push(self.rule()?);
        }
        Ok(Program::new(rules))
    }

    fn rule(&mut self) -> Result<Rule> {
        if self.is_keyword("not") && self.starts_literal_at(1) {
            return Err(self.error("rule heads must be classical literals, not default literals"));
        }
        if let Tok::Constant(_) = self.peek() {
            return Err(self.error("rule heads must be classical literals, not truth constants"));
        }
        let head = self.literal()?;
        if self.is_keyword("in") {
            return Err(
                self.error("rule heads must be classical literals, not inspection operators")
            );
        }
        let body = if *self.peek() == Tok::Neck {
            self.next();
            self.body()?
        } else {
            Vec::new()
        };
        self.expect(Tok::Dot, "`.` at the end of the rule")?;
        Ok(Rule::new(head, body))
    }

    fn body(&mut self) -> Result<Vec<Conjunct>> {
        let mut body = vec![self.conjunct()?];
        while *self.peek() == Tok::Semi {
            self.next();
            body.push(self.conjunct()?);
        }
        Ok(body)
    }

    fn conjunct(&mut self) -> Result<Conjunct> {
        let mut conj = vec![self.element()?];
        while *self.peek() == Tok::Comma {
            self.next();
            conj.push(self.element()?);
        }
        Ok(conj)
    }

    fn element(&mut self) -> Result<BodyElement> {
        if let Tok::Constant(v) = *self.peek() {
            self.next();
            return Ok(BodyElement::Const(v));
        }
        if self.is_keyword("not") && self.starts_literal_at(1) {
            self.next();
            if self.is_keyword("not") && self.starts_literal_at(1) {
                return Err(self.error("default negation cannot be nested"));
            }
            let lit = self.literal()?;
            if self.is_keyword("in") {
                return Err(
                    self.error("an inspection operator cannot appear under default negation")
                );
            }
            return Ok(BodyElement::DefaultLit(lit));
        }
        let lit = self.literal()?;
        if self.is_keyword("in") && matches!(self.peek_at(1), Tok::LBrace) {
            self.next();
            let set = self.truth_set()?;
            if self.is_keyword("in") {
                return Err(self.error("inspection operators cannot be nested"));
            }
            return Ok(BodyElement::Inspect(lit, set));
        }
        Ok(BodyElement::Lit(lit))
    }

    /// `not` and `in` are only keywords where a literal (resp. a set) follows,
    /// so a proposition may still be called `not`.
    fn starts_literal_at(&self, ahead: usize) -> bool {
        matches!(self.peek_at(ahead), Tok::Ident(_) | Tok::Minus)
    }

    fn truth_set(&mut self) -> Result<TruthSet> {
        self.expect(Tok::LBrace, "`{`")?;
        let mut set = TruthSet::EMPTY;
        if *self.peek() == Tok::RBrace {
            self.next();
            return Ok(set);
        }
        loop {
            match self.peek().clone() {
                Tok::Ident(s) if s.parse::<TruthValue>().is_ok() => {
                    self.next();
                    set = set.with(s.parse().unwrap());
                }
                _ => return Err(self.unexpected("one of t, f, u, i")),
            }
            match self.next() {
                Tok::Comma => continue,
                Tok::RBrace => return Ok(set),
                _ => {
                    self.pos -= 1;
                    return Err(self.unexpected("`,` or `}`"));
                }
            }
        }
    }

    fn literal(&mut self) -> Result<Literal> {
        let mut negated = false;
        while *self.peek() == Tok::Minus {
            self.next();
            negated = !negated;
        }
        let atom = self.atom()?;
        Ok(Literal { atom, negated })
    }

    fn atom(&mut self) -> Result<Atom> {
        let predicate = match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                s
            }
            Tok::Var(_) => {
                return Err(self.error("predicate names must start with a lowercase letter"))
            }
            _ => return Err(self.unexpected("an atom")),
        };
        let mut args = Vec::new();
        if *self.peek() == Tok::LParen {
            self.next();
            loop {
                args.push(self.term()?);
                match self.next() {
                    Tok::Comma => continue,
                    Tok::RParen => break,
                    _ => {
                        self.pos -= 1;
                        return Err(self.unexpected("`,` or `)`"));
                    }
                }
            }
        }
        Ok(Atom { predicate, args })
    }

    fn term(&mut self) -> Result<Term> {
        match self.peek().clone() {
            Tok::Ident(s) | Tok::Number(s) => {
                self.next();
                Ok(Term::Const(s))
            }
            Tok::Var(s) => {
                self.next();
                Ok(Term::Var(s))
            }
            _ => Err(self.unexpected("a term")),
        }
    }
}

/// Parse program text. Variables are allowed; see [`crate::ground`].
pub fn parse_program(text: &str) -> Result<Program> {
    Parser::new(text)?.program()
}

/// Parse a single literal such as `-saves(resc,eve)`.
pub fn parse_literal(text: &str) -> Result<Literal> {
    let mut p = Parser::new(text)?;
    let lit = p.literal()?;
    if !p.at_eof() {
        return Err(p.unexpected("end of input"));
    }
    Ok(lit)
}

/// Parse a brace-enclosed literal set, `{p, -q}`.
pub fn parse_literal_set(text: &str) -> Result<Vec<Literal>> {
    let mut p = Parser::new(text)?;
    let set = p.literal_set()?;
    if !p.at_eof() {
        return Err(p.unexpected("end of input"));
    }
    Ok(set)
}

/// Parse one literal set per non-empty line.
pub fn parse_literal_sets(text: &str) -> Result<Vec<Vec<Literal>>> {
    let mut p = Parser::new(text)?;
    let mut out = Vec::new();
    while !p.at_eof() {
        out.push(p.literal_set()?);
    }
    Ok(out)
}

impl Parser {
    fn literal_set(&mut self) -> Result<Vec<Literal>> {
        self.expect(Tok::LBrace, "`{`")?;
        let mut lits = Vec::new();
        if *self.peek() == Tok::RBrace {
            self.next();
            return Ok(lits);
        }
        loop {
            lits.push(self.literal()?);
            match self.next() {
                Tok::Comma => continue,
                Tok::RBrace => return Ok(lits),
                _ => {
                    self.pos -= 1;
                    return Err(self.unexpected("`,` or `}`"));
                }
            }
        }
    }
}

/// One `assume not ℓ = v.` line, before validation against a program.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assumption {
    pub literal: Literal,
    pub value: TruthValue,
    pub line: usize,
}

/// Parse the hypothesis file syntax without checking it against a program.
/// `u` is a syntax error; `i` is reported by the caller with a hint.
pub fn parse_assumptions(text: &str) -> Result<Vec<Assumption>> {
    let mut p = Parser::new(text)?;
    let mut out = Vec::new();
    while !p.at_eof() {
        let line = p.toks[p.pos].line;
        if !p.is_keyword("assume") {
            return Err(p.unexpected("`assume`"));
        }
        p.next();
        if !p.is_keyword("not") {
            return Err(p.unexpected("`not`"));
        }
        p.next();
        let literal = p.literal()?;
        p.expect(Tok::Eq, "`=`")?;
        let value = match p.peek().clone() {
            Tok::Ident(s) => match s.parse::<TruthValue>().ok() {
                Some(v @ (TruthValue::True | TruthValue::False | TruthValue::Inconsistent)) => v,
                _ => return Err(p.unexpected("`t` or `f`")),
            },
            _ => return Err(p.unexpected("`t` or `f`")),
        };
        p.next();
        p.expect(Tok::Dot, "`.`")?;
        out.push(Assumption {
            literal,
            value,
            line,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(s: &str) -> Literal {
        parse_literal(s).unwrap()
    }

    #[test]
    fn default_literal_body() {
        let p = parse_program("p :- not q.").unwrap();
        assert_eq!(p.rules.len(), 1);
        assert_eq!(p.rules[0].head, lit("p"));
        assert_eq!(
            p.rules[0].body,
            vec![vec![BodyElement::DefaultLit(lit("q"))]]
        );
    }

    #[test]
    fn negated_head_with_variable() {
        let p = parse_program("-ns(X) :- bp(X).").unwrap();
        let head = &p.rules[0].head;
        assert!(head.negated);
        assert_eq!(head.atom.predicate, "ns");
        assert_eq!(head.atom.args, vec![Term::Var("X".into())]);
    }

    #[test]
    fn inspection_body() {
        let p = parse_program("p :- q in {u,f}.").unwrap();
        assert_eq!(
            p.rules[0].body,
            vec![vec![BodyElement::Inspect(
                lit("q"),
                TruthSet::of(&[TruthValue::Unknown, TruthValue::False])
            )]]
        );
    }

    #[test]
    fn disjunction_binds_weaker() {
        let p = parse_program("r :- a, b; c, #t; not -d.").unwrap();
        let body = &p.rules[0].body;
        assert_eq!(body.len(), 3);
        assert_eq!(body[0].len(), 2);
        assert_eq!(body[1][1], BodyElement::Const(TruthValue::True));
        assert_eq!(body[2][0], BodyElement::DefaultLit(lit("-d")));
    }

    #[test]
    fn double_strong_negation_normalizes() {
        assert_eq!(lit("--p"), lit("p"));
        assert_eq!(lit("- - -p"), lit("-p"));
    }

    #[test]
    fn comments_and_whitespace() {
        let p = parse_program("% header\np. % trailing\n\n  q :- p.\n").unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn empty_inspection_set() {
        let p = parse_program("p :- q in {}.").unwrap();
        assert_eq!(
            p.rules[0].body[0][0],
            BodyElement::Inspect(lit("q"), TruthSet::EMPTY)
        );
    }

    #[test]
    fn rejects_bad_heads() {
        assert!(parse_program("not p.").is_err());
        assert!(parse_program("p in {t} :- q.").is_err());
        assert!(parse_program("#t :- q.").is_err());
    }

    #[test]
    fn rejects_nesting() {
        assert!(parse_program("p :- not not q.").is_err());
        assert!(parse_program("p :- not q in {t}.").is_err());
        assert!(parse_program("p :- q in {t} in {f}.").is_err());
    }

    #[test]
    fn error_position() {
        match parse_program("p.\nq :- r s.") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 8)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_program("p :- q") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 7)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn misc_syntax_errors() {
        for bad in [
            "p :- .",
            "p :- q in {x}.",
            "p(.",
            "P.",
            "p :- #x.",
            "p : q.",
            "p :- q in {t,}.",
            "1a.",
        ] {
            assert!(parse_program(bad).is_err(), "{bad} should be rejected");
        }
    }

    #[test]
    fn literal_sets() {
        assert_eq!(
            parse_literal_set("{p, -q(a)}").unwrap(),
            vec![lit("p"), lit("-q(a)")]
        );
        assert_eq!(parse_literal_set("{}").unwrap(), vec![]);
        assert_eq!(parse_literal_sets("{p}\n{q, r}\n").unwrap().len(), 2);
        assert!(parse_literal_set("{p,").is_err());
    }

    #[test]
    fn assumptions() {
        let a = parse_assumptions("assume not q = t.\nassume not -p(a) = f.").unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a[1].literal, lit("-p(a)"));
        assert_eq!(a[1].value, TruthValue::False);
        assert_eq!(a[1].line, 2);
        assert!(parse_assumptions("assume not q = u.").is_err());
        assert!(parse_assumptions("assume q = t.").is_err());
        assert_eq!(
            parse_assumptions("assume not q = i.").unwrap()[0].value,
            TruthValue::Inconsistent
        );
    }
}
