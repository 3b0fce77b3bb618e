//! Hand-rolled lexer and recursive-descent parser for the input language:
//! polynomial expressions in y and x1..xe with rational and zeta(N)
//! coefficients, series literals, cone literals, and per-job directives.

use std::fmt;

use freepoly::cone::{compatible_order, Cone};
use freepoly::cyclotomic::{rat, CycNum, Rat};
use freepoly::series::{FracSeries, Precision, SeriesCtx};
use freepoly::ypoly::SeriesPoly;

#[derive(Clone, Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: String,
    pub found: String,
}

impl ParseError {
    fn at(line: usize, col: usize, expected: impl Into<String>, found: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            expected: expected.into(),
            found: found.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: expected {}, found {}",
            self.line, self.col, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Arrow,
    Eq,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "'{}'", v),
            Tok::Ident(s) => write!(f, "'{}'", s),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::LBrace => write!(f, "'{{'"),
            Tok::RBrace => write!(f, "'}}'"),
            Tok::Comma => write!(f, "','"),
            Tok::Semi => write!(f, "';'"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Arrow => write!(f, "'->'"),
            Tok::Eq => write!(f, "'='"),
        }
    }
}

fn lex(text: &str) -> PResult<Vec<(Tok, usize, usize)>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c.is_ascii_digit() {
            let mut v: i64 = 0;
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                v = v
                    .checked_mul(10)
                    .and_then(|v| v.checked_add((d as u8 - b'0') as i64))
                    .ok_or_else(|| ParseError::at(tl, tc, "a smaller integer", "overflow"))?;
                bump(&mut chars);
            }
            out.push((Tok::Int(v), tl, tc));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                s.push(bump(&mut chars));
            }
            out.push((Tok::Ident(s), tl, tc));
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '+' => Tok::Plus,
            '-' => {
                bump(&mut chars);
                if chars.peek() == Some(&'>') {
                    bump(&mut chars);
                    out.push((Tok::Arrow, tl, tc));
                } else {
                    out.push((Tok::Minus, tl, tc));
                }
                continue;
            }
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '=' => Tok::Eq,
            other => return Err(ParseError::at(tl, tc, "a token", format!("'{}'", other))),
        };
        bump(&mut chars);
        out.push((tok, tl, tc));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Ast {
    Num(Rat),
    Zeta(u64),
    Y,
    X(usize),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str) -> PResult<Parser> {
        let toks = lex(text)?;
        let end = toks.last().map(|(_, l, c)| (*l, *c + 1)).unwrap_or((1, 1));
        Ok(Parser { toks, pos: 0, end })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or(self.end)
    }

    fn found(&self) -> String {
        self.toks
            .get(self.pos)
            .map(|(t, _, _)| t.to_string())
            .unwrap_or_else(|| "end of input".to_string())
    }

    fn err<T>(&self, expected: impl Into<String>) -> PResult<T> {
        let (l, c) = self.here();
        Err(ParseError::at(l, c, expected, self.found()))
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            self.err(tok.to_string())
        }
    }

    fn expect_int(&mut self) -> PResult<i64> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("an integer"),
        }
    }

    fn expect_signed_int(&mut self) -> PResult<i64> {
        let neg = self.eat(&Tok::Minus);
        let v = self.expect_int()?;
        Ok(if neg { -v } else { v })
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    // expr := mul (('+'|'-') mul)*
    fn expr(&mut self) -> PResult<Ast> {
        let mut acc = self.mul()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = Ast::Add(Box::new(acc), Box::new(self.mul()?));
            } else if self.eat(&Tok::Minus) {
                acc = Ast::Sub(Box::new(acc), Box::new(self.mul()?));
            } else {
                return Ok(acc);
            }
        }
    }

    // mul := unary (('*'|'/') unary)*
    fn mul(&mut self) -> PResult<Ast> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = Ast::Mul(Box::new(acc), Box::new(self.unary()?));
            } else if self.eat(&Tok::Slash) {
                acc = Ast::Div(Box::new(acc), Box::new(self.unary()?));
            } else {
                return Ok(acc);
            }
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> PResult<Ast> {
        if self.eat(&Tok::Minus) {
            Ok(Ast::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    // power := atom ('^' uint)?
    fn power(&mut self) -> PResult<Ast> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            match self.peek() {
                Some(Tok::Int(v)) if *v >= 0 => {
                    let v = *v as u32;
                    self.pos += 1;
                    Ok(Ast::Pow(Box::new(base), v))
                }
                _ => self.err("a nonnegative exponent"),
            }
        } else {
            Ok(base)
        }
    }

    // atom := INT | 'y' | x<k> | 'zeta' '(' INT ')' | '(' expr ')'
    fn atom(&mut self) -> PResult<Ast> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Ast::Num(rat(v, 1)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                if name == "y" {
                    self.pos += 1;
                    return Ok(Ast::Y);
                }
                if name == "zeta" {
                    self.pos += 1;
                    self.expect(Tok::LParen)?;
                    let n = self.expect_int()?;
                    self.expect(Tok::RParen)?;
                    if n < 1 {
                        return self.err("a positive root-of-unity order");
                    }
                    return Ok(Ast::Zeta(n as u64));
                }
                if let Some(rest) = name.strip_prefix('x') {
                    if let Ok(idx) = rest.parse::<usize>() {
                        if idx >= 1 {
                            self.pos += 1;
                            return Ok(Ast::X(idx));
                        }
                    }
                }
                self.err("'y', 'x<k>', 'zeta(N)', a number or '('")
            }
            _ => self.err("'y', 'x<k>', 'zeta(N)', a number or '('"),
        }
    }

    // '(' int (',' int)* ')' or a bare integer for one variable
    fn key(&mut self) -> PResult<Vec<i64>> {
        if self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let mut v = vec![self.expect_signed_int()?];
            while self.eat(&Tok::Comma) {
                v.push(self.expect_signed_int()?);
            }
            self.expect(Tok::RParen)?;
            Ok(v)
        } else {
            Ok(vec![self.expect_signed_int()?])
        }
    }
}

fn max_x(ast: &Ast) -> usize {
    match ast {
        Ast::X(k) => *k,
        Ast::Neg(a) | Ast::Pow(a, _) => max_x(a),
        Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) | Ast::Div(a, b) => max_x(a).max(max_x(b)),
        _ => 0,
    }
}

enum Val {
    Scalar(CycNum),
    Poly(SeriesPoly),
}

impl Val {
    fn into_poly(self, ctx: &SeriesCtx) -> Result<SeriesPoly, String> {
        match self {
            Val::Poly(p) => Ok(p),
            Val::Scalar(c) => Ok(SeriesPoly::constant(ctx.constant(c))),
        }
    }
}

fn eval(ast: &Ast, ctx: &SeriesCtx) -> Result<Val, String> {
    match ast {
        Ast::Num(r) => Ok(Val::Scalar(CycNum::from_rat(r.clone()))),
        Ast::Zeta(n) => Ok(Val::Scalar(CycNum::root_of_unity(1, *n))),
        Ast::Y => Ok(Val::Poly(SeriesPoly::y_power(ctx, 1))),
        Ast::X(k) => {
            let mut key = vec![0i64; ctx.dim];
            key[k - 1] = 1;
            let s = ctx
                .monomial(key, CycNum::one())
                .map_err(|e| format!("x{} is not admissible here: {}", k, e))?;
            Ok(Val::Poly(SeriesPoly::constant(s)))
        }
        Ast::Neg(a) => match eval(a, ctx)? {
            Val::Scalar(c) => Ok(Val::Scalar(-&c)),
            Val::Poly(p) => Ok(Val::Poly(-&p)),
        },
        Ast::Add(a, b) => binop(
            ast_pair(eval(a, ctx)?, eval(b, ctx)?, ctx)?,
            |x, y| x + y,
            |x, y| x + y,
        ),
        Ast::Sub(a, b) => binop(
            ast_pair(eval(a, ctx)?, eval(b, ctx)?, ctx)?,
            |x, y| x - y,
            |x, y| x - y,
        ),
        Ast::Mul(a, b) => binop(
            ast_pair(eval(a, ctx)?, eval(b, ctx)?, ctx)?,
            |x, y| x * y,
            |x, y| x * y,
        ),
        Ast::Div(a, b) => {
            let lhs = eval(a, ctx)?;
            let rhs = eval(b, ctx)?;
            let Val::Scalar(d) = rhs else {
                return Err("division is only defined by scalars".to_string());
            };
            let inv = d.invert().map_err(|e| e.to_string())?;
            match lhs {
                Val::Scalar(c) => Ok(Val::Scalar(&c * &inv)),
                Val::Poly(p) => Ok(Val::Poly(p.scale_num(&inv))),
            }
        }
        Ast::Pow(a, k) => {
            let base = eval(a, ctx)?;
            match base {
                Val::Scalar(c) => Ok(Val::Scalar(c.pow(*k as i64).map_err(|e| e.to_string())?)),
                Val::Poly(p) => {
                    let mut acc = SeriesPoly::constant(ctx.one());
                    for _ in 0..*k {
                        acc = &acc * &p;
                    }
                    Ok(Val::Poly(acc))
                }
            }
        }
    }
}

type ValPair = (Val, Val);

fn ast_pair(a: Val, b: Val, ctx: &SeriesCtx) -> Result<(ValPair, SeriesCtx), String> {
    Ok(((a, b), ctx.clone()))
}

fn binop(
    args: (ValPair, SeriesCtx),
    scalar: impl Fn(&CycNum, &CycNum) -> CycNum,
    poly: impl Fn(&SeriesPoly, &SeriesPoly) -> SeriesPoly,
) -> Result<Val, String> {
    let ((a, b), ctx) = args;
    match (a, b) {
        (Val::Scalar(x), Val::Scalar(y)) => Ok(Val::Scalar(scalar(&x, &y))),
        (a, b) => {
            let x = a.into_poly(&ctx)?;
            let y = b.into_poly(&ctx)?;
            Ok(Val::Poly(poly(&x, &y)))
        }
    }
}

/// Which cone the exponents live in.
#[derive(Clone, Debug)]
pub enum ConeChoice {
    Orthant,
    Blowup,
    Custom(Vec<Vec<i64>>),
}

impl ConeChoice {
    fn build(&self, dim: usize) -> Result<Cone, String> {
        match self {
            ConeChoice::Orthant => Ok(Cone::orthant(dim)),
            ConeChoice::Blowup => Ok(Cone::standard_blowup(dim)),
            ConeChoice::Custom(gens) => {
                if gens.iter().any(|g| g.len() != dim) {
                    return Err(format!(
                        "cone generators have {} coordinates but the input uses {} variables",
                        gens.first().map(|g| g.len()).unwrap_or(0),
                        dim
                    ));
                }
                Cone::new(dim, gens.clone()).map_err(|e| e.to_string())
            }
        }
    }
}

/// One parsed unit of work.
#[derive(Clone, Debug)]
pub enum Body {
    Poly(SeriesPoly),
    Root(FracSeries),
}

#[derive(Clone, Debug)]
pub struct Job {
    pub body: Body,
    pub precision: Option<Rat>,
    pub members: Vec<Vec<i64>>,
    pub had_cone_directive: bool,
}

/// Split batch input into jobs on lines consisting of `---`.
pub fn split_jobs(text: &str) -> Vec<String> {
    let mut jobs = Vec::new();
    let mut cur = String::new();
    for line in text.lines() {
        if line.trim() == "---" {
            jobs.push(cur.clone());
            cur.clear();
        } else {
            cur.push_str(line);
            cur.push('\n');
        }
    }
    jobs.push(cur);
    jobs.into_iter().filter(|j| !j.trim().is_empty()).collect()
}

pub fn parse_precision(text: &str) -> Result<Rat, String> {
    let mut p = Parser::new(text).map_err(|e| e.to_string())?;
    let num = p.expect_signed_int().map_err(|e| e.to_string())?;
    let den = if p.eat(&Tok::Slash) {
        p.expect_int().map_err(|e| e.to_string())?
    } else {
        1
    };
    if !p.at_end() {
        return Err(format!("trailing input in precision '{}'", text.trim()));
    }
    if den == 0 || num <= 0 {
        return Err("precision must be a positive rational".to_string());
    }
    Ok(rat(num, den))
}

fn parse_cone_value(text: &str) -> Result<ConeChoice, String> {
    let trimmed = text.trim();
    match trimmed {
        "orthant" => return Ok(ConeChoice::Orthant),
        "blowup" => return Ok(ConeChoice::Blowup),
        _ => {}
    }
    let mut p = Parser::new(trimmed).map_err(|e| e.to_string())?;
    // optional leading `cone` keyword
    if p.peek() == Some(&Tok::Ident("cone".to_string())) {
        p.pos += 1;
    }
    p.expect(Tok::LBrace).map_err(|e| e.to_string())?;
    let mut gens = vec![p.key().map_err(|e| e.to_string())?];
    while p.eat(&Tok::Comma) {
        gens.push(p.key().map_err(|e| e.to_string())?);
    }
    p.expect(Tok::RBrace).map_err(|e| e.to_string())?;
    if !p.at_end() {
        return Err(format!("trailing input after cone literal '{}'", trimmed));
    }
    Ok(ConeChoice::Custom(gens))
}

fn parse_member(text: &str) -> Result<Vec<i64>, String> {
    let mut p = Parser::new(text).map_err(|e| e.to_string())?;
    let v = p.key().map_err(|e| e.to_string())?;
    if !p.at_end() {
        return Err(format!("trailing input in member '{}'", text.trim()));
    }
    Ok(v)
}

/// Parse one job: directive lines (cone:, precision:, member:) followed by
/// a polynomial expression or a series literal.
pub fn parse_job(text: &str, default_cone: &ConeChoice) -> Result<Job, String> {
    let mut cone = default_cone.clone();
    let mut had_cone_directive = false;
    let mut precision = None;
    let mut members = Vec::new();
    let mut body_text = String::new();
    for line in text.lines() {
        let t = line.trim();
        if let Some(rest) = t.strip_prefix("cone:") {
            cone = parse_cone_value(rest)?;
            had_cone_directive = true;
            body_text.push('\n');
        } else if let Some(rest) = t.strip_prefix("precision:") {
            precision = Some(parse_precision(rest)?);
            body_text.push('\n');
        } else if let Some(rest) = t.strip_prefix("member:") {
            members.push(parse_member(rest)?);
            body_text.push('\n');
        } else if let Some(rest) = t.strip_prefix("#") {
            let _ = rest;
            body_text.push('\n');
        } else {
            body_text.push_str(line);
            body_text.push('\n');
        }
    }
    let body = parse_body(&body_text, &cone)?;
    Ok(Job {
        body,
        precision,
        members,
        had_cone_directive,
    })
}

fn parse_body(text: &str, cone: &ConeChoice) -> Result<Body, String> {
    let mut p = Parser::new(text).map_err(|e| e.to_string())?;
    if p.at_end() {
        return Err("empty input: expected a polynomial or a series literal".to_string());
    }
    if p.peek() == Some(&Tok::Ident("series".to_string())) {
        let s = parse_series(&mut p, cone)?;
        if !p.at_end() {
            return Err(p.err::<()>("end of input").unwrap_err().to_string());
        }
        return Ok(Body::Root(s));
    }
    let ast = p.expr().map_err(|e| e.to_string())?;
    if !p.at_end() {
        return Err(p.err::<()>("end of input").unwrap_err().to_string());
    }
    let dim = max_x(&ast).max(1);
    let cone = cone.build(dim)?;
    let order = compatible_order(&cone).map_err(|e| e.to_string())?;
    let ctx = SeriesCtx::new(dim, 1, cone, order);
    let val = eval(&ast, &ctx)?;
    Ok(Body::Poly(val.into_poly(&ctx)?))
}

// series(n=4; (2,2) -> 1; (3,3) -> 1/2)
fn parse_series(p: &mut Parser, cone: &ConeChoice) -> Result<FracSeries, String> {
    let fail = |e: ParseError| e.to_string();
    p.expect(Tok::Ident("series".to_string())).map_err(fail)?;
    p.expect(Tok::LParen).map_err(fail)?;
    p.expect(Tok::Ident("n".to_string())).map_err(fail)?;
    p.expect(Tok::Eq).map_err(fail)?;
    let denom = p.expect_int().map_err(fail)?;
    if denom < 1 {
        return Err("the series denominator must be positive".to_string());
    }
    let mut pairs: Vec<(Vec<i64>, Ast)> = Vec::new();
    while p.eat(&Tok::Semi) {
        let key = p.key().map_err(fail)?;
        p.expect(Tok::Arrow).map_err(fail)?;
        let coeff = p.expr().map_err(fail)?;
        pairs.push((key, coeff));
    }
    p.expect(Tok::RParen).map_err(fail)?;
    let dim = pairs.first().map(|(k, _)| k.len()).unwrap_or(1);
    if pairs.iter().any(|(k, _)| k.len() != dim) {
        return Err("all series exponents must have the same number of coordinates".to_string());
    }
    let cone = cone.build(dim)?;
    let order = compatible_order(&cone).map_err(|e| e.to_string())?;
    let ctx = SeriesCtx::new(dim, denom, cone, order);
    let mut terms = Vec::with_capacity(pairs.len());
    for (key, ast) in pairs {
        if max_x(&ast) > 0 {
            return Err("series coefficients must be scalars".to_string());
        }
        match eval(&ast, &ctx)? {
            Val::Scalar(c) => terms.push((key, c)),
            Val::Poly(_) => return Err("series coefficients must be scalars".to_string()),
        }
    }
    ctx.from_terms(terms, Precision::Exact)
        .map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use freepoly::cyclotomic::CycNum;

    fn poly_of(text: &str) -> SeriesPoly {
        match parse_body(text, &ConeChoice::Orthant).unwrap() {
            Body::Poly(p) => p,
            Body::Root(_) => panic!("expected a polynomial"),
        }
    }

    #[test]
    fn parses_the_quartic() {
        let f = poly_of("y^4 - 2*x1*x2*y^2 - 4*x1^2*x2^2*y + x1^2*x2^2 - x1^3*x2^3");
        assert_eq!(f.degree(), 4);
        assert!(f.is_monic());
        let c = f.ctx().clone();
        assert_eq!(c.dim, 2);
        let a2 = f.coeff(2);
        assert_eq!(a2, c.monomial(vec![1, 1], CycNum::from_int(-2)).unwrap());
    }

    #[test]
    fn parses_rational_and_zeta_coefficients() {
        let f = poly_of("y^2 + (1/2)*x1*y - zeta(4)*x1^3");
        assert_eq!(f.degree(), 2);
        let a1 = f.coeff(1);
        let (_, c) = a1.leading().unwrap().unwrap();
        assert_eq!(c, CycNum::from_rat(rat(1, 2)));
        let a0 = f.coeff(0);
        let (_, c0) = a0.leading().unwrap().unwrap();
        assert_eq!(c0, -&CycNum::root_of_unity(1, 4));
    }

    #[test]
    fn parses_series_literals() {
        let body = parse_body(
            "series(n=4; (2,2) -> 1; (3,3) -> 1/2)",
            &ConeChoice::Orthant,
        )
        .unwrap();
        let Body::Root(s) = body else {
            panic!("expected a series")
        };
        assert_eq!(s.denom(), 4);
        assert_eq!(s.term_count(), 2);
    }

    #[test]
    fn reports_position_on_errors() {
        let err = parse_body("y^2 +* x1", &ConeChoice::Orthant).unwrap_err();
        assert!(err.contains("line 1"), "{}", err);
        assert!(err.contains("column 6"), "{}", err);
    }

    #[test]
    fn splits_jobs_and_reads_directives() {
        let text = "precision: 12\ny^2 - x1^3\n---\ncone: blowup\ny^2 - x1\n";
        let jobs = split_jobs(text);
        assert_eq!(jobs.len(), 2);
        let j0 = parse_job(&jobs[0], &ConeChoice::Orthant).unwrap();
        assert_eq!(j0.precision, Some(rat(12, 1)));
        let j1 = parse_job(&jobs[1], &ConeChoice::Orthant).unwrap();
        let Body::Poly(p) = &j1.body else { panic!() };
        assert_eq!(p.ctx().cone, Cone::standard_blowup(1));
    }

    #[test]
    fn custom_cone_literal() {
        let choice = parse_cone_value(" { (1,0), (-1,1) } ").unwrap();
        let ConeChoice::Custom(gens) = &choice else {
            panic!()
        };
        assert_eq!(gens.len(), 2);
        let body = parse_body("series(n=2; (3,0) -> 1; (-3,6) -> 1/2)", &choice).unwrap();
        let Body::Root(s) = body else { panic!() };
        assert_eq!(s.term_count(), 2);
    }

    #[test]
    fn rejects_exponents_outside_the_cone() {
        let err = parse_body("series(n=2; (-1,0) -> 1)", &ConeChoice::Orthant).unwrap_err();
        assert!(err.contains("cone"), "{}", err);
    }
}
