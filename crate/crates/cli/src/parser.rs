//! Recursive-descent parser over characters. Polynomials are captured as raw
//! text and parsed later against the ring they belong to.

use matlis_core::matlis::Mutation;
use matlis_core::FieldSpec;

use crate::ast::*;
use crate::error::{ErrorCode, Pos, ScriptError, ScriptResult};
use crate::presets::Preset;

pub fn parse_script(src: &str) -> ScriptResult<Vec<Statement>> {
    let mut p = Parser::new(src);
    let mut out = Vec::new();
    loop {
        p.skip_ws();
        if p.at_end() {
            return Ok(out);
        }
        let start = p.i;
        let pos = p.pos();
        let kind = p.statement()?;
        let source = src[start..p.i].trim().to_string();
        p.skip_ws();
        if !p.at_end() {
            p.expect(';')?;
        }
        out.push(Statement { kind, pos, source });
    }
}

struct Parser<'a> {
    src: &'a str,
    i: usize,
    line_starts: Vec<usize>,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let mut line_starts = vec![0];
        line_starts.extend(src.char_indices().filter(|&(_, c)| c == '\n').map(|(i, _)| i + 1));
        Parser { src, i: 0, line_starts }
    }

    fn pos_at(&self, off: usize) -> Pos {
        let line = self.line_starts.partition_point(|&s| s <= off);
        let start = self.line_starts[line - 1];
        Pos { line, column: self.src[start..off].chars().count() + 1 }
    }

    fn pos(&self) -> Pos {
        self.pos_at(self.i)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.i..]
    }

    fn at_end(&self) -> bool {
        self.i >= self.src.len()
    }

    fn skip_ws(&mut self) {
        loop {
            let r = self.rest();
            let trimmed = r.trim_start();
            self.i += r.len() - trimmed.len();
            if trimmed.starts_with('#') || trimmed.starts_with("//") {
                self.i += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                return;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn error(&self, message: impl Into<String>) -> ScriptError {
        ScriptError::new(ErrorCode::Syntax, self.pos(), message)
    }

    fn found(&mut self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(c) => format!("{c:?}"),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> ScriptResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.found();
            Err(self.error(format!("expected {c:?}, found {found}")))
        }
    }

    fn ident(&mut self) -> ScriptResult<Ident> {
        self.skip_ws();
        let pos = self.pos();
        let r = self.rest();
        if !r.starts_with(is_ident_start) {
            let found = self.found();
            return Err(self.error(format!("expected a name, found {found}")));
        }
        let len = r.find(|c: char| !is_ident_char(c)).unwrap_or(r.len());
        self.i += len;
        Ok(Ident { name: r[..len].to_string(), pos })
    }

    /// A name that may contain dashes, as in preset and check ids.
    fn word(&mut self) -> ScriptResult<Ident> {
        self.skip_ws();
        let pos = self.pos();
        let r = self.rest();
        let len = r.find(|c: char| !(is_ident_char(c) || c == '-')).unwrap_or(r.len());
        if len == 0 || !r.starts_with(is_ident_start) {
            let found = self.found();
            return Err(self.error(format!("expected a name, found {found}")));
        }
        self.i += len;
        Ok(Ident { name: r[..len].to_string(), pos })
    }

    fn keyword(&mut self, kw: &str) -> ScriptResult<()> {
        let id = self.ident()?;
        if id.name == kw {
            Ok(())
        } else {
            Err(ScriptError::new(ErrorCode::Syntax, id.pos, format!("expected `{kw}`, found `{}`", id.name)))
        }
    }

    fn peek_ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let r = self.rest();
        if !r.starts_with(is_ident_start) {
            return None;
        }
        Some(&r[..r.find(|c: char| !is_ident_char(c)).unwrap_or(r.len())])
    }

    fn int(&mut self) -> ScriptResult<i64> {
        self.skip_ws();
        let r = self.rest();
        let sign = usize::from(r.starts_with('-'));
        let digits = r[sign..].find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len() - sign);
        if digits == 0 {
            let found = self.found();
            return Err(self.error(format!("expected an integer, found {found}")));
        }
        let v = r[..sign + digits].parse().map_err(|_| self.error("integer out of range"))?;
        self.i += sign + digits;
        Ok(v)
    }

    fn nonneg(&mut self, what: &str) -> ScriptResult<usize> {
        let pos = self.pos_after_ws();
        let v = self.int()?;
        usize::try_from(v).map_err(|_| ScriptError::new(ErrorCode::Syntax, pos, format!("{what} must be non-negative")))
    }

    fn pos_after_ws(&mut self) -> Pos {
        self.skip_ws();
        self.pos()
    }

    /// Raw text up to the next `,`, `)`, `]` or `;` outside brackets.
    fn poly(&mut self) -> ScriptResult<PolyText> {
        self.skip_ws();
        let pos = self.pos();
        let mut depth = 0usize;
        let mut end = self.rest().len();
        for (k, c) in self.rest().char_indices() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' if depth == 0 => {
                    end = k;
                    break;
                }
                ')' | ']' => depth -= 1,
                ',' | ';' if depth == 0 => {
                    end = k;
                    break;
                }
                _ => {}
            }
        }
        let text = self.rest()[..end].trim_end().to_string();
        if text.is_empty() {
            let found = self.found();
            return Err(self.error(format!("expected a polynomial, found {found}")));
        }
        self.i += end;
        Ok(PolyText { text, pos })
    }

    /// `item {"," item}` up to (not including) `close`; may be empty.
    fn list<T>(&mut self, close: char, mut item: impl FnMut(&mut Self) -> ScriptResult<T>) -> ScriptResult<Vec<T>> {
        let mut out = Vec::new();
        if self.peek() == Some(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if !self.eat(',') {
                return Ok(out);
            }
        }
    }

    fn int_list(&mut self) -> ScriptResult<Vec<i32>> {
        self.expect('[')?;
        let v = self.list(']', |p| {
            let pos = p.pos_after_ws();
            let v = p.int()?;
            i32::try_from(v).map_err(|_| ScriptError::new(ErrorCode::Syntax, pos, "degree out of range"))
        })?;
        self.expect(']')?;
        Ok(v)
    }

    fn field(&mut self) -> ScriptResult<FieldExpr> {
        self.skip_ws();
        let pos = self.pos();
        let r = self.rest();
        let mut end = r.find([',', ')', ';']).unwrap_or(r.len());
        // `prime(p)` contains a closing parenthesis of its own.
        if r.starts_with("prime(") {
            end = r.find(')').map_or(r.len(), |k| k + 1);
        }
        let text = r[..end].trim();
        self.i += end;
        if text == "default" {
            return Ok(FieldExpr::Default);
        }
        text.parse::<FieldSpec>()
            .map(FieldExpr::Given)
            .map_err(|e| ScriptError::new(ErrorCode::InvalidArgument, pos, format!("bad field {text:?}: {e}")))
    }

    fn statement(&mut self) -> ScriptResult<StatementKind> {
        let kw = self.ident()?;
        match kw.name.as_str() {
            "ring" => self.ring(),
            "ideal" => {
                let name = self.ident()?;
                self.expect('=')?;
                let gens = self.ideal_literal()?;
                let over = if self.peek_ident() == Some("over") {
                    self.keyword("over")?;
                    Some(self.ident()?)
                } else {
                    None
                };
                Ok(StatementKind::Ideal { name, gens, over })
            }
            "module" => {
                let name = self.ident()?;
                self.expect('=')?;
                Ok(StatementKind::Module { name, expr: self.module_expr()? })
            }
            "artinian" => {
                let name = self.ident()?;
                self.expect('=')?;
                let expr = self.operand()?;
                if let OperandKind::Ideal(_) = expr.kind {
                    return Err(ScriptError::new(ErrorCode::Syntax, expr.pos, "expected dual(...) or a name"));
                }
                if let OperandKind::Module(ModuleExpr::Free { .. } | ModuleExpr::Cyclic { .. } | ModuleExpr::Presented { .. }) = expr.kind {
                    return Err(ScriptError::new(ErrorCode::Syntax, expr.pos, "an artinian module is dual(...) or a name"));
                }
                Ok(StatementKind::Artinian { name, expr })
            }
            "compute" => Ok(StatementKind::Compute(self.computation()?)),
            "verify" => self.verify(),
            "preset" => self.preset(),
            other => Err(ScriptError::new(ErrorCode::Syntax, kw.pos, format!("unknown statement `{other}`"))),
        }
    }

    fn ring(&mut self) -> ScriptResult<StatementKind> {
        let name = self.ident()?;
        self.expect('=')?;
        self.keyword("quotient")?;
        self.expect('(')?;
        let field = if self.peek() == Some('[') {
            FieldExpr::Default
        } else {
            let f = self.field()?;
            self.expect(',')?;
            f
        };
        self.expect('[')?;
        let variables = self.list(']', Self::ident)?;
        self.expect(']')?;
        if variables.is_empty() {
            return Err(self.error("a ring needs at least one variable"));
        }
        self.expect(',')?;
        let ideal = self.ideal_literal()?;
        self.expect(')')?;
        Ok(StatementKind::Ring { name, field, variables, ideal })
    }

    fn ideal_literal(&mut self) -> ScriptResult<Vec<PolyText>> {
        self.keyword("ideal")?;
        self.expect('(')?;
        let gens = self.list(')', Self::poly)?;
        self.expect(')')?;
        Ok(gens)
    }

    fn module_expr(&mut self) -> ScriptResult<ModuleExpr> {
        let id = self.ident()?;
        let ctor = id.name.as_str();
        if !matches!(ctor, "free" | "cyclic" | "module") || self.peek() != Some('(') {
            return Ok(ModuleExpr::Name(id));
        }
        self.expect('(')?;
        let ring = self.ident()?;
        let expr = match ctor {
            "free" => {
                self.expect(',')?;
                let shape = if self.peek() == Some('[') {
                    FreeShape::Degrees(self.int_list()?)
                } else {
                    FreeShape::Rank(self.nonneg("rank")?)
                };
                ModuleExpr::Free { ring, shape }
            }
            "cyclic" => {
                let gens = if self.eat(',') { self.list(')', Self::poly)? } else { Vec::new() };
                ModuleExpr::Cyclic { ring, gens }
            }
            _ => {
                self.expect(',')?;
                let degrees = self.int_list()?;
                self.expect(',')?;
                self.expect('[')?;
                let columns = self.list(']', |p| {
                    p.expect('[')?;
                    let col = p.list(']', Self::poly)?;
                    p.expect(']')?;
                    Ok(col)
                })?;
                self.expect(']')?;
                ModuleExpr::Presented { ring, degrees, columns }
            }
        };
        self.expect(')')?;
        Ok(expr)
    }

    fn operand(&mut self) -> ScriptResult<Operand> {
        let pos = self.pos_after_ws();
        let kind = match self.peek_ident() {
            Some("dual") => {
                self.keyword("dual")?;
                self.expect('(')?;
                let m = self.module_expr()?;
                self.expect(')')?;
                OperandKind::Dual(m)
            }
            Some("ideal") => OperandKind::Ideal(self.ideal_literal()?),
            _ => OperandKind::Module(self.module_expr()?),
        };
        Ok(Operand { kind, pos })
    }

    fn computation(&mut self) -> ScriptResult<Computation> {
        let op = self.ident()?;
        self.expect('(')?;
        let c = match op.name.as_str() {
            "hom" | "tensor" => {
                let a = self.operand()?;
                self.expect(',')?;
                let b = self.operand()?;
                if op.name == "hom" {
                    Computation::Hom(a, b)
                } else {
                    Computation::Tensor(a, b)
                }
            }
            "ext" | "tor" => {
                let i = self.nonneg("homological index")?;
                self.expect(',')?;
                let a = self.operand()?;
                self.expect(',')?;
                let b = self.operand()?;
                if op.name == "ext" {
                    Computation::Ext(i, a, b)
                } else {
                    Computation::Tor(i, a, b)
                }
            }
            "depth" | "width" => {
                let first = self.operand()?;
                let (ideal, m) = if self.eat(',') { (Some(first), self.operand()?) } else { (None, first) };
                if op.name == "depth" {
                    Computation::Depth(ideal, m)
                } else {
                    Computation::Width(ideal, m)
                }
            }
            "betti" => Computation::Betti(self.operand()?),
            "bass" => Computation::Bass(self.operand()?),
            "ass" => Computation::Ass(self.operand()?),
            "att" => Computation::Att(self.operand()?),
            "stages" => {
                let k = self.ident()?;
                let kind = match k.name.as_str() {
                    "ext" => StageKind::Ext,
                    "tor" => StageKind::Tor,
                    other => return Err(ScriptError::new(ErrorCode::Syntax, k.pos, format!("expected `ext` or `tor`, found `{other}`"))),
                };
                self.expect(',')?;
                let i = self.nonneg("homological index")?;
                self.expect(',')?;
                let a = self.operand()?;
                self.expect(',')?;
                let b = self.operand()?;
                Computation::Stages(kind, i, a, b)
            }
            other => {
                return Err(ScriptError::new(
                    ErrorCode::Syntax,
                    op.pos,
                    format!("unknown computation `{other}`; expected hom, tensor, ext, tor, depth, width, betti, bass, ass, att or stages"),
                ))
            }
        };
        self.expect(')')?;
        Ok(c)
    }

    fn verify(&mut self) -> ScriptResult<StatementKind> {
        self.keyword("suite")?;
        let mut options = SuiteOptions::default();
        if self.eat('(') {
            self.list(')', |p| p.suite_option(&mut options))?;
            self.expect(')')?;
        }
        let bind = if self.peek_ident() == Some("as") {
            self.keyword("as")?;
            Some(self.ident()?)
        } else {
            None
        };
        Ok(StatementKind::Verify { options, bind })
    }

    fn suite_option(&mut self, o: &mut SuiteOptions) -> ScriptResult<()> {
        let key = self.ident()?;
        self.expect('=')?;
        let pos = self.pos_after_ws();
        let bad = |msg: &str| ScriptError::new(ErrorCode::InvalidArgument, pos, format!("{}: {msg}", key.name));
        match key.name.as_str() {
            "seed" => o.seed = Some(u64::try_from(self.int()?).map_err(|_| bad("must be non-negative"))?),
            "cases" => o.cases = Some(self.nonneg("cases")?),
            "s_max" => o.s_max = Some(u32::try_from(self.int()?).map_err(|_| bad("must be non-negative"))?),
            "i_max" => o.i_max = Some(self.nonneg("i_max")?),
            "field" => o.field = Some(self.field()?),
            "checks" => {
                self.expect('[')?;
                o.checks = self.list(']', |p| Ok(p.word()?.name))?;
                self.expect(']')?;
            }
            "mutation" => {
                let w = self.word()?;
                o.mutation = Some(
                    serde_json::from_value::<Mutation>(serde_json::Value::String(w.name.clone()))
                        .map_err(|_| bad("expected skip-transpose, stabilization-minus-one or ext-index-shift"))?,
                );
            }
            other => return Err(ScriptError::new(ErrorCode::Syntax, key.pos, format!("unknown suite option `{other}`"))),
        }
        Ok(())
    }

    fn preset(&mut self) -> ScriptResult<StatementKind> {
        let name = self.word()?;
        let mut params = Vec::new();
        if self.eat('(') {
            params = self.list(')', Self::int)?;
            self.expect(')')?;
        }
        Preset::from_parts(&name.name, &params)
            .map(StatementKind::Preset)
            .map_err(|msg| ScriptError::new(ErrorCode::InvalidArgument, name.pos, msg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(src: &str) -> StatementKind {
        let mut s = parse_script(src).unwrap();
        assert_eq!(s.len(), 1);
        s.remove(0).kind
    }

    fn err(src: &str) -> ScriptError {
        parse_script(src).unwrap_err()
    }

    #[test]
    fn positions_are_one_based() {
        let e = err("ring R = quotient(q, [x], ideal());\n  compute frob(R);");
        assert_eq!(e.code, ErrorCode::Syntax);
        assert_eq!(e.pos, Pos { line: 2, column: 11 });
    }

    #[test]
    fn polynomials_keep_nested_brackets() {
        let StatementKind::Ring { ideal, .. } = one("ring R = quotient(q, [x, y], ideal((x+y)^2, x*y));") else { panic!() };
        let texts: Vec<_> = ideal.iter().map(|p| p.text.as_str()).collect();
        assert_eq!(texts, ["(x+y)^2", "x*y"]);
    }

    #[test]
    fn comments_and_trailing_statement() {
        let s = parse_script("# a comment\nring R = quotient([x], ideal()) // trailing").unwrap();
        assert_eq!(s.len(), 1);
        assert!(matches!(&s[0].kind, StatementKind::Ring { field: FieldExpr::Default, .. }));
    }

    #[test]
    fn missing_semicolon_between_statements() {
        let e = err("ring R = quotient([x], ideal()) ring S = quotient([y], ideal());");
        assert_eq!(e.pos, Pos { line: 1, column: 33 });
    }

    #[test]
    fn empty_polynomial_is_rejected() {
        let e = err("ring R = quotient(q, [x], ideal(x, ));");
        assert_eq!(e.code, ErrorCode::Syntax);
    }

    #[test]
    fn bad_field_is_invalid_argument() {
        assert_eq!(err("ring R = quotient(p:12, [x], ideal());").code, ErrorCode::InvalidArgument);
        assert!(matches!(one("ring R = quotient(prime(7), [x], ideal());"), StatementKind::Ring { field: FieldExpr::Given(_), .. }));
    }
}
