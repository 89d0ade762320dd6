//! Syntax tree of the script language. See `GRAMMAR.md` for the grammar.

use crate::error::Pos;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

/// Polynomial source text; parsed once the ring is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyText {
    pub text: String,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldExpr {
    /// The session default (`--field` or `MATLIS_DEFAULT_FIELD`).
    Default,
    Given(matlis_core::FieldSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreeShape {
    Rank(usize),
    Degrees(Vec<i32>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleExpr {
    Name(Ident),
    Free { ring: Ident, shape: FreeShape },
    Cyclic { ring: Ident, gens: Vec<PolyText> },
    /// Generator degrees and relation columns.
    Presented { ring: Ident, degrees: Vec<i32>, columns: Vec<Vec<PolyText>> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperandKind {
    /// A module expression; a bare name may also denote an artinian module
    /// or an ideal.
    Module(ModuleExpr),
    Dual(ModuleExpr),
    Ideal(Vec<PolyText>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Operand {
    pub kind: OperandKind,
    pub pos: Pos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StageKind {
    Ext,
    Tor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Computation {
    Hom(Operand, Operand),
    Tensor(Operand, Operand),
    Ext(usize, Operand, Operand),
    Tor(usize, Operand, Operand),
    Depth(Option<Operand>, Operand),
    Width(Option<Operand>, Operand),
    Betti(Operand),
    Bass(Operand),
    Ass(Operand),
    Att(Operand),
    Stages(StageKind, usize, Operand, Operand),
}

impl Computation {
    pub fn name(&self) -> &'static str {
        match self {
            Computation::Hom(..) => "hom",
            Computation::Tensor(..) => "tensor",
            Computation::Ext(..) => "ext",
            Computation::Tor(..) => "tor",
            Computation::Depth(..) => "depth",
            Computation::Width(..) => "width",
            Computation::Betti(..) => "betti",
            Computation::Bass(..) => "bass",
            Computation::Ass(..) => "ass",
            Computation::Att(..) => "att",
            Computation::Stages(..) => "stages",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: Option<u64>,
    pub cases: Option<usize>,
    pub s_max: Option<u32>,
    pub i_max: Option<usize>,
    pub field: Option<FieldExpr>,
    pub checks: Vec<String>,
    pub mutation: Option<matlis_core::matlis::Mutation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StatementKind {
    Ring { name: Ident, field: FieldExpr, variables: Vec<Ident>, ideal: Vec<PolyText> },
    Ideal { name: Ident, gens: Vec<PolyText>, over: Option<Ident> },
    Module { name: Ident, expr: ModuleExpr },
    Artinian { name: Ident, expr: Operand },
    Compute(Computation),
    Verify { options: SuiteOptions, bind: Option<Ident> },
    Preset(crate::presets::Preset),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub kind: StatementKind,
    pub pos: Pos,
    /// Source text of the statement, without the terminator.
    pub source: String,
}
