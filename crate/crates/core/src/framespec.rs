//! Parsing and interpretation of GermaNet-style verb frame notation.
//!
//! A frame string such as `NN.Pp` is a dot-separated sequence of two-letter
//! complement codes. `NN` is a nominative noun phrase, `Pp` an optional
//! prepositional phrase, `BT` a temporal adverbial or PP, and so on. A
//! lowercase second letter marks the complement as optional (`PP` required,
//! `Pp` optional); the same convention is applied to every code.
//!
//! `NE` (expletive "es") and `AR` (accusative reflexive) follow the
//! standard notation for this frame family; the lexicon data exercises them
//! only through matching behavior.

use std::fmt;

use thiserror::Error;

/// German grammatical case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    Nominative,
    Genitive,
    Dative,
    Accusative,
}

impl Case {
    pub const ALL: [Case; 4] = [
        Case::Nominative,
        Case::Genitive,
        Case::Dative,
        Case::Accusative,
    ];

    /// Long name used in reports ("nominative", ...).
    pub fn name(self) -> &'static str {
        match self {
            Case::Nominative => "nominative",
            Case::Genitive => "genitive",
            Case::Dative => "dative",
            Case::Accusative => "accusative",
        }
    }

    /// Abbreviated name used in table dumps ("nom", ...).
    pub fn short(self) -> &'static str {
        match self {
            Case::Nominative => "nom",
            Case::Genitive => "gen",
            Case::Dative => "dat",
            Case::Accusative => "acc",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Syntactic realisation of a frame element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhraseKind {
    NounPhrase,
    PrepositionalPhrase,
    AdverbialOrPp,
    InfinitiveClause,
    Reflexive,
    Expletive,
}

impl PhraseKind {
    pub fn name(self) -> &'static str {
        match self {
            PhraseKind::NounPhrase => "noun-phrase",
            PhraseKind::PrepositionalPhrase => "prepositional-phrase",
            PhraseKind::AdverbialOrPp => "adverbial-or-pp",
            PhraseKind::InfinitiveClause => "infinitive-clause",
            PhraseKind::Reflexive => "reflexive",
            PhraseKind::Expletive => "expletive",
        }
    }
}

/// Semantic restriction carried by adverbial complement codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemanticRestriction {
    None,
    Local,
    Temporal,
    Manner,
}

/// The two-letter code inventory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodeBase {
    Nn,
    An,
    Dn,
    Gn,
    Pp,
    Bm,
    Bl,
    Bt,
    Bd,
    Ar,
    Az,
    Ne,
}

impl CodeBase {
    pub const ALL: [CodeBase; 12] = [
        CodeBase::Nn,
        CodeBase::An,
        CodeBase::Dn,
        CodeBase::Gn,
        CodeBase::Pp,
        CodeBase::Bm,
        CodeBase::Bl,
        CodeBase::Bt,
        CodeBase::Bd,
        CodeBase::Ar,
        CodeBase::Az,
        CodeBase::Ne,
    ];

    /// Canonical (required) spelling.
    pub fn canonical(self) -> &'static str {
        match self {
            CodeBase::Nn => "NN",
            CodeBase::An => "AN",
            CodeBase::Dn => "DN",
            CodeBase::Gn => "GN",
            CodeBase::Pp => "PP",
            CodeBase::Bm => "BM",
            CodeBase::Bl => "BL",
            CodeBase::Bt => "BT",
            CodeBase::Bd => "BD",
            CodeBase::Ar => "AR",
            CodeBase::Az => "AZ",
            CodeBase::Ne => "NE",
        }
    }

    fn from_upper(token: &str) -> Option<CodeBase> {
        CodeBase::ALL
            .iter()
            .copied()
            .find(|base| base.canonical() == token)
    }
}

/// One element of a verb frame with its full attribute record.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplementCode {
    pub base: CodeBase,
    pub phrase_kind: PhraseKind,
    pub required_case: Option<Case>,
    pub optional: bool,
    pub semantic_restriction: SemanticRestriction,
}

impl ComplementCode {
    fn new(base: CodeBase, optional: bool) -> ComplementCode {
        let (phrase_kind, required_case, restriction) = match base {
            CodeBase::Nn => (
                PhraseKind::NounPhrase,
                Some(Case::Nominative),
                SemanticRestriction::None,
            ),
            CodeBase::An => (
                PhraseKind::NounPhrase,
                Some(Case::Accusative),
                SemanticRestriction::None,
            ),
            CodeBase::Dn => (
                PhraseKind::NounPhrase,
                Some(Case::Dative),
                SemanticRestriction::None,
            ),
            CodeBase::Gn => (
                PhraseKind::NounPhrase,
                Some(Case::Genitive),
                SemanticRestriction::None,
            ),
            CodeBase::Pp => (
                PhraseKind::PrepositionalPhrase,
                None,
                SemanticRestriction::None,
            ),
            CodeBase::Bm => (PhraseKind::AdverbialOrPp, None, SemanticRestriction::Manner),
            CodeBase::Bl => (PhraseKind::AdverbialOrPp, None, SemanticRestriction::Local),
            CodeBase::Bt => (
                PhraseKind::AdverbialOrPp,
                None,
                SemanticRestriction::Temporal,
            ),
            // Directional adverbials pattern with the spatial codes.
            CodeBase::Bd => (PhraseKind::AdverbialOrPp, None, SemanticRestriction::Local),
            CodeBase::Ar => (
                PhraseKind::Reflexive,
                Some(Case::Accusative),
                SemanticRestriction::None,
            ),
            CodeBase::Az => (
                PhraseKind::InfinitiveClause,
                None,
                SemanticRestriction::None,
            ),
            CodeBase::Ne => (PhraseKind::Expletive, None, SemanticRestriction::None),
        };
        ComplementCode {
            base,
            phrase_kind,
            required_case,
            optional,
            semantic_restriction: restriction,
        }
    }

    /// The spelling of this code as it appears in a frame string: the
    /// canonical form with the second letter lowercased when optional.
    pub fn spelling(&self) -> String {
        let canonical = self.base.canonical();
        if self.optional {
            let mut chars = canonical.chars();
            let first = chars.next().unwrap();
            format!("{}{}", first, chars.as_str().to_lowercase())
        } else {
            canonical.to_string()
        }
    }

    pub fn is_noun_phrase(&self) -> bool {
        self.phrase_kind == PhraseKind::NounPhrase
    }

    pub fn is_prepositional(&self) -> bool {
        self.phrase_kind == PhraseKind::PrepositionalPhrase
    }

    pub fn is_adverbial(&self) -> bool {
        self.phrase_kind == PhraseKind::AdverbialOrPp
    }
}

/// A parsed verb frame: the raw string plus its ordered complement codes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FramePattern {
    pub raw: String,
    pub elements: Vec<ComplementCode>,
}

impl FramePattern {
    /// True when the pattern contains a code with the given base.
    pub fn contains(&self, base: CodeBase) -> bool {
        self.elements.iter().any(|e| e.base == base)
    }
}

impl fmt::Display for FramePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.raw)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrameError {
    #[error("empty frame string")]
    Empty,
    #[error("empty segment in frame string {0:?}")]
    EmptySegment(String),
    #[error("unknown complement code {0:?}")]
    UnknownCode(String),
}

/// Parse a single complement code token.
///
/// The first letter must be uppercase as written; a lowercase second letter
/// marks the element optional (`PP` vs `Pp`).
pub fn code_properties(token: &str) -> Result<ComplementCode, FrameError> {
    let mut chars = token.chars();
    let first = chars.next().ok_or(FrameError::Empty)?;
    let second = chars.next();
    if !first.is_uppercase() || second.is_none() || chars.next().is_some() {
        return Err(FrameError::UnknownCode(token.to_string()));
    }
    let second = second.unwrap();
    let base = CodeBase::from_upper(&token.to_uppercase())
        .ok_or_else(|| FrameError::UnknownCode(token.to_string()))?;
    Ok(ComplementCode::new(base, second.is_lowercase()))
}

/// Parse a dot-separated frame string such as `NN.Pp` into a pattern.
pub fn parse_frame(raw: &str) -> Result<FramePattern, FrameError> {
    if raw.is_empty() {
        return Err(FrameError::Empty);
    }
    let mut elements = Vec::new();
    for segment in raw.split('.') {
        if segment.is_empty() {
            return Err(FrameError::EmptySegment(raw.to_string()));
        }
        elements.push(code_properties(segment)?);
    }
    Ok(FramePattern {
        raw: raw.to_string(),
        elements,
    })
}

/// Render a pattern back to its frame string. Inverse of [`parse_frame`].
pub fn format_frame(pattern: &FramePattern) -> String {
    pattern
        .elements
        .iter()
        .map(|e| e.spelling())
        .collect::<Vec<_>>()
        .join(".")
}
