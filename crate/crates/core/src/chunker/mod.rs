//! Bottom-up chart parsing of tagged sentences with a small chunk grammar.
//!
//! The parser annotates basic structures only (noun phrases and
//! prepositional phrases) and produces coverings: maximal sets of
//! non-overlapping chunks. Sentences rarely have a full reading at this
//! level, so the covering is the unit the rest of the pipeline consumes.

mod grammar;
pub mod oracle;
mod parse;

pub use grammar::{default_grammar, Grammar, GrammarError, GrammarRule, Symbol};
pub use parse::parse_chunks;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::framespec::Case;
use crate::textprep::{PosTag, Sentence, Token};

/// A set of German cases, kept as a small bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CaseSet(u8);

impl CaseSet {
    pub const EMPTY: CaseSet = CaseSet(0);

    pub const FULL: CaseSet = CaseSet(0b1111);

    fn bit(case: Case) -> u8 {
        match case {
            Case::Nominative => 0b0001,
            Case::Genitive => 0b0010,
            Case::Dative => 0b0100,
            Case::Accusative => 0b1000,
        }
    }

    pub fn of(cases: &[Case]) -> CaseSet {
        let mut set = CaseSet::EMPTY;
        for &case in cases {
            set.0 |= CaseSet::bit(case);
        }
        set
    }

    pub fn single(case: Case) -> CaseSet {
        CaseSet(CaseSet::bit(case))
    }

    pub fn contains(self, case: Case) -> bool {
        self.0 & CaseSet::bit(case) != 0
    }

    pub fn intersect(self, other: CaseSet) -> CaseSet {
        CaseSet(self.0 & other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Case> {
        Case::ALL.into_iter().filter(move |&c| self.contains(c))
    }

    /// Short rendering in fixed case order: "nom,acc".
    pub fn short(self) -> String {
        self.iter().map(Case::short).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Debug for CaseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.short())
    }
}

/// NP or PP.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChunkKind {
    Np,
    Pp,
}

impl ChunkKind {
    pub fn name(self) -> &'static str {
        match self {
            ChunkKind::Np => "NP",
            ChunkKind::Pp => "PP",
        }
    }
}

/// A minimal non-recursive NP or PP span over sentence tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chunk {
    pub kind: ChunkKind,
    /// Token index range.
    pub span: Range<usize>,
    /// Token index of the head noun, proper noun or pronoun.
    pub head_index: usize,
    pub case_set: CaseSet,
    /// Preposition lemma, after contraction expansion. PP chunks only.
    pub preposition: Option<String>,
    /// Determiner surface when the (embedded) NP starts with one.
    pub determiner: Option<String>,
}

impl Chunk {
    pub fn overlaps(&self, other: &Chunk) -> bool {
        self.span.start < other.span.end && other.span.start < self.span.end
    }

    pub fn len(&self) -> usize {
        self.span.end - self.span.start
    }

    pub fn is_empty(&self) -> bool {
        self.span.is_empty()
    }

    /// Surface slice of the chunk within its sentence.
    pub fn surface<'a>(&self, sentence: &'a Sentence) -> &'a str {
        let start = sentence.tokens[self.span.start].span.0;
        let end = sentence.tokens[self.span.end - 1].span.1;
        &sentence.text[start..end]
    }
}

/// A maximal set of pairwise disjoint chunks plus the uncovered tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covering {
    pub chunks: Vec<Chunk>,
    pub unparsed: Vec<usize>,
}

impl Covering {
    pub fn covered_tokens(&self) -> usize {
        self.chunks.iter().map(Chunk::len).sum()
    }
}

/// Determiner, preposition and contraction case tables.
#[derive(Debug, Clone)]
pub struct CaseTables {
    determiners: BTreeMap<String, CaseSet>,
    prepositions: BTreeMap<String, CaseSet>,
    contractions: BTreeMap<String, (String, Case)>,
}

impl Default for CaseTables {
    fn default() -> Self {
        use Case::*;
        let mut determiners = BTreeMap::new();
        for (form, cases) in [
            ("der", &[Nominative, Dative, Genitive][..]),
            ("die", &[Nominative, Accusative]),
            ("das", &[Nominative, Accusative]),
            ("dem", &[Dative]),
            ("den", &[Accusative, Dative]),
            ("des", &[Genitive]),
            ("ein", &[Nominative, Accusative]),
            ("eine", &[Nominative, Accusative]),
            ("einem", &[Dative]),
            ("einen", &[Accusative]),
            ("einer", &[Dative, Genitive]),
            ("eines", &[Genitive]),
        ] {
            determiners.insert(form.to_string(), CaseSet::of(cases));
        }
        let mut prepositions = BTreeMap::new();
        for (prep, cases) in [
            ("mit", &[Dative][..]),
            ("auf", &[Dative, Accusative]),
            ("aus", &[Dative]),
            ("an", &[Dative, Accusative]),
            ("nach", &[Dative]),
            ("in", &[Dative, Accusative]),
            ("von", &[Dative]),
            ("bei", &[Dative]),
            ("zu", &[Dative]),
        ] {
            prepositions.insert(prep.to_string(), CaseSet::of(cases));
        }
        let mut contractions = BTreeMap::new();
        for (form, prep, case) in [
            ("am", "an", Dative),
            ("im", "in", Dative),
            ("beim", "bei", Dative),
            ("zum", "zu", Dative),
            ("zur", "zu", Dative),
            ("vom", "von", Dative),
            ("ans", "an", Accusative),
            ("ins", "in", Accusative),
        ] {
            contractions.insert(form.to_string(), (prep.to_string(), case));
        }
        CaseTables {
            determiners,
            prepositions,
            contractions,
        }
    }
}

impl CaseTables {
    /// Case set of a determiner form. Possessives follow the ein-pattern by
    /// suffix (sein/seine/seinem/...).
    pub fn determiner_cases(&self, form: &str) -> Option<CaseSet> {
        let lower = form.to_lowercase();
        if let Some(&set) = self.determiners.get(&lower) {
            return Some(set);
        }
        const STEMS: [&str; 7] = ["mein", "dein", "sein", "ihr", "unser", "euer", "kein"];
        for stem in STEMS {
            if let Some(suffix) = lower.strip_prefix(stem) {
                let key = format!("ein{suffix}");
                if let Some(&set) = self.determiners.get(&key) {
                    return Some(set);
                }
            }
        }
        None
    }

    /// Cases governed by a preposition; unlisted prepositions are left
    /// unconstrained.
    pub fn governed_cases(&self, lemma: &str) -> CaseSet {
        self.prepositions
            .get(&lemma.to_lowercase())
            .copied()
            .unwrap_or(CaseSet::FULL)
    }

    pub fn contraction(&self, form: &str) -> Option<&(String, Case)> {
        self.contractions.get(&form.to_lowercase())
    }

    pub fn contraction_count(&self) -> usize {
        self.contractions.len()
    }

    /// Register or override a governed-case entry.
    pub fn set_governed_cases(&mut self, lemma: &str, cases: CaseSet) {
        self.prepositions.insert(lemma.to_lowercase(), cases);
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CaseError {
    #[error("case clash: {0}")]
    Clash(String),
    #[error("token {0:?} is not a contracted preposition")]
    NotAContraction(String),
}

/// Expand a contracted preposition token into (preposition lemma, case).
pub fn expand_contraction(token: &Token, tables: &CaseTables) -> Result<(String, Case), CaseError> {
    if token.pos != PosTag::ContractedPreposition {
        return Err(CaseError::NotAContraction(token.surface.clone()));
    }
    tables
        .contraction(&token.surface)
        .map(|(prep, case)| (prep.clone(), *case))
        .ok_or_else(|| CaseError::NotAContraction(token.surface.clone()))
}

/// Computed case information for a chunk span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseAssignment {
    pub case_set: CaseSet,
    pub preposition: Option<String>,
    pub determiner: Option<String>,
}

/// Assign a case set to an NP or PP span.
///
/// NPs take the case set of their determiner form; determinerless NPs are
/// morphologically unconstrained. A PP intersects the cases governed by its
/// preposition with the embedded NP's set; an empty intersection rejects
/// the chunk.
pub fn assign_case(
    kind: ChunkKind,
    span: Range<usize>,
    sentence: &Sentence,
    tables: &CaseTables,
) -> Result<CaseAssignment, CaseError> {
    let tokens = &sentence.tokens[span.clone()];
    match kind {
        ChunkKind::Np => {
            let (determiner, case_set) = np_cases(tokens, tables);
            Ok(CaseAssignment {
                case_set,
                preposition: None,
                determiner,
            })
        }
        ChunkKind::Pp => {
            let first = &tokens[0];
            match first.pos {
                PosTag::ContractedPreposition => {
                    let (prep, case) = expand_contraction(first, tables)?;
                    let (determiner, np_set) = np_cases(&tokens[1..], tables);
                    let case_set = CaseSet::single(case).intersect(np_set);
                    if case_set.is_empty() {
                        return Err(CaseError::Clash(format!(
                            "contraction {} demands {} but the NP allows {{{}}}",
                            first.surface,
                            case.short(),
                            np_set.short()
                        )));
                    }
                    Ok(CaseAssignment {
                        case_set,
                        preposition: Some(prep),
                        determiner,
                    })
                }
                _ => {
                    let prep = first.surface.to_lowercase();
                    let governed = tables.governed_cases(&prep);
                    let (determiner, np_set) = np_cases(&tokens[1..], tables);
                    let case_set = governed.intersect(np_set);
                    if case_set.is_empty() {
                        return Err(CaseError::Clash(format!(
                            "preposition {prep} governs {{{}}} but the NP allows {{{}}}",
                            governed.short(),
                            np_set.short()
                        )));
                    }
                    Ok(CaseAssignment {
                        case_set,
                        preposition: Some(prep),
                        determiner,
                    })
                }
            }
        }
    }
}

fn np_cases(tokens: &[Token], tables: &CaseTables) -> (Option<String>, CaseSet) {
    match tokens.first() {
        Some(token) if token.pos == PosTag::Determiner => {
            let set = tables
                .determiner_cases(&token.surface)
                .unwrap_or(CaseSet::FULL);
            (Some(token.surface.clone()), set)
        }
        _ => (None, CaseSet::FULL),
    }
}

/// The reflexive "sich" never stands as an NP chunk of its own; frame
/// matching binds it as a bare token for AR elements.
pub(crate) fn admissible_chunk(kind: ChunkKind, tokens: &[Token]) -> bool {
    !(kind == ChunkKind::Np && tokens.len() == 1 && tokens[0].surface.to_lowercase() == "sich")
}

/// Head of an NP span: the rightmost common noun, else the rightmost proper
/// noun, pronoun or cardinal.
pub(crate) fn head_of_np(tokens: &[Token], offset: usize) -> usize {
    for wanted in [
        PosTag::Noun,
        PosTag::ProperNoun,
        PosTag::Pronoun,
        PosTag::Cardinal,
    ] {
        if let Some(pos) = tokens.iter().rposition(|t| t.pos == wanted) {
            return offset + pos;
        }
    }
    offset + tokens.len() - 1
}
