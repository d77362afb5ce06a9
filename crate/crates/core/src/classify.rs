//! Shallow semantic classification of filler heads: named entities map
//! through a fixed class table, pronouns count as persons, and common nouns
//! are looked up in the lexical resource.
//!
//! Limitation: a lemma with several noun senses contributes its
//! first-listed synset. No sense disambiguation is attempted; resources
//! meant for this pipeline should carry one sense per filler lemma.

use crate::lexres::{Lexicon, Pos};
use crate::textprep::{NeClass, PosTag, Token};

/// What kind of phrase head produced an observation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FillerKind {
    CommonNoun,
    Pronoun,
    Ne(NeClass),
}

impl FillerKind {
    pub fn name(self) -> String {
        match self {
            FillerKind::CommonNoun => "common-noun".to_string(),
            FillerKind::Pronoun => "pronoun".to_string(),
            FillerKind::Ne(class) => format!("ne({})", class.name()),
        }
    }
}

/// Category label used when a head cannot be resolved. Such fillers are
/// reported, not dropped: coverage gaps are the dominant error source and
/// hiding them would mask exactly that.
pub const UNKNOWN_CATEGORY: &str = "unknown";

#[derive(Debug, Clone)]
pub struct HeadClass {
    pub kind: FillerKind,
    pub category: String,
    /// Synset backing the observation; for pronouns and entities this is
    /// the category's designated synset when the lexicon defines one.
    pub synset: Option<String>,
}

/// Classify a head token.
pub fn classify_head(token: &Token, lex: &Lexicon) -> HeadClass {
    if let Some(ne) = token.ne_class {
        let category = ne.category().to_string();
        let synset = lex.category_synset(&category).map(|s| s.id.clone());
        return HeadClass {
            kind: FillerKind::Ne(ne),
            category,
            synset,
        };
    }
    if token.pos == PosTag::Pronoun {
        let category = "person".to_string();
        let synset = lex.category_synset(&category).map(|s| s.id.clone());
        return HeadClass {
            kind: FillerKind::Pronoun,
            category,
            synset,
        };
    }
    let lemma = token.lemma.as_deref().unwrap_or(&token.surface);
    match lex.lookup_synsets(lemma, Pos::Noun).first() {
        Some(synset) => HeadClass {
            kind: FillerKind::CommonNoun,
            category: synset.category.clone(),
            synset: Some(synset.id.clone()),
        },
        None => HeadClass {
            kind: FillerKind::CommonNoun,
            category: UNKNOWN_CATEGORY.to_string(),
            synset: None,
        },
    }
}
