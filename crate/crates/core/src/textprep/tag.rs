//! Rule- and lexicon-based part-of-speech tagging.
//!
//! Closed-class words are looked up first, verb forms come from the
//! lexicon's form index, adjectives from the lexicon's adjective entries,
//! and the remaining capitalized tokens exploit German noun capitalization.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::lexres::{Lexicon, Pos};
use crate::textprep::{PosTag, Token};

const DETERMINER_STEMS: [&str; 6] = ["mein", "dein", "sein", "ihr", "unser", "euer"];
const DETERMINER_SUFFIXES: [&str; 6] = ["", "e", "em", "en", "er", "es"];

const BASE_DETERMINERS: [&str; 23] = [
    "der", "die", "das", "dem", "den", "des", "ein", "eine", "einem", "einen", "einer", "eines",
    "kein", "keine", "keinem", "keinen", "keiner", "keines", "dieser", "diese", "dieses", "diesem",
    "diesen",
];

const PREPOSITIONS: [&str; 22] = [
    "mit", "auf", "aus", "an", "nach", "in", "von", "bei", "zu", "über", "unter", "vor", "hinter",
    "neben", "zwischen", "durch", "für", "gegen", "ohne", "um", "als", "seit",
];

const CONTRACTED_PREPOSITIONS: [&str; 8] = ["am", "im", "beim", "zum", "zur", "vom", "ans", "ins"];

const PRONOUNS: [&str; 17] = [
    "ich", "du", "er", "sie", "es", "wir", "mich", "dich", "sich", "ihn", "ihm", "ihnen", "uns",
    "euch", "mir", "dir", "man",
];

const CONJUNCTIONS: [&str; 7] = ["und", "oder", "aber", "denn", "sondern", "dass", "weil"];

const ADVERBS: [&str; 21] = [
    "dort",
    "hier",
    "dann",
    "dabei",
    "danach",
    "zuvor",
    "hingegen",
    "frontal",
    "nachfolgend",
    "heute",
    "gestern",
    "morgen",
    "bereits",
    "schon",
    "noch",
    "sehr",
    "auch",
    "nur",
    "vermutlich",
    "dorthin",
    "damals",
];

const ADVERB_SUFFIXES: [&str; 3] = ["lich", "weise", "mals"];

const CARDINAL_WORDS: [&str; 12] = [
    "eins", "zwei", "drei", "vier", "fünf", "sechs", "sieben", "acht", "neun", "zehn", "elf",
    "zwölf",
];

struct ClosedClass {
    determiners: HashSet<&'static str>,
    possessives: HashSet<String>,
}

fn closed_class() -> &'static ClosedClass {
    static TABLES: OnceLock<ClosedClass> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut possessives = HashSet::new();
        for stem in DETERMINER_STEMS {
            for suffix in DETERMINER_SUFFIXES {
                possessives.insert(format!("{stem}{suffix}"));
            }
        }
        ClosedClass {
            determiners: BASE_DETERMINERS.iter().copied().collect(),
            possessives,
        }
    })
}

fn is_cardinal(surface: &str) -> bool {
    let lower = surface.to_lowercase();
    if CARDINAL_WORDS.contains(&lower.as_str()) {
        return true;
    }
    !surface.is_empty() && surface.chars().all(|c| c.is_ascii_digit())
}

fn closed_class_tag(surface: &str) -> Option<PosTag> {
    match surface {
        "," => return Some(PosTag::Comma),
        "." | "!" | "?" => return Some(PosTag::SentenceFinal),
        _ => {}
    }
    let lower = surface.to_lowercase();
    let tables = closed_class();
    if tables.determiners.contains(lower.as_str()) || tables.possessives.contains(&lower) {
        return Some(PosTag::Determiner);
    }
    if CONTRACTED_PREPOSITIONS.contains(&lower.as_str()) {
        return Some(PosTag::ContractedPreposition);
    }
    if PREPOSITIONS.contains(&lower.as_str()) {
        return Some(PosTag::Preposition);
    }
    if PRONOUNS.contains(&lower.as_str()) {
        return Some(PosTag::Pronoun);
    }
    if CONJUNCTIONS.contains(&lower.as_str()) {
        return Some(PosTag::Conjunction);
    }
    if ADVERBS.contains(&lower.as_str()) {
        return Some(PosTag::Adverb);
    }
    if is_cardinal(surface) {
        return Some(PosTag::Cardinal);
    }
    None
}

fn is_capitalized(surface: &str) -> bool {
    surface
        .chars()
        .next()
        .map(|c| c.is_uppercase())
        .unwrap_or(false)
}

/// Tag a tokenized sentence in place. Tagging is total: every token
/// receives exactly one tag.
pub fn tag_pos(tokens: &mut [Token], lex: &Lexicon) {
    for (i, token) in tokens.iter_mut().enumerate() {
        let surface = token.surface.clone();
        let initial = i == 0;

        if let Some(tag) = closed_class_tag(&surface) {
            token.pos = tag;
            continue;
        }

        if let Some(lemma) = lex.lemma_of_form(&surface) {
            // The bare lemma is the infinitive; everything else is treated
            // as a finite form.
            token.pos = if lemma == surface || lemma == surface.to_lowercase() {
                PosTag::VerbOther
            } else {
                PosTag::VerbFinite
            };
            token.lemma = Some(lemma.to_string());
            continue;
        }

        if !lex.lookup_synsets(&surface, Pos::Adjective).is_empty() {
            token.pos = PosTag::Adjective;
            continue;
        }

        if is_capitalized(&surface) {
            if initial {
                // Sentence-initial capitalization is ambiguous: prefer the
                // lexicon's noun entries, then fall through to the rules
                // used for every other token.
                if !lex.lookup_synsets(&surface, Pos::Noun).is_empty() {
                    token.pos = PosTag::Noun;
                    continue;
                }
                let lower = surface.to_lowercase();
                if ADVERB_SUFFIXES.iter().any(|s| lower.ends_with(s)) {
                    token.pos = PosTag::Adverb;
                    continue;
                }
            }
            token.pos = PosTag::Noun;
            continue;
        }

        let lower = surface.to_lowercase();
        if ADVERB_SUFFIXES.iter().any(|s| lower.ends_with(s)) {
            token.pos = PosTag::Adverb;
            continue;
        }
        token.pos = PosTag::Other;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexres::parse_lexicon;
    use crate::textprep::tokenize;

    fn fixture_lexicon() -> Lexicon {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/lexicon.json");
        parse_lexicon(&std::fs::read_to_string(path).unwrap()).unwrap()
    }

    fn tag(text: &str) -> Vec<Token> {
        let lex = fixture_lexicon();
        let mut tokens = tokenize(text);
        tag_pos(&mut tokens, &lex);
        tokens
    }

    #[test]
    fn verb_form_gets_lemma() {
        let tokens = tag("sein LKW kollidierte mit dem PKW.");
        let verb = tokens.iter().find(|t| t.surface == "kollidierte").unwrap();
        assert_eq!(verb.pos, PosTag::VerbFinite);
        assert_eq!(verb.lemma.as_deref(), Some("kollidieren"));
    }

    #[test]
    fn closed_classes() {
        let tokens = tag("sein LKW kollidierte mit dem PKW am Montag.");
        let find = |s: &str| tokens.iter().find(|t| t.surface == s).unwrap().pos;
        assert_eq!(find("mit"), PosTag::Preposition);
        assert_eq!(find("am"), PosTag::ContractedPreposition);
        assert_eq!(find("sein"), PosTag::Determiner);
        assert_eq!(find("dem"), PosTag::Determiner);
        assert_eq!(find("."), PosTag::SentenceFinal);
    }

    #[test]
    fn capitalized_tokens_become_nouns() {
        let tokens = tag("sein LKW traf den Begrenzungspfosten.");
        let find = |s: &str| tokens.iter().find(|t| t.surface == s).unwrap().pos;
        assert_eq!(find("LKW"), PosTag::Noun);
        // Unknown capitalized noun still tagged noun.
        assert_eq!(find("Begrenzungspfosten"), PosTag::Noun);
    }

    #[test]
    fn sentence_initial_resolution() {
        // Known adverb word, capitalized sentence-initially.
        let tokens = tag("Nachfolgend kollidierten 3 Pkw mit dem VW Golf.");
        assert_eq!(tokens[0].pos, PosTag::Adverb);
        let three = tokens.iter().find(|t| t.surface == "3").unwrap();
        assert_eq!(three.pos, PosTag::Cardinal);

        // Known noun.
        let tokens = tag("Baum fällt.");
        assert_eq!(tokens[0].pos, PosTag::Noun);
    }

    #[test]
    fn adjectives_come_from_the_lexicon() {
        let tokens = tag("Der erste Hänger kollidierte vermutlich.");
        let find = |s: &str| tokens.iter().find(|t| t.surface == s).unwrap().pos;
        assert_eq!(find("erste"), PosTag::Adjective);
        assert_eq!(find("vermutlich"), PosTag::Adverb);
        assert_eq!(find("Hänger"), PosTag::Noun);
    }

    #[test]
    fn tagging_is_total() {
        let tokens = tag("xyz 1345/78 , qwertz !");
        assert!(tokens.iter().all(|t| {
            // Every token carries some tag; unknown lowercase words are
            // PosTag::Other rather than untagged.
            PosTag::ALL.contains(&t.pos)
        }));
    }
}
