//! Text preprocessing: sentence splitting, tokenization, part-of-speech
//! tagging and named entity recognition for German accident-report prose.

mod ne;
mod tag;
mod vertical;

pub use ne::{recognize_nes, NeConfig};
pub use tag::tag_pos;
pub use vertical::{read_vertical, write_vertical, VerticalError};

use serde::Deserialize;

/// Part-of-speech tags. This is the minimal tagset the chunk grammar needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosTag {
    Determiner,
    Adjective,
    Noun,
    ProperNoun,
    Pronoun,
    Preposition,
    ContractedPreposition,
    VerbFinite,
    VerbOther,
    Cardinal,
    Conjunction,
    Comma,
    SentenceFinal,
    Adverb,
    Other,
}

impl PosTag {
    pub const ALL: [PosTag; 15] = [
        PosTag::Determiner,
        PosTag::Adjective,
        PosTag::Noun,
        PosTag::ProperNoun,
        PosTag::Pronoun,
        PosTag::Preposition,
        PosTag::ContractedPreposition,
        PosTag::VerbFinite,
        PosTag::VerbOther,
        PosTag::Cardinal,
        PosTag::Conjunction,
        PosTag::Comma,
        PosTag::SentenceFinal,
        PosTag::Adverb,
        PosTag::Other,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PosTag::Determiner => "determiner",
            PosTag::Adjective => "adjective",
            PosTag::Noun => "noun",
            PosTag::ProperNoun => "proper-noun",
            PosTag::Pronoun => "pronoun",
            PosTag::Preposition => "preposition",
            PosTag::ContractedPreposition => "contracted-preposition",
            PosTag::VerbFinite => "verb-finite",
            PosTag::VerbOther => "verb-other",
            PosTag::Cardinal => "cardinal",
            PosTag::Conjunction => "conjunction",
            PosTag::Comma => "comma",
            PosTag::SentenceFinal => "sentence-final",
            PosTag::Adverb => "adverb",
            PosTag::Other => "other",
        }
    }

    pub fn from_name(name: &str) -> Option<PosTag> {
        PosTag::ALL.iter().copied().find(|t| t.name() == name)
    }
}

/// Named entity classes recognized in the corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NeClass {
    RegistrationNumber,
    LicencePlate,
    Date,
    PersonName,
    VehicleName,
    LocationName,
}

impl NeClass {
    pub fn name(self) -> &'static str {
        match self {
            NeClass::RegistrationNumber => "registration-number",
            NeClass::LicencePlate => "licence-plate",
            NeClass::Date => "date",
            NeClass::PersonName => "person-name",
            NeClass::VehicleName => "vehicle-name",
            NeClass::LocationName => "location-name",
        }
    }

    /// Fixed mapping from entity class to top-level semantic category.
    pub fn category(self) -> &'static str {
        match self {
            NeClass::RegistrationNumber => "person",
            NeClass::PersonName => "person",
            NeClass::VehicleName => "vehicle",
            NeClass::LicencePlate => "vehicle",
            NeClass::LocationName => "location",
            NeClass::Date => "time",
        }
    }
}

/// One token of a sentence. Char spans are byte offsets into the sentence
/// text and are strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub pos: PosTag,
    pub lemma: Option<String>,
    pub ne_class: Option<NeClass>,
    pub span: (usize, usize),
}

impl Token {
    fn raw(surface: &str, start: usize) -> Token {
        Token {
            surface: surface.to_string(),
            pos: PosTag::Other,
            lemma: None,
            ne_class: None,
            span: (start, start + surface.len()),
        }
    }
}

/// Document identifier plus sentence index within the document.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SourceId {
    pub doc: String,
    pub index: usize,
}

impl std::fmt::Display for SourceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.doc, self.index)
    }
}

/// A tokenized sentence together with its source text.
#[derive(Debug, Clone)]
pub struct Sentence {
    pub source: SourceId,
    pub text: String,
    pub tokens: Vec<Token>,
}

/// Byte range of one sentence within a document.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SentenceSpan {
    pub start: usize,
    pub end: usize,
}

pub(crate) const MONTH_NAMES: [&str; 12] = [
    "Januar",
    "Februar",
    "März",
    "April",
    "Mai",
    "Juni",
    "Juli",
    "August",
    "September",
    "Oktober",
    "November",
    "Dezember",
];

/// Spans that a sentence boundary must never fall into: numeric dates and
/// day-plus-month-name dates. Matched before splitting.
fn protected_spans(text: &str) -> Vec<(usize, usize)> {
    use regex::Regex;
    use std::sync::OnceLock;

    static NUMERIC: OnceLock<Regex> = OnceLock::new();
    static DAY_MONTH: OnceLock<Regex> = OnceLock::new();
    let numeric = NUMERIC.get_or_init(|| Regex::new(r"\b\d{1,2}\.\d{1,2}\.\d{2,4}").unwrap());
    let day_month = DAY_MONTH.get_or_init(|| {
        let months = MONTH_NAMES.join("|");
        Regex::new(&format!(r"\b\d{{1,2}}\.\s+({months})")).unwrap()
    });

    let mut spans: Vec<(usize, usize)> = Vec::new();
    for m in numeric.find_iter(text) {
        spans.push((m.start(), m.end()));
    }
    for m in day_month.find_iter(text) {
        spans.push((m.start(), m.end()));
    }
    spans
}

/// Split a document into sentence spans.
///
/// A boundary is a `.`, `!` or `?` followed by whitespace and a capital
/// letter, unless the punctuation closes a known abbreviation, belongs to a
/// date recognized beforehand, or is part of an ellipsis.
pub fn split_sentences(text: &str, abbreviations: &[String]) -> Vec<SentenceSpan> {
    let mut spans = Vec::new();
    if text.trim().is_empty() {
        return spans;
    }
    let protected = protected_spans(text);
    let bytes = text.as_bytes();
    let mut sentence_start = 0usize;

    let mut boundaries = Vec::new();
    for (idx, ch) in text.char_indices() {
        if ch != '.' && ch != '!' && ch != '?' {
            continue;
        }
        if protected.iter().any(|&(s, e)| idx >= s && idx < e) {
            continue;
        }
        // Ellipsis: part of a run of dots.
        let after_punct = idx + ch.len_utf8();
        if ch == '.'
            && ((idx > 0 && bytes[idx - 1] == b'.')
                || (after_punct < text.len() && bytes[after_punct] == b'.'))
        {
            continue;
        }
        if ch == '.' {
            let prefix = &text[..after_punct];
            if abbreviations
                .iter()
                .any(|abbr| prefix.ends_with(abbr.as_str()))
            {
                continue;
            }
        }
        // Whitespace followed by a capital letter.
        let rest = &text[after_punct..];
        let trimmed = rest.trim_start();
        if trimmed.len() == rest.len() {
            continue;
        }
        match trimmed.chars().next() {
            Some(next) if next.is_uppercase() => boundaries.push(after_punct),
            _ => continue,
        }
    }

    for boundary in boundaries {
        let slice = &text[sentence_start..boundary];
        if !slice.trim().is_empty() {
            spans.push(trim_span(text, sentence_start, boundary));
        }
        sentence_start = boundary;
    }
    if !text[sentence_start..].trim().is_empty() {
        spans.push(trim_span(text, sentence_start, text.len()));
    }
    spans
}

fn trim_span(text: &str, start: usize, end: usize) -> SentenceSpan {
    let slice = &text[start..end];
    let trimmed_start = start + (slice.len() - slice.trim_start().len());
    let trimmed_end = end - (slice.len() - slice.trim_end().len());
    SentenceSpan {
        start: trimmed_start,
        end: trimmed_end,
    }
}

const TRAILING_PUNCT: [char; 6] = ['.', ',', '!', '?', ';', ':'];

/// Tokenize one sentence: whitespace splitting plus separation of trailing
/// punctuation. Tokens containing hyphens or slashes are kept whole so that
/// entity candidates like `AB-789` or `1345/78` survive. Only surfaces and
/// spans are filled; tagging happens later.
pub fn tokenize(sentence_text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut offset = 0usize;
    for piece in sentence_text.split_whitespace() {
        let start = sentence_text[offset..]
            .find(piece)
            .map(|p| offset + p)
            .expect("piece comes from the text");
        offset = start + piece.len();

        // Peel trailing punctuation, each mark its own token, unless the
        // whole piece is punctuation (e.g. a literal ellipsis).
        let mut word_end = piece.len();
        let mut peeled = Vec::new();
        while let Some(ch) = piece[..word_end].chars().next_back() {
            if TRAILING_PUNCT.contains(&ch) && word_end > ch.len_utf8() {
                word_end -= ch.len_utf8();
                peeled.push((ch, word_end));
            } else {
                break;
            }
        }
        if word_end > 0 {
            tokens.push(Token::raw(&piece[..word_end], start));
        } else {
            // Pure punctuation piece: keep as a single token.
            tokens.push(Token::raw(piece, start));
            peeled.clear();
        }
        for (ch, rel) in peeled.into_iter().rev() {
            let mut buf = [0u8; 4];
            tokens.push(Token::raw(ch.encode_utf8(&mut buf), start + rel));
        }
    }
    tokens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abbrevs() -> Vec<String> {
        NeConfig::default().abbreviations
    }

    #[test]
    fn splits_at_period_before_capital() {
        let text = "Der Pkw kollidierte. Er verstarb.";
        let spans = split_sentences(text, &abbrevs());
        assert_eq!(spans.len(), 2);
        assert_eq!(&text[spans[0].start..spans[0].end], "Der Pkw kollidierte.");
        assert_eq!(&text[spans[1].start..spans[1].end], "Er verstarb.");
    }

    #[test]
    fn empty_text_yields_no_sentences() {
        assert!(split_sentences("", &abbrevs()).is_empty());
        assert!(split_sentences("   \n ", &abbrevs()).is_empty());
    }

    #[test]
    fn date_does_not_split() {
        let spans = split_sentences("Am 01.02.2003 verstarb er.", &abbrevs());
        assert_eq!(spans.len(), 1);
    }

    #[test]
    fn day_month_date_does_not_split() {
        let spans = split_sentences("Am 1. Februar 2003 verstarb er.", &abbrevs());
        assert_eq!(spans.len(), 1);
    }

    #[test]
    fn abbreviation_does_not_split() {
        let spans = split_sentences("Der Bericht Nr. Drei fehlt.", &abbrevs());
        assert_eq!(spans.len(), 1);
        let spans = split_sentences("Laut Dr. Sommer verstarb er.", &abbrevs());
        assert_eq!(spans.len(), 1);
    }

    #[test]
    fn tokenize_separates_trailing_punctuation() {
        let tokens = tokenize("mit dem PKW.");
        let surfaces: Vec<&str> = tokens.iter().map(|t| t.surface.as_str()).collect();
        assert_eq!(surfaces, vec!["mit", "dem", "PKW", "."]);
    }

    #[test]
    fn tokenize_keeps_entity_candidates_whole() {
        let tokens = tokenize("G 1345/78");
        let surfaces: Vec<&str> = tokens.iter().map(|t| t.surface.as_str()).collect();
        assert_eq!(surfaces, vec!["G", "1345/78"]);

        let tokens = tokenize("ABZ AB-789");
        let surfaces: Vec<&str> = tokens.iter().map(|t| t.surface.as_str()).collect();
        assert_eq!(surfaces, vec!["ABZ", "AB-789"]);

        let tokens = tokenize("3 Pkw");
        let surfaces: Vec<&str> = tokens.iter().map(|t| t.surface.as_str()).collect();
        assert_eq!(surfaces, vec!["3", "Pkw"]);
    }

    #[test]
    fn tokenize_is_lossless_over_spans() {
        let text = "Der Pkw Peugeot kollidierte, ABZ AB-789 stand am 01.02.2003.";
        let tokens = tokenize(text);
        let mut last_end = 0;
        let mut rebuilt = String::new();
        for token in &tokens {
            assert!(token.span.0 >= last_end);
            assert!(token.span.1 > token.span.0);
            assert_eq!(&text[token.span.0..token.span.1], token.surface);
            // Gaps between tokens are pure whitespace, so surfaces plus the
            // original whitespace reproduce the input exactly.
            let gap = &text[last_end..token.span.0];
            assert!(gap.chars().all(char::is_whitespace));
            rebuilt.push_str(gap);
            rebuilt.push_str(&token.surface);
            last_end = token.span.1;
        }
        rebuilt.push_str(&text[last_end..]);
        assert_eq!(rebuilt, text);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn spans_always_reproduce_surfaces(words in prop::collection::vec("[a-zA-Zäöüß0-9]{1,8}[.,!?]?", 1..10)) {
                let text = words.join(" ");
                for token in tokenize(&text) {
                    prop_assert_eq!(&text[token.span.0..token.span.1], token.surface.as_str());
                }
            }
        }
    }
}
