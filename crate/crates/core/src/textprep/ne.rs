//! Rule- and gazetteer-based named entity recognition.
//!
//! Registration numbers (`G 1345/78`), licence plates (`ABZ AB-789`), dates
//! and gazetteer names (vehicles, locations, persons) are merged into single
//! tokens carrying their entity class.

use std::sync::OnceLock;

use regex::Regex;
use serde::Deserialize;

use crate::textprep::{NeClass, PosTag, Token, MONTH_NAMES};

/// Gazetteers and splitter abbreviations. Corpus-specific inventories are
/// supplied as configuration, not code.
#[derive(Debug, Clone, Deserialize)]
#[serde(default)]
pub struct NeConfig {
    pub abbreviations: Vec<String>,
    pub vehicles: Vec<String>,
    pub locations: Vec<String>,
    pub persons: Vec<String>,
}

impl Default for NeConfig {
    fn default() -> Self {
        let list = |items: &[&str]| items.iter().map(|s| s.to_string()).collect();
        NeConfig {
            abbreviations: list(&["Nr.", "z.B.", "ca.", "Dr."]),
            vehicles: list(&["VW", "Peugeot", "Renault", "Opel"]),
            locations: list(&["A 9"]),
            persons: vec![],
        }
    }
}

impl NeConfig {
    pub fn from_json(text: &str) -> Result<NeConfig, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn digits_slash() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^\d+/\d+$").unwrap())
}

fn plate_tail() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^[A-ZÄÖÜ]{1,2}-\d+$").unwrap())
}

fn numeric_date() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^\d{1,2}\.\d{1,2}\.\d{2,4}$").unwrap())
}

fn day_number() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^\d{1,2}$").unwrap())
}

fn year_number() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^\d{4}$").unwrap())
}

fn is_upper_letters(s: &str, min: usize, max: usize) -> bool {
    let count = s.chars().count();
    count >= min && count <= max && s.chars().all(|c| c.is_uppercase() && c.is_alphabetic())
}

#[derive(Debug, Clone, Copy)]
struct Match {
    len: usize,
    class: NeClass,
    priority: u8,
}

/// Gazetteer entries are matched as token sequences, so multi-word names
/// like `A 9` or `Opel Frontera` work out of the box.
fn gazetteer_match(tokens: &[Token], at: usize, entry: &str) -> Option<usize> {
    let parts: Vec<&str> = entry.split_whitespace().collect();
    if parts.is_empty() || at + parts.len() > tokens.len() {
        return None;
    }
    for (offset, part) in parts.iter().enumerate() {
        if tokens[at + offset].surface != *part {
            return None;
        }
    }
    Some(parts.len())
}

fn match_at(tokens: &[Token], at: usize, config: &NeConfig) -> Option<Match> {
    let mut candidates: Vec<Match> = Vec::new();
    let token = &tokens[at];

    // Registration number: single capital letter, then digits/digits.
    if is_upper_letters(&token.surface, 1, 1)
        && at + 1 < tokens.len()
        && digits_slash().is_match(&tokens[at + 1].surface)
    {
        candidates.push(Match {
            len: 2,
            class: NeClass::RegistrationNumber,
            priority: 0,
        });
    }

    // Licence plate: 1-3 capitals, then 1-2 capitals, hyphen, digits.
    if is_upper_letters(&token.surface, 1, 3)
        && at + 1 < tokens.len()
        && plate_tail().is_match(&tokens[at + 1].surface)
    {
        candidates.push(Match {
            len: 2,
            class: NeClass::LicencePlate,
            priority: 1,
        });
    }

    // Dates: dd.mm.yyyy in one token, or day, dot, month name, optional year.
    if numeric_date().is_match(&token.surface) {
        candidates.push(Match {
            len: 1,
            class: NeClass::Date,
            priority: 2,
        });
    }
    if day_number().is_match(&token.surface)
        && at + 2 < tokens.len()
        && tokens[at + 1].surface == "."
        && MONTH_NAMES.contains(&tokens[at + 2].surface.as_str())
    {
        let len = if at + 3 < tokens.len() && year_number().is_match(&tokens[at + 3].surface) {
            4
        } else {
            3
        };
        candidates.push(Match {
            len,
            class: NeClass::Date,
            priority: 2,
        });
    }

    for (entries, class, priority) in [
        (&config.vehicles, NeClass::VehicleName, 3u8),
        (&config.locations, NeClass::LocationName, 4u8),
        (&config.persons, NeClass::PersonName, 5u8),
    ] {
        for entry in entries {
            if let Some(mut len) = gazetteer_match(tokens, at, entry) {
                // A vehicle make extends over a following capitalized model
                // word: "Opel Frontera", "VW Golf".
                if class == NeClass::VehicleName && at + len < tokens.len() {
                    let next = &tokens[at + len];
                    let capitalized = next
                        .surface
                        .chars()
                        .next()
                        .map(|c| c.is_uppercase() && c.is_alphabetic())
                        .unwrap_or(false);
                    if capitalized
                        && next.ne_class.is_none()
                        && matches!(next.pos, PosTag::Noun | PosTag::ProperNoun)
                    {
                        len += 1;
                    }
                }
                candidates.push(Match {
                    len,
                    class,
                    priority,
                });
            }
        }
    }

    candidates
        .into_iter()
        .max_by(|a, b| a.len.cmp(&b.len).then(b.priority.cmp(&a.priority)))
}

/// Merge recognized entity spans into single tokens with `ne_class` set.
/// Longest match wins at every position; scanning resumes after a match.
pub fn recognize_nes(text: &str, tokens: Vec<Token>, config: &NeConfig) -> Vec<Token> {
    let mut result: Vec<Token> = Vec::with_capacity(tokens.len());
    let mut i = 0;
    while i < tokens.len() {
        match match_at(&tokens, i, config) {
            Some(m) => {
                let start = tokens[i].span.0;
                let end = tokens[i + m.len - 1].span.1;
                result.push(Token {
                    surface: text[start..end].to_string(),
                    pos: if m.class == NeClass::Date {
                        PosTag::Noun
                    } else {
                        PosTag::ProperNoun
                    },
                    lemma: None,
                    ne_class: Some(m.class),
                    span: (start, end),
                });
                i += m.len;
            }
            None => {
                result.push(tokens[i].clone());
                i += 1;
            }
        }
    }
    result
}
