//! Reference enumeration of derivable chunks, used by the test suites to
//! cross-check the chart parser.
//!
//! This is a deliberately naive recursive recognizer over every span and
//! rule split. It shares nothing with the chart construction in
//! [`super::parse`].

use crate::chunker::{
    admissible_chunk, assign_case, head_of_np, CaseTables, Chunk, ChunkKind, Grammar, Symbol,
};
use crate::textprep::Sentence;

fn derives_symbol(
    sentence: &Sentence,
    grammar: &Grammar,
    symbol: &Symbol,
    start: usize,
    end: usize,
    active: &mut Vec<(String, usize, usize)>,
) -> bool {
    match symbol {
        Symbol::Terminal(tag) => end - start == 1 && sentence.tokens[start].pos == *tag,
        Symbol::NonTerminal(name) => {
            let key = (name.clone(), start, end);
            if active.contains(&key) {
                return false;
            }
            active.push(key);
            let result = grammar
                .rules_for(name)
                .any(|rule| derives_sequence(sentence, grammar, &rule.rhs, start, end, active));
            active.pop();
            result
        }
    }
}

fn derives_sequence(
    sentence: &Sentence,
    grammar: &Grammar,
    rhs: &[Symbol],
    start: usize,
    end: usize,
    active: &mut Vec<(String, usize, usize)>,
) -> bool {
    match rhs.split_first() {
        None => start == end,
        Some((first, rest)) => (start + 1..=end).any(|mid| {
            derives_symbol(sentence, grammar, first, start, mid, active)
                && derives_sequence(sentence, grammar, rest, mid, end, active)
        }),
    }
}

/// Every case-valid NP/PP chunk derivable over any span, sorted by span.
pub fn enumerate_chunks(sentence: &Sentence, grammar: &Grammar, tables: &CaseTables) -> Vec<Chunk> {
    let n = sentence.tokens.len();
    let mut chunks = Vec::new();
    for start in 0..n {
        for end in (start + 1)..=n {
            for (name, kind) in [("NP", ChunkKind::Np), ("PP", ChunkKind::Pp)] {
                let symbol = Symbol::NonTerminal(name.to_string());
                let mut active = Vec::new();
                if !derives_symbol(sentence, grammar, &symbol, start, end, &mut active) {
                    continue;
                }
                if !admissible_chunk(kind, &sentence.tokens[start..end]) {
                    continue;
                }
                let Ok(assignment) = assign_case(kind, start..end, sentence, tables) else {
                    continue;
                };
                let head_index = match kind {
                    ChunkKind::Np => head_of_np(&sentence.tokens[start..end], start),
                    ChunkKind::Pp => {
                        if end - start > 1 {
                            head_of_np(&sentence.tokens[start + 1..end], start + 1)
                        } else {
                            start
                        }
                    }
                };
                chunks.push(Chunk {
                    kind,
                    span: start..end,
                    head_index,
                    case_set: assignment.case_set,
                    preposition: assignment.preposition,
                    determiner: assignment.determiner,
                });
            }
        }
    }
    chunks.sort_by_key(|c| (c.span.start, c.span.end, c.kind));
    chunks
}
