//! Bottom-up chart construction over pos tags and enumeration of maximal
//! coverings.

use std::collections::HashMap;

use crate::chunker::{
    admissible_chunk, assign_case, head_of_np, CaseTables, Chunk, ChunkKind, Covering, Grammar,
    Symbol,
};
use crate::textprep::{PosTag, Sentence};

/// Dotted-item chart over the sentence: `derivable[nt][i][j]` says whether
/// nonterminal `nt` derives tokens `i..j`.
struct Chart<'a> {
    grammar: &'a Grammar,
    nt_index: HashMap<&'a str, usize>,
    derivable: Vec<Vec<Vec<bool>>>,
    n: usize,
}

impl<'a> Chart<'a> {
    fn build(sentence: &Sentence, grammar: &'a Grammar) -> Chart<'a> {
        let n = sentence.tokens.len();
        let nonterminals = grammar.nonterminals();
        let nt_index: HashMap<&str, usize> = nonterminals
            .iter()
            .enumerate()
            .map(|(i, &name)| (name, i))
            .collect();
        let mut chart = Chart {
            grammar,
            nt_index,
            derivable: vec![vec![vec![false; n + 1]; n + 1]; nonterminals.len()],
            n,
        };
        let tags: Vec<PosTag> = sentence.tokens.iter().map(|t| t.pos).collect();

        for length in 1..=n {
            for start in 0..=(n - length) {
                let end = start + length;
                // Fixpoint over this cell: unit chains may need repeats.
                loop {
                    let mut changed = false;
                    for (name, &nt) in chart.nt_index.clone().iter() {
                        if chart.derivable[nt][start][end] {
                            continue;
                        }
                        let derivable = chart
                            .grammar
                            .rules_for(name)
                            .any(|rule| chart.matches(&rule.rhs, start, end, &tags));
                        if derivable {
                            chart.derivable[nt][start][end] = true;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                }
            }
        }
        chart
    }

    fn matches(&self, rhs: &[Symbol], start: usize, end: usize, tags: &[PosTag]) -> bool {
        match rhs.split_first() {
            None => start == end,
            Some((Symbol::Terminal(tag), rest)) => {
                start < end && tags[start] == *tag && self.matches(rest, start + 1, end, tags)
            }
            Some((Symbol::NonTerminal(name), rest)) => {
                let Some(&nt) = self.nt_index.get(name.as_str()) else {
                    return false;
                };
                (start + 1..=end)
                    .any(|mid| self.derivable[nt][start][mid] && self.matches(rest, mid, end, tags))
            }
        }
    }

    fn derives(&self, name: &str, start: usize, end: usize) -> bool {
        self.nt_index
            .get(name)
            .map(|&nt| self.derivable[nt][start][end])
            .unwrap_or(false)
    }
}

/// All case-valid chunk candidates of a sentence, sorted by span.
pub(crate) fn chunk_candidates(
    sentence: &Sentence,
    grammar: &Grammar,
    tables: &CaseTables,
) -> Vec<Chunk> {
    let chart = Chart::build(sentence, grammar);
    let mut chunks = Vec::new();
    for start in 0..chart.n {
        for end in (start + 1)..=chart.n {
            for (name, kind) in [("NP", ChunkKind::Np), ("PP", ChunkKind::Pp)] {
                if !chart.derives(name, start, end) {
                    continue;
                }
                if !admissible_chunk(kind, &sentence.tokens[start..end]) {
                    continue;
                }
                let Ok(assignment) = assign_case(kind, start..end, sentence, tables) else {
                    // Case clash: the candidate is discarded.
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

/// Parse a tagged sentence into all maximal coverings.
///
/// A covering is maximal when no further chunk fits into its gaps; every
/// derivable chunk therefore appears in at least one covering. Coverings
/// are ordered by descending covered tokens, then ascending chunk count,
/// then left-to-right span order. At least one covering is returned; a
/// sentence without chunks yields the all-unparsed covering.
pub fn parse_chunks(sentence: &Sentence, grammar: &Grammar, tables: &CaseTables) -> Vec<Covering> {
    let candidates = chunk_candidates(sentence, grammar, tables);
    let mut selections: Vec<Vec<usize>> = Vec::new();
    let mut selected: Vec<usize> = Vec::new();
    collect_maximal(&candidates, 0, &mut selected, &mut selections);

    let mut coverings: Vec<Covering> = selections
        .into_iter()
        .map(|selection| {
            let chunks: Vec<Chunk> = selection.iter().map(|&i| candidates[i].clone()).collect();
            let mut covered = vec![false; sentence.tokens.len()];
            for chunk in &chunks {
                for t in chunk.span.clone() {
                    covered[t] = true;
                }
            }
            let unparsed = (0..sentence.tokens.len())
                .filter(|&t| !covered[t])
                .collect();
            Covering { chunks, unparsed }
        })
        .collect();

    coverings.sort_by(|a, b| {
        b.covered_tokens()
            .cmp(&a.covered_tokens())
            .then(a.chunks.len().cmp(&b.chunks.len()))
            .then_with(|| covering_key(a).cmp(&covering_key(b)))
    });
    coverings.dedup();
    coverings
}

fn covering_key(covering: &Covering) -> Vec<(usize, usize, ChunkKind)> {
    covering
        .chunks
        .iter()
        .map(|c| (c.span.start, c.span.end, c.kind))
        .collect()
}

fn collect_maximal(
    chunks: &[Chunk],
    index: usize,
    selected: &mut Vec<usize>,
    results: &mut Vec<Vec<usize>>,
) {
    if index == chunks.len() {
        if is_maximal(chunks, selected) {
            results.push(selected.clone());
        }
        return;
    }
    let blocked = selected.iter().any(|&s| chunks[s].overlaps(&chunks[index]));
    if blocked {
        collect_maximal(chunks, index + 1, selected, results);
        return;
    }
    selected.push(index);
    collect_maximal(chunks, index + 1, selected, results);
    selected.pop();

    // Skipping a free chunk can only stay maximal when a later chunk may
    // still occupy (part of) its span.
    let skip_viable = chunks[index + 1..]
        .iter()
        .any(|later| later.overlaps(&chunks[index]));
    if skip_viable {
        collect_maximal(chunks, index + 1, selected, results);
    }
}

fn is_maximal(chunks: &[Chunk], selected: &[usize]) -> bool {
    // Nothing addable.
    for (i, chunk) in chunks.iter().enumerate() {
        if selected.contains(&i) {
            continue;
        }
        if !selected.iter().any(|&s| chunks[s].overlaps(chunk)) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chunker::default_grammar;
    use crate::lexres::{parse_lexicon, Lexicon};
    use crate::textprep::{recognize_nes, tag_pos, tokenize, NeConfig, SourceId};

    fn fixture_lexicon() -> Lexicon {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/lexicon.json");
        parse_lexicon(&std::fs::read_to_string(path).unwrap()).unwrap()
    }

    fn sentence(text: &str) -> Sentence {
        let lex = fixture_lexicon();
        let mut tokens = tokenize(text);
        tag_pos(&mut tokens, &lex);
        let tokens = recognize_nes(text, tokens, &NeConfig::default());
        Sentence {
            source: SourceId {
                doc: "test".into(),
                index: 0,
            },
            text: text.to_string(),
            tokens,
        }
    }

    fn best(text: &str) -> Covering {
        let coverings = parse_chunks(&sentence(text), &default_grammar(), &CaseTables::default());
        coverings.into_iter().next().unwrap()
    }

    #[test]
    fn simple_np_and_pp() {
        let s = sentence("sein LKW kollidierte mit dem PKW .");
        let covering = parse_chunks(&s, &default_grammar(), &CaseTables::default())
            .into_iter()
            .next()
            .unwrap();
        let rendered: Vec<(String, String)> = covering
            .chunks
            .iter()
            .map(|c| (c.kind.name().to_string(), c.surface(&s).to_string()))
            .collect();
        assert_eq!(
            rendered,
            vec![
                ("NP".to_string(), "sein LKW".to_string()),
                ("PP".to_string(), "mit dem PKW".to_string()),
            ]
        );
        // The verb and the final period stay unparsed.
        assert_eq!(covering.unparsed, vec![2, 6]);
    }

    #[test]
    fn verb_only_sentence_has_zero_chunks() {
        let coverings = parse_chunks(
            &sentence("kollidierte"),
            &default_grammar(),
            &CaseTables::default(),
        );
        assert_eq!(coverings.len(), 1);
        assert!(coverings[0].chunks.is_empty());
        assert_eq!(coverings[0].unparsed, vec![0]);
    }

    #[test]
    fn derives_the_reference_phrases() {
        let covering = best("der erste Hänger");
        assert_eq!(covering.chunks.len(), 1);
        assert_eq!(covering.chunks[0].kind, ChunkKind::Np);
        assert_eq!(covering.chunks[0].span, 0..3);

        let covering = best("3 Pkw");
        assert_eq!(covering.chunks.len(), 1);
        assert_eq!(covering.chunks[0].span, 0..2);
    }

    #[test]
    fn adjective_chains_inside_pps() {
        let s = sentence("mit der vorderen rechten Seite");
        let covering = parse_chunks(&s, &default_grammar(), &CaseTables::default())
            .into_iter()
            .next()
            .unwrap();
        assert_eq!(covering.chunks.len(), 1);
        let pp = &covering.chunks[0];
        assert_eq!(pp.kind, ChunkKind::Pp);
        assert_eq!(pp.span, 0..5);
        assert_eq!(pp.preposition.as_deref(), Some("mit"));
        assert_eq!(pp.head_index, 4);
    }

    #[test]
    fn contracted_preposition_chunk() {
        let s = sentence("am Montag");
        let covering = parse_chunks(&s, &default_grammar(), &CaseTables::default())
            .into_iter()
            .next()
            .unwrap();
        let pp = &covering.chunks[0];
        assert_eq!(pp.kind, ChunkKind::Pp);
        assert_eq!(pp.preposition.as_deref(), Some("an"));
        assert_eq!(pp.case_set.short(), "dat");
    }

    #[test]
    fn named_entity_apposition() {
        let s = sentence("Der Pkw Peugeot hingegen kollidierte frontal mit dem Pkw Renault .");
        let coverings = parse_chunks(&s, &default_grammar(), &CaseTables::default());
        let first = &coverings[0];
        let rendered: Vec<&str> = first.chunks.iter().map(|c| c.surface(&s)).collect();
        assert_eq!(rendered, vec!["Der Pkw Peugeot", "mit dem Pkw Renault"]);
    }

    #[test]
    fn covering_invariants_hold() {
        let s = sentence("Der Pkw Peugeot hingegen kollidierte frontal mit dem Pkw Renault .");
        for covering in parse_chunks(&s, &default_grammar(), &CaseTables::default()) {
            // Sorted, disjoint, and unparsed + covered partitions the range.
            let mut seen = vec![false; s.tokens.len()];
            let mut last_end = 0;
            for chunk in &covering.chunks {
                assert!(chunk.span.start >= last_end);
                last_end = chunk.span.end;
                for t in chunk.span.clone() {
                    assert!(!seen[t]);
                    seen[t] = true;
                }
                assert!(!chunk.case_set.is_empty());
                assert!(chunk.span.contains(&chunk.head_index));
                match chunk.kind {
                    ChunkKind::Pp => assert!(chunk.preposition.is_some()),
                    ChunkKind::Np => assert!(chunk.preposition.is_none()),
                }
            }
            for &t in &covering.unparsed {
                assert!(!seen[t]);
                seen[t] = true;
            }
            assert!(seen.iter().all(|&b| b));
        }
    }

    #[test]
    fn parse_is_deterministic() {
        let s = sentence("Der erste Hänger kollidierte vermutlich mit der vorderen rechten Seite mit einem Haus .");
        let grammar = default_grammar();
        let tables = CaseTables::default();
        let a = parse_chunks(&s, &grammar, &tables);
        let b = parse_chunks(&s, &grammar, &tables);
        assert_eq!(a, b);
    }

    #[test]
    fn chunk_set_matches_oracle_on_reference_sentences() {
        let grammar = default_grammar();
        let tables = CaseTables::default();
        for text in [
            "sein LKW kollidierte mit dem PKW .",
            "Der Pkw kollidierte mit 3 Begrenzungsstäben .",
            "Nachfolgend kollidierten 3 Pkw mit dem VW Golf .",
            "Am Montag kollidierte er mit einem Baum .",
        ] {
            let s = sentence(text);
            let coverings = parse_chunks(&s, &grammar, &tables);
            let mut from_parser: Vec<(ChunkKind, usize, usize)> = coverings
                .iter()
                .flat_map(|c| c.chunks.iter())
                .map(|c| (c.kind, c.span.start, c.span.end))
                .collect();
            from_parser.sort_unstable();
            from_parser.dedup();
            let mut from_oracle: Vec<(ChunkKind, usize, usize)> =
                crate::chunker::oracle::enumerate_chunks(&s, &grammar, &tables)
                    .into_iter()
                    .map(|c| (c.kind, c.span.start, c.span.end))
                    .collect();
            from_oracle.sort_unstable();
            assert_eq!(from_parser, from_oracle, "sentence: {text}");
        }
    }
}
