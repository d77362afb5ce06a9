//! Locating target verb occurrences, clause splitting, the verb scope
//! heuristic, and matching frame patterns against chunk coverings.

use std::ops::Range;

use crate::chunker::{Chunk, ChunkKind, Covering};
use crate::classify::classify_head;
use crate::framespec::{FramePattern, PhraseKind, SemanticRestriction};
use crate::lexres::Lexicon;
use crate::textprep::{NeClass, PosTag, Sentence, Token};

/// One occurrence of the target verb: sentence index within the corpus
/// plus the verb's token index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccurrenceId {
    pub sentence: usize,
    pub token: usize,
}

/// A clause segment. Boundaries are commas, the conjunction "und", and the
/// sentence edges; boundary tokens belong to no segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseSegment {
    pub span: Range<usize>,
    pub verb_index: Option<usize>,
}

/// How one frame element was filled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Binding {
    /// Index into the covering's chunk list.
    Chunk(usize),
    /// A token range (reflexive, expletive, zu-infinitive, adverb).
    Tokens(Range<usize>),
    Unfilled,
}

/// One consistent way of binding a pattern's elements in a clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateAssignment {
    pub verb_lemma: String,
    pub occurrence: OccurrenceId,
    pub covering_index: usize,
    /// Aligned with the pattern's elements.
    pub bindings: Vec<Binding>,
}

fn effective_lemma<'a>(token: &'a Token, lex: &'a Lexicon) -> Option<&'a str> {
    token
        .lemma
        .as_deref()
        .or_else(|| lex.lemma_of_form(&token.surface))
}

/// Every token whose lemma resolves to the target verb.
pub fn find_verb_occurrences(
    sentences: &[Sentence],
    lemma: &str,
    lex: &Lexicon,
) -> Vec<OccurrenceId> {
    let mut occurrences = Vec::new();
    for (sentence_index, sentence) in sentences.iter().enumerate() {
        for (token_index, token) in sentence.tokens.iter().enumerate() {
            if effective_lemma(token, lex) == Some(lemma) {
                occurrences.push(OccurrenceId {
                    sentence: sentence_index,
                    token: token_index,
                });
            }
        }
    }
    occurrences
}

fn is_boundary(token: &Token) -> bool {
    token.pos == PosTag::Comma
        || (token.pos == PosTag::Conjunction && token.surface.to_lowercase() == "und")
}

/// Cut a sentence at commas and the conjunction "und". Empty segments are
/// dropped; `verb_index` is set where a segment contains the target verb.
pub fn split_clauses(sentence: &Sentence, target: &str, lex: &Lexicon) -> Vec<ClauseSegment> {
    let mut segments = Vec::new();
    let mut start = 0usize;
    for (i, token) in sentence.tokens.iter().enumerate() {
        if is_boundary(token) {
            push_segment(sentence, start..i, target, lex, &mut segments);
            start = i + 1;
        }
    }
    push_segment(
        sentence,
        start..sentence.tokens.len(),
        target,
        lex,
        &mut segments,
    );
    segments
}

fn push_segment(
    sentence: &Sentence,
    span: Range<usize>,
    target: &str,
    lex: &Lexicon,
    segments: &mut Vec<ClauseSegment>,
) {
    // Trailing sentence punctuation alone does not make a segment.
    let meaningful = sentence.tokens[span.clone()]
        .iter()
        .any(|t| t.pos != PosTag::SentenceFinal);
    if span.is_empty() || !meaningful {
        return;
    }
    let verb_index = span
        .clone()
        .find(|&i| effective_lemma(&sentence.tokens[i], lex) == Some(target));
    segments.push(ClauseSegment { span, verb_index });
}

/// The segment containing a token index, if any.
pub fn segment_of(segments: &[ClauseSegment], token_index: usize) -> Option<usize> {
    segments.iter().position(|s| s.span.contains(&token_index))
}

fn chunk_in_span(chunk: &Chunk, span: &Range<usize>) -> bool {
    chunk.span.start >= span.start && chunk.span.end <= span.end
}

/// PP chunks within the nearest `window` chunks on either side of the verb,
/// nearest first. Distance is measured in chunks, not tokens.
pub fn select_in_scope_pps(
    segment: &ClauseSegment,
    covering: &Covering,
    verb_index: usize,
    window: usize,
) -> Vec<usize> {
    let segment_chunks: Vec<usize> = covering
        .chunks
        .iter()
        .enumerate()
        .filter(|(_, c)| chunk_in_span(c, &segment.span))
        .map(|(i, _)| i)
        .collect();
    let preceding: Vec<usize> = segment_chunks
        .iter()
        .copied()
        .filter(|&i| covering.chunks[i].span.end <= verb_index)
        .collect();
    let following: Vec<usize> = segment_chunks
        .iter()
        .copied()
        .filter(|&i| covering.chunks[i].span.start > verb_index)
        .collect();

    // (distance, textual position) for the `window` nearest on each side.
    let mut in_scope: Vec<(usize, usize, usize)> = Vec::new();
    for (distance, &chunk) in preceding.iter().rev().take(window).enumerate() {
        in_scope.push((distance + 1, covering.chunks[chunk].span.start, chunk));
    }
    for (distance, &chunk) in following.iter().take(window).enumerate() {
        in_scope.push((distance + 1, covering.chunks[chunk].span.start, chunk));
    }
    in_scope.sort_unstable();
    in_scope
        .into_iter()
        .filter(|&(_, _, i)| covering.chunks[i].kind == ChunkKind::Pp)
        .map(|(_, _, i)| i)
        .collect()
}

/// Where a frame is being matched: one verb occurrence inside its clause
/// segment of one sentence.
#[derive(Debug, Clone, Copy)]
pub struct ClauseContext<'a> {
    pub sentence: &'a Sentence,
    pub segments: &'a [ClauseSegment],
    pub segment_index: usize,
    pub occurrence: OccurrenceId,
    pub verb_lemma: &'a str,
}

impl<'a> ClauseContext<'a> {
    pub fn segment(&self) -> &'a ClauseSegment {
        &self.segments[self.segment_index]
    }
}

const REFLEXIVES: [&str; 5] = ["sich", "mich", "dich", "uns", "euch"];
const TEMPORAL_ADVERBS: [&str; 7] = [
    "heute", "gestern", "morgen", "dann", "danach", "damals", "montags",
];
const LOCAL_ADVERBS: [&str; 4] = ["dort", "hier", "dorthin", "daneben"];
const MANNER_ADVERBS: [&str; 5] = ["frontal", "schnell", "langsam", "heftig", "direkt"];

/// Frame matching against one clause segment of one covering.
pub struct Matcher<'a> {
    pub lex: &'a Lexicon,
    /// Scope window for PP elements, in chunks per side.
    pub window: usize,
}

impl<'a> Matcher<'a> {
    pub fn new(lex: &'a Lexicon) -> Matcher<'a> {
        Matcher { lex, window: 1 }
    }

    pub fn with_window(lex: &'a Lexicon, window: usize) -> Matcher<'a> {
        Matcher { lex, window }
    }

    /// All maximal consistent bindings of `pattern` for the verb occurrence
    /// inside its segment. An unbindable required element yields no
    /// assignment (which is not an error).
    pub fn match_frame(
        &self,
        pattern: &FramePattern,
        context: &ClauseContext<'_>,
        covering: &Covering,
        covering_index: usize,
    ) -> Vec<CandidateAssignment> {
        let sentence = context.sentence;
        let segment = context.segment();
        let verb_index = context.occurrence.token;

        let mut per_element: Vec<Vec<Binding>> = Vec::with_capacity(pattern.elements.len());
        for element in &pattern.elements {
            let candidates = match element.phrase_kind {
                PhraseKind::NounPhrase => self.noun_phrase_candidates(
                    element.required_case.expect("NP codes carry a case"),
                    context,
                    covering,
                ),
                PhraseKind::PrepositionalPhrase => {
                    select_in_scope_pps(segment, covering, verb_index, self.window)
                        .into_iter()
                        .map(Binding::Chunk)
                        .collect()
                }
                PhraseKind::AdverbialOrPp => self.adverbial_candidates(
                    element.semantic_restriction,
                    sentence,
                    segment,
                    covering,
                    verb_index,
                ),
                PhraseKind::Reflexive => token_candidates(sentence, segment, |t| {
                    t.pos == PosTag::Pronoun
                        && REFLEXIVES.contains(&t.surface.to_lowercase().as_str())
                }),
                PhraseKind::Expletive => token_candidates(sentence, segment, |t| {
                    t.pos == PosTag::Pronoun && t.surface.to_lowercase() == "es"
                }),
                PhraseKind::InfinitiveClause => self.zu_infinitive_candidates(sentence, segment),
            };
            per_element.push(candidates);
        }

        let mut assignments = Vec::new();
        let mut bindings: Vec<Binding> = Vec::with_capacity(pattern.elements.len());
        self.enumerate(pattern, &per_element, 0, &mut bindings, &mut assignments);

        assignments
            .into_iter()
            .map(|bindings| CandidateAssignment {
                verb_lemma: context.verb_lemma.to_string(),
                occurrence: context.occurrence,
                covering_index,
                bindings,
            })
            .collect()
    }

    fn enumerate(
        &self,
        pattern: &FramePattern,
        per_element: &[Vec<Binding>],
        element: usize,
        bindings: &mut Vec<Binding>,
        results: &mut Vec<Vec<Binding>>,
    ) {
        if element == per_element.len() {
            results.push(bindings.clone());
            return;
        }
        let candidates = &per_element[element];
        let mut bound_any = false;
        for candidate in candidates {
            if conflicts(candidate, bindings) {
                continue;
            }
            bound_any = true;
            bindings.push(candidate.clone());
            self.enumerate(pattern, per_element, element + 1, bindings, results);
            bindings.pop();
        }
        if !bound_any {
            // A maximal binding leaves an element unfilled only when it is
            // optional and has no free candidate.
            if pattern.elements[element].optional {
                bindings.push(Binding::Unfilled);
                self.enumerate(pattern, per_element, element + 1, bindings, results);
                bindings.pop();
            }
        }
    }

    fn noun_phrase_candidates(
        &self,
        required: crate::framespec::Case,
        context: &ClauseContext<'_>,
        covering: &Covering,
    ) -> Vec<Binding> {
        let segment = context.segment();
        let verb_index = context.occurrence.token;
        let compatible =
            |chunk: &Chunk| chunk.kind == ChunkKind::Np && chunk.case_set.contains(required);
        // Leftmost first among the compatible NPs in the verb's segment;
        // nothing distinguishes pre- and postverbal NPs here, so a
        // verb-first clause binds its postverbal subject naturally.
        let mut candidates: Vec<usize> = covering
            .chunks
            .iter()
            .enumerate()
            .filter(|(_, c)| chunk_in_span(c, &segment.span) && compatible(c))
            .map(|(i, _)| i)
            .collect();

        // Shared-subject coordination: a nominative slot with no candidate
        // in the verb's segment falls back to the nearest preceding NP of
        // the sentence (e.g. "soll er ... abgekommen sein und dort ...
        // kollidiert sein").
        if candidates.is_empty() && required == crate::framespec::Case::Nominative {
            for earlier in context.segments[..context.segment_index].iter().rev() {
                let mut from_segment: Vec<usize> = covering
                    .chunks
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| {
                        chunk_in_span(c, &earlier.span) && compatible(c) && c.span.end <= verb_index
                    })
                    .map(|(i, _)| i)
                    .collect();
                from_segment.reverse();
                if !from_segment.is_empty() {
                    candidates = from_segment;
                    break;
                }
            }
        }
        candidates.into_iter().map(Binding::Chunk).collect()
    }

    fn adverbial_candidates(
        &self,
        restriction: SemanticRestriction,
        sentence: &Sentence,
        segment: &ClauseSegment,
        covering: &Covering,
        verb_index: usize,
    ) -> Vec<Binding> {
        let mut candidates = Vec::new();
        for chunk_index in select_in_scope_pps(segment, covering, verb_index, self.window) {
            let head = &sentence.tokens[covering.chunks[chunk_index].head_index];
            if self.pp_matches_restriction(head, restriction) {
                candidates.push(Binding::Chunk(chunk_index));
            }
        }
        let adverb_words: &[&str] = match restriction {
            SemanticRestriction::Temporal => &TEMPORAL_ADVERBS,
            SemanticRestriction::Local => &LOCAL_ADVERBS,
            SemanticRestriction::Manner => &MANNER_ADVERBS,
            SemanticRestriction::None => &[],
        };
        for i in segment.span.clone() {
            let token = &sentence.tokens[i];
            if token.pos == PosTag::Adverb
                && adverb_words.contains(&token.surface.to_lowercase().as_str())
            {
                candidates.push(Binding::Tokens(i..i + 1));
            }
        }
        candidates
    }

    fn pp_matches_restriction(&self, head: &Token, restriction: SemanticRestriction) -> bool {
        let class = classify_head(head, self.lex);
        match restriction {
            SemanticRestriction::Temporal => {
                class.category == "time" || head.ne_class == Some(NeClass::Date)
            }
            SemanticRestriction::Local => {
                class.category == "location" || head.ne_class == Some(NeClass::LocationName)
            }
            // Manner is semantically unmarked; temporal and local heads are
            // excluded so adjuncts do not pose as manner complements.
            SemanticRestriction::Manner => class.category != "time" && class.category != "location",
            SemanticRestriction::None => true,
        }
    }

    fn zu_infinitive_candidates(
        &self,
        sentence: &Sentence,
        segment: &ClauseSegment,
    ) -> Vec<Binding> {
        let mut candidates = Vec::new();
        let span = segment.span.clone();
        for i in span.start..span.end.saturating_sub(1) {
            let zu = &sentence.tokens[i];
            let verb = &sentence.tokens[i + 1];
            if zu.surface.to_lowercase() == "zu"
                && matches!(verb.pos, PosTag::VerbOther | PosTag::VerbFinite)
            {
                candidates.push(Binding::Tokens(i..i + 2));
            }
        }
        candidates
    }

    /// Keep the coverings for which the pattern has at least one
    /// assignment, preserving order.
    pub fn filter_coverings(
        &self,
        coverings: &[Covering],
        pattern: &FramePattern,
        context: &ClauseContext<'_>,
    ) -> Vec<usize> {
        coverings
            .iter()
            .enumerate()
            .filter(|(i, covering)| !self.match_frame(pattern, context, covering, *i).is_empty())
            .map(|(i, _)| i)
            .collect()
    }
}

fn token_candidates(
    sentence: &Sentence,
    segment: &ClauseSegment,
    accept: impl Fn(&Token) -> bool,
) -> Vec<Binding> {
    segment
        .span
        .clone()
        .filter(|&i| accept(&sentence.tokens[i]))
        .map(|i| Binding::Tokens(i..i + 1))
        .collect()
}

fn conflicts(candidate: &Binding, bound: &[Binding]) -> bool {
    for existing in bound {
        match (candidate, existing) {
            (Binding::Chunk(a), Binding::Chunk(b)) if a == b => return true,
            (Binding::Tokens(a), Binding::Tokens(b)) if a.start < b.end && b.start < a.end => {
                return true
            }
            _ => {}
        }
    }
    false
}
