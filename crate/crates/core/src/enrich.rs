//! Aggregation of candidate assignments into preposition statistics and
//! semantic filler profiles, and assembly of the enriched verb frame.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chunker::{CaseTables, Chunk, Covering};
use crate::classify::{classify_head, FillerKind, HeadClass, UNKNOWN_CATEGORY};
use crate::framespec::{Case, CodeBase, FramePattern, PhraseKind};
use crate::lexres::Lexicon;
use crate::matcher::{Binding, CandidateAssignment, OccurrenceId};
use crate::textprep::{NeClass, Sentence};

/// The matching result for one verb occurrence: the accepted covering, the
/// PPs in scope, and every consistent assignment of the pattern.
#[derive(Debug, Clone)]
pub struct OccurrenceMatch {
    pub occurrence: OccurrenceId,
    pub covering: Covering,
    /// Chunk indices into `covering`, nearest to the verb first.
    pub in_scope_pps: Vec<usize>,
    pub assignments: Vec<CandidateAssignment>,
}

/// Preposition occurrence counts for one verb.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrepositionStats {
    pub verb_lemma: String,
    pub counts: BTreeMap<String, u32>,
    /// Unambiguous case observations per preposition.
    pub case_counts: BTreeMap<String, BTreeMap<Case, u32>>,
    pub total_occurrences: u32,
}

/// One classified filler.
#[derive(Debug, Clone)]
pub struct FillerObservation {
    pub element: usize,
    pub surface: String,
    pub kind: FillerKind,
    pub synset: Option<String>,
    pub category: String,
}

/// Histogram of filler categories plus the hypernym generalization.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SemanticProfile {
    pub per_category: BTreeMap<String, u32>,
    pub generalization: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantPreposition {
    pub preposition: String,
    pub case: Option<Case>,
    pub count: u32,
    /// All prepositions sharing the maximal count when there is a tie.
    pub ties: Vec<String>,
}

/// Is this PP a local or temporal adjunct with respect to the pattern?
///
/// Local and temporal PPs are adjuncts unless the pattern demands them
/// through an explicit BL or BT element. Unresolvable heads resolve to
/// `false` (kept) and are flagged in the report.
pub fn is_adjunct_pp(
    chunk: &Chunk,
    sentence: &Sentence,
    pattern: &FramePattern,
    lex: &Lexicon,
) -> bool {
    let head = &sentence.tokens[chunk.head_index];
    let class = classify_head(head, lex);
    let temporal = class.category == "time" || head.ne_class == Some(NeClass::Date);
    if temporal {
        return !pattern.contains(CodeBase::Bt);
    }
    let local = class.category == "location" || head.ne_class == Some(NeClass::LocationName);
    if local {
        return !pattern.contains(CodeBase::Bl);
    }
    false
}

/// Count the preposition of every distinct in-scope PP, once per verb
/// occurrence, excluding adjuncts when `filter` is on. Contracted forms
/// count under their expanded lemma with their fixed case.
pub fn count_prepositions(
    matches: &[OccurrenceMatch],
    sentences: &[Sentence],
    verb_lemma: &str,
    pattern: &FramePattern,
    lex: &Lexicon,
    filter: bool,
    occurrences_examined: u32,
) -> PrepositionStats {
    let mut stats = PrepositionStats {
        verb_lemma: verb_lemma.to_string(),
        counts: BTreeMap::new(),
        case_counts: BTreeMap::new(),
        total_occurrences: occurrences_examined,
    };
    for m in matches {
        let sentence = &sentences[m.occurrence.sentence];
        for &pp in &m.in_scope_pps {
            let chunk = &m.covering.chunks[pp];
            if filter && is_adjunct_pp(chunk, sentence, pattern, lex) {
                continue;
            }
            let prep = chunk
                .preposition
                .clone()
                .expect("PP chunks carry a preposition");
            *stats.counts.entry(prep.clone()).or_insert(0) += 1;
            let cases: Vec<Case> = chunk.case_set.iter().collect();
            if let [case] = cases[..] {
                *stats
                    .case_counts
                    .entry(prep)
                    .or_default()
                    .entry(case)
                    .or_insert(0) += 1;
            }
        }
    }
    stats
}

/// The preposition with the highest frequency, its case, and any ties.
/// Ties are resolved lexicographically and reported explicitly.
pub fn select_dominant_preposition(
    stats: &PrepositionStats,
    tables: &CaseTables,
) -> Option<DominantPreposition> {
    let max = stats.counts.values().copied().max()?;
    let tied: Vec<String> = stats
        .counts
        .iter()
        .filter(|(_, &count)| count == max)
        .map(|(prep, _)| prep.clone())
        .collect();
    let preposition = tied[0].clone();

    // The case observed most often among this preposition's PPs; when
    // nothing unambiguous was observed, the smallest governed case.
    let observed = stats.case_counts.get(&preposition).and_then(|cases| {
        Case::ALL
            .into_iter()
            .filter_map(|c| cases.get(&c).map(|&n| (n, c)))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, c)| c)
    });
    let case = observed.or_else(|| {
        let governed = tables.governed_cases(&preposition);
        if governed == crate::chunker::CaseSet::FULL {
            None
        } else {
            governed.iter().next()
        }
    });

    Some(DominantPreposition {
        preposition,
        case,
        count: max,
        ties: if tied.len() > 1 { tied } else { Vec::new() },
    })
}

fn observation_from_class(element: usize, surface: String, class: HeadClass) -> FillerObservation {
    FillerObservation {
        element,
        surface,
        kind: class.kind,
        synset: class.synset,
        category: class.category,
    }
}

/// Classify a bound chunk into a filler observation. Token bindings
/// (reflexives, expletives, adverbs, infinitives) carry no classifiable
/// head and yield `None`.
pub fn classify_filler(
    binding: &Binding,
    element: usize,
    sentence: &Sentence,
    covering: &Covering,
    lex: &Lexicon,
) -> Option<FillerObservation> {
    match binding {
        Binding::Chunk(i) => {
            let chunk = &covering.chunks[*i];
            let head = &sentence.tokens[chunk.head_index];
            let class = classify_head(head, lex);
            Some(observation_from_class(
                element,
                chunk.surface(sentence).to_string(),
                class,
            ))
        }
        _ => None,
    }
}

/// Histogram plus generalization: the lowest common hypernym over the
/// distinct observed synsets, present only when at least two distinct
/// synsets were observed and they share an ancestor.
pub fn generalize_categories(observations: &[FillerObservation], lex: &Lexicon) -> SemanticProfile {
    let mut profile = SemanticProfile::default();
    for obs in observations {
        *profile
            .per_category
            .entry(obs.category.clone())
            .or_insert(0) += 1;
    }
    let synsets: BTreeSet<&str> = observations
        .iter()
        .filter_map(|o| o.synset.as_deref())
        .collect();
    if synsets.len() >= 2 {
        let ids: Vec<&str> = synsets.into_iter().collect();
        profile.generalization = lex.lowest_common_hypernym(&ids).ok().flatten();
    }
    profile
}

/// Options controlling the enrichment stage.
#[derive(Debug, Clone)]
pub struct EnrichOptions {
    pub adjunct_filter: bool,
    pub min_evidence: u32,
}

impl Default for EnrichOptions {
    fn default() -> Self {
        EnrichOptions {
            adjunct_filter: true,
            min_evidence: 1,
        }
    }
}

/// One frame element in the report.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ElementReport {
    pub code: String,
    pub phrase_form: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preposition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub categories: BTreeMap<String, u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generalization: Option<String>,
    pub evidence: u32,
    pub fillers: Vec<String>,
}

/// The enriched verb frame, one per (verb, pattern) pair.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct EnrichedFrame {
    pub verb: String,
    pub pattern: String,
    pub occurrences_examined: u32,
    pub elements: Vec<ElementReport>,
    pub preposition_counts: BTreeMap<String, u32>,
    pub warnings: Vec<String>,
}

impl EnrichedFrame {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned-column text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "verb: {}    pattern: {}    occurrences: {}\n",
            self.verb, self.pattern, self.occurrences_examined
        ));
        if !self.preposition_counts.is_empty() {
            let rendered: Vec<String> = self
                .preposition_counts
                .iter()
                .map(|(p, n)| format!("{p}:{n}"))
                .collect();
            out.push_str(&format!("prepositions: {}\n", rendered.join(" ")));
        }
        out.push_str(&format!(
            "{:<6} {:<22} {:<12} {:<12} {:<9} {}\n",
            "code", "form", "preposition", "case", "evidence", "categories"
        ));
        for element in &self.elements {
            let categories: Vec<String> = element
                .categories
                .iter()
                .map(|(c, n)| format!("{c}:{n}"))
                .collect();
            let mut categories = categories.join(" ");
            if let Some(generalization) = &element.generalization {
                categories.push_str(&format!(" => {generalization}"));
            }
            out.push_str(&format!(
                "{:<6} {:<22} {:<12} {:<12} {:<9} {}\n",
                element.code,
                element.phrase_form,
                element.preposition.as_deref().unwrap_or("-"),
                element.case.as_deref().unwrap_or("-"),
                element.evidence,
                categories
            ));
            if !element.fillers.is_empty() {
                out.push_str(&format!(
                    "       fillers: {}\n",
                    element.fillers.join(" | ")
                ));
            }
        }
        for warning in &self.warnings {
            out.push_str(&format!("warning: {warning}\n"));
        }
        out
    }
}

/// Assemble the enriched frame for one verb and one pattern.
///
/// NP elements take the case of their code and the profile of one binding
/// per occurrence. PP elements take the dominant preposition, its case, and
/// the profile of the counted PPs headed by that preposition. Elements
/// without evidence are emitted with evidence 0.
#[allow(clippy::too_many_arguments)]
pub fn build_enriched_frame(
    verb: &str,
    pattern: &FramePattern,
    matches: &[OccurrenceMatch],
    sentences: &[Sentence],
    occurrences_examined: u32,
    lex: &Lexicon,
    tables: &CaseTables,
    options: &EnrichOptions,
) -> EnrichedFrame {
    let stats = count_prepositions(
        matches,
        sentences,
        verb,
        pattern,
        lex,
        options.adjunct_filter,
        occurrences_examined,
    );
    let dominant = select_dominant_preposition(&stats, tables);
    let mut warnings: Vec<String> = Vec::new();

    if let Some(d) = &dominant {
        if !d.ties.is_empty() {
            warnings.push(format!(
                "dominant preposition tie between {}; chose {:?}",
                d.ties.join(", "),
                d.preposition
            ));
        }
    }

    let mut elements = Vec::with_capacity(pattern.elements.len());
    for (index, code) in pattern.elements.iter().enumerate() {
        let mut observations: Vec<FillerObservation> = Vec::new();
        let mut fillers: Vec<String> = Vec::new();
        let mut evidence: u32 = 0;
        let mut preposition = None;
        let mut case = code.required_case.map(|c| c.name().to_string());

        match code.phrase_kind {
            PhraseKind::PrepositionalPhrase => {
                if let Some(d) = &dominant {
                    preposition = Some(d.preposition.clone());
                    case = d.case.map(|c| c.name().to_string());
                    for m in matches {
                        let sentence = &sentences[m.occurrence.sentence];
                        for &pp in &m.in_scope_pps {
                            let chunk = &m.covering.chunks[pp];
                            if chunk.preposition.as_deref() != Some(d.preposition.as_str()) {
                                continue;
                            }
                            if options.adjunct_filter
                                && is_adjunct_pp(chunk, sentence, pattern, lex)
                            {
                                continue;
                            }
                            let head = &sentence.tokens[chunk.head_index];
                            let class = classify_head(head, lex);
                            let surface = chunk.surface(sentence).to_string();
                            fillers.push(surface.clone());
                            observations.push(observation_from_class(index, surface, class));
                            evidence += 1;
                        }
                    }
                }
            }
            PhraseKind::NounPhrase | PhraseKind::AdverbialOrPp => {
                // One binding per occurrence: the preferred assignment.
                for m in matches {
                    let sentence = &sentences[m.occurrence.sentence];
                    let Some(assignment) = m.assignments.first() else {
                        continue;
                    };
                    match &assignment.bindings[index] {
                        Binding::Chunk(_) => {
                            let obs = classify_filler(
                                &assignment.bindings[index],
                                index,
                                sentence,
                                &m.covering,
                                lex,
                            )
                            .expect("chunk bindings classify");
                            fillers.push(obs.surface.clone());
                            observations.push(obs);
                            evidence += 1;
                        }
                        Binding::Tokens(range) => {
                            let start = sentence.tokens[range.start].span.0;
                            let end = sentence.tokens[range.end - 1].span.1;
                            fillers.push(sentence.text[start..end].to_string());
                            evidence += 1;
                        }
                        Binding::Unfilled => {}
                    }
                }
            }
            PhraseKind::Reflexive | PhraseKind::Expletive | PhraseKind::InfinitiveClause => {
                for m in matches {
                    let sentence = &sentences[m.occurrence.sentence];
                    let Some(assignment) = m.assignments.first() else {
                        continue;
                    };
                    if let Binding::Tokens(range) = &assignment.bindings[index] {
                        let start = sentence.tokens[range.start].span.0;
                        let end = sentence.tokens[range.end - 1].span.1;
                        fillers.push(sentence.text[start..end].to_string());
                        evidence += 1;
                    }
                }
            }
        }

        for obs in &observations {
            if obs.category == UNKNOWN_CATEGORY {
                warnings.push(format!(
                    "unresolved filler head in {:?} (element {})",
                    obs.surface,
                    code.spelling()
                ));
            }
        }
        if evidence < options.min_evidence {
            warnings.push(format!(
                "element {} has insufficient evidence ({evidence} < {})",
                code.spelling(),
                options.min_evidence
            ));
        }

        let profile = generalize_categories(&observations, lex);
        elements.push(ElementReport {
            code: code.spelling(),
            phrase_form: code.phrase_kind.name().to_string(),
            preposition,
            case,
            categories: profile.per_category,
            generalization: profile.generalization,
            evidence,
            fillers,
        });
    }

    EnrichedFrame {
        verb: verb.to_string(),
        pattern: pattern.raw.clone(),
        occurrences_examined,
        elements,
        preposition_counts: stats.counts,
        warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framespec::parse_frame;
    use crate::lexres::parse_lexicon;

    fn fixture_lexicon() -> Lexicon {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/lexicon.json");
        parse_lexicon(&std::fs::read_to_string(path).unwrap()).unwrap()
    }

    fn observation(category: &str, synset: Option<&str>) -> FillerObservation {
        FillerObservation {
            element: 0,
            surface: String::new(),
            kind: FillerKind::CommonNoun,
            synset: synset.map(|s| s.to_string()),
            category: category.to_string(),
        }
    }

    #[test]
    fn dominant_preposition_from_reference_counts() {
        let mut stats = PrepositionStats {
            verb_lemma: "kollidieren".into(),
            counts: BTreeMap::new(),
            case_counts: BTreeMap::new(),
            total_occurrences: 34,
        };
        for (prep, count) in [
            ("mit", 27),
            ("nach", 5),
            ("beim", 2),
            ("am", 2),
            ("als", 2),
            ("in", 1),
        ] {
            stats.counts.insert(prep.to_string(), count);
        }
        let dominant = select_dominant_preposition(&stats, &CaseTables::default()).unwrap();
        assert_eq!(dominant.preposition, "mit");
        assert_eq!(dominant.count, 27);
        assert_eq!(dominant.case, Some(Case::Dative));
        assert!(dominant.ties.is_empty());
    }

    #[test]
    fn empty_stats_have_no_dominant() {
        let stats = PrepositionStats {
            verb_lemma: "kollidieren".into(),
            counts: BTreeMap::new(),
            case_counts: BTreeMap::new(),
            total_occurrences: 0,
        };
        assert!(select_dominant_preposition(&stats, &CaseTables::default()).is_none());
    }

    #[test]
    fn ties_are_reported_lexicographically() {
        let mut stats = PrepositionStats {
            verb_lemma: "x".into(),
            counts: BTreeMap::new(),
            case_counts: BTreeMap::new(),
            total_occurrences: 6,
        };
        stats.counts.insert("auf".into(), 3);
        stats.counts.insert("an".into(), 3);
        let dominant = select_dominant_preposition(&stats, &CaseTables::default()).unwrap();
        assert_eq!(dominant.preposition, "an");
        assert_eq!(dominant.ties, vec!["an".to_string(), "auf".to_string()]);
    }

    #[test]
    fn generalization_of_person_and_vehicle_is_the_traffic_participant() {
        let lex = fixture_lexicon();
        // 18 person observations (pronouns, registration numbers, a name)
        // and 16 vehicles.
        let mut observations = Vec::new();
        for _ in 0..18 {
            observations.push(observation("person", Some("fahrer-1")));
        }
        for _ in 0..16 {
            observations.push(observation("vehicle", Some("pkw-1")));
        }
        let profile = generalize_categories(&observations, &lex);
        assert_eq!(profile.per_category["person"], 18);
        assert_eq!(profile.per_category["vehicle"], 16);
        assert_eq!(
            profile.generalization.as_deref(),
            Some("verkehrsteilnehmer-1")
        );
    }

    #[test]
    fn single_observation_has_no_generalization() {
        let lex = fixture_lexicon();
        let profile = generalize_categories(&[observation("vehicle", Some("pkw-1"))], &lex);
        assert_eq!(profile.per_category.len(), 1);
        assert!(profile.generalization.is_none());
    }

    #[test]
    fn collide_pp_fillers_generalize_to_the_solid_object() {
        let lex = fixture_lexicon();
        // PKW, Baum, Mercedes (a vehicle entity), Mittelleitplanke,
        // Verkehrsschild.
        let observations = vec![
            observation("vehicle", Some("pkw-1")),
            observation("solid-object", Some("baum-1")),
            observation("vehicle", Some("fahrzeug-1")),
            observation("solid-object", Some("mittelleitplanke-1")),
            observation("solid-object", Some("verkehrsschild-1")),
        ];
        let profile = generalize_categories(&observations, &lex);
        assert_eq!(profile.generalization.as_deref(), Some("objekt-1"));
    }

    #[test]
    fn profile_counts_are_conserved() {
        let lex = fixture_lexicon();
        let observations = vec![
            observation("vehicle", Some("pkw-1")),
            observation("vehicle", Some("lkw-1")),
            observation("person", Some("fahrer-1")),
            observation(UNKNOWN_CATEGORY, None),
        ];
        let profile = generalize_categories(&observations, &lex);
        let total: u32 = profile.per_category.values().sum();
        assert_eq!(total as usize, observations.len());
    }

    fn tagged_sentence(lex: &Lexicon, text: &str) -> Sentence {
        use crate::textprep::{recognize_nes, tag_pos, tokenize, NeConfig, SourceId};
        let mut tokens = tokenize(text);
        tag_pos(&mut tokens, lex);
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

    fn match_of(lex: &Lexicon, text: &str) -> (Vec<Sentence>, Vec<OccurrenceMatch>) {
        use crate::chunker::{default_grammar, parse_chunks};
        let s = tagged_sentence(lex, text);
        let covering = parse_chunks(&s, &default_grammar(), &CaseTables::default())
            .into_iter()
            .next()
            .unwrap();
        let in_scope: Vec<usize> = (0..covering.chunks.len())
            .filter(|&i| covering.chunks[i].kind == crate::chunker::ChunkKind::Pp)
            .collect();
        let matches = vec![OccurrenceMatch {
            occurrence: OccurrenceId {
                sentence: 0,
                token: 0,
            },
            covering,
            in_scope_pps: in_scope,
            assignments: Vec::new(),
        }];
        (vec![s], matches)
    }

    #[test]
    fn adjunct_rule_respects_bt_and_bl() {
        let lex = fixture_lexicon();
        let s = tagged_sentence(&lex, "am Montag mit dem PKW in der Stadt");
        use crate::chunker::{default_grammar, parse_chunks};
        let covering = parse_chunks(&s, &default_grammar(), &CaseTables::default())
            .into_iter()
            .next()
            .unwrap();
        let pp = |prep: &str| {
            covering
                .chunks
                .iter()
                .find(|c| c.preposition.as_deref() == Some(prep))
                .unwrap()
        };
        let without_bt = parse_frame("NN.Pp").unwrap();
        let with_bt = parse_frame("NN.BT").unwrap();
        let with_bl = parse_frame("NN.BL").unwrap();

        // Temporal head: adjunct unless the pattern demands BT.
        assert!(is_adjunct_pp(pp("an"), &s, &without_bt, &lex));
        assert!(!is_adjunct_pp(pp("an"), &s, &with_bt, &lex));
        // Local head: adjunct unless the pattern demands BL.
        assert!(is_adjunct_pp(pp("in"), &s, &without_bt, &lex));
        assert!(!is_adjunct_pp(pp("in"), &s, &with_bl, &lex));
        // Ordinary complement heads are never adjuncts.
        assert!(!is_adjunct_pp(pp("mit"), &s, &without_bt, &lex));
    }

    #[test]
    fn unresolvable_heads_are_kept() {
        let lex = fixture_lexicon();
        let s = tagged_sentence(&lex, "mit dem Blinker");
        use crate::chunker::{default_grammar, parse_chunks};
        let covering = parse_chunks(&s, &default_grammar(), &CaseTables::default())
            .into_iter()
            .next()
            .unwrap();
        let pattern = parse_frame("NN.Pp").unwrap();
        assert!(!is_adjunct_pp(&covering.chunks[0], &s, &pattern, &lex));
    }

    #[test]
    fn no_matches_means_empty_counts() {
        let lex = fixture_lexicon();
        let pattern = parse_frame("NN.Pp").unwrap();
        let stats = count_prepositions(&[], &[], "kollidieren", &pattern, &lex, true, 0);
        assert!(stats.counts.is_empty());
        assert_eq!(stats.total_occurrences, 0);
    }

    #[test]
    fn counts_are_conserved_without_the_filter() {
        let lex = fixture_lexicon();
        let pattern = parse_frame("NN.Pp").unwrap();
        let (sentences, matches) = match_of(&lex, "kollidierte am Montag mit dem PKW in der Stadt");
        let in_scope_total: usize = matches.iter().map(|m| m.in_scope_pps.len()).sum();
        let off = count_prepositions(
            &matches,
            &sentences,
            "kollidieren",
            &pattern,
            &lex,
            false,
            1,
        );
        assert_eq!(off.counts.values().sum::<u32>() as usize, in_scope_total);
        let on = count_prepositions(&matches, &sentences, "kollidieren", &pattern, &lex, true, 1);
        assert!(on.counts.values().sum::<u32>() as usize <= in_scope_total);
        // The temporal and local PPs are exactly what the filter removes.
        assert_eq!(on.counts.values().sum::<u32>(), 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_counts() -> impl Strategy<Value = BTreeMap<String, u32>> {
            prop::collection::btree_map("[a-z]{2,4}", 1u32..100, 1..8)
        }

        proptest! {
            #[test]
            fn dominant_count_is_maximal(counts in arb_counts()) {
                let stats = PrepositionStats {
                    verb_lemma: "x".into(),
                    counts: counts.clone(),
                    case_counts: BTreeMap::new(),
                    total_occurrences: 1,
                };
                let dominant =
                    select_dominant_preposition(&stats, &CaseTables::default()).unwrap();
                for (prep, &count) in &counts {
                    prop_assert!(dominant.count >= count, "{prep} beats the dominant");
                }
                // The chosen preposition is the lexicographically smallest
                // among those with the maximal count.
                let smallest = counts
                    .iter()
                    .filter(|(_, &c)| c == dominant.count)
                    .map(|(p, _)| p.clone())
                    .min()
                    .unwrap();
                prop_assert_eq!(dominant.preposition, smallest);
            }
        }
    }
}
