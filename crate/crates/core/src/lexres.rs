//! A minimal wordnet-style lexical resource: synsets with hypernym edges,
//! top-level semantic categories on the hypernym roots, and per-verb frame
//! strings with inflected forms.
//!
//! The resource is loaded from a single JSON document (see `load_lexicon`)
//! and is immutable afterwards; all queries are pure reads.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::io::Read;

use serde::Deserialize;
use thiserror::Error;

use crate::framespec::{self, FrameError};

/// Part of speech of a synset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pos {
    Noun,
    Verb,
    Adjective,
}

impl Pos {
    pub fn name(self) -> &'static str {
        match self {
            Pos::Noun => "noun",
            Pos::Verb => "verb",
            Pos::Adjective => "adjective",
        }
    }
}

/// A synset: one lexical concept with its lemmas and hypernym links.
#[derive(Debug, Clone)]
pub struct Synset {
    pub id: String,
    pub pos: Pos,
    pub lemmas: Vec<String>,
    pub hypernyms: Vec<String>,
    /// Top-level category label. Present in the source document exactly on
    /// hypernym roots; inherited by every other synset from the root its
    /// first-listed hypernym chain reaches.
    pub category: String,
}

impl Synset {
    pub fn is_root(&self) -> bool {
        self.hypernyms.is_empty()
    }
}

/// A verb with its inflected surface forms and raw frame strings.
#[derive(Debug, Clone)]
pub struct VerbEntry {
    pub lemma: String,
    pub inflected_forms: Vec<String>,
    pub frames: Vec<String>,
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read lexicon: {0}")]
    Io(#[from] std::io::Error),
    #[error("lexicon parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("synset {synset}: hypernym {hypernym} does not resolve")]
    DanglingHypernym { synset: String, hypernym: String },
    #[error("synset {synset}: hypernym {hypernym} has a different part of speech")]
    PosMismatch { synset: String, hypernym: String },
    #[error("hypernym cycle: {}", .0.join(" -> "))]
    Cycle(Vec<String>),
    #[error("duplicate synset id {0}")]
    DuplicateSynset(String),
    #[error("synset {0} has no lemmas")]
    EmptyLemmas(String),
    #[error("root synset {0} is missing its category label")]
    MissingCategory(String),
    #[error("non-root synset {0} must not carry a category label")]
    UnexpectedCategory(String),
    #[error("duplicate verb entry {0}")]
    DuplicateVerb(String),
    #[error("verb {0} has no frames")]
    EmptyFrames(String),
    #[error("verb {verb}: bad frame {frame:?}: {source}")]
    BadFrame {
        verb: String,
        frame: String,
        source: FrameError,
    },
    #[error("inflected form {form:?} is claimed by both {first:?} and {second:?}")]
    ConflictingForm {
        form: String,
        first: String,
        second: String,
    },
    #[error("category synset for {category:?} does not resolve: {id}")]
    UnknownCategorySynset { category: String, id: String },
    #[error("unknown synset id {0}")]
    UnknownSynset(String),
    #[error("synsets of mixed part of speech passed to lowest_common_hypernym")]
    MixedPos,
    #[error("empty id set passed to lowest_common_hypernym")]
    EmptyIdSet,
}

#[derive(Debug, Deserialize)]
struct SynsetDoc {
    id: String,
    pos: Pos,
    lemmas: Vec<String>,
    #[serde(default)]
    hypernyms: Vec<String>,
    #[serde(default)]
    category: Option<String>,
}

#[derive(Debug, Deserialize)]
struct VerbDoc {
    lemma: String,
    #[serde(default)]
    forms: Vec<String>,
    frames: Vec<String>,
}

#[derive(Debug, Deserialize)]
struct LexiconDoc {
    synsets: Vec<SynsetDoc>,
    verbs: Vec<VerbDoc>,
    /// Optional map from category label to the synset contributed to
    /// generalization when a filler is classified without a lexicon lookup
    /// (pronouns and named entities).
    #[serde(default)]
    category_synsets: BTreeMap<String, String>,
}

/// The loaded resource. Immutable after `load_lexicon`.
#[derive(Debug, Default)]
pub struct Lexicon {
    synsets: Vec<Synset>,
    by_id: HashMap<String, usize>,
    /// (lemma, pos) -> synset indices, exact spelling.
    lemma_index: HashMap<(String, Pos), Vec<usize>>,
    /// (lowercased lemma, pos) -> synset indices, fallback lookup.
    lemma_index_ci: HashMap<(String, Pos), Vec<usize>>,
    verbs: BTreeMap<String, VerbEntry>,
    form_index: HashMap<String, String>,
    category_synsets: BTreeMap<String, String>,
    /// Cached depth of each synset: length of its first-edge hypernym path
    /// minus one. Roots have depth 0.
    depths: Vec<usize>,
}

impl Lexicon {
    pub fn synset(&self, id: &str) -> Option<&Synset> {
        self.by_id.get(id).map(|&i| &self.synsets[i])
    }

    pub fn synsets(&self) -> impl Iterator<Item = &Synset> {
        self.synsets.iter()
    }

    pub fn verbs(&self) -> impl Iterator<Item = &VerbEntry> {
        self.verbs.values()
    }

    pub fn verb(&self, lemma: &str) -> Option<&VerbEntry> {
        self.verbs.get(lemma)
    }

    /// The verb lemma an inflected form belongs to, if any. The lookup is
    /// exact first, then lowercased (for sentence-initial capitalization).
    pub fn lemma_of_form(&self, form: &str) -> Option<&str> {
        self.form_index
            .get(form)
            .or_else(|| self.form_index.get(form.to_lowercase().as_str()))
            .map(String::as_str)
    }

    /// The synset contributed to generalization for a category label, when
    /// the resource designates one.
    pub fn category_synset(&self, category: &str) -> Option<&Synset> {
        self.category_synsets
            .get(category)
            .and_then(|id| self.synset(id))
    }

    /// All synsets containing `lemma` with the given part of speech.
    /// Case-preserving first (German nouns are capitalized), falling back to
    /// a case-insensitive match when the exact spelling is unknown.
    pub fn lookup_synsets(&self, lemma: &str, pos: Pos) -> Vec<&Synset> {
        if let Some(ids) = self.lemma_index.get(&(lemma.to_string(), pos)) {
            return ids.iter().map(|&i| &self.synsets[i]).collect();
        }
        self.lemma_index_ci
            .get(&(lemma.to_lowercase(), pos))
            .map(|ids| ids.iter().map(|&i| &self.synsets[i]).collect())
            .unwrap_or_default()
    }

    /// The path from a synset to a root, inclusive, following the
    /// first-listed hypernym edge at every step.
    pub fn hypernym_path(&self, id: &str) -> Result<Vec<String>, LexiconError> {
        let mut current = self
            .synset(id)
            .ok_or_else(|| LexiconError::UnknownSynset(id.to_string()))?;
        let mut path = vec![current.id.clone()];
        while let Some(next) = current.hypernyms.first() {
            current = self.synset(next).expect("checked at load time");
            path.push(current.id.clone());
        }
        Ok(path)
    }

    /// All ancestors of a synset (itself included), following every
    /// hypernym edge.
    pub fn ancestor_set(&self, id: &str) -> Result<HashSet<String>, LexiconError> {
        let start = self
            .synset(id)
            .ok_or_else(|| LexiconError::UnknownSynset(id.to_string()))?;
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.id.clone());
        queue.push_back(start);
        while let Some(synset) = queue.pop_front() {
            for hyper in &synset.hypernyms {
                if seen.insert(hyper.clone()) {
                    queue.push_back(self.synset(hyper).expect("checked at load time"));
                }
            }
        }
        Ok(seen)
    }

    /// Depth of a synset: its first-edge distance to a root.
    pub fn depth(&self, id: &str) -> Result<usize, LexiconError> {
        self.by_id
            .get(id)
            .map(|&i| self.depths[i])
            .ok_or_else(|| LexiconError::UnknownSynset(id.to_string()))
    }

    /// The deepest synset present in every member's full ancestor set, ties
    /// broken by smallest id. `None` when the members share no ancestor.
    pub fn lowest_common_hypernym(&self, ids: &[&str]) -> Result<Option<String>, LexiconError> {
        let mut iter = ids.iter();
        let first = iter.next().ok_or(LexiconError::EmptyIdSet)?;
        let pos = self
            .synset(first)
            .ok_or_else(|| LexiconError::UnknownSynset(first.to_string()))?
            .pos;
        let mut common = self.ancestor_set(first)?;
        for id in iter {
            let synset = self
                .synset(id)
                .ok_or_else(|| LexiconError::UnknownSynset(id.to_string()))?;
            if synset.pos != pos {
                return Err(LexiconError::MixedPos);
            }
            let ancestors = self.ancestor_set(id)?;
            common.retain(|a| ancestors.contains(a));
        }
        let mut best: Option<(usize, String)> = None;
        for id in common {
            let depth = self.depth(&id)?;
            let candidate = (depth, id);
            best = Some(match best {
                None => candidate,
                Some(current) => {
                    // Deeper wins; on equal depth the smaller id wins.
                    if candidate.0 > current.0
                        || (candidate.0 == current.0 && candidate.1 < current.1)
                    {
                        candidate
                    } else {
                        current
                    }
                }
            });
        }
        Ok(best.map(|(_, id)| id))
    }

    /// Raw frame strings of a verb, in source order. Empty when unknown.
    pub fn verb_frames(&self, lemma: &str) -> Vec<String> {
        self.verbs
            .get(lemma)
            .map(|v| v.frames.clone())
            .unwrap_or_default()
    }
}

/// Load and validate a lexicon document. Forward references are allowed;
/// every integrity violation is reported as a dedicated error.
pub fn load_lexicon<R: Read>(mut source: R) -> Result<Lexicon, LexiconError> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    parse_lexicon(&text)
}

/// Load a lexicon from an in-memory JSON string.
pub fn parse_lexicon(text: &str) -> Result<Lexicon, LexiconError> {
    let doc: LexiconDoc = serde_json::from_str(text).map_err(|e| LexiconError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let mut lexicon = Lexicon::default();

    for synset_doc in doc.synsets {
        if lexicon.by_id.contains_key(&synset_doc.id) {
            return Err(LexiconError::DuplicateSynset(synset_doc.id));
        }
        if synset_doc.lemmas.is_empty() {
            return Err(LexiconError::EmptyLemmas(synset_doc.id));
        }
        match (&synset_doc.category, synset_doc.hypernyms.is_empty()) {
            (None, true) => return Err(LexiconError::MissingCategory(synset_doc.id)),
            (Some(_), false) => return Err(LexiconError::UnexpectedCategory(synset_doc.id)),
            _ => {}
        }
        let index = lexicon.synsets.len();
        lexicon.by_id.insert(synset_doc.id.clone(), index);
        lexicon.synsets.push(Synset {
            id: synset_doc.id,
            pos: synset_doc.pos,
            lemmas: synset_doc.lemmas,
            hypernyms: synset_doc.hypernyms,
            category: synset_doc.category.unwrap_or_default(),
        });
    }

    // Resolve hypernym references and check part-of-speech agreement.
    for synset in &lexicon.synsets {
        for hyper in &synset.hypernyms {
            match lexicon.by_id.get(hyper) {
                None => {
                    return Err(LexiconError::DanglingHypernym {
                        synset: synset.id.clone(),
                        hypernym: hyper.clone(),
                    })
                }
                Some(&i) if lexicon.synsets[i].pos != synset.pos => {
                    return Err(LexiconError::PosMismatch {
                        synset: synset.id.clone(),
                        hypernym: hyper.clone(),
                    })
                }
                _ => {}
            }
        }
    }

    check_acyclic(&lexicon)?;

    // Depths and inherited categories, both along first-listed edges. The
    // graph is acyclic here, so the walk terminates.
    lexicon.depths = vec![0; lexicon.synsets.len()];
    for i in 0..lexicon.synsets.len() {
        let mut depth = 0;
        let mut current = i;
        while let Some(first) = lexicon.synsets[current].hypernyms.first() {
            current = lexicon.by_id[first];
            depth += 1;
        }
        lexicon.depths[i] = depth;
        if i != current {
            lexicon.synsets[i].category = lexicon.synsets[current].category.clone();
        }
    }

    // Lemma indexes, exact and case-insensitive.
    for (i, synset) in lexicon.synsets.iter().enumerate() {
        for lemma in &synset.lemmas {
            lexicon
                .lemma_index
                .entry((lemma.clone(), synset.pos))
                .or_default()
                .push(i);
            lexicon
                .lemma_index_ci
                .entry((lemma.to_lowercase(), synset.pos))
                .or_default()
                .push(i);
        }
    }

    for verb_doc in doc.verbs {
        if lexicon.verbs.contains_key(&verb_doc.lemma) {
            return Err(LexiconError::DuplicateVerb(verb_doc.lemma));
        }
        if verb_doc.frames.is_empty() {
            return Err(LexiconError::EmptyFrames(verb_doc.lemma));
        }
        for frame in &verb_doc.frames {
            framespec::parse_frame(frame).map_err(|source| LexiconError::BadFrame {
                verb: verb_doc.lemma.clone(),
                frame: frame.clone(),
                source,
            })?;
        }
        let mut forms = verb_doc.forms;
        if !forms.iter().any(|f| f == &verb_doc.lemma) {
            forms.push(verb_doc.lemma.clone());
        }
        for form in &forms {
            if let Some(previous) = lexicon.form_index.get(form) {
                if previous != &verb_doc.lemma {
                    return Err(LexiconError::ConflictingForm {
                        form: form.clone(),
                        first: previous.clone(),
                        second: verb_doc.lemma.clone(),
                    });
                }
            }
            lexicon
                .form_index
                .insert(form.clone(), verb_doc.lemma.clone());
        }
        lexicon.verbs.insert(
            verb_doc.lemma.clone(),
            VerbEntry {
                lemma: verb_doc.lemma,
                inflected_forms: forms,
                frames: verb_doc.frames,
            },
        );
    }

    for (category, id) in &doc.category_synsets {
        if !lexicon.by_id.contains_key(id) {
            return Err(LexiconError::UnknownCategorySynset {
                category: category.clone(),
                id: id.clone(),
            });
        }
    }
    lexicon.category_synsets = doc.category_synsets;

    Ok(lexicon)
}

/// Depth-first cycle check over all hypernym edges; reports one cycle.
fn check_acyclic(lexicon: &Lexicon) -> Result<(), LexiconError> {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let n = lexicon.synsets.len();
    let mut color = vec![Color::White; n];

    for start in 0..n {
        if color[start] != Color::White {
            continue;
        }
        // Iterative DFS keeping the gray path for cycle extraction.
        let mut stack = vec![(start, 0usize)];
        color[start] = Color::Gray;
        let mut path = vec![start];
        while let Some(&mut (node, ref mut edge)) = stack.last_mut() {
            let hypernyms = &lexicon.synsets[node].hypernyms;
            if *edge < hypernyms.len() {
                let target = lexicon.by_id[&hypernyms[*edge]];
                *edge += 1;
                match color[target] {
                    Color::White => {
                        color[target] = Color::Gray;
                        stack.push((target, 0));
                        path.push(target);
                    }
                    Color::Gray => {
                        let from = path.iter().position(|&p| p == target).unwrap();
                        let mut cycle: Vec<String> = path[from..]
                            .iter()
                            .map(|&p| lexicon.synsets[p].id.clone())
                            .collect();
                        cycle.push(lexicon.synsets[target].id.clone());
                        return Err(LexiconError::Cycle(cycle));
                    }
                    Color::Black => {}
                }
            } else {
                color[node] = Color::Black;
                stack.pop();
                path.pop();
            }
        }
    }
    Ok(())
}
