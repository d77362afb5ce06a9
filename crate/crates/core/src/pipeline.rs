//! End-to-end orchestration: configuration, corpus loading, per-verb
//! enrichment runs, and the inspection dumps the CLI exposes.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use thiserror::Error;

use crate::chunker::{default_grammar, parse_chunks, CaseTables, Covering, Grammar, GrammarError};
use crate::enrich::{build_enriched_frame, EnrichOptions, EnrichedFrame, OccurrenceMatch};
use crate::framespec::parse_frame;
use crate::lexres::{load_lexicon, Lexicon, LexiconError};
use crate::matcher::{
    find_verb_occurrences, segment_of, select_in_scope_pps, split_clauses, Binding, ClauseContext,
    Matcher,
};
use crate::textprep::{
    read_vertical, recognize_nes, split_sentences, tag_pos, tokenize, NeConfig, Sentence, SourceId,
    VerticalError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputMode {
    Raw,
    Pretagged,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
    Tsv,
}

/// Everything one enrichment run needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub lexicon_path: PathBuf,
    pub corpus_paths: Vec<PathBuf>,
    /// Empty means every verb of the lexicon.
    pub target_verbs: Vec<String>,
    pub scope_window: usize,
    pub adjunct_filter: bool,
    pub min_evidence: u32,
    pub input_mode: InputMode,
    pub output_format: OutputFormat,
    pub grammar_path: Option<PathBuf>,
    pub ne_config_path: Option<PathBuf>,
    pub jobs: usize,
}

impl RunConfig {
    pub fn new(lexicon_path: impl Into<PathBuf>) -> RunConfig {
        RunConfig {
            lexicon_path: lexicon_path.into(),
            corpus_paths: Vec::new(),
            target_verbs: Vec::new(),
            scope_window: 1,
            adjunct_filter: true,
            min_evidence: 1,
            input_mode: InputMode::Raw,
            output_format: OutputFormat::Json,
            grammar_path: None,
            ne_config_path: None,
            jobs: 1,
        }
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Grammar(#[from] GrammarError),
    #[error("bad entity config {path}: {message}")]
    NeConfig { path: PathBuf, message: String },
    #[error("bad pre-tagged file {path}: {source}")]
    Vertical {
        path: PathBuf,
        source: VerticalError,
    },
}

impl RunError {
    /// 1 for usage errors, 2 for input and integrity errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => 1,
            _ => 2,
        }
    }
}

fn read_file(path: &Path) -> Result<String, RunError> {
    fs::read_to_string(path).map_err(|source| RunError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// A tagged sentence with its chunk coverings, computed once and shared by
/// every verb run.
#[derive(Debug, Clone)]
pub struct PreparedSentence {
    pub sentence: Sentence,
    pub coverings: Vec<Covering>,
}

/// Loaded resources plus analysis tables.
pub struct Pipeline {
    pub lex: Lexicon,
    pub grammar: Grammar,
    pub tables: CaseTables,
    pub ne_config: NeConfig,
}

impl Pipeline {
    pub fn from_config(config: &RunConfig) -> Result<Pipeline, RunError> {
        if config.scope_window == 0 {
            return Err(RunError::Usage("--scope-window must be at least 1".into()));
        }
        let lexicon_file = fs::File::open(&config.lexicon_path).map_err(|source| RunError::Io {
            path: config.lexicon_path.clone(),
            source,
        })?;
        let lex = load_lexicon(io::BufReader::new(lexicon_file))?;
        let grammar = match &config.grammar_path {
            Some(path) => Grammar::parse(&read_file(path)?)?,
            None => default_grammar(),
        };
        let ne_config = match &config.ne_config_path {
            Some(path) => {
                NeConfig::from_json(&read_file(path)?).map_err(|e| RunError::NeConfig {
                    path: path.clone(),
                    message: e.to_string(),
                })?
            }
            None => NeConfig::default(),
        };
        Ok(Pipeline {
            lex,
            grammar,
            tables: CaseTables::default(),
            ne_config,
        })
    }

    /// Split, tokenize, tag and entity-annotate one raw document, then
    /// chunk every sentence.
    pub fn prepare_text(&self, doc: &str, text: &str) -> Vec<PreparedSentence> {
        let mut prepared = Vec::new();
        for (index, span) in split_sentences(text, &self.ne_config.abbreviations)
            .into_iter()
            .enumerate()
        {
            let sentence_text = &text[span.start..span.end];
            let mut tokens = tokenize(sentence_text);
            if tokens.is_empty() {
                continue;
            }
            tag_pos(&mut tokens, &self.lex);
            let tokens = recognize_nes(sentence_text, tokens, &self.ne_config);
            let sentence = Sentence {
                source: SourceId {
                    doc: doc.to_string(),
                    index,
                },
                text: sentence_text.to_string(),
                tokens,
            };
            let coverings = parse_chunks(&sentence, &self.grammar, &self.tables);
            prepared.push(PreparedSentence {
                sentence,
                coverings,
            });
        }
        prepared
    }

    /// Prepare a pre-tagged vertical document.
    pub fn prepare_vertical(
        &self,
        doc: &str,
        text: &str,
    ) -> Result<Vec<PreparedSentence>, VerticalError> {
        let sentences = read_vertical(text, doc)?;
        Ok(sentences
            .into_iter()
            .map(|sentence| {
                let text = sentence.text.clone();
                let tokens = recognize_nes(&text, sentence.tokens.clone(), &self.ne_config);
                let sentence = Sentence { tokens, ..sentence };
                let coverings = parse_chunks(&sentence, &self.grammar, &self.tables);
                PreparedSentence {
                    sentence,
                    coverings,
                }
            })
            .collect())
    }

    /// Load and prepare the whole corpus. Documents are processed
    /// concurrently up to `config.jobs`, and the result order is fixed by
    /// the sorted document list regardless of interleaving.
    pub fn prepare_corpus(&self, config: &RunConfig) -> Result<Vec<PreparedSentence>, RunError> {
        if config.corpus_paths.is_empty() {
            return Err(RunError::Usage(
                "at least one corpus path is required".into(),
            ));
        }
        let files = collect_corpus_files(&config.corpus_paths)?;
        let mut documents = Vec::with_capacity(files.len());
        for path in &files {
            let name = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            documents.push((name, read_file(path)?, path.clone()));
        }

        type Slot = Option<Result<Vec<PreparedSentence>, RunError>>;
        let jobs = config.jobs.max(1);
        let results: Mutex<Vec<Slot>> = Mutex::new((0..documents.len()).map(|_| None).collect());
        let next = AtomicUsize::new(0);

        std::thread::scope(|scope| {
            for _ in 0..jobs.min(documents.len().max(1)) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::SeqCst);
                    if i >= documents.len() {
                        break;
                    }
                    let (name, text, path) = &documents[i];
                    let prepared = match config.input_mode {
                        InputMode::Raw => Ok(self.prepare_text(name, text)),
                        InputMode::Pretagged => {
                            self.prepare_vertical(name, text)
                                .map_err(|source| RunError::Vertical {
                                    path: path.clone(),
                                    source,
                                })
                        }
                    };
                    results.lock().unwrap()[i] = Some(prepared);
                });
            }
        });

        let mut sentences = Vec::new();
        for slot in results.into_inner().unwrap() {
            sentences.extend(slot.expect("every document was processed")?);
        }
        Ok(sentences)
    }

    /// Match one verb and one frame over the prepared corpus. Returns the
    /// per-occurrence matches (occurrences without a compatible covering
    /// yield no match) plus the number of occurrences examined.
    pub fn match_verb_frame(
        &self,
        prepared: &[PreparedSentence],
        verb: &str,
        pattern: &crate::framespec::FramePattern,
        window: usize,
    ) -> (Vec<OccurrenceMatch>, u32) {
        let sentences: Vec<&Sentence> = prepared.iter().map(|p| &p.sentence).collect();
        let owned: Vec<Sentence> = sentences.iter().map(|s| (*s).clone()).collect();
        let occurrences = find_verb_occurrences(&owned, verb, &self.lex);
        let matcher = Matcher::with_window(&self.lex, window);

        let mut matches = Vec::new();
        for occurrence in &occurrences {
            let sentence = &prepared[occurrence.sentence].sentence;
            let coverings = &prepared[occurrence.sentence].coverings;
            let segments = split_clauses(sentence, verb, &self.lex);
            let Some(segment_index) = segment_of(&segments, occurrence.token) else {
                continue;
            };
            let context = ClauseContext {
                sentence,
                segments: &segments,
                segment_index,
                occurrence: *occurrence,
                verb_lemma: verb,
            };
            let kept = matcher.filter_coverings(coverings, pattern, &context);
            let Some(&covering_index) = kept.first() else {
                continue;
            };
            let covering = &coverings[covering_index];
            let assignments = matcher.match_frame(pattern, &context, covering, covering_index);
            let in_scope_pps =
                select_in_scope_pps(&segments[segment_index], covering, occurrence.token, window);
            matches.push(OccurrenceMatch {
                occurrence: *occurrence,
                covering: covering.clone(),
                in_scope_pps,
                assignments,
            });
        }
        (matches, occurrences.len() as u32)
    }

    /// Run the full enrichment for one verb: one report per frame.
    pub fn enrich_verb(
        &self,
        prepared: &[PreparedSentence],
        verb: &str,
        config: &RunConfig,
    ) -> Vec<EnrichedFrame> {
        let sentences: Vec<Sentence> = prepared.iter().map(|p| p.sentence.clone()).collect();
        let options = EnrichOptions {
            adjunct_filter: config.adjunct_filter,
            min_evidence: config.min_evidence,
        };
        let frames = self.lex.verb_frames(verb);
        if frames.is_empty() {
            return vec![EnrichedFrame {
                verb: verb.to_string(),
                pattern: String::new(),
                occurrences_examined: 0,
                elements: Vec::new(),
                preposition_counts: Default::default(),
                warnings: vec![format!("verb {verb:?} is not in the lexicon")],
            }];
        }
        frames
            .iter()
            .map(|raw| {
                let pattern = parse_frame(raw).expect("frames were validated at load");
                let (matches, occurrences) =
                    self.match_verb_frame(prepared, verb, &pattern, config.scope_window);
                build_enriched_frame(
                    verb,
                    &pattern,
                    &matches,
                    &sentences,
                    occurrences,
                    &self.lex,
                    &self.tables,
                    &options,
                )
            })
            .collect()
    }

    /// The verbs a run targets: the configured list, or every lexicon verb.
    pub fn target_verbs(&self, config: &RunConfig) -> Vec<String> {
        if config.target_verbs.is_empty() {
            self.lex.verbs().map(|v| v.lemma.clone()).collect()
        } else {
            config.target_verbs.clone()
        }
    }

    /// Chunk inspection dump: one TSV line per chunk of the best covering.
    pub fn chunk_dump(&self, prepared: &[PreparedSentence]) -> String {
        let mut out = String::new();
        for p in prepared {
            let Some(best) = p.coverings.first() else {
                continue;
            };
            for chunk in &best.chunks {
                let head = &p.sentence.tokens[chunk.head_index];
                let head_lemma = head.lemma.as_deref().unwrap_or(&head.surface);
                out.push_str(&format!(
                    "{}\t{}\t{}-{}\t{}\t{}\t{}\n",
                    p.sentence.source,
                    chunk.kind.name(),
                    chunk.span.start,
                    chunk.span.end,
                    head_lemma,
                    chunk.case_set.short(),
                    chunk.preposition.as_deref().unwrap_or("-"),
                ));
            }
        }
        out
    }

    /// Assignment inspection dump, one TSV line per bound element.
    pub fn assignment_dump(
        &self,
        prepared: &[PreparedSentence],
        verb: &str,
        config: &RunConfig,
    ) -> String {
        let mut out = String::new();
        for raw in self.lex.verb_frames(verb) {
            let pattern = parse_frame(&raw).expect("frames were validated at load");
            let (matches, _) = self.match_verb_frame(prepared, verb, &pattern, config.scope_window);
            for m in &matches {
                let sentence = &prepared[m.occurrence.sentence].sentence;
                for (rank, assignment) in m.assignments.iter().enumerate() {
                    for (element, binding) in assignment.bindings.iter().enumerate() {
                        let surface = match binding {
                            Binding::Chunk(i) => {
                                m.covering.chunks[*i].surface(sentence).to_string()
                            }
                            Binding::Tokens(range) => {
                                let start = sentence.tokens[range.start].span.0;
                                let end = sentence.tokens[range.end - 1].span.1;
                                sentence.text[start..end].to_string()
                            }
                            Binding::Unfilled => "-".to_string(),
                        };
                        out.push_str(&format!(
                            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                            verb,
                            sentence.source,
                            raw,
                            rank,
                            pattern.elements[element].spelling(),
                            surface,
                            assignment.covering_index,
                        ));
                    }
                }
            }
        }
        out
    }

    /// Lexicon inspection text for one lemma: synsets, hypernym paths,
    /// categories, verb frames. `None` when the lemma is entirely unknown.
    pub fn lexinfo(&self, lemma: &str) -> Option<String> {
        use crate::lexres::Pos;
        let mut out = String::new();
        let mut found = false;
        for pos in [Pos::Noun, Pos::Verb, Pos::Adjective] {
            for synset in self.lex.lookup_synsets(lemma, pos) {
                found = true;
                out.push_str(&format!(
                    "synset {} ({}): lemmas [{}], category {}\n",
                    synset.id,
                    pos.name(),
                    synset.lemmas.join(", "),
                    synset.category,
                ));
                let path = self.lex.hypernym_path(&synset.id).expect("id exists");
                out.push_str(&format!("  hypernym path: {}\n", path.join(" -> ")));
            }
        }
        if let Some(verb) = self.lex.verb(lemma) {
            found = true;
            out.push_str(&format!(
                "verb {}: frames {}\n",
                verb.lemma,
                verb.frames.join(", ")
            ));
            out.push_str(&format!("  forms: {}\n", verb.inflected_forms.join(", ")));
        } else if let Some(infinitive) = self.lex.lemma_of_form(lemma) {
            found = true;
            out.push_str(&format!("form of verb {infinitive}\n"));
        }
        found.then_some(out)
    }
}

fn collect_corpus_files(paths: &[PathBuf]) -> Result<Vec<PathBuf>, RunError> {
    let mut files = Vec::new();
    for path in paths {
        walk(path, &mut files)?;
    }
    files.sort();
    files.dedup();
    Ok(files)
}

fn walk(path: &Path, files: &mut Vec<PathBuf>) -> Result<(), RunError> {
    let metadata = fs::metadata(path).map_err(|source| RunError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    if metadata.is_dir() {
        let entries = fs::read_dir(path).map_err(|source| RunError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let mut children: Vec<PathBuf> = Vec::new();
        for entry in entries {
            let entry = entry.map_err(|source| RunError::Io {
                path: path.to_path_buf(),
                source,
            })?;
            children.push(entry.path());
        }
        children.sort();
        for child in children {
            walk(&child, files)?;
        }
    } else {
        files.push(path.to_path_buf());
    }
    Ok(())
}
