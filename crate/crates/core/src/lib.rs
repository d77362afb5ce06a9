//! Enrichment of wordnet-style verb subcategorization frames from a
//! chunk-parsed German corpus.
//!
//! Frame strings like `NN.Pp` say that a verb takes a nominative noun
//! phrase and an optional prepositional phrase, but not which preposition,
//! which case, or what kind of filler. This crate closes those gaps
//! statistically: it locates verb occurrences in a corpus, chunks the
//! sentences into NPs and PPs with a small chart grammar, matches the frame
//! patterns against the chunk coverings, counts prepositions in the verb's
//! scope, classifies fillers through the lexical resource's hypernym tree,
//! and assembles an enriched frame per verb.

pub mod chunker;
pub mod classify;
pub mod enrich;
pub mod framespec;
pub mod lexres;
pub mod matcher;
pub mod pipeline;
pub mod textprep;

pub use chunker::{default_grammar, parse_chunks, CaseTables, Chunk, ChunkKind, Covering, Grammar};
pub use enrich::{build_enriched_frame, EnrichOptions, EnrichedFrame};
pub use framespec::{format_frame, parse_frame, FramePattern};
pub use lexres::{load_lexicon, Lexicon};
pub use pipeline::{InputMode, OutputFormat, Pipeline, RunConfig, RunError};
pub use textprep::{split_sentences, tokenize, Sentence, Token};
