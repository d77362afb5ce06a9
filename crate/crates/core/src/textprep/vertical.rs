//! Vertical (one token per line) pre-tagged input, the substitution path
//! for users who want to run an external tagger.
//!
//! Format: `surface<TAB>pos<TAB>lemma` per line, lemma `-` when absent,
//! blank line between sentences.

use thiserror::Error;

use crate::textprep::{PosTag, Sentence, SourceId, Token};

#[derive(Debug, Error)]
pub enum VerticalError {
    #[error("line {line}: expected surface<TAB>pos<TAB>lemma, got {text:?}")]
    BadLine { line: usize, text: String },
    #[error("line {line}: unknown pos tag {tag:?}")]
    UnknownTag { line: usize, tag: String },
}

/// Parse a vertical file into sentences. Char spans are synthesized by
/// joining surfaces with single spaces.
pub fn read_vertical(text: &str, doc: &str) -> Result<Vec<Sentence>, VerticalError> {
    let mut sentences = Vec::new();
    let mut rows: Vec<(String, PosTag, Option<String>)> = Vec::new();

    let flush = |rows: &mut Vec<(String, PosTag, Option<String>)>,
                 sentences: &mut Vec<Sentence>| {
        if rows.is_empty() {
            return;
        }
        let text = rows
            .iter()
            .map(|(surface, _, _)| surface.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        let mut tokens = Vec::with_capacity(rows.len());
        let mut offset = 0;
        for (surface, pos, lemma) in rows.drain(..) {
            let span = (offset, offset + surface.len());
            offset = span.1 + 1;
            tokens.push(Token {
                surface,
                pos,
                lemma,
                ne_class: None,
                span,
            });
        }
        sentences.push(Sentence {
            source: SourceId {
                doc: doc.to_string(),
                index: sentences.len(),
            },
            text,
            tokens,
        });
    };

    for (number, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            flush(&mut rows, &mut sentences);
            continue;
        }
        let mut fields = line.split('\t');
        let (surface, tag, lemma) = match (fields.next(), fields.next(), fields.next()) {
            (Some(s), Some(t), Some(l)) if fields.next().is_none() => (s, t, l),
            _ => {
                return Err(VerticalError::BadLine {
                    line: number + 1,
                    text: line.to_string(),
                })
            }
        };
        let pos = PosTag::from_name(tag).ok_or_else(|| VerticalError::UnknownTag {
            line: number + 1,
            tag: tag.to_string(),
        })?;
        let lemma = if lemma == "-" {
            None
        } else {
            Some(lemma.to_string())
        };
        rows.push((surface.to_string(), pos, lemma));
    }
    flush(&mut rows, &mut sentences);
    Ok(sentences)
}

/// Render sentences back to the vertical format.
pub fn write_vertical(sentences: &[Sentence]) -> String {
    let mut out = String::new();
    for (i, sentence) in sentences.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for token in &sentence.tokens {
            out.push_str(&token.surface);
            out.push('\t');
            out.push_str(token.pos.name());
            out.push('\t');
            out.push_str(token.lemma.as_deref().unwrap_or("-"));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "sein\tdeterminer\t-\n\
LKW\tnoun\t-\n\
kollidierte\tverb-finite\tkollidieren\n\
mit\tpreposition\t-\n\
dem\tdeterminer\t-\n\
PKW\tnoun\t-\n\
.\tsentence-final\t-\n\
\n\
Er\tpronoun\t-\n\
verstarb\tverb-finite\tversterben\n\
.\tsentence-final\t-\n";

    #[test]
    fn read_then_write_is_the_identity() {
        let sentences = read_vertical(SAMPLE, "doc").unwrap();
        assert_eq!(sentences.len(), 2);
        assert_eq!(write_vertical(&sentences), SAMPLE);
    }

    #[test]
    fn lemma_and_tags_survive() {
        let sentences = read_vertical(SAMPLE, "doc").unwrap();
        let verb = &sentences[0].tokens[2];
        assert_eq!(verb.pos, PosTag::VerbFinite);
        assert_eq!(verb.lemma.as_deref(), Some("kollidieren"));
        assert_eq!(sentences[1].source.index, 1);
    }

    #[test]
    fn bad_rows_are_rejected_with_line_numbers() {
        match read_vertical("nur-eine-spalte\n", "doc") {
            Err(VerticalError::BadLine { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected bad-line error, got {other:?}"),
        }
        match read_vertical("wort\tkein-tag\t-\n", "doc") {
            Err(VerticalError::UnknownTag { tag, .. }) => assert_eq!(tag, "kein-tag"),
            other => panic!("expected unknown-tag error, got {other:?}"),
        }
    }

    #[test]
    fn spans_are_strictly_increasing() {
        let sentences = read_vertical(SAMPLE, "doc").unwrap();
        for sentence in &sentences {
            let mut last = 0;
            for token in &sentence.tokens {
                assert!(token.span.0 >= last);
                assert!(token.span.1 > token.span.0);
                assert_eq!(
                    &sentence.text[token.span.0..token.span.1],
                    token.surface.as_str()
                );
                last = token.span.1;
            }
        }
    }
}
