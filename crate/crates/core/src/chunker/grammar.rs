//! The context free chunk grammar: rule type, file syntax, and the built-in
//! default grammar of 15 rules.

use thiserror::Error;

use crate::textprep::PosTag;

/// A grammar symbol: either a pos tag (terminal) or a nonterminal name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Symbol {
    Terminal(PosTag),
    NonTerminal(String),
}

impl Symbol {
    fn parse(name: &str) -> Symbol {
        match PosTag::from_name(name) {
            Some(tag) => Symbol::Terminal(tag),
            None => Symbol::NonTerminal(name.to_string()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Symbol::Terminal(tag) => tag.name().to_string(),
            Symbol::NonTerminal(name) => name.clone(),
        }
    }
}

/// One production, `lhs -> rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrammarRule {
    pub lhs: String,
    pub rhs: Vec<Symbol>,
}

#[derive(Debug, Error)]
pub enum GrammarError {
    #[error("line {line}: expected \"LHS -> sym sym ...\", got {text:?}")]
    BadRule { line: usize, text: String },
    #[error("line {line}: empty right-hand side")]
    EmptyRhs { line: usize },
    #[error("line {line}: left-hand side {name:?} is a pos tag")]
    TerminalLhs { line: usize, name: String },
    #[error("grammar defines no NP or PP rules")]
    NoChunkSymbols,
}

/// An immutable chunk grammar.
#[derive(Debug, Clone)]
pub struct Grammar {
    rules: Vec<GrammarRule>,
}

impl Grammar {
    /// Parse the rule file syntax: one rule per line, `LHS -> sym sym ...`,
    /// `#` starts a comment.
    pub fn parse(text: &str) -> Result<Grammar, GrammarError> {
        let mut rules = Vec::new();
        for (number, raw_line) in text.lines().enumerate() {
            let line = match raw_line.find('#') {
                Some(pos) => &raw_line[..pos],
                None => raw_line,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| GrammarError::BadRule {
                line: number + 1,
                text: raw_line.to_string(),
            })?;
            let lhs = lhs.trim();
            if lhs.is_empty() || lhs.contains(char::is_whitespace) {
                return Err(GrammarError::BadRule {
                    line: number + 1,
                    text: raw_line.to_string(),
                });
            }
            if PosTag::from_name(lhs).is_some() {
                return Err(GrammarError::TerminalLhs {
                    line: number + 1,
                    name: lhs.to_string(),
                });
            }
            let rhs: Vec<Symbol> = rhs.split_whitespace().map(Symbol::parse).collect();
            if rhs.is_empty() {
                return Err(GrammarError::EmptyRhs { line: number + 1 });
            }
            rules.push(GrammarRule {
                lhs: lhs.to_string(),
                rhs,
            });
        }
        let grammar = Grammar { rules };
        if !grammar.defines("NP") && !grammar.defines("PP") {
            return Err(GrammarError::NoChunkSymbols);
        }
        Ok(grammar)
    }

    pub fn rules(&self) -> &[GrammarRule] {
        &self.rules
    }

    pub fn defines(&self, nonterminal: &str) -> bool {
        self.rules.iter().any(|r| r.lhs == nonterminal)
    }

    pub fn rules_for<'a>(&'a self, lhs: &'a str) -> impl Iterator<Item = &'a GrammarRule> {
        self.rules.iter().filter(move |r| r.lhs == lhs)
    }

    pub fn nonterminals(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.rules.iter().map(|r| r.lhs.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        names
    }
}

const DEFAULT_GRAMMAR: &str = "\
# Basic structures only: noun phrases and prepositional phrases.
NP  -> determiner noun
NP  -> determiner ADJ noun
NP  -> determiner proper-noun
NP  -> determiner noun proper-noun
NP  -> NP proper-noun
NP  -> noun
NP  -> proper-noun
NP  -> pronoun
NP  -> cardinal noun
NP  -> ADJ noun
ADJ -> adjective
ADJ -> adjective ADJ
PP  -> preposition NP
PP  -> contracted-preposition noun
PP  -> contracted-preposition ADJ noun
";

/// The built-in chunk grammar (15 rules).
pub fn default_grammar() -> Grammar {
    Grammar::parse(DEFAULT_GRAMMAR).expect("the built-in grammar parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grammar_has_at_most_15_rules() {
        let grammar = default_grammar();
        assert!(grammar.rules().len() <= 15, "{}", grammar.rules().len());
        assert!(grammar.defines("NP"));
        assert!(grammar.defines("PP"));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let grammar = Grammar::parse("# nur Kommentar\n\nNP -> noun # Kopf\n").unwrap();
        assert_eq!(grammar.rules().len(), 1);
        assert_eq!(grammar.rules()[0].rhs, vec![Symbol::Terminal(PosTag::Noun)]);
    }

    #[test]
    fn bad_rules_are_rejected() {
        assert!(matches!(
            Grammar::parse("NP noun\n"),
            Err(GrammarError::BadRule { line: 1, .. })
        ));
        assert!(matches!(
            Grammar::parse("NP ->\n"),
            Err(GrammarError::EmptyRhs { line: 1 })
        ));
        assert!(matches!(
            Grammar::parse("noun -> NP\n"),
            Err(GrammarError::TerminalLhs { .. })
        ));
        assert!(matches!(
            Grammar::parse("X -> noun\n"),
            Err(GrammarError::NoChunkSymbols)
        ));
    }
}
