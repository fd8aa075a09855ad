//! Small overlap monoid presentations: C(n) analysis via generalized suffix
//! trees, the word problem, and lexicographically least normal forms.

pub mod bench;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod kambites;
pub mod matcher;
pub mod oracle;
pub mod overlap;
pub mod presentation;
pub mod report;
pub mod scanner;
pub mod suffix_tree;
pub mod word;

pub use error::{Error, ParseError, Result};
pub use kambites::{
    uniform_word_problem, ConfirmCheck, Kambites, OracleBackend, OverlapGuard, Verdict,
    WordProblemBackend,
};
pub use oracle::{RewriteClosure, RewriteOracle};
pub use overlap::{CIndex, PieceAnalysis, PieceDecomposition};
pub use presentation::{ComplementClasses, Presentation};
pub use report::AnalyzeReport;
pub use scanner::Scanner;
pub use suffix_tree::GeneralizedSuffixTree;
pub use word::{lex_compare, Alphabet, Symbol, Word};
