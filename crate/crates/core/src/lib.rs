//! Stop lemma induction for Hindi text.
//!
//! The pipeline reads plain-text corpora, normalizes and tokenizes them,
//! counts words and lemmas, and intersects the lemmatized heads of existing
//! stop word lists with the most frequent corpus lemmas. Supporting
//! analyses measure cross-corpus overlap of top-ranked lemmas, correlate
//! part-of-speech groups with rank, and check how well a translated external
//! stop list is covered.
//!
//! | module | role |
//! |---|---|
//! | [`normalize`] | NFC, whitespace, sentences, tokens, token filtering |
//! | [`corpus`] | directory loading and author metadata |
//! | [`lemma`] | word to lemma lexicon |
//! | [`freq`] | frequency tables and rankings |
//! | [`induce`] | stop word lists and stop lemma induction |
//! | [`stats`] | top-k overlap, point-biserial correlation, POS tags |
//! | [`assess`] | coverage of a translated list |
//! | [`reference`] | bundled reference lists |
//! | [`cli`] | run configuration and the binary's commands |
//!
//! Runnable examples live in `examples/`; `cargo run --example induce` is a
//! good place to start.

// Doc examples show TSV formats verbatim.
#![allow(clippy::tabs_in_doc_comments)]

mod error;
mod textfile;

pub mod assess;
pub mod cli;
pub mod corpus;
pub mod freq;
pub mod induce;
pub mod lemma;
pub mod normalize;
pub mod reference;
pub mod stats;

pub use error::{Error, Result, Undefined};
pub use textfile::read_utf8;
