//! Word and lemma frequency rankings for one demo corpus.

use std::path::Path;

use stoplemma::corpus::load_corpus;
use stoplemma::freq::{count_words, rank_items};
use stoplemma::lemma::load_lexicon;
use stoplemma::normalize::FilterPolicy;

fn main() -> stoplemma::Result<()> {
    let demo = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/demo");
    let corpus = load_corpus(&demo.join("stories"), "stories", "Literature")?;
    let lex = load_lexicon(&demo.join("lexicon.tsv"))?;

    let words = count_words(&corpus, &FilterPolicy::default());
    let lemmas = words.to_lemmas(&lex);
    println!("{:?}", words.summary());
    println!("{:?}", lemmas.summary());

    let (w, l) = (rank_items(&words), rank_items(&lemmas));
    println!("{:>4}  {:<12} {:>5}   {:<12} {:>5}", "rank", "word", "count", "lemma", "count");
    for (a, b) in w.entries.iter().zip(&l.entries).take(15) {
        println!("{:>4}  {:<12} {:>5}   {:<12} {:>5}", a.rank, a.item, a.count, b.item, b.count);
    }
    Ok(())
}
