//! Lexicon lookup, phrase lemmatization and out-of-lexicon rates.

use std::path::Path;

use stoplemma::corpus::load_corpus;
use stoplemma::freq::count_words;
use stoplemma::lemma::{gen_lemma, load_lexicon};
use stoplemma::normalize::FilterPolicy;

fn main() -> stoplemma::Result<()> {
    let demo = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/demo");
    let lex = load_lexicon(&demo.join("lexicon.tsv"))?;
    println!("{} entries", lex.entry_count());

    for w in ["हैं", "उन्होंने", "किताब"] {
        println!("{w} -> {}", lex.lemmatize(w)?);
    }
    println!("phrase: {}", lex.lemmatize_phrase("वे घर गए थे"));
    let image = gen_lemma(["है", "हैं", "हूँ", "था", "थे"], &lex);
    println!("image of a word set: {}", image.into_iter().collect::<Vec<_>>().join(" "));

    let corpus = load_corpus(&demo.join("news"), "news", "News")?;
    let oov = lex.oov_rate(&count_words(&corpus, &FilterPolicy::default()));
    println!(
        "news: {}/{} types ({:.1}%) and {:.1}% of tokens not covered",
        oov.oov_types,
        oov.total_types,
        100.0 * oov.type_rate(),
        100.0 * oov.token_rate()
    );
    Ok(())
}
