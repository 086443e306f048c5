//! Induce a stop lemma list from the demo stop word lists and corpora.

use std::path::Path;

use stoplemma::corpus::load_corpus;
use stoplemma::freq::count_words;
use stoplemma::induce::{induce, load_stopword_list};
use stoplemma::lemma::load_lexicon;
use stoplemma::normalize::FilterPolicy;

fn main() -> stoplemma::Result<()> {
    let demo = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/demo");
    let lex = load_lexicon(&demo.join("lexicon.tsv"))?;

    let lists = ["list_a", "list_b", "list_c"]
        .iter()
        .map(|id| load_stopword_list(&demo.join(format!("lists/{id}.txt")), id))
        .collect::<stoplemma::Result<Vec<_>>>()?;

    let mut tables = Vec::new();
    for (id, domain) in [("stories", "Literature"), ("news", "News")] {
        let corpus = load_corpus(&demo.join(id), id, domain)?;
        tables.push(count_words(&corpus, &FilterPolicy::default()).to_lemmas(&lex));
    }

    let result = induce(&lists, &tables, &lex, 100, 25)?;
    println!("{:?}", result.report);
    let show = |set: &std::collections::BTreeSet<String>| set.iter().cloned().collect::<Vec<_>>().join(" ");
    println!("set A ({}): {}", result.set_a.len(), show(&result.set_a));
    println!("set B ({}): {}", result.set_b.len(), show(&result.set_b));
    println!("stop lemmas:");
    for l in &result.list.lemmas {
        println!("  {:<8} {}", l.lemma, l.aggregate_count);
    }
    Ok(())
}
