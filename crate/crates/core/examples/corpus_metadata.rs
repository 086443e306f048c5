//! Load the demo corpora and summarize their author metadata.

use std::path::Path;

use stoplemma::corpus::{load_corpus, metadata_summary};

fn main() -> stoplemma::Result<()> {
    let demo = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/demo");
    for (id, domain) in [("stories", "Literature"), ("news", "News")] {
        let corpus = load_corpus(&demo.join(id), id, domain)?;
        let summary = metadata_summary(&corpus);
        println!("{id}: {} documents", summary.total_docs);
        for doc in &corpus.documents {
            match &doc.meta {
                Some(m) => println!("  {:<16} {:?} {:?} {:?}", doc.path, m.gender, m.year, m.era()),
                None => println!("  {:<16} (no metadata row)", doc.path),
            }
        }
        println!("  female fraction {:.3}", summary.female_fraction);
        println!("  states {:?}", summary.state_counts);
        println!("  eras {:?}", summary.era_counts);
    }
    Ok(())
}
