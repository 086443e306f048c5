//! Coverage of the bundled stop lemma list by a translated English list.

use std::path::Path;

use stoplemma::assess::{assess_coverage, load_mapping, TranslationMapping};
use stoplemma::lemma::{load_lexicon, LemmaLexicon};
use stoplemma::reference::published_stop_lemmas;

fn main() -> stoplemma::Result<()> {
    let demo = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/demo");
    let mapping = load_mapping(&demo.join("mapping.tsv"))?;
    let lex = load_lexicon(&demo.join("lexicon.tsv"))?;
    let list = published_stop_lemmas();

    let report = assess_coverage(&mapping, &lex, &list);
    print!("{}", report.summary());

    // A list always covers itself.
    let identity = TranslationMapping::identity(list.lemmas().iter().cloned());
    let own = assess_coverage(&identity, &LemmaLexicon::identity(), &list);
    println!("self coverage: {:?}", own.coverage_ratio);
    Ok(())
}
