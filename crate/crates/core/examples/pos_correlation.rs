//! Point-biserial correlation between POS group membership and rank.

use std::path::Path;

use stoplemma::corpus::load_corpus;
use stoplemma::freq::{count_words, rank_items};
use stoplemma::normalize::FilterPolicy;
use stoplemma::stats::{
    correlation_table_tsv, load_pos_lexicon, point_biserial, pos_rank_analysis, reject_pos_hypothesis, RankVariable,
    TagGroup, DEFAULT_REJECTION_THRESHOLD,
};

fn main() -> stoplemma::Result<()> {
    // A single cell by hand.
    let members = [true, true, false, true, false, false, false, false];
    let ranks: Vec<f64> = (1..=8).map(f64::from).collect();
    let pb = point_biserial(&members, &ranks)?;
    println!("hand example: r = {:.4}, p = {:.4}", pb.r, pb.p);

    let demo = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/demo");
    let pos = load_pos_lexicon(&demo.join("pos.tsv"))?;
    let mut lists = Vec::new();
    for (id, domain) in [("stories", "Literature"), ("news", "News")] {
        let corpus = load_corpus(&demo.join(id), id, domain)?;
        lists.push(rank_items(&count_words(&corpus, &FilterPolicy::default())));
    }

    let report = pos_rank_analysis("Words", &lists, &pos, &TagGroup::defaults(), None, RankVariable::Rank);
    print!("{}", correlation_table_tsv(&[&report]));
    println!(
        "no group has |mean r| above {DEFAULT_REJECTION_THRESHOLD}: {}",
        reject_pos_hypothesis(&report, DEFAULT_REJECTION_THRESHOLD)
    );
    for cell in &report.cells {
        println!("{:<12} {:<8} {:?}", cell.group, cell.source, cell.outcome);
    }
    Ok(())
}
