//! How many sources share each of their top-ten lemmas.

use stoplemma::reference::published_top_ten_rows;
use stoplemma::stats::top_k_overlap;

fn main() -> stoplemma::Result<()> {
    let rows = published_top_ten_rows();
    let report = top_k_overlap(&rows, 10)?;
    println!("{} sources, {} distinct items, max count {}", report.source_count, report.unique_items, report.max_count);
    for (item, count) in report.ranked() {
        println!("{item}\t{count}\t{}", "#".repeat(count));
    }

    // Tighter cut-offs share less.
    for k in [1, 3, 5] {
        let r = top_k_overlap(&rows, k)?;
        println!("k = {k}: {} distinct, max {}", r.unique_items, r.max_count);
    }
    Ok(())
}
