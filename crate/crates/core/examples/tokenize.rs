//! Normalize, segment and filter a short mixed-script text.

use stoplemma::normalize::{filter_tokens, normalize_text, segment, tokenize, FilterPolicy};

fn main() {
    let raw = "यह   किताब 2024 में छपी। क्या आपने पढ़ी?  Price: ₹१२०!";
    let text = normalize_text(raw);
    println!("normalized: {text:?}");

    for (i, sentence) in segment(&text).iter().enumerate() {
        println!("sentence {i}: {:?}", sentence.span.slice(&text));
        for t in &sentence.tokens {
            println!("  {:<18} {:?}", format!("{:?}", t.kind), t.surface);
        }
    }

    let kept = filter_tokens(tokenize(&text), &FilterPolicy::default());
    let words: Vec<&str> = kept.iter().map(|t| t.surface.as_str()).collect();
    println!("kept by default policy: {}", words.join(" "));
}
