//! Independent reference implementations and random fixtures shared by the
//! integration suites. Nothing here calls into the library's algorithms;
//! the oracles recompute from raw token streams with plain loops.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

pub const CONSONANTS: &[char] = &[
    'क', 'ख', 'ग', 'घ', 'च', 'छ', 'ज', 'झ', 'ट', 'ठ', 'ड', 'ढ', 'त', 'थ', 'द', 'ध', 'न', 'प', 'फ', 'ब', 'भ', 'म', 'य',
    'र', 'ल', 'व', 'स', 'ह',
];
pub const VOWEL_SIGNS: &[char] = &['ा', 'ि', 'ी', 'ु', 'ू', 'े', 'ै', 'ो', 'ौ'];

/// A random NFC Devanagari word: consonant, vowel sign, consonant.
pub fn random_word(rng: &mut impl Rng) -> String {
    let c1 = *CONSONANTS.choose(rng).unwrap();
    let v = *VOWEL_SIGNS.choose(rng).unwrap();
    let c2 = *CONSONANTS.choose(rng).unwrap();
    [c1, v, c2].iter().collect()
}

/// `n` distinct random words.
pub fn distinct_words(rng: &mut impl Rng, n: usize) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(n);
    while out.len() < n {
        let w = random_word(rng);
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

/// A small random world: lemmas, surface forms mapped onto them, corpora of
/// surface tokens, and stop word lists.
#[derive(Debug, Clone)]
pub struct World {
    pub lexicon: Vec<(String, String)>,
    pub surfaces: Vec<String>,
    pub corpora: Vec<Vec<String>>,
    pub lists: Vec<Vec<String>>,
}

pub fn random_world(rng: &mut impl Rng) -> World {
    let lemma_count = rng.gen_range(5..=50);
    let pool = distinct_words(rng, lemma_count + 40);
    let (lemmas, extra) = pool.split_at(lemma_count);

    // Every lemma is its own surface; some extra forms map onto lemmas.
    let mut lexicon = Vec::new();
    let mut surfaces: Vec<String> = lemmas.to_vec();
    for form in extra.iter().take(rng.gen_range(0..=40)) {
        let lemma = lemmas.choose(rng).unwrap().clone();
        lexicon.push((form.clone(), lemma));
        surfaces.push(form.clone());
    }
    // Unlisted words pass through unchanged.
    surfaces.push(random_word(rng));

    let corpora = (0..rng.gen_range(2..=5))
        .map(|_| {
            let len = rng.gen_range(1..=1000);
            let skew = rng.gen_range(1..=surfaces.len());
            (0..len)
                .map(|_| {
                    let i = if rng.gen_bool(0.5) { rng.gen_range(0..skew) } else { rng.gen_range(0..surfaces.len()) };
                    surfaces[i].clone()
                })
                .collect()
        })
        .collect();

    let lists = (0..rng.gen_range(2..=5))
        .map(|_| {
            (0..rng.gen_range(1..=60))
                .map(|_| {
                    if rng.gen_bool(0.1) {
                        format!("{} {}", surfaces.choose(rng).unwrap(), surfaces.choose(rng).unwrap())
                    } else {
                        surfaces.choose(rng).unwrap().clone()
                    }
                })
                .collect()
        })
        .collect();

    World { lexicon, surfaces, corpora, lists }
}

pub fn lookup<'a>(lexicon: &'a [(String, String)], word: &'a str) -> &'a str {
    for (surface, lemma) in lexicon {
        if surface == word {
            return lemma;
        }
    }
    word
}

fn sorted_unique(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v.dedup();
    v
}

/// Union over lists of the lemmatized first `k` distinct entries.
pub fn oracle_set_a(lists: &[Vec<String>], lexicon: &[(String, String)], k: usize) -> Vec<String> {
    let mut out = Vec::new();
    for list in lists {
        let mut seen: Vec<&String> = Vec::new();
        for entry in list {
            if seen.len() == k {
                break;
            }
            if seen.contains(&entry) {
                continue;
            }
            seen.push(entry);
            let lemmatized: Vec<&str> = entry.split(' ').map(|w| lookup(lexicon, w)).collect();
            out.push(lemmatized.join(" "));
        }
    }
    sorted_unique(out)
}

/// Lemma counts of one token stream, as (lemma, count) pairs in first-seen
/// order.
pub fn oracle_lemma_counts(tokens: &[String], lexicon: &[(String, String)]) -> Vec<(String, u64)> {
    let mut counts: Vec<(String, u64)> = Vec::new();
    for t in tokens {
        let l = lookup(lexicon, t);
        match counts.iter_mut().find(|(x, _)| x == l) {
            Some((_, c)) => *c += 1,
            None => counts.push((l.to_owned(), 1)),
        }
    }
    counts
}

/// Top `k` by count descending with ties in codepoint order.
pub fn oracle_top_k(mut counts: Vec<(String, u64)>, k: usize) -> Vec<String> {
    // Bubble sort keeps this visibly independent from the library's sort.
    let n = counts.len();
    for i in 0..n {
        for j in 0..n - 1 - i {
            let (a, b) = (&counts[j], &counts[j + 1]);
            let a_chars: Vec<char> = a.0.chars().collect();
            let b_chars: Vec<char> = b.0.chars().collect();
            if b.1 > a.1 || (b.1 == a.1 && b_chars < a_chars) {
                counts.swap(j, j + 1);
            }
        }
    }
    counts.into_iter().take(k).map(|(l, _)| l).collect()
}

pub fn oracle_set_b(corpora: &[Vec<String>], lexicon: &[(String, String)], k: usize) -> Vec<String> {
    let mut out = Vec::new();
    for c in corpora {
        out.extend(oracle_top_k(oracle_lemma_counts(c, lexicon), k));
    }
    sorted_unique(out)
}

/// A ∩ B ordered by lemma count summed over all corpora.
pub fn oracle_final(
    a: &[String],
    b: &[String],
    corpora: &[Vec<String>],
    lexicon: &[(String, String)],
) -> Vec<(String, u64)> {
    let mut out = Vec::new();
    for lemma in a {
        if b.contains(lemma) {
            let total: u64 = corpora.iter().flatten().filter(|t| lookup(lexicon, t) == lemma).count() as u64;
            out.push((lemma.clone(), total));
        }
    }
    let ordered = oracle_top_k(out.clone(), usize::MAX);
    ordered.into_iter().map(|l| out.iter().find(|(x, _)| *x == l).unwrap().clone()).collect()
}

/// Pearson correlation, two-pass: means first, then centred sums.
pub fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (da, db) = (a - mx, b - my);
        sxx += da * da;
        syy += db * db;
        sxy += da * db;
    }
    sxy / (sxx.sqrt() * syy.sqrt())
}

/// Two-sided Student t tail probability by quadrature.
///
/// With t = sqrt(df)·tan θ the density becomes proportional to
/// cos^(df-1) θ on (-π/2, π/2), so P(|T| > |t|) is the integral of that
/// power over [atan(|t|/sqrt(df)), π/2] divided by the integral over
/// [0, π/2].
pub fn t_two_sided_p_quadrature(t: f64, df: f64) -> f64 {
    let f = |theta: f64| theta.cos().powf(df - 1.0);
    let lo = (t.abs() / df.sqrt()).atan();
    let half_pi = std::f64::consts::FRAC_PI_2;
    let tail = adaptive_simpson(&f, lo, half_pi, 1e-15);
    let whole = adaptive_simpson(&f, 0.0, half_pi, 1e-15);
    (tail / whole).clamp(0.0, 1.0)
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, eps: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        eps: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * eps {
            left + right + delta / 15.0
        } else {
            recurse(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1)
                + recurse(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1)
        }
    }
    if a >= b {
        return 0.0;
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    recurse(f, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), eps, 50)
}

/// Token stream counts keyed by item, for exact comparisons.
pub fn stream_counts(tokens: &[String]) -> std::collections::BTreeMap<String, u64> {
    let mut m = std::collections::BTreeMap::new();
    for t in tokens {
        *m.entry(t.clone()).or_insert(0) += 1;
    }
    m
}
