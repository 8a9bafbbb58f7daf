//! Lists the word classes with trace at most 8 together with their lengths,
//! class sizes and Poisson means, then shows how one word is canonicalized.
//!
//! ```bash
//! cargo run --release -p randsurf --example word_census
//! ```

use randsurf::words::{canonicalize, enumerate_classes_by_trace, matrix_of_word};
use randsurf::Word;

fn main() -> randsurf::Result<()> {
    let census = enumerate_classes_by_trace(8)?;
    println!("{:<10} {:>5} {:>6} {:>6} {:>10} {:>7}", "class", "len", "trace", "|[w]|", "length", "lambda");
    for c in &census.classes {
        println!(
            "{:<10} {:>5} {:>6} {:>6} {:>10.6} {:>7}",
            c.canonical.to_string(),
            c.word_length,
            c.trace.to_string(),
            c.class_size,
            c.hyperbolic_length().length,
            c.lambda.to_string()
        );
    }
    println!("{} classes, longest word {}", census.count(), census.max_word_length());

    let w: Word = "RLRLL".parse()?;
    let class = canonicalize(&w);
    println!("\n{w} has matrix {:?}", matrix_of_word(&w));
    println!("canonical form {}, orbit {:?}", class.canonical, w.orbit().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("mirror class {}", class.mirror().canonical);
    Ok(())
}
