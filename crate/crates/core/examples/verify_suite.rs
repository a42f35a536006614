//! Runs every property suite on a small sample and summarizes the certificates.

use relaxcolor::verify::{run_suite, Suite, SuiteConfig};

fn main() -> relaxcolor::Result<()> {
    let cfg = SuiteConfig {
        graphs: 8,
        trials: 100,
        max_n: 4,
        ..Default::default()
    };
    let certs = run_suite(Suite::All, &cfg)?;
    let mut by_property = std::collections::BTreeMap::<&str, (usize, usize)>::new();
    for c in &certs {
        let entry = by_property.entry(&c.property).or_default();
        entry.0 += 1;
        entry.1 += usize::from(c.holds);
    }
    for (property, (total, held)) in by_property {
        println!("{property:<28} {held}/{total}");
    }
    if let Some(bad) = certs.iter().find(|c| !c.holds) {
        println!("first failure: {}", serde_json::to_string(bad).unwrap());
    }
    Ok(())
}
