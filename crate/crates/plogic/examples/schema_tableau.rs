//! The closed-form tableau for "conjunctive antecedent implies consequent".
//!
//! Understanding the inference schema removes the search entirely: with n
//! antecedents the compressed tableau has n + 2 worlds where the two-valued
//! one has 2^(n+1). The expansion check confirms nothing was lost.

use plogic::Tableau;

fn main() -> plogic::Result<()> {
    let schema = Tableau::conjunctive_mp(3)?;
    println!("three antecedents, {} worlds:", schema.world_count());
    print!("{}", schema.render());

    println!("\ngrowth of the two representations:");
    println!("{:>2} {:>10} {:>10}", "n", "schema", "two-valued");
    for n in 1..=6 {
        let schema = Tableau::conjunctive_mp(n)?;
        let enumerated = Tableau::enumerate(schema.sentences().to_vec(), n + 1)?;
        println!(
            "{n:>2} {:>10} {:>10}",
            schema.world_count(),
            enumerated.world_count()
        );
        // The n + 2 worlds expand to exactly the enumerated set.
        assert_eq!(schema.expand()?.world_set(), enumerated.world_set());
    }
    Ok(())
}
