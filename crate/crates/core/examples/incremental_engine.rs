// Feeds facts to a Horn program in batches and compares the running least model with a
// from-scratch computation after every batch.
//
// ```text
// cargo run --example incremental_engine
// ```

use std::error::Error;

use wfs::{least_model, AtomId, AtomSet, DerivationEngine, HornProgram};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // 0 :- 1, 2.   1 :- 3.   2 :- 3, 4.   5 :- 0.   6.
    let mut q = HornProgram::new(7);
    let a = AtomId;
    q.push(a(0), vec![a(1), a(2)]);
    q.push(a(1), vec![a(3)]);
    q.push(a(2), vec![a(3), a(4)]);
    q.push(a(5), vec![a(0)]);
    q.push(a(6), vec![]);

    let mut engine = DerivationEngine::new(&q);
    let mut facts: Vec<AtomId> = Vec::new();
    for batch in [vec![], vec![a(3)], vec![a(4)]] {
        let new = engine.assert_facts(batch.iter().copied());
        facts.extend(&batch);
        let residual = engine.residual(&q);
        println!(
            "asserted {:?}: newly derived {:?}, {} residual rules, {} counter steps so far",
            batch,
            new,
            residual.rules.len(),
            engine.work()
        );
        let mut batch_q = q.clone();
        for &f in &facts {
            batch_q.push(f, vec![]);
        }
        let incremental: AtomSet = engine.derived().collect();
        assert_eq!(incremental, least_model(&batch_q));
    }
    assert_eq!(engine.n_derived(), 7);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
