//! Partitions, semistandard tableaux and the column operators used by the recursion.
use hlp::{Filling, Partition};

fn main() {
    let lam = Partition::parse("2,1", 3).unwrap();
    let ssyt = Filling::enumerate_ssyt(&lam);
    println!("B({lam}) has {} semistandard tableaux", ssyt.len());
    for t in &ssyt {
        println!("  {:<6} weight {}", t.ytableau(), t.weight());
    }

    let t = Filling::parse_rows("1,3/2", 3).unwrap();
    println!(
        "{t}: columns {:?}, semistandard {}",
        t.columns(),
        t.is_semistandard()
    );
    for (k, c) in (1..=t.num_columns()).map(|k| (k, t.column(k))) {
        println!(
            "  column {k} from the right: {c}, sign at j=1: {}",
            c.sign(1)
        );
    }
    let moved = t.omega(2, 1);
    println!(
        "omega(2, 1) of {} is {} (semistandard {})",
        t.ytableau(),
        moved.ytableau(),
        moved.is_semistandard()
    );

    let total: usize = Partition::all_up_to(4, 3)
        .iter()
        .map(|p| Filling::enumerate_ssyt(p).len())
        .sum();
    println!("{total} semistandard tableaux with at most 4 boxes and entries in [3]");
}
