//! Character table of S_4 and a few Kostka numbers.

use heis::symfun::{kostka, CharacterTable};
use heis::{Composition, Partition};

fn main() {
    let table = CharacterTable::of(4).expect("small degree");
    print!("{:>10}", "");
    for rho in table.partitions.iter() {
        print!("{:>10}", rho.to_string());
    }
    println!();
    for lambda in table.partitions.iter() {
        print!("{:>10}", lambda.to_string());
        for chi in table.row(lambda) {
            print!("{chi:>10}");
        }
        println!();
    }

    let lambda: Partition = "3,1".parse().unwrap();
    for content in ["2,1,1", "1,1,1,1", "1,2,1"] {
        let mu: Composition = content.parse().unwrap();
        println!("K({lambda}; {mu}) = {}", kostka(&lambda, &mu).unwrap());
    }
}
