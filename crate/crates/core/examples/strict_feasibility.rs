//! Exact feasibility of strict homogeneous inequality systems.

use heis::ratfeas::{as_integers, StrictSystem};

fn main() {
    let mut sys = StrictSystem::new(3);
    sys.push(vec![1, -1, 0]);
    sys.push(vec![0, 1, -1]);
    sys.push(vec![-1, 0, 2]);
    match sys.solve().unwrap() {
        Some(z) => println!("integral solution {:?}", as_integers(&z).unwrap()),
        None => println!("infeasible"),
    }

    let mut cycle = StrictSystem::new(2);
    cycle.push(vec![1, -1]);
    cycle.push(vec![-1, 1]);
    println!("x > y and y > x: {:?}", cycle.solve().unwrap());
}
