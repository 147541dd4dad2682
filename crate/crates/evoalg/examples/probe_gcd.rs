// microbenchmark: fraction arithmetic in Q(a,l1..l4)
use evoalg::Field;
use std::time::Instant;

fn main() {
    let f = Field::parse("Q(a,l1,l2,l3,l4)").unwrap();
    let a = f.param("a").unwrap();
    let l: Vec<_> = (1..=4).map(|i| f.param(&format!("l{i}")).unwrap()).collect();
    let num = l[0].mul(&l[1]).add(&l[2].mul(&l[2]));
    let den = l[3].mul(&l[0].sub(&l[1]));
    let fr = num.checked_div(&den).unwrap();
    let fr2 = a.mul(&l[2]).sub(&l[3]).checked_div(&l[0].add(&l[1])).unwrap();

    let t0 = Instant::now();
    let mut acc = fr.clone();
    for _ in 0..20 {
        acc = acc.mul(&fr2).add(&fr);
    }
    println!(
        "20 mul+add chained: {:?} (serial len {})",
        t0.elapsed(),
        acc.serial().len()
    );

    let t1 = Instant::now();
    let mut p = fr.add(&fr2);
    for i in 0..3 {
        p = p.mul(&p);
        println!("  square {} at {:?} len {}", i, t1.elapsed(), p.serial().len());
    }

    // inverses force nontrivial gcd checks
    let t2 = Instant::now();
    let inv = acc.inv().unwrap();
    let back = inv.mul(&acc);
    println!("inv+mul round trip: {:?} (is_one: {})", t2.elapsed(), back.is_one());
}
