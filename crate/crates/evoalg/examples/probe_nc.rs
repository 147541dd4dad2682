// probe: target-driven completion on the appendix systems
use evoalg::freealg::*;
use evoalg::limits::Limits;
use std::time::Instant;

fn main() {
    for (sys, bound, targets) in [
        (AppendixSystem::A4, 4u32, vec![0u8, 1, 2, 3]),
        (AppendixSystem::A4, 6, vec![0, 1, 2, 3]),
        (AppendixSystem::A5ab, 4, vec![0, 1, 2, 3]),
        (AppendixSystem::A5ab, 6, vec![0, 1, 2, 3]),
        (AppendixSystem::A3, 4, vec![0, 2]),
        (AppendixSystem::A3, 6, vec![0, 2]),
    ] {
        let t0 = Instant::now();
        let (field, gens) = appendix_system(sys).unwrap();
        let tg: Vec<FreePoly> = targets.iter().map(|&l| FreePoly::letter(&field, l)).collect();
        let lim = Limits::default();
        match nc_groebner_until(&gens, bound, &lim, &tg) {
            Ok(gb) => {
                let all_in = tg.iter().all(|t| nc_normal_form(t, &gb).is_zero());
                println!(
                    "{:?} bound {}: {} elts, targets_in {}, {:?}",
                    sys,
                    bound,
                    gb.elements.len(),
                    all_in,
                    t0.elapsed()
                );
            }
            Err(e) => println!("{:?} bound {}: {} after {:?}", sys, bound, e, t0.elapsed()),
        }
    }
}
