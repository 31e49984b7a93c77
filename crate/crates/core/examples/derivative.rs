//! The first-order coefficient of vol(P + tQ) equals d V(P, ..., P, Q).

use nefcalc::generate::Generator;
use nefcalc::mixedvol;
use nefcalc::rational::int;

fn main() -> nefcalc::Result<()> {
    let mut g = Generator::new(2024);
    for d in 2..=3 {
        let (p, q) = g.pair(d, 8)?;
        let poly = mixedvol::volume_polynomial(&p, &q)?;
        let mut args = vec![p.clone(); d - 1];
        args.push(q);
        let dv = mixedvol::mixed_volume(&args)? * int(d as i64);
        println!("d = {d}: t-coefficient {} vs d V = {dv} -> {}", poly[1], poly[1] == dv);
    }
    Ok(())
}
