//! Certified comparison of radical expressions with exact tie detection.

use nefcalc::certified::{compare, CertifiedReal};

fn main() -> nefcalc::Result<()> {
    let two = CertifiedReal::int(2);
    let three = CertifiedReal::int(3);

    let c = compare(&(two.sqrt() + three.sqrt()), &CertifiedReal::int(10).sqrt(), 4096)?;
    println!("sqrt 2 + sqrt 3 vs sqrt 10: {} after {} bits", c.verdict, c.bits_used);

    let c = compare(&(two.sqrt() * three.sqrt()), &CertifiedReal::int(6).sqrt(), 4096)?;
    println!("sqrt 2 sqrt 3 vs sqrt 6: {} (exact certificate: {})", c.verdict, c.exact);

    let x = CertifiedReal::int(8).pow(2, 3) - CertifiedReal::int(4);
    println!("8^(2/3) - 4 encloses to {}", x.enclose(64)?);

    let golden = (CertifiedReal::int(1) + CertifiedReal::int(5).sqrt()) / two;
    println!("golden ratio in {}", golden.enclose(32)?);
    Ok(())
}
