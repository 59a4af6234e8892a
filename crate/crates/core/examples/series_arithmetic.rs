//! Truncated series over Z and Z/mZ: Euler products, inverses, dissections.

use overcolored::qseries::{euler_f, phi};
use overcolored::{IntSeries, Integers, ResidueRing};

fn main() {
    let order = 30;
    let f1 = euler_f(1, order);
    println!("f1      = {:?}", f1.to_bigints());

    // 1/f1 counts partitions
    let p = f1.invert().unwrap();
    println!("1/f1    = {:?}", p.to_bigints());

    // f2/f1^2 counts overpartitions; its odd part
    let over: IntSeries = euler_f(2, order).mul(&f1.pow(-2).unwrap()).unwrap();
    println!("odd part of f2/f1^2 = {:?}", over.extract_ap(1, 2).to_bigints());

    let m = ResidueRing::new(5).unwrap();
    let phi5 = phi(&m, 1, order).pow(5).unwrap();
    let phi_q5 = phi(&m, 5, order);
    println!("phi(q)^5 = phi(q^5) mod 5: {}", phi5 == phi_q5);
    println!("phi(q)^2 over Z = {:?}", phi(&Integers, 1, 20).pow(2).unwrap().to_bigints());
}
