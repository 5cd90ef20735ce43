//! Krawtchouk values, their split into even and odd column parts, and the
//! Delsarte coefficients of the Johnson scheme.

use cwbounds::combinatorics::{binomial, delsarte_q, krawtchouk, krawtchouk_minus, krawtchouk_plus};

fn main() -> cwbounds::Result<()> {
    let n = 8;
    println!("K_k({n}; x) for k, x = 0..={n}");
    for k in 0..=n {
        let row: Vec<String> = (0..=n).map(|x| format!("{:>5}", krawtchouk(k, n, x))).collect();
        println!("k={k}: {}", row.join(""));
    }
    let (k, x) = (3, 5);
    let (plus, minus) = (krawtchouk_plus(k, n, x), krawtchouk_minus(k, n, x));
    println!("P+ = {plus}, P- = {minus}, sum = {} = C({n},{k}) = {}", &plus + &minus, binomial(n, k));
    let (n, w) = (27, 13);
    for k in 1..=3 {
        let row: Vec<String> = (0..=4).map(|i| delsarte_q(k, i, n, w).map(|q| q.to_string())).collect::<Result<_, _>>()?;
        println!("q({k}, i, {n}, {w}) for i = 0..4: {}", row.join(", "));
    }
    Ok(())
}
