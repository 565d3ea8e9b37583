//! Writes the first N ordinates of zeta zeros on the critical line, found by
//! sign changes of Xi and refined to full precision.
//!
//! cargo run --release --example gen_zeros -- 100 > data/zeros100.txt

use xitheta::zeros::{format_zeros, scan_zeros};

fn main() {
    let count: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(100);
    // widen the scan until it holds enough sign changes
    let mut t_max = 60.0;
    loop {
        let zeros = scan_zeros(t_max, 0.05);
        if zeros.len() >= count {
            print!("{}", format_zeros(&zeros[..count]));
            return;
        }
        t_max *= 1.5;
    }
}
