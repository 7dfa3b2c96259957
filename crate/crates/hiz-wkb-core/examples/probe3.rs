use hiz_wkb_core::field::{frac, rat};
use hiz_wkb_core::polyring::{MPoly, Vars};
use hiz_wkb_core::wkb::{Engine, GaugePolicy};

fn main() {
    let mut e = Engine::new();
    let vars = Vars::new(3);
    let t12 = vars.tau(1, 2);
    let t13 = vars.tau(1, 3);
    let t23 = vars.tau(2, 3);
    let e1 = t12.clone() + t13.clone() + t23.clone();
    let e2 = t12.clone() * t13.clone() + t12.clone() * t23.clone() + t13.clone() * t23.clone();
    let e3 = t12 * t13 * t23;
    let closed = MPoly::one(vars.nvars())
        + e1.scale(&frac(-1, 3))
        + e2.scale(&frac(1, 6))
        + e3.scale(&frac(-1, 12));
    let f = e.zonal_series(3, &rat(-1), 4).unwrap();
    let d = f - closed;
    println!("residue terms: {}", d.terms.len());
    for (m, c) in d.terms.iter().take(12) {
        println!("  {:?} -> {}", m, c);
    }
    let s2x = vars.centered_power_sum(2, true);
    let s2l = vars.centered_power_sum(2, false);
    let s22 = s2x.clone() * s2x.clone() * s2l.clone() * s2l.clone();
    for num in [-24i64, 24, -48, 48, -12, 12, -6, 6, -3, 3, -1, 1, -2, 2, -8, 8] {
        let probe = d.clone() + s22.scale(&frac(num, 24));
        if probe.is_zero() {
            println!("residue = {}|/24 * (s2 s2)^2", -num);
            return;
        }
    }
    println!("residue is not a pure (s2x s2l)^2 multiple");
    for k in 5..=8usize {
        for a in [rat(-1), frac(-1, 2)] {
            match e.tau_coefficients(k, &a, 4, GaugePolicy::PaperDefault) {
                Ok(_) => println!("k={k} alpha={a}: ok"),
                Err(err) => println!("k={k} alpha={a}: {err}"),
            }
        }
    }
}
