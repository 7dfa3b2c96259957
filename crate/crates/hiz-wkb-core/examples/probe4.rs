use hiz_wkb_core::field::{frac, rat, Rat};
use hiz_wkb_core::jet::{permutations, Jet};
use hiz_wkb_core::polyring::{MPoly, MPolyQ, Vars};
use hiz_wkb_core::taugraph::graph_by_name;
use hiz_wkb_core::wkb::{Engine, GaugePolicy};
use num_traits::Zero;

fn solve_exact(cols: &[MPolyQ], rhs: &MPolyQ) -> Option<Vec<Rat>> {
    let mut monos: std::collections::BTreeSet<_> = rhs.terms.keys().cloned().collect();
    for c in cols {
        monos.extend(c.terms.keys().cloned());
    }
    let n = cols.len();
    let mut a: Vec<Vec<Rat>> = Vec::new();
    for m in &monos {
        let mut row: Vec<Rat> = cols.iter().map(|c| c.coeff(m)).collect();
        row.push(rhs.coeff(m));
        a.push(row);
    }
    let rows = a.len();
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = rat(1) / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=n {
                    a[i][j] = a[i][j].clone() - f.clone() * a[r][j].clone();
                }
            }
        }
        piv.push(c);
        r += 1;
    }
    for i in r..rows {
        if !a[i][n].is_zero() {
            return None;
        }
    }
    let mut sol = vec![rat(0); n];
    for (i, &c) in piv.iter().enumerate() {
        sol[c] = a[i][n].clone();
    }
    Some(sol)
}

fn main() {
    let mut e = Engine::new();

    println!("-- k=8 generic alpha --");
    match e.tau_coefficients(8, &rat(2), 4, GaugePolicy::PaperDefault) {
        Ok(_) => println!("k=8 alpha=2: ok"),
        Err(err) => println!("k=8 alpha=2: {err}"),
    }

    println!("-- k=3 residue decomposition --");
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
    let f4 = e.zonal_series(3, &rat(-1), 4).unwrap();
    let d = f4 - closed.clone();
    let names = ["IIII", "\u{2220}\u{332}\u{332}", "\u{226a}", "\u{25b3}\u{332}", "\u{22a8}"];
    let mut cols = Vec::new();
    let mut used = Vec::new();
    for n in names {
        let g = graph_by_name(n).unwrap();
        println!("[{n}] vertices={} order={}", g.vertices(), g.order());
        if g.vertices() as usize <= 3 {
            cols.push(g.orbit_sum(3));
            used.push(n);
        }
    }
    match solve_exact(&cols, &d) {
        Some(sol) => {
            for (n, c) in used.iter().zip(&sol) {
                println!("  d coefficient of [{n}] = {c}");
            }
        }
        None => println!("  d is NOT in the span of <=3-vertex order-4 orbit sums"),
    }

    println!("-- numeric-path limit --");
    for n in [1000i64, 1_000_000] {
        let a = rat(-1) + frac(1, n);
        let f = e.zonal_series(3, &a, 4).unwrap();
        let da = f - closed.clone();
        let (m, c) = da.terms.iter().next().unwrap();
        let cf: f64 = {
            use num_traits::ToPrimitive;
            c.to_f64().unwrap()
        };
        println!("  alpha=-1+1/{n}: first term {:?} -> {:.10}", m, cf);
    }
    println!("  target -1/108 = {:.10}", -1.0 / 108.0);

    println!("-- perm-null check of the order-4/5 remainders --");
    let f5 = e.zonal_series(3, &rat(-1), 5).unwrap();
    let d5 = {
        let mut x = f5 - closed.clone();
        let v = vars;
        x.retain(|m| v.x_degree(m) == 5);
        x
    };
    println!("  order-5 remainder terms: {}", d5.terms.len());
    let spectra: [([Rat; 3], [Rat; 3]); 2] = [
        (
            [frac(3, 10), frac(1, 10), frac(-1, 5)],
            [frac(1, 4), rat(0), frac(-3, 20)],
        ),
        (
            [rat(2), frac(1, 3), frac(-5, 7)],
            [frac(7, 5), frac(-2, 3), frac(1, 9)],
        ),
    ];
    for (which, rem) in [("order4", &d), ("order5", &d5)] {
        for (si, (x, l)) in spectra.iter().enumerate() {
            let mut total = Jet::zero(12);
            for perm in permutations(3) {
                let pl: Vec<Rat> = perm.iter().map(|&s| l[s].clone()).collect();
                let mut pairing = rat(0);
                for i in 0..3 {
                    pairing = pairing + x[i].clone() * pl[i].clone();
                }
                let mut tprod = rat(1);
                for i in 0..3 {
                    for j in (i + 1)..3 {
                        tprod = tprod
                            * (x[i].clone() - x[j].clone())
                            * (pl[i].clone() - pl[j].clone());
                    }
                }
                let mut point = vec![rat(0); 6];
                for i in 0..3 {
                    point[i] = x[i].clone();
                    point[3 + i] = pl[i].clone();
                }
                let dv = rem.eval(&point);
                let w = dv / (tprod.clone() * tprod.clone() * tprod);
                total = total.add(&Jet::exp_linear(12, &pairing).scale(&w));
            }
            let null = total.coeffs.iter().all(|c| c.is_zero());
            println!("  {which} spectrum {si}: perm-sum identically zero: {null}");
        }
    }
}
