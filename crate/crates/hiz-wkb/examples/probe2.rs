use hiz_wkb_core::field::{frac, rat, Rat};
use hiz_wkb_core::oracle::phi_series_beta4;
use hiz_wkb_core::wkb::Engine;
use num_traits::ToPrimitive;

fn den(k: i64, scale: i64, roots: &[(i64, u32)]) -> Rat {
    let mut d = rat(scale);
    for &(r, m) in roots {
        for _ in 0..m {
            d = d * rat(k - r);
        }
    }
    d
}

fn num_eval(k: i64, coeffs: &[i64]) -> Rat {
    let mut acc = rat(0);
    for &c in coeffs.iter().rev() {
        acc = acc * rat(k) + rat(c);
    }
    acc
}

fn main() {
    let mut e = Engine::new();
    let b6: &[(i64, u32)] = &[(1, 2), (2, 3), (3, 4), (4, 2), (5, 2)];
    let b6k: &[(i64, u32)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (5, 2)];
    let o45: &[(i64, u32)] = &[(0, 1), (1, 2), (2, 3), (3, 2)];
    let o5d: &[(i64, u32)] = &[(1, 2), (2, 3), (3, 2), (4, 2)];
    type Block = (
        &'static [u32],
        &'static [u32],
        &'static [i64],
        i64,
        &'static [(i64, u32)],
    );
    let goldens: &[Block] = &[
        (&[2], &[2], &[-1], 2, &[(1, 2)]),
        (&[3], &[3], &[0, 1], 3, &[(1, 2), (2, 2)]),
        (&[4], &[4], &[0, 0, 2, 4, -2], 8, o45),
        (&[4], &[2, 2], &[0, 6, -12, 4], 8, o45),
        (&[2, 2], &[4], &[0, 6, -12, 4], 8, o45),
        (&[2, 2], &[2, 2], &[18, -36, 30, -10, 1], 8, o45),
        (&[5], &[5], &[0, 0, -5, -2, 1], 5, o5d),
        (&[5], &[3, 2], &[0, -2, 4, -1], 1, o5d),
        (&[3, 2], &[5], &[0, -2, 4, -1], 1, o5d),
        (&[3, 2], &[3, 2], &[24, -48, 48, -14, 1], 6, o5d),
        (&[6], &[6], &[0, -8, 44, 135, -76, -6, 8, -1], 6, b6),
        (&[6], &[4, 2], &[-20, 70, -61, -29, 38, -11, 1], 1, b6),
        (&[4, 2], &[6], &[-20, 70, -61, -29, 38, -11, 1], 1, b6),
        (
            &[4, 2],
            &[4, 2],
            &[-2400, 3600, -1740, -240, 1099, -708, 196, -24, 1],
            8,
            b6k,
        ),
        (&[6], &[3, 3], &[80, -200, 251, -284, 154, -36, 3], 6, b6),
        (&[3, 3], &[6], &[80, -200, 251, -284, 154, -36, 3], 6, b6),
        (&[3, 3], &[4, 2], &[400, -200, -525, 690, -322, 66, -5], 2, b6k),
        (&[4, 2], &[3, 3], &[400, -200, -525, 690, -322, 66, -5], 2, b6k),
        (
            &[3, 3],
            &[3, 3],
            &[-2400, -1200, 7890, -8310, 4461, -1416, 264, -26, 1],
            18,
            b6k,
        ),
        (&[6], &[2, 2, 2], &[240, -769, 882, -424, 90, -7], 6, b6),
        (&[2, 2, 2], &[6], &[240, -769, 882, -424, 90, -7], 6, b6),
        (
            &[2, 2, 2],
            &[4, 2],
            &[4800, -11180, 11480, -6775, 2384, -481, 50, -2],
            8,
            b6k,
        ),
        (
            &[4, 2],
            &[2, 2, 2],
            &[4800, -11180, 11480, -6775, 2384, -481, 50, -2],
            8,
            b6k,
        ),
        (&[2, 2, 2], &[3, 3], &[-1200, 2270, -1725, 640, -115, 8], 3, b6k),
        (&[3, 3], &[2, 2, 2], &[-1200, 2270, -1725, 640, -115, 8], 3, b6k),
        (
            &[2, 2, 2],
            &[2, 2, 2],
            &[-25200, 60960, -64030, 38192, -13976, 3170, -431, 32, -1],
            48,
            b6k,
        ),
    ];
    for k in [6i64, 7] {
        let terms = phi_series_beta4(&mut e, k as usize, 6).unwrap();
        println!("k={k}: {} engine terms", terms.len());
        for t in &terms {
            let golden = goldens
                .iter()
                .find(|(l, m, _, _, _)| *l == &t.lambda[..] && *m == &t.mu[..]);
            match golden {
                None => println!("  EXTRA engine block {:?} {:?} = {}", t.lambda, t.mu, t.coeff),
                Some((_, _, num, scale, roots)) => {
                    let want = num_eval(k, num) / den(k, *scale, roots);
                    if want != t.coeff {
                        println!(
                            "  MISMATCH {:?} {:?}: engine {} golden {} ratio {:?}",
                            t.lambda,
                            t.mu,
                            t.coeff,
                            want,
                            (t.coeff.clone() / want.clone()).to_f64()
                        );
                    }
                }
            }
        }
        for (l, m, num, scale, roots) in goldens {
            if !terms
                .iter()
                .any(|t| &t.lambda[..] == *l && &t.mu[..] == *m)
            {
                let want = num_eval(k, num) / den(k, *scale, roots);
                println!("  MISSING block {:?} {:?} golden {}", l, m, want);
            }
        }
    }
    let _ = frac(1, 2);
}
