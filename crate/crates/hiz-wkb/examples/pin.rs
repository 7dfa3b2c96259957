use hiz_wkb_core::field::{frac, rat, Rat};
use hiz_wkb_core::jet::{permutations, Jet};
use num_traits::{ToPrimitive, Zero};

use hiz_wkb::mc::{mc_haar_integral, Group};
use hiz_wkb::SpectrumPair;

fn taus(x: &[Rat], l: &[Rat]) -> Vec<Rat> {
    let k = x.len();
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            out.push((x[i].clone() - x[j].clone()) * (l[i].clone() - l[j].clone()));
        }
    }
    out
}

// f for k=3 beta=4: 1 - (1/3) St + (1/6) (t12 t23 + t23 t13 + t13 t12) - (1/12) t t t
fn f_jet(order: usize, t: &[Rat]) -> Jet {
    let mut coeffs = vec![Rat::zero(); order + 1];
    coeffs[0] = rat(1);
    coeffs[1] = -frac(1, 3) * (t[0].clone() + t[1].clone() + t[2].clone());
    coeffs[2] = frac(1, 6)
        * (t[0].clone() * t[2].clone() + t[2].clone() * t[1].clone() + t[1].clone() * t[0].clone());
    coeffs[3] = -frac(1, 12) * t[0].clone() * t[1].clone() * t[2].clone();
    Jet { order, coeffs }
}

// Limit of the k=3 beta=4 permutation sum as X -> 0 (coefficient of t^9).
fn p4_zero_limit(x0: &[Rat], l: &[Rat]) -> Rat {
    let order = 12usize;
    let mut total = Jet::zero(order);
    for sigma in permutations(3) {
        let ls: Vec<Rat> = sigma.iter().map(|&i| l[i].clone()).collect();
        let pair: Rat = (0..3).map(|i| x0[i].clone() * ls[i].clone()).sum();
        let t = taus(x0, &ls);
        let den: Rat = t.iter().fold(rat(1), |a, b| a * b.clone() * b.clone() * b.clone());
        let num = Jet::exp_linear(order, &pair).mul(&f_jet(order, &t));
        total = total.add(&num.scale(&(rat(1) / den)));
    }
    for n in 0..9 {
        assert!(total.coeffs[n].is_zero(), "pole survives at t^{}", n);
    }
    total.coeffs[9].clone()
}

fn p4_float(x: &[f64], l: &[f64]) -> f64 {
    let mut total = 0.0;
    for sigma in permutations(3) {
        let ls: Vec<f64> = sigma.iter().map(|&i| l[i]).collect();
        let pair: f64 = (0..3).map(|i| x[i] * ls[i]).sum();
        let t: Vec<f64> = {
            let mut out = Vec::new();
            for i in 0..3 {
                for j in i + 1..3 {
                    out.push((x[i] - x[j]) * (ls[i] - ls[j]));
                }
            }
            out
        };
        let st: f64 = t.iter().sum();
        let f = 1.0 - st / 3.0 + (t[0] * t[2] + t[2] * t[1] + t[1] * t[0]) / 6.0
            - t[0] * t[1] * t[2] / 12.0;
        let den: f64 = t.iter().map(|v| v * v * v).product();
        total += pair.exp() * f / den;
    }
    total
}

fn main() {
    let x0 = vec![frac(3, 10), frac(1, 10), frac(-1, 5)];
    let l1 = vec![frac(1, 4), rat(0), frac(-3, 20)];
    let l2 = vec![frac(1, 2), frac(-1, 3), frac(1, 9)];
    let c1 = p4_zero_limit(&x0, &l1);
    let c2 = p4_zero_limit(&x0, &l2);
    println!("P4(0) with lambda1 = {}", c1);
    println!("P4(0) with lambda2 = {}", c2);

    // Taylor coefficients of the normalized limit in the scale t of X.
    let order = 14usize;
    let mut total = Jet::zero(order);
    for sigma in permutations(3) {
        let ls: Vec<Rat> = sigma.iter().map(|&i| l1[i].clone()).collect();
        let pair: Rat = (0..3).map(|i| x0[i].clone() * ls[i].clone()).sum();
        let t = taus(&x0, &ls);
        let den: Rat = t.iter().fold(rat(1), |a, b| a * b.clone() * b.clone() * b.clone());
        let num = Jet::exp_linear(order, &pair).mul(&f_jet(order, &t));
        total = total.add(&num.scale(&(rat(1) / den)));
    }
    let a = total.coeffs[10].clone() / total.coeffs[9].clone();
    let b = total.coeffs[11].clone() / total.coeffs[9].clone();
    let c3 = total.coeffs[12].clone() / total.coeffs[9].clone();
    println!("A  = {} = {}", &a, a.to_f64().unwrap());
    println!("A * 150 = {}", a.clone() * rat(150));
    println!("B  = {} = {}", &b, b.to_f64().unwrap());
    println!("C3 = {}", c3.to_f64().unwrap());

    let xf = vec![0.3, 0.1, -0.2];
    let lf = vec![0.25, 0.0, -0.15];
    let p4 = p4_float(&xf, &lf);
    let norm = 1.0 / c1.to_f64().unwrap();
    println!("P4(x, l)         = {}", p4);
    println!("normalized value = {}", norm * p4);

    let s = SpectrumPair::new(xf.clone(), lf.clone()).unwrap();
    let half = SpectrumPair::new(xf.clone(), lf.iter().map(|v| v / 2.0).collect()).unwrap();
    let est2 = mc_haar_integral(&s, Group::Symplectic, 400_000, 12345);
    let est1 = mc_haar_integral(&half, Group::Symplectic, 400_000, 12345);
    println!("MC factor 2: mean = {} +- {}", est2.mean, est2.stderr);
    println!("MC factor 1: mean = {} +- {}", est1.mean, est1.stderr);

    // Unitary anchor at k=3: estimate vs det-ratio times 1!2!.
    let su = SpectrumPair::new(xf, lf).unwrap();
    let eu = mc_haar_integral(&su, Group::Unitary, 400_000, 999);
    let exact = hiz_wkb::beta2::hciz_beta2_exact(&su).unwrap();
    println!("MC unitary: {} +- {}", eu.mean, eu.stderr);
    println!("beta2 exact = {}, doubled = {}", exact, 2.0 * exact);
}
