use hiz_wkb_core::field::Rat;
use hiz_wkb_core::wkb::{Engine, GaugePolicy};

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn ri(n: i64) -> Rat {
    rat(n, 1)
}

struct Ctx {
    k: Rat,
    a: Rat,
}

impl Ctx {
    fn p3(&self) -> Rat {
        self.k.clone()
            * (self.k.clone() + self.a.clone())
            * (self.k.clone() + ri(2) * self.a.clone())
    }
    fn p4(&self) -> Rat {
        self.p3() * (self.k.clone() + ri(3) * self.a.clone())
    }
    fn km(&self, m: i64) -> Rat {
        self.k.clone() - ri(m)
    }
    fn ka1(&self) -> Rat {
        self.k.clone() + self.a.clone() - ri(1)
    }
}

fn closed_b(c: &Ctx, name: &str) -> Option<Rat> {
    let a = c.a.clone();
    let one = ri(1);
    let v = match name {
        "I" => -one.clone() / c.k.clone(),
        "\u{39b}" => one.clone() / (c.k.clone() * (c.k.clone() + a.clone())),
        "I,I" => {
            (one.clone() + a.clone() / c.km(1))
                / (c.k.clone() * (c.k.clone() + a.clone()))
        }
        "II" => {
            (one.clone() + a.clone())
                / (ri(2) * c.k.clone() * (c.k.clone() + a.clone()))
        }
        "Y" => -one.clone() / c.p3(),
        "\u{39b},I" => -(one.clone() + ri(2) * a.clone() / c.km(1)) / c.p3(),
        "III" => {
            -(one.clone() + a.clone()) * (one.clone() + ri(2) * a.clone())
                / (ri(6) * c.p3())
        }
        "\u{2220}\u{332}" => -(one.clone() + a.clone()) / (ri(2) * c.p3()),
        "I,I,I" => {
            -(one.clone()
                + ri(3) * a.clone() / c.km(1)
                + ri(2) * a.clone() * a.clone() / (c.km(1) * c.km(2)))
                / c.p3()
        }
        "II,I" => {
            -(one.clone() + a.clone()) * (one.clone() + ri(2) * a.clone() / c.km(1))
                / (ri(2) * c.p3())
        }
        "N" => -(one.clone() + a.clone() / c.km(1)) / c.p3(),
        "\u{25b3}" => -(one.clone() - a.clone() * a.clone() / c.km(1)) / c.p3(),
        "X" => one.clone() / c.p4(),
        "Y,I" => (one.clone() + ri(3) * a.clone() / c.km(1)) / c.p4(),
        "\u{39b},\u{39b}" => {
            (one.clone() + a.clone() / c.ka1())
                * (one.clone() + ri(3) * a.clone() / c.km(1))
                / c.p4()
        }
        "\u{39b},I,I" => {
            (one.clone() + ri(7) * a.clone() / c.km(1)
                + ri(6) * a.clone() * a.clone() / (c.km(1) * c.km(2))
                - ri(2) * a.clone() / c.ka1()
                - ri(2) * a.clone() * a.clone() / (c.km(2) * c.ka1()))
                / c.p4()
        }
        "I,I,I,I" => {
            let a2 = a.clone() * a.clone();
            let a3 = a2.clone() * a.clone();
            let a4 = a3.clone() * a.clone();
            (one.clone()
                + ri(6) * a.clone() / c.ka1()
                + ri(9) * a2.clone() / (c.km(1) * c.ka1())
                + ri(8) * a2.clone() / (c.km(2) * c.ka1())
                + ri(25) * a3.clone() / (c.km(1) * c.km(3) * c.ka1())
                - ri(8) * a3.clone() / (c.km(2) * c.km(3) * c.ka1())
                + ri(6) * a4.clone() / (c.km(1) * c.km(2) * c.km(3) * c.ka1()))
                / c.p4()
        }
        "\u{2291}" => {
            (one.clone() + a.clone()) * (one.clone() + ri(2) * a.clone() / c.km(1))
                / (ri(2) * c.p4())
        }
        "\u{226a}" => {
            (one.clone() + a.clone()) * (one.clone() + a.clone()) / (ri(4) * c.p4())
        }
        "\u{22a8}" => (one.clone() + a.clone()) / (ri(2) * c.p4()),
        "\u{2220}\u{332}\u{332}" => {
            (one.clone() + a.clone()) * (one.clone() + ri(2) * a.clone())
                / (ri(6) * c.p4())
        }
        "IIII" => {
            (one.clone() + a.clone())
                * (one.clone() + ri(2) * a.clone())
                * (one.clone() + ri(3) * a.clone())
                / (ri(24) * c.p4())
        }
        "\u{2220}\u{332},I" => {
            (one.clone() + a.clone()) * (one.clone() + ri(3) * a.clone() / c.km(1))
                / (ri(2) * c.p4())
        }
        "\u{2220}\u{2220}" => (one.clone() + ri(2) * a.clone() / c.km(1)) / c.p4(),
        "\u{39b},II" => {
            (one.clone() + a.clone())
                * (one.clone() + a.clone() / c.ka1())
                * (one.clone() + ri(3) * a.clone() / c.km(1))
                / (ri(2) * c.p4())
        }
        "M" => {
            (one.clone() + a.clone() / c.ka1())
                * (one.clone() + ri(2) * a.clone() / c.km(1))
                / c.p4()
        }
        "III,I" => {
            (one.clone() + a.clone())
                * (one.clone() + ri(2) * a.clone())
                * (one.clone() + ri(3) * a.clone() / c.km(1))
                / (ri(6) * c.p4())
        }
        "\u{2210}\u{332}" => {
            (one.clone() + a.clone()) * (one.clone() + a.clone() / c.km(1))
                / (ri(2) * c.p4())
        }
        "\u{25b3}\u{332}" => {
            (one.clone() + a.clone())
                * (one.clone() - ri(2) * a.clone() * a.clone() / c.km(1))
                / (ri(2) * c.p4())
        }
        "\u{22b5}" => {
            (one.clone() - a.clone() * (a.clone() - one.clone()) / c.km(1)) / c.p4()
        }
        "II,II" => {
            (one.clone() + a.clone())
                * ((one.clone() + a.clone())
                    * (one.clone() + ri(4) * a.clone() / c.km(1))
                    + ri(2)
                        * a.clone()
                        * a.clone()
                        * (ri(2) + a.clone())
                        / (c.km(1) * c.ka1()))
                / (ri(4) * c.p4())
        }
        "\u{25a1}" => (one.clone() + ri(2) * a.clone() / c.km(1)) / c.p4(),
        "II,I,I" => {
            (one.clone() + a.clone()) / ri(2) * closed_b(c, "\u{39b},I,I").unwrap()
        }
        "N,I" => {
            let a2 = a.clone() * a.clone();
            (one.clone() + ri(8) * a.clone() / c.km(1) - ri(4) * a.clone() / c.km(2)
                - a2.clone() / (c.ka1() * c.km(2))
                + a.clone()
                    * (one.clone() + a.clone())
                    * (ri(4) * c.k.clone() + ri(3) * a.clone() - ri(4))
                    / (c.km(1) * c.km(2) * c.ka1()))
                / c.p4()
        }
        "\u{25b3},I" => {
            let a2 = a.clone() * a.clone();
            (one.clone() - a.clone() * (a.clone() - ri(3)) / c.ka1()
                - a2.clone() * (ri(4) * a.clone() - ri(3)) / (c.km(2) * c.ka1())
                - a2.clone()
                    * (ri(3) * a2.clone() - ri(2) * a.clone() + ri(3))
                    / (c.km(1) * c.km(2) * c.ka1()))
                / c.p4()
        }
        _ => return None,
    };
    Some(v)
}

fn conjectured(c: &Ctx, name: &str) -> Option<Rat> {
    let a = c.a.clone();
    let one = ri(1);
    match name {
        "\u{25a1}" => Some(
            (one.clone()
                + ri(2) * a.clone() / c.km(1)
                + a.clone() * a.clone() * (one.clone() + a.clone())
                    / (c.km(1) * c.ka1()))
                / c.p4(),
        ),
        "II,II" => Some(
            (one.clone() + a.clone())
                * (one.clone() + a.clone())
                * (one.clone()
                    + ri(4) * a.clone() / c.km(1)
                    + ri(2) * a.clone() * a.clone() / (c.km(1) * c.ka1()))
                / (ri(4) * c.p4()),
        ),
        _ => None,
    }
}

fn main() {
    let mut engine = Engine::new();
    for k in [5usize, 6, 7] {
        for (an, ad) in [(3i64, 1i64), (1, 2), (2, 1), (-1, 2)] {
            let alpha = rat(an, ad);
            let beta = ri(2) - ri(2) / alpha.clone();
            let c = Ctx {
                k: ri(k as i64),
                a: alpha.clone(),
            };
            println!("== k={k} alpha={an}/{ad} ==");
            match engine.tau_coefficients(k, &alpha, 4, GaugePolicy::PaperDefault) {
                Err(e) => println!("  jack ERROR: {e}"),
                Ok(t) => {
                    let mut bad = 0;
                    for (name, v) in &t.entries {
                        let printed = closed_b(&c, name).unwrap_or_else(|| ri(0));
                        if *v != printed {
                            bad += 1;
                            let conj = conjectured(&c, name);
                            let tag = match &conj {
                                Some(x) if x == v => " == conjectured",
                                Some(_) => " != conjectured!!",
                                None => "",
                            };
                            println!("  jack [{name}] engine {v} printed {printed}{tag}");
                        }
                    }
                    if bad == 0 {
                        println!("  jack: all {} entries match printed", t.entries.len());
                    }
                }
            }
            match engine.residual_coefficients(k, &beta, 4, GaugePolicy::PaperDefault) {
                Err(e) => println!("  residual ERROR: {e}"),
                Ok(t) => {
                    let mut bad = 0;
                    for (name, v) in &t.entries {
                        let printed = closed_b(&c, name).unwrap_or_else(|| ri(0));
                        if *v != printed {
                            bad += 1;
                            let conj = conjectured(&c, name);
                            let tag = match &conj {
                                Some(x) if x == v => " == conjectured",
                                Some(_) => " != conjectured!!",
                                None => "",
                            };
                            println!(
                                "  residual [{name}] engine {v} printed {printed}{tag}"
                            );
                        }
                    }
                    if bad == 0 {
                        println!(
                            "  residual: all {} entries match printed",
                            t.entries.len()
                        );
                    }
                }
            }
        }
    }
}
