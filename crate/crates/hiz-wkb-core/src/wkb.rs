//! The coefficient engine: assembles the correction series at the dual
//! Jack parameter, solves for tau-graph coefficients by two independent
//! pipelines under a shared gauge, and evaluates large-k asymptotics.
//!
//! The series pipeline expands f = e^{-(1/k)Σ tau} Φ with Φ built from
//! the Jack tables, then matches the graded components against orbit
//! sums.  The residual pipeline never sees the series: it propagates the
//! pole-cancellation condition order by order, and the group parameter
//! enters only through the gauge.  Agreement of the two is the central
//! cross-check.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::field::{factorial, frac, rat, Rat};
use crate::jack::{symbolic_ctx, JackCtx, JackError};
use crate::linalg::{solve, SolveOutcome};
use crate::partitions::{format_partition, Partition};
use crate::polyring::{exp_truncated, mul_truncated, MPoly, MPolyQ, Mono, Vars};
use crate::ratfun::RatFun;
use crate::taugraph::{enumerate_tau_graphs, graph_names, KCoeff, TauGraph};
use crate::upoly::UPoly;

/// Largest order with a full graph dictionary.
pub const MAX_ORDER: u32 = 4;
/// Largest order for the paired-power-sum series itself.
pub const MAX_ORDER_PHI: u32 = 6;

#[derive(Clone, Debug, PartialEq)]
pub enum WkbError {
    Jack(JackError),
    OrderUnsupported { order: u32, max: u32 },
    /// The group parameter limit diverges for these series blocks.
    DivergentPartitionBlock { order: u32, pairs: Vec<(Partition, Partition)> },
    /// beta = 2 has no dual series parameter.
    SingularDuality,
    /// The linear system plus gauge still has free directions.
    UnderdeterminedBeyondGauge { order: u32, freedom: Vec<String> },
    /// The series rows contradict each other (an expansion bug).
    Inconsistent { order: u32 },
    /// The residual recursion degenerates at small k.
    ResidualSingular { k: usize, order: u32, factor: String },
    /// A gauge pin value has a vanishing denominator at these (k, alpha).
    GaugeSingular { name: String, factor: String },
}

impl From<JackError> for WkbError {
    fn from(e: JackError) -> Self {
        WkbError::Jack(e)
    }
}

impl core::fmt::Display for WkbError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            WkbError::Jack(e) => write!(f, "{}", e),
            WkbError::OrderUnsupported { order, max } => {
                write!(f, "order {} exceeds the supported maximum {}", order, max)
            }
            WkbError::DivergentPartitionBlock { order, pairs } => {
                write!(f, "divergent partition block at order {}:", order)?;
                for (l, m) in pairs {
                    write!(f, " {}x{}", format_partition(l), format_partition(m))?;
                }
                Ok(())
            }
            WkbError::SingularDuality => {
                write!(f, "singular duality point; use oracle beta2")
            }
            WkbError::UnderdeterminedBeyondGauge { order, freedom } => {
                write!(
                    f,
                    "underdetermined beyond gauge at order {}; free directions touch:",
                    order
                )?;
                for n in freedom {
                    write!(f, " [{}]", n)?;
                }
                Ok(())
            }
            WkbError::Inconsistent { order } => {
                write!(f, "inconsistent series match at order {} (internal error)", order)
            }
            WkbError::ResidualSingular { k, order, factor } => {
                write!(
                    f,
                    "residual system singular at k={}, order {}: vanishing denominator factor {}",
                    k, order, factor
                )
            }
            WkbError::GaugeSingular { name, factor } => {
                write!(
                    f,
                    "gauge pin for [{}] undefined: vanishing denominator factor {}",
                    name, factor
                )
            }
        }
    }
}

/// The dual series parameter alpha = 2/(2 - beta).
pub fn duality_map(beta: &Rat) -> Result<Rat, WkbError> {
    if *beta == rat(2) {
        return Err(WkbError::SingularDuality);
    }
    Ok(rat(2) / (rat(2) - beta.clone()))
}

/// Inverse of [`duality_map`]: beta = 2 - 2/alpha.
pub fn beta_of_alpha(alpha: &Rat) -> Rat {
    rat(2) - rat(2) / alpha.clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    JackDuality,
    Residual,
}

impl core::fmt::Display for Pipeline {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Pipeline::JackDuality => write!(f, "jack-duality"),
            Pipeline::Residual => write!(f, "residual"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GaugePolicy {
    #[default]
    PaperDefault,
}

impl GaugePolicy {
    pub fn identifier(&self) -> &'static str {
        match self {
            GaugePolicy::PaperDefault => "paper-default",
        }
    }
}

/// A solved coefficient table: one exact rational per embeddable graph,
/// all orders from 1 up to `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffTable {
    pub k: usize,
    pub alpha: Rat,
    pub beta: Rat,
    pub order: u32,
    pub pipeline: Pipeline,
    pub gauge: GaugePolicy,
    pub entries: BTreeMap<String, Rat>,
}

impl CoeffTable {
    pub fn entry(&self, name: &str) -> Option<&Rat> {
        self.entries.get(name)
    }
}

/// One term of the paired-power-sum series Φ: the scalar multiplying
/// `s_lambda(x centered) s_mu(lambda centered)`, symbolic in alpha.
pub struct PhiScalar {
    pub lambda: Partition,
    pub mu: Partition,
    pub scalar: RatFun,
}

/// The engine caches the symbolic Jack tables it builds.
pub struct Engine {
    sym: JackCtx<RatFun>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new()
    }
}

impl Engine {
    pub fn new() -> Self {
        Engine { sym: symbolic_ctx() }
    }

    /// The Φ scalars through the given order, symbolic in alpha, at fixed
    /// spectrum dimension k.  Partitions containing a part 1 drop out
    /// because the centered power sum s_1 vanishes.
    pub fn phi_scalars(&mut self, k: usize, order: u32) -> Result<Vec<PhiScalar>, WkbError> {
        if order > MAX_ORDER_PHI {
            return Err(WkbError::OrderUnsupported {
                order,
                max: MAX_ORDER_PHI,
            });
        }
        let mut out = Vec::new();
        for m in 2..=order {
            let table = self.sym.table(m)?;
            let parts = table.parts.clone();
            let no_ones: Vec<usize> = parts
                .iter()
                .enumerate()
                .filter(|(_, p)| p.iter().all(|&part| part != 1))
                .map(|(i, _)| i)
                .collect();
            if no_ones.is_empty() {
                continue;
            }
            let mut den = UPoly::one();
            for q in 0..m as i64 {
                den = den * UPoly::from_coeffs(vec![rat(1), rat(q)]);
            }
            let prefactor = RatFun::new(
                UPoly::constant(rat(1) / factorial(m)),
                den,
            );
            let kf = RatFun::constant(rat(k as i64));
            for &li in &no_ones {
                for &mi in &no_ones {
                    let mut scalar = RatFun::zero();
                    for i in 0..parts.len() {
                        if parts[i].len() > k {
                            continue;
                        }
                        let dim = table.dimension[i].eval(&kf);
                        let term = table.character[i].clone()
                            * table.zcoords[i][li].clone()
                            * table.zcoords[i][mi].clone()
                            / dim;
                        scalar = scalar + term;
                    }
                    scalar = scalar * prefactor.clone();
                    if !scalar.is_zero() {
                        out.push(PhiScalar {
                            lambda: parts[li].clone(),
                            mu: parts[mi].clone(),
                            scalar,
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// The correction series f at numeric (k, alpha), truncated at the
    /// given bi-order.  Scalars are evaluated one at a time; when a
    /// scalar has a pole at alpha the whole series is re-assembled with
    /// rational-function coefficients so that cancelling limits survive,
    /// and any monomial that still diverges is reported against the
    /// pole-carrying partition blocks.
    pub fn zonal_series(
        &mut self,
        k: usize,
        alpha: &Rat,
        order: u32,
    ) -> Result<MPolyQ, WkbError> {
        assert!(k >= 1);
        let vars = Vars::new(k);
        if order == 0 {
            return Ok(MPoly::one(vars.nvars()));
        }
        let scalars = self.phi_scalars(k, order)?;
        let t = vars.tau_sum().scale(&frac(-1, k as i64));
        let expo = exp_truncated(vars, &t, order);
        let mut pow_x: BTreeMap<u32, MPolyQ> = BTreeMap::new();
        let mut pow_l: BTreeMap<u32, MPolyQ> = BTreeMap::new();
        let mut pair_poly = |lambda: &Partition, mu: &Partition| -> MPolyQ {
            let mut p = MPoly::one(vars.nvars());
            for &part in lambda {
                let f = pow_x
                    .entry(part)
                    .or_insert_with(|| vars.centered_power_sum(part, true));
                p = p * f.clone();
            }
            for &part in mu {
                let f = pow_l
                    .entry(part)
                    .or_insert_with(|| vars.centered_power_sum(part, false));
                p = p * f.clone();
            }
            p
        };
        let poles: Vec<&PhiScalar> = scalars
            .iter()
            .filter(|s| s.scalar.has_pole_at(alpha))
            .collect();
        if poles.is_empty() {
            let mut phi = MPoly::one(vars.nvars());
            for s in &scalars {
                let value = s.scalar.eval(alpha).expect("checked for poles");
                phi = phi + pair_poly(&s.lambda, &s.mu).scale(&value);
            }
            return Ok(mul_truncated(vars, &expo, &phi, order));
        }
        let pole_pairs: Vec<(Partition, Partition)> = poles
            .iter()
            .map(|s| (s.lambda.clone(), s.mu.clone()))
            .collect();
        let pole_order = pole_pairs[0].0.iter().sum::<u32>();
        let mut phi_rf: MPoly<RatFun> = MPoly::one(vars.nvars());
        for s in &scalars {
            let pp = pair_poly(&s.lambda, &s.mu)
                .map_coeffs(|c| RatFun::constant(c.clone()));
            phi_rf = phi_rf + pp.scale(&s.scalar);
        }
        let expo_rf = expo.map_coeffs(|c| RatFun::constant(c.clone()));
        let f_rf = mul_truncated(vars, &expo_rf, &phi_rf, order);
        match f_rf.try_map_coeffs(|c| c.eval(alpha).ok_or(())) {
            Ok(f) => Ok(f),
            Err(_) => Err(WkbError::DivergentPartitionBlock {
                order: pole_order,
                pairs: pole_pairs,
            }),
        }
    }

    /// Jack-duality pipeline: match the series against orbit sums order
    /// by order under the gauge policy.
    pub fn tau_coefficients(
        &mut self,
        k: usize,
        alpha: &Rat,
        order: u32,
        gauge: GaugePolicy,
    ) -> Result<CoeffTable, WkbError> {
        if order > MAX_ORDER {
            return Err(WkbError::OrderUnsupported {
                order,
                max: MAX_ORDER,
            });
        }
        let vars = Vars::new(k);
        let f = self.zonal_series(k, alpha, order)?;
        let mut entries = BTreeMap::new();
        for l in 1..=order {
            let mut f_l = f.clone();
            f_l.retain(|m| vars.x_degree(m) == l);
            let solved = solve_tau_order(&f_l, l, k, alpha, gauge)?;
            let mut recon = MPoly::zero(vars.nvars());
            for (name, g, c) in &solved {
                recon = recon + g.orbit_sum(k).scale(c);
                entries.insert(String::from(*name), c.clone());
            }
            if recon != f_l {
                return Err(WkbError::Inconsistent { order: l });
            }
        }
        Ok(CoeffTable {
            k,
            alpha: alpha.clone(),
            beta: beta_of_alpha(alpha),
            order,
            pipeline: Pipeline::JackDuality,
            gauge,
            entries,
        })
    }

    /// Residual pipeline: propagate the pole-cancellation condition
    /// order by order.  The series never enters; beta acts only through
    /// the gauge parameter.
    pub fn residual_coefficients(
        &mut self,
        k: usize,
        beta: &Rat,
        order: u32,
        gauge: GaugePolicy,
    ) -> Result<CoeffTable, WkbError> {
        let alpha = duality_map(beta)?;
        if order > MAX_ORDER {
            return Err(WkbError::OrderUnsupported {
                order,
                max: MAX_ORDER,
            });
        }
        let vars = Vars::new(k);
        let n = vars.nvars();
        let mut entries = BTreeMap::new();
        let mut f_prev = MPoly::one(n);
        for l in 0..order {
            let lam_factor = MPoly::var(n, vars.lam(1)) - MPoly::var(n, vars.lam(2));
            let rhs = -restrict(&(lam_factor * f_prev.clone()), vars);
            let graphs = enumerate_tau_graphs(l + 1);
            let names = graph_names(l + 1);
            let mut live: Vec<(&'static str, TauGraph, MPolyQ, MPolyQ)> = Vec::new();
            for (g, name) in graphs.into_iter().zip(names) {
                if g.vertices() as usize > k {
                    continue;
                }
                let orbit = g.orbit_sum(k);
                let col = restrict(
                    &(orbit.partial_derivative(vars.x(1))
                        - orbit.partial_derivative(vars.x(2))),
                    vars,
                );
                live.push((name, g, orbit, col));
            }
            let cols: Vec<&MPolyQ> = live.iter().map(|(_, _, _, c)| c).collect();
            let live_names: Vec<&'static str> = live.iter().map(|(n, _, _, _)| *n).collect();
            let rows = gauge_rows(gauge, l + 1, k, &alpha, &live_names)?;
            let indexed = index_gauge_rows(&rows, &live_names);
            let solved = match solve_monomial_system(&cols, &rhs, &indexed, l + 1) {
                Ok(c) => c,
                Err(WkbError::UnderdeterminedBeyondGauge { order: o, freedom })
                    if k as u32 <= order =>
                {
                    let _ = (o, freedom);
                    return Err(WkbError::ResidualSingular {
                        k,
                        order,
                        factor: format!("(k - {})", k),
                    });
                }
                Err(e) => return Err(e),
            };
            let mut f_next = MPoly::zero(n);
            for ((name, _, orbit, _), c) in live.iter().zip(&solved) {
                f_next = f_next + orbit.scale(c);
                entries.insert(String::from(*name), c.clone());
            }
            f_prev = f_next;
        }
        Ok(CoeffTable {
            k,
            alpha,
            beta: beta.clone(),
            order,
            pipeline: Pipeline::Residual,
            gauge,
            entries,
        })
    }
}

/// Substitutes x_2 := x_1.
fn restrict(p: &MPolyQ, vars: Vars) -> MPolyQ {
    p.rename_var(vars.x(2), vars.x(1))
}

/// A gauge constraint: a linear combination of named coefficients set
/// equal to a rational value.
struct GaugeRow {
    terms: Vec<(&'static str, Rat)>,
    rhs: Rat,
}

/// The degeneracy factor of a graph: one factor (1+α)(1+2α)⋯/q! per
/// multiplicity-q edge.  Simple graphs give 1.
fn degeneracy_factor(g: &TauGraph, alpha: &Rat) -> Rat {
    let mut f = rat(1);
    for e in &g.edges {
        for m in 1..e.mult as i64 {
            f = f * (rat(1) + rat(m) * alpha.clone());
        }
        f = f / factorial(e.mult as u32);
    }
    f
}

/// The simple same-order companion of a multiple-line graph: the graph
/// whose coefficient, multiplied by the degeneracy factor, reproduces
/// the multiple-line coefficient.  Multiplicity bundles resolve into
/// stars; three graphs have no such companion and are pinned by value.
fn ratio_partner(name: &str) -> Option<&'static str> {
    match name {
        "II" => Some("\u{39b}"),
        "III" | "\u{2220}\u{332}" => Some("Y"),
        "II,I" => Some("\u{39b},I"),
        "IIII" | "\u{2220}\u{332}\u{332}" | "\u{226a}" | "\u{22a8}" => Some("X"),
        "\u{2291}" => Some("\u{2220}\u{2220}"),
        "III,I" | "\u{2220}\u{332},I" => Some("Y,I"),
        "\u{39b},II" => Some("\u{39b},\u{39b}"),
        "II,I,I" => Some("\u{39b},I,I"),
        _ => None,
    }
}

/// Solves one graded order of the series match.
fn solve_tau_order(
    f_l: &MPolyQ,
    l: u32,
    k: usize,
    alpha: &Rat,
    gauge: GaugePolicy,
) -> Result<Vec<(&'static str, TauGraph, Rat)>, WkbError> {
    let graphs = enumerate_tau_graphs(l);
    let names = graph_names(l);
    let mut live: Vec<(&'static str, TauGraph, MPolyQ)> = Vec::new();
    for (g, name) in graphs.into_iter().zip(names) {
        if g.vertices() as usize <= k {
            let orbit = g.orbit_sum(k);
            live.push((name, g, orbit));
        }
    }
    let cols: Vec<&MPolyQ> = live.iter().map(|(_, _, o)| o).collect();
    let live_names: Vec<&'static str> = live.iter().map(|(n, _, _)| *n).collect();
    let rows = gauge_rows(gauge, l, k, alpha, &live_names)?;
    let indexed = index_gauge_rows(&rows, &live_names);
    let solved = solve_monomial_system(&cols, f_l, &indexed, l)?;
    Ok(live
        .into_iter()
        .zip(solved)
        .map(|((name, g, _), c)| (name, g, c))
        .collect())
}

/// Maps gauge rows onto live-unknown indices.
fn index_gauge_rows(
    rows: &[GaugeRow],
    live_names: &[&'static str],
) -> Vec<(Vec<(usize, Rat)>, Rat)> {
    rows.iter()
        .map(|r| {
            let terms = r
                .terms
                .iter()
                .map(|(name, c)| {
                    let i = live_names
                        .iter()
                        .position(|n| n == name)
                        .expect("gauge rows reference live graphs only");
                    (i, c.clone())
                })
                .collect();
            (terms, r.rhs.clone())
        })
        .collect()
}

/// Matches `sum_i c_i cols[i] == rhs` as polynomials, with gauge rows
/// appended, scanning monomial rows until the rank stops improving.
fn solve_monomial_system(
    cols: &[&MPolyQ],
    rhs: &MPolyQ,
    gauge: &[(Vec<(usize, Rat)>, Rat)],
    l: u32,
) -> Result<Vec<Rat>, WkbError> {
    let n = cols.len();
    if n == 0 {
        if rhs.is_zero() {
            return Ok(Vec::new());
        }
        return Err(WkbError::Inconsistent { order: l });
    }
    let mut monos: BTreeSet<Mono> = rhs.terms.keys().cloned().collect();
    for c in cols {
        monos.extend(c.terms.keys().cloned());
    }
    const WINDOW: usize = 4096;
    let mut kept: Vec<Vec<Rat>> = Vec::new();
    let mut reduced: Vec<Vec<Rat>> = Vec::new();
    let mut since_gain = 0usize;
    for m in &monos {
        if since_gain > WINDOW || reduced.len() == n + 1 {
            break;
        }
        let mut row: Vec<Rat> = cols.iter().map(|c| c.coeff(m)).collect();
        row.push(rhs.coeff(m));
        let mut work = row.clone();
        for r in &reduced {
            let lead = r.iter().position(|c| !c.is_zero()).unwrap();
            if !work[lead].is_zero() {
                let factor = work[lead].clone() / r[lead].clone();
                for (w, v) in work.iter_mut().zip(r) {
                    *w = w.clone() - factor.clone() * v.clone();
                }
            }
        }
        if work.iter().any(|c| !c.is_zero()) {
            reduced.push(work);
            reduced.sort_by_key(|r| r.iter().position(|c| !c.is_zero()).unwrap());
            kept.push(row);
            since_gain = 0;
        } else {
            since_gain += 1;
        }
    }
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(kept.len() + gauge.len());
    let mut b: Vec<Rat> = Vec::with_capacity(kept.len() + gauge.len());
    for row in kept {
        let (coeffs, last) = row.split_at(n);
        a.push(coeffs.to_vec());
        b.push(last[0].clone());
    }
    for (terms, value) in gauge {
        let mut row = vec![rat(0); n];
        for (idx, c) in terms {
            row[*idx] = c.clone();
        }
        a.push(row);
        b.push(value.clone());
    }
    match solve(&a, &b) {
        SolveOutcome::Inconsistent => Err(WkbError::Inconsistent { order: l }),
        SolveOutcome::Solved {
            particular,
            nullspace,
        } => {
            if nullspace.is_empty() {
                Ok(particular)
            } else {
                let names = graph_names(l);
                let mut freedom: BTreeSet<String> = BTreeSet::new();
                for v in &nullspace {
                    for (i, c) in v.iter().enumerate() {
                        if !c.is_zero() {
                            freedom.insert(String::from(names[i.min(names.len() - 1)]));
                        }
                    }
                }
                Err(WkbError::UnderdeterminedBeyondGauge {
                    order: l,
                    freedom: freedom.into_iter().collect(),
                })
            }
        }
    }
}

/// The closed-form value of a gauge-pinned coefficient at (k, alpha):
/// the large-k leading form times a correction in inverse powers of
/// (k-1), (k-2), (k+alpha-1).
fn closed_value(name: &'static str, k: usize, alpha: &Rat) -> Result<Rat, WkbError> {
    let g = crate::taugraph::graph_by_name(name).expect("gauge names are catalogued");
    let kr = rat(k as i64);
    let a = alpha.clone();
    let singular = |factor: &str| WkbError::GaugeSingular {
        name: String::from(name),
        factor: String::from(factor),
    };
    let div = |num: Rat, den: Rat, factor: &str| -> Result<Rat, WkbError> {
        if den.is_zero() {
            return Err(singular(factor));
        }
        Ok(num / den)
    };
    let km1 = kr.clone() - rat(1);
    let km2 = kr.clone() - rat(2);
    let ka1 = kr.clone() + a.clone() - rat(1);
    let lead = largek_leading(&g, k, alpha)
        .ok_or_else(|| singular("k (k+a) ... (k+(l-1)a)"))?;
    let corr = match name {
        "\u{25b3}" => rat(1) - div(a.clone() * a.clone(), km1.clone(), "(k - 1)")?,
        "II,I" | "\u{2291}" => {
            rat(1) + div(rat(2) * a.clone(), km1.clone(), "(k - 1)")?
        }
        "III,I" | "\u{2220}\u{332},I" => {
            rat(1) + div(rat(3) * a.clone(), km1.clone(), "(k - 1)")?
        }
        "\u{39b},II" => {
            (rat(1) + div(a.clone(), ka1.clone(), "(k + a - 1)")?)
                * (rat(1) + div(rat(3) * a.clone(), km1.clone(), "(k - 1)")?)
        }
        "II,I,I" => {
            rat(1) + div(rat(7) * a.clone(), km1.clone(), "(k - 1)")?
                + div(
                    rat(6) * a.clone() * a.clone(),
                    km1.clone() * km2.clone(),
                    "(k - 1)(k - 2)",
                )?
                - div(rat(2) * a.clone(), ka1.clone(), "(k + a - 1)")?
                - div(
                    rat(2) * a.clone() * a.clone(),
                    km2.clone() * ka1.clone(),
                    "(k - 2)(k + a - 1)",
                )?
        }
        "II,II" => {
            rat(1) + div(rat(4) * a.clone(), km1.clone(), "(k - 1)")?
                + div(
                    rat(2) * a.clone() * a.clone(),
                    km1.clone() * ka1.clone(),
                    "(k - 1)(k + a - 1)",
                )?
        }
        "\u{2210}\u{332}" => rat(1) + div(a.clone(), km1.clone(), "(k - 1)")?,
        "\u{25b3}\u{332}" => {
            rat(1) - div(rat(2) * a.clone() * a.clone(), km1.clone(), "(k - 1)")?
        }
        _ => rat(1),
    };
    Ok(lead * corr)
}

/// The paper-default gauge rows at one order: every live multiple-line
/// graph is tied to its simple companion by the degeneracy factor (or
/// pinned to its closed form when the companion is dropped or absent),
/// and the triangle coefficient is pinned at order 3.
fn gauge_rows(
    gauge: GaugePolicy,
    l: u32,
    k: usize,
    alpha: &Rat,
    live_names: &[&'static str],
) -> Result<Vec<GaugeRow>, WkbError> {
    let GaugePolicy::PaperDefault = gauge;
    let live = |n: &str| live_names.iter().any(|&m| m == n);
    let mut rows = Vec::new();
    if l == 3 && live("\u{25b3}") {
        rows.push(GaugeRow {
            terms: vec![("\u{25b3}", rat(1))],
            rhs: closed_value("\u{25b3}", k, alpha)?,
        });
    }
    let graphs = enumerate_tau_graphs(l);
    let names = graph_names(l);
    for (g, name) in graphs.into_iter().zip(names) {
        if !g.has_multiplicity_at_least(2) || !live(name) {
            continue;
        }
        match ratio_partner(name) {
            Some(p) if live(p) => rows.push(GaugeRow {
                terms: vec![(name, rat(1)), (p, -degeneracy_factor(&g, alpha))],
                rhs: rat(0),
            }),
            _ => rows.push(GaugeRow {
                terms: vec![(name, rat(1))],
                rhs: closed_value(name, k, alpha)?,
            }),
        }
    }
    Ok(rows)
}

/// The large-k leading form of a catalogued coefficient: sign, the
/// degeneracy factor from edge multiplicities, and the falling product
/// of shifted dimensions.  None when the product vanishes at (k, alpha).
pub fn largek_leading(g: &TauGraph, k: usize, alpha: &Rat) -> Option<Rat> {
    let l = g.order();
    let mut den = rat(1);
    for m in 0..l as i64 {
        den = den * (rat(k as i64) + rat(m) * alpha.clone());
    }
    if den.is_zero() {
        return None;
    }
    let mut gf = rat(1);
    for e in &g.edges {
        for m in 1..e.mult as i64 {
            gf = gf * (rat(1) + rat(m) * alpha.clone());
        }
        gf = gf / factorial(e.mult as u32);
    }
    let sign = if l % 2 == 0 { rat(1) } else { rat(-1) };
    Some(sign * gf / den)
}

/// Status of one catalogued residual equation on a table.
#[derive(Clone, Debug, PartialEq)]
pub enum CheckStatus {
    Satisfied,
    Violated(Rat),
    /// Entries missing from the table (dropped graphs or truncated order).
    Skipped(Vec<String>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidualCheck {
    pub label: &'static str,
    pub equation: String,
    pub status: CheckStatus,
}

/// The catalogued residual equations: linear relations with k-dependent
/// integer coefficients that every valid table satisfies, independent of
/// the group parameter.
#[allow(clippy::type_complexity)]
pub fn residual_equation_catalogue() -> Vec<(&'static str, Vec<(KCoeff, &'static str)>)> {
    let c = KCoeff::of;
    let ck = KCoeff::times_k;
    vec![
        ("order2-1", vec![(c(1), "I"), (ck(1, -1), "I,I"), (c(1), "\u{39b}")]),
        ("order2-2", vec![(c(1), "I"), (ck(1, -1), "\u{39b}"), (c(2), "II")]),
        (
            "order3-1",
            vec![(c(1), "I,I"), (ck(1, -2), "I,I,I"), (c(2), "\u{39b},I")],
        ),
        (
            "order3-2",
            vec![(c(1), "II"), (c(3), "III"), (ck(1, -1), "\u{2220}\u{332}")],
        ),
        (
            "order3-3",
            vec![(c(1), "\u{39b}"), (ck(1, -1), "\u{39b},I"), (c(1), "Y")],
        ),
        (
            "order3-4",
            vec![(c(1), "\u{39b}"), (ck(1, -2), "Y"), (c(4), "\u{2220}\u{332}")],
        ),
        (
            "order3-5",
            vec![
                (c(1), "\u{39b}"),
                (ck(1, -2), "N"),
                (c(1), "\u{25b3}"),
                (c(1), "II,I"),
                (c(1), "\u{2220}\u{332}"),
            ],
        ),
        (
            "order3-6",
            vec![
                (c(1), "\u{39b}"),
                (c(-1), "II"),
                (c(2), "\u{25b3}"),
                (c(-1), "\u{2220}\u{332}"),
                (ck(1, -3), "N"),
                (ck(-1, -3), "II,I"),
            ],
        ),
        (
            "order4-1",
            vec![
                (c(1), "I,I,I"),
                (ck(1, -3), "I,I,I,I"),
                (c(3), "\u{39b},I,I"),
            ],
        ),
        (
            "order4-2",
            vec![
                (c(1), "\u{39b},I"),
                (ck(1, -2), "\u{39b},I,I"),
                (c(1), "Y,I"),
                (c(1), "\u{39b},\u{39b}"),
            ],
        ),
        (
            "order4-3",
            vec![
                (c(1), "\u{39b},I"),
                (ck(1, -3), "\u{39b},\u{39b}"),
                (c(2), "M"),
                (c(2), "\u{39b},II"),
            ],
        ),
        (
            "order4-4",
            vec![
                (c(2), "I,I,I"),
                (c(8), "N,I"),
                (c(-1), "\u{39b},I"),
                (c(4), "II,I,I"),
                (c(-1), "\u{39b},\u{39b}"),
                (c(-3), "Y,I"),
                (ck(1, -6), "\u{39b},I,I"),
            ],
        ),
        (
            "order4-5",
            vec![
                (c(1), "II,I"),
                (c(1), "N"),
                (c(3), "\u{2291}"),
                (c(2), "II,II"),
                (c(1), "\u{25a1}"),
                (ck(1, -2), "\u{39b},II"),
                (ck(1, -2), "M"),
            ],
        ),
        (
            "order4-6",
            vec![
                (c(1), "Y"),
                (c(2), "\u{22b5}"),
                (c(-2), "\u{2210}\u{332}"),
                (c(2), "\u{2220}\u{332},I"),
                (c(2), "\u{22a8}"),
                (ck(1, -3), "\u{2220}\u{2220}"),
            ],
        ),
        (
            "order4-7",
            vec![
                (c(1), "III"),
                (c(2), "\u{2220}\u{332}\u{332}"),
                (c(-1), "\u{25b3}\u{332}"),
                (c(1), "\u{2210}\u{332}"),
                (ck(1, -2), "III,I"),
            ],
        ),
        (
            "order4-8",
            vec![
                (c(1), "\u{2220}\u{332}"),
                (c(-1), "III"),
                (ck(1, -3), "\u{2210}\u{332}"),
                (ck(-1, -3), "III,I"),
                (c(2), "\u{25b3}\u{332}"),
            ],
        ),
    ]
}

fn render_equation(terms: &[(KCoeff, &'static str)]) -> String {
    let mut s = String::new();
    for (i, (c, name)) in terms.iter().enumerate() {
        let (mult, shift) = (c.mult, c.kshift);
        if i > 0 {
            s.push_str(if mult < 0 { " - " } else { " + " });
        } else if mult < 0 {
            s.push_str("-");
        }
        let m = mult.abs();
        match shift {
            None => {
                if m != 1 {
                    s.push_str(&format!("{} ", m));
                }
            }
            Some(sh) => {
                if m != 1 {
                    s.push_str(&format!("{} ", m));
                }
                if sh == 0 {
                    s.push_str("k ");
                } else if sh < 0 {
                    s.push_str(&format!("(k - {}) ", -sh));
                } else {
                    s.push_str(&format!("(k + {}) ", sh));
                }
            }
        }
        s.push_str(&format!("C[{}]", name));
    }
    s
}

/// Evaluates every catalogued residual equation on the table.
pub fn verify_residual_equations(t: &CoeffTable) -> Vec<ResidualCheck> {
    let k = t.k as i64;
    let max_order = t.order;
    let graph_order = |name: &str| -> u32 {
        crate::taugraph::graph_by_name(name)
            .map(|g| g.order())
            .unwrap_or(0)
    };
    residual_equation_catalogue()
        .into_iter()
        .map(|(label, terms)| {
            let equation = render_equation(&terms);
            let mut missing = Vec::new();
            let mut total = rat(0);
            for (c, name) in &terms {
                if graph_order(name) > max_order {
                    missing.push(String::from(*name));
                    continue;
                }
                match t.entry(name) {
                    Some(v) => total = total + c.eval(k) * v.clone(),
                    None => missing.push(String::from(*name)),
                }
            }
            let status = if !missing.is_empty() {
                CheckStatus::Skipped(missing)
            } else if total.is_zero() {
                CheckStatus::Satisfied
            } else {
                CheckStatus::Violated(total)
            };
            ResidualCheck {
                label,
                equation,
                status,
            }
        })
        .collect()
}
