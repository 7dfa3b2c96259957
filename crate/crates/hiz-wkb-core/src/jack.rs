//! Jack symmetric functions in the power-sum basis.
//!
//! The polynomials are constructed as eigenfunctions of the deformed
//! Laplace-Beltrami operator, triangulated against the dominance order in
//! the monomial basis.  Each table row carries the power-sum expansion of
//! the `Z` normalization (unit coefficient on `s_1^n`), the character
//! appearing in the group-integral series, and the principal
//! specialization as an exact polynomial in the spectrum dimension `k`.
//!
//! Numeric tables exist for any rational parameter away from the poles of
//! the construction; the symbolic table carries full rational-function
//! coefficients and is the basis of every limit taken elsewhere.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::field::{rat, Field, Rat};
use crate::linalg::{invert, mat_mul, Mat};
use crate::partitions::{
    dominated_by, enumerate_partitions, format_partition, Partition,
};
use crate::ratfun::RatFun;
use crate::upoly::UPoly;

/// Largest weight served by the numeric table.
pub const MAX_WEIGHT: u32 = 8;
/// Largest weight served by the symbolic table.
pub const MAX_WEIGHT_SYMBOLIC: u32 = 6;

#[derive(Clone, Debug, PartialEq)]
pub enum JackError {
    /// The triangular solve divided by a vanishing eigenvalue difference.
    /// `factor` is the linear polynomial in the parameter that vanished.
    ParameterPole {
        lambda: Partition,
        mu: Partition,
        factor: String,
    },
    /// The `s_1^n` coefficient vanished, so the `Z` normalization does not
    /// exist at this parameter value.
    NormalizationVanishes { lambda: Partition },
    WeightTooLarge { weight: u32, max: u32 },
}

impl core::fmt::Display for JackError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            JackError::ParameterPole { lambda, mu, factor } => write!(
                f,
                "parameter pole: factor ({}) vanishes in the triangular solve for {} at {}",
                factor,
                format_partition(lambda),
                format_partition(mu)
            ),
            JackError::NormalizationVanishes { lambda } => write!(
                f,
                "parameter pole: s_1^n coefficient of {} vanishes, no Z normalization",
                format_partition(lambda)
            ),
            JackError::WeightTooLarge { weight, max } => {
                write!(f, "weight {} exceeds the table limit {}", weight, max)
            }
        }
    }
}

/// One weight's worth of Jack data over the coefficient field `F`.
#[derive(Clone, Debug)]
pub struct JackTable<F: Field> {
    pub weight: u32,
    /// Partitions of the weight in reverse lexicographic order.
    pub parts: Vec<Partition>,
    /// `zcoords[i][j]`: coefficient of `s_{parts[j]}` in `Z_{parts[i]}`.
    pub zcoords: Mat<F>,
    /// Characters `chi_{parts[i]}`.
    pub character: Vec<F>,
    /// Principal specializations `Z_{parts[i]}(I_k)` as polynomials in `k`.
    pub dimension: Vec<UPoly<F>>,
}

impl<F: Field> JackTable<F> {
    pub fn index_of(&self, p: &[u32]) -> Option<usize> {
        self.parts.iter().position(|q| q == p)
    }

    /// Power-sum coefficients of `Z_p` as a partition-keyed map.
    pub fn power_sum_coeffs(&self, p: &[u32]) -> Option<BTreeMap<Partition, F>> {
        let i = self.index_of(p)?;
        let mut out = BTreeMap::new();
        for (j, q) in self.parts.iter().enumerate() {
            if !self.zcoords[i][j].is_zero() {
                out.insert(q.clone(), self.zcoords[i][j].clone());
            }
        }
        Some(out)
    }
}

/// Multiplies a monomial-basis expansion by the power sum `p_r`.
/// Keys are partitions of the current weight; the result has weight
/// `current + r`.
fn multiply_by_power_sum<F: Field>(
    f: &BTreeMap<Partition, F>,
    r: u32,
    target: &[Partition],
) -> BTreeMap<Partition, F> {
    let mut out: BTreeMap<Partition, F> = BTreeMap::new();
    for kappa in target {
        let mut acc = F::zero();
        for i in 0..kappa.len() {
            if kappa[i] < r {
                continue;
            }
            let mut delta: Vec<u32> = kappa.clone();
            delta[i] -= r;
            delta.retain(|&x| x > 0);
            delta.sort_unstable_by(|a, b| b.cmp(a));
            if let Some(c) = f.get(&delta) {
                acc = acc + c.clone();
            }
        }
        if !acc.is_zero() {
            out.insert(kappa.clone(), acc);
        }
    }
    out
}

/// The deformed Laplace-Beltrami operator in power-sum coordinates at
/// weight `n`, built with `n` underlying variables.  Entry `[i][j]` is the
/// coefficient of `p_{parts[i]}` in `D p_{parts[j]}`.
fn lb_operator_p<F: Field>(parts: &[Partition], alpha: &F, n: u32) -> Mat<F> {
    let dim = parts.len();
    let index: BTreeMap<&[u32], usize> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let half = F::from_rat(&crate::field::frac(1, 2));
    let k0 = F::from_rat(&rat(n as i64));
    let mut out = vec![vec![F::zero(); dim]; dim];

    for (j, mu) in parts.iter().enumerate() {
        let mut image: BTreeMap<Partition, F> = BTreeMap::new();
        let add = |p: Partition, c: F, image: &mut BTreeMap<Partition, F>| {
            if c.is_zero() {
                return;
            }
            let entry = image.entry(p).or_insert_with(F::zero);
            *entry = entry.clone() + c;
        };

        let mut mults: BTreeMap<u32, u32> = BTreeMap::new();
        for &part in mu {
            *mults.entry(part).or_insert(0) += 1;
        }
        let remove = |mu: &Partition, victims: &[u32]| -> Partition {
            let mut v = mu.clone();
            for &victim in victims {
                let pos = v.iter().position(|&x| x == victim).unwrap();
                v.remove(pos);
            }
            v
        };
        let insert = |mu: &Partition, newcomers: &[u32]| -> Partition {
            let mut v = mu.clone();
            v.extend_from_slice(newcomers);
            v.retain(|&x| x > 0);
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };

        // (alpha/2) sum_{a,b} a b F_ab p_{a+b}, ordered pairs
        for (&a, &ma) in &mults {
            for (&b, &mb) in &mults {
                let fab = if a == b {
                    ma as i64 * (ma as i64 - 1)
                } else {
                    ma as i64 * mb as i64
                };
                if fab == 0 {
                    continue;
                }
                let base = remove(mu, &[a, b]);
                let target = insert(&base, &[a + b]);
                let c = alpha.clone()
                    * half.clone()
                    * F::from_rat(&rat(a as i64 * b as i64 * fab));
                add(target, c, &mut image);
            }
        }

        // diagonal pieces proportional to p_mu itself
        let mut diag = F::zero();
        for (&a, &ma) in &mults {
            let a_i = a as i64;
            let m_i = ma as i64;
            diag = diag
                + alpha.clone() * half.clone() * F::from_rat(&rat(a_i * (a_i - 1) * m_i));
            let shift = k0.clone() - half.clone() * F::from_rat(&rat(a_i + 1));
            diag = diag + F::from_rat(&rat(a_i * m_i)) * shift;
        }
        add(mu.clone(), diag, &mut image);

        // (1/2) sum_a a F_a sum_{c=1}^{a-1} p_c p_{a-c}
        for (&a, &ma) in &mults {
            let base = remove(mu, &[a]);
            for c in 1..a {
                let target = insert(&base, &[c, a - c]);
                let coeff =
                    half.clone() * F::from_rat(&rat(a as i64 * ma as i64));
                add(target, coeff, &mut image);
            }
        }

        for (p, c) in image {
            let i = *index.get(p.as_slice()).expect("image stays at fixed weight");
            out[i][j] = c;
        }
    }
    out
}

/// Eigenvalue difference `e_lambda - e_mu` as an explicit linear polynomial
/// in the parameter, for pole reporting: returns `(A, B)` with the
/// difference equal to `A/2 alpha + B` at `n` underlying variables.
fn eigenvalue_gap(lambda: &[u32], mu: &[u32], n: u32) -> (i64, i64) {
    let term = |p: &[u32]| -> (i64, i64) {
        let mut a = 0i64;
        let mut b = 0i64;
        for (i, &part) in p.iter().enumerate() {
            a += part as i64 * (part as i64 - 1);
            b += (n as i64 - 1 - i as i64) * part as i64;
        }
        (a, b)
    };
    let (al, bl) = term(lambda);
    let (am, bm) = term(mu);
    (al - am, bl - bm)
}

fn format_gap(a: i64, b: i64) -> String {
    let half_a = Rat::new(a.into(), 2.into());
    match (a, b) {
        (0, _) => format!("{}", b),
        (_, 0) => format!("{}*a", half_a),
        _ if b > 0 => format!("{}*a + {}", half_a, b),
        _ => format!("{}*a - {}", half_a, -b),
    }
}

/// Builds the full table at one weight.  `F` is the coefficient field; for
/// the numeric path it is [`Rat`] and genuine eigenvalue collisions abort
/// with [`JackError::ParameterPole`].
pub fn build_table<F: Field>(n: u32, alpha: &F, max: u32) -> Result<JackTable<F>, JackError> {
    if n > max {
        return Err(JackError::WeightTooLarge { weight: n, max });
    }
    let parts = enumerate_partitions(n);
    let dim = parts.len();
    if n == 0 {
        return Ok(JackTable {
            weight: 0,
            parts: vec![Vec::new()],
            zcoords: vec![vec![F::one()]],
            character: vec![F::one()],
            dimension: vec![UPoly::one()],
        });
    }

    // transition matrix: column j holds p_{parts[j]} in the monomial basis
    let mut transition = vec![vec![F::zero(); dim]; dim];
    for (j, mu) in parts.iter().enumerate() {
        let mut f: BTreeMap<Partition, F> = BTreeMap::new();
        f.insert(Vec::new(), F::one());
        let mut w = 0u32;
        for &r in mu {
            w += r;
            let target = enumerate_partitions(w);
            f = multiply_by_power_sum(&f, r, &target);
        }
        for (p, c) in f {
            let i = parts.iter().position(|q| *q == p).unwrap();
            transition[i][j] = c;
        }
    }
    let transition_inv = invert(&transition).expect("power sums are a basis");

    let d_p = lb_operator_p(&parts, alpha, n);
    let d_m = mat_mul(&transition, &mat_mul(&d_p, &transition_inv));

    // triangular solve for each lambda in the monomial basis
    let mut zcoords: Mat<F> = Vec::with_capacity(dim);
    for (li, lambda) in parts.iter().enumerate() {
        let mut c = vec![F::zero(); dim];
        c[li] = F::one();
        for j in (li + 1)..dim {
            if !dominated_by(&parts[j], lambda) {
                continue;
            }
            let mut rhs = F::zero();
            for i in li..j {
                if !c[i].is_zero() && !d_m[j][i].is_zero() {
                    rhs = rhs + d_m[j][i].clone() * c[i].clone();
                }
            }
            if rhs.is_zero() {
                continue;
            }
            let gap = d_m[li][li].clone() - d_m[j][j].clone();
            if gap.is_zero() {
                let (a, b) = eigenvalue_gap(lambda, &parts[j], n);
                return Err(JackError::ParameterPole {
                    lambda: lambda.clone(),
                    mu: parts[j].clone(),
                    factor: format_gap(a, b),
                });
            }
            c[j] = rhs / gap;
        }
        // back to power-sum coordinates
        let mut pcoords = vec![F::zero(); dim];
        for (i, row) in transition_inv.iter().enumerate() {
            let mut acc = F::zero();
            for (j, cj) in c.iter().enumerate() {
                if !cj.is_zero() && !row[j].is_zero() {
                    acc = acc + row[j].clone() * cj.clone();
                }
            }
            pcoords[i] = acc;
        }
        let norm = pcoords[dim - 1].clone();
        if norm.is_zero() {
            return Err(JackError::NormalizationVanishes {
                lambda: lambda.clone(),
            });
        }
        let inv = norm.inv();
        for v in pcoords.iter_mut() {
            *v = v.clone() * inv.clone();
        }
        zcoords.push(pcoords);
    }

    // characters: expand s_1^n over the Z basis
    let mut zmat = vec![vec![F::zero(); dim]; dim];
    for (l, row) in zcoords.iter().enumerate() {
        for (i, v) in row.iter().enumerate() {
            zmat[i][l] = v.clone();
        }
    }
    let zinv = invert(&zmat).expect("Z functions are a basis");
    let mut character: Vec<F> = (0..dim).map(|l| zinv[l][dim - 1].clone()).collect();
    let mut prefactor = F::one();
    for m in 1..n as i64 {
        prefactor = prefactor * (F::one() + F::from_rat(&rat(m)) * alpha.clone());
    }
    for chi in character.iter_mut() {
        *chi = chi.clone() * prefactor.clone();
    }

    // principal specialization: substitute every p_a by k
    let dimension: Vec<UPoly<F>> = zcoords
        .iter()
        .map(|row| {
            let mut coeffs = vec![F::zero(); n as usize + 1];
            for (j, v) in row.iter().enumerate() {
                let l = parts[j].len();
                coeffs[l] = coeffs[l].clone() + v.clone();
            }
            UPoly::from_coeffs(coeffs)
        })
        .collect();

    Ok(JackTable {
        weight: n,
        parts,
        zcoords,
        character,
        dimension,
    })
}

/// Numeric table at a rational parameter value.
pub fn jack_table(n: u32, alpha: &Rat) -> Result<JackTable<Rat>, JackError> {
    build_table(n, alpha, MAX_WEIGHT)
}

/// Table with full rational-function coefficients in the parameter.
pub fn jack_table_symbolic(n: u32) -> Result<JackTable<RatFun>, JackError> {
    build_table(n, &RatFun::var(), MAX_WEIGHT_SYMBOLIC)
}

/// Cache of per-weight tables at a fixed parameter.
pub struct JackCtx<F: Field> {
    alpha: F,
    max: u32,
    tables: BTreeMap<u32, JackTable<F>>,
}

impl<F: Field> JackCtx<F> {
    pub fn new(alpha: F, max: u32) -> Self {
        JackCtx {
            alpha,
            max,
            tables: BTreeMap::new(),
        }
    }

    pub fn alpha(&self) -> &F {
        &self.alpha
    }

    pub fn table(&mut self, n: u32) -> Result<&JackTable<F>, JackError> {
        if !self.tables.contains_key(&n) {
            let t = build_table(n, &self.alpha, self.max)?;
            self.tables.insert(n, t);
        }
        Ok(self.tables.get(&n).unwrap())
    }

    /// Installs a prebuilt table, replacing any cached one of equal weight.
    pub fn install(&mut self, table: JackTable<F>) {
        self.tables.insert(table.weight, table);
    }
}

/// Symbolic cache at the generic parameter.
pub fn symbolic_ctx() -> JackCtx<RatFun> {
    JackCtx::new(RatFun::var(), MAX_WEIGHT_SYMBOLIC)
}

/// Checks the character sum rule at weight `q`:
/// `sum_p chi_p Z_p(I_k) = k^q prod_{m=1}^{q-1} (1 + m alpha)`.
/// Numeric in both arguments.
pub fn verify_sum_rule(q: u32, alpha: &Rat, k: &Rat) -> Result<bool, JackError> {
    let t = jack_table(q, alpha)?;
    let mut lhs = rat(0);
    for (l, chi) in t.character.iter().enumerate() {
        lhs += chi * t.dimension[l].eval(k);
    }
    let mut rhs = rat(1);
    for _ in 0..q {
        rhs *= k;
    }
    for m in 1..q as i64 {
        rhs *= rat(1) + rat(m) * alpha;
    }
    Ok(lhs == rhs)
}

/// The sum rule with both the parameter and `k` kept symbolic: the check
/// is an identity of polynomials in `k` over rational functions of the
/// parameter.
pub fn verify_sum_rule_symbolic(q: u32) -> Result<bool, JackError> {
    let t = jack_table_symbolic(q)?;
    let mut lhs: UPoly<RatFun> = UPoly::zero();
    for (l, chi) in t.character.iter().enumerate() {
        lhs = lhs + t.dimension[l].scale(chi);
    }
    let mut pref = RatFun::one();
    for m in 1..q as i64 {
        pref = pref * (RatFun::one() + RatFun::constant(rat(m)) * RatFun::var());
    }
    let rhs = UPoly::monomial(pref, q as usize);
    Ok(lhs == rhs)
}
