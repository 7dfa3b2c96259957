//! Integer partitions and the dominance order.
//!
//! Partitions are plain vectors of parts in weakly decreasing order.
//! Enumeration is reverse lexicographic, matching the row order of the
//! tabulated symmetric-function data: `[n]` first, `[1,...,1]` last.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

/// A partition as weakly decreasing positive parts.
pub type Partition = Vec<u32>;

/// Sum of the parts.
pub fn weight(p: &[u32]) -> u32 {
    p.iter().sum()
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(n, n, &mut current, &mut out);
    out
}

fn rec(remaining: u32, max_part: u32, current: &mut Partition, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    let top = max_part.min(remaining);
    for part in (1..=top).rev() {
        current.push(part);
        rec(remaining - part, part, current, out);
        current.pop();
    }
}

/// Partitions of `n` with every part at least 2.
pub fn enumerate_partitions_no_ones(n: u32) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|p| p.iter().all(|&x| x >= 2))
        .collect()
}

/// Multiplicity of `part` in `p`.
pub fn multiplicity(p: &[u32], part: u32) -> u32 {
    p.iter().filter(|&&x| x == part).count() as u32
}

/// True when `a` is dominated by `b` (prefix sums of `a` never exceed
/// those of `b`).  Only meaningful for partitions of equal weight.
pub fn dominated_by(a: &[u32], b: &[u32]) -> bool {
    let mut sa = 0u32;
    let mut sb = 0u32;
    for i in 0..a.len().max(b.len()) {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

/// Formats a partition as `[3,1,1]`.
pub fn format_partition(p: &[u32]) -> String {
    let mut s = String::from("[");
    for (i, part) in p.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", part);
    }
    s.push(']');
    s
}

/// `z_p = prod_r r^{m_r} m_r!`, the symmetric-group centralizer order.
pub fn centralizer_order(p: &[u32]) -> u64 {
    let mut z = 1u64;
    let mut prev = 0u32;
    let mut mult = 0u64;
    for &part in p {
        if part == prev {
            mult += 1;
        } else {
            prev = part;
            mult = 1;
        }
        z *= part as u64 * mult;
    }
    z
}
