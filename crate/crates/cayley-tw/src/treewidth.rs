use crate::graph::SimpleGraph;
use crate::CayleyError;

/// Largest graph the exact search accepts.
pub const TREEWIDTH_LIMIT: usize = 20;

/// Exact treewidth by dynamic programming over elimination prefixes:
/// TW(S) = min over v in S of max(TW(S − v), |Q(S − v, v)|), where Q(S, v)
/// are the vertices outside S ∪ {v} reachable from v through S.
pub fn treewidth_exact(g: &SimpleGraph) -> Result<usize, CayleyError> {
    let n = g.len();
    if n > TREEWIDTH_LIMIT {
        return Err(CayleyError::TooLarge { vertices: n, limit: TREEWIDTH_LIMIT });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect();
    let q = |s: u32, v: usize| -> u32 {
        let mut inside = 1u32 << v;
        let mut frontier = inside;
        while frontier != 0 {
            let mut reach = 0;
            let mut f = frontier;
            while f != 0 {
                reach |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = reach & s & !inside;
            inside |= frontier;
        }
        let mut out = 0;
        let mut f = inside;
        while f != 0 {
            out |= adj[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        (out & !s & !(1 << v)).count_ones()
    };
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut tw = vec![u8::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut f = s;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            let rest = s & !(1 << v);
            let val = tw[rest as usize].max(q(rest, v) as u8);
            best = best.min(val);
        }
        tw[s as usize] = best;
    }
    Ok(tw[full as usize] as usize)
}
