use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::Permutation;
use crate::GroupError;

const FULL_ASSOC_LIMIT: usize = 64;
const ASSOC_SAMPLES: usize = 200_000;

/// A finite group given by its multiplication table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    names: Vec<String>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.n).filter(|&i| seen[i]).collect()
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, GroupError> {
        check_names(&names, self.n)?;
        self.names = names;
        Ok(self)
    }

    pub fn is_homomorphism_into(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        map.len() == self.n
            && map.iter().all(|&x| x < target.n)
            && self
                .elements()
                .all(|a| self.elements().all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])))
    }
}

fn check_names(names: &[String], n: usize) -> Result<(), GroupError> {
    if names.len() != n {
        return Err(GroupError::BadNames(format!("expected {n} names, got {}", names.len())));
    }
    let mut seen = HashMap::new();
    for (i, nm) in names.iter().enumerate() {
        if nm.is_empty() || nm.chars().any(char::is_whitespace) {
            return Err(GroupError::BadNames(format!("invalid name `{nm}`")));
        }
        if let Some(j) = seen.insert(nm.clone(), i) {
            return Err(GroupError::BadNames(format!("`{nm}` names both {j} and {i}")));
        }
    }
    Ok(())
}

/// Verify the group axioms for a candidate table with identity at index 0.
pub fn check_group(rows: &[Vec<usize>], names: Option<Vec<String>>) -> Result<FiniteGroup, GroupError> {
    let n = rows.len();
    if n == 0 {
        return Err(GroupError::NotSquare { row: 0, len: 0, n: 0 });
    }
    let mut table = Vec::with_capacity(n * n);
    for (i, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(GroupError::NotSquare { row: i, len: r.len(), n });
        }
        for &x in r {
            if x >= n {
                return Err(GroupError::OutOfRange { row: i, value: x });
            }
        }
        table.extend_from_slice(r);
    }
    let mul = |a: usize, b: usize| table[a * n + b];
    for a in 0..n {
        if mul(0, a) != a || mul(a, 0) != a {
            return Err(GroupError::Identity(a));
        }
    }
    let mut inverse = vec![usize::MAX; n];
    for a in 0..n {
        match (0..n).find(|&b| mul(a, b) == 0 && mul(b, a) == 0) {
            Some(b) => inverse[a] = b,
            None => return Err(GroupError::NoInverse(a)),
        }
    }
    let assoc = |a: usize, b: usize, c: usize| mul(mul(a, b), c) == mul(a, mul(b, c));
    if n <= FULL_ASSOC_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !assoc(a, b, c) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..ASSOC_SAMPLES {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if !assoc(a, b, c) {
                return Err(GroupError::NotAssociative(a, b, c));
            }
        }
    }
    let names = match names {
        Some(v) => {
            check_names(&v, n)?;
            v
        }
        None => (0..n).map(|i| i.to_string()).collect(),
    };
    Ok(FiniteGroup { n, table, inverse, names })
}

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group of order 0");
    let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let names = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{k}"),
        })
        .collect();
    check_group(&rows, Some(names)).expect("cyclic table")
}

pub fn trivial() -> FiniteGroup {
    cyclic(1)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Symmetric group on n ≤ 5 points, elements in lexicographic order of images.
pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > 5 {
        return Err(GroupError::Unsupported(format!("symmetric group of degree {n}")));
    }
    let perms: Vec<Permutation> = permutations(n).into_iter().map(|p| Permutation::from_images(p).unwrap()).collect();
    let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let rows: Vec<Vec<usize>> = perms.iter().map(|a| perms.iter().map(|b| index[&a.compose(b)]).collect()).collect();
    let names = perms
        .iter()
        .map(|p| format!("p{}", p.images().iter().map(|x| x.to_string()).collect::<String>()))
        .collect();
    check_group(&rows, Some(names))
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (m, k) = (g.order(), h.order());
    let rows: Vec<Vec<usize>> = (0..m * k)
        .map(|x| (0..m * k).map(|y| g.mul(x / k, y / k) * k + h.mul(x % k, y % k)).collect())
        .collect();
    let names = (0..m * k).map(|x| format!("({},{})", g.name(x / k), h.name(x % k))).collect();
    check_group(&rows, Some(names)).expect("product of groups")
}

/// Parse `order n` followed by n table rows; an optional `names ...` line sets aliases.
pub fn parse_group(text: &str) -> Result<FiniteGroup, GroupError> {
    let mut order: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut rows = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let col = line.len() - line.trim_start().len() + 1;
        let err = |msg: String| GroupError::Parse { line: ln + 1, col, msg };
        if let Some(rest) = t.strip_prefix("order") {
            order = Some(rest.trim().parse().map_err(|_| err(format!("bad order `{}`", rest.trim())))?);
        } else if let Some(rest) = t.strip_prefix("names") {
            names = Some(rest.split_whitespace().map(str::to_string).collect());
        } else {
            if order.is_none() {
                return Err(err("expected `order n` first".into()));
            }
            let mut row = Vec::new();
            let mut c = col;
            for tok in line.split(' ') {
                if !tok.is_empty() {
                    row.push(tok.parse().map_err(|_| GroupError::Parse {
                        line: ln + 1,
                        col: c,
                        msg: format!("bad index `{tok}`"),
                    })?);
                }
                c += tok.len() + 1;
            }
            rows.push(row);
        }
    }
    let n = order.ok_or(GroupError::Parse { line: 1, col: 1, msg: "missing `order`".into() })?;
    if rows.len() != n {
        return Err(GroupError::Parse { line: text.lines().count().max(1), col: 1, msg: format!("expected {n} rows, got {}", rows.len()) });
    }
    check_group(&rows, names)
}

/// Built-in groups by name: `cyclic N`, `symmetric N`, `trivial`.
pub fn builtin(spec: &str) -> Result<FiniteGroup, GroupError> {
    let parts: Vec<&str> = spec.split_whitespace().collect();
    let num = |i: usize| -> Result<usize, GroupError> {
        parts.get(i).and_then(|s| s.parse().ok()).ok_or_else(|| GroupError::Unsupported(spec.to_string()))
    };
    match parts.first().copied() {
        Some("trivial") => Ok(trivial()),
        Some("cyclic") => {
            let n = num(1)?;
            if n == 0 {
                return Err(GroupError::Unsupported(spec.to_string()));
            }
            Ok(cyclic(n))
        }
        Some("symmetric") => symmetric(num(1)?),
        _ => Err(GroupError::Unsupported(spec.to_string())),
    }
}
