//! Finite groups stored as full multiplication tables.
//!
//! Elements are indexed `0..order`. Presets cover the cyclic, dihedral,
//! semidihedral, generalized quaternion, elementary abelian, symmetric and
//! alternating families, plus direct products and permutation closures.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::Guards;

#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    id: usize,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl Group {
    /// Builds a group from a multiplication table `mul[a * order + b] = a·b`.
    ///
    /// The identity and inverses are located from the table; associativity
    /// is not checked here (see [`Group::check_axioms`]).
    pub fn from_table(
        order: usize,
        mul: Vec<u32>,
        generators: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if order == 0 || mul.len() != order * order {
            return Err(Error::Precondition(
                "table size does not match order".into(),
            ));
        }
        if mul.iter().any(|&x| x as usize >= order) {
            return Err(Error::Precondition("table entry out of range".into()));
        }
        let id = (0..order)
            .find(|&e| {
                (0..order)
                    .all(|x| mul[e * order + x] as usize == x && mul[x * order + e] as usize == x)
            })
            .ok_or_else(|| Error::Precondition("table has no identity".into()))?;
        let mut inv = vec![u32::MAX; order];
        for x in 0..order {
            for y in 0..order {
                if mul[x * order + y] as usize == id {
                    inv[x] = y as u32;
                    break;
                }
            }
            if inv[x] == u32::MAX || mul[inv[x] as usize * order + x] as usize != id {
                return Err(Error::Precondition(format!(
                    "element {x} has no two-sided inverse"
                )));
            }
        }
        let mut generators: Vec<usize> = generators.into_iter().filter(|&g| g < order).collect();
        if generators.is_empty() {
            generators.push(id);
        }
        Ok(Self {
            order,
            mul,
            inv,
            id,
            generators,
            labels,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.id
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => format!("g{x}"),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, x: usize, mut e: usize) -> usize {
        let mut acc = self.id;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != self.id {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| {
            self.generators
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| {
                self.generators
                    .iter()
                    .all(|&g| self.mul(z, g) == self.mul(g, z))
            })
            .collect()
    }

    /// Checks identity, inverse and associativity laws. Exhaustive for
    /// order ≤ 256, otherwise on `samples` pseudo-random triples.
    pub fn check_axioms(&self, samples: usize) -> bool {
        let n = self.order;
        for x in 0..n {
            if self.mul(x, self.id) != x || self.mul(self.id, x) != x {
                return false;
            }
            if self.mul(x, self.inv(x)) != self.id || self.mul(self.inv(x), x) != self.id {
                return false;
            }
        }
        let assoc = |x: usize, y: usize, z: usize| {
            self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z))
        };
        if n <= 256 {
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| assoc(x, y, z))))
        } else {
            // splitmix64 stream; deterministic
            let mut state = 0x9e37_79b9_7f4a_7c15u64;
            let mut next = || {
                state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
                ((z ^ (z >> 31)) % n as u64) as usize
            };
            (0..samples).all(|_| {
                let (x, y, z) = (next(), next(), next());
                assoc(x, y, z)
            })
        }
    }

    /// Closure of `gens` under multiplication, as a sorted element list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.id] = true;
        let mut elems = vec![self.id];
        let mut i = 0;
        while i < elems.len() {
            let e = elems[i];
            for &g in gens {
                let p = self.mul(e, g);
                if !seen[p] {
                    seen[p] = true;
                    elems.push(p);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// The group formed by `elements` (a subgroup), re-indexed by position.
    /// Returns the group and the embedding `new index -> old index`.
    pub fn restrict_to(
        &self,
        elements: &[usize],
        generators: &[usize],
    ) -> Result<(Group, Vec<usize>)> {
        let k = elements.len();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in elements.iter().enumerate() {
            pos[x] = i;
        }
        let mut mul = Vec::with_capacity(k * k);
        for &a in elements {
            for &b in elements {
                let p = pos[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::Precondition("element set is not closed".into()));
                }
                mul.push(p as u32);
            }
        }
        let gens = generators
            .iter()
            .map(|&g| pos[g])
            .filter(|&p| p != usize::MAX)
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| elements.iter().map(|&x| l[x].clone()).collect());
        Ok((Group::from_table(k, mul, gens, labels)?, elements.to_vec()))
    }

    /// Quotient of the subgroup `t` by `s ⊴ t` (both given as sorted element
    /// lists of `self`). Returns the quotient and the projection, defined on
    /// elements of `t` only.
    pub fn section_quotient(
        &self,
        t: &[usize],
        s: &[usize],
    ) -> Result<(Group, Vec<Option<usize>>)> {
        let mut in_t = vec![false; self.order];
        for &x in t {
            in_t[x] = true;
        }
        let mut in_s = vec![false; self.order];
        for &x in s {
            in_s[x] = true;
        }
        if !s.iter().all(|&x| in_t[x]) || !t.len().is_multiple_of(s.len()) {
            return Err(Error::Precondition("S is not contained in T".into()));
        }
        for &x in t {
            for &y in s {
                if !in_s[self.conj(x, y)] {
                    return Err(Error::Precondition("subgroup is not normal".into()));
                }
            }
        }
        let mut proj: Vec<Option<usize>> = vec![None; self.order];
        let mut reps = Vec::new();
        for &x in t {
            if proj[x].is_some() {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &y in s {
                proj[self.mul(x, y)] = Some(c);
            }
        }
        let q = reps.len();
        let mut mul = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                mul.push(proj[self.mul(a, b)].expect("T closed") as u32);
            }
        }
        let mut gens: Vec<usize> = Vec::new();
        for &x in t {
            // images of the parent generators that lie in T, else all of T's reps
            if self.generators.contains(&x) {
                let c = proj[x].unwrap();
                if c != proj[self.id].unwrap() && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        let quotient_gens: Vec<usize> = {
            let g = Group::from_table(q, mul.clone(), gens.clone(), None)?;
            if g.generated(&gens).len() == q {
                gens
            } else {
                greedy_generators(&g)
            }
        };
        let labels = self.labels.as_ref().map(|l| {
            reps.iter()
                .map(|&r| {
                    if s.len() > 1 {
                        format!("[{}]", l[r])
                    } else {
                        l[r].clone()
                    }
                })
                .collect()
        });
        Ok((Group::from_table(q, mul, quotient_gens, labels)?, proj))
    }

    /// Direct product; element `(a, b)` has index `a * other.order() + b`.
    pub fn direct_product(&self, other: &Group) -> Group {
        let (n, m) = (self.order, other.order);
        let nm = n * m;
        let mut mul = Vec::with_capacity(nm * nm);
        for a in 0..n {
            for b in 0..m {
                for c in 0..n {
                    for d in 0..m {
                        mul.push((self.mul(a, c) * m + other.mul(b, d)) as u32);
                    }
                }
            }
        }
        let mut gens: Vec<usize> = self
            .generators
            .iter()
            .filter(|&&g| g != self.id)
            .map(|&g| g * m + other.id)
            .collect();
        gens.extend(
            other
                .generators
                .iter()
                .filter(|&&h| h != other.id)
                .map(|&h| self.id * m + h),
        );
        let labels = match (&self.labels, &other.labels) {
            (Some(l), Some(r)) => Some(
                (0..n)
                    .flat_map(|a| (0..m).map(move |b| (a, b)))
                    .map(|(a, b)| format!("({},{})", l[a], r[b]))
                    .collect(),
            ),
            _ => None,
        };
        Group::from_table(nm, mul, gens, labels).expect("product of groups is a group")
    }

    pub fn cyclic(n: usize) -> Self {
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push(((a + b) % n) as u32);
            }
        }
        let labels = (0..n)
            .map(|i| if i == 0 { "1".into() } else { format!("a^{i}") })
            .collect();
        Group::from_table(n, mul, vec![if n > 1 { 1 } else { 0 }], Some(labels)).unwrap()
    }

    pub fn elementary_abelian2(k: u32) -> Self {
        let n = 1usize << k;
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push((a ^ b) as u32);
            }
        }
        let gens = (0..k).map(|i| 1usize << i).collect();
        let labels = (0..n)
            .map(|a| format!("e{a:0width$b}", width = k as usize))
            .collect();
        Group::from_table(n, mul, gens, Some(labels)).unwrap()
    }

    /// `⟨r, s⟩` with `|r| = m`, `s r s⁻¹ = r^twist` and `s² = r^square`.
    /// Element `r^i s^j` has index `i + m j`.
    fn metacyclic(m: usize, twist: usize, square: usize) -> Self {
        let n = 2 * m;
        let mut tw = [1usize; 2];
        tw[1] = twist % m;
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            let (i, j) = (x % m, x / m);
            for y in 0..n {
                let (k, l) = (y % m, y / m);
                // r^i s^j r^k s^l = r^(i + tw^j k) s^(j+l)
                let mut e = (i + tw[j] * k) % m;
                let mut s = j + l;
                if s == 2 {
                    e = (e + square) % m;
                    s = 0;
                }
                mul.push((e + m * s) as u32);
            }
        }
        let labels = (0..n)
            .map(|x| {
                let (i, j) = (x % m, x / m);
                match (i, j) {
                    (0, 0) => "1".to_string(),
                    (0, 1) => "s".to_string(),
                    (i, 0) => format!("r^{i}"),
                    (i, _) => format!("r^{i}s"),
                }
            })
            .collect();
        Group::from_table(n, mul, vec![1 % n, m], Some(labels)).unwrap()
    }

    /// Dihedral group of order `n` (`n` even, `n ≥ 4`).
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::Unsupported(format!("dihedral group of order {n}")));
        }
        let m = n / 2;
        Ok(Self::metacyclic(m, m - 1, 0))
    }

    /// Semidihedral group of order `n = 2^k ≥ 16`: `s r s = r^(n/4 - 1)`.
    pub fn semidihedral(n: usize) -> Result<Self> {
        if n < 16 || !n.is_power_of_two() {
            return Err(Error::Unsupported(format!(
                "semidihedral group of order {n}"
            )));
        }
        let m = n / 2;
        Ok(Self::metacyclic(m, m / 2 - 1, 0))
    }

    /// Generalized quaternion group of order `n = 2^k ≥ 8`.
    pub fn quaternion(n: usize) -> Result<Self> {
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::Unsupported(format!("quaternion group of order {n}")));
        }
        let m = n / 2;
        Ok(Self::metacyclic(m, m - 1, m / 2))
    }

    pub fn symmetric(n: usize, guards: &Guards) -> Result<Self> {
        if n == 0 || n > 6 {
            return Err(Error::Unsupported(format!("S{n}")));
        }
        if n == 1 {
            return Ok(Self::trivial());
        }
        let gens = vec![vec![vec![1, 2]], vec![(1..=n).collect()]];
        Self::from_permutations(n, &gens, guards)
    }

    pub fn alternating(n: usize, guards: &Guards) -> Result<Self> {
        if n == 0 || n > 6 {
            return Err(Error::Unsupported(format!("A{n}")));
        }
        if n < 3 {
            return Ok(Self::trivial());
        }
        let gens: Vec<Vec<Vec<usize>>> = (3..=n).map(|k| vec![vec![1, 2, k]]).collect();
        Self::from_permutations(n, &gens, guards)
    }

    /// Closure of permutations of `1..=degree` given in cycle notation.
    /// Products act left to right: `(x·y)(p) = y(x(p))`.
    pub fn from_permutations(
        degree: usize,
        gens: &[Vec<Vec<usize>>],
        guards: &Guards,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Parse("degree must be positive".into()));
        }
        let mut perms: Vec<Vec<u16>> = Vec::new();
        for cycles in gens {
            let mut p: Vec<u16> = (0..degree as u16).collect();
            for cycle in cycles {
                let mut seen = std::collections::HashSet::new();
                for &pt in cycle {
                    if pt == 0 || pt > degree {
                        return Err(Error::Parse(format!("point {pt} outside 1..{degree}")));
                    }
                    if !seen.insert(pt) {
                        return Err(Error::Parse(format!("point {pt} repeated in a cycle")));
                    }
                }
                // apply cycles right to left is irrelevant for disjoint cycles;
                // compose in written order for overlapping ones
                let mut c: Vec<u16> = (0..degree as u16).collect();
                for w in 0..cycle.len() {
                    c[cycle[w] - 1] = (cycle[(w + 1) % cycle.len()] - 1) as u16;
                }
                p = p.iter().map(|&x| c[x as usize]).collect();
            }
            perms.push(p);
        }
        let identity: Vec<u16> = (0..degree as u16).collect();
        let mut index: HashMap<Vec<u16>, usize> = HashMap::new();
        let mut elems = vec![identity.clone()];
        index.insert(identity, 0);
        let compose =
            |x: &[u16], y: &[u16]| -> Vec<u16> { x.iter().map(|&p| y[p as usize]).collect() };
        let mut i = 0;
        while i < elems.len() {
            for g in &perms {
                let p = compose(&elems[i], g);
                if !index.contains_key(&p) {
                    if elems.len() >= guards.max_elements {
                        return Err(Error::Guard(format!(
                            "permutation closure exceeds {} elements",
                            guards.max_elements
                        )));
                    }
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut mul = Vec::with_capacity(n * n);
        for x in &elems {
            for y in &elems {
                mul.push(index[&compose(x, y)] as u32);
            }
        }
        let gen_idx = perms.iter().map(|p| index[p]).collect();
        let labels = elems.iter().map(|p| cycle_string(p)).collect();
        Group::from_table(n, mul, gen_idx, Some(labels))
    }
}

fn cycle_string(p: &[u16]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

fn greedy_generators(g: &Group) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut have = vec![g.identity()];
    for x in 0..g.order() {
        if have.binary_search(&x).is_err() {
            gens.push(x);
            have = g.generated(&gens);
        }
    }
    gens
}

/// Quotient of `g` by a normal subgroup given as an element list. The
/// projection is a surjective homomorphism with kernel `normal`.
pub fn quotient_group(g: &Group, normal: &[usize]) -> Result<(Group, Vec<usize>)> {
    let all: Vec<usize> = (0..g.order()).collect();
    let mut sorted = normal.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if g.generated(&sorted) != sorted {
        return Err(Error::Precondition("kernel is not a subgroup".into()));
    }
    let (q, proj) = g.section_quotient(&all, &sorted)?;
    Ok((
        q,
        proj.into_iter()
            .map(|p| p.expect("defined on all of G"))
            .collect(),
    ))
}

/// Isomorphism type, decided from invariants for the families that matter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoClassLabel {
    Trivial,
    Cyclic(usize),
    Klein4,
    ElemAbelian2(u32),
    Dihedral(usize),
    Semidihedral(usize),
    Quaternion(usize),
    OddPrimeCyclic(usize),
    Other,
}

impl IsoClassLabel {
    /// Membership in the class of groups carrying an ε-element: odd prime
    /// cyclic, C4, Klein four, dihedral of order ≥ 8, semidihedral.
    pub fn in_class_r(self) -> bool {
        matches!(
            self,
            IsoClassLabel::OddPrimeCyclic(_)
                | IsoClassLabel::Cyclic(4)
                | IsoClassLabel::Klein4
                | IsoClassLabel::Dihedral(_)
                | IsoClassLabel::Semidihedral(_)
        )
    }

    /// Subquotient closure of the above: adds the trivial group, cyclic
    /// 2-groups and generalized quaternion groups.
    pub fn in_class_t(self) -> bool {
        self.in_class_r()
            || matches!(self, IsoClassLabel::Trivial | IsoClassLabel::Quaternion(_))
            || matches!(self, IsoClassLabel::Cyclic(n) if n.is_power_of_two())
    }

    /// Short name, e.g. `C4`, `C2^2`, `D8`, `SD16`. `Other` has no name of
    /// its own; see [`IsoClassLabel::name_with_order`].
    pub fn name_with_order(self, order: usize) -> String {
        match self {
            IsoClassLabel::Trivial => "C1".into(),
            IsoClassLabel::Cyclic(n) | IsoClassLabel::OddPrimeCyclic(n) => format!("C{n}"),
            IsoClassLabel::Klein4 => "C2^2".into(),
            IsoClassLabel::ElemAbelian2(k) => format!("C2^{k}"),
            IsoClassLabel::Dihedral(n) => format!("D{n}"),
            IsoClassLabel::Semidihedral(n) => format!("SD{n}"),
            IsoClassLabel::Quaternion(n) => format!("Q{n}"),
            IsoClassLabel::Other => format!("G{order}"),
        }
    }
}

impl fmt::Display for IsoClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoClassLabel::Other => f.write_str("Other"),
            l => f.write_str(&l.name_with_order(0)),
        }
    }
}

fn is_odd_prime(n: usize) -> bool {
    n > 2
        && n % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Classifies `g` into one of the named families, or `Other`.
pub fn classify(g: &Group) -> IsoClassLabel {
    let n = g.order();
    if n == 1 {
        return IsoClassLabel::Trivial;
    }
    let orders: Vec<usize> = (0..n).map(|x| g.element_order(x)).collect();
    let max_order = orders.iter().copied().max().unwrap_or(1);
    if max_order == n {
        return if is_odd_prime(n) {
            IsoClassLabel::OddPrimeCyclic(n)
        } else {
            IsoClassLabel::Cyclic(n)
        };
    }
    let involutions = orders.iter().filter(|&&o| o == 2).count();
    if n.is_power_of_two() && involutions == n - 1 {
        let k = n.trailing_zeros();
        return if k == 2 {
            IsoClassLabel::Klein4
        } else {
            IsoClassLabel::ElemAbelian2(k)
        };
    }
    if n.is_power_of_two() && n >= 8 && max_order == n / 2 && !g.is_abelian() {
        // nonabelian 2-groups with a cyclic maximal subgroup: dihedral,
        // semidihedral, quaternion, or modular (3 involutions)
        if involutions == n / 2 + 1 {
            return IsoClassLabel::Dihedral(n);
        }
        if involutions == 1 {
            return IsoClassLabel::Quaternion(n);
        }
        if n >= 16 && involutions == n / 4 + 1 {
            return IsoClassLabel::Semidihedral(n);
        }
    }
    IsoClassLabel::Other
}

fn parse_usize(s: &str, spec: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::Parse(format!("expected a number in `{spec}`, found `{s}`")))
}

fn parse_factor(spec: &str, guards: &Guards) -> Result<Group> {
    let s = spec.trim();
    let g = if s == "Klein4" || s == "V4" {
        Group::elementary_abelian2(2)
    } else if let Some(k) = s.strip_prefix("C2^") {
        let k = parse_usize(k, spec)?;
        if k == 0 || k > 16 {
            return Err(Error::Unsupported(format!("C2^{k}")));
        }
        Group::elementary_abelian2(k as u32)
    } else if let Some(n) = s.strip_prefix("SD") {
        Group::semidihedral(parse_usize(n, spec)?)?
    } else if let Some(n) = s.strip_prefix('C') {
        let n = parse_usize(n, spec)?;
        if n == 0 {
            return Err(Error::Parse("C0".into()));
        }
        Group::cyclic(n)
    } else if let Some(n) = s.strip_prefix('D') {
        Group::dihedral(parse_usize(n, spec)?)?
    } else if let Some(n) = s.strip_prefix('Q') {
        Group::quaternion(parse_usize(n, spec)?)?
    } else if let Some(n) = s.strip_prefix('S') {
        Group::symmetric(parse_usize(n, spec)?, guards)?
    } else if let Some(n) = s.strip_prefix('A') {
        Group::alternating(parse_usize(n, spec)?, guards)?
    } else {
        return Err(Error::Parse(format!("unknown group family in `{spec}`")));
    };
    if g.order() > guards.max_elements {
        return Err(Error::Guard(format!(
            "{spec} has more than {} elements",
            guards.max_elements
        )));
    }
    Ok(g)
}

/// Parses cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
pub fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected `(` in `{s}`")))?;
        let end = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{s}`")))?;
        let pts = body[..end]
            .split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| parse_usize(t, s))
            .collect::<Result<Vec<_>>>()?;
        if !pts.is_empty() {
            cycles.push(pts);
        }
        rest = body[end + 1..].trim_start();
    }
    Ok(cycles)
}

/// Builds a group from a spec string: `C<n>`, `D<n>`, `SD<n>`, `Q<n>`,
/// `C2^<k>` (alias `Klein4`), `S<n>`, `A<n>`, products joined with `x`, or
/// `perm:<degree>:<cycles;cycles;...>`.
pub fn build_preset(spec: &str, guards: &Guards) -> Result<Group> {
    let s = spec.trim();
    if let Some(rest) = s.strip_prefix("perm:") {
        let (deg, gens) = rest.split_once(':').ok_or_else(|| {
            Error::Parse(format!("expected perm:<degree>:<generators> in `{spec}`"))
        })?;
        let degree = parse_usize(deg.trim(), spec)?;
        let gens = gens
            .split(';')
            .filter(|t| !t.trim().is_empty())
            .map(parse_cycles)
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Err(Error::Parse(format!("no generators in `{spec}`")));
        }
        return Group::from_permutations(degree, &gens, guards);
    }
    if s.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let mut factors = s.split('x');
    let mut g = parse_factor(factors.next().unwrap(), guards)?;
    for f in factors {
        let h = parse_factor(f, guards)?;
        if g.order() * h.order() > guards.max_elements {
            return Err(Error::Guard(format!(
                "{spec} has more than {} elements",
                guards.max_elements
            )));
        }
        g = g.direct_product(&h);
    }
    Ok(g)
}
