//! Subgroup lattices: enumeration, conjugacy classes, normalizers, Möbius
//! functions and sections `(T, S)` with `S ⊴ T`.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::groups::{classify, Group, IsoClassLabel};
use crate::Guards;

/// A subgroup, keyed by its membership vector over the parent's elements.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: BitVec,
    order: usize,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// Subgroup generated by `gens`.
    pub fn generated(g: &Group, gens: &[usize]) -> Self {
        let elems = g.generated(gens);
        let mut gens: Vec<usize> = gens
            .iter()
            .copied()
            .filter(|&x| x != g.identity())
            .collect();
        gens.sort_unstable();
        gens.dedup();
        Self {
            members: BitVec::from_ones(g.order(), elems.iter().copied()),
            order: elems.len(),
            generators: gens,
        }
    }

    /// Subgroup with the given element set; fails if the set is not closed.
    pub fn from_elements(g: &Group, elements: &[usize]) -> Result<Self> {
        let mut members = BitVec::zeros(g.order());
        for &x in elements {
            members.set(x, true);
        }
        let order = members.count_ones();
        let mut gens: Vec<usize> = Vec::new();
        let mut have = vec![g.identity()];
        for x in members.iter_ones() {
            if have.binary_search(&x).is_err() {
                gens.push(x);
                have = g.generated(&gens);
                if have.len() > order {
                    return Err(Error::Precondition("element set is not a subgroup".into()));
                }
            }
        }
        if have.len() != order || !members.get(g.identity()) {
            return Err(Error::Precondition("element set is not a subgroup".into()));
        }
        Ok(Self {
            members,
            order,
            generators: gens,
        })
    }

    pub fn whole(g: &Group) -> Self {
        Self::generated(g, g.generators())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn members(&self) -> &BitVec {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.get(x)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.iter_ones().collect()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset_of(&other.members)
    }

    /// `x H x⁻¹`
    pub fn conjugate(&self, g: &Group, x: usize) -> Subgroup {
        let mut members = BitVec::zeros(g.order());
        for h in self.members.iter_ones() {
            members.set(g.conj(x, h), true);
        }
        Subgroup {
            members,
            order: self.order,
            generators: self.generators.iter().map(|&h| g.conj(x, h)).collect(),
        }
    }

    /// Whether `x` normalizes this subgroup.
    pub fn is_normalized_by(&self, g: &Group, x: usize) -> bool {
        self.generators.iter().all(|&h| self.contains(g.conj(x, h)))
    }

    pub fn is_normal_in(&self, g: &Group, over: &Subgroup) -> bool {
        over.generators.iter().all(|&x| self.is_normalized_by(g, x))
    }

    /// Subgroup generated by `self` and `other`.
    pub fn join(&self, g: &Group, other: &Subgroup) -> Subgroup {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        Subgroup::generated(g, &gens)
    }
}

/// All subgroups of a group with their conjugacy data.
#[derive(Clone, Debug)]
pub struct SubgroupTable {
    subgroups: Vec<Subgroup>,
    index: HashMap<BitVec, usize>,
    class_of: Vec<usize>,
    class_reps: Vec<usize>,
    class_members: Vec<Vec<usize>>,
    normalizers: Vec<Subgroup>,
    conjugators: Vec<usize>,
    leq: Vec<BitVec>,
}

impl SubgroupTable {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn index_of(&self, members: &BitVec) -> Option<usize> {
        self.index.get(members).copied()
    }

    pub fn index_of_elements(
        &self,
        g: &Group,
        elements: impl IntoIterator<Item = usize>,
    ) -> Option<usize> {
        self.index_of(&BitVec::from_ones(g.order(), elements))
    }

    pub fn num_classes(&self) -> usize {
        self.class_reps.len()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_reps(&self) -> &[usize] {
        &self.class_reps
    }

    /// Representative subgroup of class `c`.
    pub fn rep(&self, c: usize) -> &Subgroup {
        &self.subgroups[self.class_reps[c]]
    }

    pub fn class_members(&self, c: usize) -> &[usize] {
        &self.class_members[c]
    }

    pub fn normalizer(&self, c: usize) -> &Subgroup {
        &self.normalizers[c]
    }

    /// An element `x` with `x H x⁻¹` equal to the class representative of `H`.
    pub fn conjugator(&self, i: usize) -> usize {
        self.conjugators[i]
    }

    /// `H ≤_G K`: some conjugate of class `h` is contained in class `k`'s rep.
    pub fn subconjugate(&self, h: usize, k: usize) -> bool {
        self.leq[h].get(k)
    }

    /// Index of `x H_i x⁻¹`.
    pub fn conjugate_index(&self, g: &Group, x: usize, i: usize) -> usize {
        self.index[self.subgroups[i].conjugate(g, x).members()]
    }

    /// Class index of the subgroup with the given member set.
    pub fn class_of_members(&self, members: &BitVec) -> Option<usize> {
        self.index_of(members).map(|i| self.class_of[i])
    }

    /// Indices of normal subgroups, in table order.
    pub fn normal_subgroups(&self) -> Vec<usize> {
        self.class_members
            .iter()
            .filter(|m| m.len() == 1)
            .map(|m| m[0])
            .collect()
    }

    /// Subgroups contained in subgroup `i`, in table order.
    pub fn subgroups_below(&self, i: usize) -> Vec<usize> {
        let top = &self.subgroups[i];
        (0..=i)
            .filter(|&j| self.subgroups[j].is_subgroup_of(top))
            .collect()
    }
}

/// Enumerates every subgroup of `g`.
///
/// Starts from the cyclic subgroups and repeatedly joins the newest layer
/// with cyclic subgroups until no new subgroup appears.
pub fn all_subgroups(g: &Group, guards: &Guards) -> Result<SubgroupTable> {
    let n = g.order();
    let mut subgroups: Vec<Subgroup> = Vec::new();
    let mut index: HashMap<BitVec, usize> = HashMap::new();

    let mut insert = |sub: Subgroup, subgroups: &mut Vec<Subgroup>| -> Result<Option<usize>> {
        if index.contains_key(&sub.members) {
            return Ok(None);
        }
        if subgroups.len() >= guards.max_subgroups {
            return Err(Error::Guard(format!(
                "more than {} subgroups",
                guards.max_subgroups
            )));
        }
        index.insert(sub.members.clone(), subgroups.len());
        subgroups.push(sub);
        Ok(Some(subgroups.len() - 1))
    };

    let mut cyclic: Vec<usize> = Vec::new();
    for x in 0..n {
        if let Some(i) = insert(Subgroup::generated(g, &[x]), &mut subgroups)? {
            cyclic.push(i);
        }
    }
    let cyclic_gens: Vec<usize> = cyclic
        .iter()
        .map(|&i| {
            subgroups[i]
                .generators
                .first()
                .copied()
                .unwrap_or(g.identity())
        })
        .collect();

    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &h in &frontier {
            for &x in &cyclic_gens {
                if subgroups[h].contains(x) {
                    continue;
                }
                let mut gens = subgroups[h].generators.clone();
                gens.push(x);
                if let Some(i) = insert(Subgroup::generated(g, &gens), &mut subgroups)? {
                    next.push(i);
                }
            }
        }
        frontier = next;
    }

    subgroups.sort_by(|a, b| {
        a.order
            .cmp(&b.order)
            .then_with(|| a.members.cmp(&b.members))
    });
    let index: HashMap<BitVec, usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.members.clone(), i))
        .collect();

    let count = subgroups.len();
    let mut class_of = vec![usize::MAX; count];
    let mut conjugators = vec![g.identity(); count];
    let mut class_reps = Vec::new();
    let mut class_members = Vec::new();
    for start in 0..count {
        if class_of[start] != usize::MAX {
            continue;
        }
        let c = class_reps.len();
        class_reps.push(start);
        class_of[start] = c;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let cur = members[i];
            for &x in g.generators() {
                let conj = subgroups[cur].conjugate(g, x);
                let j = index[&conj.members];
                if class_of[j] == usize::MAX {
                    class_of[j] = c;
                    // conj = x cur x⁻¹, so conjugator(j) = conjugator(cur) · x⁻¹
                    conjugators[j] = g.mul(conjugators[cur], g.inv(x));
                    members.push(j);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        class_members.push(members);
    }

    let normalizers: Vec<Subgroup> = class_reps
        .iter()
        .map(|&r| {
            let h = &subgroups[r];
            let elems: Vec<usize> = (0..n).filter(|&x| h.is_normalized_by(g, x)).collect();
            Subgroup::from_elements(g, &elems).expect("normalizer is a subgroup")
        })
        .collect();

    let k = class_reps.len();
    let mut leq = vec![BitVec::zeros(k); k];
    for a in 0..k {
        for b in 0..k {
            let big = &subgroups[class_reps[b]];
            if !big.order.is_multiple_of(subgroups[class_reps[a]].order) {
                continue;
            }
            if class_members[a]
                .iter()
                .any(|&m| subgroups[m].is_subgroup_of(big))
            {
                leq[a].set(b, true);
            }
        }
    }

    Ok(SubgroupTable {
        subgroups,
        index,
        class_of,
        class_reps,
        class_members,
        normalizers,
        conjugators,
        leq,
    })
}

/// Möbius functions of the subgroup poset (literal inclusion) and of the
/// poset of normal subgroups.
#[derive(Clone, Debug)]
pub struct MoebiusTable {
    /// For each subgroup `B`, the pairs `(A, μ(A, B))` with `A ≤ B` and `μ ≠ 0`.
    below: Vec<Vec<(usize, i64)>>,
    normal: Vec<usize>,
    mu_normal: Vec<i64>,
}

impl MoebiusTable {
    pub fn mu(&self, a: usize, b: usize) -> i64 {
        self.below[b]
            .binary_search_by_key(&a, |&(x, _)| x)
            .map(|i| self.below[b][i].1)
            .unwrap_or(0)
    }

    /// Nonzero `μ(A, B)` over `A ≤ B`.
    pub fn column(&self, b: usize) -> &[(usize, i64)] {
        &self.below[b]
    }

    pub fn normal_subgroups(&self) -> &[usize] {
        &self.normal
    }

    /// `μ_{⊴G}(1, N)` aligned with [`MoebiusTable::normal_subgroups`].
    pub fn mu_normal(&self) -> &[i64] {
        &self.mu_normal
    }
}

/// Nonzero `μ(A, top)` for all `A ≤ top`, via `μ(A, B) = −Σ_{A < C ≤ B} μ(C, B)`.
pub fn moebius_column(table: &SubgroupTable, top: usize) -> Vec<(usize, i64)> {
    let down = table.subgroups_below(top);
    let mut nonzero: Vec<(usize, i64)> = Vec::new();
    for &a in down.iter().rev() {
        let mu = if a == top {
            1
        } else {
            let sa = table.subgroup(a);
            -nonzero
                .iter()
                .filter(|&&(c, _)| sa.is_subgroup_of(table.subgroup(c)))
                .map(|&(_, m)| m)
                .sum::<i64>()
        };
        if mu != 0 {
            nonzero.push((a, mu));
        }
    }
    nonzero.sort_unstable();
    nonzero
}

pub fn moebius(table: &SubgroupTable) -> MoebiusTable {
    let below = (0..table.len()).map(|b| moebius_column(table, b)).collect();
    let normal = table.normal_subgroups();
    let mu_normal = normal_moebius(table, &normal);
    MoebiusTable {
        below,
        normal,
        mu_normal,
    }
}

/// `μ_{⊴G}(1, N)` for each normal subgroup in `normal` (table order).
pub fn normal_moebius(table: &SubgroupTable, normal: &[usize]) -> Vec<i64> {
    let mut mu: Vec<i64> = Vec::with_capacity(normal.len());
    for (i, &n) in normal.iter().enumerate() {
        let sn = table.subgroup(n);
        let v = if i == 0 {
            1
        } else {
            -(0..i)
                .filter(|&j| table.subgroup(normal[j]).is_subgroup_of(sn))
                .map(|j| mu[j])
                .sum::<i64>()
        };
        mu.push(v);
    }
    mu
}

/// A section `(T, S)` with `S ⊴ T ≤ G`, carrying its quotient `T/S`.
#[derive(Clone, Debug)]
pub struct Section {
    /// Subgroup index of `T`.
    pub t: usize,
    /// Subgroup index of `S`.
    pub s: usize,
    pub quotient: Group,
    /// `G`-element to `T/S`-element; `None` outside `T`.
    pub projection: Vec<Option<usize>>,
    pub label: IsoClassLabel,
}

impl Section {
    pub fn new(g: &Group, table: &SubgroupTable, t: usize, s: usize) -> Result<Self> {
        let (ts, ss) = (table.subgroup(t), table.subgroup(s));
        if !ss.is_subgroup_of(ts) || !ss.is_normal_in(g, ts) {
            return Err(Error::Precondition("S is not normal in T".into()));
        }
        let (quotient, projection) = g.section_quotient(&ts.elements(), &ss.elements())?;
        let label = classify(&quotient);
        Ok(Self {
            t,
            s,
            quotient,
            projection,
            label,
        })
    }

    /// Image of the subgroup with the given members (contained in `T`) in `T/S`.
    pub fn project(&self, members: &BitVec) -> BitVec {
        BitVec::from_ones(self.quotient.order(), {
            let mut img: Vec<usize> = members
                .iter_ones()
                .filter_map(|x| self.projection[x])
                .collect();
            img.sort_unstable();
            img.dedup();
            img
        })
    }

    /// Preimage in `G` of a set of elements of `T/S`.
    pub fn preimage(&self, quotient_members: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.projection.len());
        for (x, p) in self.projection.iter().enumerate() {
            if let Some(q) = p {
                if quotient_members.get(*q) {
                    out.set(x, true);
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionFilter {
    All,
    /// Quotients in the class R (carrying ε-elements).
    ClassR,
    /// Quotients in the subquotient closure T.
    ClassT,
}

impl SectionFilter {
    pub fn accepts(self, label: IsoClassLabel) -> bool {
        match self {
            SectionFilter::All => true,
            SectionFilter::ClassR => label.in_class_r(),
            SectionFilter::ClassT => label.in_class_t(),
        }
    }
}

/// One section of `G` (not deduplicated), tied to its class representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectionInstance {
    pub t: usize,
    pub s: usize,
    /// Index into [`SectionCensus::reps`].
    pub class: usize,
    /// `x` with `(T, S) = (x T₀ x⁻¹, x S₀ x⁻¹)`.
    pub transporter: usize,
}

#[derive(Clone, Debug)]
pub struct SectionCensus {
    pub reps: Vec<Section>,
    pub instances: Vec<SectionInstance>,
}

/// Representatives of the `G`-classes of sections whose quotient passes
/// `filter`, together with every section and a transporter to its rep.
pub fn section_census(
    g: &Group,
    table: &SubgroupTable,
    filter: SectionFilter,
) -> Result<SectionCensus> {
    let mut reps = Vec::new();
    let mut instances = Vec::new();
    for c in 0..table.num_classes() {
        let t0 = table.class_reps()[c];
        let tsub = table.subgroup(t0);
        let normalizer = table.normalizer(c);
        let normal_in_t: Vec<usize> = table
            .subgroups_below(t0)
            .into_iter()
            .filter(|&s| table.subgroup(s).is_normal_in(g, tsub))
            .collect();
        let mut seen: HashSet<usize> = HashSet::new();
        for &s0 in &normal_in_t {
            if seen.contains(&s0) {
                continue;
            }
            // orbit of S₀ under N_G(T₀); tracker m with m S₀ m⁻¹ = S
            let mut orbit = vec![(s0, g.identity())];
            seen.insert(s0);
            let mut i = 0;
            while i < orbit.len() {
                let (cur, m) = orbit[i];
                for &x in normalizer.generators() {
                    let j = table.conjugate_index(g, x, cur);
                    if seen.insert(j) {
                        orbit.push((j, g.mul(x, m)));
                    }
                }
                i += 1;
            }
            let section = Section::new(g, table, t0, s0)?;
            if !filter.accepts(section.label) {
                continue;
            }
            let class = reps.len();
            reps.push(section);
            for &t in table.class_members(c) {
                let ct = table.conjugator(t);
                let ct_inv = g.inv(ct);
                for &(s, m) in &orbit {
                    let x = g.mul(ct_inv, m);
                    instances.push(SectionInstance {
                        t,
                        s: table.conjugate_index(g, ct_inv, s),
                        class,
                        transporter: x,
                    });
                }
            }
        }
    }
    Ok(SectionCensus { reps, instances })
}

/// One representative per `G`-class of sections passing `filter`.
pub fn enumerate_sections(
    g: &Group,
    table: &SubgroupTable,
    filter: SectionFilter,
) -> Result<Vec<Section>> {
    Ok(section_census(g, table, filter)?.reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build_preset;

    fn setup(spec: &str) -> (Group, SubgroupTable) {
        let g = build_preset(spec, &Guards::default()).unwrap();
        let t = all_subgroups(&g, &Guards::default()).unwrap();
        (g, t)
    }

    #[test]
    fn subgroup_counts() {
        for (spec, subs, classes) in [
            ("C1", 1, 1),
            ("C5", 2, 2),
            ("C2^2", 5, 5),
            ("C4", 3, 3),
            ("D8", 10, 8),
            ("Q8", 6, 6),
            ("S3", 6, 4),
            ("S4", 30, 11),
            ("A4", 10, 5),
            ("SD16", 15, 10),
            ("C2^3", 16, 16),
            ("C2^4", 67, 67),
            ("A5", 59, 9),
        ] {
            let (_, t) = setup(spec);
            assert_eq!(t.len(), subs, "{spec} subgroups");
            assert_eq!(t.num_classes(), classes, "{spec} classes");
        }
    }

    /// Every subset of D8 closed under multiplication is listed.
    #[test]
    fn d8_enumeration_matches_subset_closure() {
        let (g, t) = setup("D8");
        let mut closed = 0;
        for mask in 0u32..256 {
            let elems: Vec<usize> = (0..8).filter(|i| mask >> i & 1 == 1).collect();
            if !elems.contains(&g.identity()) {
                continue;
            }
            let ok = elems
                .iter()
                .all(|&a| elems.iter().all(|&b| elems.contains(&g.mul(a, b))));
            if ok {
                closed += 1;
                assert!(t.index_of_elements(&g, elems.iter().copied()).is_some());
            }
        }
        assert_eq!(closed, t.len());
    }

    #[test]
    fn class_structure_invariants() {
        for spec in ["D8", "S4", "SD16", "D8xC3", "Q16", "A4"] {
            let (g, t) = setup(spec);
            let total: usize = (0..t.num_classes()).map(|c| t.class_members(c).len()).sum();
            assert_eq!(total, t.len());
            for c in 0..t.num_classes() {
                assert_eq!(
                    t.normalizer(c).order() * t.class_members(c).len(),
                    g.order(),
                    "{spec}"
                );
                for &m in t.class_members(c) {
                    let x = t.conjugator(m);
                    assert_eq!(t.conjugate_index(&g, x, m), t.class_reps()[c]);
                }
                assert!(t.subconjugate(c, c));
                assert!(t.subconjugate(0, c));
                assert!(t.subconjugate(c, t.num_classes() - 1));
            }
            // reps sorted by order
            for w in t.class_reps().windows(2) {
                assert!(t.subgroup(w[0]).order() <= t.subgroup(w[1]).order());
            }
            // conjugation permutes the list
            for x in 0..g.order() {
                let mut img: Vec<usize> =
                    (0..t.len()).map(|i| t.conjugate_index(&g, x, i)).collect();
                img.sort_unstable();
                assert_eq!(img, (0..t.len()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn moebius_examples() {
        let (_, t) = setup("C5");
        assert_eq!(moebius(&t).mu(0, 1), -1);
        let (_, t) = setup("C2^2");
        assert_eq!(moebius(&t).mu(0, 4), 2);
        let (g, t) = setup("C4");
        let c2 = t.index_of_elements(&g, [0, 2]).unwrap();
        assert_eq!(moebius(&t).mu(c2, 2), -1);
        assert_eq!(moebius(&t).mu(0, 2), 0);
    }

    /// Brute-force Möbius over the poset of all subgroups of the Klein group.
    #[test]
    fn moebius_klein_by_brute_force() {
        let (_, t) = setup("C2^2");
        // chains from 1 to V: 1<V (-1 sign, length 1) and 1<A<V three times (+1 each)
        // μ = Σ_chains (-1)^length = -1 + 3 = 2
        let chains: i64 = -1 + 3;
        assert_eq!(moebius(&t).mu(0, t.len() - 1), chains);
    }

    #[test]
    fn zeta_moebius_inversion() {
        for spec in ["D8", "C2^3", "Q16", "S4", "C2^2xC3", "SD32"] {
            let (_, t) = setup(spec);
            let m = moebius(&t);
            for b in 0..t.len() {
                for a in t.subgroups_below(b) {
                    let sa = t.subgroup(a);
                    let s: i64 = t
                        .subgroups_below(b)
                        .into_iter()
                        .filter(|&c| sa.is_subgroup_of(t.subgroup(c)))
                        .map(|c| m.mu(c, b))
                        .sum();
                    assert_eq!(s, (a == b) as i64, "{spec} ({a},{b})");
                }
            }
            // same identity on the normal poset, from the bottom
            let normal = m.normal_subgroups();
            for (j, &n) in normal.iter().enumerate() {
                let s: i64 = (0..=j)
                    .filter(|&i| t.subgroup(normal[i]).is_subgroup_of(t.subgroup(n)))
                    .map(|i| m.mu_normal()[i])
                    .sum();
                assert_eq!(s, (j == 0) as i64);
            }
        }
    }

    #[test]
    fn sections_in_class_r() {
        let (g, t) = setup("C4");
        let secs = enumerate_sections(&g, &t, SectionFilter::ClassR).unwrap();
        assert_eq!(secs.len(), 1);
        assert_eq!((secs[0].t, secs[0].s), (2, 0));
        assert_eq!(secs[0].label, IsoClassLabel::Cyclic(4));

        let (g, t) = setup("C2^2");
        let secs = enumerate_sections(&g, &t, SectionFilter::ClassR).unwrap();
        assert_eq!(secs.len(), 1);
        assert_eq!(secs[0].label, IsoClassLabel::Klein4);

        let (g, t) = setup("D8");
        let secs = enumerate_sections(&g, &t, SectionFilter::ClassR).unwrap();
        let mut labels: Vec<(usize, usize, IsoClassLabel)> = secs
            .iter()
            .map(|s| (t.subgroup(s.t).order(), t.subgroup(s.s).order(), s.label))
            .collect();
        labels.sort();
        assert_eq!(
            labels,
            vec![
                (4, 1, IsoClassLabel::Cyclic(4)),
                (4, 1, IsoClassLabel::Klein4),
                (4, 1, IsoClassLabel::Klein4),
                (8, 1, IsoClassLabel::Dihedral(8)),
                (8, 2, IsoClassLabel::Klein4),
            ]
        );
    }

    #[test]
    fn all_sections_of_c4() {
        let (g, t) = setup("C4");
        let secs = enumerate_sections(&g, &t, SectionFilter::All).unwrap();
        assert_eq!(secs.len(), 6);
    }

    #[test]
    fn census_instances_are_conjugates_of_reps() {
        for spec in ["D8", "S4", "SD16", "A4"] {
            let (g, t) = setup(spec);
            let census = section_census(&g, &t, SectionFilter::All).unwrap();
            let mut pairs = std::collections::HashSet::new();
            for inst in &census.instances {
                let rep = &census.reps[inst.class];
                assert_eq!(t.conjugate_index(&g, inst.transporter, rep.t), inst.t);
                assert_eq!(t.conjugate_index(&g, inst.transporter, rep.s), inst.s);
                assert!(pairs.insert((inst.t, inst.s)), "duplicate instance");
            }
            // brute-force count of all pairs S ⊴ T
            let mut brute = 0;
            for ti in 0..t.len() {
                for si in t.subgroups_below(ti) {
                    if t.subgroup(si).is_normal_in(&g, t.subgroup(ti)) {
                        brute += 1;
                    }
                }
            }
            assert_eq!(brute, census.instances.len(), "{spec}");
        }
    }

    #[test]
    fn section_count_independent_of_generating_set() {
        let guards = Guards::default();
        for (a, b) in [
            ("D8", "perm:4:(1 2 3 4);(1 3)"),
            ("S3", "perm:3:(1 2 3);(2 3)"),
            ("Q8", "perm:8:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)"),
        ] {
            let ga = build_preset(a, &guards).unwrap();
            let gb = build_preset(b, &guards).unwrap();
            let ta = all_subgroups(&ga, &guards).unwrap();
            let tb = all_subgroups(&gb, &guards).unwrap();
            let na = enumerate_sections(&ga, &ta, SectionFilter::All)
                .unwrap()
                .len();
            let nb = enumerate_sections(&gb, &tb, SectionFilter::All)
                .unwrap()
                .len();
            assert_eq!(na, nb, "{a} vs {b}");
        }
    }

    #[test]
    fn subgroup_guard_trips() {
        let g = build_preset("C2^4", &Guards::default()).unwrap();
        let guards = Guards {
            max_subgroups: 20,
            ..Guards::default()
        };
        assert!(matches!(all_subgroups(&g, &guards), Err(Error::Guard(_))));
    }

    #[test]
    fn from_elements_rejects_non_subgroups() {
        let g = build_preset("C4", &Guards::default()).unwrap();
        assert!(Subgroup::from_elements(&g, &[0, 1]).is_err());
        assert_eq!(Subgroup::from_elements(&g, &[0, 2]).unwrap().order(), 2);
    }
}
