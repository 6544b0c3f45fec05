//! Biset operations materialized as integer matrices between Burnside ring
//! bases.
//!
//! A [`BisetMatrix`] from `B(G)` to `B(H)` has one column per class of
//! subgroups of `G` and one row per class of subgroups of `H`; composition
//! is matrix product. The dual action on linear forms is isolated in
//! [`dual_action`].

use crate::burnside::{BurnsideElem, BurnsideRing, F2BurnsideElem, LinearForm};
use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::groups::Group;
use crate::lattice::{Section, Subgroup};
use crate::Guards;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisetMatrix {
    pub source: String,
    pub target: String,
    /// `entries[row][col]`, rows over target classes, columns over source classes.
    pub entries: Vec<Vec<i64>>,
}

impl BisetMatrix {
    fn zeros(source: &BurnsideRing, target: &BurnsideRing) -> Self {
        Self {
            source: ring_name(source),
            target: ring_name(target),
            entries: vec![vec![0; source.dim()]; target.dim()],
        }
    }

    pub fn identity(ring: &BurnsideRing) -> Self {
        let mut m = Self::zeros(ring, ring);
        for i in 0..ring.dim() {
            m.entries[i][i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        self.entries.iter().map(|r| r[c]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|&x| x == 0)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &BisetMatrix) -> Result<BisetMatrix> {
        if self.cols() != first.rows() {
            return Err(Error::Dimension {
                expected: self.cols(),
                found: first.rows(),
            });
        }
        let entries = self
            .entries
            .iter()
            .map(|row| {
                (0..first.cols())
                    .map(|c| {
                        row.iter()
                            .enumerate()
                            .map(|(k, a)| a * first.entries[k][c])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Ok(BisetMatrix {
            source: first.source.clone(),
            target: self.target.clone(),
            entries,
        })
    }

    pub fn apply(&self, x: &BurnsideElem) -> Result<BurnsideElem> {
        if x.len() != self.cols() {
            return Err(Error::Dimension {
                expected: self.cols(),
                found: x.len(),
            });
        }
        Ok(BurnsideElem {
            coeffs: self
                .entries
                .iter()
                .map(|row| row.iter().zip(&x.coeffs).map(|(a, b)| a * b).sum())
                .collect(),
        })
    }

    pub fn apply_f2(&self, x: &F2BurnsideElem) -> Result<F2BurnsideElem> {
        if x.coeffs.len() != self.cols() {
            return Err(Error::Dimension {
                expected: self.cols(),
                found: x.coeffs.len(),
            });
        }
        let mut out = BitVec::zeros(self.rows());
        for c in x.coeffs.iter_ones() {
            for (r, row) in self.entries.iter().enumerate() {
                if row[c].rem_euclid(2) == 1 {
                    out.flip(r);
                }
            }
        }
        Ok(F2BurnsideElem { coeffs: out })
    }
}

fn ring_name(r: &BurnsideRing) -> String {
    r.label().name_with_order(r.group().order())
}

/// Image of a set of elements under an element map.
fn map_members(members: &BitVec, map: &[usize], target_order: usize) -> BitVec {
    BitVec::from_ones(target_order, {
        let mut img: Vec<usize> = members.iter_ones().map(|x| map[x]).collect();
        img.sort_unstable();
        img.dedup();
        img
    })
}

fn preimage(members: &BitVec, map: &[usize]) -> BitVec {
    BitVec::from_ones(map.len(), (0..map.len()).filter(|&x| members.get(map[x])))
}

fn check_hom(source: &Group, target: &Group, map: &[usize]) -> Result<()> {
    if map.len() != source.order() || map.iter().any(|&y| y >= target.order()) {
        return Err(Error::Precondition(
            "element map has the wrong shape".into(),
        ));
    }
    for a in 0..source.order() {
        for b in 0..source.order() {
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                return Err(Error::Precondition(
                    "element map is not a homomorphism".into(),
                ));
            }
        }
    }
    Ok(())
}

fn check_injective(map: &[usize], target_order: usize) -> Result<()> {
    let mut seen = vec![false; target_order];
    for &y in map {
        if std::mem::replace(&mut seen[y], true) {
            return Err(Error::Precondition("element map is not injective".into()));
        }
    }
    Ok(())
}

fn check_surjective(map: &[usize], target_order: usize) -> Result<()> {
    let mut seen = vec![false; target_order];
    for &y in map {
        seen[y] = true;
    }
    if seen.iter().all(|&s| s) {
        Ok(())
    } else {
        Err(Error::Precondition("element map is not surjective".into()))
    }
}

/// Data for one elementary biset operation. Embeddings map elements of the
/// subgroup ring into the group ring; projections map elements of `G` onto
/// the quotient ring.
#[derive(Clone, Copy, Debug)]
pub enum Elementary<'a> {
    /// `Ind_H^G : B(H) → B(G)`
    Ind {
        group: &'a BurnsideRing,
        sub: &'a BurnsideRing,
        embedding: &'a [usize],
    },
    /// `Res_H^G : B(G) → B(H)`
    Res {
        group: &'a BurnsideRing,
        sub: &'a BurnsideRing,
        embedding: &'a [usize],
    },
    /// `Inf_{G/N}^G : B(G/N) → B(G)`
    Inf {
        group: &'a BurnsideRing,
        quotient: &'a BurnsideRing,
        projection: &'a [usize],
    },
    /// `Def_{G/N}^G : B(G) → B(G/N)`
    Def {
        group: &'a BurnsideRing,
        quotient: &'a BurnsideRing,
        projection: &'a [usize],
    },
    /// Transport along a group isomorphism `source → target`.
    Iso {
        source: &'a BurnsideRing,
        target: &'a BurnsideRing,
        map: &'a [usize],
    },
}

pub fn elementary_matrix(op: Elementary<'_>) -> Result<BisetMatrix> {
    match op {
        Elementary::Ind {
            group,
            sub,
            embedding,
        } => {
            check_hom(sub.group(), group.group(), embedding)?;
            check_injective(embedding, group.group().order())?;
            let mut m = BisetMatrix::zeros(sub, group);
            for c in 0..sub.dim() {
                let img = map_members(
                    sub.table().rep(c).members(),
                    embedding,
                    group.group().order(),
                );
                m.entries[class_in(group, &img)?][c] += 1;
            }
            Ok(m)
        }
        Elementary::Res {
            group,
            sub,
            embedding,
        } => {
            check_hom(sub.group(), group.group(), embedding)?;
            check_injective(embedding, group.group().order())?;
            Ok(restriction(group, sub, embedding))
        }
        Elementary::Inf {
            group,
            quotient,
            projection,
        } => {
            check_hom(group.group(), quotient.group(), projection)?;
            check_surjective(projection, quotient.group().order())?;
            let mut m = BisetMatrix::zeros(quotient, group);
            for c in 0..quotient.dim() {
                let pre = preimage(quotient.table().rep(c).members(), projection);
                m.entries[class_in(group, &pre)?][c] += 1;
            }
            Ok(m)
        }
        Elementary::Def {
            group,
            quotient,
            projection,
        } => {
            check_hom(group.group(), quotient.group(), projection)?;
            check_surjective(projection, quotient.group().order())?;
            let mut m = BisetMatrix::zeros(group, quotient);
            for c in 0..group.dim() {
                let img = map_members(
                    group.table().rep(c).members(),
                    projection,
                    quotient.group().order(),
                );
                m.entries[class_in(quotient, &img)?][c] += 1;
            }
            Ok(m)
        }
        Elementary::Iso {
            source,
            target,
            map,
        } => {
            check_hom(source.group(), target.group(), map)?;
            check_injective(map, target.group().order())?;
            if source.group().order() != target.group().order() {
                return Err(Error::Precondition(
                    "isomorphism between groups of different order".into(),
                ));
            }
            let mut m = BisetMatrix::zeros(source, target);
            for c in 0..source.dim() {
                let img = map_members(source.table().rep(c).members(), map, target.group().order());
                m.entries[class_in(target, &img)?][c] += 1;
            }
            Ok(m)
        }
    }
}

fn class_in(ring: &BurnsideRing, members: &BitVec) -> Result<usize> {
    ring.class_of_members(members)
        .ok_or_else(|| Error::Precondition("image is not a subgroup".into()))
}

/// `Res_H^G(G/K) = Σ_{HxK} H/(H ∩ xKx⁻¹)`, by scanning double cosets.
fn restriction(group: &BurnsideRing, sub: &BurnsideRing, embedding: &[usize]) -> BisetMatrix {
    let g = group.group();
    let n = g.order();
    let mut back = vec![usize::MAX; n];
    for (i, &x) in embedding.iter().enumerate() {
        back[x] = i;
    }
    let h_elems: Vec<usize> = embedding.to_vec();
    let mut m = BisetMatrix::zeros(group, sub);
    for c in 0..group.dim() {
        let k = group.table().rep(c);
        let k_elems = k.elements();
        let mut covered = vec![false; n];
        for x in 0..n {
            if covered[x] {
                continue;
            }
            for &h in &h_elems {
                let hx = g.mul(h, x);
                for &y in &k_elems {
                    covered[g.mul(hx, y)] = true;
                }
            }
            // H ∩ xKx⁻¹, in the subgroup's own indexing
            let stab: Vec<usize> = k_elems
                .iter()
                .map(|&y| g.conj(x, y))
                .filter(|&z| back[z] != usize::MAX)
                .map(|z| back[z])
                .collect();
            let members = BitVec::from_ones(sub.group().order(), {
                let mut s = stab;
                s.sort_unstable();
                s
            });
            let row = sub
                .class_of_members(&members)
                .expect("intersection is a subgroup");
            m.entries[row][c] += 1;
        }
    }
    m
}

/// `Indinf_{T/S}^G : B(T/S) → B(G)`, sending `(T/S)/(U/S)` to `G/U`.
/// `quotient` must be the ring of `section.quotient`.
pub fn indinf(group: &BurnsideRing, section: &Section, quotient: &BurnsideRing) -> BisetMatrix {
    let mut m = BisetMatrix::zeros(quotient, group);
    for c in 0..quotient.dim() {
        let pre = section.preimage(quotient.table().rep(c).members());
        let row = group
            .class_of_members(&pre)
            .expect("preimage of a subgroup is a subgroup");
        m.entries[row][c] += 1;
    }
    m
}

/// `Ind_T^G ∘ Inf_{T/S}^T`, assembled from elementary matrices.
pub fn indinf_composite(
    group: &BurnsideRing,
    section: &Section,
    quotient: &BurnsideRing,
    guards: &Guards,
) -> Result<BisetMatrix> {
    let (t_ring, embed, proj) = section_parts(group, section, guards)?;
    let inf = elementary_matrix(Elementary::Inf {
        group: &t_ring,
        quotient,
        projection: &proj,
    })?;
    let ind = elementary_matrix(Elementary::Ind {
        group,
        sub: &t_ring,
        embedding: &embed,
    })?;
    ind.compose(&inf)
}

/// `Defres_{T/S}^G = Def_{T/S}^T ∘ Res_T^G : B(G) → B(T/S)`.
pub fn defres(
    group: &BurnsideRing,
    section: &Section,
    quotient: &BurnsideRing,
    guards: &Guards,
) -> Result<BisetMatrix> {
    let (t_ring, embed, proj) = section_parts(group, section, guards)?;
    let res = elementary_matrix(Elementary::Res {
        group,
        sub: &t_ring,
        embedding: &embed,
    })?;
    let def = elementary_matrix(Elementary::Def {
        group: &t_ring,
        quotient,
        projection: &proj,
    })?;
    def.compose(&res)
}

/// Ring of `T`, its embedding into `G`, and the projection `T → T/S` in
/// `T`'s own indexing.
fn section_parts(
    group: &BurnsideRing,
    section: &Section,
    guards: &Guards,
) -> Result<(BurnsideRing, Vec<usize>, Vec<usize>)> {
    let t = group.table().subgroup(section.t);
    let (t_ring, embed) = group.of_subgroup(t, guards)?;
    let proj = embed
        .iter()
        .map(|&x| section.projection[x].expect("T projects onto T/S"))
        .collect();
    Ok((t_ring, embed, proj))
}

/// Action of a biset `U` on linear forms: `(U·φ)(y) = φ(U^op y)`.
///
/// `opposite` is the element-level matrix of `U^op`; the form `φ` lives on
/// its target. Thus forms are restricted by transposing induction, deflated
/// by transposing inflation, and `Defres` acts on forms through `Indinf`.
pub fn dual_action(opposite: &BisetMatrix, phi: &LinearForm) -> Result<LinearForm> {
    if phi.len() != opposite.rows() {
        return Err(Error::Dimension {
            expected: opposite.rows(),
            found: phi.len(),
        });
    }
    let values: Vec<bool> = (0..opposite.cols())
        .map(|c| {
            phi.values.iter_ones().fold(false, |acc, r| {
                acc ^ (opposite.entries[r][c].rem_euclid(2) == 1)
            })
        })
        .collect();
    Ok(LinearForm {
        values: BitVec::from_bools(&values),
    })
}

/// `Defres_{T/S}^G φ = φ ∘ Indinf_{T/S}^G`.
pub fn defres_form(
    group: &BurnsideRing,
    section: &Section,
    quotient: &BurnsideRing,
    phi: &LinearForm,
) -> Result<LinearForm> {
    dual_action(&indinf(group, section, quotient), phi)
}

/// The projections `p₁, k₁ ≤ H`, `p₂, k₂ ≤ G` of `X ≤ H × G` and the
/// canonical isomorphism `p₂/k₂ → p₁/k₁`.
#[derive(Clone, Debug)]
pub struct SubgroupOfProduct {
    /// `X` as a subgroup of `H × G` (element `(h, g)` has index `h·|G| + g`).
    pub x: Subgroup,
    pub p1: Subgroup,
    pub k1: Subgroup,
    pub p2: Subgroup,
    pub k2: Subgroup,
}

impl SubgroupOfProduct {
    pub fn new(h: &Group, g: &Group, x: Subgroup) -> Result<Self> {
        let m = g.order();
        let split = |e: usize| (e / m, e % m);
        let mut p1 = Vec::new();
        let mut k1 = Vec::new();
        let mut p2 = Vec::new();
        let mut k2 = Vec::new();
        for e in x.members().iter_ones() {
            let (a, b) = split(e);
            p1.push(a);
            p2.push(b);
            if b == g.identity() {
                k1.push(a);
            }
            if a == h.identity() {
                k2.push(b);
            }
        }
        for v in [&mut p1, &mut k1, &mut p2, &mut k2] {
            v.sort_unstable();
            v.dedup();
        }
        Ok(Self {
            p1: Subgroup::from_elements(h, &p1)?,
            k1: Subgroup::from_elements(h, &k1)?,
            p2: Subgroup::from_elements(g, &p2)?,
            k2: Subgroup::from_elements(g, &k2)?,
            x,
        })
    }
}

/// Matrix of `(H × G)/X` acting `B(G) → B(H)`, by orbit counting on
/// `(H × G)/X ×_G G/K`. Bisets act by `h·(a, b)X·g = (ha, g⁻¹b)X`.
pub fn transitive_biset(
    h_ring: &BurnsideRing,
    g_ring: &BurnsideRing,
    x: &SubgroupOfProduct,
) -> BisetMatrix {
    let h = h_ring.group();
    let g = g_ring.group();
    let m = g.order();
    let pn = h.order() * m;
    let pmul =
        |(a, b): (usize, usize), e: usize| -> usize { h.mul(a, e / m) * m + g.mul(b, e % m) };

    // left cosets of X in H × G
    let mut coset = vec![usize::MAX; pn];
    let mut reps = Vec::new();
    let x_elems = x.x.elements();
    for p in 0..pn {
        if coset[p] != usize::MAX {
            continue;
        }
        for &y in &x_elems {
            coset[pmul((p / m, p % m), y)] = reps.len();
        }
        reps.push(p);
    }
    let nu = reps.len();
    let left = |pair: (usize, usize), u: usize| coset[pmul(pair, reps[u])];

    let mut out = BisetMatrix::zeros(g_ring, h_ring);
    for c in 0..g_ring.dim() {
        let k = g_ring.table().rep(c);
        let mut kcoset = vec![usize::MAX; m];
        let mut kreps = Vec::new();
        for y in 0..m {
            if kcoset[y] != usize::MAX {
                continue;
            }
            for z in k.members().iter_ones() {
                kcoset[g.mul(y, z)] = kreps.len();
            }
            kreps.push(y);
        }
        let ny = kreps.len();
        let mut uf = UnionFind::new(nu * ny);
        for &gg in g.generators() {
            let ginv = g.inv(gg);
            for u in 0..nu {
                let ug = left((h.identity(), ginv), u);
                for yv in 0..ny {
                    let gy = kcoset[g.mul(gg, kreps[yv])];
                    uf.union(ug * ny + yv, u * ny + gy);
                }
            }
        }
        let mut visited = vec![false; nu * ny];
        for start in 0..nu * ny {
            let root = uf.find(start);
            if visited[root] {
                continue;
            }
            // mark the whole H-orbit of this class
            let mut queue = vec![start];
            visited[root] = true;
            while let Some(p) = queue.pop() {
                let (u, yv) = (p / ny, p % ny);
                for &hh in h.generators() {
                    let q = left((hh, g.identity()), u) * ny + yv;
                    let rq = uf.find(q);
                    if !visited[rq] {
                        visited[rq] = true;
                        queue.push(q);
                    }
                }
            }
            let (u, yv) = (start / ny, start % ny);
            let stab: Vec<usize> = (0..h.order())
                .filter(|&hh| uf.find(left((hh, g.identity()), u) * ny + yv) == root)
                .collect();
            let members = BitVec::from_ones(h.order(), stab);
            let row = h_ring
                .class_of_members(&members)
                .expect("stabilizer is a subgroup");
            out.entries[row][c] += 1;
        }
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// `Indinf_{p₁/k₁}^H`, `Iso(f)` and `Defres_{p₂/k₂}^G` for a subgroup `X ≤ H × G`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub indinf: BisetMatrix,
    pub iso: BisetMatrix,
    pub defres: BisetMatrix,
}

impl Factorization {
    pub fn product(&self) -> Result<BisetMatrix> {
        self.indinf.compose(&self.iso.compose(&self.defres)?)
    }
}

pub fn factorize(
    h_ring: &BurnsideRing,
    g_ring: &BurnsideRing,
    x: &SubgroupOfProduct,
    guards: &Guards,
) -> Result<Factorization> {
    let h = h_ring.group();
    let g = g_ring.group();
    let m = g.order();
    let idx = |ring: &BurnsideRing, s: &Subgroup| {
        ring.table()
            .index_of(s.members())
            .expect("subgroup is listed")
    };
    let sec1 = Section::new(h, h_ring.table(), idx(h_ring, &x.p1), idx(h_ring, &x.k1))?;
    let sec2 = Section::new(g, g_ring.table(), idx(g_ring, &x.p2), idx(g_ring, &x.k2))?;
    let q1 = BurnsideRing::new(sec1.quotient.clone(), guards)?;
    let q2 = BurnsideRing::new(sec2.quotient.clone(), guards)?;

    // f(g k₂) = h k₁ whenever (h, g) ∈ X
    let mut f = vec![usize::MAX; q2.group().order()];
    for e in x.x.members().iter_ones() {
        let (a, b) = (e / m, e % m);
        let (qa, qb) = (sec1.projection[a].unwrap(), sec2.projection[b].unwrap());
        if f[qb] == usize::MAX {
            f[qb] = qa;
        } else if f[qb] != qa {
            return Err(Error::Precondition(
                "p₂/k₂ → p₁/k₁ is not well defined".into(),
            ));
        }
    }
    let iso = elementary_matrix(Elementary::Iso {
        source: &q2,
        target: &q1,
        map: &f,
    })?;
    Ok(Factorization {
        indinf: indinf(h_ring, &sec1, &q1),
        iso,
        defres: defres(g_ring, &sec2, &q2, guards)?,
    })
}
