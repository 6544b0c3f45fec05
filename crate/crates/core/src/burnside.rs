//! Burnside ring arithmetic over the basis of transitive `G`-sets `G/H`.
//!
//! Basis vectors are indexed by subgroup conjugacy classes in the order of
//! [`SubgroupTable::class_reps`], i.e. sorted by subgroup order. With that
//! ordering the table of marks is lower triangular and the ghost map can be
//! inverted by exact back-substitution.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::groups::{build_preset, classify, Group, IsoClassLabel};
use crate::lattice::{all_subgroups, moebius, MoebiusTable, Subgroup, SubgroupTable};
use crate::Guards;

/// Coefficient types usable in Burnside ring elements.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
    /// `self / d` if it exists in this coefficient domain.
    fn div_exact(&self, d: i64) -> Option<Self>;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }

    fn div_exact(&self, d: i64) -> Option<Self> {
        (self % d == 0).then(|| self / d)
    }
}

impl Coeff for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn div_exact(&self, d: i64) -> Option<Self> {
        Some(self / Ratio::from_integer(d))
    }
}

/// Element of `B(G)` (or `ℚ ⊗ B(G)` for `T = Ratio<i64>`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurnsideElem<T = i64> {
    pub coeffs: Vec<T>,
}

pub type RationalElem = BurnsideElem<Ratio<i64>>;

impl<T: Coeff> BurnsideElem<T> {
    pub fn zero(n: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); n],
        }
    }

    pub fn basis(n: usize, c: usize) -> Self {
        let mut x = Self::zero(n);
        x.coeffs[c] = T::one();
        x
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, k: T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }
}

impl BurnsideElem<i64> {
    pub fn to_rational(&self) -> RationalElem {
        BurnsideElem {
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| Ratio::from_integer(c))
                .collect(),
        }
    }

    pub fn to_f2(&self) -> F2BurnsideElem {
        F2BurnsideElem {
            coeffs: BitVec::from_bools(
                &self
                    .coeffs
                    .iter()
                    .map(|c| c.rem_euclid(2) == 1)
                    .collect::<Vec<_>>(),
            ),
        }
    }
}

impl RationalElem {
    /// Integer coefficients, if every coefficient is integral.
    pub fn to_integral(&self) -> Option<BurnsideElem> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(|coeffs| BurnsideElem { coeffs })
    }
}

/// Element of `𝔽₂B(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct F2BurnsideElem {
    pub coeffs: BitVec,
}

impl F2BurnsideElem {
    pub fn zero(n: usize) -> Self {
        Self {
            coeffs: BitVec::zeros(n),
        }
    }
}

/// `φ ∈ Hom(B(G), 𝔽₂)`, stored by its values `φ(G/H)` on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    pub values: BitVec,
}

impl LinearForm {
    pub fn zero(n: usize) -> Self {
        Self {
            values: BitVec::zeros(n),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn apply(&self, x: &F2BurnsideElem) -> bool {
        self.values.dot(&x.coeffs)
    }
}

/// Table of marks `m[H][K] = |(G/H)^K|` over class representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkMatrix {
    m: Vec<Vec<i64>>,
}

impl MarkMatrix {
    pub fn get(&self, h: usize, k: usize) -> i64 {
        self.m[h][k]
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.m
    }
}

/// Counts `gH ∈ G/H` with `g⁻¹ K g ≤ H`, by scanning left cosets.
pub fn mark_matrix(g: &Group, table: &SubgroupTable) -> MarkMatrix {
    let n = table.num_classes();
    let mut m = vec![vec![0i64; n]; n];
    for h in 0..n {
        let hsub = table.rep(h);
        let mut covered = vec![false; g.order()];
        let mut coset_reps = Vec::new();
        for x in 0..g.order() {
            if covered[x] {
                continue;
            }
            coset_reps.push(x);
            for y in hsub.members().iter_ones() {
                covered[g.mul(x, y)] = true;
            }
        }
        for k in 0..n {
            if !table.subconjugate(k, h) {
                continue;
            }
            let ksub = table.rep(k);
            m[h][k] = coset_reps
                .iter()
                .filter(|&&x| {
                    let xi = g.inv(x);
                    ksub.generators()
                        .iter()
                        .all(|&y| hsub.contains(g.conj(xi, y)))
                })
                .count() as i64;
        }
    }
    MarkMatrix { m }
}

/// A group with its subgroup table and table of marks.
#[derive(Debug)]
pub struct BurnsideRing {
    group: Group,
    table: SubgroupTable,
    marks: MarkMatrix,
    moebius: OnceLock<MoebiusTable>,
    f1: OnceLock<Vec<Vec<i64>>>,
    names: OnceLock<Vec<String>>,
}

impl BurnsideRing {
    pub fn new(group: Group, guards: &Guards) -> Result<Self> {
        if group.order() > guards.max_elements {
            return Err(Error::Guard(format!(
                "group order {} exceeds {}",
                group.order(),
                guards.max_elements
            )));
        }
        let table = all_subgroups(&group, guards)?;
        let marks = mark_matrix(&group, &table);
        Ok(Self {
            group,
            table,
            marks,
            moebius: OnceLock::new(),
            f1: OnceLock::new(),
            names: OnceLock::new(),
        })
    }

    pub fn from_preset(spec: &str, guards: &Guards) -> Result<Self> {
        Self::new(build_preset(spec, guards)?, guards)
    }

    /// The ring of a subgroup, with the embedding of its elements into `self`.
    pub fn of_subgroup(
        &self,
        sub: &Subgroup,
        guards: &Guards,
    ) -> Result<(BurnsideRing, Vec<usize>)> {
        let (h, embed) = self.group.restrict_to(&sub.elements(), sub.generators())?;
        Ok((BurnsideRing::new(h, guards)?, embed))
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn table(&self) -> &SubgroupTable {
        &self.table
    }

    pub fn marks(&self) -> &MarkMatrix {
        &self.marks
    }

    pub fn moebius(&self) -> &MoebiusTable {
        self.moebius.get_or_init(|| moebius(&self.table))
    }

    /// Number of basis elements (subgroup conjugacy classes).
    pub fn dim(&self) -> usize {
        self.table.num_classes()
    }

    pub fn label(&self) -> IsoClassLabel {
        classify(&self.group)
    }

    pub fn basis(&self, c: usize) -> BurnsideElem {
        BurnsideElem::basis(self.dim(), c)
    }

    /// `G/G`, the identity of the ring.
    pub fn one(&self) -> BurnsideElem {
        self.basis(self.dim() - 1)
    }

    /// Class of the subgroup with the given members.
    pub fn class_of_members(&self, members: &BitVec) -> Option<usize> {
        self.table.class_of_members(members)
    }

    /// Stable class names: family label of the subgroup plus an ordinal,
    /// e.g. `C2#1`, `C2#2`, `C2^2#1`.
    pub fn class_names(&self) -> &[String] {
        self.names.get_or_init(|| {
            let mut seen: std::collections::HashMap<String, usize> =
                std::collections::HashMap::new();
            (0..self.dim())
                .map(|c| {
                    let rep = self.table.rep(c);
                    let (h, _) = self
                        .group
                        .restrict_to(&rep.elements(), rep.generators())
                        .expect("subgroup is closed");
                    let base = classify(&h).name_with_order(h.order());
                    let k = seen.entry(base.clone()).or_insert(0);
                    *k += 1;
                    format!("{base}#{k}")
                })
                .collect()
        })
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                found: len,
            });
        }
        Ok(())
    }

    /// Ghost vector `K ↦ |x^K|`.
    pub fn marks_of<T: Coeff>(&self, x: &BurnsideElem<T>) -> Vec<T> {
        let n = self.dim();
        (0..n)
            .map(|k| {
                (k..n).fold(T::zero(), |acc, h| {
                    let m = self.marks.get(h, k);
                    if m == 0 {
                        acc
                    } else {
                        acc + x.coeffs[h].clone() * T::from_i64(m)
                    }
                })
            })
            .collect()
    }

    /// Inverts the ghost map by back-substitution from the largest class down.
    /// Fails with [`Error::NonIntegral`] when a division is not exact in `T`.
    pub fn from_marks<T: Coeff>(&self, ghost: &[T]) -> Result<BurnsideElem<T>> {
        self.check_len(ghost.len())?;
        let n = self.dim();
        let mut x = vec![T::zero(); n];
        for k in (0..n).rev() {
            let mut r = ghost[k].clone();
            for h in k + 1..n {
                let m = self.marks.get(h, k);
                if m != 0 {
                    r = r - x[h].clone() * T::from_i64(m);
                }
            }
            x[k] = r
                .div_exact(self.marks.get(k, k))
                .ok_or(Error::NonIntegral(k))?;
        }
        Ok(BurnsideElem { coeffs: x })
    }

    /// Product via pointwise multiplication of marks.
    pub fn mul<T: Coeff>(
        &self,
        x: &BurnsideElem<T>,
        y: &BurnsideElem<T>,
    ) -> Result<BurnsideElem<T>> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        let gx = self.marks_of(x);
        let gy = self.marks_of(y);
        let prod: Vec<T> = gx.into_iter().zip(gy).map(|(a, b)| a * b).collect();
        self.from_marks(&prod)
    }

    /// The primitive idempotent
    /// `e_H = 1/|N_G(H)| Σ_{L ≤ H} |L| μ(L, H) G/L` of `ℚB(G)`.
    pub fn idempotent(&self, c: usize) -> RationalElem {
        let h = self.table.class_reps()[c];
        let nh = self.table.normalizer(c).order() as i64;
        let mut e = RationalElem::zero(self.dim());
        for &(l, mu) in self.moebius().column(h) {
            let order = self.table.subgroup(l).order() as i64;
            let cl = self.table.class_of(l);
            e.coeffs[cl] += Ratio::new(order * mu, nh);
        }
        e
    }

    /// The unique integral element with marks `signs`, if any.
    pub fn ghost_to_burnside(&self, signs: &[i64]) -> Option<BurnsideElem> {
        self.from_marks(signs).ok()
    }

    fn center_subgroup(&self) -> Subgroup {
        Subgroup::from_elements(&self.group, &self.group.center()).expect("center is a subgroup")
    }

    fn classes_of_order(&self, order: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&c| self.table.rep(c).order() == order)
            .collect()
    }

    /// For dihedral and semidihedral groups: the classes `(I, J, IZ, JZ)` of
    /// non-central subgroups of order 2 and their products with the center.
    /// `I` holds the first non-central involution among the generators; `J`
    /// is `None` for semidihedral groups.
    pub fn reflection_classes(&self) -> Result<(usize, Option<usize>, usize, Option<usize>)> {
        let g = &self.group;
        let z = self.center_subgroup();
        if z.order() != 2 {
            return Err(Error::NotInR(self.label().to_string()));
        }
        let noncentral: Vec<usize> = self
            .classes_of_order(2)
            .into_iter()
            .filter(|&c| !self.table.rep(c).is_subgroup_of(&z))
            .collect();
        let designated = g
            .generators()
            .iter()
            .find(|&&x| g.element_order(x) == 2 && !z.contains(x))
            .map(|&x| {
                self.table
                    .class_of_members(Subgroup::generated(g, &[x]).members())
                    .unwrap()
            });
        let i = designated
            .filter(|c| noncentral.contains(c))
            .or_else(|| noncentral.first().copied())
            .ok_or_else(|| Error::NotInR(self.label().to_string()))?;
        let j = noncentral.iter().copied().find(|&c| c != i);
        let times_z = |c: usize| {
            let iz = self.table.rep(c).join(g, &z);
            self.table
                .class_of_members(iz.members())
                .expect("join is a subgroup")
        };
        Ok((i, j, times_z(i), j.map(times_z)))
    }

    /// The distinguished element `ε_R` of a group in the class R.
    pub fn epsilon(&self) -> Result<BurnsideElem> {
        let n = self.dim();
        let mut e = BurnsideElem::zero(n);
        match self.label() {
            IsoClassLabel::OddPrimeCyclic(_) => {
                e.coeffs[0] = 1;
                e.coeffs[n - 1] = -1;
            }
            IsoClassLabel::Cyclic(4) => {
                e.coeffs[0] = 1;
                e.coeffs[self.classes_of_order(2)[0]] = -1;
            }
            IsoClassLabel::Klein4 => {
                e.coeffs[0] = 1;
                for c in self.classes_of_order(2) {
                    e.coeffs[c] = -1;
                }
                e.coeffs[n - 1] = 2;
            }
            IsoClassLabel::Dihedral(_) => {
                let (i, j, iz, jz) = self.reflection_classes()?;
                let (j, jz) = (j.expect("dihedral has two reflection classes"), jz.unwrap());
                e.coeffs[i] += 1;
                e.coeffs[iz] -= 1;
                e.coeffs[j] -= 1;
                e.coeffs[jz] += 1;
            }
            IsoClassLabel::Semidihedral(_) => {
                let (i, _, iz, _) = self.reflection_classes()?;
                e.coeffs[i] += 1;
                e.coeffs[iz] -= 1;
            }
            other => return Err(Error::NotInR(other.name_with_order(self.group.order()))),
        }
        Ok(e)
    }

    /// Image of `ε_R` in `𝔽₂B(R)`.
    pub fn epsilon_f2(&self) -> Result<F2BurnsideElem> {
        Ok(self.epsilon()?.to_f2())
    }

    /// Columns of `f₁ = Σ_{N ⊴ G} μ_{⊴G}(1, N) Inf_{G/N}^G Def_{G/N}^G`,
    /// using `Inf∘Def (G/K) = G/KN`.
    pub fn f1_matrix(&self) -> &[Vec<i64>] {
        self.f1.get_or_init(|| {
            let g = &self.group;
            let mb = self.moebius();
            let n = self.dim();
            (0..n)
                .map(|k| {
                    let ksub = self.table.rep(k);
                    let mut col = vec![0i64; n];
                    for (&nidx, &mu) in mb.normal_subgroups().iter().zip(mb.mu_normal()) {
                        if mu == 0 {
                            continue;
                        }
                        let kn = ksub.join(g, self.table.subgroup(nidx));
                        col[self.table.class_of_members(kn.members()).unwrap()] += mu;
                    }
                    col
                })
                .collect()
        })
    }

    pub fn f1_apply(&self, x: &BurnsideElem) -> Result<BurnsideElem> {
        self.check_len(x.len())?;
        let n = self.dim();
        let mut out = vec![0i64; n];
        for (k, col) in self.f1_matrix().iter().enumerate() {
            if x.coeffs[k] != 0 {
                for (o, c) in out.iter_mut().zip(col) {
                    *o += x.coeffs[k] * c;
                }
            }
        }
        Ok(BurnsideElem { coeffs: out })
    }

    pub fn f1_apply_f2(&self, x: &F2BurnsideElem) -> Result<F2BurnsideElem> {
        self.check_len(x.coeffs.len())?;
        let mut out = BitVec::zeros(self.dim());
        for k in x.coeffs.iter_ones() {
            for (i, c) in self.f1_matrix()[k].iter().enumerate() {
                if c.rem_euclid(2) == 1 {
                    out.flip(i);
                }
            }
        }
        Ok(F2BurnsideElem { coeffs: out })
    }

    /// `f₁` acting on a linear form; since `f₁` is its own opposite this is
    /// `φ ↦ φ ∘ f₁`.
    pub fn f1_apply_form(&self, phi: &LinearForm) -> Result<LinearForm> {
        self.check_len(phi.len())?;
        let values = (0..self.dim())
            .map(|k| {
                self.f1_matrix()[k]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.rem_euclid(2) == 1)
                    .fold(false, |acc, (i, _)| acc ^ phi.values.get(i))
            })
            .collect::<Vec<_>>();
        Ok(LinearForm {
            values: BitVec::from_bools(&values),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(spec: &str) -> BurnsideRing {
        BurnsideRing::from_preset(spec, &Guards::default()).unwrap()
    }

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn marks_of_small_groups() {
        assert_eq!(ring("C2").marks().rows(), &[vec![2, 0], vec![1, 1]]);
        assert_eq!(ring("C1").marks().rows(), &[vec![1]]);
        let d8 = ring("D8");
        let last = d8.dim() - 1;
        assert!((0..d8.dim()).all(|k| d8.marks().get(last, k) == 1));
    }

    /// Marks recomputed by counting fixed cosets for every pair of subgroups.
    #[test]
    fn marks_match_fixed_point_count() {
        for spec in ["S3", "D8", "A4", "Q8"] {
            let rg = ring(spec);
            let g = rg.group();
            let t = rg.table();
            for h in 0..rg.dim() {
                let hs = t.rep(h);
                for k in 0..rg.dim() {
                    let ks = t.rep(k);
                    // |{g : g⁻¹Kg ≤ H}| / |H|
                    let count = (0..g.order())
                        .filter(|&x| {
                            ks.elements()
                                .iter()
                                .all(|&y| hs.contains(g.conj(g.inv(x), y)))
                        })
                        .count();
                    assert_eq!(rg.marks().get(h, k), (count / hs.order()) as i64, "{spec}");
                }
            }
        }
    }

    #[test]
    fn table_of_marks_is_triangular() {
        for spec in ["D8", "S4", "SD16", "C2^3", "D8xC3", "Q16"] {
            let rg = ring(spec);
            let t = rg.table();
            for h in 0..rg.dim() {
                assert_eq!(
                    rg.marks().get(h, h),
                    (t.normalizer(h).order() / t.rep(h).order()) as i64
                );
                for k in 0..rg.dim() {
                    let m = rg.marks().get(h, k);
                    assert_eq!(m != 0, t.subconjugate(k, h), "{spec}");
                    if k > h {
                        assert_eq!(m, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn multiplication_examples() {
        let c2 = ring("C2");
        let free = c2.basis(0);
        assert_eq!(c2.mul(&free, &free).unwrap().coeffs, vec![2, 0]);
        assert_eq!(c2.marks_of(&free), vec![2, 0]);
        let d8 = ring("D8");
        for c in 0..d8.dim() {
            let x = d8.basis(c);
            assert_eq!(d8.mul(&d8.one(), &x).unwrap(), x);
        }
    }

    #[test]
    fn idempotents_of_c2() {
        let c2 = ring("C2");
        assert_eq!(c2.idempotent(1).coeffs, vec![r(-1, 2), r(1, 1)]);
        assert_eq!(c2.marks_of(&c2.idempotent(1)), vec![r(0, 1), r(1, 1)]);
        assert_eq!(c2.idempotent(0).coeffs, vec![r(1, 2), r(0, 1)]);
        assert_eq!(c2.marks_of(&c2.idempotent(0)), vec![r(1, 1), r(0, 1)]);
    }

    #[test]
    fn idempotent_system() {
        for spec in ["C4", "S3", "D8", "A4", "S4", "Q8", "C2^3"] {
            let rg = ring(spec);
            let n = rg.dim();
            let mut sum = RationalElem::zero(n);
            for h in 0..n {
                let e = rg.idempotent(h);
                let marks = rg.marks_of(&e);
                for (k, m) in marks.iter().enumerate() {
                    assert_eq!(*m, Ratio::from_integer((h == k) as i64), "{spec}");
                }
                assert_eq!(rg.mul(&e, &e).unwrap(), e);
                for k in h + 1..n {
                    assert!(rg.mul(&e, &rg.idempotent(k)).unwrap().is_zero());
                }
                sum = sum.add(&e);
            }
            assert_eq!(sum, rg.one().to_rational());
        }
    }

    #[test]
    fn ghost_solving() {
        let c4 = ring("C4");
        assert_eq!(c4.ghost_to_burnside(&[1, 1, 1]).unwrap(), c4.one());
        let x = c4.ghost_to_burnside(&[1, 1, -1]).unwrap();
        assert_eq!(x.coeffs, vec![0, 1, -1]);
        assert_eq!(c4.marks_of(&x), vec![1, 1, -1]);
        assert!(c4.ghost_to_burnside(&[1, -1, -1]).is_none());
        assert!(matches!(
            c4.from_marks(&[1i64, 1]),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn epsilon_elements() {
        let v = ring("C2^2");
        let e = v.epsilon().unwrap();
        assert_eq!(e.coeffs, vec![1, -1, -1, -1, 2]);
        assert_eq!(
            e.to_f2().coeffs.to_bools(),
            vec![true, true, true, true, false]
        );
        let c3 = ring("C3");
        assert_eq!(c3.epsilon().unwrap().coeffs, vec![1, -1]);
        assert_eq!(c3.epsilon_f2().unwrap().coeffs.to_bools(), vec![true, true]);
        let c4 = ring("C4");
        assert_eq!(c4.epsilon().unwrap().coeffs, vec![1, -1, 0]);

        let sd = ring("SD16");
        let (i, j, iz, jz) = sd.reflection_classes().unwrap();
        assert!(j.is_none() && jz.is_none());
        let mut expected = BitVec::zeros(sd.dim());
        expected.set(i, true);
        expected.set(iz, true);
        assert_eq!(sd.epsilon_f2().unwrap().coeffs, expected);
        assert_eq!(sd.table().rep(i).order(), 2);
        assert_eq!(sd.table().rep(iz).order(), 4);

        let d8 = ring("D8");
        let (i, j, iz, jz) = d8.reflection_classes().unwrap();
        let (j, jz) = (j.unwrap(), jz.unwrap());
        assert_ne!(i, j);
        assert_ne!(iz, jz);
        // I holds the designated reflection s
        let s = d8.group().generators()[1];
        assert!(
            d8.table().rep(i).contains(s)
                || d8
                    .table()
                    .class_members(i)
                    .iter()
                    .any(|&m| d8.table().subgroup(m).contains(s))
        );
        let e = d8.epsilon().unwrap();
        assert_eq!(
            (e.coeffs[i], e.coeffs[iz], e.coeffs[j], e.coeffs[jz]),
            (1, -1, -1, 1)
        );

        assert!(matches!(ring("Q8").epsilon(), Err(Error::NotInR(_))));
        assert!(matches!(ring("C2").epsilon(), Err(Error::NotInR(_))));
    }

    #[test]
    fn f1_examples() {
        let c2 = ring("C2");
        assert_eq!(c2.f1_apply(&c2.basis(0)).unwrap().coeffs, vec![1, -1]);
        assert!(c2.f1_apply(&c2.basis(1)).unwrap().is_zero());
        let c5 = ring("C5");
        assert_eq!(c5.f1_apply(&c5.basis(0)).unwrap(), c5.epsilon().unwrap());
    }

    #[test]
    fn f1_is_idempotent() {
        for spec in ["C4", "D8", "S4", "SD16", "Q8", "C2^3", "A4"] {
            let rg = ring(spec);
            for c in 0..rg.dim() {
                let once = rg.f1_apply(&rg.basis(c)).unwrap();
                assert_eq!(rg.f1_apply(&once).unwrap(), once, "{spec}");
                let f2 = rg.f1_apply_f2(&rg.basis(c).to_f2()).unwrap();
                assert_eq!(f2, once.to_f2());
            }
        }
    }

    #[test]
    fn f1_fixes_epsilon() {
        for spec in ["C3", "C7", "C4", "C2^2", "D8", "D16", "SD16", "SD32"] {
            let rg = ring(spec);
            let e = rg.epsilon().unwrap();
            assert_eq!(rg.f1_apply(&e).unwrap(), e, "{spec}");
        }
    }

    #[test]
    fn class_names_are_stable() {
        let c2 = ring("C2");
        assert_eq!(c2.class_names(), &["C1#1".to_string(), "C2#1".to_string()]);
        let v = ring("C2^2");
        assert_eq!(v.class_names(), &["C1#1", "C2#1", "C2#2", "C2#3", "C2^2#1"]);
        let d8 = ring("D8");
        assert_eq!(d8.class_names().last().unwrap(), "D8#1");
    }

    fn ring_strategy() -> impl Strategy<Value = &'static str> {
        prop::sample::select(vec!["C4", "S3", "D8", "Q8", "A4", "C2^3", "C6"])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn ring_axioms(spec in ring_strategy(), seed in prop::collection::vec(-3i64..4, 3 * 16)) {
            let rg = ring(spec);
            let n = rg.dim();
            let pick = |k: usize| BurnsideElem { coeffs: seed[k * 16..k * 16 + n].to_vec() };
            let (x, y, z) = (pick(0), pick(1), pick(2));
            let xy = rg.mul(&x, &y).unwrap();
            prop_assert_eq!(&xy, &rg.mul(&y, &x).unwrap());
            prop_assert_eq!(rg.mul(&xy, &z).unwrap(), rg.mul(&x, &rg.mul(&y, &z).unwrap()).unwrap());
            prop_assert_eq!(
                rg.mul(&x, &y.add(&z)).unwrap(),
                rg.mul(&x, &y).unwrap().add(&rg.mul(&x, &z).unwrap())
            );
            prop_assert_eq!(rg.from_marks(&rg.marks_of(&x)).unwrap(), x);
        }
    }
}
