//! The unit group `B^×(G)`, computed four ways.
//!
//! * [`units_oracle`] searches sign vectors of marks for integral preimages.
//! * [`yoshida_rank`] solves the homomorphism conditions on `N_G(H)/H`.
//! * [`section_image_rank`] imposes one ε-condition per section in ℛ.
//! * [`sectional_limit_rank`] solves for compatible families over sections in 𝒯.
//!
//! Units are identified with their images under `ι`, linear forms on `B(G)`
//! over GF(2), and every comparison between methods happens there.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::bisets::indinf;
use crate::burnside::{BurnsideElem, BurnsideRing, LinearForm};
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Echelon};
use crate::lattice::{section_census, Section, SectionCensus, SectionFilter, Subgroup};
use crate::Guards;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    Yoshida,
    Sections,
    Limit,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Oracle,
        Method::Yoshida,
        Method::Sections,
        Method::Limit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Yoshida => "yoshida",
            Method::Sections => "sections",
            Method::Limit => "limit",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct UnitGroupDescription {
    pub method: Method,
    /// `|B^×(G)| = 2^rank`.
    pub rank: usize,
    /// Every unit, in search order; only the oracle materializes them.
    pub units: Option<Vec<BurnsideElem>>,
    /// Reduced echelon basis of the subspace `ι(B^×(G))` of forms.
    pub form_basis: Vec<LinearForm>,
}

impl UnitGroupDescription {
    fn from_forms(
        method: Method,
        cols: usize,
        forms: Vec<BitVec>,
        units: Option<Vec<BurnsideElem>>,
    ) -> Self {
        let basis = crate::gf2::span_basis(cols, &forms);
        Self {
            method,
            rank: basis.len(),
            units,
            form_basis: basis
                .into_iter()
                .map(|values| LinearForm { values })
                .collect(),
        }
    }

    /// Whether `φ` lies in the described subspace.
    pub fn contains_form(&self, phi: &LinearForm) -> bool {
        let cols = phi.len();
        Echelon::from_rows(cols, self.form_basis.iter().map(|f| &f.values)).contains(&phi.values)
    }

    pub fn same_subspace(&self, other: &UnitGroupDescription) -> bool {
        self.rank == other.rank && other.form_basis.iter().all(|f| self.contains_form(f))
    }
}

/// Sign of each mark: entry `H` is set iff `|u^H| = -1`.
pub fn iota(ring: &BurnsideRing, u: &BurnsideElem) -> Result<LinearForm> {
    let marks = ring.marks_of(u);
    let mut values = BitVec::zeros(marks.len());
    for (class, &mark) in marks.iter().enumerate() {
        match mark {
            1 => {}
            -1 => values.set(class, true),
            _ => return Err(Error::NotUnit { class, mark }),
        }
    }
    Ok(LinearForm { values })
}

/// The unit with the given `ι`-image, if the sign vector lifts integrally.
pub fn unit_from_form(ring: &BurnsideRing, phi: &LinearForm) -> Option<BurnsideElem> {
    let signs: Vec<i64> = (0..phi.len())
        .map(|i| if phi.values.get(i) { -1 } else { 1 })
        .collect();
    ring.ghost_to_burnside(&signs)
}

/// Depth-first search over sign vectors, assigning marks from the largest
/// class down and abandoning any prefix whose back-substitution is already
/// non-integral. Visits at most `2^oracle_bits` nodes.
pub fn units_oracle(ring: &BurnsideRing, guards: &Guards) -> Result<UnitGroupDescription> {
    let n = ring.dim();
    let budget = 1u64 << guards.oracle_bits.min(62);
    let marks = ring.marks();
    let mut search = Search {
        marks: marks.rows(),
        budget,
        nodes: 0,
        resid: vec![0; n],
        coeffs: vec![0; n],
        signs: BitVec::zeros(n),
        found: Vec::new(),
    };
    search.descend(n)?;
    let count = search.found.len();
    let (units, forms): (Vec<_>, Vec<_>) = search.found.into_iter().unzip();
    let desc = UnitGroupDescription::from_forms(Method::Oracle, n, forms, Some(units));
    if count != 1usize << desc.rank {
        return Err(Error::Precondition(format!(
            "{count} units found but their images span rank {}",
            desc.rank
        )));
    }
    Ok(desc)
}

struct Search<'a> {
    marks: &'a [Vec<i64>],
    budget: u64,
    nodes: u64,
    /// `resid[k] = -Σ_{h assigned} x_h · m[h][k]`
    resid: Vec<i64>,
    coeffs: Vec<i64>,
    signs: BitVec,
    found: Vec<(BurnsideElem, BitVec)>,
}

impl Search<'_> {
    fn descend(&mut self, level: usize) -> Result<()> {
        if level == 0 {
            self.found.push((
                BurnsideElem {
                    coeffs: self.coeffs.clone(),
                },
                self.signs.clone(),
            ));
            return Ok(());
        }
        let k = level - 1;
        let row = &self.marks[k];
        let diag = row[k];
        for sign in [1i64, -1] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Guard(format!(
                    "oracle search exceeded 2^{} nodes",
                    self.budget.trailing_zeros()
                )));
            }
            let num = sign + self.resid[k];
            if num % diag != 0 {
                continue;
            }
            let x = num / diag;
            if x != 0 {
                for j in 0..k {
                    self.resid[j] -= x * row[j];
                }
            }
            self.coeffs[k] = x;
            self.signs.set(k, sign < 0);
            self.descend(k)?;
            if x != 0 {
                for j in 0..k {
                    self.resid[j] += x * row[j];
                }
            }
        }
        self.coeffs[k] = 0;
        self.signs.set(k, false);
        Ok(())
    }
}

/// Rows of the homomorphism conditions: for each class rep `H` and
/// `x, y ∈ N_G(H)/H`, the row `G/H⟨xy⟩ + G/H⟨x⟩ + G/H⟨y⟩ + G/H`.
/// Zero rows are dropped and duplicates removed; order is deterministic.
pub fn yoshida_conditions(ring: &BurnsideRing) -> Result<Vec<BitVec>> {
    let g = ring.group();
    let table = ring.table();
    let n = ring.dim();
    let mut seen = HashSet::new();
    let mut rows = Vec::new();
    for c in 0..n {
        let h = table.rep(c);
        let norm = table.normalizer(c);
        // cosets of H in N_G(H)
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut lifts: Vec<Vec<usize>> = Vec::new();
        for x in norm.members().iter_ones() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = lifts.len();
            let coset: Vec<usize> = h.members().iter_ones().map(|y| g.mul(x, y)).collect();
            for &y in &coset {
                coset_of[y] = id;
            }
            lifts.push(coset);
        }
        let gen_class = |lift: usize| -> Result<usize> {
            let k = h.join(g, &Subgroup::generated(g, &[lift]));
            ring.class_of_members(k.members())
                .ok_or_else(|| Error::Precondition("join is not a subgroup".into()))
        };
        let mut kclass = Vec::with_capacity(lifts.len());
        for coset in &lifts {
            let first = gen_class(coset[0])?;
            let last = gen_class(*coset.last().unwrap())?;
            if first != last {
                return Err(Error::Precondition("H⟨x⟩ depends on the lift of x".into()));
            }
            kclass.push(first);
        }
        for a in 0..lifts.len() {
            for b in a..lifts.len() {
                let ab = coset_of[g.mul(lifts[a][0], lifts[b][0])];
                let mut row = BitVec::zeros(n);
                for cls in [kclass[ab], kclass[a], kclass[b], c] {
                    row.flip(cls);
                }
                if !row.is_zero() && seen.insert(row.clone()) {
                    rows.push(row);
                }
                let ba = coset_of[g.mul(lifts[b][0], lifts[a][0])];
                if ba != ab {
                    let mut row = BitVec::zeros(n);
                    for cls in [kclass[ba], kclass[a], kclass[b], c] {
                        row.flip(cls);
                    }
                    if !row.is_zero() && seen.insert(row.clone()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    Ok(rows)
}

pub fn yoshida_rank(ring: &BurnsideRing) -> Result<UnitGroupDescription> {
    let n = ring.dim();
    let rows = yoshida_conditions(ring)?;
    let ns = Echelon::from_rows(n, &rows).nullspace();
    Ok(UnitGroupDescription::from_forms(
        Method::Yoshida,
        n,
        ns,
        None,
    ))
}

/// One ε-condition for a section class: the vector `Indinf_{T/S}^G ε̄_{T/S}`.
#[derive(Clone, Debug)]
pub struct EpsilonCondition {
    pub section: Section,
    pub vector: BitVec,
}

/// The ε-conditions for every class of sections with quotient in ℛ.
pub fn section_conditions(ring: &BurnsideRing, guards: &Guards) -> Result<Vec<EpsilonCondition>> {
    let census = section_census(ring.group(), ring.table(), SectionFilter::ClassR)?;
    census
        .reps
        .into_iter()
        .map(|section| {
            let q = BurnsideRing::new(section.quotient.clone(), guards)?;
            let eps = q.epsilon_f2()?;
            let vector = indinf(ring, &section, &q).apply_f2(&eps)?.coeffs;
            Ok(EpsilonCondition { section, vector })
        })
        .collect()
}

pub fn section_image_rank(ring: &BurnsideRing, guards: &Guards) -> Result<UnitGroupDescription> {
    let n = ring.dim();
    let rows: Vec<BitVec> = section_conditions(ring, guards)?
        .into_iter()
        .map(|c| c.vector)
        .collect();
    let ns = Echelon::from_rows(n, &rows).nullspace();
    Ok(UnitGroupDescription::from_forms(
        Method::Sections,
        n,
        ns,
        None,
    ))
}

/// Per section rep: its variables and the map from literal subgroups
/// `S₀ ≤ U ≤ T₀` to classes of `T₀/S₀`.
struct LimitBlock {
    offset: usize,
    basis: Vec<LinearForm>,
    quotient_class: HashMap<usize, usize>,
}

/// Solves for families `(l_{T,S})` with `l_{T,S} ∈ ι(B^×(T/S))` over all
/// sections with quotient in 𝒯, compatible under Defres and conjugation.
///
/// Each family is stored on class representatives only; the value at a
/// conjugate section is the transported value at its representative.
pub fn sectional_limit_rank(ring: &BurnsideRing, guards: &Guards) -> Result<UnitGroupDescription> {
    let g = ring.group();
    let table = ring.table();
    let census: SectionCensus = section_census(g, table, SectionFilter::ClassT)?;

    let mut blocks = Vec::with_capacity(census.reps.len());
    let mut nvars = 0;
    for sec in &census.reps {
        let q = BurnsideRing::new(sec.quotient.clone(), guards)?;
        let basis = units_oracle(&q, guards)?.form_basis;
        let s0 = table.subgroup(sec.s);
        let quotient_class = table
            .subgroups_below(sec.t)
            .into_iter()
            .filter(|&u| s0.is_subgroup_of(table.subgroup(u)))
            .map(|u| {
                let img = sec.project(table.subgroup(u).members());
                (
                    u,
                    q.class_of_members(&img)
                        .expect("image of a subgroup is a subgroup"),
                )
            })
            .collect();
        let offset = nvars;
        nvars += basis.len();
        blocks.push(LimitBlock {
            offset,
            basis,
            quotient_class,
        });
    }

    // l_{rep}(U) as a vector over the variables
    let eval_rep = |r: usize, u: usize| -> BitVec {
        let b = &blocks[r];
        let qc = b.quotient_class[&u];
        BitVec::from_ones(
            nvars,
            b.basis
                .iter()
                .enumerate()
                .filter(|(_, f)| f.values.get(qc))
                .map(|(i, _)| b.offset + i),
        )
    };

    let mut seen = HashSet::new();
    let mut rows = Vec::new();
    let mut push = |row: BitVec| {
        if !row.is_zero() && seen.insert(row.clone()) {
            rows.push(row);
        }
    };

    for (r, sec) in census.reps.iter().enumerate() {
        let (t0, s0) = (table.subgroup(sec.t), table.subgroup(sec.s));
        // Defres compatibility with every nested section
        for inst in &census.instances {
            let (ti, si) = (table.subgroup(inst.t), table.subgroup(inst.s));
            if !(s0.is_subgroup_of(si) && ti.is_subgroup_of(t0)) {
                continue;
            }
            let back = g.inv(inst.transporter);
            for u in table.subgroups_below(inst.t) {
                if !si.is_subgroup_of(table.subgroup(u)) {
                    continue;
                }
                let u0 = table.conjugate_index(g, back, u);
                let mut row = eval_rep(r, u);
                row.xor_assign(&eval_rep(inst.class, u0));
                push(row);
            }
        }
        // invariance under the stabilizer of (T₀, S₀)
        let norm = table.normalizer(table.class_of(sec.t));
        let stab: Vec<usize> = norm
            .members()
            .iter_ones()
            .filter(|&x| s0.is_normalized_by(g, x))
            .collect();
        let stab = Subgroup::from_elements(g, &stab)?;
        let mut inside: Vec<usize> = blocks[r].quotient_class.keys().copied().collect();
        inside.sort_unstable();
        for &x in stab.generators() {
            for &u in &inside {
                let mut row = eval_rep(r, u);
                row.xor_assign(&eval_rep(r, table.conjugate_index(g, x, u)));
                push(row);
            }
        }
    }

    let ns = Echelon::from_rows(nvars, &rows).nullspace();

    // φ(G/U) = l_{U,U}(U)
    let n = ring.dim();
    let trivial_rep: Vec<usize> = (0..n)
        .map(|c| {
            let t = table.class_reps()[c];
            census
                .reps
                .iter()
                .position(|s| s.t == t && s.s == t)
                .expect("every (U, U) is a section in 𝒯")
        })
        .collect();
    let forms: Vec<BitVec> = ns
        .iter()
        .map(|sol| {
            BitVec::from_ones(
                n,
                (0..n).filter(|&c| {
                    let r = trivial_rep[c];
                    eval_rep(r, table.class_reps()[c]).dot(sol)
                }),
            )
        })
        .collect();
    let desc = UnitGroupDescription::from_forms(Method::Limit, n, forms, None);
    if desc.rank != ns.len() {
        return Err(Error::Precondition(format!(
            "limit has dimension {} but restricts to rank {}",
            ns.len(),
            desc.rank
        )));
    }
    Ok(desc)
}

pub fn compute(
    ring: &BurnsideRing,
    method: Method,
    guards: &Guards,
) -> Result<UnitGroupDescription> {
    match method {
        Method::Oracle => units_oracle(ring, guards),
        Method::Yoshida => yoshida_rank(ring),
        Method::Sections => section_image_rank(ring, guards),
        Method::Limit => sectional_limit_rank(ring, guards),
    }
}

/// Units whose `ι`-image is fixed by `f₁`, i.e. killed by every proper deflation.
pub fn faithful_units(ring: &BurnsideRing, guards: &Guards) -> Result<Vec<BurnsideElem>> {
    let all = units_oracle(ring, guards)?;
    let mut out = Vec::new();
    for u in all.units.unwrap_or_default() {
        let phi = iota(ring, &u)?;
        if ring.f1_apply_form(&phi)? == phi {
            out.push(u);
        }
    }
    Ok(out)
}

/// `υ = G/G + G/1 − G/I − G/J` for a dihedral 2-group.
pub fn upsilon(ring: &BurnsideRing) -> Result<BurnsideElem> {
    let (i, j, _, _) = ring.reflection_classes()?;
    let j = j.ok_or_else(|| Error::NotInR(ring.label().to_string()))?;
    let n = ring.dim();
    let mut u = BurnsideElem::zero(n);
    u.coeffs[n - 1] += 1;
    u.coeffs[0] += 1;
    u.coeffs[i] -= 1;
    u.coeffs[j] -= 1;
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisets::{dual_action, elementary_matrix, Elementary};
    use num_rational::Ratio;

    fn ring(spec: &str) -> BurnsideRing {
        BurnsideRing::from_preset(spec, &Guards::default()).unwrap()
    }

    fn form(bits: &[u8]) -> LinearForm {
        LinearForm {
            values: BitVec::from_bools(&bits.iter().map(|&b| b == 1).collect::<Vec<_>>()),
        }
    }

    #[test]
    fn oracle_small_examples() {
        let g = Guards::default();
        let triv = units_oracle(&ring("C1"), &g).unwrap();
        assert_eq!(triv.rank, 1);
        assert_eq!(triv.units.as_ref().unwrap().len(), 2);
        assert_eq!(units_oracle(&ring("C4"), &g).unwrap().rank, 2);
        assert_eq!(units_oracle(&ring("C15"), &g).unwrap().rank, 1);
        assert_eq!(units_oracle(&ring("C2"), &g).unwrap().rank, 2);
    }

    #[test]
    fn oracle_c4_units() {
        let r = ring("C4");
        let desc = units_oracle(&r, &Guards::default()).unwrap();
        // s₁ = s₂ on (1, C2), s₄ free
        for u in desc.units.unwrap() {
            let m = r.marks_of(&u);
            assert_eq!(m[0], m[1]);
        }
    }

    #[test]
    fn oracle_guard_trips() {
        let g = Guards {
            oracle_bits: 3,
            ..Guards::default()
        };
        assert!(matches!(
            units_oracle(&ring("D8"), &g),
            Err(Error::Guard(_))
        ));
    }

    #[test]
    fn iota_examples() {
        let r = ring("C4");
        assert_eq!(iota(&r, &r.one()).unwrap(), LinearForm::zero(3));
        let minus = r.one().scale(-1);
        assert_eq!(iota(&r, &minus).unwrap(), form(&[1, 1, 1]));
        let u = r.basis(1).sub(&r.basis(2));
        assert_eq!(iota(&r, &u).unwrap(), form(&[0, 0, 1]));
        assert!(matches!(iota(&r, &r.basis(0)), Err(Error::NotUnit { .. })));
        assert_eq!(unit_from_form(&r, &form(&[0, 0, 1])).unwrap(), u);
        assert!(unit_from_form(&r, &form(&[1, 0, 0])).is_none());
    }

    #[test]
    fn units_form_an_elementary_abelian_group() {
        for spec in ["D8", "S4", "C6", "Q8"] {
            let r = ring(spec);
            let units = units_oracle(&r, &Guards::default()).unwrap().units.unwrap();
            let set: HashSet<Vec<i64>> = units.iter().map(|u| u.coeffs.clone()).collect();
            for u in &units {
                assert_eq!(r.mul(u, u).unwrap(), r.one(), "{spec}");
                for v in &units {
                    assert!(set.contains(&r.mul(u, v).unwrap().coeffs));
                }
            }
        }
    }

    #[test]
    fn yoshida_examples() {
        let k = ring("C2^2");
        let rows = yoshida_conditions(&k).unwrap();
        assert_eq!(rows, vec![BitVec::from_ones(5, 0..4)]);
        assert_eq!(yoshida_rank(&k).unwrap().rank, 4);
        for p in ["C3", "C5", "C7"] {
            assert_eq!(yoshida_rank(&ring(p)).unwrap().rank, 1);
        }
        let d8 = ring("D8");
        let minus = LinearForm {
            values: BitVec::ones(d8.dim()),
        };
        for row in yoshida_conditions(&d8).unwrap() {
            assert!(!row.dot(&minus.values));
        }
    }

    #[test]
    fn section_condition_examples() {
        let g = Guards::default();
        let c5 = ring("C5");
        let conds = section_conditions(&c5, &g).unwrap();
        assert_eq!(conds.len(), 1);
        assert_eq!(conds[0].vector, BitVec::from_ones(2, [0, 1]));
        assert_eq!(section_image_rank(&c5, &g).unwrap().rank, 1);

        let c4 = ring("C4");
        let conds = section_conditions(&c4, &g).unwrap();
        assert_eq!(conds.len(), 1);
        assert_eq!(conds[0].vector, BitVec::from_ones(3, [0, 1]));
        assert_eq!(section_image_rank(&c4, &g).unwrap().rank, 2);

        let k = ring("C2^2");
        let conds = section_conditions(&k, &g).unwrap();
        assert_eq!(conds.len(), 1);
        assert_eq!(conds[0].vector, BitVec::from_ones(5, 0..4));
        assert_eq!(section_image_rank(&k, &g).unwrap().rank, 4);
    }

    #[test]
    fn limit_examples() {
        let g = Guards::default();
        for spec in ["C4", "C15", "D8", "C1", "C2^2", "Q8"] {
            let r = ring(spec);
            let lim = sectional_limit_rank(&r, &g).unwrap();
            let oracle = units_oracle(&r, &g).unwrap();
            assert!(lim.same_subspace(&oracle), "{spec}");
        }
        assert_eq!(sectional_limit_rank(&ring("C15"), &g).unwrap().rank, 1);
    }

    #[test]
    fn methods_agree_on_subspaces() {
        let g = Guards::default();
        for spec in ["S3", "S4", "A4", "D16", "SD16", "C2^3", "C12"] {
            let r = ring(spec);
            let oracle = units_oracle(&r, &g).unwrap();
            for m in [Method::Yoshida, Method::Sections, Method::Limit] {
                let d = compute(&r, m, &g).unwrap();
                assert!(d.same_subspace(&oracle), "{spec} {m}");
            }
        }
    }

    #[test]
    fn iota_commutes_with_restriction() {
        let g = Guards::default();
        for spec in ["D8", "S4", "C6"] {
            let r = ring(spec);
            let units = units_oracle(&r, &g).unwrap().units.unwrap();
            for c in 0..r.dim() {
                let (h, emb) = r.of_subgroup(r.table().rep(c), &g).unwrap();
                let res = elementary_matrix(Elementary::Res {
                    group: &r,
                    sub: &h,
                    embedding: &emb,
                })
                .unwrap();
                let ind = elementary_matrix(Elementary::Ind {
                    group: &r,
                    sub: &h,
                    embedding: &emb,
                })
                .unwrap();
                for u in &units {
                    let ru = res.apply(u).unwrap();
                    assert_eq!(
                        iota(&h, &ru).unwrap(),
                        dual_action(&ind, &iota(&r, u).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn faithful_examples() {
        let g = Guards::default();
        for spec in ["D8", "D16"] {
            let r = ring(spec);
            let f = faithful_units(&r, &g).unwrap();
            assert_eq!(f.len(), 2, "{spec}");
            let ups = upsilon(&r).unwrap();
            assert!(f.contains(&r.one()));
            assert!(f.contains(&ups));
            // υ = 1 − 2(e_I + e_J)
            let (i, j, _, _) = r.reflection_classes().unwrap();
            let e = r.idempotent(i).add(&r.idempotent(j.unwrap()));
            let expected = r.one().to_rational().sub(&e.scale(Ratio::from_integer(2)));
            assert_eq!(expected.to_integral().unwrap(), ups);
        }
        for spec in ["SD16", "Q8", "C2^2", "C4"] {
            let r = ring(spec);
            assert_eq!(faithful_units(&r, &g).unwrap(), vec![r.one()], "{spec}");
        }
    }

    #[test]
    fn faithful_matches_deflation_test() {
        let g = Guards::default();
        for spec in ["D8", "D16", "SD16", "C2^2", "S4"] {
            let r = ring(spec);
            let t = r.table();
            let minimal: Vec<usize> = t
                .normal_subgroups()
                .into_iter()
                .filter(|&n| n != 0)
                .filter(|&n| {
                    t.normal_subgroups()
                        .into_iter()
                        .all(|m| m == 0 || m == n || !t.subgroup(m).is_subgroup_of(t.subgroup(n)))
                })
                .collect();
            let faithful = faithful_units(&r, &g).unwrap();
            for u in units_oracle(&r, &g).unwrap().units.unwrap() {
                let phi = iota(&r, &u).unwrap();
                let killed = minimal.iter().all(|&n| {
                    let (q, p) =
                        crate::quotient_group(r.group(), &t.subgroup(n).elements()).unwrap();
                    let qr = BurnsideRing::new(q, &g).unwrap();
                    let inf = elementary_matrix(Elementary::Inf {
                        group: &r,
                        quotient: &qr,
                        projection: &p,
                    })
                    .unwrap();
                    dual_action(&inf, &phi).unwrap().values.is_zero()
                });
                assert_eq!(killed, faithful.contains(&u), "{spec}");
            }
        }
    }
}
