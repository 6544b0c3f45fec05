//! Numerical checks of the functorial picture: the subspace `L(G)` spanned by
//! inflated-induced ε-elements, the dimension count
//! `dim 𝔽₂B(G) = dim L(G) + rank B^×(G)`, and identities among ε-elements.

use num_rational::Ratio;

use crate::bisets::{elementary_matrix, Elementary};
use crate::burnside::{BurnsideElem, BurnsideRing};
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Echelon};
use crate::groups::IsoClassLabel;
use crate::units::{self, Method, UnitGroupDescription};
use crate::Guards;

/// Groups in ℛ of order at most 32, as preset specs.
pub const R_GROUPS_UP_TO_32: [&str; 17] = [
    "C3", "C5", "C7", "C11", "C13", "C17", "C19", "C23", "C29", "C31", "C4", "C2^2", "D8", "D16",
    "D32", "SD16", "SD32",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool) -> Self {
        Self {
            name: name.into(),
            ok,
        }
    }
}

pub fn all_ok(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.ok)
}

#[derive(Clone, Debug)]
pub struct KernelReport {
    pub group: String,
    pub dim_f2b: usize,
    pub dim_l: usize,
    pub rank_units: usize,
    /// Method used for `rank_units`.
    pub rank_method: Method,
    /// One label per section class, as `T/S ≅ Q`.
    pub generators_used: Vec<String>,
    pub exactness_ok: bool,
}

/// Basis of `L(G)` and the dimension report. The unit rank comes from the
/// oracle, or from the Yoshida system if `use_oracle` is false or the
/// oracle guard trips.
pub fn kernel_l(
    ring: &BurnsideRing,
    guards: &Guards,
    use_oracle: bool,
) -> Result<(Vec<BitVec>, KernelReport)> {
    let n = ring.dim();
    let conds = units::section_conditions(ring, guards)?;
    let names = ring.class_names();
    let generators_used = conds
        .iter()
        .map(|c| {
            format!(
                "{}/{} ≅ {}",
                names[ring.table().class_of(c.section.t)],
                names[ring.table().class_of(c.section.s)],
                c.section.label.name_with_order(c.section.quotient.order())
            )
        })
        .collect();
    let basis = Echelon::from_rows(n, conds.iter().map(|c| &c.vector))
        .rows()
        .to_vec();
    let (rank_units, rank_method) = unit_rank(ring, guards, use_oracle)?;
    let report = KernelReport {
        group: ring.label().name_with_order(ring.group().order()),
        dim_f2b: n,
        dim_l: basis.len(),
        rank_units,
        rank_method,
        generators_used,
        exactness_ok: n == basis.len() + rank_units,
    };
    Ok((basis, report))
}

fn unit_rank(ring: &BurnsideRing, guards: &Guards, use_oracle: bool) -> Result<(usize, Method)> {
    if use_oracle {
        match units::units_oracle(ring, guards) {
            Ok(d) => return Ok((d.rank, Method::Oracle)),
            Err(Error::Guard(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok((units::yoshida_rank(ring)?.rank, Method::Yoshida))
}

fn f2_equal(a: &BurnsideElem, b: &BurnsideElem) -> bool {
    a.to_f2() == b.to_f2()
}

/// `Res^{big}_{sub} ε̄_{big} = ε̄_{sub}` for every subgroup class of `big`
/// whose type is `sub_label`.
fn restriction_identity(
    big: &BurnsideRing,
    sub_label: IsoClassLabel,
    guards: &Guards,
) -> Result<Vec<Check>> {
    let eps = big.epsilon()?;
    let big_name = big.label().name_with_order(big.group().order());
    let mut out = Vec::new();
    for c in 0..big.dim() {
        let h = big.table().rep(c);
        let (sub, emb) = big.of_subgroup(h, guards)?;
        if sub.label() != sub_label {
            continue;
        }
        let res = elementary_matrix(Elementary::Res {
            group: big,
            sub: &sub,
            embedding: &emb,
        })?;
        let ok = f2_equal(&res.apply(&eps)?, &sub.epsilon()?);
        out.push(Check::new(
            format!(
                "Res {big_name} -> {} ({}) sends eps to eps",
                sub_label.name_with_order(h.order()),
                big.class_names()[c]
            ),
            ok,
        ));
    }
    if out.is_empty() {
        return Err(Error::Precondition(format!(
            "{big_name} has no subgroup of the requested type"
        )));
    }
    Ok(out)
}

fn f1_fixes_epsilon(r: &BurnsideRing) -> Result<Check> {
    let eps = r.epsilon()?;
    Ok(Check::new(
        format!(
            "f1 fixes eps of {}",
            r.label().name_with_order(r.group().order())
        ),
        r.f1_apply(&eps)? == eps,
    ))
}

/// The element `b` with `f₁ b = ε`: `R/I − R/J` for dihedral, `R/I` for
/// semidihedral, `R/1` otherwise.
pub fn epsilon_base(r: &BurnsideRing) -> Result<BurnsideElem> {
    let n = r.dim();
    let mut b = BurnsideElem::zero(n);
    match r.label() {
        IsoClassLabel::Dihedral(_) => {
            let (i, j, _, _) = r.reflection_classes()?;
            b.coeffs[i] = 1;
            b.coeffs[j.expect("two reflection classes")] = -1;
        }
        IsoClassLabel::Semidihedral(_) => {
            b.coeffs[r.reflection_classes()?.0] = 1;
        }
        l if l.in_class_r() => b.coeffs[0] = 1,
        l => return Err(Error::NotInR(l.name_with_order(r.group().order()))),
    }
    Ok(b)
}

fn epsilon_base_check(r: &BurnsideRing) -> Result<Check> {
    let base = epsilon_base(r)?;
    Ok(Check::new(
        format!(
            "eps of {} is f1 of its base element",
            r.label().name_with_order(r.group().order())
        ),
        r.f1_apply(&base)? == r.epsilon()?,
    ))
}

/// Restriction identities from the semidihedral and dihedral groups of
/// order 16, 32 and 8, plus `f₁ ε_R = ε_R` for every `R ∈ ℛ`, `|R| ≤ 32`.
pub fn epsilon_identities(guards: &Guards) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (big, sub) in [("SD16", 8), ("SD32", 16)] {
        out.extend(restriction_identity(
            &BurnsideRing::from_preset(big, guards)?,
            IsoClassLabel::Dihedral(sub),
            guards,
        )?);
    }
    out.extend(restriction_identity(
        &BurnsideRing::from_preset("D8", guards)?,
        IsoClassLabel::Klein4,
        guards,
    )?);
    for spec in R_GROUPS_UP_TO_32 {
        out.push(f1_fixes_epsilon(&BurnsideRing::from_preset(spec, guards)?)?);
    }
    Ok(out)
}

/// `ε_R = f₁(base)` for every `R ∈ ℛ`, `|R| ≤ 32`.
pub fn epsilon_base_forms(guards: &Guards) -> Result<Vec<Check>> {
    R_GROUPS_UP_TO_32
        .iter()
        .map(|spec| epsilon_base_check(&BurnsideRing::from_preset(spec, guards)?))
        .collect()
}

/// The identities above that concern `ring` itself, if it lies in ℛ.
pub fn group_identities(ring: &BurnsideRing, guards: &Guards) -> Result<Vec<Check>> {
    let label = ring.label();
    if !label.in_class_r() {
        return Ok(Vec::new());
    }
    let mut out = vec![f1_fixes_epsilon(ring)?, epsilon_base_check(ring)?];
    match label {
        IsoClassLabel::Semidihedral(n) => out.extend(restriction_identity(
            ring,
            IsoClassLabel::Dihedral(n / 2),
            guards,
        )?),
        IsoClassLabel::Dihedral(8) => {
            out.extend(restriction_identity(ring, IsoClassLabel::Klein4, guards)?)
        }
        _ => {}
    }
    Ok(out)
}

/// Marks of each `e_H` are the indicator of `H`'s class, the idempotents
/// are orthogonal, and they sum to 1.
pub fn idempotent_checks(ring: &BurnsideRing) -> Result<Vec<Check>> {
    let n = ring.dim();
    let es: Vec<_> = (0..n).map(|c| ring.idempotent(c)).collect();
    let one = Ratio::from_integer(1);
    let zero = Ratio::from_integer(0);
    let indicator = es.iter().enumerate().all(|(c, e)| {
        ring.marks_of(e)
            .iter()
            .enumerate()
            .all(|(k, m)| *m == if k == c { one } else { zero })
    });
    let mut orthogonal = true;
    for a in 0..n {
        for b in a..n {
            let p = ring.mul(&es[a], &es[b])?;
            let expected = if a == b {
                es[a].clone()
            } else {
                crate::RationalElem::zero(n)
            };
            orthogonal &= p == expected;
        }
    }
    let sum = es
        .iter()
        .fold(crate::RationalElem::zero(n), |acc, e| acc.add(e));
    Ok(vec![
        Check::new("idempotent marks are class indicators", indicator),
        Check::new("idempotents are orthogonal", orthogonal),
        Check::new("idempotents sum to 1", sum == ring.one().to_rational()),
    ])
}

/// Every oracle unit satisfies every ε-condition and every Yoshida condition.
pub fn image_containment(
    ring: &BurnsideRing,
    oracle: &UnitGroupDescription,
    guards: &Guards,
) -> Result<bool> {
    let eps: Vec<BitVec> = units::section_conditions(ring, guards)?
        .into_iter()
        .map(|c| c.vector)
        .collect();
    let yos = units::yoshida_conditions(ring)?;
    let Some(us) = &oracle.units else {
        return Err(Error::Precondition("unit list was not materialized".into()));
    };
    for u in us {
        let phi = units::iota(ring, u)?;
        if eps.iter().chain(&yos).any(|row| row.dot(&phi.values)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub group: String,
    /// `None` when the method was skipped.
    pub ranks: Vec<(Method, Option<usize>)>,
    pub methods_agree: bool,
    pub kernel: KernelReport,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.methods_agree && self.kernel.exactness_ok && all_ok(&self.checks)
    }
}

/// Runs all four methods, the dimension count, the idempotent suite, image
/// containment and any ε identities that apply to `ring`.
pub fn verify(ring: &BurnsideRing, guards: &Guards, skip_oracle: bool) -> Result<VerifyReport> {
    let oracle = if skip_oracle {
        None
    } else {
        Some(units::units_oracle(ring, guards)?)
    };
    let mut descs: Vec<UnitGroupDescription> = Vec::new();
    let mut ranks = vec![(Method::Oracle, oracle.as_ref().map(|d| d.rank))];
    for m in [Method::Yoshida, Method::Sections, Method::Limit] {
        let d = units::compute(ring, m, guards)?;
        ranks.push((m, Some(d.rank)));
        descs.push(d);
    }
    if let Some(o) = &oracle {
        descs.push(o.clone());
    }
    let methods_agree = descs.windows(2).all(|w| w[0].same_subspace(&w[1]));
    let (_, kernel) = kernel_l(ring, guards, !skip_oracle)?;
    let mut checks = idempotent_checks(ring)?;
    if let Some(o) = &oracle {
        checks.push(Check::new(
            "oracle units satisfy every condition",
            image_containment(ring, o, guards)?,
        ));
    }
    checks.extend(group_identities(ring, guards)?);
    Ok(VerifyReport {
        group: ring.label().name_with_order(ring.group().order()),
        ranks,
        methods_agree,
        kernel,
        checks,
    })
}
