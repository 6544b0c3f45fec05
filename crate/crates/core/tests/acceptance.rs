//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use burnside_core::bisets::{factorize, transitive_biset, SubgroupOfProduct};
use burnside_core::lab::{self, all_ok};
use burnside_core::lattice::all_subgroups;
use burnside_core::units::{self, Method};
use burnside_core::{BurnsideRing, Guards};

fn corpus() -> Vec<String> {
    let mut v: Vec<String> = (1..=32).map(|n| format!("C{n}")).collect();
    for s in [
        "Klein4", "C2^3", "C2^4", "D8", "D16", "D32", "Q8", "Q16", "SD16", "SD32", "S3", "S4",
        "A4", "C3xC3", "D8xC3",
    ] {
        v.push(s.to_string());
    }
    v
}

struct Row {
    spec: String,
    order: usize,
    classes: usize,
    ranks: [usize; 4],
    same_subspace: bool,
    dim_l: usize,
    containment: bool,
    idempotents: Option<bool>,
}

fn analyze(spec: &str, guards: &Guards) -> Result<Row, String> {
    let ring = BurnsideRing::from_preset(spec, guards).map_err(|e| e.to_string())?;
    let descs: Vec<_> = Method::ALL
        .iter()
        .map(|&m| units::compute(&ring, m, guards))
        .collect::<Result<_, _>>()
        .map_err(|e| format!("{spec}: {e}"))?;
    let same_subspace = descs.windows(2).all(|w| w[0].same_subspace(&w[1]));
    let (_, kernel) = lab::kernel_l(&ring, guards, true).map_err(|e| e.to_string())?;
    let containment =
        lab::image_containment(&ring, &descs[0], guards).map_err(|e| e.to_string())?;
    let idempotents = (ring.group().order() <= 24)
        .then(|| lab::idempotent_checks(&ring).map(|c| all_ok(&c)))
        .transpose()
        .map_err(|e| e.to_string())?;
    Ok(Row {
        spec: spec.to_string(),
        order: ring.group().order(),
        classes: ring.dim(),
        ranks: [descs[0].rank, descs[1].rank, descs[2].rank, descs[3].rank],
        same_subspace,
        dim_l: kernel.dim_l,
        containment,
        idempotents,
    })
}

fn report(n: usize, ok: bool, detail: &str) -> bool {
    println!(
        "criterion {n}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn criterion_faithful(guards: &Guards) -> Result<(bool, String), String> {
    let mut ok = true;
    let mut parts = Vec::new();
    for spec in ["D8", "D16"] {
        let r = BurnsideRing::from_preset(spec, guards).map_err(|e| e.to_string())?;
        let f = units::faithful_units(&r, guards).map_err(|e| e.to_string())?;
        let ups = units::upsilon(&r).map_err(|e| e.to_string())?;
        let good = f.len() == 2 && f.contains(&r.one()) && f.contains(&ups);
        ok &= good;
        parts.push(format!("{spec}:{}", f.len()));
    }
    for spec in ["SD16", "Q8", "Klein4", "C4"] {
        let r = BurnsideRing::from_preset(spec, guards).map_err(|e| e.to_string())?;
        let f = units::faithful_units(&r, guards).map_err(|e| e.to_string())?;
        ok &= f == vec![r.one()];
        parts.push(format!("{spec}:{}", f.len()));
    }
    Ok((ok, parts.join(" ")))
}

fn criterion_factorization(guards: &Guards) -> Result<(bool, usize), String> {
    let names = ["C2", "C3", "C4", "Klein4", "D8"];
    let rings: Vec<_> = names
        .iter()
        .map(|s| BurnsideRing::from_preset(s, guards))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut ok = true;
    let mut count = 0;
    for h in &rings {
        for g in &rings {
            let p = h.group().direct_product(g.group());
            let table = all_subgroups(&p, guards).map_err(|e| e.to_string())?;
            for x in table.subgroups() {
                let x = SubgroupOfProduct::new(h.group(), g.group(), x.clone())
                    .map_err(|e| e.to_string())?;
                let direct = transitive_biset(h, g, &x);
                let fz = factorize(h, g, &x, guards).map_err(|e| e.to_string())?;
                ok &= fz.product().map_err(|e| e.to_string())?.entries == direct.entries;
                count += 1;
            }
        }
    }
    Ok((ok, count))
}

fn main() -> ExitCode {
    let guards = Guards::default();
    let start = Instant::now();
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for spec in corpus() {
        match analyze(&spec, &guards) {
            Ok(r) => rows.push(r),
            Err(e) => errors.push(e),
        }
    }
    for e in &errors {
        println!("error: {e}");
    }
    for r in &rows {
        println!(
            "  {:<8} order {:>2} classes {:>2} ranks {:?} dim L {:>2}",
            r.spec, r.order, r.classes, r.ranks, r.dim_l
        );
    }
    let corpus_ok = errors.is_empty();
    let mut all = true;

    let agree = rows
        .iter()
        .all(|r| r.ranks.iter().all(|&k| k == r.ranks[0]) && r.same_subspace);
    all &= report(
        1,
        corpus_ok && agree,
        &format!(
            "four-way rank agreement on {} groups ({:.1?})",
            rows.len(),
            start.elapsed()
        ),
    );

    let odd = ["C3", "C5", "C7", "C9", "C15", "C21", "C27", "C3xC3"];
    let odd_ok = odd.iter().all(|s| {
        rows.iter()
            .find(|r| r.spec == *s)
            .is_some_and(|r| r.ranks == [1; 4])
    });
    all &= report(2, odd_ok, "rank 1 for every odd-order group");

    let exact = rows.iter().all(|r| r.classes == r.dim_l + r.ranks[0]);
    all &= report(3, corpus_ok && exact, "classes = dim L + rank");

    let eps = lab::epsilon_identities(&guards).and_then(|mut v| {
        v.extend(lab::epsilon_base_forms(&guards)?);
        Ok(v)
    });
    match eps {
        Ok(checks) => {
            let failed: Vec<_> = checks
                .iter()
                .filter(|c| !c.ok)
                .map(|c| c.name.as_str())
                .collect();
            all &= report(
                4,
                failed.is_empty(),
                &format!("{} epsilon identities {:?}", checks.len(), failed),
            );
        }
        Err(e) => all &= report(4, false, &e.to_string()),
    }

    match criterion_faithful(&guards) {
        Ok((ok, detail)) => all &= report(5, ok, &format!("faithful unit counts {detail}")),
        Err(e) => all &= report(5, false, &e),
    }

    let idem: Vec<_> = rows.iter().filter_map(|r| r.idempotents).collect();
    all &= report(
        6,
        corpus_ok && idem.iter().all(|&b| b),
        &format!("idempotent suite on {} groups of order <= 24", idem.len()),
    );

    let t = Instant::now();
    match criterion_factorization(&guards) {
        Ok((ok, n)) => {
            all &= report(
                7,
                ok,
                &format!("{n} subgroups X factorized ({:.1?})", t.elapsed()),
            )
        }
        Err(e) => all &= report(7, false, &e),
    }

    let contain = rows.iter().all(|r| r.containment);
    all &= report(
        8,
        corpus_ok && contain,
        "oracle units satisfy every condition",
    );

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
