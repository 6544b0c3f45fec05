use burnside_core::bisets::{factorize as factor_biset, transitive_biset, SubgroupOfProduct};
use burnside_core::lab::{self, Check};
use burnside_core::lattice::all_subgroups;
use burnside_core::units::{self, UnitGroupDescription};
use burnside_core::{BurnsideElem, BurnsideRing, Error, Method, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::output::{align, bits, envelope, header, Output, Status};
use crate::{Config, Family};

fn load(spec: &str, cfg: &Config) -> Result<BurnsideRing> {
    BurnsideRing::from_preset(spec, &cfg.guards)
}

fn s<T: ToString>(x: T) -> String {
    x.to_string()
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::Mismatch
    }
}

pub fn marks(spec: &str, cfg: &Config) -> Result<Output> {
    let ring = load(spec, cfg)?;
    let names = ring.class_names();
    let rows = ring.marks().rows();
    let mut table = vec![std::iter::once(String::new())
        .chain(names.iter().cloned())
        .collect::<Vec<_>>()];
    let mut csv = vec![std::iter::once(s("class"))
        .chain(names.iter().cloned())
        .collect::<Vec<_>>()];
    for (name, row) in names.iter().zip(rows) {
        let line: Vec<String> = std::iter::once(name.clone())
            .chain(row.iter().map(s))
            .collect();
        table.push(line.clone());
        csv.push(line);
    }
    Ok(Output {
        json: envelope(spec, &ring, json!({ "marks": rows })),
        plain: header(spec, &ring) + &align(&table),
        csv,
        status: Status::Ok,
    })
}

pub fn subgroups(spec: &str, cfg: &Config) -> Result<Output> {
    let ring = load(spec, cfg)?;
    let g = ring.group();
    let t = ring.table();
    let cols = [
        "class",
        "order",
        "type",
        "conjugates",
        "normalizer_order",
        "generators",
    ];
    let mut rows = vec![cols.iter().map(s).collect::<Vec<_>>()];
    let mut items = Vec::new();
    for (c, name) in ring.class_names().iter().enumerate() {
        let rep = t.rep(c);
        let ty = name.split('#').next().unwrap_or_default().to_string();
        let gens: Vec<String> = rep.generators().iter().map(|&x| g.label(x)).collect();
        let row = vec![
            name.clone(),
            s(rep.order()),
            ty.clone(),
            s(t.class_members(c).len()),
            s(t.normalizer(c).order()),
            gens.join(" "),
        ];
        items.push(json!({
            "class": name,
            "order": rep.order(),
            "type": ty,
            "conjugates": t.class_members(c).len(),
            "normalizer_order": t.normalizer(c).order(),
            "generators": gens,
        }));
        rows.push(row);
    }
    let plain = header(spec, &ring) + &format!("{} subgroups in total\n", t.len()) + &align(&rows);
    Ok(Output {
        json: envelope(
            spec,
            &ring,
            json!({ "subgroups": t.len(), "classes": items }),
        ),
        plain,
        csv: rows,
        status: Status::Ok,
    })
}

fn unit_witnesses(desc: &UnitGroupDescription) -> (Vec<Value>, Vec<String>) {
    let forms: Vec<String> = desc.form_basis.iter().map(|f| bits(&f.values)).collect();
    let units: Vec<Value> = desc
        .units
        .iter()
        .flatten()
        .map(|u: &BurnsideElem| json!(u.coeffs))
        .collect();
    (units, forms)
}

pub fn units(spec: &str, methods: &[Method], cfg: &Config) -> Result<Output> {
    let ring = load(spec, cfg)?;
    let all = methods.len() > 1;
    let mut descs = Vec::new();
    for &m in methods {
        if all && m == Method::Oracle && cfg.skip_oracle {
            continue;
        }
        descs.push(units::compute(&ring, m, &cfg.guards)?);
    }
    let agrees: Vec<bool> = descs.iter().map(|d| d.same_subspace(&descs[0])).collect();
    let matched = agrees.iter().all(|&a| a);

    let mut plain = header(spec, &ring);
    let mut csv = vec![vec![s("method"), s("rank"), s("agrees")]];
    let mut entries = Vec::new();
    for (d, &a) in descs.iter().zip(&agrees) {
        let size = if d.rank < 64 {
            format!("2^{} = {}", d.rank, 1u64 << d.rank)
        } else {
            format!("2^{}", d.rank)
        };
        plain.push_str(&format!(
            "{:<9} rank {}  |B^x| = {}\n",
            d.method.name(),
            d.rank,
            size
        ));
        csv.push(vec![s(d.method), s(d.rank), s(a)]);
        let mut entry = json!({ "method": d.method.name(), "rank": d.rank });
        if cfg.witnesses {
            let (us, forms) = unit_witnesses(d);
            for f in &forms {
                plain.push_str(&format!("  form {f}\n"));
            }
            for u in &us {
                plain.push_str(&format!("  unit {u}\n"));
            }
            entry["form_basis"] = json!(forms);
            if d.units.is_some() {
                entry["units"] = json!(us);
            }
        }
        entries.push(entry);
    }
    let mut result = json!({ "methods": entries });
    if all {
        plain.push_str(&format!("match: {matched}\n"));
        result["match"] = json!(matched);
    }
    Ok(Output {
        json: envelope(spec, &ring, result),
        plain,
        csv,
        status: status(matched),
    })
}

fn kernel_json(r: &lab::KernelReport) -> Value {
    json!({
        "group_type": r.group,
        "dim_F2B": r.dim_f2b,
        "dim_L": r.dim_l,
        "rank_units": r.rank_units,
        "rank_method": r.rank_method.name(),
        "generators_used": r.generators_used,
        "exactness_ok": r.exactness_ok,
    })
}

pub fn kernel(spec: &str, cfg: &Config) -> Result<Output> {
    let ring = load(spec, cfg)?;
    let (basis, r) = lab::kernel_l(&ring, &cfg.guards, !cfg.skip_oracle)?;
    let mut plain = header(spec, &ring);
    plain.push_str(&format!(
        "dim F2B = {}\ndim L = {}\nrank B^x = {} ({})\nexact: {}\n",
        r.dim_f2b, r.dim_l, r.rank_units, r.rank_method, r.exactness_ok
    ));
    plain.push_str(&format!(
        "generators from {} section classes:\n",
        r.generators_used.len()
    ));
    for gname in &r.generators_used {
        plain.push_str(&format!("  {gname}\n"));
    }
    let mut result = kernel_json(&r);
    if cfg.witnesses {
        let b: Vec<String> = basis.iter().map(bits).collect();
        for v in &b {
            plain.push_str(&format!("  basis {v}\n"));
        }
        result["basis"] = json!(b);
    }
    let csv = vec![
        ["group", "classes", "dim_L", "rank", "rank_method", "exact"]
            .map(s)
            .to_vec(),
        vec![
            s(spec),
            s(r.dim_f2b),
            s(r.dim_l),
            s(r.rank_units),
            s(r.rank_method),
            s(r.exactness_ok),
        ],
    ];
    Ok(Output {
        json: envelope(spec, &ring, result),
        plain,
        csv,
        status: status(r.exactness_ok),
    })
}

/// Seeded samples of the ring axioms and of the ghost round trip.
fn random_ring_checks(ring: &BurnsideRing, seed: u64) -> Result<Check> {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = ring.dim();
    let mut pick = || BurnsideElem {
        coeffs: (0..n).map(|_| rng.random_range(-3..=3)).collect(),
    };
    let mut ok = true;
    for _ in 0..16 {
        let (x, y, z) = (pick(), pick(), pick());
        let xy = ring.mul(&x, &y)?;
        ok &= xy == ring.mul(&y, &x)?;
        ok &= ring.mul(&xy, &z)? == ring.mul(&x, &ring.mul(&y, &z)?)?;
        ok &= ring.mul(&x, &y.add(&z))? == xy.add(&ring.mul(&x, &z)?);
        ok &= ring.from_marks(&ring.marks_of(&x))? == x;
    }
    Ok(Check {
        name: format!("random ring axioms (seed {seed})"),
        ok,
    })
}

pub fn verify(spec: &str, cfg: &Config) -> Result<Output> {
    let ring = load(spec, cfg)?;
    let mut rep = lab::verify(&ring, &cfg.guards, cfg.skip_oracle)?;
    rep.checks.push(random_ring_checks(&ring, cfg.seed)?);
    let passed = rep.passed();

    let mut plain = header(spec, &ring);
    let mut csv = vec![vec![s("check"), s("ok")]];
    let ranks: Vec<Value> = rep
        .ranks
        .iter()
        .map(|(m, r)| {
            let shown = r.map_or_else(|| s("skipped"), s);
            plain.push_str(&format!("rank ({m}): {shown}\n"));
            json!({ "method": m.name(), "rank": r })
        })
        .collect();
    plain.push_str(&format!("methods agree: {}\n", rep.methods_agree));
    plain.push_str(&format!(
        "dim L = {}, rank = {}, classes = {}, exactness_ok = {}\n",
        rep.kernel.dim_l, rep.kernel.rank_units, rep.kernel.dim_f2b, rep.kernel.exactness_ok
    ));
    csv.push(vec![s("methods agree"), s(rep.methods_agree)]);
    csv.push(vec![s("exactness"), s(rep.kernel.exactness_ok)]);
    for c in &rep.checks {
        plain.push_str(&format!(
            "[{}] {}\n",
            if c.ok { "ok" } else { "FAIL" },
            c.name
        ));
        csv.push(vec![c.name.clone(), s(c.ok)]);
    }
    plain.push_str(if passed { "PASS\n" } else { "FAIL\n" });
    let result = json!({
        "ranks": ranks,
        "methods_agree": rep.methods_agree,
        "kernel": kernel_json(&rep.kernel),
        "checks": rep.checks.iter().map(|c| json!({ "name": c.name, "ok": c.ok })).collect::<Vec<_>>(),
        "passed": passed,
    });
    Ok(Output {
        json: envelope(spec, &ring, result),
        plain,
        csv,
        status: status(passed),
    })
}

pub fn family_specs(family: Family, max_order: usize) -> Vec<String> {
    let pow2 = |from: u32| {
        (from..usize::BITS)
            .map(|k| 1usize << k)
            .take_while(|&n| n <= max_order)
    };
    match family {
        Family::Cyclic => (1..=max_order).map(|n| format!("C{n}")).collect(),
        Family::Dihedral => pow2(3).map(|n| format!("D{n}")).collect(),
        Family::Semidihedral => pow2(4).map(|n| format!("SD{n}")).collect(),
        Family::Quaternion => pow2(3).map(|n| format!("Q{n}")).collect(),
        Family::Elementary => pow2(1)
            .map(|n| format!("C2^{}", n.trailing_zeros()))
            .collect(),
    }
}

struct TableRow {
    spec: String,
    classes: usize,
    rank: usize,
    dim_l: usize,
    methods_agree: bool,
    oracle_ran: bool,
}

fn table_row(spec: &str, cfg: &Config) -> Result<TableRow> {
    let ring = load(spec, cfg)?;
    let mut descs = Vec::new();
    let mut oracle_ran = false;
    if !cfg.skip_oracle {
        match units::units_oracle(&ring, &cfg.guards) {
            Ok(d) => {
                descs.push(d);
                oracle_ran = true;
            }
            Err(Error::Guard(_)) => {}
            Err(e) => return Err(e),
        }
    }
    for m in [Method::Yoshida, Method::Sections, Method::Limit] {
        descs.push(units::compute(&ring, m, &cfg.guards)?);
    }
    let methods_agree = descs.windows(2).all(|w| w[0].same_subspace(&w[1]));
    let (_, kernel) = lab::kernel_l(&ring, &cfg.guards, false)?;
    Ok(TableRow {
        spec: spec.to_string(),
        classes: ring.dim(),
        rank: descs[0].rank,
        dim_l: kernel.dim_l,
        methods_agree,
        oracle_ran,
    })
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let threads = match std::env::var("BURNSIDE_LAB_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("BURNSIDE_LAB_THREADS={v} is not a number")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))
}

pub fn table(family: Family, max_order: usize, cfg: &Config) -> Result<Output> {
    let specs = family_specs(family, max_order);
    let rows: Vec<TableRow> = thread_pool()?.install(|| {
        specs
            .par_iter()
            .map(|spec| table_row(spec, cfg))
            .collect::<Result<Vec<_>>>()
    })?;
    let cols = ["group", "classes", "rank", "dim_L", "methods_agree"]
        .map(s)
        .to_vec();
    let mut csv = vec![cols];
    for r in &rows {
        csv.push(vec![
            s(&r.spec),
            s(r.classes),
            s(r.rank),
            s(r.dim_l),
            s(r.methods_agree),
        ]);
    }
    let ok = rows
        .iter()
        .all(|r| r.methods_agree && r.classes == r.dim_l + r.rank);
    let json = json!({
        "family": format!("{family:?}").to_lowercase(),
        "max_order": max_order,
        "rows": rows.iter().map(|r| json!({
            "group": r.spec,
            "classes": r.classes,
            "rank": r.rank,
            "dim_L": r.dim_l,
            "methods_agree": r.methods_agree,
            "oracle": r.oracle_ran,
        })).collect::<Vec<_>>(),
    });
    Ok(Output {
        json,
        plain: align(&csv),
        csv,
        status: status(ok),
    })
}

pub fn factorize(left: &str, right: &str, cfg: &Config) -> Result<Output> {
    let h = load(left, cfg)?;
    let g = load(right, cfg)?;
    let p = h.group().direct_product(g.group());
    let table = all_subgroups(&p, &cfg.guards)?;
    let mut csv = vec![["x", "order", "p1", "k1", "p2", "k2", "matches"]
        .map(s)
        .to_vec()];
    let mut items = Vec::new();
    let mut all_match = true;
    for (i, x) in table.subgroups().iter().enumerate() {
        let x = SubgroupOfProduct::new(h.group(), g.group(), x.clone())?;
        let direct = transitive_biset(&h, &g, &x);
        let matches = factor_biset(&h, &g, &x, &cfg.guards)?.product()?.entries == direct.entries;
        all_match &= matches;
        let orders = [x.p1.order(), x.k1.order(), x.p2.order(), x.k2.order()];
        csv.push(vec![
            s(i),
            s(x.x.order()),
            s(orders[0]),
            s(orders[1]),
            s(orders[2]),
            s(orders[3]),
            s(matches),
        ]);
        let mut item = json!({
            "x": i,
            "order": x.x.order(),
            "p1": orders[0], "k1": orders[1], "p2": orders[2], "k2": orders[3],
            "matches": matches,
        });
        if cfg.witnesses {
            item["matrix"] = json!(direct.entries);
        }
        items.push(item);
    }
    let mut plain = format!(
        "(H x G)/X for H = {left}, G = {right}: {} subgroups X\n",
        table.len()
    );
    plain.push_str(&align(&csv));
    plain.push_str(&format!("all factorizations match: {all_match}\n"));
    let json = json!({
        "group": format!("{left} x {right}"),
        "order": p.order(),
        "classes": [h.class_names(), g.class_names()],
        "result": { "subgroups": items, "all_match": all_match },
    });
    Ok(Output {
        json,
        plain,
        csv,
        status: status(all_match),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sweeps() {
        assert_eq!(family_specs(Family::Dihedral, 32), ["D8", "D16", "D32"]);
        assert_eq!(family_specs(Family::Semidihedral, 32), ["SD16", "SD32"]);
        assert_eq!(
            family_specs(Family::Elementary, 8),
            ["C2^1", "C2^2", "C2^3"]
        );
        assert_eq!(family_specs(Family::Cyclic, 3), ["C1", "C2", "C3"]);
        assert!(family_specs(Family::Quaternion, 7).is_empty());
    }
}
