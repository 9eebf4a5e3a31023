use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use super::{Failure, EXIT_NEGATIVE, EXIT_OK};
use crate::arrangement::{braid_arrangement, intersection_poset, Arrangement, IntersectionPoset};
use crate::format::{parse_arrangement, serialize_arrangement};
use crate::lattice::{betti_numbers_of, char_poly_of, fiber_type_of, mobius};
use crate::surgery::{
    assembly_from_betti, braid_extension, k_theory_metadata, spf_pure_braid, surgery_fiber_type,
    surgery_pure_braid, SurgeryTable,
};
use crate::topology::{gm_wedge_detailed, suspension_wedge, WedgeDecomposition};

pub struct Report {
    pub result: Value,
    pub text: String,
    pub warnings: Vec<String>,
    pub exit: i32,
    /// Diagnostic for a negative result, printed on the error stream.
    pub failure: Option<String>,
}

impl Report {
    fn ok(result: Value, text: String) -> Self {
        Report {
            result,
            text,
            warnings: Vec::new(),
            exit: EXIT_OK,
            failure: None,
        }
    }
}

type Reader<'a> = dyn FnMut(&PathBuf) -> Result<String, Failure> + 'a;

fn load(read: &mut Reader<'_>, file: &PathBuf) -> Result<Arrangement, Failure> {
    let text = read(file)?;
    parse_arrangement(&text).map_err(|e| Failure::Input(format!("{}: {e}", display(file))))
}

fn display(p: &Path) -> String {
    if p.as_os_str() == "-" {
        "<stdin>".into()
    } else {
        p.display().to_string()
    }
}

fn hyperplane_name(a: &Arrangement, i: usize) -> String {
    a.label(i).map_or_else(|| format!("h{i}"), str::to_string)
}

fn flat_names(a: &Arrangement, p: &IntersectionPoset, id: usize) -> Vec<String> {
    p.flats()[id].hyperplanes.iter().map(|i| hyperplane_name(a, i)).collect()
}

fn multiset(w: &WedgeDecomposition) -> String {
    let dims: Vec<String> = w.sphere_dims.iter().map(ToString::to_string).collect();
    format!("{{{}}}", dims.join(", "))
}

fn wedge_text(w: &WedgeDecomposition) -> String {
    if w.is_empty() {
        return "point".into();
    }
    w.histogram()
        .iter()
        .map(|(d, k)| if *k == 1 { format!("S^{d}") } else { format!("{k} x S^{d}") })
        .collect::<Vec<_>>()
        .join(" v ")
}

pub fn lattice(read: &mut Reader<'_>, file: &PathBuf) -> Result<Report, Failure> {
    let a = load(read, file)?;
    let p = intersection_poset(&a);
    let mu = mobius(&p);
    let mut text = format!(
        "{} flats, rank {}, {} hyperplanes in C^{}\n",
        p.len(),
        p.rank(),
        a.len(),
        a.ambient_dim()
    );
    let mut layers = Vec::new();
    for (codim, layer) in p.layers().iter().enumerate() {
        let _ = writeln!(text, "codim {codim}:");
        let mut flats = Vec::new();
        for &id in layer {
            let names = flat_names(&a, &p, id);
            let _ = writeln!(text, "  F{id}  mu = {}  [{}]", mu.get(id), names.join(", "));
            flats.push(json!({
                "id": id,
                "codim": codim,
                "mobius": mu.get(id),
                "hyperplanes": p.flats()[id].hyperplanes.iter().collect::<Vec<_>>(),
            }));
        }
        layers.push(json!({ "codim": codim, "flats": flats }));
    }
    let result = json!({
        "ambient_dim": a.ambient_dim(),
        "hyperplanes": a.len(),
        "flat_count": p.len(),
        "rank": p.rank(),
        "central": p.is_central(),
        "layers": layers,
    });
    Ok(Report::ok(result, text))
}

pub fn charpoly(read: &mut Reader<'_>, file: &PathBuf) -> Result<Report, Failure> {
    let a = load(read, file)?;
    let chi = char_poly_of(&intersection_poset(&a));
    let roots = chi.integer_roots();
    let splits = chi.splits_over_integers();
    let mut text = format!("{chi}\n");
    if splits {
        let mut factors: Vec<String> = Vec::new();
        for group in roots.chunk_by(|a, b| a == b) {
            let base = match group[0] {
                0 => "t".to_string(),
                r if r > 0 => format!("(t - {r})"),
                r => format!("(t + {})", -r),
            };
            factors.push(match group.len() {
                1 => base,
                k => format!("{base}^{k}"),
            });
        }
        if factors.is_empty() {
            factors.push("1".into());
        }
        let _ = writeln!(text, "= {}", factors.join(""));
    } else {
        let _ = writeln!(text, "does not split into integer linear factors");
    }
    let result = json!({
        "coefficients": chi.coeffs(),
        "polynomial": chi.to_string(),
        "integer_roots": roots,
        "splits_over_integers": splits,
    });
    Ok(Report::ok(result, text))
}

pub fn betti(read: &mut Reader<'_>, file: &PathBuf) -> Result<Report, Failure> {
    let a = load(read, file)?;
    let b = betti_numbers_of(&intersection_poset(&a));
    let text = format!(
        "{}\n",
        b.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    );
    Ok(Report::ok(json!({ "betti": b, "total": b.iter().sum::<u64>() }), text))
}

pub fn fibertype(read: &mut Reader<'_>, file: &PathBuf) -> Result<Report, Failure> {
    let a = load(read, file)?;
    let p = intersection_poset(&a);
    match fiber_type_of(&p) {
        Some(tower) => {
            let ranks: Vec<String> = tower.fiber_ranks.iter().map(ToString::to_string).collect();
            let chain: Vec<String> = tower.chain.iter().map(|id| format!("F{id}")).collect();
            let mut text = String::from("fiber-type\n");
            if ranks.is_empty() {
                let _ = writeln!(text, "ranks (none)");
            } else {
                let _ = writeln!(text, "ranks {}", ranks.join(" "));
            }
            if !chain.is_empty() {
                let _ = writeln!(text, "chain {}", chain.join(" < "));
            }
            let mut report = Report::ok(
                json!({
                    "fiber_type": true,
                    "tower": {
                        "chain": tower.chain,
                        "fiber_ranks": tower.fiber_ranks,
                        "affine": tower.affine,
                    },
                }),
                text,
            );
            if tower.affine {
                report.warnings.push(
                    "affine arrangement: the modular-chain criterion is classical only for central arrangements"
                        .into(),
                );
            }
            Ok(report)
        }
        None => Ok(Report {
            result: json!({ "fiber_type": false, "tower": null }),
            text: "not fiber-type\n".into(),
            warnings: Vec::new(),
            exit: EXIT_NEGATIVE,
            failure: None,
        }),
    }
}

pub fn suspension(read: &mut Reader<'_>, file: &PathBuf, full_poset: bool) -> Result<Report, Failure> {
    let a = load(read, file)?;
    let basic = suspension_wedge(&a);
    let mut text = format!("suspension ~ {}\n", wedge_text(&basic));
    let mut result = json!({
        "hyperplane_wedge": { "sphere_dims": basic.sphere_dims },
    });
    let mut warnings = Vec::new();
    if full_poset {
        let p = intersection_poset(&a);
        let (gm, contributions) = gm_wedge_detailed(&p);
        let betti = betti_numbers_of(&p);
        let agrees_with_betti = (1..betti.len()).all(|k| gm.count(k + 1) as u64 == betti[k]);
        let _ = writeln!(text, "full poset: {}  {}", wedge_text(&gm), multiset(&gm));
        for c in &contributions {
            let spheres: Vec<String> = c.spheres.iter().map(|d| format!("S^{d}")).collect();
            let _ = writeln!(
                text,
                "  F{}  codim {}  ambient S^{}  |chains| {}  -> {}",
                c.flat,
                c.codim,
                c.ambient_sphere,
                c.order_complex_simplices,
                if spheres.is_empty() { "nothing".into() } else { spheres.join(" ") }
            );
        }
        let diverges = gm.sphere_dims != basic.sphere_dims;
        if diverges {
            warnings.push(format!(
                "divergence: full-poset evaluation {} differs from the hyperplane-only wedge {}",
                multiset(&gm),
                multiset(&basic)
            ));
        }
        for t in &gm.torsion {
            warnings.push(format!(
                "torsion: Z_{} in degree {} of the cohomology below F{} contributes a Moore space",
                t.order, t.cohomology_degree, t.flat
            ));
        }
        if !agrees_with_betti {
            warnings.push("full-poset sphere counts disagree with the Betti numbers".into());
        }
        result["full_poset"] = json!({
            "sphere_dims": gm.sphere_dims,
            "torsion": gm.torsion,
            "contributions": contributions,
            "diverges": diverges,
            "agrees_with_betti": agrees_with_betti,
        });
    }
    Ok(Report {
        result,
        text,
        warnings,
        exit: EXIT_OK,
        failure: None,
    })
}

fn table_json(t: &SurgeryTable) -> Value {
    json!({
        "rows": t.rows().iter().enumerate().map(|(r, g)| json!({
            "residue": r,
            "group": g.to_string(),
            "free_rank": g.free_rank(),
            "torsion": g.torsion(),
        })).collect::<Vec<_>>(),
        "hyperplanes": t.hyperplanes,
        "provenance": t.provenance.to_string(),
    })
}

pub fn lgroups(read: &mut Reader<'_>, file: &PathBuf, force_n: Option<u64>) -> Result<Report, Failure> {
    let a = load(read, file)?;
    let p = intersection_poset(&a);
    let fibered = fiber_type_of(&p).is_some();
    let mut warnings = Vec::new();
    let n = match (fibered, force_n) {
        (true, None) => a.len() as u64,
        (true, Some(n)) => {
            if n != a.len() as u64 {
                warnings.push(format!("--force-N {n} overrides the hyperplane count {}", a.len()));
            }
            n
        }
        (false, Some(n)) => {
            warnings.push(format!("input is not fiber-type; table evaluated at the supplied N = {n}"));
            n
        }
        (false, None) => {
            return Ok(Report {
                result: json!({ "fiber_type": false, "table": null }),
                text: String::new(),
                warnings,
                exit: EXIT_NEGATIVE,
                failure: Some("not fiber-type; the surgery table needs a fiber-type arrangement (override with --force-N)".into()),
            });
        }
    };
    let table = surgery_fiber_type(n).map_err(|e| Failure::Input(e.to_string()))?;
    let mut text = table.to_string();

    let betti = betti_numbers_of(&p);
    let mut cross = Vec::new();
    for r in 0..4i64 {
        let value = assembly_from_betti(&betti, r).map_err(|e| Failure::Input(e.to_string()))?;
        let agrees = value == *table.get(r);
        if !agrees {
            warnings.push(format!(
                "cross-check: Betti-number evaluation gives {value} at i ≡ {r} mod 4, table gives {}",
                table.get(r)
            ));
        }
        cross.push(json!({ "residue": r, "group": value.to_string(), "agrees": agrees }));
    }
    let _ = writeln!(
        text,
        "cross-check (Betti {}): {}",
        betti.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
        if cross.iter().all(|c| c["agrees"] == true) { "agrees" } else { "differs" }
    );
    Ok(Report {
        result: json!({
            "fiber_type": fibered,
            "table": table_json(&table),
            "cross_check": { "betti": betti, "rows": cross },
        }),
        text,
        warnings,
        exit: EXIT_OK,
        failure: None,
    })
}

pub fn braid(n: usize) -> Result<Report, Failure> {
    let a = braid_arrangement(n).map_err(|e| Failure::Input(e.to_string()))?;
    let mut text = format!("# braid arrangement, n = {n}\n");
    text.push_str(&serialize_arrangement(&a));
    Ok(Report::ok(
        json!({ "hyperplanes": a.len(), "ambient_dim": a.ambient_dim(), "file": serialize_arrangement(&a) }),
        text,
    ))
}

pub fn surgery_pb(n: u64) -> Result<Report, Failure> {
    let table = surgery_pure_braid(n).map_err(|e| Failure::Input(e.to_string()))?;
    let ext = braid_extension(n).map_err(|e| Failure::Input(e.to_string()))?;
    let text = format!("L_i(PB_{n}), N = {}\n{table}", table.hyperplanes);
    Ok(Report::ok(
        json!({
            "table": table_json(&table),
            "extension": ext,
            "k_theory": k_theory_metadata(),
        }),
        text,
    ))
}

pub fn spf_pb(n: u64) -> Result<Report, Failure> {
    let cert = spf_pure_braid(n).map_err(|e| Failure::Input(e.to_string()))?;
    let ranks: Vec<String> = cert.quotient_ranks.iter().map(ToString::to_string).collect();
    let text = format!(
        "PB_{n}: free quotient ranks {}  (rank <= {}, total {})\n",
        ranks.join(" "),
        cert.rank_bound,
        cert.total_rank()
    );
    Ok(Report::ok(json!(cert), text))
}
