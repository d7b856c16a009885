//! The `analyze` subcommand: derived structures of one algebra as text or
//! JSON.

use std::io::Write;

use hilbert_core::lattice::FiniteLattice;
use hilbert_core::multipliers::{alpha, beta, delta, eps, iota};
use hilbert_core::{
    adjoint_semilattice, all_ce, all_filters, is_monomial, minimal_brouwerian_extension, multipliers,
    principal_filter, AlgebraFile, ElementSubset, EndoMap, HilbertAlgebra,
};
use serde_json::{json, Value};

use crate::{AnalyzeArgs, Failure};

struct Section {
    key: &'static str,
    text: String,
    json: Value,
}

fn set(file: &AlgebraFile, s: ElementSubset) -> String {
    let parts: Vec<String> = s.iter().map(|x| file.label(x)).collect();
    format!("{{{}}}", parts.join(","))
}

fn set_json(file: &AlgebraFile, s: ElementSubset) -> Value {
    json!(s.iter().map(|x| file.label(x)).collect::<Vec<_>>())
}

fn map_json(file: &AlgebraFile, f: &EndoMap) -> Value {
    json!(f.images().iter().map(|&x| file.label(x)).collect::<Vec<_>>())
}

fn covers_text(l: &FiniteLattice) -> String {
    let parts: Vec<String> = l.covers().iter().map(|(a, b)| format!("#{a} < #{b}")).collect();
    format!("  covers: {}\n", if parts.is_empty() { "none".to_string() } else { parts.join(", ") })
}

fn summary(file: &AlgebraFile, alg: &HilbertAlgebra) -> Section {
    let class = alg.classify();
    let labels: Vec<String> = alg.elements().map(|x| file.label(x)).collect();
    let (nf, nm, nce) = (all_filters(alg).len(), multipliers(alg).len(), hilbert_core::closure_endomorphisms(alg).len());
    let mut text = format!("algebra: {} element(s), unit {}\n", alg.len(), file.label(alg.one()));
    text.push_str(&format!("labels: {}\n", labels.join(" ")));
    text.push_str(&format!(
        "implication algebra: {}\nimplicative semilattice: {}\n",
        class.implication_algebra, class.implicative_semilattice
    ));
    text.push_str(&format!("filters: {nf}  multipliers: {nm}  closure endomorphisms: {nce}\n"));
    let json = json!({
        "size": alg.len(),
        "one": file.label(alg.one()),
        "labels": labels,
        "implication_algebra": class.implication_algebra,
        "implicative_semilattice": class.implicative_semilattice,
        "filters": nf,
        "multipliers": nm,
        "closure_endomorphisms": nce,
    });
    Section { key: "summary", text, json }
}

fn filters(file: &AlgebraFile, alg: &HilbertAlgebra) -> Section {
    let fl = all_filters(alg);
    let mut text = format!("\nfilters ({}):\n", fl.len());
    let mut items = Vec::new();
    for (i, &j) in fl.filters().iter().enumerate() {
        let principal = alg.elements().find(|&p| principal_filter(alg, p) == j);
        let mono = is_monomial(alg, j);
        text.push_str(&format!(
            "  #{i} {}  monomial={}  principal={}\n",
            set(file, j),
            mono,
            principal.map_or("-".to_string(), |p| file.label(p))
        ));
        items.push(json!({
            "filter": set_json(file, j),
            "monomial": mono,
            "principal": principal.map(|p| file.label(p)),
        }));
    }
    text.push_str(&covers_text(fl.lattice()));
    let json = json!({ "filters": items, "covers": fl.lattice().covers() });
    Section { key: "filters", text, json }
}

fn names_of(alg: &HilbertAlgebra, file: &AlgebraFile, f: &EndoMap) -> Vec<String> {
    let mut names = Vec::new();
    if *f == eps(alg) {
        names.push("eps".to_string());
    }
    if *f == iota(alg) {
        names.push("iota".to_string());
    }
    for p in alg.elements() {
        for (name, g) in [("alpha", alpha(alg, p)), ("beta", beta(alg, p)), ("delta", delta(alg, p))] {
            if *f == g {
                names.push(format!("{name}({})", file.label(p)));
            }
        }
    }
    names
}

fn multiplier_section(file: &AlgebraFile, alg: &HilbertAlgebra) -> Section {
    let ms = multipliers(alg);
    let mut text = format!("\nmultipliers ({}):\n", ms.len());
    let mut items = Vec::new();
    for (i, f) in ms.iter().enumerate() {
        let names = names_of(alg, file, f);
        let iso = f.is_isotone(alg);
        text.push_str(&format!(
            "  #{i} {}  isotone={}{}\n",
            f.display_with(|x| file.label(x)),
            iso,
            if names.is_empty() { String::new() } else { format!("  = {}", names.join(" = ")) }
        ));
        items.push(json!({ "map": map_json(file, f), "isotone": iso, "names": names }));
    }
    Section { key: "multipliers", text, json: json!(items) }
}

fn ce_section(file: &AlgebraFile, alg: &HilbertAlgebra) -> Result<Section, Failure> {
    let ce = all_ce(alg)?;
    let mut text = format!("\nclosure endomorphisms ({}):\n", ce.len());
    let mut items = Vec::new();
    for (i, f) in ce.maps().iter().enumerate() {
        let k = hilbert_core::kernel(alg, f);
        let fx = f.fixpoints();
        text.push_str(&format!(
            "  #{i} {}  kernel {}  fixpoints {}\n",
            f.display_with(|x| file.label(x)),
            set(file, k),
            set(file, fx)
        ));
        items.push(json!({
            "map": map_json(file, f),
            "kernel": set_json(file, k),
            "fixpoints": set_json(file, fx),
        }));
    }
    text.push_str(&covers_text(ce.lattice()));
    let json = json!({ "maps": items, "covers": ce.lattice().covers() });
    Ok(Section { key: "ce", text, json })
}

fn adjoint_section(file: &AlgebraFile, alg: &HilbertAlgebra) -> Result<Section, Failure> {
    let adj = adjoint_semilattice(alg)?;
    let m = adj.len();
    let mut text = format!("\nadjoint semilattice ({m}):\n");
    let mut items = Vec::new();
    for (i, f) in adj.maps().iter().enumerate() {
        let k = hilbert_core::kernel(alg, f);
        text.push_str(&format!("  #{i} {}  kernel {}\n", f.display_with(|x| file.label(x)), set(file, k)));
        items.push(json!({ "map": map_json(file, f), "kernel": set_json(file, k) }));
    }
    text.push_str("  subtraction (row phi, column psi: psi - phi):\n");
    let mut table = Vec::new();
    for i in 0..m {
        let row: Vec<usize> = (0..m).map(|j| adj.subtract(i, j)).collect();
        let cells: Vec<String> = row.iter().map(|k| format!("#{k}")).collect();
        text.push_str(&format!("    #{i}: {}\n", cells.join(" ")));
        table.push(row);
    }
    let json = json!({ "maps": items, "subtraction": table });
    Ok(Section { key: "adjoint", text, json })
}

fn extension_section(file: &AlgebraFile, alg: &HilbertAlgebra) -> Result<Section, Failure> {
    let ext = minimal_brouwerian_extension(alg)?;
    let n = ext.len();
    let mut text = format!("\nminimal Brouwerian extension ({n}):\n");
    let mut items = Vec::new();
    for (i, &j) in ext.filters().iter().enumerate() {
        let image: Vec<String> = alg.elements().filter(|&p| ext.embedding()[p] == i).map(|p| file.label(p)).collect();
        text.push_str(&format!(
            "  #{i} {}{}\n",
            set(file, j),
            if image.is_empty() { String::new() } else { format!("  = [{})", image.join(")=[")) }
        ));
        items.push(json!({ "filter": set_json(file, j), "image_of": image }));
    }
    text.push_str("  implication:\n");
    let mut table = Vec::new();
    for i in 0..n {
        let row: Vec<usize> = (0..n).map(|j| ext.imp(i, j)).collect();
        let cells: Vec<String> = row.iter().map(|k| format!("#{k}")).collect();
        text.push_str(&format!("    #{i}: {}\n", cells.join(" ")));
        table.push(row);
    }
    let json = json!({ "elements": items, "one": ext.one(), "implication": table });
    Ok(Section { key: "extension", text, json })
}

pub fn run(args: &AnalyzeArgs, file: &AlgebraFile, alg: &HilbertAlgebra, out: &mut impl Write) -> Result<(), Failure> {
    let mut sections = vec![summary(file, alg)];
    if args.filters {
        sections.push(filters(file, alg));
    }
    if args.multipliers {
        sections.push(multiplier_section(file, alg));
    }
    if args.ce {
        sections.push(ce_section(file, alg)?);
    }
    if args.adjoint {
        sections.push(adjoint_section(file, alg)?);
    }
    if args.extension {
        sections.push(extension_section(file, alg)?);
    }
    if args.json {
        let mut obj = serde_json::Map::new();
        for s in sections {
            obj.insert(s.key.to_string(), s.json);
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable"))?;
    } else {
        for s in sections {
            write!(out, "{}", s.text)?;
        }
    }
    Ok(())
}
