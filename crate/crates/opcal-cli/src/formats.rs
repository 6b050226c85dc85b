//! On-disk JSON formats and their validated conversion into core objects.
//!
//! Algebra file (associative flavor):
//! ```json
//! {"dimension": 2, "basis": ["e","x"],
//!  "product": {"e,e": {"e": "1"}, "e,x": {"x": "1"}, "x,e": {"x": "1"}}}
//! ```
//! Absent product entries mean zero. Dendriform files replace `product`
//! with two tables `left` (`≺`) and `right` (`≻`); Hom files add an
//! `alpha` matrix to the associative form. Operator files are
//! `{"matrix": [["p/q", …], …]}` acting on coordinate columns in the
//! file's basis order. Generic elements serialize as
//! `{"arity": n, "coefficients": ["p/q", …]}` in the crate-wide flatten
//! order (for the Hom flavor, coefficients of the full tensor; membership
//! is enforced on parse).

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use opcal_core::dendriform::{
    build_dendriform_operad, colored_from_element, dendriform_pair_element, ColoredMultiMap,
};
use opcal_core::endo::{build_endomorphism_operad, element_from_multimap, multimap_from_element};
use opcal_core::hom::{build_hom_operad, hom_element_from_full, hom_element_to_full};
use opcal_core::multimap::{AlgebraSpec, MultiMap};
use opcal_core::operad::{Element, Operad};
use opcal_core::rational::{format_rat, parse_rat, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Flavor {
    Associative,
    Dendriform,
    Hom,
}

type ProductTable = BTreeMap<String, BTreeMap<String, String>>;

#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dimension: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub product: ProductTable,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<ProductTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<ProductTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OperatorFile {
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ElementFile {
    pub arity: usize,
    pub coefficients: Vec<String>,
}

/// A built instance with its candidate multiplication element and the
/// ingredients needed to interpret further files.
pub struct Inputs {
    pub flavor: Flavor,
    pub operad: Arc<Operad>,
    pub candidate: Element,
    pub spec: AlgebraSpec,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn rat_from(path: &Path, s: &str) -> Result<Rat> {
    parse_rat(s).with_context(|| format!("in {}", path.display()))
}

fn spec_from_file(path: &Path, file: &AlgebraFile) -> Result<AlgebraSpec> {
    if file.basis.len() != file.dimension {
        bail!(
            "{}: dimension {} does not match {} basis labels",
            path.display(),
            file.dimension,
            file.basis.len()
        );
    }
    AlgebraSpec::new(file.basis.clone()).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

fn fill_table(path: &Path, spec: &mut AlgebraSpec, table: &ProductTable) -> Result<()> {
    for (pair, values) in table {
        let Some((l1, l2)) = pair.split_once(',') else {
            bail!("{}: product key {pair:?} is not \"l1,l2\"", path.display());
        };
        for (l3, coeff) in values {
            let c = rat_from(path, coeff)?;
            spec.add_product_term_by_label(l1.trim(), l2.trim(), l3.trim(), c)
                .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
        }
    }
    Ok(())
}

fn table_to_multimap(path: &Path, spec: &AlgebraSpec, table: &ProductTable) -> Result<MultiMap> {
    let mut scratch = AlgebraSpec::new(spec.basis().to_vec())
        .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
    fill_table(path, &mut scratch, table)?;
    Ok(scratch.product_map())
}

fn alpha_from_file(path: &Path, file: &AlgebraFile) -> Result<MultiMap> {
    let Some(rows) = &file.alpha else {
        bail!(
            "{}: hom flavor requires an \"alpha\" matrix",
            path.display()
        );
    };
    let d = file.dimension;
    if rows.len() != d || rows.iter().any(|r| r.len() != d) {
        bail!("{}: alpha must be a {d}x{d} matrix", path.display());
    }
    let parsed: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|s| rat_from(path, s)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    MultiMap::from_matrix(d, &parsed).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

/// How deep the Hom instance must carry subspace bases: enough for the
/// brackets and cohomology degrees the CLI can request.
pub const HOM_ARITY_CAP: usize = 8;

/// Parses the algebra/structure file for the given flavor and builds the
/// instance plus the candidate multiplication element.
pub fn parse_inputs(path: &Path, flavor: Flavor) -> Result<Inputs> {
    let file: AlgebraFile = read_json(path)?;
    let mut spec = spec_from_file(path, &file)?;
    match flavor {
        Flavor::Associative => {
            fill_table(path, &mut spec, &file.product)?;
            let (operad, candidate) = build_endomorphism_operad(&spec);
            Ok(Inputs {
                flavor,
                operad,
                candidate,
                spec,
            })
        }
        Flavor::Dendriform => {
            let (Some(left), Some(right)) = (&file.left, &file.right) else {
                bail!(
                    "{}: dendriform flavor requires \"left\" and \"right\" tables",
                    path.display()
                );
            };
            let prec = table_to_multimap(path, &spec, left)?;
            let succ = table_to_multimap(path, &spec, right)?;
            let operad = build_dendriform_operad(spec.dimension());
            let candidate = dendriform_pair_element(&operad, &prec, &succ)
                .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
            Ok(Inputs {
                flavor,
                operad,
                candidate,
                spec,
            })
        }
        Flavor::Hom => {
            fill_table(path, &mut spec, &file.product)?;
            let alpha = alpha_from_file(path, &file)?;
            let operad = build_hom_operad(&alpha, HOM_ARITY_CAP)
                .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
            let candidate = hom_element_from_full(&operad, &spec.product_map())
                .map_err(|e| anyhow::anyhow!("{}: candidate product: {e}", path.display()))?;
            Ok(Inputs {
                flavor,
                operad,
                candidate,
                spec,
            })
        }
    }
}

/// Parses an arity-1 operator matrix into an element of the instance.
pub fn parse_operator(path: &Path, inputs: &Inputs) -> Result<Element> {
    let file: OperatorFile = read_json(path)?;
    parse_operator_from(file, path, inputs)
}

/// Interprets public-basis coefficients as an instance element. For the
/// Hom flavor the coefficients describe the full tensor, which must pass
/// the membership check.
fn element_for_instance(
    path: &Path,
    inputs: &Inputs,
    coeffs: &[Rat],
    arity: usize,
) -> Result<Element> {
    match inputs.flavor {
        Flavor::Associative => {
            let d = inputs.spec.dimension();
            let mm = MultiMap::new(arity, d, coeffs.to_vec())
                .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
            element_from_multimap(&inputs.operad, &mm)
                .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
        }
        Flavor::Dendriform => {
            let d = inputs.spec.dimension();
            let cm = ColoredMultiMap::new(arity, d, coeffs.to_vec())
                .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
            opcal_core::dendriform::element_from_colored(&inputs.operad, &cm)
                .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
        }
        Flavor::Hom => {
            let d = inputs.spec.dimension();
            let mm = MultiMap::new(arity, d, coeffs.to_vec())
                .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
            hom_element_from_full(&inputs.operad, &mm)
                .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
        }
    }
}

/// Parses an element file — either a generic coefficient vector or an
/// arity-1 operator matrix.
pub fn parse_element(path: &Path, inputs: &Inputs) -> Result<Element> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if let Ok(file) = serde_json::from_str::<OperatorFile>(&text) {
        return parse_operator_from(file, path, inputs);
    }
    let file: ElementFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let coeffs: Vec<Rat> = file
        .coefficients
        .iter()
        .map(|s| rat_from(path, s))
        .collect::<Result<_>>()?;
    element_for_instance(path, inputs, &coeffs, file.arity)
}

fn parse_operator_from(file: OperatorFile, path: &Path, inputs: &Inputs) -> Result<Element> {
    let d = inputs.spec.dimension();
    if file.matrix.len() != d || file.matrix.iter().any(|r| r.len() != d) {
        bail!("{}: operator must be a {d}x{d} matrix", path.display());
    }
    let rows: Vec<Vec<Rat>> = file
        .matrix
        .iter()
        .map(|r| r.iter().map(|s| rat_from(path, s)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mm =
        MultiMap::from_matrix(d, &rows).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
    element_for_instance(path, inputs, &mm.flatten(), 1)
}

/// Public-basis coefficients of an element (full tensor for Hom).
pub fn public_coefficients(inputs: &Inputs, el: &Element) -> Result<Vec<Rat>> {
    match inputs.flavor {
        Flavor::Associative => Ok(multimap_from_element(el)?.flatten()),
        Flavor::Dendriform => Ok(colored_from_element(el)?.coeffs().to_vec()),
        Flavor::Hom => Ok(hom_element_to_full(el)?.flatten()),
    }
}

/// Serializes an element in the re-parseable file format.
pub fn element_to_file(inputs: &Inputs, el: &Element) -> Result<ElementFile> {
    Ok(ElementFile {
        arity: el.arity(),
        coefficients: public_coefficients(inputs, el)?
            .iter()
            .map(format_rat)
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use opcal_core::rng::SeededRng;
    use std::io::Write;

    fn fixture(dir: &std::path::Path, name: &str, contents: &str) -> std::path::PathBuf {
        let path = dir.join(name);
        let mut f = std::fs::File::create(&path).unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        path
    }

    #[test]
    fn element_round_trip_all_flavors() {
        let dir = tempfile::tempdir().unwrap();
        let assoc = fixture(
            dir.path(),
            "a.json",
            r#"{"dimension": 2, "basis": ["e","x"],
                "product": {"e,e": {"e": "1"}, "e,x": {"x": "1"}, "x,e": {"x": "1"}}}"#,
        );
        let dend = fixture(
            dir.path(),
            "d.json",
            r#"{"dimension": 2, "basis": ["e","x"],
                "left": {"e,e": {"x": "1"}}, "right": {"e,e": {"x": "1"}}}"#,
        );
        let hom = fixture(
            dir.path(),
            "h.json",
            r#"{"dimension": 2, "basis": ["e","x"],
                "product": {"e,e": {"e": "1"}},
                "alpha": [["1","0"],["0","0"]]}"#,
        );
        let mut rng = SeededRng::named(7, "cli-roundtrip");
        for (path, flavor) in [
            (&assoc, Flavor::Associative),
            (&dend, Flavor::Dendriform),
            (&hom, Flavor::Hom),
        ] {
            let inputs = parse_inputs(path, flavor).unwrap();
            for arity in 1..=3usize {
                let el = rng.element(&inputs.operad, arity).unwrap();
                let file = element_to_file(&inputs, &el).unwrap();
                let path = dir.path().join("el.json");
                std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
                let back = parse_element(&path, &inputs).unwrap();
                assert_eq!(back, el, "round trip must be exact for {flavor:?}");
            }
            // The candidate multiplication itself round-trips too.
            let file = element_to_file(&inputs, &inputs.candidate).unwrap();
            let path = dir.path().join("pi.json");
            std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
            assert_eq!(parse_element(&path, &inputs).unwrap(), inputs.candidate);
        }
    }
}
