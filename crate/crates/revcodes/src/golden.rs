//! Golden-data verification harness.
//!
//! Every reference construction and identity lives in `data/golden.json`
//! (checksummed, so transcriptions are auditable in one place). Each section
//! recomputes its facts from scratch and reports one pass/fail record per
//! asserted fact; `run_all` walks every section in a fixed order.

use std::collections::{HashMap, HashSet};
use std::fmt::Display;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::dna::{
    is_dna_m_quasi_reciprocal, reversible_complement_dna_code, reversible_dna_code, DnaBasis,
    DnaWord, MapCode, DEFAULT_ENUMERATION_CAP,
};
use crate::error::GoldenError;
use crate::field::{dlog, enumerate_primitive_elements, Felt, Field, FieldRef};
use crate::lincode::{griesmer_check, mds_class, LinearCode};
use crate::wordops::{build_generating_set, Codeword, SetVariant};

const GOLDEN_JSON: &str = include_str!("../data/golden.json");
const GOLDEN_SHA256: &str = "fd9b0c529ea73276f9b6be8d05aa88c07becc9f22c58d4be64086fe36abb4ee6";

/// Section ids accepted by [`run_section`], in `run_all` order.
pub const SECTION_IDS: &[&str] = &[
    "3.5", "4.2", "4.4", "4.6", "4.11", "4.12", "4.14", "table1", "table2",
];

/// One recomputed assertion.
#[derive(Debug, Clone, Serialize)]
pub struct Fact {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Fact {
    fn eq(
        id: impl Into<String>,
        desc: impl Into<String>,
        expected: impl Display,
        actual: impl Display,
    ) -> Fact {
        let expected = expected.to_string();
        let actual = actual.to_string();
        Fact {
            id: id.into(),
            description: desc.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    fn is_true(id: impl Into<String>, desc: impl Into<String>, cond: bool) -> Fact {
        Fact {
            id: id.into(),
            description: desc.into(),
            expected: "true".into(),
            actual: cond.to_string(),
            pass: cond,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SectionReport {
    pub name: String,
    pub facts: Vec<Fact>,
}

impl SectionReport {
    pub fn all_pass(&self) -> bool {
        self.facts.iter().all(|f| f.pass)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FullReport {
    pub sections: Vec<SectionReport>,
}

impl FullReport {
    pub fn all_pass(&self) -> bool {
        self.sections.iter().all(|s| s.all_pass())
    }

    pub fn fact_count(&self) -> usize {
        self.sections.iter().map(|s| s.facts.len()).sum()
    }
}

// ---------------------------------------------------------------------------
// Data file schema
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct GoldenData {
    #[allow(dead_code)]
    version: u32,
    examples: Examples,
    table1: Vec<Table1Row>,
    table2: Vec<String>,
}

#[derive(Deserialize)]
struct Examples {
    #[serde(rename = "3.5")]
    ex35: Ex35,
    #[serde(rename = "4.2")]
    ex42: Ex42,
    #[serde(rename = "4.4")]
    ex44: Ex44,
    #[serde(rename = "4.6")]
    ex46: Ex46,
    #[serde(rename = "4.11")]
    ex411: Ex411,
    #[serde(rename = "4.12")]
    ex412: ExMapCode,
    #[serde(rename = "4.14")]
    ex414: ExMapCode,
}

#[derive(Deserialize)]
struct Ex35 {
    q: usize,
    m: usize,
    coeffs: Vec<String>,
    constructions: Vec<Construction35>,
}

#[derive(Deserialize)]
struct Construction35 {
    t: usize,
    variant: String,
    n: usize,
    k: usize,
    d: u32,
    class: String,
    griesmer: String,
    rows: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct Ex42 {
    q: usize,
    dlogs: Vec<DlogFact>,
    kbase: KbaseFact,
}

#[derive(Deserialize)]
struct DlogFact {
    digits: Vec<u16>,
    e: u32,
}

#[derive(Deserialize)]
struct KbaseFact {
    bases: String,
    digits: Vec<u16>,
}

#[derive(Deserialize)]
struct Ex44 {
    q: usize,
    x: String,
    reverse: String,
    reverse_digits: Vec<u16>,
}

#[derive(Deserialize)]
struct Ex46 {
    k: usize,
    m: usize,
    bases: String,
}

#[derive(Deserialize)]
struct Ex411 {
    q: usize,
    m: usize,
    t: usize,
    variant: String,
    coeffs: Vec<String>,
    n: usize,
    k: usize,
    d: u32,
    rows: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct ExMapCode {
    k: usize,
    m: usize,
    t: usize,
    variant: String,
    bases: String,
    #[serde(default)]
    word_digits: Vec<Vec<u16>>,
    dim4: usize,
    codewords: Vec<NamedWord>,
    #[serde(default)]
    reverse_pairs: Vec<(String, String)>,
    #[serde(default)]
    complement_pairs: Vec<(String, String)>,
}

#[derive(Deserialize)]
struct NamedWord {
    name: String,
    coeffs: Vec<u8>,
    dna: String,
}

#[derive(Deserialize)]
struct Table1Row {
    n: usize,
    q: usize,
    m: usize,
    t: usize,
    variant: String,
    coeffs: Vec<String>,
    k: usize,
    d: u32,
    class: String,
}

fn load() -> Result<&'static GoldenData, GoldenError> {
    static DATA: OnceLock<Result<GoldenData, String>> = OnceLock::new();
    let slot = DATA.get_or_init(|| {
        let digest = hex_digest(GOLDEN_JSON.as_bytes());
        if digest != GOLDEN_SHA256 {
            return Err(format!(
                "golden data checksum mismatch: expected {GOLDEN_SHA256}, found {digest}"
            ));
        }
        serde_json::from_str(GOLDEN_JSON).map_err(|e| e.to_string())
    });
    slot.as_ref().map_err(|e| GoldenError::Data(e.clone()))
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

fn data_err(e: impl Display) -> GoldenError {
    GoldenError::Data(e.to_string())
}

/// Parse a coefficient token with a substituted primitive element: `w` and
/// `w^e` are taken as powers of `omega`, everything else as usual.
fn parse_with_omega(field: &FieldRef, omega: &Felt, token: &str) -> Result<Felt, GoldenError> {
    let t = token.trim();
    if t == "w" {
        return Ok(omega.clone());
    }
    if let Some(e) = t.strip_prefix("w^") {
        let e: i64 = e.parse().map_err(data_err)?;
        return omega.pow(e).map_err(data_err);
    }
    Felt::parse(field, t).map_err(data_err)
}

fn word_with_omega(
    field: &FieldRef,
    omega: &Felt,
    tokens: &[String],
) -> Result<Codeword, GoldenError> {
    let felts = tokens
        .iter()
        .map(|t| parse_with_omega(field, omega, t))
        .collect::<Result<Vec<_>, _>>()?;
    Codeword::from_felts(&felts).map_err(data_err)
}

fn felt_from_digits(field: &FieldRef, digits: &[u16]) -> Felt {
    Felt::new(field, field.undigits(digits))
}

fn dna_word(s: &str) -> Result<DnaWord, GoldenError> {
    let stripped: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    stripped.parse().map_err(data_err)
}

fn token_rows(words: &[Codeword]) -> HashSet<Vec<String>> {
    words.iter().map(|w| w.tokens()).collect()
}

/// GF(4)-combination of the rotation family of a map-code.
fn combine_family(code: &MapCode, coeffs: &[u8]) -> Result<Codeword, GoldenError> {
    let field = code.dna_basis().field();
    let mut acc = Codeword::zero(field, code.len());
    for (&s, g) in coeffs.iter().zip(code.generators()) {
        let term = g.scale(&Felt::new(field, s as u16)).map_err(data_err)?;
        acc = acc.add(&term).map_err(data_err)?;
    }
    Ok(acc)
}

fn map_code_from_golden(
    ex: &ExMapCode,
    complement: bool,
) -> Result<(DnaBasis, Codeword, MapCode), GoldenError> {
    let field = Field::gf4_tower(ex.k).map_err(data_err)?;
    let basis = DnaBasis::new(ex.k, &field).map_err(data_err)?;
    let word = dna_word(&ex.bases)?;
    let c = basis.zeta_bar(&word).map_err(data_err)?;
    let variant: SetVariant = ex.variant.parse().map_err(data_err)?;
    let code = if complement {
        reversible_complement_dna_code(&c, ex.m, ex.t, variant, &basis)
    } else {
        reversible_dna_code(&c, ex.m, ex.t, variant, &basis)
    }
    .map_err(data_err)?;
    Ok((basis, c, code))
}

// ---------------------------------------------------------------------------
// Sections
// ---------------------------------------------------------------------------

/// Run one section of the verification suite by id.
pub fn run_section(id: &str) -> Result<SectionReport, GoldenError> {
    let data = load()?;
    match id {
        "3.5" => section_3_5(data),
        "4.2" => section_4_2(data),
        "4.4" => section_4_4(data),
        "4.6" => section_4_6(data),
        "4.11" => section_4_11(data),
        "4.12" => section_4_12(data),
        "4.14" => section_4_14(data),
        "table1" => section_table1(data),
        "table2" => section_table2(data),
        other => Err(GoldenError::UnknownName(other.to_string())),
    }
}

/// Run every section in the fixed registry order.
pub fn run_all() -> Result<FullReport, GoldenError> {
    let sections = SECTION_IDS
        .iter()
        .map(|id| run_section(id))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FullReport { sections })
}

fn section_3_5(data: &GoldenData) -> Result<SectionReport, GoldenError> {
    let ex = &data.examples.ex35;
    let field = Field::gf(ex.q).map_err(data_err)?;
    let omega = Felt::generator(&field);
    let c = word_with_omega(&field, &omega, &ex.coeffs)?;
    let mut facts = Vec::new();
    facts.push(Fact::is_true(
        "3.5/quasi-reciprocal",
        format!("coefficient vector is {}-quasi-reciprocal", ex.m),
        c.is_m_quasi_reciprocal(ex.m).map_err(data_err)?,
    ));
    for con in &ex.constructions {
        let variant: SetVariant = con.variant.parse().map_err(data_err)?;
        let label = format!("3.5/{}_t{}", con.variant, con.t);
        let gens = build_generating_set(&c, ex.m, con.t, variant).map_err(data_err)?;
        let code = LinearCode::span(&gens).map_err(data_err)?;
        let k = code.dimension();
        let d = code.min_distance().map_err(data_err)?;
        facts.push(Fact::eq(
            format!("{label}/params"),
            "computed [n,k,d]",
            format!("[{},{},{}]", con.n, con.k, con.d),
            format!("[{},{},{}]", code.len(), k, d),
        ));
        facts.push(Fact::eq(
            format!("{label}/class"),
            "MDS classification",
            &con.class,
            mds_class(code.len(), k, d).as_str(),
        ));
        facts.push(Fact::eq(
            format!("{label}/griesmer"),
            "Griesmer bound status",
            &con.griesmer,
            griesmer_check(code.len(), k, d, ex.q)
                .map_err(data_err)?
                .as_str(),
        ));
        facts.push(Fact::is_true(
            format!("{label}/reversible"),
            "code is reversible",
            code.is_reversible(),
        ));
        let golden_rows: HashSet<Vec<String>> = con.rows.iter().cloned().collect();
        facts.push(Fact::is_true(
            format!("{label}/rows"),
            "generator rows match as a set",
            token_rows(&gens) == golden_rows,
        ));
    }
    Ok(SectionReport {
        name: "3.5".into(),
        facts,
    })
}

fn section_4_2(data: &GoldenData) -> Result<SectionReport, GoldenError> {
    let ex = &data.examples.ex42;
    let field = Field::gf(ex.q).map_err(data_err)?;
    let mut facts = Vec::new();
    for (i, df) in ex.dlogs.iter().enumerate() {
        let z = felt_from_digits(&field, &df.digits);
        facts.push(Fact::eq(
            format!("4.2/dlog{}", i + 1),
            format!("discrete log of the element with digits {:?}", df.digits),
            df.e,
            dlog(&z).map_err(data_err)?,
        ));
    }
    let k = ex.kbase.digits.len();
    let basis = DnaBasis::new(k, &field).map_err(data_err)?;
    let image = basis
        .zeta_bar(&dna_word(&ex.kbase.bases)?)
        .map_err(data_err)?;
    facts.push(Fact::eq(
        "4.2/kbase",
        format!("field image of the k-base {}", ex.kbase.bases),
        felt_from_digits(&field, &ex.kbase.digits).to_string(),
        image.get(0).to_string(),
    ));
    Ok(SectionReport {
        name: "4.2".into(),
        facts,
    })
}

fn section_4_4(data: &GoldenData) -> Result<SectionReport, GoldenError> {
    let ex = &data.examples.ex44;
    let field = Field::gf(ex.q).map_err(data_err)?;
    let k = ex.reverse_digits.len();
    let basis = DnaBasis::new(k, &field).map_err(data_err)?;
    let zx = basis.zeta_bar(&dna_word(&ex.x)?).map_err(data_err)?.get(0);
    let zrev = basis
        .zeta_bar(&dna_word(&ex.reverse)?)
        .map_err(data_err)?
        .get(0);
    let facts = vec![
        Fact::eq(
            "4.4/phi",
            format!(
                "phi sends the image of {} to the image of {}",
                ex.x, ex.reverse
            ),
            zrev.to_string(),
            basis.phi(&zx).to_string(),
        ),
        Fact::eq(
            "4.4/digits",
            format!("image of {} by digit vector", ex.reverse),
            felt_from_digits(&field, &ex.reverse_digits).to_string(),
            zrev.to_string(),
        ),
    ];
    Ok(SectionReport {
        name: "4.4".into(),
        facts,
    })
}

fn section_4_6(data: &GoldenData) -> Result<SectionReport, GoldenError> {
    let ex = &data.examples.ex46;
    let word = dna_word(&ex.bases)?;
    let fact = Fact::is_true(
        "4.6/predicate",
        format!(
            "{} is a {}-quasi-reversible tuple of {}-bases",
            ex.bases, ex.m, ex.k
        ),
        is_dna_m_quasi_reciprocal(&word, ex.k, ex.m).map_err(data_err)?,
    );
    Ok(SectionReport {
        name: "4.6".into(),
        facts: vec![fact],
    })
}

fn section_4_11(data: &GoldenData) -> Result<SectionReport, GoldenError> {
    let ex = &data.examples.ex411;
    let field = Field::gf(ex.q).map_err(data_err)?;
    let omega = Felt::generator(&field);
    let c = word_with_omega(&field, &omega, &ex.coeffs)?;
    let variant: SetVariant = ex.variant.parse().map_err(data_err)?;
    let gens = build_generating_set(&c, ex.m, ex.t, variant).map_err(data_err)?;
    let code = LinearCode::span(&gens).map_err(data_err)?;
    let d = code.min_distance().map_err(data_err)?;
    let golden_rows: HashSet<Vec<String>> = ex.rows.iter().cloned().collect();
    let facts = vec![
        Fact::eq(
            "4.11/params",
            "computed [n,k,d]",
            format!("[{},{},{}]", ex.n, ex.k, ex.d),
            format!("[{},{},{}]", code.len(), code.dimension(), d),
        ),
        Fact::is_true(
            "4.11/reversible",
            "code is reversible",
            code.is_reversible(),
        ),
        Fact::is_true(
            "4.11/rows",
            "generator rows match as a set",
            token_rows(&gens) == golden_rows,
        ),
    ];
    Ok(SectionReport {
        name: "4.11".into(),
        facts,
    })
}

fn named_word_facts(
    label: &str,
    ex: &ExMapCode,
    basis: &DnaBasis,
    code: &MapCode,
) -> Result<Vec<Fact>, GoldenError> {
    let mut facts = Vec::new();
    let mut produced: HashMap<String, String> = HashMap::new();
    for nw in &ex.codewords {
        let word = combine_family(code, &nw.coeffs)?;
        let dna = basis.zeta_bar_inv(&word).to_string();
        facts.push(Fact::eq(
            format!("{label}/{}", nw.name),
            format!("DNA image of combination {:?}", nw.coeffs),
            &nw.dna,
            &dna,
        ));
        facts.push(Fact::is_true(
            format!("{label}/{}-member", nw.name),
            format!("{} lies in the code", nw.name),
            code.contains(&word).map_err(data_err)?,
        ));
        produced.insert(nw.name.clone(), dna);
    }
    for (a, b) in &ex.reverse_pairs {
        let reversed: String = produced[a].chars().rev().collect();
        facts.push(Fact::eq(
            format!("{label}/{a}^r={b}"),
            format!("reverse of {a} equals {b}"),
            &produced[b],
            reversed,
        ));
    }
    for (a, b) in &ex.complement_pairs {
        let complemented = dna_word(&produced[a])?.complement().to_string();
        facts.push(Fact::eq(
            format!("{label}/{a}^c={b}"),
            format!("complement of {a} equals {b}"),
            &produced[b],
            complemented,
        ));
    }
    Ok(facts)
}

fn section_4_12(data: &GoldenData) -> Result<SectionReport, GoldenError> {
    let ex = &data.examples.ex412;
    let (basis, c, code) = map_code_from_golden(ex, false)?;
    let mut facts = Vec::new();
    let expected_word: Vec<String> = ex
        .word_digits
        .iter()
        .map(|d| felt_from_digits(basis.field(), d).to_string())
        .collect();
    facts.push(Fact::eq(
        "4.12/image",
        "field image of the base tuple",
        expected_word.join(","),
        c.to_token_string(),
    ));
    facts.push(Fact::eq(
        "4.12/dim4",
        "GF(4)-dimension",
        ex.dim4,
        code.dim4(),
    ));
    facts.extend(named_word_facts("4.12", ex, &basis, &code)?);
    let words: HashSet<DnaWord> = code
        .dna_words(DEFAULT_ENUMERATION_CAP)
        .map_err(data_err)?
        .into_iter()
        .collect();
    facts.push(Fact::eq(
        "4.12/size",
        "number of codewords",
        1usize << (2 * ex.dim4),
        words.len(),
    ));
    facts.push(Fact::is_true(
        "4.12/reverse-closed",
        "DNA word set is closed under reversal",
        words.iter().all(|w| words.contains(&w.reverse())),
    ));
    Ok(SectionReport {
        name: "4.12".into(),
        facts,
    })
}

fn section_4_14(data: &GoldenData) -> Result<SectionReport, GoldenError> {
    let ex = &data.examples.ex414;
    let (basis, _, code) = map_code_from_golden(ex, true)?;
    let mut facts = Vec::new();
    facts.push(Fact::eq(
        "4.14/dim4",
        "GF(4)-dimension",
        ex.dim4,
        code.dim4(),
    ));
    facts.extend(named_word_facts("4.14", ex, &basis, &code)?);
    let words: HashSet<DnaWord> = code
        .dna_words(DEFAULT_ENUMERATION_CAP)
        .map_err(data_err)?
        .into_iter()
        .collect();
    facts.push(Fact::is_true(
        "4.14/reverse-closed",
        "DNA word set is closed under reversal",
        words.iter().all(|w| words.contains(&w.reverse())),
    ));
    facts.push(Fact::is_true(
        "4.14/complement-closed",
        "DNA word set is closed under complementation",
        words.iter().all(|w| words.contains(&w.complement())),
    ));
    Ok(SectionReport {
        name: "4.14".into(),
        facts,
    })
}

fn section_table1(data: &GoldenData) -> Result<SectionReport, GoldenError> {
    let mut facts = Vec::new();
    for (i, row) in data.table1.iter().enumerate() {
        let rownum = i + 1;
        let field = Field::gf(row.q).map_err(data_err)?;
        let variant: SetVariant = row.variant.parse().map_err(data_err)?;
        // GF(4) and GF(64) rows are pinned to the canonical generators; the
        // other fields never fix a primitive element, so search candidates in
        // canonical order and report the first that reproduces the row.
        let candidates: Vec<Felt> = if matches!(row.q, 4 | 64) {
            vec![Felt::generator(&field)]
        } else {
            enumerate_primitive_elements(&field)
        };
        let expected = format!("[{},{},{}] {}", row.n, row.k, row.d, row.class);
        let mut matched: Option<String> = None;
        let mut first_actual = String::new();
        let mut props_ok = true;
        let mut tried = 0usize;
        for omega in &candidates {
            let c = word_with_omega(&field, omega, &row.coeffs)?;
            let gens = build_generating_set(&c, row.m, row.t, variant).map_err(data_err)?;
            let code = LinearCode::span(&gens).map_err(data_err)?;
            let k = code.dimension();
            let d = code.min_distance().map_err(data_err)?;
            tried += 1;
            if !code.is_reversible() || griesmer_check(row.n, k, d, row.q).is_err() {
                props_ok = false;
            }
            if first_actual.is_empty() {
                first_actual = format!(
                    "[{},{},{}] {}",
                    row.n,
                    k,
                    d,
                    mds_class(row.n, k, d).as_str()
                );
            }
            if k == row.k && d == row.d {
                matched = Some(omega.to_string());
                break;
            }
        }
        let id = format!("table1/row{rownum}[q={}]", row.q);
        let desc = format!(
            "[n,k,d] for n={}, m={}, {}_{}",
            row.n, row.m, row.variant, row.t
        );
        facts.push(match &matched {
            Some(tok) => Fact {
                id: format!("{id}/params"),
                description: desc,
                expected: expected.clone(),
                actual: format!("{expected} with w={tok}"),
                pass: true,
            },
            None => Fact::eq(
                format!("{id}/params"),
                desc,
                &expected,
                format!("no primitive element matches; canonical gives {first_actual}"),
            ),
        });
        facts.push(Fact::is_true(
            format!("{id}/properties"),
            format!("reversible and Griesmer-consistent across {tried} constructed candidate(s)"),
            props_ok,
        ));
    }
    Ok(SectionReport {
        name: "table1".into(),
        facts,
    })
}

fn section_table2(data: &GoldenData) -> Result<SectionReport, GoldenError> {
    let ex = &data.examples.ex411;
    let field = Field::gf(ex.q).map_err(data_err)?;
    let basis = DnaBasis::new(1, &field).map_err(data_err)?;
    let omega = Felt::generator(&field);
    let c = word_with_omega(&field, &omega, &ex.coeffs)?;
    let variant: SetVariant = ex.variant.parse().map_err(data_err)?;
    let code = reversible_dna_code(&c, ex.m, ex.t, variant, &basis).map_err(data_err)?;
    let words: Vec<DnaWord> = code.dna_words(DEFAULT_ENUMERATION_CAP).map_err(data_err)?;
    let set: HashSet<String> = words.iter().map(|w| w.to_string()).collect();
    let golden: HashSet<String> = data.table2.iter().cloned().collect();

    let facts = vec![
        Fact::eq("table2/dim4", "GF(4)-dimension", 3, code.dim4()),
        Fact::eq(
            "table2/count",
            "number of DNA words",
            golden.len(),
            set.len(),
        ),
        Fact::is_true(
            "table2/set",
            "generated DNA word set equals the reference table",
            set == golden,
        ),
        Fact::is_true(
            "table2/zero",
            "the all-A word is present",
            set.contains(&"A".repeat(ex.n)),
        ),
        Fact::eq(
            "table2/distance",
            "minimum DNA distance",
            ex.d,
            code.min_dna_distance(DEFAULT_ENUMERATION_CAP)
                .map_err(data_err)?,
        ),
        Fact::is_true(
            "table2/reverse-closed",
            "word set is closed under reversal",
            words.iter().all(|w| set.contains(&w.reverse().to_string())),
        ),
    ];
    Ok(SectionReport {
        name: "table2".into(),
        facts,
    })
}
