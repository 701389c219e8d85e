//! Full analysis of one automorphism: algebra summary, spectral verdict,
//! Reidemeister numbers, zeta series and closed form, verification.

use serde::Serialize;

use reidzeta::error::{Error, Result};
use reidzeta::families::FamilyTag;
use reidzeta::nilpotent::{
    graded_data, reidemeister_sequence, Automorphism, GradedData, Reidemeister,
};
use reidzeta::spectral::{classify, SpectralReport};
use reidzeta::zeta::{verify_zeta, zeta_closed_form, zeta_series, ZetaForm, ZetaSeries};

pub const DEFAULT_ZETA_TERMS: u64 = 10;

#[derive(Serialize)]
pub struct AlgebraSummary {
    pub dim: usize,
    pub class: usize,
    pub lcs_dims: Vec<usize>,
    pub family: FamilyTag,
    pub graded_polys: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct AnalysisOutput {
    pub algebra: AlgebraSummary,
    pub spectral: SpectralReport,
    /// `R(phi^n)` for `n = 1..=terms`, as strings; `"INFINITE"` possible.
    pub reidemeister: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta_series: Option<ZetaSeries>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta_closed_form: Option<ZetaForm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta_display: Option<String>,
    /// "passed" only when the closed form reproduced the series at the
    /// requested order; otherwise a skip reason.
    pub verification: String,
    pub caveats: Vec<String>,
}

/// Runs the pipeline. `explicit_terms` distinguishes a user-requested zeta
/// order (refusal when not tame) from the default best-effort order.
pub fn analyze(phi: &Automorphism<'_>, explicit_terms: Option<u64>) -> Result<AnalysisOutput> {
    let terms = explicit_terms.unwrap_or(DEFAULT_ZETA_TERMS);
    let graded: GradedData = graded_data(phi)?;
    let spectral = classify(&graded.full_poly)?;
    let seq = reidemeister_sequence(phi, terms.max(1))?;
    let reidemeister: Vec<String> = seq.iter().map(|r| r.to_string()).collect();

    let mut caveats = Vec::new();
    if !spectral.integer_like {
        caveats.push(
            "not integer-like: induces no automorphism on any lattice; \
             tame/Anosov verdicts concern the rational completion only"
                .to_string(),
        );
    }
    if seq
        .iter()
        .any(|r| matches!(r, Reidemeister::Finite(v) if !v.denom().eq(&1.into())))
    {
        caveats.push("non-integer Reidemeister value encountered".to_string());
    }

    let mut zs = None;
    let mut zf = None;
    let mut zd = None;
    let verification;
    if !spectral.tame {
        if explicit_terms.is_some() {
            // the caller asked for the zeta function of a non-tame map
            return Err(Error::NotTame(
                spectral.min_infinite_power.unwrap_or_default(),
            ));
        }
        verification = format!(
            "skipped: not tame (R(phi^{}) is infinite)",
            spectral.min_infinite_power.unwrap_or_default()
        );
    } else {
        zs = Some(zeta_series(phi, terms)?);
        if spectral.integer_like {
            let form = zeta_closed_form(phi)?;
            verify_zeta(phi, terms)?;
            zd = Some(form.display());
            zf = Some(form);
            verification = "passed".to_string();
        } else {
            verification = "skipped: closed form needs an integer-like automorphism".to_string();
        }
    }

    Ok(AnalysisOutput {
        algebra: AlgebraSummary {
            dim: phi.algebra().dim(),
            class: graded.nilpotency_class(),
            lcs_dims: graded.lcs_dims.clone(),
            family: phi.algebra().metadata().clone(),
            graded_polys: graded
                .graded_polys
                .iter()
                .map(|p| {
                    p.coeffs()
                        .iter()
                        .map(reidzeta::rat::rat_to_string)
                        .collect()
                })
                .collect(),
        },
        spectral,
        reidemeister,
        zeta_series: zs,
        zeta_closed_form: zf,
        zeta_display: zd,
        verification,
        caveats,
    })
}

pub fn render_human(out: &AnalysisOutput) -> String {
    let mut s = String::new();
    let family = match &out.algebra.family {
        FamilyTag::Custom => String::new(),
        tag => format!(" ({})", family_name(tag)),
    };
    s.push_str(&format!(
        "algebra: dim {}, class {}, lcs dims {:?}{}\n",
        out.algebra.dim, out.algebra.class, out.algebra.lcs_dims, family
    ));
    s.push_str(&format!("char poly: {}\n", out.spectral.poly.display("x")));
    s.push_str(&format!(
        "graded char polys: {}\n",
        out.algebra
            .graded_polys
            .iter()
            .map(|coeffs| poly_string(coeffs))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    s.push_str(&format!(
        "classification: reidemeister_finite={} tame={} anosov={} integer_like={}\n",
        out.spectral.reidemeister_finite,
        out.spectral.tame,
        out.spectral.anosov,
        out.spectral.integer_like
    ));
    match out.spectral.min_infinite_power {
        Some(n) => s.push_str(&format!("min infinite power: {n}\n")),
        None => s.push_str("min infinite power: none (tame)\n"),
    }
    s.push_str(&format!(
        "unit circle pairs: {}, real eigenvalues >1: {}, <-1: {}\n",
        out.spectral.unit_circle_pairs, out.spectral.p_count, out.spectral.q_count
    ));
    s.push_str(&format!(
        "R(phi^n), n=1..{}: {}\n",
        out.reidemeister.len(),
        out.reidemeister.join(", ")
    ));
    if let Some(series) = &out.zeta_series {
        let coeffs: Vec<String> = series
            .coefficients
            .iter()
            .map(reidzeta::rat::rat_to_string)
            .collect();
        s.push_str(&format!("zeta series: [{}]\n", coeffs.join(", ")));
    }
    if let Some(display) = &out.zeta_display {
        s.push_str(&format!("zeta closed form: {display}\n"));
    }
    s.push_str(&format!("verification: {}\n", out.verification));
    for caveat in &out.caveats {
        s.push_str(&format!("caveat: {caveat}\n"));
    }
    s
}

fn family_name(tag: &FamilyTag) -> String {
    match tag {
        FamilyTag::Abelian { n } => format!("abelian({n})"),
        FamilyTag::Heisenberg => "heisenberg".to_string(),
        FamilyTag::Free { k, c } => format!("free({k},{c})"),
        FamilyTag::Graph { n, edges } => format!("graph({n} vertices, {} edges)", edges.len()),
        FamilyTag::DirectSum { parts } => format!(
            "direct sum [{}]",
            parts
                .iter()
                .map(family_name)
                .collect::<Vec<_>>()
                .join(" + ")
        ),
        FamilyTag::Custom => "custom".to_string(),
    }
}

fn poly_string(coeffs: &[String]) -> String {
    let rats: Vec<reidzeta::Rat> = coeffs
        .iter()
        .map(|s| reidzeta::rat::parse_rat(s).expect("own output"))
        .collect();
    reidzeta::poly::RatPoly::new(rats).display("x")
}
