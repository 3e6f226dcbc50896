//! Human-readable and JSON renderings of period computations.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use symreg_core::contraction::component_decomposition;
use symreg_core::engine::{DynamicalParams, PeriodMethod, PeriodReport, ReductionChain};

/// The register input of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDoc {
    pub bits: String,
    pub k: usize,
    pub p: usize,
    pub n: usize,
}

/// `(k*, p*)` after normalization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedDoc {
    pub k: usize,
    pub p: usize,
}

/// The main-case start found on the orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StartDoc {
    pub shift: usize,
    pub state: String,
}

/// One level `i` of the reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDoc {
    pub level: usize,
    pub vector: String,
    /// Embraced component decomposition, when the first entry exceeds one.
    pub decomposition: Option<String>,
    pub distance: Option<Vec<u64>>,
    pub alpha: Option<u64>,
    pub m_star: Option<u64>,
    pub alpha_star: Option<u64>,
    pub gamma_star: Option<u64>,
    pub x: Option<u64>,
    pub y: Option<u64>,
    pub j: u64,
    pub zeta: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodDoc {
    Analytic,
    RotationOnly,
    Simulated,
}

impl From<PeriodMethod> for MethodDoc {
    fn from(m: PeriodMethod) -> Self {
        match m {
            PeriodMethod::Analytic => MethodDoc::Analytic,
            PeriodMethod::RotationOnly => MethodDoc::RotationOnly,
            PeriodMethod::Simulated => MethodDoc::Simulated,
        }
    }
}

/// Serializable trace of a period computation or a bare reduction.
///
/// `chain` lists levels from the top (`Q_p`) down to `Q_0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input: Option<InputDoc>,
    pub method: MethodDoc,
    pub normalized: Option<NormalizedDoc>,
    pub start: Option<StartDoc>,
    pub chain: Vec<LevelDoc>,
    pub minimal_period: u64,
    pub least_even_vector_period: Option<u64>,
}

fn level_docs(chain: &ReductionChain, dynamics: &DynamicalParams) -> Vec<LevelDoc> {
    chain
        .levels()
        .iter()
        .zip(&dynamics.levels)
        .enumerate()
        .rev()
        .map(|(level, (q, dyn_level))| {
            let decomposition = component_decomposition(q).ok().map(|d| d.to_string());
            let distance = dyn_level.distance.as_ref();
            LevelDoc {
                level,
                vector: q.to_string(),
                decomposition,
                distance: distance.map(|d| d.d.clone()),
                alpha: distance.map(|d| d.alpha),
                m_star: dyn_level.progression.map(|lp| lp.m_star),
                alpha_star: dyn_level.progression.map(|lp| lp.alpha_star),
                gamma_star: dyn_level.progression.map(|lp| lp.gamma_star),
                x: dyn_level.solution.map(|s| s.x),
                y: dyn_level.solution.map(|s| s.y),
                j: dyn_level.j,
                zeta: dyn_level.zeta,
            }
        })
        .collect()
}

impl ReportDocument {
    pub fn from_report(report: &PeriodReport) -> Self {
        let input = InputDoc {
            bits: report.bits.to_string(),
            k: report.params.k,
            p: report.params.p,
            n: report.params.n,
        };
        let analytic = report.analytic.as_ref();
        ReportDocument {
            input: Some(input),
            method: report.method.into(),
            normalized: analytic.map(|t| NormalizedDoc { k: t.normalized.k, p: t.normalized.p }),
            start: analytic.map(|t| StartDoc {
                shift: t.start.shift,
                state: t.start.state.to_string(),
            }),
            chain: analytic
                .map(|t| level_docs(&t.chain, &t.dynamics))
                .unwrap_or_default(),
            minimal_period: report.minimal_period,
            least_even_vector_period: report.least_even_vector_period(),
        }
    }

    pub fn from_reduction(chain: &ReductionChain, dynamics: &DynamicalParams) -> Self {
        ReportDocument {
            input: None,
            method: MethodDoc::Analytic,
            normalized: None,
            start: None,
            chain: level_docs(chain, dynamics),
            minimal_period: dynamics.period(),
            least_even_vector_period: Some(dynamics.least_even_vector_period()),
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// The narrative text form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(input) = &self.input {
            let _ = writeln!(out, "A = {}", input.bits);
            let _ = writeln!(out, "k = {}, p = {}, n = {}", input.k, input.p, input.n);
        }
        match self.method {
            MethodDoc::RotationOnly => {
                out.push_str("weight outside [k, k+p+1]: the feedback never fires\n");
            }
            MethodDoc::Simulated => {
                out.push_str("weight never reaches both band edges: simulated directly\n");
            }
            MethodDoc::Analytic => {}
        }
        if let Some(nd) = &self.normalized {
            let _ = writeln!(out, "normalized: k* = {}, p* = {}", nd.k, nd.p);
        }
        if let Some(start) = &self.start {
            let _ = writeln!(out, "start: r = {}, A_r = {}", start.shift, start.state);
        }
        for level in &self.chain {
            let i = level.level;
            let _ = writeln!(out);
            let _ = writeln!(out, "Q_{i} = {}", level.vector);
            if let Some(dec) = &level.decomposition {
                let _ = writeln!(out, "  components: {dec}");
            }
            match (&level.distance, level.alpha) {
                (Some(d), Some(alpha)) if d.is_empty() => {
                    let _ = writeln!(out, "  D(Q_{i}) = ∅, α_{i} = {alpha}");
                }
                (Some(d), Some(alpha)) => {
                    let _ = writeln!(out, "  D(Q_{i}) = {}, α_{i} = {alpha}", tuple(d));
                }
                _ => {}
            }
            if let (Some(m), Some(a), Some(g)) = (level.m_star, level.alpha_star, level.gamma_star) {
                let _ = writeln!(out, "  m* = {m}, α_{i}* = {a}, γ_{i}* = {g}");
            }
            if let (Some(x), Some(y)) = (level.x, level.y) {
                let _ = writeln!(out, "  x = {x}, y = {y}");
            }
            let _ = writeln!(out, "  j_{i} = {}, ζ_{i} = {}", level.j, level.zeta);
        }
        if !self.chain.is_empty() {
            let _ = writeln!(out);
        }
        let _ = writeln!(out, "minimal period: {}", self.minimal_period);
        out
    }
}

fn tuple(xs: &[u64]) -> String {
    let inner: Vec<String> = xs.iter().map(u64::to_string).collect();
    format!("({})", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use symreg_core::engine::{minimal_period, reduce};
    use symreg_core::{BitString, RegisterParams, RunVector};

    fn report(bits: &str, k: usize, p: usize) -> PeriodReport {
        let a: BitString = bits.parse().unwrap();
        minimal_period(&a, RegisterParams::new(k, p, a.len()).unwrap()).unwrap()
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        for (bits, k, p) in [("11100001100001", 3, 2), ("110110", 0, 1), ("110", 0, 2)] {
            let doc = ReportDocument::from_report(&report(bits, k, p));
            let json = doc.to_json();
            let back = ReportDocument::from_json(&json).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_json(), json);
        }
    }

    #[test]
    fn narrative_mentions_each_level() {
        let doc = ReportDocument::from_report(&report("11100001100001", 3, 2));
        let text = doc.to_text();
        assert!(text.contains("Q_2 = (3,4,2,4,1,0)"));
        assert!(text.contains("components: ((3),(4),(2),(4,1,0))"));
        assert!(text.contains("D(Q_2) = (9), α_2 = 9"));
        assert!(text.contains("x = 68, y = 9"));
        assert!(text.contains("j_0 = 2, ζ_0 = 7"));
        assert!(text.ends_with("minimal period: 982\n"));
    }

    #[test]
    fn reduction_document_lists_levels_top_down() {
        let q: RunVector = "(3,4,2,3)".parse().unwrap();
        let r = reduce(&q, 2).unwrap();
        let doc = ReportDocument::from_reduction(&r.chain, &r.dynamics);
        let levels: Vec<usize> = doc.chain.iter().map(|l| l.level).collect();
        assert_eq!(levels, [2, 1, 0]);
        assert_eq!(doc.chain[0].distance.as_deref(), Some(&[][..]));
        assert_eq!(doc.minimal_period, 94);
        assert!(doc.to_text().contains("D(Q_2) = ∅"));
    }
}
