//! Yes/no answers that carry enough data to be re-checked.

use serde_json::{json, Value};

use crate::category::ClosedMonoidal;
use crate::error::Result;

/// Witness attached to a [`Verdict`].
#[derive(Clone, Debug)]
pub enum Certificate<M> {
    /// `map` is an isomorphism with the given inverse.
    Invertible { map: M, inverse: M },
    /// `map` has no inverse.
    NotInvertible { map: M, reason: String },
    /// Two parallel maps that the verdict claims are equal (or, for a
    /// negative verdict, different).
    Parallel { label: String, left: M, right: M },
    /// Conjunction of sub-verdicts.
    All(Vec<Verdict<M>>),
    /// Nothing to re-check beyond the text.
    Text(String),
}

#[derive(Clone, Debug)]
pub struct Verdict<M> {
    pub holds: bool,
    pub summary: String,
    pub certificate: Certificate<M>,
}

impl<M: Clone> Verdict<M> {
    pub fn new(holds: bool, summary: impl Into<String>, certificate: Certificate<M>) -> Self {
        Verdict {
            holds,
            summary: summary.into(),
            certificate,
        }
    }

    pub fn text(holds: bool, summary: impl Into<String>) -> Self {
        let s = summary.into();
        Verdict::new(holds, s.clone(), Certificate::Text(s))
    }

    /// Conjunction; holds exactly when every part holds.
    pub fn all(summary: impl Into<String>, parts: Vec<Verdict<M>>) -> Self {
        let holds = parts.iter().all(|v| v.holds);
        Verdict::new(holds, summary, Certificate::All(parts))
    }

    /// Verdict that `left` and `right` agree.
    pub fn equality<C>(cat: &C, label: impl Into<String>, left: M, right: M) -> Result<Self>
    where
        C: ClosedMonoidal<Mor = M>,
    {
        let label = label.into();
        let holds = cat.equal(&left, &right)?;
        let summary = if holds {
            format!("{label}: commutes")
        } else {
            format!("{label}: does not commute")
        };
        Ok(Verdict::new(holds, summary, Certificate::Parallel { label, left, right }))
    }

    /// Verdict that `map` is an isomorphism.
    pub fn invertibility<C>(cat: &C, label: impl Into<String>, map: M) -> Result<Self>
    where
        C: ClosedMonoidal<Mor = M>,
    {
        let label = label.into();
        Ok(match cat.inverse(&map)? {
            Some(inverse) => Verdict::new(
                true,
                format!("{label} is an isomorphism"),
                Certificate::Invertible { map, inverse },
            ),
            None => {
                let reason = if cat.is_mono(&map)? {
                    "not surjective".to_string()
                } else {
                    "not injective".to_string()
                };
                Verdict::new(
                    false,
                    format!("{label} is not an isomorphism ({reason})"),
                    Certificate::NotInvertible { map, reason },
                )
            }
        })
    }

    /// Re-validates the certificate against the category. Returns whether
    /// the certificate supports `holds`.
    pub fn recheck<C>(&self, cat: &C) -> Result<bool>
    where
        C: ClosedMonoidal<Mor = M>,
    {
        Ok(match &self.certificate {
            Certificate::Invertible { map, inverse } => {
                let src = cat.source(map);
                let tgt = cat.target(map);
                self.holds
                    && cat.equal(&cat.compose(inverse, map)?, &cat.identity(&src))?
                    && cat.equal(&cat.compose(map, inverse)?, &cat.identity(&tgt))?
            }
            Certificate::NotInvertible { map, .. } => !self.holds && !cat.is_iso(map)?,
            Certificate::Parallel { left, right, .. } => cat.equal(left, right)? == self.holds,
            Certificate::All(parts) => {
                let mut ok = self.holds == parts.iter().all(|v| v.holds);
                for p in parts {
                    ok &= p.recheck(cat)?;
                }
                ok
            }
            Certificate::Text(_) => true,
        })
    }

    pub fn to_json<C>(&self, cat: &C) -> Value
    where
        C: ClosedMonoidal<Mor = M>,
    {
        let cert = match &self.certificate {
            Certificate::Invertible { map, inverse } => json!({
                "kind": "invertible",
                "map": cat.mor_json(map),
                "inverse": cat.mor_json(inverse),
            }),
            Certificate::NotInvertible { map, reason } => json!({
                "kind": "not_invertible",
                "map": cat.mor_json(map),
                "reason": reason,
            }),
            Certificate::Parallel { label, left, right } => json!({
                "kind": "parallel",
                "label": label,
                "left": cat.mor_json(left),
                "right": cat.mor_json(right),
            }),
            Certificate::All(parts) => json!({
                "kind": "all",
                "parts": parts.iter().map(|p| p.to_json(cat)).collect::<Vec<_>>(),
            }),
            Certificate::Text(t) => json!({ "kind": "text", "text": t }),
        };
        json!({
            "holds": self.holds,
            "summary": self.summary,
            "certificate": cert,
        })
    }
}
