//! Text formats, reports and the conjecture campaign behind the `polyshift`
//! binary.

pub mod campaign;
pub mod commands;
pub mod dialect;
pub mod error;
pub mod grammar;
pub mod report;

use polyshift::{realize, FamilySpec, MonomialIdeal, VariableOrder};

pub use campaign::{run_campaign, CampaignConfig, CampaignSummary, Conjecture};
pub use dialect::{parse_spec, print_spec};
pub use error::{CliError, ParseError};
pub use grammar::{parse_generator_list, parse_order, print_ideal};

/// An ideal as given on input: a generator list or a family document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSource {
    pub ideal: MonomialIdeal,
    pub spec: Option<FamilySpec>,
    pub order: Option<VariableOrder>,
}

impl IdealSource {
    pub fn n(&self) -> usize {
        self.ideal.n()
    }

    pub fn with_order(mut self, order: &str) -> Result<Self, ParseError> {
        self.order = Some(parse_order(order, self.n())?);
        Ok(self)
    }

    /// Canonical text: the family document if there is one, else the
    /// generator list.
    pub fn print(&self) -> String {
        match &self.spec {
            Some(spec) => print_spec(spec),
            None => print_ideal(&self.ideal),
        }
    }
}

/// Reads a generator list (`[...]`) or a family document (`{...}`).
pub fn parse_ideal(text: &str) -> Result<IdealSource, ParseError> {
    let trimmed = text.trim_start();
    match trimmed.chars().next() {
        Some('[') => Ok(IdealSource {
            ideal: parse_generator_list(text)?,
            spec: None,
            order: None,
        }),
        Some('{') => {
            let spec = parse_spec(text)?;
            let ideal = realize(&spec).map_err(|e| ParseError::new(1, 1, e.to_string()))?;
            Ok(IdealSource {
                ideal,
                spec: Some(spec),
                order: None,
            })
        }
        Some(c) => {
            let skipped = &text[..text.len() - trimmed.len()];
            let line = skipped.matches('\n').count() + 1;
            let column = skipped.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
            Err(ParseError::new(
                line,
                column,
                format!("expected '[' or '{{', found '{c}'"),
            ))
        }
        None => Err(ParseError::new(1, 1, "empty input")),
    }
}
