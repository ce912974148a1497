//! SI quantities with unit suffixes: `63.15uH`, `1nF`, `615kHz`, `1 cm`.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    Meter,
    Henry,
    Farad,
    Hertz,
    Volt,
    Ampere,
    Ohm,
    OhmMeter,
    AmpHour,
    Watt,
    Second,
    Kelvin,
    /// Plain number, no suffix allowed.
    None,
}

impl Unit {
    /// Accepted spellings; the first one is used when serializing.
    fn symbols(self) -> &'static [&'static str] {
        match self {
            Unit::Meter => &["m"],
            Unit::Henry => &["H"],
            Unit::Farad => &["F"],
            Unit::Hertz => &["Hz"],
            Unit::Volt => &["V"],
            Unit::Ampere => &["A"],
            Unit::Ohm => &["ohm", "Ω"],
            Unit::OhmMeter => &["ohm_m", "Ωm"],
            Unit::AmpHour => &["Ah"],
            Unit::Watt => &["W"],
            Unit::Second => &["s"],
            Unit::Kelvin => &["K"],
            Unit::None => &[],
        }
    }

    pub fn symbol(self) -> &'static str {
        self.symbols().first().copied().unwrap_or("")
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::None => f.write_str("dimensionless"),
            u => f.write_str(u.symbol()),
        }
    }
}

fn prefix_scale(p: char) -> Option<f64> {
    Some(match p {
        'p' => 1e-12,
        'n' => 1e-9,
        'u' | 'µ' | 'μ' => 1e-6,
        'm' => 1e-3,
        'c' => 1e-2,
        'k' => 1e3,
        'M' => 1e6,
        'G' => 1e9,
        _ => return None,
    })
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum UnitError {
    #[error("`{0}` is not a number")]
    NotANumber(String),
    #[error("unit `{found}` does not match expected {expected}")]
    WrongUnit { found: String, expected: Unit },
}

/// Parses `text` as a quantity in `unit`, returning the SI value.
pub fn parse_quantity(text: &str, unit: Unit) -> Result<f64, UnitError> {
    let text = text.trim();
    let split = text
        .char_indices()
        .find(|&(i, c)| {
            !(c.is_ascii_digit()
                || c == '.'
                || c == '+'
                || c == '-'
                || ((c == 'e' || c == 'E')
                    && i > 0
                    && text[i + 1..]
                        .starts_with(|n: char| n.is_ascii_digit() || n == '-' || n == '+')))
        })
        .map_or(text.len(), |(i, _)| i);
    let (num, suffix) = text.split_at(split);
    let value: f64 = num
        .parse()
        .map_err(|_| UnitError::NotANumber(text.to_string()))?;
    if !value.is_finite() {
        return Err(UnitError::NotANumber(text.to_string()));
    }
    let suffix = suffix.trim();
    if suffix.is_empty() {
        return Ok(value);
    }
    let wrong = || UnitError::WrongUnit {
        found: suffix.to_string(),
        expected: unit,
    };
    let symbols = unit.symbols();
    if symbols.contains(&suffix) {
        return Ok(value);
    }
    let mut chars = suffix.chars();
    let p = chars.next().ok_or_else(wrong)?;
    let rest = chars.as_str();
    match prefix_scale(p) {
        Some(scale) if symbols.contains(&rest) => Ok(value * scale),
        _ => Err(wrong()),
    }
}

/// Exact, round-trippable text for an SI value.
pub fn format_quantity(value: f64, unit: Unit) -> String {
    format!("{value:e}{}", unit.symbol())
}
