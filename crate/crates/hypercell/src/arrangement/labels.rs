use crate::error::{Error, Result};

/// Wall label, matching the notation of the source tables: numbered octets
/// `+0..+7` and `-0..-7`, letter walls `A..H`, symmetry walls `L`, `M`, `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WallLabel {
    Positive(u8),
    Negative(u8),
    Letter(char),
}

/// Octet classification of a wall, derivable from its label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Octet {
    Positive,
    Negative,
    Letter,
    Symmetry,
}

impl WallLabel {
    pub fn octet(&self) -> Octet {
        match self {
            WallLabel::Positive(_) => Octet::Positive,
            WallLabel::Negative(_) => Octet::Negative,
            WallLabel::Letter(c) if ('A'..='H').contains(c) => Octet::Letter,
            WallLabel::Letter(_) => Octet::Symmetry,
        }
    }

    pub fn parse(s: &str) -> Result<WallLabel> {
        let label = s.trim();
        let fail = || Error::UnknownLabel(label.to_string());
        if let Some(rest) = label.strip_prefix('+') {
            let k: u8 = rest.parse().map_err(|_| fail())?;
            if k > 7 {
                return Err(fail());
            }
            return Ok(WallLabel::Positive(k));
        }
        if let Some(rest) = label.strip_prefix('-') {
            let k: u8 = rest.parse().map_err(|_| fail())?;
            if k > 7 {
                return Err(fail());
            }
            return Ok(WallLabel::Negative(k));
        }
        let mut chars = label.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) if ('A'..='H').contains(&c) || matches!(c, 'L' | 'M' | 'N') => {
                Ok(WallLabel::Letter(c))
            }
            _ => Err(fail()),
        }
    }
}

impl std::fmt::Display for WallLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WallLabel::Positive(k) => write!(f, "+{k}"),
            WallLabel::Negative(k) => write!(f, "-{k}"),
            WallLabel::Letter(c) => write!(f, "{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["+0", "+7", "-3", "A", "H", "L", "N"] {
            assert_eq!(WallLabel::parse(s).unwrap().to_string(), s);
        }
        for s in ["+8", "-9", "I", "Z", "", "++1"] {
            assert!(WallLabel::parse(s).is_err());
        }
    }

    #[test]
    fn octets() {
        assert_eq!(WallLabel::Positive(3).octet(), Octet::Positive);
        assert_eq!(WallLabel::Negative(0).octet(), Octet::Negative);
        assert_eq!(WallLabel::Letter('A').octet(), Octet::Letter);
        assert_eq!(WallLabel::Letter('M').octet(), Octet::Symmetry);
    }
}
