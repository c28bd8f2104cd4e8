use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The 26 sporadic groups plus the Tits group, which is catalogued alongside them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sporadic {
    M11,
    M12,
    J1,
    M22,
    J2,
    M23,
    HS,
    J3,
    M24,
    McL,
    He,
    Ru,
    Suz,
    ON,
    Co3,
    Co2,
    Fi22,
    HN,
    Ly,
    Th,
    Fi23,
    Co1,
    J4,
    Fi24,
    B,
    M,
    Tits,
}

impl Sporadic {
    /// The 26 sporadic groups in order of increasing size.
    pub const SPORADIC: [Sporadic; 26] = [
        Sporadic::M11,
        Sporadic::M12,
        Sporadic::J1,
        Sporadic::M22,
        Sporadic::J2,
        Sporadic::M23,
        Sporadic::HS,
        Sporadic::J3,
        Sporadic::M24,
        Sporadic::McL,
        Sporadic::He,
        Sporadic::Ru,
        Sporadic::Suz,
        Sporadic::ON,
        Sporadic::Co3,
        Sporadic::Co2,
        Sporadic::Fi22,
        Sporadic::HN,
        Sporadic::Ly,
        Sporadic::Th,
        Sporadic::Fi23,
        Sporadic::Co1,
        Sporadic::J4,
        Sporadic::Fi24,
        Sporadic::B,
        Sporadic::M,
    ];

    pub fn all_with_tits() -> impl Iterator<Item = Sporadic> {
        Self::SPORADIC.into_iter().chain(std::iter::once(Sporadic::Tits))
    }

    pub fn name(self) -> &'static str {
        match self {
            Sporadic::M11 => "M11",
            Sporadic::M12 => "M12",
            Sporadic::J1 => "J1",
            Sporadic::M22 => "M22",
            Sporadic::J2 => "J2",
            Sporadic::M23 => "M23",
            Sporadic::HS => "HS",
            Sporadic::J3 => "J3",
            Sporadic::M24 => "M24",
            Sporadic::McL => "McL",
            Sporadic::He => "He",
            Sporadic::Ru => "Ru",
            Sporadic::Suz => "Suz",
            Sporadic::ON => "O'N",
            Sporadic::Co3 => "Co3",
            Sporadic::Co2 => "Co2",
            Sporadic::Fi22 => "Fi22",
            Sporadic::HN => "HN",
            Sporadic::Ly => "Ly",
            Sporadic::Th => "Th",
            Sporadic::Fi23 => "Fi23",
            Sporadic::Co1 => "Co1",
            Sporadic::J4 => "J4",
            Sporadic::Fi24 => "Fi24'",
            Sporadic::B => "B",
            Sporadic::M => "M",
            Sporadic::Tits => "2F4(2)'",
        }
    }

    /// Order in caret-star form.
    pub(crate) fn order_text(self) -> &'static str {
        match self {
            Sporadic::M11 => "2^4*3^2*5*11",
            Sporadic::M12 => "2^6*3^3*5*11",
            Sporadic::J1 => "2^3*3*5*7*11*19",
            Sporadic::M22 => "2^7*3^2*5*7*11",
            Sporadic::J2 => "2^7*3^3*5^2*7",
            Sporadic::M23 => "2^7*3^2*5*7*11*23",
            Sporadic::HS => "2^9*3^2*5^3*7*11",
            Sporadic::J3 => "2^7*3^5*5*17*19",
            Sporadic::M24 => "2^10*3^3*5*7*11*23",
            Sporadic::McL => "2^7*3^6*5^3*7*11",
            Sporadic::He => "2^10*3^3*5^2*7^3*17",
            Sporadic::Ru => "2^14*3^3*5^3*7*13*29",
            Sporadic::Suz => "2^13*3^7*5^2*7*11*13",
            Sporadic::ON => "2^9*3^4*5*7^3*11*19*31",
            Sporadic::Co3 => "2^10*3^7*5^3*7*11*23",
            Sporadic::Co2 => "2^18*3^6*5^3*7*11*23",
            Sporadic::Fi22 => "2^17*3^9*5^2*7*11*13",
            Sporadic::HN => "2^14*3^6*5^6*7*11*19",
            Sporadic::Ly => "2^8*3^7*5^6*7*11*31*37*67",
            Sporadic::Th => "2^15*3^10*5^3*7^2*13*19*31",
            Sporadic::Fi23 => "2^18*3^13*5^2*7*11*13*17*23",
            Sporadic::Co1 => "2^21*3^9*5^4*7^2*11*13*23",
            Sporadic::J4 => "2^21*3^3*5*7*11^3*23*29*31*37*43",
            Sporadic::Fi24 => "2^21*3^16*5^2*7^3*11*13*17*23*29",
            Sporadic::B => "2^41*3^13*5^6*7^2*11*13*17*19*23*31*47",
            Sporadic::M => "2^46*3^20*5^9*7^6*11^2*13^3*17*19*23*29*31*41*47*59*71",
            Sporadic::Tits => "2^11*3^3*5^2*13",
        }
    }

    /// Case-insensitive lookup accepting the common alternative spellings.
    pub fn from_name(token: &str) -> Option<Sporadic> {
        let t = token.trim().to_ascii_lowercase();
        let hit = match t.as_str() {
            "m11" => Sporadic::M11,
            "m12" => Sporadic::M12,
            "j1" => Sporadic::J1,
            "m22" => Sporadic::M22,
            "j2" | "hj" => Sporadic::J2,
            "m23" => Sporadic::M23,
            "hs" => Sporadic::HS,
            "j3" => Sporadic::J3,
            "m24" => Sporadic::M24,
            "mcl" => Sporadic::McL,
            "he" => Sporadic::He,
            "ru" => Sporadic::Ru,
            "suz" => Sporadic::Suz,
            "on" | "o'n" => Sporadic::ON,
            "co3" => Sporadic::Co3,
            "co2" => Sporadic::Co2,
            "fi22" => Sporadic::Fi22,
            "hn" => Sporadic::HN,
            "ly" => Sporadic::Ly,
            "th" => Sporadic::Th,
            "fi23" => Sporadic::Fi23,
            "co1" => Sporadic::Co1,
            "j4" => Sporadic::J4,
            "fi24" | "fi24'" | "f3+" => Sporadic::Fi24,
            "b" => Sporadic::B,
            "m" => Sporadic::M,
            "t" | "tits" | "2f4(2)'" => Sporadic::Tits,
            _ => return None,
        };
        Some(hit)
    }
}

/// Classical series in Lie notation; `rank` is the Lie rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassicalSeries {
    /// `A_n(q) = L_{n+1}(q)`
    A,
    /// `B_n(q) = O_{2n+1}(q)`
    B,
    /// `C_n(q) = S_{2n}(q)`
    C,
    /// `D_n(q) = O^+_{2n}(q)`
    D,
    /// `²A_n(q) = U_{n+1}(q)`
    TwistedA,
    /// `²D_n(q) = O^-_{2n}(q)`
    TwistedD,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExceptionalSeries {
    G2,
    F4,
    E6,
    E7,
    E8,
    TwistedE6,
    TriD4,
    /// Suzuki groups `²B₂(q)`, `q = 2^(2m+1)`
    Suzuki,
    /// Ree groups `²F₄(q)`, `q = 2^(2m+1)`
    ReeF4,
    /// Ree groups `²G₂(q)`, `q = 3^(2m+1)`
    ReeG2,
}

impl ExceptionalSeries {
    fn prefix(self) -> &'static str {
        match self {
            ExceptionalSeries::G2 => "G2",
            ExceptionalSeries::F4 => "F4",
            ExceptionalSeries::E6 => "E6",
            ExceptionalSeries::E7 => "E7",
            ExceptionalSeries::E8 => "E8",
            ExceptionalSeries::TwistedE6 => "2E6",
            ExceptionalSeries::TriD4 => "3D4",
            ExceptionalSeries::Suzuki => "2B2",
            ExceptionalSeries::ReeF4 => "2F4",
            ExceptionalSeries::ReeG2 => "2G2",
        }
    }
}

/// Symbolic identity of a finite simple group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupDescriptor {
    Alternating(u32),
    Sporadic(Sporadic),
    Classical {
        series: ClassicalSeries,
        rank: u32,
        q: u64,
    },
    Exceptional {
        series: ExceptionalSeries,
        q: u64,
    },
}

impl GroupDescriptor {
    /// `L_n(q)`, i.e. `PSL(n, q)`.
    pub fn psl(n: u32, q: u64) -> Self {
        GroupDescriptor::Classical {
            series: ClassicalSeries::A,
            rank: n - 1,
            q,
        }
    }

    /// `U_n(q)`, i.e. `PSU(n, q)`.
    pub fn psu(n: u32, q: u64) -> Self {
        GroupDescriptor::Classical {
            series: ClassicalSeries::TwistedA,
            rank: n - 1,
            q,
        }
    }

    /// `S_{2m}(q)`, i.e. `PSp(2m, q)`.
    pub fn psp(dim: u32, q: u64) -> Self {
        GroupDescriptor::Classical {
            series: ClassicalSeries::C,
            rank: dim / 2,
            q,
        }
    }

    /// `O_{2m+1}(q)`, i.e. `Ω(2m+1, q)`.
    pub fn omega_odd(dim: u32, q: u64) -> Self {
        GroupDescriptor::Classical {
            series: ClassicalSeries::B,
            rank: (dim - 1) / 2,
            q,
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupDescriptor::Alternating(n) => write!(f, "A{n}"),
            GroupDescriptor::Sporadic(s) => f.write_str(s.name()),
            GroupDescriptor::Classical { series, rank, q } => match series {
                ClassicalSeries::A => write!(f, "L{}({q})", rank + 1),
                ClassicalSeries::TwistedA => write!(f, "U{}({q})", rank + 1),
                ClassicalSeries::B => write!(f, "O{}({q})", 2 * rank + 1),
                ClassicalSeries::C => write!(f, "S{}({q})", 2 * rank),
                ClassicalSeries::D => write!(f, "O{}+({q})", 2 * rank),
                ClassicalSeries::TwistedD => write!(f, "O{}-({q})", 2 * rank),
            },
            GroupDescriptor::Exceptional { series, q } => write!(f, "{}({q})", series.prefix()),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    /// Parses ATLAS-style names (`A8`, `L3(4)`, `U4(2)`, `S6(3)`, `O7(3)`, `O8+(2)`,
    /// `2B2(8)`, `Sz(8)`, `M11`, `Fi23`) and Lie notation (`A3(2)`, `B3(3)`, `2A2(3)`),
    /// case-insensitively. Validates the parameters.
    fn from_str(token: &str) -> Result<Self> {
        let d = parse_token(token)?;
        super::validate(&d)?;
        Ok(d)
    }
}

fn parse_token(token: &str) -> Result<GroupDescriptor> {
    let raw: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    let unknown = || Error::UnknownGroup(token.to_string());
    if raw.is_empty() {
        return Err(unknown());
    }
    if let Some(s) = Sporadic::from_name(&raw) {
        return Ok(GroupDescriptor::Sporadic(s));
    }
    let t = raw.to_ascii_lowercase();
    let Some(open) = t.find('(') else {
        // Alternating groups: "A8".
        return match t.strip_prefix('a').map(str::parse::<u32>) {
            Some(Ok(n)) => Ok(GroupDescriptor::Alternating(n)),
            _ => Err(unknown()),
        };
    };
    if !t.ends_with(')') {
        return Err(unknown());
    }
    let prefix = &t[..open];
    let q: u64 = t[open + 1..t.len() - 1].parse().map_err(|_| unknown())?;

    let exceptional = |series| Ok(GroupDescriptor::Exceptional { series, q });
    match prefix {
        "g2" => return exceptional(ExceptionalSeries::G2),
        "f4" => return exceptional(ExceptionalSeries::F4),
        "e6" => return exceptional(ExceptionalSeries::E6),
        "e7" => return exceptional(ExceptionalSeries::E7),
        "e8" => return exceptional(ExceptionalSeries::E8),
        "2e6" => return exceptional(ExceptionalSeries::TwistedE6),
        "3d4" => return exceptional(ExceptionalSeries::TriD4),
        "2b2" | "sz" => return exceptional(ExceptionalSeries::Suzuki),
        "2f4" => return exceptional(ExceptionalSeries::ReeF4),
        "2g2" | "r" => return exceptional(ExceptionalSeries::ReeG2),
        _ => {}
    }

    let classical = |series, rank| Ok(GroupDescriptor::Classical { series, rank, q });
    let number = |s: &str| s.parse::<u32>().map_err(|_| unknown());
    let too_small = || Error::domain(format!("{token}: dimension too small for a simple group"));

    // Lie notation first: "2a2", "2d4", then single letters.
    if let Some(r) = prefix.strip_prefix("2a") {
        return classical(ClassicalSeries::TwistedA, number(r)?);
    }
    if let Some(r) = prefix.strip_prefix("2d") {
        return classical(ClassicalSeries::TwistedD, number(r)?);
    }
    let (head, rest) = prefix.split_at(1);
    match head {
        "a" => classical(ClassicalSeries::A, number(rest)?),
        "b" => classical(ClassicalSeries::B, number(rest)?),
        "c" => classical(ClassicalSeries::C, number(rest)?),
        "d" => classical(ClassicalSeries::D, number(rest)?),
        "l" => match number(rest)? {
            n if n >= 2 => classical(ClassicalSeries::A, n - 1),
            _ => Err(too_small()),
        },
        "u" => match number(rest)? {
            n if n >= 3 => classical(ClassicalSeries::TwistedA, n - 1),
            _ => Err(too_small()),
        },
        "s" => match number(rest)? {
            n if n >= 4 && n % 2 == 0 => classical(ClassicalSeries::C, n / 2),
            _ => Err(too_small()),
        },
        "o" => {
            let (dim, sign) = match rest.strip_suffix('+') {
                Some(d) => (number(d)?, Some('+')),
                None => match rest.strip_suffix('-') {
                    Some(d) => (number(d)?, Some('-')),
                    None => (number(rest)?, None),
                },
            };
            match (dim % 2, sign) {
                (1, None) if dim >= 5 => classical(ClassicalSeries::B, (dim - 1) / 2),
                (0, Some('+')) if dim == 6 => classical(ClassicalSeries::A, 3),
                (0, Some('-')) if dim == 6 => classical(ClassicalSeries::TwistedA, 3),
                (0, Some('+')) if dim >= 8 => classical(ClassicalSeries::D, dim / 2),
                (0, Some('-')) if dim >= 8 => classical(ClassicalSeries::TwistedD, dim / 2),
                (0, None) => Err(Error::domain(format!(
                    "{token}: even-dimensional orthogonal groups need a + or - sign"
                ))),
                _ => Err(too_small()),
            }
        }
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> GroupDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn parses_atlas_names() {
        assert_eq!(parse("A8"), GroupDescriptor::Alternating(8));
        assert_eq!(parse("l3(4)"), GroupDescriptor::psl(3, 4));
        assert_eq!(parse("U4(2)"), GroupDescriptor::psu(4, 2));
        assert_eq!(parse("S6(3)"), GroupDescriptor::psp(6, 3));
        assert_eq!(parse("O7(3)"), GroupDescriptor::omega_odd(7, 3));
        assert_eq!(
            parse("2B2(8)"),
            GroupDescriptor::Exceptional {
                series: ExceptionalSeries::Suzuki,
                q: 8
            }
        );
        assert_eq!(parse("Sz(8)"), parse("2b2(8)"));
        assert_eq!(parse("M11"), GroupDescriptor::Sporadic(Sporadic::M11));
        assert_eq!(parse("fi23"), GroupDescriptor::Sporadic(Sporadic::Fi23));
        assert_eq!(parse("O'N"), GroupDescriptor::Sporadic(Sporadic::ON));
        assert_eq!(parse("2F4(2)'"), GroupDescriptor::Sporadic(Sporadic::Tits));
        assert_eq!(parse("O8-(2)").to_string(), "O8-(2)");
        assert_eq!(parse("O6+(3)"), GroupDescriptor::psl(4, 3));
        assert_eq!(parse("A3(2)"), GroupDescriptor::psl(4, 2));
        assert_eq!(parse("2A2(3)"), GroupDescriptor::psu(3, 3));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "A8", "L3(4)", "U4(3)", "S6(3)", "O7(3)", "O8+(2)", "O10-(2)", "G2(3)", "3D4(2)",
            "2B2(8)", "2F4(8)", "2G2(27)", "E8(2)", "2E6(2)", "M", "Fi24'", "2F4(2)'",
        ] {
            assert_eq!(parse(s).to_string(), s);
        }
    }

    #[test]
    fn rejects_bad_tokens() {
        assert!(matches!("X9".parse::<GroupDescriptor>(), Err(Error::UnknownGroup(_))));
        assert!("A4".parse::<GroupDescriptor>().is_err());
        assert!("L2(6)".parse::<GroupDescriptor>().is_err());
        assert!("L2(3)".parse::<GroupDescriptor>().is_err());
        assert!("O8(2)".parse::<GroupDescriptor>().is_err());
        assert!("2B2(2)".parse::<GroupDescriptor>().is_err());
        assert!("2B2(4)".parse::<GroupDescriptor>().is_err());
        assert!("G2(2)".parse::<GroupDescriptor>().is_err());
        assert!("S4(2)".parse::<GroupDescriptor>().is_err());
        assert!("U3(2)".parse::<GroupDescriptor>().is_err());
    }
}
