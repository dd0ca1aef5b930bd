//! Built-in presentations of three six-line arrangement monoids.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::presentation::Presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// `M6`: not cancellative, `c·deaf = c·eafd` but `deaf != eafd`.
    M6,
    /// `M6p`: not cancellative, `dbcefa = dbefac` but `cefa != efac`.
    M6p,
    /// `M6p` with `cefa = efac` added.
    M6pCompleted,
}

pub const M6_TEXT: &str = "\
generators: a b c d e f
relation: abf = bfa = fab
relation: ace = cea = eac
relation: def = efd = fde
relation: ad = da
relation: cd = dc
relation: bc = cb
relation: bd = db
relation: be = eb
relation: cf = fc
";

pub const M6P_TEXT: &str = "\
generators: a b c d e f
relation: abf = bfa = fab
relation: bcd = cdb = dbc
relation: def = efd = fde
relation: ad = da
relation: cf = fc
relation: be = eb
relation: abce = eabc
relation: cdea = acde
";

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::M6, Fixture::M6p, Fixture::M6pCompleted];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::M6 => "M6",
            Fixture::M6p => "M6p",
            Fixture::M6pCompleted => "M6p_completed",
        }
    }

    pub fn presentation(self) -> Presentation {
        match self {
            Fixture::M6 => Presentation::parse(M6_TEXT).expect("M6 fixture"),
            Fixture::M6p => Presentation::parse(M6P_TEXT).expect("M6p fixture"),
            Fixture::M6pCompleted => {
                let p = Fixture::M6p.presentation();
                let u = p.parse_word("cefa").expect("word");
                let v = p.parse_word("efac").expect("word");
                p.with_relation(u, v).expect("same length")
            }
        }
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M6" => Ok(Fixture::M6),
            "M6p" | "M6'" => Ok(Fixture::M6p),
            "M6p_completed" | "M6p-completed" => Ok(Fixture::M6pCompleted),
            other => Err(Error::UnknownFixture(other.to_string())),
        }
    }
}

pub fn fixture(name: &str) -> Result<Presentation> {
    Ok(name.parse::<Fixture>()?.presentation())
}
