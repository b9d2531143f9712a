use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Variable families, declared in canonical order: `λ < ψ < κ < x < u < z < y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Lambda,
    Psi,
    Kappa,
    X,
    U,
    Z,
    Y,
}

impl Family {
    pub fn prefix(self) -> &'static str {
        match self {
            Family::Lambda => "lambda",
            Family::Psi => "psi",
            Family::Kappa => "kappa",
            Family::X => "x",
            Family::U => "u",
            Family::Z => "z",
            Family::Y => "y",
        }
    }

    fn latex(self) -> &'static str {
        match self {
            Family::Lambda => "\\lambda",
            Family::Psi => "\\psi",
            Family::Kappa => "\\kappa",
            Family::X => "x",
            Family::U => "u",
            Family::Z => "z",
            Family::Y => "y",
        }
    }

    pub fn is_indexed(self) -> bool {
        !matches!(self, Family::Psi | Family::U)
    }
}

/// A generator of the polynomial alphabet. The weight is fixed by the family
/// and index: `x_i, ψ, u, z_i, y_j` have weight 1, `λ_i` weight `i`, `κ_j`
/// weight `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    family: Family,
    index: u32,
}

impl Variable {
    pub const PSI: Variable = Variable { family: Family::Psi, index: 0 };
    pub const U: Variable = Variable { family: Family::U, index: 0 };

    pub fn x(i: u32) -> Self {
        Variable { family: Family::X, index: i }
    }

    pub fn lambda(i: u32) -> Self {
        Variable { family: Family::Lambda, index: i }
    }

    pub fn kappa(j: u32) -> Self {
        Variable { family: Family::Kappa, index: j }
    }

    pub fn z(i: u32) -> Self {
        Variable { family: Family::Z, index: i }
    }

    pub fn y(j: u32) -> Self {
        Variable { family: Family::Y, index: j }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn weight(&self) -> i64 {
        match self.family {
            Family::Lambda | Family::Kappa => self.index as i64,
            _ => 1,
        }
    }

    pub fn latex(&self) -> String {
        if self.family.is_indexed() {
            format!("{}_{{{}}}", self.family.latex(), self.index)
        } else {
            self.family.latex().to_string()
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_indexed() {
            write!(f, "{}{}", self.family.prefix(), self.index)
        } else {
            f.write_str(self.family.prefix())
        }
    }
}

impl FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "psi" => return Ok(Variable::PSI),
            "u" => return Ok(Variable::U),
            _ => {}
        }
        // longest prefixes first so "lambda" is not read as "l..."
        for family in [Family::Lambda, Family::Kappa, Family::X, Family::Z, Family::Y] {
            if let Some(rest) = s.strip_prefix(family.prefix()) {
                if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                    let index = rest
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable index in {s:?}")))?;
                    return Ok(Variable { family, index });
                }
            }
        }
        Err(Error::Parse(format!("unknown variable {s:?}")))
    }
}
