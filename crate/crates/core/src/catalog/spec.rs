//! The group-spec grammar.
//!
//! ```text
//! spec   := term ( "x" term )*
//! term   := "(" spec ")" | family ":" param
//! family := C | D | Q | Dic | S | A | ESp | ESm | X5 | EA
//! param  := integer | prime "^" integer      (the latter only for EA)
//! ```
//!
//! `x` is the direct product and associates to the left.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::table::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// `C:n`
    Cyclic(u32),
    /// `D:2n`, parameter is the group order.
    Dihedral(u32),
    /// `Q:2^k`, generalized quaternion of the given order.
    Quaternion(u32),
    /// `Dic:4n`, parameter is the group order.
    Dicyclic(u32),
    /// `S:n`
    Symmetric(u32),
    /// `A:n`
    Alternating(u32),
    /// `ESp:p`, extraspecial of order p³ and exponent p (Heisenberg mod p).
    ExtraspecialExpP(u32),
    /// `ESm:p`, extraspecial of order p³ and exponent p².
    ExtraspecialExpP2(u32),
    /// `X5:p`, the class-3 group of order p⁵ on generators a1, a2.
    X5(u32),
    /// `EA:p^k`
    ElementaryAbelian {
        p: u32,
        k: u32,
    },
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

/// One row of `catalog list`.
pub struct FamilyInfo {
    pub syntax: &'static str,
    pub description: &'static str,
    pub parameters: &'static str,
}

pub const FAMILIES: &[FamilyInfo] = &[
    FamilyInfo { syntax: "C:n", description: "cyclic group of order n", parameters: "n >= 1" },
    FamilyInfo { syntax: "D:2n", description: "dihedral group of order 2n", parameters: "even order >= 2" },
    FamilyInfo { syntax: "Q:2^k", description: "generalized quaternion group", parameters: "order 2^k, k >= 3" },
    FamilyInfo { syntax: "Dic:4n", description: "dicyclic group of order 4n", parameters: "order divisible by 4" },
    FamilyInfo { syntax: "S:n", description: "symmetric group on n points", parameters: "1 <= n <= 6" },
    FamilyInfo { syntax: "A:n", description: "alternating group on n points", parameters: "1 <= n <= 6" },
    FamilyInfo {
        syntax: "ESp:p",
        description: "extraspecial group of order p^3, exponent p (Heisenberg mod p)",
        parameters: "odd prime p",
    },
    FamilyInfo {
        syntax: "ESm:p",
        description: "extraspecial group of order p^3, exponent p^2",
        parameters: "odd prime p",
    },
    FamilyInfo {
        syntax: "X5:p",
        description: "class-3 group of order p^5: [a1,a2]=b, [a1,b]=c1, [a2,b]=c2",
        parameters: "odd prime p",
    },
    FamilyInfo {
        syntax: "EA:p^k",
        description: "elementary abelian group of order p^k",
        parameters: "prime p, k >= 1",
    },
    FamilyInfo { syntax: "G x H", description: "direct product", parameters: "any two specs" },
];

impl GroupSpec {
    /// Order of the group this spec denotes, without building it.
    pub fn order(&self) -> u128 {
        let p3 = |p: u32| (p as u128).pow(3);
        match *self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) | GroupSpec::Quaternion(n) | GroupSpec::Dicyclic(n) => {
                n as u128
            }
            GroupSpec::Symmetric(n) => (1..=n as u128).product(),
            GroupSpec::Alternating(n) => ((1..=n as u128).product::<u128>() / 2).max(1),
            GroupSpec::ExtraspecialExpP(p) | GroupSpec::ExtraspecialExpP2(p) => p3(p),
            GroupSpec::X5(p) => (p as u128).pow(5),
            GroupSpec::ElementaryAbelian { p, k } => (p as u128).saturating_pow(k),
            GroupSpec::Product(ref a, ref b) => a.order().saturating_mul(b.order()),
        }
    }

    fn validate(&self) -> Result<()> {
        let unsupported = |msg: String| Err(Error::UnsupportedParameter(msg));
        match *self {
            GroupSpec::Cyclic(0) => unsupported("C:n needs n >= 1".into()),
            GroupSpec::Dihedral(n) if n < 2 || n % 2 != 0 => {
                unsupported(format!("D:{n}: dihedral order must be even and >= 2"))
            }
            GroupSpec::Quaternion(n) if n < 8 || !n.is_power_of_two() => {
                unsupported(format!("Q:{n}: quaternion order must be 2^k with k >= 3"))
            }
            GroupSpec::Dicyclic(n) if n < 4 || n % 4 != 0 => {
                unsupported(format!("Dic:{n}: dicyclic order must be a positive multiple of 4"))
            }
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) if !(1..=6).contains(&n) => {
                unsupported(format!("degree {n} outside 1..=6"))
            }
            GroupSpec::ExtraspecialExpP(p) | GroupSpec::ExtraspecialExpP2(p) if !is_prime(p as u64) || p == 2 => {
                unsupported(format!("extraspecial parameter {p}: p must be an odd prime (use D:8 or Q:8 for p = 2)"))
            }
            GroupSpec::X5(p) if !is_prime(p as u64) || p == 2 => unsupported(format!("X5:{p}: p is an odd prime")),
            GroupSpec::ElementaryAbelian { p, k } if !is_prime(p as u64) || k == 0 => {
                unsupported(format!("EA:{p}^{k}: needs prime p and k >= 1"))
            }
            GroupSpec::Product(ref a, ref b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    pub fn is_product(&self) -> bool {
        matches!(self, GroupSpec::Product(..))
    }

    pub fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
        GroupSpec::Product(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D:{n}"),
            GroupSpec::Quaternion(n) => write!(f, "Q:{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "Dic:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S:{n}"),
            GroupSpec::Alternating(n) => write!(f, "A:{n}"),
            GroupSpec::ExtraspecialExpP(p) => write!(f, "ESp:{p}"),
            GroupSpec::ExtraspecialExpP2(p) => write!(f, "ESm:{p}"),
            GroupSpec::X5(p) => write!(f, "X5:{p}"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "EA:{p}^{k}"),
            GroupSpec::Product(a, b) => {
                // right operands that are products need brackets to keep
                // left association on re-parse
                if b.is_product() {
                    write!(f, "{a} x ({b})")
                } else {
                    write!(f, "{a} x {b}")
                }
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}

/// Parses and validates a spec string.
pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut parser = Parser { src: text, pos: 0 };
    let spec = parser.expr()?;
    parser.skip_ws();
    if parser.pos < text.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    spec.validate()?;
    Ok(spec)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { column: self.pos + 1, message: message.to_string() }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn expr(&mut self) -> Result<GroupSpec> {
        let mut left = self.term()?;
        loop {
            self.skip_ws();
            let rest = self.rest();
            // `x` is the product operator only when followed by a separator
            let is_op = (rest.starts_with('x') || rest.starts_with('×'))
                && rest[rest.chars().next().unwrap().len_utf8()..]
                    .chars()
                    .next()
                    .is_none_or(|c| c.is_whitespace() || c == '(');
            if !is_op {
                break;
            }
            self.pos += rest.chars().next().unwrap().len_utf8();
            let right = self.term()?;
            left = GroupSpec::product(left, right);
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<GroupSpec> {
        self.skip_ws();
        if self.peek() == Some('(') {
            self.pos += 1;
            let inner = self.expr()?;
            self.skip_ws();
            if self.peek() != Some(')') {
                return Err(self.error("expected ')'"));
            }
            self.pos += 1;
            return Ok(inner);
        }
        let start = self.pos;
        let name_len = self.rest().chars().take_while(|c| c.is_ascii_alphanumeric()).map(char::len_utf8).sum::<usize>();
        if name_len == 0 {
            return Err(self.error("expected a group family name"));
        }
        let name = &self.src[start..start + name_len];
        self.pos += name_len;
        if self.peek() != Some(':') {
            return Err(self.error("expected ':' after family name"));
        }
        self.pos += 1;
        let param_start = self.pos;
        let a = self.number()?;
        let exponent = if self.peek() == Some('^') {
            self.pos += 1;
            Some(self.number()?)
        } else {
            None
        };
        let column = start + 1;
        let unknown = || Error::Parse { column, message: format!("unknown group family {name:?}") };
        let spec = match (name, exponent) {
            ("EA", Some(k)) => GroupSpec::ElementaryAbelian { p: a, k },
            ("EA", None) => GroupSpec::ElementaryAbelian { p: a, k: 1 },
            ("Q", Some(k)) => {
                GroupSpec::Quaternion(2u32.checked_pow(k).filter(|_| a == 2).ok_or_else(|| Error::Parse {
                    column: param_start + 1,
                    message: "Q takes 2^k or an order".into(),
                })?)
            }
            (_, Some(_)) => {
                return Err(Error::Parse { column: param_start + 1, message: format!("{name} takes a plain integer") })
            }
            ("C", None) => GroupSpec::Cyclic(a),
            ("D", None) => GroupSpec::Dihedral(a),
            ("Q", None) => GroupSpec::Quaternion(a),
            ("Dic", None) => GroupSpec::Dicyclic(a),
            ("S", None) => GroupSpec::Symmetric(a),
            ("A", None) => GroupSpec::Alternating(a),
            ("ESp", None) => GroupSpec::ExtraspecialExpP(a),
            ("ESm", None) => GroupSpec::ExtraspecialExpP2(a),
            ("X5", None) => GroupSpec::X5(a),
            _ => return Err(unknown()),
        };
        Ok(spec)
    }

    fn number(&mut self) -> Result<u32> {
        let digits: String = self.rest().chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        let value = digits.parse::<u32>().map_err(|_| self.error("number too large"))?;
        self.pos += digits.len();
        Ok(value)
    }
}
