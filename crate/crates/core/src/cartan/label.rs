//! Cartan/Coxeter type labels such as `A2`, `E8`, `I5`, `A1xA1` and twisted `3D4`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Zphi;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
            Family::H => 'H',
            Family::I => 'I',
        }
    }
}

/// An irreducible finite Coxeter type. For `I` the parameter is `m`, otherwise the rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub family: Family,
    pub n: usize,
}

impl SimpleType {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let ok = match family {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
            Family::H => n == 3 || n == 4,
            Family::I => n >= 3,
        };
        if ok {
            Ok(SimpleType { family, n })
        } else {
            Err(Error::UnknownType(format!("{}{}", family.letter(), n)))
        }
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::I => 2,
            _ => self.n,
        }
    }

    /// Weyl groups of root systems; `H` and `I` are realized only as Coxeter groups.
    pub fn is_crystallographic(&self) -> bool {
        !matches!(self.family, Family::H | Family::I)
    }

    pub fn is_dihedral(&self) -> bool {
        self.family == Family::I
    }

    pub fn group_order(&self) -> u128 {
        let n = self.n as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
            Family::H => {
                if n == 3 {
                    120
                } else {
                    14_400
                }
            }
            Family::I => 2 * n,
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.n;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
            Family::F => 24,
            Family::G => 6,
            Family::H => {
                if n == 3 {
                    15
                } else {
                    60
                }
            }
            Family::I => n,
        }
    }

    /// Bourbaki Cartan matrix `A[i][j] = ⟨α_i∨, α_j⟩`; for `H` the symmetric
    /// geometric-representation matrix with entries `−2cos(π/m_ij)`.
    /// `None` for dihedral types, which are handled combinatorially.
    pub fn cartan_matrix(&self) -> Option<Vec<Vec<Zphi>>> {
        let r = self.rank();
        let mut a = vec![vec![Zphi::ZERO; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = Zphi::int(2);
        }
        let mut link = |i: usize, j: usize, aij: Zphi, aji: Zphi| {
            a[i - 1][j - 1] = aij;
            a[j - 1][i - 1] = aji;
        };
        let m1 = Zphi::int(-1);
        let m2 = Zphi::int(-2);
        let m3 = Zphi::int(-3);
        let mphi = -Zphi::PHI;
        match self.family {
            Family::A => (1..r).for_each(|i| link(i, i + 1, m1, m1)),
            Family::B => {
                (1..r - 1).for_each(|i| link(i, i + 1, m1, m1));
                link(r - 1, r, m1, m2);
            }
            Family::C => {
                (1..r - 1).for_each(|i| link(i, i + 1, m1, m1));
                link(r - 1, r, m2, m1);
            }
            Family::D => {
                (1..r - 1).for_each(|i| link(i, i + 1, m1, m1));
                link(r - 2, r, m1, m1);
            }
            Family::E => {
                link(1, 3, m1, m1);
                link(2, 4, m1, m1);
                (3..r).for_each(|i| link(i, i + 1, m1, m1));
            }
            Family::F => {
                link(1, 2, m1, m1);
                link(2, 3, m1, m2);
                link(3, 4, m1, m1);
            }
            Family::G => link(1, 2, m3, m1),
            Family::H => {
                link(1, 2, mphi, mphi);
                (2..r).for_each(|i| link(i, i + 1, m1, m1));
            }
            Family::I => return None,
        }
        Some(a)
    }

    /// Coxeter matrix `m_ij` (with `m_ii = 1`).
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let r = self.rank();
        if self.family == Family::I {
            let m = self.n as u32;
            return vec![vec![1, m], vec![m, 1]];
        }
        let a = self.cartan_matrix().expect("non-dihedral");
        let mut m = vec![vec![2u32; r]; r];
        for i in 0..r {
            m[i][i] = 1;
            for j in 0..r {
                if i == j {
                    continue;
                }
                let p = a[i][j] * a[j][i];
                m[i][j] = if p == Zphi::ZERO {
                    2
                } else if p == Zphi::ONE {
                    3
                } else if p == Zphi::int(2) {
                    4
                } else if p == Zphi::int(3) {
                    6
                } else if p == Zphi::new(1, 1) {
                    5
                } else {
                    unreachable!("unexpected Cartan product {p}")
                };
            }
        }
        m
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.n)
    }
}

/// A product of irreducible finite types, e.g. `A1xA1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType(pub Vec<SimpleType>);

impl CartanType {
    pub fn simple(family: Family, n: usize) -> Result<Self> {
        Ok(CartanType(vec![SimpleType::new(family, n)?]))
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(SimpleType::rank).sum()
    }

    pub fn group_order(&self) -> u128 {
        self.0.iter().map(SimpleType::group_order).product()
    }

    pub fn is_crystallographic(&self) -> bool {
        self.0.iter().all(SimpleType::is_crystallographic)
    }

    pub fn is_irreducible(&self) -> bool {
        self.0.len() == 1
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn parse_simple(s: &str, whole: &str) -> Result<SimpleType> {
    let mut chars = s.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::MalformedLabel(whole.to_string()))?;
    let family = match letter.to_ascii_uppercase() {
        'A' => Family::A,
        'B' => Family::B,
        'C' => Family::C,
        'D' => Family::D,
        'E' => Family::E,
        'F' => Family::F,
        'G' => Family::G,
        'H' => Family::H,
        'I' => Family::I,
        _ => return Err(Error::UnknownType(s.to_string())),
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::MalformedLabel(whole.to_string()));
    }
    let n: usize = digits
        .parse()
        .map_err(|_| Error::MalformedLabel(whole.to_string()))?;
    SimpleType::new(family, n)
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let label: TypeLabel = s.parse()?;
        if label.twist.is_some() {
            return Err(Error::MalformedLabel(format!(
                "{s}: twisted labels describe an automorphism, not a root system"
            )));
        }
        Ok(label.cartan)
    }
}

/// A type label possibly carrying a twist order prefix (`2A3`, `3D4`, `2F4`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeLabel {
    pub cartan: CartanType,
    pub twist: Option<u32>,
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::MalformedLabel(s.to_string()));
        }
        let prefix_len = t.chars().take_while(|c| c.is_ascii_digit()).count();
        let (prefix, rest) = t.split_at(prefix_len);
        let twist = if prefix.is_empty() {
            None
        } else {
            let k: u32 = prefix
                .parse()
                .map_err(|_| Error::MalformedLabel(s.to_string()))?;
            if k < 2 {
                return Err(Error::MalformedLabel(s.to_string()));
            }
            Some(k)
        };
        let parts: Vec<&str> = rest.split(['x', '×', '*']).collect();
        if parts.iter().any(|p| p.is_empty()) {
            return Err(Error::MalformedLabel(s.to_string()));
        }
        let comps = parts
            .iter()
            .map(|p| parse_simple(p, s))
            .collect::<Result<Vec<_>>>()?;
        if twist.is_some() && comps.len() != 1 {
            return Err(Error::MalformedLabel(format!(
                "{s}: twist prefixes apply to irreducible types only"
            )));
        }
        Ok(TypeLabel {
            cartan: CartanType(comps),
            twist,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products_and_twists() {
        let t: CartanType = "A1xA1".parse().unwrap();
        assert_eq!(t.rank(), 2);
        assert_eq!(t.to_string(), "A1xA1");
        let l: TypeLabel = "3D4".parse().unwrap();
        assert_eq!(l.twist, Some(3));
        assert_eq!(l.cartan.to_string(), "D4");
        let i: CartanType = "I12".parse().unwrap();
        assert_eq!(i.components()[0].n, 12);
    }

    #[test]
    fn rejects_bad_labels() {
        assert!(matches!("Z3".parse::<CartanType>(), Err(Error::UnknownType(_))));
        assert!(matches!("E9".parse::<CartanType>(), Err(Error::UnknownType(_))));
        assert!(matches!("A".parse::<CartanType>(), Err(Error::MalformedLabel(_))));
        assert!(matches!("A2x".parse::<CartanType>(), Err(Error::MalformedLabel(_))));
        assert!("2A3".parse::<CartanType>().is_err());
    }

    #[test]
    fn coxeter_matrices() {
        let h3 = SimpleType::new(Family::H, 3).unwrap().coxeter_matrix();
        assert_eq!(h3[0][1], 5);
        assert_eq!(h3[1][2], 3);
        let g2 = SimpleType::new(Family::G, 2).unwrap().coxeter_matrix();
        assert_eq!(g2[0][1], 6);
        let f4 = SimpleType::new(Family::F, 4).unwrap().coxeter_matrix();
        assert_eq!(f4[1][2], 4);
        let e6 = SimpleType::new(Family::E, 6).unwrap().coxeter_matrix();
        assert_eq!(e6[1][3], 3);
        assert_eq!(e6[0][1], 2);
    }
}
