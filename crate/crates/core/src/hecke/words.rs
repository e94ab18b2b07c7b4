use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// One letter of a word in the generators of the Party-Hecke algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    G(usize),
    Ginv(usize),
    F(usize),
    Fij(usize, usize),
    Gij(usize, usize),
    H(usize),
    T(usize),
}

impl Letter {
    /// Largest point touched by the letter.
    pub fn support_max(&self) -> usize {
        match *self {
            Letter::G(i) | Letter::Ginv(i) | Letter::F(i) | Letter::H(i) | Letter::T(i) => i + 1,
            Letter::Fij(_, j) | Letter::Gij(_, j) => j,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::G(i) => write!(f, "G{i}"),
            Letter::Ginv(i) => write!(f, "Ginv{i}"),
            Letter::F(i) => write!(f, "F{i}"),
            Letter::Fij(i, j) => write!(f, "F({i},{j})"),
            Letter::Gij(i, j) => write!(f, "G({i},{j})"),
            Letter::H(i) => write!(f, "H{i}"),
            Letter::T(i) => write!(f, "T{i}"),
        }
    }
}

/// A word such as `G1 Ginv2 F(1,3) T1`, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorWord {
    pub letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    /// Check every index fits `n` points.
    pub fn validate(&self, n: usize) -> Result<(), AlgebraError> {
        for l in &self.letters {
            let ok = match *l {
                Letter::Fij(i, j) | Letter::Gij(i, j) => i >= 1 && i < j && j <= n,
                _ => l.support_max() >= 2 && l.support_max() <= n,
            };
            if !ok {
                return Err(AlgebraError::IndexOutOfRange(format!("{l} for n={n}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorWord {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, AlgebraError> {
        let bad = |msg: &str| AlgebraError::Parse(format!("{msg} in word {s:?}"));
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let mut letters = Vec::new();
        let number = |pos: &mut usize| -> Option<usize> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            chars[start..*pos].iter().collect::<String>().parse().ok()
        };
        while pos < chars.len() {
            let c = chars[pos];
            if c.is_whitespace() || c == '*' || c == ',' || c == '.' {
                pos += 1;
                continue;
            }
            if c == '1' && letters.is_empty() && chars[pos + 1..].iter().all(|c| c.is_whitespace()) {
                break;
            }
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_alphabetic() {
                pos += 1;
            }
            let name: String = chars[start..pos].iter().collect();
            if name.is_empty() {
                return Err(bad("expected a generator name"));
            }
            if pos < chars.len() && chars[pos] == '_' {
                pos += 1;
            }
            let letter = if pos < chars.len() && chars[pos] == '(' {
                pos += 1;
                let i = number(&mut pos).ok_or_else(|| bad("expected an index"))?;
                while pos < chars.len() && chars[pos] == ' ' {
                    pos += 1;
                }
                if pos >= chars.len() || chars[pos] != ',' {
                    return Err(bad("expected ','"));
                }
                pos += 1;
                while pos < chars.len() && chars[pos] == ' ' {
                    pos += 1;
                }
                let j = number(&mut pos).ok_or_else(|| bad("expected an index"))?;
                if pos >= chars.len() || chars[pos] != ')' {
                    return Err(bad("expected ')'"));
                }
                pos += 1;
                match name.as_str() {
                    "F" => Letter::Fij(i, j),
                    "G" => Letter::Gij(i, j),
                    _ => return Err(bad("only F and G take a pair of indices")),
                }
            } else {
                let i = number(&mut pos).ok_or_else(|| bad("expected an index"))?;
                match name.as_str() {
                    "G" => Letter::G(i),
                    "Ginv" => Letter::Ginv(i),
                    "F" => Letter::F(i),
                    "H" => Letter::H(i),
                    "T" => Letter::T(i),
                    _ => return Err(bad(&format!("unknown generator {name}"))),
                }
            };
            letters.push(letter);
        }
        Ok(Self { letters })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let w: GeneratorWord = "G1 Ginv2*F(1,3) G(2,4) H_1 T2".parse().unwrap();
        assert_eq!(w.letters.len(), 6);
        assert_eq!(w.to_string(), "G1 Ginv2 F(1,3) G(2,4) H1 T2");
        assert_eq!(w.to_string().parse::<GeneratorWord>().unwrap(), w);
        assert!("G1G2".parse::<GeneratorWord>().unwrap().letters.len() == 2);
        assert!("".parse::<GeneratorWord>().unwrap().letters.is_empty());
        assert!("X1".parse::<GeneratorWord>().is_err());
        assert!("G3".parse::<GeneratorWord>().unwrap().validate(3).is_err());
    }
}
