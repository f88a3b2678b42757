use std::fmt;

use crate::error::{Error, Result};

/// Element of the free group on `g` generators, as letters
/// `(generator index, ±1)` with zero-based indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    /// # Panics
    /// Panics if an exponent is not `±1`.
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        assert!(letters.iter().all(|&(_, e)| e == 1 || e == -1), "exponents must be ±1");
        FreeWord { letters }
    }

    pub fn generator(i: usize) -> Self {
        FreeWord::new(vec![(i, 1)])
    }

    /// `γ_i^k` for any integer `k`.
    pub fn power(i: usize, k: i64) -> Self {
        let e = if k < 0 { -1 } else { 1 };
        FreeWord::new(vec![(i, e); k.unsigned_abs() as usize])
    }

    /// The product `γ_0 γ_1 ... γ_{g-1}`.
    pub fn big_loop(g: usize) -> Self {
        FreeWord::new((0..g).map(|i| (i, 1)).collect())
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.0).max()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord { letters }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    /// `[a, b] = a b a^{-1} b^{-1}`.
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Free reduction: no adjacent cancelling pair remains.
    pub fn reduced(&self) -> FreeWord {
        let mut out: Vec<(usize, i8)> = Vec::with_capacity(self.letters.len());
        for &(i, e) in &self.letters {
            if out.last() == Some(&(i, -e)) {
                out.pop();
            } else {
                out.push((i, e));
            }
        }
        FreeWord { letters: out }
    }

    /// Parses whitespace-separated tokens `label`, `label^k` or `label^-k`
    /// against the generator labels. The empty string is the empty word.
    pub fn parse(src: &str, labels: &[String]) -> Result<FreeWord> {
        let mut letters = Vec::new();
        let mut column = 1;
        for token in src.split(' ') {
            let start = column;
            column += token.chars().count() + 1;
            if token.is_empty() {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let k: i64 = e.parse().map_err(|_| Error::Parse {
                        column: start + n.chars().count() + 1,
                        message: format!("bad exponent '{e}'"),
                    })?;
                    (n, k)
                }
                None => (token, 1),
            };
            let idx = labels.iter().position(|l| l == name).ok_or_else(|| Error::Parse {
                column: start,
                message: format!("unknown generator '{name}'"),
            })?;
            letters.extend(FreeWord::power(idx, exp).letters);
        }
        Ok(FreeWord { letters })
    }

    /// Text form using the given labels, parseable by [`FreeWord::parse`].
    pub fn render(&self, labels: &[String]) -> String {
        self.letters
            .iter()
            .map(|&(i, e)| {
                let name = labels.get(i).cloned().unwrap_or_else(|| format!("g{}", i + 1));
                if e < 0 {
                    format!("{name}^-1")
                } else {
                    name
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        f.write_str(&self.render(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels() -> Vec<String> {
        vec!["b1".into(), "0".into()]
    }

    #[test]
    fn reduction_cancels_pairs() {
        let w = FreeWord::new(vec![(0, 1), (1, 1), (1, -1), (0, -1), (1, 1)]);
        assert_eq!(w.reduced(), FreeWord::generator(1));
        let c = FreeWord::commutator(&FreeWord::generator(0), &FreeWord::generator(0));
        assert!(c.reduced().is_empty());
    }

    #[test]
    fn parsing_and_rendering() {
        let w = FreeWord::parse("b1 0^-1  0^2", &labels()).unwrap();
        assert_eq!(w.letters(), &[(0, 1), (1, -1), (1, 1), (1, 1)]);
        assert_eq!(FreeWord::parse(&w.render(&labels()), &labels()).unwrap(), w);
        assert!(FreeWord::parse("", &labels()).unwrap().is_empty());
        match FreeWord::parse("b1 x", &labels()) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("{other:?}"),
        }
    }
}
