use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::RootSystem;
use crate::error::{Error, Result};

/// Hard cap on the number of reduced words produced by one enumeration.
pub const DEFAULT_WORD_BUDGET: u64 = 1_000_000;

/// A word in the simple reflections, letters counted from 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        ReducedWord { letters }
    }

    /// Letters separated by commas and/or whitespace.
    pub fn parse(s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad letter: {t}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(ReducedWord { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &ReducedWord) -> ReducedWord {
        let mut l = self.letters.clone();
        l.extend_from_slice(&other.letters);
        ReducedWord { letters: l }
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for ReducedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ReducedWord::parse(s)
    }
}

struct Frame {
    /// `w⁻¹ρ` for the current prefix `w`; a letter extends the prefix
    /// reducedly iff its coordinate here is positive.
    mu: Vec<i64>,
    next: usize,
}

/// Depth-first enumeration of the reduced words of the longest element,
/// lexicographic, failing once more than `budget` words have been produced.
pub struct ReducedWords<'a> {
    rs: &'a RootSystem,
    stack: Vec<Frame>,
    word: Vec<usize>,
    produced: u64,
    budget: u64,
    done: bool,
}

impl<'a> ReducedWords<'a> {
    pub(crate) fn new(rs: &'a RootSystem, budget: u64) -> Self {
        ReducedWords {
            rs,
            stack: vec![Frame {
                mu: vec![1; rs.rank()],
                next: 0,
            }],
            word: Vec::new(),
            produced: 0,
            budget,
            done: false,
        }
    }
}

impl Iterator for ReducedWords<'_> {
    type Item = Result<ReducedWord>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let n = self.rs.n_positive();
        loop {
            if self.word.len() == n {
                let w = ReducedWord::new(self.word.clone());
                self.stack.pop();
                self.word.pop();
                self.produced += 1;
                if self.produced > self.budget {
                    self.done = true;
                    return Some(Err(Error::BudgetExceeded {
                        what: "reduced words",
                        budget: self.budget,
                    }));
                }
                return Some(Ok(w));
            }
            let Some(top) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            match (top.next..top.mu.len()).find(|&i| top.mu[i] > 0) {
                Some(i) => {
                    top.next = i + 1;
                    let mut mu = top.mu.clone();
                    self.rs.reflect_int(i, &mut mu);
                    self.stack.push(Frame { mu, next: 0 });
                    self.word.push(i + 1);
                }
                None => {
                    self.stack.pop();
                    self.word.pop();
                }
            }
        }
    }
}
