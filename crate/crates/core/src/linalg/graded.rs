use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// ℤ/2ℤ degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Option<Self> {
        match bit {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Self {
        self + Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// True when transposing homogeneous elements of parities `a`, `b` costs a sign.
pub fn koszul(a: Parity, b: Parity) -> bool {
    a.is_odd() && b.is_odd()
}

/// `x` negated iff `flip`.
pub fn signed(flip: bool, x: Scalar) -> Scalar {
    if flip {
        -x
    } else {
        x
    }
}

/// (even dimension, odd dimension).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedDim {
    pub even: usize,
    pub odd: usize,
}

impl GradedDim {
    pub const ZERO: GradedDim = GradedDim { even: 0, odd: 0 };

    pub fn new(even: usize, odd: usize) -> Self {
        GradedDim { even, odd }
    }

    /// Tensoring with the (0|1)-dimensional space exchanges the two parts.
    pub fn swap(self) -> Self {
        GradedDim { even: self.odd, odd: self.even }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }

    pub fn count(parities: impl IntoIterator<Item = Parity>) -> Self {
        parities.into_iter().fold(GradedDim::ZERO, |mut acc, p| {
            match p {
                Parity::Even => acc.even += 1,
                Parity::Odd => acc.odd += 1,
            }
            acc
        })
    }

    pub fn checked_sub(self, rhs: GradedDim) -> Option<GradedDim> {
        Some(GradedDim { even: self.even.checked_sub(rhs.even)?, odd: self.odd.checked_sub(rhs.odd)? })
    }
}

impl Add for GradedDim {
    type Output = GradedDim;
    fn add(self, rhs: GradedDim) -> GradedDim {
        GradedDim { even: self.even + rhs.even, odd: self.odd + rhs.odd }
    }
}

impl Sub for GradedDim {
    type Output = GradedDim;
    fn sub(self, rhs: GradedDim) -> GradedDim {
        self.checked_sub(rhs).expect("graded dimension underflow")
    }
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

/// A vector space with a labelled, parity-homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    labels: Vec<String>,
    parities: Vec<Parity>,
    index: HashMap<String, usize>,
}

impl GradedSpace {
    pub fn new(basis: impl IntoIterator<Item = (String, Parity)>) -> Result<Self> {
        let mut labels = Vec::new();
        let mut parities = Vec::new();
        let mut index = HashMap::new();
        for (label, parity) in basis {
            if index.insert(label.clone(), labels.len()).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
            labels.push(label);
            parities.push(parity);
        }
        Ok(GradedSpace { labels, parities, index })
    }

    /// Space with generated labels `prefix0, prefix1, …`.
    pub fn anonymous(prefix: &str, parities: Vec<Parity>) -> Self {
        let basis = parities.iter().enumerate().map(|(i, &p)| (format!("{prefix}{i}"), p));
        Self::new(basis.collect::<Vec<_>>()).expect("generated labels are unique")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn graded_dim(&self) -> GradedDim {
        GradedDim::count(self.parities.iter().copied())
    }
}
