use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::SuperAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{GradedSpace, Parity, SparseVec};
use crate::scalar::{FieldSpec, Scalar};

/// The built-in families of coordinate algebras.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// The field itself, dim (1|0).
    BaseField,
    /// Span of 1 (even) and ν (odd) with ν² = 1.
    Q1,
    /// Exterior algebra on k odd generators.
    Grassmann(usize),
    /// k[x]/(x^m).
    TruncatedPoly(usize),
    /// k[x]/(f) for a monic integer polynomial, coefficients from degree 0 up.
    Monogenic(Vec<i64>),
    /// k[t]/(t^m − 1).
    GroupAlgebra(usize),
    /// M_k with the trivial grading.
    Matrix(usize),
    /// k[x, y]/(x, y)².
    SquareZeroPlane,
}

impl Builtin {
    pub fn build(&self, field: FieldSpec) -> Result<SuperAlgebra> {
        let alg = match self {
            Builtin::BaseField => monogenic_table(field, &[0, 1], "1")?,
            Builtin::Q1 => q1(field),
            Builtin::Grassmann(k) => grassmann(field, *k)?,
            Builtin::TruncatedPoly(m) => {
                positive(*m, "truncated-poly")?;
                let mut f = vec![0; *m + 1];
                f[*m] = 1;
                monogenic_table(field, &f, "x")?
            }
            Builtin::Monogenic(f) => monogenic_table(field, f, "x")?,
            Builtin::GroupAlgebra(m) => {
                positive(*m, "group-algebra")?;
                let mut f = vec![0; *m + 1];
                f[0] = -1;
                f[*m] += 1;
                monogenic_table(field, &f, "t")?
            }
            Builtin::Matrix(k) => matrix(field, *k)?,
            Builtin::SquareZeroPlane => square_zero_plane(field),
        };
        let alg = alg.with_name(self.to_string());
        debug_assert!(alg.validate().is_empty(), "builtin {self} failed validation");
        Ok(alg)
    }

    /// Whether the family is commutative with trivial grading.
    pub fn is_plain_commutative(&self) -> bool {
        matches!(
            self,
            Builtin::BaseField
                | Builtin::TruncatedPoly(_)
                | Builtin::Monogenic(_)
                | Builtin::GroupAlgebra(_)
                | Builtin::SquareZeroPlane
        )
    }
}

fn positive(m: usize, family: &str) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParams(format!("{family} needs a positive parameter")));
    }
    Ok(())
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::BaseField => write!(f, "base-field"),
            Builtin::Q1 => write!(f, "q1"),
            Builtin::Grassmann(k) => write!(f, "grassmann({k})"),
            Builtin::TruncatedPoly(m) => write!(f, "truncated-poly({m})"),
            Builtin::Monogenic(c) => {
                let cs: Vec<String> = c.iter().map(ToString::to_string).collect();
                write!(f, "monogenic({})", cs.join(","))
            }
            Builtin::GroupAlgebra(m) => write!(f, "group-algebra({m})"),
            Builtin::Matrix(k) => write!(f, "matrix({k})"),
            Builtin::SquareZeroPlane => write!(f, "square-zero-plane"),
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    /// `family` or `family(args)`; monogenic takes coefficients from degree 0 up.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, args) = match s.split_once('(') {
            Some((fam, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::InvalidParams(format!("unbalanced parentheses in `{s}`")))?;
                (fam.trim(), Some(inner))
            }
            None => (s, None),
        };
        let ints = |args: Option<&str>| -> Result<Vec<i64>> {
            args.ok_or_else(|| Error::InvalidParams(format!("`{family}` needs parameters")))?
                .split(',')
                .map(|a| a.trim().parse::<i64>().map_err(|_| Error::InvalidParams(format!("bad parameter `{a}`"))))
                .collect()
        };
        let single = |args: Option<&str>| -> Result<usize> {
            match ints(args)?.as_slice() {
                [m] if *m >= 1 => Ok(*m as usize),
                _ => Err(Error::InvalidParams(format!("`{family}` takes one positive integer"))),
            }
        };
        let no_args = |b: Builtin| -> Result<Builtin> {
            match args {
                None => Ok(b),
                Some(_) => Err(Error::InvalidParams(format!("`{family}` takes no parameters"))),
            }
        };
        match family {
            "base-field" | "Q" | "k" => no_args(Builtin::BaseField),
            "q1" => no_args(Builtin::Q1),
            "square-zero-plane" => no_args(Builtin::SquareZeroPlane),
            "grassmann" => Ok(Builtin::Grassmann(single(args)?)),
            "truncated-poly" => Ok(Builtin::TruncatedPoly(single(args)?)),
            "group-algebra" => Ok(Builtin::GroupAlgebra(single(args)?)),
            "matrix" => Ok(Builtin::Matrix(single(args)?)),
            "monogenic" => Ok(Builtin::Monogenic(ints(args)?)),
            other => Err(Error::InvalidParams(format!("unknown algebra family `{other}`"))),
        }
    }
}

fn q1(field: FieldSpec) -> SuperAlgebra {
    let space =
        GradedSpace::new([("1".to_string(), Parity::Even), ("ν".to_string(), Parity::Odd)]).expect("distinct labels");
    let one = field.one();
    let mut products = BTreeMap::new();
    products.insert((0, 0), SparseVec::unit(0, one.clone()));
    products.insert((0, 1), SparseVec::unit(1, one.clone()));
    products.insert((1, 0), SparseVec::unit(1, one.clone()));
    products.insert((1, 1), SparseVec::unit(0, one.clone()));
    SuperAlgebra::unchecked("q1", field, space, products, SparseVec::unit(0, one))
}

fn grassmann(field: FieldSpec, k: usize) -> Result<SuperAlgebra> {
    positive(k, "grassmann")?;
    if k > 10 {
        return Err(Error::InvalidParams("grassmann supports at most 10 generators".into()));
    }
    let n = 1usize << k;
    let label = |mask: usize| -> String {
        if mask == 0 {
            return "1".into();
        }
        (0..k).filter(|g| mask >> g & 1 == 1).map(|g| format!("ξ{}", g + 1)).collect()
    };
    let basis: Vec<(String, Parity)> =
        (0..n).map(|mask| (label(mask), if mask.count_ones() % 2 == 1 { Parity::Odd } else { Parity::Even })).collect();
    let mut products = BTreeMap::new();
    for s in 0..n {
        for t in 0..n {
            if s & t != 0 {
                continue;
            }
            // ξ_S ξ_T = (−1)^{#{(a,b) : a∈S, b∈T, a>b}} ξ_{S∪T}
            let inversions: u32 = (0..k).filter(|a| s >> a & 1 == 1).map(|a| (t & ((1 << a) - 1)).count_ones()).sum();
            let x = if inversions % 2 == 1 { -field.one() } else { field.one() };
            products.insert((s, t), SparseVec::unit(s | t, x));
        }
    }
    Ok(SuperAlgebra::unchecked("grassmann", field, GradedSpace::new(basis)?, products, SparseVec::unit(0, field.one())))
}

/// k[x]/(f) on the basis 1, x, …, x^{d−1}.
fn monogenic_table(field: FieldSpec, f: &[i64], var: &str) -> Result<SuperAlgebra> {
    let d = f
        .len()
        .checked_sub(1)
        .filter(|d| *d >= 1)
        .ok_or_else(|| Error::InvalidParams("monogenic polynomial needs degree at least 1".into()))?;
    if f[d] != 1 {
        return Err(Error::InvalidParams(format!("polynomial {f:?} is not monic")));
    }
    let coeffs: Vec<Scalar> = f.iter().map(|c| field.from_i64(*c)).collect();
    let reduce = |mut poly: Vec<Scalar>| -> SparseVec {
        for top in (d..poly.len()).rev() {
            let lead = poly[top].clone();
            if lead.is_zero() {
                continue;
            }
            for (i, c) in coeffs.iter().enumerate() {
                let idx = top - d + i;
                poly[idx] = &poly[idx] - &(&lead * c);
            }
        }
        SparseVec::from_entries(poly.into_iter().take(d).enumerate())
    };
    let label = |e: usize| match e {
        0 => "1".to_string(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    };
    let basis: Vec<(String, Parity)> = (0..d).map(|e| (label(e), Parity::Even)).collect();
    let mut products = BTreeMap::new();
    for a in 0..d {
        for b in 0..d {
            let mut poly = vec![field.zero(); 2 * d - 1];
            poly[a + b] = field.one();
            products.insert((a, b), reduce(poly));
        }
    }
    Ok(SuperAlgebra::unchecked("monogenic", field, GradedSpace::new(basis)?, products, SparseVec::unit(0, field.one())))
}

fn matrix(field: FieldSpec, k: usize) -> Result<SuperAlgebra> {
    positive(k, "matrix")?;
    let label =
        |i: usize, j: usize| if k < 10 { format!("e{}{}", i + 1, j + 1) } else { format!("e{},{}", i + 1, j + 1) };
    let basis: Vec<(String, Parity)> =
        (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| (label(i, j), Parity::Even)).collect();
    let mut products = BTreeMap::new();
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                products.insert((i * k + j, j * k + l), SparseVec::unit(i * k + l, field.one()));
            }
        }
    }
    let unit = SparseVec::from_entries((0..k).map(|i| (i * k + i, field.one())));
    Ok(SuperAlgebra::unchecked("matrix", field, GradedSpace::new(basis)?, products, unit))
}

fn square_zero_plane(field: FieldSpec) -> SuperAlgebra {
    let basis = ["1", "x", "y"].map(|l| (l.to_string(), Parity::Even));
    let mut products = BTreeMap::new();
    for i in 0..3 {
        products.insert((0, i), SparseVec::unit(i, field.one()));
        products.insert((i, 0), SparseVec::unit(i, field.one()));
    }
    let space = GradedSpace::new(basis).expect("distinct labels");
    SuperAlgebra::unchecked("square-zero-plane", field, space, products, SparseVec::unit(0, field.one()))
}
