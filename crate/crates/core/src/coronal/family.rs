//! Parameterised digraph families with closed-form coronals.

use std::fmt;

use serde::Serialize;

use super::{
    coronal_constant_rowsum, coronal_fullside_bipartite, coronal_join_outregular, coronal_path,
    coronal_semiregular_bipartite,
};
use crate::algebra::ratfunc::RationalFunction;
use crate::algebra::scalar;
use crate::digraph::{Digraph, MatrixKind};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// An `r`-out-regular digraph on `n` vertices. Its `A`, `L` and `Q`
    /// matrices have constant row sums `r`, `0` and `2r`.
    ConstantRowSum { n: usize, r: usize },
    /// Join of `r_i`-out-regular digraphs on `n_i` vertices.
    Join { parts: Vec<(usize, usize)> },
    /// Bipartite with side sizes `n1`, `n2` and out-degrees `r1`, `r2`.
    SemiRegularBipartite { n1: usize, n2: usize, r1: usize, r2: usize },
    /// Side 1 points to all of side 2; side 2 sends `k` arcs back.
    FullSideBipartite { n1: usize, n2: usize, k: usize },
    Path { n: usize },
}

fn bad(spec: &str) -> Error {
    Error::Domain(format!(
        "cannot parse family {spec:?}; expected rowsum:N,R | join:N,R;N,R;... | \
         semireg:N1,N2,R1,R2 | fullside:N1,N2,K | path:N"
    ))
}

/// `r`-out-regular circulant: `i → i+1, …, i+r (mod n)`.
fn circulant(n: usize, r: usize) -> Result<Digraph> {
    Digraph::new(n, (0..n).flat_map(|i| (1..=r).map(move |s| (i, (i + s) % n))))
}

impl FamilySpec {
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::ConstantRowSum { n, .. } | FamilySpec::Path { n } => *n,
            FamilySpec::Join { parts } => parts.iter().map(|p| p.0).sum(),
            FamilySpec::SemiRegularBipartite { n1, n2, .. }
            | FamilySpec::FullSideBipartite { n1, n2, .. } => n1 + n2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            FamilySpec::ConstantRowSum { n, r } => *n >= 1 && r < n,
            FamilySpec::Join { parts } => {
                !parts.is_empty() && parts.iter().all(|&(n, r)| n >= 1 && r < n)
            }
            FamilySpec::SemiRegularBipartite { n1, n2, r1, r2 } => {
                *n1 >= 1 && *n2 >= 1 && r1 <= n2 && r2 <= n1
            }
            FamilySpec::FullSideBipartite { n1, n2, k } => *n1 >= 1 && *n2 >= 1 && *k <= n1 * n2,
            FamilySpec::Path { n } => *n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("invalid family parameters {self}")))
        }
    }

    /// One concrete digraph with these parameters.
    pub fn instance(&self) -> Result<Digraph> {
        self.validate()?;
        match self {
            FamilySpec::ConstantRowSum { n, r } => circulant(*n, *r),
            FamilySpec::Join { parts } => {
                let mut it = parts.iter();
                let &(n, r) = it.next().expect("validated");
                let mut d = circulant(n, r)?;
                for &(n, r) in it {
                    d = d.join(&circulant(n, r)?);
                }
                Ok(d)
            }
            FamilySpec::SemiRegularBipartite { n1, n2, r1, r2 } => {
                let (n1, n2) = (*n1, *n2);
                let forward = (0..n1).flat_map(|i| (0..*r1).map(move |t| (i, n1 + (i + t) % n2)));
                let back = (0..n2).flat_map(|j| (0..*r2).map(move |t| (n1 + j, (j + t) % n1)));
                Digraph::new(n1 + n2, forward.chain(back))
            }
            FamilySpec::FullSideBipartite { n1, n2, k } => {
                let (n1, n2) = (*n1, *n2);
                let forward = (0..n1).flat_map(|i| (0..n2).map(move |j| (i, n1 + j)));
                let back = (0..n2).flat_map(|j| (0..n1).map(move |i| (n1 + j, i))).take(*k);
                Digraph::new(n1 + n2, forward.chain(back))
            }
            FamilySpec::Path { n } => Ok(Digraph::path(*n)),
        }
    }

    /// The closed-form coronal. Every `L` coronal is `n/λ`; the full-side
    /// bipartite family only has an adjacency formula.
    pub fn coronal(&self, kind: MatrixKind) -> Result<RationalFunction> {
        self.validate()?;
        if kind == MatrixKind::L {
            return coronal_constant_rowsum(self.vertex_count(), &scalar::zero());
        }
        match self {
            FamilySpec::ConstantRowSum { n, r } => {
                let t = if kind == MatrixKind::A { *r } else { 2 * r };
                coronal_constant_rowsum(*n, &scalar::int(t as i64))
            }
            FamilySpec::Join { parts } => coronal_join_outregular(parts, kind),
            FamilySpec::SemiRegularBipartite { n1, n2, r1, r2 } => {
                coronal_semiregular_bipartite(*n1, *n2, *r1, *r2, kind)
            }
            FamilySpec::FullSideBipartite { n1, n2, k } => {
                if kind == MatrixKind::Q {
                    return Err(Error::Domain(
                        "no closed-form Q coronal for the full-side bipartite family".into(),
                    ));
                }
                coronal_fullside_bipartite(*n1, *n2, *k)
            }
            FamilySpec::Path { n } => coronal_path(*n, kind),
        }
    }

    pub fn parse(spec: &str) -> Result<Self> {
        let (name, args) = spec.split_once(':').ok_or_else(|| bad(spec))?;
        let nums = |s: &str| -> Result<Vec<usize>> {
            s.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad(spec)))
                .collect()
        };
        let parsed = match (name.trim(), nums(args).as_deref()) {
            ("rowsum", Ok(&[n, r])) => FamilySpec::ConstantRowSum { n, r },
            ("semireg", Ok(&[n1, n2, r1, r2])) => FamilySpec::SemiRegularBipartite { n1, n2, r1, r2 },
            ("fullside", Ok(&[n1, n2, k])) => FamilySpec::FullSideBipartite { n1, n2, k },
            ("path", Ok(&[n])) => FamilySpec::Path { n },
            ("join", _) => {
                let parts = args
                    .split(';')
                    .map(|p| match nums(p)?.as_slice() {
                        &[n, r] => Ok((n, r)),
                        _ => Err(bad(spec)),
                    })
                    .collect::<Result<Vec<_>>>()?;
                FamilySpec::Join { parts }
            }
            _ => return Err(bad(spec)),
        };
        parsed.validate()?;
        Ok(parsed)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::ConstantRowSum { n, r } => write!(f, "rowsum:{n},{r}"),
            FamilySpec::Join { parts } => {
                let parts: Vec<String> = parts.iter().map(|(n, r)| format!("{n},{r}")).collect();
                write!(f, "join:{}", parts.join(";"))
            }
            FamilySpec::SemiRegularBipartite { n1, n2, r1, r2 } => {
                write!(f, "semireg:{n1},{n2},{r1},{r2}")
            }
            FamilySpec::FullSideBipartite { n1, n2, k } => write!(f, "fullside:{n1},{n2},{k}"),
            FamilySpec::Path { n } => write!(f, "path:{n}"),
        }
    }
}
