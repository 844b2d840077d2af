//! Finite simplicial complexes and their simplicial chain complexes.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::chain::ChainComplex;
use crate::exactlin::{Matrix, RingSpec};
use crate::fpmod::{Decomposition, FpModule};

/// Largest simplex dimension accepted.
pub const MAX_DIMENSION: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("simplex of dimension {0} exceeds the cap of {MAX_DIMENSION}")]
    TooLarge(usize),
    #[error("empty facet")]
    EmptyFacet,
}

/// Downward-closed set of simplices, each a strictly increasing vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<Vec<usize>>,
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    pub fn from_facets<I, F>(facets: I) -> Result<Self, SimplicialError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let mut closure: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        let mut kept = BTreeSet::new();
        for facet in facets {
            let verts: BTreeSet<usize> = facet.into_iter().collect();
            if verts.is_empty() {
                return Err(SimplicialError::EmptyFacet);
            }
            let dim = verts.len() - 1;
            if dim > MAX_DIMENSION {
                return Err(SimplicialError::TooLarge(dim));
            }
            let verts: Vec<usize> = verts.into_iter().collect();
            if !kept.insert(verts.clone()) {
                continue;
            }
            if closure.len() <= dim {
                closure.resize(dim + 1, BTreeSet::new());
            }
            // every nonempty subset, by bitmask
            for mask in 1u32..(1 << verts.len()) {
                let face: Vec<usize> = (0..verts.len()).filter(|i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
                closure[face.len() - 1].insert(face);
            }
        }
        let simplices: Vec<Vec<Vec<usize>>> = closure.into_iter().map(|s| s.into_iter().collect()).collect();
        let vertices = simplices.first().map_or(0, |v| v.len());
        Ok(SimplicialComplex {
            vertices,
            facets: kept.into_iter().collect(),
            simplices,
        })
    }

    /// Number of distinct vertices.
    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    /// The `n`-simplices in lexicographic order.
    pub fn simplices(&self, n: usize) -> &[Vec<usize>] {
        self.simplices.get(n).map_or(&[], |s| s.as_slice())
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(|s| s.len()).collect()
    }

    /// Vertices renamed through `perm` (old label -> new label).
    pub fn relabeled(&self, perm: impl Fn(usize) -> usize) -> Result<Self, SimplicialError> {
        Self::from_facets(self.facets.iter().map(|f| f.iter().map(|&v| perm(v)).collect::<Vec<_>>()))
    }

    /// Disjoint union, the other complex's vertices shifted past ours.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.facets.iter().flatten().max().map_or(0, |m| m + 1);
        let facets = self
            .facets
            .iter()
            .cloned()
            .chain(other.facets.iter().map(|f| f.iter().map(|v| v + shift).collect()));
        Self::from_facets(facets).expect("union of valid complexes")
    }
}

/// `∂_n`: rows are `(n-1)`-simplices, columns `n`-simplices; the face
/// missing the `j`-th vertex gets `(-1)^j`.
pub fn boundary_matrix(k: &SimplicialComplex, n: usize) -> Matrix {
    let z = RingSpec::Integers;
    let cols = k.simplices(n);
    if n == 0 {
        return Matrix::zeros(&z, 0, cols.len());
    }
    let rows = k.simplices(n - 1);
    let index: BTreeMap<&[usize], usize> = rows.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut m = Matrix::zeros(&z, rows.len(), cols.len());
    for (c, sigma) in cols.iter().enumerate() {
        for j in 0..sigma.len() {
            let mut face = sigma.clone();
            face.remove(j);
            let r = index[face.as_slice()];
            m.set(r, c, if j % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Free chain complex in degrees `0..=dim` over `ring`.
pub fn chain_complex_of(k: &SimplicialComplex, ring: &RingSpec) -> ChainComplex {
    let Some(dim) = k.dimension() else {
        return ChainComplex::zero_complex(ring);
    };
    let modules = (0..=dim).map(|n| FpModule::free(ring, k.simplices(n).len())).collect();
    let maps = (1..=dim).map(|n| boundary_matrix(k, n).over(ring)).collect();
    ChainComplex::new(ring, 0, modules, maps).expect("boundary of a boundary is zero")
}

/// Homology decomposition per dimension `0..=dim`.
pub fn homology_report(k: &SimplicialComplex) -> Vec<Decomposition> {
    let c = chain_complex_of(k, &RingSpec::Integers);
    match k.dimension() {
        Some(dim) => (0..=dim as i64).map(|n| c.homology_module(n).decomposition().clone()).collect(),
        None => Vec::new(),
    }
}

/// `H0 = Z, H1 = 0, H2 = Z`.
pub fn format_report(report: &[Decomposition]) -> String {
    report
        .iter()
        .enumerate()
        .map(|(n, d)| format!("H{n} = {d}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Betti numbers and torsion coefficients per dimension.
pub fn betti_and_torsion(report: &[Decomposition]) -> Vec<(usize, Vec<BigInt>)> {
    report.iter().map(|d| (d.free_rank, d.invariant_factors.clone())).collect()
}

impl FromStr for SimplicialComplex {
    type Err = SimplicialError;

    /// One facet per line as whitespace-separated vertex indices; `#` starts a comment.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut facets = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let facet = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| SimplicialError::Parse {
                        line: i + 1,
                        message: format!("not a vertex index: {t:?}"),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            if facet.len() > MAX_DIMENSION + 1 {
                return Err(SimplicialError::Parse {
                    line: i + 1,
                    message: SimplicialError::TooLarge(facet.len() - 1).to_string(),
                });
            }
            facets.push(facet);
        }
        Self::from_facets(facets)
    }
}

/// Boundary of the 3-simplex.
pub fn hollow_tetrahedron() -> SimplicialComplex {
    SimplicialComplex::from_facets([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).expect("valid")
}

/// Boundary of a triangle.
pub fn circle() -> SimplicialComplex {
    SimplicialComplex::from_facets([[0, 1], [1, 2], [0, 2]]).expect("valid")
}

/// Six-vertex real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    SimplicialComplex::from_facets([
        [0, 1, 2], [0, 1, 5], [0, 2, 3], [0, 3, 4], [0, 4, 5],
        [1, 2, 4], [1, 3, 4], [1, 3, 5], [2, 3, 5], [2, 4, 5],
    ])
    .expect("valid")
}

/// Eight-vertex, sixteen-triangle Klein bottle.
pub fn klein_bottle() -> SimplicialComplex {
    SimplicialComplex::from_facets([
        [0, 1, 4], [0, 1, 7], [0, 2, 3], [0, 2, 6], [0, 3, 4], [0, 6, 7], [1, 2, 5], [1, 2, 7],
        [1, 4, 5], [2, 3, 5], [2, 4, 6], [2, 4, 7], [3, 4, 6], [3, 5, 6], [4, 5, 7], [5, 6, 7],
    ])
    .expect("valid")
}
