//! Homology-level model of closed and relative trisection diagrams.
//!
//! A curve is recorded by its class in `H₁(Σ_{g,b}) ≅ Z^{2g+b−1}`; a family is
//! the list of classes of its curves. Validation checks the homological
//! consequences of each pair of families forming a standard (sutured)
//! Heegaard diagram. Passing validation is necessary for a genuine trisection
//! diagram but not sufficient.

mod params;
mod surface;
mod validate;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

pub use params::DiagramParams;
pub use surface::SurfaceModel;
pub use validate::{validate_diagram, ValidationReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("{context}: expected {expected} coordinates, found {found}")]
    Shape {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("surface Σ_{{{surface_genus},{surface_boundary}}} does not match parameters {params}")]
    SurfaceMismatch {
        surface_genus: usize,
        surface_boundary: usize,
        params: DiagramParams,
    },
    #[error("cannot slide {family} curve {index} over itself")]
    SelfSlide { family: FamilyLabel, index: usize },
    #[error("{family} has {len} curves, index {index} is out of range")]
    BadIndex {
        family: FamilyLabel,
        index: usize,
        len: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyLabel {
    Alpha,
    Beta,
    Gamma,
}

impl FamilyLabel {
    pub const ALL: [FamilyLabel; 3] = [FamilyLabel::Alpha, FamilyLabel::Beta, FamilyLabel::Gamma];

    /// The three Heegaard pairs, in the order (α,β), (β,γ), (γ,α).
    pub const PAIRS: [(FamilyLabel, FamilyLabel); 3] = [
        (FamilyLabel::Alpha, FamilyLabel::Beta),
        (FamilyLabel::Beta, FamilyLabel::Gamma),
        (FamilyLabel::Gamma, FamilyLabel::Alpha),
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyLabel::Alpha => "alpha",
            FamilyLabel::Beta => "beta",
            FamilyLabel::Gamma => "gamma",
        }
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "alpha" | "a" => Ok(FamilyLabel::Alpha),
            "beta" | "b" => Ok(FamilyLabel::Beta),
            "gamma" | "c" | "g" => Ok(FamilyLabel::Gamma),
            other => Err(format!("unknown curve family {other:?}")),
        }
    }
}

/// Homology class of one curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveClass(Vec<BigInt>);

impl CurveClass {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<BigInt>> for CurveClass {
    fn from(v: Vec<BigInt>) -> Self {
        Self(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveFamily {
    label: FamilyLabel,
    members: Vec<CurveClass>,
}

impl CurveFamily {
    pub fn new(label: FamilyLabel, members: Vec<CurveClass>) -> Self {
        Self { label, members }
    }

    pub fn label(&self) -> FamilyLabel {
        self.label
    }

    pub fn members(&self) -> &[CurveClass] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn vectors(&self) -> Vec<Vec<BigInt>> {
        self.members.iter().map(|c| c.coords().to_vec()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlideSign {
    Plus,
    Minus,
}

impl SlideSign {
    pub fn from_sign(sign: i64) -> Option<Self> {
        match sign {
            1 => Some(SlideSign::Plus),
            -1 => Some(SlideSign::Minus),
            _ => None,
        }
    }
}

/// A (relative) trisection diagram at the level of homology classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    name: String,
    surface: SurfaceModel,
    params: DiagramParams,
    alpha: CurveFamily,
    beta: CurveFamily,
    gamma: CurveFamily,
}

impl Diagram {
    /// Builds a diagram, checking only structural well-formedness: the
    /// surface matches the parameters and every vector has length `h1_rank`.
    /// Use [`validate_diagram`] for the trisection conditions.
    pub fn new(
        name: impl Into<String>,
        surface: SurfaceModel,
        params: DiagramParams,
        alpha: Vec<CurveClass>,
        beta: Vec<CurveClass>,
        gamma: Vec<CurveClass>,
    ) -> Result<Self, DiagramError> {
        if surface.genus() != params.g || surface.boundary_count() != params.b {
            return Err(DiagramError::SurfaceMismatch {
                surface_genus: surface.genus(),
                surface_boundary: surface.boundary_count(),
                params,
            });
        }
        let rank = surface.h1_rank();
        for (label, members) in [
            (FamilyLabel::Alpha, &alpha),
            (FamilyLabel::Beta, &beta),
            (FamilyLabel::Gamma, &gamma),
        ] {
            for (i, c) in members.iter().enumerate() {
                if c.len() != rank {
                    return Err(DiagramError::Shape {
                        context: format!("{label} curve {}", i + 1),
                        expected: rank,
                        found: c.len(),
                    });
                }
            }
        }
        Ok(Self {
            name: name.into(),
            surface,
            params,
            alpha: CurveFamily::new(FamilyLabel::Alpha, alpha),
            beta: CurveFamily::new(FamilyLabel::Beta, beta),
            gamma: CurveFamily::new(FamilyLabel::Gamma, gamma),
        })
    }

    /// Like [`new`](Self::new) with the surface derived from the parameters.
    pub fn from_params(
        name: impl Into<String>,
        params: DiagramParams,
        alpha: Vec<CurveClass>,
        beta: Vec<CurveClass>,
        gamma: Vec<CurveClass>,
    ) -> Result<Self, DiagramError> {
        Self::new(name, SurfaceModel::new(params.g, params.b), params, alpha, beta, gamma)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn surface(&self) -> &SurfaceModel {
        &self.surface
    }

    pub fn params(&self) -> DiagramParams {
        self.params
    }

    pub fn is_closed(&self) -> bool {
        self.params.is_closed()
    }

    pub fn family(&self, label: FamilyLabel) -> &CurveFamily {
        match label {
            FamilyLabel::Alpha => &self.alpha,
            FamilyLabel::Beta => &self.beta,
            FamilyLabel::Gamma => &self.gamma,
        }
    }

    pub fn alpha(&self) -> &CurveFamily {
        &self.alpha
    }

    pub fn beta(&self) -> &CurveFamily {
        &self.beta
    }

    pub fn gamma(&self) -> &CurveFamily {
        &self.gamma
    }

    /// Equality of everything except the name.
    pub fn same_data(&self, other: &Diagram) -> bool {
        self.surface == other.surface
            && self.params == other.params
            && self.alpha == other.alpha
            && self.beta == other.beta
            && self.gamma == other.gamma
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.params.euler_characteristic()
    }

    /// Handleslide at the level of homology: curve `i` of `family` becomes
    /// `curve_i ± curve_j`. Indices are 0-based.
    pub fn slide(
        &self,
        family: FamilyLabel,
        i: usize,
        j: usize,
        sign: SlideSign,
    ) -> Result<Diagram, DiagramError> {
        let fam = self.family(family);
        for index in [i, j] {
            if index >= fam.len() {
                return Err(DiagramError::BadIndex {
                    family,
                    index,
                    len: fam.len(),
                });
            }
        }
        if i == j {
            return Err(DiagramError::SelfSlide { family, index: i });
        }
        let mut members = fam.members.clone();
        let other = members[j].coords().to_vec();
        for (x, y) in members[i].0.iter_mut().zip(&other) {
            match sign {
                SlideSign::Plus => *x += y,
                SlideSign::Minus => *x -= y,
            }
        }
        let mut out = self.clone();
        let slot = match family {
            FamilyLabel::Alpha => &mut out.alpha,
            FamilyLabel::Beta => &mut out.beta,
            FamilyLabel::Gamma => &mut out.gamma,
        };
        slot.members = members;
        Ok(out)
    }

    /// Replaces one family wholesale. Vector lengths are rechecked.
    pub fn with_family(
        &self,
        label: FamilyLabel,
        members: Vec<CurveClass>,
    ) -> Result<Diagram, DiagramError> {
        let mut fams = [
            self.alpha.members.clone(),
            self.beta.members.clone(),
            self.gamma.members.clone(),
        ];
        fams[label as usize] = members;
        let [a, b, c] = fams;
        Diagram::new(self.name.clone(), self.surface, self.params, a, b, c)
    }
}
