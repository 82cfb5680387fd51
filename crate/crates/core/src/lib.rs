//! Landau-Ginzburg orbifolds of invertible polynomials: symmetry groups,
//! Milnor rings, state spaces, degree-gap verification, periods and the
//! Hochschild splitting for the Fermat cubic.

pub mod error;
pub mod hochschild;
pub mod milnor;
pub mod periods;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod series;
pub mod splitting;
pub mod state_space;
pub mod symmetry;

pub use error::{LgError, Result};
pub use hochschild::{
    a_action, canonical_splitting, cyclic_shuffle, equivariance_check, flat_extension, shuffle, CatalogWord,
    ChainCombination, SplittingClass,
};
pub use periods::{
    cubic_flat_coordinate, cubic_g_h, quintic_mirror_map, quintic_omegas, quintic_yukawa, CubicFlatStructure,
    QuinticPeriods,
};
pub use poly::{
    check_invertible, decompose_atomic, parse_polynomial, AtomicBlock, AtomicDecomposition, AtomicKind,
    ExponentMatrix, InvertiblePolynomial, Monomial, Polynomial, WeightSystem,
};
pub use milnor::{character, degree_of, milnor_basis, FamilyElement, GradedMonomialBasis, QuinticFamily};
pub use ratfunc::{RationalFunction, UniPoly};
pub use rational::{Rational, SmallRational};
pub use series::FormalPowerSeries;
pub use splitting::{splitting_obstruction_dims, verify_degree_gap, EquivarianceCertificate, Verdict};
pub use state_space::{localize, sector_report, OrbifoldStateSpace, Sector, SectorRow};
pub use symmetry::{
    fixed_locus, is_special_linear, max_symmetry_group, restrict_to_fixed_locus, subgroup, PhaseVector,
    SymmetryGroup,
};
