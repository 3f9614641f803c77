"""Exact computations with Hom-alternative and Hom-Malcev algebras."""

from .scalars import (ParameterContext, Polynomial, Scalar, ScalarError, SingularSpecialization,
                      ExpressionError, parse_expression, scalar_arith, scalar_eq, substitute,
                      truncate_in_t)
from .linalg import (Matrix, SubspaceBasis, column_space, inverse, nullspace, quotient_dim, rank,
                     rref, subspace_contains)
from .core import (AlgebraError, CheckReport, HomAlgebra, LinearMap, MultiplicationTable,
                   check_alternating_associator, check_endomorphism, check_identity, check_morphism,
                   commutator_algebra, evaluate_mu, hom_associator, hom_jacobiator, opposite_algebra)
from .deform import (FormalAutomorphism, FormalDeformation, TwistError, algebra_to_deformation,
                     apply_equivalence, check_deformation_equation, composition_deformation,
                     deformation_to_algebra, derived_algebra, untwist, yau_twist)
from .cohomology import (H2Report, TwoCochain, delta1, delta2, derivation_space, family_vectors,
                         h2_report, two_coboundary_space, two_cocycle_space, verify_cochain)
from .specfile import SpecError, format_spec, parse_spec
from .catalog import load_algebra, load_map, load_table

__version__ = "0.1.0"
