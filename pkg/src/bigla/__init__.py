"""Exact symbolic kernel for bi-graded Lie algebras over Q(zeta8)."""

from .scalars import (ALL_DEGREES, BiDegree, CycloScalar, D00, D01, D10, D11,
                      I, MINUS_ONE, ONE, Rational, ZERO, ZETA, degree,
                      sign_deligne, sign_super, sign_unbraid)
from .linear import (AntiLinearMap, BiGradedSpace, BilinearMap, LinearMap,
                     Vector, apply_bilinear)
from .linalg import Echelon, Matrix, nullspace_of_rows, rank_of_rows, solve_dense
from .lie import (AlgebraMorphism, BiGradedAssocAlgebra, BiGradedLieAlgebra,
                  CartanPairReport, cartan_pair, check_antisymmetry,
                  check_homogeneity, check_jacobi, check_lie, check_morphism,
                  commutator_lie, even_subalgebra, is_lie, jacobiator,
                  require_lie, subalgebra_on)
from .equivalence import (AlphaCheckResult, SuperLieAlgebraWithInvolution,
                          SuperMorphism, cartan_sign_flip,
                          involution_from_bidegree, jacobiator_alpha_check,
                          morphism_transfer, rebraid, unbraid)
from .catalog import (MatrixRep, algebra_B, algebra_B_rep, catalog,
                      catalog_lie, check_assoc_rep, check_lie_rep,
                      m2_superalgebra, mat2_adapted_basis, mat2_star, odd_pair,
                      so3, so3_group_automorphism, so3_group_elements,
                      so3_standard_rep, so12, tilde_extension,
                      unitary_bigraded, unitary_embedding, unitary_example,
                      upper_triangular3)
from .uea import (EnvelopingAlgebra, TensorElement, UEAElement, antipode,
                  counit, delta, delta_slot, delta_word, max_truncation,
                  normal_form, normal_form_random, pbw_dims, pbw_factorize,
                  primitive_vector, uea_multiply, weyl_map)
from .hc import (CoefficientModule, CompositionResult, Functional,
                 bch_product, convolution, convolution_commutes,
                 equivariant_functionals, equivariant_hom_basis,
                 inner_automorphism_check, trivial_module)
from .deformed import (ConjSymPoly, DistinguisherCertificate, EvenOddPoly,
                       character_at, parse_poly, star_product,
                       star_vs_pointwise_distinguisher, to_complex)
from . import errors, schema

__version__ = "0.1.0"
