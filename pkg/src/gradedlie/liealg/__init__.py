"""Structure-constant Lie algebras and the adjoint representation."""
from .algebra import JacobiError, LieAlgebra, Subalgebra
from .chevalley import chevalley_basis
from .rootsystem import CartanMatrixError, RootSystem, cartan_matrix, parse_type
from .ops import (JordanError, ad, center_and_derived, centralizer,
                  is_nilpotent_element, is_nilpotent_matrix, is_semisimple_element,
                  jordan_decomposition)
