"""Exact scalars, vectors, matrices and polynomials over Q(w_m)."""
from .cyclo import (Cyclo, CycloField, FieldMismatchError, common_field, conj,
                    cyclotomic_polynomial, euler_phi, format_scalar,
                    is_rational_scalar, to_rational)
from .matrix import (ExactMatrix, Subspace, dot, is_direct_sum, is_zero_vec,
                     lincomb, nullspace, rank, rref, scalar, unit_vec, vadd,
                     vconj, vec, vneg, vscale, vsub, zero_vec)
from .poly import (EigenvalueFieldError, characteristic_polynomial, degree,
                   is_squarefree, minimal_polynomial, poly_str, roots_in_field,
                   squarefree_part)
from .eigen import (NonCommutingError, NotDiagonalizableError, eigenspaces,
                    restrict, simultaneous_eigenspaces)
