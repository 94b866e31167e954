"""Cartan subspaces in degree one."""
from .core import (CartanSearchError, CartanSubspace, PreconditionError, algebraic_closure,
                   cartan_subspace, closure_support_ok, graded_support, is_cartan_subspace,
                   is_maximal_rank, maximal_rank_report, nilpotent_space_certificate, splits_over_field)
