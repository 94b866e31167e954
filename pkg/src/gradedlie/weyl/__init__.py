"""Little Weyl groups, stabilizers, strata and families."""
from .groups import (DEFAULT_CAP, GroupOrderExceeded, MatrixGroup, fixed_space, fixed_space_of,
                     little_weyl_user, restrict_matrix)
from .little import (HypothesisError, LiftingObstruction, little_weyl_maximal_rank,
                     little_weyl_hyperplanes, hyperplane_reflections,
                     hyperplane_stabilizers,
                     validate_reflection_group)
from .strata import (UNKNOWN, Stratum, check_conjugation_equivalence, circ_equals_reg,
                     gamma_p, hypothesis_tag, pointwise_stabilizer, same_W_family,
                     same_gC_family, stabilizer, strata, verify_central, weyl_of_centralizer)
