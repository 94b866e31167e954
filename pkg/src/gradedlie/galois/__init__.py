"""Real structures and Galois cohomology of finite Gamma-groups."""
from .core import (CONJUGACY_ASSUMPTION, EmbeddingError, GammaGroup, H1Set, RealStructure,
                   RealStructureError, chevalley_involution, coboundaries,
                   compact_real_structure, conjugation_on_basis, gamma_action_on_weyl,
                   gamma_action_by_permutations, h1,
                   induced_kernel, lift_real_point, real_cartan_check, real_orbit_count,
                   real_orbit_report, real_point_decision, split_real_structure)
