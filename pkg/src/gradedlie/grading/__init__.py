"""Z_m-gradings, the defining automorphism, graded Jordan and centralizers."""
from .core import (GradedAlgebra, GradedCentralizer, GradingError, KacSpec, check_automorphism,
                   direct_sum, grade_from_kac, graded_centralizer, graded_jordan,
                   grading_from_theta, restrict_grading, shift_grading, theta_from_grading,
                   to_ambient)
