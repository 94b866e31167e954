"""Weights of the adjoint action on Cartan subspaces."""
from .core import (Weight, WeightSystem, coordinates, hyperplane_arrangement,
                   hyperplane_subspace, is_regular, normalize_functional, regularity_crosscheck,
                   restrict_weights, weight_system)
