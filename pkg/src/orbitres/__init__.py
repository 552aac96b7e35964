"""Symplectic resolutions of nilpotent orbit closures, checked with partition
combinatorics and exact rational linear algebra."""

from .exactlinalg import ExactMatrix, char_poly, jordan_type, rank
from .orbits import OrbitDescriptor, Verdict, parse_descriptor, uniqueness_report
from .partitions import Composition, Partition, dominates, dual, orderings, reversal_classes
from .polarizations import FlagType, enumerate_polarizations, flag_dim, two_step_fibrations

__version__ = "0.1.0"
