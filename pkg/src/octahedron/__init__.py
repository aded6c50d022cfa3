"""Octahedron recurrence in exact-rational and max-plus form, and the
RSK correspondence it induces between non-negative arrays and plane
partitions."""

from .errors import OctahedronError
from .grids import CornerGrid, Level1Grid, PlanePartition, SquareArray
from .pyramid import Pyramid, PyramidPoint, alpha, beta, enumerate_centers, enumerate_points
from .rsk import Tableau, classical_rsk, evacuation, rsk_forward, rsk_inverse
from .tropical import or_map, or_map_inverse, phi, phi_bruteforce

__version__ = "0.1.0"
