"""Cheeger constants and Cheeger sets of planar convex bodies.

The package computes the Cheeger constant h and the Cheeger set of a
convex body given as an intersection of halfplanes and disks, checks the
rotational-symmetry structure of the result (dots, edges, edge contacts),
and re-verifies everything against an independent grid oracle.
"""

from .catalog import CatalogShape, catalog_defaults, catalog_names, make_catalog
from .errors import (CheegerError, DegenerateBodyError, EmptyBodyError,
                     InvalidBodyError, NumericFailureError, OracleFailureError)
from .geometry import (Arc, BoundaryChain, ChainDiagnostics, Point, Segment,
                       area, centroid, containment_margin, distance_to_boundary,
                       perimeter, rotate_chain, scale_chain, translate_chain,
                       validate)
from .oracle import (RasterBody, oracle_cheeger, oracle_offset_area, rasterize,
                     write_pgm)
from .regions import (EMPTY_REGION, ConstraintSpec, DiskConstraint, Halfplane,
                      InradiusResult, build_spec, contains, erode,
                      extract_boundary, inradius, is_empty, offset_area,
                      rotate_spec, scale_spec, spec_from_polygon,
                      translate_spec)
from .schedule import OffsetSchedule, ScheduleInterval, polygon_offset_schedule
from .solver import (CheegerResult, Contact, SolverConfig, build_cheeger_set,
                     cheeger_constant, classify_contacts, dilate_chain,
                     erode_chain, solve_cheeger, solve_s, verify_ratio)
from .symmetry import (DotsEdges, EdgeContact, RegularityReport,
                       RotationalSymmetry, SymmetryRejection,
                       check_edge_contacts, check_rotation_inheritance,
                       detect_symmetry, dots_and_edges, hausdorff_distance)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
