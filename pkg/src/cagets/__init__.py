"""Cages, Tanner graphs, and trapping-set constructions and bounds."""

from ._kernels import BACKEND
from .bounds import (Bound, BoundQuery, Direction, TableRow, best_upper, class_exists,
                     eq1_lower, eq2_Lne, etsl_improved_lower, lower_bound, parity_correct,
                     table, upper_rules)
from .constructions import Witness, build_rule, build_witness
from .errors import (CagetsError, InternalInconsistencyError, MalformedInputError,
                     NotAvailableError, ParityError, PreconditionError)
from .graph import INF, Graph, SubdividedGraph, girth, subdivide
from .registry import (Availability, CageRecord, build_good_graph, cage_size, get_cage,
                       moore_bound, validate_cage)
from .tanner import Category, Classification, TannerGraph, classify, normal_graph, to_tanner

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Bound", "BoundQuery", "Direction", "TableRow", "best_upper", "class_exists",
    "eq1_lower", "eq2_Lne", "etsl_improved_lower", "lower_bound", "parity_correct", "table",
    "upper_rules", "Witness", "build_rule", "build_witness", "CagetsError",
    "InternalInconsistencyError", "MalformedInputError", "NotAvailableError", "ParityError",
    "PreconditionError", "INF", "Graph", "SubdividedGraph", "girth", "subdivide",
    "Availability", "CageRecord", "build_good_graph", "cage_size", "get_cage", "moore_bound",
    "validate_cage", "Category", "Classification", "TannerGraph", "classify", "normal_graph",
    "to_tanner",
]
