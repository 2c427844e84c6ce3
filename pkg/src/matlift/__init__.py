"""Binary matroid toolkit for splitting, elementary lifts and quotients, and
excluded-minor recognition of graphic and cographic matroids."""

from .catalog import Multigraph, bond_matroid, cycle_matroid, graph, load_graph, named, save_graph
from .construct import (
    COLOOP,
    QuotientRecord,
    coextensions,
    elementary_lifts,
    elementary_quotients,
    single_extensions,
    split,
)
from .gf2 import DimensionError, Gf2Matrix, in_row_space, rank, rref
from .matroid import (
    BinaryMatroid,
    EnumerationBoundError,
    FormatError,
    MatroidError,
    UnknownElementError,
    circuits,
    cocircuits,
    coloops,
    contract,
    delete,
    dual,
    dumps_matroid,
    from_matrix,
    is_eulerian,
    is_isomorphic,
    loads_matroid,
    loops,
    subset_rank,
)
from .recognition import (
    MinorWitness,
    NotCographicError,
    class_Ck,
    has_minor,
    is_cographic,
    is_graphic,
    is_minimal_excluded,
)

__version__ = "0.1.0"
