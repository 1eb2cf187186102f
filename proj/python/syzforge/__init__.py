"""Linear strands, Betti tables, and determinantal witnesses.

Thin Python surface over the C++ core. Inputs are the same JSON documents
the ``syzforge`` CLI accepts (simplicial complexes, point configurations,
lattice polygons, or explicit ideals).
"""

from ._syzforge import (
    InputError,
    betti_diagram,
    betti_table_json,
    ideal_generators,
    input_kind,
    list_examples,
    polygon_census,
    strand,
    validate_complex,
    verify_example,
    witness,
)

__all__ = [
    "InputError",
    "betti_diagram",
    "betti_table_json",
    "ideal_generators",
    "input_kind",
    "list_examples",
    "polygon_census",
    "strand",
    "validate_complex",
    "verify_example",
    "witness",
]
