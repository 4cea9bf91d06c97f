"""Tutte polynomials of ranked sets: matroids, greedoids, antimatroids."""

from .bipoly import BiPoly, X, Y, i_k, i_profile
from .constructions import (
    contract,
    delete,
    dual,
    free_coextension,
    free_extension,
    graphic_matroid,
    random_ranked_set,
    truncate,
    uniform_matroid,
)
from .errors import TutteError
from .ranked import (
    FeasibleFamily,
    GroundSet,
    RankedSet,
    feasible_family,
    from_feasible_family,
    is_antimatroid,
    is_greedoid,
    is_matroid,
    validate_ranked,
)
from .tutte import compute, tutte_expansion, tutte_recursion

__version__ = "0.1.0"
