"""Tchebyshev transforms of graded posets and of the ab-algebra."""

from .abpoly import AbPoly, CdPoly, ab_index, cd_to_ab, omega, parse_poly, to_cd
from .poset import (
    Poset,
    boolean_algebra,
    cartesian_product,
    chain,
    crosspolytope,
    diamond_product,
    dual,
    dual_diamond_product,
    is_eulerian,
    ladder,
    parse_poset,
    tchebyshev_poset,
)
from .qsym import BQSymElem, QSymElem, F, F_B
from .transforms import Character, tcheb_T, tcheb_U

__all__ = [
    "AbPoly",
    "BQSymElem",
    "CdPoly",
    "Character",
    "F",
    "F_B",
    "Poset",
    "QSymElem",
    "ab_index",
    "boolean_algebra",
    "cartesian_product",
    "cd_to_ab",
    "chain",
    "crosspolytope",
    "diamond_product",
    "dual",
    "dual_diamond_product",
    "is_eulerian",
    "ladder",
    "omega",
    "parse_poly",
    "parse_poset",
    "tchebyshev_poset",
    "tcheb_T",
    "tcheb_U",
    "to_cd",
]
