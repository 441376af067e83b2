"""Exact computations in the skein algebra of the once-punctured torus, its
q-difference operator representation, SL(2,Z) symmetries, and its realization
by monopole operators in a quantum torus."""

from .coulomb import (
    QuotElem,
    SymLaurent,
    TorusElem,
    epsilon,
    invariant_generator,
    iso_image,
    monopole,
    psi_map,
    reduce_quot,
)
from .mcg import Endo, builtin_endo, endo_apply, find_inverse
from .parse import ParseError, parse_expr
from .qdiff import QDiffOp
from .render import render
from .report import CheckReport
from .scalars import PARAMS, RatFunc
from .skein import PHI, SkeinExpr, alpha, beta, gamma, skein_eval, skein_equal

__version__ = "0.1.0"

__all__ = [
    "CheckReport", "Endo", "PARAMS", "PHI", "ParseError", "QDiffOp", "QuotElem", "RatFunc",
    "SkeinExpr", "SymLaurent", "TorusElem", "alpha", "beta", "builtin_endo", "endo_apply",
    "epsilon", "find_inverse", "gamma", "invariant_generator", "iso_image", "monopole",
    "parse_expr", "psi_map", "reduce_quot", "render", "skein_equal", "skein_eval",
]
