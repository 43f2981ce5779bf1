"""Exact base fields, towers of quadratic extensions and their subfields."""

from .ambient import Ambient
from .rational import QQ, RationalField, parse_rational
from .ratfunc import RatFunc, RationalFunctionField
from .specialize import Specialization, SpecializationError
from .subfield import Subfield
from .tower import (
    NotInLineageError,
    TowerElem,
    TowerField,
    adjoin_sqrt,
    adjoin_zeta,
    common_field,
    is_square,
    member,
)

__all__ = [
    "Ambient",
    "QQ",
    "RationalField",
    "RationalFunctionField",
    "RatFunc",
    "Specialization",
    "SpecializationError",
    "Subfield",
    "TowerElem",
    "TowerField",
    "NotInLineageError",
    "adjoin_sqrt",
    "adjoin_zeta",
    "common_field",
    "is_square",
    "member",
    "parse_rational",
]
