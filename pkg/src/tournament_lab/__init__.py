"""Modules, co-modules and decomposability indices of small tournaments."""

from .core import (
    C3,
    C4,
    U5,
    V5,
    W5,
    Tournament,
    build,
    canonical_code,
    catalog,
    decode_code,
    decode_trn,
    dual,
    encode_code,
    encode_trn,
    inv,
    is_isomorphic,
    lex_product,
    lex_sum,
    subtournament,
    transitive,
)

__version__ = "0.1.0"
