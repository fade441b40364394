"""Reflection words in E2, S2, SO(3) and O(n).

Expressions use the text grammar of the command-line tool, e.g.
``"E2: refl(line(1,0,1)) * refl(line(1,0,0))"``; the leftmost term acts last.
"""

from ._core import (
    Error,
    classify,
    compose,
    decompose,
    format,
    normalize,
    oracle_matrix,
    parse,
    reduce,
    run,
    triangle_compose,
    verify,
)

__all__ = [
    "Error",
    "classify",
    "compose",
    "decompose",
    "format",
    "normalize",
    "oracle_matrix",
    "parse",
    "reduce",
    "run",
    "triangle_compose",
    "verify",
]
