"""Hecke algebras, Kazhdan-Lusztig bases and Bott-Samelson bimodules."""

import sys

from ._core import (
    CapExceeded,
    NonSplitQuotient,
    OutOfRange,
    compare_pair,
    decompose,
    group_order,
    hom_dimensions,
    hom_rank,
    kl_expand,
    kl_polynomial,
    run,
    standard_multiplicities,
)

__all__ = [
    "CapExceeded",
    "NonSplitQuotient",
    "OutOfRange",
    "compare_pair",
    "decompose",
    "group_order",
    "hom_dimensions",
    "hom_rank",
    "kl_expand",
    "kl_polynomial",
    "main",
    "run",
    "standard_multiplicities",
]


def main() -> int:
    code, out, err = run(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
