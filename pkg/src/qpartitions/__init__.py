"""Exact q-series and brute-force partition oracles for colored
strict-partition and overpartition identities."""

from .combinatorics import (
    BlockDecomposition,
    ColoredPart,
    ColoredPartition,
    durfee_decompose,
    durfee_stratified_poly,
    enum_over,
    enum_strict,
    gen_poly,
    parse_partition,
    recompose,
    verify_over_lemmas,
)
from .harness import VerifyReport, cli_main, run_oracle, run_verify
from .identities import REGISTRY, IdentitySpec, Sides, build, strict_limit_series
from .polyring import Monomial, MultiPoly, Symbol, a, parse_poly, y, z
from .qseries import QSeries, equal_upto, geom_inv, poch_finite, poch_infinite, unit_inv

__version__ = "0.1.0"
