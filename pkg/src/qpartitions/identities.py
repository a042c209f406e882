"""Both sides of every partition identity in the catalog, as :class:`QSeries`.

Each ``build_*`` function returns ``Sides(lhs, rhs)`` truncated at order ``T``.
The multi-color right-hand sides are sums over a Durfee-square size ``N``;
the ``*_n_term`` functions expose a single summand, which the combinatorics
cross-checks and the "one more term changes nothing" tests rely on.

Conventions: ``(c;q)_0 = 1``, ``binom(0, 2) = binom(1, 2) = 0``, and every
quotient is computed as a product times :func:`unit_inv` at full order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Callable, Iterator, NamedTuple

from .polyring import MultiPoly, a, y, z
from .qseries import QSeries, geom_inv, poch_finite, poch_infinite, unit_inv

__all__ = [
    "Sides",
    "IdentitySpec",
    "IdentityEntry",
    "REGISTRY",
    "SINGLE_COLOR",
    "compositions",
    "build",
    "build_sylvester",
    "build_pentagonal",
    "pentagonal_two_sided",
    "build_theta_gauss",
    "build_theta_jacobi",
    "build_alladi",
    "alladi_n_term",
    "build_overpartition_cft",
    "overpartition_n_term",
    "build_cauchy_multi",
    "cauchy_multi_n_term",
    "cauchy_classical",
    "build_dousse_kim",
    "build_ped",
    "ped_n_term",
    "build_alladi_y",
    "alladi_y_n_term",
    "strict_limit_series",
]


class Sides(NamedTuple):
    lhs: QSeries
    rhs: QSeries


SINGLE_COLOR = frozenset({"sylvester", "pentagonal", "theta_gauss", "theta_jacobi", "dousse_kim"})


@dataclass(frozen=True)
class IdentitySpec:
    """Which identity to build, with how many colors and to what order.

    Single-variable identities always get ``colors = 1``.
    """

    name: str
    colors: int = 1
    order: int = 30

    def __post_init__(self):
        if self.name not in REGISTRY:
            raise ValueError(f"unknown identity {self.name!r}; choose from {sorted(REGISTRY)}")
        if self.name in SINGLE_COLOR:
            object.__setattr__(self, "colors", 1)
        if self.colors < 1:
            raise ValueError(f"need at least one color, got {self.colors}")
        if self.order < 2:
            raise ValueError(f"order must be at least 2, got {self.order}")


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` nonnegative ints summing to ``total``, lexicographically."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _binom2(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def _inv_q_poch(n: int, base: int, order: int) -> QSeries:
    """``1 / (q^base; q^base)_n``."""
    return unit_inv(poch_finite(-1, base, base, n, order))


def _prod(factors, order: int) -> QSeries:
    out = QSeries.one(order)
    for f in factors:
        out = out * f
    return out


def _strict_colored(r: int, order: int, tag: MultiPoly | int = 1) -> QSeries:
    """``prod_j (-a_j tag q; q)_inf``."""
    return _prod((poch_infinite(a(j) * tag, 1, 1, order) for j in range(1, r + 1)), order)


def _outer_range(order: int, weight: Callable[[int], int]) -> range:
    n = 1
    while weight(n) < order:
        n += 1
    return range(1, n)


# --- single-variable identities ------------------------------------------------


def build_sylvester(T: int) -> Sides:
    """``(-aq;q)_inf = 1 + sum_k a^k q^((3k^2-k)/2) (-aq;q)_{k-1} (1 + a q^(2k)) / (q;q)_k``."""
    a1 = a(1)
    lhs = poch_infinite(a1, 1, 1, T)
    rhs = QSeries.one(T)
    k = 1
    while (3 * k * k - k) // 2 < T:
        term = poch_finite(a1, 1, 1, k - 1, T) * (1 + QSeries.monomial(a1, 2 * k, T))
        term = term * _inv_q_poch(k, 1, T)
        rhs = rhs + (term * a1**k).shift((3 * k * k - k) // 2)
        k += 1
    return Sides(lhs, rhs)


def build_pentagonal(T: int) -> Sides:
    """``(q;q)_inf = 1 + sum_{k>=1} (-1)^k q^((3k^2-k)/2) (1 + q^k)``."""
    lhs = poch_infinite(-1, 1, 1, T)
    rhs = QSeries.one(T)
    k = 1
    while (3 * k * k - k) // 2 < T:
        e = (3 * k * k - k) // 2
        rhs = rhs + QSeries.monomial((-1) ** k, e, T) + QSeries.monomial((-1) ** k, e + k, T)
        k += 1
    return Sides(lhs, rhs)


def _theta_sum(T: int, exponent: Callable[[int], int]) -> QSeries:
    coeffs = [0] * T
    k = 0
    while True:
        hit = False
        for j in {k, -k}:
            e = exponent(j)
            if e < T:
                coeffs[e] += (-1) ** abs(j)
                hit = True
        if not hit:
            return QSeries(coeffs, T)
        k += 1


def pentagonal_two_sided(T: int) -> QSeries:
    """``sum_{k in Z} (-1)^k q^((3k^2-k)/2)``."""
    return _theta_sum(T, lambda k: (3 * k * k - k) // 2)


def build_theta_gauss(T: int) -> Sides:
    """``(q;q)_inf / (-q;q)_inf = sum_{k in Z} (-1)^k q^(k^2)``."""
    lhs = poch_infinite(-1, 1, 1, T) * unit_inv(poch_infinite(1, 1, 1, T))
    return Sides(lhs, _theta_sum(T, lambda k: k * k))


def build_theta_jacobi(T: int) -> Sides:
    """``(q^2;q^2)_inf / (-q;q^2)_inf = sum_{k in Z} (-1)^k q^(2k^2-k)``."""
    lhs = poch_infinite(-1, 2, 2, T) * unit_inv(poch_infinite(1, 1, 2, T))
    return Sides(lhs, _theta_sum(T, lambda k: 2 * k * k - k))


# --- Alladi and its y-refinement ------------------------------------------------


def alladi_y_n_term(r: int, N: int, T: int, track_parts: bool = True) -> QSeries:
    """The Durfee-size-``N`` summand of the right side of the Alladi sum.

    With ``track_parts`` every part also carries a factor ``y``.
    """
    R = T - N * N
    if R <= 0:
        return QSeries.zero(T)
    tag = y() if track_parts else MultiPoly(1)
    # inner[0] is the "Block III empty" sum, inner[s] collects q^(i_1+..+i_s) weights
    inner = [QSeries.zero(R) for _ in range(r + 1)]
    for comp in compositions(N, r):
        w = _prod((_inv_q_poch(i, 1, R) for i in comp if i), R)
        mono = MultiPoly(1)
        for j, i in enumerate(comp, 1):
            mono = mono * a(j) ** i
        w = (w * mono).shift(sum(_binom2(i) for i in comp))
        inner[0] = inner[0] + w
        for s, pref in enumerate(accumulate(comp), 1):
            inner[s] = inner[s] + w.shift(pref)
    body = inner[0]
    below = QSeries.one(R)
    for s in range(1, r + 1):
        block3 = below * QSeries.monomial(a(s) * tag, N, R)
        body = body + inner[s] * block3
        below = below * (1 + QSeries.monomial(a(s) * tag, N, R))
    boundary = _prod((poch_finite(a(j) * tag, 1, 1, N - 1, R) for j in range(1, r + 1)), R)
    term = (boundary * body) * tag**N
    return QSeries(term.coeffs, T).shift(N * N)


def alladi_n_term(r: int, N: int, T: int) -> QSeries:
    return alladi_y_n_term(r, N, T, track_parts=False)


def build_alladi(r: int, T: int) -> Sides:
    lhs = _strict_colored(r, T)
    rhs = QSeries.one(T)
    for N in _outer_range(T, lambda n: n * n):
        rhs = rhs + alladi_n_term(r, N, T)
    return Sides(lhs, rhs)


def build_alladi_y(r: int, T: int) -> Sides:
    lhs = _strict_colored(r, T, y())
    rhs = QSeries.one(T)
    for N in _outer_range(T, lambda n: n * n):
        rhs = rhs + alladi_y_n_term(r, N, T)
    return Sides(lhs, rhs)


# --- overpartitions and their specializations -----------------------------------


def _over_term(r: int, N: int, T: int, base: int, track_z: bool) -> QSeries:
    """Summand of the colored overpartition sum in base ``q^base``.

    ``base = 1`` is the overpartition sum itself; ``base = 2`` is its image
    under ``a -> a/q, z -> z q, q -> q^2`` (partitions with even parts
    distinct).  ``track_z = False`` sets every ``z_j = 0``.
    """
    lift = base - 1
    outer = base * N * N - lift * N
    R = T - outer
    if R <= 0:
        return QSeries.zero(T)
    zs = [MultiPoly()] + [z(j) if track_z else MultiPoly() for j in range(1, r + 1)]

    @lru_cache(maxsize=None)
    def colored_rows(j: int, i: int) -> QSeries:
        # (-z_j q^lift; q^base)_i / (q^base; q^base)_i
        return poch_finite(zs[j], lift, base, i, R) * _inv_q_poch(i, base, R)

    inner = [QSeries.zero(R) for _ in range(r + 1)]
    for comp in compositions(N, r):
        f = QSeries.one(R)
        mono = MultiPoly(1)
        for j, i in enumerate(comp, 1):
            mono = mono * a(j) ** i
            if i:
                f = f * colored_rows(j, i)
        f = f * mono
        inner[0] = inner[0] + f
        pref = 0
        for s, i in enumerate(comp, 1):
            # q^(base*(i_1+..+i_{s-1})) (1 + z_s q^(base*i_s + lift))
            tail = 1 + QSeries.monomial(zs[s], base * i + lift, R)
            inner[s] = inner[s] + (f * tail).shift(base * pref)
            pref += i
    body = inner[0]
    below = QSeries.one(R)
    top = base * N - lift
    for s in range(1, r + 1):
        block3 = QSeries.monomial(a(s), top, R) * geom_inv(a(s), top, R)
        body = body + inner[s] * (below * block3)
        below = below * (1 + QSeries.monomial(a(s) * zs[s], base * N, R)) * geom_inv(a(s), top, R)
    boundary = QSeries.one(R)
    for j in range(1, r + 1):
        num = poch_finite(a(j) * zs[j], base, base, N - 1, R)
        den = poch_finite(-a(j), 1, base, N - 1, R)
        boundary = boundary * num * unit_inv(den)
    term = boundary * body
    return QSeries(term.coeffs, T).shift(outer)


def _over_lhs(r: int, T: int, base: int, track_z: bool) -> QSeries:
    out = QSeries.one(T)
    for j in range(1, r + 1):
        if track_z:
            out = out * poch_infinite(a(j) * z(j), base, base, T)
        out = out * unit_inv(poch_infinite(-a(j), 1, base, T))
    return out


def overpartition_n_term(r: int, N: int, T: int) -> QSeries:
    return _over_term(r, N, T, 1, True)


def build_overpartition_cft(r: int, T: int) -> Sides:
    rhs = QSeries.one(T)
    for N in _outer_range(T, lambda n: n * n):
        rhs = rhs + overpartition_n_term(r, N, T)
    return Sides(_over_lhs(r, T, 1, True), rhs)


def ped_n_term(r: int, N: int, T: int) -> QSeries:
    return _over_term(r, N, T, 2, True)


def build_ped(r: int, T: int) -> Sides:
    rhs = QSeries.one(T)
    for N in _outer_range(T, lambda n: 2 * n * n - n):
        rhs = rhs + ped_n_term(r, N, T)
    return Sides(_over_lhs(r, T, 2, True), rhs)


def cauchy_multi_n_term(r: int, N: int, T: int) -> QSeries:
    """Summand of the multi-color Cauchy sum, written out without z."""
    R = T - N * N
    if R <= 0:
        return QSeries.zero(T)
    inner = [QSeries.zero(R) for _ in range(r + 1)]
    for comp in compositions(N, r):
        mono = MultiPoly(1)
        for j, i in enumerate(comp, 1):
            mono = mono * a(j) ** i
        w = _prod((_inv_q_poch(i, 1, R) for i in comp if i), R) * mono
        inner[0] = inner[0] + w
        pref = 0
        for s, i in enumerate(comp, 1):
            inner[s] = inner[s] + w.shift(pref)
            pref += i
    body = inner[0]
    below = QSeries.one(R)
    for s in range(1, r + 1):
        g = geom_inv(a(s), N, R)
        body = body + inner[s] * below * QSeries.monomial(a(s), N, R) * g
        below = below * g
    boundary = _prod((unit_inv(poch_finite(-a(j), 1, 1, N - 1, R)) for j in range(1, r + 1)), R)
    return QSeries((boundary * body).coeffs, T).shift(N * N)


def build_cauchy_multi(r: int, T: int) -> Sides:
    lhs = _prod((unit_inv(poch_infinite(-a(j), 1, 1, T)) for j in range(1, r + 1)), T)
    rhs = QSeries.one(T)
    for N in _outer_range(T, lambda n: n * n):
        rhs = rhs + cauchy_multi_n_term(r, N, T)
    return Sides(lhs, rhs)


def cauchy_classical(T: int) -> Sides:
    """``1/(aq;q)_inf = 1 + sum_N a^N q^(N^2) / ((q;q)_N (aq;q)_N)``."""
    a1 = a(1)
    lhs = unit_inv(poch_infinite(-a1, 1, 1, T))
    rhs = QSeries.one(T)
    for N in _outer_range(T, lambda n: n * n):
        den = poch_finite(-1, 1, 1, N, T) * poch_finite(-a1, 1, 1, N, T)
        rhs = rhs + (unit_inv(den) * a1**N).shift(N * N)
    return Sides(lhs, rhs)


def build_dousse_kim(T: int) -> Sides:
    """The one-color overpartition sum at ``z = 1``, in its two-quotient form."""
    a1 = a(1)
    lhs = poch_infinite(a1, 1, 1, T) * unit_inv(poch_infinite(-a1, 1, 1, T))

    def ratio(n: int) -> QSeries:
        num = poch_finite(1, 1, 1, n, T) * poch_finite(a1, 1, 1, n, T)
        den = poch_finite(-1, 1, 1, n, T) * poch_finite(-a1, 1, 1, n, T)
        return num * unit_inv(den)

    rhs = QSeries.one(T)
    for N in _outer_range(T, lambda n: n * n):
        rhs = rhs + ((ratio(N - 1) + ratio(N)) * a1**N).shift(N * N)
    return Sides(lhs, rhs)


def strict_limit_series(f: QSeries) -> QSeries:
    """Apply ``MultiPoly.strict_limit`` to every coefficient."""
    out = []
    for n, p in enumerate(f):
        try:
            out.append(p.strict_limit())
        except ValueError as exc:
            raise type(exc)(f"at q^{n}: {exc}") from exc
    return QSeries(out, f.order)


# --- registry ------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityEntry:
    name: str
    build: Callable[[int, int], Sides]
    n_term: Callable[[int, int, int], QSeries] | None = None
    outer_weight: Callable[[int], int] | None = None

    def outer_terms(self, r: int, T: int) -> int:
        """How many Durfee-indexed (or k-indexed) summands the right side uses."""
        if self.outer_weight is None:
            return 0
        return len(_outer_range(T, self.outer_weight))


def _single(fn: Callable[[int], Sides]) -> Callable[[int, int], Sides]:
    return lambda r, T: fn(T)


_SQUARE = lambda n: n * n  # noqa: E731
_PENTAGONAL = lambda k: (3 * k * k - k) // 2  # noqa: E731

REGISTRY: dict[str, IdentityEntry] = {
    e.name: e
    for e in [
        IdentityEntry("sylvester", _single(build_sylvester), None, _PENTAGONAL),
        IdentityEntry("pentagonal", _single(build_pentagonal), None, _PENTAGONAL),
        IdentityEntry("theta_gauss", _single(build_theta_gauss)),
        IdentityEntry("theta_jacobi", _single(build_theta_jacobi)),
        IdentityEntry("alladi", build_alladi, alladi_n_term, _SQUARE),
        IdentityEntry("overpartition_cft", build_overpartition_cft, overpartition_n_term, _SQUARE),
        IdentityEntry("cauchy_multi", build_cauchy_multi, cauchy_multi_n_term, _SQUARE),
        IdentityEntry("dousse_kim", _single(build_dousse_kim), None, _SQUARE),
        IdentityEntry("ped", build_ped, ped_n_term, lambda n: 2 * n * n - n),
        IdentityEntry("alladi_y", build_alladi_y, alladi_y_n_term, _SQUARE),
    ]
}


def build(spec: IdentitySpec) -> Sides:
    return REGISTRY[spec.name].build(spec.colors, spec.order)
