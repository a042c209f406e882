"""Brute-force oracles: colored strict partitions, colored overpartitions, and
their Durfee-square block decomposition.

Parts are ordered by ``(size, color)``: ``1_a1 < 1_a2 < ... < 1_ar < 2_a1 < ...``.
A partition lists its parts from largest to smallest.  In an overpartition
only the last copy of each ``(size, color)`` run may be overlined, so the
overlined copy always sits at the end of its run.

Partition literals look like ``2[2]~,2[1],1[2]~,1[1],1[1]~``: ``size[color]``
with an optional ``~`` for an overline.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby
from typing import Iterator, NamedTuple

from .polyring import Monomial, MultiPoly, Symbol, z
from .qseries import QSeries, equal_upto, poch_finite, unit_inv

__all__ = [
    "ColoredPart",
    "ColoredPartition",
    "BlockDecomposition",
    "PartitionLiteralError",
    "parse_partition",
    "enum_strict",
    "enum_over",
    "enumerate_partitions",
    "gen_poly",
    "durfee_size",
    "durfee_decompose",
    "recompose",
    "durfee_stratified_poly",
    "LemmaResult",
    "verify_over_lemmas",
]


class PartitionLiteralError(ValueError):
    pass


class ColoredPart(NamedTuple):
    size: int
    color: int
    overlined: bool = False

    def __str__(self) -> str:
        return f"{self.size}[{self.color}]{'~' if self.overlined else ''}"


def _check_runs(parts: tuple[ColoredPart, ...], kind: str) -> None:
    for (size, color), run in groupby(parts, key=lambda p: (p.size, p.color)):
        run = list(run)
        if kind == "strict":
            if len(run) > 1:
                raise PartitionLiteralError(f"strict partition repeats {size}[{color}]")
            if run[0].overlined:
                raise PartitionLiteralError("strict partitions carry no overlines")
        elif any(p.overlined for p in run[:-1]):
            which = "more than one copy of" if sum(p.overlined for p in run) > 1 else "a non-final copy of"
            raise PartitionLiteralError(f"overline on {which} {size}[{color}]; only the last copy may be overlined")


@dataclass(frozen=True)
class ColoredPartition:
    """A colored strict partition or overpartition, largest part first."""

    parts: tuple[ColoredPart, ...]
    kind: str = "over"

    def __post_init__(self):
        parts = tuple(ColoredPart(*p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if self.kind not in ("strict", "over"):
            raise ValueError(f"kind must be 'strict' or 'over', got {self.kind!r}")
        for p in parts:
            if p.size < 1 or p.color < 1:
                raise PartitionLiteralError(f"part {p} needs size >= 1 and color >= 1")
        keys = [(p.size, p.color) for p in parts]
        if keys != sorted(keys, reverse=True):
            raise PartitionLiteralError("parts are not in decreasing (size, color) order")
        _check_runs(parts, self.kind)

    @property
    def weight(self) -> int:
        return sum(p.size for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def monomial(self, count_parts: bool = False) -> Monomial:
        """``prod_j a_j^(#parts of color j) z_j^(#overlined of color j)``."""
        exps: dict[Symbol, int] = {}
        for p in self.parts:
            sa = Symbol("a", p.color)
            exps[sa] = exps.get(sa, 0) + 1
            if p.overlined:
                sz = Symbol("z", p.color)
                exps[sz] = exps.get(sz, 0) + 1
        if count_parts and self.parts:
            exps[Symbol("y")] = len(self.parts)
        return Monomial(exps)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


_PART = re.compile(r"\s*(\d+)\s*\[\s*(\d+)\s*\]\s*(~?)\s*")


def parse_partition(text: str, kind: str | None = None) -> ColoredPartition:
    """Parse a literal such as ``2[2]~,2[1],1[1]``.

    Parts may be given in any order between different ``(size, color)``
    pairs; within a run the written order is kept, so an overline written on a
    non-final copy is rejected.  ``kind`` defaults to ``strict`` when no part
    repeats and none is overlined.
    """
    parts = []
    if text.strip():
        for chunk in text.split(","):
            m = _PART.fullmatch(chunk)
            if not m:
                raise PartitionLiteralError(f"bad part {chunk.strip()!r}; expected size[color] or size[color]~")
            parts.append(ColoredPart(int(m.group(1)), int(m.group(2)), bool(m.group(3))))
    # stable sort keeps the written order inside each run
    parts.sort(key=lambda p: (p.size, p.color), reverse=True)
    if kind is None:
        distinct = len({(p.size, p.color) for p in parts}) == len(parts)
        kind = "strict" if distinct and not any(p.overlined for p in parts) else "over"
    return ColoredPartition(tuple(parts), kind)


def _descend(
    n: int,
    slots: list[tuple[int, int]],
    idx: int,
    strict: bool,
    max_parts: int | None,
) -> Iterator[tuple[ColoredPart, ...]]:
    # slots run through (size, color) in decreasing order; size 0 only for lemma checks
    if idx == len(slots):
        if n == 0:
            yield ()
        return
    size, color = slots[idx]
    if size == 0 and n:
        return
    limit = (n // size) if size else (max_parts if max_parts is not None else 0)
    if strict:
        limit = min(limit, 1)
    if max_parts is not None:
        limit = min(limit, max_parts)
    for m in range(limit, -1, -1):
        rest_parts = None if max_parts is None else max_parts - m
        for rest in _descend(n - m * size, slots, idx + 1, strict, rest_parts):
            if m == 0:
                yield rest
                continue
            plain = (ColoredPart(size, color),) * m
            yield plain + rest
            if not strict:
                yield plain[:-1] + (ColoredPart(size, color, True),) + rest


def _slots(r: int, largest: int, smallest: int = 1) -> list[tuple[int, int]]:
    return [(s, c) for s in range(largest, smallest - 1, -1) for c in range(r, 0, -1)]


def enumerate_partitions(kind: str, r: int, n: int) -> list[ColoredPartition]:
    """Every ``r``-colored partition of ``n`` of the given kind, no duplicates."""
    if kind not in ("strict", "over"):
        raise ValueError(f"kind must be 'strict' or 'over', got {kind!r}")
    if r < 1 or n < 0:
        raise ValueError(f"need r >= 1 and n >= 0, got r={r}, n={n}")
    strict = kind == "strict"
    return [ColoredPartition(p, kind) for p in _descend(n, _slots(r, n), 0, strict, None)]


def enum_strict(r: int, n: int) -> list[ColoredPartition]:
    return enumerate_partitions("strict", r, n)


def enum_over(r: int, n: int) -> list[ColoredPartition]:
    return enumerate_partitions("over", r, n)


def _sum_monomials(parts, count_parts: bool = False) -> MultiPoly:
    counts: dict[Monomial, int] = {}
    for p in parts:
        m = p.monomial(count_parts)
        counts[m] = counts.get(m, 0) + 1
    return MultiPoly(counts)


def gen_poly(kind: str, r: int, n: int, count_parts: bool = False) -> MultiPoly:
    """Generating polynomial of the weight-``n`` objects.

    Each partition contributes ``a_j`` per part of color ``j`` and, for
    overpartitions, ``z_j`` per overlined part of color ``j``.  With
    ``count_parts`` it also carries ``y^(number of parts)``.
    """
    return _sum_monomials(enumerate_partitions(kind, r, n), count_parts)


def durfee_size(parts) -> int:
    """Largest ``k`` such that at least ``k`` parts have size ``>= k``."""
    k = 0
    for i, p in enumerate(parts, 1):
        if p.size >= i:
            k = i
        else:
            break
    return k


@dataclass(frozen=True)
class BlockDecomposition:
    """Durfee square (Block I), the rows right of it (II), the parts of size
    exactly ``N`` below it (III), and the rest (IV).

    ``block2`` holds one ``ColoredPart`` per row of the square whose size is
    the row length past the square; length 0 is allowed there and keeps the
    color and overline of the original part.
    """

    durfee: int
    block2: tuple[ColoredPart, ...]
    block3: tuple[ColoredPart, ...]
    block4: ColoredPartition
    kind: str = "over"

    @property
    def weights(self) -> dict[str, int]:
        return {
            "I": self.durfee**2,
            "II": sum(p.size for p in self.block2),
            "III": self.durfee * len(self.block3),
            "IV": self.block4.weight,
        }

    @property
    def weight(self) -> int:
        return sum(self.weights.values())

    @property
    def top_color(self) -> int | None:
        """Color ``s`` of the first Block III part, ``None`` when Block III is empty."""
        return self.block3[0].color if self.block3 else None

    def describe(self) -> str:
        lines = [f"Durfee square N = {self.durfee} (Block I weight {self.weights['I']})"]
        rows = ", ".join(str(p) for p in self.block2)
        lines.append(f"Block II  rows: {rows} (weight {self.weights['II']})")
        b3 = ", ".join(str(p) for p in self.block3) or "empty"
        lines.append(f"Block III parts: {b3} (weight {self.weights['III']})")
        lines.append(f"Block IV  parts: {self.block4 or 'empty'} (weight {self.weights['IV']})")
        lines.append(f"total weight {self.weight}")
        return "\n".join(lines)


def durfee_decompose(p: ColoredPartition) -> BlockDecomposition:
    if not p.parts:
        raise ValueError("the empty partition has no Durfee square")
    N = durfee_size(p.parts)
    head, rest = p.parts[:N], p.parts[N:]
    block2 = tuple(ColoredPart(q.size - N, q.color, q.overlined) for q in head)
    k = 0
    while k < len(rest) and rest[k].size == N:
        k += 1
    return BlockDecomposition(N, block2, rest[:k], ColoredPartition(rest[k:], p.kind), p.kind)


def recompose(d: BlockDecomposition) -> ColoredPartition:
    """Rebuild the partition; inverse of :func:`durfee_decompose`."""
    N = d.durfee
    if N < 1:
        raise ValueError(f"Durfee size must be positive, got {N}")
    if len(d.block2) != N:
        raise ValueError(f"Block II needs exactly {N} rows, got {len(d.block2)}")
    if any(q.size < 0 for q in d.block2):
        raise ValueError("Block II rows have negative length")
    if any(q.size != N for q in d.block3):
        raise ValueError(f"Block III parts must all have size {N}")
    if any(q.size >= N for q in d.block4.parts):
        raise ValueError(f"Block IV parts must be smaller than {N}")
    head = tuple(ColoredPart(q.size + N, q.color, q.overlined) for q in d.block2)
    p = ColoredPartition(head + tuple(d.block3) + d.block4.parts, d.kind)
    if durfee_decompose(p) != d:
        raise ValueError("blocks do not come from a partition with this decomposition")
    return p


def durfee_stratified_poly(kind: str, r: int, n: int, N: int, count_parts: bool = False) -> MultiPoly:
    """Like :func:`gen_poly`, restricted to Durfee square size exactly ``N``."""
    if N < 1:
        raise ValueError("the Durfee stratum index starts at 1")
    parts = (p for p in enumerate_partitions(kind, r, n) if durfee_size(p.parts) == N)
    return _sum_monomials(parts, count_parts)


@dataclass(frozen=True)
class LemmaResult:
    lemma: str
    parts: int
    comparison: object

    @property
    def passed(self) -> bool:
        return bool(self.comparison)


def _single_color_series(T: int, nparts: int, exact: bool, allow_zero: bool) -> QSeries:
    coeffs = []
    for n in range(T):
        slots = [(s, 1) for s in range(n, -1 if allow_zero else 0, -1)]
        counts: dict[Monomial, int] = {}
        for parts in _descend(n, slots, 0, False, nparts):
            if exact and len(parts) != nparts:
                continue
            m = Monomial({Symbol("z", 1): sum(p.overlined for p in parts)}) if parts else Monomial()
            counts[m] = counts.get(m, 0) + 1
        coeffs.append(MultiPoly(counts))
    return QSeries(coeffs, T)


def verify_over_lemmas(i_max: int, T: int) -> list[LemmaResult]:
    """Check the three one-color overpartition counts against closed forms.

    * ``at_most``: parts >= 1, at most i of them: ``(-zq;q)_i / (q;q)_i``
    * ``exactly``: parts >= 1, exactly i:        ``q^i (-z;q)_i / (q;q)_i``
    * ``with_zero``: parts >= 0, exactly i:      ``(-z;q)_i / (q;q)_i``

    plus ``at_most_alt``, the rewriting ``(1+z) (-zq;q)_i = (1+zq^i) (-z;q)_i``
    of the first closed form (division by ``1+z`` is avoided).
    """
    z1 = z(1)
    results = []
    for i in range(1, i_max + 1):
        inv = unit_inv(poch_finite(-1, 1, 1, i, T))
        minus_z = poch_finite(z1, 0, 1, i, T) * inv
        at_most = poch_finite(z1, 1, 1, i, T) * inv
        exactly = minus_z.shift(i)
        checks = [
            ("at_most", _single_color_series(T, i, exact=False, allow_zero=False), at_most),
            ("exactly", _single_color_series(T, i, exact=True, allow_zero=False), exactly),
            ("with_zero", _single_color_series(T, i, exact=True, allow_zero=True), minus_z),
            ("at_most_alt", at_most * (1 + z1), minus_z * (1 + QSeries.monomial(z1, i, T))),
        ]
        for name, brute, closed in checks:
            results.append(LemmaResult(name, i, equal_upto(brute, closed, T)))
    return results
