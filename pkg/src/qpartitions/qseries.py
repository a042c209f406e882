"""Truncated power series in q with :class:`MultiPoly` coefficients.

A :class:`QSeries` of order ``T`` knows the coefficients of ``q^0 .. q^(T-1)``
exactly and claims nothing about higher powers.  Binary operations return the
smaller of the two orders.

The Pochhammer helpers use a single sign convention::

    poch_finite(c, e0, step, n, T) = prod_{k<n} (1 + c q^(e0 + k*step))

so ``(-a q; q)_n`` is ``poch_finite(a, 1, 1, n, T)`` and ``(a q; q)_n`` is
``poch_finite(-a, 1, 1, n, T)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .polyring import MultiPoly, _check_keys

__all__ = [
    "QSeries",
    "Mismatch",
    "poch_finite",
    "poch_infinite",
    "geom_inv",
    "unit_inv",
    "equal_upto",
]


class QSeries:
    __slots__ = ("order", "_c")

    def __init__(self, coeffs: Iterable[MultiPoly | int], order: int | None = None):
        c = [x if isinstance(x, MultiPoly) else MultiPoly(x) for x in coeffs]
        if order is None:
            order = len(c)
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        c = c[:order]
        c.extend(MultiPoly() for _ in range(order - len(c)))
        self.order = order
        self._c = c

    @classmethod
    def _raw(cls, dicts: list[dict[int, int]]) -> QSeries:
        s = cls.__new__(cls)
        s.order = len(dicts)
        s._c = [MultiPoly._raw(d) for d in dicts]
        return s

    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, coeff: MultiPoly | int, exponent: int, order: int) -> QSeries:
        """``coeff * q^exponent`` truncated at ``order``."""
        s = cls.zero(order)
        if exponent < order:
            s._c[exponent] = coeff if isinstance(coeff, MultiPoly) else MultiPoly(coeff)
        return s

    @property
    def coeffs(self) -> tuple[MultiPoly, ...]:
        return tuple(self._c)

    def __getitem__(self, n: int) -> MultiPoly:
        if not 0 <= n < self.order:
            raise IndexError(f"q^{n} is outside the known range 0..{self.order - 1}")
        return self._c[n]

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self._c)

    def _dicts(self, order: int) -> list[dict[int, int]]:
        return [p._t for p in self._c[:order]]

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return QSeries._raw([dict(d) for d in self._dicts(order)])

    def __add__(self, other) -> QSeries:
        if isinstance(other, (int, MultiPoly)):
            other = QSeries([other], self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return QSeries([p + q for p, q in zip(self._c[:order], other._c[:order])], order)

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries([-p for p in self._c], self.order)

    def __sub__(self, other) -> QSeries:
        if isinstance(other, (int, MultiPoly)):
            other = QSeries([other], self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QSeries:
        return (-self) + other

    def __mul__(self, other) -> QSeries:
        if isinstance(other, (int, MultiPoly)):
            return QSeries([p * other for p in self._c], self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return QSeries._raw(_convolve(self._dicts(order), other._dicts(order)))

    __rmul__ = __mul__

    def shift(self, k: int) -> QSeries:
        """Multiply by ``q^k`` (``k >= 0``), keeping the order."""
        if k < 0:
            raise ValueError("negative shifts would need Laurent series")
        return QSeries([MultiPoly()] * k + self._c[: self.order - k], self.order)

    def map(self, fn: Callable[[MultiPoly], MultiPoly]) -> QSeries:
        return QSeries([fn(p) for p in self._c], self.order)

    def substitute(self, bindings) -> QSeries:
        return self.map(lambda p: p.substitute(bindings))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def __repr__(self) -> str:
        shown = [f"({p})*q^{n}" for n, p in enumerate(self._c) if p]
        body = " + ".join(shown[:6]) or "0"
        if len(shown) > 6:
            body += " + ..."
        return f"QSeries({body}, order={self.order})"


def _convolve(f: Sequence[dict[int, int]], g: Sequence[dict[int, int]]) -> list[dict[int, int]]:
    order = len(f)
    fi = [k for k in range(order) if f[k]]
    out = []
    for n in range(order):
        acc: dict[int, int] = {}
        get = acc.get
        for k in fi:
            if k > n:
                break
            gk = g[n - k]
            if not gk:
                continue
            fk = f[k]
            if len(fk) < len(gk):
                fk, gk = gk, fk
            for k2, c2 in gk.items():
                for k1, c1 in fk.items():
                    m = k1 + k2
                    acc[m] = get(m, 0) + c1 * c2
        d = {m: c for m, c in acc.items() if c}
        _check_keys(d)
        out.append(d)
    return out


def _times_binomial(f: list[dict[int, int]], c: dict[int, int], e: int) -> list[dict[int, int]]:
    """Return f * (1 + c q^e), as coefficient dicts."""
    out = [dict(d) for d in f]
    for n in range(len(f) - 1, e - 1, -1):
        src = f[n - e]
        if not src:
            continue
        tgt = out[n]
        for k2, c2 in c.items():
            for k1, c1 in src.items():
                m = k1 + k2
                v = tgt.get(m, 0) + c1 * c2
                if v:
                    tgt[m] = v
                else:
                    tgt.pop(m, None)
    return out


def _as_poly(c: MultiPoly | int) -> MultiPoly:
    return c if isinstance(c, MultiPoly) else MultiPoly(c)


def poch_finite(c: MultiPoly | int, e0: int, step: int, n: int, order: int) -> QSeries:
    """``prod_{k=0}^{n-1} (1 + c q^(e0 + k*step))`` truncated at ``order``."""
    if e0 < 0 or step < 1 or n < 0:
        raise ValueError(f"need e0 >= 0, step >= 1, n >= 0; got {e0}, {step}, {n}")
    c = _as_poly(c)
    f = [{0: 1}] + [{} for _ in range(order - 1)]
    for k in range(n):
        e = e0 + k * step
        if e == 0:
            factor = 1 + c
            f = [(MultiPoly._raw(d) * factor)._t for d in f]
            continue
        if e >= order:
            break
        f = _times_binomial(f, c._t, e)
    for d in f:
        _check_keys(d)
    return QSeries._raw(f)


def poch_infinite(c: MultiPoly | int, e0: int, step: int, order: int) -> QSeries:
    """``prod_{k>=0} (1 + c q^(e0 + k*step))`` truncated at ``order``."""
    if e0 < 1:
        raise ValueError("the infinite product needs e0 >= 1 to converge formally")
    n = max(0, -(-(order - e0) // step))
    return poch_finite(c, e0, step, n, order)


def geom_inv(c: MultiPoly | int, e: int, order: int) -> QSeries:
    """``1 / (1 - c q^e) = sum_m c^m q^(e m)`` truncated at ``order``."""
    if e < 1:
        raise ValueError("geom_inv needs e >= 1")
    c = _as_poly(c)
    out = QSeries.zero(order)
    power = MultiPoly(1)
    for n in range(0, order, e):
        out._c[n] = power
        power = power * c
    return out


def unit_inv(f: QSeries) -> QSeries:
    """Multiplicative inverse of a series with constant term exactly 1."""
    if f[0] != 1:
        raise ValueError(f"unit_inv needs constant term 1, got {f[0]}")
    fd = f._dicts(f.order)
    nz = [k for k in range(1, f.order) if fd[k]]
    g: list[dict[int, int]] = [{0: 1}]
    for n in range(1, f.order):
        acc: dict[int, int] = {}
        get = acc.get
        for k in nz:
            if k > n:
                break
            gk = g[n - k]
            for k1, c1 in fd[k].items():
                for k2, c2 in gk.items():
                    m = k1 + k2
                    acc[m] = get(m, 0) - c1 * c2
        d = {m: c for m, c in acc.items() if c}
        _check_keys(d)
        g.append(d)
    return QSeries._raw(g)


@dataclass(frozen=True)
class Mismatch:
    """Result of :func:`equal_upto`; truthy when the series agree."""

    equal: bool
    index: int | None = None
    lhs: MultiPoly | None = None
    rhs: MultiPoly | None = None

    def __bool__(self) -> bool:
        return self.equal

    def __str__(self) -> str:
        if self.equal:
            return "equal"
        return f"first mismatch at q^{self.index}: {self.lhs} != {self.rhs}"


def equal_upto(f: QSeries, g: QSeries, order: int) -> Mismatch:
    """Compare ``f`` and ``g`` on ``q^0 .. q^(order-1)``."""
    if order > f.order or order > g.order:
        raise ValueError(f"cannot compare to order {order}: operands have orders {f.order}, {g.order}")
    for n in range(order):
        if f._c[n] != g._c[n]:
            return Mismatch(False, n, f._c[n], g._c[n])
    return Mismatch(True)
