"""Exact sparse multivariate polynomials over the symbols a1..ar, z1..zr, y.

Coefficients are Python ints, so nothing ever overflows.  A monomial is stored
as one packed integer: every symbol owns a fixed 16-bit field, which turns
monomial multiplication into integer addition.  Exponents are kept below
``2**15`` so the sum of two valid exponents never carries into the next
field; products are checked against a guard mask and raise
:class:`OverflowError` instead of silently corrupting.

The canonical text form orders symbols as ``a1 < z1 < a2 < z2 < ... < y``.
Each term is read as its list of ``(symbol, exponent)`` pairs in that order,
and terms are sorted by comparing those lists lexicographically, so ``1``
comes first and everything involving ``a1`` precedes terms starting at
``z1`` or ``a2``::

    >>> p = parse_poly("a1^2*z1 + 1 + 2*a1")
    >>> str(p)
    '1 + 2*a1 + a1^2*z1'
    >>> str(parse_poly("a1^2 + a1*z1 + a2 + a1"))
    'a1 + a1*z1 + a1^2 + a2'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from operator import or_
from typing import Iterable, Mapping

__all__ = [
    "Symbol",
    "Monomial",
    "MultiPoly",
    "StrictLimitError",
    "a",
    "z",
    "y",
    "parse_poly",
    "MAX_COLORS",
    "MAX_EXPONENT",
]

MAX_COLORS = 32
FIELD_BITS = 16
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1
_FIELD_MASK = (1 << FIELD_BITS) - 1
_N_SLOTS = 2 * MAX_COLORS + 1
_GUARD = sum(1 << (FIELD_BITS * k + FIELD_BITS - 1) for k in range(_N_SLOTS))


class StrictLimitError(ValueError):
    """A term has more z_i than a_i, so the a_i -> a_i/z_i limit diverges."""


@dataclass(frozen=True)
class Symbol:
    """One of ``a<i>``, ``z<i>`` (color ``i >= 1``) or ``y``."""

    kind: str
    index: int | None = None

    def __post_init__(self):
        if self.kind in ("a", "z"):
            if not isinstance(self.index, int) or not 1 <= self.index <= MAX_COLORS:
                raise ValueError(f"{self.kind} needs an index in 1..{MAX_COLORS}, got {self.index!r}")
        elif self.kind == "y":
            if self.index is not None:
                raise ValueError("y carries no index")
        else:
            raise ValueError(f"unknown symbol kind {self.kind!r}")

    @property
    def slot(self) -> int:
        if self.kind == "y":
            return 0
        return 2 * self.index - (1 if self.kind == "a" else 0)

    @property
    def sort_key(self) -> tuple[int, int, int]:
        if self.kind == "y":
            return (1, 0, 0)
        return (0, self.index, 0 if self.kind == "a" else 1)

    def __lt__(self, other: Symbol) -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return "y" if self.kind == "y" else f"{self.kind}{self.index}"

    @classmethod
    def from_slot(cls, slot: int) -> Symbol:
        if slot == 0:
            return cls("y")
        if slot % 2:
            return cls("a", (slot + 1) // 2)
        return cls("z", slot // 2)


def _decode(key: int) -> dict[int, int]:
    out = {}
    slot = 0
    while key:
        e = key & _FIELD_MASK
        if e:
            out[slot] = e
        key >>= FIELD_BITS
        slot += 1
    return out


def _encode(exponents: Mapping[Symbol, int]) -> int:
    key = 0
    for sym, e in exponents.items():
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent of {sym} must be a nonnegative int, got {e!r}")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} of {sym} exceeds {MAX_EXPONENT}")
        key |= e << (FIELD_BITS * sym.slot)
    return key


def _check_keys(keys: Iterable[int]) -> None:
    if reduce(or_, keys, 0) & _GUARD:
        raise OverflowError(f"monomial exponent exceeds {MAX_EXPONENT}")


class Monomial:
    """A power product of symbols; ``Monomial()`` is the monomial 1."""

    __slots__ = ("_key",)

    def __init__(self, exponents: Mapping[Symbol, int] | None = None):
        self._key = _encode(exponents or {})

    @classmethod
    def _from_key(cls, key: int) -> Monomial:
        m = cls.__new__(cls)
        m._key = key
        return m

    @property
    def exponents(self) -> dict[Symbol, int]:
        return {Symbol.from_slot(s): e for s, e in _decode(self._key).items()}

    def degree(self, sym: Symbol) -> int:
        return (self._key >> (FIELD_BITS * sym.slot)) & _FIELD_MASK

    @property
    def total_degree(self) -> int:
        return sum(_decode(self._key).values())

    def __mul__(self, other: Monomial) -> Monomial:
        key = self._key + other._key
        _check_keys((key,))
        return Monomial._from_key(key)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __str__(self) -> str:
        return _format_monomial(self._key) or "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _order_key(key: int) -> tuple:
    # the (symbol, exponent) list in symbol order, compared lexicographically
    return tuple(sorted((Symbol.from_slot(s).sort_key, e) for s, e in _decode(key).items()))


def _format_monomial(key: int) -> str:
    syms = sorted((Symbol.from_slot(s), e) for s, e in _decode(key).items())
    return "*".join(str(s) if e == 1 else f"{s}^{e}" for s, e in syms)


class MultiPoly:
    """Immutable sparse polynomial with integer coefficients.

    ``terms`` maps :class:`Monomial` to nonzero ``int``.  Equal polynomials
    always have identical term maps.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Monomial, int] | int | None = None):
        if terms is None:
            self._t = {}
        elif isinstance(terms, int):
            self._t = {0: terms} if terms else {}
        else:
            t: dict[int, int] = {}
            for m, c in terms.items():
                if c:
                    t[m._key] = t.get(m._key, 0) + c
            self._t = {k: c for k, c in t.items() if c}

    @classmethod
    def _raw(cls, t: dict[int, int]) -> MultiPoly:
        # caller guarantees t has no zero coefficients and is not shared
        p = cls.__new__(cls)
        p._t = t
        return p

    @classmethod
    def monomial(cls, coeff: int = 1, **exponents: int) -> MultiPoly:
        """``MultiPoly.monomial(3, a1=2, z1=1)`` is ``3*a1^2*z1``."""
        syms = {_symbol_from_name(k): e for k, e in exponents.items()}
        return cls({Monomial(syms): coeff})

    @property
    def terms(self) -> dict[Monomial, int]:
        return {Monomial._from_key(k): c for k, c in self._t.items()}

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    @property
    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self) -> int:
        return self._t.get(0, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __add__(self, other) -> MultiPoly:
        if isinstance(other, int):
            other = MultiPoly(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return MultiPoly._raw(_add(self._t, other._t))

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other) -> MultiPoly:
        if isinstance(other, int):
            other = MultiPoly(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other) -> MultiPoly:
        if isinstance(other, int):
            return MultiPoly._raw({k: c * other for k, c in self._t.items()} if other else {})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        t = _mul(self._t, other._t)
        _check_keys(t)
        return MultiPoly._raw(t)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = MultiPoly(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def degree(self, sym: Symbol) -> int:
        shift = FIELD_BITS * sym.slot
        return max(((k >> shift) & _FIELD_MASK for k in self._t), default=0)

    def substitute(self, bindings: Mapping[Symbol | str, int]) -> MultiPoly:
        """Replace each bound symbol by an integer; unbound symbols stay."""
        slots = []
        for sym, value in bindings.items():
            if isinstance(sym, str):
                sym = _symbol_from_name(sym)
            if not isinstance(value, int):
                raise TypeError(f"{sym} must be bound to an integer, got {type(value).__name__}")
            slots.append((FIELD_BITS * sym.slot, value))
        out: dict[int, int] = {}
        for key, c in self._t.items():
            for shift, value in slots:
                e = (key >> shift) & _FIELD_MASK
                if e:
                    c *= value**e
                    key -= e << shift
            if c:
                out[key] = out.get(key, 0) + c
        return MultiPoly._raw({k: c for k, c in out.items() if c})

    def strict_limit(self) -> MultiPoly:
        """Apply a_i -> a_i/z_i and let every z_i -> infinity.

        Terms whose z_i-degree equals their a_i-degree for every color keep
        their a-part; all other terms vanish.  A term with more z_i than a_i
        has no limit and raises :class:`StrictLimitError`.
        """
        out: dict[int, int] = {}
        for key, c in self._t.items():
            exps = _decode(key)
            keep = True
            new_key = key
            for slot, e in exps.items():
                if slot == 0 or slot % 2:
                    continue
                ea = exps.get(slot - 1, 0)
                if e > ea:
                    raise StrictLimitError(
                        f"term {c}*{_format_monomial(key)} has z{slot // 2}-degree {e} "
                        f"above its a{slot // 2}-degree {ea}"
                    )
                new_key -= e << (FIELD_BITS * slot)
            for slot, ea in exps.items():
                if slot % 2 and exps.get(slot + 1, 0) != ea:
                    keep = False
            if keep:
                out[new_key] = out.get(new_key, 0) + c
        return MultiPoly._raw({k: c for k, c in out.items() if c})

    def __str__(self) -> str:
        if not self._t:
            return "0"
        pieces = []
        for key in sorted(self._t, key=_order_key):
            c = self._t[key]
            mono = _format_monomial(key)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly('{self}')"


def _add(s: dict[int, int], t: dict[int, int]) -> dict[int, int]:
    if len(s) < len(t):
        s, t = t, s
    out = dict(s)
    for k, c in t.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            del out[k]
    return out


def _mul(s: dict[int, int], t: dict[int, int]) -> dict[int, int]:
    if not s or not t:
        return {}
    if len(s) < len(t):
        s, t = t, s
    if len(t) == 1:
        ((k2, c2),) = t.items()
        return {k + k2: c * c2 for k, c in s.items()}
    out: dict[int, int] = {}
    get = out.get
    for k2, c2 in t.items():
        for k1, c1 in s.items():
            k = k1 + k2
            out[k] = get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _symbol_from_name(name: str) -> Symbol:
    m = re.fullmatch(r"([az])(\d+)|y", name)
    if not m:
        raise ValueError(f"not a symbol name: {name!r}")
    return Symbol("y") if name == "y" else Symbol(m.group(1), int(m.group(2)))


def a(i: int) -> MultiPoly:
    return MultiPoly({Monomial({Symbol("a", i): 1}): 1})


def z(i: int) -> MultiPoly:
    return MultiPoly({Monomial({Symbol("z", i): 1}): 1})


def y() -> MultiPoly:
    return MultiPoly({Monomial({Symbol("y"): 1}): 1})


_TERM = re.compile(r"\s*([+-])?\s*([^+\-\s][^+\-]*?)\s*(?=[+-]|$)")
_FACTOR = re.compile(r"(\d+)|([az]\d+|y)(?:\^(\d+))?")


def parse_poly(text: str) -> MultiPoly:
    """Parse the canonical text form (any term order is accepted)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    out: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        sign, body = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator before {body!r}")
        first = False
        coeff = -1 if sign == "-" else 1
        key = 0
        for factor in body.split("*"):
            fm = _FACTOR.fullmatch(factor.strip())
            if not fm:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            num, name, exp = fm.groups()
            if num is not None:
                coeff *= int(num)
            else:
                key += _encode({_symbol_from_name(name): int(exp) if exp else 1})
        _check_keys((key,))
        out[key] = out.get(key, 0) + coeff
        pos = m.end()
    return MultiPoly._raw({k: c for k, c in out.items() if c})
