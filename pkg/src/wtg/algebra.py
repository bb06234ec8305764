"""Exact polynomial arithmetic over the rationals.

Three carriers live here:

* ``MVPoly`` -- multivariate polynomials with ``Fraction`` coefficients over
  the fixed alphabet ``λ, x, y, X, Y, q``;
* subset masks -- plain ``int`` bitmasks where element ``j`` of
  ``{1..n}`` is bit ``j - 1``;
* ``SetIndexedPoly`` -- formal sums ``Σ c_S [S]`` used to carry the
  ``f̃(X) ∘ f̃(Y) = f̃(X ∪ Y)`` product through deletion/contraction
  recursions until a weight is finally plugged in.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Union

VARIABLES = ("λ", "x", "y", "X", "Y", "q")
_VAR_INDEX = {v: i for i, v in enumerate(VARIABLES)}
# ASCII spellings accepted by the parser
_ALIASES = {"lam": "λ", "lambda": "λ", "L": "λ"}

MAX_GROUND = 24

Scalar = Union[int, Fraction]
Monomial = tuple  # exponent vector, one entry per VARIABLES


def as_fraction(value) -> Fraction:
    """Parse ints, Fractions and strings such as ``"3/4"`` or ``"-2"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


# ---------------------------------------------------------------------------
# subset masks
# ---------------------------------------------------------------------------

def mask_of(elements: Iterable[int]) -> int:
    """Mask of a set of 1-based elements."""
    m = 0
    for j in elements:
        if j < 1:
            raise ValueError(f"element {j} outside 1..n")
        m |= 1 << (j - 1)
    return m


def elements_of(mask: int) -> list[int]:
    """Sorted 1-based elements of ``mask``."""
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


def check_mask(mask: int, n: int) -> None:
    if not 0 <= n <= MAX_GROUND:
        raise ValueError(f"ground set size {n} outside 0..{MAX_GROUND}")
    if mask < 0 or mask >> n:
        raise ValueError(f"mask {mask:#x} has bits outside 1..{n}")


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def masks_of_size(n: int, k: int) -> list[int]:
    """All k-subsets of {1..n} as masks, in lexicographic order of elements."""
    return [mask_of(c) for c in combinations(range(1, n + 1), k)]


# ---------------------------------------------------------------------------
# multivariate polynomials
# ---------------------------------------------------------------------------

def _mono(**exps: int) -> Monomial:
    e = [0] * len(VARIABLES)
    for name, k in exps.items():
        e[_VAR_INDEX[name]] = k
    return tuple(e)


_ONE = (0,) * len(VARIABLES)


class MVPoly:
    """Immutable polynomial with exact rational coefficients.

    Equality is equality of canonical term sets, so two polynomials compare
    equal exactly when they are the same polynomial.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != len(VARIABLES):
                    raise ValueError(f"monomial {mono} has wrong arity")
                c = as_fraction(c)
                if c:
                    clean[tuple(mono)] = clean.get(tuple(mono), 0) + c
                    if not clean[tuple(mono)]:
                        del clean[tuple(mono)]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "MVPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> "MVPoly":
        c = as_fraction(c)
        return cls._raw({_ONE: c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MVPoly":
        name = _ALIASES.get(name, name)
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}; alphabet is {VARIABLES}")
        return cls._raw({_mono(**{name: power}): Fraction(1)})

    @classmethod
    def zero(cls) -> "MVPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "MVPoly":
        return cls.const(1)

    # -- inspection ---------------------------------------------------------

    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def variables(self) -> set[str]:
        used = set()
        for mono in self._terms:
            for i, k in enumerate(mono):
                if k:
                    used.add(VARIABLES[i])
        return used

    def degree(self, name: str | None = None) -> int:
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if name is None:
            return max(sum(m) for m in self._terms)
        i = _VAR_INDEX[_ALIASES.get(name, name)]
        return max(m[i] for m in self._terms)

    def coefficients(self, name: str) -> list[Fraction]:
        """Coefficient list ``[a_0, a_1, ...]`` of a univariate polynomial."""
        name = _ALIASES.get(name, name)
        extra = self.variables() - {name}
        if extra:
            raise ValueError(f"polynomial is not univariate in {name}: also uses {sorted(extra)}")
        i = _VAR_INDEX[name]
        out = [Fraction(0)] * (self.degree(name) + 1 if self._terms else 0)
        for mono, c in self._terms.items():
            out[mono[i]] = c
        return out

    def constant_term(self) -> Fraction:
        return self._terms.get(_ONE, Fraction(0))

    def is_constant(self) -> bool:
        return all(m == _ONE for m in self._terms)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "MVPoly":
        if isinstance(other, MVPoly):
            return other
        return MVPoly.const(other)

    def __add__(self, other) -> "MVPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return MVPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MVPoly":
        return MVPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "MVPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MVPoly":
        return self._coerce(other) - self

    def scale(self, c: Scalar) -> "MVPoly":
        c = as_fraction(c)
        if not c:
            return MVPoly.zero()
        return MVPoly._raw({m: v * c for m, v in self._terms.items()})

    def __mul__(self, other) -> "MVPoly":
        if not isinstance(other, MVPoly):
            return self.scale(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return MVPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MVPoly":
        if isinstance(other, MVPoly):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("only division by nonzero constants is supported")
            other = other.constant_term()
        c = as_fraction(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(1 / c)

    def __pow__(self, k: int) -> "MVPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MVPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MVPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MVPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution / evaluation -----------------------------------------

    def substitute(self, bindings: Mapping[str, "MVPoly | Scalar"]) -> "MVPoly":
        """Simultaneously replace variables; unbound variables stay free."""
        images: dict[int, MVPoly] = {}
        for name, value in bindings.items():
            name = _ALIASES.get(name, name)
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r}")
            images[_VAR_INDEX[name]] = self._coerce(value)
        if not images:
            return self
        power_cache: dict[tuple[int, int], MVPoly] = {}

        def power(i: int, k: int) -> MVPoly:
            key = (i, k)
            if key not in power_cache:
                power_cache[key] = images[i] ** k
            return power_cache[key]

        total = MVPoly.zero()
        for mono, c in self._terms.items():
            kept = tuple(0 if i in images else k for i, k in enumerate(mono))
            term = MVPoly._raw({kept: c})
            for i, k in enumerate(mono):
                if k and i in images:
                    term = term * power(i, k)
            total = total + term
        return total

    def evaluate(self, **values: Scalar) -> Fraction:
        """Evaluate at rational values; every used variable must be bound."""
        values = {_ALIASES.get(k, k): v for k, v in values.items()}
        missing = self.variables() - set(values)
        if missing:
            raise ValueError(f"unbound variables {sorted(missing)}")
        return self.substitute(values).constant_term()

    # -- canonical text / JSON ---------------------------------------------

    @staticmethod
    def _sort_key(mono: Monomial):
        return (-sum(mono), tuple(-k for k in mono))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: self._sort_key(t[0]))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MVPoly({self.to_text()!r})"

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, (mono, c) in enumerate(self.sorted_terms()):
            factors = []
            for i, k in enumerate(mono):
                if k == 1:
                    factors.append(VARIABLES[i])
                elif k > 1:
                    factors.append(f"{VARIABLES[i]}^{k}")
            mag = abs(c)
            mag_txt = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if not factors:
                body = mag_txt
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([mag_txt] + factors)
            if idx == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "MVPoly":
        """Parse the canonical rendering (and reasonable variations of it)."""
        src = text.replace(" ", "")
        if not src:
            raise ValueError("empty polynomial text")
        if src == "0":
            return cls.zero()
        pieces = re.findall(r"[+-]?[^+-]+", src)
        if "".join(pieces) != src:
            raise ValueError(f"cannot parse polynomial {text!r}")
        total = cls.zero()
        for piece in pieces:
            sign = -1 if piece.startswith("-") else 1
            body = piece.lstrip("+-")
            if not body:
                raise ValueError(f"dangling sign in {text!r}")
            term = cls.const(sign)
            for factor in body.split("*"):
                if not factor:
                    raise ValueError(f"empty factor in {text!r}")
                m = re.fullmatch(r"(\d+(?:/\d+)?)", factor)
                if m:
                    term = term.scale(Fraction(m.group(1)))
                    continue
                m = re.fullmatch(r"([^\d^/]+)(?:\^(\d+))?", factor)
                if not m:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
                term = term * cls.var(m.group(1), int(m.group(2) or 1))
            total = total + term
        return total

    def to_json(self) -> list[dict]:
        out = []
        for mono, c in self.sorted_terms():
            coeff = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            out.append({
                "coeff": coeff,
                "monomial": {VARIABLES[i]: k for i, k in enumerate(mono) if k},
            })
        return out

    @classmethod
    def from_json(cls, data: list[dict]) -> "MVPoly":
        total = cls.zero()
        for item in data:
            term = cls.const(as_fraction(item["coeff"]))
            for name, k in item.get("monomial", {}).items():
                term = term * cls.var(name, int(k))
            total = total + term
        return total


LAM = MVPoly.var("λ")
X_ = MVPoly.var("x")
Y_ = MVPoly.var("y")
BIG_X = MVPoly.var("X")
BIG_Y = MVPoly.var("Y")
Q = MVPoly.var("q")


def mvpoly_substitute(p: MVPoly, bindings: Mapping[str, MVPoly | Scalar]) -> MVPoly:
    return p.substitute(bindings)


# ---------------------------------------------------------------------------
# set-indexed polynomials
# ---------------------------------------------------------------------------

class SetIndexedPoly:
    """Formal sum ``Σ_S c_S · [S]`` with ``S ⊆ {1..n}`` and polynomial ``c_S``.

    ``[S]`` stands for the symbol ``f̃(S)`` of a yet-unknown weight ``f``;
    :meth:`adjoin` is left multiplication by ``f̃({j})`` under ``∘``.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[int, MVPoly] | None = None):
        if not 0 <= n <= MAX_GROUND:
            raise ValueError(f"ground set size {n} outside 0..{MAX_GROUND}")
        self.n = n
        clean: dict[int, MVPoly] = {}
        for mask, poly in (terms or {}).items():
            check_mask(mask, n)
            poly = MVPoly._coerce(poly)
            if poly:
                clean[mask] = clean[mask] + poly if mask in clean else poly
                if not clean[mask]:
                    del clean[mask]
        self._terms = clean

    @classmethod
    def unit(cls, n: int, coeff: MVPoly | Scalar = 1) -> "SetIndexedPoly":
        """``coeff · [∅]``."""
        return cls(n, {0: MVPoly._coerce(coeff)})

    def terms(self) -> dict[int, MVPoly]:
        return dict(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetIndexedPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __repr__(self) -> str:
        inner = " + ".join(
            f"({p})·{{{','.join(map(str, elements_of(m)))}}}"
            for m, p in sorted(self._terms.items())
        )
        return f"SetIndexedPoly(n={self.n}, {inner or '0'})"

    def _combine(self, other: "SetIndexedPoly", sign: int) -> "SetIndexedPoly":
        if self.n != other.n:
            raise ValueError(f"ground sizes differ: {self.n} vs {other.n}")
        out = dict(self._terms)
        for mask, poly in other._terms.items():
            if sign < 0:
                poly = -poly
            v = out[mask] + poly if mask in out else poly
            if v:
                out[mask] = v
            else:
                out.pop(mask, None)
        res = SetIndexedPoly.__new__(SetIndexedPoly)
        res.n = self.n
        res._terms = out
        return res

    def __add__(self, other: "SetIndexedPoly") -> "SetIndexedPoly":
        return self._combine(other, 1)

    def __sub__(self, other: "SetIndexedPoly") -> "SetIndexedPoly":
        return self._combine(other, -1)

    def __neg__(self) -> "SetIndexedPoly":
        return self.scale(-1)

    def scale(self, c: MVPoly | Scalar) -> "SetIndexedPoly":
        c = MVPoly._coerce(c)
        return SetIndexedPoly(self.n, {m: p * c for m, p in self._terms.items()})

    __mul__ = scale
    __rmul__ = scale

    def adjoin(self, j: int) -> "SetIndexedPoly":
        """Replace every ``[S]`` by ``[S ∪ {j}]``, merging coinciding keys."""
        if not 1 <= j <= self.n:
            raise ValueError(f"element {j} outside 1..{self.n}")
        bit = 1 << (j - 1)
        out: dict[int, MVPoly] = {}
        for mask, poly in self._terms.items():
            key = mask | bit
            out[key] = out[key] + poly if key in out else poly
        return SetIndexedPoly(self.n, out)

    def relabel(self, mapping: Mapping[int, int], n: int | None = None) -> "SetIndexedPoly":
        """Push every index set through ``mapping`` (1-based element -> element)."""
        n = self.n if n is None else n
        out: dict[int, MVPoly] = {}
        for mask, poly in self._terms.items():
            key = mask_of(mapping[j] for j in elements_of(mask))
            out[key] = out[key] + poly if key in out else poly
        return SetIndexedPoly(n, out)

    def evaluate(self, f) -> MVPoly:
        """``Σ_S c_S · f̃(S)`` for a weight function ``f``."""
        if f.n != self.n:
            raise ValueError(f"weight is on {f.n} elements, expression on {self.n}")
        total = MVPoly.zero()
        for mask, poly in self._terms.items():
            w = f.tilde(mask)
            if w:
                total = total + poly.scale(w)
        return total


def setpoly_adjoin(t: SetIndexedPoly, j: int) -> SetIndexedPoly:
    return t.adjoin(j)


def setpoly_evaluate(t: SetIndexedPoly, f) -> MVPoly:
    return t.evaluate(f)
