"""Exact sparse multivariate polynomials over indexed variable families.

A variable is a pair ``(family, indices)`` such as ``("z", (3, 1))`` or
``("y", ())``.  A monomial is a tuple of ``(variable, exponent)`` pairs sorted
by variable, and a :class:`Poly` maps monomials to Python integers.  Python
ints are arbitrary precision, which is what the partition sums need.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping, Union

Variable = tuple[str, tuple[int, ...]]
Monomial = tuple[tuple[Variable, int], ...]

# family -> allowed index arities
FAMILY_ARITY: dict[str, frozenset[int]] = {
    "z": frozenset({2}),
    "x2": frozenset({2}),
    "x": frozenset({1}),
    "t": frozenset({0, 1}),
    "p": frozenset({0, 1}),
    "y": frozenset({0}),
    "lambda": frozenset({0}),
    "u": frozenset({0}),
    "v": frozenset({0}),
    "yk": frozenset({1}),
    "X": frozenset({0}),
    "Y": frozenset({0}),
}

ONE: Monomial = ()


def make_var(family: str, *indices: int) -> Variable:
    """Build a validated variable key."""
    arity = FAMILY_ARITY.get(family)
    if arity is None:
        raise ValueError(f"unknown variable family {family!r}")
    if len(indices) not in arity:
        raise ValueError(f"family {family!r} takes {sorted(arity)} indices, got {len(indices)}")
    if family in ("z", "x2") and (indices[0] < 1 or indices[1] < 0):
        raise ValueError(f"{family}[{indices[0]},{indices[1]}]: need first index >= 1, second >= 0")
    return (family, tuple(int(i) for i in indices))


def mono_from_counts(counts: Mapping[Variable, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in counts.items() if e))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_sort_key(m: Monomial):
    """Graded order: higher total degree first, then lexicographic on the
    expanded variable sequence."""
    expanded = tuple(v for v, e in m for _ in range(e))
    return (-len(expanded), expanded)


def format_var(v: Variable) -> str:
    family, idx = v
    if not idx:
        return family
    return f"{family}[{','.join(str(i) for i in idx)}]"


def format_mono(m: Monomial) -> str:
    parts = []
    for v, e in m:
        s = format_var(v)
        parts.append(s if e == 1 else f"{s}^{e}")
    return "*".join(parts)


Scalar = Union[int, Fraction]


class Poly:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = (
            {m: c for m, c in terms.items() if c} if terms else {}
        )

    # constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls({ONE: c})

    @classmethod
    def var(cls, family: str, *indices: int) -> Poly:
        return cls({((make_var(family, *indices), 1),): 1})

    @classmethod
    def monomial(cls, counts: Mapping[Variable, int], coeff: int = 1) -> Poly:
        return cls({mono_from_counts(counts): coeff})

    # ring operations ----------------------------------------------------

    def __add__(self, other) -> Poly:
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> Poly:
        return _coerce(other) - self

    def __mul__(self, other) -> Poly:
        other = _coerce(other)
        out: dict[Monomial, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative exponent")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"Poly({self.canonical_string()!r})"

    def __str__(self) -> str:
        return self.canonical_string()

    # queries ------------------------------------------------------------

    def coefficient(self, m: Monomial | Mapping[Variable, int]) -> int:
        if isinstance(m, Mapping):
            m = mono_from_counts(m)
        return self.terms.get(m, 0)

    def variables(self) -> set[Variable]:
        return {v for m in self.terms for v, _ in m}

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda kv: mono_sort_key(kv[0]))

    def canonical_string(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            body = format_mono(m)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if i == 0:
                out.append(text if c > 0 else f"-{text}")
            else:
                out.append(f" + {text}" if c > 0 else f" - {text}")
        return "".join(out)

    # substitution and evaluation ---------------------------------------

    def substitute(self, rule: Callable[[Variable], "Poly | int | None"]) -> Poly:
        """Apply a ring homomorphism given on variables.

        ``rule`` returns the image of a variable, or ``None`` to leave it in
        place.
        """
        images: dict[Variable, Poly] = {}
        powers: dict[tuple[Variable, int], Poly] = {}

        def power(v: Variable, e: int) -> Poly:
            key = (v, e)
            if key not in powers:
                if v not in images:
                    img = rule(v)
                    images[v] = Poly({((v, 1),): 1}) if img is None else _coerce(img)
                powers[key] = images[v] ** e
            return powers[key]

        out = Poly()
        acc: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            term = Poly.const(c)
            for v, e in m:
                term = term * power(v, e)
            for tm, tc in term.terms.items():
                acc[tm] = acc.get(tm, 0) + tc
        out.terms = {m: c for m, c in acc.items() if c}
        return out

    def evaluate(self, assignment: Mapping[Variable, Scalar] | Callable[[Variable], Scalar]) -> Fraction:
        get = assignment if callable(assignment) else assignment.__getitem__
        cache: dict[Variable, Fraction] = {}
        total = Fraction(0)
        for m, c in self.terms.items():
            val = Fraction(c)
            for v, e in m:
                if v not in cache:
                    cache[v] = Fraction(get(v))
                val *= cache[v] ** e
            total += val
        return total

    def degree_in(self, v: Variable) -> int:
        return max((e for m in self.terms for w, e in m if w == v), default=0)

    def divide_linear(self, v: Variable, root: int = 1) -> Poly:
        """Exact division by ``(v - root)``; raises if the remainder is non-zero."""
        groups: dict[Monomial, dict[int, int]] = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for w, k in m:
                if w == v:
                    e = k
                else:
                    rest.append((w, k))
            groups.setdefault(tuple(rest), {})[e] = c
        out: dict[Monomial, int] = {}
        for rest, coeffs in groups.items():
            deg = max(coeffs)
            # synthetic division from the top
            carry = 0
            quot = {}
            for e in range(deg, 0, -1):
                carry = coeffs.get(e, 0) + carry * root if e < deg else coeffs.get(e, 0)
                quot[e - 1] = carry
            remainder = coeffs.get(0, 0) + carry * root if deg > 0 else coeffs.get(0, 0)
            if remainder:
                raise ArithmeticError(f"not divisible by ({format_var(v)} - {root})")
            for e, c in quot.items():
                if c:
                    out[mono_mul(rest, ((v, e),) if e else ())] = c
        return Poly(out)

    # serialization ------------------------------------------------------

    def to_json_obj(self) -> list:
        return [
            {"coeff": str(c), "vars": [[v[0], list(v[1]), e] for v, e in m]}
            for m, c in self.sorted_terms()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Iterable[Mapping]) -> Poly:
        terms: dict[Monomial, int] = {}
        for term in obj:
            counts: dict[Variable, int] = {}
            for family, idx, e in term["vars"]:
                v = make_var(family, *idx)
                counts[v] = counts.get(v, 0) + int(e)
            m = mono_from_counts(counts)
            terms[m] = terms.get(m, 0) + int(term["coeff"])
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> Poly:
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> Poly:
        """Inverse of :meth:`canonical_string` (accepts any term order)."""
        text = text.strip()
        if text == "0":
            return cls()
        if not text.startswith("-"):
            text = "+ " + text
        out = cls()
        for sign, body in _TERM_RE.findall(text):
            coeff = 1
            counts: dict[Variable, int] = {}
            for factor in body.strip().split("*"):
                factor = factor.strip()
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                mt = _FACTOR_RE.fullmatch(factor)
                if not mt:
                    raise ValueError(f"cannot parse factor {factor!r}")
                family, idx, exp = mt.groups()
                indices = tuple(int(i) for i in idx.split(",")) if idx else ()
                v = make_var(family, *indices)
                counts[v] = counts.get(v, 0) + (int(exp) if exp else 1)
            out = out + cls.monomial(counts, -coeff if sign == "-" else coeff)
        return out


_TERM_RE = re.compile(r"([+-])\s*([^+-]+)")
_FACTOR_RE = re.compile(r"([A-Za-z][A-Za-z0-9]*?)(?:\[([0-9,]+)\])?(?:\^([0-9]+))?")


def _coerce(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, int):
        return Poly.const(value)
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")


def binomial_power(base: Poly, shift: int, k: int) -> Poly:
    """``(base + shift)**k`` expanded with binomial coefficients."""
    out = Poly()
    for j in range(k + 1):
        out = out + (base ** j) * (comb(k, j) * shift ** (k - j))
    return out
