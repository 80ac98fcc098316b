"""Paired symmetric-function bases and conversions between Ū, Ȳ and χ̄.

The paired power sums are ``pbar[r,s] = sum_i x_i^r t_i^s``; the paired
augmented monomials ``mbar`` sum ``prod_j x_{i_j}^{a_j} (1 + t_{i_j})^{b_j}``
over ordered tuples of *distinct* indices.  Repeated pairs therefore carry
their automorphism multiplicity, e.g. ``m_(1,1) = 2 * sum_{i<j} x_i x_j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import comb
from typing import Mapping, Sequence

from .partitions import (
    IntegerPartition,
    PairPartition,
    canonical_pairs,
    coarsening_table,
    set_partitions,
)
from .polyring import Poly, make_var

BASES = ("p", "m")


@dataclass
class PairedCoefficientMap:
    """Coefficients of a paired symmetric function in one of the two bases."""

    basis: str
    n: int
    m: int
    terms: dict[PairPartition, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}")
        clean = {}
        for key, c in self.terms.items():
            key = canonical_pairs(key)
            if sum(a for a, _ in key) != self.n or sum(b for _, b in key) > self.m:
                raise ValueError(f"{key} is not a pair partition of ({self.n}, {self.m})")
            if c:
                clean[key] = clean.get(key, 0) + c
        self.terms = {k: c for k, c in clean.items() if c}

    def __eq__(self, other):
        if not isinstance(other, PairedCoefficientMap):
            return NotImplemented
        return (self.basis, self.n, self.terms) == (other.basis, other.n, other.terms)

    def sorted_terms(self) -> list[tuple[PairPartition, int]]:
        return sorted(self.terms.items(), reverse=True)

    def to_json_obj(self) -> dict:
        return {
            "basis": self.basis,
            "n": self.n,
            "m": self.m,
            "terms": [[[list(p) for p in key], str(c)] for key, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> PairedCoefficientMap:
        terms: dict[PairPartition, int] = {}
        for pairs, c in obj["terms"]:
            key = canonical_pairs(tuple(p) for p in pairs)
            terms[key] = terms.get(key, 0) + int(c)
        return cls(obj["basis"], int(obj["n"]), int(obj["m"]), terms)

    @classmethod
    def from_json(cls, text: str) -> PairedCoefficientMap:
        return cls.from_json_obj(json.loads(text))

    def to_text(self) -> str:
        sym = "pbar" if self.basis == "p" else "mbar"
        if not self.terms:
            return "0"
        out = []
        for key, c in self.sorted_terms():
            label = sym + "[" + ",".join(f"({a},{b})" for a, b in key) + "]"
            out.append(f"{c}*{label}" if c != 1 else label)
        return " + ".join(out).replace("+ -", "- ")

    def evaluate(self, x: Sequence, t: Sequence) -> Fraction:
        """Value at a point truncated to ``len(x)`` variable pairs."""
        fn = eval_paired_power_sum if self.basis == "p" else eval_paired_augmented_monomial
        return sum((c * fn(key, x, t) for key, c in self.terms.items()), Fraction(0))


# ----------------------------------------------------------------------------
# symbolic bases (truncated to x[1..N], t[1..N])


def _x(i: int) -> Poly:
    return Poly.var("x", i)


def _t(i: int) -> Poly:
    return Poly.var("t", i)


def power_sum(r: int, N: int) -> Poly:
    if r < 1 or N < 1:
        raise ValueError("need r >= 1 and N >= 1")
    return Poly({(((make_var("x", i)), r),): 1 for i in range(1, N + 1)})


def power_sum_product(tau: IntegerPartition, N: int) -> Poly:
    out = Poly.const(1)
    for r in tau:
        out = out * power_sum(r, N)
    return out


def augmented_monomial(tau: IntegerPartition, N: int) -> Poly:
    """Sum over ordered tuples of distinct indices; zero when ``len(tau) > N``."""
    terms: dict = {}
    for idx in permutations(range(1, N + 1), len(tau)):
        mono = tuple(sorted((make_var("x", i), a) for i, a in zip(idx, tau)))
        terms[mono] = terms.get(mono, 0) + 1
    return Poly(terms)


def paired_power_sum(pairs: PairPartition, N: int) -> Poly:
    out = Poly.const(1)
    for a, b in pairs:
        factor = Poly()
        for i in range(1, N + 1):
            factor = factor + (_x(i) ** a) * (_t(i) ** b)
        out = out * factor
    return out


def paired_augmented_monomial(pairs: PairPartition, N: int) -> Poly:
    out = Poly()
    for idx in permutations(range(1, N + 1), len(pairs)):
        term = Poly.const(1)
        for i, (a, b) in zip(idx, pairs):
            term = term * (_x(i) ** a) * ((_t(i) + 1) ** b)
        out = out + term
    return out


# ----------------------------------------------------------------------------
# numeric evaluation


def eval_paired_power_sum(pairs: PairPartition, x: Sequence, t: Sequence) -> Fraction:
    total = Fraction(1)
    for a, b in pairs:
        total *= sum((Fraction(xi) ** a * Fraction(ti) ** b for xi, ti in zip(x, t)), Fraction(0))
    return total


def eval_paired_augmented_monomial(pairs: PairPartition, x: Sequence, t: Sequence) -> Fraction:
    """Sum over injective assignments of parts to indices, by DP over the set
    of parts already placed."""
    k = len(pairs)
    full = (1 << k) - 1
    dp = [Fraction(0)] * (1 << k)
    dp[0] = Fraction(1)
    for xi, ti in zip(x, t):
        xi, ti = Fraction(xi), Fraction(ti)
        vals = [xi ** a * (1 + ti) ** b for a, b in pairs]
        for S in range(full, 0, -1):
            acc = dp[S]
            rest = S
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                prev = dp[S ^ low]
                if prev:
                    acc += prev * vals[j]
                rest ^= low
            dp[S] = acc
    return dp[full]


def eval_power_sum_product(tau: IntegerPartition, x: Sequence) -> Fraction:
    return eval_paired_power_sum(tuple((a, 0) for a in tau), x, [0] * len(x))


def eval_augmented_monomial(tau: IntegerPartition, x: Sequence) -> Fraction:
    return eval_paired_augmented_monomial(tuple((a, 0) for a in tau), x, [0] * len(x))


# ----------------------------------------------------------------------------
# basis change


def paired_p_to_m(pairs: PairPartition) -> dict[PairPartition, int]:
    """m̄-expansion of p̄ for one pair partition.

    Summing over set partitions of the factors gives ordered distinct-index
    tuples with merged pairs; each merged ``t^B`` is then rewritten as
    ``sum_c C(B, c) (-1)^(B-c) (1+t)^c``.
    """
    pairs = canonical_pairs(pairs)
    if not pairs:
        return {(): 1}
    out: dict[PairPartition, int] = {}
    for sigma in set_partitions(len(pairs)):
        merged = [
            (sum(pairs[i][0] for i in block), sum(pairs[i][1] for i in block))
            for block in sigma
        ]
        for cs in product(*(range(B + 1) for _, B in merged)):
            coef = 1
            for (_, B), c in zip(merged, cs):
                coef *= comb(B, c) * (-1) ** (B - c)
            key = canonical_pairs((A, c) for (A, _), c in zip(merged, cs))
            out[key] = out.get(key, 0) + coef
    return {k: c for k, c in out.items() if c}


def p_to_m(coeffs: PairedCoefficientMap) -> PairedCoefficientMap:
    if coeffs.basis == "m":
        return coeffs
    out: dict[PairPartition, int] = {}
    for key, c in coeffs.terms.items():
        for mkey, mc in paired_p_to_m(key).items():
            out[mkey] = out.get(mkey, 0) + c * mc
    return PairedCoefficientMap("m", coeffs.n, coeffs.m, out)


def _z_index_pairs(mono) -> list[tuple[int, int]]:
    pairs = []
    for (family, idx), e in mono:
        if family != "z":
            raise ValueError(f"expected only z variables, found {family}")
        pairs.extend([idx] * e)
    return pairs


def ubar_to_ybar(ubar: Poly) -> PairedCoefficientMap:
    """Read Ȳ's p̄-coefficients off Ū via ``z[r, s] -> pbar[r, r + s - 1]``."""
    terms: dict[PairPartition, int] = {}
    totals = set()
    for mono, c in ubar.terms.items():
        key = canonical_pairs((r, r + s - 1) for r, s in _z_index_pairs(mono))
        totals.add(sum(a for a, _ in key))
        terms[key] = terms.get(key, 0) + c
    if len(totals) > 1:
        raise ValueError(f"monomials disagree on the vertex count: {sorted(totals)}")
    n = totals.pop() if totals else 0
    m = max((sum(b for _, b in key) for key in terms), default=0)
    return PairedCoefficientMap("p", n, m, terms)


def ybar_to_ubar(coeffs: PairedCoefficientMap) -> Poly:
    if coeffs.basis != "p":
        raise ValueError("expected a paired power-sum expansion")
    terms: dict = {}
    for key, c in coeffs.terms.items():
        counts: dict = {}
        for r, s in key:
            if s < r - 1:
                raise ValueError(f"pair ({r},{s}) cannot come from a connected component")
            v = make_var("z", r, s - r + 1)
            counts[v] = counts.get(v, 0) + 1
        mono = tuple(sorted(counts.items()))
        terms[mono] = terms.get(mono, 0) + c
    return Poly(terms)


def ybar_to_extended_polychromate(coeffs: PairedCoefficientMap) -> Poly:
    """χ̄ has the same coefficients on ``prod x2[a,b]`` as Ȳ has on ``mbar``."""
    mcoeffs = p_to_m(coeffs)
    terms: dict = {}
    for key, c in mcoeffs.terms.items():
        counts: dict = {}
        for a, b in key:
            v = make_var("x2", a, b)
            counts[v] = counts.get(v, 0) + 1
        terms[tuple(sorted(counts.items()))] = c
    return Poly(terms)


def extended_polychromate_to_ybar_m(chibar: Poly, m: int | None = None) -> PairedCoefficientMap:
    terms: dict[PairPartition, int] = {}
    n_values = set()
    for mono, c in chibar.terms.items():
        pairs = []
        for (family, idx), e in mono:
            if family != "x2":
                raise ValueError(f"expected only x2 variables, found {family}")
            pairs.extend([idx] * e)
        key = canonical_pairs(pairs)
        n_values.add(sum(a for a, _ in key))
        terms[key] = terms.get(key, 0) + c
    if len(n_values) > 1:
        raise ValueError("monomials disagree on the vertex count")
    n = n_values.pop() if n_values else 0
    if m is None:
        m = max((sum(b for _, b in key) for key in terms), default=0)
    return PairedCoefficientMap("m", n, m, terms)


def _split_u_monomial(mono) -> tuple[IntegerPartition, int]:
    parts: list[int] = []
    ydeg = 0
    for (family, idx), e in mono:
        if family == "x":
            parts.extend([idx[0]] * e)
        elif family == "y":
            ydeg = e
        else:
            raise ValueError(f"unexpected variable family {family} in a U-polynomial")
    return tuple(sorted(parts, reverse=True)), ydeg


def u_to_polychromate(u: Poly, n: int) -> Poly:
    """Replace each ``x_tau y^j`` by ``sum_tau' a(tau, tau') x_tau' y^j (y-1)^(n-k(tau))``."""
    y = Poly.var("y")
    out = Poly()
    for mono, c in u.terms.items():
        tau, j = _split_u_monomial(mono)
        if sum(tau) != n:
            raise ValueError(f"monomial of type {tau} does not partition n={n}")
        coarse = Poly()
        for tau_p, a in coarsening_table(tau).items():
            counts: dict = {}
            for part in tau_p:
                v = make_var("x", part)
                counts[v] = counts.get(v, 0) + 1
            coarse = coarse + Poly.monomial(counts, a)
        out = out + coarse * (y ** j) * ((y - 1) ** (n - len(tau))) * c
    return out
