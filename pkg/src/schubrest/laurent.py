"""Exact Laurent polynomials in t_1..t_n with integer coefficients.

Terms are a dict from dense exponent tuples (length n, possibly negative
entries) to nonzero ints.  Canonical order is descending lexicographic on
the exponent tuple; every rendering uses it, so output is byte-stable.
"""
from __future__ import annotations

import json
from typing import Iterable, Mapping, Sequence

Exponents = tuple[int, ...]


class LaurentPolynomial:
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Sequence[int], int] | None = None) -> None:
        self.n = int(n)
        clean: dict[Exponents, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != self.n:
                raise ValueError(f"exponent vector {e} has length {len(e)}, expected {self.n}")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict[Exponents, int]) -> "LaurentPolynomial":
        p = cls.__new__(cls)
        p.n = n
        p._terms = terms
        return p

    @classmethod
    def zero(cls, n: int) -> "LaurentPolynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: int) -> "LaurentPolynomial":
        return cls._raw(n, {(0,) * n: int(c)} if c else {})

    @classmethod
    def one(cls, n: int) -> "LaurentPolynomial":
        return cls.constant(n, 1)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: int = 1) -> "LaurentPolynomial":
        e = tuple(int(x) for x in exponents)
        return cls._raw(len(e), {e: int(coeff)} if coeff else {})

    @classmethod
    def variable(cls, n: int, i: int, power: int = 1) -> "LaurentPolynomial":
        """t_i^power, 1-based i."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = power
        return cls.monomial(e)

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self._terms for x in e)

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def homogeneous_component(self, degree: int) -> "LaurentPolynomial":
        return self._raw(self.n, {e: c for e, c in self._terms.items() if sum(e) == degree})

    def _coerce(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.n != self.n:
                raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return self.constant(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return self._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._raw(self.n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use monomial()")
        acc = self.one(self.n)
        for _ in range(k):
            acc = acc * self
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.constant(self.n, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.n}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def rename(self, n: int) -> "LaurentPolynomial":
        """Same terms viewed in a ring with ``n`` >= self.n variables."""
        if n < self.n:
            raise ValueError("cannot drop variables")
        pad = (0,) * (n - self.n)
        return self._raw(n, {e + pad: c for e, c in self._terms.items()})

    # rendering

    def to_text(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{var}{i}" if x == 1 else f"{var}{i}^{x}" for i, x in enumerate(e, 1) if x
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def to_latex(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        out = ""
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = "".join(
                f"{var}_{{{i}}}" if x == 1 else f"{var}_{{{i}}}^{{{x}}}" for i, x in enumerate(e, 1) if x
            )
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if c < 0:
                out += "-" if k == 0 else " - "
            elif k:
                out += " + "
            out += body
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"exponents": list(e), "coeff": c} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> "LaurentPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["n"])
        terms: dict[Exponents, int] = {}
        for t in data["terms"]:
            e = tuple(int(x) for x in t["exponents"])
            if e in terms:
                raise ValueError(f"duplicate exponent vector {e}")
            terms[e] = int(t["coeff"])
        return cls(n, terms)


def product(factors: Iterable[LaurentPolynomial], n: int) -> LaurentPolynomial:
    acc = LaurentPolynomial.one(n)
    for f in factors:
        acc = acc * f
    return acc


def ratio(n: int, b: int, a: int) -> LaurentPolynomial:
    """t_b / t_a"""
    e = [0] * n
    e[b - 1] += 1
    e[a - 1] -= 1
    return LaurentPolynomial.monomial(e)


def k_weight_factor(a: int, b: int, n: int) -> LaurentPolynomial:
    """1 - t_b/t_a, the K-class contribution of the coordinate y_ab."""
    return 1 - ratio(n, b, a)


def h_weight_factor(a: int, b: int, n: int) -> LaurentPolynomial:
    """t_b - t_a"""
    return LaurentPolynomial.variable(n, b) - LaurentPolynomial.variable(n, a)


# Truncated power series ----------------------------------------------------


class TruncatedSeries:
    """Power series in s_1..s_n with every term of total degree > cutoff dropped."""

    __slots__ = ("n", "cutoff", "_terms")

    def __init__(self, n: int, cutoff: int, terms: Mapping[Sequence[int], int] | None = None) -> None:
        self.n = n
        self.cutoff = cutoff
        clean: dict[Exponents, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for a series in {n} variables")
            if sum(e) <= cutoff and c:
                clean[e] = clean.get(e, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def from_polynomial(cls, p: LaurentPolynomial, cutoff: int) -> "TruncatedSeries":
        if not p.is_polynomial():
            raise ValueError("negative exponents cannot enter a power series")
        return cls(p.n, cutoff, p.terms)

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cutoff = min(self.cutoff, other.cutoff)
        out = {e: c for e, c in self._terms.items() if sum(e) <= cutoff}
        for e, c in other._terms.items():
            if sum(e) <= cutoff:
                out[e] = out.get(e, 0) + c
        return TruncatedSeries(self.n, cutoff, out)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if other.n != self.n:
            raise ValueError("variable count mismatch")
        cutoff = min(self.cutoff, other.cutoff)
        out: dict[Exponents, int] = {}
        right = [(e, sum(e), c) for e, c in other._terms.items()]
        for e1, c1 in self._terms.items():
            d1 = sum(e1)
            for e2, d2, c2 in right:
                if d1 + d2 > cutoff:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        new = TruncatedSeries.__new__(TruncatedSeries)
        new.n, new.cutoff = self.n, cutoff
        new._terms = {e: c for e, c in out.items() if c}
        return new

    def scale(self, k: int) -> "TruncatedSeries":
        return TruncatedSeries(self.n, self.cutoff, {e: k * c for e, c in self._terms.items()})

    def to_polynomial(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.n, self._terms)

    def lowest_degree_component(self) -> LaurentPolynomial:
        if not self._terms:
            return LaurentPolynomial.zero(self.n)
        low = min(sum(e) for e in self._terms)
        return LaurentPolynomial(self.n, {e: c for e, c in self._terms.items() if sum(e) == low})


def _k_factor_series(a: int, b: int, n: int, cutoff: int, max_degree: int) -> TruncatedSeries:
    """t_b/t_a - 1 under t -> 1 - s, i.e. (s_a - s_b) * sum_k s_a^k, through ``max_degree``."""
    terms: dict[Exponents, int] = {}
    for k in range(min(cutoff, max_degree)):
        ea = [0] * n
        ea[a - 1] = k + 1
        terms[tuple(ea)] = terms.get(tuple(ea), 0) + 1
        eb = [0] * n
        eb[a - 1] += k
        eb[b - 1] += 1
        terms[tuple(eb)] = terms.get(tuple(eb), 0) - 1
    return TruncatedSeries(n, cutoff, terms)


def lowest_degree_part(
    terms: Iterable[tuple[int, Sequence[tuple[int, int]]]], n: int, cutoff: int
) -> LaurentPolynomial:
    """Lowest-degree homogeneous part of sum sign * prod (t_b/t_a - 1) at t = 1 - s.

    ``terms`` is a list of (sign, [(a, b), ...]) pairs.  Each product of m
    factors starts in degree m, so ``cutoff`` must be at least the smallest m.
    """
    terms = [(sign, list(fs)) for sign, fs in terms]
    if not terms:
        return LaurentPolynomial.zero(n)
    floor = min(len(fs) for _, fs in terms)
    if cutoff < floor:
        raise ValueError(f"cutoff {cutoff} is below the minimal degree {floor}")
    acc = TruncatedSeries(n, cutoff)
    for sign, fs in terms:
        m = len(fs)
        if m > cutoff:
            continue
        # the other m-1 factors each contribute degree >= 1
        per_factor = cutoff - (m - 1)
        prod = TruncatedSeries(n, cutoff, {(0,) * n: sign})
        for a, b in fs:
            prod = prod * _k_factor_series(a, b, n, cutoff, per_factor)
        acc = acc + prod
    return acc.lowest_degree_component()
