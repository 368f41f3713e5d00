"""Restrictions of Schubert classes to torus-fixed points of Gr(d, n).

``restrict_k`` and ``restrict_h`` are the closed tableau formulas.  Three
independent checks sit beside them:

* ``union_class_oracle``: inclusion-exclusion over the coordinate
  subspaces indexed by SSYT_{lam,mu}, intersections taken as tableau unions
* ``restrict_k_via_nsum``: sum of N_S [W_S]_K over set-valued tableaux
* ``consistency_lowest_degree``: lowest-degree part of K at t = 1 - s
  against the cohomology formula

An entry x in box (r, c) pairs the chart coordinate y_ab with
a = beta'(x + c - r) and b = beta(d + 1 - x).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import _kernels
from .core_index import GrassIndex, complement, length, partition_leq, pi
from .laurent import LaurentPolynomial, h_weight_factor, k_weight_factor, lowest_degree_part, ratio
from .tableaux import (
    SetValuedTableau,
    canonical_order,
    entry_bits,
    encode,
    enumerate_ssvt,
    enumerate_ssyt,
    is_on_mu,
    n_coefficient,
    ssyt_contained_in,
)

DEFAULT_ORACLE_BOUND = 20

Factor = tuple[int, int]


@dataclass(frozen=True)
class RestrictionRequest:
    alpha: GrassIndex
    beta: GrassIndex
    theory: str = "K"

    def __post_init__(self) -> None:
        if (self.alpha.d, self.alpha.n) != (self.beta.d, self.beta.n):
            raise ValueError("alpha and beta must lie in the same Grassmannian")
        if self.theory not in ("K", "H"):
            raise ValueError(f"theory must be 'K' or 'H', got {self.theory!r}")

    def compute(self) -> LaurentPolynomial:
        if self.theory == "K":
            return restrict_k(self.alpha, self.beta)
        return restrict_h(self.alpha, self.beta)


@dataclass(frozen=True)
class WeightedTerm:
    tableau: SetValuedTableau
    factors: tuple[Factor, ...]
    sign: int = 1


def entry_coordinate(x: int, r: int, c: int, beta: GrassIndex) -> Factor:
    """(a, b) of the coordinate y_ab attached to entry x at (r, c)."""
    d = beta.d
    comp = complement(beta)
    z = x + c - r
    if not 1 <= x <= d or not 1 <= z <= len(comp):
        raise ValueError(f"entry {x} at ({r},{c}) has no chart coordinate for beta={beta}")
    return comp[z - 1], beta(d + 1 - x)


def tableau_factors(s: SetValuedTableau, beta: GrassIndex) -> tuple[Factor, ...]:
    return tuple(entry_coordinate(x, r, c, beta) for x, r, c in s.entries())


def _check_pair(alpha: GrassIndex, beta: GrassIndex) -> None:
    if (alpha.d, alpha.n) != (beta.d, beta.n):
        raise ValueError(f"{alpha} and {beta} are not in the same I_(d,n)")


def weighted_terms(alpha: GrassIndex, beta: GrassIndex, theory: str = "K") -> list[WeightedTerm]:
    """One term per tableau of the K (set-valued) or H (Young) formula."""
    _check_pair(alpha, beta)
    lam, mu = pi(alpha), pi(beta)
    if theory == "K":
        sign = -1 if length(alpha) % 2 else 1
        tabs = enumerate_ssvt(lam, mu)
    elif theory == "H":
        sign = 1
        tabs = enumerate_ssyt(lam, mu)
    else:
        raise ValueError(f"theory must be 'K' or 'H', got {theory!r}")
    return [WeightedTerm(s, tableau_factors(s, beta), sign) for s in tabs]


@lru_cache(maxsize=4096)
def _k_minus_one(a: int, b: int, n: int) -> LaurentPolynomial:
    return ratio(n, b, a) - 1


@lru_cache(maxsize=4096)
def _h_factor(a: int, b: int, n: int) -> LaurentPolynomial:
    return h_weight_factor(a, b, n)


def _product(polys: Iterable[LaurentPolynomial], n: int) -> LaurentPolynomial:
    acc = LaurentPolynomial.one(n)
    for p in polys:
        acc = acc * p
    return acc


def restrict_k(alpha: GrassIndex, beta: GrassIndex) -> LaurentPolynomial:
    """[X_alpha]_K restricted to e_beta."""
    n = alpha.n
    total = LaurentPolynomial.zero(n)
    for term in weighted_terms(alpha, beta, "K"):
        total = total + _product((_k_minus_one(a, b, n) for a, b in term.factors), n)
    return total if length(alpha) % 2 == 0 else -total


def restrict_h(alpha: GrassIndex, beta: GrassIndex) -> LaurentPolynomial:
    """[X_alpha]_H restricted to e_beta."""
    n = alpha.n
    total = LaurentPolynomial.zero(n)
    for term in weighted_terms(alpha, beta, "H"):
        total = total + _product((_h_factor(a, b, n) for a, b in term.factors), n)
    return total


def coordinates_class(coords: Iterable[Factor], n: int) -> LaurentPolynomial:
    """[V(y_ab : (a,b) in coords)]_K = prod (1 - t_b/t_a) over distinct coordinates."""
    return _product((k_weight_factor(a, b, n) for a, b in sorted(set(coords))), n)


def coordinate_subspace_class(s: SetValuedTableau, beta: GrassIndex) -> LaurentPolynomial:
    """[W_S]_K; entries hitting the same coordinate count once."""
    if not is_on_mu(s, pi(beta)):
        raise ValueError(f"{s.label()} is not on {pi(beta)}")
    return coordinates_class(tableau_factors(s, beta), beta.n)


def union_class_oracle(
    tableaux: Sequence[SetValuedTableau],
    beta: GrassIndex,
    bound: int = DEFAULT_ORACLE_BOUND,
    backend: str | None = None,
) -> LaurentPolynomial:
    """[W_1 u ... u W_q]_K by inclusion-exclusion over all subsets, where W_i
    is the coordinate subspace of the i-th tableau."""
    tableaux = list(tableaux)
    if len(tableaux) > bound:
        raise ValueError(f"q={len(tableaux)} exceeds the oracle bound {bound}")
    n = beta.n
    if not tableaux:
        return LaurentPolynomial.zero(n)
    bits = entry_bits(tableaux)
    coord_of_bit = {}
    for (r, c, x), i in bits.items():
        coord_of_bit[i] = entry_coordinate(x, r, c, beta)
    totals = _kernels.signed_union_totals([encode(t, bits) for t in tableaux], backend=backend)
    out = LaurentPolynomial.zero(n)
    for mask, coeff in sorted(totals.items()):
        coords = [coord_of_bit[i] for i in range(mask.bit_length()) if mask >> i & 1]
        out = out + coeff * coordinates_class(coords, n)
    return out


def union_closure(generators: Sequence[SetValuedTableau]) -> list[SetValuedTableau]:
    """Every tableau that is a union of a nonempty subset of ``generators``."""
    if not generators:
        return []
    bits = entry_bits(generators)
    masks = {encode(g, bits) for g in generators}
    gens = sorted(masks)
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                v = u | g
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    inv = {i: k for k, i in bits.items()}
    shape = generators[0].shape
    out = []
    for mask in sorted(seen):
        cells: dict[tuple[int, int], list[int]] = {}
        for i in range(mask.bit_length()):
            if mask >> i & 1:
                r, c, x = inv[i]
                cells.setdefault((r, c), []).append(x)
        rows = tuple(tuple(tuple(cells[(i, j)]) for j in range(1, shape.part(i) + 1)) for i in range(1, len(shape) + 1))
        out.append(SetValuedTableau(rows))
    return canonical_order(out)


def restrict_k_via_nsum(alpha: GrassIndex, beta: GrassIndex, strategy: str = "closed") -> LaurentPolynomial:
    """sum over S of N_S [W_S]_K.

    With ``closed`` the sum runs over SSVT_{lam,mu} with N_S = (-1)^(|S|+||S||);
    other strategies range over every union of SSYT_{lam,mu} (the only S with
    N_S possibly nonzero) and evaluate N_S with that strategy.
    """
    _check_pair(alpha, beta)
    lam, mu = pi(alpha), pi(beta)
    n = alpha.n
    if strategy == "closed":
        candidates = enumerate_ssvt(lam, mu)
    else:
        candidates = union_closure(enumerate_ssyt(lam, mu))
    out = LaurentPolynomial.zero(n)
    for s in candidates:
        coeff = n_coefficient(s, strategy)
        if coeff:
            out = out + coeff * coordinate_subspace_class(s, beta)
    return out


@dataclass
class PositivityReport:
    alpha: GrassIndex
    beta: GrassIndex
    terms: list[WeightedTerm] = field(default_factory=list)
    violations: list[tuple[SetValuedTableau, Factor]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def factor_count(self) -> int:
        return sum(len(t.factors) for t in self.terms)

    def factored_text(self, theory: str = "K") -> str:
        """Sum-of-products presentation of the K or H formula."""
        chunks = []
        for t in self.terms:
            if theory == "H" and not t.tableau.is_young():
                continue
            if theory == "K":
                chunks.append("".join(f"(t{b}/t{a}-1)" for a, b in t.factors) or "1")
            else:
                chunks.append("".join(f"(t{b}-t{a})" for a, b in t.factors) or "1")
        body = "+".join(chunks) if chunks else "0"
        if theory == "K" and length(self.alpha) % 2 and chunks:
            return f"-[{body}]"
        return body

    def factored_latex(self, theory: str = "K") -> str:
        chunks = []
        for t in self.terms:
            if theory == "H" and not t.tableau.is_young():
                continue
            if theory == "K":
                chunks.append("".join(rf"\left(\frac{{t_{{{b}}}}}{{t_{{{a}}}}}-1\right)" for a, b in t.factors) or "1")
            else:
                chunks.append("".join(f"(t_{{{b}}}-t_{{{a}}})" for a, b in t.factors) or "1")
        body = " + ".join(chunks) if chunks else "0"
        if theory == "K" and length(self.alpha) % 2 and chunks:
            return rf"-\left[{body}\right]"
        return body


def positivity_audit(alpha: GrassIndex, beta: GrassIndex) -> PositivityReport:
    """Every factor t_b/t_a - 1 (and t_b - t_a) must have b > a."""
    report = PositivityReport(alpha, beta, weighted_terms(alpha, beta, "K"))
    for t in report.terms:
        for a, b in t.factors:
            if not b > a:
                report.violations.append((t.tableau, (a, b)))
    return report


def consistency_lowest_degree(alpha: GrassIndex, beta: GrassIndex) -> bool:
    """Lowest-degree part of the K formula at t = 1 - s equals the H formula in s."""
    _check_pair(alpha, beta)
    h = restrict_h(alpha, beta)
    if not partition_leq(pi(alpha), pi(beta)):
        return h.is_zero() and restrict_k(alpha, beta).is_zero()
    terms = [(t.sign, t.factors) for t in weighted_terms(alpha, beta, "K")]
    low = lowest_degree_part(terms, alpha.n, length(alpha) + 1)
    return low == h


def q_value(alpha: GrassIndex, beta: GrassIndex) -> int:
    return len(enumerate_ssyt(pi(alpha), pi(beta)))


def oracle_agreement(
    alpha: GrassIndex, beta: GrassIndex, bound: int = DEFAULT_ORACLE_BOUND, backend: str | None = None
) -> bool | None:
    """restrict_k == union_class_oracle == restrict_k_via_nsum; None when q > bound."""
    ssyt = enumerate_ssyt(pi(alpha), pi(beta))
    if len(ssyt) > bound:
        return None
    k = restrict_k(alpha, beta)
    return k == union_class_oracle(ssyt, beta, bound, backend) == restrict_k_via_nsum(alpha, beta)


def n_three_way(s: SetValuedTableau, backend: str | None = None) -> tuple[int, int, int]:
    return (
        n_coefficient(s, "definition", backend),
        n_coefficient(s, "inclusion_exclusion"),
        n_coefficient(s, "closed"),
    )


__all__ = [
    "DEFAULT_ORACLE_BOUND",
    "PositivityReport",
    "RestrictionRequest",
    "WeightedTerm",
    "consistency_lowest_degree",
    "coordinate_subspace_class",
    "coordinates_class",
    "entry_coordinate",
    "n_three_way",
    "oracle_agreement",
    "positivity_audit",
    "q_value",
    "restrict_h",
    "restrict_k",
    "restrict_k_via_nsum",
    "ssyt_contained_in",
    "tableau_factors",
    "union_class_oracle",
    "union_closure",
    "weighted_terms",
]
