"""Command-line front end.

    schubrest restrict  --d 3 --n 6 --alpha 1,3,5 --beta 2,5,6 --theory k
    schubrest enumerate --model ssvt --lambda 2,1 --mu 4,4,2,1 --count-only
    schubrest graph     --model paths --lambda 2,1 --mu 4,4,3,3,1
    schubrest verify    --d 2 --n 5 --suite all

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .core_index import GrassIndex, InvalidIndexError, Partition, grass_indices, grass_partitions, partition_leq, pi
from .laurent import LaurentPolynomial
from .path_models import (
    ModelError,
    enumerate_families,
    enumerate_subsets,
    graphs_isomorphic_via_bijections,
    ladder_graph,
    ssyt_to_subset,
    subset_label,
    subset_to_ssyt,
    twisted_chain_target,
)
from .restriction import (
    DEFAULT_ORACLE_BOUND,
    consistency_lowest_degree,
    positivity_audit,
    restrict_h,
    restrict_k,
    restrict_k_via_nsum,
    union_class_oracle,
    union_closure,
)
from .tableaux import (
    SetValuedTableau,
    enumerate_ssvt,
    enumerate_ssyt,
    is_semistandard,
    ladder_closure_ssyt,
    n_coefficient,
)

log = logging.getLogger("schubrest")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SUITES = ("oracles", "bijections", "nsum", "positivity")


class UsageError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip().strip("{}()[]")
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _index(text: str, d: int, n: int, name: str) -> GrassIndex:
    entries = _int_list(text)
    try:
        return GrassIndex(d, n, tuple(entries))
    except InvalidIndexError as exc:
        raise UsageError(f"--{name}: {exc}") from None


def _shapes(lam_text: str, mu_text: str) -> tuple[Partition, Partition]:
    lam, mu = _int_list(lam_text), _int_list(mu_text)
    if len(lam) > len(mu):
        raise UsageError(f"lambda has {len(lam)} parts but mu only {len(mu)}")
    try:
        return Partition.of(lam, len(mu)), Partition(tuple(mu))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# restrict ------------------------------------------------------------------------


@dataclass
class OutputDocument:
    request: dict
    polynomial: LaurentPolynomial
    factored: dict | None = None
    metadata: dict = field(default_factory=dict)

    def to_json(self) -> str:
        doc = {
            "request": self.request,
            "result": {
                "text": self.polynomial.to_text(),
                "latex": self.polynomial.to_latex(),
                "polynomial": self.polynomial.to_json(),
            },
            "metadata": self.metadata,
        }
        if self.factored is not None:
            doc["factored"] = self.factored
        return json.dumps(doc, indent=2)


def cmd_restrict(args: argparse.Namespace) -> int:
    alpha = _index(args.alpha, args.d, args.n, "alpha")
    beta = _index(args.beta, args.d, args.n, "beta")
    theory = args.theory.upper()
    t0 = time.perf_counter()
    poly = restrict_k(alpha, beta) if theory == "K" else restrict_h(alpha, beta)
    elapsed = time.perf_counter() - t0
    audit = positivity_audit(alpha, beta)
    terms = [t for t in audit.terms if theory == "K" or t.tableau.is_young()]

    if args.format == "text":
        print(audit.factored_text(theory) if args.factored else poly.to_text())
        return EXIT_OK
    if args.format == "latex":
        print(audit.factored_latex(theory) if args.factored else poly.to_latex())
        return EXIT_OK

    meta = {"tableaux": len(terms), "monomials": len(poly.terms), "lambda": list(pi(alpha)), "mu": list(pi(beta))}
    if args.timings:
        meta["seconds"] = round(elapsed, 6)
    factored = None
    if args.factored:
        factored = {
            "sign": -1 if theory == "K" and alpha.length() % 2 else 1,
            "terms": [
                {"tableau": t.tableau.label(), "factors": [list(f) for f in t.factors]} for t in terms
            ],
            "text": audit.factored_text(theory),
        }
    doc = OutputDocument(
        request={"d": args.d, "n": args.n, "alpha": list(alpha.entries), "beta": list(beta.entries), "theory": theory},
        polynomial=poly,
        factored=factored,
        metadata=meta,
    )
    print(doc.to_json())
    return EXIT_OK


# enumerate / graph ---------------------------------------------------------------


def _listing(model: str, lam: Partition, mu: Partition) -> list[str]:
    if model == "ssyt":
        return [t.label() for t in enumerate_ssyt(lam, mu)]
    if model == "ssvt":
        return [t.label() for t in enumerate_ssvt(lam, mu)]
    if model == "paths":
        return [f.label() for f in enumerate_families(lam, mu)]
    if model == "subsets":
        return [subset_label(s) for s in enumerate_subsets(lam, mu)]
    raise UsageError(f"unknown model {model!r}")


def cmd_enumerate(args: argparse.Namespace) -> int:
    lam, mu = _shapes(args.lam, args.mu)
    items = _listing(args.model, lam, mu)
    if args.count_only:
        print(len(items))
    else:
        for line in items:
            print(line)
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    lam, mu = _shapes(args.lam, args.mu)
    graph = ladder_graph(args.model, lam, mu)
    sys.stdout.write(graph.to_dot(args.name))
    return EXIT_OK


# verify --------------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, **info) -> None:
        self.failures.append(info)

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        extra = f", {self.skipped} skipped" if self.skipped else ""
        bad = f", {len(self.failures)} failed" if self.failures else ""
        return f"{self.name}: {status} ({self.checked} checked{extra}{bad})"


def _pairs(d: int, n: int) -> Iterator[tuple[GrassIndex, GrassIndex]]:
    idx = list(grass_indices(d, n))
    for a in idx:
        for b in idx:
            yield a, b


def _pair_info(a: GrassIndex, b: GrassIndex) -> dict:
    return {"alpha": list(a.entries), "beta": list(b.entries)}


def suite_oracles(d: int, n: int, bound: int = DEFAULT_ORACLE_BOUND) -> list[CheckResult]:
    eq = CheckResult("oracles.union_and_nsum")
    low = CheckResult("oracles.lowest_degree")
    deg = CheckResult("oracles.degenerate")
    for a, b in _pairs(d, n):
        lam, mu = pi(a), pi(b)
        k = restrict_k(a, b)
        ssyt = enumerate_ssyt(lam, mu)
        if len(ssyt) > bound:
            eq.skipped += 1
        else:
            eq.checked += 1
            oracle = union_class_oracle(ssyt, b, bound)
            nsum = restrict_k_via_nsum(a, b)
            if not (k == oracle == nsum):
                eq.fail(**_pair_info(a, b), restrict_k=k.to_text(), oracle=oracle.to_text(), nsum=nsum.to_text())
        low.checked += 1
        if not consistency_lowest_degree(a, b):
            low.fail(**_pair_info(a, b))
        deg.checked += 1
        h = restrict_h(a, b)
        leq = partition_leq(lam, mu)
        if leq == k.is_zero() or leq == h.is_zero():
            deg.fail(**_pair_info(a, b), reason="vanishing does not match lambda <= mu")
        if a.length() == 0 and not (k == 1 and h == 1):
            deg.fail(**_pair_info(a, b), reason="identity class is not 1")
        if a == b and len(enumerate_ssvt(lam, mu)) != 1:
            deg.fail(**_pair_info(a, b), reason="alpha == beta without a unique tableau")
    return [eq, low, deg]


def _shape_pairs(d: int, n: int) -> Iterator[tuple[Partition, Partition]]:
    parts = list(grass_partitions(d, n))
    for mu in parts:
        for lam in parts:
            if partition_leq(lam, mu):
                yield lam, mu


def suite_bijections(d: int, n: int) -> list[CheckResult]:
    iso = CheckResult("bijections.graphs")
    rt = CheckResult("bijections.round_trip")
    chain = CheckResult("bijections.twisted_chain")
    for lam, mu in _shape_pairs(d, n):
        info = {"lambda": list(lam), "mu": list(mu)}
        iso.checked += 1
        ssyt = enumerate_ssyt(lam, mu)
        fams = enumerate_families(lam, mu)
        fams_twist = enumerate_families(lam, mu, method="twist")
        subs = enumerate_subsets(lam, mu)
        if ladder_closure_ssyt(lam, mu) != ssyt:
            iso.fail(**info, reason="ladder closure differs from SSYT enumeration")
        if not (len(ssyt) == len(fams) == len(subs)) or fams != fams_twist:
            iso.fail(**info, ssyt=len(ssyt), families=len(fams), twist=len(fams_twist), subsets=len(subs))
        elif not graphs_isomorphic_via_bijections(lam, mu):
            iso.fail(**info, reason="ladder graphs not isomorphic under h and g")
        for t in ssyt:
            rt.checked += 1
            s = ssyt_to_subset(t, mu)
            if subset_to_ssyt(s, lam, mu) != t:
                rt.fail(**info, tableau=t.label())
        chain.checked += 1
        try:
            twisted_chain_target(lam, mu, d, n)
        except AssertionError as exc:
            chain.fail(**info, reason=str(exc))
    return [iso, rt, chain]


def suite_nsum(d: int, n: int, bound: int = DEFAULT_ORACLE_BOUND) -> list[CheckResult]:
    three = CheckResult("nsum.three_way")
    total = CheckResult("nsum.restriction")
    seen: set[SetValuedTableau] = set()
    for a, b in _pairs(d, n):
        lam, mu = pi(a), pi(b)
        ssyt = enumerate_ssyt(lam, mu)
        if len(ssyt) > bound:
            three.skipped += 1
            continue
        total.checked += 1
        if restrict_k_via_nsum(a, b, "definition") != restrict_k(a, b):
            total.fail(**_pair_info(a, b))
        for s in union_closure(ssyt):
            if s in seen:
                continue
            seen.add(s)
            three.checked += 1
            vals = [n_coefficient(s, strat) for strat in ("definition", "inclusion_exclusion", "closed")]
            expected = (-1) ** (s.total_entries + s.num_boxes) if is_semistandard(s) else 0
            if len(set(vals)) != 1 or vals[0] != expected:
                three.fail(tableau=s.label(), values=vals, expected=expected)
    return [three, total]


def suite_positivity(d: int, n: int) -> list[CheckResult]:
    res = CheckResult("positivity.audit")
    for a, b in _pairs(d, n):
        res.checked += 1
        report = positivity_audit(a, b)
        if not report.ok:
            res.fail(**_pair_info(a, b), violations=[[t.label(), list(f)] for t, f in report.violations])
    return [res]


SUITE_FUNCS: dict[str, Callable[[int, int], list[CheckResult]]] = {
    "oracles": suite_oracles,
    "bijections": suite_bijections,
    "nsum": suite_nsum,
    "positivity": suite_positivity,
}


def cmd_verify(args: argparse.Namespace) -> int:
    if not 0 < args.d < args.n:
        raise UsageError(f"need 0 < d < n, got d={args.d}, n={args.n}")
    names = SUITES if args.suite == "all" else (args.suite,)
    results: list[CheckResult] = []
    for name in names:
        t0 = time.perf_counter()
        results.extend(SUITE_FUNCS[name](args.d, args.n))
        log.info("suite %s finished in %.2fs", name, time.perf_counter() - t0)
    ok = True
    for r in results:
        print(r.line())
        if not r.ok:
            ok = False
            for item in r.failures[: args.max_dump]:
                print("  counterexample: " + json.dumps(item, sort_keys=True))
    print(f"Gr({args.d},{args.n}): {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


# entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubrest", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("restrict", help="restriction of a Schubert class to a fixed point")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True, help="comma list, e.g. 1,3,5")
    p.add_argument("--beta", required=True, help="comma list, e.g. 2,5,6")
    p.add_argument("--theory", choices=("k", "h", "K", "H"), default="k")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.add_argument("--factored", action="store_true", help="sum over tableaux of products")
    p.add_argument("--timings", action="store_true", help="add wall time to JSON metadata")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("enumerate", help="list tableaux, path families or diagram subsets")
    p.add_argument("--model", choices=("ssyt", "ssvt", "paths", "subsets"), required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("graph", help="ladder-move graph in DOT")
    p.add_argument("--model", choices=("ssyt", "paths", "subsets"), required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--name", default="ladder")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run oracle and bijection sweeps over Gr(d,n)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--max-dump", type=int, default=5, help="counterexamples printed per failing check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, ModelError, InvalidIndexError, ValueError) as exc:
        print(f"schubrest {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
