"""Brute-force oracles tying every stored formula to exhaustive enumeration.

Each check compares an exact polynomial computed from a closed form against
the same polynomial summed over the enumerated class, and reports the first
discrepancy if any.  Default ranges keep the whole suite at desk scale:
counts to n = 12, family G to n = 10, family F to n = 9, maps to n = 12.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from . import catalog, stats
from .bijections import LAYERED_PAIR, RUN_PAIR, complement_map, transfer_map
from .perms import (
    FINITE_PAIR,
    Pair,
    all_pairs,
    complement,
    enumerate_class,
    format_pair,
    pattern_pair,
    reverse,
)
from .polys import MultiPoly, expand

DEFAULT_N_COUNTS = 12
DEFAULT_N_G = 10
DEFAULT_N_F = 9
DEFAULT_N_MAPS = 12

_VAR = {name: MultiPoly.var(name) for name in "pquvstyz"}


def family_monomial(perm, family: str) -> MultiPoly:
    """The marker monomial one permutation contributes to its family's sum."""
    vec = stats.stat_vector(perm)
    if family == "G":
        return (
            _VAR["p"] ** vec.asc * _VAR["q"] ** vec.des
            * _VAR["y"] ** vec.mna * _VAR["z"] ** vec.mnd
        )
    if family == "F":
        return (
            _VAR["p"] ** vec.asc * _VAR["q"] ** vec.des
            * _VAR["u"] ** vec.lrmax * _VAR["v"] ** vec.rlmax
            * _VAR["s"] ** vec.lrmin * _VAR["t"] ** vec.rlmin
        )
    raise ValueError(f"unknown family {family!r}")


def brute_distribution(pair: Pair, n: int, family: str) -> MultiPoly:
    """Joint distribution polynomial summed over the enumerated class.

    >>> print(brute_distribution(pattern_pair((2, 3, 1), (3, 1, 2)), 3, "G"))
    p^2 y + 2 p q y z + q^2 z
    """
    total = MultiPoly.zero()
    for perm in enumerate_class(pair, n):
        total = total + family_monomial(perm, family)
    return total


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one check; ``first_discrepancy`` is present iff it failed."""

    name: str
    pair: str | None
    family: str | None
    n_range: tuple[int, int]
    status: str
    first_discrepancy: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_line(self) -> str:
        payload = {
            "name": self.name,
            "pair": self.pair,
            "family": self.family,
            "n_range": list(self.n_range),
            "status": self.status,
            "first_discrepancy": self.first_discrepancy,
        }
        return json.dumps(payload, sort_keys=True)


def _report(name, pair, family, n_range, discrepancy=None) -> VerifyReport:
    return VerifyReport(
        name=name,
        pair=format_pair(pair) if pair is not None else None,
        family=family,
        n_range=n_range,
        status="fail" if discrepancy else "pass",
        first_discrepancy=discrepancy,
    )


def check_gf(pair: Pair, family: str, n_max: int, gf=None) -> VerifyReport:
    """Expansion coefficients of the catalogued form vs brute force.

    Passing ``gf`` substitutes a candidate form for the catalogued one,
    which lets the harness prove it would catch a corrupted entry.
    """
    pair = pattern_pair(*pair)
    if gf is None:
        gf = catalog.gf_for(pair, family)
    table = expand(gf, n_max)
    for n in range(n_max + 1):
        expected = brute_distribution(pair, n, family)
        if table.coeffs[n] != expected:
            discrepancy = {
                "n": n,
                "expected": expected.to_json_terms(),
                "actual": table.coeffs[n].to_json_terms(),
            }
            return _report("gf-vs-enumeration", pair, family, (0, n_max), discrepancy)
    return _report("gf-vs-enumeration", pair, family, (0, n_max))


def check_counts(n_max: int = DEFAULT_N_COUNTS) -> VerifyReport:
    """Enumerated class sizes vs the closed-form counts, all 15 pairs."""
    for pair in all_pairs():
        for n in range(n_max + 1):
            actual = len(enumerate_class(pair, n))
            expected = catalog.class_count(pair, n)
            if actual != expected:
                discrepancy = {
                    "n": n,
                    "pair": format_pair(pair),
                    "expected": expected,
                    "actual": actual,
                }
                return _report("counts-vs-formula", None, None, (0, n_max), discrepancy)
    return _report("counts-vs-formula", None, None, (0, n_max))


def _quadruple(perm) -> tuple[int, int, int, int]:
    vec = stats.stat_vector(perm)
    return (vec.asc, vec.des, vec.mna, vec.mnd)


def _swapped(quad) -> tuple[int, int, int, int]:
    a, d, ya, zd = quad
    return (d, a, zd, ya)


def check_equidistribution_maps(n_max: int = DEFAULT_N_MAPS) -> list[VerifyReport]:
    """The five statistic-exchange facts, checked pointwise and as multisets.

    * the boundary-complement involution swaps (asc, des, mna, mnd) with
      (des, asc, mnd, mna) pointwise on the layered class;
    * complement does the same on the ascending-run class;
    * reverse does the same on the increasing-prefix class {213, 312};
    * the transfer map carries the quadruple from the layered class to the
      swapped quadruple on the ascending-run class, pointwise;
    * consequently the quadruple has the same multiset on both classes.
    """
    prefix_pair = pattern_pair((2, 1, 3), (3, 1, 2))
    checks = [
        ("involution-swaps-quadruple", LAYERED_PAIR, complement_map, LAYERED_PAIR),
        ("complement-swaps-quadruple", RUN_PAIR, complement, RUN_PAIR),
        ("reverse-swaps-quadruple", prefix_pair, reverse, prefix_pair),
        ("transfer-swaps-quadruple", LAYERED_PAIR, transfer_map, RUN_PAIR),
    ]
    reports = []
    for name, src, mapping, dst in checks:
        discrepancy = None
        for n in range(1, n_max + 1):
            image_class = set(enumerate_class(dst, n))
            seen = set()
            for perm in enumerate_class(src, n):
                image = mapping(perm)
                if image not in image_class or image in seen:
                    discrepancy = {"n": n, "perm": list(perm), "image": list(image),
                                   "reason": "image is not a fresh member of the target class"}
                    break
                seen.add(image)
                if _quadruple(image) != _swapped(_quadruple(perm)):
                    discrepancy = {"n": n, "perm": list(perm), "image": list(image),
                                   "reason": "quadruple not swapped"}
                    break
            if discrepancy:
                break
        reports.append(_report(name, src, None, (1, n_max), discrepancy))

    discrepancy = None
    for n in range(1, n_max + 1):
        left = Counter(_quadruple(p) for p in enumerate_class(LAYERED_PAIR, n))
        right = Counter(_quadruple(p) for p in enumerate_class(RUN_PAIR, n))
        if left != right:
            discrepancy = {"n": n, "reason": "quadruple multisets differ"}
            break
    reports.append(
        _report("cross-class-equidistribution", LAYERED_PAIR, None, (1, n_max), discrepancy)
    )
    return reports


def run_default_suite() -> list[VerifyReport]:
    """Everything: counts, both families over all pairs, and the five maps."""
    reports = [check_counts()]
    for pair in all_pairs():
        if pair == FINITE_PAIR:
            continue
        reports.append(check_gf(pair, "G", DEFAULT_N_G))
    for pair in all_pairs():
        if pair == FINITE_PAIR:
            continue
        reports.append(check_gf(pair, "F", DEFAULT_N_F))
    reports.extend(check_equidistribution_maps())
    return reports


def all_passed(reports: Iterable[VerifyReport]) -> bool:
    return all(report.passed for report in reports)
