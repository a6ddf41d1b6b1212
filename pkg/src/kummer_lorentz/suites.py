"""Named verification suites, as run by ``kummer-lorentz verify``."""

from __future__ import annotations

from typing import Sequence

from .cyclotomic import DEFAULT_PRIMES, cyclotomic_report
from .exact import is_prime
from .grouplaws import grouplaw_report
from .matrices import matrix_report
from .morphisms import morphism_report
from .report import Report

SCOPES = ("grouplaws", "matrices", "morphisms", "cyclotomic", "all")


def run_suite(scope: str, primes: Sequence[int] | None = None) -> Report:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected one of {', '.join(SCOPES)}")
    primes = tuple(primes) if primes else DEFAULT_PRIMES
    bad = [p for p in primes if not is_prime(p)]
    if bad:
        raise ValueError(f"not prime: {bad}")
    builders = {
        "grouplaws": grouplaw_report,
        "matrices": matrix_report,
        "morphisms": morphism_report,
        "cyclotomic": lambda: cyclotomic_report(primes),
    }
    if scope != "all":
        return builders[scope]()
    rep = Report("all")
    for name, build in builders.items():
        rep.extend(build(), prefix=name)
    return rep
