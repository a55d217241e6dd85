"""Verification suites comparing independent routes to the same quantities."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import factorial
from typing import Callable, Dict, List, Optional

from .action import (
    brute_frobenius,
    character_table,
    labelled_interval_count,
    prime_character,
    prime_counts,
    q_chain_polynomial,
)
from .algebra.poly import MultiPoly
from .combinatorics import Partition, partitions_of
from .engine.checks import (
    K_minus_one_check,
    antisymmetry_check_m1,
    elementary_symmetric_check,
    interpolation_identities,
    linear_combination_check,
    operator_identity_check,
    random_v_polynomial,
    reconstruct_from_positive_part,
    reconstruct_m1,
    reflection_check_m1,
)
from .engine.closed import (
    G1_at_zero,
    bessel_form,
    change_of_variables,
    closed_form_G1,
    closed_form_m1,
    closed_form_m2,
)
from .engine.extract import character_series_by_exponential, extract_character_series
from .engine.functional import iterate_functional_equation, q_iterate
from .engine.tower import assemble_F, phi_tower
from .engine.unlabelled import (
    prime_counts_from_series,
    unlabelled_counts_from_series,
    unlabelled_series_check,
)
from .algebra.operators import at_u_zero
from .formulas import (
    character_polynomial,
    chi_formula,
    dim_formula,
    prime_formulas,
    unlabelled_count,
)
from .lattice import cached_lattice, decomposition_check, embed_check
from .report import VerificationReport, compare_poly, compare_series, compare_values, flag


def _at_y1(S):
    return S.map_coeffs(lambda c: c.subs("y", 1))


def suite_oracle(m: int, N: int) -> VerificationReport:
    """``n!`` times the iterated coefficients against the brute-force Frobenius polynomial."""
    rep = VerificationReport("oracle")
    F = iterate_functional_equation(m, N)
    for n in range(N + 1):
        rep.add(compare_poly(f"oracle m={m} n={n}", F[n] * factorial(n), brute_frobenius(m, n)))
    return rep


def suite_closed_form(m: int, N: int) -> VerificationReport:
    rep = VerificationReport("closed-form")
    F = iterate_functional_equation(m, N)
    G = change_of_variables(F, m)
    G1 = closed_form_G1(m, N)
    rep.add(compare_series(f"y=1 solution m={m} order={N}", _at_y1(G), G1))
    rep.add(compare_series(f"u=0 limit m={m} order={N}", at_u_zero(G1), G1_at_zero(m, N)))
    if m == 1:
        rep.add(compare_series(f"slope-1 solution order={N}", G, closed_form_m1(N)))
        rep.add(compare_series(f"slope-1 at y=1 order={N}", _at_y1(closed_form_m1(N)), G1))
        rep.add(compare_series(f"double-sum form order={N}", closed_form_m1(N, "parking"), bessel_form(N)))
    if m == 2:
        rep.add(compare_series(f"slope-2 solution order={N}", G, closed_form_m2(N)))
    return rep


def suite_phi_tower(m: int, N: int) -> VerificationReport:
    rep = VerificationReport("phi-tower")
    tower = phi_tower(m, N, with_y=True)
    rep.add(flag(f"every Phi_k divisible by v m={m}", tower.divisible_by_v()))
    F = assemble_F(tower)
    G = change_of_variables(iterate_functional_equation(m, N), m)
    rep.add(compare_series(f"assembled tower m={m} order={N}", F, G))
    if m == 1:
        rep.add(compare_series(f"assembled tower vs slope-1 solution order={N}", F, closed_form_m1(N)))
    if m == 2:
        rep.add(compare_series(f"assembled tower vs slope-2 solution order={N}", F, closed_form_m2(N)))
    F1 = assemble_F(phi_tower(m, N, with_y=False))
    rep.add(compare_series(f"assembled tower at y=1 m={m} order={N}", F1, closed_form_G1(m, N)))
    return rep


def suite_identities(m: int, N: int, seed: int = 0) -> VerificationReport:
    rep = VerificationReport("identities")
    if m <= 4:
        r = interpolation_identities(m)
        rep.add(flag(r.name, r.ok, r.detail))
    r = elementary_symmetric_check(m)
    rep.add(flag(r.name, r.ok))
    rng = random.Random(seed)
    ok = reconstruct_from_positive_part(MultiPoly.const(1), m)
    ok = ok and all(reconstruct_from_positive_part(random_v_polynomial(rng, 3), m) for _ in range(8))
    rep.add(flag(f"reconstruction from positive part m={m}", ok))
    r = K_minus_one_check(m, max(N, 8))
    rep.add(flag(r.name, r.ok))
    if m <= 2:
        r = operator_identity_check(m, 2, min(N, 3))
        rep.add(flag(r.name, r.ok, r.detail))
        r = linear_combination_check(m, max(3, min(N, 5 if m == 1 else 3)))
        rep.add(flag(r.name, r.ok))
    if m == 1:
        r = reflection_check_m1(max(N, 4), 2)
        rep.add(flag(r.name, r.ok, r.detail))
        r = antisymmetry_check_m1(max(N, 4))
        rep.add(flag(r.name, r.ok))
        rep.add(compare_series(f"reconstruction from antisymmetrisation order={N}",
                               reconstruct_m1(N), closed_form_m1(N)))
    return rep


def suite_q_analogue(m: int, N: int) -> VerificationReport:
    rep = VerificationReport("q-analogue")
    F = q_iterate(m, N)
    for n in range(N + 1):
        lhs = F[n].subs("x", 1).subs("y", 1) * factorial(n)
        rep.add(compare_poly(f"q-chain polynomial m={m} n={n}", lhs, q_chain_polynomial(m, n)))
    plain = iterate_functional_equation(m, N, "parking")
    rep.add(compare_series(f"q=1 specialisation m={m}", F.map_coeffs(lambda c: c.subs("q", 1)), plain))
    return rep


def suite_unlabelled(m: int, N: int, brute_max: int = 0) -> VerificationReport:
    rep = VerificationReport("unlabelled")
    for name, ok in unlabelled_series_check(m, N).items():
        rep.add(flag(f"{name} m={m} order={N}", ok))
    counts = unlabelled_counts_from_series(m, N)
    primes = prime_counts_from_series(m, N)
    for n in range(1, N + 1):
        rep.add(compare_values(f"unlabelled count m={m} n={n}", counts[n], unlabelled_count(m, n)))
        _, lab, unl = prime_formulas(m, n, Partition((1,) * n))
        rep.add(compare_values(f"prime unlabelled count m={m} n={n}", primes[n], unl))
        if n <= brute_max:
            L = cached_lattice(m, n)
            rep.add(compare_values(f"unlabelled count by enumeration m={m} n={n}",
                                   L.interval_count(), unlabelled_count(m, n)))
            rep.add(compare_values(f"prime counts by enumeration m={m} n={n}", prime_counts(m, n), (lab, unl)))
            for lam in partitions_of(n):
                rep.add(compare_values(f"prime character m={m} {lam}", prime_character(m, n, lam),
                                       prime_formulas(m, n, lam)[0]))
    return rep


def suite_extraction(m: int, N: int, brute_max: int = 0) -> VerificationReport:
    rep = VerificationReport("extraction")
    lag = extract_character_series(m, N)
    expo = character_series_by_exponential(m, N)
    for n in range(N + 1):
        rep.add(compare_poly(f"Lagrange extraction m={m} n={n}", lag[n], character_polynomial(m, n)))
        rep.add(compare_poly(f"exponential route m={m} n={n}", expo[n], character_polynomial(m, n)))
        if 1 <= n <= brute_max:
            brute = brute_frobenius(m, n).subs("x", 1).subs("y", 1) / factorial(n)
            rep.add(compare_poly(f"extraction vs enumeration m={m} n={n}", lag[n], brute))
    return rep


def suite_characters(m: int, n: int) -> VerificationReport:
    rep = VerificationReport("characters")
    table = character_table(m, n)
    for row in table.rows:
        rep.add(compare_values(f"character m={m} {row.partition}", row.chi, row.formula))
        if row.probe is not None:
            rep.add(compare_values(f"class function probe m={m} {row.partition}", row.probe, row.chi))
    rep.add(compare_values(f"dimension m={m} n={n}", labelled_interval_count(m, n), dim_formula(m, n)))
    rep.add(compare_values(f"identity character is the dimension m={m} n={n}",
                           chi_formula(m, Partition((1,) * n)), dim_formula(m, n)))
    return rep


def suite_lattice(m: int, n: int) -> VerificationReport:
    rep = VerificationReport("lattice")
    L = cached_lattice(m, n)
    rep.add(flag(f"meets, joins and absorption m={m} n={n}", L.check_lattice()))
    rep.add(flag(f"embedding into the Dyck lattice m={m} n={n}", embed_check(m, n)))
    d = decomposition_check(m, n)
    rep.add(flag(f"decomposition round trip m={m} n={n}", d.roundtrip and d.injective))
    rep.add(flag(f"decomposition components are intervals m={m} n={n}", d.components_valid))
    rep.add(flag(f"contact identity m={m} n={n}", d.contacts_identity))
    if m == 1:
        rep.add(flag(f"decomposition count identity n={n}", d.counts_match))
    return rep


@dataclass(frozen=True)
class SuiteSpec:
    name: str
    run: Callable[..., VerificationReport]
    uses_n: bool = False


SUITES: Dict[str, SuiteSpec] = {
    "oracle": SuiteSpec("oracle", suite_oracle),
    "closed-form": SuiteSpec("closed-form", suite_closed_form),
    "phi-tower": SuiteSpec("phi-tower", suite_phi_tower),
    "identities": SuiteSpec("identities", suite_identities),
    "q-analogue": SuiteSpec("q-analogue", suite_q_analogue),
    "unlabelled": SuiteSpec("unlabelled", suite_unlabelled),
    "extraction": SuiteSpec("extraction", suite_extraction),
    "characters": SuiteSpec("characters", suite_characters, uses_n=True),
    "lattice": SuiteSpec("lattice", suite_lattice, uses_n=True),
}

ALL = ("oracle", "closed-form", "phi-tower", "identities", "q-analogue", "unlabelled")


def run_suite(name: str, m: int, N: int, n: Optional[int] = None) -> VerificationReport:
    spec = SUITES[name]
    start = time.perf_counter()
    rep = spec.run(m, n if spec.uses_n and n is not None else N)
    rep.wall_time = time.perf_counter() - start
    return rep


def run_many(names: List[str], m: int, N: int, n: Optional[int] = None, jobs: int = 1) -> List[VerificationReport]:
    """Run suites, in worker processes when ``jobs > 1``; order of results follows ``names``."""
    if jobs <= 1 or len(names) == 1:
        return [run_suite(s, m, N, n) for s in names]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_suite, s, m, N, n) for s in names]
        return [f.result() for f in futures]
