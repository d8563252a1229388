"""Verification suites behind the command-line `verify` verb.

Each suite sweeps one family of identities over all partitions at desk scale
and reports machine-readable results.  Case keys are stable strings, the
failure list is sorted, and the randomized suites draw from a fixed seed, so
reports are byte-identical across runs.
"""

import random
from fractions import Fraction

from .partitions import partitions_up_to
from .boson import EPoly, SchurVector, epoly_to_schur, pieri, schur_to_epoly
from .series import TSeries, cauchy_decompose, u_gen
from .wedge import (WedgeMonomial, WedgeVector, check_exp_insertion,
                    check_partial_sum_expansion, e_action, sigma_boson)
from .vertex import (check_inverse, check_multiplicative, g_strip, g_twisted,
                     gamma, gamma_fermionic, gamma_vee, gamma_vee_det,
                     gamma_vee_fermionic)

DEFAULT_SEED = 74531

SUITE_NAMES = ("pieri", "mnth1", "mnthm2", "inverse", "multiplicative",
               "fermionic", "cauchy", "fundlem", "cortj")


def _report(suite, r, max_weight, results, extra=None):
    failures = sorted(key for key, ok in results if not ok)
    out = {"suite": suite, "r": r, "max_weight": max_weight,
           "cases": len(results), "failures": failures}
    if extra:
        out.update(extra)
    return out


def _basis_cases(r, max_weight):
    return partitions_up_to(max_weight, r)


def _suite_pieri(r, max_weight, rng):
    results = []
    for lam in _basis_cases(r, max_weight):
        v = SchurVector.basis(lam, r)
        for i in range(r + 1):
            oracle = epoly_to_schur(EPoly.gen(i, r) * schur_to_epoly(v))
            ok = pieri(i, v) == oracle
            results.append((f"lam={lam};i={i}", ok))
    return results


def _suite_mnth1(r, max_weight, rng):
    results = []
    for lam in _basis_cases(r, max_weight):
        v = SchurVector.basis(lam, r)
        results.append((f"lam={lam}", g_strip(v) == g_twisted(v)))
    return results


def _suite_mnthm2(r, max_weight, rng):
    results = []
    for lam in _basis_cases(r, max_weight):
        a = gamma_vee(SchurVector.basis(lam, r))
        b = gamma_vee_det(lam, r)
        c = gamma_vee_fermionic(lam, r)
        results.append((f"lam={lam}", a == b == c))
    return results


def _suite_inverse(r, max_weight, rng):
    results = []
    for lam in _basis_cases(r, max_weight):
        results.append((f"lam={lam}", check_inverse(SchurVector.basis(lam, r))))
    return results


def _index_lists(length, max_entry):
    if length == 0:
        return [()]
    out = []
    def grow(prefix, cap):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for n in range(cap, 0, -1):
            grow(prefix + [n], n)
    grow([], max_entry)
    return out


def _suite_multiplicative(r, max_weight, rng):
    results = []
    cap = max(1, min(max_weight, 4))
    for length in range(1, r + 1):
        for idx in _index_lists(length, cap):
            ok = check_multiplicative(list(idx), r)
            results.append((f"indices={','.join(map(str, idx))}", ok))
    negatives = []
    for idx in _index_lists(r + 1, min(2, cap)):
        still_mult = check_multiplicative(list(idx), r)
        negatives.append({"indices": list(idx),
                          "multiplicative": still_mult,
                          "expected_negative": True})
    return results, negatives


def _suite_fermionic(r, max_weight, rng):
    results = []
    z_hi = 6
    for lam in _basis_cases(r, max_weight):
        ok = gamma(SchurVector.basis(lam, r), z_hi) == gamma_fermionic(lam, r, z_hi)
        results.append((f"gamma;lam={lam}", ok))
        wv = WedgeVector(0, r, {WedgeMonomial(0, lam, r): 1})
        for j in range(r + 1):
            ok = sigma_boson(e_action(j, wv)) == pieri(j, SchurVector.basis(lam, r))
            results.append((f"eaction;lam={lam};j={j}", ok))
    return results


def _random_epoly(rng, r, max_degree=2):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        exps = [0] * r
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(r)] += 1
        coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return EPoly(r, terms)


def _suite_cauchy(r, max_weight, rng, cases=20, order=12):
    results = []
    basis = [u_gen(-i, r, order) for i in range(r)]
    for case in range(cases):
        coords = [_random_epoly(rng, r) for _ in range(r)]
        phi = TSeries([EPoly.zero(r)] * (order + 1))
        for c, u in zip(coords, basis):
            phi = phi + u.scale(c)
        got = cauchy_decompose(phi, r)
        ok = got == coords
        if ok:
            rebuilt = TSeries([EPoly.zero(r)] * (order + 1))
            for c, u in zip(got, basis):
                rebuilt = rebuilt + u.scale(c)
            ok = rebuilt == phi
        results.append((f"case={case}", ok))
    return results


def _suite_fundlem(r, max_weight, rng):
    results = []
    for lam in _basis_cases(r, max_weight):
        ok = check_partial_sum_expansion(lam, r, -8, 8)
        results.append((f"lam={lam}", ok))
    return results


def _suite_cortj(r, max_weight, rng):
    results = []
    for lam in _basis_cases(r, max_weight):
        ok = check_exp_insertion(lam, r, -8, 8, 12)
        results.append((f"lam={lam}", ok))
    return results


_SUITES = {
    "pieri": _suite_pieri,
    "mnth1": _suite_mnth1,
    "mnthm2": _suite_mnthm2,
    "inverse": _suite_inverse,
    "multiplicative": _suite_multiplicative,
    "fermionic": _suite_fermionic,
    "cauchy": _suite_cauchy,
    "fundlem": _suite_fundlem,
    "cortj": _suite_cortj,
}


def run_suite(suite, r, max_weight, seed=DEFAULT_SEED):
    """Run one named suite and return its report dictionary."""
    if suite not in _SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITE_NAMES}")
    rng = random.Random(seed)
    outcome = _SUITES[suite](r, max_weight, rng)
    if suite == "multiplicative":
        results, negatives = outcome
        return _report(suite, r, max_weight, results,
                       {"expected_negative": negatives})
    return _report(suite, r, max_weight, outcome)
