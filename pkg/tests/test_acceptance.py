"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with  pytest tests/test_acceptance.py -v -s  to see the lines live.
Every tolerance is pinned here; the exact checks carry none at all.
"""

import math
import time

import numpy as np

from seqlab.adic import gcd_structure, two_adic_complexity
from seqlab.attack import raa_approximate
from seqlab.cyclotomy import build_params, build_tables
from seqlab.numtheory import PrimePair, is_prime, mersenne_gcd_split
from seqlab.sequence import generate_modified_jacobi, generate_via_legendre
from seqlab.spectral import (
    CASE_FF_EVEN_D2,
    circulant_det_closed,
    circulant_det_exact,
    gauss_periods_numeric,
    spectrum_at,
)
from seqlab.verify import ALL_CHECKS, VerifyConfig, prime_pairs

TWIN_PAIRS = [(3, 5), (5, 7), (11, 13), (17, 19), (29, 31)]
DET_PAIRS = [(3, 5), (3, 7), (3, 11), (5, 7)]  # N = 15, 21, 33, 35

# which acceptance criterion exercises each identity check of the suite
CRITERION_COVERAGE = {
    "adic-bound": 1,
    "gcd-split": 1,
    "twin-prime-maximal": 2,
    "gauss-sums": 3,
    "gauss-product": 3,
    "spectrum": 4,
    "determinant": 5,
    "classes": 6,
    "class-products": 6,
    "negation-class": 6,
    "number-symmetries": 6,
    "shifted-intersections": 6,
    "mersenne-split": 7,
    "generator-agreement": 8,
}


def report(num: int, ok: bool, detail: str):
    print(f"{'PASS' if ok else 'FAIL'}  criterion {num:2d}: {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_1_lower_bound_scan():
    """phi2 >= pq - p - q - 1 for every pair with pq <= 3000, exactly."""
    t0 = time.time()
    pairs = prime_pairs(3000)
    violations = []
    for p, q in pairs:
        params = build_params(p, q)
        rep = two_adic_complexity(generate_via_legendre(params), params)
        if rep.phi2 < rep.bound:
            violations.append((p, q))
        diag = gcd_structure(params, rep)
        if not (diag.divides_product and diag.split_product_equals_g
                and diag.cofactor_gcd == 1):
            violations.append((p, q, "gcd structure"))
    elapsed = time.time() - t0
    ok = not violations and elapsed < 120
    report(1, ok, f"bound holds on all {len(pairs)} pairs with pq <= 3000 "
                  f"({elapsed:.1f}s){'' if not violations else violations[:3]}")


def test_criterion_2_twin_prime_maximality():
    """gcd = 1 and phi2 = N - 1 for the five twin pairs, exactly."""
    bad = []
    for p, q in TWIN_PAIRS:
        params = build_params(p, q)
        rep = two_adic_complexity(generate_via_legendre(params), params)
        if not (rep.g == 1 and rep.phi2 == params.n - 1):
            bad.append((p, q, rep.g, rep.phi2))
    report(2, not bad, f"gcd 1 and phi2 = N-1 on {TWIN_PAIRS}{bad or ''}")


def test_criterion_3_gauss_period_product():
    """Numeric omega0*omega1 matches the exact case value within 1e-6 for
    every pair with N <= 2000, the case picked by (ff' parity, d mod 4)."""
    pairs = prime_pairs(2000)
    worst = 0.0
    bad = []
    for p, q in pairs:
        params = build_params(p, q)
        tables = build_tables(params)
        prof = gauss_periods_numeric(tables)
        # case selection re-derived here, independent of the library tag
        if (params.f * params.fprime) % 2 == 0 and params.d % 4 == 2:
            expected = (1 + p * q) / 4
            expected_case = CASE_FF_EVEN_D2
        else:
            expected = (1 - p * q) / 4
            expected_case = prof.case  # either real-case tag
        err = abs(prof.omega0 * prof.omega1 - expected)
        worst = max(worst, err)
        sums_err = abs(sum(prof.etas) - 1)
        if err > 1e-6 or prof.case != expected_case or sums_err > 1e-9 * params.n:
            bad.append((p, q))
    report(3, not bad,
           f"period product exact on {len(pairs)} pairs with N <= 2000, "
           f"worst error {worst:.2e} <= 1e-6")


def test_criterion_4_spectrum_closed_form():
    """Direct numeric S(exp(2*pi*i*a/N)) matches the five-case closed form
    within 1e-8 * N at every a, for every pair with N <= 105."""
    pairs = prime_pairs(105)
    worst_ratio = 0.0
    bad = []
    for p, q in pairs:
        params = build_params(p, q)
        tables = build_tables(params)
        prof = gauss_periods_numeric(tables)
        seq = generate_modified_jacobi(params, tables)
        n = params.n
        ones = np.array([i for i in range(n) if seq[i]], dtype=np.int64)
        tol = 1e-8 * n
        for a in range(n):
            direct = complex(np.exp(2j * np.pi * a * ones / n).sum())
            err = abs(direct - complex(spectrum_at(a, tables, prof)))
            worst_ratio = max(worst_ratio, err / tol)
            if err > tol:
                bad.append((p, q, a))
    report(4, not bad,
           f"spectrum matches at all residues of {len(pairs)} pairs with "
           f"N <= 105, worst error {worst_ratio:.2e} of tolerance")


def test_criterion_5_determinant_identity():
    """Exact circulant determinant equals the closed form bit-for-bit for
    N in {15, 21, 33, 35}; (3,5) gives 131072."""
    bad = []
    dets = {}
    for p, q in DET_PAIRS:
        params = build_params(p, q)
        exact = circulant_det_exact(generate_modified_jacobi(params))
        closed = circulant_det_closed(params)
        dets[(p, q)] = exact
        if exact != closed:
            bad.append((p, q, exact, closed))
    if dets[(3, 5)] != 131072:
        bad.append(("(3,5) determinant", dets[(3, 5)]))
    report(5, not bad,
           f"det exact == closed on N in {[p*q for p, q in DET_PAIRS]}, "
           f"(3,5) -> {dets[(3, 5)]}")


def test_criterion_6_cyclotomic_identities():
    """Index-shift and transpose symmetries, row sums, all multiplication
    rules, the class of -1, and the shifted intersections hold exactly on
    every pair with N <= 1000."""
    pairs = prime_pairs(1000)
    names = ["classes", "class-products", "negation-class",
             "number-symmetries", "shifted-intersections"]
    cfg = VerifyConfig()
    bad = []
    for p, q in pairs:
        params = build_params(p, q)
        tables = build_tables(params)
        for name in names:
            result = ALL_CHECKS[name](params, tables, cfg)
            if result.passed is not True:
                bad.append((p, q, name))
    report(6, not bad,
           f"all exact identities on {len(pairs)} pairs with N <= 1000{bad[:3] or ''}")


def test_criterion_7_mersenne_cofactor_gcds():
    """gcd(2^p-1, (2^N-1)/(2^p-1)) = gcd(2^p-1, q) and the q side is 1
    for all prime pairs p < q <= 200; (11,23) gives 23."""
    primes = [n for n in range(3, 201) if is_prime(n)]
    bad = []
    count = 0
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            split = mersenne_gcd_split(PrimePair(p, q))
            count += 1
            if split.gp != math.gcd((1 << p) - 1, q) or split.gq != 1:
                bad.append((p, q))
    witness = mersenne_gcd_split(PrimePair(11, 23))
    if witness.gp != 23:
        bad.append(("witness", witness))
    report(7, not bad,
           f"cofactor gcds exact on {count} pairs with q <= 200, "
           f"(11,23) -> gp = {witness.gp}")


def test_criterion_8_generator_equivalence():
    """Class-table and Legendre-symbol generators emit identical bits for
    every pair with N <= 10^4."""
    pairs = prime_pairs(10_000)
    bad = []
    for p, q in pairs:
        params = build_params(p, q)
        if generate_modified_jacobi(params).buf != generate_via_legendre(params).buf:
            bad.append((p, q))
    report(8, not bad, f"generators bit-identical on {len(pairs)} pairs "
                       f"with N <= 10^4{bad[:3] or ''}")


def test_criterion_9_raa_round_trip():
    """From 2N+4 periodic prefix bits the synthesis attack recovers the
    reduced denominator (2^N-1)/gcd(S(2), 2^N-1), exactly, N <= 255."""
    pairs = prime_pairs(255)
    bad = []
    for p, q in pairs:
        params = build_params(p, q)
        seq = generate_via_legendre(params)
        rep = two_adic_complexity(seq)
        bits = list(seq)
        k = 2 * params.n + 4
        approx = raa_approximate((bits * (k // params.n + 1))[:k])
        if approx.denominator != rep.modulus // rep.g:
            bad.append((p, q))
        elif approx.numerator != -(rep.s2 // rep.g):
            bad.append((p, q, "numerator"))
        elif abs(approx.size_log() - rep.phi2) > 1:
            bad.append((p, q, "size"))
    report(9, not bad,
           f"denominator recovered from 2N+4 bits on {len(pairs)} pairs "
           f"with N <= 255{bad[:3] or ''}")


def test_criterion_10_identity_coverage():
    """No empirical tables exist to replay; instead every identity check
    the suite knows is pinned to one of the criteria above."""
    missing = set(ALL_CHECKS) - set(CRITERION_COVERAGE)
    extra = set(CRITERION_COVERAGE) - set(ALL_CHECKS)
    ok = not missing and not extra
    report(10, ok,
           f"all {len(ALL_CHECKS)} identity checks covered by criteria "
           f"{sorted(set(CRITERION_COVERAGE.values()))}"
           + (f"; missing {missing}" if missing else "")
           + (f"; stale {extra}" if extra else ""))
