"""Identity suite: every structural fact the toolkit relies on, checked
exhaustively (exact arithmetic) or numerically (with explicit tolerance)
for a given parameter pair.

Each check returns a CheckResult; the CLI renders one verdict line per
check and exits nonzero on any failure.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import spectral
from .adic import gcd_structure, lower_bound_verdict, two_adic_complexity
from .cyclotomy import (
    CyclotomicTables,
    SequenceParams,
    build_params,
    build_tables,
    cyclotomic_number_matrix,
)
from .numtheory import PrimePair, mersenne_gcd_split, multiplicative_order
from .sequence import generate_modified_jacobi, generate_via_legendre

DEFAULT_SPECTRUM_TOLERANCE = 1e-8  # scaled by N
DEFAULT_PRODUCT_TOLERANCE = 1e-6
DEFAULT_GAUSS_SUM_TOLERANCE = 1e-9  # scaled by N


@dataclass
class CheckResult:
    name: str
    passed: bool | None  # None means skipped
    detail: str

    @property
    def status(self) -> str:
        if self.passed is None:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"


@dataclass
class VerifyConfig:
    tolerance: float | None = None  # overrides the numeric tolerances
    oracle_max_n: int = spectral.ORACLE_LIMIT
    numeric_max_n: int = 2000  # ceiling for the O(N^2) numeric checks


def _units_and_codes(tables: CyclotomicTables):
    codes = tables.codes
    units = np.nonzero(codes >= 0)[0]
    return units, codes


def check_classes(params: SequenceParams, tables: CyclotomicTables,
                  cfg: VerifyConfig) -> CheckResult:
    """Partition of Z_N: class sizes, disjointness, set cardinalities,
    and agreement of the Legendre parity shortcut with enumeration."""
    p, q, d = params.p, params.q, params.d
    ok = all(len(c) == params.class_size for c in tables.classes)
    ok &= len(tables.P) == q - 1 and len(tables.Q) == p - 1
    ok &= len(tables.c1) == (p - 1) * (q - 1) // 2 + (q - 1)
    ok &= len(tables.c0) + len(tables.c1) == params.n
    ok &= multiplicative_order(params.g, params.n) == params.class_size
    for i in range(d):
        for u in tables.classes[i]:
            if tables.unit_parity(u) != i % 2:
                ok = False
                break
    return CheckResult("classes", ok, f"d={d} class size {params.class_size}")


def check_class_products(params: SequenceParams, tables: CyclotomicTables,
                         cfg: VerifyConfig) -> CheckResult:
    """Multiplication rules, exhaustively over every multiplier:

    - unit a in D_i maps D_j onto D_{(i+j) mod d} and fixes P and Q;
      the parity unions therefore multiply mod 2;
    - a in P spreads each class uniformly over P ((p-1)/d copies per
      class, so (p-1)/2 per parity union), fixes P, collapses Q to {0};
    - symmetrically for a in Q.
    """
    from .cyclotomy import P_CODE, Q_CODE

    n, d, p, q = params.n, params.d, params.p, params.q
    units, codes = _units_and_codes(tables)
    cls = codes[units]
    parr = np.sort(np.fromiter(tables.P, dtype=np.int64, count=len(tables.P)))
    qarr = np.sort(np.fromiter(tables.Q, dtype=np.int64, count=len(tables.Q)))
    class_arrays = [np.fromiter(c, dtype=np.int64, count=params.class_size)
                    for c in tables.classes]
    ok = True
    # class(ab) = class(a) + class(b) mod d for all unit pairs; since
    # multiplication by a unit is a bijection this is the full set rule
    for a in map(int, units):
        prod_cls = codes[(a * units) % n]
        if not np.array_equal(prod_cls, (int(codes[a]) + cls) % d):
            ok = False
            break
        if not np.array_equal(prod_cls % 2, (int(codes[a]) + cls) % 2):
            ok = False
            break
        if not (np.all(codes[(a * parr) % n] == P_CODE)
                and np.all(codes[(a * qarr) % n] == Q_CODE)):
            ok = False
            break
    if ok:
        for a in map(int, parr):
            for ci in class_arrays:
                counts = np.bincount((a * ci) % n, minlength=n)
                if not np.all(counts[parr] == (p - 1) // d):
                    ok = False
                    break
            products = np.unique((a * parr) % n)
            if not (ok and np.array_equal(products, parr)
                    and np.all((a * qarr) % n == 0)):
                ok = False
            if not ok:
                break
    if ok:
        for a in map(int, qarr):
            for ci in class_arrays:
                counts = np.bincount((a * ci) % n, minlength=n)
                if not np.all(counts[qarr] == (q - 1) // d):
                    ok = False
                    break
            products = np.unique((a * qarr) % n)
            if not (ok and np.array_equal(products, qarr)
                    and np.all((a * parr) % n == 0)):
                ok = False
            if not ok:
                break
    return CheckResult("class-products", ok, "all multipliers checked")


def check_negation_class(params: SequenceParams, tables: CyclotomicTables,
                         cfg: VerifyConfig) -> CheckResult:
    """-1 lies in D_0 when f*f' is odd and in D_{d/2} when it is even."""
    expected = 0 if params.f * params.fprime % 2 == 1 else params.d // 2
    got = tables.class_index(params.n - 1)
    return CheckResult("negation-class", got == expected,
                       f"class of -1 is D{got}, expected D{expected}")


def check_number_symmetries(params: SequenceParams, tables: CyclotomicTables,
                            cfg: VerifyConfig) -> CheckResult:
    """Cyclotomic-number identities: the index shift (i,j) = (d-i, j-i),
    the transpose rule switching on the parity of f*f', and the row sums
    ((p-2)(q-2)-1)/d + delta_i."""
    d = params.d
    mat = cyclotomic_number_matrix(tables)
    ok = True
    for i in range(d):
        for j in range(d):
            if mat[i][j] != mat[(d - i) % d][(j - i) % d]:
                ok = False
    ff_even = params.f * params.fprime % 2 == 0
    for i in range(d):
        for j in range(d):
            if ff_even:
                other = mat[(j + d // 2) % d][(i + d // 2) % d]
            else:
                other = mat[j][i]
            if mat[i][j] != other:
                ok = False
    base = ((params.p - 2) * (params.q - 2) - 1) // d
    special = d // 2 if ff_even else 0
    for i in range(d):
        delta = 1 if i == special else 0
        if sum(mat[i]) != base + delta:
            ok = False
    return CheckResult("number-symmetries", ok, f"{d}x{d} matrix identities")


def check_shifted_intersections(params: SequenceParams, tables: CyclotomicTables,
                                cfg: VerifyConfig) -> CheckResult:
    """|D_i & (D_j + u)| for u in P | Q matches its three-case value."""
    n, d, p, q = params.n, params.d, params.p, params.q
    units, codes = _units_and_codes(tables)
    cls = codes[units]
    ok = True
    for u, in_p in [(u, True) for u in tables.P] + [(u, False) for u in tables.Q]:
        shifted = codes[(units + u) % n]
        valid = shifted >= 0
        counts = np.zeros((d, d), dtype=np.int64)
        np.add.at(counts, (shifted[valid], cls[valid]), 1)
        same = (p - 1) * (q - 1 - d) // d ** 2 if in_p else (p - 1 - d) * (q - 1) // d ** 2
        expected = np.full((d, d), (p - 1) * (q - 1) // d ** 2, dtype=np.int64)
        np.fill_diagonal(expected, same)
        if not np.array_equal(counts, expected):
            ok = False
            break
    return CheckResult("shifted-intersections", ok,
                       f"all {len(tables.P) + len(tables.Q)} shifts")


def check_gauss_sums(params: SequenceParams, tables: CyclotomicTables,
                     cfg: VerifyConfig) -> CheckResult:
    """Character sums: periods sum to 1; P and Q each sum to -1."""
    n = params.n
    tol = (cfg.tolerance or DEFAULT_GAUSS_SUM_TOLERANCE) * n
    prof = spectral.gauss_periods_numeric(tables)
    ok = abs(sum(prof.etas) - 1) <= tol
    for part in (tables.P, tables.Q):
        xs = np.fromiter(part, dtype=np.int64, count=len(part))
        ok &= abs(complex(np.exp(2j * np.pi * xs / n).sum()) + 1) <= tol
    ok &= abs(prof.omega0 + prof.omega1 - 1) <= tol
    return CheckResult("gauss-sums", bool(ok), f"tolerance {tol:.2e}")


def check_gauss_product(params: SequenceParams, tables: CyclotomicTables,
                        cfg: VerifyConfig) -> CheckResult:
    """Numeric omega0*omega1 equals its exact case value; the sum of
    squares matches the case identity."""
    tol = cfg.tolerance or DEFAULT_PRODUCT_TOLERANCE
    prof = spectral.gauss_periods_numeric(tables)
    product = prof.omega0 * prof.omega1
    ok = abs(product - complex(prof.omega_product_exact)) <= tol
    pq = params.p * params.q
    sq = prof.omega0 ** 2 + prof.omega1 ** 2
    if prof.case == spectral.CASE_FF_EVEN_D2:
        ok &= abs(sq - (1 - (pq + 1) / 2)) <= tol
    else:
        ok &= abs(sq - (1 + (pq - 1) / 2)) <= tol
    # numeric omega0 must be one of the two closed-form candidates
    ok &= min(abs(prof.omega0 - c) for c in prof.candidates) <= tol
    return CheckResult("gauss-product", bool(ok),
                       f"case {prof.case}, product {prof.omega_product_exact}")


def check_spectrum(params: SequenceParams, tables: CyclotomicTables,
                   cfg: VerifyConfig) -> CheckResult:
    """Direct numeric DFT of the sequence matches the five-case closed
    form at every exponent."""
    n = params.n
    if n > cfg.numeric_max_n:
        return CheckResult("spectrum", None, f"N={n} above numeric ceiling")
    tol = (cfg.tolerance or DEFAULT_SPECTRUM_TOLERANCE) * n
    seq = generate_modified_jacobi(params, tables)
    prof = spectral.gauss_periods_numeric(tables)
    ones = np.fromiter((i for i in range(n) if seq[i]), dtype=np.int64)
    worst = 0.0
    for a in range(n):
        direct = complex(np.exp(2j * np.pi * a * ones / n).sum())
        closed = complex(spectral.spectrum_at(a, tables, prof))
        worst = max(worst, abs(direct - closed))
    return CheckResult("spectrum", worst <= tol,
                       f"worst |diff| {worst:.2e} <= {tol:.2e}")


def check_determinant(params: SequenceParams, tables: CyclotomicTables,
                      cfg: VerifyConfig) -> CheckResult:
    """Closed-form circulant determinant equals the exact elimination
    oracle, bit for bit."""
    if params.n > cfg.oracle_max_n:
        return CheckResult("determinant", None,
                           f"N={params.n} above oracle ceiling {cfg.oracle_max_n}")
    seq = generate_modified_jacobi(params, tables)
    exact = spectral.circulant_det_exact(seq, cfg.oracle_max_n)
    closed = spectral.circulant_det_closed(params)
    return CheckResult("determinant", exact == closed,
                       f"det = {closed}")


def check_mersenne_split(params: SequenceParams, tables: CyclotomicTables,
                         cfg: VerifyConfig) -> CheckResult:
    """gcd(2^p-1, cofactor) = gcd(2^p-1, q); the q side is always 1."""
    pair = PrimePair(params.p, params.q)
    split = mersenne_gcd_split(pair)
    ok = split.gp == math.gcd((1 << params.p) - 1, params.q)
    ok &= split.gq == 1
    return CheckResult("mersenne-split", ok, f"gp={split.gp} gq={split.gq}")


def check_generator_agreement(params: SequenceParams, tables: CyclotomicTables,
                              cfg: VerifyConfig) -> CheckResult:
    """Both sequence definitions emit identical bits."""
    a = generate_modified_jacobi(params, tables)
    b = generate_via_legendre(params)
    return CheckResult("generator-agreement", a.buf == b.buf,
                       f"N={params.n} weight {a.weight()}")


def check_adic_bound(params: SequenceParams, tables: CyclotomicTables,
                     cfg: VerifyConfig) -> CheckResult:
    """Exact 2-adic complexity is at least pq - p - q - 1."""
    seq = generate_via_legendre(params)
    report = two_adic_complexity(seq, params)
    verdict = lower_bound_verdict(params, report)
    return CheckResult("adic-bound", verdict.holds,
                       f"phi2 {report.phi2} >= bound {verdict.bound}")


def check_twin_prime(params: SequenceParams, tables: CyclotomicTables,
                     cfg: VerifyConfig) -> CheckResult:
    """For q = p + 2 the complexity is maximal: gcd 1 and phi2 = N - 1."""
    if params.q != params.p + 2:
        return CheckResult("twin-prime-maximal", None, "not a twin pair")
    seq = generate_via_legendre(params)
    report = two_adic_complexity(seq, params)
    verdict = lower_bound_verdict(params, report)
    return CheckResult("twin-prime-maximal", bool(verdict.twin_prime_maximal),
                       f"gcd {report.g}, phi2 {report.phi2} of max {params.n - 1}")


def check_gcd_split(params: SequenceParams, tables: CyclotomicTables,
                    cfg: VerifyConfig) -> CheckResult:
    """gcd(S(2), 2^N-1) divides (2^p-1)(2^q-1) and avoids the cofactor."""
    seq = generate_via_legendre(params)
    report = two_adic_complexity(seq, params)
    diag = gcd_structure(params, report)
    ok = diag.divides_product and diag.split_product_equals_g
    ok &= diag.cofactor_gcd == 1
    return CheckResult("gcd-split", ok,
                       f"g={diag.g} = {diag.split_p} * {diag.split_q}")


ALL_CHECKS = {
    "classes": check_classes,
    "class-products": check_class_products,
    "negation-class": check_negation_class,
    "number-symmetries": check_number_symmetries,
    "shifted-intersections": check_shifted_intersections,
    "gauss-sums": check_gauss_sums,
    "gauss-product": check_gauss_product,
    "spectrum": check_spectrum,
    "determinant": check_determinant,
    "mersenne-split": check_mersenne_split,
    "generator-agreement": check_generator_agreement,
    "adic-bound": check_adic_bound,
    "twin-prime-maximal": check_twin_prime,
    "gcd-split": check_gcd_split,
}

# cheap enough to run on every pair of a range scan
SCAN_CHECKS = ("adic-bound", "twin-prime-maximal", "gcd-split")


def resolve_check_name(name: str) -> str:
    """Exact check name, or a unique prefix of one (e.g. 'det')."""
    if name in ALL_CHECKS:
        return name
    matches = [n for n in ALL_CHECKS if n.startswith(name)]
    if len(matches) != 1:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(ALL_CHECKS)}")
    return matches[0]


def run_checks(p: int, q: int, only: str | None = None,
               cfg: VerifyConfig | None = None) -> list[CheckResult]:
    """Run the identity suite (or one named check) for a single pair."""
    cfg = cfg or VerifyConfig()
    names = [resolve_check_name(only)] if only else list(ALL_CHECKS)
    params = build_params(p, q)
    tables = build_tables(params)
    return [ALL_CHECKS[name](params, tables, cfg) for name in names]


def prime_pairs(max_pq: int, min_p: int = 3):
    """All odd prime pairs p < q with pq <= max_pq, sorted."""
    from .numtheory import is_prime

    primes = [n for n in range(3, max_pq // 3 + 1) if is_prime(n)]
    out = []
    for i, p in enumerate(primes):
        if p < min_p or p * p > max_pq:
            continue
        for q in primes[i + 1:]:
            if p * q > max_pq:
                break
            out.append((p, q))
    return sorted(out)
