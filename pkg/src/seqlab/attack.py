"""Adversary instruments: 2-adic rational approximation (the FCSR
synthesis attack) and Berlekamp-Massey linear complexity.

The rational approximation works in the rank-2 integer lattice

    L_k = {(m, n) : m = n * alpha  (mod 2^k)},   alpha = sum(b_i 2^i),

spanned by (2^k, 0) and (alpha, 1).  Every lattice point with odd n is a
fraction m/n whose 2-adic expansion matches all k prefix bits, and the
attack returns the one minimizing max(|m|, n) (which also minimizes the
floor-log size measure).  The minimum is found exactly: Lagrange-Gauss
reduction of the basis, then enumeration of the few candidate rows a
reduced basis leaves possible.
"""

import math
from dataclasses import dataclass

from .adic import two_adic_complexity
from .cyclotomy import SequenceParams
from .numtheory import decimal_str
from .sequence import BinarySequence


@dataclass(frozen=True)
class RationalApprox:
    """Reduced fraction numerator/denominator matching prefix_len bits."""

    numerator: int
    denominator: int
    prefix_len: int

    def size_log(self) -> int:
        """floor(log2(max(|numerator|, denominator)))."""
        return max(abs(self.numerator), self.denominator).bit_length() - 1


def _norm2(w):
    return w[0] * w[0] + w[1] * w[1]


def _gauss_reduce(u, v):
    """Lagrange-Gauss reduction; returns (b1, b2) with |b1| <= |b2|."""
    if _norm2(u) < _norm2(v):
        u, v = v, u
    while True:
        # t = nearest integer to <u, v> / |v|^2
        d = u[0] * v[0] + u[1] * v[1]
        nv = _norm2(v)
        t = (2 * d + nv) // (2 * nv)
        u = (u[0] - t * v[0], u[1] - t * v[1])
        if _norm2(u) >= nv:
            return v, u
        u, v = v, u


def _row_candidates(c, b1, b2):
    """Integer positions a worth checking in the row a*b1 + c*b2.

    The lexicographic minimum of (max(|m|,n), n, |m|) along a row sits
    next to a zero of m(a), a zero of n(a), or a crossing |m| = |n|;
    a +-4 window around each covers every tie.
    """
    m1, n1 = b1
    m2, n2 = b2
    points = {0}
    for num, den in (
        (-c * m2, m1),
        (-c * n2, n1),
        (-c * (m2 - n2), m1 - n1),
        (-c * (m2 + n2), m1 + n1),
    ):
        if den:
            points.add(num // den)
    out = set()
    for a0 in points:
        for a in range(a0 - 4, a0 + 5):
            out.add(a)
    return out


def raa_approximate(prefix) -> RationalApprox:
    """Smallest fraction m/n, n odd, matching all the given prefix bits.

    Minimality is in max(|m|, n); ties broken by smaller n, then smaller
    |m|, then positive numerator.  The all-zero prefix yields 0/1.
    """
    bits = list(prefix)
    k = len(bits)
    if k < 2:
        raise ValueError("need a prefix of at least 2 bits")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("prefix bits must be 0 or 1")
    alpha = sum(b << i for i, b in enumerate(bits))
    if alpha == 0:
        return RationalApprox(0, 1, k)
    b1, b2 = _gauss_reduce(((1 << k), 0), (alpha, 1))
    best = None
    best_key = None
    # |c| <= 3 holds for any reduced basis; see the row bound argument
    for c in range(-3, 4):
        for a in _row_candidates(c, b1, b2):
            m = a * b1[0] + c * b2[0]
            n = a * b1[1] + c * b2[1]
            if n == 0 or n % 2 == 0:
                continue
            if n < 0:
                m, n = -m, -n
            key = (max(abs(m), n), n, abs(m), 0 if m >= 0 else 1)
            if best_key is None or key < best_key:
                best_key = key
                best = (m, n)
    m, n = best
    g = math.gcd(abs(m), n)
    return RationalApprox(m // g, n // g, k)


def _linear_complexity_bits(bits) -> int:
    """Berlekamp-Massey over GF(2); connection polynomials as bitmasks."""
    c, b = 1, 1  # bit j = coefficient of x^j
    lc = 0
    last = -1  # step of the last length change
    rev = 0  # bits seen so far, most recent in bit 0
    for n, s in enumerate(bits):
        rev = (rev << 1) | s
        # discrepancy: parity of sum c_j * s_{n-j}; bit j of rev is s_{n-j}
        if (c & rev).bit_count() & 1:
            if 2 * lc <= n:
                c, b = c ^ (b << (n - last)), c
                lc = n + 1 - lc
                last = n
            else:
                c ^= b << (n - last)
    return lc


def berlekamp_massey(seq: BinarySequence) -> int:
    """Linear complexity of the periodic sequence (run over two periods)."""
    bits = list(seq)
    return _linear_complexity_bits(bits + bits)


@dataclass
class AttackReport:
    """Both complexity measures and the synthesis outcome for one sequence."""

    n: int
    phi2: int
    linear_complexity: int
    approx: RationalApprox
    recovered: bool
    min_prefix: int | None
    threshold: float
    phi2_pass: bool
    lc_pass: bool
    degenerate: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "phi2": self.phi2,
            "linear_complexity": self.linear_complexity,
            "approx_numerator": decimal_str(self.approx.numerator),
            "approx_denominator": decimal_str(self.approx.denominator),
            "approx_prefix_len": self.approx.prefix_len,
            "recovered": self.recovered,
            "min_prefix": self.min_prefix,
            "threshold": self.threshold,
            "phi2_pass": self.phi2_pass,
            "lc_pass": self.lc_pass,
            "degenerate": self.degenerate,
        }

    @staticmethod
    def csv_header() -> str:
        return ("p,q,n,phi2,linear_complexity,approx_numerator,"
                "approx_denominator,recovered,min_prefix,phi2_pass,lc_pass")

    def to_csv_row(self, p="", q="") -> str:
        return (f"{p},{q},{self.n},{self.phi2},{self.linear_complexity},"
                f"{decimal_str(self.approx.numerator)},"
                f"{decimal_str(self.approx.denominator)},"
                f"{int(self.recovered)},"
                f"{'' if self.min_prefix is None else self.min_prefix},"
                f"{int(self.phi2_pass)},{int(self.lc_pass)}")


def _periodic_prefix(seq: BinarySequence, k: int) -> list[int]:
    bits = list(seq)
    reps = -(-k // seq.n)
    return (bits * reps)[:k]


MIN_PREFIX_SCAN_LIMIT = 255


def attack_report(seq: BinarySequence, params: SequenceParams | None = None,
                  find_min_prefix: bool | None = None) -> AttackReport:
    """Run both instruments and compare against the half-period threshold.

    A periodic sequence is the expansion of -S(2)/(2^N - 1); recovery
    means the attack returns exactly that fraction, reduced.  The
    smallest sufficient prefix is scanned for small N (or on request).
    """
    report = two_adic_complexity(seq, params)
    n = seq.n
    target = (-report.s2 // report.g, report.modulus // report.g)
    full = 2 * n + 4
    approx = raa_approximate(_periodic_prefix(seq, full))
    recovered = (approx.numerator, approx.denominator) == target
    if find_min_prefix is None:
        find_min_prefix = n <= MIN_PREFIX_SCAN_LIMIT
    min_prefix = None
    if find_min_prefix and recovered and not report.degenerate:
        for k in range(2, full + 1):
            cand = raa_approximate(_periodic_prefix(seq, k))
            if (cand.numerator, cand.denominator) == target:
                min_prefix = k
                break
    lc = berlekamp_massey(seq)
    threshold = n / 2
    return AttackReport(
        n=n,
        phi2=report.phi2,
        linear_complexity=lc,
        approx=approx,
        recovered=recovered,
        min_prefix=min_prefix,
        threshold=threshold,
        phi2_pass=not report.degenerate and report.phi2 >= threshold,
        lc_pass=not report.degenerate and lc >= threshold,
        degenerate=report.degenerate,
    )
