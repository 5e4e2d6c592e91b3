"""Exact 2-adic complexity and the lower-bound verdicts.

The complexity of a period-N sequence is floor(log2) of the reduced
denominator of S(2)/(2^N - 1); everything is big-integer arithmetic, the
floor-log in particular is a bit length, never a float.
"""

import math
from dataclasses import dataclass

from .cyclotomy import SequenceParams
from .numtheory import decimal_str
from .sequence import BinarySequence


def s_of_2(seq: BinarySequence) -> int:
    """sum(s_i * 2^i) over one period, exactly."""
    return seq.to_int()


def _floor_log2(n: int) -> int:
    if n <= 0:
        raise ValueError("floor log2 needs a positive integer")
    return n.bit_length() - 1


@dataclass
class AdicReport:
    """Everything the 2-adic analysis of one sequence produces."""

    n: int
    s2: int
    modulus: int
    g: int
    phi2: int
    degenerate: bool
    maximal: bool
    bound: int | None = None
    bound_holds: bool | None = None
    gcd_divides_mersenne_product: bool | None = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "s2": decimal_str(self.s2),
            "modulus": decimal_str(self.modulus),
            "gcd": decimal_str(self.g),
            "phi2": self.phi2,
            "degenerate": self.degenerate,
            "maximal": self.maximal,
            "bound": self.bound,
            "bound_holds": self.bound_holds,
            "gcd_divides_mersenne_product": self.gcd_divides_mersenne_product,
        }


def two_adic_complexity(seq: BinarySequence,
                        params: SequenceParams | None = None) -> AdicReport:
    """Exact report; the all-zero input gets phi2 = 0 with a degenerate flag."""
    if params is None:
        params = seq.params
    n = seq.n
    s2 = s_of_2(seq)
    modulus = (1 << n) - 1
    g = math.gcd(s2, modulus)  # gcd(0, m) == m covers the all-zero case
    phi2 = _floor_log2(modulus // g)
    report = AdicReport(
        n=n,
        s2=s2,
        modulus=modulus,
        g=g,
        phi2=phi2,
        degenerate=(s2 == 0),
        maximal=(phi2 == n - 1),
    )
    if params is not None and params.n == n:
        report.bound = params.p * params.q - params.p - params.q - 1
        report.bound_holds = report.phi2 >= report.bound
        mp = (1 << params.p) - 1
        mq = (1 << params.q) - 1
        report.gcd_divides_mersenne_product = (mp * mq) % g == 0
    return report


@dataclass(frozen=True)
class BoundVerdict:
    bound: int
    holds: bool
    twin_prime_maximal: bool | None


def lower_bound_verdict(params: SequenceParams, report: AdicReport) -> BoundVerdict:
    """Check phi2 >= pq - p - q - 1, plus maximality when q = p + 2."""
    bound = params.p * params.q - params.p - params.q - 1
    holds = report.phi2 >= bound
    twin = None
    if params.q == params.p + 2:
        twin = report.g == 1 and report.phi2 == params.n - 1
    return BoundVerdict(bound=bound, holds=holds, twin_prime_maximal=twin)


@dataclass(frozen=True)
class GcdDiagnostics:
    """How gcd(S(2), 2^N - 1) sits inside the two Mersenne factors."""

    g: int
    split_p: int
    split_q: int
    divides_product: bool
    split_product_equals_g: bool
    cofactor_gcd: int

    def to_json_dict(self) -> dict:
        return {
            "gcd": decimal_str(self.g),
            "split_p": decimal_str(self.split_p),
            "split_q": decimal_str(self.split_q),
            "divides_product": self.divides_product,
            "split_product_equals_g": self.split_product_equals_g,
            "cofactor_gcd": decimal_str(self.cofactor_gcd),
        }


def gcd_structure(params: SequenceParams, report: AdicReport) -> GcdDiagnostics:
    """Split g across 2^p - 1 and 2^q - 1 and test it against the cofactor.

    2^p - 1 and 2^q - 1 are coprime for distinct primes, so g dividing
    their product is equivalent to g equalling the product of its two
    splits; the remaining cofactor of 2^N - 1 should share nothing with g.
    """
    p, q = params.p, params.q
    mp = (1 << p) - 1
    mq = (1 << q) - 1
    g = report.g
    split_p = math.gcd(g, mp)
    split_q = math.gcd(g, mq)
    cofactor = report.modulus // (mp * mq)
    return GcdDiagnostics(
        g=g,
        split_p=split_p,
        split_q=split_q,
        divides_product=(mp * mq) % g == 0,
        split_product_equals_g=split_p * split_q == g,
        cofactor_gcd=math.gcd(g, cofactor),
    )
