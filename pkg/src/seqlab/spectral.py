"""Gauss periods, the per-residue spectrum of the sequence, and the
circulant determinant, each computed two independent ways.

The numeric path sums complex roots of unity over the materialized
classes; the exact path evaluates the closed forms.  The numeric side is
what pins down which sign of the square root a given (p, q) realizes;
the closed forms only fix the product of the two period sums:

    omega0 * omega1 = (1 - pq)/4   when f*f' odd, or f*f' even with d % 4 == 0
    omega0 * omega1 = (1 + pq)/4   when f*f' even with d % 4 == 2
"""

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclotomy import CyclotomicTables, SequenceParams
from .numtheory import decimal_str
from .sequence import BinarySequence

NUMERIC_LIMIT = 100_000
ORACLE_LIMIT = 40

CASE_FF_ODD = "ff-odd"
CASE_FF_EVEN_D0 = "ff-even-d0mod4"
CASE_FF_EVEN_D2 = "ff-even-d2mod4"


@dataclass
class SpectralProfile:
    """Numeric Gauss periods plus the exact case data for one (p, q)."""

    params: SequenceParams
    etas: list[complex]
    omega0: complex
    omega1: complex
    case: str
    omega_product_exact: Fraction
    candidates: tuple[complex, complex]
    spectrum: dict
    det_closed: int

    def to_json_dict(self) -> dict:
        def cpx(z):
            return [z.real, z.imag]

        return {
            "p": self.params.p,
            "q": self.params.q,
            "etas": [cpx(e) for e in self.etas],
            "omega0": cpx(self.omega0),
            "omega1": cpx(self.omega1),
            "case": self.case,
            "omega_product_exact": str(self.omega_product_exact),
            "candidates": [cpx(c) for c in self.candidates],
            "spectrum": {
                k: (str(v) if isinstance(v, (int, Fraction)) else cpx(v))
                for k, v in self.spectrum.items()
            },
            "det_closed": decimal_str(self.det_closed),
        }


def classify_case(params: SequenceParams) -> str:
    if params.f * params.fprime % 2 == 1:
        return CASE_FF_ODD
    return CASE_FF_EVEN_D0 if params.d % 4 == 0 else CASE_FF_EVEN_D2


def omega_closed_form(params: SequenceParams) -> tuple[str, Fraction, tuple[complex, complex]]:
    """Case tag, the exact product omega0*omega1, and the candidate pair.

    The candidates are (1 +- sqrt(pq))/2 in the real cases and
    (1 +- i*sqrt(pq))/2 in the complex one; which of the two is omega0
    stays undetermined here.
    """
    case = classify_case(params)
    pq = params.p * params.q
    if case == CASE_FF_EVEN_D2:
        product = Fraction(1 + pq, 4)
        root = 1j * cmath.sqrt(pq)
    else:
        product = Fraction(1 - pq, 4)
        root = complex(cmath.sqrt(pq))
    candidates = ((1 + root) / 2, (1 - root) / 2)
    return case, product, candidates


def gauss_periods_numeric(tables: CyclotomicTables,
                          limit: int = NUMERIC_LIMIT) -> SpectralProfile:
    """Evaluate every eta_i = sum over D_i of exp(2*pi*i*x/N) in doubles."""
    params = tables.params
    n = params.n
    if n > limit:
        raise ValueError(f"numeric Gauss periods limited to N <= {limit}")
    if not tables.materialized:
        raise ValueError("numeric Gauss periods need materialized tables")
    etas = []
    for cls in tables.classes:
        xs = np.fromiter(cls, dtype=np.int64, count=len(cls))
        etas.append(complex(np.exp(2j * np.pi * xs / n).sum()))
    omega0 = sum(etas[0::2])
    omega1 = sum(etas[1::2])
    case, product, candidates = omega_closed_form(params)
    spectrum = {
        "R": Fraction((params.p + 1) * (params.q - 1), 2),
        "D0*": -omega0,
        "D1*": -omega1,
        "P": Fraction(-(params.p + 1), 2),
        "Q": Fraction(params.q - 1, 2),
    }
    return SpectralProfile(
        params=params,
        etas=etas,
        omega0=omega0,
        omega1=omega1,
        case=case,
        omega_product_exact=product,
        candidates=candidates,
        spectrum=spectrum,
        det_closed=circulant_det_closed(params),
    )


def spectrum_at(a: int, tables: CyclotomicTables,
                profile: SpectralProfile | None = None):
    """Closed-form DFT value of the sequence at exponent a.

    Five cases: weight at a = 0, -omega0 / -omega1 on the two class
    unions, -(p+1)/2 on P and (q-1)/2 on Q.
    """
    params = tables.params
    a %= params.n
    if a == 0:
        return Fraction((params.p + 1) * (params.q - 1), 2)
    if a % params.p == 0:
        return Fraction(-(params.p + 1), 2)
    if a % params.q == 0:
        return Fraction(params.q - 1, 2)
    if profile is None:
        profile = gauss_periods_numeric(tables)
    return -profile.omega1 if tables.unit_parity(a) else -profile.omega0


def circulant_det_closed(params: SequenceParams) -> int:
    """Exact determinant of the sequence's circulant via the closed form.

    det = 2 * ((p+1)/2)^q * ((q-1)/2)^p * (omega0*omega1)^((p-1)(q-1)/2),
    with the period product replaced by its exact rational value.
    """
    case, product, _ = omega_closed_form(params)
    if product.denominator != 1:
        raise AssertionError("period product should be integral for odd primes")
    p, q = params.p, params.q
    e = (p - 1) * (q - 1) // 2
    return 2 * ((p + 1) // 2) ** q * ((q - 1) // 2) ** p * int(product) ** e


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free elimination; exact integer determinant, no floats."""
    n = len(m)
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def circulant_det_exact(seq: BinarySequence, limit: int = ORACLE_LIMIT) -> int:
    """Exact determinant of the N x N circulant with entries s_{(i-j) mod N}."""
    n = seq.n
    if n > limit:
        raise ValueError(f"exact circulant determinant limited to N <= {limit}")
    bits = list(seq)
    return _bareiss_det([[bits[(i - j) % n] for j in range(n)] for i in range(n)])
