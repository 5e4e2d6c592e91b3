"""Whiteman generalized cyclotomic classes of order d = gcd(p-1, q-1).

The unit group of Z_pq splits into d classes D_i = {g^t x^i}, where g is
the smallest common primitive root of p and q and x is the CRT lift with
x = g (mod p), x = 1 (mod q).  On top of the classes sit the derived
partitions used by the sequence construction:

    P  = nonzero multiples of p        (q-1 elements)
    Q  = nonzero multiples of q        (p-1 elements)
    R  = {0}
    D0* = union of even-index classes, D1* = union of odd-index classes
    C1 = D1* | P,  C0 = everything else
"""

import math
from dataclasses import dataclass

import numpy as np

from .numtheory import PrimePair, common_primitive_root, legendre_symbol, whiteman_x

# Membership codes for non-unit residues; units carry their class index.
P_CODE = -1
Q_CODE = -2
R_CODE = -3

MATERIALIZE_LIMIT = 1_000_000


@dataclass(frozen=True)
class SequenceParams:
    """Full parameter tuple of one Whiteman construction."""

    p: int
    q: int
    n: int
    d: int
    f: int
    fprime: int
    g: int
    x: int
    class_size: int

    @property
    def pair(self) -> PrimePair:
        return PrimePair(self.p, self.q)


def build_params(p: int, q: int) -> SequenceParams:
    """Validate (p, q) and derive d, f, f', g, x and the class size."""
    pair = PrimePair(p, q)
    d = math.gcd(p - 1, q - 1)
    g = common_primitive_root(pair)
    return SequenceParams(
        p=p,
        q=q,
        n=p * q,
        d=d,
        f=(p - 1) // d,
        fprime=(q - 1) // d,
        g=g,
        x=whiteman_x(pair, g),
        class_size=(p - 1) * (q - 1) // d,
    )


class CyclotomicTables:
    """Materialized classes plus an O(1) membership index.

    Above `materialize_limit` no sets are built; unit membership then
    resolves only to the even/odd class union (via Legendre symbols) and
    P/Q/R by divisibility, which is all the sequence and the 2-adic
    analysis need at large N.
    """

    def __init__(self, params: SequenceParams, materialize_limit: int = MATERIALIZE_LIMIT):
        self.params = params
        self.materialized = params.n <= materialize_limit
        self.classes: tuple[frozenset[int], ...] | None = None
        self._codes: np.ndarray | None = None
        n, p, q = params.n, params.p, params.q
        # 0 < kp < pq is never a multiple of q, so no overlap to remove
        self.P = frozenset(range(p, n, p))
        self.Q = frozenset(range(q, n, q))
        self.R = frozenset({0})
        if self.materialized:
            self._build_sets()

    def _build_sets(self):
        pr = self.params
        n, d, size, g = pr.n, pr.d, pr.class_size, pr.g
        codes = np.full(n, R_CODE, dtype=np.int32)
        codes[np.arange(pr.p, n, pr.p)] = P_CODE
        codes[np.arange(pr.q, n, pr.q)] = Q_CODE
        classes = []
        for i in range(d):
            elt = pow(pr.x, i, n)
            cls = []
            for _ in range(size):
                cls.append(elt)
                elt = elt * g % n
            arr = np.array(cls, dtype=np.int64)
            if not np.all(codes[arr] == R_CODE) or len(set(cls)) != size:
                raise ValueError(f"classes do not partition the units of Z_{n}")
            codes[arr] = i
            classes.append(frozenset(cls))
        if int((codes >= 0).sum()) != (pr.p - 1) * (pr.q - 1):
            raise ValueError("class enumeration incomplete")
        self.classes = tuple(classes)
        self._codes = codes
        self.d0star = frozenset().union(*classes[0::2])
        self.d1star = frozenset().union(*classes[1::2])
        self.c1 = self.d1star | self.P
        self.c0 = frozenset(range(n)) - self.c1

    @property
    def codes(self) -> np.ndarray:
        if self._codes is None:
            raise ValueError("tables not materialized at this N")
        return self._codes

    def class_index(self, u: int) -> int:
        """Class index of a unit (requires materialized tables)."""
        c = int(self.codes[u % self.params.n])
        if c < 0:
            raise ValueError(f"{u} is not a unit modulo {self.params.n}")
        return c

    def unit_parity(self, u: int) -> int:
        """0 if u lies in the even-class union, 1 if in the odd one.

        Works at any N: a unit is in the odd union exactly when its two
        Legendre symbols disagree.
        """
        pr = self.params
        s = legendre_symbol(u, pr.p) * legendre_symbol(u, pr.q)
        if s == 0:
            raise ValueError(f"{u} is not a unit modulo {pr.n}")
        return 0 if s == 1 else 1

    def membership(self, i: int) -> str:
        """Label of residue i: 'R', 'P', 'Q', 'Dk' (or 'D0*'/'D1*' at big N)."""
        i %= self.params.n
        if i == 0:
            return "R"
        if i % self.params.p == 0:
            return "P"
        if i % self.params.q == 0:
            return "Q"
        if self.materialized:
            return f"D{self.class_index(i)}"
        return "D0*" if self.unit_parity(i) == 0 else "D1*"

    def in_c1(self, i: int) -> bool:
        """True iff residue i supports a one bit (odd union or P)."""
        i %= self.params.n
        if i == 0:
            return False
        if i % self.params.p == 0:
            return True
        if i % self.params.q == 0:
            return False
        return self.unit_parity(i) == 1


def build_tables(params: SequenceParams,
                 materialize_limit: int = MATERIALIZE_LIMIT) -> CyclotomicTables:
    return CyclotomicTables(params, materialize_limit)


def cyclotomic_number(tables: CyclotomicTables, i: int, j: int) -> int:
    """(i,j) = |(D_i + 1) & D_j|, counted by direct set intersection."""
    pr = tables.params
    if tables.classes is None:
        raise ValueError("tables not materialized at this N")
    if not (0 <= i < pr.d and 0 <= j < pr.d):
        raise ValueError("class indices out of range")
    n = pr.n
    dj = tables.classes[j]
    return sum(1 for a in tables.classes[i] if (a + 1) % n in dj)


def cyclotomic_number_matrix(tables: CyclotomicTables) -> list[list[int]]:
    """All d^2 cyclotomic numbers in one pass over the units."""
    pr = tables.params
    codes = tables.codes
    n, d = pr.n, pr.d
    mat = [[0] * d for _ in range(d)]
    for i in range(d):
        for a in tables.classes[i]:
            j = int(codes[(a + 1) % n])
            if j >= 0:
                mat[i][j] += 1
    return mat


def shifted_intersection(tables: CyclotomicTables, i: int, j: int, u: int) -> int:
    """|D_i & (D_j + u)| for a shift u in P | Q."""
    pr = tables.params
    if tables.classes is None:
        raise ValueError("tables not materialized at this N")
    if not (0 <= i < pr.d and 0 <= j < pr.d):
        raise ValueError("class indices out of range")
    u %= pr.n
    if u not in tables.P and u not in tables.Q:
        raise ValueError(f"shift {u} is not in P or Q")
    n = pr.n
    di = tables.classes[i]
    return sum(1 for b in tables.classes[j] if (b + u) % n in di)


def tables_to_json(tables: CyclotomicTables) -> dict:
    """Debug dump: classes and multiples as sorted residue lists."""
    if not tables.materialized:
        raise ValueError("tables not materialized at this N")
    return {
        "p": tables.params.p,
        "q": tables.params.q,
        "D": [sorted(cls) for cls in tables.classes],
        "P": sorted(tables.P),
        "Q": sorted(tables.Q),
    }
