"""Binary sequence generation and elementary statistics.

The headline construction puts a one at every residue of C1 = D1* | P.
An equivalent generator goes through Legendre symbols instead of the
materialized classes; the two must agree bit for bit.
"""

from dataclasses import dataclass, field

import numpy as np

from .cyclotomy import P_CODE, CyclotomicTables, SequenceParams, build_tables
from .numtheory import legendre_symbol

SOURCE_CYCLOTOMIC = "cyclotomic-def"
SOURCE_LEGENDRE = "legendre-def"
SOURCE_EXTERNAL = "external"

_SOURCES = (SOURCE_CYCLOTOMIC, SOURCE_LEGENDRE, SOURCE_EXTERNAL)


@dataclass(frozen=True)
class BinarySequence:
    """One period of bits, packed 8 per byte (bit i at byte i>>3, bit i&7)."""

    n: int
    buf: bytes
    params: SequenceParams | None = None
    source: str = SOURCE_EXTERNAL
    _int: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        if self.source not in _SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        if len(self.buf) != (self.n + 7) // 8:
            raise ValueError("packed buffer length does not match n")

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.buf[i >> 3] >> (i & 7)) & 1

    def __iter__(self):
        for i in range(self.n):
            yield self[i]

    def to_int(self) -> int:
        """The bits as sum(s_i * 2^i); cached after first use."""
        if not self._int:
            self._int.append(int.from_bytes(self.buf, "little"))
        return self._int[0]

    def weight(self) -> int:
        return self.to_int().bit_count()

    def to01(self) -> str:
        return "".join("1" if b else "0" for b in self)

    @classmethod
    def from_bits(cls, bits, params: SequenceParams | None = None,
                  source: str = SOURCE_EXTERNAL) -> "BinarySequence":
        bits = list(bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bits must be 0 or 1")
        buf = bytearray((len(bits) + 7) // 8)
        for i, b in enumerate(bits):
            if b:
                buf[i >> 3] |= 1 << (i & 7)
        return cls(n=len(bits), buf=bytes(buf), params=params, source=source)

    @classmethod
    def from01(cls, text: str, params: SequenceParams | None = None,
               source: str = SOURCE_EXTERNAL) -> "BinarySequence":
        return cls.from_bits((int(c) for c in text.strip()), params, source)


def _pack(mask: np.ndarray) -> bytes:
    return np.packbits(mask.astype(np.uint8), bitorder="little").tobytes()


def _expected_weight(params: SequenceParams) -> int:
    # |C1| = |D1*| + |P| = (p-1)(q-1)/2 + (q-1)
    return (params.p - 1) * (params.q - 1) // 2 + (params.q - 1)


def generate_modified_jacobi(params: SequenceParams,
                             tables: CyclotomicTables | None = None) -> BinarySequence:
    """s_i = 1 iff i mod N lies in C1, read off the cyclotomic tables."""
    if tables is None:
        tables = build_tables(params)
    n = params.n
    if tables.materialized:
        codes = tables.codes
        ones = (codes == P_CODE) | ((codes >= 0) & (codes % 2 == 1))
    else:
        ones = np.fromiter((tables.in_c1(i) for i in range(n)), dtype=bool, count=n)
    seq = BinarySequence(n=n, buf=_pack(ones), params=params, source=SOURCE_CYCLOTOMIC)
    if seq.weight() != _expected_weight(params):
        raise AssertionError("generated weight disagrees with |C1|")
    return seq


def _symbol_row(p: int) -> np.ndarray:
    return np.array([legendre_symbol(r, p) for r in range(p)], dtype=np.int8)


def generate_via_legendre(params: SequenceParams) -> BinarySequence:
    """Same sequence from the symbol form: ones on P and on units with
    (i/p)(i/q) = -1."""
    p, q, n = params.p, params.q, params.n
    idx = np.arange(n)
    sp = _symbol_row(p)[idx % p]
    sq = _symbol_row(q)[idx % q]
    ones = ((sp != 0) & (sq != 0) & (sp.astype(np.int16) * sq == -1)) | \
           ((sp == 0) & (sq != 0))
    seq = BinarySequence(n=n, buf=_pack(ones), params=params, source=SOURCE_LEGENDRE)
    if seq.weight() != _expected_weight(params):
        raise AssertionError("generated weight disagrees with |C1|")
    return seq


def autocorrelation(seq: BinarySequence, tau: int) -> int:
    """Periodic autocorrelation: agreements minus disagreements at shift tau."""
    n = seq.n
    if not 0 <= tau < n:
        raise ValueError("shift must satisfy 0 <= tau < N")
    x = seq.to_int()
    mask = (1 << n) - 1
    y = ((x >> tau) | (x << (n - tau))) & mask
    return n - 2 * (x ^ y).bit_count()


def save_sequence(seq: BinarySequence, path) -> None:
    """Two-line file: 'p q' or 'external N' header, then the ASCII bits."""
    if seq.params is not None and seq.params.n == seq.n:
        header = f"{seq.params.p} {seq.params.q}"
    else:
        header = f"external {seq.n}"
    with open(path, "w") as fh:
        fh.write(header + "\n" + seq.to01() + "\n")


def load_sequence(path) -> BinarySequence:
    """Read the two-line format back, bit-exactly."""
    from .cyclotomy import build_params

    with open(path) as fh:
        header = fh.readline().split()
        bits = fh.readline().strip()
    if not set(bits) <= {"0", "1"}:
        raise ValueError("sequence body must be ASCII 0/1")
    if len(header) != 2:
        raise ValueError("header must be 'p q' or 'external N'")
    if header[0] == "external":
        n = int(header[1])
        if n != len(bits):
            raise ValueError("declared length does not match bit string")
        return BinarySequence.from01(bits)
    p, q = int(header[0]), int(header[1])
    params = build_params(p, q)
    if params.n != len(bits):
        raise ValueError("bit string length does not equal pq")
    return BinarySequence.from01(bits, params=params, source=SOURCE_EXTERNAL)
