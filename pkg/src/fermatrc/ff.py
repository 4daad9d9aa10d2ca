"""Exact arithmetic in GF(p^n) for small primes p.

Field elements are plain Python ints: the element with digit vector
(d_0, ..., d_{n-1}) over F_p is encoded as sum(d_i * p**i), so all elements
live in range(q) and 0, 1 are the two identities.  A FieldCtx fixes
(p, n, modulus) and implements the arithmetic; it is immutable, hashable and
safe to share between threads.

The modulus is a monic irreducible of degree n, represented low to high.
When none is supplied the deterministic default is the irreducible whose
coefficient vector (constant term first) has the smallest base-p integer
encoding, so a given (p, n) always names the same field presentation.

Small fields (q <= TABLE_LIMIT) get lazily built lookup tables; these speed
up scalar arithmetic and back the vectorized row operations in ``linalg``.
Splitting types are geometric invariants, so computing over a fixed finite
model such as GF(p^(2r)) loses nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DivisionByZero, InvalidField

MAX_Q = 1 << 64
TABLE_LIMIT = 512


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    f = 2
    while f * f <= m:
        if m % f == 0:
            return False
        f += 1
    return True


def _digits(k: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        k, d = divmod(k, p)
        out.append(d)
    return out


# Polynomials over F_p as little-endian coefficient lists.

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by monic b."""
    r = list(a)
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - db
            for i in range(db + 1):
                r[shift + i] = (r[shift + i] - lead * b[i]) % p
        r.pop()
    return _ptrim(r)


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    n = len(f) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for k in range(p**d):
            g = _digits(k, p, d) + [1]
            if not _pmod(f, g, p):
                return False
    return True


def find_irreducible(p: int, n: int) -> list[int]:
    """Deterministic modulus choice for GF(p^n).

    Returns the monic irreducible of degree n over F_p whose coefficient
    vector (constant term first) has the smallest base-p integer encoding.
    """
    if not is_prime(p):
        raise InvalidField(f"{p} is not prime")
    if n < 1:
        raise InvalidField("extension degree must be >= 1")
    if p**n >= MAX_Q:
        raise InvalidField("field does not fit in 64 bits")
    for k in range(p**n):
        cand = _digits(k, p, n) + [1]
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class FieldTables:
    """Numpy lookup tables over range(q); inv[0] is a 0 sentinel."""

    add: np.ndarray
    sub: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray


class FieldCtx:
    """GF(p^n) with a fixed monic irreducible modulus."""

    def __init__(self, p: int, n: int = 1, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise InvalidField(f"{p} is not prime")
        if n < 1:
            raise InvalidField("extension degree must be >= 1")
        q = p**n
        if q >= MAX_Q:
            raise InvalidField("field does not fit in 64 bits")
        if modulus is None:
            modulus = find_irreducible(p, n)
        else:
            modulus = [int(c) for c in modulus]
            if len(modulus) != n + 1 or modulus[-1] != 1:
                raise InvalidField("modulus must be monic of degree n")
            if any(not 0 <= c < p for c in modulus):
                raise InvalidField("modulus coefficients must lie in [0, p)")
            if not _is_irreducible(modulus, p):
                raise InvalidField("modulus is reducible")
        self.p = p
        self.n = n
        self.q = q
        self.modulus = tuple(modulus)
        self._mul_rows: Optional[list[list[int]]] = None
        self._inv_row: Optional[list[int]] = None
        self._np_tables: Optional[FieldTables] = None

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.n == other.n
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    # encoding

    def encode(self, digits: Sequence[int]) -> int:
        val = 0
        for d in reversed(digits):
            val = val * self.p + d % self.p
        return val

    def decode(self, a: int) -> list[int]:
        return _digits(a, self.p, self.n)

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not a canonical element of {self!r}")
        return a

    @property
    def minus_one(self) -> int:
        return self.p - 1 if self.p > 2 else 1

    def elements(self) -> range:
        return range(self.q)

    # arithmetic

    def add(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if self.n == 1:
            return (a + b) % self.p
        da, db = self.decode(a), self.decode(b)
        return self.encode([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        self._check(a)
        if self.n == 1:
            return (-a) % self.p
        return self.encode([(-x) % self.p for x in self.decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_raw(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a * b) % self.p
        prod = _pmul(self.decode(a), self.decode(b), self.p)
        return self.encode(_pmod(prod, self.modulus, self.p) + [0] * self.n)

    def mul(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        rows = self._mul_rows
        if rows is None and self.q <= TABLE_LIMIT:
            self._build_tables()
            rows = self._mul_rows
        if rows is not None:
            return rows[a][b]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        """Multiplicative inverse by extended Euclid on representatives."""
        self._check(a)
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self!r}")
        if self._inv_row is not None:
            return self._inv_row[a]
        if self.n == 1:
            old_r, r = a, self.p
            old_s, s = 1, 0
            while r:
                qt = old_r // r
                old_r, r = r, old_r - qt * r
                old_s, s = s, old_s - qt * s
            return old_s % self.p
        return self._poly_inv(a)

    def _poly_inv(self, a: int) -> int:
        p = self.p
        old_r, r = self.decode(a), list(self.modulus)
        _ptrim(old_r)
        old_s, s = [1], []
        while r:
            lead_inv = pow(r[-1], p - 2, p)
            qt = [0] * (len(old_r) - len(r) + 1) if len(old_r) >= len(r) else []
            rem = list(old_r)
            while rem and len(rem) >= len(r):
                c = (rem[-1] * lead_inv) % p
                shift = len(rem) - len(r)
                qt[shift] = c
                for i in range(len(r)):
                    rem[shift + i] = (rem[shift + i] - c * r[i]) % p
                _ptrim(rem)
            old_r, r = r, rem
            prod = _pmul(qt, s, p)
            new_s = [
                ((old_s[i] if i < len(old_s) else 0) - (prod[i] if i < len(prod) else 0)) % p
                for i in range(max(len(old_s), len(prod)))
            ]
            old_s, s = s, _ptrim(new_s)
        # old_r is the gcd, a nonzero constant since the modulus is irreducible
        c_inv = pow(old_r[0], p - 2, p)
        res = [(c_inv * x) % p for x in old_s]
        return self.encode(res + [0] * self.n)

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a: int, k: int) -> int:
        """k-fold Frobenius a -> a^(p^k); k reduces mod n (Galois closure)."""
        self._check(a)
        if k < 0:
            raise ValueError("Frobenius power must be >= 0")
        for _ in range(k % self.n):
            a = self.pow(a, self.p)
        return a

    # lookup tables

    def _build_tables(self) -> None:
        q = self.q
        rows = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        inv_row = [0] * q
        if self.n == 1:
            for a in range(1, q):
                inv_row[a] = pow(a, q - 2, q)
        else:
            for a in range(1, q):
                inv_row[a] = self._poly_inv(a)
        self._mul_rows = rows
        self._inv_row = inv_row
        p, n = self.p, self.n
        idx = np.arange(q, dtype=np.int64)
        if n == 1:
            add = (idx[:, None] + idx[None, :]) % p
            neg = (-idx) % p
        else:
            dig = np.zeros((q, n), dtype=np.int64)
            k = idx.copy()
            for i in range(n):
                dig[:, i] = k % p
                k //= p
            weights = p ** np.arange(n, dtype=np.int64)
            add = ((dig[:, None, :] + dig[None, :, :]) % p) @ weights
            neg = ((-dig) % p) @ weights
        mul = np.array(rows, dtype=np.int64)
        sub = add[:, neg]
        self._np_tables = FieldTables(
            add=add.astype(np.int64),
            sub=sub.astype(np.int64),
            mul=mul,
            neg=neg.astype(np.int64),
            inv=np.array(inv_row, dtype=np.int64),
        )

    @property
    def has_tables(self) -> bool:
        return self.q <= TABLE_LIMIT

    def tables(self) -> Optional[FieldTables]:
        if not self.has_tables:
            return None
        if self._np_tables is None:
            self._build_tables()
        return self._np_tables

    # serialization

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FieldCtx":
        try:
            p = int(data["p"])
            n = int(data.get("n", 1))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidField(f"bad field record: {exc}") from exc
        modulus = data.get("modulus")
        return cls(p, n, modulus)
