"""Exact arithmetic over F_p and the classical character sums.

A PrimeField precomputes, once per prime p = 1 (mod 4): a multiplicative
generator g, the discrete-log table j = dlog[x] with g^j = x, the Legendre
symbol table, and inverses.  Every character evaluation downstream is then a
table lookup: the multiplicative character with index a sends g^j to
exp(2*pi*i*a*j/(p-1)), with the convention psi(0) = 0 for every character
(including the trivial one).

Character indices are plain integers mod p-1: index 0 is the trivial
character, index (p-1)/2 is the quadratic (Legendre) character.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import GuardError

CharacterIndex = int


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True, eq=False)
class PrimeField:
    """Precomputed arithmetic context for F_p with p prime, p = 1 (mod 4)."""

    p: int
    generator: int
    powers: np.ndarray    # powers[j] = g^j mod p, j = 0 .. p-2
    dlog: np.ndarray      # dlog[powers[j]] = j; dlog[0] = -1 (unused)
    legendre: np.ndarray  # int8 in {-1, 0, +1}; legendre[0] = 0
    inverse: np.ndarray   # inverse[x] = x^-1 mod p; inverse[0] = 0 (unused)

    def __post_init__(self):
        for arr in (self.powers, self.dlog, self.legendre, self.inverse):
            arr.setflags(write=False)

    @property
    def legendre_char_index(self) -> CharacterIndex:
        return (self.p - 1) // 2

    def __repr__(self):
        return f"PrimeField(p={self.p}, g={self.generator})"


def make_field(p: int) -> PrimeField:
    """Build the full arithmetic context for F_p.

    Rejects p that is not prime, not = 1 (mod 4), or below 5.  The generator
    is the smallest one (results are isomorphism-invariant in this choice).
    """
    if not isinstance(p, (int, np.integer)):
        raise ValueError(f"p must be an integer, got {p!r}")
    p = int(p)
    if p < 5 or not _is_prime(p):
        raise ValueError(f"p = {p} is not a prime >= 5")
    if p % 4 != 1:
        raise ValueError(f"p = {p} is not congruent to 1 mod 4")

    factors = _prime_factors(p - 1)
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in factors):
        g += 1

    powers = np.empty(p - 1, dtype=np.int64)
    x = 1
    for j in range(p - 1):
        powers[j] = x
        x = (x * g) % p
    dlog = np.full(p, -1, dtype=np.int64)
    dlog[powers] = np.arange(p - 1)

    legendre = np.zeros(p, dtype=np.int8)
    legendre[1:] = np.where(dlog[1:] % 2 == 0, 1, -1)

    inverse = np.zeros(p, dtype=np.int64)
    inverse[1:] = powers[(-dlog[1:]) % (p - 1)]

    return PrimeField(p=p, generator=g, powers=powers, dlog=dlog,
                      legendre=legendre, inverse=inverse)


@lru_cache(maxsize=64)
def _additive_char_table(p: int) -> np.ndarray:
    """e_p(x) = exp(2*pi*i*x/p) for x = 0 .. p-1."""
    tab = np.exp(2j * np.pi * np.arange(p) / p)
    tab.setflags(write=False)
    return tab


def e_p(field: PrimeField, x: int) -> complex:
    return complex(_additive_char_table(field.p)[x % field.p])


def char_eval(field: PrimeField, a: CharacterIndex, x: int) -> complex:
    """psi_a(x); zero at x = 0, exact +-1 for the quadratic character."""
    p = field.p
    x %= p
    if x == 0:
        return 0j
    a %= p - 1
    if a == 0:
        return 1 + 0j
    if a == field.legendre_char_index:
        return complex(int(field.legendre[x]))
    return cmath.exp(2j * np.pi * a * int(field.dlog[x]) / (p - 1))


def char_table(field: PrimeField, a: CharacterIndex) -> np.ndarray:
    """Values psi_a(x) for all x in F_p as a complex vector (psi_a(0) = 0)."""
    p = field.p
    a %= p - 1
    out = np.zeros(p, dtype=np.complex128)
    if a == 0:
        out[1:] = 1.0
    elif a == field.legendre_char_index:
        out[1:] = field.legendre[1:]
    else:
        out[1:] = np.exp(2j * np.pi * a * field.dlog[1:] / (p - 1))
    return out


def gauss_sum(field: PrimeField, a: CharacterIndex) -> complex:
    """G(psi_a) = sum_x psi_a(x) e_p(x)."""
    return complex(np.sum(char_table(field, a) * _additive_char_table(field.p)))


def gauss_angle(field: PrimeField, a: CharacterIndex) -> complex:
    """g(psi) = G(psi)/sqrt(p), defined only for non-trivial psi."""
    if a % (field.p - 1) == 0:
        raise ValueError("gauss_angle is undefined for the trivial character")
    return gauss_sum(field, a) / math.sqrt(field.p)


def jacobi_sum(field: PrimeField, a: CharacterIndex, b: CharacterIndex) -> complex:
    """J(psi_a, psi_b) = sum_x psi_a(x) psi_b(1-x), evaluated directly."""
    p = field.p
    ta = char_table(field, a)
    tb = char_table(field, b)[(1 - np.arange(p)) % p]
    return complex(np.sum(ta * tb))


def jacobi_via_gauss(field: PrimeField, a: CharacterIndex, b: CharacterIndex) -> complex:
    """J(psi_a, psi_b) from the Gauss-sum case analysis.

    Under the everywhere-zero convention psi(0) = 0 (trivial character
    included): p-2 when both characters are trivial; -1 when exactly one is;
    -psi_a(-1) when they are conjugate and non-trivial; G(a)G(b)/G(a+b)
    otherwise.
    """
    n = field.p - 1
    a %= n
    b %= n
    if a == 0 and b == 0:
        return complex(field.p - 2)
    if a == 0 or b == 0:
        return complex(-1)
    if (a + b) % n == 0:
        return -char_eval(field, a, field.p - 1)
    return gauss_sum(field, a) * gauss_sum(field, b) / gauss_sum(field, (a + b) % n)


_KLOOSTERMAN_CACHE: dict[tuple[int, int], np.ndarray] = {}


def kloosterman_table(field: PrimeField, k: int) -> np.ndarray:
    """K_k(a) for all a in F_p as one vector (entry 0 is unused, set to 0).

    Built by the recursive convolution K_k(a) = sum_{x != 0} e_p(x)
    K_{k-1}(a x^-1), O(p^2) per level over all a jointly.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    p = field.p
    key = (p, k)
    if key in _KLOOSTERMAN_CACHE:
        return _KLOOSTERMAN_CACHE[key]
    e_tab = _additive_char_table(p)
    cur = e_tab.copy()
    cur[0] = 0.0
    idx = np.arange(p, dtype=np.int64)
    for _ in range(k - 1):
        nxt = np.zeros(p, dtype=np.complex128)
        for x in range(1, p):
            nxt += e_tab[x] * cur[(int(field.inverse[x]) * idx) % p]
        nxt[0] = 0.0
        cur = nxt
    cur.setflags(write=False)
    _KLOOSTERMAN_CACHE[key] = cur
    return cur


def kloosterman(field: PrimeField, k: int, a: int) -> complex:
    """K_k(a) = sum over x_1...x_k = a of e_p(x_1 + ... + x_k), a != 0."""
    a %= field.p
    if a == 0:
        raise ValueError("Kloosterman sums require a != 0")
    return complex(kloosterman_table(field, k)[a])


def weil_sum(field: PrimeField, roots) -> float:
    """sum_x chi(q(x)) for the monic q with the given root list.

    Repeated entries give higher multiplicities.  When q is not a constant
    times a square, the result obeys |sum| <= (deg q - 1) sqrt(p).
    """
    p = field.p
    x = np.arange(p, dtype=np.int64)
    vals = np.ones(p, dtype=np.int64)
    for r in roots:
        vals = (vals * ((x - int(r)) % p)) % p
    return float(field.legendre[vals].sum())
