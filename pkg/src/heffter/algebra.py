"""Exact arithmetic in GF(p^e) with a canonical integer encoding.

Elements of GF(p^e) are encoded as integers in 0..q-1: the base-p digits of
the encoding are the coefficients (constant term first) of the residue
polynomial modulo a fixed monic irreducible modulus.  For e = 1 this is plain
arithmetic mod p and the encoding is the residue itself.

The modulus is chosen deterministically: monic polynomials of degree e are
scanned in ascending order of their integer encoding (constant term is the
least significant digit) and the first irreducible one wins.  Two runs, or
two machines, therefore agree bit for bit on every field element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit integers."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, {prime: exponent}."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power_split(q: int) -> tuple[int, int] | None:
    """Return (p, e) with q = p^e if q is a prime power, else None."""
    if q < 2:
        return None
    factors = factorize(q)
    if len(factors) != 1:
        return None
    p, e = next(iter(factors.items()))
    return p, e


# -- polynomial helpers over Z_p, coefficients as tuples, constant term first --

def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    # m must be monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _poly_trim(a)


def _poly_pow_mod(a: tuple[int, ...], k: int, m: tuple[int, ...], p: int) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    base = _poly_mod(a, m, p)
    while k:
        if k & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        k >>= 1
    return result


def _poly_gcd(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    while b:
        # reduce a mod b after making b monic
        inv_lead = pow(b[-1], p - 2, p)
        b_monic = tuple(c * inv_lead % p for c in b)
        a, b = b, _poly_mod(a, b_monic, p)
    return a


def _poly_sub(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _poly_trim(out)


def poly_is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over Z_p.

    f of degree e is irreducible iff x^(p^e) = x (mod f) and, for every prime
    divisor r of e, gcd(x^(p^(e/r)) - x, f) = 1.
    """
    e = len(coeffs) - 1
    if e < 1 or coeffs[-1] != 1:
        raise ValueError("expected a monic polynomial of positive degree")
    if e == 1:
        return True
    x = (0, 1)
    # Frobenius iterates x^(p^k) mod f
    frob = [x]
    for _ in range(e):
        frob.append(_poly_pow_mod(frob[-1], p, coeffs, p))
    if _poly_sub(frob[e], x, p):
        return False
    for r in factorize(e):
        g = _poly_gcd(coeffs, _poly_sub(frob[e // r], x, p), p)
        if len(g) - 1 != 0:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """GF(p^e) with elements encoded as integers 0..q-1.

    modulus: coefficients of the monic irreducible modulus, constant term
    first, length e+1.  For e = 1 the convention is the polynomial x, i.e.
    (0, 1).
    """

    p: int
    e: int
    q: int
    modulus: tuple[int, ...]

    def digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(x % self.p)
            x //= self.p
        return out

    def from_digits(self, digs: list[int] | tuple[int, ...]) -> int:
        x = 0
        for d in reversed(digs):
            x = x * self.p + d % self.p
        return x

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.q
        da, db = self.digits(a), self.digits(b)
        return self.from_digits([(u + v) % self.p for u, v in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.q
        return self.from_digits([(-d) % self.p for d in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.q
        pa = _poly_trim(self.digits(a))
        pb = _poly_trim(self.digits(b))
        prod = _poly_mod(_poly_mul(pa, pb, self.p), self.modulus, self.p)
        return self.from_digits(list(prod) + [0] * (self.e - len(prod)))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in a field")
        return self.pow(a, self.q - 2)

    def pow(self, a: int, k: int) -> int:
        if self.e == 1:
            return pow(a, k, self.q) if k >= 0 else pow(self.inv(a), -k, self.q)
        if k < 0:
            return self.pow(self.inv(a), -k)
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, x: int) -> int:
        """Multiplicative order of x, computed via the divisors of q-1."""
        if x == 0:
            raise ValueError("0 has no multiplicative order")
        d = self.q - 1
        for prime in factorize(self.q - 1):
            while d % prime == 0 and self.pow(x, d // prime) == 1:
                d //= prime
        return d

    def element_of_order(self, d: int) -> int:
        """Smallest-encoded element of multiplicative order exactly d."""
        if d < 1 or (self.q - 1) % d != 0:
            raise ValueError(f"no elements of order {d}: it does not divide {self.q - 1}")
        for x in range(1, self.q):
            if self.element_order(x) == d:
                return x
        raise AssertionError("unit group of a finite field is cyclic")

    def header(self) -> str:
        """One-line field description used in all file formats."""
        poly = ",".join(str(c) for c in self.modulus)
        return f"field p={self.p} e={self.e} poly={poly}"


def make_field(p: int, e: int) -> Field:
    """Build GF(p^e) with the canonical (first in ascending scan) modulus."""
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")
    if e < 1:
        raise ValueError(f"exponent must be positive: {e}")
    q = p**e
    if q > 2**62:
        raise ValueError(f"field order overflows a machine word: {p}^{e}")
    return _make_field_cached(p, e)


@lru_cache(maxsize=None)
def _make_field_cached(p: int, e: int) -> Field:
    q = p**e
    if e == 1:
        return Field(p=p, e=1, q=q, modulus=(0, 1))
    for k in range(q):
        coeffs = []
        kk = k
        for _ in range(e):
            coeffs.append(kk % p)
            kk //= p
        coeffs.append(1)
        if poly_is_irreducible(tuple(coeffs), p):
            return Field(p=p, e=e, q=q, modulus=tuple(coeffs))
    raise AssertionError("an irreducible polynomial of every degree exists")


def parse_header(line: str) -> Field:
    """Parse the `field p=.. e=.. poly=..` header line back into a Field."""
    parts = line.split()
    if len(parts) != 4 or parts[0] != "field":
        raise ValueError(f"malformed field header: {line!r}")
    kv = dict(part.split("=", 1) for part in parts[1:])
    p, e = int(kv["p"]), int(kv["e"])
    modulus = tuple(int(c) for c in kv["poly"].split(","))
    field = make_field(p, e)
    if field.modulus != modulus:
        raise ValueError(f"non-canonical modulus in header: {line!r}")
    return field
