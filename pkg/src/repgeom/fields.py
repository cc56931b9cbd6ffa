"""Exact ground fields: rationals, prime fields, and finite extensions.

All arithmetic is exact; no floating point anywhere.  Field elements are
plain hashable Python values (Fraction, int residue, or coefficient tuple)
and every field object exposes the same small arithmetic protocol.
"""
from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Rationals:
    """The field of rational numbers; elements are Fractions in lowest terms."""

    kind = "Q"
    is_finite = False
    size = None

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a) -> bool:
        return a == 0

    def format(self, a) -> str:
        return f"{a.numerator}/{a.denominator}"

    def parse(self, s: str) -> Fraction:
        return Fraction(s)

    def sample(self, rng):
        return Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The prime field of p elements; elements are residues 0 <= a < p."""

    kind = "Fp"
    is_finite = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.size = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def format(self, a) -> str:
        return str(a % self.p)

    def parse(self, s: str) -> int:
        return int(s) % self.p

    def sample(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def _poly_mod(coeffs, p):
    return tuple(c % p for c in coeffs)


def _poly_trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def _poly_divmod(a, b, p):
    a = list(a)
    b = _poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(_poly_trim(a)) >= len(b):
        a = list(_poly_trim(a))
        shift = len(a) - len(b)
        factor = (a[-1] * inv_lead) % p
        q[shift] = factor
        for i, c in enumerate(b):
            a[i + shift] = (a[i + shift] - factor * c) % p
    return _poly_trim(q), _poly_trim(a)


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    aa = list(a) + [0] * (n - len(a))
    bb = list(b) + [0] * (n - len(b))
    return _poly_trim(tuple((x - y) % p for x, y in zip(aa, bb)))


def _poly_gcd_ext(a, b, p):
    # returns (g, u, v) with u*a + v*b = g, g monic
    r0, r1 = _poly_trim(a), _poly_trim(b)
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1, p), p)
    if r0:
        c = pow(r0[-1], p - 2, p)
        r0 = _poly_trim(tuple((x * c) % p for x in r0))
        s0 = _poly_trim(tuple((x * c) % p for x in s0))
        t0 = _poly_trim(tuple((x * c) % p for x in t0))
    return r0, s0, t0


class ExtensionField:
    """GF(p^k) presented as F_p[x] modulo a monic irreducible polynomial.

    Elements are coefficient tuples of length < k (low degree first).
    Internal use only: these fields never appear in file formats.
    """

    kind = "Fq"
    is_finite = True

    def __init__(self, p: int, modulus):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        mod = _poly_mod(modulus, p)
        mod = _poly_trim(mod)
        if len(mod) < 3:
            raise FieldError("extension modulus must have degree >= 2")
        if mod[-1] != 1:
            raise FieldError("extension modulus must be monic")
        if not _is_irreducible(mod, p):
            raise FieldError("extension modulus is reducible")
        self.p = p
        self.modulus = mod
        self.degree = len(mod) - 1
        self.size = p ** self.degree
        self.zero = ()
        self.one = (1,)

    def _reduce(self, coeffs):
        _, r = _poly_divmod(_poly_mod(coeffs, self.p), self.modulus, self.p)
        return r

    def from_int(self, n: int):
        return _poly_trim((n % self.p,))

    def embed(self, a: int):
        return _poly_trim((a % self.p,))

    def generator(self):
        return (0, 1)

    def add(self, a, b):
        n = max(len(a), len(b))
        aa = list(a) + [0] * (n - len(a))
        bb = list(b) + [0] * (n - len(b))
        return _poly_trim(tuple((x + y) % self.p for x, y in zip(aa, bb)))

    def sub(self, a, b):
        n = max(len(a), len(b))
        aa = list(a) + [0] * (n - len(a))
        bb = list(b) + [0] * (n - len(b))
        return _poly_trim(tuple((x - y) % self.p for x, y in zip(aa, bb)))

    def mul(self, a, b):
        return self._reduce(_poly_mul(a, b, self.p))

    def neg(self, a):
        return _poly_trim(tuple((-x) % self.p for x in a))

    def inv(self, a):
        a = _poly_trim(a)
        if not a:
            raise ZeroDivisionError("inverse of zero")
        g, _, v = _poly_gcd_ext(self.modulus, a, self.p)
        if g != (1,):
            raise FieldError("modulus not irreducible")
        return self._reduce(v)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return _poly_trim(a) == ()

    def format(self, a) -> str:
        return "+".join(f"{c}x^{i}" for i, c in enumerate(a)) or "0"

    def parse(self, s: str):
        raise FieldError("extension field elements are internal only")

    def sample(self, rng):
        return _poly_trim(tuple(rng.randrange(self.p) for _ in range(self.degree)))

    def elements(self):
        def rec(i):
            if i == 0:
                yield ()
                return
            for tail in rec(i - 1):
                for c in range(self.p):
                    yield (c,) + tail
        for tup in rec(self.degree):
            yield _poly_trim(tup)

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("Fq", self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"


def _is_irreducible(mod, p) -> bool:
    # x^(p^d) == x mod f exactly for elements of subfields; f of degree k is
    # irreducible iff x^(p^k) == x and gcd(x^(p^(k/l)) - x, f) = 1 for primes l | k
    k = len(mod) - 1
    x = (0, 1)

    def powmod(poly, e):
        result = (1,)
        base = poly
        while e:
            if e & 1:
                result = _poly_divmod(_poly_mul(result, base, p), mod, p)[1]
            base = _poly_divmod(_poly_mul(base, base, p), mod, p)[1]
            e >>= 1
        return result

    if powmod(x, p ** k) != _poly_divmod(x, mod, p)[1]:
        return False
    for l in range(2, k + 1):
        if k % l == 0 and _is_prime(l):
            xq = powmod(x, p ** (k // l))
            diff = _poly_sub(xq, x, p)
            g, _, _ = _poly_gcd_ext(mod, diff, p)
            if len(g) > 1:
                return False
    return True


def field_from_spec(spec: dict):
    """Build a field from its JSON description {"kind": "Q"} or {"kind": "Fp", "p": p}."""
    kind = spec.get("kind")
    if kind == "Q":
        return Rationals()
    if kind == "Fp":
        return PrimeField(int(spec["p"]))
    raise FieldError(f"unknown field kind {kind!r}")


def field_to_spec(field) -> dict:
    if isinstance(field, Rationals):
        return {"kind": "Q"}
    if isinstance(field, PrimeField):
        return {"kind": "Fp", "p": field.p}
    raise FieldError("extension fields are internal and cannot be serialized")
