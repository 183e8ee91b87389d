"""Finite fields F_q with q = p^n <= 2^16.

Elements are encoded as ints in [0, q): the base-p digits of the encoding
are the coefficients (ascending) of the residue polynomial modulo a fixed
monic irreducible of degree n.  The modulus is the irreducible whose
integer encoding (constant digit least significant, x^n implicit) is
smallest; this makes field construction reproducible.

For prime fields (n = 1) every operation is plain modular arithmetic.
"""

from __future__ import annotations

MAX_Q = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _decode(a: int, p: int, n: int) -> list:
    digits = []
    for _ in range(n):
        digits.append(a % p)
        a //= p
    return digits


def _encode(digits, p: int) -> int:
    a = 0
    for d in reversed(digits):
        a = a * p + d
    return a


class FqSpec:
    """A finite field F_{p^n} with explicit modulus polynomial."""

    def __init__(self, p: int, n: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if n < 1 or p ** n > MAX_Q:
            raise ValueError(f"field size {p}^{n} out of supported range")
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = self._find_modulus() if n > 1 else (0, 1)
        self._sqrt_table = None

    def _find_modulus(self):
        """Smallest monic irreducible of degree n over F_p (by encoding)."""
        p, n = self.p, self.n
        for k in range(p ** n):
            coeffs = _decode(k, p, n) + [1]  # monic degree n
            if _poly_is_irreducible(coeffs, p):
                return tuple(coeffs)
        raise AssertionError("no irreducible polynomial found")

    # -- arithmetic on encoded elements --------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        p = self.p
        return _encode([(x + y) % p for x, y in zip(_decode(a, p, self.n),
                                                    _decode(b, p, self.n))], p)

    def sub(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a - b) % self.p
        p = self.p
        return _encode([(x - y) % p for x, y in zip(_decode(a, p, self.n),
                                                    _decode(b, p, self.n))], p)

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        p, n = self.p, self.n
        da = _decode(a, p, n)
        db = _decode(b, p, n)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo the monic modulus
        m = self.modulus
        for i in range(len(prod) - 1, n - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(n):
                    prod[i - n + j] = (prod[i - n + j] - c * m[j]) % p
        return _encode(prod[:n], p)

    def pow(self, a: int, e: int) -> int:
        if self.n == 1:
            return pow(a, e, self.p) if e >= 0 else pow(self.inv(a), -e, self.p)
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def from_int(self, c: int) -> int:
        """Image of an integer under Z -> F_p < F_q."""
        return c % self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self):
        return range(self.q)

    def trace(self, a: int) -> int:
        """Trace to the prime field F_p, returned as an int in [0, p)."""
        acc = a
        x = a
        for _ in range(self.n - 1):
            x = self.pow(x, self.p)
            acc = self.add(acc, x)
        assert acc < self.p, "trace landed outside the prime field"
        return acc

    def is_square(self, a: int) -> bool:
        """Whether a is a square in F_q (0 counts as a square)."""
        if a == 0:
            return True
        if self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == self.one

    def chi(self, a: int) -> int:
        """Quadratic character: 0 on 0, +1 on squares, -1 otherwise (odd q)."""
        assert self.p != 2
        if a == 0:
            return 0
        return 1 if self.is_square(a) else -1

    def sqrt_elem(self, a: int):
        """A square root of a in F_q, or None (table-based; q <= 2^16)."""
        if self._sqrt_table is None:
            table = {}
            for x in range(self.q):
                table.setdefault(self.mul(x, x), x)
            self._sqrt_table = table
        return self._sqrt_table.get(a)

    def __repr__(self):
        if self.n == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.n}(modulus={list(self.modulus)})"

    def __eq__(self, other):
        return (isinstance(other, FqSpec) and self.p == other.p
                and self.n == other.n and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))


def fq_make(p: int, n: int = 1) -> FqSpec:
    return FqSpec(p, n)


# -- univariate helpers over F_p used for modulus search ----------------------


def _poly_mod(a: list, m: list, p: int) -> list:
    a = a[:]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            inv = pow(m[dm], p - 2, p)
            f = (c * inv) % p
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - f * m[j]) % p
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: list, b: list, m: list, p: int) -> list:
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_mod(prod, m, p)


def _poly_powmod_xq(e: int, m: list, p: int) -> list:
    """x^e mod m over F_p."""
    result = [1]
    base = [0, 1] if len(m) > 2 else _poly_mod([0, 1], m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _poly_gcd(a: list, b: list, p: int) -> list:
    a, b = a[:], b[:]
    while b != [0]:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_is_irreducible(f: list, p: int) -> bool:
    """Rabin test: f monic of degree n is irreducible over F_p iff
    x^(p^n) = x mod f and gcd(x^(p^(n/l)) - x, f) = 1 for primes l | n."""
    n = len(f) - 1
    if n == 1:
        return True
    if f[0] == 0:  # divisible by x
        return False
    xq = _poly_powmod_xq(p ** n, f, p)
    x = _poly_mod([0, 1], f, p)
    if xq != x:
        return False
    for l in _prime_divisors(n):
        d = n // l
        xd = _poly_powmod_xq(p ** d, f, p)
        g = [(a - b) % p for a, b in
             zip(xd + [0] * (len(x) - len(xd)), x + [0] * (len(xd) - len(x)))]
        while len(g) > 1 and g[-1] == 0:
            g.pop()
        if g == [0]:
            return False
        if len(_poly_gcd(f, g, p)) > 1:
            return False
    return True


def _prime_divisors(n: int):
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
