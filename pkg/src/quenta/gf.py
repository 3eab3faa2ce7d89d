"""Exact arithmetic in finite fields GF(p^m), m up to 12, p^m up to 2^20.

Elements are plain ints in [0, q).  The base-p digits of an element are the
coefficients of its polynomial representation over GF(p), constant term in
the least significant digit.  Each field owns log/antilog tables built from
a primitive modulus, so multiplication, inversion and powering are table
lookups; addition is XOR for p = 2 and digit-wise otherwise.

The modulus for (p, m) is chosen deterministically: the first monic degree-m
polynomial, scanning coefficient vectors from the smallest integer encoding
upward, that is irreducible over GF(p) and whose residue class of x
generates the full multiplicative group.  A process-wide override registry
lets a config file substitute a different (validated) modulus per (p, m).
"""

from __future__ import annotations

import math
from functools import lru_cache

MAX_ORDER = 1 << 20
# Degree 12 admits the splitting fields GF(2^10) and GF(2^12) that the
# length <= 15 binary duality sweeps require; the order cap still rules.
MAX_DEGREE = 12

# Flat q*q addition tables are only built for small fields; larger extension
# fields fall back to digit-wise addition.
_ADD_TABLE_LIMIT = 512

_modulus_overrides: dict[tuple[int, int], tuple[int, ...]] = {}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
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


# ----------------------------------------------------------------------
# Raw polynomial arithmetic over GF(p), used only for modulus selection.
# Polynomials are coefficient lists, lowest degree first.
# ----------------------------------------------------------------------

def _pdeg(f):
    d = len(f) - 1
    while d >= 0 and f[d] == 0:
        d -= 1
    return d


def _pmod(f, g, p):
    f = list(f)
    dg = _pdeg(g)
    inv_lead = pow(g[dg], -1, p)
    for i in range(_pdeg(f), dg - 1, -1):
        if f[i] == 0:
            continue
        factor = (f[i] * inv_lead) % p
        for j in range(dg + 1):
            f[i - dg + j] = (f[i - dg + j] - factor * g[j]) % p
    return f[:dg] if dg > 0 else [0]


def _pmulmod(a, b, g, p):
    out = [0] * (len(a) + len(b))
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, g, p)


def _ppowmod(a, e, g, p):
    result = [1]
    base = _pmod(a, g, p)
    while e > 0:
        if e & 1:
            result = _pmulmod(result, base, g, p)
        base = _pmulmod(base, base, g, p)
        e >>= 1
    return result


def _is_irreducible(coeffs, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = _pdeg(coeffs)
    if m <= 0:
        return False
    if m == 1:
        return True
    if coeffs[0] == 0:  # divisible by x
        return False
    for d in range(1, m // 2 + 1):
        for enc in range(p ** d):
            div = _digits(enc, p, d) + [1]
            if _pdeg(_pmod(coeffs, div, p)) < 0:
                return False
    return True


def _is_primitive(coeffs, p: int) -> bool:
    """True if the residue class of x has multiplicative order p^deg - 1."""
    m = _pdeg(coeffs)
    order = p ** m - 1
    x = [0, 1]
    if _pdeg(_ppowmod(x, order, coeffs, p)) != 0 or _ppowmod(x, order, coeffs, p)[0] != 1:
        return False
    for ell in _prime_factors(order):
        r = _ppowmod(x, order // ell, coeffs, p)
        if _pdeg(r) == 0 and r[0] == 1:
            return False
    return True


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        value, rem = divmod(value, p)
        out.append(rem)
    return out


def _find_modulus(p: int, m: int) -> tuple[int, ...]:
    for enc in range(p ** m):
        coeffs = _digits(enc, p, m) + [1]
        if _is_irreducible(coeffs, p) and _is_primitive(coeffs, p):
            return tuple(coeffs)
    raise ValueError(f"no primitive polynomial of degree {m} over GF({p})")


def set_modulus_override(p: int, m: int, coeffs: tuple[int, ...] | None) -> None:
    """Install (or clear, with None) a modulus override for (p, m).

    The override is validated when the field is first built, not here.
    """
    if coeffs is None:
        _modulus_overrides.pop((p, m), None)
    else:
        _modulus_overrides[(p, m)] = tuple(coeffs)
    _build_field.cache_clear()


class GF:
    """A finite field GF(p^m) with table-backed arithmetic on int elements."""

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = tuple(modulus)
        if len(self.modulus) != m + 1 or self.modulus[m] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if any(not 0 <= c < p for c in self.modulus):
            raise ValueError("modulus coefficients must lie in [0, p)")
        if not _is_irreducible(list(self.modulus), p):
            raise ValueError(f"modulus {self.modulus} is reducible over GF({p})")
        if not _is_primitive(list(self.modulus), p):
            raise ValueError(f"modulus {self.modulus} is not primitive")
        self._build_tables()
        self._np_add = None
        self._np_mul = None

    @property
    def key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    # ------------------------------------------------------------------
    # table construction
    # ------------------------------------------------------------------

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        # reduction of x^m expressed as an element value
        red = 0
        for i in range(m):
            red += ((-self.modulus[i]) % p) * p ** i
        self._exp = exp = [0] * (2 * q)
        self._log = log = [0] * q
        val = 1
        for i in range(q - 1):
            exp[i] = val
            log[val] = i
            # multiply by alpha = x: shift digits, reduce once
            top, low = divmod(val, p ** (m - 1))
            val = low * p
            if top:
                val = self._digit_add(val, self._digit_scale(red, top))
        if val != 1:
            raise ValueError(f"modulus {self.modulus} residue order is not {q - 1}")
        for i in range(q - 1, 2 * q):
            exp[i] = exp[i - (q - 1)]
        self.alpha = exp[1] if q > 2 else 1

        if p == 2:
            self.add = lambda a, b: a ^ b
            self.sub = self.add
            self.neg = lambda a: a
        elif m == 1:
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: (-a) % p
        elif q <= _ADD_TABLE_LIMIT:
            tab = [0] * (q * q)
            for a in range(q):
                for b in range(a, q):
                    s = self._digit_add(a, b)
                    tab[a * q + b] = s
                    tab[b * q + a] = s
            self.add = lambda a, b: tab[a * q + b]
            negs = [self._digit_scale(a, p - 1) for a in range(q)]
            self.neg = lambda a: negs[a]
            self.sub = lambda a, b: tab[a * q + negs[b]]
        else:
            self.add = self._digit_add
            self.neg = lambda a: self._digit_scale(a, p - 1)
            self.sub = lambda a, b: self._digit_add(a, self.neg(b))

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        mult = 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * mult
            mult *= p
        return out

    def _digit_scale(self, a: int, s: int) -> int:
        p = self.p
        out = 0
        mult = 1
        while a:
            a, da = divmod(a, p)
            out += ((da * s) % p) * mult
            mult *= p
        return out

    # ------------------------------------------------------------------
    # element operations
    # ------------------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self._exp[(self.q - 1) - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a**e, exponent reduced mod q-1 for nonzero a; 0**0 == 1."""
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int, q0: int) -> int:
        """a**q0 for q0 a subfield size: q0 = p^s with s dividing m."""
        s = self._subfield_degree(q0)
        if s is None:
            raise ValueError(f"{q0} is not a subfield size of {self!r}")
        return self.pow(a, q0)

    def _subfield_degree(self, q0: int):
        if q0 < 2:
            return None
        for s in range(1, self.m + 1):
            if self.p ** s == q0:
                return s if self.m % s == 0 else None
        return None

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        return n // math.gcd(n, self._log[a])

    def nth_root_of_unity(self, n: int) -> int:
        """beta = alpha^((q-1)/n); has multiplicative order exactly n."""
        if n < 1 or (self.q - 1) % n != 0:
            raise ValueError(f"{n} does not divide q - 1 = {self.q - 1}")
        return self.pow(self.alpha, (self.q - 1) // n)

    def elements(self):
        return range(self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of an element, constant term first."""
        return tuple(_digits(a, self.p, self.m))

    def from_coeffs(self, coeffs) -> int:
        if len(coeffs) > self.m:
            raise ValueError("too many coefficients")
        val = 0
        for i, c in enumerate(coeffs):
            if not 0 <= c < self.p:
                raise ValueError(f"coefficient {c} outside [0, {self.p})")
            val += c * self.p ** i
        return val

    # ------------------------------------------------------------------
    # numpy tables for vectorized codeword enumeration
    # ------------------------------------------------------------------

    def np_tables(self):
        """(add_table, mul_table) as q x q numpy arrays; q <= 512 only."""
        if self.q > _ADD_TABLE_LIMIT:
            raise ValueError(f"field too large for dense op tables: q = {self.q}")
        if self._np_add is None:
            import numpy as np

            q = self.q
            add = np.zeros((q, q), dtype=np.int32)
            mul = np.zeros((q, q), dtype=np.int32)
            for a in range(q):
                for b in range(q):
                    add[a, b] = self.add(a, b)
                    mul[a, b] = self.mul(a, b)
            self._np_add = add
            self._np_mul = mul
        return self._np_add, self._np_mul


@lru_cache(maxsize=None)
def _build_field(p: int, m: int) -> GF:
    modulus = _modulus_overrides.get((p, m)) or _find_modulus(p, m)
    return GF(p, m, modulus)


def field_create(p: int, m: int, modulus: tuple[int, ...] | None = None) -> GF:
    """Build GF(p^m) with the deterministic (or overridden) primitive modulus."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if not 1 <= m <= MAX_DEGREE:
        raise ValueError(f"extension degree m = {m} outside [1, {MAX_DEGREE}]")
    if p ** m > MAX_ORDER:
        raise ValueError(f"field size {p}^{m} exceeds cap 2^20")
    if modulus is not None:
        return GF(p, m, tuple(modulus))
    return _build_field(p, m)


def field_from_order(q: int) -> GF:
    """GF(q) for a prime power q."""
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            t = q
            while t % p == 0:
                t //= p
                m += 1
            if t != 1:
                raise ValueError(f"{q} is not a prime power")
            return field_create(p, m)
    raise ValueError(f"{q} is not a prime power")


class Embedding:
    """The subfield embedding GF(q0) -> GF(q0^s) and its partial inverse.

    The image of the subfield generator is the first root of the subfield
    modulus among powers of the extension generator, so the map is a ring
    homomorphism and deterministic.
    """

    def __init__(self, sub: GF, ext: GF):
        if sub.p != ext.p or ext.m % sub.m != 0:
            raise ValueError(f"{sub!r} is not a subfield of {ext!r}")
        self.sub = sub
        self.ext = ext
        if sub.m == 1:
            # prime subfield: constants keep their encoding
            self.up_table = list(range(sub.q))
        else:
            gamma = self._find_generator_image()
            powers = [1]
            for _ in range(sub.m - 1):
                powers.append(ext.mul(powers[-1], gamma))
            table = []
            for a in range(sub.q):
                acc = 0
                for c, gpow in zip(sub.coeffs(a), powers):
                    acc = ext.add(acc, ext.mul(c, gpow))
                table.append(acc)
            self.up_table = table
        self._down = {v: a for a, v in enumerate(self.up_table)}
        if len(self._down) != sub.q:
            raise ValueError("embedding is not injective (bad modulus?)")

    def _find_generator_image(self):
        sub, ext = self.sub, self.ext
        step = (ext.q - 1) // (sub.q - 1)
        for j in range(1, sub.q - 1):
            gamma = ext.pow(ext.alpha, step * j)
            acc = 0
            for c in reversed(sub.modulus):
                acc = ext.add(ext.mul(acc, gamma), c)
            if acc == 0:
                return gamma
        raise ValueError(f"no root of {sub.modulus} found in {ext!r}")

    def up(self, a: int) -> int:
        return self.up_table[a]

    def down(self, x: int) -> int:
        try:
            return self._down[x]
        except KeyError:
            raise ValueError(f"element {x} of {self.ext!r} is not in the subfield image") from None


@lru_cache(maxsize=None)
def embedding(sub: GF, ext: GF) -> Embedding:
    return Embedding(sub, ext)


def splitting_field(q: int, n: int) -> GF:
    """The smallest extension of GF(q) containing primitive n-th roots of unity."""
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) != 1 for n = {n}, q = {q}")
    base = field_from_order(q)
    s = 1
    acc = q % n
    while acc != 1 % n:
        acc = (acc * q) % n
        s += 1
        if s > 64:
            raise ValueError("no multiplicative order found")
    return field_create(base.p, base.m * s)
