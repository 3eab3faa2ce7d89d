"""Dense univariate polynomials over a finite field.

Coefficient vectors are stored lowest degree first with no trailing zeros,
so the zero polynomial has an empty vector and ``deg`` is -1.  The bridge
between defining sets and polynomial ideals lives here: a coset-closed
subset Z of Z_n becomes the generator g(x) = prod_{i in Z}(x - beta^i),
with beta the fixed n-th root of unity of the splitting field.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .gf import GF, embedding


@dataclass(frozen=True)
class Poly:
    """Polynomial over ``field``; coeffs lowest degree first, canonical."""

    field: GF
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coefficient vector has a trailing zero")
        for c in self.coeffs:
            if not 0 <= c < self.field.q:
                raise ValueError(f"coefficient {c} outside field of size {self.field.q}")

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "Poly(" + " + ".join(terms) + ")"


def poly(field: GF, coeffs) -> Poly:
    """Build a Poly, trimming trailing zeros to canonical form."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return Poly(field, tuple(cs))


def zero(field: GF) -> Poly:
    return Poly(field, ())


def one(field: GF) -> Poly:
    return Poly(field, (1,))


def x_pow(field: GF, e: int, scale: int = 1) -> Poly:
    """scale * x^e."""
    if scale == 0:
        return zero(field)
    return Poly(field, (0,) * e + (scale,))


def _check_same_field(a: Poly, b: Poly):
    if a.field != b.field:
        raise ValueError(f"field mismatch: {a.field!r} vs {b.field!r}")


def add(a: Poly, b: Poly) -> Poly:
    _check_same_field(a, b)
    F = a.field
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return poly(F, [F.add(x, y) for x, y in zip(ca, cb)])


def sub(a: Poly, b: Poly) -> Poly:
    _check_same_field(a, b)
    F = a.field
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return poly(F, [F.sub(x, y) for x, y in zip(ca, cb)])


def mul(a: Poly, b: Poly) -> Poly:
    _check_same_field(a, b)
    if a.is_zero() or b.is_zero():
        return zero(a.field)
    F = a.field
    out = [0] * (a.deg + b.deg + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            if bj:
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return poly(F, out)


def scale(a: Poly, s: int) -> Poly:
    F = a.field
    return poly(F, [F.mul(c, s) for c in a.coeffs])


def divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: a = q*b + r with deg r < deg b."""
    _check_same_field(a, b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    F = a.field
    rem = list(a.coeffs)
    db = b.deg
    quot = [0] * max(a.deg - db + 1, 0)
    inv_lead = F.inv(b.coeffs[-1])
    for i in range(a.deg - db, -1, -1):
        c = rem[i + db]
        if c == 0:
            continue
        factor = F.mul(c, inv_lead)
        quot[i] = factor
        for j, bj in enumerate(b.coeffs):
            if bj:
                rem[i + j] = F.sub(rem[i + j], F.mul(factor, bj))
    return poly(F, quot), poly(F, rem)


def mod(a: Poly, b: Poly) -> Poly:
    return divmod_poly(a, b)[1]


def monic(a: Poly) -> Poly:
    if a.is_zero() or a.is_monic():
        return a
    return scale(a, a.field.inv(a.coeffs[-1]))


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) is 0."""
    _check_same_field(a, b)
    while not b.is_zero():
        a, b = b, mod(a, b)
    return monic(a)


def lcm(a: Poly, b: Poly) -> Poly:
    _check_same_field(a, b)
    if a.is_zero() or b.is_zero():
        return zero(a.field)
    g = gcd(a, b)
    q, r = divmod_poly(mul(a, b), g)
    assert r.is_zero()
    return monic(q)


def lcm_many(polys) -> Poly:
    return reduce(lcm, polys)


def evaluate(f: Poly, x: int, ext: GF | None = None) -> int:
    """f(x) by Horner's rule; x may live in an extension of f's field."""
    F = f.field
    if ext is None or ext == F:
        acc = 0
        for c in reversed(f.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc
    emb = embedding(F, ext)
    acc = 0
    for c in reversed(f.coeffs):
        acc = ext.add(ext.mul(acc, x), emb.up(c))
    return acc


def x_pow_n_minus_one(field: GF, n: int) -> Poly:
    return poly(field, [field.neg(1)] + [0] * (n - 1) + [1])


# ----------------------------------------------------------------------
# defining-set <-> polynomial bridge
# ----------------------------------------------------------------------

def _root_product(indices, n: int, base: GF, ext: GF) -> Poly:
    """prod_{i in indices}(x - beta^i) over ext, coefficients mapped down to base."""
    if (ext.q - 1) % n != 0:
        raise ValueError(f"n = {n} does not divide {ext.q} - 1")
    beta = ext.nth_root_of_unity(n)
    prod = one(ext)
    for i in sorted(indices):
        root = ext.pow(beta, i)
        prod = mul(prod, Poly(ext, (ext.neg(root), 1)))
    emb = embedding(base, ext)
    try:
        down = [emb.down(c) for c in prod.coeffs]
    except ValueError:
        raise ValueError(
            f"root set {sorted(indices)} is not closed under multiplication by "
            f"{base.q} mod {n}: product has coefficients outside GF({base.q})"
        ) from None
    return poly(base, down)


def minimal_polynomial(i: int, n: int, base: GF, ext: GF) -> Poly:
    """Monic polynomial over the base field whose roots are beta^j, j in the coset of i."""
    coset = set()
    j = i % n
    while j not in coset:
        coset.add(j)
        j = (j * base.q) % n
    return _root_product(coset, n, base, ext)


def generator_from_defset(indices, n: int, base: GF, ext: GF) -> Poly:
    """g(x) = prod_{i in Z}(x - beta^i) with coefficients in the base field."""
    idx = {i % n for i in indices}
    g = _root_product(idx, n, base, ext)
    if g.deg != len(idx):
        raise AssertionError("degree of generator must equal |Z|")
    return g


def defset_from_generator(g: Poly, n: int, ext: GF) -> frozenset[int]:
    """{i in Z_n : g(beta^i) = 0}; inverse of generator_from_defset."""
    base = g.field
    _, r = divmod_poly(x_pow_n_minus_one(base, n), g)
    if not r.is_zero():
        raise ValueError(f"generator does not divide x^{n} - 1")
    beta = ext.nth_root_of_unity(n)
    return frozenset(i for i in range(n) if evaluate(g, ext.pow(beta, i), ext) == 0)
