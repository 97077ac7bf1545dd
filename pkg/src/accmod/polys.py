"""Dense univariate polynomials over a FieldSpec.

Coefficient lists run low degree to high and are kept trimmed; the zero
polynomial is the empty list.  Everything here is exact: the routines back
minimal polynomials of endomorphisms, the Berkowitz characteristic polynomial
(division free, so it works in any characteristic), and the coprime splitting
used to manufacture idempotents.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import FactorizationLimitError
from .fields import FieldSpec
from .exactlin import Mat, solve


def trim(f: list) -> list:
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: list) -> int:
    return len(f) - 1


def poly_add(f, g, field: FieldSpec):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else field.zero
        b = g[i] if i < len(g) else field.zero
        s = a + b
        out.append(s % field.p if field.is_prime_field else s)
    return trim(out)


def poly_scale(f, c, field: FieldSpec):
    c = field.coerce(c)
    if c == 0:
        return []
    out = [(a * c) % field.p if field.is_prime_field else a * c for a in f]
    return trim(out)


def poly_sub(f, g, field: FieldSpec):
    return poly_add(f, poly_scale(g, field.neg(field.one), field), field)


def poly_mul(f, g, field: FieldSpec):
    if not f or not g:
        return []
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    if field.is_prime_field:
        out = [v % field.p for v in out]
    return trim(out)


def poly_divmod(f, g, field: FieldSpec):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    q = [field.zero] * max(0, len(f) - len(g) + 1)
    inv_lead = field.inv(g[-1])
    while len(f) >= len(g) and trim(f):
        if f[-1] == 0:
            f.pop()
            continue
        shift = len(f) - len(g)
        c = f[-1] * inv_lead
        if field.is_prime_field:
            c %= field.p
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] -= c * b
            if field.is_prime_field:
                f[shift + i] %= field.p
        f.pop()
    return trim(q), trim(f)


def poly_mod(f, g, field: FieldSpec):
    return poly_divmod(f, g, field)[1]


def make_monic(f, field: FieldSpec):
    if not f:
        return f
    return poly_scale(f, field.inv(f[-1]), field)


def poly_gcd(f, g, field: FieldSpec):
    a, b = list(f), list(g)
    while b:
        a, b = b, poly_mod(a, b, field)
    return make_monic(a, field)


def poly_xgcd(f, g, field: FieldSpec):
    """Monic g0 = gcd with g0 = s*f + t*g."""
    r0, r1 = list(f), list(g)
    s0, s1 = [field.one], []
    t0, t1 = [], [field.one]
    while r1:
        q, r = poly_divmod(r0, r1, field)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, field), field)
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1, field), field)
    if not r0:
        return [], s0, t0
    lead_inv = field.inv(r0[-1])
    return (poly_scale(r0, lead_inv, field), poly_scale(s0, lead_inv, field),
            poly_scale(t0, lead_inv, field))


def poly_eval(f, x, field: FieldSpec):
    acc = field.zero
    for c in reversed(f):
        acc = acc * x + c
        if field.is_prime_field:
            acc %= field.p
    return acc


def poly_derivative(f, field: FieldSpec):
    out = []
    for i in range(1, len(f)):
        c = f[i] * i
        out.append(c % field.p if field.is_prime_field else c)
    return trim(out)


def poly_pow_mod(base, e: int, f, field: FieldSpec):
    result = [field.one]
    b = poly_mod(base, f, field)
    while e > 0:
        if e & 1:
            result = poly_mod(poly_mul(result, b, field), f, field)
        b = poly_mod(poly_mul(b, b, field), f, field)
        e >>= 1
    return result


def poly_at_matrix(f, t: Mat) -> Mat:
    """Evaluate the polynomial at a square matrix (Horner)."""
    n = t.rows
    acc = Mat.zeros(t.field, n, n)
    for c in reversed(f):
        acc = (acc @ t) + Mat.identity(t.field, n).scale(c)
    return acc


def min_poly_of_powers(first: np.ndarray, step, field: FieldSpec,
                       max_deg: int) -> list:
    """Monic minimal polynomial detected from the power sequence.

    `first` is the flattened unit, `step(v)` returns the next flattened power.
    Works for matrices acting on modules and for elements of a finite
    dimensional algebra alike.
    """
    rows = [np.asarray(first)]
    cur = np.asarray(first)
    for k in range(1, max_deg + 2):
        cur = step(cur)
        a = Mat.from_array(field, np.vstack(rows).T) if field.is_prime_field \
            else Mat(field, np.vstack(rows).T.copy())
        b = Mat.from_array(field, cur.reshape(-1, 1)) if field.is_prime_field \
            else Mat(field, cur.reshape(-1, 1).copy())
        x = solve(a, b)
        if x is not None:
            coeffs = [field.neg(field.coerce(x.data[i, 0])) for i in range(k)]
            coeffs.append(field.one)
            return trim(coeffs)
        rows.append(cur)
    raise RuntimeError("minimal polynomial not found within degree bound")


def matrix_min_poly(t: Mat) -> list:
    n = t.rows
    if n == 0:
        return [t.field.one]
    ident = Mat.identity(t.field, n)

    def step(v):
        m = Mat.from_array(t.field, v.reshape(n, n)) if t.field.is_prime_field \
            else Mat(t.field, v.reshape(n, n).copy())
        return (t @ m).data.reshape(-1)

    return min_poly_of_powers(ident.data.reshape(-1), step, t.field, n)


def berkowitz_charpoly(t: Mat) -> list:
    """Characteristic polynomial det(xI - A), low degree first, monic.

    Division free, hence exact over GF(p) in any characteristic and over Q.
    """
    field = t.field
    n = t.rows
    if n == 0:
        return [field.one]
    a = t.data

    def red(v):
        return v % field.p if field.is_prime_field else v

    # poly held high degree first: [1, c1, ..., ck]
    poly = [field.one, red(field.neg(field.coerce(a[0, 0])))]
    for k in range(1, n):
        row = a[k, :k]
        col = a[:k, k]
        minor = a[:k, :k]
        toep = [field.one, red(field.neg(field.coerce(a[k, k])))]
        v = col
        for _ in range(k):
            dot = field.zero
            for i in range(k):
                dot += row[i] * v[i]
            toep.append(red(field.neg(field.coerce(dot))))
            v = red(minor @ v)
        new = []
        for i in range(k + 2):
            s = field.zero
            for j in range(max(0, i - (len(toep) - 1)), min(i, k) + 1):
                s += toep[i - j] * poly[j]
            new.append(red(field.coerce(s)))
        poly = new
    return trim(list(reversed(poly)))


def prime_field_roots(f, field: FieldSpec, limit: int = 1 << 16) -> list[int]:
    """All roots in GF(p) by trial; p is capped at desk scale."""
    p = field.p
    if p > limit:
        raise FactorizationLimitError(
            f"root search by trial is limited to p <= {limit}")
    return [x for x in range(p) if poly_eval(f, x, field) == 0]


def rational_roots(f) -> list[Fraction]:
    """Rational root theorem on the primitive integer form of f."""
    if not f:
        return []
    denoms = [Fraction(c).denominator for c in f]
    scale = 1
    for d in denoms:
        scale = scale * d // np.gcd(scale, d)
    ints = [int(Fraction(c) * scale) for c in f]
    while ints and ints[0] == 0:
        ints.pop(0)  # factor x out; 0 handled by caller
    if not ints:
        return []
    lead, const = ints[-1], ints[0]

    def divisors(n):
        n = abs(n)
        out = set()
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.add(d)
                out.add(n // d)
            d += 1
        return sorted(out)

    roots = set()
    qq = FieldSpec(None)
    if poly_eval(f, Fraction(0), qq) == 0:
        roots.add(Fraction(0))
    for num in divisors(const):
        for den in divisors(lead):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if poly_eval(f, cand, qq) == 0:
                    roots.add(cand)
    return sorted(roots)


def _compress_pth(f, p):
    # f with zero derivative in char p is g(x^p); over the prime field the
    # coefficient list of g doubles as a p-th root of f.
    return trim([f[i] for i in range(0, len(f), p)])


def squarefree_radical(f, field: FieldSpec) -> list:
    """Product of the distinct irreducible factors of f (prime fields)."""
    f = make_monic(list(f), field)
    if degree(f) <= 0:
        return [field.one]
    d = poly_derivative(f, field)
    if not d:
        return squarefree_radical(_compress_pth(f, field.p), field)
    g = poly_gcd(f, d, field)
    u = poly_divmod(f, g, field)[0]
    if degree(g) == 0:
        return make_monic(u, field)
    # strip the factors already collected in u out of g
    w = g
    while True:
        h = poly_gcd(w, u, field)
        if degree(h) == 0:
            break
        w = poly_divmod(w, h, field)[0]
    if degree(w) == 0:
        return make_monic(u, field)
    rest = squarefree_radical(w, field)
    return make_monic(poly_mul(u, rest, field), field)


def _equal_degree_split(u, d: int, field: FieldSpec, rng) -> list | None:
    """Cantor-Zassenhaus: proper monic factor of squarefree u whose
    irreducible factors all have degree d; None only on bad luck."""
    p = field.p
    n = degree(u)
    for _ in range(64):
        r = [int(rng.integers(0, p)) for _ in range(n)]
        r = trim(r)
        if degree(r) < 1:
            continue
        if p == 2:
            # trace map sum r^(2^i)
            acc = list(r)
            cur = list(r)
            for _ in range(d - 1):
                cur = poly_pow_mod(cur, 2, u, field)
                acc = poly_add(acc, cur, field)
            g = poly_gcd(u, acc, field)
        else:
            e = (p ** d - 1) // 2
            h = poly_pow_mod(r, e, u, field)
            g = poly_gcd(u, poly_sub(h, [field.one], field), field)
        if 0 < degree(g) < n:
            return g
    return None


def coprime_split(f, field: FieldSpec, rng=None):
    """Split f = f1 * f2 with gcd(f1, f2) = 1 and both nonconstant.

    Returns None when no such split exists (f is a power of one irreducible).
    Over the rationals only rational-root splits are attempted; if the
    polynomial might still factor, FactorizationLimitError is raised.
    """
    f = make_monic(list(f), field)
    n = degree(f)
    if n <= 1:
        return None

    def split_at_root(root):
        lin = [field.neg(root), field.one]
        mult = 0
        rest = f
        while True:
            q, r = poly_divmod(rest, lin, field)
            if r:
                break
            rest = q
            mult += 1
        if degree(rest) == 0:
            return None  # f = (x - root)^n
        f1 = [field.one]
        for _ in range(mult):
            f1 = poly_mul(f1, lin, field)
        return f1, rest

    if field.is_rational:
        for root in rational_roots(f):
            s = split_at_root(root)
            if s:
                return s
        if n <= 3:
            return None  # no rational root and degree <= 3: irreducible
        raise FactorizationLimitError(
            "rational factorization beyond root splits is out of scope")

    for root in prime_field_roots(f, field):
        s = split_at_root(root)
        if s:
            return s

    u = squarefree_radical(f, field)
    if degree(u) <= 1:
        return None  # f is a power of a single linear factor

    def split_from_factor(v):
        # gather every irreducible of f dividing v, with full multiplicity
        f1 = poly_gcd(f, v, field)
        while True:
            rest = poly_divmod(f, f1, field)[0]
            g = poly_gcd(f1, rest, field)
            if degree(g) == 0:
                break
            f1 = poly_mul(f1, g, field)
        f2 = poly_divmod(f, f1, field)[0]
        if degree(f1) < 1 or degree(f2) < 1:
            return None
        return f1, f2

    if rng is None:
        rng = np.random.default_rng(0)
    # distinct degree scan on the radical; reaching stage d means u has no
    # irreducible factor of degree < d
    x = [field.zero, field.one]
    h = list(x)
    for d in range(1, degree(u) // 2 + 1):
        h = poly_pow_mod(h, field.p, u, field)
        g = poly_gcd(u, poly_sub(h, x, field), field)
        if 0 < degree(g) < degree(u):
            return split_from_factor(g)
        if degree(g) == degree(u):
            # every irreducible factor of u has degree exactly d and there
            # are at least two of them, so equal degree splitting applies
            v = _equal_degree_split(u, d, field, rng)
            if v is None:
                raise RuntimeError("equal degree splitting failed repeatedly")
            return split_from_factor(v)
    return None  # u irreducible, f a prime power
