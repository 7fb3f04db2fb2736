"""Derivation-built matrix rings over exact rational-function fields.

Two constructions need a field carrying a derivation rather than a finite
coefficient ring.  The triangle ring places a function on the diagonal of
a 3x3 matrix with its two partial derivatives on the superdiagonal and a
free corner; products stay in the family precisely because derivatives
obey the Leibniz rule.  The jet ring embeds a univariate function field
into 4x4 matrices next to a nilpotent shift whose commutators surface the
derivation.  Entries are sympy rational functions over a prime field, so
every identity checked here is exact.
"""

import random
from dataclasses import dataclass

from sympy import GF
from sympy.polys.fields import field as _fraction_field

from ringbench.core import InputError


def function_field(p, names):
    """Rational function field over F_p.  Returns (field, generator list)."""
    made = _fraction_field(names, GF(p))
    return made[0], list(made[1:])


def normalized(f):
    """Rescale so the denominator is monic; the fraction is unchanged."""
    dom = f.field.domain
    lc = f.denom.LC
    if lc == dom.one:
        return f
    inv = dom.quo(dom.one, lc)
    return f.field.raw_new(f.numer.mul_ground(inv), f.denom.mul_ground(inv))


def rf_eq(f, g):
    """Equality of rational functions regardless of representation."""
    return (f - g) == 0


def random_rational(rng, field_, degree=2, terms=2):
    """Random sparse fraction; numerators and denominators stay small so
    gcd cancellation in later products does not dominate the runtime."""
    p = int(field_.domain.characteristic())
    gens = field_.gens

    def poly():
        total = field_.zero
        for _ in range(terms):
            term = field_(rng.randrange(1, p))
            for _ in range(rng.randint(0, degree)):
                term *= rng.choice(gens)
            total += term
        return total

    num = poly()
    if rng.random() < 0.5:
        return num
    den = poly()
    while den == field_.zero:
        den = poly()
    return num / den


# -- small exact matrices ------------------------------------------------------

def mat_zero(field_, n):
    return tuple((field_.zero,) * n for _ in range(n))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)),
                  start=a[0][0].field.zero) for j in range(n))
        for i in range(n))


def mat_scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def mat_eq(a, b):
    return all(rf_eq(x, y) for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_is_zero(a):
    return all(x == 0 for row in a for x in row)


def solve_in_span(candidate, basis):
    """Coefficients writing candidate as a combination of basis matrices,
    or None.  Entry-wise linear system solved by exact elimination."""
    field_ = candidate[0][0].field
    n = len(candidate)
    rows = []
    for i in range(n):
        for j in range(n):
            rows.append([b[i][j] for b in basis] + [candidate[i][j]])
    cols = len(basis)
    pivots = []
    rank = 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0),
                   None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, len(rows)):
        if rows[r][-1] != 0:
            return None
    coeffs = [field_.zero] * cols
    for r, col in enumerate(pivots):
        coeffs[col] = rows[r][-1]
    return tuple(coeffs)


@dataclass
class SymbolicReport:
    ok: bool
    checked: int
    failure: str = ""

    def __bool__(self):
        return self.ok


# -- triangle ring: diagonal function with its partial derivatives ----------------

def triangle_embed(field_, f, g):
    """3x3 matrix with f on the diagonal, df/dx and df/dy above it, g in
    the corner."""
    f, g = field_(f), field_(g)
    x, y = field_.gens[:2]
    z = field_.zero
    return ((f, f.diff(x), g),
            (z, f, f.diff(y)),
            (z, z, f))


def corner_matrix(field_, g):
    m = [[field_.zero] * 3 for _ in range(3)]
    m[0][2] = field_(g)
    return tuple(tuple(row) for row in m)


def triangle_verify(p=5, samples=100, seed=0):
    """Check the triangle family is a noncommutative ring with the corner
    line as an ideal squaring to zero.

    Closure is the Leibniz rule in matrix form: the product of the
    embeddings of (f1, g1) and (f2, g2) is the embedding of
    (f1*f2, f1*g2 + g1*f2 + df1/dx * df2/dy).
    """
    if p < 3:
        raise InputError("characteristic must be at least 3")
    field_, (x, y) = function_field(p, "x,y")
    rng = random.Random(seed)
    pool = [field_(x), field_(y), x + y, x * y, 1 / field_(x)]
    checked = 0

    def draw():
        f = rng.choice(pool) if rng.random() < 0.3 else \
            random_rational(rng, field_)
        g = random_rational(rng, field_)
        return f, g

    for _ in range(samples):
        f1, g1 = draw()
        f2, g2 = draw()
        product = mat_mul(triangle_embed(field_, f1, g1),
                          triangle_embed(field_, f2, g2))
        expected = triangle_embed(
            field_, f1 * f2,
            f1 * g2 + g1 * f2 + f1.diff(x) * f2.diff(y))
        if not mat_eq(product, expected):
            return SymbolicReport(False, checked,
                                  "closure failed at f1=%s g1=%s f2=%s g2=%s"
                                  % (f1, g1, f2, g2))
        checked += 1

    a = triangle_embed(field_, x, 0)
    b = triangle_embed(field_, y, 0)
    commutator = mat_sub(mat_mul(a, b), mat_mul(b, a))
    if mat_is_zero(commutator) or not rf_eq(commutator[0][2], field_.one):
        return SymbolicReport(False, checked, "commutator corner is not 1")
    checked += 1

    zero_embed = triangle_embed(field_, 0, 0)
    if not mat_is_zero(mat_mul(zero_embed, a)):
        return SymbolicReport(False, checked, "zero embedding not absorbing")
    checked += 1

    # the corner line is a two-sided ideal and squares to zero
    for _ in range(20):
        f, g = draw()
        h = random_rational(rng, field_)
        m = triangle_embed(field_, f, g)
        c = corner_matrix(field_, h)
        left = mat_mul(m, c)
        right = mat_mul(c, m)
        for prod in (left, right):
            stray = [prod[i][j] for i in range(3) for j in range(3)
                     if (i, j) != (0, 2) and prod[i][j] != 0]
            if stray:
                return SymbolicReport(False, checked,
                                      "corner line is not an ideal")
        if not rf_eq(left[0][2], f * h) or not rf_eq(right[0][2], h * f):
            return SymbolicReport(False, checked, "corner product wrong")
        if not mat_is_zero(mat_mul(c, corner_matrix(field_, g))):
            return SymbolicReport(False, checked,
                                  "corner line does not square to zero")
        checked += 1
    return SymbolicReport(True, checked)


# -- jet ring: field embedding beside a nilpotent shift --------------------------

def jet_embed(field_, a):
    """4x4 scalar matrix for a with its derivative hooked below the first
    diagonal entry."""
    a = field_(a)
    da = a.diff(field_.gens[0])
    z = field_.zero
    return ((a, z, z, z),
            (da, a, z, z),
            (z, z, a, z),
            (z, z, z, a))


def shift_matrix(field_):
    z, o = field_.zero, field_.one
    return ((z, z, z, z),
            (o, z, z, z),
            (z, o, z, z),
            (z, z, o, z))


def jet_verify(p=5, samples=60, seed=0, witness=None):
    """Check the jet embedding is a ring homomorphism and that the shift
    fails to commute with it even modulo the ideal of shift-squared
    multiples.

    The commutator of the shift with an embedded function is the
    derivative placed two steps below the diagonal; membership in the
    span of {embed(b) * shift^2, embed(b) * shift^3} is decided by exact
    linear algebra, and the verdict is that it never lies there once the
    derivative is non-zero.
    """
    if p < 3:
        raise InputError("characteristic must be at least 3")
    field_, (t,) = function_field(p, "t")
    if witness is None:
        witness = field_(t)
    else:
        witness = field_(witness)
    if witness.diff(t) == 0:
        raise InputError("witness must have a non-zero derivative")
    rng = random.Random(seed)
    checked = 0

    for _ in range(samples):
        a = random_rational(rng, field_)
        b = random_rational(rng, field_)
        fa, fb = jet_embed(field_, a), jet_embed(field_, b)
        if not mat_eq(mat_add(fa, fb), jet_embed(field_, a + b)):
            return SymbolicReport(False, checked, "additivity failed")
        if not mat_eq(mat_mul(fa, fb), jet_embed(field_, a * b)):
            return SymbolicReport(False, checked,
                                  "multiplicativity failed at a=%s b=%s"
                                  % (a, b))
        checked += 1

    x = shift_matrix(field_)
    x2 = mat_mul(x, x)
    x3 = mat_mul(x2, x)
    if mat_is_zero(x3) or not mat_is_zero(mat_mul(x3, x)):
        return SymbolicReport(False, checked, "shift is not nilpotent of index 4")
    checked += 1

    one = jet_embed(field_, 1)
    if not mat_eq(mat_mul(one, x), mat_mul(x, one)):
        return SymbolicReport(False, checked, "embedded 1 is not central")
    checked += 1

    # embedded multiples of shift powers collapse to scalar multiples,
    # which justifies the two-parameter span below
    for _ in range(10):
        b = random_rational(rng, field_)
        if not mat_eq(mat_mul(jet_embed(field_, b), x2), mat_scale(b, x2)):
            return SymbolicReport(False, checked, "embed(b)*shift^2 != b*shift^2")
        if not mat_eq(mat_mul(jet_embed(field_, b), x3), mat_scale(b, x3)):
            return SymbolicReport(False, checked, "embed(b)*shift^3 != b*shift^3")
        checked += 1

    fa = jet_embed(field_, witness)
    commutator = mat_sub(mat_mul(x, fa), mat_mul(fa, x))
    if mat_is_zero(commutator):
        return SymbolicReport(False, checked, "shift commutes with the witness")
    coeffs = solve_in_span(commutator, [x2, x3])
    if coeffs is not None:
        return SymbolicReport(False, checked,
                              "commutator lies in the shift-squared ideal: %s"
                              % (coeffs,))
    checked += 1
    return SymbolicReport(True, checked)
