"""Property deciders for finite rings, with witnesses.

Every decider returns a Verdict (or a small report dataclass) carrying a
machine-checkable witness: a counterexample pair when the property fails,
or a witness map when it holds and the ring is small enough to store one.
Deciders prefer dense index tables and fall back to coefficient-array
scans on structure rings above the table limit.
"""

import random
from dataclasses import dataclass, field

import numpy as np

from ringbench.core import (
    DEFAULT_LIMITS, LimitError, StructureRing, SubRing, center,
    units_and_regulars,
)
from ringbench.ideals import (
    additive_closure, additive_gens, all_ideals, ideal_closure,
    ideal_lattice, ideal_power, jacobson_radical, largest_inner_ideal,
    nilpotency_index, prime_radical, quotient,
)

WITNESS_MAP_LIMIT = 8192


@dataclass
class Verdict:
    holds: bool
    witness: object = None
    detail: str = ""

    def __bool__(self):
        return self.holds


# -- commutativity ------------------------------------------------------------

def is_commutative(ring, limits=DEFAULT_LIMITS):
    """Commutativity; witness is the first non-commuting generator pair."""
    gens = ring.gens()
    for i, a in enumerate(gens):
        for b in gens[:i]:
            if ring.mul(a, b) != ring.mul(b, a):
                return Verdict(False, witness=(b, a))
    return Verdict(True)


# -- centrally essential ----------------------------------------------------------

@dataclass
class CEReport:
    holds: bool
    center_size: int
    counterexample: object = None        # a with no central multiplier
    witness_map: dict = field(default_factory=dict)  # a -> (x, a*x), both central

    def __bool__(self):
        return self.holds


def centrally_essential(ring, limits=DEFAULT_LIMITS):
    """For every a != 0 there must be central x != 0 with a*x central != 0."""
    z = center(ring, limits)
    if z.size == ring.size:
        # commutative: x = 1 works for every a
        wm = {}
        if ring.size <= WITNESS_MAP_LIMIT:
            wm = {a: (ring.one, a) for a in ring.elements(limits)
                  if a != ring.zero}
        return CEReport(True, z.size, witness_map=wm)
    t = ring.tables(limits)
    if t is not None:
        return _ce_tables(ring, z, t)
    if isinstance(ring, StructureRing):
        return _ce_structure(ring, z, limits)
    raise LimitError("max_table", limits.max_table, ring.size)


def _ce_tables(ring, z, t):
    n = len(t.elems)
    zidx = np.array(sorted(t.index[x] for x in z.elements()), dtype=np.int64)
    zidx = zidx[zidx != t.zero]
    in_center = np.zeros(n, dtype=bool)
    in_center[[t.index[x] for x in z.elements()]] = True
    prod = t.mul[:, zidx]                       # (n, |Z|-1): a * x
    good = in_center[prod] & (prod != t.zero)
    ok = good.any(axis=1)
    ok[t.zero] = True
    if not ok.all():
        bad = int(np.nonzero(~ok)[0][0])
        return CEReport(False, z.size, counterexample=t.elems[bad])
    wm = {}
    if n <= WITNESS_MAP_LIMIT:
        first = np.argmax(good, axis=1)
        for a in range(n):
            if a == t.zero:
                continue
            x = int(zidx[first[a]])
            wm[t.elems[a]] = (t.elems[x], t.elems[int(t.mul[a, x])])
    return CEReport(True, z.size, witness_map=wm)


def _ce_structure(ring, z, limits):
    """Row scan for structure rings above the table limit."""
    mods = np.array(ring.shape.moduli, dtype=np.int64)
    w = np.array(ring.shape.weights, dtype=np.int64)
    zrows = np.array(z.elements(), dtype=np.int64)
    znz = zrows[(zrows != 0).any(axis=1)]
    zcodes = np.sort(zrows @ w)
    for a in ring.elements(limits):
        if a == ring.zero:
            continue
        ma = ring.left_mul_matrix(a)            # x @ ma = a*x ... see below
        prods = (znz @ ma) % mods
        codes = prods @ w
        pos = np.searchsorted(zcodes, codes)
        pos[pos >= len(zcodes)] = 0
        central = zcodes[pos] == codes
        nonzero = codes != 0
        if not (central & nonzero).any():
            return CEReport(False, z.size, counterexample=a)
    return CEReport(True, z.size)


def verify_ce_counterexample(ring, a, limits=DEFAULT_LIMITS):
    """Re-check by direct arithmetic that a has no nonzero central partner.

    True when a != 0 and a*x fails to be central-and-nonzero for every
    nonzero central x; used to confirm reported witnesses independently of
    the vectorized decider.
    """
    a = ring.element(a)
    if a == ring.zero:
        return False
    zelems = center(ring, limits).elements()
    zset = set(zelems)
    for x in zelems:
        if x == ring.zero:
            continue
        y = ring.mul(a, x)
        if y != ring.zero and y in zset:
            return False
    return True


def zero_divisor_symmetry(ring, limits=DEFAULT_LIMITS):
    """Left zero-divisors coincide with right zero-divisors.

    Holds in every centrally essential ring; witness is an element whose
    annihilators are nontrivial on one side only.
    """
    t = ring.tables(limits)
    if t is not None:
        right_zd = (t.mul == t.zero).sum(axis=1) > 1   # some x != 0 with ax=0
        left_zd = (t.mul == t.zero).sum(axis=0) > 1
        mismatch = right_zd != left_zd
        if mismatch.any():
            a = int(np.nonzero(mismatch)[0][0])
            return Verdict(False, witness=t.elems[a],
                           detail="zero-divisor on one side only")
        return Verdict(True)
    rep = units_and_regulars(ring, limits)
    # in a finite ring, zero-divisors on either side = non-regular elements,
    # and one-sided regularity already implies two-sided via counting; use
    # the regular set as the (two-sided) non-zero-divisors
    return Verdict(len(rep.regulars) == len(rep.units),
                   detail="regular elements are exactly the units")


# -- completely centrally essential -----------------------------------------------

@dataclass
class CCEReport:
    holds: bool
    center_size: int
    checked_ideals: int = 0
    failing_ideal: object = None
    quotient_counterexample: object = None

    def __bool__(self):
        return self.holds


def completely_centrally_essential(ring, limits=DEFAULT_LIMITS):
    """Centrally essential together with every proper factor ring.

    Ideals are swept smallest first, so the failing ideal reported is the
    first one in (size, elements) order whose quotient is not centrally
    essential.  Commutative rings pass outright (every factor ring is
    commutative).
    """
    if is_commutative(ring, limits):
        return CCEReport(True, ring.size)
    base = centrally_essential(ring, limits)
    if not base:
        return CCEReport(False, base.center_size,
                         failing_ideal=None,
                         quotient_counterexample=base.counterexample)
    ideals = all_ideals(ring, side="two", limits=limits)
    checked = 0
    for ideal in ideals:
        if ideal.is_zero() or ideal.is_whole():
            continue
        q = quotient(ring, ideal, limits=limits)
        checked += 1
        if is_commutative(q, limits):
            continue
        rep = centrally_essential(q, limits)
        if not rep:
            return CCEReport(False, base.center_size, checked_ideals=checked,
                             failing_ideal=ideal,
                             quotient_counterexample=rep.counterexample)
    return CCEReport(True, base.center_size, checked_ideals=checked)


# -- one-sided ideal symmetry: invariant, strongly bounded --------------------------

def is_invariant(ring, limits=DEFAULT_LIMITS):
    """All one-sided ideals two-sided, i.e. aR = Ra for every a."""
    t = ring.tables(limits)
    if t is None:
        raise LimitError("max_table", limits.max_table, ring.size)
    rows = np.sort(t.mul, axis=1)
    cols = np.sort(t.mul.T, axis=1)
    agree = (rows == cols).all(axis=1)
    if agree.all():
        return Verdict(True)
    a = int(np.nonzero(~agree)[0][0])
    return Verdict(False, witness=t.elems[a],
                   detail="aR and Ra differ as sets")


def is_strongly_bounded(ring, limits=DEFAULT_LIMITS):
    """Every nonzero one-sided ideal contains a nonzero two-sided ideal.

    Checking principal one-sided ideals suffices: any nonzero one-sided
    ideal contains a principal one.
    """
    t = ring.tables(limits)
    if t is None:
        raise LimitError("max_table", limits.max_table, ring.size)
    for side, table in (("right", t.mul), ("left", t.mul.T)):
        for a in range(len(t.elems)):
            if a == t.zero:
                continue
            elems = [t.elems[i] for i in np.unique(table[a])]
            inner = largest_inner_ideal(ring, elems, side=side, limits=limits)
            if len(inner) == 1:
                return Verdict(False, witness=(side, t.elems[a]),
                               detail="principal %s ideal of %s holds no "
                                      "nonzero two-sided ideal"
                                      % (side, ring.format_element(t.elems[a])))
    return Verdict(True)


# -- zero-product symmetry: reversible, semicommutative -----------------------------

def is_reversible(ring, limits=DEFAULT_LIMITS):
    """ab = 0 must force ba = 0; witness is the first ordered pair violating."""
    t = ring.tables(limits)
    if t is None:
        raise LimitError("max_table", limits.max_table, ring.size)
    zero = t.mul == t.zero
    bad = zero & ~zero.T
    if not bad.any():
        return Verdict(True)
    a, b = (int(x) for x in np.argwhere(bad)[0])
    return Verdict(False, witness=(t.elems[a], t.elems[b]),
                   detail="product vanishes one way only")


def is_semicommutative(ring, limits=DEFAULT_LIMITS):
    """ab = 0 must force aRb = 0; middles run over additive generators."""
    t = ring.tables(limits)
    if t is None:
        raise LimitError("max_table", limits.max_table, ring.size)
    zero = t.mul == t.zero
    for g in t.gen_idx:
        # (a*g)*b for all pairs: rows re-indexed through a*g
        agb_zero = zero[t.mul[:, g], :]
        bad = zero & ~agb_zero
        if bad.any():
            a, b = (int(x) for x in np.argwhere(bad)[0])
            return Verdict(False, witness=(t.elems[a], t.elems[int(g)],
                                           t.elems[b]),
                           detail="ab = 0 but a*g*b != 0")
    return Verdict(True)


# -- local, uniserial, semiprime ------------------------------------------------------

def is_local(ring, limits=DEFAULT_LIMITS):
    """Non-units form an ideal, i.e. |J| + |units| = |R|."""
    rep = units_and_regulars(ring, limits)
    j = jacobson_radical(ring, limits)
    holds = j.size + len(rep.units) == ring.size
    if holds:
        return Verdict(True, detail="residue ring is a division ring")
    unit_set = set(rep.units)
    stray = next(x for x in ring.elements(limits)
                 if x not in unit_set and x not in j)
    return Verdict(False, witness=stray,
                   detail="non-unit outside the radical")


def is_uniserial(ring, limits=DEFAULT_LIMITS):
    """One-sided ideals form a chain (checked on both sides)."""
    for side in ("right", "left"):
        lat = ideal_lattice(ring, side=side, limits=limits)
        chain, pair = lat.is_chain()
        if not chain:
            return Verdict(False, witness=(side, pair),
                           detail="%s ideals of sizes %d and %d are "
                                  "incomparable" % (side, pair[0].size,
                                                    pair[1].size))
    return Verdict(True)


# -- Lie series ------------------------------------------------------------------------

@dataclass
class LieSeries:
    flavor: str            # "bracket" or "ideal"
    sizes: tuple           # additive sizes of the terms, starting at |R|
    nilpotency_class: object  # int or None when the series stabilizes above 0
    terms: tuple = ()      # element tuples of the terms past the first

    @property
    def terminates(self):
        return self.nilpotency_class is not None


def lie_series(ring, flavor="bracket", limits=DEFAULT_LIMITS):
    """Iterated commutator series.

    bracket: next term is the additive span of [x, y], x in the current
    term, y in R.  ideal: next term is the two-sided ideal generated by
    those brackets (the stronger chain).  Both start at R itself.
    """
    if flavor not in ("bracket", "ideal"):
        raise ValueError("flavor must be 'bracket' or 'ideal'")
    t = ring.tables(limits)
    if t is None:
        raise LimitError("max_table", limits.max_table, ring.size)
    ring_gens = ring.gens()
    cur_gens = list(ring_gens)
    sizes = [ring.size]
    terms = []
    seen = ring.size
    step = 0
    while True:
        step += 1
        brackets = []
        for x in cur_gens:
            for y in ring_gens:
                c = ring.sub(ring.mul(x, y), ring.mul(y, x))
                if c != ring.zero:
                    brackets.append(c)
        if not brackets:
            sizes.append(1)
            terms.append((ring.zero,))
            return LieSeries(flavor, tuple(sizes), step, tuple(terms))
        if flavor == "bracket":
            elems = additive_closure(ring, brackets, limits)
        else:
            elems = ideal_closure(ring, brackets, limits=limits).elements
        sizes.append(len(elems))
        terms.append(tuple(elems))
        if len(elems) == seen:
            return LieSeries(flavor, tuple(sizes), None, tuple(terms))
        seen = len(elems)
        cur_gens = list(additive_gens(ring, elems, limits))


def lie_class(ring, limits=DEFAULT_LIMITS):
    """Least c with the bracket series vanishing at step c+1, else None."""
    return lie_series(ring, "bracket", limits).nilpotency_class


def is_lie_nilpotent(ring, limits=DEFAULT_LIMITS):
    c = lie_class(ring, limits)
    return Verdict(c is not None, witness=c,
                   detail="bracket series stabilizes above zero"
                   if c is None else "class %d" % c)


def is_strongly_lie_nilpotent(ring, limits=DEFAULT_LIMITS):
    s = lie_series(ring, "ideal", limits)
    return Verdict(s.terminates, witness=s.nilpotency_class,
                   detail="ideal series stabilizes above zero"
                   if not s.terminates else "class %d" % s.nilpotency_class)


# -- central series through the prime radical -------------------------------------------

@dataclass
class CentralSeriesReport:
    ok: bool
    sizes: tuple = ()          # sizes of the chain ideals inside the ring
    reason: str = ""

    def __bool__(self):
        return self.ok


def central_series_through_radical(ring, limits=DEFAULT_LIMITS):
    """Build the ascending central chain seeded by slices of the prime radical.

    Stage i takes the current factor ring, intersects the last nonzero
    power of its prime radical with its center, and pulls the result back.
    Each stage must produce a strictly larger nonzero ideal whose factor is
    central.  The loop runs until the factor ring is semiprime, i.e. until
    the chain has absorbed the whole prime radical P; it then closes with R
    itself once the factor by P is commutative.  Semiprime input yields the
    empty chain.  Returns a failure report when a stage yields zero or a
    non-ideal (which happens off the intended class of rings).
    """
    if prime_radical(ring, limits).is_zero():
        return CentralSeriesReport(True, (), reason="semiprime: empty chain")
    acc = frozenset({ring.zero})
    sizes = [1]
    guard = 0
    while True:
        guard += 1
        if guard > 64:
            return CentralSeriesReport(False, tuple(sizes),
                                       reason="chain failed to terminate")
        q = ring if len(acc) == 1 else quotient(ring, sorted(acc),
                                                limits=limits)
        p = prime_radical(q, limits)
        if p.is_zero():
            # the chain now ends at P; the last factor must be commutative
            if is_commutative(q, limits):
                sizes.append(ring.size)
                return CentralSeriesReport(True, tuple(sizes))
            return CentralSeriesReport(
                False, tuple(sizes),
                reason="factor by the prime radical is not commutative")
        k = nilpotency_index(q, p, limits)
        if k is None:
            return CentralSeriesReport(False, tuple(sizes),
                                       reason="prime radical not nilpotent")
        top = ideal_power(q, p, k - 1, limits)
        zset = set(center(q, limits).elements())
        slice_elems = [x for x in top.elements if x in zset]
        if len(slice_elems) == 1:
            return CentralSeriesReport(
                False, tuple(sizes),
                reason="central slice of the radical power is zero")
        regrown = ideal_closure(q, slice_elems, limits=limits)
        if set(regrown.elements) != set(slice_elems):
            return CentralSeriesReport(
                False, tuple(sizes),
                reason="central slice is not a two-sided ideal")
        # pull back to the original ring through the accumulated quotient
        if len(acc) == 1:
            nxt = frozenset(slice_elems)
        else:
            sliced = set(slice_elems)
            nxt = frozenset(x for x in ring.elements(limits)
                            if q.project(x) in sliced)
        if not acc < nxt:
            return CentralSeriesReport(False, tuple(sizes),
                                       reason="chain stalled")
        # the new factor must be central: [nxt, R] inside acc
        for x in sorted(nxt)[:64]:
            for g in ring.gens():
                c = ring.sub(ring.mul(x, g), ring.mul(g, x))
                if c not in acc:
                    return CentralSeriesReport(
                        False, tuple(sizes),
                        reason="factor is not central")
        acc = nxt
        sizes.append(len(acc))


# -- Ore conditions and the classical ring of fractions -----------------------------------

@dataclass
class OreReport:
    right_holds: bool
    left_holds: bool
    regular_count: int
    ring: object = field(repr=False, default=None)
    _inverses: dict = field(repr=False, default_factory=dict)

    def __bool__(self):
        return self.right_holds and self.left_holds

    def witness(self, a, b):
        """(a1, b1) with a*b1 = b*a1 and b1 regular, for regular b."""
        if b not in self._inverses:
            raise ValueError("b must be regular")
        binv = self._inverses[b]
        return (self.ring.mul(binv, a), self.ring.one)

    def left_witness(self, a, b):
        """(a1, b1) with b1*a = a1*b and b1 regular, for regular b."""
        if b not in self._inverses:
            raise ValueError("b must be regular")
        binv = self._inverses[b]
        return (self.ring.mul(a, binv), self.ring.one)


def ore_check(ring, limits=DEFAULT_LIMITS, sample=64, seed=0):
    """Verify both Ore conditions against every regular element.

    In a finite ring regular elements are units, so common multiples exist
    by construction; this verifies the witness equations a*b1 = b*a1 and
    b1*a = a1*b on explicit products (all pairs when tables exist, a seeded
    sample otherwise) rather than assuming them.
    """
    rep = units_and_regulars(ring, limits)
    t = ring.tables(limits)
    right = left = True
    if t is not None:
        n = len(t.elems)
        ar = np.arange(n)
        for b in rep.regulars:
            bi = t.index[b]
            vi = t.index[rep.inverses[b]]
            # right: a * 1 == b * (b^-1 a); left: 1 * a == (a b^-1) * b
            right &= bool((t.mul[bi, t.mul[vi, ar]] == ar).all())
            left &= bool((t.mul[t.mul[ar, vi], bi] == ar).all())
    elif isinstance(ring, StructureRing):
        mods = np.array(ring.shape.moduli, dtype=np.int64)
        arr = ring.elements_array(limits)
        for b in rep.regulars:
            binv = rep.inverses[b]
            lb, lv = ring.left_mul_matrix(b), ring.left_mul_matrix(binv)
            rb, rv = ring.right_mul_matrix(b), ring.right_mul_matrix(binv)
            right &= bool(((((arr @ lv) % mods) @ lb) % mods == arr).all())
            left &= bool(((((arr @ rv) % mods) @ rb) % mods == arr).all())
    else:
        rng = random.Random(seed)
        elems = ring.elements(limits)
        for b in rep.regulars:
            binv = rep.inverses[b]
            picks = [elems[rng.randrange(len(elems))] for _ in range(sample)]
            for a in picks:
                right &= ring.mul(b, ring.mul(binv, a)) == a
                left &= ring.mul(ring.mul(a, binv), b) == a
    return OreReport(right, left, len(rep.regulars), ring=ring,
                     _inverses=dict(rep.inverses))


# -- aggregate report ---------------------------------------------------------------------

REPORT_KEYS = (
    "size", "center_size", "jacobson_size", "jacobson_index",
    "prime_radical_size", "prime_radical_index", "units", "commutative",
    "centrally_essential", "completely_centrally_essential", "invariant",
    "strongly_bounded", "reversible", "semicommutative", "local",
    "uniserial", "semiprime", "lie_nilpotent", "lie_class",
    "strongly_lie_nilpotent", "strong_lie_class", "ore_right", "ore_left",
)


def _render_value(val):
    if val is True:
        return "true"
    if val is False:
        return "false"
    if val is None:
        return "none"
    return str(val)


@dataclass
class PropertyReport:
    ring: object
    values: dict
    skipped: dict   # key -> limit name that stopped it

    def lines(self):
        out = []
        for key in REPORT_KEYS:
            if key in self.values:
                val, note = self.values[key]
                line = "%s=%s" % (key, _render_value(val))
                if note:
                    line += ";witness=%s" % note
                out.append(line)
            elif key in self.skipped:
                out.append("%s=skipped;limit=%s" % (key, self.skipped[key]))
        return out


def _fmt(ring, elem):
    return ring.format_element(elem)


def full_report(ring, limits=DEFAULT_LIMITS):
    """Run every decider, recording named-limit skips instead of failing."""
    values = {}
    skipped = {}

    def run(key, fn, render=lambda v: (v, "")):
        try:
            values[key] = render(fn())
        except LimitError as err:
            skipped[key] = err.limit

    values["size"] = (ring.size, "")
    run("center_size", lambda: center(ring, limits).size)
    run("jacobson_size", lambda: jacobson_radical(ring, limits).size)
    run("jacobson_index",
        lambda: nilpotency_index(ring, jacobson_radical(ring, limits),
                                 limits))
    run("prime_radical_size", lambda: prime_radical(ring, limits).size)
    run("prime_radical_index",
        lambda: nilpotency_index(ring, prime_radical(ring, limits), limits))
    run("units", lambda: len(units_and_regulars(ring, limits).units))
    run("commutative", lambda: is_commutative(ring, limits),
        lambda v: (v.holds, "" if v.holds else "%s,%s"
                   % (_fmt(ring, v.witness[0]), _fmt(ring, v.witness[1]))))
    run("centrally_essential", lambda: centrally_essential(ring, limits),
        lambda v: (v.holds, "" if v.holds
                   else _fmt(ring, v.counterexample)))
    run("completely_centrally_essential",
        lambda: completely_centrally_essential(ring, limits),
        lambda v: (v.holds, "" if v.holds
                   else ("ideal_size=%d" % v.failing_ideal.size
                         if v.failing_ideal else "self")))
    run("invariant", lambda: is_invariant(ring, limits),
        lambda v: (v.holds, "" if v.holds else _fmt(ring, v.witness)))
    run("strongly_bounded", lambda: is_strongly_bounded(ring, limits),
        lambda v: (v.holds, "" if v.holds
                   else "%s:%s" % (v.witness[0], _fmt(ring, v.witness[1]))))
    run("reversible", lambda: is_reversible(ring, limits),
        lambda v: (v.holds, "" if v.holds else "%s,%s"
                   % (_fmt(ring, v.witness[0]), _fmt(ring, v.witness[1]))))
    run("semicommutative", lambda: is_semicommutative(ring, limits),
        lambda v: (v.holds, "" if v.holds else "%s,%s,%s"
                   % tuple(_fmt(ring, w) for w in v.witness)))
    run("local", lambda: is_local(ring, limits),
        lambda v: (v.holds, "" if v.holds else _fmt(ring, v.witness)))
    run("uniserial", lambda: is_uniserial(ring, limits),
        lambda v: (v.holds, "" if v.holds else "%s:%d,%d"
                   % (v.witness[0], v.witness[1][0].size, v.witness[1][1].size)))
    run("semiprime", lambda: prime_radical(ring, limits),
        lambda p: (p.is_zero(), "" if p.is_zero()
                   else "radical_size=%d" % p.size))
    run("lie_nilpotent", lambda: is_lie_nilpotent(ring, limits),
        lambda v: (v.holds, ""))
    run("lie_class", lambda: lie_class(ring, limits))
    run("strongly_lie_nilpotent",
        lambda: is_strongly_lie_nilpotent(ring, limits),
        lambda v: (v.holds, ""))
    run("strong_lie_class",
        lambda: lie_series(ring, "ideal", limits).nilpotency_class)
    ore = [None]

    def get_ore():
        if ore[0] is None:
            ore[0] = ore_check(ring, limits)
        return ore[0]

    run("ore_right", lambda: get_ore().right_holds)
    run("ore_left", lambda: get_ore().left_holds)
    return PropertyReport(ring=ring, values=values, skipped=skipped)


# -- random instances -------------------------------------------------------------------

_AMBIENTS = {}


def _ambient(n, mod):
    key = (n, mod)
    if key not in _AMBIENTS:
        from ringbench.construct import full_matrix_ring
        from ringbench.core import Limits
        _AMBIENTS[key] = full_matrix_ring(
            n, mod, limits=Limits(max_elements=2 ** 20))
    return _AMBIENTS[key]


def random_subring(rng, max_size=512, limits=DEFAULT_LIMITS):
    """Unital subring of a small matrix ring generated by random matrices.

    Returns None when the closure overflows max_size (callers resample).
    Closing the additive generators under pairwise products suffices: any
    two subgroup elements are integer combinations of the generators, so
    their product is an integer combination of generator products.
    """
    from ringbench.core import Limits
    from ringbench.ideals import _structure_additive

    n, mod = rng.choice(((2, 2), (2, 3), (2, 4), (3, 2)))
    amb = _ambient(n, mod)
    k = n * n
    gens = [np.array(amb.one, dtype=np.int64)]
    for _ in range(rng.randint(1, 3)):
        gens.append(np.array([rng.randrange(mod) for _ in range(k)],
                             dtype=np.int64))
    tight = Limits(max_elements=max_size)
    try:
        sg = _structure_additive(amb, np.array(gens), tight)
        gen_list = [g % mod for g in gens]
        while True:
            fresh = []
            for a in gen_list:
                for b in gen_list:
                    p = (a.reshape(n, n) @ b.reshape(n, n)).reshape(k) % mod
                    if p not in sg:
                        fresh.append(p)
            if not fresh:
                break
            for p in fresh:
                if p not in sg:
                    sg.add_gen(p)
                    gen_list.append(p)
    except LimitError:
        return None
    elems = [tuple(int(v) for v in row) for row in sg.sorted_rows()]
    return SubRing(amb, elems, name="sampled %dx%d mod %d" % (n, n, mod),
                   check=False)


def sample_rings(seed, count, max_size=512, limits=DEFAULT_LIMITS):
    """Deterministic stream of `count` random subrings."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        ring = random_subring(rng, max_size=max_size, limits=limits)
        if ring is not None:
            out.append(ring)
    return out


def random_quotient(rng, ring, limits=DEFAULT_LIMITS):
    """A quotient of the ring by a random proper ideal (maybe the zero one)."""
    ideals = [i for i in all_ideals(ring, limits=limits) if not i.is_whole()]
    ideal = ideals[rng.randrange(len(ideals))]
    if ideal.is_zero():
        return ring
    return quotient(ring, ideal, limits=limits)
