"""Finite groups as multiplication tables, for building group algebras.

Elements are indices into a fixed name list; table[i][j] is the index of
the product of elements i and j.  Constructors for the families used in
the examples (cyclic, dihedral, quaternion of order 8, direct products)
fix a deterministic element order, which downstream code relies on when
naming algebra basis vectors.
"""

from ringbench.core import DEFAULT_LIMITS, InputError, LimitError


class GroupTable:
    """A finite group given by its full multiplication table."""

    def __init__(self, names, table, name=None, limits=DEFAULT_LIMITS):
        self.names = tuple(names)
        n = len(self.names)
        if n == 0:
            raise InputError("empty group")
        if n > limits.max_group:
            raise LimitError("max_group", limits.max_group, n)
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise InputError("multiplication table must be %d x %d" % (n, n))
        if any(x < 0 or x >= n for row in self.table for x in row):
            raise InputError("table entries out of range")
        self.order = n
        self.name = name
        self.identity = self._find_identity()
        self.inverses = self._find_inverses()
        self._check_associative()

    def _find_identity(self):
        for e in range(self.order):
            if all(self.table[e][g] == g and self.table[g][e] == g
                   for g in range(self.order)):
                return e
        raise InputError("table has no identity element")

    def _find_inverses(self):
        inv = []
        e = self.identity
        for g in range(self.order):
            partner = None
            for h in range(self.order):
                if self.table[g][h] == e and self.table[h][g] == e:
                    partner = h
                    break
            if partner is None:
                raise InputError("element %s has no inverse" % self.names[g])
            inv.append(partner)
        return tuple(inv)

    def _check_associative(self):
        t = self.table
        rng = range(self.order)
        for i in rng:
            ti = t[i]
            for j in rng:
                tij = ti[j]
                tj = t[j]
                for k in rng:
                    if t[tij][k] != ti[tj[k]]:
                        raise InputError(
                            "table not associative at (%s, %s, %s)"
                            % (self.names[i], self.names[j], self.names[k]))

    # -- arithmetic ---------------------------------------------------------
    def mul(self, i, j):
        return self.table[i][j]

    def inv(self, i):
        return self.inverses[i]

    def conj(self, g, x):
        """g x g^-1"""
        return self.table[self.table[g][x]][self.inverses[g]]

    def element_order(self, g):
        k = 1
        x = g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k

    # -- structure ------------------------------------------------------------
    def is_abelian(self):
        t = self.table
        return all(t[i][j] == t[j][i]
                   for i in range(self.order) for j in range(i))

    def center(self):
        t = self.table
        return tuple(g for g in range(self.order)
                     if all(t[g][h] == t[h][g] for h in range(self.order)))

    def conjugacy_classes(self):
        """Partition into conjugacy classes, each sorted, ordered by least member."""
        seen = set()
        classes = []
        for x in range(self.order):
            if x in seen:
                continue
            orbit = sorted({self.conj(g, x) for g in range(self.order)})
            seen.update(orbit)
            classes.append(tuple(orbit))
        return tuple(classes)

    def generated_subgroup(self, gens):
        """Closure of gens under multiplication (finite, so a subgroup)."""
        closure = {self.identity}
        frontier = [self.identity]
        gens = tuple(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.table[x][g]
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        return frozenset(closure)

    def subgroups(self, limits=DEFAULT_LIMITS):
        """All subgroups, as frozensets, sorted by (size, sorted members).

        Cyclic subgroups seed the search; joins of pairs are added until
        no new subgroup appears.  Complete because every subgroup is the
        join of the cyclic subgroups of its members.
        """
        subs = {self.generated_subgroup(())}
        for g in range(self.order):
            subs.add(self.generated_subgroup((g,)))
        changed = True
        while changed:
            changed = False
            pairs = sorted(subs, key=lambda s: (len(s), sorted(s)))
            for i, a in enumerate(pairs):
                for b in pairs[i + 1:]:
                    if a <= b or b <= a:
                        continue
                    j = self.generated_subgroup(tuple(a | b))
                    if j not in subs:
                        subs.add(j)
                        changed = True
                        if len(subs) > limits.max_ideals:
                            raise LimitError("max_ideals", limits.max_ideals)
        return tuple(sorted(subs, key=lambda s: (len(s), sorted(s))))

    def is_normal(self, subset):
        sub = frozenset(subset)
        return all(self.conj(g, x) in sub
                   for g in range(self.order) for x in sub)

    def is_hamiltonian(self, limits=DEFAULT_LIMITS):
        """Non-abelian with every subgroup normal."""
        if self.is_abelian():
            return False
        return all(self.is_normal(s) for s in self.subgroups(limits))

    def derived_subgroup(self):
        """Subgroup generated by all commutators g h g^-1 h^-1."""
        comms = set()
        for g in range(self.order):
            for h in range(self.order):
                comms.add(self.table[self.conj(g, h)][self.inverses[h]])
        return self.generated_subgroup(sorted(comms))

    def describe(self):
        return "%s (order %d)" % (self.name or "group", self.order)


def cyclic(n, name=None):
    if n < 1:
        raise InputError("cyclic group order must be positive")
    names = ["e"] + ["g" if i == 1 else "g%d" % i for i in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return GroupTable(names, table, name=name or "C%d" % n)


def _power_name(base, i):
    if i == 0:
        return ""
    if i == 1:
        return base
    return "%s%d" % (base, i)


def _two_gen_name(i, j):
    s = _power_name("a", i) + ("b" if j else "")
    return s or "e"


def dihedral(n, name=None):
    """Dihedral group of order 2n: a^n = b^2 = (ab)^2 = e, so b a = a^-1 b."""
    if n < 1:
        raise InputError("dihedral parameter must be positive")
    elems = [(i, 0) for i in range(n)] + [(i, 1) for i in range(n)]
    index = {g: k for k, g in enumerate(elems)}

    def mul(x, y):
        (i, j), (k, l) = x, y
        if j == 0:
            return ((i + k) % n, l)
        return ((i - k) % n, 1 - l)

    table = [[index[mul(x, y)] for y in elems] for x in elems]
    names = [_two_gen_name(i, j) for (i, j) in elems]
    return GroupTable(names, table, name=name or "D%d" % n)


def quaternion8(name="Q8"):
    """Quaternion group of order 8: a^4 = e, b^2 = a^2, b a = a^3 b.

    Element order matches the usual listing e, a, a2, b, ab, a3, a2b, a3b.
    """
    order = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (3, 0), (2, 1), (3, 1)]
    index = {g: k for k, g in enumerate(order)}

    def mul(x, y):
        (i, j), (k, l) = x, y
        if j == 0:
            return ((i + k) % 4, l)
        if l == 0:
            return ((i - k) % 4, 1)
        return ((i - k + 2) % 4, 0)  # b^2 = a^2

    table = [[index[mul(x, y)] for y in order] for x in order]
    names = [_two_gen_name(i, j) for (i, j) in order]
    return GroupTable(names, table, name=name)


def direct_product(g, h, name=None, limits=DEFAULT_LIMITS):
    n, m = g.order, h.order
    if n * m > limits.max_group:
        raise LimitError("max_group", limits.max_group, n * m)
    names = ["(%s,%s)" % (g.names[i], h.names[j])
             for i in range(n) for j in range(m)]
    table = [[g.table[i][k] * m + h.table[j][l]
              for k in range(n) for l in range(m)]
             for i in range(n) for j in range(m)]
    return GroupTable(names, table,
                      name=name or "%sx%s" % (g.name or "G", h.name or "H"))
