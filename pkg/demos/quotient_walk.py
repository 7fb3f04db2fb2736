#!/usr/bin/env python3
"""Walk through the three quotient stories behind the claim suite.

1. The 256-element quaternion group algebra is centrally essential, yet
   factoring out the two-element ideal generated by the sum of all group
   elements destroys the property; a concrete coset witnesses the loss.
2. The 128-element jet ring is centrally essential but has seven distinct
   minimal nonzero ideals, and they are not interchangeable: one gives a
   commutative quotient, another gives a quotient that is not even
   centrally essential.
3. The 256-element exterior-square ring keeps the property through every
   one of its proper quotients: a noncommutative ring all of whose factor
   rings stay centrally essential.
"""

from ringbench import (
    catalog, centrally_essential, completely_centrally_essential,
    group_sum_ideal, ideal_lattice, is_commutative, quotient,
    verify_ce_counterexample,
)


def coeffs(ring, **named):
    x = list(ring.zero)
    for name, c in named.items():
        x[ring.basis_names.index(name)] = c
    return tuple(x)


def main():
    print("-- 1. group algebra loses the property in a quotient --")
    r = catalog("z2q8")
    print("z2q8: size %d, centrally essential: %s"
          % (r.size, centrally_essential(r).holds))
    q = quotient(r, group_sum_ideal(r))
    coset = q.project(coeffs(r, e=1, a=1, b=1, ab=1))
    assert verify_ce_counterexample(q, coset)
    print("quotient by the group-sum ideal: size %d, centrally essential: %s"
          % (q.size, centrally_essential(q).holds))
    print("witness coset: %s (no nonzero central x gives a nonzero central "
          "product)" % r.format_element(coeffs(r, e=1, a=1, b=1, ab=1)))

    print()
    print("-- 2. jet ring: minimal ideals disagree --")
    r = catalog("ex52")
    mins = ideal_lattice(r).minimal_nonzero()
    print("ex52: size %d, centrally essential: %s, minimal nonzero ideals: %d"
          % (r.size, centrally_essential(r).holds, len(mins)))
    for ideal in mins:
        q = quotient(r, ideal)
        print("  span{%s}: quotient commutative=%s, centrally essential=%s"
              % (r.format_element(sorted(ideal.elements)[1]),
                 is_commutative(q).holds, centrally_essential(q).holds))
    print("so the ring has no least ideal, and one factor ring drops the "
          "property entirely")

    print()
    print("-- 3. a noncommutative ring that survives every quotient --")
    r = catalog("ext2(4)")
    rep = completely_centrally_essential(r)
    print("ext2(4): size %d, commutative: %s, every factor ring centrally "
          "essential: %s (%d proper quotients checked)"
          % (r.size, is_commutative(r).holds, rep.holds, rep.checked_ideals))


if __name__ == "__main__":
    main()
