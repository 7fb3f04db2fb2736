#!/usr/bin/env python3
"""Tour the built-in catalog: construct each ring and print its property sheet.

Every decider is exact (exhaustive over the finite carrier), so this doubles
as a smoke test of the whole stack.  The 6561-element group algebra is left
out of the full sweep; its headline fact is shown separately at the end
because multiplication-table work above 1024 elements is skipped by default.
"""

import time

from ringbench import catalog, centrally_essential, full_report, verify_ce_counterexample

SMALL = ("z2q8", "z2d4", "ex52", "ex51(3)", "ext2(4)", "ext2(3)",
         "m2z2", "t2z2", "z8")


def main():
    for name in SMALL:
        ring = catalog(name)
        t0 = time.time()
        report = full_report(ring)
        print("== %s (%d elements, %.2fs) ==" % (name, ring.size, time.time() - t0))
        for line in report.lines():
            print("  " + line)
        print()

    big = catalog("z3q8")
    ce = centrally_essential(big)
    assert not ce.holds and verify_ce_counterexample(big, ce.counterexample)
    print("== z3q8 (%d elements) ==" % big.size)
    print("  centrally_essential=false;witness=%s"
          % big.format_element(ce.counterexample))
    print("  (the same group as z2q8, but over three-element coefficients "
          "the property dies)")


if __name__ == "__main__":
    main()
