#!/usr/bin/env python3
"""Growth of the truncated James construction.

Prints, for each word bound, the cell counts and Betti numbers of the free
monoid on two wedged intervals (contractible in the stable range) and on the
circle (the loops of the 2-sphere: one copy of Z per degree).  The contrast
is the point of keeping left and right homotopy inverses distinct when
formally inverting a morphism."""

import sys

from cubeworks.chains import homology, simplicial_chains
from cubeworks.james import james
from cubeworks.simplicial import circle, wedge_of_intervals


def table(name, X, base, max_bound):
    print(f"== {name} ==")
    for bound in range(1, max_bound + 1):
        J = james(X, base, bound)
        rep = homology(simplicial_chains(J))
        counts = J.cell_counts()
        betti = [rep.betti(d) for d in range(bound)]
        print(
            f"  L={bound}: cells={[counts.get(d, 0) for d in range(bound + 1)]} "
            f"betti(deg<L)={betti}"
        )
    print()


def main():
    max_bound = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    table("two wedged intervals", wedge_of_intervals(2), "w", max_bound)
    table("circle", circle(), "v", max_bound)


if __name__ == "__main__":
    main()
