"""Triangulation of cubical sets: the colimit-preserving extension of the
functor sending the n-cube to the n-fold product of the 1-simplex.

Each non-degenerate d-cell contributes one simplex per strictly increasing
vertex chain through {0,1}^d that spans from the bottom corner to the top
corner (the simplices interior to the product triangulation); everything
else is glued along the cubical face data by rewriting chains into the face
cube, so gluing is name-based, never search-based.
"""

from __future__ import annotations

from functools import lru_cache

from .cubical import CubicalSet
from .simplicial import (
    SimplexRef,
    SimplicialSet,
    collapse_of_surj,
    mono_compose,
)


@lru_cache(maxsize=None)
def spanning_chains(d: int):
    """Strictly increasing chains in {0,1}^d from the all-0 to the all-1
    corner, as tuples of bit-tuples.  The maximal ones are the d! lattice
    paths."""
    bottom = (0,) * d
    top = (1,) * d
    if d == 0:
        return (((),),)
    chains = []

    def extend(chain):
        last = chain[-1]
        if last == top:
            chains.append(tuple(chain))
            return
        # any strictly larger vertex can come next
        for v in _vertices(d):
            if v != last and all(a <= b for a, b in zip(last, v)):
                chain.append(v)
                extend(chain)
                chain.pop()

    extend([bottom])
    return tuple(chains)


@lru_cache(maxsize=None)
def _vertices(d: int):
    from itertools import product

    return tuple(product((0, 1), repeat=d))


def _simplex_id(cell: str, chain) -> str:
    return cell + "#" + ";".join("".join(map(str, v)) for v in chain)


def _dedupe(chain):
    """Collapse repeated consecutive vertices; returns (new chain, epi tuple)."""
    out = [chain[0]]
    epi = [0]
    for v in chain[1:]:
        if v != out[-1]:
            out.append(v)
        epi.append(len(out) - 1)
    return tuple(out), tuple(epi)


def _resolve(X: CubicalSet, cell: str, chain):
    """Normal form of an arbitrary monotone vertex chain drawn in the cube of
    a non-degenerate cell: a SimplexRef onto some cell's spanning chain."""
    epi_total = tuple(range(len(chain)))
    while True:
        chain, epi = _dedupe(chain)
        epi_total = mono_compose(epi, epi_total)
        d = len(chain[0])
        bottom, top = (0,) * d, (1,) * d
        if chain[0] == bottom and chain[-1] == top:
            base = _simplex_id(cell, chain)
            return SimplexRef(collapse_of_surj(epi_total), base)
        # find the first constant coordinate and pass to that face's cube
        first, last = chain[0], chain[-1]
        i = next(t for t in range(d) if first[t] == last[t])
        eps = first[i]
        ref = X.faces[(cell, i + 1, eps)]
        drop = set(s - 1 for s in ref.degens)  # 0-indexed directions of the face cube
        new_chain = []
        for v in chain:
            w = v[:i] + v[i + 1 :]
            new_chain.append(tuple(b for t, b in enumerate(w) if t not in drop))
        cell = ref.base
        chain = tuple(new_chain)


def triangulate(X: CubicalSet) -> SimplicialSet:
    cells = {}
    faces = {}
    for c, d in X.cells.items():
        for chain in spanning_chains(d):
            sid = _simplex_id(c, chain)
            k = len(chain) - 1
            cells[sid] = k
            if k == 0:
                continue
            for j in range(k + 1):
                sub = chain[:j] + chain[j + 1 :]
                faces[(sid, j)] = _resolve(X, c, sub)
    return SimplicialSet(cells, faces, name=f"tri({X.name})")
