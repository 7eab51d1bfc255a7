"""Comparison of the localized mapping monoid with the James construction.

After inverting the canonical morphism of the homotopy-inverse-pair category,
the loop words at the source object reduce to products of two generating
loops with contracting homotopies; triangulation turns the word tensor into
the degreewise free monoid, so the triangulated truncation must match the
independently built James construction on two wedged intervals, window for
window.  This module constructs that bijection explicitly and verifies it
cell by cell (search would be hopeless at tens of thousands of simplices;
the verified constructed bijection is the reported witness)."""

from __future__ import annotations

from .enriched import build_E, localize, mapping_space
from .errors import ValidationError
from .james import james, word_token
from .simplicial import SimplexRef, SimplicialMap, nd
from .triangulate import triangulate


F = ("e", "c", "c'", "u")
F_INV = ("e", "c'", "c", "u_inv")
G1 = ("e", "c'", "c", "v")
G2 = ("e", "c'", "c", "2:u")
H1 = ("a", 0, "h")
H2 = ("a", 1, "2:h")


def localized_E():
    return localize(build_E(), F)


def parse_loop_word(word):
    """Split a reduced loop word at c into James letter groups, each with the
    index of the wedge interval it uses and, for one-dimensional groups, the
    block offset of its coordinate."""
    groups = []
    offset = 0
    i = 0
    n = len(word)
    while i < n:
        letter = word[i]
        if letter == H1:
            groups.append(("h", 1, offset))
            offset += 1
            i += 1
        elif letter == F:
            i += 1
            closed = False
            while i < n and word[i] == H2:
                groups.append(("h", 2, offset))
                offset += 1
                i += 1
            if i < n and word[i] == F_INV:
                i += 1
                closed = True
            elif i < n and word[i] in (G1, G2):
                groups.append(("v", 1 if word[i] == G1 else 2))
                i += 1
                closed = True
            if not closed:
                raise ValidationError(f"unparseable loop word {word}")
        else:
            raise ValidationError(f"unparseable loop word {word}")
    return groups


def translate_simplex(word, chain):
    """The James word matching a simplex (spanning chain) of the triangulated
    word cell."""
    k = len(chain) - 1
    letters = []
    for group in parse_loop_word(word):
        if group[0] == "v":
            _, idx = group
            letters.append(SimplexRef(tuple(range(k)), f"a{idx}"))
        else:
            _, idx, t = group
            bits = tuple(v[t] for v in chain)
            degens = tuple(j for j in range(k) if bits[j] == bits[j + 1])
            if bits == (0,) * (k + 1):
                letters.append(SimplexRef(tuple(range(k)), f"a{idx}"))
            elif bits == (1,) * (k + 1):
                continue  # basepoint letter, deleted
            else:
                letters.append(SimplexRef(degens, f"e{idx}"))
    return word_token(tuple(letters))


def compare_with_james(bound: int):
    """Build the triangulated localized mapping space and the James
    construction at the same window, construct the translation, and verify
    it is an isomorphism.  Returns a report with the cell counts and the
    verified bijection size."""
    from .simplicial import wedge_of_intervals

    EL = localized_E()
    trunc = mapping_space(EL, "c", "c", bound, with_stability=False)
    tri = triangulate(trunc.space)
    J = james(wedge_of_intervals(2), "w", bound)

    assignment = {}
    used = {}
    for sid, d in tri.cells.items():
        cell, chain_part = sid.split("#", 1)
        word = trunc.words[cell]
        chain = tuple(
            tuple(int(b) for b in v) if v else ()
            for v in (chain_part.split(";") if chain_part else [""])
        )
        target = translate_simplex(word, chain)
        if target not in J.cells:
            raise ValidationError(f"translated simplex {target} missing from James side")
        if J.cells[target] != d:
            raise ValidationError(f"dimension clash translating {sid}")
        if target in used:
            raise ValidationError(f"translation not injective at {target}")
        used[target] = sid
        assignment[sid] = nd(target)

    surjective = len(used) == len(J.cells)
    m = SimplicialMap(tri, J, assignment)
    m.validate()
    return {
        "bound": bound,
        "mapping_space_cells": trunc.space.cell_counts(),
        "triangulated_cells": tri.cell_counts(),
        "james_cells": J.cell_counts(),
        "bijective": surjective,
        "isomorphism_size": len(assignment),
        "pass": surjective,
    }
