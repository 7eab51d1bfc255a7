import pytest

from cubeworks.cubical import CubicalSet, nd, standard_cube
from cubeworks.enriched import (
    attach,
    build_E,
    build_H,
    build_P,
    extend_inverse,
    find_functor,
    free_on_graph,
    homotopy_category,
    induced_hcat_functor,
    interval_attachment_space,
    localize,
    mapping_space,
    special_category,
    truncation_inclusion,
    vertex_edge_set,
    word_id,
    PresentationMorphism,
)
from cubeworks.errors import GuardError, ValidationError

U = ("e", "c", "c'", "u")
V = ("e", "c'", "c", "v")


def test_point_category():
    pt = special_category("point")
    t = mapping_space(pt, "0", "0", 3)
    assert t.space.cell_counts() == {0: 1}
    assert t.stable_dims >= {0}


def test_interval_category_maps():
    A = standard_cube(1)
    C = special_category("interval", A)
    m01 = mapping_space(C, "0", "1", 2)
    assert m01.space.cell_counts() == {0: 2, 1: 1}
    m10 = mapping_space(C, "1", "0", 2)
    assert m10.space.cell_counts() == {}
    m00 = mapping_space(C, "0", "0", 2)
    assert m00.space.cell_counts() == {0: 1}


def test_interval_tilde_all_points():
    T = special_category("interval_tilde")
    for x in "01":
        for y in "01":
            t = mapping_space(T, x, y, 3)
            assert t.space.cell_counts() == {0: 1}, (x, y)


def test_free_P_word_cells():
    P = build_P()
    cc = mapping_space(P, "c", "c", 4)
    words = sorted(cc.words.values(), key=len)
    assert words == [(), (U, V), (U, V, U, V)]
    cc2 = mapping_space(P, "c", "c'", 3)
    assert sorted(cc2.words.values(), key=len) == [(U,), (U, V, U)]


def test_mapping_spaces_are_cubical_sets():
    H = build_H()
    for pair in [("c", "c"), ("c", "c'"), ("c'", "c'")]:
        t = mapping_space(H, pair[0], pair[1], 4)
        t.space.validate()


def test_H_contains_homotopy_cell():
    H = build_H()
    t = mapping_space(H, "c", "c", 2)
    h = ("a", 0, "h")
    hid = word_id((h,))
    assert hid in t.space.cells
    f0 = t.space.faces[(hid, 1, 0)]
    f1 = t.space.faces[(hid, 1, 1)]
    assert t.words[f0.base] == (U, V) and not f0.degens
    assert t.words[f1.base] == () and not f1.degens


def test_attach_validates_faces():
    P = build_P()
    bad_space = interval_attachment_space()
    with pytest.raises(ValidationError):
        # boundary words with mismatched endpoints
        attach(P, bad_space, {"h0", "h1"}, "c", "c", {"h0": (U,), "h1": ()})


def test_attach_requires_closed_subobject():
    P = build_P()
    space = interval_attachment_space()
    with pytest.raises(ValidationError):
        # the bare edge without its endpoints is not a subobject
        attach(P, space, {"h"}, "c", "c", {"h": (U, V)})


def test_degenerate_attachment_adds_free_edge():
    P = build_P()
    fresh = attach(P, vertex_edge_set("w"), set(), "c", "c'", {})
    t = mapping_space(fresh, "c", "c'", 1)
    assert t.space.cell_counts() == {0: 2}  # u and the new letter


def test_E_structure():
    E = build_E()
    assert sorted(E.objects) == ["c", "c'"]
    assert set(E.edges[("c", "c'")].cells) == {"u"}
    assert set(E.edges[("c'", "c")].cells) == {"2:u", "v"}
    assert len(E.attachments) == 2
    # second homotopy: f.g2 => id at c'
    att = E.attachments[1]
    assert (att.source, att.target) == ("c'", "c'")
    assert att.boundary_map["2:h0"] == (("e", "c'", "c", "2:u"), U)
    assert att.boundary_map["2:h1"] == ()


def test_localize_interval_is_tilde():
    C = special_category("interval")
    L = localize(C, ("e", "0", "1", "f"))
    for x in "01":
        for y in "01":
            t = mapping_space(L, x, y, 3)
            assert t.space.cell_counts() == {0: 1}, (x, y)


def test_localize_unknown_edge():
    C = special_category("interval")
    with pytest.raises(ValidationError):
        localize(C, ("e", "0", "1", "nope"))


def test_localized_E_word_counts():
    E = build_E()
    f = ("e", "c", "c'", "u")
    EL = localize(E, f)
    t = mapping_space(EL, "c", "c", 2)
    from math import comb

    for d in range(3):
        want = sum(comb(m, d) * 2**m for m in range(d, 3))
        got = len(t.space.by_dim(d))
        assert got == want, (d, got, want)
    t.space.validate()


def test_truncation_monotone():
    H = build_H()
    small = mapping_space(H, "c", "c", 3)
    large = mapping_space(H, "c", "c", 4)
    incl = truncation_inclusion(H, small, large)
    incl.validate()
    for d, n in small.space.cell_counts().items():
        assert large.space.cell_counts().get(d, 0) >= n


def test_hcat_point():
    pt = special_category("point")
    h = homotopy_category(pt, 2)
    assert h.homs[("0", "0")] == [word_id(())]


def test_hcat_tilde():
    T = special_category("interval_tilde")
    h = homotopy_category(T, 3)
    for pair, reps in h.homs.items():
        assert len(reps) == 1
    f_rep = h.homs[("0", "1")][0]
    assert h.is_isomorphism("0", "1", f_rep)


def test_hcat_H_asymmetry():
    H = build_H()
    h = homotopy_category(H, 4)
    assert len(h.homs[("c", "c")]) == 1  # vu = id
    assert len(h.homs[("c", "c'")]) == 1
    assert len(h.homs[("c'", "c")]) == 1
    assert len(h.homs[("c'", "c'")]) == 2  # id and the idempotent uv
    uv = [r for r in h.homs[("c'", "c'")] if r != h.identity("c'")][0]
    assert h.compose("c'", "c'", "c'", uv, uv) == uv
    u_rep = h.homs[("c", "c'")][0]
    assert not h.is_isomorphism("c", "c'", u_rep)


def test_hcat_free_P_refuses():
    P = build_P()
    with pytest.raises(GuardError):
        homotopy_category(P, 3)


def test_hcat_localized_E_is_tilde_shadow():
    E = build_E()
    EL = localize(E, ("e", "c", "c'", "u"))
    h = homotopy_category(EL, 3)
    for pair, reps in h.homs.items():
        assert len(reps) == 1, pair
    f_rep = h.homs[("c", "c'")][0]
    assert h.is_isomorphism("c", "c'", f_rep)


def test_extend_inverse_tilde_degenerate():
    T = special_category("interval_tilde")
    rep = extend_inverse(T, ("e", "0", "1", "t01"), 3)
    assert rep["extends"]
    assert rep["left"]["homotopy"][0] == "degenerate"
    assert rep["right"]["homotopy"][0] == "degenerate"


def test_extend_inverse_H_left_only():
    H = build_H()
    for bound in (3, 4, 5):
        rep = extend_inverse(H, U, bound)
        assert rep["left"] != "inconclusive"
        assert rep["left"]["inverse"] == (V,)
        assert rep["right"] == "inconclusive"
        assert not rep["extends"]


def test_extend_inverse_E_both_sides():
    E = build_E()
    rep = extend_inverse(E, ("e", "c", "c'", "u"), 4)
    assert rep["extends"]
    assert rep["left"]["inverse"] == (("e", "c'", "c", "v"),)
    assert rep["right"]["inverse"] == (("e", "c'", "c", "2:u"),)


def test_factorization_through_tilde():
    E = build_E()
    T = special_category("interval_tilde")
    functors = find_functor(E, T, {"c": "0", "c'": "1"}, bound=3)
    assert len(functors) == 1
    m = functors[0]
    m.validate(bound=3)
    # the walking arrow maps through E to the canonical arrow of the target
    S, w = m.letter_map[("e", "c", "c'", "u")]
    assert not S and w == (("e", "0", "1", "t01"),)


def test_identity_morphism_induces_identity_functor():
    H = build_H()
    ident = PresentationMorphism(
        H,
        H,
        {o: o for o in H.objects},
        {
            l: ((), (l,))
            for l in H.edge_letters() + H.att_letters()
        },
    )
    ident.validate(bound=4)
    h = homotopy_category(H, 4)
    table = induced_hcat_functor(ident, h, h)
    for (x, y), reps in h.homs.items():
        for r in reps:
            assert table[(x, y, r)] == r
