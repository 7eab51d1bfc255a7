"""Finite cubical sets: presheaves on the cube category.

Only non-degenerate cells are stored.  Every presheaf element is a CellRef:
a strictly increasing word of degenerate coordinate directions applied to a
non-degenerate base cell (the unique Eilenberg-Zilber-style decomposition,
which holds for this cube category and is validated on representables in the
test suite).  The presheaf action of an arbitrary cube-category morphism is
computed by rewriting through the degeneracy word, using cube-category
composition as the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import cubes
from .cubes import CubeMap, compose, face, projection_dropping, split_projection_face
from .errors import GuardError, ValidationError


@dataclass(frozen=True, order=True)
class CellRef:
    """A possibly-degenerate element: degeneracy word applied to a base cell.

    ``degens`` lists the ambient coordinate directions (1-indexed, strictly
    increasing) dropped by the underlying projection; the element lives in
    dimension dim(base) + len(degens).
    """

    degens: tuple
    base: str

    def __repr__(self):
        if not self.degens:
            return f"<{self.base}>"
        return f"<s{list(self.degens)}.{self.base}>"


def nd(cell: str) -> CellRef:
    return CellRef((), cell)


class CubicalSet:
    """A finite cubical set presented by its non-degenerate cells and their faces."""

    def __init__(self, cells: dict, faces: dict, name: str = ""):
        self.cells = dict(cells)  # cell id -> dimension
        self.faces = dict(faces)  # (cell id, k, eps) -> CellRef
        self.name = name
        self._by_dim = None
        self._act_cache = {}

    # -- basic structure ---------------------------------------------------

    @property
    def dim_bound(self) -> int:
        return max(self.cells.values(), default=-1)

    def by_dim(self, d: int):
        if self._by_dim is None:
            table = {}
            for c, cd in self.cells.items():
                table.setdefault(cd, []).append(c)
            for cs in table.values():
                cs.sort()
            self._by_dim = table
        return self._by_dim.get(d, [])

    def cell_counts(self) -> dict:
        counts = {}
        for _, d in self.cells.items():
            counts[d] = counts.get(d, 0) + 1
        return counts

    def dim_of(self, ref: CellRef) -> int:
        return self.cells[ref.base] + len(ref.degens)

    def refs_of_dim(self, d: int):
        """All elements of dimension d, degenerate ones included."""
        out = []
        for e in range(d + 1):
            for c in self.by_dim(e):
                for degens in combinations(range(1, d + 1), d - e):
                    out.append(CellRef(degens, c))
        return out

    # -- presheaf action ---------------------------------------------------

    def degenerate(self, ref: CellRef, extra) -> CellRef:
        """Apply a further degeneracy word (dropped directions in the larger
        ambient dimension) to an element."""
        if not extra:
            return ref
        n = self.dim_of(ref) + len(extra)
        p_extra = projection_dropping(n, extra)
        p_old = projection_dropping(n - len(extra), ref.degens)
        total = compose(p_old, p_extra)
        return CellRef(total.dropped_vars, ref.base)

    def act(self, ref: CellRef, f: CubeMap) -> CellRef:
        """The presheaf action of f on an element of dimension f.target_dim."""
        key = (ref, f)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        if self.dim_of(ref) != f.target_dim:
            raise ValidationError("element dimension does not match map target")
        p_w = projection_dropping(f.target_dim, ref.degens)
        g = compose(p_w, f)
        delta, proj = split_projection_face(g)
        z = self._apply_face_part(ref.base, delta)
        p_z = projection_dropping(proj.target_dim, z.degens)
        total = compose(p_z, proj)
        out = CellRef(total.dropped_vars, z.base)
        self._act_cache[key] = out
        return out

    def _apply_face_part(self, cell: str, delta: CubeMap) -> CellRef:
        """Action of a face-type map (every variable used) on a non-degenerate cell."""
        if delta.is_face_type() and delta.source_dim == delta.target_dim:
            return nd(cell)
        for pos, slot in enumerate(delta.slots):
            if slot[0] == "c":
                k, eps = pos + 1, slot[1]
                break
        rest = CubeMap(
            delta.source_dim,
            delta.target_dim - 1,
            delta.slots[: k - 1] + delta.slots[k:],
        )
        step = self.faces[(cell, k, eps)]
        return self.act(step, rest)

    # -- validation --------------------------------------------------------

    def validate(self):
        for (cell, k, eps), ref in self.faces.items():
            if cell not in self.cells:
                raise ValidationError(f"face data on unknown cell {cell}")
            if ref.base not in self.cells:
                raise ValidationError(f"face of {cell} points at unknown {ref.base}")
            d = self.cells[cell]
            if not (1 <= k <= d and eps in (0, 1)):
                raise ValidationError(f"bad face key {(cell, k, eps)}")
            if self.dim_of(ref) != d - 1:
                raise ValidationError(f"face of {cell} has wrong dimension")
        for cell, d in self.cells.items():
            for k in range(1, d + 1):
                for eps in (0, 1):
                    if (cell, k, eps) not in self.faces:
                        raise ValidationError(f"missing face {(cell, k, eps)}")
            # cubical identities: the two ways of taking double faces through
            # the stored data must agree (rewriting through degeneracy words
            # uses cube-category composition as the oracle)
            for k in range(1, d + 1):
                for j in range(1, k):
                    for eps in (0, 1):
                        for eta in (0, 1):
                            left = self.act(self.faces[(cell, k, eps)], face(d - 1, j, eta))
                            right = self.act(self.faces[(cell, j, eta)], face(d - 1, k - 1, eps))
                            if left != right:
                                raise ValidationError(
                                    f"cubical identity fails at {cell}, ({j},{eta}),({k},{eps})"
                                )
        return True

    def __repr__(self):
        counts = self.cell_counts()
        body = ", ".join(f"{counts[d]}x{d}" for d in sorted(counts))
        return f"CubicalSet({self.name or 'anon'}: {body})"


class CubicalMap:
    """A natural transformation, stored on non-degenerate cells only."""

    def __init__(self, source: CubicalSet, target: CubicalSet, assignment: dict):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)  # source cell id -> CellRef in target

    def apply(self, ref: CellRef) -> CellRef:
        image = self.assignment[ref.base]
        return self.target.degenerate(image, ref.degens)

    def validate(self):
        for cell, d in self.source.cells.items():
            if cell not in self.assignment:
                raise ValidationError(f"no assignment for {cell}")
            image = self.assignment[cell]
            if self.target.dim_of(image) != d:
                raise ValidationError(f"assignment of {cell} changes dimension")
            for k in range(1, d + 1):
                for eps in (0, 1):
                    lhs = self.target.act(image, face(d, k, eps))
                    rhs = self.apply(self.source.faces[(cell, k, eps)])
                    if lhs != rhs:
                        raise ValidationError(
                            f"map does not commute with face ({k},{eps}) at {cell}"
                        )
        return True

    def compose_with(self, other: "CubicalMap") -> "CubicalMap":
        """self after other."""
        if other.target is not self.source:
            raise ValidationError("composition mismatch")
        return CubicalMap(
            other.source,
            self.target,
            {c: self.apply(ref) for c, ref in other.assignment.items()},
        )

    def __repr__(self):
        return f"CubicalMap({self.source!r} -> {self.target!r})"


def identity_map(X: CubicalSet) -> CubicalMap:
    return CubicalMap(X, X, {c: nd(c) for c in X.cells})


# -- representables and their subobjects ------------------------------------


def _slot_id(m: CubeMap) -> str:
    return "".join("*" if k == "v" else str(v) for k, v in m.slots) or "pt"


def standard_cube(n: int, guard: int = 8) -> CubicalSet:
    """The representable cubical set on the n-cube.  Non-degenerate k-cells are
    the face-type maps k-cube -> n-cube; faces are computed by composition."""
    if n > guard:
        raise GuardError(f"dimension {n} exceeds guard {guard}")
    cells = {}
    faces = {}
    table = {}
    for k in range(n + 1):
        for m in cubes.face_type_maps(k, n):
            cid = _slot_id(m)
            cells[cid] = k
            table[cid] = m
    for cid, m in table.items():
        k = m.source_dim
        for i in range(1, k + 1):
            for eps in (0, 1):
                composite = compose(m, face(k, i, eps))
                faces[(cid, i, eps)] = nd(_slot_id(composite))
    X = CubicalSet(cells, faces, name=f"cube{n}")
    return X


def subobject(X: CubicalSet, keep, name: str = "") -> tuple:
    """The cubical subset on the given cells, with its inclusion map.  The set
    must be closed under taking face bases."""
    keep = set(keep)
    cells = {c: d for c, d in X.cells.items() if c in keep}
    faces = {}
    for (c, k, eps), ref in X.faces.items():
        if c in keep:
            if ref.base not in keep:
                raise ValidationError(f"{c} has face outside the subset")
            faces[(c, k, eps)] = ref
    S = CubicalSet(cells, faces, name=name)
    incl = CubicalMap(S, X, {c: nd(c) for c in cells})
    return S, incl


def empty_set() -> CubicalSet:
    return CubicalSet({}, {}, name="empty")


def boundary(n: int) -> tuple:
    """The boundary of the n-cube with its inclusion: every cell except the top
    one.  (The acceptance suite independently re-derives this object as the
    n-fold pushout-product of the endpoint inclusions.)"""
    X = standard_cube(n)
    if n == 0:
        B = empty_set()
        return B, CubicalMap(B, X, {})
    top = "*" * n
    keep = [c for c in X.cells if c != top]
    B, incl = subobject(X, keep, name=f"boundary{n}")
    return B, incl


def open_box(n: int, k: int, eps: int) -> tuple:
    """The open box: the boundary of the n-cube with the face opposite to
    (k, eps) removed, i.e. the (k, 1-eps) face.  The removal convention is
    derived from the pushout-product computation in the tests, not assumed."""
    if not 1 <= k <= n:
        raise ValidationError(f"box index {k} out of range")
    X = standard_cube(n)
    top = "*" * n
    removed = top[: k - 1] + str(1 - eps) + top[k:]
    keep = [c for c in X.cells if c not in (top, removed)]
    B, incl = subobject(X, keep, name=f"box{n}_{k}_{eps}")
    return B, incl


# -- colimits ----------------------------------------------------------------


def coproduct(X: CubicalSet, Y: CubicalSet) -> tuple:
    cells = {}
    faces = {}
    for c, d in X.cells.items():
        cells[f"l:{c}"] = d
    for c, d in Y.cells.items():
        cells[f"r:{c}"] = d
    for (c, k, eps), ref in X.faces.items():
        faces[(f"l:{c}", k, eps)] = CellRef(ref.degens, f"l:{ref.base}")
    for (c, k, eps), ref in Y.faces.items():
        faces[(f"r:{c}", k, eps)] = CellRef(ref.degens, f"r:{ref.base}")
    Z = CubicalSet(cells, faces, name=f"{X.name}+{Y.name}")
    inl = CubicalMap(X, Z, {c: nd(f"l:{c}") for c in X.cells})
    inr = CubicalMap(Y, Z, {c: nd(f"r:{c}") for c in Y.cells})
    return Z, inl, inr


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            p = self.find(p)
            self.parent[x] = p
        return p

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the lexicographically smaller root for determinism
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def _compose_drops(outer_dim: int, inner_degens, resolved: CellRef) -> CellRef:
    """sigma_{inner} applied to an already-resolved element, in ambient outer_dim."""
    p1 = projection_dropping(outer_dim, inner_degens)
    p2 = projection_dropping(outer_dim - len(inner_degens), resolved.degens)
    total = compose(p2, p1)
    return CellRef(total.dropped_vars, resolved.base)


def pushout(f: CubicalMap, g: CubicalMap) -> tuple:
    """Pushout of X <-f- A -g-> Y, computed dimensionwise bottom-up.

    Union-find identifies elements (degenerate ones included); a class that
    contains a degenerate member is re-pointed at the degeneracy of its
    resolved base, per the Eilenberg-Zilber normal form.
    """
    if f.source is not g.source and (
        f.source.cells != g.source.cells or f.source.faces != g.source.faces
    ):
        raise ValidationError("pushout requires a shared source")
    A, X, Y = f.source, f.target, g.target
    N = max(X.dim_bound, Y.dim_bound, A.dim_bound, 0)

    uf = _UnionFind()
    idents = {}  # dim -> list of (token, token)
    for a, da in A.cells.items():
        fa, ga = f.assignment[a], g.assignment[a]
        for n in range(da, N + 1):
            for degens in combinations(range(1, n + 1), n - da):
                left = ("X", X.degenerate(fa, degens))
                right = ("Y", Y.degenerate(ga, degens))
                idents.setdefault(n, []).append((left, right))

    cells = {}
    faces = {}
    resolve = {"X": {}, "Y": {}}  # side -> cell id -> CellRef over result

    def resolved_ref(side, ref: CellRef, ambient: int) -> CellRef:
        r = resolve[side][ref.base]
        return _compose_drops(ambient, ref.degens, r)

    for n in range(N + 1):
        for left, right in idents.get(n, []):
            uf.union(left, right)
        tokens = set()
        for side, Z in (("X", X), ("Y", Y)):
            for c in Z.by_dim(n):
                tokens.add((side, nd(c)))
        tokens |= {t for t in uf.parent if t[1].base in (X.cells if t[0] == "X" else Y.cells)
                   and (X if t[0] == "X" else Y).dim_of(t[1]) == n}
        classes = {}
        for t in tokens:
            classes.setdefault(uf.find(t), []).append(t)
        for root in sorted(classes, key=lambda t: (t[0], t[1].degens, t[1].base)):
            members = classes[root]
            degenerate_members = [m for m in members if m[1].degens]
            plain = [m for m in members if not m[1].degens]
            if degenerate_members:
                side0, ref0 = degenerate_members[0]
                target = resolved_ref(side0, ref0, n)
                for side, ref in degenerate_members[1:]:
                    other = resolved_ref(side, ref, n)
                    if other != target:
                        raise ValidationError(
                            "pushout broke the unique degeneracy decomposition"
                        )
                for side, ref in plain:
                    resolve[side][ref.base] = target
            else:
                side0, ref0 = min(plain, key=lambda t: (t[0], t[1].base))
                new_id = f"{side0}:{ref0.base}"
                cells[new_id] = n
                for side, ref in plain:
                    resolve[side][ref.base] = nd(new_id)
                Z = X if side0 == "X" else Y
                for k in range(1, n + 1):
                    for eps in (0, 1):
                        fr = Z.faces[(ref0.base, k, eps)]
                        faces[(new_id, k, eps)] = resolved_ref(side0, fr, n - 1)

    P = CubicalSet(cells, faces, name=f"po({X.name},{Y.name})")
    leg_x = CubicalMap(X, P, {c: resolve["X"][c] for c in X.cells})
    leg_y = CubicalMap(Y, P, {c: resolve["Y"][c] for c in Y.cells})
    return P, leg_x, leg_y


# -- Day convolution tensor ---------------------------------------------------


def _pair_id(x: str, y: str) -> str:
    return f"{x}|{y}"


def tensor(X: CubicalSet, Y: CubicalSet) -> CubicalSet:
    """Day convolution: non-degenerate cells are pairs, dimensions add, faces
    act blockwise with degeneracy words shifted into the correct block."""
    cells = {}
    faces = {}
    for x, dx in X.cells.items():
        for y, dy in Y.cells.items():
            cid = _pair_id(x, y)
            cells[cid] = dx + dy
            for k in range(1, dx + 1):
                for eps in (0, 1):
                    ref = X.faces[(x, k, eps)]
                    faces[(cid, k, eps)] = CellRef(ref.degens, _pair_id(ref.base, y))
            for k in range(1, dy + 1):
                for eps in (0, 1):
                    ref = Y.faces[(y, k, eps)]
                    base_dim_x = dx
                    shifted = tuple(i + base_dim_x for i in ref.degens)
                    faces[(cid, dx + k, eps)] = CellRef(shifted, _pair_id(x, ref.base))
    return CubicalSet(cells, faces, name=f"{X.name}(x){Y.name}")


def tensor_elements(X: CubicalSet, xref: CellRef, Y: CubicalSet, yref: CellRef) -> CellRef:
    """The element xref (x) yref of the tensor, in normal form."""
    px = projection_dropping(X.dim_of(xref), xref.degens)
    py = projection_dropping(Y.dim_of(yref), yref.degens)
    total = cubes.tensor_map(px, py)
    return CellRef(total.dropped_vars, _pair_id(xref.base, yref.base))


def tensor_maps(f: CubicalMap, g: CubicalMap, source=None, target=None) -> CubicalMap:
    TX = source if source is not None else tensor(f.source, g.source)
    TY = target if target is not None else tensor(f.target, g.target)
    assignment = {}
    for x in f.source.cells:
        for y in g.source.cells:
            assignment[_pair_id(x, y)] = tensor_elements(
                f.target, f.assignment[x], g.target, g.assignment[y]
            )
    return CubicalMap(TX, TY, assignment)


def pushout_product(f: CubicalMap, g: CubicalMap) -> CubicalMap:
    """The induced map  A1(x)B2  u_{A1(x)A2}  B1(x)A2  ->  B1(x)B2."""
    AA = tensor(f.source, g.source)
    AB = tensor(f.source, g.target)
    BA = tensor(f.target, g.source)
    BB = tensor(f.target, g.target)
    a_b = tensor_maps(identity_map(f.source), g, AA, AB)
    b_a = tensor_maps(f, identity_map(g.source), AA, BA)
    P, _, _ = pushout(a_b, b_a)
    fb = tensor_maps(f, identity_map(g.target), AB, BB)
    bg = tensor_maps(identity_map(f.target), g, BA, BB)
    assignment = {}
    for c in P.cells:
        side, orig = c.split(":", 1)
        assignment[c] = fb.assignment[orig] if side == "X" else bg.assignment[orig]
    return CubicalMap(P, BB, assignment)


def interval_inclusion() -> CubicalMap:
    """The generating cofibration i: two points -> interval."""
    I = standard_cube(1)
    two, _, _ = coproduct(standard_cube(0), standard_cube(0))
    return CubicalMap(two, I, {"l:pt": nd("0"), "r:pt": nd("1")})


def endpoint_inclusion(eps: int) -> CubicalMap:
    """The generating acyclic cofibration j^eps: point -> interval."""
    I = standard_cube(1)
    P = standard_cube(0)
    return CubicalMap(P, I, {"pt": nd(str(eps))})


def empty_to_point() -> CubicalMap:
    return CubicalMap(empty_set(), standard_cube(0), {})


# -- map enumeration, lifting, isomorphism ------------------------------------


def enumerate_maps(X: CubicalSet, Y: CubicalSet, guard: int = 10**7):
    """All cubical maps X -> Y, by dimension-increasing backtracking."""
    order = sorted(X.cells, key=lambda c: (X.cells[c], c))
    candidates = {}
    space = 1
    for c in order:
        cands = Y.refs_of_dim(X.cells[c])
        candidates[c] = cands
        space *= max(len(cands), 1)
        if space > guard:
            raise GuardError(f"search space exceeds guard {guard}")
    out = []

    def fits(c, ref, partial):
        d = X.cells[c]
        for k in range(1, d + 1):
            for eps in (0, 1):
                fr = X.faces[(c, k, eps)]
                expected = Y.degenerate(partial[fr.base], fr.degens)
                if Y.act(ref, face(d, k, eps)) != expected:
                    return False
        return True

    def rec(i, partial):
        if i == len(order):
            out.append(CubicalMap(X, Y, dict(partial)))
            return
        c = order[i]
        for ref in candidates[c]:
            if fits(c, ref, partial):
                partial[c] = ref
                rec(i + 1, partial)
                del partial[c]

    rec(0, {})
    return out


def extend_map(
    whole: CubicalSet,
    Y: CubicalSet,
    partial_map: dict,
    missing,
):
    """Find one extension of a partial assignment (on the subobject) to the
    listed missing cells of `whole`, or None.  Cell ids of the subobject must
    coincide with their images in `whole`."""
    order = sorted(missing, key=lambda c: (whole.cells[c], c))

    def fits(c, ref, assign):
        d = whole.cells[c]
        for k in range(1, d + 1):
            for eps in (0, 1):
                fr = whole.faces[(c, k, eps)]
                if fr.base not in assign:
                    return True  # deferred; only happens if faces are missing too
                expected = Y.degenerate(assign[fr.base], fr.degens)
                if Y.act(ref, face(d, k, eps)) != expected:
                    return False
        return True

    assign = dict(partial_map)

    def rec(i):
        if i == len(order):
            return True
        c = order[i]
        for ref in Y.refs_of_dim(whole.cells[c]):
            if fits(c, ref, assign):
                assign[c] = ref
                if rec(i + 1):
                    return True
                del assign[c]
        return False

    if rec(0):
        return CubicalMap(whole, Y, assign)
    return None


def kan_check(X: CubicalSet, max_dim: int, guard: int = 10**7) -> dict:
    """For each open box up to max_dim, test every map of the box into X for an
    extension to the full cube.  Returns a report with the first failing
    lifting problem as witness."""
    report = {"max_dim": max_dim, "families": [], "pass": True, "witness": None}
    for n in range(1, max_dim + 1):
        cube_n = standard_cube(n)
        top = "*" * n
        for k in range(1, n + 1):
            for eps in (0, 1):
                box, incl = open_box(n, k, eps)
                removed = top[: k - 1] + str(1 - eps) + top[k:]
                maps = enumerate_maps(box, X, guard=guard)
                filled = 0
                failing = None
                for m in maps:
                    ext = extend_map(cube_n, X, m.assignment, [removed, top])
                    if ext is not None:
                        filled += 1
                    elif failing is None:
                        failing = {
                            c: repr(ref) for c, ref in sorted(m.assignment.items())
                        }
                entry = {
                    "n": n,
                    "k": k,
                    "eps": eps,
                    "boxes": len(maps),
                    "filled": filled,
                }
                report["families"].append(entry)
                if failing is not None and report["witness"] is None:
                    report["witness"] = {"n": n, "k": k, "eps": eps, "box_map": failing}
                if filled < len(maps):
                    report["pass"] = False
    return report


def _wl_colors(X: CubicalSet, rounds: int = 3):
    color = {c: (d,) for c, d in X.cells.items()}
    for _ in range(rounds):
        nxt = {}
        for c, d in X.cells.items():
            sig = []
            for k in range(1, d + 1):
                for eps in (0, 1):
                    ref = X.faces[(c, k, eps)]
                    sig.append((k, eps, ref.degens, color[ref.base]))
            nxt[c] = (color[c], tuple(sig))
        # canonicalize to small ints for compactness
        palette = {}
        for c in sorted(nxt, key=lambda c: repr(nxt[c])):
            palette.setdefault(nxt[c], len(palette))
        color = {c: (X.cells[c], palette[nxt[c]]) for c in X.cells}
    return color


def find_isomorphism(X: CubicalSet, Y: CubicalSet):
    """Explicit search for a structure-preserving bijection on non-degenerate
    cells.  Returns the bijection dict or None."""
    if X.cell_counts() != Y.cell_counts():
        return None
    cx, cy = _wl_colors(X), _wl_colors(Y)
    hist_x, hist_y = {}, {}
    for c, col in cx.items():
        hist_x[col] = hist_x.get(col, 0) + 1
    for c, col in cy.items():
        hist_y[col] = hist_y.get(col, 0) + 1
    if hist_x != hist_y:
        return None
    by_color = {}
    for c, col in cy.items():
        by_color.setdefault(col, []).append(c)
    for cs in by_color.values():
        cs.sort()
    order = sorted(X.cells, key=lambda c: (-X.cells[c], c))
    fwd, bwd = {}, {}

    def propagate(x, y, trail):
        """Assign x -> y and force face assignments; returns False on clash."""
        stack = [(x, y)]
        while stack:
            a, b = stack.pop()
            if a in fwd:
                if fwd[a] != b:
                    return False
                continue
            if b in bwd or cx[a] != cy[b]:
                return False
            fwd[a] = b
            bwd[b] = a
            trail.append((a, b))
            d = X.cells[a]
            for k in range(1, d + 1):
                for eps in (0, 1):
                    ra = X.faces[(a, k, eps)]
                    rb = Y.faces[(b, k, eps)]
                    if ra.degens != rb.degens:
                        return False
                    stack.append((ra.base, rb.base))
        return True

    def rec(i):
        while i < len(order) and order[i] in fwd:
            i += 1
        if i == len(order):
            return True
        x = order[i]
        for y in by_color[cx[x]]:
            if y in bwd:
                continue
            trail = []
            if propagate(x, y, trail) and rec(i + 1):
                return True
            for a, b in trail:
                del fwd[a]
                del bwd[b]
        return False

    if rec(0):
        return dict(fwd)
    return None


def iterated_pushout_product(maps) -> CubicalMap:
    """Left-associated pushout-product of a list of maps."""
    out = maps[0]
    for m in maps[1:]:
        out = pushout_product(out, m)
    return out
