"""Finite simplicial sets with the same normal-form discipline as the cubical
side: only non-degenerate simplices are stored, and every element is a
SimplexRef (canonical degeneracy word applied to a non-degenerate base).

Monotone maps between finite ordinals are represented as value tuples;
degeneracy words are the collapse sets of canonical surjections.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError


# -- monotone map plumbing ------------------------------------------------------


def mono_compose(outer, inner):
    """outer o inner as value tuples."""
    return tuple(outer[v] for v in inner)


def mono_identity(n):
    return tuple(range(n + 1))


def delta_face(n, j):
    """The injection [n-1] -> [n] missing j."""
    return tuple(v for v in range(n + 1) if v != j)


def surj_from_collapse(D, n):
    """The surjection [n] ->> [n - |D|] collapsing at the positions in D
    (0-indexed: s(i) = s(i+1) exactly for i in D)."""
    vals = [0]
    for i in range(n):
        vals.append(vals[-1] if i in D else vals[-1] + 1)
    return tuple(vals)


def collapse_of_surj(s):
    return tuple(i for i in range(len(s) - 1) if s[i] == s[i + 1])


def epi_mono_factor(f):
    """Factor a monotone map as injection o surjection; returns (mono, epi)."""
    image = sorted(set(f))
    rank = {v: i for i, v in enumerate(image)}
    epi = tuple(rank[v] for v in f)
    return tuple(image), epi


@dataclass(frozen=True, order=True)
class SimplexRef:
    degens: tuple  # collapse positions of the canonical surjection, ascending
    base: str

    def __repr__(self):
        if not self.degens:
            return f"<{self.base}>"
        return f"<s{list(self.degens)}.{self.base}>"


def nd(cell: str) -> SimplexRef:
    return SimplexRef((), cell)


class SimplicialSet:
    def __init__(self, cells: dict, faces: dict, name: str = ""):
        self.cells = dict(cells)  # id -> dimension
        self.faces = dict(faces)  # (id, j) -> SimplexRef
        self.name = name
        self._by_dim = None
        self._act_cache = {}

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

    def dim_of(self, ref: SimplexRef) -> int:
        return self.cells[ref.base] + len(ref.degens)

    def refs_of_dim(self, d: int):
        from itertools import combinations

        out = []
        for e in range(d + 1):
            for c in self.by_dim(e):
                for D in combinations(range(d), d - e):
                    out.append(SimplexRef(D, c))
        return out

    def act(self, ref: SimplexRef, f) -> SimplexRef:
        """Presheaf action of the monotone map f (a value tuple into
        [dim_of(ref)]) on the element ref."""
        key = (ref, f)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        n = self.dim_of(ref)
        if max(f, default=0) > n or len(f) == 0:
            raise ValidationError("monotone map does not match element dimension")
        s = surj_from_collapse(ref.degens, n)
        g = mono_compose(s, f)
        mono, epi = epi_mono_factor(g)
        z = self._apply_injection(ref.base, mono)
        total = mono_compose(surj_from_collapse(z.degens, max(epi)), epi)
        out = SimplexRef(collapse_of_surj(total), z.base)
        self._act_cache[key] = out
        return out

    def _apply_injection(self, cell: str, mono) -> SimplexRef:
        """Action of an injective monotone map [k] -> [m] on a non-degenerate
        m-simplex, peeling elementary faces through the stored data."""
        m = self.cells[cell]
        if len(mono) == m + 1:
            return nd(cell)
        missed = max(v for v in range(m + 1) if v not in set(mono))
        step = self.faces[(cell, missed)]
        rest = tuple(v if v < missed else v - 1 for v in mono)
        return self.act(step, rest)

    def validate(self):
        for (cell, j), ref in self.faces.items():
            if self.dim_of(ref) != self.cells[cell] - 1:
                raise ValidationError(f"face {j} of {cell} has wrong dimension")
        for cell, d in self.cells.items():
            for j in range(d + 1):
                if (cell, j) not in self.faces and d > 0:
                    raise ValidationError(f"missing face ({cell},{j})")
            # simplicial identities d_i d_j = d_{j-1} d_i for i < j through
            # the stored data
            if d >= 2:
                for j in range(d + 1):
                    for i in range(j):
                        left = self.act(self.faces[(cell, j)], delta_face(d - 1, i))
                        right = self.act(self.faces[(cell, i)], delta_face(d - 1, j - 1))
                        if left != right:
                            raise ValidationError(
                                f"simplicial identity fails at {cell} ({i},{j})"
                            )
        return True

    def __repr__(self):
        counts = self.cell_counts()
        body = ", ".join(f"{counts[d]}x{d}" for d in sorted(counts))
        return f"SimplicialSet({self.name or 'anon'}: {body})"


class SimplicialMap:
    def __init__(self, source: SimplicialSet, target: SimplicialSet, assignment: dict):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)

    def apply(self, ref: SimplexRef) -> SimplexRef:
        image = self.assignment[ref.base]
        n = self.source.dim_of(ref)
        base_dim = self.source.cells[ref.base]
        s = surj_from_collapse(ref.degens, n)
        s_img = surj_from_collapse(image.degens, base_dim)
        total = mono_compose(s_img, s)
        return SimplexRef(collapse_of_surj(total), image.base)

    def validate(self):
        for cell, d in self.source.cells.items():
            image = self.assignment[cell]
            if self.target.dim_of(image) != d:
                raise ValidationError(f"assignment of {cell} changes dimension")
            if d == 0:
                continue
            for j in range(d + 1):
                lhs = self.target.act(image, delta_face(d, j))
                rhs = self.apply(self.source.faces[(cell, j)])
                if lhs != rhs:
                    raise ValidationError(f"map fails to commute with face {j} at {cell}")
        return True


def standard_simplex(n: int) -> SimplicialSet:
    from itertools import combinations

    cells = {}
    faces = {}
    for k in range(n + 1):
        for verts in combinations(range(n + 1), k + 1):
            cid = ".".join(map(str, verts))
            cells[cid] = k
            for j in range(k + 1):
                sub = verts[:j] + verts[j + 1 :]
                if sub:
                    faces[(cid, j)] = nd(".".join(map(str, sub)))
    return SimplicialSet(cells, faces, name=f"delta{n}")


def circle() -> SimplicialSet:
    """Delta^1 with its endpoints identified: one vertex, one edge."""
    return SimplicialSet(
        {"v": 0, "s": 1},
        {("s", 0): nd("v"), ("s", 1): nd("v")},
        name="circle",
    )


def wedge_of_intervals(count: int = 2) -> SimplicialSet:
    """Intervals glued at a common basepoint `w`; the free end of interval i
    is `a{i}` and its edge is `e{i}`.  The free end sits at vertex position 0
    (matching the cubical homotopy cells, whose 0-end carries the composite
    and whose 1-end carries the identity)."""
    cells = {"w": 0}
    faces = {}
    for i in range(1, count + 1):
        cells[f"a{i}"] = 0
        cells[f"e{i}"] = 1
        faces[(f"e{i}", 0)] = nd("w")
        faces[(f"e{i}", 1)] = nd(f"a{i}")
    return SimplicialSet(cells, faces, name=f"wedge{count}")


def simplicial_coproduct(X: SimplicialSet, Y: SimplicialSet):
    cells = {}
    faces = {}
    for c, d in X.cells.items():
        cells[f"l:{c}"] = d
    for c, d in Y.cells.items():
        cells[f"r:{c}"] = d
    for (c, j), ref in X.faces.items():
        faces[(f"l:{c}", j)] = SimplexRef(ref.degens, f"l:{ref.base}")
    for (c, j), ref in Y.faces.items():
        faces[(f"r:{c}", j)] = SimplexRef(ref.degens, f"r:{ref.base}")
    return SimplicialSet(cells, faces, name=f"{X.name}+{Y.name}")


def _wl_colors(S: SimplicialSet, rounds: int = 3):
    color = {c: (d,) for c, d in S.cells.items()}
    for _ in range(rounds):
        nxt = {}
        for c, d in S.cells.items():
            sig = [(j, S.faces[(c, j)].degens, color[S.faces[(c, j)].base]) for j in range(d + 1) if d > 0]
            nxt[c] = (color[c], tuple(sig))
        palette = {}
        for c in sorted(nxt, key=lambda c: repr(nxt[c])):
            palette.setdefault(nxt[c], len(palette))
        color = {c: (S.cells[c], palette[nxt[c]]) for c in S.cells}
    return color


def find_simplicial_isomorphism(X: SimplicialSet, Y: SimplicialSet):
    if X.cell_counts() != Y.cell_counts():
        return None
    cx, cy = _wl_colors(X), _wl_colors(Y)
    hist = {}
    for col in cx.values():
        hist[col] = hist.get(col, 0) + 1
    hist2 = {}
    for col in cy.values():
        hist2[col] = hist2.get(col, 0) + 1
    if hist != hist2:
        return None
    by_color = {}
    for c, col in cy.items():
        by_color.setdefault(col, []).append(c)
    for cs in by_color.values():
        cs.sort()
    order = sorted(X.cells, key=lambda c: (-X.cells[c], c))
    fwd, bwd = {}, {}

    def propagate(x, y, trail):
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
            for j in range(d + 1):
                if d == 0:
                    break
                ra, rb = X.faces[(a, j)], Y.faces[(b, j)]
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
