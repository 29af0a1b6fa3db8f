"""Torus-fixed components of loop-rotation type: the Borel B_lambda,
the Hessenberg space V_lambda^+, dimension, isolatedness, attracting cells,
and Poincare polynomials.

Cell dimensions at the |W| fixed points are attracting-cell tangent counts
against the height functional, which never vanishes on a root, so no generic
perturbation is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootdata import RootDatum, WeylElement


@dataclass(frozen=True)
class HessenbergDatum:
    lam: tuple[int, ...]
    borel_roots: tuple[tuple[int, ...], ...]
    hess_roots: tuple[tuple[int, ...], ...]
    dim: int
    isolated: bool
    cells: tuple[int, ...]  # multiset of cell dimensions, sorted

    def betti(self):
        out = [0] * (self.dim + 1)
        for c in self.cells:
            out[c] += 1
        return tuple(out)

    def to_json(self):
        return {
            "lambda": list(self.lam),
            "dim": self.dim,
            "isolated": self.isolated,
            "betti": list(self.betti()),
            "borel_roots": [list(r) for r in self.borel_roots],
            "hess_roots": [list(r) for r in self.hess_roots],
        }


def borel_roots(rd: RootDatum, lam):
    """Roots of B_lambda: {a > 0 : <lam,a> <= 0} plus {a < 0 : <lam,a> <= -1}."""
    out = []
    for a in rd.positive_roots:
        p = rd.pair(a, lam)
        if p <= 0:
            out.append(a)
        if -p <= -1:
            out.append(tuple(-x for x in a))
    assert len(out) == len(rd.positive_roots), "B_lambda is not a Borel"
    return tuple(out)


def hessenberg_roots(rd: RootDatum, lam):
    """Roots of V_lambda^+: {a > 0 : <lam,a> <= 1} plus {a < 0 : <lam,a> <= 0}."""
    out = []
    for a in rd.positive_roots:
        p = rd.pair(a, lam)
        if p <= 1:
            out.append(a)
        if -p <= 0:
            out.append(tuple(-x for x in a))
    return tuple(out)


def hessenberg_dim(rd: RootDatum, lam) -> int:
    return sum(1 for a in rd.positive_roots if rd.pair(a, lam) in (0, 1))


def is_isolated(rd: RootDatum, lam) -> bool:
    pairings = [rd.pair(a, lam) for a in rd.positive_roots]
    return all(p != 0 for p in pairings) and all(p != 1 for p in pairings)


def cell_dimensions(rd: RootDatum, lam):
    """Attracting-cell dimension at each Weyl fixed point.

    The moving directions are the roots of V_lambda^+ not in B_lambda; the
    cell at w counts those sent by w to the positive side of the height
    functional (a regular dominant covector with no ties on roots).
    """
    bset = set(borel_roots(rd, lam))
    diff = [a for a in hessenberg_roots(rd, lam) if a not in bset]
    out = {}
    for w in rd.weyl_elements():
        c = 0
        for a in diff:
            h = sum(rd.act_on_root(w, a))
            assert h != 0, "height functional vanished on a root"
            if h > 0:
                c += 1
        out[w] = c
    return out


def poincare_polynomial(rd: RootDatum, lam):
    """Coefficient list in q: coefficient k is the number of k-cells."""
    cells = cell_dimensions(rd, lam)
    top = max(cells.values()) if cells else 0
    out = [0] * (top + 1)
    for c in cells.values():
        out[c] += 1
    return out


def hessenberg_datum(rd: RootDatum, lam) -> HessenbergDatum:
    b = borel_roots(rd, lam)
    h = hessenberg_roots(rd, lam)
    dim = hessenberg_dim(rd, lam)
    assert dim == len(h) - len(b)
    cells = tuple(sorted(cell_dimensions(rd, lam).values()))
    assert max(cells) == dim
    return HessenbergDatum(tuple(lam), b, h, dim, is_isolated(rd, lam), cells)


def gl_coweight(rd: RootDatum, entries):
    """Convert GL_n coordinates (l_1,...,l_n) to a type-A coweight.

    The simple-root pairings are l_{i+1} - l_i, matching the orientation in
    which the diagonal coweight acts on lower-triangular root spaces with
    positive weights.
    """
    if rd.type_label != "A" or len(entries) != rd.rank + 1:
        raise ValueError("GL coordinates require type A with n = rank + 1 entries")
    pair_vec = tuple(entries[i + 1] - entries[i] for i in range(rd.rank))
    return rd.from_weight_coords(pair_vec)
