"""Finite root systems, coweight lattices, and Weyl groups in exact integer arithmetic.

Conventions used throughout the package:

- Roots are stored as integer coefficient vectors in the simple-root basis.
- Coweights live in the lattice Lambda = X_*(T).  Their public coordinates are
  coefficients in a fixed Z-basis of Lambda: the simple coroots when
  lattice_mode == "simply_connected", the fundamental coweights when
  lattice_mode == "adjoint".
- The Cartan matrix entry cartan[i][j] is <alpha_i, alpha_j_check>.
- pair(root, coweight) is the canonical pairing <alpha, lambda>, always an
  exact integer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

WEYL_ENUMERATION_RANK_BOUND = 4


class RootDatumError(ValueError):
    pass


def cartan_matrix(type_label: str, rank: int) -> list[list[int]]:
    """Cartan matrix with entries <alpha_i, alpha_j_check>, Bourbaki numbering."""
    n = rank
    if type_label == "A" and n >= 1:
        pass
    elif type_label in ("B", "C") and n >= 2:
        pass
    elif type_label == "D" and n >= 3:
        pass
    elif type_label == "E" and n in (6, 7, 8):
        pass
    elif type_label == "F" and n == 4:
        pass
    elif type_label == "G" and n == 2:
        pass
    else:
        raise RootDatumError(f"invalid Cartan type {type_label}{rank}")

    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a=-1, b=-1):
        c[i][j] = a
        c[j][i] = b

    if type_label in ("A", "B", "C", "F", "G"):
        for i in range(n - 1):
            link(i, i + 1)
        if type_label == "B":
            # alpha_n short: <alpha_{n-1}, alpha_n_check> = -2
            link(n - 2, n - 1, a=-2, b=-1)
        elif type_label == "C":
            link(n - 2, n - 1, a=-1, b=-2)
        elif type_label == "F":
            link(1, 2, a=-2, b=-1)
        elif type_label == "G":
            link(0, 1, a=-1, b=-3)
    elif type_label == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif type_label == "E":
        # Bourbaki: node 2 attached to node 4 of the chain 1-3-4-5-6(-7)(-8)
        chain = [0] + list(range(2, n))
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    return c


def _mat_vec(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _invert_fraction_matrix(m):
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class WeylElement:
    """A finite Weyl group element: reduced word plus its two action matrices.

    mat_lattice acts on coweight coordinates (lattice basis); mat_root acts on
    root coordinates (simple-root basis).
    """

    word: tuple[int, ...]
    mat_lattice: tuple[tuple[int, ...], ...]
    mat_root: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        return self.mat_root == other.mat_root

    def __hash__(self):
        return hash(self.mat_root)


class RootDatum:
    """Immutable root-system data for one finite Cartan type and lattice mode."""

    def __init__(self, type_label: str, rank: int, lattice_mode: str = "simply_connected"):
        if lattice_mode not in ("simply_connected", "adjoint"):
            raise RootDatumError(f"unknown lattice_mode {lattice_mode!r}")
        self.type_label = type_label
        self.rank = rank
        self.lattice_mode = lattice_mode
        self.cartan = tuple(tuple(r) for r in cartan_matrix(type_label, rank))
        self.positive_roots = self._close_positive_roots()
        expected = POSITIVE_ROOT_COUNTS[type_label](rank)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                f"root closure produced {len(self.positive_roots)} positive roots, "
                f"expected {expected} for {type_label}{rank}"
            )
        # alpha_j_check in fundamental-coweight coordinates is column j of the
        # Cartan matrix: <alpha_i, alpha_j_check> = cartan[i][j].
        self._coroots_w = tuple(
            tuple(self.cartan[i][j] for i in range(rank)) for j in range(rank)
        )
        if lattice_mode == "simply_connected":
            basis = self._coroots_w
        else:
            basis = _identity(rank)
        self.lattice_basis = basis
        # column matrix of the basis, mapping lattice coords -> weight coords
        self._b_cols = tuple(
            tuple(basis[j][i] for j in range(rank)) for i in range(rank)
        )
        self._b_inv = _invert_fraction_matrix(self._b_cols)
        # pairing of simple root i with lattice basis vector j
        self._pair_simple = tuple(
            tuple(basis[j][i] for j in range(rank)) for i in range(rank)
        )
        self.two_rho = tuple(
            sum(r[i] for r in self.positive_roots) for i in range(rank)
        )
        self.highest_root = max(self.positive_roots, key=lambda r: (sum(r), r))
        self._weyl = None
        self._by_root_mat = None

    # ----- roots -----

    def _root_pair_coroot(self, root, i):
        """<root, alpha_i_check> for a root in simple-root coordinates."""
        return sum(root[j] * self.cartan[j][i] for j in range(self.rank))

    def _close_positive_roots(self):
        n = self.rank
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        roots = set(simple)
        frontier = list(simple)
        while frontier:
            new = []
            for beta in frontier:
                for i in range(n):
                    # root string: beta + alpha_i is a root iff p - <beta, alpha_i_check> > 0
                    # where p is the largest k with beta - k alpha_i a root
                    p = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        t = tuple(down)
                        if t in roots:
                            p += 1
                        else:
                            break
                    if p - self._root_pair_coroot(beta, i) > 0:
                        up = list(beta)
                        up[i] += 1
                        t = tuple(up)
                        if t not in roots:
                            roots.add(t)
                            new.append(t)
            frontier = new
        return tuple(sorted(roots, key=lambda r: (sum(r), r)))

    def is_root(self, v):
        return v in self.positive_roots or tuple(-x for x in v) in self.positive_roots

    def negative_roots(self):
        return tuple(tuple(-x for x in r) for r in self.positive_roots)

    def all_roots(self):
        return self.positive_roots + self.negative_roots()

    # ----- pairing and coordinates -----

    def pair(self, root, lam) -> int:
        """<alpha, lambda>: root in simple-root coords, lambda in lattice coords."""
        if len(root) != self.rank or len(lam) != self.rank:
            raise RootDatumError("dimension mismatch in pairing")
        return sum(
            root[i] * self._pair_simple[i][j] * lam[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def pair_weight_coords(self, root, vec):
        """Pairing against a point given in fundamental-coweight coordinates."""
        return sum(root[i] * vec[i] for i in range(self.rank))

    def to_weight_coords(self, lam):
        return _mat_vec(self._b_cols, lam)

    def from_weight_coords(self, vec):
        out = []
        for i in range(self.rank):
            x = sum(Fraction(self._b_inv[i][j]) * vec[j] for j in range(self.rank))
            if x.denominator != 1:
                raise RootDatumError(
                    f"{vec} is not in the {self.lattice_mode} coweight lattice"
                )
            out.append(int(x))
        return tuple(out)

    def coroot(self, i):
        """alpha_i_check as a lattice vector."""
        return self.from_weight_coords(self._coroots_w[i])

    def zero(self):
        return (0,) * self.rank

    def is_dominant(self, lam) -> bool:
        simple = [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]
        return all(self.pair(a, lam) >= 0 for a in simple)

    def is_strictly_dominant(self, lam) -> bool:
        simple = [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]
        return all(self.pair(a, lam) >= 1 for a in simple)

    # ----- Weyl group -----

    def _simple_reflection_mats(self, i):
        n = self.rank
        # on weight coords: lam -> lam - lam_i * coroot_i
        mw = [[int(r == c) for c in range(n)] for r in range(n)]
        for r in range(n):
            mw[r][i] -= self._coroots_w[i][r]
        # conjugate into lattice coordinates
        tmp = _mat_mul(tuple(tuple(row) for row in mw), self._b_cols)
        ml = []
        for r in range(n):
            row = []
            for c in range(n):
                x = sum(Fraction(self._b_inv[r][k]) * tmp[k][c] for k in range(n))
                assert x.denominator == 1, "lattice is not Weyl stable"
                row.append(int(x))
            ml.append(tuple(row))
        # on root coords: alpha -> alpha - <alpha, coroot_i> alpha_i
        mr = [[int(r == c) for c in range(n)] for r in range(n)]
        for c in range(n):
            mr[i][c] -= self.cartan[c][i]
        return tuple(ml), tuple(tuple(r) for r in mr)

    def weyl_elements(self, max_rank: int = WEYL_ENUMERATION_RANK_BOUND):
        """All of W by breadth-first closure over the simple reflections."""
        if self._weyl is not None:
            return self._weyl
        if self.rank > max_rank:
            raise RootDatumError(
                f"rank {self.rank} exceeds Weyl enumeration bound {max_rank}"
            )
        n = self.rank
        gens = [self._simple_reflection_mats(i) for i in range(n)]
        ident = WeylElement((), _identity(n), _identity(n))
        seen = {ident.mat_root: ident}
        frontier = [ident]
        while frontier:
            new = []
            for w in frontier:
                for i in range(n):
                    ml = _mat_mul(w.mat_lattice, gens[i][0])
                    mr = _mat_mul(w.mat_root, gens[i][1])
                    if mr not in seen:
                        # right multiplication keeps BFS level = word length
                        el = WeylElement(w.word + (i,), ml, mr)
                        seen[mr] = el
                        new.append(el)
            frontier = new
        elems = sorted(seen.values(), key=lambda w: (len(w.word), w.word))
        self._weyl = tuple(elems)
        self._by_root_mat = {w.mat_root: w for w in elems}
        return self._weyl

    def identity_element(self):
        return self.weyl_elements()[0]

    def simple_reflection(self, i):
        for w in self.weyl_elements():
            if w.word == (i,):
                return w
        raise RootDatumError(f"no simple reflection with index {i}")

    def longest_element(self):
        return max(self.weyl_elements(), key=lambda w: len(w.word))

    def weyl_mul(self, u: WeylElement, v: WeylElement) -> WeylElement:
        self.weyl_elements()
        mr = _mat_mul(u.mat_root, v.mat_root)
        return self._by_root_mat[mr]

    def weyl_inverse(self, w: WeylElement) -> WeylElement:
        self.weyl_elements()
        inv_word = tuple(reversed(w.word))
        cur = self.identity_element()
        for i in inv_word:
            cur = self.weyl_mul(cur, self.simple_reflection(i))
        return cur

    def weyl_act(self, w: WeylElement, lam):
        return _mat_vec(w.mat_lattice, lam)

    def weyl_act_weight_coords(self, w: WeylElement, vec):
        """Act on a point in fundamental-coweight coordinates (Fractions OK)."""
        v = list(vec)
        for i in reversed(w.word):
            coef = v[i]
            v = [a - coef * c for a, c in zip(v, self._coroots_w[i])]
        return tuple(v)

    def act_on_root(self, w: WeylElement, root):
        return _mat_vec(w.mat_root, root)

    def reflection_of_root(self, root) -> WeylElement:
        """s_alpha as a Weyl element, for any root alpha."""
        self.weyl_elements()
        n = self.rank
        pos = root if root in self.positive_roots else tuple(-x for x in root)
        # every root is a Weyl translate of a simple root; conjugate that reflection
        for w in self._weyl:
            for i in range(n):
                simple = tuple(1 if j == i else 0 for j in range(n))
                if self.act_on_root(w, simple) == pos:
                    return self.weyl_mul(
                        self.weyl_mul(w, self.simple_reflection(i)),
                        self.weyl_inverse(w),
                    )
        raise RootDatumError(f"{root} is not a root")

    def inversions(self, w: WeylElement):
        return tuple(
            a for a in self.positive_roots
            if self.act_on_root(w, a) not in self.positive_roots
        )

    # ----- windows and alcove geometry -----

    def lattice_points(self, radius: int):
        """All lattice vectors with basis coefficients in [-radius, radius]."""
        rng = range(-radius, radius + 1)
        return [tuple(p) for p in itertools.product(rng, repeat=self.rank)]

    def dominant_points(self, radius: int):
        return [p for p in self.lattice_points(radius) if self.is_dominant(p)]

    def marks(self):
        """Coefficients of the highest root in the simple-root basis."""
        return self.highest_root

    def alcove_barycenter(self):
        """Barycenter of the fundamental alcove, in fundamental-coweight coords.

        The alcove has vertices 0 and varpi_i_check / m_i where theta = sum m_i alpha_i.
        """
        m = self.marks()
        return tuple(Fraction(1, (self.rank + 1) * m[i]) for i in range(self.rank))

    # ----- serialization -----

    def to_json(self):
        return {
            "type": self.type_label,
            "rank": self.rank,
            "lattice_mode": self.lattice_mode,
            "cartan_matrix": [list(r) for r in self.cartan],
            "positive_roots": [list(r) for r in self.positive_roots],
        }


def build_root_datum(type_label: str, rank: int, lattice_mode: str = "simply_connected") -> RootDatum:
    return RootDatum(type_label, rank, lattice_mode)
