"""Crystallographic root systems and Weyl groups in exact coordinates.

Every root system is realized in an ambient Q^N with the standard inner
product, so simple reflections are rational orthogonal matrices and the group
can be enumerated as permutations of the root list.  V = span(Phi) may be a
proper subspace (types A and E6/E7 inside the E8 ambient); an exact
orthonormal basis of V with cyclotomic entries is computed once and used by
everything Clifford-related.

Coordinate models: A_{n-1} in the sum-zero subspace of Q^n; B_n/C_n/D_n in
Q^n; G2 in the sum-zero plane of Q^3 (so that all root entries stay integral);
F4 in Q^4; E6/E7/E8 in Q^8 with Bourbaki simple roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .scalars import Cyc, sqrt_rational

Vector = tuple[Fraction, ...]


WEYL_ORDERS = {
    "A": lambda n: math.factorial(n + 1),
    "B": lambda n: 2 ** n * math.factorial(n),
    "C": lambda n: 2 ** n * math.factorial(n),
    "D": lambda n: 2 ** (n - 1) * math.factorial(n),
    "G": lambda n: 12,
    "F": lambda n: 1152,
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
}

# classical invariant degrees of W, used for fake-degree series
INVARIANT_DEGREES = {
    "A": lambda n: list(range(2, n + 2)),
    "B": lambda n: list(range(2, 2 * n + 1, 2)),
    "C": lambda n: list(range(2, 2 * n + 1, 2)),
    "D": lambda n: list(range(2, 2 * n - 1, 2)) + [n],
    "G": lambda n: [2, 6],
    "F": lambda n: [2, 6, 8, 12],
    "E": lambda n: {6: [2, 5, 6, 8, 9, 12],
                    7: [2, 6, 8, 10, 12, 14, 18],
                    8: [2, 8, 12, 14, 18, 20, 24, 30]}[n],
}


def parse_cartan_type(type_str: str, rank: int | None = None) -> tuple[str, int]:
    s = type_str.strip().upper().replace("_", "")
    letter = s[0]
    if len(s) > 1:
        rank = int(s[1:])
    if rank is None:
        raise ValueError(f"rank required for type {letter}")
    limits = {"A": (1, 30), "B": (2, 30), "C": (2, 30), "D": (3, 30),
              "E": (6, 8), "F": (4, 4), "G": (2, 2)}
    if letter not in limits:
        raise ValueError(f"unsupported Cartan type {type_str!r}")
    lo, hi = limits[letter]
    if not lo <= rank <= hi:
        raise ValueError(f"unsupported rank {rank} for type {letter}")
    return letter, rank


def _f(*xs):
    return tuple(Fraction(x) for x in xs)


def _simple_roots(letter: str, n: int) -> tuple[list[Vector], int]:
    """Simple roots in the ambient space; returns (roots, ambient_dim)."""
    if letter == "A":
        dim = n + 1
        simples = []
        for i in range(n):
            v = [Fraction(0)] * dim
            v[i], v[i + 1] = Fraction(1), Fraction(-1)
            simples.append(tuple(v))
        return simples, dim
    if letter in ("B", "C", "D"):
        dim = n
        simples = []
        for i in range(n - 1):
            v = [Fraction(0)] * dim
            v[i], v[i + 1] = Fraction(1), Fraction(-1)
            simples.append(tuple(v))
        last = [Fraction(0)] * dim
        if letter == "B":
            last[n - 1] = Fraction(1)
        elif letter == "C":
            last[n - 1] = Fraction(2)
        else:
            last[n - 2], last[n - 1] = Fraction(1), Fraction(1)
        simples.append(tuple(last))
        return simples, dim
    if letter == "G":
        # sum-zero model in Q^3: alpha1 long, alpha2 short, matching the
        # convention of the G2 tables (trivial row pairs k_l with omega_1)
        return [_f(-2, 1, 1), _f(1, -1, 0)], 3
    if letter == "F":
        return [_f(0, 1, -1, 0), _f(0, 0, 1, -1), _f(0, 0, 0, 1),
                _f(Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2))], 4
    if letter == "E":
        half = Fraction(1, 2)
        e8 = [
            _f(half, -half, -half, -half, -half, -half, -half, half),
            _f(1, 1, 0, 0, 0, 0, 0, 0),
            _f(-1, 1, 0, 0, 0, 0, 0, 0),
            _f(0, -1, 1, 0, 0, 0, 0, 0),
            _f(0, 0, -1, 1, 0, 0, 0, 0),
            _f(0, 0, 0, -1, 1, 0, 0, 0),
            _f(0, 0, 0, 0, -1, 1, 0, 0),
            _f(0, 0, 0, 0, 0, -1, 1, 0),
        ]
        return e8[:n], 8
    raise AssertionError(letter)


def dot(u, v) -> Fraction:
    return sum(a * b for a, b in zip(u, v))


def reflect(v: Vector, alpha: Vector) -> Vector:
    c = 2 * dot(alpha, v) / dot(alpha, alpha)
    return tuple(x - c * a for x, a in zip(v, alpha))


@dataclass
class WeylElement:
    """A Weyl group element: reduced word, ambient rational matrix, root permutation."""

    word: tuple[int, ...]
    ambient_matrix: list[list[Fraction]]
    root_perm: tuple[int, ...]
    rs: "RootSystem" = field(repr=False)

    @property
    def matrix(self):
        """Orthogonal matrix on V in the orthonormal basis (cyclotomic entries)."""
        return self.rs.to_v_matrix(self.ambient_matrix)

    def __eq__(self, other):
        return self.root_perm == other.root_perm

    def __hash__(self):
        return hash(self.root_perm)


class RootSystem:
    """Exact root system data for one irreducible Cartan type."""

    def __init__(self, letter: str, rank: int):
        self.letter = letter
        self.rank = rank
        self.cartan_type = f"{letter}{rank}"
        simples, dim = _simple_roots(letter, rank)
        self.ambient_dim = dim
        self.simple_roots: list[Vector] = simples
        self.positive_roots = self._close_positive()
        self.all_roots = self.positive_roots + [tuple(-x for x in r)
                                                for r in self.positive_roots]
        self.root_index = {r: i for i, r in enumerate(self.all_roots)}
        self._verify_axioms()
        self.cartan_matrix = [[2 * dot(a, b) / dot(b, b) for b in simples]
                              for a in simples]
        self.coxeter_matrix = self._coxeter_matrix()
        sq = sorted({dot(r, r) for r in self.positive_roots})
        assert len(sq) <= 2
        self._short_norm = sq[0]
        self.has_two_lengths = len(sq) == 2
        self.coroots = [self.coroot(a) for a in self.positive_roots]
        self.fundamental_weights = self._fundamental_weights()
        self._onb: list[tuple[Cyc, ...]] | None = None
        self._w0: WeylElement | None = None

    # -- construction helpers ---------------------------------------------

    def _close_positive(self) -> list[Vector]:
        roots = set(self.simple_roots) | {tuple(-x for x in r) for r in self.simple_roots}
        frontier = list(roots)
        while frontier:
            new = []
            for r in frontier:
                for a in self.simple_roots:
                    img = reflect(r, a)
                    if img not in roots:
                        roots.add(img)
                        new.append(img)
            frontier = new
        # a root is positive iff its expansion over the simple roots is nonnegative
        simples_t = [list(col) for col in zip(*self.simple_roots)]
        pos = []
        for r in roots:
            coeffs = linalg.solve(simples_t, list(r))
            if all(c >= 0 for c in coeffs):
                pos.append(r)
        assert 2 * len(pos) == len(roots)
        pos.sort(key=lambda r: (sum(r), r))
        return pos

    def _verify_axioms(self):
        roots = set(self.all_roots)
        for a in self.all_roots:
            assert tuple(2 * x for x in a) not in roots, "non-reduced system"
            for b in self.all_roots:
                assert reflect(b, a) in roots
                c = 2 * dot(a, b) / dot(a, a)
                assert c.denominator == 1, "crystallographic axiom violated"

    def _coxeter_matrix(self):
        n = self.rank
        m = [[1] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                prod = self.cartan_matrix[i][j] * self.cartan_matrix[j][i]
                m[i][j] = {0: 2, 1: 3, 2: 4, 3: 6}[int(prod)]
        return m

    def coroot(self, alpha: Vector) -> Vector:
        c = Fraction(2) / dot(alpha, alpha)
        return tuple(c * x for x in alpha)

    def is_long(self, alpha: Vector) -> bool:
        return self.has_two_lengths and dot(alpha, alpha) > self._short_norm

    def _fundamental_weights(self) -> list[Vector]:
        """omega_i in V with (omega_i, alpha_j^vee) = delta_ij."""
        n = self.rank
        # omega_i = sum_j c_j alpha_j; (alpha_j, alpha_k^vee) c = e_i
        a = [[dot(self.simple_roots[j], self.coroot(self.simple_roots[k]))
              for j in range(n)] for k in range(n)]
        weights = []
        for i in range(n):
            e = [Fraction(1 if k == i else 0) for k in range(n)]
            c = linalg.solve(a, e)
            w = tuple(sum(c[j] * self.simple_roots[j][t] for j in range(n))
                      for t in range(self.ambient_dim))
            weights.append(w)
        return weights

    def coweights(self) -> list[Vector]:
        """Basis of V dual to the simple roots: (pi_i, alpha_j) = delta_ij."""
        n = self.rank
        a = [[dot(self.simple_roots[j], self.simple_roots[k]) for j in range(n)]
             for k in range(n)]
        out = []
        for i in range(n):
            e = [Fraction(1 if k == i else 0) for k in range(n)]
            c = linalg.solve(a, e)
            out.append(tuple(sum(c[j] * self.simple_roots[j][t] for j in range(n))
                             for t in range(self.ambient_dim)))
        return out

    # -- orthonormal basis of V and coordinate changes ---------------------

    def orthonormal_basis(self) -> list[tuple[Cyc, ...]]:
        """Exact orthonormal basis of V = span(Phi), rows of cyclotomic numbers.

        Gram-Schmidt over the simple roots; normalizations are exact square
        roots of rationals, so entries land in a cyclotomic field.
        """
        if self._onb is not None:
            return self._onb
        basis: list[list[Fraction]] = []
        for a in self.simple_roots:
            v = list(a)
            for b in basis:
                c = dot(v, b) / dot(b, b)
                v = [x - c * y for x, y in zip(v, b)]
            assert any(v), "simple roots dependent"
            basis.append(v)
        onb = []
        for v in basis:
            norm = sqrt_rational(dot(v, v))
            inv = norm.inverse()
            onb.append(tuple(Cyc.rational(x) * inv for x in v))
        self._onb = onb
        return onb

    def to_v_coords(self, v) -> tuple[Cyc, ...]:
        """Coordinates of an ambient vector in the orthonormal basis of V."""
        onb = self.orthonormal_basis()
        out = []
        for row in onb:
            s = Cyc.rational(0)
            for x, y in zip(row, v):
                if isinstance(y, Fraction) or isinstance(y, int):
                    y = Cyc.rational(y)
                s = s + x * y
            out.append(s)
        return tuple(out)

    def to_v_matrix(self, ambient_matrix):
        """Conjugate an ambient matrix preserving V into orthonormal V-coordinates."""
        onb = self.orthonormal_basis()
        r = self.rank
        cols = []
        for row in onb:
            img = [sum((Cyc.rational(ambient_matrix[i][j]) * row[j]
                        for j in range(self.ambient_dim)), Cyc.rational(0))
                   for i in range(self.ambient_dim)]
            cols.append(self.to_v_coords(img))
        return [[cols[j][i] for j in range(r)] for i in range(r)]

    # -- reflections and the group -----------------------------------------

    def reflection_matrix(self, alpha: Vector) -> list[list[Fraction]]:
        n = self.ambient_dim
        na = dot(alpha, alpha)
        return [[Fraction(1 if i == j else 0) - 2 * alpha[i] * alpha[j] / na
                 for j in range(n)] for i in range(n)]

    def simple_reflection_perm(self, i: int) -> tuple[int, ...]:
        a = self.simple_roots[i]
        return tuple(self.root_index[reflect(r, a)] for r in self.all_roots)

    def weyl_order(self) -> int:
        return WEYL_ORDERS[self.letter](self.rank)

    def invariant_degrees(self) -> list[int]:
        degs = INVARIANT_DEGREES[self.letter](self.rank)
        prod = 1
        for d in degs:
            prod *= d
        assert prod == self.weyl_order()
        assert sum(d - 1 for d in degs) == len(self.positive_roots)
        return degs

    def element_from_word(self, word) -> WeylElement:
        n = self.ambient_dim
        mat = linalg.identity(n)
        perm = tuple(range(len(self.all_roots)))
        for i in word:
            s = self.reflection_matrix(self.simple_roots[i])
            mat = linalg.mat_mul(mat, s)
            sp = self.simple_reflection_perm(i)
            perm = tuple(sp[p] for p in perm)
        return WeylElement(tuple(word), mat, perm, self)

    def longest_element(self) -> WeylElement:
        """w_0 via the descent walk from rho; no group enumeration needed."""
        if self._w0 is not None:
            return self._w0
        rho = tuple(sum(w[t] for w in self.fundamental_weights)
                    for t in range(self.ambient_dim))
        v = rho
        word = []
        while True:
            i = next((j for j, a in enumerate(self.simple_roots) if dot(v, a) > 0), None)
            if i is None:
                break
            v = reflect(v, self.simple_roots[i])
            word.append(i)
        assert v == tuple(-x for x in rho)
        assert len(word) == len(self.positive_roots)
        w0 = self.element_from_word(word)
        # w0 maps positives to negatives and squares to the identity
        npos = len(self.positive_roots)
        assert all(w0.root_perm[i] >= npos for i in range(npos))
        self._w0 = w0
        return w0

    def w0_central(self) -> bool:
        """True iff w_0 acts as -1 on V (equivalently is central in W)."""
        w0 = self.longest_element()
        return all(tuple(-x for x in linalg.mat_vec(w0.ambient_matrix, list(a))) == a
                   for a in self.simple_roots)

    # -- signed permutation view for classical types -------------------------

    def coordinate_action(self, word) -> list[int]:
        """For A/B/C/D: image of e_1..e_N as signed coordinates (1-based, sign)."""
        assert self.letter in "ABCD"
        n = self.ambient_dim
        img = list(range(1, n + 1))
        mat = self.element_from_word(word).ambient_matrix
        out = []
        for j in range(n):
            col = [mat[i][j] for i in range(n)]
            nz = [(i, c) for i, c in enumerate(col) if c]
            assert len(nz) == 1 and abs(nz[0][1]) == 1
            i, c = nz[0]
            out.append((i + 1) if c > 0 else -(i + 1))
        return out


@lru_cache(maxsize=None)
def build(type_str: str, rank: int | None = None) -> RootSystem:
    letter, r = parse_cartan_type(type_str, rank)
    return RootSystem(letter, r)


# ---------------------------------------------------------------------------
# enumerated Weyl group


DEFAULT_GROUP_GATE = 250_000


class WeylGroup:
    """The Weyl group enumerated as permutations of the root list.

    Elements are indexed 0..|W|-1 in BFS discovery order (index 0 = identity);
    each element stores one reduced word.  Right multiplication by the simple
    generators is tabulated, which is all Dixon-Schneider needs.
    """

    def __init__(self, rs: RootSystem, max_order: int = DEFAULT_GROUP_GATE):
        order = rs.weyl_order()
        if order > max_order:
            raise ResourceGateError(
                f"|W({rs.cartan_type})| = {order} exceeds the enumeration gate "
                f"{max_order}; pass an explicit max_order to override")
        self.rs = rs
        gens = [rs.simple_reflection_perm(i) for i in range(rs.rank)]
        self.gen_perms = gens
        nroots = len(rs.all_roots)
        ident = tuple(range(nroots))
        index = {ident: 0}
        perms = [ident]
        words = [()]
        frontier = [0]
        while frontier:
            nxt = []
            for idx in frontier:
                p = perms[idx]
                for gi, g in enumerate(gens):
                    q = tuple(g[p[t]] for t in range(nroots))
                    if q not in index:
                        index[q] = len(perms)
                        perms.append(q)
                        words.append(words[idx] + (gi,))
                        nxt.append(index[q])
            frontier = nxt
        assert len(perms) == order, (len(perms), order)
        self.size = order
        self.perms = perms
        self.index = index
        self.words = words
        import numpy as np
        self.right_cols = []
        for g in gens:
            col = np.empty(order, dtype=np.int32)
            for i, p in enumerate(perms):
                col[i] = index[tuple(g[p[t]] for t in range(nroots))]
            self.right_cols.append(col)
        self._inv = None
        self._classes = None

    # -- group operations ----------------------------------------------------

    @property
    def identity(self) -> int:
        return 0

    def mult(self, x: int, y: int) -> int:
        for gi in self.words[y]:
            x = int(self.right_cols[gi][x])
        return x

    def inv_array(self):
        if self._inv is None:
            import numpy as np
            inv = np.empty(self.size, dtype=np.int32)
            for x in range(self.size):
                y = 0
                for gi in reversed(self.words[x]):
                    y = int(self.right_cols[gi][y])
                inv[x] = y
            self._inv = inv
        return self._inv

    def inv(self, x: int) -> int:
        return int(self.inv_array()[x])

    def order_of(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.mult(y, x)
            k += 1
        return k

    def conjugacy_classes(self):
        """(class_of array, representatives, sizes); identity class first."""
        if self._classes is not None:
            return self._classes
        import numpy as np
        # y = g^-1 x g for each generator: conj_g = R_g o inv o R_g o inv
        inv = self.inv_array()
        conj_maps = []
        for col in self.right_cols:
            conj_maps.append(col[inv][col][inv] if False else None)
        # build explicitly to keep index order: conj_g[x] = mult(inv(g), mult(x, g))
        conj_maps = []
        for gi, col in enumerate(self.right_cols):
            m = col[np.asarray(inv)]          # x -> inv(x)*g
            m = np.asarray(inv)[m]            # -> inv(inv(x)*g) = inv(g)*x
            m = col[m]                        # -> inv(g)*x*g
            conj_maps.append(m)
        class_of = np.full(self.size, -1, dtype=np.int32)
        reps, sizes = [], []
        for x in range(self.size):
            if class_of[x] >= 0:
                continue
            cid = len(reps)
            stack = [x]
            class_of[x] = cid
            count = 0
            while stack:
                y = stack.pop()
                count += 1
                for m in conj_maps:
                    z = int(m[y])
                    if class_of[z] < 0:
                        class_of[z] = cid
                        stack.append(z)
            reps.append(x)
            sizes.append(count)
        assert sum(sizes) == self.size
        assert sizes[0] == 1 and reps[0] == 0
        self._classes = (class_of, reps, sizes)
        return self._classes

    def element(self, idx: int) -> WeylElement:
        return self.rs.element_from_word(self.words[idx])

    def find_perm(self, perm) -> int:
        return self.index[tuple(perm)]

    def reflection_index(self, alpha) -> int:
        """Index of the reflection s_alpha."""
        perm = tuple(self.rs.root_index[reflect(r, alpha)] for r in self.rs.all_roots)
        return self.index[perm]


class ResourceGateError(RuntimeError):
    """Raised when a computation exceeds its default resource gate."""


@lru_cache(maxsize=None)
def weyl_group(type_str: str, rank: int | None = None,
               max_order: int = DEFAULT_GROUP_GATE) -> WeylGroup:
    return WeylGroup(build(type_str, rank), max_order=max_order)
