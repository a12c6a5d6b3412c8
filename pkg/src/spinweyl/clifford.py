"""Clifford algebras, the pin group, pin double covers of Weyl groups, spin modules.

C(V) is generated by v in V with v1 v2 + v2 v1 = -2(v1, v2).  The cover W~ is
the preimage of W in Pin(V), generated by the unit vectors alpha/|alpha|.

Two element representations are used:

* ``CliffordElement`` - sparse monomials over cyclotomic scalars, for the
  public algebra operations and small verifications;
* ``IntCliff`` - the same monomials with integer coefficients under a global
  scale 2^(a/2) 3^(b/2).  Every generator alpha/|alpha| of every supported
  coordinate model has this shape (norms are 1, 2, 4 or 6 and coordinates are
  integers or half-integers), products stay in this shape, and equality is
  exact integer comparison.  All cover enumeration runs on IntCliff values.

The enumerated cover is an indexed group: elements 0..2|W|-1 with tabulated
right multiplication by the lifted simple reflections, z-partner pairing,
inverses, conjugacy classes and projection to the underlying Weyl group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import linalg
from .scalars import Cyc, sqrt_rational, imag_unit, ZERO, ONE
from .rootsystem import RootSystem, WeylGroup, WeylElement, dot


# ---------------------------------------------------------------------------
# monomial sign tables

@lru_cache(maxsize=None)
def _sign_table(nbits: int):
    """Flat table: sign of f_A . f_B = sign * f_(A xor B), with f_i^2 = -1."""
    size = 1 << nbits
    table = np.empty(size * size, dtype=np.int8)
    popcount = [bin(m).count("1") for m in range(size)]
    # cross(A, B) = sum over b in B of #{a in A : a > b}
    for a in range(size):
        base = a * size
        for b in range(size):
            cross = 0
            bb = b
            while bb:
                low = bb & -bb
                cross += popcount[a & ~(2 * low - 1)]
                bb ^= low
            common = popcount[a & b]
            table[base + b] = -1 if (cross + common) & 1 else 1
    return table, size


class IntCliff:
    """2^(e2/2) 3^(e3/2) * sum of integer-coefficient basis monomials."""

    __slots__ = ("e2", "e3", "coeffs", "nbits")

    def __init__(self, nbits: int, e2: int, e3: int, coeffs: dict[int, int],
                 canonical: bool = False):
        if not canonical:
            coeffs = {m: c for m, c in coeffs.items() if c}
            if not coeffs:
                e2 = e3 = 0
            else:
                g = 0
                for c in coeffs.values():
                    g = _gcd(g, c)
                while g % 2 == 0:
                    g //= 2
                    e2 += 2
                    coeffs = {m: c // 2 for m, c in coeffs.items()}
                while g % 3 == 0:
                    g //= 3
                    e3 += 2
                    coeffs = {m: c // 3 for m, c in coeffs.items()}
        self.nbits = nbits
        self.e2 = e2
        self.e3 = e3
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def mul(self, other: "IntCliff") -> "IntCliff":
        table, size = _sign_table(self.nbits)
        out: dict[int, int] = {}
        get = out.get
        for ma, ca in self.coeffs.items():
            base = ma * size
            for mb, cb in other.coeffs.items():
                m = ma ^ mb
                out[m] = get(m, 0) + int(table[base + mb]) * ca * cb
        return IntCliff(self.nbits, self.e2 + other.e2, self.e3 + other.e3, out)

    def neg(self) -> "IntCliff":
        return IntCliff(self.nbits, self.e2, self.e3,
                        {m: -c for m, c in self.coeffs.items()}, canonical=True)

    def transpose(self) -> "IntCliff":
        # reversal contributes (-1)^(k(k-1)/2), v^t = -v contributes (-1)^k
        out = {}
        for m, c in self.coeffs.items():
            k = bin(m).count("1")
            out[m] = -c if (k * (k + 1) // 2) % 2 else c
        return IntCliff(self.nbits, self.e2, self.e3, out, canonical=True)

    def key(self) -> tuple[bytes, bool]:
        """Canonical byte key of +/-self and whether self is the negated form."""
        items = sorted(self.coeffs.items())
        flip = bool(items and items[0][1] < 0)
        sign = -1 if flip else 1
        parts = [self.e2.to_bytes(2, "little", signed=True),
                 self.e3.to_bytes(2, "little", signed=True)]
        for m, c in items:
            c *= sign
            parts.append(m.to_bytes(1, "little"))
            nbytes = max(1, (c.bit_length() + 8) // 8)
            parts.append(nbytes.to_bytes(1, "little"))
            parts.append(c.to_bytes(nbytes, "little", signed=True))
        return b"".join(parts), flip

    def scalar_part(self) -> Fraction:
        """Coefficient of the empty monomial as an exact rational (must be one)."""
        c = self.coeffs.get(0, 0)
        if c == 0:
            return Fraction(0)
        assert self.e2 % 2 == 0 and self.e3 % 2 == 0, \
            "scalar coefficient is irrational"
        return Fraction(c) * Fraction(2) ** (self.e2 // 2) * Fraction(3) ** (self.e3 // 2)

    def coeff_cyc(self, mask: int) -> Cyc:
        c = self.coeffs.get(mask, 0)
        if c == 0:
            return ZERO
        return Cyc.rational(c) * _scale_cyc(self.e2, self.e3)

    def to_clifford_element(self) -> "CliffordElement":
        s = _scale_cyc(self.e2, self.e3)
        return CliffordElement(self.nbits,
                               {m: Cyc.rational(c) * s for m, c in self.coeffs.items()})

    def __eq__(self, other):
        return (self.e2, self.e3, self.coeffs) == (other.e2, other.e3, other.coeffs)

    def __repr__(self):
        return f"IntCliff(2^{self.e2}/2 3^{self.e3}/2 {self.coeffs})"


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def _scale_cyc(e2: int, e3: int) -> Cyc:
    out = Cyc.rational(Fraction(2) ** (e2 // 2) * Fraction(3) ** (e3 // 2))
    if e2 % 2:
        out = out * sqrt_rational(2)
    if e3 % 2:
        out = out * sqrt_rational(3)
    return out


def intcliff_from_vector(nbits: int, vec, norm_sq: Fraction) -> IntCliff:
    """The unit vector vec/|vec| as an IntCliff; requires |vec|^2 = 2^x 3^y q^2."""
    den = 1
    for x in vec:
        x = Fraction(x)
        den = den * x.denominator // _gcd(den, x.denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    # vec/|vec| = ints / (den * sqrt(q)); fold the 2,3 content of q into the scale
    q = Fraction(norm_sq)
    e2 = e3 = 0
    num, d = q.numerator, q.denominator
    while num % 2 == 0:
        num //= 2
        e2 -= 1
    while num % 3 == 0:
        num //= 3
        e3 -= 1
    while d % 2 == 0:
        d //= 2
        e2 += 1
    while d % 3 == 0:
        d //= 3
        e3 += 1
    rn = _isqrt_exact(num)
    rd = _isqrt_exact(d)
    assert rn is not None and rd is not None, \
        f"norm^2 = {q} not of the form 2^x 3^y (rational)^2"
    coeffs = {1 << i: c * rd for i, c in enumerate(ints) if c}
    return _scaled(nbits, e2, e3, coeffs, den * rn)


def _scaled(nbits, e2, e3, coeffs, extra_den):
    """coeffs / extra_den with the 2,3-part of extra_den folded into the scale."""
    d = extra_den
    while d % 2 == 0:
        d //= 2
        e2 -= 2
    while d % 3 == 0:
        d //= 3
        e3 -= 2
    assert d == 1, f"denominator {extra_den} has prime factors other than 2,3"
    return IntCliff(nbits, e2, e3, coeffs)


def _isqrt_exact(n: int):
    r = int(n ** 0.5)
    for c in (r - 1, r, r + 1):
        if c >= 0 and c * c == n:
            return c
    return None


# ---------------------------------------------------------------------------
# general cyclotomic Clifford elements


class CliffordElement:
    """Sparse element of C(Q^nbits) with cyclotomic coefficients."""

    def __init__(self, nbits: int, terms: dict[int, Cyc] | None = None):
        self.nbits = nbits
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def scalar(nbits: int, c) -> "CliffordElement":
        c = c if isinstance(c, Cyc) else Cyc.rational(c)
        return CliffordElement(nbits, {0: c})

    @staticmethod
    def vector(nbits: int, coords) -> "CliffordElement":
        terms = {}
        for i, c in enumerate(coords):
            c = c if isinstance(c, Cyc) else Cyc.rational(c)
            if not c.is_zero():
                terms[1 << i] = c
        return CliffordElement(nbits, terms)

    def mul(self, other: "CliffordElement") -> "CliffordElement":
        if self.nbits != other.nbits:
            raise ValueError("Clifford dimension mismatch")
        table, size = _sign_table(self.nbits)
        out: dict[int, Cyc] = {}
        for ma, ca in self.terms.items():
            base = ma * size
            for mb, cb in other.terms.items():
                m = ma ^ mb
                v = ca * cb
                if int(table[base + mb]) < 0:
                    v = -v
                out[m] = out[m] + v if m in out else v
        return CliffordElement(self.nbits, out)

    def add(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return CliffordElement(self.nbits, out)

    def neg(self):
        return CliffordElement(self.nbits, {m: -c for m, c in self.terms.items()})

    def scale(self, c):
        c = c if isinstance(c, Cyc) else Cyc.rational(c)
        return CliffordElement(self.nbits, {m: c * v for m, v in self.terms.items()})

    def transpose(self):
        """Anti-involution with v^t = -v on vectors: sign (-1)^(k(k+1)/2) per degree."""
        out = {}
        for m, c in self.terms.items():
            k = bin(m).count("1")
            out[m] = -c if (k * (k + 1) // 2) % 2 else c
        return CliffordElement(self.nbits, out)

    def epsilon(self):
        """Grading automorphism: +1 on even monomials, -1 on odd."""
        out = {}
        for m, c in self.terms.items():
            out[m] = -c if bin(m).count("1") % 2 else c
        return CliffordElement(self.nbits, out)

    def is_zero(self):
        return not self.terms

    def degree_part(self, k: int) -> "CliffordElement":
        return CliffordElement(self.nbits, {m: c for m, c in self.terms.items()
                                            if bin(m).count("1") == k})

    def __eq__(self, other):
        return self.nbits == other.nbits and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            mono = "".join(f"e{i+1}" for i in range(self.nbits) if m >> i & 1) or "1"
            parts.append(f"({self.terms[m]})*{mono}")
        return " + ".join(parts)


def clifford_mul(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return a.mul(b)


# ---------------------------------------------------------------------------
# the pin cover as an indexed group


class PinCover:
    """The double cover p^-1(W) in Pin(V), enumerated over IntCliff values.

    Element indices come in z-pairs: ``zmate(i) = i ^ 1`` and index 1 is the
    central element z = -1.  ``words[i // 2]`` is a reduced word whose lifted
    product equals element 2*(i//2); the odd partner is z times that.
    """

    def __init__(self, group: WeylGroup):
        rs = group.rs
        self.rs = rs
        self.group = group
        self.size = 2 * group.size
        nbits = rs.ambient_dim
        self.nbits = nbits
        gens = []
        for a in rs.simple_roots:
            gens.append(intcliff_from_vector(nbits, a, dot(a, a)))
        self.gen_values = gens

        ident = IntCliff(nbits, 0, 0, {0: 1})
        index: dict[bytes, int] = {}
        kb, flip = ident.key()
        assert not flip
        index[kb] = 0
        words: list[tuple[int, ...]] = [()]
        proj = np.empty(self.size, dtype=np.int32)
        proj[0] = proj[1] = 0
        right = [np.full(self.size, -1, dtype=np.int32) for _ in gens]
        from collections import deque
        # BFS over even representatives; the odd partner is the negated value,
        # so one product per edge serves both rows of the right-mult tables.
        queue = deque([(0, ident)])
        count = 2
        while queue:
            idx, val = queue.popleft()
            wp = int(proj[idx])
            for gi, g in enumerate(gens):
                nv = val.mul(g)
                kb, flipped = nv.key()
                found = index.get(kb)
                if found is None:
                    new_even = count
                    count += 2
                    index[kb] = new_even
                    words.append(words[idx // 2] + (gi,))
                    wq = int(group.right_cols[gi][wp])
                    proj[new_even] = wq
                    proj[new_even + 1] = wq
                    target = new_even + (1 if flipped else 0)
                    queue.append((new_even, nv.neg() if flipped else nv))
                else:
                    target = found + (1 if flipped else 0)
                right[gi][idx] = target
                right[gi][idx ^ 1] = target ^ 1
        assert count == self.size, (count, self.size)
        self.index = index
        self.words = words
        self.proj = proj
        self.right_cols = right
        assert all(int(c.min()) >= 0 for c in right)
        self.z_index = self._find_z()
        assert self.z_index == 1
        # section: W index -> the cover element obtained by lifting the stored
        # reduced word letter by letter (a set-theoretic section of p)
        section = np.empty(group.size, dtype=np.int32)
        for half in range(group.size):
            x = 0
            for gi in self.words[half]:
                x = int(self.right_cols[gi][x])
            section[int(proj[2 * half])] = x
        self.section = section
        self._inv = None
        self._classes = None
        self._parity = None
        self._orders: dict[int, int] = {}

    def _find_z(self) -> int:
        ident = IntCliff(self.nbits, 0, 0, {0: 1})
        kb, flip = ident.neg().key()
        found = self.index[kb]
        return found + (1 if flip else 0)

    # -- group structure ----------------------------------------------------

    @property
    def identity(self) -> int:
        return 0

    def zmate(self, x: int) -> int:
        return x ^ 1

    def mult(self, x: int, y: int) -> int:
        # walk the word of y's pair, then correct by z if the word product is
        # z times element y
        for gi in self.words[y // 2]:
            x = int(self.right_cols[gi][x])
        return x ^ self._word_parity(y)

    def _word_parity_table(self):
        """parity[i] = 1 iff the lifted word product of pair i//2 equals z * element(i)."""
        if self._parity is None:
            par = np.zeros(self.size, dtype=np.int8)
            for half in range(self.size // 2):
                x = 0
                for gi in self.words[half]:
                    x = int(self.right_cols[gi][x])
                even = 2 * half
                par[even] = x - even      # 0 if the walk lands on even, else 1
                par[even + 1] = 1 - (x - even)
            self._parity = par
        return self._parity

    def _word_parity(self, y: int) -> int:
        return int(self._word_parity_table()[y])

    def inv_array(self):
        if self._inv is None:
            inv = np.empty(self.size, dtype=np.int32)
            par = self._word_parity_table()
            for x in range(self.size):
                word = self.words[x // 2]
                y = 0
                for gi in reversed(word):
                    y = int(self.right_cols[gi][y])
                # x = z^b * prod(word) with b = (x odd) xor par[2*(x//2)] ... ;
                # prod(reversed word) = z^len * prod(word)^-1
                b = (x & 1) ^ int(par[2 * (x // 2)] != 0)
                y ^= (len(word) + b) & 1
                inv[x] = y
            # verified below by mult(x, inv[x]) == identity on samples
            self._inv = inv
        return self._inv

    def inv(self, x: int) -> int:
        return int(self.inv_array()[x])

    def order_of(self, x: int) -> int:
        if x not in self._orders:
            k, y = 1, x
            while y != 0:
                y = self.mult(y, x)
                k += 1
            self._orders[x] = k
        return self._orders[x]

    def conjugacy_classes(self):
        if self._classes is not None:
            return self._classes
        inv = np.asarray(self.inv_array())
        conj_maps = []
        for col in self.right_cols:
            m = col[inv]
            m = inv[m]
            m = col[m]
            conj_maps.append(m)
        class_of = np.full(self.size, -1, dtype=np.int32)
        reps, sizes = [], []
        for x in range(self.size):
            if class_of[x] >= 0:
                continue
            cid = len(reps)
            stack = [x]
            class_of[x] = cid
            n = 0
            while stack:
                y = stack.pop()
                n += 1
                for m in conj_maps:
                    z = int(m[y])
                    if class_of[z] < 0:
                        class_of[z] = cid
                        stack.append(z)
            reps.append(x)
            sizes.append(n)
        assert sum(sizes) == self.size
        self._classes = (class_of, reps, sizes)
        return self._classes

    # -- values and lifts -----------------------------------------------------

    def value(self, x: int) -> IntCliff:
        """The Clifford-algebra value of element x, recomputed from its word."""
        v = IntCliff(self.nbits, 0, 0, {0: 1})
        for gi in self.words[x // 2]:
            v = v.mul(self.gen_values[gi])
        par = self._word_parity(2 * (x // 2))
        if (x & 1) ^ par:
            v = v.neg()
        return v

    def find_value(self, v: IntCliff) -> int:
        kb, flip = v.key()
        base = self.index[kb]
        return base + (1 if flip else 0)

    def lift_reflection(self, alpha) -> int:
        """Index of alpha/|alpha| for a root alpha."""
        v = intcliff_from_vector(self.nbits, alpha, dot(alpha, alpha))
        return self.find_value(v)

    def genuine_sign(self, x: int) -> int:
        """sgn character of the underlying Weyl element."""
        return -1 if len(self.words[x // 2]) % 2 else 1


@lru_cache(maxsize=None)
def pin_cover(type_str: str, rank: int | None = None,
              max_order: int = 250_000) -> PinCover:
    from .rootsystem import weyl_group
    return PinCover(weyl_group(type_str, rank, max_order=max_order))


# ---------------------------------------------------------------------------
# pin elements (public view)


@dataclass
class PinElement:
    cover: PinCover
    idx: int

    @property
    def value(self) -> CliffordElement:
        return self.cover.value(self.idx).to_clifford_element()

    @property
    def projected(self) -> WeylElement:
        w = int(self.cover.proj[self.idx])
        return self.cover.group.element(w)

    def __mul__(self, other: "PinElement") -> "PinElement":
        return PinElement(self.cover, self.cover.mult(self.idx, other.idx))


def pin_membership_checks(cover: PinCover, idx: int) -> bool:
    """a a^t = 1 and eps(a) V a^-1 = V with the right Weyl action."""
    a = cover.value(idx).to_clifford_element()
    at = a.transpose()
    if a.mul(at) != CliffordElement.scalar(cover.nbits, ONE):
        return False
    rs = cover.rs
    w = cover.group.element(int(cover.proj[idx]))
    eps_a = a.epsilon()
    for basis_root in rs.simple_roots:
        v = CliffordElement.vector(cover.nbits, [Cyc.rational(x) for x in basis_root])
        img = eps_a.mul(v).mul(at)  # a^-1 = a^t in Pin
        expect = CliffordElement.vector(
            cover.nbits,
            [Cyc.rational(x) for x in linalg.mat_vec(w.ambient_matrix, list(basis_root))])
        if img != expect:
            return False
    return True


# ---------------------------------------------------------------------------
# spin modules


class SpinModule:
    """Gamma matrices for C(V) in the orthonormal basis of V = span(Phi).

    dim V even: the unique simple module, dimension 2^(dim V/2);
    dim V odd: two modules S+/S- distinguished by the sign of the volume action.
    """

    def __init__(self, rs: RootSystem, variant: str = ""):
        m = rs.rank
        self.rs = rs
        self.m = m
        if m % 2 == 0 and variant:
            raise ValueError("even-dimensional V has a unique spin module")
        if m % 2 == 1 and variant not in ("plus", "minus"):
            raise ValueError("odd-dimensional V needs variant plus or minus")
        self.variant = variant
        self.dim = 2 ** (m // 2)
        self.gammas = _gamma_matrices(m, variant)
        self._check_relations()
        # volume scalar for odd m: gamma_1 ... gamma_m = vol_scalar * Id
        if m % 2 == 1:
            v = self.gammas[0]
            for g in self.gammas[1:]:
                v = linalg.mat_mul(v, g)
            diag = v[0][0]
            assert all(v[i][j] == (diag if i == j else ZERO)
                       for i in range(self.dim) for j in range(self.dim))
            self.vol_scalar = diag
        else:
            self.vol_scalar = None
        self._vol_expansion = None

    def _check_relations(self):
        d = self.dim
        for i, gi in enumerate(self.gammas):
            for j, gj in enumerate(self.gammas):
                ab = linalg.mat_add(linalg.mat_mul(gi, gj), linalg.mat_mul(gj, gi))
                target = Cyc.rational(-2 if i == j else 0)
                assert all(ab[r][c] == (target if r == c else ZERO)
                           for r in range(d) for c in range(d))

    # -- matrices of vectors and cover elements ------------------------------

    def gamma_of_vector(self, v_coords) -> list[list[Cyc]]:
        """gamma(v) for v given in orthonormal V-coordinates."""
        d = self.dim
        out = [[ZERO] * d for _ in range(d)]
        for c, g in zip(v_coords, self.gammas):
            if c.is_zero():
                continue
            out = linalg.mat_add(out, linalg.mat_scale(g, c))
        return out

    def matrix_of_cover_element(self, cover: PinCover, x: int) -> list[list[Cyc]]:
        rs = self.rs
        d = self.dim
        out = linalg.identity(d, ONE, ZERO)
        for gi in cover.words[x // 2]:
            a = rs.simple_roots[gi]
            coords = rs.to_v_coords(a)
            norm_inv = sqrt_rational(dot(a, a)).inverse()
            mat = self.gamma_of_vector([c * norm_inv for c in coords])
            out = linalg.mat_mul(out, mat)
        par = cover._word_parity(2 * (x // 2))
        if (x & 1) ^ par:
            out = linalg.mat_scale(out, Cyc.rational(-1))
        return out

    # -- characters ------------------------------------------------------------

    def volume_expansion(self) -> CliffordElement:
        """The Clifford product e_1 ... e_m of the orthonormal basis, in ambient monomials."""
        if self._vol_expansion is None:
            onb = self.rs.orthonormal_basis()
            nbits = self.rs.ambient_dim
            v = CliffordElement.scalar(nbits, ONE)
            for row in onb:
                v = v.mul(CliffordElement.vector(nbits, list(row)))
            assert all(bin(m).count("1") == self.m for m in v.terms)
            self._vol_expansion = v
        return self._vol_expansion

    def character(self, cover: PinCover, x: int) -> Cyc:
        """tr_S of cover element x, from its Clifford value (no matrices).

        Only the scalar part and (odd dim V) the volume component of the value
        contribute to the trace of a gamma-monomial expansion.
        """
        val = cover.value(x)
        scal = Cyc.rational(val.coeffs.get(0, 0)) * _scale_cyc(val.e2, val.e3) \
            if 0 in val.coeffs else ZERO
        total = scal * Cyc.rational(self.dim)
        if self.m % 2 == 1:
            vol = self.volume_expansion()
            # degree-m part of val must be proportional to vol
            c_vol = None
            deg_masks = [m for m in val.coeffs if bin(m).count("1") == self.m]
            if deg_masks:
                m0 = deg_masks[0]
                assert m0 in vol.terms
                c_vol = val.coeff_cyc(m0) / vol.terms[m0]
                for m in deg_masks:
                    assert val.coeff_cyc(m) == c_vol * vol.terms[m]
            if c_vol is not None:
                total = total + c_vol * self.vol_scalar * Cyc.rational(self.dim)
        return total


def _gamma_matrices(m: int, variant: str) -> list[list[list[Cyc]]]:
    """Recursion: even step appends 1 (x) i sigma_1, 1 (x) i sigma_2 and tensors
    sigma_3 onto the old generators; odd m appends +/- the completed volume."""
    i = imag_unit()
    if m == 0:
        return []
    even_part = m if m % 2 == 0 else m - 1
    gammas: list[list[list[Cyc]]] = []
    dim = 1
    for step in range(even_part // 2):
        s3 = [[ONE, ZERO], [ZERO, -ONE]]
        is1 = [[ZERO, i], [i, ZERO]]
        is2 = [[ZERO, ONE], [-ONE, ZERO]]
        gammas = [linalg.kron(g, s3) for g in gammas]
        ident = linalg.identity(dim, ONE, ZERO)
        gammas.append(linalg.kron(ident, is1))
        gammas.append(linalg.kron(ident, is2))
        dim *= 2
    if m % 2 == 1:
        if m == 1:
            v = [[i]] if variant == "plus" else [[-i]]
            return [v]
        vol = gammas[0]
        for g in gammas[1:]:
            v_new = linalg.mat_mul(vol, g)
            vol = v_new
        sq = linalg.mat_mul(vol, vol)
        s = sq[0][0]
        assert all(sq[a][b] == (s if a == b else ZERO)
                   for a in range(dim) for b in range(dim))
        if s == Cyc.rational(-1):
            last = vol
        else:
            assert s == ONE
            last = linalg.mat_scale(vol, i)
        if variant == "minus":
            last = linalg.mat_scale(last, Cyc.rational(-1))
        gammas.append(last)
    return gammas


def spin_module(rs: RootSystem, variant: str = "") -> SpinModule:
    return SpinModule(rs, variant)


def spin_variants(rs: RootSystem) -> list[str]:
    return [""] if rs.rank % 2 == 0 else ["plus", "minus"]
