"""Partition and bipartition combinatorics.

Littlewood-Richardson coefficients by lattice-word tableau enumeration, the
rectangular special case, hook partitions of rectangles, the one-W-type
classification predicates for types A and B, and the box-labelling rule that
produces type-B central characters.

Conventions for W(B_n) bipartitions (lambda_L, lambda_R):
(n) x 0 is trivial, (n-1) x (1) is the reflection representation and
0 x (1^n) is the sign representation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .params import LinK, ParameterFunction


# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        assert all(p > 0 for p in self.parts)
        assert all(a >= b for a, b in zip(self.parts, self.parts[1:])), \
            f"parts not decreasing: {self.parts}"

    @staticmethod
    def of(parts) -> "Partition":
        return Partition(tuple(p for p in parts if p > 0))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        out = [0] * self.parts[0]
        for p in self.parts:
            for i in range(p):
                out[i] += 1
        return Partition(tuple(out))

    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def distinct_parts(self) -> int:
        return len(set(self.parts))

    def contains(self, other: "Partition") -> bool:
        o = list(other.parts) + [0] * (len(self.parts) - len(other.parts))
        return len(other.parts) <= len(self.parts) and all(
            s >= t for s, t in zip(self.parts, o))

    def hook_lengths(self):
        t = self.transpose()
        return [[self.parts[i] - j + t.parts[j] - i - 1
                 for j in range(self.parts[i])] for i in range(len(self.parts))]

    def dimension(self) -> int:
        """Number of standard Young tableaux (hook length formula)."""
        import math
        n = self.size
        d = math.factorial(n)
        for row in self.hook_lengths():
            for h in row:
                d //= h
        return d

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"

    __repr__ = __str__


EMPTY = Partition(())


def partitions(n: int, max_part: int | None = None):
    """All partitions of n, parts bounded by max_part, lexicographically decreasing."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def all_partitions(n: int) -> list[Partition]:
    return [Partition(p) for p in partitions(n)]


@dataclass(frozen=True)
class Bipartition:
    left: Partition
    right: Partition

    @staticmethod
    def of(left, right) -> "Bipartition":
        return Bipartition(Partition.of(left), Partition.of(right))

    @property
    def size(self) -> int:
        return self.left.size + self.right.size

    def __str__(self):
        return f"{self.left}x{self.right}"

    __repr__ = __str__


def all_bipartitions(n: int) -> list[Bipartition]:
    out = []
    for s in range(n + 1):
        for l in partitions(n - s):
            for r in partitions(s):
                out.append(Bipartition(Partition(l), Partition(r)))
    return out


# ---------------------------------------------------------------------------
# hooks and rectangles


def hook_partition(d: int, k: int) -> Partition:
    """The strict partition (d+k-1, d+k-3, ..., |d-k|+1) attached to a d x k rectangle."""
    assert d >= 1 and k >= 1
    parts = tuple(range(d + k - 1, abs(d - k), -2))
    p = Partition(parts)
    assert p.size == d * k and p.is_strict() and len(p) == min(d, k)
    return p


def rectangle(d: int, m: int) -> Partition:
    """m parts of size d."""
    return Partition((d,) * m)


def as_rectangle(p: Partition) -> tuple[int, int] | None:
    """(d, m) with p = m parts of size d, or None."""
    if not p.parts:
        return None
    if all(x == p.parts[0] for x in p.parts):
        return p.parts[0], len(p.parts)
    return None


# ---------------------------------------------------------------------------
# Littlewood-Richardson by lattice-word enumeration


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Number of LR skew tableaux of shape lam/mu and content nu."""
    if mu.size + nu.size != lam.size:
        raise ValueError("size mismatch: |mu| + |nu| must equal |lambda|")
    if not lam.contains(mu):
        return 0
    lam_p = list(lam.parts)
    mu_p = list(mu.parts) + [0] * (len(lam_p) - len(mu.parts))
    nu_p = list(nu.parts)
    rows = len(lam_p)

    # fill the skew cells row by row, left to right within a row
    cells = []
    for i in range(rows):
        for j in range(mu_p[i], lam_p[i]):
            cells.append((i, j))

    count = 0
    entry = {}
    remaining = list(nu_p)

    # Cells are visited in the order of the reverse reading word (right to
    # left within a row, top row first), so maintaining prefix letter counts
    # suffices for the lattice-word condition.
    cells = []
    for i in range(rows):
        for j in range(lam_p[i] - 1, mu_p[i] - 1, -1):
            cells.append((i, j))

    def rec2(idx: int, word_counts):
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        i, j = cells[idx]
        for v in range(len(nu_p)):
            if remaining[v] == 0:
                continue
            if (i, j + 1) in entry and entry[(i, j + 1)] < v:
                continue  # rows weakly increase left to right
            if i > 0 and j < lam_p[i - 1] and j >= mu_p[i - 1]:
                if (i - 1, j) in entry and entry[(i - 1, j)] >= v:
                    continue
            if v > 0 and word_counts[v] + 1 > word_counts[v - 1]:
                continue
            entry[(i, j)] = v
            remaining[v] -= 1
            word_counts[v] += 1
            rec2(idx + 1, word_counts)
            word_counts[v] -= 1
            remaining[v] += 1
            del entry[(i, j)]

    rec2(0, [0] * len(nu_p))
    return count


def rectangular_lr_partitions(d1: int, m1: int, d2: int, m2: int) -> list[Partition]:
    """All lam with c^lam_{(d1 x m1), (d2 x m2)^t} = 1 (the only value that occurs).

    Closed-form description for a product of two rectangles: after swapping the
    factors so that m1 >= d2, lam runs over partitions of length <= m1 + d2 with
      (i)   lam_j + lam_{m1+d2-j+1} = d1 + m2 for j = 1..d2,
      (ii)  lam_{d2} >= max(d1, m2),
      (iii) lam_{d2+1} = ... = lam_{m1} = d1.
    """
    # left factor lambda_L = d1 x m1, right factor is the transpose of d2 x m2,
    # i.e. the rectangle m2 x d2.  The product is symmetric, so swap freely.
    if m1 < d2:
        d1, m1, d2, m2 = m2, d2, m1, d1
    n = d1 * m1 + d2 * m2
    length = m1 + d2
    out = []
    # free choices: lam_1 >= ... >= lam_{d2} with constraints; the tail is forced
    lo = max(d1, m2)
    hi = d1 + m2
    for head in itertools.combinations_with_replacement(range(lo, hi + 1), d2):
        head = tuple(sorted(head, reverse=True))
        tail = [d1 + m2 - head[d2 - 1 - t] for t in range(d2)]
        lam = [x for x in list(head) + [d1] * (m1 - d2) + tail if x > 0]
        if any(a < b for a, b in zip(lam, lam[1:])):
            continue
        p = Partition(tuple(lam))
        assert p.size == n
        if p not in out:
            out.append(p)
    out.sort(key=lambda p: p.parts, reverse=True)
    return out


def glued_partitions(d1: int, m1: int, d2: int, m2: int) -> tuple[Partition, Partition]:
    """Vertical and horizontal gluings of the rectangles d1 x m1 and (d2 x m2)^t."""
    # transpose of d2 x m2 is the rectangle m2 x d2
    a, b = rectangle(d1, m1), rectangle(m2, d2)
    vert = Partition(tuple(sorted(list(a.parts) + list(b.parts), reverse=True)))
    rows = max(len(a), len(b))
    horiz = Partition(tuple(
        (a.parts[i] if i < len(a) else 0) + (b.parts[i] if i < len(b) else 0)
        for i in range(rows)))
    return vert, horiz


# ---------------------------------------------------------------------------
# reflection-representation tensor rule for B_n


def refl_tensor_b(bp: Bipartition) -> list[Bipartition]:
    """Constituents of (lambda_L x lambda_R) tensor refl: move one box across."""
    out = []
    for src, dst, flip in ((bp.left, bp.right, False), (bp.right, bp.left, True)):
        for removed, r_i in _remove_one_box(src):
            for added in _add_one_box(dst):
                new = (Bipartition(removed, added) if not flip
                       else Bipartition(added, removed))
                out.append(new)
    return sorted(set(out), key=lambda b: (b.left.parts, b.right.parts))


def _remove_one_box(p: Partition):
    for i in range(len(p)):
        if i == len(p) - 1 or p[i] > p[i + 1]:
            parts = list(p.parts)
            parts[i] -= 1
            yield Partition.of(parts), i


def _add_one_box(p: Partition):
    seen = set()
    for i in range(len(p) + 1):
        if i == 0 or (i < len(p) and p[i] < p[i - 1]) or (i == len(p) and (i == 0 or p[i - 1] >= 1)):
            parts = list(p.parts)
            if i < len(parts):
                parts[i] += 1
            else:
                parts.append(1)
            q = Partition.of(parts)
            if q not in seen:
                seen.add(q)
                yield q


# ---------------------------------------------------------------------------
# type B central character: box labelling rule


def central_character_tableau(lam: Partition, symbolic: bool = True,
                              k: ParameterFunction | None = None):
    """Entries of the Young diagram of lam labelled k_s at the top-left corner,
    +k_l to the right, -k_l downwards; returned row by row as a vector in R^n.

    With symbolic=True the entries are LinK polynomials, otherwise Fractions
    evaluated at the given parameters.
    """
    entries = []
    for i, row_len in enumerate(lam.parts):
        for j in range(row_len):
            e = LinK(0, 1, 0) + LinK(0, 0, 1).scale(j - i)
            entries.append(e)
    if symbolic:
        return entries
    assert k is not None
    return [e.specialize(k) for e in entries]


def orbit_key_signed(values) -> tuple:
    """Canonical form of a vector under permutations and sign changes."""
    return tuple(sorted((abs(v) for v in values), reverse=True))


def orbit_key_perm(values) -> tuple:
    """Canonical form of a vector under permutations only."""
    return tuple(sorted(values, reverse=True))


# ---------------------------------------------------------------------------
# one-W-type candidate classification


def one_wtype_candidates_type_a(n: int) -> list[Partition]:
    """Rectangles d x k with dk = n."""
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            out.append(rectangle(d, n // d))
    out.sort(key=lambda p: p.parts, reverse=True)
    return out


def t2_admissible(d1: int, m1: int, d2: int, m2: int, k: ParameterFunction) -> bool:
    """The rectangle pair (d1 x m1, d2 x m2) extends iff m1 - d1 = m2 - d2 + 2 ks/kl."""
    if k.k_long == 0:
        raise ValueError("k_long must be nonzero for the type-B classification")
    delta = 2 * Fraction(k.k_short) / Fraction(k.k_long)
    return Fraction(m1 - d1) == Fraction(m2 - d2) + delta


def one_wtype_candidates_type_b(n: int, k: ParameterFunction) -> list[Bipartition]:
    """(T1) all lambda_L x 0 and 0 x lambda_R; (T2) admissible rectangle pairs."""
    out = []
    for lam in all_partitions(n):
        out.append(Bipartition(lam, EMPTY))
        out.append(Bipartition(EMPTY, lam))
    for s in range(1, n):
        for d1 in _divisors(n - s):
            m1 = (n - s) // d1
            for d2 in _divisors(s):
                m2 = s // d2
                if t2_admissible(d1, m1, d2, m2, k):
                    out.append(Bipartition(rectangle(d1, m1), rectangle(d2, m2)))
    seen, uniq = set(), []
    for bp in out:
        if bp not in seen:
            seen.add(bp)
            uniq.append(bp)
    return uniq


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# spin tensor rules (types A and B)


def type_a_spin_tensor(d: int, k: int) -> dict:
    """Decomposition of sigma_{d x k} tensor a spin module over the double cover
    of S_n, n = dk, in the reflection representation of dimension n-1.

    Constituents are supported on the strict partition hook(d x k).  With
    l = min(d, k) and a = floor((n-1)/2) - floor((n-l)/2):

      * hook even (n - l even): a single constituent, multiplicity 2^a;
      * hook odd, n odd (dim V even, one spin module): both associates, each
        with multiplicity 2^(a-1);
      * hook odd, n even (two spin modules S+/S-): a single associate with
        multiplicity 2^a; which associate is a labelling convention.

    The exponents differ from a formulation over an n-dimensional ambient
    space: here V is the (n-1)-dimensional span of the roots.
    """
    n = d * k
    hook = hook_partition(d, k)
    l = min(d, k)
    a = (n - 1) // 2 - (n - l) // 2
    odd = (n - l) % 2 == 1
    if not odd:
        return {"hook": hook, "constituents": [("", 2 ** a)], "pair": False}
    if n % 2 == 1:
        assert a >= 1
        return {"hook": hook, "constituents": [("+", 2 ** (a - 1)), ("-", 2 ** (a - 1))],
                "pair": True}
    return {"hook": hook, "constituents": [("eps'", 2 ** a)], "pair": False}


def type_b_spin_decomposition(bp: Bipartition) -> list[tuple[Partition, str, int]]:
    """(lambda_L x lambda_R) tensor S^eps as a sum of (lambda x 0) tensor S^eps'.

    Multiplicities are LR coefficients c^lambda_{lambda_L, lambda_R^t}; with
    s = |lambda_R|, the variant rule for odd n is eps' = eps if s is even and
    eps' = -eps if s is odd (for even n there is a single spin module).
    """
    n = bp.size
    s = bp.right.size
    rt = bp.right.transpose()
    out = []
    for lam in all_partitions(n):
        c = lr_coefficient(lam, bp.left, rt)
        if c:
            if n % 2 == 0:
                variant = ""
            else:
                variant = "same" if s % 2 == 0 else "flip"
            out.append((lam, variant, c))
    return out
