"""Character formulas for S_n and the hyperoctahedral groups W(B_n).

S_n characters come from the Murnaghan-Nakayama border-strip recursion; no
group enumeration is involved, so these serve both as a fast path and as an
independent oracle against tables computed by Dixon-Schneider.

W(B_n) = S_n wr Z/2 characters use the cycle-splitting rule for wreath
products: a signed permutation has positive and negative cycles, each cycle is
assigned to the left factor (trivial Z/2 character) or the right factor (sign
character, picking up the cycle sign), and the two sides are evaluated as S_a
characters on the induced cycle types.

D_n multiplicities are obtained from B_n data by Frobenius reciprocity:
<res a, res b>_{D_n} = <a, b>_{B_n} + <a, b.xi>_{B_n} with xi the linear
character cutting out D_n.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .combinat import Partition, Bipartition, all_partitions, all_bipartitions, partitions


# ---------------------------------------------------------------------------
# S_n: classes and Murnaghan-Nakayama


def centralizer_order(rho: tuple[int, ...]) -> int:
    z = 1
    for part, mult in _multiplicities(rho).items():
        z *= part ** mult * math.factorial(mult)
    return z


def class_size_sn(n: int, rho: tuple[int, ...]) -> int:
    return math.factorial(n) // centralizer_order(rho)


def _multiplicities(rho) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in rho:
        out[p] = out.get(p, 0) + 1
    return out


@lru_cache(maxsize=None)
def mn_character(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """chi_lambda(rho) for S_n by removing a border strip for the first part of rho."""
    if not lam:
        return 1 if not rho else 0
    if not rho:
        return 0
    k = rho[0]
    rest = rho[1:]
    total = 0
    rows = len(lam)
    # beta-number (first-column hook length) formulation of rim hook removal
    beta = [lam[i] + (rows - 1 - i) for i in range(rows)]
    beta_set = set(beta)
    for b in beta:
        if b - k >= 0 and (b - k) not in beta_set:
            nb = sorted([x if x != b else b - k for x in beta], reverse=True)
            height = sum(1 for x in beta if b - k < x < b)
            new_lam = tuple(x for x in (nb[i] - (rows - 1 - i) for i in range(rows)) if x > 0)
            total += (-1) ** height * mn_character(new_lam, rest)
    return total


def sn_character(lam: Partition, rho: Partition | tuple[int, ...]) -> int:
    rho_t = tuple(rho.parts) if isinstance(rho, Partition) else tuple(rho)
    return mn_character(tuple(lam.parts), rho_t)


def sn_inner_product_induced(lam: Partition, mu: Partition, nu: Partition) -> Fraction:
    """<chi_lam, Ind_{S_a x S_b}^{S_n}(chi_mu x chi_nu)> by Frobenius reciprocity.

    Independent character-theoretic oracle for Littlewood-Richardson numbers.
    """
    a, b = mu.size, nu.size
    assert lam.size == a + b
    total = Fraction(0)
    for r1 in partitions(a):
        for r2 in partitions(b):
            merged = tuple(sorted(r1 + r2, reverse=True))
            val = (sn_character(lam, merged)
                   * sn_character(mu, r1) * sn_character(nu, r2))
            if val:
                total += Fraction(val, centralizer_order(r1) * centralizer_order(r2))
    assert total.denominator == 1
    return total


def sn_refl_tensor_mult(lam: Partition) -> int:
    """dim Hom(sigma_lam tensor refl, sigma_lam) over S_n, via exact characters."""
    n = lam.size
    total = Fraction(0)
    for rho in partitions(n):
        fixed = sum(1 for p in rho if p == 1)
        chi = sn_character(lam, rho)
        total += Fraction((fixed - 1) * chi * chi, centralizer_order(rho))
    assert total.denominator == 1
    return int(total)


# ---------------------------------------------------------------------------
# W(B_n): classes and wreath characters


def bn_classes(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Conjugacy classes of W(B_n) as (positive cycle type, negative cycle type)."""
    out = []
    for s in range(n + 1):
        for pos in partitions(n - s):
            for neg in partitions(s):
                out.append((pos, neg))
    return out


def bn_class_size(n: int, cls) -> int:
    pos, neg = cls
    z = 1
    for part, mult in _multiplicities(pos).items():
        z *= (2 * part) ** mult * math.factorial(mult)
    for part, mult in _multiplicities(neg).items():
        z *= (2 * part) ** mult * math.factorial(mult)
    return (2 ** n) * math.factorial(n) // z


@lru_cache(maxsize=None)
def _bn_character_cached(left: tuple[int, ...], right: tuple[int, ...],
                         pos: tuple[int, ...], neg: tuple[int, ...]) -> int:
    """Wreath product character chi_{(left x right)} at class (pos, neg)."""
    a = sum(left)
    cycles = [(l, 1) for l in pos] + [(l, -1) for l in neg]
    total = 0
    m = len(cycles)
    for mask in range(1 << m):
        type_l, type_r = [], []
        factor = 1
        for i, (l, sign) in enumerate(cycles):
            if mask >> i & 1:
                type_r.append(l)
                factor *= sign
            else:
                type_l.append(l)
        if sum(type_l) != a:
            continue
        cl = mn_character(left, tuple(sorted(type_l, reverse=True)))
        if not cl:
            continue
        cr = mn_character(right, tuple(sorted(type_r, reverse=True)))
        if not cr:
            continue
        total += factor * cl * cr
    return total


def bn_character(bp: Bipartition, cls) -> int:
    pos, neg = cls
    return _bn_character_cached(tuple(bp.left.parts), tuple(bp.right.parts),
                                tuple(pos), tuple(neg))


def bn_inner_product(n: int, f, g) -> Fraction:
    """<f, g> over W(B_n) for class functions given as callables on classes."""
    total = Fraction(0)
    order = (2 ** n) * math.factorial(n)
    for cls in bn_classes(n):
        total += Fraction(bn_class_size(n, cls) * f(cls) * g(cls), order)
    return total


def bn_refl_character(n: int, cls) -> int:
    """Trace of a signed permutation on R^n: (#positive 1-cycles) - (#negative 1-cycles)."""
    pos, neg = cls
    return sum(1 for p in pos if p == 1) - sum(1 for q in neg if q == 1)


def bn_xi_character(cls) -> int:
    """Linear character with kernel W(D_n): product of the signs."""
    _, neg = cls
    return (-1) ** len(neg)


def bn_refl_tensor_mult(n: int, bp: Bipartition) -> int:
    f = lambda cls: bn_character(bp, cls) * bn_refl_character(n, cls)
    g = lambda cls: bn_character(bp, cls)
    val = bn_inner_product(n, f, g)
    assert val.denominator == 1
    return int(val)


def dn_refl_tensor_mult(n: int, bp: Bipartition) -> int:
    """dim Hom over W(D_n) of (res sigma) tensor refl into res sigma, n odd.

    For odd n every restriction lambda_L x lambda_R stays irreducible and the
    Mackey formula reduces the computation to two B_n inner products.
    """
    assert n % 2 == 1, "restriction splits for lambda_L = lambda_R; odd rank only"
    f = lambda cls: bn_character(bp, cls) * bn_refl_character(n, cls)
    g1 = lambda cls: bn_character(bp, cls)
    g2 = lambda cls: bn_character(bp, cls) * bn_xi_character(cls)
    val = bn_inner_product(n, f, g1) + bn_inner_product(n, f, g2)
    assert val.denominator == 1
    return int(val)


def bn_dimension(n: int, bp: Bipartition) -> int:
    return math.comb(n, bp.right.size) * bp.left.dimension() * bp.right.dimension()
