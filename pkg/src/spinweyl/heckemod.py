"""Explicit W-representations and one-W-type graded Hecke algebra modules.

Models: S_n by Young's seminormal form (rational matrices, explicit diagonal
invariant form), W(B_n) by the wreath-product construction on sign-subsets,
G2/F4 by central-idempotent splitting of tensor products of the reflection
representation and linear characters.  All matrices are exact rationals.

A W-type sigma extends to a (hermitian) one-W-type module iff the operators
sigma(p_omega) commute pairwise; the extension then acts by pi(omega) =
sigma(p_omega) and the Dirac operator on X (x) S is identically zero, so the
Dirac cohomology is all of X (x) S and the central character is read off the
joint spectrum of the commuting pi(omega).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .combinat import Partition, Bipartition, all_partitions
from .params import ParameterFunction, LinK, QuadK
from .rootsystem import RootSystem, WeylGroup, build, weyl_group, dot, reflect
from .scalars import Cyc, ZERO, ONE, sqrt_rational
from .clifford import SpinModule, PinCover, pin_cover, spin_module, spin_variants


# ---------------------------------------------------------------------------
# standard Young tableaux and the seminormal form


def standard_tableaux(lam: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """All standard tableaux of shape lam, entries 1..n, deterministic order."""
    n = lam.size
    rows = len(lam.parts)
    out = []

    def rec(shape_filled, placements, k):
        if k > n:
            tab = [[0] * lam.parts[i] for i in range(rows)]
            for entry, (i, j) in enumerate(placements, start=1):
                tab[i][j] = entry
            out.append(tuple(tuple(r) for r in tab))
            return
        for i in range(rows):
            j = shape_filled[i]
            if j < lam.parts[i] and (i == 0 or shape_filled[i - 1] > j):
                shape_filled[i] += 1
                placements.append((i, j))
                rec(shape_filled, placements, k + 1)
                placements.pop()
                shape_filled[i] -= 1

    rec([0] * rows, [], 1)
    return out


def _tableau_positions(tab) -> dict[int, tuple[int, int]]:
    return {v: (i, j) for i, row in enumerate(tab) for j, v in enumerate(row)}


def _swap_entries(tab, a, b):
    return tuple(tuple(b if v == a else a if v == b else v for v in row) for row in tab)


def _is_standard(tab) -> bool:
    for i, row in enumerate(tab):
        for j, v in enumerate(row):
            if j + 1 < len(row) and row[j + 1] < v:
                return False
            if i + 1 < len(tab) and j < len(tab[i + 1]) and tab[i + 1][j] < v:
                return False
    return True


@dataclass
class WRepresentation:
    """Generator matrices for the simple reflections, with an invariant form.

    ``gens[i]`` is the exact rational matrix of the i-th simple reflection;
    ``form`` is a symmetric positive matrix B with g^T B g = B for all g.
    """

    label: str
    rs: RootSystem
    gens: list[list[list[Fraction]]]
    form: list[list[Fraction]]
    dim: int
    _refl_mats: list | None = field(default=None, repr=False)

    def matrix_of_word(self, word) -> list[list[Fraction]]:
        m = linalg.identity(self.dim)
        for i in word:
            m = linalg.mat_mul(m, self.gens[i])
        return m

    def reflection_matrices(self) -> list:
        """sigma(s_alpha) for every positive root, cached."""
        if self._refl_mats is None:
            words = _reflection_words_cached(self.rs.cartan_type)
            self._refl_mats = [self.matrix_of_word(w) for w in words]
        return self._refl_mats

    def character_on(self, words) -> list[Fraction]:
        out = []
        for w in words:
            m = self.matrix_of_word(w)
            out.append(sum(m[i][i] for i in range(self.dim)))
        return out

    def verify_relations(self):
        ident = linalg.identity(self.dim)
        for i, g in enumerate(self.gens):
            assert linalg.mat_mul(g, g) == ident, f"{self.label}: s_{i}^2 != 1"
            for j in range(i + 1, len(self.gens)):
                m = self.rs.coxeter_matrix[i][j]
                prod = ident
                for _ in range(m):
                    prod = linalg.mat_mul(prod, self.gens[i])
                    prod = linalg.mat_mul(prod, self.gens[j])
                assert prod == ident, f"{self.label}: braid ({i},{j}) fails"
        for g in self.gens:
            gtbg = linalg.mat_mul(linalg.transpose(g), linalg.mat_mul(self.form, g))
            assert gtbg == self.form, f"{self.label}: form not invariant"

    def adjoint(self, m):
        """B-adjoint B^-1 m^T B (entries are real here, so no conjugation)."""
        binv = linalg.inverse(self.form)
        return linalg.mat_mul(binv, linalg.mat_mul(linalg.transpose(m), self.form))


def ysf_representation(lam: Partition) -> WRepresentation:
    """Young's seminormal form of the S_n irreducible for lam, with its
    diagonal invariant form."""
    n = lam.size
    rs = build("A", n - 1) if n >= 2 else None
    tabs = standard_tableaux(lam)
    index = {t: i for i, t in enumerate(tabs)}
    d = len(tabs)
    gens = []
    for gi in range(n - 1):
        a, b = gi + 1, gi + 2
        mat = linalg.zeros(d, d)
        for t, tab in enumerate(tabs):
            pos = _tableau_positions(tab)
            (ia, ja), (ib, jb) = pos[a], pos[b]
            dist = (jb - ib) - (ja - ia)
            rho = Fraction(1, dist)
            swapped = _swap_entries(tab, a, b)
            if _is_standard(swapped):
                s = index[swapped]
                mat[t][t] += rho
                if dist > 0:
                    mat[s][t] += 1
                else:
                    mat[s][t] += 1 - rho * rho
            else:
                mat[t][t] += rho
        gens.append(mat)
    # diagonal invariant form: gamma_{s_i T} = (1 - rho^2) gamma_T along any path
    gamma = [None] * d
    gamma[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for t, tab in enumerate(tabs):
            if gamma[t] is None:
                continue
            pos = _tableau_positions(tab)
            for gi in range(n - 1):
                a, b = gi + 1, gi + 2
                swapped = _swap_entries(tab, a, b)
                if not _is_standard(swapped):
                    continue
                s = index[swapped]
                if gamma[s] is not None:
                    continue
                (ia, ja), (ib, jb) = pos[a], pos[b]
                dist = (jb - ib) - (ja - ia)
                rho = Fraction(1, dist)
                if dist > 0:
                    gamma[s] = gamma[t] * (1 - rho * rho)
                else:
                    gamma[s] = gamma[t] / (1 - rho * rho)
                changed = True
    assert all(g is not None and g > 0 for g in gamma)
    form = linalg.zeros(d, d)
    for t in range(d):
        form[t][t] = gamma[t]
    rep = WRepresentation(label=str(lam), rs=rs, gens=gens, form=form, dim=d)
    if n >= 2:
        rep.verify_relations()
    return rep


# ---------------------------------------------------------------------------
# W(B_n) wreath-product models


def wreath_representation(n: int, bp: Bipartition) -> WRepresentation:
    """The W(B_n)-irreducible lambda_L x lambda_R on sign-subsets.

    Basis: (A, T_L, T_R) with A an s-subset of 1..n carrying the sign
    character of (Z/2)^n, T_L/T_R standard tableaux of lambda_L/lambda_R.
    Convention: n x 0 is trivial, (n-1) x (1) is the reflection
    representation, 0 x 1^n is the sign representation.
    """
    rs = build("B", n)
    s = bp.right.size
    subsets = list(itertools.combinations(range(1, n + 1), s))
    sub_index = {a: i for i, a in enumerate(subsets)}
    left = ysf_representation(bp.left) if bp.left.size >= 2 else None
    right = ysf_representation(bp.right) if bp.right.size >= 2 else None
    dl = left.dim if left else 1
    dr = right.dim if right else 1
    d = len(subsets) * dl * dr

    def block(bi, bj, mat_l, mat_r):
        """Place mat_l (x) mat_r into block (bi, bj) of a d x d matrix."""
        m = linalg.zeros(d, d)
        kron = linalg.kron(mat_l, mat_r)
        off_i, off_j = bi * dl * dr, bj * dl * dr
        for i in range(dl * dr):
            for j in range(dl * dr):
                m[off_i + i][off_j + j] = kron[i][j]
        return m

    idl = linalg.identity(dl)
    idr = linalg.identity(dr)
    gens = []
    for gi in range(n - 1):
        # transposition (gi+1, gi+2)
        a, b = gi + 1, gi + 2
        mat = linalg.zeros(d, d)
        for bi, A in enumerate(subsets):
            in_a, in_b = a in A, b in A
            img = tuple(sorted(b if x == a else a if x == b else x for x in A))
            bj = sub_index[img]
            if in_a and in_b:
                # adjacent transposition inside the sign side
                ml, mr = idl, right.gens[A.index(a)]
            elif not in_a and not in_b:
                comp = tuple(x for x in range(1, n + 1) if x not in A)
                ml, mr = left.gens[comp.index(a)], idr
            else:
                # the swap relabels which slot carries the sign; increasing
                # enumerations keep both side permutations trivial
                ml, mr = idl, idr
            mat = linalg.mat_add(mat, block(bi, bj, ml, mr))
        gens.append(mat)
    # sign flip at coordinate n
    mat = linalg.zeros(d, d)
    for bi, A in enumerate(subsets):
        sign = Fraction(-1 if n in A else 1)
        blk = block(bi, bi, linalg.mat_scale(idl, sign), idr)
        mat = linalg.mat_add(mat, blk)
    gens.append(mat)

    form = linalg.zeros(d, d)
    fl = left.form if left else [[Fraction(1)]]
    fr = right.form if right else [[Fraction(1)]]
    kf = linalg.kron(fl, fr)
    for bi in range(len(subsets)):
        off = bi * dl * dr
        for i in range(dl * dr):
            form[off + i][off + i] = kf[i][i]
    rep = WRepresentation(label=str(bp), rs=rs, gens=gens, form=form, dim=d)
    rep.verify_relations()
    return rep


# ---------------------------------------------------------------------------
# exceptional models by tensor splitting


class _ModelPool:
    """Greedy closure of explicit exceptional models under tensor extraction."""

    def __init__(self, type_str: str):
        from .chartab import weyl_character_table, exceptional_labels
        self.ts = type_str
        self.rs = build(type_str)
        self.group = weyl_group(type_str)
        self.table = weyl_character_table(type_str)
        self.labels = exceptional_labels(type_str)
        self.class_words = [self.group.words[rep] for rep in self.table.classes.reps]
        self.models: dict[str, WRepresentation] = {}
        self._chars: dict[str, list[Fraction]] = {}
        self._seed()

    def _seed(self):
        # linear characters straight from the table
        gen_classes = [int(self.table.classes.class_of[
            int(self.group.right_cols[i][0])]) for i in range(self.rs.rank)]
        for ri, row in enumerate(self.table.rows):
            if self.table.degrees[ri] != 1:
                continue
            gens = []
            for i in range(self.rs.rank):
                v = row[gen_classes[i]]
                gens.append([[v.as_fraction()]])
            rep = WRepresentation(label=self.labels[ri], rs=self.rs, gens=gens,
                                  form=[[Fraction(1)]], dim=1)
            rep.verify_relations()
            self.models[self.labels[ri]] = rep
        # ambient coordinate representation (reflection rep plus trivial summands)
        amb_gens = [self.rs.reflection_matrix(a) for a in self.rs.simple_roots]
        amb = WRepresentation(label="_ambient", rs=self.rs, gens=amb_gens,
                              form=linalg.identity(self.rs.ambient_dim),
                              dim=self.rs.ambient_dim)
        amb.verify_relations()
        refl_label = self._extract_all_new(amb, limit_labels=None)
        # keep tensoring with available models until nothing new shows up

    def char_vector(self, rep: WRepresentation) -> list[Fraction]:
        if rep.label not in self._chars:
            self._chars[rep.label] = rep.character_on(self.class_words)
        return self._chars[rep.label]

    def _row_of_char(self, chi) -> int | None:
        vals = tuple(Cyc.rational(c) for c in chi)
        for i, row in enumerate(self.table.rows):
            if tuple(row) == vals:
                return i
        return None

    def _extract_all_new(self, rep: WRepresentation, limit_labels):
        chi = [Cyc.rational(c) for c in self.char_vector(rep)]
        mults = self.table.decompose(chi)
        got = None
        for ri, m in enumerate(mults):
            lab = self.labels[ri]
            if m == 1 and lab not in self.models:
                self.models[lab] = self._project_out(rep, ri)
                got = lab
        return got

    def _project_out(self, rep: WRepresentation, row_index: int) -> WRepresentation:
        """Extract the multiplicity-one constituent row_index from rep.

        u = P v for one probe vector v, where P is the central idempotent of
        the target row; the cyclic span of u is then one copy of the
        irreducible because the multiplicity is one.  The invariant form is
        the restriction of the ambient model's form to the new basis.
        """
        table = self.table
        deg = table.degrees[row_index]
        g = self.group
        class_of, _, _ = g.conjugacy_classes()
        inv = g.inv_array()
        left_cols = _left_columns(g)
        chi_by_class = table.rows[row_index]
        d = rep.dim
        # integer-scaled generator matrices: gens[i] = int matrix / den
        int_gens = []
        for m in rep.gens:
            den = 1
            for row in m:
                for x in row:
                    den = den * x.denominator // _gcd_int(den, x.denominator)
            int_gens.append(([[int(x * den) for x in row] for row in m], den))
        v0 = [1 + (3 * i * i) % 17 for i in range(d)]
        vecs: dict[int, tuple[list[int], int]] = {0: (v0, 1)}
        acc = [Fraction(0)] * d
        order = [0]
        seen = {0}
        qi = 0
        while qi < len(order):
            x = order[qi]
            qi += 1
            vx, den = vecs.pop(x)
            c = chi_by_class[int(class_of[int(inv[x])])].as_fraction()
            if c:
                for t in range(d):
                    if vx[t]:
                        acc[t] += c * Fraction(vx[t], den)
            for gi in range(self.rs.rank):
                y = int(left_cols[gi][x])       # s_i * x
                if y not in seen:
                    seen.add(y)
                    gm, gden = int_gens[gi]
                    ny = [sum(gm[r][t] * vx[t] for t in range(d) if vx[t])
                          for r in range(d)]
                    nden = den * gden
                    gg = nden
                    for t in ny:
                        gg = _gcd_int(gg, t)
                        if gg == 1:
                            break
                    if gg > 1:
                        ny = [t // gg for t in ny]
                        nden //= gg
                    vecs[y] = (ny, nden)
                    order.append(y)
        assert len(order) == g.size
        u = [Fraction(deg, g.size) * t for t in acc]
        assert any(u), "projector annihilated the probe vector"
        basis = [u]
        frontier = [u]
        while len(basis) < deg:
            new_frontier = []
            for w in frontier:
                for gi in range(self.rs.rank):
                    img = linalg.mat_vec(rep.gens[gi], w)
                    if linalg.rank(basis + [img]) > len(basis):
                        basis.append(img)
                        new_frontier.append(img)
                        if len(basis) == deg:
                            break
                if len(basis) == deg:
                    break
            assert new_frontier or len(basis) == deg, "cyclic span too small"
            frontier = new_frontier
        bt = linalg.transpose(basis)   # columns are the new basis
        gens = []
        for gi in range(self.rs.rank):
            img = linalg.mat_mul(rep.gens[gi], bt)
            gens.append(linalg.solve_matrix(bt, img))
        # restriction of the ambient invariant form to the extracted basis
        form = linalg.mat_mul(basis, linalg.mat_mul(rep.form, bt))
        out = WRepresentation(label=self.labels[row_index], rs=self.rs, gens=gens,
                              form=form, dim=deg)
        out.verify_relations()
        chi = [Cyc.rational(c) for c in self.char_vector(out)]
        assert tuple(chi) == tuple(self.table.rows[row_index]), \
            f"extracted model has wrong character for {out.label}"
        return out

    def get(self, label: str) -> WRepresentation:
        if label in self.models:
            return self.models[label]
        # greedy tensor closure, smallest usable tensor first
        for _round in range(8):
            pool = sorted(self.models, key=lambda l: (self.models[l].dim, l))
            progress = False
            pairs = sorted(
                ((l1, l2) for l1 in pool for l2 in pool
                 if self.models[l1].dim * self.models[l2].dim <= 160),
                key=lambda p: self.models[p[0]].dim * self.models[p[1]].dim)
            for l1, l2 in pairs:
                r1, r2 = self.models[l1], self.models[l2]
                chi = [Cyc.rational(a * b) for a, b in
                       zip(self.char_vector(r1), self.char_vector(r2))]
                mults = self.table.decompose(chi)
                wanted = [ri for ri, m in enumerate(mults)
                          if m == 1 and self.labels[ri] not in self.models]
                if not wanted:
                    continue
                tensor = WRepresentation(
                    label=f"{l1}(x){l2}", rs=self.rs,
                    gens=[linalg.kron(a, b) for a, b in zip(r1.gens, r2.gens)],
                    form=linalg.kron(r1.form, r2.form), dim=r1.dim * r2.dim)
                for ri in wanted:
                    self.models[self.labels[ri]] = self._project_out(tensor, ri)
                    progress = True
                if label in self.models:
                    return self.models[label]
            if not progress:
                break
        if label not in self.models:
            raise RuntimeError(
                f"could not reach {label} by multiplicity-one tensor extraction")
        return self.models[label]

    def all_models(self) -> dict[str, WRepresentation]:
        """Force construction of every irreducible model."""
        for lab in self.labels:
            self.get(lab)
        return self.models


def _left_columns(g: WeylGroup):
    """left_cols[i][x] = index of s_i * x, derived from inverses and right columns."""
    if not hasattr(g, "_left_cols"):
        import numpy as np
        inv = np.asarray(g.inv_array())
        g._left_cols = [inv[col[inv]] for col in g.right_cols]
    return g._left_cols


def _invariant_form(rep: WRepresentation, g: WeylGroup):
    """B = sum over the group of rho(w)^T rho(w), by BFS accumulation."""
    d = rep.dim
    mats = {0: linalg.identity(d)}
    acc = linalg.zeros(d, d)
    order = [0]
    seen = {0}
    qi = 0
    while qi < len(order):
        x = order[qi]
        qi += 1
        mx = mats.pop(x)
        acc = linalg.mat_add(acc, linalg.mat_mul(linalg.transpose(mx), mx))
        for gi in range(len(rep.gens)):
            y = int(g.right_cols[gi][x])
            if y not in seen:
                seen.add(y)
                mats[y] = linalg.mat_mul(mx, rep.gens[gi])
                order.append(y)
    assert len(order) == g.size
    return acc


@lru_cache(maxsize=None)
def _model_pool(type_str: str) -> _ModelPool:
    return _ModelPool(type_str)


def build_irrep(type_str: str, rank: int | None, label) -> WRepresentation:
    """Explicit model: partitions for A, bipartitions for B, (d,b) labels for G2/F4."""
    letter = type_str.strip().upper().replace("_", "")[0]
    if letter == "A":
        assert isinstance(label, Partition)
        return ysf_representation(label)
    if letter == "B":
        assert isinstance(label, Bipartition)
        n = rank if rank is not None else int(type_str[1:])
        return wreath_representation(n, label)
    if letter in ("G", "F"):
        return _model_pool(type_str).get(label)
    raise ValueError(f"no explicit models for type {type_str}")


# ---------------------------------------------------------------------------
# p_omega, the commutator test and the extension


def _reflection_words(rs: RootSystem):
    g = weyl_group(rs.cartan_type)
    return [g.words[g.reflection_index(a)] for a in rs.positive_roots]


@lru_cache(maxsize=None)
def _reflection_words_cached(type_str: str):
    return _reflection_words(build(type_str))


def p_omega(rep: WRepresentation, omega, k: ParameterFunction | None,
            symbolic: bool = False):
    """Matrix of p_omega = 1/2 sum_a k_a <omega, a^vee> sigma(s_a).

    omega is a rational vector in the ambient space.  With symbolic=True the
    entries are LinK polynomials in (k_s, k_l); otherwise k must be given and
    entries are Fractions.
    """
    rs = rep.rs
    d = rep.dim
    zero = LinK() if symbolic else Fraction(0)
    out = [[zero for _ in range(d)] for _ in range(d)]
    for alpha, m in zip(rs.positive_roots, rep.reflection_matrices()):
        pair = Fraction(2) * dot(alpha, omega) / dot(alpha, alpha)
        if pair == 0:
            continue
        if symbolic:
            coeff = (LinK.kl() if rs.is_long(alpha) else LinK.ks()).scale(
                Fraction(1, 2) * pair)
            for i in range(d):
                row = m[i]
                for j in range(d):
                    if row[j]:
                        out[i][j] = out[i][j] + coeff.scale(row[j])
        else:
            coeff = Fraction(1, 2) * k.value(rs.is_long(alpha)) * pair
            for i in range(d):
                row = m[i]
                for j in range(d):
                    if row[j]:
                        out[i][j] = out[i][j] + coeff * row[j]
    return out


def commutator_test(rep: WRepresentation, k: ParameterFunction | None = None,
                    symbolic: bool = False) -> bool:
    """True iff all [sigma(p_{alpha_i}), sigma(p_{alpha_j})] vanish (basis pairs
    suffice by bilinearity); symbolic=True decides vanishing for every k."""
    rs = rep.rs
    ps = [p_omega(rep, a, k, symbolic=symbolic) for a in rs.simple_roots]
    d = rep.dim
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            a, b = ps[i], ps[j]
            for r in range(d):
                for c in range(d):
                    if symbolic:
                        ab = _quad_dot(a, b, r, c)
                        ba = _quad_dot(b, a, r, c)
                        if not (ab - ba).is_zero():
                            return False
                    else:
                        ab = sum(a[r][t] * b[t][c] for t in range(d))
                        ba = sum(b[r][t] * a[t][c] for t in range(d))
                        if ab != ba:
                            return False
    return True


def _quad_dot(a, b, r, c) -> QuadK:
    out = QuadK()
    d = len(a)
    for t in range(d):
        x, y = a[r][t], b[t][c]
        if not x.is_zero() and not y.is_zero():
            out = out + x * y
    return out


@dataclass
class OneWTypeModule:
    """A W-type extended to the graded Hecke algebra by pi(omega) = sigma(p_omega)."""

    sigma: WRepresentation
    k: ParameterFunction
    omega_action: list  # matrices for the simple-root basis of V
    central_char: object = None

    @property
    def dim(self) -> int:
        return self.sigma.dim

    def pi_omega(self, omega):
        """Action of any rational ambient vector omega in span(simple roots)."""
        rs = self.sigma.rs
        simples_t = [list(col) for col in zip(*rs.simple_roots)]
        coeffs = linalg.solve(simples_t, list(omega))
        d = self.dim
        out = linalg.zeros(d, d)
        for c, m in zip(coeffs, self.omega_action):
            if c:
                out = linalg.mat_add(out, linalg.mat_scale(m, c))
        return out


def extend_to_hecke(rep: WRepresentation, k: ParameterFunction) -> OneWTypeModule:
    """Build the one-W-type module on rep; raises if the commutator test fails."""
    if not commutator_test(rep, k):
        raise ValueError(f"{rep.label} does not extend at k = {k}")
    rs = rep.rs
    actions = [p_omega(rep, a, k) for a in rs.simple_roots]
    mod = OneWTypeModule(sigma=rep, k=k, omega_action=actions)
    _verify_hecke_relations(mod)
    mod.central_char = central_character(mod)
    return mod


def _verify_hecke_relations(mod: OneWTypeModule):
    """Pairwise commutation and the cross relation
    pi(omega) sigma(s_i) - sigma(s_i) pi(s_i(omega)) = k_i <omega, alpha_i^vee>."""
    rep, k = mod.sigma, mod.k
    rs = rep.rs
    d = rep.dim
    for i, a in enumerate(mod.omega_action):
        for b in mod.omega_action[i + 1:]:
            assert linalg.mat_mul(a, b) == linalg.mat_mul(b, a), "omega actions do not commute"
    for gi, alpha in enumerate(rs.simple_roots):
        s = rep.gens[gi]
        for omega in rs.simple_roots:
            lhs = linalg.mat_sub(
                linalg.mat_mul(mod.pi_omega(omega), s),
                linalg.mat_mul(s, mod.pi_omega(reflect(omega, alpha))))
            c = k.value(rs.is_long(alpha)) * Fraction(2) * dot(alpha, omega) / dot(alpha, alpha)
            expect = linalg.mat_scale(linalg.identity(d), c)
            assert lhs == expect, "Hecke cross relation failed"


def verify_star_hermitian(mod: OneWTypeModule) -> bool:
    """pi(omega)^dagger == pi(omega^*) with omega^* = -t_w0 w0(omega) t_w0,
    daggers taken for the invariant form of sigma."""
    rep = mod.sigma
    rs = rep.rs
    w0 = rs.longest_element()
    s_w0 = rep.matrix_of_word(w0.word)
    for omega in rs.simple_roots:
        pi = mod.pi_omega(omega)
        w0_omega = linalg.mat_vec(w0.ambient_matrix, list(omega))
        inner = mod.pi_omega([-x for x in w0_omega])
        rhs = linalg.mat_mul(s_w0, linalg.mat_mul(inner, s_w0))
        if rep.adjoint(pi) != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# the Dirac operator and its cohomology


@dataclass
class DiracData:
    operator: list          # matrix on X (x) S over Cyc
    kernel_dim: int
    image_dim: int
    ker_cap_im_dim: int
    module: OneWTypeModule
    spin: SpinModule


def dirac_operator(mod: OneWTypeModule, sm: SpinModule) -> DiracData:
    """D = sum_i pi(omega~_i) (x) gamma_i over an orthonormal basis of V."""
    rep = mod.sigma
    rs = rep.rs
    onb = rs.orthonormal_basis()
    d, ds = rep.dim, sm.dim
    n = d * ds
    total = [[ZERO] * n for _ in range(n)]
    simples_t = [[Cyc.rational(x) for x in col] for col in zip(*rs.simple_roots)]
    for i, e_row in enumerate(onb):
        # pi(omega_e) from linearity over the simple-root basis (cyclotomic coords)
        coeffs = linalg.solve(simples_t, list(e_row))
        pi_e = [[ZERO] * d for _ in range(d)]
        for c, m in zip(coeffs, mod.omega_action):
            if not c.is_zero():
                cm = [[c * Cyc.rational(x) for x in row] for row in m]
                pi_e = linalg.mat_add(pi_e, cm)
        # sigma(p_{omega_e}) with cyclotomic coefficients
        p_e = _p_omega_cyc(rep, e_row, mod.k)
        tilde = linalg.mat_sub(pi_e, p_e)
        gi = sm.gammas[i]
        total = linalg.mat_add(total, linalg.kron(tilde, gi))
    ker = linalg.nullspace(total)
    img_rank = linalg.rank(total)
    if img_rank == 0:
        cap = 0
    else:
        pivots, _ = linalg.column_space_basis(total)
        img_rows = [[total[i][j] for i in range(n)] for j in pivots]
        cap = len(linalg.intersect_rowspaces(img_rows, ker))
    return DiracData(operator=total, kernel_dim=len(ker), image_dim=img_rank,
                     ker_cap_im_dim=cap, module=mod, spin=sm)


def _p_omega_cyc(rep: WRepresentation, omega_cyc, k: ParameterFunction):
    rs = rep.rs
    d = rep.dim
    out = [[ZERO] * d for _ in range(d)]
    for alpha, m in zip(rs.positive_roots, rep.reflection_matrices()):
        pair = ZERO
        for c, x in zip(omega_cyc, alpha):
            pair = pair + c * Cyc.rational(x)
        pair = pair * Cyc.rational(Fraction(2) / dot(alpha, alpha))
        if pair.is_zero():
            continue
        coeff = pair * Cyc.rational(Fraction(1, 2) * k.value(rs.is_long(alpha)))
        for i in range(d):
            for j in range(d):
                if m[i][j]:
                    out[i][j] = out[i][j] + coeff * Cyc.rational(m[i][j])
    return out


def cohomology_character(dd: DiracData, cov: PinCover):
    """Multiplicities of the cover-table rows in H^D = ker D / (ker cap im D).

    For one-W-type modules D = 0, so this is just sigma (x) S; computed through
    the kernel anyway as a structural safeguard.
    """
    from .chartab import cover_character_table, decompose_spin_tensor
    assert dd.ker_cap_im_dim == 0
    assert dd.kernel_dim == dd.module.dim * dd.spin.dim, "Dirac operator not zero"
    table = cover_character_table(cov.rs.cartan_type)
    _, reps, _ = cov.conjugacy_classes()
    class_of_w, _, _ = cov.group.conjugacy_classes()
    # characters of sigma on the projected class representatives
    rep_words = [cov.group.words[int(cov.proj[r])] for r in reps]
    sig = tuple(Cyc.rational(c) for c in dd.module.sigma.character_on(rep_words))
    return decompose_spin_tensor(cov, table, sig, dd.spin)


# ---------------------------------------------------------------------------
# central characters by joint spectrum


def central_character(mod: OneWTypeModule):
    """The weight nu in V with the commuting pi(omega) acting by <nu, .>.

    Returns (nu, weight_multiset): nu is one weight as an ambient rational
    vector; all weights lie in one W-orbit (asserted by the orbit check in the
    callers where feasible).
    """
    rs = mod.sigma.rs
    mats = mod.omega_action
    d = mod.dim
    spaces = [linalg.identity(d)]
    for m in mats:
        new_spaces = []
        for s in spaces:
            if not s:
                continue
            new_spaces.extend(_split_eigen(s, m))
        spaces = new_spaces
    weights = []
    for s in spaces:
        vals = []
        for m in mats:
            v0 = s[0]
            img = linalg.mat_vec(m, v0)
            lam = _ratio(img, v0)
            vals.append(lam)
        weights.append((tuple(vals), len(s)))
    # convert <nu, alpha_i> values to ambient vectors
    n = rs.rank
    gram = [[dot(rs.simple_roots[i], rs.simple_roots[j]) for j in range(n)]
            for i in range(n)]
    out = []
    for vals, mult in weights:
        c = linalg.solve(gram, list(vals))
        nu = tuple(sum(c[j] * rs.simple_roots[j][t] for j in range(n))
                   for t in range(rs.ambient_dim))
        out.append((nu, mult))
    assert sum(m for _, m in out) == d
    # consistency: sum of squared weight entries equals pi(Omega) scalar
    return out


def _split_eigen(space_rows, m):
    """Split a subspace (rows) into eigenspaces of m (must act with rational
    eigenvalues; raises otherwise)."""
    # restrict m to the space: coordinates at pivot columns of the RREF basis
    red, pivots = linalg.rref(space_rows)
    rows = [red[i] for i in range(len(pivots))]
    imgs = [linalg.mat_vec(m, r) for r in rows]
    coords = [[img[p] for p in pivots] for img in imgs]
    # restricted action matrix: imgs[i] = sum_j coords[i][j] rows[j]
    cp = linalg.charpoly([list(r) for r in zip(*coords)])
    roots = _rational_roots(cp)
    total = 0
    out = []
    k = len(rows)
    for lam in roots:
        shifted = [[coords[i][j] - (lam if i == j else 0) for j in range(k)]
                   for i in range(k)]
        ker = linalg.nullspace([list(r) for r in zip(*shifted)])
        if not ker:
            continue
        sub = []
        for coeff in ker:
            vec = [sum(coeff[i] * rows[i][t] for i in range(k))
                   for t in range(len(rows[0]))]
            sub.append(vec)
        out.append(sub)
        total += len(ker)
    if total != k:
        raise ArithmeticError(
            "irrational eigenvalues in the joint spectrum (convention error)")
    return out


def _ratio(img, v):
    for a, b in zip(img, v):
        if b:
            lam = Fraction(a) / b
            break
    else:
        raise AssertionError("zero vector")
    assert all(Fraction(a) == lam * b for a, b in zip(img, v)), "not an eigenvector"
    return lam


def _rational_roots(cp) -> list[Fraction]:
    """Rational roots of a polynomial with Fraction coefficients (lowest first)."""
    den = 1
    for c in cp:
        den = den * Fraction(c).denominator // _gcd_int(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in cp]
    while ints and ints[-1] == 0:
        ints.pop()
    # strip zero roots
    roots = []
    shift = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        shift += 1
    if shift:
        roots.append(Fraction(0))
    if len(ints) <= 1:
        return roots
    lead, trail = abs(ints[-1]), abs(ints[0])
    for q in _divisors(lead):
        for p in _divisors(trail):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                val = Fraction(0)
                for c in reversed(ints):
                    val = val * cand + c
                if val == 0:
                    roots.append(cand)
    return roots


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# reflection-representation tensor multiplicity


def refl_tensor_mult(type_str: str, row_index: int) -> int:
    """dim Hom_W(sigma (x) refl, sigma) from the computed character table."""
    from .chartab import weyl_character_table
    table = weyl_character_table(type_str)
    g = table.group
    rs = g.rs
    refl = []
    for rep in table.classes.reps:
        w = g.element(rep)
        tr = sum(w.ambient_matrix[i][i] for i in range(rs.ambient_dim))
        refl.append(Cyc.rational(tr - (rs.ambient_dim - rs.rank)))
    sig = table.rows[row_index]
    prod = tuple(a * b for a, b in zip(sig, refl))
    val = table.inner_product(prod, sig)
    assert val.denominator == 1
    return int(val)
