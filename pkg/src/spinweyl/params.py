"""Parameter functions k on roots and small polynomials in (k_s, k_l).

A W-invariant parameter function takes one value on each root length; in
simply-laced types the two values coincide.  Central character entries are
linear in (k_s, k_l), Casimir scalars are quadratic, so two tiny polynomial
classes with exact rational coefficients cover all symbolic needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ParameterFunction:
    """Values of k on short and long positive roots (equal if simply laced)."""

    k_short: Fraction
    k_long: Fraction

    @staticmethod
    def make(ks, kl=None) -> "ParameterFunction":
        ks = Fraction(ks)
        return ParameterFunction(ks, Fraction(kl) if kl is not None else ks)

    @property
    def equal(self) -> bool:
        return self.k_short == self.k_long

    def value(self, is_long: bool) -> Fraction:
        return self.k_long if is_long else self.k_short


ONE_PARAM = ParameterFunction.make(1)


class LinK:
    """c0 + cs*k_s + cl*k_l with Fraction coefficients."""

    __slots__ = ("c0", "cs", "cl")

    def __init__(self, c0=0, cs=0, cl=0):
        self.c0, self.cs, self.cl = Fraction(c0), Fraction(cs), Fraction(cl)

    @staticmethod
    def ks():
        return LinK(0, 1, 0)

    @staticmethod
    def kl():
        return LinK(0, 0, 1)

    def __add__(self, other):
        other = _lin(other)
        return LinK(self.c0 + other.c0, self.cs + other.cs, self.cl + other.cl)

    __radd__ = __add__

    def __neg__(self):
        return LinK(-self.c0, -self.cs, -self.cl)

    def __sub__(self, other):
        return self + (-_lin(other))

    def __rsub__(self, other):
        return _lin(other) + (-self)

    def scale(self, c) -> "LinK":
        c = Fraction(c)
        return LinK(self.c0 * c, self.cs * c, self.cl * c)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _lin(other)
        assert self.c0 == 0 and other.c0 == 0, "only degree-2 products supported"
        return QuadK(
            ss=self.cs * other.cs,
            sl=self.cs * other.cl + self.cl * other.cs,
            ll=self.cl * other.cl,
        )

    __rmul__ = __mul__

    def specialize(self, k: ParameterFunction) -> Fraction:
        return self.c0 + self.cs * k.k_short + self.cl * k.k_long

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.cs == 0 and self.cl == 0

    def __eq__(self, other):
        other = _lin(other)
        return (self.c0, self.cs, self.cl) == (other.c0, other.cs, other.cl)

    def __hash__(self):
        return hash((self.c0, self.cs, self.cl))

    def __str__(self):
        parts = []
        for c, name in ((self.c0, ""), (self.cs, "ks"), (self.cl, "kl")):
            if c == 0:
                continue
            if name == "":
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    __repr__ = __str__

    @staticmethod
    def parse(text: str) -> "LinK":
        text = text.replace(" ", "")
        if not text or text == "0":
            return LinK()
        out = LinK()
        text = text.replace("-", "+-")
        for term in text.split("+"):
            if not term:
                continue
            if term.endswith("ks"):
                c = term[:-2].rstrip("*")
                coeff = Fraction(c) if c not in ("", "-") else Fraction(f"{c}1")
                out = out + LinK(0, coeff, 0)
            elif term.endswith("kl"):
                c = term[:-2].rstrip("*")
                coeff = Fraction(c) if c not in ("", "-") else Fraction(f"{c}1")
                out = out + LinK(0, 0, coeff)
            else:
                out = out + LinK(Fraction(term))
        return out


def _lin(x) -> LinK:
    if isinstance(x, LinK):
        return x
    return LinK(Fraction(x))


class QuadK:
    """ss*k_s^2 + sl*k_s*k_l + ll*k_l^2 (+ lower terms) with Fraction coefficients."""

    __slots__ = ("c0", "s", "l", "ss", "sl", "ll")

    def __init__(self, c0=0, s=0, l=0, ss=0, sl=0, ll=0):
        self.c0, self.s, self.l = Fraction(c0), Fraction(s), Fraction(l)
        self.ss, self.sl, self.ll = Fraction(ss), Fraction(sl), Fraction(ll)

    def __add__(self, other):
        other = _quad(other)
        return QuadK(self.c0 + other.c0, self.s + other.s, self.l + other.l,
                     self.ss + other.ss, self.sl + other.sl, self.ll + other.ll)

    __radd__ = __add__

    def __neg__(self):
        return QuadK(-self.c0, -self.s, -self.l, -self.ss, -self.sl, -self.ll)

    def __sub__(self, other):
        return self + (-_quad(other))

    def scale(self, c) -> "QuadK":
        c = Fraction(c)
        return QuadK(self.c0 * c, self.s * c, self.l * c,
                     self.ss * c, self.sl * c, self.ll * c)

    def __mul__(self, other):
        assert isinstance(other, (int, Fraction))
        return self.scale(other)

    __rmul__ = __mul__

    def specialize(self, k: ParameterFunction) -> Fraction:
        ks, kl = k.k_short, k.k_long
        return (self.c0 + self.s * ks + self.l * kl
                + self.ss * ks * ks + self.sl * ks * kl + self.ll * kl * kl)

    def is_zero(self) -> bool:
        return all(c == 0 for c in (self.c0, self.s, self.l, self.ss, self.sl, self.ll))

    def __eq__(self, other):
        other = _quad(other)
        return all(getattr(self, f) == getattr(other, f)
                   for f in ("c0", "s", "l", "ss", "sl", "ll"))

    def __hash__(self):
        return hash((self.c0, self.s, self.l, self.ss, self.sl, self.ll))

    def __str__(self):
        names = (("c0", ""), ("s", "ks"), ("l", "kl"),
                 ("ss", "ks^2"), ("sl", "ks*kl"), ("ll", "kl^2"))
        parts = []
        for f, name in names:
            c = getattr(self, f)
            if c == 0:
                continue
            if not name:
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    __repr__ = __str__


def _quad(x) -> QuadK:
    if isinstance(x, QuadK):
        return x
    if isinstance(x, LinK):
        return QuadK(x.c0, x.cs, x.cl)
    return QuadK(Fraction(x))
