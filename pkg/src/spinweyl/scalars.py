"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is stored in the power basis 1, z, ..., z^(phi(N)-1) of zeta_N modulo
the N-th cyclotomic polynomial, as an integer coefficient vector over a common
positive denominator.  Every value is reduced to its minimal conductor on
construction, so equality and hashing are plain structural comparisons and a
rational number is always stored at conductor 1.

No floating point is ever used for an equality decision; ``to_complex`` exists
for reporting and sanity checks only.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


def euler_phi(n: int) -> int:
    assert n >= 1
    result = n
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (lowest degree first)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        c //= den[-1]
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert all(c == 0 for c in num)
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row j is the coordinate vector of zeta_n^(phi+j) in the power basis."""
    phi = euler_phi(n)
    cp = cyclotomic_polynomial(n)
    rows = []
    # x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})
    cur = [-c for c in cp[:phi]]
    rows.append(tuple(cur))
    for _ in range(phi, n):
        nxt = [0] + cur[:-1]
        if cur[-1]:
            top = cur[-1]
            for i in range(phi):
                nxt[i] -= top * cp[i]
        # nxt currently has length phi+? ensure trimmed
        cur = nxt[:phi]
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce_power_list(n: int, coeffs: list[int]) -> list[int]:
    """Reduce a coefficient list over powers zeta_n^0..zeta_n^(len-1) to the power basis."""
    phi = euler_phi(n)
    out = [0] * phi
    rows = None
    for j, c in enumerate(coeffs):
        if c == 0:
            continue
        j %= n
        if j < phi:
            out[j] += c
        else:
            if rows is None:
                rows = _reduction_rows(n)
            row = rows[j - phi]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return out


@lru_cache(maxsize=None)
def _galois_maps_fixing(n: int, m: int) -> tuple[int, ...]:
    """Units j mod n with j = 1 mod m (the Galois group of Q(zeta_n)/Q(zeta_m))."""
    return tuple(j for j in range(1, n) if gcd(j, n) == 1 and j % m == 1)


class Cyc:
    """An element of Q(zeta_N), reduced to minimal conductor, immutable."""

    __slots__ = ("n", "nums", "den", "_hash")

    def __init__(self, n: int, nums, den: int, reduce: bool = True):
        if reduce:
            n, nums, den = _canonical(n, list(nums), den)
        self.n = n
        self.nums = tuple(nums)
        self.den = den
        self._hash = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def rational(q) -> "Cyc":
        q = Fraction(q)
        return Cyc(1, [q.numerator], q.denominator, reduce=False)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyc":
        k %= n
        vec = [0] * n
        vec[k] = 1
        return Cyc(n, _reduce_power_list(n, vec), 1)

    @staticmethod
    def from_fractions(n: int, coords) -> "Cyc":
        coords = [Fraction(c) for c in coords]
        den = 1
        for c in coords:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in coords]
        assert len(nums) == euler_phi(n)
        return Cyc(n, nums, den)

    # -- basic accessors -------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.n

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.nums)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.nums)

    def is_rational(self) -> bool:
        return self.n == 1

    def as_fraction(self) -> Fraction:
        if self.n != 1:
            raise ValueError(f"not a rational number: {self}")
        return Fraction(self.nums[0], self.den)

    def is_integer(self) -> bool:
        return self.n == 1 and self.den == 1

    # -- arithmetic -------------------------------------------------------

    def _lift(self, n: int) -> list[int]:
        """Integer numerator vector at conductor n (a multiple of self.n)."""
        if n == self.n:
            return list(self.nums)
        step = n // self.n
        vec = [0] * n
        for i, a in enumerate(self.nums):
            if a:
                vec[(i * step) % n] = a
        return _reduce_power_list(n, vec)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = _lcm(self.n, other.n)
        a, b = self._lift(n), other._lift(n)
        da, db = self.den, other.den
        g = gcd(da, db)
        la, lb = db // g, da // g
        nums = [x * la + y * lb for x, y in zip(a, b)]
        return Cyc(n, nums, da // g * db)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, [-a for a in self.nums], self.den, reduce=False)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == 1:
            if self.nums[0] == 0:
                return ZERO
            nums = [self.nums[0] * y for y in other.nums]
            return Cyc(other.n, nums, self.den * other.den)
        if other.n == 1:
            return other * self
        n = _lcm(self.n, other.n)
        a, b = self._lift(n), other._lift(n)
        phi = euler_phi(n)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return Cyc(n, _reduce_power_list(n, conv), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("division by zero cyclotomic number")
        if self.n == 1:
            return Cyc(1, [self.den * (1 if self.nums[0] > 0 else -1)],
                       abs(self.nums[0]), reduce=False)
        # Extended Euclid of self against Phi_n over Q.
        cp = [Fraction(c) for c in cyclotomic_polynomial(self.n)]
        a = [Fraction(x, self.den) for x in self.nums]
        inv = _poly_modinv(a, cp)
        phi = euler_phi(self.n)
        inv += [Fraction(0)] * (phi - len(inv))
        return Cyc.from_fractions(self.n, inv[:phi])

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- Galois -----------------------------------------------------------

    def galois(self, j: int) -> "Cyc":
        """Image under zeta_n -> zeta_n^j, gcd(j, n) = 1."""
        if self.n == 1:
            return self
        assert gcd(j, self.n) == 1
        vec = [0] * self.n
        for i, a in enumerate(self.nums):
            if a:
                vec[(i * j) % self.n] += a
        return Cyc(self.n, _reduce_power_list(self.n, vec), self.den)

    def conjugate(self) -> "Cyc":
        return self.galois(self.n - 1) if self.n > 1 else self

    def is_real(self) -> bool:
        return self == self.conjugate()

    # -- comparisons and hashing ------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.n, self.nums, self.den) == (other.n, other.nums, other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.nums, self.den))
        return self._hash

    def sort_key(self):
        return (self.n, self.nums, self.den)

    def __bool__(self):
        return not self.is_zero()

    # -- conversion and display --------------------------------------------

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(a * z ** i for i, a in enumerate(self.nums)) / self.den

    def __str__(self):
        if self.n == 1:
            return _frac_str(Fraction(self.nums[0], self.den))
        terms = []
        for i, a in enumerate(self.nums):
            if a == 0:
                continue
            c = _frac_str(Fraction(abs(a), self.den))
            mon = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if mon and c == "1":
                t = mon
            elif mon:
                t = f"{c}*{mon}"
            else:
                t = c
            terms.append(("-" if a < 0 else "+", t))
        if not terms:
            return "0"
        sign0, t0 = terms[0]
        s = ("-" if sign0 == "-" else "") + t0
        for sign, t in terms[1:]:
            s += f" {sign} {t}"
        return f"{s}@{self.n}"

    __repr__ = __str__

    @staticmethod
    def parse(text: str) -> "Cyc":
        text = text.strip()
        if "@" in text:
            body, n_str = text.rsplit("@", 1)
            n = int(n_str)
        else:
            body, n = text, 1
        coords = [Fraction(0)] * euler_phi(n)
        body = body.replace(" - ", " + -").replace("- ", "-", 1) if body.startswith("-") else body.replace(" - ", " + -")
        for term in body.split(" + "):
            term = term.strip()
            if not term or term == "0":
                continue
            if "*" in term:
                c_str, mon = term.split("*")
                coeff = Fraction(c_str)
            elif "z" in term:
                mon = term.lstrip("-")
                coeff = Fraction(-1 if term.startswith("-") else 1)
            else:
                mon = ""
                coeff = Fraction(term)
            if mon:
                power = 1 if mon == "z" else int(mon.split("^")[1])
            else:
                power = 0
            coords[power] += coeff
        return Cyc.from_fractions(n, coords)


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _coerce(x):
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc.rational(x)
    return NotImplemented


def _canonical(n: int, nums: list[int], den: int):
    """Normalize sign/gcd and descend to the minimal conductor."""
    assert den != 0
    if den < 0:
        den = -den
        nums = [-a for a in nums]
    g = 0
    for a in nums:
        g = gcd(g, a)
    if g == 0:
        return 1, [0], 1
    g = gcd(g, den)
    if g > 1:
        nums = [a // g for a in nums]
        den //= g
    # try to descend one prime at a time
    changed = True
    while changed and n > 1:
        changed = False
        for p in prime_factors(n):
            m = n // p
            if m < 1:
                continue
            if _fixed_by_gal(n, m, nums):
                x = _solve_from_rref(n, m, nums)
                if x is None:
                    continue
                new_nums, new_den_mul = x
                nums = new_nums
                den = den * new_den_mul
                g2 = 0
                for a in nums:
                    g2 = gcd(g2, a)
                g2 = gcd(g2, den)
                if g2 > 1:
                    nums = [a // g2 for a in nums]
                    den //= g2
                n = m
                changed = True
                break
    if n == 1:
        return 1, nums, den
    return n, nums, den


def _fixed_by_gal(n: int, m: int, nums: list[int]) -> bool:
    for j in _galois_maps_fixing(n, m):
        vec = [0] * n
        for i, a in enumerate(nums):
            if a:
                vec[(i * j) % n] += a
        if _reduce_power_list(n, vec) != nums:
            return False
    return True


@lru_cache(maxsize=None)
def _descent_solver(n: int, m: int):
    """Fraction matrix S (phim x phin) with x = S . v solving B x = v when solvable."""
    phin, phim = euler_phi(n), euler_phi(m)
    cols = []
    for k in range(phim):
        vec = [0] * n
        vec[(k * (n // m)) % n] = 1
        cols.append(_reduce_power_list(n, vec))
    # B is phin x phim; compute left inverse via normal equations-free RREF of [B | I].
    B = [[Fraction(cols[j][i]) for j in range(phim)] for i in range(phin)]
    aug = [row + [Fraction(1 if i == k else 0) for k in range(phin)]
           for i, row in enumerate(B)]
    r = 0
    piv_cols = []
    for c in range(phim):
        pr = next((i for i in range(r, phin) if aug[i][c] != 0), None)
        assert pr is not None
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(phin):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    S = [aug[i][phim:] for i in range(phim)]
    # rows r..phin of aug give consistency conditions; capture them too
    cond = [aug[i][phim:] for i in range(phim, phin)] if phim < phin else []
    return S, cond


def _solve_from_rref(n: int, m: int, nums: list[int]):
    S, cond = _descent_solver(n, m)
    v = [Fraction(a) for a in nums]
    for row in cond:
        if sum(r * x for r, x in zip(row, v)) != 0:
            return None
    xs = [sum(r * x for r, x in zip(row, v)) for row in S]
    den = 1
    for x in xs:
        den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in xs], den


ZERO = Cyc.rational(0)
ONE = Cyc.rational(1)


def sqrt_rational(q) -> Cyc:
    """Exact square root of a nonnegative rational as a cyclotomic number.

    Uses zeta_8 + zeta_8^-1 = sqrt(2) and quadratic Gauss sums for odd primes.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt of negative rational")
    if q == 0:
        return ZERO
    # sqrt(a/b) = sqrt(ab)/b
    n = q.numerator * q.denominator
    root = 1
    rest = 1
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            root *= p ** (e // 2)
            if e % 2:
                rest *= p
        p += 1
    if m > 1:
        rest *= m
    value = Cyc.rational(Fraction(root, q.denominator))
    for p in prime_factors(rest):
        value = value * _sqrt_prime(p)
    return value


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> Cyc:
    if p == 2:
        return Cyc.zeta(8) + Cyc.zeta(8, 7)
    g = sum((Cyc.zeta(p, (a * a) % p) for a in range(1, p)), Cyc.zeta(p, 0))
    if p % 4 == 1:
        return g
    return -sqrt_m1() * g


@lru_cache(maxsize=None)
def sqrt_m1() -> Cyc:
    return Cyc.zeta(4)


def sqrt2() -> Cyc:
    return _sqrt_prime(2)


def sqrt3() -> Cyc:
    return _sqrt_prime(3)


def imag_unit() -> Cyc:
    return sqrt_m1()


def _poly_modinv(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    """Inverse of polynomial a modulo mod over Q (lists, lowest degree first)."""

    def deg(p):
        d = len(p) - 1
        while d >= 0 and p[d] == 0:
            d -= 1
        return d

    def trim(p):
        d = deg(p)
        return p[: d + 1] if d >= 0 else []

    def polydivmod(num, den):
        num = list(num)
        dd = deg(den)
        q = [Fraction(0)] * max(0, deg(num) - dd + 1)
        for i in range(len(q) - 1, -1, -1):
            c = num[i + dd] / den[dd]
            q[i] = c
            for j in range(dd + 1):
                num[i + j] -= c * den[j]
        return trim(q), trim(num)

    r0, r1 = trim(mod), trim(a)
    s0, s1 = [], [Fraction(1)]
    while deg(r1) > 0:
        q, r = polydivmod(r0, r1)
        r0, r1 = r1, r
        prod = [Fraction(0)] * (len(q) + len(s1))
        for i, qc in enumerate(q):
            if qc:
                for j, sc in enumerate(s1):
                    prod[i + j] += qc * sc
        new_s = [x - y for x, y in zip(s0 + [Fraction(0)] * len(prod), prod + [Fraction(0)] * len(s0))]
        s0, s1 = s1, trim(new_s)
    assert deg(r1) == 0 and r1, "element not invertible"
    c = r1[0]
    return [x / c for x in s1]
