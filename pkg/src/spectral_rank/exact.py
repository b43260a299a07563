"""Exact integer linear algebra and univariate polynomials.

Everything here runs on Python integers (and ``fractions.Fraction`` where a
rational is unavoidable), so rank, characteristic polynomials and the sign
claims made about difference polynomials are exact.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


# --------------------------------------------------------------------------
# Polynomials
# --------------------------------------------------------------------------

def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate polynomial with big-integer coefficients, ascending degree.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def x_power(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] - other[i] for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        return poly_eval(self, x)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def x_valuation(self) -> int:
        """Largest k with x^k dividing the polynomial."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls(int(s) for s in json.loads(text))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                body = ("" if a == 1 else str(a)) + ("x" if k == 1 else f"x^{k}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def poly_sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p - q


def poly_eval(p: IntPolynomial, x):
    """Horner evaluation; exact for int/Fraction arguments."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def sign_at(p: IntPolynomial, t) -> int:
    """Exact sign of ``p(t)`` at a rational point."""
    t = Fraction(t)
    num, den = t.numerator, t.denominator
    acc = 0
    dpow = 1
    # homogeneous Horner: sum c_k num^k den^(deg-k), same sign as p(t)
    for c in reversed(p.coeffs):
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def prem_positive(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Remainder of ``f`` by ``g`` up to a positive integer factor."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f.coeffs)
    d = g.degree
    c = g.leading
    ac, sc = abs(c), (1 if c > 0 else -1)
    gc = g.coeffs
    while len(r) - 1 >= d and r:
        k = len(r) - 1 - d
        lr = r[-1]
        r = [ac * v for v in r]
        for j, b in enumerate(gc):
            r[k + j] -= sc * lr * b
        while r and r[-1] == 0:
            r.pop()
    return IntPolynomial(r)


def poly_divmod(p: IntPolynomial, q: IntPolynomial) -> tuple[list[Fraction], list[Fraction]]:
    """Division over the rationals; returns (quotient, remainder) coefficient lists."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in p.coeffs]
    dq = q.degree
    lq = Fraction(q.leading)
    quot = [Fraction(0)] * max(len(r) - dq, 0)
    while len(r) - 1 >= dq and r:
        k = len(r) - 1 - dq
        f = r[-1] / lq
        quot[k] = f
        for j, b in enumerate(q.coeffs):
            r[k + j] -= f * b
        while r and r[-1] == 0:
            r.pop()
    return quot, r


def _from_fractions(coeffs: Sequence[Fraction]) -> IntPolynomial:
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return IntPolynomial(int(c * den) for c in coeffs).primitive()


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q (positive leading coefficient)."""
    a, b = p.primitive(), q.primitive()
    if a.is_zero():
        return b
    while not b.is_zero():
        a, b = b, prem_positive(a, b).primitive()
    return a.primitive()


def exact_quotient(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive integer multiple of ``p / q``; raises if ``q`` does not divide ``p``."""
    quot, rem = poly_divmod(p, q)
    if rem:
        raise ValueError("divisor does not divide polynomial exactly")
    return _from_fractions(quot)


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.degree < 1:
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return exact_quotient(p, g)


# --------------------------------------------------------------------------
# Root isolation
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RootBracket:
    """Rational interval (lo, hi] certified to hold exactly one distinct real root."""

    lo: Fraction
    hi: Fraction
    guaranteed: bool = True

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of ``p`` with every member scaled by a positive constant."""
    seq = [p.primitive(), p.derivative().primitive()]
    if seq[1].is_zero():
        return seq[:1]
    while True:
        r = prem_positive(seq[-2], seq[-1])
        if r.is_zero():
            break
        seq.append(_neg_content(r))
    return seq


def _neg_content(r: IntPolynomial) -> IntPolynomial:
    # -r divided by its positive content (keeps the sign pattern of -r)
    g = r.content()
    return IntPolynomial(-c // g for c in r.coeffs)


def _variations(signs: Iterable[int]) -> int:
    v = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def _variations_at(seq: Sequence[IntPolynomial], t: Fraction) -> int:
    return _variations(sign_at(q, t) for q in seq)


def _variations_at_inf(seq: Sequence[IntPolynomial], positive: bool) -> int:
    signs = []
    for q in seq:
        s = 1 if q.leading > 0 else -1
        if not positive and q.degree % 2:
            s = -s
        signs.append(s)
    return _variations(signs)


def cauchy_bound(p: IntPolynomial) -> int:
    """Integer B with every complex root strictly inside |z| < B."""
    lc = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + -(-m // lc) + 1


def count_real_roots(p: IntPolynomial) -> int:
    """Number of distinct real roots."""
    if p.degree < 1:
        return 0
    seq = sturm_sequence(squarefree_part(p))
    return _variations_at_inf(seq, False) - _variations_at_inf(seq, True)


def isolate_largest_root(p: IntPolynomial) -> RootBracket:
    """Bracket the largest real root of ``p`` by Sturm-count bisection."""
    if p.degree < 1:
        raise ValueError("constant polynomial has no roots to isolate")
    sq = squarefree_part(p)
    return _isolate(sq, sturm_sequence(sq))


def _isolate(sq: IntPolynomial, seq: list[IntPolynomial]) -> RootBracket:
    total = _variations_at_inf(seq, False) - _variations_at_inf(seq, True)
    if total == 0:
        raise ValueError("polynomial has no real root")
    b = cauchy_bound(sq)
    lo, hi = Fraction(-b), Fraction(b)
    v_hi = _variations_at(seq, hi)
    count = _variations_at(seq, lo) - v_hi
    while count > 1:
        mid = (lo + hi) / 2
        above = _variations_at(seq, mid) - v_hi
        if above >= 1:
            lo, count = mid, above
        else:
            hi, v_hi = mid, _variations_at(seq, mid)
            count = _variations_at(seq, lo) - v_hi
    return RootBracket(lo, hi)


def largest_real_root(p: IntPolynomial, precision: float = 1e-12) -> float:
    """Largest real root of ``p``, refined until the bracket is narrower than ``precision``.

    A float estimate is accepted when Sturm counts on the square-free part
    prove the largest root lies within ``precision / 4`` of it. Otherwise the
    root is isolated by Sturm bisection and refined by bisection, accelerated
    by float Newton steps that are only taken inside the certified bracket.
    """
    return float(_refine_largest(p, precision))


def _float_estimate(sq: IntPolynomial) -> float | None:
    try:
        roots = np.roots([float(c) for c in reversed(sq.coeffs)])
    except (OverflowError, np.linalg.LinAlgError):
        return None
    real = [r.real for r in roots if abs(r.imag) <= 1e-7 * max(1.0, abs(r))]
    return max(real) if real else None


def _refine_largest(p: IntPolynomial, precision: float) -> Fraction:
    sq = squarefree_part(p)
    seq = sturm_sequence(sq)
    v_inf = _variations_at_inf(seq, True)
    if _variations_at_inf(seq, False) == v_inf:
        raise ValueError("polynomial has no real root")
    if sq.degree == 1:
        return Fraction(-sq.coeffs[0], sq.coeffs[1])
    # fast path: certify a float estimate with two Sturm counts
    guess = _float_estimate(sq) if sq.degree > 1 else None
    if guess is not None and math.isfinite(guess):
        t = Fraction(guess)
        half = Fraction(precision) / 4
        if (_variations_at(seq, t - half) - v_inf == 1
                and _variations_at(seq, t + half) == v_inf):
            return t
    br = _isolate(sq, seq)
    lo, hi = br.lo, br.hi
    if sign_at(sq, hi) == 0:
        return hi
    s_hi = sign_at(sq, hi)
    # move lo off a (smaller) root so signs at the ends differ
    while sign_at(sq, lo) == 0:
        mid = (lo + hi) / 2
        if _variations_at(seq, mid) - _variations_at(seq, hi) >= 1:
            lo = mid
        else:
            hi = mid
            s_hi = sign_at(sq, hi)
            if s_hi == 0:
                return hi
    prec = Fraction(precision)
    fc = [float(c) for c in sq.coeffs]
    dc = [i * c for i, c in enumerate(fc)][1:]

    def feval(c, x):
        acc = 0.0
        for v in reversed(c):
            acc = acc * x + v
        return acc

    x = float(hi)
    for _ in range(400):
        if hi - lo < prec:
            break
        width = hi - lo
        step_ok = False
        fx, dfx = feval(fc, x), feval(dc, x)
        if dfx != 0.0 and math.isfinite(fx) and math.isfinite(dfx):
            xn = x - fx / dfx
            if math.isfinite(xn) and float(lo) < xn < float(hi):
                t = Fraction(xn)
                if lo < t < hi:
                    s = sign_at(sq, t)
                    if s == 0:
                        return t
                    if s == s_hi:
                        hi = t
                    else:
                        lo = t
                    delta = prec / 4
                    for probe in (t - delta, t + delta):
                        if lo < probe < hi:
                            s = sign_at(sq, probe)
                            if s == 0:
                                return probe
                            if s == s_hi:
                                hi = probe
                            else:
                                lo = probe
                    x = xn
                    step_ok = (hi - lo) <= width / 2
        if not step_ok:
            mid = (lo + hi) / 2
            s = sign_at(sq, mid)
            if s == 0:
                return mid
            if s == s_hi:
                hi = mid
            else:
                lo = mid
            x = float(mid)
    # float Newton polish, kept only while it stays inside the certified bracket
    best = (lo + hi) / 2
    x = float(best)
    for _ in range(3):
        dfx = feval(dc, x)
        if dfx == 0.0:
            break
        xn = x - feval(fc, x) / dfx
        if not (math.isfinite(xn) and lo <= Fraction(xn) <= hi):
            break
        best, x = Fraction(xn), xn
    return best


def root_bracket(p: IntPolynomial, precision: float = 1e-12) -> RootBracket:
    """Certified bracket of width < ``precision`` around the largest real root."""
    sq = squarefree_part(p)
    r = _refine_largest(sq, precision)
    half = Fraction(precision) / 2
    lo, hi = r - half, r + half
    seq = sturm_sequence(sq)
    inside = _variations_at(seq, lo) - _variations_at(seq, hi)
    above = _variations_at(seq, hi) - _variations_at_inf(seq, True)
    return RootBracket(lo, hi, guaranteed=(inside == 1 and above == 0))


def same_largest_root(p: IntPolynomial, q: IntPolynomial, gap: float = 1e-7) -> bool:
    """Exact equality test for the largest real roots of two integer polynomials.

    Numerically separated roots (by more than ``gap``) are unequal. Otherwise
    the roots coincide iff the common factor ``gcd(p, q)`` has a root inside a
    bracket that isolates the largest root of ``p``.
    """
    rp, rq = largest_real_root(p), largest_real_root(q)
    if abs(rp - rq) > gap:
        return False
    g = poly_gcd(p, q)
    if g.degree < 1:
        return False
    br = root_bracket(p, precision=min(gap, 1e-12))
    if not br.guaranteed:
        br = isolate_largest_root(p)
    gs = sturm_sequence(squarefree_part(g))
    return _variations_at(gs, br.lo) - _variations_at(gs, br.hi) >= 1


# --------------------------------------------------------------------------
# Matrices
# --------------------------------------------------------------------------

def _as_int_rows(m) -> list[list[int]]:
    rows = [[int(v) for v in row] for row in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix is not rectangular")
    return rows


def rank(m) -> int:
    """Exact rank over Q by fraction-free (Bareiss) elimination."""
    a = _as_int_rows(m)
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        row_r = a[r]
        for i in range(r + 1, nrows):
            row_i = a[i]
            f = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def charpoly(m) -> IntPolynomial:
    """Characteristic polynomial det(xI - M) by Faddeev-LeVerrier.

    Each coefficient comes from an exact integer division by k, which is
    guaranteed for integer matrices.
    """
    a = _as_int_rows(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("charpoly needs a square matrix")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    # sparse rows of A speed up the products for 0/1 adjacency matrices
    a_sparse = [[(j, v) for j, v in enumerate(row) if v] for row in a]
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[0] * n for _ in range(n)]
        for i in range(n):
            out = prod[i]
            for j, v in a_sparse[i]:
                src = mk[j]
                for col in range(n):
                    if src[col]:
                        out[col] += v * src[col]
        c = coeffs[n - k + 1]
        for i in range(n):
            prod[i][i] += c
        mk = prod
        # trace(A M_k)
        tr = 0
        for i in range(n):
            for j, v in a_sparse[i]:
                tr += v * mk[j][i]
        q, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("non-integral Faddeev-LeVerrier coefficient")
        coeffs[n - k] = q
    return IntPolynomial(coeffs)


def multipartite_charpoly(parts: Sequence[int]) -> IntPolynomial:
    """phi(K_{n_1..n_k}) = x^(n-k) [prod(x+n_i) - sum_i n_i prod_{j!=i}(x+n_j)]."""
    parts = [int(p) for p in parts]
    if not parts or any(p < 1 for p in parts):
        raise ValueError("parts must be a nonempty list of positive integers")
    n, k = sum(parts), len(parts)
    full = IntPolynomial([1])
    for p in parts:
        full = full * IntPolynomial([p, 1])
    acc = full
    for i, p in enumerate(parts):
        others = IntPolynomial([1])
        for j, q in enumerate(parts):
            if j != i:
                others = others * IntPolynomial([q, 1])
        acc = acc - others * p
    return acc * IntPolynomial.x_power(n - k)
