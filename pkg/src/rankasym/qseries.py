"""Truncated bivariate series: power series in q whose coefficients are
Laurent polynomials in zeta, with exact integer coefficients.

Used to verify identities at the level of formal series (pentagonal number
theorem, the rank generating function) independently of any floating-point
evaluation.  Truncation is explicit everywhere: a product of series of
orders N and M has order min(N, M), never a silent extension.
"""

from __future__ import annotations


class LaurentPoly:
    """Sparse Laurent polynomial in zeta with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    self.coeffs[e] = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def substitute_inverse(self):
        """zeta -> zeta^{-1}."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def coefficient(self, exponent):
        return self.coeffs.get(exponent, 0)

    def coefficient_sum(self):
        """Value at zeta = 1."""
        return sum(self.coeffs.values())

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " ".join(f"{e}:{c}" for e, c in sorted(self.coeffs.items()))


class BivariateSeries:
    """Power series in q up to an explicit order, Laurent-in-zeta coefficients."""

    __slots__ = ("order", "terms")

    def __init__(self, order, terms=None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        if terms is None:
            self.terms = [LaurentPoly.zero() for _ in range(order + 1)]
        else:
            if len(terms) != order + 1:
                raise ValueError("terms length must be order + 1")
            self.terms = list(terms)

    @classmethod
    def constant(cls, order, value=1):
        s = cls(order)
        s.terms[0] = LaurentPoly({0: value})
        return s

    @classmethod
    def from_q_coefficients(cls, order, coeffs):
        """coeffs: map q-exponent -> int or LaurentPoly (entries beyond order dropped)."""
        s = cls(order)
        for n, c in coeffs.items():
            if 0 <= n <= order:
                s.terms[n] = c if isinstance(c, LaurentPoly) else LaurentPoly({0: c})
        return s

    def __eq__(self, other):
        return (isinstance(other, BivariateSeries)
                and self.order == other.order and self.terms == other.terms)

    def __add__(self, other):
        order = min(self.order, other.order)
        return BivariateSeries(
            order, [self.terms[n] + other.terms[n] for n in range(order + 1)])

    def __sub__(self, other):
        order = min(self.order, other.order)
        return BivariateSeries(
            order, [self.terms[n] - other.terms[n] for n in range(order + 1)])

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = [LaurentPoly.zero() for _ in range(order + 1)]
        for i in range(order + 1):
            a = self.terms[i]
            if not a:
                continue
            for j in range(order + 1 - i):
                b = other.terms[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return BivariateSeries(order, out)

    def invert(self):
        """Multiplicative inverse; requires constant term exactly 1."""
        if self.terms[0] != LaurentPoly.one():
            raise ValueError("not invertible as a power series: constant term != 1")
        inv = [LaurentPoly.one()]
        for n in range(1, self.order + 1):
            acc = LaurentPoly.zero()
            for k in range(1, n + 1):
                if self.terms[k]:
                    acc = acc + self.terms[k] * inv[n - k]
            inv.append(-acc)
        return BivariateSeries(self.order, inv)

    def substitute_inverse(self):
        """zeta -> zeta^{-1} in every coefficient."""
        return BivariateSeries(
            self.order, [t.substitute_inverse() for t in self.terms])

    def coefficient(self, m, n):
        """Coefficient of zeta^m q^n."""
        return self.terms[n].coefficient(m)

    def dump(self):
        """One line per q-power: 'n: m1:c1 m2:c2 ...', zeta exponents ascending."""
        return "\n".join(f"{n}: {self.terms[n]!r}" for n in range(self.order + 1))

    def __repr__(self):
        return f"BivariateSeries(order={self.order})"


def pentagonal_series(order: int) -> BivariateSeries:
    """(q)_infty as a series: bilateral sum of (-1)^k q^{k(3k+1)/2}."""
    s = BivariateSeries.constant(order)
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > order:
            break
        sign = -1 if k % 2 else 1
        s.terms[g1] = s.terms[g1] + LaurentPoly({0: sign})
        g2 = k * (3 * k + 1) // 2
        if g2 <= order:
            s.terms[g2] = s.terms[g2] + LaurentPoly({0: sign})
        k += 1
    return s


def euler_product_prefix(order: int) -> BivariateSeries:
    """(q)_infty as the finite product prod_{n<=order} (1 - q^n), truncated."""
    s = BivariateSeries.constant(order)
    for n in range(1, order + 1):
        factor = BivariateSeries.from_q_coefficients(order, {0: 1, n: -1})
        s = s * factor
    return s


def rank_generating_expansion(order: int) -> BivariateSeries:
    """Rank generating function to the given q-order: coefficient of
    zeta^m q^n is N(m,n).

    Built as [(1 - zeta) * bilateral Appell-type sum] / (q)_infty, with the
    bilateral sum over k truncated once k(3k+1)/2 exceeds the order (higher
    terms cannot touch q^{<=order}).  The k = 0 term combines with the
    (1 - zeta) prefactor to the constant 1; the k > 0 and k < 0 halves are
    expanded by geometric series in zeta and zeta^{-1} respectively.
    """
    f = BivariateSeries.constant(order)
    k = 1
    while True:
        g = k * (3 * k + 1) // 2
        if g > order:
            break
        sign = -1 if k % 2 else 1
        for direction in (1, -1):
            j = 0
            while g + k * j <= order:
                step = LaurentPoly({direction * j: sign, direction * (j + 1): -sign})
                n = g + k * j
                f.terms[n] = f.terms[n] + step
                j += 1
        k += 1
    return f * pentagonal_series(order).invert()
