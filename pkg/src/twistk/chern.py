"""Formal graded-commutative differential algebra for the twisted Chern character.

Generators, for a twist of degree ``2k+1``:

* ``s_n``  (n >= 1), even, degree ``2n``: the power-sum classes;
* ``w_n``  (n >= 1), odd, degree ``2n-1``: their transgressions;
* ``eta``, odd, degree ``2k+1``, with ``eta^2 = 0``.

We work on the index-zero component, so ``s_0 = w_0 = 0``.  The
differential is the derivation with

    d s_n = lam(n, k) eta s_{n-k},   d w_n = lam(n, k) eta w_{n-k},   d eta = 0,

where ``lam(n, k) = (-1)^{k+1} n! / (n-k)!``.  The Bott integer ``m`` is
absorbed into eta and set to 1.

A monomial is stored as ``(eta, s, w)``: eta exponent (0 or 1), a sorted
tuple of s-indices and a strictly increasing tuple of w-indices.  The
canonical order of odd factors is eta first, then w-indices ascending;
reordering signs are folded into coefficients.  All arithmetic is over
:class:`fractions.Fraction`, and identities are checked modulo degree > N.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, perm
from typing import Iterable, Sequence

import sympy

from .errors import BadArguments, BadTruncation, ContainsEta, NoClosingSign

__all__ = [
    "ChernContext",
    "FormalElement",
    "lambda_coeff",
    "gen_s",
    "gen_omega",
    "gen_eta",
    "differential",
    "truncate",
    "d_squared_check",
    "chern_even",
    "twisted_closure_sign",
    "OddSeries",
    "odd_series_coefficients",
    "newton_c_to_s",
    "newton_s_to_c",
    "tensor_power_sums",
    "special_tensor_coefficient",
    "clutching_pullback",
    "top_class_obstruction",
]

Monomial = tuple[int, tuple[int, ...], tuple[int, ...]]
ONE: Monomial = (0, (), ())


@dataclass(frozen=True)
class ChernContext:
    """Twist degree ``2k+1`` and truncation degree ``N`` (default ``4k+6``)."""

    k: int
    N: int | None = None
    index: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise BadArguments(f"k must be >= 1, got {self.k}")
        if self.N is None:
            object.__setattr__(self, "N", 4 * self.k + 6)
        if self.N < 0:
            raise BadTruncation(f"N must be >= 0, got {self.N}")

    @property
    def eta_degree(self) -> int:
        return 2 * self.k + 1

    def degree(self, mono: Monomial) -> int:
        eta, s, w = mono
        return self.eta_degree * eta + sum(2 * i for i in s) + sum(2 * i - 1 for i in w)


def _odd_sort_sign(factors: list[int]) -> int:
    """Sign of sorting a list of distinct odd factors; 0 if two coincide."""
    if len(set(factors)) != len(factors):
        return 0
    inversions = sum(1 for a, b in itertools.combinations(factors, 2) if a > b)
    return -1 if inversions % 2 else 1


def _mul_mono(a: Monomial, b: Monomial) -> tuple[int, Monomial]:
    ea, sa, wa = a
    eb, sb, wb = b
    # eta is encoded as -1 so it sorts in front of every w-index
    odd = [-1] * ea + list(wa) + [-1] * eb + list(wb)
    sign = _odd_sort_sign(odd)
    if not sign:
        return 0, ONE
    w = tuple(sorted(wa + wb))
    return sign, (ea + eb, tuple(sorted(sa + sb)), w)


class FormalElement:
    """Finite rational combination of monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def scalar(cls, c) -> FormalElement:
        return cls({ONE: Fraction(c)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FormalElement.scalar(other)
        if not isinstance(other, FormalElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FormalElement.scalar(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return FormalElement(out)

    __radd__ = __add__

    def __neg__(self):
        return FormalElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FormalElement({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, FormalElement):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for (ma, ca), (mb, cb) in itertools.product(self.terms.items(), other.terms.items()):
            sign, m = _mul_mono(ma, mb)
            if sign:
                out[m] = out.get(m, 0) + sign * ca * cb
        return FormalElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        return self * (Fraction(1) / Fraction(other))

    def has_eta(self) -> bool:
        return any(m[0] for m in self.terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def __repr__(self):
        return f"FormalElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (eta, s, w), c in sorted(self.terms.items(), key=lambda t: (t[0][0], t[0][2], t[0][1])):
            factors = ["eta"] * eta
            for i, grp in itertools.groupby(s):
                e = len(list(grp))
                factors.append(f"s{i}" if e == 1 else f"s{i}^{e}")
            factors.extend(f"w{i}" for i in w)
            body = "*".join(factors)
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append("-" + body)
            else:
                pieces.append(f"{c}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")


def gen_s(n: int) -> FormalElement:
    if n < 0:
        raise BadArguments(f"s_{n} is undefined")
    return FormalElement({(0, (n,), ()): 1}) if n else FormalElement()


def gen_omega(n: int) -> FormalElement:
    if n < 0:
        raise BadArguments(f"w_{n} is undefined")
    return FormalElement({(0, (), (n,)): 1}) if n else FormalElement()


def gen_eta() -> FormalElement:
    return FormalElement({(1, (), ()): 1})


def lambda_coeff(n: int, k: int) -> int:
    """``(-1)^{k+1} n! / (n-k)!``."""
    if k < 1 or n < k:
        raise BadArguments(f"lambda({n}, {k}) needs n >= k >= 1")
    return (-1) ** (k + 1) * perm(n, k)


def truncate(x: FormalElement, ctx: ChernContext) -> FormalElement:
    return FormalElement({m: c for m, c in x.terms.items() if ctx.degree(m) <= ctx.N})


def _d_generator(kind: str, i: int, ctx: ChernContext) -> FormalElement:
    if kind == "eta" or i <= ctx.k:
        # s_{i-k} (or w_{i-k}) is zero or of index zero
        return FormalElement()
    lower = gen_s(i - ctx.k) if kind == "s" else gen_omega(i - ctx.k)
    return gen_eta() * lower * lambda_coeff(i, ctx.k)


def _mono_factors(mono: Monomial) -> list[tuple[str, int]]:
    eta, s, w = mono
    return [("eta", 0)] * eta + [("s", i) for i in s] + [("w", i) for i in w]


def _gen_mono(kind: str, i: int) -> Monomial:
    if kind == "eta":
        return (1, (), ())
    return (0, (i,), ()) if kind == "s" else (0, (), (i,))


def _as_element(kind: str, i: int) -> FormalElement:
    return FormalElement({_gen_mono(kind, i): 1})


def differential(x: FormalElement, ctx: ChernContext) -> FormalElement:
    """Graded derivation ``d`` applied to ``x``, truncated to degree <= N."""
    out = FormalElement()
    for mono, c in x.terms.items():
        factors = _mono_factors(mono)
        prefix = FormalElement.scalar(1)
        prefix_deg = 0
        for pos, (kind, i) in enumerate(factors):
            dg = _d_generator(kind, i, ctx)
            if dg:
                suffix = FormalElement.scalar(1)
                for kj, ij in factors[pos + 1:]:
                    suffix = suffix * _as_element(kj, ij)
                sign = -1 if prefix_deg % 2 else 1
                out = out + prefix * dg * suffix * (sign * c)
            prefix = prefix * _as_element(kind, i)
            prefix_deg += ctx.degree(_gen_mono(kind, i))
    return truncate(out, ctx)


def _monomials_up_to(ctx: ChernContext) -> Iterable[Monomial]:
    N = ctx.N
    s_range = range(1, N // 2 + 1)
    w_range = range(1, (N + 1) // 2 + 1)

    def s_parts(budget, smallest):
        yield ()
        for i in s_range:
            if i >= smallest and 2 * i <= budget:
                for rest in s_parts(budget - 2 * i, i):
                    yield (i,) + rest

    for eta in (0, 1):
        budget = N - eta * ctx.eta_degree
        if budget < 0:
            continue
        for r in range(len(w_range) + 1):
            for w in itertools.combinations(w_range, r):
                wdeg = sum(2 * i - 1 for i in w)
                if wdeg > budget:
                    continue
                for s in s_parts(budget - wdeg, 1):
                    yield (eta, s, w)


def d_squared_check(ctx: ChernContext) -> bool:
    """``d(d(x)) == 0`` for every monomial of degree <= N in eta, s_i and w_i."""
    for mono in _monomials_up_to(ctx):
        x = FormalElement({mono: 1})
        if differential(differential(x, ctx), ctx):
            return False
    return True


def chern_even(ctx: ChernContext) -> FormalElement:
    """``sum_{n >= 1} s_n / n!`` truncated at degree N."""
    out = FormalElement()
    for n in range(1, ctx.N // 2 + 1):
        out = out + gen_s(n) * Fraction(1, factorial(n))
    return out


def twisted_closure_sign(ctx: ChernContext) -> int:
    """The sign ``eps`` with ``(d - eps * eta) chern_even == 0`` modulo degree > N."""
    if ctx.N < 2 * ctx.k + 2:
        raise BadTruncation(f"N={ctx.N} must be >= {2 * ctx.k + 2} for k={ctx.k}")
    ch = chern_even(ctx)
    dch = differential(ch, ctx)
    etach = truncate(gen_eta() * ch, ctx)
    if not etach:
        raise BadTruncation(f"N={ctx.N} is too small to see eta * s_1 (degree {2 * ctx.k + 3})")
    closing = [eps for eps in (1, -1) if not dch - etach * eps]
    if not closing:
        raise NoClosingSign(f"neither sign closes the even series for k={ctx.k}")
    return closing[0]


@dataclass(frozen=True)
class OddSeries:
    """Coefficients ``a_1..a_M`` of ``sum a_n w_n`` closed under ``d - eps * eta``.

    ``lambda_weighted`` holds the alternative weights ``lam(n, k) / n!``
    (zero when n < k); ``lambda_weighted_closes`` records whether they
    satisfy the same closure, and ``first_failure`` the least ``m`` at which
    ``a_{m+k} lam(m+k, k) = eps a_m`` breaks for them.
    """

    k: int
    eps: int
    coefficients: tuple[Fraction, ...]
    closes: bool
    lambda_weighted: tuple[Fraction, ...]
    lambda_weighted_closes: bool
    first_failure: int | None = field(default=None)


def _odd_series_element(coeffs: Sequence[Fraction]) -> FormalElement:
    out = FormalElement()
    for n, a in enumerate(coeffs, start=1):
        out = out + gen_omega(n) * a
    return out


def _closes(x: FormalElement, eps: int, ctx: ChernContext) -> bool:
    return not (differential(x, ctx) - truncate(gen_eta() * x, ctx) * eps)


def odd_series_coefficients(ctx: ChernContext, eps: int,
                            seeds: Sequence[Fraction | int]) -> OddSeries:
    """Extend ``a_1..a_k`` by ``a_{m+k} = eps * a_m / lam(m+k, k)`` up to ``n = (N+1)//2``."""
    k = ctx.k
    if ctx.N < 2 * k + 2:
        raise BadTruncation(f"N={ctx.N} must be >= {2 * k + 2} for k={k}")
    if eps not in (1, -1):
        raise BadArguments(f"eps must be +1 or -1, got {eps}")
    if len(seeds) != k:
        raise BadArguments(f"need exactly k={k} seeds, got {len(seeds)}")
    top = (ctx.N + 1) // 2
    a = [Fraction(x) for x in seeds]
    for n in range(k + 1, top + 1):
        a.append(eps * a[n - k - 1] / lambda_coeff(n, k))
    a = a[:top]

    weighted = [Fraction((-1) ** (k + 1) * perm(n, k), factorial(n)) if n >= k else Fraction(0)
                for n in range(1, top + 1)]
    failure = next((m for m in range(1, top - k + 1)
                    if weighted[m + k - 1] * lambda_coeff(m + k, k) != eps * weighted[m - 1]),
                   None)
    return OddSeries(
        k=k,
        eps=eps,
        coefficients=tuple(a),
        closes=_closes(_odd_series_element(a), eps, ctx),
        lambda_weighted=tuple(weighted),
        lambda_weighted_closes=_closes(_odd_series_element(weighted), eps, ctx),
        first_failure=failure,
    )


def _frac(x):
    return Fraction(x) if isinstance(x, int) else x


def newton_c_to_s(c: Sequence) -> list:
    """Power sums ``s_1..s_m`` from Chern classes ``c_1..c_m`` (Newton's identities)."""
    c = [_frac(x) for x in c]
    s: list = []
    for n in range(1, len(c) + 1):
        total = (-1) ** (n - 1) * n * c[n - 1]
        for i in range(1, n):
            total += (-1) ** (i - 1) * c[i - 1] * s[n - i - 1]
        s.append(total)
    return s


def newton_s_to_c(s: Sequence) -> list:
    """Inverse of :func:`newton_c_to_s`."""
    s = [_frac(x) for x in s]
    c: list = []
    for n in range(1, len(s) + 1):
        rest = s[n - 1]
        for i in range(1, n):
            rest -= (-1) ** (i - 1) * c[i - 1] * s[n - i - 1]
        c.append(rest * (-1) ** (n - 1) / n)
    return c


def tensor_power_sums(sE: Sequence, sF: Sequence, n: int):
    """``s_n(E x F) = sum_i C(n, i) s_{n-i}(E) s_i(F)``; index 0 of each list is the rank."""
    if n < 0:
        raise BadArguments("n must be >= 0")
    if len(sE) <= n or len(sF) <= n:
        raise BadArguments(f"need power sums up to s_{n}")
    return sum((comb(n, i) * sE[n - i] * sF[i] for i in range(n + 1)), start=0)


def special_tensor_coefficient(k: int, n: int) -> Fraction:
    """Coefficient of ``v * s_{n-k}(F)`` in ``s_n(E x F)``.

    ``E`` is a virtual line bundle whose only nonzero Chern class is
    ``c_k = v`` and ``v^2 = 0``.  The power sums of ``E`` come from Newton's
    identities and the product from :func:`tensor_power_sums`.
    """
    if k < 1 or n < k:
        raise BadArguments(f"need n >= k >= 1, got k={k}, n={n}")
    v = sympy.Symbol("v")
    sF = list(sympy.symbols(f"t0:{n + 1}"))
    sE = [sympy.Integer(1)] + newton_c_to_s([0] * (k - 1) + [v] + [0] * (n - k))
    sE = [sympy.expand(x) for x in sE]
    sE = [x.coeff(v, 0) + v * x.coeff(v, 1) for x in sE]  # v^2 = 0
    total = sympy.expand(tensor_power_sums(sE, sF, n))
    coeff = total.coeff(v, 1).coeff(sF[n - k], 1)
    return Fraction(int(sympy.numer(coeff)), int(sympy.denom(coeff)))


def clutching_pullback(x: FormalElement, ctx: ChernContext) -> tuple[FormalElement, FormalElement]:
    """``(x, dbar x)`` where ``d x = eta * dbar x``: the two Kunneth parts of the clutched class."""
    if x.has_eta():
        raise ContainsEta("clutching acts on fibre classes; x contains eta")
    dx = differential(x, ctx)
    stripped = {}
    for (eta, s, w), c in dx.terms.items():
        stripped[(0, s, w)] = c  # eta is leftmost, so removing it costs no sign
    return x, FormalElement(stripped)


def top_class_obstruction(ctx: ChernContext, m: int = 1) -> int:
    """Coefficient of the sphere generator in ``d s_k`` on the index-``j`` component."""
    return (-1) ** (ctx.k + 1) * factorial(ctx.k) * m * ctx.index
