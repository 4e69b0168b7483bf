"""Exact sparse integer polynomials in the simple-root variables.

This is the model of the base ring of the theory: polynomials over the
integers in variables ``a1..aN`` (the simple roots), stored as a sparse
map from exponent vectors to nonzero coefficients.  Coefficients are
Python ints, so overflow is impossible by construction.

Each variable carries cohomological degree 2; internally we work with the
ordinary total degree ("combinatorial degree").

For type A display there is a second coordinate system ``y1..y{N+1}``
related by ``a_i = y_{i+1} - y_i``; rendering and parsing support both.
Polynomials are immutable values and every operation is pure.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import NotDivisibleError

__all__ = [
    "Polynomial",
    "LinearForm",
    "act",
    "divide_exact",
    "is_divisible",
    "render",
    "parse",
    "poly_to_json",
    "poly_from_json",
]

# A linear form is just an integer coefficient vector on the simple roots;
# `Root.coords` from rootsys is accepted anywhere a LinearForm is.
LinearForm = tuple[int, ...]


def _term_sort_key(exp: tuple[int, ...]):
    # graded order, highest variable index dominating inside a degree
    return (sum(exp), tuple(reversed(exp)))


class Polynomial:
    """An immutable sparse polynomial with integer coefficients."""

    __slots__ = ("rank", "terms", "_hash")

    def __init__(self, rank: int, terms: dict[tuple[int, ...], int] | None = None):
        self.rank = rank
        if terms:
            self.terms = {e: c for e, c in terms.items() if c}
        else:
            self.terms = {}
        self._hash = None

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, rank: int) -> "Polynomial":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "Polynomial":
        return cls.integer(rank, 1)

    @classmethod
    def integer(cls, rank: int, c: int) -> "Polynomial":
        return cls(rank, {(0,) * rank: int(c)})

    @classmethod
    def variable(cls, rank: int, i: int) -> "Polynomial":
        """The simple-root variable ``a_i`` (1-based)."""
        if not 1 <= i <= rank:
            raise IndexError(f"variable index {i} out of range 1..{rank}")
        exp = tuple(int(k == i - 1) for k in range(rank))
        return cls(rank, {exp: 1})

    @classmethod
    def linear(cls, coords: Sequence[int] | "LinearForm") -> "Polynomial":
        coords = _as_coords(coords)
        rank = len(coords)
        out: dict[tuple[int, ...], int] = {}
        for k, c in enumerate(coords):
            if c:
                exp = tuple(int(j == k) for j in range(rank))
                out[exp] = int(c)
        return cls(rank, out)

    # -- basic protocol --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == Polynomial.integer(self.rank, other).terms
        return (
            isinstance(other, Polynomial)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({render(self)!r})"

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.rank != self.rank:
                raise ValueError("polynomial rank mismatch")
            return other
        if isinstance(other, int):
            return Polynomial.integer(self.rank, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.rank, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial(self.rank, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not defined here")
        out = Polynomial.one(self.rank)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.rank, {e: c * v for e, v in self.terms.items()}) if c else Polynomial(self.rank)

    def times_linear(self, coords: Sequence[int]) -> "Polynomial":
        """Multiply by a linear form; cheaper than generic ``*``."""
        coords = _as_coords(coords)
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            for k, f in enumerate(coords):
                if f:
                    e2 = e[:k] + (e[k] + 1,) + e[k + 1:]
                    s = out.get(e2, 0) + c * f
                    if s:
                        out[e2] = s
                    else:
                        del out[e2]
        return Polynomial(self.rank, out)

    # -- degrees ----------------------------------------------------------

    def monomial_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def total_degree(self) -> int:
        """Max total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_degree(self) -> int | None:
        """The common total degree of all terms, or None if inhomogeneous/zero."""
        degs = self.monomial_degrees()
        if len(degs) != 1:
            return None
        return degs.pop()

    def max_abs_coeff(self) -> int:
        return max((abs(c) for c in self.terms.values()), default=0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda t: _term_sort_key(t[0]), reverse=True)


def _as_coords(coords) -> tuple[int, ...]:
    if hasattr(coords, "coords"):  # Root
        coords = coords.coords
    return tuple(int(c) for c in coords)


# -- Weyl action -------------------------------------------------------------


def act(w, p: Polynomial) -> Polynomial:
    """Apply a Weyl group element to a polynomial by linear substitution.

    ``w`` is anything with a ``mat`` attribute (a ``WeylElement``); this is
    a ring homomorphism.
    """
    mat = w.mat
    rank = p.rank
    if len(mat) != rank:
        raise ValueError("rank mismatch between element and polynomial")
    images = [tuple(mat[r][j] for r in range(rank)) for j in range(rank)]
    # power tables per variable, up to the max exponent appearing
    max_exp = [0] * rank
    for e in p.terms:
        for j, x in enumerate(e):
            if x > max_exp[j]:
                max_exp[j] = x
    powers: list[list[Polynomial]] = []
    for j in range(rank):
        row = [Polynomial.one(rank)]
        for _ in range(max_exp[j]):
            row.append(row[-1].times_linear(images[j]))
        powers.append(row)
    out = Polynomial.zero(rank)
    for e, c in p.terms.items():
        term = Polynomial.integer(rank, c)
        for j, x in enumerate(e):
            if x:
                term = term * powers[j][x]
        out = out + term
    return out


# -- exact division by a linear form -----------------------------------------


def divide_exact(p: Polynomial, f: Sequence[int] | LinearForm) -> Polynomial:
    """Return q with ``q * f == p`` for a nonzero linear form ``f``.

    Raises :class:`NotDivisibleError` when no such integer polynomial
    exists; in class arithmetic that signals a violated GKM condition
    upstream and must abort the computation.
    """
    coords = _as_coords(f)
    if not any(coords):
        raise ZeroDivisionError("division by the zero linear form")
    k = next(i for i, c in enumerate(coords) if c)
    fk = coords[k]
    quotient: dict[tuple[int, ...], int] = {}
    rem = dict(p.terms)
    while rem:
        d = max(e[k] for e in rem)
        if d == 0:
            raise NotDivisibleError("nonzero remainder in exact division")
        layer = [(e, c) for e, c in rem.items() if e[k] == d]
        for e, c in layer:
            q, r = divmod(c, fk)
            if r:
                raise NotDivisibleError("coefficient not divisible in exact division")
            eq = e[:k] + (d - 1,) + e[k + 1:]
            quotient[eq] = quotient.get(eq, 0) + q
            # subtract q * x^eq * f from the remainder
            for j, fc in enumerate(coords):
                if fc:
                    e2 = eq[:j] + (eq[j] + 1,) + eq[j + 1:]
                    s = rem.get(e2, 0) - q * fc
                    if s:
                        rem[e2] = s
                    else:
                        del rem[e2]
    return Polynomial(p.rank, quotient)


def is_divisible(p: Polynomial, f: Sequence[int] | LinearForm) -> bool:
    """True iff :func:`divide_exact` would succeed; never raises."""
    try:
        divide_exact(p, f)
        return True
    except NotDivisibleError:
        return False


# -- rendering / parsing ------------------------------------------------------


def _to_y_terms(p: Polynomial) -> dict[tuple[int, ...], int]:
    """Rewrite in the y-coordinates (n = rank + 1 variables), a_i = y_{i+1} - y_i."""
    n = p.rank + 1
    images = []
    for i in range(p.rank):
        v = [0] * n
        v[i + 1] = 1
        v[i] = -1
        images.append(tuple(v))
    out: dict[tuple[int, ...], int] = {}
    for e, c in p.terms.items():
        acc = {(0,) * n: c}
        for j, x in enumerate(e):
            for _ in range(x):
                nxt: dict[tuple[int, ...], int] = {}
                for ee, cc in acc.items():
                    for k, f in enumerate(images[j]):
                        if f:
                            e2 = ee[:k] + (ee[k] + 1,) + ee[k + 1:]
                            s = nxt.get(e2, 0) + cc * f
                            if s:
                                nxt[e2] = s
                            else:
                                del nxt[e2]
                acc = nxt
        for ee, cc in acc.items():
            s = out.get(ee, 0) + cc
            if s:
                out[ee] = s
            else:
                del out[ee]
    return out


def _render_terms(terms: dict[tuple[int, ...], int], varname: str) -> str:
    if not terms:
        return "0"
    parts = []
    for e, c in sorted(terms.items(), key=lambda t: _term_sort_key(t[0]), reverse=True):
        factors = []
        for j, x in enumerate(e):
            if x == 1:
                factors.append(f"{varname}{j + 1}")
            elif x > 1:
                factors.append(f"{varname}{j + 1}^{x}")
        mono = "*".join(factors)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    s = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def render(p: Polynomial, basis: str = "alpha") -> str:
    """Deterministic human-readable form.

    >>> a1 = Polynomial.variable(2, 1)
    >>> a2 = Polynomial.variable(2, 2)
    >>> render(a1 + a2, "y")
    'y3 - y1'
    >>> render(a1, "y")
    'y2 - y1'
    """
    if basis == "alpha":
        return _render_terms(p.terms, "a")
    if basis == "y":
        return _render_terms(_to_y_terms(p), "y")
    raise ValueError(f"unknown basis {basis!r}")


_TOKEN = re.compile(r"\s*([+-]|\d+|[ay]\d+|\^|\*)")


def parse(text: str, rank: int, basis: str = "alpha") -> Polynomial:
    """Parse the textual polynomial grammar.

    Signed integer coefficients, variables ``a1..aN`` (or ``y1..y{N+1}``
    for type A input), ``^`` for powers, ``*`` optional.

    >>> parse("y3 - y1", 2, "y") == Polynomial.variable(2, 1) + Polynomial.variable(2, 2)
    True
    """
    if basis not in ("alpha", "y"):
        raise ValueError(f"unknown basis {basis!r}")
    nvars = rank if basis == "alpha" else rank + 1
    prefix = "a" if basis == "alpha" else "y"
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    terms: dict[tuple[int, ...], int] = {}
    i = 0

    def term_done(coeff, exp):
        e = tuple(exp)
        s = terms.get(e, 0) + coeff
        if s:
            terms[e] = s
        else:
            terms.pop(e, None)

    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise ValueError("dangling sign in polynomial text")
        coeff = sign
        exp = [0] * nvars
        saw_factor = False
        while i < len(tokens) and tokens[i] not in "+-":
            tok = tokens[i]
            if tok == "*":
                i += 1
                continue
            if tok.isdigit():
                coeff *= int(tok)
                saw_factor = True
                i += 1
                continue
            if tok[0] in "ay":
                if tok[0] != prefix:
                    raise ValueError(
                        f"variable {tok!r} does not belong to the {basis!r} basis"
                    )
                idx = int(tok[1:])
                if not 1 <= idx <= nvars:
                    raise ValueError(f"variable index out of range in {tok!r}")
                power = 1
                i += 1
                if i < len(tokens) and tokens[i] == "^":
                    i += 1
                    if i >= len(tokens) or not tokens[i].isdigit():
                        raise ValueError("expected integer after '^'")
                    power = int(tokens[i])
                    i += 1
                exp[idx - 1] += power
                saw_factor = True
                continue
            raise ValueError(f"unexpected token {tok!r}")
        if not saw_factor:
            raise ValueError("empty term in polynomial text")
        term_done(coeff, exp)

    if basis == "alpha":
        return Polynomial(rank, terms)
    # gauge y_i -> -(a_i + ... + a_rank), y_{rank+1} -> 0, then check membership
    gauge = []
    for i in range(nvars):
        v = [0] * rank
        for j in range(i, rank):
            v[j] = -1
        gauge.append(tuple(v))
    out = Polynomial.zero(rank)
    for e, c in terms.items():
        term = Polynomial.integer(rank, c)
        for j, x in enumerate(e):
            for _ in range(x):
                term = term.times_linear(gauge[j])
        out = out + term
    if _to_y_terms(out) != terms:
        raise ValueError("polynomial is not expressible in the simple-root variables")
    return out


# -- JSON --------------------------------------------------------------------


def poly_to_json(p: Polynomial) -> list[dict]:
    """Canonical JSON form: a list of {"coeff", "exp"} in the alpha basis."""
    return [{"coeff": c, "exp": list(e)} for e, c in p.sorted_terms()]


def poly_from_json(data: Iterable[dict], rank: int) -> Polynomial:
    terms: dict[tuple[int, ...], int] = {}
    for item in data:
        e = tuple(int(x) for x in item["exp"])
        if len(e) != rank:
            raise ValueError("exponent vector has wrong length")
        terms[e] = terms.get(e, 0) + int(item["coeff"])
    return Polynomial(rank, terms)
