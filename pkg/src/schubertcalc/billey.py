"""Fixed-point restrictions of Schubert classes via the subword formula.

The restriction ``S_v|_w`` is computed from one fixed reduced word
``I = (i_1, ..., i_l)`` of ``w``: it is the sum, over reduced subwords of
``I`` multiplying to ``v``, of the products of *prefix-reflected* simple
roots; choosing the letter at position ``k`` contributes the factor

    (r_{i_1} ... r_{i_{k-1}}) . alpha_{i_k}

where the prefix product runs over all earlier letters of ``I`` whether or
not they were chosen.  The result does not depend on the choice of ``I``
(tested exhaustively, not assumed), each summand is a product of positive
roots, and ``S_v|_w`` vanishes unless ``v <= w``.

Rather than scanning all ``2^l`` subwords, the computation is a single
left-to-right pass over ``I`` keeping one accumulated polynomial per
partial subword product, so the state space is bounded by the Bruhat
interval below the target.

Two special values get their own entry points: the bottom restriction
``S_w|_w`` (a product of positive roots, by the closed formula) and the
restriction at the longest element, which is the base case of the
recursive structure-constant engine.

All functions are pure; per-group memo tables are filled idempotently.
"""

from __future__ import annotations

from .polyring import Polynomial
from .rootsys import Root, RootSystem, WeylElement, bruhat_leq
from .gkm import GkmClass

__all__ = [
    "restrict",
    "restrict_all",
    "bottom_factors",
    "bottom_restriction",
    "schubert_class",
    "base_constant",
]


def _billey_pass(w: WeylElement, keep=None) -> dict[WeylElement, Polynomial]:
    """One DP pass over the canonical reduced word of ``w``.

    Returns the map ``v -> S_v|_w`` over all partial products reached;
    ``keep`` optionally prunes states (a predicate on elements).
    """
    rs = w.rs
    rank = rs.rank
    acc = {rs.identity: Polynomial.one(rank)}
    prefix = rs.identity
    for i in w.reduced_word():
        r = rs.simple_reflection(i)
        factor = prefix.act(rs.simple_root(i)).coords
        nxt = dict(acc)
        for p, poly in acc.items():
            q = p * r
            if q.length == p.length + 1 and (keep is None or keep(q)):
                contrib = poly.times_linear(factor)
                s = nxt.get(q)
                nxt[q] = contrib if s is None else s + contrib
        acc = nxt
        prefix = prefix * r
    return acc


def restrict(v: WeylElement, w: WeylElement, word=None) -> Polynomial:
    """The restriction ``S_v|_w``; zero unless ``v <= w``.

    ``word`` optionally overrides the reduced word of ``w`` used for the
    computation (it must be reduced and multiply to ``w``); the result is
    the same for every choice.
    """
    rs = v.rs
    if w.rs is not rs:
        raise ValueError("elements of different root systems")
    if word is not None:
        return _restrict_with_word(rs, v, w, word)
    if not bruhat_leq(v, w):
        return Polynomial.zero(rs.rank)
    cache = rs.cache("restrict")
    key = (v, w)
    got = cache.get(key)
    if got is None:
        table = rs.cache("restrict_all").get(w)
        if table is not None:
            got = table.get(v, Polynomial.zero(rs.rank))
        else:
            acc = _billey_pass(w, keep=lambda q: bruhat_leq(q, v))
            got = acc.get(v, Polynomial.zero(rs.rank))
        cache[key] = got
    return got


def _restrict_with_word(rs: RootSystem, v: WeylElement, w: WeylElement, word) -> Polynomial:
    rank = rs.rank
    word = tuple(int(i) for i in word)
    target = rs.identity
    for i in word:
        target = target * rs.simple_reflection(i)
    if len(word) != target.length:
        raise ValueError("word is not reduced")
    if target != w:
        raise ValueError("word does not multiply to the requested element")
    acc = {rs.identity: Polynomial.one(rank)}
    prefix = rs.identity
    for i in word:
        r = rs.simple_reflection(i)
        factor = prefix.act(rs.simple_root(i)).coords
        nxt = dict(acc)
        for p, poly in acc.items():
            q = p * r
            if q.length == p.length + 1 and bruhat_leq(q, v):
                contrib = poly.times_linear(factor)
                s = nxt.get(q)
                nxt[q] = contrib if s is None else s + contrib
        acc = nxt
        prefix = prefix * r
    return acc.get(v, Polynomial.zero(rank))


def restrict_all(w: WeylElement) -> dict[WeylElement, Polynomial]:
    """The full column ``{v: S_v|_w for v <= w}`` in one pass; memoized."""
    rs = w.rs
    cache = rs.cache("restrict_all")
    got = cache.get(w)
    if got is None:
        got = _billey_pass(w)
        cache[w] = got
    return got


def bottom_factors(w: WeylElement) -> list[Root]:
    """The positive roots beta with ``r_beta w < w``, in canonical order.

    Their product is the bottom restriction ``S_w|_w``; callers that need
    to divide by it should divide by these linear factors one at a time.
    """
    rs = w.rs
    out = []
    for beta in rs.positive_roots:
        img = w.inverse().act(beta)
        if not img.is_positive:
            out.append(beta)
    return out


def bottom_restriction(w: WeylElement) -> Polynomial:
    """``S_w|_w`` as a polynomial: the product of the bottom factors."""
    rs = w.rs
    cache = rs.cache("bottom")
    got = cache.get(w)
    if got is None:
        got = Polynomial.one(rs.rank)
        for beta in bottom_factors(w):
            got = got.times_linear(beta.coords)
        cache[w] = got
    return got


def schubert_class(w: WeylElement) -> GkmClass:
    """The Schubert class of ``w`` as a GKM class; memoized per group.

    Supported on ``{v : v >= w}``, homogeneous of combinatorial degree
    ``l(w)``, with bottom value :func:`bottom_restriction`.
    """
    rs = w.rs
    cache = rs.cache("schubert")
    got = cache.get(w)
    if got is None:
        zero = Polynomial.zero(rs.rank)
        values = [restrict_all(v).get(w, zero) for v in rs.elements()]
        got = GkmClass(rs, values)
        cache[w] = got
    return got


def base_constant(v: WeylElement) -> Polynomial:
    """The restriction of ``S_v`` at the longest element.

    This is the structure constant ``c_{w0, v}^{w0}``, the base case of
    the recursive engine.
    """
    rs = v.rs
    cache = rs.cache("base_constant")
    got = cache.get(v)
    if got is None:
        got = restrict(v, rs.longest_element())
        cache[v] = got
    return got
