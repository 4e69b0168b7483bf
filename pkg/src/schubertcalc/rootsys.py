"""Finite crystallographic root systems and their Weyl groups.

Everything is generated from an integer Cartan matrix ``A`` with the
convention ``A[i][j] = <alpha_j, alpha_i_check>``, so that the simple
reflection ``r_i`` acts on a vector ``x`` written in simple-root
coordinates by

    r_i(x) = x - (sum_j A[i][j] * x[j]) * alpha_i.

Weyl group elements are stored as integer matrices acting on the
simple-root basis (column ``j`` is the image of ``alpha_j``), which gives
one uniform code path for every finite type.  Type A additionally gets a
conversion layer to one-line permutation notation, with the conventions

    alpha_i = y_{i+1} - y_i,        w . y_i = y_{w(i)},

under which right multiplication by ``r_i`` swaps positions ``i`` and
``i+1`` of the one-line word and the length of ``w`` is its inversion
count.

``RootSystem`` and ``WeylElement`` are immutable after construction and
all operations here are pure, so instances can be shared between threads;
internal caches are filled idempotently (a race may duplicate work but
never yields a torn value).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    GroupTooLargeError,
    MixedRootSystemsError,
    NonFiniteTypeError,
    UnknownTypeError,
)

__all__ = [
    "Root",
    "RootSystem",
    "WeylElement",
    "build",
    "named",
    "simple_reflection",
    "multiply",
    "inverse",
    "length",
    "perm_to_element",
    "element_to_perm",
    "word_to_element",
    "right_ascent",
    "covers",
    "bruhat_leq",
    "reduced_word",
    "all_reduced_words",
    "coeff_pairing",
    "cartan_pairing",
    "enumerate_group",
]

MAX_ROOTS = 10_000
MAX_GROUP = 50_000

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Root:
    """A root written in simple-root coordinates."""

    coords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords) and any(self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))

    def __repr__(self) -> str:
        return f"Root{self.coords}"


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    rng = range(n)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in rng) for j in rng) for i in rng
    )


def _mat_vec(m: Matrix, v: tuple[int, ...]) -> tuple[int, ...]:
    rng = range(len(v))
    return tuple(sum(m[i][j] * v[j] for j in rng) for i in rng)


def _identity_mat(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


class WeylElement:
    """A Weyl group element: an integer matrix on the simple-root basis.

    Elements are interned per root system; construct them through
    ``RootSystem`` / group operations, never directly.
    """

    __slots__ = ("rs", "mat", "inv_mat", "length", "_hash", "_oneline")

    def __init__(self, rs: "RootSystem", mat: Matrix, inv_mat: Matrix):
        self.rs = rs
        self.mat = mat
        self.inv_mat = inv_mat
        neg = 0
        for beta in rs.positive_roots:
            img = _mat_vec(mat, beta.coords)
            if img[_first_nonzero(img)] < 0:
                neg += 1
        self.length = neg
        self._hash = hash(mat)
        self._oneline = None

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, WeylElement)
            and self.rs is other.rs
            and self.mat == other.mat
        )

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.rs is not other.rs:
            raise MixedRootSystemsError("cannot multiply elements of different root systems")
        return self.rs._element(
            _mat_mul(self.mat, other.mat), _mat_mul(other.inv_mat, self.inv_mat)
        )

    def inverse(self) -> "WeylElement":
        return self.rs._element(self.inv_mat, self.mat)

    def act(self, root: Root) -> Root:
        return Root(_mat_vec(self.mat, root.coords))

    def act_coords(self, coords: tuple[int, ...]) -> tuple[int, ...]:
        return _mat_vec(self.mat, coords)

    def is_identity(self) -> bool:
        return self.length == 0

    def right_ascent(self, i: int) -> bool:
        """True iff l(w * r_i) > l(w), for a 1-based simple index."""
        self.rs._check_index(i)
        return all(row[i - 1] >= 0 for row in self.mat)

    def left_ascent(self, i: int) -> bool:
        """True iff l(r_i * w) > l(w)."""
        self.rs._check_index(i)
        return all(row[i - 1] >= 0 for row in self.inv_mat)

    def right_descents(self) -> list[int]:
        return [i for i in range(1, self.rs.rank + 1) if not self.right_ascent(i)]

    def reduced_word(self) -> tuple[int, ...]:
        """Canonical reduced word: greedily strip the least right descent.

        >>> W = named("A2")
        >>> W.longest_element().reduced_word()
        (1, 2, 1)
        """
        letters = []
        w = self
        while w.length:
            i = min(w.right_descents())
            letters.append(i)
            w = w * w.rs.simple_reflection(i)
        letters.reverse()
        return tuple(letters)

    def one_line(self) -> tuple[int, ...]:
        """One-line permutation notation (type A only), values in 1..n."""
        if self._oneline is None:
            rs = self.rs
            if not rs.is_type_a:
                raise UnknownTypeError("one-line notation requires a type A root system")
            perm = list(range(1, rs.rank + 2))
            for i in self.reduced_word():
                perm[i - 1], perm[i] = perm[i], perm[i - 1]
            self._oneline = tuple(perm)
        return self._oneline

    def describe(self) -> str:
        """Compact human-readable form: one-line word in type A, else a word in s_i."""
        if self.rs.is_type_a and self.rs.rank + 1 <= 9:
            return "".join(str(d) for d in self.one_line())
        if self.length == 0:
            return "e"
        return "*".join(f"s{i}" for i in self.reduced_word())

    def __repr__(self) -> str:
        return f"<{self.describe()}>"


def _first_nonzero(v: tuple[int, ...]) -> int:
    for k, c in enumerate(v):
        if c:
            return k
    raise ValueError("zero vector is not a root image")


class RootSystem:
    """A finite root system with its Weyl group machinery.

    Use :func:`build` or :func:`named` to construct one.
    """

    def __init__(self, cartan: Matrix, type_label: str | None = None, max_roots: int = MAX_ROOTS):
        self.cartan = cartan
        self.rank = len(cartan)
        self.type_label = type_label
        self._validate_cartan()
        self.simple_roots = [
            Root(tuple(int(i == j) for j in range(self.rank))) for i in range(self.rank)
        ]
        self._close_roots(max_roots)
        self._root_index = {r: k for k, r in enumerate(self.positive_roots)}
        self._pool: dict[Matrix, WeylElement] = {}
        self._simple_refl: list[WeylElement] = []
        self.identity = self._element(_identity_mat(self.rank), _identity_mat(self.rank))
        for i in range(1, self.rank + 1):
            m = self._simple_reflection_mat(i)
            self._simple_refl.append(self._element(m, m))
        self._refl_elements: dict[int, WeylElement] = {}
        self.caches: dict[str, dict] = {}

    # -- construction ------------------------------------------------------

    def _validate_cartan(self):
        A = self.cartan
        n = self.rank
        if n == 0 or any(len(row) != n for row in A):
            raise ValueError("Cartan matrix must be square and nonempty")
        for i in range(n):
            if A[i][i] != 2:
                raise ValueError("Cartan matrix must have 2 on the diagonal")
            for j in range(n):
                if i != j:
                    if A[i][j] > 0:
                        raise ValueError("off-diagonal Cartan entries must be <= 0")
                    if (A[i][j] == 0) != (A[j][i] == 0):
                        raise ValueError("Cartan zero pattern must be symmetric")

    def _reflect_coords(self, i: int, coords: tuple[int, ...]) -> tuple[int, ...]:
        # r_i(x) = x - <x, alpha_i_check> alpha_i, 1-based i
        A = self.cartan
        k = i - 1
        pairing = sum(A[k][j] * coords[j] for j in range(self.rank))
        out = list(coords)
        out[k] -= pairing
        return tuple(out)

    def _coreflect_coords(self, i: int, coords: tuple[int, ...]) -> tuple[int, ...]:
        # the same reflection on coroot coordinates uses the transposed Cartan row
        A = self.cartan
        k = i - 1
        pairing = sum(A[j][k] * coords[j] for j in range(self.rank))
        out = list(coords)
        out[k] -= pairing
        return tuple(out)

    def _close_roots(self, max_roots: int):
        n = self.rank
        start = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        info: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[tuple[int, ...], int] | None]] = {
            c: (c, None) for c in start
        }
        frontier = list(start)
        while frontier:
            new_frontier = []
            for coords in frontier:
                for i in range(1, n + 1):
                    img = self._reflect_coords(i, coords)
                    neg = all(c <= 0 for c in img)
                    pos = all(c >= 0 for c in img)
                    if not (neg or pos):
                        raise NonFiniteTypeError("Cartan data does not generate a consistent root system")
                    if neg:
                        continue
                    if img not in info:
                        coroot = self._coreflect_coords(i, info[coords][0])
                        info[img] = (coroot, (coords, i))
                        new_frontier.append(img)
                        if len(info) > max_roots:
                            raise NonFiniteTypeError(
                                f"root closure exceeded {max_roots} roots; "
                                "the Cartan matrix is not of finite type"
                            )
            frontier = new_frontier
        order = sorted(info, key=lambda c: (sum(c), c))
        self.positive_roots = [Root(c) for c in order]
        self._coroots = {Root(c): info[c][0] for c in order}
        self._root_parent = {Root(c): info[c][1] for c in order}
        self._refl_mats: dict[Root, Matrix] = {}

    def _simple_reflection_mat(self, i: int) -> Matrix:
        cols = [self._reflect_coords(i, r.coords) for r in self.simple_roots]
        return tuple(tuple(cols[j][r] for j in range(self.rank)) for r in range(self.rank))

    # -- elements ----------------------------------------------------------

    def _element(self, mat: Matrix, inv_mat: Matrix) -> WeylElement:
        w = self._pool.get(mat)
        if w is None:
            w = WeylElement(self, mat, inv_mat)
            self._pool[mat] = w
        return w

    def _check_index(self, i: int):
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple index {i} out of range 1..{self.rank}")

    def simple_reflection(self, i: int) -> WeylElement:
        self._check_index(i)
        return self._simple_refl[i - 1]

    def simple_root(self, i: int) -> Root:
        self._check_index(i)
        return self.simple_roots[i - 1]

    def reflection_matrix(self, beta: Root) -> Matrix:
        """Matrix of the reflection through the positive root ``beta``.

        Built by conjugation along the closure tree, independently of the
        coroot pairing (so the two can cross-check each other).
        """
        m = self._refl_mats.get(beta)
        if m is None:
            parent = self._root_parent[beta]
            if parent is None:
                m = self._simple_reflection_mat(_first_nonzero(beta.coords) + 1)
            else:
                coords, i = parent
                ri = self._simple_reflection_mat(i)
                m = _mat_mul(ri, _mat_mul(self.reflection_matrix(Root(coords)), ri))
            self._refl_mats[beta] = m
        return m

    def reflection(self, beta: Root) -> WeylElement:
        """The reflection through a positive root, as a group element."""
        idx = self._root_index[beta]
        w = self._refl_elements.get(idx)
        if w is None:
            m = self.reflection_matrix(beta)
            w = self._element(m, m)
            self._refl_elements[idx] = w
        return w

    def coroot_coords(self, beta: Root) -> tuple[int, ...]:
        return self._coroots[beta]

    def elements(self) -> list[WeylElement]:
        """All group elements, by length then matrix key; identity first, w_0 last."""
        cached = self.caches.get("elements")
        if cached is None:
            out = [self.identity]
            seen = {self.identity}
            level = [self.identity]
            while level:
                nxt = set()
                for w in level:
                    for i in range(1, self.rank + 1):
                        if w.right_ascent(i):
                            nxt.add(w * self.simple_reflection(i))
                level = sorted(nxt - seen, key=lambda w: w.mat)
                seen.update(level)
                out.extend(level)
                if len(out) > MAX_GROUP:
                    raise GroupTooLargeError(
                        f"Weyl group has more than {MAX_GROUP} elements"
                    )
            cached = out
            self.caches["elements"] = cached
            self.caches["element_index"] = {w: k for k, w in enumerate(out)}
        return cached

    def element_index(self, w: WeylElement) -> int:
        self.elements()
        return self.caches["element_index"][w]

    def order(self) -> int:
        return len(self.elements())

    def longest_element(self) -> WeylElement:
        return self.elements()[-1]

    # -- type A ------------------------------------------------------------

    @property
    def is_type_a(self) -> bool:
        got = self.caches.get("is_type_a")
        if got is None:
            got = self.cartan == _cartan_a(self.rank)
            self.caches["is_type_a"] = got
        return got

    def cache(self, name: str) -> dict:
        return self.caches.setdefault(name, {})

    def __repr__(self) -> str:
        label = self.type_label or f"rank {self.rank}"
        return f"RootSystem({label}, positive_roots={len(self.positive_roots)})"


# -- named Cartan matrices --------------------------------------------------


def _cartan_a(n: int) -> Matrix:
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


def _cartan_b(n: int) -> Matrix:
    A = [list(row) for row in _cartan_a(n)]
    A[n - 1][n - 2] = -2  # alpha_n short
    return tuple(tuple(row) for row in A)


def _cartan_c(n: int) -> Matrix:
    A = [list(row) for row in _cartan_a(n)]
    A[n - 2][n - 1] = -2  # alpha_n long
    return tuple(tuple(row) for row in A)


def _cartan_d(n: int) -> Matrix:
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 2):
        A[i][i + 1] = A[i + 1][i] = -1
    A[n - 3][n - 1] = A[n - 1][n - 3] = -1
    return tuple(tuple(row) for row in A)


_CARTAN_G2: Matrix = ((2, -1), (-3, 2))
_CARTAN_F4: Matrix = (
    (2, -1, 0, 0),
    (-1, 2, -1, 0),
    (0, -2, 2, -1),
    (0, 0, -1, 2),
)


def build(cartan, type_label: str | None = None, max_roots: int = MAX_ROOTS) -> RootSystem:
    """Build a root system from integer Cartan data.

    Raises :class:`NonFiniteTypeError` when the root closure exceeds
    ``max_roots`` (affine or indefinite input).
    """
    mat = tuple(tuple(int(x) for x in row) for row in cartan)
    return RootSystem(mat, type_label=type_label, max_roots=max_roots)


def named(label: str) -> RootSystem:
    """Standard root system for a label like ``"A3"``, ``"B2"``, ``"G2"``.

    >>> named("A2").order()
    6
    """
    m = re.fullmatch(r"([ABCDFG])[_ ]?(\d+)", label.strip().upper())
    if not m:
        raise UnknownTypeError(f"unrecognized root system label: {label!r}")
    family, n = m.group(1), int(m.group(2))
    if family == "A" and 1 <= n <= 8:
        cartan = _cartan_a(n)
    elif family == "B" and 2 <= n <= 8:
        cartan = _cartan_b(n)
    elif family == "C" and 2 <= n <= 8:
        cartan = _cartan_c(n)
    elif family == "D" and 3 <= n <= 8:
        cartan = _cartan_d(n)
    elif family == "G" and n == 2:
        cartan = _CARTAN_G2
    elif family == "F" and n == 4:
        cartan = _CARTAN_F4
    else:
        raise UnknownTypeError(f"unsupported root system label: {label!r}")
    return build(cartan, type_label=f"{family}{n}")


# -- group operations (functional spellings) ---------------------------------


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    return rs.simple_reflection(i)


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    return a * b


def inverse(a: WeylElement) -> WeylElement:
    return a.inverse()


def length(a: WeylElement) -> int:
    return a.length


def right_ascent(w: WeylElement, i: int) -> bool:
    return w.right_ascent(i)


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    return w.reduced_word()


def enumerate_group(rs: RootSystem) -> list[WeylElement]:
    return rs.elements()


def perm_to_element(rs: RootSystem, oneline) -> WeylElement:
    """Element of a type A system from one-line notation (values 1..n).

    >>> W = named("A3")
    >>> perm_to_element(W, (2, 4, 1, 3)).length
    3
    """
    if not rs.is_type_a:
        raise UnknownTypeError("one-line notation requires a type A root system")
    n = rs.rank + 1
    perm = tuple(int(x) for x in oneline)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{oneline!r} is not a permutation of 1..{n}")
    # bubble the word down to the identity, recording the right descents used
    work = list(perm)
    letters = []
    sorting = True
    while sorting:
        sorting = False
        for i in range(n - 1):
            if work[i] > work[i + 1]:
                work[i], work[i + 1] = work[i + 1], work[i]
                letters.append(i + 1)
                sorting = True
                break
    w = rs.identity
    for i in reversed(letters):
        w = w * rs.simple_reflection(i)
    return w


def element_to_perm(w: WeylElement) -> tuple[int, ...]:
    return w.one_line()


def word_to_element(rs: RootSystem, word) -> WeylElement:
    """Product of simple reflections given by a (not necessarily reduced) word."""
    w = rs.identity
    for i in word:
        w = w * rs.simple_reflection(int(i))
    return w


def covers(w: WeylElement) -> list[tuple[WeylElement, Root]]:
    """All pairs (w', beta) with w' = w * r_beta and l(w') = l(w) + 1.

    Ordered by the canonical positive-root order (height, then coords).
    """
    rs = w.rs
    cache = rs.cache("covers")
    got = cache.get(w)
    if got is None:
        got = []
        for beta in rs.positive_roots:
            wp = w * rs.reflection(beta)
            if wp.length == w.length + 1:
                got.append((wp, beta))
        cache[w] = got
    return got


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    """Strong Bruhat order, by the lifting-property recursion.

    >>> W = named("A2")
    >>> bruhat_leq(W.identity, W.longest_element())
    True
    """
    if v.rs is not w.rs:
        raise MixedRootSystemsError("cannot compare elements of different root systems")
    rs = v.rs
    cache = rs.cache("bruhat")
    key = (v, w)
    got = cache.get(key)
    if got is None:
        if v.length > w.length:
            got = False
        elif v is w or v.length == 0:
            got = True
        else:
            i = min(w.right_descents())
            r = rs.simple_reflection(i)
            if not v.right_ascent(i):
                got = bruhat_leq(v * r, w * r)
            else:
                got = bruhat_leq(v, w * r)
        cache[key] = got
    return got


def all_reduced_words(w: WeylElement) -> list[tuple[int, ...]]:
    """Every reduced word of ``w``, in a deterministic order."""
    cache = w.rs.cache("all_words")
    got = cache.get(w)
    if got is None:
        if w.length == 0:
            got = [()]
        else:
            got = []
            for i in w.right_descents():
                shorter = w * w.rs.simple_reflection(i)
                got.extend(word + (i,) for word in all_reduced_words(shorter))
        cache[w] = got
    return got


def coeff_pairing(rs: RootSystem, alpha: Root, beta: Root) -> int:
    """The integer c with ``alpha - r_beta(alpha) = c * beta``.

    ``alpha`` must be simple and ``beta`` positive.  Zero is a legal value.

    >>> W = named("A2")
    >>> coeff_pairing(W, W.simple_root(1), W.simple_root(1))
    2
    >>> coeff_pairing(W, W.simple_root(1), W.simple_root(2))
    -1
    """
    if sorted(alpha.coords) != [0] * (rs.rank - 1) + [1]:
        raise ValueError(f"{alpha!r} is not a simple root")
    if beta not in rs._root_index:
        raise ValueError(f"{beta!r} is not a positive root of this system")
    refl = rs.reflection_matrix(beta)
    diff = tuple(a - b for a, b in zip(alpha.coords, _mat_vec(refl, alpha.coords)))
    k = next(i for i, c in enumerate(beta.coords) if c)
    q, rem = divmod(diff[k], beta.coords[k])
    if rem or any(d != q * b for d, b in zip(diff, beta.coords)):
        raise ArithmeticError("alpha - r_beta(alpha) is not an integer multiple of beta")
    return q


def cartan_pairing(rs: RootSystem, gamma: Root, beta: Root) -> int:
    """``<gamma, beta_check>`` computed through the stored coroot of ``beta``.

    Independent cross-check route for :func:`coeff_pairing`.
    """
    d = rs.coroot_coords(beta)
    A = rs.cartan
    n = rs.rank
    return sum(d[i] * A[i][j] * gamma.coords[j] for i in range(n) for j in range(n))
