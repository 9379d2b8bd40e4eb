"""Coxeter systems with exact integral realizations.

A system is built from a crystallographic Coxeter matrix (entries in
{1,2,3,4,6,inf}) plus an integral realization: one root (lattice vector)
and one coroot (lattice covector) per generator with <coroot_s, root_s> = 2.
Generators act on the lattice by v |-> v - <coroot, v> root; elements are
identified by their integer action matrix, which is faithful for the
supported realizations.  All arithmetic is exact; matrix entries are kept
inside signed 64-bit range and overflow raises instead of wrapping.

Elements are enumerated breadth-first from the identity, so every element
carries a canonical (ShortLex-least) reduced word.  Enumeration of
infinite systems always takes an explicit length bound.

Generators are named s, t, u, ... in matrix order; `e` is the identity.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

INF = 0  # Coxeter matrix entry encoding m_st = infinity

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

GEN_LETTERS = "stuvwxyzabcdefghijklmnopqr"

# Cartan pairs (<a_i^v, a_j>, <a_j^v, a_i>) for i < j in the default
# integral realization, one per admissible Coxeter entry.
_CARTAN_BY_M = {2: (0, 0), 3: (-1, -1), 4: (-1, -2), 6: (-1, -3), INF: (-2, -2)}

# m_st -> required product <a_s^v,a_t><a_t^v,a_s>; infinity needs >= 4.
_PRODUCT_BY_M = {2: 0, 3: 1, 4: 2, 6: 3}


class CoxeterError(ValueError):
    pass


class NotInOrbitError(CoxeterError):
    """A vector that should have been a root of the system is not."""


def _ck(n: int) -> int:
    if n > INT64_MAX or n < INT64_MIN:
        raise OverflowError("lattice arithmetic exceeds 64-bit range")
    return n


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(_ck(sum(a[i][k] * b[k][j] for k in range(n))) for j in range(n))
        for i in range(n)
    )


def _mat_vec(m, v):
    return tuple(_ck(sum(m[i][j] * v[j] for j in range(len(v)))) for i in range(len(m)))


def _vec_mat(v, m):
    return tuple(_ck(sum(v[i] * m[i][j] for i in range(len(v)))) for j in range(len(m)))


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _pair(covec, vec) -> int:
    return sum(c * x for c, x in zip(covec, vec))


class CoxeterMatrix:
    """Symmetric matrix of braid orders; INF (stored as 0) marks infinity."""

    def __init__(self, entries):
        m = tuple(tuple(row) for row in entries)
        rank = len(m)
        if rank == 0:
            raise CoxeterError("rank must be positive")
        for i, row in enumerate(m):
            if len(row) != rank:
                raise CoxeterError("matrix is not square")
            if row[i] != 1:
                raise CoxeterError("diagonal entries must be 1")
            for j, v in enumerate(row):
                if i == j:
                    continue
                if v != m[j][i]:
                    raise CoxeterError("matrix is not symmetric")
                if v not in (2, 3, 4, 6, INF):
                    raise CoxeterError(
                        f"entry m[{i}][{j}]={v!r} not in {{2,3,4,6,inf}} "
                        "(crystallographic restriction)"
                    )
        self.rank = rank
        self.m = m

    def entry(self, i: int, j: int) -> int:
        return self.m[i][j]

    def __eq__(self, other):
        return isinstance(other, CoxeterMatrix) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"CoxeterMatrix({[list(r) for r in self.m]})"


class Realization:
    """Integral roots and coroots over a lattice Z^lattice_rank."""

    def __init__(self, lattice_rank: int, roots, coroots):
        self.lattice_rank = lattice_rank
        self.roots = tuple(tuple(int(c) for c in r) for r in roots)
        self.coroots = tuple(tuple(int(c) for c in r) for r in coroots)
        if len(self.roots) != len(self.coroots):
            raise CoxeterError("need one coroot per root")
        for r in self.roots + self.coroots:
            if len(r) != lattice_rank:
                raise CoxeterError("root/coroot length must equal lattice rank")

    def validate_against(self, matrix: CoxeterMatrix) -> None:
        n = matrix.rank
        if len(self.roots) != n:
            raise CoxeterError("realization rank differs from matrix rank")
        for i in range(n):
            if _pair(self.coroots[i], self.roots[i]) != 2:
                raise CoxeterError(f"<coroot_{i}, root_{i}> must be 2")
        for i in range(n):
            for j in range(i + 1, n):
                a = _pair(self.coroots[i], self.roots[j])
                b = _pair(self.coroots[j], self.roots[i])
                if a > 0 or b > 0 or (a == 0) != (b == 0):
                    raise CoxeterError(
                        f"Cartan pairings for generators {i},{j} must be "
                        "nonpositive and vanish together"
                    )
                m = matrix.entry(i, j)
                if m == INF:
                    if a * b < 4:
                        raise CoxeterError(
                            f"m_{i}{j}=inf needs pairing product >= 4, got {a * b}"
                        )
                elif a * b != _PRODUCT_BY_M[m]:
                    raise CoxeterError(
                        f"pairing product {a * b} inconsistent with m_{i}{j}={m}"
                    )

    @classmethod
    def default_for(cls, matrix: CoxeterMatrix) -> "Realization":
        """Root-lattice realization: roots are basis vectors, coroots the
        Cartan rows built from the standard entries per Coxeter order."""
        n = matrix.rank
        cartan = [[0] * n for _ in range(n)]
        for i in range(n):
            cartan[i][i] = 2
        for i in range(n):
            for j in range(i + 1, n):
                m = matrix.entry(i, j)
                a, b = _CARTAN_BY_M[m]
                cartan[i][j] = a
                cartan[j][i] = b
        roots = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
        return cls(n, roots, [tuple(row) for row in cartan])


@dataclass(frozen=True)
class Root:
    """A root of the system: lattice vector, sign, and the reflection index
    bookkeeping is carried by the owning system."""

    vector: tuple
    positive: bool

    def __neg__(self):
        return Root(tuple(-c for c in self.vector), not self.positive)


class Element:
    """Group element handle; identity and hashing go through the action
    matrix, words through the owning system's BFS table."""

    __slots__ = ("system", "index")

    def __init__(self, system: "CoxeterSystem", index: int):
        self.system = system
        self.index = index

    @property
    def word(self) -> tuple:
        return self.system._words[self.index]

    def name(self) -> str:
        if not self.word:
            return "e"
        return "".join(GEN_LETTERS[i] for i in self.word)

    @property
    def length(self) -> int:
        return self.system._len[self.index]

    @property
    def action(self):
        return self.system._mats[self.index]

    def inverse(self) -> "Element":
        return Element(self.system, self.system.inverse_index(self.index))

    def __mul__(self, other: "Element") -> "Element":
        if other.system is not self.system:
            raise CoxeterError("cannot multiply elements of different systems")
        return Element(self.system, self.system.mul_index(self.index, other.index))

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.system is self.system
            and other.index == self.index
        )

    def __hash__(self):
        return hash((id(self.system), self.index))

    def __repr__(self):
        return f"<{self.name()}>"

    def sort_key(self):
        return (self.length, self.word)


class CoxeterSystem:
    """A Coxeter system with cached element table.

    The table is grown breadth-first on demand; `grow(L)` guarantees every
    element of length <= L is present with its multiplication rows filled.
    Growth is serialized by a lock, so concurrent readers are safe.
    """

    def __init__(self, matrix: CoxeterMatrix, realization: Realization | None = None,
                 name: str | None = None):
        self.matrix = matrix
        self.rank = matrix.rank
        if self.rank > len(GEN_LETTERS):
            raise CoxeterError("rank too large for generator naming")
        if realization is None:
            realization = Realization.default_for(matrix)
        realization.validate_against(matrix)
        self.realization = realization
        self.name = name
        self.affine_geometry = None  # set on affine presets

        n = realization.lattice_rank
        self.gen_matrices = []
        for i in range(self.rank):
            root = realization.roots[i]
            cov = realization.coroots[i]
            mat = tuple(
                tuple((1 if r == c else 0) - root[r] * cov[c] for c in range(n))
                for r in range(n)
            )
            self.gen_matrices.append(mat)
        self._check_braid_relations()

        self._lock = threading.RLock()
        ident = _identity(n)
        self._mats = [ident]
        self._index = {ident: 0}
        self._words = [()]
        self._len = [0]
        self._right = [[None] * self.rank]
        self._left = [[None] * self.rank]
        self._inv = [0]
        self._frontier = [0]
        self._explored = 0
        self.finite = None  # unknown until the BFS closes
        self._simple_solver = _SpanSolver(realization.roots)

    # -- construction checks ------------------------------------------

    def _check_braid_relations(self) -> None:
        n = self.realization.lattice_rank
        ident = _identity(n)
        for i in range(self.rank):
            if _mat_mul(self.gen_matrices[i], self.gen_matrices[i]) != ident:
                raise CoxeterError(f"generator {i} does not square to identity")
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                m = self.matrix.entry(i, j)
                prod = _mat_mul(self.gen_matrices[i], self.gen_matrices[j])
                power = prod
                bound = m if m != INF else 12
                for k in range(1, bound + 1):
                    if power == ident:
                        if m == INF or k < m:
                            raise CoxeterError(
                                f"(s{i} s{j}) has order {k}, matrix says "
                                f"{'inf' if m == INF else m}"
                            )
                        break
                    power = _mat_mul(power, prod)
                else:
                    if m != INF:
                        raise CoxeterError(
                            f"(s{i} s{j})^{m} != id in the realization"
                        )

    # -- element table -------------------------------------------------

    def grow(self, length: int) -> None:
        """Ensure all elements of length <= `length` are tabulated."""
        with self._lock:
            while self._explored < length and self._frontier:
                new_frontier = []
                for xi in self._frontier:
                    xm = self._mats[xi]
                    for s in range(self.rank):
                        if self._right[xi][s] is not None:
                            continue
                        ym = _mat_mul(xm, self.gen_matrices[s])
                        yi = self._index.get(ym)
                        if yi is None:
                            yi = len(self._mats)
                            self._mats.append(ym)
                            self._index[ym] = yi
                            self._words.append(self._words[xi] + (s,))
                            self._len.append(self._len[xi] + 1)
                            self._right.append([None] * self.rank)
                            self._left.append([None] * self.rank)
                            self._inv.append(None)
                            new_frontier.append(yi)
                        self._right[xi][s] = yi
                        self._right[yi][s] = xi
                self._frontier = new_frontier
                self._explored += 1
                if not new_frontier:
                    self.finite = True
            if self.finite is None and not self._frontier:
                self.finite = True

    def close(self) -> int:
        """Enumerate a finite system completely; returns the group order.

        Guarded: gives up (raises) past a hard ceiling so that an infinite
        system passed by mistake cannot loop forever.
        """
        ceiling = 1_000_000
        while self._frontier:
            self.grow(self._explored + 1)
            if len(self._mats) > ceiling:
                raise CoxeterError("system does not close; is it infinite?")
        self.finite = True
        return len(self._mats)

    @property
    def order(self) -> int | None:
        return len(self._mats) if self.finite else None

    @property
    def max_length(self) -> int | None:
        return self._explored if self.finite else None

    def element_count(self) -> int:
        return len(self._mats)

    def identity(self) -> Element:
        return Element(self, 0)

    def generator(self, s: int) -> Element:
        self.grow(1)
        return Element(self, self._index[self.gen_matrices[s]])

    def generators(self):
        return [self.generator(s) for s in range(self.rank)]

    def element(self, index: int) -> Element:
        return Element(self, index)

    def elements_up_to(self, length: int):
        """All elements of length <= `length`, sorted by (length, word)."""
        self.grow(length)
        idx = [i for i in range(len(self._mats)) if self._len[i] <= length]
        idx.sort(key=lambda i: (self._len[i], self._words[i]))
        return [Element(self, i) for i in idx]

    def all_elements(self):
        if self.finite is not True:
            self.close()
        return self.elements_up_to(self._explored)

    def index_of_matrix(self, mat, max_length: int) -> int:
        """Find an element by action matrix, growing up to max_length."""
        yi = self._index.get(mat)
        if yi is None:
            self.grow(max_length)
            yi = self._index.get(mat)
        if yi is None:
            raise CoxeterError(
                f"element not found within length bound {max_length}"
            )
        return yi

    def mul_index(self, xi: int, yi: int) -> int:
        m = _mat_mul(self._mats[xi], self._mats[yi])
        return self.index_of_matrix(m, self._len[xi] + self._len[yi])

    def inverse_index(self, xi: int) -> int:
        with self._lock:
            cached = self._inv[xi]
        if cached is not None:
            return cached
        m = self._mats[xi]
        n = len(m)
        inv = tuple(tuple(m[j][i] for j in range(n)) for i in range(n))
        # The inverse action is not the transpose in general; recompute by
        # reversing the canonical word instead.
        word = self._words[xi]
        mat = _identity(n)
        for s in reversed(word):
            mat = _mat_mul(mat, self.gen_matrices[s])
        del inv
        yi = self.index_of_matrix(mat, self._len[xi])
        with self._lock:
            self._inv[xi] = yi
            self._inv[yi] = xi
        return yi

    def left_index(self, s: int, xi: int) -> int:
        cached = self._left[xi][s]
        if cached is not None:
            return cached
        m = _mat_mul(self.gen_matrices[s], self._mats[xi])
        yi = self.index_of_matrix(m, self._len[xi] + 1)
        with self._lock:
            self._left[xi][s] = yi
            self._left[yi][s] = xi
        return yi

    def right_index(self, xi: int, s: int) -> int:
        cached = self._right[xi][s]
        if cached is not None:
            return cached
        m = _mat_mul(self._mats[xi], self.gen_matrices[s])
        yi = self.index_of_matrix(m, self._len[xi] + 1)
        with self._lock:
            self._right[xi][s] = yi
            self._right[yi][s] = xi
        return yi

    def length_of(self, xi: int) -> int:
        return self._len[xi]

    # -- words ----------------------------------------------------------

    def word_to_element(self, word) -> Element:
        """`word` is an iterable of generator indices or a string of letters
        (`e` for the identity)."""
        if isinstance(word, str):
            if word in ("", "e"):
                return self.identity()
            idxs = []
            for ch in word:
                pos = GEN_LETTERS.find(ch)
                if pos < 0 or pos >= self.rank:
                    raise CoxeterError(f"unknown generator {ch!r}")
                idxs.append(pos)
            word = idxs
        xi = 0
        for s in word:
            if not 0 <= s < self.rank:
                raise CoxeterError(f"generator index {s} out of range")
            xi = self.right_index(xi, s)
        return Element(self, xi)

    # -- length comparisons / descents -----------------------------------

    def descents(self, x: Element, side: str = "left"):
        """Generator indices s with l(sx) < l(x) (left) or l(xs) < l(x)."""
        xi = x.index
        out = []
        for s in range(self.rank):
            yi = self.left_index(s, xi) if side == "left" else self.right_index(xi, s)
            if self._len[yi] < self._len[xi]:
                out.append(s)
        return out

    # -- Bruhat order -----------------------------------------------------

    def bruhat_leq(self, x: Element, y: Element) -> bool:
        if x.system is not self or y.system is not self:
            raise CoxeterError("elements of a different system")
        return self._bruhat(x.index, y.index)

    def _bruhat(self, xi: int, yi: int) -> bool:
        # standard recursion: for s with sy < y,
        #   x <= y  iff  (sx <= sy if sx < x else x <= sy)
        if xi == yi:
            return True
        if self._len[xi] >= self._len[yi]:
            return False
        memo = self._bruhat_memo
        key = (xi, yi)
        known = memo.get(key)
        if known is not None:
            return known
        s = next(
            s
            for s in range(self.rank)
            if self._len[self.left_index(s, yi)] < self._len[yi]
        )
        syi = self.left_index(s, yi)
        sxi = self.left_index(s, xi)
        if self._len[sxi] < self._len[xi]:
            res = self._bruhat(sxi, syi)
        else:
            res = self._bruhat(xi, syi)
        memo[key] = res
        return res

    @property
    def _bruhat_memo(self):
        memo = getattr(self, "_bruhat_cache", None)
        if memo is None:
            memo = self._bruhat_cache = {}
        return memo

    # -- roots -------------------------------------------------------------

    def simple_root(self, s: int) -> Root:
        return Root(self.realization.roots[s], True)

    def root_sign(self, vector) -> bool:
        """True for positive, False for negative; raises NotInOrbitError when
        the vector is not a signed combination of simple roots."""
        coeffs = self._simple_solver.solve(vector)
        if coeffs is None:
            raise NotInOrbitError(f"{vector} is not in the root lattice span")
        if all(c >= 0 for c in coeffs):
            return True
        if all(c <= 0 for c in coeffs):
            return False
        raise NotInOrbitError(f"{vector} has mixed simple-root signs")

    def act_on_root(self, x: Element, gamma: Root) -> Root:
        vec = _mat_vec(x.action, gamma.vector)
        return Root(vec, self.root_sign(vec))

    def act_on_covector(self, x: Element, cov):
        """Contragredient action: (x.cov)(v) = cov(x^{-1} v)."""
        return _vec_mat(cov, x.inverse().action)

    def reflection_table(self, length_bound: int):
        """All reflections t with l(t) <= length_bound, as a list of
        (Element, Root, coroot covector) sorted by (length, word).

        Found by orbit BFS on the simple roots; each positive root
        corresponds to exactly one reflection.
        """
        depth_bound = (length_bound + 1) // 2
        self.grow(min(length_bound + 2, length_bound + 2))
        seen = {}
        layer = []
        for s in range(self.rank):
            root = self.realization.roots[s]
            cov = self.realization.coroots[s]
            ti = self.generator(s).index
            if root not in seen:
                seen[root] = (ti, cov)
                layer.append((root, cov, ti))
        for _ in range(depth_bound):
            nxt = []
            for root, cov, ti in layer:
                for s in range(self.rank):
                    g = self.gen_matrices[s]
                    nr = _mat_vec(g, root)
                    nc = _vec_mat(cov, g)
                    if not self.root_sign(nr):
                        nr = tuple(-c for c in nr)
                        nc = tuple(-c for c in nc)
                    if nr in seen:
                        continue
                    nti = self.left_index(s, self.right_index(ti, s))
                    seen[nr] = (nti, nc)
                    nxt.append((nr, nc, nti))
            layer = nxt
        out = []
        for root, (ti, cov) in seen.items():
            if self._len[ti] <= length_bound:
                out.append((Element(self, ti), Root(root, True), cov))
        out.sort(key=lambda rec: rec[0].sort_key())
        return out

    def is_reflection(self, x: Element, length_bound: int | None = None) -> bool:
        if x.length % 2 == 0:
            return False
        bound = x.length if length_bound is None else length_bound
        return any(t.index == x.index for t, _, _ in self.reflection_table(bound))

    def __repr__(self):
        label = self.name or f"rank-{self.rank}"
        return f"CoxeterSystem({label})"


class _SpanSolver:
    """Exact rational solver expressing vectors over the simple roots.

    Requires the simple roots to be linearly independent, which holds for
    every supported realization (finite root lattices and affine ones with
    the delta marker coordinate).
    """

    def __init__(self, roots):
        self.k = len(roots)
        self.n = len(roots[0]) if roots else 0
        if self.k == 0:
            return
        # rows: [root_j as column; identity row] -- build augmented system
        # A c = v where A columns are roots; do a one-off fraction RREF of
        # [A | I] to read off solutions later.
        rows = []
        for i in range(self.n):
            rows.append(
                [Fraction(roots[j][i]) for j in range(self.k)]
                + [Fraction(1 if t == i else 0) for t in range(self.n)]
            )
        pivots = []
        r = 0
        for c in range(self.k):
            piv = next((i for i in range(r, self.n) if rows[i][c] != 0), None)
            if piv is None:
                raise CoxeterError("simple roots must be linearly independent")
            rows[r], rows[piv] = rows[piv], rows[r]
            scale = rows[r][c]
            rows[r] = [x / scale for x in rows[r]]
            for i in range(self.n):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        self.rows = rows
        self.roots = roots

    def solve(self, vector):
        """Coefficients c with sum c_j root_j = vector, or None."""
        if self.k == 0:
            return None
        coeffs = []
        for r in range(self.k):
            val = sum(
                self.rows[r][self.k + i] * vector[i] for i in range(self.n)
            )
            coeffs.append(val)
        # consistency: rows beyond rank must vanish on the vector
        for r in range(self.k, self.n):
            if sum(self.rows[r][self.k + i] * vector[i] for i in range(self.n)) != 0:
                return None
        # verify exactly (duplicates the consistency check, cheaply)
        for i in range(self.n):
            if sum(c * self.roots[j][i] for j, c in enumerate(coeffs)) != vector[i]:
                return None
        return coeffs
