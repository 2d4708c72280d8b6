"""Based root data of split reductive groups.

A datum is given by simple roots in ``X^*`` and simple coroots in ``X_*``
(both as integer vectors in a fixed basis of rank ``rank``), together with
the residue field size ``q = p**f``.

Coweights are stored in *nu-coordinates*: the translation attached to a
cocharacter ``mu`` (the class of ``mu(varpi)``) has ``v = mu`` and
``nu = -v = -mu``.  Dominance means ``<alpha, nu> <= 0`` for every simple
root.

>>> d = preset("A2sc")
>>> d.cartan
((2, -1), (-1, 2))
>>> len(d.positive_roots)
3
>>> d.is_dominant((-1, -1)), d.is_dominant((1, 0))
(True, False)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

Vec = tuple[int, ...]
Mat = tuple[int, ...]  # row-major flattened square matrix acting on X_*

__all__ = [
    "BasedRootDatum",
    "FiniteWeyl",
    "PositiveRoot",
    "PRESETS",
    "preset",
    "load_datum",
    "v_to_nu",
    "nu_to_v",
]


def v_to_nu(v: Sequence[int]) -> Vec:
    return tuple(-a for a in v)


def nu_to_v(nu: Sequence[int]) -> Vec:
    return tuple(-a for a in nu)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"q={q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    f, r = 0, q
    while r % p == 0:
        r //= p
        f += 1
    if r != 1:
        raise ValueError(f"q={q} is not a prime power")
    return p, f


def _solve_exact(columns: Sequence[Vec], target: Vec) -> tuple[Fraction, ...] | None:
    """Solve ``sum c_j columns[j] = target`` over Q, columns independent."""
    n = len(columns)
    m = len(target)
    rows = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                fac = rows[i][c]
                rows[i] = [a - fac * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][n] != 0 for i in range(r, m)):
        return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][n]
    return tuple(sol)


def _rank(vectors: Sequence[Vec]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pr = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                fac = rows[i][c] / rows[rank][c]
                rows[i] = [a - fac * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class PositiveRoot:
    root: Vec       # in X^*
    coroot: Vec     # in X_*
    coeffs: Vec     # coefficients on the simple roots (of the ambient datum)

    @property
    def height(self) -> int:
        return sum(self.coeffs)


@dataclass(frozen=True)
class BasedRootDatum:
    """Split based root datum with residue field of size ``p**f``."""

    name: str
    rank: int
    simple_roots: tuple[Vec, ...]
    simple_coroots: tuple[Vec, ...]
    p: int = 3
    f: int = 1
    # indices of the simple roots inside the ambient datum (Levi sub-data)
    labels: tuple[int, ...] | None = field(default=None, compare=True)

    def __post_init__(self) -> None:
        object.__setattr__(self, "simple_roots", tuple(tuple(int(x) for x in a) for a in self.simple_roots))
        object.__setattr__(self, "simple_coroots", tuple(tuple(int(x) for x in a) for a in self.simple_coroots))
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(len(self.simple_roots))))
        self._validate()

    # -- construction -------------------------------------------------
    def _validate(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if len(self.simple_roots) != len(self.simple_coroots):
            raise ValueError("need as many simple coroots as simple roots")
        for a, b in zip(self.simple_roots, self.simple_coroots):
            if len(a) != self.rank or len(b) != self.rank:
                raise ValueError("root/coroot vectors must have length rank")
        _factor = _factor_prime_power(self.p)
        if _factor != (self.p, 1):
            raise ValueError(f"p={self.p} is not prime")
        if self.f < 1:
            raise ValueError("f must be >= 1")
        n = len(self.simple_roots)
        if n:
            if _rank(self.simple_roots) != n or _rank(self.simple_coroots) != n:
                raise ValueError("simple roots and coroots must be linearly independent")
        C = self.cartan
        for i in range(n):
            if C[i][i] != 2:
                raise ValueError(f"<alpha_{i}, alpha_{i}^vee> = {C[i][i]} != 2")
            for j in range(n):
                if i != j and (C[i][j] > 0 or (C[i][j] == 0) != (C[j][i] == 0)):
                    raise ValueError("not a generalized Cartan matrix")
        if not _finite_type(C):
            raise ValueError("Cartan matrix is not of finite type")

    @property
    def q(self) -> int:
        return self.p ** self.f

    def with_q(self, q: int) -> "BasedRootDatum":
        p, f = _factor_prime_power(q)
        return BasedRootDatum(self.name, self.rank, self.simple_roots, self.simple_coroots, p, f, self.labels)

    @property
    def n_simple(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(_dot(a, b) for b in self.simple_coroots) for a in self.simple_roots
        )

    # -- roots --------------------------------------------------------
    @cached_property
    def positive_roots(self) -> tuple[PositiveRoot, ...]:
        n = self.n_simple
        C = self.cartan
        start = []
        for i in range(n):
            e = tuple(int(k == i) for k in range(n))
            start.append((e, e))
        seen = set(start)
        frontier = list(start)
        while frontier:
            nxt = []
            for c, d in frontier:
                for j in range(n):
                    pc = sum(c[i] * C[i][j] for i in range(n))  # <beta, alpha_j^vee>
                    pd = sum(d[i] * C[j][i] for i in range(n))  # <alpha_j, beta^vee>
                    c2 = tuple(c[k] - (pc if k == j else 0) for k in range(n))
                    d2 = tuple(d[k] - (pd if k == j else 0) for k in range(n))
                    if (c2, d2) not in seen:
                        seen.add((c2, d2))
                        nxt.append((c2, d2))
                if len(seen) > 10_000:
                    raise ValueError("root closure does not terminate")
            frontier = nxt
        out = []
        for c, d in seen:
            if all(x >= 0 for x in c):
                root = tuple(sum(c[i] * self.simple_roots[i][k] for i in range(n)) for k in range(self.rank))
                coroot = tuple(sum(d[i] * self.simple_coroots[i][k] for i in range(n)) for k in range(self.rank))
                assert _dot(root, coroot) == 2
                out.append(PositiveRoot(root, coroot, c))
        out.sort(key=lambda r: (r.height, tuple(-x for x in r.coeffs)))
        return tuple(out)

    @cached_property
    def root_sign(self) -> dict[Vec, int]:
        """Map root vector in X^* to +1 / -1."""
        out = {}
        for r in self.positive_roots:
            out[r.root] = 1
            out[tuple(-x for x in r.root)] = -1
        return out

    @cached_property
    def two_rho(self) -> Vec:
        return tuple(sum(r.root[k] for r in self.positive_roots) for k in range(self.rank))

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Irreducible components of the Dynkin diagram, as index tuples."""
        n = self.n_simple
        left = set(range(n))
        comps = []
        while left:
            stack = [min(left)]
            comp = set()
            while stack:
                i = stack.pop()
                if i in comp:
                    continue
                comp.add(i)
                stack.extend(j for j in range(n) if j not in comp and self.cartan[i][j] != 0)
            left -= comp
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @cached_property
    def highest_roots(self) -> tuple[PositiveRoot, ...]:
        out = []
        for comp in self.components:
            cands = [
                r for r in self.positive_roots
                if all(r.coeffs[i] == 0 for i in range(self.n_simple) if i not in comp)
            ]
            out.append(max(cands, key=lambda r: r.height))
        return tuple(out)

    # -- pairings and orders -----------------------------------------
    def pairing(self, root: int | Sequence[int], cw: Sequence[int]) -> int:
        vec = self.simple_roots[root] if isinstance(root, int) else root
        return _dot(vec, cw)

    def is_dominant(self, nu: Sequence[int]) -> bool:
        return all(_dot(a, nu) <= 0 for a in self.simple_roots)

    def coroot_coefficients(self, x: Sequence[int]) -> tuple[Fraction, ...] | None:
        """Rational coefficients of ``x`` on the simple coroots, or None."""
        if self.n_simple == 0:
            return () if all(a == 0 for a in x) else None
        return _solve_exact(self.simple_coroots, tuple(x))

    def preceq(self, x1: Sequence[int], x2: Sequence[int]) -> bool:
        """``x1 - x2`` is a nonnegative integral combination of simple coroots."""
        sol = self.coroot_coefficients(tuple(a - b for a, b in zip(x1, x2)))
        return sol is not None and all(c.denominator == 1 and c >= 0 for c in sol)

    def lambda_alpha(self, i: int) -> Vec:
        """nu-coordinates of the translation lambda_alpha (= a_alpha), i.e. alpha^vee."""
        return self.simple_coroots[i]

    def ell_dominant(self, nu: Sequence[int]) -> int:
        """Length ``-<2 rho, nu>`` of a dominant translation."""
        return -_dot(self.two_rho, nu)

    def dominating_shift(self, z: Sequence[int], J: Iterable[int], n: dict[int, int] | Sequence[int]) -> Vec:
        """A shift ``y`` in the span of the ``lambda_alpha`` (alpha in J) with ``y`` and
        every ``y z prod_{alpha in J} lambda_alpha^m`` (``0 <= m <= n``) dominant for
        the Levi attached to J.

        Inputs and output are nu-coordinates; ``n`` maps elements of J to exponents
        (or is a vector indexed like J).  Dominance is measured on J only: a nonzero
        element of the coroot span of a proper J can never pair nonpositively with
        every simple root outside J.
        """
        J = sorted(set(J))
        if not isinstance(n, dict):
            n = dict(zip(J, n))
        z = tuple(z)
        for scale in range(0, 4096):
            k = self._positive_cartan_solution(J, scale) if J else {}
            y = tuple(-sum(k[j] * self.simple_coroots[j][c] for j in J) for c in range(self.rank))
            if self._shift_ok(y, z, J, n):
                return y
        raise RuntimeError("dominating_shift: no shift found")  # pragma: no cover

    def is_dominant_on(self, nu: Sequence[int], J: Iterable[int]) -> bool:
        return all(_dot(self.simple_roots[j], nu) <= 0 for j in J)

    def _positive_cartan_solution(self, J: Sequence[int], scale: int) -> dict[int, int]:
        # k = scale * (integral multiple of inverse Cartan row sums on J): every entry
        # of the inverse Cartan matrix of finite type is positive on components.
        sub = [[Fraction(self.cartan[i][j]) for j in J] for i in J]
        ones = [Fraction(1)] * len(J)
        sol = _solve_exact([tuple(sub[i][c] for i in range(len(J))) for c in range(len(J))], tuple(ones))
        assert sol is not None
        den = 1
        for s in sol:
            den = den * s.denominator // _gcd(den, s.denominator)
        return {j: int(s * den) * scale for j, s in zip(J, sol)}

    def _shift_ok(self, y: Vec, z: Vec, J: Sequence[int], n: dict[int, int]) -> bool:
        if not self.is_dominant_on(y, J):
            return False
        ranges = [range(n.get(j, 0) + 1) for j in J]
        for m in product(*ranges):
            x = tuple(
                y[c] + z[c] + sum(mj * self.simple_coroots[j][c] for mj, j in zip(m, J))
                for c in range(self.rank)
            )
            if not self.is_dominant_on(x, J):
                return False
        return True

    # -- Levi ---------------------------------------------------------
    def levi_subdatum(self, J: Iterable[int]) -> "BasedRootDatum":
        J = tuple(sorted(set(J)))
        if any(j < 0 or j >= self.n_simple for j in J):
            raise ValueError(f"J={J} is not a subset of the simple roots")
        if J == tuple(range(self.n_simple)):
            return self
        return BasedRootDatum(
            f"{self.name}[J={','.join(map(str, J))}]",
            self.rank,
            tuple(self.simple_roots[j] for j in J),
            tuple(self.simple_coroots[j] for j in J),
            self.p,
            self.f,
            tuple(self.labels[j] for j in J),
        )

    @cached_property
    def weyl(self) -> "FiniteWeyl":
        return FiniteWeyl(self)

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "simple_roots": [list(a) for a in self.simple_roots],
            "simple_coroots": [list(a) for a in self.simple_coroots],
            "p": self.p,
            "f": self.f,
        }

    @classmethod
    def from_json(cls, data: dict) -> "BasedRootDatum":
        missing = {"name", "rank", "simple_roots", "simple_coroots", "p", "f"} - set(data)
        if missing:
            raise ValueError(f"root datum JSON missing fields: {sorted(missing)}")
        return cls(
            str(data["name"]),
            int(data["rank"]),
            tuple(tuple(a) for a in data["simple_roots"]),
            tuple(tuple(a) for a in data["simple_coroots"]),
            int(data["p"]),
            int(data["f"]),
        )

    def __repr__(self) -> str:
        return f"BasedRootDatum({self.name!r}, q={self.q})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _finite_type(C: Sequence[Sequence[int]]) -> bool:
    """Symmetrize ``C`` and test positive definiteness via leading minors."""
    n = len(C)
    if n == 0:
        return True
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and C[i][j] != 0:
                    val = d[i] * C[i][j] / C[j][i]
                    if d[j] is None:
                        d[j] = val
                        stack.append(j)
                    elif d[j] != val:
                        return False
    B = [[d[i] * C[i][j] for j in range(n)] for i in range(n)]
    if any(x is None or x <= 0 for x in d):
        return False
    # Gaussian elimination: all pivots positive <=> positive definite
    M = [row[:] for row in B]
    for k in range(n):
        if M[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            fac = M[i][k] / M[k][k]
            M[i] = [a - fac * b for a, b in zip(M[i], M[k])]
    return True


class FiniteWeyl:
    """The finite Weyl group W_0 of a datum, acting on X_* by integer matrices.

    Elements are row-major flattened matrices (hashable, shared between a datum
    and its Levi sub-data since the lattice is the same).
    """

    def __init__(self, datum: BasedRootDatum):
        self.datum = datum
        r = datum.rank
        self.rank = r
        self.identity: Mat = tuple(int(i == j) for i in range(r) for j in range(r))
        self.gens: tuple[Mat, ...] = tuple(
            self.reflection(datum.simple_roots[i], datum.simple_coroots[i]) for i in range(datum.n_simple)
        )
        elements = [self.identity]
        words: list[tuple[int, ...]] = [()]
        index = {self.identity: 0}
        level = [0]
        while level:
            nxt = []
            for k in level:
                for s, g in enumerate(self.gens):
                    m = self._matmul(elements[k], g)
                    if m not in index:
                        index[m] = len(elements)
                        elements.append(m)
                        words.append(words[k] + (s,))
                        nxt.append(index[m])
            level = nxt
            if len(elements) > 100_000:
                raise ValueError("finite Weyl group too large")
        self.elements: tuple[Mat, ...] = tuple(elements)
        self.index = index
        self.words: tuple[tuple[int, ...], ...] = tuple(words)
        n = len(elements)
        self._mul = [[index[self._matmul(a, b)] for b in elements] for a in elements]
        self._inv = [next(j for j in range(n) if self._mul[i][j] == 0) for i in range(n)]
        self.longest: Mat = max(elements, key=lambda m: len(words[index[m]]))
        # positivity table: pos[i][k] <=> alpha_k in w_i(Phi^+)
        roots = datum.positive_roots
        sign = datum.root_sign
        self._pos = []
        for m in elements:
            inv = elements[self._inv[index[m]]]
            self._pos.append(tuple(sign[self.act_root(inv, rt.root)] > 0 for rt in roots))

    # matrices
    def _matmul(self, a: Mat, b: Mat) -> Mat:
        r = self.rank
        return tuple(
            sum(a[i * r + k] * b[k * r + j] for k in range(r)) for i in range(r) for j in range(r)
        )

    def reflection(self, root: Vec, coroot: Vec) -> Mat:
        r = self.rank
        return tuple(int(i == j) - coroot[i] * root[j] for i in range(r) for j in range(r))

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, a: Mat, b: Mat) -> Mat:
        idx = self.index
        return self.elements[self._mul[idx[a]][idx[b]]]

    def inv(self, a: Mat) -> Mat:
        return self.elements[self._inv[self.index[a]]]

    def length(self, a: Mat) -> int:
        return len(self.words[self.index[a]])

    def word(self, a: Mat) -> tuple[int, ...]:
        """Lexicographically least reduced word."""
        return self.words[self.index[a]]

    def from_word(self, word: Iterable[int]) -> Mat:
        m = self.identity
        for s in word:
            m = self.mul(m, self.gens[s])
        return m

    def act(self, a: Mat, x: Sequence[int]) -> Vec:
        r = self.rank
        return tuple(sum(a[i * r + k] * x[k] for k in range(r)) for i in range(r))

    def act_mod(self, a: Mat, x: Sequence[int], n: int) -> Vec:
        r = self.rank
        return tuple(sum(a[i * r + k] * x[k] for k in range(r)) % n for i in range(r))

    def act_root(self, a: Mat, chi: Sequence[int]) -> Vec:
        """Contragredient action on X^*: ``(w chi)(x) = chi(w^{-1} x)``."""
        inv = self.inv(a)
        r = self.rank
        return tuple(sum(chi[k] * inv[k * r + j] for k in range(r)) for j in range(r))

    def positive_mask(self, a: Mat) -> tuple[bool, ...]:
        """``mask[k]`` is True iff the k-th positive root lies in ``a(Phi^+)``."""
        return self._pos[self.index[a]]

    def reflection_of_root(self, rt: PositiveRoot) -> Mat:
        return self.reflection(rt.root, rt.coroot)


def _preset_table() -> dict[str, BasedRootDatum]:
    sl2 = BasedRootDatum("A1sc", 1, ((2,),), ((1,),))
    pgl2 = BasedRootDatum("A1ad", 1, ((1,),), ((2,),))
    gl2 = BasedRootDatum("GL2", 2, ((1, -1),), ((1, -1),))
    gl3 = BasedRootDatum("GL3", 3, ((1, -1, 0), (0, 1, -1)), ((1, -1, 0), (0, 1, -1)))
    a2 = BasedRootDatum("A2sc", 2, ((2, -1), (-1, 2)), ((1, 0), (0, 1)))
    b2 = BasedRootDatum("B2", 2, ((2, -2), (-1, 2)), ((1, 0), (0, 1)))
    g2 = BasedRootDatum("G2", 2, ((2, -1), (-3, 2)), ((1, 0), (0, 1)))
    table = {d.name: d for d in (sl2, pgl2, gl2, gl3, a2, b2, g2)}
    table["SL2"] = sl2
    table["PGL2"] = pgl2
    table["SL3"] = a2
    table["A2"] = a2
    return table


PRESETS: dict[str, BasedRootDatum] = _preset_table()


def preset(name: str, q: int | None = None) -> BasedRootDatum:
    """Look up a shipped datum by (case-insensitive) name, optionally resetting q."""
    lookup = {k.lower(): v for k, v in PRESETS.items()}
    try:
        d = lookup[name.lower()]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; known: {sorted(PRESETS)}") from None
    return d.with_q(q) if q is not None else d


def load_datum(spec: str, q: int | None = None) -> BasedRootDatum:
    """Preset name or path to a JSON file."""
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        d = BasedRootDatum.from_json(json.loads(path.read_text()))
        return d.with_q(q) if q is not None else d
    return preset(spec, q)
