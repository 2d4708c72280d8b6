"""The finite torus ``Z_k`` and the pro-p Iwahori Weyl group ``W(1)``.

``Z_k = X_* (x) k^x`` is stored as exponent vectors mod ``q - 1`` with respect
to a fixed generator ``g`` of ``k^x``.  An element of ``W(1)`` is a triple
``(nu, t, w)`` standing for ``t * varpi^{-nu} * n(w)`` where ``varpi^{-nu}`` is
the cocharacter ``-nu`` evaluated at the uniformizer and ``n(w)`` is the Tits
lift (``n_s^2 = alpha_s^vee(-1)``).  Group-algebra elements of ``Z[Z_k]``
are plain dicts ``{exponent vector: integer}``.

>>> from hecke_satake.rootdata import preset
>>> G = torus_cover(preset("GL2", q=3))
>>> s = G.lift_simple(0)
>>> G.mul(s, s)
ProPElement(nu=(0, 0), t=(1, 0), w=(1, 0, 0, 1))
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, NamedTuple, Sequence

from .affine_weyl import AffElt, AffineWeyl, affine_weyl
from .fields import GF, gf
from .rootdata import BasedRootDatum, Mat, Vec

__all__ = [
    "ProPElement",
    "TorusCharacter",
    "TorusCover",
    "torus_cover",
    "GroupAlg",
    "ga_add",
    "ga_mul",
    "ga_scale",
    "ga_shift",
    "ga_clean",
]

GroupAlg = dict  # dict[Vec, int]


class ProPElement(NamedTuple):
    nu: Vec
    t: Vec
    w: Mat

    @property
    def image(self) -> AffElt:
        return AffElt(self.nu, self.w)


# -- group algebra helpers (pure functions on dicts) -------------------

def ga_clean(c: Mapping[Vec, int]) -> GroupAlg:
    return {k: v for k, v in c.items() if v}


def ga_add(a: Mapping[Vec, int], b: Mapping[Vec, int], sign: int = 1) -> GroupAlg:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return ga_clean(out)


def ga_scale(a: Mapping[Vec, int], n: int) -> GroupAlg:
    return ga_clean({k: n * v for k, v in a.items()})


def ga_mul(a: Mapping[Vec, int], b: Mapping[Vec, int], modulus: int) -> GroupAlg:
    out: dict[Vec, int] = defaultdict(int)
    for ka, va in a.items():
        for kb, vb in b.items():
            out[tuple((x + y) % modulus for x, y in zip(ka, kb))] += va * vb
    return ga_clean(out)


def ga_shift(t: Vec, a: Mapping[Vec, int], modulus: int) -> GroupAlg:
    return {tuple((x + y) % modulus for x, y in zip(t, k)): v for k, v in a.items()}


@dataclass(frozen=True)
class TorusCharacter:
    """``psi(t) = g^{sum a_i t_i}`` with values in ``F_q``."""

    exponents: Vec
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(int(a) % (self.q - 1) for a in self.exponents))

    @property
    def field(self) -> GF:
        return gf(self.q)

    def log_value(self, t: Sequence[int]) -> int:
        return sum(a * x for a, x in zip(self.exponents, t)) % (self.q - 1)

    def __call__(self, t: Sequence[int]) -> int:
        return self.field.exp(self.log_value(t))

    def inverse(self) -> "TorusCharacter":
        return TorusCharacter(tuple(-a for a in self.exponents), self.q)

    def eval(self, c: Mapping[Vec, int]) -> int:
        """``sum coeff(t) psi(t)`` in ``F_q``."""
        F = self.field
        acc = 0
        for t, n in c.items():
            acc = F.add(acc, F.scale(n, self(t)))
        return acc

    def is_trivial_on(self, coroot: Sequence[int]) -> bool:
        return sum(a * c for a, c in zip(self.exponents, coroot)) % (self.q - 1) == 0

    def to_json(self) -> dict:
        return {"exponents": list(self.exponents)}


class TorusCover:
    """``W(1)`` for a datum with residue field ``F_q``."""

    def __init__(self, datum: BasedRootDatum):
        self.datum = datum
        self.q = datum.q
        self.m = datum.q - 1
        self.W: AffineWeyl = affine_weyl(datum)
        self.W0 = datum.weyl
        self.rank = datum.rank
        self.t0: Vec = tuple(0 for _ in range(self.rank))
        self.identity = ProPElement(self.W.zero, self.t0, self.W0.identity)
        # exponent of -1 in k^x
        self.half = self.m // 2 if self.q % 2 else 0
        self._cocycle: dict[tuple[Mat, Mat], Vec] = {}
        self._base_c: dict[int, GroupAlg] = {}
        self._lifts = tuple(self._admissible_lift(s) for s in range(len(self.W.letters)))

    # -- torus --------------------------------------------------------
    def torus_elements(self) -> Iterable[Vec]:
        return product(range(self.m), repeat=self.rank)

    def tadd(self, a: Sequence[int], b: Sequence[int]) -> Vec:
        m = self.m
        return tuple((x + y) % m for x, y in zip(a, b))

    def tneg(self, a: Sequence[int]) -> Vec:
        return tuple((-x) % self.m for x in a)

    def tact(self, w: Mat, t: Sequence[int]) -> Vec:
        return self.W0.act_mod(w, t, self.m)

    def coroot_image(self, coroot: Sequence[int]) -> frozenset[Vec]:
        """The subgroup ``beta^vee(k^x)``."""
        return frozenset(tuple((e * c) % self.m for c in coroot) for e in range(self.m))

    def character(self, exponents: Sequence[int]) -> TorusCharacter:
        return TorusCharacter(tuple(exponents), self.q)

    def characters(self) -> Iterable[TorusCharacter]:
        for a in self.torus_elements():
            yield TorusCharacter(a, self.q)

    def delta_prime_psi(self, psi: TorusCharacter) -> frozenset[int]:
        return frozenset(
            i for i, cr in enumerate(self.datum.simple_coroots) if psi.is_trivial_on(cr)
        )

    # -- Tits cocycle -----------------------------------------------------
    def cocycle(self, a: Mat, b: Mat) -> Vec:
        """``mu(a, b)`` with ``n(a) n(b) = mu(a, b) n(ab)``."""
        key = (a, b)
        hit = self._cocycle.get(key)
        if hit is not None:
            return hit
        W0 = self.W0
        t = self.t0
        u = a
        for s in W0.word(b):
            us = W0.mul(u, W0.gens[s])
            if W0.length(us) < W0.length(u):
                cr = W0.act(us, self.datum.simple_coroots[s])
                t = self.tadd(t, tuple(self.half * c for c in cr))
            u = us
        self._cocycle[key] = t
        return t

    # -- group law ----------------------------------------------------------
    def mul(self, a: ProPElement, b: ProPElement) -> ProPElement:
        W0 = self.W0
        nu = tuple(x + y for x, y in zip(a.nu, W0.act(a.w, b.nu)))
        t = self.tadd(self.tadd(a.t, self.tact(a.w, b.t)), self.cocycle(a.w, b.w))
        return ProPElement(nu, t, W0.mul(a.w, b.w))

    def product(self, elts: Iterable[ProPElement]) -> ProPElement:
        out = self.identity
        for e in elts:
            out = self.mul(out, e)
        return out

    def inv(self, a: ProPElement) -> ProPElement:
        wi = self.W0.inv(a.w)
        b = ProPElement(self.W.zero, self.t0, wi)
        ab = self.mul(a, b)  # = (t', nu', e)
        rest = ProPElement(tuple(-x for x in ab.nu), self.tneg(ab.t), self.W0.identity)
        return self.mul(b, rest)

    def torus(self, t: Sequence[int]) -> ProPElement:
        return ProPElement(self.W.zero, tuple(x % self.m for x in t), self.W0.identity)

    def lift(self, a: AffElt, t: Sequence[int] | None = None) -> ProPElement:
        """Lift of ``a`` with torus part ``t`` (default trivial)."""
        return ProPElement(a.nu, self.t0 if t is None else tuple(x % self.m for x in t), a.w)

    def translation(self, nu: Sequence[int], t: Sequence[int] | None = None) -> ProPElement:
        return self.lift(self.W.translation(nu), t)

    def tits(self, w: Mat) -> ProPElement:
        return ProPElement(self.W.zero, self.t0, w)

    def lift_simple(self, s: int) -> ProPElement:
        return self._lifts[s]

    def _admissible_lift(self, s: int) -> ProPElement:
        """Distinguished lift of a simple affine reflection.

        Finite letters get the pinned ``n_s``.  For an affine letter with root
        theta, the Tits lift of ``s_theta`` need not be ``n_theta`` modulo
        ``theta^vee(k^x)`` (in type A2 it is off by ``alpha_1^vee(-1)``), so the
        torus part is taken from a conjugate ``n(w) n_i n(w)^{-1}`` with
        ``w(alpha_i) = theta``.
        """
        letter = self.W.letters[s]
        if letter.level == 0:
            return self.lift(letter.elt)
        d = self.datum
        theta = letter.root.root
        for w in self.W0.elements:
            for i in range(d.n_simple):
                if self.W0.act_root(w, d.simple_roots[i]) == theta:
                    n = self.tits(w)
                    conj = self.product([n, self.tits(self.W0.gens[i]), self.inv(n)])
                    assert conj.w == letter.elt.w and conj.nu == self.W.zero
                    return ProPElement(letter.elt.nu, conj.t, letter.elt.w)
        raise RuntimeError("highest root is not W_0-conjugate to a simple root")  # pragma: no cover

    def length(self, a: ProPElement) -> int:
        return self.W.length(a.image)

    def torus_part_relative(self, a: ProPElement, b: ProPElement) -> Vec:
        """The ``t`` with ``a = t b`` (``a``, ``b`` of equal image)."""
        c = self.mul(a, self.inv(b))
        assert c.nu == self.W.zero and c.w == self.W0.identity, "elements have different images"
        return c.t

    # -- quadratic constants ----------------------------------------------
    def letter_of(self, a: ProPElement) -> int:
        for s in self.W.letters:
            if s.elt == a.image:
                return s.index
        raise ValueError(f"{a} does not cover a simple affine reflection")

    def base_c(self, s: int) -> GroupAlg:
        """``c`` of the distinguished lift: ``sum_{x in k^x} beta^vee(x)`` over Z."""
        hit = self._base_c.get(s)
        if hit is None:
            cr = self.W.letters[s].root.coroot
            acc: dict[Vec, int] = defaultdict(int)
            for e in range(self.m):
                acc[tuple((e * c) % self.m for c in cr)] += 1
            hit = self._base_c[s] = dict(acc)
        return hit

    def c_of_lift(self, a: ProPElement) -> GroupAlg:
        s = self.letter_of(a)
        t = self.torus_part_relative(a, self.lift_simple(s))
        return ga_shift(t, self.base_c(s), self.m)

    def ga_act(self, w: Mat, c: Mapping[Vec, int]) -> GroupAlg:
        out: dict[Vec, int] = defaultdict(int)
        for t, n in c.items():
            out[self.tact(w, t)] += n
        return dict(out)

    def ga_mul(self, a: Mapping[Vec, int], b: Mapping[Vec, int]) -> GroupAlg:
        return ga_mul(a, b, self.m)

    # -- serialization ------------------------------------------------------
    def to_json(self, a: ProPElement) -> dict:
        return {"nu": list(a.nu), "t": list(a.t), "w0": list(self.W0.word(a.w))}

    def from_json(self, data: Mapping) -> ProPElement:
        nu = tuple(int(x) for x in data["nu"])
        if len(nu) != self.rank:
            raise ValueError("nu has the wrong length")
        t = tuple(int(x) % self.m for x in data.get("t", [0] * self.rank))
        word = [int(x) for x in data.get("w0", [])]
        if any(not 0 <= s < len(self.W0.gens) for s in word):
            raise ValueError("w0 letters must be simple reflection indices")
        w = self.W0.from_word(word)
        return ProPElement(nu, t, w)

    def sort_key(self, a: ProPElement) -> tuple:
        return (self.length(a), a.nu, self.W0.word(a.w), a.t)

    # -- GL_n monomial oracle ---------------------------------------------
    @cached_property
    def _is_gl(self) -> bool:
        n = self.rank
        d = self.datum
        expect = tuple(tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(n - 1))
        return d.simple_roots == expect and d.simple_coroots == expect

    def _tits_matrix(self, w: Mat):
        n = self.rank
        M = (tuple(range(n)), tuple((0, 0) for _ in range(n)))
        for s in self.W0.word(w):
            perm = list(range(n))
            perm[s], perm[s + 1] = s + 1, s
            ent = [(0, 0)] * n
            ent[s] = (0, self.half)
            M = _mono_mul(M, (tuple(perm), tuple(ent)), self.m)
        return M

    def to_monomial(self, a: ProPElement):
        if not self._is_gl:
            raise ValueError("monomial oracle is only available for GL_n data")
        n = self.rank
        D = (tuple(range(n)), tuple((-a.nu[i], a.t[i]) for i in range(n)))
        return _mono_mul(D, self._tits_matrix(a.w), self.m)

    def from_monomial(self, M) -> ProPElement:
        n = self.rank
        perm, _ = M
        w = tuple(int(perm[j] == i) for i in range(n) for j in range(n))
        if w not in self.W0.index:
            raise ValueError("not a permutation in W_0")
        N = self._tits_matrix(w)
        D = _mono_mul(M, _mono_inv(N, self.m), self.m)
        assert D[0] == tuple(range(n))
        return ProPElement(tuple(-v for v, _ in D[1]), tuple(e % self.m for _, e in D[1]), w)

    def monomial_oracle_mul(self, a: ProPElement, b: ProPElement) -> ProPElement:
        return self.from_monomial(_mono_mul(self.to_monomial(a), self.to_monomial(b), self.m))


def _mono_mul(A, B, m: int):
    """Monomial matrices ``(perm, entries)``: column j has ``entries[j]`` at row ``perm[j]``;
    entries are (valuation, unit exponent mod m)."""
    pa, ea = A
    pb, eb = B
    perm = tuple(pa[pb[k]] for k in range(len(pb)))
    ent = tuple(
        (ea[pb[k]][0] + eb[k][0], (ea[pb[k]][1] + eb[k][1]) % m) for k in range(len(pb))
    )
    return perm, ent


def _mono_inv(A, m: int):
    pa, ea = A
    n = len(pa)
    perm = [0] * n
    ent = [(0, 0)] * n
    for j in range(n):
        perm[pa[j]] = j
        ent[pa[j]] = (-ea[j][0], (-ea[j][1]) % m)
    return tuple(perm), tuple(ent)


_CACHE: dict[BasedRootDatum, TorusCover] = {}


def torus_cover(datum: BasedRootDatum) -> TorusCover:
    G = _CACHE.get(datum)
    if G is None:
        G = _CACHE[datum] = TorusCover(datum)
    return G
