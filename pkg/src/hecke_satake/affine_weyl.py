"""The extended affine Weyl group ``W = Lambda x| W_0``.

An element is a pair ``(nu, w)`` acting on the apartment by
``x -> nu + w(x)``.  Simple affine reflections are the reflections in the
walls of the antidominant base alcove ``{<alpha, x> < 0 (alpha simple),
<theta, x> > -1}`` (one ``theta`` per irreducible component), so the affine
letter of a component is ``t(-theta^vee) s_theta``.

>>> from hecke_satake.rootdata import preset
>>> W = AffineWeyl(preset("A1sc"))
>>> lam = W.translation((-1,))
>>> W.length(lam)
2
>>> W.reduced_word(lam).letters
(0, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from .rootdata import BasedRootDatum, Mat, PositiveRoot, Vec, _dot

__all__ = ["AffElt", "Letter", "AffReducedWord", "AffineWeyl", "LeviView", "affine_weyl"]


class AffElt(NamedTuple):
    nu: Vec
    w: Mat


@dataclass(frozen=True)
class Letter:
    """A simple affine reflection: the reflection in ``<root, x> = level``."""

    index: int
    root: PositiveRoot
    level: int          # 0 for finite simple reflections, -1 for affine ones
    simple: int | None  # index of the simple root, or None for affine letters
    elt: AffElt

    def to_json(self) -> dict:
        return {"index": self.index, "root": list(self.root.root), "level": self.level}


@dataclass(frozen=True)
class AffReducedWord:
    letters: tuple[int, ...]
    omega: AffElt


class AffineWeyl:
    """Arithmetic, length and Bruhat order in ``W`` for a given datum."""

    def __init__(self, datum: BasedRootDatum):
        self.datum = datum
        self.W0 = datum.weyl
        self.rank = datum.rank
        self.zero: Vec = tuple(0 for _ in range(datum.rank))
        self.identity = AffElt(self.zero, self.W0.identity)
        letters = []
        for i in range(datum.n_simple):
            rt = next(r for r in datum.positive_roots if r.coeffs == tuple(int(k == i) for k in range(datum.n_simple)))
            letters.append(Letter(i, rt, 0, i, AffElt(self.zero, self.W0.gens[i])))
        for theta in datum.highest_roots:
            elt = AffElt(tuple(-c for c in theta.coroot), self.W0.reflection_of_root(theta))
            letters.append(Letter(len(letters), theta, -1, None, elt))
        self.letters: tuple[Letter, ...] = tuple(letters)
        self._len: dict[AffElt, int] = {}
        self._leq: dict[tuple[AffElt, AffElt], bool] = {}
        self._word: dict[AffElt, AffReducedWord] = {}

    # -- arithmetic -----------------------------------------------------
    def mul(self, a: AffElt, b: AffElt) -> AffElt:
        wb = self.W0.act(a.w, b.nu)
        return AffElt(tuple(x + y for x, y in zip(a.nu, wb)), self.W0.mul(a.w, b.w))

    def inv(self, a: AffElt) -> AffElt:
        wi = self.W0.inv(a.w)
        return AffElt(tuple(-x for x in self.W0.act(wi, a.nu)), wi)

    def translation(self, nu: Sequence[int]) -> AffElt:
        return AffElt(tuple(nu), self.W0.identity)

    def finite(self, w: Mat) -> AffElt:
        return AffElt(self.zero, w)

    def product(self, elts: Iterable[AffElt]) -> AffElt:
        out = self.identity
        for e in elts:
            out = self.mul(out, e)
        return out

    def eval_word(self, letters: Iterable[int], omega: AffElt | None = None) -> AffElt:
        out = self.product(self.letters[s].elt for s in letters)
        return self.mul(out, omega) if omega is not None else out

    def act_point(self, a: AffElt, x: Sequence) -> tuple:
        r = self.rank
        return tuple(a.nu[i] + sum(a.w[i * r + k] * x[k] for k in range(r)) for i in range(r))

    # -- length ---------------------------------------------------------
    def length(self, a: AffElt) -> int:
        try:
            return self._len[a]
        except KeyError:
            pass
        mask = self.W0.positive_mask(a.w)
        total = 0
        for pos, rt in zip(mask, self.datum.positive_roots):
            c = _dot(rt.root, a.nu)
            total += abs(c) if pos else abs(c + 1)
        self._len[a] = total
        return total

    def left_descents(self, a: AffElt) -> list[int]:
        la = self.length(a)
        return [s.index for s in self.letters if self.length(self.mul(s.elt, a)) < la]

    def right_descents(self, a: AffElt) -> list[int]:
        la = self.length(a)
        return [s.index for s in self.letters if self.length(self.mul(a, s.elt)) < la]

    def reduced_word(self, a: AffElt) -> AffReducedWord:
        """Strip the smallest left descent repeatedly; ``a = letters * omega``."""
        if a in self._word:
            return self._word[a]
        word = []
        cur = a
        while True:
            lc = self.length(cur)
            if lc == 0:
                break
            for s in self.letters:
                nxt = self.mul(s.elt, cur)
                if self.length(nxt) < lc:
                    word.append(s.index)
                    cur = nxt
                    break
            else:  # pragma: no cover - impossible for a Coxeter length
                raise RuntimeError("no descent for positive-length element")
        out = AffReducedWord(tuple(word), cur)
        self._word[a] = out
        return out

    def omega_decompose(self, a: AffElt) -> tuple[AffElt, AffElt]:
        rw = self.reduced_word(a)
        return self.eval_word(rw.letters), rw.omega

    def omega_part(self, a: AffElt) -> AffElt:
        return self.reduced_word(a).omega

    def in_waff(self, a: AffElt) -> bool:
        return self.omega_part(a) == self.identity

    def all_reduced_words(self, a: AffElt) -> list[tuple[int, ...]]:
        """Every reduced word of the ``W^aff`` part (small elements only)."""
        la = self.length(a)
        if la == 0:
            return [()]
        out = []
        for s in self.letters:
            nxt = self.mul(s.elt, a)
            if self.length(nxt) < la:
                out.extend((s.index,) + w for w in self.all_reduced_words(nxt))
        return out

    # -- Bruhat order ---------------------------------------------------
    def bruhat_leq(self, x: AffElt, w: AffElt) -> bool:
        key = (x, w)
        hit = self._leq.get(key)
        if hit is not None:
            return hit
        lx, lw = self.length(x), self.length(w)
        if lx > lw:
            res = False
        elif lw == 0 or lx == lw:
            res = x == w
        else:
            s = next(s for s in self.letters if self.length(self.mul(s.elt, w)) < lw)
            sw = self.mul(s.elt, w)
            sx = self.mul(s.elt, x)
            res = self.bruhat_leq(sx, sw) if self.length(sx) < lx else self.bruhat_leq(x, sw)
        self._leq[key] = res
        return res

    def bruhat_leq_subword(self, x: AffElt, w: AffElt) -> bool:
        """Brute-force oracle: ``x`` is a subword product of a reduced word of ``w``."""
        u = self.omega_part(w)
        if self.omega_part(x) != u:
            return False
        target = self.mul(x, self.inv(u))
        for word in self.all_reduced_words(w):
            for mask in product((0, 1), repeat=len(word)):
                if self.eval_word(s for s, m in zip(word, mask) if m) == target:
                    return True
        return False

    def bruhat_leq_dominant(self, nu1: Sequence[int], nu2: Sequence[int]) -> bool:
        """Cone criterion for dominant translations: ``nu1 - nu2`` in sum N alpha^vee."""
        if not (self.datum.is_dominant(nu1) and self.datum.is_dominant(nu2)):
            raise ValueError("bruhat_leq_dominant expects dominant translations")
        return self.datum.preceq(nu1, nu2)

    def dominant_conjugate(self, nu: Sequence[int]) -> Vec:
        nu = tuple(nu)
        d = self.datum
        changed = True
        while changed:
            changed = False
            for i in range(d.n_simple):
                c = _dot(d.simple_roots[i], nu)
                if c > 0:
                    nu = tuple(x - c * y for x, y in zip(nu, d.simple_coroots[i]))
                    changed = True
        return nu

    def dominant_dcoset_rep(self, a: AffElt) -> Vec:
        """The dominant ``lambda_1`` with ``a`` in ``W_0 lambda_1 W_0``."""
        return self.dominant_conjugate(a.nu)

    # -- enumeration ----------------------------------------------------
    @cached_property
    def omega_small(self) -> tuple[AffElt, ...]:
        """Length-zero elements with translation part in the box ``[-1, 1]^rank``."""
        out = []
        for nu in product((-1, 0, 1), repeat=self.rank):
            for w in self.W0.elements:
                e = AffElt(nu, w)
                if self.length(e) == 0:
                    out.append(e)
        out.sort(key=lambda e: (e != self.identity, e.nu, self.W0.word(e.w)))
        return tuple(out)

    def elements_up_to(self, lmax: int, omegas: Iterable[AffElt] | None = None) -> list[AffElt]:
        """All ``w u`` with ``l(w) <= lmax`` for ``u`` in ``omegas`` (default: identity)."""
        layer = list(omegas) if omegas is not None else [self.identity]
        seen = set(layer)
        out = list(layer)
        for k in range(lmax):
            nxt = []
            for x in layer:
                for s in self.letters:
                    y = self.mul(s.elt, x)
                    if y not in seen and self.length(y) == k + 1:
                        seen.add(y)
                        nxt.append(y)
            out.extend(nxt)
            layer = nxt
        return out

    def dominant_translations(self, lmax: int, box: int = 12) -> list[Vec]:
        """Dominant nu with ``l <= lmax``, one representative per central shift class
        is not attempted: every dominant nu in the box ``[-box, box]^rank`` is listed."""
        d = self.datum
        out = []
        for nu in product(range(-box, box + 1), repeat=self.rank):
            if d.is_dominant(nu) and d.ell_dominant(nu) <= lmax:
                out.append(nu)
        return out

    def levi_view(self, J: Iterable[int]) -> "LeviView":
        return LeviView(self, tuple(sorted(set(J))))


class LeviView:
    """Levi quantities ``l_J``, ``<=_J``, ``w_J`` computed on the sub-datum."""

    def __init__(self, parent: AffineWeyl, J: tuple[int, ...]):
        if any(j < 0 or j >= parent.datum.n_simple for j in J):
            raise ValueError(f"J={J} is not a subset of the simple roots")
        self.parent = parent
        self.J = J
        self.datum = parent.datum.levi_subdatum(J)
        self.W = affine_weyl(self.datum)
        self.w_J: Mat = self.datum.weyl.longest

    def length(self, a: AffElt) -> int:
        return self.W.length(a)

    def leq(self, x: AffElt, w: AffElt) -> bool:
        return self.W.bruhat_leq(x, w)

    def contains(self, a: AffElt) -> bool:
        return a.w in self.datum.weyl.index

    def min_coset_rep(self, w: Mat) -> Mat:
        """The minimal-length element of ``w W_{J,0}``."""
        W0 = self.parent.W0
        return min((W0.mul(w, u) for u in self.datum.weyl.elements), key=lambda m: (W0.length(m), W0.word(m)))

    def is_min_coset_rep(self, d: Mat) -> bool:
        """``d(J)`` consists of positive roots."""
        W0 = self.parent.W0
        sign = self.parent.datum.root_sign
        return all(sign[W0.act_root(d, self.parent.datum.simple_roots[j])] > 0 for j in self.J)

    def length_split_holds(self, x: AffElt, w_Jp: Mat) -> bool:
        """``l(x) = l(x w_{J'} w_J) + l(w_{J'} w_J)`` in the ambient group."""
        P = self.parent
        m = P.W0.mul(w_Jp, self.w_J)
        f = P.finite(m)
        return P.length(x) == P.length(P.mul(x, f)) + P.length(f)


_CACHE: dict[BasedRootDatum, AffineWeyl] = {}


def affine_weyl(datum: BasedRootDatum) -> AffineWeyl:
    """Shared ``AffineWeyl`` per datum (memo tables are reused)."""
    W = _CACHE.get(datum)
    if W is None:
        W = _CACHE[datum] = AffineWeyl(datum)
    return W
