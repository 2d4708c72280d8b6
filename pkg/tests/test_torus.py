import random

import pytest
from hypothesis import given, settings, strategies as st

from hecke_satake.rootdata import preset
from hecke_satake.torus import ProPElement, TorusCharacter, torus_cover

NAMES = ["A1sc", "A1ad", "GL2", "GL3", "A2sc", "B2", "G2"]
QS = [2, 3, 4, 5, 7, 9]


def cover(name, q=3):
    return torus_cover(preset(name, q))


def random_lift(G, rng, lmax=3):
    pool = G.W.elements_up_to(lmax, G.W.omega_small[:3])
    return G.lift(rng.choice(pool), [rng.randrange(G.m) for _ in range(G.rank)])


def test_square_of_finite_lift_gl2():
    for q, half in [(3, 1), (5, 2), (7, 3), (4, 0), (2, 0)]:
        G = cover("GL2", q)
        s = G.lift_simple(0)
        assert G.mul(s, s) == G.torus((half, half))
        assert G.mul(s, s) == G.monomial_oracle_mul(s, s)


def test_torus_product_is_componentwise():
    G = cover("GL3", 5)
    assert G.mul(G.torus((1, 2, 3)), G.torus((3, 3, 3))) == G.torus((0, 1, 2))


def test_braid_relation_gl3_a2():
    for name in ["GL3", "A2sc"]:
        for q in QS:
            G = cover(name, q)
            s1, s2 = G.lift_simple(0), G.lift_simple(1)
            assert G.product([s1, s2, s1]) == G.product([s2, s1, s2])


def test_lift_simple_conventions():
    G = cover("SL2", 5)
    assert G.lift_simple(0) == ProPElement((0,), (0,), G.W0.gens[0])
    s0 = G.lift_simple(1)
    assert s0.nu == (-1,) and s0.t == (0,) and s0.w == G.W0.gens[0]


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("q", [2, 3, 5])
def test_squares_of_simple_lifts_lie_in_torus(name, q):
    G = cover(name, q)
    for s in range(len(G.W.letters)):
        sq = G.mul(G.lift_simple(s), G.lift_simple(s))
        assert sq.nu == G.W.zero and sq.w == G.W0.identity


def test_c_of_lift_sl2_q3():
    G = cover("SL2", 3)
    assert G.c_of_lift(G.lift_simple(0)) == {(0,): 1, (1,): 1}
    assert set(G.coroot_image((1,))) == {(0,), (1,)}


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("q", [3, 4, 5])
def test_c_of_lift_properties(name, q):
    G = cover(name, q)
    for s in range(len(G.W.letters)):
        for t in G.torus_elements():
            st_ = G.mul(G.torus(t), G.lift_simple(s))
            c = G.c_of_lift(st_)
            assert sum(c.values()) == q - 1
            assert G.ga_act(st_.w, c) == c


@pytest.mark.parametrize("name", ["A1sc", "GL2", "A2sc", "B2"])
@pytest.mark.parametrize("q", [3, 4, 5])
def test_character_on_c(name, q):
    G = cover(name, q)
    F = G.character((0,) * G.rank).field
    for psi in G.characters():
        for s in range(len(G.W.letters)):
            cr = G.W.letters[s].root.coroot
            val = psi.eval(G.c_of_lift(G.lift_simple(s)))
            assert val == (F.neg(F.one) if psi.is_trivial_on(cr) else 0)
    assert G.character((1,) * G.rank).eval({G.t0: 1}) == 1


def test_delta_prime_psi_examples():
    sl2 = cover("SL2", 5)
    assert sl2.delta_prime_psi(TorusCharacter((0,), 5)) == frozenset({0})
    assert sl2.delta_prime_psi(TorusCharacter((1,), 5)) == frozenset()
    gl2 = cover("GL2", 3)
    assert gl2.delta_prime_psi(gl2.character((1, 1))) == frozenset({0})
    a2 = cover("A2sc", 4)
    assert a2.delta_prime_psi(a2.character((0, 0))) == frozenset({0, 1})


def test_json_round_trip():
    G = cover("B2", 5)
    a = G.lift(G.W.elements_up_to(3)[-1], (1, 3))
    assert G.from_json(G.to_json(a)) == a
    with pytest.raises(ValueError):
        G.from_json({"nu": [1]})


@pytest.mark.parametrize("name", ["GL2", "GL3"])
@pytest.mark.parametrize("q", [2, 3, 4])
def test_oracle_random_products(name, q):
    G = cover(name, q)
    rng = random.Random(7)
    for _ in range(200):
        a, b = random_lift(G, rng, 3), random_lift(G, rng, 2)
        assert G.mul(a, b) == G.monomial_oracle_mul(a, b)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(NAMES), st.sampled_from([3, 4, 5]), st.integers(0, 10**6))
def test_group_laws(name, q, seed):
    G = cover(name, q)
    rng = random.Random(seed)
    a, b, c = (random_lift(G, rng) for _ in range(3))
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inv(a)) == G.identity == G.mul(G.inv(a), a)
    # projection to W is a homomorphism
    assert G.mul(a, b).image == G.W.mul(a.image, b.image)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(NAMES), st.sampled_from([3, 5, 7]), st.integers(0, 10**6))
def test_conjugation_on_torus_factors_through_W(name, q, seed):
    G = cover(name, q)
    rng = random.Random(seed)
    a = random_lift(G, rng)
    t = tuple(rng.randrange(G.m) for _ in range(G.rank))
    conj = G.mul(G.mul(a, G.torus(t)), G.inv(a))
    assert conj == G.torus(G.tact(a.w, t))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(QS), st.lists(st.integers(-20, 20), min_size=2, max_size=2),
       st.lists(st.integers(0, 50), min_size=2, max_size=2), st.lists(st.integers(0, 50), min_size=2, max_size=2))
def test_character_is_multiplicative(q, a, t, u):
    psi = TorusCharacter(tuple(a), q)
    F = psi.field
    tu = tuple((x + y) % (q - 1) for x, y in zip(t, u))
    assert psi(tu) == F.mul(psi(t), psi(u))
    assert F.mul(psi(t), psi.inverse()(t)) == 1
