import random

import pytest
from hypothesis import given, strategies as st

from intervalcat import linalg
from intervalcat.algebra import gamma_zero_category, incidence_category
from intervalcat.errors import BaseError, FunctorialityError, IntervalError, ThicknessError
from intervalcat.gamma import IdealMap, build_gamma, example_one, example_two, interval_ideal_map
from intervalcat.poset import antichain, chain, product, small_posets
from intervalcat.rep import (
    Module,
    direct_sum,
    end_category,
    ext_dim,
    ext_dims,
    free_module,
    hom_space,
    injective_module,
    interval_module,
    projective_module,
    projective_resolution,
    pushforward,
    random_module,
    restriction,
    tilting_module,
    verify_tilting,
    zero_module,
)

from conftest import ideal_maps, posets
from oracles import (
    adjunction_holds,
    interval_hom_mismatches,
    projective_hom_mismatches,
    pushforward_exact,
    restricted_pushforward_mismatches,
)


def test_interval_modules_on_two_chain():
    M = interval_module(chain(2), 0, 1)
    assert M.dims == (1, 1) and M.maps[(0, 1)].tolist() == [[1]]
    assert interval_module(chain(2), 0, 0).dims == (1, 0)
    with pytest.raises(IntervalError):
        interval_module(chain(2), 1, 0)


def test_full_interval_on_square():
    D = product(chain(2), chain(2))
    M = interval_module(D, 0, 3)
    assert M.dims == (1, 1, 1, 1)
    assert all(m.tolist() == [[1]] for m in M.maps.values())
    M.check_functorial()


def test_non_commuting_square_rejected():
    D = product(chain(2), chain(2))
    maps = {c: [[1]] for c in D.covers}
    maps[D.covers[0]] = [[2]]
    with pytest.raises(FunctorialityError):
        Module(D, [1, 1, 1, 1], maps)


def test_projectives_and_injectives_on_two_chain():
    A2 = chain(2)
    assert projective_module(A2, 0).dims == (1, 1)
    assert projective_module(A2, 1).dims == (0, 1)
    assert injective_module(A2, 1).dims == (1, 1)
    assert injective_module(A2, 0).dims == (1, 0)


@given(posets(max_size=6))
def test_projective_dimensions_count_lower_elements(P):
    for z in range(P.size):
        total = sum(projective_module(P, y).dims[z] for y in range(P.size))
        assert total == sum(1 for y in range(P.size) if P.leq(y, z))


def test_interval_hom_examples():
    A3 = chain(3)
    # M_{1,2} and M_{2,3} in 1-based naming
    m12, m23 = interval_module(A3, 0, 1), interval_module(A3, 1, 2)
    assert hom_space(m12, m23).dimension == 0
    assert hom_space(m23, m12).dimension == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_interval_hom_formula(n):
    for X in small_posets(n):
        assert interval_hom_mismatches(X) == []


def test_projective_homs_on_three_chain():
    assert projective_hom_mismatches(chain(3)) == []


def test_identity_endomorphism():
    P = projective_module(chain(3), 1)
    H = hom_space(P, P)
    assert H.dimension == 1
    assert H.basis[0].is_natural()
    assert all(linalg.equal(c, linalg.identity(P.dims[w])) for w, c in enumerate(H.basis[0].components))


@given(posets(1, 4), st.integers(0, 2**16))
def test_hom_basis_natural_and_independent(P, seed):
    rng = random.Random(seed)
    M, N = random_module(P, rng), random_module(P, rng)
    H = hom_space(M, N)
    assert all(f.is_natural() for f in H.basis)
    flat = [[e for c in f.components for e in c.flatten()] for f in H.basis]
    if flat and flat[0]:
        assert linalg.rank(linalg.matrix(flat)) == H.dimension


def test_resolution_of_projective():
    res = projective_resolution(projective_module(chain(3), 1))
    assert res.length == 0 and res.check()


def test_resolution_of_simple_on_two_chain():
    res = projective_resolution(interval_module(chain(2), 0, 0))
    assert res.tops == [[0], [1]]
    assert res.length == 1 and res.check()


def test_ext_of_simples_on_two_chain():
    S1, S2 = interval_module(chain(2), 0, 0), interval_module(chain(2), 1, 1)
    assert ext_dim(S1, S2, 1) == 1
    assert ext_dim(S2, S1, 1) == 0
    assert ext_dim(S1, S1, 0) == 1


@given(posets(1, 4), st.integers(0, 2**16))
def test_random_resolutions_are_exact(P, seed):
    M = random_module(P, random.Random(seed))
    res = projective_resolution(M)
    assert res.check()
    assert res.length <= P.size
    for w in range(P.size):
        euler = sum((-1) ** k * F.dims[w] for k, F in enumerate(res.modules))
        assert euler == M.dims[w]


@given(posets(1, 4), st.integers(0, 2**16))
def test_ext_zero_is_hom(P, seed):
    rng = random.Random(seed)
    M, N = random_module(P, rng), random_module(P, rng)
    assert ext_dims(projective_resolution(M), N)[0] == hom_space(M, N).dimension


@given(posets(1, 4), st.integers(0, 2**16))
def test_projectives_have_no_higher_ext(P, seed):
    rng = random.Random(seed)
    N = random_module(P, rng)
    y = rng.randrange(P.size)
    assert all(ext_dim(projective_module(P, y), N, i) == 0 for i in range(1, P.size + 1))


def test_free_module_is_sum_of_projectives():
    P = product(chain(2), antichain(2))
    tops = [0, 3, 0, 2]
    assert free_module(P, tops).same_as(direct_sum([projective_module(P, t) for t in tops]))


def test_direct_sum_rejects_mixed_bases():
    with pytest.raises(BaseError):
        direct_sum([zero_module(chain(2)), zero_module(chain(3))])


def test_pushforward_of_injective():
    g = build_gamma(example_one())
    for y in range(g.Y.size):
        Fy = g.fiber_poset(y)
        for k, x in enumerate(g.fiber(y)):
            pushed = pushforward(g, y, injective_module(Fy, k))
            assert pushed.same_as(injective_module(g.gamma, g.index((x, y))))


def test_pushforward_of_zero_and_base_check():
    g = build_gamma(example_one())
    assert pushforward(g, 2, zero_module(g.fiber_poset(2))).is_zero()
    with pytest.raises(BaseError):
        pushforward(g, 2, zero_module(chain(5)))


def test_restriction_basics():
    g = build_gamma(example_one())
    for y in range(g.Y.size):
        Fy = g.fiber_poset(y)
        phi = random_module(Fy, random.Random(y)) if Fy.size else zero_module(Fy)
        assert restriction(g, y, pushforward(g, y, phi)).same_as(phi)
        assert restriction(g, y, zero_module(g.gamma)).is_zero()
    with pytest.raises(BaseError):
        restriction(g, 0, zero_module(chain(2)))


def test_restriction_of_gamma_projective():
    g = build_gamma(example_one())
    for s, (x, y0) in enumerate(g.pairs):
        P = projective_module(g.gamma, s)
        for y in range(g.Y.size):
            R = restriction(g, y, P)
            fib = g.fiber(y)
            expected = [1 if g.X.leq(x, x2) and g.Y.leq(y0, y) else 0 for x2 in fib]
            assert list(R.dims) == expected


def test_restricted_pushforward_on_example_one():
    assert restricted_pushforward_mismatches(build_gamma(example_one())) == []


@given(ideal_maps(3, 3), st.integers(0, 2**16))
def test_adjunction_dimensions(F, seed):
    g = build_gamma(F)
    if len(g) == 0 or len(g) > 10:
        return
    y = random.Random(seed).choice([y for y in range(F.Y.size) if F(y)])
    assert adjunction_holds(g, y, seed)


@given(ideal_maps(3, 3), st.integers(0, 2**16))
def test_pushforward_is_exact(F, seed):
    g = build_gamma(F)
    for y in range(F.Y.size):
        if F(y):
            assert pushforward_exact(g, y, seed + y)


def test_tilting_module_shapes():
    assert len(tilting_module(build_gamma(interval_ideal_map(chain(2)))).summands) == 3
    assert len(tilting_module(build_gamma(example_one())).summands) == 9
    empty = IdealMap(chain(1), chain(2), (frozenset(),) * 2)
    assert tilting_module(build_gamma(empty)).module.is_zero()


def test_end_of_projectives_is_opposite_incidence():
    A3 = chain(3)
    E = end_category([projective_module(A3, y) for y in range(3)])
    assert E.op().hom == incidence_category(A3).hom
    assert E.zero_composites == set()


def test_end_of_single_summand():
    E = end_category([projective_module(chain(2), 0)])
    assert [list(r) for r in E.hom] == [[1]]


def test_end_category_thickness_guard():
    P = projective_module(chain(2), 0)
    with pytest.raises(ThicknessError):
        end_category([direct_sum([P, P])])


def test_tilting_end_matches_zero_category_on_two_chain():
    g = build_gamma(interval_ideal_map(chain(2)))
    E = end_category(tilting_module(g).summands)
    K = gamma_zero_category(g)
    assert [list(r) for r in zip(*E.hom)] == [list(r) for r in K.hom]


@pytest.mark.parametrize("make", [lambda: interval_ideal_map(chain(2)), example_one, example_two],
                         ids=["interval-A2", "example-one", "example-two"])
def test_verify_tilting_examples(make):
    rep = verify_tilting(build_gamma(make()))
    assert rep.passed, rep.lines()
    assert "generation condition" in rep.convention


@given(ideal_maps(3, 3))
def test_verify_tilting_random(F):
    assert verify_tilting(build_gamma(F)).passed
