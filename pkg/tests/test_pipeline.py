import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phtransform import (
    BoundedMonotoneMap,
    Chain,
    FieldConfig,
    InputError,
    IntegralFunction,
    IntervalPoset,
    MonotoneIntegralFunction,
    birth_death,
    build_complex,
    cell_filtration,
    cycle_space_dim,
    face_map,
    induced_interval_map,
    interval_poset,
    is_charge_preserving,
    is_monotone_preserving,
    mobius_invert,
    persistent_homology,
    push_charges,
    total_charge,
)
from phtransform.filtration import Filtration

from conftest import make_book, make_v

TOP_V = 3  # index of the top element in the chain of a V two-block-plus-one cell


def chain(n):
    return Chain(tuple(range(n)))


def random_monotone(rng, m, cap=20):
    """Monotone function on Int of an m-chain built by nonnegative increments."""
    f = {}
    for a, b in IntervalPoset(chain(m)).intervals:
        below = [f[I] for I in ((a - 1, b), (a, b - 1)) if I in f]
        f[a, b] = min(cap, max(below, default=0) + rng.randint(0, 3))
    return MonotoneIntegralFunction(IntervalPoset(chain(m)), f)


def closed_form_inverse(f, m):
    """Inclusion-exclusion on the grid of interval endpoints; independent of
    the down-set recursion used by mobius_invert."""
    def F(x, y):
        if x < 0 or y < 0:
            return 0
        return f((min(x, y), y))
    return {
        (a, b): F(a, b) - F(a - 1, b) - F(a, b - 1) + F(a - 1, b - 1)
        for a, b in IntervalPoset(chain(m)).intervals
    }


# --- brute-force GF(2) oracle for birth-death ranks -------------------------

def _boundary2(simplex):
    return frozenset(simplex[:i] + simplex[i + 1:] for i in range(len(simplex)) if len(simplex) > 1)


def _sum2(chains):
    out = set()
    for c in chains:
        out ^= set(c)
    return frozenset(out)


def _all_sums(simplices):
    return {_sum2(s) for k in range(len(simplices) + 1) for s in combinations(simplices, k)}


def bd_bruteforce(F, d):
    m = len(F.poset)
    out = {}
    for a, b in IntervalPoset(F.poset).intervals:
        dsim = [s for s in F.stages[a] if len(s) == d + 1]
        cycles = {c for c in _all_sums([frozenset([s]) for s in dsim])
                  if d == 0 or not _sum2([_boundary2(s) for s in c])}
        if b == m - 1:
            out[a, b] = len(cycles).bit_length() - 1
            continue
        higher = [s for s in F.stages[b] if len(s) == d + 2]
        bounds = _all_sums([_boundary2(s) for s in higher])
        out[a, b] = len(cycles & bounds).bit_length() - 1
    return out


# ---------------------------------------------------------------------------

def test_interval_poset_sizes():
    for m in range(1, 9):
        P = interval_poset(chain(m))
        assert len(P) == m * (m + 1) // 2
        assert P.bottom == (0, 0) and P.top == (m - 1, m - 1)
    with pytest.raises(InputError):
        Chain(())


def test_interval_order_is_linear_extension():
    P = interval_poset(chain(5))
    pos = {I: k for k, I in enumerate(P.intervals)}
    for I, J in P.covers():
        assert pos[I] < pos[J] and IntervalPoset.leq(I, J)


def test_induced_interval_map(v_cells):
    a = v_cells.cells[v_cells.sign_index["+++"]]
    b = v_cells.cells[v_cells.sign_index["0++"]]
    bar = induced_interval_map(face_map(b, a))
    assert bar[0, 0] == bar[0, 1] == bar[1, 1] == (0, 0)
    assert bar[0, 3] == bar[1, 3] == (0, 2)
    assert bar[2, 2] == (1, 1)
    ident = induced_interval_map(BoundedMonotoneMap.identity(chain(4)))
    assert all(I == J for I, J in ident.items())


def test_cycle_space_dim():
    V = make_v().complex
    assert cycle_space_dim(V, 0) == 3
    assert cycle_space_dim(V, 1) == 0
    hollow = build_complex([[0, 1], [1, 2], [0, 2]])
    assert cycle_space_dim(hollow, 1) == 1
    assert cycle_space_dim(hollow, 1, FieldConfig(3)) == 1
    assert cycle_space_dim(hollow, 2) == 0


def test_field_must_be_prime():
    with pytest.raises(InputError):
        FieldConfig(4)


def test_birth_death_v(V, v_cells):
    f = birth_death(cell_filtration(V, v_cells.cells[v_cells.sign_index["+++"]]), 0)
    assert [f((a, TOP_V)) for a in range(3)] == [1, 2, 3]
    assert f((0, 0)) == 0
    assert f((0, 2)) == 0  # a lone vertex is never a 0-boundary over Z/2
    assert f((1, 1)) == 1


@pytest.mark.parametrize("make", [make_v, make_book])
@pytest.mark.parametrize("d", [0, 1])
def test_birth_death_matches_bruteforce(make, d):
    from phtransform.arrangement import PairSet, enumerate_cells
    gc = make()
    for c in enumerate_cells(gc, PairSet.of(gc)).cells:
        F = cell_filtration(gc, c)
        f = birth_death(F, d)
        assert f.values == bd_bruteforce(F, d)
        assert f.is_monotone()


def test_monotone_preserving(V, v_cells):
    a = v_cells.cells[v_cells.sign_index["+++"]]
    b = v_cells.cells[v_cells.sign_index["0++"]]
    alpha = face_map(b, a)
    f = birth_death(cell_filtration(V, a), 0)
    g = birth_death(cell_filtration(V, b), 0)
    assert is_monotone_preserving(f, g, alpha)
    assert is_monotone_preserving(f, f, BoundedMonotoneMap.identity(alpha.source))
    bumped = dict(g.values)
    bumped[0, 1] += 1
    assert not is_monotone_preserving(f, MonotoneIntegralFunction(g.domain, bumped), alpha)
    with pytest.raises(InputError):
        is_monotone_preserving(g, f, alpha)


def test_mobius_examples(V, v_cells):
    zero = MonotoneIntegralFunction(IntervalPoset(chain(4)), {I: 0 for I in IntervalPoset(chain(4)).intervals})
    assert mobius_invert(zero).charges == {}
    top = persistent_homology(cell_filtration(V, v_cells.cells[v_cells.sign_index["+++"]]), 0)
    assert top.charges == {(1, 1): 1, (2, 2): 1, (0, 3): 1}
    edge = persistent_homology(cell_filtration(V, v_cells.cells[v_cells.sign_index["0++"]]), 0)
    assert edge.charges == {(0, 0): 1, (1, 1): 1, (0, 2): 1}


@settings(max_examples=200)
@given(st.integers(1, 8), st.integers(0, 2**32))
def test_mobius_round_trip(m, seed):
    f = random_monotone(random.Random(seed), m)
    sigma = mobius_invert(f)
    for J in f.domain.intervals:
        assert sum(sigma(I) for I in f.domain.intervals if IntervalPoset.leq(I, J)) == f(J)
    assert {I: sigma(I) for I in f.domain.intervals} == closed_form_inverse(f, m)


def test_mobius_uniqueness():
    # two charge assignments with the same down-set sums coincide: the sum map is unitriangular
    P = IntervalPoset(chain(4))
    for trial in range(50):
        rng = random.Random(trial)
        sigma = {I: rng.randint(-3, 3) for I in P.intervals}
        f = {J: sum(sigma[I] for I in P.intervals if IntervalPoset.leq(I, J)) for J in P.intervals}
        assert mobius_invert(MonotoneIntegralFunction(P, f)).charges == {I: c for I, c in sigma.items() if c}


# the non-colimit fixture: sigma on {1<2<3<4} with charges at [1,3] and [2,4]
P4 = chain(4)
Z3 = Chain(("a", "b", "c"))
SIGMA = IntegralFunction(IntervalPoset(P4), {(0, 2): 1, (1, 3): 1})
TAU = IntegralFunction(IntervalPoset(P4), {(0, 3): 1, (1, 2): 1})
GLUE_LOW = BoundedMonotoneMap(P4, Z3, (0, 0, 1, 2))   # 1,2 -> a; 3 -> b; 4 -> c
GLUE_HIGH = BoundedMonotoneMap(P4, Z3, (0, 1, 2, 2))  # 1 -> a; 2 -> b; 3,4 -> c
MU = {(0, 1): 1, (0, 2): 1}
NU = {(0, 2): 1, (1, 2): 1}


def test_push_charges_gluings():
    assert push_charges(SIGMA, GLUE_LOW).charges == MU
    assert push_charges(SIGMA, GLUE_HIGH).charges == NU
    assert push_charges(TAU, GLUE_LOW).charges == MU
    assert push_charges(TAU, GLUE_HIGH).charges == NU
    assert push_charges(SIGMA, BoundedMonotoneMap.identity(P4)) == SIGMA


def bounded_monotone_maps(n, m):
    for a in product(range(m), repeat=n):
        if a[0] == 0 and a[-1] == m - 1 and all(x <= y for x, y in zip(a, a[1:])):
            yield a


def test_gluings_non_colimit():
    mu = IntegralFunction(IntervalPoset(Z3), MU)
    nu = IntegralFunction(IntervalPoset(Z3), NU)
    for a in bounded_monotone_maps(3, 3):
        beta = BoundedMonotoneMap(Z3, Z3, a)
        assert not is_charge_preserving(mu, nu, beta)
        assert not is_charge_preserving(nu, mu, beta)


def test_charge_preserving_v(V, v_cells):
    a = v_cells.cells[v_cells.sign_index["+++"]]
    b = v_cells.cells[v_cells.sign_index["0++"]]
    alpha = face_map(b, a)
    s = persistent_homology(cell_filtration(V, a), 0)
    t = persistent_homology(cell_filtration(V, b), 0)
    assert is_charge_preserving(s, t, alpha)
    bar = induced_interval_map(alpha)
    assert bar[1, 1] == (0, 0) and bar[2, 2] == (1, 1) and bar[0, 3] == (0, 2)
    assert is_charge_preserving(s, s, BoundedMonotoneMap.identity(alpha.source))


def test_ph_d1_v_is_zero(V, v_cells):
    for c in v_cells.cells:
        assert persistent_homology(cell_filtration(V, c), 1).charges == {}


def test_hollow_triangle_d1():
    K = build_complex([[0, 1], [1, 2], [0, 2]])
    F = Filtration(Chain(((0,), (1,), (2,), "TOP")), (
        frozenset({(0,)}),
        frozenset({(0,), (1,), (0, 1)}),
        K.simplices,
        K.simplices,
    ), K)
    sigma = persistent_homology(F, 1)
    assert total_charge(sigma) == 1
    assert sigma.charges == {(2, 3): 1}


def test_total_charge():
    assert total_charge(IntegralFunction(IntervalPoset(chain(2)), {})) == 0


@pytest.mark.parametrize("make", [make_v, make_book])
def test_ph_properties(make):
    from phtransform.arrangement import PairSet, enumerate_cells
    gc = make()
    for c in enumerate_cells(gc, PairSet.of(gc)).cells:
        F = cell_filtration(gc, c)
        for d in (0, 1):
            s2 = persistent_homology(F, d, FieldConfig(2))
            s3 = persistent_homology(F, d, FieldConfig(3))
            assert s2 == s3
            assert all(x > 0 for x in s2.charges.values())
            assert total_charge(s2) == cycle_space_dim(gc.complex, d)
