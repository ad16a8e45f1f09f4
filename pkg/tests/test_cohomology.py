import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from delpezzo import linalg
from delpezzo.blowup import bivector_conditions, vanishing_bivector_subspace, vector_conditions
from delpezzo.calculus import schouten_pi_v
from delpezzo.cohomology import (
    RANK_FORMULA,
    SPECTRAL_LOOKUP,
    assemble_dpi_matrix,
    bivector_coefficients,
    canonical_pi,
    exact_rank,
    pi_field,
    poisson_cohomology,
    resolve_pi,
    section_dimensions,
    section_spaces,
    sheaf_cohomology_table,
    theorem_table,
)
from delpezzo.errors import DimensionMismatch, NotGeneric, NotVanishing
from delpezzo.surface import SurfaceSpec
from oracles import (
    naive_rank,
    oracle_dpi_for,
    rand_q,
    rand_vec,
    random_generic_points,
    sympy_nullspace,
)

P2 = SurfaceSpec.p2()
P1P1 = SurfaceSpec.p1xp1()


def unit(n, k, c=1):
    return [c if i == k else 0 for i in range(n)]


@pytest.mark.parametrize(
    "surface, k, rank, dims",
    [
        (P2, 0, 3, (1, 5, 7)),
        (P2, 1, 5, (1, 3, 5)),
        (P2, 4, 6, (1, 2, 4)),
        (P1P1, 0, 3, (1, 3, 6)),
        (P1P1, 1, 4, (1, 2, 5)),
    ],
)
def test_worked_examples(surface, k, rank, dims):
    n = 10 if surface is P2 else 9
    prof = poisson_cohomology(surface, unit(n, k))
    assert prof.rank == rank and prof.dims == dims and prof.method == RANK_FORMULA


def test_matrix_examples():
    m = assemble_dpi_matrix(P2, unit(10, 0))
    assert m.shape == (10, 8)
    assert all(v == 0 for v in m.column(0))
    assert m.column(1) == unit(10, 0)
    a = [Fraction(k + 1) for k in range(9)]
    assert assemble_dpi_matrix(P1P1, a).entries[1][2] == 2 * a[0]
    zero = assemble_dpi_matrix(P1P1, [0] * 9)
    assert exact_rank(zero) == 0 and zero.shape == (9, 6)


def test_shapes_for_blowups():
    expected = {1: (9, 6), 2: (8, 4), 3: (7, 2), 4: (6, 0)}
    for r, shape in expected.items():
        s = SurfaceSpec.from_name(f"B{r}")
        assert assemble_dpi_matrix(s, canonical_pi(s)).shape == shape


def test_blowup_profiles():
    b4 = SurfaceSpec.from_name("B4")
    prof = poisson_cohomology(b4, [1, 2, 3, 4, 5, 6])
    assert prof.dims == (1, 0, 6) and prof.rank == 0
    b7 = SurfaceSpec.from_name("B7")
    prof = poisson_cohomology(b7, [1, -1, 2])
    assert prof.dims == (1, 0, 9) and prof.method == SPECTRAL_LOOKUP and prof.rank is None
    assert "rank" not in prof.to_dict()


def test_resolve_pi_accepts_ambient_or_subspace_coordinates():
    b2 = SurfaceSpec.from_name("B2")
    sub = vanishing_bivector_subspace(b2.config)
    coords = [1, 0, 2, 0, 0, 0, 0, -1]
    amb = resolve_pi(b2, coords)
    assert list(amb) == sub.embed(coords)
    assert resolve_pi(b2, amb) == amb


def test_resolve_pi_errors():
    b2 = SurfaceSpec.from_name("B2")
    with pytest.raises(NotVanishing) as exc:
        resolve_pi(b2, unit(10, 0))
    assert "p1" in str(exc.value) and "p2" in str(exc.value)
    with pytest.raises(DimensionMismatch):
        resolve_pi(b2, [1, 2, 3])
    with pytest.raises(DimensionMismatch):
        resolve_pi(P2, [1] * 9)
    with pytest.raises(NotGeneric):
        SurfaceSpec.blowup([(1, 0, 0), (1, 1, 1), (1, 3, 3)])
    with pytest.raises(DimensionMismatch):
        SurfaceSpec.from_name("B3", points=[(1, 0, 0)])


def test_sheaf_tables():
    t = sheaf_cohomology_table(P2)
    assert t.h == ((1, 8, 10), (0, 0, 0), (0, 0, 0))
    assert sheaf_cohomology_table(P1P1).h[0] == (1, 6, 9)
    b6 = sheaf_cohomology_table(SurfaceSpec.from_name("B6"))
    assert b6.h[0] == (1, 0, 4) and b6[1, 1] == 4
    assert sum(map(sum, b6.h[1:])) == 4
    for r in range(1, 9):
        t = sheaf_cohomology_table(SurfaceSpec.from_name(f"B{r}"))
        assert t[1, 1] == (2 * r - 8 if r >= 5 else 0)
        assert t.h[0] == (1, max(8 - 2 * r, 0), 10 - r)


def test_theorem_table_rows():
    rows = {p.surface.name: p for p, _ in theorem_table()}
    assert rows["P2"].dims == (1, 5, 7)
    assert rows["P1xP1"].dims == (1, 3, 6)
    for r in range(4, 9):
        assert rows[f"B{r}"].dims == (1, 0, r + 2)


def test_columns_are_bracket_coordinates():
    rng = random.Random(3)
    for surface in (P2, P1P1, SurfaceSpec.from_name("B2")):
        spaces = section_spaces(surface)
        pi = canonical_pi(surface) if surface.r else rand_vec(rng, len(spaces.bivectors))
        m = assemble_dpi_matrix(surface, pi)
        field = pi_field(surface, pi)
        for j, v in enumerate(spaces.vectors):
            image = bivector_coefficients(surface.base, schouten_pi_v(field, v))
            recombined = [sum(m.entries[i][j] * spaces.bivector_coeffs[i][k]
                              for i in range(m.shape[0])) for k in range(len(image))]
            assert recombined == image


@pytest.mark.parametrize("surface, kind", [(P2, "P2"), (P1P1, "P1xP1")])
def test_matches_oracle_on_random_pi(surface, kind):
    rng = random.Random(hash(kind) % 1000)
    n = 10 if kind == "P2" else 9
    for _ in range(15):
        pi = rand_vec(rng, n)
        m = assemble_dpi_matrix(surface, pi)
        assert [list(r) for r in m.entries] == oracle_dpi_for(kind, pi)


def test_matches_oracle_on_random_blowups():
    rng = random.Random(9)
    for r in (1, 2, 3):
        for _ in range(3):
            s = SurfaceSpec.blowup(random_generic_points(rng, r))
            spaces = section_spaces(s)
            coords = rand_vec(rng, len(spaces.bivectors))
            pi = resolve_pi(s, coords)
            m = assemble_dpi_matrix(s, coords)
            expected = oracle_dpi_for("P2", pi, spaces.vector_coeffs, spaces.bivector_coeffs)
            assert [list(r) for r in m.entries] == expected


def test_rank_independent_of_subspace_basis():
    rng = random.Random(13)
    for r in (1, 2, 3):
        s = SurfaceSpec.blowup(random_generic_points(rng, r))
        vb = sympy_nullspace(vector_conditions(s.config), 8)
        bb = sympy_nullspace(bivector_conditions(s.config), 10)
        for _ in range(3):
            coords = rand_vec(rng, 10 - r)
            pi = resolve_pi(s, coords)
            other = oracle_dpi_for("P2", pi, vb, bb)
            assert naive_rank(other) == assemble_dpi_matrix(s, coords).rank()


def _random_invertible(rng, n):
    while True:
        m = [[rand_q(rng, 4, 3) for _ in range(n)] for _ in range(n)]
        if naive_rank(m) == n:
            return m


def test_rank_invariant_under_change_of_basis():
    rng = random.Random(17)
    for surface in (P2, P1P1):
        for _ in range(10):
            n = 10 if surface is P2 else 9
            m = [list(r) for r in assemble_dpi_matrix(surface, rand_vec(rng, n)).entries]
            p = _random_invertible(rng, len(m))
            q = _random_invertible(rng, len(m[0]))
            assert exact_rank(linalg.matmul(linalg.matmul(p, m), q)) == exact_rank(m)


surfaces = st.sampled_from(["P2", "P1xP1"] + [f"B{r}" for r in range(1, 9)])
qs = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@given(surfaces, st.lists(qs, min_size=10, max_size=10), qs.filter(bool))
@settings(max_examples=60, deadline=None)
def test_euler_characteristic_and_scaling(name, raw, c):
    s = SurfaceSpec.from_name(name)
    d1, d2 = section_dimensions(s)
    coords = raw[:d2]
    prof = poisson_cohomology(s, coords)
    assert prof.euler_characteristic == {"P2": 3, "P1xP1": 4}.get(name, 3 + s.r)
    assert prof.dims[0] == 1 and min(prof.dims) >= 0
    if prof.rank is not None:
        assert 0 <= prof.rank <= min(d1, d2)
    scaled = poisson_cohomology(s, [c * q for q in coords])
    assert scaled.dims == prof.dims and scaled.rank == prof.rank


def test_profile_dict():
    d = poisson_cohomology(P2, unit(10, 0)).to_dict(include_matrix=True)
    assert d["dims"] == [1, 5, 7] and d["rank"] == 3 and d["method"] == "rank-formula"
    assert d["pi"][0] == "1" and len(d["matrix"]) == 10
    b1 = poisson_cohomology(SurfaceSpec.from_name("B1"), [1] * 9).to_dict()
    assert b1["points"] == [["1", "0", "0"]]
