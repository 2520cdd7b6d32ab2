import random

from toric_cohomology import (
    load_bundled,
    multiplicity_factors,
    multiplicity_table,
    reduced_homology,
    restrict,
    scan_powerset,
)
from toric_cohomology.oracle import fan_complex
from toric_cohomology.srscan import contributing_degrees


def test_p2_factors():
    p = scan_powerset((0b111,), 3)
    assert multiplicity_factors(p, 0b111) == {1: 1}
    assert multiplicity_factors(p, 0) == {0: 1}


def test_p1xp1_factors():
    p = scan_powerset((0b0011, 0b1100), 4)
    assert multiplicity_factors(p, 0b1111) == {2: 1}
    assert multiplicity_factors(p, 0b0011) == {1: 1}
    assert multiplicity_factors(p, 0b1100) == {1: 1}


def test_triangle_generators_stress_case():
    # three pairwise-overlapping generators: the all-ones degree carries
    # multiplicity two, pinned independently by the Hochster side below
    p = scan_powerset((0b011, 0b110, 0b101), 3)
    assert multiplicity_factors(p, 0b111) == {2: 2}
    for single in (0b011, 0b110, 0b101):
        assert multiplicity_factors(p, single) == {1: 1}


def test_tables_assemble_sparsely():
    p = scan_powerset((0b111,), 3)
    table = multiplicity_table(p, p.degrees())
    assert table.table == {0: {0: 1}, 0b111: {1: 1}}
    assert table.nonzero_degrees() == [0, 0b111]


def test_factor_range_bounds():
    rng = random.Random(9)
    for _ in range(25):
        n = rng.randint(2, 7)
        gens = sorted({rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 6))})
        p = scan_powerset(gens, n)
        for deg in p.degrees():
            size = bin(deg).count("1")
            for r, beta in multiplicity_factors(p, deg).items():
                assert beta > 0
                assert 0 <= r <= size


def hochster_side(model, deg):
    size = bin(deg).count("1")
    dims = reduced_homology(restrict(fan_complex(model), deg))
    return {size - j - 1: h for j, h in dims.items()}


def test_hochster_agreement_on_bundled_models():
    for name in ("P2", "P1xP1", "P1xP1xP1", "F1", "dP3"):
        model = load_bundled(name)
        p = scan_powerset(model.sr_generators, model.n)
        for deg in p.degrees():
            assert multiplicity_factors(p, deg) == hochster_side(model, deg), (name, deg)


def test_vanishing_outside_degree_set():
    for name in ("P2", "P1xP1", "P1xP1xP1", "F1", "dP3"):
        model = load_bundled(name)
        p = scan_powerset(model.sr_generators, model.n)
        for deg in range(1 << model.n):
            if deg not in p:
                assert hochster_side(model, deg) == {}, (name, deg)


def test_symmetry_consequence_of_dual_filter():
    # any degree with a nonzero factor has its complement in the degree set
    for name in ("P2", "P1xP1", "P1xP1xP1", "F1", "dP3"):
        model = load_bundled(name)
        p = scan_powerset(model.sr_generators, model.n)
        contributing = set(contributing_degrees(p))
        for deg in p.degrees():
            if multiplicity_factors(p, deg):
                assert deg in contributing, (name, deg)
