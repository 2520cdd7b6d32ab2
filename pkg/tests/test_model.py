import json
import random

import pytest

from toric_cohomology import (
    ModelError,
    ToricVarietyModel,
    bundled_model_names,
    canonical_class,
    load_bundled,
    parse_variety,
    sr_from_max_cones,
)
from toric_cohomology._bits import mask_of

P2_DOC = {
    "coordinates": ["x1", "x2", "x3"],
    "dimension": 2,
    "charges": [[1], [1], [1]],
    "sr_ideal": [[1, 2, 3]],
}

P1XP1_DOC = {
    "coordinates": ["x1", "x2", "y1", "y2"],
    "dimension": 2,
    "charges": [[1, 0], [1, 0], [0, 1], [0, 1]],
    "sr_ideal": [[1, 2], [3, 4]],
}


class TestParse:
    def test_p2(self):
        m = parse_variety(json.dumps(P2_DOC))
        assert m.n == 3 and m.dim == 2 and m.t == 1
        assert m.sr_generators == (0b111,)
        assert m.max_cones is None

    def test_p1xp1(self):
        m = parse_variety(json.dumps(P1XP1_DOC))
        assert m.n == 4 and m.dim == 2 and m.t == 2
        assert m.sr_generators == (0b0011, 0b1100)

    def test_non_minimal_generators_rejected(self):
        doc = dict(P2_DOC, sr_ideal=[[1, 2], [1, 2, 3]])
        with pytest.raises(ModelError, match="non-minimal"):
            parse_variety(json.dumps(doc))
        doc = dict(P2_DOC, sr_ideal=[[1, 2, 3], [1, 2, 3]])
        with pytest.raises(ModelError, match="non-minimal"):
            parse_variety(json.dumps(doc))

    def test_malformed_document(self):
        with pytest.raises(ModelError, match="malformed"):
            parse_variety("{not json")
        with pytest.raises(ModelError, match="missing"):
            parse_variety(json.dumps({"coordinates": ["x"], "dimension": 1}))
        with pytest.raises(ModelError):
            parse_variety(json.dumps({"coordinates": ["x"], "charges": []}))

    def test_requires_some_fan_data(self):
        doc = {k: v for k, v in P2_DOC.items() if k != "sr_ideal"}
        with pytest.raises(ModelError, match="sr_ideal"):
            parse_variety(json.dumps(doc))

    def test_non_integer_charges(self):
        doc = dict(P2_DOC, charges=[[1], [1.5], [1]])
        with pytest.raises(ModelError, match="non-integer"):
            parse_variety(json.dumps(doc))

    def test_dimension_consistency(self):
        doc = dict(P2_DOC, charges=[[1, 0], [0, 1], [1, 1]])
        with pytest.raises(ModelError):
            parse_variety(json.dumps(doc))

    def test_rank_deficient_charges(self):
        doc = dict(P1XP1_DOC, charges=[[1, 1], [1, 1], [2, 2], [0, 0]])
        with pytest.raises(ModelError, match="rank"):
            parse_variety(json.dumps(doc))

    def test_bad_vertex_index(self):
        doc = dict(P2_DOC, sr_ideal=[[1, 2, 7]])
        with pytest.raises(ModelError, match="out of range"):
            parse_variety(json.dumps(doc))

    def test_generator_order_insensitive(self):
        a = parse_variety(json.dumps(P1XP1_DOC))
        b = parse_variety(json.dumps(dict(P1XP1_DOC, sr_ideal=[[4, 3], [2, 1]])))
        assert a == b

    def test_sr_derived_from_cones_only(self):
        doc = {k: v for k, v in P2_DOC.items() if k != "sr_ideal"}
        doc["max_cones"] = [[1, 2], [1, 3], [2, 3]]
        m = parse_variety(json.dumps(doc))
        assert m.sr_generators == (0b111,)


class TestSrFromMaxCones:
    def test_p2(self):
        cones = [mask_of((0, 1)), mask_of((0, 2)), mask_of((1, 2))]
        assert sr_from_max_cones(cones, 3) == [0b111]

    def test_p1xp1(self):
        cones = [mask_of(c) for c in ((0, 2), (0, 3), (1, 2), (1, 3))]
        assert sr_from_max_cones(cones, 4) == [0b0011, 0b1100]

    def test_full_simplex_has_no_nonfaces(self):
        assert sr_from_max_cones([0b11], 2) == []

    def test_empty_cone_list(self):
        with pytest.raises(ModelError):
            sr_from_max_cones([], 3)

    def test_derived_generators_are_nonfaces(self):
        rng = random.Random(41)
        for _ in range(30):
            n = rng.randint(2, 7)
            d = rng.randint(1, n - 1)
            cones = {mask_of(rng.sample(range(n), d)) for _ in range(rng.randint(1, 5))}
            gens = sr_from_max_cones(sorted(cones), n)
            for g in gens:
                assert all(g & c != g for c in cones)


class TestValidationInvariants:
    def test_cone_containing_generator_rejected(self):
        with pytest.raises(ModelError):
            ToricVarietyModel(
                ("x1", "x2", "x3"), 2, ((1,), (1,), (1,)),
                (0b011,), (0b011, 0b101),
            )

    def test_cone_size_must_match_dimension(self):
        with pytest.raises(ModelError, match="vertices"):
            ToricVarietyModel(
                ("x1", "x2", "x3"), 2, ((1,), (1,), (1,)),
                (0b111,), (0b001, 0b110),
            )

    def test_cross_validation_of_stored_sr(self):
        # stored SR misses the {3,4} generator the cones imply
        with pytest.raises(ModelError, match="inconsistent"):
            ToricVarietyModel(
                ("x1", "x2", "x3", "x4"), 2,
                ((1, 0), (1, 0), (0, 1), (0, 1)),
                (0b0011,), (0b0101, 0b1001, 0b0110, 0b1010),
            )

    def test_bundled_models_round_trip(self):
        for name in bundled_model_names():
            m = load_bundled(name)
            assert m.max_cones is not None
            assert tuple(sr_from_max_cones(m.max_cones, m.n)) == m.sr_generators


class TestCanonicalClass:
    def test_p2(self):
        assert canonical_class(load_bundled("P2")) == (-3,)

    def test_p1xp1(self):
        assert canonical_class(load_bundled("P1xP1")) == (-2, -2)

    def test_trivial_class_group(self):
        # d = n: no charge columns at all, canonical class is the empty vector
        m = ToricVarietyModel(("x1",), 1, ((),), (), (0b1,))
        assert canonical_class(m) == ()


def test_bundled_model_names():
    assert bundled_model_names() == ["F1", "P1xP1", "P1xP1xP1", "P2", "dP3"]
