import json

import pytest

from bowtie.instances import SEEDS, InstanceSpec, SpecError, seed_spec


def test_minimal_zn_spec():
    spec = InstanceSpec.from_dict({
        "ring": {"zn": 6},
        "ideal_generators": ["3"],
        "module": "regular",
    })
    ring, ideal, module, sub = spec.build()
    assert ring.size == 6
    assert ideal.members == (0, 3)
    assert module.size == 6
    assert sub.members == (0,)  # omitted generators mean the zero submodule


def test_submodule_generators():
    spec = InstanceSpec.from_dict({
        "ring": {"zn": 12},
        "ideal_generators": ["4"],
        "module": "regular",
        "submodule_generators": ["3"],
    })
    _, _, _, sub = spec.build()
    assert sub.members == (0, 3, 6, 9)


def test_round_trip_identical_quadruple(tmp_path):
    for name in SEEDS:
        spec = seed_spec(name)
        data = spec.to_dict()
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(data))
        reparsed = InstanceSpec.from_path(path)
        q1 = spec.build()
        q2 = reparsed.build()
        assert q1.ring.add == q2.ring.add and q1.ring.mul == q2.ring.mul
        assert q1.ideal.members == q2.ideal.members
        assert q1.module.add == q2.module.add and q1.module.act == q2.module.act
        assert q1.submodule.members == q2.submodule.members


def test_product_ring_spec():
    spec = InstanceSpec.from_dict({
        "ring": {"product": [{"zn": 2}, {"zn": 3}]},
        "ideal_generators": ["(1,0)"],
        "module": "regular",
    })
    ring, ideal, module, _ = spec.build()
    assert ring.size == 6
    assert ideal.label_set() == "{(0,0),(1,0)}"


def test_product_labels_tolerate_spaces():
    spec = InstanceSpec.from_dict({
        "ring": {"product": [{"zn": 2}, {"zn": 3}]},
        "ideal_generators": ["(1, 0)"],
        "module": "regular",
    })
    _, ideal, _, _ = spec.build()
    assert len(ideal) == 2


def test_explicit_tables_ring():
    z2 = {
        "add": [[0, 1], [1, 0]],
        "mul": [[0, 0], [0, 1]],
    }
    spec = InstanceSpec.from_dict({
        "ring": {"tables": z2},
        "ideal_generators": [],
        "module": "regular",
    })
    ring, ideal, _, _ = spec.build()
    assert ring.size == 2 and ring.one == 1
    assert ideal.members == (0,)


def test_explicit_tables_module():
    # Z_4 acting on Z_2 through reduction mod 2
    spec = InstanceSpec.from_dict({
        "ring": {"zn": 4},
        "ideal_generators": ["2"],
        "module": {"tables": {
            "add": [[0, 1], [1, 0]],
            "act": [[0, 0], [0, 1], [0, 0], [0, 1]],
        }},
    })
    _, _, module, _ = spec.build()
    assert module.size == 2
    assert module.act[3][1] == 1


def test_located_errors():
    with pytest.raises(SpecError, match="ring.zn"):
        InstanceSpec.from_dict({
            "ring": {"zn": 0}, "ideal_generators": [], "module": "regular",
        }).build()
    with pytest.raises(SpecError, match=r"ideal_generators\[0\]"):
        InstanceSpec.from_dict({
            "ring": {"zn": 6}, "ideal_generators": ["7"], "module": "regular",
        }).build()
    with pytest.raises(SpecError, match="missing field"):
        InstanceSpec.from_dict({"ring": {"zn": 6}})
    with pytest.raises(SpecError, match="unknown fields"):
        InstanceSpec.from_dict({
            "ring": {"zn": 6}, "ideal_generators": [], "module": "regular",
            "extra": 1,
        })
    with pytest.raises(SpecError, match="not valid JSON"):
        InstanceSpec.from_path("/dev/null")


def test_invalid_tables_are_located():
    with pytest.raises(SpecError, match="ring.tables"):
        InstanceSpec.from_dict({
            "ring": {"tables": {
                "add": [[0, 1], [1, 1]],  # 1 lacks an inverse
                "mul": [[0, 0], [0, 1]],
            }},
            "ideal_generators": [],
            "module": "regular",
        }).build()


def test_seed_corpus_contents():
    assert set(SEEDS) == {
        "z6-weakly-prime", "z6-remark", "z12-prime",
        "z20-primary", "z16-primary-not-prime",
    }
    with pytest.raises(SpecError, match="unknown seed"):
        seed_spec("nope")
    ring, ideal, _, sub = seed_spec("z16-primary-not-prime").build()
    assert ring.size == 16
    assert ideal.members == (0, 4, 8, 12)
    assert sub.members == (0, 8)
