"""JSON document formats: schema validation, parsing, canonical emission."""

from __future__ import annotations

from fractions import Fraction

import pytest

from leibniz_graphs.algebra import BasisSplit
from leibniz_graphs.corpus import fuzz_instances, standard_entries
from leibniz_graphs.errors import (
    InputDocumentError,
    InvalidSplitError,
    NotLeibnizError,
)
from leibniz_graphs.jsonio import (
    algebra_from_json,
    algebra_to_json,
    dumps,
    field_from_json,
    field_to_json,
    load_schema,
    map_from_json,
    map_to_json,
    scalar_from_json,
    scalar_to_json,
)
from leibniz_graphs.scalars import FieldSpec

Q = FieldSpec.rationals()
F5 = FieldSpec.prime(5)

FIVE_DIM_DOC = {
    "field": "Q",
    "labels": ["e", "h", "f", "p", "q"],
    "kernel": ["p", "q"],
    "products": [
        {"l": "e", "r": "h", "out": "e", "c": "2"},
        {"l": "h", "r": "e", "out": "e", "c": "-2"},
        {"l": "h", "r": "f", "out": "f", "c": "2"},
        {"l": "f", "r": "h", "out": "f", "c": "-2"},
        {"l": "e", "r": "f", "out": "h", "c": "1"},
        {"l": "f", "r": "e", "out": "h", "c": "-1"},
        {"l": "p", "r": "h", "out": "p", "c": "1"},
        {"l": "q", "r": "e", "out": "p", "c": "-1"},
        {"l": "p", "r": "f", "out": "q", "c": "1"},
        {"l": "q", "r": "h", "out": "q", "c": "-1"},
    ],
}


def _doc(**overrides):
    doc = {k: (list(v) if isinstance(v, list) else v)
           for k, v in FIVE_DIM_DOC.items()}
    doc["products"] = [dict(p) for p in FIVE_DIM_DOC["products"]]
    doc.update(overrides)
    return doc


def test_round_trip_is_byte_stable_for_the_whole_corpus():
    for entry in standard_entries():
        alg, split = entry.instantiate()
        doc = algebra_to_json(alg, split)
        parsed_alg, parsed_split, parsed_table = algebra_from_json(doc)
        assert parsed_alg == alg
        assert parsed_split == split
        doc2 = algebra_to_json(parsed_alg, parsed_split, parsed_table)
        assert dumps(doc) == dumps(doc2)


def test_round_trip_over_a_finite_field():
    for alg, split in fuzz_instances(seed=2, count=6):
        doc = algebra_to_json(alg, split)
        parsed_alg, parsed_split, _table = algebra_from_json(doc)
        assert parsed_alg == alg and parsed_split == split
        for product in doc["products"]:
            assert isinstance(product["c"], int)


def test_parse_accepts_the_frozen_document():
    alg, split, table = algebra_from_json(FIVE_DIM_DOC)
    assert alg.labels == ("e", "h", "f", "p", "q")
    assert split.kernel == (3, 4)
    assert len(table.entries) == 10
    assert alg.identity_verified


def test_kernel_is_inferred_when_absent():
    doc = _doc()
    del doc["kernel"]
    _alg, split, _table = algebra_from_json(doc)
    assert split.kernel == (3, 4)


def test_wrong_declared_kernel_is_rejected():
    with pytest.raises(InvalidSplitError):
        algebra_from_json(_doc(kernel=["p"]))
    with pytest.raises(InvalidSplitError):
        algebra_from_json(_doc(kernel=["f", "p", "q"]))


def test_non_aligned_kernel_has_no_split():
    # [a,b] = c and [b,a] = d put c + d in the kernel, which no subset of
    # this basis spans
    doc = {
        "field": "Q",
        "labels": ["a", "b", "c", "d"],
        "products": [
            {"l": "a", "r": "b", "out": "c", "c": "1"},
            {"l": "b", "r": "a", "out": "d", "c": "1"},
        ],
    }
    with pytest.raises(InputDocumentError) as exc:
        algebra_from_json(doc)
    assert "no kernel/complement split" in str(exc.value)
    doc["kernel"] = ["c", "d"]
    with pytest.raises(InvalidSplitError):
        algebra_from_json(doc)


def test_identity_violations_are_input_errors():
    bad = _doc()
    bad["products"][4] = {"l": "e", "r": "f", "out": "e", "c": "1"}
    with pytest.raises(NotLeibnizError) as exc:
        algebra_from_json(bad)
    assert exc.value.violations


def test_schema_violations_carry_json_paths():
    with pytest.raises(InputDocumentError):
        algebra_from_json({"labels": ["a"], "products": []})  # no field
    with pytest.raises(InputDocumentError):
        algebra_from_json(_doc(labels=["e", "e", "f", "p", "q"]))
    with pytest.raises(InputDocumentError):
        algebra_from_json(_doc(extra="nope"))
    with pytest.raises(InputDocumentError) as exc:
        bad = _doc()
        bad["products"][0]["c"] = "1/0"
        algebra_from_json(bad)
    assert "products[0]" in str(exc.value)


def test_semantic_violations_carry_json_paths():
    bad = _doc()
    bad["products"][0]["out"] = "z"
    with pytest.raises(InputDocumentError) as exc:
        algebra_from_json(bad)
    assert exc.value.path == "$.products[0].out"

    bad = _doc()
    bad["products"][1] = dict(bad["products"][0])
    with pytest.raises(InputDocumentError) as exc:
        algebra_from_json(bad)
    assert "duplicate product" in str(exc.value)

    bad = _doc()
    bad["products"][0]["c"] = "0"
    with pytest.raises(InputDocumentError) as exc:
        algebra_from_json(bad)
    assert "zero coefficient" in str(exc.value)


def test_field_codec():
    assert field_to_json(Q) == "Q"
    assert field_to_json(F5) == {"p": 5}
    assert field_from_json("Q") == Q
    assert field_from_json({"p": 5}) == F5
    with pytest.raises(InputDocumentError):
        field_from_json({"p": 6})
    with pytest.raises(InputDocumentError):
        field_from_json("R")


def test_scalar_emission_is_canonical():
    assert scalar_to_json(Q.scalar(Fraction(2, 1))) == "2"
    assert scalar_to_json(Q.scalar(Fraction(-2, 6))) == "-1/3"
    assert scalar_to_json(F5.scalar(3)) == 3


def test_rational_scalar_parsing_is_lenient():
    assert scalar_from_json(Q, "4/6") == Q.scalar(Fraction(2, 3))
    assert scalar_from_json(Q, 2) == Q.scalar(2)  # plain ints are accepted
    # decimal strings parse exactly here; the schema still rejects them
    # inside documents, where only "a" and "a/b" are canonical
    assert scalar_from_json(Q, "0.5") == Q.scalar(Fraction(1, 2))
    for bad in ("a", "1/0", True, 1.5, None):
        with pytest.raises(InputDocumentError):
            scalar_from_json(Q, bad)


def test_finite_field_scalar_parsing_is_strict():
    assert scalar_from_json(F5, 3) == F5.scalar(3)
    for bad in (5, -1, "3", True, 2.0):
        with pytest.raises(InputDocumentError):
            scalar_from_json(F5, bad)


def test_map_document_is_column_major():
    doc = map_to_json([
        (Q.scalar(1), Q.scalar(2)),   # image of v_0
        (Q.scalar(0), Q.scalar(1)),   # image of v_1
    ])
    assert doc == {"matrix": [["1", "2"], ["0", "1"]]}
    columns = map_from_json(doc, Q, 2)
    assert columns[0] == (Q.scalar(1), Q.scalar(2))
    with pytest.raises(InputDocumentError):
        map_from_json(doc, Q, 3)
    with pytest.raises(InputDocumentError):
        map_from_json({"matrix": [["1"], ["0", "1"]]}, Q, 2)
    with pytest.raises(InputDocumentError):
        map_from_json({"rows": []}, Q, 2)


def test_dumps_layout_is_fixed():
    text = dumps({"b": 1, "a": [1, 2]})
    assert text == '{\n  "b": 1,\n  "a": [\n    1,\n    2\n  ]\n}\n'
    assert text == dumps({"b": 1, "a": [1, 2]})


def test_shipped_schemas_load():
    algebra_schema = load_schema("algebra")
    assert algebra_schema["$id"].endswith("algebra:v1")
    map_schema = load_schema("map")
    assert map_schema["$id"].endswith("map:v1")
    assert load_schema("algebra") is algebra_schema  # cached
    with pytest.raises(FileNotFoundError):
        load_schema("unknown")


def test_split_survives_serialization():
    alg, split, table = algebra_from_json(FIVE_DIM_DOC)
    assert split == BasisSplit.of(5, (3, 4))
    doc = algebra_to_json(alg, split, table)
    assert doc["kernel"] == ["p", "q"]
    assert doc["products"] == sorted(
        doc["products"],
        key=lambda e: (alg.index_of(e["l"]), alg.index_of(e["r"])),
    )
