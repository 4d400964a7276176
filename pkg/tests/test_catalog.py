import pytest

from semiflows import catalog


@pytest.mark.parametrize("entry_id", [i for i in catalog.CATALOG_IDS if i != "ex4_10"])
def test_entry_matches_expectations(entry_id):
    findings = catalog.verify(catalog.build(entry_id))
    assert findings
    assert all(f.status == "match" for f in findings), [f for f in findings if f.status != "match"]


@pytest.mark.parametrize("entry_id,params", [
    ("ex1_3", {"N": 12}), ("ex1_3", {"N": 40}), ("ex4_4", {"N": 3}),
    ("ex6_2", {"alphabet": 3, "window": 2}), ("ex6_2", {"alphabet": 2, "window": 4}),
    ("rotation", {"n": 1}), ("rotation", {"n": 8}),
])
def test_entry_parameters(entry_id, params):
    findings = catalog.verify(catalog.build(entry_id, **params))
    assert all(f.status == "match" for f in findings)


def test_squaring_claims_are_adjudicated_not_failed():
    # the discretized squaring map has no transitive point; the findings are recorded, not raised
    findings = {f.property: f for f in catalog.verify(catalog.build("ex4_10"))}
    assert {p for p, f in findings.items() if f.status == "discrepancy"} == {"tt", "pt", "tran", "equi_points"}
    assert findings["minimal"].status == "match"
    assert findings["pt"].computed.value == "Fails"
    assert catalog.all_match(list(findings.values()))


def test_bad_parameters_raise():
    with pytest.raises(ValueError):
        catalog.build("ex1_3", N=1)
    with pytest.raises(KeyError):
        catalog.build("nonsense")
    with pytest.raises(TypeError):
        catalog.build("ex4_8", N=3)
