import copy
import json

import pytest

from posetcat.catalog import chain, pseudocircle
from posetcat.covers import homotopic_distance, liftcat_op
from posetcat.maps import constant, identity, point_inclusion
from posetcat.verify import CertificateError, verify_cover, verify_fence, verify_result
from posetcat.homotopy import is_homotopic

S = pseudocircle()


@pytest.fixture(scope="module")
def cat_doc():
    return json.loads(json.dumps(liftcat_op(identity(S), point_inclusion(S)).to_json()))


def test_accepts_genuine(cat_doc):
    assert verify_result(cat_doc)


def test_rejects_wrong_value(cat_doc):
    with pytest.raises(CertificateError):
        verify_cover(cat_doc["certificate"], 0)


def test_rejects_non_open_part(cat_doc):
    cert = copy.deepcopy(cat_doc["certificate"])
    cert["parts"][0] = ["a1", "b1"]
    with pytest.raises(CertificateError):
        verify_cover(cert)


def test_rejects_incomplete_cover(cat_doc):
    cert = copy.deepcopy(cat_doc["certificate"])
    cert["parts"][1] = cert["parts"][0]
    with pytest.raises(CertificateError):
        verify_cover(cert)


def test_rejects_broken_fence(cat_doc):
    cert = copy.deepcopy(cat_doc["certificate"])
    cert["fences"][0] = cert["fences"][0][:1]
    with pytest.raises(CertificateError):
        verify_cover(cert)


def test_fence_for_non_homotopic_maps_rejected():
    fake = [identity(S).to_json()["values"], constant(S, S, "a1").to_json()["values"]]
    with pytest.raises(CertificateError):
        verify_fence(identity(S).to_json(), constant(S, S, "a1").to_json(), fake)


def test_genuine_fence():
    X = chain(3)
    v = is_homotopic(identity(X), constant(X, X, 0))
    assert verify_fence(identity(X).to_json(), constant(X, X, 0).to_json(),
                        json.loads(json.dumps(v.certificate.to_json())))


def test_distance_certificate():
    doc = homotopic_distance(identity(S), constant(S, S)).to_json()
    assert verify_result(json.loads(json.dumps(doc)))


def test_checker_is_self_contained():
    import ast
    import posetcat.verify as v
    tree = ast.parse(open(v.__file__).read())
    imported = [n for n in ast.walk(tree) if isinstance(n, (ast.Import, ast.ImportFrom))]
    assert all(isinstance(n, ast.ImportFrom) and n.module == "__future__" for n in imported)
