"""JSON wire-format round trips and backend inference."""

import random
from fractions import Fraction

import pytest

from bicomplex import BicomplexScalar, GaussianRational, HyperbolicValue
from bicomplex.scalars import EXACT, FLOAT
from bicomplex.serialize import (
    FormatError,
    hyperbolic_from_json,
    hyperbolic_to_json,
    matrix_from_json,
    matrix_to_json,
    scalar_from_json,
    scalar_to_json,
    vector_from_json,
    vector_to_json,
)

from helpers import rand_matrix, rand_scalar, rand_vector


def test_scalar_round_trip_exact():
    rng = random.Random(91)
    for _ in range(50):
        s = rand_scalar(rng)
        assert scalar_from_json(scalar_to_json(s)) == s


def test_scalar_round_trip_float():
    s = BicomplexScalar.from_idempotent(1.5 + 2j, -0.25j, FLOAT)
    back = scalar_from_json(scalar_to_json(s))
    assert back.backend == FLOAT and back == s


def test_scalar_exact_encoding_shape():
    s = BicomplexScalar.from_idempotent(Fraction(1, 2), Fraction(-3, 4))
    js = scalar_to_json(s)
    assert js == {
        "idem": [{"re": "1/2", "im": "0"}, {"re": "-3/4", "im": "0"}]
    }


def test_backend_inference_from_strings():
    js = {"idem": [{"re": "1/2", "im": "0"}, {"re": "1", "im": "0"}]}
    assert scalar_from_json(js).backend == EXACT
    js = {"idem": [{"re": 0.5, "im": 0.0}, {"re": 1.0, "im": 0.0}]}
    assert scalar_from_json(js).backend == FLOAT


def test_euclidean_form_accepted():
    # {"eucl": [z1, z2]} converts on load: z = z1 + j z2
    js = {"eucl": [{"re": "3", "im": "4"}, {"re": "1", "im": "-2"}]}
    s = scalar_from_json(js)
    assert s.c1 == GaussianRational(1, 3) and s.c2 == GaussianRational(5, 5)


def test_scalar_format_errors():
    with pytest.raises(FormatError):
        scalar_from_json({"bogus": []})
    with pytest.raises(FormatError):
        scalar_from_json({"idem": [{"re": "1", "im": "0"}]})
    with pytest.raises(FormatError):
        scalar_from_json({"idem": [{"re": "x/y", "im": "0"}, {"re": "0", "im": "0"}]})


def test_matrix_round_trip():
    rng = random.Random(93)
    m = rand_matrix(rng, 3, 2)
    js = matrix_to_json(m)
    assert js["rows"] == 3 and js["cols"] == 2 and js["backend"] == EXACT
    assert matrix_from_json(js) == m


def test_matrix_shape_validation():
    js = {"rows": 2, "cols": 2, "backend": "exact",
          "entries": [[{"idem": [{"re": "1", "im": "0"}, {"re": "1", "im": "0"}]}]]}
    with pytest.raises(FormatError):
        matrix_from_json(js)


def test_matrix_backend_inference():
    js = {
        "entries": [
            [{"idem": [{"re": "1", "im": "0"}, {"re": "2", "im": "0"}]}],
        ]
    }
    assert matrix_from_json(js).backend == EXACT
    js_float = {
        "entries": [
            [{"idem": [{"re": 1.0, "im": 0.0}, {"re": 2.0, "im": 0.0}]}],
        ]
    }
    assert matrix_from_json(js_float).backend == FLOAT


def test_vector_round_trip():
    rng = random.Random(95)
    v = rand_vector(rng, 4)
    assert vector_from_json(vector_to_json(v)) == v


def test_hyperbolic_round_trip():
    h = HyperbolicValue(Fraction(1, 3), Fraction(2, 7), squared=True)
    back = hyperbolic_from_json(hyperbolic_to_json(h))
    assert back == h
    hf = HyperbolicValue(0.25, 1.5)
    assert hyperbolic_from_json(hyperbolic_to_json(hf)) == hf


def test_lattice_json_shape():
    from bicomplex import bicomplex_lattice
    from bicomplex.examples import example_two_matrix
    from bicomplex.serialize import lattice_to_json

    lat = bicomplex_lattice(example_two_matrix())
    js = lattice_to_json(lat)
    assert len(js["nodes"]) == 12
    assert len(js["covers"]) == len(lat.covers)
    node = js["nodes"][0]
    assert set(node) == {"label", "dims", "basis"}
    assert set(node["basis"]) == {"s1", "s2"}
