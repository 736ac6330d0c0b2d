import json

import pytest

from tautring import (
    FixedPoint,
    OrientedRep,
    TorusManifold,
    builtin,
    euler_characteristic,
    euler_of_rep,
    MultiPoly,
    product,
    projective_space,
    sphere,
    validate_maximal_torus,
)
from tautring.errors import ManifoldFormatError, NotMaximal
from tautring.manifolds import load_manifold, manifold_from_json, manifold_to_json

x1, x2 = MultiPoly.gens(2)


def test_sphere_data():
    s2 = sphere(1)
    assert [(fp.label, fp.rep.weights, fp.rep.sign) for fp in s2.fixed_points] == [
        ("0", ((1,),), 1),
        ("inf", ((1,),), -1),
    ]
    assert (s2.m0, s2.m1) == (0, 1)


def test_product_signs_and_rank():
    M = product(sphere(1), sphere(2))
    assert M.n == 3
    assert [fp.label for fp in M.fixed_points] == ["0,0", "0,inf", "inf,0", "inf,inf"]
    assert [fp.rep.sign for fp in M.fixed_points] == [1, -1, -1, 1]
    assert M.retained.label == "0,inf"
    assert euler_characteristic(M) == 4


def test_projective_plane_data():
    M = projective_space(2)
    first, second, _ = M.fixed_points
    assert first.label == "[1:0:0]"
    assert first.rep.weights == ((1, 0), (0, 1))
    assert euler_of_rep(second.rep) == x1 * (x1 - x2)


def test_builtin_names():
    assert builtin("builtin:s4").n == 2
    assert builtin("s2xs2xs2").n == 3
    assert builtin("CP3").n == 3
    for bad in ("s3", "t2", "s2xq", "cp"):
        with pytest.raises(ManifoldFormatError):
            builtin(bad)


def test_rank_cap():
    with pytest.raises(ValueError):
        sphere(7)


def test_maximal_torus_checks():
    validate_maximal_torus(sphere(3))
    for M in (projective_space(2), projective_space(4)):
        for i in range(len(M.fixed_points)):
            validate_maximal_torus(TorusManifold(M.name, M.fixed_points, m0=i))
    degenerate = TorusManifold("z", (
        FixedPoint("a", OrientedRep(((0, 0), (0, 1)), 1)),
        FixedPoint("b", OrientedRep.standard(2, -1)),
    ))
    with pytest.raises(NotMaximal) as info:
        validate_maximal_torus(degenerate)
    assert info.value.label == "a"


def test_m0_m1_must_differ():
    fps = sphere(1).fixed_points
    with pytest.raises(ValueError):
        TorusManifold("x", fps, m0=0, m1=0)


@pytest.mark.parametrize("name", ["s2", "s2xs4", "s2xs2xs2", "cp1", "cp3"])
def test_json_roundtrip(name):
    M = builtin(name)
    text = manifold_to_json(M)
    assert manifold_from_json(text) == M
    assert manifold_to_json(manifold_from_json(text)) == text


def test_json_errors():
    with pytest.raises(ManifoldFormatError, match="not valid JSON"):
        manifold_from_json("{")
    with pytest.raises(ManifoldFormatError, match="'rank' is a required property"):
        manifold_from_json('{"name": "x"}')
    short = {"name": "x", "rank": 2, "m0": 0, "m1": None,
             "fixed_points": [{"label": "a", "weights": [[1, 0]], "sign": 1}]}
    with pytest.raises(ManifoldFormatError, match="2 weights of length 2"):
        manifold_from_json(json.dumps(short))
    bad_sign = dict(short, fixed_points=[{"label": "a", "weights": [[1, 0], [0, 1]], "sign": 2}])
    with pytest.raises(ManifoldFormatError, match="sign"):
        manifold_from_json(json.dumps(bad_sign))
    out_of_range = dict(bad_sign, fixed_points=[{"label": "a", "weights": [[1, 0], [0, 1]], "sign": 1}], m1=3)
    with pytest.raises(ManifoldFormatError):
        manifold_from_json(json.dumps(out_of_range))


def test_load_from_file(tmp_path):
    path = tmp_path / "cp2.json"
    path.write_text(manifold_to_json(projective_space(2)))
    assert load_manifold(str(path)) == projective_space(2)
    with pytest.raises(ManifoldFormatError, match="cannot read"):
        load_manifold(str(tmp_path / "missing.json"))
