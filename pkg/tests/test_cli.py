import io
import json
import subprocess
import sys

import pytest

from tautring.cli import main
from tautring.manifolds import manifold_to_json, projective_space


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_localize_cp2():
    code, text = run("localize", "--manifold", "builtin:cp2", "--class", "e*p1")
    assert code == 0
    assert text.splitlines()[-1] == "class: 4*p1 - 4*e"


@pytest.mark.parametrize("manifold, cls, expected", [
    ("builtin:s2xs2", "p1", "0"),
    ("builtin:s4", "e*p1", "2*p1"),
    ("builtin:cp2", "e^3", "p1^2 + p2 - 2*e*p1"),
])
def test_localize_examples(manifold, cls, expected):
    code, text = run("localize", "--manifold", manifold, "--class", cls)
    assert code == 0
    assert f"class: {expected}" in text.splitlines()


def test_localize_json_is_byte_stable():
    argv = ("localize", "--manifold", "builtin:cp2", "--class", "e^2*p1", "--format", "json")
    _, first = run(*argv)
    _, second = run(*argv)
    assert first == second
    payload = json.loads(first)
    assert payload["kappa_pullback"]["text"] == "2*p1^2 + 2*p2 - 4*e*p1"


def test_localize_latex():
    _, text = run("localize", "--manifold", "builtin:cp2", "--class", "e*p1", "--format", "latex")
    assert text.strip() == r"\kappa_{ep_1} \longmapsto 4p_1 - 4e"


def test_localize_parse_error_exits_nonzero():
    code, text = run("localize", "--manifold", "builtin:cp2", "--class", "e*")
    assert code == 1
    assert text.startswith("error: ParseError")


def test_localize_not_invariant_on_cp3():
    code, text = run("localize", "--manifold", "builtin:cp3", "--class", "e*p1^2")
    assert code == 1
    assert "NotInvariant" in text


def test_localize_not_polynomial_from_file(tmp_path):
    data = json.loads(manifold_to_json(projective_space(2)))
    data["fixed_points"][2]["sign"] = -1
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))
    # the Euler class still integrates (each term is +-1); the inverse Euler sum does not
    code, text = run("localize", "--manifold", str(path), "--class", "1", "--format", "json")
    assert code == 1
    payload = json.loads(text)
    assert payload["error"] == "NotPolynomial"
    assert payload["remainder"] != "0"


def test_homomorphism_s2xs4():
    code, text = run("homomorphism", "--manifold", "builtin:s2xs4", "--max-degree", "12")
    assert code == 0
    lines = text.splitlines()
    assert "point_class_status: Transported" in lines
    assert "kappa[e*p1] -> kappa[e*p1] + 2*p1" in lines
    assert "kappa[p1^2] -> kappa[p1^2]" in lines
    assert "e -> e" in lines


def test_homomorphism_cp2():
    code, text = run("homomorphism", "--manifold", "builtin:cp2")
    assert code == 0
    assert "point_class_status: Unavailable(" in text
    assert "kappa[p1] -> kappa[p1] + 3" in text.splitlines()


def test_homomorphism_conjugated():
    _, text = run("homomorphism", "--manifold", "builtin:s2xs2", "--conjugated", "--max-degree", "8")
    assert "e -> -e" in text.splitlines()
    assert "variant: conjugated" in text.splitlines()


def test_homomorphism_json_stable():
    argv = ("homomorphism", "--manifold", "builtin:s2xs2", "--format", "json", "--max-degree", "8")
    assert run(*argv)[1] == run(*argv)[1]
    payload = json.loads(run(*argv)[1])
    assert payload["max_degree"] == 8
    assert payload["point_class_status"] == {"status": "transported"}


def test_homomorphism_latex():
    _, text = run("homomorphism", "--manifold", "builtin:s2xs2", "--format", "latex", "--max-degree", "8")
    assert text.startswith(r"\begin{align*}")
    assert r"\kappa_{ep_1} &\longmapsto \kappa_{ep_1} + 2p_1\\" in text


def test_max_degree_environment(monkeypatch):
    monkeypatch.setenv("TAUTRING_MAX_DEGREE", "8")
    _, text = run("homomorphism", "--manifold", "builtin:s4")
    assert "max_degree: 8" in text
    assert "kappa[p1^2]" in text and "kappa[p1^3]" not in text


def test_homomorphism_cp3_reports_not_invariant():
    code, text = run("homomorphism", "--manifold", "builtin:cp3")
    assert code == 1
    assert text.startswith("error: NotInvariant")


def test_unknown_builtin():
    code, text = run("homomorphism", "--manifold", "builtin:t5")
    assert code == 1
    assert "ManifoldFormatError" in text


def test_echo_manifold():
    code, text = run("echo-manifold", "--manifold", "builtin:cp2")
    assert code == 0
    assert text.strip() == manifold_to_json(projective_space(2))


def test_verify_paper_json():
    code, text = run("verify-paper", "--format", "json")
    payload = json.loads(text)
    assert code == 0 and payload["passed"]
    assert {ch["criterion"] for ch in payload["checks"]} == set(range(1, 9))


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tautring", "localize", "--manifold", "builtin:s4", "--class", "e*p1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "class: 2*p1" in proc.stdout
