"""Command-line interface: reports, exit codes, determinism."""

import json

from click.testing import CliRunner

from normalclass.cli import main


def invoke(*args):
    return CliRunner().invoke(main, list(args))


def test_surface_class_json():
    r = invoke("surface-class", "x^2*z + z^2*t + y^3")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["normal_class"] == 11
    assert data["degree"] == 3
    assert data["schubert"] == {"sigma2": 11, "sigma11": 6}
    pts = {tuple(b["point"]): (b["tag"], b["multiplicity"]) for b in data["base_points"]}
    assert pts[("0", "0", "0", "1")] == ("singular", 8)
    assert pts[("0", "0", "1", "0")] == ("contact-at-infinity", 2)
    assert data["certified"] is True
    assert data["residual"] == 0


def test_curve_class_json():
    r = invoke("curve-class", "x^2 + y^2 - z^2")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["normal_class"] == 2
    assert data["curve"]["dual_degree"] == 2
    assert data["curve"]["mu_I"] == 1 and data["curve"]["mu_J"] == 1


def test_chow_command():
    r = invoke("chow", "s1*s1")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["sigma2"] == 1 and data["sigma11"] == 1
    r = invoke("chow", "(3*s2 + 5*s11)*s2")
    data = json.loads(r.output)
    assert data["sigma22"] == 3
    r = invoke("chow", "s1^2")
    data = json.loads(r.output)
    assert data["sigma2"] == 1 and data["sigma11"] == 1


def test_census_command():
    r = invoke("census", "x*z*t - t*x^2 - z*t^2 - x*z^2 + y^3")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["normal_class"] == 19
    assert data["census"]["kappa_star"] == 1
    assert data["certified"] is True


def test_polar_command():
    r = invoke("polar", "x^2 + 2*y^2 + 4*z^2 - t^2")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["polar_degree"] == 3 and data["polar_dimension"] == 1


def test_quadric_table_command():
    r = invoke("quadric-table", "d", "1")
    data = json.loads(r.output)
    assert data["normal_class"] == 2
    r = invoke("quadric-table", "a", "2", "4")
    data = json.loads(r.output)
    assert data["normal_class"] == 6


def test_exit_codes():
    assert invoke("surface-class", "x^2 +").exit_code == 1
    assert invoke("surface-class", "x*w").exit_code == 1
    # reducible quadric whose base locus meets it in a curve
    assert invoke("surface-class", "x*y").exit_code == 2
    assert invoke("curve-class", "z*x^2").exit_code == 2


def test_json_determinism():
    a = invoke("surface-class", "x*y - z*t", "--seed", "0").output
    b = invoke("surface-class", "x*y - z*t", "--seed", "0").output
    assert a == b
    c = invoke("surface-class", "x*y - z*t", "--seed", "1").output
    assert json.loads(c)["normal_class"] == json.loads(a)["normal_class"]


def test_batch_mode(tmp_path):
    f = tmp_path / "inputs.txt"
    f.write_text("x^2 + 2*y^2 + 4*z^2 - t^2\nx*y - z*t\n")
    r = invoke("surface-class", "--batch", str(f))
    assert r.exit_code == 0
    lines = [json.loads(line) for line in r.output.splitlines() if line.strip()]
    assert [d["normal_class"] for d in lines] == [6, 5]


def test_text_output():
    r = invoke("quadric-table", "c", "1", "--output", "text")
    assert r.exit_code == 0
    assert "normal_class: 3" in r.output
