import json

import pytest
from click.testing import CliRunner

from superhopf import fileformat as ff
from superhopf.cli import main
from superhopf.corpus import rep_z2_fusion
from superhopf.triangular import sweedler_hopf

EXAMPLES = [
    ("sweedler", ["--lambda", "0"]),
    ("sweedler", ["--lambda", "3/5"]),
    ("group", ["--group", "Z2xZ2"]),
    ("exterior", ["--dim", "2"]),
    ("supergroup", ["--dim", "2", "--group", "Z2"]),
    ("yd-biproduct", ["--dim", "2", "--group", "Z2"]),
    ("yd-biproduct", ["--dim", "1", "--group", "Z4"]),
    ("ru", ["--group", "Z2xZ2"]),
]


@pytest.fixture
def run(tmp_path):
    runner = CliRunner()

    def go(*args):
        return runner.invoke(main, [str(a) for a in args])

    return go


def _example(run, tmp_path, name, opts, fname="a.json"):
    path = tmp_path / fname
    res = run("example", name, *opts, "-o", path)
    assert res.exit_code == 0, res.output
    return path


@pytest.mark.parametrize("name,opts", EXAMPLES, ids=lambda x: x if isinstance(x, str) else "-".join(x))
def test_examples_verify(run, tmp_path, name, opts):
    path = _example(run, tmp_path, name, opts)
    extra = ["--super"] if "parity" in json.loads(path.read_text()) else []
    res = run("verify", path, "--triangular", *extra)
    assert res.exit_code == 0, res.output


def test_verify_fails_on_mutation(run, tmp_path):
    path = tmp_path / "bad.json"
    doc = json.loads(ff.emit_algebra(sweedler_hopf()))
    doc["antipode"] = [[str(int(i == j)) for j in range(4)] for i in range(4)]
    path.write_text(json.dumps(doc))
    res = run("verify", path)
    assert res.exit_code == 1 and "antipode" in res.output


def test_input_errors_exit_2(run, tmp_path):
    assert run("verify", tmp_path / "missing.json").exit_code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{\n  oops\n}")
    res = run("verify", bad)
    assert res.exit_code == 2 and "line 2" in res.output
    plain = _example(run, tmp_path, "group", [])
    assert run("verify", plain, "--super").exit_code == 2
    assert run("bosonize", plain, "--grouplike", "1").exit_code == 2
    assert run("example", "sweedler", "--lambda", "1/0").exit_code == 2
    assert run("catdim", "lemma", "--poly", "2*x^2 - 1").exit_code == 2


def test_json_output_is_deterministic(run, tmp_path):
    path = _example(run, tmp_path, "sweedler", ["--lambda", "1"])
    a = run("verify", path, "--triangular", "--json")
    b = run("verify", path, "--triangular", "--json")
    assert a.exit_code == 0 and a.output == b.output
    assert json.loads(a.output)["ok"] is True


def test_unbosonize_bosonize_round_trip(run, tmp_path):
    path = _example(run, tmp_path, "sweedler", ["--lambda", "2"])
    sup = tmp_path / "super.json"
    back = tmp_path / "back.json"
    assert run("unbosonize", path, "--grouplike", "1", "-o", sup).exit_code == 0
    assert run("verify", sup, "--super", "--triangular").exit_code == 0
    assert run("bosonize", sup, "--grouplike", "1", "-o", back).exit_code == 0
    orig, again = ff.read_algebra(path), ff.read_algebra(back)
    assert again.hopf.same_tensors(orig.hopf)
    assert again.rmatrix == orig.rmatrix and again.twist == orig.twist


def test_twist_command(run, tmp_path):
    path = _example(run, tmp_path, "sweedler", ["--lambda", "1"])
    out = tmp_path / "tw.json"
    assert run("twist", path, "--twist", path, "-o", out).exit_code == 0
    assert run("verify", out, "--triangular").exit_code == 0


def test_queries(run, tmp_path):
    path = _example(run, tmp_path, "sweedler", ["--lambda", "1"])
    res = run("minimal-part", path, "--json")
    assert res.exit_code == 0 and json.loads(res.output)["rank"] == 4
    res = run("skewprims", path, "--g", "0", "--h", "1", "--json")
    assert res.exit_code == 0 and json.loads(res.output)["dimension"] == 2
    assert run("skewprims", path, "--g", "2", "--h", "1").exit_code == 2
    assert run("chevalley", path).exit_code == 0
    assert run("grouplikes", path).exit_code == 0
    assert run("generation", path).exit_code == 0


def test_indeterminate_exit_3(run, tmp_path):
    from superhopf.hopf import dual_hopf
    from superhopf.superalg import GroupTable, group_algebra

    path = tmp_path / "fz3.json"
    ff.write_algebra(path, dual_hopf(group_algebra(GroupTable.cyclic(3))))
    assert run("grouplikes", path).exit_code == 3
    assert run("generation", path).exit_code == 3


def test_catdim_lemma_exit_codes(run):
    res = run("catdim", "lemma", "--poly", "x^2-2")
    assert res.exit_code == 1 and "first failing k = 2" in res.output
    assert run("catdim", "lemma", "--poly", "x-3", "--kmax", "20").exit_code == 0
    res = run("catdim", "lemma", "--poly", "x^2+x+1", "--json")
    assert json.loads(res.output)["k"] == 2


def test_catdim_fusion(run, tmp_path):
    path = tmp_path / "fib.json"
    path.write_text(json.dumps({"rank": 2, "unit": 0, "matrices": [[[1, 0], [0, 1]], [[0, 1], [1, 1]]]}))
    res = run("catdim", "fusion", path, "--object", "1", "--json")
    assert res.exit_code == 0
    row = json.loads(res.output)["objects"][0]
    assert row["fpdim"]["minimal_polynomial"] == "x^2 - x - 1" and row["dim_candidates"] == []
    z2 = tmp_path / "z2.json"
    z2.write_text(ff.emit_fusion(rep_z2_fusion()))
    assert run("catdim", "fusion", z2).exit_code == 0
    assert run("catdim", "fusion", z2, "--object", "5").exit_code == 2
