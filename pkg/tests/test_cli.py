import json
import subprocess
import sys

import pytest

from ballean.cli import main, run
from ballean.ideals import Ideal
from ballean.models import parse_ballean, parse_ideal

P01 = '{"ground": {"finite": 4}, "ideal": {"principal": [0, 1]}}'


def call(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return json.loads(out.out), code


def test_validate(capsys):
    out, code = call(capsys, "validate", "--model",
                     '{"ground":{"finite":3},"ideal":{"explicit":[[ ],[0],[1]]}}')
    assert code == 1 and out["verdict"]["witness"] == {"violation": "union", "pair": [[0], [1]]}
    out, code = call(capsys, "validate", "--model", P01)
    assert code == 0 and out["verdict"]["status"] == "holds"


def test_dsc(capsys):
    out, code = call(capsys, "dsc", "--flavor", "cartesian", "--ideal", '{"principal":[0,1]}',
                     "--ground", "4", "--method", "quotient")
    assert code == 0 and out["count"] == 4


def test_expball(capsys):
    out, _ = call(capsys, "expball", "--flavor", "pointIdeal", "--center", "[0,1]", "--radius",
                  "[1,2]", "--ground", "3", "--ideal", '{"principal":[1,2]}')
    assert out["members"] == [[0, 1], [0, 2], [0, 1, 2]]
    gen, _ = call(capsys, "expball", "--flavor", "genericPointIdeal", "--center", "[0,1]",
                  "--radius", "[1,2]", "--ground", "3", "--ideal", '{"principal":[1,2]}')
    assert gen["members"] == out["members"]


def test_ball_and_components(capsys):
    model = '{"ballean": {"iary": %s}}' % P01
    out, _ = call(capsys, "ball", "--model", model, "--center", "3", "--radius", "[0,1]")
    assert out["members"] == [0, 1, 3]
    sub = '{"ballean": {"sub": {"of": {"cartesian": %s}, "support": [[], [0], [2]]}}}' % P01
    out, _ = call(capsys, "components", "--model", sub)
    assert out["count"] == 2 and out["components"] == [[[], [0]], [[2]]]


def test_checkmap(capsys):
    out, code = call(capsys, "checkmap", "--map", "idX", "--ideal", P01, "--props", "coarse,proper")
    assert code == 1
    assert out["verdicts"]["coarse"]["status"] == "holds"
    assert out["verdicts"]["proper"]["status"] == "fails"
    out, code = call(capsys, "checkmap", "--map", "jx", "--ideal", P01, "--x", "0",
                     "--props", "asym")
    assert code == 0
    out, code = call(capsys, "checkmap", "--map", "kcubeI", "--horizon", "5", "--x", "1",
                     "--props", "asym")
    assert code == 0 and out["verdicts"]["asym"]["status"] == "verifiedToHorizon"


def test_suite(capsys):
    out, code = call(capsys, "suite", "--name", "dsc", "--model", P01)
    assert code == 0 and out["overall"] == "holds"
    out, code = call(capsys, "suite", "--name", "kcubes", "--horizon", "6")
    assert code == 0 and out["overall"] == "verifiedToHorizon"
    iary10 = '{"ballean":{"iary":{"ground":{"naturals":{"horizon":10}},"ideal":{"frechet":true}}}}'
    out, code = call(capsys, "suite", "--name", "thin", "--model", iary10)
    assert code == 1 and out["overall"] == "mixedWithWitnesses"
    out, code = call(capsys, "suite", "--name", "dsc", "--bulk", "2", "--jobs", "2")
    assert code == 0 and out["reports"] == 4


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["dsc", "--flavor", "nope", "--ideal", "{}"],
    ["dsc", "--flavor", "cartesian", "--ideal", "{not json", "--ground", "3"],
    ["dsc", "--flavor", "cartesian", "--ideal", '{"sizeBelow": 2}', "--ground", "3"],
    ["dsc", "--flavor", "cartesian", "--ideal", '{"frechet": true}', "--horizon", "5"],
    ["expball", "--flavor", "iary", "--center", "[1,0]", "--radius", "[]", "--ground", "3",
     "--ideal", '{"principal": [0]}'],
    ["expball", "--flavor", "iary", "--center", "[0]", "--radius", "[2]", "--ground", "3",
     "--ideal", '{"principal": [0]}'],
    ["checkmap", "--map", "jx", "--ideal", P01, "--props", "coarse"],
    ["checkmap", "--map", "idX", "--ideal", P01, "--props", "fast"],
    ["validate", "--model", P01, "--ground", "3", "--horizon", "3"],
    ["suite", "--name", "maps"],
])
def test_input_errors(capsys, argv):
    out, code = call(capsys, *argv)
    assert code == 2 and set(out) == {"error", "message"}


def test_help_keeps_stdout_clean(capsys):
    assert main(["dsc", "--help"]) == 0
    out = capsys.readouterr()
    assert out.out == "" and "--flavor" in out.err


def test_model_round_trip():
    for text in ('{"ballean": {"pointIdeal": %s}}' % P01,
                 '{"ballean": {"exp": {"iary": %s}}}' % P01,
                 '{"ballean": {"flat": {"pointIdeal": %s}}}' % P01,
                 '{"ballean": {"macrocube": %s}}' % P01,
                 '{"ballean": {"sub": {"of": {"exp": {"sub": {"of": {"iary": %s}, '
                 '"support": [0, 2]}}}, "support": [[0], [0, 2]]}}}' % P01):
        b, canon = parse_ballean(json.loads(text))
        b2, canon2 = parse_ballean(json.loads(json.dumps(canon)))
        assert canon2 == canon
        assert b2.point_set == b.point_set
    assert parse_ideal(json.loads(P01)) == Ideal.principal(4, [0, 1])


def test_emitted_models_reparse(capsys):
    out, _ = call(capsys, "suite", "--name", "maps", "--model", P01, "--x", "1")
    model = {k: v for k, v in out["model"].items() if k != "x"}
    assert parse_ideal(model) == Ideal.principal(4, [0, 1])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ballean", "dsc", "--flavor", "iary",
                           "--ideal", '{"principal":[0,1]}', "--ground", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["count"] == 5


def test_run_returns_code():
    out, code = run(["dsc", "--flavor", "cartesian", "--ideal", '{"principal":[]}',
                     "--ground", "3", "--method", "crt"])
    assert (out["count"], code) == (8, 0)
