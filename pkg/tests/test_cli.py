import json
import os
from pathlib import Path

import pytest

from hecke_ip import cli
from hecke_ip.errors import InvariantError

DEMO = Path(__file__).resolve().parents[1] / "demos" / "mixed_d4_e7_a2.json"


def call(capsys, *argv):
    try:
        code = cli.run(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_dim(capsys):
    assert call(capsys, "dim", "q=001")[:2] == (0, "8\n")
    code, out, _ = call(capsys, "dim", str(DEMO))
    assert code == 0 and out.strip() == "4668480"


def test_collapse_is_reported(capsys):
    code, out, _ = call(capsys, "dim", "A2[2,3]")
    assert code == 0 and "collapsed" in out
    code, out, _ = call(capsys, "dim", "A2[2,3]", "--format", "json")
    assert json.loads(out)["result"]["dimension"] == 1


def test_json_envelope_is_stable(capsys):
    _, a, _ = call(capsys, "irr", "q=0110", "--format", "json")
    _, b, _ = call(capsys, "irr", "q=0110", "--format", "json")
    assert a == b
    doc = json.loads(a)
    assert set(doc) == {"command", "input", "result", "timings"}
    assert doc["timings"] == {}
    assert a == json.dumps(doc, indent=2, sort_keys=True) + "\n"
    _, c, _ = call(capsys, "irr", "q=0110", "--format", "json", "--timings")
    assert set(json.loads(c)["timings"]) == {"parse", "run"}


def test_quiver_dot(capsys):
    code, out, _ = call(capsys, "quiver", "q=000", "--format", "dot")
    assert code == 0 and out.startswith("digraph")
    assert 'label="C[{1}|]"' in out
    # the A3 zero quiver has 8 vertices
    assert out.count("[label=") == 8


def test_tower_commands(capsys):
    code, out, _ = call(capsys, "tower-prod", "C[1](1),[2]", "C[0](2)")
    assert code == 0
    assert out.split("\n")[:3] == ["1 x C[100](1),[2],(1,2)", "1 x C[100](1),[2],(2,1)",
                                  "1 x C[100](1),[2],(3)"]
    code, out, _ = call(capsys, "tower-coprod", "P[00](1,2)", "--format", "json")
    labels = [t["label"] for t in json.loads(out)["result"]["terms"]]
    assert "P[00](1,2) (x) S_empty" in labels


def test_induce_and_restrict(capsys):
    code, out, _ = call(capsys, "restrict", "q=1101", "--node", "3",
                        "--label", "P:(1),[2,1],(1),[2]")
    assert code == 0 and out.strip()
    code, out, _ = call(capsys, "induce", "q=010", "--node", "1", "--label", "C:{}|[2]")
    assert code == 0 and out.strip()


@pytest.mark.parametrize("argv", [
    ("dim", "A3[0,1"),
    ("dim", "A2"),
    ("nonsense",),
    ("dim", "q=01", "--max-dim", "0"),
    ("basis", "q=01", "--format", "dot"),
    ("restrict", "q=010", "--node", "2", "--label", "P:{9}|[2]"),
])
def test_user_errors_exit_1(capsys, argv):
    assert call(capsys, *argv)[0] == 1


def test_guard_exit_2(capsys):
    code, _, err = call(capsys, "cartan0", "A5", "--max-group-order", "100")
    assert code == 2 and "refused" in err
    assert "HECKE_IP_MAX_ORDER" not in os.environ
    assert call(capsys, "basis", "q=0000", "--max-dim", "10")[0] == 2


def test_invariant_exit_3(capsys, monkeypatch):
    def broken(job, args):
        raise InvariantError("forced")
    monkeypatch.setitem(cli.HANDLERS, "dim", broken)
    assert call(capsys, "dim", "q=0")[0] == 3


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    assert call(capsys, "reptype", "q=0011100", "--format", "json", "-o", str(target))[0] == 0
    doc = json.loads(target.read_text())
    assert doc["command"] == "reptype"


@pytest.mark.parametrize("cmd", ["info", "cartan", "cartan0", "decompose-regular", "duality",
                                 "reptype", "basis"])
def test_commands_run(capsys, cmd):
    code, out, _ = call(capsys, cmd, "q=0101")
    assert code == 0 and out.strip()
