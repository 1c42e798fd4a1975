import json
import subprocess
import sys
from pathlib import Path

import pytest

from sinrhyper.cli import main
from sinrhyper.hypergraph import Hypergraph, complete_uniform, normalize, star

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def test_gen_hypergraph_example(capsys):
    code, out, _ = run(capsys, "gen-hypergraph", str(SAMPLES / "example_k14.json"))
    assert code == 0
    assert out.strip() == star(4).to_json() == '{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4]]}'


def test_gen_hypergraph_single_station(capsys, files):
    code, out, _ = run(capsys, "gen-hypergraph", files("one.json", '{"stations": [[0.5, 2]]}'))
    assert code == 0 and out.strip() == '{"n":1,"edges":[]}'


def test_gen_pairs_match_udg(capsys, files):
    net = files("net.json", json.dumps({"stations": [[0, 0], [0.8, 0], [1.7, 0.3], [0.2, 0.9], [3, 3]]}))
    _, pairs, _ = run(capsys, "gen-hypergraph", net, "--max-size", "2")
    _, udg, _ = run(capsys, "udg", net)
    assert pairs == udg


def test_udg_examples(capsys, files):
    code, out, _ = run(capsys, "udg", str(SAMPLES / "example_k14.json"))
    assert code == 0 and Hypergraph.from_json(out) == star(4)
    code, out, _ = run(capsys, "udg", files("far.json", '{"stations": [[0, 0], [5, 0]]}'))
    assert out.strip() == '{"n":2,"edges":[]}'


@pytest.mark.parametrize(
    "H, text",
    [(complete_uniform(5, 3), "3/2\t1.5"), (star(5), "5\t5"), (normalize([], 3), "1\t1"), (complete_uniform(4, 4), "5/3\t1.66666666667")],
)
def test_sigma(capsys, files, H, text):
    code, out, _ = run(capsys, "sigma", files("h.json", H.to_json()))
    assert code == 0 and out.strip() == text


def test_sigma_json_and_decimal_digits(capsys, files):
    H = complete_uniform(6, 4)  # 2 - 1/3
    code, out, _ = run(capsys, "sigma", files("h.json", H.to_json()), "--json")
    assert code == 0
    assert json.loads(out) == {"sigma": "5/3", "decimal": "1.66666666667"}


def test_sigma_too_large(capsys, files):
    code, _, err = run(capsys, "sigma", files("big.json", normalize([], 21).to_json()))
    assert code == 3 and "error" in err


def test_input_errors(capsys, files, tmp_path):
    assert run(capsys, "sigma", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "sigma", files("bad.json", "{nope"))[0] == 2
    assert run(capsys, "gen-hypergraph", files("dup.json", '{"stations": [[0,0],[0,0]]}'))[0] == 2
    assert run(capsys, "sigma", files("edge.json", '{"n": 3, "edges": [[0, 7]]}'))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["realize", str(SAMPLES / "star4.json"), "--restarts", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_realize_star4(capsys):
    code, out, _ = run(capsys, "realize", str(SAMPLES / "star4.json"), "--restarts", "100")
    report = json.loads(out)
    assert code == 0 and report["found"] and report["best_mismatch"] == 0
    assert report["network"]["beta"] == 1.0 and len(report["network"]["stations"]) == 5
    assert "note" not in report


def test_realize_not_found_is_tagged(capsys):
    code, out, _ = run(capsys, "realize", str(SAMPLES / "star5.json"), "--restarts", "5", "--steps", "200")
    report = json.loads(out)
    assert code == 0 and not report["found"]
    assert "not a proof" in report["note"]


def test_realize_trivial(capsys, files):
    code, out, _ = run(capsys, "realize", files("one.json", '{"n":1,"edges":[]}'), "--restarts", "1")
    assert code == 0 and json.loads(out)["found"]


def test_realize_too_large(capsys, files):
    code, _, _ = run(capsys, "realize", files("nine.json", normalize([], 9).to_json()))
    assert code == 3


def test_output_byte_stable(capsys, tmp_path):
    outs = []
    for k in range(2):
        target = tmp_path / f"r{k}.json"
        main(["realize", str(SAMPLES / "star4.json"), "--restarts", "40", "--seed", "3", "--out", str(target)])
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]
    a = tmp_path / "a.json"
    main(["gen-hypergraph", str(SAMPLES / "example_k14.json"), "--out", str(a)])
    assert a.read_text() == star(4).to_json() + "\n"


def test_verify_lemmas_small(capsys):
    code, out, _ = run(capsys, "verify-lemmas", "--trials", "1", "--grid", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1] == "7/7 checks passed"


def test_verify_lemmas_json(capsys):
    code, out, _ = run(capsys, "verify-lemmas", "--trials", "50", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["all_passed"]
    k15 = next(c for c in payload["checks"] if c["name"] == "k15-contradiction")
    assert "numerical evidence only" in k15["detail"]


def test_verify_lemmas_rejects_tiny_grid():
    with pytest.raises(SystemExit) as exc:
        main(["verify-lemmas", "--grid", "2"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "sinrhyper", "sigma", str(SAMPLES / "k5_3.json")], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout.strip() == "3/2\t1.5"
