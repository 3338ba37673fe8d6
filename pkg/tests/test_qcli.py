import io
import json
import os
import re
from pathlib import Path

import pytest

from qrat.qcli import Config, UsageError, load_config, main

GOLDEN = Path(__file__).parent / "golden"

# name -> argv; outputs frozen in tests/golden/<name>.out
PINNED = {
    "deform_both": ["deform", "5/2", "--side", "both", "--format", "json"],
    "deform_negative_float": ["deform", "--format", "float", "--q", "3/10", "--", "-3/7"],
    "cf": ["cf", "17/5"],
    "cf_zero": ["cf", "0"],
    "braid": ["braid", "s1 s2^-1 s1", "--q", "1/2"],
    "orbit": ["orbit", "--braid", "s1 s2", "--q", "1/2"],
    "jones": ["jones", "7/3"],
    "farey": ["farey", "--q", "3/10", "--depth", "2"],
    "farey_csv": ["farey", "--q", "3/10", "--depth", "2", "--format", "csv"],
    "classify": ["classify", "--x", "0.3", "--q", "3/10"],
    "stab_gromov": ["stab", "gromov", "--z1", "1j", "--z2", "1+1j", "--q", "1/2"],
    "stab_sample": ["stab", "sample", "--count", "3", "--seed", "7", "--masses", "--q", "1/2"],
    "stab_limit": ["stab", "limit", "--m-max", "20", "--q", "3/10"],
}


def run(argv, env=None):
    out = io.StringIO()
    code = main(argv, out, env or {})
    return code, out.getvalue()


def regenerate():
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in PINNED.items():
        code, text = run(argv)
        assert code == 0, name
        (GOLDEN / f"{name}.out").write_text(text)


@pytest.mark.parametrize("name", sorted(PINNED))
def test_golden(name):
    code, text = run(PINNED[name])
    assert code == 0
    assert text == (GOLDEN / f"{name}.out").read_text()


def test_known_values():
    _, text = run(["deform", "5/2", "--side", "both", "--format", "json"])
    data = json.loads(text)
    assert data["sharp"] == {"num": "1+2*q+q^2+q^3", "den": "1+q"}
    _, text = run(["jones", "3/1"])
    assert json.loads(text)["coefficients"] == [1, 1, 0, 1]
    _, text = run(["cf", "0"])
    assert text.strip() == "[-1,1]"


def _strip_version(text):
    return re.sub(r"<!-- qrat .* -->\n", "", text)


def test_svg_golden(tmp_path):
    path = tmp_path / "farey.svg"
    code, _ = run(["farey", "--q", "3/10", "--depth", "4", "--svg", str(path)])
    assert code == 0
    assert _strip_version(path.read_text()) == _strip_version((GOLDEN / "farey.svg").read_text())


@pytest.mark.parametrize("argv", [
    ["nosuch"],
    ["deform"],
    ["braid", "x1"],
    ["deform", "5/x"],
    ["farey", "--depth", "13"],
    ["--config", "/nonexistent/qrat.cfg", "cf", "3"],
])
def test_usage_errors(argv, capsys):
    assert run(argv)[0] == 64


@pytest.mark.parametrize("argv", [
    ["deform", "5/2", "--q", "3/2", "--format", "float"],
    ["jones", "1/1"],
    ["classify", "--x", "0.5", "--q", "1"],
    ["stab", "limit", "--q", "1.5"],
])
def test_domain_errors(argv, capsys):
    assert run(argv)[0] == 2


def test_config_file(tmp_path):
    cfg = tmp_path / "qrat.cfg"
    cfg.write_text("# defaults\ndefault_q = 0.3\noutput_format = text\nrng_seed = 11\n")
    loaded = load_config(str(cfg), {})
    assert loaded == Config(default_q=0.3, output_format="text", rng_seed=11)
    assert load_config(str(cfg), {"QRAT_SEED": "5"}).rng_seed == 5
    cfg.write_text("default_q = 2\n")
    with pytest.raises(UsageError):
        load_config(str(cfg), {})
    cfg.write_text("colour = blue\n")
    with pytest.raises(UsageError):
        load_config(str(cfg), {})
    with pytest.raises(UsageError):
        load_config(None, {"QRAT_SEED": "x"})


def test_seed_from_environment():
    argv = ["stab", "sample", "--count", "2", "--q", "1/2"]
    a = run(argv, {"QRAT_SEED": "3"})[1]
    b = run(argv, {"QRAT_SEED": "3"})[1]
    c = run(argv, {"QRAT_SEED": "4"})[1]
    assert a == b != c


def test_output_formats():
    argv = ["farey", "--q", "1/2", "--depth", "1"]
    as_json = json.loads(run(argv + ["--format", "json"])[1])
    lines = run(argv + ["--format", "text"])[1].splitlines()
    assert [json.loads(line) for line in lines] == as_json
    csv_lines = run(argv + ["--format", "csv"])[1].splitlines()
    assert len(csv_lines) == len(as_json) + 1


if __name__ == "__main__":
    regenerate()
