"""Every shipped spec parses and reproduces the verdicts listed in its metadata."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from guesstape.cli import main
from guesstape.io import parse_document

SPECS = sorted((Path(__file__).parent.parent / "demos" / "specs").glob("*.json"))


def test_there_are_shipped_specs():
    assert len(SPECS) >= 5


@pytest.mark.parametrize("path", SPECS, ids=lambda p: p.stem)
def test_shipped_spec_verdicts(path, capsys):
    doc = parse_document(path.read_text())
    checks = doc.metadata["checks"]
    flag = "--tm" if "tm" in json.loads(path.read_text()) else "--spec"
    for check in checks:
        code = main(check["args"] + [flag, str(path)])
        out = capsys.readouterr().out
        assert code == check["exit"], check["args"]
        assert check.get("expect", "") in out, check["args"]


SCRIPTS = sorted((Path(__file__).parent.parent / "demos").glob("*.py"))


@pytest.mark.parametrize("script", SCRIPTS, ids=lambda p: p.stem)
def test_demo_script_runs(script):
    proc = subprocess.run([sys.executable, str(script)], capture_output=True, text=True,
                          timeout=600)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip()
