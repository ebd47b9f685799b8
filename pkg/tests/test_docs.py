"""Every ``console`` block of the README is run and compared byte for byte."""

import io
import re
import shlex
from pathlib import Path

import pytest

from sl2auto.cli import run

README = Path(__file__).resolve().parent.parent / "README.md"


def _examples():
    text = README.read_text(encoding="utf-8")
    out = []
    for block in re.findall(r"```console\n(.*?)```", text, flags=re.S):
        cmd, expected = None, []
        for line in block.splitlines():
            if line.startswith("$ "):
                if cmd is not None:
                    out.append((cmd, "".join(expected)))
                cmd, expected = line[2:], []
            else:
                expected.append(line + "\n")
        if cmd is not None:
            out.append((cmd, "".join(expected)))
    return out


EXAMPLES = _examples()


def test_readme_has_examples():
    assert len(EXAMPLES) >= 10


@pytest.mark.parametrize("cmd,expected", EXAMPLES, ids=[c for c, _ in EXAMPLES])
def test_readme_example(cmd, expected):
    argv = shlex.split(cmd)
    assert argv[0] == "sl2auto"
    out, err = io.StringIO(), io.StringIO()
    assert run(argv[1:], stdout=out, stderr=err) == 0, err.getvalue()
    assert out.getvalue() == expected
