import os
import subprocess
import sys
from pathlib import Path

import pytest

_REPO_ROOT = Path(__file__).resolve().parents[2]


def _module_dir():
    env = os.environ.get("QRACE_PYTHONPATH")
    if env:
        return Path(env)
    guess = _REPO_ROOT / "build" / "python"
    return guess if guess.exists() else None


_mod_dir = _module_dir()
if _mod_dir is not None and str(_mod_dir) not in sys.path:
    sys.path.insert(0, str(_mod_dir))


@pytest.fixture(scope="session")
def qrace():
    mod = pytest.importorskip("qrace", reason="built qrace module not on sys.path")
    return mod


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("QRACE_CLI")
    if not path:
        guess = _REPO_ROOT / "build" / "qrace"
        path = str(guess) if guess.exists() else None
    if not path or not Path(path).exists():
        pytest.skip("qrace CLI binary not found (set QRACE_CLI)")

    def run(*args, expect=0):
        proc = subprocess.run([path, *args], capture_output=True, text=True)
        assert proc.returncode == expect, proc.stderr
        return proc.stdout

    return run


@pytest.fixture(scope="session")
def schema_dir():
    env = os.environ.get("QRACE_SCHEMA_DIR")
    return Path(env) if env else _REPO_ROOT / "schemas"
