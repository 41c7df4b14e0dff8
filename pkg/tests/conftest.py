import sys
from pathlib import Path

import pytest

# Ensure repo root is importable so `import hyperstate.*` works under all pytest import modes.
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))


@pytest.fixture(autouse=True)
def _log_dir(tmp_path, monkeypatch):
    # keep CLI log events out of the repo
    monkeypatch.setenv("HYPERSTATE_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.delenv("HYPERSTATE_DENSE_CAP", raising=False)
    monkeypatch.delenv("HYPERSTATE_CONTRACTION_CAP", raising=False)
