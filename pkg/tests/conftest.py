from __future__ import annotations

from pathlib import Path

import pytest

from regui.spec import LayoutSpec, parse_spec

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURE_PATH = REPO_ROOT / "fixtures" / "teachlcge.regui.json"
TRACES_DIR = REPO_ROOT / "fixtures" / "traces"
GOLDENS_DIR = REPO_ROOT / "goldens"


@pytest.fixture(scope="session")
def fixture_text() -> str:
    return FIXTURE_PATH.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def fixture_spec(fixture_text: str) -> LayoutSpec:
    return parse_spec(fixture_text)
