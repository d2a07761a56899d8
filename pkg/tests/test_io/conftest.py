import json
from pathlib import Path

import pytest

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.settings import SINGULAR_VALUES_FILE


@pytest.fixture()
def ctx30() -> PrecisionContext:
    return PrecisionContext(30)


@pytest.fixture()
def table_content() -> dict:
    with open(SINGULAR_VALUES_FILE, "r", encoding="utf-8") as f:
        return json.load(f)


@pytest.fixture()
def table_copy(tmp_path, table_content) -> Path:
    path = tmp_path / "singular_values.json"
    path.write_text(json.dumps(table_content), encoding="utf-8")
    return path
