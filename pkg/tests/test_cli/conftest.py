import json
from pathlib import Path

import pytest

from ramanujanpi.settings import SINGULAR_VALUES_FILE

PI_50 = "3.\n14159265358979323846264338327950288419716939937510\n"


@pytest.fixture()
def pi_50_plain() -> str:
    return PI_50


@pytest.fixture()
def corrupted_table(tmp_path) -> Path:
    # packaged table with a wrong alpha(13)
    with open(SINGULAR_VALUES_FILE, "r", encoding="utf-8") as f:
        content = json.load(f)
    for record in content["records"]:
        if record["N"] == 13:
            record["alpha"] = "(sqrt(13) - 3)/2"
    path = tmp_path / "corrupted.json"
    path.write_text(json.dumps(content), encoding="utf-8")
    return path
