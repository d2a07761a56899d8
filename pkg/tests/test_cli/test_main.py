import json

import pytest

from ramanujanpi import __version__
from ramanujanpi.cli.main import build_parser, main


@pytest.mark.unit
def test_parser_defaults() -> None:
    # Act
    args = build_parser().parse_args(["verify"])

    # Assert
    assert args.digits == 100
    assert args.format == "plain"
    assert args.output_path is None
    assert args.tables is None


@pytest.mark.unit
def test_compute_plain(capsys, pi_50_plain) -> None:
    # Act
    status = main(["compute", "--method", "ramanujan58", "--digits", "50"])
    out = capsys.readouterr().out

    # Assert
    assert status == 0
    assert out == pi_50_plain


@pytest.mark.unit
def test_compute_json(capsys) -> None:
    # Act
    status = main(
        ["compute", "--method", "chudnovsky", "--digits", "30", "--format", "json"]
    )
    record = json.loads(capsys.readouterr().out)

    # Assert
    assert status == 0
    assert set(record) == {"method", "digits", "terms", "seconds", "value"}
    assert record["method"] == "chudnovsky"
    assert record["digits"] == 30
    assert record["value"] == "3.141592653589793238462643383279"


@pytest.mark.unit
def test_compute_agm_json_has_no_terms(capsys) -> None:
    # Act
    main(["compute", "--method", "agm", "--digits", "20", "--format", "json"])
    record = json.loads(capsys.readouterr().out)

    # Assert
    assert record["terms"] is None
    assert record["value"] == "3.14159265358979323846"


@pytest.mark.unit
def test_compute_to_file(tmp_path, capsys, pi_50_plain) -> None:
    # Arrange
    path = tmp_path / "pi.txt"

    # Act
    status = main(
        ["compute", "--method", "chancooper", "--digits", "50", "--out", str(path)]
    )

    # Assert
    assert status == 0
    assert capsys.readouterr().out == ""
    assert path.read_text(encoding="utf-8") == pi_50_plain


@pytest.mark.unit
def test_usage_errors(capsys) -> None:
    # Act
    unknown = main(["compute", "--method", "machin", "--digits", "10"])
    elementary = main(["compute", "--method", "gregory", "--digits", "50"])
    low = main(["verify", "--digits", "16"])
    err = capsys.readouterr().err

    # Assert
    assert unknown == 2
    assert elementary == 2
    assert low == 2
    assert "impractical method for requested digits" in err
    assert "precision too low for table suite" in err
    with pytest.raises(SystemExit):
        main(["compute", "--digits", "10"])


@pytest.mark.unit
def test_catalog(capsys) -> None:
    # Act
    status = main(["catalog", "--format", "json"])
    records = json.loads(capsys.readouterr().out)
    main(["catalog"])
    plain = capsys.readouterr().out

    # Assert
    assert status == 0
    assert len(records) == 10
    assert records[0]["key"] == "ramanujan7g"
    assert records[-1]["digits_per_term"] is None
    assert "ramanujan58" in plain
    assert "26390" in plain


@pytest.mark.unit
def test_version(capsys) -> None:
    # Act
    with pytest.raises(SystemExit) as exit_info:
        main(["--version"])

    # Assert
    assert exit_info.value.code == 0
    assert __version__ in capsys.readouterr().out


@pytest.mark.unit
def test_arithmetic_errors_outside_verify(monkeypatch, capsys) -> None:
    # Arrange
    def no_convergence(*args, **kwargs):
        raise ArithmeticError("did not reach the tail bound")

    monkeypatch.setattr("ramanujanpi.cli.commands.compute_digits", no_convergence)
    monkeypatch.setattr("ramanujanpi.cli.commands.run_suite", no_convergence)

    # Act
    compute = main(["compute", "--method", "chudnovsky", "--digits", "10"])
    verify = main(["verify", "--digits", "30"])
    err = capsys.readouterr().err

    # Assert
    assert compute == 2
    assert verify == 1
    assert "did not reach the tail bound" in err
