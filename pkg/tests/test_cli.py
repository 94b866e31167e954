import json

import pytest

from gradedlie.cli import JobParseError, JobSpec, parse_job, report_body, run
from gradedlie.cli.main import main, render

A1_JOB = "type = A1\nkac = 1,1\nanalyses = all\n"


def test_parse_job_roundtrip():
    job = parse_job("# comment\ntype = A2\nkac = (1, 1, 1)\nseed = 3\nanalyses = strata\n")
    assert job.kac == (1, 1, 1) and job.seed == 3
    assert job.requested == ("strata",)
    assert job.analyses == ("grade", "cartan", "weights", "weyl", "strata")


@pytest.mark.parametrize("text,line,col", [
    ("type = Z3\nkac = 1,1\n", 1, 8),
    ("type = A2\nkac 1,1,1\n", 2, 1),
    ("type = A2\nkac = 1,1\n", 2, 7),
    ("type = A2\nkac = 1,1,1\ncolour = red\n", 3, 1),
    ("type = A2\nkac = 1,1,1\nanalyses = strata, foo\n", 3, 12),
])
def test_parse_errors_have_positions(text, line, col):
    with pytest.raises(JobParseError) as exc:
        parse_job(text)
    assert (exc.value.line, exc.value.col) == (line, col)


def test_invalid_type_exit_status(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("type = Q7\nkac = 1,1\n")
    assert main(["report", str(f)]) != 0
    assert "bad.txt:1:" in capsys.readouterr().err


def summary(rep):
    s = rep["sections"]
    return (s["grade"]["dims"], s["cartan"]["rank"], s["weyl"]["order"], s["strata"]["count"],
            s["central"]["pass"], [o["count"] for o in s["real-orbits"]["orbits"]])


def test_run_examples():
    rep = run(parse_job(A1_JOB))
    assert rep["ok"]
    assert summary(rep) == ([1, 2], 1, 2, 2, True, [1, 1])
    rep = run(parse_job("type = A2\nkac = 1,1,1\n"))
    assert rep["ok"]
    assert summary(rep) == ([2, 3, 3], 1, 3, 2, True, [1, 1])


def test_failed_section_does_not_abort():
    rep = run(parse_job("type = A3\nkac = 1,1,0,0\n"))
    assert not rep["ok"]
    s = rep["sections"]
    assert s["cartan"]["status"] == "ok"
    assert s["weyl"]["status"] == "error"
    assert s["strata"]["status"] == "skipped"


def test_machine_output_and_out_file(tmp_path):
    job = tmp_path / "job.txt"
    job.write_text(A1_JOB)
    out = tmp_path / "r.json"
    assert main(["report", str(job), "--format", "machine", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["schema"].startswith("gradedlie-report/")
    assert "timing" not in data


def test_subcommands(capsys):
    assert main(["build", "G2"]) == 0
    assert "dim: 14" in capsys.readouterr().out
    assert main(["weyl", "A2", "1,1,1", "--format", "machine"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["sections"]["weyl"]["order"] == 3
    assert main(["h1", "A2", "1,1,1", "--real-orbits", "--timing"]) == 0
    assert "timing:" in capsys.readouterr().out


def test_deterministic_serial_parallel():
    job = parse_job(A1_JOB)
    a = render(run(job), "machine")
    b = render(run(job, parallel=4), "machine")
    assert a == b
    assert render(run(job), "text") == render(run(job, parallel=3), "text")
