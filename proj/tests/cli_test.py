"""End-to-end checks of the swarmpos command line: exit codes, output files,
config dumping and record schema conformance."""

import csv
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

CLI = sys.argv[1]
SCHEMA = json.loads(pathlib.Path(sys.argv[2]).read_text())
failures = []


def cli(*args):
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def validate_records(path):
    validator = jsonschema.Draft202012Validator(SCHEMA)
    lines = path.read_text().splitlines()
    bad = 0
    for line in lines:
        bad += not validator.is_valid(json.loads(line))
    return len(lines), bad


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)

    r = cli("config", "--dump")
    check(r.returncode == 0, "config --dump exits 0")
    dumped = json.loads(r.stdout)
    check(dumped["n_uavs"] == 4 and dumped["mode"] == "proposed", "dumped defaults")
    cfg = tmp / "cfg.json"
    cfg.write_text(json.dumps(dumped))
    r2 = cli("config", "--dump", "--config", cfg)
    check(r2.returncode == 0 and json.loads(r2.stdout) == dumped, "dumped config round-trips")

    r = cli("run", "--n-steps", 30, "--seed", 2, "--out", tmp / "run")
    check(r.returncode == 0, "run exits 0")
    run_dir = tmp / "run" / "proposed_n4_seed2"
    n, bad = validate_records(run_dir / "records.jsonl")
    check(n == 30 and bad == 0, f"proposed records validate against schema ({n} lines, {bad} invalid)")
    summary = json.loads((run_dir / "summary.json").read_text())
    check(summary["n_records"] == 30 and summary["constraint_violations"] == 0, "summary.json contents")
    check("wall_time_ms" not in (run_dir / "records.jsonl").read_text(), "wall time omitted by default")

    r = cli("run", "--n-steps", 30, "--seed", 2, "--out", tmp / "again")
    same = (tmp / "again" / "proposed_n4_seed2" / "records.jsonl").read_bytes() == (run_dir / "records.jsonl").read_bytes()
    check(r.returncode == 0 and same, "repeated run is byte-identical")

    r = cli("run", "--n-steps", 5, "--seed", 2, "--wall-time", "--out", tmp / "timed")
    n, bad = validate_records(tmp / "timed" / "proposed_n4_seed2" / "records.jsonl")
    check(r.returncode == 0 and bad == 0 and "wall_time_ms" in (tmp / "timed" / "proposed_n4_seed2" / "records.jsonl").read_text(),
          "wall-time records validate")

    r = cli("baseline", "--n-steps", 3, "--seed", 1, "--out", tmp / "base")
    n, bad = validate_records(tmp / "base" / "baseline_n4_seed1" / "records.jsonl")
    check(r.returncode == 0 and n == 3 and bad == 0, "baseline records validate against schema")

    r = cli("summarize", run_dir / "records.jsonl")
    check(r.returncode == 0 and "converged" in r.stdout, "summarize exits 0")

    r = cli("sweep", "--sizes", 1, 2, "--n-seeds", 2, "--n-steps", 4, "--out", tmp / "sweep")
    rows = list(csv.DictReader((tmp / "sweep" / "sweep_converged.csv").open())) if r.returncode == 0 else []
    check(r.returncode == 0 and len(rows) == 4 and (tmp / "sweep" / "sweep_trajectories.csv").exists(), "sweep writes CSVs")

    r = cli("compare", "--n-seeds", 2, "--n-steps", 4, "--out", tmp / "cmp")
    rows = list(csv.DictReader((tmp / "cmp" / "comparison.csv").open())) if r.returncode == 0 else []
    check(r.returncode == 0 and len(rows) == 2, "compare writes comparison.csv")

    check(cli("run", "--bogus").returncode == 1, "unknown flag exits 1")
    check(cli("run", "--n-uavs", 0, "--out", tmp / "x").returncode == 1, "zero UAVs exits 1")
    check(cli("run", "--region", "area9", "--out", tmp / "x").returncode == 1, "unknown region exits 1")
    broken = tmp / "broken.json"
    broken.write_text("{ not json")
    check(cli("run", "--config", broken, "--out", tmp / "x").returncode == 1, "malformed config exits 1")
    blocker = tmp / "blocker"
    blocker.write_text("x")
    check(cli("run", "--n-steps", 2, "--out", blocker / "sub").returncode == 2, "unwritable output exits 2")
    check(cli("summarize", tmp / "missing.jsonl").returncode != 0, "missing records file fails")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
