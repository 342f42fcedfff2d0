#!/usr/bin/env python3
"""
Test script for the command-line surface: output text, JSON and exit status
"""

import sys
import os
import io
import json
import tempfile

# Add the project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import cli
from console import Console
from features.identities import identity_limits
from gamma.errors import UsageError


def run_command(*argv, environ=None):
    stream = io.StringIO()
    status = cli.run(list(argv), stream=stream, environ=environ or {})
    return status, stream.getvalue()


def test_ribbon_expand():
    status, output = run_command("ribbon", "expand", "1,2")
    assert status == 0, f"Exit status {status}: {output}"
    lines = output.splitlines()
    assert lines[0] == "r(1,2) = 8/3·p[1,1,1] − 2/3·p[3]", f"Got '{lines[0]}'"
    assert lines[1] == "r(1,2) = q[2,1] − q[3]", f"Got '{lines[1]}'"
    again = run_command("ribbon", "expand", "1,2")
    assert again == (status, output), "Identical invocations must print identical output"
    status, output = run_command("ribbon", "expand", "1,2", "--json")
    document = json.loads(output)
    assert document["p"] == {"3": "-2/3", "1,1,1": "8/3"}
    print("ribbon expand: ok")


def test_ribbon_check():
    status, output = run_command("ribbon", "check", "1,1,2", "--json")
    assert status == 0
    assert json.loads(output)["verdict"] == "positive"
    status, output = run_command("ribbon", "check", "1,2")
    assert status == 1, "A negative ribbon fails the check"
    assert "witness p[3] with coefficient -2/3" in output, f"Got '{output}'"
    status, output = run_command("ribbon", "info", "1,1,3", "--json")
    assert status == 0, f"Exit status {status}: {output}"
    info = json.loads(output)
    assert info["corners"] == 1 and info["odd_size"]["in_blocks"]
    print("ribbon check and info: ok")


def test_exit_statuses():
    status, output = run_command("bogus")
    assert status == 2 and output.startswith("error:"), f"Got {status}: {output}"
    status, _ = run_command("ribbon", "expand", "1,0")
    assert status == 2, "Zero parts are a parse error"
    status, _ = run_command("ribbon", "expand")
    assert status == 2, "Missing argument"
    status, _ = run_command("ribbon", "expand", "1,2", "--threads", "0")
    assert status == 2, "Non-positive worker count"
    status, output = run_command("ribbon", "expand", "17")
    assert status == 3 and "guard" in output, f"Got {status}: {output}"
    status, _ = run_command("ribbon", "expand", "17", "--guard", "20")
    assert status == 0
    status, _ = run_command("ribbon", "check", "5", "--max-n", "4")
    assert status == 3, "--max-n is the guard for single-object commands"
    print("Exit statuses: ok")


def test_sweep_commands():
    status, output = run_command("triangle", "classify", "--max-n", "8")
    assert status == 0, output
    assert output.splitlines()[-1] == "36 triangles, 0 disagreement(s)"
    status, output = run_command("triangle", "classify", "7,4", "--json")
    assert json.loads(output)["rows"][0]["predicted"] is False
    status, output = run_command("conjecture", "verify", "--n", "6", "--json")
    assert status == 0 and json.loads(output)["match"] is True
    status, _ = run_command("conjecture", "verify")
    assert status == 2, "verify needs --n or --max-n"
    status, output = run_command("conjecture", "disconnected", "--max-n", "5")
    assert status == 0, output
    status, output = run_command("conjecture", "construct", "--n", "4")
    assert status == 0 and output.splitlines()[-1].endswith("power identity holds")
    print("Sweep commands: ok")


def test_chromatic_and_basis():
    status, output = run_command("chromatic", "X", "triangle")
    assert status == 0
    assert output.strip() == "X(n=3;edges=0-1,0-2,1-2) = p[1,1,1] − 3·p[2,1] + 2·p[3]", f"Got '{output}'"
    status, output = run_command("chromatic", "Y", "triangle")
    assert output.strip() == "Y(n=3;edges=0-1,0-2,1-2) = p[1,1,1] + 2·p[3]"
    status, output = run_command("chromatic", "classify", "path:4", "--json")
    assert status == 0 and json.loads(output)["y_in_gamma"] is False
    status, _ = run_command("chromatic", "X", "n=3;edges=0-7")
    assert status == 2
    status, output = run_command("basis", "check", "--family", "b1", "--n", "7")
    assert status == 0 and "(basis)" in output, output
    status, _ = run_command("basis", "check", "--family", "b9", "--n", "7")
    assert status == 2
    print("Chromatic and basis: ok")


def test_oracle_and_identities():
    status, output = run_command("oracle", "compare", "1,2", "--vars", "2", "--json")
    document = json.loads(output)
    assert status == 0 and document["ribbon_agrees"] and document["monomial_agrees"]
    status, output = run_command("oracle", "compare", "3,1/", "--json")
    document = json.loads(output)
    assert status == 0 and document["coefficient_sum"] == "0" and document["has_negative"]
    status, output = run_command("oracle", "compare", "2,2/1", "--unshifted", "--json")
    assert status == 0, output
    limits = identity_limits(4)
    assert limits["triangles"] == 20 and limits["closed forms"] == 20, f"Got {limits}"
    assert limits["products"] == 4
    status, output = run_command("identities", "--max-n", "4", "--json")
    assert status == 0, output
    checks = json.loads(output)["checks"]
    assert checks["triangles"]["limit"] == 20
    assert checks["corners"]["limit"] == 11 and checks["odd sizes"]["limit"] == 11
    print("Oracle and identities: ok")


def test_cache_and_environment():
    with tempfile.TemporaryDirectory() as directory:
        path = os.path.join(directory, "q.json")
        status, output = run_command("cache", "save", "--max-n", "6", environ={"GAMMAKIT_CACHE": path})
        assert status == 0 and os.path.exists(path), output
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
        assert data["3"] == {"3": "2/3", "1,1,1": "4/3"}
        config = cli.parse_config(["ribbon", "expand", "1", "--cache", "other.json"], {"GAMMAKIT_CACHE": path})
        assert config.cache == path, "GAMMAKIT_CACHE overrides --cache"
    config = cli.parse_config(["triangle", "classify"], {"GAMMAKIT_ARCHIVE": "mongodb://example:27017/"})
    assert config.archive == "mongodb://example:27017/"
    assert config.object_guard(16) == 16 and config.sweep_guard(14) == 14
    try:
        cli.parse_config(["ribbon", "expand", "1", "--max-n", "0"], {})
        assert False, "--max-n must be positive"
    except UsageError:
        pass
    print("Cache and environment: ok")


def test_console_buffer():
    stream = io.StringIO()
    console = Console(stream)
    console.append_to_console("one")
    console.append_json({"two": 2})
    assert stream.getvalue() == "", "Nothing is written before a flush"
    console.append_to_console("three")
    console.flush_buffer()
    assert stream.getvalue() == 'one\n{"two": 2}\nthree\n'
    console.flush_buffer()
    assert stream.getvalue() == 'one\n{"two": 2}\nthree\n', "An empty buffer writes nothing"
    print("Console buffer: ok")


if __name__ == "__main__":
    test_ribbon_expand()
    test_ribbon_check()
    test_exit_statuses()
    test_sweep_commands()
    test_chromatic_and_basis()
    test_oracle_and_identities()
    test_cache_and_environment()
    test_console_buffer()
    print("\nAll tests passed!")
