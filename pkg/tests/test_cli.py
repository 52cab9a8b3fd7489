import json
import math

from chebykit.cli import run


def test_cheb_poly():
    r = run(["cheb", "poly", "--kind", "first", "-n", "5"])
    assert r.status == "ok" and r.exit_code == 0
    assert r.payload == [0, 5, 0, -5, 0, 1]
    assert json.loads(r.render()) == [0, 5, 0, -5, 0, 1]


def test_unram_cubic():
    r = run(["unram", "cubic", "-b", "1", "-c", "1"])
    assert r.status == "ok"
    assert r.payload["verdict"] == "unramified"
    assert r.payload["field"] == "Q(sqrt(-31))"


def test_solve_cubic():
    r = run(["solve", "cubic", "-b", "-3", "-c", "-1"])
    roots = sorted(x[0] for x in r.payload["roots"])
    want = sorted(
        [2 * math.cos(math.pi / 9), 2 * math.cos(7 * math.pi / 9), 2 * math.cos(13 * math.pi / 9)]
    )
    assert all(abs(a - b) < 1e-9 for a, b in zip(roots, want))
    assert r.payload["delta"] == "81"


def test_ladder_and_transform():
    r = run(["cheb", "ladder", "-x", "3", "-n", "10", "--mod", "1000"])
    assert r.payload == {"value": 127, "modulus": 1000}
    r = run(["cheb", "transform", "--poly", "[-1,0,0,1]"])
    assert r.payload == [-1, -3, 0, 1]
    r = run(["cheb", "k", "-n", "4", "-m", "2"])
    assert r.payload == {"value": 9}


def test_padic_statuses():
    r = run(["padic", "eval", "-p", "7", "-x", "9", "-k", "5", "--prec", "16"])
    assert r.status == "ok"
    # out-of-radius probe: nonconvergence status, exit code 2
    r = run(["padic", "eval", "-p", "5", "-x", "27", "-k", "1/5"])
    assert r.status == "nonconvergence" and r.exit_code == 2
    r = run(["padic", "roots", "-p", "31", "--poly", "[1,1,0,1]"])
    assert r.status == "ok" and len(r.payload["roots"]) == 1
    r = run(["padic", "hensel", "-p", "31", "--poly", "[1,1,0,1]", "--r0", "14"])
    assert r.status == "domain-error" and r.exit_code == 1


def test_factor_and_branch():
    r = run(["factor", "psi", "-n", "9"])
    assert r.payload["factors"] == [[[1], 1], [[1, 1], 1], [[1, -3, 0, 1], 1]]
    r = run(["branch", "radical", "-t", "1", "-n", "3", "-l", "2"])
    assert abs(r.payload["value"][0] - 2 * math.cos(7 * math.pi / 9)) < 1e-9
    r = run(["branch", "equiv", "-i", "0", "-j", "5", "-n", "3"])
    assert r.payload == {"equivalent": True}


def test_solve_char2_and_resolvent():
    r = run(["solve", "char2", "--op2", "artin-schreier", "-m", "3", "--bits", "3"])
    assert r.status == "ok"
    r = run(["solve", "quartic-resolvent", "--a4", "-2"])
    assert r.payload["is_d4"] and r.payload["biquadratic"] == ["0", "-32"]


def test_scan_and_csv():
    r = run(["unram", "scan", "-b", "5", "--modulus", "25", "--range", "40"])
    assert r.payload["minimal_modulus"] == 25
    r = run(["unram", "scan", "-b", "5", "--modulus", "25", "--range", "20", "--csv"])
    assert r.payload.splitlines()[0] == "b,c,verdict"


def test_determinism():
    args = ["unram", "scan", "-b", "5", "--modulus", "25", "--range", "30", "--csv"]
    a = run(args).render()
    b = run(["--seed", "7"] + args).render()
    c = run(args).render()
    assert a == b == c


def test_domain_errors():
    assert run(["unram", "cubic", "-b", "0", "-c", "1"]).status == "domain-error"
    assert run(["bogus"]).status == "domain-error"
    assert run(["unram", "cubic", "-b", "-3", "-c", "-1"]).exit_code == 1


def test_tower_json_round_trip():
    r = run(["solve", "tower", "--direction", "radical-to-cheb", "-q", "3", "-t", "2"])
    assert r.status == "ok"
    data = json.loads(r.render())
    vals = [complex(re, im) for re, im in data["roots"]]
    assert any(abs(v - 2 ** (1 / 3)) < 1e-9 for v in vals)
    assert all(s["kind"] == "chebyshev-root" for s in data["steps"])


def test_cycle4():
    r = run(["unram", "cycle4", "-t", "11"])
    assert r.payload["qualifies_mod30"] and r.payload["field"] == "Q(sqrt(4081))"


def test_env_precision_override(monkeypatch):
    monkeypatch.setenv("CHEBYKIT_PREC", "9")
    r = run(["padic", "eval", "-p", "7", "-x", "9", "-k", "5"])
    assert r.status == "ok"
    assert r.payload["prec"] <= 9 + 1
    monkeypatch.delenv("CHEBYKIT_PREC")
    r = run(["padic", "eval", "-p", "7", "-x", "9", "-k", "5", "--prec", "20"])
    # C_5(9) = 55449; digits reconstruct it modulo 7^20
    acc = sum(d * 7**i for i, d in enumerate(r.payload["digits"]))
    assert (acc * 7 ** r.payload["val"] - 55449) % 7**20 == 0


def test_parallel_scan_merges_deterministically():
    args = ["unram", "scan", "-b", "5", "--modulus", "25", "--range", "15", "--csv"]
    serial = run(args).render()
    parallel = run(["--jobs", "2"] + args).render()
    assert serial == parallel
