"""Smoke test for the pysawstrip extension.

Uses an installed pysawstrip if there is one; otherwise builds the
extension with cargo and imports it from a temporary directory.

    python3 python/smoke_test.py
"""

import importlib
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    try:
        return importlib.import_module("pysawstrip")
    except ImportError:
        pass
    subprocess.run(
        ["cargo", "build", "--release", "-p", "sawstrip-python"],
        cwd=ROOT,
        check=True,
    )
    release = ROOT / "target" / "release"
    lib = next(
        p
        for name in ("libpysawstrip.so", "libpysawstrip.dylib", "pysawstrip.dll")
        if (p := release / name).exists()
    )
    tmp = Path(tempfile.mkdtemp())
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    shutil.copy(lib, tmp / ("pysawstrip" + suffix))
    sys.path.insert(0, str(tmp))
    return importlib.import_module("pysawstrip")


def main():
    m = load()

    counts = m.count_saws(0, 1, 15)
    assert counts[:8] == [1, 3, 6, 12, 20, 36, 58, 100], counts
    assert counts[15] == 4876
    assert all(m.closed_form_a(n) == c for n, c in enumerate(counts))
    assert m.count_saws(0, 1, 15, workers=1) == counts

    assert m.list_saws(0, 1, 2) == ["dd", "dr", "rd", "ru", "ur", "uu"]
    assert m.is_valid_saw("ruld", 0, 1) is False
    assert m.is_valid_saw("rul", 0, 1) is True
    assert m.realize("ru") == [(0, 0), (1, 0), (1, 1)]
    assert m.mirror_x("dru") == "urd"
    assert m.fibonacci(10) == 55

    assert m.generate_northbound(2) == ["ru", "ur", "uu"]
    assert m.parse_northbound("dru") == {"u": 1, "l": [], "i": 0, "uprime": None}
    assert m.parse_northbound("ud") is None

    full = m.full_gf()
    assert full.num == [1, 2, 0, -1, -1, 0, 0, 1]
    assert full.den == [1, -1, -3, 2, 3, -1, -1]
    assert full.series(15) == counts
    assert m.northbound_gf() == m.gf_via_weighted_automaton()
    assert full == m.RatFun([2, 4, 0, -2, -2, 0, 0, 2], [2, -2, -6, 4, 6, -2, -2])
    assert m.verify_theorem(20)

    guessed = m.guess_gf(counts, holdout=2)
    assert guessed == full, repr(guessed)
    assert m.guess_gf([1, 3, 6, 12, 20], holdout=3) is None

    bound = m.connective_bound(0, 1, full)
    lo, hi = bound["mu_float"]
    assert abs(lo - 1.6180339887) < 1e-9 and abs(hi - 1.6180339887) < 1e-9

    conj = m.conjecture_strip_gf(0, 0, 8, 2)
    assert conj["anchor"] == "origin"
    assert conj["gf"] == m.RatFun([1, 1], [1, -1])
    assert m.connective_bound(0, 0, conj["gf"])["mu"] == ("1", "1")

    try:
        m.count_saws(1, 2, 3)
    except ValueError as e:
        assert "origin not in strip" in str(e)
    else:
        raise AssertionError("origin outside strip accepted")

    try:
        m.RatFun([1], [0])
    except ZeroDivisionError:
        pass
    else:
        raise AssertionError("zero denominator accepted")

    print("pysawstrip smoke test: OK")


if __name__ == "__main__":
    main()
