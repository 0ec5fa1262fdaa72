"""Smoke test for the Python extension.

Builds the extension with cargo, loads it from a temporary directory and
exercises each exposed type once. Run from anywhere:

    python3 crates/py/python/smoke_test.py
"""

import importlib.util
import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parents[3]


def build_and_load():
    subprocess.run(
        ["cargo", "build", "-p", "exacta-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = next(
        p
        for name in ("libexacta_py.so", "libexacta_py.dylib", "exacta_py.dll")
        if (p := ROOT / "target" / "debug" / name).exists()
    )
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    tmp = Path(tempfile.mkdtemp())
    target = tmp / f"exacta{suffix}"
    shutil.copy(lib, target)
    spec = importlib.util.spec_from_file_location("exacta", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    ex = build_and_load()

    assert ex.gcd(252, 198) == 18
    assert ex.lcm(90, 24) == 360
    assert ex.factorize(12) == [(2, 2), (3, 1)]
    assert ex.to_base(125, 7) == [2, 3, 6]
    assert ex.from_base([2, 3, 6], 7) == 125
    assert ex.binom(12, 4) == 495
    assert ex.factorial(30) == 265252859812191058636308480000000

    assert ex.classify_formula("(p & !p) -> q") == "tautology"
    assert ex.equivalent("!(p & q)", "!p | !q")
    atoms, rows = ex.truth_table("p -> q")
    assert atoms == ["p", "q"] and [r for _, r in rows] == [True, False, True, True]

    a = ex.Matrix("7 -4; 3 4")
    assert a.det() == 40 and a.det("laplace") == 40
    c = ex.Matrix([[-1, 0, -2], [0, 2, 1], [1, -1, 2]])
    assert c.inverse() == ex.Matrix("-5 -2 -4; -1 0 -1; 2 1 2")
    assert (c @ c.inverse()) == ex.Matrix.identity(3)
    assert ex.Matrix("2 -3; 0 1").inverse().tolist() == [[Fraction(1, 2), Fraction(3, 2)], [0, 1]]
    try:
        ex.Matrix("2 -3; -4 6").inverse()
        raise AssertionError("singular matrix inverted")
    except ex.ExactaError as e:
        assert "singular" in str(e)
    try:
        ex.Matrix("1 2; 3")
        raise AssertionError("ragged matrix accepted")
    except ex.ParseError:
        pass
    assert ex.Matrix("2 3 -1 4; 5 -3 8 19; 1 -2 3 5").rank() == 2

    fam = ex.solve("1 1 1 | 3; 2 3 -1 | 4; 1 2 -2 | 1; 3 5 -3 | 5")
    assert fam["verdict"] == "infinite"
    assert fam["particular"] == [5, -2, 0] and fam["directions"] == [[-4, 3, 1]]
    for method in ("gauss", "cramer", "inverse"):
        assert ex.solve("1 1 1 | 3; 2 3 -1 | 4; -1 2 1 | 2; 3 1 -3 | 1", method)["x"] == [1, 1, 1]

    z = ex.Complex("3+4i") * ex.Complex(2, -5)
    assert (z.re, z.im) == (26, -7)
    assert ex.Complex("-1-i") ** 80 == ex.Complex(2**40)
    angles = [theta for _, theta in ex.Complex("1-i").roots(3)]
    assert all(abs(t - k * 3.141592653589793 / 12) < 1e-9 for t, k in zip(angles, (7, 15, 23)))

    p = ex.Plane.through(ex.Vec3(1, 1, 0), ex.Vec3(-2, 0, 4), ex.Vec3(2, 3, -1))
    assert str(p) == "7x - y + 5z - 6 = 0"
    assert ex.Plane(str(p)) == p
    assert ex.Plane(2, -1, -2, 5).distance_sq(ex.Vec3(0, 6, 4)) == 9
    line = ex.Plane("2 -1 -1 -4").intersect(ex.Plane("2 -3 -2 7"))
    assert line.direction == ex.Vec3(-1, 2, -4)
    hit = ex.Line("(x-1)/3 = (y-2)/-2 = (z-3)/1").meet(ex.Plane(6, -4, 2, 7))
    assert hit.components() == [Fraction(-5, 28), Fraction(78, 28), Fraction(73, 28)]
    assert ex.Vec3(1, 0, 0).mixed(ex.Vec3(0, 1, 0), ex.Vec3(0, 0, 1)) == 1

    assert ex.mixture(48, 78, 60, 10) == (6, 4)
    assert ex.star_scheme([160, 140, 110, 50], 120, 560) == [280, 40, 80, 160]
    assert ex.split(198, [1, 2, 3, 5]) == [18, 36, 54, 90]
    assert ex.split("1/2", [Fraction(1, 3), 1]) == [Fraction(1, 8), Fraction(3, 8)]

    assert ex.run_cli(["nt", "gcd", "252", "198"]) == (0, "18\n", "")
    code, _, err = ex.run_cli(["mat", "inverse", "-"], stdin="2 -3\n-4 6\n")
    assert code == 1 and "singular matrix" in err

    print("python smoke test: ok")


if __name__ == "__main__":
    sys.exit(main())
