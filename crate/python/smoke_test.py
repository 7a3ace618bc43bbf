"""Smoke test for the `locoh` Python extension.

Builds the extension with cargo (unless LOCOH_LIB points at a built
library), loads it from a temporary directory and exercises the API.

    python3 python/smoke_test.py
"""

import importlib
import os
import shutil
import subprocess
import sys
import sysconfig
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def built_library() -> Path:
    override = os.environ.get("LOCOH_LIB")
    if override:
        return Path(override)
    subprocess.run(
        ["cargo", "build", "--release", "-p", "locoh-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    for name in ("liblocoh_py.so", "liblocoh_py.dylib", "locoh_py.dll"):
        path = ROOT / "target" / "release" / name
        if path.exists():
            return path
    sys.exit("built library not found under target/release")


def load(lib: Path, into: Path):
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy(lib, into / f"locoh{suffix}")
    sys.path.insert(0, str(into))
    return importlib.import_module("locoh")


def check(locoh) -> None:
    t3 = locoh.tau(3)
    assert str(t3) == "-t^3-s*t^2-s^2*t-s^3", t3
    assert locoh.det_b(3) == t3
    assert locoh.det_b(1, "fp:2") == locoh.Poly("t+s", "fp:2")

    s, t = locoh.Poly("s"), locoh.Poly("t")
    assert (s + t) * (s * s + t * t) == -t3
    assert (t3 * t).exact_divide(t) == t3
    assert t3.exact_divide(s) is None
    assert (s - t) ** 2 == locoh.Poly("s^2-2*s*t+t^2")
    assert t3.degree == 3 and t3.field == "q"

    assert locoh.build_b(2) == [["-t-s", "t"], ["s", "-t-s"]]
    assert len(locoh.build_a(3)) == 3 and len(locoh.build_a(3)[0]) == 5
    assert len(locoh.build_m(6)) == 7

    unit, factors = locoh.factor_tau(3)
    assert unit == "-1" and factors == [("t+s", 1), ("t^2+s^2", 1)]

    growth = locoh.accumulate_distinct(list(range(1, 21)))
    assert growth["cumulative"][-1] == 20
    growth = locoh.accumulate_distinct([1, 7, 25], "fp:3", 1)
    assert growth["cumulative"] == [1, 4, 12] and growth["strictly_increasing"]

    sep = locoh.separability_check(7, 1)
    assert sep["squarefree"] and sep["gcd"] == "1" and sep["index"] == 5

    w = locoh.torsion_witness(3)
    assert w["solution"] == ["-t-s", "-s"] and w["nonmembership_index"] == 1
    assert locoh.prime_witnesses(4) == ["t+s", "t^2+s^2"]

    c = locoh.component_t(8, 9)
    assert c["case"] == "at_n_plus_1" and c["relations"] == locoh.build_b(6)
    g = locoh.theorem2_growth([6, 8, 10])
    assert g["cumulative"] == [1, 2, 4]

    try:
        locoh.tau(0)
    except ValueError:
        pass
    else:
        raise AssertionError("tau(0) should raise")
    try:
        locoh.Poly("s", "fp:4")
    except ValueError:
        pass
    else:
        raise AssertionError("fp:4 should raise")

    assert locoh.run_cli(["frobenius", "--n-set", "5"]) == 2


def main() -> None:
    lib = built_library()
    with tempfile.TemporaryDirectory() as tmp:
        locoh = load(lib, Path(tmp))
        check(locoh)
    print(f"python smoke test passed (locoh {locoh.__version__})")


if __name__ == "__main__":
    main()
