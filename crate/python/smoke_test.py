"""Smoke test for the Python bindings.

Builds the extension with cargo if needed, imports it from a scratch
directory and runs one construction and a few checks.
"""

import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    subprocess.run(["cargo", "build", "-p", "lie2bialg-py"], cwd=ROOT, check=True)
    lib = ROOT / "target" / "debug" / "liblie2bialg_py.so"
    scratch = pathlib.Path(tempfile.mkdtemp())
    shutil.copy(lib, scratch / "lie2bialg_py.so")
    sys.path.insert(0, str(scratch))
    import lie2bialg_py

    return lie2bialg_py


def main():
    m = load_module()
    assert m.catalog_names() == ["1d", "A1", "A2", "A3", "A4", "N1", "N2", "N3", "N4", "N5", "N6"]

    n3 = json.loads(m.catalog_export("N3"))
    assert n3["kind"] == "prelie" and n3["dimension"] == 2

    built = m.build("from-prelie", catalog="N3", d=["a=1"])
    assert json.loads(built)["kind"] == "bialgebra"
    for suite in ["bialgebra", "lie2", "master"]:
        report = json.loads(m.check(built, suite))
        assert report["passed"], (suite, report)

    double = json.loads(m.build("double", document=built))
    dims = double["algebra"]["dimensions"]
    assert dims["g0"] + dims["g_minus1"] == 8
    assert json.loads(m.check(json.dumps(double), "manin"))["passed"]

    try:
        m.check('{"schema_version": 1, "kind": "prelie", "dimension": 1, "extra": 1}', "prelie")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown field accepted")

    try:
        m.build("from-prelie", catalog="N3", d=["a=1"], param="2")
    except ValueError:
        pass
    else:
        raise AssertionError("parameter accepted for N3")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
