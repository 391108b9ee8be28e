#!/usr/bin/env python3
"""Compiles the source fixtures into the archives the equivalence tests read.

    compile.py            rebuild every archive
    compile.py --check    rebuild into a temporary directory and compare

Archives:
  fixtures/compiled/<group>/<case>/v1.jar, v2.jar   benchmark/<group>/<case>/v1, v2
  fixtures/compiled/kitchen-sink.jar                fixtures/kitchen-sink/src
  fixtures/synthetic/synthetic.jar                  `cargo run --example gen_synthetic`

Archive entries are sorted and timestamped 1980-01-01 so rebuilding an
unchanged fixture reproduces the same bytes. Needs ecj and a Java runtime
(see scripts/bench/corpus.py).
"""

import argparse
import subprocess
import sys
import tempfile
import zipfile
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "bench"))
from corpus import ROOT, compile_tree  # noqa: E402


def jar(classes: Path, out: Path):
    out.parent.mkdir(parents=True, exist_ok=True)
    with zipfile.ZipFile(out, "w", zipfile.ZIP_DEFLATED) as z:
        for f in sorted(classes.rglob("*.class")):
            info = zipfile.ZipInfo(f.relative_to(classes).as_posix(), (1980, 1, 1, 0, 0, 0))
            info.compress_type = zipfile.ZIP_DEFLATED
            z.writestr(info, f.read_bytes())


def build(src: Path, out: Path):
    with tempfile.TemporaryDirectory() as tmp:
        r = compile_tree(src, Path(tmp))
        if r.returncode != 0:
            raise SystemExit(f"{src}: compilation failed\n{r.stdout}{r.stderr}")
        jar(Path(tmp), out)


def targets(dest: Path, synthetic_src: Path):
    for group in ("cases", "divergences"):
        for case in sorted((ROOT / "benchmark" / group).iterdir()):
            for v in ("v1", "v2"):
                yield case / v, dest / "compiled" / group / case.name / f"{v}.jar"
    yield ROOT / "fixtures/kitchen-sink/src", dest / "compiled/kitchen-sink.jar"
    yield synthetic_src, dest / "synthetic/synthetic.jar"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        synthetic = tmp / "synthetic-src"
        subprocess.run(
            ["cargo", "run", "-q", "--example", "gen_synthetic", "--", str(synthetic)],
            cwd=ROOT, check=True,
        )
        dest = tmp / "out" if args.check else ROOT / "fixtures"
        jobs = list(targets(dest, synthetic))
        with ThreadPoolExecutor() as pool:
            list(pool.map(lambda t: build(*t), jobs))
        if not args.check:
            print(f"{len(jobs)} archives")
            return 0
        stale = [
            str(out.relative_to(dest))
            for _, out in jobs
            if not (ROOT / "fixtures" / out.relative_to(dest)).exists()
            or (ROOT / "fixtures" / out.relative_to(dest)).read_bytes() != out.read_bytes()
        ]
        for s in stale:
            print(f"stale: fixtures/{s}")
        return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
