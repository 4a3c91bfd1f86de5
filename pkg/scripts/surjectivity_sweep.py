"""Reduce every vector of P+ in a box and compare crossing-word reflections.

    python scripts/surjectivity_sweep.py --ms 2 3 4 5 --bound 200 --out reports/
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from rigidroots.verify import run_check


@dataclass
class SweepConfig:
    ms: list[int] = field(default_factory=lambda: [2, 3, 4, 5])
    bound: int = 200
    census_bound: int = 60
    workers: int = 1
    out: Path | None = None


def run(cfg: SweepConfig) -> bool:
    ok = True
    for m in cfg.ms:
        rep = run_check(m, cfg.bound, workers=cfg.workers, census_bound=cfg.census_bound)
        print(
            f"m={m:2d} vectors={rep.pairs_checked:6d} steps={rep.steps_checked:6d} "
            f"failures={len(rep.surjectivity_failures)} descent={len(rep.descent_violations)} "
            f"both_valid={rep.both_valid_events} disagree={len(rep.policy_disagreements)} "
            f"roots={rep.reduced_roots} images={rep.image_size} "
            f"collisions={len(rep.collisions)} {rep.elapsed:.1f}s"
        )
        if cfg.out is not None:
            cfg.out.mkdir(parents=True, exist_ok=True)
            (cfg.out / f"check_m{m}_b{cfg.bound}.json").write_text(rep.to_json() + "\n")
        ok &= rep.passed
    return ok


def parse(argv=None) -> SweepConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ms", type=int, nargs="+", default=[2, 3, 4, 5])
    ap.add_argument("--bound", type=int, default=200)
    ap.add_argument("--census-bound", type=int, default=60)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path, default=None)
    a = ap.parse_args(argv)
    return SweepConfig(a.ms, a.bound, a.census_bound, a.workers, a.out)


if __name__ == "__main__":
    sys.exit(0 if run(parse()) else 1)
