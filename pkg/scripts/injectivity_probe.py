"""Look for two reduced roots of H(m) sharing a crossing-word reflection.

Prints one line per m; any colliding pairs are listed underneath.
"""

import argparse
import time
from dataclasses import dataclass, field

from rigidroots.verify import image_census


@dataclass
class ProbeConfig:
    ms: list[int] = field(default_factory=lambda: [3, 4, 5, 6])
    bound: int = 60


def main(cfg: ProbeConfig) -> int:
    total = 0
    for m in cfg.ms:
        t0 = time.perf_counter()
        n_roots, n_images, collisions = image_census(m, cfg.bound)
        total += len(collisions)
        print(f"m={m} bound={cfg.bound} roots={n_roots} images={n_images} "
              f"collisions={len(collisions)} ({time.perf_counter() - t0:.1f}s)")
        for u, v in collisions:
            print(f"    {u} ~ {v}")
    return total


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ms", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--bound", type=int, default=60)
    a = ap.parse_args()
    main(ProbeConfig(a.ms, a.bound))
