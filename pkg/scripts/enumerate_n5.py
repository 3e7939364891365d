"""Enumerate the 6942 topologies on five points, cache them and rerun the diagram."""

import argparse
import time
from dataclasses import dataclass

from idealtop.search import load_or_build, verify_diagram


@dataclass
class Config:
    n: int = 5
    cache: str | None = None
    diagram: bool = True


def main(cfg: Config) -> None:
    start = time.perf_counter()
    cache = load_or_build(cfg.n, cfg.cache)
    print(f"{len(cache.spaces)} topologies on {cfg.n} points, checksum {cache.checksum[:16]}, "
          f"{time.perf_counter() - start:.2f}s")
    if cfg.diagram:
        print(verify_diagram(cfg.n).to_text())


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--cache")
    p.add_argument("--no-diagram", action="store_true")
    a = p.parse_args()
    main(Config(a.n, a.cache, not a.no_diagram))
