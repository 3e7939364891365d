"""Run every implication check and the diagram over all small topologies."""

import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from idealtop.search import verify_diagram, verify_paper


@dataclass
class Config:
    max_n: int = 4
    seed: int = 0
    out: str | None = None


def main(cfg: Config) -> int:
    report = verify_paper(cfg.max_n, seed=cfg.seed)
    diagram = verify_diagram(cfg.max_n)
    print(report.to_text())
    print(diagram.to_text())
    if cfg.out:
        doc = {"config": asdict(cfg), **report.to_dict(), "diagram": diagram.to_dict()}
        Path(cfg.out).write_text(json.dumps(doc, indent=2))
        print(f"wrote {cfg.out}")
    return 0 if report.holds and diagram.holds else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--out")
    a = p.parse_args()
    raise SystemExit(main(Config(a.max_n, a.seed, a.out)))
