"""Search for the separating examples between neighbouring axioms."""

import argparse
from dataclasses import dataclass, field

from idealtop.search import SearchQuery, search


@dataclass
class Config:
    max_n: int = 4
    queries: list[tuple[list[str], list[str]]] = field(default_factory=lambda: [
        (["T0"], ["T_HALF"]),
        (["T_HALF"], ["T1"]),
        (["T_IDEAL(NWD)"], ["NODEC"]),
        (["T_IDEAL"], ["T_HALF"]),
        (["RESOLVABLE"], ["I_RESOLVABLE"]),
        ([], ["BETA_TOPOLOGY"]),
        ([], ["T_EMPTY"]),
    ])


def main(cfg: Config) -> None:
    for satisfy, violate in cfg.queries:
        res = search(SearchQuery(satisfy, violate, max_n=cfg.max_n))
        title = f"satisfy {satisfy or '-'}, violate {violate}"
        scanned = sum(res.scanned.values())
        if res.found is None:
            print(f"{title}: none up to n={cfg.max_n} ({scanned} inputs)")
        else:
            print(f"{title}: found after {scanned} inputs")
            print("  " + res.found.describe().replace("\n", "\n  "))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    main(Config(max_n=p.parse_args().max_n))
