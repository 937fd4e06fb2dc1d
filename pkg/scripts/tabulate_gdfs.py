"""Build every universal formula up to a given order and summarize its collapse.

Writes one JSON document per formula into --out-dir and prints a table of
signed term counts, collapsed term counts and coefficient sign counts.
"""
import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from kgdf.gdf import build_A_jones, build_A_kl, gdf_document, sign_multiset, unsigned_collapse


@dataclass
class TabulateConfig:
    max_order: int = 3
    out_dir: Path = Path("gdf_tables")
    jones: bool = True


def formulas(cfg: TabulateConfig):
    for n in range(cfg.max_order + 1):
        for k in range(n, -1, -1):
            yield f"A{k},{n - k}", lambda k=k, l=n - k: build_A_kl(k, l)
    if cfg.jones:
        for model in ("homfly", "kauffman"):
            for k in range(2, cfg.max_order + 1):
                yield f"A{k}_{model}", lambda m=model, k=k: build_A_jones(m, k)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=TabulateConfig.max_order)
    ap.add_argument("--out-dir", type=Path, default=TabulateConfig.out_dir)
    ap.add_argument("--no-jones", action="store_true")
    a = ap.parse_args()
    cfg = TabulateConfig(a.max_order, a.out_dir, not a.no_jones)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)

    print(f"{'formula':<16}{'signed':>8}{'collapsed':>11}{'+':>6}{'-':>6}{'sec':>8}")
    for name, build in formulas(cfg):
        t0 = time.perf_counter()
        F = build()
        U = unsigned_collapse(F)
        dt = time.perf_counter() - t0
        signs = sign_multiset(U)
        print(f"{name:<16}{len(F):>8}{len(U):>11}{signs.get(1, 0):>6}{signs.get(-1, 0):>6}{dt:>8.2f}")
        fname = name.replace(",", "_") + ".json"
        (cfg.out_dir / fname).write_text(json.dumps(gdf_document(name, F), indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
