"""Open three medads with a triad each, then join the arms with a fourth triad.

    python scripts/triad_join_pipeline.py --medad "D(M,M)" --out-dir build/pipeline
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from mdt.formats import to_dot
from mdt.graph import free_ends, is_medad
from mdt.notation import parse_term, print_decl
from mdt.rewriting import insert_triad, triad_join


@dataclass
class Config:
    medad: str = "D(M,M)"
    bond: int = 0  # which bond, in sorted order, receives the triad
    out_dir: str = ""


def run(cfg: Config):
    arms = []
    for _ in range(3):
        m = parse_term(cfg.medad)
        bonds = m.sorted_bonds()
        arm = insert_triad(m, bonds[cfg.bond % len(bonds)])
        arms.append(arm)
        print(f"arm: {arm.counts()} free ends {[str(p) for p in free_ends(arm)]}")
    joined = triad_join(*arms)
    monads, dyads, triads = joined.counts()
    print(f"joined: monads={monads} dyads={dyads} triads={triads} bonds={len(joined.bonds)} medad={is_medad(joined)}")
    return arms, joined


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--medad", default=Config.medad, help="term for each starting medad")
    parser.add_argument("--bond", type=int, default=Config.bond)
    parser.add_argument("--out-dir", default=Config.out_dir, help="write decl and DOT files here")
    cfg = Config(**vars(parser.parse_args(argv)))
    arms, joined = run(cfg)
    if cfg.out_dir:
        out = Path(cfg.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "arm.dot").write_text(to_dot(arms[0]), encoding="utf-8")
        (out / "joined.decl").write_text(print_decl(joined), encoding="utf-8")
        (out / "joined.dot").write_text(to_dot(joined), encoding="utf-8")
    return 0 if is_medad(joined) else 1


if __name__ == "__main__":
    sys.exit(main())
