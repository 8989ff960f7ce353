"""Write DOT files for the basic medads, a grouped arm and the joined molecules.

    python scripts/render_figures.py --out-dir build/figures
    dot -Tsvg build/figures/triad_medad.dot > triad_medad.svg   # if graphviz is around
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from mdt.formats import to_dot
from mdt.notation import parse_term
from mdt.rewriting import insert_triad, make_group, triad_join


@dataclass
class Config:
    out_dir: str = "build/figures"


def figures():
    yield "monad_pair", parse_term("M(M)")
    yield "dyad_medad", parse_term("D(M,M)")
    yield "triad_medad", parse_term("T(M,M,M)")
    arm = parse_term("T(M,M,_)")
    yield "grouped_arm", make_group(arm, arm.elements)
    mdm = parse_term("D(M,M)")
    dyad_arm = insert_triad(mdm, mdm.sorted_bonds()[0])
    yield "triad_of_dyads", triad_join(dyad_arm, dyad_arm, dyad_arm)
    yield "triad_of_triads", triad_join(arm, arm, arm)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default=Config.out_dir)
    cfg = Config(**vars(parser.parse_args(argv)))
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, m in figures():
        path = out / f"{name}.dot"
        path.write_text(to_dot(m), encoding="utf-8")
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
