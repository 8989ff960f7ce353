"""Tabulate molecule counts by element counts, optionally cross-checked against the oracle.

    python scripts/medad_count_table.py --max-ports 10 --medads --check
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass, fields

from mdt.enumeration import DEFAULT_CAP, ORACLE_CAP, all_specs, enumerate_molecules, pairing_oracle


@dataclass
class Config:
    max_ports: int = 10
    medads: bool = True
    connected: bool = False
    check: bool = False  # rerun each row through the pairing oracle


def parse_args(argv=None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(Config):
        flag = "--" + f.name.replace("_", "-")
        if f.type is bool or f.type == "bool":
            parser.add_argument(flag, action=argparse.BooleanOptionalAction, default=f.default)
        else:
            parser.add_argument(flag, type=int, default=f.default)
    return Config(**vars(parser.parse_args(argv)))


def main(argv=None) -> int:
    cfg = parse_args(argv)
    if cfg.max_ports > DEFAULT_CAP or (cfg.check and cfg.max_ports > ORACLE_CAP):
        print(f"max-ports above the cap ({DEFAULT_CAP}, or {ORACLE_CAP} with --check)", file=sys.stderr)
        return 2
    out = csv.writer(sys.stdout)
    out.writerow(["monads", "dyads", "triads", "ports", "classes"] + (["oracle", "seconds"] if cfg.check else []))
    mismatches = 0
    for spec in all_specs(cfg.max_ports, cfg.medads, cfg.connected):
        row = [spec.monads, spec.dyads, spec.triads, spec.ports, len(enumerate_molecules(spec))]
        if cfg.check:
            start = time.perf_counter()
            oracle = len(pairing_oracle(spec))
            row += [oracle, f"{time.perf_counter() - start:.2f}"]
            mismatches += oracle != row[4]
        out.writerow(row)
    if cfg.check:
        print(f"# mismatches: {mismatches}", file=sys.stderr)
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
