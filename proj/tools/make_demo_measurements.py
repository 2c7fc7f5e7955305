#!/usr/bin/env python3
"""Regenerate data/measurements/canyon_demo.csv from the built CLI.

Every path-gain value in the demo file comes from `o2i predict --json`;
this script only assembles the CSV and computes 3-D tx-terminal ranges.

Usage: tools/make_demo_measurements.py [path/to/o2i]
"""
import json
import math
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
BINARY = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "build/tools/o2i"
SCENE = ROOT / "data/scenes/street_canyon.json"
OUT = ROOT / "data/measurements/canyon_demo.csv"

TX_SITES = {
    "tx1": (10.0, -16.0, 14.0),
    "tx2": (20.0, -20.0, 14.0),
    "tx3": (80.0, -8.0, 14.0),
    "tx4": (90.0, -10.0, 14.0),
}
# indoor aisle through the large north-side block, 2 m grid
POSITIONS = [(float(x), 6.0, 1.5) for x in range(2, 60, 2)]


def total_db(tx: str, pos: tuple[float, float, float]) -> float:
    cmd = [str(BINARY), "predict", str(SCENE), "--tx", tx, "--at",
           str(pos[0]), str(pos[1]), str(pos[2]), "--json"]
    res = subprocess.run(cmd, capture_output=True, text=True, check=True)
    for line in res.stdout.splitlines():
        rec = json.loads(line)
        if "total_db" in rec:
            return float(rec["total_db"])
    raise RuntimeError(f"no summary line from: {' '.join(cmd)}")


def main() -> None:
    OUT.parent.mkdir(parents=True, exist_ok=True)
    rows = ["subset,range_m,path_gain_db,x,y,z,tx_label"]
    for tx, (tx_x, tx_y, tx_z) in TX_SITES.items():
        for pos in POSITIONS:
            rng = math.dist((tx_x, tx_y, tx_z), pos)
            pg = total_db(tx, pos)
            rows.append(f"{tx}-aisle,{rng:.6f},{pg:.6f},"
                        f"{pos[0]:.6f},{pos[1]:.6f},{pos[2]:.6f},{tx}")
    OUT.write_text("\n".join(rows) + "\n")
    print(f"wrote {OUT} ({len(rows) - 1} records)")


if __name__ == "__main__":
    main()
