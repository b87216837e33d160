#!/usr/bin/env python3
"""MMRR vs static RR on seeded random workloads, plus a floor-sensitivity sweep.

The published comparison covers four hand-picked workloads; this checks how
often the ordering holds on random ones. Usage:

    python scripts/random_sweep.py --workloads 2000 --n 4 --floors 1,10,25,50
"""
import argparse
from statistics import mean

from mmrr.engine import SimConfig, run_simulation
from mmrr.metrics import aggregate
from mmrr.workload import generate_random_workload


def sweep(workloads, n, tq, floor, burst_range, arrival_range):
    wins = {"ATT": 0, "AWT": 0, "CS": 0}
    att_gap = []
    for seed in range(workloads):
        w = generate_random_workload(n, seed, burst_range, arrival_range)
        rr = aggregate(run_simulation(w, SimConfig("rr", static_quantum=tq)))
        mm = aggregate(run_simulation(w, SimConfig("mmrr", quantum_floor=floor)))
        wins["ATT"] += mm.att <= rr.att
        wins["AWT"] += mm.awt <= rr.awt
        wins["CS"] += mm.cs <= rr.cs
        att_gap.append(float(rr.att - mm.att))
    return {k: v / workloads for k, v in wins.items()}, mean(att_gap)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--workloads", type=int, default=1000)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--tq", type=int, default=20)
    ap.add_argument("--floors", default="25")
    ap.add_argument("--burst-max", type=int, default=200)
    ap.add_argument("--arrival-max", type=int, default=50)
    args = ap.parse_args()

    print(f"{'floor':>6} {'ATT<=RR':>8} {'AWT<=RR':>8} {'CS<=RR':>8} {'mean ATT gain':>14}")
    for floor in (int(f) for f in args.floors.split(",")):
        rates, gain = sweep(args.workloads, args.n, args.tq, floor, (1, args.burst_max), (0, args.arrival_max))
        print(f"{floor:>6} {rates['ATT']:>8.3f} {rates['AWT']:>8.3f} {rates['CS']:>8.3f} {gain:>14.2f}")


if __name__ == "__main__":
    main()
