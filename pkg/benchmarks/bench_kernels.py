#!/usr/bin/env python3
"""Numba vs numpy timings for the three inner-loop kernels.

Usage:
    python3 benchmarks/bench_kernels.py [--repeat 5]

Both paths are called explicitly through ``use_numba=``, so the
THERMOGRID_NUMBA flag does not matter here. The first numba call (compile,
or load from the on-disk cache) is reported separately.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from thermogrid import _accel, kernels
from thermogrid.baseline import injections, simulate_uncontrolled
from thermogrid.data import bundled_scenario_path
from thermogrid.ders import HP
from thermogrid.scenario import load_scenario


def _best(fn, repeat: int) -> float:
    best = np.inf
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    sc = load_scenario(bundled_scenario_path())
    net = sc.network
    unc = simulate_uncontrolled(sc)
    p, q = injections(sc, unc.der_p, unc.der_q)
    arrs = kernels.network_arrays(net)
    v0 = np.full(p.shape[0], net.root_voltage**2)

    hps = sc.ders_of(HP)
    blds = [sc.buildings[d.id] for d in hps]
    th_args = (kernels.params_arrays([b.params for b in blds]), [b.q_hp_max for b in blds],
               [b.init.T_in for b in blds], [b.init.T_e for b in blds], sc.ambient, sc.irradiance,
               sc.horizon.H * 3600.0, sc.options.thermostat.setpoint, sc.options.thermostat.deadband)
    u = np.random.default_rng(0).uniform(0, 60, 100_000)

    cases = {
        f"sweep ({p.shape[0]} snapshots, {net.n_bus} buses)":
            lambda use: kernels.sweep(arrs, p, q, v0, 1e-10, 500, use),
        f"thermostat ({len(blds)} buildings, {sc.horizon.n_steps} steps)":
            lambda use: kernels.thermostat(*th_args, use_numba=use),
        "first-order filter (100k steps)":
            lambda use: kernels.first_order(u, 0.0, 0.85, use),
    }
    print(f"numba available: {_accel.HAVE_NUMBA}, default path: {'numba' if _accel.USE_NUMBA else 'numpy'}")
    print(f"{'kernel':<44} {'first':>9} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for name, fn in cases.items():
        t = time.perf_counter()
        a = fn(True)
        first_s = time.perf_counter() - t
        b = fn(False)
        for x, y in zip(a if isinstance(a, tuple) else (a,), b if isinstance(b, tuple) else (b,)):
            np.testing.assert_allclose(x, y, rtol=1e-9, atol=1e-9)
        tn = _best(lambda: fn(True), args.repeat)
        tp = _best(lambda: fn(False), args.repeat)
        print(f"{name:<44} {first_s:9.3f} {tn * 1e3:9.2f}ms {tp * 1e3:9.2f}ms {tp / tn:7.1f}x")


if __name__ == "__main__":
    main()
