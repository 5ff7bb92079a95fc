"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""
import math
import time

import mpmath
import numpy as np

from grover_phase import (
    ComplexPair,
    PolarForm,
    apply_step,
    first_step_argmax,
    from_polar,
    hadamard_init,
    iteration_matrix,
    optimal_phase_general,
    optimal_phase_real,
    phi_max_closed_form,
    polar_decompose,
    region_boundaries,
    target_probability_closed_form,
    threshold_probability,
)
from grover_phase import cli
from grover_phase.experiments import SweepSpec, sweep, trajectory

from oracles import direct_prob, scan_real


def test_c01_first_step_is_pi(criterion):
    t0 = time.perf_counter()
    worst = 0.0
    for q in range(2, 21):
        n = 2**q
        res = optimal_phase_general(n, polar_decompose(hadamard_init(n)))
        worst = max(worst, abs(math.cos(res.phi_opt) + 1))
    dt = time.perf_counter() - t0
    criterion("C1 first step optimal phase is pi for N=4..2^20", worst <= 1e-8 and dt < 1,
              f"max |cos phi + 1| = {worst:.3g}, {dt:.2f}s")


def test_c02_two_element_exception(criterion):
    u_star = first_step_argmax(2)
    res = optimal_phase_general(2, polar_decompose(hadamard_init(2)))
    worst = max(abs(u_star), abs(math.cos(res.phi_opt)))
    criterion("C2 N=2 first step maximizer u* = 0", worst <= 1e-8,
              f"u* = {u_star}, cos(phi_opt) = {math.cos(res.phi_opt):.3g}")


def test_c03_closed_form_equivalence(criterion):
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(10_000):
        n = int(rng.integers(2, 2**20 + 1))
        p = PolarForm(rng.uniform(0, math.pi / 2), rng.uniform(-math.pi, math.pi))
        phi = rng.uniform(-math.pi, math.pi)
        v = from_polar(p)
        ref = float(direct_prob(n, phi, v.v_tau, v.v_a))
        worst = max(worst, abs(target_probability_closed_form(n, phi, p) - ref))
    dt = time.perf_counter() - t0
    criterion("C3 closed-form probability equals direct evaluation", worst <= 1e-10 and dt < 5,
              f"max diff = {worst:.3g} over 1e4 samples, {dt:.2f}s")


def test_c04_region_rule_matches_dense_scan(criterion):
    t0 = time.perf_counter()
    rng = np.random.default_rng(41)
    worst = 0.0
    for _ in range(10_000):
        n = int(round(math.exp(rng.uniform(math.log(2), math.log(2**20)))))
        alpha = rng.uniform(0.01, math.pi / 2 - 0.01)
        p_ref, _ = scan_real(n, alpha, points=8192)
        worst = max(worst, abs(optimal_phase_real(n, alpha).p_opt - p_ref))
    dt = time.perf_counter() - t0
    criterion("C4 region closed form matches 8192-point scan", worst <= 1e-8 and dt < 30,
              f"max |P_rule - P_scan| = {worst:.3g} over 1e4 samples, {dt:.2f}s")


def _threshold_mp(n):
    with mpmath.workdps(50):
        n = mpmath.mpf(n)
        return (1 + (n - 6) / mpmath.sqrt(n * n - 8 * n + 32)) / 2


def test_c05_threshold(criterion):
    p4, p6, p1024 = threshold_probability(4), threshold_probability(6), threshold_probability(1024)
    ref1024 = _threshold_mp(1024)
    worst_low = max(
        abs(math.sin(region_boundaries(n)[0]) ** 2 - threshold_probability(n)) for n in range(2, 1025)
    )
    ok = (
        abs(p4 - 0.25) <= 1e-15
        and p6 == 0.5
        and abs(p1024 - float(ref1024)) <= 1e-7
        and worst_low <= 1e-12
    )
    criterion("C5 threshold probability values and boundary identity", ok,
              f"P_r(4)={p4!r} P_r(6)={p6!r} P_r(1024)={p1024!r} (ref {mpmath.nstr(ref1024, 20)}), "
              f"max |sin^2(low) - P_r| = {worst_low:.3g}")


def _extended_angle(rec):
    # angle x with state (sin x, cos x) up to global sign; theta = pi folds x past pi/2
    return math.pi - rec.alpha if abs(rec.theta) > math.pi / 2 else rec.alpha


def _phase_gap(phi):
    return abs(math.remainder(phi - math.pi, 2 * math.pi))


def test_c06_trajectory_threshold(criterion):
    t0 = time.perf_counter()
    n = 2**10
    p_r = threshold_probability(n)
    low, _ = region_boundaries(n)
    recs = list(trajectory(n, "optimal", 2 * math.floor(math.pi / 4 * math.sqrt(n))))
    below = [r for r in recs if r.p_target < p_r]
    pi_below = max(_phase_gap(r.phi_used) for r in below)
    first_dev = next(r.step for r in recs if _phase_gap(r.phi_used) > 1e-6)
    first_out = next(r.step for r in recs if _extended_angle(r) > low)
    dt = time.perf_counter() - t0
    ok = pi_below <= 1e-6 and first_dev == first_out and dt < 1
    criterion("C6 optimal trajectory keeps phi = pi below P_r and first deviates on leaving R1", ok,
              f"{len(below)} steps below P_r, max |phi - pi| = {pi_below:.3g}; first non-pi step {first_dev}, "
              f"first step past boundary_low {first_out} (alpha={recs[first_dev].alpha:.6f}, "
              f"theta={recs[first_dev].theta:.3f}); {dt:.2f}s")


def test_c06b_trajectory_enters_interior_region(criterion):
    # sizes where a classical step lands strictly inside the interior region;
    # theta there is ~1e-17 rather than 0, so the sign of phi is arbitrary
    results = []
    for n in (16, 132, 1182):
        low, high = region_boundaries(n)
        recs = list(trajectory(n, "optimal", 2 * math.floor(math.pi / 4 * math.sqrt(n))))
        first_dev = next(r for r in recs if _phase_gap(r.phi_used) > 1e-6)
        inside = first_dev.region == "R2" and low < first_dev.alpha < high
        ok_phi = abs(abs(first_dev.phi_used) - phi_max_closed_form(n, first_dev.alpha)) <= 1e-6
        prior_ok = all(r.region == "R1" for r in recs[: first_dev.step])
        results.append((n, first_dev.step, inside and ok_phi and prior_ok))
    criterion("C6b first non-pi step lands in R2 with the closed-form phase", all(r[2] for r in results),
              ", ".join(f"N={n}: step {s} {'ok' if ok else 'BAD'}" for n, s, ok in results))


def test_c07_classical_trajectory(criterion):
    t0 = time.perf_counter()
    worst = 0.0
    for n in (4, 64, 2**10):
        beta = math.asin(1 / math.sqrt(n))
        k_max = math.floor(math.pi / 4 * math.sqrt(n))
        for r in trajectory(n, "classical", k_max):
            worst = max(worst, abs(r.p_target - math.sin((2 * r.step + 1) * beta) ** 2))
    dt = time.perf_counter() - t0
    criterion("C7 classical trajectory equals sin^2((2k+1) beta)", worst <= 1e-10 and dt < 1,
              f"max diff = {worst:.3g}, {dt:.2f}s")


def test_c08_statevector_reduction(criterion, capsys):
    t0 = time.perf_counter()
    code = cli.main(["verify", "--qubits", "10", "--samples", "100", "--seed", "1"])
    out = capsys.readouterr().out
    dt = time.perf_counter() - t0
    disc = float(next(line for line in out.splitlines() if line.startswith("max_discrepancy=")).split("=")[1])
    criterion("C8 full statevector run agrees with the reduced map", code == 0 and disc <= 1e-10 and dt < 60,
              f"exit {code}, max discrepancy = {disc:.3g}, {dt:.2f}s")


def test_c09_sweep_properties(criterion):
    rows = list(sweep(SweepSpec(2**10, 100, 100)))
    worst_neg = min(r.improvement for r in rows)
    theta0 = [r.improvement for r in rows if r.theta == 0.0 and 0.1 < r.alpha < math.pi / 2 - 0.1]
    best = max(rows, key=lambda r: r.improvement)
    ok = (
        len(rows) == 10_000
        and worst_neg >= -1e-12
        and theta0
        and max(theta0) <= 1e-6
        and abs(best.theta) > math.pi / 2
        and all(-math.pi <= r.phi_opt <= math.pi for r in rows)
    )
    criterion("C9 sweep improvement properties at N=2^10", ok,
              f"min improvement = {worst_neg:.3g}, max on theta=0 interior ({len(theta0)} cells) = "
              f"{max(theta0):.3g}, argmax at alpha={best.alpha:.4f} theta={best.theta:.4f} "
              f"(improvement {best.improvement:.4f})")


def test_c10_real_vectors_stay_real(criterion):
    rng = np.random.default_rng(10)
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(2, 2**20 + 1))
        x = rng.normal(size=2)
        v = apply_step(iteration_matrix(n, math.pi), ComplexPair.from_array(x / np.linalg.norm(x)))
        worst = max(worst, abs(v.v_tau.imag), abs(v.v_a.imag))
    criterion("C10 phase pi keeps real vectors real", worst <= 1e-14, f"max |imag| = {worst:.3g}")
