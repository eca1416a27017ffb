"""Open system: preserve a commanded spike pattern under disturbance.

A pulse train v commands spikes from the plant while the oscillator keeps
injecting disturbance events.  A reference copy of the unperturbed plant
(also driven by v) defines the target behavior; the controller works on the
error y - y_r.  With every subsystem parameter deliberately mistuned the
tracking error stays visibly nonzero, yet the plant fires exactly the
commanded spike pattern: event-level behavior survives model mismatch.
"""

from pathlib import Path

from eventreg import run_scenario

OUT = Path(__file__).parent / "out"


def main():
    result = run_scenario("open-system", out_dir=OUT)
    m = result.metrics
    match = m["pattern_match"]
    print(f"commanded spikes (reference, full run): {m['spike_counts']['y_r']}")
    print(f"plant spikes (full run):                {m['spike_counts']['y']}")
    print(f"pattern matched within jitter {match['jitter_tol']}: {match['matched']}")
    offsets = ", ".join(f"{o:.2f}" for o in match["offsets"][:6])
    print(f"first spike-time offsets: {offsets} ...")
    print(f"tail max|y - y_r| = {m['tracking_error']['max_abs']:.3f}  (nonzero)")
    print(f"plot: {result.plot_path}")


if __name__ == "__main__":
    main()
