"""Smoke tests for the python bindings; runs standalone or under pytest."""

import json
import math

import theta_asym as ta


def test_eta_reference():
    v = ta.eval_eta(1j)
    assert abs(v - 0.76822542232605666) < 1e-14


def test_constants():
    c = ta.constants(ta.make_E1())
    assert abs(c.lambda2 - 25.0 / 12.0) < 1e-15
    assert c.window_ok
    c2 = ta.constants(ta.make_E2())
    assert abs(c2.lambda2 - 47.0 / 12.0) < 1e-15


def test_poles_and_pv():
    assert ta.locate_poles(ta.make_E1()) == [0.5]
    v, err = ta.fm_pv(ta.make_E1(), 1.0, 0.3j)
    assert abs(v - (-0.9920011363769396j)) < 5e-9
    assert err < 1e-10


def test_crank_roundtrip():
    counts = ta.crank_counts(8)
    assert sum(counts.values()) == ta.partition_count(8) == 22
    rec = ta.crank_extract(2.0, 8)
    assert round(rec.value.value().real) == counts[2]


def test_leading_factor():
    E1 = ta.make_E1()
    eps = math.pi * math.sqrt(2.0 / 400)
    q = ta.eval_quotient(E1, 0.13, 1j * eps / (2 * math.pi))
    lf = ta.leading_factor(E1, 0.13, eps)
    assert abs(q / lf - 1.0) < 1e-8


def test_experiment_and_properties_api():
    rows = ta.run_experiment(json.dumps({
        "fixture": "crank",
        "n_grid": [4],
        "m_values": [0],
        "kernel": "exp",
    }))
    assert len(rows) == 1
    assert not rows[0]["failed"]
    assert abs(rows[0]["abs_ratio"] - 1.0) < 1e-6


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for fn in tests:
        fn()
        print(f"ok {fn.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
