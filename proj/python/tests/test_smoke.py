import math

import numpy as np
import pytest

import lottery


def test_solve_example():
    r = lottery.solve_subset_sum([0.3, -0.2, 0.7], 0.5, 0.01)
    assert r["indices"] == [1, 2]
    assert r["feasible"]
    assert r["abs_error"] == pytest.approx(0.0, abs=1e-12)


def test_capacity_error():
    with pytest.raises(lottery.CapacityError):
        lottery.solve_subset_sum([0.1] * 47, 0.3, 0.01)
    assert issubclass(lottery.CapacityError, lottery.Error)


def test_distribution_roundtrip():
    d = lottery.Distribution("product_uniform")
    assert d.pdf(0.5) == pytest.approx(0.5 * math.log(2))
    assert d.cdf(0.0) == pytest.approx(0.5)
    xs = d.sample(1000, 3)
    assert all(-1 <= x <= 1 for x in xs)
    with pytest.raises(lottery.ValidationError):
        lottery.Distribution("cauchy")


def test_network_json_and_forward():
    net = lottery.Network([np.array([[1.0], [-1.0]]), np.array([[1.0, 1.0]])])
    assert net.widths == [1, 2, 1]
    assert net([-0.7]) == pytest.approx([0.7])
    back = lottery.Network.from_json(net.to_json())
    assert back == net
    np.testing.assert_array_equal(back.layers[0], [[1.0], [-1.0]])


def test_width_plan_and_bounds():
    plan = lottery.width_plan([10, 10, 10], 0.1, 0.1, 10.0)
    assert plan["random_widths"][1] == 10 * plan["block_sizes"][0]
    assert lottery.lower_bound_min_width(10, 0.005) == pytest.approx(33.169, abs=1e-3)
    assert lottery.composition_error_bound(0.025, 2) == pytest.approx(0.050625)


def test_prune_small_network():
    target, _ = lottery.normalize(lottery.random_network([3, 3, 3], lottery.Distribution("uniform"), 4))
    rand, masks, report = lottery.prune(target, 0.1, 0.1, c=3.0, seed=1, samples=500)
    assert len(masks) == 2 * target.depth
    assert report["measured_sup_error"] <= report["achieved_bound"] + 1e-9
    err = lottery.sup_error(target, rand, masks, samples=500, seed=1)
    assert err >= 0


def test_coverage_monotone():
    d = lottery.Distribution("uniform")
    lo = lottery.coverage_probability(d, 6, 0.05, trials=50, seed=2)["prob"]
    hi = lottery.coverage_probability(d, 14, 0.05, trials=50, seed=2)["prob"]
    assert lo <= hi
