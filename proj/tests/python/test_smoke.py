import _renewalloc as ra


def paper_params():
    p = ra.Params()
    p.V = 100.0
    p.epsilon = 87.5
    p.x_max = 400.0
    p.a_max = 175.0
    p.s_max = 90.0
    p.gamma_max = 180.0
    return p


def test_derived_bounds_match_the_reported_constant():
    b = ra.derived_bounds(paper_params())
    assert b.D_max == 415
    assert b.Q_max == 18175.0
    assert b.Z_max == 18087.5
    assert b.B == 255412.5


def test_queue_updates():
    assert ra.update_queue(10, 3, 2, 4) == 9
    assert ra.update_queue(2, 5, 0, 0) == 0
    assert ra.update_virtual_queue(5, 1, 0, 2, True) == 6
    assert ra.actual_purchase(10, 4, 20) == 6


def test_threshold_rule():
    p = ra.Params()
    p.V = 10.0
    p.x_max = 400.0
    p.a_max = 175.0
    p.gamma_max = 20.0
    assert ra.decide_purchase(100, 60, 20.0, p) == 0.0
    assert ra.decide_purchase(150, 60, 20.0, p) == 400.0


def test_frame_oracle():
    frame = [
        ra.SlotObservation(s=0, a=2, gamma=5),
        ra.SlotObservation(s=0, a=2, gamma=1),
        ra.SlotObservation(s=0, a=2, gamma=3),
    ]
    res = ra.solve_frame(frame, 0.0, 4.0)
    assert res["feasible"]
    assert abs(res["c_star"] - 10.0 / 3.0) < 1e-12
    assert res["x_star"] == [0.0, 4.0, 2.0]


def test_simulated_run_respects_the_bounds():
    p = paper_params()
    summary = ra.simulate("lyapunov", "iid", seed=7, slots=20000, params=p)
    assert summary["max_Q"] <= 18175.0
    assert summary["max_Z"] <= 18087.5
    assert summary["max_delay"] <= 415
    assert summary["drift_ok"]
