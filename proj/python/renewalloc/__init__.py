from ._renewalloc import (  # noqa: F401
    DerivedBounds,
    Params,
    SlotObservation,
    actual_purchase,
    decide_purchase,
    derived_bounds,
    simulate,
    simulate_csv,
    solve_frame,
    update_queue,
    update_virtual_queue,
    validate_params,
)
