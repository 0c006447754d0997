from ._knlq import (
    gaussian_orlicz,
    luxemburg_norm,
    mean_width,
    orderstat_power_mean,
    predictor,
    run_sweep_json,
    sample,
    support_value,
    verify,
)

__all__ = [
    "gaussian_orlicz",
    "luxemburg_norm",
    "mean_width",
    "orderstat_power_mean",
    "predictor",
    "run_sweep_json",
    "sample",
    "support_value",
    "verify",
]
