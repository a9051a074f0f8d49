"""Decoherence rates of dephasing channels (GUE, k-body, thermofield double)."""

from ._core import (
    DEFAULT_SEED,
    annealing_check,
    calibrate_epsilon_sq,
    cmd_fig1,
    cmd_rate_gue,
    cmd_tfd,
    crossover_min_n,
    decoherence_rate,
    gue_level_density,
    purity_tfd,
    purity_tfd_hs,
    rate_gue_mc,
    rate_gue_paper,
    rate_gue_wick,
    rate_kbody_bound,
    rate_lmg,
    rate_tfd,
    rate_tfd_gue_exact,
    rate_tfd_gue_semicircle,
    run_criterion,
    sample_gue,
    sample_haar_unitary,
    set_thread_count,
    tfd_crossover_beta,
    z_gue_exact,
)

__all__ = [name for name in dir() if not name.startswith("_")]
