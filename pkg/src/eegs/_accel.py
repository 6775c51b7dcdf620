"""Hot numeric kernels: per-sample gradient sweeps and batch prediction.

Two interchangeable implementations live here: numba ``@njit`` loop
kernels and a vectorized pure-numpy fallback.  Selection order:

* ``backend="numba"`` / ``backend="numpy"`` forces a path;
* ``backend="auto"`` (the default everywhere) uses numba when it is
  importable and the ``EEGS_NUMBA`` environment variable is not set to
  ``0``/``false``/``off``.

Both paths implement the same sequential per-sample update semantics;
``benchmarks/bench_sgd.py`` times them against each other and checks they
agree.
"""

from __future__ import annotations

import os

import numpy as np

ENV_FLAG = "EEGS_NUMBA"

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        raise RuntimeError("numba is not installed")


def numba_enabled() -> bool:
    """True when the jit path is importable and not disabled via EEGS_NUMBA."""
    if not HAVE_NUMBA:
        return False
    return os.environ.get(ENV_FLAG, "1").strip().lower() not in ("0", "false", "off")


def resolve_backend(backend: str = "auto") -> str:
    if backend == "auto":
        return "numba" if numba_enabled() else "numpy"
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not installed")
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    return backend


# -- SGD epoch ----------------------------------------------------------------
#
# factors:  (L, K, X) parameter tensor, zero off-topology
# links_l/links_k: (n_links,) index arrays naming the trainable (l, k) pairs
# V: (N, K) appraisal values; M: (N, X) factor values; E: (N, L) targets
# order: (S,) sample indices defining the update sequence
#
# Returns the summed squared error over the epoch, measured pre-update per
# sample.  The learning rate for global step s is eta0 / (1 + decay * s).


def _sgd_epoch_loops(factors, links_l, links_k, V, M, E, order,
                     eta0, decay, step_offset):
    n_links = links_l.shape[0]
    n_emotions = E.shape[1]
    n_factors = M.shape[1]
    ehat = np.zeros(n_emotions)
    loss = 0.0
    for s in range(order.shape[0]):
        i = order[s]
        for l in range(n_emotions):
            ehat[l] = 0.0
        for j in range(n_links):
            l = links_l[j]
            k = links_k[j]
            w = 0.0
            for x in range(n_factors):
                w += factors[l, k, x] * M[i, x]
            ehat[l] += w * V[i, k]
        for l in range(n_emotions):
            r = E[i, l] - ehat[l]
            loss += r * r
        eta = eta0 / (1.0 + decay * (step_offset + s))
        for j in range(n_links):
            l = links_l[j]
            k = links_k[j]
            r = E[i, l] - ehat[l]
            for x in range(n_factors):
                factors[l, k, x] += eta * r * M[i, x] * V[i, k]
    return loss


_sgd_epoch_numba = njit(cache=True)(_sgd_epoch_loops) if HAVE_NUMBA else None


def _sgd_epoch_numpy(factors, links_l, links_k, V, M, E, order,
                     eta0, decay, step_offset):
    mask = np.zeros(factors.shape[:2])
    mask[links_l, links_k] = 1.0
    mask3 = mask[:, :, None]
    loss = 0.0
    for s, i in enumerate(order):
        v = V[i]
        m = M[i]
        ehat = (factors @ m) @ v  # off-topology factors stay zero
        residual = E[i] - ehat
        loss += float(residual @ residual)
        eta = eta0 / (1.0 + decay * (step_offset + s))
        factors += (eta * residual[:, None, None]) * (mask3 * (v[:, None] * m[None, :]))
    return loss


def sgd_epoch(factors, links_l, links_k, V, M, E, order, eta0, decay,
              step_offset, backend: str = "auto") -> float:
    """Run one epoch of sequential per-sample updates in place."""
    impl = _sgd_epoch_numba if resolve_backend(backend) == "numba" else _sgd_epoch_numpy
    return float(impl(factors, links_l, links_k, V, M, E,
                      np.ascontiguousarray(order, dtype=np.int64),
                      float(eta0), float(decay), int(step_offset)))


# -- batched prediction ---------------------------------------------------------


def _predict_loops(factors, links_l, links_k, V, M, out):
    n_links = links_l.shape[0]
    n_factors = M.shape[1]
    for i in range(V.shape[0]):
        for j in range(n_links):
            l = links_l[j]
            k = links_k[j]
            w = 0.0
            for x in range(n_factors):
                w += factors[l, k, x] * M[i, x]
            out[i, l] += w * V[i, k]
    return out


_predict_numba = njit(cache=True)(_predict_loops) if HAVE_NUMBA else None


def predict(factors, links_l, links_k, V, M, backend: str = "auto") -> np.ndarray:
    """Linear predictions (N, L) for every sample: e_hat = sum_k (f.m) v."""
    out = np.zeros((V.shape[0], factors.shape[0]))
    if resolve_backend(backend) == "numba":
        return _predict_numba(factors, links_l, links_k, V, M, out)
    weights = np.einsum("nx,lkx->nlk", M, factors)
    return np.einsum("nlk,nk->nl", weights, V, out=out)
