"""One-dimensional maximization for objectives expected to be unimodal."""

from __future__ import annotations

import logging

import numpy as np
from scipy import optimize as so

log = logging.getLogger(__name__)


def _unimodal(vals, tol):
    k = int(np.argmax(vals))
    up = np.diff(vals[: k + 1])
    down = np.diff(vals[k:])
    return bool(np.all(up >= -tol) and np.all(down <= tol))


def maximize_unimodal(fn, lo: float, hi: float, prescan: int = 64, fallback: int = 1024,
                      xatol: float = 1e-12, label: str = "objective"):
    """Maximize ``fn`` on ``[lo, hi]``.

    A coarse pre-scan checks the shape; bounded Brent then refines inside the
    bracket around the best scan point. When the scan is not unimodal a
    denser scan replaces it and a warning is logged.

    Returns ``(x, fn(x), fell_back)``.
    """
    if hi <= lo:
        return lo, fn(lo), False
    xs = np.linspace(lo, hi, prescan)
    vals = np.array([fn(x) for x in xs])
    tol = 1e-12 * max(1.0, float(np.max(np.abs(vals))))
    fell_back = False
    if not _unimodal(vals, tol):
        log.warning("%s not unimodal on the pre-scan; scanning %d points", label, fallback)
        xs = np.linspace(lo, hi, fallback)
        vals = np.array([fn(x) for x in xs])
        fell_back = True
    k = int(np.argmax(vals))
    a, b = xs[max(k - 1, 0)], xs[min(k + 1, len(xs) - 1)]
    best_x, best_v = float(xs[k]), float(vals[k])
    if b > a:
        res = so.minimize_scalar(lambda x: -fn(x), bounds=(a, b), method="bounded",
                                 options={"xatol": xatol})
        if -res.fun > best_v:
            best_x, best_v = float(res.x), float(-res.fun)
    return best_x, best_v, fell_back
