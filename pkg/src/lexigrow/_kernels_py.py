"""Pure-Python compute kernels: the fallback when the extension is absent.

Operation order inside each loop matches lexigrow._kernels exactly, so both
backends produce bit-identical float64 results in sequential mode; only the
speed differs. Scalars are plain Python floats (IEEE double, same libm).
"""

from __future__ import annotations

from math import sqrt

import numpy as np

BACKEND_NAME = "python"
SUPPORTS_PARALLEL = False


def accumulate_cooccurrence(
    ids: np.ndarray,
    boundaries: np.ndarray,
    window: int,
    unit: bool,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Count windowed pairs per document; return canonical sorted entries.

    ``ids`` holds one vocab index per stream token, -1 for out-of-vocabulary
    tokens (they occupy positions, so distances stay faithful to the text).
    ``boundaries`` holds each document's start index plus a final sentinel.
    Each unordered position pair is counted once toward the canonical
    (min_id, max_id) key with weight 1 (unit) or 1/distance.
    """
    pairs: dict[tuple[int, int], float] = {}
    id_list = ids.tolist()
    bounds = boundaries.tolist()
    for bi in range(len(bounds) - 1):
        end = bounds[bi + 1]
        for p in range(bounds[bi], end):
            wi = id_list[p]
            if wi < 0:
                continue
            q_stop = p + window + 1
            if q_stop > end:
                q_stop = end
            for q in range(p + 1, q_stop):
                wj = id_list[q]
                if wj < 0:
                    continue
                key = (wi, wj) if wi <= wj else (wj, wi)
                weight = 1.0 if unit else 1.0 / (q - p)
                acc = pairs.get(key)
                pairs[key] = weight if acc is None else acc + weight
    items = sorted(pairs.items())
    out_i = np.fromiter((k[0] for k, _ in items), dtype=np.int32, count=len(items))
    out_j = np.fromiter((k[1] for k, _ in items), dtype=np.int32, count=len(items))
    out_w = np.fromiter((v for _, v in items), dtype=np.float64, count=len(items))
    return out_i, out_j, out_w


def train_epoch(
    W: np.ndarray,
    Wt: np.ndarray,
    b: np.ndarray,
    bt: np.ndarray,
    gW: np.ndarray,
    gWt: np.ndarray,
    gb: np.ndarray,
    gbt: np.ndarray,
    ei: np.ndarray,
    ej: np.ndarray,
    logx: np.ndarray,
    fx: np.ndarray,
    order: np.ndarray,
    eta: float,
) -> float:
    """One pass of adaptive-gradient updates over the entries in ``order``.

    Returns the epoch cost sum(f(x) * diff^2) measured at pre-update
    parameters of each visit. Arrays are updated in place.
    """
    d = W.shape[1]
    # Nested lists keep the inner loops in plain-float territory; arrays are
    # written back before returning.
    Wl, Wtl = W.tolist(), Wt.tolist()
    bl, btl = b.tolist(), bt.tolist()
    gWl, gWtl = gW.tolist(), gWt.tolist()
    gbl, gbtl = gb.tolist(), gbt.tolist()
    eil, ejl = ei.tolist(), ej.tolist()
    lxl, fxl = logx.tolist(), fx.tolist()
    rng_d = range(d)

    cost = 0.0
    for k in order.tolist():
        i = eil[k]
        j = ejl[k]
        wi = Wl[i]
        wj = Wtl[j]
        gi = gWl[i]
        gj = gWtl[j]
        dot = 0.0
        for m in rng_d:
            dot += wi[m] * wj[m]
        diff = dot + bl[i] + btl[j] - lxl[k]
        fdiff = fxl[k] * diff
        cost += fdiff * diff
        feta = fdiff * eta
        for m in rng_d:
            t1 = feta * wj[m]
            t2 = feta * wi[m]
            u1 = t1 / sqrt(gi[m])
            u2 = t2 / sqrt(gj[m])
            gi[m] += t1 * t1
            gj[m] += t2 * t2
            wi[m] -= u1
            wj[m] -= u2
        ub1 = feta / sqrt(gbl[i])
        ub2 = feta / sqrt(gbtl[j])
        gbl[i] += feta * feta
        gbtl[j] += feta * feta
        bl[i] -= ub1
        btl[j] -= ub2

    W[:] = Wl
    Wt[:] = Wtl
    b[:] = bl
    bt[:] = btl
    gW[:] = gWl
    gWt[:] = gWtl
    gb[:] = gbl
    gbt[:] = gbtl
    return cost
