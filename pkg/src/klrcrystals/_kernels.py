"""Hot-loop kernels for tensor-word crystal operations.

All functions work on fixed-length int32 numpy words of letter codes, with
per-letter tables EPS/PHI (string lengths) and FF/EE (arrow targets, -1 for
none) indexed as table[code, i-1].

Each kernel is written once in plain Python and conditionally compiled with
numba; set KLRCRYSTALS_NO_JIT=1 to force the pure-Python fallback.  Results
are identical either way.
"""

from __future__ import annotations

import os

import numpy as np

JIT_ENABLED = os.environ.get("KLRCRYSTALS_NO_JIT") != "1"
if JIT_ENABLED:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        JIT_ENABLED = False


def _jit(fn):
    if JIT_ENABLED:
        return njit(cache=True)(fn)
    return fn


def signature_scan(word, i0, eps_t, phi_t, stack):
    """Bracketing scan for index i0 (0-based).

    Signs are read left to right, each factor contributing its eps minuses
    followed by its phi pluses.  Returns (eps, phi, lower_pos, raise_pos):
    eps/phi of the whole word, the position holding the leftmost surviving
    plus (f acts there; -1 if none) and the position holding the rightmost
    surviving minus (e acts there; -1 if none).  `stack` is scratch of
    length >= len(word).
    """
    top = 0
    minus_count = 0
    raise_pos = -1
    for t in range(word.shape[0]):
        c = word[t]
        for _ in range(eps_t[c, i0]):
            if top > 0:
                top -= 1
            else:
                minus_count += 1
                raise_pos = t
        for _ in range(phi_t[c, i0]):
            stack[top] = t
            top += 1
    lower_pos = stack[0] if top > 0 else -1
    return minus_count, top, lower_pos, raise_pos


signature_scan = _jit(signature_scan)


def apply_op(word, i0, is_lower, eps_t, phi_t, ff_t, ee_t, stack):
    """Apply f (is_lower) or e at index i0 in place; return 1 on success, 0 if null."""
    eps, phi, lower_pos, raise_pos = signature_scan(word, i0, eps_t, phi_t, stack)
    if is_lower:
        if lower_pos < 0:
            return 0
        word[lower_pos] = ff_t[word[lower_pos], i0]
    else:
        if raise_pos < 0:
            return 0
        word[raise_pos] = ee_t[word[raise_pos], i0]
    return 1


apply_op = _jit(apply_op)


def extract_string(word, s_flat, out, eps_t, phi_t, ee_t, stack):
    """Adapted string along s_flat (0-based indices), raising word in place.

    out[t] = eps_{s_t} of the current word, after which e_{s_t} is applied
    that many times.
    """
    for t in range(s_flat.shape[0]):
        i0 = s_flat[t]
        a = 0
        while True:
            eps, phi, lower_pos, raise_pos = signature_scan(
                word, i0, eps_t, phi_t, stack)
            if raise_pos < 0:
                break
            word[raise_pos] = ee_t[word[raise_pos], i0]
            a += 1
        out[t] = a


extract_string = _jit(extract_string)


def apply_string(word, s_flat, a, eps_t, phi_t, ff_t, stack):
    """Apply f_{s_1}^{a_1} ... f_{s_l}^{a_l} (rightmost first) to word in place.

    Returns 0 on success, else the 1-based step t whose f_{s_t} hit null.
    """
    for t in range(s_flat.shape[0] - 1, -1, -1):
        i0 = s_flat[t]
        for _ in range(a[t]):
            eps, phi, lower_pos, raise_pos = signature_scan(
                word, i0, eps_t, phi_t, stack)
            if lower_pos < 0:
                return t + 1
            word[lower_pos] = ff_t[word[lower_pos], i0]
    return 0


apply_string = _jit(apply_string)


def raise_on_subset(word, subset, eps_t, phi_t, ee_t, stack):
    """Apply e_i for i in subset (cyclically, ascending) until all eps vanish."""
    changed = True
    while changed:
        changed = False
        for k in range(subset.shape[0]):
            i0 = subset[k]
            while True:
                eps, phi, lower_pos, raise_pos = signature_scan(
                    word, i0, eps_t, phi_t, stack)
                if raise_pos < 0:
                    break
                word[raise_pos] = ee_t[word[raise_pos], i0]
                changed = True


raise_on_subset = _jit(raise_on_subset)


def make_scratch(word_len: int) -> np.ndarray:
    # each factor contributes at most 2 pluses (B's middle i-string)
    return np.empty(max(2 * word_len, 1), dtype=np.int32)
