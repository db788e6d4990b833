"""Hot numeric kernels with numba-jitted and pure-numpy implementations.

The jitted path is used when numba imports successfully; setting the
environment variable ``TRANSFERSPEC_DISABLE_NUMBA=1`` before import forces
the numpy fallback.  Both implementations are kept importable so the
benchmark suite can compare them directly.

Grid convention: N equispaced circle points x_j = j/N.  The cardinal
function C is the unique degree-< N/2 trigonometric interpolant of the
Kronecker delta at x_0 (balanced Nyquist mode for even N):

    even N:  C(t) = sin(N pi t) cos(pi t) / (N sin(pi t))
    odd  N:  C(t) = sin(N pi t) / (N sin(pi t))

Near t = 0 (mod 1) both C and C' are evaluated by Taylor series to avoid
the cancellation in the closed forms.
"""

import os

import numpy as np

_TAYLOR_CUT = 1e-8


def _numba_requested() -> bool:
    flag = os.environ.get("TRANSFERSPEC_DISABLE_NUMBA", "")
    return flag.strip().lower() not in ("1", "true", "yes")


NUMBA_ENABLED = False
if _numba_requested():
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba present in normal installs
        pass

if not NUMBA_ENABLED:
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


# ----------------------------------------------------------------------
# pure-numpy implementations
# ----------------------------------------------------------------------

def _cardinal_block_numpy(points, n, deriv):
    t = np.asarray(points, dtype=np.float64).reshape(-1, 1) - np.arange(n) / n
    tm = np.mod(t, 1.0)
    tm = np.where(tm > 0.5, tm - 1.0, tm)
    small = np.abs(tm) < _TAYLOR_CUT
    ts = np.where(small, 0.5, tm)  # dummy away from the singularity
    a = np.pi * ts
    sa, ca = np.sin(a), np.cos(a)
    sna = np.sin(n * a)
    if n % 2 == 0:
        c2 = (n * n + 2.0) / 6.0
        if deriv:
            out = np.pi * (np.cos(n * a) * ca / sa - sna / (n * sa * sa))
        else:
            out = sna * ca / (n * sa)
    else:
        c2 = (n * n - 1.0) / 6.0
        if deriv:
            out = np.pi * (np.cos(n * a) / sa - sna * ca / (n * sa * sa))
        else:
            out = sna / (n * sa)
    if deriv:
        out[small] = -2.0 * np.pi * np.pi * c2 * tm[small]
    else:
        out[small] = 1.0 - np.pi * np.pi * c2 * tm[small] ** 2
    return out


def cardinal_rows_numpy(points, n):
    """Rows of cardinal-function values C(x - x_k) for each point x."""
    return _cardinal_block_numpy(points, n, False)


def cardinal_deriv_rows_numpy(points, n):
    """Rows of cardinal-function derivatives C'(x - x_k)."""
    return _cardinal_block_numpy(points, n, True)


def branch_matrix_numpy(points, weights, n, deriv=False):
    """Accumulate sum_b weights[:, b] * C(points[:, b] - x_k) into (R, n)."""
    rows, nb = points.shape
    block = _cardinal_block_numpy(points.ravel(), n, deriv).reshape(rows, nb, n)
    return np.einsum("rb,rbk->rk", weights, block)


def pair_seminorm_numpy(values, s):
    """Max over grid pairs of |v_j - v_k| / d(x_j, x_k)^s, circle distance."""
    n = values.shape[0]
    gap = np.arange(1, n) / n
    dist = np.minimum(gap, 1.0 - gap) ** s
    best = 0.0
    for off in range(1, n):
        diffs = np.abs(values - np.roll(values, -off))
        best = max(best, np.max(diffs) / dist[off - 1])
    return best


# ----------------------------------------------------------------------
# jitted implementations (loop form)
# ----------------------------------------------------------------------

@njit(cache=True)
def _cardinal_point(tm, n, even, deriv):
    if abs(tm) < _TAYLOR_CUT:
        if even:
            c2 = (n * n + 2.0) / 6.0
        else:
            c2 = (n * n - 1.0) / 6.0
        if deriv:
            return -2.0 * np.pi * np.pi * c2 * tm
        return 1.0 - np.pi * np.pi * c2 * tm * tm
    a = np.pi * tm
    sa = np.sin(a)
    sna = np.sin(n * a)
    if even:
        if deriv:
            return np.pi * (np.cos(n * a) * np.cos(a) / sa - sna / (n * sa * sa))
        return sna * np.cos(a) / (n * sa)
    if deriv:
        return np.pi * (np.cos(n * a) / sa - sna * np.cos(a) / (n * sa * sa))
    return sna / (n * sa)


@njit(cache=True)
def _cardinal_block_jit(points, n, deriv):
    npts = points.shape[0]
    even = n % 2 == 0
    out = np.empty((npts, n))
    for i in range(npts):
        for k in range(n):
            tm = (points[i] - k / n) % 1.0
            if tm > 0.5:
                tm -= 1.0
            out[i, k] = _cardinal_point(tm, n, even, deriv)
    return out


@njit(cache=True)
def _branch_matrix_jit(points, weights, n, deriv):
    rows, nb = points.shape
    even = n % 2 == 0
    out = np.zeros((rows, n))
    for r in range(rows):
        for b in range(nb):
            w = weights[r, b]
            p = points[r, b]
            for k in range(n):
                tm = (p - k / n) % 1.0
                if tm > 0.5:
                    tm -= 1.0
                out[r, k] += w * _cardinal_point(tm, n, even, deriv)
    return out


@njit(cache=True)
def _pair_seminorm_jit(values, s):
    n = values.shape[0]
    best = 0.0
    for j in range(n):
        for k in range(j + 1, n):
            d = (k - j) / n
            if d > 0.5:
                d = 1.0 - d
            q = abs(values[j] - values[k]) / d ** s
            if q > best:
                best = q
    return best


# ----------------------------------------------------------------------
# dispatch
# ----------------------------------------------------------------------

if NUMBA_ENABLED:
    def cardinal_rows(points, n):
        return _cardinal_block_jit(np.ascontiguousarray(points, dtype=np.float64), n, False)

    def cardinal_deriv_rows(points, n):
        return _cardinal_block_jit(np.ascontiguousarray(points, dtype=np.float64), n, True)

    def branch_matrix(points, weights, n, deriv=False):
        return _branch_matrix_jit(
            np.ascontiguousarray(points, dtype=np.float64),
            np.ascontiguousarray(weights, dtype=np.float64),
            n, deriv,
        )

    def pair_seminorm(values, s):
        return _pair_seminorm_jit(np.ascontiguousarray(values, dtype=np.complex128), float(s))
else:
    cardinal_rows = cardinal_rows_numpy
    cardinal_deriv_rows = cardinal_deriv_rows_numpy
    branch_matrix = branch_matrix_numpy

    def pair_seminorm(values, s):
        return pair_seminorm_numpy(np.asarray(values, dtype=np.complex128), float(s))


def warm_up():
    """Trigger jit compilation of every kernel on tiny inputs."""
    pts = np.array([[0.1, 0.6]])
    w = np.array([[0.5, 0.5]])
    cardinal_rows(pts.ravel(), 8)
    cardinal_deriv_rows(pts.ravel(), 8)
    branch_matrix(pts, w, 8, False)
    branch_matrix(pts, w, 8, True)
    pair_seminorm(np.array([0.0 + 0j, 1.0 + 0j]), 0.5)
