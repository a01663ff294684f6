"""Dense complex matrix helpers and the span-closure engine.

Matrices are numpy ``complex128`` arrays throughout.  Everything here is
deliberately small-scale: the representations this package constructs have
dimension well under a hundred, so norms and ranks go through direct SVDs.

``span_closure_dim`` computes the linear dimension of the (non-unital)
algebra generated by a finite set of k×k matrices — the workhorse behind the
irreducibility and nest-density certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical thresholds used across the package.

    rank_tol drives rank decisions (relative to the largest singular value),
    norm_tol bounds residuals treated as zero, recovery_tol is the accuracy
    demanded of coefficient recovery.
    """

    rank_tol: float = 1e-9
    norm_tol: float = 1e-9
    recovery_tol: float = 1e-8

    def __post_init__(self):
        for name in ("rank_tol", "norm_tol", "recovery_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


DEFAULT_TOLERANCES = ToleranceConfig()


def as_matrix(m) -> np.ndarray:
    """Coerce to a 2-D complex128 array, rejecting NaN/Inf entries."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if a.size and not np.isfinite(a).all():
        raise ValueError("matrix has non-finite entries")
    return a


def operator_norm(m) -> float:
    """Largest singular value."""
    a = as_matrix(m)
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, 2))


def row_operator_norm(ms) -> float:
    """Norm of the row operator [m_1 m_2 …]: the square root of
    ‖Σ m_i m_i^*‖.  All matrices must have the same number of rows."""
    mats = [as_matrix(m) for m in ms]
    if not mats:
        raise ValueError("row_operator_norm needs a nonempty list")
    rows = mats[0].shape[0]
    for m in mats:
        if m.shape[0] != rows:
            raise ValueError("row_operator_norm: matrices must share their row count")
    acc = np.zeros((rows, rows), dtype=np.complex128)
    for m in mats:
        acc += m @ m.conj().T
    return float(np.sqrt(operator_norm(acc)))


def _orthonormal_rows(stack: np.ndarray, rank_tol: float) -> np.ndarray:
    """Orthonormal row basis of the row space, via SVD with a relative
    threshold.  Returns an (r, n) array; r may be zero."""
    if stack.size == 0:
        return stack.reshape(0, stack.shape[1] if stack.ndim == 2 else 0)
    _, s, vh = np.linalg.svd(stack, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return vh[:0]
    r = int(np.count_nonzero(s > rank_tol * s[0]))
    return vh[:r]


def span_closure_dim(gens, dim: int, tol: ToleranceConfig = DEFAULT_TOLERANCES):
    """Dimension of the smallest multiplicatively closed subspace of k×k
    matrices containing ``gens`` (the non-unital generated algebra), plus an
    orthonormal basis of it.

    Iterates pairwise products of the running basis and re-ranks the
    vectorized matrices until the rank stabilizes; capped at dimension k²
    and k²+1 rounds, both of which only the full matrix algebra attains.
    """
    k = int(dim)
    if k <= 0:
        raise ValueError("dim must be positive")
    mats = []
    for m in gens:
        a = as_matrix(m)
        if a.shape != (k, k):
            raise ValueError(f"generator has shape {a.shape}, expected ({k}, {k})")
        mats.append(a)
    if not mats:
        return 0, []
    basis_rows = _orthonormal_rows(
        np.array([m.reshape(-1) for m in mats]), tol.rank_tol
    )
    r = basis_rows.shape[0]
    full = k * k
    for _ in range(1 + full):
        if r == 0 or r == full:
            break
        basis_mats = [row.reshape(k, k) for row in basis_rows]
        prods = [a @ b for a in basis_mats for b in basis_mats]
        stacked = np.vstack([basis_rows] + [p.reshape(1, -1) for p in prods])
        new_rows = _orthonormal_rows(stacked, tol.rank_tol)
        if new_rows.shape[0] == r:
            basis_rows = new_rows
            break
        basis_rows = new_rows
        r = new_rows.shape[0]
    return r, [row.reshape(k, k) for row in basis_rows]


def is_orthogonal_projection(m, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> bool:
    """True when m is Hermitian and idempotent within norm_tol."""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise ValueError("is_orthogonal_projection needs a square matrix")
    return (
        operator_norm(a @ a - a) <= tol.norm_tol
        and operator_norm(a - a.conj().T) <= tol.norm_tol
    )


def matrices_equal(a, b, tol: float = DEFAULT_TOLERANCES.norm_tol) -> bool:
    """Operator-norm equality within ``tol``; shape mismatch is inequality."""
    ma, mb = as_matrix(a), as_matrix(b)
    if ma.shape != mb.shape:
        return False
    return operator_norm(ma - mb) <= tol


# -- JSON encoding -------------------------------------------------------------


def matrix_to_json(m) -> dict:
    """Row-major [re, im] pair encoding."""
    a = as_matrix(m)
    rows, cols = a.shape
    return {
        "rows": rows,
        "cols": cols,
        "entries": [[float(z.real), float(z.imag)] for z in a.reshape(-1)],
    }


def matrix_from_json(obj) -> np.ndarray:
    """Inverse of matrix_to_json; raises ValueError on malformed input."""
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed matrix JSON: {exc}") from exc
    if rows < 0 or cols < 0 or len(entries) != rows * cols:
        raise ValueError(
            f"matrix JSON claims {rows}x{cols} but has {len(entries)} entries"
        )
    data = np.array(
        [complex(re, im) for re, im in entries], dtype=np.complex128
    ).reshape(rows, cols)
    return as_matrix(data)
