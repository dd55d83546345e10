"""Dense complex-matrix kernel for the verification harness.

Matrices are plain numpy complex128 arrays, validated on entry: square,
finite, dimension between 1 and MAX_DIM.  Everything here is a pure
function; nothing mutates its arguments.
"""

from __future__ import annotations

import json
import math

import numpy as np

__all__ = [
    "MAX_DIM",
    "DimensionMismatch",
    "as_matrix",
    "commutator",
    "expm",
    "conjugate_series",
    "rel_residual",
    "infer_uvc",
    "load_matrix",
]

MAX_DIM = 64

# expm stops its Taylor accumulation once the added term's 1-norm drops
# below EXPM_REL_EPS of the partial sum's, or after EXPM_MAX_TERMS terms.
_EXPM_REL_EPS = 1e-18
_EXPM_MAX_TERMS = 60
# A 1-norm beyond this puts e^A outside double range.
_EXPM_NORM_LIMIT = 700.0

# Gram systems with condition estimates beyond this are treated as rank
# deficient and solved in the minimum-norm sense instead.
_GRAM_COND_LIMIT = 1e12


class DimensionMismatch(ValueError):
    """Operands' dimensions do not agree (or a matrix is not square)."""


def as_matrix(obj) -> np.ndarray:
    """Validate obj as a square complex matrix and return it as complex128."""
    A = np.asarray(obj, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    if n < 1 or n > MAX_DIM:
        raise DimensionMismatch(f"dimension must be in [1, {MAX_DIM}], got {n}")
    if not np.isfinite(A).all():
        raise ValueError("matrix entries must be finite")
    return A


def _same_dim(A: np.ndarray, B: np.ndarray) -> None:
    if A.shape != B.shape:
        raise DimensionMismatch(f"dimension mismatch: {A.shape} vs {B.shape}")


def _one_norm(A: np.ndarray) -> float:
    return float(np.abs(A).sum(axis=0).max())


def commutator(A, B) -> np.ndarray:
    """Commutator [A, B] = AB - BA."""
    A = as_matrix(A)
    B = as_matrix(B)
    _same_dim(A, B)
    return A @ B - B @ A


def expm(A) -> np.ndarray:
    """Matrix exponential by scaling and squaring with a Taylor core.

    Scales by 2^s with s = max(0, ceil(log2 ||A||_1)), accumulates the
    Taylor series of e^{A/2^s} until the added term's 1-norm falls below
    1e-18 of the partial sum's (or 60 terms), then squares s times.  The
    zero matrix returns the identity exactly.  Raises OverflowError when
    ||A||_1 > 700, where the result would leave double range.
    """
    A = as_matrix(A)
    n = A.shape[0]
    norm = _one_norm(A)
    if norm == 0.0:
        return np.eye(n, dtype=complex)
    if norm > _EXPM_NORM_LIMIT:
        raise OverflowError(
            f"matrix 1-norm {norm:.6g} exceeds {_EXPM_NORM_LIMIT:g}; "
            "the exponential would overflow double precision"
        )
    s = max(0, math.ceil(math.log2(norm)))
    B = A / (2.0**s)
    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, _EXPM_MAX_TERMS + 1):
        term = term @ B / k
        result = result + term
        if _one_norm(term) < _EXPM_REL_EPS * _one_norm(result):
            break
    for _ in range(s):
        result = result @ result
    return result


def conjugate_series(A, B, t: complex, K: int) -> np.ndarray:
    """Truncated adjoint series sum_{k=0}^{K} (-t)^k ad_A^k(B) / k!.

    The K -> infinity limit is e^{-tA} B e^{tA}; each ad power is computed
    by an explicit repeated commutator.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    _same_dim(A, B)
    if K < 0:
        raise ValueError(f"series cutoff must be >= 0, got {K}")
    t = complex(t)
    total = B.copy()
    current = B
    for k in range(1, K + 1):
        current = commutator(A, current) * (-t / k)
        total = total + current
    return total


def rel_residual(A, B) -> float:
    """Normalized distance ||A - B||_F / max(1, ||A||_F, ||B||_F)."""
    A = as_matrix(A)
    B = as_matrix(B)
    _same_dim(A, B)
    scale = max(1.0, float(np.linalg.norm(A)), float(np.linalg.norm(B)))
    return float(np.linalg.norm(A - B)) / scale


def infer_uvc(X, Y) -> tuple[complex, complex, complex, float]:
    """Least-squares fit of [X, Y] onto span{X, Y, identity}.

    Returns (u, v, c, fit_residual) where fit_residual is the relative
    residual of [X,Y] - (uX + vY + c*identity).  The 3x3 Gram system in
    the Frobenius inner product is solved by pivoted elimination; if it is
    singular or its condition estimate exceeds 1e12 (the basis matrices
    nearly dependent), the minimum-norm least-squares solution is returned
    instead.  A fit_residual well above zero means the pair is NOT in the
    affine commutator class.
    """
    X = as_matrix(X)
    Y = as_matrix(Y)
    _same_dim(X, Y)
    n = X.shape[0]
    W = commutator(X, Y)
    eye = np.eye(n, dtype=complex)
    basis = (X, Y, eye)
    gram = np.empty((3, 3), dtype=complex)
    rhs = np.empty(3, dtype=complex)
    for i, Bi in enumerate(basis):
        rhs[i] = np.vdot(Bi, W)
        for j, Bj in enumerate(basis):
            gram[i, j] = np.vdot(Bi, Bj)
    coef = None
    try:
        cond = float(np.linalg.cond(gram))
        if math.isfinite(cond) and cond <= _GRAM_COND_LIMIT:
            coef = np.linalg.solve(gram, rhs)
    except np.linalg.LinAlgError:
        coef = None
    if coef is None:
        coef = np.linalg.lstsq(gram, rhs, rcond=None)[0]
    u, v, c = (complex(z) for z in coef)
    fit = rel_residual(W, u * X + v * Y + c * eye)
    return u, v, c, fit


def load_matrix(path) -> np.ndarray:
    """Read a matrix from the JSON file format.

    Format: {"dim": n, "re": [[n x n reals]], "im": [[n x n reals]]} with
    "im" optional (zero when absent).  Raises ValueError on malformed
    content and DimensionMismatch on shape violations.
    """
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "dim" not in data or "re" not in data:
        raise ValueError(f"{path}: expected a JSON object with 'dim' and 're'")
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"{path}: 'dim' must be a positive integer")
    try:
        re_part = np.asarray(data["re"], dtype=float)
        im_part = (
            np.asarray(data["im"], dtype=float)
            if "im" in data
            else np.zeros((dim, dim))
        )
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{path}: matrix entries must be real numbers ({exc})")
    if re_part.shape != (dim, dim) or im_part.shape != (dim, dim):
        raise DimensionMismatch(
            f"{path}: 're'/'im' must be {dim}x{dim} arrays, got "
            f"{re_part.shape} and {im_part.shape}"
        )
    return as_matrix(re_part + 1j * im_part)
