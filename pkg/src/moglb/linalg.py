"""Dense SPD matrix state with rank-1 updates, a maintained inverse and
log-determinant, Mahalanobis norms, and the generalized projection onto a
centered Euclidean ball.
"""

import numpy as np

# Full inverse/log-det recompute cadence; keeps Sherman-Morrison drift bounded.
REFRESH_INTERVAL = 500

_PROJ_TOL = 1e-10
_PROJ_MAX_ITER = 200


class ProjectionError(RuntimeError):
    """Ball projection failed to converge; carries the norm residual."""

    def __init__(self, residual: float):
        super().__init__(f"ball projection did not converge, |norm - radius| = {residual:.3e}")
        self.residual = residual


class SpdState:
    """lambda*I plus a sum of weighted rank-1 terms, with the inverse and
    log det(Z) - log det(lambda*I) maintained incrementally.

    Single-writer mutable state; distinct instances are independent.
    """

    def __init__(self, dim: int, lam: float):
        if not isinstance(dim, (int, np.integer)) or dim < 1:
            raise ValueError(f"dim must be a positive integer, got {dim}")
        if not (np.isfinite(lam) and lam > 0):
            raise ValueError(f"lambda must be finite and positive, got {lam}")
        self.dim = int(dim)
        self.lam = float(lam)
        self.matrix = np.eye(self.dim) * self.lam
        self.inverse = np.eye(self.dim) / self.lam
        self.logdet_ratio = 0.0
        self.update_count = 0

    def rank1_update(self, x, weight: float) -> "SpdState":
        """Z += weight * x x^T, with the inverse updated by Sherman-Morrison
        and the log-det ratio by log(1 + weight * x^T Z^-1 x).
        """
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise ValueError(f"expected vector of length {self.dim}, got shape {x.shape}")
        if not (np.isfinite(weight) and weight >= 0):
            raise ValueError(f"weight must be finite and non-negative, got {weight}")
        self.matrix += weight * np.outer(x, x)
        u = self.inverse @ x
        q = float(x @ u)
        self.inverse -= (weight / (1.0 + weight * q)) * np.outer(u, u)
        self.logdet_ratio += float(np.log1p(weight * q))
        self.update_count += 1
        if self.update_count % REFRESH_INTERVAL == 0:
            self._refresh()
        return self

    def _refresh(self):
        self.matrix = 0.5 * (self.matrix + self.matrix.T)
        chol = np.linalg.cholesky(self.matrix)
        self.logdet_ratio = 2.0 * float(np.sum(np.log(np.diag(chol)))) - self.dim * np.log(self.lam)
        inv = np.linalg.inv(self.matrix)
        self.inverse = 0.5 * (inv + inv.T)

    def mahalanobis_sq(self, v, use_inverse: bool = False) -> float:
        """v^T Z v, or v^T Z^-1 v when use_inverse is set."""
        v = np.asarray(v, dtype=float)
        if v.shape != (self.dim,):
            raise ValueError(f"expected vector of length {self.dim}, got shape {v.shape}")
        metric = self.inverse if use_inverse else self.matrix
        return float(v @ metric @ v)

    def ball_project(self, point, radius: float) -> np.ndarray:
        """argmin over {||y|| <= radius} of (y - point)^T Z (y - point).

        Interior points are returned unchanged. Otherwise the KKT system
        y = (Z + nu*I)^-1 Z point is solved for the unique nu >= 0 putting y
        on the sphere, by bisection on nu.
        """
        point = np.asarray(point, dtype=float)
        if point.shape != (self.dim,):
            raise ValueError(f"expected vector of length {self.dim}, got shape {point.shape}")
        if not np.all(np.isfinite(point)):
            raise ValueError("point contains non-finite entries")
        if not (np.isfinite(radius) and radius > 0):
            raise ValueError(f"radius must be finite and positive, got {radius}")
        if np.linalg.norm(point) <= radius:
            return point.copy()

        zp = self.matrix @ point
        eye = np.eye(self.dim)

        def norm_at(nu):
            y = np.linalg.solve(self.matrix + nu * eye, zp)
            return np.linalg.norm(y), y

        # ||y(nu)|| decreases from ||point|| > radius to 0; bracket then bisect.
        lo = 0.0
        hi = 1.0
        n_hi, y = norm_at(hi)
        while n_hi > radius:
            lo = hi
            hi *= 2.0
            n_hi, y = norm_at(hi)
        best_y, best_res = y, abs(n_hi - radius)
        for _ in range(_PROJ_MAX_ITER):
            mid = 0.5 * (lo + hi)
            n_mid, y = norm_at(mid)
            res = abs(n_mid - radius)
            if res < best_res:
                best_y, best_res = y, res
            if res <= _PROJ_TOL:
                return y
            if n_mid > radius:
                lo = mid
            else:
                hi = mid
        if best_res <= _PROJ_TOL:
            return best_y
        raise ProjectionError(best_res)
