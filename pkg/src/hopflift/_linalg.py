"""Exact linear algebra over F_{p^m}.

FieldSolver factors a matrix once (canonical greedy pivoting: columns left to
right, first unused row in original order) and then answers repeated solves,
ranks and kernels.  For m == 1 the factorization is a left-looking panel
elimination whose bulk updates run through BLAS at dtypes with proven-exact
integer bounds; for m > 1 a dense vectorized elimination over the extension
field is used (desk-scale inputs only).
"""

from __future__ import annotations

import numpy as np

from . import _arrays as ra

_BLOCK = 64


def _exact_dot(a, b, q):
    """a @ b for matrices of nonnegative ints < q, reduced mod q, exact."""
    k = a.shape[-1] if a.ndim > 1 else a.shape[0]
    bound = k * (q - 1) * (q - 1)
    if bound < (1 << 24):
        r = np.dot(a.astype(np.float32), b.astype(np.float32))
        return r.astype(np.int64) % q
    if bound < (1 << 52):
        r = np.dot(a.astype(np.float64), b.astype(np.float64))
        return r.astype(np.int64) % q
    if bound < (1 << 62):
        return np.dot(a, b) % q
    return (np.dot(a.astype(object), b.astype(object)) % q).astype(np.int64)


class FieldSolver:
    """Echelon factorization of a matrix over a field descriptor (n == 1)."""

    def __init__(self, desc, marr: np.ndarray, rank_only: bool = False):
        if not desc.is_field:
            raise ValueError("FieldSolver needs a field descriptor")
        self.desc = desc
        self.M = marr % desc.q
        self.nrows, self.ncols = marr.shape[0], marr.shape[1]
        if desc.m == 1:
            self._factor_prime(rank_only)
        else:
            self._factor_generic(rank_only)
        self.rank = len(self.pivot_cols)

    # ------------------------------------------------------------------ m == 1
    def _factor_prime(self, rank_only):
        p = self.desc.q
        R, C = self.nrows, self.ncols
        maxr = min(R, C)
        M0 = self.M[..., 0]
        Lam = np.zeros((R, maxr), dtype=np.int64)
        U = np.zeros((maxr, C), dtype=np.int64)
        unused = np.ones(R, dtype=bool)
        pivot_rows: list[int] = []
        pivot_cols: list[int] = []
        invs: list[int] = []
        t = 0
        for c0 in range(0, C, _BLOCK):
            c1 = min(C, c0 + _BLOCK)
            # U rows of earlier pivots on this panel (forward triangular solve),
            # then one bulk update of the panel for all rows.
            if t:
                Sp = M0[pivot_rows, c0:c1]
                Urows = np.empty((t, c1 - c0), dtype=np.int64)
                for s in range(t):
                    acc = Sp[s]
                    if s:
                        acc = (acc - _exact_dot(Lam[pivot_rows[s], :s], Urows[:s], p)) % p
                    Urows[s] = invs[s] * acc % p
                U[:t, c0:c1] = Urows
                Wp = (M0[:, c0:c1] - _exact_dot(Lam[:, :t], Urows, p)) % p
            else:
                Wp = M0[:, c0:c1].copy()
            # within the panel, reductions mod p are deferred when the bound
            # _BLOCK * (p-1)^2 + p stays well inside int64
            defer = p < (1 << 27)
            for j in range(c1 - c0):
                col = Wp[:, j] % p
                cand = np.flatnonzero((col != 0) & unused)
                if cand.size == 0:
                    continue
                r = int(cand[0])
                inv = pow(int(col[r]), p - 2, p)
                urow = inv * (Wp[r] % p) % p
                lam = col
                lam[~unused] = 0
                lam[r] = 0
                if np.any(lam):
                    if defer:
                        Wp -= np.outer(lam, urow)
                    else:
                        Wp = (Wp - np.outer(lam, urow)) % p
                U[t, c0:c1] = urow
                Lam[:, t] = lam
                unused[r] = False
                pivot_rows.append(r)
                pivot_cols.append(c0 + j)
                invs.append(inv)
                t += 1
        self.pivot_rows = np.array(pivot_rows, dtype=np.int64)
        self.pivot_cols = np.array(pivot_cols, dtype=np.int64)
        self._invs = np.array(invs, dtype=np.int64)
        self._Lpp = Lam[self.pivot_rows][:, :t] if t else np.zeros((0, 0), dtype=np.int64)
        self._U = None if rank_only else U[:t]
        self._Upc = U[:t][:, self.pivot_cols] if t else np.zeros((0, 0), dtype=np.int64)

    def _solve_prime(self, rhs):
        p = self.desc.q
        rank, C = self.rank, self.ncols
        flat = rhs.reshape(rhs.shape[0], -1) % p
        x = np.zeros((C, flat.shape[1]), dtype=np.int64)
        if rank:
            bp = flat[self.pivot_rows]
            beta = np.empty_like(bp)
            for s in range(rank):
                acc = bp[s]
                if s:
                    acc = (acc - _exact_dot(self._Lpp[s, :s], beta[:s], p)) % p
                beta[s] = self._invs[s] * acc % p
            xp = np.zeros_like(beta)
            for s in range(rank - 1, -1, -1):
                acc = beta[s]
                if s < rank - 1:
                    acc = (acc - _exact_dot(self._Upc[s, s + 1 :], xp[s + 1 :], p)) % p
                xp[s] = acc
            x[self.pivot_cols] = xp
        resid = (_exact_dot(self.M[..., 0], x, p) - flat) % p
        if np.any(resid):
            return None
        return x.reshape((C,) + rhs.shape[1:])

    def _kernel_prime(self):
        p = self.desc.q
        rank, C = self.rank, self.ncols
        if self._U is None:
            raise ValueError("factorization was rank_only")
        W = self._U.copy()
        for t in range(rank - 1, -1, -1):
            col = W[:t, self.pivot_cols[t]].copy()
            if np.any(col):
                W[:t] = (W[:t] - np.outer(col, W[t])) % p
        free = sorted(set(range(C)) - set(int(c) for c in self.pivot_cols))
        basis = []
        for c in free:
            vec = np.zeros(C, dtype=np.int64)
            vec[c] = 1
            if rank:
                vec[self.pivot_cols] = (-W[:, c]) % p
            basis.append(vec)
        return basis

    # ------------------------------------------------------------------ m > 1
    def _factor_generic(self, rank_only):
        desc = self.desc
        R, C = self.nrows, self.ncols
        from .coeffring import _inv_coeffs_field

        # full Gauss-Jordan on [M | I]; row-op trail E recovered from the right block
        W = np.concatenate([self.M.copy(), ra.eye(desc, R)], axis=1)
        unused = np.ones(R, dtype=bool)
        pivot_rows: list[int] = []
        pivot_cols: list[int] = []
        for c in range(C):
            col_nonzero = np.any(W[:, c] != 0, axis=-1) & unused
            cand = np.flatnonzero(col_nonzero)
            if cand.size == 0:
                continue
            r = int(cand[0])
            inv = _inv_coeffs_field(desc, W[r, c])
            W[r] = ra.elem_mul(desc, W[r], inv[None, :])
            mask = np.any(W[:, c] != 0, axis=-1)
            mask[r] = False
            rows = np.flatnonzero(mask)
            if rows.size:
                factors = W[rows, c]
                W[rows] = ra.sub(desc, W[rows], ra.elem_mul(desc, factors[:, None, :], W[r][None, :, :]))
            unused[r] = False
            pivot_rows.append(r)
            pivot_cols.append(c)
        self.pivot_rows = np.array(pivot_rows, dtype=np.int64)
        self.pivot_cols = np.array(pivot_cols, dtype=np.int64)
        self._rref = W[self.pivot_rows][:, :C] if pivot_rows else np.zeros((0, C, desc.m), dtype=np.int64)
        self._E = W[self.pivot_rows][:, C:] if pivot_rows else np.zeros((0, R, desc.m), dtype=np.int64)

    def _solve_generic(self, rhs):
        desc = self.desc
        C = self.ncols
        x = ra.zeros(desc, (C,) + rhs.shape[1:-1])
        if self.rank:
            xp = ra.tensordot(desc, self._E, rhs, ([1], [0]))
            x[self.pivot_cols] = xp
        resid = ra.sub(desc, ra.tensordot(desc, self.M, x, ([1], [0])), rhs)
        if np.any(resid):
            return None
        return x

    def _kernel_generic(self):
        desc = self.desc
        rank, C = self.rank, self.ncols
        free = sorted(set(range(C)) - set(int(c) for c in self.pivot_cols))
        basis = []
        for c in free:
            vec = ra.zeros(desc, (C,))
            vec[c, 0] = 1
            if rank:
                vec[self.pivot_cols] = ra.neg(desc, self._rref[:, c])
            basis.append(vec)
        return basis

    # ------------------------------------------------------------------ public
    def solve(self, rhs: np.ndarray):
        """Canonical particular solution (free variables zero) or None.

        rhs has physical shape (R, m) or (R, w, m); the result matches with R
        replaced by the column count.
        """
        if self.desc.m == 1:
            x = self._solve_prime(rhs[..., 0])
            return None if x is None else x[..., None]
        return self._solve_generic(rhs)

    def kernel_basis(self):
        """Canonical kernel basis (one vector per free column, ascending)."""
        if self.desc.m == 1:
            return [v[:, None] for v in self._kernel_prime()]
        return self._kernel_generic()
