"""Structure-constant Lie algebras.

Brackets are stored sparsely on 1-based basis labels: only keys (i,j) with
i<j are kept and [e_j,e_i] = -[e_i,e_j] is resolved on lookup, so
antisymmetry cannot be violated by construction. An absent key is a zero
bracket. Coefficient vectors are tuples indexed 0-based: the coefficient of
e_k is v[k-1].
"""
from __future__ import annotations

import itertools
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import ValidationError
from .linalg import (Fraction, Mat, Subspace, ZERO, is_zero_vec, scalar, vec,
                     zero_vec)


class AlgebraType(NamedTuple):
    r: int  # dim of the derived algebra
    s: int  # dim of the centre


class LieAlgebra:
    """dim + sparse brackets. Treated as immutable after construction."""

    __slots__ = ("dim", "brackets", "_jacobi")

    def __init__(self, dim: int, brackets: Mapping[tuple[int, int], Sequence]):
        if dim < 0:
            raise ValueError("negative dimension")
        clean: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        for (i, j), v in brackets.items():
            if not (1 <= i < j <= dim):
                raise ValueError(f"bracket key ({i},{j}) not 1 <= i < j <= {dim}")
            v = vec(v)
            if len(v) != dim:
                raise ValueError(f"bracket value for ({i},{j}) has wrong length")
            if not is_zero_vec(v):
                clean[(i, j)] = v
        self.dim = dim
        self.brackets = clean
        self._jacobi = None

    def __eq__(self, other) -> bool:
        return (isinstance(other, LieAlgebra) and self.dim == other.dim
                and self.brackets == other.brackets)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, {len(self.brackets)} brackets)"

    # ---- bracket evaluation ----

    def bracket_basis(self, i: int, j: int) -> tuple[Fraction, ...]:
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise ValueError(f"basis label out of range: ({i},{j})")
        if i == j:
            return zero_vec(self.dim)
        if i < j:
            v = self.brackets.get((i, j))
            return v if v is not None else zero_vec(self.dim)
        v = self.brackets.get((j, i))
        return tuple(-c for c in v) if v is not None else zero_vec(self.dim)

    def bracket(self, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
        x = vec(x)
        y = vec(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length mismatch")
        out = [ZERO] * self.dim
        for (i, j), w in self.brackets.items():
            c = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
            if c:
                for r, e in enumerate(w):
                    if e:
                        out[r] += c * e
        return tuple(out)

    def bracket_basis_vec(self, i: int, y: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """[e_i, y] iterating only the nonzero coordinates of y."""
        out = [ZERO] * self.dim
        for b, c in enumerate(y, start=1):
            if c:
                w = self.bracket_basis(i, b)
                for r, e in enumerate(w):
                    if e:
                        out[r] += c * e
        return tuple(out)

    def ad_basis(self, i: int) -> Mat:
        """Matrix of ad(e_i): column j holds [e_i, e_j]."""
        cols = [self.bracket_basis(i, j) for j in range(1, self.dim + 1)]
        return Mat([[cols[j][r] for j in range(self.dim)]
                    for r in range(self.dim)]) if self.dim else Mat.zero(0, 0)

    # ---- Lie-ness ----

    def jacobi_defect(self) -> list[tuple[int, int, int, tuple[Fraction, ...]]]:
        """Basis triples i<j<k whose cyclic bracket sum is nonzero."""
        bad = []
        for i, j, k in itertools.combinations(range(1, self.dim + 1), 3):
            t1 = self.bracket_basis_vec(i, self.bracket_basis(j, k))
            t2 = self.bracket_basis_vec(j, self.bracket_basis(k, i))
            t3 = self.bracket_basis_vec(k, self.bracket_basis(i, j))
            tot = tuple(a + b + c for a, b, c in zip(t1, t2, t3))
            if not is_zero_vec(tot):
                bad.append((i, j, k, tot))
        return bad

    def is_lie(self) -> bool:
        if self._jacobi is None:
            self._jacobi = not self.jacobi_defect()
        return self._jacobi

    def _require_lie(self):
        if not self.is_lie():
            raise ValidationError("Jacobi identity fails", law="jacobi",
                                  witness=self.jacobi_defect()[0][:3])

    # ---- subspace invariants ----

    def derived(self) -> Subspace:
        return Subspace.from_rows(self.dim, list(self.brackets.values()))

    def centre(self) -> Subspace:
        """{x : [x, e_s] = 0 for all s} by one kernel computation."""
        rows = []
        for s in range(1, self.dim + 1):
            cols = [self.bracket_basis(i, s) for i in range(1, self.dim + 1)]
            for r in range(self.dim):
                row = [cols[i][r] for i in range(self.dim)]
                if any(row):
                    rows.append(row)
        if not rows:
            return Subspace.full(self.dim)
        from .linalg import kernel
        return kernel(Mat(rows))

    def lower_central_series(self) -> list[Subspace]:
        """[A^1, A^2, ...] until the first repeat (which is kept once)."""
        self._require_lie()
        cur = Subspace.full(self.dim)
        series = [cur]
        while True:
            rows = []
            for i in range(1, self.dim + 1):
                for v in cur.basis.data:
                    w = self.bracket_basis_vec(i, v)
                    if not is_zero_vec(w):
                        rows.append(w)
            nxt = Subspace.from_rows(self.dim, rows)
            series.append(nxt)
            if nxt.dim == cur.dim or nxt.dim == 0:
                return series
            cur = nxt

    def nilindex(self) -> int | None:
        """Smallest t with A^{t+1} = 0, or None when not nilpotent."""
        for idx, sub in enumerate(self.lower_central_series()):
            if sub.dim == 0:
                return idx
        return None

    def upper_central_series(self) -> list[Subspace]:
        """[Z_1, Z_2, ...] until stabilization; Z_{t+1} is the preimage of Z_t."""
        from .linalg import kernel
        series = [self.centre()]
        while True:
            zt = series[-1]
            if zt.dim == self.dim:
                return series
            # annihilator rows: v in row space of B  <=>  u.v = 0 for every u
            # in the null space of B (row space = null space ^ perp under dot)
            ann = (kernel(zt.basis).basis.data if zt.dim else
                   Mat.identity(self.dim).data)
            rows = []
            for s in range(1, self.dim + 1):
                cols = [self.bracket_basis(i, s) for i in range(1, self.dim + 1)]
                for a in ann:
                    row = []
                    for i in range(self.dim):
                        tot = ZERO
                        col = cols[i]
                        for r, e in enumerate(a):
                            if e and col[r]:
                                tot += e * col[r]
                        row.append(tot)
                    if any(row):
                        rows.append(row)
            nxt = kernel(Mat(rows)) if rows else Subspace.full(self.dim)
            if nxt.dim == zt.dim:
                return series
            series.append(nxt)

    def algebra_type(self) -> AlgebraType:
        return AlgebraType(self.derived().dim, self.centre().dim)

    def is_reduced(self) -> bool:
        """Z(A) contained in the derived algebra."""
        return self.derived().contains(self.centre())

    # ---- constructions ----

    def permute_basis(self, perm: Sequence[int]) -> "LieAlgebra":
        """New basis f_r = e_{perm[r-1]}; perm is a 1-based relabeling."""
        if sorted(perm) != list(range(1, self.dim + 1)):
            raise ValueError("not a permutation of 1..dim")
        inv = {old: new for new, old in enumerate(perm, start=1)}
        out: dict[tuple[int, int], list[Fraction]] = {}
        for r in range(1, self.dim + 1):
            for s in range(r + 1, self.dim + 1):
                w = self.bracket_basis(perm[r - 1], perm[s - 1])
                if is_zero_vec(w):
                    continue
                v = [ZERO] * self.dim
                for u, c in enumerate(w, start=1):
                    if c:
                        v[inv[u] - 1] = c
                out[(r, s)] = v
        return LieAlgebra(self.dim, out)

    def direct_sum(self, other: "LieAlgebra") -> "LieAlgebra":
        n, m = self.dim, other.dim
        out: dict[tuple[int, int], list[Fraction]] = {}
        for (i, j), v in self.brackets.items():
            out[(i, j)] = list(v) + [ZERO] * m
        for (i, j), v in other.brackets.items():
            out[(i + n, j + n)] = [ZERO] * n + list(v)
        return LieAlgebra(n + m, out)


def abelian(dim: int) -> LieAlgebra:
    return LieAlgebra(dim, {})


def heisenberg() -> LieAlgebra:
    """Basis x, y, z with [x,y] = z."""
    return LieAlgebra(3, {(1, 2): (0, 0, 1)})


def from_bracket_table(dim: int,
                       table: Mapping[tuple[int, int], Mapping[int, object]],
                       ) -> LieAlgebra:
    """Build from {(i,j): {k: coeff}} meaning [e_i,e_j] = sum coeff*e_k."""
    br = {}
    for (i, j), terms in table.items():
        v = [ZERO] * dim
        for k, c in terms.items():
            v[k - 1] = scalar(c)
        br[(i, j)] = v
    return LieAlgebra(dim, br)
