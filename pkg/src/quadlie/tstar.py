"""T*-extensions: B + B* with a cocycle-twisted bracket and hyperbolic form.

Two cocycle containers: CocycleCoeffs (alternating coefficients over an
abelian base, shared storage with trivectors) and GeneralCocycle (arbitrary
Lie base, one covector per basis pair). Both feed tstar_extend.
"""
from __future__ import annotations

from typing import Mapping, Sequence

from .algebra import LieAlgebra, abelian
from .alternating import AltCoeffs
from .errors import ValidationError
from .forms import (QuadraticStructure, hyperbolic_form, is_isometry,
                    is_lagrangian, lagrangian_complement)
from .linalg import (Fraction, Mat, Subspace, ZERO, inverse, is_zero_vec,
                     kernel, vec, vstack, zero_vec)


class CocycleCoeffs(AltCoeffs):
    """Cyclic 2-cocycle data on the abelian algebra of dimension n."""


class GeneralCocycle:
    """Skew bilinear w: B x B -> B*, stored as covectors on pairs i<j."""

    __slots__ = ("base", "values")

    def __init__(self, base: LieAlgebra,
                 values: Mapping[tuple[int, int], Sequence]):
        n = base.dim
        store: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        for (i, j), v in values.items():
            if not (1 <= i < j <= n):
                raise ValidationError(f"bad pair {(i, j)}; need 1 <= i < j <= {n}")
            v = vec(v)
            if len(v) != n:
                raise ValidationError(f"covector at {(i, j)} must have length {n}")
            if not is_zero_vec(v):
                store[(i, j)] = v
        self.base = base
        self.values = store

    @classmethod
    def from_coeffs(cls, c: AltCoeffs) -> "GeneralCocycle":
        vals: dict[tuple[int, int], list] = {}
        for (i, j, k), cv in c.terms:
            for pair, pos, sign in (((i, j), k, 1), ((i, k), j, -1),
                                    ((j, k), i, 1)):
                row = vals.setdefault(pair, [ZERO] * c.n)
                row[pos - 1] += cv if sign > 0 else -cv
        return cls(abelian(c.n), vals)

    def value_pair(self, i: int, j: int) -> tuple[Fraction, ...]:
        """w(e_i, e_j) with sign resolution; zero covector on i == j."""
        n = self.base.dim
        if i == j:
            return zero_vec(n)
        if i < j:
            return self.values.get((i, j), zero_vec(n))
        v = self.values.get((j, i))
        return zero_vec(n) if v is None else tuple(-e for e in v)

    def value(self, i: int, j: int, k: int) -> Fraction:
        return self.value_pair(i, j)[k - 1]

    def apply(self, x: Sequence[Fraction], j: int) -> tuple[Fraction, ...]:
        """w(x, e_j) by linearity in the first slot."""
        n = self.base.dim
        out = [ZERO] * n
        for i, c in enumerate(x, start=1):
            if c:
                for t, e in enumerate(self.value_pair(i, j)):
                    if e:
                        out[t] += c * e
        return tuple(out)

    def is_zero(self) -> bool:
        return not self.values

    def as_coeffs(self) -> CocycleCoeffs:
        """Role cast for cyclic cocycles over an abelian base."""
        if self.base.brackets:
            raise ValidationError("base is not abelian", law="abelian")
        bad = cyclic_defect(self)
        if bad:
            raise ValidationError(f"not cyclic at {bad[0]}", law="cyclic",
                                  witness=bad[0])
        n = self.base.dim
        return CocycleCoeffs(n, {(i, j, k): self.value(i, j, k)
                                 for (i, j) in self.values
                                 for k in range(j + 1, n + 1)})


def _touched_pairs(c: AltCoeffs) -> list[tuple[int, int]]:
    pairs = set()
    for (i, j, k), _ in c.terms:
        pairs.update(((i, j), (i, k), (j, k)))
    return sorted(pairs)


def cyclic_defect(w: GeneralCocycle | AltCoeffs
                  ) -> list[tuple[int, int, int]]:
    """Ordered triples with w(e_i,e_j)(e_k) != w(e_k,e_i)(e_j)."""
    if isinstance(w, AltCoeffs):
        return []  # alternating storage is cyclic by construction
    n = w.base.dim
    bad = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            vij = w.value_pair(i, j)
            for k in range(1, n + 1):
                if vij[k - 1] != w.value_pair(k, i)[j - 1]:
                    bad.append((i, j, k))
    return bad


def is_cyclic(w: GeneralCocycle | AltCoeffs) -> bool:
    return not cyclic_defect(w)


def cocycle_defect(w: GeneralCocycle | AltCoeffs
                   ) -> list[tuple[int, int, int]]:
    """Basis triples i<j<k violating the 2-cocycle identity.

    Sum over cyclic (a,b,c) of w([a,b],c) must equal the same cyclic sum of
    ad*(a)(w(b,c)). Over an abelian base both sides vanish.
    """
    if isinstance(w, AltCoeffs):
        return []
    base = w.base
    if not base.is_lie():
        raise ValidationError("base is not a Lie algebra", law="jacobi")
    n = base.dim
    bad = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                lhs = [ZERO] * n
                rhs = [ZERO] * n
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    wl = w.apply(base.bracket_basis(a, b), c)
                    wbc = w.value_pair(b, c)
                    for t in range(n):
                        lhs[t] += wl[t]
                        # ad*(e_a)(beta)(e_t) = -beta([e_a, e_t])
                        br = base.bracket_basis(a, t + 1)
                        rhs[t] -= sum((wbc[s] * br[s] for s in range(n)
                                       if wbc[s] and br[s]), start=ZERO)
                if lhs != rhs:
                    bad.append((i, j, k))
    return bad


def is_two_cocycle(w: GeneralCocycle | AltCoeffs) -> bool:
    return not cocycle_defect(w)


def tstar_extend(w: GeneralCocycle | AltCoeffs) -> QuadraticStructure:
    """The quadratic algebra on B + B* twisted by the cyclic 2-cocycle w.

    Basis labels: 1..n the base, n+k the dual vector e_k*.
    """
    if isinstance(w, AltCoeffs):
        n = w.n
        brackets = {}
        for (i, j) in _touched_pairs(w):
            star = [w.value(i, j, k) for k in range(1, n + 1)]
            brackets[(i, j)] = zero_vec(n) + tuple(star)
        alg = LieAlgebra(2 * n, brackets)
        return QuadraticStructure(alg, hyperbolic_form(n))
    bad = cyclic_defect(w)
    if bad:
        raise ValidationError(f"cocycle is not cyclic at triple {bad[0]}",
                              law="cyclic", witness=bad[0])
    bad = cocycle_defect(w)
    if bad:
        raise ValidationError(f"2-cocycle identity fails at triple {bad[0]}",
                              law="cocycle", witness=bad[0])
    base = w.base
    n = base.dim
    brackets = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = tuple(base.bracket_basis(i, j)) + w.value_pair(i, j)
            brackets[(i, j)] = v
        # [e_i, e_k*] = ad*(e_i)(e_k*): component l is -(e_k* of [e_i, e_l])
        for k in range(1, n + 1):
            star = [ZERO] * n
            for ell in range(1, n + 1):
                c = base.bracket_basis(i, ell)[k - 1]
                if c:
                    star[ell - 1] = -c
            key = (i, n + k)
            brackets[key] = zero_vec(n) + tuple(star)
    alg = LieAlgebra(2 * n, brackets)
    return QuadraticStructure(alg, hyperbolic_form(n))


def radical(w: GeneralCocycle | AltCoeffs) -> Subspace:
    """{b in B : w(b, -) = 0}."""
    if isinstance(w, AltCoeffs):
        return w.kernel_subspace()
    n = w.base.dim
    rows = []
    for j in range(1, n + 1):
        cols = [w.value_pair(i, j) for i in range(1, n + 1)]
        for k in range(n):
            row = [cols[i][k] for i in range(n)]
            if any(row):
                rows.append(row)
    return kernel(Mat.from_rows(rows, cols=n))


def value_span(w: GeneralCocycle | AltCoeffs) -> Subspace:
    """span{w(b, b')} inside B* coordinates."""
    if isinstance(w, AltCoeffs):
        n = w.n
        rows = [[w.value(i, j, k) for k in range(1, n + 1)]
                for (i, j) in _touched_pairs(w)]
        return Subspace.from_rows(n, rows)
    n = w.base.dim
    return Subspace.from_rows(n, list(w.values.values()))


def reduced_criteria(w: AltCoeffs) -> tuple[bool, bool, bool]:
    """(extension is reduced, rad w = 0, w values span B*), independently."""
    q = tstar_extend(w)
    return (q.alg.is_reduced(),
            radical(w).dim == 0,
            value_span(w).dim == w.n)


def find_lagrangian_ideal(q: QuadraticStructure) -> Subspace | None:
    """A lagrangian ideal when one is apparent; None otherwise.

    Reduced 2-step algebras always have one: the derived subalgebra. For
    abelian algebras a greedy isotropic search over small integer vectors is
    attempted; rationality may make it fail, which returns None.
    """
    dim = q.dim
    if dim % 2:
        return None
    n = dim // 2
    alg = q.alg
    if not alg.is_lie():
        return None
    if alg.brackets:
        if alg.nilindex() == 2 and alg.is_reduced():
            d = alg.derived()
            if is_lagrangian(q, d):
                return d
        return None
    cands = [tuple(Fraction(1) if t == s else ZERO for t in range(dim))
             for s in range(dim)]
    for s in range(dim):
        for t in range(s + 1, dim):
            for sg in (1, -1):
                cands.append(tuple(
                    Fraction(1) if u == s else (Fraction(sg) if u == t else ZERO)
                    for u in range(dim)))
    cur = Subspace.zero(dim)
    picked: list[tuple[Fraction, ...]] = []
    for v in cands:
        if cur.dim == n:
            break
        if q.phi(v, v):
            continue
        if any(q.phi(v, u) for u in picked):
            continue
        grown = cur.sum(Subspace.from_rows(dim, [v]))
        if grown.dim > cur.dim:
            picked.append(v)
            cur = grown
    return cur if cur.dim == n else None


def decompose_as_tstar(q: QuadraticStructure, ideal: Subspace
                       ) -> tuple[LieAlgebra, GeneralCocycle, Mat]:
    """Recover (B, w) and an isometric isomorphism from a lagrangian ideal.

    B is the quotient by the ideal, realized on a deterministic isotropic
    complement L; w reads off the bracket components falling back into the
    ideal. The returned matrix maps q onto tstar_extend(w) and is verified
    bracket- and form-preserving before returning.
    """
    dim = q.dim
    if dim % 2:
        raise ValidationError("dimension is odd", law="even-dim")
    n = dim // 2
    if not is_lagrangian(q, ideal):
        raise ValidationError("subspace is not lagrangian", law="lagrangian")
    ibasis = ideal.basis.data
    for a, u in enumerate(ibasis):
        for v in ibasis[a + 1:]:
            if not is_zero_vec(q.alg.bracket(u, v)):
                raise ValidationError("ideal is not abelian", law="abelian")
    for s in range(1, dim + 1):
        for u in ibasis:
            if not ideal.contains_vec(q.alg.bracket_basis_vec(s, u)):
                raise ValidationError("subspace is not an ideal", law="ideal")
    L = lagrangian_complement(q, ideal)
    lrows = L.basis.data
    coords = inverse(vstack(L.basis, ideal.basis).transpose())
    brackets = {}
    wvals = {}
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            br = q.alg.bracket(lrows[a - 1], lrows[b - 1])
            lam = coords.matvec(br)[:n]
            if any(lam):
                brackets[(a, b)] = lam
            wv = tuple(q.phi(br, lc) for lc in lrows)
            if any(wv):
                wvals[(a, b)] = wv
    B = LieAlgebra(n, brackets)
    w = GeneralCocycle(B, wvals)
    lam_rows = coords.data[:n]
    mu_rows = (L.basis * q.form).data
    iso = Mat.from_rows(list(lam_rows) + list(mu_rows), cols=dim)
    ok, why = is_isometry(q, tstar_extend(w), iso)
    if not ok:
        raise ValidationError(f"recovered map failed verification: {why}")
    return B, w, iso


def inflation(base: LieAlgebra, base_form: Mat) -> QuadraticStructure:
    """T*_0(base) carrying the hyperbolic form enlarged by a form on base.

    base_form must be symmetric and invariant for base; the result's form is
    beta(b') + beta'(b) + base_form(b, b').
    """
    n = base.dim
    split = tstar_extend(GeneralCocycle(base, {}))
    f = [list(r) for r in hyperbolic_form(n).data]
    for i in range(n):
        for j in range(n):
            f[i][j] += base_form.data[i][j]
    return QuadraticStructure(split.alg, Mat(f))
