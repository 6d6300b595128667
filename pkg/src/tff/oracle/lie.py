"""Matrix realisations of sl(n+1) and sp(2n) and the nilradicals inside them.

Structure constants and module actions are read off from matrix
commutators, so nothing here depends on the Weyl-group code.  Weights of
basis vectors are computed from the eigenvalues of the coroot matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .. import linalg
from ..rootdata import RootDatum, nilradical

Mat = tuple[tuple[Fraction, ...], ...]


def _zero(n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(n)]


def _unit(n: int, i: int, j: int, c=1) -> list[list[Fraction]]:
    m = _zero(n)
    m[i][j] = Fraction(c)
    return m


def _add(a, b, c=1):
    return [[x + c * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _freeze(m) -> Mat:
    return tuple(tuple(Fraction(x) for x in row) for row in m)


def bracket(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    ab = linalg.matmul(a, b)
    ba = linalg.matmul(b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


@dataclass(frozen=True)
class MatrixLieAlgebra:
    """A Lie algebra of n x n matrices with a weight basis (root vectors plus a Cartan basis)."""

    name: str
    matrices: tuple[Mat, ...]
    weights: tuple[tuple[Fraction, ...], ...]  # root-basis coordinates, zero for Cartan elements

    def coordinates(self, m: Sequence[Sequence]) -> list[Fraction]:
        """Coordinates of a matrix in the basis; raises if it is not in the span."""
        cols = [[x for row in b for x in row] for b in self.matrices]
        a = [list(r) for r in zip(*cols)]
        flat = [Fraction(x) for row in m for x in row]
        sol = linalg.solve(a, flat)
        if sol is None:
            raise ValueError(f"matrix is not in {self.name}")
        return sol


def _sl(n: int):
    """sl(n) basis: E_ij (i != j) then E_kk - E_{k+1,k+1}; coroots H_k for the simple roots."""
    mats = []
    for i, j in product(range(n), repeat=2):
        if i != j:
            mats.append(_unit(n, i, j))
    for k in range(n - 1):
        mats.append(_add(_unit(n, k, k), _unit(n, k + 1, k + 1), -1))
    simple = [(_unit(n, k, k + 1), _unit(n, k + 1, k)) for k in range(n - 1)]
    return mats, simple


def _sp(n: int):
    """sp(2n) for the form J = [[0, I], [-I, 0]]; simple roots e_i - e_{i+1} and 2 e_n."""
    size = 2 * n
    mats = []
    for i, j in product(range(n), repeat=2):
        # e_i - e_j block (A, -A^T)
        mats.append(_add(_unit(size, i, j), _unit(size, n + j, n + i), -1))
    for i in range(n):
        for j in range(i, n):
            if i == j:
                mats.append(_unit(size, i, n + i))
                mats.append(_unit(size, n + i, i))
            else:
                mats.append(_add(_unit(size, i, n + j), _unit(size, j, n + i)))
                mats.append(_add(_unit(size, n + j, i), _unit(size, n + i, j)))
    simple = []
    for k in range(n - 1):
        simple.append(
            (
                _add(_unit(size, k, k + 1), _unit(size, n + k + 1, n + k), -1),
                _add(_unit(size, k + 1, k), _unit(size, n + k, n + k + 1), -1),
            )
        )
    simple.append((_unit(size, n - 1, 2 * n - 1), _unit(size, 2 * n - 1, n - 1)))
    return mats, simple


def _coroots(simple) -> list[list[list[Fraction]]]:
    out = []
    for e, f in simple:
        h = bracket(e, f)
        he = bracket(h, e)
        # scale so that alpha(h) = 2
        i, j = next((i, j) for i, row in enumerate(e) for j, x in enumerate(row) if x)
        c = he[i][j] / e[i][j]
        out.append([[2 * x / c for x in row] for row in h])
    return out


def _diagonal_weight(h_list, m) -> tuple[Fraction, ...] | None:
    """Eigenvalues of ad(h) on m for every coroot h, or None if m is not a common eigenvector."""
    vals = []
    i, j = next(((i, j) for i, row in enumerate(m) for j, x in enumerate(row) if x), (None, None))
    if i is None:
        return None
    for h in h_list:
        hm = bracket(h, m)
        c = hm[i][j] / m[i][j]
        if any(hm[r][s] != c * m[r][s] for r in range(len(m)) for s in range(len(m))):
            return None
        vals.append(c)
    return tuple(vals)


@lru_cache(maxsize=None)
def matrix_model(rd: RootDatum) -> tuple[MatrixLieAlgebra, tuple[Mat, ...]]:
    """The matrix algebra of ``rd`` and its coroot matrices H_1..H_n."""
    if rd.cartan_type == "A":
        mats, simple = _sl(rd.rank + 1)
        name = f"sl({rd.rank + 1})"
    elif rd.cartan_type == "C":
        mats, simple = _sp(rd.rank)
        name = f"sp({2 * rd.rank})"
    else:
        raise NotImplementedError(f"no matrix model for type {rd.cartan_type}; available: A, C")
    hs = _coroots(simple)
    weights = []
    basis = []
    cartan_count = 0
    for m in mats:
        fund = _diagonal_weight(hs, m)
        if fund is None or all(x == 0 for x in fund):
            # Cartan elements: diagonal matrices
            weights.append(tuple(Fraction(0) for _ in range(rd.rank)))
            cartan_count += 1
        else:
            weights.append(rd.to_root(fund))
        basis.append(_freeze(m))
    if rd.cartan_type == "C":
        # replace the diagonal part with h_1..h_n so the basis stays independent
        basis = [b for b, w in zip(basis, weights) if any(w)]
        weights = [w for w in weights if any(w)]
        basis += [_freeze(h) for h in hs]
        weights += [tuple(Fraction(0) for _ in range(rd.rank))] * rd.rank
    alg = MatrixLieAlgebra(name, tuple(basis), tuple(weights))
    pos = {w for w in alg.weights if any(w)}
    expected = {tuple(Fraction(x) for x in r) for r in rd.root_set}
    if pos != expected:  # pragma: no cover - model bug
        raise AssertionError(f"{name}: root vectors do not match the root system")
    return alg, tuple(_freeze(h) for h in hs)


@dataclass(frozen=True)
class NilpotentLieModel:
    """n_P with basis x_alpha (alpha in Phi(n_P)) and integer structure constants."""

    roots: tuple[tuple[int, ...], ...]
    matrices: tuple[Mat, ...]
    structure: tuple[tuple[tuple[tuple[int, Fraction], ...], ...], ...]  # [a][b] -> ((c, N), ...)

    @property
    def dim(self) -> int:
        return len(self.roots)

    def check_jacobi(self) -> bool:
        n = self.dim

        def br(u: dict[int, Fraction], v: dict[int, Fraction]) -> dict[int, Fraction]:
            out: dict[int, Fraction] = {}
            for a, ca in u.items():
                for b, cb in v.items():
                    for c, n_ in self.structure[a][b]:
                        out[c] = out.get(c, Fraction(0)) + ca * cb * n_
            return {k: v for k, v in out.items() if v}

        for a in range(n):
            for b in range(n):
                for c in range(n):
                    x, y, z = {a: Fraction(1)}, {b: Fraction(1)}, {c: Fraction(1)}
                    total: dict[int, Fraction] = {}
                    for t in (br(br(x, y), z), br(br(y, z), x), br(br(z, x), y)):
                        for k, v in t.items():
                            total[k] = total.get(k, Fraction(0)) + v
                    if any(total.values()):
                        return False
        return True

    def check_grading(self) -> bool:
        for a in range(self.dim):
            for b in range(self.dim):
                for c, _ in self.structure[a][b]:
                    want = tuple(x + y for x, y in zip(self.roots[a], self.roots[b]))
                    if self.roots[c] != want:
                        return False
        return True


def nilpotent_model(rd: RootDatum, levi: Iterable[int]) -> NilpotentLieModel:
    alg, _ = matrix_model(rd)
    par = nilradical(rd, levi)
    by_weight = {w: m for w, m in zip(alg.weights, alg.matrices) if any(w)}
    roots = par.nilradical_roots
    mats = tuple(by_weight[tuple(Fraction(x) for x in r)] for r in roots)
    index = {r: i for i, r in enumerate(roots)}
    structure = []
    for a in range(len(roots)):
        row = []
        for b in range(len(roots)):
            br = bracket(mats[a], mats[b])
            if not any(x for r in br for x in r):
                row.append(())
                continue
            s = tuple(x + y for x, y in zip(roots[a], roots[b]))
            c = index[s]  # closed: a sum of nilradical roots is a nilradical root
            m = mats[c]
            i, j = next((i, j) for i, r in enumerate(m) for j, x in enumerate(r) if x)
            coef = br[i][j] / m[i][j]
            if _add(br, m, -coef) != _zero(len(m)):
                raise AssertionError("bracket is not a multiple of the root vector")  # pragma: no cover
            row.append(((c, coef),))
        structure.append(tuple(row))
    return NilpotentLieModel(roots, mats, tuple(structure))


@dataclass(frozen=True)
class RepresentationModule:
    """Finite-dimensional module with a weight basis and the action of each x_alpha."""

    name: str
    weights: tuple[tuple[Fraction, ...], ...]
    action: tuple[Mat, ...]  # action[a] is the matrix of x_a, indexed like the model's roots

    @property
    def dim(self) -> int:
        return len(self.weights)

    def check_representation(self, model: NilpotentLieModel) -> bool:
        for a in range(model.dim):
            for b in range(model.dim):
                lhs = bracket(self.action[a], self.action[b])
                rhs = _zero(self.dim)
                for c, n_ in model.structure[a][b]:
                    rhs = _add(rhs, self.action[c], n_)
                if [list(r) for r in lhs] != rhs:
                    return False
        return True


def trivial_module(rd: RootDatum, model: NilpotentLieModel) -> RepresentationModule:
    z = ((Fraction(0),),)
    return RepresentationModule("trivial", (tuple(Fraction(0) for _ in range(rd.rank)),), (z,) * model.dim)


def sl2_module(n: int, model: NilpotentLieModel) -> RepresentationModule:
    """(n+1)-dimensional irreducible of sl(2): e v_k = k (n - k + 1) v_{k-1}."""
    weights = tuple((Fraction(n - 2 * k, 2),) for k in range(n + 1))
    e = _zero(n + 1)
    for k in range(1, n + 1):
        e[k - 1][k] = Fraction(k * (n - k + 1))
    act = tuple(_freeze(e) for _ in range(model.dim))
    return RepresentationModule(f"V({n})", weights, act)


def natural_module(rd: RootDatum, model: NilpotentLieModel) -> RepresentationModule:
    alg, hs = matrix_model(rd)
    size = len(hs[0])
    weights = tuple(rd.to_root([h[i][i] for h in hs]) for i in range(size))
    return RepresentationModule("natural", weights, tuple(model.matrices))


def adjoint_module(rd: RootDatum, model: NilpotentLieModel) -> RepresentationModule:
    alg, _ = matrix_model(rd)
    act = []
    for x in model.matrices:
        cols = [alg.coordinates(bracket(x, b)) for b in alg.matrices]
        act.append(_freeze([list(r) for r in zip(*cols)]))
    return RepresentationModule("adjoint", alg.weights, tuple(act))


def coefficient_module(rd: RootDatum, model: NilpotentLieModel, lam: Sequence[int]) -> RepresentationModule:
    """An explicit module of highest weight ``lam`` (fundamental coordinates), when one is available.

    Available: the trivial module, every irreducible of A1, the natural
    module (highest weight the first fundamental weight) and the adjoint
    module of the matrix algebra.
    """
    lam = tuple(int(x) for x in lam)
    if not any(lam):
        return trivial_module(rd, model)
    if rd.cartan_type == "A" and rd.rank == 1:
        return sl2_module(lam[0], model)
    if lam == tuple(int(i == 0) for i in range(rd.rank)):
        return natural_module(rd, model)
    top = max(rd.positive_roots, key=sum)
    if lam == tuple(int(x) for x in rd.to_fundamental(top)):
        return adjoint_module(rd, model)
    raise NotImplementedError(
        f"no explicit {rd.name} module of highest weight {lam}; available: 0, the natural and the adjoint module"
    )
