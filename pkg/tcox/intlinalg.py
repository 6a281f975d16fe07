# Copyright 2026, tcox developers
"""

Exact integer linear algebra.

Matrices are numpy arrays with `dtype=object`, so every entry is a Python `int` of
arbitrary size and no floating point ever enters a computation.

Provides:

* Smith normal form `snf` (with the unimodular transformation matrices),
  row-style Hermite normal form `hnf`, `rank`, `solve` and `kernel_basis`.
* `cokernel`, returning a finitely generated abelian group in canonical form
  together with the images of the standard generators.
* `syz2` and `trinomial_syzygies`, the two syzygy bases of points on P^1.
* `FGAbelianGroup` / `GroupElement` and `change_basis` for presenting degrees
  in user-chosen generators.


"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .exceptions import DegeneratePoints

logger = logging.getLogger(__name__)


def _as_int(x) -> int:
    if isinstance(x, float):
        raise TypeError(f"Floating point entry {x!r} is not accepted; use int or Fraction.")
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValueError(f"Non-integral entry {x}.")
        return x.numerator
    return int(x)


def int_matrix(rows, ncols: Optional[int] = None) -> np.ndarray:
    """ Convert nested sequences (or an existing array) to an exact integer matrix.

    Args:
        rows: Sequence of rows, or a 2-d numpy array.
        ncols: Column count. Required when `rows` is empty.

    Returns:
        2-d numpy array of dtype object holding Python ints.
    """
    if isinstance(rows, np.ndarray):
        if rows.ndim != 2:
            raise ValueError(f"Expected a 2-d matrix, got shape {rows.shape}.")
        rows = rows.tolist() if rows.shape[0] else []
        if not rows and ncols is None:
            raise ValueError("An empty matrix needs an explicit column count.")
    rows = [list(row) for row in rows]
    if not rows:
        if ncols is None:
            raise ValueError("An empty matrix needs an explicit column count.")
        return np.zeros((0, ncols), dtype=object)
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ValueError("Ragged matrix: rows have different lengths.")
    if ncols is not None and width != ncols:
        raise ValueError(f"Expected {ncols} columns, got {width}.")
    A = np.zeros((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            A[i, j] = _as_int(x)
    return A


def identity(n: int) -> np.ndarray:
    I = np.zeros((n, n), dtype=object)
    for i in range(n):
        I[i, i] = 1
    return I


def clear_denominators(values: Sequence) -> List[int]:
    """ Multiply a rational vector by the lcm of its denominators.

    Examples:
        >>> clear_denominators([Fraction(1, 2), Fraction(-1, 3), 2])
        [3, -2, 12]
    """
    values = [Fraction(v) for v in values]
    lcm = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in values), 1)
    return [int(v * lcm) for v in values]


def _swap_rows(M, i, j):
    if i != j:
        M[[i, j]] = M[[j, i]]


def _swap_cols(M, i, j):
    if i != j:
        M[:, [i, j]] = M[:, [j, i]]


def _min_abs_position(M, positions):
    """ Position of the nonzero entry of least absolute value; first one wins ties. """
    best = None
    for i, j in positions:
        x = M[i, j]
        if x != 0 and (best is None or abs(x) < best[0]):
            best = (abs(x), i, j)
    return None if best is None else best[1:]


class SNFResult(NamedTuple):
    """ Smith normal form S = U A V with unimodular U and V. """
    S: np.ndarray
    U: np.ndarray
    V: np.ndarray
    invariant_factors: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def snf(A) -> SNFResult:
    """ Smith normal form of an integer matrix.

    Pivots are chosen with minimal absolute value to limit coefficient growth.
    The diagonal entries d_1 | d_2 | ... | d_k are positive, followed by zeros.

    Args:
        A: Integer matrix (anything `int_matrix` accepts).

    Returns:
        SNFResult(S, U, V, invariant_factors) with U @ A @ V == S.

    Examples:
        >>> snf([[2, 4], [6, 8]]).invariant_factors
        (2, 4)
    """
    S = int_matrix(A) if not isinstance(A, np.ndarray) else int_matrix(A, ncols=A.shape[1])
    m, n = S.shape
    U, V = identity(m), identity(n)
    for t in range(min(m, n)):
        pivot = _min_abs_position(S, ((i, j) for i in range(t, m) for j in range(t, n)))
        if pivot is None:
            break
        _swap_rows(S, t, pivot[0])
        _swap_rows(U, t, pivot[0])
        _swap_cols(S, t, pivot[1])
        _swap_cols(V, t, pivot[1])
        while True:
            p = S[t, t]
            for i in range(t + 1, m):
                q = S[i, t] // p
                if q:
                    S[i] -= q * S[t]
                    U[i] -= q * U[t]
            for j in range(t + 1, n):
                q = S[t, j] // p
                if q:
                    S[:, j] -= q * S[:, t]
                    V[:, j] -= q * V[:, t]
            remainder = _min_abs_position(
                S, [(i, t) for i in range(t + 1, m)] + [(t, j) for j in range(t + 1, n)])
            if remainder is not None:
                i, j = remainder
                if j == t:
                    _swap_rows(S, t, i)
                    _swap_rows(U, t, i)
                else:
                    _swap_cols(S, t, j)
                    _swap_cols(V, t, j)
                continue
            # Divisibility: pull a row with an entry not divisible by the pivot into row t.
            bad_row = next((i for i in range(t + 1, m) for j in range(t + 1, n) if S[i, j] % p), None)
            if bad_row is not None:
                S[t] += S[bad_row]
                U[t] += U[bad_row]
                continue
            break
        if S[t, t] < 0:
            S[t] = -S[t]
            U[t] = -U[t]
    factors = tuple(int(S[i, i]) for i in range(min(m, n)) if S[i, i] != 0)
    logger.debug("SNF of %dx%d matrix: invariant factors %s", m, n, factors)
    return SNFResult(S, U, V, factors)


def hnf(A, ncols: Optional[int] = None) -> np.ndarray:
    """ Row-style Hermite normal form, zero rows dropped.

    Pivots are positive and entries above a pivot lie in [0, pivot). Only unimodular
    row operations are used, so the row lattice is preserved.
    """
    H = int_matrix(A, ncols)
    m, n = H.shape
    row = 0
    for col in range(n):
        if row >= m:
            break
        while True:
            pos = _min_abs_position(H, ((i, col) for i in range(row, m)))
            if pos is None:
                break
            _swap_rows(H, row, pos[0])
            cleared = True
            for i in range(row + 1, m):
                q = H[i, col] // H[row, col]
                if q:
                    H[i] -= q * H[row]
                if H[i, col] != 0:
                    cleared = False
            if cleared:
                break
        if H[row, col] == 0:
            continue
        if H[row, col] < 0:
            H[row] = -H[row]
        p = H[row, col]
        for i in range(row):
            q = H[i, col] // p
            if q:
                H[i] -= q * H[row]
        row += 1
    return H[:row]


def rank(A, ncols: Optional[int] = None) -> int:
    return snf(int_matrix(A, ncols)).rank


def kernel_basis(A, ncols: Optional[int] = None) -> List[Tuple[int, ...]]:
    """ Saturated lattice basis of {x in Z^n : A x = 0}, in Hermite normal form.

    Examples:
        >>> kernel_basis([[1, 1, 1]])
        [(1, 0, -1), (0, 1, -1)]
    """
    res = snf(int_matrix(A, ncols))
    kernel = res.V[:, res.rank:]
    if kernel.shape[1] == 0:
        return []
    return [tuple(int(x) for x in row) for row in hnf(kernel.T)]


def saturate(rows, ncols: int) -> List[Tuple[int, ...]]:
    """ Lattice basis of the saturation of the row lattice of `rows` in Z^ncols. """
    annihilator = kernel_basis(rows, ncols) if len(rows) else [
        tuple(1 if i == j else 0 for j in range(ncols)) for i in range(ncols)]
    if not annihilator:
        return [tuple(1 if i == j else 0 for j in range(ncols)) for i in range(ncols)]
    return kernel_basis(annihilator, ncols)


def solve(A, b, ncols: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """ An integer solution x of A x = b, or None if there is none. """
    A = int_matrix(A, ncols)
    m, n = A.shape
    b = np.array([_as_int(x) for x in b], dtype=object)
    if len(b) != m:
        raise ValueError(f"Right hand side has length {len(b)}, expected {m}.")
    res = snf(A)
    c = res.U.dot(b) if m else b
    y = np.zeros(n, dtype=object)
    for i in range(m):
        d = res.S[i, i] if i < min(m, n) else 0
        if d == 0:
            if c[i] != 0:
                return None
        elif c[i] % d:
            return None
        else:
            y[i] = c[i] // d
    x = res.V.dot(y) if n else y
    return tuple(int(v) for v in x)


@dataclass(frozen=True)
class FGAbelianGroup:
    """ The group Z^free_rank + Z/d_1 + ... + Z/d_t with d_1 | d_2 | ... | d_t.

    Orders equal to 1 are dropped, so equality is structural.
    """
    free_rank: int = 0
    torsion_orders: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError(f"Free rank must be nonnegative, got {self.free_rank}.")
        orders = tuple(int(d) for d in self.torsion_orders if int(d) != 1)
        if any(d < 2 for d in orders):
            raise ValueError(f"Torsion orders must be positive integers, got {self.torsion_orders}.")
        if any(b % a for a, b in zip(orders, orders[1:])):
            raise ValueError(f"Torsion orders {orders} do not divide each other in sequence.")
        object.__setattr__(self, 'torsion_orders', orders)

    @property
    def is_free(self) -> bool:
        return not self.torsion_orders

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion_orders

    def element(self, free_part=(), torsion_part=()) -> 'GroupElement':
        free_part = tuple(free_part) or (0,) * self.free_rank
        torsion_part = tuple(torsion_part) or (0,) * len(self.torsion_orders)
        return GroupElement(self, free_part, torsion_part)

    def zero(self) -> 'GroupElement':
        return self.element()

    def as_dict(self) -> dict:
        return {'free_rank': self.free_rank, 'torsion': list(self.torsion_orders)}

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion_orders]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupElement:
    """ Element of an `FGAbelianGroup`; torsion residues are kept in [0, d_i). """
    owner: FGAbelianGroup
    free_part: Tuple[int, ...]
    torsion_part: Tuple[int, ...]

    def __post_init__(self):
        free = tuple(_as_int(x) for x in self.free_part)
        torsion = tuple(_as_int(x) for x in self.torsion_part)
        if len(free) != self.owner.free_rank or len(torsion) != len(self.owner.torsion_orders):
            raise ValueError(f"Element ({free}, {torsion}) does not fit the group {self.owner}.")
        torsion = tuple(x % d for x, d in zip(torsion, self.owner.torsion_orders))
        object.__setattr__(self, 'free_part', free)
        object.__setattr__(self, 'torsion_part', torsion)

    def _check(self, other):
        if not isinstance(other, GroupElement) or other.owner != self.owner:
            raise ValueError(f"Cannot combine elements of {self.owner} and {getattr(other, 'owner', other)}.")

    def __add__(self, other):
        self._check(other)
        return GroupElement(self.owner,
                            tuple(a + b for a, b in zip(self.free_part, other.free_part)),
                            tuple(a + b for a, b in zip(self.torsion_part, other.torsion_part)))

    def __neg__(self):
        return GroupElement(self.owner, tuple(-a for a in self.free_part), tuple(-a for a in self.torsion_part))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        k = _as_int(k)
        return GroupElement(self.owner, tuple(k * a for a in self.free_part), tuple(k * a for a in self.torsion_part))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not any(self.free_part) and not any(self.torsion_part)

    def order(self) -> Optional[int]:
        """ Order of the element, None if it has infinite order. """
        if any(self.free_part):
            return None
        return reduce(lambda a, b: a * b // gcd(a, b),
                      (d // gcd(d, x) for x, d in zip(self.torsion_part, self.owner.torsion_orders)), 1)

    def as_tuple(self) -> Tuple[int, ...]:
        return self.free_part + self.torsion_part

    def as_dict(self) -> dict:
        return {'free': list(self.free_part), 'torsion': list(self.torsion_part)}

    def __str__(self):
        entries = [str(x) for x in self.free_part] + [f"{x}̅" for x in self.torsion_part]
        return "(" + ", ".join(entries) + ")"


def cokernel(A, ncols: Optional[int] = None) -> Tuple[FGAbelianGroup, List[GroupElement]]:
    """ The group Z^cols / rowspace(A) and the images of the standard generators.

    Columns of A index generators, rows are relations. With S = U A V, the map
    x -> x V identifies rowspace(A) with rowspace(S), so generator j maps to row j of V.
    Each free coordinate is sign-normalised so that the first generator (in column order)
    with a nonzero coordinate there gets a positive one.

    Args:
        A: Relation matrix.
        ncols: Number of generators; required if A has no rows.

    Returns:
        (group, images), images[j] being the class of generator j.
    """
    A = int_matrix(A, ncols)
    n = A.shape[1]
    res = snf(A)
    k = res.rank
    diag = res.invariant_factors
    torsion_idx = [i for i, d in enumerate(diag) if d > 1]
    group = FGAbelianGroup(n - k, tuple(diag[i] for i in torsion_idx))
    V = res.V
    free = [[V[j, c] for c in range(k, n)] for j in range(n)]
    for c in range(n - k):
        first = next((free[j][c] for j in range(n) if free[j][c] != 0), 0)
        if first < 0:
            for j in range(n):
                free[j][c] = -free[j][c]
    images = [group.element(free[j], [V[j, i] for i in torsion_idx]) for j in range(n)]
    logger.debug("Cokernel of %dx%d relation matrix: %s", A.shape[0], n, group)
    return group, images


def _representative(point):
    rep = getattr(point, 'representative', point)
    b, c = rep
    return Fraction(b), Fraction(c)


def _check_distinct(reps):
    for (i, a), (j, b) in combinations(enumerate(reps), 2):
        if a[0] * b[1] - a[1] * b[0] == 0:
            raise DegeneratePoints(f"Points {i} and {j} ({a} and {b}) are proportional or zero.")


def syz2(vectors) -> List[Tuple[int, ...]]:
    """ Saturated integer basis of the linear relations among rational 2-vectors.

    Args:
        vectors: r+1 pairwise non-proportional nonzero 2-vectors (or P^1 points).

    Returns:
        max(0, r-1) integer vectors beta with sum(beta_i * vectors[i]) == 0, in HNF.

    Raises:
        DegeneratePoints: for zero or proportional vectors.
    """
    reps = [_representative(v) for v in vectors]
    for i, v in enumerate(reps):
        if v == (0, 0):
            raise DegeneratePoints(f"Vector {i} is zero.")
    _check_distinct(reps)
    if not reps:
        return []
    rows = [clear_denominators([v[0] for v in reps]), clear_denominators([v[1] for v in reps])]
    return kernel_basis(rows, ncols=len(reps))


def trinomial_syzygies(points) -> List[Tuple[Fraction, ...]]:
    """ The syzygies supported on consecutive triples of points [b_i:c_i].

    The i-th syzygy has entries (c_k b_j - c_j b_k, c_i b_k - c_k b_i, c_j b_i - c_i b_j)
    at positions i, j = i+1, k = i+2.

    Examples:
        >>> trinomial_syzygies([(0, 1), (1, 0), (1, 1)])
        [(Fraction(1, 1), Fraction(1, 1), Fraction(-1, 1))]
    """
    reps = [_representative(p) for p in points]
    if len(reps) < 3:
        return []
    _check_distinct(reps)
    syzygies = []
    for i in range(len(reps) - 2):
        j, k = i + 1, i + 2
        (bi, ci), (bj, cj), (bk, ck) = reps[i], reps[j], reps[k]
        beta = [Fraction(0)] * len(reps)
        beta[i] = ck * bj - cj * bk
        beta[j] = ci * bk - ck * bi
        beta[k] = cj * bi - ci * bj
        syzygies.append(tuple(beta))
    return syzygies


def change_basis(group: FGAbelianGroup, images: Sequence[GroupElement],
                 free_generators: Sequence[GroupElement],
                 torsion_generators: Sequence[GroupElement] = ()) -> Tuple[FGAbelianGroup, List[GroupElement]]:
    """ Re-express group elements in user-chosen generators.

    Args:
        group: The group the images live in.
        images: Elements to convert.
        free_generators: free_rank elements whose free parts form a unimodular matrix.
        torsion_generators: Torsion elements whose orders divide each other in sequence and
            which generate the torsion subgroup.

    Returns:
        (new_group, new_images) where coordinates refer to the given generators.
    """
    a = group.free_rank
    t = len(group.torsion_orders)
    if len(free_generators) != a:
        raise ValueError(f"Expected {a} free generators, got {len(free_generators)}.")
    for g in list(free_generators) + list(torsion_generators):
        if g.owner != group:
            raise ValueError(f"Generator {g} does not belong to {group}.")
    F = [[g.free_part[i] for g in free_generators] for i in range(a)]
    if a and snf(F).invariant_factors != (1,) * a:
        raise ValueError("Free generators do not form a basis of the free part.")
    if any(any(h.free_part) for h in torsion_generators):
        raise ValueError("Torsion generators must have zero free part.")
    orders = [h.order() for h in torsion_generators]
    if any(d < 2 for d in orders):
        raise ValueError("Torsion generators must be nonzero.")
    new_group = FGAbelianGroup(a, orders)
    if reduce(lambda x, y: x * y, orders, 1) != reduce(lambda x, y: x * y, group.torsion_orders, 1):
        raise ValueError("Torsion generators do not form a basis of the torsion subgroup.")
    M = [[h.torsion_part[i] for h in torsion_generators]
         + [-group.torsion_orders[i] if i == j else 0 for j in range(t)] for i in range(t)]

    def torsion_coordinates(residues):
        z = solve(M, residues, ncols=len(torsion_generators) + t)
        if z is None:
            raise ValueError("Torsion generators do not generate the torsion subgroup.")
        return z[:len(torsion_generators)]

    for i in range(t):
        torsion_coordinates([1 if i == j else 0 for j in range(t)])

    converted = []
    for x in images:
        c = solve(F, x.free_part, ncols=a) if a else ()
        y = x
        for ck, g in zip(c, free_generators):
            y = y - ck * g
        converted.append(new_group.element(c, torsion_coordinates(y.torsion_part) if t else ()))
    return new_group, converted
