"""Counting GL2(Z)-conjugacy classes of elliptic integer matrices.

Two independent counts of the integer matrices with trace t and
determinant p (t^2 < 4p):

* reduced positive definite binary quadratic forms of discriminant
  t^2 - 4p, primitive or not, via M = [[a, b], [c, d]] -> (c, d - a, -b);
* a direct search: matrices in a box, glued by conjugation with the
  generators S, T and diag(1, -1) of GL2(Z).
"""
from __future__ import annotations

import math
from typing import Iterator

from ..errors import ResourceError

DEFAULT_BOX_LIMIT = 4096


def reduced_forms(disc: int) -> list[tuple[int, int, int]]:
    """Reduced forms (a, b, c), b^2 - 4ac = disc < 0, |b| <= a <= c, b >= 0 if |b| = a or a = c."""
    disc = int(disc)
    if disc >= 0:
        raise ValueError(f"discriminant must be negative, got {disc}")
    if disc % 4 not in (0, 1):
        raise ValueError(f"{disc} is not a discriminant: it must be 0 or 1 mod 4")
    out = []
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a + 1, a + 1):
            if (b - disc) % 2:
                continue
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            out.append((a, b, c))
        a += 1
    return sorted(out)


def form_to_matrix(form: tuple[int, int, int], t: int) -> tuple[int, int, int, int]:
    """Integer matrix of trace t attached to a form of discriminant t^2 - 4 det."""
    a, b, c = form
    if (t - b) % 2:
        raise ValueError("form and trace have different parity")
    return ((t - b) // 2, -c, a, (t + b) // 2)


def _box_matrices(p: int, t: int, bound: int) -> Iterator[tuple[int, int, int, int]]:
    for a in range(-bound, bound + 1):
        d = t - a
        if abs(d) > bound:
            continue
        bc = a * d - p  # never 0 since x^2 - t x + p has no rational roots
        for b in range(1, bound + 1):
            if bc % b == 0:
                c = bc // b
                if abs(c) <= bound:
                    yield (a, b, c, d)
                    yield (a, -b, -c, d)


def _conjugates(m: tuple[int, int, int, int]) -> tuple[tuple[int, int, int, int], ...]:
    a, b, c, d = m
    return (
        (d, -c, -b, a),  # S m S^-1, S = [[0,-1],[1,0]]
        (a + c, b + d - a - c, c, d - c),  # T m T^-1, T = [[1,1],[0,1]]
        (a, -b, -c, d),  # diag(1,-1)
    )


def _count_in_box(p: int, t: int, core: int, bound: int) -> int:
    """Number of classes meeting the core box, connecting through the larger box."""
    mats = list(_box_matrices(p, t, bound))
    index = {m: i for i, m in enumerate(mats)}
    parent = list(range(len(mats)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, m in enumerate(mats):
        for n in _conjugates(m):
            j = index.get(n)
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    roots = {find(i) for i, m in enumerate(mats) if max(map(abs, m)) <= core}
    return len(roots)


def count_matrix_classes(p: int, t: int, limit: int = DEFAULT_BOX_LIMIT) -> int:
    """Conjugacy classes by direct search.

    Every class has a representative with entries at most |D|/3 + |t|
    (D = t^2 - 4p).  Classes meeting that core box are glued inside a box
    that doubles until the count repeats; if the box would exceed
    ``limit`` a ResourceError is raised.
    """
    disc = t * t - 4 * p
    if disc >= 0:
        raise ValueError(f"trace {t} is not elliptic for p = {p}")
    core = -disc // 3 + abs(t) + 1
    bound = 2 * core
    prev = None
    while True:
        if bound > limit:
            raise ResourceError(f"matrix search for p={p}, t={t} did not stabilise within entries <= {limit}")
        n = _count_in_box(p, t, core, bound)
        if n == prev:
            return n
        prev = n
        bound *= 2


def elliptic_traces(p: int) -> list[int]:
    m = math.isqrt(4 * p - 1)
    return [t for t in range(-m, m + 1) if t * t < 4 * p]


def count_elliptic_classes(p: int, t: int, limit: int = DEFAULT_BOX_LIMIT) -> int:
    """Number of GL2(Z)-classes with trace t and determinant p, checked two ways.

    Raises AssertionError if the form count and the matrix search disagree.
    """
    if p < 2 or any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
        raise ValueError(f"{p} is not prime")
    disc = t * t - 4 * p
    forms = reduced_forms(disc)
    n = count_matrix_classes(p, t, limit)
    if n != len(forms):
        raise AssertionError(f"p={p}, t={t}: {len(forms)} reduced forms but {n} matrix classes")
    return n
