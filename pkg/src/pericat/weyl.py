r"""Symmetric group combinatorics: Bruhat order and Kazhdan-Lusztig polynomials.

Permutations are 0-based one-line tuples: w = (w(0), ..., w(n-1)) sends
position-index i to w(i).  Acting on weights we use the place action
(w.lam)_{w(i)} = lam_i, so the transposition of i and j swaps coordinates,
matching the reflection in e_i - e_j.

Polynomials in q are tuples of integer coefficients, constant term first,
with no trailing zeros; the zero polynomial is the empty tuple.

>>> length((2, 0, 1))
2
>>> bruhat_leq((0, 2, 1), (2, 1, 0))
True
>>> kl_polynomial((0, 1, 2, 3), longest_element(4))
(1,)
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .weights import Parabolic, Weight, levi_blocks, pairing

Perm = Tuple[int, ...]
Poly = Tuple[int, ...]

ZERO_POLY: Poly = ()
ONE_POLY: Poly = (1,)


# --- permutations -----------------------------------------------------------


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(w: Perm, v: Perm) -> Perm:
    """(w. v)(i) = w(v(i))."""
    return tuple(w[v[i]] for i in range(len(w)))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, wi in enumerate(w):
        out[wi] = i
    return tuple(out)


def transposition(i: int, j: int, n: int) -> Perm:
    out = list(range(n))
    out[i], out[j] = out[j], out[i]
    return tuple(out)


@lru_cache(maxsize=None)
def all_perms(n: int) -> Tuple[Perm, ...]:
    return tuple(itertools.permutations(range(n)))


def length(w: Perm) -> int:
    """Number of inversions.

    >>> length(longest_element(4))
    6
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def longest_element(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def parabolic_longest(p: Parabolic) -> Perm:
    """Longest element of the Levi Weyl group S_{p_1} x ... x S_{p_k}."""
    out: list[int] = []
    for block in levi_blocks(p):
        out.extend(reversed(block))
    return tuple(out)


def apply_perm(w: Perm, lam: Weight) -> Weight:
    """Place action: coordinate i of lam moves to position w(i)."""
    if len(w) != len(lam):
        raise ValueError("dimension mismatch")
    out = [None] * len(lam)
    for i, wi in enumerate(w):
        out[wi] = lam[i]
    return tuple(out)


def reflect(lam: Weight, beta) -> Weight:
    """s_beta lam = lam - <lam, beta> beta for an even root beta."""
    v = pairing(lam, beta)
    return tuple(c - v * b for c, b in zip(lam, beta))


def parse_perm(text: str) -> Perm:
    """Parse 1-indexed one-line notation, e.g. "2,1,3" -> (1, 0, 2)."""
    values = [int(p.strip()) for p in text.split(",")]
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError(f"not a permutation in one-line notation: {text!r}")
    return tuple(v - 1 for v in values)


def format_perm(w: Perm) -> str:
    """1-indexed one-line notation: (1, 0, 2) -> "2,1,3"."""
    return ",".join(str(v + 1) for v in w)


def bruhat_leq(x: Perm, w: Perm) -> bool:
    """Bruhat order by the prefix-sorting (dot) criterion."""
    if len(x) != len(w):
        raise ValueError("dimension mismatch")
    for k in range(1, len(x)):
        for a, b in zip(sorted(x[:k]), sorted(w[:k])):
            if a > b:
                return False
    return True


def integral_weyl_group(lam: Weight) -> tuple[Parabolic, Perm]:
    """Integral Weyl group data of lam.

    Coordinates are grouped by mutual integrality (equal fractional part),
    classes ordered by first occurrence.  Returns the composition of class
    sizes together with the sorting permutation w for which apply_perm(w, lam)
    lists each class contiguously in that order; the integral Weyl group is
    the parabolic S_{n_1} x ... x S_{n_k} conjugated by w.

    >>> from .weights import weight
    >>> integral_weyl_group(weight("1/2", 0, "3/2", 1))
    ((2, 2), (0, 2, 1, 3))
    """
    classes: list[tuple[Fraction, list[int]]] = []
    for i, c in enumerate(lam):
        key = c - c.__floor__()
        for k, members in classes:
            if k == key:
                members.append(i)
                break
        else:
            classes.append((key, [i]))
    composition = tuple(len(members) for _, members in classes)
    order = [i for _, members in classes for i in members]
    w = [0] * len(lam)
    for new, old in enumerate(order):
        w[old] = new
    return composition, tuple(w)


# --- simple (value) multiplications and descents ----------------------------


def left_descents(w: Perm) -> list[int]:
    """Indices i with s_i w < w, i.e. value i sits right of value i+1."""
    inv = inverse(w)
    return [i for i in range(len(w) - 1) if inv[i] > inv[i + 1]]


def left_mult(i: int, w: Perm) -> Perm:
    """s_i . w: swap the values i and i+1 in the one-line word."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


# --- polynomial helpers -----------------------------------------------------


def poly_trim(coeffs: list[int]) -> Poly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_add(a: Poly, b: Poly) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, tuple(-c for c in b))


def poly_scale(k: int, a: Poly) -> Poly:
    if k == 0:
        return ZERO_POLY
    return tuple(k * c for c in a)


def poly_shift(a: Poly, k: int) -> Poly:
    """Multiply by q^k."""
    if not a:
        return ZERO_POLY
    return (0,) * k + a


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO_POLY
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        for j, d in enumerate(b):
            out[i + j] += c * d
    return poly_trim(out)


def poly_eval(a: Poly, x) -> int:
    return sum(c * x**i for i, c in enumerate(a))


def poly_reverse(a: Poly, top: int) -> Poly:
    """q^top * a(1/q); requires deg a <= top."""
    if len(a) - 1 > top:
        raise ValueError("degree exceeds reversal bound")
    out = [0] * (top + 1)
    for i, c in enumerate(a):
        out[top - i] = c
    return poly_trim(out)


def format_poly(a: Poly) -> str:
    """Human form: () -> "0", (1,) -> "1", (1, 1) -> "1+q^1", (0, 2) -> "2q^1"."""
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append(f"q^{i}")
        else:
            parts.append(f"{c}q^{i}")
    return "+".join(parts).replace("+-", "-")


# --- Kazhdan-Lusztig recursion ----------------------------------------------

_KL_CACHE: dict[tuple[Perm, Perm], Poly] = {}


def mu_coefficient(z: Perm, w: Perm) -> int:
    """Coefficient of q^((l(w)-l(z)-1)/2) in P_{z,w}, zero unless that is an
    integer exponent (z < w)."""
    gap = length(w) - length(z)
    if gap <= 0 or gap % 2 == 0:
        return 0
    p = kl_polynomial(z, w)
    exponent = (gap - 1) // 2
    return p[exponent] if exponent < len(p) else 0


def kl_polynomial(x: Perm, w: Perm) -> Poly:
    """Kazhdan-Lusztig polynomial P_{x,w} for the symmetric group.

    Classical recursion on a left descent s of w, after normalizing x up
    through the descents of w (P_{x,w} = P_{sx,w} when sw < w < sx); results
    are memoized.  For x <= w the constant term is 1 and the degree is at
    most (l(w) - l(x) - 1)/2 (checked), with P_{w,w} = 1.
    """
    if len(x) != len(w):
        raise ValueError("dimension mismatch")
    if x == w:
        return ONE_POLY
    if not bruhat_leq(x, w):
        return ZERO_POLY

    descents = left_descents(w)
    changed = True
    while changed:
        changed = False
        for i in descents:
            sx = left_mult(i, x)
            if length(sx) > length(x):
                x = sx
                changed = True
    if x == w:
        return ONE_POLY

    key = (x, w)
    cached = _KL_CACHE.get(key)
    if cached is not None:
        return cached

    s = descents[0]
    v = left_mult(s, w)
    sx = left_mult(s, x)
    # s is a descent of x after normalization, so the main branch applies:
    # P_{x,w} = P_{sx,v} + q P_{x,v} - sum_z mu(z,v) q^((l(w)-l(z))/2) P_{x,z}
    result = poly_add(kl_polynomial(sx, v), poly_shift(kl_polynomial(x, v), 1))
    lw = length(w)
    for z in all_perms(len(w)):
        lz = length(z)
        if lz >= length(v) or (lw - lz) % 2 != 0:
            continue
        if inverse(z)[s] <= inverse(z)[s + 1]:  # need sz < z
            continue
        if not (bruhat_leq(x, z) and bruhat_leq(z, v)):
            continue
        m = mu_coefficient(z, v)
        if m == 0:
            continue
        result = poly_sub(
            result, poly_shift(poly_scale(m, kl_polynomial(x, z)), (lw - lz) // 2)
        )

    assert result and result[0] == 1 and all(c >= 0 for c in result), (
        f"KL polynomial malformed for {x}, {w}: {result}"
    )
    assert 2 * (len(result) - 1) <= length(w) - length(x) - 1, (
        f"KL degree bound violated for {x}, {w}: {result}"
    )
    _KL_CACHE[key] = result
    return result


def kl_eval_one(x: Perm, w: Perm) -> int:
    return poly_eval(kl_polynomial(x, w), 1)


# --- R-polynomials (independent check of the KL recursion) -------------------


@lru_cache(maxsize=None)
def r_polynomial(x: Perm, w: Perm) -> Poly:
    """R_{x,w}, by the left-descent recursion.  Used as an oracle: the KL
    family is characterized by q^(l(w)-l(x)) P_{x,w}(1/q) =
    sum_{x <= z <= w} R_{x,z} P_{z,w} together with the degree bound."""
    if x == w:
        return ONE_POLY
    if not bruhat_leq(x, w):
        return ZERO_POLY
    s = left_descents(w)[0]
    v = left_mult(s, w)
    sx = left_mult(s, x)
    if length(sx) < length(x):
        return r_polynomial(sx, v)
    return poly_add(
        poly_mul((-1, 1), r_polynomial(x, v)),
        poly_shift(r_polynomial(sx, v), 1),
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
