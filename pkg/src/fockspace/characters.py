"""Schur polynomials and the character-level branching and Pieri rules.

Schur polynomials are computed by enumerating semistandard tableaux; the
Jacobi-Trudi determinant over complete homogeneous polynomials provides an
independent second construction used for cross-checking.  Expanding a
symmetric polynomial in the Schur basis works by repeatedly subtracting the
Schur polynomial whose leading monomial matches: the lexicographically
greatest exponent vector of a symmetric polynomial is weakly decreasing,
and subtracting its Schur polynomial only leaves lex-smaller terms, so the
loop terminates.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator, Mapping

from .partitions import Partition


class SymPolynomial:
    """A symmetric polynomial in n variables, exponent vector -> integer."""

    __slots__ = ("num_vars", "terms")

    def __init__(
        self,
        num_vars: int,
        terms: Mapping[tuple[int, ...], int] | None = None,
        validate: bool = True,
    ):
        if num_vars < 0:
            raise ValueError(f"number of variables must be >= 0, got {num_vars}")
        self.num_vars = num_vars
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != num_vars:
                    raise ValueError(f"exponent vector {exps} is not length {num_vars}")
                if any(x < 0 for x in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if coeff:
                    self.terms[tuple(exps)] = int(coeff)
        if validate:
            self._check_symmetric()

    def _check_symmetric(self) -> None:
        # adjacent transpositions generate the full symmetric group
        for exps, coeff in self.terms.items():
            for k in range(self.num_vars - 1):
                if exps[k] == exps[k + 1]:
                    continue
                swapped = list(exps)
                swapped[k], swapped[k + 1] = swapped[k + 1], swapped[k]
                if self.terms.get(tuple(swapped), 0) != coeff:
                    raise ValueError(f"not symmetric at {exps} <-> {tuple(swapped)}")

    @classmethod
    def zero(cls, num_vars: int) -> "SymPolynomial":
        return cls(num_vars)

    @classmethod
    def one(cls, num_vars: int) -> "SymPolynomial":
        return cls(num_vars, {(0,) * num_vars: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exps: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exps), 0)

    def _require_same_ring(self, other: "SymPolynomial") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"variable counts differ: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other: "SymPolynomial") -> "SymPolynomial":
        self._require_same_ring(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, 0) + c
        return SymPolynomial(self.num_vars, out, validate=False)

    def __sub__(self, other: "SymPolynomial") -> "SymPolynomial":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "SymPolynomial":
        return SymPolynomial(
            self.num_vars,
            {e: scalar * c for e, c in self.terms.items()},
            validate=False,
        )

    def __mul__(self, other: "SymPolynomial") -> "SymPolynomial":
        self._require_same_ring(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return SymPolynomial(self.num_vars, out, validate=False)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SymPolynomial)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.num_vars, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return f"SymPolynomial({self.num_vars}, 0)"
        body = " + ".join(
            f"{c}*x^{list(e)}" for e, c in sorted(self.terms.items(), reverse=True)
        )
        return f"SymPolynomial({self.num_vars}, {body})"


def _ssyt_rows(shape: tuple[int, ...], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All semistandard fillings of the shape with entries in 1..n."""

    def fill(row_idx: int, above: tuple[int, ...], acc: list[tuple[int, ...]]) -> Iterator:
        if row_idx == len(shape):
            yield tuple(acc)
            return
        width = shape[row_idx]

        def build_row(col: int, row: list[int]) -> Iterator:
            if col == width:
                acc.append(tuple(row))
                yield from fill(row_idx + 1, tuple(row), acc)
                acc.pop()
                return
            lo = row[col - 1] if col else 1
            if col < len(above):
                lo = max(lo, above[col] + 1)
            for val in range(lo, n + 1):
                row.append(val)
                yield from build_row(col + 1, row)
                row.pop()

        yield from build_row(0, [])

    yield from fill(0, (), [])


@lru_cache(maxsize=4096)
def _schur_terms(shape: tuple[int, ...], n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    counts: dict[tuple[int, ...], int] = {}
    for tableau in _ssyt_rows(shape, n):
        exps = [0] * n
        for row in tableau:
            for val in row:
                exps[val - 1] += 1
        key = tuple(exps)
        counts[key] = counts.get(key, 0) + 1
    return tuple(sorted(counts.items()))


def schur(p: Partition, n: int) -> SymPolynomial:
    """The Schur polynomial s_p(x_1..x_n) by semistandard tableau counting.

    Zero when p has more than n rows.
    """
    if n < 0:
        raise ValueError(f"number of variables must be >= 0, got {n}")
    if len(p.parts) > n:
        return SymPolynomial.zero(n)
    return SymPolynomial(n, dict(_schur_terms(p.parts, n)), validate=False)


def complete_homogeneous(k: int, n: int) -> SymPolynomial:
    """h_k(x_1..x_n): every monomial of total degree k once."""
    if k < 0:
        return SymPolynomial.zero(n)
    if n == 0:
        return SymPolynomial.one(0) if k == 0 else SymPolynomial.zero(0)

    terms: dict[tuple[int, ...], int] = {}

    def compositions(remaining: int, slots: int, acc: list[int]) -> None:
        if slots == 1:
            terms[tuple(acc + [remaining])] = 1
            return
        for v in range(remaining + 1):
            compositions(remaining - v, slots - 1, acc + [v])

    compositions(k, n, [])
    return SymPolynomial(n, terms, validate=False)


def schur_jacobi_trudi(p: Partition, n: int) -> SymPolynomial:
    """The Schur polynomial as det(h_{p_i - i + j}); oracle for ``schur``."""
    ell = len(p.parts)
    if ell == 0:
        return SymPolynomial.one(n)
    if ell > n:
        # the determinant also vanishes, but short-circuit for speed
        return SymPolynomial.zero(n)
    h = {}
    for i in range(1, ell + 1):
        for j in range(1, ell + 1):
            k = p.parts[i - 1] - i + j
            if k not in h:
                h[k] = complete_homogeneous(k, n)
    total = SymPolynomial.zero(n)
    for sigma in permutations(range(1, ell + 1)):
        sign = _permutation_sign(sigma)
        prod = SymPolynomial.one(n)
        for i, j in enumerate(sigma, start=1):
            prod = prod * h[p.parts[i - 1] - i + j]
            if prod.is_zero():
                break
        total = total + sign * prod
    return total


def _permutation_sign(sigma: tuple[int, ...]) -> int:
    inversions = sum(
        1
        for a in range(len(sigma))
        for b in range(a + 1, len(sigma))
        if sigma[a] > sigma[b]
    )
    return -1 if inversions % 2 else 1


def restrict_last_var(f: SymPolynomial) -> SymPolynomial:
    """Set the last variable to zero, landing in one variable fewer."""
    if f.num_vars < 1:
        raise ValueError("no variable left to restrict")
    terms = {exps[:-1]: c for exps, c in f.terms.items() if exps[-1] == 0}
    return SymPolynomial(f.num_vars - 1, terms, validate=False)


def schur_expand(f: SymPolynomial) -> dict[Partition, int]:
    """Expand a symmetric polynomial in the Schur basis (greedy subtraction)."""
    coeffs: dict[Partition, int] = {}
    remaining = f
    while remaining:
        lead = max(remaining.terms)
        shape = tuple(x for x in lead if x)
        if any(shape[k] < shape[k + 1] for k in range(len(shape) - 1)):
            raise ArithmeticError(f"leading exponent {lead} is not a partition")
        mu = Partition(shape)
        c = remaining.terms[lead]
        coeffs[mu] = c
        remaining = remaining - c * schur(mu, f.num_vars)
    return coeffs


def _expand_to_multiset(f: SymPolynomial) -> list[Partition]:
    out: list[Partition] = []
    for mu, c in schur_expand(f).items():
        if c < 0:
            raise ArithmeticError(f"negative multiplicity {c} at {mu}")
        out.extend([mu] * c)
    return sorted(out, reverse=True)


def branch_r1(p: Partition, n: int) -> list[Partition]:
    """Degree-one branching layer of s_p in n+1 variables, Schur-expanded.

    Extracts the coefficient of the first power of the extra variable in
    s_p(x_1..x_n, t) and expands it in the Schur basis of n variables.  The
    result is the multiset of partitions obtained by removing one box.
    """
    if n < p.size:
        raise ValueError(f"need n >= |p| = {p.size}, got {n}")
    big = schur(p, n + 1)
    layer = {
        exps[:-1]: c for exps, c in big.terms.items() if exps[-1] == 1
    }
    return _expand_to_multiset(SymPolynomial(n, layer, validate=False))


def pieri_mult(p: Partition, n: int) -> list[Partition]:
    """Schur expansion of s_(1) * s_p in n variables.

    The result is the multiset of partitions obtained by adding one box,
    restricted to partitions with at most n rows (for n >= |p| + 1 nothing
    is ever cut off).
    """
    if n < p.size:
        raise ValueError(f"need n >= |p| = {p.size}, got {n}")
    product = schur(Partition((1,)), n) * schur(p, n)
    return _expand_to_multiset(product)
