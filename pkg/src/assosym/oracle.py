"""Ground-truth verification by brute force inside the absolutely free algebra.

The ambient space of multilinear degree n is spanned by all planar binary
trees with n leaves labelled bijectively by 1..n (n! * Catalan(n-1)
monomials).  The defining relations (x,y,z) - (x,z,y) and (x,y,z) - (y,x,z)
generate a T-ideal; its multilinear component is spanned by every
substitution instance g(u1, u2, u3) of a generator, embedded in a one-hole
monomial context over the remaining variables.  Exact Gaussian elimination
of that spanning set gives the quotient dimension, a rewriting map into a
quotient basis, and from it traces of the symmetric-group action.

Linear algebra runs twice: a fast single-prime elimination (dense numpy
rows mod a prime near 2^31), and, for n <= 5, a fraction-free integer
elimination whose rank certifies the modular one.  Degree 6 (30240
monomials) is modular only.  Everything is sequential and deterministic:
fixed generation order, fixed column order, no randomness, no threads.

Monomials are nested tuples (a leaf is an int label, a product is a pair),
ordered by tree shape first (recursively by left-subtree size) and then by
the left-to-right label sequence.
"""

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import combinations, permutations
from math import gcd

import numpy as np

from .characters import CharacterVector, inner_product, irreducible_character
from .decomposition import GROUP_SYMMETRIC, Decomposition, Label
from .partitions import generate_partitions

DEFAULT_PRIME = 2**31 - 1  # Mersenne; any prime below 2^31.5 keeps int64 exact

HOLE = 0  # reserved leaf label marking the slot of a one-hole context


class RankMismatchError(RuntimeError):
    """Modular and rational ranks disagree (unlucky prime) or two primes differ."""


class MultiplicityError(RuntimeError):
    """A character inner product came out negative or non-integral."""


# ---------------------------------------------------------------------------
# monomials

def tree_size(m) -> int:
    return 1 if isinstance(m, int) else tree_size(m[0]) + tree_size(m[1])


def leaf_labels(m) -> tuple[int, ...]:
    if isinstance(m, int):
        return (m,)
    return leaf_labels(m[0]) + leaf_labels(m[1])


def shape_key(m):
    """Total order key on tree shapes: by left-subtree size, recursively."""
    if isinstance(m, int):
        return ()
    return (tree_size(m[0]), shape_key(m[0]), shape_key(m[1]))


def monomial_key(m):
    return (shape_key(m), leaf_labels(m))


def _shift(template, k: int):
    if isinstance(template, int):
        return template + k
    return (_shift(template[0], k), _shift(template[1], k))


@cache
def _templates(n: int) -> tuple:
    """All tree shapes with n leaves, leaves numbered 0..n-1 left to right."""
    if n == 1:
        return (0,)
    out = []
    for left_size in range(1, n):
        for left in _templates(left_size):
            for right in _templates(n - left_size):
                out.append((left, _shift(right, left_size)))
    return tuple(out)


def _fill(template, labels):
    if isinstance(template, int):
        return labels[template]
    return (_fill(template[0], labels), _fill(template[1], labels))


@cache
def monomials_with_labels(labels: tuple[int, ...]) -> tuple:
    """All monomials whose leaf labels read the given multiset, canonical order."""
    n = len(labels)
    arrangements = sorted(set(permutations(labels)))
    return tuple(
        _fill(t, arr) for t in _templates(n) for arr in arrangements
    )


def enumerate_multilinear(n: int) -> list:
    """All n! * Catalan(n-1) multilinear monomials of degree n, canonical order."""
    if not 1 <= n <= 6:
        raise ValueError("enumerate_multilinear is limited to 1 <= n <= 6")
    return list(monomials_with_labels(tuple(range(1, n + 1))))


# ---------------------------------------------------------------------------
# identity generators and their consequences

def _associator(x, y, z) -> dict:
    return {((x, y), z): 1, (x, (y, z)): -1}


def _difference(a: dict, b: dict) -> dict:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) - c
        if not out[m]:
            del out[m]
    return out


def identity_generators() -> tuple[dict, dict]:
    """The two defining relations in variables 1, 2, 3, expanded into monomials.

    g1 = (x,y,z) - (x,z,y) and g2 = (x,y,z) - (y,x,z), four +-1 terms each.
    """
    base = _associator(1, 2, 3)
    return (
        _difference(base, _associator(1, 3, 2)),
        _difference(base, _associator(2, 1, 3)),
    )


def _substitute(term, subs):
    if isinstance(term, int):
        return subs[term - 1]
    return (_substitute(term[0], subs), _substitute(term[1], subs))


def _plug(context, x):
    if isinstance(context, int):
        return x if context == HOLE else context
    return (_plug(context[0], x), _plug(context[1], x))


def _nonempty_subsets(items: tuple):
    for k in range(1, len(items) + 1):
        yield from combinations(items, k)


def _instances(blocks, context_labels) -> list[dict]:
    """All context-embedded substitution instances over the given label split."""
    out = []
    contexts = monomials_with_labels((HOLE,) + tuple(context_labels))
    mons = [monomials_with_labels(tuple(b)) for b in blocks]
    for g in identity_generators():
        for u1 in mons[0]:
            for u2 in mons[1]:
                for u3 in mons[2]:
                    subs = (u1, u2, u3)
                    for ctx in contexts:
                        elem: dict = {}
                        for term, coeff in g.items():
                            m = _plug(ctx, _substitute(term, subs))
                            nv = elem.get(m, 0) + coeff
                            if nv:
                                elem[m] = nv
                            else:
                                del elem[m]
                        out.append(elem)
    return out


def consequence_span(n: int) -> list[dict]:
    """Deterministic spanning set of the multilinear degree-n T-ideal component.

    Every choice of three disjoint nonempty variable blocks, multilinear
    monomials on them, and a one-hole context on the remaining variables
    contributes one element per generator.  Redundant (even duplicate)
    elements are fine; rank computation absorbs them.
    """
    if not 2 <= n <= 6:
        raise ValueError("consequence_span is limited to 2 <= n <= 6")
    out: list[dict] = []
    all_vars = tuple(range(1, n + 1))
    for b1 in _nonempty_subsets(all_vars):
        rest1 = tuple(v for v in all_vars if v not in b1)
        for b2 in _nonempty_subsets(rest1):
            rest2 = tuple(v for v in rest1 if v not in b2)
            for b3 in _nonempty_subsets(rest2):
                context = tuple(v for v in rest2 if v not in b3)
                out.extend(_instances((b1, b2, b3), context))
    return out


def _content_labels(content) -> tuple[int, ...]:
    labels = []
    for i, c in enumerate(content, start=1):
        labels.extend([i] * c)
    return tuple(labels)


def _subcontents(content):
    """All componentwise sub-vectors of a content vector, lexicographic order."""
    out = [()]
    for c in content:
        out = [prefix + (x,) for prefix in out for x in range(c + 1)]
    return out


def consequence_span_multigraded(content) -> list[dict]:
    """Spanning set of the T-ideal component with the given generator content."""
    content = tuple(int(c) for c in content)
    out: list[dict] = []
    for c1 in _subcontents(content):
        if not any(c1):
            continue
        rem1 = tuple(a - b for a, b in zip(content, c1))
        for c2 in _subcontents(rem1):
            if not any(c2):
                continue
            rem2 = tuple(a - b for a, b in zip(rem1, c2))
            for c3 in _subcontents(rem2):
                if not any(c3):
                    continue
                ctx = tuple(a - b for a, b in zip(rem2, c3))
                blocks = tuple(_content_labels(c) for c in (c1, c2, c3))
                out.extend(_instances(blocks, _content_labels(ctx)))
    return out


# ---------------------------------------------------------------------------
# exact linear algebra

def _as_index_rows(elements: list[dict], col_index: dict) -> list[dict]:
    return [
        {col_index[m]: c for m, c in elem.items()} for elem in elements if elem
    ]


def _normalized(row: dict) -> tuple:
    items = sorted(row.items())
    content = 0
    for _, v in items:
        content = gcd(content, v)
    if items[0][1] < 0:
        content = -content
    return tuple((c, v // content) for c, v in items)


def _dedupe_rows(rows: list[dict]) -> list[dict]:
    """Drop rows equal to an earlier one up to sign and content."""
    seen = set()
    out = []
    for row in rows:
        if not row:
            continue
        key = _normalized(row)
        if key not in seen:
            seen.add(key)
            out.append(dict(key))
    return out


def _strip_content(row: dict) -> None:
    content = 0
    for v in row.values():
        content = gcd(content, v)
    if content > 1:
        for k in row:
            row[k] //= content


def _exact_pivots(rows: list[dict]) -> dict[int, dict[int, int]]:
    """Forward elimination over the integers; returns pivot column -> row.

    Each stored row has its pivot at its minimal column; rows are reduced
    against all earlier pivots at insertion time.  Fraction-free: rows are
    cross-scaled by integer factors and stripped of content.
    """
    pivots: dict[int, dict[int, int]] = {}
    for original in rows:
        row = dict(original)
        heap = list(row)
        heapq.heapify(heap)
        last = -1
        pivot_col = None
        while heap:
            c = heapq.heappop(heap)
            if c == last:
                continue
            last = c
            v = row.get(c, 0)
            if not v:
                continue
            prow = pivots.get(c)
            if prow is None:
                pivot_col = c
                break
            pv = prow[c]
            g = gcd(v, pv)
            scale_row, scale_piv = pv // g, v // g
            if scale_row != 1:
                for k in row:
                    row[k] *= scale_row
            for k, pk in prow.items():
                nv = row.get(k, 0) - scale_piv * pk
                if nv:
                    if k not in row:
                        heapq.heappush(heap, k)
                    row[k] = nv
                else:
                    row.pop(k, None)
            if scale_row != 1:
                _strip_content(row)
        if pivot_col is not None:
            _strip_content(row)
            if row[pivot_col] < 0:
                for k in row:
                    row[k] = -row[k]
            pivots[pivot_col] = row
    return pivots


def _back_substitute(pivots: dict[int, dict[int, int]]) -> None:
    """Clean every pivot row so its tail touches no other pivot column."""
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        for t in sorted(k for k in row if k != c and k in pivots):
            v = row.get(t, 0)
            if not v:
                continue
            prow = pivots[t]
            pv = prow[t]
            g = gcd(v, pv)
            scale_row, scale_piv = pv // g, v // g
            if scale_row != 1:
                for k in row:
                    row[k] *= scale_row
            for k, pk in prow.items():
                nv = row.get(k, 0) - scale_piv * pk
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        _strip_content(row)
        if row[c] < 0:
            for k in row:
                row[k] = -row[k]


_CHUNK_ROWS = 2048  # fixed block size; results do not depend on it


def _modular_rank(rows: list[dict], ncols: int, p: int) -> int:
    """Rank over GF(p), eliminating blocks of rows against cached column pivots.

    Rows are loaded a fixed-size block at a time into a dense column-major
    buffer and swept left to right: at each column the whole block is
    reduced against the cached pivot, or the first unreduced row of the
    block becomes the new pivot (stored sparsely, tail scaled to pivot 1).
    Sequential and deterministic; the block size only amortizes overhead.
    """
    if not 2 < p < 2**31 + 2**30:
        raise ValueError("prime must exceed 2 and keep (p-1)^2 inside int64")
    piv: dict[int, tuple[np.ndarray, np.ndarray]] = {}
    rank = 0
    pending = np.zeros(ncols, dtype=bool)
    for start in range(0, len(rows), _CHUNK_ROWS):
        block = rows[start:start + _CHUNK_ROWS]
        mat = np.zeros((len(block), ncols), dtype=np.int64, order="F")
        for i, row in enumerate(block):
            for c, v in row.items():
                mat[i, c] = v % p
                pending[c] = True
        cursor = 0
        while True:
            # fill-in only lands to the right, so a forward scan suffices
            step = int(pending[cursor:].argmax())
            c = cursor + step
            if not pending[c]:
                break
            pending[c] = False
            cursor = c
            col = mat[:, c]
            nz = np.flatnonzero(col)
            if not nz.size:
                continue
            entry = piv.get(c)
            if entry is None:
                r0 = int(nz[0])
                inv = pow(int(col[r0]), p - 2, p)
                prow = mat[r0]
                support = np.flatnonzero(prow)
                tail = support[support > c]
                tvals = (prow[tail] * inv) % p
                piv[c] = (tail, tvals)
                rank += 1
                mat[r0, support] = 0  # freeze the pivot row out of the block
                nz = nz[1:]
            else:
                tail, tvals = entry
            if nz.size:
                if tail.size:
                    if nz.size == 1:
                        r = int(nz[0])
                        mat[r, tail] = (mat[r, tail] - int(col[r]) * tvals) % p
                    else:
                        sub = mat[np.ix_(nz, tail)]
                        sub -= np.outer(col[nz], tvals)
                        sub %= p
                        mat[np.ix_(nz, tail)] = sub
                    pending[tail] = True
                col[nz] = 0
    return rank


# ---------------------------------------------------------------------------
# quotient data

@dataclass(frozen=True)
class QuotientBasis:
    """Monomials spanning P_n modulo the identities, plus rewriting data.

    ``rewrite_map`` sends every eliminated monomial to its expansion over
    the surviving ones; surviving monomials rewrite to themselves.
    """

    n: int
    monomials: tuple
    rewrite_map: dict = field(repr=False)

    def rewrite(self, monomial) -> dict:
        if monomial in self.rewrite_map:
            return self.rewrite_map[monomial]
        return {monomial: Fraction(1)}

    def rewrite_combination(self, combination: dict) -> dict:
        out: dict = {}
        for m, coeff in combination.items():
            for b, c in self.rewrite(m).items():
                nv = out.get(b, Fraction(0)) + coeff * c
                if nv:
                    out[b] = nv
                else:
                    del out[b]
        return out


@cache
def quotient_basis(n: int) -> QuotientBasis:
    """Exact reduced row echelon data for the degree-n multilinear quotient."""
    if not 2 <= n <= 5:
        raise ValueError("quotient_basis is limited to 2 <= n <= 5")
    ambient = enumerate_multilinear(n)
    col_index = {m: i for i, m in enumerate(ambient)}
    rows = _dedupe_rows(_as_index_rows(consequence_span(n), col_index))
    pivots = _exact_pivots(rows)
    _back_substitute(pivots)
    basis = tuple(m for i, m in enumerate(ambient) if i not in pivots)
    rewrite_map = {}
    for c, row in pivots.items():
        pv = row[c]
        rewrite_map[ambient[c]] = {
            ambient[k]: Fraction(-v, pv) for k, v in row.items() if k != c
        }
    return QuotientBasis(n=n, monomials=basis, rewrite_map=rewrite_map)


def _ranked_rows(elements: list[dict], ambient: list) -> list[dict]:
    col_index = {m: i for i, m in enumerate(ambient)}
    return _dedupe_rows(_as_index_rows(elements, col_index))


def _modular_ranks(rows: list[dict], ncols: int, prime, second_prime) -> int:
    p = prime or DEFAULT_PRIME
    rank_p = _modular_rank(rows, ncols, p)
    if second_prime:
        rank_p2 = _modular_rank(rows, ncols, second_prime)
        if rank_p2 != rank_p:
            raise RankMismatchError(
                f"rank {rank_p} mod {p} but {rank_p2} mod {second_prime}"
            )
    return rank_p


def quotient_dim(n: int, prime: int | None = None, second_prime: int | None = None) -> int:
    """Dimension of the multilinear quotient P_n / (P_n . T-ideal part).

    Modular elimination first; for n <= 5 the rank is certified by the
    integer elimination and a disagreement raises RankMismatchError.  At
    n = 6 the result rests on the prime-field rank alone (pass
    ``second_prime`` to cross-check two primes).
    """
    if not 2 <= n <= 6:
        raise ValueError("quotient_dim is limited to 2 <= n <= 6")
    ambient = enumerate_multilinear(n)
    rows = _ranked_rows(consequence_span(n), ambient)
    rank_p = _modular_ranks(rows, len(ambient), prime, second_prime)
    if n == 6:
        return len(ambient) - rank_p
    exact_rank = len(ambient) - len(quotient_basis(n).monomials)
    if exact_rank != rank_p:
        raise RankMismatchError(
            f"modular rank {rank_p} != rational rank {exact_rank}; retry with a "
            "different prime"
        )
    return len(ambient) - exact_rank


def quotient_dim_multigraded(content, prime: int | None = None) -> int:
    """Dimension of the component with the given positive multidegree.

    Rationally certified for total degree <= 5; total degree 6 runs the
    modular path only, like the multilinear degree-6 case.
    """
    content = tuple(int(c) for c in content)
    if not content or any(c < 1 for c in content):
        raise ValueError(f"multidegree parts must be positive, got {content}")
    total = sum(content)
    if total > 6:
        raise ValueError("quotient_dim_multigraded is limited to total degree <= 6")
    ambient = list(monomials_with_labels(_content_labels(content)))
    rows = _ranked_rows(consequence_span_multigraded(content), ambient)
    rank_p = _modular_ranks(rows, len(ambient), prime, None)
    if total == 6:
        return len(ambient) - rank_p
    exact_rank = len(_exact_pivots(rows))
    if exact_rank != rank_p:
        raise RankMismatchError(
            f"modular rank {rank_p} != rational rank {exact_rank}; retry with a "
            "different prime"
        )
    return len(ambient) - exact_rank


# ---------------------------------------------------------------------------
# characters of the quotient

def class_representative(mu) -> tuple[int, ...]:
    """One permutation of cycle type mu: consecutive cycles on 1..n."""
    n = sum(mu)
    images = list(range(n + 1))
    start = 1
    for k in mu:
        for i in range(start, start + k - 1):
            images[i] = i + 1
        images[start + k - 1] = start
        start += k
    return tuple(images[1:])


def relabel(monomial, images: tuple[int, ...]):
    """Apply a permutation (tuple of images of 1..n) to the leaf labels."""
    if isinstance(monomial, int):
        return images[monomial - 1]
    return (relabel(monomial[0], images), relabel(monomial[1], images))


def permutation_trace(n: int, images: tuple[int, ...]) -> Fraction:
    """Trace of a permutation acting on the degree-n quotient."""
    qb = quotient_basis(n)
    total = Fraction(0)
    for b in qb.monomials:
        total += qb.rewrite(relabel(b, images)).get(b, 0)
    return total


def quotient_character(n: int) -> CharacterVector:
    """Exact character of the quotient, one trace per cycle type."""
    if not 2 <= n <= 5:
        raise ValueError("quotient_character is limited to 2 <= n <= 5")
    values = []
    for mu in generate_partitions(n):
        trace = permutation_trace(n, class_representative(mu))
        if trace.denominator != 1:
            raise MultiplicityError(f"non-integral trace {trace} at class {mu}")
        values.append(int(trace))
    return CharacterVector(n, tuple(values))


def oracle_multiplicities(n: int) -> Decomposition:
    """Decomposition recovered from the quotient character by inner products."""
    if not 2 <= n <= 5:
        raise ValueError("oracle_multiplicities is limited to 2 <= n <= 5")
    chi = quotient_character(n)
    terms: dict[Label, int] = {}
    for lam in generate_partitions(n):
        mult = inner_product(chi, irreducible_character(lam))
        if mult.denominator != 1 or mult < 0:
            raise MultiplicityError(
                f"multiplicity of {lam} is {mult}, not a non-negative integer"
            )
        if mult:
            terms[Label(lam)] = int(mult)
    return Decomposition(n, GROUP_SYMMETRIC, terms)


def write_consequence_matrix(n: int, stream) -> None:
    """Dump the degree-n consequence matrix as sparse triplets.

    First line: ``nrows ncols``; then one ``row col numerator/denominator``
    triple per nonzero, rows and columns 0-based in canonical order.
    """
    ambient = enumerate_multilinear(n)
    col_index = {m: i for i, m in enumerate(ambient)}
    elements = consequence_span(n)
    stream.write(f"{len(elements)} {len(ambient)}\n")
    for i, elem in enumerate(elements):
        for m, coeff in sorted(elem.items(), key=lambda kv: col_index[kv[0]]):
            stream.write(f"{i} {col_index[m]} {coeff}/1\n")
