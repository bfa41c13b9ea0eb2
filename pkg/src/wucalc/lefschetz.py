"""Automorphisms and Lefschetz numbers for interaction cohomology.

An automorphism T of a complex permutes the basis tuples grade by grade, so
it induces a map on each cohomology group. The Lefschetz number is the
alternating sum of traces on cohomology; it equals the sum of local indices
over the tuples T fixes setwise, which is the discrete fixed point theorem
the tests exercise.
"""

from __future__ import annotations

from fractions import Fraction

from .basis import InteractionBasis
from .cohomology import cohomology_data
from .differential import DiracLaplacian
from .simplicial import Complex, Graph, simplex_weight


def automorphism_group(g: Graph, limit: int = 12):
    """All graph automorphisms by backtracking, as vertex dicts.

    The search is exponential in the worst case, so it refuses graphs with
    more than `limit` vertices; raise the limit explicitly if you mean it.
    """
    vs = sorted(g.vertices)
    if len(vs) > limit:
        raise ValueError(
            f"automorphism search on {len(vs)} vertices exceeds limit={limit}")
    fp = {}
    for v in vs:
        nbr = tuple(sorted(g.degree(w) for w in g.adj[v]))
        fp[v] = (g.degree(v), nbr)
    counts: dict = {}
    for v in vs:
        counts[fp[v]] = counts.get(fp[v], 0) + 1
    order = sorted(vs, key=lambda v: (counts[fp[v]], v))
    autos = []
    mapping: dict = {}

    def extend(depth):
        if depth == len(vs):
            autos.append(dict(mapping))
            return
        v = order[depth]
        used = set(mapping.values())
        for w in vs:
            if w in used or fp[w] != fp[v]:
                continue
            ok = True
            for u, tu in mapping.items():
                if (u in g.adj[v]) != (tu in g.adj[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                extend(depth + 1)
                del mapping[v]

    extend(0)
    return autos


def complex_automorphisms(c: Complex, limit: int = 12):
    """Automorphisms of the vertex skeleton that map simplices to simplices."""
    autos = automorphism_group(c.skeleton_graph(), limit=limit)
    out = []
    for t in autos:
        if all(tuple(sorted(t[v] for v in s)) in c for s in c.simplices):
            out.append(t)
    return out


def permutation_sign(t: dict, s) -> int:
    """Parity of the permutation T induces on the simplex s it fixes setwise
    (more generally, of the map from s sorted to its image sorted)."""
    image = [t[v] for v in s]
    ranks = sorted(range(len(image)), key=lambda i: image[i])
    sign = 1
    seen = [False] * len(ranks)
    for i in range(len(ranks)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = ranks[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def apply_to_tuple(t: dict, x):
    return tuple(tuple(sorted(t[v] for v in part)) for part in x)


def tuple_sign(t: dict, x) -> int:
    sign = 1
    for part in x:
        sign *= permutation_sign(t, part)
    return sign


def fixed_tuples(t: dict, basis: InteractionBasis):
    """Tuples fixed setwise in every slot, with their local indices
    index(x) = prod_j w(x_j) * sign(T restricted to x_j)."""
    out = []
    for grade in basis.grades:
        for x in grade:
            if all(frozenset(t[v] for v in part) == frozenset(part)
                   for part in x):
                weight = 1
                for part in x:
                    weight *= simplex_weight(part)
                out.append((x, weight * tuple_sign(t, x)))
    return out


def induced_block_maps(t: dict, basis: InteractionBasis):
    """Per grade, the signed permutation matrix of T on basis tuples,
    as a dict (row, col) -> sign."""
    blocks = []
    for p, grade in enumerate(basis.grades):
        entries = {}
        for col, x in enumerate(grade):
            tx = apply_to_tuple(t, x)
            gp, row = basis.index[tx]
            if gp != p:
                raise ValueError("automorphism does not preserve grading")
            entries[(row, col)] = tuple_sign(t, x)
        blocks.append(entries)
    return blocks


def _solve_gram(gram, rhs):
    """Solve gram * X = rhs over the rationals; gram is invertible."""
    n = len(gram)
    m = len(rhs[0]) if rhs else 0
    a = [[Fraction(gram[i][j]) for j in range(n)]
         + [Fraction(rhs[i][j]) for j in range(m)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def lefschetz_number(t: dict, c: Complex, k: int) -> int:
    """Alternating sum of traces of the induced map on cohomology, exact."""
    data = cohomology_data(tuple([c] * k))
    basis = data.basis
    blocks = induced_block_maps(t, basis)
    total = Fraction(0)
    for p, kernel in enumerate(data.harmonic):
        b = len(kernel)
        if b == 0:
            continue
        u = blocks[p]
        # columns of K are the kernel vectors; trace of the projection of
        # U onto the kernel is tr((K^T K)^-1 K^T U K)
        uk = []
        for vec in kernel:
            img = [0] * len(vec)
            for (row, col), sign in u.items():
                img[row] += sign * vec[col]
            uk.append(img)
        gram = [[sum(a * b_ for a, b_ in zip(v, w)) for w in kernel]
                for v in kernel]
        rhs = [[sum(a * b_ for a, b_ in zip(v, w)) for w in uk]
               for v in kernel]
        x = _solve_gram(gram, rhs)
        tr = sum(x[i][i] for i in range(b))
        total += tr if p % 2 == 0 else -tr
    if total.denominator != 1:
        raise ArithmeticError(f"non-integer Lefschetz number {total}")
    return int(total)


def lefschetz_via_fixed_points(t: dict, c: Complex, k: int) -> int:
    basis = cohomology_data(tuple([c] * k)).basis
    return sum(index for _, index in fixed_tuples(t, basis))


def lefschetz_fixed_point_check(t: dict, c: Complex, k: int) -> dict:
    cohom = lefschetz_number(t, c, k)
    fixed = fixed_tuples(t, cohomology_data(tuple([c] * k)).basis)
    local = sum(index for _, index in fixed)
    return {
        "k": k,
        "lefschetz": cohom,
        "fixed_tuples": len(fixed),
        "index_sum": local,
        "fixed_point_ok": cohom == local,
    }


def heat_trace(t: dict, c: Complex, k: int, time: float) -> float:
    """Supertrace of exp(-time * L) composed with the induced map; it
    interpolates between the index sum (time 0) and the Lefschetz number."""
    import numpy

    data = cohomology_data(tuple([c] * k))
    dl: DiracLaplacian = data.dirac
    blocks = induced_block_maps(t, data.basis)
    total = 0.0
    for p, lp in enumerate(dl.laplacian_blocks):
        n = lp.nrows
        if n == 0:
            continue
        dense = numpy.array(lp.to_dense(), dtype=float)
        u = numpy.zeros((n, n))
        for (row, col), sign in blocks[p].items():
            u[row, col] = sign
        evals, q = numpy.linalg.eigh(dense)
        a = q.T @ u @ q
        term = float(numpy.sum(numpy.exp(-time * evals) * numpy.diag(a)))
        total += term if p % 2 == 0 else -term
    return total
