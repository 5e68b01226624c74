"""Ranking methods with efficiency certificates.

Run with:  python3 demos/ranking_methods.py

Practitioners extract a weight vector from a comparison matrix in many
ways: read off a column, take row geometric means, use the dominant
eigenvector, or the leading singular pair. Each candidate is certified
here, exactly for rational vectors, and for the rationalized spectral
vectors with the approximation residual reported.
"""

import random
from fractions import Fraction

from effvec import (
    columns_common_cone,
    format_matrix,
    format_vector,
    generate,
    is_efficient,
    perron_vector,
    ReciprocalMatrix,
    singular_vector,
    weighted_geometric,
)


def render(vec, exact: bool) -> str:
    if exact:
        return "[" + format_vector(vec) + "]"
    return "[" + " ".join(f"{float(x):.6g}" for x in vec) + "]"


def show(a: ReciprocalMatrix, title: str) -> None:
    print(title)
    print(format_matrix(a))
    candidates = [weighted_geometric(a), perron_vector(a), singular_vector(a)]
    for k in range(a.n):
        cert = is_efficient(a, a.column(k))
        print(f"  column-{k + 1:<12} {render(a.column(k), True)}  efficient={cert.efficient}")
    for c in candidates:
        if c.exact:
            note = "exact"
        elif c.residual is not None:
            note = f"residual ~ {float(c.residual):.2e}"
        else:
            note = "rationalized to tolerance"
        print(
            f"  {c.method:<15} {render(c.vector, c.exact)}  "
            f"efficient={c.certificate.efficient} ({note})"
        )
    common = columns_common_cone(a)
    if common is None:
        print("  columns do not share a single cone")
    else:
        path = " -> ".join(str(v + 1) for v in common.order + (common.order[0],))
        print(f"  all columns lie in the cone of the cycle {path}")
    print()


h = Fraction(1, 2)
show(
    ReciprocalMatrix.from_rows(
        [[1, 2, 1, h], [h, 1, 2, 1], [1, h, 1, 2], [2, 1, h, 1]]
    ),
    "Circulant 4x4 (all methods collapse to the all-ones vector):",
)

show(generate("random", 5, seed=42), "Random 5x5 (methods disagree, all certified):")
print("Note the eigenvector candidate above: popularity is no guarantee.")
print("Its rationalized vector is certified INEFFICIENT for this matrix,")
print("while every column and the geometric mean are efficient.")
print()

print("Weighted geometric means support arbitrary rational weights; an")
print("indicator weight vector recovers the matching column exactly:")
a = generate("random", 4, seed=9)
indicator = (Fraction(0), Fraction(1), Fraction(0), Fraction(0))
c = weighted_geometric(a, weights=indicator)
col = a.column(1)
scale = c.vector[0] / col[0]
print(f"  weighted mean [{format_vector(c.vector)}] is column-2 scaled by {scale}:"
      f" {all(x == scale * y for x, y in zip(c.vector, col))}")
