"""A first tour: the four coordinate hyperplanes of projective 3-space.

Builds the smallest essential arrangement by hand and walks through every
invariant the library computes, checking each against what you can see by
eye for this example.
"""

from arr4 import (
    Arrangement,
    char_poly_moebius,
    coxeter_diagram,
    enumerate_chambers,
    f_vector,
    is_simplicial,
    walls,
)

# Four hyperplanes x_i = 0.  Projectively these cut P^3 into 8 simplices.
boolean = Arrangement([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
print("arrangement:", boolean)

# Rank-2 flats: one line per pair of hyperplanes, so 6 lines of weight 2.
print("h-vector (line weight -> count):", boolean.h_vector())

# Rank-3 flats: the coordinate axes, each on 3 hyperplanes.
print("t-vector (vertex weight -> count):", boolean.t_vector())
print("multiplicity:", boolean.multiplicity())

# The characteristic polynomial factors as (t-1)^4 for a product like this.
chi = char_poly_moebius(boolean)
print("characteristic polynomial coefficients:", chi.coefficients)
print("integer roots by divisor trial:", chi.integer_roots())
print("chi(-1) = twice the chamber count:", chi(-1))

# Cell counts of the induced decomposition of P^3.
print("f-vector:", f_vector(boolean))

# Chambers: 2^4 orthants, antipodally identified -> 8, every wall a facet.
chambers = enumerate_chambers(boolean)
print("chambers:", len(chambers))
first = chambers[0]
print("one chamber:", first.signs, "walls:", first.walls)
print("walls via Fourier-Motzkin agree:", walls(boolean, first.signs) == first.walls)
print("simplicial:", is_simplicial(boolean))

# The Coxeter diagram at any chamber has no edges (all lines have weight 2),
# which is the diagram-side witness that the arrangement is a product.
diagram = coxeter_diagram(boolean, first)
print("diagram edges:", diagram.edges, "connected:", diagram.is_connected())
print("product structure:", boolean.reducible_partition())
