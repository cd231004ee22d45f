"""The two golden-ratio arrangements with 27 and 28 hyperplanes.

Their minimal field of definition is the quadratic field generated by
tau = (1 + sqrt(5))/2, so every coordinate here is an exact a + b*tau.  The
smaller one is literally the larger one minus its last hyperplane.
"""

from arr4 import TAU, builtin, emit_arrangement, f_vector, is_simplicial

a27 = builtin("A^3_1(27)")
a28 = builtin("A^3_1(28)")

print("tau satisfies tau^2 = tau + 1:", TAU * TAU == TAU + 1)
print("a28:", a28, "| a27 is its prefix:", a27.normals == a28.normals[:27])
print("h(28) =", a28.h_vector())
print("t(28) =", a28.t_vector())
print("f(28) =", f_vector(a28))
print("f(27) =", f_vector(a27))

# Both contain a single vertex lying on 15 hyperplanes; the arrangement seen
# from that vertex is the icosahedral rank-3 reflection arrangement.
for label, arr in (("27", a27), ("28", a28)):
    heavy = [v for v in arr.vertices() if v.weight == 15]
    sub = arr.parabolic(heavy[0])
    print(f"heavy vertex of a{label}: parabolic size {sub.n},",
          "point weights", sub.point_weights(),
          "| simplicial:", is_simplicial(sub))

# The canonical file format round-trips the golden-ratio coordinates exactly.
text = emit_arrangement(a28)
print("\nfirst lines of the canonical file:")
for line in text.splitlines()[:6]:
    print("  ", line)
