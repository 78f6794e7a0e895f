# # Graded rings over GF(2) and the supercharacter table
#
# Classes live in two kinds of ring: the torus ring with square-zero degree-1
# generators `s_i` and polynomial degree-2 generators `t_i`, and the plain
# polynomial ring in degree-1 generators `v_i`.

from glswc import gf2ring as gr
from glswc.superchar import CharacterVector, build_matrix, decompose, verify_involution

# ## Arithmetic in the torus ring

R = gr.st_ring(2, 8)
s1, s2, t1, t2 = R.gens()
print((R.one() + t1) ** 3)
print(s1 * s1)
print(gr.inverse(R.one() + t1 + s2))

# Text output parses back to the same element.

x = (R.one() + s1 + t2) ** 5
assert R.parse(str(x)) == x
print(x)

# ## The supercharacter table of C_2^n
#
# Row `i` lists the values of the supercharacters at `h_i`.

for n in (1, 2, 3):
    print(build_matrix(n).tolist())

print(all(verify_involution(n) for n in range(1, 13)))

# Decomposing a character: the Steinberg character of GL_2(F_5) takes the
# values 5, 1, 5 at h_0, h_1, h_2.

print(decompose(CharacterVector.of([5, 1, 5])).c)
