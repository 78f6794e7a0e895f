# # Total Stiefel-Whitney classes from character values

from glswc import reps
from glswc.superchar import characters_from_multiplicities
from glswc.swc import (
    RepInput,
    check_closed_forms,
    is_spinorial,
    total_swc,
    w1,
    w2,
    w4_q1,
)

# ## Steinberg representation of GL_2(F_5)

inp = reps.to_rep_input(reps.Steinberg(2, 5))
report = total_swc(inp, 6)
print(inp.chars.values, report.multiplicities.c)
print(report.total)
print(w2(inp), is_spinorial(inp))

# ## q = 3 mod 4: classes in GF(2)[v_1..v_n]

inp = reps.to_rep_input(reps.DetTwist(2, 7, 1))
print(total_swc(inp, 4).total)
print(w1(inp), "|", w2(inp))

# ## Closed forms against the full product

inp = RepInput.finite(13, characters_from_multiplicities([1, 2, 4, 0, 2]), delta=1)
check = check_closed_forms(inp, 6)
print(check.checks)
print(w4_q1(inp, 6))

# ## GL_n(R): the standard representation of GL_2(R)

std = RepInput.lie("Real", [2, 0, -2])
print(total_swc(std, 4).total, is_spinorial(std))
