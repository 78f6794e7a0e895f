# # Representation families, w4 tables and the verification harness

from glswc import reps
from glswc.swc import w2, w4_q1
from glswc.tables import build_tables
from glswc.verify import run_verification

# ## Principal series
#
# Every real principal series of GL_n(F_q) with n >= 3 has vanishing w2.

fams = [f for n in (3, 4, 5) for q in (5, 7, 9) for f in reps.real_principal_series(n, q)]
print(len(fams), all(w2(reps.to_rep_input(f), 4).is_zero() for f in fams))

# For n = 3 the degree-4 class depends on q mod 16 and the parity of j.

for q in (17, 5):
    for j in (1, 2):
        fam = reps.PrincipalSeries(3, q, (0, j, -j))
        print(q, j, w4_q1(reps.to_rep_input(fam), 4))

# ## Recomputed parity tables

print(build_tables().to_text())

# ## Non-detection by the anisotropic torus
#
# The torus coefficient vanishes for every odd q while w2 itself does not.

for q in (5, 7, 9):
    fam = reps.DetTwist(2, q, 1)
    print(q, reps.torus_w2_coefficient(2, q, 1), w2(reps.to_rep_input(fam), 4))

# ## One-shot verification

print(run_verification(seed=1, max_n=4, cases=20).to_text())
