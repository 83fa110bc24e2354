"""Area, dinv and the q,1/q specialization."""
from math import comb

from schroder_lab import (Interpretation, PathSpec, QPoly, area, area_lines, enumerate_paths, gen_poly,
                          q_binom, q_int, specialize_t_inv_q)
from schroder_lab.statistics import dinv_haiman, dinv_schroder_r1
from schroder_lab.verifier import validate_interpretation

# area_i = r(i-1) - left area of line i
for path in enumerate_paths(PathSpec(3, 2, 1)):
    print(path.steps.ljust(6), str(path.code).ljust(8), area_lines(path), area(path), dinv_schroder_r1(path))

# Sum of q^area t^dinv over Schroder paths with n = 4, d = 2
s42 = gen_poly(PathSpec(4, 2, 1), "schroder")
print(s42)

# Setting t = 1/q and shifting by w = C(n,2) - C(n-d,2) gives a product of q-binomials
w = comb(4, 2) - comb(2, 2)
lhs = specialize_t_inv_q(s42, w)
rhs = (q_binom(4, 2) * q_binom(6, 4)).exact_div(q_int(3))
print(lhs == rhs, lhs)

# dinv compares a value per line; reading it as the line's area is what makes
# the identity hold. The left-area reading does not.
chosen, reports = validate_interpretation(5)
print("interpretation:", chosen.value, "checked", len(reports), "cases")
print(specialize_t_inv_q(gen_poly(PathSpec(4, 2, 1), "schroder", Interpretation.LEFT_AREA), w) == rhs)

# Haiman's dinv on r-Dyck paths has the same distribution as area
for r in (1, 2, 3):
    paths = list(enumerate_paths(PathSpec(3, 3, r)))
    print(r, sorted(map(area, paths)) == sorted(map(dinv_haiman, paths)), len(paths))

# The q,t polynomial is symmetric for r = 1
cat4 = gen_poly(PathSpec(4, 4, 1), "schroder")
print(cat4 == cat4.swap())
