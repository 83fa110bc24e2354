"""Parking functions as rearranged codes, and the counting formula."""
from schroder_lab import (PathSpec, brute_count_parking, count_parking_closed, enumerate_paths, is_parking,
                          parking_set, parse_code)
from schroder_lab.lattice import format_code
from schroder_lab.verifier import annexe1, check_no_symmetric_dinv

# A sequence parks when its sorted version is a valid code. Barred and
# unbarred copies of a value are different symbols.
spec = PathSpec(5, 3, 2)
f = is_parking(parse_code("0~,4,0,4,2~"), spec)
print("path", f.path.steps, "code", f.path.code, "sigma", "".join(map(str, f.sigma)))
print(format_code(f.apply()))

print(is_parking(parse_code("2,0"), PathSpec(2, 2, 1)))

# The rearrangements of 0,0,1,2
dyck = next(p for p in enumerate_paths(PathSpec(4, 4, 1)) if str(p.code) == "0,0,1,2")
print(len(list(parking_set(dyck))))

# Counting by brute force against the closed formula
for n in range(1, 5):
    row = [(brute_count_parking(PathSpec(n, d, 2)), count_parking_closed(n, d, 2)) for d in range(n + 1)]
    print(n, row)

# Sch_{2,1}^2 has areas {0,0,1,2}. Labelling its four paths with the twelve
# rearrangements of 0012 never produces [4]_q = 1+q+q^2+q^3, whatever the shift
rep = annexe1()
for row in rep.actual["rows"]:
    print(row["P"], row["poly"], "w =", row["w"])
sweep = check_no_symmetric_dinv()
print(sweep.status.value, "coverage", sweep.actual["coverage"])
