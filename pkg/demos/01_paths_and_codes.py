"""Paths, area codes and the two slope conventions."""
from schroder_lab import (LatticePath, Mode, PathSpec, count_paths, count_schroder, decode, encode,
                          enumerate_paths, format_code, parse_code)

# A family: n lines, d down steps, slope r. The n - d remaining lines are
# crossed by a diagonal step G = (r, -1).
spec = PathSpec(n=2, d=1, r=2)
for path in enumerate_paths(spec):
    print(path.steps, format_code(path.code.entries))

# Four paths, the closed form agrees
print("closed form:", count_schroder(2, 1, 2), "enumerated:", count_paths(spec))

# Every path is recorded by its left areas, one per line; ~ marks the
# lines crossed by a diagonal.
big = PathSpec(5, 3, 2)
path = LatticePath(big, "DGDRDRRGRRR")
code = encode(path)
print(path.steps, "->", code)
print(decode(code).steps == path.steps)

# A code that violates a constraint is rejected with the reason
try:
    decode(parse_code("0,2"), PathSpec(2, 2, 1))
except ValueError as err:
    print("rejected:", err)

# Unit-fraction slope: G = (1, -r), the path starts at height n r and every
# diagonal crosses r lines, so bars come in runs of r.
uf = PathSpec(3, 2, 2, Mode.UNITFRAC)
for path in enumerate_paths(uf):
    print(path.steps.ljust(6), format_code(path.code.entries))

# r must divide d, otherwise the family is empty
print(list(enumerate_paths(PathSpec(2, 3, 2, Mode.UNITFRAC))))

# A constraint line h below the start, parallel to the boundary, cuts the family down
for h in range(4):
    print("h =", h, count_paths(PathSpec(3, 2, 1, h=h)))
