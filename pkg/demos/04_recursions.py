"""Region recursions checked against brute force."""
from fractions import Fraction

from schroder_lab import (E, G, H, PathSpec, VariantConfig, brute_E, brute_G, brute_H, brute_count_parking,
                          chsch, concordance, psch)
from schroder_lab.recursions import BetaIndexMode, DegenerateMode, DomainError
from schroder_lab.verifier import summary_table

# G counts labelled paths inside a pentagon: a lines, b columns, a slanted
# edge from (p, a) down to (b, q) with slope r
print(G(2, 2, 0, 1, 0), brute_G(2, 2, 0, 1, 0))
print(G(4, 2, Fraction(1, 2), 2, 1), brute_G(4, 2, Fraction(1, 2), 2, 1))

# E is the integer-slope counterpart; its middle case goes wrong once r >= 2
print(E(1, 2, 0, 2, 0), brute_E(1, 2, 0, 2, 0))

# H adds a lower slant through (0, s)
print(H(2, 2, 0, 1, 0, 1), brute_H(2, 2, 0, 1, 0, 1))

# The assembled parking count for unit-fraction families. The printed
# version breaks as soon as the path mixes down steps and diagonals.
fallback = VariantConfig(BetaIndexMode.PARTIAL_SUM, DegenerateMode.REGION_FALLBACK)
for n, d, r in [(2, 0, 2), (2, 2, 2), (2, 4, 2)]:
    truth = brute_count_parking(PathSpec(n, d, r, "unitfrac"))
    try:
        got = psch(n, d, r, fallback)
    except DomainError as err:
        got = f"error: {err}"
    print((n, d, r), truth, got)

print(chsch(2, 0, 2, 4, fallback), psch(2, 0, 2, fallback))

# Full concordance sweeps; MISMATCH-REPORTED rows do not fail the build
reports = concordance("G", max_a=4, max_b=4, rs=(1, 2), tier=2) + concordance("E") + concordance("psch")
print(summary_table(reports))
print(reports[-1].to_jsonl())
