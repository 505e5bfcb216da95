"""A walk through the symbol-pair metric.

A length-n word is read as n overlapping ordered pairs; the pair weight
counts pairs that are not (0, 0).  This script shows the read vector, the
run identity behind the fast weight formula, and the sandwich relation
that pins pair weight between w_H + 1 and 2 w_H for words that are neither
zero nor full weight.

Run:  python3 demos/pair_metric_basics.py
"""

import random

from sympair import gf, code

f5 = gf.prime_field(5)

word = (1, 0, 0, 1, 1)
print(f"word             : {word}")
print(f"pair read vector : {code.pair_read_vector(word)}")
print(f"hamming weight   : {code.hamming_weight(word)}")
print(f"pair weight      : {code.pair_weight(word)}")
print()
print("The pair weight equals w_H plus the number of maximal circular runs")
print("of nonzero symbols: (1,0,0,1,1) has one run {3,4,0}, so 3 + 1 = 4.")
print()

examples = [
    (0, 0, 0, 0),        # zero word: weight 0
    (2, 3, 1, 4),        # full weight: every pair is nonzero, weight n
    (0, 2, 0, 3),        # two runs of one symbol each
    (1, 1, 0, 0, 2, 2),  # two runs of two symbols
]
for w in examples:
    print(f"  {w}: w_H = {code.hamming_weight(w)}, w_p = {code.pair_weight(w)}")
print()

print("Pair distance is the Hamming distance of the two read vectors, and")
print("linearity lets us reduce distance to the weight of the difference:")
a = (1, 2, 0, 4, 0)
b = (1, 0, 0, 4, 3)
diff = tuple(f5.sub(x, y) for x, y in zip(a, b))
print(f"  a = {a}")
print(f"  b = {b}")
print(f"  pair_distance(a, b)   = {code.pair_distance(a, b)}")
print(f"  pair_weight(a - b)    = {code.pair_weight(diff)}")
print()

rng = random.Random(1)
print("Sandwich relation on 5000 random words over GF(5), n = 12:")
violations = 0
for _ in range(5000):
    w = tuple(rng.randrange(5) for _ in range(12))
    wh = code.hamming_weight(w)
    if 0 < wh < 12 and not (wh + 1 <= code.pair_weight(w) <= 2 * wh):
        violations += 1
print(f"  violations of w_H + 1 <= w_p <= 2 w_H: {violations}")
