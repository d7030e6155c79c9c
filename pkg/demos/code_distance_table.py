"""Distances of the repeated-root cyclic codes C_i = <(x-1)^i> of length 9.

Over F_3 with n = 3^2 = 9 there are exactly ten cyclic codes, one per
generator exponent i.  For each one this script prints the exact Hamming
distance, the exact b-symbol distance where a closed-form rule applies (with
the rule name), the sandwich interval otherwise, and the brute-force minimum
over all 3^(9-i) codewords.  The `consistent` column confirms the closed
forms against enumeration.
"""

from bsym.codes import CyclicCodeSpec, build_record, record_to_dict
from bsym.gf import make_field

f = make_field(3)
e = 2
n = 9

for b in (2, 3):
    print(f"\n== b = {b} ==")
    header = f"{'i':>2} {'dim':>3} {'dH':>3} {'rule':>9} {'closed':>6} " \
             f"{'interval':>9} {'brute':>5}  ok"
    print(header)
    print("-" * len(header))
    for i in range(n + 1):
        rec = build_record(CyclicCodeSpec(f, e, i), b)
        d = record_to_dict(rec)
        interval = (f"[{d['db_lower']},{d['db_upper']}]"
                    if d["db_lower"] is not None else "")
        print(f"{i:>2} {d['dim']:>3} {d['dH']:>3} {d['db_rule'] or '-':>9} "
              f"{'' if d['db_closed'] is None else d['db_closed']:>6} "
              f"{interval:>9} {d['db_brute']:>5}  {d['consistent']}")

print("""
Notes:
 * i = 0 is the full space: distance b exactly (one nonzero symbol smears
   across b windows).
 * small i: d_b = i + b, attained by the generator itself.
 * i = 6, 7 sit in the p^e - p^{e-k} + i' family: d_b = p^k (b + i'),
   visible as the jump to multiples of 3.
 * middle i values have no exact closed form; the sandwich from the
   Hamming distance brackets the enumerated value.
 * i = 9 is the zero code, distance 0 by convention.
""")
