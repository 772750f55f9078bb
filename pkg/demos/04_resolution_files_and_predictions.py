"""Higher-dimensional data via resolution files, and what an order-n pole forces.

The curve pipelines stop at two variables; beyond that, resolution data
enters as a JSON document.  The normal-crossings germ x1^N ... xn^N is the
classical worked example: its zeta function is 1/(1 + N s)^n with a single
pole of maximal order n at -1/N, and the forced b-function divisor
(s + 1/N)^n (s + 2/N)^n ... (s + 1)^n can be written down exactly.
"""

import json

from topzeta import (
    max_order_pole_report,
    monomial_resolution_data,
    poles,
    predicted_bfunction_divisor,
    zeta_local,
)
from topzeta.formats import dump_pretty, resolution_to_json

for n, N in [(2, 2), (3, 2), (5, 6)]:
    rd = monomial_resolution_data(n, N)
    z = zeta_local(rd)
    pt = poles(z, rd)
    pred = max_order_pole_report(pt, rd, isolated="unknown")
    print(f"x1^{N} * ... * x{n}^{N}:")
    print(f"  Z = {z}")
    print(f"  maximal-order pole at {pred.s0}, order {n}, so N = {pred.N}")
    chain = ", ".join(f"exp(2*pi*i*(-{q}))" for q in pred.grw_eigenvalues)
    print(f"  forced eigenvalue chain: {chain}")
    divisor = predicted_bfunction_divisor(n, N)
    div_txt = " ".join(f"(s + {-r})^{m}" for r, m in divisor)
    print(f"  forced b-function divisor: {div_txt}")
    print(f"  (total degree {sum(m for _, m in divisor)} = n*N = {n * N})\n")

# the same data as an interchange document
doc = resolution_to_json(
    monomial_resolution_data(3, 2),
    metadata={"name": "triple product, squared coordinates"},
)
print("resolution document for n = 3, N = 2:")
print(dump_pretty(doc))
