"""Monodromy eigenvalues and the pole conjectures on a batch of germs.

For every pole s0 of the local zeta function, exp(2*pi*i*s0) should be a
monodromy eigenvalue somewhere on the germ (a theorem for curves).  The
eigenvalue set computed here is a certified subset read off the monodromy
zeta function and the branch multiplicities, so each pole comes back either
"certified" or "inconclusive" -- never "violated".
"""

from topzeta import (
    acampo_zeta,
    check_conjecture3,
    check_conjecture4,
    lct_local,
    monodromy_eigenvalues_germ,
    parse_poly,
    poles,
    resolve_curve_germ,
    zeta_local,
)

GERMS = ["x^2 + y^3", "x*y", "x^3 + y^3", "x^2 + y^7", "x^5 + y^5",
         "(y^2 - x^3)*(y^2 - 2*x^3)"]

for text in GERMS:
    f = parse_poly(text, ["x", "y"])
    rd = resolve_curve_germ(f)
    z = zeta_local(rd)
    pt = poles(z, rd)
    lct = lct_local(rd)

    print(f"germ {text}")
    print(f"  Z = {z}")
    print(f"  monodromy zeta function: {acampo_zeta(rd)}")

    ev = monodromy_eigenvalues_germ(rd)
    frac_txt = ", ".join(str(q) for q in ev.sorted())
    print(f"  certified eigenvalue exponents: {{{frac_txt}}}")

    c3 = check_conjecture3(pt, ev)
    for loc, status in c3.results:
        print(f"  pole {loc}: exp(2*pi*i*({loc})) {status}")

    c4 = check_conjecture4(pt, rd.ambient_dim, lct)
    verdict = "holds" if c4.passed() else "FAILS"
    extra = " (vacuously: no order-2 pole)" if not c4.order_n_locations else ""
    print(f"  at most one maximal-order pole, closest to origin: {verdict}{extra}\n")
