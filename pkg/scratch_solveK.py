import sys
sys.path.insert(0, "src")
import itertools
from fractions import Fraction

from qproj.algebra import Context
from qproj.legs import V, VD

ctx = Context(2, Fraction(1, 3))
n = 2
Mvv = ctx.braid[(V, V)]
one = Fraction(1)

idx = list(itertools.product(range(n), repeat=2))
RHS = "rhs"

rows = []
qc = ctx.qq(ctx.wd.casimir_pairing)
w = [ctx.qq(-ctx.wd.rho2_weight(i)) for i in range(n)]

# (1)=(3): sum_a K[x][(a,a)] = q^-c * w[x0] * delta_{x0,x1}
for x in idx:
    d = {}
    for a in range(n):
        d[(x, (a, a))] = one
    d[RHS] = (one / qc) * w[x[0]] if x[0] == x[1] else Fraction(0)
    rows.append(d)

# (2): famE12 . famRvv23 . K12 = famE23 on 3-leg families
# engine semantics: (K12 X)^{(y1,y2,x3)} = sum_x K[(x1,x2)][(y1,y2)] X^{(x1,x2,x3)}
# (Rvv23 Y)^{(y1,z2,z3)} = sum Mvv[(w2,w3)][(z2,z3)] Y^{(y1,w2,w3)}
# famE12: sum over y1=z2=a of component (a,a,z3)
# total: result^{z3} = sum_{x1x2x3} [ sum_{a,wd} K[(x1,x2)][(a,wd)] Mvv[(wd,x3)][(a,z3)] ] X^{x1x2x3}
# famE23 X: result^{x1} = sum_b X^{(x1,b,b)}
for x1, x2, x3 in itertools.product(range(n), repeat=3):
    for z3 in range(n):
        d = {}
        for a in range(n):
            for wd in range(n):
                c = Mvv.fam.get((wd, x3), {}).get((a, z3), 0)
                if c:
                    k = ((x1, x2), (a, wd))
                    d[k] = d.get(k, Fraction(0)) + c
        d = {k: v for k, v in d.items() if v}
        d[RHS] = one if (x2 == x3 and x1 == z3) else Fraction(0)
        rows.append(d)

piv = {}
for row in rows:
    cur = dict(row)
    while True:
        ks = [k for k in cur if k != RHS]
        if not ks:
            if cur.get(RHS):
                print("INCONSISTENT SYSTEM")
                sys.exit(0)
            break
        lead = max(ks)
        if lead in piv:
            f = cur.pop(lead)
            for k, v in piv[lead].items():
                if k == lead:
                    continue
                cur[k] = cur.get(k, Fraction(0)) - f * v
                if not cur[k]:
                    del cur[k]
        else:
            f = cur.pop(lead)
            newrow = {k: v / f for k, v in cur.items()}
            newrow[lead] = one
            piv[lead] = newrow
            break

print("rank:", len(piv), "unknowns:", len(idx) ** 2)
sol = {}
for lead in sorted(piv, reverse=True):
    row = piv[lead]
    s = row.get(RHS, Fraction(0))
    for k, v in row.items():
        if k in (lead, RHS):
            continue
        s -= v * sol.get(k, Fraction(0))
    sol[lead] = s

Kfam = {}
for x in idx:
    for y in idx:
        c = sol.get((x, y), Fraction(0))
        if c:
            Kfam.setdefault(x, {})[y] = c

print("solved K:")
for x in sorted(Kfam):
    for y in sorted(Kfam[x]):
        print("  K[%s][%s] = %s" % (x, y, Kfam[x][y]))

print("current Mvw table:")
Mvw = ctx.braid[(V, VD)]
for x in sorted(Mvw.fam):
    for y in sorted(Mvw.fam[x]):
        print("  M[%s][%s] = %s" % (x, y, Mvw.fam[x][y]))

# compare K with D-conjugations of Mvw: K ?= (D x 1) Mvw-ish
t0 = Fraction(1, 3)
D = [ctx.qq(ctx.wd.rho2_weight(i)) for i in range(n)]
print("rho2 weights q^(2rho,l_i):", D)
