"""The vector representation of the quantized enveloping algebra of sl_N,
its dual, and the four braidings between them.

Braidings are not hard-coded: each one is the unique module map
intertwining the two tensor orders, pinned down by its value on the
cyclic vector (highest weight vector tensor lowest weight vector) with
the scalar q^((lambda, mu_low)).  Evaluations and coevaluations carry the
q^(+-(2 rho, lambda_i)) weights tied to the square of the antipode.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import WeightData, pair
from .errors import IntertwinerError
from .legs import V, VD, LegOperator, diag_op
from .scalars import Scalar, qpow


@dataclass
class RepData:
    """Exact action matrices and weight data for V, its dual and bidual.

    action holds the defining actions on the vector module (tag 'V') and
    on its contragredient (tag 'V*').  fam_action holds the actions on
    the index families of the generators: f-type indices transform in the
    contragredient, v-type indices in the double contragredient, which
    differs from V by the square of the antipode.
    """

    n: int
    wd: WeightData
    # action[tag][(kind, k)] = {in_index: {out_index: Scalar}} with kind in
    # 'E','F','K' and k the simple-root label (0-based)
    action: dict = field(default_factory=dict)
    fam_action: dict = field(default_factory=dict)

    def weight(self, tag, i):
        w = self.wd.weights[i]
        if tag == VD:
            return tuple(-x for x in w)
        return w

    def fam_weight(self, tag, i):
        """Weight of the i-th index of a slot: f-labels carry -lambda_i."""
        w = self.wd.weights[i]
        if tag == V:
            return tuple(-x for x in w)
        return w

    def highest_index(self, tag):
        return 0 if tag == V else self.n - 1

    def lowest_index(self, tag):
        return self.n - 1 if tag == V else 0

    def fam_highest_index(self, tag):
        return self.n - 1 if tag == V else 0

    def fam_lowest_index(self, tag):
        return 0 if tag == V else self.n - 1

    @property
    def rho2_pairings(self):
        return [self.wd.rho2_weight(i) for i in range(self.n)]

    @property
    def omega_omega(self):
        return self.wd.omega_omega

    @property
    def alpha_alpha(self):
        return self.wd.alpha_alpha

    @property
    def omega_2rho(self):
        return self.wd.omega_2rho


def contragredient(action, n):
    """Action on dual-basis labels: (X phi^i)(b_j) = phi^i(S(X) b_j).

    Uses S(E_k) = -E_k K_k^{-1}, S(F_k) = -K_k F_k, S(K_k) = K_k^{-1} and
    transposes the resulting matrices.
    """
    out = {}
    for (kind, k) in list(action):
        mat = action[(kind, k)]
        kmat = action[("K", k)]
        smat = {}
        if kind == "K":
            for j, row in mat.items():
                for i, c in row.items():
                    smat.setdefault(j, {})[i] = c.inv()
        elif kind == "E":
            # S(E) b_j = -E K^{-1} b_j
            for j, row in mat.items():
                kw = kmat[j][j].inv()
                for i, c in row.items():
                    smat.setdefault(j, {})[i] = -(kw * c)
        else:
            # S(F) b_j = -K F b_j
            for j, row in mat.items():
                for i, c in row.items():
                    smat.setdefault(j, {})[i] = -(c * kmat[i][i])
        dual = {}
        for j, row in smat.items():
            for i, c in row.items():
                dual.setdefault(i, {})[j] = c
        out[(kind, k)] = dual
    return out


def build_rep(n):
    """Exact matrices for the generators on the vector module, its dual
    and the index families of the algebra generators.

    Basis ordering puts the highest weight vector first on V.  The
    f-indices transform in the contragredient of V, the v-indices in the
    double contragredient, which twists E and F by q^(+-(alpha, alpha)).
    """
    wd = WeightData(n)
    act = {V: {}}
    one = Scalar.from_int(1)
    for k in range(n - 1):
        act[V][("E", k)] = {k + 1: {k: one}}
        act[V][("F", k)] = {k: {k + 1: one}}
        act[V][("K", k)] = {
            i: {i: qpow(wd.root_weight(k, i), n)} for i in range(n)
        }
    act[VD] = contragredient(act[V], n)
    fam = {V: act[VD], VD: contragredient(act[VD], n)}
    return RepData(n=n, wd=wd, action=act, fam_action=fam)


def _act_tensor(actions, gen, key, kdiag):
    """Coproduct action of a generator on a tensor-product basis vector.

    actions is a per-slot list of generator matrices, kdiag the per-slot
    diagonal of K for the same root.  Coproducts: E -> E(x)K + 1(x)E,
    F -> F(x)1 + Kinv(x)F, K -> K(x)K.
    """
    kind, _ = gen
    out = {}

    def add(newkey, c):
        if not c:
            return
        acc = out.get(newkey)
        acc = c if acc is None else acc + c
        if acc:
            out[newkey] = acc
        elif newkey in out:
            del out[newkey]

    if kind == "K":
        c = Scalar.from_int(1)
        for pos, i in enumerate(key):
            c = c * kdiag[pos][i]
        add(key, c)
        return out

    for pos in range(len(key)):
        row = actions[pos].get(key[pos])
        if not row:
            continue
        for j, c in row.items():
            coeff = c
            if kind == "E":
                # K acts on the factors to the right
                for p2 in range(pos + 1, len(key)):
                    coeff = coeff * kdiag[p2][key[p2]]
            else:
                # K^-1 acts on the factors to the left
                for p2 in range(pos):
                    coeff = coeff * kdiag[p2][key[p2]].inv()
            add(key[:pos] + (j,) + key[pos + 1 :], coeff)
    return out


def _slot_data(rep, tags, gen, family):
    source = rep.fam_action if family else rep.action
    kind, k = gen
    actions = [source[t][(kind, k)] for t in tags]
    kdiag = [
        {i: source[t][("K", k)][i][i] for i in range(rep.n)} for t in tags
    ]
    return actions, kdiag


def _nullspace(rows, variables):
    """Basis of the common kernel of sparse rows over the scalar field."""
    piv = {}
    for row in rows:
        cur = dict(row)
        while cur:
            lead = max(cur)
            if lead in piv:
                f = cur.pop(lead)
                for k2, v in piv[lead].items():
                    if k2 == lead:
                        continue
                    acc = cur.get(k2, 0) - f * v if k2 in cur else -f * v
                    if acc:
                        cur[k2] = acc
                    elif k2 in cur:
                        del cur[k2]
            else:
                f = cur[lead]
                piv[lead] = {k2: v / f for k2, v in cur.items()}
                break
    free = [v for v in variables if v not in piv]
    basis = []
    for fv in free:
        vec = {fv: Scalar.from_int(1)}
        for lead in sorted(piv):
            row = piv[lead]
            acc = None
            for k2, v in row.items():
                if k2 == lead:
                    continue
                term = v * vec.get(k2, 0) if k2 in vec else None
                if term:
                    acc = term if acc is None else acc + term
            if acc:
                vec[lead] = -acc
        basis.append(vec)
    return basis


def solve_braiding(rep, left, right, family=True):
    """The braiding left (x) right -> right (x) left as a LegOperator.

    By default the braiding of the index-family modules is produced (the
    one contracted against generator families); with family=False the
    braiding of the vector module and its plain dual is solved instead.
    The transition table is weight-block sparse; the unknown is forced to
    commute with every E_k and F_k and to send the cyclic vector to the
    normalized image.  A solution space of dimension other than one means
    the action matrices are wrong.
    """
    n = rep.n
    pairs_in = list(itertools.product(range(n), repeat=2))
    weight = rep.fam_weight if family else rep.weight
    if family:
        hw = rep.fam_highest_index(left)
        lw = rep.fam_lowest_index(right)
    else:
        hw = rep.highest_index(left)
        lw = rep.lowest_index(right)

    def wsum(tags, key):
        w0 = weight(tags[0], key[0])
        w1 = weight(tags[1], key[1])
        return tuple(a + b for a, b in zip(w0, w1))

    in_tags = (left, right)
    out_tags = (right, left)
    variables = []
    for src in pairs_in:
        w = wsum(in_tags, src)
        for dst in pairs_in:
            if wsum(out_tags, dst) == w:
                variables.append((src, dst))
    varset = set(variables)

    cyc = (hw, lw)
    target = (lw, hw)

    rows = []
    # intertwiner constraints: X(g.x) = g.(X x) entrywise
    for k in range(n - 1):
        for kind in ("E", "F"):
            gen = (kind, k)
            act_in = _slot_data(rep, in_tags, gen, family)
            act_out = _slot_data(rep, out_tags, gen, family)
            for src in pairs_in:
                lhs = _act_tensor(act_in[0], gen, src, act_in[1])
                eq = {}
                for mid, c in lhs.items():
                    for (s2, d2) in varset:
                        if s2 == mid:
                            eq.setdefault(d2, {})[(s2, d2)] = c
                for (s2, d2) in varset:
                    if s2 != src:
                        continue
                    img = _act_tensor(act_out[0], gen, d2, act_out[1])
                    for dst, c in img.items():
                        slot = eq.setdefault(dst, {})
                        acc = slot.get((s2, d2), 0) - c if (s2, d2) in slot else -c
                        if acc:
                            slot[(s2, d2)] = acc
                        elif (s2, d2) in slot:
                            del slot[(s2, d2)]
                rows.extend(r for r in eq.values() if r)
    # normalization shape: the cyclic vector maps into the span of target
    for (s2, d2) in variables:
        if s2 == cyc and d2 != target:
            rows.append({(s2, d2): Scalar.from_int(1)})

    basis = _nullspace(rows, variables)
    if len(basis) != 1:
        raise IntertwinerError(
            "braiding %s,%s solution space has dimension %d"
            % (left, right, len(basis))
        )
    sol = basis[0]
    got = sol.get((cyc, target))
    if not got:
        raise IntertwinerError(
            "braiding %s,%s kills the cyclic vector" % (left, right)
        )
    scalefac = qpow(pair(weight(left, hw), weight(right, lw)), n) / got
    table = {}
    for (src, dst), c in sol.items():
        c = c * scalefac
        if c:
            table.setdefault(src, {})[dst] = c
    _check_intertwiner(rep, in_tags, out_tags, table, family)
    return LegOperator(in_tags, out_tags, table, "braid[%s,%s]" % (left, right))


def _check_intertwiner(rep, in_tags, out_tags, table, family):
    """Assert X(g.x) = g.(X x) for the solved table {in: {out: c}}."""
    n = rep.n
    for k in range(n - 1):
        for kind in ("E", "F", "K"):
            gen = (kind, k)
            act_in = _slot_data(rep, in_tags, gen, family)
            act_out = _slot_data(rep, out_tags, gen, family)
            for src in itertools.product(range(n), repeat=2):
                lhs = {}
                for mid, c in _act_tensor(act_in[0], gen, src, act_in[1]).items():
                    for dst, c2 in table.get(mid, {}).items():
                        acc = lhs.get(dst, 0) + c * c2
                        if acc:
                            lhs[dst] = acc
                        elif dst in lhs:
                            del lhs[dst]
                rhs = {}
                for mid, c in table.get(src, {}).items():
                    for dst, c2 in _act_tensor(act_out[0], gen, mid, act_out[1]).items():
                        acc = rhs.get(dst, 0) + c * c2
                        if acc:
                            rhs[dst] = acc
                        elif dst in rhs:
                            del rhs[dst]
                if lhs != rhs:
                    raise IntertwinerError(
                        "solved braiding fails to intertwine %s_%d" % (kind, k)
                    )


def module_image(op, key):
    """Image of the basis vector labelled by key under a solved braiding."""
    img = {}
    row = op.fam.get(key, {})
    for dst, c in row.items():
        if c:
            img[dst] = c
    return img


def eval_coev(rep):
    """The four duality morphisms as leg operators on index families.

    On upper-index families the pairings act with the transposed weights:
    contracting with ev uses delta coefficients, contracting with the
    primed evaluation uses q^(-(2 rho, lambda_i)), and the coevaluations
    insert the opposite weights.
    """
    n = rep.n
    one = [Scalar.from_int(1)] * n
    wplus = [qpow(rep.wd.rho2_weight(i), n) for i in range(n)]
    wminus = [qpow(-rep.wd.rho2_weight(i), n) for i in range(n)]
    ev = diag_op((VD, V), (), one, "ev")
    ev_w = diag_op((V, VD), (), wminus, "ev'")
    coev = diag_op((), (V, VD), one, "coev")
    coev_w = diag_op((), (VD, V), wplus, "coev'")
    return {"ev": ev, "ev_w": ev_w, "coev": coev, "coev_w": coev_w}


def module_matrix(rep, opname, n):
    """Module-level matrices of the duality morphisms, for inspection.

    ev(f^i (x) v_j) = delta, ev'(v_i (x) f^j) = q^((2 rho, lambda_i)) delta,
    coev = sum v_i (x) f^i, coev' = sum q^(-(2 rho, lambda_i)) f^i (x) v_i.
    """
    wplus = [qpow(rep.wd.rho2_weight(i), n) for i in range(n)]
    wminus = [qpow(-rep.wd.rho2_weight(i), n) for i in range(n)]
    one = [Scalar.from_int(1)] * n
    tables = {
        "ev": ((VD, V), (), one),
        "ev_w": ((V, VD), (), wplus),
        "coev": ((), (V, VD), one),
        "coev_w": ((), (VD, V), wminus),
    }
    tags_in, tags_out, weights = tables[opname]
    return diag_op(tags_in, tags_out, weights, opname)
