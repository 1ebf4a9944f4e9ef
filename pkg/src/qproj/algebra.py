"""Degree-truncated quotient engine for the differential envelope.

Elements are formal sums over words in the generator types
{f, v, df (holomorphic differential), dv (antiholomorphic differential)}
with sparse coefficient tables carrying both free exterior legs and the
per-letter indices.  Equality mod the defining relations has two
backends: a brute-force relation-subspace oracle (row echelon over the
coefficient field) and a rewriting normal form whose rules are derived
automatically from the braiding data; the two are cross-validated at
small degree.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    DegreeBudgetError,
    NondegeneracyError,
    ReductionCycleError,
    SignatureError,
)
from .legs import V, VD, LegOperator, chain, identity_op, invert
from .rep import build_rep, eval_coev, solve_braiding
from .scalars import Scalar, qpow

# letter kinds
F, VV, DF, DV = 0, 1, 2, 3
SPLIT = 8
SPLIT_SLOT = (SPLIT, 0)

KIND_TAG = {F: V, VV: VD, DF: V, DV: VD}
KIND_STAR = {F: VV, VV: F, DF: DV, DV: DF}
KIND_NAME = {F: "f", VV: "v", DF: "df", DV: "dv"}
_RANK = {F: 0, VV: 1, DF: 2, DV: 3, SPLIT: -1}

_REP_CACHE = {}
_BRAID_CACHE = {}


def _rep_for(n):
    if n not in _REP_CACHE:
        _REP_CACHE[n] = build_rep(n)
    return _REP_CACHE[n]


def _braidings_for(n):
    if n not in _BRAID_CACHE:
        rep = _rep_for(n)
        _BRAID_CACHE[n] = {
            (a, b): solve_braiding(rep, a, b)
            for a in (V, VD)
            for b in (V, VD)
        }
    return _BRAID_CACHE[n]


def mono_key(mono):
    """Total order on monomials; larger keys get rewritten first.

    Longer words dominate, then the letter-type sequence, then indices
    (natural order on f/df slots, reversed on v/dv slots so that the
    normal blocks are f ascending and v descending).
    """
    parts = []
    for kind, idx in mono:
        if kind in (VV, DV):
            parts.append((_RANK[kind], -idx))
        else:
            parts.append((_RANK[kind], idx))
    return (len(mono), tuple(parts))


def slot_tag(slot):
    return KIND_TAG[slot[0]]


class Tensor:
    """Formal sum of (word, index) monomials with free exterior legs.

    terms maps (ext_indices, mono) -> coefficient, where mono is a tuple
    of (kind, index) slots, possibly containing tensor-split markers.
    """

    __slots__ = ("ctx", "tags", "terms")

    def __init__(self, ctx, tags, terms):
        self.ctx = ctx
        self.tags = tuple(tags)
        self.terms = terms

    # -- linear structure ----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        if other.tags != self.tags:
            raise SignatureError("adding tensors with different leg tags")
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k)
            acc = c if acc is None else acc + c
            if acc:
                out[k] = acc
            elif k in out:
                del out[k]
        return Tensor(self.ctx, self.tags, out)

    def __sub__(self, other):
        return self + other.scale(-self.ctx.one_coeff)

    def __neg__(self):
        return self.scale(-self.ctx.one_coeff)

    def scale(self, c):
        if not c:
            return Tensor(self.ctx, self.tags, {})
        return Tensor(self.ctx, self.tags, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(self.ctx.as_coeff(c))

    # -- multiplicative structure ---------------------------------------
    def mul(self, other):
        """Concatenation product (same tensor factor)."""
        return self._concat(other, ())

    def tensor(self, other):
        """Tensor product over the base algebra (inserts a split marker)."""
        return self._concat(other, (SPLIT_SLOT,))

    def _concat(self, other, sep):
        out = {}
        for (e1, m1), c1 in self.terms.items():
            for (e2, m2), c2 in other.terms.items():
                c = c1 * c2
                if not c:
                    continue
                key = (e1 + e2, m1 + sep + m2)
                acc = out.get(key)
                acc = c if acc is None else acc + c
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return Tensor(self.ctx, self.tags + other.tags, out)

    def __mul__(self, other):
        if isinstance(other, Tensor):
            return self.mul(other)
        return self.scale(self.ctx.as_coeff(other))

    # -- leg operators ---------------------------------------------------
    def apply(self, op, pos):
        """Apply a leg operator to exterior legs [pos, pos+arity)."""
        k = len(op.src_tags)
        if self.tags[pos : pos + k] != op.src_tags:
            raise SignatureError(
                "operator %s wants %r at leg %d, element has %r"
                % (op.name or "?", op.src_tags, pos, self.tags[pos : pos + k])
            )
        tags = self.tags[:pos] + op.res_tags + self.tags[pos + k :]
        out = {}
        for (ext, mono), c in self.terms.items():
            row = op.fam.get(ext[pos : pos + k])
            if not row:
                continue
            head, tail = ext[:pos], ext[pos + k :]
            for res, c2 in row.items():
                key = (head + res + tail, mono)
                cc = c * c2
                if not cc:
                    continue
                acc = out.get(key)
                acc = cc if acc is None else acc + cc
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return Tensor(self.ctx, tags, out)

    # -- star structure ---------------------------------------------------
    def star(self):
        """Componentwise involution: reverse the word and star each letter."""
        out = {}
        for (ext, mono), c in self.terms.items():
            new = tuple(
                (KIND_STAR[k], i) if k != SPLIT else (SPLIT, 0)
                for (k, i) in reversed(mono)
            )
            out[(ext, new)] = c
        tags = tuple(VD if t == V else V for t in self.tags)
        return Tensor(self.ctx, tags, out)

    def dagger(self):
        """flip composed with (* x *); defined on fully contracted tensors."""
        if self.tags:
            raise SignatureError("dagger needs a fully contracted tensor")
        return self.star()

    # -- inspection ---------------------------------------------------------
    def components(self):
        comp = {}
        for (ext, mono), c in self.terms.items():
            comp.setdefault(ext, {})[mono] = c
        return comp

    def term_count(self):
        return len(self.terms)

    def normalize(self, wedge_splits=()):
        """Canonical representative modulo the defining relations.

        wedge_splits lists the split ordinals interpreted as wedge
        interfaces (degree-two quotient); all others are plain tensor
        products over the base algebra.
        """
        wmask = tuple(sorted(wedge_splits))
        out = {}
        for (ext, mono), c in self.terms.items():
            for m2, c2 in self.ctx.normal_mono(mono, wmask).items():
                key = (ext, m2)
                cc = c * c2
                if not cc:
                    continue
                acc = out.get(key)
                acc = cc if acc is None else acc + cc
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return Tensor(self.ctx, self.tags, out)

    def is_zero(self, wedge_splits=()):
        return not self.normalize(wedge_splits).terms

    def dump(self):
        """JSON-ready description grouped by word."""
        words = {}
        for (ext, mono), c in sorted(self.terms.items()):
            types = tuple(
                KIND_NAME[k] if k != SPLIT else "|" for (k, i) in mono
            )
            idx = tuple(i for (k, i) in mono if k != SPLIT)
            words.setdefault(types, []).append([list(ext) + list(idx), str(c)])
        return {
            "words": [
                {"types": list(types), "coeffs": coeffs}
                for types, coeffs in sorted(words.items())
            ]
        }


class Context:
    """Frozen algebraic data for one (N, coefficient mode) pair.

    mode is either the string 'symbolic' (coefficients in Q(t)) or a
    Fraction t0 giving exact rational evaluation.  All operators, rewrite
    tables and normal-form caches hang off the context; construction is
    single-threaded, afterwards everything is read-only.
    """

    def __init__(self, n, mode="symbolic", table_len=4):
        self.n = n
        self.mode = mode if mode == "symbolic" else Fraction(mode)
        self.rep = _rep_for(n)
        self.wd = self.rep.wd
        self.table_len = table_len
        self.one_coeff = (
            Scalar.from_int(1) if mode == "symbolic" else Fraction(1)
        )
        self._memo = {}
        self._build_ops()
        self._tables_ready = False

    # -- coefficients -----------------------------------------------------
    def as_coeff(self, x):
        if isinstance(x, Scalar):
            return x if self.mode == "symbolic" else x.eval_at(self.mode)
        if isinstance(x, int):
            return self.one_coeff * x
        if isinstance(x, Fraction):
            if self.mode == "symbolic":
                return Scalar.from_fraction(x)
            return x
        return x

    def qq(self, p):
        """q^p in context coefficients, p a rational pairing value."""
        return self.as_coeff(qpow(p, self.n))

    def _spec_op(self, op):
        if self.mode == "symbolic":
            return op
        fam = {}
        for src, row in op.fam.items():
            r = {}
            for res, c in row.items():
                cv = c.eval_at(self.mode)
                if cv:
                    r[res] = cv
            if r:
                fam[src] = r
        return LegOperator(op.src_tags, op.res_tags, fam, op.name)

    # -- operators ----------------------------------------------------------
    def _build_ops(self):
        n = self.n
        wd = self.wd
        braid = _braidings_for(n)
        self.braid = {k: self._spec_op(v) for k, v in braid.items()}
        self.braid_inv = {k: invert(v, n) for k, v in self.braid.items()}
        for (a, b), op in self.braid_inv.items():
            op.name = "braid_inv[%s,%s]" % (a, b)
        dual = eval_coev(self.rep)
        self.ev = self._spec_op(dual["ev"])
        self.ev_w = self._spec_op(dual["ev_w"])
        self.coev = self._spec_op(dual["coev"])
        self.coev_w = self._spec_op(dual["coev_w"])

        q_oo = self.qq(wd.omega_omega)
        q_aa = self.qq(wd.alpha_alpha)
        idvv = identity_op(n, (V, V))
        idww = identity_op(n, (VD, VD))
        rvv, rww = self.braid[(V, V)], self.braid[(VD, VD)]
        self.hecke_asym_vv = rvv.sub(idvv.scale(q_oo))
        self.hecke_sym_vv = rvv.add(idvv.scale(q_oo / q_aa))
        self.hecke_asym_ww = rww.sub(idww.scale(q_oo))
        self.hecke_sym_ww = rww.add(idww.scale(q_oo / q_aa))

        rvw = self.braid[(V, VD)]
        rvw_i = self.braid_inv[(V, VD)]
        rww_i = self.braid_inv[(VD, VD)]
        # conjugated braidings acting on three legs; rightmost factor of
        # the defining composition acts first
        self.cbraid = chain(
            (V, VD, V), n, [(rvw_i, 1), (rvv, 0), (rvw, 1)]
        )
        self.cbraid.name = "cbraid"
        self.cbraid_dual = chain(
            (VD, V, VD), n, [(rvw_i, 0), (rww_i, 1), (rvw, 0)]
        )
        self.cbraid_dual.name = "cbraid_dual"
        self.cbraid_inv = invert(self.cbraid, n)
        self.cbraid_inv.name = "cbraid_inv"
        self.cbraid_dual_inv = invert(self.cbraid_dual, n)
        self.cbraid_dual_inv.name = "cbraid_dual_inv"
        self.rtwist = chain(
            (V, VD, V, VD), n, [(self.cbraid_dual, 1), (self.cbraid, 0)]
        )
        self.rtwist.name = "rtwist"
        self.rtwist_inv = invert(self.rtwist, n)
        self.rtwist_inv.name = "rtwist_inv"

        self.named_ops = {
            "braid_vv": self.braid[(V, V)],
            "braid_vw": self.braid[(V, VD)],
            "braid_wv": self.braid[(VD, V)],
            "braid_ww": self.braid[(VD, VD)],
            "braid_vv_inv": self.braid_inv[(V, V)],
            "braid_vw_inv": self.braid_inv[(V, VD)],
            "braid_wv_inv": self.braid_inv[(VD, V)],
            "braid_ww_inv": self.braid_inv[(VD, VD)],
            "ev": self.ev,
            "ev_w": self.ev_w,
            "coev": self.coev,
            "coev_w": self.coev_w,
            "cbraid": self.cbraid,
            "cbraid_inv": self.cbraid_inv,
            "cbraid_dual": self.cbraid_dual,
            "cbraid_dual_inv": self.cbraid_dual_inv,
            "rtwist": self.rtwist,
            "rtwist_inv": self.rtwist_inv,
            "hecke_asym_vv": self.hecke_asym_vv,
            "hecke_sym_vv": self.hecke_sym_vv,
            "hecke_asym_ww": self.hecke_asym_ww,
            "hecke_sym_ww": self.hecke_sym_ww,
        }

    # -- generator families ---------------------------------------------------
    def letter(self, kind):
        tag = KIND_TAG[kind]
        terms = {((i,), ((kind, i),)): self.one_coeff for i in range(self.n)}
        return Tensor(self, (tag,), terms)

    def f(self):
        return self.letter(F)

    def v(self):
        return self.letter(VV)

    def df(self):
        return self.letter(DF)

    def dv(self):
        return self.letter(DV)

    def unit(self):
        return Tensor(self, (), {((), ()): self.one_coeff})

    def zero(self, tags=()):
        return Tensor(self, tags, {})

    def p(self):
        return self.f().mul(self.v())

    def dp(self):
        return self.df().mul(self.v())

    def dbp(self):
        return self.f().mul(self.dv())

    # -- defining relations ------------------------------------------------
    def relation_families(self):
        """The defining relation families as tensors expected to vanish."""
        q_oo = self.qq(self.wd.omega_omega)
        q_aa = self.qq(self.wd.alpha_alpha)
        q_o2r = self.qq(self.wd.omega_2rho)
        f, v, df, dv = self.f(), self.v(), self.df(), self.dv()
        rels = {
            "ff": f.mul(f) - f.mul(f).apply(self.braid[(V, V)], 0).scale(
                self.one_coeff / q_oo
            ),
            "vv": v.mul(v) - v.mul(v).apply(self.braid[(VD, VD)], 0).scale(
                self.one_coeff / q_oo
            ),
            "vf": v.mul(f) - f.mul(v).apply(self.braid[(V, VD)], 0).scale(q_oo),
            "unit": v.mul(f).apply(self.ev, 0) - self.unit(),
            "dff": df.mul(f)
            - f.mul(df).apply(self.braid[(V, V)], 0).scale(q_aa / q_oo),
            "dfv": df.mul(v)
            - v.mul(df).apply(self.braid_inv[(V, VD)], 0).scale(
                self.one_coeff / q_oo
            ),
            "dvf": dv.mul(f) - f.mul(dv).apply(self.braid[(V, VD)], 0).scale(q_oo),
            "dvv": dv.mul(v)
            - v.mul(dv).apply(self.braid_inv[(VD, VD)], 0).scale(q_oo / q_aa),
            "trace_hol": v.mul(df).apply(self.ev, 0),
            "trace_ahol": f.mul(dv).apply(self.ev_w, 0),
        }
        return rels

    # -- rewrite tables -------------------------------------------------------
    def _rows_of(self, tensor):
        rows = []
        for ext, row in sorted(tensor.components().items()):
            rows.append(dict(row))
        return rows

    def _echelon_rules(self, rows):
        """Reduced echelon form of fragment rows; returns lead -> expansion."""
        piv = {}
        for row in rows:
            cur = dict(row)
            while cur:
                lead = max(cur, key=mono_key)
                if lead in piv:
                    fct = cur.pop(lead)
                    for m, c in piv[lead].items():
                        acc = cur.get(m, 0) - fct * c if m in cur else -fct * c
                        if acc:
                            cur[m] = acc
                        elif m in cur:
                            del cur[m]
                else:
                    fct = cur.pop(lead)
                    piv[lead] = {m: c / fct for m, c in cur.items()}
                    break
        # back substitution so every right side is fully reduced
        for lead in sorted(piv, key=mono_key):
            row = piv[lead]
            for m in sorted([m for m in row if m in piv], key=mono_key):
                fct = row.pop(m)
                for m2, c in piv[m].items():
                    acc = row.get(m2, 0) - fct * c if m2 in row else -fct * c
                    if acc:
                        row[m2] = acc
                    elif m2 in row:
                        del row[m2]
        return {lead: [(-c, m) for m, c in row.items()] for lead, row in piv.items()}

    def _build_tables(self):
        # The rewrite rules are the reduced echelon of the relation ideal
        # truncated at three slots; by the diamond lemma this resolves the
        # overlaps of the quadratic and trace relations.  Windows of up to
        # three letters are matched during normalization.
        slice_rs = RelationSubspace(self, max_len=self.table_len, max_form=1)
        rows = []
        for lead, rest in slice_rs.rows.items():
            row = dict(rest)
            row[lead] = self.one_coeff
            rows.append(row)
        self.pair_rules = self._echelon_rules(rows)
        self.max_rule_window = max(
            (len(lead) for lead in self.pair_rules), default=2
        )
        # wedge interface rules: differentials of the algebra relations,
        # letters promoted to their differentials and constants dropped
        lift = {F: DF, VV: DV}
        rels = self.relation_families()
        wedge_rows = []
        for name in ("ff", "vv", "vf", "unit"):
            for row in self._rows_of(rels[name]):
                lifted = {}
                for mono, c in row.items():
                    if len(mono) != 2:
                        continue  # d of a constant vanishes
                    key = tuple((lift[k], i) for (k, i) in mono)
                    lifted[key] = lifted.get(key, 0) + c
                lifted = {m: c for m, c in lifted.items() if c}
                if lifted:
                    wedge_rows.append(lifted)
        self.wedge_rules = self._echelon_rules(wedge_rows)
        for lead, repl in self.wedge_rules.items():
            bid = _bidegree_pair(lead)
            for _, frag in repl:
                if _bidegree_pair(frag) != bid:
                    raise NondegeneracyError(
                        "wedge rules are not bidegree homogeneous"
                    )

    # -- normalization ---------------------------------------------------------
    def normal_mono(self, mono, wmask=()):
        if not self._tables_ready:
            self._build_tables()
            self._tables_ready = True
        memo = self._memo.setdefault(wmask, {})
        target = mono
        if target in memo:
            return memo[target]
        path = set()
        stack = [[mono, None]]
        guard = 0
        while stack:
            guard += 1
            if guard > 5_000_000:
                raise ReductionCycleError("rewriting did not terminate")
            cur, terms = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            if terms is None:
                red = self._find_redex(cur, wmask)
                if red is None:
                    memo[cur] = {cur: self.one_coeff}
                    stack.pop()
                    continue
                terms = self._expand(cur, red)
                stack[-1][1] = terms
                path.add(cur)
            child = None
            for m2, _ in terms:
                if m2 not in memo:
                    child = m2
                    break
            if child is not None:
                if child in path:
                    raise ReductionCycleError(
                        "rewriting cycle at %r" % (child,)
                    )
                stack.append([child, None])
                continue
            acc = {}
            for m2, c in terms:
                for m3, c3 in memo[m2].items():
                    cc = c * c3
                    prev = acc.get(m3)
                    prev = cc if prev is None else prev + cc
                    if prev:
                        acc[m3] = prev
                    elif m3 in acc:
                        del acc[m3]
            memo[cur] = acc
            path.discard(cur)
            stack.pop()
        return memo[target]

    def _find_redex(self, mono, wmask):
        nslots = len(mono)
        split_no = -1
        for i in range(nslots):
            k = mono[i][0]
            if k == SPLIT:
                split_no += 1
                if i + 1 < nslots and mono[i + 1][0] in (F, VV):
                    return ("migrate", i, 0)
                if (
                    split_no in wmask
                    and 0 < i < nslots - 1
                    and mono[i - 1][0] in (DF, DV)
                    and mono[i + 1][0] in (DF, DV)
                ):
                    pat = (mono[i - 1], mono[i + 1])
                    if pat in self.wedge_rules:
                        return ("wedge", i - 1, 0)
                continue
            for w in range(self.max_rule_window, 1, -1):
                if i + w > nslots:
                    continue
                pat = mono[i : i + w]
                if any(s[0] == SPLIT for s in pat):
                    continue
                if pat in self.pair_rules:
                    return ("pair", i, w)
        return None

    def _expand(self, mono, red):
        what, i, w = red
        if what == "migrate":
            new = mono[:i] + (mono[i + 1], mono[i]) + mono[i + 2 :]
            return [(new, self.one_coeff)]
        if what == "pair":
            repl = self.pair_rules[mono[i : i + w]]
            return [
                (mono[:i] + frag + mono[i + w :], c) for (c, frag) in repl
            ]
        repl = self.wedge_rules[(mono[i], mono[i + 2])]
        return [
            (
                mono[:i] + (frag[0], mono[i + 1], frag[1]) + mono[i + 3 :],
                c,
            )
            for (c, frag) in repl
        ]


def _bidegree_pair(frag):
    kinds = [k for (k, _) in frag]
    return (kinds.count(DF), kinds.count(DV))


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------


class RelationSubspace:
    """Row-reduced truncation of the two-sided relation sub-bimodule.

    Saturated by letter multiplication on both sides up to max_len slots
    and max_form differential letters.  Monomials never contain split
    markers; tensor-square balancing is validated through the rewriter.
    """

    def __init__(self, ctx, max_len, max_form=1):
        if max_len < 2:
            raise DegreeBudgetError("truncation needs at least two slots")
        self.ctx = ctx
        self.max_len = max_len
        self.max_form = max_form
        self.rows = {}
        self._build()

    def _letters(self):
        for i in range(self.ctx.n):
            yield (F, i), 0
            yield (VV, i), 0
        if self.max_form >= 1:
            for i in range(self.ctx.n):
                yield (DF, i), 1
                yield (DV, i), 1

    def _build(self):
        work = []
        for name, fam in sorted(self.ctx.relation_families().items()):
            for ext, row in sorted(fam.components().items()):
                work.append(dict(row))
        while work:
            row = work.pop()
            row = self._insert(row)
            if row is None:
                continue
            maxlen = max(len(m) for m in row)
            form = max(_form_degree(m) for m in row)
            for letter, df in self._letters():
                if maxlen + 1 > self.max_len or form + df > self.max_form:
                    continue
                work.append({(letter,) + m: c for m, c in row.items()})
                work.append({m + (letter,): c for m, c in row.items()})

    def _insert(self, row):
        cur = self.reduce(row)
        if not cur:
            return None
        lead = max(cur, key=mono_key)
        fct = cur.pop(lead)
        normal = {m: c / fct for m, c in cur.items()}
        self.rows[lead] = normal
        return {lead: self.ctx.one_coeff, **{m: c for m, c in normal.items()}}

    def reduce(self, row):
        cur = dict(row)
        out = {}
        while cur:
            lead = max(cur, key=mono_key)
            fct = cur.pop(lead)
            if lead in self.rows:
                for m, c in self.rows[lead].items():
                    acc = cur.get(m, 0) - fct * c if m in cur else -fct * c
                    if acc:
                        cur[m] = acc
                    elif m in cur:
                        del cur[m]
            else:
                out[lead] = fct
        return out

    def contains(self, x):
        """Membership of a tensor (all components) or a raw row."""
        residual = self.residual(x)
        return not residual

    def residual(self, x):
        if isinstance(x, Tensor):
            res = {}
            for ext, row in x.components().items():
                for m in row:
                    if len(m) > self.max_len:
                        raise DegreeBudgetError(
                            "word of %d slots exceeds truncation %d"
                            % (len(m), self.max_len)
                        )
                r = self.reduce(row)
                if r:
                    res[ext] = r
            return res
        return self.reduce(x)

    def rank(self):
        return len(self.rows)

    def contains_one(self):
        one = {(): self.ctx.one_coeff}
        return not self.reduce(one)


def _form_degree(mono):
    return sum(1 for (k, _) in mono if k in (DF, DV))


def build_presentation(ctx, max_len, max_form=1):
    """Relation subspace truncated at max_len slots (the oracle backend)."""
    return RelationSubspace(ctx, max_len, max_form)


def relation_membership(x, rels):
    """(is_member, residual) for a tensor against the oracle."""
    res = rels.residual(x)
    return (not res, res)


def normal_form(x, wedge_splits=()):
    """Rewriting normal form of a tensor."""
    return x.normalize(wedge_splits)


def equals_mod_relations(x, y, engine="rewrite", rels=None):
    """Equality in the quotient; engine is 'oracle', 'rewrite' or 'cross'."""
    diff = x - y
    if engine == "rewrite":
        return diff.is_zero()
    if engine == "oracle":
        if rels is None:
            raise DegreeBudgetError("oracle mode needs a relation subspace")
        return rels.contains(diff)
    if engine == "cross":
        a = diff.is_zero()
        if rels is None:
            raise DegreeBudgetError("cross mode needs a relation subspace")
        b = rels.contains(diff)
        if a != b:
            raise ReductionCycleError(
                "oracle and rewrite engines disagree on %r" % (diff.dump(),)
            )
        return a
    raise ValueError("unknown engine %r" % engine)
