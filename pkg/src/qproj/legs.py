"""Exact sparse linear maps acting on designated tensor slots.

A LegOperator carries two slot signatures (tuples over {'V', 'V*'}) and a
sparse transition table mapping source index tuples to weighted result
index tuples.  Operators are stored in the orientation in which they act
on coefficient families of upper-index generators: applying an operator
contracts the stored table against the family components.  Composition is
in application order, and embedding pads with identities so subscripted
legs like an operator acting at slots 3..6 of a six-slot space can be
compared as maps.
"""

from __future__ import annotations

import itertools

from .errors import SignatureError, SingularOperatorError

V = "V"
VD = "V*"


class LegOperator:
    """Sparse map between tensor-slot index spaces.

    fam maps a source index tuple to a dict {result index tuple: coeff}.
    src_tags/res_tags give the slot types the operator consumes/produces
    when acting on elements.
    """

    __slots__ = ("src_tags", "res_tags", "fam", "name")

    def __init__(self, src_tags, res_tags, fam, name=""):
        self.src_tags = tuple(src_tags)
        self.res_tags = tuple(res_tags)
        self.fam = fam
        self.name = name

    @property
    def arity_in(self):
        return len(self.src_tags)

    @property
    def arity_out(self):
        return len(self.res_tags)

    def canonical(self):
        """Drop explicit zeros; sort entries for stable comparison."""
        out = {}
        for src in sorted(self.fam):
            row = {res: c for res, c in self.fam[src].items() if c}
            if row:
                out[src] = dict(sorted(row.items()))
        return LegOperator(self.src_tags, self.res_tags, out, self.name)

    def __eq__(self, other):
        if not isinstance(other, LegOperator):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return (
            a.src_tags == b.src_tags
            and a.res_tags == b.res_tags
            and a.fam == b.fam
        )

    def scale(self, c):
        return LegOperator(
            self.src_tags,
            self.res_tags,
            {s: {r: c * v for r, v in row.items()} for s, row in self.fam.items()},
            self.name,
        )

    def add(self, other):
        if self.src_tags != other.src_tags or self.res_tags != other.res_tags:
            raise SignatureError("adding operators with different signatures")
        out = {s: dict(row) for s, row in self.fam.items()}
        for s, row in other.fam.items():
            dst = out.setdefault(s, {})
            for r, c in row.items():
                acc = dst.get(r)
                acc = c if acc is None else acc + c
                if acc:
                    dst[r] = acc
                elif r in dst:
                    del dst[r]
            if not dst:
                del out[s]
        return LegOperator(self.src_tags, self.res_tags, out)

    def sub(self, other):
        return self.add(other.scale(_minus_one(other)))

    def residual(self, other):
        """Number of nonzero entries of self - other."""
        diff = self.sub(other).canonical()
        return sum(len(row) for row in diff.fam.values())

    def entry_count(self):
        return sum(len(row) for row in self.fam.values())


def _minus_one(op):
    for row in op.fam.values():
        for c in row.values():
            return -(c / c)
    return -1


def identity_op(n, tags):
    fam = {
        idx: {idx: 1}
        for idx in itertools.product(range(n), repeat=len(tags))
    }
    return LegOperator(tuple(tags), tuple(tags), fam, "id")


def diag_op(tags_in, tags_out, weights, name=""):
    """Operator pairing equal indices with a per-index weight.

    For evaluations (two slots in, none out) weights[i] multiplies the
    contraction of the diagonal (i, i); for coevaluations the transposed
    insertion is produced.
    """
    if len(tags_in) == 2 and len(tags_out) == 0:
        fam = {(i, i): {(): w} for i, w in enumerate(weights) if w}
    elif len(tags_in) == 0 and len(tags_out) == 2:
        fam = {(): {(i, i): w for i, w in enumerate(weights) if w}}
    else:
        raise SignatureError("diag_op handles only pairings and copairings")
    return LegOperator(tags_in, tags_out, fam, name)


def apply_at(op, pos, key):
    """Apply op to the sub-tuple key[pos : pos + arity_in].

    Yields (new_key, coeff) pairs; key is a plain index tuple.
    """
    k = op.arity_in
    mid = key[pos : pos + k]
    row = op.fam.get(mid)
    if not row:
        return
    head, tail = key[:pos], key[pos + k :]
    for res, c in row.items():
        yield head + res + tail, c


def embed(op, pos, ambient_tags, n):
    """identity (x) op (x) identity on the ambient signature.

    ambient_tags must contain op.src_tags at position pos (0-based).
    """
    ambient_tags = tuple(ambient_tags)
    k = op.arity_in
    if pos < 0 or pos + k > len(ambient_tags):
        raise SignatureError("embedding position out of range")
    if ambient_tags[pos : pos + k] != op.src_tags:
        raise SignatureError(
            "ambient slots %r do not match operator signature %r"
            % (ambient_tags[pos : pos + k], op.src_tags)
        )
    res_tags = ambient_tags[:pos] + op.res_tags + ambient_tags[pos + k :]
    fam = {}
    outer = len(ambient_tags) - k
    for mid, row in op.fam.items():
        for rest in itertools.product(range(n), repeat=outer):
            head, tail = rest[:pos], rest[pos:]
            src = head + mid + tail
            fam[src] = {head + res + tail: c for res, c in row.items()}
    return LegOperator(ambient_tags, res_tags, fam, op.name)


def compose(after, before):
    """after . before, i.e. before acts first."""
    if before.res_tags != after.src_tags:
        raise SignatureError(
            "composition mismatch: %r then %r" % (before.res_tags, after.src_tags)
        )
    fam = {}
    for src, row in before.fam.items():
        acc = {}
        for mid, c1 in row.items():
            row2 = after.fam.get(mid)
            if not row2:
                continue
            for res, c2 in row2.items():
                c = c1 * c2
                prev = acc.get(res)
                prev = c if prev is None else prev + c
                if prev:
                    acc[res] = prev
                elif res in acc:
                    del acc[res]
        if acc:
            fam[src] = acc
    return LegOperator(before.src_tags, after.res_tags, fam)


def chain(tags, n, steps):
    """Compose operators positionally on a fixed ambient signature.

    steps is a sequence of (op, pos) applied in order (first entry acts
    first).  Returns the materialized LegOperator on the ambient space.
    """
    cur_tags = tuple(tags)
    state = None
    for op, pos in steps:
        emb = embed(op, pos, cur_tags, n)
        state = emb if state is None else compose(emb, state)
        cur_tags = emb.res_tags
    if state is None:
        return identity_op(n, tags)
    return state


def invert(op, n):
    """Inverse of a square sparse operator via exact elimination."""
    if op.src_tags != op.res_tags and len(op.src_tags) != len(op.res_tags):
        raise SingularOperatorError("inverting a non-square operator")
    keys = sorted(itertools.product(range(n), repeat=op.arity_in))
    pos = {k: i for i, k in enumerate(keys)}
    dim = len(keys)
    rows = []
    for src in keys:
        row = dict(op.fam.get(src, {}))
        rhs = {src: 1}
        rows.append((row, rhs))
    # gaussian elimination on the transition table
    piv = {}
    for row, rhs in rows:
        cur, cr = dict(row), dict(rhs)
        while cur:
            lead = max(cur, key=pos.get)
            if lead in piv:
                prow, prhs = piv[lead]
                f = cur[lead]
                for k, v in prow.items():
                    acc = cur.get(k, 0) - f * v
                    if acc:
                        cur[k] = acc
                    elif k in cur:
                        del cur[k]
                for k, v in prhs.items():
                    acc = cr.get(k, 0) - f * v
                    if acc:
                        cr[k] = acc
                    elif k in cr:
                        del cr[k]
            else:
                f = cur[lead]
                cur = {k: v / f for k, v in cur.items()}
                cr = {k: v / f for k, v in cr.items()}
                piv[lead] = (cur, cr)
                break
        else:
            raise SingularOperatorError("operator %s is singular" % (op.name or "?"))
    if len(piv) != dim:
        raise SingularOperatorError("operator %s is singular" % (op.name or "?"))
    # back substitution, ascending so every subtracted row is already clean
    for lead in sorted(piv, key=pos.get):
        row, rhs = piv[lead]
        for k in sorted((k for k in row if k != lead), key=pos.get):
            _, prhs = piv[k]
            f = row.pop(k)
            for kk, v in prhs.items():
                acc = rhs.get(kk, 0) - f * v
                if acc:
                    rhs[kk] = acc
                elif kk in rhs:
                    del rhs[kk]
    fam = {}
    # piv maps src-of-op leads; inverse table: for each lead, rhs row
    for lead, (_, rhs) in piv.items():
        fam[lead] = {k: v for k, v in rhs.items() if v}
    return LegOperator(op.res_tags, op.src_tags, fam, (op.name + "^-1") if op.name else "")


def dump_operator(op):
    """JSON-ready description of an operator's table."""
    entries = []
    for src in sorted(op.fam):
        for res in sorted(op.fam[src]):
            c = op.fam[src][res]
            if c:
                entries.append([list(src), list(res), str(c)])
    return {
        "signature_in": list(op.src_tags),
        "signature_out": list(op.res_tags),
        "entries": entries,
    }
