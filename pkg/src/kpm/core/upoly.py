"""Dense univariate polynomials as coefficient tuples, lowest degree first.

The coefficient type only needs ``+ - * /`` and comparison with ``0``, so the
same helpers serve rational polynomials and polynomials over number fields.
"""
from fractions import Fraction


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p):
    return len(p) - 1 if p else -1


def add(p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        if i < len(p) and i < len(q):
            out.append(p[i] + q[i])
        elif i < len(p):
            out.append(p[i])
        else:
            out.append(q[i])
    return trim(out)


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def scale(p, c):
    return trim(c * a for a in p)


def divmod_(p, q):
    """Euclidean division over a field; ``q`` must be nonzero."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(trim(p))
    dq = len(q) - 1
    lead_inv = 1 / q[-1] if not isinstance(q[-1], int) else Fraction(1, q[-1])
    if len(r) <= dq:
        return (), tuple(r)
    quot = [0] * (len(r) - dq)
    while len(r) - 1 >= dq and r:
        k = len(r) - 1 - dq
        c = r[-1] * lead_inv
        quot[k] = c
        for i, b in enumerate(q):
            r[i + k] = r[i + k] - c * b
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return trim(quot), tuple(r)


def monic(p):
    p = trim(p)
    if not p:
        return p
    lead = p[-1]
    inv = 1 / lead if not isinstance(lead, int) else Fraction(1, lead)
    return trim(c * inv for c in p)


def gcd(p, q):
    """Monic gcd by the Euclidean algorithm."""
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def xgcd(p, q):
    """Return ``(g, s, t)`` with ``s*p + t*q == g`` and ``g`` monic."""
    r0, r1 = trim(p), trim(q)
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        quo, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return (), (), ()
    lead = r0[-1]
    inv = 1 / lead if not isinstance(lead, int) else Fraction(1, lead)
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pow_(p, e):
    out = (1,)
    for _ in range(e):
        out = mul(out, p)
    return out


def to_str(p, var="x"):
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        cs = str(c)
        if mono and cs == "1":
            terms.append(mono)
        elif mono and cs == "-1":
            terms.append("-" + mono)
        elif mono:
            terms.append(f"({cs})*{mono}" if " " in cs else f"{cs}*{mono}")
        else:
            terms.append(cs)
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"
