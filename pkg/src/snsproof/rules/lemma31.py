"""Basic derived rules: weakening, reflexivity, contraposition, conjunction and
disjunction bookkeeping, transitivity and monotonicity.

Each body replays a fixed step list.  Premise steps come first, then one step
per extra hypothesis; parameters arrive as keywords.  Steps the original
argument derives but never uses are still built (and so validated) but drop
out when the proof is linearized.
"""

from __future__ import annotations

from ..formula import TOP, And, Neg, Or, impn
from .registry import rule

N = Neg


@rule("L31a", "b => a", premises=["a"])
def l31a(d, pa, *, a, b):
    s1 = d.axiom("A15", a=a, b=b, c=a)
    s2 = d.axiom("A3", a=s1.formula.left, b=s1.formula.right)
    s3 = d.mp(s1, s2)
    s4 = d.axiom("A3", a=a, b=b)
    s5 = d.mp(s4, s3)
    return d.mp(pa, s5)


@rule("L31b", "a => a")
def l31b(d, *, a):
    s1 = d.axiom("A23")
    s2 = d.axiom("A15", a=TOP, b=a, c=a)
    s3 = d.axiom("A3", a=s2.formula.left, b=s2.formula.right)
    s4 = d.mp(s2, s3)
    s5 = d.axiom("A4", a=TOP, b=a)
    s6 = d.mp(s5, s4)
    return d.mp(s1, s6)


@rule("L31c", ("a => b", "~b => ~a"), premises=["a ==> b"])
def l31c(d, p, *, a, b):
    fwd, back = impn(a, b), impn(N(b), N(a))
    s3 = d.axiom("A3", a=fwd, b=back)
    s5 = d.axiom("A4", a=fwd, b=back)
    return d.mp(p, s3), d.mp(p, s5)


@rule("L31d", "~a => ~(a & b)")
def l31d(d, *, a, b):
    s1 = d.axiom("A5", a=N(a), b=N(b))
    s2 = d.axiom("A17", a=a, b=b)
    s3 = d.rule("L31c", s2, a=Or(N(a), N(b)), b=N(And(a, b)))
    return d.trans(s1, s3)


@rule("L31e", "~b => ~(a & b)")
def l31e(d, *, a, b):
    s1 = d.axiom("A6", a=N(a), b=N(b))
    s2 = d.axiom("A17", a=a, b=b)
    s3 = d.rule("L31c", s2, a=Or(N(a), N(b)), b=N(And(a, b)))
    return d.trans(s1, s3)


@rule("L31f", "b", extra=["a", "a ==> b"])
def l31f(d, ha, hab, *, a, b):
    s2 = d.rule("L31c", hab, a=a, b=b)
    return d.mp(ha, s2)


@rule("L31g", "b", premises=["a ==> b", "a"])
def l31g(d, pab, pa, *, a, b):
    s2 = d.rule("L31c", pab, a=a, b=b)
    return d.mp(pa, s2)


@rule("L31h", "a & b", premises=["a", "b"])
def l31h(d, pa, pb, *, a, b):
    s1 = d.axiom("A15", a=b, b=a, c=b)
    s2 = d.axiom("A3", a=b, b=a)
    s3 = d.rule("L31g", s1, s2, a=impn(And(b, a), b), b=impn(b, impn(a, b)))
    s5 = d.mp(pb, s3)
    s6 = d.axiom("A2", a=a, b=a, c=b)
    s7 = d.rule("L31b", a=a)
    s8 = d.mp(s7, s6)
    s9 = d.mp(s5, s8)
    return d.mp(pa, s9)


def _strong(d, fwd, back, a, b):
    """Pack ``a => b`` and ``~b => ~a`` into ``a ==> b``."""
    return d.rule("L31h", fwd, back, a=impn(a, b), b=impn(N(b), N(a)))


@rule("L31i", ("(a & b) ==> a", "(a & b) ==> b"))
def l31i(d, *, a, b):
    ab = And(a, b)
    left = _strong(d, d.axiom("A3", a=a, b=b), d.rule("L31d", a=a, b=b), ab, a)
    right = _strong(d, d.axiom("A4", a=a, b=b), d.rule("L31e", a=a, b=b), ab, b)
    return left, right


@rule("L31j", ("a ==> (a | b)", "a ==> (b | a)"))
def l31j(d, *, a, b):
    left = _strong(d, d.axiom("A5", a=a, b=b), d.axiom("A7", a=a, b=b), a, Or(a, b))
    right = _strong(d, d.axiom("A6", a=b, b=a), d.axiom("A8", a=b, b=a), a, Or(b, a))
    return left, right


@rule("L31k", "a ==> a")
def l31k(d, *, a):
    return _strong(d, d.rule("L31b", a=a), d.rule("L31b", a=N(a)), a, a)


@rule("L31l", "a ==> c", premises=["a ==> b", "b ==> c"])
def l31l(d, p1, p2, *, a, b, c):
    s2 = d.rule("L31c", p1, a=a, b=b)
    s4 = d.rule("L31c", p2, a=b, b=c)
    s5 = d.axiom("A1", a=a, b=b, c=c)
    s6 = d.mp(s2, s5)
    s7 = d.mp(s4, s6)
    s8 = d.axiom("A4", a=impn(a, b), b=impn(N(b), N(a)))
    s9 = d.mp(p1, s8)
    s10 = d.axiom("A4", a=impn(b, c), b=impn(N(c), N(b)))
    s11 = d.mp(p2, s10)
    s12 = d.axiom("A1", a=N(c), b=N(b), c=N(a))
    s13 = d.mp(s11, s12)
    s14 = d.mp(s9, s13)
    return _strong(d, s7, s14, a, c)


@rule("L31m", "a ==> c", extra=["a ==> b", "b ==> c"])
def l31m(d, h1, h2, *, a, b, c):
    return d.rule("L31l", h1, h2, a=a, b=b, c=c)


@rule("L31n", ("(c & a) => (c & b)", "(a & c) => (b & c)"), premises=["a => b"])
def l31n(d, p, *, a, b, c):
    s1 = d.axiom("A2", a=And(c, a), b=c, c=b)
    s2 = d.axiom("A3", a=c, b=a)
    s3 = d.mp(s2, s1)
    s4 = d.axiom("A4", a=c, b=a)
    s6 = d.trans(s4, p)
    s7 = d.mp(s6, s3)
    s8 = d.axiom("A2", a=And(a, c), b=b, c=c)
    s9 = d.axiom("A3", a=a, b=c)
    s10 = d.trans(s9, p)
    s11 = d.mp(s10, s8)
    s12 = d.axiom("A4", a=a, b=c)
    s13 = d.mp(s12, s11)
    return s7, s13


@rule("L31o", ("(c | a) => (c | b)", "(a | c) => (b | c)"), premises=["a => b"])
def l31o(d, p, *, a, b, c):
    s1 = d.axiom("A9", a=c, b=a, c=Or(c, b))
    s2 = d.axiom("A5", a=c, b=b)
    s3 = d.mp(s2, s1)
    s5 = d.axiom("A6", a=c, b=b)
    s6 = d.trans(p, s5)
    s7 = d.mp(s6, s3)
    s8 = d.axiom("A9", a=a, b=c, c=Or(b, c))
    s9 = d.axiom("A5", a=b, b=c)
    s10 = d.trans(p, s9)
    s11 = d.mp(s10, s8)
    s12 = d.axiom("A6", a=b, b=c)
    s13 = d.mp(s12, s11)
    return s7, s13


@rule("L31p", "(a | b) => (b | a)")
def l31p(d, *, a, b):
    s1 = d.axiom("A6", a=b, b=a)
    s2 = d.axiom("A5", a=b, b=a)
    s3 = d.axiom("A9", a=a, b=b, c=Or(b, a))
    s4 = d.mp(s1, s3)
    return d.mp(s2, s4)


@rule("L31q", "(a & b) => (b & a)")
def l31q(d, *, a, b):
    s1 = d.axiom("A3", a=a, b=b)
    s2 = d.axiom("A4", a=a, b=b)
    s3 = d.axiom("A2", a=And(a, b), b=b, c=a)
    s4 = d.mp(s2, s3)
    return d.mp(s1, s4)


@rule("L31r", "(a | c) ==> (b | c)", extra=["a ==> b"])
def l31r(d, h, *, a, b, c):
    d.axiom("A6", a=b, b=c)  # stated in the original argument, never used
    s2 = d.rule("L31j", a=b, b=c)
    s4 = d.rule("L31c", h, a=a, b=b)
    s5 = d.rule("L31l", h, s2, a=a, b=b, c=Or(b, c))
    s6 = d.rule("L31o", s4, a=a, b=b, c=c, variant=2)
    s7 = d.axiom("A8", a=b, b=c)
    s8 = d.rule("L31c", s5, a=a, b=Or(b, c), variant=2)
    s9 = d.axiom("A10", a=Or(b, c), b=a, c=c)
    s10 = d.mp(s8, s9)
    s11 = d.mp(s7, s10)
    return _strong(d, s6, s11, Or(a, c), Or(b, c))


@rule("L31s", "(c | a) ==> (c | b)", extra=["a ==> b"])
def l31s(d, h, *, a, b, c):
    s1 = d.rule("L31j", a=b, b=c, variant=2)
    s3 = d.rule("L31c", h, a=a, b=b)
    s4 = d.rule("L31l", h, s1, a=a, b=b, c=Or(c, b))
    s5 = d.rule("L31o", s3, a=a, b=b, c=c)
    s6 = d.axiom("A7", a=c, b=b)
    s7 = d.rule("L31c", s4, a=a, b=Or(c, b), variant=2)
    s8 = d.axiom("A10", a=Or(c, b), b=c, c=a)
    s9 = d.mp(s6, s8)
    s10 = d.mp(s7, s9)
    return _strong(d, s5, s10, Or(c, a), Or(c, b))


@rule("L31t", "(a | c) ==> (b | t)", extra=["a ==> b", "c ==> t"])
def l31t(d, h1, h2, *, a, b, c, t):
    s1 = d.rule("L31r", h1, a=a, b=b, c=c)
    s2 = d.rule("L31s", h2, a=c, b=t, c=b)
    return d.rule("L31l", s1, s2, a=Or(a, c), b=Or(b, c), c=Or(b, t))


@rule("L31u", "~a ==> ~b", extra=["b ==> a"])
def l31u(d, h, *, a, b):
    s1 = d.axiom("A11", a=a)
    s3 = d.rule("L31l", h, s1, a=b, b=a, c=N(N(a)))
    s4 = d.axiom("A12", a=b)
    s5 = d.rule("L31l", s4, s3, a=N(N(b)), b=b, c=N(N(a)))
    s6 = d.rule("L31c", s5, a=N(N(b)), b=N(N(a)))
    s7 = d.rule("L31c", h, a=b, b=a, variant=2)
    return _strong(d, s7, s6, N(a), N(b))


@rule("L31v", "~(a -> b) => ~(a => b)")
def l31v(d, *, a, b):
    s1 = d.axiom("A20", a=a, b=b)
    s2 = d.rule("L31e", a=a, b=b)
    s3 = d.rule("L31n", s2, a=N(b), b=N(And(a, b)), c=a)
    s4 = d.trans(s1, s3)
    s5 = d.axiom("A21", a=a, b=And(a, b))
    return d.trans(s4, s5)
