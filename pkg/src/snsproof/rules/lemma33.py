"""Derived rules for strong negation, distribution and congruence of ``->``.

Several of these reason under temporary assumptions and then discharge them
with the deduction theorem; :meth:`Deriver.discharge` runs the real proof
transformation on the sub-derivation each time.
"""

from __future__ import annotations

from ..formula import And, Imp, Neg, Or, impn, strimp
from .lemma31 import _strong
from .registry import rule

N = Neg


def _nn(f):
    return N(N(f))


@rule("L33a", "(~a & ~b) <=> ~(a | b)")
def l33a(d, *, a, b):
    s1 = d.axiom("A17", a=N(a), b=N(b))
    s2 = d.axiom("A11", a=a)
    h = d.assume(strimp(a, _nn(a)))
    s3 = d.rule("L31r", h, a=a, b=_nn(a), c=b)
    s4 = d.discharge(s3, h)
    s5 = d.mp(s2, s4)
    s6 = d.axiom("A11", a=b)
    h = d.assume(strimp(b, _nn(b)))
    s7 = d.rule("L31s", h, a=b, b=_nn(b), c=_nn(a))
    s8 = d.discharge(s7, h)
    s9 = d.mp(s6, s8)
    s10 = d.rule("L31l", s5, s9, a=Or(a, b), b=Or(_nn(a), b), c=Or(_nn(a), _nn(b)))
    nanb = And(N(a), N(b))
    s11 = d.rule("L31l", s10, s1, a=Or(a, b), b=Or(_nn(a), _nn(b)), c=N(nanb))
    s12 = d.rule("L31c", s11, a=Or(a, b), b=N(nanb), variant=2)
    s13 = d.rule("L31c", d.axiom("A11", a=nanb), a=nanb, b=_nn(nanb))
    s14 = d.trans(s13, s12)
    s15 = d.axiom("A7", a=a, b=b)
    s16 = d.axiom("A8", a=a, b=b)
    s17 = d.meet(s15, s16)
    return d.rule("L31h", s14, s17, a=impn(nanb, N(Or(a, b))), b=impn(N(Or(a, b)), nanb))


@rule("L33b", "(a & (a => b)) ==> (a & (~a | b))")
def l33b(d, *, a, b):
    d.axiom("A4", a=a, b=N(b))  # stated in the original argument, never used
    s2 = d.rule("L31e", a=a, b=b)
    s3 = d.rule("L31n", s2, a=N(b), b=N(And(a, b)), c=a)
    s5 = d.axiom("A21", a=a, b=And(a, b))
    s6 = d.trans(s3, s5)
    s7 = d.rule("L31o", s6, a=And(a, N(b)), b=N(impn(a, b)), c=N(a))
    s8 = d.rule("L31c", d.axiom("A16", a=a, b=Or(N(a), b)), a=N(And(a, Or(N(a), b))),
                b=Or(N(a), N(Or(N(a), b))))
    s9 = d.rule("L33a", a=N(a), b=b)
    left, right = And(_nn(a), N(b)), N(Or(N(a), b))
    s10 = d.axiom("A4", a=impn(left, right), b=impn(right, left))
    s11 = d.mp(s9, s10)
    s12 = d.rule("L31o", s11, a=right, b=left, c=N(a))
    s13 = d.trans(s8, s12)
    s14 = d.rule("L31c", d.axiom("A12", a=a), a=_nn(a), b=a)
    s15 = d.rule("L31n", s14, a=_nn(a), b=a, c=N(b), variant=2)
    s16 = d.rule("L31o", s15, a=left, b=And(a, N(b)), c=N(a))
    s17 = d.rule("L31c", d.axiom("A17", a=a, b=impn(a, b)), a=Or(N(a), N(impn(a, b))),
                 b=N(And(a, impn(a, b))))
    s18 = d.trans(s13, s16)
    s19 = d.trans(s18, s7)
    s20 = d.trans(s19, s17)
    ha = d.assume(a)
    hab = d.assume(impn(a, b))
    s23 = d.mp(ha, hab)
    s24 = d.axiom("A6", a=N(a), b=b)
    s25 = d.mp(s23, s24)
    s26 = d.rule("L31h", ha, s25, a=a, b=Or(N(a), b))
    s27 = d.discharge(s26, hab)
    s28 = d.discharge(s27, ha)
    target = And(a, Or(N(a), b))
    s30 = d.rule("L31c", d.axiom("A19", a=a, b=impn(a, b), c=target),
                 a=impn(a, impn(impn(a, b), target)), b=impn(And(a, impn(a, b)), target))
    s31 = d.mp(s28, s30)
    return _strong(d, s31, s20, And(a, impn(a, b)), target)


@rule("L33c", "b <=> a", premises=["a <=> b"])
def l33c(d, p, *, a, b):
    s2 = d.rule("L31q", a=impn(a, b), b=impn(b, a))
    return d.mp(p, s2)


@rule("L33d", "a ==> (a & (a | b))")
def l33d(d, *, a, b):
    s1 = d.rule("L31b", a=a)
    s2 = d.axiom("A5", a=a, b=b)
    s3 = d.meet(s1, s2)
    a_ab = And(a, Or(a, b))
    s4 = d.rule("L31c", d.axiom("A16", a=a, b=Or(a, b)), a=N(a_ab), b=Or(N(a), N(Or(a, b))))
    nanb, nab = And(N(a), N(b)), N(Or(a, b))
    s5 = d.rule("L33c", d.rule("L33a", a=a, b=b), a=nanb, b=nab)
    s6 = d.axiom("A3", a=impn(nab, nanb), b=impn(nanb, nab))
    s7 = d.mp(s5, s6)
    s8 = d.rule("L31o", s7, a=nab, b=nanb, c=N(a))
    s9 = d.axiom("A3", a=N(a), b=N(b))
    s10 = d.rule("L31b", a=N(a))
    s13 = d.join(s10, s9)
    s14 = d.trans(s4, s8)
    s15 = d.trans(s14, s13)
    return _strong(d, s3, s15, a, a_ab)


@rule("L33e", "(a & ((c & a) | (b & a))) ==> (a & (b | c))")
def l33e(d, *, a, b, c):
    ca, ba, bc = And(c, a), And(b, a), Or(b, c)
    x = Or(ca, ba)
    s1 = d.axiom("A4", a=c, b=a)
    s2 = d.axiom("A4", a=b, b=a)
    s3 = d.join(s1, s2)
    s4 = d.axiom("A3", a=c, b=a)
    s5 = d.axiom("A6", a=b, b=c)
    s6 = d.trans(s4, s5)
    s7 = d.axiom("A3", a=b, b=a)
    s8 = d.axiom("A5", a=b, b=c)
    s9 = d.trans(s7, s8)
    s10 = d.join(s6, s9)
    s11 = d.meet(s3, s10)
    s12 = d.axiom("A4", a=a, b=x)
    s13 = d.trans(s12, s11)
    s14 = d.rule("L31c", d.axiom("A16", a=a, b=bc), a=N(And(a, bc)), b=Or(N(a), N(bc)))
    s15 = d.axiom("A8", a=b, b=c)
    s16 = d.rule("L31o", s15, a=N(bc), b=N(c), c=N(a))
    s17 = d.rule("L31p", a=N(a), b=N(c))
    s18 = d.trans(s16, s17)
    # the same three steps with b in place of c
    s19 = d.axiom("A7", a=b, b=c)
    s20 = d.trans(d.rule("L31o", s19, a=N(bc), b=N(b), c=N(a)),
                  d.rule("L31p", a=N(a), b=N(b)))
    s21 = d.meet(s18, s20)
    left, right = Or(N(c), N(a)), Or(N(b), N(a))
    s22 = d.axiom("A3", a=left, b=right)
    s23 = d.rule("L31c", d.axiom("A17", a=c, b=a), a=left, b=N(ca))
    s24 = d.trans(s22, s23)
    s25 = d.axiom("A4", a=left, b=right)
    s26 = d.rule("L31c", d.axiom("A17", a=b, b=a), a=right, b=N(ba))
    s27 = d.trans(s25, s26)
    s28 = d.meet(s24, s27)
    y = And(N(ca), N(ba))
    s29 = d.rule("L33c", d.rule("L33a", a=ca, b=ba), a=y, b=N(x))
    s30 = d.axiom("A4", a=impn(N(x), y), b=impn(y, N(x)))
    s31 = d.mp(s29, s30)
    s32 = d.rule("L31e", a=a, b=x)
    s33 = d.trans(s14, s21)
    s34 = d.trans(s33, s28)
    s35 = d.trans(s34, s31)
    s36 = d.trans(s35, s32)
    return _strong(d, s13, s36, And(a, x), And(a, bc))


def _pair_with(d, ha, hb, a, b):
    """Under hypotheses ``a`` and ``b``, derive ``b & a`` by discharging ``a``."""
    s2 = d.discharge(hb, ha)
    s3 = d.rule("L31b", a=a)
    s4 = d.axiom("A2", a=a, b=b, c=a)
    s5 = d.mp(s2, s4)
    s6 = d.mp(s3, s5)
    return d.mp(ha, s6)


@rule("L33f", "(a & (b | c)) ==> (a & ((c & a) | (b & a)))")
def l33f(d, *, a, b, c):
    ca, ba, bc = And(c, a), And(b, a), Or(b, c)
    x = Or(ca, ba)
    ha, hb, hc = d.assume(a), d.assume(b), d.assume(c)
    s7 = _pair_with(d, ha, hb, a, b)
    s8 = _pair_with(d, ha, hc, a, c)
    s9 = d.axiom("A6", a=ca, b=ba)
    s10 = d.mp(s7, s9)
    s11 = d.discharge(s10, hb)
    s12 = d.axiom("A5", a=ca, b=ba)
    s13 = d.mp(s8, s12)
    s14 = d.discharge(s13, hc)
    s15 = d.axiom("A9", a=b, b=c, c=x)
    s16 = d.mp(s11, s15)
    s17 = d.mp(s14, s16)
    s18 = d.discharge(s17, ha)
    s19 = d.axiom("A19", a=a, b=bc, c=x)
    s20 = d.rule("L31g", s19, s18, a=impn(a, impn(bc, x)), b=impn(And(a, bc), x))
    s21 = d.axiom("A3", a=a, b=bc)
    s22 = d.meet(s21, s20)
    s23 = d.axiom("A22", a=a, b=b, c=c)
    return _strong(d, s22, s23, And(a, bc), And(a, x))


@rule("L33g", "(~b => ~a) => ((~c => ~a) => (~(b & c) => ~a))")
def l33g(d, *, a, b, c):
    h1 = d.assume(impn(N(b), N(a)))
    h2 = d.assume(impn(N(c), N(a)))
    h3 = d.assume(N(And(b, c)))
    s1 = d.axiom("A9", a=N(b), b=N(c), c=N(a))
    s3 = d.mp(h1, s1)
    s5 = d.mp(h2, s3)
    s7 = d.axiom("A16", a=b, b=c)
    s8 = d.rule("L31c", s7, a=N(And(b, c)), b=Or(N(b), N(c)))
    s9 = d.mp(h3, s8)
    s10 = d.mp(s9, s5)
    s11 = d.discharge(s10, h3)
    s12 = d.discharge(s11, h2)
    return d.discharge(s12, h1)


@rule("L33h", ("a ==> (b & c)", "a ==> (c & b)"), premises=["a ==> b", "a ==> c"])
def l33h(d, p1, p2, *, a, b, c):
    s2 = d.rule("L31c", p1, a=a, b=b)
    s3 = d.rule("L31c", p1, a=a, b=b, variant=2)
    s5 = d.rule("L31c", p2, a=a, b=c)
    s6 = d.rule("L31c", p2, a=a, b=c, variant=2)
    s7 = d.axiom("A2", a=a, b=b, c=c)
    s8 = d.mp(s2, s7)
    s9 = d.mp(s5, s8)
    s10 = d.rule("L33g", a=a, b=b, c=c)
    s11 = d.mp(s3, s10)
    s12 = d.mp(s6, s11)
    first = _strong(d, s9, s12, a, And(b, c))
    # the same with b and c exchanged
    t7 = d.axiom("A2", a=a, b=c, c=b)
    t8 = d.mp(s5, t7)
    t9 = d.mp(s2, t8)
    t10 = d.rule("L33g", a=a, b=c, c=b)
    t11 = d.mp(s6, t10)
    t12 = d.mp(s3, t11)
    second = _strong(d, t9, t12, a, And(c, b))
    return first, second


@rule("L33i", ("a ==> (b | c)", "a ==> (c | b)"), premises=["a ==> b"])
def l33i(d, p, *, a, b, c):
    s2 = d.rule("L31c", p, a=a, b=b)
    s5 = d.rule("L31c", p, a=a, b=b, variant=2)
    s3 = d.axiom("A5", a=b, b=c)
    s4 = d.trans(s2, s3)
    s6 = d.axiom("A7", a=b, b=c)
    s7 = d.trans(s6, s5)
    first = _strong(d, s4, s7, a, Or(b, c))
    t3 = d.axiom("A6", a=c, b=b)
    t4 = d.trans(s2, t3)
    t6 = d.axiom("A8", a=c, b=b)
    t7 = d.trans(t6, s5)
    second = _strong(d, t4, t7, a, Or(c, b))
    return first, second


@rule("L33j", ("(a & c) ==> b", "(c & a) ==> b"), premises=["a ==> b"])
def l33j(d, p, *, a, b, c):
    left = d.rule("L31i", a=a, b=c)
    right = d.rule("L31i", a=c, b=a, variant=2)
    return (d.rule("L31l", left, p, a=And(a, c), b=a, c=b),
            d.rule("L31l", right, p, a=And(c, a), b=a, c=b))


@rule("L33k", "(a & c) ==> (b & c)", extra=["a ==> b"])
def l33k(d, h, *, a, b, c):
    s2 = d.rule("L31c", h, a=a, b=b)
    s3 = d.rule("L31i", a=a, b=c)
    s4 = d.rule("L31l", s3, h, a=And(a, c), b=a, c=b)
    s5 = d.rule("L31n", s2, a=a, b=b, c=c, variant=2)
    s6 = d.rule("L31c", s4, a=And(a, c), b=b, variant=2)
    s7 = d.rule("L31e", a=a, b=c)
    s8 = d.rule("L33g", a=And(a, c), b=b, c=c)
    s9 = d.mp(s6, s8)
    s10 = d.mp(s7, s9)
    return _strong(d, s5, s10, And(a, c), And(b, c))


@rule("L33l", "(c & a) ==> (c & b)", extra=["a ==> b"])
def l33l(d, h, *, a, b, c):
    s1 = d.rule("L31i", a=c, b=a, variant=2)
    s3 = d.rule("L31c", h, a=a, b=b)
    s4 = d.rule("L31l", s1, h, a=And(c, a), b=a, c=b)
    s5 = d.rule("L31n", s3, a=a, b=b, c=c)
    s6 = d.rule("L31c", s4, a=And(c, a), b=b, variant=2)
    s7 = d.rule("L31d", a=c, b=a)
    s8 = d.rule("L33g", a=And(c, a), b=c, c=b)
    s9 = d.mp(s7, s8)
    s10 = d.mp(s6, s9)
    return _strong(d, s5, s10, And(c, a), And(c, b))


@rule("L33m", "(a & c) ==> (b & t)", extra=["a ==> b", "c ==> t"])
def l33m(d, h1, h2, *, a, b, c, t):
    s1 = d.rule("L33k", h1, a=a, b=b, c=c)
    s2 = d.rule("L33l", h2, a=c, b=t, c=b)
    return d.rule("L31l", s1, s2, a=And(a, c), b=And(b, c), c=And(b, t))


@rule("L33n", "~(a => b) => (a & ~b)")
def l33n(d, *, a, b):
    s2 = d.axiom("A20", a=a, b=And(a, b))
    neg_ab, split = N(And(a, b)), Or(N(a), N(b))
    h = d.assume(strimp(neg_ab, split))
    s3 = d.rule("L33l", h, a=neg_ab, b=split, c=a)
    s4 = d.discharge(s3, h)
    s5 = d.axiom("A16", a=a, b=b)
    s6 = d.mp(s5, s4)
    s7 = d.rule("L31c", s6, a=And(a, neg_ab), b=And(a, split))
    s8 = d.trans(s2, s7)
    s9 = d.rule("L31c", d.axiom("A18", a=a, b=N(b)), a=And(a, split), b=And(a, impn(a, N(b))))
    s10 = d.trans(s8, s9)
    s11 = d.axiom("A3", a=a, b=impn(a, N(b)))
    s12 = d.trans(s10, s11)
    hn = d.assume(N(impn(a, b)))
    s13 = d.mp(hn, s12)
    s14 = d.axiom("A4", a=a, b=impn(a, N(b)))
    s15 = d.trans(s10, s14)
    s16 = d.mp(hn, s15)
    s17 = d.mp(s13, s16)
    s18 = d.rule("L31h", s13, s17, a=a, b=N(b))
    return d.discharge(s18, hn)


@rule("L33o", "(a & ~a) => b")
def l33o(d, *, a, b):
    ha = d.assume(a)
    hn = d.assume(N(a))
    s2 = d.axiom("A5", a=N(a), b=b)
    s3 = d.mp(hn, s2)
    s5 = d.rule("L31h", ha, s3, a=a, b=Or(N(a), b))
    s6 = d.rule("L31c", d.axiom("A18", a=a, b=b), a=And(a, Or(N(a), b)), b=And(a, impn(a, b)))
    s7 = d.mp(s5, s6)
    s8 = d.axiom("A4", a=a, b=impn(a, b))
    s9 = d.mp(s7, s8)
    s10 = d.mp(ha, s9)
    s11 = d.discharge(s10, hn)
    s12 = d.discharge(s11, ha)
    s13 = d.rule("L31c", d.axiom("A19", a=a, b=N(a), c=b), a=impn(a, impn(N(a), b)),
                 b=impn(And(a, N(a)), b))
    return d.mp(s12, s13)


@rule("L33p", "(a & ~a) ==> (b | ~b)")
def l33p(d, *, a, b):
    left, right = And(N(b), _nn(b)), N(Or(b, N(b)))
    s1 = d.rule("L33a", a=b, b=N(b))
    s2 = d.axiom("A4", a=impn(left, right), b=impn(right, left))
    s3 = d.mp(s1, s2)
    s4 = d.rule("L33o", a=N(b), b=N(And(a, N(a))))
    s5 = d.trans(s3, s4)
    s6 = d.rule("L33o", a=a, b=Or(b, N(b)))
    return _strong(d, s6, s5, And(a, N(a)), Or(b, N(b)))


@rule("L33q", "(a => b) => ((b => a) => (~(b -> c) => ~(a -> c)))")
def l33q(d, *, a, b, c):
    h1 = d.assume(impn(a, b))
    h2 = d.assume(impn(b, a))
    h3 = d.assume(b)
    s3 = d.mp(h3, h2)
    s4 = d.rule("L31a", s3, a=a, b=N(c))
    s5 = d.discharge(s4, h3)
    s6 = d.rule("L31c", d.axiom("A19", a=b, b=N(c), c=a), a=impn(b, impn(N(c), a)),
                b=impn(And(b, N(c)), a))
    s7 = d.mp(s5, s6)
    s8 = d.axiom("A4", a=b, b=N(c))
    s9 = d.meet(s7, s8)
    s10 = d.axiom("A20", a=b, b=c)
    s11 = d.trans(s10, s9)
    s12 = d.axiom("A21", a=a, b=c)
    s13 = d.trans(s11, s12)
    s14 = d.discharge(s13, h2)
    return d.discharge(s14, h1)


@rule("L33r", "(~a => ~b) => ((~b => ~a) => (~(c -> a) => ~(c -> b)))")
def l33r(d, *, a, b, c):
    h1 = d.assume(impn(N(a), N(b)))
    h2 = d.assume(impn(N(b), N(a)))
    s2 = d.rule("L31a", h1, a=impn(N(a), N(b)), b=c)
    s3 = d.rule("L31c", d.axiom("A19", a=c, b=N(a), c=N(b)), a=impn(c, impn(N(a), N(b))),
                b=impn(And(c, N(a)), N(b)))
    s4 = d.mp(s2, s3)
    s5 = d.axiom("A3", a=c, b=N(a))
    s6 = d.meet(s5, s4)
    s7 = d.axiom("A20", a=c, b=a)
    s8 = d.trans(s7, s6)
    s9 = d.axiom("A21", a=c, b=b)
    s10 = d.trans(s8, s9)
    s11 = d.discharge(s10, h2)
    return d.discharge(s11, h1)


@rule("L33s", "(a -> c) ==> (b -> t)",
      extra=["a ==> b", "b ==> a", "c ==> t", "t ==> c"])
def l33s(d, h_ab, h_ba, h_ct, h_tc, *, a, b, c, t):
    s2 = d.rule("L31c", h_ab, a=a, b=b)
    d.rule("L31c", h_ab, a=a, b=b, variant=2)  # stated in the original argument, never used
    s5 = d.rule("L31c", h_ba, a=b, b=a)
    d.rule("L31c", h_ba, a=b, b=a, variant=2)  # stated in the original argument, never used
    s7 = d.axiom("A13", a=a, b=b, c=c)
    s8 = d.mp(s2, s7)
    s9 = d.mp(s5, s8)
    s10 = d.rule("L33q", a=a, b=b, c=c)
    s11 = d.mp(s2, s10)
    s12 = d.mp(s5, s11)
    s13 = _strong(d, s9, s12, Imp(a, c), Imp(b, c))
    s15 = d.rule("L31c", h_ct, a=c, b=t)
    s16 = d.rule("L31c", h_ct, a=c, b=t, variant=2)
    s18 = d.rule("L31c", h_tc, a=t, b=c)
    s19 = d.rule("L31c", h_tc, a=t, b=c, variant=2)
    s20 = d.axiom("A14", a=c, b=t, c=b)
    s21 = d.mp(s15, s20)
    s22 = d.mp(s18, s21)
    s23 = d.rule("L33r", a=t, b=c, c=b)
    s24 = d.mp(s16, s23)
    s25 = d.mp(s19, s24)
    s26 = _strong(d, s22, s25, Imp(b, c), Imp(b, t))
    return d.rule("L31l", s13, s26, a=Imp(a, c), b=Imp(b, c), c=Imp(b, t))


@rule("L33t", "b ==> a", extra=["a"])
def l33t(d, h, *, a, b):
    s1 = d.axiom("A15", a=a, b=b, c=a)
    s2 = d.rule("L31c", s1, a=impn(And(a, b), a), b=impn(a, impn(b, a)))
    s3 = d.axiom("A3", a=a, b=b)
    s4 = d.mp(s3, s2)
    s6 = d.mp(h, s4)
    s7 = d.axiom("A15", a=a, b=N(a), c=N(b))
    s8 = d.rule("L31c", s7, a=impn(And(a, N(a)), N(b)), b=impn(a, impn(N(a), N(b))))
    s9 = d.rule("L33o", a=a, b=N(b))
    s10 = d.mp(s9, s8)
    s11 = d.mp(h, s10)
    return _strong(d, s6, s11, b, a)
