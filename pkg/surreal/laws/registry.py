"""
Registered algebraic and order laws.

Each law is a predicate over a tuple of corpus elements, registered with
``@law`` together with its arity, the statement it checks and the corpus it
is designed for. Predicates receive a ``LawContext`` first, giving access
to the arena and to the whole corpus (for laws that quantify over it).

Laws over difference pairs use the ``DIFF_PAIRS`` domain: their elements are
every ordered pair ``(a, b)`` of a positive corpus.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List

from surreal.core.arena import Arena, NodeId, options_match
from surreal.core.arithmetic import (
    add,
    add_diff,
    canonicalize,
    from_diff,
    mul,
    mul_conway,
    mul_diff,
    mul_pos,
    neg,
    sub,
    to_diff,
)
from surreal.core.dyadic import ONE, dy_add, dy_mul, dy_neg, from_dyadic, value
from surreal.laws.corpus import Corpus, CorpusFilter
from surreal.tree.signexp import decode, encode, seq_lt

ALL = CorpusFilter.ALL
POSITIVE = CorpusFilter.POSITIVE
NONNEGATIVE = CorpusFilter.NONNEGATIVE


class Domain(Enum):
    NODES = "nodes"
    DIFF_PAIRS = "diff_pairs"


@dataclass
class LawContext:
    """What a predicate may look at besides its arguments."""
    arena: Arena
    corpus: Corpus
    _derived: Dict[tuple, bool] = field(default_factory=dict)

    @property
    def zero(self) -> NodeId:
        return self.arena.zero

    def one(self) -> NodeId:
        return from_dyadic(self.arena, ONE)

    def derived_leq(self, a: NodeId, b: NodeId) -> bool:
        """``a <= b`` defined through <: every c below a is below b, every c above b is above a."""
        key = (a, b)
        cached = self._derived.get(key)
        if cached is None:
            lt = self.arena.lt
            cached = all(
                (not lt(c, a) or lt(c, b)) and (not lt(b, c) or lt(a, c))
                for c in self.corpus.nodes
            )
            self._derived[key] = cached
        return cached


Predicate = Callable[..., bool]


@dataclass(frozen=True)
class LawSpec:
    """A named, corpus-parameterized proposition."""
    name: str
    arity: int
    predicate: Predicate = field(compare=False)
    statement: str
    filter: CorpusFilter = ALL
    max_day: int = 3
    domain: Domain = Domain.NODES

    def __post_init__(self):
        if not 1 <= self.arity <= 3:
            raise ValueError(f"Law {self.name}: arity must be 1..3, got {self.arity}")


_REGISTRY: Dict[str, LawSpec] = {}


def law(
    name: str,
    arity: int,
    statement: str,
    filter: CorpusFilter = ALL,
    max_day: int = 3,
    domain: Domain = Domain.NODES,
):
    """Register the decorated predicate as a law."""
    def register(predicate: Predicate) -> Predicate:
        if name in _REGISTRY:
            raise ValueError(f"Law {name} registered twice")
        _REGISTRY[name] = LawSpec(name, arity, predicate, statement, filter, max_day, domain)
        return predicate
    return register


def get_law(name: str) -> LawSpec:
    """
    Raises:
        KeyError: If no law has that name
    """
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"Unknown law: {name}") from None


def registered_laws() -> List[LawSpec]:
    """All laws in registration order."""
    return list(_REGISTRY.values())


def _implies(premise: bool, conclusion: Callable[[], bool]) -> bool:
    return (not premise) or conclusion()


###############################################################################
# Ordered set
###############################################################################
@law("LT_IRREFLEXIVE", 1, "not x < x", max_day=4)
def _lt_irreflexive(ctx, x):
    return not ctx.arena.lt(x, x)


@law("LT_ASYMMETRIC", 2, "x < y implies not y < x", max_day=4)
def _lt_asymmetric(ctx, x, y):
    return _implies(ctx.arena.lt(x, y), lambda: not ctx.arena.lt(y, x))


@law("COTRANS_LT", 3, "x < y implies x < z or z < y", max_day=4)
def _cotrans_lt(ctx, x, y, z):
    lt = ctx.arena.lt
    return _implies(lt(x, y), lambda: lt(x, z) or lt(z, y))


@law("LT_TRANSITIVE", 3, "x < y and y < z imply x < z", max_day=4)
def _lt_transitive(ctx, x, y, z):
    lt = ctx.arena.lt
    return _implies(lt(x, y) and lt(y, z), lambda: lt(x, z))


@law("LT_NEGATIVE_ANTISYMMETRY", 2, "not x < y and not y < x imply x = y", max_day=4)
def _negative_antisymmetry(ctx, x, y):
    lt = ctx.arena.lt
    return _implies(not lt(x, y) and not lt(y, x), lambda: ctx.arena.eq(x, y))


@law("OPTION_SANDWICH", 2, "each left option of x+y is below x+y, each right option above")
def _option_sandwich(ctx, x, y):
    arena = ctx.arena
    s = add(arena, x, y)
    node = arena.node(s)
    return all(arena.lt(l, s) for l in node.left) and all(arena.lt(s, r) for r in node.right)


@law("OPTION_CRITERION", 2, "replacing every option of x+y by an equal option gives an equal number")
def _option_criterion(ctx, x, y):
    arena = ctx.arena
    s = add(arena, x, y)
    node = arena.node(s)
    t = arena.make(
        [canonicalize(arena, l) for l in node.left],
        [canonicalize(arena, r) for r in node.right],
    )
    return options_match(arena, s, t) and arena.eq(s, t)


@law("LEQ_DERIVED_AGREES", 2, "x <= y iff every c < x has c < y and every c > y has c > x", max_day=4)
def _leq_derived_agrees(ctx, x, y):
    return ctx.arena.leq(x, y) == ctx.derived_leq(x, y)


@law("DERIVED_LEQ_1", 3, "a < b <= c implies a < c", max_day=4)
def _derived_leq_1(ctx, a, b, c):
    lt = ctx.arena.lt
    return _implies(lt(a, b) and ctx.derived_leq(b, c), lambda: lt(a, c))


@law("DERIVED_LEQ_2", 3, "a <= b < c implies a < c", max_day=4)
def _derived_leq_2(ctx, a, b, c):
    lt = ctx.arena.lt
    return _implies(ctx.derived_leq(a, b) and lt(b, c), lambda: lt(a, c))


@law("DERIVED_LEQ_3", 3, "a <= b <= c implies a <= c", max_day=4)
def _derived_leq_3(ctx, a, b, c):
    d = ctx.derived_leq
    return _implies(d(a, b) and d(b, c), lambda: d(a, c))


@law("DERIVED_LEQ_4", 3, "a <= b implies a + c <= b + c", max_day=4)
def _derived_leq_4(ctx, a, b, c):
    arena = ctx.arena
    return _implies(ctx.derived_leq(a, b), lambda: ctx.derived_leq(add(arena, a, c), add(arena, b, c)))


@law("DERIVED_LEQ_5", 2, "0 <= a and 0 <= b imply 0 <= a + b", max_day=4)
def _derived_leq_5(ctx, a, b):
    d, zero = ctx.derived_leq, ctx.zero
    return _implies(d(zero, a) and d(zero, b), lambda: d(zero, add(ctx.arena, a, b)))


@law("DERIVED_LEQ_6", 2, "0 < a and 0 <= b imply 0 < a + b", max_day=4)
def _derived_leq_6(ctx, a, b):
    arena, zero = ctx.arena, ctx.zero
    return _implies(arena.lt(zero, a) and ctx.derived_leq(zero, b), lambda: arena.lt(zero, add(arena, a, b)))


###############################################################################
# Ordered abelian group
###############################################################################
@law("ADD_IDENTITY", 1, "x + 0 = x", max_day=4)
def _add_identity(ctx, x):
    return ctx.arena.eq(add(ctx.arena, x, ctx.zero), x)


@law("ADD_INVERSE", 1, "x - x = 0", max_day=4)
def _add_inverse(ctx, x):
    return ctx.arena.eq(sub(ctx.arena, x, x), ctx.zero)


@law("ADD_ASSOC", 3, "x + (y + z) = (x + y) + z")
def _add_assoc(ctx, x, y, z):
    arena = ctx.arena
    return arena.eq(add(arena, x, add(arena, y, z)), add(arena, add(arena, x, y), z))


@law("ADD_COMM", 2, "x + y = y + x", max_day=4)
def _add_comm(ctx, x, y):
    arena = ctx.arena
    return arena.eq(add(arena, x, y), add(arena, y, x))


@law("NEG_INVOLUTION", 1, "-(-x) = x", max_day=4)
def _neg_involution(ctx, x):
    arena = ctx.arena
    return arena.eq(neg(arena, neg(arena, x)), x)


@law("ADD_MONOTONE", 3, "x < y implies x + z < y + z and z + x < z + y", max_day=4)
def _add_monotone(ctx, x, y, z):
    arena = ctx.arena
    return _implies(
        arena.lt(x, y),
        lambda: arena.lt(add(arena, x, z), add(arena, y, z)) and arena.lt(add(arena, z, x), add(arena, z, y)),
    )


@law("NEG_REVERSES", 2, "x < y implies -y < -x", max_day=4)
def _neg_reverses(ctx, x, y):
    arena = ctx.arena
    return _implies(arena.lt(x, y), lambda: arena.lt(neg(arena, y), neg(arena, x)))


@law("POS_SUM", 2, "0 < x and 0 < y imply 0 < x + y", max_day=4)
def _pos_sum(ctx, x, y):
    arena, zero = ctx.arena, ctx.zero
    return _implies(arena.lt(zero, x) and arena.lt(zero, y), lambda: arena.lt(zero, add(arena, x, y)))


@law("SUM_MONOTONE", 3, "x < x' and y < y' imply x + y < x' + y' (y' over the corpus)", max_day=4)
def _sum_monotone(ctx, x, x2, y):
    arena = ctx.arena
    if not arena.lt(x, x2):
        return True
    left = add(arena, x, y)
    return all(
        arena.lt(left, add(arena, x2, y2))
        for y2 in ctx.corpus.nodes
        if arena.lt(y, y2)
    )


@law("BELOW_DIFFERENCE", 3, "0 < x < y < z implies y - z < x", max_day=4)
def _below_difference(ctx, x, y, z):
    arena = ctx.arena
    lt = arena.lt
    return _implies(lt(ctx.zero, x) and lt(x, y) and lt(y, z), lambda: lt(sub(arena, y, z), x))


@law(
    "CROSS_SUM", 3,
    "a < b, b' < a' and a' - b' < b - a imply a + a' < b + b' (b' over the corpus)",
    max_day=4,
)
def _cross_sum(ctx, a, b, a2):
    arena = ctx.arena
    lt = arena.lt
    if not lt(a, b):
        return True
    gap = canonicalize(arena, sub(arena, b, a))
    for b2 in ctx.corpus.nodes:
        if not lt(b2, a2):
            continue
        if not lt(canonicalize(arena, sub(arena, a2, b2)), gap):
            continue
        if not lt(add(arena, a, a2), add(arena, b, b2)):
            return False
    return True


@law("NEG_DIFFERENCE", 2, "-(a - b) = -a + b", max_day=4)
def _neg_difference(ctx, a, b):
    arena = ctx.arena
    return arena.eq(neg(arena, sub(arena, a, b)), add(arena, neg(arena, a), b))


###############################################################################
# Products of positive numbers
###############################################################################
@law("MUL_POS_POSITIVE", 2, "0 < x and 0 < y imply 0 < xy", filter=POSITIVE)
def _mul_pos_positive(ctx, x, y):
    return ctx.arena.lt(ctx.zero, mul_pos(ctx.arena, x, y))


@law("MUL_POS_CUT", 2, "each left option of xy is below xy and each right option above", filter=POSITIVE)
def _mul_pos_cut(ctx, x, y):
    arena = ctx.arena
    p = mul_pos(arena, x, y)
    node = arena.node(p)
    return all(arena.lt(l, p) for l in node.left) and all(arena.lt(p, r) for r in node.right)


@law("MUL_POS_OPTIONS_ORDERED", 2, "every left option of xy is below every right option of xy", filter=POSITIVE)
def _mul_pos_options_ordered(ctx, x, y):
    arena = ctx.arena
    node = arena.node(mul_pos(arena, x, y))
    return all(arena.lt(l, r) for l in node.left for r in node.right)


@law(
    "MUL_POS_MONOTONE", 3,
    "y < y' implies xy < xy' and yx < y'x; y <= y' implies xy <= xy' and yx <= y'x",
    filter=POSITIVE,
)
def _mul_pos_monotone(ctx, x, y, y2):
    arena = ctx.arena
    right_small, right_large = mul_pos(arena, x, y), mul_pos(arena, x, y2)
    left_small, left_large = mul_pos(arena, y, x), mul_pos(arena, y2, x)
    strict = _implies(
        arena.lt(y, y2),
        lambda: arena.lt(right_small, right_large) and arena.lt(left_small, left_large),
    )
    weak = _implies(
        arena.leq(y, y2),
        lambda: arena.leq(right_small, right_large) and arena.leq(left_small, left_large),
    )
    return strict and weak


@law("DIST_POS", 3, "x(y + z) = xy + xz on positive numbers", filter=POSITIVE)
def _dist_pos(ctx, x, y, z):
    arena = ctx.arena
    lhs = mul_pos(arena, x, add(arena, y, z))
    rhs = add(arena, mul_pos(arena, x, y), mul_pos(arena, x, z))
    return arena.eq(lhs, rhs)


@law(
    "DIST_OPTIONS", 3,
    "for every option o of x: o(z + z') = oz + oz', and o(z - z') = oz - oz' when z' < z",
    filter=POSITIVE, max_day=2,
)
def _dist_options(ctx, x, z, z2):
    arena = ctx.arena
    node = arena.node(canonicalize(arena, x))
    for o in node.options:
        if not arena.eq(
            mul_pos(arena, o, add(arena, z, z2)),
            add(arena, mul_pos(arena, o, z), mul_pos(arena, o, z2)),
        ):
            return False
        if arena.lt(z2, z) and not arena.eq(
            mul_pos(arena, o, sub(arena, z, z2)),
            sub(arena, mul_pos(arena, o, z), mul_pos(arena, o, z2)),
        ):
            return False
    return True


@law("MUL_POS_IDENTITY", 1, "x1 = x", filter=POSITIVE, max_day=4)
def _mul_pos_identity(ctx, x):
    return ctx.arena.eq(mul_pos(ctx.arena, x, ctx.one()), x)


@law("MUL_POS_ZERO", 1, "x0 = 0 for 0 <= x", filter=NONNEGATIVE, max_day=4)
def _mul_pos_zero(ctx, x):
    return ctx.arena.eq(mul_pos(ctx.arena, x, ctx.zero), ctx.zero)


@law("MUL_POS_COMM", 2, "xy = yx on positive numbers", filter=POSITIVE)
def _mul_pos_comm(ctx, x, y):
    arena = ctx.arena
    return arena.eq(mul_pos(arena, x, y), mul_pos(arena, y, x))


@law("MUL_POS_ASSOC", 3, "x(yz) = (xy)z on positive numbers", filter=POSITIVE)
def _mul_pos_assoc(ctx, x, y, z):
    arena = ctx.arena
    return arena.eq(mul_pos(arena, x, mul_pos(arena, y, z)), mul_pos(arena, mul_pos(arena, x, y), z))


###############################################################################
# Difference pairs
###############################################################################
@law("DIFF_ROUNDTRIP", 1, "from_diff(to_diff(x)) = x", max_day=5)
def _diff_roundtrip(ctx, x):
    arena = ctx.arena
    return arena.eq(from_diff(arena, to_diff(arena, x)), x)


@law("DIFF_TO_ADDITIVE", 2, "to_diff(x) + to_diff(y) and to_diff(x + y) denote the same number")
def _diff_to_additive(ctx, x, y):
    arena = ctx.arena
    summed = add_diff(arena, to_diff(arena, x), to_diff(arena, y))
    direct = to_diff(arena, add(arena, x, y))
    return arena.eq(from_diff(arena, summed), from_diff(arena, direct))


@law("DIFF_FROM_ADDITIVE", 2, "from_diff(p + q) = from_diff(p) + from_diff(q)",
     filter=POSITIVE, max_day=2, domain=Domain.DIFF_PAIRS)
def _diff_from_additive(ctx, p, q):
    arena = ctx.arena
    return arena.eq(
        from_diff(arena, add_diff(arena, p, q)),
        add(arena, from_diff(arena, p), from_diff(arena, q)),
    )


@law("DIFF_MUL_HOMOMORPHISM", 2, "from_diff(p * q) = from_diff(p) * from_diff(q)",
     filter=POSITIVE, max_day=2, domain=Domain.DIFF_PAIRS)
def _diff_mul_homomorphism(ctx, p, q):
    arena = ctx.arena
    return arena.eq(
        from_diff(arena, mul_diff(arena, p, q)),
        mul(arena, from_diff(arena, p), from_diff(arena, q)),
    )


@law("DIFF_MUL_IDENTITY", 1, "(a - b) * 1 = a - b", filter=POSITIVE, max_day=2, domain=Domain.DIFF_PAIRS)
def _diff_mul_identity(ctx, p):
    arena = ctx.arena
    unit = to_diff(arena, ctx.one())
    return arena.eq(from_diff(arena, mul_diff(arena, p, unit)), from_diff(arena, p))


@law("DIFF_MUL_COMM", 2, "p * q = q * p on difference pairs", filter=POSITIVE, max_day=2, domain=Domain.DIFF_PAIRS)
def _diff_mul_comm(ctx, p, q):
    arena = ctx.arena
    return arena.eq(from_diff(arena, mul_diff(arena, p, q)), from_diff(arena, mul_diff(arena, q, p)))


@law("DIFF_MUL_ASSOC", 3, "p * (q * r) = (p * q) * r on difference pairs",
     filter=POSITIVE, max_day=2, domain=Domain.DIFF_PAIRS)
def _diff_mul_assoc(ctx, p, q, r):
    arena = ctx.arena
    lhs = mul_diff(arena, p, mul_diff(arena, q, r))
    rhs = mul_diff(arena, mul_diff(arena, p, q), r)
    return arena.eq(from_diff(arena, lhs), from_diff(arena, rhs))


@law("DIFF_DIST", 3, "p * (q + r) = p * q + p * r on difference pairs",
     filter=POSITIVE, max_day=2, domain=Domain.DIFF_PAIRS)
def _diff_dist(ctx, p, q, r):
    arena = ctx.arena
    lhs = mul_diff(arena, p, add_diff(arena, q, r))
    rhs = add_diff(arena, mul_diff(arena, p, q), mul_diff(arena, p, r))
    return arena.eq(from_diff(arena, lhs), from_diff(arena, rhs))


###############################################################################
# Ring of all numbers
###############################################################################
@law("MUL_IDENTITY", 1, "x * 1 = x", max_day=4)
def _mul_identity(ctx, x):
    return ctx.arena.eq(mul(ctx.arena, x, ctx.one()), x)


@law("MUL_ZERO", 1, "x * 0 = 0", max_day=4)
def _mul_zero(ctx, x):
    return ctx.arena.eq(mul(ctx.arena, x, ctx.zero), ctx.zero)


@law("MUL_COMM", 2, "x * y = y * x")
def _mul_comm(ctx, x, y):
    arena = ctx.arena
    return arena.eq(mul(arena, x, y), mul(arena, y, x))


@law("MUL_ASSOC", 3, "x * (y * z) = (x * y) * z", max_day=2)
def _mul_assoc(ctx, x, y, z):
    arena = ctx.arena
    return arena.eq(mul(arena, x, mul(arena, y, z)), mul(arena, mul(arena, x, y), z))


@law("MUL_DIST", 3, "x * (y + z) = x * y + x * z", max_day=2)
def _mul_dist(ctx, x, y, z):
    arena = ctx.arena
    return arena.eq(mul(arena, x, add(arena, y, z)), add(arena, mul(arena, x, y), mul(arena, x, z)))


@law("MUL_NEG", 2, "x * (-y) = -(x * y)")
def _mul_neg(ctx, x, y):
    arena = ctx.arena
    return arena.eq(mul(arena, x, neg(arena, y)), neg(arena, mul(arena, x, y)))


###############################################################################
# Apartness
###############################################################################
@law("APART_IRREFLEXIVE", 1, "not x # x", max_day=4)
def _apart_irreflexive(ctx, x):
    return not ctx.arena.apart(x, x)


@law("APART_SYMMETRIC", 2, "x # y implies y # x", max_day=4)
def _apart_symmetric(ctx, x, y):
    apart = ctx.arena.apart
    return _implies(apart(x, y), lambda: apart(y, x))


@law("APART_COTRANSITIVE", 3, "x # y implies x # z or z # y", max_day=4)
def _apart_cotransitive(ctx, x, y, z):
    apart = ctx.arena.apart
    return _implies(apart(x, y), lambda: apart(x, z) or apart(z, y))


###############################################################################
# Oracle and cross-formula agreement
###############################################################################
@law("ORACLE_ORDER", 2, "x < y iff value(x) < value(y), and x = y iff value(x) = value(y)", max_day=4)
def _oracle_order(ctx, x, y):
    arena = ctx.arena
    vx, vy = value(arena, x), value(arena, y)
    return arena.lt(x, y) == (vx < vy) and arena.eq(x, y) == (vx == vy)


@law("ORACLE_ROUNDTRIP", 1, "value(from_dyadic(value(x))) = value(x) and from_dyadic(value(x)) = x", max_day=5)
def _oracle_roundtrip(ctx, x):
    arena = ctx.arena
    v = value(arena, x)
    back = from_dyadic(arena, v)
    return value(arena, back) == v and arena.eq(back, x)


@law("ORACLE_NEG", 1, "value(-x) = -value(x)", max_day=4)
def _oracle_neg(ctx, x):
    arena = ctx.arena
    return value(arena, neg(arena, x)) == dy_neg(value(arena, x))


@law("ORACLE_ADD", 2, "value(x + y) = value(x) + value(y)", max_day=4)
def _oracle_add(ctx, x, y):
    arena = ctx.arena
    return value(arena, add(arena, x, y)) == dy_add(value(arena, x), value(arena, y))


@law("ORACLE_MUL", 2, "value(x * y) = value(x) * value(y)", max_day=4)
def _oracle_mul(ctx, x, y):
    arena = ctx.arena
    return value(arena, mul(arena, x, y)) == dy_mul(value(arena, x), value(arena, y))


@law("CONWAY_AGREEMENT", 2, "mul_pos(x, y) = mul_conway(x, y) on positive numbers", filter=POSITIVE)
def _conway_agreement(ctx, x, y):
    arena = ctx.arena
    return arena.eq(mul_pos(arena, x, y), mul_conway(arena, x, y))


###############################################################################
# Sign expansions
###############################################################################
@law("SIGN_ORDER", 2, "x < y iff sign(x) < sign(y)", max_day=6)
def _sign_order(ctx, x, y):
    arena = ctx.arena
    return arena.lt(x, y) == seq_lt(encode(arena, x), encode(arena, y))


@law("SIGN_ROUNDTRIP", 1, "decode(sign(x)) = x, sign(decode(sign(x))) = sign(x), |sign(x)| = birthday", max_day=6)
def _sign_roundtrip(ctx, x):
    arena = ctx.arena
    seq = encode(arena, x)
    back = decode(arena, seq)
    return (
        arena.eq(back, x)
        and encode(arena, back) == seq
        and len(seq) == arena.birthday(canonicalize(arena, x))
    )


@law("SIGN_COTRANSITIVE", 3, "s < t implies s < w or w < t on sign expansions")
def _sign_cotransitive(ctx, x, y, z):
    arena = ctx.arena
    s, t, w = encode(arena, x), encode(arena, y), encode(arena, z)
    return _implies(seq_lt(s, t), lambda: seq_lt(s, w) or seq_lt(w, t))
