"""Named example algebras shared by the CLI and the test-suite."""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import CycScalar, Matrix, zeta
from .hopf import HopfData, PairElement
from .superalg import GroupTable, group_algebra, supergroup_algebra, yd_biproduct
from .triangular import r_u, sweedler
from .twist import exp_twist, sweedler_j


@dataclass
class SuperMember:
    """A supergroup algebra with its parity-defining grouplike g (g x g^-1 = -x on V)."""

    name: str
    hopf: HopfData
    group: GroupTable
    n: int
    action: list
    g: int  # group element index; its basis index in the algebra is the same


@dataclass
class TriangularMember:
    """An ordinary triangular Hopf algebra with an involutive grouplike u equal to its Drinfeld element."""

    name: str
    hopf: HopfData
    r: PairElement
    u: dict
    twist: PairElement | None = None
    extra: dict = field(default_factory=dict)


def _diag(signs, order=1):
    one = CycScalar.one(order)
    zero = CycScalar.zero(order)
    n = len(signs)
    return Matrix([[one * signs[i] if i == j else zero for j in range(n)] for i in range(n)], order, cols=n)


def supergroup_corpus(max_n: int = 3) -> list[SuperMember]:
    """C[G] semidirect Lambda V for G in {Z2, Z4, Z2xZ2}, dim V <= max_n."""
    out = []
    for n in range(max_n + 1):
        Z2 = GroupTable.cyclic(2)
        act = [_diag([-1] * n)]
        out.append(SuperMember(f"Z2-n{n}", supergroup_algebra(Z2, n, act), Z2, n, act, 1))

        Z4 = GroupTable.cyclic(4)
        i = zeta(4)
        act = [Matrix([[i if a == b else CycScalar.zero(4) for b in range(n)] for a in range(n)], 4, cols=n)]
        out.append(SuperMember(f"Z4-n{n}", supergroup_algebra(Z4, n, act, 4), Z4, n, act, 2))

        K = GroupTable.from_spec("Z2xZ2")
        act = [_diag([-1] * n), _diag([(-1) ** j for j in range(n)])]
        out.append(SuperMember(f"Z2xZ2-n{n}", supergroup_algebra(K, n, act), K, n, act, K.generators[0]))
    return out


def lambda_twist(H: HopfData, group: GroupTable, n: int, r) -> PairElement:
    """e^{r/2} on Lambda V, placed inside C[G] semidirect Lambda V (x_S sits at index |G| * S_idx)."""
    from .superalg import exterior_hopf

    m = group.order
    E = exterior_hopf(n, H.order)
    J = exp_twist(E, r)
    e = group.identity
    return PairElement(H.dim, {(i * m + e, j * m + e): c for (i, j), c in J.coeffs.items()}, H.order)


def exterior_twist_in(member: SuperMember, r) -> PairElement:
    return lambda_twist(member.hopf, member.group, member.n, r)


def yd_corpus() -> list[tuple[str, HopfData, int, GroupTable, int]]:
    """(name, biproduct, index of the common g_i, group, N) with dims 4, 8, 16."""
    Z2 = GroupTable.cyclic(2)
    Z4 = GroupTable.cyclic(4)
    K = GroupTable.from_spec("Z2xZ2")
    a, b = K.generators
    i = zeta(4)
    return [
        ("yd-Z2-1", yd_biproduct(Z2, [1], [[-1]]), 1, Z2, 1),
        ("yd-Z2-2", yd_biproduct(Z2, [1, 1], [[-1], [-1]]), 1, Z2, 2),
        ("yd-Z2-3", yd_biproduct(Z2, [1, 1, 1], [[-1], [-1], [-1]]), 1, Z2, 3),
        ("yd-Z4-1", yd_biproduct(Z4, [2], [[i]], 4), 2, Z4, 1),
        ("yd-Z4-2", yd_biproduct(Z4, [2, 2], [[i], [-i]], 4), 2, Z4, 2),
        ("yd-Z2xZ2-1", yd_biproduct(K, [a], [[-1, 1]]), a, K, 1),
        ("yd-Z2xZ2-2", yd_biproduct(K, [a, a], [[-1, 1], [-1, -1]]), a, K, 2),
    ]


def triangular_corpus() -> list[TriangularMember]:
    out = []
    C2 = group_algebra(GroupTable.cyclic(2))
    u = {1: CycScalar.one()}
    out.append(TriangularMember("C[Z2]", C2, r_u(C2, u), u))
    for lam in (0, 1, -2, CycScalar.rational("3/5")):
        T = sweedler(lam)
        out.append(TriangularMember(f"sweedler({lam})", T.hopf, T.r, {1: CycScalar.one()},
                                    twist=sweedler_j(lam), extra={"lambda": lam}))
    for name, H, g, G, n in yd_corpus():
        ug = {g: CycScalar.one(H.order)}
        out.append(TriangularMember(name, H, r_u(H, ug), ug, extra={"group": G, "n": n}))
    return out


def rep_z2_fusion():
    from .catdim import FusionRingData

    return FusionRingData(2, 0, (((1, 0), (0, 1)), ((0, 1), (1, 0))))


EXAMPLE_NAMES = ("sweedler", "group", "exterior", "supergroup", "yd-biproduct", "ru")
