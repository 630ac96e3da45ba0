"""Kleinian groups: generator matrices, element enumeration, one-dimensional characters.

Every element and character value lives in Q(zeta_120).  Character values are
kept internally as exponents k of zeta_120^k since all of them are roots of
unity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .cyclo import CMat2, Cyclo, N, eigenvalue_exponent, root_of_unity, sqrt2, sqrt5, zeta

GROUP_NAMES = ("c2", "c4", "c6", "c10", "q8", "q12", "q24", "t", "o", "i")


class GroupError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class GroupId:
    """``family`` is one of C, Q, T, O, I; ``n`` is the group order for C and Q."""

    family: str
    n: int = 0

    @property
    def order(self) -> int:
        if self.family in ("C", "Q"):
            return self.n
        return {"T": 24, "O": 48, "I": 120}[self.family]

    @property
    def name(self) -> str:
        if self.family in ("C", "Q"):
            return f"{self.family.lower()}{self.n}"
        return self.family.lower()

    @property
    def pqr(self) -> tuple[int, int, int] | None:
        """(p, q, r) of the presentation <S,T,U | S^p = T^q = U^r = STU>; None for cyclic."""
        if self.family == "Q":
            return (self.n // 4, 2, 2)
        return {"T": (3, 3, 2), "O": (4, 3, 2), "I": (5, 3, 2)}.get(self.family)

    def __str__(self):
        return self.name

    @classmethod
    def parse(cls, name: str) -> "GroupId":
        s = name.strip().lower()
        if s in ("t", "o", "i"):
            return cls(s.upper())
        if s[:1] in ("c", "q") and s[1:].isdigit():
            gid = cls(s[0].upper(), int(s[1:]))
            _validate(gid)
            return gid
        raise GroupError(f"unknown group {name!r}; valid names: {' '.join(GROUP_NAMES)}")


def _validate(gid: GroupId) -> None:
    if gid.family == "C" and (gid.n < 2 or N % gid.n):
        raise GroupError(f"cyclic group order must divide {N}: {gid.n}")
    if gid.family == "Q" and (gid.n % 4 or gid.n < 8 or N % (gid.n // 2)):
        raise GroupError(f"unsupported quaternionic order {gid.n}")


def cyclic(n: int) -> GroupId:
    return GroupId.parse(f"c{n}")


def quaternionic(order: int) -> GroupId:
    return GroupId.parse(f"q{order}")


BINARY_TETRAHEDRAL = GroupId("T")
BINARY_OCTAHEDRAL = GroupId("O")
BINARY_ICOSAHEDRAL = GroupId("I")


@dataclass(frozen=True, order=True)
class CharId:
    """One-dimensional character.

    tags: ``trivial``, ``power`` (chi^power for cyclic groups and the binary
    tetrahedral group), ``chi0``, ``chi+``, ``chi-`` (quaternionic), ``oct``
    (the sign character of the binary octahedral group).
    """

    tag: str
    power: int = 0

    @property
    def name(self) -> str:
        if self.tag == "trivial":
            return "1"
        if self.tag == "power":
            return "chi" if self.power == 1 else f"chi^{self.power}"
        if self.tag == "oct":
            return "chi"
        return self.tag

    def __str__(self):
        return self.name


TRIVIAL = CharId("trivial")
CHI0 = CharId("chi0")
CHI_PLUS = CharId("chi+")
CHI_MINUS = CharId("chi-")
OCT_CHI = CharId("oct")


def power(m: int) -> CharId:
    return CharId("power", m)


def characters(gid: GroupId) -> list[CharId]:
    if gid.family == "C":
        return [TRIVIAL] + [power(m) for m in range(1, gid.n)]
    if gid.family == "Q":
        return [TRIVIAL, CHI0, CHI_PLUS, CHI_MINUS]
    if gid.family == "T":
        return [TRIVIAL, power(1), power(2)]
    if gid.family == "O":
        return [TRIVIAL, OCT_CHI]
    return [TRIVIAL]


def parse_char(gid: GroupId, text: str) -> CharId:
    s = text.strip().lower().replace("χ", "chi").replace("₀", "0").replace(" ", "")
    valid = characters(gid)
    cand = None
    if s in ("1", "triv", "trivial"):
        cand = TRIVIAL
    elif s in ("chi0", "chi+", "chi-"):
        cand = CharId(s)
    elif s == "chi":
        cand = OCT_CHI if gid.family == "O" else power(1)
    elif s.startswith("chi^") and s[4:].isdigit():
        m = int(s[4:])
        cand = TRIVIAL if m == 0 else power(m)
    if cand not in valid:
        names = " ".join(c.name for c in valid)
        raise GroupError(f"unknown character {text!r} for {gid}; valid: {names}")
    return cand


# --------------------------------------------------------------------------
# generators
# --------------------------------------------------------------------------

U_MATRIX = CMat2(0, 1, -1, 0)
MINUS_I = CMat2(-1, 0, 0, -1)


def generator_s(gid: GroupId) -> CMat2:
    """The generator S (non-abelian) or T (cyclic) of the catalog."""
    if gid.family == "C":
        z = zeta(gid.n)
        return CMat2.diag(z, z ** -1)
    if gid.family == "Q":
        z = zeta(gid.n // 2)
        return CMat2.diag(z, z ** -1)
    e8 = zeta(8)
    if gid.family == "T":
        return CMat2(e8 ** -1, e8 ** 3, e8, e8).scale(sqrt2().inverse())
    if gid.family == "O":
        return CMat2(1, e8, e8 ** 3, 1).scale(-sqrt2().inverse())
    # binary icosahedral; top-left entry is e5^4 - 1 (see README, generator notes)
    e5 = zeta(5)
    return CMat2(e5 ** 4 - 1, e5 ** 3 - e5, e5 ** 4 - e5 ** 2, e5 - 1).scale(sqrt5().inverse())


def _generator_char_values(gid: GroupId, chi: CharId) -> list[int]:
    """Exponents (of zeta_120) of chi on the BFS generators."""
    if chi == TRIVIAL:
        return [0] if gid.family == "C" else [0, 0]
    if gid.family == "C" and chi.tag == "power":
        return [(N // gid.n) * chi.power % N]
    if gid.family == "Q":
        n = gid.n // 4
        i_n = (30 * n) % N  # exponent of i^n
        s_val, u_val = {
            "chi0": (0, 60),
            "chi+": (60, (60 + i_n) % N),
            "chi-": (60, i_n),
        }[chi.tag]
        return [s_val, u_val]
    if gid.family == "T" and chi.tag == "power":
        return [(40 * chi.power) % N, 0]
    if gid.family == "O" and chi.tag == "oct":
        return [60, 60]
    raise GroupError(f"character {chi} not defined for {gid}")


@dataclass(frozen=True)
class ExtElement:
    """(gamma, w) with w^2 = rho(gamma); ``w_exp`` is the zeta_120 exponent of w."""

    gamma: int
    w: Cyclo
    w_exp: int


@dataclass(frozen=True)
class GroupModel:
    id: GroupId
    elements: tuple
    generators: dict
    eigen_exps: tuple
    char_exps: dict = field(repr=False)
    presentation_u: str = "U"

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, m: CMat2) -> int:
        for i, g in enumerate(self.elements):
            if g == m:
                return i
        raise KeyError("matrix not in group")

    def minus_identity(self) -> int | None:
        try:
            return self.index_of(MINUS_I)
        except KeyError:
            return None


def _presentation(gid: GroupId, s: CMat2) -> tuple[CMat2, str]:
    """Derive T from S^p = T^q = U^r = STU = -I.

    T := S^-1 (-I) U^-1.  If the catalog S, U pair fails the relations, the
    same derivation is retried with U^-1 in place of U (the group generated is
    unchanged since -I = U^2); failing both is an error.
    """
    p, q, r = gid.pqr
    for label, u in (("U", U_MATRIX), ("U^-1", U_MATRIX.inverse())):
        t = s.inverse() @ MINUS_I @ u.inverse()
        if s ** p == MINUS_I and t ** q == MINUS_I and u ** r == MINUS_I and s @ t @ u == MINUS_I:
            return t, label
    raise GroupError(f"generator matrices of {gid} fail the presentation check")


@lru_cache(maxsize=None)
def build_group(gid: GroupId) -> GroupModel:
    """Enumerate the group generated by the catalog generators (breadth-first closure)."""
    if gid.family in ("C", "Q"):
        _validate(gid)
    if gid.family == "C":
        gens = [generator_s(gid)]
        gen_names = ["T"]
    else:
        gens = [generator_s(gid), U_MATRIX]
        gen_names = ["S", "U"]
    chars = characters(gid)
    gen_vals = {chi: _generator_char_values(gid, chi) for chi in chars}

    ident = CMat2.identity()
    elements = [ident]
    index = {ident: 0}
    vals = {chi: [0] for chi in chars}
    frontier = [0]
    while frontier:
        nxt = []
        for gi in frontier:
            g = elements[gi]
            for k, s in enumerate(gens):
                h = g @ s
                hv = {chi: (vals[chi][gi] + gen_vals[chi][k]) % N for chi in chars}
                j = index.get(h)
                if j is None:
                    j = len(elements)
                    elements.append(h)
                    index[h] = j
                    for chi in chars:
                        vals[chi].append(hv[chi])
                    nxt.append(j)
                    if len(elements) > gid.order:
                        raise GroupError(f"closure of {gid} exceeds order {gid.order}")
                else:
                    for chi in chars:
                        if vals[chi][j] != hv[chi]:
                            raise GroupError(f"character {chi} is not well defined on {gid}")
        frontier = nxt
    if len(elements) != gid.order:
        raise GroupError(f"closure of {gid} has {len(elements)} elements, expected {gid.order}")

    generators = {name: index[g] for name, g in zip(gen_names, gens)}
    pres = "U"
    if gid.family != "C":
        t, pres = _presentation(gid, gens[0])
        generators["T"] = index[t]
    eig = tuple(eigenvalue_exponent(g) for g in elements)
    return GroupModel(
        id=gid,
        elements=tuple(elements),
        generators=generators,
        eigen_exps=eig,
        char_exps={chi: tuple(v) for chi, v in vals.items()},
        presentation_u=pres,
    )


def char_exponent(gid: GroupId, chi: CharId, g: int) -> int:
    model = build_group(gid)
    try:
        return model.char_exps[chi][g]
    except KeyError:
        raise GroupError(f"character {chi} not defined for {gid}") from None


def char_value(gid: GroupId, chi: CharId, g: int) -> Cyclo:
    return root_of_unity(char_exponent(gid, chi, g))


def is_even(gid: GroupId, chi: CharId) -> bool:
    model = build_group(gid)
    mi = model.minus_identity()
    return mi is None or model.char_exps[chi][mi] == 0


def extended_elements(gid: GroupId, rho: CharId) -> list[ExtElement]:
    """All (gamma, w) with w^2 = rho(gamma): the 2|Gamma| elements of Gamma(rho)."""
    model = build_group(gid)
    if not is_even(gid, rho):
        raise GroupError(f"character {rho} of {gid} is not even")
    out = []
    for g, r in enumerate(model.char_exps[rho]):
        if r % 2:
            raise GroupError("extension not representable")
        for e in (r // 2, r // 2 + N // 2):
            out.append(ExtElement(g, root_of_unity(e), e))
    return out
