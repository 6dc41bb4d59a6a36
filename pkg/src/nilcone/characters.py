"""Integer character arithmetic on the sl(2) weight lattice.

A character is a finitely supported map weight -> multiplicity.  That is
all the structure needed to count occurrences of an irreducible inside
symmetric powers of the adjoint module, which in turn counts the graded
pieces of the space of invariant distributions supported at the origin.
Everything is integer-exact; decomposition into irreducibles is done by
peeling off highest weights, which is independently checkable by brute
force enumeration of weight multisets (see sym_power_brute).
"""

from __future__ import annotations

from itertools import combinations_with_replacement


class Character:
    """Finitely supported integer multiplicity function on the weight lattice."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {int(w): int(m) for w, m in (coeffs or {}).items() if m}

    @classmethod
    def zero(cls) -> "Character":
        return cls({})

    @classmethod
    def one(cls) -> "Character":
        return cls({0: 1})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.coeffs == other.coeffs

    def __add__(self, other: "Character") -> "Character":
        out = dict(self.coeffs)
        for w, m in other.coeffs.items():
            out[w] = out.get(w, 0) + m
        return Character(out)

    def __sub__(self, other: "Character") -> "Character":
        out = dict(self.coeffs)
        for w, m in other.coeffs.items():
            out[w] = out.get(w, 0) - m
        return Character(out)

    def __mul__(self, other: "Character") -> "Character":
        out: dict[int, int] = {}
        for w1, m1 in self.coeffs.items():
            for w2, m2 in other.coeffs.items():
                out[w1 + w2] = out.get(w1 + w2, 0) + m1 * m2
        return Character(out)

    def __repr__(self) -> str:
        inner = ", ".join(f"{w}: {m}" for w, m in sorted(self.coeffs.items()))
        return "Character({%s})" % inner

    def stretch(self, r: int) -> "Character":
        """Multiply every weight by r (the r-th power-sum substitution)."""
        return Character({w * r: m for w, m in self.coeffs.items()})

    def is_symmetric(self) -> bool:
        return all(self.coeffs.get(-w, 0) == m for w, m in self.coeffs.items())

    def is_genuine(self) -> bool:
        """Symmetric with nonnegative multiplicities: the character of an actual module."""
        return self.is_symmetric() and all(m >= 0 for m in self.coeffs.values())

    def dimension(self) -> int:
        return sum(self.coeffs.values())

    def max_weight(self) -> int:
        if not self.coeffs:
            raise ValueError("zero character has no weights")
        return max(self.coeffs)


def irrep_character(n: int) -> Character:
    """Character of the weight-n irreducible: one each at -n, -n+2, ..., n."""
    if n < 0:
        raise ValueError("n must be a natural number")
    return Character({-n + 2 * i: 1 for i in range(n + 1)})


def adjoint_character() -> Character:
    return irrep_character(2)


def decompose_into_irreducibles(c: Character) -> dict[int, int]:
    """Peel highest weights until nothing is left.

    Returns {highest weight: multiplicity}.  Raises if peeling ever drives
    a multiplicity negative, i.e. the input was not a genuine character.
    """
    work = Character(dict(c.coeffs))
    out: dict[int, int] = {}
    while work:
        w = work.max_weight()
        m = work.coeffs[w]
        if w < 0 or m < 0:
            raise ValueError("not a genuine character: peeling failed")
        out[w] = out.get(w, 0) + m
        work = work - Character({u: m for u in irrep_character(w).coeffs})
        if any(v < 0 for v in work.coeffs.values()):
            raise ValueError("not a genuine character: peeling failed")
    return out


def tensor_decompose(a: int, b: int) -> tuple[int, ...]:
    """Highest weights of the tensor product of the weight-a and weight-b
    irreducibles: (a+b, a+b-2, ..., |a-b|), each with multiplicity one.

    Computed by multiplying the two characters and peeling; the peeling
    loop terminating at zero is the verification.
    """
    product = irrep_character(a) * irrep_character(b)
    pieces = decompose_into_irreducibles(product)
    out = []
    for w in sorted(pieces, reverse=True):
        out.extend([w] * pieces[w])
    return tuple(out)


def sym_power(m: int, c: Character) -> Character:
    """Character of the m-th symmetric power via the power-sum recursion
    m*h_m = sum_{r=1..m} p_r * h_{m-r}, with p_r the weight-stretch of c."""
    if m < 0:
        raise ValueError("m must be a natural number")
    if not c.is_genuine():
        raise ValueError("sym_power expects a genuine character")
    h = [Character.one()]
    for j in range(1, m + 1):
        acc = Character.zero()
        for r in range(1, j + 1):
            acc = acc + c.stretch(r) * h[j - r]
        coeffs = {}
        for w, v in acc.coeffs.items():
            q, rem = divmod(v, j)
            if rem:
                raise ArithmeticError("symmetric power recursion lost integrality")
            coeffs[w] = q
        h.append(Character(coeffs))
    return h[m]


def sym_power_brute(m: int, c: Character) -> Character:
    """Same character by direct enumeration of degree-m monomials in basis
    slots; the independent cross-check for sym_power."""
    slots: list[int] = []
    for w in sorted(c.coeffs):
        mult = c.coeffs[w]
        if mult < 0:
            raise ValueError("sym_power_brute expects nonnegative multiplicities")
        slots.extend([w] * mult)
    out: dict[int, int] = {}
    for combo in combinations_with_replacement(range(len(slots)), m):
        w = sum(slots[i] for i in combo)
        out[w] = out.get(w, 0) + 1
    return Character(out)


def invariant_dim(n: int, m: int) -> int:
    """Multiplicity of the weight-n irreducible inside the m-th symmetric
    power of the adjoint module: the dimension of the degree-m graded piece
    of invariant distributions supported at the origin with values there."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be natural numbers")
    pieces = decompose_into_irreducibles(sym_power(m, adjoint_character()))
    return pieces.get(n, 0)
