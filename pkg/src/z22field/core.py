"""Scalars and generators for the graded polynomial engine.

Everything symbolic in this package lives in one ring: polynomials in a
fixed set of generators (coordinates, transformation parameters, component
field jets, function-symbol jets) with Gaussian-rational coefficients.
Each generator carries a Z2 x Z2 degree, and two generators of degrees
(a1,b1), (a2,b2) pick up the sign (-1)^(a1*a2 + b1*b2) when swapped.

Generators are interned: calling a factory twice with the same data hands
back the same object, so identity comparison and dict keying are cheap.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, NamedTuple, Optional, Union

Rat = Union[int, Fraction]


# ----------------------------------------------------------------------
# degrees
# ----------------------------------------------------------------------

class Degree(NamedTuple):
    a: int
    b: int

    # group law of Z2 x Z2, not tuple concatenation
    def __add__(self, other: "Degree") -> "Degree":  # type: ignore[override]
        return Degree((self.a + other.a) & 1, (self.b + other.b) & 1)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


DEG00 = Degree(0, 0)
DEG10 = Degree(1, 0)
DEG01 = Degree(0, 1)
DEG11 = Degree(1, 1)


def parity(d1: Degree, d2: Degree) -> int:
    """Exponent of the swap sign for two homogeneous factors: 0 or 1."""
    return (d1.a * d2.a + d1.b * d2.b) & 1


# ----------------------------------------------------------------------
# exact complex scalars
# ----------------------------------------------------------------------

class GaussianRational:
    """Complex number re + i*im with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rat = 0, im: Rat = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- coercion ------------------------------------------------------

    @staticmethod
    def coerce(value) -> Optional["GaussianRational"]:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        return None

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero scalar")
        return GaussianRational((self.re * o.re + self.im * o.im) / den,
                                (self.im * o.re - self.re * o.im) / den)

    def __rtruediv__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("scalar powers must be nonnegative integers")
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- predicates / hashing -------------------------------------------

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __eq__(self, other) -> bool:
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- display ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        ipart = "i" if mag == 1 else f"{mag}*i"
        return f"({self.re}{sign}{ipart})"


QONE = GaussianRational(1)
QI = GaussianRational(0, 1)
QZERO = GaussianRational(0)

HALF = Fraction(1, 2)


# ----------------------------------------------------------------------
# generators
# ----------------------------------------------------------------------

# sort ranks: coordinates in the fixed order t,y,x,z,th10,th01, then
# parameters, then even field jets, then odd field jets, then function jets
_RANK_T = 0
_RANK_Y = 1
_RANK_X = 2
_RANK_Z = 3
_RANK_TH10 = 4
_RANK_TH01 = 5
_RANK_PARAM = 6
_RANK_EVEN_FIELD = 7
_RANK_ODD_FIELD = 8
_RANK_FN = 9


class Generator:
    """Interned graded symbol.

    kind      one of "coord", "param", "field", "fn"
    space     None (shared), "y" (first-stage jets) or "x" (second-stage)
    base      family name; equals name for coordinates and parameters
    jet       () for coords/params, (m, n) for field jets, family-specific
              index tuple for function jets
    dim       scaling dimension as a Fraction
    nilpotent True when the square vanishes identically
    eps_group truncation group tag for small parameters, else None
    """

    __slots__ = ("name", "kind", "degree", "dim", "nilpotent", "eps_group",
                 "space", "base", "jet", "sort_key")

    _registry: dict = {}

    def __init__(self, name, kind, degree, dim, nilpotent, eps_group,
                 space, base, jet, sort_key):
        self.name = name
        self.kind = kind
        self.degree = degree
        self.dim = Fraction(dim)
        self.nilpotent = nilpotent
        self.eps_group = eps_group
        self.space = space
        self.base = base
        self.jet = jet
        self.sort_key = sort_key

    def __repr__(self) -> str:
        return self.name

    # interning makes default identity hash/eq sufficient and fast

    @property
    def is_odd_square(self) -> bool:
        """True when the generator anticommutes with itself."""
        return parity(self.degree, self.degree) == 1


def _intern(name, kind, degree, dim, nilpotent, eps_group, space, base,
            jet, sort_key) -> Generator:
    key = (kind, name, space)
    hit = Generator._registry.get(key)
    if hit is not None:
        return hit
    g = Generator(name, kind, degree, dim, nilpotent, eps_group, space,
                  base, jet, sort_key)
    Generator._registry[key] = g
    return g


# -- coordinates -------------------------------------------------------

_COORD_DATA = {
    # name: (degree, dim, space, rank, nilpotent)
    "t":    (DEG00, Fraction(-1), None, _RANK_T, False),
    "y":    (DEG00, Fraction(-2), "y", _RANK_Y, False),
    "x":    (DEG00, Fraction(-1), "x", _RANK_X, False),
    "z":    (DEG11, Fraction(-1), "y", _RANK_Z, False),
    "th10": (DEG10, Fraction(-1, 2), "y", _RANK_TH10, True),
    "th01": (DEG01, Fraction(-1, 2), "y", _RANK_TH01, True),
}


def coord(name: str) -> Generator:
    deg, dim, space, rank, nil = _COORD_DATA[name]
    return _intern(name, "coord", deg, dim, nil, None, space, name, (),
                   (rank, name, 0, 0))


# -- parameters --------------------------------------------------------

_PARAM_DATA = {
    # name: (degree, dim, nilpotent, eps_group, subrank)
    "eps00":  (DEG00, Fraction(-1), False, "e", 0),
    "eps11":  (DEG11, Fraction(-1), False, "e", 0),
    "eps10":  (DEG10, Fraction(-1, 2), True, "e", 0),
    "eps01":  (DEG01, Fraction(-1, 2), True, "e", 0),
    "epsL":   (DEG11, Fraction(0), False, "e", 0),
    "alpha":  (DEG11, Fraction(1), False, None, 1),
    "deltaz": (DEG11, Fraction(-1), False, "dz", 2),
}


def param(name: str) -> Generator:
    """Transformation parameter; append "p" for an independent primed copy."""
    base = name
    group_suffix = ""
    if name.endswith("p") and name[:-1] in _PARAM_DATA:
        base = name[:-1]
        group_suffix = "2"
    deg, dim, nil, group, sub = _PARAM_DATA[base]
    if group == "e" and group_suffix:
        group = "e2"
    return _intern(name, "param", deg, dim, nil, group, None, name, (),
                   (_RANK_PARAM, sub, name, 0))


# -- component field jets ----------------------------------------------

_FIELD_DATA = {
    # base: (degree, dim in y-stage, dim in x-stage, odd)
    "phi00": (DEG00, Fraction(0), Fraction(0), False),
    "phi11": (DEG11, Fraction(1), Fraction(0), False),
    "A00":   (DEG00, Fraction(2), Fraction(1), False),
    "A11":   (DEG11, Fraction(1), Fraction(1), False),
    "psi10": (DEG10, Fraction(1, 2), Fraction(1, 2), True),
    "psi01": (DEG01, Fraction(1, 2), Fraction(1, 2), True),
    "lam10": (DEG10, Fraction(3, 2), Fraction(1, 2), True),
    "lam01": (DEG01, Fraction(3, 2), Fraction(1, 2), True),
}

FIELD_BASES = ("phi00", "phi11", "A00", "A11", "psi10", "psi01",
               "lam10", "lam01")

# rescaled by one power of x when passing from the y-stage to the x-stage
X_WEIGHTED = frozenset({"phi11", "A00", "lam10", "lam01"})


def field(base: str, m: int = 0, n: int = 0, space: str = "y") -> Generator:
    """Jet of a component field: m time derivatives, n space derivatives."""
    deg, dim_y, dim_x, odd = _FIELD_DATA[base]
    if space == "y":
        dim = dim_y + m + 2 * n
    elif space == "x":
        dim = dim_x + m + n
    else:
        raise ValueError(f"unknown space {space!r}")
    name = base
    if m or n:
        name = base + "_" + "t" * m + space * n
    rank = _RANK_ODD_FIELD if odd else _RANK_EVEN_FIELD
    return _intern(name, "field", deg, dim, odd, None, space, base, (m, n),
                   (rank, base, m, n))


def is_odd_field(base: str) -> bool:
    return _FIELD_DATA[base][3]


def field_degree(base: str) -> Degree:
    return _FIELD_DATA[base][0]


# -- function-symbol jets ----------------------------------------------
#
# Three families, all of scaling dimension 0:
#   fjet(k)          abstract derivative tower F, Fd1, Fd2, ... standing for
#                    the k-th derivative of a scalar function of phi00
#   trig(name)       sine/cosine symbols of phi00 (shared) and of the
#                    (1,1) field (one version per stage)
#   pairjet(m,s,sp)  derivative tower of a potential pair; s=0 was even
#                    slot, s=1 the (1,1) slot, m counts derivatives with
#                    one extra step for the undifferentiated body

def fjet(k: int) -> Generator:
    name = "F" if k == 0 else f"Fd{k}"
    return _intern(name, "fn", DEG00, 0, False, None, None, "F", (k,),
                   (_RANK_FN, "F", k, 0))


_TRIG_DATA = {
    # name: (degree, space, dim); the first-stage odd-slot symbol packs one
    # more power of the (1,1) field than of y**(1/2), hence dimension 1
    "S00":  (DEG00, None, Fraction(0)),
    "C00":  (DEG00, None, Fraction(0)),
    "S11y": (DEG11, "y", Fraction(1)),
    "C11y": (DEG00, "y", Fraction(0)),
    "S11":  (DEG11, "x", Fraction(0)),
    "C11":  (DEG00, "x", Fraction(0)),
}


def trig(name: str) -> Generator:
    deg, space, dim = _TRIG_DATA[name]
    return _intern(name, "fn", deg, dim, False, None, space, name, (),
                   (_RANK_FN, name, 0, 0))


def pairjet(m: int, slot: int, space: str) -> Generator:
    """Jet of a canonical potential pair.

    m = 0 is the generating body, m = 1 the pair components themselves,
    m >= 2 their repeated (0,0)-derivatives.  slot 0 carries degree (0,0),
    slot 1 degree (1,1).
    """
    if slot not in (0, 1):
        raise ValueError("slot must be 0 or 1")
    deg = DEG00 if slot == 0 else DEG11
    # first-stage odd slot: one surplus power of the dimension-1 field
    dim = Fraction(1) if (space == "y" and slot == 1) else Fraction(0)
    stem = "Vt" if space == "y" else "V"
    if space == "y":
        names0 = {0: "VtB0", 1: "Vt00"}
        names1 = {0: "VtB1", 1: "Vt11"}
    elif space == "x":
        names0 = {0: "VB0", 1: "V00"}
        names1 = {0: "VB1", 1: "V11"}
    else:
        raise ValueError(f"unknown space {space!r}")
    table = names0 if slot == 0 else names1
    if m in table:
        name = table[m]
    else:
        name = table[1] + f"_{m - 1}"
    return _intern(name, "fn", deg, dim, False, None, space, stem + "pair",
                   (m, slot), (_RANK_FN, stem + "pair", m, slot))


# ----------------------------------------------------------------------
# convenience handles
# ----------------------------------------------------------------------

T = coord("t")
Y = coord("y")
X = coord("x")
ZC = coord("z")
TH10 = coord("th10")
TH01 = coord("th01")
