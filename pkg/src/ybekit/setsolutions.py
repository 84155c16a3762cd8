"""Set-theoretic data model: maps r(x, y) = (sigma_x(y), gamma_y(x)) on a
finite set {1..n}, the axiom checks that make such a map a braided or
involutive solution, and the componentwise direct product construction.

Tables are tuples of 1-based images.  Every check returns a CheckResult
carrying the verdict and, on failure, the lexicographically first failing
witness; checks with two independent formulations run both and insist they
agree.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import ParseError

MapTable = tuple[int, ...]


def is_bijection_table(table) -> bool:
    return sorted(table) == list(range(1, len(table) + 1))


def invert_table(table) -> MapTable:
    if not is_bijection_table(table):
        raise ValueError(f"table {table} is not a bijection")
    inv = [0] * len(table)
    for i, v in enumerate(table):
        inv[v - 1] = i + 1
    return tuple(inv)


def identity_table(n: int) -> MapTable:
    return tuple(range(1, n + 1))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the tuple of 1-based images."""

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(v) for v in self.image))
        if not is_bijection_table(self.image):
            raise ValueError(f"image {self.image} is not a bijection")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"point {i} outside 1..{self.n}")
        return self.image[i - 1]

    def inverse(self) -> "Permutation":
        return Permutation(invert_table(self.image))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other."""
        if self.n != other.n:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.image[v - 1] for v in other.image))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(identity_table(n))


@dataclass(frozen=True)
class CheckResult:
    """Verdict of one axiom check; witness is present exactly on failure."""

    ok: bool
    witness: tuple | None = None

    def __post_init__(self):
        if self.ok != (self.witness is None):
            raise ValueError("witness must be present exactly when the check fails")

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class CheckReport:
    nondegenerate: CheckResult
    involutive: CheckResult
    braided: CheckResult
    square_free: CheckResult
    trivial: CheckResult


@dataclass(frozen=True)
class SetSolution:
    """Tables sigma and gamma of a candidate map r(x,y) = (sigma_x(y), gamma_y(x)).

    sigma[i-1][j-1] is sigma_i(j) and gamma[j-1][i-1] is gamma_j(i), all
    1-based.  Construction only validates shape and value ranges; whether
    the tables are bijective, involutive or braided is what the checks in
    this module decide.
    """

    n: int
    sigma: tuple[MapTable, ...]
    gamma: tuple[MapTable, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("set size must be positive")
        for name in ("sigma", "gamma"):
            tables = tuple(tuple(int(v) for v in t) for t in getattr(self, name))
            if len(tables) != self.n:
                raise ValueError(f"{name} must hold {self.n} tables")
            for t in tables:
                if len(t) != self.n:
                    raise ValueError(f"each {name} table must have {self.n} entries")
                if any(not 1 <= v <= self.n for v in t):
                    raise ValueError(f"{name} values must lie in 1..{self.n}")
            object.__setattr__(self, name, tables)


def apply_r(s: SetSolution, i: int, j: int) -> tuple[int, int]:
    """The pair map: r(i, j) = (sigma_i(j), gamma_j(i))."""
    if not (1 <= i <= s.n and 1 <= j <= s.n):
        raise IndexError(f"pair ({i},{j}) outside 1..{s.n}")
    return s.sigma[i - 1][j - 1], s.gamma[j - 1][i - 1]


def is_nondegenerate(s: SetSolution) -> CheckResult:
    """All sigma_x and all gamma_y are bijections."""
    for kind in ("sigma", "gamma"):
        for i, t in enumerate(getattr(s, kind), start=1):
            if not is_bijection_table(t):
                return CheckResult(False, (kind, i))
    return CheckResult(True)


def is_involutive(s: SetSolution) -> CheckResult:
    """r o r is the identity on all pairs.

    Two formulations are evaluated: r applied twice, and the componentwise
    conditions sigma_{sigma_x(y)}(gamma_y(x)) = x, gamma_{gamma_y(x)}(sigma_x(y)) = y.
    They must agree pair by pair.
    """
    witness = None
    for x in range(1, s.n + 1):
        for y in range(1, s.n + 1):
            u, v = apply_r(s, x, y)
            direct = apply_r(s, u, v) == (x, y)
            componentwise = (s.sigma[u - 1][v - 1] == x and s.gamma[v - 1][u - 1] == y)
            if direct != componentwise:
                raise AssertionError("involutivity formulations disagree")
            if not direct and witness is None:
                witness = (x, y)
    return CheckResult(witness is None, witness)


def _braid_eqs_witness(s: SetSolution) -> tuple | None:
    sig, gam = s.sigma, s.gamma
    rng = range(1, s.n + 1)
    for x in rng:
        for y in rng:
            u = sig[x - 1][y - 1]          # sigma_x(y)
            w = gam[y - 1][x - 1]          # gamma_y(x)
            for z in rng:
                if sig[x - 1][sig[y - 1][z - 1] - 1] != sig[u - 1][sig[w - 1][z - 1] - 1]:
                    return (x, y, z)
                if gam[y - 1][gam[x - 1][z - 1] - 1] != gam[w - 1][gam[u - 1][z - 1] - 1]:
                    return (x, y, z)
                lhs = gam[sig[w - 1][z - 1] - 1][u - 1]
                rhs = sig[gam[sig[y - 1][z - 1] - 1][x - 1] - 1][gam[z - 1][y - 1] - 1]
                if lhs != rhs:
                    return (x, y, z)
    return None


def _braid_direct_holds(s: SetSolution) -> bool:
    rng = range(1, s.n + 1)

    def r12(t):
        u, v = apply_r(s, t[0], t[1])
        return (u, v, t[2])

    def r23(t):
        u, v = apply_r(s, t[1], t[2])
        return (t[0], u, v)

    for t in itertools.product(rng, repeat=3):
        if r12(r23(r12(t))) != r23(r12(r23(t))):
            return False
    return True


def is_braided(s: SetSolution) -> CheckResult:
    """The braid relation r12 r23 r12 = r23 r12 r23 holds on all triples.

    Checked both through the three componentwise identities on sigma and
    gamma and through the direct triple map; the verdicts must agree.  The
    witness, when present, is the first triple failing the componentwise
    route.
    """
    witness = _braid_eqs_witness(s)
    if (witness is None) != _braid_direct_holds(s):
        raise AssertionError("braid formulations disagree")
    return CheckResult(witness is None, witness)


def is_square_free(s: SetSolution) -> CheckResult:
    """r fixes every diagonal pair (x, x)."""
    for x in range(1, s.n + 1):
        if apply_r(s, x, x) != (x, x):
            return CheckResult(False, (x,))
    return CheckResult(True)


def is_trivial(s: SetSolution) -> CheckResult:
    """Every sigma_x and gamma_y is the identity, so r is the pair swap."""
    ident = identity_table(s.n)
    for kind in ("sigma", "gamma"):
        for i, t in enumerate(getattr(s, kind), start=1):
            if t != ident:
                return CheckResult(False, (kind, i))
    return CheckResult(True)


def check_solution(s: SetSolution) -> CheckReport:
    return CheckReport(
        nondegenerate=is_nondegenerate(s),
        involutive=is_involutive(s),
        braided=is_braided(s),
        square_free=is_square_free(s),
        trivial=is_trivial(s),
    )


def check_sigma_inverse_identity(s: SetSolution) -> bool:
    """For a non-degenerate involutive solution, r(i, sigma_i^{-1}(j)) must
    equal (j, sigma_j^{-1}(i)) for all i, j; returns the verdict."""
    if not is_nondegenerate(s):
        raise ValueError("identity only applies to non-degenerate solutions")
    if not is_involutive(s):
        raise ValueError("identity only applies to involutive solutions")
    inv = [invert_table(t) for t in s.sigma]
    for i in range(1, s.n + 1):
        for j in range(1, s.n + 1):
            if apply_r(s, i, inv[i - 1][j - 1]) != (j, inv[j - 1][i - 1]):
                return False
    return True


def pair_to_index(i: int, k: int, m: int) -> int:
    """Flatten the pair (i, k), with k ranging over 1..m, to (i-1)m + k."""
    if m < 1 or i < 1 or not 1 <= k <= m:
        raise ValueError(f"pair ({i},{k}) with second component in 1..{m} expected")
    return (i - 1) * m + k


def index_to_pair(t: int, m: int) -> tuple[int, int]:
    """Inverse of pair_to_index: t maps to (ceil(t/m), t mod m with 0 -> m)."""
    if m < 1 or t < 1:
        raise ValueError("index and modulus must be positive")
    return (t + m - 1) // m, (t - 1) % m + 1


def direct_product(sx: SetSolution, sy: SetSolution) -> SetSolution:
    """Componentwise product on pairs, flattened by pair_to_index.

    The point (i, k) of the product set is the index (i-1)m + k with
    m = sy.n; its sigma table acts as sigma_i on the first component and as
    sy's sigma_k on the second, and likewise for gamma.
    """
    n, m = sx.n, sy.n
    sigma = []
    gamma = []
    for i in range(1, n + 1):
        for k in range(1, m + 1):
            sigma.append(tuple(
                pair_to_index(sx.sigma[i - 1][j - 1], sy.sigma[k - 1][l - 1], m)
                for j in range(1, n + 1) for l in range(1, m + 1)))
            gamma.append(tuple(
                pair_to_index(sx.gamma[i - 1][j - 1], sy.gamma[k - 1][l - 1], m)
                for j in range(1, n + 1) for l in range(1, m + 1)))
    return SetSolution(n * m, tuple(sigma), tuple(gamma))


def isomorphic_set(sa: SetSolution, sb: SetSolution) -> Permutation | None:
    """Search all relabelings mu for one with r_b(mu x, mu y) = mu r_a(x, y);
    returns the first such mu in lexicographic order, or None."""
    if sa.n != sb.n:
        raise ValueError("solutions on sets of different sizes")
    n = sa.n
    rng = range(1, n + 1)
    for image in itertools.permutations(rng):
        ok = True
        for x in rng:
            for y in rng:
                u, v = apply_r(sa, x, y)
                if apply_r(sb, image[x - 1], image[y - 1]) != (image[u - 1], image[v - 1]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return Permutation(image)
    return None


def solution_to_json(s: SetSolution) -> str:
    return json.dumps(
        {"n": s.n,
         "sigma": [list(t) for t in s.sigma],
         "gamma": [list(t) for t in s.gamma]},
        sort_keys=True)


def solution_from_json(text: str) -> SetSolution:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("solution document must be a JSON object")
    for key in ("n", "sigma", "gamma"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}")
    if not isinstance(obj["n"], int) or isinstance(obj["n"], bool):
        raise ParseError("n must be an integer")
    for key in ("sigma", "gamma"):
        tables = obj[key]
        if (not isinstance(tables, list)
                or any(not isinstance(t, list) for t in tables)
                or any(not isinstance(v, int) or isinstance(v, bool)
                       for t in tables for v in t)):
            raise ParseError(f"{key} must be a list of integer lists")
    try:
        return SetSolution(obj["n"],
                           tuple(tuple(t) for t in obj["sigma"]),
                           tuple(tuple(t) for t in obj["gamma"]))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
