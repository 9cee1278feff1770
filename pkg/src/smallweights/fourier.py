"""Closed-form Fourier coefficients and Laurent-polynomial arithmetic.

Laurent polynomials in one variable t are plain dicts mapping integer
exponents to nonzero integer coefficients; the empty dict is zero.  The
central shorthand: for a finite list S of integers, (1 - t^S) means the
product of (1 - t^{min(0, s)}) over s in S, so the empty list gives 1 and
any nonnegative entry kills the product outright.  An unclipped variant,
with exponents used as-is, exists for the symmetry-group invariance
checks.

The coefficient attached to a small weight is t^{height} times the value
of its aggregate data: a bare product for weights whose blocks all have
size one, and a short alternating combination when a block of size two
is present.  Aggregate data itself comes from the defect tables in the
defects module; this module only evaluates it, and supplies the
Freudenthal weight multiplicities and generalized exponents built on top.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import rootsys
from .rootsys import RootSystem, Vec, add, sub, scale, dot2
from .symgroups import Tuple4Data, Tuple7Data


def monomial(exponent: int, coefficient: int = 1) -> dict:
    return {exponent: coefficient} if coefficient else {}


def t_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            del out[e]
    return out


def t_neg(p: dict) -> dict:
    return {e: -c for e, c in p.items()}


def t_sub(p: dict, q: dict) -> dict:
    return t_add(p, t_neg(q))


def t_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def t_value(p: dict, x) -> Fraction:
    """Evaluate at a nonzero rational point, exactly."""
    x = Fraction(x)
    return sum((c * x ** e for e, c in p.items()), Fraction(0))


def t_text(p: dict) -> str:
    """Render like "t^3 - t^2", highest exponent first; zero is "0"."""
    if not p:
        return "0"
    parts = []
    for e in sorted(p, reverse=True):
        c = p[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif e == 1:
            body = "t" if mag == 1 else f"{mag}*t"
        else:
            body = f"t^{e}" if mag == 1 else f"{mag}*t^{e}"
        parts.append(("-" if c < 0 else "+", body))
    head_sign, head = parts[0]
    text = ("-" + head) if head_sign == "-" else head
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def one_minus_t(entries, clip: bool = True) -> dict:
    """(1 - t^S): product of (1 - t^{min(0, s)}) over s in entries."""
    out = {0: 1}
    for s in entries:
        e = min(0, s) if clip else s
        out = t_mul(out, t_sub({0: 1}, monomial(e)))
    return out


# ------------------------------------------------------- aggregate data

@dataclass(frozen=True)
class Zeroed:
    """Aggregate of a weight whose coefficient vanishes outright."""


@dataclass(frozen=True)
class Vect:
    """Aggregate of a weight whose blocks all have size one."""

    a: tuple


ZEROED = Zeroed()


def aleph_value(data, clip: bool = True) -> dict:
    """Evaluate aggregate data to a Laurent polynomial.

    Vect gives (1 - t^a).  A 4-part tuple gives
    (1 - t^v) - t^{v_tilde} (1 - t^d)(1 - t^v_bar), and the 7-part tuple
    subtracts one such correction per triangle.  The monomial prefactors
    are never clipped; only (1 - t^S) arguments are.
    """
    if isinstance(data, Zeroed):
        return {}
    if isinstance(data, Vect):
        return one_minus_t(data.a, clip)
    if isinstance(data, Tuple4Data):
        head = one_minus_t(data.v, clip)
        tail = t_mul(monomial(data.v_tilde),
                     t_mul(one_minus_t((data.d,), clip),
                           one_minus_t(data.v_bar, clip)))
        return t_sub(head, tail)
    if isinstance(data, Tuple7Data):
        head = one_minus_t(data.v, clip)
        tail1 = t_mul(monomial(data.v_tilde1),
                      t_mul(one_minus_t((data.d1,), clip),
                            one_minus_t(data.v_bar1, clip)))
        tail2 = t_mul(monomial(data.v_tilde2),
                      t_mul(one_minus_t((data.d2,), clip),
                            one_minus_t(data.v_bar2, clip)))
        return t_sub(t_sub(head, tail1), tail2)
    raise TypeError(f"not aggregate data: {data!r}")


def c_coefficient(rs: RootSystem, lam: Vec) -> dict:
    """Coefficient t^{ht(lam)} (1 - t^{aleph}) of a small weight."""
    from . import defects

    if all(x == 0 for x in lam):
        return {0: 1}
    cache = rs._cache.setdefault("c_coefficient", {})
    got = cache.get(lam)
    if got is None:
        data = defects.aggregate(rs, lam)
        got = t_mul(monomial(rootsys.height(rs, lam)), aleph_value(data))
        cache[lam] = got
    return dict(got)


# ------------------------------------------------- weight multiplicities

def _box_below(rs: RootSystem, lam: Vec) -> dict:
    # lattice points lam minus a nonnegative combination of simples that
    # still have nonnegative simple-root coefficients, mapped to those
    # coefficients; plain integer bookkeeping, no solving per point
    c0 = tuple(int(c) for c in rootsys.root_coefficients(rs, lam))
    seen = {lam: c0}
    frontier = [(lam, c0)]
    while frontier:
        grown = []
        for v, c in frontier:
            for i, s in enumerate(rs.simple_roots):
                if c[i] == 0:
                    continue
                w = sub(v, s)
                if w not in seen:
                    cw = c[:i] + (c[i] - 1,) + c[i + 1:]
                    seen[w] = cw
                    grown.append((w, cw))
        frontier = grown
    return seen


def freudenthal_multiplicities(rs: RootSystem, lam: Vec) -> dict:
    """All weights of the irreducible module with highest weight lam.

    Returns a dict mapping each weight to its multiplicity; weights of
    multiplicity zero are absent.  Exact integer arithmetic throughout:
    with doubled coordinates the usual recursion can be run on twice the
    half-sum of positive roots, which stays integral.
    """
    if not rootsys.in_root_lattice(rs, lam):
        raise ValueError("weight must lie in the root lattice")
    if not rootsys.is_dominant(rs, lam):
        raise ValueError("weight must be dominant")
    box = _box_below(rs, lam)
    clam = box[lam]
    dominants = sorted((v for v in box if rootsys.is_dominant(rs, v)),
                       key=lambda v: (-sum(box[v]), v))
    rho2 = (0,) * rs.dim
    for a in rs.positive_roots:
        rho2 = add(rho2, a)

    mult = {lam: 1}
    for mu in dominants[1:]:
        cmu = box[mu]
        num = 0
        for a in rs.positive_roots:
            ca = rootsys.root_coefficients(rs, a)
            kmax = min((clam[i] - cmu[i]) // int(c)
                       for i, c in enumerate(ca) if c)
            if kmax <= 0:
                continue
            norm = dot2(a, a)
            base = dot2(mu, a)
            nu = mu
            for k in range(1, kmax + 1):
                nu = add(nu, a)
                rep, _ = rootsys.dominant_representative(rs, nu)
                m = mult.get(rep, 0)
                if m:
                    num += 2 * m * (base + k * norm)
        den = dot2(sub(lam, mu), add(add(lam, mu), rho2))
        if den <= 0:
            raise ArithmeticError("multiplicity denominator not positive")
        if num % den:
            raise ArithmeticError("multiplicity not integral")
        if num:
            mult[mu] = num // den

    full = {}
    for mu, m in mult.items():
        for w in rootsys.weyl_orbit(rs, mu):
            full[w] = m
    return full


def generalized_exponents(rs: RootSystem, lam: Vec) -> dict:
    """Sum of multiplicity times coefficient over the weights of V_lam."""
    from . import weights as wt

    if not wt.is_small(rs, lam):
        raise ValueError("weight is not small")
    if not rootsys.is_dominant(rs, lam):
        raise ValueError("weight must be dominant")
    out: dict = {}
    for mu, m in sorted(freudenthal_multiplicities(rs, lam).items()):
        out = t_add(out, t_mul(monomial(0, m), c_coefficient(rs, mu)))
    return out


def classical_exponents(rs: RootSystem) -> tuple:
    """Exponents of the Weyl group, read off the root-height profile.

    The number of positive roots of height i, as i runs upward, is the
    conjugate partition of the exponent multiset, so conjugating the
    height counts recovers the exponents.
    """
    heights = [rootsys.height(rs, a) for a in rs.positive_roots]
    counts = [heights.count(i) for i in range(1, max(heights) + 1)]
    return tuple(sorted(sum(1 for c in counts if c >= j)
                        for j in range(1, counts[0] + 1)))
