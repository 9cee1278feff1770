"""Ground truth: a partition-function oracle and a recurrence verifier.

The kernel is the product over positive roots of (1 - e^a) / (1 - t e^a).
Expanding each factor as 1 + sum_{k>=1} (t^k - t^{k-1}) e^{ka} exhibits
the coefficient of e^lam as a finite sum over the ways of writing lam as
a nonnegative integer combination of positive roots.  A memoized search
over the root order computes that sum exactly, with no input from the
closed forms, so agreement between the two is evidence for both.

The recurrence verifier independently checks the two-term difference
system the coefficient family satisfies on the union of the small-weight
hulls, including the vanishing at reflections of dominant weights.  Both
verifiers return violation reports as data rather than raising.
"""

from concurrent.futures import ProcessPoolExecutor

from . import fourier, rootsys, weights
from .rootsys import RootSystem, Vec, reflect_by, sub


class BudgetExceeded(ValueError):
    """Target weight too tall for the configured oracle budget."""


def _factor(k: int) -> dict:
    # coefficient of e^{k a} in one kernel factor
    return {k: 1, k - 1: -1}


def kernel_coefficient(rs: RootSystem, lam: Vec, budget: int = 24,
                       order=None) -> dict:
    """Coefficient of e^lam in the kernel, by memoized partition search.

    The search walks the positive roots in their canonical order, choosing
    a multiplicity for each; any other order gives the same answer.  The
    memo for the canonical order is kept on the root system and shared
    across calls.
    """
    if not rootsys.in_root_lattice(rs, lam):
        raise ValueError("weight must lie in the root lattice")
    start = rootsys.root_coefficients(rs, lam)
    c0 = tuple(int(x) for x in start)
    if any(x < 0 for x in c0):
        return {}
    height = sum(c0)
    if height > budget:
        raise BudgetExceeded(f"height {height} above budget {budget}")
    if order is None:
        order = rs.positive_roots
        memo = rs._cache.setdefault("kernel_memo", {})
    else:
        memo = {}
    rcoeffs = [tuple(int(x) for x in rootsys.root_coefficients(rs, a))
               for a in order]
    heights = [sum(c) for c in rcoeffs]

    def walk(idx, rem, crem, hrem):
        if hrem == 0:
            return {0: 1}
        if idx == len(order):
            return {}
        key = (idx, rem)
        got = memo.get(key)
        if got is not None:
            return got
        out = dict(walk(idx + 1, rem, crem, hrem))
        ca = rcoeffs[idx]
        k = 0
        while True:
            k += 1
            hrem -= heights[idx]
            if hrem < 0:
                break
            crem = tuple(x - y for x, y in zip(crem, ca))
            if any(x < 0 for x in crem):
                break
            rem = sub(rem, order[idx])
            out = fourier.t_add(
                out, fourier.t_mul(_factor(k), walk(idx + 1, rem, crem, hrem)))
        memo[key] = out
        return out

    return dict(walk(0, lam, c0, height))


def recurrence_weights(rs: RootSystem) -> set:
    """The zero weight together with every small weight of the system."""
    out = {(0,) * rs.dim}
    for lam in weights.small_dominant_weights(rs):
        out.update(rootsys.weyl_orbit(rs, lam))
    return out


def _coefficient_in(rs, domain, lam):
    if lam in domain:
        return fourier.c_coefficient(rs, lam)
    return {}


def _check_weight(rs, domain, lam):
    # both equations of the difference system at one weight
    violations = []
    checked = 0
    c_lam = _coefficient_in(rs, domain, lam)
    for i, alpha in enumerate(rs.simple_roots):
        if rootsys.pairing(rs, lam, alpha) <= 0:
            continue
        refl = reflect_by(lam, alpha)
        left = fourier.t_sub(_coefficient_in(rs, domain, refl),
                             fourier.t_mul({-1: 1}, c_lam))
        right = fourier.t_sub(
            fourier.t_mul({-1: 1},
                          _coefficient_in(rs, domain, rootsys.add(refl, alpha))),
            _coefficient_in(rs, domain, sub(lam, alpha)))
        checked += 1
        if left != right:
            violations.append({
                "weight": lam, "equation": "difference", "index": i,
                "left": fourier.t_text(left), "right": fourier.t_text(right),
            })
    if rootsys.is_dominant(rs, lam) and any(lam):
        mirrored = reflect_by(lam, rs.theta_long)
        value = _coefficient_in(rs, domain, mirrored)
        checked += 1
        if value:
            violations.append({
                "weight": lam, "equation": "boundary", "index": None,
                "left": fourier.t_text(value), "right": "0",
            })
    return checked, violations


def _recurrence_chunk(args):
    kind, rank, chunk = args
    rs = rootsys.build_root_system(kind, rank)
    domain = recurrence_weights(rs)
    checked = 0
    violations = []
    for lam in chunk:
        n, bad = _check_weight(rs, domain, lam)
        checked += n
        violations.extend(bad)
    return checked, violations


def verify_recurrence(rs: RootSystem, lams=None, jobs: int = 1) -> dict:
    """Check the difference system at every applicable weight and index.

    lams defaults to the full recurrence weight set.  Violations come
    back as data inside the report, never as exceptions.
    """
    domain = recurrence_weights(rs)
    todo = sorted(domain if lams is None else lams)
    report = {"system": rs.name, "checked": 0, "violations": []}
    if jobs > 1 and len(todo) > 64:
        chunks = [todo[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_recurrence_chunk,
                             [(rs.kind, rs.rank, c) for c in chunks])
            for checked, violations in parts:
                report["checked"] += checked
                report["violations"].extend(violations)
    else:
        for lam in todo:
            checked, violations = _check_weight(rs, domain, lam)
            report["checked"] += checked
            report["violations"].extend(violations)
    return report


def verify_formula_vs_oracle(rs: RootSystem, budget: int = 24) -> dict:
    """Compare the closed form with the oracle at every reachable weight."""
    report = {"system": rs.name, "budget": budget, "checked": 0,
              "mismatches": []}
    for lam in sorted(recurrence_weights(rs)):
        if rootsys.height(rs, lam) > budget:
            continue
        want = kernel_coefficient(rs, lam, budget)
        got = fourier.c_coefficient(rs, lam)
        report["checked"] += 1
        if want != got:
            report["mismatches"].append({
                "weight": lam,
                "oracle": fourier.t_text(want),
                "formula": fourier.t_text(got),
            })
    return report
