"""Small weights: minimal expressions, canonical blocks, symbols.

A weight of the root lattice is small when the convex hull of its Weyl
orbit, intersected with the lattice, contains no doubled root.  Its
co-length is the least number of roots summing to it.  Minimal expressions
of a dominant weight use positive roots only; grouping an expression by
the transitive closure of non-orthogonality yields its blocks.

The canonical block decomposition peels, at every step, the block of
least height among all blocks of all minimal expressions; the sequence of
block sizes (with root-length marks where lengths differ) is the symbol.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootsys import (
    RootSystem,
    Vec,
    add,
    apply_word,
    dominant_representative,
    dot2,
    in_positive_cone,
    in_root_lattice,
    is_dominant,
    pairing_raw,
    scale,
    sub,
)


def _zero(rs: RootSystem) -> Vec:
    return (0,) * rs.dim


def is_small(rs: RootSystem, lam: Vec) -> bool:
    """True when lam is in the root lattice and its hull misses 2R."""
    if not in_root_lattice(rs, lam):
        return False
    dom, _ = dominant_representative(rs, lam)
    for theta in {rs.theta_long, rs.theta_short}:
        if in_positive_cone(rs, sub(dom, scale(2, theta))):
            return False
    return True


def _small_levels(rs: RootSystem) -> tuple[tuple[Vec, ...], ...]:
    """Dominant small weights grouped by co-length (level k = co-length k)."""
    cached = rs._cache.get("small_levels")
    if cached is not None:
        return cached
    zero = _zero(rs)
    levels = [(zero,)]
    seen = {zero}
    current = [zero]
    while current:
        nxt = set()
        for mu in current:
            for beta in rs.positive_roots:
                cand = add(mu, beta)
                if cand in seen or cand in nxt:
                    continue
                if is_dominant(rs, cand) and is_small(rs, cand):
                    nxt.add(cand)
        if not nxt:
            break
        current = sorted(nxt)
        seen |= nxt
        levels.append(tuple(current))
    result = tuple(levels)
    rs._cache["small_levels"] = result
    return result


def small_dominant_weights(rs: RootSystem) -> tuple[Vec, ...]:
    """All nonzero dominant small weights, sorted by (co-length, coords)."""
    out = []
    for level in _small_levels(rs)[1:]:
        out.extend(level)
    return tuple(out)


def colength(rs: RootSystem, lam: Vec, bound: int = 8) -> int:
    """Least number of roots summing to lam."""
    if not in_root_lattice(rs, lam):
        raise ValueError("weight is not in the root lattice")
    if lam == _zero(rs):
        return 0
    dom, _ = dominant_representative(rs, lam)
    if is_small(rs, dom):
        for k, level in enumerate(_small_levels(rs)):
            if dom in level:
                return k
    exprs = _min_exprs_dominant(rs, dom, bound)
    return len(exprs[0])


def minimal_expressions(rs: RootSystem, lam: Vec, bound: int = 4):
    """All minimal expressions of lam as tuples of roots, sorted.

    Raises ValueError when the co-length exceeds bound.
    """
    if not in_root_lattice(rs, lam):
        raise ValueError("weight is not in the root lattice")
    if lam == _zero(rs):
        return ((),)
    dom, word = dominant_representative(rs, lam)
    exprs = _min_exprs_dominant(rs, dom, bound)
    if dom == lam:
        return exprs
    rev = tuple(reversed(word))
    moved = []
    for expr in exprs:
        moved.append(tuple(sorted(apply_word(rs, rev, r) for r in expr)))
    return tuple(sorted(moved))


def _min_exprs_dominant(rs: RootSystem, lam: Vec, bound: int):
    key = ("min_exprs", lam)
    cached = rs._cache.get(key)
    if cached is not None:
        if len(cached[0]) > bound:
            raise ValueError(f"co-length exceeds bound {bound}")
        return cached
    # candidates: any root of a minimal expression pairs >= 2 with lam and
    # >= 0 with every other member, so restrict and prune accordingly
    cands = [b for b in rs.positive_roots if pairing_raw(lam, b) >= 2]
    cands.sort(key=lambda b: (-rs.root_height[b], b))
    heights = [rs.root_height[b] for b in cands]
    target_ht = sum(_root_coeff_heights(rs, lam))
    found = []

    def dfs(idx: int, remaining: Vec, rem_ht: int, count: int, chosen: list):
        if count == 0:
            if rem_ht == 0 and not any(remaining):
                found.append(tuple(sorted(chosen)))
            return
        if rem_ht < count:
            return
        for i in range(idx, len(cands)):
            b = cands[i]
            h = heights[i]
            if rem_ht > count * h:
                break
            if any(dot2(b, c) < 0 for c in chosen):
                continue
            if count == 1:
                if remaining == b:
                    found.append(tuple(sorted(chosen + [b])))
                continue
            dfs(i, sub(remaining, b), rem_ht - h, count - 1, chosen + [b])

    n = 1
    while n <= max(bound, 1):
        dfs(0, lam, target_ht, n, [])
        if found:
            exprs = tuple(sorted(set(found)))
            rs._cache[key] = exprs
            return exprs
        n += 1
    raise ValueError(f"co-length exceeds bound {bound}")


def _root_coeff_heights(rs: RootSystem, lam: Vec):
    from .rootsys import root_coefficients

    coeffs = root_coefficients(rs, lam)
    if coeffs is None or any(c.denominator != 1 for c in coeffs):
        raise ValueError("weight is not in the root lattice")
    return [int(c) for c in coeffs]


def _blocks_of(rs: RootSystem, expr) -> tuple[tuple[Vec, ...], ...]:
    """Partition an expression by transitive non-orthogonality."""
    n = len(expr)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if dot2(expr[i], expr[j]) != 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(expr[i])
    blocks = []
    for members in groups.values():
        members.sort(key=lambda r: (-rs.root_height[r], r))
        blocks.append(tuple(members))
    blocks.sort(key=lambda b: (sum(rs.root_height[r] for r in b), b))
    return tuple(blocks)


def _block_height(rs: RootSystem, block) -> int:
    return sum(rs.root_height[r] for r in block)


def canonical_block_decomposition(rs: RootSystem, lam: Vec):
    """Canonical blocks of a dominant small weight, top block first.

    The returned tuple lists blocks in cascade order: the last entry is
    the block peeled first (least height).  Each block is a tuple of
    roots in decreasing height.
    """
    if not in_root_lattice(rs, lam):
        raise ValueError("weight is not in the root lattice")
    if not is_dominant(rs, lam):
        raise ValueError("weight is not dominant")
    if not is_small(rs, lam):
        raise ValueError("weight is not small")
    key = ("cbd", lam)
    cached = rs._cache.get(key)
    if cached is not None:
        return cached
    if lam == _zero(rs):
        return ()
    ell = colength(rs, lam)
    exprs = _min_exprs_dominant(rs, lam, ell)
    blocks = set()
    for expr in exprs:
        blocks.update(_blocks_of(rs, expr))
    low = min(blocks, key=lambda b: (_block_height(rs, b), b))
    rest = sub(lam, _sum_vecs(rs, low))
    if not is_dominant(rs, rest):
        raise ValueError("canonical peeling left a non-dominant remainder")
    result = canonical_block_decomposition(rs, rest) + (low,)
    rs._cache[key] = result
    return result


def _sum_vecs(rs: RootSystem, vecs) -> Vec:
    total = _zero(rs)
    for v in vecs:
        total = add(total, v)
    return total


def canonical_expression(rs: RootSystem, lam: Vec):
    """The minimal expression inducing the canonical block decomposition."""
    blocks = canonical_block_decomposition(rs, lam)
    roots = [r for b in blocks for r in b]
    return tuple(sorted(roots, key=lambda r: (-rs.root_height[r], r)))


@dataclass(frozen=True)
class Symbol:
    """Block sizes of the canonical decomposition, with length marks.

    entries holds strings like "1", "2", "1l", "1s"; seps holds the
    separator before each entry after the first ("," normally, "|" for
    the split pair of a doubled-coordinate weight in type D).
    """

    entries: tuple[str, ...]
    seps: tuple[str, ...] = ()

    @property
    def text(self) -> str:
        out = []
        for i, e in enumerate(self.entries):
            if i:
                out.append(self.seps[i - 1])
            out.append(e)
        return "".join(out)

    def __str__(self) -> str:
        return self.text

    @staticmethod
    def parse(text: str) -> "Symbol":
        text = text.strip()
        if not text:
            return Symbol((), ())
        entries = []
        seps = []
        token = ""
        for ch in text:
            if ch in ",|":
                if not token:
                    raise ValueError(f"bad symbol text {text!r}")
                entries.append(token)
                seps.append(ch)
                token = ""
            else:
                token += ch
        if not token:
            raise ValueError(f"bad symbol text {text!r}")
        entries.append(token)
        for e in entries:
            body = e[:-1] if e[-1] in "ls" else e
            if not body.isdigit() or int(body) < 1:
                raise ValueError(f"bad symbol entry {e!r}")
        return Symbol(tuple(entries), tuple(seps))


def _is_split_pair(rs: RootSystem, blocks) -> bool:
    """Type D pair of orthogonal roots whose second member spans an A1.

    Distinguishes the symbol written 1|1 (second root isolated among the
    roots orthogonal to the first) from the plain chain written 1,1.
    """
    if rs.kind != "D" or len(blocks) != 2:
        return False
    if len(blocks[0]) != 1 or len(blocks[1]) != 1:
        return False
    first, second = blocks[0][0], blocks[1][0]
    for r in rs.roots:
        if dot2(r, first) == 0 and dot2(r, second) != 0:
            if r != second and r != tuple(-c for c in second):
                return False
    return True


def symbol(rs: RootSystem, lam: Vec) -> Symbol:
    """Symbol of a dominant small weight."""
    blocks = canonical_block_decomposition(rs, lam)
    short_norm = dot2(rs.theta_short, rs.theta_short)
    entries = []
    for block in blocks:
        if len(block) > 1:
            entries.append(str(len(block)))
        elif rs.simply_laced:
            entries.append("1")
        else:
            entries.append("1s" if dot2(block[0], block[0]) == short_norm else "1l")
    seps = ["," for _ in entries[1:]]
    if _is_split_pair(rs, blocks):
        seps[0] = "|"
    return Symbol(tuple(entries), tuple(seps))


def weight_from_symbol(rs: RootSystem, sym) -> Vec:
    """A dominant small weight whose symbol matches; deterministic choice.

    When several dominant weights share the symbol (conjugate under a
    diagram automorphism), the lexicographically greatest is returned.
    Raises ValueError when no dominant small weight realizes the symbol.
    """
    from .rootsys import parabolic

    if isinstance(sym, str):
        sym = Symbol.parse(sym)
    if not sym.entries:
        return _zero(rs)
    long_norm = dot2(rs.theta_long, rs.theta_long)
    short_norm = dot2(rs.theta_short, rs.theta_short)
    results = set()

    def candidates_for(comp, entry):
        size = int(entry[:-1] if entry[-1] in "ls" else entry)
        if size >= 2:
            # multi-root blocks step the last member down by simple roots,
            # keeping every member a root and the block non-orthogonal
            theta = comp.theta_long
            if dot2(theta, theta) != long_norm:
                return
            stack = [(theta,)]
            while stack:
                block = stack.pop()
                if len(block) == size:
                    yield block
                    continue
                for a in comp.simple_roots:
                    nxt = sub(block[-1], a)
                    if nxt not in rs.roots:
                        continue
                    if any(dot2(nxt, m) <= 0 for m in block):
                        continue
                    stack.append(block + (nxt,))
        else:
            want = None
            if entry == "1l":
                want = long_norm
            elif entry == "1s":
                want = short_norm
            seen = set()
            for theta in (comp.theta_long, comp.theta_short):
                if theta in seen:
                    continue
                seen.add(theta)
                norm = dot2(theta, theta)
                if want is None:
                    if norm == long_norm == short_norm:
                        yield (theta,)
                elif norm == want:
                    yield (theta,)

    def rec(idx, constraints, total):
        if idx == len(sym.entries):
            if is_dominant(rs, total) and is_small(rs, total):
                try:
                    if symbol(rs, total) == sym:
                        results.add(total)
                except ValueError:
                    pass
            return
        if idx == 0:
            comps = [rs]
        else:
            comps = list(parabolic(rs, constraints).components)
        for comp in comps:
            for block in candidates_for(comp, sym.entries[idx]):
                rec(idx + 1, constraints + list(block), add(total, _sum_vecs(rs, block)))

    rec(0, [], _zero(rs))
    if not results:
        raise ValueError(f"symbol {sym.text!r} is not realizable")
    return max(results)
