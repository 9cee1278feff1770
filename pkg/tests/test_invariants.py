import pytest

from smallweights.rootsys import build_root_system, pairing, sub, neg
from smallweights.weights import (
    small_dominant_weights,
    colength,
    minimal_expressions,
    symbol,
    weight_from_symbol,
)
from smallweights.invariants import (
    scalar_classes,
    defect_counts,
    weighted_count,
    eta_constants,
    eta_nr_value,
    cover_poset,
    orthogonal_expression_count,
    relevant_roots,
    dominant_symbol_text,
)


def _rs(name):
    return build_root_system(name[0], int(name[1:]))


# ---------------------------------------------------------------- eta table

ETA_12 = {"B3": 3, "B4": 3, "B6": 3, "C3": 3, "C4": 3, "C6": 3,
          "D4": 3, "D5": 3, "D6": 3, "E6": 4, "E7": 5, "E8": 7, "F4": 5}


@pytest.mark.parametrize("name,value", sorted(ETA_12.items()))
def test_eta_12(name, value):
    table = eta_constants(_rs(name))
    assert table.eta_1N[2] == value


DELTA = {"D4": 1, "D5": 1, "D6": 1, "E6": 2, "E7": 3, "E8": 5}


@pytest.mark.parametrize("name,value", sorted(DELTA.items()))
def test_delta(name, value):
    assert eta_constants(_rs(name)).delta == value


ETA_TILDE = {"D4": 3, "D5": 4, "D6": 5, "E6": 5, "E7": 7, "E8": 11}


@pytest.mark.parametrize("name,value", sorted(ETA_TILDE.items()))
def test_eta_tilde(name, value):
    assert eta_constants(_rs(name)).eta_tilde == value


def test_eta_d_type_11():
    for n in (4, 5, 6, 7):
        assert eta_constants(_rs(f"D{n}")).eta_11 == n - 1


def test_eta_e7_13():
    assert eta_constants(_rs("E7")).eta_1N[3] == 9


def test_eta_21():
    assert eta_constants(_rs("E6")).eta_21N[1] == 5
    assert eta_constants(_rs("E7")).eta_21N[1] == 6
    assert eta_constants(_rs("E8")).eta_21N[1] == 8
    assert eta_constants(_rs("D7")).eta_21N == {0: 2, 1: 4, 2: 6}


def test_eta_22():
    assert eta_constants(_rs("E6")).eta_22 == 8
    assert eta_constants(_rs("E7")).eta_22 is None


def test_cutoff_vector():
    assert eta_constants(_rs("E7")).cutoff_1N(3) == (9, 5, 1)


# ------------------------------------------------------- weighted counts E

def _counts_by_symbol(rs):
    out = {}
    for w in small_dominant_weights(rs):
        out.setdefault(symbol(rs, w).text, set()).add(weighted_count(rs, w))
    return {k: v.pop() if len(v) == 1 else v for k, v in out.items()}


def test_counts_b6():
    counts = _counts_by_symbol(_rs("B6"))
    assert counts["1l,1l,1l"] == 15
    assert counts["1l,1l,1s"] == 15
    assert counts["1l,1s"] == 3


def test_counts_c6():
    counts = _counts_by_symbol(_rs("C6"))
    assert counts["1s,1s,1s"] == 15
    assert counts["1l,1s,1s"] == 15


def test_counts_d6():
    counts = _counts_by_symbol(_rs("D6"))
    assert counts["1,1,1"] == 15
    assert counts["1|1"] == 5
    assert counts["2"] == 2
    assert counts["2,1"] == 12  # eta1 * eta2 * eta_{[2,1]} = 1*3*4


def test_counts_e6():
    counts = _counts_by_symbol(_rs("E6"))
    assert counts["1,1"] == 4
    assert counts["2"] == 2
    assert counts["2,1"] == 20
    assert counts["2,2"] == 160


def test_counts_e7():
    counts = _counts_by_symbol(_rs("E7"))
    assert counts["1,1"] == 5
    assert counts["1,1,1"] == 45
    assert counts["2,1"] == 30


def test_counts_e8():
    counts = _counts_by_symbol(_rs("E8"))
    assert counts["1,1"] == 7
    assert counts["2,1"] == 56


def test_count_zero_weight():
    rs = _rs("B3")
    assert weighted_count(rs, (0, 0, 0)) == 1


# ------------------------------------------------- expression-count lemma

@pytest.mark.parametrize("name", ["B4", "C4", "D5", "F4", "G2", "E6"])
def test_weighted_count_recursion(name):
    # sum over relevant roots of (pairing-1) * count(lam - root) equals
    # count(lam) * colength(lam), for every small dominant weight
    rs = _rs(name)
    for lam in small_dominant_weights(rs):
        lhs = 0
        for alpha in relevant_roots(rs, lam):
            w = pairing(rs, lam, alpha) - 1
            lhs += w * weighted_count(rs, sub(lam, alpha))
        assert lhs == weighted_count(rs, lam) * colength(rs, lam)


@pytest.mark.parametrize("name", ["B5", "C5", "D6", "E6", "E7"])
def test_orthogonal_expression_counts(name):
    # colength-two weights whose expressions are all orthogonal have
    # 3, n-1 (split pair), 4, 5, or 7 of them depending on the system
    rs = _rs(name)
    table = eta_constants(rs)
    for lam in small_dominant_weights(rs):
        if colength(rs, lam) != 2:
            continue
        total = len(minimal_expressions(rs, lam))
        ortho = orthogonal_expression_count(rs, lam)
        if ortho == total:
            expected = (table.eta_11 if symbol(rs, lam).text == "1|1"
                        else table.eta_1N[2])
            assert ortho == expected >= 3


# ------------------------------------------------------- scalar classes

def test_dominant_negative_classes_empty():
    rs = _rs("C4")
    for lam in small_dominant_weights(rs):
        sc = scalar_classes(rs, lam)
        assert not sc.a2_r_neg and not sc.a2_nr_neg and not sc.a3_neg


def test_e6_top_weight_classes():
    rs = _rs("E6")
    lam = weight_from_symbol(rs, "2,2")
    sc = scalar_classes(rs, lam)
    assert not sc.a2_r and not sc.a2_nr
    assert len(sc.a3) == 16


def test_b3_negative_a2():
    rs = _rs("B3")
    lam = (2, 2, -2)  # one flipped coordinate
    sc = scalar_classes(rs, lam)
    assert len(sc.a2_r_neg) == 1
    assert sc.a2_r_neg == {neg((0, 0, 2))}


def test_d5_two_symbol_split():
    # for the size-two-block weight the pairing-two classes are decided
    # by the symbol of lam - alpha
    rs = _rs("D5")
    lam = weight_from_symbol(rs, "2")
    sc = scalar_classes(rs, lam)
    for alpha in sc.a2_r:
        assert dominant_symbol_text(rs, sub(lam, alpha)) == "1|1"
    for alpha in sc.a2_nr:
        assert dominant_symbol_text(rs, sub(lam, alpha)) == "1,1"
    assert sc.a2_r and sc.a2_nr
    assert len(sc.a3) == 2


def test_e8_two_symbol_all_nr():
    rs = _rs("E8")
    lam = weight_from_symbol(rs, "2")
    sc = scalar_classes(rs, lam)
    assert not sc.a2_r and sc.a2_nr


def test_scalar_classes_rejects_non_small():
    rs = _rs("B3")
    with pytest.raises(ValueError):
        scalar_classes(rs, (8, 0, 0))


def test_a3_roots_are_relevant():
    rs = _rs("D5")
    for lam in small_dominant_weights(rs):
        rel = set(relevant_roots(rs, lam))
        sc = scalar_classes(rs, lam)
        assert sc.a3 <= rel


# ------------------------------------------------------- defect counts

def test_defect_dominant():
    rs = _rs("B3")
    lam = weight_from_symbol(rs, "1l,1s")
    total, plus, minus = defect_counts(rs, lam)
    assert (total, plus, minus) == (6, 6, 0)


def test_defect_negative_root():
    rs = _rs("B3")
    alpha = rs.simple_roots[0]
    total, plus, minus = defect_counts(rs, neg(alpha))
    assert minus == 1


@pytest.mark.parametrize("name", ["B4", "C4", "D5", "F4", "G2", "E6"])
def test_defect_is_eta_times_colength_for_normal(name):
    rs = _rs(name)
    table = eta_constants(rs)
    for lam in small_dominant_weights(rs):
        sym = symbol(rs, lam)
        if any(e.startswith("2") for e in sym.entries):
            continue
        n = colength(rs, lam)
        eta = table.eta_11 if sym.text == "1|1" else table.eta_1N[n]
        total, _, _ = defect_counts(rs, lam)
        assert total == eta * n


# ------------------------------------------------------------ eta_nr

def test_eta_nr_values():
    assert eta_nr_value(_rs("D6"), weight_from_symbol(_rs("D6"), "2")) == 3
    assert eta_nr_value(_rs("E6"), weight_from_symbol(_rs("E6"), "2")) == 3
    assert eta_nr_value(_rs("E7"), weight_from_symbol(_rs("E7"), "2")) == 5


# ------------------------------------------------------------- poset

def _cover_texts(rs):
    return {(hi.text, lo.text) for hi, lo in cover_poset(rs)}


def _chain(*texts):
    return {(texts[i], texts[i + 1]) for i in range(len(texts) - 1)}


def _expected_covers(name):
    rs = _rs(name)
    texts = {symbol(rs, w).text for w in small_dominant_weights(rs)}
    texts.add("")
    kind = name[0]
    covers = set()

    def add(hi, lo):
        if hi in texts and lo in texts:
            covers.add((hi, lo))

    if kind == "B":
        add("1l", "1s"); add("1s", "")
        for k in range(1, 8):
            ell = ",".join(["1l"] * k)
            add(ell + ",1s", ell)
            prev = ",".join(["1l"] * (k - 1))
            add(ell, prev + ",1s" if prev else "1s")
    elif kind == "C":
        add("1l", "1s"); add("1s", "")
        for k in range(1, 8):
            s = ",".join(["1s"] * k)
            add("1l," + s, "1l," + ",".join(["1s"] * (k - 1)) if k > 1
                else "1l")
            add("1l," + s, ",".join(["1s"] * (k + 1)))
            add(",".join(["1s"] * (k + 1)), s)
    elif kind == "D":
        add("2", "1|1"); add("1|1", "1"); add("1", "")
        for k in range(1, 8):
            two = "2," + ",".join(["1"] * k)
            prev = "2," + ",".join(["1"] * (k - 1)) if k > 1 else "2"
            add(two, prev)
        for k in range(0, 8):
            two = "2," + ",".join(["1"] * k) if k else "2"
            add(two, ",".join(["1"] * (k + 2)))
            add(",".join(["1"] * (k + 2)), ",".join(["1"] * (k + 1)))
    elif name == "E6":
        covers = _chain("2,2", "2,1", "2", "1,1", "1", "")
    elif name == "E7":
        covers = _chain("2,1", "1,1,1", "1,1", "1", "")
        covers |= {("2,1", "2"), ("2", "1,1")}
    elif name == "E8":
        covers = _chain("2,1", "2", "1,1", "1", "")
    elif kind == "F":
        covers = _chain("1l,1s", "1l", "1s", "")
    elif kind == "G":
        covers = _chain("1l", "1s", "")
    return covers


@pytest.mark.parametrize("name", ["B2", "B3", "B4", "B5", "B6",
                                  "C3", "C4", "C5", "C6",
                                  "D4", "D5", "D6", "D7",
                                  "E6", "E7", "E8", "F4", "G2"])
def test_cover_poset_matches_table(name):
    assert _cover_texts(_rs(name)) == _expected_covers(name)


def test_cover_poset_colength_graded():
    # covers never increase colength and drop it by at most one
    rs = _rs("D6")
    lengths = {"": 0}
    for w in small_dominant_weights(rs):
        lengths[symbol(rs, w).text] = colength(rs, w)
    for hi, lo in cover_poset(rs):
        assert 0 <= lengths[hi.text] - lengths[lo.text] <= 1
