"""Property suites for the universe-tracking set and extensional map."""

from hypothesis import given, settings, strategies as st

from salcheck.tracked import TrackedSet, ExtensionalMap, element_str, show_set

SUITE = settings(max_examples=1000, derandomize=True)

elems = st.integers(min_value=-3, max_value=9)
elem_sets = st.frozensets(elems, max_size=6)


def ts(members: frozenset, extra_universe: frozenset = frozenset()) -> TrackedSet:
    s = TrackedSet.empty()
    for x in extra_universe:
        s = s.insert(x).remove(x)
    for x in members:
        s = s.insert(x)
    return s


# ---------------------------------------------------------------------------
# Set algebra laws.


@SUITE
@given(elem_sets, elem_sets)
def test_union_commutes(a, b):
    assert ts(a).union(ts(b)) == ts(b).union(ts(a))


@SUITE
@given(elem_sets, elem_sets, elem_sets)
def test_union_associates(a, b, c):
    sa, sb, sc = ts(a), ts(b), ts(c)
    assert sa.union(sb).union(sc) == sa.union(sb.union(sc))


@SUITE
@given(elem_sets)
def test_union_idempotent(a):
    assert ts(a).union(ts(a)) == ts(a)


@SUITE
@given(elem_sets, elem_sets)
def test_intersect_commutes(a, b):
    assert ts(a).intersect(ts(b)) == ts(b).intersect(ts(a))


@SUITE
@given(elem_sets, elem_sets, elem_sets)
def test_intersect_distributes_over_union(a, b, c):
    sa, sb, sc = ts(a), ts(b), ts(c)
    assert sa.intersect(sb.union(sc)) == sa.intersect(sb).union(sa.intersect(sc))


@SUITE
@given(elem_sets, elem_sets)
def test_diff_is_relative_complement(a, b):
    assert ts(a).diff(ts(b)).members == a - b


@SUITE
@given(elem_sets, elem_sets)
def test_diff_disjoint_from_subtrahend(a, b):
    assert ts(a).diff(ts(b)).intersect(ts(b)).members == frozenset()


@SUITE
@given(elem_sets, elem_sets)
def test_union_restores_diff(a, b):
    assert ts(a).diff(ts(b)).union(ts(a).intersect(ts(b))) == ts(a)


# ---------------------------------------------------------------------------
# Extensional equality: the universe never influences ==.


@SUITE
@given(elem_sets, elem_sets, elem_sets)
def test_equality_ignores_universe(a, u1, u2):
    assert ts(a, u1) == ts(a, u2)


@SUITE
@given(elem_sets, elem_sets, elem_sets)
def test_hash_ignores_universe(a, u1, u2):
    assert hash(ts(a, u1)) == hash(ts(a, u2))


@SUITE
@given(elem_sets, elem_sets)
def test_unequal_members_unequal_sets(a, b):
    assert (ts(a) == ts(b)) == (a == b)


# ---------------------------------------------------------------------------
# Universe monotonicity: operations never forget observed elements.


@SUITE
@given(elem_sets, elems)
def test_universe_grows_on_insert(a, x):
    s = ts(a)
    assert s.universe <= s.insert(x).universe
    assert x in s.insert(x).universe


@SUITE
@given(elem_sets, elems)
def test_universe_survives_remove(a, x):
    grown = ts(a).insert(x).remove(x)
    assert x in grown.universe
    assert x not in grown.members


@SUITE
@given(elem_sets, elem_sets)
def test_universe_merges_through_algebra(a, b):
    sa, sb = ts(a), ts(b)
    for combined in (sa.union(sb), sa.intersect(sb), sa.diff(sb)):
        assert combined.universe == sa.universe | sb.universe


@SUITE
@given(elem_sets)
def test_filter_keeps_universe(a):
    s = ts(a)
    assert s.filter(lambda x: x % 2 == 0).universe == s.universe


# ---------------------------------------------------------------------------
# Display.


def test_show_set_is_sorted_and_bracketed():
    s = ts(frozenset({3, 1, 2}))
    assert show_set(s) == "#[1, 2, 3]#"
    assert s.show() == "#[1, 2, 3]#"
    assert show_set(TrackedSet.empty()) == "#[]#"


def test_element_str_tuples_and_bools():
    assert element_str((1, 3)) == "(1, 3)"
    assert element_str((1, 0, 2)) == "(1, 0, 2)"
    assert element_str(True) == "true"
    assert element_str(False) == "false"
    assert element_str(7) == "7"


def test_show_set_of_pairs():
    s = TrackedSet.empty().insert((2, 1)).insert((1, 3))
    assert show_set(s) == "#[(1, 3), (2, 1)]#"


# ---------------------------------------------------------------------------
# ExtensionalMap.

map_entries = st.dictionaries(st.integers(min_value=0, max_value=5),
                              st.integers(min_value=-2, max_value=9), max_size=5)


def em(d: dict, default=0) -> ExtensionalMap:
    m = ExtensionalMap.empty(default)
    for k, v in d.items():
        m = m.set(k, v)
    return m


@SUITE
@given(map_entries, map_entries)
def test_map_equality_is_extensional(d1, d2):
    keys = set(d1) | set(d2)
    same = all(d1.get(k, 0) == d2.get(k, 0) for k in keys)
    assert (em(d1) == em(d2)) == same


@SUITE
@given(map_entries, st.integers(min_value=0, max_value=5), st.integers(min_value=-2, max_value=9))
def test_map_set_then_get(d, k, v):
    assert em(d).set(k, v).get(k) == v


@SUITE
@given(map_entries, st.integers(min_value=0, max_value=5))
def test_map_get_missing_returns_default(d, k):
    m = em(d, default=-99)
    if k not in d:
        assert m.get(k) == -99


@SUITE
@given(map_entries)
def test_map_default_entries_vanish(d):
    m = em(d)
    for k in d:
        m = m.set(k, 0)  # write the default back
    assert m == ExtensionalMap.empty(0)
    assert m.keys() == []


@SUITE
@given(map_entries)
def test_map_domain_tracks_nondefault_keys(d):
    m = em(d)
    live = sorted(k for k, v in d.items() if v != 0)
    assert m.keys() == live
    assert m.domain().members == frozenset(live)


def test_map_show_sorted_by_key():
    m = em({2: 5, 1: 7})
    assert m.show() == "{1: 7, 2: 5}"
    assert ExtensionalMap.empty(0).show() == "{}"
