"""Payloads, events, conflict relations, and spec plumbing."""

import pytest

from salcheck.model import (
    Inc, Dec, Add, Rem, Enable, Disable, Write, Insert, Delete, MapSet,
    Event, event_label, rc_empty, RcOrder, conflicting, rc_order,
    is_crdt, check_payload, SpecMismatchError,
)
from salcheck.catalog import (
    or_set_mrdt, ew_flag_buggy, ctr_inc_mrdt, ctr_inc_crdt, rga_mrdt,
)


def test_payload_labels():
    assert Inc().label() == "inc"
    assert Dec().label() == "dec"
    assert Add(3).label() == "add(3)"
    assert Rem(1).label() == "rem(1)"
    assert Enable().label() == "enable"
    assert Disable().label() == "disable"
    assert Write(2).label() == "write(2)"
    assert Insert(3).label() == "ins(3)"
    assert Delete(3).label() == "del(3)"
    assert MapSet(1, Add(2)).label() == "set(1, add(2))"


def test_payloads_hashable_and_comparable():
    assert Add(3) == Add(3)
    assert Add(3) != Add(2)
    assert Add(3) != Rem(3)
    assert len({Inc(), Inc(), Dec()}) == 2
    assert len({MapSet(1, Add(2)), MapSet(1, Add(2))}) == 1


def test_event_label_includes_time_and_replica():
    assert event_label(Event(1, 0, Inc())) == "inc(t=1,r=0)"
    assert event_label(Event(4, 1, Add(3))) == "add(3,t=4,r=1)"


def test_events_are_per_occurrence():
    assert Event(1, 0, Inc()) != Event(2, 0, Inc())
    assert len({Event(1, 0, Inc()), Event(1, 0, Inc())}) == 1


def test_rc_empty_relates_nothing():
    assert not rc_empty(Add(1), Rem(1))
    assert not conflicting(rc_empty, Enable(), Disable())


def test_orset_conflicts_same_element_only():
    rc = or_set_mrdt.rc
    assert rc(Rem(1), Add(1))
    assert not rc(Add(1), Rem(1))  # directional: remove is ordered first
    assert not rc(Rem(1), Add(2))
    assert conflicting(rc, Add(1), Rem(1))  # either direction counts
    assert conflicting(rc, Rem(1), Add(1))
    assert not conflicting(rc, Add(1), Add(1))


def test_rc_order_directions():
    rc = or_set_mrdt.rc
    assert rc_order(rc, Rem(1), Add(1)) is RcOrder.FIRST
    assert rc_order(rc, Add(1), Rem(1)) is RcOrder.SECOND
    assert rc_order(rc, Add(1), Add(2)) is RcOrder.UNORDERED


def test_rc_order_rejects_symmetric_relation():
    both_ways = lambda a, b: True
    with pytest.raises(ValueError):
        rc_order(both_ways, Add(1), Rem(1))


def test_flag_rc_disable_before_enable():
    rc = ew_flag_buggy.rc
    assert rc(Disable(), Enable())
    assert not rc(Enable(), Disable())


def test_rga_rc_delete_before_insert():
    rc = rga_mrdt.rc
    assert rc(Delete(3), Insert(3))
    assert not rc(Delete(3), Insert(1))


def test_is_crdt_discriminates():
    assert not is_crdt(ctr_inc_mrdt)
    assert is_crdt(ctr_inc_crdt)


def test_check_payload_accepts_declared_types():
    check_payload(or_set_mrdt, Event(1, 0, Add(1)))
    check_payload(or_set_mrdt, Event(2, 1, Rem(3)))


def test_check_payload_rejects_foreign_types():
    with pytest.raises(SpecMismatchError):
        check_payload(or_set_mrdt, Event(1, 0, Inc()))
    with pytest.raises(SpecMismatchError):
        check_payload(ctr_inc_mrdt, Event(1, 0, Dec()))
