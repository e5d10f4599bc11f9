"""Order-maintenance list: O(1) precedes queries under inserts and deletes.

Tag-based list labelling: every element carries an integer tag in a fixed
tag space and list order equals tag order at all times.  Inserting between
two adjacent tags triggers a local relabel of the smallest power-of-two
aligned tag window that is at most half full, so insertion cost is
amortized near-constant at any realistic size.  Handles are the element
objects themselves and stay valid across relabels; deleting an element
never disturbs the others.
"""

from __future__ import annotations

from .errors import ContractViolation

TAG_BITS = 62
TAG_SPAN = 1 << TAG_BITS


class OrderedItem:
    __slots__ = ("tag", "prev", "next", "owner", "value")

    def __init__(self, tag, owner, value):
        self.tag = tag
        self.prev = None
        self.next = None
        self.owner = owner
        self.value = value

    def __repr__(self):
        return f"OrderedItem(tag={self.tag}, value={self.value!r})"


class OrderList:
    def __init__(self):
        self._first = None
        self._last = None
        self._size = 0

    def __len__(self):
        return self._size

    def __iter__(self):
        item = self._first
        while item is not None:
            yield item
            item = item.next

    def _own(self, item):
        if not isinstance(item, OrderedItem) or item.owner is not self:
            raise ContractViolation("stale or foreign order-list handle")

    def insert_first(self, value=None):
        return self.insert_after(None, value)

    def insert_after(self, anchor, value=None):
        """New element immediately after anchor (None = list front)."""
        if anchor is not None:
            self._own(anchor)
        prev_tag = -1 if anchor is None else anchor.tag
        nxt = self._first if anchor is None else anchor.next
        next_tag = TAG_SPAN if nxt is None else nxt.tag
        if next_tag - prev_tag < 2:
            self._relabel(anchor)
            prev_tag = -1 if anchor is None else anchor.tag
            nxt = self._first if anchor is None else anchor.next
            next_tag = TAG_SPAN if nxt is None else nxt.tag
        item = OrderedItem((prev_tag + next_tag) // 2, self, value)
        item.prev = anchor
        item.next = nxt
        if anchor is None:
            self._first = item
        else:
            anchor.next = item
        if nxt is None:
            self._last = item
        else:
            nxt.prev = item
        self._size += 1
        return item

    def delete(self, item):
        self._own(item)
        prev, nxt = item.prev, item.next
        if prev is None:
            self._first = nxt
        else:
            prev.next = nxt
        if nxt is None:
            self._last = prev
        else:
            nxt.prev = prev
        item.owner = None
        item.prev = item.next = None
        self._size -= 1

    def precedes(self, a, b):
        """True iff a is before b; O(1), no mutation."""
        self._own(a)
        self._own(b)
        if a is b:
            raise ContractViolation("precedes is irreflexive")
        return a.tag < b.tag

    def _relabel(self, anchor):
        """Spread a tag window around anchor so a gap opens after it.

        Doubles the aligned window until the elements inside fill at most
        half of it (counting the upcoming insert), then spaces them evenly.
        """
        base = 0 if anchor is None else anchor.tag
        level = 3
        while True:
            size = 1 << level
            if size >= TAG_SPAN:
                run = list(self)
                step = TAG_SPAN // (len(run) + 1)
                tag = step
                for item in run:
                    item.tag = tag
                    tag += step
                return
            lo = base & ~(size - 1)
            hi = lo + size
            left = anchor if anchor is not None else None
            run = []
            while left is not None and left.tag >= lo:
                run.append(left)
                left = left.prev
            run.reverse()
            right = self._first if anchor is None else anchor.next
            while right is not None and right.tag < hi:
                run.append(right)
                right = right.next
            if 2 * (len(run) + 1) <= size:
                step = size // (len(run) + 1)
                tag = lo + step
                for item in run:
                    item.tag = tag
                    tag += step
                return
            level += 1
