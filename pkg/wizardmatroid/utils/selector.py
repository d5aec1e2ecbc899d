# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from __future__ import annotations
import re
from typing import List, Sequence, Set, Tuple, Union

from wizardmatroid.utils.errors.errors import IndexOutOfRangeError, InvalidInputError

_rng = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")
_int = re.compile(r"^\s*[+-]?\d+\s*$")

Selector = Union[int, str, Sequence[Union[int, str]], None]


def _items(sel: Selector) -> List[Union[int, str]]:
    if isinstance(sel, (int, str)):
        return [sel]
    return list(sel)


def normalize_subset_selector(sel: Selector, n: int, index_base: int = 1) -> List[int]:
    """
    Ground-set subset from ``"1,3,5-7"``-style text, integers or a mix of both.

    Returns sorted 0-based indices; an index outside the ground set raises
    IndexOutOfRangeError. ``None`` and ``""`` select nothing.
    """
    if index_base not in (0, 1):
        raise InvalidInputError("index_base", "0 or 1", index_base)
    if sel is None:
        return []
    got: Set[int] = set()

    def add1(i: int) -> None:
        j = i - index_base
        if not 0 <= j < n:
            raise IndexOutOfRangeError(i, n)
        got.add(j)

    for item in _items(sel):
        if isinstance(item, bool):
            raise InvalidInputError("subset", "indices or ranges", item)
        if isinstance(item, int):
            add1(item)
            continue
        if not isinstance(item, str):
            raise InvalidInputError("subset", "indices or ranges", item)
        for chunk in item.split(","):
            s = chunk.strip()
            if not s:
                continue
            if s.isdigit():
                add1(int(s))
                continue
            m = _rng.match(s)
            if not m:
                raise InvalidInputError("subset", "an index or a range like 5-7", s)
            a, b = int(m.group(1)), int(m.group(2))
            lo, hi = (a, b) if a <= b else (b, a)
            for i in range(lo, hi + 1):
                add1(i)
    return sorted(got)


def normalize_alpha_selector(sel: Selector, n: int) -> Tuple[int, ...]:
    """α-vector from ``"0,0,-1,1"`` or a list of integers; must have ``n`` entries."""
    values: List[int] = []
    for item in _items(sel if sel is not None else []):
        if isinstance(item, bool):
            raise InvalidInputError("alpha", "integers", item)
        if isinstance(item, int):
            values.append(item)
            continue
        if not isinstance(item, str):
            raise InvalidInputError("alpha", "integers", item)
        for chunk in item.split(","):
            if not chunk.strip():
                continue
            if not _int.match(chunk):
                raise InvalidInputError("alpha", "comma-separated integers", chunk.strip())
            values.append(int(chunk))
    if len(values) != n:
        raise InvalidInputError("alpha", f"{n} integers", ",".join(map(str, values)))
    return tuple(values)
