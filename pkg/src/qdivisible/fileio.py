"""Interchange format for subspace sets.

A set is a JSON document:

    {
      "format": "subspace-set",
      "q": 4, "v": 4, "k": 2,
      "subspaces": [[row, ...k rows...], ...]
    }

with one k x v generator matrix per member.  Over a prime field the
entries are plain ints 0..q-1; over GF(p^e) each entry is a string of e
base-p digits, most significant first ("10" is x in GF(4)).  Dumps are
canonical (members in order, matrices in reduced echelon form), so
dump(load(path)) reproduces files this module wrote byte for byte.
Hand-written files with non-echelon generators load to the same set; the
matrices are canonicalized on the way in.
"""

from __future__ import annotations

import json

from .algebra import GFMatrix, field_context, scalar_digits, scalar_from_digits
from .subspaces import SubspaceSet, canonicalize

FORMAT_TAG = "subspace-set"


def _encode_entry(ctx, a: int):
    if ctx.e == 1:
        return a
    return "".join(str(d) for d in reversed(scalar_digits(ctx, a)))


def _decode_entry(ctx, item) -> int:
    if ctx.e == 1:
        if not isinstance(item, int) or isinstance(item, bool) or not 0 <= item < ctx.q:
            raise ValueError(f"expected an int in [0, {ctx.q}), got {item!r}")
        return item
    if not isinstance(item, str) or len(item) != ctx.e:
        raise ValueError(f"expected a {ctx.e}-digit string, got {item!r}")
    try:
        digits = [int(ch) for ch in item]
    except ValueError:
        raise ValueError(f"non-digit in entry {item!r}") from None
    return scalar_from_digits(ctx, tuple(reversed(digits)))


def to_jsonable(s: SubspaceSet) -> dict:
    ctx = s.ctx
    if ctx.e > 1 and ctx.p > 10:
        raise ValueError(f"digit encoding needs p <= 10, GF({ctx.q}) has p = {ctx.p}")
    return {
        "format": FORMAT_TAG,
        "q": ctx.q,
        "v": s.v,
        "k": s.k,
        "subspaces": [
            [[_encode_entry(ctx, x) for x in row] for row in m.gen.rows]
            for m in s.members
        ],
    }


def from_jsonable(doc) -> SubspaceSet:
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_TAG:
        raise ValueError(f"not a {FORMAT_TAG} document")
    try:
        q, v, k = int(doc["q"]), int(doc["v"]), int(doc["k"])
        raw = doc["subspaces"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed document: {exc}") from None
    ctx = field_context(q)
    if ctx.e > 1 and ctx.p > 10:
        raise ValueError(f"digit encoding needs p <= 10, GF({q}) has p = {ctx.p}")
    if not isinstance(raw, list) or not raw:
        raise ValueError("subspaces must be a nonempty list")
    members = []
    for mi, mat in enumerate(raw):
        if not isinstance(mat, list) or len(mat) != k:
            raise ValueError(f"member {mi}: expected {k} generator rows")
        rows = []
        for row in mat:
            if not isinstance(row, list) or len(row) != v:
                raise ValueError(f"member {mi}: expected rows of length {v}")
            rows.append(tuple(_decode_entry(ctx, x) for x in row))
        members.append(canonicalize(GFMatrix(ctx, tuple(rows))))
    return SubspaceSet(ctx, v, k, tuple(members))


def dumps(s: SubspaceSet) -> str:
    return json.dumps(to_jsonable(s), indent=1) + "\n"


def loads(text: str) -> SubspaceSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    return from_jsonable(doc)


def dump(s: SubspaceSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(dumps(s))


def load(path) -> SubspaceSet:
    with open(path, encoding="utf-8") as fp:
        return loads(fp.read())
