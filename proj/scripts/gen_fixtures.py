#!/usr/bin/env python3
# Copyright 2026 The galmon Authors
# SPDX-License-Identifier: Apache-2.0
"""Writes the JSON fixtures under fixtures/ from plain Python definitions."""

import itertools
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def monoid(elements, mul, unit="e"):
    return {
        "elements": elements,
        "unit": unit,
        "table": {a: {b: mul(a, b) for b in elements} for a in elements},
    }


def cyclic(n):
    names = ["e", "g"] + [f"g{k}" for k in range(2, n)]
    names = names[:n]
    idx = {s: k for k, s in enumerate(names)}
    return monoid(names, lambda a, b: names[(idx[a] + idx[b]) % n])


S3_PERMS = {
    "e": (1, 2, 3), "(12)": (2, 1, 3), "(13)": (3, 2, 1),
    "(23)": (1, 3, 2), "(123)": (2, 3, 1), "(132)": (3, 1, 2),
}
S3_NAMES = {p: s for s, p in S3_PERMS.items()}


def s3_mul(a, b):
    sa, sb = S3_PERMS[a], S3_PERMS[b]
    return S3_NAMES[tuple(sa[sb[i] - 1] for i in range(3))]


def label(items):
    return "{" + ",".join(sorted(items)) + "}"


def s3_subgroups():
    names = list(S3_PERMS)
    for r in range(1, 7):
        for combo in itertools.combinations(names, r):
            if "e" in combo and all(s3_mul(a, b) in combo for a in combo for b in combo):
                yield combo


def s3_invariants(h):
    """Inv of the subgroup h on every coset object G/K (free object: empty)."""
    out = {"F(1)": []}
    for k in s3_subgroups():
        cosets = {label(s3_mul(g, x) for x in k) for g in S3_PERMS}
        fixed = []
        for c in sorted(cosets):
            members = c[1:-1].split(",")
            if all(label(s3_mul(a, m) for m in members) == c for a in h):
                fixed.append(c)
        out["G/" + label(k)] = fixed
    return out


def write(rel, doc):
    path = ROOT / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


def main():
    write("monoids/trivial.json", monoid(["e"], lambda a, b: "e"))
    write("monoids/z2.json", monoid(["e", "s"], lambda a, b: "e" if a == b else "s"))
    for n in (3, 4, 5, 6):
        write(f"monoids/z{n}.json", cyclic(n))
    write("monoids/s3.json", monoid(list(S3_PERMS), s3_mul))
    write("monoids/e2.json", monoid(["e", "z"], lambda a, b: "z" if "z" in (a, b) else "e"))
    write("monoids/left_zero.json", monoid(["e", "a", "b"], lambda a, b: b if a == "e" else a))

    bad = monoid(["e", "s"], lambda a, b: "e" if a == b else "s")
    del bad["table"]["s"]["s"]
    write("monoids/invalid_missing_cell.json", bad)
    write("monoids/invalid_assoc.json",
          monoid(["e", "a", "b"], lambda x, y: y if x == "e" else (x if y == "e" else ("b" if (x, y) == ("a", "a") else "a"))))

    write("actions/s3_natural.json", {
        "name": "S3 on {1,2,3}",
        "set": ["1", "2", "3"],
        "act": {g: {str(i): str(S3_PERMS[g][i - 1]) for i in (1, 2, 3)} for g in S3_PERMS},
    })
    write("actions/z2_swap.json", {
        "name": "swap",
        "set": ["0", "1"],
        "act": {"e": {"0": "0", "1": "1"}, "s": {"0": "1", "1": "0"}},
    })
    write("actions/e2_collapse.json", {
        "name": "collapse",
        "set": ["0", "1"],
        "act": {"e": {"0": "0", "1": "1"}, "z": {"0": "0", "1": "0"}},
    })
    # A Z2 action over the subgroup {e,(12)} of S3, for coinduction.
    write("actions/s3_sub12_sign.json", {
        "name": "sign",
        "set": ["+", "-"],
        "act": {"e": {"+": "+", "-": "-"}, "(12)": {"+": "-", "-": "+"}},
    })

    write("homs/s3_sub12.json", {"submonoid": ["(12)", "e"]})
    write("homs/s3_sub123.json", {"submonoid": ["(123)", "(132)", "e"]})
    write("homs/z2_into_s3.json", {
        "source": monoid(["e", "s"], lambda a, b: "e" if a == b else "s"),
        "map": {"e": "e", "s": "(12)"},
    })

    write("subfunctors/s3_empty.json", {"subsets": {}})
    write("subfunctors/s3_inv_12.json", {"subsets": s3_invariants(["e", "(12)"])})
    # Custom site directory: natural action plus the trivial one-point action.
    write("sites/s3_natural/a_natural.json", json.load(open(ROOT / "actions/s3_natural.json")))
    write("sites/s3_natural/b_point.json", {
        "name": "point", "set": ["*"], "act": {g: {"*": "*"} for g in S3_PERMS}})


if __name__ == "__main__":
    main()
