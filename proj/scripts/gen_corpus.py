#!/usr/bin/env python3
"""Regenerates the bundled group/action corpus under corpus/.

Group tables are written fully expanded so the C++ side can re-verify every
axiom by exhaustive scan. Element orderings are fixed here and frozen by the
golden tests; do not reorder.
"""
import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "corpus")


def compose(p, q):
    # (p*q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(p)))


def table_from_perms(perms):
    index = {p: i for i, p in enumerate(perms)}
    return [[index[compose(a, b)] for b in perms] for a in perms]


def cyclic(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def product_table(ta, tb):
    na, nb = len(ta), len(tb)
    n = na * nb
    t = [[0] * n for _ in range(n)]
    for a1 in range(na):
        for b1 in range(nb):
            for a2 in range(na):
                for b2 in range(nb):
                    t[a1 * nb + b1][a2 * nb + b2] = ta[a1][a2] * nb + tb[b1][b2]
    return t


def s3_perms():
    e = (0, 1, 2)
    return [e, (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    # id, (01), (02), (12), (012), (021)


def d4_perms():
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)  # reflection fixing vertex 0
    e = (0, 1, 2, 3)
    r2 = compose(r, r)
    r3 = compose(r2, r)
    return [e, r, r2, r3, s, compose(r, s), compose(r2, s), compose(r3, s)]


def q8_table():
    # 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    def enc(sign, letter):
        return {"1": 0, "i": 2, "j": 4, "k": 6}[letter] + (0 if sign > 0 else 1)

    def dec(x):
        return (1 if x % 2 == 0 else -1, {0: "1", 2: "i", 4: "j", 6: "k"}[x - x % 2])

    base = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    t = [[0] * 8 for _ in range(8)]
    for x in range(8):
        for y in range(8):
            sx, lx = dec(x)
            sy, ly = dec(y)
            sp, lp = base[(lx, ly)]
            t[x][y] = enc(sx * sy * sp, lp)
    return t


def write(path, obj):
    full = os.path.join(OUT, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w") as f:
        json.dump(obj, f, separators=(",", ":"))
        f.write("\n")


def group_json(name, table):
    return {"name": name, "order": len(table), "mul": table}


def main():
    s3 = table_from_perms(s3_perms())
    d4 = table_from_perms(d4_perms())
    groups = {
        "trivial": [[0]],
        "c2": cyclic(2),
        "c3": cyclic(3),
        "c5": cyclic(5),
        "c6": cyclic(6),
        "s3": s3,
        "d4": d4,
        "q8": q8_table(),
        "c2xs3": product_table(cyclic(2), s3),
        "s3xs3": product_table(s3, s3),
    }
    names = {
        "trivial": "1", "c2": "C2", "c3": "C3", "c5": "C5", "c6": "C6",
        "s3": "S3", "d4": "D4", "q8": "Q8", "c2xs3": "C2xS3", "s3xs3": "S3xS3",
    }
    for key, table in groups.items():
        write(key + ".json", group_json(names[key], table))

    # D4 again in permutation-generator form (parser coverage).
    write("d4_perm.json", {"name": "D4perm", "degree": 4,
                           "generators": [[1, 2, 3, 0], [0, 3, 2, 1]]})

    # Actions. Regular/trivial actions are spelled out as explicit tables.
    def regular(table):
        return [list(row) for row in table]

    def trivial_action(order, npoints):
        return [list(range(npoints)) for _ in range(order)]

    write("actions/trivial_pt.json",
          {"group": "1", "name": "trivial", "set_size": 1,
           "act": trivial_action(1, 1)})
    write("actions/c2_conj.json", {"group": "C2", "kind": "conjugation"})
    write("actions/c2_regular.json",
          {"group": "C2", "name": "regular", "set_size": 2,
           "act": regular(groups["c2"])})
    write("actions/c2_pt.json",
          {"group": "C2", "name": "trivial", "set_size": 1,
           "act": trivial_action(2, 1)})
    write("actions/c3_conj.json", {"group": "C3", "kind": "conjugation"})
    write("actions/c3_regular.json",
          {"group": "C3", "name": "regular", "set_size": 3,
           "act": regular(groups["c3"])})
    write("actions/c5_conj.json", {"group": "C5", "kind": "conjugation"})
    write("actions/c6_conj.json", {"group": "C6", "kind": "conjugation"})
    write("actions/s3_conj.json", {"group": "S3", "kind": "conjugation"})
    write("actions/s3_pt.json",
          {"group": "S3", "name": "trivial", "set_size": 1,
           "act": trivial_action(6, 1)})
    # Natural S3 action on 3 points plus two fixed points: non-transitive and
    # not a conjugation action.
    perms = s3_perms()
    mixed = [[p[s] if s < 3 else s for s in range(5)] for p in perms]
    write("actions/s3_mixed5.json",
          {"group": "S3", "name": "natural3+2fixed", "set_size": 5,
           "act": mixed})
    write("actions/d4_conj.json", {"group": "D4", "kind": "conjugation"})
    write("actions/q8_conj.json", {"group": "Q8", "kind": "conjugation"})

    index = {
        "entries": [
            {"name": "trivial", "group": "trivial.json",
             "actions": ["actions/trivial_pt.json"]},
            {"name": "c2", "group": "c2.json",
             "actions": ["actions/c2_conj.json", "actions/c2_regular.json",
                          "actions/c2_pt.json"]},
            {"name": "c3", "group": "c3.json",
             "actions": ["actions/c3_conj.json", "actions/c3_regular.json"]},
            {"name": "c5", "group": "c5.json",
             "actions": ["actions/c5_conj.json"]},
            {"name": "c6", "group": "c6.json",
             "actions": ["actions/c6_conj.json"]},
            {"name": "s3", "group": "s3.json",
             "actions": ["actions/s3_conj.json", "actions/s3_mixed5.json",
                          "actions/s3_pt.json"]},
            {"name": "d4", "group": "d4.json",
             "actions": ["actions/d4_conj.json"]},
            {"name": "q8", "group": "q8.json",
             "actions": ["actions/q8_conj.json"]},
            {"name": "c2xs3", "group": "c2xs3.json", "actions": []},
            {"name": "s3xs3", "group": "s3xs3.json", "actions": []},
        ]
    }
    write("index.json", index)
    print("corpus written to", os.path.abspath(OUT))


if __name__ == "__main__":
    main()
