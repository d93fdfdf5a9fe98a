"""Built-in finite group multiplication tables (C2..C8, C2xC2, S3, D4, Q8)."""

import itertools


def cyclic(k):
    return [[(i + j) % k for j in range(k)] for i in range(k)]


def klein_four():
    # elements (a, b) in Z2 x Z2, index 2a + b
    def mul(i, j):
        return (((i >> 1) ^ (j >> 1)) << 1) | ((i & 1) ^ (j & 1))

    return [[mul(i, j) for j in range(4)] for i in range(4)]


def symmetric3():
    elems = list(itertools.permutations(range(3)))
    index = {e: i for i, e in enumerate(elems)}

    def compose(s, t):  # (s*t)(x) = s(t(x))
        return tuple(s[t[x]] for x in range(3))

    return [[index[compose(elems[i], elems[j])] for j in range(6)] for i in range(6)]


def dihedral4():
    # r^a s^b with a mod 4, b mod 2; index a + 4b; s r = r^{-1} s
    def mul(i, j):
        a1, b1 = i % 4, i // 4
        a2, b2 = j % 4, j // 4
        a = (a1 + (a2 if b1 == 0 else -a2)) % 4
        return a + 4 * ((b1 + b2) % 2)

    return [[mul(i, j) for j in range(8)] for i in range(8)]


def quaternion8():
    # 1, -1, i, -i, j, -j, k, -k
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {
        ("1", "1"): "1",
        ("1", "i"): "i",
        ("1", "j"): "j",
        ("1", "k"): "k",
        ("i", "1"): "i",
        ("j", "1"): "j",
        ("k", "1"): "k",
        ("i", "i"): "-1",
        ("j", "j"): "-1",
        ("k", "k"): "-1",
        ("i", "j"): "k",
        ("j", "i"): "-k",
        ("j", "k"): "i",
        ("k", "j"): "-i",
        ("k", "i"): "j",
        ("i", "k"): "-j",
    }

    def mul(x, y):
        sx, ux = (-1 if x.startswith("-") else 1), x.lstrip("-")
        sy, uy = (-1 if y.startswith("-") else 1), y.lstrip("-")
        prod = base[(ux, uy)]
        sp = -1 if prod.startswith("-") else 1
        up = prod.lstrip("-")
        sign = sx * sy * sp
        return up if sign == 1 else "-" + up

    index = {n: i for i, n in enumerate(names)}
    return [[index[mul(names[i], names[j])] for j in range(8)] for i in range(8)]


GROUP_TABLES = {
    "C2": lambda: cyclic(2),
    "C3": lambda: cyclic(3),
    "C4": lambda: cyclic(4),
    "C5": lambda: cyclic(5),
    "C6": lambda: cyclic(6),
    "C7": lambda: cyclic(7),
    "C8": lambda: cyclic(8),
    "C2xC2": klein_four,
    "S3": symmetric3,
    "D4": dihedral4,
    "Q8": quaternion8,
}


def group_table(name: str):
    if name not in GROUP_TABLES:
        raise KeyError(f"unknown group {name!r}; known: {sorted(GROUP_TABLES)}")
    return GROUP_TABLES[name]()
