"""Character table of GL(2, F_3) by Burnside's class-matrix method.

Enumerates the 48 invertible 2x2 matrices over F_3, computes conjugacy
classes and class multiplication coefficients, and reads the characters off
the common eigenvectors of the class matrices. Writes the cayley-theta JSON
character-table format (float entries) to the path given on the command line.
"""

import itertools
import json
import sys

import numpy as np

Q = 3


def mul(a, b):
    return (
        (a[0] * b[0] + a[1] * b[2]) % Q,
        (a[0] * b[1] + a[1] * b[3]) % Q,
        (a[2] * b[0] + a[3] * b[2]) % Q,
        (a[2] * b[1] + a[3] * b[3]) % Q,
    )


def det(a):
    return (a[0] * a[3] - a[1] * a[2]) % Q


def main(out):
    elements = [m for m in itertools.product(range(Q), repeat=4) if det(m) != 0]
    index = {m: i for i, m in enumerate(elements)}
    n = len(elements)
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    identity = index[(1, 0, 0, 1)]
    inverse = [row.index(identity) for row in table]

    class_of = [-1] * n
    classes = []
    for start in sorted(range(n), key=lambda x: x != identity):
        if class_of[start] >= 0:
            continue
        members = sorted({table[table[g][start]][inverse[g]] for g in range(n)})
        for m in members:
            class_of[m] = len(classes)
        classes.append(members)
    k = len(classes)
    sizes = [len(c) for c in classes]

    # M[j][i, l] = #{(x, y) : x in C_i, y in C_j, x y = fixed z in C_l}
    mats = []
    for j in range(k):
        m = np.zeros((k, k))
        for l in range(k):
            z = classes[l][0]
            for x in classes[j]:
                y = table[inverse[x]][z]
                m[class_of[y], l] += 1
        mats.append(m)

    rng = np.random.default_rng(0)
    combo = sum(rng.standard_normal() * m for m in mats)
    _, vecs = np.linalg.eig(combo)
    rows = []
    for v in vecs.T:
        # omega(C_j) = |C_j| chi(C_j) / d, normalized so omega(identity) = 1
        omega = v / v[0]
        norm = sum(abs(omega[j]) ** 2 / sizes[j] for j in range(k))
        d = np.sqrt(n / norm).real
        chi = [d * omega[j] / sizes[j] for j in range(k)]
        rows.append((round(d), chi))
    rows.sort(key=lambda r: (r[0], -r[1][1].real, r[1][-1].imag))

    entries = [[[float(z.real) if abs(z.real) > 1e-12 else 0.0,
                 float(z.imag) if abs(z.imag) > 1e-12 else 0.0] for z in chi] for _, chi in rows]
    degrees = [d for d, _ in rows]
    assert sum(d * d for d in degrees) == n
    data = {
        "group_order": n,
        "class_sizes": sizes,
        "class_labels": [f"C{i}" for i in range(k)],
        "degrees": degrees,
        "exact": False,
        "irrep_labels": [f"X{i + 1}" for i in range(k)],
        "entries": entries,
    }
    with open(out, "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    main(sys.argv[1])
