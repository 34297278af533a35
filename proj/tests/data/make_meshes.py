"""Regenerates the mesh fixtures in tests/data/meshes.

Values are written as exact decimals; the C++ side parses them as rationals.
"""
import math
import pathlib

OUT = pathlib.Path(__file__).parent / "meshes"


def write(name, verts, tris, vals):
    OUT.mkdir(exist_ok=True)
    lines = ["OFF", f"{len(verts)} {len(tris)} 0"]
    lines += [" ".join(f"{c:.6f}" for c in v) for v in verts]
    lines += ["3 " + " ".join(str(i) for i in t) for t in tris]
    (OUT / f"{name}.off").write_text("\n".join(lines) + "\n")
    if vals is not None:
        (OUT / f"{name}.vals").write_text("\n".join(str(v) for v in vals) + "\n")


def tetrahedron():
    verts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
    tris = [(0, 2, 1), (0, 1, 3), (0, 3, 2), (1, 2, 3)]
    write("tetrahedron", verts, tris, ["0", "1", "2", "3"])


def octahedron():
    verts = [(0, 0, 1), (0, 0, -1), (1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0)]
    tris = []
    for i in range(4):
        a, b = 2 + i, 2 + (i + 1) % 4
        tris.append((0, a, b))
        tris.append((1, b, a))
    write("octahedron", verts, tris, ["1", "-1", "0.1", "0.2", "0.3", "0.4"])


def torus(n=8, m=6, big=3.0, small=1.0):
    # Grid torus, height along a slightly tilted direction.
    verts, vals = [], []
    for i in range(n):
        for j in range(m):
            u = 2 * math.pi * i / n + 0.05
            v = 2 * math.pi * j / m + 0.03
            x = (big + small * math.cos(v)) * math.cos(u)
            y = (big + small * math.cos(v)) * math.sin(u)
            z = small * math.sin(v)
            verts.append((x, y, z))
            vals.append(f"{x + 0.01 * y + 0.001 * z:.6f}")
    tris = []
    for i in range(n):
        for j in range(m):
            a = i * m + j
            b = ((i + 1) % n) * m + j
            c = ((i + 1) % n) * m + (j + 1) % m
            d = i * m + (j + 1) % m
            tris += [(a, b, c), (a, c, d)]
    write("torus", verts, tris, vals)


def two_bump(name, second_peak):
    # Center saddle, four ring vertices (two peaks, two valleys), boundary ring of 8.
    verts = [(0, 0, 0)]
    verts += [(math.cos(k * math.pi / 2), math.sin(k * math.pi / 2), 0) for k in range(4)]
    verts += [(2 * math.cos(k * math.pi / 4), 2 * math.sin(k * math.pi / 4), 0) for k in range(8)]
    ring = lambda i: 1 + i % 4
    bnd = lambda i: 5 + i % 8
    tris = [(0, ring(i), ring(i + 1)) for i in range(4)]
    for i in range(4):
        tris += [
            (ring(i), bnd(2 * i), bnd(2 * i + 1)),
            (ring(i), bnd(2 * i + 1), ring(i + 1)),
            (ring(i + 1), bnd(2 * i + 1), bnd(2 * i + 2)),
        ]
    vals = ["1", "2", "0.5", second_peak, "0.6"] + ["0"] * 8
    write(name, verts, tris, vals)


def monkey_saddle():
    verts = [(0, 0, 0)]
    verts += [(math.cos(k * math.pi / 3), math.sin(k * math.pi / 3), 0) for k in range(6)]
    verts += [(2 * math.cos(k * math.pi / 3), 2 * math.sin(k * math.pi / 3), 0) for k in range(6)]
    ring = lambda i: 1 + i % 6
    bnd = lambda i: 7 + i % 6
    tris = [(0, ring(i), ring(i + 1)) for i in range(6)]
    for i in range(6):
        tris += [(ring(i), bnd(i), bnd(i + 1)), (ring(i), bnd(i + 1), ring(i + 1))]
    vals = ["0"] + ["1" if k % 2 == 0 else "-1" for k in range(6)] + ["-10"] * 6
    write("monkey_saddle", verts, tris, vals)


def annulus():
    k = 6
    verts = [(math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k), 0) for i in range(k)]
    verts += [(2 * math.cos(2 * math.pi * i / k), 2 * math.sin(2 * math.pi * i / k), 0) for i in range(k)]
    tris = []
    for i in range(k):
        a, b = i, (i + 1) % k
        tris += [(a, k + a, k + b), (a, k + b, b)]
    write("annulus", verts, tris, ["0"] * k + ["1"] * k)


def broken():
    # Three triangles on one edge.
    write("nonmanifold_edge", [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1)],
          [(0, 1, 2), (1, 0, 3), (0, 1, 4)], None)
    # Two triangles touching at one vertex.
    write("bowtie", [(0, 0, 0), (1, 0, 0), (1, 1, 0), (-1, 0, 0), (-1, -1, 0)],
          [(0, 1, 2), (0, 3, 4)], None)
    write("two_pieces", [(0, 0, 0), (1, 0, 0), (0, 1, 0), (5, 0, 0), (6, 0, 0), (5, 1, 0)],
          [(0, 1, 2), (3, 4, 5)], None)
    # Strip of 5 quads with a half twist.
    top = list(range(5))
    bot = list(range(5, 10))
    verts = [(i, 1, 0) for i in range(5)] + [(i, 0, 0) for i in range(5)]
    tris = []
    for i in range(5):
        a, b = top[i], bot[i]
        if i < 4:
            c, d = top[i + 1], bot[i + 1]
        else:
            c, d = bot[0], top[0]
        tris += [(a, b, c), (b, d, c)]
    write("mobius", verts, tris, None)


if __name__ == "__main__":
    tetrahedron()
    octahedron()
    torus()
    two_bump("two_bump_generic", "3")
    two_bump("two_bump_symmetric", "2")
    monkey_saddle()
    annulus()
    broken()
