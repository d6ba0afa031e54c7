#!/usr/bin/env python3
"""Regenerate tests/golden/std/*.dot from truth tables alone."""
import itertools
import pathlib
import sys

LINEAR = {0, 6, 10, 12}


def f(i, a, b):
    return (i >> (2 * a + b)) & 1


def image(i, j, x, y):
    return f(i, x, y), f(j, x, y)


def bijective(i, j):
    return len({image(i, j, x, y) for x, y in itertools.product((0, 1), repeat=2)}) == 4


def pairs():
    chosen = {(6, 13)}
    for i, j in itertools.product(range(16), repeat=2):
        if i > j:
            continue
        if i in LINEAR and j in LINEAR:
            chosen.add((i, j))
        if i in (1, 2, 4, 8) and j in (1, 2, 4, 8):
            chosen.add((i, j))
        if bijective(i, j):
            chosen.add((i, j))
    return sorted(chosen)


def dot(i, j):
    states = [(0, 0), (0, 1), (1, 0), (1, 1)]
    label = lambda s: f"{s[0]}{s[1]}"
    lines = [f'digraph "f_{i}_{j}" {{', "  node [shape=circle];"]
    lines += [f'  "{label(s)}";' for s in states]
    lines += [f'  "{label(s)}" -> "{label(image(i, j, *s))}";' for s in states]
    return "\n".join(lines + ["}"]) + "\n"


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for i, j in pairs():
        (out / f"f_{i}_{j}.dot").write_text(dot(i, j))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/golden/std")
