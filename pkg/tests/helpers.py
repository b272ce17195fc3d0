"""Shared oracles for the test suite, kept independent of the package."""

from __future__ import annotations

from math import factorial


def totient(n: int) -> int:
    count = 0
    for a in range(1, n + 1):
        x, y = a, n
        while y:
            x, y = y, x % y
        if x == 1:
            count += 1
    return count


def hook_length_rectangle(rows: int, cols: int) -> int:
    """Standard Young tableaux of the rows x cols rectangle."""
    n = rows * cols
    product = 1
    for i in range(rows):
        for j in range(cols):
            product *= (cols - j) + (rows - i) - 1
    return factorial(n) // product
