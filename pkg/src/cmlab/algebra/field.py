"""Prime field helpers. Elements are plain ints in ``range(p)``."""

DEFAULT_CHAR = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def inverse(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod %d" % p)
    return pow(a, -1, p)


def symmetric(a: int, p: int) -> int:
    """Representative of ``a`` in ``(-p/2, p/2]``, used for display only."""
    a %= p
    return a - p if a > p // 2 else a
