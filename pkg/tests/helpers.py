import os
import random

from hypothesis import seed as _hseed

SEED = int(os.environ.get("SCROLL_ULRICH_SEED", "20240917"))


def rng(salt: str = "") -> random.Random:
    # one stream per test, reproducible from the environment seed
    return random.Random(f"{SEED}:{salt}")


def seeded(fn):
    return _hseed(SEED)(fn)


def random_divisor(r: random.Random, S, spread: int = 8):
    return S.divisor(*[r.randint(-spread, spread) for _ in range(S.rank)])
