import random
from fractions import Fraction

from diskident.geometry import Point
from diskident.fixedline import LineInstance


def rand_points(n, seed, span=30):
    """n distinct seeded lattice points (no degeneracy filtering)."""
    rng = random.Random(seed)
    pts = []
    while len(pts) < n:
        p = Point(Fraction(rng.randrange(-span, span + 1)),
                  Fraction(rng.randrange(-span, span + 1)))
        if p not in pts:
            pts.append(p)
    return pts


def rand_collinear(n, seed):
    """n distinct seeded points on a random line."""
    rng = random.Random(seed)
    a, b = Fraction(rng.randrange(-3, 4)), Fraction(rng.randrange(1, 5))
    xs = rng.sample(range(-50, 51), n)
    return [Point(Fraction(x), a + b * Fraction(x, 2)) for x in xs]


def rand_line_instance(n, seed):
    """Seeded LineInstance with varied gaps around the radius scale."""
    rng = random.Random(seed)
    xs = []
    x = Fraction(rng.randrange(0, 5))
    for _ in range(n):
        xs.append(x)
        x += Fraction(rng.randrange(1, 40), 4)
    r2 = Fraction(rng.randrange(4, 120), rng.randrange(1, 4))
    return LineInstance(tuple(xs), r2)
