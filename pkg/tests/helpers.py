"""Random exact matrices shared by the inertia tests."""

from fractions import Fraction

from hsos.core import GaussRational as G
from hsos.core.linalg import Echelon, sparse
from hsos.hermitian import HermitianMatrix


def random_gauss(rng, lo=-3, hi=3):
    return G(Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2, 3))), rng.choice((0, 0, rng.randint(lo, hi))))


def random_hermitian(rng, dim):
    if rng.random() < 0.3:
        # low rank: B diag B^*
        k = rng.randint(0, dim)
        B = [[random_gauss(rng) for _ in range(k)] for _ in range(dim)]
        d = [rng.choice((-2, -1, 1, 2)) for _ in range(k)]
        return HermitianMatrix(tuple(tuple(sum((B[i][l] * d[l] * B[j][l].conjugate() for l in range(k)), G(0))
                                           for j in range(dim)) for i in range(dim)))
    M = [[G(0)] * dim for _ in range(dim)]
    for i in range(dim):
        M[i][i] = G(rng.randint(-3, 3)) if rng.random() < 0.7 else G(0)
        for j in range(i + 1, dim):
            c = random_gauss(rng) if rng.random() < 0.6 else G(0)
            M[i][j], M[j][i] = c, c.conjugate()
    return HermitianMatrix(tuple(map(tuple, M)))


def random_invertible(rng, dim):
    while True:
        S = [[random_gauss(rng, -2, 2) for _ in range(dim)] for _ in range(dim)]
        cols = [sparse([S[i][j] for i in range(dim)]) for j in range(dim)]
        if Echelon(cols).rank == dim:
            return S
