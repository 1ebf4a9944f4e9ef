"""Weight data for sl_N: simple roots, fundamental weights, rho pairings.

Everything is realized in the epsilon-basis of rational vectors, with the
bilinear form normalized so that (alpha, alpha) = 2 for the simple roots.
The first fundamental weight drives the whole construction; its basis
weights lambda_1 > ... > lambda_N label the vector representation.
"""

from __future__ import annotations

from fractions import Fraction


def _vec(entries):
    return tuple(Fraction(x) for x in entries)


def pair(u, v):
    """Euclidean pairing of two weight vectors."""
    return sum(a * b for a, b in zip(u, v))


class WeightData:
    """Pairing data for sl_N and its vector representation."""

    def __init__(self, n):
        if n < 2:
            raise ValueError("rank data needs N >= 2")
        self.n = n
        avg = Fraction(1, n)
        # lambda_i = eps_i - (1/N) sum_j eps_j, traceless representatives
        self.weights = [
            _vec([(1 if j == i else 0) - avg for j in range(n)]) for i in range(n)
        ]
        self.simple_roots = [
            _vec([1 if j == i else (-1 if j == i + 1 else 0) for j in range(n)])
            for i in range(n - 1)
        ]
        # rho = half sum of positive roots; in eps coordinates the i-th
        # entry is (N+1-2(i+1))/2 up to an overall shift that pairs to
        # zero with every traceless vector
        self.rho = _vec([Fraction(n - 1 - 2 * i, 2) for i in range(n)])
        self.omega = self.weights[0]

    # -- pairings used throughout -------------------------------------
    @property
    def omega_omega(self):
        return pair(self.omega, self.omega)

    @property
    def alpha_alpha(self):
        return pair(self.simple_roots[0], self.simple_roots[0])

    @property
    def omega_2rho(self):
        return 2 * pair(self.omega, self.rho)

    def rho2_weight(self, i):
        """(2 rho, lambda_i) for the i-th basis weight (0-based)."""
        return 2 * pair(self.rho, self.weights[i])

    @property
    def casimir_pairing(self):
        """(lambda, lambda + 2 rho) for lambda the first fundamental weight."""
        return self.omega_omega + self.omega_2rho

    def root_weight(self, k, i):
        """(alpha_k, lambda_i), both 0-based."""
        return pair(self.simple_roots[k], self.weights[i])
