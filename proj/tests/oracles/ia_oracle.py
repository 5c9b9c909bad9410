"""Brute-force intersection arrays for small binary/ternary codes (prime q only)."""
import itertools
import sys


def span(rows, q):
    words = set()
    for coeffs in itertools.product(range(q), repeat=len(rows)):
        words.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q for j in range(len(rows[0]))))
    return words


def intersection_array(rows, q):
    n = len(rows[0])
    code = span(rows, q)
    dist = {}
    for v in itertools.product(range(q), repeat=n):
        dist[v] = min(sum(1 for a, b in zip(v, c) if (a - b) % q) for c in code)
    rho = max(dist.values())
    b, c = {}, {}
    for v, l in dist.items():
        nb = cn = 0
        for i in range(n):
            for a in range(1, q):
                u = list(v)
                u[i] = (u[i] + a) % q
                m = dist[tuple(u)]
                nb += m == l + 1
                cn += m == l - 1
        for table, val in ((b, nb), (c, cn)):
            if table.setdefault(l, val) != val:
                return None
    return [b[l] for l in range(rho)], [c[l] for l in range(1, rho + 1)]


if __name__ == "__main__":
    ham8 = [[1] * 8, [0, 0, 0, 0, 1, 1, 1, 1], [0, 0, 1, 1, 0, 0, 1, 1], [0, 1, 0, 1, 0, 1, 0, 1]]
    print("ext_ham8_2", intersection_array(ham8, 2))
    print("ham4_3", intersection_array([[1, 1, 1, 0], [0, 1, 2, 1]], 3))
    ham43x2 = [[1, 1, 1, 0, 0, 0, 0, 0], [0, 1, 2, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1, 0], [0, 0, 0, 0, 0, 1, 2, 1]]
    print("ham4_3_x2", intersection_array(ham43x2, 3))
    sys.stdout.flush()
